"""Executable constructions of the example semirings, each packaged as a
FiniteSemiring or a SigmaSemiring with its order and Sigma rule.

Two carriers are symbolic (infinite): the naturals with a top infinity, and
the chain 0 < 1 < 2 < ... < inf-2 < inf-1 < inf.  Both use unbounded exact
integers, so there are no fake overflow violations of associativity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import (CheckReport, FiniteSemiring, PartialOrder,
                   is_zero_sum_free)
from .cardinal import ALEPH0, CardinalFamily, SigmaSemiring, UNCOUNTABLE


class ZeroSumError(ValueError):
    """Refusal: the input semiring is not zero-sum-free."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"not zero-sum-free, witness pair {witness}")


# ---------------------------------------------------------------------------
# the naturals with infinity

@dataclass(frozen=True, order=True)
class NInfElement:
    """rank 0 = the natural number n; rank 1 = the top element infinity.
    Dataclass ordering is the numeric order with infinity on top."""

    rank: int
    n: int = 0

    def label(self) -> str:
        return "inf" if self.rank else str(self.n)

    def __repr__(self):
        return self.label()


def ninf(n: int) -> NInfElement:
    if n < 0:
        raise ValueError("negative natural")
    return NInfElement(0, n)


NINF_ZERO = ninf(0)
NINF_ONE = ninf(1)
NINF_INF = NInfElement(1)


def ninf_add(a: NInfElement, b: NInfElement) -> NInfElement:
    if a.rank or b.rank:
        return NINF_INF
    return ninf(a.n + b.n)


def ninf_mul(a: NInfElement, b: NInfElement) -> NInfElement:
    if a == NINF_ZERO or b == NINF_ZERO:
        return NINF_ZERO
    if a.rank or b.rank:
        return NINF_INF
    return ninf(a.n * b.n)


def ninf_leq(a: NInfElement, b: NInfElement) -> bool:
    return a <= b


def _ninf_parse(text: str) -> NInfElement:
    return NINF_INF if text == "inf" else ninf(int(text))


def nat_infinity() -> SigmaSemiring:
    """The d-complete semiring of naturals plus infinity; Sigma is infinity
    as soon as an infinity key or an infinite multiplicity on a nonzero key
    appears, and the exact weighted sum otherwise."""

    def sigma(f: CardinalFamily) -> NInfElement:
        total = 0
        for v, m in f.items():
            if v.rank:
                return NINF_INF
            if v.n and not m.is_finite:
                return NINF_INF
            total += v.n * m.n
        return ninf(total)

    return SigmaSemiring(
        "nat-infinity",
        zero=NINF_ZERO,
        one=NINF_ONE,
        plus=ninf_add,
        times=ninf_mul,
        sigma_fn=sigma,
        leq=ninf_leq,
        sample=lambda k: [ninf(i) for i in range(max(1, k - 1))] + [NINF_INF],
        contains=lambda v: isinstance(v, NInfElement),
        label=NInfElement.label,
        parse_label=_ninf_parse,
        multiples_unbounded=lambda v: v.rank == 0 and v.n > 0,
        fin_chain_plus=lambda b: NINF_INF if b.rank else None,
        fin_chain_sup=NINF_INF,
        dominates_all_fin=lambda v: v.rank == 1,
    )


def nat() -> SigmaSemiring:
    """The plain ordered semiring of naturals: no infinite sums.  Its
    completion is the naturals-with-infinity semiring."""
    return SigmaSemiring(
        "nat",
        zero=NINF_ZERO,
        one=NINF_ONE,
        plus=ninf_add,
        times=ninf_mul,
        sigma_fn=None,
        leq=ninf_leq,
        sample=lambda k: [ninf(i) for i in range(max(1, k))],
        contains=lambda v: isinstance(v, NInfElement) and v.rank == 0,
        label=NInfElement.label,
        parse_label=_ninf_parse,
        multiples_unbounded=lambda v: v.n > 0,
        fin_chain_plus=lambda b: None,
        fin_chain_sup=None,
        dominates_all_fin=lambda v: False,
    )


# ---------------------------------------------------------------------------
# finite table semirings

def boolean() -> FiniteSemiring:
    """Two-element semiring with disjunction and conjunction."""
    return FiniteSemiring(("0", "1"), 0, 1, ((0, 1), (1, 1)), ((0, 0), (0, 1)))


def xor_semiring() -> FiniteSemiring:
    """The two-element field: addition is exclusive or.  Not orderable."""
    return FiniteSemiring(("0", "1"), 0, 1, ((0, 1), (1, 0)), ((0, 0), (0, 1)))


def nat_desk(cap: int) -> FiniteSemiring:
    """Saturating fragment {0..cap} of the naturals (desk model)."""
    labels = tuple(str(i) for i in range(cap + 1))
    add = tuple(tuple(min(i + j, cap) for j in range(cap + 1)) for i in range(cap + 1))
    mul = tuple(tuple(min(i * j, cap) for j in range(cap + 1)) for i in range(cap + 1))
    return FiniteSemiring(labels, 0, 1, add, mul)


def _chain_order(n: int) -> PartialOrder:
    return PartialOrder(tuple(tuple(i <= j for j in range(n)) for i in range(n)))


def powerset_semiring(universe) -> SigmaSemiring:
    """All subsets of a finite universe: union, intersection, inclusion.
    Subsets are encoded as bitmask indices, so the tables are bit ops."""
    atoms = tuple(universe)
    n = 1 << len(atoms)

    def subset_label(mask: int) -> str:
        return "{" + ",".join(a for i, a in enumerate(atoms) if mask >> i & 1) + "}"

    labels = tuple(subset_label(m) for m in range(n))
    add = tuple(tuple(i | j for j in range(n)) for i in range(n))
    mul = tuple(tuple(i & j for j in range(n)) for i in range(n))
    base = FiniteSemiring(labels, 0, n - 1, add, mul)
    order = PartialOrder(tuple(tuple(i | j == j for j in range(n)) for i in range(n)))

    def sigma(f: CardinalFamily) -> int:
        mask = 0
        for v, _ in f.items():
            mask |= v
        return mask

    return SigmaSemiring.from_finite(f"powerset:{len(atoms)}", base, sigma, order)


def language_semiring(alphabet, maxlen: int) -> SigmaSemiring:
    """Languages of words of length <= maxlen: union, truncated concatenation.

    Discarding overlong products is a congruence: a product exceeds the
    bound exactly when all its extensions do, so the quotient is consistent.
    Languages are bitmasks over the shortlex word list."""
    if maxlen < 0:
        raise ValueError("maximum word length must be nonnegative")
    letters = tuple(alphabet)
    words = [()]
    for length in range(1, maxlen + 1):
        words.extend(itertools.product(range(len(letters)), repeat=length))
    w_index = {w: i for i, w in enumerate(words)}
    if len(words) > 10:
        raise ValueError("language carrier too large; shrink alphabet or maxlen")
    n = 1 << len(words)

    def lang_label(mask: int) -> str:
        parts = []
        for i, w in enumerate(words):
            if mask >> i & 1:
                parts.append("".join(letters[x] for x in w) if w else "eps")
        return "{" + ",".join(parts) + "}"

    labels = tuple(lang_label(m) for m in range(n))
    add = tuple(tuple(i | j for j in range(n)) for i in range(n))

    concat = [[0] * len(words) for _ in range(len(words))]
    for i, u in enumerate(words):
        for j, v in enumerate(words):
            w = u + v
            concat[i][j] = 1 << w_index[w] if len(w) <= maxlen else 0

    def lang_mul(x: int, y: int) -> int:
        mask = 0
        for i in range(len(words)):
            if x >> i & 1:
                row = concat[i]
                for j in range(len(words)):
                    if y >> j & 1:
                        mask |= row[j]
        return mask

    mul = tuple(tuple(lang_mul(i, j) for j in range(n)) for i in range(n))
    base = FiniteSemiring(labels, 0, 1, add, mul)
    order = PartialOrder(tuple(tuple(i | j == j for j in range(n)) for i in range(n)))

    def sigma(f: CardinalFamily) -> int:
        mask = 0
        for v, _ in f.items():
            mask |= v
        return mask

    return SigmaSemiring.from_finite(
        f"lang:{len(letters)}:{maxlen}", base, sigma, order)


def three_valued() -> SigmaSemiring:
    """Chain 0 < finite < infinite; complete but not d-complete: infinitely
    many "finite" terms escalate to "infinite" even though the partial sums
    stay at "finite"."""
    base = FiniteSemiring(
        ("0", "finite", "infinite"), 0, 1,
        tuple(tuple(max(i, j) for j in range(3)) for i in range(3)),
        tuple(tuple(0 if 0 in (i, j) else max(i, j) for j in range(3)) for i in range(3)),
    )

    def sigma(f: CardinalFamily) -> int:
        top = 0
        for v, _ in f.items():
            top = max(top, v)
        if top == 2:
            return 2
        if not f.total_multiplicity(skip=0).is_finite and top > 0:
            return 2
        return top

    return SigmaSemiring.from_finite("three-valued", base, sigma, _chain_order(3))


def four_valued() -> SigmaSemiring:
    """Chain 0 < finite < countable < uncountable; d-complete but not
    finitary, with uncountable characteristic cardinality.

    d-completeness pins the rule down: countably many "finite" terms have
    constant partial sums "finite", so they must sum to "finite"; only an
    uncountable multiplicity (or an uncountable key) escalates past the
    largest key class."""
    base = FiniteSemiring(
        ("0", "finite", "countable", "uncountable"), 0, 1,
        tuple(tuple(max(i, j) for j in range(4)) for i in range(4)),
        tuple(tuple(0 if 0 in (i, j) else max(i, j) for j in range(4)) for i in range(4)),
    )

    def sigma(f: CardinalFamily) -> int:
        top = 0
        escalate = False
        for v, m in f.items():
            top = max(top, v)
            if v != 0 and m == UNCOUNTABLE:
                escalate = True
        if top == 3 or escalate:
            return 3
        return top

    return SigmaSemiring.from_finite("four-valued", base, sigma, _chain_order(4))


# ---------------------------------------------------------------------------
# the chain 0 < 1 < ... < inf-2 < inf-1 < inf

@dataclass(frozen=True, order=True)
class OmegaMinusElement:
    """rank 0 = the natural key; rank 1 = inf-(-key), stored negated so the
    dataclass order matches the chain; rank 2 = inf."""

    rank: int
    key: int = 0

    def label(self) -> str:
        if self.rank == 0:
            return str(self.key)
        if self.rank == 1:
            return f"inf-{-self.key}"
        return "inf"

    def __repr__(self):
        return self.label()


def omega_fin(n: int) -> OmegaMinusElement:
    if n < 0:
        raise ValueError("negative natural")
    return OmegaMinusElement(0, n)


def omega_inf_minus(k: int) -> OmegaMinusElement:
    if k < 1:
        raise ValueError("inf-k needs k >= 1")
    return OmegaMinusElement(1, -k)


OMEGA_ZERO = omega_fin(0)
OMEGA_ONE = omega_fin(1)
OMEGA_INF = OmegaMinusElement(2)


def omega_add(a: OmegaMinusElement, b: OmegaMinusElement) -> OmegaMinusElement:
    if a.rank == 2 or b.rank == 2:
        return OMEGA_INF
    if a.rank == 1 and b.rank == 1:
        return OMEGA_INF
    if a.rank == 0 and b.rank == 0:
        return omega_fin(a.key + b.key)
    n = a.key if a.rank == 0 else b.key
    k = -(b.key if b.rank == 1 else a.key)
    if n >= k:
        return OMEGA_INF
    return omega_inf_minus(k - n)


def omega_mul(a: OmegaMinusElement, b: OmegaMinusElement) -> OmegaMinusElement:
    if a == OMEGA_ZERO or b == OMEGA_ZERO:
        return OMEGA_ZERO
    if a == OMEGA_ONE:
        return b
    if b == OMEGA_ONE:
        return a
    if a.rank == 0 and b.rank == 0:
        return omega_fin(a.key * b.key)
    return OMEGA_INF


def _omega_parse(text: str) -> OmegaMinusElement:
    if text == "inf":
        return OMEGA_INF
    if text.startswith("inf-"):
        return omega_inf_minus(int(text[4:]))
    return omega_fin(int(text))


def omega_plus_reverse() -> SigmaSemiring:
    """d-complete, characteristic cardinality aleph0, yet not finitary: the
    finite chain 1, 2, 3, ... has no least upper bound, because the upper
    bounds inf-1 > inf-2 > ... descend forever."""

    def sigma(f: CardinalFamily) -> OmegaMinusElement:
        if not f.total_multiplicity(skip=OMEGA_ZERO).is_finite:
            return OMEGA_INF
        acc = OMEGA_ZERO
        for v, m in f.items():
            for _ in range(m.n):
                acc = omega_add(acc, v)
        return acc

    return SigmaSemiring(
        "omega-minus",
        zero=OMEGA_ZERO,
        one=OMEGA_ONE,
        plus=omega_add,
        times=omega_mul,
        sigma_fn=sigma,
        leq=lambda a, b: a <= b,
        sample=lambda k: ([omega_fin(i) for i in range(max(1, k - 4))]
                          + [omega_inf_minus(j) for j in (1, 2, 3)] + [OMEGA_INF])[:max(2, k)],
        contains=lambda v: isinstance(v, OmegaMinusElement),
        label=OmegaMinusElement.label,
        parse_label=_omega_parse,
        multiples_unbounded=lambda v: v.rank == 0 and v.key > 0,
        fin_chain_plus=lambda b: None if b.rank == 0 else OMEGA_INF,
        fin_chain_sup=None,
        dominates_all_fin=lambda v: v.rank >= 1,
    )


# ---------------------------------------------------------------------------
# adjoining infinity to a zero-sum-free semiring

def adjoin_infinity(s: FiniteSemiring) -> SigmaSemiring:
    """Adjoin an absorbing top element and declare Sigma infinite exactly when
    the nonzero support is infinite (or an infinity key is present).

    Only zero-sum-free inputs are accepted; anything else cannot sit inside
    a semiring with total infinite sums."""
    ok, witness = is_zero_sum_free(s)
    if not ok:
        raise ZeroSumError(witness)
    n = s.n
    inf = n
    label = "inf"
    while label in s.elements:
        label += "'"
    add = [list(row) + [inf] for row in s.add] + [[inf] * (n + 1)]
    mul = [list(row) + [inf if i != s.zero else s.zero]
           for i, row in enumerate(s.mul)]
    mul.append([inf if j != s.zero else s.zero for j in range(n)] + [inf])
    base = FiniteSemiring.from_tables(s.elements + (label,), s.zero, s.one, add, mul)

    def sigma(f: CardinalFamily) -> int:
        if any(v == inf for v, _ in f.items()):
            return inf
        if not f.total_multiplicity(skip=s.zero).is_finite:
            return inf
        acc = base.zero
        for v, m in f.items():
            for _ in range(m.n):
                acc = base.plus(acc, v)
        return acc

    from .core import is_orderable
    orderable, w = is_orderable(base)
    order = w if orderable else None
    return SigmaSemiring.from_finite(f"adjoin-inf:{len(s.elements)}", base, sigma, order)


@dataclass(frozen=True)
class DistributivityWitness:
    semiring: FiniteSemiring
    element: int
    family: CardinalFamily
    side: str  # "left" | "right"
    product_of_sum: int
    sum_of_products: int


def search_distributivity_violation(pool):
    """Scan adjoined-infinity semirings for a failure of the infinite
    distributivity law; all other Sigma axioms survive the adjunction, this
    one need not.  Expected witness shape: a zero divisor times an infinite
    family of its annihilator."""
    for s in pool:
        ok, _ = is_zero_sum_free(s)
        if not ok:
            continue
        t = adjoin_infinity(s)
        families = [CardinalFamily({a: ALEPH0}) for a in range(t.base.n)
                    if a != t.zero]
        families += [CardinalFamily({a: ALEPH0, b: ALEPH0})
                     for a in range(t.base.n) for b in range(a + 1, t.base.n)
                     if a != t.zero and b != t.zero]
        for x in range(t.base.n):
            for f in families:
                total = t.sigma(f)
                lhs = t.times(x, total)
                rhs = t.sigma(f.map_keys(lambda v: t.times(x, v)))
                if lhs != rhs:
                    return DistributivityWitness(s, x, f, "left", lhs, rhs)
                lhs = t.times(total, x)
                rhs = t.sigma(f.map_keys(lambda v: t.times(v, x)))
                if lhs != rhs:
                    return DistributivityWitness(s, x, f, "right", lhs, rhs)
    return None


def sampled_semiring_laws(c: SigmaSemiring, k: int = 8) -> CheckReport:
    """Semiring laws on a bounded element sample of a symbolic carrier; the
    sample is closed under nothing, but the operations are total so every
    law instance over the sample is exact."""
    sample = c.sample(k)
    violations = []
    seen = set()

    def report(law, *witness):
        if law not in seen:
            seen.add(law)
            violations.append((law, witness))

    for a in sample:
        if c.plus(c.zero, a) != a or c.plus(a, c.zero) != a:
            report("add-identity", a)
        if c.times(c.one, a) != a or c.times(a, c.one) != a:
            report("mul-identity", a)
        if c.times(c.zero, a) != c.zero or c.times(a, c.zero) != c.zero:
            report("zero-absorption", a)
        for b in sample:
            if c.plus(a, b) != c.plus(b, a):
                report("add-commutativity", a, b)
            for d in sample:
                if c.plus(c.plus(a, b), d) != c.plus(a, c.plus(b, d)):
                    report("add-associativity", a, b, d)
                if c.times(c.times(a, b), d) != c.times(a, c.times(b, d)):
                    report("mul-associativity", a, b, d)
                if c.times(a, c.plus(b, d)) != c.plus(c.times(a, b), c.times(a, d)):
                    report("left-distributivity", a, b, d)
                if c.times(c.plus(b, d), a) != c.plus(c.times(b, a), c.times(d, a)):
                    report("right-distributivity", a, b, d)
    return CheckReport.build(violations)


# ---------------------------------------------------------------------------
# registry

_LETTERS = "abcdefgh"


def gallery_names():
    return ["boolean", "nat", "nat-infinity", "three-valued", "four-valued",
            "omega-minus", "powerset:<n>", "lang:<k>:<L>"]


def gallery_semiring(name: str):
    """Resolve a registry name to a FiniteSemiring or SigmaSemiring."""
    if name == "boolean":
        return boolean()
    if name == "nat":
        return nat()
    if name == "nat-infinity":
        return nat_infinity()
    if name == "three-valued":
        return three_valued()
    if name == "four-valued":
        return four_valued()
    if name == "omega-minus":
        return omega_plus_reverse()
    if name.startswith("powerset:"):
        k = int(name.split(":", 1)[1])
        if not 0 <= k <= 4:
            raise ValueError("powerset universe size must be 0..4")
        return powerset_semiring(_LETTERS[:k])
    if name.startswith("lang:"):
        _, k, ell = name.split(":")
        k, ell = int(k), int(ell)
        if not 1 <= k <= 3:
            raise ValueError("language alphabet size must be 1..3")
        return language_semiring(_LETTERS[:k], ell)
    raise KeyError(f"unknown gallery name {name!r}")

"""Cardinal-multiplicity families and semirings with a total infinite sum.

A family (a_i : i in I) is stored up to bijection of the index set as a map
value -> multiplicity, with multiplicities in {finite n, aleph0, one
uncountable class}.  Storing families up to bijection turns the bijection
axiom for infinite sums into a data-model invariant.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .core import (CheckReport, FiniteSemiring, InternalConsistencyError,
                   PartialOrder, StructureError)


class CarrierError(ValueError):
    """A family key lies outside the carrier."""


class MissingOrderError(ValueError):
    """The operation needs an ordered carrier and none was supplied."""


# ---------------------------------------------------------------------------
# cardinals

@dataclass(frozen=True, order=True)
class Cardinal:
    """Multiplicity class: rank 0 = finite (with count n), 1 = aleph0,
    2 = uncountable.  Dataclass ordering matches cardinal ordering."""

    rank: int
    n: int = 0

    @property
    def is_finite(self) -> bool:
        return self.rank == 0

    def label(self) -> str:
        if self.rank == 0:
            return f"fin:{self.n}"
        return "aleph0" if self.rank == 1 else "uncountable"

    def __repr__(self):
        return self.label()


def fin(n: int) -> Cardinal:
    if n < 0:
        raise ValueError("finite multiplicity must be nonnegative")
    return Cardinal(0, n)


FIN0 = fin(0)
FIN1 = fin(1)
ALEPH0 = Cardinal(1)
UNCOUNTABLE = Cardinal(2)


def parse_cardinal(text: str) -> Cardinal:
    if text == "aleph0":
        return ALEPH0
    if text == "uncountable":
        return UNCOUNTABLE
    if text.startswith("fin:"):
        return fin(int(text[4:]))
    raise ValueError(f"unknown cardinal {text!r}")


def card_add(x: Cardinal, y: Cardinal) -> Cardinal:
    if x.is_finite and y.is_finite:
        return fin(x.n + y.n)
    return max(x, y)


def card_mul(x: Cardinal, y: Cardinal) -> Cardinal:
    if x == FIN0 or y == FIN0:
        return FIN0
    if x.is_finite and y.is_finite:
        return fin(x.n * y.n)
    return max(x, y)


def card_arith(op: str, x: Cardinal, y: Cardinal) -> Cardinal:
    if op == "add":
        return card_add(x, y)
    if op == "mul":
        return card_mul(x, y)
    raise ValueError(f"unknown cardinal operation {op!r}")


def card_sum(cards) -> Cardinal:
    total = FIN0
    for c in cards:
        total = card_add(total, c)
    return total


# ---------------------------------------------------------------------------
# families

class CardinalFamily:
    """Canonical value -> multiplicity map; zero multiplicities are absent."""

    __slots__ = ("_mult",)

    def __init__(self, mult=()):
        items = mult.items() if hasattr(mult, "items") else mult
        d = {}
        for v, c in items:
            if not isinstance(c, Cardinal):
                raise TypeError(f"multiplicity must be a Cardinal, got {c!r}")
            if c == FIN0:
                continue
            d[v] = card_add(d[v], c) if v in d else c
        self._mult = d

    @classmethod
    def from_sequence(cls, values) -> "CardinalFamily":
        counts = {}
        for v in values:
            counts[v] = counts.get(v, 0) + 1
        return cls({v: fin(k) for v, k in counts.items()})

    def get(self, v) -> Cardinal:
        return self._mult.get(v, FIN0)

    def keys(self):
        return sorted(self._mult)

    def items(self):
        return sorted(self._mult.items(), key=lambda kv: kv[0])

    def support_size(self) -> int:
        return len(self._mult)

    def is_empty(self) -> bool:
        return not self._mult

    def all_finite(self) -> bool:
        return all(c.is_finite for c in self._mult.values())

    def total_multiplicity(self, skip=None) -> Cardinal:
        return card_sum(c for v, c in self._mult.items() if v != skip)

    def map_keys(self, f) -> "CardinalFamily":
        """Push the family through a function on values, merging collisions
        by cardinal addition (reindexing of the summed family)."""
        return CardinalFamily((f(v), c) for v, c in self._mult.items())

    def scale(self, k: Cardinal) -> "CardinalFamily":
        """The disjoint union of k copies of this family."""
        return CardinalFamily((v, card_mul(k, c)) for v, c in self._mult.items())

    def __eq__(self, other):
        return isinstance(other, CardinalFamily) and self._mult == other._mult

    def __hash__(self):
        return hash(frozenset(self._mult.items()))

    def __repr__(self):
        inner = ", ".join(f"{v!r}: {c!r}" for v, c in self.items())
        return "Family{" + inner + "}"


EMPTY_FAMILY = CardinalFamily()


@dataclass(frozen=True)
class OmegaSequence:
    """Ultimately periodic sequence a_1, a_2, ...: prefix then cycle forever."""

    prefix: tuple
    cycle: tuple

    def __post_init__(self):
        if not self.cycle:
            raise ValueError("cycle must be nonempty")

    def term(self, i: int):
        if i < len(self.prefix):
            return self.prefix[i]
        return self.cycle[(i - len(self.prefix)) % len(self.cycle)]

    def family(self) -> CardinalFamily:
        counts = {}
        for v in self.prefix:
            counts[v] = card_add(counts.get(v, FIN0), FIN1)
        for v in self.cycle:
            counts[v] = ALEPH0
        return CardinalFamily(counts)


def family_from_json(c, text: str) -> CardinalFamily:
    """Parse {"family": {"<element label>": "fin:3"|"aleph0"|"uncountable"}}."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise StructureError(f"invalid JSON: {e.msg}") from None
    if not isinstance(doc, dict) or not isinstance(doc.get("family"), dict):
        raise StructureError('expected an object with a "family" mapping')
    mult = {}
    for label, card_text in doc["family"].items():
        try:
            mult[c.parse_label(label)] = parse_cardinal(card_text)
        except ValueError as e:
            raise StructureError(str(e)) from None
    return CardinalFamily(mult)


def family_to_json(c, f: CardinalFamily) -> str:
    return json.dumps(
        {"family": {c.label_of(v): m.label() for v, m in f.items()}},
        sort_keys=True)


def omega_sequence_from_json(c, text: str) -> OmegaSequence:
    """Parse {"prefix": [labels...], "cycle": [labels...]}."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise StructureError(f"invalid JSON: {e.msg}") from None
    if (not isinstance(doc, dict) or not isinstance(doc.get("cycle"), list)
            or not isinstance(doc.get("prefix", []), list)):
        raise StructureError('expected {"prefix": [...], "cycle": [...]}')
    try:
        prefix = tuple(c.parse_label(x) for x in doc.get("prefix", []))
        cycle = tuple(c.parse_label(x) for x in doc["cycle"])
        return OmegaSequence(prefix, cycle)
    except ValueError as e:
        raise StructureError(str(e)) from None


# ---------------------------------------------------------------------------
# semirings with infinite sums

def nfold(plus, zero, v, k: int):
    """k-fold sum of v by binary doubling; valid in any commutative monoid."""
    acc = zero
    base = v
    while k:
        if k & 1:
            acc = plus(acc, base)
        k >>= 1
        if k:
            base = plus(base, base)
    return acc


class SigmaSemiring:
    """A semiring carrier together with a total Sigma on cardinal families.

    Finite carriers wrap a FiniteSemiring (elements are table indices).
    Symbolic carriers (infinite, like the naturals with infinity) supply an
    operation bundle plus the structural hooks used by the subsum analysis:

    - multiples_unbounded(v): the set {k*v} grows without bound,
    - fin_chain_plus(b): the eventual value of (large finite chain) + b,
      or None when the sum stays a growing finite chain,
    - fin_chain_sup: least element dominating the whole finite chain, or
      None when the upper bounds have no least member,
    - dominates_all_fin(v): v is an upper bound of every finite element.
    """

    def __init__(self, name, *, zero, one, plus, times, sigma_fn,
                 base=None, order=None, leq=None, sample=None, contains=None,
                 label=None, parse_label=None, multiples_unbounded=None,
                 fin_chain_plus=None, fin_chain_sup=None,
                 dominates_all_fin=None, carrier_bound=32):
        self.name = name
        self.zero = zero
        self.one = one
        self.plus = plus
        self.times = times
        self.base = base
        self.order = order
        self._sigma_fn = sigma_fn
        self._leq = leq
        self._sample = sample
        self._contains = contains
        self._label = label
        self._parse_label = parse_label
        self.multiples_unbounded = multiples_unbounded
        self.fin_chain_plus = fin_chain_plus
        self.fin_chain_sup = fin_chain_sup
        self.dominates_all_fin = dominates_all_fin
        self.carrier_bound = carrier_bound

    @classmethod
    def from_finite(cls, name, base: FiniteSemiring, sigma_fn,
                    order: PartialOrder | None = None) -> "SigmaSemiring":
        return cls(
            name,
            zero=base.zero,
            one=base.one,
            plus=base.plus,
            times=base.times,
            sigma_fn=sigma_fn,
            base=base,
            order=order,
            leq=(order.leq if order is not None else None),
            contains=lambda v, n=base.n: isinstance(v, int) and 0 <= v < n,
            label=base.label,
            parse_label=base.index_of,
            multiples_unbounded=lambda v: False,
            carrier_bound=base.n,
        )

    @property
    def is_finite(self) -> bool:
        return self.base is not None

    @property
    def has_order(self) -> bool:
        return self.order is not None or self._leq is not None

    @property
    def has_sigma(self) -> bool:
        return self._sigma_fn is not None

    def elements(self):
        return list(range(self.base.n)) if self.is_finite else None

    def sample(self, k: int = 8):
        if self.is_finite:
            n = self.base.n
            if n <= k:
                return list(range(n))
            step = n // k
            return sorted({i * step for i in range(k)}
                          | {self.zero, self.one, n - 1})
        return list(self._sample(k))

    def leq(self, a, b) -> bool:
        if self.order is not None:
            return self.order.leq(a, b)
        if self._leq is None:
            raise MissingOrderError(f"{self.name} carries no order")
        return self._leq(a, b)

    def contains(self, v) -> bool:
        return bool(self._contains(v))

    def label_of(self, v) -> str:
        return self._label(v) if self._label else str(v)

    def parse_label(self, text: str):
        if self._parse_label is None:
            raise ValueError(f"{self.name} has no label parser")
        return self._parse_label(text)

    def fold(self, f: CardinalFamily):
        """Finite add-fold of an all-finite family."""
        acc = self.zero
        for v, m in f.items():
            acc = self.plus(acc, nfold(self.plus, self.zero, v, m.n))
        return acc

    def sigma(self, f: CardinalFamily):
        """Apply Sigma; for all-finite families the result is asserted to
        agree with the finite add-fold."""
        if not self.has_sigma:
            raise ValueError(f"{self.name} has no infinite-sum operator")
        for v, _ in f.items():
            if not self.contains(v):
                raise CarrierError(f"{v!r} is not in the carrier of {self.name}")
        value = self._sigma_fn(f)
        if f.all_finite():
            folded = self.fold(f)
            if folded != value:
                raise InternalConsistencyError(
                    f"sigma of {self.name} disagrees with the finite fold on "
                    f"{f!r}: {value!r} vs {folded!r}")
        return value


# ---------------------------------------------------------------------------
# finite subsums and suprema

@dataclass(frozen=True)
class SubsumSet:
    """The set of finite subsums.  unbounded_fin marks that the true set
    additionally contains finite elements of arbitrarily large size (only on
    symbolic carriers)."""

    values: frozenset
    unbounded_fin: bool = False


_MULT_ENUM_LIMIT = 10_000
_SYMBOLIC_WINDOW = 24


def _multiples(c: SigmaSemiring, v, m: Cardinal):
    """({k*v : 0 <= k <= m}, unbounded flag).  The loop stops at the first
    repeated value: from there the orbit cycles, so the set is complete."""
    unbounded = not m.is_finite and bool(c.multiples_unbounded(v))
    limit = m.n if m.is_finite else (_SYMBOLIC_WINDOW if unbounded else None)
    vals = {c.zero}
    cur = c.zero
    k = 0
    while limit is None or k < limit:
        cur = c.plus(cur, v)
        if cur in vals:
            return vals, False
        vals.add(cur)
        k += 1
        if k > _MULT_ENUM_LIMIT:
            # only reachable when the orbit never repeats: a symbolic carrier
            # with a huge finite multiplicity, or an undeclared infinite orbit
            if limit is None:
                raise InternalConsistencyError(
                    f"unbounded multiple orbit of {v!r} on {c.name} was not declared")
            raise ValueError(
                f"multiplicity {m!r} of {v!r} too large for subsum enumeration")
    return vals, unbounded


def _sumset(c: SigmaSemiring, avals, aunb, bvals, bunb):
    vals = {c.plus(a, b) for a in avals for b in bvals}
    unb = aunb and bunb
    if aunb:
        for b in bvals:
            e = c.fin_chain_plus(b)
            if e is None:
                unb = True
            else:
                vals.add(e)
    if bunb:
        for a in avals:
            e = c.fin_chain_plus(a)
            if e is None:
                unb = True
            else:
                vals.add(e)
    return vals, unb


def finite_subsums(c: SigmaSemiring, f: CardinalFamily) -> SubsumSet:
    """All values add-reachable using at most the multiplicity of each key.

    Grouping the picks key by key is exact because addition is commutative,
    so the set is the product-fold of the per-key multiple sets."""
    vals, unb = {c.zero}, False
    for v, m in f.items():
        mv, mu = _multiples(c, v, m)
        vals, unb = _sumset(c, vals, unb, mv, mu)
    return SubsumSet(frozenset(vals), unb)


@dataclass(frozen=True)
class SupResult:
    status: str  # "exists" | "no-upper-bound" | "no-least"
    value: object | None = None


def sup_in_order(o: PartialOrder, xs) -> SupResult:
    """Least upper bound of a subset of a finite poset, distinguishing
    "no upper bound" from "upper bounds but no least one"."""
    xs = list(xs)
    ubs = [u for u in range(o.n) if all(o.leq(x, u) for x in xs)]
    if not ubs:
        return SupResult("no-upper-bound")
    for u in ubs:
        if all(o.leq(u, w) for w in ubs):
            return SupResult("exists", u)
    return SupResult("no-least")


def family_sup(c: SigmaSemiring, ss: SubsumSet) -> SupResult:
    """Sup of a subsum set; symbolic carriers get the chain analysis."""
    if c.is_finite:
        if c.order is None:
            raise MissingOrderError(f"{c.name} carries no order")
        return sup_in_order(c.order, ss.values)
    mx = None
    for v in ss.values:
        if mx is None or c.leq(mx, v):
            mx = v
    if any(not c.leq(v, mx) for v in ss.values):
        raise InternalConsistencyError(f"{c.name} sample is not a chain")
    if not ss.unbounded_fin:
        return SupResult("exists", mx)
    if c.dominates_all_fin(mx):
        return SupResult("exists", mx)
    top = c.fin_chain_sup
    if top is None:
        return SupResult("no-least")
    if not c.leq(mx, top):
        raise InternalConsistencyError(f"{c.name}: declared chain sup is not maximal")
    return SupResult("exists", top)


# ---------------------------------------------------------------------------
# d-completeness

@dataclass(frozen=True)
class DCompleteWitness:
    sequence: OmegaSequence
    constant: object
    sigma_value: object


def eventually_constant_sum(c: SigmaSemiring, seq: OmegaSequence):
    """The eventual constant of the partial sums, or None.

    If a partial sum stays fixed over one full cycle it is fixed forever
    (each cycle element then satisfies v + a = v), so a constant tail of
    length cycle+1 inside the horizon is an exact criterion."""
    cyc = len(seq.cycle)
    horizon = len(seq.prefix) + (c.carrier_bound + 2) * cyc
    partials = []
    acc = c.zero
    for i in range(horizon):
        acc = c.plus(acc, seq.term(i))
        partials.append(acc)
    tail = partials[-1]
    run = 0
    for p in reversed(partials):
        if p != tail:
            break
        run += 1
    return tail if run >= cyc + 1 else None


def is_d_complete(c: SigmaSemiring, seqs):
    """Check that countable sums respect discrete convergence on the given
    sequences; returns (ok, first DCompleteWitness or None)."""
    for seq in seqs:
        constant = eventually_constant_sum(c, seq)
        if constant is None:
            continue
        got = c.sigma(seq.family())
        if got != constant:
            return False, DCompleteWitness(seq, constant, got)
    return True, None


def omega_sequence_battery(c: SigmaSemiring, seed: int, count: int):
    """Deterministic sequence battery: every single-element cycle and every
    (one-prefix, one-cycle) pair over the sample, then seeded random ones."""
    rng = random.Random(seed)
    sample = c.sample(10)
    seqs = []
    for v in sample:
        seqs.append(OmegaSequence((), (v,)))
    for u in sample:
        for v in sample:
            seqs.append(OmegaSequence((u,), (v,)))
    for _ in range(count):
        prefix = tuple(rng.choice(sample) for _ in range(rng.randrange(4)))
        cycle = tuple(rng.choice(sample) for _ in range(rng.randrange(1, 4)))
        seqs.append(OmegaSequence(prefix, cycle))
    return seqs


# ---------------------------------------------------------------------------
# finitary

@dataclass(frozen=True)
class FinitaryWitness:
    family: CardinalFamily
    reason: str  # "sup-missing" | "sup-differs"
    sigma_value: object
    sup_value: object | None = None
    sup_status: str | None = None


def is_finitary(c: SigmaSemiring, fams):
    """Sigma must equal the least upper bound of the finite subsums."""
    if not c.has_order:
        raise MissingOrderError(f"{c.name} carries no order")
    for f in fams:
        sig = c.sigma(f)
        sup = family_sup(c, finite_subsums(c, f))
        if sup.status != "exists":
            return False, FinitaryWitness(f, "sup-missing", sig, None, sup.status)
        if sup.value != sig:
            return False, FinitaryWitness(f, "sup-differs", sig, sup.value, sup.status)
    return True, None


def family_battery(c: SigmaSemiring, seed: int, count: int,
                   fin_bound: int = 4, support_bound: int = 3):
    """Deterministic family battery: targeted families first (empty,
    singletons, infinitely many ones, infinite multiplicities), then seeded
    random families over the element sample."""
    rng = random.Random(seed)
    sample = c.sample(8)
    mults = [fin(k) for k in range(1, fin_bound + 1)] + [ALEPH0, UNCOUNTABLE]
    fams = [EMPTY_FAMILY, CardinalFamily({c.one: ALEPH0}),
            CardinalFamily({c.one: UNCOUNTABLE})]
    for v in sample:
        fams.append(CardinalFamily({v: FIN1}))
        fams.append(CardinalFamily({v: ALEPH0}))
    for _ in range(count):
        size = rng.randrange(1, support_bound + 1)
        keys = rng.sample(sample, min(size, len(sample)))
        fams.append(CardinalFamily({v: rng.choice(mults) for v in keys}))
    return fams


# ---------------------------------------------------------------------------
# the five-axiom battery

@dataclass(frozen=True)
class PartitionGeneratorConfig:
    seed: int = 0
    families: int = 500
    listing_trials: int = 60
    mult_fin_bound: int = 4
    support_bound: int = 3
    sample_size: int = 8

    def __post_init__(self):
        if self.families < 1 or self.listing_trials < 0:
            raise ValueError("battery sizes must be positive")
        if self.mult_fin_bound < 1 or self.support_bound < 1:
            raise ValueError("generator bounds must be positive")


def _split_cardinal(rng, m: Cardinal):
    """A random two-part split m = m1 + m2 realizable by an index partition."""
    if m.is_finite:
        a = rng.randrange(m.n + 1)
        return fin(a), fin(m.n - a)
    if m == ALEPH0:
        return rng.choice([(fin(rng.randrange(1, 4)), ALEPH0), (ALEPH0, ALEPH0)])
    return rng.choice([(fin(rng.randrange(1, 4)), UNCOUNTABLE),
                       (ALEPH0, UNCOUNTABLE), (UNCOUNTABLE, UNCOUNTABLE)])


def _random_family(rng, sample, cfg: PartitionGeneratorConfig) -> CardinalFamily:
    mults = [fin(k) for k in range(1, cfg.mult_fin_bound + 1)] + [ALEPH0, UNCOUNTABLE]
    size = rng.randrange(1, cfg.support_bound + 1)
    keys = rng.sample(sample, min(size, len(sample)))
    return CardinalFamily({v: rng.choice(mults) for v in keys})


def check_sigma_axioms(c: SigmaSemiring, gen: PartitionGeneratorConfig) -> CheckReport:
    """Generator-based battery for the five infinite-sum axioms.

    Partitions are exercised through two-block multiplicity splits and
    block repetition (kappa disjoint copies of a block), the shapes every
    argument in scope actually uses; arbitrary partitions of uncountable
    index sets are not finitely enumerable."""
    rng = random.Random(gen.seed)
    sample = c.sample(gen.sample_size)
    violations = []
    seen_laws = set()

    def report(law, *witness):
        if law not in seen_laws:
            seen_laws.add(law)
            violations.append((law, witness))

    if c.sigma(EMPTY_FAMILY) != c.zero:
        report("sigma-empty", c.sigma(EMPTY_FAMILY))
    for a in sample:
        if c.sigma(CardinalFamily({a: FIN1})) != a:
            report("sigma-singleton", a)
            break
    for a in sample:
        for b in sample:
            fam = CardinalFamily.from_sequence((a, b))
            if c.sigma(fam) != c.plus(a, b):
                report("sigma-pair", a, b)

    # bijection invariance is representational: any reordering of a listing
    # canonicalizes to the same family, hence the same Sigma
    for _ in range(gen.listing_trials):
        listing = [rng.choice(sample) for _ in range(rng.randrange(8))]
        shuffled = list(listing)
        rng.shuffle(shuffled)
        f1 = CardinalFamily.from_sequence(listing)
        f2 = CardinalFamily.from_sequence(shuffled)
        if f1 != f2 or c.sigma(f1) != c.sigma(f2):
            report("sigma-bijection", tuple(listing), tuple(shuffled))

    kappas = [fin(0), fin(2), fin(3), ALEPH0, UNCOUNTABLE]
    for _ in range(gen.families):
        f = _random_family(rng, sample, cfg=gen)
        total = c.sigma(f)

        parts1, parts2 = {}, {}
        for v, m in f.items():
            m1, m2 = _split_cardinal(rng, m)
            if m1 != FIN0:
                parts1[v] = card_add(parts1.get(v, FIN0), m1)
            if m2 != FIN0:
                parts2[v] = card_add(parts2.get(v, FIN0), m2)
        blockwise = c.plus(c.sigma(CardinalFamily(parts1)),
                           c.sigma(CardinalFamily(parts2)))
        if blockwise != total:
            report("sigma-partition-split", f, CardinalFamily(parts1),
                   CardinalFamily(parts2), total, blockwise)

        kappa = rng.choice(kappas)
        lhs = c.sigma(f.scale(kappa))
        rhs = c.sigma(CardinalFamily({total: kappa}))
        if lhs != rhs:
            report("sigma-partition-repetition", f, kappa, lhs, rhs)

        x = rng.choice(sample)
        left = c.times(x, total)
        left_dist = c.sigma(f.map_keys(lambda v: c.times(x, v)))
        if left != left_dist:
            report("sigma-distributivity-left", x, f, left, left_dist)
        right = c.times(total, x)
        right_dist = c.sigma(f.map_keys(lambda v: c.times(v, x)))
        if right != right_dist:
            report("sigma-distributivity-right", x, f, right, right_dist)

    for kappa in kappas[1:]:
        zf = CardinalFamily({c.zero: kappa})
        if c.sigma(zf) != c.zero:
            report("sigma-zero", kappa, c.sigma(zf))
    return CheckReport.build(violations)


# ---------------------------------------------------------------------------
# characteristic cardinality

@dataclass(frozen=True)
class CharacteristicCardinality:
    lambda1: Cardinal
    lambdaS: Cardinal
    caveat: bool  # lambdaS was computed over a bounded family space


def _stabilization_index(values, ladder):
    i = len(values) - 1
    while i > 0 and values[i - 1] == values[-1]:
        i -= 1
    return ladder[i]


def characteristic_cardinality(c: SigmaSemiring, bound: int = 3) -> CharacteristicCardinality:
    """lambda1: least class kappa from which Sigma of kappa-many ones is
    constant; lambdaS: the analogous worst case over a bounded family space.
    The bound lambdaS <= max(lambda1, carrier size) is asserted."""
    ladder = [fin(k) for k in range(bound + 1)] + [ALEPH0, UNCOUNTABLE]
    ones = [c.sigma(CardinalFamily({c.one: k})) for k in ladder]
    lambda1 = _stabilization_index(ones, ladder)

    # orbit of the multiples of one: a fixed point inside the window makes
    # the finite part of the ladder exact rather than truncated
    cur = c.zero
    fixed = False
    for _ in range(bound + 1):
        nxt = c.plus(cur, c.one)
        if nxt == cur:
            fixed = True
            break
        cur = nxt
    caveat = not fixed

    sample = c.sample(6)
    mult_ladder = [fin(k) for k in range(1, bound + 1)] + [ALEPH0, UNCOUNTABLE]
    supports = [(v,) for v in sample]
    supports += [(u, v) for i, u in enumerate(sample) for v in sample[i + 1:]]
    worst = FIN0
    for support in supports:
        for mults in _mult_choices(mult_ladder, len(support)):
            f = CardinalFamily(zip(support, mults))
            target = c.sigma(f)
            best = None
            for sub in _subfamilies(support, mults, bound):
                g = CardinalFamily(zip(support, sub))
                if c.sigma(g) == target:
                    size = card_sum(sub)
                    if best is None or size < best:
                        best = size
            if best > worst:
                worst = best
    carrier_card = fin(c.base.n) if c.is_finite else ALEPH0
    if worst > max(lambda1, carrier_card):
        raise InternalConsistencyError(
            f"lambdaS bound violated on {c.name}: {worst!r} > "
            f"max({lambda1!r}, {carrier_card!r})")
    return CharacteristicCardinality(lambda1, worst, caveat)


def _mult_choices(ladder, k):
    if k == 1:
        return [(m,) for m in ladder]
    return [(m1, m2) for m1 in ladder for m2 in ladder]


def _subfamilies(support, mults, bound):
    per_key = []
    for m in mults:
        opts = [fin(j) for j in range(min(m.n if m.is_finite else bound, bound) + 1)]
        if m >= ALEPH0:
            opts.append(ALEPH0)
        if m == UNCOUNTABLE:
            opts.append(UNCOUNTABLE)
        per_key.append(opts)
    if len(per_key) == 1:
        return [(m,) for m in per_key[0]]
    return [(m1, m2) for m1 in per_key[0] for m2 in per_key[1]]

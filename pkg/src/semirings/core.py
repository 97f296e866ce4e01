"""Finite semirings as operation tables, with the decision procedures on them.

Carrier elements are indices 0..n-1; the label list exists only for I/O.
Everything here is a pure function of immutable inputs, so values are safe
to share across threads.  All witness scans run in ascending index order,
which makes every reported witness the lexicographically least one.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from functools import lru_cache


class StructureError(ValueError):
    """Input is malformed (bad shape, index out of range): not a failed law."""


class InternalConsistencyError(AssertionError):
    """Two provably equivalent criteria disagreed; aborting is mandatory."""


@dataclass(frozen=True)
class FiniteSemiring:
    elements: tuple[str, ...]
    zero: int
    one: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]

    @classmethod
    def from_tables(cls, elements, zero, one, add, mul) -> "FiniteSemiring":
        return cls(
            tuple(elements),
            zero,
            one,
            tuple(tuple(row) for row in add),
            tuple(tuple(row) for row in mul),
        )

    @property
    def n(self) -> int:
        return len(self.elements)

    def plus(self, a: int, b: int) -> int:
        return self.add[a][b]

    def times(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def label(self, i: int) -> str:
        return self.elements[i]

    def index_of(self, label: str) -> int:
        try:
            return self.elements.index(label)
        except ValueError:
            raise StructureError(f"unknown element label {label!r}") from None


@dataclass(frozen=True)
class QuasiOrder:
    """Reflexive transitive relation as a boolean matrix."""

    rel: tuple[tuple[bool, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rel)

    def leq(self, a: int, b: int) -> bool:
        return self.rel[a][b]


@dataclass(frozen=True)
class PartialOrder:
    """Reflexive transitive antisymmetric relation as a boolean matrix."""

    rel: tuple[tuple[bool, ...], ...]

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "PartialOrder":
        """Build from a pair list, taking the reflexive-transitive closure."""
        mat = [[i == j for j in range(n)] for i in range(n)]
        for i, j in pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise StructureError(f"order pair ({i},{j}) out of range")
            mat[i][j] = True
        for k in range(n):
            for i in range(n):
                if mat[i][k]:
                    for j in range(n):
                        if mat[k][j]:
                            mat[i][j] = True
        rel = tuple(tuple(row) for row in mat)
        if _antisymmetry_witness(rel) is not None:
            raise StructureError("order pairs close into a cyclic relation")
        return cls(rel)

    @property
    def n(self) -> int:
        return len(self.rel)

    def leq(self, a: int, b: int) -> bool:
        return self.rel[a][b]

    def pairs(self):
        return [(i, j) for i in range(self.n) for j in range(self.n)
                if i != j and self.rel[i][j]]


@dataclass(frozen=True)
class CheckReport:
    """Outcome of a law battery: passed iff the violation list is empty."""

    passed: bool
    violations: tuple[tuple[str, tuple], ...]

    def __post_init__(self):
        if self.passed != (len(self.violations) == 0):
            raise InternalConsistencyError("CheckReport passed flag inconsistent")

    @classmethod
    def build(cls, violations) -> "CheckReport":
        v = tuple(violations)
        return cls(not v, v)

    def merge(self, other: "CheckReport") -> "CheckReport":
        return CheckReport.build(self.violations + other.violations)

    def law_names(self):
        return sorted({name for name, _ in self.violations})


def _is_reflexive(rel) -> bool:
    return all(rel[i][i] for i in range(len(rel)))


def _is_transitive(rel) -> bool:
    n = len(rel)
    for a in range(n):
        for b in range(n):
            if rel[a][b]:
                for c in range(n):
                    if rel[b][c] and not rel[a][c]:
                        return False
    return True


def _antisymmetry_witness(rel):
    n = len(rel)
    for a in range(n):
        for b in range(a + 1, n):
            if rel[a][b] and rel[b][a]:
                return (a, b)
    return None


def is_partial_order(rel) -> bool:
    return _is_reflexive(rel) and _is_transitive(rel) and _antisymmetry_witness(rel) is None


def _validate_structure(s: FiniteSemiring) -> None:
    n = s.n
    if n == 0:
        raise StructureError("empty carrier")
    if len(set(s.elements)) != n:
        raise StructureError("duplicate element labels")
    if not (0 <= s.zero < n and 0 <= s.one < n):
        raise StructureError("zero/one index out of range")
    for name, table in (("add", s.add), ("mul", s.mul)):
        if len(table) != n:
            raise StructureError(f"{name} table has {len(table)} rows, expected {n}")
        for i, row in enumerate(table):
            if len(row) != n:
                raise StructureError(f"{name}[{i}] has {len(row)} entries, expected {n}")
            for j, x in enumerate(row):
                if not isinstance(x, int) or not 0 <= x < n:
                    raise StructureError(f"{name}[{i}][{j}] = {x!r} out of range")


def check_semiring_axioms(s: FiniteSemiring) -> CheckReport:
    """Check the monoid, commutativity, distributivity and zero-absorption
    laws.

    Absorption (0*x = x*0 = 0) is part of the definition here: without it
    the evaluation map from polynomials is not a homomorphism, and infinite
    distributivity over the empty family already forces it inside any
    semiring with total infinite sums, so nothing non-absorbing can embed
    into a completion anyway.

    Returns one lexicographically least witness per violated law.  Raises
    StructureError for malformed tables, which is a different failure mode
    than a violated law.
    """
    _validate_structure(s)
    n, add, mul = s.n, s.add, s.mul
    rng = range(n)
    violations = []

    def first(law, gen):
        for w in gen:
            violations.append((law, w))
            return

    first("add-associativity",
          ((a, b, c) for a in rng for b in rng for c in rng
           if add[add[a][b]][c] != add[a][add[b][c]]))
    first("add-commutativity",
          ((a, b) for a in rng for b in rng if add[a][b] != add[b][a]))
    first("add-identity",
          ((a,) for a in rng if add[s.zero][a] != a or add[a][s.zero] != a))
    first("mul-associativity",
          ((a, b, c) for a in rng for b in rng for c in rng
           if mul[mul[a][b]][c] != mul[a][mul[b][c]]))
    first("mul-identity",
          ((a,) for a in rng if mul[s.one][a] != a or mul[a][s.one] != a))
    first("zero-absorption",
          ((a,) for a in rng
           if mul[s.zero][a] != s.zero or mul[a][s.zero] != s.zero))
    first("left-distributivity",
          ((x, y, z) for x in rng for y in rng for z in rng
           if mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]]))
    first("right-distributivity",
          ((x, y, z) for x in rng for y in rng for z in rng
           if mul[add[y][z]][x] != add[mul[y][x]][mul[z][x]]))
    return CheckReport.build(violations)


def natural_quasiorder(s: FiniteSemiring) -> QuasiOrder:
    """a <= b iff a + x = b for some x in the carrier."""
    n = s.n
    rel = tuple(
        tuple(any(s.add[a][x] == b for x in range(n)) for b in range(n))
        for a in range(n)
    )
    if not (_is_reflexive(rel) and _is_transitive(rel)):
        raise InternalConsistencyError(
            "natural quasiorder of a semiring must be reflexive and transitive")
    return QuasiOrder(rel)


def _absorption_witness(s: FiniteSemiring):
    """Least (a, x, y) with a+x+y = a but a+x != a, or None."""
    n, add = s.n, s.add
    for a in range(n):
        for x in range(n):
            ax = add[a][x]
            if ax == a:
                continue
            for y in range(n):
                if add[ax][y] == a:
                    return (a, x, y)
    return None


def is_orderable(s: FiniteSemiring):
    """Decide orderability via antisymmetry of the natural quasiorder.

    The absorption criterion (a+x+y=a implies a+x=a) is evaluated
    independently over all triples; the two must agree, otherwise the run
    aborts.  Returns (True, natural PartialOrder) or (False, triple witness).
    """
    q = natural_quasiorder(s)
    anti = _antisymmetry_witness(q.rel)
    triple = _absorption_witness(s)
    if (anti is None) != (triple is None):
        raise InternalConsistencyError(
            f"antisymmetry and absorption criteria disagree: {anti} vs {triple}")
    if triple is None:
        return True, PartialOrder(q.rel)
    return False, triple


@lru_cache(maxsize=None)
def all_partial_orders(n: int):
    """Every partial order on {0..n-1}, in lexicographic bitmask order."""
    if n > 4:
        raise ValueError(f"partial-order enumeration supported for n <= 4, got {n}")
    cells = [(i, j) for i in range(n) for j in range(n) if i != j]
    out = []
    for bits in itertools.product((False, True), repeat=len(cells)):
        mat = [[i == j for j in range(n)] for i in range(n)]
        for (i, j), b in zip(cells, bits):
            mat[i][j] = b
        rel = tuple(tuple(row) for row in mat)
        if is_partial_order(rel):
            out.append(PartialOrder(rel))
    return tuple(out)


@dataclass(frozen=True)
class OrderSearch:
    """Tri-state outcome: found / none / inconclusive (budget ran out)."""

    status: str
    order: PartialOrder | None = None
    examined: int = 0


def check_ordered_semiring(s: FiniteSemiring, o: PartialOrder) -> CheckReport:
    """Verify weak monotonicity of + and * and minimality of 0 under o."""
    if o.n != s.n:
        raise StructureError("order size does not match carrier")
    if not is_partial_order(o.rel):
        raise StructureError("relation is not a partial order")
    n, add, mul = s.n, s.add, s.mul
    rng = range(n)
    violations = []

    def first(law, gen):
        for w in gen:
            violations.append((law, w))
            return

    first("zero-least", ((a,) for a in rng if not o.leq(s.zero, a)))
    first("add-monotone",
          ((a, b, x) for a in rng for b in rng if o.leq(a, b)
           for x in rng if not o.leq(add[a][x], add[b][x])))
    first("mul-monotone-right",
          ((a, b, x) for a in rng for b in rng if o.leq(a, b)
           for x in rng if not o.leq(mul[a][x], mul[b][x])))
    first("mul-monotone-left",
          ((a, b, x) for a in rng for b in rng if o.leq(a, b)
           for x in rng if not o.leq(mul[x][a], mul[x][b])))
    return CheckReport.build(violations)


def search_compatible_order(s: FiniteSemiring, budget: int | None = None) -> OrderSearch:
    """Exhaustive search for a compatible order; independent oracle for
    is_orderable.  Never silently truncates: running out of budget yields an
    explicit "inconclusive" result."""
    examined = 0
    for o in all_partial_orders(s.n):
        if budget is not None and examined >= budget:
            return OrderSearch("inconclusive", None, examined)
        examined += 1
        if check_ordered_semiring(s, o).passed:
            return OrderSearch("found", o, examined)
    return OrderSearch("none", None, examined)


def is_zero_sum_free(s: FiniteSemiring):
    """True iff x+y = 0 has no solution with x, y nonzero."""
    for x in range(s.n):
        if x == s.zero:
            continue
        for y in range(s.n):
            if y != s.zero and s.add[x][y] == s.zero:
                return False, (x, y)
    return True, None


_LABELS = ("0", "1", "a", "b", "c", "d")


def _assoc(table, n) -> bool:
    for a in range(n):
        ta = table[a]
        for b in range(n):
            tab = table[ta[b]]
            tb = table[b]
            for c in range(n):
                if tab[c] != ta[tb[c]]:
                    return False
    return True


@lru_cache(maxsize=None)
def _comm_monoid_tables(n: int):
    """All commutative monoid tables on {0..n-1} with identity 0."""
    cells = [(i, j) for i in range(1, n) for j in range(i, n)]
    out = []
    for vals in itertools.product(range(n), repeat=len(cells)):
        t = [[0] * n for _ in range(n)]
        for i in range(n):
            t[0][i] = t[i][0] = i
        for (i, j), v in zip(cells, vals):
            t[i][j] = t[j][i] = v
        if _assoc(t, n):
            out.append(tuple(tuple(row) for row in t))
    return tuple(out)


@lru_cache(maxsize=None)
def _monoid_tables(n: int):
    """All monoid tables on {0..n-1} with identity 1 (n >= 2)."""
    cells = [(i, j) for i in range(n) for j in range(n) if i != 1 and j != 1]
    out = []
    for vals in itertools.product(range(n), repeat=len(cells)):
        t = [[0] * n for _ in range(n)]
        for i in range(n):
            t[1][i] = t[i][1] = i
        for (i, j), v in zip(cells, vals):
            t[i][j] = v
        if _assoc(t, n):
            out.append(tuple(tuple(row) for row in t))
    return tuple(out)


def _distributive(add, mul, n) -> bool:
    for x in range(n):
        mx = mul[x]
        for y in range(n):
            for z in range(n):
                yz = add[y][z]
                if mul[x][yz] != add[mx[y]][mx[z]]:
                    return False
                if mul[yz][x] != add[mul[y][x]][mul[z][x]]:
                    return False
    return True


def _absorbing(mul, n, zero=0) -> bool:
    return all(mul[zero][a] == zero == mul[a][zero] for a in range(n))


def enumerate_semirings(n: int):
    """Yield every semiring table on n elements, with zero = 0 and one = 1
    fixed (no quotient by isomorphism).  Exhaustive mode refuses n > 3."""
    if n < 1:
        raise ValueError("carrier size must be positive")
    if n == 1:
        yield FiniteSemiring(("0",), 0, 0, ((0,),), ((0,),))
        return
    if n > 3:
        raise ValueError(f"exhaustive enumeration is limited to n <= 3, got {n}")
    labels = _LABELS[:n]
    for add in _comm_monoid_tables(n):
        for mul in _monoid_tables(n):
            if _absorbing(mul, n) and _distributive(add, mul, n):
                yield FiniteSemiring(labels, 0, 1, add, mul)


@lru_cache(maxsize=None)
def _distributive_partners(n: int, add):
    return tuple(m for m in _monoid_tables(n)
                 if _absorbing(m, n) and _distributive(add, m, n))


def random_semiring(n: int, seed: int) -> FiniteSemiring:
    """Deterministic seeded sample from the semirings on n elements
    (zero = 0, one = 1): rejection over addition tables, then a uniform
    choice among that table's distributive partners."""
    if n < 2:
        raise ValueError("random sampling needs n >= 2")
    if n > 4:
        raise ValueError(f"random sampling is limited to n <= 4, got {n}")
    rng = random.Random(seed)
    adds = _comm_monoid_tables(n)
    labels = _LABELS[:n]
    while True:
        add = adds[rng.randrange(len(adds))]
        partners = _distributive_partners(n, add)
        if partners:
            return FiniteSemiring(labels, 0, 1, add, rng.choice(partners))


def semiring_to_json(s: FiniteSemiring, order: PartialOrder | None = None) -> str:
    doc = {
        "elements": list(s.elements),
        "zero": s.zero,
        "one": s.one,
        "add": [list(row) for row in s.add],
        "mul": [list(row) for row in s.mul],
    }
    if order is not None:
        doc["order"] = order.pairs()
    return json.dumps(doc, sort_keys=True)


def semiring_from_json(text: str):
    """Parse the FiniteSemiring JSON document; returns (semiring, order|None).

    Raises StructureError on any malformed content (the CLI maps that to
    exit code 2, distinct from axiom violations)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise StructureError(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}")
    if not isinstance(doc, dict):
        raise StructureError("top-level JSON value must be an object")
    for key in ("elements", "zero", "one", "add", "mul"):
        if key not in doc:
            raise StructureError(f"missing field {key!r}")
    elements = doc["elements"]
    if (not isinstance(elements, list) or not elements
            or not all(isinstance(x, str) for x in elements)):
        raise StructureError("elements must be a non-empty list of strings")
    for key in ("zero", "one"):
        if not isinstance(doc[key], int):
            raise StructureError(f"{key} must be an integer index")
    for key in ("add", "mul"):
        t = doc[key]
        if not isinstance(t, list) or not all(isinstance(r, list) for r in t):
            raise StructureError(f"{key} must be a matrix (list of lists)")
    s = FiniteSemiring.from_tables(elements, doc["zero"], doc["one"],
                                   doc["add"], doc["mul"])
    _validate_structure(s)
    order = None
    if "order" in doc:
        pairs = doc["order"]
        if not isinstance(pairs, list) or not all(
                isinstance(p, list) and len(p) == 2 for p in pairs):
            raise StructureError("order must be a list of [i, j] pairs")
        order = PartialOrder.from_pairs(s.n, [tuple(p) for p in pairs])
    return s, order

"""The acceptance suite: nine reproducible criteria covering the semiring
laws, the orderability equivalences, the infinite-sum axioms, the example
classification matrix, the finitary-completion facts, the adjunction caveat
and the negative result.  Everything is exact; there are no tolerances.

The suite is deterministic per seed, so a rerun must produce a byte-identical
report (that is itself the last criterion)."""

from __future__ import annotations

from dataclasses import dataclass

from . import gallery
from .cardinal import (ALEPH0, PartitionGeneratorConfig, UNCOUNTABLE,
                       characteristic_cardinality, family_battery,
                       is_d_complete, is_finitary, omega_sequence_battery)
from .cardinal import check_sigma_axioms as sigma_axiom_battery
from .completion import (completion_of_finite, no_universal_complete_demo,
                         unique_finitary_sigma)
from .core import (FiniteSemiring, check_semiring_axioms, enumerate_semirings,
                   is_orderable, is_zero_sum_free, random_semiring,
                   search_compatible_order)
from .gallery import (adjoin_infinity, boolean, sampled_semiring_laws,
                      search_distributivity_violation)
from .series import Polynomial, enumerate_below, evaluate_phi


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 1
    families: int = 500
    sequences: int = 200
    triples: int = 300
    size4_samples: int = 200


@dataclass(frozen=True)
class CriterionResult:
    index: int
    slug: str
    passed: bool
    detail: str


def _sigma_members(cfg: SuiteConfig):
    return [
        gallery.nat_infinity(),
        gallery.powerset_semiring("abc"),
        gallery.language_semiring("a", 2),
        gallery.three_valued(),
        gallery.four_valued(),
        gallery.omega_plus_reverse(),
        adjoin_infinity(boolean()),
    ]


def _size3_semirings():
    out = []
    for n in (1, 2, 3):
        out.extend(enumerate_semirings(n))
    return out


# --- criterion 1 -----------------------------------------------------------

def criterion_semiring_laws(cfg: SuiteConfig) -> CriterionResult:
    bad = []
    counts = {1: 0, 2: 0, 3: 0}
    for s in _size3_semirings():
        counts[s.n] += 1
        if not check_semiring_axioms(s).passed:
            bad.append(f"enumerated n={s.n}")
    for member in _sigma_members(cfg):
        if member.is_finite:
            if not check_semiring_axioms(member.base).passed:
                bad.append(member.name)
        else:
            if not sampled_semiring_laws(member, 8).passed:
                bad.append(member.name)
    detail = (f"enumerated {counts[1]}+{counts[2]}+{counts[3]} tables of size 1..3 "
              f"and 7 gallery members" + (f"; failures: {bad}" if bad else ""))
    return CriterionResult(1, "semiring-laws", not bad, detail)


# --- criterion 2 -----------------------------------------------------------

def criterion_orderability(cfg: SuiteConfig) -> CriterionResult:
    disagreements = []
    small = 0
    for s in _size3_semirings():
        small += 1
        ok, _ = is_orderable(s)
        found = search_compatible_order(s)
        if found.status == "inconclusive" or ok != (found.status == "found"):
            disagreements.append(f"n={s.n} tables={s.add}/{s.mul}")
    distinct = set()
    for i in range(cfg.size4_samples):
        s = random_semiring(4, cfg.seed + i)
        distinct.add((s.add, s.mul))
        ok, _ = is_orderable(s)
        found = search_compatible_order(s)
        if found.status == "inconclusive" or ok != (found.status == "found"):
            disagreements.append(f"n=4 seed={cfg.seed + i}")
    detail = (f"agreement on {small} exhaustive tables (n<=3) and "
              f"{cfg.size4_samples} samples (n=4, {len(distinct)} distinct)"
              + (f"; disagreements: {disagreements}" if disagreements else ""))
    return CriterionResult(2, "orderability-equivalence", not disagreements,
                           detail)


# --- criterion 3 -----------------------------------------------------------

def criterion_sigma_axioms(cfg: SuiteConfig) -> CriterionResult:
    failures = []
    for member in _sigma_members(cfg):
        rep = sigma_axiom_battery(member, PartitionGeneratorConfig(
            seed=cfg.seed, families=cfg.families))
        if not rep.passed:
            failures.append(f"{member.name}: {rep.law_names()}")
    detail = (f"five-axiom battery, {cfg.families} families each, on 7 members"
              + (f"; failures: {failures}" if failures else ""))
    return CriterionResult(3, "sigma-axioms", not failures, detail)


# --- criterion 4 -----------------------------------------------------------

def _classify(member, cfg: SuiteConfig):
    d_ok, d_wit = is_d_complete(
        member, omega_sequence_battery(member, cfg.seed, cfg.sequences))
    if member.has_order:
        f_ok, f_wit = is_finitary(member, family_battery(member, cfg.seed,
                                                         cfg.families))
    else:
        f_ok, f_wit = None, None
    lam = characteristic_cardinality(member)
    return d_ok, d_wit, f_ok, f_wit, lam


def criterion_classification(cfg: SuiteConfig) -> CriterionResult:
    problems = []
    members = {m.name: m for m in _sigma_members(cfg)}

    for name in ("nat-infinity", "powerset:3", "lang:1:2"):
        d_ok, _, f_ok, _, _ = _classify(members[name], cfg)
        if not (d_ok and f_ok):
            problems.append(f"{name} should be finitary and d-complete")

    three = members["three-valued"]
    d_ok, d_wit, _, _, _ = _classify(three, cfg)
    if d_ok:
        problems.append("three-valued should fail d-completeness")
    else:
        want = (three.base.index_of("finite"),)
        if d_wit.sequence.cycle != want or d_wit.sequence.prefix != ():
            problems.append(f"three-valued witness is {d_wit.sequence}, expected "
                            f"the constant 'finite' sequence")

    four = members["four-valued"]
    d_ok, _, f_ok, f_wit, lam = _classify(four, cfg)
    if not d_ok:
        problems.append("four-valued should be d-complete")
    if f_ok:
        problems.append("four-valued should fail the finitary test")
    if lam.lambda1 != UNCOUNTABLE:
        problems.append(f"four-valued lambda1 is {lam.lambda1!r}, expected uncountable")

    omega = members["omega-minus"]
    d_ok, _, f_ok, f_wit, lam = _classify(omega, cfg)
    if not d_ok:
        problems.append("omega-minus should be d-complete")
    if lam.lambda1 != ALEPH0:
        problems.append(f"omega-minus lambda1 is {lam.lambda1!r}, expected aleph0")
    if f_ok:
        problems.append("omega-minus should fail the finitary test")
    elif f_wit.reason != "sup-missing":
        problems.append(f"omega-minus witness should be a missing sup, got "
                        f"{f_wit.reason}")
    detail = ("classification matrix for the six example semirings"
              + (f"; problems: {problems}" if problems else ""))
    return CriterionResult(4, "classification-matrix", not problems, detail)


# --- criterion 5 -----------------------------------------------------------

def _symbolic_orderable(member, k: int = 7) -> bool:
    sample = member.sample(k)
    for a in sample:
        for x in sample:
            ax = member.plus(a, x)
            if ax == a:
                continue
            for y in sample:
                if member.plus(ax, y) == a:
                    return False
    return True


def criterion_fact_implications(cfg: SuiteConfig) -> CriterionResult:
    members = list(_sigma_members(cfg))
    extra = 0
    for s in _size3_semirings():
        if s.n == 3 and is_zero_sum_free(s)[0] and extra < 15:
            members.append(adjoin_infinity(s))
            extra += 1
    counterexamples = []
    for m in members:
        d_ok, _, f_ok, _, lam = _classify(m, cfg)
        if m.is_finite:
            orderable = is_orderable(m.base)[0]
        else:
            orderable = _symbolic_orderable(m)
        if f_ok and not d_ok:
            counterexamples.append(f"{m.name}: finitary but not d-complete")
        if f_ok and lam.lambda1 > ALEPH0:
            counterexamples.append(f"{m.name}: finitary but lambda1 uncountable")
        if d_ok and not orderable:
            counterexamples.append(f"{m.name}: d-complete but not orderable")
        if m.is_finite and d_ok and lam.lambda1 <= ALEPH0 and not f_ok:
            counterexamples.append(
                f"{m.name}: finite, d-complete, small characteristic, not finitary")
    detail = (f"four implications over {len(members)} members (gallery plus "
              f"{extra + 1} infinity adjunctions)"
              + (f"; counterexamples: {counterexamples}" if counterexamples else ""))
    return CriterionResult(5, "fact-implications", not counterexamples, detail)


# --- criterion 6 -----------------------------------------------------------

def _poly_universe(s: FiniteSemiring):
    """All polynomials with support <= 2, coefficients <= 2, over words of
    length <= 2."""
    words = [()]
    words += [(a,) for a in range(s.n)]
    words += [(a, b) for a in range(s.n) for b in range(s.n)]
    polys = [Polynomial()]
    for i, w in enumerate(words):
        for c in (1, 2):
            polys.append(Polynomial({w: c}))
            for w2 in words[i + 1:]:
                for c2 in (1, 2):
                    polys.append(Polynomial({w: c, w2: c2}))
    return polys


def _collapse_holds_exhaustively(s: FiniteSemiring, o) -> tuple[bool, int]:
    """p ~ q iff phi(p) = phi(q), checked through brute-force enumeration of
    the polynomials below each side.

    The two-sided comparison of p and q depends only on (phi(p), the phi
    image of the below-set of p) and likewise for q, so grouping the
    universe by that signature covers every pair exactly."""
    phi = {}
    universe = _poly_universe(s)
    for p in universe:
        phi[p] = evaluate_phi(p, s)
    sigs = {}
    for p in universe:
        below_vals = frozenset(phi[q] if q in phi else evaluate_phi(q, s)
                               for q in enumerate_below(p))
        sig = (phi[p], below_vals)
        sigs.setdefault(sig, 0)
        sigs[sig] += 1

    def half(a_vals, b_vals):
        return all(any(o.leq(x, y) for y in b_vals) for x in a_vals)

    sig_list = sorted(sigs, key=repr)
    for sa in sig_list:
        for sb in sig_list:
            sim = half(sa[1], sb[1]) and half(sb[1], sa[1])
            if sim != (sa[0] == sb[0]):
                return False, len(universe)
    return True, len(universe)


def criterion_main_theorem(cfg: SuiteConfig) -> CriterionResult:
    problems = []
    ordered = 0
    for s in _size3_semirings():
        ok, wit = is_orderable(s)
        if not ok:
            continue
        ordered += 1
        result = completion_of_finite(s, wit, seed=cfg.seed,
                                      families=60, sequences=40)
        if not result.finitary_report.passed:
            problems.append(f"completion battery failed on n={s.n} "
                            f"{result.finitary_report.law_names()}")
            continue
        if not unique_finitary_sigma(result.semiring, cfg.seed, 60).passed:
            problems.append(f"induced sigma not the unique finitary one, n={s.n}")
            continue
        holds, size = _collapse_holds_exhaustively(s, wit)
        if not holds:
            problems.append(f"congruence collapse failed on n={s.n} "
                            f"({size} polynomials)")
    detail = (f"completion + unique-sigma + exhaustive congruence collapse on "
              f"{ordered} ordered semirings of size <= 3"
              + (f"; problems: {problems[:3]}" if problems else ""))
    return CriterionResult(6, "main-theorem-desk", not problems, detail)


# --- criterion 7 -----------------------------------------------------------

def criterion_adjunction_caveat(cfg: SuiteConfig) -> CriterionResult:
    problems = []
    pool = [s for s in enumerate_semirings(3) if is_zero_sum_free(s)[0]]
    with_divisors = [s for s in pool
                     if any(s.mul[x][a] == s.zero
                            for x in range(1, s.n) for a in range(1, s.n)
                            if x != s.zero and a != s.zero)]
    witness = search_distributivity_violation(with_divisors)
    if witness is None:
        problems.append("no infinite-distributivity violation found")
    else:
        t = adjoin_infinity(witness.semiring)
        total = t.sigma(witness.family)
        replay = (t.times(witness.element, total) if witness.side == "left"
                  else t.times(total, witness.element))
        if replay != witness.product_of_sum:
            problems.append("witness replay did not reproduce the inequality")
    clean = 0
    for s in pool[:20]:
        rep = sigma_axiom_battery(adjoin_infinity(s), PartitionGeneratorConfig(
            seed=cfg.seed, families=max(60, cfg.families // 8)))
        bad = [name for name in rep.law_names()
               if not name.startswith("sigma-distributivity")]
        if bad:
            problems.append(f"adjunction broke a non-distributivity axiom: {bad}")
        else:
            clean += 1
    detail = (f"violation found over {len(with_divisors)} zero-divisor tables; "
              f"other four axiom groups clean on {clean} adjunctions"
              + (f"; problems: {problems}" if problems else ""))
    return CriterionResult(7, "adjunction-caveat", not problems, detail)


# --- criterion 8 -----------------------------------------------------------

def criterion_negative_result(cfg: SuiteConfig) -> CriterionResult:
    record = no_universal_complete_demo()
    problems = []
    if record.lambda1_nat_infinity != ALEPH0:
        problems.append(f"lambda1 of nat-infinity is {record.lambda1_nat_infinity!r}")
    if record.lambda1_four_valued != UNCOUNTABLE:
        problems.append(f"lambda1 of four-valued is {record.lambda1_four_valued!r}")
    if not record.identified_in_nat_infinity():
        problems.append("nat-infinity should identify the two sums of ones")
    if not record.separated_in_four_valued():
        problems.append("four-valued should separate the two sums of ones")
    detail = (f"lambda1: aleph0 vs uncountable; sums of ones: "
              f"{record.four_sigma_aleph0!r} != {record.four_sigma_uncountable!r} "
              f"in the cardinal chain, both inf over the naturals"
              + (f"; problems: {problems}" if problems else ""))
    return CriterionResult(8, "no-universal-completion", not problems, detail)


# --- assembly --------------------------------------------------------------

_CRITERIA = (
    criterion_semiring_laws,
    criterion_orderability,
    criterion_sigma_axioms,
    criterion_classification,
    criterion_fact_implications,
    criterion_main_theorem,
    criterion_adjunction_caveat,
    criterion_negative_result,
)


def run_criteria(cfg: SuiteConfig):
    return [fn(cfg) for fn in _CRITERIA]


def format_report(results, cfg: SuiteConfig) -> str:
    lines = [f"selftest seed={cfg.seed} families={cfg.families} "
             f"sequences={cfg.sequences} triples={cfg.triples}"]
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        lines.append(f"{mark} criterion-{r.index} {r.slug}: {r.detail}")
    return "\n".join(lines)


def run_selftest(cfg: SuiteConfig) -> tuple[int, str]:
    """Run the suite twice; the determinism criterion compares the two
    reports byte for byte."""
    results = run_criteria(cfg)
    first = format_report(results, cfg)
    second = format_report(run_criteria(cfg), cfg)
    stable = first == second
    passes = sum(1 for r in results if r.passed) + (1 if stable else 0)
    mark = "PASS" if stable else "FAIL"
    c9 = (f"{mark} criterion-9 determinism: "
          + ("repeated run is byte-identical" if stable
             else "reports differ between runs"))
    total = all(r.passed for r in results) and stable
    body = f"{first}\n{c9}\nresult {'PASS' if total else 'FAIL'} {passes}/9"
    return (0 if total else 1), body

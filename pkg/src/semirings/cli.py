"""Batch front door: ingest semiring definitions, run the check suites and
constructions, and emit deterministic reports.

Exit codes: 0 success, 1 mathematical failure (with witnesses), 2 input
error (parse or structural).  The three are never conflated.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .cardinal import (CardinalFamily, PartitionGeneratorConfig, SigmaSemiring,
                       family_battery, family_from_json, is_d_complete,
                       is_finitary, omega_sequence_battery,
                       omega_sequence_from_json, parse_cardinal)
from .cardinal import check_sigma_axioms as sigma_axiom_battery
from .completion import (NotOrderableError, completion_of_finite, sim_verdict)
from .core import (FiniteSemiring, StructureError, check_semiring_axioms,
                   is_orderable, is_zero_sum_free, natural_quasiorder,
                   semiring_from_json)
from .gallery import adjoin_infinity, gallery_names, gallery_semiring
from .series import poly_from_text, poly_to_text
from .suite import SuiteConfig, run_selftest


@dataclass(frozen=True)
class RunConfig:
    command: str
    inputs: tuple[str, ...]
    seed: int = 1
    families: int = 500
    sequences: int = 200
    triples: int = 300
    maxlen: int = 3
    cap: int = 3
    fmt: str = "human"


class InputError(Exception):
    """Anything wrong with the request itself; mapped to exit code 2."""


def _load_finite(source: str):
    """Resolve an input to (FiniteSemiring, optional order): a JSON path or
    a gallery name with a finite carrier."""
    path = Path(source)
    if path.suffix == ".json" or path.exists():
        try:
            return semiring_from_json(path.read_text(encoding="utf-8"))
        except OSError as e:
            raise InputError(f"cannot read {source}: {e}") from None
        except StructureError as e:
            raise InputError(f"{source}: {e}") from None
    try:
        member = gallery_semiring(source)
    except (KeyError, ValueError) as e:
        raise InputError(str(e)) from None
    if isinstance(member, FiniteSemiring):
        return member, None
    if isinstance(member, SigmaSemiring) and member.is_finite:
        return member.base, member.order
    raise InputError(f"{source} has an infinite carrier; this command needs tables")


def _load_sigma(source: str) -> SigmaSemiring:
    """Resolve an input to a SigmaSemiring: a gallery name, adjoin-inf:<file>,
    or a JSON path (orderable tables get their completion Sigma)."""
    if source.startswith("adjoin-inf:"):
        inner, _ = _load_finite(source[len("adjoin-inf:"):])
        return adjoin_infinity(inner)
    path = Path(source)
    if path.suffix == ".json" or path.exists():
        s, order = _load_finite(source)
        try:
            return completion_of_finite(s, order).semiring
        except NotOrderableError as e:
            raise InputError(f"{source}: {e}") from None
    try:
        member = gallery_semiring(source)
    except (KeyError, ValueError) as e:
        raise InputError(str(e)) from None
    if isinstance(member, FiniteSemiring):
        return completion_of_finite(member).semiring
    if not member.has_sigma:
        raise InputError(f"{source} carries no infinite-sum operator; "
                         f"try 'complete {source}'")
    return member


def _emit(cfg: RunConfig, payload: dict) -> None:
    if cfg.fmt == "json":
        print(json.dumps(payload, sort_keys=True, default=repr))
        return
    for key, value in payload.items():
        if isinstance(value, list):
            print(f"{key}:")
            for item in value:
                print(f"  {item}")
        else:
            print(f"{key}: {value}")


def _order_matrix(rel) -> list[str]:
    return ["".join("1" if x else "0" for x in row) for row in rel]


def cmd_check(cfg: RunConfig) -> int:
    s, _ = _load_finite(cfg.inputs[0])
    report = check_semiring_axioms(s)
    payload = {
        "command": "check",
        "input": cfg.inputs[0],
        "elements": list(s.elements),
        "axioms": "pass" if report.passed else "fail",
        "violations": [f"{law} at {wit}" for law, wit in report.violations],
    }
    if report.passed:
        orderable, wit = is_orderable(s)
        zsf, zwit = is_zero_sum_free(s)
        payload["natural-quasiorder"] = _order_matrix(natural_quasiorder(s).rel)
        payload["orderable"] = orderable
        if not orderable:
            a, x, y = wit
            payload["orderable-witness"] = (
                f"{s.label(a)}+{s.label(x)}+{s.label(y)} = {s.label(a)} "
                f"but {s.label(a)}+{s.label(x)} != {s.label(a)}")
        payload["zero-sum-free"] = zsf
        if not zsf:
            payload["zero-sum-witness"] = f"{s.label(zwit[0])}+{s.label(zwit[1])} = 0"
    _emit(cfg, payload)
    return 0 if report.passed else 1


def cmd_order(cfg: RunConfig) -> int:
    s, _ = _load_finite(cfg.inputs[0])
    report = check_semiring_axioms(s)
    if not report.passed:
        _emit(cfg, {"command": "order", "input": cfg.inputs[0], "axioms": "fail",
                    "violations": [f"{law} at {wit}" for law, wit in report.violations]})
        return 1
    orderable, wit = is_orderable(s)
    payload = {
        "command": "order",
        "input": cfg.inputs[0],
        "natural-quasiorder": _order_matrix(natural_quasiorder(s).rel),
        "orderable": orderable,
    }
    if orderable:
        payload["natural-order"] = _order_matrix(wit.rel)
    else:
        payload["witness-triple"] = [s.label(i) for i in wit]
    _emit(cfg, payload)
    return 0 if orderable else 1


_SIGMA_PROBE = ("fin:1", "fin:2", "fin:3", "aleph0", "uncountable")


def _sigma_table(c: SigmaSemiring, probe_elems) -> list[str]:
    rows = []
    for v in probe_elems:
        cells = []
        for t in _SIGMA_PROBE:
            val = c.sigma(CardinalFamily({v: parse_cardinal(t)}))
            cells.append(f"{t}->{c.label_of(val)}")
        rows.append(f"{c.label_of(v)}: " + " ".join(cells))
    return rows


def cmd_complete(cfg: RunConfig) -> int:
    source = cfg.inputs[0]
    if source == "nat":
        ninf = gallery_semiring("nat-infinity")
        payload = {
            "command": "complete",
            "input": "nat",
            "completion": "nat-infinity",
            "note": "adds the top element inf; sigma is the least upper "
                    "bound of the finite subsums",
            "sigma-table": _sigma_table(ninf, ninf.sample(4)),
        }
        _emit(cfg, payload)
        return 0
    s, order = _load_finite(source)
    try:
        result = completion_of_finite(s, order, seed=cfg.seed,
                                      families=max(60, cfg.families // 4),
                                      sequences=max(40, cfg.sequences // 4))
    except NotOrderableError as e:
        a, x, y = e.witness
        _emit(cfg, {"command": "complete", "input": source, "orderable": False,
                    "witness": f"{s.label(a)}+{s.label(x)}+{s.label(y)} = "
                               f"{s.label(a)} but {s.label(a)}+{s.label(x)} "
                               f"!= {s.label(a)}"})
        return 1
    comp = result.semiring
    payload = {
        "command": "complete",
        "input": source,
        "orderable": True,
        "embedding": [f"{s.label(i)}->{s.label(j)}" for i, j in
                      enumerate(result.embedding)],
        "sigma-table": _sigma_table(comp, comp.sample(6)),
        "finitary-report": "pass" if result.finitary_report.passed else "fail",
        "violations": [f"{law}" for law, _ in result.finitary_report.violations],
    }
    _emit(cfg, payload)
    return 0 if result.finitary_report.passed else 1


def _read_lines(path: str):
    try:
        return Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from None


def cmd_dcomplete(cfg: RunConfig) -> int:
    c = _load_sigma(cfg.inputs[0])
    seqs = omega_sequence_battery(c, cfg.seed, cfg.sequences)
    if len(cfg.inputs) > 1:
        # one {"prefix": [...], "cycle": [...]} document per line
        seqs = [omega_sequence_from_json(c, line)
                for line in _read_lines(cfg.inputs[1]) if line.strip()]
    ok, witness = is_d_complete(c, seqs)
    payload = {"command": "dcomplete", "input": cfg.inputs[0],
               "d-complete": ok, "sequences": len(seqs)}
    if not ok:
        payload["witness"] = (
            f"prefix={[c.label_of(v) for v in witness.sequence.prefix]} "
            f"cycle={[c.label_of(v) for v in witness.sequence.cycle]} "
            f"partial-sums-constant={c.label_of(witness.constant)} "
            f"sigma={c.label_of(witness.sigma_value)}")
    _emit(cfg, payload)
    return 0 if ok else 1


def cmd_finitary(cfg: RunConfig) -> int:
    c = _load_sigma(cfg.inputs[0])
    if not c.has_order:
        raise InputError(f"{c.name} carries no order; the finitary test "
                         f"needs one")
    fams = family_battery(c, cfg.seed, cfg.families)
    if len(cfg.inputs) > 1:
        # one {"family": {...}} document per line
        fams = [family_from_json(c, line)
                for line in _read_lines(cfg.inputs[1]) if line.strip()]
    ok, witness = is_finitary(c, fams)
    payload = {"command": "finitary", "input": cfg.inputs[0], "finitary": ok,
               "families": len(fams)}
    if not ok:
        fam = ", ".join(f"{c.label_of(v)}:{m.label()}" for v, m in
                        witness.family.items())
        payload["witness"] = (f"family {{{fam}}}: {witness.reason}, "
                              f"sigma={c.label_of(witness.sigma_value)}")
        if witness.sup_value is not None:
            payload["witness"] += f", sup={c.label_of(witness.sup_value)}"
    _emit(cfg, payload)
    return 0 if ok else 1


def cmd_congruence(cfg: RunConfig) -> int:
    source, left, right = cfg.inputs
    s, order = _load_finite(source)
    report = check_semiring_axioms(s)
    if not report.passed:
        raise InputError(f"{source} is not a semiring: {report.law_names()}")
    orderable, wit = is_orderable(s)
    if not orderable:
        _emit(cfg, {"command": "congruence", "input": source, "orderable": False,
                    "witness-triple": [s.label(i) for i in wit]})
        return 1
    order = order if order is not None else wit
    try:
        p = poly_from_text(left, s)
        q = poly_from_text(right, s)
    except (ValueError, StructureError) as e:
        raise InputError(str(e)) from None
    verdict = sim_verdict(p, q, s, order, cfg.cap)
    payload = {
        "command": "congruence",
        "input": source,
        "left": poly_to_text(p, s),
        "right": poly_to_text(q, s),
        "lesssim-forward": verdict.lesssim_forward,
        "lesssim-backward": verdict.lesssim_backward,
        "sim": verdict.sim,
        "inconclusive": verdict.inconclusive,
        "witness": (poly_to_text(verdict.witness, s)
                    if verdict.witness is not None else None),
    }
    _emit(cfg, payload)
    return 0


def cmd_gallery(cfg: RunConfig) -> int:
    if not cfg.inputs:
        _emit(cfg, {"command": "gallery", "names": gallery_names()})
        return 0
    member = gallery_semiring(cfg.inputs[0])
    if isinstance(member, FiniteSemiring):
        payload = {"command": "gallery", "name": cfg.inputs[0],
                   "kind": "finite semiring", "elements": list(member.elements)}
    else:
        payload = {"command": "gallery", "name": member.name,
                   "kind": ("finite carrier" if member.is_finite
                            else "symbolic carrier"),
                   "ordered": member.has_order,
                   "sigma": member.has_sigma,
                   "sample": [member.label_of(v) for v in member.sample(8)]}
        if member.has_sigma:
            payload["sigma-table"] = _sigma_table(member, member.sample(4))
        report = sigma_axiom_battery(member, PartitionGeneratorConfig(
            seed=cfg.seed, families=max(40, cfg.families // 10)))
        payload["sigma-axioms"] = "pass" if report.passed else "fail"
    _emit(cfg, payload)
    return 0


def cmd_selftest(cfg: RunConfig) -> int:
    code, body = run_selftest(SuiteConfig(seed=cfg.seed, families=cfg.families,
                                          sequences=cfg.sequences,
                                          triples=cfg.triples))
    if cfg.fmt == "json":
        lines = body.splitlines()
        print(json.dumps({"command": "selftest", "seed": cfg.seed,
                          "lines": lines, "passed": code == 0},
                         sort_keys=True))
    else:
        print(body)
    return code


_COMMANDS = {
    "check": (cmd_check, (1, 1)),
    "order": (cmd_order, (1, 1)),
    "complete": (cmd_complete, (1, 1)),
    "dcomplete": (cmd_dcomplete, (1, 2)),
    "finitary": (cmd_finitary, (1, 2)),
    "congruence": (cmd_congruence, (3, 3)),
    "gallery": (cmd_gallery, (0, 1)),
    "selftest": (cmd_selftest, (0, 0)),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semirings",
        description="Decision procedures for finite semirings, infinite sums "
                    "over cardinal families, and finitary completions.")
    parser.add_argument("command", choices=sorted(_COMMANDS))
    parser.add_argument("inputs", nargs="*",
                        help="semiring JSON path or gallery name; congruence "
                             "also takes two polynomial strings like '2*[a] + 1*[a.b]'")
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--battery", type=int, default=None,
                        help="override the family battery size")
    parser.add_argument("--maxlen", type=int, default=3)
    parser.add_argument("--cap", type=int, default=3)
    parser.add_argument("--format", choices=("human", "json"), default="human")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    fn, (lo, hi) = _COMMANDS[args.command]
    if not lo <= len(args.inputs) <= hi:
        print(f"error: {args.command} takes {lo}"
              + (f"..{hi}" if hi != lo else "")
              + f" input argument(s), got {len(args.inputs)}", file=sys.stderr)
        return 2
    cfg = RunConfig(
        command=args.command,
        inputs=tuple(args.inputs),
        seed=args.seed,
        families=args.battery if args.battery is not None else 500,
        sequences=max(40, (args.battery or 500) * 2 // 5),
        triples=max(40, (args.battery or 500) * 3 // 5),
        maxlen=args.maxlen,
        cap=args.cap,
        fmt=args.format,
    )
    try:
        return fn(cfg)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except StructureError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: every computation as a reproducible invocation.

All output goes to stdout, JSON by default (``--format table`` for a
human layout).  JSON is canonical: keys sorted, no spaces, so parsing
and re-serializing a report is byte-identical.  Matrix and coordinate
entries are serialized as decimal strings since they are arbitrary-
precision integers; small structural numbers (box sides, degrees,
indices) stay plain.

Exit status: 0 for success and true verdicts, 1 when a computation
reaches a failing verdict or a structured error (non-integral expansion,
wall point), 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import acceptance, bott, flopgeom, kgroup, main_component, weyl
from .partitions import BoxShape, enumerate_box


@dataclass
class CommandConfig:
    """Everything a subcommand needs, normalized from argv."""

    command: str
    t: Optional[int] = None
    h: Optional[int] = None
    i: Optional[int] = None
    weight: Optional[str] = None
    vector: Optional[str] = None
    point: Optional[str] = None
    matrix: Optional[str] = None
    field: Optional[int] = None
    basis: str = "line"
    fmt: str = "json"
    seed: int = 0


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _emit(config: CommandConfig, payload: dict, table_lines) -> None:
    if config.fmt == "json":
        print(canonical_json(payload))
    else:
        for line in table_lines:
            print(line)


def _box(config: CommandConfig, flop: bool = False) -> BoxShape:
    if config.t is None or config.h is None:
        raise UsageError("--t and --h are required")
    if flop and 2 * config.t > config.h:
        raise UsageError(f"flop commands require t <= h/2, got t={config.t}, h={config.h}")
    try:
        return BoxShape.for_grassmannian(config.t, config.h)
    except ValueError as exc:
        raise UsageError(str(exc))


class UsageError(Exception):
    pass


def _matrix_payload(box: BoxShape, matrix: kgroup.IntegerMatrix) -> dict:
    det = matrix.det()
    snf = kgroup.smith_normal_form(matrix)
    return {
        "box": [box.rows, box.cols],
        "basis": [p.text() for p in enumerate_box(box)],
        "matrix": [[str(x) for x in row] for row in matrix.entries],
        "det": str(det),
        "snf": [str(d) for d in snf],
    }


def _matrix_table(payload: dict) -> list[str]:
    lines = [f"box: {payload['box'][0]} x {payload['box'][1]}"]
    lines.append("basis: " + " ".join(payload["basis"]))
    width = max(len(e) for row in payload["matrix"] for e in row)
    for row in payload["matrix"]:
        lines.append(" ".join(e.rjust(width) for e in row))
    lines.append(f"det: {payload['det']}")
    lines.append("snf: " + " ".join(payload["snf"]))
    return lines


# ---------------------------------------------------------------------------
# Subcommand implementations; each returns the exit status
# ---------------------------------------------------------------------------

def _cmd_kbasis(config: CommandConfig) -> int:
    box = _box(config)
    basis = enumerate_box(box)
    payload = {
        "box": [box.rows, box.cols],
        "rank": len(basis),
        "basis": [p.text() for p in basis],
    }
    _emit(config, payload, [f"rank: {len(basis)}", "basis: " + " ".join(payload["basis"])])
    return 0


def _cmd_flop_matrix(config: CommandConfig) -> int:
    box = _box(config, flop=True)
    payload = _matrix_payload(box, kgroup.flop_matrix(box))
    _emit(config, payload, _matrix_table(payload))
    return 0


def _cmd_check_iso(config: CommandConfig) -> int:
    box = _box(config, flop=True)
    det = kgroup.flop_matrix(box).det()
    iso = det in (1, -1)
    payload = {"det": str(det), "isomorphism": iso}
    _emit(config, payload, [f"det: {det}", f"isomorphism: {iso}"])
    return 0 if iso else 1


def _cmd_snf(config: CommandConfig) -> int:
    if config.matrix is not None:
        try:
            entries = json.loads(config.matrix)
            matrix = kgroup.IntegerMatrix(
                [[int(x) for x in row] for row in entries]
            )
        except (ValueError, TypeError) as exc:
            raise UsageError(f"bad --matrix: {exc}")
        snf = kgroup.smith_normal_form(matrix)
        payload = {"snf": [str(d) for d in snf]}
        _emit(config, payload, ["snf: " + " ".join(payload["snf"])])
        return 0
    box = _box(config, flop=True)
    snf = kgroup.smith_normal_form(kgroup.flop_matrix(box))
    payload = {"box": [box.rows, box.cols], "snf": [str(d) for d in snf]}
    _emit(config, payload, ["snf: " + " ".join(payload["snf"])])
    return 0


def _cmd_counterexample(config: CommandConfig) -> int:
    matrix = main_component.main_component_matrix(config.basis)
    snf = kgroup.smith_normal_form(matrix)
    index = main_component.image_index(matrix)
    box = BoxShape.for_grassmannian(1, 3)
    change = main_component.line_basis_matrix(box)
    if config.basis == "line":
        target = ["O(1)", "O", "O(-1)"]
        domain = ["O+(-1)", "O+", "O+(1)"]
    else:
        target = [f"S^{p.text()}" for p in enumerate_box(box)]
        domain = [f"S^{p.text()}+" for p in enumerate_box(box)]
    payload = {
        "basis": config.basis,
        "target_basis": target,
        "domain_basis": domain,
        "images": {
            label: [str(x) for x in matrix.column(j)]
            for j, label in enumerate(domain)
        },
        "matrix": [[str(x) for x in row] for row in matrix.entries],
        "snf": list(snf),
        "index": index if index == "infinite" else int(index),
        "line_basis_in_canonical": [[str(x) for x in row] for row in change.entries],
    }
    lines = [f"basis: {config.basis}"]
    for label in domain:
        lines.append(f"image of {label}: ({', '.join(payload['images'][label])})")
    lines.append(f"snf: {list(snf)}")
    lines.append(f"index: {index}")
    _emit(config, payload, lines)
    return 0


def _cmd_bott(config: CommandConfig) -> int:
    if config.weight is None:
        raise UsageError("--weight is required, e.g. \"-2,-2|0,0\"")
    try:
        weight = bott.Weight.from_text(config.weight)
    except ValueError as exc:
        raise UsageError(f"bad --weight: {exc}")
    if config.t is not None and config.h is not None:
        if (len(weight.a), len(weight.b)) != (config.t, config.h - config.t):
            raise UsageError(
                f"weight blocks {weight.text()} do not match t={config.t}, h={config.h}"
            )
    res = bott.bott_cohomology(weight)
    if res is None:
        payload = {"zero": True}
        lines = ["all cohomology vanishes"]
    else:
        payload = {"degree": res.degree, "dim": res.dim}
        lines = [f"degree: {res.degree}", f"dim: {res.dim}"]
    _emit(config, payload, lines)
    return 0


def _cmd_hodge(config: CommandConfig) -> int:
    box = _box(config)
    table = bott.hodge_numbers(box)
    diag = [table[p][p] for p in range(box.dim + 1)]
    payload = {
        "box": [box.rows, box.cols],
        "diagonal": diag,
        "table": table,
    }
    lines = ["diagonal: " + " ".join(map(str, diag))]
    for row in table:
        lines.append(" ".join(map(str, row)))
    _emit(config, payload, lines)
    return 0


def _parse_scalars(text: str, field: Optional[int], expect: int):
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != expect:
        raise UsageError(f"expected {expect} comma-separated values, got {len(parts)}")
    values = [int(s) for s in parts]
    if field is None:
        return values
    fp = flopgeom.PrimeField(field)
    return [fp(v) for v in values]


def _scalar_str(x) -> str:
    if isinstance(x, flopgeom.FpElement):
        return str(x.value % x.modulus)
    return str(x)


def _cmd_gamma(config: CommandConfig) -> int:
    if config.point is None:
        raise UsageError("--point a,x,y,z,w is required")
    try:
        pt = _parse_scalars(config.point, config.field, 5)
    except ValueError as exc:
        raise UsageError(str(exc))
    image = flopgeom.pluecker_limit_map(pt)
    payload = {
        "image": [_scalar_str(x) for x in image],
        "indeterminate": all(not (x != 0) for x in image),
    }
    _emit(
        config,
        payload,
        [
            "image: (" + ", ".join(payload["image"]) + ")",
            f"indeterminate: {payload['indeterminate']}",
        ],
    )
    return 0


def _cmd_quadric(config: CommandConfig) -> int:
    if config.point is None:
        raise UsageError("--point p12,p13,p14,p23,p24,p34 is required")
    try:
        pt = _parse_scalars(config.point, config.field, 6)
    except ValueError as exc:
        raise UsageError(str(exc))
    value = flopgeom.quadric_value(pt)
    payload = {"value": _scalar_str(value), "on_quadric": not (value != 0)}
    _emit(config, payload, [f"value: {payload['value']}"])
    return 0


def _cmd_springer_fiber(config: CommandConfig) -> int:
    if config.t is None or config.h is None or config.i is None:
        raise UsageError("--t, --h and --i are required")
    try:
        (sub, amb), dim = flopgeom.springer_fiber(config.t, config.h, config.i)
    except ValueError as exc:
        raise UsageError(str(exc))
    payload = {"grassmann": [sub, amb], "dim": dim}
    _emit(config, payload, [f"grassmann: G({sub},{amb})", f"dim: {dim}"])
    return 0


def _cmd_weyl_word(config: CommandConfig) -> int:
    if config.h is None or config.h < 2:
        raise UsageError("--h >= 2 is required")
    word = weyl.duality_word(config.h)
    sigma = weyl.duality_permutation(config.h)
    payload = {
        "h": config.h,
        "sigma": list(sigma),
        "word": word,
        "length": len(word),
    }
    _emit(
        config,
        payload,
        [
            f"sigma: {list(sigma)}",
            f"word: {word}",
            f"length: {len(word)}",
        ],
    )
    return 0


def _cmd_chamber_sort(config: CommandConfig) -> int:
    if config.vector is None:
        raise UsageError("--vector v1,v2,... is required")
    try:
        from fractions import Fraction

        vec = tuple(Fraction(s.strip()) for s in config.vector.split(","))
    except ValueError as exc:
        raise UsageError(f"bad --vector: {exc}")
    sigma, word = weyl.chamber_sort(vec)
    payload = {"sigma": list(sigma), "word": word, "length": len(word)}
    _emit(
        config,
        payload,
        [f"sigma: {list(sigma)}", f"word: {word}", f"length: {len(word)}"],
    )
    return 0


def _cmd_verify_all(config: CommandConfig) -> int:
    results = acceptance.run_all(seed=config.seed)
    all_pass = all(r.passed for r in results)
    payload = {
        "all_pass": all_pass,
        "criteria": [
            {
                "number": r.number,
                "name": r.name,
                "pass": r.passed,
                "detail": r.detail,
            }
            for r in results
        ],
    }
    lines = []
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        lines.append(f"{mark}  {r.number:>2}  {r.name}  [{r.elapsed:.2f}s]  {r.detail}")
    lines.append(("all criteria passed" if all_pass else "FAILURES present"))
    if config.fmt == "json":
        print(canonical_json(payload))
    else:
        for line in lines:
            print(line)
    return 0 if all_pass else 1


_COMMANDS = {
    "kbasis": _cmd_kbasis,
    "flop-matrix": _cmd_flop_matrix,
    "check-iso": _cmd_check_iso,
    "snf": _cmd_snf,
    "counterexample": _cmd_counterexample,
    "bott": _cmd_bott,
    "hodge": _cmd_hodge,
    "gamma": _cmd_gamma,
    "quadric": _cmd_quadric,
    "springer-fiber": _cmd_springer_fiber,
    "weyl-word": _cmd_weyl_word,
    "chamber-sort": _cmd_chamber_sort,
    "verify-all": _cmd_verify_all,
}


def run(config: CommandConfig) -> int:
    """Dispatch a parsed configuration; returns the process exit status."""
    try:
        return _COMMANDS[config.command](config)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (kgroup.NonIntegralExpansion, weyl.RegularityViolation) as exc:
        print(canonical_json({"error": {"type": type(exc).__name__, "message": str(exc)}}))
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flopk",
        description="Exact K-theory and Schubert calculus for Grassmannian flops.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, *flags):
        p = sub.add_parser(name, help=help_text)
        if "t" in flags:
            p.add_argument("--t", type=int)
        if "h" in flags:
            p.add_argument("--h", type=int)
        if "i" in flags:
            p.add_argument("--i", type=int)
        if "weight" in flags:
            p.add_argument("--weight", help='block weight, e.g. "-2,-2|0,0"')
        if "vector" in flags:
            p.add_argument("--vector", help="comma-separated rationals")
        if "point" in flags:
            p.add_argument("--point", help="comma-separated integers")
            p.add_argument("--field", type=int, help="prime order; omit for exact integers")
        if "matrix" in flags:
            p.add_argument("--matrix", help="JSON array of integer rows")
        if "basis" in flags:
            group = p.add_mutually_exclusive_group()
            group.add_argument(
                "--line-basis", dest="basis", action="store_const",
                const="line", default="line",
                help="present in the ([O(1)], [O], [O(-1)]) basis (default)",
            )
            group.add_argument(
                "--canonical-basis", dest="basis", action="store_const",
                const="canonical", help="present in the Schur-power basis",
            )
        p.add_argument("--format", dest="fmt", choices=("json", "table"), default="json")
        p.add_argument("--seed", type=int, default=0)
        return p

    add("kbasis", "basis of the Grothendieck lattice", "t", "h")
    add("flop-matrix", "matrix of the flop correspondence", "t", "h")
    add("check-iso", "unimodularity verdict for the flop matrix", "t", "h")
    add("snf", "Smith normal form (flop matrix, or --matrix)", "t", "h", "matrix")
    add("counterexample", "index-2 main-component correspondence", "basis")
    add("bott", "cohomology of an irreducible homogeneous bundle", "t", "h", "weight")
    add("hodge", "Hodge numbers of the Grassmannian", "t", "h")
    add("gamma", "limit map into the Pluecker quadric", "point")
    add("quadric", "evaluate the Pluecker quadric", "point")
    add("springer-fiber", "type and dimension of a Springer fiber", "t", "h", "i")
    add("weyl-word", "duality permutation and its palindromic word", "h")
    add("chamber-sort", "sort a regular vector into the dominant chamber", "vector")
    add("verify-all", "run the acceptance criteria")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    config = CommandConfig(
        command=args.command,
        t=getattr(args, "t", None),
        h=getattr(args, "h", None),
        i=getattr(args, "i", None),
        weight=getattr(args, "weight", None),
        vector=getattr(args, "vector", None),
        point=getattr(args, "point", None),
        matrix=getattr(args, "matrix", None),
        field=getattr(args, "field", None),
        basis=getattr(args, "basis", "line"),
        fmt=args.fmt,
        seed=args.seed,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())

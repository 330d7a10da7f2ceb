"""Command line surface: verify, table1, generate, diversity, embed.

Exit codes: 0 success, 1 verification or data failure, 2 usage error.
All commands are deterministic given their flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .algebra import (
    AlgElem,
    STANDARD_ALGEBRA,
    from_zeta9,
    inverse,
    involution,
    matrix_embed,
    reduced_char_poly,
    to_zeta9,
    worked_example,
    zeta9_str,
)
from .codebook import (
    Box,
    Codebook,
    DiversityReport,
    diversity_product,
    generate_codebook,
    min_det_report,
    pairwise_determinants,
    subfield,
    subfield_table,
    unitary_matrix_numeric,
)
from .fields import LElem
from .rationals import as_rat


@dataclass(frozen=True)
class CommandConfig:
    """Validated flags shared by the subcommands."""

    subcommand: str
    fmt: str = "text"
    ascii_symbols: bool = False
    box: int = 1
    denom: int = 1
    size: int = 16
    subfield_spec: str = "zeta9"
    out_path: Optional[str] = None
    in_path: Optional[str] = None
    golden_path: Optional[str] = None
    zeta9_coeffs: Optional[str] = None

    def __post_init__(self):
        if self.box < 1 or self.denom < 1 or self.size < 1:
            raise ValueError("numeric flags must be positive")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unidiv",
        description="Exact unitary families from a cubic cyclic division algebra.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument(
        "--ascii", action="store_true", help="plain ASCII symbol names in text output"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser(
        "verify", parents=[common], help="re-run the built-in worked example"
    )
    p_verify.add_argument("--golden", help="JSON file overriding the built-in golden values")

    sub.add_parser(
        "table1", parents=[common], help="reduced minimal polynomials of the nu subfields"
    )

    p_gen = sub.add_parser("generate", parents=[common], help="generate a unitary codebook")
    p_gen.add_argument("--subfield", default="zeta9", help="zeta9, nu:<k>, or L")
    p_gen.add_argument("--box", type=_positive_int, default=1, help="numerator bound")
    p_gen.add_argument("--denom", type=_positive_int, default=1, help="denominator bound")
    p_gen.add_argument("--size", type=_positive_int, default=16, help="target codebook size")
    p_gen.add_argument("--out", required=True, help="output JSON path")

    p_div = sub.add_parser(
        "diversity", parents=[common], help="recompute the diversity report of a codebook file"
    )
    p_div.add_argument("path", help="codebook JSON path")

    p_embed = sub.add_parser("embed", parents=[common], help="matrix embedding of one element")
    group = p_embed.add_mutually_exclusive_group(required=True)
    group.add_argument("--zeta9", help="six comma-separated p/q coefficients of 1..z9^5")
    group.add_argument("--element", help="JSON file with x0/x1/x2 six-tuples")
    return parser


def symbolize(text: str, ascii_symbols: bool) -> str:
    if ascii_symbols:
        return text
    return text.replace("zeta3", "ζ3").replace("theta", "θ")


def _f15(x: float) -> float:
    return float(f"{x:.15g}")


def _complex_pair(z: complex) -> list[float]:
    return [_f15(z.real), _f15(z.imag)]


def _complex_str(z: complex) -> str:
    return f"{z.real:+.6f}{z.imag:+.6f}i"


def serialize_element(x: AlgElem) -> dict:
    return {
        "x0": [str(f) for f in x.x0.six_tuple()],
        "x1": [str(f) for f in x.x1.six_tuple()],
        "x2": [str(f) for f in x.x2.six_tuple()],
    }


def parse_element(data: dict) -> AlgElem:
    parts = []
    for key in ("x0", "x1", "x2"):
        if key not in data:
            raise ValueError(f"element record is missing {key!r}")
        parts.append(LElem.from_six_tuple([as_rat(v) for v in data[key]]))
    return AlgElem(STANDARD_ALGEBRA, *parts)


def codebook_to_dict(cb: Codebook, report: Optional[DiversityReport]) -> dict:
    return {
        "spec": {
            "kind": cb.subfield_spec.kind,
            "k": cb.subfield_spec.k,
            "label": cb.subfield_spec.label,
            "box": {
                "numerator_bound": cb.box.numerator_bound,
                "denominator_bound": cb.box.denominator_bound,
            },
            "requested": cb.requested,
        },
        "gamma": "zeta3",
        "elements": [serialize_element(x) for x in cb.elements],
        "matrices": [
            [[_complex_pair(v) for v in row] for row in mat] for mat in cb.matrices
        ],
        "diversity": report_to_dict(report) if report is not None else None,
        "complete": cb.complete,
        "precondition_failures": cb.precondition_failures,
    }


def report_to_dict(report: DiversityReport) -> dict:
    return {
        "zeta": _f15(report.zeta),
        "pair": list(report.pair),
        "min_abs_det": _f15(report.min_abs_det),
        "exact_nonzero": report.exact_nonzero,
    }


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

# Reference decimals for the worked example's unitary matrix, stored as the
# transpose of the actual matrix.  The reference digits are truncated and
# mixed-precision, so entries are kept as strings and compared at one unit
# in the last displayed decimal place (0.001 for the three-decimal entries).
_GOLDEN_NUMERIC = [
    [("-0.421", "-0.182"), ("0.473", "0.638"), ("-0.157", "0.36")],
    [("-0.236", "-0.319"), ("-0.421", "-0.182"), ("0.473", "0.638")],
    [("-0.789", "0.09"), ("-0.236", "-0.319"), ("-0.421", "-0.182")],
]


def _decimal_tolerance(text: str) -> float:
    places = len(text.split(".")[1]) if "." in text else 0
    return 10.0 ** (-places)


def builtin_golden() -> dict:
    w = worked_example()
    return {
        "matrix": [
            ["1+zeta3", "-1-zeta3", "zeta3"],
            ["1", "1+zeta3", "-1-zeta3"],
            ["zeta3", "1", "1+zeta3"],
        ],
        "involution": serialize_element(w.involution_image),
        "unit_zeta9": [str(c) for c in w.unit_coeffs],
        "numeric_transposed": [[list(v) for v in row] for row in _GOLDEN_NUMERIC],
    }


def cmd_verify(config: CommandConfig) -> int:
    golden = builtin_golden()
    if config.golden_path:
        try:
            loaded = json.loads(Path(config.golden_path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            print(f"error: cannot read golden file: {exc}")
            return 1
        golden.update(loaded)

    w = worked_example()
    x = w.x
    mat = matrix_embed(x)
    ax = involution(x)
    unit = x * inverse(ax)
    numeric = unitary_matrix_numeric(unit)

    checks: list[tuple[str, bool, str, str]] = []

    actual_grid = mat.render()
    checks.append(
        ("matrix-embedding", actual_grid == golden["matrix"], str(golden["matrix"]), str(actual_grid))
    )

    actual_inv = serialize_element(ax)
    checks.append(
        ("involution-image", actual_inv == golden["involution"], str(golden["involution"]), str(actual_inv))
    )

    unit_coeffs = [str(c) for c in to_zeta9(unit)]
    checks.append(
        ("unit-expansion", unit_coeffs == golden["unit_zeta9"], str(golden["unit_zeta9"]), str(unit_coeffs))
    )

    checks.append(
        ("unit-norm", unit * involution(unit) == unit.spec.one(), "1", "checked exactly")
    )

    numeric_ok = True
    worst = 0.0
    for i in range(3):
        for j in range(3):
            want = golden["numeric_transposed"][j][i]
            got = numeric[i][j]
            for text, value in zip(want, (got.real, got.imag)):
                excess = abs(value - float(text)) / _decimal_tolerance(str(text))
                worst = max(worst, excess)
                numeric_ok = numeric_ok and excess <= 1.0
    checks.append(
        (
            "numeric-unitary-matrix",
            numeric_ok,
            "each entry within one unit of its displayed decimals",
            f"worst deviation {worst:.3f} display units",
        )
    )

    ok = all(c[1] for c in checks)
    if config.fmt == "json":
        print(
            json.dumps(
                {
                    "command": "verify",
                    "unit": zeta9_str(to_zeta9(unit)),
                    "checks": [
                        {"name": n, "ok": passed, "expected": e, "actual": a}
                        for n, passed, e, a in checks
                    ],
                    "ok": ok,
                },
                indent=2,
            )
        )
        return 0 if ok else 1

    s = lambda t: symbolize(t, config.ascii_symbols)
    print(s(f"x = {x}"))
    print("matrix embedding:")
    for row in actual_grid:
        print(s("  [" + ", ".join(row) + "]"))
    print(s(f"involution(x) = {ax}"))
    print(s(f"x / involution(x) = {zeta9_str(to_zeta9(unit))}"))
    print("numeric unitary matrix:")
    for row in numeric:
        print("  [" + ", ".join(_complex_str(v) for v in row) + "]")
    for name, passed, expected, actual in checks:
        if passed:
            print(f"PASS {name}")
        else:
            print(f"FAIL {name}: expected {expected}, got {actual}")
    print("verification " + ("PASSED" if ok else "FAILED"))
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# table1
# ---------------------------------------------------------------------------


def _factored(factors, ascii_symbols: bool) -> str:
    dot = "*" if ascii_symbols else "·"
    return dot.join(f"{p}^{e}" if e > 1 else str(p) for p, e in factors)


def cmd_table1(config: CommandConfig) -> int:
    rows = subfield_table()
    if config.fmt == "json":
        print(
            json.dumps(
                {
                    "command": "table1",
                    "rows": [
                        {
                            "k": r.k,
                            "generator": r.generator,
                            "poly": str(r.poly),
                            "discriminant": r.discriminant,
                            "factors": [list(f) for f in r.factors],
                        }
                        for r in rows
                    ],
                },
                indent=2,
            )
        )
        return 0
    for r in rows:
        gen = symbolize(r.generator, config.ascii_symbols)
        print(f"{gen} | {r.poly} | {_factored(r.factors, config.ascii_symbols)}")
    return 0


# ---------------------------------------------------------------------------
# generate
# ---------------------------------------------------------------------------


def _parse_subfield(text: str):
    if text == "zeta9":
        return subfield("zeta9")
    if text in ("L", "l"):
        return subfield("L")
    if text.startswith("nu:"):
        try:
            k = int(text.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad subfield spec {text!r}")
        return subfield("nu", k)
    raise ValueError(f"unknown subfield {text!r} (expected zeta9, nu:<k> or L)")


def cmd_generate(config: CommandConfig) -> int:
    try:
        sub = _parse_subfield(config.subfield_spec)
    except ValueError as exc:
        print(f"error: {exc}")
        return 2
    box = Box(config.box, config.denom)
    cb = generate_codebook(sub, box, config.size)
    report = diversity_product(cb) if len(cb) >= 2 else None
    payload = codebook_to_dict(cb, report)
    try:
        Path(config.out_path).write_text(json.dumps(payload, indent=2) + "\n")
    except OSError as exc:
        print(f"error: cannot write {config.out_path}: {exc}")
        return 1
    print(f"wrote {config.out_path}")
    print(f"subfield: {cb.subfield_spec.label}  size: {len(cb)}/{cb.requested}")
    print(f"precondition failures: {cb.precondition_failures}")
    if report is not None:
        print(
            f"diversity: zeta={report.zeta:.6f} min|det|={report.min_abs_det:.6g} "
            f"at pair {report.pair} exact_nonzero={report.exact_nonzero}"
        )
    if not cb.complete:
        print(f"warning: box exhausted after {cb.candidates_scanned} candidates")
        return 1
    return 0


# ---------------------------------------------------------------------------
# diversity
# ---------------------------------------------------------------------------


def cmd_diversity(config: CommandConfig) -> int:
    try:
        data = json.loads(Path(config.in_path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read codebook: {exc}")
        return 1
    if data.get("gamma") != "zeta3":
        print("error: unsupported gamma (expected \"zeta3\")")
        return 1
    try:
        elements = [parse_element(rec) for rec in data["elements"]]
    except (KeyError, ValueError, TypeError) as exc:
        print(f"error: malformed codebook: {exc}")
        return 1
    if len(elements) < 2:
        print("error: need at least two elements")
        return 1
    one = STANDARD_ALGEBRA.one()
    for i, x in enumerate(elements):
        if x * involution(x) != one:
            print(f"error: element {i} is not unitary")
            return 1
    for i, j, det in pairwise_determinants(elements):
        if det.is_zero():
            print(f"error: zero difference at pair ({i}, {j})")
            return 1
    report = min_det_report(elements)
    if config.fmt == "json":
        print(json.dumps({"command": "diversity", **report_to_dict(report)}, indent=2))
    else:
        print(f"elements: {len(elements)}")
        print(f"zeta: {report.zeta:.15g}")
        print(f"min |det|: {report.min_abs_det:.15g} at pair {report.pair}")
        print(f"exact_nonzero: {report.exact_nonzero}")
    return 0


# ---------------------------------------------------------------------------
# embed
# ---------------------------------------------------------------------------


def cmd_embed(config: CommandConfig) -> int:
    try:
        if config.zeta9_coeffs is not None:
            coeffs = [as_rat(part.strip()) for part in config.zeta9_coeffs.split(",")]
            if len(coeffs) != 6:
                raise ValueError("expected six comma-separated coefficients")
            x = from_zeta9(coeffs)
        else:
            data = json.loads(Path(config.in_path).read_text())
            x = parse_element(data)
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}")
        return 1
    mat = matrix_embed(x)
    chi = reduced_char_poly(x)
    numeric = mat.to_complex(0)
    if config.fmt == "json":
        print(
            json.dumps(
                {
                    "command": "embed",
                    "element": serialize_element(x),
                    "matrix": mat.render(),
                    "char_poly": str(chi),
                    "numeric": [[_complex_pair(v) for v in row] for row in numeric],
                },
                indent=2,
            )
        )
        return 0
    s = lambda t: symbolize(t, config.ascii_symbols)
    print(s(f"x = {x}"))
    print("matrix embedding:")
    for row in mat.render():
        print(s("  [" + ", ".join(row) + "]"))
    print(s(f"characteristic polynomial: {chi}"))
    print("numeric (embedding 0):")
    for row in numeric:
        print("  [" + ", ".join(_complex_str(v) for v in row) + "]")
    return 0


# ---------------------------------------------------------------------------
# entry points
# ---------------------------------------------------------------------------


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = CommandConfig(
        subcommand=args.command,
        fmt=args.format,
        ascii_symbols=args.ascii,
        box=getattr(args, "box", 1),
        denom=getattr(args, "denom", 1),
        size=getattr(args, "size", 16),
        subfield_spec=getattr(args, "subfield", "zeta9"),
        out_path=getattr(args, "out", None),
        in_path=getattr(args, "path", None) or getattr(args, "element", None),
        golden_path=getattr(args, "golden", None),
        zeta9_coeffs=getattr(args, "zeta9", None),
    )
    handlers = {
        "verify": cmd_verify,
        "table1": cmd_table1,
        "generate": cmd_generate,
        "diversity": cmd_diversity,
        "embed": cmd_embed,
    }
    return handlers[config.subcommand](config)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

"""Command line front end.

Exit codes: 0 pass, 1 some check failed, 2 skipped checks under
``--fail-on-skip``, 3 unreadable, malformed or invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional, Sequence

from .catalog import CatalogError, get_entry, list_ids
from .polygon import comparison_table, lies_on_or_above, polygons_equal
from .profile import ProfileError, hodge_polygon, newton_polygon, validate_profile
from .profile_io import ProfileFormatError, dumps_profile, load_profile
from .rational import format_rational
from .report import CHECK_IDS, VerificationReport
from .slopes import slope_number_polygon, slope_numbers
from .svg import render_svg
from .verifier import verify_main_theorem

EXIT_PASS, EXIT_FAIL, EXIT_SKIP, EXIT_ERROR = 0, 1, 2, 3


def exit_code(report: VerificationReport, fail_on_skip: bool = False) -> int:
    if report.check("validate").verdict == "fail":
        return EXIT_ERROR
    if report.overall == "fail":
        return EXIT_FAIL
    if report.overall == "skipped" and fail_on_skip:
        return EXIT_SKIP
    return EXIT_PASS


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _error(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_ERROR


def _check_file(path: Path) -> VerificationReport:
    return verify_main_theorem(load_profile(path))


def cmd_check(args: argparse.Namespace) -> int:
    try:
        report = _check_file(Path(args.profile))
    except (OSError, ProfileFormatError, ProfileError) as exc:
        return _error(f"{args.profile}: {exc}")
    text = report.to_json() if args.format == "json" else report.to_text()
    _emit(text, args.output)
    return exit_code(report, args.fail_on_skip)


def cmd_polygons(args: argparse.Namespace) -> int:
    try:
        p = load_profile(args.profile)
        violations = validate_profile(p)
        if violations:
            raise ProfileError("; ".join(str(v) for v in violations))
        newton = newton_polygon(p, args.degree)
    except (OSError, ProfileFormatError, ProfileError) as exc:
        return _error(f"{args.profile}: {exc}")
    row = slope_numbers(p.slope_multiset(args.degree))
    polys = [("newton", newton), ("slope-number", slope_number_polygon(row))]
    notes = []
    try:
        polys.append(("hodge", hodge_polygon(p, args.degree)))
    except ProfileError as exc:
        notes.append(f"Hodge polygon omitted: {exc}")

    verdicts = {}
    for (a_name, a), (b_name, b) in zip(polys, polys[1:]):
        if a.length != b.length:
            verdicts[f"{a_name} >= {b_name}"] = None
            notes.append(f"{a_name} and {b_name} have different lengths {a.length} and {b.length}")
            continue
        verdicts[f"{a_name} >= {b_name}"] = lies_on_or_above(a, b)
        verdicts[f"{a_name} = {b_name}"] = polygons_equal(a, b)
    lengths = {poly.length for _, poly in polys}
    table = comparison_table([poly for _, poly in polys]) if len(lengths) == 1 else []

    if args.format == "json":
        doc = {
            "profile": p.name,
            "degree": args.degree,
            "polygons": {
                name: [[format_rational(x), format_rational(y)] for x, y in poly.points]
                for name, poly in polys
            },
            "heights": [
                {"x": format_rational(x), **{n: format_rational(v) for (n, _), v in zip(polys, vals)}}
                for x, vals in table
            ],
            "verdicts": verdicts,
            "notes": notes,
        }
        text = json.dumps(doc, indent=2) + "\n"
    else:
        lines = [f"profile: {p.name}  degree: {args.degree}"]
        for name, poly in polys:
            lines.append(f"  {name:<13} {poly}")
        if table:
            header = "  " + f"{'x':>6}" + "".join(f"{n:>14}" for n, _ in polys)
            lines.append(header)
            for x, vals in table:
                lines.append("  " + f"{format_rational(x):>6}"
                             + "".join(f"{format_rational(v):>14}" for v in vals))
        for key, ok in verdicts.items():
            lines.append(f"  {key}: {'n/a' if ok is None else ('yes' if ok else 'no')}")
        lines.extend(f"  note: {n}" for n in notes)
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)

    if args.svg:
        Path(args.svg).write_text(
            render_svg(polys, f"{p.name}, degree {args.degree}"), encoding="utf-8"
        )
    dominance = [ok for key, ok in verdicts.items() if ">=" in key]
    return EXIT_PASS if all(ok is not False for ok in dominance) else EXIT_FAIL


def cmd_catalog(args: argparse.Namespace) -> int:
    if args.entry == "list":
        lines = []
        for entry_id in list_ids():
            lines.append(f"{entry_id:<50} {get_entry(entry_id).description}")
        _emit("\n".join(lines) + "\n", args.output)
        return EXIT_PASS
    try:
        entry = get_entry(args.entry)
    except CatalogError as exc:
        return _error(str(exc))
    _emit(dumps_profile(entry.profile), args.output)
    return EXIT_PASS


def _batch_row(path: Path, fail_on_skip: bool) -> tuple[str, int, Optional[VerificationReport], str]:
    try:
        report = _check_file(path)
    except (OSError, ProfileFormatError, ProfileError, UnicodeDecodeError) as exc:
        return path.name, EXIT_ERROR, None, str(exc)
    return path.name, exit_code(report, fail_on_skip), report, ""


def cmd_batch(args: argparse.Namespace) -> int:
    directory = Path(args.directory)
    if not directory.is_dir():
        return _error(f"{directory} is not a directory")
    files = sorted(p for p in directory.iterdir() if p.is_file() and p.suffix == ".json")
    with ThreadPoolExecutor(max_workers=args.jobs) as pool:
        rows = list(pool.map(lambda f: _batch_row(f, args.fail_on_skip), files))

    if args.format == "json":
        doc = [
            {
                "file": name,
                "exit": code,
                "profile": report.profile if report else None,
                "overall": report.overall if report else "error",
                "checks": report.verdicts() if report else {},
                "error": err,
            }
            for name, code, report, err in rows
        ]
        text = json.dumps(doc, indent=2) + "\n"
    else:
        short = {"pass": "ok", "fail": "FAIL", "skipped": "skip"}
        lines = ["file\tprofile\t" + "\t".join(CHECK_IDS) + "\toverall"]
        for name, code, report, err in rows:
            if report is None:
                lines.append(f"{name}\t-\tERROR: {err}")
                continue
            cells = [short[report.check(c).verdict] for c in CHECK_IDS]
            lines.append(f"{name}\t{report.profile}\t" + "\t".join(cells) + f"\t{report.overall}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return max((code for _, code, _, _ in rows), default=EXIT_PASS)


class _Parser(argparse.ArgumentParser):
    # usage errors share the exit code of bad input, keeping 2 for skips
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="hodgewitt",
        description="Slope numbers, Hodge-Witt numbers and Hodge symmetry checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--output", help="write to this file instead of stdout")

    p = sub.add_parser("check", help="run the theorem verifier on a profile file")
    p.add_argument("profile")
    p.add_argument("--fail-on-skip", action="store_true")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("polygons", help="Newton, slope-number and Hodge polygons of one degree")
    p.add_argument("profile")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--svg", help="also write an SVG overlay here")
    common(p)
    p.set_defaults(func=cmd_polygons)

    p = sub.add_parser("catalog", help="emit a catalog profile, or 'list'")
    p.add_argument("entry")
    p.add_argument("--output")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("batch", help="check every *.json profile in a directory")
    p.add_argument("directory")
    p.add_argument("--fail-on-skip", action="store_true")
    p.add_argument("--jobs", type=int, default=4)
    common(p)
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

"""Batch command-line interface.

Subcommands cover the whole library surface: ``snf``, ``divisors`` and
``count-open`` for the lattice layer, ``patterns`` and ``sylvester`` for the
quadratic-form model, ``braid-check`` and ``orbits`` for reflection tables,
and ``example`` to emit a catalog table as JSON or Graphviz DOT.

Output is deterministic: no timestamps, no environment-dependent ordering,
no color.  Validation failures exit with status 1 and a machine-readable
JSON error object on stderr; ``braid-check --strict`` exits with status 2
when a braid relation fails.  JSON payloads may be read from stdin via
``-``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .catalog import ExampleSpec, build_example, canonical_example_name
from .lattice import (
    IntegerMatrix,
    count_open_real_orbits,
    elementary_divisors,
    sign_coordinates,
    smith_normal_form,
)
from .orbits import ReflectionTable
from .patterns import build_table, enumerate_patterns, sylvester_classes
from .rootdata import CartanSpec

_LABEL_RE = re.compile(r"^[A-Ga-g][0-9]+$")


def _read_json(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON in {path!r}: {exc}") from exc


def _parse_cartan(text: str) -> CartanSpec:
    if _LABEL_RE.match(text.strip()):
        return CartanSpec.from_label(text.strip())
    return CartanSpec.from_json(_read_json(text))


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError as exc:
        raise ValueError(f"expected a comma-separated integer list, got {text!r}") from exc


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2, ensure_ascii=False))


def _matrix_text(m: IntegerMatrix) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in m.entries)


# -- table sources ---------------------------------------------------------------


def _load_table(args) -> ReflectionTable:
    if getattr(args, "table", None):
        return ReflectionTable.from_json(_read_json(args.table))
    if getattr(args, "example", None):
        name = args.example.strip().lower()
        if name == "quadratic":
            if args.n is None or args.r is None:
                raise ValueError("example 'quadratic' needs --n and --r")
            return build_table(args.n, args.r)
        spec = ExampleSpec(
            name=name,
            n=args.n,
            cartan=_parse_cartan(args.cartan) if args.cartan else None,
        )
        return build_example(spec).table
    raise ValueError("provide a table via --table FILE or --example NAME")


def _add_table_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--table", help="reflection table JSON file, or - for stdin")
    parser.add_argument(
        "--example",
        help="catalog example name (ordered_pairs, unordered_pairs, "
        "torus_counterexample, g2_case, quadratic)",
    )
    parser.add_argument("--n", type=int, help="size parameter for the example")
    parser.add_argument("--r", type=int, help="rank parameter (quadratic example)")
    parser.add_argument("--cartan", help="Cartan label like A2, or a JSON file/-")


# -- subcommands ---------------------------------------------------------------


def _cmd_snf(args) -> int:
    matrix = IntegerMatrix.from_json(_read_json(args.matrix))
    snf = smith_normal_form(matrix)
    if args.format == "json":
        _emit_json(snf.to_json())
    else:
        print("d:", " ".join(str(x) for x in snf.d))
        print("u:")
        print(_matrix_text(snf.u))
        print("v:")
        print(_matrix_text(snf.v))
    return 0


def _cmd_divisors(args) -> int:
    matrix = IntegerMatrix.from_json(_read_json(args.matrix))
    divisors = elementary_divisors(matrix)
    if args.format == "json":
        _emit_json({"divisors": list(divisors)})
    else:
        print(" ".join(str(x) for x in divisors))
    return 0


def _cmd_count_open(args) -> int:
    divisors = _parse_int_list(args.divisors)
    count = count_open_real_orbits(divisors)
    if args.format == "json":
        _emit_json(
            {
                "divisors": divisors,
                "count": count,
                "sign_coordinates": list(sign_coordinates(divisors)),
            }
        )
    else:
        print(count)
    return 0


def _cmd_patterns(args) -> int:
    pats = enumerate_patterns(args.n, args.r, signed=not args.complex)
    if args.format == "json":
        _emit_json(
            {
                "n": args.n,
                "r": args.r,
                "signed": not args.complex,
                "count": len(pats),
                "patterns": [p.to_text() for p in pats],
            }
        )
    else:
        for p in pats:
            print(p.to_text())
    return 0


def _cmd_sylvester(args) -> int:
    classes = sylvester_classes(args.n, args.r)
    if args.format == "json":
        _emit_json(
            {
                "n": args.n,
                "r": args.r,
                "classes": [
                    {"plus": c.plus, "minus": c.minus, "orbits": list(c.orbits)}
                    for c in classes
                ],
            }
        )
    else:
        for c in classes:
            print(f"({c.plus},{c.minus}):", " ".join(c.orbits))
    return 0


def _cmd_braid_check(args) -> int:
    table = _load_table(args)
    restrict = table.open_orbit_names if args.open_only else None
    generators = _parse_int_list(args.generators) if args.generators else None
    report = table.check_braid(restrict_to=restrict, generators=generators)
    if args.format == "json":
        _emit_json(report.to_json())
    else:
        for pair in report.pairs:
            status = "ok" if pair.holds else f"FAIL witness={pair.witness}"
            print(f"s{pair.i},s{pair.j}: m={pair.exponent} {status}")
        print("braid relations hold" if report.holds else "braid relations fail")
    if args.strict and not report.holds:
        return 2
    return 0


def _cmd_orbits(args) -> int:
    table = _load_table(args)
    if args.generators:
        generators = _parse_int_list(args.generators)
        domain = table.open_orbit_names if args.domain == "open" else table.orbit_names
        classes = table.subgroup_orbits(generators, domain)
    else:
        classes = table.real_group_orbit_classes()
    if args.format == "json":
        _emit_json({"classes": [list(c) for c in classes]})
    else:
        for block in classes:
            print(" ".join(block))
    return 0


def _cmd_example(args) -> int:
    name = canonical_example_name(args.name)
    spec = ExampleSpec(
        name=name,
        n=args.n,
        cartan=_parse_cartan(args.cartan) if args.cartan else None,
    )
    example = build_example(spec)
    if args.emit == "dot":
        sys.stdout.write(example.table.to_dot())
    else:
        payload = {"name": example.name, "table": example.table.to_json()}
        if example.datum is not None:
            payload["datum"] = example.datum.to_json()
        _emit_json(payload)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="borelorbits",
        description="Combinatorics of real Borel orbits: divisors, sign patterns, "
        "reflection operators and braid checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = with_format(sub.add_parser("snf", help="Smith normal form of an integer matrix"))
    p.add_argument("--matrix", required=True, help="matrix JSON file, or - for stdin")
    p.set_defaults(func=_cmd_snf)

    p = with_format(
        sub.add_parser("divisors", help="elementary divisors of a sublattice basis")
    )
    p.add_argument("--matrix", required=True, help="matrix JSON file, or - for stdin")
    p.set_defaults(func=_cmd_divisors)

    p = with_format(
        sub.add_parser("count-open", help="open real orbit count from a divisor list")
    )
    p.add_argument("--divisors", required=True, help="comma-separated divisors, e.g. 2,2,1,1")
    p.set_defaults(func=_cmd_count_open)

    p = with_format(sub.add_parser("patterns", help="enumerate (signed) patterns"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--complex", action="store_true", help="unsigned patterns")
    p.set_defaults(func=_cmd_patterns)

    p = with_format(
        sub.add_parser("sylvester", help="inertia classes of open sign patterns")
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=_cmd_sylvester)

    p = with_format(sub.add_parser("braid-check", help="verify braid relations"))
    _add_table_source(p)
    p.add_argument("--open-only", action="store_true", help="restrict to open orbits")
    p.add_argument("--generators", help="comma-separated root indices")
    p.add_argument("--strict", action="store_true", help="exit 2 on failure")
    p.set_defaults(func=_cmd_braid_check)

    p = with_format(sub.add_parser("orbits", help="orbit classes of a reflection table"))
    _add_table_source(p)
    p.add_argument("--generators", help="comma-separated root indices (subgroup orbits)")
    p.add_argument(
        "--domain",
        choices=("all", "open"),
        default="all",
        help="domain for --generators (default all orbits)",
    )
    p.set_defaults(func=_cmd_orbits)

    p = sub.add_parser("example", help="emit a catalog example")
    p.add_argument("name", help="ordered_pairs, unordered_pairs, torus_counterexample, g2_case")
    p.add_argument("--n", type=int, help="size parameter")
    p.add_argument("--cartan", help="Cartan label like A2, or a JSON file/-")
    p.add_argument("--emit", choices=("json", "dot"), default="json")
    p.set_defaults(func=_cmd_example)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        error = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        print(json.dumps(error, ensure_ascii=False), file=sys.stderr)
        return 1


def entry_point() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry_point()

"""``strata-kit`` command line.

Exit codes: 0 success (or "contained"), 3 negative decision, 2 input error,
4 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, TextIO

from .closure import (
    bundle_closure_contains_pencil,
    bundle_closure_contains_poly,
    orbit_closure_contains_pencil,
    orbit_closure_contains_poly,
)
from .codim import Convention, codim_bundle_pencil, codim_poly
from .eigenstruct import EigenvalueKey, Eigenstructure, bundle_key, companion_structure, validate
from .errors import BudgetExceeded, StrataError
from .extract import (
    companion_pencil,
    eigenstructure_of,
    get_fixture,
    kcf_witness,
    poly_witness,
    smith_form,
)
from .extract.fixtures import FIXTURES
from .extract.poly import RationalPolyMatrix
from .ferrers import jordan_ferrers, min_index_ferrers
from .strata import MAX_KEYS, build_hasse, enumerate_bundles, verify_stratification

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NEGATIVE = 3
EXIT_BUDGET = 4

DEFAULT_MAX_EIGENVALUES = 12

SUBCOMMANDS = ("codim", "closure", "bundles", "hasse", "extract", "witness", "verify", "ferrers")


class UsageError(Exception):
    pass


@dataclass
class Outcome:
    payload: Any
    text: str
    code: int = EXIT_OK
    dot: str | None = None


@dataclass
class Loaded:
    structure: Eigenstructure
    matrix: RationalPolyMatrix | None = None
    source: str = ""


# -- input ------------------------------------------------------------------


def _read_json(path: str, stdin: TextIO) -> Any:
    try:
        text = stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc


def _fixture_name(path: str) -> str | None:
    stem = Path(path).name
    if stem.lower().endswith(".json"):
        stem = stem[:-5]
    return stem.upper() if stem.upper() in FIXTURES else None


def load_input(path: str | None, fixture: str | None, stdin: TextIO, roots=()) -> Loaded:
    """Eigenstructure (and matrix, when one is given) from a file or a fixture name.

    A path that does not exist but names a fixture (``P3`` or ``P3.json``)
    loads that fixture.  Files may hold an eigenstructure record or a
    polynomial matrix record (recognised by its ``entries`` field).
    """
    if fixture is None and path is not None and path != "-" and not Path(path).exists():
        fixture = _fixture_name(path)
        if fixture is None:
            raise UsageError(f"no such file: {path}")
    if fixture is not None:
        fx = get_fixture(fixture)
        return Loaded(fx.structure(), fx.matrix(), fx.name)
    if path is None:
        raise UsageError("an input file or fixture is required")
    data = _read_json(path, stdin)
    if not isinstance(data, dict):
        raise UsageError(f"{path}: expected a JSON object")
    if "entries" in data:
        P = RationalPolyMatrix.from_json(data)
        return Loaded(eigenstructure_of(P, roots), P, path)
    return Loaded(validate(Eigenstructure.from_json(data)), None, path)


def _int_list(text: str) -> list[int]:
    try:
        vals = [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc
    if any(v < 0 for v in vals):
        raise UsageError("entries must be non-negative")
    return vals


def _values(text: str | None) -> dict[str, str]:
    out = {}
    for item in (text or "").split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise UsageError(f"expected key=value in --values, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def _roots(text: str | None):
    if not text:
        return ()
    try:
        return tuple(EigenvalueKey.parse(x).value for x in text.split(",") if x.strip())
    except (ValueError, AttributeError) as exc:
        raise UsageError(f"bad --roots list {text!r}") from exc


# -- subcommands ------------------------------------------------------------


def _cmd_codim(args, stdin) -> Outcome:
    src = load_input(args.input, args.fixture, stdin)
    e = src.structure
    rep = codim_bundle_pencil(e) if e.grade == 1 else codim_poly(e, args.convention)
    payload = {"source": src.source, **rep.to_json()}
    text = f"orbit codimension {rep.orbit_codim}, bundle codimension {rep.bundle_codim}"
    if rep.convention is not None:
        text += f" ({rep.convention.value} convention"
        text += ", differs from the other convention)" if rep.convention_divergence else ")"
    return Outcome(payload, text)


def _cmd_closure(args, stdin) -> Outcome:
    L = load_input(args.left, args.left_fixture, stdin).structure
    M = load_input(args.right, args.right_fixture, stdin).structure
    pencil = L.grade == 1 and M.grade == 1 and not args.grade_aware
    route = "pencil" if pencil else "companion"
    if args.kind == "orbit":
        rep = orbit_closure_contains_pencil(L, M) if pencil else orbit_closure_contains_poly(L, M)
    else:
        fn = bundle_closure_contains_pencil if pencil else bundle_closure_contains_poly
        rep = fn(L, M, args.max_eigenvalues)
    payload = {"kind": args.kind, "route": route, **rep.to_json()}
    if rep.contained:
        text = f"contained (h={rep.h})"
        if rep.witness_map is not None:
            wm = rep.witness_map.to_json()
            text += "; witness " + ", ".join(
                "{" + ",".join(b) + "}->" + t for b, t in zip(wm["blocks"], wm["targets"])
            )
    else:
        text = f"not contained (h={rep.h}): {rep.failed_condition}"
    return Outcome(payload, text, EXIT_OK if rep.contained else EXIT_NEGATIVE)


def _cmd_bundles(args, stdin) -> Outcome:
    keys = enumerate_bundles(args.m, args.n, args.d, args.max_keys)
    items = []
    lines = [f"{len(keys)} bundles of {args.m}x{args.n} grade-{args.d} polynomials"]
    for i, k in enumerate(keys):
        rep = k.representative()
        direct = codim_poly(rep, Convention.DIRECT)
        comp = codim_poly(rep, Convention.COMPANION)
        items.append(
            {
                "id": i,
                "label": k.label(),
                "key": k.to_json(),
                "bundle_codim_direct": direct.bundle_codim,
                "bundle_codim_companion": comp.bundle_codim,
            }
        )
        lines.append(f"{i:3d}  {k.label()}; codim={direct.bundle_codim}/{comp.bundle_codim}")
    return Outcome({"m": args.m, "n": args.n, "d": args.d, "count": len(keys), "bundles": items}, "\n".join(lines))


def _cmd_hasse(args, stdin) -> Outcome:
    g = build_hasse(args.m, args.n, args.d, args.max_keys)
    dot = g.to_dot()
    text = "\n".join(
        [f"{g.name}: {len(g.nodes)} bundles, {len(g.edges)} covering relations"]
        + [f"{g.nodes[a].label()}  >  {g.nodes[b].label()}" for a, b in g.edges]
    )
    return Outcome(g.to_json(), text, dot=dot)


def _cmd_extract(args, stdin) -> Outcome:
    roots = _roots(args.roots)
    src = load_input(args.input, args.fixture, stdin, roots)
    if src.matrix is None:
        raise UsageError("extract needs a polynomial matrix, not an eigenstructure")
    P = src.matrix
    e = eigenstructure_of(P, roots)
    sf = smith_form(P)
    key = bundle_key(e)
    payload = {
        "source": src.source,
        "eigenstructure": e.to_json(),
        "smith_invariants": [p.to_strings() for p in sf.invariant_polys],
        "bundle": key.label(),
    }
    if args.companion:
        payload["companion_pencil"] = companion_pencil(P).to_json()
        payload["companion_structure"] = companion_structure(e).to_json()
    text = "\n".join(
        [
            f"rank {sf.rank}; invariant polynomials: " + ", ".join(str(p) for p in sf.invariant_polys),
            f"right minimal indices: {list(e.right_min)}",
            f"left minimal indices: {list(e.left_min)}",
            *(f"eigenvalue {k}: partial multiplicities {list(p)}" for k, p in e.eigen),
            f"bundle: {key.label()}",
        ]
    )
    return Outcome(payload, text)


def _cmd_witness(args, stdin) -> Outcome:
    e = load_input(args.input, args.fixture, stdin).structure
    values = _values(args.values)
    if args.grade1:
        P = kcf_witness(companion_structure(e), values)
    else:
        P = poly_witness(e, values)
    return Outcome(P.to_json(), str(P))


def _cmd_verify(args, stdin) -> Outcome:
    rep = verify_stratification(args.m, args.n, args.d, max_keys=args.max_keys)
    lines = [rep.summary()] + [f"violation: {v}" for v in rep.violations]
    if args.verbose:
        lines += [f"note: {v}" for v in rep.informational]
    return Outcome(rep.to_json(), "\n".join(lines), EXIT_OK if rep.passed else EXIT_NEGATIVE)


def _cmd_ferrers(args, stdin) -> Outcome:
    vals = _int_list(args.segre)
    diagrams = []
    if args.kind in ("jordan", "both"):
        if any(v == 0 for v in vals):
            raise UsageError("partial multiplicities must be positive")
        diagrams.append(jordan_ferrers(vals))
    if args.kind in ("minimal", "both"):
        diagrams.append(min_index_ferrers(vals))
    payload = [
        {"title": d.title, "rows": [list(r) for r in d.rows], "row_sums": list(d.row_sums), "total": d.total}
        for d in diagrams
    ]
    return Outcome(payload, "\n\n".join(d.render() for d in diagrams))


# -- parser -----------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser, suppress: bool) -> None:
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--output", choices=("json", "text", "dot"), default=default(None), help="output format")
    p.add_argument(
        "--convention",
        choices=[c.value for c in Convention],
        default=default(Convention.COMPANION.value),
        help="codimension convention for grade > 1 (default: companion)",
    )
    p.add_argument(
        "--max-eigenvalues",
        type=int,
        default=default(DEFAULT_MAX_EIGENVALUES),
        help="refuse coalescence searches over more distinct eigenvalues",
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, suppress=True)
    parser = argparse.ArgumentParser(
        prog="strata-kit", description="Orbit and bundle stratification of matrix pencils and polynomials."
    )
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="subcommand", required=True, metavar="{" + ",".join(SUBCOMMANDS) + "}")

    def input_args(p, name="input"):
        p.add_argument(f"--{name}", help="JSON file (eigenstructure or polynomial matrix), '-' for stdin")
        p.add_argument("--fixture", help="built-in table representative P1..P19")

    def size_args(p):
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--d", type=int, required=True)
        p.add_argument("--max-keys", type=int, default=MAX_KEYS, help="refuse enumerations with more bundles")

    p = sub.add_parser("codim", parents=[common], help="orbit and bundle codimension")
    input_args(p)

    p = sub.add_parser("closure", parents=[common], help="closure inclusion decision")
    p.add_argument("--kind", choices=("orbit", "bundle"), default="bundle")
    p.add_argument("--left", help="structure whose closure is taken")
    p.add_argument("--right", help="structure tested for membership")
    p.add_argument("--left-fixture")
    p.add_argument("--right-fixture")
    p.add_argument("--grade-aware", action="store_true", help="always decide through companion pencils")

    p = sub.add_parser("bundles", parents=[common], help="enumerate all bundles")
    size_args(p)
    p.add_argument("--json", action="store_true", help="same as --output json")

    p = sub.add_parser("hasse", parents=[common], help="Hasse diagram of bundle closures")
    size_args(p)
    p.add_argument("--format", choices=("dot", "json", "text"), help="same as --output")

    p = sub.add_parser("extract", parents=[common], help="exact eigenstructure of a polynomial matrix")
    input_args(p)
    p.add_argument("--roots", help="comma-separated rational root hints")
    p.add_argument("--companion", action="store_true", help="also report the companion pencil")

    p = sub.add_parser("witness", parents=[common], help="matrix realising an eigenstructure")
    input_args(p)
    p.add_argument("--values", help='assignments such as "@e1=0,@e2=1"')
    p.add_argument("--grade1", action="store_true", help="Kronecker pencil of the companion structure")

    p = sub.add_parser("verify", parents=[common], help="check strictness of the closure order and codimensions")
    size_args(p)
    p.add_argument("--verbose", action="store_true", help="also list informational notes")

    p = sub.add_parser("ferrers", parents=[common], help="weighted Ferrers diagrams")
    p.add_argument("--segre", required=True, help="comma-separated list, e.g. 4,3,3,3,1")
    p.add_argument("--kind", choices=("jordan", "minimal", "both"), default="both")
    return parser


_COMMANDS = {
    "codim": _cmd_codim,
    "closure": _cmd_closure,
    "bundles": _cmd_bundles,
    "hasse": _cmd_hasse,
    "extract": _cmd_extract,
    "witness": _cmd_witness,
    "verify": _cmd_verify,
    "ferrers": _cmd_ferrers,
}


def _output_format(args) -> str:
    fmt = args.output
    if args.subcommand == "hasse" and args.format:
        fmt = fmt or args.format
    if args.subcommand == "bundles" and args.json:
        fmt = fmt or "json"
    if fmt is None:
        fmt = "text" if args.subcommand == "ferrers" else "json"
    if fmt == "dot" and args.subcommand != "hasse":
        raise UsageError("--output dot is only available for hasse")
    return fmt


def run(argv=None, stdin: TextIO | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        if args.max_eigenvalues < 0:
            raise UsageError("--max-eigenvalues must be non-negative")
        fmt = _output_format(args)
        out = _COMMANDS[args.subcommand](args, stdin)
    except BudgetExceeded as exc:
        print(f"strata-kit: budget exceeded: {exc}", file=stderr)
        return EXIT_BUDGET
    except (UsageError, StrataError, ValueError) as exc:
        print(f"strata-kit: error: {exc}", file=stderr)
        return EXIT_INPUT
    if fmt == "json":
        stdout.write(json.dumps(out.payload, indent=2) + "\n")
    elif fmt == "dot":
        stdout.write(out.dot)
    else:
        stdout.write(out.text + "\n")
    return out.code


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())

# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0
"""Command-line interface.

Exit codes are 0 on success, 1 on a computation error, 2 on a usage or input error and 3 if a
verification check fails or reports a finding.
"""

import argparse
import json
import logging
import os
import sys
import textwrap
import typing as t

from . import exceptions
from .braid import BraidWord, burau, burau_alexander, full_twist_power
from .corpus import load_corpus
from .diagram import UprightDiagram, braid_closure_to_long
from .invariants import compute_invariants, positivity_report
from .load import load, load_dict
from .markov import (
    TangleChain,
    cartier_foata_check,
    greens_matrix,
    walk_determinant,
    walk_sum_oracle,
)
from .ring import RatMatrix, series_expand
from .twisting import (
    TwistedFamily,
    alexander_limit,
    convergence_report,
    growth_rate,
    twist_determinant_law,
)
from .verify import available_checks, verify

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_COMPUTATION = 1
EXIT_USAGE = 2
EXIT_VERIFY = 3

DEFAULT_WIDTH = 100


def main():
    sys.exit(run(sys.argv[1:]))


def run(argv: t.Optional[t.Sequence[str]] = None) -> int:
    """Run the command line on argv and return the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    logging.basicConfig(
        level=[logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)],
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        return args.handler(args)
    except (ArithmeticError, RuntimeError) as e:
        print(f"pertalex: error: {e}", file=sys.stderr)
        return EXIT_COMPUTATION
    except (
        ValueError,
        TypeError,
        OSError,
        KeyError,
        exceptions.SchemaError,
        exceptions.UnsupportedFormatError,
        exceptions.AmbiguousSchemaNameError,
    ) as e:
        print(f"pertalex: error: {e}", file=sys.stderr)
        return EXIT_USAGE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pertalex", description="Perturbed Alexander invariant of knots."
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="log INFO, or DEBUG when repeated"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    invariants = subparsers.add_parser("invariants", help="Alexander polynomial, rho_1, delta_1")
    _add_input_arguments(invariants)
    invariants.add_argument("--positive", action="store_true", help="the knot is positive")
    invariants.set_defaults(handler=_run_invariants)

    burau_parser = subparsers.add_parser("burau", help="unreduced Burau matrix of a braid")
    _add_input_arguments(burau_parser, files=False)
    burau_parser.add_argument("--full-twist", type=int, metavar="N", help="full twist on N strands")
    burau_parser.add_argument("--power", type=int, default=1, help="power of the full twist")
    burau_parser.set_defaults(handler=_run_burau)

    chain = subparsers.add_parser("chain", help="tangle chain, Green's function and oracles")
    _add_input_arguments(chain)
    chain.add_argument("--greens", action="store_true", help="print the Green's matrix")
    chain.add_argument(
        "--cartier-foata", action="store_true", help="compare the multicycle sum to det(I - A)"
    )
    chain.add_argument(
        "--max-states", type=int, default=16, help="state guard of the multicycle enumeration"
    )
    chain.add_argument("--oracle", type=float, metavar="AT", help="walk sums at T = AT")
    chain.add_argument("--max-len", type=int, default=60, help="longest walk of the oracle")
    chain.set_defaults(handler=_run_chain)

    family = subparsers.add_parser("family", help="limits of a twisted family")
    family.add_argument("--file", help="family JSON file")
    family.add_argument("--data", help="family as inline JSON")
    family.add_argument("--alexander-limit", action="store_true", help="limit of Delta")
    family.add_argument("--growth-rate", action="store_true", help="growth rate of rho_1")
    family.add_argument("--determinant-law", action="store_true", help="det(I - A) of D_inf^tau")
    family.add_argument(
        "--report", action="store_true", help="compare first differences to the growth rate"
    )
    family.add_argument("--t-max", type=int, default=3, help="largest twist count of the report")
    family.add_argument("--r0", type=int, default=6, help="truncation degree of the series")
    family.add_argument("--json", action="store_true", help="print JSON")
    family.set_defaults(handler=_run_family)

    verify_parser = subparsers.add_parser("verify", help="run the verification checks")
    verify_parser.add_argument(
        "--only",
        action="append",
        choices=sorted(available_checks()),
        help="run only this check, may be repeated",
    )
    verify_parser.add_argument("--corpus", help="corpus JSON file instead of the built-in one")
    verify_parser.add_argument("--json", action="store_true", help="print JSON")
    verify_parser.set_defaults(handler=_run_verify)

    return parser


def _add_input_arguments(parser: argparse.ArgumentParser, files: bool = True):
    parser.add_argument("--braid", help='braid word, e.g. "1 1 1"')
    parser.add_argument("--n", type=int, help="strand count of the braid")
    if files:
        parser.add_argument("--cut", type=int, default=1, help="strand opened in the closure")
        parser.add_argument("--file", help="braid, diagram or chain JSON file")
        parser.add_argument("--data", help="braid, diagram or chain as inline JSON")
    parser.add_argument("--json", action="store_true", help="print JSON")


def _read_input(args: argparse.Namespace) -> t.Any:
    sources = [s for s in ("braid", "file", "data") if getattr(args, s, None) is not None]
    if len(sources) != 1:
        raise ValueError("exactly one of --braid, --file and --data is required")

    if args.braid is not None:
        return BraidWord.from_text(args.braid, args.n)
    if args.file is not None:
        return load(args.file)
    return load_dict(json.loads(args.data), source="--data")


def _read_diagram(args: argparse.Namespace) -> UprightDiagram:
    obj = _read_input(args)
    if isinstance(obj, BraidWord):
        return braid_closure_to_long(obj, args.cut)
    if isinstance(obj, UprightDiagram):
        return obj
    raise ValueError(f"expected a braid or a diagram, got a {type(obj).__name__}")


def _read_chain(args: argparse.Namespace) -> TangleChain:
    obj = _read_input(args)
    if isinstance(obj, TangleChain):
        return obj
    if isinstance(obj, BraidWord):
        obj = braid_closure_to_long(obj, args.cut)
    if isinstance(obj, UprightDiagram):
        return TangleChain.from_diagram(obj)
    raise ValueError(f"expected a braid, a diagram or a chain, got a {type(obj).__name__}")


def _read_family(args: argparse.Namespace) -> TwistedFamily:
    if (args.file is None) == (args.data is None):
        raise ValueError("exactly one of --file and --data is required")
    obj = load(args.file) if args.file is not None else load_dict(json.loads(args.data))
    if not isinstance(obj, TwistedFamily):
        raise ValueError(f"expected a twisted family, got a {type(obj).__name__}")
    return obj


def _run_invariants(args: argparse.Namespace) -> int:
    d = _read_diagram(args)
    invariants = compute_invariants(d)
    report = positivity_report(d, args.positive, invariants)

    if args.json:
        _emit_json({"invariants": invariants.asdict(), "positivity": report.asdict()})
    else:
        data = invariants.asdict()
        for key in ("alexander", "conway", "rho1", "rho1_reduced", "delta1"):
            _emit_text(f"{key}: {data[key] if data[key] is not None else 'none'}")
        for finding in invariants.findings:
            _emit_text(f"finding: {finding}")
        if report.counterexample:
            _emit_text("finding: positive knot with a positive coefficient in delta1")
    return EXIT_OK


def _run_burau(args: argparse.Namespace) -> int:
    if (args.full_twist is None) == (args.braid is None):
        raise ValueError("exactly one of --braid and --full-twist is required")

    if args.full_twist is not None:
        matrix = full_twist_power(args.full_twist, args.power)
        alexander = None
    else:
        word = BraidWord.from_text(args.braid, args.n)
        matrix = burau(word)
        alexander = burau_alexander(word) if word.is_knot_closure else None

    if args.json:
        data = {"matrix": matrix.asdict()}
        if alexander is not None:
            data["alexander"] = alexander.to_str()
        _emit_json(data)
    else:
        _emit_matrix(matrix)
        if alexander is not None:
            _emit_text(f"alexander: {alexander}")
    return EXIT_OK


def _run_chain(args: argparse.Namespace) -> int:
    chain = _read_chain(args)
    data: t.Dict[str, t.Any] = {
        "states": len(chain),
        "determinant": walk_determinant(chain).to_str(),
    }
    greens = greens_matrix(chain) if args.greens or args.oracle is not None else None

    if args.cartier_foata:
        total, determinant = cartier_foata_check(chain, args.max_states)
        data["cartier_foata"] = {"sum": total.to_str(), "agrees": total == determinant}

    if args.oracle is not None:
        source, target = chain.incoming[0], chain.outgoing[0]
        data["oracle"] = {
            "at": args.oracle,
            "max_len": args.max_len,
            "walk_sum": walk_sum_oracle(chain, source, target, args.max_len, args.oracle),
            "greens": float(
                greens[chain.index(source), chain.index(target)].evaluate(args.oracle)
            ),
        }

    if args.json:
        data["chain"] = chain.asdict()
        if greens is not None and args.greens:
            data["greens"] = greens.asdict()
        _emit_json(data)
        return EXIT_OK

    _emit_text(f"states: {data['states']}")
    _emit_text(f"det(I - A): {data['determinant']}")
    if "cartier_foata" in data:
        agrees = "agrees" if data["cartier_foata"]["agrees"] else "DISAGREES"
        _emit_text(f"multicycle sum: {data['cartier_foata']['sum']} ({agrees})")
    if "oracle" in data:
        oracle = data["oracle"]
        _emit_text(f"walk sum at T = {oracle['at']}: {oracle['walk_sum']:.9f}")
        _emit_text(f"green's entry at T = {oracle['at']}: {oracle['greens']:.9f}")
    if args.greens:
        _emit_matrix(greens)
    return EXIT_OK


def _run_family(args: argparse.Namespace) -> int:
    f = _read_family(args)
    selected = args.alexander_limit or args.growth_rate or args.determinant_law or args.report
    data: t.Dict[str, t.Any] = {"family": f.asdict()}

    if args.alexander_limit or not selected:
        data["alexander_limit"] = alexander_limit(f).to_str()
    if args.growth_rate or not selected:
        rate = growth_rate(f)
        data["growth_rate"] = rate.to_str()
        data["series"] = str(series_expand(rate, args.r0))
    if args.determinant_law:
        det_tau, det_infinity, alpha = twist_determinant_law(f)
        data["determinant_law"] = {
            "det_tau": det_tau.to_str(),
            "det_infinity": det_infinity.to_str(),
            "alpha": str(alpha),
        }
    if args.report:
        data["report"] = convergence_report(f, args.t_max, args.r0).asdict()

    if args.json:
        _emit_json(data)
        return EXIT_OK

    _emit_text(f"family: {f}")
    for key, value in data.items():
        if key == "family":
            continue
        elif key == "report":
            for row in value["d_t"]:
                _emit_text(f"d_{row['t']} (agrees through degree {row['depth']}): {row['d_t']}")
            _emit_text(f"stabilizing: {value['stabilizing']}")
        elif key == "determinant_law":
            _emit_text(f"det(I - A_tau): {value['det_tau']}")
            _emit_text(f"alpha: {value['alpha']}")
        else:
            _emit_text(f"{key.replace('_', ' ')}: {value}")
    return EXIT_OK


def _run_verify(args: argparse.Namespace) -> int:
    corpus = load_corpus(args.corpus)
    report = verify(corpus, args.only)

    if args.json:
        _emit_json(report.asdict())
    else:
        _emit_text(report.to_text())
    return EXIT_OK if report.ok else EXIT_VERIFY


def _width() -> int:
    try:
        return int(os.environ.get("PERTALEX_WIDTH", DEFAULT_WIDTH))
    except ValueError:
        logger.warning("PERTALEX_WIDTH is not an integer, using %d", DEFAULT_WIDTH)
        return DEFAULT_WIDTH


def _emit_text(text: str):
    print(text)


def _emit_matrix(matrix: RatMatrix):
    for row in str(matrix).splitlines():
        print(textwrap.fill(row, width=_width(), subsequent_indent="    ", break_long_words=False))


def _emit_json(data: dict):
    print(json.dumps(data, indent=2))

"""Command-line interface.

Commands::

    betti pure 0,2,4,5                      render a pure diagram
    betti decompose table.bt1 [--check]     chain decomposition of a table
    betti bounds pure|module|veronese|variety ...
    betti dim-l -m 3 --delta 13 -e 1000     dim |O_X(e)| for a hypersurface

Exit codes: 0 success, 1 usage or parse error, 2 domain error (input outside
the cone, index out of range, exact binomial over budget, failed --check).

``--format machine`` emits a single JSON object with stable keys
(command/inputs/results/status); rationals are rendered as exact ``num/den``
strings and digit brackets as integer exponents.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bounds as bounds_mod
from . import estimation, tablefile
from .decompose import decompose, verify_decomposition
from .diagrams import degree_sequence, format_diagram, pure_diagram
from .errors import BettiError, DomainError, TableFormatError, TooLarge


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _degrees_argument(text: str) -> tuple[int, ...]:
    try:
        return degree_sequence(part for part in text.split(","))
    except (ValueError, DomainError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _rational_argument(text: str) -> Fraction:
    try:
        return tablefile.parse_rational(text)
    except TableFormatError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "machine"), default="text",
        help="output format (default: text)",
    )
    common.add_argument(
        "--precision", type=int, default=estimation.DEFAULT_PRECISION, metavar="DIGITS",
        help="working precision for estimates, in significant decimal digits",
    )
    common.add_argument(
        "--paper-constants", action="store_true",
        help="use the unshifted textbook integral constants in estimates "
             "(reproduces published intermediates; not sound for small indices)",
    )
    common.add_argument(
        "--max-exact-digits", type=int, default=bounds_mod.DEFAULT_DIGIT_BUDGET,
        metavar="DIGITS", help="digit budget for exact binomials (default: 1000000)",
    )

    parser = _Parser(prog="betti", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p_pure = sub.add_parser(
        "pure", parents=[common], help="pure diagram of a degree sequence"
    )
    p_pure.add_argument(
        "degrees", type=_degrees_argument,
        help="comma-separated strictly increasing integers, e.g. 0,2,4,5",
    )

    p_dec = sub.add_parser(
        "decompose", parents=[common], help="decompose a BT1 table into pure diagrams"
    )
    p_dec.add_argument("path", help="BT1 table file")
    p_dec.add_argument(
        "--check", action="store_true",
        help="re-verify exact reconstruction and the chain",
    )
    p_dec.add_argument(
        "--codim", type=int, default=None,
        help="also check that every type length lies in [codim, pdim]",
    )

    p_bounds = sub.add_parser("bounds", help="binomial bounds on total Betti numbers")
    bsub = p_bounds.add_subparsers(dest="target", required=True, metavar="TARGET")

    b_pure = bsub.add_parser(
        "pure", parents=[common], help="bounds C(N,i)*N**(+-r) for pure diagrams"
    )
    b_pure.add_argument("-N", dest="n", type=int, required=True, help="sequence length")
    b_pure.add_argument("-r", dest="r", type=int, required=True, help="row slack")
    b_pure.add_argument("-i", dest="i", type=int, required=True, help="column index")

    b_mod = bsub.add_parser(
        "module", parents=[common], help="bounds from codim/pdim/reg/beta0"
    )
    b_mod.add_argument("--codim", type=int, required=True)
    b_mod.add_argument("--pdim", type=int, required=True)
    b_mod.add_argument("--reg", type=int, required=True)
    b_mod.add_argument("--beta0", type=_rational_argument, default=Fraction(1))
    b_mod.add_argument("-i", dest="i", type=int, required=True)

    b_ver = bsub.add_parser(
        "veronese", parents=[common], help="bounds for the degree-d Veronese of n-space"
    )
    b_ver.add_argument("-n", dest="n", type=int, required=True)
    b_ver.add_argument("-d", dest="d", type=int, required=True)
    b_ver.add_argument("-i", dest="i", type=int, required=True)
    b_ver.add_argument(
        "--estimate", action="store_true",
        help="digit bracket instead of exact rationals",
    )

    b_var = bsub.add_parser(
        "variety", parents=[common], help="bounds for an embedded variety"
    )
    b_var.add_argument("--dim-l", dest="dim_l", type=int, required=True)
    b_var.add_argument("--dim-x", dest="dim_x", type=int, required=True)
    b_var.add_argument("--reg", type=int, required=True)
    b_var.add_argument("-i", dest="i", type=int, required=True)
    b_var.add_argument("--estimate", action="store_true")

    p_dim = sub.add_parser(
        "dim-l", parents=[common],
        help="dim |O_X(e)| for a degree-delta hypersurface in m-space",
    )
    p_dim.add_argument("-m", dest="m", type=int, required=True)
    p_dim.add_argument("--delta", type=int, required=True)
    p_dim.add_argument("-e", dest="e", type=int, required=True)

    return parser


def _cmd_pure(args):
    table = pure_diagram(args.degrees)
    totals = [str(table.total(i)) for i in range(table.pdim + 1)]
    inputs = {"degrees": list(args.degrees)}
    results = {
        "entries": [
            {"i": i, "j": j, "value": str(v)} for (i, j), v in table.items()
        ],
        "totals": totals,
        "pdim": table.pdim,
        "reg": table.reg,
    }
    text = [format_diagram(table), "", "totals: " + "  ".join(totals)]
    return inputs, results, text


def _cmd_decompose(args):
    table = tablefile.load(args.path)
    decomposition = decompose(table)
    if args.check or args.codim is not None:
        verify_decomposition(table, decomposition, codim=args.codim)
    inputs = {"path": args.path, "check": bool(args.check), "codim": args.codim}
    results = {
        "terms": [
            {"coefficient": str(c), "type": list(d)} for c, d in decomposition
        ],
        "coefficient_sum": str(decomposition.coefficient_sum()),
    }
    text = [f"{c}  ({','.join(str(x) for x in d)})" for c, d in decomposition]
    if args.check or args.codim is not None:
        results["checked"] = True
        text.append("check: ok")
    return inputs, results, text


def _bound_pair_report(pair, extra=None):
    results = dict(extra or {})
    results.update({"mode": "exact", "lower": str(pair.lower), "upper": str(pair.upper)})
    text = [f"{k} = {v}" for k, v in (extra or {}).items()]
    text += [f"lower = {pair.lower}", f"upper = {pair.upper}"]
    return results, text


def _digit_bracket_report(bracket, extra=None, note=None):
    results = dict(extra or {})
    results.update(
        {
            "mode": "estimate",
            "exp_lo": bracket.exp_lo,
            "exp_hi": bracket.exp_hi,
            "digits_lo": bracket.digits_lo,
            "digits_hi": bracket.digits_hi,
        }
    )
    text = [f"{k} = {v}" for k, v in (extra or {}).items()]
    if note:
        text.append(note)
    text += [
        f"exp_lo = {bracket.exp_lo}",
        f"exp_hi = {bracket.exp_hi}",
        f"value in [10^{bracket.exp_lo}, 10^{bracket.exp_hi}]; "
        f"digits in [{bracket.digits_lo}, {bracket.digits_hi}]",
    ]
    return results, text


def _cmd_bounds(args):
    inputs = {
        "precision": args.precision,
        "paper_constants": bool(args.paper_constants),
        "max_exact_digits": args.max_exact_digits,
    }
    if args.target == "pure":
        inputs.update({"N": args.n, "r": args.r, "i": args.i})
        if args.n >= 1:
            bounds_mod.ensure_binomial_budget(args.n, args.i, args.max_exact_digits)
        results, text = _bound_pair_report(bounds_mod.pure_bounds(args.n, args.r, args.i))
    elif args.target == "module":
        inputs.update(
            {
                "codim": args.codim,
                "pdim": args.pdim,
                "reg": args.reg,
                "beta0": str(args.beta0),
                "i": args.i,
            }
        )
        if args.pdim >= 0:
            bounds_mod.ensure_binomial_budget(args.pdim, args.i, args.max_exact_digits)
        pair = bounds_mod.algebraic_bounds(args.codim, args.pdim, args.reg, args.beta0, args.i)
        results, text = _bound_pair_report(pair)
    elif args.target == "veronese":
        inputs.update({"n": args.n, "d": args.d, "i": args.i, "estimate": bool(args.estimate)})
        codim = bounds_mod.veronese_codim(args.n, args.d).codim
        if args.estimate:
            bracket = estimation.veronese_digit_bracket(
                args.n, args.d, args.i, args.precision, args.paper_constants
            )
            results, text = _digit_bracket_report(bracket, {"N": codim})
        else:
            try:
                pair = bounds_mod.veronese_bounds(
                    args.n, args.d, args.i, args.max_exact_digits
                )
            except TooLarge:
                bracket = estimation.veronese_digit_bracket(
                    args.n, args.d, args.i, args.precision, args.paper_constants
                )
                results, text = _digit_bracket_report(
                    bracket, {"N": codim},
                    note="exact binomial over digit budget; estimated instead",
                )
            else:
                results, text = _bound_pair_report(pair, {"N": codim})
    else:  # variety
        inputs.update(
            {
                "dim_l": args.dim_l,
                "dim_x": args.dim_x,
                "reg": args.reg,
                "i": args.i,
                "estimate": bool(args.estimate),
            }
        )
        if args.estimate:
            bracket = estimation.variety_digit_bracket(
                args.dim_l, args.dim_x, args.reg, args.i, args.precision, args.paper_constants
            )
            results, text = _digit_bracket_report(bracket)
        else:
            try:
                pair = bounds_mod.variety_bounds(
                    args.dim_l, args.dim_x, args.reg, args.i, args.max_exact_digits
                )
            except TooLarge:
                bracket = estimation.variety_digit_bracket(
                    args.dim_l, args.dim_x, args.reg, args.i, args.precision, args.paper_constants
                )
                results, text = _digit_bracket_report(
                    bracket,
                    note="exact binomial over digit budget; estimated instead",
                )
            else:
                results, text = _bound_pair_report(pair)
    return inputs, results, text


def _cmd_dim_l(args):
    value = bounds_mod.hypersurface_dim_l(args.m, args.delta, args.e)
    inputs = {"m": args.m, "delta": args.delta, "e": args.e}
    results = {"dim_l": value}
    text = [f"dim |L| = {value}"]
    return inputs, results, text


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    budget = getattr(args, "max_exact_digits", 0) or 0
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(
            max(sys.get_int_max_str_digits(), 2 * budget + 4300)
        )

    if args.command == "pure":
        command, handler = "pure", _cmd_pure
    elif args.command == "decompose":
        command, handler = "decompose", _cmd_decompose
    elif args.command == "bounds":
        command, handler = f"bounds {args.target}", _cmd_bounds
    else:
        command, handler = "dim-l", _cmd_dim_l

    try:
        inputs, results, text = handler(args)
    except TableFormatError as exc:
        print(f"betti: {exc}", file=sys.stderr)
        return 1
    except BettiError as exc:
        print(f"betti: {exc}", file=sys.stderr)
        return 2

    if args.format == "machine":
        print(json.dumps(
            {"command": command, "inputs": inputs, "results": results, "status": "ok"}
        ))
    else:
        print("\n".join(text))
    return 0


def console_main() -> None:
    raise SystemExit(main())

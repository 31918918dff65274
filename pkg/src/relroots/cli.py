"""``relroots`` command line.

Exit status: 0 on success, 1 on a domain error (disconnected input, value out
of range, ...), 2 on a usage error.  Results go to stdout, diagnostics to
stderr.  Rationals are printed as ``num/den``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .families import FamilySpec, make_family
from .families import theta as theta_graph
from .formats import format_edge_list, iter_graph6, read_graph_text
from .graph import GraphError, Multigraph, Terminals, edge_substitute
from .poly import PolynomialError, is_real_rooted
from .reliability import forms, h_polynomial, reliability, split_reliability
from .roots import (
    beta,
    branch_csv,
    certify_nonreal,
    gadget_equation,
    k4e_branch,
    reliability_roots,
    synthesize_root_near,
    theta_real_rooted,
    verify_substitution_theorem,
)
from .survey import exhaustive_survey, kn_root_trend, random_survey, survey_stem


class UsageError(Exception):
    pass


def _rat(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _fraction_arg(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _positive_fraction(text: str) -> Fraction:
    x = _fraction_arg(text)
    if x <= 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return x


def _terminals_arg(text: str) -> Terminals:
    try:
        s, t = (int(v) for v in text.split(","))
        return Terminals(s, t)
    except (ValueError, GraphError) as exc:
        raise argparse.ArgumentTypeError(f"terminals must be 's,t' with s != t: {text!r}") from exc


# -- input -------------------------------------------------------------------------------


def _family(text: str) -> tuple[Multigraph, Terminals | None]:
    try:
        return make_family(FamilySpec.parse(text))
    except (GraphError, ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad family spec {text!r}: {exc}") from exc


def _load_graph(args) -> tuple[Multigraph, Terminals | None]:
    if args.family and args.file:
        raise UsageError("give exactly one of --family, --file or stdin")
    if args.family:
        return _family(args.family)
    if args.file:
        try:
            with open(args.file) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from exc
    else:
        if sys.stdin is None or sys.stdin.isatty():
            raise UsageError("no graph given (use --family, --file or pipe a graph on stdin)")
        text = sys.stdin.read()
        if not text.strip():
            raise UsageError("no graph on stdin (use --family, --file or pipe a graph)")
    return read_graph_text(text), None


def _terminals(args, default: Terminals | None) -> Terminals:
    T = args.terminals or default
    if T is None:
        raise UsageError("this graph has no designated terminals; pass --terminals s,t")
    return T


# -- output ------------------------------------------------------------------------------


def _human(value, indent: str = "") -> list[str]:
    lines = []
    for key, v in value.items():
        if isinstance(v, dict):
            lines.append(f"{indent}{key}:")
            lines.extend(_human(v, indent + "  "))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{indent}{key}:")
            for item in v:
                sub = _human(item, indent + "    ")
                lines.append(indent + "  - " + sub[0].lstrip())
                lines.extend(sub[1:])
        elif isinstance(v, list):
            lines.append(f"{indent}{key}: " + " ".join(str(x) for x in v))
        else:
            lines.append(f"{indent}{key}: {'-' if v is None else v}")
    return lines


def _emit(args, payload: dict, csv_text: str | None = None) -> None:
    fmt = args.format
    if fmt == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    elif fmt == "csv":
        if csv_text is None:
            raise UsageError(f"--format csv is not available for {args.command}")
        sys.stdout.write(csv_text)
    else:
        sys.stdout.write("\n".join(_human(payload)) + "\n")


def _coeff_csv(name: str, coeffs: list[str]) -> str:
    return "power," + name + "\n" + "".join(f"{i},{c}\n" for i, c in enumerate(coeffs))


# -- commands ----------------------------------------------------------------------------


def cmd_rel(args) -> None:
    G, _ = _load_graph(args)
    rel = reliability(G)
    _emit(args, {"n": G.n, "m": G.m, "rel": rel.to_json()}, _coeff_csv("rel", rel.to_json()))


def cmd_forms(args) -> None:
    G, _ = _load_graph(args)
    f = forms(G)
    rows = ["i,F,H,c"]
    for i in range(f.m + 1):
        F = f.F[i] if i <= f.d else ""
        H = f.H[i] if i <= f.d else ""
        rows.append(f"{i},{F},{H},{f.c[i]}")
    _emit(args, f.to_json(), "\n".join(rows) + "\n")


def cmd_roots(args) -> None:
    G, _ = _load_graph(args)
    r = reliability_roots(G, args.eps)
    out = r.to_json()
    rows = ["lo,hi,multiplicity,approx"]
    rows += [f"{x['interval'][0]},{x['interval'][1]},{x['multiplicity']},{x['approx']!r}"
             for x in out["real_roots"]]
    _emit(args, out, "\n".join(rows) + "\n")


def cmd_certify(args) -> None:
    G, _ = _load_graph(args)
    _emit(args, certify_nonreal(G).to_json())


def cmd_split(args) -> None:
    G, default = _load_graph(args)
    T = _terminals(args, default)
    sp = split_reliability(G, T)
    _emit(args, {"n": G.n, "m": G.m, "terminals": [T.s, T.t], "split": sp.to_json()},
          _coeff_csv("split", sp.to_json()))


def cmd_theta(args) -> None:
    l1, l2, l3 = sorted(args.lengths)
    if l1 < 1:
        raise UsageError("path lengths must be positive")
    criterion = theta_real_rooted(l1, l2, l3)
    h = h_polynomial(theta_graph(l1, l2, l3))
    sturm = h.degree < 1 or is_real_rooted(h)
    _emit(args, {"lengths": [l1, l2, l3], "criterion_real_rooted": criterion,
                 "sturm_real_rooted": sturm, "agree": criterion == sturm, "h": h.to_json()})


def cmd_substitute(args) -> None:
    G, _ = _load_graph(args)
    H, T = _family(args.gadget)
    T = args.terminals or T
    if T is None:
        raise UsageError("gadget has no designated terminals; pass --terminals s,t")
    GH = edge_substitute(G, H, T)
    out = {"n": GH.n, "m": GH.m, "edges": [[a, b] for a, b in GH.edges]}
    if args.verify:
        out["substitution_check"] = verify_substitution_theorem(G, H, T)
    if args.format == "human" and not args.verify:
        sys.stdout.write(format_edge_list(GH))
        return
    _emit(args, out, "a,b\n" + "".join(f"{a},{b}\n" for a, b in GH.edges))


def cmd_gadget_eq(args) -> None:
    H, T = _family(args.gadget)
    T = args.terminals or T
    if T is None:
        raise UsageError("gadget has no designated terminals; pass --terminals s,t")
    eq = gadget_equation(H, T, args.s)
    out = eq.to_json()
    out["real_roots"] = [r.to_json() for r in eq.real_roots(args.eps)]
    _emit(args, out)


def cmd_branch(args) -> None:
    pts = k4e_branch(args.s_lo, args.s_hi, args.steps, args.eps)
    out = {"points": [{"s": _rat(p.s), "q": p.q, "residual": p.residual, "n_real": p.n_real}
                      for p in pts]}
    _emit(args, out, branch_csv(pts))


def cmd_beta(args) -> None:
    _emit(args, beta().to_json())


def cmd_synthesize(args) -> None:
    res = synthesize_root_near(args.target, args.eps)
    out = res.to_json()
    if res.graph is not None and args.edges:
        out["edges"] = [[a, b] for a, b in res.graph.edges]
    _emit(args, out)


def cmd_survey_random(args) -> None:
    res = random_survey(args.n, args.rho, args.trials, args.seed, args.out_dir,
                        with_lambda=not args.no_lambda)
    if args.format == "json" and args.out_dir is None:
        sys.stdout.write(res.jsonl())
        return
    out = res.summary.to_json()
    if args.out_dir is not None:
        out["stem"] = survey_stem(res.summary)
    _emit(args, out)


def cmd_survey_exhaustive(args) -> None:
    if args.n is None:
        if sys.stdin is None or sys.stdin.isatty():
            raise UsageError("give --n (1..6) or pipe graph6 lines on stdin")
        res = exhaustive_survey(graphs=iter_graph6(sys.stdin))
    else:
        res = exhaustive_survey(args.n)
    out = res.to_json()
    rows = ["n_distinct_real,count"] + [f"{k},{v}" for k, v in out["histogram"].items()]
    _emit(args, out, "\n".join(rows) + "\n")


def cmd_kn_trend(args) -> None:
    trend = kn_root_trend(args.n_max, args.eps)
    out = {"rows": [{"n": r.n, "min_real_root": r.approx,
                     "interval": None if r.min_root is None else [_rat(r.min_root[0]), _rat(r.min_root[1])],
                     "n_distinct_real": r.n_distinct_real} for r in trend.rows],
           "strictly_decreasing": trend.strictly_decreasing,
           "violations": trend.violations()}
    if not trend.strictly_decreasing:
        print(f"warning: minima not strictly decreasing at n = {trend.violations()}", file=sys.stderr)
    _emit(args, out, trend.csv())


# -- parser ------------------------------------------------------------------------------


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", metavar="NAME:PARAMS",
                   help="inline family, e.g. cycle:5, theta:1,2,2, hk:4,2, k4e, er:8,1/2,3")
    p.add_argument("--file", metavar="PATH", help="edge list ('n m' header) or graph6 file")


def _add_common(p: argparse.ArgumentParser, formats=("human", "json")) -> None:
    p.add_argument("--format", choices=formats, default="json")
    p.add_argument("--eps", type=_positive_fraction, default=Fraction(1, 10**12),
                   help="isolation width (rational or decimal, default 1e-12)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="relroots",
        description="Exact reliability polynomials, their roots and related experiments. "
                    "Graphs come from --family, --file or stdin (edge list or graph6).",
    )
    sub = ap.add_subparsers(dest="command", metavar="COMMAND", required=True)

    def graph_cmd(name, fn, help_, formats=("human", "json")):
        p = sub.add_parser(name, help=help_)
        _add_input(p)
        _add_common(p, formats)
        p.set_defaults(func=fn)
        return p

    graph_cmd("rel", cmd_rel, "reliability polynomial", ("human", "json", "csv"))
    graph_cmd("forms", cmd_forms, "F-, H- and cutset vectors", ("human", "json", "csv"))
    graph_cmd("roots", cmd_roots, "real and complex roots of h", ("human", "json", "csv"))
    graph_cmd("certify", cmd_certify, "nonreal-root certificate from c1, c2")
    p = graph_cmd("split", cmd_split, "split reliability between two terminals",
                  ("human", "json", "csv"))
    p.add_argument("--terminals", type=_terminals_arg, metavar="S,T")

    p = sub.add_parser("theta", help="real-rootedness of a theta graph")
    p.add_argument("lengths", type=int, nargs=3, metavar="L")
    _add_common(p)
    p.set_defaults(func=cmd_theta)

    p = graph_cmd("substitute", cmd_substitute, "replace every edge by a gadget",
                  ("human", "json", "csv"))
    p.add_argument("--gadget", required=True, metavar="NAME:PARAMS")
    p.add_argument("--terminals", type=_terminals_arg, metavar="S,T",
                   help="gadget attachment vertices (default: the family's terminals)")
    p.add_argument("--verify", action="store_true",
                   help="check that gadget-equation roots are reliability roots")

    p = sub.add_parser("gadget-eq", help="splitRel(H) - s Rel(H) and its real roots")
    p.add_argument("--gadget", required=True, metavar="NAME:PARAMS")
    p.add_argument("--terminals", type=_terminals_arg, metavar="S,T")
    p.add_argument("--s", type=_fraction_arg, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_gadget_eq)

    p = sub.add_parser("branch", help="trace the K4-e branch q(s)")
    p.add_argument("--s-lo", type=_fraction_arg, default=Fraction(-1, 2))
    p.add_argument("--s-hi", type=_fraction_arg, default=Fraction(-3, 20))
    p.add_argument("--steps", type=int, default=500)
    _add_common(p, ("human", "json", "csv"))
    p.set_defaults(func=cmd_branch, eps=Fraction(1, 10**13))

    p = sub.add_parser("beta", help="the K4-e branch endpoint beta")
    _add_common(p)
    p.set_defaults(func=cmd_beta)

    p = sub.add_parser("synthesize", help="graph with a real reliability root near a target")
    p.add_argument("--target", type=_fraction_arg, required=True)
    p.add_argument("--edges", action="store_true", help="include the witness edge list")
    _add_common(p)
    p.set_defaults(func=cmd_synthesize, eps=Fraction(1, 100))

    p = sub.add_parser("survey-random", help="G(n, rho) survey (JSON lines on stdout)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rho", type=_fraction_arg, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-dir", metavar="DIR", help="write <stem>.jsonl and <stem>.summary.json")
    p.add_argument("--no-lambda", action="store_true", help="skip edge connectivity")
    _add_common(p)
    p.set_defaults(func=cmd_survey_random)

    p = sub.add_parser("survey-exhaustive", help="real-root histogram over all connected graphs")
    p.add_argument("--n", type=int, help="order 1..6; omit to read graph6 lines from stdin")
    _add_common(p, ("human", "json", "csv"))
    p.set_defaults(func=cmd_survey_exhaustive)

    p = sub.add_parser("kn-trend", help="smallest real root of h(K_n), n = 3..n-max")
    p.add_argument("--n-max", type=int, default=12)
    _add_common(p, ("human", "json", "csv"))
    p.set_defaults(func=cmd_kn_trend)
    return ap


# options whose values are often negative rationals such as -1/2
_SIGNED = ("--s", "--s-lo", "--s-hi", "--target")


def _glue_signed(argv: list[str]) -> list[str]:
    out, i = [], 0
    while i < len(argv):
        a = argv[i]
        if a in _SIGNED and i + 1 < len(argv) and argv[i + 1][:1] == "-":
            out.append(f"{a}={argv[i + 1]}")
            i += 2
        else:
            out.append(a)
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = _glue_signed(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except UsageError as exc:
        print(f"relroots: usage error: {exc}", file=sys.stderr)
        return 2
    except (GraphError, PolynomialError, ValueError, ArithmeticError) as exc:
        print(f"relroots: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

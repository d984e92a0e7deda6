"""Command line front-end.

Commands read a graph file from --in (default stdin) and write results
to --out (default stdout), so they chain through pipes.  Exit codes:
0 success, 1 verification failure, 2 malformed input or flags.
"""

import argparse
import sys

from . import verify as verify_mod
from .balance import balance_certificate, frustration_index, frustration_number
from .core import (
    GraphError,
    SignedGraph,
    complete_graph,
    cycle_graph,
    negate,
    path_graph,
    random_graph,
    star_graph,
    triangle_census,
    vertex_cover_number,
)
from .fileformats import (
    FormatError,
    parse_graph,
    parse_orientation,
    serialize_graph,
    serialize_orientation,
    to_dot,
)
from .operators import line_graph_combinatorial, total_graph
from .orientation import BindingError, eulerian_orientation, orient
from .product import cartesian_product, polynomial_compose, polynomial_spectrum
from .spectral import (
    lambda_max_bound,
    main_eigenvalues,
    spectrum,
    spectrum_interval,
    total_spectrum_formula,
)
from .switching import switch


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def _read_text(path):
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_graph(args) -> SignedGraph:
    return parse_graph(_read_text(args.infile))


def _load_orientation(args, g: SignedGraph):
    if getattr(args, "orientation", None):
        return parse_orientation(_read_text(args.orientation), g)
    return orient(g)


def _vertexset(text):
    if not text:
        return set()
    try:
        return {int(tok) for tok in text.split(",")}
    except ValueError:
        raise GraphError("bad vertex list %r" % (text,)) from None


def _sorted_ids(ids):
    return " ".join(str(i) for i in sorted(ids))


# ---------------------------------------------------------------------------
# handlers


def _cmd_gen(args):
    if args.family == "path":
        g = path_graph(args.n, args.signs)
    elif args.family == "cycle":
        g = cycle_graph(args.n, args.signs)
    elif args.family == "complete":
        g = complete_graph(args.n, args.signs)
    elif args.family == "star":
        g = star_graph(args.n, args.signs)
    else:
        g = random_graph(args.n, args.p, args.q, args.seed)
    _write_text(args.out, serialize_graph(g))
    return 0


def _cmd_orient(args):
    g = _load_graph(args)
    if args.eulerian:
        eta = eulerian_orientation(g)
    else:
        eta = orient(g, seed=args.seed)
    _write_text(args.out, serialize_orientation(eta))
    return 0


_OPERATORS = {"lc": ("L", "C"), "ls": ("L", "S"), "tc": ("T", "C"), "ts": ("T", "S")}


def _cmd_op(args):
    g = _load_graph(args)
    eta = _load_orientation(args, g)
    kind, variant = _OPERATORS[args.operator]
    if kind == "L":
        out = line_graph_combinatorial(g, eta, variant)
    else:
        out = total_graph(g, eta, variant)
    _write_text(args.out, serialize_graph(out))
    return 0


def _cmd_switch(args):
    g = _load_graph(args)
    _write_text(args.out, serialize_graph(switch(g, _vertexset(args.set))))
    return 0


def _cmd_invariant(args):
    g = _load_graph(args)
    lines = []
    if args.which == "balance":
        cert = balance_certificate(g)
        if cert is None:
            lines.append("unbalanced")
        else:
            lines.append("balanced")
            lines.append("switching-set: %s" % _sorted_ids(cert))
    elif args.which == "antibalance":
        cert = balance_certificate(negate(g))
        if cert is None:
            lines.append("not antibalanced")
        else:
            lines.append("antibalanced")
            lines.append("switching-set: %s" % _sorted_ids(cert))
    elif args.which == "frustration-index":
        res = frustration_index(g)
        lines.append("frustration-index: %d" % res.value)
        lines.append("witness-edges: %s" % _sorted_ids(res.witness))
    elif args.which == "frustration-number":
        res = frustration_number(g)
        lines.append("frustration-number: %d" % res.value)
        lines.append("witness-vertices: %s" % _sorted_ids(res.witness))
    elif args.which == "vertex-cover":
        tau, cover = vertex_cover_number(g)
        lines.append("vertex-cover-number: %d" % tau)
        lines.append("witness-vertices: %s" % _sorted_ids(cover))
    else:
        census = triangle_census(g)
        lines.append("positive-triangles: %d" % census.positive)
        lines.append("negative-triangles: %d" % census.negative)
        lines.append("total-triangles: %d" % census.total)
    _write_text(args.out, "\n".join(lines) + "\n")
    return 0


def _cmd_spectrum(args):
    g = _load_graph(args)
    spec = spectrum(g, "laplacian" if args.laplacian else "adjacency")
    _write_text(args.out, "\n".join(_fmt(x) for x in spec.values) + "\n")
    return 0


def _cmd_spectrum_formula(args):
    g = _load_graph(args)
    spec = total_spectrum_formula(g, "C" if args.variant == "tc" else "S")
    _write_text(args.out, "\n".join(_fmt(x) for x in spec.values) + "\n")
    return 0


def _cmd_interval(args):
    g = _load_graph(args)
    lo, hi = spectrum_interval(g, "C" if args.variant == "tc" else "S")
    _write_text(args.out, "%s %s\n" % (_fmt(lo), _fmt(hi)))
    return 0


def _cmd_main_eigenvalues(args):
    g = _load_graph(args)
    mains = main_eigenvalues(g)
    lines = [
        "%s weight %s" % (_fmt(v), _fmt(w))
        for v, w in zip(mains.values, mains.weights)
    ]
    _write_text(args.out, "\n".join(lines) + "\n")
    return 0


def _cmd_bound(args):
    g = _load_graph(args)
    _write_text(args.out, _fmt(lambda_max_bound(g)) + "\n")
    return 0


def _cmd_product(args):
    with open(args.a, "r", encoding="utf-8") as fh:
        g1 = parse_graph(fh.read())
    with open(args.b, "r", encoding="utf-8") as fh:
        g2 = parse_graph(fh.read())
    _write_text(args.out, serialize_graph(cartesian_product(g1, g2)))
    return 0


def _cmd_poly(args):
    g = _load_graph(args)
    try:
        coeffs = [int(tok) for tok in args.coeffs.split(",")]
    except ValueError:
        raise GraphError("bad coefficient list %r" % (args.coeffs,)) from None
    if args.spectrum:
        spec = polynomial_spectrum(coeffs, g)
        _write_text(args.out, "\n".join(_fmt(x) for x in spec.values) + "\n")
    else:
        eta = _load_orientation(args, g)
        _write_text(args.out, serialize_graph(polynomial_compose(coeffs, g, eta)))
    return 0


def _cmd_export_dot(args):
    g = _load_graph(args)
    _write_text(args.out, to_dot(g))
    return 0


def _cmd_verify(args):
    if args.suite == "all":
        names = None
    else:
        if args.suite not in verify_mod.available_suites():
            print(
                "error: unknown suite %r (known: %s)"
                % (args.suite, ", ".join(verify_mod.available_suites())),
                file=sys.stderr,
            )
            return 2
        names = [args.suite]
    report = verify_mod.run(names, n_max=args.n_max, trials=args.trials, seed=args.seed)
    _write_text(args.out, report.render() + "\n")
    if not report.ok:
        written = report.write_counterexamples(args.counterexample_dir)
        print("counterexamples written: %d file(s) under %s"
              % (len(written), args.counterexample_dir), file=sys.stderr)
        return 1
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_io(sub, include_in=True):
    if include_in:
        sub.add_argument("--in", dest="infile", default=None,
                         help="input graph file (default stdin)")
    sub.add_argument("--out", default=None, help="output file (default stdout)")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="sgraph", description="signed graph toolkit"
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("gen", help="generate a graph")
    p.add_argument("--family", required=True,
                   choices=["path", "cycle", "complete", "star", "random"])
    p.add_argument("--n", type=int, required=True,
                   help="order (leaf count for star)")
    p.add_argument("--signs", default="+", help="sign pattern, e.g. +++- or -")
    p.add_argument("--p", type=float, default=0.5, help="edge probability (random)")
    p.add_argument("--q", type=float, default=0.5, help="negative sign probability")
    p.add_argument("--seed", type=int, default=0)
    _add_io(p, include_in=False)
    p.set_defaults(func=_cmd_gen)

    p = subs.add_parser("orient", help="orient a graph")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--eulerian", action="store_true")
    _add_io(p)
    p.set_defaults(func=_cmd_orient)

    p = subs.add_parser("op", help="apply a line or total graph operator")
    p.add_argument("operator", choices=sorted(_OPERATORS))
    p.add_argument("--orientation", default=None,
                   help="orientation file (default: canonical)")
    _add_io(p)
    p.set_defaults(func=_cmd_op)

    p = subs.add_parser("switch", help="switch at a vertex set")
    p.add_argument("--set", required=True, help="comma-separated vertex ids")
    _add_io(p)
    p.set_defaults(func=_cmd_switch)

    p = subs.add_parser("invariant", help="compute an invariant with witness")
    p.add_argument("which", choices=["balance", "antibalance", "frustration-index",
                                     "frustration-number", "vertex-cover",
                                     "triangles"])
    _add_io(p)
    p.set_defaults(func=_cmd_invariant)

    p = subs.add_parser("spectrum", help="adjacency or Laplacian spectrum")
    p.add_argument("--laplacian", action="store_true")
    _add_io(p)
    p.set_defaults(func=_cmd_spectrum)

    p = subs.add_parser("spectrum-formula",
                        help="closed-form total graph spectrum (regular roots)")
    p.add_argument("--variant", required=True, choices=["tc", "ts"])
    _add_io(p)
    p.set_defaults(func=_cmd_spectrum_formula)

    p = subs.add_parser("spectrum-interval",
                        help="interval containing the total graph spectrum")
    p.add_argument("--variant", required=True, choices=["tc", "ts"])
    _add_io(p)
    p.set_defaults(func=_cmd_interval)

    p = subs.add_parser("main-eigenvalues", help="main eigenvalues with weights")
    _add_io(p)
    p.set_defaults(func=_cmd_main_eigenvalues)

    p = subs.add_parser("bound-lambda-max", help="degree bound for total graphs")
    _add_io(p)
    p.set_defaults(func=_cmd_bound)

    p = subs.add_parser("product", help="Cartesian product of two graph files")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    _add_io(p, include_in=False)
    p.set_defaults(func=_cmd_product)

    p = subs.add_parser("poly", help="polynomial composition")
    p.add_argument("--coeffs", required=True, help="c0,c1,...")
    p.add_argument("--orientation", default=None)
    p.add_argument("--spectrum", action="store_true",
                   help="print the closed-form spectrum instead of composing")
    _add_io(p)
    p.set_defaults(func=_cmd_poly)

    p = subs.add_parser("export-dot", help="DOT export (negative edges dashed)")
    _add_io(p)
    p.set_defaults(func=_cmd_export_dot)

    p = subs.add_parser("verify", help="run theorem verification suites")
    p.add_argument("--suite", default="all")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--counterexample-dir", default="counterexamples")
    _add_io(p, include_in=False)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, GraphError, BindingError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point: ``parkideal <subcommand> [options]``.

Exit codes: 0 success, 2 bad input or unsupported graph, 3 resource guard.
"""

import argparse
import json
import random
import sys
from fractions import Fraction

from . import betti, chipfire, power, standard, tropical
from .errors import DomainError, InputError, ResourceError
from .graph import Graph, load_graph, reduced_signless_laplacian, tu_weighted_count
from .linalg import det_exact
from .monomials import monomial_csv, skeleton_ideal


def _int_list(text):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def _frac_list(text):
    try:
        return [Fraction(v.strip()) for v in text.split(",") if v.strip()]
    except (ValueError, ZeroDivisionError):
        raise InputError(f"expected comma-separated rationals, got {text!r}") from None


def _frac_str(v):
    return str(Fraction(v))


def _graph_and_k(args, default_k=None):
    g = load_graph(args.graph)
    k = args.k
    if k is None:
        k = g.n - 1 if default_k is None else min(default_k, g.n - 1)
    return g, k


def cmd_ideal(args, out):
    g, k = _graph_and_k(args)
    ideal = skeleton_ideal(g, k)
    if args.format == "json":
        out.write(ideal.to_json() + "\n")
    else:
        out.write("".join(monomial_csv(m) + "\n" for m in ideal.gens))


def cmd_std(args, out):
    g, k = _graph_and_k(args)
    ideal = skeleton_ideal(g, k)
    if args.count:
        count = standard.count_standard(ideal)
        out.write(json.dumps({"count": count}) + "\n" if args.format == "json" else f"{count}\n")
        return
    mons = standard.standard_monomials(ideal)
    if args.format == "json":
        out.write(json.dumps({"n": g.n, "standard": [list(m) for m in mons]}) + "\n")
    else:
        out.write("".join(monomial_csv(m) + "\n" for m in mons))


def cmd_gf(args, out):
    if args.forests is not None:
        poly = standard.inversion_polynomial(args.forests)
    else:
        if args.graph is None:
            raise InputError("gf needs --graph or --forests")
        g, k = _graph_and_k(args)
        poly = standard.degree_generating_function(skeleton_ideal(g, k))
    if args.format == "json":
        out.write(json.dumps({"coeffs": list(poly.coeffs)}) + "\n")
    else:
        out.write(f"{poly}\n")


def cmd_parking(args, out):
    if args.check is not None:
        if args.graph is None:
            raise InputError("--check needs --graph")
        g = load_graph(args.graph)
        ok = standard.is_g_parking(g, _int_list(args.check))
        out.write(json.dumps({"parking": ok}) + "\n" if args.format == "json" else f"{str(ok).lower()}\n")
        return
    if args.n is None:
        raise InputError("parking needs --n (with optional --k) or --graph with --check")
    n = args.n
    if n < 1:
        raise InputError("--n must be >= 1")
    ks = range(n) if args.k is None else [args.k]
    rows = []
    for k in ks:
        u = standard.u_vector(n, k)
        std = standard.count_standard(skeleton_ideal(Graph.complete(n + 1), k))
        rows.append({"k": k, "u": list(u), "std": std,
                     "u_parking": standard.u_parking_count(u), "formula": standard.yan_formula(n, k)})
    if args.format == "json":
        out.write(json.dumps({"n": n, "rows": rows}) + "\n")
    else:
        out.write("k\tu\tstd\tu_parking\tformula\n")
        for r in rows:
            u = ",".join(map(str, r["u"]))
            out.write(f"{r['k']}\t{u}\t{r['std']}\t{r['u_parking']}\t{r['formula']}\n")


def _formula_table(g, k):
    """Totals from closed formulas: all of them for complete graphs at k = 1, else beta_1."""
    complete = len(g.edges) == g.n_vertices * (g.n_vertices - 1) // 2
    if k == 1 and complete:
        return [betti.total_betti_formula(g.n, i) for i in range(1, g.n + 1)]
    if k == 1:
        return [betti.first_betti_graph_formula(g)]
    raise DomainError("closed formulas are available for k = 1 only")


def cmd_betti(args, out):
    g, k = _graph_and_k(args, default_k=1)
    if args.method == "formula":
        totals = _formula_table(g, k)
        if args.format == "json":
            out.write(json.dumps({"totals": totals}) + "\n")
        else:
            out.write("".join(f"beta_{i} = {t}\n" for i, t in enumerate(totals, 1)))
        return
    if args.method == "tropical":
        if k != 1 and g.n > 1:
            raise DomainError("the two-hyperplane construction resolves the k = 1 skeleton only")
        apex = _frac_list(args.apex) if args.apex else None
        table, _ = tropical.tropical_betti(g, apex)
    else:
        table = betti.betti_table(skeleton_ideal(g, k), field=args.field)
    if args.format == "json":
        out.write(table.to_json() + "\n")
    else:
        out.write(str(table) + "\n")


def _arrangement(args):
    if args.graph is not None:
        g = load_graph(args.graph)
        apex = _frac_list(args.apex) if args.apex else None
        return g, tropical.arrangement_for_graph(g, apex)
    if args.n is None:
        raise InputError("tropical-cells needs --graph or --n")
    if args.n < 1:
        raise InputError("--n must be >= 1")
    b = _frac_list(args.apex) if args.apex else tropical.generic_apex(args.n)
    return None, tropical.Arrangement.from_apexes([0] * (args.n - 1), b)


def cmd_tropical_cells(args, out):
    g, arr = _arrangement(args)
    if args.format == "svg":
        out.write(tropical.arrangement_svg(arr) + "\n")
        return
    cx = tropical.enumerate_cells(arr, g)
    if args.format == "json":
        out.write(cx.to_json() + "\n")
        return
    for c in cx.cells:
        label = "" if c.label is None else "\t" + monomial_csv(c.label)
        wit = ",".join(_frac_str(v) for v in c.witness)
        out.write(f"{c.type}\tdim={c.dim}\t({wit}){label}\n")


def cmd_apex(args, out):
    g = load_graph(args.graph)
    b = tropical.clique_cone_apex(g)
    blocks = tropical.clique_blocks(g)
    if args.format == "json":
        out.write(json.dumps({"apex": [_frac_str(v) for v in b],
                              "cliques": [list(c) for c in blocks]}) + "\n")
    else:
        out.write(",".join(_frac_str(v) for v in b) + "\n")


def cmd_chipfire(args, out):
    g = load_graph(args.graph)
    config = _int_list(args.config)
    if args.model == "singletons":
        model = chipfire.FiringModel.singletons()
    elif args.model == "cluster":
        model = chipfire.FiringModel.cluster()
    else:
        if not args.family:
            raise InputError("--model family needs --family like '1;2,3'")
        model = chipfire.FiringModel.from_family(_int_list(s) for s in args.family.split(";"))
    rng = random.Random(args.seed) if args.seed is not None else None
    trace = [] if args.trace else None
    final = chipfire.stabilize(g, config, model, rng=rng, trace=trace)
    if args.format == "json":
        doc = {"final": list(final)}
        if trace is not None:
            doc["trace"] = [{"fire": list(s), "config": list(c)} for s, c in trace]
        out.write(json.dumps(doc) + "\n")
        return
    if trace is not None:
        out.write(chipfire.format_trace(trace))
    out.write("(" + ",".join(map(str, final)) + ")\n")


def cmd_hilbert(args, out):
    g, k = _graph_and_k(args)
    mono = power.monomial_gens(skeleton_ideal(g, k))
    pows = power.power_ideal_gens(g, k)
    max_d = power.socle_bound(g) if args.max_d is None else args.max_d
    rows = power.hilbert_rows(mono, pows, max_d)
    if args.format == "json":
        out.write(json.dumps([{"d": d, "dim_M": a, "dim_J": b, "equal": a == b == ab}
                              for d, a, b, ab in rows]) + "\n")
    else:
        out.write(power.hilbert_tsv(rows))


def cmd_tu_count(args, out):
    g = load_graph(args.graph)
    tu = tu_weighted_count(g)
    det = det_exact(reduced_signless_laplacian(g))
    if args.format == "json":
        out.write(json.dumps({"tu_count": tu, "det": det}) + "\n")
    else:
        out.write(f"{tu}\n")


def cmd_survey(args, out):
    rows = standard.inequality_survey(args.max_vertices, jobs=args.jobs)
    if args.format == "json":
        out.write(json.dumps([{"graph": g.edge_key(), "dim": d, "det": t, "diff": x}
                              for g, d, t, x in rows]) + "\n")
        return
    out.write("graph\tdim\tdet\tdiff\n")
    for g, d, t, x in rows:
        out.write(f"{g.edge_key()}\t{d}\t{t}\t{x}\n")


def build_parser():
    p = argparse.ArgumentParser(prog="parkideal", description="Skeleton ideals of graph parking-function ideals.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, graph=True, k=False):
        sp = sub.add_parser(name, help=help_text)
        if graph:
            sp.add_argument("--graph", required=graph == "required",
                            help="edge-list file or complete:N")
        if k:
            sp.add_argument("--k", type=int, help="skeleton index (default n-1)")
        sp.add_argument("--format", choices=["text", "json"], default="text")
        sp.set_defaults(func=func)
        return sp

    add("ideal", cmd_ideal, "minimal generators of M_G^(k)", graph="required", k=True)
    sp = add("std", cmd_std, "standard monomials of M_G^(k)", graph="required", k=True)
    sp.add_argument("--count", action="store_true")
    sp = add("gf", cmd_gf, "degree generating function", k=True)
    sp.add_argument("--forests", type=int, metavar="N", help="inversion enumerator of rooted forests on N vertices")
    sp = add("parking", cmd_parking, "u-parking counts for complete graphs, or test one sequence", k=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--check", metavar="B", help="comma-separated sequence to test against --graph")
    sp = add("betti", cmd_betti, "graded Betti numbers (k defaults to 1)", graph="required", k=True)
    sp.add_argument("--method", choices=["oracle", "tropical", "formula"], default="oracle")
    sp.add_argument("--apex", help="apex b for the tropical method, comma-separated rationals")
    sp.add_argument("--field", type=int, default=0, help="0 for Q, or a prime")
    sp = sub.add_parser("tropical-cells", help="cells of a two-hyperplane arrangement")
    sp.add_argument("--graph")
    sp.add_argument("--n", type=int)
    sp.add_argument("--apex")
    sp.add_argument("--format", choices=["text", "json", "svg"], default="text")
    sp.set_defaults(func=cmd_tropical_cells)
    add("apex", cmd_apex, "apex for a clique-removal cone graph", graph="required")
    sp = add("chipfire", cmd_chipfire, "stabilize a chip configuration", graph="required")
    sp.add_argument("--config", required=True, help="chips on vertices 1..n, comma-separated")
    sp.add_argument("--model", choices=["singletons", "cluster", "family"], default="cluster")
    sp.add_argument("--family", help="firing sets separated by ';', e.g. '1;2,3'")
    sp.add_argument("--seed", type=int, help="fire random valid sets with this seed")
    sp.add_argument("--trace", action="store_true")
    sp = add("hilbert", cmd_hilbert, "Hilbert functions of S/M_G^(k) and S/J_G^(k)", graph="required", k=True)
    sp.add_argument("--max-d", type=int)
    add("tu-count", cmd_tu_count, "weighted TU-subgraph count", graph="required")
    sp = add("survey", cmd_survey, "dim S/M_G^(1) against the signless-Laplacian determinant", graph=False)
    sp.add_argument("--max-vertices", type=int, default=5)
    sp.add_argument("--jobs", type=int, default=1)
    return p


def run(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        args.func(args, out)
    except (InputError, DomainError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    except ResourceError as exc:
        err.write(f"resource limit: {exc}\n")
        return 3
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command-line front end.

Exit codes: 0 success, 2 input error, 3 method precondition failed,
4 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import experiments, formulas, graphs, rees
from .monomial import MonomialIdeal, hilbert_function, power
from .oracle import FieldSpec, OracleCapExceeded, betti_table_oracle, hochster_entry
from .quotients import (
    NotLinearQuotients,
    NotLinearQuotientsAnyOrder,
    SearchBudgetExceeded,
    compute_set_data,
    linear_quotient_betti,
    revlex_order,
    weighted_betti,
)
from .tables import BettiTable, pdim, regularity

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_MISMATCH = 0, 2, 3, 4


class InputError(ValueError):
    pass


class PreconditionError(RuntimeError):
    pass


# -- sources ---------------------------------------------------------------


def parse_graph(spec: str, seed: int = 0) -> graphs.SimpleGraph:
    """Builder spec such as ``cycle:5``, ``multipartite:2,3``, ``tree:6`` or ``prufer:1,1,4``."""
    name, _, arg = spec.partition(":")
    try:
        nums = [int(x) for x in arg.split(",")] if arg else []
    except ValueError:
        raise InputError(f"bad graph parameters in {spec!r}") from None
    one = {"complete": graphs.complete_graph, "cycle": graphs.cycle, "path": graphs.path, "star": graphs.star, "edgeless": graphs.edgeless}
    try:
        if name in one and len(nums) == 1:
            return one[name](nums[0])
        if name == "multipartite" and nums:
            return graphs.complete_multipartite(nums)
        if name == "tree" and len(nums) == 1:
            return graphs.random_tree(nums[0], random.Random(seed))
        if name == "prufer":
            return graphs.from_prufer(nums)
    except ValueError as e:
        raise InputError(str(e)) from None
    raise InputError(
        f"unknown graph spec {spec!r}; use complete:n, cycle:l, path:n, star:n, edgeless:n, "
        "multipartite:a,b,..., tree:n or prufer:s1,s2,..."
    )


def _read_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"cannot read {path}: {e}") from None


def load_graph(args) -> graphs.SimpleGraph | None:
    if args.graph_file:
        try:
            G = graphs.SimpleGraph.from_json(_read_json(args.graph_file))
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"bad graph JSON: {e}") from None
    elif args.graph:
        G = parse_graph(args.graph, args.seed)
    else:
        return None
    return graphs.complement(G) if args.complement else G


def load_ideal(args) -> MonomialIdeal:
    """The ideal named by the source flags, raised to ``--power``."""
    s = args.power
    if args.counterexample:
        G = experiments.counterexample_graph(args.counterexample)
        I = graphs.cover_ideal(G)
        s = 3 if s is None else s
    elif args.graph_gj:
        G = parse_graph(args.graph_gj, args.seed)
        if args.complement:
            G = graphs.complement(G)
        try:
            I = graphs.ideal_from_graph(G)
        except ValueError as e:
            raise InputError(str(e)) from None
    elif args.ideal_file:
        try:
            I = MonomialIdeal.from_json(_read_json(args.ideal_file))
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"bad ideal JSON: {e}") from None
    else:
        G = load_graph(args)
        if G is None:
            raise InputError("give one of --graph, --graph-file, --graph-gj, --ideal-file, --counterexample")
        I = graphs.edge_ideal(G) if args.edge else graphs.cover_ideal(G)
    s = 1 if s is None else s
    if s < 1:
        raise InputError("--power must be >= 1")
    return power(I, s) if s > 1 else I


def _source_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("ideal source")
    g.add_argument("--graph", help="graph builder spec, e.g. cycle:5 or multipartite:2,3")
    g.add_argument("--graph-file", help="graph JSON {n, edges}")
    g.add_argument("--complement", action="store_true", help="use the complement graph")
    kind = g.add_mutually_exclusive_group()
    kind.add_argument("--cover", action="store_true", help="cover ideal J(G) (the default)")
    kind.add_argument("--edge", action="store_true", help="edge ideal I(G)")
    g.add_argument("--graph-gj", metavar="SPEC", help="degree-(n-2) ideal whose graph G_J is SPEC")
    g.add_argument("--ideal-file", help="monomial ideal JSON {n, weights, generators}")
    g.add_argument("--counterexample", choices=["G", "H"], help="J(G)^3 / J(H)^3 from the built-in pair")
    g.add_argument("--power", type=int, help="raise the ideal to this power")
    return p


def _common_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--field", type=int, default=FieldSpec().characteristic, help="characteristic: a prime, or 0 for QQ")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="parallel tasks for the oracle sweep")
    p.add_argument("--seed", type=int, default=0, help="seed for random graphs")
    return p


def _field(args) -> FieldSpec:
    try:
        return FieldSpec(args.field)
    except ValueError as e:
        raise InputError(str(e)) from None


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# -- betti -----------------------------------------------------------------


def _family_formula_table(args, I: MonomialIdeal) -> BettiTable:
    """Ideal-indexed table from a closed form, when the source is a recognized family."""
    s = args.power or 1
    table = BettiTable(kind="ideal")
    n = I.ctx.n
    if args.graph and not args.complement and not args.edge and args.graph.startswith("complete:"):
        for i in range(n):
            table.add(i, s * (n - 1) + i, formulas.betti_complete_power(n, s, i))
        return table
    if args.graph and args.complement and not args.edge:
        T = parse_graph(args.graph, args.seed)
        if graphs.structure(T).is_forest and graphs.structure(T).is_connected and T.n >= 3:
            for i in range(n - 1):
                table.add(i, s * (n - 2) + i, formulas.betti_tree_complement_power(n, s, i))
            return table
    if args.graph_gj and s == 1:
        G = graphs.graph_from_ideal(I)
        if graphs.structure(G).is_connected:
            for i, v in enumerate(formulas.betti_connected_graph(len(G.edges), n)):
                table.add(i, n - 2 + i, v)
            return table
    raise PreconditionError(
        "no closed form for this source; formulas cover --graph complete:n --cover, "
        "--graph TREE --complement --cover and --graph-gj CONNECTED"
    )


def _table(method: str, args, I: MonomialIdeal) -> BettiTable:
    """Quotient-indexed table by the chosen method."""
    try:
        if method == "lq":
            return linear_quotient_betti(I).to_quotient()
        if method == "oracle":
            return betti_table_oracle(I, _field(args), jobs=args.jobs)
        if method == "formula":
            return _family_formula_table(args, I).to_quotient()
    except (NotLinearQuotients, NotLinearQuotientsAnyOrder, SearchBudgetExceeded, OracleCapExceeded) as e:
        raise PreconditionError(f"{method}: {e}") from None
    raise InputError(f"unknown method {method!r}")


def cmd_betti(args) -> int:
    I = load_ideal(args)
    module = args.module or ("quotient" if args.counterexample else "ideal")
    method = args.method or ("oracle" if args.counterexample else "lq")
    if args.entry:
        try:
            i, j = (int(x) for x in args.entry.split(","))
        except ValueError:
            raise InputError("--entry takes i,j") from None
        # ideal indexing shifts the homological degree by one
        qi = i + 1 if module == "ideal" else i
        if method == "oracle":
            value = hochster_entry(I, qi, j, _field(args), jobs=args.jobs)
        else:
            value = _table(method, args, I)[(qi, j)]
        payload = {"entry": [i, j], "module": module, "method": method, "value": value}
        if args.check:
            other = hochster_entry(I, qi, j, _field(args), jobs=args.jobs) if args.check == "oracle" else _table(args.check, args, I)[(qi, j)]
            payload["check"] = {"method": args.check, "value": other, "agree": other == value}
        _emit(args, payload, str(value) if not args.check else f"{value} ({args.check}: {payload['check']['value']})")
        return EXIT_MISMATCH if args.check and not payload["check"]["agree"] else EXIT_OK

    table = _table(method, args, I)
    shown = table if module == "quotient" else table.to_ideal()
    payload = {"method": method, "table": shown.to_json(), "field": str(_field(args)) if method == "oracle" else None}
    text = shown.pretty()
    rc = EXIT_OK
    if args.check:
        other = _table(args.check, args, I)
        other = other if module == "quotient" else other.to_ideal()
        diff = shown.diff(other)
        payload["check"] = {"method": args.check, "agree": not diff, "diff": [[i, j, a, b] for (i, j), (a, b) in sorted(diff.items())]}
        text += f"\ncheck against {args.check}: " + ("identical" if not diff else f"{len(diff)} differing entries")
        rc = EXIT_MISMATCH if diff else EXIT_OK
    _emit(args, payload, text)
    return rc


# -- other commands --------------------------------------------------------


def cmd_ideal(args) -> int:
    I = load_ideal(args)
    payload = I.to_json()
    payload["degrees"] = I.degrees()
    _emit(args, payload, f"{I}\n{len(I)} generators, degrees {sorted(set(I.degrees()))}")
    return EXIT_OK


def cmd_graph(args) -> int:
    if args.ideal_file or args.graph_gj:
        G = graphs.graph_from_ideal(load_ideal(args)) if args.ideal_file else parse_graph(args.graph_gj, args.seed)
    else:
        G = load_graph(args)
        if G is None:
            raise InputError("give --graph, --graph-file, --graph-gj or --ideal-file")
    st = graphs.structure(G)
    covers = [sorted(c.vertices) for c in graphs.minimal_vertex_covers(G)]
    payload = {
        "graph": G.to_json(),
        "structure": {
            "is_forest": st.is_forest,
            "is_connected": st.is_connected,
            "cyclomatic_number": st.cyclomatic_number,
            "components": st.components,
            "odd_unicyclic": st.odd_unicyclic,
        },
        "linear_type_verdict": rees.graph_verdict(G),
        "minimal_vertex_covers": covers,
    }
    text = f"{G}\ncyclomatic number {st.cyclomatic_number}, {st.components} component(s), verdict {payload['linear_type_verdict']}\n{len(covers)} minimal vertex covers"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_rees(args) -> int:
    J = load_ideal(args)
    try:
        G = graphs.graph_from_ideal(J)
    except ValueError as e:
        raise PreconditionError(f"rees needs a squarefree ideal generated in degree n-2: {e}") from None
    try:
        report = rees.linear_type(J, args.smax)
        gens = rees.defining_ideal_generators(J, args.smax)
    except rees.BudgetExceeded as e:
        raise PreconditionError(str(e)) from None
    except rees.CriterionContradiction as e:
        print(f"contradiction: {e}", file=sys.stderr)
        return EXIT_MISMATCH
    st = graphs.structure(G)
    ci = rees.ci_report(J).to_json() if st.is_connected and (st.is_forest or st.odd_unicyclic) else None
    payload = {
        "ideal": J.to_json(),
        "defining_ideal": gens.to_json(),
        "linear_type": report.to_json(),
        "ci": ci,
    }
    lines = [
        f"G_J: {G}",
        f"K_1: {len(gens.k1)} reduced generators ({gens.k1_raw_count} Taylor relations)",
    ]
    lines += [f"P_{s}: {len(bs)} coincidences" for s, bs in sorted(gens.coincidences.items())]
    lines.append(f"graph verdict {report.graph_verdict}; search up to s={args.smax}: {report.search_verdict}")
    if report.witness is not None:
        lines.append(f"witness at s={report.witness_degree}: {report.witness}")
    if ci:
        lines.append(f"{ci['verdict']}: mu(K)={ci['mu_K']}, expected height {ci['expected_height']}, bidegree (1,1): {ci['all_bidegree_1_1']}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if report.consistent else EXIT_MISMATCH


def _multipartite_weights(args) -> list[int] | None:
    if args.graph and not args.complement and not args.edge:
        name, _, arg = args.graph.partition(":")
        if name == "multipartite":
            return sorted(int(x) for x in arg.split(","))
        if name == "complete":
            return [1] * int(arg)
    return None


def cmd_reg(args) -> int:
    I = load_ideal(args)
    s = args.power or 1
    method = args.method
    if method == "formula":
        w = _multipartite_weights(args)
        if w is None or len(w) < 2:
            raise PreconditionError("the regularity formula needs --graph multipartite:... or complete:n with --cover")
        reg = formulas.reg_multipartite(w, s)
        pd = formulas.pdim_complete_power(len(w), s) if all(x == 1 for x in w) else None
    elif method == "lq" and _multipartite_weights(args):
        # one weighted variable per part; the real ideal only has weighted linear quotients
        w = _multipartite_weights(args)
        table = weighted_betti(compute_set_data(revlex_order(power(experiments.weighted_complete_cover(w), s))), w)
        reg, pd = regularity(table) - 1, pdim(table) + 1
    else:
        table = _table(method, args, I)
        reg, pd = regularity(table), pdim(table)
    payload = {"method": method, "module": "quotient", "reg": reg, "pdim": pd}
    _emit(args, payload, f"reg(S/I) = {reg}" + (f", pdim(S/I) = {pd}" if pd is not None else ""))
    return EXIT_OK


def cmd_hilbert(args) -> int:
    if args.ci_series:
        if args.ci_series < 3:
            raise InputError("--ci-series needs n >= 3")
        B = rees.rees_hilbert_ci(args.ci_series, args.dmax, args.smax)
        payload = {"n": args.ci_series, "d_max": args.dmax, "s_max": args.smax, "coefficients": B.coeffs}
        text = "\n".join(f"s={s}: {rees.extract_power_series(B, s)}" for s in range(args.smax + 1))
        _emit(args, payload, text)
        return EXIT_OK
    I = load_ideal(args)
    values = [hilbert_function(I, d, args.module) for d in range(args.dmax + 1)]
    _emit(args, {"module": args.module, "values": values}, " ".join(map(str, values)))
    return EXIT_OK


def _parse_param(text: str):
    key, sep, value = text.partition("=")
    if not sep:
        raise InputError(f"formula parameters look like key=value, got {text!r}")
    try:
        if "," in value:
            return key, [int(x) for x in value.split(",")]
        return key, int(value)
    except ValueError:
        raise InputError(f"non-integer value in {text!r}") from None


def cmd_formula(args) -> int:
    if args.id == "list":
        payload = {k: {"params": list(v.params), "help": v.help} for k, v in formulas.FORMULAS.items()}
        _emit(args, payload, "\n".join(f"{k} {' '.join(v.params)}: {v.help}" for k, v in formulas.FORMULAS.items()))
        return EXIT_OK
    params = dict(_parse_param(p) for p in args.params)
    spec = formulas.FORMULAS.get(args.id)
    if spec is not None:
        for p in spec.list_params:
            if isinstance(params.get(p), int):
                params[p] = [params[p]]
    try:
        result = formulas.evaluate(args.id, **params)
    except (KeyError, ValueError, TypeError) as e:
        raise InputError(str(e)) from None
    value = result.value
    _emit(args, result.to_json(), " ".join(map(str, value)) if isinstance(value, tuple) else str(value))
    return EXIT_OK


def cmd_verify(args) -> int:
    ids = list(experiments.EXPERIMENTS) if args.id == "all" else [args.id]
    for exp_id in ids:
        if exp_id not in experiments.EXPERIMENTS:
            raise InputError(f"unknown experiment {exp_id!r}; choose from all, {', '.join(experiments.EXPERIMENTS)}")
    config = experiments.RunConfig(_field(args), max(1, args.jobs), args.seed)
    results = []
    for exp_id in ids:
        r = experiments.run_experiment(exp_id, config)
        results.append(r)
        if not args.json:
            print(r.line(), flush=True)
            for m in r.mismatches:
                print(f"    {json.dumps(m, sort_keys=True)}")
    passed = all(r.passed for r in results)
    if args.json:
        print(json.dumps({"passed": passed, "results": [r.to_json() for r in results]}, sort_keys=True))
    else:
        print(f"{sum(r.passed for r in results)}/{len(results)} experiments passed")
    return EXIT_OK if passed else EXIT_MISMATCH


# -- entry point -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common, source = _common_parser(), _source_parser()
    parser = argparse.ArgumentParser(prog="coverideals", description="Cover ideals of graphs: Betti numbers, Rees algebras, experiments.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ideal", parents=[common, source], help="print minimal generators")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("graph", parents=[common, source], help="structure and vertex covers of a graph")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("betti", parents=[common, source], help="graded Betti numbers")
    p.add_argument("--method", choices=["lq", "oracle", "formula"])
    p.add_argument("--entry", metavar="I,J", help="a single entry instead of the table")
    p.add_argument("--check", choices=["lq", "oracle", "formula"], help="compare with a second method")
    p.add_argument("--module", choices=["ideal", "quotient"], help="index as beta(I) or beta(S/I)")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("rees", parents=[common, source], help="defining ideal of the Rees algebra")
    p.add_argument("--smax", type=int, default=4, help="largest T-degree searched for coincidences")
    p.set_defaults(func=cmd_rees)

    p = sub.add_parser("reg", parents=[common, source], help="regularity and projective dimension of S/I")
    p.add_argument("--method", choices=["lq", "oracle", "formula"], default="lq")
    p.set_defaults(func=cmd_reg)

    p = sub.add_parser("hilbert", parents=[common, source], help="Hilbert function values")
    p.add_argument("--dmax", type=int, default=10)
    p.add_argument("--module", choices=["ideal", "quotient"], default="ideal")
    p.add_argument("--ci-series", type=int, metavar="N", help="expand the complete-intersection Rees series for n=N")
    p.add_argument("--smax", type=int, default=3, help="T-degree truncation for --ci-series")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("formula", parents=[common], help="evaluate a closed form (or `list`)")
    p.add_argument("id", help=f"one of: list, {', '.join(formulas.FORMULAS)}")
    p.add_argument("params", nargs="*", help="key=value, lists as key=a,b,c")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("verify", parents=[common], help="run a named experiment or `all`")
    p.add_argument("id", help=f"one of: all, {', '.join(experiments.EXPERIMENTS)}")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if hasattr(args, "field"):
            _field(args)
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as e:
        print(f"precondition failed: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except MemoryError as e:
        print(f"precondition failed: oracle budget exceeded ({e}); try a single --entry", file=sys.stderr)
        return EXIT_PRECONDITION
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

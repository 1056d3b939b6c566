"""The ``silting`` command."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, TextIO

from siltinglib.cli.acceptance import CHECK_ERRORS, run_acceptance
from siltinglib.cli.cache import digest, load_cached_graph, store_graph
from siltinglib.cli.corpus import UnknownCorpusEntry, load_corpus, parse_params
from siltinglib.cli.fileformat import AlgebraFile, ParseError, SemanticError, parse_algebra_file
from siltinglib.cli.options import SentryOptions, SiltingOptions
from siltinglib.cli.output import FormatUnavailable, Result, render, write_json
from siltinglib.cli.reporting import init_sentry, report_failure
from siltinglib.epis import epiclass_census, ring_epi_from_node, surjection_witness
from siltinglib.exactalg import DegreeCapExceeded
from siltinglib.latticewide import NotComplete, hasse, semibrick_of, wide_subcategory
from siltinglib.oracle import (
    CapTooLarge,
    EnumerationCaps,
    brute_bricks,
    enumerate_reps_upto_iso,
    enumerate_torsion_classes_repfinite,
    homotopy_hom_dim,
    module_pool,
)
from siltinglib.quiveralg import BasedAlgebra, MalformedRelation, NonAdmissible
from siltinglib.repmod import Rep, group_isomorphic, standard_modules, tau
from siltinglib.tautilt import ExchangeGraph, exchange_graph, silting_to_presentation

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2

USAGE_ERRORS = (
    ParseError,
    SemanticError,
    UnknownCorpusEntry,
    NonAdmissible,
    MalformedRelation,
    NotComplete,
    CapTooLarge,
    DegreeCapExceeded,
    FormatUnavailable,
    FileNotFoundError,
    ValueError,
)
VERIFICATION_ERRORS = tuple(e for e in CHECK_ERRORS if e not in (NotComplete, CapTooLarge, DegreeCapExceeded))


class UsageError(Exception):
    """Raised for command lines that argparse rejects."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class Context:
    options: SiltingOptions
    algebra_file: Optional[AlgebraFile]
    algebra: Optional[BasedAlgebra]
    args: argparse.Namespace

    def caps(self) -> Dict[str, int]:
        return {"max_nodes": self.options.max_nodes, "max_dim": self.options.max_dim}

    def graph(self) -> ExchangeGraph:
        """The exchange graph, read from the cache directory when a verified copy is there."""
        key = digest(self.algebra_file, self.options.field, self.caps())
        graph = load_cached_graph(self.options.cache_dir, key, self.algebra, self.options.seed)
        if graph is None:
            graph = exchange_graph(
                self.algebra,
                self.options.max_nodes,
                self.options.max_dim,
                self.options.workers,
                self.options.seed,
            )
            store_graph(self.options.cache_dir, key, graph, self.algebra_file)
        return graph

    def node(self, index: int):
        graph = self.graph()
        if not 0 <= index < len(graph.nodes):
            raise ValueError(f"node {index} is not among the {len(graph.nodes)} nodes found")
        return graph.nodes[index]


def _dims(module: Rep) -> List[int]:
    return list(module.dims)


def cmd_basis(ctx: Context) -> Result:
    algebra = ctx.algebra
    names = algebra.quiver.vertices
    rows = [
        {"index": k, "path": algebra.basis_word(k), "source": names[p.source], "target": names[p.target]}
        for k, p in enumerate(algebra.basis)
    ]
    lines = [f"dimension {algebra.dim} over {algebra.field}"]
    lines += [f"{r['index']:>4}  {r['path']}  ({r['source']} -> {r['target']})" for r in rows]
    return Result("basis", {"dim": algebra.dim, "basis": rows, "table": algebra.structure_table()}, lines, rows)


def cmd_standard(ctx: Context) -> Result:
    std = standard_modules(ctx.algebra)
    rows = [
        {"vertex": v, "projective": _dims(p), "simple": _dims(s), "injective": _dims(i)}
        for v, p, s, i in zip(ctx.algebra.quiver.vertices, std.projectives, std.simples, std.injectives)
    ]
    lines = [f"{r['vertex']}: P {r['projective']}  S {r['simple']}  I {r['injective']}" for r in rows]
    return Result("standard", {"vertices": rows}, lines, rows)


def read_module(algebra: BasedAlgebra, path: Path) -> Rep:
    """A module file holds ``{"dims": [...], "arrows": {name: rows}}``, as modules are serialised."""
    with open(path, encoding="utf-8") as handle:
        data = json.load(handle)
    try:
        return Rep.from_matrices(algebra, data["dims"], data.get("arrows", {}), data.get("label"))
    except ValueError as e:
        raise ValueError(f"{path}: {e}") from e


def cmd_tau(ctx: Context) -> Result:
    module = read_module(ctx.algebra, ctx.args.module)
    translate = tau(module)
    lines = [f"tau of {_dims(module)} has dimension vector {_dims(translate)}"]
    return Result("tau", {"module": module.to_dict(), "tau": translate.to_dict()}, lines)


def _graph_lines(graph: ExchangeGraph) -> List[str]:
    lines = [f"status {graph.status}: {len(graph.nodes)} nodes, {len(graph.edges)} edges"]
    if graph.caps_hit:
        lines.append(f"caps hit: {', '.join(graph.caps_hit)}")
    lines.append(f"level sizes: {graph.level_sizes}")
    return lines


def cmd_enumerate(ctx: Context) -> Result:
    graph = ctx.graph()
    rows = [
        {"node": i, "gkeys": [list(g) for g in node.gkeys], "degree": graph.degree(i)}
        for i, node in enumerate(graph.nodes)
    ]
    lines = _graph_lines(graph) + [f"{r['node']:>4}  {r['gkeys']}" for r in rows]
    return Result("enumerate", {"graph": graph.to_dict()}, lines, rows, graph.to_networkx())


def cmd_decide(ctx: Context) -> Result:
    graph = ctx.graph()
    verdict = "Finite" if graph.complete else "Inconclusive"
    document = {
        "verdict": verdict,
        "nodes": len(graph.nodes),
        "level_sizes": list(graph.level_sizes),
        "caps_hit": list(graph.caps_hit),
    }
    lines = [f"verdict {verdict}"] + _graph_lines(graph)
    if not graph.complete:
        lines.append("a truncated search never certifies infinite type")
    return Result("decide", document, lines)


def cmd_hasse(ctx: Context) -> Result:
    diagram = hasse(ctx.graph())
    labels = diagram.labels()
    rows = [
        {"upper": u, "lower": v, "brick": _dims(label.brick), "fallback": label.fallback}
        for (u, v), label in sorted(labels.items())
    ]
    bricks = group_isomorphic([label.brick for label in labels.values()], ctx.options.seed)
    lines = [f"{r['upper']} -> {r['lower']}  {r['brick']}" for r in rows]
    lines.append(f"{len(bricks)} bricks label the {len(rows)} arrows")
    document = {"arrows": rows, "bricks": [m.to_dict() for m, _ in bricks], "top": diagram.top(), "bottom": diagram.bottom()}
    return Result("hasse", document, lines, rows, diagram.to_networkx())


def cmd_wide(ctx: Context) -> Result:
    node = ctx.node(ctx.args.node)
    semibrick = semibrick_of(node, ctx.options.seed)
    predicate = wide_subcategory(node, semibrick, ctx.options.seed)
    pool = module_pool(ctx.algebra, ctx.options.dim_cap, ctx.options.seed)
    rows = [{"module": m.label or "", "dims": _dims(m), "member": m in predicate} for m in pool]
    members = sum(r["member"] for r in rows)
    lines = [f"node {ctx.args.node}: {node!r}"]
    lines.append(f"semibrick: {[_dims(s) for s in semibrick]}")
    lines.append(f"{members} of {len(pool)} pool modules lie in the wide subcategory")
    document = {"node": ctx.args.node, "semibrick": [s.to_dict() for s in semibrick], "samples": rows}
    return Result("wide", document, lines, rows)


def cmd_epi(ctx: Context) -> Result:
    if ctx.args.surjection:
        presentation = surjection_witness(ctx.algebra)
        flags = presentation.flags
        lines = [f"A -> A/rad A, dim B = {presentation.dim_b}, failing: {flags.failures() or 'none'}"]
        return Result("epi", {"surjection": presentation.to_dict()}, lines)
    graph = ctx.graph()
    if ctx.args.all:
        indices = list(range(len(graph.nodes)))
    elif ctx.args.node is not None:
        indices = [ctx.args.node]
    else:
        raise UsageError("epi needs a node index or --all")
    pool = module_pool(ctx.algebra, ctx.options.dim_cap, ctx.options.seed)
    rows, reports, lines = [], [], []
    for index in indices:
        if not 0 <= index < len(graph.nodes):
            raise ValueError(f"node {index} is not among the {len(graph.nodes)} nodes found")
        presentation = ring_epi_from_node(
            graph.nodes[index], ctx.options.max_dim, ctx.options.depth_cap, pool, ctx.options.seed
        )
        reports.append({"node": index, **presentation.to_dict()})
        rows.append({"node": index, "dim_B": presentation.dim_b, **presentation.flags.to_dict()})
        lines.append(f"node {index}: dim B = {presentation.dim_b}, all clauses hold")
    return Result("epi", {"epis": reports}, lines, rows)


def cmd_census(ctx: Context) -> Result:
    graph = ctx.graph()
    pool = module_pool(ctx.algebra, ctx.options.dim_cap, ctx.options.seed)
    census = epiclass_census(graph, ctx.options.max_dim, ctx.options.depth_cap, ctx.options.seed, pool)
    rows = [
        {"node": row.node, "dim_B": row.dim_b, "semibrick": [list(d) for d in row.semibrick_dims]}
        for row in census
    ]
    consistent = len(census) == len(graph.nodes)
    lines = [f"{r['node']:>4}  dim B {r['dim_B']:>4}  semibrick {r['semibrick']}" for r in rows]
    lines.append(
        f"{len(graph.nodes)} pairs, {len(census)} epiclasses: counts {'consistent' if consistent else 'inconsistent'}"
    )
    document = {"nodes": len(graph.nodes), "epiclasses": len(census), "rows": [row.to_dict() for row in census]}
    return Result("census", document, lines, rows, ok=consistent)


def _enumeration_caps(ctx: Context) -> EnumerationCaps:
    field = ctx.algebra.field
    if field.kind != "prime" or field.p not in (2, 3):
        raise ValueError("brute force runs over F 2 or F 3; pass --field 'F 2'")
    return EnumerationCaps(prime=field.p, max_total_dim=ctx.options.dim_cap)


def cmd_oracle(ctx: Context) -> Result:
    check = ctx.args.check
    seed = ctx.options.seed
    if check in ("bricks", "indecomposables"):
        caps = _enumeration_caps(ctx)
        found = brute_bricks(ctx.algebra, caps, seed) if check == "bricks" else enumerate_reps_upto_iso(ctx.algebra, caps, seed)
        rows = [{"module": m.label or "", "dims": _dims(m)} for m in found]
        lines = [f"{r['module']}  {r['dims']}" for r in rows] + [f"{len(found)} {check} up to total dimension {caps.max_total_dim}"]
        return Result("oracle", {"check": check, "modules": [m.to_dict() for m in found]}, lines, rows)
    if check == "torsion":
        indecomposables = enumerate_reps_upto_iso(ctx.algebra, _enumeration_caps(ctx), seed)
        classes = enumerate_torsion_classes_repfinite(indecomposables)
        graph = ctx.graph()
        agree = graph.complete and len(classes) == len(graph.nodes)
        lines = [f"{len(classes)} torsion classes, {len(graph.nodes)} support tau-tilting pairs ({graph.status})"]
        document = {"check": check, "torsion_classes": len(classes), "nodes": len(graph.nodes), "agree": agree}
        return Result("oracle", document, lines, ok=agree)
    graph = ctx.graph()
    rows = []
    for i, node in enumerate(graph.nodes):
        sigma = silting_to_presentation(node)
        rows.append({"node": i, "hom_shift1": homotopy_hom_dim(sigma, sigma, 1)})
    agree = all(r["hom_shift1"] == 0 for r in rows)
    lines = [f"{len(rows)} presentations, every one presilting: {agree}"]
    return Result("oracle", {"check": check, "rows": rows}, lines, rows, ok=agree)


def cmd_verify(ctx: Context) -> Result:
    checks = run_acceptance(ctx.options, quick=ctx.args.quick)
    rows = [c.to_dict() for c in checks]
    ok = all(c.passed for c in checks)
    lines = [f"{'ok  ' if c.passed else 'FAIL'}  {c.name}: expected {c.expected}, got {c.observed}" for c in checks]
    lines.append(f"{sum(c.passed for c in checks)} of {len(checks)} checks passed")
    return Result("verify-paper", {"checks": rows}, lines, rows, ok=ok)


HANDLERS: Dict[str, Callable[[Context], Result]] = {
    "basis": cmd_basis,
    "standard": cmd_standard,
    "tau": cmd_tau,
    "enumerate": cmd_enumerate,
    "decide": cmd_decide,
    "hasse": cmd_hasse,
    "wide": cmd_wide,
    "epi": cmd_epi,
    "census": cmd_census,
    "oracle": cmd_oracle,
    "verify-paper": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    source = common.add_argument_group("algebra")
    source.add_argument("--algebra", type=Path, help="algebra file")
    source.add_argument("--corpus", help="named algebra, e.g. kronecker or wild_R")
    source.add_argument("--param", action="append", default=[], help="corpus parameter key=value")
    caps = common.add_argument_group("settings")
    caps.add_argument("--field", help="'Q' or 'F p'")
    caps.add_argument("--max-nodes", type=int)
    caps.add_argument("--max-dim", type=int)
    caps.add_argument("--depth-cap", type=int)
    caps.add_argument("--dim-cap", type=int)
    caps.add_argument("--workers", type=int)
    caps.add_argument("--seed", type=int)
    caps.add_argument("--cache-dir", type=Path)
    caps.add_argument("--format", choices=["text", "json", "csv", "dot"])
    caps.add_argument("--output", type=Path, help="also write the JSON document here")
    caps.add_argument("--verbose", "-v", action="store_true")

    parser = _Parser(prog="silting", description="τ-tilting invariants of bound quiver algebras")
    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser("basis", parents=[common], help="basis and structure constants")
    commands.add_parser("standard", parents=[common], help="projective, simple and injective dimension vectors")
    tau_parser = commands.add_parser("tau", parents=[common], help="Auslander-Reiten translate of a module file")
    tau_parser.add_argument("module", type=Path)
    commands.add_parser("enumerate", parents=[common], help="exchange graph of support τ-tilting pairs")
    commands.add_parser("decide", parents=[common], help="τ-tilting finiteness verdict")
    commands.add_parser("hasse", parents=[common], help="Hasse quiver of torsion classes with brick labels")
    wide_parser = commands.add_parser("wide", parents=[common], help="semibrick and wide subcategory of a node")
    wide_parser.add_argument("node", type=int)
    epi_parser = commands.add_parser("epi", parents=[common], help="ring epimorphisms of nodes")
    epi_parser.add_argument("node", type=int, nargs="?")
    epi_parser.add_argument("--all", action="store_true")
    epi_parser.add_argument("--surjection", action="store_true", help="report A -> A/rad A instead")
    commands.add_parser("census", parents=[common], help="one ring epimorphism per node")
    oracle_parser = commands.add_parser("oracle", parents=[common], help="brute-force checks")
    oracle_parser.add_argument("check", choices=["bricks", "indecomposables", "torsion", "homotopy"])
    verify = commands.add_parser("verify-paper", parents=[common], help="acceptance checks on the corpus")
    verify.add_argument("--quick", action="store_true", help="skip the largest examples")
    return parser


def resolve_options(args: argparse.Namespace, algebra_file: Optional[AlgebraFile]) -> SiltingOptions:
    """Flags override the algebra file, which overrides the environment."""
    values = SiltingOptions().model_dump()
    if algebra_file is not None:
        values.update(algebra_file.cap_dict)
        if algebra_file.field is not None:
            values["field"] = algebra_file.field
    for name in ("field", "max_nodes", "max_dim", "depth_cap", "dim_cap", "workers", "seed", "cache_dir", "format"):
        flag = getattr(args, name, None)
        if flag is not None:
            values[name] = flag
    return SiltingOptions(**values)


def load_algebra_file(args: argparse.Namespace) -> Optional[AlgebraFile]:
    if args.algebra is not None and args.corpus is not None:
        raise UsageError("give either --algebra or --corpus")
    if args.algebra is not None:
        return parse_algebra_file(Path(args.algebra).read_text(encoding="utf-8"))
    if args.corpus is not None:
        return load_corpus(args.corpus, parse_params(args.param))
    return None


def run_command(argv: Sequence[str], stdout: TextIO = sys.stdout, sentry: Optional[SentryOptions] = None) -> int:
    """Runs one command line and returns its exit code."""
    try:
        args = build_parser().parse_args(list(argv))
    except UsageError as e:
        print(f"silting: {e}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO)
    reporting = init_sentry(sentry)
    algebra_text = None
    try:
        algebra_file = load_algebra_file(args)
        if algebra_file is None and args.command != "verify-paper":
            raise UsageError(f"'{args.command}' needs --algebra or --corpus")
        options = resolve_options(args, algebra_file)
        if algebra_file is not None:
            algebra_text = algebra_file.render()
            algebra = algebra_file.to_algebra(options.field_spec(), options.max_path_length)
        else:
            algebra = None
        result = HANDLERS[args.command](Context(options, algebra_file, algebra, args))
        stdout.write(render(result, options.format))
        if args.output is not None:
            write_json(result, args.output)
    except (UsageError,) + USAGE_ERRORS as e:
        logging.error("%s", e)
        report_failure(args.command, algebra_text, e, reporting)
        return EXIT_USAGE
    except VERIFICATION_ERRORS as e:
        logging.error("verification failed: %s", e)
        report_failure(args.command, algebra_text, e, reporting)
        return EXIT_VERIFICATION
    if not result.ok:
        logging.error("%s reported a failed check", args.command)
        return EXIT_VERIFICATION
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv, sentry=SentryOptions())

"""Command-line interface.

Usage::

    jacotype build --family s1 --n 8 --format dot
    jacotype census --family s2 --n 9 --format json
    jacotype verify --claim P-2.1.4 --family s1 --n 8
    jacotype verify --all --workers 4
    jacotype tables --id 3

Exit codes: 0 success, 1 refuted claim or table mismatch, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, ValidationError, model_validator

from jacotype import __version__
from jacotype.cliques import (
    canonical_cover,
    clique_census,
    maximal_cliques,
    min_clique_cover,
    vertex_clique_degrees,
)
from jacotype.config import (
    CENSUS_BUDGET,
    CIRCUMFERENCE_BUDGET,
    COVER_BUDGET,
    TABLE4_DEFAULT_K,
    Settings,
    load_settings,
)
from jacotype.errors import BudgetExceededError, InvalidArgumentError, JacoError
from jacotype.graphs import build_graph, export_graph, jaconian_set, prime_jaconian_vertex
from jacotype.graphs.jaco import JacoTypeGraph
from jacotype.pascal import (
    clique_matrix,
    clique_matrix_inverse,
    complete_census,
    complete_clique_degree,
)
from jacotype.sequences import FAMILY_ALIASES, SequenceSpec, is_non_decreasing, load_explicit_spec
from jacotype.verification import (
    CampaignResult,
    ClaimParams,
    brute_circumference,
    brute_girth,
    regenerate_table,
    run_all,
    run_claim,
)

logger = logging.getLogger(__name__)

Family = Literal["s1", "s2", "s3", "s4", "linear", "custom"]


class CliConfig(BaseModel):
    """Resolved options for one invocation: flags over environment over defaults."""

    family: Family | None = None
    k: int | None = None
    base: int | None = None
    variant: Literal["definitional", "paper-figure"] = "definitional"
    file: Path | None = None
    n: int | None = None
    n_max: int | None = None
    format: str = "text"
    out: Path | None = None
    census_budget: int = CENSUS_BUDGET
    cycle_budget: int = CIRCUMFERENCE_BUDGET
    cover_budget: int = COVER_BUDGET
    seed: int
    force: bool = False

    @model_validator(mode="after")
    def _check(self) -> CliConfig:
        for name in ("census_budget", "cycle_budget", "cover_budget"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name.replace('_', '-')} must be positive")
        if self.n is not None and self.n < 1:
            raise ValueError(f"--n must be >= 1, got {self.n}")
        if self.family == "s3" and self.k is None:
            raise ValueError("--family s3 needs --k")
        if self.family == "s4" and self.base is None:
            raise ValueError("--family s4 needs --base")
        if self.family == "custom" and self.file is None:
            raise ValueError("--family custom needs --file")
        return self

    def sequence(self) -> SequenceSpec:
        """The selected family as a :class:`SequenceSpec`."""
        if self.family is None:
            raise InvalidArgumentError("select a family with --family")
        if self.family == "s3":
            return SequenceSpec.modulo(self.k or 0)
        if self.family == "s4":
            return SequenceSpec.set_sequence(self.base or 0, self.variant)
        if self.family == "custom":
            assert self.file is not None
            return load_explicit_spec(self.file)
        return SequenceSpec(kind=FAMILY_ALIASES[self.family])

    def graph(self) -> JacoTypeGraph:
        if self.n is None:
            raise InvalidArgumentError("this command needs --n")
        return build_graph(self.sequence(), self.n)


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _family_options(p: argparse.ArgumentParser, *, required_n: bool = True) -> None:
    p.add_argument("--family", choices=sorted(FAMILY_ALIASES), help="sequence family")
    p.add_argument("--k", type=int, help="modulus for s3")
    p.add_argument("--base", type=int, help="ground-set size for s4")
    p.add_argument("--variant", choices=["definitional", "paper-figure"], default="definitional",
                   help="s4 term variant")
    p.add_argument("--file", type=Path, help="terms file for custom")
    p.add_argument("--n", type=int, required=required_n, help="graph order")


def _output_options(p: argparse.ArgumentParser, formats: list[str], default: str) -> None:
    p.add_argument("--format", choices=formats, default=default)
    p.add_argument("--out", type=Path, help="write to this file instead of standard output")


def _budget_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--census-budget", type=int)
    p.add_argument("--cycle-budget", type=int)
    p.add_argument("--cover-budget", type=int)
    p.add_argument("--force", action="store_true", help="allow searches beyond their budgets")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jacotype",
        description="Jaco-type graphs: construction, clique invariants and claim verification.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    level = parser.add_mutually_exclusive_group()
    level.add_argument("-v", "--verbose", action="count", default=0)
    level.add_argument("-q", "--quiet", action="store_true")
    parser.add_argument("--seed", type=int, help="seed for randomized checks (env JACO_SEED)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build J_n and export it")
    _family_options(p)
    _output_options(p, ["dot", "edge-list", "json"], "dot")

    p = sub.add_parser("census", help="count cliques by size")
    _family_options(p)
    _output_options(p, ["csv", "json", "text"], "csv")
    p.add_argument("--max-size", type=int)
    p.add_argument("--include-empty", action="store_true")
    _budget_options(p)

    p = sub.add_parser("degrees", help="vertex clique degrees")
    _family_options(p)
    _output_options(p, ["csv", "json"], "csv")
    _budget_options(p)

    p = sub.add_parser("maximal", help="list maximal cliques")
    _family_options(p)
    _output_options(p, ["text", "json"], "text")

    p = sub.add_parser("invariants", help="degrees, girth, circumference, clique number, covers")
    _family_options(p)
    _output_options(p, ["text", "json"], "text")
    _budget_options(p)

    p = sub.add_parser("pascal", help="complete-graph clique calculus")
    p.add_argument("--n", type=int, required=True, help="dimension / order")
    p.add_argument("--kind", choices=["matrix", "inverse", "census", "degrees"], default="matrix")
    _output_options(p, ["csv", "json"], "csv")

    p = sub.add_parser("verify", help="evaluate registered claims")
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--claim", help="claim id, e.g. P-2.1.4")
    target.add_argument("--all", action="store_true", help="run every registered claim")
    _family_options(p, required_n=False)
    p.add_argument("--n-max", type=int, help="scan orders 1..n-max")
    p.add_argument("--workers", type=int, help="run claims on a thread pool")
    _output_options(p, ["text", "json"], "text")
    _budget_options(p)

    p = sub.add_parser("tables", help="regenerate published tables and diff them")
    p.add_argument("--id", type=int, choices=[1, 2, 3, 4, 5], action="append", dest="ids",
                   help="table id; repeat for several, omit for all")
    p.add_argument("--k", type=int, default=TABLE4_DEFAULT_K, help="modulus for table 4")
    p.add_argument("--variant", choices=["definitional", "paper-figure"], default="paper-figure",
                   help="set-family variant for table 5")
    _output_options(p, ["text", "csv", "json"], "text")

    return parser


_BUDGET_DEFAULTS = {
    "census_budget": CENSUS_BUDGET,
    "cycle_budget": CIRCUMFERENCE_BUDGET,
    "cover_budget": COVER_BUDGET,
}


def _check_raised_budgets(args: argparse.Namespace) -> None:
    """Budgets raised by flag need --force; environment values are taken as given."""
    if not hasattr(args, "force"):
        return
    raised = [
        name
        for name, default in _BUDGET_DEFAULTS.items()
        if getattr(args, name, None) is not None and getattr(args, name) > default
    ]
    if raised and not args.force:
        raise InvalidArgumentError(f"raising {', '.join(raised)} above the default needs --force")


def _config(args: argparse.Namespace, settings: Settings) -> CliConfig:
    def pick(name: str, fallback: Any) -> Any:
        value = getattr(args, name, None)
        return fallback if value is None else value

    _check_raised_budgets(args)
    return CliConfig(
        family=getattr(args, "family", None),
        k=getattr(args, "k", None),
        base=getattr(args, "base", None),
        variant=getattr(args, "variant", "definitional"),
        file=getattr(args, "file", None),
        n=getattr(args, "n", None),
        n_max=getattr(args, "n_max", None),
        format=getattr(args, "format", "text"),
        out=getattr(args, "out", None),
        census_budget=pick("census_budget", settings.census_budget),
        cycle_budget=pick("cycle_budget", settings.cycle_budget),
        cover_budget=pick("cover_budget", settings.cover_budget),
        seed=pick("seed", settings.seed),
        force=getattr(args, "force", False),
    )


def _configure_logging(args: argparse.Namespace, settings: Settings) -> None:
    if args.quiet:
        level = logging.ERROR
    elif args.verbose >= 2:
        level = logging.DEBUG
    elif args.verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, settings.log_level, logging.WARNING)
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")
        logger.info("Wrote %s", out)


def _dumps(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def _cmd_build(args: argparse.Namespace, cfg: CliConfig) -> int:
    _emit(export_graph(cfg.graph(), cfg.format), cfg.out)
    return 0


def _cmd_census(args: argparse.Namespace, cfg: CliConfig) -> int:
    census = clique_census(
        cfg.graph(),
        args.max_size,
        include_empty=args.include_empty,
        budget=cfg.census_budget,
        force=cfg.force,
    )
    if cfg.format == "json":
        _emit(census.to_json() + "\n", cfg.out)
    elif cfg.format == "csv":
        _emit(census.to_csv(), cfg.out)
    else:
        _emit(" ".join(str(v) for v in census.values()) + "\n", cfg.out)
    return 0


def _cmd_degrees(args: argparse.Namespace, cfg: CliConfig) -> int:
    table = vertex_clique_degrees(cfg.graph(), budget=cfg.census_budget, force=cfg.force)
    _emit(table.to_json() + "\n" if cfg.format == "json" else table.to_csv(), cfg.out)
    return 0


def _cmd_maximal(args: argparse.Namespace, cfg: CliConfig) -> int:
    cliques = [sorted(c) for c in maximal_cliques(cfg.graph())]
    if cfg.format == "json":
        _emit(_dumps({"maximal_cliques": cliques}), cfg.out)
    else:
        _emit("".join(" ".join(str(v) for v in c) + "\n" for c in cliques), cfg.out)
    return 0


def _invariants(g: JacoTypeGraph, cfg: CliConfig) -> dict[str, Any]:
    delta, jset = jaconian_set(g)
    data: dict[str, Any] = {
        "graph": f"J_{g.n}({g.spec.label()})",
        "order": g.n,
        "arcs": g.arc_count,
        "max_degree": delta,
        "jaconian_set": list(jset),
        "prime_jaconian_vertex": prime_jaconian_vertex(g),
        "clique_number": max(len(c) for c in maximal_cliques(g)),
        "girth": brute_girth(g),
    }
    try:
        cycle = brute_circumference(g, budget=cfg.cycle_budget, force=cfg.force)
        data["circumference"] = cycle.length if cycle else None
        data["longest_cycle"] = list(cycle.cycle) if cycle else None
    except BudgetExceededError as exc:
        data["circumference"] = f"skipped: {exc}"
    if is_non_decreasing(g.terms):
        data["canonical_cover"] = [sorted(c) for c in canonical_cover(g).cliques]
    else:
        data["canonical_cover"] = "skipped: terms are not non-decreasing"
    try:
        data["minimum_cover"] = [
            sorted(c) for c in min_clique_cover(g, budget=cfg.cover_budget, force=cfg.force).cliques
        ]
    except BudgetExceededError as exc:
        data["minimum_cover"] = f"skipped: {exc}"
    return data


def _cmd_invariants(args: argparse.Namespace, cfg: CliConfig) -> int:
    data = _invariants(cfg.graph(), cfg)
    if cfg.format == "json":
        _emit(_dumps(data), cfg.out)
    else:
        _emit("".join(f"{key}: {value}\n" for key, value in data.items()), cfg.out)
    return 0


def _cmd_pascal(args: argparse.Namespace, cfg: CliConfig) -> int:
    n = args.n
    if args.kind in ("matrix", "inverse"):
        m = clique_matrix(n) if args.kind == "matrix" else clique_matrix_inverse(n)
        _emit(_dumps(m.to_dict()) if cfg.format == "json" else m.to_csv(), cfg.out)
        return 0
    if args.kind == "census":
        census = complete_census(n)
        _emit(census.to_json() + "\n" if cfg.format == "json" else census.to_csv(), cfg.out)
        return 0
    row = [complete_clique_degree(n, l) for l in range(1, n + 1)]
    if cfg.format == "json":
        _emit(_dumps({"n": n, "degrees": row}), cfg.out)
    else:
        _emit("l,degree\n" + "".join(f"{l},{d}\n" for l, d in enumerate(row, start=1)), cfg.out)
    return 0


def _cmd_verify(args: argparse.Namespace, cfg: CliConfig) -> int:
    params = ClaimParams(
        family=cfg.sequence() if cfg.family else None,
        n=cfg.n,
        n_max=cfg.n_max,
        seed=cfg.seed,
        census_budget=cfg.census_budget,
        cycle_budget=cfg.cycle_budget,
        cover_budget=cfg.cover_budget,
        force=cfg.force,
    )
    if args.all:
        result = run_all(params, workers=args.workers)
    else:
        result = CampaignResult(reports=[run_claim(args.claim, params)])
    _emit(result.to_json() + "\n" if cfg.format == "json" else result.to_text(), cfg.out)
    return result.exit_code


def _cmd_tables(args: argparse.Namespace, cfg: CliConfig) -> int:
    ids = sorted(set(args.ids)) if args.ids else [1, 2, 3, 4, 5]
    diffs = [regenerate_table(t, k=args.k, variant=args.variant) for t in ids]
    result = CampaignResult(tables=diffs)
    if cfg.format == "json":
        _emit(_dumps([d.to_dict() for d in diffs]), cfg.out)
    elif cfg.format == "csv":
        body = "".join(d.to_csv().split("\n", 1)[1] for d in diffs)
        _emit("table,row,col,paper,computed,match\n" + body, cfg.out)
    else:
        _emit(result.to_text(), cfg.out)
    return result.exit_code


_COMMANDS = {
    "build": _cmd_build,
    "census": _cmd_census,
    "degrees": _cmd_degrees,
    "maximal": _cmd_maximal,
    "invariants": _cmd_invariants,
    "pascal": _cmd_pascal,
    "verify": _cmd_verify,
    "tables": _cmd_tables,
}


def run(argv: list[str] | None = None) -> int:
    """Parse *argv*, dispatch the subcommand and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    settings = load_settings()
    _configure_logging(args, settings)
    try:
        cfg = _config(args, settings)
        return _COMMANDS[args.command](args, cfg)
    except ValidationError as exc:
        message = "; ".join(err["msg"].removeprefix("Value error, ") for err in exc.errors())
        print(f"jacotype: error: {message}", file=sys.stderr)
    except (JacoError, OSError) as exc:
        print(f"jacotype: error: {exc}", file=sys.stderr)
    return 2


def main() -> None:
    sys.exit(run())

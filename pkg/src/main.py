"""
grpwild command-line interface.

Commands:
    construct EXPR                  Order and structure of a group expression
    verify-pwild EXPR --prime P     <p>-wildness (witness or exact mode)
    xi EXPR                         pi(G), xi(G) and per-prime statuses
    verify-triplet EXPR --d0 --d1   Ordinary/wild check of (G, D0, D1)
    verify-triplet --file PATH      Same, from a JSON triplet description
    theorem1                        Solvability-criterion harness over A5, S5, A5 x C2
    lemma5-demo EXPR                Conjugators moving (g, t) to (g, 0)

Output:
    One JSON Report per run on stdout (and in --json PATH). Diagnostics and
    errors go to stderr; errors as {"error": {"message", "type", "code"}}.

Exit codes:
    0  verified / consistent
    1  refuted / violation
    2  inconclusive
    3  usage, parse, limit or precondition error

Examples:
    grpwild construct "Sak(S3)"
    grpwild verify-pwild "G(2, C3)" --prime 2 --depth 3
    grpwild xi "Sak(C2)" --mode exact
    grpwild verify-triplet --file configs/triplet_klein_c3.json

Version: 0.4.0
License: MIT
"""

import argparse
import json
import logging
import sys
import time
from collections.abc import Sequence
from pathlib import Path
from typing import Any, NoReturn

import numpy as np
from pydantic import ValidationError

# mypy: disable-error-code="no-redef"
try:
    from .autos import lemma5_certificate
    from .cache import ResultCache, cached_p_cyclic_classes
    from .config import Settings, configure
    from .errors import GroupError, PreconditionError, UsageError
    from .expr import BuiltGroup, build, render
    from .groups import TableGroup, derived_subgroup
    from .models import ErrorBody, ErrorDetail, Report, WildReport, WildStatus, XiReport
    from .semidirect import SdGroup, group_order_of
    from .wildness import (
        builtin_catalog_triplets,
        build_triplet,
        check_triplet,
        corollary1_check,
        theorem1_harness,
        verify_p_wild,
        verify_witness,
    )
except ImportError:
    from autos import lemma5_certificate
    from cache import ResultCache, cached_p_cyclic_classes
    from config import Settings, configure
    from errors import GroupError, PreconditionError, UsageError
    from expr import BuiltGroup, build, render
    from groups import TableGroup, derived_subgroup
    from models import ErrorBody, ErrorDetail, Report, WildReport, WildStatus, XiReport
    from semidirect import SdGroup, group_order_of
    from wildness import (
        builtin_catalog_triplets,
        build_triplet,
        check_triplet,
        corollary1_check,
        theorem1_harness,
        verify_p_wild,
        verify_witness,
    )

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3


# =============================================================================
# Argument Parsing
# =============================================================================


class _ArgumentParser(argparse.ArgumentParser):
    """argparse with usage errors raised instead of exiting with status 2."""

    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--max-enum", type=int, help="largest order enumerated element by element")
    common.add_argument("--threads", type=int, help="worker threads")
    common.add_argument("--seed", type=int, help="seed for sampled choices")
    common.add_argument("--cache-dir", type=Path, help="directory for cached enumerations")
    common.add_argument("--json", type=Path, dest="json_path", help="also write the report here")
    common.add_argument("--verbose", action="store_true", help="debug logging on stderr")
    common.add_argument("--timings", action="store_true", help="include timings in the report")

    parser = _ArgumentParser(prog="grpwild", description="Wildness of finite groups under automorphisms.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("construct", parents=[common], help="order and structure of a group")
    p.add_argument("expression")

    p = sub.add_parser("verify-pwild", parents=[common], help="decide <p>-wildness")
    p.add_argument("expression")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--mode", choices=["witness", "exact"], default="witness")
    p.add_argument("--depth", type=int)
    p.add_argument("--table-aut", action="store_true", help="add Aut(G) letters to table-group searches")

    p = sub.add_parser("xi", parents=[common], help="xi(G) over the primes of |G|")
    p.add_argument("expression")
    p.add_argument("--mode", choices=["witness", "exact"], default="witness")
    p.add_argument("--depth", type=int)
    p.add_argument("--table-aut", action="store_true", help="add Aut(G) letters to table-group searches")

    p = sub.add_parser("verify-triplet", parents=[common], help="check an ordinary triplet")
    p.add_argument("expression", nargs="?")
    p.add_argument("--d0", default="inn", help="inn | aut | 1")
    p.add_argument("--d1", default="aut", help="inn | aut | 1")
    p.add_argument("--file", type=Path, help="JSON triplet description")

    p = sub.add_parser("theorem1", parents=[common], help="solvability-criterion harness")
    p.add_argument("--samples", type=int, default=20, help="random intermediate D1 per group")

    p = sub.add_parser("lemma5-demo", parents=[common], help="conjugators for (g, t) -> (g, 0)")
    p.add_argument("expression")
    p.add_argument("--element", help="element as JSON ({\"a\": .., \"v\": {..}}) or a rank")
    p.add_argument("--samples", type=int, default=5, help="sampled elements when --element is absent")
    return parser


def _settings_from_args(args: argparse.Namespace) -> Settings:
    updates: dict[str, Any] = {
        "max_enum": args.max_enum,
        "threads": args.threads,
        "seed": args.seed,
        "cache_dir": args.cache_dir,
    }
    if args.timings:
        updates["report_timings"] = True
    if args.verbose:
        updates["log_level"] = "DEBUG"
    if getattr(args, "table_aut", False):
        updates["witness_table_aut"] = True
    try:
        return configure(**updates)
    except ValidationError as exc:
        problems = "; ".join(f"{'.'.join(map(str, e['loc']))}: {e['msg']}" for e in exc.errors())
        raise UsageError(f"invalid option: {problems}") from None


def _setup_logging(level: str) -> None:
    logging.basicConfig(
        stream=sys.stderr,
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )


# =============================================================================
# Commands
# =============================================================================


class _Context:
    """Per-run state shared by the command handlers."""

    def __init__(self, args: argparse.Namespace, settings: Settings):
        self.args = args
        self.settings = settings
        self.cache = ResultCache(settings.cache_dir) if settings.cache_dir else None

    def cache_config(self) -> dict[str, Any]:
        return {"max_enum": self.settings.max_enum}


def _built(args: argparse.Namespace) -> BuiltGroup:
    if not args.expression:
        raise UsageError("a group expression is required")
    return build(args.expression)


def _order_text(G: Any) -> str:
    return group_order_of(G).render()


def cmd_construct(ctx: _Context) -> tuple[Report, int]:
    built = _built(ctx.args)
    G = built.group
    result: dict[str, Any] = {"name": G.name}
    if isinstance(G, SdGroup):
        result.update(
            kind="semidirect",
            p=G.p,
            r=G.r,
            dimension=G.B.dim,
            base=G.A.name,
            base_order=_order_text(G.A),
            enumerable=G.enumerable,
        )
        if built.sak is not None:
            result["kind"] = "saksonov"
            result["sak"] = built.sak.model_dump(mode="json")
    else:
        result.update(
            kind="table",
            generators=[G.label(g) for g in G.generators],
            abelian=G.is_abelian(),
            exponent=G.exponent() if G.is_dense else None,
        )
    return _report(ctx, render(built.expr), _order_text(G), result), EXIT_OK


def _wild_exit(status: WildStatus) -> int:
    if status.is_wild:
        return EXIT_OK
    if status is WildStatus.NOT_WILD_EXACT:
        return EXIT_REFUTED
    return EXIT_INCONCLUSIVE


def _wild_report(ctx: _Context, expression: str, G: Any, p: int, mode: str, depth: int | None) -> tuple[WildReport, bool]:
    classes = cached_p_cyclic_classes(ctx.cache, expression, G, p, ctx.cache_config())
    report = verify_p_wild(G, p, mode=mode, depth=depth, classes=classes)
    verified = all(verify_witness(G, classes, w) for w in report.witnesses)
    return report, verified


def cmd_verify_pwild(ctx: _Context) -> tuple[Report, int]:
    args = ctx.args
    built = _built(args)
    expression = render(built.expr)
    report, verified = _wild_report(ctx, expression, built.group, args.prime, args.mode, args.depth)
    code = _wild_exit(report.status) if verified else EXIT_REFUTED
    result = report.model_dump(mode="json")
    result["witnesses_verified"] = verified
    return _report(ctx, expression, _order_text(built.group), result), code


def cmd_xi(ctx: _Context) -> tuple[Report, int]:
    args = ctx.args
    built = _built(args)
    G = built.group
    expression = render(built.expr)
    primes = list(group_order_of(G).primes)
    reports = []
    all_verified = True
    for q in primes:
        report, verified = _wild_report(ctx, expression, G, q, args.mode, args.depth)
        reports.append(report)
        all_verified = all_verified and verified
    xi = XiReport(pi=primes, xi=[r.prime for r in reports if r.status.is_wild], reports=reports)
    result = xi.model_dump(mode="json")
    result["witnesses_verified"] = all_verified
    if not all_verified:
        code = EXIT_REFUTED
    elif any(r.status is WildStatus.INCONCLUSIVE for r in reports):
        code = EXIT_INCONCLUSIVE
    else:
        code = EXIT_OK
    return _report(ctx, expression, _order_text(G), result), code


def _table_of(built: BuiltGroup) -> TableGroup:
    G = built.group
    if not isinstance(G, TableGroup):
        raise UsageError("triplets need a catalog group or a product of catalog groups")
    return G


def cmd_verify_triplet(ctx: _Context) -> tuple[Report, int]:
    args = ctx.args
    d0: Any = args.d0
    d1: Any = args.d1
    expression = args.expression
    if args.file is not None:
        try:
            spec = json.loads(args.file.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read triplet file {args.file}: {exc}") from None
        if not isinstance(spec, dict) or "group" not in spec:
            raise UsageError("triplet file needs a \"group\" entry")
        expression = spec["group"]
        d0 = spec.get("d0", d0)
        d1 = spec.get("d1", d1)
    if not expression:
        raise UsageError("a group expression or --file is required")
    built = build(expression)
    G = _table_of(built)
    report = check_triplet(build_triplet(G, d0, d1))
    code = EXIT_OK if report.wild else EXIT_REFUTED
    return _report(ctx, render(built.expr), _order_text(G), report.model_dump(mode="json")), code


def cmd_theorem1(ctx: _Context) -> tuple[Report, int]:
    if ctx.args.samples < 0:
        raise UsageError("--samples must be >= 0")
    specs = builtin_catalog_triplets(ctx.args.samples, seed=ctx.settings.seed)
    harness = theorem1_harness(specs)
    groups: dict[str, TableGroup] = {}
    for t in specs:
        groups.setdefault(t.G.name, t.G)
    for name, G in groups.items():
        N = derived_subgroup(G) if name == "S5" else frozenset(range(G.order))
        result = corollary1_check(G, N)
        harness.corollary.append(result)
        if not result.preconditions_met:
            harness.errors.append(f"corollary over {name}: {result.reason}")
    if harness.violations or any(c.refuted for c in harness.corollary):
        code = EXIT_REFUTED
    elif harness.errors:
        code = EXIT_INCONCLUSIVE
    else:
        code = EXIT_OK
    return _report(ctx, None, None, harness.model_dump(mode="json")), code


def cmd_lemma5_demo(ctx: _Context) -> tuple[Report, int]:
    args = ctx.args
    built = _built(args)
    G = built.group
    if not isinstance(G, SdGroup):
        raise UsageError("lemma5-demo needs a G(p, A) expression")
    if args.element is not None:
        try:
            raw = json.loads(args.element)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--element is not JSON: {exc}") from None
        elements = [G.decode(raw)]
    else:
        if args.samples < 1:
            raise UsageError("--samples must be >= 1")
        ranks = G.elements_of_order(G.p)
        ranks = ranks[ranks % G.nA != 0]
        if not len(ranks):
            raise PreconditionError(f"{G.name} has no element (g, t) of order {G.p} with g != 1")
        rng = np.random.default_rng(ctx.settings.seed)
        picks = rng.choice(len(ranks), size=min(args.samples, len(ranks)), replace=False)
        elements = [G.unrank(int(ranks[k])) for k in sorted(picks)]
    certificates = [lemma5_certificate(G, x) for x in elements]
    code = EXIT_OK if all(c.verified for c in certificates) else EXIT_REFUTED
    result = {"certificates": [c.model_dump(mode="json") for c in certificates]}
    return _report(ctx, render(built.expr), _order_text(G), result), code


COMMANDS = {
    "construct": cmd_construct,
    "verify-pwild": cmd_verify_pwild,
    "xi": cmd_xi,
    "verify-triplet": cmd_verify_triplet,
    "theorem1": cmd_theorem1,
    "lemma5-demo": cmd_lemma5_demo,
}


# =============================================================================
# Report Emission
# =============================================================================


def _report(ctx: _Context, expression: str | None, order: str | None, result: dict[str, Any]) -> Report:
    config = ctx.settings.model_dump(mode="json", exclude={"cache_dir", "log_level"})
    return Report(
        command=ctx.args.command,
        expression=expression,
        order=order,
        exit_code=EXIT_OK,
        result=result,
        config=config,
    )


def _emit_error(exc: Exception, code: int) -> None:
    error_type = getattr(exc, "error_type", "usage")
    body = ErrorBody(error=ErrorDetail(message=str(exc), type=error_type, code=code))
    print(body.model_dump_json(), file=sys.stderr)


def main(argv: Sequence[str] | None = None) -> int:
    """
    Run one command.

    Returns:
        The process exit code (see module docstring)
    """
    started = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        settings = _settings_from_args(args)
        _setup_logging(settings.log_level)
        ctx = _Context(args, settings)
        report, code = COMMANDS[args.command](ctx)
    except GroupError as exc:
        _emit_error(exc, EXIT_USAGE)
        return EXIT_USAGE

    report.exit_code = code
    if settings.report_timings:
        report.timings = {"total_seconds": round(time.perf_counter() - started, 6)}
    line = report.model_dump_json()
    print(line)
    if args.json_path is not None:
        args.json_path.parent.mkdir(parents=True, exist_ok=True)
        args.json_path.write_text(line + "\n")
    logger.info("%s finished with exit code %d", args.command, code)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""
Lahseries Main Application
==========================
Command-line entry point: polynomial tables, verification suites, involution
generation and decomposition, series evaluation and the reproduction report.

Exit codes: 0 when every check passes, 1 when a check or reproduction fails,
2 for invalid input.
"""

import argparse
import json
import logging
import sys
from dataclasses import replace
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

from lahseries import __version__
from lahseries.config.settings import SystemConfig, config
from lahseries.models.data_models import Convention, Family, OutputFormat, SeedSpec
from lahseries.models.errors import LahseriesError
from lahseries.suites.identity_suites import SUITES, SuiteContext, resolve_suites, run_suites
from lahseries.suites.reproduction import ITEMS, reproduce
from lahseries.tools.bell import BELL_TABLE
from lahseries.tools.codec import poly_to_document, read_series_file, series_to_document
from lahseries.tools.expr import eval_text
from lahseries.tools.involution import (
    conjugator_from_involution, involution_check_report, involution_from_conjugator,
    involution_from_even_seeds
)
from lahseries.tools.series import Series, series_to_ordinary, series_truncate
from lahseries.tools.stirling_lah import LAH_TABLE, STIRLING_TABLE

logger = logging.getLogger(__name__)

TABLES = {
    "bell-table": BELL_TABLE,
    "stirling-table": STIRLING_TABLE,
    "lah-table": LAH_TABLE,
}


def _rational_list(text: str) -> List[Fraction]:
    """argparse type for comma-separated rationals such as 1,-1/2,3"""
    try:
        return [Fraction(part.strip()) for part in text.split(",") if part.strip()]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a comma-separated list of rationals: {text!r}") from None


class LahseriesCLI:
    """Runs one parsed command and renders its report"""

    def __init__(self, args: argparse.Namespace, settings: SystemConfig = config):
        self.args = args
        self.settings = replace(
            settings,
            rng_seed=args.rng_seed,
            max_n=args.max_n,
            trials=args.trials,
            output_format=args.format,
        )
        self.settings.validate()
        self.format = OutputFormat(self.settings.output_format)

    # Output
    def emit(self, text: str) -> None:
        if not text.endswith("\n"):
            text += "\n"
        if self.args.out:
            with open(self.args.out, "w", encoding="utf-8") as handle:
                handle.write(text)
            logger.info(f"wrote {self.args.out}")
        else:
            sys.stdout.write(text)

    def emit_json(self, document) -> None:
        self.emit(json.dumps(document, indent=2))

    def emit_series(self, f: Series, convention: Convention = Convention.EXPONENTIAL) -> None:
        if self.format is OutputFormat.JSON:
            self.emit(series_to_document(f, convention).model_dump_json())
            return
        coeffs = series_to_ordinary(f) if convention is Convention.ORDINARY else f.coeffs
        label = "a" if convention is Convention.ORDINARY else "f"
        self.emit("\n".join(f"{label}[{n}] = {c}" for n, c in enumerate(coeffs)))

    # Commands
    def cmd_tables(self) -> int:
        table = TABLES[self.args.command]
        family = table.family
        rows = list(table.rows(self.settings.max_n))
        if self.format is OutputFormat.JSON:
            self.emit_json({
                "family": family.value,
                "max_n": self.settings.max_n,
                "entries": [
                    {"n": n, "k": k, "poly": poly_to_document(poly).model_dump()}
                    for n, k, poly in rows
                ],
            })
        else:
            self.emit("\n".join(f"{family.value}[{n},{k}] = {poly}" for n, k, poly in rows))
        return 0

    def cmd_verify(self) -> int:
        names = resolve_suites(self.args.suite)
        ctx = SuiteContext(
            rng_seed=self.settings.rng_seed,
            max_n=self.settings.max_n,
            trials=self.settings.trials,
            symbolic_max_n=self.settings.symbolic_max_n,
            numeric_max_n=self.settings.numeric_max_n,
        )
        results = run_suites(names, ctx, self.settings.parallel_execution, self.settings.max_workers)
        passed = all(r.passed for r in results)

        if self.format is OutputFormat.JSON:
            self.emit_json({
                "rng_seed": ctx.rng_seed,
                "max_n": ctx.max_n,
                "trials": ctx.trials,
                "passed": passed,
                "suites": [r.to_dict() for r in results],
            })
        else:
            lines = []
            for r in results:
                lines.append(f"[{'PASS' if r.passed else 'FAIL'}] {r.name} ({r.checked} checks)")
                lines.extend(f"    {failure}" for failure in r.failures)
            lines.append(f"{sum(r.passed for r in results)}/{len(results)} suites passed "
                         f"(rng-seed {ctx.rng_seed}, max-n {ctx.max_n}, trials {ctx.trials})")
            self.emit("\n".join(lines))
        return 0 if passed else 1

    def cmd_involution(self) -> int:
        handlers: Dict[str, Callable[[], int]] = {
            "gen": self._involution_gen,
            "check": self._involution_check,
            "conjugate": self._involution_conjugate,
            "decompose": self._involution_decompose,
        }
        return handlers[self.args.action]()

    def _order(self, f: Optional[Series] = None) -> int:
        if self.args.order is not None:
            return self.args.order
        return f.order if f is not None else self.settings.max_n

    def _involution_gen(self) -> int:
        f = involution_from_even_seeds(SeedSpec.even(self.args.even_seeds), self._order())
        self.emit_series(f)
        return 0

    def _involution_check(self) -> int:
        report = involution_check_report(read_series_file(self.args.series_file))
        if self.format is OutputFormat.JSON:
            self.emit_json({
                "order": report.order,
                "passed": report.passed,
                "failing_orders": report.failing_orders,
                "notes": report.notes,
            })
        else:
            lines = [f"involution up to order {report.order}: {'yes' if report.passed else 'no'}"]
            if not report.passed:
                lines.append(f"first failure at n={report.first_failure}")
            lines.extend(f"note: {note}" for note in report.notes)
            self.emit("\n".join(lines))
        return 0 if report.passed else 1

    def _involution_conjugate(self) -> int:
        g = read_series_file(self.args.g_file)
        self.emit_series(involution_from_conjugator(series_truncate(g, self._order(g))))
        return 0

    def _involution_decompose(self) -> int:
        f = read_series_file(self.args.series_file)
        seeds = SeedSpec.odd(self.args.odd_seeds) if self.args.odd_seeds else None
        g = conjugator_from_involution(series_truncate(f, self._order(f)), seeds)
        self.emit_series(g)
        return 0

    def cmd_series(self) -> int:
        f = eval_text(self.args.expr, self._order())
        self.emit_series(f, Convention(self.args.convention))
        return 0

    def cmd_reproduce_paper(self) -> int:
        outcomes = reproduce(self.args.item, self.args.fixtures_dir or self.settings.fixtures_dir)
        passed = all(o.passed for o in outcomes)
        if self.format is OutputFormat.JSON:
            self.emit_json({"passed": passed, "items": [o.to_dict() for o in outcomes]})
        else:
            lines = []
            for o in outcomes:
                lines.append(f"[{'PASS' if o.passed else 'FAIL'}] {o.item}: {o.description}")
                if o.diff:
                    lines.append(o.diff)
            lines.append(f"reproduced {sum(o.passed for o in outcomes)}/{len(outcomes)} items")
            self.emit("\n".join(lines))
        return 0 if passed else 1

    def run(self) -> int:
        commands: Dict[str, Callable[[], int]] = {
            "bell-table": self.cmd_tables,
            "stirling-table": self.cmd_tables,
            "lah-table": self.cmd_tables,
            "verify": self.cmd_verify,
            "involution": self.cmd_involution,
            "series": self.cmd_series,
            "reproduce-paper": self.cmd_reproduce_paper,
        }
        return commands[self.args.command]()


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=config.output_format)
    common.add_argument("--rng-seed", type=int, default=config.rng_seed)
    common.add_argument("--max-n", type=int, default=config.max_n)
    common.add_argument("--trials", type=int, default=config.trials)
    common.add_argument("--out", metavar="FILE", help="write the report to FILE instead of stdout")
    common.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR (logs go to stderr)")

    parser = argparse.ArgumentParser(
        prog="lahseries",
        description="Exact Bell, Stirling and Lah polynomial families and involutory power series",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, family in (("bell-table", Family.BELL), ("stirling-table", Family.STIRLING_FIRST),
                         ("lah-table", Family.LAH)):
        sub.add_parser(name, parents=[common], help=f"emit the {family.value}[n,k] triangle up to --max-n")

    verify = sub.add_parser("verify", parents=[common], help="run identity suites")
    verify.add_argument("--suite", action="append", choices=list(SUITES) + ["all"],
                        help="suite to run (repeatable; default all)")

    involution = sub.add_parser("involution", help="involution generation and decomposition")
    actions = involution.add_subparsers(dest="action", required=True)
    gen = actions.add_parser("gen", parents=[common], help="involution from free even coefficients")
    gen.add_argument("--even-seeds", type=_rational_list, required=True, metavar="a1,a2,...")
    gen.add_argument("--order", type=int)
    check = actions.add_parser("check", parents=[common], help="test a series file for f o f = id")
    check.add_argument("--series-file", required=True)
    conjugate = actions.add_parser("conjugate", parents=[common], help="involution g o (-id) o inverse(g)")
    conjugate.add_argument("--g-file", required=True)
    conjugate.add_argument("--order", type=int)
    decompose = actions.add_parser("decompose", parents=[common], help="conjugator g of an involution")
    decompose.add_argument("--series-file", required=True)
    decompose.add_argument("--odd-seeds", type=_rational_list, metavar="g1,g3,...")
    decompose.add_argument("--order", type=int)

    series = sub.add_parser("series", help="closed-form series expressions")
    series_actions = series.add_subparsers(dest="action", required=True)
    evaluate = series_actions.add_parser("eval", parents=[common], help="truncated series of an expression")
    evaluate.add_argument("--expr", required=True)
    evaluate.add_argument("--order", type=int)
    evaluate.add_argument("--convention", choices=[c.value for c in Convention], default=Convention.EXPONENTIAL.value)

    reproduce_parser = sub.add_parser("reproduce-paper", parents=[common],
                                      help="recompute published values and diff against fixtures")
    reproduce_parser.add_argument("--item", action="append", choices=list(ITEMS))
    reproduce_parser.add_argument("--fixtures-dir")
    return parser


def configure_logging(level: Optional[str]) -> None:
    if level is None:
        level = "DEBUG" if config.debug else config.log_level
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point"""
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    try:
        return LahseriesCLI(args).run()
    except LahseriesError as e:
        logger.error(f"{type(e).__name__}: {e}")
        sys.stderr.write(f"error: {e}\n")
        return 2
    except ValueError as e:
        logger.error(f"Configuration error: {e}")
        sys.stderr.write(f"error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())

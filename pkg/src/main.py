#!/usr/bin/env python3
"""
Command-line entry point for paging-lab.

Generates traces, runs policy sweeps, validates the paging bounds and runs
the oracle and Turing machine witnesses. Results go to CSV files; logs go to
stderr.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from cache.policy_kind import PolicyKind
from config import ConfigManager, resolve_log_level, set_log_level, setup_logging
from experiments.runner import Command, CommandOptions, run_experiment
from utils.error_handler import EXIT_USAGE, ConfigurationError, ErrorHandler, PagingLabError

MAX_SEED = 2 ** 64 - 1


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value <= MAX_SEED:
        raise argparse.ArgumentTypeError(f"seed must be an unsigned 64-bit integer, got {text}")
    return value


class PagingLabApplication:
    """Parses arguments, sets up logging and configuration, and runs one command."""

    def __init__(self, argv: Optional[List[str]] = None):
        self.parser = self._build_parser()
        self.args = self.parser.parse_args(argv)
        self.error_handler = ErrorHandler()

        self._setup_logging(self.args.log_level)
        self.logger = logging.getLogger("paging_lab.main")

    def _setup_logging(self, requested: Optional[str]) -> None:
        """Setup application logging on stderr."""
        setup_logging(log_level=resolve_log_level(requested), console_output=True)

    @staticmethod
    def _build_parser() -> argparse.ArgumentParser:
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--config", type=Path, help="experiment file (key = value lines)")
        common.add_argument("--seed", type=_seed, help="64-bit seed; replaces the seed list")
        common.add_argument("--out", type=Path, help="output directory")
        common.add_argument("--k-b", dest="k_b", type=int, help="cache capacity in blocks")
        common.add_argument("--beta", type=float, help="perturbation fraction")
        common.add_argument("--policy", help="policy label, e.g. lru or noisy_belady(0.5)")
        common.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"])
        common.add_argument("--workers", type=int, help="worker processes (overrides PAGING_LAB_THREADS)")

        parser = argparse.ArgumentParser(
            prog="paging-lab",
            description="Deterministic paging-simulation laboratory",
        )
        commands = parser.add_subparsers(dest="command", required=True)

        gen = commands.add_parser("gen-trace", parents=[common], help="write a trace file")
        gen.add_argument("--adversarial", action="store_true", help="cyclic trace over K_b + 1 blocks")
        gen.add_argument("--output", type=Path, help="trace file path")

        sim = commands.add_parser("simulate", parents=[common], help="run one policy on a trace file")
        sim.add_argument("trace", type=Path)

        commands.add_parser("sweep", parents=[common], help="full policy x K_b x beta x seed grid")
        commands.add_parser("validate", parents=[common], help="run every bound check")

        reproduce = commands.add_parser(
            "reproduce", parents=[common], help="fig3: policy sweep, fig4: sensitivity and robustness"
        )
        reproduce.add_argument("experiment", choices=["fig3", "fig4"])

        oracle = commands.add_parser("oracle", parents=[common], help="compare Belady with the exact oracles")
        oracle.add_argument("trace", type=Path, nargs="?", help="trace file; exhaustive sweep when omitted")

        tm = commands.add_parser("tm", help="Turing machine witnesses")
        tm_commands = tm.add_subparsers(dest="tm_command", required=True)
        tm_run = tm_commands.add_parser("run", parents=[common], help="run a machine on a blocked tape")
        tm_run.add_argument("machine", help="machine file or builtin:<name>")
        tm_run.add_argument("input", nargs="?", default="", help="initial tape contents")
        tm_run.add_argument("--block-size", dest="block_size", type=int, default=4)
        tm_run.add_argument("--max-steps", dest="max_steps", type=int, default=10_000)
        return parser

    def _command(self) -> Command:
        if self.args.command == "reproduce":
            return Command(f"reproduce {self.args.experiment}")
        if self.args.command == "tm":
            return Command.TM_RUN
        return Command(self.args.command)

    def _options(self, policy: Optional[PolicyKind]) -> CommandOptions:
        args = self.args
        trace_path = getattr(args, "trace", None) or getattr(args, "output", None)
        return CommandOptions(
            trace_path=trace_path,
            seed=args.seed,
            k_b=args.k_b,
            beta=args.beta,
            policy=policy,
            adversarial=getattr(args, "adversarial", False),
            machine=getattr(args, "machine", None),
            tm_input=getattr(args, "input", ""),
            block_size=getattr(args, "block_size", 4),
            max_steps=getattr(args, "max_steps", 10_000),
            workers=args.workers,
        )

    def run(self) -> int:
        """Run the selected command and return its exit status."""
        command = self._command()
        try:
            config = ConfigManager().load(self.args.config)
            if self.args.log_level is None:
                set_log_level(resolve_log_level(None, config.log_level))

            policy = PolicyKind.parse(self.args.policy) if self.args.policy else None
            if self.args.k_b is not None and self.args.k_b < 1:
                raise ConfigurationError(f"--k-b must be >= 1, got {self.args.k_b}", key="k_b")
            config = config.with_overrides(
                seed=self.args.seed,
                output_dir=self.args.out,
                k_b=self.args.k_b,
                beta=self.args.beta,
                policy=policy,
            )
            return run_experiment(config, command, self._options(policy))
        except PagingLabError as e:
            return self.error_handler.handle_error(e, context=command.value)


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point."""
    try:
        app = PagingLabApplication(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        return app.run()
    except Exception as e:
        return ErrorHandler().handle_error(e, context="paging-lab")


if __name__ == "__main__":
    sys.exit(main())

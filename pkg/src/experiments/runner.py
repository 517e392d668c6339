"""
Dispatches command-line subcommands to the experiment drivers.
"""

import logging
import sys
from dataclasses import dataclass, replace
from enum import Enum
from pathlib import Path
from typing import Optional, TextIO

from cache.policy_kind import BELADY, LRU, PolicyKind
from config.experiment_config import ExperimentConfig
from oracle.certification import certify_exhaustive, compare_oracles
from oracle.paging_mdp import BRUTE_FORCE_GUARD
from simulation.engine import competitive_ratio, fault_rate, simulate
from tm.machine import parse_machine_file
from tm.simulator import simulate_tm
from utils.error_handler import EXIT_FAILURE, EXIT_OK, EXIT_VALIDATION_FAILED, UsageError
from utils.rng import PERTURB_STREAM, derive_seed
from workload.generators import gen_adversarial_trace, gen_zipf_trace, perturb_trace
from workload.trace_io import read_trace, write_trace

from .results_io import RUN_COLUMNS, RunRow, render_table, run_rows
from .sweep import run_policy_sweep, run_robustness_sweep
from .validation import run_validation

logger = logging.getLogger("paging_lab.experiments.runner")


class Command(Enum):
    GEN_TRACE = "gen-trace"
    SIMULATE = "simulate"
    SWEEP = "sweep"
    VALIDATE = "validate"
    REPRODUCE_FIG3 = "reproduce fig3"
    REPRODUCE_FIG4 = "reproduce fig4"
    ORACLE = "oracle"
    TM_RUN = "tm run"


@dataclass(frozen=True)
class CommandOptions:
    """Per-command arguments that are not part of the experiment configuration."""
    trace_path: Optional[Path] = None
    seed: Optional[int] = None
    k_b: Optional[int] = None
    beta: Optional[float] = None
    policy: Optional[PolicyKind] = None
    adversarial: bool = False
    machine: Optional[str] = None
    tm_input: str = ""
    block_size: int = 4
    max_steps: int = 10_000
    workers: Optional[int] = None


def _gen_trace(config: ExperimentConfig, options: CommandOptions, out: TextIO) -> int:
    seed = options.seed if options.seed is not None else config.seeds[0]
    if options.adversarial:
        trace = gen_adversarial_trace(options.k_b or config.bounds.k_b, config.zipf.length_t)
    else:
        trace = gen_zipf_trace(config.zipf, seed)
    if options.beta:
        # the header keeps the run seed; the perturbation stream is derived from it
        perturbed = perturb_trace(trace, options.beta, derive_seed(seed, PERTURB_STREAM)).trace
        trace = replace(perturbed, seed=seed)

    path = options.trace_path or config.output_dir / f"trace_{trace.kind.value}_{seed}.txt"
    write_trace(trace, path)
    print(path, file=out)
    return EXIT_OK


def _simulate(config: ExperimentConfig, options: CommandOptions, out: TextIO) -> int:
    if options.trace_path is None:
        raise UsageError("simulate needs a trace file")
    trace = read_trace(options.trace_path)
    seed = options.seed if options.seed is not None else 0
    beta = options.beta or 0.0
    if beta:
        trace = perturb_trace(trace, beta, derive_seed(seed, PERTURB_STREAM)).trace
    kind = options.policy or LRU
    k_b = options.k_b or config.bounds.k_b

    result = simulate(trace, kind, k_b, seed)
    f_opt = simulate(trace, BELADY, k_b, seed).faults_total
    row = RunRow(
        policy=kind.label,
        policy_order=kind.sort_key(),
        k_b=k_b,
        beta=beta,
        seed=seed,
        faults=result.faults_total,
        fault_rate=fault_rate(result, trace.length_t),
        ratio_vs_belady=competitive_ratio(result.faults_total, f_opt),
    )
    out.write(render_table(run_rows([row]), RUN_COLUMNS))
    return EXIT_OK


def _sweep(config: ExperimentConfig, options: CommandOptions, out: TextIO) -> int:
    artifacts = run_policy_sweep(config, options.workers)
    for path in (artifacts.fault_rates, artifacts.ratios, artifacts.working_set):
        print(path, file=out)
    return EXIT_OK


def _reproduce_robustness(config: ExperimentConfig, options: CommandOptions, out: TextIO) -> int:
    artifacts = run_robustness_sweep(config, options.workers)
    print(artifacts.sensitivity, file=out)
    print(artifacts.robustness, file=out)
    return EXIT_VALIDATION_FAILED if any(r.failed_hard for r in artifacts.reports) else EXIT_OK


def _validate(config: ExperimentConfig, options: CommandOptions, out: TextIO) -> int:
    outcome = run_validation(config, options.workers)
    print(outcome.bounds_csv, file=out)
    print(outcome.beta_csv, file=out)
    return EXIT_OK if outcome.passed else EXIT_VALIDATION_FAILED


def _oracle(config: ExperimentConfig, options: CommandOptions, out: TextIO) -> int:
    if options.trace_path is None:
        report = certify_exhaustive(k_b=options.k_b or 2)
        print(
            f"traces={report.traces_checked} M={report.universe_m} T={report.length_t} "
            f"k_b={report.k_b} mismatches={len(report.mismatches)}",
            file=out,
        )
        return EXIT_OK if report.passed else EXIT_FAILURE

    trace = read_trace(options.trace_path)
    k_b = options.k_b or 2
    small = (trace.distinct_blocks() <= BRUTE_FORCE_GUARD.max_blocks
             and trace.length_t <= BRUTE_FORCE_GUARD.max_length)
    comparison = compare_oracles(trace, k_b, with_brute_force=small)
    if not small:
        logger.warning("trace too large for brute force; comparing Belady with the DP only")
    brute = comparison.brute_force if comparison.brute_force is not None else "skipped"
    print(f"belady={comparison.belady} dp={comparison.dp} brute_force={brute}", file=out)
    return EXIT_OK if comparison.agrees else EXIT_FAILURE


def _tm_run(config: ExperimentConfig, options: CommandOptions, out: TextIO) -> int:
    if options.machine is None:
        raise UsageError("tm run needs a machine file or builtin:<name>")
    machine = parse_machine_file(options.machine)
    result = simulate_tm(machine, options.tm_input, options.block_size, options.max_steps)
    print(
        f"halted={'true' if result.halted else 'false'} state={result.final_state} "
        f"steps={result.steps} tape={result.tape_text} "
        f"attention_ops={result.attention_ops} retrieval_queries={result.retrieval_queries}",
        file=out,
    )
    return EXIT_OK


_HANDLERS = {
    Command.GEN_TRACE: _gen_trace,
    Command.SIMULATE: _simulate,
    Command.SWEEP: _sweep,
    Command.REPRODUCE_FIG3: _sweep,
    Command.REPRODUCE_FIG4: _reproduce_robustness,
    Command.VALIDATE: _validate,
    Command.ORACLE: _oracle,
    Command.TM_RUN: _tm_run,
}


def run_experiment(
    config: ExperimentConfig,
    command: Command,
    options: Optional[CommandOptions] = None,
    out: Optional[TextIO] = None,
) -> int:
    """
    Run one subcommand.

    Args:
        config: Experiment configuration, already narrowed by command-line flags
        command: Subcommand
        options: Command-specific arguments
        out: Stream for command output; stdout by default

    Returns:
        Process exit status
    """
    options = options or CommandOptions()
    out = out or sys.stdout
    logger.info(f"Running {command.value}")
    return _HANDLERS[command](config, options, out)

"""
Experiment dispatch and exit-code policy.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Optional, Sequence

from src.controllers.command_line import CommandLine, CommandLineArgs
from src.controllers.experiments import EXPERIMENTS
from src.core.errors import (
    ChainStepError,
    ConfigError,
    DimensionGuardError,
    NonConvergenceError,
)
from src.core.states.experiment import ExperimentConfig
from src.render.table_renderer import TableRenderer
from src.services.run_manifest import RunManifest

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NONCONVERGENCE = 3

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class ExperimentController:
    """Loads the configuration, runs one experiment and writes its manifest."""

    def __init__(self, config: ExperimentConfig) -> None:
        self.config = config

    @classmethod
    def from_args(cls, args: CommandLineArgs) -> ExperimentController:
        if args.config:
            config = ExperimentConfig.load(args.config)
            if config.kind != args.experiment:
                raise ConfigError(
                    f"{args.config} describes '{config.kind.value}' but "
                    f"'{args.experiment.value}' was requested"
                )
        else:
            config = ExperimentConfig.from_mapping({"experiment": args.experiment.value})
        return cls(config.with_overrides(args.seed, args.out, args.workers))

    def run(self) -> list[Path]:
        config = self.config
        tables = TableRenderer(config.output_dir)
        experiment = EXPERIMENTS[config.kind](config, tables)
        logger.info("Running %s into %s", config.kind.value, tables.out_dir)
        files = experiment.run()
        manifest = RunManifest(config).write(tables)
        logger.info("Finished %s: %d files", config.kind.value, len(files) + 1)
        return [*files, manifest]


def exit_code_for(exc: BaseException) -> Optional[int]:
    """Exit code of a known failure, or ``None`` for unexpected errors."""
    if isinstance(exc, ChainStepError):
        return exit_code_for(exc.cause)
    if isinstance(exc, (ConfigError, DimensionGuardError)):
        return EXIT_CONFIG
    if isinstance(exc, NonConvergenceError):
        return EXIT_NONCONVERGENCE
    return None


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = CommandLine.parse(argv)
    logging.basicConfig(level=args.log_level, format=LOG_FORMAT)
    try:
        ExperimentController.from_args(args).run()
    except Exception as exc:
        code = exit_code_for(exc)
        if code is None:
            raise
        logger.error("%s: %s", type(exc).__name__, exc)
        return code
    return EXIT_OK

"""
Command-line parsing.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from typing import Optional, Sequence

from src import __version__
from src.core.types.enums.experiment import ExperimentKind


@dataclass(frozen=True, slots=True)
class CommandLineArgs:
    experiment: ExperimentKind
    config: Optional[str]
    seed: Optional[int]
    out: Optional[str]
    workers: Optional[int]
    log_level: str


class CommandLine:
    """Translates ``argv`` into :class:`CommandLineArgs`."""

    @staticmethod
    def build_parser() -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog="z2metts",
            description="METTS and AVQMETTS experiments on the Z2 lattice gauge theory chain.",
        )
        parser.add_argument(
            "experiment",
            choices=[k.value for k in ExperimentKind],
            help="experiment kind to run",
        )
        parser.add_argument("--config", help="TOML experiment file or JSON run manifest")
        parser.add_argument("--seed", type=int, help="override master_seed")
        parser.add_argument("--out", help="override output_dir")
        parser.add_argument("--workers", type=int, help="override the worker-pool size")
        parser.add_argument(
            "--log-level",
            default="INFO",
            choices=["DEBUG", "INFO", "WARNING", "ERROR"],
            help="root logger level (default: INFO)",
        )
        parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
        return parser

    @staticmethod
    def parse(argv: Optional[Sequence[str]] = None) -> CommandLineArgs:
        ns = CommandLine.build_parser().parse_args(argv)
        return CommandLineArgs(
            experiment=ExperimentKind(ns.experiment),
            config=ns.config,
            seed=ns.seed,
            out=ns.out,
            workers=ns.workers,
            log_level=ns.log_level,
        )

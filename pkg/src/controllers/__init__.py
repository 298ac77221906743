"""Command-line surface and experiment dispatch."""

from src.controllers.command_line import CommandLine, CommandLineArgs
from src.controllers.experiment_controller import ExperimentController, exit_code_for, main

__all__ = ["CommandLine", "CommandLineArgs", "ExperimentController", "exit_code_for", "main"]

from dataclasses import dataclass


@dataclass(slots=True)
class OutputConfig:
    """File names and number formatting of experiment outputs."""

    significant_digits: int = 15
    manifest_name: str = "manifest.json"
    trace_name: str = "avqite_trace.jsonl"
    trace_capacity: int = 100_000

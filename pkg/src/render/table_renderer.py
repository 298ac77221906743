"""
Table renderer writing CSV, JSON and JSON-lines files.
"""

from __future__ import annotations

import csv
import json
import logging
import math
from pathlib import Path
from typing import Any, Iterable, Sequence

from src.core.errors import ConfigError
from src.core.main_config import settings

logger = logging.getLogger(__name__)


class TableRenderer:
    """
    Writes result tables under one output directory.

    Floats are rendered with ``settings.output.significant_digits``
    significant digits so identical runs produce identical bytes.
    """

    def __init__(self, out_dir: str | Path) -> None:
        self.out_dir = Path(out_dir)
        try:
            self.out_dir.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise ConfigError(f"Output directory {self.out_dir} is not writable: {exc}") from exc
        self.digits = settings.output.significant_digits
        self.written: list[Path] = []

    def format_value(self, value: Any) -> str:
        if isinstance(value, bool):
            return str(int(value))
        if isinstance(value, float):
            if math.isnan(value):
                return "nan"
            return f"{value:.{self.digits}g}"
        return str(value)

    def _jsonable(self, value: Any) -> Any:
        if isinstance(value, float):
            return None if math.isnan(value) else float(f"{value:.{self.digits}g}")
        if isinstance(value, dict):
            return {str(k): self._jsonable(v) for k, v in value.items()}
        if isinstance(value, (list, tuple)):
            return [self._jsonable(v) for v in value]
        if hasattr(value, "item"):
            return self._jsonable(value.item())
        return value

    def write_csv(self, name: str, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
        path = self.out_dir / name
        with path.open("w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(header)
            for row in rows:
                writer.writerow([self.format_value(self._plain(v)) for v in row])
        return self._record(path)

    def write_json(self, name: str, data: Any) -> Path:
        path = self.out_dir / name
        path.write_text(json.dumps(self._jsonable(data), indent=2, sort_keys=True) + "\n", encoding="utf-8")
        return self._record(path)

    def write_jsonl(self, name: str, records: Iterable[dict[str, Any]]) -> Path:
        path = self.out_dir / name
        with path.open("w", encoding="utf-8") as handle:
            for record in records:
                handle.write(json.dumps(self._jsonable(record), sort_keys=True) + "\n")
        return self._record(path)

    @staticmethod
    def _plain(value: Any) -> Any:
        return value.item() if hasattr(value, "item") else value

    def _record(self, path: Path) -> Path:
        logger.debug("Wrote %s", path)
        self.written.append(path)
        return path

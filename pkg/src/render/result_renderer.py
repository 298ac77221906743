"""
Renderers for domain objects: sample sets, profiles, histograms, fixtures.
"""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Iterable

from src.core.entities.sample_set import SampleSet
from src.core.entities.string_histogram import StringHistogram
from src.core.types.occupation_profile import OccupationProfile
from src.render.table_renderer import TableRenderer

FIXTURE_HEADER = ("L", "h", "mu", "beta", "observable_name", "value")


class ResultRenderer:
    """Domain-level file formats layered on a :class:`TableRenderer`."""

    def __init__(self, tables: TableRenderer) -> None:
        self.tables = tables

    def sample_set(self, stem: str, samples: SampleSet) -> list[Path]:
        """
        ``<stem>.csv`` (walk, step, kept_flag, collapse_basis, cps, observables) and a JSON sidecar.

        ``collapse_basis`` is the basis of the collapse that produced the
        row's ``cps``, i.e. ``basis_for_step(step)``; the collapse ending that
        step uses ``basis_for_step(step + 1)``.
        """
        names = samples.names
        rows = (
            [r.walk, r.step, r.kept, r.basis, r.cps, *(r.values.get(n, float("nan")) for n in names)]
            for r in samples.records
        )
        csv_path = self.tables.write_csv(
            f"{stem}.csv", ["walk", "step", "kept_flag", "collapse_basis", "cps", *names], rows
        )
        meta = dict(samples.metadata)
        meta["observables"] = names
        json_path = self.tables.write_json(f"{stem}.meta.json", meta)
        return [csv_path, json_path]

    def profile(self, name: str, profile: OccupationProfile) -> Path:
        stderr = profile.stderr
        rows = (
            [site, float(value), float(stderr[site - 1]) if stderr is not None else float("nan")]
            for site, value in enumerate(profile.values, start=1)
        )
        return self.tables.write_csv(name, ["site", "value", "stderr"], rows)

    def histogram(self, name: str, histogram: StringHistogram) -> Path:
        rows = [["string", l, c] for l, c in histogram.strings.items()]
        rows += [["antistring", l, c] for l, c in histogram.antistrings.items()]
        return self.tables.write_csv(name, ["kind", "l", "C_l"], rows)

    def fixtures(self, name: str, rows: Iterable[tuple[int, float, float, float, str, float]]) -> Path:
        return self.tables.write_csv(name, FIXTURE_HEADER, rows)


def load_fixtures(path: str | Path) -> dict[tuple[int, float, float, float, str], float]:
    """Read a fixture CSV keyed by ``(L, h, mu, beta, observable_name)``."""
    table: dict[tuple[int, float, float, float, str], float] = {}
    with Path(path).open(newline="", encoding="utf-8") as handle:
        for row in csv.DictReader(handle):
            key = (int(row["L"]), float(row["h"]), float(row["mu"]), float(row["beta"]), row["observable_name"])
            table[key] = float(row["value"])
    return table

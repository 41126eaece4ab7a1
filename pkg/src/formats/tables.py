"""
CSV tables for band structures and flux diagrams.

BandStructure: ``theta_1..theta_d, lambda_1..lambda_n``, one row per θ sample.
FluxDiagram: ``s, band_lo_1, band_hi_1, ...``; rows with fewer intervals
leave the trailing cells empty.
"""
from __future__ import annotations

import csv
import io
import logging
from pathlib import Path
from typing import Union

from src.covering import BandStructure, FluxDiagram, FluxRow
from src.spectra import complement
from src.utils.config import format_real, settings
from src.utils.errors import DiagramError

logger = logging.getLogger(__name__)


def _write(header: list[str], rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def band_structure_csv(bands: BandStructure) -> str:
    rank = bands.theta_grid.shape[1]
    n = bands.bands.shape[1]
    header = [f"theta_{i}" for i in range(1, rank + 1)] + [f"lambda_{k}" for k in range(1, n + 1)]
    rows = (
        [format_real(x) for x in theta] + [format_real(x) for x in values]
        for theta, values in zip(bands.theta_grid, bands.bands)
    )
    return _write(header, rows)


def flux_diagram_csv(diagram: FluxDiagram) -> str:
    if not diagram.rows:
        raise DiagramError("flux diagram has no rows")
    width = max(len(row.band_intervals) for row in diagram.rows)
    header = ["s"]
    for k in range(1, width + 1):
        header += [f"band_lo_{k}", f"band_hi_{k}"]
    rows = []
    for row in diagram.rows:
        cells = [format_real(row.s)]
        for lo, hi in row.band_intervals:
            cells += [format_real(lo), format_real(hi)]
        cells += [""] * (1 + 2 * width - len(cells))
        rows.append(cells)
    return _write(header, rows)


def parse_flux_diagram(text: str, lambda_max: float | None = None) -> FluxDiagram:
    """Read a FluxDiagram CSV back; the ambient top is ``lambda_max`` or the largest band end."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise DiagramError("flux diagram CSV is empty") from None
    if not header or header[0] != "s" or len(header) % 2 != 1:
        raise DiagramError("flux diagram CSV must start with 's' followed by band_lo/band_hi pairs")

    parsed = []
    for line_no, cells in enumerate(reader, start=2):
        if not any(c.strip() for c in cells):
            continue
        try:
            s = float(cells[0])
            ends = [float(c) for c in cells[1:] if c.strip()]
        except ValueError as e:
            raise DiagramError(f"line {line_no}: {e}") from e
        if len(ends) % 2:
            raise DiagramError(f"line {line_no}: odd number of band endpoints")
        intervals = tuple((ends[i], ends[i + 1]) for i in range(0, len(ends), 2))
        if any(lo > hi for lo, hi in intervals):
            raise DiagramError(f"line {line_no}: band_lo exceeds band_hi")
        parsed.append((s, intervals))
    if not parsed:
        raise DiagramError("flux diagram CSV has no rows")

    top = lambda_max if lambda_max is not None else max((hi for _, ivs in parsed for _, hi in ivs), default=0.0)
    if top <= 0:
        raise DiagramError("λ range must be positive")
    ambient = (0.0, float(top))
    rows = tuple(FluxRow(s, ivs, tuple(complement(list(ivs), ambient, settings.merge_tol))) for s, ivs in parsed)
    logger.debug("parsed flux diagram with %d rows", len(rows))
    return FluxDiagram(rows, ambient)


def read_flux_diagram(path: Union[str, Path], lambda_max: float | None = None) -> FluxDiagram:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise DiagramError(f"cannot read {path}: {e.strerror}") from e
    except UnicodeDecodeError as e:
        raise DiagramError(f"{path} is not UTF-8 text: {e.reason} at byte {e.start}") from e
    return parse_flux_diagram(text, lambda_max)


__all__ = [
    "band_structure_csv",
    "flux_diagram_csv",
    "parse_flux_diagram",
    "read_flux_diagram",
]

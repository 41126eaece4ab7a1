"""
SVG rendering of flux diagrams.

Bands are gray vertical bars in the column of their s value, gaps stay
white. The output is a plain string built in a fixed order with fixed
number formatting, so equal diagrams render to equal bytes.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Optional

from src.covering import FluxDiagram
from src.utils.config import settings
from src.utils.errors import DiagramError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SvgStyle:
    width: int = settings.svg_width
    height: int = settings.svg_height
    band_color: str = settings.svg_band_color
    background: str = settings.svg_background
    margin: int = settings.svg_margin

    @classmethod
    def from_settings(cls) -> "SvgStyle":
        return cls(settings.svg_width, settings.svg_height, settings.svg_band_color, settings.svg_background, settings.svg_margin)


class SVG:
    def __init__(self):
        self.svg = ""

    def header(self, width: int, height: int) -> None:
        self.svg += (
            '<?xml version="1.0" encoding="UTF-8" standalone="no"?>\n'
            f'<svg version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}" '
            'xmlns="http://www.w3.org/2000/svg">\n'
        )

    def group_start(self, attr: dict) -> None:
        g_attr = [f'{key}="{value}"' for key, value in sorted(attr.items())]
        self.svg += f'<g {" ".join(g_attr)}>\n'

    def group_end(self) -> None:
        self.svg += "</g>\n"

    def filled_rectangle(self, x1: float, y1: float, x2: float, y2: float, fill: str, extra: str = "") -> None:
        width = x2 - x1
        height = y2 - y1
        tail = f" {extra}" if extra else ""
        self.svg += f'<rect x="{x1:.3f}" y="{y1:.3f}" width="{width:.3f}" height="{height:.3f}" fill="{fill}"{tail}/>\n'

    def line(self, x1: float, y1: float, x2: float, y2: float, stroke: str = "#000000") -> None:
        self.svg += f'<line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}" stroke="{stroke}" stroke-width="1"/>\n'

    def text(self, x: float, y: float, string: str, anchor: str = "middle") -> None:
        self.svg += f'<text x="{x:.3f}" y="{y:.3f}" font-size="12" font-family="sans-serif" text-anchor="{anchor}">{string}</text>\n'

    def get_svg(self) -> str:
        return f"{self.svg}</svg>\n"


# minimum bar height so that flat bands stay visible
MIN_BAR = 0.5


def render_svg(diagram: FluxDiagram, style: Optional[SvgStyle] = None, lambda_max: Optional[float] = None) -> str:
    """Flux diagram as an SVG document: s ∈ [0, 2π) across, λ ∈ [0, λ_max] up."""
    if not diagram.rows:
        raise DiagramError("cannot render an empty flux diagram")
    style = style or SvgStyle.from_settings()
    top = diagram.ambient[1] if lambda_max is None else float(lambda_max)
    if not (math.isfinite(top) and top > 0):
        raise DiagramError("λ range must be positive")

    m = style.margin
    plot_w = style.width - 2 * m
    plot_h = style.height - 2 * m
    if plot_w <= 0 or plot_h <= 0:
        raise DiagramError("SVG size leaves no room for the plot")

    rows = sorted(diagram.rows, key=lambda r: r.s)
    column = plot_w / len(rows)

    def x_of(s: float) -> float:
        return m + plot_w * (s / (2.0 * math.pi))

    def y_of(lam: float) -> float:
        return m + plot_h * (1.0 - min(max(lam, 0.0), top) / top)

    svg = SVG()
    svg.header(style.width, style.height)
    svg.filled_rectangle(0, 0, style.width, style.height, style.background)

    svg.group_start({"id": "bands", "fill": style.band_color})
    for row in rows:
        x = x_of(row.s) if len(rows) > 1 else m
        width = column if len(rows) > 1 else plot_w
        for lo, hi in row.band_intervals:
            y1, y2 = y_of(hi), y_of(lo)
            if y2 - y1 < MIN_BAR:
                y1, y2 = y1 - MIN_BAR / 2, y2 + MIN_BAR / 2
            svg.filled_rectangle(x, y1, min(x + width, m + plot_w), y2, style.band_color)
    svg.group_end()

    svg.group_start({"id": "axes"})
    svg.line(m, m + plot_h, m + plot_w, m + plot_h)
    svg.line(m, m, m, m + plot_h)
    for label, s in (("0", 0.0), ("π", math.pi), ("2π", 2.0 * math.pi)):
        svg.line(x_of(s), m + plot_h, x_of(s), m + plot_h + 4)
        svg.text(x_of(s), m + plot_h + 16, label)
    for lam in (0.0, top / 2, top):
        svg.line(m - 4, y_of(lam), m, y_of(lam))
        svg.text(m - 6, y_of(lam) + 4, f"{lam:.3g}", anchor="end")
    svg.text(m + plot_w / 2, style.height - 4, "s")
    svg.text(12, m + plot_h / 2, "λ")
    svg.group_end()

    logger.debug("rendered %d diagram rows into %dx%d SVG", len(rows), style.width, style.height)
    return svg.get_svg()


__all__ = ["SvgStyle", "SVG", "render_svg"]

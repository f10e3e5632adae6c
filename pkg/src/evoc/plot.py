"""Static SVG line charts for sweep tables and run time series.

Output is plain text built in a fixed order, so identical input gives
byte-identical files.
"""

from __future__ import annotations

import math
from typing import Sequence
from xml.sax.saxutils import escape

from .engine import MetricsRecord
from .experiments import SweepCell

WIDTH, HEIGHT = 640, 420
LEFT, RIGHT, TOP, BOTTOM = 70, 150, 40, 60
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2",
           "#7f7f7f")

METRICS = {
    "fitness": ("mean_fitness_avg", "mean_fitness", "Mean fitness of actions"),
    "diversity": ("diversity_avg", "diversity", "Number of distinct actions"),
}


def _nice_max(v: float) -> float:
    if v <= 0:
        return 1.0
    mag = 10 ** math.floor(math.log10(v))
    for step in (1, 2, 2.5, 5, 10):
        if step * mag >= v:
            return step * mag
    return 10 * mag


def _ticks(hi: float, n: int = 5) -> list[float]:
    return [hi * i / n for i in range(n + 1)]


def _fmt_tick(v: float) -> str:
    return f"{v:g}" if abs(v - round(v)) > 1e-9 else str(int(round(v)))


def line_chart(series: Sequence[tuple[str, Sequence[tuple[float, float]]]],
               x_label: str, y_label: str, title: str, x_max: float | None = None) -> str:
    """SVG text with one polyline per ``(label, points)`` entry."""
    if not series or not any(pts for _, pts in series):
        raise ValueError("nothing to plot")
    xs = [x for _, pts in series for x, _ in pts]
    ys = [y for _, pts in series for _, y in pts]
    x_hi = x_max if x_max is not None else _nice_max(max(xs))
    y_hi = _nice_max(max(ys))
    pw, ph = WIDTH - LEFT - RIGHT, HEIGHT - TOP - BOTTOM

    def sx(x: float) -> float:
        return LEFT + pw * x / x_hi

    def sy(y: float) -> float:
        return TOP + ph * (1 - y / y_hi)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{LEFT + pw / 2:.2f}" y="22" text-anchor="middle" font-size="14">'
        f'{escape(title)}</text>',
        f'<g stroke="#cccccc" stroke-width="1">',
    ]
    for t in _ticks(y_hi):
        out.append(f'<line x1="{LEFT}" y1="{sy(t):.2f}" x2="{LEFT + pw}" y2="{sy(t):.2f}"/>')
    out.append("</g>")
    out.append(f'<g stroke="black" stroke-width="1"><line x1="{LEFT}" y1="{TOP + ph}" '
               f'x2="{LEFT + pw}" y2="{TOP + ph}"/><line x1="{LEFT}" y1="{TOP}" '
               f'x2="{LEFT}" y2="{TOP + ph}"/></g>')
    out.append('<g class="ticks">')
    for t in _ticks(x_hi):
        out.append(f'<text x="{sx(t):.2f}" y="{TOP + ph + 18}" text-anchor="middle">'
                   f'{_fmt_tick(t)}</text>')
    for t in _ticks(y_hi):
        out.append(f'<text x="{LEFT - 8}" y="{sy(t) + 4:.2f}" text-anchor="end">'
                   f'{_fmt_tick(t)}</text>')
    out.append("</g>")
    out.append(f'<text x="{LEFT + pw / 2:.2f}" y="{HEIGHT - 15}" text-anchor="middle">'
               f'{escape(x_label)}</text>')
    out.append(f'<text x="18" y="{TOP + ph / 2:.2f}" text-anchor="middle" '
               f'transform="rotate(-90 18 {TOP + ph / 2:.2f})">{escape(y_label)}</text>')
    for k, (label, pts) in enumerate(series):
        color = PALETTE[k % len(PALETTE)]
        coords = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in pts)
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="2" '
                   f'points="{coords}"/>')
        ly = TOP + 10 + 20 * k
        out.append(f'<line x1="{LEFT + pw + 15}" y1="{ly}" x2="{LEFT + pw + 40}" y2="{ly}" '
                   f'stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{LEFT + pw + 46}" y="{ly + 4}">{escape(label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def sweep_svg(cells: Sequence[SweepCell], metric: str = "fitness",
              iteration: int | None = None) -> str:
    """One line per invent rate; x is the percentage of creators."""
    if not cells:
        raise ValueError("empty sweep table")
    field_name, _, y_label = METRICS[metric]
    by_rate: dict[float, list[SweepCell]] = {}
    for c in cells:
        by_rate.setdefault(c.invent_rate, []).append(c)
    series = []
    for rate in sorted(by_rate):
        pts = [(100 * c.creator_fraction, getattr(c, field_name))
               for c in sorted(by_rate[rate], key=lambda c: c.creator_fraction)]
        series.append((f"invent {100 * rate:g}%", pts))
    when = f" at iteration {iteration}" if iteration is not None else ""
    return line_chart(series, "Creators (% of population)", y_label,
                      f"{y_label}{when} vs. creator percentage", x_max=100)


def series_svg(records: Sequence[MetricsRecord], metric: str = "fitness") -> str:
    if not records:
        raise ValueError("empty time series")
    _, field_name, y_label = METRICS[metric]
    pts = [(r.iteration, getattr(r, field_name)) for r in records]
    return line_chart([(y_label.lower(), pts)], "Iteration", y_label, f"{y_label} over time",
                      x_max=max(1, records[-1].iteration))

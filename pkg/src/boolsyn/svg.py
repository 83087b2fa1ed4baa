"""Minimal standalone SVG charts: box plots per class and fitness trajectories."""

from __future__ import annotations

from xml.sax.saxutils import escape

import numpy as np

COLORS = {
    "random": "#7f7f7f",
    "redundant": "#c0392b",
    "synergistic": "#2461b3",
    "complex": "#d4a017",
}
_FALLBACK = ("#2ca02c", "#9467bd", "#8c564b", "#e377c2", "#17becf")

W, H = 480, 320
LEFT, RIGHT, TOP, BOTTOM = 64, 16, 36, 48


def _color(label: str, i: int) -> str:
    return COLORS.get(label.split("@")[0], _FALLBACK[i % len(_FALLBACK)])


def _f(x: float) -> str:
    return f"{x:.2f}"


def _axis_range(lo: float, hi: float) -> tuple[float, float]:
    if hi - lo < 1e-12:
        lo, hi = lo - 0.5, hi + 0.5
    pad = 0.05 * (hi - lo)
    return lo - pad, hi + pad


class _Canvas:
    def __init__(self, title: str, xlabel: str, ylabel: str, ylo: float, yhi: float):
        self.ylo, self.yhi = ylo, yhi
        self.parts = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">',
            f'<rect width="{W}" height="{H}" fill="white"/>',
            f'<text x="{W / 2}" y="20" text-anchor="middle" font-family="sans-serif" font-size="14">{escape(title)}</text>',
            f'<text x="{W / 2}" y="{H - 8}" text-anchor="middle" font-family="sans-serif" font-size="12">{escape(xlabel)}</text>',
            f'<text x="14" y="{H / 2}" text-anchor="middle" font-family="sans-serif" font-size="12" '
            f'transform="rotate(-90 14 {H / 2})">{escape(ylabel)}</text>',
        ]
        x0, x1, y0, y1 = LEFT, W - RIGHT, TOP, H - BOTTOM
        self.parts.append(f'<path d="M{x0} {y0} L{x0} {y1} L{x1} {y1}" stroke="black" fill="none"/>')
        for t in np.linspace(ylo, yhi, 5):
            y = self.y(t)
            self.parts.append(f'<line x1="{x0 - 4}" y1="{_f(y)}" x2="{x0}" y2="{_f(y)}" stroke="black"/>')
            self.parts.append(
                f'<text x="{x0 - 6}" y="{_f(y + 4)}" text-anchor="end" font-family="sans-serif" font-size="10">{t:.3g}</text>'
            )

    def y(self, v: float) -> float:
        frac = (v - self.ylo) / (self.yhi - self.ylo)
        return (H - BOTTOM) - frac * (H - BOTTOM - TOP)

    def add(self, element: str) -> None:
        self.parts.append(element)

    def render(self) -> str:
        return "\n".join(self.parts + ["</svg>"]) + "\n"


def box_plot(groups: dict[str, list[float]], title: str, ylabel: str) -> str:
    """Median, quartile box and 1.5 IQR whiskers for each labelled sample."""
    allv = np.concatenate([np.asarray(v, dtype=float) for v in groups.values()])
    c = _Canvas(title, "class", ylabel, *_axis_range(float(allv.min()), float(allv.max())))
    slot = (W - LEFT - RIGHT) / max(len(groups), 1)
    for i, (label, values) in enumerate(groups.items()):
        v = np.sort(np.asarray(values, dtype=float))
        q1, med, q3 = np.percentile(v, [25, 50, 75])
        iqr = q3 - q1
        lo = v[v >= q1 - 1.5 * iqr].min()
        hi = v[v <= q3 + 1.5 * iqr].max()
        cx = LEFT + slot * (i + 0.5)
        half = min(slot * 0.3, 40)
        col = _color(label, i)
        c.add(f'<line x1="{_f(cx)}" y1="{_f(c.y(lo))}" x2="{_f(cx)}" y2="{_f(c.y(hi))}" stroke="black"/>')
        c.add(
            f'<rect x="{_f(cx - half)}" y="{_f(c.y(q3))}" width="{_f(2 * half)}" '
            f'height="{_f(c.y(q1) - c.y(q3))}" fill="{col}" fill-opacity="0.6" stroke="black"/>'
        )
        c.add(f'<line x1="{_f(cx - half)}" y1="{_f(c.y(med))}" x2="{_f(cx + half)}" y2="{_f(c.y(med))}" stroke="black" stroke-width="2"/>')
        for o in v[(v < lo) | (v > hi)]:
            c.add(f'<circle cx="{_f(cx)}" cy="{_f(c.y(o))}" r="2" fill="none" stroke="black"/>')
        c.add(
            f'<text x="{_f(cx)}" y="{H - BOTTOM + 14}" text-anchor="middle" font-family="sans-serif" '
            f'font-size="11">{escape(label)}</text>'
        )
    return c.render()


def trajectory_plot(series: dict[str, tuple[list[float], list[float]]], title: str, ylabel: str) -> str:
    """One polyline per run: x = generation, y = fitness."""
    xs = np.concatenate([np.asarray(x, dtype=float) for x, _ in series.values()])
    ys = np.concatenate([np.asarray(y, dtype=float) for _, y in series.values()])
    c = _Canvas(title, "generation", ylabel, *_axis_range(float(ys.min()), float(ys.max())))
    xlo, xhi = float(xs.min()), float(xs.max())
    span = xhi - xlo if xhi > xlo else 1.0
    for i, (label, (x, y)) in enumerate(series.items()):
        px = [LEFT + (float(a) - xlo) / span * (W - LEFT - RIGHT) for a in x]
        pts = " ".join(f"{_f(a)},{_f(c.y(float(b)))}" for a, b in zip(px, y))
        c.add(f'<polyline points="{pts}" fill="none" stroke="{_color(label, i)}" stroke-width="1.2"/>')
        c.add(
            f'<text x="{W - RIGHT - 4}" y="{TOP + 12 * (i + 1)}" text-anchor="end" font-family="sans-serif" '
            f'font-size="10" fill="{_color(label, i)}">{escape(label)}</text>'
        )
    return c.render()

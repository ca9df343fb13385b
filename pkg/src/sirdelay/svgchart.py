"""Minimal self-contained SVG line charts for trajectory output.

No third-party plotting dependency: the chart is a fixed-layout SVG with
axes, tick labels, one polyline per series and a legend.  Output is
well-formed XML.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

__all__ = ["line_chart"]

WIDTH, HEIGHT = 760, 420
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 64, 16, 36, 46
COLORS = ("#1965b0", "#dc050c", "#4eb265", "#b17ba6", "#f4a736")


def _ticks(lo: float, hi: float, count: int = 6):
    if hi <= lo:
        hi = lo + 1.0
    raw = (hi - lo) / count
    mag = 10.0 ** math.floor(math.log10(raw))
    for mult in (1.0, 2.0, 2.5, 5.0, 10.0):
        if raw <= mult * mag:
            step = mult * mag
            break
    start = math.ceil(lo / step) * step
    out = []
    t = start
    while t <= hi + 1e-9 * step:
        out.append(0.0 if abs(t) < 1e-12 * step else t)
        t += step
    return out


def _fmt(v: float) -> str:
    return f"{v:.6g}"


def line_chart(xs, series, title: str = "", x_label: str = "t", y_label: str = "") -> str:
    """Render series as an SVG string.

    ``xs`` is the shared abscissa; ``series`` is a list of (label, values)
    pairs with values aligned to xs.
    """
    xs = list(xs)
    if not xs or not series:
        raise ValueError("chart needs at least one point and one series")
    x_lo, x_hi = min(xs), max(xs)
    y_lo = min(min(vals) for _, vals in series)
    y_hi = max(max(vals) for _, vals in series)
    if y_hi == y_lo:
        y_hi = y_lo + 1.0
    pad = 0.05 * (y_hi - y_lo)
    y_lo -= pad
    y_hi += pad

    plot_w = WIDTH - MARGIN_L - MARGIN_R
    plot_h = HEIGHT - MARGIN_T - MARGIN_B

    def px(x):
        return MARGIN_L + (x - x_lo) / (x_hi - x_lo) * plot_w

    def py(y):
        return MARGIN_T + (1.0 - (y - y_lo) / (y_hi - y_lo)) * plot_h

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    if title:
        parts.append(
            f'<text x="{WIDTH / 2:.1f}" y="22" text-anchor="middle" '
            f'font-family="sans-serif" font-size="15">{escape(title)}</text>'
        )
    # frame
    parts.append(
        f'<rect x="{MARGIN_L}" y="{MARGIN_T}" width="{plot_w}" height="{plot_h}" '
        f'fill="none" stroke="#333" stroke-width="1"/>'
    )
    for t in _ticks(x_lo, x_hi):
        x = px(t)
        parts.append(f'<line x1="{x:.2f}" y1="{MARGIN_T + plot_h}" x2="{x:.2f}" '
                     f'y2="{MARGIN_T + plot_h + 5}" stroke="#333"/>')
        parts.append(f'<text x="{x:.2f}" y="{MARGIN_T + plot_h + 20}" text-anchor="middle" '
                     f'font-family="sans-serif" font-size="11">{_fmt(t)}</text>')
    for t in _ticks(y_lo, y_hi):
        y = py(t)
        parts.append(f'<line x1="{MARGIN_L - 5}" y1="{y:.2f}" x2="{MARGIN_L}" '
                     f'y2="{y:.2f}" stroke="#333"/>')
        parts.append(f'<text x="{MARGIN_L - 9}" y="{y + 4:.2f}" text-anchor="end" '
                     f'font-family="sans-serif" font-size="11">{_fmt(t)}</text>')
        parts.append(f'<line x1="{MARGIN_L}" y1="{y:.2f}" x2="{MARGIN_L + plot_w}" '
                     f'y2="{y:.2f}" stroke="#ddd" stroke-width="0.5"/>')
    parts.append(
        f'<text x="{MARGIN_L + plot_w / 2:.1f}" y="{HEIGHT - 8}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="12">{escape(x_label)}</text>'
    )
    if y_label:
        yl_x, yl_y = 16, MARGIN_T + plot_h / 2
        parts.append(
            f'<text x="{yl_x}" y="{yl_y:.1f}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="12" '
            f'transform="rotate(-90 {yl_x} {yl_y:.1f})">{escape(y_label)}</text>'
        )
    for idx, (label, vals) in enumerate(series):
        color = COLORS[idx % len(COLORS)]
        pts = " ".join(f"{px(x):.2f},{py(v):.2f}" for x, v in zip(xs, vals))
        parts.append(f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>')
        ly = MARGIN_T + 14 + 16 * idx
        lx = MARGIN_L + plot_w - 110
        parts.append(f'<line x1="{lx}" y1="{ly - 4}" x2="{lx + 24}" y2="{ly - 4}" '
                     f'stroke="{color}" stroke-width="2"/>')
        parts.append(f'<text x="{lx + 30}" y="{ly}" font-family="sans-serif" '
                     f'font-size="12">{escape(str(label))}</text>')
    parts.append("</svg>")
    return "\n".join(parts)

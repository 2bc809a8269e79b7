"""Minimal self-contained SVG emission for eigenvalue-curve figures.

The figure subcommand needs exactly one kind of plot: continuous eigenvalue
curves over a parameter grid, their mirror images, a scatter of truncation
points, and one analytic overlay (a horizontal line or a parabola).  Writing
that directly keeps the output free of plotting dependencies.  Fixed 800x600
viewBox, axes with tick labels, legend.
"""

from __future__ import annotations

import math

WIDTH = 800.0
HEIGHT = 600.0
_LEFT, _RIGHT, _TOP, _BOTTOM = 72.0, 24.0, 46.0, 58.0

_BLUE = "#1f4fd8"
_GREEN = "#1a8f3c"
_RED = "#d62718"


def _nice_step(span: float, target: int) -> float:
    raw = span / max(target, 1)
    mag = 10.0 ** math.floor(math.log10(raw))
    for mult in (1.0, 2.0, 2.5, 5.0, 10.0):
        if mult * mag >= raw:
            return mult * mag
    return 10.0 * mag


def _ticks(lo: float, hi: float, target: int = 7) -> list:
    if not (hi > lo):
        return [lo]
    step = _nice_step(hi - lo, target)
    t = math.ceil(lo / step) * step
    out = []
    while t <= hi + 1e-9 * step:
        out.append(0.0 if abs(t) < 1e-12 * step else t)
        t += step
    return out


def _num(v: float) -> str:
    return f"{v:.2f}".rstrip("0").rstrip(".")


def _label(v: float) -> str:
    return f"{v:.10g}"


class _Frame:
    """Data-to-pixel transform for the plotting rectangle."""

    def __init__(self, x_range, y_range):
        self.x0, self.x1 = float(x_range[0]), float(x_range[1])
        self.y0, self.y1 = float(y_range[0]), float(y_range[1])
        if not (self.x1 > self.x0 and self.y1 > self.y0):
            raise ValueError("empty axis range")
        self.px0, self.px1 = _LEFT, WIDTH - _RIGHT
        self.py0, self.py1 = HEIGHT - _BOTTOM, _TOP

    def x(self, v: float) -> float:
        return self.px0 + (v - self.x0) / (self.x1 - self.x0) * (self.px1 - self.px0)

    def y(self, v: float) -> float:
        return self.py0 + (v - self.y0) / (self.y1 - self.y0) * (self.py1 - self.py0)


def _path(frame: _Frame, xs, ys) -> str:
    parts = []
    pen = "M"
    for xv, yv in zip(xs, ys):
        if not (math.isfinite(xv) and math.isfinite(yv)):
            pen = "M"
            continue
        parts.append(f"{pen}{_num(frame.x(xv))} {_num(frame.y(yv))}")
        pen = "L"
    return " ".join(parts)


def render_figure(x_label: str, grid, direct, mirror, points, overlay,
                  overlay_label: str, y_range, title: str) -> str:
    """Build the complete SVG document as a string.

    Args:
        grid: swept parameter values, strictly increasing.
        direct: list of per-level eigenvalue arrays over the grid.
        mirror: matching arrays for the negated parameter, dashed.
        points: (x, W) pairs for the truncation roots.
        overlay: (xs, ys) polyline for the analytic reference, or None.
        y_range: (lo, hi) for the W axis.
    """
    frame = _Frame((grid[0], grid[-1]), y_range)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{int(WIDTH)}" '
           f'height="{int(HEIGHT)}" viewBox="0 0 {int(WIDTH)} {int(HEIGHT)}">',
           '<rect width="100%" height="100%" fill="white"/>',
           '<defs><clipPath id="plot">'
           f'<rect x="{_num(_LEFT)}" y="{_num(_TOP)}" '
           f'width="{_num(WIDTH - _LEFT - _RIGHT)}" '
           f'height="{_num(HEIGHT - _TOP - _BOTTOM)}"/>'
           '</clipPath></defs>']

    for t in _ticks(frame.x0, frame.x1):
        px = frame.x(t)
        out.append(f'<line x1="{_num(px)}" y1="{_num(frame.py0)}" x2="{_num(px)}" '
                   f'y2="{_num(frame.py1)}" stroke="#dddddd" stroke-width="1"/>')
        out.append(f'<line x1="{_num(px)}" y1="{_num(frame.py0)}" x2="{_num(px)}" '
                   f'y2="{_num(frame.py0 + 5)}" stroke="black" stroke-width="1"/>')
        out.append(f'<text x="{_num(px)}" y="{_num(frame.py0 + 19)}" font-size="11" '
                   f'font-family="sans-serif" text-anchor="middle">{_label(t)}</text>')
    for t in _ticks(frame.y0, frame.y1):
        py = frame.y(t)
        out.append(f'<line x1="{_num(frame.px0)}" y1="{_num(py)}" x2="{_num(frame.px1)}" '
                   f'y2="{_num(py)}" stroke="#dddddd" stroke-width="1"/>')
        out.append(f'<line x1="{_num(frame.px0 - 5)}" y1="{_num(py)}" x2="{_num(frame.px0)}" '
                   f'y2="{_num(py)}" stroke="black" stroke-width="1"/>')
        out.append(f'<text x="{_num(frame.px0 - 9)}" y="{_num(py + 4)}" font-size="11" '
                   f'font-family="sans-serif" text-anchor="end">{_label(t)}</text>')

    out.append('<g clip-path="url(#plot)">')
    for ys in mirror:
        d = _path(frame, grid, ys)
        if d:
            out.append(f'<path d="{d}" fill="none" stroke="{_GREEN}" '
                       'stroke-width="1.2" stroke-dasharray="6 4"/>')
    for ys in direct:
        d = _path(frame, grid, ys)
        if d:
            out.append(f'<path d="{d}" fill="none" stroke="{_BLUE}" stroke-width="1.3"/>')
    if overlay is not None:
        d = _path(frame, overlay[0], overlay[1])
        if d:
            out.append(f'<path d="{d}" fill="none" stroke="{_RED}" '
                       'stroke-width="1.6" stroke-dasharray="9 5"/>')
    for xv, yv in points:
        if math.isfinite(xv) and math.isfinite(yv):
            out.append(f'<circle cx="{_num(frame.x(xv))}" cy="{_num(frame.y(yv))}" '
                       f'r="3.2" fill="{_RED}"/>')
    out.append('</g>')

    out.append(f'<rect x="{_num(_LEFT)}" y="{_num(_TOP)}" '
               f'width="{_num(WIDTH - _LEFT - _RIGHT)}" '
               f'height="{_num(HEIGHT - _TOP - _BOTTOM)}" '
               'fill="none" stroke="black" stroke-width="1"/>')
    out.append(f'<text x="{_num((_LEFT + WIDTH - _RIGHT) / 2)}" y="24" font-size="14" '
               f'font-family="sans-serif" text-anchor="middle">{title}</text>')
    out.append(f'<text x="{_num((_LEFT + WIDTH - _RIGHT) / 2)}" '
               f'y="{_num(HEIGHT - 16)}" font-size="13" font-family="sans-serif" '
               f'text-anchor="middle">{x_label}</text>')
    out.append(f'<text x="20" y="{_num((_TOP + HEIGHT - _BOTTOM) / 2)}" font-size="13" '
               'font-family="sans-serif" text-anchor="middle" '
               f'transform="rotate(-90 20 {_num((_TOP + HEIGHT - _BOTTOM) / 2)})">W</text>')

    lx = WIDTH - _RIGHT - 240.0
    ly = _TOP + 14.0
    entries = [(f"{_BLUE}", None, "variational curves"),
               (f"{_GREEN}", "6 4", "mirror curves (negated parameter)"),
               ("point", None, "truncation roots"),
               (f"{_RED}", "9 5", overlay_label)]
    if overlay is None:
        entries = entries[:3]
    out.append(f'<rect x="{_num(lx - 10)}" y="{_num(ly - 12)}" width="244" '
               f'height="{_num(16.0 * len(entries) + 8)}" fill="white" '
               'fill-opacity="0.85" stroke="#888888" stroke-width="0.8"/>')
    for k, (color, dash, text) in enumerate(entries):
        ey = ly + 16.0 * k
        if color == "point":
            out.append(f'<circle cx="{_num(lx + 14)}" cy="{_num(ey - 3)}" r="3.2" '
                       f'fill="{_RED}"/>')
        else:
            dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
            out.append(f'<line x1="{_num(lx)}" y1="{_num(ey - 3)}" x2="{_num(lx + 28)}" '
                       f'y2="{_num(ey - 3)}" stroke="{color}" stroke-width="1.5"{dash_attr}/>')
        out.append(f'<text x="{_num(lx + 36)}" y="{_num(ey)}" font-size="11" '
                   f'font-family="sans-serif">{text}</text>')

    out.append('</svg>')
    return "\n".join(out) + "\n"

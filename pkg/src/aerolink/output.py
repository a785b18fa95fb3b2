"""CSV tables and SVG figures for sweep results.

Both writers are deterministic: the same series always produces the same
bytes, so outputs can be diffed or checked in as golden files.
"""

from __future__ import annotations

import csv
import io
import math
from pathlib import Path
from xml.sax.saxutils import escape

import numpy as np

from aerolink.antenna import VerticalPattern, vertical_attenuation
from aerolink.scenario import LinkKind, SweepRecord, SweepSeries

RECORD_FIELDS = (
    "link_label",
    "height_m",
    "p_los",
    "pl_los_dB",
    "pl_nlos_dB",
    "clutter_dB",
    "pl_combined_dB",
    "antenna_gain_dB",
    "rssi_dBm",
    "margin_dB",
    "covered",
)
FIGURES = ("los", "pathloss", "gain", "rssi")
PATTERN_SWEEP_DEG = np.linspace(-90.0, 90.0, 361)


def fmt(value) -> str:
    """Six significant digits; booleans as ``true``/``false``."""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, str):
        return value
    if value is None:
        return ""
    text = f"{float(value):.6g}"
    return "0" if text == "-0" else text


def record_row(record: SweepRecord) -> list[str]:
    return [fmt(getattr(record, name)) for name in RECORD_FIELDS]


def _write_table(path, header, rows) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    Path(path).write_text(buf.getvalue(), encoding="utf-8", newline="")


def emit_csv(series: SweepSeries, path) -> None:
    """One row per (link, height) in canonical order."""
    if not series.records:
        raise ValueError("series is empty")
    _write_table(path, RECORD_FIELDS, (record_row(r) for r in series.records))


def figure_table(series: SweepSeries, which: str) -> tuple[list[str], list[list[str]]]:
    """Header and rows backing one figure."""
    if which == "rssi":
        return list(RECORD_FIELDS), [record_row(r) for r in series.records]
    if which == "los":
        cols = ["link_label", "height_m", "p_los"]
    elif which == "pathloss":
        cols = ["link_label", "height_m", "pl_los_dB", "pl_nlos_dB", "clutter_dB", "pl_combined_dB"]
    elif which == "gain":
        pattern = _gain_pattern(series)
        rows = [
            ["pattern", fmt(t), "", fmt(g)]
            for t, g in zip(PATTERN_SWEEP_DEG, vertical_attenuation(PATTERN_SWEEP_DEG, pattern))
        ]
        for r in series.records:
            if r.pattern_angle_deg is not None:
                rows.append([r.link_label, fmt(r.pattern_angle_deg), fmt(r.height_m), fmt(r.antenna_gain_dB)])
        return ["series", "theta_deg", "height_m", "gain_dB"], rows
    else:
        raise ValueError(f"unknown figure {which!r}; choose from {', '.join(FIGURES)}")
    return cols, [[fmt(getattr(r, c)) for c in cols] for r in series.records]


def emit_figure_csv(series: SweepSeries, which: str, path) -> None:
    header, rows = figure_table(series, which)
    _write_table(path, header, rows)


# --- SVG ---------------------------------------------------------------

WIDTH, HEIGHT = 720, 480
LEFT, RIGHT, TOP, BOTTOM = 70, 190, 40, 60
PALETTE = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f")


def _nice_step(span: float) -> float:
    raw = span / 6.0
    mag = 10 ** math.floor(math.log10(raw))
    for m in (1, 2, 5, 10):
        if m * mag >= raw:
            return m * mag
    return 10 * mag


def _ticks(lo: float, hi: float) -> np.ndarray:
    step = _nice_step(hi - lo)
    first = math.ceil(lo / step - 1e-9) * step
    return np.arange(first, hi + 1e-9 * step, step)


def _auto_limits(values) -> tuple[float, float]:
    lo, hi = float(np.min(values)), float(np.max(values))
    if hi - lo < 1e-9:
        lo, hi = lo - 1.0, hi + 1.0
    step = _nice_step(hi - lo)
    return math.floor(lo / step) * step, math.ceil(hi / step) * step


def render_svg(
    curves: list[tuple[str, np.ndarray, np.ndarray]],
    title: str,
    xlabel: str,
    ylabel: str,
    xlim: tuple[float, float],
    ylim: tuple[float, float],
    hlines: list[tuple[str, float]] = (),
) -> str:
    """Line chart with one polyline per curve and dashed horizontal references."""
    pw, ph = WIDTH - LEFT - RIGHT, HEIGHT - TOP - BOTTOM
    (x0, x1), (y0, y1) = xlim, ylim

    def sx(x):
        return LEFT + (x - x0) / (x1 - x0) * pw

    def sy(y):
        return TOP + ph - (y - y0) / (y1 - y0) * ph

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{LEFT + pw / 2:.1f}" y="{TOP - 14}" text-anchor="middle" font-size="14">{escape(title)}</text>',
        f'<rect class="plot-area" x="{LEFT}" y="{TOP}" width="{pw}" height="{ph}" fill="none" stroke="black"/>',
    ]
    for tick in _ticks(x0, x1):
        x = sx(tick)
        out.append(f'<line class="grid" x1="{x:.2f}" y1="{TOP}" x2="{x:.2f}" y2="{TOP + ph}" stroke="#dddddd"/>')
        out.append(f'<text x="{x:.2f}" y="{TOP + ph + 16}" text-anchor="middle">{fmt(round(tick, 9))}</text>')
    for tick in _ticks(y0, y1):
        y = sy(tick)
        out.append(f'<line class="grid" x1="{LEFT}" y1="{y:.2f}" x2="{LEFT + pw}" y2="{y:.2f}" stroke="#dddddd"/>')
        out.append(f'<text x="{LEFT - 6}" y="{y + 4:.2f}" text-anchor="end">{fmt(round(tick, 9))}</text>')
    out.append(f'<text x="{LEFT + pw / 2:.1f}" y="{HEIGHT - 18}" text-anchor="middle">{escape(xlabel)}</text>')
    out.append(
        f'<text x="18" y="{TOP + ph / 2:.1f}" text-anchor="middle" '
        f'transform="rotate(-90 18 {TOP + ph / 2:.1f})">{escape(ylabel)}</text>'
    )

    legend_y = TOP + 10
    for i, (label, xs, ys) in enumerate(curves):
        color = PALETTE[i % len(PALETTE)]
        pts = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in zip(xs, ys))
        out.append(
            f'<polyline class="series" data-label="{escape(label)}" fill="none" '
            f'stroke="{color}" stroke-width="1.5" points="{pts}"/>'
        )
        out.append(f'<line x1="{LEFT + pw + 12}" y1="{legend_y}" x2="{LEFT + pw + 32}" y2="{legend_y}" stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{LEFT + pw + 38}" y="{legend_y + 4}">{escape(label)}</text>')
        legend_y += 18
    for label, value in hlines:
        y = sy(value)
        out.append(
            f'<line class="threshold" data-label="{escape(label)}" x1="{LEFT}" y1="{y:.2f}" '
            f'x2="{LEFT + pw}" y2="{y:.2f}" stroke="black" stroke-dasharray="6,4"/>'
        )
        out.append(f'<text x="{LEFT + pw + 12}" y="{legend_y + 4}">--- {escape(label)}</text>')
        legend_y += 18
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _gain_pattern(series: SweepSeries) -> VerticalPattern:
    for link in series.spec.links:
        if link.pattern is not None:
            return link.pattern
    return VerticalPattern()


def figure_svg(series: SweepSeries, which: str) -> str:
    heights = series.heights_m
    xlim = (float(heights[0]), float(heights[-1])) if heights.size > 1 else (0.0, float(heights[0]) * 2)
    if which == "los":
        curves = [(lab, heights, series.column(lab, "p_los")) for lab in series.labels]
        return render_svg(curves, "LoS probability vs aircraft height", "Aircraft height (m)",
                          "LoS probability", xlim, (0.0, 1.0))
    if which == "pathloss":
        curves = [(lab, heights, series.column(lab, "pl_combined_dB")) for lab in series.labels]
        ylim = _auto_limits(np.concatenate([c[2] for c in curves]))
        return render_svg(curves, "Path loss vs aircraft height", "Aircraft height (m)",
                          "Path loss (dB)", xlim, ylim)
    if which == "rssi":
        curves = [(lab, heights, series.column(lab, "rssi_dBm")) for lab in series.labels]
        sens = sorted({link.terminal.sensitivity_dBm for link in series.spec.links}, reverse=True)
        hlines = []
        for s in sens:
            kinds = sorted({link.kind.value.upper() for link in series.spec.links
                            if link.terminal.sensitivity_dBm == s})
            hlines.append((f"{'/'.join(kinds)} sensitivity {fmt(s)} dBm", s))
        ylim = _auto_limits(np.concatenate([c[2] for c in curves] + [np.asarray(sens)]))
        return render_svg(curves, "RSSI vs aircraft height", "Aircraft height (m)",
                          "RSSI (dBm)", xlim, ylim, hlines)
    if which == "gain":
        pattern = _gain_pattern(series)
        curves = [("vertical pattern", PATTERN_SWEEP_DEG,
                   vertical_attenuation(PATTERN_SWEEP_DEG, pattern))]
        for link in series.spec.links:
            if link.kind is LinkKind.TN:
                curves.append((f"{link.label} (aircraft)",
                               series.column(link.label, "pattern_angle_deg"),
                               series.column(link.label, "antenna_gain_dB")))
        ylim = (-math.ceil(pattern.sla_v_dB / 5.0 + 1) * 5.0, 0.0)
        return render_svg(curves, f"Vertical antenna gain, downtilt {fmt(pattern.etilt_deg)} deg",
                          "Depression angle theta (deg)", "Gain (dB)", (-90.0, 90.0), ylim)
    raise ValueError(f"unknown figure {which!r}; choose from {', '.join(FIGURES)}")


def emit_figure(series: SweepSeries, which: str, path) -> None:
    Path(path).write_text(figure_svg(series, which), encoding="utf-8", newline="")

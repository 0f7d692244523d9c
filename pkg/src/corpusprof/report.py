"""Rendering: comparison tables (text/csv/json) and growth-curve SVG plots."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

from .experiments import ComparisonTable
from .growth import GrowthCurve

TABLE_COLUMNS = ["corpus", "beta", "alpha", "r", "vocab", "collection", "avg_len", "singletons"]

_PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"]


@dataclass
class PlotSpec:
    curves: list[tuple[str, GrowthCurve]]
    scale: str = "loglog10"  # or "natural"
    width: int = 720
    height: int = 480
    xlabel: str = "collection size N"
    ylabel: str = "vocabulary size V(N)"

    def __post_init__(self):
        if not self.curves:
            raise ValueError("plot needs at least one curve")
        if self.scale not in ("loglog10", "natural"):
            raise ValueError(f"unknown scale: {self.scale!r}")


def _row_cells(row, text_mode: bool):
    if row.error is not None:
        return [row.label, f"error: {row.error}"] + [""] * (len(TABLE_COLUMNS) - 2)
    fit, stats = row.fit, row.stats
    if text_mode:
        fmt_count = lambda n: f"{n:,}"
        return [
            row.label,
            f"{fit.beta_hat:.4f} ± {fit.beta_ci90:.4f}",
            f"{fit.alpha_hat:.4f} ± {fit.alpha_ci90:.4f}",
            f"{fit.pearson_r:.4f}",
            fmt_count(stats.vocab),
            fmt_count(stats.collection),
            str(stats.avg_len_rounded),
            fmt_count(stats.singletons),
        ]
    return [
        row.label,
        f"{fit.beta_hat:.4f}",
        f"{fit.alpha_hat:.4f}",
        f"{fit.pearson_r:.4f}",
        stats.vocab,
        stats.collection,
        stats.avg_len_rounded,
        stats.singletons,
    ]


def render_table(table: ComparisonTable, fmt: str = "text") -> bytes:
    """Render rows in the fixed column order; counts get thousands separators
    in text mode only, json round-trips all values at full precision."""
    if not table.rows:
        raise ValueError("cannot render an empty comparison table")
    if fmt == "json":
        payload = []
        for row in table.rows:
            if row.error is not None:
                payload.append({"corpus": row.label, "error": row.error})
            else:
                payload.append(
                    {"corpus": row.label, "fit": row.fit.to_dict(), "stats": row.stats.to_dict()}
                )
        return json.dumps(payload, indent=2).encode("utf-8")
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(TABLE_COLUMNS)
        for row in table.rows:
            writer.writerow(_row_cells(row, text_mode=False))
        return buf.getvalue().encode("utf-8")
    if fmt == "text":
        grid = [TABLE_COLUMNS] + [_row_cells(r, text_mode=True) for r in table.rows]
        widths = [max(len(str(row[i])) for row in grid) for i in range(len(TABLE_COLUMNS))]
        lines = []
        for row in grid:
            lines.append("  ".join(str(c).ljust(w) for c, w in zip(row, widths)).rstrip())
        return ("\n".join(lines) + "\n").encode("utf-8")
    raise ValueError(f"unknown table format: {fmt!r}")


def _transform(value: float, scale: str) -> float:
    return math.log10(value) if scale == "loglog10" else float(value)


def _ticks(lo: float, hi: float, scale: str) -> list[tuple[float, str]]:
    if scale == "loglog10":
        # decade ticks in transformed (log10) coordinates
        first, last = math.ceil(lo - 1e-9), math.floor(hi + 1e-9)
        ticks = [(float(k), f"1e{k}") for k in range(first, last + 1)]
        return ticks or [(lo, f"1e{lo:.1f}")]
    step = (hi - lo) / 4 if hi > lo else 1.0
    return [(lo + i * step, f"{lo + i * step:.3g}") for i in range(5)]


def render_plot(spec: PlotSpec) -> bytes:
    """Self-contained SVG: one polyline per curve, legend, axis ticks.

    In loglog10 mode all plotted values must be >= 1; violations raise with
    the offending curve and point index. Output bytes are deterministic.
    """
    xs_all, ys_all = [], []
    for label, curve in spec.curves:
        for idx, (n, v) in enumerate(curve.points):
            if spec.scale == "loglog10" and (n < 1 or v < 1):
                raise ValueError(
                    f"curve {label!r} point {idx}: ({n}, {v}) not plottable on log axes"
                )
            xs_all.append(_transform(n, spec.scale))
            ys_all.append(_transform(v, spec.scale))
    if not xs_all:
        raise ValueError("no points to plot")
    x_lo, x_hi = min(xs_all), max(xs_all)
    y_lo, y_hi = min(ys_all), max(ys_all)
    if x_hi == x_lo:
        x_hi = x_lo + 1.0
    if y_hi == y_lo:
        y_hi = y_lo + 1.0

    margin = 60
    pw, ph = spec.width - 2 * margin, spec.height - 2 * margin
    to_px = lambda x: margin + (x - x_lo) / (x_hi - x_lo) * pw
    to_py = lambda y: spec.height - margin - (y - y_lo) / (y_hi - y_lo) * ph

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.width}" '
        f'height="{spec.height}" viewBox="0 0 {spec.width} {spec.height}">',
        f'<rect width="{spec.width}" height="{spec.height}" fill="white"/>',
        f'<rect x="{margin}" y="{margin}" width="{pw}" height="{ph}" '
        'fill="none" stroke="black"/>',
    ]
    for tx, tlabel in _ticks(x_lo, x_hi, spec.scale):
        if not x_lo <= tx <= x_hi:
            continue
        px = to_px(tx)
        parts.append(
            f'<line x1="{px:.2f}" y1="{spec.height - margin}" '
            f'x2="{px:.2f}" y2="{spec.height - margin + 6}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{px:.2f}" y="{spec.height - margin + 20}" '
            f'font-size="11" text-anchor="middle">{tlabel}</text>'
        )
    for ty, tlabel in _ticks(y_lo, y_hi, spec.scale):
        if not y_lo <= ty <= y_hi:
            continue
        py = to_py(ty)
        parts.append(
            f'<line x1="{margin - 6}" y1="{py:.2f}" x2="{margin}" y2="{py:.2f}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{margin - 10}" y="{py + 4:.2f}" '
            f'font-size="11" text-anchor="end">{tlabel}</text>'
        )
    parts.append(
        f'<text x="{spec.width / 2:.0f}" y="{spec.height - 12}" '
        f'font-size="13" text-anchor="middle">{spec.xlabel}</text>'
    )
    parts.append(
        f'<text x="16" y="{spec.height / 2:.0f}" font-size="13" text-anchor="middle" '
        f'transform="rotate(-90 16 {spec.height / 2:.0f})">{spec.ylabel}</text>'
    )
    for k, (label, curve) in enumerate(spec.curves):
        color = _PALETTE[k % len(_PALETTE)]
        verts = " ".join(
            f"{to_px(_transform(n, spec.scale)):.2f},{to_py(_transform(v, spec.scale)):.2f}"
            for n, v in curve.points
        )
        parts.append(
            f'<polyline points="{verts}" fill="none" stroke="{color}" stroke-width="1.5"/>'
        )
        ly = margin + 16 + 18 * k
        parts.append(
            f'<line x1="{margin + 10}" y1="{ly - 4}" x2="{margin + 34}" y2="{ly - 4}" '
            f'stroke="{color}" stroke-width="1.5"/>'
        )
        parts.append(f'<text x="{margin + 40}" y="{ly}" font-size="12">{label}</text>')
    parts.append("</svg>")
    return ("\n".join(parts) + "\n").encode("utf-8")

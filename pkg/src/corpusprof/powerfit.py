"""Power-law parameter estimation for vocabulary growth curves.

Fits V = alpha * N^beta by ordinary least squares on the base-10 log-log
transformed points, reporting 90% confidence half-widths (Student-t on the
OLS standard errors; the alpha bound via the delta method) and Pearson's r.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import stats as sstats

from .growth import GrowthCurve


class FitError(ValueError):
    """Raised when a curve violates the fit preconditions."""


@dataclass(frozen=True)
class HeapsFit:
    beta_hat: float
    alpha_hat: float
    beta_ci90: float
    alpha_ci90: float
    pearson_r: float
    n_points: int

    def to_dict(self) -> dict:
        return {
            "beta": self.beta_hat,
            "beta_ci90": self.beta_ci90,
            "alpha": self.alpha_hat,
            "alpha_ci90": self.alpha_ci90,
            "r": self.pearson_r,
            "n_points": self.n_points,
        }


def pearson(xs, ys) -> float:
    """Sample correlation coefficient; rejects degenerate inputs."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if xs.shape != ys.shape or xs.size < 2:
        raise FitError("pearson requires two equal-length sequences of >= 2 values")
    xd = xs - xs.mean()
    yd = ys - ys.mean()
    sx = math.sqrt(float(xd @ xd))
    sy = math.sqrt(float(yd @ yd))
    if sx == 0.0 or sy == 0.0:
        raise FitError("pearson undefined for zero-variance input")
    return float(xd @ yd) / (sx * sy)


def fit_heaps(curve: GrowthCurve, skip_first: int = 0) -> HeapsFit:
    """OLS fit of log10(V) on log10(N) over a growth curve's points.

    ``skip_first`` drops that many leading points (sensitivity analysis
    only; the default uses every point). Preconditions: at least 3 points,
    all N and V >= 1, and at least two distinct N values.
    """
    points = curve.points[skip_first:]
    if len(points) < 3:
        raise FitError(f"need at least 3 points to fit, got {len(points)}")
    for i, (n, v) in enumerate(points):
        if n < 1 or v < 1:
            raise FitError(f"non-positive coordinate at point index {i}: ({n}, {v})")
    n_arr = np.array([p[0] for p in points], dtype=float)
    v_arr = np.array([p[1] for p in points], dtype=float)
    if np.unique(n_arr).size < 2:
        raise FitError("all N values are equal; slope is undefined")

    x = np.log10(n_arr)
    y = np.log10(v_arr)
    n = x.size
    xm, ym = x.mean(), y.mean()
    sxx = float(((x - xm) ** 2).sum())
    beta = float(((x - xm) * (y - ym)).sum()) / sxx
    intercept = ym - beta * xm

    residuals = y - (intercept + beta * x)
    dof = n - 2
    s2 = float((residuals**2).sum()) / dof if dof > 0 else 0.0
    se_beta = math.sqrt(s2 / sxx)
    se_intercept = math.sqrt(s2 * (1.0 / n + xm**2 / sxx))
    tq = float(sstats.t.ppf(0.95, dof)) if dof > 0 else 0.0

    alpha = 10.0**intercept
    try:
        r = pearson(x, y)
    except FitError:
        # zero variance in y: a flat (constant-V) curve still fits with r := 0
        r = 0.0
    return HeapsFit(
        beta_hat=beta,
        alpha_hat=alpha,
        beta_ci90=tq * se_beta,
        # delta method: d(10^c)/dc = 10^c * ln 10
        alpha_ci90=alpha * math.log(10.0) * tq * se_intercept,
        pearson_r=r,
        n_points=n,
    )


def predict(fit: HeapsFit, collection_size: float) -> float:
    """Predicted vocabulary size alpha * N^beta (unrounded)."""
    if collection_size < 1:
        raise ValueError("collection size must be >= 1")
    return fit.alpha_hat * collection_size**fit.beta_hat

"""End-to-end pipelines: profile one corpus, compare several, shuffle-test.

These compose the ingestion, preprocessing, accumulation, and fitting
stages; the shuffle study additionally checks that corpus statistics are
exactly permutation-invariant while the fitted parameters stay stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .corpus_io import CorpusSource, open_corpus
from .growth import CorpusStats, GrowthCurve, accumulate
from .powerfit import FitError, HeapsFit, fit_heaps
from .preprocess import Preprocessor


@dataclass
class ProfileOptions:
    punct_class: str = "punct+symbols"
    apply_filter: bool = True
    max_points: Optional[int] = 10_000
    skip_first: int = 0


@dataclass
class ComparisonRow:
    label: str
    fit: Optional[HeapsFit]
    stats: Optional[CorpusStats]
    error: Optional[str] = None


@dataclass
class ComparisonTable:
    rows: list[ComparisonRow]


@dataclass
class ShuffleReport:
    base_fit: HeapsFit
    stats: CorpusStats
    n_shuffles: int
    seed: int
    beta_values: list[float] = field(default_factory=list)
    alpha_values: list[float] = field(default_factory=list)

    @staticmethod
    def _spread(values: list[float]) -> dict:
        arr = np.asarray(values, dtype=float)
        return {
            "range": float(arr.max() - arr.min()),
            "std": float(arr.std(ddof=0)),
        }

    @property
    def beta_spread(self) -> dict:
        return self._spread(self.beta_values or [self.base_fit.beta_hat])

    @property
    def alpha_spread(self) -> dict:
        return self._spread(self.alpha_values or [self.base_fit.alpha_hat])


def profile_corpus(
    source: CorpusSource, options: Optional[ProfileOptions] = None
) -> tuple[GrowthCurve, HeapsFit]:
    """open -> preprocess -> accumulate -> fit, in corpus order."""
    options = options or ProfileOptions()
    pre = Preprocessor(punct_class=options.punct_class, apply_filter=options.apply_filter)
    curve = accumulate(pre.run(open_corpus(source)), max_points=options.max_points)
    fit = fit_heaps(curve, skip_first=options.skip_first)
    return curve, fit


def compare(
    sources: list[tuple[str, CorpusSource]], options: Optional[ProfileOptions] = None
) -> ComparisonTable:
    """Profile each labeled source; per-source failures become error rows."""
    labels = [label for label, _ in sources]
    if len(set(labels)) != len(labels):
        raise ValueError("corpus labels must be unique")
    rows = []
    for label, source in sources:
        try:
            curve, fit = profile_corpus(source, options)
            rows.append(ComparisonRow(label=label, fit=fit, stats=curve.stats))
        except (OSError, ValueError, FitError) as exc:
            rows.append(ComparisonRow(label=label, fit=None, stats=None, error=str(exc)))
    return ComparisonTable(rows=rows)


def shuffle_study(
    source: CorpusSource,
    n_shuffles: int,
    seed: int,
    options: Optional[ProfileOptions] = None,
) -> ShuffleReport:
    """Refit under seeded document permutations; stats must not move at all.

    Loads the corpus into memory (this is a bounded-scale verification
    tool). Shuffle j uses seed ``seed + j`` for reproducibility.
    """
    options = options or ProfileOptions()
    pre = Preprocessor(punct_class=options.punct_class, apply_filter=options.apply_filter)
    docs = list(pre.run(open_corpus(source)))
    base_curve = accumulate(docs, max_points=options.max_points)
    base_fit = fit_heaps(base_curve, skip_first=options.skip_first)
    report = ShuffleReport(
        base_fit=base_fit, stats=base_curve.stats, n_shuffles=n_shuffles, seed=seed
    )
    for j in range(n_shuffles):
        rng = np.random.Generator(np.random.PCG64(seed + j))
        order = rng.permutation(len(docs))
        curve = accumulate((docs[i] for i in order), max_points=options.max_points)
        if curve.stats != base_curve.stats:
            raise AssertionError(
                f"shuffle {j}: corpus stats changed under permutation: "
                f"{curve.stats} != {base_curve.stats}"
            )
        fit = fit_heaps(curve, skip_first=options.skip_first)
        report.beta_values.append(fit.beta_hat)
        report.alpha_values.append(fit.alpha_hat)
    return report

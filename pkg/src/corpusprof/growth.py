"""Single-pass vocabulary-growth accumulation and corpus statistics.

Consumes an ordered stream of tokenized documents and produces one
(N_i, V_i) point per document plus the final corpus statistics: document
count d, collection size N_d, vocabulary size V(N_d), average document
length, and the singleton (frequency-1) term count.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional


@dataclass(frozen=True)
class CorpusStats:
    d: int
    collection: int  # N_d: total terms with multiplicity
    vocab: int  # V(N_d): distinct terms
    avg_len: float  # k-bar, stored at full precision
    singletons: int  # w_1: terms with corpus frequency exactly 1

    @property
    def avg_len_rounded(self) -> int:
        """Average document length as reported in tables."""
        return round(self.avg_len)

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "collection": self.collection,
            "vocab": self.vocab,
            "avg_len": self.avg_len,
            "singletons": self.singletons,
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "CorpusStats":
        return cls(
            d=payload["d"],
            collection=payload["collection"],
            vocab=payload["vocab"],
            avg_len=payload["avg_len"],
            singletons=payload["singletons"],
        )


@dataclass
class GrowthCurve:
    """Ordered (N_i, V_i) points; ``stats`` is None for empty/fixture curves."""

    points: list[tuple[int, int]]
    stats: Optional[CorpusStats]

    def __len__(self) -> int:
        return len(self.points)


def singleton_count(term_freqs: Counter) -> int:
    """Number of terms with corpus-level frequency exactly 1."""
    return sum(1 for freq in term_freqs.values() if freq == 1)


def _geometric_sample(points: list[tuple[int, int]], max_points: int) -> list[tuple[int, int]]:
    """Thin to geometrically spaced document indices, always keeping the last."""
    n = len(points)
    if n <= max_points:
        return points
    ratio = n ** (1.0 / (max_points - 1))
    kept_idx: list[int] = []
    last = -1
    for j in range(max_points):
        idx = min(n - 1, int(round(ratio**j)) - 1)
        if idx > last:
            kept_idx.append(idx)
            last = idx
    if kept_idx[-1] != n - 1:
        kept_idx.append(n - 1)
    return [points[i] for i in kept_idx]


def accumulate(docs: Iterable, max_points: Optional[int] = 10_000) -> GrowthCurve:
    """Accumulate the growth curve and exact final stats over a document stream.

    One point per document in stream order; if the curve exceeds
    ``max_points`` it is thinned geometrically (early documents stay dense,
    as log-log plots require) while stats remain exact. Deterministic for a
    fixed input order; an empty stream yields zero points and no stats.
    """
    freqs: Counter = Counter()
    total = 0
    d = 0
    points: list[tuple[int, int]] = []
    for doc in docs:
        freqs.update(doc.tokens)
        total += len(doc.tokens)
        d += 1
        points.append((total, len(freqs)))
    if d == 0:
        return GrowthCurve(points=[], stats=None)
    stats = CorpusStats(
        d=d,
        collection=total,
        vocab=len(freqs),
        avg_len=total / d,
        singletons=singleton_count(freqs),
    )
    if max_points is not None and max_points >= 2:
        points = _geometric_sample(points, max_points)
    return GrowthCurve(points=points, stats=stats)

"""Length bucketing: group documents by token count, one generation cap each."""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_EDGES = (64, 128, 256, 512, 1024)


@dataclass(frozen=True)
class BucketAssignment:
    """Per-document bucket index and generation cap (total tokens incl. prompt)."""

    bucket: int
    cap: int


def bucketize(doc_lengths: list[int], edges: tuple[int, ...] = DEFAULT_EDGES) -> list[BucketAssignment]:
    """Assign each length to the smallest bucket whose upper edge covers it.

    A length beyond the last edge lands in a final open bucket whose cap is
    the maximum document length in the corpus.
    """
    if list(edges) != sorted(set(edges)):
        raise ValueError("bucket edges must be strictly ascending")
    if not edges:
        raise ValueError("need at least one bucket edge")
    open_bucket = len(edges)
    open_cap = max(doc_lengths, default=0)
    out = []
    for length in doc_lengths:
        for i, edge in enumerate(edges):
            if length <= edge:
                out.append(BucketAssignment(bucket=i, cap=edge))
                break
        else:
            out.append(BucketAssignment(bucket=open_bucket, cap=open_cap))
    return out

"""Synthetic corpora with known word statistics.

Three generators serve as ground-truth oracles for the profiler and
fitter: i.i.d. Zipf-rank sampling (asymptotic growth exponent 1/a),
Miller-style random typing over a finite alphabet, and curves (or corpora)
that follow an exact power law up to integer rounding.

All randomness flows through numpy's seeded PCG64 generator so identical
specs reproduce identical corpora.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .growth import GrowthCurve
from .preprocess import TokenizedDoc

KINDS = ("zipf-iid", "monkey", "exact-powerlaw")


@dataclass(frozen=True)
class SynthSpec:
    kind: str
    n_docs: int = 1
    doc_len: int = 100
    seed: int = 0
    # zipf-iid
    zipf_exponent: float = 2.0
    vocab_bound: Optional[int] = None  # None = unbounded
    # monkey
    alphabet_size: int = 26
    space_prob: float = 0.2
    # exact-powerlaw
    alpha: float = 2.0
    beta: float = 0.5
    n_min: int = 10_000
    n_max: int = 100_000_000

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind: {self.kind!r}")
        if self.n_docs < 1 or self.doc_len < 1:
            raise ValueError("n_docs and doc_len must be >= 1")
        if self.kind == "zipf-iid":
            if self.zipf_exponent <= 0:
                raise ValueError("zipf exponent must be positive")
            if self.vocab_bound is None and self.zipf_exponent <= 1:
                raise ValueError("unbounded zipf requires exponent > 1")
            if self.vocab_bound is not None and self.vocab_bound < 1:
                raise ValueError("vocab bound must be >= 1")
        if self.kind == "monkey":
            if self.alphabet_size < 2:
                raise ValueError("alphabet size must be >= 2")
            if not 0.0 < self.space_prob < 1.0:
                raise ValueError("space probability must be in (0, 1)")
        if self.kind == "exact-powerlaw":
            if self.alpha <= 0 or not 0.0 < self.beta <= 1.0:
                raise ValueError("need alpha > 0 and beta in (0, 1]")


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


class _AliasTable:
    """Vose alias method for O(1) sampling from a fixed finite distribution."""

    def __init__(self, weights: np.ndarray):
        n = weights.size
        prob = weights * n / weights.sum()
        alias = np.zeros(n, dtype=np.int64)
        small = [i for i in range(n) if prob[i] < 1.0]
        large = [i for i in range(n) if prob[i] >= 1.0]
        while small and large:
            s, l = small.pop(), large.pop()
            alias[s] = l
            prob[l] -= 1.0 - prob[s]
            (small if prob[l] < 1.0 else large).append(l)
        self.prob = prob
        self.alias = alias
        self.n = n

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        idx = rng.integers(0, self.n, size=size)
        keep = rng.random(size) < self.prob[idx]
        return np.where(keep, idx, self.alias[idx])


def gen_zipf_corpus(spec: SynthSpec) -> Iterator[TokenizedDoc]:
    """Tokens drawn i.i.d. with P(rank k) proportional to k^-a.

    Unbounded vocabularies use numpy's rejection sampler so the rank tail
    is never truncated; a finite bound uses an alias table over ranks
    1..W. Tokens render as the rank with a letter prefix ("w42").
    """
    if spec.kind != "zipf-iid":
        raise ValueError("spec.kind must be 'zipf-iid'")
    rng = _rng(spec.seed)
    table = None
    if spec.vocab_bound is not None:
        ranks = np.arange(1, spec.vocab_bound + 1, dtype=float)
        table = _AliasTable(ranks ** -spec.zipf_exponent)
    for i in range(spec.n_docs):
        if table is None:
            draws = rng.zipf(spec.zipf_exponent, size=spec.doc_len)
        else:
            draws = table.sample(rng, spec.doc_len) + 1
        yield TokenizedDoc(id=str(i), tokens=tuple(f"w{k}" for k in draws))


def gen_monkey_corpus(spec: SynthSpec) -> Iterator[TokenizedDoc]:
    """Random-typing tokens: uniform letters, terminate with prob q per step.

    Token lengths are geometric with parameter q starting at 1, i.e. empty
    tokens are never emitted.
    """
    if spec.kind != "monkey":
        raise ValueError("spec.kind must be 'monkey'")
    rng = _rng(spec.seed)
    letters = "abcdefghijklmnopqrstuvwxyz"
    if spec.alphabet_size > len(letters):
        raise ValueError(f"alphabet size capped at {len(letters)}")
    alphabet = np.frombuffer(letters[: spec.alphabet_size].encode(), dtype=np.uint8)
    for i in range(spec.n_docs):
        lengths = rng.geometric(spec.space_prob, size=spec.doc_len)
        chars = alphabet[rng.integers(0, spec.alphabet_size, size=int(lengths.sum()))]
        text = chars.tobytes().decode()
        bounds = np.concatenate(([0], np.cumsum(lengths)))
        tokens = tuple(text[bounds[j] : bounds[j + 1]] for j in range(spec.doc_len))
        yield TokenizedDoc(id=str(i), tokens=tokens)


def gen_exact_powerlaw_points(spec: SynthSpec, n_points: int = 25) -> GrowthCurve:
    """Near-collinear fitter fixture: (N, round(alpha * N^beta)) points.

    N values are geometrically spaced over [n_min, n_max] and deduplicated
    after integer rounding.
    """
    if spec.kind != "exact-powerlaw":
        raise ValueError("spec.kind must be 'exact-powerlaw'")
    grid = np.geomspace(spec.n_min, spec.n_max, num=n_points)
    points: list[tuple[int, int]] = []
    seen = set()
    for n_val in grid:
        n = int(round(n_val))
        if n in seen:
            continue
        seen.add(n)
        points.append((n, int(round(spec.alpha * n**spec.beta))))
    return GrowthCurve(points=points, stats=None)


def gen_exact_powerlaw_corpus(spec: SynthSpec) -> Iterator[TokenizedDoc]:
    """Fixed-length documents whose cumulative curve is round(alpha * N^beta).

    Document i introduces exactly the new distinct tokens needed to hit the
    target vocabulary at N = i * doc_len, padding with repeats of the first
    token. Requires the per-document vocabulary increment to fit in doc_len.
    """
    if spec.kind != "exact-powerlaw":
        raise ValueError("spec.kind must be 'exact-powerlaw'")
    next_new = 0
    prev_v = 0
    for i in range(1, spec.n_docs + 1):
        target_v = int(round(spec.alpha * (i * spec.doc_len) ** spec.beta))
        new_terms = target_v - prev_v
        if not 0 <= new_terms <= spec.doc_len:
            raise ValueError(
                f"document {i}: needs {new_terms} new terms but doc_len is {spec.doc_len}"
            )
        tokens = [f"w{next_new + j}" for j in range(new_terms)]
        next_new += new_terms
        tokens.extend(["w0"] * (spec.doc_len - new_terms))
        prev_v = target_v
        yield TokenizedDoc(id=str(i - 1), tokens=tuple(tokens))


def generate(spec: SynthSpec) -> Iterator[TokenizedDoc]:
    """Dispatch to the corpus generator for ``spec.kind``."""
    if spec.kind == "zipf-iid":
        return gen_zipf_corpus(spec)
    if spec.kind == "monkey":
        return gen_monkey_corpus(spec)
    return gen_exact_powerlaw_corpus(spec)

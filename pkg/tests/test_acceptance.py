"""Acceptance suite: one test per release criterion, one printed verdict each.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-criterion
pass/fail lines.
"""

import math
import unicodedata

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpusprof.growth import CorpusStats, GrowthCurve, accumulate
from corpusprof.powerfit import fit_heaps
from corpusprof.preprocess import TokenizedDoc, filter_short, normalize_text, tokenize
from corpusprof.synth import SynthSpec, gen_monkey_corpus, gen_exact_powerlaw_points, gen_zipf_corpus

# published fits and statistics for the four corpora under comparison:
# (label, alpha, beta, collection N_d, vocabulary V(N_d))
PUBLISHED_ROWS = [
    ("pubmed-abstracts", 7.7972, 0.6381, 71_600_633, 810_829),
    ("gpt-neo-125m", 1.1672, 0.7924, 64_109_196, 1_834_958),
    ("gpt-neo-1.3b", 2.3558, 0.7320, 66_565_724, 1_292_574),
    ("gpt-neo-2.7b", 2.6461, 0.7232, 64_618_857, 1_213_606),
]


def verdict(name, ok, detail=""):
    print(f"{'PASS' if ok else 'FAIL'}: {name}" + (f" ({detail})" if detail else ""))
    assert ok, f"{name}: {detail}"


def test_table_internal_consistency():
    worst = 0.0
    for label, alpha, beta, collection, vocab in PUBLISHED_ROWS:
        predicted = alpha * collection**beta
        rel = abs(predicted - vocab) / vocab
        worst = max(worst, rel)
        assert rel <= 0.05, f"{label}: predicted {predicted:.0f} vs {vocab} ({rel:.1%})"
    verdict("published-table internal consistency (all rows within 5%)", worst <= 0.05,
            f"worst relative error {worst:.3%}")


def test_exact_recovery():
    spec = SynthSpec(kind="exact-powerlaw", alpha=2.0, beta=0.5)
    fit = fit_heaps(gen_exact_powerlaw_points(spec))
    beta_err = abs(fit.beta_hat - 0.5) / 0.5
    alpha_err = abs(fit.alpha_hat - 2.0) / 2.0
    ok = beta_err <= 1e-3 and alpha_err <= 1e-3 and fit.pearson_r >= 0.9999
    verdict(
        "exact power-law recovery (1e-3 relative, r >= 0.9999)",
        ok,
        f"beta_err={beta_err:.2e}, alpha_err={alpha_err:.2e}, r={fit.pearson_r:.6f}",
    )


def test_zipf_heaps_oracle():
    details = []
    ok = True
    for a in (1.5, 2.0):
        for seed in (1, 2, 3):
            spec = SynthSpec(
                kind="zipf-iid", zipf_exponent=a, n_docs=10_000, doc_len=100, seed=seed
            )
            fit = fit_heaps(accumulate(gen_zipf_corpus(spec)))
            dev = abs(fit.beta_hat - 1.0 / a)
            ok = ok and dev <= 0.08 and fit.pearson_r > 0.99
            details.append(f"a={a} seed={seed}: |dev|={dev:.4f} r={fit.pearson_r:.4f}")
    verdict("zipf-heaps oracle (|beta - 1/a| <= 0.08, r > 0.99, N=1e6, 3 seeds)",
            ok, "; ".join(details))


def test_monkey_heaps_adherence():
    spec = SynthSpec(
        kind="monkey", alphabet_size=26, space_prob=0.2, n_docs=1000, doc_len=100, seed=11
    )
    fit = fit_heaps(accumulate(gen_monkey_corpus(spec)))
    verdict(
        "random-typing model Heaps adherence (r > 0.99 at N=1e5)",
        fit.pearson_r > 0.99,
        f"r={fit.pearson_r:.5f}, beta={fit.beta_hat:.4f}",
    )


def test_brute_force_stats_equivalence():
    rng = np.random.default_rng(2024)
    failures = 0
    for _ in range(100):
        n_docs = rng.integers(1, 51)
        corpus = [
            [f"t{rng.integers(0, 40)}" for _ in range(rng.integers(1, 41))]
            for _ in range(n_docs)
        ]
        docs = [TokenizedDoc(id=str(i), tokens=tuple(t)) for i, t in enumerate(corpus)]
        got = accumulate(docs).stats
        # independent naive recount on the concatenated token list
        flat = [t for doc in corpus for t in doc]
        freqs = {}
        for t in flat:
            freqs[t] = freqs.get(t, 0) + 1
        want = CorpusStats(
            d=len(corpus),
            collection=len(flat),
            vocab=len(freqs),
            avg_len=len(flat) / len(corpus),
            singletons=sum(1 for c in freqs.values() if c == 1),
        )
        if got != want:
            failures += 1
    verdict("brute-force stats equivalence on 100 random corpora", failures == 0,
            f"{failures} mismatches")


def test_shuffle_invariance():
    spec = SynthSpec(kind="zipf-iid", zipf_exponent=1.5, n_docs=1000, doc_len=100, seed=5)
    docs = list(gen_zipf_corpus(spec))
    base = accumulate(docs)
    betas = []
    stats_ok = True
    for j in range(20):
        rng = np.random.Generator(np.random.PCG64(100 + j))
        shuffled = [docs[i] for i in rng.permutation(len(docs))]
        curve = accumulate(shuffled)
        stats_ok = stats_ok and curve.stats == base.stats
        betas.append(fit_heaps(curve).beta_hat)
    spread = float(np.std(betas))
    verdict(
        "shuffle invariance (stats exactly equal, std(beta) < 0.02 over 20 shuffles)",
        stats_ok and spread < 0.02,
        f"stats identical={stats_ok}, std(beta)={spread:.5f}",
    )


_text = st.text(alphabet=st.characters(blacklist_categories=("Cs",)), max_size=50)


@given(_text)
@settings(max_examples=150)
def test_preprocessing_conformance_properties(raw):
    once = normalize_text(raw)
    assert normalize_text(once) == once
    assert normalize_text(raw.upper()) == once
    assert tokenize(normalize_text(unicodedata.normalize("NFD", raw))) == tokenize(once)


def test_preprocessing_filter_boundary():
    five = TokenizedDoc(id="5", tokens=("a", "b", "c", "d", "e"))
    six = TokenizedDoc(id="6", tokens=("a", "b", "c", "d", "e", "f"))
    ok = filter_short(five) is None and filter_short(six) is six
    verdict("preprocessing conformance (idempotence/case/NFC props + filter boundary)",
            ok, "5 tokens dropped, 6 kept")


def test_ci_coverage():
    rng = np.random.default_rng(77)
    true_beta, true_alpha = 0.62, 4.0
    grid = np.geomspace(100, 1_000_000, 25)
    trials, covered = 600, 0
    for _ in range(trials):
        logv = math.log10(true_alpha) + true_beta * np.log10(grid) + rng.normal(
            0, 0.01, grid.size
        )
        points = [(int(n), max(1, int(round(10**y)))) for n, y in zip(grid, logv)]
        fit = fit_heaps(GrowthCurve(points=points, stats=None))
        if abs(fit.beta_hat - true_beta) <= fit.beta_ci90:
            covered += 1
    rate = covered / trials
    verdict(
        "confidence-interval coverage (true beta inside 90% bound 85-95% of trials)",
        0.85 <= rate <= 0.95,
        f"coverage={rate:.3f} over {trials} trials",
    )

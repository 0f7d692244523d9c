import numpy as np
import pytest

from corpusprof.growth import accumulate
from corpusprof.powerfit import fit_heaps
from corpusprof.synth import (
    SynthSpec,
    gen_exact_powerlaw_corpus,
    gen_exact_powerlaw_points,
    gen_monkey_corpus,
    gen_zipf_corpus,
)


class TestSpecValidation:
    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            SynthSpec(kind="banana")

    def test_unbounded_zipf_needs_exponent_above_one(self):
        with pytest.raises(ValueError):
            SynthSpec(kind="zipf-iid", zipf_exponent=1.0, vocab_bound=None)

    def test_monkey_alphabet_minimum(self):
        with pytest.raises(ValueError):
            SynthSpec(kind="monkey", alphabet_size=1)

    def test_monkey_space_prob_open_interval(self):
        with pytest.raises(ValueError):
            SynthSpec(kind="monkey", space_prob=1.0)

    def test_powerlaw_beta_range(self):
        with pytest.raises(ValueError):
            SynthSpec(kind="exact-powerlaw", beta=1.5)


class TestZipf:
    def test_degenerate_vocabulary(self):
        spec = SynthSpec(kind="zipf-iid", vocab_bound=1, n_docs=3, doc_len=4, seed=1)
        curve = accumulate(gen_zipf_corpus(spec))
        assert curve.stats.vocab == 1 and curve.stats.singletons == 0

    def test_determinism(self):
        spec = SynthSpec(kind="zipf-iid", zipf_exponent=1.7, n_docs=5, doc_len=20, seed=9)
        a = [d.tokens for d in gen_zipf_corpus(spec)]
        b = [d.tokens for d in gen_zipf_corpus(spec)]
        assert a == b

    def test_finite_bound_caps_vocabulary(self):
        spec = SynthSpec(
            kind="zipf-iid", zipf_exponent=1.2, vocab_bound=50, n_docs=100, doc_len=100, seed=2
        )
        assert accumulate(gen_zipf_corpus(spec)).stats.vocab <= 50

    def test_zipf_heaps_exponent_a2(self):
        spec = SynthSpec(kind="zipf-iid", zipf_exponent=2.0, n_docs=1000, doc_len=100, seed=4)
        fit = fit_heaps(accumulate(gen_zipf_corpus(spec)))
        assert abs(fit.beta_hat - 0.5) <= 0.08

    def test_rank_frequency_exponent(self):
        # top-100 empirical rank/frequency slope should match -a
        spec = SynthSpec(kind="zipf-iid", zipf_exponent=2.0, n_docs=10_000, doc_len=100, seed=6)
        from collections import Counter

        freqs = Counter()
        for doc in gen_zipf_corpus(spec):
            freqs.update(doc.tokens)
        top = sorted(freqs.values(), reverse=True)[:100]
        from corpusprof.growth import GrowthCurve

        pts = [(rank, count) for rank, count in enumerate(top, start=1)]
        fit = fit_heaps(GrowthCurve(points=pts, stats=None))
        assert fit.beta_hat == pytest.approx(-2.0, abs=0.1)


class TestMonkey:
    def test_determinism(self):
        spec = SynthSpec(kind="monkey", n_docs=4, doc_len=50, seed=3)
        a = [d.tokens for d in gen_monkey_corpus(spec)]
        b = [d.tokens for d in gen_monkey_corpus(spec)]
        assert a == b

    def test_no_empty_tokens_and_alphabet_respected(self):
        spec = SynthSpec(kind="monkey", alphabet_size=3, space_prob=0.5, n_docs=5, doc_len=200, seed=8)
        for doc in gen_monkey_corpus(spec):
            for token in doc.tokens:
                assert token and set(token) <= set("abc")

    def test_heaps_adherence(self):
        spec = SynthSpec(kind="monkey", alphabet_size=2, space_prob=0.5, n_docs=1000, doc_len=100, seed=5)
        fit = fit_heaps(accumulate(gen_monkey_corpus(spec)))
        assert fit.pearson_r > 0.99


class TestExactPowerlaw:
    def test_exact_points(self):
        spec = SynthSpec(kind="exact-powerlaw", alpha=2, beta=0.5, n_min=100, n_max=1_000_000)
        curve = gen_exact_powerlaw_points(spec, n_points=3)
        assert curve.points == [(100, 20), (10_000, 200), (1_000_000, 2000)]

    def test_fit_recovers_parameters(self):
        spec = SynthSpec(kind="exact-powerlaw", alpha=2, beta=0.5)
        fit = fit_heaps(gen_exact_powerlaw_points(spec))
        assert fit.beta_hat == pytest.approx(0.5, rel=1e-3)
        assert fit.alpha_hat == pytest.approx(2.0, rel=1e-3)

    def test_linear_case(self):
        spec = SynthSpec(kind="exact-powerlaw", alpha=3, beta=1.0, n_min=10, n_max=100_000)
        fit = fit_heaps(gen_exact_powerlaw_points(spec))
        assert fit.beta_hat == pytest.approx(1.0, abs=1e-9)

    def test_corpus_matches_target_curve(self):
        spec = SynthSpec(kind="exact-powerlaw", alpha=2, beta=0.5, n_docs=50, doc_len=100)
        curve = accumulate(gen_exact_powerlaw_corpus(spec))
        for n, v in curve.points:
            assert v == round(2 * n**0.5)

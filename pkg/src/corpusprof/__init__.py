"""Streaming corpus profiler: vocabulary growth curves, power-law fits,
corpus statistics, synthetic oracles, and figure rendering."""

from .corpus_io import CorpusSource, Document, open_corpus, read_curve, write_curve
from .growth import CorpusStats, GrowthCurve, accumulate, singleton_count
from .powerfit import FitError, HeapsFit, fit_heaps, pearson, predict
from .preprocess import Preprocessor, TokenizedDoc, filter_short, normalize_text, tokenize
from .synth import SynthSpec

__version__ = "0.1.0"

__all__ = [
    "CorpusSource",
    "CorpusStats",
    "Document",
    "FitError",
    "GrowthCurve",
    "HeapsFit",
    "Preprocessor",
    "SynthSpec",
    "TokenizedDoc",
    "accumulate",
    "filter_short",
    "fit_heaps",
    "normalize_text",
    "open_corpus",
    "pearson",
    "predict",
    "read_curve",
    "singleton_count",
    "tokenize",
    "write_curve",
]

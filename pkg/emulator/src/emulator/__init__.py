"""Corpus emulation harness: prompt-and-bucket text generation that emits
JSONL consumable by the corpusprof profiler."""

from .backends import StubBackend, load_backend
from .buckets import BucketAssignment, bucketize
from .run import EmulationJob, EmulationResult, build_prompt, emulate

__version__ = "0.1.0"

__all__ = [
    "BucketAssignment",
    "EmulationJob",
    "EmulationResult",
    "StubBackend",
    "bucketize",
    "build_prompt",
    "emulate",
    "load_backend",
]

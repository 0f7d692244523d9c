"""The emulation job: prompt with each document's first five words, generate
up to the document's length-bucket cap, and write profiler-compatible JSONL."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from corpusprof.corpus_io import CorpusSource, open_corpus
from corpusprof.preprocess import Preprocessor, TokenizedDoc

from .backends import BackendError, load_backend
from .buckets import DEFAULT_EDGES, bucketize

PROMPT_WORDS = 5


@dataclass
class EmulationJob:
    source: CorpusSource
    out_path: Path
    model_id: str = "stub"
    bucket_edges: tuple[int, ...] = DEFAULT_EDGES
    prompt_words: int = PROMPT_WORDS
    seed: int = 0
    punct_class: str = "punct+symbols"


@dataclass
class EmulationResult:
    n_input: int
    n_emitted: int
    n_failed: int
    meta_path: Path
    errors_path: Path


def build_prompt(doc: TokenizedDoc, prompt_words: int = PROMPT_WORDS) -> str:
    """First five tokens joined by single spaces (filter guarantees >= 6)."""
    if doc.length < prompt_words:
        raise ValueError(f"document {doc.id} has only {doc.length} tokens")
    return " ".join(doc.tokens[:prompt_words])


def emulate(job: EmulationJob) -> EmulationResult:
    """Run the full emulation: preprocess, bucket, prompt, generate, write.

    Output preserves input ids and order; each emulated text starts with its
    prompt verbatim and its token count never exceeds the bucket cap (the
    cap counts the prompt tokens). Backend failures are logged to the
    errors sidecar and skipped; everything else is fully determined by the
    job seed when using the stub backend.
    """
    pre = Preprocessor(punct_class=job.punct_class, apply_filter=True)
    docs = list(pre.run(open_corpus(job.source)))
    assignments = bucketize([d.length for d in docs], job.bucket_edges)
    backend = load_backend(job.model_id, seed=job.seed)

    errors_path = job.out_path.with_suffix(".errors.log")
    meta_path = job.out_path.with_suffix(".meta.json")
    n_emitted = 0
    n_failed = 0
    with open(job.out_path, "w", encoding="utf-8") as out, open(
        errors_path, "w", encoding="utf-8"
    ) as errlog:
        for idx, (doc, assignment) in enumerate(zip(docs, assignments)):
            prompt = build_prompt(doc, job.prompt_words)
            budget = assignment.cap - job.prompt_words
            try:
                continuation = backend.generate(idx, list(doc.tokens[: job.prompt_words]), budget)
            except BackendError as exc:
                errlog.write(f"{doc.id}\t{exc}\n")
                n_failed += 1
                continue
            text = prompt if not continuation else prompt + " " + " ".join(continuation)
            out.write(json.dumps({"id": doc.id, "text": text}, ensure_ascii=False))
            out.write("\n")
            n_emitted += 1

    meta = {
        "model": job.model_id,
        "backend_settings": backend.settings,
        "bucket_edges": list(job.bucket_edges),
        "prompt_words": job.prompt_words,
        "seed": job.seed,
        "punct_class": job.punct_class,
        "input": str(job.source.location),
        "documents_in": len(docs),
        "documents_out": n_emitted,
        "documents_failed": n_failed,
        "documents_dropped_by_filter": pre.dropped,
    }
    meta_path.write_text(json.dumps(meta, indent=2) + "\n", encoding="utf-8")
    return EmulationResult(
        n_input=len(docs),
        n_emitted=n_emitted,
        n_failed=n_failed,
        meta_path=meta_path,
        errors_path=errors_path,
    )

"""Command-line wrapper: emulate a JSONL corpus into profiler-ready JSONL."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from corpusprof.corpus_io import CorpusSource

from .buckets import DEFAULT_EDGES
from .run import EmulationJob, emulate


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="emulate-corpus",
        description="Prompt a model with each document's first five words and "
        "generate up to its length-bucket cap",
    )
    parser.add_argument("--in", dest="inp", required=True, help="input corpus (JSONL)")
    parser.add_argument("--in-format", choices=("jsonl", "text-lines", "text-dir"), default="jsonl")
    parser.add_argument("--model", default="stub", help='backend id or "stub"')
    parser.add_argument(
        "--buckets",
        default=",".join(str(e) for e in DEFAULT_EDGES),
        help="comma-separated ascending token-length bucket edges",
    )
    parser.add_argument("--prompt-words", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", required=True, help="output JSONL path")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        edges = tuple(int(e) for e in args.buckets.split(","))
        job = EmulationJob(
            source=CorpusSource(args.in_format, Path(args.inp)),
            out_path=Path(args.out),
            model_id=args.model,
            bucket_edges=edges,
            prompt_words=args.prompt_words,
            seed=args.seed,
        )
        result = emulate(job)
    except (OSError, ValueError) as exc:
        print(f"emulate-corpus: error: {exc}", file=sys.stderr)
        return 2
    print(
        f"emulated {result.n_emitted}/{result.n_input} documents "
        f"(seed={args.seed}, model={args.model}, failures={result.n_failed})"
    )
    print(f"wrote {args.out}; sidecars {result.meta_path}, {result.errors_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

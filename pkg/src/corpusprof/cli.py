"""Command-line entry point.

Exit codes: 0 success, 1 usage error, 2 data or precondition error.
Results go to stdout unless --out is given; randomized subcommands print
their seed so every run is reproducible from its own log.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import corpus_io, synth
from .corpus_io import CorpusSource, read_curve, write_curve, write_documents_jsonl
from .experiments import (
    ComparisonRow,
    ComparisonTable,
    ProfileOptions,
    compare,
    profile_corpus,
    shuffle_study,
)
from .powerfit import FitError, fit_heaps
from .report import PlotSpec, render_plot, render_table

USAGE_ERROR = 1
DATA_ERROR = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _emit(data: bytes, out: str | None):
    if out:
        Path(out).write_bytes(data)
    else:
        sys.stdout.write(data.decode("utf-8"))


def _add_corpus_args(p):
    p.add_argument("--in", dest="inp", required=True, help="corpus path")
    p.add_argument("--in-format", choices=corpus_io.FORMATS, default="jsonl")
    p.add_argument("--strict", action="store_true", help="abort on malformed records")
    p.add_argument("--no-filter", action="store_true", help="keep docs of <= 5 tokens")
    p.add_argument(
        "--punct-class", choices=("punct", "punct+symbols"), default="punct+symbols"
    )
    p.add_argument("--max-points", type=int, default=10_000)
    p.add_argument("--skip-first", type=int, default=0, help="drop leading curve points")


def _options(args) -> ProfileOptions:
    return ProfileOptions(
        punct_class=args.punct_class,
        apply_filter=not args.no_filter,
        max_points=args.max_points,
        skip_first=args.skip_first,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="corpusprof", description="Vocabulary-growth corpus profiler")
    # global flags accepted both before and after the subcommand
    parser.add_argument("--format", dest="format_global", choices=("text", "csv", "json"))
    parser.add_argument(
        "--out", dest="out_global", help="write output to this path instead of stdout"
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="format_sub", choices=("text", "csv", "json"))
    common.add_argument("--out", dest="out_sub")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("profile", parents=[common], help="growth curve + power-law fit for one corpus")
    _add_corpus_args(p)
    p.add_argument("--curve-out", help="also write the growth curve to this path")

    p = sub.add_parser("fit", parents=[common], help="fit a saved growth curve (json or csv)")
    p.add_argument("curve", help="curve file")
    p.add_argument("--skip-first", type=int, default=0)

    p = sub.add_parser("synth", parents=[common], help="generate a synthetic corpus as JSONL")
    p.add_argument("--kind", choices=("zipf", "monkey", "powerlaw"), required=True)
    p.add_argument("--a", type=float, default=2.0, help="zipf rank exponent")
    p.add_argument("--vocab-bound", type=int, default=None, help="zipf vocabulary cap")
    p.add_argument("--alphabet-size", type=int, default=26)
    p.add_argument("--space-prob", type=float, default=0.2)
    p.add_argument("--alpha", type=float, default=2.0)
    p.add_argument("--beta", type=float, default=0.5)
    p.add_argument("--n-tokens", type=int, default=100_000)
    p.add_argument("--doc-len", type=int, default=150)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("compare", parents=[common], help="profile several corpora into one table")
    p.add_argument(
        "--corpus",
        action="append",
        required=True,
        metavar="LABEL=PATH",
        help="repeatable; corpora are profiled in the given order",
    )
    p.add_argument("--in-format", choices=corpus_io.FORMATS, default="jsonl")
    p.add_argument("--strict", action="store_true")
    p.add_argument("--no-filter", action="store_true")
    p.add_argument("--punct-class", choices=("punct", "punct+symbols"), default="punct+symbols")
    p.add_argument("--max-points", type=int, default=10_000)
    p.add_argument("--skip-first", type=int, default=0)

    p = sub.add_parser("shuffle-test", parents=[common], help="refit under random document permutations")
    _add_corpus_args(p)
    p.add_argument("--n", type=int, default=20, help="number of shuffles")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("plot", parents=[common], help="render growth curves to SVG")
    p.add_argument("curves", nargs="+", metavar="LABEL=CURVEFILE")
    p.add_argument("--scale", choices=("loglog10", "natural"), default="loglog10")
    p.add_argument("--width", type=int, default=720)
    p.add_argument("--height", type=int, default=480)
    return parser


def _fit_payload(fit, fmt: str) -> bytes:
    if fmt == "json":
        return (json.dumps(fit.to_dict(), indent=2) + "\n").encode()
    if fmt == "csv":
        keys = list(fit.to_dict())
        vals = fit.to_dict()
        return (
            ",".join(keys) + "\n" + ",".join(str(vals[k]) for k in keys) + "\n"
        ).encode()
    return (
        f"beta   = {fit.beta_hat:.4f} ± {fit.beta_ci90:.4f}\n"
        f"alpha  = {fit.alpha_hat:.4f} ± {fit.alpha_ci90:.4f}\n"
        f"r      = {fit.pearson_r:.4f}\n"
        f"points = {fit.n_points}\n"
    ).encode()


def _profile_payload(curve, fit, fmt: str) -> bytes:
    if fmt == "json":
        payload = {"fit": fit.to_dict(), "stats": curve.stats.to_dict()}
        return (json.dumps(payload, indent=2) + "\n").encode()
    table = ComparisonTable(rows=[ComparisonRow(label="corpus", fit=fit, stats=curve.stats)])
    return render_table(table, fmt)


def _parse_labeled(items, what: str) -> list[tuple[str, str]]:
    pairs = []
    for item in items:
        label, sep, path = item.partition("=")
        if not sep or not label or not path:
            raise FitError(f"malformed {what} argument (want LABEL=PATH): {item!r}")
        pairs.append((label, path))
    return pairs


def _run(args) -> int:
    fmt = args.format_sub or args.format_global or "text"
    args.out = args.out_sub or args.out_global
    if args.command == "profile":
        source = CorpusSource(args.in_format, Path(args.inp), strict=args.strict)
        curve, fit = profile_corpus(source, _options(args))
        if args.curve_out:
            suffix = Path(args.curve_out).suffix.lstrip(".") or "json"
            Path(args.curve_out).write_bytes(write_curve(curve, suffix))
        _emit(_profile_payload(curve, fit, fmt), args.out)
        return 0

    if args.command == "fit":
        curve = read_curve(Path(args.curve))
        fit = fit_heaps(curve, skip_first=args.skip_first)
        _emit(_fit_payload(fit, fmt), args.out)
        return 0

    if args.command == "synth":
        kind = {"zipf": "zipf-iid", "monkey": "monkey", "powerlaw": "exact-powerlaw"}[args.kind]
        n_docs = max(1, args.n_tokens // args.doc_len)
        spec = synth.SynthSpec(
            kind=kind,
            n_docs=n_docs,
            doc_len=args.doc_len,
            seed=args.seed,
            zipf_exponent=args.a,
            vocab_bound=args.vocab_bound,
            alphabet_size=args.alphabet_size,
            space_prob=args.space_prob,
            alpha=args.alpha,
            beta=args.beta,
        )
        docs = (
            corpus_io.Document(id=d.id, text=" ".join(d.tokens)) for d in synth.generate(spec)
        )
        if not args.out:
            raise FitError("synth requires --out PATH for the JSONL corpus")
        n = write_documents_jsonl(docs, Path(args.out))
        print(f"wrote {n} documents to {args.out} (seed={args.seed})")
        return 0

    if args.command == "compare":
        sources = [
            (label, CorpusSource(args.in_format, Path(path), strict=args.strict))
            for label, path in _parse_labeled(args.corpus, "--corpus")
        ]
        table = compare(sources, _options(args))
        _emit(render_table(table, fmt), args.out)
        return 0

    if args.command == "shuffle-test":
        source = CorpusSource(args.in_format, Path(args.inp), strict=args.strict)
        rep = shuffle_study(source, args.n, args.seed, _options(args))
        payload = {
            "seed": rep.seed,
            "n_shuffles": rep.n_shuffles,
            "base_fit": rep.base_fit.to_dict(),
            "stats": rep.stats.to_dict(),
            "beta_values": rep.beta_values,
            "alpha_values": rep.alpha_values,
            "beta_spread": rep.beta_spread,
            "alpha_spread": rep.alpha_spread,
        }
        if fmt == "json":
            _emit((json.dumps(payload, indent=2) + "\n").encode(), args.out)
        else:
            lines = [
                f"seed        = {rep.seed}",
                f"n_shuffles  = {rep.n_shuffles}",
                f"base beta   = {rep.base_fit.beta_hat:.4f}",
                f"base alpha  = {rep.base_fit.alpha_hat:.4f}",
                f"beta spread = range {rep.beta_spread['range']:.5f}, "
                f"std {rep.beta_spread['std']:.5f}",
                f"alpha spread= range {rep.alpha_spread['range']:.5f}, "
                f"std {rep.alpha_spread['std']:.5f}",
                "stats invariant across all shuffles: yes",
            ]
            _emit(("\n".join(lines) + "\n").encode(), args.out)
        return 0

    if args.command == "plot":
        curves = [
            (label, read_curve(Path(path)))
            for label, path in _parse_labeled(args.curves, "curve")
        ]
        spec = PlotSpec(curves=curves, scale=args.scale, width=args.width, height=args.height)
        svg = render_plot(spec)
        if args.out:
            Path(args.out).write_bytes(svg)
        else:
            sys.stdout.buffer.write(svg)
        return 0

    raise AssertionError(f"unhandled command {args.command!r}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return _run(args)
    except (FitError, ValueError, OSError, KeyError, AssertionError) as exc:
        print(f"corpusprof: error: {exc}", file=sys.stderr)
        return DATA_ERROR


if __name__ == "__main__":
    sys.exit(main())

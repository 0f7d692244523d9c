"""Corpus ingestion and profiler output serialization.

All file-format concerns live here: documents come in as JSONL, one-per-line
text, or a directory of .txt files; growth curves go out as CSV or JSON.
Reading is lazy so memory stays bounded by the largest single document.
"""

from __future__ import annotations

import csv
import io
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from .growth import CorpusStats, GrowthCurve

logger = logging.getLogger(__name__)

FORMATS = ("jsonl", "text-lines", "text-dir")


class CorpusFormatError(ValueError):
    """Raised for malformed records in strict mode or unusable sources."""


@dataclass(frozen=True)
class Document:
    """One raw text unit; ``text`` is pre-normalization and may be empty."""

    id: str
    text: str


@dataclass
class CorpusSource:
    """Where and how to read a corpus.

    Document order is the stored order and is significant: growth curves
    depend on it. Re-reading the same source yields the same sequence.
    """

    format: str
    location: Path
    strict: bool = False
    skipped: int = field(default=0, init=False)  # malformed records seen on last pass

    def __post_init__(self):
        self.location = Path(self.location)
        if self.format not in FORMATS:
            raise ValueError(f"unknown corpus format: {self.format!r}")


def open_corpus(source: CorpusSource) -> Iterator[Document]:
    """Yield documents lazily in stored order.

    Malformed JSONL records are skipped and counted (``source.skipped``)
    unless ``source.strict`` is set, in which case they abort with a
    :class:`CorpusFormatError` naming the line number.
    """
    if not source.location.exists():
        raise CorpusFormatError(f"corpus location does not exist: {source.location}")
    source.skipped = 0
    if source.format == "jsonl":
        return _read_jsonl(source)
    if source.format == "text-lines":
        return _read_text_lines(source)
    return _read_text_dir(source)


def _read_jsonl(source: CorpusSource) -> Iterator[Document]:
    with open(source.location, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
                if not isinstance(record, dict) or not isinstance(record.get("text"), str):
                    raise ValueError("record must be an object with a string 'text' field")
            except ValueError as exc:
                if source.strict:
                    raise CorpusFormatError(
                        f"{source.location}:{lineno}: malformed record: {exc}"
                    ) from exc
                source.skipped += 1
                logger.warning("%s:%d: skipping malformed record", source.location, lineno)
                continue
            doc_id = record.get("id")
            if doc_id is None:
                doc_id = str(lineno - 1)
            yield Document(id=str(doc_id), text=record["text"])


def _read_text_lines(source: CorpusSource) -> Iterator[Document]:
    with open(source.location, encoding="utf-8") as fh:
        for ordinal, line in enumerate(fh):
            yield Document(id=str(ordinal), text=line.rstrip("\n"))


def _read_text_dir(source: CorpusSource) -> Iterator[Document]:
    paths = sorted(p for p in source.location.iterdir() if p.suffix == ".txt")
    for path in paths:
        yield Document(id=path.stem, text=path.read_text(encoding="utf-8"))


def write_documents_jsonl(docs, path: Path) -> int:
    """Write documents as JSONL compatible with :func:`open_corpus`."""
    n = 0
    with open(path, "w", encoding="utf-8") as fh:
        for doc in docs:
            fh.write(json.dumps({"id": doc.id, "text": doc.text}, ensure_ascii=False))
            fh.write("\n")
            n += 1
    return n


def curve_to_csv(curve: GrowthCurve) -> str:
    """Render a growth curve as ``N,V`` rows under a header."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["N", "V"])
    for n, v in curve.points:
        writer.writerow([n, v])
    return buf.getvalue()


def curve_from_csv(text: str) -> GrowthCurve:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header != ["N", "V"]:
        raise CorpusFormatError(f"expected 'N,V' header, got {header!r}")
    points = [(int(row[0]), int(row[1])) for row in reader if row]
    return GrowthCurve(points=points, stats=None)


def curve_to_json(curve: GrowthCurve) -> str:
    payload = {
        "points": [[n, v] for n, v in curve.points],
        "stats": None if curve.stats is None else curve.stats.to_dict(),
    }
    return json.dumps(payload, indent=2)


def curve_from_json(text: str) -> GrowthCurve:
    payload = json.loads(text)
    points = [(int(n), int(v)) for n, v in payload["points"]]
    stats = payload.get("stats")
    return GrowthCurve(
        points=points,
        stats=None if stats is None else CorpusStats.from_dict(stats),
    )


def write_curve(curve: GrowthCurve, fmt: str) -> bytes:
    """Serialize a curve; parsing the result reconstructs it exactly."""
    if fmt == "csv":
        return curve_to_csv(curve).encode("utf-8")
    if fmt == "json":
        return curve_to_json(curve).encode("utf-8")
    raise ValueError(f"unknown curve format: {fmt!r}")


def read_curve(path: Path) -> GrowthCurve:
    """Load a curve from a .json or .csv file, sniffing by content."""
    text = Path(path).read_text(encoding="utf-8")
    if text.lstrip().startswith("{"):
        return curve_from_json(text)
    return curve_from_csv(text)

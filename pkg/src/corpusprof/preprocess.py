"""Text normalization, tokenization, and the short-document filter.

The pipeline is: canonical Unicode normalization (NFC), case folding,
punctuation-to-space replacement, whitespace tokenization, then dropping
any document of five or fewer tokens. Every step is a pure function.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional

MIN_TOKENS = 6  # documents with five or fewer tokens are dropped

# Unicode general-category prefixes treated as punctuation. The wider class
# also strips symbols (math signs, currency) so scientific text like
# "p<0.05" splits cleanly.
PUNCT_CLASSES = {
    "punct": ("P",),
    "punct+symbols": ("P", "S"),
}


@dataclass(frozen=True)
class TokenizedDoc:
    id: str
    tokens: tuple[str, ...]

    @property
    def length(self) -> int:
        """Token count with multiplicity (n_i)."""
        return len(self.tokens)


@lru_cache(maxsize=None)
def _is_removable(char: str, prefixes: tuple[str, ...]) -> bool:
    return unicodedata.category(char).startswith(prefixes)


def normalize_text(raw: str, punct_class: str = "punct+symbols") -> str:
    """Canonicalize, casefold, and blank out punctuation.

    Punctuation characters become single spaces rather than vanishing, so
    hyphenated or slashed compounds split instead of fusing. Idempotent.
    """
    prefixes = PUNCT_CLASSES[punct_class]
    text = unicodedata.normalize("NFC", raw).casefold()
    text = "".join(" " if _is_removable(c, prefixes) else c for c in text)
    # casefold can surface new composable sequences; re-normalize for idempotence
    return unicodedata.normalize("NFC", text)


def tokenize(normalized: str) -> list[str]:
    """Split on whitespace runs; never yields empty tokens."""
    return normalized.split()


def filter_short(doc: TokenizedDoc) -> Optional[TokenizedDoc]:
    """Keep the document iff it has at least six tokens."""
    return doc if doc.length >= MIN_TOKENS else None


class Preprocessor:
    """Configured pipeline from raw documents to surviving token sequences."""

    def __init__(self, punct_class: str = "punct+symbols", apply_filter: bool = True):
        if punct_class not in PUNCT_CLASSES:
            raise ValueError(f"unknown punctuation class: {punct_class!r}")
        self.punct_class = punct_class
        self.apply_filter = apply_filter
        self.dropped = 0

    def tokenize_doc(self, doc_id: str, raw: str) -> TokenizedDoc:
        return TokenizedDoc(
            id=doc_id,
            tokens=tuple(tokenize(normalize_text(raw, self.punct_class))),
        )

    def run(self, docs: Iterable) -> Iterator[TokenizedDoc]:
        """Tokenize a Document stream, dropping short docs and counting them."""
        self.dropped = 0
        for doc in docs:
            tokenized = self.tokenize_doc(doc.id, doc.text)
            if self.apply_filter and filter_short(tokenized) is None:
                self.dropped += 1
                continue
            yield tokenized

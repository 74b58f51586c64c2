"""Word-level trainable vocabulary with fixed reserved ids.

A run builds its vocabulary once, over the union of every corpus the regimen
names, before stage one. Tokens that only occur in later-stage data therefore
exist from the start; their embeddings simply stay untrained until some stage
actually visits them.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .types import DataError, NERExample, QAExample, QCLSExample, TextCorpus

PAD, UNK, CLS, SEP, MASK = "[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]"
RESERVED = (PAD, UNK, CLS, SEP, MASK)
PAD_ID, UNK_ID, CLS_ID, SEP_ID, MASK_ID = range(5)


@dataclass
class Vocabulary:
    tokens: list[str]
    _index: dict[str, int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if tuple(self.tokens[:5]) != RESERVED:
            raise DataError("vocabulary must start with the five reserved tokens")
        self._index = {tok: i for i, tok in enumerate(self.tokens)}
        if len(self._index) != len(self.tokens):
            raise DataError("vocabulary tokens must be unique")

    @property
    def size(self) -> int:
        return len(self.tokens)

    def lookup(self, token: str) -> int:
        return self._index.get(token, UNK_ID)

    def __contains__(self, token: str) -> bool:
        return token in self._index

    def to_json(self) -> dict:
        return {"tokens": self.tokens}

    @classmethod
    def from_json(cls, payload: dict) -> "Vocabulary":
        return cls(tokens=list(payload["tokens"]))


def iter_source_text(source) -> list[str]:
    """Raw text fields of a corpus or task dataset, for frequency counting."""
    if isinstance(source, TextCorpus):
        return list(source.documents)
    if isinstance(source, list):
        out: list[str] = []
        for item in source:
            out.extend(iter_source_text(item))
        return out
    if isinstance(source, QAExample):
        return [source.question, source.context]
    if isinstance(source, NERExample):
        return [" ".join(source.tokens)]
    if isinstance(source, QCLSExample):
        return [source.question]
    if isinstance(source, str):
        return [source]
    raise DataError(f"unsupported vocabulary source: {type(source).__name__}")


def build_vocabulary(sources: list, max_size: int) -> Vocabulary:
    """Count surface tokens over all sources and keep the most frequent.

    Ties break lexicographically. ``max_size`` includes the five reserved ids,
    so it must be at least 6 to admit any real token.
    """
    from .tokenizer import split_with_offsets

    if max_size < 6:
        raise DataError(f"max_size must be >= 6, got {max_size}")
    counts: Counter[str] = Counter()
    for text in iter_source_text(sources):
        for surface, _, _ in split_with_offsets(text):
            counts[surface] += 1
    if not counts:
        raise DataError("vocabulary sources contain no tokens")
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    kept = [tok for tok, _ in ranked[: max_size - 5]]
    return Vocabulary(tokens=list(RESERVED) + kept)


def top_k_tokens(corpus: TextCorpus, k: int) -> list[str]:
    """K most frequent token types of a corpus, ties lexicographic."""
    from .tokenizer import split_with_offsets

    counts: Counter[str] = Counter()
    for doc in corpus.documents:
        for surface, _, _ in split_with_offsets(doc):
            counts[surface] += 1
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return [tok for tok, _ in ranked[:k]]


def vocabulary_overlap(a: TextCorpus, b: TextCorpus, k: int) -> float:
    """|topK(a) ∩ topK(b)| / K. Corpora with fewer than K types use all types."""
    if not a.documents or not b.documents:
        raise DataError("vocabulary_overlap requires two non-empty corpora")
    if k < 1:
        raise DataError(f"K must be >= 1, got {k}")
    return len(set(top_k_tokens(a, k)) & set(top_k_tokens(b, k))) / k

"""Deterministic word-level tokenization with character-offset tracking.

Rule: lowercase for lookup, split on Unicode whitespace, then split leading and
trailing ASCII punctuation off each chunk as single-character tokens. Offsets
always refer to the original (un-lowercased) text.
"""

from __future__ import annotations

import re
import string

from .types import QAExample
from .vocab import Vocabulary

_CHUNK = re.compile(r"\S+")
_ASCII_PUNCT = set(string.punctuation)


def split_with_offsets(text: str) -> list[tuple[str, int, int]]:
    """Split ``text`` into (lowercased surface, char_start, char_end) triples."""
    out: list[tuple[str, int, int]] = []
    for m in _CHUNK.finditer(text):
        start, end = m.start(), m.end()
        # Peel leading punctuation, then trailing, one character at a time.
        while start < end and text[start] in _ASCII_PUNCT:
            out.append((text[start], start, start + 1))
            start += 1
        tail: list[tuple[str, int, int]] = []
        while end > start and text[end - 1] in _ASCII_PUNCT:
            tail.append((text[end - 1], end - 1, end))
            end -= 1
        if start < end:
            out.append((text[start:end].lower(), start, end))
        out.extend(reversed(tail))
    return out


def tokenize_with_offsets(
    text: str, vocab: Vocabulary
) -> tuple[list[int], list[tuple[int, int]]]:
    """Tokenize ``text`` into vocab ids plus per-token character spans.

    Unknown surfaces map to the [UNK] id but keep their true offsets, so span
    predictions can still be decoded from the original text.
    """
    ids: list[int] = []
    offsets: list[tuple[int, int]] = []
    for surface, start, end in split_with_offsets(text):
        ids.append(vocab.lookup(surface))
        offsets.append((start, end))
    return ids, offsets


def align_answer_span(
    example: QAExample,
    offsets: list[tuple[int, int]],
    answer_index: int = 0,
    max_context_tokens: int | None = None,
) -> tuple[int, int] | None:
    """Map a character-anchored answer to the smallest covering token range.

    ``offsets`` must come from tokenizing ``example.context``. Returns None when
    the answer falls outside the tokenized (or truncated) region; callers drop
    and count such training examples instead of failing.
    """
    text, char_start = example.answers[answer_index]
    # Trim edge whitespace so the covering range is anchored on real characters.
    stripped = text.strip()
    if not stripped or not offsets:
        return None
    char_start += text.index(stripped)
    char_end = char_start + len(stripped)

    start_tok = None
    end_tok = None
    for i, (s, e) in enumerate(offsets):
        if start_tok is None and e > char_start:
            start_tok = i
        if s < char_end:
            end_tok = i
    if start_tok is None or end_tok is None or end_tok < start_tok:
        return None
    if offsets[start_tok][0] > char_start or offsets[end_tok][1] < char_end:
        return None  # answer lies in an untokenizable region
    if max_context_tokens is not None and end_tok >= max_context_tokens:
        return None  # truncated away
    return start_tok, end_tok

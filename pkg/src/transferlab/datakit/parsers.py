"""Readers and writers for the four task-data formats.

Every reader has a matching writer so datasets round-trip structurally; the
generator leans on that to emit files the rest of the pipeline can re-parse.
"""

from __future__ import annotations

import json

from .types import DataError, NERExample, QAExample, QCLSExample, TextCorpus


class ParseError(DataError):
    """Malformed file; message carries a byte offset or line number."""


class ValidationReport(DataError):
    """Per-example validation failures collected across a whole file."""

    def __init__(self, failures: list[str]):
        self.failures = failures
        super().__init__("; ".join(failures))


def parse_squad_json(data: bytes) -> list[QAExample]:
    """Parse the nested extractive-QA JSON layout (data → paragraphs → qas).

    Examples whose answer text does not match the context at the stated offset
    are collected into one ValidationReport naming each offending id; the file
    is never abandoned at the first bad example.
    """
    try:
        doc = json.loads(data.decode("utf-8"))
    except json.JSONDecodeError as exc:
        # exc.pos is a character offset; re-encode the prefix for a byte offset.
        prefix = data.decode("utf-8", errors="replace")[: exc.pos]
        raise ParseError(
            f"malformed JSON at byte {len(prefix.encode('utf-8'))}: {exc.msg}"
        ) from exc

    examples: list[QAExample] = []
    failures: list[str] = []
    for article in doc.get("data", []):
        for para in article.get("paragraphs", []):
            context = para["context"]
            for qa in para.get("qas", []):
                example = QAExample(
                    id=str(qa["id"]),
                    context=context,
                    question=qa["question"],
                    answers=[
                        (ans["text"], int(ans["answer_start"]))
                        for ans in qa.get("answers", [])
                    ],
                )
                try:
                    example.validate()
                except DataError as exc:
                    failures.append(str(exc))
                    continue
                examples.append(example)
    if failures:
        raise ValidationReport(failures)
    return examples


def write_squad_json(examples: list[QAExample], title: str = "dataset") -> bytes:
    paragraphs = [
        {
            "context": ex.context,
            "qas": [
                {
                    "id": ex.id,
                    "question": ex.question,
                    "answers": [
                        {"text": text, "answer_start": start}
                        for text, start in ex.answers
                    ],
                }
            ],
        }
        for ex in examples
    ]
    doc = {"version": "1.1", "data": [{"title": title, "paragraphs": paragraphs}]}
    return json.dumps(doc, ensure_ascii=False, indent=1).encode("utf-8")


def repair_bio(tags: list[str]) -> tuple[list[str], int]:
    """Rewrite I-X tags that start a span (after O or a different type) to B-X."""
    repaired = list(tags)
    repairs = 0
    prev_type: str | None = None
    for i, tag in enumerate(repaired):
        if tag.startswith("I-"):
            tag_type = tag[2:]
            if prev_type != tag_type:
                repaired[i] = "B-" + tag_type
                repairs += 1
            prev_type = tag_type
        elif tag.startswith("B-"):
            prev_type = tag[2:]
        else:
            prev_type = None
    return repaired, repairs


def parse_conll_ner(data: bytes) -> tuple[list[NERExample], int]:
    """Parse token/tag lines into sentences, repairing BIO violations.

    Returns (examples, repair_count). Blank lines separate sentences and
    ``-DOCSTART-`` lines are ignored.
    """
    examples: list[NERExample] = []
    tokens: list[str] = []
    tags: list[str] = []

    def flush() -> None:
        nonlocal tokens, tags
        if tokens:
            examples.append(NERExample(tokens=tokens, tags=tags))
            tokens, tags = [], []

    for lineno, line in enumerate(data.decode("utf-8").splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            flush()
            continue
        if stripped.startswith("-DOCSTART-"):
            continue
        fields = stripped.split("\t") if "\t" in stripped else stripped.split()
        if len(fields) != 2:
            raise ParseError(
                f"line {lineno}: expected 'token tag', got {len(fields)} fields"
            )
        tokens.append(fields[0])
        tags.append(fields[1])
    flush()

    total_repairs = 0
    for ex in examples:
        ex.tags, repairs = repair_bio(ex.tags)
        total_repairs += repairs
        ex.validate()
    return examples, total_repairs


def write_conll_ner(examples: list[NERExample]) -> bytes:
    blocks = [
        "\n".join(f"{tok}\t{tag}" for tok, tag in zip(ex.tokens, ex.tags))
        for ex in examples
    ]
    return ("\n\n".join(blocks) + ("\n" if blocks else "")).encode("utf-8")


def parse_qcls_tsv(data: bytes) -> tuple[list[QCLSExample], list[str]]:
    """Parse question<TAB>label lines; returns examples plus sorted label inventory."""
    examples: list[QCLSExample] = []
    for lineno, line in enumerate(data.decode("utf-8").splitlines(), start=1):
        if not line.strip():
            continue
        if line.count("\t") != 1:
            raise ParseError(
                f"line {lineno}: expected exactly one tab, got {line.count(chr(9))}"
            )
        question, label = line.split("\t")
        examples.append(QCLSExample(question=question, label=label))
    inventory = sorted({ex.label for ex in examples})
    return examples, inventory


def write_qcls_tsv(examples: list[QCLSExample]) -> bytes:
    return (
        "".join(f"{ex.question}\t{ex.label}\n" for ex in examples).encode("utf-8")
    )


def parse_text_corpus(data: bytes, name: str = "") -> TextCorpus:
    """One document per non-empty line."""
    docs = [line for line in data.decode("utf-8").splitlines() if line.strip()]
    corpus = TextCorpus(documents=docs, name=name)
    corpus.validate()
    return corpus


def write_text_corpus(corpus: TextCorpus) -> bytes:
    return ("\n".join(corpus.documents) + "\n").encode("utf-8")

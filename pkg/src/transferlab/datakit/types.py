"""Core task-data records shared by parsers, featurization and the generator."""

from __future__ import annotations

from dataclasses import dataclass, field


class DataError(ValueError):
    """Raised for malformed input files or invalid dataset records."""


@dataclass
class QAExample:
    """Extractive QA instance: answers are character-anchored context spans."""

    id: str
    context: str
    question: str
    answers: list[tuple[str, int]]  # (text, char_start)

    def validate(self) -> None:
        for text, start in self.answers:
            if start < 0 or self.context[start : start + len(text)] != text:
                raise DataError(
                    f"qa example {self.id!r}: answer {text!r} does not match "
                    f"context at offset {start}"
                )


@dataclass
class NERExample:
    tokens: list[str]
    tags: list[str]

    def validate(self) -> None:
        if not self.tokens or len(self.tokens) != len(self.tags):
            raise DataError(
                f"ner example: {len(self.tokens)} tokens vs {len(self.tags)} tags"
            )
        for tag in self.tags:
            if tag != "O" and not (tag.startswith("B-") or tag.startswith("I-")):
                raise DataError(f"ner example: bad tag {tag!r}")


@dataclass
class QCLSExample:
    question: str
    label: str


@dataclass
class TextCorpus:
    documents: list[str]
    name: str = ""

    def validate(self) -> None:
        if any(not doc.strip() for doc in self.documents):
            raise DataError(f"corpus {self.name!r} contains an empty document")


@dataclass
class TokenizedFeature:
    """One packed model input: [CLS] question [SEP] context [SEP], tail-padded.

    ``char_offsets`` maps each kept context token back to its character span in
    the original context, so span predictions can be decoded to text.
    Label fields are task-specific; unused ones stay at their defaults.
    """

    example_id: str
    input_ids: list[int]
    question_span: tuple[int, int]  # token index range [start, end), may be empty
    context_span: tuple[int, int]
    char_offsets: list[tuple[int, int]]  # per context token
    answer_span: tuple[int, int] | None = None  # (start_tok, end_tok), inclusive
    tag_ids: list[int] | None = None  # token classification, -1 = ignore
    class_id: int | None = None
    mlm_labels: list[int] | None = None  # -1 = ignore


@dataclass
class SyntheticDomainSpec:
    """Knobs for one generated domain bundle.

    ``generic_overlap`` is the fraction of the domain's content-word types that
    also appear in the generic vocabulary; ``entity_answer_correlation`` is the
    probability that a QA answer is an entity mention rather than an arbitrary
    filler span.
    """

    domain_vocab_size: int = 240
    generic_overlap: float = 0.1
    entity_types: list[str] = field(default_factory=lambda: ["species", "compound"])
    entity_answer_correlation: float = 1.0
    n_train_ner: int = 800
    n_train_qa: int = 800
    n_dev_qa: int = 600
    n_qcls: int = 400
    template_count: int = 4
    seed: int = 1234

    def validate(self) -> None:
        counts = {
            "domain_vocab_size": self.domain_vocab_size,
            "n_train_ner": self.n_train_ner,
            "n_train_qa": self.n_train_qa,
            "n_dev_qa": self.n_dev_qa,
            "n_qcls": self.n_qcls,
            "template_count": self.template_count,
        }
        for name, value in counts.items():
            if not isinstance(value, int) or value <= 0:
                raise DataError(f"{name} must be a positive integer, got {value!r}")
        for name, value in (
            ("generic_overlap", self.generic_overlap),
            ("entity_answer_correlation", self.entity_answer_correlation),
        ):
            if not 0.0 <= value <= 1.0:
                raise DataError(f"{name} must lie in [0, 1], got {value!r}")
        if len(self.entity_types) < 1:
            raise DataError("entity_types must be non-empty")
        if len(set(self.entity_types)) != len(self.entity_types):
            raise DataError("entity_types must be unique")

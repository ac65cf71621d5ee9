"""Input validation helpers shared across the package."""

from __future__ import annotations

from .corpus import Document


def check_document(document) -> Document:
    """Ensure ``document`` is a :class:`Document` with well-formed indices."""
    if not isinstance(document, Document):
        raise TypeError(f"expected a Document, got {type(document).__name__}")
    for position, sentence in enumerate(document.sentences):
        if sentence.index != position:
            raise ValueError(
                f"document {document.id!r}: sentence at position {position} "
                f"has index {sentence.index}")
    return document


def check_documents(documents) -> list[Document]:
    return [check_document(d) for d in documents]


def check_budget(budget) -> int:
    """Ensure a word budget is a non-negative integer."""
    if isinstance(budget, bool) or not isinstance(budget, int):
        raise TypeError(f"budget must be an int, got {type(budget).__name__}")
    if budget < 0:
        raise ValueError(f"budget must be non-negative, got {budget}")
    return budget


def check_unit_interval(value: float, name: str) -> float:
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {value}")
    return float(value)


def check_positive(value: float, name: str) -> float:
    if value <= 0:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def check_non_negative(value: float, name: str) -> float:
    if value < 0:
        raise ValueError(f"{name} must be non-negative, got {value}")
    return value

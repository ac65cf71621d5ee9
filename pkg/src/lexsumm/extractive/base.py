"""Ranker base class, ranked lists, and budgeted summary assembly.

Every ranker is a scikit-learn style estimator: construction stores
hyperparameters verbatim, :meth:`SentenceRanker.fit` learns corpus term
statistics into ``stats_``, and :meth:`SentenceRanker.rank` scores the
sentences of one document.  :func:`assemble_summary` turns a ranked list
into a summary under a word budget.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import ClassVar

from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError

from ..corpus import Document, default_stopwords
from ..lexmetrics import TermStats, build_term_stats
from ..validation import check_budget, check_document


@dataclass
class RankedList:
    """Sentence indices with scores, ordered best-first.

    Scores are non-increasing; ties are broken by ascending sentence index.
    For selection-order rankers the score is a rank (higher means selected
    earlier), so ordering stays meaningful even without a natural scale.
    """

    items: list[tuple[int, float]]

    @classmethod
    def from_scores(cls, scores) -> RankedList:
        """Rank all sentences by descending score, ties to lower index."""
        order = sorted(range(len(scores)), key=lambda i: (-scores[i], i))
        return cls([(i, float(scores[i])) for i in order])

    @classmethod
    def from_selection(cls, indices) -> RankedList:
        """Rank an ordered selection; scores count down from len(indices)."""
        total = len(indices)
        return cls([(index, float(total - position))
                    for position, index in enumerate(indices)])

    @property
    def indices(self) -> list[int]:
        return [index for index, _ in self.items]

    @property
    def scores(self) -> list[float]:
        return [score for _, score in self.items]

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)


@dataclass
class ExtractiveSummary:
    """Selected sentences in document order plus their joined text."""

    sentence_indices: list[int]
    text: str
    words: int


def assemble_summary(document: Document, ranked: RankedList, budget: int) -> ExtractiveSummary:
    """Assemble a summary by walking ``ranked`` under a word budget.

    Sentences are taken best-first while the running raw word total stays
    within ``budget``; the walk stops at the first sentence that would
    overflow (no skipping ahead to shorter ones).  The selection is emitted
    in document order.
    """
    check_budget(budget)
    selected: list[int] = []
    total = 0
    for index, _ in ranked:
        words = document.sentences[index].words
        if total + words > budget:
            break
        selected.append(index)
        total += words
    selected.sort()
    text = " ".join(document.sentences[i].raw for i in selected)
    return ExtractiveSummary(sentence_indices=selected, text=text, words=total)


class SentenceRanker(BaseEstimator, ABC):
    """Base class for sentence rankers.

    Subclasses implement :meth:`_rank` over one document.  Rankers that
    score sentences against corpus-level term statistics declare
    ``needs_corpus_stats = True`` (the default) and must be fitted first;
    purely document-local rankers work unfitted.
    """

    needs_corpus_stats: ClassVar[bool] = True

    def fit(self, documents, y=None):
        """Learn corpus term statistics from an iterable of documents."""
        self.stats_ = build_term_stats(check_documents_or_tokens(documents))
        return self

    def rank(self, document: Document, budget: int | None = None) -> RankedList:
        """Rank the sentences of one document, best first.

        ``budget`` only matters to greedy rankers, which stop selecting
        once the next pick could not fit; others rank every sentence.
        """
        check_document(document)
        if budget is not None:
            check_budget(budget)
        if self.needs_corpus_stats:
            self._check_fitted()
        return self._rank(document, budget)

    def summarize(self, document: Document, budget: int) -> ExtractiveSummary:
        """Rank then assemble under ``budget``."""
        return assemble_summary(document, self.rank(document, budget), budget)

    @abstractmethod
    def _rank(self, document: Document, budget: int | None) -> RankedList:
        ...

    # -- helpers for subclasses ------------------------------------------

    def _check_fitted(self) -> None:
        if getattr(self, "stats_", None) is None:
            raise NotFittedError(
                f"{type(self).__name__} must be fitted on a corpus before ranking")

    def _corpus_stats(self) -> TermStats:
        self._check_fitted()
        return self.stats_

    def _stopwords(self) -> frozenset[str]:
        return self.stopwords if self.stopwords is not None else default_stopwords()


def check_documents_or_tokens(documents) -> list:
    """Accept Document instances or bare token lists for fitting."""
    items = list(documents)
    for item in items:
        if not isinstance(item, Document) and not isinstance(item, (list, tuple)):
            raise TypeError(
                f"fit expects Documents or token lists, got {type(item).__name__}")
    return items

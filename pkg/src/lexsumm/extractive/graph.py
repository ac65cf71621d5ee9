"""Rankers built on the sentence similarity graph or matrix: LexRank,
degree-centrality reduction, and latent semantic analysis."""

from __future__ import annotations

import numpy as np

from ..corpus import Document
from ..lexmetrics import cosine, tfidf_vector
from ..validation import check_positive, check_unit_interval
from .base import RankedList, SentenceRanker


def _sentence_vectors(document, stats, stopwords):
    return [tfidf_vector(s.tokens, stats, stopwords) for s in document.sentences]


def _pairwise_cosines(vectors) -> np.ndarray:
    n = len(vectors)
    sims = np.zeros((n, n))
    for i in range(n):
        for j in range(i, n):
            value = cosine(vectors[i], vectors[j])
            sims[i, j] = value
            sims[j, i] = value
    return sims


class LexRank(SentenceRanker):
    """Stationary distribution of a random walk over similar sentences.

    Sentences are nodes; an edge joins every pair whose TF-IDF cosine
    reaches ``threshold`` (a non-degenerate sentence is always similar to
    itself, so self-loops arise naturally).  The walk follows edges with
    probability ``damping`` and teleports uniformly otherwise; sentences
    with no edges at all teleport from everywhere.  Scores are the
    stationary probabilities and sum to one.
    """

    def __init__(self, threshold: float = 0.1, damping: float = 0.85,
                 tol: float = 1e-6, max_iter: int = 200,
                 stopwords: frozenset[str] | None = None):
        self.threshold = threshold
        self.damping = damping
        self.tol = tol
        self.max_iter = max_iter
        self.stopwords = stopwords

    def transition_matrix(self, document: Document) -> np.ndarray:
        """The row-stochastic walk matrix for one document."""
        check_unit_interval(self.damping, "damping")
        vectors = _sentence_vectors(document, self._corpus_stats(), self._stopwords())
        n = len(vectors)
        adjacency = (_pairwise_cosines(vectors) >= self.threshold).astype(float)
        row_sums = adjacency.sum(axis=1)
        transitions = np.full((n, n), 1.0 / n)
        linked = row_sums > 0
        transitions[linked] = adjacency[linked] / row_sums[linked, None]
        return self.damping * transitions + (1.0 - self.damping) / n

    def _rank(self, document: Document, budget: int | None) -> RankedList:
        n = len(document)
        if n == 0:
            return RankedList([])
        matrix = self.transition_matrix(document)
        distribution = np.full(n, 1.0 / n)
        for _ in range(self.max_iter):
            updated = distribution @ matrix
            done = float(np.abs(updated - distribution).sum()) < self.tol
            distribution = updated
            if done:
                break
        distribution = distribution / distribution.sum()
        return RankedList.from_scores(distribution.tolist())


class Reduction(SentenceRanker):
    """Degree centrality: a sentence scores its summed similarity to the rest."""

    def __init__(self, stopwords: frozenset[str] | None = None):
        self.stopwords = stopwords

    def _rank(self, document: Document, budget: int | None) -> RankedList:
        vectors = _sentence_vectors(document, self._corpus_stats(), self._stopwords())
        sims = _pairwise_cosines(vectors)
        np.fill_diagonal(sims, 0.0)
        return RankedList.from_scores(sims.sum(axis=1).tolist())


class LSA(SentenceRanker):
    """Topic-driven selection over the term-by-sentence count matrix.

    The matrix of non-stopword term frequencies is decomposed by SVD.
    Topics are visited in descending singular-value order and each topic
    contributes the not-yet-ranked sentence with the largest absolute
    component in its right singular vector; after ``k`` topics (default:
    every non-degenerate one), leftover sentences follow by their largest
    squared singular-scaled projection.  Scores are selection ranks.
    """

    def __init__(self, k: int | None = None,
                 stopwords: frozenset[str] | None = None):
        self.k = k
        self.stopwords = stopwords

    def _rank(self, document: Document, budget: int | None) -> RankedList:
        n = len(document)
        if n == 0:
            raise ValueError(f"document {document.id!r} has no sentences")
        if self.k is not None:
            check_positive(self.k, "k")
        stopwords = self._stopwords()
        vocabulary = sorted({token for s in document.sentences
                             for token in s.tokens if token not in stopwords})
        if not vocabulary:
            return RankedList([(i, 0.0) for i in range(n)])
        term_index = {term: row for row, term in enumerate(vocabulary)}
        matrix = np.zeros((len(vocabulary), n))
        for j, sentence in enumerate(document.sentences):
            for token in sentence.tokens:
                row = term_index.get(token)
                if row is not None:
                    matrix[row, j] += 1.0

        _, singular, vt = np.linalg.svd(matrix, full_matrices=False)
        effective = int(np.sum(singular > singular[0] * 1e-12)) if singular.size else 0
        topics = effective if self.k is None else min(self.k, effective)

        order: list[int] = []
        taken = np.zeros(n, dtype=bool)
        for t in range(topics):
            component = np.abs(vt[t])
            component[taken] = -1.0
            best = int(np.argmax(component))
            order.append(best)
            taken[best] = True
        if not np.all(taken):
            projections = (singular[:effective, None] * vt[:effective]) ** 2
            leftovers = projections.max(axis=0) if effective else np.zeros(n)
            rest = sorted((j for j in range(n) if not taken[j]),
                          key=lambda j: (-leftovers[j], j))
            order.extend(rest)
        return RankedList.from_selection(order)

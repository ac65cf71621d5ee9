"""Greedy selection rankers: maximal marginal relevance and data
reconstruction.  Both honor the word budget during selection, stopping as
soon as their next pick could not fit, which keeps selection and assembly
consistent."""

from __future__ import annotations

import numpy as np

from ..corpus import Document
from ..lexmetrics import cosine, tfidf_vector
from ..validation import check_non_negative, check_unit_interval
from .base import RankedList, SentenceRanker


class MaximalMarginalRelevance(SentenceRanker):
    """Relevance-versus-redundancy greedy selection.

    Each step picks the unselected sentence maximizing

        relevance_weight * cos(sentence, document)
            - (1 - relevance_weight) * max cos(sentence, already selected)

    over TF-IDF vectors, with a redundancy term of zero on the first pick
    and ties going to the lower index.  ``paper_sign=True`` flips the
    redundancy term to ``+``, rewarding similarity to the running summary
    instead of penalizing it; under that variant the recorded objective
    scores need not decrease along the selection, so the selection order
    stays authoritative.
    """

    def __init__(self, relevance_weight: float = 0.5, paper_sign: bool = False,
                 stopwords: frozenset[str] | None = None):
        self.relevance_weight = relevance_weight
        self.paper_sign = paper_sign
        self.stopwords = stopwords

    def _rank(self, document: Document, budget: int | None) -> RankedList:
        check_unit_interval(self.relevance_weight, "relevance_weight")
        stats = self._corpus_stats()
        stopwords = self._stopwords()
        vectors = [tfidf_vector(s.tokens, stats, stopwords)
                   for s in document.sentences]
        document_vector = tfidf_vector(document.all_tokens(), stats, stopwords)
        relevance = [cosine(v, document_vector) for v in vectors]

        n = len(vectors)
        lam = self.relevance_weight
        sign = 1.0 if self.paper_sign else -1.0
        redundancy = [0.0] * n
        remaining = list(range(n))
        picked: list[tuple[int, float]] = []
        used_words = 0
        while remaining:
            best_index = None
            best_value = -np.inf
            for i in remaining:
                value = lam * relevance[i] + sign * (1.0 - lam) * redundancy[i]
                if value > best_value:
                    best_value = value
                    best_index = i
            words = document.sentences[best_index].words
            if budget is not None and used_words + words > budget:
                break
            picked.append((best_index, float(best_value)))
            used_words += words
            remaining.remove(best_index)
            for i in remaining:
                redundancy[i] = max(redundancy[i],
                                    cosine(vectors[i], vectors[best_index]))
        return RankedList(picked)


class DSDR(SentenceRanker):
    """Greedy data reconstruction with a ridge penalty.

    Sentences are dense TF-IDF vectors over the document vocabulary.  Each
    step adds the candidate that, joined to the current basis, minimizes
    the total ridge-regularized reconstruction error of every sentence:

        sum_i  min_a ||v_i - X^T a||^2 + ridge * ||a||^2

    Ties go to the lower index, and scores are selection ranks (higher
    means picked earlier).  Each step re-solves the normal equations per
    candidate, so ranking a whole long document without a budget is
    quadratic in its sentence count times the basis solve.
    """

    def __init__(self, ridge: float = 0.1,
                 stopwords: frozenset[str] | None = None):
        self.ridge = ridge
        self.stopwords = stopwords

    def _rank(self, document: Document, budget: int | None) -> RankedList:
        check_non_negative(self.ridge, "ridge")
        stats = self._corpus_stats()
        stopwords = self._stopwords()
        vocabulary = sorted({token for s in document.sentences
                             for token in s.tokens if token not in stopwords})
        n = len(document)
        matrix = np.zeros((n, max(len(vocabulary), 1)))
        term_column = {term: col for col, term in enumerate(vocabulary)}
        for row, sentence in enumerate(document.sentences):
            for term, weight in tfidf_vector(sentence.tokens, stats, stopwords).items():
                matrix[row, term_column[term]] = weight

        gram = matrix @ matrix.T
        squared_norms = np.diag(gram).copy()
        order: list[int] = []
        remaining = list(range(n))
        used_words = 0
        while remaining:
            best_index = None
            best_error = np.inf
            for candidate in remaining:
                basis = order + [candidate]
                error = self._total_error(gram, squared_norms, basis)
                if error < best_error:
                    best_error = error
                    best_index = candidate
            words = document.sentences[best_index].words
            if budget is not None and used_words + words > budget:
                break
            order.append(best_index)
            used_words += words
            remaining.remove(best_index)
        return RankedList.from_selection(order)

    def _total_error(self, gram: np.ndarray, squared_norms: np.ndarray,
                     basis: list[int]) -> float:
        # With a solving (G_bb + ridge I) a = G_bi, the per-sentence error
        # collapses to ||v_i||^2 - a.G_bi, so no dense residuals are needed.
        basis_gram = gram[np.ix_(basis, basis)]
        cross = gram[np.ix_(basis, range(gram.shape[0]))]
        if self.ridge > 0.0:
            coef = np.linalg.solve(
                basis_gram + self.ridge * np.eye(len(basis)), cross)
        else:
            coef, *_ = np.linalg.lstsq(basis_gram, cross, rcond=None)
        return float(squared_norms.sum() - (coef * cross).sum())

"""Rankers driven by term frequency profiles: Luhn, LetSum core, k-mixture."""

from __future__ import annotations

import math
from collections import Counter
from typing import ClassVar

from ..corpus import Document
from ..lexmetrics import tfidf_vector
from .base import RankedList, SentenceRanker


class Luhn(SentenceRanker):
    """Luhn's significant-word clustering ranker.

    A term is significant when it is not a stopword and occurs at least
    ``theta`` times in the document.  Within a sentence, significant words
    at most ``gap`` insignificant words apart form a cluster; a cluster
    scores ``count(significant)**2 / span`` and a sentence scores its best
    cluster.  Works on document-local counts only, so no fitting is needed.
    """

    needs_corpus_stats: ClassVar[bool] = False

    def __init__(self, theta: float = 2, gap: int = 4,
                 stopwords: frozenset[str] | None = None):
        self.theta = theta
        self.gap = gap
        self.stopwords = stopwords

    def _rank(self, document: Document, budget: int | None) -> RankedList:
        stopwords = self._stopwords()
        counts = Counter(document.all_tokens())
        significant = {term for term, count in counts.items()
                       if term not in stopwords and count >= self.theta}
        scores = [self._sentence_score(s.tokens, significant)
                  for s in document.sentences]
        return RankedList.from_scores(scores)

    def _sentence_score(self, tokens, significant) -> float:
        positions = [i for i, token in enumerate(tokens) if token in significant]
        if not positions:
            return 0.0
        best = 0.0
        run_start = 0
        for i in range(1, len(positions) + 1):
            if i == len(positions) or positions[i] - positions[i - 1] - 1 > self.gap:
                count = i - run_start
                span = positions[i - 1] - positions[run_start] + 1
                best = max(best, count * count / span)
                run_start = i
        return best


class LetSum(SentenceRanker):
    """Length-normalized TF-IDF mass.

    A sentence scores the sum of its TF-IDF term weights divided by its
    token count, so long sentences are not rewarded for bulk alone.
    """

    def __init__(self, stopwords: frozenset[str] | None = None):
        self.stopwords = stopwords

    def _rank(self, document: Document, budget: int | None) -> RankedList:
        stats = self._corpus_stats()
        stopwords = self._stopwords()
        scores = []
        for sentence in document.sentences:
            if not sentence.tokens:
                scores.append(0.0)
                continue
            vector = tfidf_vector(sentence.tokens, stats, stopwords)
            scores.append(sum(vector.values()) / len(sentence.tokens))
        return RankedList.from_scores(scores)


class KMixtureModel(SentenceRanker):
    """Term informativeness under the Katz k-mixture occurrence model.

    For a term with collection frequency ``cf`` and document frequency
    ``df`` over an ``N``-document corpus, the model puts

        lambda = cf / N          beta = (cf - df) / df
        P(0)     = 1 - df / N
        P(k>=1)  = lambda * beta**(k-1) / (beta + 1)**(k+1)

    (``beta == 0`` degenerates to ``P(1) = lambda``, ``P(k>=2) = 0``).  A
    term occurring ``k`` times in the document weighs ``-ln P(k)``, floored
    at ``probability_floor`` so impossible counts stay finite.  A sentence
    scores the mean weight of its non-stopword tokens; tokens unseen in the
    fitted corpus are skipped like out-of-vocabulary words.
    """

    def __init__(self, stopwords: frozenset[str] | None = None,
                 probability_floor: float = 1e-12):
        self.stopwords = stopwords
        self.probability_floor = probability_floor

    def _term_probability(self, term: str, k: int) -> float | None:
        stats = self.stats_
        df = stats.df.get(term, 0)
        if df == 0 or stats.n_docs == 0:
            return None
        cf = stats.cf[term]
        if k == 0:
            return 1.0 - df / stats.n_docs
        lam = cf / stats.n_docs
        beta = (cf - df) / df
        if beta == 0.0:
            return lam if k == 1 else 0.0
        return lam * beta ** (k - 1) / (beta + 1) ** (k + 1)

    def _rank(self, document: Document, budget: int | None) -> RankedList:
        stopwords = self._stopwords()
        doc_counts = Counter(document.all_tokens())
        weight_cache: dict[str, float | None] = {}
        scores = []
        for sentence in document.sentences:
            total = 0.0
            scored = 0
            for token in sentence.tokens:
                if token in stopwords:
                    continue
                if token not in weight_cache:
                    p = self._term_probability(token, doc_counts[token])
                    if p is None:
                        weight_cache[token] = None
                    else:
                        weight_cache[token] = -math.log(max(p, self.probability_floor))
                weight = weight_cache[token]
                if weight is None:
                    continue
                total += weight
                scored += 1
            scores.append(total / scored if scored else 0.0)
        return RankedList.from_scores(scores)

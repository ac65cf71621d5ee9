"""Extractive label generation from abstractive reference summaries.

Each generator maps a document and one reference summary to a 0/1 label per
document sentence.  ``avr`` and ``tfidf`` work sentence-by-sentence over
the reference and union their picks; ``maximal`` grows one selection
greedily against the whole reference.  An empty reference yields all-zero
labels and a :class:`~lexsumm.corpus.DataWarning`.
"""

from __future__ import annotations

import warnings

from .corpus import (DataWarning, Document, ReferenceSummary,
                     segment_sentences, tokenize)
from .lexmetrics import TermStats, cosine, tfidf_vector
from .rouge import METRICS, score_pair
from .validation import check_document, check_unit_interval

#: Generator names accepted by :func:`generate_labels`.
METHODS: tuple[str, ...] = ("avr", "maximal", "tfidf")


def reference_sentence_tokens(reference: ReferenceSummary,
                              abbreviations: frozenset[str] | None = None
                              ) -> list[list[str]]:
    """Token lists of the reference's sentences, in reading order."""
    token_lists = []
    for part in reference.parts():
        for sentence in segment_sentences(part, abbreviations):
            tokens = tokenize(sentence)
            if tokens:
                token_lists.append(tokens)
    return token_lists


def _mean_score(candidate, reference, objective: str) -> float:
    total = 0.0
    for metric in METRICS:
        triple = score_pair(candidate, reference, metric)
        total += triple.f1 if objective == "f1" else triple.recall
    return total / len(METRICS)


def _check_objective(objective: str) -> str:
    if objective not in ("f1", "recall"):
        raise ValueError(f"unknown objective {objective!r} (use 'f1' or 'recall')")
    return objective


def _empty_labels(document: Document, method: str) -> list[int]:
    warnings.warn(
        f"document {document.id!r}: empty reference, {method} labels are all zero",
        DataWarning, stacklevel=3)
    return [0] * len(document)


def labels_avr(document: Document, reference: ReferenceSummary, k: int = 3,
               objective: str = "f1") -> list[int]:
    """Per reference sentence, label the ``k`` best-scoring document sentences.

    A document sentence scores the mean of its three overlap scores
    (``objective`` picks F1 or recall) against one reference sentence; the
    top ``k`` per reference sentence (ties to the lower index) are labeled
    and the picks are unioned.
    """
    check_document(document)
    _check_objective(objective)
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    reference_sentences = reference_sentence_tokens(reference)
    if not reference_sentences:
        return _empty_labels(document, "avr")
    labels = [0] * len(document)
    for ref_tokens in reference_sentences:
        scores = [_mean_score(sentence.tokens, ref_tokens, objective)
                  for sentence in document.sentences]
        top = sorted(range(len(scores)), key=lambda i: (-scores[i], i))[:k]
        for index in top:
            labels[index] = 1
    return labels


def labels_maximal(document: Document, reference: ReferenceSummary,
                   objective: str = "f1") -> list[int]:
    """Grow a selection greedily while the overlap with the reference rises.

    Each step adds the sentence maximizing the mean overlap score of the
    selection (concatenated in document order) against the whole reference;
    the loop stops when no addition strictly improves it.
    """
    check_document(document)
    _check_objective(objective)
    reference_tokens = tokenize(reference.full_text())
    if not reference_tokens:
        return _empty_labels(document, "maximal")
    selected: list[int] = []
    current = 0.0
    n = len(document)
    while len(selected) < n:
        best_index = -1
        best_score = current
        for i in range(n):
            if i in selected:
                continue
            trial = sorted(selected + [i])
            candidate: list[str] = []
            for index in trial:
                candidate.extend(document.sentences[index].tokens)
            score = _mean_score(candidate, reference_tokens, objective)
            if score > best_score:
                best_score = score
                best_index = i
        if best_index < 0:
            break
        selected.append(best_index)
        current = best_score
    labels = [0] * n
    for index in selected:
        labels[index] = 1
    return labels


def labels_tfidf(document: Document, reference: ReferenceSummary,
                 stats: TermStats, k: int = 3, theta: float = 0.4,
                 stopwords: frozenset[str] = frozenset()) -> list[int]:
    """Per reference sentence, label up to ``k`` similar document sentences.

    Similarity is TF-IDF cosine; only document sentences strictly above
    ``theta`` qualify, the ``k`` most similar of them are labeled (ties to
    the lower index), and the picks are unioned.
    """
    check_document(document)
    check_unit_interval(theta, "theta")
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    reference_sentences = reference_sentence_tokens(reference)
    if not reference_sentences:
        return _empty_labels(document, "tfidf")
    vectors = [tfidf_vector(s.tokens, stats, stopwords)
               for s in document.sentences]
    labels = [0] * len(document)
    for ref_tokens in reference_sentences:
        ref_vector = tfidf_vector(ref_tokens, stats, stopwords)
        sims = [cosine(v, ref_vector) for v in vectors]
        qualified = [i for i in range(len(sims)) if sims[i] > theta]
        top = sorted(qualified, key=lambda i: (-sims[i], i))[:k]
        for index in top:
            labels[index] = 1
    return labels


def generate_labels(document: Document, reference: ReferenceSummary,
                    method: str, *, stats: TermStats | None = None,
                    k: int = 3, theta: float = 0.4, objective: str = "f1",
                    stopwords: frozenset[str] = frozenset()) -> list[int]:
    """Dispatch to one generator by name."""
    if method == "avr":
        return labels_avr(document, reference, k=k, objective=objective)
    if method == "maximal":
        return labels_maximal(document, reference, objective=objective)
    if method == "tfidf":
        if stats is None:
            raise ValueError("tfidf labels need corpus term statistics")
        return labels_tfidf(document, reference, stats, k=k, theta=theta,
                            stopwords=stopwords)
    raise ValueError(f"unknown label method {method!r} (known: {', '.join(METHODS)})")

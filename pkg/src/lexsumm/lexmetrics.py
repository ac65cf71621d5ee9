"""Corpus statistics, TF-IDF vectors, embeddings, and sentence similarity.

Sparse vectors are plain ``dict[str, float]`` with no zero-weight entries.
Dense vectors are 1-D numpy arrays.  :func:`cosine` accepts either kind and
returns 0.0 whenever one side has zero norm, so degenerate sentences never
produce NaN.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .corpus import Document

#: Similarity method names accepted by :func:`sentence_similarity`.
SIMILARITY_METHODS: tuple[str, ...] = ("mcs", "sif", "lexical")


@dataclass
class TermStats:
    """Document frequency and collection frequency over a corpus.

    ``df[t]`` counts documents containing ``t`` at least once; ``cf[t]``
    counts occurrences across the corpus.  ``n_docs`` is the number of
    documents the stats were built from.
    """

    n_docs: int
    df: dict[str, int] = field(default_factory=dict)
    cf: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        self._total_cf = sum(self.cf.values())

    @property
    def total_cf(self) -> int:
        return self._total_cf

    def probability(self, term: str) -> float:
        """Relative collection frequency cf[t] / sum(cf); 0.0 for unseen terms."""
        if self._total_cf == 0:
            return 0.0
        return self.cf.get(term, 0) / self._total_cf


def build_term_stats(documents) -> TermStats:
    """Build :class:`TermStats` from documents (or bare token lists)."""
    df: Counter[str] = Counter()
    cf: Counter[str] = Counter()
    n_docs = 0
    for document in documents:
        tokens = document.all_tokens() if isinstance(document, Document) else list(document)
        n_docs += 1
        counts = Counter(tokens)
        cf.update(counts)
        df.update(counts.keys())
    return TermStats(n_docs=n_docs, df=dict(df), cf=dict(cf))


def tfidf_vector(tokens, stats: TermStats,
                 stopwords: frozenset[str] = frozenset()) -> dict[str, float]:
    """TF-IDF vector of a token sequence.

    The weight of term ``t`` is ``tf(t) * ln((N + 1) / (df(t) + 1))`` with
    ``N = stats.n_docs``.  Stopwords are excluded, and terms whose smoothed
    IDF is zero (present in every document) are not stored.
    """
    vector: dict[str, float] = {}
    n = stats.n_docs
    for term, tf in Counter(tokens).items():
        if term in stopwords:
            continue
        weight = tf * math.log((n + 1) / (stats.df.get(term, 0) + 1))
        if weight != 0.0:
            vector[term] = weight
    return vector


def cosine(u, v) -> float:
    """Cosine similarity of two sparse dicts or two dense numpy arrays."""
    if isinstance(u, dict) and isinstance(v, dict):
        if len(v) < len(u):
            u, v = v, u
        dot = sum(weight * v.get(term, 0.0) for term, weight in u.items())
        norm_u = math.sqrt(sum(w * w for w in u.values()))
        norm_v = math.sqrt(sum(w * w for w in v.values()))
    else:
        u = np.asarray(u, dtype=float)
        v = np.asarray(v, dtype=float)
        dot = float(np.dot(u, v))
        norm_u = float(np.linalg.norm(u))
        norm_v = float(np.linalg.norm(v))
    if norm_u == 0.0 or norm_v == 0.0:
        return 0.0
    return dot / (norm_u * norm_v)


# --------------------------------------------------------------------------
# word embeddings


@dataclass
class EmbeddingTable:
    """Word vectors loaded from a word2vec-style text file."""

    dimension: int
    vectors: dict[str, np.ndarray]

    def __contains__(self, token: str) -> bool:
        return token in self.vectors

    def get(self, token: str) -> np.ndarray | None:
        return self.vectors.get(token)


def load_embeddings(path: str | Path) -> EmbeddingTable:
    """Load embeddings from word2vec text format.

    The optional first line may be a ``<count> <dimension>`` header; every
    other line is a token followed by its vector components.  The first
    occurrence of a duplicated token wins.

    Raises:
        ValueError: on inconsistent dimensions or unparseable components,
            naming the offending line.
    """
    vectors: dict[str, np.ndarray] = {}
    dimension: int | None = None
    with open(path, encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, start=1):
            parts = line.rstrip("\n").split(" ")
            parts = [p for p in parts if p]
            if not parts:
                continue
            if line_number == 1 and len(parts) == 2:
                try:
                    int(parts[0]), int(parts[1])
                except ValueError:
                    pass
                else:
                    continue
            token = parts[0]
            try:
                values = np.array([float(p) for p in parts[1:]], dtype=float)
            except ValueError as exc:
                raise ValueError(f"line {line_number}: bad vector component: {exc}")
            if values.size == 0:
                raise ValueError(f"line {line_number}: token {token!r} has no vector")
            if dimension is None:
                dimension = values.size
            elif values.size != dimension:
                raise ValueError(
                    f"line {line_number}: expected {dimension} components, "
                    f"got {values.size}")
            if token not in vectors:
                vectors[token] = values
    if dimension is None:
        raise ValueError("embedding file holds no vectors")
    return EmbeddingTable(dimension=dimension, vectors=vectors)


def sentence_embedding(tokens, table: EmbeddingTable, mode: str = "mcs",
                       stats: TermStats | None = None,
                       sif_a: float = 1e-3) -> np.ndarray:
    """Embed a token sequence by averaging word vectors.

    ``mcs`` is the unweighted mean of the in-vocabulary token vectors;
    ``sif`` weights each token by ``a / (a + p(w))`` where ``p(w)`` is the
    term's relative collection frequency under ``stats``.  Out-of-vocabulary
    tokens are skipped; a sequence with no in-vocabulary token embeds as the
    zero vector.
    """
    if mode not in ("mcs", "sif"):
        raise ValueError(f"unknown embedding mode {mode!r}")
    if mode == "sif" and stats is None:
        raise ValueError("sif embeddings need corpus term statistics")
    total = np.zeros(table.dimension, dtype=float)
    total_weight = 0.0
    for token in tokens:
        vector = table.get(token)
        if vector is None:
            continue
        weight = 1.0 if mode == "mcs" else sif_a / (sif_a + stats.probability(token))
        total += weight * vector
        total_weight += weight
    if total_weight == 0.0:
        return np.zeros(table.dimension, dtype=float)
    return total / total_weight


def sentence_similarity(a, b, method: str = "lexical", *,
                        table: EmbeddingTable | None = None,
                        stats: TermStats | None = None,
                        stopwords: frozenset[str] = frozenset(),
                        sif_a: float = 1e-3) -> float:
    """Similarity of two token sequences under a named method.

    ``lexical`` compares TF-IDF vectors (needs ``stats``); ``mcs`` and
    ``sif`` compare averaged word embeddings (need ``table``; ``sif`` also
    needs ``stats``).
    """
    if method == "lexical":
        if stats is None:
            raise ValueError("lexical similarity needs corpus term statistics")
        return cosine(tfidf_vector(a, stats, stopwords),
                      tfidf_vector(b, stats, stopwords))
    if method in ("mcs", "sif"):
        if table is None:
            raise ValueError(f"{method} similarity needs an embedding table")
        return cosine(sentence_embedding(a, table, method, stats, sif_a),
                      sentence_embedding(b, table, method, stats, sif_a))
    raise ValueError(f"unknown similarity method {method!r}")


__all__ = [
    "SIMILARITY_METHODS", "TermStats", "build_term_stats", "tfidf_vector",
    "cosine", "EmbeddingTable", "load_embeddings", "sentence_embedding",
    "sentence_similarity",
]

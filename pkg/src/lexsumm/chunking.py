"""Sentence-preserving chunking, budget allocation, and finetune pairs.

Long documents are cut into chunks of at most ``n_tokens`` tokens without
breaking sentences; a single oversized sentence becomes its own chunk.  A
summary word budget is divided evenly over the chunks, with the remainder
going to the earliest ones.  For sequence-to-sequence training data, each
reference sentence is mapped to its most similar document sentence and
lands in the pair of whichever chunk holds that sentence.  Documents with
rhetorical role labels can be partitioned into role segments first, each
segment re-chunked under the same token limit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import (Document, CorpusEntry, ReferenceSummary, ROLE_LABELS,
                     segment_sentences, tokenize)
from .lexmetrics import EmbeddingTable, TermStats, sentence_similarity
from .validation import check_document


@dataclass
class Chunk:
    """A run of whole sentences within the token limit (or one oversized one)."""

    doc_id: str
    index: int
    sentence_indices: list[int]
    token_count: int
    text: str


@dataclass
class FinetunePair:
    """One chunk and the reference sentences mapped into it."""

    doc_id: str
    chunk_index: int
    chunk_text: str
    summary_text: str
    method: str
    role: str | None = None

    def as_dict(self) -> dict:
        obj = {"doc_id": self.doc_id, "chunk_index": self.chunk_index,
               "chunk_text": self.chunk_text, "summary_text": self.summary_text,
               "method": self.method}
        if self.role is not None:
            obj["role"] = self.role
        return obj


def _chunk_indices(sentences, n_tokens: int) -> list[list[int]]:
    groups: list[list[int]] = []
    current: list[int] = []
    current_tokens = 0
    for sentence in sentences:
        count = len(sentence.tokens)
        if count > n_tokens:
            if current:
                groups.append(current)
            groups.append([sentence.index])
            current = []
            current_tokens = 0
            continue
        if current and current_tokens + count > n_tokens:
            groups.append(current)
            current = []
            current_tokens = 0
        current.append(sentence.index)
        current_tokens += count
    if current:
        groups.append(current)
    return groups


def chunk_document(document: Document, n_tokens: int) -> list[Chunk]:
    """Greedily fill chunks with whole sentences up to ``n_tokens`` tokens.

    Chunks tile the document: every sentence lands in exactly one chunk and
    order is preserved.  A sentence longer than the limit forms its own
    oversized chunk.
    """
    check_document(document)
    if n_tokens < 1:
        raise ValueError(f"n_tokens must be at least 1, got {n_tokens}")
    chunks = []
    for index, group in enumerate(_chunk_indices(document.sentences, n_tokens)):
        sentences = [document.sentences[i] for i in group]
        chunks.append(Chunk(
            doc_id=document.id,
            index=index,
            sentence_indices=group,
            token_count=sum(len(s.tokens) for s in sentences),
            text=" ".join(s.raw for s in sentences),
        ))
    return chunks


def allocate_budget(budget: int, n_chunks: int) -> list[int]:
    """Split a word budget evenly; the remainder goes to the earliest chunks."""
    if n_chunks < 1:
        raise ValueError(f"n_chunks must be at least 1, got {n_chunks}")
    if budget < 0:
        raise ValueError(f"budget must be non-negative, got {budget}")
    share, remainder = divmod(budget, n_chunks)
    return [share + (1 if i < remainder else 0) for i in range(n_chunks)]


def reference_sentences(reference: ReferenceSummary,
                        abbreviations: frozenset[str] | None = None) -> list[str]:
    """The reference's sentences as raw strings, in reading order."""
    sentences = []
    for part in reference.parts():
        sentences.extend(segment_sentences(part, abbreviations))
    return sentences


def map_reference_sentences(document: Document, reference: ReferenceSummary,
                            method: str = "lexical", *,
                            table: EmbeddingTable | None = None,
                            stats: TermStats | None = None,
                            stopwords: frozenset[str] = frozenset(),
                            sif_a: float = 1e-3) -> list[tuple[str, int]]:
    """Assign every reference sentence to its most similar document sentence.

    Similarity is computed document-wide under ``method`` (see
    :func:`lexsumm.lexmetrics.sentence_similarity`); ties go to the lower
    sentence index.  Returns ``(raw reference sentence, document sentence
    index)`` pairs in reference order.
    """
    check_document(document)
    if not document.sentences:
        raise ValueError(f"document {document.id!r} has no sentences")
    assignments = []
    doc_tokens = [s.tokens for s in document.sentences]
    for raw in reference_sentences(reference):
        ref_tokens = tokenize(raw)
        best_index = 0
        best_sim = -1.0
        for i, tokens in enumerate(doc_tokens):
            sim = sentence_similarity(tokens, ref_tokens, method, table=table,
                                      stats=stats, stopwords=stopwords,
                                      sif_a=sif_a)
            if sim > best_sim:
                best_sim = sim
                best_index = i
        assignments.append((raw, best_index))
    return assignments


def _pairs_for_groups(doc_id: str, document: Document, groups,
                      assignments, method: str, drop_empty: bool,
                      role: str | None = None) -> list[FinetunePair]:
    # groups: list of (chunk_index, [sentence indices]) under one role (or none)
    pairs = []
    for chunk_index, indices in groups:
        members = set(indices)
        summary = " ".join(raw for raw, target in assignments
                           if target in members)
        if drop_empty and not summary:
            continue
        text = " ".join(document.sentences[i].raw for i in indices)
        pairs.append(FinetunePair(doc_id=doc_id, chunk_index=chunk_index,
                                  chunk_text=text, summary_text=summary,
                                  method=method, role=role))
    return pairs


def partition_by_role(document: Document) -> list[tuple[str, list[int]]]:
    """Group sentence indices by rhetorical role, in canonical role order.

    Only roles present in the document appear.  Raises ``ValueError`` when
    any sentence lacks a role label, naming the offending indices.
    """
    check_document(document)
    unlabeled = [s.index for s in document.sentences if s.role is None]
    if unlabeled:
        shown = ", ".join(str(i) for i in unlabeled[:10])
        if len(unlabeled) > 10:
            shown += ", ..."
        raise ValueError(
            f"document {document.id!r} has unlabeled sentences ({shown}); "
            "role partitioning needs a role on every sentence")
    by_role: dict[str, list[int]] = {}
    for sentence in document.sentences:
        by_role.setdefault(sentence.role, []).append(sentence.index)
    return [(role, by_role[role]) for role in ROLE_LABELS if role in by_role]


def _rechunk_segment(document: Document, indices: list[int],
                     n_tokens: int) -> list[list[int]]:
    sentences = [document.sentences[i] for i in indices]
    groups = _chunk_indices(sentences, n_tokens)
    return groups


def make_finetune_pairs(entry: CorpusEntry, n_tokens: int,
                        method: str = "lexical", *, by_role: bool = False,
                        drop_empty: bool = False,
                        table: EmbeddingTable | None = None,
                        stats: TermStats | None = None,
                        stopwords: frozenset[str] = frozenset(),
                        sif_a: float = 1e-3) -> list[FinetunePair]:
    """Build (chunk text, summary part) training pairs for one document.

    Uses the document's first reference summary.  With ``by_role`` the
    document is partitioned into rhetorical role segments first and each
    segment is re-chunked under the token limit; chunk indices then count
    within their role.  Chunks that attract no reference sentence keep an
    empty ``summary_text`` unless ``drop_empty`` is set.
    """
    document = entry.document
    reference = entry.references[0]
    assignments = map_reference_sentences(document, reference, method,
                                          table=table, stats=stats,
                                          stopwords=stopwords, sif_a=sif_a)
    pairs: list[FinetunePair] = []
    if by_role:
        for role, indices in partition_by_role(document):
            groups = list(enumerate(_rechunk_segment(document, indices, n_tokens)))
            pairs.extend(_pairs_for_groups(document.id, document, groups,
                                           assignments, method, drop_empty,
                                           role=role))
    else:
        chunks = chunk_document(document, n_tokens)
        groups = [(c.index, c.sentence_indices) for c in chunks]
        pairs.extend(_pairs_for_groups(document.id, document, groups,
                                       assignments, method, drop_empty))
    return pairs

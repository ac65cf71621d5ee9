"""lexsumm: extractive summarization toolkit for long legal case documents.

The package covers the full pipeline around unsupervised extractive
summarization of case law: corpus ingestion (:mod:`lexsumm.corpus`),
TF-IDF and embedding similarity (:mod:`lexsumm.lexmetrics`), nine sentence
rankers with budgeted assembly (:mod:`lexsumm.extractive`), extractive
label generation from abstractive references (:mod:`lexsumm.labels`),
sentence-preserving chunking and training-pair construction
(:mod:`lexsumm.chunking`), n-gram and subsequence overlap scoring
(:mod:`lexsumm.rouge`), and a corpus evaluation harness
(:mod:`lexsumm.evaluation`).  The ``lexsumm`` command exposes all of it.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .corpus import (CorpusEntry, CorpusFormatError, DataWarning, Document,
                     LegalDictionary, ReferenceSummary, Sentence, load_corpus,
                     segment_sentences, target_length, tokenize, write_corpus)
from .extractive import (ALGORITHMS, DSDR, LSA, CaseSummarizer,
                         ExtractiveSummary, KMixtureModel, LetSum, LexRank,
                         Luhn, MaximalMarginalRelevance, RankedList, Reduction,
                         SentenceRanker, assemble_summary, make_ranker)
from .lexmetrics import (EmbeddingTable, TermStats, build_term_stats, cosine,
                         load_embeddings, sentence_embedding,
                         sentence_similarity, tfidf_vector)
from .rouge import RougeTriple, rouge_l, rouge_multi, rouge_n, score_all
from .labels import generate_labels, labels_avr, labels_maximal, labels_tfidf
from .chunking import (Chunk, FinetunePair, allocate_budget, chunk_document,
                       make_finetune_pairs, map_reference_sentences,
                       partition_by_role)
from .evaluation import (ScoreReport, aggregate, evaluate_documentwide,
                         evaluate_segmentwise, score_document, write_report)

__all__ = [
    "__version__",
    # corpus
    "CorpusEntry", "CorpusFormatError", "DataWarning", "Document",
    "LegalDictionary", "ReferenceSummary", "Sentence", "load_corpus",
    "segment_sentences", "target_length", "tokenize", "write_corpus",
    # metrics
    "EmbeddingTable", "TermStats", "build_term_stats", "cosine",
    "load_embeddings", "sentence_embedding", "sentence_similarity",
    "tfidf_vector",
    # rouge
    "RougeTriple", "rouge_l", "rouge_multi", "rouge_n", "score_all",
    # rankers
    "ALGORITHMS", "DSDR", "LSA", "CaseSummarizer", "ExtractiveSummary",
    "KMixtureModel", "LetSum", "LexRank", "Luhn", "MaximalMarginalRelevance",
    "RankedList", "Reduction", "SentenceRanker", "assemble_summary",
    "make_ranker",
    # labels
    "generate_labels", "labels_avr", "labels_maximal", "labels_tfidf",
    # chunking
    "Chunk", "FinetunePair", "allocate_budget", "chunk_document",
    "make_finetune_pairs", "map_reference_sentences", "partition_by_role",
    # evaluation
    "ScoreReport", "aggregate", "evaluate_documentwide",
    "evaluate_segmentwise", "score_document", "write_report",
]

"""Shared builders for tests: deterministic random corpora and documents."""

from __future__ import annotations

import random

import pytest

from lexsumm.corpus import CorpusEntry, Document, ReferenceSummary

#: Small vocabulary pool for random documents; mixes content words with
#: stopwords so TF-IDF exclusion paths get exercised.
CONTENT_WORDS = [
    "appeal", "appellant", "assessment", "bail", "bench", "code", "conviction",
    "costs", "court", "custody", "decree", "defendant", "evidence", "fine",
    "judge", "judgment", "jurisdiction", "land", "liability", "notice",
    "offence", "order", "penalty", "petition", "plaintiff", "property",
    "prosecution", "respondent", "sentence", "statute", "tax", "tribunal",
    "witness", "writ",
]
STOPWORD_FILLERS = ["the", "of", "and", "to", "in", "was", "is", "by"]


def random_sentence(rng: random.Random, min_words: int = 3,
                    max_words: int = 10) -> str:
    length = rng.randint(min_words, max_words)
    words = []
    for _ in range(length):
        pool = CONTENT_WORDS if rng.random() < 0.7 else STOPWORD_FILLERS
        words.append(rng.choice(pool))
    words[0] = words[0].capitalize()
    return " ".join(words) + "."


def random_document(rng: random.Random, doc_id: str, min_sentences: int = 2,
                    max_sentences: int = 10) -> Document:
    n = rng.randint(min_sentences, max_sentences)
    return Document.from_sentence_texts(
        doc_id, [random_sentence(rng) for _ in range(n)])


def random_reference(rng: random.Random, min_sentences: int = 1,
                     max_sentences: int = 4) -> ReferenceSummary:
    n = rng.randint(min_sentences, max_sentences)
    return ReferenceSummary.whole(
        " ".join(random_sentence(rng) for _ in range(n)))


def random_entry(rng: random.Random, doc_id: str, split: str = "test",
                 n_references: int = 1) -> CorpusEntry:
    return CorpusEntry(
        document=random_document(rng, doc_id),
        references=[random_reference(rng) for _ in range(n_references)],
        split=split)


def random_corpus(rng: random.Random, n_docs: int) -> list[CorpusEntry]:
    entries = []
    for i in range(n_docs):
        split = "train" if i % 2 == 0 else "test"
        entries.append(random_entry(rng, f"doc{i:03d}", split=split))
    return entries


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)


@pytest.fixture
def tiny_docs() -> list[Document]:
    texts = [
        ["The appellant filed a writ petition before the High Court.",
         "The petition challenged the assessment order under the Income Tax Act.",
         "Section 34 of the Act was held inapplicable to the facts.",
         "The appeal therefore fails and is dismissed with costs."],
        ["The respondent sought habeas corpus relief on 4 May 1950.",
         "The learned judge granted interim bail pending the hearing."],
        ["The tribunal recorded the evidence of three witnesses.",
         "Conviction under section 302 was set aside on appeal.",
         "The sentence of fine was maintained by the bench."],
    ]
    return [Document.from_sentence_texts(f"d{i}", t) for i, t in enumerate(texts)]

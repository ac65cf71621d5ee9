"""Legal-domain weighted ranker (CaseSummarizer adaptation)."""

from __future__ import annotations

import re

import numpy as np

from ..corpus import Document, LegalDictionary, default_legal_dictionary
from ..lexmetrics import tfidf_vector
from .base import RankedList, SentenceRanker

_MONTH = (r"(?:january|february|march|april|may|june|july|august|september|"
          r"october|november|december|jan|feb|mar|apr|jun|jul|aug|sept|sep|"
          r"oct|nov|dec)")

#: Date mentions: day-month-year and month-year spellings plus purely
#: numeric dates.  Alternatives are ordered longest-first so one mention
#: matches once.
_DATE_RE = re.compile(
    "|".join([
        rf"\b\d{{1,2}}(?:st|nd|rd|th)?\s+(?:of\s+)?{_MONTH}\.?,?\s+\d{{4}}\b",
        rf"\b{_MONTH}\.?\s+\d{{1,2}},?\s+\d{{4}}\b",
        rf"\b{_MONTH}\.?,?\s+\d{{4}}\b",
        r"\b\d{1,2}[./-]\d{1,2}[./-]\d{2,4}\b",
    ]),
    re.IGNORECASE,
)

_SECTION_RE = re.compile(r"\bsections?\s+\d+\w*", re.IGNORECASE)


def count_date_mentions(text: str) -> int:
    """Count date spellings and ``section <number>`` citations in raw text."""
    return sum(1 for _ in _DATE_RE.finditer(text)) + \
        sum(1 for _ in _SECTION_RE.finditer(text))


def _is_capitalized(word: str) -> bool:
    for char in word:
        if char.isalpha():
            return char.isupper()
    return False


def count_entity_runs(text: str) -> int:
    """Heuristic named-entity count for one sentence.

    Counts maximal runs of capitalized words, ignoring the first word of
    the sentence (capitalized there by convention, not by name).
    """
    words = text.split()
    runs = 0
    in_run = False
    for word in words[1:]:
        if _is_capitalized(word):
            if not in_run:
                runs += 1
                in_run = True
        else:
            in_run = False
    return runs


class CaseSummarizer(SentenceRanker):
    """TF-IDF ranking boosted by legal surface cues.

    The base score of a sentence is its TF-IDF mass divided by its token
    count.  Each sentence is then boosted by the population standard
    deviation of the base scores, scaled by a weighted count of cues:
    dates and statute citations (``date_weight``), named entities
    (``entity_weight``), and legal dictionary phrases (``term_weight``):

        score = base + std * (0.2 * dates + 0.3 * entities + 1.5 * terms)

    Entity counts honor per-sentence annotations from the corpus when
    present and otherwise fall back to a capitalization heuristic.
    """

    def __init__(self, dictionary: LegalDictionary | None = None,
                 date_weight: float = 0.2, entity_weight: float = 0.3,
                 term_weight: float = 1.5,
                 stopwords: frozenset[str] | None = None):
        self.dictionary = dictionary
        self.date_weight = date_weight
        self.entity_weight = entity_weight
        self.term_weight = term_weight
        self.stopwords = stopwords

    def _dictionary(self) -> LegalDictionary:
        return self.dictionary if self.dictionary is not None else default_legal_dictionary()

    def _rank(self, document: Document, budget: int | None) -> RankedList:
        stats = self._corpus_stats()
        stopwords = self._stopwords()
        dictionary = self._dictionary()
        base = []
        for sentence in document.sentences:
            if not sentence.tokens:
                base.append(0.0)
                continue
            vector = tfidf_vector(sentence.tokens, stats, stopwords)
            base.append(sum(vector.values()) / len(sentence.tokens))
        spread = float(np.std(base)) if base else 0.0
        scores = []
        for score, sentence in zip(base, document.sentences):
            dates = count_date_mentions(sentence.raw)
            if sentence.entity_count is not None:
                entities = sentence.entity_count
            else:
                entities = count_entity_runs(sentence.raw)
            terms = dictionary.count_hits(sentence.tokens)
            boost = (self.date_weight * dates + self.entity_weight * entities
                     + self.term_weight * terms)
            scores.append(score + spread * boost)
        return RankedList.from_scores(scores)

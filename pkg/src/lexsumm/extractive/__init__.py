"""Extractive sentence rankers and budgeted summary assembly."""

from __future__ import annotations

from .base import (ExtractiveSummary, RankedList, SentenceRanker,
                   assemble_summary)
from .frequency import KMixtureModel, LetSum, Luhn
from .graph import LSA, LexRank, Reduction
from .greedy import DSDR, MaximalMarginalRelevance
from .legal import CaseSummarizer, count_date_mentions, count_entity_runs

#: CLI algorithm name -> ranker class.
ALGORITHMS: dict[str, type[SentenceRanker]] = {
    "luhn": Luhn,
    "lexrank": LexRank,
    "lsa": LSA,
    "reduction": Reduction,
    "letsum": LetSum,
    "kmm": KMixtureModel,
    "casesummarizer": CaseSummarizer,
    "mmr": MaximalMarginalRelevance,
    "dsdr": DSDR,
}


def make_ranker(name: str, **params) -> SentenceRanker:
    """Instantiate a ranker by its registry name."""
    try:
        cls = ALGORITHMS[name]
    except KeyError:
        known = ", ".join(sorted(ALGORITHMS))
        raise ValueError(f"unknown algorithm {name!r} (known: {known})") from None
    return cls(**params)


__all__ = [
    "ALGORITHMS", "make_ranker", "SentenceRanker", "RankedList",
    "ExtractiveSummary", "assemble_summary", "Luhn", "LexRank", "LSA",
    "Reduction", "LetSum", "KMixtureModel", "CaseSummarizer",
    "MaximalMarginalRelevance", "DSDR", "count_date_mentions",
    "count_entity_runs",
]

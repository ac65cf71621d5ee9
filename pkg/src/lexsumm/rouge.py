"""N-gram overlap and longest-common-subsequence scoring.

All functions take token sequences (use :func:`lexsumm.corpus.tokenize`)
and return recall/precision/F1 triples.  N-gram overlap is clipped: each
candidate n-gram counts at most as often as it occurs in the reference.
Empty inputs score 0.0 across the board rather than raising.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

#: Metric names accepted by :func:`rouge_multi` and :func:`score_all`.
METRICS: tuple[str, ...] = ("rouge1", "rouge2", "rougeL")


@dataclass(frozen=True)
class RougeTriple:
    """Recall, precision, and F1 for one metric on one pair of texts."""

    recall: float
    precision: float
    f1: float

    def as_dict(self) -> dict[str, float]:
        return {"recall": self.recall, "precision": self.precision, "f1": self.f1}


ZERO = RougeTriple(0.0, 0.0, 0.0)


def _triple(matches: int, candidate_total: int, reference_total: int) -> RougeTriple:
    recall = matches / reference_total if reference_total else 0.0
    precision = matches / candidate_total if candidate_total else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return RougeTriple(recall=recall, precision=precision, f1=f1)


def _ngrams(tokens, n: int) -> Counter:
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def rouge_n(candidate, reference, n: int) -> RougeTriple:
    """Clipped n-gram overlap of ``candidate`` against ``reference``."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    candidate_counts = _ngrams(candidate, n)
    reference_counts = _ngrams(reference, n)
    matches = sum(min(count, reference_counts.get(gram, 0))
                  for gram, count in candidate_counts.items())
    return _triple(matches, sum(candidate_counts.values()),
                   sum(reference_counts.values()))


def _lcs_length(a, b) -> int:
    # rolling single-row dynamic program over the reference
    if not a or not b:
        return 0
    previous = [0] * (len(b) + 1)
    for token in a:
        current = [0]
        for j, other in enumerate(b, start=1):
            if token == other:
                current.append(previous[j - 1] + 1)
            else:
                current.append(max(previous[j], current[j - 1]))
        previous = current
    return previous[-1]


def rouge_l(candidate, reference) -> RougeTriple:
    """Longest-common-subsequence overlap of ``candidate`` vs ``reference``."""
    matches = _lcs_length(list(candidate), list(reference))
    return _triple(matches, len(candidate), len(reference))


def score_pair(candidate, reference, metric: str) -> RougeTriple:
    """One metric for one candidate/reference pair."""
    if metric == "rouge1":
        return rouge_n(candidate, reference, 1)
    if metric == "rouge2":
        return rouge_n(candidate, reference, 2)
    if metric == "rougeL":
        return rouge_l(candidate, reference)
    raise ValueError(f"unknown metric {metric!r}")


def rouge_multi(candidate, references, metric: str) -> RougeTriple:
    """Component-wise arithmetic mean of a metric over several references."""
    references = list(references)
    if not references:
        raise ValueError("rouge_multi needs at least one reference")
    triples = [score_pair(candidate, reference, metric) for reference in references]
    n = len(triples)
    return RougeTriple(recall=sum(t.recall for t in triples) / n,
                       precision=sum(t.precision for t in triples) / n,
                       f1=sum(t.f1 for t in triples) / n)


def score_all(candidate, references) -> dict[str, RougeTriple]:
    """All three metrics against one or more references."""
    return {metric: rouge_multi(candidate, references, metric) for metric in METRICS}


def mean_f1(candidate, reference) -> float:
    """Mean of the three metric F1 scores against a single reference."""
    return sum(score_pair(candidate, reference, metric).f1 for metric in METRICS) / 3.0


def mean_recall(candidate, reference) -> float:
    """Mean of the three metric recalls against a single reference."""
    return sum(score_pair(candidate, reference, metric).recall for metric in METRICS) / 3.0

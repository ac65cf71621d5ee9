"""Corpus-level scoring of summaries against reference summaries.

Summaries are scored document-wide against every reference (triples are
averaged across references component-wise), then aggregated by arithmetic
mean over documents.  Segment-wise evaluation scores the whole summary
against each named segment of a segmented reference, reporting recall
only.  Documents that cannot be scored are excluded from the means but
enumerated in the report.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path

from .corpus import CorpusEntry, tokenize
from .rouge import METRICS, RougeTriple, rouge_multi, score_pair


@dataclass
class SegmentScores:
    """Recall of the summary against one reference segment, per metric."""

    recalls: dict[str, float]
    empty_segment: bool = False

    def as_dict(self) -> dict:
        obj = {metric: self.recalls[metric] for metric in METRICS}
        if self.empty_segment:
            obj["empty_segment"] = True
        return obj


@dataclass
class DocumentScores:
    """Scores (or the error) for one document."""

    doc_id: str
    triples: dict[str, RougeTriple] | None = None
    segments: dict[str, SegmentScores] | None = None
    error: str | None = None


@dataclass
class ScoreReport:
    """Per-document scores, their aggregate means, and run metadata."""

    per_document: dict[str, dict[str, RougeTriple]]
    aggregate: dict[str, RougeTriple]
    per_document_segments: dict[str, dict[str, SegmentScores]] = field(default_factory=dict)
    segmentwise: dict[str, dict[str, float]] = field(default_factory=dict)
    errors: dict[str, str] = field(default_factory=dict)
    n_scored: int = 0
    n_errors: int = 0
    meta: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        obj = {
            "per_document": {
                doc_id: {metric: triple.as_dict()
                         for metric, triple in triples.items()}
                for doc_id, triples in self.per_document.items()
            },
            "aggregate": {metric: triple.as_dict()
                          for metric, triple in self.aggregate.items()},
            "counts": {"scored": self.n_scored, "errors": self.n_errors},
            "meta": self.meta,
        }
        if self.per_document_segments:
            obj["per_document_segments"] = {
                doc_id: {name: scores.as_dict() for name, scores in segments.items()}
                for doc_id, segments in self.per_document_segments.items()
            }
        if self.segmentwise:
            obj["segmentwise"] = self.segmentwise
        if self.errors:
            obj["errors"] = self.errors
        return obj


def evaluate_segmentwise(summary_text: str, reference) -> dict[str, SegmentScores]:
    """Recall of the whole summary against each segment of one reference."""
    if not reference.is_segmented:
        raise ValueError("segment-wise evaluation needs a segmented reference")
    candidate = tokenize(summary_text)
    result: dict[str, SegmentScores] = {}
    for name, text in reference.segments.items():
        segment_tokens = tokenize(text)
        if not segment_tokens:
            result[name] = SegmentScores(
                recalls={metric: 0.0 for metric in METRICS}, empty_segment=True)
            continue
        result[name] = SegmentScores(recalls={
            metric: score_pair(candidate, segment_tokens, metric).recall
            for metric in METRICS})
    return result


def score_document(summary_text: str, entry: CorpusEntry,
                   segmentwise: bool = False) -> DocumentScores:
    """Score one summary against a document's references."""
    doc_id = entry.document.id
    reference_tokens = [tokenize(ref.full_text()) for ref in entry.references]
    if not any(reference_tokens):
        return DocumentScores(doc_id=doc_id, error="reference summary is empty")
    candidate = tokenize(summary_text)
    triples = {metric: rouge_multi(candidate, reference_tokens, metric)
               for metric in METRICS}
    segments: dict[str, SegmentScores] | None = None
    if segmentwise:
        per_reference = [evaluate_segmentwise(summary_text, ref)
                         for ref in entry.references if ref.is_segmented]
        if per_reference:
            segments = {}
            names: list[str] = []
            for scored in per_reference:
                for name in scored:
                    if name not in names:
                        names.append(name)
            for name in names:
                present = [scored[name] for scored in per_reference if name in scored]
                segments[name] = SegmentScores(
                    recalls={metric: sum(s.recalls[metric] for s in present) / len(present)
                             for metric in METRICS},
                    empty_segment=all(s.empty_segment for s in present))
    return DocumentScores(doc_id=doc_id, triples=triples, segments=segments)


def aggregate(document_scores, meta: dict | None = None) -> ScoreReport:
    """Combine per-document scores into a report with arithmetic-mean aggregates."""
    scores = list(document_scores)
    if not scores:
        raise ValueError("nothing to aggregate")
    per_document: dict[str, dict[str, RougeTriple]] = {}
    per_document_segments: dict[str, dict[str, SegmentScores]] = {}
    errors: dict[str, str] = {}
    for item in sorted(scores, key=lambda s: s.doc_id):
        if item.error is not None:
            errors[item.doc_id] = item.error
            continue
        per_document[item.doc_id] = item.triples
        if item.segments:
            per_document_segments[item.doc_id] = item.segments

    aggregates: dict[str, RougeTriple] = {}
    scored = list(per_document.values())
    for metric in METRICS:
        if scored:
            n = len(scored)
            aggregates[metric] = RougeTriple(
                recall=sum(t[metric].recall for t in scored) / n,
                precision=sum(t[metric].precision for t in scored) / n,
                f1=sum(t[metric].f1 for t in scored) / n)
        else:
            aggregates[metric] = RougeTriple(0.0, 0.0, 0.0)

    segmentwise: dict[str, dict[str, float]] = {}
    names: list[str] = []
    for segments in per_document_segments.values():
        for name in segments:
            if name not in names:
                names.append(name)
    for name in names:
        rows = [segments[name] for segments in per_document_segments.values()
                if name in segments]
        segmentwise[name] = {
            metric: sum(r.recalls[metric] for r in rows) / len(rows)
            for metric in METRICS}

    return ScoreReport(per_document=per_document, aggregate=aggregates,
                       per_document_segments=per_document_segments,
                       segmentwise=segmentwise, errors=errors,
                       n_scored=len(per_document), n_errors=len(errors),
                       meta=dict(meta or {}))


def evaluate_documentwide(summaries: dict[str, str], entries,
                          segmentwise: bool = False,
                          meta: dict | None = None) -> ScoreReport:
    """Score a batch of summaries against their corpus entries.

    ``summaries`` maps document id to summary text.  Ids missing from the
    corpus become per-document error entries rather than raising.
    """
    by_id = {entry.document.id: entry for entry in entries}
    results = []
    for doc_id, text in summaries.items():
        entry = by_id.get(doc_id)
        if entry is None:
            results.append(DocumentScores(doc_id=doc_id,
                                          error="document id not in corpus"))
            continue
        results.append(score_document(text, entry, segmentwise=segmentwise))
    return aggregate(results, meta=meta)


def write_report(report: ScoreReport, path: str | Path) -> None:
    """Write the report as deterministic JSON (sorted keys, no timestamps)."""
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(report.to_dict(), handle, ensure_ascii=False, sort_keys=True,
                  indent=2)
        handle.write("\n")


#: Short column prefixes per metric, in metric order.
_CSV_SHORT = {"rouge1": "r1", "rouge2": "r2", "rougeL": "rl"}


def write_csv(report: ScoreReport, path: str | Path) -> None:
    """Write per-document rows as CSV (scored documents only).

    Columns: ``id``, then ``r1_r, r1_p, r1_f, r2_..., rl_...``, then one
    recall column per reference segment name (``seg_<name>_<metric>_r``).
    """
    segment_names = sorted({name
                            for segments in report.per_document_segments.values()
                            for name in segments})
    header = ["id"]
    for metric in METRICS:
        short = _CSV_SHORT[metric]
        header += [f"{short}_r", f"{short}_p", f"{short}_f"]
    for name in segment_names:
        for metric in METRICS:
            header.append(f"seg_{name}_{_CSV_SHORT[metric]}_r")
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(header)
        for doc_id in sorted(report.per_document):
            triples = report.per_document[doc_id]
            row: list = [doc_id]
            for metric in METRICS:
                triple = triples[metric]
                row += [triple.recall, triple.precision, triple.f1]
            segments = report.per_document_segments.get(doc_id, {})
            for name in segment_names:
                for metric in METRICS:
                    if name in segments:
                        row.append(segments[name].recalls[metric])
                    else:
                        row.append("")
            writer.writerow(row)

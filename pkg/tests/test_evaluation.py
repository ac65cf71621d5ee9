"""Document scoring, aggregation, and report serialization."""

from __future__ import annotations

import csv
import json

import pytest

import oracles
from conftest import random_entry
from lexsumm.corpus import (CorpusEntry, Document, ReferenceSummary, tokenize)
from lexsumm.evaluation import (DocumentScores, aggregate,
                                evaluate_documentwide, evaluate_segmentwise,
                                score_document, write_csv, write_report)
from lexsumm.rouge import METRICS


def entry_for(doc_id, ref_texts, doc_text="The writ petition failed."):
    refs = [ReferenceSummary(text=t) if isinstance(t, str)
            else ReferenceSummary(segments=t) for t in ref_texts]
    return CorpusEntry(document=Document.from_text(doc_id, doc_text),
                       references=refs)


class TestScoreDocument:
    def test_perfect_summary(self):
        entry = entry_for("d1", ["The writ petition failed."])
        scored = score_document("The writ petition failed.", entry)
        assert scored.error is None
        for metric in METRICS:
            assert scored.triples[metric].f1 == pytest.approx(1.0)

    def test_matches_oracle_triples(self):
        entry = entry_for("d1", ["Costs follow the event in appeals."])
        summary = "The writ petition failed."
        scored = score_document(summary, entry)
        candidate = tokenize(summary)
        reference = tokenize("Costs follow the event in appeals.")
        expected = {
            "rouge1": oracles.rouge_n_triple(candidate, reference, 1),
            "rouge2": oracles.rouge_n_triple(candidate, reference, 2),
            "rougeL": oracles.rouge_l_triple(candidate, reference),
        }
        for metric in METRICS:
            assert scored.triples[metric].recall == pytest.approx(
                expected[metric][0], abs=1e-12)
            assert scored.triples[metric].f1 == pytest.approx(
                expected[metric][2], abs=1e-12)

    def test_multi_reference_scores_average(self):
        entry = entry_for("d1", ["The writ petition failed.",
                                 "Costs follow the event."])
        scored = score_document("The writ petition failed.", entry)
        one = score_document("The writ petition failed.",
                             entry_for("d1", ["The writ petition failed."]))
        two = score_document("The writ petition failed.",
                             entry_for("d1", ["Costs follow the event."]))
        for metric in METRICS:
            expected = (one.triples[metric].f1 + two.triples[metric].f1) / 2
            assert scored.triples[metric].f1 == pytest.approx(expected, abs=1e-12)

    def test_all_empty_references_become_error(self):
        entry = entry_for("d1", ["..."])
        scored = score_document("The writ petition failed.", entry)
        assert scored.error == "reference summary is empty"
        assert scored.triples is None

    def test_one_empty_reference_still_scores(self):
        entry = entry_for("d1", ["...", "The writ petition failed."])
        scored = score_document("The writ petition failed.", entry)
        assert scored.error is None


class TestEvaluateSegmentwise:
    def test_recall_only_per_segment(self):
        ref = ReferenceSummary(segments={
            "FAC": "The writ petition failed.",
            "Ratio": "Costs follow the event."})
        scores = evaluate_segmentwise("The writ petition failed.", ref)
        assert scores["FAC"].recalls["rouge1"] == pytest.approx(1.0)
        assert scores["Ratio"].recalls["rouge1"] < 1.0
        assert not scores["FAC"].empty_segment

    def test_empty_segment_scores_zero_and_flags(self):
        ref = ReferenceSummary(segments={"FAC": "The writ failed.",
                                         "PRE": "..."})
        scores = evaluate_segmentwise("The writ failed.", ref)
        assert scores["PRE"].empty_segment
        assert all(v == 0.0 for v in scores["PRE"].recalls.values())
        assert scores["PRE"].as_dict()["empty_segment"] is True

    def test_plain_reference_rejected(self):
        with pytest.raises(ValueError, match="segmented"):
            evaluate_segmentwise("Writ.", ReferenceSummary(text="Writ."))

    def test_segmentwise_averages_across_segmented_references(self):
        entry = CorpusEntry(
            document=Document.from_text("d1", "The writ petition failed."),
            references=[
                ReferenceSummary(segments={"FAC": "The writ petition failed."}),
                ReferenceSummary(segments={"FAC": "Costs follow the event."}),
            ])
        scored = score_document("The writ petition failed.", entry,
                                segmentwise=True)
        solo_a = evaluate_segmentwise("The writ petition failed.",
                                      entry.references[0])
        solo_b = evaluate_segmentwise("The writ petition failed.",
                                      entry.references[1])
        expected = (solo_a["FAC"].recalls["rouge1"]
                    + solo_b["FAC"].recalls["rouge1"]) / 2
        assert scored.segments["FAC"].recalls["rouge1"] == pytest.approx(
            expected, abs=1e-12)


class TestAggregate:
    def test_single_document_aggregate_is_identity(self):
        entry = entry_for("d1", ["The writ petition failed."])
        scored = score_document("The writ failed.", entry)
        report = aggregate([scored])
        for metric in METRICS:
            assert report.aggregate[metric] == scored.triples[metric]
        assert report.n_scored == 1
        assert report.n_errors == 0

    def test_aggregate_is_mean_of_per_document(self, rng):
        scores = []
        for i in range(6):
            entry = random_entry(rng, f"d{i}")
            summary = " ".join(s.raw for s in entry.document.sentences[:2])
            scores.append(score_document(summary, entry))
        report = aggregate(scores)
        for metric in METRICS:
            for component in ("recall", "precision", "f1"):
                values = [getattr(s.triples[metric], component) for s in scores]
                expected = sum(values) / len(values)
                actual = getattr(report.aggregate[metric], component)
                assert actual == pytest.approx(expected, abs=1e-9)

    def test_errors_excluded_from_means_but_listed(self):
        good = score_document("The writ failed.",
                              entry_for("d1", ["The writ failed."]))
        bad = DocumentScores(doc_id="d2", error="reference summary is empty")
        report = aggregate([good, bad])
        assert report.n_scored == 1
        assert report.n_errors == 1
        assert report.errors == {"d2": "reference summary is empty"}
        assert report.aggregate["rouge1"].f1 == pytest.approx(
            good.triples["rouge1"].f1)

    def test_documents_sorted_by_id(self):
        scores = [score_document("Writ.", entry_for(doc_id, ["Writ."]))
                  for doc_id in ("z9", "a1", "m5")]
        report = aggregate(scores)
        assert list(report.per_document) == ["a1", "m5", "z9"]

    def test_empty_input_rejected(self):
        with pytest.raises(ValueError):
            aggregate([])

    def test_all_errors_aggregate_to_zero(self):
        bad = DocumentScores(doc_id="d1", error="reference summary is empty")
        report = aggregate([bad])
        assert report.aggregate["rouge1"].f1 == 0.0
        assert report.n_scored == 0


class TestEvaluateDocumentwide:
    def test_unknown_id_becomes_error_entry(self):
        entries = [entry_for("d1", ["The writ failed."])]
        report = evaluate_documentwide(
            {"d1": "The writ failed.", "ghost": "Nothing."}, entries)
        assert report.errors == {"ghost": "document id not in corpus"}
        assert report.n_scored == 1
        assert report.aggregate["rouge1"].f1 == pytest.approx(1.0)

    def test_meta_passed_through(self):
        entries = [entry_for("d1", ["The writ failed."])]
        report = evaluate_documentwide({"d1": "The writ failed."}, entries,
                                       meta={"algorithm": "luhn"})
        assert report.meta == {"algorithm": "luhn"}


class TestSerialization:
    def _report(self, segmentwise=False):
        entries = [
            entry_for("d1", ["The writ petition failed."]),
            CorpusEntry(
                document=Document.from_text("d2", "Costs follow the event."),
                references=[ReferenceSummary(segments={
                    "FAC": "Costs follow the event.",
                    "Ratio": "The appeal was allowed."})]),
        ]
        summaries = {"d1": "The writ petition failed.",
                     "d2": "Costs follow the event."}
        return evaluate_documentwide(summaries, entries,
                                     segmentwise=segmentwise,
                                     meta={"algorithm": "luhn"})

    def test_report_json_is_deterministic(self, tmp_path):
        first = tmp_path / "a.json"
        second = tmp_path / "b.json"
        write_report(self._report(segmentwise=True), first)
        write_report(self._report(segmentwise=True), second)
        assert first.read_bytes() == second.read_bytes()

    def test_report_shape(self, tmp_path):
        path = tmp_path / "report.json"
        report = self._report(segmentwise=True)
        write_report(report, path)
        loaded = json.loads(path.read_text())
        # nothing is lost between the in-memory report and the file
        assert loaded == report.to_dict()
        assert set(loaded["per_document"]) == {"d1", "d2"}
        assert loaded["counts"] == {"scored": 2, "errors": 0}
        assert loaded["meta"]["algorithm"] == "luhn"
        triple = loaded["aggregate"]["rouge1"]
        assert set(triple) == {"recall", "precision", "f1"}
        assert loaded["per_document_segments"]["d2"]["FAC"]["rouge1"] == 1.0
        assert "segmentwise" in loaded

    def test_csv_shape(self, tmp_path):
        path = tmp_path / "report.csv"
        write_csv(self._report(segmentwise=True), path)
        with open(path, newline="") as handle:
            rows = list(csv.reader(handle))
        header = rows[0]
        assert header[0] == "id"
        assert header[1:10] == ["r1_r", "r1_p", "r1_f",
                                "r2_r", "r2_p", "r2_f",
                                "rl_r", "rl_p", "rl_f"]
        assert "seg_FAC_r1_r" in header
        assert [row[0] for row in rows[1:]] == ["d1", "d2"]
        # d1 has no segmented reference, so its segment cells are blank
        fac_column = header.index("seg_FAC_r1_r")
        assert rows[1][fac_column] == ""
        assert float(rows[2][fac_column]) == 1.0

    def test_csv_deterministic(self, tmp_path):
        first = tmp_path / "a.csv"
        second = tmp_path / "b.csv"
        write_csv(self._report(), first)
        write_csv(self._report(), second)
        assert first.read_bytes() == second.read_bytes()

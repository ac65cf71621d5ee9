"""Command line interface.

Subcommands cover the whole pipeline: ``summarize`` ranks and assembles
extractive summaries, ``make-labels`` derives extractive training labels
from abstractive references, ``chunk`` and ``make-pairs`` prepare long
documents for sequence-to-sequence training, ``evaluate`` scores summaries
against references, and ``score`` compares two text files directly.

Outputs are byte-deterministic for a given input and configuration: rows
are sorted by document id, JSON keys are sorted, and reports carry a
configuration hash instead of a timestamp unless ``--stamp`` is given.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone
from pathlib import Path

from sklearn.exceptions import NotFittedError

from . import __version__
from .chunking import allocate_budget, chunk_document, make_finetune_pairs
from .corpus import (CorpusFormatError, LegalDictionary, default_stopwords,
                     load_corpus, load_stopwords, target_length)
from .evaluation import evaluate_documentwide, write_csv, write_report
from .extractive import ALGORITHMS, make_ranker
from .labels import METHODS as LABEL_METHODS
from .labels import generate_labels
from .lexmetrics import SIMILARITY_METHODS, build_term_stats, load_embeddings
from .rouge import METRICS, score_pair
from .corpus import tokenize

_WORKER_STATE: dict = {}


def _init_worker(state: dict) -> None:
    _WORKER_STATE.clear()
    _WORKER_STATE.update(state)


def _parallel_map(worker, items, jobs: int, state: dict) -> list:
    """Map ``worker`` over ``items`` preserving order, forking when jobs > 1."""
    if jobs <= 1:
        _init_worker(state)
        return [worker(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs, initializer=_init_worker,
                             initargs=(state,)) as pool:
        return list(pool.map(worker, items))


def _config_hash(config: dict) -> str:
    canonical = json.dumps(config, sort_keys=True, ensure_ascii=False, default=str)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:16]


def _effective_config(command: str, args: argparse.Namespace) -> dict:
    # output destinations are not part of the computation, so the hash
    # stays stable no matter where results are written
    config = {"command": command, "tool_version": __version__}
    for key, value in sorted(vars(args).items()):
        if key in ("func", "dump_config", "out", "csv"):
            continue
        config[key] = str(value) if isinstance(value, Path) else value
    return config


def _write_jsonl(rows, path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        for row in rows:
            handle.write(json.dumps(row, ensure_ascii=False, sort_keys=True))
            handle.write("\n")


def _select_split(entries, split: str):
    if split == "all":
        return list(entries)
    return [entry for entry in entries if entry.split == split]


def _stats_entries(entries):
    """Documents that feed corpus term statistics: the train split, or
    every document when no entry is tagged train."""
    train = [entry.document for entry in entries if entry.split == "train"]
    return train if train else [entry.document for entry in entries]


def _resolve_stopwords(path: str | None) -> frozenset[str]:
    return load_stopwords(path) if path else default_stopwords()


# --------------------------------------------------------------------------
# summarize


def _summarize_worker(entry):
    ranker = _WORKER_STATE["ranker"]
    budget = target_length(entry)
    summary = ranker.summarize(entry.document, budget)
    return {"id": entry.document.id,
            "algorithm": _WORKER_STATE["algorithm"],
            "budget": budget,
            "sentence_indices": summary.sentence_indices,
            "summary": summary.text,
            "words": summary.words}


def _ranker_params(args: argparse.Namespace, stopwords: frozenset[str]) -> dict:
    params: dict = {"stopwords": stopwords}
    if args.algo == "luhn":
        params["theta"] = args.theta if args.theta is not None else 2
    elif args.algo == "lsa":
        params["k"] = args.k
    elif args.algo == "mmr":
        params["relevance_weight"] = args.relevance_weight
        params["paper_sign"] = args.mmr_paper_sign
    elif args.algo == "dsdr":
        params["ridge"] = args.ridge
    elif args.algo == "casesummarizer":
        if args.dictionary:
            params["dictionary"] = LegalDictionary.from_file(args.dictionary)
    return params


def _cmd_summarize(args: argparse.Namespace) -> int:
    entries = load_corpus(args.corpus)
    stopwords = _resolve_stopwords(args.stopwords)
    ranker = make_ranker(args.algo, **_ranker_params(args, stopwords))
    ranker.fit(_stats_entries(entries))
    selected = sorted(_select_split(entries, args.split),
                      key=lambda entry: entry.document.id)
    rows = _parallel_map(_summarize_worker, selected, args.jobs,
                         {"ranker": ranker, "algorithm": args.algo})
    _write_jsonl(rows, args.out)
    return 0


# --------------------------------------------------------------------------
# make-labels


def _labels_worker(entry):
    labels = generate_labels(entry.document, entry.references[0],
                             _WORKER_STATE["method"],
                             stats=_WORKER_STATE["stats"],
                             k=_WORKER_STATE["k"],
                             theta=_WORKER_STATE["theta"],
                             objective=_WORKER_STATE["objective"],
                             stopwords=_WORKER_STATE["stopwords"])
    return {"id": entry.document.id, "labels": labels,
            "method": _WORKER_STATE["method"]}


def _cmd_make_labels(args: argparse.Namespace) -> int:
    entries = load_corpus(args.corpus)
    stopwords = _resolve_stopwords(args.stopwords)
    stats = build_term_stats(_stats_entries(entries)) if args.method == "tfidf" else None
    selected = sorted(_select_split(entries, args.split),
                      key=lambda entry: entry.document.id)
    state = {"method": args.method, "stats": stats, "k": args.k,
             "theta": args.theta if args.theta is not None else 0.4,
             "objective": args.objective, "stopwords": stopwords}
    rows = _parallel_map(_labels_worker, selected, args.jobs, state)
    _write_jsonl(rows, args.out)
    return 0


# --------------------------------------------------------------------------
# chunk


def _cmd_chunk(args: argparse.Namespace) -> int:
    entries = load_corpus(args.corpus)
    selected = sorted(_select_split(entries, args.split),
                      key=lambda entry: entry.document.id)
    rows = []
    for entry in selected:
        chunks = chunk_document(entry.document, args.n_tokens)
        budgets = None
        if args.allocate and chunks:
            budgets = allocate_budget(target_length(entry), len(chunks))
        for chunk in chunks:
            row = {"doc_id": chunk.doc_id, "index": chunk.index,
                   "sentence_indices": chunk.sentence_indices,
                   "token_count": chunk.token_count, "text": chunk.text}
            if budgets is not None:
                row["budget"] = budgets[chunk.index]
            rows.append(row)
    _write_jsonl(rows, args.out)
    return 0


# --------------------------------------------------------------------------
# make-pairs


def _pairs_worker(entry):
    pairs = make_finetune_pairs(entry, _WORKER_STATE["n_tokens"],
                                _WORKER_STATE["similarity"],
                                by_role=_WORKER_STATE["by_role"],
                                drop_empty=_WORKER_STATE["drop_empty"],
                                table=_WORKER_STATE["table"],
                                stats=_WORKER_STATE["stats"],
                                stopwords=_WORKER_STATE["stopwords"],
                                sif_a=_WORKER_STATE["sif_a"])
    return [pair.as_dict() for pair in pairs]


def _cmd_make_pairs(args: argparse.Namespace) -> int:
    entries = load_corpus(args.corpus)
    stopwords = _resolve_stopwords(args.stopwords)
    table = None
    if args.similarity in ("mcs", "sif"):
        if not args.embeddings:
            print(f"error: --similarity {args.similarity} needs --embeddings "
                  "(word2vec text format)", file=sys.stderr)
            return 1
        table = load_embeddings(args.embeddings)
    stats = None
    if args.similarity in ("lexical", "sif"):
        stats = build_term_stats(_stats_entries(entries))
    selected = sorted(_select_split(entries, args.split),
                      key=lambda entry: entry.document.id)
    state = {"n_tokens": args.n_tokens, "similarity": args.similarity,
             "by_role": args.by_role, "drop_empty": args.drop_empty,
             "table": table, "stats": stats, "stopwords": stopwords,
             "sif_a": args.sif_a}
    nested = _parallel_map(_pairs_worker, selected, args.jobs, state)
    rows = [row for group in nested for row in group]
    _write_jsonl(rows, args.out)
    return 0


# --------------------------------------------------------------------------
# evaluate


def _read_summaries(path: str) -> tuple[dict[str, str], str]:
    summaries: dict[str, str] = {}
    algorithms: set[str] = set()
    with open(path, encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                row = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ValueError(f"{path}: line {line_number}: invalid JSON: {exc}")
            if not isinstance(row, dict) or not isinstance(row.get("id"), str) \
                    or not isinstance(row.get("summary"), str):
                raise ValueError(f"{path}: line {line_number}: "
                                 "expected an object with 'id' and 'summary'")
            if row["id"] in summaries:
                raise ValueError(f"{path}: line {line_number}: "
                                 f"duplicate summary id {row['id']!r}")
            summaries[row["id"]] = row["summary"]
            if isinstance(row.get("algorithm"), str):
                algorithms.add(row["algorithm"])
    if len(algorithms) == 1:
        algorithm = algorithms.pop()
    elif algorithms:
        algorithm = "mixed"
    else:
        algorithm = "unknown"
    return summaries, algorithm


def _cmd_evaluate(args: argparse.Namespace) -> int:
    entries = load_corpus(args.corpus)
    summaries, algorithm = _read_summaries(args.summaries)
    meta = {"algorithm": algorithm,
            "config_hash": _config_hash(_effective_config("evaluate", args)),
            "corpus_path": args.corpus,
            "tool_version": __version__}
    if args.stamp:
        meta["timestamp"] = datetime.now(timezone.utc).isoformat()
    report = evaluate_documentwide(summaries, entries,
                                   segmentwise=args.segmentwise, meta=meta)
    write_report(report, args.out)
    if args.csv:
        write_csv(report, args.csv)
    return 0


# --------------------------------------------------------------------------
# score


def _cmd_score(args: argparse.Namespace) -> int:
    candidate = tokenize(Path(args.candidate).read_text(encoding="utf-8"))
    reference = tokenize(Path(args.reference).read_text(encoding="utf-8"))
    for metric in METRICS:
        triple = score_pair(candidate, reference, metric)
        print(f"{metric} recall={triple.recall:.6f} "
              f"precision={triple.precision:.6f} f1={triple.f1:.6f}")
    return 0


# --------------------------------------------------------------------------
# parser


def _add_common(parser: argparse.ArgumentParser, *, split_default: str) -> None:
    parser.add_argument("--corpus", required=True, help="corpus JSONL file")
    parser.add_argument("--out", required=True, help="output file")
    parser.add_argument("--split", choices=("train", "test", "all"),
                        default=split_default,
                        help=f"corpus split to process (default: {split_default})")
    parser.add_argument("--stopwords", default=None,
                        help="stopword list file (default: packaged list)")
    parser.add_argument("--jobs", type=int, default=1,
                        help="parallel worker processes (default: 1)")
    parser.add_argument("--dump-config", action="store_true",
                        help="print the effective configuration and exit")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lexsumm",
        description="Extractive summarization toolkit for long legal documents")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    summarize = commands.add_parser(
        "summarize", help="rank sentences and assemble budgeted summaries")
    _add_common(summarize, split_default="test")
    summarize.add_argument("--algo", required=True, choices=sorted(ALGORITHMS),
                           help="ranking algorithm")
    summarize.add_argument("--theta", type=float, default=None,
                           help="luhn: minimum in-document frequency for a "
                                "significant word (default: 2)")
    summarize.add_argument("--k", type=int, default=None,
                           help="lsa: number of topics (default: all)")
    summarize.add_argument("--lambda", dest="relevance_weight", type=float,
                           default=0.5,
                           help="mmr: relevance weight in [0, 1] (default: 0.5)")
    summarize.add_argument("--mmr-paper-sign", action="store_true",
                           help="mmr: add the redundancy term instead of "
                                "subtracting it")
    summarize.add_argument("--ridge", type=float, default=0.1,
                           help="dsdr: ridge penalty (default: 0.1)")
    summarize.add_argument("--dictionary", default=None,
                           help="casesummarizer: legal phrase file "
                                "(default: packaged dictionary)")
    summarize.set_defaults(func=_cmd_summarize)

    make_labels = commands.add_parser(
        "make-labels", help="derive extractive labels from references")
    _add_common(make_labels, split_default="train")
    make_labels.add_argument("--method", required=True, choices=LABEL_METHODS,
                             help="label generator")
    make_labels.add_argument("--k", type=int, default=3,
                             help="sentences selected per reference sentence "
                                  "(default: 3)")
    make_labels.add_argument("--theta", type=float, default=None,
                             help="tfidf: similarity floor (default: 0.4)")
    make_labels.add_argument("--objective", choices=("f1", "recall"),
                             default="f1",
                             help="overlap objective for avr/maximal "
                                  "(default: f1)")
    make_labels.set_defaults(func=_cmd_make_labels)

    chunk = commands.add_parser(
        "chunk", help="cut documents into token-budgeted chunks")
    _add_common(chunk, split_default="all")
    chunk.add_argument("--n-tokens", type=int, default=1024,
                       help="chunk token limit (default: 1024)")
    chunk.add_argument("--allocate", action="store_true",
                       help="include each chunk's share of the reference-"
                            "derived word budget")
    chunk.set_defaults(func=_cmd_chunk)

    make_pairs = commands.add_parser(
        "make-pairs", help="build chunk/summary training pairs")
    _add_common(make_pairs, split_default="train")
    make_pairs.add_argument("--n-tokens", type=int, default=1024,
                            help="chunk token limit (default: 1024)")
    make_pairs.add_argument("--similarity", choices=SIMILARITY_METHODS,
                            default="mcs",
                            help="sentence similarity for the mapping "
                                 "(default: mcs)")
    make_pairs.add_argument("--embeddings", default=None,
                            help="word2vec text file (needed for mcs/sif)")
    make_pairs.add_argument("--sif-a", type=float, default=1e-3,
                            help="sif: frequency smoothing constant "
                                 "(default: 1e-3)")
    make_pairs.add_argument("--by-role", action="store_true",
                            help="partition by rhetorical role before chunking")
    make_pairs.add_argument("--drop-empty", action="store_true",
                            help="drop chunks that attract no reference sentence")
    make_pairs.set_defaults(func=_cmd_make_pairs)

    evaluate = commands.add_parser(
        "evaluate", help="score summaries against corpus references")
    evaluate.add_argument("--corpus", required=True, help="corpus JSONL file")
    evaluate.add_argument("--summaries", required=True,
                          help="summaries JSONL file (from summarize)")
    evaluate.add_argument("--out", required=True, help="report JSON file")
    evaluate.add_argument("--csv", default=None,
                          help="also write per-document rows as CSV")
    evaluate.add_argument("--segmentwise", action="store_true",
                          help="report recall against each reference segment")
    evaluate.add_argument("--stamp", action="store_true",
                          help="include a timestamp in the report meta block")
    evaluate.add_argument("--jobs", type=int, default=1,
                          help="parallel worker processes (default: 1)")
    evaluate.add_argument("--dump-config", action="store_true",
                          help="print the effective configuration and exit")
    evaluate.set_defaults(func=_cmd_evaluate)

    score = commands.add_parser(
        "score", help="score one candidate text against one reference text")
    score.add_argument("candidate", help="candidate text file")
    score.add_argument("reference", help="reference text file")
    score.set_defaults(func=_cmd_score)

    return parser


def run(argv=None) -> int:
    """Parse arguments and run one subcommand; returns the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "dump_config", False):
        config = _effective_config(args.command, args)
        config["config_hash"] = _config_hash(config)
        print(json.dumps(config, ensure_ascii=False, indent=2, sort_keys=True))
        return 0
    try:
        return args.func(args)
    except (CorpusFormatError, NotFittedError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())

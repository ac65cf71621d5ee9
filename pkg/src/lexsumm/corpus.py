"""Data model and ingestion for legal case corpora.

A corpus is a JSONL file with one document per line.  Each line carries a
document id, an optional train/test split tag, the document body (either a
pre-segmented ``sentences`` list or a raw ``text`` field), and one or two
reference summaries.  A reference summary is either a single block of text
(``{"full": ...}``) or a map from segment name to segment text
(``{"segments": {...}}``).

The module also owns the two text primitives everything else is built on:
:func:`tokenize` (lowercased alphanumeric runs) and
:func:`segment_sentences` (punctuation-based splitting with an
abbreviation guard), plus loaders for the stopword list, the legal phrase
dictionary, and the abbreviation list.
"""

from __future__ import annotations

import json
import re
import warnings
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

#: Rhetorical role labels accepted on sentences, in canonical order.
ROLE_LABELS: tuple[str, ...] = ("RPC", "FAC", "STA", "RLC", "Ratio", "PRE", "ARG")

#: Segment names accepted on segmented reference summaries: the rhetorical
#: roles themselves, the combined Ratio+PRE segment, and the three-part
#: appeal-judgment scheme.
REFERENCE_SEGMENT_NAMES: frozenset[str] = frozenset(ROLE_LABELS) | frozenset(
    {"Ratio+PRE", "Background", "Final Judgement", "Reasons"}
)

_TOKEN_RE = re.compile(r"[a-z0-9]+")

_SPLITS = ("train", "test")


class CorpusFormatError(ValueError):
    """Raised when a corpus file violates the expected JSONL schema."""

    def __init__(self, message: str, line_number: int | None = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class DataWarning(UserWarning):
    """Signals degenerate but tolerated data (empty documents, empty references)."""


def tokenize(text: str) -> list[str]:
    """Lowercase ``text`` and return the maximal alphanumeric runs.

    Every run of characters outside ``[a-z0-9]`` is a separator, so
    hyphenated words split and pure digit runs survive as tokens.
    """
    return _TOKEN_RE.findall(text.lower())


def word_count(text: str) -> int:
    """Count whitespace-delimited words, the unit for all length budgets."""
    return len(text.split())


# --------------------------------------------------------------------------
# resource loading


def _read_lines(path: Path) -> list[str]:
    lines = []
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            lines.append(line)
    return lines


def _resource_path(name: str) -> Path:
    return Path(str(resources.files("lexsumm.resources").joinpath(name)))


def load_stopwords(path: str | Path) -> frozenset[str]:
    """Load a stopword list (one word per line, tokenizer-normalized)."""
    words: set[str] = set()
    for line in _read_lines(Path(path)):
        words.update(tokenize(line))
    return frozenset(words)


def default_stopwords() -> frozenset[str]:
    """The packaged English stopword list."""
    global _DEFAULT_STOPWORDS
    if _DEFAULT_STOPWORDS is None:
        _DEFAULT_STOPWORDS = load_stopwords(_resource_path("stopwords.txt"))
    return _DEFAULT_STOPWORDS


_DEFAULT_STOPWORDS: frozenset[str] | None = None


def load_abbreviations(path: str | Path) -> frozenset[str]:
    """Load sentence-split abbreviation guards (one per line, verbatim)."""
    return frozenset(_read_lines(Path(path)))


def default_abbreviations() -> frozenset[str]:
    """The packaged legal-English abbreviation list."""
    global _DEFAULT_ABBREVIATIONS
    if _DEFAULT_ABBREVIATIONS is None:
        _DEFAULT_ABBREVIATIONS = load_abbreviations(_resource_path("abbreviations.txt"))
    return _DEFAULT_ABBREVIATIONS


_DEFAULT_ABBREVIATIONS: frozenset[str] | None = None


@dataclass
class LegalDictionary:
    """A set of legal phrases, each stored as a tuple of normalized tokens.

    Phrases are matched as contiguous token subsequences, so a two-word
    phrase hits wherever its two tokens appear adjacently in a sentence.
    """

    phrases: frozenset[tuple[str, ...]]

    def __post_init__(self):
        index: dict[str, list[tuple[str, ...]]] = {}
        for phrase in self.phrases:
            index.setdefault(phrase[0], []).append(phrase)
        self._by_first_token = index

    @classmethod
    def from_phrases(cls, phrases) -> LegalDictionary:
        normalized = set()
        for phrase in phrases:
            tokens = tuple(tokenize(phrase))
            if tokens:
                normalized.add(tokens)
        return cls(frozenset(normalized))

    @classmethod
    def from_file(cls, path: str | Path) -> LegalDictionary:
        return cls.from_phrases(_read_lines(Path(path)))

    def count_hits(self, tokens: list[str]) -> int:
        """Count phrase occurrences in ``tokens`` (every start offset counts)."""
        hits = 0
        for i, token in enumerate(tokens):
            for phrase in self._by_first_token.get(token, ()):
                if tuple(tokens[i : i + len(phrase)]) == phrase:
                    hits += 1
        return hits


def default_legal_dictionary() -> LegalDictionary:
    """The packaged legal phrase dictionary."""
    global _DEFAULT_DICTIONARY
    if _DEFAULT_DICTIONARY is None:
        _DEFAULT_DICTIONARY = LegalDictionary.from_file(_resource_path("legal_terms.txt"))
    return _DEFAULT_DICTIONARY


_DEFAULT_DICTIONARY: LegalDictionary | None = None


# --------------------------------------------------------------------------
# sentence segmentation


def segment_sentences(text: str, abbreviations: frozenset[str] | None = None) -> list[str]:
    """Split raw text into sentences.

    A split happens after ``.``, ``?`` or ``!`` when followed by whitespace
    and an uppercase letter or digit, unless the whitespace-delimited token
    ending at the period is a known abbreviation (``v.``, ``No.``, ...).
    Segments are stripped; their concatenation equals the input modulo
    whitespace.
    """
    if abbreviations is None:
        abbreviations = default_abbreviations()
    segments: list[str] = []
    start = 0
    for match in re.finditer(r"[.?!](?=\s+[A-Z0-9])", text):
        end = match.end()
        if text[match.start()] == ".":
            token = re.search(r"(\S+)\Z", text[:end])
            if token is not None:
                word = token.group(1)
                bare = word.lstrip("([\"'‘“")
                if word in abbreviations or bare in abbreviations:
                    continue
        piece = text[start:end].strip()
        if piece:
            segments.append(piece)
        start = end
    tail = text[start:].strip()
    if tail:
        segments.append(tail)
    return segments


# --------------------------------------------------------------------------
# data model


@dataclass
class Sentence:
    """One document sentence: position, verbatim text, and normalized tokens.

    ``role`` is a rhetorical role label from :data:`ROLE_LABELS` when the
    corpus provides one.  ``entity_count`` is an optional precomputed named
    entity count carried through from the corpus file.
    """

    index: int
    raw: str
    tokens: list[str] = field(default_factory=list)
    role: str | None = None
    entity_count: int | None = None

    @classmethod
    def from_text(cls, index: int, raw: str, role: str | None = None,
                  entity_count: int | None = None) -> Sentence:
        return cls(index=index, raw=raw, tokens=tokenize(raw), role=role,
                   entity_count=entity_count)

    @property
    def words(self) -> int:
        return word_count(self.raw)


@dataclass
class Document:
    """An ordered sequence of sentences with a stable id."""

    id: str
    sentences: list[Sentence] = field(default_factory=list)

    @classmethod
    def from_sentence_texts(cls, doc_id: str, texts, roles=None) -> Document:
        sentences = []
        for i, text in enumerate(texts):
            role = roles[i] if roles is not None else None
            sentences.append(Sentence.from_text(i, text, role=role))
        return cls(id=doc_id, sentences=sentences)

    @classmethod
    def from_text(cls, doc_id: str, text: str,
                  abbreviations: frozenset[str] | None = None) -> Document:
        return cls.from_sentence_texts(doc_id, segment_sentences(text, abbreviations))

    def __len__(self) -> int:
        return len(self.sentences)

    @property
    def words(self) -> int:
        return sum(s.words for s in self.sentences)

    def token_lists(self) -> list[list[str]]:
        return [s.tokens for s in self.sentences]

    def all_tokens(self) -> list[str]:
        tokens: list[str] = []
        for s in self.sentences:
            tokens.extend(s.tokens)
        return tokens


@dataclass
class ReferenceSummary:
    """A reference summary: either one text block or named segments.

    Exactly one of ``text`` and ``segments`` is set.  Segment names come
    from :data:`REFERENCE_SEGMENT_NAMES` and keep the order they had in the
    corpus file.
    """

    text: str | None = None
    segments: dict[str, str] | None = None

    def __post_init__(self):
        if (self.text is None) == (self.segments is None):
            raise ValueError("reference summary needs exactly one of text or segments")
        if self.segments is not None and not self.segments:
            raise ValueError("segmented reference summary has no segments")

    @classmethod
    def whole(cls, text: str) -> ReferenceSummary:
        return cls(text=text)

    @classmethod
    def segmented(cls, segments: dict[str, str]) -> ReferenceSummary:
        return cls(segments=dict(segments))

    @property
    def is_segmented(self) -> bool:
        return self.segments is not None

    def parts(self) -> list[str]:
        if self.text is not None:
            return [self.text]
        return list(self.segments.values())

    def full_text(self) -> str:
        return " ".join(self.parts())

    @property
    def words(self) -> int:
        return sum(word_count(part) for part in self.parts())


@dataclass
class CorpusEntry:
    """One corpus line: a document, its split tag, and its references."""

    document: Document
    references: list[ReferenceSummary]
    split: str = "test"


def target_length(entry: CorpusEntry) -> int:
    """Word budget for an extractive summary of ``entry``.

    The floor of the mean reference word count; with a single reference this
    is just its word count.  Words are whitespace-delimited, counted on the
    raw reference text.
    """
    counts = [ref.words for ref in entry.references]
    if not counts:
        raise ValueError(f"document {entry.document.id!r} has no reference summary")
    return sum(counts) // len(counts) if len(counts) > 1 else counts[0]


# --------------------------------------------------------------------------
# JSONL ingestion and emission


def _parse_reference(obj, line_number: int) -> ReferenceSummary:
    if not isinstance(obj, dict):
        raise CorpusFormatError("reference must be an object", line_number)
    has_full = "full" in obj
    has_segments = "segments" in obj
    if has_full == has_segments:
        raise CorpusFormatError(
            "reference needs exactly one of 'full' or 'segments'", line_number)
    if has_full:
        if not isinstance(obj["full"], str):
            raise CorpusFormatError("reference 'full' must be a string", line_number)
        return ReferenceSummary.whole(obj["full"])
    segments = obj["segments"]
    if not isinstance(segments, dict) or not segments:
        raise CorpusFormatError(
            "reference 'segments' must be a non-empty object", line_number)
    for name, value in segments.items():
        if name not in REFERENCE_SEGMENT_NAMES:
            raise CorpusFormatError(f"unknown segment name {name!r}", line_number)
        if not isinstance(value, str):
            raise CorpusFormatError(
                f"segment {name!r} text must be a string", line_number)
    return ReferenceSummary.segmented(segments)


def _parse_entity_count(value, line_number: int) -> int | None:
    if value is None:
        return None
    if isinstance(value, bool):
        raise CorpusFormatError("'entities' must be an integer or a list", line_number)
    if isinstance(value, int):
        if value < 0:
            raise CorpusFormatError("'entities' must be non-negative", line_number)
        return value
    if isinstance(value, list):
        return len(value)
    raise CorpusFormatError("'entities' must be an integer or a list", line_number)


def _parse_sentences(raw_sentences, line_number: int) -> list[Sentence]:
    sentences = []
    for i, obj in enumerate(raw_sentences):
        if not isinstance(obj, dict) or not isinstance(obj.get("text"), str):
            raise CorpusFormatError(
                f"sentence {i} must be an object with a 'text' string", line_number)
        role = obj.get("role")
        if role is not None and role not in ROLE_LABELS:
            raise CorpusFormatError(f"unknown role label {role!r}", line_number)
        entity_count = _parse_entity_count(obj.get("entities"), line_number)
        sentences.append(Sentence.from_text(i, obj["text"], role=role,
                                            entity_count=entity_count))
    return sentences


def parse_corpus_line(line: str, line_number: int = 0,
                      abbreviations: frozenset[str] | None = None) -> CorpusEntry:
    """Parse one JSONL corpus line into a :class:`CorpusEntry`."""
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise CorpusFormatError(f"invalid JSON: {exc}", line_number) from exc
    if not isinstance(obj, dict):
        raise CorpusFormatError("corpus line must be a JSON object", line_number)
    doc_id = obj.get("id")
    if not isinstance(doc_id, str) or not doc_id:
        raise CorpusFormatError("missing document 'id'", line_number)

    split = obj.get("split", "test")
    if split not in _SPLITS:
        raise CorpusFormatError(f"unknown split {split!r}", line_number)

    if "sentences" in obj:
        if not isinstance(obj["sentences"], list):
            raise CorpusFormatError("'sentences' must be a list", line_number)
        document = Document(id=doc_id,
                            sentences=_parse_sentences(obj["sentences"], line_number))
    elif "text" in obj:
        if not isinstance(obj["text"], str):
            raise CorpusFormatError("'text' must be a string", line_number)
        document = Document.from_text(doc_id, obj["text"], abbreviations)
    else:
        raise CorpusFormatError("document needs 'sentences' or 'text'", line_number)
    if not document.sentences:
        warnings.warn(f"document {doc_id!r} is empty", DataWarning, stacklevel=2)

    raw_refs = obj.get("references")
    if not isinstance(raw_refs, list) or not raw_refs:
        raise CorpusFormatError(f"document {doc_id!r} has no reference summary",
                                line_number)
    if len(raw_refs) > 2:
        raise CorpusFormatError(
            f"document {doc_id!r} has {len(raw_refs)} references (at most 2)",
            line_number)
    references = [_parse_reference(r, line_number) for r in raw_refs]
    for ref in references:
        if not ref.full_text().strip():
            warnings.warn(f"document {doc_id!r} has an empty reference",
                          DataWarning, stacklevel=2)
    return CorpusEntry(document=document, references=references, split=split)


def load_corpus(path: str | Path,
                abbreviations: frozenset[str] | None = None) -> list[CorpusEntry]:
    """Load a JSONL corpus file.

    Raises:
        CorpusFormatError: on malformed lines, carrying the 1-based line
            number in the message.
    """
    entries = []
    seen: set[str] = set()
    with open(path, encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            entry = parse_corpus_line(line, line_number, abbreviations)
            if entry.document.id in seen:
                raise CorpusFormatError(
                    f"duplicate document id {entry.document.id!r}", line_number)
            seen.add(entry.document.id)
            entries.append(entry)
    return entries


def entry_to_dict(entry: CorpusEntry) -> dict:
    """Canonical JSON object for a corpus entry (inverse of parsing)."""
    sentences = []
    for s in entry.document.sentences:
        obj: dict = {"text": s.raw}
        if s.role is not None:
            obj["role"] = s.role
        if s.entity_count is not None:
            obj["entities"] = s.entity_count
        sentences.append(obj)
    references = []
    for ref in entry.references:
        if ref.is_segmented:
            references.append({"segments": dict(ref.segments)})
        else:
            references.append({"full": ref.text})
    return {"id": entry.document.id, "split": entry.split,
            "sentences": sentences, "references": references}


def write_corpus(entries, path: str | Path) -> None:
    """Write entries as canonical JSONL (round-trips through load_corpus)."""
    with open(path, "w", encoding="utf-8") as handle:
        for entry in entries:
            handle.write(json.dumps(entry_to_dict(entry), ensure_ascii=False,
                                    sort_keys=True))
            handle.write("\n")

"""Configuration, data loading and corpus reports shared by CLI and service."""

from __future__ import annotations

import os
import re
import threading
from dataclasses import dataclass, field
from importlib import resources
from typing import Optional

from . import spell
from .lexicon import Lexicon, load_lexicon
from .morph import Marker, load_markers
from .spell import SuggestionMemory, Verdict
from .translit import (InvalidRomanInput, UnmappableCodepoint, is_kannada_text,
                       render, to_kannada, to_roman, tokenize)

Word = tuple[str, ...]

SCRIPTS = ("auto", "kannada", "roman")
FORMATS = ("text", "json")

_WORD_RE = re.compile(r"[ಀ-೿]+|[A-Za-z]+")


class ConfigError(ValueError):
    """Unusable configuration (bad path, unknown enum value)."""


def default_data_path(name: str) -> str:
    return str(resources.files("kanmorph").joinpath("data").joinpath(name))


def _default_state_dir() -> str:
    return os.path.join(os.path.expanduser("~"), ".kanmorph")


@dataclass
class Config:
    lexicon_path: str = field(default_factory=lambda: default_data_path("base_lexicon.txt"))
    user_lexicon_path: str = field(
        default_factory=lambda: os.path.join(_default_state_dir(), "user_lexicon.txt"))
    markers_path: str = field(default_factory=lambda: default_data_path("markers.txt"))
    memory_path: str = field(
        default_factory=lambda: os.path.join(_default_state_dir(), "memory.txt"))
    cache_path: Optional[str] = None
    script: str = "auto"
    output_format: str = "text"
    port: int = 8765

    def validate(self) -> None:
        if self.script not in SCRIPTS:
            raise ConfigError("unknown script %r" % (self.script,))
        if self.output_format not in FORMATS:
            raise ConfigError("unknown format %r" % (self.output_format,))
        if not os.path.exists(self.lexicon_path):
            raise ConfigError("lexicon file not found: %s" % (self.lexicon_path,))
        if not os.path.exists(self.markers_path):
            raise ConfigError("marker file not found: %s" % (self.markers_path,))


class Runtime:
    """Loaded pipeline: lexicon + markers + suggestion memory.

    Reads share the immutable snapshots; writes (add word, record choice)
    go through a single lock.
    """

    def __init__(self, config: Config):
        config.validate()
        self.config = config
        for path in (config.user_lexicon_path, config.memory_path):
            parent = os.path.dirname(path)
            if parent:
                os.makedirs(parent, exist_ok=True)
        self.lexicon: Lexicon = load_lexicon(
            config.lexicon_path, config.user_lexicon_path, config.cache_path)
        self.markers: list[Marker] = load_markers(config.markers_path)
        self.memory: SuggestionMemory = SuggestionMemory.load(config.memory_path)
        self.write_lock = threading.Lock()

    # -- word ingestion ----------------------------------------------------

    def parse_word(self, raw: str) -> tuple[Word, str]:
        """(phoneme tuple, source script) for one typed word."""
        raw = raw.strip()
        if self.config.script == "kannada" or (
                self.config.script == "auto" and is_kannada_text(raw)):
            return to_roman(raw), "kannada"
        return tokenize(raw), "roman"

    def display(self, word: Word, script: str) -> str:
        return to_kannada(word) if script == "kannada" else render(word)

    # -- single-word operations --------------------------------------------

    def check(self, word: Word) -> Verdict:
        return spell.check(word, self.lexicon, self.markers)

    def suggestions(self, word: Word) -> list[spell.Suggestion]:
        return spell.suggest(word, self.lexicon, self.markers, self.memory)

    def record_choice(self, misspelt: Word, chosen: Word) -> None:
        with self.write_lock:
            spell.record_choice(self.memory, misspelt, chosen)

    def add_word(self, word: Word) -> None:
        with self.write_lock:
            self.lexicon.add_word(word)

    # -- corpus mode ---------------------------------------------------------

    def corpus_report(self, text: str) -> dict:
        """Verdicts and suggestions for every word token in a text."""
        tokens = []
        counts = {"correct": 0, "inflected": 0, "sandhi": 0, "misspelt": 0}
        prev_end = 0
        byte_offset = 0
        for match in _WORD_RE.finditer(text):
            byte_offset += len(text[prev_end:match.start()].encode("utf-8"))
            record = self._token_record(match.group(), match.start(), match.end(),
                                        byte_offset)
            byte_offset += len(match.group().encode("utf-8"))
            prev_end = match.end()
            tokens.append(record)
            counts[record["bucket"]] += 1
        counts["total"] = len(tokens)
        return {"tokens": tokens, "counts": counts}

    def _token_record(self, raw: str, start: int, end: int, byte_offset: int) -> dict:
        script = "kannada" if is_kannada_text(raw) else "roman"
        record = {
            "raw": raw,
            "start": start,
            "end": end,
            "byte_offset": byte_offset,
            "script": script,
        }
        try:
            word = to_roman(raw) if script == "kannada" else tokenize(raw)
        except (UnmappableCodepoint, InvalidRomanInput) as exc:
            record.update(verdict="misspelt", bucket="misspelt",
                          error=str(exc), suggestions=[])
            return record
        verdict = self.check(word)
        record["roman"] = render(word)
        record["kannada"] = to_kannada(word)
        record["verdict"] = verdict.kind
        record["bucket"] = _BUCKET[verdict.kind]
        if verdict.kind == spell.CORRECT_SANDHI:
            record["split"] = split_payload(verdict.split)
        elif verdict.kind == spell.CORRECT_INFLECTED:
            record["analysis"] = analysis_payload(verdict.analysis)
        if not verdict.ok:
            record["suggestions"] = [suggestion_payload(s) for s in self.suggestions(word)]
        return record


_BUCKET = {
    spell.CORRECT: "correct",
    spell.CORRECT_INFLECTED: "inflected",
    spell.CORRECT_SANDHI: "sandhi",
    spell.MISSPELT: "misspelt",
}


def split_payload(result) -> dict:
    return {
        "prefix": render(result.prefix),
        "suffix": render(result.suffix),
        "prefix_kannada": to_kannada(result.prefix),
        "suffix_kannada": to_kannada(result.suffix),
        "rule": result.rule,
        "boundary_index": result.boundary_index,
    }


def analysis_payload(analysis) -> dict:
    return {
        "root": render(analysis.root),
        "root_kannada": to_kannada(analysis.root),
        "stripped": [
            {"form": render(item.form), "category": item.category, "rule": item.rule}
            for item in analysis.stripped
        ],
    }


def suggestion_payload(item) -> dict:
    return {
        "roman": render(item.candidate),
        "kannada": to_kannada(item.candidate),
        "provenance": item.provenance,
        "rule": item.rule,
        "rank": item.rank,
    }

"""Sandhi-aware spell checking and suggestion generation.

A word checks as correct when it is a lexicon member, an inflected form
the analyzer can reduce to a member, or a sandhi compound both of whose
parts validate.  For misspelt words, suggestions are generated per error
position: anywhere in a plain root, inside the suffix, inside the
prefix, or in the boundary material itself.  Every suggestion is at
token distance one and re-validates.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace
from typing import Optional

from . import morph, sandhi
from .lexicon import Lexicon, StorageError, token_distance
from .morph import Analysis, Marker
from .sandhi import SplitResult
from .translit import render

Word = tuple[str, ...]

CORRECT = "correct"
CORRECT_INFLECTED = "correct_inflected"
CORRECT_SANDHI = "correct_sandhi"
MISSPELT = "misspelt"


@dataclass(frozen=True)
class Verdict:
    kind: str
    analysis: Optional[Analysis] = None
    split: Optional[SplitResult] = None

    @property
    def ok(self) -> bool:
        return self.kind != MISSPELT


@dataclass(frozen=True)
class Suggestion:
    candidate: Word
    provenance: str  # root_edit | suffix_error | prefix_error | boundary_error
    rule: Optional[str] = None
    rank: int = -1


def suffix_validator(lex: Lexicon, markers: list[Marker]):
    """Suffix acceptance used throughout: member or analyzable inflection."""

    def validate(word: Word) -> bool:
        return lex.contains(word) or morph.analyze(word, lex, markers) is not None

    return validate


def check(word: Word, lex: Lexicon, markers: list[Marker]) -> Verdict:
    """Classify a word: member, inflected form, sandhi compound, or misspelt."""
    if not word:
        raise ValueError("cannot check an empty word")
    if lex.contains(word):
        return Verdict(CORRECT)
    analysis = morph.analyze(word, lex, markers)
    if analysis is not None:
        return Verdict(CORRECT_INFLECTED, analysis=analysis)
    splits = sandhi.split(word, lex, suffix_validator(lex, markers))
    if splits:
        return Verdict(CORRECT_SANDHI, split=splits[0])
    return Verdict(MISSPELT)


def suggest_root_edit(word: Word, lex: Lexicon) -> list[Suggestion]:
    """Lexicon members one token edit away from the whole word."""
    found = lex.within_distance_one(word) - {word}
    return [Suggestion(w, "root_edit") for w in sorted(found)]


def suggest_suffix_error(word: Word, lex: Lexicon, markers: list[Marker]) -> list[Suggestion]:
    """Repair splits with a valid prefix but an unrecognized suffix."""
    validate = suffix_validator(lex, markers)
    out: dict[Word, Suggestion] = {}
    for j in lex.expected_prefix_depths(word):
        window = word[j:j + 2]
        for cand in sandhi.reverse_candidates(window):
            if cand.consumed > len(window):
                continue
            prefix = word[:j] + cand.prefix_end
            suffix = cand.suffix_begin + word[j + cand.consumed:]
            if not prefix or not suffix:
                continue
            if not lex.contains(prefix):
                continue
            if validate(suffix):
                continue  # a valid split, not a near miss
            first = cand.suffix_begin[0] if cand.suffix_begin else None
            for repaired in lex.within_distance_one(suffix, first_token=first):
                _collect_joins(out, prefix, repaired, cand.rule, word, "suffix_error")
    return sorted(out.values(), key=lambda s: s.candidate)


def suggest_prefix_error(word: Word, lex: Lexicon, markers: list[Marker]) -> list[Suggestion]:
    """Repair splits anchored on a valid suffix found from the right."""
    validate = suffix_validator(lex, markers)
    out: dict[Word, Suggestion] = {}
    anchors = {len(word) - len(s) for s in lex.expected_suffixes(word)}
    for q in anchors:
        for start in (q - 1, q):
            if start < 1 or start >= len(word):
                continue
            window = word[start:start + 2]
            for cand in sandhi.reverse_candidates(window):
                if cand.consumed > len(window):
                    continue
                suffix = cand.suffix_begin + word[start + cand.consumed:]
                if not suffix or not validate(suffix):
                    continue
                failed = word[:start] + cand.prefix_end
                if not failed:
                    continue
                last = cand.prefix_end[-1] if cand.prefix_end else None
                for repaired in lex.within_distance_one(failed, last_token=last):
                    _collect_joins(out, repaired, suffix, cand.rule, word, "prefix_error")
    return sorted(out.values(), key=lambda s: s.candidate)


def suggest_boundary_error(word: Word, lex: Lexicon, markers: list[Marker]) -> list[Suggestion]:
    """Rebuild words whose boundary tokens themselves are corrupted."""
    out: dict[Word, Suggestion] = {}
    suffixes = lex.expected_suffixes(word)
    for prefix in lex.expected_prefixes(word):
        for suffix in suffixes:
            # joined length is len(p)+len(s)-2+len(boundary), boundary 1..3
            # tokens; one edit of slack against the input on top of that
            if not len(word) - 2 <= len(prefix) + len(suffix) <= len(word) + 2:
                continue
            try:
                outputs = sandhi.join(prefix, suffix)
            except ValueError:
                continue
            for joined, rule in outputs:
                if joined == word or token_distance(joined, word) > 1:
                    continue
                if joined not in out:
                    out[joined] = Suggestion(joined, "boundary_error", rule)
    return sorted(out.values(), key=lambda s: s.candidate)


def _collect_joins(out: dict[Word, Suggestion], prefix: Word, suffix: Word,
                   rule: str, word: Word, provenance: str) -> None:
    try:
        outputs = sandhi.join(prefix, suffix, rule)
    except ValueError:
        return
    for joined, _ in outputs:
        if joined == word or token_distance(joined, word) > 1:
            continue
        if joined not in out:
            out[joined] = Suggestion(joined, provenance, rule)


def suggest(word: Word, lex: Lexicon, markers: list[Marker],
            memory: Optional["SuggestionMemory"] = None) -> list[Suggestion]:
    """Ranked corrections for a misspelt word (empty for valid words).

    Groups are ordered root edits, suffix errors, prefix errors, boundary
    errors, alphabetical within each; a remembered pick for this exact
    misspelling is promoted to rank 0 while it is still producible.
    """
    if check(word, lex, markers).ok:
        return []
    merged: dict[Word, Suggestion] = {}
    for group in (
        suggest_root_edit(word, lex),
        suggest_suffix_error(word, lex, markers),
        suggest_prefix_error(word, lex, markers),
        suggest_boundary_error(word, lex, markers),
    ):
        for item in group:
            if item.candidate not in merged:
                merged[item.candidate] = item
    ordered = list(merged.values())
    if memory is not None:
        remembered = memory.get(render(word))
        if remembered is not None:
            pinned = [s for s in ordered if render(s.candidate) == remembered]
            if pinned:
                ordered.remove(pinned[0])
                ordered.insert(0, pinned[0])
    result = []
    for rank, item in enumerate(ordered):
        assert token_distance(item.candidate, word) <= 1
        result.append(replace(item, rank=rank))
    return result


class SuggestionMemory:
    """Last picked suggestion per misspelt word, persisted as TSV lines.

    The file is append-only ("misspelt<TAB>chosen", roman rendering);
    the last occurrence wins on load.
    """

    def __init__(self, path: Optional[str] = None):
        self.path = path
        self.choices: dict[str, str] = {}

    @classmethod
    def load(cls, path: str) -> "SuggestionMemory":
        mem = cls(path)
        if os.path.exists(path):
            with open(path, encoding="utf-8") as fh:
                for line in fh:
                    line = line.rstrip("\n")
                    if not line or "\t" not in line:
                        continue
                    misspelt, chosen = line.split("\t", 1)
                    mem.choices[misspelt] = chosen
        return mem

    def get(self, misspelt: str) -> Optional[str]:
        return self.choices.get(misspelt)

    def record(self, misspelt: str, chosen: str) -> None:
        if self.path:
            try:
                with open(self.path, "a", encoding="utf-8") as fh:
                    fh.write("%s\t%s\n" % (misspelt, chosen))
            except OSError as exc:
                raise StorageError(str(exc)) from exc
        self.choices[misspelt] = chosen


def record_choice(memory: SuggestionMemory, misspelt: Word, chosen: Word) -> SuggestionMemory:
    """Remember (and persist) the user's pick for a misspelling."""
    memory.record(render(misspelt), render(chosen))
    return memory

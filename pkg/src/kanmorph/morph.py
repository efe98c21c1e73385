"""Suffix-stripping morphological analysis.

Markers (case endings, plural and gender markers) are stripped from the
right edge of a word until the bare root remains, honouring the fixed
slot template [root][gender][plural][case ending] read right to left.
A marker may sit behind a sandhi at its junction; those junctions are
recognized by inverting the rule tables and the applied rule is recorded
so the analysis can be re-joined exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from . import sandhi
from .lexicon import Lexicon
from .sandhi import LOOPA_RESTORE, _AAGAMA_GLIDE, _FAMILY_OF, _GUNA, _VOICED, _VRDDHI
from .translit import VOWEL_SET, tokenize

Word = tuple[str, ...]

CATEGORIES = ("pratyaya", "plural", "gender")

# Stripping order is the template read right to left: once a plural is
# stripped no pratyaya may follow, once a gender marker is stripped
# nothing may follow.
_NEXT_ALLOWED = {
    "pratyaya": ("plural", "gender"),
    "plural": ("gender",),
    "gender": (),
}


@dataclass(frozen=True)
class Marker:
    form: Word
    category: str


@dataclass(frozen=True)
class StrippedMarker:
    form: Word
    category: str
    rule: Optional[str]  # sandhi rule at the junction, None for verbatim


@dataclass(frozen=True)
class Analysis:
    root: Word
    stripped: tuple[StrippedMarker, ...]  # outermost first


def load_markers(path: str) -> list[Marker]:
    """One "form<TAB>category" entry per line; file order is priority."""
    markers: list[Marker] = []
    seen = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split("\t") if "\t" in line else line.split()
            if len(parts) != 2 or parts[1] not in CATEGORIES:
                raise ValueError("bad marker entry at line %d: %r" % (lineno, line))
            form = tokenize(parts[0])
            if (form, parts[1]) in seen:
                continue
            seen.add((form, parts[1]))
            markers.append(Marker(form, parts[1]))
    return markers


def _junction_candidates(word: Word, form: Word) -> Iterator[tuple[Word, Optional[str]]]:
    """(stem, junction rule) readings of word as stem + form.

    Verbatim match first, then sandhi-mediated matches in rule priority
    order.  Stems are always strictly shorter than the word and never
    empty; loopa restoration tries u, a, i, e.
    """
    n, m = len(word), len(form)
    if n > m and word[n - m:] == form:
        yield word[:n - m], None
    first = form[0]
    tails: list[tuple[Word, Word, str]] = []  # (tail, prefix_end, rule)
    fam = _FAMILY_OF.get(first)
    if fam is not None:
        tail = (fam[1],) + form[1:]
        for pe in fam:
            tails.append((tail, (pe,), "savarNa_deergha"))
    if first in _GUNA:
        tail = (_GUNA[first],) + form[1:]
        for pe in ("a", "aa"):
            tails.append((tail, (pe,), "guNa"))
    if first in _VRDDHI:
        tail = (_VRDDHI[first],) + form[1:]
        for pe in ("a", "aa"):
            tails.append((tail, (pe,), "vRddhi"))
    if first in VOWEL_SET:
        for pe_fam, glide in ((("i", "ii"), "y"), (("u", "uu"), "v")):
            if first not in pe_fam:
                tail = (glide,) + form
                for pe in pe_fam:
                    tails.append((tail, (pe,), "yaN"))
    if first in _VOICED:
        tails.append(((_VOICED[first],) + form[1:], (), "aadeesha"))
    if first in VOWEL_SET:
        for pe, glide in _AAGAMA_GLIDE.items():
            tails.append(((pe, glide) + form, (pe,), "aagama"))
        for restored in LOOPA_RESTORE:
            tails.append((form, (restored,), "loopa"))
    tails.sort(key=lambda t: sandhi._RULE_INDEX[t[2]])
    for tail, prefix_end, rule in tails:
        k = len(tail)
        if n > k and word[n - k:] == tail:
            stem = word[:n - k] + prefix_end
            if 0 < len(stem) < n:
                yield stem, rule


def strip_one(word: Word, markers: list[Marker], lex: Lexicon,
              allowed: tuple[str, ...] = CATEGORIES) -> Optional[tuple[Word, Marker, Optional[str]]]:
    """First (stem, marker, junction rule) in marker priority order."""
    for marker in markers:
        if marker.category not in allowed:
            continue
        for stem, rule in _junction_candidates(word, marker.form):
            return stem, marker, rule
    return None


def analyze(word: Word, lex: Lexicon, markers: list[Marker]) -> Optional[Analysis]:
    """Strip markers until the residue is a lexicon member.

    Depth-first over the junction readings in priority order, so a
    junction whose first reading dead-ends still analyzes through a
    later reading.  None when no marker chain reaches a known root.
    """

    def rec(residue: Word, allowed: tuple[str, ...],
            stripped: tuple[StrippedMarker, ...]) -> Optional[Analysis]:
        for marker in markers:
            if marker.category not in allowed:
                continue
            for stem, rule in _junction_candidates(residue, marker.form):
                chain = stripped + (StrippedMarker(marker.form, marker.category, rule),)
                if lex.contains(stem):
                    return Analysis(stem, chain)
                deeper = rec(stem, _NEXT_ALLOWED[marker.category], chain)
                if deeper is not None:
                    return deeper
        return None

    if not word:
        return None
    return rec(word, CATEGORIES, ())


def reassemble(analysis: Analysis) -> Word:
    """Re-join the root with its markers, innermost first."""
    word = analysis.root
    for item in reversed(analysis.stripped):
        if item.rule is None:
            word = word + item.form
        else:
            outputs = sandhi.join(word, item.form, item.rule)
            word = outputs[0][0]
    return word


def extract_root(word: Word, lex: Lexicon, markers: list[Marker],
                 validator=None) -> Optional[Word]:
    """The bare lexicon stem behind a (possibly inflected) word.

    Lexicon members are their own root; otherwise markers are stripped;
    as a last resort the word is split as a compound of two roots and
    the primary prefix is returned.
    """
    if lex.contains(word):
        return word
    analysis = analyze(word, lex, markers)
    if analysis is not None:
        return analysis.root
    splits = sandhi.split(word, lex, validator)
    if splits:
        return splits[0].prefix
    return None

"""The seven-rule sandhi engine.

Four Sanskrit vowel rules (savarNa_deergha, guNa, vRddhi, yaN) and three
Kannada rules (loopa, aagama, aadeesha), usable forward (join two words)
and in reverse (explain the boundary tokens of a compound).  Three
splitting strategies are provided:

* split               expected-prefix walk combined with the reverse rule
                      base (the primary method)
* split_by_place      probe long-vowel and consonant-cluster positions
* split_prefix_suffix pair longest prefixes with longest suffixes and
                      verify the boundary between them
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .lexicon import Lexicon
from .translit import CONSONANT_SET, LONG_VOWELS, VOWEL_SET

Word = tuple[str, ...]

RULES = ("savarNa_deergha", "guNa", "vRddhi", "yaN", "aadeesha", "aagama", "loopa")
_RULE_INDEX = {name: i for i, name in enumerate(RULES)}

_SAVARNA_FAMILIES = (("a", "aa"), ("i", "ii"), ("u", "uu"), ("R", "RR"))
_FAMILY_OF = {tok: fam for fam in _SAVARNA_FAMILIES for tok in fam}
_GUNA = {"i": "ee", "ii": "ee", "u": "oo", "uu": "oo"}
_VRDDHI = {"e": "ai", "ee": "ai", "o": "au", "oo": "au"}
_YAN_GLIDE = {"i": "y", "ii": "y", "u": "v", "uu": "v"}
_VOICED = {"k": "g", "t": "d", "p": "b"}
_UNVOICED = {v: k for k, v in _VOICED.items()}
_AAGAMA_GLIDE = {
    "i": "y", "ii": "y", "e": "y", "ee": "y", "ai": "y",
    "a": "v", "aa": "v", "u": "v", "uu": "v", "o": "v", "oo": "v",
}
LOOPA_RESTORE = ("u", "a", "i", "e")


class RuleNotApplicable(ValueError):
    """join() was given a rule whose cases do not match the pair."""


@dataclass(frozen=True)
class SplitResult:
    prefix: Word
    suffix: Word
    rule: str
    boundary_index: int


@dataclass(frozen=True)
class ReverseCandidate:
    """One way a boundary window can be explained by a rule in reverse.

    prefix_end tokens are appended to the material left of the window;
    suffix_begin tokens replace the consumed window tokens at the start
    of the suffix.  Either may be empty (the constituent token survives
    in the word itself, e.g. the glide-deletion reading of aagama).
    """

    prefix_end: Word
    suffix_begin: Word
    rule: str
    consumed: int


def forward_cases(p_last: str, s_first: str) -> list[tuple[str, Word, bool]]:
    """(rule, boundary tokens, consumes prefix-final token) for a pair.

    Ordered by rule priority.  Empty when no rule applies.
    """
    out: list[tuple[str, Word, bool]] = []
    fam = _FAMILY_OF.get(p_last)
    if fam is not None and s_first in fam:
        out.append(("savarNa_deergha", (fam[1],), True))
    if p_last in ("a", "aa"):
        if s_first in _GUNA:
            out.append(("guNa", (_GUNA[s_first],), True))
        if s_first in _VRDDHI:
            out.append(("vRddhi", (_VRDDHI[s_first],), True))
    glide = _YAN_GLIDE.get(p_last)
    if glide is not None and s_first in VOWEL_SET and s_first not in _FAMILY_OF[p_last]:
        out.append(("yaN", (glide, s_first), True))
    if s_first in _VOICED:
        out.append(("aadeesha", (_VOICED[s_first],), False))
    if p_last in _AAGAMA_GLIDE and s_first in VOWEL_SET:
        out.append(("aagama", (p_last, _AAGAMA_GLIDE[p_last], s_first), True))
    if p_last in VOWEL_SET and s_first in VOWEL_SET:
        out.append(("loopa", (s_first,), True))
    return out


def join(prefix: Word, suffix: Word, rule: Optional[str] = None) -> list[tuple[Word, str]]:
    """All sandhi joins of the pair, or just the given rule's.

    Plain concatenation is never substituted: an empty list means no
    rule applies.  A named but inapplicable rule raises RuleNotApplicable.
    """
    if not prefix or not suffix:
        raise ValueError("prefix and suffix must be non-empty")
    cases = forward_cases(prefix[-1], suffix[0])
    if rule is not None:
        if rule not in RULES:
            raise RuleNotApplicable("unknown rule %r" % (rule,))
        cases = [c for c in cases if c[0] == rule]
        if not cases:
            raise RuleNotApplicable(
                "%s does not apply to %s + %s" % (rule, "".join(prefix), "".join(suffix))
            )
    out = []
    for name, boundary, consumes in cases:
        base = prefix[:-1] if consumes else prefix
        out.append((base + boundary + suffix[1:], name))
    return out


def reverse_candidates(boundary: Word) -> list[ReverseCandidate]:
    """Explain the first one or two tokens of a remainder word.

    Returns every (prefix_end, suffix_begin, rule) triple whose forward
    application produces the given window, deterministically ordered by
    rule priority, then longer prefix_end first.
    """
    if not boundary:
        return []
    t1 = boundary[0]
    t2 = boundary[1] if len(boundary) > 1 else None
    out: list[ReverseCandidate] = []
    fam = _FAMILY_OF.get(t1)
    if fam is not None and t1 == fam[1]:  # long vowel of its family
        for pe in fam:
            for sb in fam:
                out.append(ReverseCandidate((pe,), (sb,), "savarNa_deergha", 1))
    if t1 == "ee" or t1 == "oo":
        short = "i" if t1 == "ee" else "u"
        for pe in ("a", "aa"):
            for sb in (short, short * 2):
                out.append(ReverseCandidate((pe,), (sb,), "guNa", 1))
    if t1 == "ai" or t1 == "au":
        short = "e" if t1 == "ai" else "o"
        for pe in ("a", "aa"):
            for sb in (short, short * 2):
                out.append(ReverseCandidate((pe,), (sb,), "vRddhi", 1))
    if t1 == "y" or t1 == "v":
        fam = ("i", "ii") if t1 == "y" else ("u", "uu")
        for pe in fam:
            out.append(ReverseCandidate((pe,), (), "yaN", 1))
    if t1 in _UNVOICED:
        out.append(ReverseCandidate((), (_UNVOICED[t1],), "aadeesha", 1))
    if t2 is not None and t2 in _UNVOICED:
        out.append(ReverseCandidate((t1,), (_UNVOICED[t2],), "aadeesha", 2))
    if t1 in _AAGAMA_GLIDE and t2 == _AAGAMA_GLIDE[t1]:
        out.append(ReverseCandidate((t1,), (), "aagama", 2))
    if t1 == "y" or t1 == "v":
        out.append(ReverseCandidate((), (), "aagama", 1))
    if t1 in VOWEL_SET:
        for restored in LOOPA_RESTORE:
            out.append(ReverseCandidate((restored,), (t1,), "loopa", 1))
    out.sort(key=lambda c: (_RULE_INDEX[c.rule], -len(c.prefix_end),
                            c.prefix_end, c.suffix_begin))
    return out


def boundary_index(prefix: Word, rule: str) -> int:
    """Input position where the rule's boundary material begins."""
    return len(prefix) if rule == "aadeesha" else len(prefix) - 1


def _rejoins(prefix: Word, suffix: Word, rule: str, word: Word) -> bool:
    try:
        outputs = join(prefix, suffix, rule)
    except ValueError:
        return False
    return any(w == word for w, _ in outputs)


def _sorted_results(results: list[SplitResult]) -> list[SplitResult]:
    results.sort(key=lambda r: (-len(r.prefix), _RULE_INDEX[r.rule], r.prefix, r.suffix))
    return results


def split(word: Word, lex: Lexicon,
          validator: Optional[Callable[[Word], bool]] = None) -> list[SplitResult]:
    """Split a sandhi word via the expected-prefix walk.

    Expected prefixes are taken longest first; the prefix's final token
    is handed back to the remainder (it may have been altered by the
    sandhi), the remainder's first one or two tokens are explained via
    the reverse rule base, and a candidate is accepted when the rebuilt
    prefix is a lexicon member and the rebuilt suffix passes the
    validator (lexicon membership by default).  The first result is the
    primary split; an empty list means no sandhi was recognized.
    """
    if len(word) < 2:
        return []
    validate = validator if validator is not None else lex.contains
    seen: set[tuple[Word, Word, str]] = set()
    results: list[SplitResult] = []
    for j in lex.expected_prefix_depths(word):
        window = word[j:j + 2]
        for cand in reverse_candidates(window):
            if cand.consumed > len(window):
                continue
            prefix = word[:j] + cand.prefix_end
            suffix = cand.suffix_begin + word[j + cand.consumed:]
            if not prefix or not suffix:
                continue
            key = (prefix, suffix, cand.rule)
            if key in seen:
                continue
            if not lex.contains(prefix):
                continue
            if not _rejoins(prefix, suffix, cand.rule, word):
                continue
            if not validate(suffix):
                continue
            seen.add(key)
            results.append(SplitResult(prefix, suffix, cand.rule,
                                       boundary_index(prefix, cand.rule)))
    return _sorted_results(results)


def sandhi_points(word: Word) -> list[int]:
    """Positions of long vowels and of the first token of each cluster."""
    points = []
    for i, tok in enumerate(word):
        if tok in LONG_VOWELS:
            points.append(i)
        elif tok in CONSONANT_SET and i + 1 < len(word) and word[i + 1] in CONSONANT_SET:
            points.append(i)
    return points


def split_by_place(word: Word, lex: Lexicon) -> list[SplitResult]:
    """Baseline splitter: probe only deergha / ottakshara positions."""
    if len(word) < 2:
        return []
    probes: set[int] = set()
    for i in sandhi_points(word):
        probes.add(i)
        if word[i] in CONSONANT_SET:
            probes.add(i + 1)  # the cluster's second consonant
    seen: set[tuple[Word, Word, str]] = set()
    results: list[SplitResult] = []
    for j in sorted(probes):
        if j >= len(word):
            continue
        window = word[j:j + 2]
        for cand in reverse_candidates(window):
            if cand.consumed > len(window):
                continue
            prefix = word[:j] + cand.prefix_end
            suffix = cand.suffix_begin + word[j + cand.consumed:]
            if not prefix or not suffix:
                continue
            key = (prefix, suffix, cand.rule)
            if key in seen:
                continue
            if not lex.contains(prefix) or not lex.contains(suffix):
                continue
            if not _rejoins(prefix, suffix, cand.rule, word):
                continue
            seen.add(key)
            results.append(SplitResult(prefix, suffix, cand.rule,
                                       boundary_index(prefix, cand.rule)))
    return _sorted_results(results)


def split_prefix_suffix(word: Word, lex: Lexicon) -> list[SplitResult]:
    """Baseline splitter: pair longest prefixes with longest suffixes."""
    if len(word) < 2:
        return []
    seen: set[tuple[Word, Word, str]] = set()
    results: list[SplitResult] = []
    suffixes = lex.expected_suffixes(word)
    for prefix in lex.expected_prefixes(word):
        for suffix in suffixes:
            if not len(word) - 1 <= len(prefix) + len(suffix) <= len(word) + 1:
                continue
            try:
                outputs = join(prefix, suffix)
            except ValueError:
                continue
            for joined, rule in outputs:
                key = (prefix, suffix, rule)
                if joined == word and key not in seen:
                    seen.add(key)
                    results.append(SplitResult(prefix, suffix, rule,
                                               boundary_index(prefix, rule)))
    return _sorted_results(results)


def rule_table() -> list[tuple[str, str, str, str]]:
    """The frozen case tables as (rule, prefix_end, suffix_begin, boundary) rows.

    Set-valued cells use "|" alternatives; V stands for any vowel, with
    exclusions written V-{...}.  P repeats the matched prefix vowel.
    """
    rows = []
    for short, long_ in _SAVARNA_FAMILIES:
        pair = "%s|%s" % (short, long_)
        rows.append(("savarNa_deergha", pair, pair, long_))
    rows.append(("guNa", "a|aa", "i|ii", "ee"))
    rows.append(("guNa", "a|aa", "u|uu", "oo"))
    rows.append(("vRddhi", "a|aa", "e|ee", "ai"))
    rows.append(("vRddhi", "a|aa", "o|oo", "au"))
    rows.append(("yaN", "i|ii", "V-{i,ii}", "y V"))
    rows.append(("yaN", "u|uu", "V-{u,uu}", "v V"))
    rows.append(("aadeesha", "*", "k", "g"))
    rows.append(("aadeesha", "*", "t", "d"))
    rows.append(("aadeesha", "*", "p", "b"))
    rows.append(("aagama", "i|ii|e|ee|ai", "V", "P y V"))
    rows.append(("aagama", "a|aa|u|uu|o|oo", "V", "P v V"))
    rows.append(("loopa", "V", "V", "suffix V"))
    return rows

"""Lossless mapping between Kannada script and a roman phoneme alphabet.

Words are handled internally as tuples of roman phoneme tokens drawn from
a closed alphabet (one token per Kannada letter; aspirates and long vowels
are single tokens such as "kh" or "aa").  Three entry points:

* ``to_roman``    Kannada text -> phoneme tuple
* ``to_kannada``  phoneme tuple -> Kannada text (exact inverse)
* ``tokenize``    user-typed roman text -> phoneme tuple (greedy longest match)
"""

from __future__ import annotations

VOWELS = (
    "a", "aa", "i", "ii", "u", "uu", "R", "RR",
    "e", "ee", "ai", "o", "oo", "au",
)
LONG_VOWELS = frozenset({"aa", "ii", "uu", "RR", "ee", "oo", "ai", "au"})
MODIFIERS = ("M", "H")  # anusvara, visarga
CONSONANTS = (
    "k", "kh", "g", "gh", "ng",
    "c", "ch", "j", "jh", "ny",
    "T", "Th", "D", "Dh", "N",
    "t", "th", "d", "dh", "n",
    "p", "ph", "b", "bh", "m",
    "y", "r", "l", "v", "sh", "Sh", "s", "h", "L", "rZ", "Lz",
)
ALPHABET = VOWELS + MODIFIERS + CONSONANTS

VOWEL_SET = frozenset(VOWELS)
CONSONANT_SET = frozenset(CONSONANTS)
MODIFIER_SET = frozenset(MODIFIERS)

# Fixed token ids shared by every automaton in the package.
TOKEN_ID = {sym: i for i, sym in enumerate(ALPHABET)}

_INDEPENDENT = {
    "a": "ಅ", "aa": "ಆ", "i": "ಇ", "ii": "ಈ",
    "u": "ಉ", "uu": "ಊ", "R": "ಋ", "RR": "ೠ",
    "e": "ಎ", "ee": "ಏ", "ai": "ಐ", "o": "ಒ",
    "oo": "ಓ", "au": "ಔ",
}
# Dependent vowel signs; inherent "a" needs no sign.
_SIGN = {
    "aa": "ಾ", "i": "ಿ", "ii": "ೀ", "u": "ು",
    "uu": "ೂ", "R": "ೃ", "RR": "ೄ", "e": "ೆ",
    "ee": "ೇ", "ai": "ೈ", "o": "ೊ", "oo": "ೋ",
    "au": "ೌ",
}
_CONSONANT_GLYPH = {
    "k": "ಕ", "kh": "ಖ", "g": "ಗ", "gh": "ಘ", "ng": "ಙ",
    "c": "ಚ", "ch": "ಛ", "j": "ಜ", "jh": "ಝ", "ny": "ಞ",
    "T": "ಟ", "Th": "ಠ", "D": "ಡ", "Dh": "ಢ", "N": "ಣ",
    "t": "ತ", "th": "ಥ", "d": "ದ", "dh": "ಧ", "n": "ನ",
    "p": "ಪ", "ph": "ಫ", "b": "ಬ", "bh": "ಭ", "m": "ಮ",
    "y": "ಯ", "r": "ರ", "rZ": "ಱ", "l": "ಲ", "L": "ಳ",
    "v": "ವ", "sh": "ಶ", "Sh": "ಷ", "s": "ಸ", "h": "ಹ",
    "Lz": "ೞ",
}
VIRAMA = "್"
ANUSVARA = "ಂ"
VISARGA = "ಃ"

_GLYPH_TO_VOWEL = {g: t for t, g in _INDEPENDENT.items()}
_SIGN_TO_VOWEL = {g: t for t, g in _SIGN.items()}
_GLYPH_TO_CONSONANT = {g: t for t, g in _CONSONANT_GLYPH.items()}

_TWO_CHAR = frozenset(sym for sym in ALPHABET if len(sym) == 2)
_ONE_CHAR = frozenset(sym for sym in ALPHABET if len(sym) == 1)

_SKIPPED = " \t\r\n.,;:!?\"'()[]{}-_/\\|0123456789"


class UnmappableCodepoint(ValueError):
    """A codepoint inside a word has no chart entry."""

    def __init__(self, text: str, position: int):
        self.position = position
        super().__init__(
            "cannot map %r at position %d" % (text[position], position)
        )


class InvalidRomanInput(ValueError):
    """Roman input that cannot start a chart token."""

    def __init__(self, text: str, position: int):
        self.position = position
        super().__init__(
            "no phoneme token starts at position %d in %r" % (position, text)
        )


def token_kind(sym: str) -> str:
    """Return vowel | consonant | modifier for an alphabet token."""
    if sym in VOWEL_SET:
        return "vowel"
    if sym in CONSONANT_SET:
        return "consonant"
    if sym in MODIFIER_SET:
        return "modifier"
    raise ValueError("not an alphabet token: %r" % (sym,))


def render(word: tuple[str, ...]) -> str:
    """Plain concatenation of token symbols."""
    return "".join(word)


def tokenize(raw: str) -> tuple[str, ...]:
    """Split roman text into phoneme tokens, greedy longest match first."""
    out = []
    i = 0
    n = len(raw)
    while i < n:
        pair = raw[i:i + 2]
        if len(pair) == 2 and pair in _TWO_CHAR:
            out.append(pair)
            i += 2
        elif raw[i] in _ONE_CHAR:
            out.append(raw[i])
            i += 1
        else:
            raise InvalidRomanInput(raw, i)
    return tuple(out)


def to_roman(text: str) -> tuple[str, ...]:
    """Transliterate Kannada text into a phoneme tuple.

    Whitespace and punctuation contribute no tokens; any other codepoint
    without a chart entry raises UnmappableCodepoint.
    """
    out = []
    pending = None  # consonant waiting for its vowel / virama
    for pos, ch in enumerate(text):
        if ch in _GLYPH_TO_CONSONANT:
            if pending is not None:
                out.append(pending)
                out.append("a")
            pending = _GLYPH_TO_CONSONANT[ch]
        elif ch in _SIGN_TO_VOWEL:
            if pending is None:
                raise UnmappableCodepoint(text, pos)
            out.append(pending)
            out.append(_SIGN_TO_VOWEL[ch])
            pending = None
        elif ch == VIRAMA:
            if pending is None:
                raise UnmappableCodepoint(text, pos)
            out.append(pending)
            pending = None
        elif ch in _GLYPH_TO_VOWEL:
            if pending is not None:
                out.append(pending)
                out.append("a")
                pending = None
            out.append(_GLYPH_TO_VOWEL[ch])
        elif ch == ANUSVARA or ch == VISARGA:
            if pending is not None:
                out.append(pending)
                out.append("a")
                pending = None
            out.append("M" if ch == ANUSVARA else "H")
        elif ch in _SKIPPED:
            if pending is not None:
                out.append(pending)
                out.append("a")
                pending = None
        else:
            raise UnmappableCodepoint(text, pos)
    if pending is not None:
        out.append(pending)
        out.append("a")
    return tuple(out)


def to_kannada(word: tuple[str, ...]) -> str:
    """Render a phoneme tuple as Kannada script (inverse of to_roman)."""
    out = []
    prev_consonant = False
    for sym in word:
        if sym in CONSONANT_SET:
            if prev_consonant:
                out.append(VIRAMA)
            out.append(_CONSONANT_GLYPH[sym])
            prev_consonant = True
        elif sym in VOWEL_SET:
            if prev_consonant:
                if sym != "a":
                    out.append(_SIGN[sym])
                prev_consonant = False
            else:
                out.append(_INDEPENDENT[sym])
        elif sym in MODIFIER_SET:
            if prev_consonant:
                # bare consonant before a modifier keeps its virama
                out.append(VIRAMA)
                prev_consonant = False
            out.append(ANUSVARA if sym == "M" else VISARGA)
        else:
            raise ValueError("not an alphabet token: %r" % (sym,))
    if prev_consonant:
        out.append(VIRAMA)
    return "".join(out)


def is_kannada_text(text: str) -> bool:
    """True if the string contains any Kannada-block codepoint."""
    return any("ಀ" <= ch <= "೿" for ch in text)


def chart_rows() -> list[tuple[str, str]]:
    """(Kannada form, roman token) pairs for the whole alphabet.

    Vowels are shown as independent glyphs, consonants with their
    inherent vowel removed (bare glyph), modifiers as the combining sign.
    """
    rows = [(_INDEPENDENT[v], v) for v in VOWELS]
    rows.append((ANUSVARA, "M"))
    rows.append((VISARGA, "H"))
    rows.extend((_CONSONANT_GLYPH[c], c) for c in CONSONANTS)
    return rows

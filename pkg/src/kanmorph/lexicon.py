"""Word storage as minimal acyclic automatons over phoneme tokens.

A Lexicon pairs a forward automaton with one built over token-reversed
words (fast suffix search), plus a small mutable user word set that is
consulted in union with the frozen base.  Construction is the classic
incremental algorithm over sorted input with suffix sharing.
"""

from __future__ import annotations

import hashlib
import os
import struct
from array import array
from typing import Iterable, Iterator, Optional

from . import kernels
from .translit import ALPHABET, TOKEN_ID, tokenize

Word = tuple[str, ...]

_CACHE_MAGIC = b"KMLX"
_CACHE_VERSION = 2


class EmptyLexicon(ValueError):
    """Raised when building from an empty word set."""


def token_distance(a: Word, b: Word) -> int:
    """Levenshtein distance counted in whole phoneme tokens."""
    if a == b:
        return 0
    la, lb = len(a), len(b)
    if la > lb:
        a, b, la, lb = b, a, lb, la
    prev = list(range(la + 1))
    for j in range(1, lb + 1):
        cur = [j] + [0] * la
        bj = b[j - 1]
        for i in range(1, la + 1):
            cost = 0 if a[i - 1] == bj else 1
            cur[i] = min(prev[i] + 1, cur[i - 1] + 1, prev[i - 1] + cost)
        prev = cur
    return prev[la]


def trie_state_count(words: Iterable[Word]) -> int:
    """States a plain trie would need for the same set (incl. the root)."""
    prefixes = {()}
    for w in words:
        for i in range(1, len(w) + 1):
            prefixes.add(w[:i])
    return len(prefixes)


class _Node:
    __slots__ = ("edges", "final")

    def __init__(self):
        self.edges: dict[int, _Node] = {}
        self.final = False

    def signature(self, index: dict[int, int]) -> tuple:
        return (self.final,) + tuple(
            (label, index[id(child)]) for label, child in sorted(self.edges.items())
        )


class _DawgBuilder:
    """Incremental minimal-automaton construction over sorted input."""

    def __init__(self):
        self.root = _Node()
        self.previous: tuple[int, ...] = ()
        self.unchecked: list[tuple[_Node, int, _Node]] = []
        self.minimized: dict[tuple, _Node] = {}
        self.index: dict[int, int] = {}  # node id -> registry slot
        self.count = 0

    def insert(self, word: tuple[int, ...]) -> None:
        if word <= self.previous:
            raise ValueError("words must be inserted in strictly sorted order")
        common = 0
        for a, b in zip(word, self.previous):
            if a != b:
                break
            common += 1
        self._minimize(common)
        node = self.unchecked[-1][2] if self.unchecked else self.root
        for label in word[common:]:
            child = _Node()
            node.edges[label] = child
            self.unchecked.append((node, label, child))
            node = child
        node.final = True
        self.previous = word
        self.count += 1

    def _minimize(self, down_to: int) -> None:
        while len(self.unchecked) > down_to:
            parent, label, child = self.unchecked.pop()
            sig = child.signature(self.index)
            seen = self.minimized.get(sig)
            if seen is not None:
                parent.edges[label] = seen
            else:
                self.minimized[sig] = child
                self.index[id(child)] = len(self.index)

    def finish(self) -> "FrozenAutomaton":
        self._minimize(0)
        sig = self.root.signature(self.index)
        seen = self.minimized.get(sig)
        if seen is not None and seen is not self.root:
            root = seen
        else:
            root = self.root
        return FrozenAutomaton.from_root(root)


class FrozenAutomaton:
    """Flattened minimal acyclic DFA (root is state 0)."""

    def __init__(self, offsets: array, labels: array, targets: array, final: array):
        self.offsets = offsets
        self.labels = labels
        self.targets = targets
        self.final = final
        self.state_count = len(final)

    @classmethod
    def from_root(cls, root: _Node) -> "FrozenAutomaton":
        order: list[_Node] = []
        number: dict[int, int] = {}
        stack = [root]
        while stack:
            node = stack.pop()
            if id(node) in number:
                continue
            number[id(node)] = len(order)
            order.append(node)
            for _, child in sorted(node.edges.items(), reverse=True):
                if id(child) not in number:
                    stack.append(child)
        offsets = array("i", [0] * (len(order) + 1))
        labels = array("i")
        targets = array("i")
        final = array("b", [0] * len(order))
        for i, node in enumerate(order):
            final[i] = 1 if node.final else 0
            for label, child in sorted(node.edges.items()):
                labels.append(label)
                targets.append(number[id(child)])
            offsets[i + 1] = len(labels)
        return cls(offsets, labels, targets, final)

    def contains(self, ids) -> bool:
        return kernels.contains(self.offsets, self.labels, self.targets, self.final, ids)

    def within_one(self, ids) -> list[tuple[int, ...]]:
        return kernels.within_one(self.offsets, self.labels, self.targets, self.final, ids)

    def walk(self, ids) -> list[int]:
        """States along the path of ids from the root, root included.

        Stops at the first missing edge, so the result may be shorter
        than len(ids) + 1.
        """
        states = [0]
        state = 0
        for tok in ids:
            nxt = self._delta(state, tok)
            if nxt < 0:
                break
            states.append(nxt)
            state = nxt
        return states

    def _delta(self, state: int, tok: int) -> int:
        for e in range(self.offsets[state], self.offsets[state + 1]):
            if self.labels[e] == tok:
                return self.targets[e]
        return -1

    def edges(self, state: int) -> Iterator[tuple[int, int]]:
        for e in range(self.offsets[state], self.offsets[state + 1]):
            yield self.labels[e], self.targets[e]

    def is_final(self, state: int) -> bool:
        return bool(self.final[state])

    def iter_words(self) -> Iterator[tuple[int, ...]]:
        path: list[int] = []

        def rec(state) -> Iterator[tuple[int, ...]]:
            if self.final[state]:
                yield tuple(path)
            for label, target in self.edges(state):
                path.append(label)
                yield from rec(target)
                path.pop()

        yield from rec(0)


def _ids(word: Word) -> tuple[int, ...]:
    return tuple(TOKEN_ID[s] for s in word)


def _syms(ids) -> Word:
    return tuple(ALPHABET[i] for i in ids)


class Lexicon:
    """Frozen base automatons plus a small user-added word set."""

    def __init__(self, forward: FrozenAutomaton, reverse: FrozenAutomaton,
                 base_count: int, user_words: frozenset[Word] = frozenset(),
                 user_path: Optional[str] = None):
        self.forward = forward
        self.reverse = reverse
        self.base_count = base_count
        self.user_words = user_words
        self.user_path = user_path

    # -- membership ------------------------------------------------------

    def contains(self, word: Word) -> bool:
        if not word:
            return False
        if word in self.user_words:
            return True
        try:
            ids = _ids(word)
        except KeyError:
            return False
        return self.forward.contains(ids)

    def _base_contains_ids(self, ids) -> bool:
        return self.forward.contains(ids)

    # -- prefix / suffix search ------------------------------------------

    def member_prefixes(self, word: Word) -> list[Word]:
        """Lexicon members that are token prefixes of word, longest first."""
        out = []
        ids = _ids(word)
        states = self.forward.walk(ids)
        for depth in range(len(states) - 1, -1, -1):
            if self.forward.is_final(states[depth]) and depth > 0:
                out.append(word[:depth])
        for u in self.user_words:
            if len(u) <= len(word) and word[:len(u)] == u and u not in out:
                out.append(u)
        out.sort(key=len, reverse=True)
        return out

    def member_suffixes(self, word: Word) -> list[Word]:
        """Lexicon members that are token suffixes of word, longest first."""
        out = []
        ids = _ids(word)[::-1]
        states = self.reverse.walk(ids)
        for depth in range(len(states) - 1, -1, -1):
            if self.reverse.is_final(states[depth]) and depth > 0:
                out.append(word[len(word) - depth:])
        for u in self.user_words:
            if len(u) <= len(word) and word[len(word) - len(u):] == u and u not in out:
                out.append(u)
        out.sort(key=len, reverse=True)
        return out

    # -- relaxed walks used by the sandhi splitter -------------------------

    def expected_prefixes(self, word: Word) -> list[Word]:
        """Members whose all-but-last tokens literally prefix word.

        The member's final token may have been altered or absorbed by a
        sandhi, so it is not required to match word.  Longest first.
        """
        out = []
        ids = _ids(word)
        states = self.forward.walk(ids)
        for depth in range(min(len(states), len(word)) - 1, -1, -1):
            for label, target in self.forward.edges(states[depth]):
                if self.forward.is_final(target):
                    out.append(word[:depth] + (ALPHABET[label],))
        for u in self.user_words:
            if 0 < len(u) <= len(word) and word[:len(u) - 1] == u[:-1] and u not in out:
                out.append(u)
        out.sort(key=lambda w: (-len(w), w))
        return out

    def expected_suffixes(self, word: Word) -> list[Word]:
        """Members whose all-but-first tokens literally end word."""
        out = []
        ids = _ids(word)[::-1]
        states = self.reverse.walk(ids)
        for depth in range(min(len(states), len(word)) - 1, -1, -1):
            for label, target in self.reverse.edges(states[depth]):
                if self.reverse.is_final(target):
                    out.append((ALPHABET[label],) + word[len(word) - depth:])
        for u in self.user_words:
            if 0 < len(u) <= len(word) and word[len(word) - len(u) + 1:] == u[1:] \
                    and u not in out:
                out.append(u)
        out.sort(key=lambda w: (-len(w), w))
        return out

    def expected_prefix_depths(self, word: Word) -> list[int]:
        """Boundary positions implied by expected_prefixes, descending."""
        depths = {len(p) - 1 for p in self.expected_prefixes(word)}
        return sorted(depths, reverse=True)

    # -- approximate search ------------------------------------------------

    def within_distance_one(self, word: Word, first_token: Optional[str] = None,
                            last_token: Optional[str] = None) -> set[Word]:
        """Members at token Levenshtein distance <= 1 from word.

        first_token / last_token constrain the candidates' edge tokens
        (used by the spell checker's positional suggestion rules).
        """
        found = {_syms(ids) for ids in self.forward.within_one(_ids(word))}
        for u in self.user_words:
            if abs(len(u) - len(word)) <= 1 and token_distance(u, word) <= 1:
                found.add(u)
        if first_token is not None:
            found = {w for w in found if w and w[0] == first_token}
        if last_token is not None:
            found = {w for w in found if w and w[-1] == last_token}
        return found

    # -- growth ------------------------------------------------------------

    def add_word(self, word: Word) -> "Lexicon":
        """Add a word to the user lexicon and persist it; returns self."""
        if not word:
            raise ValueError("cannot add an empty word")
        if self.contains(word):
            return self
        if self.user_path:
            try:
                with open(self.user_path, "a", encoding="utf-8") as fh:
                    fh.write("".join(word) + "\n")
            except OSError as exc:
                raise StorageError(str(exc)) from exc
        self.user_words = self.user_words | {word}
        return self

    # -- reporting -----------------------------------------------------------

    @property
    def word_count(self) -> int:
        extra = sum(1 for u in self.user_words if not self.forward.contains(_ids(u)))
        return self.base_count + extra

    def stats(self) -> tuple[int, int, int]:
        return (self.word_count, self.forward.state_count, self.reverse.state_count)

    def iter_words(self) -> Iterator[Word]:
        for ids in self.forward.iter_words():
            yield _syms(ids)
        for u in sorted(self.user_words):
            if not self.forward.contains(_ids(u)):
                yield u


class StorageError(OSError):
    """A persistence write failed; in-memory state was not changed."""


def build_lexicon(words: Iterable[Word], user_path: Optional[str] = None) -> Lexicon:
    """Build forward and reverse automatons from a word set."""
    unique = {tuple(w) for w in words if w}
    if not unique:
        raise EmptyLexicon("lexicon needs at least one word")
    forward = _build_automaton(sorted(_ids(w) for w in unique))
    reverse = _build_automaton(sorted(_ids(w)[::-1] for w in unique))
    return Lexicon(forward, reverse, len(unique), frozenset(), user_path)


def _build_automaton(sorted_ids: list[tuple[int, ...]]) -> FrozenAutomaton:
    builder = _DawgBuilder()
    for ids in sorted_ids:
        builder.insert(ids)
    return builder.finish()


def read_word_file(path: str) -> list[Word]:
    """One romanized word per line; '#' comments and blank lines ignored."""
    words = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                words.append(tokenize(line))
    return words


def load_lexicon(path: str, user_path: Optional[str] = None,
                 cache_path: Optional[str] = None) -> Lexicon:
    """Load the base lexicon file, optionally via a compiled cache.

    The cache is invalidated by a content digest of the base file, so a
    stale cache is rebuilt; correctness never depends on it.
    """
    with open(path, "rb") as fh:
        raw = fh.read()
    digest = hashlib.sha1(raw).digest()
    lex = None
    if cache_path and os.path.exists(cache_path):
        lex = _load_cache(cache_path, digest)
    if lex is None:
        words = []
        for line in raw.decode("utf-8").splitlines():
            line = line.split("#", 1)[0].strip()
            if line:
                words.append(tokenize(line))
        lex = build_lexicon(words)
        if cache_path:
            _save_cache(cache_path, lex, digest)
    if user_path and os.path.exists(user_path):
        lex.user_words = frozenset(read_word_file(user_path))
    lex.user_path = user_path
    return lex


def _dump_automaton(auto: FrozenAutomaton) -> bytes:
    parts = [struct.pack("<II", auto.state_count, len(auto.labels))]
    for arr in (auto.offsets, auto.labels, auto.targets, auto.final):
        parts.append(arr.tobytes())
    return b"".join(parts)


def _read_automaton(buf: bytes, pos: int) -> tuple[FrozenAutomaton, int]:
    n_states, n_edges = struct.unpack_from("<II", buf, pos)
    pos += 8
    offsets = array("i")
    offsets.frombytes(buf[pos:pos + 4 * (n_states + 1)])
    pos += 4 * (n_states + 1)
    labels = array("i")
    labels.frombytes(buf[pos:pos + 4 * n_edges])
    pos += 4 * n_edges
    targets = array("i")
    targets.frombytes(buf[pos:pos + 4 * n_edges])
    pos += 4 * n_edges
    final = array("b")
    final.frombytes(buf[pos:pos + n_states])
    pos += n_states
    return FrozenAutomaton(offsets, labels, targets, final), pos


def _save_cache(path: str, lex: Lexicon, digest: bytes) -> None:
    blob = b"".join([
        _CACHE_MAGIC,
        struct.pack("<I", _CACHE_VERSION),
        digest,
        struct.pack("<I", lex.base_count),
        _dump_automaton(lex.forward),
        _dump_automaton(lex.reverse),
    ])
    tmp = path + ".tmp"
    with open(tmp, "wb") as fh:
        fh.write(blob)
    os.replace(tmp, path)


def _load_cache(path: str, digest: bytes) -> Optional[Lexicon]:
    try:
        with open(path, "rb") as fh:
            buf = fh.read()
        if buf[:4] != _CACHE_MAGIC:
            return None
        (version,) = struct.unpack_from("<I", buf, 4)
        if version != _CACHE_VERSION:
            return None
        if buf[8:28] != digest:
            return None
        (count,) = struct.unpack_from("<I", buf, 28)
        forward, pos = _read_automaton(buf, 32)
        reverse, _ = _read_automaton(buf, pos)
        return Lexicon(forward, reverse, count)
    except (OSError, struct.error):
        return None

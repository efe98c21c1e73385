"""Kannada morphological toolkit.

Transliteration between Kannada script and a roman phoneme alphabet,
a minimal acyclic automaton lexicon, rule-based sandhi joining and
splitting, suffix-stripping root extraction, and a sandhi-aware spell
checker with position-aware suggestions.
"""

from .kernels import active_backend
from .lexicon import (EmptyLexicon, Lexicon, StorageError, build_lexicon,
                      load_lexicon, read_word_file, token_distance,
                      trie_state_count)
from .morph import (Analysis, Marker, StrippedMarker, analyze, extract_root,
                    load_markers, reassemble, strip_one)
from .sandhi import (RULES, ReverseCandidate, RuleNotApplicable, SplitResult,
                     join, reverse_candidates, rule_table, sandhi_points,
                     split, split_by_place, split_prefix_suffix)
from .spell import (SuggestionMemory, Suggestion, Verdict, check,
                    record_choice, suffix_validator, suggest,
                    suggest_boundary_error, suggest_prefix_error,
                    suggest_root_edit, suggest_suffix_error)
from .translit import (ALPHABET, InvalidRomanInput, UnmappableCodepoint,
                       chart_rows, render, to_kannada, to_roman, token_kind,
                       tokenize)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]

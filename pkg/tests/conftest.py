import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for oracles.py

from kanmorph import build_lexicon, load_lexicon, load_markers, tokenize
from kanmorph.runtime import default_data_path

DATA_LEXICON = default_data_path("base_lexicon.txt")
DATA_MARKERS = default_data_path("markers.txt")


def T(text: str):
    return tokenize(text)


def make_lexicon(*words: str):
    return build_lexicon([tokenize(w) for w in words])


@pytest.fixture(scope="session")
def seed_lexicon():
    return load_lexicon(DATA_LEXICON)


@pytest.fixture(scope="session")
def markers():
    return load_markers(DATA_MARKERS)


@pytest.fixture(scope="session")
def seed_words(seed_lexicon):
    return sorted(seed_lexicon.iter_words())

import pytest

from framelens.corpus import load_corpus
from framelens.data import bundled_kb, fixture_paths, mini_corpus_paths
from framelens.syntax import analyze_corpus


@pytest.fixture(scope="session")
def kb():
    return bundled_kb()


@pytest.fixture(scope="session")
def mini(kb):
    corpus = load_corpus(*mini_corpus_paths(), kb=kb)
    return analyze_corpus(corpus, kb)


@pytest.fixture(scope="session")
def table2(kb):
    corpus = load_corpus(*fixture_paths("table2"), kb=kb)
    return analyze_corpus(corpus, kb)


@pytest.fixture(scope="session")
def fig1(kb):
    corpus = load_corpus(*fixture_paths("fig1"), kb=kb)
    return analyze_corpus(corpus, kb)

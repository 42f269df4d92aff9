import os

import pytest

from varlex import Annotator, Recognizer, load_genes, load_kb

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


def data_path(name: str) -> str:
    return os.path.join(DATA_DIR, name)


@pytest.fixture(scope="session")
def kb_path() -> str:
    return data_path("kb_braf.tsv")


@pytest.fixture(scope="session")
def genes_path() -> str:
    return data_path("genes.txt")


@pytest.fixture(scope="session")
def kb(kb_path):
    return load_kb(kb_path)


@pytest.fixture(scope="session")
def lexicon(genes_path):
    return load_genes(genes_path)


@pytest.fixture(scope="session")
def recognizer(lexicon):
    return Recognizer(lexicon)


@pytest.fixture()
def annotator(kb, lexicon):
    return Annotator(kb=kb, lexicon=lexicon)

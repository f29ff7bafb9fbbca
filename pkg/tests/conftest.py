import json
import sys
from pathlib import Path

import pytest

TESTS_DIR = Path(__file__).resolve().parent
sys.path.insert(0, str(TESTS_DIR))

DATA_DIR = TESTS_DIR / "data"


@pytest.fixture(scope="session")
def tate_corpus():
    return json.loads((DATA_DIR / "tate_corpus.json").read_text())


@pytest.fixture(scope="session")
def image_corpus():
    return json.loads((DATA_DIR / "image_corpus.json").read_text())


@pytest.fixture(autouse=True)
def _offline_env(monkeypatch):
    """Tests never touch the network unless they explicitly opt in."""
    monkeypatch.delenv("SHACLASS_OFFLINE", raising=False)
    monkeypatch.delenv("SHACLASS_CACHE_DIR", raising=False)

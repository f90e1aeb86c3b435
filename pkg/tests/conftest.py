from __future__ import annotations

from pathlib import Path

import pytest

from contractia import Graph, read_corpus

CORPUS_PATH = Path(__file__).resolve().parent.parent / "corpus" / "desk.g6"


@pytest.fixture(scope="session")
def corpus() -> list[tuple[int, Graph]]:
    return list(read_corpus(CORPUS_PATH))

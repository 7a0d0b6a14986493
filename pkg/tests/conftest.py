import json
from pathlib import Path
from typing import Any, Callable

import pytest

from precy_bench.core.config import Config
from precy_bench.models.algebra import PoissonAlgebra
from precy_bench.storage.codec import document_for
from precy_bench.storage.file_storage import FileStorage
from tests.fixtures import corpus


# Configuration fixtures
@pytest.fixture
def test_config(monkeypatch) -> Config:
    """Create a test configuration isolated from the environment."""
    for name in ("PRECY_BENCH_REPORT_FORMAT", "PRECY_BENCH_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    return Config(report_format="text", log_level="WARNING")


@pytest.fixture
def storage(test_config) -> FileStorage:
    """File storage over the test configuration."""
    return FileStorage(test_config)


# Corpus fixtures
@pytest.fixture
def nilpotent_pair() -> PoissonAlgebra:
    return corpus.nilpotent_pair()


@pytest.fixture
def odd_pair() -> PoissonAlgebra:
    return corpus.odd_pair()


@pytest.fixture
def broken_jacobi() -> PoissonAlgebra:
    return corpus.broken_jacobi()


# File fixtures
@pytest.fixture
def write_json(tmp_path) -> Callable[[str, Any], Path]:
    """Write a JSON document under tmp_path and return its path."""

    def write(name: str, data: Any) -> Path:
        path: Path = tmp_path / name
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(data, indent=2), encoding="utf-8")
        return path

    return write


@pytest.fixture
def zero_bracket_data() -> dict[str, Any]:
    """Minimal algebra file: one generator, everything zero."""
    return {
        "basis": [{"name": "x", "degree": 0}],
        "product": [],
        "differential": [],
        "d": 0,
    }


@pytest.fixture
def nilpotent_pair_data() -> dict[str, Any]:
    """The nilpotent pair with ⟨x,x⟩ = x⊗y - y⊗x as a bracket file."""
    return {
        "kind": "bracket",
        "schema_version": 1,
        "basis": [{"name": "x", "degree": 0}, {"name": "y", "degree": 0}],
        "product": [],
        "differential": [],
        "d": 0,
        "bracket": [
            {
                "args": ["x", "x"],
                "value": [
                    {"factors": ["x", "y"], "coeff": "1"},
                    {"factors": ["y", "x"], "coeff": "-1"},
                ],
            }
        ],
    }


@pytest.fixture
def nonzero_square_data() -> dict[str, Any]:
    """An A∞ file whose m_1 does not square to zero."""
    return {
        "kind": "ainfty",
        "basis": [
            {"name": "x", "degree": 0},
            {"name": "y", "degree": 1},
            {"name": "z", "degree": 2},
        ],
        "ops": {
            "1": [
                {"args": ["x"], "value": [{"factors": ["y"], "coeff": 1}]},
                {"args": ["y"], "value": [{"factors": ["z"], "coeff": 1}]},
            ]
        },
    }


@pytest.fixture
def save_corpus(storage, tmp_path) -> Callable[[str, Any], Path]:
    """Write a corpus object in its canonical file form under tmp_path."""

    def save(name: str, value: Any) -> Path:
        return storage.save(document_for(value), tmp_path / name)

    return save


@pytest.fixture
def identity_morphism_file(storage, save_corpus, write_json) -> Path:
    """Morphism file for the identity of the nilpotent pair."""
    source: Path = save_corpus("pair.json", corpus.nilpotent_pair())
    ref: dict[str, str] = storage.reference(source, source.parent).model_dump()
    return write_json(
        "identity.json",
        {
            "kind": "morphism",
            "source": ref,
            "target": ref,
            "map": [
                {"args": ["x"], "value": [{"factors": ["x"], "coeff": "1"}]},
                {"args": ["y"], "value": [{"factors": ["y"], "coeff": "1"}]},
            ],
        },
    )

import json

import pytest

from qcomb import corpus


@pytest.fixture(scope="session")
def corpus_files(tmp_path_factory):
    """All shipped programs written out as .qasm files in one directory."""
    root = tmp_path_factory.mktemp("corpus")
    (root / "entangler.qasm").write_text(corpus.source("entangler"))
    for name in corpus.PROGRAMS:
        (root / f"{name}.qasm").write_text(corpus.source(name))
        for level in corpus.FAULT_LEVELS:
            (root / f"{name}_fault_{level}.qasm").write_text(
                corpus.fault_source(name, level)
            )
    return root


@pytest.fixture
def write_config(tmp_path):
    """Write a run-config JSON into tmp_path and return its path."""

    def _write(name="config.json", **entries):
        path = tmp_path / name
        path.write_text(json.dumps(entries, indent=2))
        return path

    return _write

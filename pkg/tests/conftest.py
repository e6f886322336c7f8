import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from prymsearch.groups import load_catalog
from prymsearch.pipeline import bundled_catalog_path


@pytest.fixture(scope="session")
def catalog():
    return load_catalog(bundled_catalog_path())


@pytest.fixture(scope="session")
def catalog_path():
    return str(bundled_catalog_path())


@pytest.fixture(scope="session")
def annotations_path():
    p = Path(__file__).resolve().parents[1] / "src" / "prymsearch" / "data" / "annotations_small.json"
    return str(p)

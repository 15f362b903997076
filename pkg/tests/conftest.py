"""Shared fixtures; puts src/ on the import path like main.py does."""

import sys
from pathlib import Path

import pytest

BASE_DIR = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(BASE_DIR / "src"))

from common import settings as settings_module  # noqa: E402
from complexes.library import (  # noqa: E402
    boundary_of_simplex,
    bow_tie,
    bow_tie_subdivision,
    rp2_eleven,
    rp2_eleven_classes,
    rp2_six,
    triangle_subdivision,
)
from coloring.colorings import Coloring  # noqa: E402
from coxeter.system import CoxeterSystem  # noqa: E402


@pytest.fixture(autouse=True)
def restore_settings():
    """Tests may swap the process-wide settings; put them back afterwards."""
    saved = settings_module._settings
    yield
    settings_module._settings = saved


@pytest.fixture
def data_dir() -> Path:
    return BASE_DIR / "data"


@pytest.fixture
def tetrahedron_boundary():
    return boundary_of_simplex(3)


@pytest.fixture
def rp2():
    return rp2_six()


@pytest.fixture
def bowtie():
    return bow_tie()


@pytest.fixture
def bowtie_system():
    return CoxeterSystem.right_angled(bow_tie_subdivision())


@pytest.fixture
def triangle_system():
    return CoxeterSystem.right_angled(triangle_subdivision())


@pytest.fixture
def rp2_eleven_system():
    return CoxeterSystem.right_angled(rp2_eleven())


@pytest.fixture
def rp2_eleven_coloring():
    return Coloring.from_classes(rp2_eleven_classes())

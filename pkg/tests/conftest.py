"""Shared test fixtures for the nlie-toolkit test suite."""

from fractions import Fraction

import numpy as np
import pytest

from src.algebra.bialgebra import Bialgebra
from src.algebra.coalgebra import Comultiplication
from src.algebra.structure import StructureConstants
from src.catalog.canonical import all_labels, canonical_algebra, simple_an
from src.catalog.examples import example_bialgebra, example_coalgebra_top, example_three_deltas


# ---------------------------------------------------------------------------
# Algebras
# ---------------------------------------------------------------------------

@pytest.fixture
def a3():
    """The simple 3-Lie algebra A_3 on a 4-dimensional space."""
    return simple_an(3)


@pytest.fixture
def a4():
    return simple_an(4)


@pytest.fixture
def sl2_like():
    """A_2: the 3-dimensional simple Lie algebra [e_2,e_3]=e_1, [e_1,e_3]=e_2, [e_1,e_2]=e_3."""
    return simple_an(2, allow_lie=True)


@pytest.fixture
def heisenberg():
    """[e_1, e_2] = e_3 on a 3-dimensional space."""
    return StructureConstants(2, 3, {(1, 2): {3: 1}})


@pytest.fixture
def perturbed_a3():
    """A_3 with c^1_{123} = 1 added; breaks the fundamental identity."""
    entries = {key: vec for key, vec in simple_an(3).items()}
    entries[(1, 2, 3)] = (Fraction(1),) + entries[(1, 2, 3)][1:]
    return StructureConstants(3, 4, entries)


def canonical_cases(ns=(3, 4)):
    """(n, label) pairs for every canonical form at the given arities."""
    return [(n, label) for n in ns for label in all_labels(n)]


@pytest.fixture(params=canonical_cases((3,)), ids=lambda case: f"n{case[0]}-{case[1]}")
def canonical_n3(request):
    n, label = request.param
    return label, canonical_algebra(n, label)


# ---------------------------------------------------------------------------
# Coalgebras and bialgebras
# ---------------------------------------------------------------------------

@pytest.fixture
def top3():
    return example_coalgebra_top(3)


@pytest.fixture
def worked_example():
    """The (n+1)-dimensional worked bialgebra at n = 3."""
    return example_bialgebra(3)


@pytest.fixture
def perturbed_example(worked_example):
    """Worked example with x_1∧x_3∧x_4 added to Δ(x_1)."""
    images = {1: {(3, 2, 4): 1, (1, 3, 4): 1}, 3: {(1, 2, 4): 1}}
    return Bialgebra(worked_example.mu, Comultiplication.from_images(3, 4, images))


@pytest.fixture
def three_deltas():
    return example_three_deltas(3)


# ---------------------------------------------------------------------------
# Randomness
# ---------------------------------------------------------------------------

@pytest.fixture
def rng():
    return np.random.default_rng(2024)


# ---------------------------------------------------------------------------
# Config and files
# ---------------------------------------------------------------------------

@pytest.fixture
def tmp_config(tmp_path):
    """ConfigManager backed by a temp YAML file."""
    from src.core.config import ConfigManager
    cfg_path = tmp_path / "config.yaml"
    cfg = ConfigManager(config_path=str(cfg_path))
    return cfg


@pytest.fixture
def nlie_file(tmp_path):
    """Factory writing .nlie text into the temp directory and returning its path."""
    def write(text: str, name: str = "input.nlie") -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write


A3_TEXT = """nlie 1
# the simple 3-Lie algebra
name A_3
arity 3
dim 4
mu 2 3 4 : 1 = 1
mu 1 3 4 : 2 = 1
mu 1 2 4 : 3 = 1
mu 1 2 3 : 4 = 1
"""

WORKED_EXAMPLE_TEXT = """nlie 1
name worked example
arity 3
dim 4
mu 1 3 4 : 1 = 1
mu 2 3 4 : 2 = 1
delta 1 : 3 2 4 = 1
delta 3 : 1 2 4 = 1
"""

TOP3_TEXT = """nlie 1
arity 3
dim 4
delta 1 : 2 3 4 = 1
delta 2 : 1 3 4 = 1
delta 3 : 1 2 4 = 1
delta 4 : 1 2 3 = 1
"""

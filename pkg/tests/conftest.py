"""Shared fixtures: small corpus algebras over F_2 and their standard modules"""

from pathlib import Path

import numpy as np
import pytest
from loguru import logger as loguru_logger

from src.algebra import Algebra
from src.data.corpus import CorpusSpec
from src.modrep import ModuleRep, direct_sum, module_from_representation, standard_modules

CORPUS_DIR = Path(__file__).parent.parent / "data" / "corpus"


def build(entry: str, p: int = 2) -> Algebra:
    return CorpusSpec.parse(entry, p=p).build()


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return CORPUS_DIR


@pytest.fixture(scope="session")
def a2() -> Algebra:
    return build("A2")


@pytest.fixture(scope="session")
def a3z() -> Algebra:
    return build("A3Z")


@pytest.fixture(scope="session")
def loc2() -> Algebra:
    return build("LOC2")


@pytest.fixture(scope="session")
def n32() -> Algebra:
    return build("N32")


@pytest.fixture(scope="session")
def linear3() -> Algebra:
    return build("LinearA(3)")


@pytest.fixture(scope="session")
def std_a2(a2):
    return standard_modules(a2)


@pytest.fixture(scope="session")
def std_a3z(a3z):
    return standard_modules(a3z)


@pytest.fixture(scope="session")
def tstar(a3z) -> ModuleRep:
    """P1 ⊕ S1 ⊕ S3 over A3Z: τ-tilting but not 1-tilting"""
    return module_from_representation(
        a3z,
        {"1": 2, "2": 1, "3": 1},
        {"a": np.array([[1, 0]]), "b": np.array([[0]])},
        name="Tstar",
    )


@pytest.fixture(scope="session")
def apr_tilting(std_a2) -> ModuleRep:
    """P1 ⊕ S1 over A2"""
    return direct_sum(std_a2.projectives[0], std_a2.simples[0], name="P1⊕S1")


@pytest.fixture(autouse=True)
def _drop_loguru_sinks():
    """The CLI installs sinks on the captured stderr; remove them after each test"""
    yield
    loguru_logger.remove()

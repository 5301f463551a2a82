from fractions import Fraction

import pytest

from splitalg.model import LinearMap

from splitalg.constructions import averaging_quadri, dual_extension, induced_six
from splitalg.documents import Document, serialize_document
from splitalg.model import adjoint_representation, self_action
from splitalg.samples import (
    integration_map,
    one_dim_dendriform,
    truncated_polynomial_algebra,
    truncated_polynomial_dendriform,
)


def shift_map(n):
    """Multiplication by the generator on the truncated polynomial basis."""
    matrix = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n - 1):
        matrix[i + 1][i] = Fraction(1)
    return LinearMap(n, n, matrix)


@pytest.fixture(scope="session")
def poly():
    return truncated_polynomial_algebra()


@pytest.fixture(scope="session")
def integ():
    return integration_map()


@pytest.fixture(scope="session")
def dend():
    return truncated_polynomial_dendriform()


@pytest.fixture(scope="session")
def adjoint(dend):
    return adjoint_representation(dend)


@pytest.fixture(scope="session")
def quadri(dend):
    """Quadri-dendriform algebra induced by the identity averaging operator."""
    return averaging_quadri(dend, LinearMap.identity(dend.dimension))


@pytest.fixture(scope="session")
def six(dend):
    """Six-dendriform algebra from the dual extension of the main fixture."""
    act, proj = dual_extension(dend)
    return induced_six(act, proj)


@pytest.fixture(scope="session")
def sample_doc_path(tmp_path_factory, poly, integ, dend, adjoint):
    """A document holding the main fixtures, written once per session."""
    doc = Document(
        algebras={"poly": poly, "dend": dend},
        maps={"integrate": integ},
        representations={"adjoint": adjoint},
        actions={"self": self_action(dend)},
    )
    path = tmp_path_factory.mktemp("docs") / "sample.json"
    path.write_text(serialize_document(doc))
    return str(path)


@pytest.fixture(scope="session")
def broken_doc_path(tmp_path_factory):
    """Document whose algebra violates the dendriform axioms (a=b=1)."""
    doc = Document(algebras={"bad": one_dim_dendriform(1, 1)})
    path = tmp_path_factory.mktemp("docs") / "broken.json"
    path.write_text(serialize_document(doc))
    return str(path)

from fractions import Fraction

import pytest

from splitalg.constructions import (
    PreconditionFailure,
    action_semidirect,
    aguiar_dendriform,
    aguiar_diassociative,
    check_differential,
    differential_quadri,
    dual_extension,
    hemisemidirect,
    induced_quadri,
    induced_six,
    semidirect,
    sum_collapse_quadri,
    sum_collapse_six,
)
from splitalg.identities import check
from splitalg.linalg import basis_vector
from splitalg.model import LinearMap, SpecError, evaluate, self_action
from splitalg.operators import check_homomorphic_relative
from splitalg.samples import zero_algebra
from conftest import shift_map


def test_semidirect_blocks(adjoint, dend):
    sd = semidirect(adjoint)
    n = dend.dimension
    assert sd.dimension == 2 * n
    assert check(sd, "dendriform").ok
    # base x base lands in the base block
    p = evaluate(sd.op("prec"), basis_vector(2 * n, 0), basis_vector(2 * n, 1))
    assert all(e == 0 for e in p[n:])
    # module x module vanishes
    q = evaluate(sd.op("prec"), basis_vector(2 * n, n), basis_vector(2 * n, n + 1))
    assert all(e == 0 for e in q)


def test_hemisemidirect(adjoint):
    h = hemisemidirect(adjoint)
    assert h.dimension == 8
    report = check(h, "quadri")
    assert report.ok
    assert report.checked == 19 * 8**3


def test_action_semidirect(dend):
    asd = action_semidirect(self_action(dend))
    assert asd.dimension == 8
    assert check(asd, "dendriform").ok
    # module x module block is the target's own product, not zero
    n = dend.dimension
    v = evaluate(asd.op("prec"), basis_vector(8, n), basis_vector(8, n))
    assert any(e != 0 for e in v)


def test_aguiar_dendriform_formulas(poly, integ, dend):
    n = poly.dimension
    mul = poly.op("mul")
    for i in range(n):
        for j in range(n):
            ei, ej = basis_vector(n, i), basis_vector(n, j)
            assert dend.op("prec").coeffs[i][j] == evaluate(mul, ei, integ.apply(ej))
            assert dend.op("succ").coeffs[i][j] == evaluate(mul, integ.apply(ei), ej)


def test_aguiar_refuses_non_rota_baxter(poly):
    with pytest.raises(PreconditionFailure) as exc:
        aguiar_dendriform(poly, LinearMap.identity(poly.dimension))
    assert not exc.value.verdict.ok


def test_aguiar_diassociative(poly, integ):
    di = aguiar_diassociative(poly, shift_map(poly.dimension))
    assert check(di, "diassociative").ok
    # the integration map is Rota-Baxter but not averaging
    with pytest.raises(PreconditionFailure):
        aguiar_diassociative(poly, integ)


def test_induced_quadri_and_collapse(adjoint, quadri):
    report = check(quadri, "quadri")
    assert report.ok
    di = sum_collapse_quadri(quadri)
    assert check(di, "diassociative").ok
    # collapse really is the sum of the split pair
    pv, sv = quadri.op("prec_vdash"), quadri.op("succ_vdash")
    assert di.op("vdash") == pv + sv


def test_induced_quadri_refuses_bad_map(adjoint):
    n = adjoint.base.dimension
    bad = LinearMap(n, n, [[1 if (i, j) == (0, 1) else 0 for j in range(n)] for i in range(n)])
    with pytest.raises(PreconditionFailure):
        induced_quadri(adjoint, bad)


def test_dual_extension_and_six(dend, six):
    act, proj = dual_extension(dend)
    n = dend.dimension
    assert act.target.dimension == 2 * n
    assert check(act, "dend-action").ok
    assert check_homomorphic_relative(act, proj).ok
    # projection is the identity on degree 0 and kills the dual part
    zero = tuple([Fraction(0)] * n)
    for i in range(n):
        assert proj.apply(basis_vector(2 * n, i)) == basis_vector(n, i)
        assert proj.apply(basis_vector(2 * n, n + i)) == zero
    report = check(six, "six")
    assert report.ok
    assert report.checked == 25 * (2 * n) ** 3
    tri = sum_collapse_six(six)
    report = check(tri, "triassociative")
    assert report.ok
    assert report.checked == 11 * (2 * n) ** 3


def test_induced_six_refuses_bad_map(dend):
    act, proj = dual_extension(dend)
    # doubling the projection breaks the homomorphism equations
    doubled = LinearMap(
        proj.source_dim,
        proj.target_dim,
        [[2 * e for e in row] for row in proj.matrix],
    )
    with pytest.raises(PreconditionFailure):
        induced_six(act, doubled)


def test_differential_quadri(dend):
    n = dend.dimension
    zero = LinearMap.zero(n, n)
    assert check_differential(dend, zero).ok
    dq = differential_quadri(dend, zero)
    assert check(dq, "quadri").ok
    assert dq.op("prec_vdash").is_zero()
    # the identity is not a differential (d^2 = d != 0)
    verdict = check_differential(dend, LinearMap.identity(n))
    assert not verdict.ok
    with pytest.raises(PreconditionFailure):
        differential_quadri(dend, LinearMap.identity(n))


def test_differential_on_zero_algebra():
    """On an algebra with zero products any square-zero map is a
    differential, and the induced quadri algebra is zero."""
    z = zero_algebra(2, "dendriform")
    d = LinearMap(2, 2, [[0, 1], [0, 0]])
    assert check_differential(z, d).ok
    dq = differential_quadri(z, d)
    assert check(dq, "quadri").ok


def test_sum_collapse_requires_signature(dend):
    with pytest.raises(SpecError):
        sum_collapse_quadri(dend)
    with pytest.raises(SpecError):
        sum_collapse_six(dend)

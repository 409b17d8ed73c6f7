"""
Tests for root vectors, PBW bases and the straightening checks in A_1^(1).
"""
import re

import pytest

from src.algebra_core.qseries import LaurentPoly
from src.algebra_core.rootdata import Root, build_root_datum
from src.algebra_core.weyl import omega_word
from src.quantum.pbw import (
    PBWBasis,
    PBWIndex,
    check_frame,
    frame_beta,
    key_identity,
    p_tilde,
    pbw_indices_at_weight,
    precedes,
    real_root_vector,
    root_vector_norm_ok,
    schur_S,
    straightening,
)
from src.quantum.uplus import AlgElement, form, parse_element
from src.workbench_utils.errors import DomainError, NotComputableError

q = LaurentPoly.monomial(1)


@pytest.fixture(scope="module")
def a1():
    return build_root_datum("A1~1")


@pytest.fixture(scope="module")
def h(a1):
    return omega_word(a1)


def test_frame_bounds(h):
    check_frame(0, h)
    check_frame(1, h)
    check_frame(-1, h)
    with pytest.raises(DomainError):
        check_frame(2, h)


@pytest.mark.parametrize("k, coords", [(0, (0, 1)), (-1, (1, 2)), (1, (1, 0)), (2, (2, 1))])
def test_betas(h, k, coords):
    assert h.beta(k) == Root(coords)
    assert frame_beta(k, 0, h) == Root(coords)


def test_frame_one_shifts_roots(h):
    # in frame 1 the letter i_1 = 0 moves to the plus side
    assert frame_beta(1, 1, h) == Root((1, 0))
    assert frame_beta(0, 1, h) == Root((2, 1))


def test_simple_root_vectors(h):
    assert real_root_vector(0, h) == AlgElement.generator(1)
    assert real_root_vector(1, h) == AlgElement.generator(0)


@pytest.mark.parametrize("k", [-1, 0, 1, 2])
def test_root_vector_norm(h, k):
    assert root_vector_norm_ok(k, h)


def test_root_vector_weights(h, a1):
    for k in (-1, 2):
        x = real_root_vector(k, h)
        assert x.weights(2) == [h.beta(k).coords]


def test_far_root_vector_not_computable(h):
    with pytest.raises(NotComputableError):
        real_root_vector(-2, h)


@pytest.mark.parametrize("coords, count", [((1, 1), 2), ((1, 2), 3), ((2, 2), 6)])
def test_index_counts(h, coords, count):
    assert len(pbw_indices_at_weight(Root(coords), 0, h)) == count


def test_negative_weight_rejected(h):
    with pytest.raises(DomainError):
        pbw_indices_at_weight(Root((-1, 1)), 0, h)


def test_p_tilde_first(h, a1):
    expected = parse_element("E0*E1 - (q^-2)*E1*E0", a1)
    assert p_tilde(1, 1, h) == expected
    assert p_tilde(1, 0, h) == AlgElement.one()
    assert p_tilde(1, -1, h).is_zero()


def test_p_tilde_almost_unit(h, a1):
    x = p_tilde(1, 1, h)
    norm = form(x, x, a1)
    assert (norm - 1).ord_at_infinity() >= 1
    assert norm.value_at_infinity() == 1


def test_schur_determinants(h):
    p1, p2 = p_tilde(1, 1, h), p_tilde(1, 2, h)
    assert schur_S(((2,),), h) == p1 * p1 - p2
    assert schur_S(((1, 1),), h) == p2
    assert schur_S(((1, 1),), h, transpose=True) == p1 * p1 - p2
    with pytest.raises(DomainError):
        schur_S(((1,), (1,)), h)


def test_precedes():
    lower = PBWIndex((), ((1,),), 0)
    upper = PBWIndex(((0, 1), (1, 1)), ((),), 0)
    assert precedes(lower, upper)
    assert not precedes(upper, lower)
    assert not precedes(upper, upper)
    with pytest.raises(DomainError):
        precedes(lower, PBWIndex((), ((1,),), 1))


def test_index_weight_and_label(h):
    c = PBWIndex(((0, 1), (1, 1)), ((),), 0)
    assert c.weight(h) == Root((1, 1))
    assert c.label() == "E[0]^(1) S[[]] E[1]^(1)"
    assert c.to_json() == {"real": [[0, 1], [1, 1]], "c_zero": [[]], "p": 0}


@pytest.mark.parametrize("coords", [(1, 1), (1, 2), (2, 2)])
def test_almost_orthonormal(h, coords):
    try:
        basis = PBWBasis(Root(coords), 0, h)
    except NotComputableError as e:
        pytest.skip(str(e))
    assert basis.almost_orthonormal()


def test_expansion_recovers_basis_element(h):
    basis = PBWBasis(Root((1, 1)), 0, h)
    for c in basis.indices:
        assert basis.expand(basis.element(c)) == {c: 1}


@pytest.mark.parametrize("j1, j2", [(0, -1), (1, 2)])
def test_straightening_adjacent(h, j1, j2):
    report = straightening(j1, j2, h)
    assert report.coefficient == q ** 2 or report.coefficient == q ** -2
    assert report.others == {}
    assert report.between


def test_straightening_needs_same_side(h):
    with pytest.raises(DomainError):
        straightening(0, 1, h)
    with pytest.raises(DomainError):
        straightening(1, 1, h)


def test_key_identity_first(h):
    report = key_identity(1, 1, h)
    assert report.holds
    assert len(report.residual) == 1
    [value] = report.residual.values()
    assert value == -(q ** -2)


def test_key_identity_second(h):
    try:
        report = key_identity(1, 2, h)
    except NotComputableError as e:
        pytest.skip(str(e))
    assert report.holds


@pytest.fixture(scope="module")
def h_twisted():
    return omega_word(build_root_datum("A2~2"))


def test_twisted_delta_weight_space(h_twisted):
    # the short node contributes the rescaled imaginary factor
    basis = PBWBasis(Root((1, 2)), 0, h_twisted)
    assert len(basis) == 3
    assert len(pbw_indices_at_weight(Root((1, 2)), 0, h_twisted)) == 3
    assert basis.almost_orthonormal()


def test_a2_delta_root_vector_not_computable():
    h2 = omega_word(build_root_datum("A2~1"))
    message = "root vector for a0 + a2 (index 4) is not computable in frame 0"
    with pytest.raises(NotComputableError, match=re.escape(message)):
        PBWBasis(Root((1, 1, 1)), 0, h2)

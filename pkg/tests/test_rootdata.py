"""
Tests for affine root data.
"""
import random
from fractions import Fraction

import pytest

from src.algebra_core.rootdata import (
    AffineType,
    Root,
    Weight,
    _nullspace,
    _solve,
    build_root_datum,
    determinant,
    list_affine_types,
)
from src.workbench_utils.errors import DomainError

ALL_TYPES = [str(t) for t in list_affine_types(4)]


def test_catalogue_contents():
    assert "A1~1" in ALL_TYPES
    assert "A2~2" in ALL_TYPES
    assert "D4~3" in ALL_TYPES
    assert "G2~1" in ALL_TYPES
    assert "E6~1" not in ALL_TYPES


@pytest.mark.parametrize("name", ["A0~1", "B2~1", "C1~1", "D3~1", "E5~1", "A3~2", "X1~1", "A1"])
def test_invalid_types_rejected(name):
    with pytest.raises(DomainError):
        AffineType.parse(name)


@pytest.mark.parametrize("name", ALL_TYPES)
def test_datum_invariants(name):
    datum = build_root_datum(name)
    nodes = datum.nodes
    # marks span the right kernel, comarks the left kernel
    for i in nodes:
        assert sum(datum.cartan[i][j] * datum.marks[j] for j in nodes) == 0
        assert sum(datum.comarks[j] * datum.cartan[j][i] for j in nodes) == 0
    assert datum.marks[0] == 1
    for i in nodes:
        for j in nodes:
            assert datum.gram[i][j] == datum.gram[j][i]
    assert datum.gram_is_positive_definite()
    assert datum.coxeter == sum(datum.marks)
    assert datum.dual_coxeter == sum(datum.comarks)


@pytest.mark.parametrize("name", ALL_TYPES)
def test_delta_pairs_to_level(name):
    datum = build_root_datum(name)
    rng = random.Random(7)
    delta = datum.delta_weight()
    for _ in range(100):
        w = Weight(tuple(rng.randint(-4, 4) for _ in datum.nodes), Fraction(rng.randint(-3, 3)))
        assert datum.weight_pair(delta, w) == datum.level(w)


def test_a1_constants():
    datum = build_root_datum("A1~1")
    assert datum.cartan == ((2, -2), (-2, 2))
    assert datum.marks == (1, 1)
    assert datum.comarks == (1, 1)
    assert datum.d == 1


def test_a2_twisted_constants():
    datum = build_root_datum("A2~2")
    assert datum.cartan == ((2, -1), (-4, 2))
    assert datum.marks == (1, 2)
    assert datum.comarks == (2, 1)
    assert (datum.gram[0][0], datum.gram[1][1]) == (4, 1)
    assert datum.d == 2


def test_a2_delta_and_coxeter():
    datum = build_root_datum("A2~1")
    assert datum.delta == Root((1, 1, 1))
    assert datum.coxeter == datum.dual_coxeter == 3


def test_real_root_examples():
    a1 = build_root_datum("A1~1")
    assert a1.is_real_root(Root((1, 2)))
    assert not a1.is_real_root(Root((2, 2)))
    a4 = build_root_datum("A4~2")
    assert a4.is_real_root(a4.delta - a4.simple_root(2) * 2)


def test_d_alpha_examples():
    assert build_root_datum("A1~1").d_alpha(Root((0, 1))) == 1
    assert build_root_datum("A2~2").d_alpha(Root((1, 0))) == 2
    with pytest.raises(DomainError):
        build_root_datum("A1~1").d_alpha(Root((1, 1)))


@pytest.mark.parametrize("name", ["A1~1", "A2~1", "A2~2", "C2~1"])
def test_d_alpha_governs_delta_shifts(name):
    datum = build_root_datum(name)
    for alpha in datum.real_roots_up_to(3):
        d = datum.d_alpha(alpha)
        for m in range(5):
            shifted = alpha + datum.delta * m
            assert datum.is_real_root(shifted) == (m % d == 0), (str(alpha), m)


def test_enumerate_a1_cutoff_one():
    datum = build_root_datum("A1~1")
    entries = datum.enumerate_positive_roots(1)
    by_kind = {}
    for e in entries:
        by_kind.setdefault(e.kind, set()).add((e.root.coords, e.node))
    assert by_kind['R>'] == {((0, 1), None), ((1, 2), None)}
    assert by_kind['R<'] == {((1, 0), None)}
    assert by_kind['R0'] == {((1, 1), 1)}


def test_enumerate_a1_cutoff_zero():
    entries = build_root_datum("A1~1").enumerate_positive_roots(0)
    assert [(e.root.coords, e.kind) for e in entries] == [((0, 1), 'R>')]


def test_enumerate_a2_twisted_imaginary_nodes():
    datum = build_root_datum("A2~2")
    imaginary = [e for e in datum.enumerate_positive_roots(1) if e.kind == 'R0']
    assert [(e.root, e.node) for e in imaginary] == [(datum.delta, 1)]


def test_cl_projection():
    datum = build_root_datum("A2~1")
    assert datum.cl_project(datum.delta_weight()).is_zero()
    for i in datum.classical_nodes:
        assert datum.level(datum.level_zero_fundamental(i)) == 0
        assert datum.cl_project(datum.level_zero_fundamental(i)) == datum.cl_varpi(i)


def test_a_even_twisted_last_varpi():
    datum = build_root_datum("A2~2")
    varpi = datum.level_zero_fundamental(1)
    assert varpi.lam == (-1, 2)
    assert datum.level(varpi) == 0


def test_tilde_omega_duality():
    for name in ("A2~1", "C2~1", "A2~2", "D3~2"):
        datum = build_root_datum(name)
        for i in datum.classical_nodes:
            for j in datum.classical_nodes:
                value = datum.cl_pair(datum.cl_simple(j), datum.tilde_omega(i))
                assert value == (datum.d_i[i] if i == j else 0)


def test_section_lifts():
    datum = build_root_datum("A2~1")
    mu = datum.cl_varpi(1) * 2 - datum.cl_varpi(2)
    lifted = datum.section(mu)
    assert datum.cl_project(lifted) == mu
    assert datum.level(lifted) == 0
    with pytest.raises(DomainError):
        datum.section(mu, lift=lambda _: datum.fundamental_weight(0))


def test_determinant_is_exact():
    assert determinant([[2, -1], [-1, 2]]) == 3
    assert determinant([[Fraction(1, 2), 1], [1, 4]]) == Fraction(1)
    assert determinant([]) == 1
    assert isinstance(determinant([[3]]), Fraction)


def test_cartan_kernel_gives_marks():
    kernel = _nullspace(build_root_datum("A1~1").cartan)
    assert len(kernel) == 1
    assert kernel[0][0] == kernel[0][1]
    assert _nullspace([[1, 0], [0, 1]]) == []


def test_solve_rational_system():
    assert _solve([[2, 1, 3], [1, -1, 0]]) == [Fraction(1), Fraction(1)]
    assert _solve([[Fraction(1, 3), Fraction(1, 2)]]) == [Fraction(3, 2)]
    with pytest.raises(DomainError):
        _solve([[1, 2, 1], [2, 4, 3]])

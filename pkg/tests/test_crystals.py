"""
Tests for the column crystals B(W(varpi_i)) and their tensor products.
"""
from math import comb

import pytest

from src.algebra_core.rootdata import ClWeight, build_root_datum
from src.combinatorics.crystals import (
    AffineElement,
    ColumnCrystal,
    ColumnElement,
    TensorCrystal,
    TensorElement,
    build_BW,
    create_crystal,
    get_available_crystals,
    parse_lambda,
)
from src.workbench_utils.errors import DomainError, ExtremalSearchOverflow, UnsupportedTypeError


@pytest.fixture(scope="module")
def a1():
    return build_root_datum("A1~1")


@pytest.fixture(scope="module")
def a2():
    return build_root_datum("A2~1")


def col(*entries):
    return ColumnElement(tuple(entries))


def tensor(*columns):
    return TensorElement(tuple(col(*c) for c in columns))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_column_sizes(n):
    datum = build_root_datum(f"A{n}~1")
    for r in range(1, n + 1):
        assert len(ColumnCrystal(datum, r)) == comb(n + 1, r)


def test_column_operators(a2):
    b = ColumnCrystal(a2, 1)
    assert b.f(1, col(1)) == col(2)
    assert b.f(2, col(2)) == col(3)
    assert b.f(0, col(3)) == col(1)
    assert b.e(0, col(1)) == col(3)
    assert b.f(1, col(2)) is None
    assert b.promote(col(3)) == col(1)


def test_column_weights(a2):
    b = ColumnCrystal(a2, 2)
    assert b.weight(b.highest()) == a2.cl_varpi(2)
    assert b.hvalue(0, col(1, 3)) == 0
    assert b.hvalue(0, col(2, 3)) == 1


@pytest.mark.parametrize("n, r", [(1, 1), (2, 1), (2, 2), (3, 2)])
def test_column_axioms(n, r):
    assert ColumnCrystal(build_root_datum(f"A{n}~1"), r).check_axioms() == []


def test_column_length_checked(a2):
    with pytest.raises(DomainError):
        ColumnCrystal(a2, 3)


def test_signature_rule(a1):
    crystal = TensorCrystal(a1, (2,))
    x = tensor((1,), (1,))
    assert crystal.f(1, x) == tensor((2,), (1,))
    assert crystal.e(1, x) is None
    assert crystal.phi(1, x) == 2
    # a plus followed by a minus cancels
    y = tensor((1,), (2,))
    assert crystal.signature(1, y) == (None, None, 0, 0)
    z = tensor((2,), (1,))
    assert crystal.signature(1, z) == (0, 1, 1, 1)


@pytest.mark.parametrize("lam", [(1,), (2,), (3,)])
def test_tensor_a1(a1, lam):
    crystal = build_BW(a1, lam)
    assert len(crystal) == 2 ** lam[0]
    assert crystal.check_axioms() == []
    assert crystal.is_connected()
    assert crystal.character_is_symmetric()


@pytest.mark.parametrize("lam", [(1, 0), (0, 1), (1, 1), (2, 0), (2, 1), (3, 0)])
def test_tensor_a2(a2, lam):
    crystal = build_BW(a2, lam)
    assert len(crystal) == crystal.expected_size()
    assert crystal.check_axioms() == []
    assert crystal.is_connected()
    assert crystal.character_is_symmetric()


def test_classical_decomposition(a2):
    crystal = build_BW(a2, (1, 1))
    weights = crystal.classical_decomposition()
    assert len(weights) == 2
    assert ClWeight.of((1, 1)) in weights
    assert a2.cl_zero() in weights


@pytest.mark.parametrize("lam", [(1, 0), (0, 1)])
def test_simple_crystal_check(a2, lam):
    report = build_BW(a2, lam).simple_crystal_check()
    assert report["simple"]
    assert report["top_multiplicity"] == 1
    assert report["all_extremal"]


def test_simple_check_needs_fundamental(a2):
    with pytest.raises(DomainError):
        build_BW(a2, (1, 1)).simple_crystal_check()


def test_reflection_is_involution(a2):
    crystal = build_BW(a2, (1, 1))
    for x in crystal.elements():
        for i in a2.nodes:
            assert crystal.reflect(i, crystal.reflect(i, x)) == x


def test_unsupported_types():
    with pytest.raises(UnsupportedTypeError):
        build_BW(build_root_datum("C2~1"), (1, 0))
    with pytest.raises(UnsupportedTypeError):
        ColumnCrystal(build_root_datum("A2~2"), 1)


def test_affinization(a1):
    crystal = build_BW(a1, (1,))
    x = crystal.affinize(tensor((2,)))
    down = crystal.affine_f(0, x)
    assert down == AffineElement(tensor((1,)), (-1,))
    assert crystal.affine_e(0, down) == x
    assert crystal.affine_f(1, crystal.affinize(tensor((1,)))).z == (0,)
    shift = crystal.affine_weight(down) - crystal.affine_weight(crystal.affinize(tensor((1,))))
    assert shift == a1.delta_weight() * -1
    with pytest.raises(DomainError):
        crystal.affinize(tensor((1,)), z=(0, 0))


def test_registry(a2):
    assert {c.get_name() for c in get_available_crystals()} == {"column", "tensor"}
    assert isinstance(create_crystal("tensor", datum=a2, lam=(1, 0)), TensorCrystal)
    assert isinstance(create_crystal("Column", datum=a2, r=2), ColumnCrystal)
    with pytest.raises(DomainError):
        create_crystal("tableau", datum=a2)


def test_exports(a1):
    crystal = build_BW(a1, (1,))
    dot = crystal.to_dot()
    assert dot.startswith("digraph crystal {")
    assert '[label="1"]' in dot and '[label="0"]' in dot
    payload = crystal.to_json()
    assert payload["size"] == 2
    assert payload["name"] == "tensor"


def test_parse_lambda():
    assert parse_lambda("1", 3) == (1, 0, 0)
    assert parse_lambda("", 2) == (0, 0)
    with pytest.raises(DomainError):
        parse_lambda("1,2,3", 2)
    with pytest.raises(DomainError):
        parse_lambda("1,-1", 2)
    with pytest.raises(DomainError):
        parse_lambda("a", 2)


def test_extremal_factor_caps_search(a1, a2):
    crystal = build_BW(a2, (1, 0), extremal_factor=0)
    assert crystal.extremal_factor == 0
    with pytest.raises(ExtremalSearchOverflow):
        crystal.simple_crystal_check()
    x = crystal.elements()[0]
    assert crystal.is_extremal(x, factor=1)
    assert build_BW(a1, (1,)).is_extremal(tensor((1,)))

"""
Tests for the limit ring J_lambda, its distinguished involutions and cells.
"""
import random
from fractions import Fraction

import pytest

from src.algebra_core.rootdata import build_root_datum
from src.combinatorics.cells import (
    CellPartition,
    CellTriple,
    JRing,
    JRingElement,
    cell_partition,
    check_a_function,
    check_associativity,
    check_bicrystal_commutation,
    check_identity,
    check_unit_law,
    d_count,
    d_count_formula,
    d_set,
    jring_rows,
    require_conclusive,
)
from src.combinatorics.symfun import GProdRep, LaurentSchur
from src.workbench_utils.errors import DomainError, InconclusiveError, UnsupportedTypeError


@pytest.fixture(scope="module")
def a1():
    return build_root_datum("A1~1")


@pytest.fixture(scope="module")
def a2():
    return build_root_datum("A2~1")


@pytest.fixture(scope="module")
def small_ring(a1):
    return JRing(a1, (1,), 0, 1)


@pytest.mark.parametrize("name, lam, expected", [
    ("A1~1", (1,), 2),
    ("A1~1", (2,), 4),
    ("A2~1", (1, 1), 9),
    ("A2~1", (0, 2), 9),
    ("A3~1", (0, 1, 0), 6),
])
def test_d_count(name, lam, expected):
    datum = build_root_datum(name)
    assert d_count(datum, lam) == expected
    assert d_count_formula(datum.n, lam) == expected


def test_d_set_is_diagonal(a1):
    ds = d_set(a1, (2,))
    assert len(ds) == 4
    for t in ds:
        assert t.b == t.b_prime
        assert t.s.is_trivial()


def test_d_count_needs_type_a():
    with pytest.raises(UnsupportedTypeError):
        d_count(build_root_datum("A2~2"), (1,))


def test_truncated_basis_size(small_ring):
    assert len(small_ring.truncated_basis()) == 2 * 3 * 2


def test_product_rule(small_ring):
    b1, b2 = small_ring.crystal.elements()
    det = GProdRep((LaurentSchur(1, (1,)),))
    one = GProdRep.trivial((1,))
    x = small_ring.element(CellTriple(b1, det, b2))
    y = small_ring.element(CellTriple(b2, det, b1))
    assert (x * y).terms == {CellTriple(b1, GProdRep((LaurentSchur(1, (2,)),)), b1): 1}
    assert (x * x).is_zero()
    assert (x * 3).terms == {CellTriple(b1, det, b2): 3}
    assert (small_ring.element(CellTriple(b1, one, b1)) * x) == x


def test_ring_mismatch(small_ring, a1):
    other = JRing(a1, (2,), 0, 0)
    with pytest.raises(DomainError):
        small_ring.identity() * other.identity()


def test_associativity(small_ring):
    assert check_associativity(small_ring, small_ring.truncated_basis())


def test_unit_law(small_ring):
    assert check_unit_law(small_ring, small_ring.truncated_basis())


def test_identity(small_ring, a2):
    assert check_identity(small_ring, small_ring.truncated_basis())
    ring = JRing(a2, (1, 0), 0, 1)
    assert check_identity(ring, ring.truncated_basis()[:10])


def test_a_function_values(a1):
    ring = JRing(a1, (2,), 0, 0)
    values = {ring.a_function(t) for t in ring.truncated_basis()}
    assert values == {Fraction(0), Fraction(1)}
    for t in ring.d_set():
        mu = ring.crystal.weight(t.b_prime)
        assert (ring.a_function(t) == 0) == (mu == ring.dominant_weight() or mu == -ring.dominant_weight())


@pytest.mark.parametrize("name, lam", [("A1~1", (1,)), ("A1~1", (2,)), ("A2~1", (1, 1))])
def test_check_a_function(name, lam):
    assert check_a_function(JRing(build_root_datum(name), lam, 1, 1))


def test_v0_action_by_identity(small_ring):
    b = small_ring.crystal.elements()[0]
    v = {(b, GProdRep.trivial((1,))): 2}
    assert small_ring.v0_action(small_ring.identity(), v) == v


def test_v0_action_moves_vector(small_ring):
    b1, b2 = small_ring.crystal.elements()
    det = GProdRep((LaurentSchur(1, (1,)),))
    x = small_ring.element(CellTriple(b2, det, b1))
    out = small_ring.v0_action(x, {(b1, GProdRep.trivial((1,))): 1})
    assert out == {(b2, det): 1}


@pytest.mark.parametrize("which, inverse", [("f", "e"), ("e", "f"), ("f#", "e#"), ("e#", "f#")])
def test_bicrystal_operators_invert(small_ring, a1, which, inverse):
    for t in small_ring.truncated_basis():
        for i in a1.nodes:
            y = small_ring.bicrystal_ops(t, i, which)
            if y is not None:
                assert small_ring.bicrystal_ops(y, i, inverse) == t


@pytest.mark.parametrize("name, lam", [("A1~1", (1,)), ("A1~1", (2,)), ("A2~1", (1, 0))])
def test_bicrystal_operators_commute(name, lam):
    ring = JRing(build_root_datum(name), lam, 1, 1)
    basis = ring.truncated_basis()
    rng = random.Random(20240611)
    sample = [rng.choice(basis) for _ in range(200)]
    assert check_bicrystal_commutation(ring, sample)


def test_bicrystal_commutation_detects_interference(monkeypatch, a1):
    ring = JRing(a1, (1,), 0, 1)
    plain = ring.bicrystal_ops

    def entangled(t, i, which):
        if which.endswith('#'):
            return CellTriple(t.b, t.s, t.b)
        return plain(t, i, which)

    monkeypatch.setattr(ring, "bicrystal_ops", entangled)
    assert not check_bicrystal_commutation(ring, ring.truncated_basis())


def test_bicrystal_f0_twists_determinant(small_ring):
    b1, b2 = small_ring.crystal.elements()
    one = GProdRep.trivial((1,))
    t = CellTriple(b2, one, b1)
    moved = small_ring.bicrystal_ops(t, 0, "f")
    assert moved.b == b1
    assert moved.s == GProdRep((LaurentSchur(1, (-1,)),))
    with pytest.raises(DomainError):
        small_ring.bicrystal_ops(t, 0, "g")


def test_bicrystal_weight(small_ring):
    t = small_ring.d_set()[0]
    left, right = small_ring.bicrystal_weight(t)
    assert left == -right


@pytest.mark.parametrize("name, lam", [("A1~1", (1,)), ("A2~1", (1, 0))])
def test_cells_conclusive(name, lam):
    ring = JRing(build_root_datum(name), lam, 0, 2)
    partition = require_conclusive(cell_partition(ring))
    n_b = len(ring.crystal)
    assert len(partition.left) == n_b
    assert len(partition.right) == n_b
    assert len(partition.two_sided) == 1
    assert partition.to_json()["counts"] == {"left": n_b, "right": n_b, "two_sided": 1}


def test_cells_small_truncation_never_contradicts(a1):
    partition = cell_partition(JRing(a1, (2,), 1, 1))
    assert partition.status in ("conclusive", "inconclusive")


def test_require_conclusive():
    with pytest.raises(InconclusiveError):
        require_conclusive(CellPartition([], [], [], "inconclusive"))


def test_jring_rows(small_ring):
    rows = jring_rows(small_ring)
    assert rows[0] == ["x", "y", "z", "c"]
    assert len(rows) > 1
    assert all(row[3] == "1" for row in rows[1:])


def test_element_str(small_ring):
    assert str(JRingElement({}, (1,))) == "0"
    assert "1*" in str(small_ring.identity())

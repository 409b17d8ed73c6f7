"""
Tests for GL_m characters, Littlewood-Richardson products and Irr G_lambda.
"""
import pytest

from src.combinatorics.symfun import (
    GProdRep,
    LaurentSchur,
    Partition,
    complete,
    elementary,
    in_truncation,
    lr_coefficients,
    lr_multiply,
    oracle_multiply,
    parse_shape,
    partitions_of,
    pieri_connected,
    pieri_vertical,
    rep_multiply,
    truncated_irreps,
)
from src.workbench_utils.errors import DomainError, SizeGuardError


def S(m, *shape):
    return LaurentSchur.of(m, shape)


def test_partition_validation():
    assert Partition.of([2, 1, 0]).parts == (2, 1)
    assert Partition.of([3, 1]).transpose() == Partition((2, 1, 1))
    with pytest.raises(DomainError):
        Partition.of([1, 2])
    with pytest.raises(DomainError):
        Partition.of([2, 1]).padded(1)


def test_partitions_of():
    assert len(list(partitions_of(4))) == 5
    assert [p.parts for p in partitions_of(3, 1)] == [(3,)]
    assert [p.parts for p in partitions_of(0, 0)] == [()]


def test_lr_smallest():
    assert lr_multiply(S(2, 1), S(2, 1)) == {S(2, 1, 1): 1, S(2, 2): 1}
    assert lr_multiply(S(1, 1), S(1, 1)) == {S(1, 2): 1}


def test_lr_coefficient_with_multiplicity():
    out = lr_coefficients(Partition((2, 1)), Partition((2, 1)), 3)
    assert out[Partition((3, 2, 1))] == 2
    assert out[Partition((4, 2))] == 1


def test_lr_with_negative_powers():
    a = LaurentSchur(2, (1, -1))
    out = lr_multiply(a, a)
    assert out == {LaurentSchur(2, (0, 0)): 1, LaurentSchur(2, (1, -1)): 1, LaurentSchur(2, (2, -2)): 1}


@pytest.mark.parametrize("m, a, b", [
    (2, (1,), (1,)),
    (3, (2, 1), (1, 1)),
    (3, (2,), (2, 1)),
    (2, (1, -1), (2, 0)),
    (4, (1, 1), (1, 1)),
])
def test_oracle_agrees(m, a, b):
    x, y = S(m, *a), S(m, *b)
    assert lr_multiply(x, y) == oracle_multiply(x, y)


def test_oracle_size_guard():
    with pytest.raises(SizeGuardError):
        oracle_multiply(S(3, 5), S(3, 4))


def test_rank_mismatch():
    with pytest.raises(DomainError):
        lr_multiply(S(2, 1), S(3, 1))


def test_dimension_and_dual():
    assert S(3, 2, 1).dimension() == 8
    assert S(2, 1).dimension() == 2
    assert S(3, 2, 1).dual() == LaurentSchur(3, (0, -1, -2))
    assert LaurentSchur.determinant(3).dimension() == 1


def test_product_dimensions_add_up():
    x, y = S(3, 2, 1), S(3, 1)
    total = sum(c * s.dimension() for s, c in lr_multiply(x, y).items())
    assert total == x.dimension() * y.dimension()


def test_elementary_and_complete():
    assert elementary(3, 2) == S(3, 1, 1)
    assert complete(2, 3) == S(2, 3)
    with pytest.raises(DomainError):
        elementary(2, 3)


def test_pieri_vertical():
    assert pieri_vertical(S(2, 1), 1) == {S(2, 1, 1): 1, S(2, 2): 1}
    assert pieri_vertical(S(2, 1), 1) == lr_multiply(S(2, 1), elementary(2, 1))
    with pytest.raises(DomainError):
        pieri_vertical(S(2, 1), 3)


def test_polynomial_part():
    s = LaurentSchur(3, (1, 0, -2))
    assert s.det_power == -2
    assert s.polynomial_part() == Partition((3, 2))
    assert s.boxes() == 5


@pytest.mark.parametrize("lam, count", [((1,), 5), ((2,), 20)])
def test_truncated_irreps_counts(lam, count):
    reps = truncated_irreps(lam, 3, 2)
    assert len(reps) == count
    assert all(in_truncation(r, 3, 2) for r in reps)


def test_truncation_contains_trivial():
    reps = truncated_irreps((2, 1), 2, 1)
    assert GProdRep.trivial((2, 1)) in reps


def test_rep_multiply_componentwise():
    a = GProdRep((S(2, 1), S(1, 1)))
    out = rep_multiply(a, a)
    assert out == {
        GProdRep((S(2, 1, 1), S(1, 2))): 1,
        GProdRep((S(2, 2), S(1, 2))): 1,
    }
    assert sum(c * r.dimension() for r, c in out.items()) == a.dimension() ** 2
    with pytest.raises(DomainError):
        rep_multiply(a, GProdRep((S(2, 1),)))


@pytest.mark.parametrize("lam", [(1,), (2,), (1, 1)])
def test_pieri_connected(lam):
    assert pieri_connected(lam, 2, 1)


def test_parse_shape():
    assert parse_shape("2,1,0") == (2, 1, 0)
    assert parse_shape(" ") == ()
    with pytest.raises(DomainError):
        parse_shape("2,x")

"""
Tests for the extended affine Weyl group and the h-sequence.
"""
import random

import numpy as np
import pytest

from src.algebra_core.rootdata import Root, build_root_datum
from src.algebra_core.weyl import ExtendedWeylElement, _exact_inverse, diagram_automorphisms, omega_word
from src.workbench_utils.errors import DomainError


@pytest.fixture(scope="module")
def a1():
    return build_root_datum("A1~1")


@pytest.fixture(scope="module")
def a2():
    return build_root_datum("A2~1")


def test_simple_reflection_negates(a1):
    s1 = ExtendedWeylElement.simple_reflection(a1, 1)
    assert s1.act(a1.simple_root(1)) == Root((0, -1))
    assert (s1 * s1) == ExtendedWeylElement.identity(a1)


def test_delta_is_fixed(a2):
    rng = random.Random(3)
    for _ in range(20):
        word = [rng.choice(a2.nodes) for _ in range(rng.randint(0, 6))]
        w = ExtendedWeylElement.from_word(a2, word)
        assert w.act(a2.delta) == a2.delta


def test_identity_decomposition(a2):
    e = ExtendedWeylElement.identity(a2)
    assert e.length() == 0
    d = e.translation_decompose()
    assert d.xi == (0, 0)
    assert d.finite_word == ()
    assert d.tau == tuple(a2.nodes)


@pytest.mark.parametrize("name", ["A1~1", "A2~1", "C2~1", "A2~2"])
def test_diagram_automorphisms_have_length_zero(name):
    datum = build_root_datum(name)
    autos = diagram_automorphisms(datum)
    assert tuple(datum.nodes) in autos
    rng = random.Random(11)
    for perm in autos:
        tau = ExtendedWeylElement.diagram_automorphism(datum, perm)
        assert tau.length() == 0
        word = [rng.choice(datum.nodes) for _ in range(5)]
        w = ExtendedWeylElement.from_word(datum, word)
        assert (tau * w).length() == w.length()


def test_bad_diagram_automorphism(a2):
    with pytest.raises(DomainError):
        ExtendedWeylElement.diagram_automorphism(build_root_datum("C2~1"), (1, 0, 2))


def test_length_matches_inversions(a2):
    w = ExtendedWeylElement.from_word(a2, [0, 1, 2, 1])
    assert w.length() == w.inversion_count()
    assert w.length() <= 4


def test_random_lengths_match_inversions(a2):
    rng = random.Random(5)
    for _ in range(25):
        word = [rng.choice(a2.nodes) for _ in range(rng.randint(0, 6))]
        w = ExtendedWeylElement.from_word(a2, word)
        assert w.length() == w.inversion_count()


def test_decompose_then_recompose(a2):
    rng = random.Random(2024)
    for _ in range(60):
        word = [rng.choice(a2.nodes) for _ in range(rng.randint(0, 8))]
        w = ExtendedWeylElement.from_word(a2, word)
        d = w.translation_decompose()
        rebuilt = ExtendedWeylElement.recompose(a2, d.xi, d.finite_word)
        assert rebuilt == w


def test_translation_decomposes_to_itself(a2):
    t = ExtendedWeylElement.translation_omega(a2, [2, -1])
    d = t.translation_decompose()
    assert d.xi == (2, -1)
    assert d.finite_word == ()


def test_inverse(a2):
    w = ExtendedWeylElement.from_word(a2, [0, 2, 1])
    assert w * w.inverse() == ExtendedWeylElement.identity(a2)


def test_exact_inverse_stays_integral(a2):
    w = ExtendedWeylElement.from_word(a2, [1, 0, 2, 1])
    inv = _exact_inverse(w.matrix)
    assert inv.dtype == np.int64
    assert (w.matrix @ inv == np.eye(3, dtype=np.int64)).all()
    with pytest.raises(DomainError):
        _exact_inverse(np.array([[2, 0], [0, 1]], dtype=np.int64))
    with pytest.raises(DomainError):
        _exact_inverse(np.array([[1, 1], [1, 1]], dtype=np.int64))


def test_omega_word_a1(a1):
    h = omega_word(a1)
    assert h.N == 1
    assert h.base == (0,)
    assert h.tau == (1, 0)
    assert [h.letter(k) for k in (-1, 0, 1, 2)] == [0, 1, 0, 1]


def test_omega_word_a2(a2):
    h = omega_word(a2)
    assert h.N == 4
    # omega~_2 omega~_1 is the translation by rho, which lies in the root lattice
    assert h.tau == tuple(a2.nodes)
    assert h.tau in diagram_automorphisms(a2)


def test_a1_betas(a1):
    h = omega_word(a1)
    assert h.beta(0) == Root((0, 1))
    assert h.beta(-1) == Root((1, 2))
    assert h.beta(1) == Root((1, 0))
    assert h.beta(2) == Root((2, 1))


@pytest.mark.parametrize("name", ["A1~1", "A2~1"])
def test_windows_are_reduced(name):
    datum = build_root_datum(name)
    h = omega_word(datum)
    for m in range(-3, 2):
        for p in range(m, min(m + 8, 5)):
            window = h.window(m, p)
            assert ExtendedWeylElement.from_word(datum, window).length() == len(window)


@pytest.mark.parametrize("name", ["A1~1", "A2~1"])
def test_betas_distinct_and_on_the_right_side(name):
    datum = build_root_datum(name)
    h = omega_word(datum)
    betas = [h.beta(k) for k in range(-6, 7)]
    assert len(set(betas)) == len(betas)
    for k in range(-6, 7):
        beta = h.beta(k)
        assert beta.is_positive()
        assert datum.is_real_root(beta)
        assert datum.classify(beta) == h.kind(k)


def test_beta_index_round_trip(a2):
    h = omega_word(a2)
    for k in range(-5, 6):
        assert h.beta_index(h.beta(k), 6) == k

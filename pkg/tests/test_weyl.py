"""Weyl group machinery on classical weight coordinates."""

import pytest

from loopchar import (
    DomainError,
    cartan_data,
    coroot_pairing,
    dominance_diff,
    element_from_word,
    fundamental_weight,
    is_reduced_word,
    longest_element,
    min_coset_reps,
    positive_roots,
    reflect,
    weight_orbit,
    zero_weight,
)
from loopchar.weyl import highest_root, rho, root_norm, simple_root_weight


def test_reflection_fixture():
    cd = cartan_data("A2")
    assert reflect(cd, 1, fundamental_weight(cd, 1)) == (-1, 1)
    assert reflect(cd, 1, fundamental_weight(cd, 2)) == (0, 1)


def test_reflections_are_involutions():
    for name in ("A3", "B3", "G2", "D4"):
        cd = cartan_data(name)
        lam = rho(cd)
        for i in cd.nodes:
            assert reflect(cd, i, reflect(cd, i, lam)) == lam


def test_positive_root_counts():
    counts = {"A3": 6, "B3": 9, "C3": 9, "D4": 12, "G2": 6, "F4": 24, "E6": 36}
    for name, k in counts.items():
        assert len(positive_roots(cartan_data(name))) == k


def test_longest_element_length_and_action():
    for name in ("A3", "B3", "C3", "D4", "G2"):
        cd = cartan_data(name)
        w0 = longest_element(cd)
        assert w0.length == len(positive_roots(cd))
        assert is_reduced_word(cd, w0.word)
        for i in cd.nodes:
            image = w0.apply(fundamental_weight(cd, i))
            expected = tuple(-x for x in fundamental_weight(cd, cd.w0_node(i)))
            assert image == expected


def test_highest_root_fixtures():
    assert highest_root(cartan_data("A2")) == (1, 1)
    assert highest_root(cartan_data("G2")) == (3, 2)
    assert highest_root(cartan_data("B3")) == (1, 2, 2)


def test_root_norms_split_by_length():
    cd = cartan_data("G2")
    norms = sorted({root_norm(cd, b) for b in positive_roots(cd)})
    assert norms == [2, 6]


def test_coroot_pairing_on_simple_roots():
    cd = cartan_data("B3")
    for i in cd.nodes:
        for j in cd.nodes:
            unit = tuple(1 if k == j else 0 for k in cd.nodes)
            assert coroot_pairing(cd, fundamental_weight(cd, i), unit) == (i == j)


def test_min_coset_reps_sizes():
    cd = cartan_data("A2")
    assert len(min_coset_reps(cd, fundamental_weight(cd, 1))) == 3
    assert len(min_coset_reps(cd, zero_weight(cd))) == 1
    assert len(min_coset_reps(cd, rho(cd))) == 6
    with pytest.raises(DomainError):
        min_coset_reps(cd, (-1, 0))


def test_weight_orbit_is_duplicate_free():
    cd = cartan_data("D4")
    orbit = weight_orbit(cd, fundamental_weight(cd, 2))
    weights = [w for w, _ in orbit]
    assert len(weights) == len(set(weights)) == 24


def test_words_compose():
    cd = cartan_data("B3")
    w = element_from_word(cd, (1, 2, 3, 2))
    lam = rho(cd)
    manual = lam
    for i in reversed((1, 2, 3, 2)):
        manual = reflect(cd, i, manual)
    assert w.apply(lam) == manual


def test_reduced_word_detection():
    cd = cartan_data("A2")
    assert is_reduced_word(cd, (1, 2, 1))
    assert not is_reduced_word(cd, (1, 1))
    assert not is_reduced_word(cd, (2, 1, 2, 1))


def test_dominance_diff():
    cd = cartan_data("A2")
    lam = tuple(a + b for a, b in zip(fundamental_weight(cd, 1), fundamental_weight(cd, 2)))
    assert dominance_diff(cd, lam, zero_weight(cd)) == (1, 1)
    assert dominance_diff(cd, fundamental_weight(cd, 1), fundamental_weight(cd, 2)) is None


def test_simple_root_weight_rows():
    cd = cartan_data("C2")
    assert simple_root_weight(cd, 1) == (2, -1)
    assert simple_root_weight(cd, 2) == (-2, 2)

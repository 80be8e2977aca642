import random

import pytest
from hypothesis import given, strategies as st

from diagforms import (
    DiagonalForm,
    InputError,
    Region,
    SearchRegion,
    SolutionClass,
    evaluate,
    integer_kth_root,
    iroot_floor,
)


def test_evaluate_exact_large():
    f = DiagonalForm(5, (3, -2, 7, 1))
    x = (10 ** 30, 10 ** 29, -1, 2)
    assert evaluate(f, x) == 3 * 10 ** 150 - 2 * 10 ** 145 - 7 + 32


def test_form_validation():
    with pytest.raises(InputError):
        DiagonalForm(2, (1, 1, 1))
    with pytest.raises(InputError):
        DiagonalForm(3, (1, 0, 1))
    with pytest.raises(InputError):
        DiagonalForm(3, (1,))
    with pytest.raises(InputError):
        DiagonalForm(3, (1, 1, 1, 1, 1))
    with pytest.raises(InputError):
        DiagonalForm(3, (1, 1, 1))((1, 2))


def test_form_str_and_terms():
    f = DiagonalForm(3, (1, -1))
    assert f.terms((2, 3)) == (8, -27)
    assert str(f) == "1*x1^3 + -1*x2^3"


def test_region():
    r = SearchRegion(2, "nonneg")
    assert r.mode is Region.NONNEG
    assert list(r.values()) == [0, 1, 2]
    assert (0, 2) in r and (-1, 0) not in r
    assert list(SearchRegion(1).values()) == [-1, 0, 1]
    with pytest.raises(InputError):
        SearchRegion(-1)


def test_solution_class_roundtrip():
    for c in (SolutionClass.nonspecial(), SolutionClass.single(3), SolutionClass.pair(1, 4)):
        assert SolutionClass.parse(str(c)) == c
    assert str(SolutionClass.pair(1, 2)) == "special-pair(1,2)"
    assert not SolutionClass.nonspecial().is_special


@given(st.integers(min_value=0, max_value=10 ** 400), st.integers(min_value=1, max_value=12))
def test_iroot_floor_property(a, k):
    r = iroot_floor(a, k)
    assert r ** k <= a < (r + 1) ** k


def test_iroot_floor_huge_and_boundaries():
    for k in (3, 4, 7):
        for r in (1, 2, 10 ** 20, 2 ** 400 + 1, 3 ** 700):
            assert iroot_floor(r ** k, k) == r
            assert iroot_floor(r ** k - 1, k) == r - 1
            assert iroot_floor(r ** k + 1, k) == r


@given(st.integers(min_value=-10 ** 60, max_value=10 ** 60), st.integers(min_value=3, max_value=9))
def test_integer_kth_root_property(r, k):
    v = r ** k
    got = integer_kth_root(v, k)
    assert got is not None and got ** k == v
    if v > 1:
        assert integer_kth_root(v + 1, k) is None


def test_integer_kth_root_sign_rules():
    assert integer_kth_root(-27, 3) == -3
    assert integer_kth_root(-16, 4) is None
    assert integer_kth_root(16, 4) == 2
    assert integer_kth_root(0, 5) == 0
    rng = random.Random(7)
    for _ in range(200):
        v = rng.randrange(-10 ** 12, 10 ** 12)
        r = integer_kth_root(v, 3)
        assert (r is not None) == (round(abs(v) ** (1 / 3)) ** 3 == abs(v))


def test_documented_examples():
    f = DiagonalForm(3, (1, 1, 1, 1))
    assert f((1, 2, 3, 4)) == 100
    assert f((0, 0, 0, 0)) == 0
    assert DiagonalForm(4, (2, -1))((3, 2)) == 146
    assert integer_kth_root(64, 3) == 4
    assert integer_kth_root(-8, 3) == -2
    assert integer_kth_root(63, 3) is None

import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import loop_solutions, oracle_Rk, oracle_Rkl, oracle_solutions, oracle_special
from diagforms import BudgetError, DiagonalForm, InputError, Region, SearchRegion
from diagforms import enumeration as en
from diagforms.experiments import representation_histogram


def _sols(f, N, B, region=Region.SIGNED, budget=en.DEFAULT_BUDGET):
    return {r.x for r in en.enumerate_solutions(f, N, SearchRegion(B, region), budget)}


def test_small_counts():
    f = DiagonalForm(3, (1, 1, 1, 1))
    cs = en.count_representations(f, 10, SearchRegion(10, "nonneg"))
    assert (cs.total, cs.special, cs.nonspecial) == (12, 0, 12)
    assert len(_sols(f, 2, 2, Region.NONNEG)) == 6
    cs = en.count_representations(f, 8, SearchRegion(2))
    assert cs.total == len(loop_solutions(3, (1, 1, 1, 1), 8, 2)) == cs.special


def test_enumeration_sorted_and_classified():
    f = DiagonalForm(3, (1, 2, -1, 3))
    recs = en.enumerate_solutions(f, 4, SearchRegion(5))
    xs = [r.x for r in recs]
    assert xs == sorted(xs)
    for r in recs:
        assert f(r.x) == 4
        assert r.cls.is_special == oracle_special(3, f.coeffs, 4, r.x)


def test_vs_loop_oracle_tiny():
    rng = random.Random(1)
    for _ in range(20):
        k = rng.choice((3, 4, 5))
        coeffs = tuple(rng.choice([c for c in range(-5, 6) if c]) for _ in range(4))
        B = rng.randint(0, 4)
        N = rng.randint(-50, 50)
        f = DiagonalForm(k, coeffs)
        assert _sols(f, N, B) == loop_solutions(k, coeffs, N, B)


def test_vs_oracle_random_instances():
    rng = random.Random(2024)
    for _ in range(50):
        k = rng.choice((3, 4, 5))
        coeffs = tuple(rng.choice([c for c in range(-5, 6) if c]) for _ in range(4))
        B = rng.randint(1, 12)
        f = DiagonalForm(k, coeffs)
        N = f(tuple(rng.randint(-B, B) for _ in range(4)))
        nonneg = rng.random() < 0.3
        region = Region.NONNEG if nonneg else Region.SIGNED
        want = oracle_solutions(k, coeffs, N, B, nonneg)
        assert _sols(f, N, B, region) == want
        cs = en.count_representations(f, N, SearchRegion(B, region))
        assert cs.total == len(want)
        assert cs.special == sum(oracle_special(k, coeffs, N, x) for x in want)


def test_python_fallback_path():
    # coefficients large enough that partial sums leave int64
    f = DiagonalForm(5, (10 ** 17, -(10 ** 17), 1, -1))
    sols = _sols(f, 0, 3)
    assert sols == loop_solutions(5, f.coeffs, 0, 3)
    assert not en._fits_int64(f.coeffs, 5, 0, 3)


def test_threads_agree():
    f = DiagonalForm(3, (1, 1, 1, -1))
    one = en.count_representations(f, 1, SearchRegion(60))
    many = en.count_representations(f, 1, SearchRegion(60), en.Budget(threads=4))
    assert (one.total, one.special) == (many.total, many.special)


def test_coordinate_symmetry():
    f = DiagonalForm(3, (1, 1, 1, 1))
    g = DiagonalForm(3, (1, 1, 1, 1))
    sols = _sols(f, 29, 6)
    assert sols == {(b, a, c, d) for a, b, c, d in sols}
    # odd k: x -> -x flips the sign of the coefficient
    h = DiagonalForm(3, (1, -1, 1, 1))
    assert _sols(h, 29, 6) == {(a, -b, c, d) for a, b, c, d in _sols(g, 29, 6)}


def test_monotone_in_B():
    f = DiagonalForm(4, (1, 2, -3, 1))
    counts = [en.count_representations(f, 7, SearchRegion(B)).total for B in range(0, 12)]
    assert counts == sorted(counts)


def test_budget_errors():
    f = DiagonalForm(3, (1, 1, 1, 1))
    with pytest.raises(BudgetError, match="B=1000"):
        en.count_representations(f, 1, SearchRegion(1000), en.Budget(mem_bytes=1 << 20))
    with pytest.raises(BudgetError):
        en.count_representations(f, 1, SearchRegion(200), en.Budget(time_s=0))
    assert en.Budget.from_gib(4).max_signed_B() > 5000


def test_form_arity_checks():
    with pytest.raises(InputError):
        en.count_representations(DiagonalForm(3, (1, 1, 1)), 1, SearchRegion(3))
    with pytest.raises(InputError):
        en.count_ternary(DiagonalForm(3, (1, 1, 1)), 0, 3)


@pytest.mark.parametrize("N,want", [(1, 4), (2, 6), (10, 12), (3, 4), (4, 1), (5, 0)])
def test_Rk_known(N, want):
    assert en.count_Rk(N, 3) == want == oracle_Rk(N, 3)


def test_Rk_histogram_matches_join():
    hist = representation_histogram(3, 2000)
    for N in list(range(1, 200)) + [1000, 1729, 2000]:
        assert en.count_Rk(N, 3) == hist[N]


def test_Rkl_slicing_vs_four_loop():
    assert en.count_Rkl(17, 3, 4) == 9 == oracle_Rkl(17, 3, 4)
    hist = representation_histogram(3, 5000, 4)
    rng = random.Random(5)
    for N in rng.sample(range(1, 5001), 60) + [5000]:
        assert en.count_Rkl(N, 3, 4) == hist[N]
    for N in (17, 100, 354, 1000):
        assert en.count_Rkl(N, 3, 4) == oracle_Rkl(N, 3, 4)


def test_ternary_and_r0():
    f = DiagonalForm(3, (1, 1, 1))
    assert en.count_r0(f, 3, 2) == 1
    assert en.count_r0(f, 1, 1) == 0
    total, avoiding = en.count_ternary(f, 2, 5)
    r = range(-5, 6)
    brute = [(x, y, z) for x in r for y in r for z in r if x ** 3 + y ** 3 + z ** 3 == 2]
    assert total == len(brute)
    assert avoiding == sum(1 for t in brute if 2 not in (t[0] ** 3, t[1] ** 3, t[2] ** 3))


@settings(max_examples=40, deadline=None)
@given(
    k=st.sampled_from([3, 4, 5]),
    coeffs=st.tuples(*[st.integers(-5, 5).filter(bool)] * 4),
    B=st.integers(0, 5),
    N=st.integers(-300, 300),
)
def test_property_matches_loops(k, coeffs, B, N):
    f = DiagonalForm(k, coeffs)
    assert _sols(f, N, B) == loop_solutions(k, coeffs, N, B)


def test_documented_examples():
    import itertools
    f = DiagonalForm(3, (1, 1, 1, 1))
    sols = _sols(f, 100, 4)
    assert set(itertools.permutations((1, 2, 3, 4))) <= sols
    assert _sols(f, 1, 0) == set()
    assert en.count_representations(f, 8, SearchRegion(2)).special >= 6
    assert en.count_representations(DiagonalForm(5, (2, -3, 1, 7)), 1, SearchRegion(0)).total == 0
    assert en.count_Rkl(2, 3, 3) == 6
    for N in range(1, 60):
        assert en.count_Rkl(N, 3, 3) == en.count_Rk(N, 3)
        assert en.count_Rkl(N, 4, 4) == en.count_Rk(N, 4)
    assert en.count_r0(DiagonalForm(3, (1, 1, 1)), 1, 0) == 0

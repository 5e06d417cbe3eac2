import numpy as np
import pytest

from helpers import random_matrix
from oracles import saati_grid
from selfdea.classic import (
    ReturnsToScale,
    ccr_efficiency,
    rank_results,
    saati_nonradial,
    super_efficiency,
)
from selfdea.lp import Status
from selfdea.model import DecisionMatrix, normalize


def test_table31_irs(table31):
    got = [ccr_efficiency(table31, p, "irs").score for p in range(4)]
    np.testing.assert_allclose(got, [1, 5 / 9, 1, 17 / 18], atol=1e-9)


def test_table31_crs_dmu2_is_ratio(table31):
    # single input and output: CRS efficiency is the productivity ratio over the best ratio
    r = table31.outputs[:, 0] / table31.inputs[:, 0]
    got = [ccr_efficiency(table31, p).score for p in range(4)]
    np.testing.assert_allclose(got, r / r.max(), atol=1e-9)


def test_single_dmu_is_efficient():
    m = DecisionMatrix.from_arrays([[3.0]], [[5.0]])
    res = ccr_efficiency(m, 0, "irs")
    assert res.score == pytest.approx(1.0)
    assert res.intensities[0] == pytest.approx(1.0)


def test_super_efficiency_needs_two_dmus():
    with pytest.raises(ValueError):
        super_efficiency(DecisionMatrix.from_arrays([[3.0]], [[5.0]]), 0)


def test_super_efficiency_examples(table31):
    three = table31.subset([0, 1, 2])
    assert super_efficiency(three, 0, "irs").score == pytest.approx(2.0, abs=1e-9)
    assert super_efficiency(three, 2, "irs").score == pytest.approx(5.0, abs=1e-9)
    assert super_efficiency(table31, 0, "irs").score == pytest.approx(2.0, abs=1e-9)
    assert super_efficiency(table31, 2, "irs").score == pytest.approx(10 / 9, abs=1e-9)


def test_excluded_dmu_gets_zero_intensity(table31):
    res = super_efficiency(table31, 2, "irs")
    assert res.intensities[2] == 0.0
    assert res.excluded_self


def test_infeasible_super_efficiency_ranks_best():
    # DMU0 is the only producer of output 2, so no reference mix reaches it
    m = DecisionMatrix.from_arrays([[1.0], [1.0], [2.0]], [[1.0, 5.0], [2.0, 0.0], [1.0, 0.0]])
    results = [super_efficiency(m, p) for p in range(3)]
    assert results[0].status is Status.INFEASIBLE
    assert results[0].score is None and not results[0].feasible
    ranking = rank_results(m, results, "super")
    assert ranking.order[0] == "DMU1"


def test_twins_share_efficiency():
    m = DecisionMatrix.from_arrays([[2.0], [2.0], [4.0]], [[3.0], [3.0], [2.0]])
    a, b = (ccr_efficiency(m, p).score for p in (0, 1))
    assert a == b == pytest.approx(1.0)
    ranking = rank_results(m, [ccr_efficiency(m, p) for p in range(3)], "ccr")
    assert ranking.rank_of("DMU1") == ranking.rank_of("DMU2") == "1-2"


def test_saati_table32_exclusion(table32):
    res = saati_nonradial(table32, 0, exclude_self=True)
    assert res.score == pytest.approx(1.02, abs=1e-9)


@pytest.mark.parametrize("p", range(4))
@pytest.mark.parametrize("exclude", [False, True])
def test_saati_matches_grid(table32, p, exclude):
    norm = normalize(table32)
    # four free intensities only fit in memory on a coarser grid
    step = 0.01 if exclude else 0.04
    expected = saati_grid(norm.inputs, norm.outputs, p, exclude, hi=2.0, step=step)
    got = saati_nonradial(table32, p, exclude_self=exclude).score
    # the grid can only overshoot the true minimum
    assert got <= expected + 1e-9
    assert got == pytest.approx(expected, abs=0.05)


def test_saati_without_exclusion_at_most_one():
    rng = np.random.default_rng(3)
    for _ in range(20):
        m = random_matrix(rng)
        for p in range(m.n):
            assert saati_nonradial(m, p).score <= 1.0 + 1e-9


def test_irs_at_least_crs():
    rng = np.random.default_rng(11)
    for _ in range(30):
        m = random_matrix(rng)
        for p in range(m.n):
            crs = ccr_efficiency(m, p, ReturnsToScale.CRS).score
            irs = ccr_efficiency(m, p, ReturnsToScale.IRS).score
            assert irs >= crs - 1e-9
            assert 0 < crs <= 1 + 1e-9


def test_more_input_never_raises_efficiency():
    rng = np.random.default_rng(12)
    for _ in range(20):
        m = random_matrix(rng)
        p = int(rng.integers(m.n))
        base = ccr_efficiency(m, p).score
        worse = m.with_value(p, m.input_columns[0], m.inputs[p, 0] * 1.5)
        assert ccr_efficiency(worse, p).score <= base + 1e-9


def test_index_checked(table31):
    with pytest.raises(IndexError):
        ccr_efficiency(table31, 4)

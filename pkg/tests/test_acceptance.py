"""One test per acceptance criterion; each prints a pass/fail line in the summary."""

import numpy as np

from helpers import random_matrix
from oracles import random_bounded_lp, sadea_grid, vertex_enumeration
from selfdea.classic import ccr_efficiency, saati_nonradial, super_efficiency
from selfdea.lp import Status, solve
from selfdea.madm import maxmin_full_ranking, maxmin_scores, topsis
from selfdea.model import DecisionMatrix
from selfdea.sadea import sadea_rank, sadea_scores


def test_criterion_1_table31_irs(table31, golden, report):
    got = np.array([ccr_efficiency(table31, p, "irs").score for p in range(4)])
    err = np.max(np.abs(got - golden["table3_1"]["irs_efficiency"]))
    assert report("1 CCR-IRS on 4-DMU data", err <= 1e-3, f"max error {err:.2e}")


def test_criterion_2_super_efficiency(table31, report):
    three = table31.subset([0, 1, 2])
    checks = [
        (super_efficiency(three, 0, "irs").score, 2.0, 1e-6),
        (super_efficiency(three, 2, "irs").score, 5.0, 1e-6),
        (super_efficiency(table31, 2, "irs").score, 1.11, 0.01),
        (super_efficiency(table31, 0, "irs").score, 2.0, 1e-6),
    ]
    ok = all(abs(got - want) <= tol for got, want, tol in checks)
    detail = ", ".join(f"{got:.6g}" for got, _, _ in checks)
    assert report("2 IRS super-efficiency", ok, detail)


def test_criterion_3_table33(table32, golden, report):
    got = np.array([r.score for r in sadea_scores(table32)])
    printed = np.max(np.abs(got - golden["table3_3"]))
    exact = np.max(np.abs(got - [1 / 8, 4 / 29, 4 / 11, 8 / 17]))
    ok = printed <= 1e-6 and exact <= 1e-9
    assert report("3 SADEA on 4-DMU data", ok, f"vs printed {printed:.2e}, vs fractions {exact:.2e}")


def test_criterion_4_table36_sadea(table34, golden, report):
    printed = np.array(golden["table3_6"]["sadea_score"])
    got = np.array([r.score for r in sadea_scores(table34)])
    bad = [str(j + 1) for j in np.nonzero(np.abs(got - printed) > 1e-4)[0]]
    ranking = sadea_rank(table34)
    ranks = [ranking.rank_of(name) for name in table34.names]
    matches = sum(r == str(want) for r, want in zip(ranks, golden["table3_6"]["sadea_rank"]))
    ok = not bad and matches >= 16
    detail = f"{18 - len(bad)}/18 scores within 1e-4 (off: alt {', '.join(bad) or '-'}), {matches}/18 ranks"
    assert report("4 SADEA column of case study", ok, detail)


def test_criterion_5_table36_topsis(table34, golden, report):
    printed = np.array(golden["table3_6"]["topsis_score"])
    got = topsis(table34).closeness
    err = np.abs(got - printed)
    ok = bool(np.all(err <= 1e-4))
    detail = f"{int(np.sum(err <= 1e-4))}/18 within 1e-4, max error {err.max():.2e}, alt 1 {got[0]:.6f}"
    assert report("5 TOPSIS column of case study", ok, detail)


def test_criterion_6_maxmin(table34, report):
    h = maxmin_scores(table34)
    spots = {4: 0.186480, 3: 0.112175, 18: 0.094891, 10: 0.072993, 17: 0.051095}
    err = max(abs(h[alt - 1] - v) for alt, v in spots.items())
    first = maxmin_full_ranking(table34).levels[0].selected
    ok = err <= 1e-6 and first == (3,)
    assert report("6 max-min spot values", ok, f"max error {err:.2e}, first eliminated alt {first[0] + 1}")


def _scores(method, m):
    if method == "sadea":
        return [r.score for r in sadea_scores(m)]
    if method == "topsis":
        return list(topsis(m).closeness)
    if method == "maxmin":
        return list(maxmin_scores(m))
    if method == "ccr":
        return [ccr_efficiency(m, p, "irs").score for p in range(m.n)]
    if method == "super":
        return [super_efficiency(m, p).score for p in range(m.n)]
    return [saati_nonradial(m, p).score for p in range(m.n)]


def _drift(a, b):
    if [v is None for v in a] != [v is None for v in b]:
        return np.inf
    pairs = [(x, y) for x, y in zip(a, b) if x is not None]
    return max((abs(x - y) for x, y in pairs), default=0.0)


def test_criterion_7_property_suites(report):
    rng = np.random.default_rng(2024)
    parts = {}

    lp_err = 0.0
    for _ in range(200):
        lp = random_bounded_lp(rng)
        want = vertex_enumeration(lp)
        sol = solve(lp)
        if want is None:
            lp_err = max(lp_err, 0.0 if sol.status is Status.INFEASIBLE else np.inf)
        else:
            lp_err = max(lp_err, abs(sol.objective - want) if sol.optimal else np.inf)
    parts["lp"] = lp_err <= 1e-8

    grid_err = 0.0
    for _ in range(50):
        x = rng.uniform(0.05, 1.0, 1)
        y = rng.uniform(0.05, 1.0, int(rng.integers(1, 3)))
        m = DecisionMatrix.from_arrays([x, np.ones(1)], [y, np.ones(y.size)])
        grid_err = max(grid_err, abs(sadea_scores(m)[0].score - sadea_grid(x, y)))
    parts["grid"] = grid_err <= 2e-3

    drift = 0.0
    for _ in range(50):
        m = random_matrix(rng)
        col = int(rng.integers(m.values.shape[1]))
        scaled = m.scale_column(col, float(10 ** rng.uniform(-3, 3)))
        for method in ("sadea", "topsis", "maxmin", "ccr", "super", "nonradial"):
            drift = max(drift, _drift(_scores(method, m), _scores(method, scaled)))
    parts["scale"] = drift < 1e-9

    # self-containment: perturbing another DMU without moving any column maximum
    contained = True
    for _ in range(20):
        m = random_matrix(rng, n=5)
        base = _scores("sadea", m)
        q = int(np.argmin(m.values[:, 0]))
        moved = m.with_value(q, 0, m.values[q, 0] * 0.9)
        after = _scores("sadea", moved)
        contained &= all(abs(after[p] - base[p]) <= 1e-12 for p in range(m.n) if p != q)
    parts["self"] = contained

    irs_ok = True
    for _ in range(30):
        m = random_matrix(rng)
        for p in range(m.n):
            irs_ok &= ccr_efficiency(m, p, "irs").score >= ccr_efficiency(m, p, "crs").score - 1e-9
    parts["irs>=crs"] = irs_ok

    detail = f"lp {lp_err:.1e}, grid {grid_err:.1e}, scale drift {drift:.1e}, " + ", ".join(
        f"{k} {'ok' if v else 'FAIL'}" for k, v in parts.items() if k in ("self", "irs>=crs")
    )
    assert report("7 property suites", all(parts.values()), detail)

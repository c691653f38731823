import math

import numpy as np
import pytest

from qgame.equilibria import (
    DEFAULT_GRID,
    GAP_TOLERANCE,
    cg_gap_closed_form,
    deviation_gap,
    dilemma_report,
    pd_gap_closed_form,
    verify_profile_nash,
)
from qgame.games import builtin_cg, builtin_pd
from qgame.quantize import (
    COOPERATE,
    DEFECT,
    QUANTUM,
    QuantumGameConfig,
    StrategyParams,
    payoffs_matrix_path,
)

PD = builtin_pd()
CG = builtin_cg()
PI = math.pi
QQ = (QUANTUM, QUANTUM)


def cfg(game, p):
    return QuantumGameConfig(game, p, PI / 2)


def test_gap_zero_at_reference_move():
    for game in (PD, CG):
        got = deviation_gap(cfg(game, 0.7), "B", QQ, QUANTUM)
        assert got.gap == pytest.approx(0.0, abs=1e-12)


def test_gap_to_defect_from_quantum_pair():
    # against Q, switching to D costs a PD player 3p
    for p in (0.0, 0.3, 1.0):
        got = deviation_gap(cfg(PD, p), "B", QQ, DEFECT)
        assert got.gap == pytest.approx(3 * p, abs=1e-12)


def test_closed_form_gaps_match_matrix_route():
    rng = np.random.default_rng(401)
    for _ in range(200):
        p = rng.uniform(0, 1)
        theta, phi = rng.uniform(0, PI), rng.uniform(0, PI / 2)
        deviant = StrategyParams(theta, phi)
        for game, form in ((PD, pd_gap_closed_form), (CG, cg_gap_closed_form)):
            want = deviation_gap(cfg(game, p), "B", QQ, deviant).gap
            got = form(p, theta, phi)
            assert abs(got - want) < 1e-10
            assert got >= -1e-12


def test_deviation_symmetric_between_players():
    rng = np.random.default_rng(409)
    for _ in range(50):
        deviant = StrategyParams(rng.uniform(0, PI), rng.uniform(0, PI / 2))
        c = cfg(PD, rng.uniform(0, 1))
        fix_b = deviation_gap(c, "B", QQ, deviant).gap
        fix_a = deviation_gap(c, "A", QQ, deviant).gap
        assert fix_b == pytest.approx(fix_a, abs=1e-12)


def test_quantum_pair_is_equilibrium_at_half():
    verdict = verify_profile_nash(cfg(PD, 0.5), QQ)
    assert verdict.is_equilibrium
    assert verdict.min_gap == pytest.approx(0.0, abs=1e-12)
    assert verdict.worst_player == "A"
    assert verdict.worst_deviation.theta == pytest.approx(0.0)
    assert verdict.worst_deviation.phi == pytest.approx(PI / 2)
    assert verdict.grid_spec == DEFAULT_GRID


def test_quantum_pair_degenerate_at_zero():
    # pure noise pays everyone the same, so nothing beats the profile
    verdict = verify_profile_nash(cfg(PD, 0.0), QQ, grid=(21, 21))
    assert verdict.is_equilibrium
    assert verdict.min_gap == pytest.approx(0.0, abs=1e-12)


def test_cooperate_pair_is_not_equilibrium():
    verdict = verify_profile_nash(cfg(PD, 1.0), (COOPERATE, COOPERATE),
                                  grid=(21, 21))
    assert not verdict.is_equilibrium
    assert verdict.min_gap == pytest.approx(-2.0, abs=1e-12)
    assert verdict.worst_deviation.theta == pytest.approx(PI)


def test_verdict_flag_matches_gap():
    rng = np.random.default_rng(419)
    for _ in range(10):
        profile = (StrategyParams(rng.uniform(0, PI), rng.uniform(0, PI / 2)),
                   StrategyParams(rng.uniform(0, PI), rng.uniform(0, PI / 2)))
        verdict = verify_profile_nash(cfg(CG, rng.uniform(0, 1)), profile,
                                      grid=(11, 11))
        assert verdict.is_equilibrium == (verdict.min_gap >= -GAP_TOLERANCE)


def test_finer_grid_cannot_improve_on_exact_equilibrium():
    coarse = verify_profile_nash(cfg(CG, 0.8), QQ, grid=(41, 41))
    fine = verify_profile_nash(cfg(CG, 0.8), QQ, grid=(81, 81))
    assert coarse.is_equilibrium and fine.is_equilibrium
    assert fine.min_gap <= coarse.min_gap + 1e-12


def test_grid_validation():
    with pytest.raises(ValueError, match="grid"):
        verify_profile_nash(cfg(PD, 0.5), QQ, grid=(1, 41))


def test_dilemma_report_pd_full_entanglement():
    report = dilemma_report("pd", 1.0)
    assert report.dilemma_resolved
    assert report.verdict.is_equilibrium
    assert report.qq_payoffs[0] == pytest.approx(3.0, abs=1e-10)
    assert report.qq_payoffs[1] == pytest.approx(3.0, abs=1e-10)
    assert report.region == "nonlocal"
    assert [tuple(prof) for prof, _ in report.classical_equilibria] == [(1, 1)]
    assert report.classical_equilibria[0][1] == (1.0, 1.0)
    assert report.discord == pytest.approx(1.0, abs=1e-6)


def test_dilemma_report_pd_separable_region():
    report = dilemma_report("pd", 0.2, grid=(21, 21))
    assert report.dilemma_resolved
    assert report.region == "separable"
    assert report.discord > 1e-3
    assert report.qq_payoffs[0] == pytest.approx(2.4, abs=1e-10)


def test_dilemma_report_pd_no_correlations():
    # p=0 keeps (Q,Q) an equilibrium but deviations tie, nothing is resolved
    report = dilemma_report("pd", 0.0, grid=(21, 21))
    assert not report.dilemma_resolved
    assert report.verdict.is_equilibrium
    assert report.discord == pytest.approx(0.0, abs=1e-8)
    assert report.qq_payoffs[0] == pytest.approx(2.25, abs=1e-10)


def test_dilemma_report_cg():
    full = dilemma_report("cg", 1.0, grid=(21, 21))
    assert full.dilemma_resolved
    assert full.qq_payoffs[0] == pytest.approx(3.0, abs=1e-10)
    assert {tuple(prof) for prof, _ in full.classical_equilibria} == {(0, 1), (1, 0)}
    noise = dilemma_report("cg", 0.0, grid=(21, 21))
    assert not noise.dilemma_resolved


def test_dilemma_report_rejects_unknown_game():
    with pytest.raises(ValueError, match="game"):
        dilemma_report("matching-pennies", 0.5)

"""Nash verification on the strategy grid and the dilemma report.

A profile is declared a (weak) equilibrium when no unilateral deviation on
the sampled strategy grid gains more than numerical noise: min_gap >= -1e-9.
The grid covers theta in [0, pi] and phi in [0, pi/2] with endpoints
included, so the reference profile itself is always sampled and min_gap is
never positive at a true equilibrium.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .games import Bimatrix, builtin_cg, builtin_pd, payoffs_at, pure_nash_equilibria
from .quantize import (
    COOPERATE,
    DEFECT,
    QUANTUM,
    QuantumGameConfig,
    StrategyParams,
    classify_werner,
    payoffs_matrix_path,
)
from .discord import werner_discord_analytic

__all__ = [
    "GAP_TOLERANCE",
    "DEFAULT_GRID",
    "DeviationGap",
    "EquilibriumVerdict",
    "DilemmaReport",
    "deviation_gap",
    "pd_gap_closed_form",
    "cg_gap_closed_form",
    "verify_profile_nash",
    "dilemma_report",
]

GAP_TOLERANCE = 1e-9
DEFAULT_GRID = (41, 41)

Profile = tuple[StrategyParams, StrategyParams]


class DeviationGap(NamedTuple):
    gap: float
    deviant: StrategyParams


def deviation_gap(cfg: QuantumGameConfig, fixed_player: str, profile: Profile,
                  deviant: StrategyParams) -> DeviationGap:
    """Payoff lost by the non-fixed player when switching to `deviant`.

    fixed_player="B" holds B at the profile and lets A deviate; positive gap
    means the deviation hurts the deviator.
    """
    move_a, move_b = profile
    if fixed_player == "B":
        ref = payoffs_matrix_path(cfg, move_a, move_b)[0]
        alt = payoffs_matrix_path(cfg, deviant, move_b)[0]
    elif fixed_player == "A":
        ref = payoffs_matrix_path(cfg, move_a, move_b)[1]
        alt = payoffs_matrix_path(cfg, move_a, deviant)[1]
    else:
        raise ValueError(f"fixed_player must be 'A' or 'B', got {fixed_player!r}")
    return DeviationGap(gap=ref - alt, deviant=deviant)


def pd_gap_closed_form(p: float, theta: float, phi: float) -> float:
    """Gap for deviating from the all-quantum profile in the prisoner's
    dilemma: p (3 sin^2(theta/2) + 2 cos^2(theta/2) cos^2 phi) >= 0."""
    return p * (3 * math.sin(theta / 2) ** 2
                + 2 * math.cos(theta / 2) ** 2 * math.cos(phi) ** 2)


def cg_gap_closed_form(p: float, theta: float, phi: float) -> float:
    """Gap for deviating from the all-quantum profile in chicken:
    p (2 + cos^2(theta/2) (3 cos^2 phi - 2)) >= 0."""
    return p * (2 + math.cos(theta / 2) ** 2 * (3 * math.cos(phi) ** 2 - 2))


@dataclass(frozen=True)
class EquilibriumVerdict:
    is_equilibrium: bool
    min_gap: float
    worst_player: str
    worst_deviation: StrategyParams
    grid_spec: tuple[int, int]


def verify_profile_nash(cfg: QuantumGameConfig, profile: Profile,
                        grid: tuple[int, int] = DEFAULT_GRID) -> EquilibriumVerdict:
    """Scan both players' unilateral deviations over the strategy grid."""
    n_theta, n_phi = grid
    if n_theta < 2 or n_phi < 2:
        raise ValueError(f"grid must be at least 2x2, got {grid}")
    thetas = np.linspace(0.0, math.pi, n_theta)
    phis = np.linspace(0.0, math.pi / 2, n_phi)

    move_a, move_b = profile
    ref_a, ref_b = payoffs_matrix_path(cfg, move_a, move_b)

    min_gap = math.inf
    worst_player = "A"
    worst = StrategyParams(0.0, 0.0)
    for player, ref in (("A", ref_a), ("B", ref_b)):
        for theta in thetas:
            for phi in phis:
                deviant = StrategyParams(float(theta), float(phi))
                if player == "A":
                    alt = payoffs_matrix_path(cfg, deviant, move_b)[0]
                else:
                    alt = payoffs_matrix_path(cfg, move_a, deviant)[1]
                gap = ref - alt
                if gap < min_gap:
                    min_gap = gap
                    worst_player = player
                    worst = deviant
    return EquilibriumVerdict(
        is_equilibrium=bool(min_gap >= -GAP_TOLERANCE),
        min_gap=float(min_gap),
        worst_player=worst_player,
        worst_deviation=worst,
        grid_spec=(n_theta, n_phi),
    )


@dataclass(frozen=True)
class DilemmaReport:
    game: str
    p: float
    delta: float
    qq_payoffs: tuple[float, float]
    classical_equilibria: list
    verdict: EquilibriumVerdict
    region: str
    discord: float
    dilemma_resolved: bool


def _strictly_beats_classical_moves(cfg: QuantumGameConfig, profile: Profile) -> bool:
    """True when every unilateral switch to a plain classical move loses."""
    for player in ("A", "B"):
        for move in (COOPERATE, DEFECT):
            if deviation_gap(cfg, "B" if player == "A" else "A", profile, move).gap \
                    <= GAP_TOLERANCE:
                return False
    return True


def dilemma_report(game_tag: str, p: float, delta: float = math.pi / 2,
                   grid: tuple[int, int] = DEFAULT_GRID) -> DilemmaReport:
    """Full verdict for the all-quantum profile of a builtin game.

    The dilemma counts as resolved when (Q,Q) is an equilibrium on the grid,
    deviating to either classical move strictly loses (which requires p > 0),
    and, for the prisoner's dilemma, the (Q,Q) payoff strictly improves on
    the classical equilibrium payoff.
    """
    tag = game_tag.lower()
    if tag == "pd":
        game = builtin_pd()
    elif tag == "cg":
        game = builtin_cg()
    else:
        raise ValueError(f"game must be 'pd' or 'cg', got {game_tag!r}")

    cfg = QuantumGameConfig(game, p, delta)
    profile = (QUANTUM, QUANTUM)
    qq = payoffs_matrix_path(cfg, QUANTUM, QUANTUM)
    verdict = verify_profile_nash(cfg, profile, grid)
    classical = [(prof, payoffs_at(game, prof)) for prof in pure_nash_equilibria(game)]

    resolved = verdict.is_equilibrium and _strictly_beats_classical_moves(cfg, profile)
    if resolved and tag == "pd":
        floor = max(pay[0] for _, pay in classical)
        resolved = qq[0] > floor + GAP_TOLERANCE and qq[1] > floor + GAP_TOLERANCE

    return DilemmaReport(
        game=tag,
        p=cfg.p,
        delta=cfg.delta,
        qq_payoffs=qq,
        classical_equilibria=classical,
        verdict=verdict,
        region=classify_werner(cfg.p).region,
        discord=werner_discord_analytic(cfg.p),
        dilemma_resolved=bool(resolved),
    )

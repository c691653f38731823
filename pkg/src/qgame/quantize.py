"""Quantized 2x2 games on a noisy Bell state.

The players share rho_in = p |Phi><Phi| + (1-p)/4 I, with
|Phi> = (|00> + i|11>)/sqrt(2), apply local unitaries

    U(theta, phi) = [[exp(i phi) cos(theta/2),  sin(theta/2)],
                     [-sin(theta/2),            exp(-i phi) cos(theta/2)]],

and the referee measures in a basis whose entanglement is set by delta:
delta=0 is the product (computational) basis, delta=pi/2 the maximally
entangled one.  Payoffs are expectation values of the game's payoff table
over the four measurement outcomes (ordered 00, 01, 10, 11).

Two independent payoff routes are provided: the matrix path (projector
traces against the evolved state) and closed-form trigonometric
coefficients.  They must agree to 1e-10; tests enforce it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .games import Bimatrix
from . import qmat

__all__ = [
    "StrategyParams",
    "QuantumGameConfig",
    "WernerClassification",
    "COOPERATE",
    "DEFECT",
    "QUANTUM",
    "werner_state",
    "strategy_unitary",
    "final_state",
    "basis_projectors",
    "outcome_probabilities",
    "payoffs_matrix_path",
    "payoffs_closed_form",
    "payoffs_entangled_basis",
    "payoffs_product_basis",
    "classify_werner",
]

_RANGE_SLACK = 1e-9

SEPARABLE_BOUND = 1.0 / 3.0
NONLOCAL_BOUND = 1.0 / math.sqrt(2.0)


def _clamp(value: float, lo: float, hi: float, name: str) -> float:
    v = float(value)
    if not math.isfinite(v) or v < lo - _RANGE_SLACK or v > hi + _RANGE_SLACK:
        raise ValueError(f"{name} must lie in [{lo:g}, {hi:g}], got {value!r}")
    return min(max(v, lo), hi)


@dataclass(frozen=True)
class StrategyParams:
    """One player's move: theta in [0, pi], phi in [0, pi/2]."""

    theta: float
    phi: float

    def __post_init__(self):
        object.__setattr__(self, "theta", _clamp(self.theta, 0.0, math.pi, "theta"))
        object.__setattr__(self, "phi", _clamp(self.phi, 0.0, math.pi / 2, "phi"))


COOPERATE = StrategyParams(0.0, 0.0)
DEFECT = StrategyParams(math.pi, 0.0)
QUANTUM = StrategyParams(0.0, math.pi / 2)


@dataclass(frozen=True)
class QuantumGameConfig:
    """Game table plus shared-state purity p and measurement-basis angle delta."""

    game: Bimatrix
    p: float
    delta: float

    def __post_init__(self):
        object.__setattr__(self, "p", _clamp(self.p, 0.0, 1.0, "p"))
        object.__setattr__(self, "delta", _clamp(self.delta, 0.0, math.pi / 2, "delta"))


def _bell_ket() -> np.ndarray:
    k = np.zeros(4, dtype=complex)
    k[0] = 1 / math.sqrt(2)
    k[3] = 1j / math.sqrt(2)
    return k


def werner_state(p: float) -> np.ndarray:
    """p |Phi><Phi| + (1-p)/4 I on two qubits."""
    p = _clamp(p, 0.0, 1.0, "p")
    k = _bell_ket()
    rho = p * np.outer(k, k.conj()) + (1 - p) / 4 * np.eye(4)
    return qmat.validate_density_matrix(rho, "shared state")


def strategy_unitary(move: StrategyParams) -> np.ndarray:
    c, s = math.cos(move.theta / 2), math.sin(move.theta / 2)
    ph = complex(math.cos(move.phi), math.sin(move.phi))
    return np.array([[ph * c, s], [-s, ph.conjugate() * c]])


def final_state(rho, move_a: StrategyParams, move_b: StrategyParams) -> np.ndarray:
    """Apply the players' local unitaries: (Ua x Ub) rho (Ua x Ub)^dagger."""
    m = qmat.validate_density_matrix(rho, "input state")
    u = qmat.kron(strategy_unitary(move_a), strategy_unitary(move_b))
    return qmat.validate_density_matrix(u @ m @ u.conj().T, "final state")


def basis_projectors(delta: float):
    """Rank-one projectors onto the delta-entangled measurement basis.

    Each basis ket pairs a computational state with its double flip:
      cos(delta/2)|00> + i sin(delta/2)|11>, cos(delta/2)|01> - i sin(delta/2)|10>, ...
    Returned in outcome order (00, 01, 10, 11); they resolve the identity for
    every delta.
    """
    delta = _clamp(delta, 0.0, math.pi / 2, "delta")
    c, s = math.cos(delta / 2), math.sin(delta / 2)
    kets = (
        np.array([c, 0, 0, 1j * s]),
        np.array([0, c, -1j * s, 0]),
        np.array([0, -1j * s, c, 0]),
        np.array([1j * s, 0, 0, c]),
    )
    return tuple(np.outer(k, k.conj()) for k in kets)


def outcome_probabilities(cfg: QuantumGameConfig, move_a: StrategyParams,
                          move_b: StrategyParams) -> np.ndarray:
    """Measurement distribution over outcomes (00, 01, 10, 11)."""
    rho = final_state(werner_state(cfg.p), move_a, move_b)
    raw = [np.trace(proj @ rho) for proj in basis_projectors(cfg.delta)]
    worst_imag = max(abs(v.imag) for v in raw)
    if worst_imag > 1e-12:
        raise ValueError(f"outcome probability has imaginary part {worst_imag:.3e}")
    return qmat.validate_probabilities([v.real for v in raw], floor=-1e-10)


def _expected_payoffs(game: Bimatrix, probs) -> tuple[float, float]:
    pa = float(np.dot(game.payoff_a.reshape(4), probs))
    pb = float(np.dot(game.payoff_b.reshape(4), probs))
    return pa, pb


def payoffs_matrix_path(cfg: QuantumGameConfig, move_a: StrategyParams,
                        move_b: StrategyParams) -> tuple[float, float]:
    """Payoffs from explicit state evolution and projector traces."""
    return _expected_payoffs(cfg.game, outcome_probabilities(cfg, move_a, move_b))


def _bell_overlaps(move_a: StrategyParams, move_b: StrategyParams) -> np.ndarray:
    """Outcome weights of the pure Bell component at delta = pi/2."""
    c1, s1 = math.cos(move_a.theta / 2), math.sin(move_a.theta / 2)
    c2, s2 = math.cos(move_b.theta / 2), math.sin(move_b.theta / 2)
    f1, f2 = move_a.phi, move_b.phi
    both = f1 + f2
    return np.array([
        (math.cos(both) * c1 * c2) ** 2,
        (math.cos(f1) * c1 * s2 - math.sin(f2) * s1 * c2) ** 2,
        (math.sin(f1) * c1 * s2 - math.cos(f2) * s1 * c2) ** 2,
        (math.sin(both) * c1 * c2 + s1 * s2) ** 2,
    ])


def _outcome_coefficients(move_a: StrategyParams, move_b: StrategyParams,
                          delta: float) -> np.ndarray:
    """Closed-form outcome weights of the pure Bell component at any delta.

    Lowering delta from pi/2 mixes each weight with its double-flip partner
    (00<->11, 01<->10) in proportion (1 +- sin delta)/2; the four weights sum
    to 1 for all angles.
    """
    g = _bell_overlaps(move_a, move_b)
    w = math.sin(delta)
    partner = g[[3, 2, 1, 0]]
    return ((1 + w) * g + (1 - w) * partner) / 2


def payoffs_closed_form(cfg: QuantumGameConfig, move_a: StrategyParams,
                        move_b: StrategyParams) -> tuple[float, float]:
    """Payoffs from the trigonometric outcome weights; no matrix algebra.

    Each outcome probability is p * weight + (1-p)/4, the uniform floor
    coming from the unpolarized part of the shared state.
    """
    coeff = _outcome_coefficients(move_a, move_b, cfg.delta)
    probs = cfg.p * coeff + (1 - cfg.p) / 4
    return _expected_payoffs(cfg.game, probs)


def payoffs_entangled_basis(cfg: QuantumGameConfig, move_a: StrategyParams,
                            move_b: StrategyParams) -> tuple[float, float]:
    """Specialized payoffs for the maximally entangled basis (delta = pi/2)."""
    if abs(cfg.delta - math.pi / 2) > 1e-12:
        raise ValueError(f"entangled-basis payoffs require delta = pi/2, got {cfg.delta!r}")
    probs = cfg.p * _bell_overlaps(move_a, move_b) + (1 - cfg.p) / 4
    return _expected_payoffs(cfg.game, probs)


def payoffs_product_basis(cfg: QuantumGameConfig, move_a: StrategyParams,
                          move_b: StrategyParams) -> tuple[float, float]:
    """Specialized payoffs for the product basis (delta = 0).

    Only outcome pairs survive: equal outcomes (00, 11) share one weight and
    unequal outcomes (01, 10) the complementary one.
    """
    if abs(cfg.delta) > 1e-12:
        raise ValueError(f"product-basis payoffs require delta = 0, got {cfg.delta!r}")
    t1, f1 = move_a.theta, move_a.phi
    t2, f2 = move_b.theta, move_b.phi
    c1, s1 = math.cos(t1 / 2), math.sin(t1 / 2)
    c2, s2 = math.cos(t2 / 2), math.sin(t2 / 2)
    cross = 0.5 * math.sin(t1) * math.sin(t2) * math.sin(f1 + f2)
    same = c1**2 * c2**2 + s1**2 * s2**2 + cross
    diff = c1**2 * s2**2 + s1**2 * c2**2 - cross
    out = []
    for table in (cfg.game.payoff_a, cfg.game.payoff_b):
        val = cfg.p / 2 * ((table[0, 0] + table[1, 1]) * same
                           + (table[0, 1] + table[1, 0]) * diff)
        out.append(float(val + (1 - cfg.p) / 4 * table.sum()))
    return out[0], out[1]


@dataclass(frozen=True)
class WernerClassification:
    """Entanglement region of the shared state, with boundary markers."""

    region: str
    at_separable_boundary: bool
    at_nonlocal_boundary: bool


def classify_werner(p: float, boundary_tol: float = 1e-12) -> WernerClassification:
    """Region of werner_state(p): separable for p <= 1/3, violating a Bell
    inequality for p > 1/sqrt(2), entangled but local in between.  Boundary
    values belong to the lower region."""
    p = _clamp(p, 0.0, 1.0, "p")
    if p <= SEPARABLE_BOUND:
        region = "separable"
    elif p <= NONLOCAL_BOUND:
        region = "entangled_local"
    else:
        region = "nonlocal"
    return WernerClassification(
        region=region,
        at_separable_boundary=abs(p - SEPARABLE_BOUND) <= boundary_tol,
        at_nonlocal_boundary=abs(p - NONLOCAL_BOUND) <= boundary_tol,
    )

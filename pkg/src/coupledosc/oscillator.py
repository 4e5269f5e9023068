"""Two coupled oscillators: normal modes, squeeze parameter, entangled ground state.

The Hamiltonian

    H = 1/2 { p1^2/m + p2^2/m + A x1^2 + A x2^2 + 2 C x1 x2 }

decouples in the rotated coordinates y1 = (x1+x2)/sqrt2, y2 = (x1-x2)/sqrt2
with effective stiffnesses A+C and A-C. Writing K = sqrt(A^2-C^2) and

    exp(2 eta) = sqrt((A-C)/(A+C)),

the modes oscillate at omega e^{-eta} (y1) and omega e^{+eta} (y2), where
omega = sqrt(K/m). In units where m = omega = hbar = 1 the ground state is

    psi_eta(x1, x2) = (1/sqrt pi) exp{ -1/4 [ e^{-eta}(x1+x2)^2 + e^{eta}(x1-x2)^2 ] },

a two-mode squeezed Gaussian; eta = 0 is the separable product state.
"""

import math
from dataclasses import dataclass

import numpy as np


class UnstablePotentialError(ValueError):
    """Potential is not positive definite; no bound ground state exists."""


@dataclass(frozen=True)
class CoupledParams:
    """Mass m and the quadratic-form couplings A (diagonal) and C (cross)."""

    m: float
    A: float
    C: float

    def __post_init__(self):
        if not (math.isfinite(self.m) and math.isfinite(self.A) and math.isfinite(self.C)):
            raise ValueError("parameters must be finite")
        if self.m <= 0.0:
            raise ValueError(f"mass must be positive, got {self.m}")
        if self.A <= 0.0 or abs(self.C) >= self.A:
            raise UnstablePotentialError(
                f"need A > |C| >= 0 for a bound state, got A={self.A}, C={self.C}"
            )


@dataclass(frozen=True)
class NormalModeData:
    K: float
    eta: float
    omega: float
    omega_plus: float
    omega_minus: float


def normal_modes(params: CoupledParams) -> NormalModeData:
    """Diagonalize the potential: K, the squeeze parameter eta, and the mode frequencies."""
    K = math.sqrt(params.A**2 - params.C**2)
    eta = 0.25 * math.log((params.A - params.C) / (params.A + params.C))
    omega = math.sqrt(K / params.m)
    return NormalModeData(
        K=K,
        eta=eta,
        omega=omega,
        omega_plus=omega * math.exp(eta),
        omega_minus=omega * math.exp(-eta),
    )


def to_normal(x1, x2):
    """Rotate particle coordinates to normal coordinates (y1, y2)."""
    s = 1.0 / math.sqrt(2.0)
    return s * (np.asarray(x1) + np.asarray(x2)), s * (np.asarray(x1) - np.asarray(x2))


def from_normal(y1, y2):
    s = 1.0 / math.sqrt(2.0)
    return s * (np.asarray(y1) + np.asarray(y2)), s * (np.asarray(y1) - np.asarray(y2))


def ground_state(x1, x2, eta: float):
    """Entangled ground-state wavefunction psi_eta(x1, x2), vectorized.

    Positive everywhere, peak value 1/sqrt(pi) at the origin, and normalized:
    the squeeze only redistributes the Gaussian between the two normal axes.
    """
    if not math.isfinite(eta):
        raise ValueError("eta must be finite")
    x1a = np.asarray(x1, dtype=float)
    x2a = np.asarray(x2, dtype=float)
    em, ep = math.exp(-eta), math.exp(eta)
    out = np.pi ** -0.5 * np.exp(-0.25 * (em * (x1a + x2a) ** 2 + ep * (x1a - x2a) ** 2))
    return out if out.ndim else float(out)


def hamiltonian_energy(x, p, params: CoupledParams) -> float:
    """Classical energy of a phase-space point ((x1,x2), (p1,p2))."""
    x1, x2 = (float(v) for v in x)
    p1, p2 = (float(v) for v in p)
    return 0.5 * (
        (p1 * p1 + p2 * p2) / params.m
        + params.A * (x1 * x1 + x2 * x2)
        + 2.0 * params.C * x1 * x2
    )


def normal_mode_energy(y, py, params: CoupledParams) -> float:
    """Same energy in normal coordinates: two uncoupled oscillators.

    H = (py1^2 + py2^2)/(2m) + (K/2)(e^{-2eta} y1^2 + e^{+2eta} y2^2).
    The y1 mode carries stiffness A+C = K e^{-2eta} and y2 carries A-C = K e^{+2eta}.
    """
    modes = normal_modes(params)
    y1, y2 = (float(v) for v in y)
    q1, q2 = (float(v) for v in py)
    return 0.5 * (
        (q1 * q1 + q2 * q2) / params.m
        + modes.K * (math.exp(-2.0 * modes.eta) * y1 * y1 + math.exp(2.0 * modes.eta) * y2 * y2)
    )

"""Schmidt expansion of the squeezed ground state and what tracing one mode costs.

The entangled Gaussian separates over the Hermite basis with one index,

    psi_eta(x1, x2) = sum_k c_k phi_k(x1) phi_k(x2),
    c_k = tanh^k(eta/2) / cosh(eta/2),

(a Mehler-kernel identity; note the half-angle in the prefactor, which is what
makes sum_k c_k^2 = 1 exact). Discarding one oscillator leaves the diagonal
mixed state with eigenvalues

    p_k = c_k^2 = tanh^{2k}(eta/2) / cosh^2(eta/2),

a geometric ladder, so everything downstream is closed form: purity
Tr rho^2 = 1/cosh(eta), von Neumann entropy

    S = 2 { cosh^2(eta/2) ln cosh(eta/2) - sinh^2(eta/2) ln sinh(eta/2) },

and the ladder is literally Boltzmann: setting tanh^2(eta/2) = e^{-x} with
x = hbar omega / kB T makes p_k = (1 - e^{-x}) e^{-kx}, so the unobserved
mode looks exactly thermal at temperature T = omega/x. The thermal-side
entropy x/(e^x - 1) - ln(1 - e^{-x}) then equals S identically, not just
asymptotically. S is even in eta and vanishes only at eta = 0.
"""

import math
from dataclasses import dataclass

import numpy as np

from .numerics import hermite_basis


@dataclass(frozen=True)
class FockExpansion:
    """Truncated Schmidt expansion: coefficients c_0..c_{k_max} and the exact tail.

    tail = sum_{k > k_max} c_k^2 = tanh^{2(k_max+1)}(eta/2), reported with
    every truncation so nothing silently leaks probability.
    """

    eta: float
    k_max: int
    coefficients: np.ndarray
    tail: float

    def reconstruct(self, x1, x2):
        """Evaluate sum_{k<=k_max} c_k phi_k(x1) phi_k(x2) pointwise."""
        x1a = np.atleast_1d(np.asarray(x1, dtype=float))
        x2a = np.atleast_1d(np.asarray(x2, dtype=float))
        shape = np.broadcast_shapes(x1a.shape, x2a.shape)
        b1 = hermite_basis(self.k_max, np.broadcast_to(x1a, shape).ravel())
        b2 = hermite_basis(self.k_max, np.broadcast_to(x2a, shape).ravel())
        vals = (self.coefficients[:, None] * b1 * b2).sum(axis=0).reshape(shape)
        return vals if np.ndim(x1) or np.ndim(x2) else float(vals[0])


@dataclass(frozen=True)
class ReducedState:
    """Spectrum of the one-mode reduced density, truncated at k_max."""

    eta: float
    k_max: int
    eigenvalues: np.ndarray
    tail: float


@dataclass(frozen=True)
class ThermalMap:
    """Effective thermal description of the unobserved mode."""

    omega: float
    x: float  # hbar omega / kB T
    temperature: float


def _check_eta(eta: float) -> float:
    eta = float(eta)
    if not math.isfinite(eta):
        raise ValueError("eta must be finite")
    return eta


def schmidt_coefficients(eta: float, k_max: int = 64) -> FockExpansion:
    """Schmidt coefficients c_k = tanh^k(eta/2)/cosh(eta/2) up to k_max."""
    eta = _check_eta(eta)
    if k_max < 0:
        raise ValueError(f"k_max must be nonnegative, got {k_max}")
    t = math.tanh(eta / 2.0)
    coeffs = t ** np.arange(k_max + 1) / math.cosh(eta / 2.0)
    coeffs.flags.writeable = False
    tail = math.tanh(abs(eta) / 2.0) ** (2 * (k_max + 1))
    return FockExpansion(eta=eta, k_max=int(k_max), coefficients=coeffs, tail=tail)


def reduced_state(eta: float, k_max: int = 64) -> ReducedState:
    """Eigenvalues p_k of the reduced density, a geometric distribution in k."""
    eta = _check_eta(eta)
    if k_max < 0:
        raise ValueError(f"k_max must be nonnegative, got {k_max}")
    t2 = math.tanh(abs(eta) / 2.0) ** 2
    p = t2 ** np.arange(k_max + 1) / math.cosh(eta / 2.0) ** 2
    p.flags.writeable = False
    return ReducedState(eta=eta, k_max=int(k_max), eigenvalues=p, tail=t2 ** (k_max + 1))


def purity(eta: float) -> float:
    """Tr rho^2 = 1/cosh(eta): 1 iff uncoupled, decays to 0 as |eta| grows."""
    return 1.0 / math.cosh(_check_eta(eta))


def purity_series(eta: float, k_max: int = 64) -> float:
    """Truncated sum_k p_k^2; must agree with the closed form up to the tail."""
    p = reduced_state(eta, k_max).eigenvalues
    return float(np.sum(p * p))


def entropy(eta: float) -> float:
    """Von Neumann entropy of the reduced state, in nats. Even in eta; S(0) = 0.

    Closed form 2{cosh^2(eta/2) ln cosh(eta/2) - sinh^2(eta/2) ln sinh(eta/2)},
    evaluated as 2{sinh^2 ln coth + ln cosh} (the same thing, ch^2 = sh^2 + 1)
    so the two large terms never cancel; good out to eta ~ 700, where it joins
    the asymptote S = eta + 1 - 2 ln 2.
    """
    eta = abs(_check_eta(eta))
    if eta == 0.0:
        return 0.0
    e2 = math.exp(-eta)  # e^{-2h} with h = eta/2
    if e2 == 0.0:
        return eta + 1.0 - 2.0 * math.log(2.0)
    ln_coth = math.log1p(e2) - math.log1p(-e2)
    ln_ch = 0.5 * eta - math.log(2.0) + math.log1p(e2)
    # sinh^2(h) ln coth(h) = (1 - e2)^2 / 4 * (ln coth / e2), overflow-free
    return 2.0 * (0.25 * (1.0 - e2) ** 2 * (ln_coth / e2) + ln_ch)


def effective_temperature(eta: float, omega: float = 1.0) -> ThermalMap:
    """Temperature at which the unobserved mode's ladder is exactly Boltzmann.

    tanh^2(eta/2) = e^{-x} with x = hbar omega / kB T, so T = omega/x (units
    hbar = kB = 1). eta = 0 is the zero-temperature limit (x -> infinity) and
    is rejected explicitly rather than returning an infinity.
    """
    eta = _check_eta(eta)
    if not math.isfinite(omega) or omega <= 0.0:
        raise ValueError(f"omega must be positive, got {omega}")
    if eta == 0.0:
        raise ValueError("eta = 0 is the zero-temperature limit; no finite x exists")
    # log tanh(|eta|/2) via log1p keeps x = ~4 e^{-|eta|} alive long after
    # tanh itself rounds to 1 (|eta| ~ 37); x underflows only near eta ~ 745
    e = math.exp(-abs(eta))
    x = -2.0 * (math.log1p(-e) - math.log1p(e))
    if x <= 0.0:
        raise ValueError(f"|eta| = {abs(eta):g} is too large: x underflows to zero")
    return ThermalMap(omega=float(omega), x=x, temperature=float(omega) / x)


def thermal_entropy(x: float) -> float:
    """Entropy of a thermal oscillator as a function of x = hbar omega / kB T.

    S(x) = x/(e^x - 1) - ln(1 - e^{-x}); diverges as x -> 0+, vanishes as
    x -> infinity. Composing with the map above reproduces entropy(eta) exactly.
    """
    x = float(x)
    if math.isnan(x) or x <= 0.0:
        raise ValueError(f"x must be positive, got {x}")
    if x >= 700.0:
        # exact tail (x + 1) e^{-x} before expm1(x) overflows; also covers inf
        return (x + 1.0) * math.exp(-x) if math.isfinite(x) else 0.0
    return x / math.expm1(x) - math.log(-math.expm1(-x))

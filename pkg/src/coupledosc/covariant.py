"""The same squeeze, read relativistically: boosts act on light-cone axes.

With light-cone variables u = (z+t)/sqrt2, v = (z-t)/sqrt2 a boost of rapidity
eta is diagonal, u -> e^{eta/2} u, v -> e^{-eta/2} v, so the product uv (and
with it z^2 - t^2) is invariant. Starting from the rest-frame Gaussian

    psi_0(z, t) = (1/sqrt pi) exp{-(z^2 + t^2)/2}

the boosted wavefunction

    psi_eta(z, t) = (1/sqrt pi) exp{-(e^{-eta} u^2 + e^{eta} v^2)/2}

has exactly the functional form of the coupled-oscillator ground state under
(x1, x2) -> (z, t): one formalism, two readings. The momentum-space partner
uses the conjugate light-cone pair q_u = (q0 - qz)/sqrt2, q_v = (q0 + qz)/sqrt2
(note the swap) and carries the inverted squeeze on that pair:

    phi_eta(qz, q0) = (1/sqrt pi) exp{-(e^{eta} q_u^2 + e^{-eta} q_v^2)/2},

which is precisely the 2D Fourier transform of psi_eta with kernel
e^{i(qz z - q0 t)}/(2 pi). The pairing swap makes the family self-dual,
phi_eta(a, b) = psi_eta(a, b) as functions: light-cone conjugates (u, q_u)
stay minimum-uncertainty while the Cartesian widths of z and qz grow
together. Both states satisfy the boost-invariant oscillator
equation 1/2 {(z^2 - t^2) - (d^2/dz^2 - d^2/dt^2)} psi = 0 (eigenvalue zero:
the two zero-point halves cancel).
"""

import math
from dataclasses import dataclass

import numpy as np

from .numerics import GridResolutionError, QuadratureGrid, default_grid

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class SpacetimePoint:
    z: float
    t: float

    @property
    def u(self) -> float:
        return (self.z + self.t) / _SQRT2

    @property
    def v(self) -> float:
        return (self.z - self.t) / _SQRT2

    @classmethod
    def from_lightcone(cls, u: float, v: float) -> "SpacetimePoint":
        return cls(z=(u + v) / _SQRT2, t=(u - v) / _SQRT2)


@dataclass(frozen=True)
class MomentumPoint:
    qz: float
    q0: float

    @property
    def q_u(self) -> float:
        return (self.q0 - self.qz) / _SQRT2

    @property
    def q_v(self) -> float:
        return (self.q0 + self.qz) / _SQRT2

    @classmethod
    def from_lightcone(cls, q_u: float, q_v: float) -> "MomentumPoint":
        return cls(qz=(q_v - q_u) / _SQRT2, q0=(q_u + q_v) / _SQRT2)


def boost_matrix(eta: float) -> np.ndarray:
    """2x2 boost acting on (z, t): [[cosh(eta/2), sinh(eta/2)], [sinh, cosh]]."""
    if not math.isfinite(eta):
        raise ValueError("eta must be finite")
    ch, sh = math.cosh(eta / 2.0), math.sinh(eta / 2.0)
    return np.array([[ch, sh], [sh, ch]])


def boost_point(point: SpacetimePoint, eta: float) -> SpacetimePoint:
    """Boost a spacetime point; scales u by e^{eta/2} and v by e^{-eta/2}."""
    m = boost_matrix(eta)
    z, t = m @ (point.z, point.t)
    return SpacetimePoint(z=float(z), t=float(t))


def dirac_gaussian(z, t):
    """Rest-frame ground state (1/sqrt pi) exp{-(z^2 + t^2)/2}, vectorized."""
    za = np.asarray(z, dtype=float)
    ta = np.asarray(t, dtype=float)
    out = np.pi ** -0.5 * np.exp(-0.5 * (za * za + ta * ta))
    return out if out.ndim else float(out)


def boosted_wavefunction(z, t, eta: float):
    """psi_eta(z, t) evaluated through its light-cone components."""
    if not math.isfinite(eta):
        raise ValueError("eta must be finite")
    za = np.asarray(z, dtype=float)
    ta = np.asarray(t, dtype=float)
    u = (za + ta) / _SQRT2
    v = (za - ta) / _SQRT2
    out = np.pi ** -0.5 * np.exp(-0.5 * (math.exp(-eta) * u * u + math.exp(eta) * v * v))
    return out if out.ndim else float(out)


def momentum_wavefunction(qz, q0, eta: float):
    """phi_eta(qz, q0): the Fourier partner of psi_eta.

    Built on the conjugate pair (q_u, q_v) with the inverted squeeze; the
    pairing swap makes it numerically identical to psi_eta evaluated at the
    same arguments, which is the point: boosting widens the momentum
    distribution exactly as it widens the spatial one.
    """
    if not math.isfinite(eta):
        raise ValueError("eta must be finite")
    qza = np.asarray(qz, dtype=float)
    q0a = np.asarray(q0, dtype=float)
    qu = (q0a - qza) / _SQRT2
    qv = (q0a + qza) / _SQRT2
    out = np.pi ** -0.5 * np.exp(-0.5 * (math.exp(eta) * qu * qu + math.exp(-eta) * qv * qv))
    return out if out.ndim else float(out)


def _check_resolution(eta: float, grid: QuadratureGrid):
    sigma_max = math.sqrt(math.exp(abs(eta)) / 2.0)
    if sigma_max > grid.extent / 4.0:
        raise GridResolutionError(
            f"state width {sigma_max:.3g} exceeds extent/4 = {grid.extent / 4.0:.3g}; "
            "use a wider grid"
        )


def fourier_consistency(
    eta: float,
    grid: QuadratureGrid | None = None,
    probe_extent: float = 3.0,
    probe_count: int = 21,
) -> float:
    """Max deviation between the transformed psi_eta and the closed-form phi_eta.

    Computes (1/2pi) integral psi_eta(z, t) e^{i(qz z - q0 t)} dz dt by tensor
    quadrature on a probe mesh of momenta and compares with
    momentum_wavefunction. The imaginary part (zero by symmetry) is included
    in the reported deviation.
    """
    g = grid if grid is not None else default_grid()
    if not math.isfinite(eta):
        raise ValueError("eta must be finite")
    _check_resolution(eta, g)
    q = np.linspace(-probe_extent, probe_extent, probe_count)
    Z, T = np.meshgrid(g.nodes, g.nodes, indexing="ij")
    psi = boosted_wavefunction(Z, T, eta)
    # separable kernel: F[a, b] = sum_{jk} e^{i q_a z_j} psi[j,k] e^{-i q_b t_k} w_j w_k
    ez = np.exp(1j * np.outer(q, g.nodes)) * g.weights
    et = np.exp(-1j * np.outer(g.nodes, q)) * g.weights[:, None]
    transformed = (ez @ psi @ et) / (2.0 * math.pi)
    QZ, Q0 = np.meshgrid(q, q, indexing="ij")
    return float(np.max(np.abs(transformed - momentum_wavefunction(QZ, Q0, eta))))


def wave_equation_residual(z: float, t: float, eta: float, step: float = 1e-3) -> float:
    """Residual of 1/2 {(z^2 - t^2) - (d^2/dz^2 - d^2/dt^2)} psi_eta at a point.

    Second derivatives by central differences; the boosted ground state is a
    zero mode of this boost-invariant operator, so the residual is pure
    discretization error, O(step^2).
    """
    h = float(step)
    psi0 = boosted_wavefunction(z, t, eta)
    d2z = (boosted_wavefunction(z + h, t, eta) - 2.0 * psi0 + boosted_wavefunction(z - h, t, eta)) / (h * h)
    d2t = (boosted_wavefunction(z, t + h, eta) - 2.0 * psi0 + boosted_wavefunction(z, t - h, eta)) / (h * h)
    return 0.5 * ((z * z - t * t) * psi0 - (d2z - d2t))


def hadron_variables(x_a, x_b) -> tuple[np.ndarray, np.ndarray]:
    """Average and relative four-vectors of a two-constituent bound state.

    X = (x_a + x_b)/2 locates the hadron; x = (x_a - x_b)/(2 sqrt2) is the
    internal separation. Four-vectors are (t, x, y, z) tuples.
    """
    xa = np.asarray(x_a, dtype=float)
    xb = np.asarray(x_b, dtype=float)
    if xa.shape != (4,) or xb.shape != (4,):
        raise ValueError("four-vectors must have exactly 4 components")
    if not (np.all(np.isfinite(xa)) and np.all(np.isfinite(xb))):
        raise ValueError("four-vectors must be finite")
    return (xa + xb) / 2.0, (xa - xb) / (2.0 * _SQRT2)


def momentum_variables(p_a, p_b) -> tuple[np.ndarray, np.ndarray]:
    """Conjugate pair: total P = p_a + p_b and relative q = sqrt2 (p_a - p_b)."""
    pa = np.asarray(p_a, dtype=float)
    pb = np.asarray(p_b, dtype=float)
    if pa.shape != (4,) or pb.shape != (4,):
        raise ValueError("four-vectors must have exactly 4 components")
    if not (np.all(np.isfinite(pa)) and np.all(np.isfinite(pb))):
        raise ValueError("four-vectors must be finite")
    return pa + pb, _SQRT2 * (pa - pb)

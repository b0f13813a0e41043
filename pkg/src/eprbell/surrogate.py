"""Finite matrix model of the maximally Bell-correlated pair of factors.

The bipartite space is C^m (x) C^m with the maximally entangled unit vector
Omega (coefficients 1/sqrt(m) on matched basis pairs), which implements the
normalized trace of the first factor: <Omega, (A x I) Omega> = tr(A)/m.
A rank-m/2 projection P is equivalent to its complement through a partial
isometry V (V V* = P, V* V = I - P, V^2 = 0), giving the self-adjoint
unitary family A(theta) = e^{i theta} V + e^{-i theta} V*.  The transpose in
the matched basis is the *-anti-isomorphism onto the commutant that fixes
Omega, and the four operators A(0), A(pi/2) and their images at angles
+-pi/4 reach the CHSH expectation 2 cos(pi/4) = sqrt(2), independent of m.

Operators on the bipartite space are applied through the reshape identity
(A x B) vec(M) = vec(A M B^T), never by forming m^2 x m^2 matrices; tests
cross-check against explicit Kronecker products at small m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

BUILD_TOL = 1e-13
MAX_DIM = 64


@dataclass(frozen=True, eq=False)
class MatrixModel:
    m: int
    omega: np.ndarray  # unit vector of length m*m
    proj: np.ndarray  # rank m/2 diagonal projection
    isometry: np.ndarray  # V with V V* = proj, V* V = I - proj


def _vec(mat: np.ndarray) -> np.ndarray:
    return mat.reshape(-1)


def _unvec(vec: np.ndarray, m: int) -> np.ndarray:
    return vec.reshape(m, m)


def apply_left(model: MatrixModel, a: np.ndarray, vec: np.ndarray) -> np.ndarray:
    """(A x I) applied to a bipartite vector."""
    return _vec(a @ _unvec(vec, model.m))


def apply_right(model: MatrixModel, b: np.ndarray, vec: np.ndarray) -> np.ndarray:
    """(I x B) applied to a bipartite vector."""
    return _vec(_unvec(vec, model.m) @ b.T)


def expect_left(model: MatrixModel, a: np.ndarray) -> complex:
    """<Omega, (A x I) Omega>."""
    return complex(np.vdot(model.omega, apply_left(model, a, model.omega)))


def build_model(m: int) -> MatrixModel:
    """Construct and verify the model at factor dimension m (even, <= 64)."""
    if m % 2 != 0 or m < 2 or m > MAX_DIM:
        raise ValueError(f"factor dimension must be even and in [2, {MAX_DIM}]")
    half = m // 2
    omega_mat = np.eye(m, dtype=complex) / math.sqrt(m)
    omega = _vec(omega_mat)
    proj = np.zeros((m, m), dtype=complex)
    proj[:half, :half] = np.eye(half)
    isometry = np.zeros((m, m), dtype=complex)
    isometry[:half, half:] = np.eye(half)
    model = MatrixModel(m, omega, proj, isometry)

    v, p = isometry, proj
    eye = np.eye(m)
    checks = {
        "VV* = P": v @ v.conj().T - p,
        "V*V = I-P": v.conj().T @ v - (eye - p),
        "V^2 = 0": v @ v,
        "(V*)^2 = 0": v.conj().T @ v.conj().T,
        # Omega implements the normalized trace of factor 1: checking the
        # reshaped identity Omega_mat Omega_mat* = I/m covers all A by
        # linearity in the matrix units.
        "trace vector": omega_mat @ omega_mat.conj().T - eye / m,
    }
    for label, residue in checks.items():
        dev = float(np.max(np.abs(residue)))
        if dev > BUILD_TOL:
            raise AssertionError(f"model invariant {label} fails by {dev}")
    half_weight = expect_left(model, p)
    if abs(half_weight - 0.5) > BUILD_TOL:
        raise AssertionError("projection weight <Omega, P Omega> is not 1/2")
    return model


def a_theta(model: MatrixModel, theta: float) -> np.ndarray:
    """The self-adjoint unitary e^{i theta} V + e^{-i theta} V*."""
    phase = complex(math.cos(theta), math.sin(theta))
    return phase * model.isometry + phase.conjugate() * model.isometry.conj().T


def gamma(model: MatrixModel, a: np.ndarray) -> np.ndarray:
    """Transpose in the matched basis: the anti-isomorphism with gamma(A) Omega = A Omega.

    The returned matrix acts on the second factor, as I x gamma(A).
    """
    return np.array(a).T.copy()


def correlation(model: MatrixModel, theta1: float, theta2: float) -> float:
    """<Omega, (A(theta1) A(theta2) x I) Omega>; equals cos(theta1 - theta2)."""
    product = a_theta(model, theta1) @ a_theta(model, theta2)
    return float(expect_left(model, product).real)


def correlation_grid(model: MatrixModel, thetas: np.ndarray) -> np.ndarray:
    """correlation() over all angle pairs, batched.

    Builds every A(theta) once and contracts the same expectation as
    expect_left; agreement with pointwise correlation() is part of the
    test suite.
    """
    thetas = np.asarray(thetas, dtype=float)
    mats = np.stack([a_theta(model, t) for t in thetas])
    omega_mat = _unvec(model.omega, model.m)
    rho = omega_mat @ omega_mat.conj().T
    # <Omega,(X x I)Omega> = tr(X rho) with rho = Omega_mat Omega_mat*
    weighted = mats @ rho
    return np.real(np.einsum("jab,kba->jk", mats, weighted))


def bell_expectation(
    model: MatrixModel,
    a1: np.ndarray,
    a2: np.ndarray,
    b1: np.ndarray,
    b2: np.ndarray,
) -> float:
    """(1/2) <Omega, (A1(B1+B2) + A2(B1-B2)) Omega> with B_i on factor 2."""
    omega = model.omega
    vec = apply_right(model, b1 + b2, omega)
    vec = apply_left(model, a1, vec)
    vec2 = apply_right(model, b1 - b2, omega)
    vec2 = apply_left(model, a2, vec2)
    return float(np.real(np.vdot(omega, 0.5 * (vec + vec2))))


def chsh_value(model: MatrixModel) -> float:
    """Bell expectation at angles (0, pi/2) against (pi/4, -pi/4): sqrt(2)."""
    a1 = a_theta(model, 0.0)
    a2 = a_theta(model, math.pi / 2)
    b1 = gamma(model, a_theta(model, math.pi / 4))
    b2 = gamma(model, a_theta(model, -math.pi / 4))
    return bell_expectation(model, a1, a2, b1, b2)


def double_deviation(
    model: MatrixModel, a: np.ndarray, partner: np.ndarray
) -> float:
    """<Omega, D^2 Omega> with D = (A x I) - (I x partner).

    Computed by applying D twice, not from any closed form, so perturbed
    partners report their true quadratic deviation.
    """

    def apply_d(vec: np.ndarray) -> np.ndarray:
        return apply_left(model, a, vec) - apply_right(model, partner, vec)

    image = apply_d(model.omega)
    return float(np.real(np.vdot(model.omega, apply_d(image))))


def double_of(model: MatrixModel, a: np.ndarray) -> dict:
    """The unique perfectly correlated partner gamma(A) of a self-adjoint A."""
    a = np.asarray(a, dtype=complex)
    if float(np.max(np.abs(a - a.conj().T))) > 1e-12:
        raise ValueError("double_of expects a self-adjoint matrix")
    double = gamma(model, a)
    return {"double": double, "deviation": double_deviation(model, a, double)}

"""Finite frames in the representation space generated by a state.

A state omega turns the polynomial algebra into a pre-Hilbert space with
inner product <P, Q> = omega(P* Q); the vectors W(x) acting on the cyclic
vector span a dense subspace.  The full space for the strictly correlated
state is nonseparable, so everything here is restricted to finite frames of
generator vectors: their Gram matrices, compressions of algebra elements,
and the norm bounds those compressions certify.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .states import StateFunctional, eval_poly
from .weyl import (
    Point,
    WeylPolynomial,
    adjoint,
    point,
    tensor_embed,
    unit_phase,
    weyl_multiply,
)

#: Eigenvalue floor used when whitening numerically singular Gram matrices.
GRAM_EIGENVALUE_FLOOR = 1e-12


class GramPositivityError(RuntimeError):
    """A frame Gram matrix failed positive semidefiniteness (engine bug)."""


@dataclass(frozen=True, eq=False)
class GnsFrame:
    """An ordered family of generator vectors W(x_j) Omega with its Gram.

    gram[j,k] = omega(W(x_j)* W(x_k)); diagonal entries are 1 because the
    generators are unitary.  Equality is identity: the Gram is an array.
    """

    points: tuple[Point, ...]
    gram: np.ndarray

    def __len__(self) -> int:
        return len(self.points)


def build_frame(state: StateFunctional, points: Sequence[Point]) -> GnsFrame:
    """Assemble the Gram matrix of the frame through the product engine.

    Every entry goes through weyl_multiply + eval_poly rather than any
    closed-form kernel, so the frame doubles as a consistency probe.  The
    Gram must come out positive semidefinite within 1e-10 and with unit
    diagonal, else the engine itself is at fault.
    """
    pts = tuple(tuple(Fraction(c) for c in p) for p in points)
    if len(set(pts)) != len(pts):
        raise ValueError("frame points must be pairwise distinct")
    n = len(pts)
    gram = np.empty((n, n), dtype=complex)
    gens = [WeylPolynomial.generator(p) for p in pts]
    adjs = [adjoint(g) for g in gens]
    for j in range(n):
        for k in range(n):
            gram[j, k] = eval_poly(state, weyl_multiply(adjs[j], gens[k]))
    lam_min = float(np.linalg.eigvalsh(gram)[0]) if n else 0.0
    if lam_min < -1e-10:
        raise GramPositivityError(f"frame Gram has eigenvalue {lam_min}")
    if n and np.max(np.abs(np.diag(gram) - 1.0)) > 1e-12:
        raise GramPositivityError("frame Gram diagonal deviates from 1")
    return GnsFrame(pts, gram)


def compress_operator(
    state: StateFunctional, frame: GnsFrame, p: WeylPolynomial
) -> np.ndarray:
    """Matrix elements omega(W(x_j)* P W(x_k)) of P against the frame.

    For self-adjoint P the result is Hermitian up to phase roundoff.
    """
    if p.dim != 4:
        raise ValueError("compress_operator expects a dimension-4 polynomial")
    n = len(frame)
    out = np.empty((n, n), dtype=complex)
    gens = [WeylPolynomial.generator(x) for x in frame.points]
    adjs = [adjoint(g) for g in gens]
    for j in range(n):
        left = weyl_multiply(adjs[j], p)
        for k in range(n):
            out[j, k] = eval_poly(state, weyl_multiply(left, gens[k]))
    return out


def collinearity_check(
    a: Fraction, b: Fraction, c: Fraction, d: Fraction, state: StateFunctional
) -> dict:
    """Overlap of W(a,b) x W(c,d) Omega with W(a+c, b-d) x I Omega.

    For the strictly correlated state the two vectors are collinear: the
    overlap is unimodular with phase exp{it} exp{ic*lambda} exp{-id*mu},
    t = (ad + bc)/2.  This is what collapses the two-sided generator family
    onto the first factor alone.
    """
    a, b, c, d = Fraction(a), Fraction(b), Fraction(c), Fraction(d)
    psi = weyl_multiply(
        tensor_embed(WeylPolynomial.generator(point(a, b)), 1),
        tensor_embed(WeylPolynomial.generator(point(c, d)), 2),
    )
    phi = tensor_embed(WeylPolynomial.generator(point(a + c, b - d)), 1)
    overlap = eval_poly(state, weyl_multiply(adjoint(psi), phi))
    t = float((a * d + b * c) / 2)
    expected = (
        unit_phase(t)
        * unit_phase(float(c) * state.lam)
        * unit_phase(-float(d) * state.mu)
    )
    modulus = abs(overlap)
    phase_dev = abs(overlap - expected)
    return {
        "overlap": overlap,
        "modulus": float(modulus),
        "expected_phase": expected,
        "phase_deviation": float(phase_dev),
        "passed": abs(modulus - 1.0) <= 1e-12 and phase_dev <= 1e-12,
    }


def trace_vector_check(
    state: StateFunctional, p: WeylPolynomial, q: WeylPolynomial, slot: int
) -> dict:
    """omega(embed(PQ)) = omega(embed(QP)) for one-particle polynomials."""
    if p.dim != 2 or q.dim != 2:
        raise ValueError("trace_vector_check expects dimension-2 polynomials")
    forward = eval_poly(state, tensor_embed(weyl_multiply(p, q), slot))
    reverse = eval_poly(state, tensor_embed(weyl_multiply(q, p), slot))
    deviation = abs(forward - reverse)
    return {
        "forward": forward,
        "reverse": reverse,
        "deviation": float(deviation),
        "passed": deviation <= 1e-10,
    }


def norm_lower_bound(
    state: StateFunctional,
    frame: GnsFrame,
    p: WeylPolynomial,
    floor: float = GRAM_EIGENVALUE_FLOOR,
) -> float:
    """Largest singular value of the Gram-whitened compression of P.

    The compression acts on the span of the frame vectors, so its norm can
    never exceed the operator norm of P: the returned value is a certified
    lower bound up to numerical error, complementing the one_norm upper
    bound.  Numerically singular Grams (common here, where many entries are
    exact zeros and ones) are handled by flooring the eigenvalues; a warning
    is emitted when directions had to be dropped.
    """
    if not len(frame):
        return 0.0
    evals, vecs = np.linalg.eigh(frame.gram)
    keep = evals > floor
    if float(evals[0]) <= 1e-8:
        warnings.warn(
            "frame Gram is numerically singular; whitening on the"
            f" {int(np.count_nonzero(keep))}-dimensional regular part",
            RuntimeWarning,
            stacklevel=2,
        )
    if not np.any(keep):
        return 0.0
    comp = compress_operator(state, frame, p)
    white = vecs[:, keep] / np.sqrt(evals[keep])
    reduced = white.conj().T @ comp @ white
    return float(np.linalg.svd(reduced, compute_uv=False)[0])

"""Generator families for the Schwarz class B and the Caratheodory class P.

The Schwarz class B consists of analytic self-maps w of the unit disk
with w(0) = 0; the Caratheodory class P of analytic p with p(0) = 1 and
positive real part.  The two classes are linked by the Cayley transform
w -> (1 + e^{i theta} w)/(1 - e^{i theta} w), which this module realizes
both on truncated series and in closed form.

Generators are small frozen dataclasses describing a function symbolically;
``expand_*`` produces its Taylor series to a requested order, while
``evaluate_*`` evaluates the function itself at points of the disk
(used by pointwise checks that must not be contaminated by truncation).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from schwarzlab.series import (
    CompositionDomainError,
    TruncatedSeries,
    add_scaled,
    compose,
    geometric_mobius,
    mul,
    reciprocal,
    scale,
)

#: |b1| within this distance of 1 selects the rotation branch of the
#: second-coefficient extremal family.
UNIT_BRANCH_TOL = 1e-12

#: Validation cap on Blaschke zero moduli; sampled zeros stay within 0.9.
ZERO_MODULUS_CAP = 0.95
SAMPLING_ZERO_RADIUS = 0.9

#: Herglotz atom weights must sum to 1 within this tolerance.
WEIGHT_SUM_TOL = 1e-12

#: Atom-count cap used by the Herglotz sampler.
DEFAULT_MAX_ATOMS = 8


class InvalidGeneratorError(ValueError):
    """Generator parameters violate the family's invariants."""


@dataclass(frozen=True)
class MonomialRotation:
    """w(z) = e^{i theta} z^k, the equality family of the coefficient bound |b_k| <= 1."""

    k: int
    theta: float


@dataclass(frozen=True)
class B2Extremal:
    """Extremal family of |b2| <= 1 - |b1|^2.

    For |b1| < 1 this is w(z) = (b1 z + e^{i theta} z^2)/(1 + e^{i theta}
    conj(b1) z); at |b1| = 1 it degenerates to the rotation b1 * z.
    """

    b1: complex
    theta: float


@dataclass(frozen=True)
class FiniteBlaschke:
    """e^{i phi} z^m prod_j (|a_j|/a_j)(a_j - z)/(1 - conj(a_j) z).

    m >= 1 guarantees w(0) = 0.  A zero a_j = 0 contributes a plain factor
    z (the unimodular normalizer has no limit there).
    """

    phi: float
    m: int
    zeros: tuple[complex, ...] = ()


@dataclass(frozen=True)
class HerglotzAtoms:
    """Convex combination sum_j lambda_j (1 + e^{i alpha_j} z)/(1 - e^{i alpha_j} z).

    ``atoms`` lists (weight, angle) pairs; weights are positive and sum to 1.
    These are exactly the finite-atomic members of class P, with
    coefficients c_k = sum_j lambda_j 2 e^{i k alpha_j}.
    """

    atoms: tuple[tuple[float, float], ...]


@dataclass(frozen=True)
class CayleyOfSchwarz:
    """p = (1 + e^{i theta} w)/(1 - e^{i theta} w) for a Schwarz generator w."""

    inner: "SchwarzGenerator"
    theta: float


@dataclass(frozen=True)
class InverseCayley:
    """w = e^{-i theta} (p - 1)/(p + 1) for a Caratheodory generator p."""

    inner: "CaratheodoryGenerator"
    theta: float


SchwarzGenerator = Union[MonomialRotation, B2Extremal, FiniteBlaschke, InverseCayley]
CaratheodoryGenerator = Union[HerglotzAtoms, CayleyOfSchwarz]


def validate_schwarz(g: SchwarzGenerator) -> None:
    """Raise InvalidGeneratorError unless g satisfies its family invariants."""
    if isinstance(g, MonomialRotation):
        if g.k < 1:
            raise InvalidGeneratorError("monomial power k must be >= 1")
    elif isinstance(g, B2Extremal):
        if abs(g.b1) > 1.0 + UNIT_BRANCH_TOL:
            raise InvalidGeneratorError("|b1| must be <= 1")
    elif isinstance(g, FiniteBlaschke):
        if g.m < 1:
            raise InvalidGeneratorError("Blaschke factor needs m >= 1 so that w(0) = 0")
        for a in g.zeros:
            if abs(a) > ZERO_MODULUS_CAP:
                raise InvalidGeneratorError(
                    f"Blaschke zero modulus {abs(a):.4f} exceeds cap {ZERO_MODULUS_CAP}"
                )
    elif isinstance(g, InverseCayley):
        validate_caratheodory(g.inner)
    else:
        raise InvalidGeneratorError(f"not a Schwarz generator: {g!r}")


def validate_caratheodory(g: CaratheodoryGenerator) -> None:
    """Raise InvalidGeneratorError unless g satisfies its family invariants."""
    if isinstance(g, HerglotzAtoms):
        if not g.atoms:
            raise InvalidGeneratorError("atom list must be non-empty")
        weights = [w for w, _ in g.atoms]
        if any(w <= 0 for w in weights):
            raise InvalidGeneratorError("atom weights must be positive")
        if abs(sum(weights) - 1.0) > WEIGHT_SUM_TOL:
            raise InvalidGeneratorError("atom weights must sum to 1")
    elif isinstance(g, CayleyOfSchwarz):
        validate_schwarz(g.inner)
    else:
        raise InvalidGeneratorError(f"not a Caratheodory generator: {g!r}")


# ---------------------------------------------------------------------------
# Cayley transform on truncated series
# ---------------------------------------------------------------------------

def cayley_from_schwarz(w: TruncatedSeries, theta: float) -> TruncatedSeries:
    """p = (1 + e^{i theta} w)/(1 - e^{i theta} w) on truncated series.

    Realized as the composition of the geometric Moebius series [1,2,2,...]
    with u = e^{i theta} w; requires w(0) = 0 exactly.  The first output
    coefficients expand to

        c1 = 2 e^{i theta} b1
        c2 = 2 (e^{i 2 theta} b1^2 + e^{i theta} b2)
        c3 = 2 (e^{i 3 theta} b1^3 + 2 e^{i 2 theta} b1 b2 + e^{i theta} b3)
        c4 = 2 (e^{i 4 theta} b1^4 + 3 e^{i 3 theta} b1^2 b2
                + 2 e^{i 2 theta} b1 b3 + e^{i 2 theta} b2^2 + e^{i theta} b4)
    """
    if w.coeffs[0] != 0:
        raise CompositionDomainError("Schwarz series must vanish at the origin")
    if w.order < 1:
        raise ValueError("need order >= 1")
    u = scale(w, np.exp(1j * theta))
    return compose(geometric_mobius(w.order), u)


def inverse_cayley(p: TruncatedSeries, theta: float) -> TruncatedSeries:
    """w = e^{-i theta} (p - 1)/(p + 1); inverse of cayley_from_schwarz.

    Requires p(0) = 1 exactly, which makes (p+1)(0) = 2 invertible and
    pins w(0) = 0 exactly.
    """
    if p.coeffs[0] != 1:
        raise ValueError("Caratheodory series must have constant term 1")
    one = TruncatedSeries.constant(1.0, p.order)
    num = add_scaled(p, one, -1.0)
    den = add_scaled(p, one, 1.0)
    return scale(mul(num, reciprocal(den)), np.exp(-1j * theta))


# ---------------------------------------------------------------------------
# Taylor expansion of generators
# ---------------------------------------------------------------------------

def _blaschke_factor_series(a: complex, order: int) -> TruncatedSeries:
    # (|a|/a)(a - z)/(1 - conj(a) z); for a = 0: plain z
    if a == 0:
        return TruncatedSeries.identity(order)
    lin = TruncatedSeries.zero(order).coeffs.copy()
    lin[0] = a
    lin[1] = -1.0
    den = TruncatedSeries.zero(order).coeffs.copy()
    den[0] = 1.0
    den[1] = -np.conj(a)
    fac = mul(TruncatedSeries(lin), reciprocal(TruncatedSeries(den)))
    return scale(fac, abs(a) / a)


def expand_schwarz(g: SchwarzGenerator, order: int) -> TruncatedSeries:
    """Taylor expansion of a Schwarz generator to the given order.

    Coefficients are exact up to roundoff: truncated arithmetic drops
    only powers beyond the order, never corrupts retained ones.
    """
    validate_schwarz(g)
    if order < 1:
        raise ValueError("need order >= 1")
    if isinstance(g, MonomialRotation):
        arr = np.zeros(order + 1, dtype=np.complex128)
        if g.k <= order:
            arr[g.k] = np.exp(1j * g.theta)
        return TruncatedSeries(arr)
    if isinstance(g, B2Extremal):
        if abs(g.b1) >= 1.0 - UNIT_BRANCH_TOL:
            arr = np.zeros(order + 1, dtype=np.complex128)
            arr[1] = g.b1 / abs(g.b1)
            return TruncatedSeries(arr)
        rot = np.exp(1j * g.theta)
        num = np.zeros(order + 1, dtype=np.complex128)
        num[1] = g.b1
        if order >= 2:
            num[2] = rot
        den = np.zeros(order + 1, dtype=np.complex128)
        den[0] = 1.0
        den[1] = rot * np.conj(g.b1)
        return mul(TruncatedSeries(num), reciprocal(TruncatedSeries(den)))
    if isinstance(g, FiniteBlaschke):
        arr = np.zeros(order + 1, dtype=np.complex128)
        if g.m <= order:
            arr[g.m] = np.exp(1j * g.phi)
        acc = TruncatedSeries(arr)
        for a in g.zeros:
            acc = mul(acc, _blaschke_factor_series(complex(a), order))
        return acc
    # InverseCayley
    p = expand_caratheodory(g.inner, order)
    return inverse_cayley(p, g.theta)


def expand_caratheodory(g: CaratheodoryGenerator, order: int) -> TruncatedSeries:
    """Taylor expansion of a Caratheodory generator to the given order."""
    validate_caratheodory(g)
    if order < 1:
        raise ValueError("need order >= 1")
    if isinstance(g, HerglotzAtoms):
        weights = np.array([w for w, _ in g.atoms])
        angles = np.array([a for _, a in g.atoms])
        ks = np.arange(1, order + 1)
        arr = np.zeros(order + 1, dtype=np.complex128)
        arr[0] = 1.0
        arr[1:] = 2.0 * (weights @ np.exp(1j * np.outer(angles, ks)))
        return TruncatedSeries(arr)
    # CayleyOfSchwarz
    w = expand_schwarz(g.inner, order)
    return cayley_from_schwarz(w, g.theta)


# ---------------------------------------------------------------------------
# Closed-form evaluation (no truncation)
# ---------------------------------------------------------------------------

def evaluate_schwarz(g: SchwarzGenerator, z: np.ndarray | complex) -> np.ndarray:
    """Evaluate the generator's function at points of the open disk."""
    validate_schwarz(g)
    z = np.asarray(z, dtype=np.complex128)
    if isinstance(g, MonomialRotation):
        return np.exp(1j * g.theta) * z**g.k
    if isinstance(g, B2Extremal):
        if abs(g.b1) >= 1.0 - UNIT_BRANCH_TOL:
            return (g.b1 / abs(g.b1)) * z
        rot = np.exp(1j * g.theta)
        return (g.b1 * z + rot * z**2) / (1.0 + rot * np.conj(g.b1) * z)
    if isinstance(g, FiniteBlaschke):
        acc = np.exp(1j * g.phi) * z**g.m
        for a in g.zeros:
            a = complex(a)
            if a == 0:
                acc = acc * z
            else:
                acc = acc * (abs(a) / a) * (a - z) / (1.0 - np.conj(a) * z)
        return acc
    # InverseCayley
    p = evaluate_caratheodory(g.inner, z)
    return np.exp(-1j * g.theta) * (p - 1.0) / (p + 1.0)


def evaluate_caratheodory(g: CaratheodoryGenerator, z: np.ndarray | complex) -> np.ndarray:
    """Evaluate the generator's function at points of the open disk."""
    validate_caratheodory(g)
    z = np.asarray(z, dtype=np.complex128)
    if isinstance(g, HerglotzAtoms):
        acc = np.zeros_like(z)
        for w, a in g.atoms:
            u = np.exp(1j * a) * z
            acc = acc + w * (1.0 + u) / (1.0 - u)
        return acc
    # CayleyOfSchwarz
    w = evaluate_schwarz(g.inner, z)
    u = np.exp(1j * g.theta) * w
    return (1.0 + u) / (1.0 - u)


# ---------------------------------------------------------------------------
# Deterministic sampling
# ---------------------------------------------------------------------------

def sample_schwarz(seed: int, count: int, max_degree: int) -> list[FiniteBlaschke]:
    """Seed-reproducible corpus of finite Blaschke products.

    m is uniform in {1, 2} (capped by max_degree), the zero count uniform
    in {0 .. max_degree - m}, zeros area-uniform in the disk of radius 0.9,
    phi uniform in [0, 2 pi).
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if max_degree < 1:
        raise ValueError("max_degree must be >= 1")
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        m = int(rng.integers(1, min(2, max_degree) + 1))
        n_zeros = int(rng.integers(0, max_degree - m + 1))
        radii = SAMPLING_ZERO_RADIUS * np.sqrt(rng.uniform(size=n_zeros))
        angles = rng.uniform(0.0, 2.0 * np.pi, size=n_zeros)
        zeros = tuple(complex(c) for c in radii * np.exp(1j * angles))
        phi = float(rng.uniform(0.0, 2.0 * np.pi))
        out.append(FiniteBlaschke(phi=phi, m=m, zeros=zeros))
    return out


def sample_herglotz(seed: int, count: int, max_atoms: int = DEFAULT_MAX_ATOMS) -> list[HerglotzAtoms]:
    """Seed-reproducible corpus of finite-atomic Caratheodory functions.

    Atom count uniform in {1 .. max_atoms}, weights Dirichlet-uniform
    (floored away from zero), angles uniform in [0, 2 pi).
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if max_atoms < 1:
        raise ValueError("max_atoms must be >= 1")
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(1, max_atoms + 1))
        weights = rng.dirichlet(np.ones(n)) + 1e-15
        weights = weights / weights.sum()
        angles = rng.uniform(0.0, 2.0 * np.pi, size=n)
        out.append(HerglotzAtoms(tuple((float(w), float(a)) for w, a in zip(weights, angles))))
    return out


def harmonic_boundary_atoms(k: int, theta: float) -> HerglotzAtoms:
    """Function of class P with c_k = 2 e^{i theta} on the coefficient boundary.

    k equally weighted atoms at angles theta/k + 2 pi l / k give
    c_j = 2 e^{i j theta / k} when k divides j and 0 otherwise, so the
    k-th coefficient sits at modulus exactly 2 and every harmonic c_{nk}
    equals 2 e^{i n theta}.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    atoms = tuple(
        (1.0 / k, theta / k + 2.0 * math.pi * l / k) for l in range(k)
    )
    return HerglotzAtoms(atoms)

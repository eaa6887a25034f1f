"""Coefficient and pointwise inequality checkers with slack reporting.

Each classical bound is a predicate returning a :class:`BoundReport`
carrying lhs, rhs and slack = rhs - lhs, so callers can aggregate
worst-case margins over a corpus instead of a bare pass/fail.

Tolerance policy: inequality checks use absolute slack tolerance 1e-9
(order-12 truncations of the sampled families sit far below this, and
tighter settings produce false failures near extremal configurations);
equality detection uses the looser 1e-8 since equality cases sit where
cancellation error peaks.  Pointwise checks evaluate generators in
closed form, so they avoid truncation entirely and run at 1e-12.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from schwarzlab.families import SchwarzGenerator, evaluate_schwarz
from schwarzlab.series import TruncatedSeries

INEQUALITY_TOL = 1e-9
EQUALITY_TOL = 1e-8
POINTWISE_TOL = 1e-12
IDENTITY_TOL = 1e-12


@dataclass(frozen=True)
class BoundReport:
    """Outcome of one inequality check: lhs <= rhs with slack = rhs - lhs."""

    name: str
    lhs: float
    rhs: float
    slack: float
    satisfied: bool
    equality: bool


def make_report(
    name: str,
    lhs: float,
    rhs: float,
    tol: float = INEQUALITY_TOL,
    eq_tol: float = EQUALITY_TOL,
) -> BoundReport:
    lhs = float(lhs)
    rhs = float(rhs)
    slack = rhs - lhs
    satisfied = slack >= -tol
    # equality additionally requires satisfaction: with eq_tol looser than
    # tol, a clear violation inside the equality band must not pass as an
    # attained bound.
    return BoundReport(
        name=name,
        lhs=lhs,
        rhs=rhs,
        slack=slack,
        satisfied=satisfied,
        equality=satisfied and abs(slack) <= eq_tol,
    )


def _require_schwarz_series(w: TruncatedSeries, min_order: int = 1) -> None:
    if w.coeffs[0] != 0:
        raise ValueError("Schwarz series must have b_0 = 0")
    if w.order < min_order:
        raise ValueError(f"need order >= {min_order}")


def _require_caratheodory_series(p: TruncatedSeries) -> None:
    if p.coeffs[0] != 1:
        raise ValueError("Caratheodory series must have c_0 = 1")


def livingston_gap(p: TruncatedSeries, s: int, t: int) -> BoundReport:
    """Livingston's inequality |c_s - c_t c_{s-t}| <= 2 on class P.

    Equality is attained for every (s, t) by the all-twos function
    (1+z)/(1-z).
    """
    _require_caratheodory_series(p)
    if not (1 <= t < s <= p.order):
        raise IndexError(f"need 1 <= t < s <= {p.order}, got (s={s}, t={t})")
    lhs = abs(p[s] - p[t] * p[s - t])
    return make_report(f"livingston(s={s},t={t})", lhs, 2.0)


def schwarz_coefficient_bounds(w: TruncatedSeries) -> list[BoundReport]:
    """|b_k| <= 1 for every k = 1..N, with equality only for rotations of z^k."""
    _require_schwarz_series(w)
    return [
        make_report(f"coefficient_bound(k={k})", abs(w[k]), 1.0)
        for k in range(1, w.order + 1)
    ]


def second_coefficient_bound(w: TruncatedSeries) -> BoundReport:
    """|b_2| <= 1 - |b_1|^2."""
    _require_schwarz_series(w, min_order=2)
    return make_report("b2_bound", abs(w[2]), 1.0 - abs(w[1]) ** 2)


def third_coefficient_bound(w: TruncatedSeries) -> BoundReport:
    """|b_3| <= 1 - |b_1|^3."""
    _require_schwarz_series(w, min_order=3)
    return make_report("b3_bound", abs(w[3]), 1.0 - abs(w[1]) ** 3)


def pointwise_contraction(
    g: SchwarzGenerator,
    radii,
    angles_per_radius: int,
) -> list[BoundReport]:
    """|w(z)| <= |z| on a polar grid, via closed-form evaluation.

    Truncated series never enter, so the tolerance is the bare roundoff
    envelope 1e-12 rather than the corpus inequality tolerance.
    """
    radii = [float(r) for r in radii]
    if any(not (0.0 < r < 1.0) for r in radii):
        raise ValueError("radii must lie in (0, 1)")
    if angles_per_radius < 1:
        raise ValueError("need at least one angle per radius")
    phases = np.exp(2j * math.pi * np.arange(angles_per_radius) / angles_per_radius)
    out = []
    for r in radii:
        z = r * phases
        vals = np.abs(evaluate_schwarz(g, z))
        for j in range(angles_per_radius):
            out.append(
                make_report(
                    f"pointwise(r={r:.6g},j={j})",
                    vals[j],
                    r,
                    tol=POINTWISE_TOL,
                )
            )
    return out


def harmonic_propagation(
    p: TruncatedSeries, k: int, tol: float = INEQUALITY_TOL
) -> list[BoundReport]:
    """If c_k sits on the boundary (c_k = 2 e^{i theta}) then c_{nk} = 2 e^{i n theta}.

    The hypothesis is gated at |c_k| >= 2 - tol; below the gate a single
    not-applicable report is returned, since an exact boundary hit is
    unreachable in floating point except by construction.
    """
    _require_caratheodory_series(p)
    if k < 1:
        raise IndexError("k must be >= 1")
    if k > p.order:
        raise IndexError(f"k={k} exceeds series order {p.order}")
    ck = p[k]
    if abs(ck) < 2.0 - tol:
        return [
            make_report(
                f"harmonic_propagation(k={k},not_applicable)", abs(ck), 2.0
            )
        ]
    theta = np.angle(ck / 2.0)
    out = []
    n = 1
    while n * k <= p.order:
        lhs = abs(p[n * k] - 2.0 * np.exp(1j * n * theta))
        out.append(
            make_report(
                f"harmonic_propagation(k={k},n={n})", lhs, 0.0, tol=tol
            )
        )
        n += 1
    return out


def fourth_coefficient_constraints(
    w: TruncatedSeries, theta: float
) -> tuple[BoundReport, BoundReport]:
    """The two unit-disk constraints on b_4 produced by the Livingston gaps.

    Pushing |c_4 - c_1 c_3| <= 2 and |c_4 - c_2^2| <= 2 through the Cayley
    expansion gives, for every theta,

        |b_4 + e^{i theta} b_2^2 - e^{i 2 theta} b_1^2 b_2 - e^{i 3 theta} b_1^4| <= 1
        |b_4 + 2 e^{i theta} b_1 b_3 - e^{i theta} b_2^2
             - e^{i 2 theta} b_1^2 b_2 - e^{i 3 theta} b_1^4| <= 1

    reported here as ``b4_eq1`` and ``b4_eq2`` (the CLI's --mode tokens).
    """
    _require_schwarz_series(w, min_order=4)
    b1, b2, b3, b4 = w[1], w[2], w[3], w[4]
    e1 = np.exp(1j * theta)
    e2 = np.exp(2j * theta)
    e3 = np.exp(3j * theta)
    lhs1 = abs(b4 + e1 * b2**2 - e2 * b1**2 * b2 - e3 * b1**4)
    lhs2 = abs(b4 + 2 * e1 * b1 * b3 - e1 * b2**2 - e2 * b1**2 * b2 - e3 * b1**4)
    return (
        make_report("b4_eq1", lhs1, 1.0),
        make_report("b4_eq2", lhs2, 1.0),
    )

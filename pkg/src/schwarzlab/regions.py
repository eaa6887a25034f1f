"""Disk-intersection feasibility regions for the third and fourth coefficients.

A theta-parameterized family of unit disks |x - gamma(theta)| <= 1 pins a
coefficient to the intersection of the family.  For the third coefficient
the centers are gamma(theta) = e^{i 2 theta} b1^3 and the intersection
collapses to the disk |b3| <= 1 - |b1|^3.  For the fourth coefficient two
families arise (from the gaps c4 - c1 c3 and c4 - c2^2); the exact shape
of their joint intersection over all admissible (b1, b2, b3) is unknown,
so this module reports the rasterized constraint region and, separately,
empirically attained coefficients, without claiming the two sets agree.

Rasterization marks a cell feasible iff its center satisfies every disk
constraint.  Because an intersection of disks is convex, each grid row
meets it in one interval; the row intervals are computed directly from
the per-disk chord bounds, which is exactly equivalent to testing every
cell center against every disk but costs O(rows * M) instead of
O(rows^2 * M).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from schwarzlab.families import sample_schwarz, expand_schwarz

#: Angle-sample and grid defaults: discretization error ~ 2/resolution + 10/M
#: sits below the 5e-3 scale of the region checks.
DEFAULT_ANGLES = 4096
DEFAULT_RESOLUTION = 1024

#: Scan membership tolerance: genuine class members may undershoot the
#: analytic boundary by roundoff only, so violations beyond this flag bugs.
MEMBERSHIP_TOL = 1e-6

MIN_RESOLUTION = 16
MIN_FAMILY_SIZE = 3


@dataclass(frozen=True)
class BoundingBox:
    center: complex
    half_width: float


@dataclass(frozen=True, eq=False)
class DiskConstraintFamily:
    """Closed disks {x : |x - center_j| <= radius}, all of one radius."""

    centers: np.ndarray
    radius: float

    def __post_init__(self):
        arr = np.array(self.centers, dtype=np.complex128)
        if arr.ndim != 1 or len(arr) < MIN_FAMILY_SIZE:
            raise ValueError(f"need at least {MIN_FAMILY_SIZE} disk centers")
        if not np.all(np.isfinite(arr)):
            raise ValueError("disk centers must be finite")
        if not (self.radius > 0):
            raise ValueError("radius must be positive")
        arr.setflags(write=False)
        object.__setattr__(self, "centers", arr)


@dataclass(frozen=True, eq=False)
class RegionEstimate:
    """Occupancy-grid estimate of a feasible set.

    ``grid[iy, ix]`` covers the cell centered at
    box.center + (-hw + (ix + 1/2) step) + i(-hw + (iy + 1/2) step),
    step = 2 hw / resolution.  ``max_modulus`` is the largest |cell
    center| over feasible cells (0 when the grid is empty) and carries a
    quantization uncertainty of about half_width * sqrt(2) / resolution.
    """

    grid: np.ndarray
    box: BoundingBox
    resolution: int
    max_modulus: float
    feasible_area_cells: int
    samples_used: int
    quantization: float

    def cell_step(self) -> float:
        return 2.0 * self.box.half_width / self.resolution

    def cell_index(self, point: complex) -> tuple[int, int] | None:
        """(iy, ix) of the cell containing the point, or None if outside."""
        step = self.cell_step()
        x0 = self.box.center.real - self.box.half_width
        y0 = self.box.center.imag - self.box.half_width
        ix = int(math.floor((point.real - x0) / step))
        iy = int(math.floor((point.imag - y0) / step))
        if 0 <= ix < self.resolution and 0 <= iy < self.resolution:
            return iy, ix
        return None

    def contains(self, point: complex, neighborhood: int = 0) -> bool:
        """Whether the point's cell (or a Chebyshev-neighborhood of it) is feasible.

        neighborhood=1 admits boundary points, whose own cell may fall just
        outside the rasterized set by quantization.
        """
        idx = self.cell_index(point)
        if idx is None:
            return False
        iy, ix = idx
        lo_y = max(iy - neighborhood, 0)
        hi_y = min(iy + neighborhood, self.resolution - 1)
        lo_x = max(ix - neighborhood, 0)
        hi_x = min(ix + neighborhood, self.resolution - 1)
        return bool(self.grid[lo_y : hi_y + 1, lo_x : hi_x + 1].any())


def _row_chunk_size(m: int, resolution: int) -> int:
    # keep per-chunk temporaries around ~4e6 doubles (~32 MB)
    return max(1, min(resolution, int(4_000_000 // max(m, 1)) or 1))


def intersect_disk_family(
    family: DiskConstraintFamily, box: BoundingBox, resolution: int
) -> RegionEstimate:
    """Rasterize the common intersection of the family over the box.

    A cell is feasible iff its center x satisfies |x - center_j| <= radius
    for every j; adding centers can only shrink the feasible set.
    """
    if resolution < MIN_RESOLUTION:
        raise ValueError(f"resolution must be >= {MIN_RESOLUTION}")
    centers = family.centers
    radius = family.radius
    m = len(centers)
    hw = box.half_width
    cx = box.center.real
    cy = box.center.imag
    step = 2.0 * hw / resolution
    xs = cx - hw + (np.arange(resolution) + 0.5) * step
    ys = cy - hw + (np.arange(resolution) + 0.5) * step
    gx = centers.real
    gy = centers.imag

    grid = np.zeros((resolution, resolution), dtype=bool)
    max_mod = 0.0
    cells = 0
    chunk = _row_chunk_size(m, resolution)
    x_origin = cx - hw
    for j0 in range(0, resolution, chunk):
        yy = ys[j0 : j0 + chunk]
        dy = yy[:, None] - gy[None, :]
        s2 = radius * radius - dy * dy
        row_ok = (s2 >= 0.0).all(axis=1)
        s = np.sqrt(np.maximum(s2, 0.0))
        lo = (gx[None, :] - s).max(axis=1)
        hi = (gx[None, :] + s).min(axis=1)
        for r in range(len(yy)):
            if not row_ok[r] or lo[r] > hi[r]:
                continue
            i0 = int(math.ceil((lo[r] - x_origin) / step - 0.5))
            i1 = int(math.floor((hi[r] - x_origin) / step - 0.5))
            i0 = max(i0, 0)
            i1 = min(i1, resolution - 1)
            if i0 > i1:
                continue
            grid[j0 + r, i0 : i1 + 1] = True
            cells += i1 - i0 + 1
            y = yy[r]
            max_mod = max(max_mod, math.hypot(xs[i0], y), math.hypot(xs[i1], y))
    grid.setflags(write=False)
    return RegionEstimate(
        grid=grid,
        box=box,
        resolution=resolution,
        max_modulus=max_mod,
        feasible_area_cells=cells,
        samples_used=m,
        quantization=hw * math.sqrt(2.0) / resolution,
    )


def _uniform_thetas(m: int) -> np.ndarray:
    if m < MIN_FAMILY_SIZE:
        raise ValueError(f"need at least {MIN_FAMILY_SIZE} angle samples")
    return 2.0 * math.pi * np.arange(m) / m


def b3_centers(b1: complex, thetas: np.ndarray) -> np.ndarray:
    """Centers e^{i 2 theta} b1^3 of the third-coefficient constraint family."""
    return (complex(b1) ** 3) * np.exp(2j * thetas)


def b3_region(
    b1: complex,
    angle_samples: int = DEFAULT_ANGLES,
    resolution: int = DEFAULT_RESOLUTION,
) -> RegionEstimate:
    """Rasterized intersection of |x - e^{i 2 theta} b1^3| <= 1 over theta.

    Converges to the disk |x| <= 1 - |b1|^3 as angle_samples and
    resolution grow.
    """
    if abs(b1) > 1.0 + 1e-12:
        raise ValueError("|b1| must be <= 1")
    centers = b3_centers(b1, _uniform_thetas(angle_samples))
    family = DiskConstraintFamily(centers=centers, radius=1.0)
    hw = 1.0 + float(np.max(np.abs(centers)))
    return intersect_disk_family(family, BoundingBox(0j, hw), resolution)


def b4_centers(
    b1: complex, b2: complex, b3: complex, thetas: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Center curves of the two fourth-coefficient constraint families.

    gamma1(theta) = -e^{i theta} b2^2 + e^{i 2 theta} b1^2 b2 + e^{i 3 theta} b1^4
    gamma2(theta) = -2 e^{i theta} b1 b3 + e^{i theta} b2^2
                    + e^{i 2 theta} b1^2 b2 + e^{i 3 theta} b1^4
    """
    e1 = np.exp(1j * thetas)
    e2 = np.exp(2j * thetas)
    e3 = np.exp(3j * thetas)
    g1 = -e1 * b2**2 + e2 * b1**2 * b2 + e3 * b1**4
    g2 = -2 * e1 * b1 * b3 + e1 * b2**2 + e2 * b1**2 * b2 + e3 * b1**4
    return g1, g2


def _b4_center_list(
    b1: complex, b2: complex, b3: complex, angle_samples: int, mode: str
) -> np.ndarray:
    g1, g2 = b4_centers(complex(b1), complex(b2), complex(b3), _uniform_thetas(angle_samples))
    if mode == "eq1":
        return g1
    if mode == "eq2":
        return g2
    if mode == "both":
        return np.concatenate([g1, g2])
    raise ValueError(f"mode must be eq1, eq2 or both, got {mode!r}")


def b4_feasible_region(
    b1: complex,
    b2: complex,
    b3: complex,
    angle_samples: int = DEFAULT_ANGLES,
    resolution: int = DEFAULT_RESOLUTION,
    mode: str = "both",
) -> RegionEstimate:
    """Rasterized constraint region for the fourth coefficient.

    ``mode`` picks the gamma1 family ("eq1"), the gamma2 family ("eq2"),
    or their joint intersection ("both").  The bounding box is centered
    at 0 with half-width 1 + max_j |gamma(theta_j)|.
    """
    centers = _b4_center_list(b1, b2, b3, angle_samples, mode)
    family = DiskConstraintFamily(centers=centers, radius=1.0)
    hw = 1.0 + float(np.max(np.abs(centers)))
    return intersect_disk_family(family, BoundingBox(0j, hw), resolution)


def b4_margin(
    b1: complex,
    b2: complex,
    b3: complex,
    b4: complex,
    angle_samples: int = DEFAULT_ANGLES,
    mode: str = "both",
) -> float:
    """Signed distance of b4 to the sampled constraint set: min_j (1 - |b4 - gamma_j|).

    Non-negative inside the region; this is the un-rasterized membership
    test behind the grid estimate.
    """
    centers = _b4_center_list(b1, b2, b3, angle_samples, mode)
    return float(1.0 - np.max(np.abs(complex(b4) - centers)))


@dataclass(frozen=True)
class ScanRecord:
    """One sampled Schwarz function: leading coefficients, membership, margin."""

    coeffs: tuple[complex, complex, complex, complex]
    member: bool
    margin: float


def attainability_scan(
    seed: int,
    count: int,
    angle_samples: int = DEFAULT_ANGLES,
    tol: float = MEMBERSHIP_TOL,
    max_degree: int = 4,
) -> list[ScanRecord]:
    """Sample Schwarz functions and test b4 against the joint constraint set.

    Class members satisfy both constraint families for every theta, so all
    margins must be >= -tol; a violation indicates a bug in the expansion
    or the region code, not new mathematics.
    """
    records = []
    for g in sample_schwarz(seed, count, max_degree):
        w = expand_schwarz(g, 4)
        b1, b2, b3, b4 = w[1], w[2], w[3], w[4]
        margin = b4_margin(b1, b2, b3, b4, angle_samples=angle_samples)
        records.append(
            ScanRecord(coeffs=(b1, b2, b3, b4), member=margin >= -tol, margin=margin)
        )
    return records


@dataclass(frozen=True)
class FrontierBin:
    """Empirical max |b4| among samples with |b1| in [lo, hi)."""

    lo: float
    hi: float
    count: int
    max_abs_b4: float
    reference: float  # 1 - c^4 at the bin center; descriptive only


def attainability_frontier(records: list[ScanRecord], bins: int = 10) -> list[FrontierBin]:
    """Bin the scan by |b1| and report the attained max |b4| per bin.

    The reference column tabulates 1 - |b1|^4 at bin centers purely for
    side-by-side comparison; no claim is made that it bounds or equals
    the attainable frontier.
    """
    if bins < 1:
        raise ValueError("bins must be >= 1")
    edges = np.linspace(0.0, 1.0, bins + 1)
    out = []
    for i in range(bins):
        lo, hi = float(edges[i]), float(edges[i + 1])
        sel = [
            abs(r.coeffs[3])
            for r in records
            if lo <= abs(r.coeffs[0]) < hi or (i == bins - 1 and abs(r.coeffs[0]) == hi)
        ]
        center = 0.5 * (lo + hi)
        out.append(
            FrontierBin(
                lo=lo,
                hi=hi,
                count=len(sel),
                max_abs_b4=max(sel) if sel else 0.0,
                reference=1.0 - center**4,
            )
        )
    return out

"""Complex polynomials, critical points, and certified root finding.

This module carries the empirical side of the package: build P(z) =
(z - a) * prod(z - z_j) from its zeros, differentiate it, locate the roots
of P' with an Aberth-Ehrlich simultaneous iteration, and report the Sendov
distance min |w - a| over critical points w together with per-root residual
certificates.  Everything is plain binary64 (with a clongdouble Newton
polish at the very end); accuracy claims ride on the residuals, never on
trusting the iteration.

All public values are immutable and safe to share across threads.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

__all__ = [
    "InvalidInputError",
    "Polynomial",
    "SendovInstance",
    "RootResult",
    "CriticalPointReport",
    "from_roots",
    "evaluate",
    "derivative",
    "find_roots",
    "match_roots",
    "critical_report",
    "hull_distance",
]

# Residual threshold certifying a reported root: |P(r)| <= tol * scale with
# scale = max |coeff| * (1 + |r|)^degree.
RESIDUAL_TOL = 1e-10
# Looser self-check threshold for roots stored inside a Polynomial value.
_STORED_ROOT_TOL = 1e-9
# Two reported roots closer than this are flagged as one cluster.
CLUSTER_TOL = 1e-7

_MAX_ITER = 200
_RESTARTS = 3
# Irrational angular offset keeps the initial circle off axes and off any
# symmetric root configuration.
_ANGULAR_OFFSET = 1.0 / math.sqrt(2.0)


class InvalidInputError(ValueError):
    """An argument violates a documented precondition."""


def _require_finite_complex(values: Sequence[complex], what: str) -> np.ndarray:
    try:
        arr = np.asarray([complex(v) for v in values], dtype=np.complex128)
    except (TypeError, ValueError) as exc:
        raise InvalidInputError(f"{what} must be complex numbers: {exc}") from None
    if arr.size and not np.isfinite(arr).all():
        raise InvalidInputError(f"{what} must all be finite")
    return arr


@dataclass(frozen=True)
class Polynomial:
    """Coefficient-form polynomial, ascending degree, nonzero leading term.

    ``roots`` is populated when the value was constructed from its roots; a
    stored root must satisfy |P(root)| <= 1e-9 * max|coeff| * (1+|root|)^deg
    (checked at construction).  Degree 0 values are permitted so that
    ``derivative`` of a linear polynomial has somewhere to land; operations
    that need roots demand degree >= 1 themselves.
    """

    coefficients: tuple[complex, ...]
    roots: tuple[complex, ...] | None = None

    def __post_init__(self) -> None:
        coeffs = _require_finite_complex(self.coefficients, "coefficients")
        if coeffs.size == 0:
            raise InvalidInputError("a polynomial needs at least one coefficient")
        if coeffs[-1] == 0:
            raise InvalidInputError("leading coefficient must be nonzero")
        object.__setattr__(self, "coefficients", tuple(complex(c) for c in coeffs))
        if self.roots is not None:
            rts = _require_finite_complex(self.roots, "roots")
            if rts.size != self.degree:
                raise InvalidInputError(
                    f"{rts.size} roots stored on a degree-{self.degree} polynomial"
                )
            scale = max(abs(c) for c in self.coefficients)
            for r in rts:
                bound = _STORED_ROOT_TOL * scale * (1.0 + abs(r)) ** self.degree
                if abs(evaluate(self, complex(r))) > bound:
                    raise InvalidInputError(
                        f"stored root {r} does not satisfy the coefficient form"
                    )
            object.__setattr__(self, "roots", tuple(complex(r) for r in rts))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def to_dict(self) -> dict:
        return {"coeffs": [[c.real, c.imag] for c in self.coefficients]}

    @classmethod
    def from_dict(cls, data: dict) -> "Polynomial":
        try:
            coeffs = [complex(re, im) for re, im in data["coeffs"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInputError(f"bad polynomial payload: {exc}") from None
        return cls(tuple(coeffs))


@dataclass(frozen=True)
class SendovInstance:
    """A zero a in (0,1) plus the remaining zeros of a unit-disk polynomial.

    Represents P(z) = (z - a) * prod(z - z_j) with every |z_j| <= 1 (a hair
    of slack, 1e-12, absorbs JSON round-trip noise).  Degree n = 1 + the
    number of other zeros, and n >= 2.
    """

    a: float
    other_zeros: tuple[complex, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.a, (int, float)) or isinstance(self.a, bool) \
                or not math.isfinite(self.a) or not 0.0 < self.a < 1.0:
            raise InvalidInputError(f"a must be a real in (0, 1), got {self.a!r}")
        zeros = _require_finite_complex(self.other_zeros, "other_zeros")
        if zeros.size == 0:
            raise InvalidInputError("need at least one other zero (degree >= 2)")
        worst = float(np.abs(zeros).max())
        if worst > 1.0 + 1e-12:
            raise InvalidInputError(
                f"every other zero must have modulus <= 1, worst is {worst!r}"
            )
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "other_zeros", tuple(complex(z) for z in zeros))

    @property
    def degree(self) -> int:
        return 1 + len(self.other_zeros)

    def all_zeros(self) -> tuple[complex, ...]:
        return (complex(self.a),) + self.other_zeros

    def to_dict(self) -> dict:
        return {"a": self.a, "zeros": [[z.real, z.imag] for z in self.other_zeros]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "SendovInstance":
        try:
            a = float(data["a"])
            zeros = tuple(complex(re, im) for re, im in data["zeros"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInputError(f"bad instance payload: {exc}") from None
        return cls(a=a, other_zeros=zeros)

    @classmethod
    def from_json(cls, text: str) -> "SendovInstance":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidInputError(f"instance is not valid JSON: {exc}") from None
        if not isinstance(data, dict):
            raise InvalidInputError("instance JSON must be an object")
        return cls.from_dict(data)


@dataclass(frozen=True)
class RootResult:
    """Roots reported by find_roots plus their certificates.

    residuals[i] = |P(roots[i])| / (max|coeff| * (1+|roots[i]|)^degree);
    converged means every residual is at or below RESIDUAL_TOL.  clusters
    lists index groups whose pairwise distance is below CLUSTER_TOL (likely
    multiple roots); iterations counts Aberth sweeps across all restarts.
    """

    roots: tuple[complex, ...]
    residuals: tuple[float, ...]
    converged: bool
    iterations: int
    clusters: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CriticalPointReport:
    """Critical points of one SendovInstance and the derived measurements."""

    critical_points: tuple[complex, ...]
    sendov_distance: float
    mean_real_part: float
    residuals: tuple[float, ...]
    converged: bool


def from_roots(roots: Sequence[complex]) -> Polynomial:
    """Monic polynomial with the given roots (incremental (z - r) products).

    The expansion runs in extended precision and rounds once at the end:
    for ill-conditioned root sets (sensitivity ~1e12 is reachable at degree
    ~50 in the unit disk) accumulating the products directly in binary64
    would move the polynomial's true roots thousands of times farther from
    the requested ones than the final rounding does.
    """
    arr = _require_finite_complex(roots, "roots")
    if arr.size == 0:
        raise InvalidInputError("from_roots needs at least one root")
    coeffs = np.ones(1, dtype=np.clongdouble)
    for r in arr.astype(np.clongdouble):
        coeffs = np.convolve(coeffs, np.array([-r, 1.0], dtype=np.clongdouble))
    return Polynomial(tuple(coeffs.astype(np.complex128)), tuple(arr))


def evaluate(p: Polynomial, z: complex) -> complex:
    """Horner evaluation of p at z."""
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise InvalidInputError(f"evaluation point must be finite, got {z!r}")
    acc = 0j
    for c in reversed(p.coefficients):
        acc = acc * z + c
    return acc


def derivative(p: Polynomial) -> Polynomial:
    """Coefficient-form derivative; degree drops by exactly one."""
    if p.degree < 1:
        raise InvalidInputError("cannot differentiate a degree-0 polynomial")
    coeffs = tuple(
        k * c for k, c in enumerate(p.coefficients) if k >= 1
    )
    return Polynomial(coeffs)


def _values_at(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
    """p(z) for every z at once via a Vandermonde product."""
    v = np.vander(z, len(coeffs), increasing=True)
    return v @ coeffs


def _certified_residuals(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
    """|p(z)| / (max|c| (1+|z|)^deg), with the scale kept in log space so a
    far-out root cannot overflow the denominator into a vacuous certificate."""
    deg = len(coeffs) - 1
    pz = np.abs(_values_at(coeffs, z))
    log_scale = math.log(np.abs(coeffs).max()) + deg * np.log1p(np.abs(z))
    out = np.full(z.shape, np.inf)
    finite = np.isfinite(pz)
    tiny = finite & (pz == 0.0)
    ok = finite & (pz > 0.0)
    out[tiny] = 0.0
    out[ok] = np.exp(np.log(pz[ok]) - log_scale[ok])
    return out


def _aberth(coeffs: np.ndarray, initial_radius: float | None) -> tuple[np.ndarray, int, bool]:
    """Simultaneous iteration on monic-normalized coeffs; returns (roots, iters, converged)."""
    n = len(coeffs) - 1
    monic = coeffs / coeffs[-1]
    dmonic = monic[1:] * np.arange(1, n + 1)

    if initial_radius is None:
        radius = 1.0 + float(np.abs(monic[:-1]).max())
    else:
        radius = float(initial_radius)
    angles = 2.0 * np.pi * np.arange(n) / n + _ANGULAR_OFFSET
    z = radius * np.exp(1j * angles)

    # Restart jitter is deterministic: same polynomial, same answer, always.
    rng = np.random.default_rng(0x53454E44)
    iterations = 0
    for attempt in range(_RESTARTS + 1):
        if attempt:
            jig = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            # continue from the current cloud, nudged; do not reset to the
            # initial circle or the far-field progress is thrown away
            z = z * (1.0 + 1e-3 * jig) + 1e-6 * jig
        quiet = 0
        stall = 0
        best_step = np.inf
        arrived = False
        for _ in range(_MAX_ITER):
            iterations += 1
            pz = _values_at(monic, z)
            dpz = _values_at(dmonic, z)
            with np.errstate(all="ignore"):
                w = pz / dpz
            bad = ~np.isfinite(w)
            if bad.any():
                # overflow far from the root cloud: pull the offenders in
                z = np.where(bad, 0.5 * z, z)
                continue
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, np.inf)
            with np.errstate(all="ignore"):
                s = (1.0 / diff).sum(axis=1)
                corr = w / (1.0 - w * s)
            corr = np.where(np.isfinite(corr), corr, w)
            z = z - corr
            step_max = float((np.abs(corr) / (1.0 + np.abs(z))).max())
            if step_max <= 1e-13:
                quiet += 1
                if quiet >= 2:
                    arrived = True
                    break
            else:
                quiet = 0
            # Ill-conditioned roots rattle at a noise floor of roughly
            # eps * sum|c_k| / |p'(root)|, which can sit many decades above
            # 1e-13; once steps are small and stop improving, more sweeps
            # only re-sample that noise.
            if step_max < 0.7 * best_step:
                best_step = step_max
                stall = 0
            else:
                stall += 1
                if stall >= 10 and step_max <= 1e-5:
                    arrived = True
                    break
        # The residual scale (1+|r|)^degree is exponentially forgiving at
        # high degree, so certification alone must never cut an attempt
        # short: a mid-flight cloud can pass it while still far from the
        # roots.  Only a settled (or noise-floored) iteration counts.
        if arrived and bool((_certified_residuals(coeffs, z) <= RESIDUAL_TOL).all()):
            return z, iterations, True
    return z, iterations, bool((_certified_residuals(coeffs, z) <= RESIDUAL_TOL).all())


def _roots_quadratic(coeffs: np.ndarray) -> np.ndarray:
    """Stable closed form: the larger root via the sign choice that avoids
    cancellation, the other via the product c0/c2."""
    c0, c1, c2 = coeffs
    disc = np.sqrt(c1 * c1 - 4.0 * c2 * c0)
    u = -c1 + disc
    v = -c1 - disc
    big = u if abs(u) >= abs(v) else v
    if big == 0:  # double root at the origin of the shifted variable
        r = -c1 / (2.0 * c2)
        return np.array([r, r])
    r1 = big / (2.0 * c2)
    r2 = (2.0 * c0) / big
    return np.array([r1, r2])


def _polish(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Refine roots past binary64: extended-precision Aberth sweeps, then an
    arbitrary-precision Newton rescue for any root still adrift.

    A random degree-50 unit-disk polynomial can have |p'(root)| ~ 1e-9 with
    coefficient mass ~ 1e4, putting even the 80-bit evaluation noise floor
    above 1e-8 of root error; those few roots get a 50-digit Newton finish.
    """
    n = len(coeffs) - 1
    cl = coeffs.astype(np.clongdouble)
    dcl = cl[1:] * np.arange(1, n + 1)
    zl = z.astype(np.clongdouble)
    best = np.inf
    stall = 0
    for _ in range(10):
        v = np.vander(zl, n + 1, increasing=True)
        with np.errstate(all="ignore"):
            w = (v @ cl) / (v[:, :n] @ dcl)
        w = np.where(np.isfinite(w), w, 0.0)
        if n > 1:
            diff = zl[:, None] - zl[None, :]
            np.fill_diagonal(diff, np.inf)
            with np.errstate(all="ignore"):
                s = (1.0 / diff).sum(axis=1)
                corr = w / (1.0 - w * s)
            corr = np.where(np.isfinite(corr), corr, w)
        else:
            corr = w
        zl = zl - corr
        step_rel = float((np.abs(corr) / (1.0 + np.abs(zl))).max())
        if step_rel <= 1e-14:
            break
        if step_rel < 0.7 * best:
            best = step_rel
            stall = 0
        else:
            stall += 1
            if stall >= 3:
                break

    # Fresh Newton step as a first-order error estimate per root.
    v = np.vander(zl, n + 1, increasing=True)
    with np.errstate(all="ignore"):
        w = (v @ cl) / (v[:, :n] @ dcl)
    w = np.where(np.isfinite(w), w, 0.0)
    stubborn = np.nonzero(np.abs(w) > 1e-10 * (1.0 + np.abs(zl)))[0]
    if stubborn.size:
        import mpmath as mp

        with mp.workdps(50):
            cs = [mp.mpc(complex(c)) for c in coeffs]
            dcs = [k * c for k, c in enumerate(cs)][1:]
            for i in stubborn:
                x = mp.mpc(complex(zl[i]))
                for _ in range(8):
                    pv = _mp_horner(cs, x)
                    dv = _mp_horner(dcs, x)
                    if dv == 0:
                        break
                    delta = pv / dv
                    x -= delta
                    if abs(delta) <= 1e-16 * (1 + abs(x)):
                        break
                zl[i] = complex(x)
    return zl.astype(np.complex128)


def _mp_horner(coeffs_ascending, x):
    acc = 0
    for c in reversed(coeffs_ascending):
        acc = acc * x + c
    return acc


def _clusters(z: np.ndarray) -> tuple[tuple[int, ...], ...]:
    """Connected components of the 'closer than CLUSTER_TOL' graph, size >= 2."""
    n = len(z)
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    close = np.abs(z[:, None] - z[None, :]) < CLUSTER_TOL
    for i in range(n):
        for j in range(i + 1, n):
            if close[i, j]:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return tuple(tuple(g) for g in groups.values() if len(g) >= 2)


def find_roots(p: Polynomial, initial_radius: float | None = None) -> RootResult:
    """All roots of p with residual certificates.

    Initial guesses sit on a circle of radius 1 + max|c_k/c_n| (or the
    caller's ``initial_radius`` when a sharper enclosing radius is known,
    e.g. from Gauss-Lucas) at equal angles plus a fixed irrational offset.
    Up to 200 Aberth-Ehrlich sweeps per attempt and 3 deterministic
    perturb-and-continue restarts; afterwards an extended-precision Newton
    polish.  ``converged`` reflects the residual certificates of the final
    values — a non-converged report is returned rather than guessing.
    """
    if p.degree < 1:
        raise InvalidInputError("find_roots needs degree >= 1")
    coeffs = np.asarray(p.coefficients, dtype=np.complex128)
    iterations = 0
    if p.degree == 1:
        z = np.array([-coeffs[0] / coeffs[1]])
    elif p.degree == 2:
        z = _roots_quadratic(coeffs)
    else:
        z, iterations, _ = _aberth(coeffs, initial_radius)
    z = _polish(coeffs, z)
    order = np.lexsort((z.imag, z.real))
    z = z[order]
    residuals = _certified_residuals(coeffs, z)
    converged = bool((residuals <= RESIDUAL_TOL).all())
    return RootResult(
        roots=tuple(complex(v) for v in z),
        residuals=tuple(float(r) for r in residuals),
        converged=converged,
        iterations=iterations,
        clusters=_clusters(z),
    )


def match_roots(
    found: Sequence[complex], expected: Sequence[complex]
) -> tuple[tuple[int, ...], float]:
    """Pair each expected root with a distinct found root.

    Returns (assignment, worst_distance) where assignment[i] indexes the
    found root paired with expected[i].  Greedy globally-nearest pairing
    first; if its worst pair exceeds 1e-8 the exact Hungarian assignment is
    computed and the better of the two is returned.
    """
    f = _require_finite_complex(found, "found")
    e = _require_finite_complex(expected, "expected")
    if f.size != e.size or f.size == 0:
        raise InvalidInputError("matching needs two equal nonempty root lists")
    dist = np.abs(e[:, None] - f[None, :])

    work = dist.copy()
    n = f.size
    assign = np.full(n, -1)
    for _ in range(n):
        i, j = np.unravel_index(np.argmin(work), work.shape)
        assign[i] = j
        work[i, :] = np.inf
        work[:, j] = np.inf
    worst = float(dist[np.arange(n), assign].max())

    if worst > 1e-8:
        from scipy.optimize import linear_sum_assignment

        rows, cols = linear_sum_assignment(dist)
        hung = np.empty(n, dtype=int)
        hung[rows] = cols
        hung_worst = float(dist[np.arange(n), hung].max())
        if hung_worst < worst:
            assign, worst = hung, hung_worst
    return tuple(int(j) for j in assign), worst


def critical_report(inst: SendovInstance) -> CriticalPointReport:
    """Critical points, Sendov distance, and zero-mean for one instance.

    The root finder is seeded on a circle of radius 1 + max|zero|: by
    Gauss-Lucas every critical point lies in the convex hull of the zeros,
    so that circle certainly encloses them all.
    """
    zeros = inst.all_zeros()
    p = from_roots(zeros)
    dp = derivative(p)
    enclosing = 1.0 + max(abs(z) for z in zeros)
    rr = find_roots(dp, initial_radius=enclosing)
    sendov = min(abs(w - inst.a) for w in rr.roots)
    mean = sum(z.real for z in zeros) / len(zeros)
    return CriticalPointReport(
        critical_points=rr.roots,
        sendov_distance=float(sendov),
        mean_real_part=float(mean),
        residuals=rr.residuals,
        converged=rr.converged,
    )


def hull_distance(point: complex, vertices: Sequence[complex]) -> float:
    """Euclidean distance from point to the convex hull of vertices (0 inside).

    Monotone-chain hull; degenerate vertex sets (single point, collinear)
    fall back to point/segment distance.
    """
    w = complex(point)
    pts = _require_finite_complex(vertices, "vertices")
    if pts.size == 0:
        raise InvalidInputError("hull needs at least one vertex")
    uniq = np.unique(pts)
    xy = sorted((z.real, z.imag) for z in uniq)
    if len(xy) == 1:
        return abs(w - complex(*xy[0]))

    def cross(o, p, q):
        return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])

    lower: list[tuple[float, float]] = []
    for pt in xy:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], pt) <= 0:
            lower.pop()
        lower.append(pt)
    upper: list[tuple[float, float]] = []
    for pt in reversed(xy):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], pt) <= 0:
            upper.pop()
        upper.append(pt)
    hull = lower[:-1] + upper[:-1]

    if len(hull) == 2:
        return _segment_distance(w, hull[0], hull[1])

    inside = True
    for i in range(len(hull)):
        if cross(hull[i], hull[(i + 1) % len(hull)], (w.real, w.imag)) < 0:
            inside = False
            break
    if inside:
        return 0.0
    return min(
        _segment_distance(w, hull[i], hull[(i + 1) % len(hull)])
        for i in range(len(hull))
    )


def _segment_distance(w: complex, p: tuple[float, float], q: tuple[float, float]) -> float:
    px, py = p
    qx, qy = q
    dx, dy = qx - px, qy - py
    length_sq = dx * dx + dy * dy
    if length_sq == 0.0:
        return math.hypot(w.real - px, w.imag - py)
    t = ((w.real - px) * dx + (w.imag - py) * dy) / length_sq
    t = min(1.0, max(0.0, t))
    return math.hypot(w.real - (px + t * dx), w.imag - (py + t * dy))

"""Explicit degree thresholds for Sendov's conjecture at a real zero a in (0,1).

All functions here are elementary closed forms in the single parameter ``a``
(the modulus of the distinguished zero; every other zero of the polynomial
lives in the closed unit disk).  They combine into the explicit threshold

    final_bound(a) = 20800 / (a^7 (1-a)^4)

with the property that any polynomial of degree >= final_bound(a) vanishing
at a has a critical point within distance 1 of a.  The intermediate
quantities (n0..n3, the growth factors K1/K2/K', the quadratic-root
thresholds mu1/mu2, the radii r/r' and exponents alpha/alpha') are exposed
individually so each inequality in the derivation can be checked on its own.

Everything is evaluated in binary64.  Where a textbook expression loses
precision for small ``a`` (mu1, mu2, the log of a K-factor barely above 1),
an algebraically equivalent stable rewrite is used and documented inline.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "DomainError",
    "AuxParams",
    "BoundBreakdown",
    "MeanBound",
    "aux_params",
    "n0",
    "n1",
    "n2",
    "d_function",
    "k_factors",
    "log_k_factors",
    "k_prime",
    "log_k_prime",
    "mu1",
    "mu2",
    "r_param",
    "alpha_param",
    "n3",
    "final_bound",
    "mean_upper_bound",
    "small_circle_bound",
    "breakdown",
]


class DomainError(ValueError):
    """A parameter fell outside the open interval a formula is defined on."""


def _check_a(a: float, *, closed_right: bool = False) -> None:
    if not isinstance(a, (int, float)) or isinstance(a, bool) or not math.isfinite(a):
        raise DomainError(f"a must be a finite real, got {a!r}")
    upper_ok = a <= 1.0 if closed_right else a < 1.0
    if not (0.0 < a and upper_ok):
        interval = "(0, 1]" if closed_right else "(0, 1)"
        raise DomainError(f"a must lie in {interval}, got {a!r}")


def _check_c(a: float, c: float) -> None:
    if not isinstance(c, (int, float)) or isinstance(c, bool) or not math.isfinite(c):
        raise DomainError(f"c must be a finite real, got {c!r}")
    if not 0.0 < c < a:
        raise DomainError(f"c must lie in (0, a) = (0, {a!r}), got {c!r}")


@dataclass(frozen=True)
class AuxParams:
    """The derived parameters attached to a: exponents q', p', and c = a*gamma."""

    a: float
    q_prime: float  # (a/4) / (1 + a/2)
    p_prime: float  # (a/4) / (1 - a/2)
    gamma: float    # 0.1 a + 0.9
    c: float        # a * gamma


@dataclass(frozen=True)
class BoundBreakdown:
    """Every intermediate quantity behind final_bound(a), for one value of a."""

    aux: AuxParams
    n0: float
    n1: float
    n2: float
    mu1: float
    mu2: float
    k1: float
    k2: float
    k_prime: float
    r: float
    r_prime: float
    alpha: float
    alpha_prime: float
    n3_exact: float
    n3_estimate: float
    final_n: float
    small_bound: float

    def to_dict(self) -> dict:
        """Flat mapping (aux fields inlined) used for JSON output."""
        d = {
            "a": self.aux.a,
            "q_prime": self.aux.q_prime,
            "p_prime": self.aux.p_prime,
            "gamma": self.aux.gamma,
            "c": self.aux.c,
        }
        for name in (
            "n0", "n1", "n2", "mu1", "mu2", "k1", "k2", "k_prime",
            "r", "r_prime", "alpha", "alpha_prime",
            "n3_exact", "n3_estimate", "final_n", "small_bound",
        ):
            d[name] = getattr(self, name)
        return d


@dataclass(frozen=True)
class MeanBound:
    """Upper bound on the mean real part of the zeros of a degree-n counterexample."""

    a: float
    n: int
    bound_at_quarter: float  # objective evaluated at delta = a/4
    bound_inf: float         # numeric infimum of the objective over delta in (0, a)


def aux_params(a: float) -> AuxParams:
    """q' = (a/4)/(1+a/2), p' = (a/4)/(1-a/2), gamma = 0.1a+0.9, c = a*gamma."""
    _check_a(a)
    return AuxParams(
        a=a,
        q_prime=(a / 4.0) / (1.0 + a / 2.0),
        p_prime=(a / 4.0) / (1.0 - a / 2.0),
        gamma=0.1 * a + 0.9,
        c=a * (0.1 * a + 0.9),
    )


def n0(a: float) -> float:
    """Degree threshold 32*log(40/a^2)/a^2 forcing the zero-mean bound a/4."""
    _check_a(a)
    return 32.0 * math.log(40.0 / (a * a)) / (a * a)


def n1(a: float) -> float:
    """max{ 9*((4+2a)/a)^2, n0(a) }."""
    _check_a(a)
    return max(9.0 * ((4.0 + 2.0 * a) / a) ** 2, n0(a))


def n2(a: float, c: float) -> float:
    """max{ 9*(log(a/16)/log(c/(1+a)))^2, n0(a) }; both logs are negative."""
    _check_a(a)
    _check_c(a, c)
    ratio = math.log(a / 16.0) / math.log(c / (1.0 + a))
    return max(9.0 * ratio * ratio, n0(a))


def d_function(a: float, c: float, x: float) -> float:
    """Contraction factor max{ (1/(1+a))^x, ((1+c)/(1+a))^x * sqrt(1+c^2-ac)^(1-x) }.

    Strictly below 1 for x in (0, 1) and at least c/(1+a) everywhere.
    """
    _check_a(a)
    _check_c(a, c)
    if not (isinstance(x, (int, float)) and math.isfinite(x) and 0.0 < x < 1.0):
        raise DomainError(f"x must lie in (0, 1), got {x!r}")
    first = (1.0 / (1.0 + a)) ** x
    second = ((1.0 + c) / (1.0 + a)) ** x * math.sqrt(1.0 + c * c - a * c) ** (1.0 - x)
    return max(first, second)


def log_k_factors(a: float, c: float, p: float, q: float) -> tuple[float, float]:
    """(log K1, log K2) computed with log1p so values barely above 0 keep full precision.

    log K1 = p*log(1+c-ac) + (1-p)/2 * log(1+c^2-ac)
    log K2 = q*log(1+c)    + (1-q)/2 * log(1+c^2-ac)

    For small a both K-factors are 1 + O(a^2); going through exp/log of the
    factor itself would wipe out the margin of the K' > 1 inequality.
    """
    _check_a(a)
    _check_c(a, c)
    for name, e in (("p", p), ("q", q)):
        if not (isinstance(e, (int, float)) and math.isfinite(e) and 0.0 < e < 1.0):
            raise DomainError(f"{name} must lie in (0, 1), got {e!r}")
    log_disc = math.log1p(c * c - a * c)
    log_k1 = p * math.log1p(c - a * c) + 0.5 * (1.0 - p) * log_disc
    log_k2 = q * math.log1p(c) + 0.5 * (1.0 - q) * log_disc
    return log_k1, log_k2


def k_factors(a: float, c: float, p: float, q: float) -> tuple[float, float]:
    """(K1, K2) = ((1+c-ac)^p sqrt(1+c^2-ac)^(1-p), (1+c)^q sqrt(1+c^2-ac)^(1-q))."""
    log_k1, log_k2 = log_k_factors(a, c, p, q)
    return math.exp(log_k1), math.exp(log_k2)


def log_k_prime(a: float) -> float:
    """log of k_prime(a) = min{K1, K2} at c = a*gamma(a) with exponents p', q'."""
    aux = aux_params(a)
    log_k1, log_k2 = log_k_factors(a, aux.c, aux.p_prime, aux.q_prime)
    return min(log_k1, log_k2)


def k_prime(a: float) -> float:
    """min{ K1(a, a*gamma, p'), K2(a, a*gamma, q') }; exceeds 1 on all of (0,1)."""
    return math.exp(log_k_prime(a))


def mu2(a: float) -> float:
    """Threshold sqrt((a^4+4a^3+16a^2+32a+64)/(4a^4)) + (a^2-2a-8)/(2a^2).

    Any gamma with mu2(a) < gamma < 1 makes K2(a, a*gamma, q') > 1.  Computed
    via the rationalized form (14+4a)/(sqrt(t(a)) + 8 + 2a - a^2): the two
    textbook terms are each ~4/a^2 with opposite signs, so the direct sum
    loses ~a^2/4 of the precision.  Even the rationalized form is only good
    to ~2 ulp, which the quadratic's ~8/a^2 linear coefficient amplifies past
    1e-9 for the smallest grid points, so one Newton step of the (cleared)
    quadratic a^2 x^2 + (8+2a-a^2) x - (7+2a) is taken in exact rational
    arithmetic: the returned double is then the correctly rounded root.
    Defined on (0, 1]; mu2(1) = 3(sqrt(13)-3)/2.
    """
    _check_a(a, closed_right=True)
    t = (((a + 4.0) * a + 16.0) * a + 32.0) * a + 64.0
    x0 = (14.0 + 4.0 * a) / (math.sqrt(t) + 8.0 + 2.0 * a - a * a)
    af, x = Fraction(a), Fraction(x0)
    aa = af * af
    lin = 8 + 2 * af - aa
    f = aa * x * x + lin * x - (7 + 2 * af)
    df = 2 * aa * x + lin
    return float(x - f / df)


def mu1(a: float) -> float:
    """Threshold (-a^3+a^2+6a-8 + sqrt(g(a))) / (2a^2(1-a)), g as below.

    Any gamma with mu1(a) < gamma < 1 makes K1(a, a*gamma, p') > 1.  With
    g(a) = a^6-2a^5+9a^4-20a^3+48a^2-96a+64, the identity
    g - (8-6a-a^2+a^3)^2 = -4a^2(7-5a)(1-a) turns the formula into
    2(7-5a) / (sqrt(g) + 8-6a-a^2+a^3), which neither cancels for small a
    nor divides by zero as a -> 1.  The domain stays the open interval
    (the textbook form has a pole at a = 1).
    """
    _check_a(a)
    g = ((((((a - 2.0) * a + 9.0) * a - 20.0) * a + 48.0) * a - 96.0) * a) + 64.0
    return 2.0 * (7.0 - 5.0 * a) / (math.sqrt(g) + 8.0 - 6.0 * a - a * a + a ** 3)


def r_param(a: float, c: float) -> tuple[float, float]:
    """(r, r') = (c(a-c)/(2(1-c^2)), c(a-c)/2); 0 < r' < r < 1."""
    _check_a(a)
    _check_c(a, c)
    half_num = 0.5 * c * (a - c)
    return half_num / (1.0 - c * c), half_num


def alpha_param(a: float, c: float, r_val: float) -> float:
    """Exponent log(a/16) / log((c+r)/(1+cr)); positive since both logs are negative.

    Increasing in r_val: the Moebius ratio (c+r)/(1+cr) grows with r_val, so
    its log shrinks in magnitude and the quotient grows.  In particular
    alpha(r') < alpha(r) for r' < r, while the product alpha * log(1/r)
    moves the other way (see the chain checks in the verifier).
    """
    _check_a(a)
    _check_c(a, c)
    if not (isinstance(r_val, (int, float)) and math.isfinite(r_val) and 0.0 < r_val < 1.0):
        raise DomainError(f"r_val must lie in (0, 1), got {r_val!r}")
    # (c+r)/(1+cr) = 1 - (1-c)(1-r)/(1+cr), kept in log1p form for accuracy
    # when c -> a -> 1 drives the ratio toward 1.
    log_ratio = math.log1p(-(1.0 - c) * (1.0 - r_val) / (1.0 + c * r_val))
    return math.log(a / 16.0) / log_ratio


def _n3_exact(a: float) -> float:
    aux = aux_params(a)
    c = aux.c
    r, _ = r_param(a, c)
    numerator = (
        math.log((1.0 + a) / (a - c))
        + math.log1p(c * (1.0 - a) / (1.0 - c))  # log((1-ac)/(1-c))
        - alpha_param(a, c, r) * math.log(r)
    )
    log_kp = log_k_prime(a)
    if log_kp <= 0.0:
        raise DomainError(f"growth factor not above 1 at a={a!r}; no finite threshold")
    return numerator / log_kp + 1.0


def _n3_estimate(a: float) -> float:
    gamma = 0.1 * a + 0.9
    one_minus_gamma = 0.1 * (1.0 - a)
    log_inv_a = -math.log(a)
    bracket = 3.0 / (a * one_minus_gamma) + (2.0 / (a ** 3 * one_minus_gamma)) * (
        32.0 / (a * log_inv_a)
    )
    return bracket * 16.0 / (a ** 3 * (1.0 - a)) + 1.0


def n3(a: float) -> tuple[float, float]:
    """(n3_exact, n3_estimate) at c = a*gamma(a).

    n3_exact is (log((1+a)/(a-c)) + log((1-ac)/(1-c)) - alpha*log r)/log K' + 1.
    n3_estimate majorizes it step by step: r, alpha replaced by r', alpha',
    each log replaced by its argument (log x <= x - 1 <= x), alpha' by
    32/(a log(1/a)), and log K' by a^3(1-a)/16, giving

        (3/(a(1-gamma)) + 2/(a^3(1-gamma)) * 32/(a log(1/a))) * 16/(a^3(1-a)) + 1.
    """
    _check_a(a)
    return _n3_exact(a), _n3_estimate(a)


def final_bound(a: float) -> float:
    """The headline explicit threshold 20800 / (a^7 (1-a)^4)."""
    _check_a(a)
    return 20800.0 / (a ** 7 * (1.0 - a) ** 4)


def _mean_objective(a: float, n: int, delta: float) -> float:
    # delta/2 - log(1 - sqrt(1 + delta^2 - delta*a)) / (delta*n), with the
    # 1 - sqrt term rewritten as delta*(a-delta)/(1 + sqrt(...)) because the
    # direct subtraction cancels to nothing at both ends of (0, a).
    s = math.sqrt(1.0 + delta * (delta - a))
    return 0.5 * delta - math.log(delta * (a - delta) / (1.0 + s)) / (delta * n)


_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def mean_upper_bound(a: float, n: int) -> MeanBound:
    """Best upper bound for the mean real part of the zeros, degree-n case.

    The objective delta/2 - log(1 - sqrt(1+delta^2-delta*a))/(delta*n) is
    minimized over delta in (0, a) by a 1024-point scan followed by
    golden-section refinement of the best bracket down to a 1e-12 interval.
    bound_at_quarter is the plain evaluation at delta = a/4 (the choice that
    yields the closed-form threshold n0).
    """
    _check_a(a)
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise DomainError(f"n must be an integer >= 2, got {n!r}")

    eps = 1e-9
    lo_edge, hi_edge = eps, a - eps
    count = 1024
    step = (hi_edge - lo_edge) / (count - 1)
    best_i, best_v = 0, math.inf
    for i in range(count):
        v = _mean_objective(a, n, lo_edge + i * step)
        if v < best_v:
            best_i, best_v = i, v

    lo = lo_edge + max(best_i - 1, 0) * step
    hi = lo_edge + min(best_i + 1, count - 1) * step
    x1 = hi - _GOLDEN * (hi - lo)
    x2 = lo + _GOLDEN * (hi - lo)
    f1 = _mean_objective(a, n, x1)
    f2 = _mean_objective(a, n, x2)
    while hi - lo > 1e-12:
        if f1 < f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _GOLDEN * (hi - lo)
            f1 = _mean_objective(a, n, x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _GOLDEN * (hi - lo)
            f2 = _mean_objective(a, n, x2)

    return MeanBound(
        a=a,
        n=n,
        bound_at_quarter=_mean_objective(a, n, a / 4.0),
        bound_inf=min(best_v, f1, f2),
    )


def small_circle_bound(a: float) -> float:
    """Comparison threshold 2 + (60-a^2)/(a^2(1-a^2)) for zeros on the unit circle."""
    _check_a(a)
    value = 2.0 + (60.0 - a * a) / (a * a * (1.0 - a * a))
    # Diverges as a -> 1; binary64 a < 1 keeps it ~1e18 at most, but cap anyway.
    return value if math.isfinite(value) else sys.float_info.max


def breakdown(a: float) -> BoundBreakdown:
    """Evaluate every intermediate quantity at one a; see BoundBreakdown."""
    aux = aux_params(a)
    c = aux.c
    k1, k2 = k_factors(a, c, aux.p_prime, aux.q_prime)
    r, r_prime = r_param(a, c)
    n3_exact, n3_estimate = n3(a)
    return BoundBreakdown(
        aux=aux,
        n0=n0(a),
        n1=n1(a),
        n2=n2(a, c),
        mu1=mu1(a),
        mu2=mu2(a),
        k1=k1,
        k2=k2,
        k_prime=min(k1, k2),
        r=r,
        r_prime=r_prime,
        alpha=alpha_param(a, c, r),
        alpha_prime=alpha_param(a, c, r_prime),
        n3_exact=n3_exact,
        n3_estimate=n3_estimate,
        final_n=final_bound(a),
        small_bound=small_circle_bound(a),
    )

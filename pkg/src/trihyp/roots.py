"""Roots of the trinomial x^n - x + t = 0 (n = 2, 3, 4) by two
independent routes.

The series route sums t * nF_{n-1}(1/n..n/n; 2/(n-1)..n/(n-1); z) with
z = n (n t / (n-1))^(n-1), duplicate upper/lower parameters cancelled.
The closed-form route uses the quadratic formula, the trigonometric
solution of the depressed cubic, and Descartes's factorization of the
depressed quartic.  Both are exposed so they can be compared
differentially.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .errors import DomainError
from .specfun import HypergeometricSpec, SeriesControl, hyp_pfq

__all__ = [
    "TrinomialInstance",
    "RootSet",
    "CubicSpec",
    "QuarticSpec",
    "DescartesFactors",
    "root_hypergeometric",
    "root_lagrange_partial",
    "lagrange_coefficient",
    "quadratic_roots",
    "cubic_roots",
    "quartic_roots",
    "descartes_factorization",
    "g_function",
    "residual",
    "trinomial_closed_roots",
    "series_argument",
]

_SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class TrinomialInstance:
    """One instance of x^n - x + t = 0."""

    n: int
    t: complex

    def __post_init__(self):
        if self.n < 2:
            raise DomainError("trinomial degree must satisfy n >= 2")


@dataclass(frozen=True)
class RootSet:
    roots: tuple
    method: Literal["series", "closed_form"]
    residuals: tuple


@dataclass(frozen=True)
class CubicSpec:
    """Depressed cubic x^3 +- 3 m x + 2 nn = 0 with m > 0."""

    sign: Literal["plus", "minus"]
    m: float
    nn: complex

    def __post_init__(self):
        if self.sign not in ("plus", "minus"):
            raise DomainError("sign must be 'plus' or 'minus'")
        if not (isinstance(self.m, (int, float)) and self.m > 0):
            raise DomainError("cubic side condition m > 0 violated")


@dataclass(frozen=True)
class QuarticSpec:
    """Depressed quartic x^4 + p x^2 + q x + r = 0."""

    p: complex
    q: complex
    r: complex


@dataclass(frozen=True)
class DescartesFactors:
    """Internal values of the Descartes quartic factorization
    (x^2 + alpha x + beta)(x^2 - alpha x + gamma)."""

    alpha: complex
    beta: complex
    gamma: complex
    xi: complex  # the resolvent root alpha^2


def residual(inst: TrinomialInstance, x) -> float:
    """|x^n - x + t| for one candidate root."""
    x = complex(x)
    return abs(x**inst.n - x + inst.t)


def series_argument(n: int, t) -> complex:
    """Argument z = n (n t/(n-1))^(n-1) of the hypergeometric root series."""
    t = complex(t)
    return n * (n * t / (n - 1)) ** (n - 1)


def _series_parameters(n: int):
    upper = [Fraction(j, n) for j in range(1, n + 1)]
    lower = [Fraction(j, n - 1) for j in range(2, n + 1)]
    for v in list(lower):
        if v in upper:
            upper.remove(v)
            lower.remove(v)
    return [float(v) for v in upper], [float(v) for v in lower]


def root_hypergeometric(inst: TrinomialInstance, control: SeriesControl | None = None) -> complex:
    """The t -> 0 branch of x^n - x + t = 0 by the hypergeometric series.

    Only defined inside the convergence disc |z| <= 0.999 of the series
    argument; raises :class:`DomainError` outside.
    """
    z = series_argument(inst.n, inst.t)
    if abs(z) > 0.999:
        raise DomainError(
            f"series argument |z| = {abs(z):.4f} outside the convergence disc"
        )
    upper, lower = _series_parameters(inst.n)
    ctrl = control or SeriesControl(max_terms=40_000)
    res = hyp_pfq(HypergeometricSpec.of(upper, lower, z), ctrl)
    return inst.t * res.value


def lagrange_coefficient(n: int, k: int) -> int:
    """Exact integer coefficient (nk)! / (k! (nk-k+1)!) of the Lagrange
    root series (the Fuss-Catalan numbers; Catalan numbers for n = 2)."""
    if k == 0:
        return 1
    num = math.factorial(n * k)
    den = math.factorial(k) * math.factorial(n * k - k + 1)
    q, r = divmod(num, den)
    assert r == 0
    return q


def root_lagrange_partial(inst: TrinomialInstance, terms: int) -> complex:
    """Partial sum t [1 + sum_{k=1}^{terms} (nk)!/(k!(nk-k+1)!) t^((n-1)k)]."""
    if terms < 1:
        raise DomainError("need at least one correction term")
    t = complex(inst.t)
    if t == 0:
        return 0.0 + 0.0j
    n = inst.n
    acc = 1.0 + 0.0j
    tp = t ** (n - 1)
    power = 1.0 + 0.0j
    for k in range(1, terms + 1):
        power *= tp
        acc += lagrange_coefficient(n, k) * power
    return t * acc


def quadratic_roots(t) -> RootSet:
    """Both roots of x^2 - x + t = 0; the first entry is the t -> 0
    branch (1 - sqrt(1-4t))/2 matching the series root."""
    t = complex(t)
    s = cmath.sqrt(1.0 - 4.0 * t)
    roots = ((1.0 - s) / 2.0, (1.0 + s) / 2.0)
    inst = TrinomialInstance(2, t)
    return RootSet(roots, "closed_form", tuple(residual(inst, x) for x in roots))


def _depressed_cubic_roots(m, nn, sign: str):
    """All roots of x^3 +- 3 m x + 2 nn = 0 for complex m != 0, nn.

    Principal-branch trigonometric forms; exact for arbitrary complex
    coefficients (the case split of the real classification collapses
    to one formula in complex arithmetic).
    """
    m = complex(m)
    nn = complex(nn)
    sm = cmath.sqrt(m)
    w = nn * m ** (-1.5)
    if sign == "minus":
        theta = cmath.acos(w) / 3.0
        c, s = cmath.cos(theta), cmath.sin(theta)
        return (-2.0 * sm * c, sm * (c + _SQRT3 * s), sm * (c - _SQRT3 * s))
    u = cmath.asinh(w) / 3.0
    sh, ch = cmath.sinh(u), cmath.cosh(u)
    return (-2.0 * sm * sh, sm * (sh + 1j * _SQRT3 * ch), sm * (sh - 1j * _SQRT3 * ch))


def _sorted_roots(roots):
    return tuple(sorted(roots, key=lambda z: (z.real, z.imag)))


def cubic_roots(spec: CubicSpec) -> RootSet:
    """Roots of the depressed cubic x^3 +- 3 m x + 2 nn = 0, m > 0.

    For real nn this is the classical hyperbolic/trigonometric case
    split (sinh form for '+'; cosh form for '-' with nn^2 > m^3, cos
    form for nn^2 < m^3); complex acos/asinh merge the cases and keep
    the roots continuous across the nn^2 = m^3 boundary.
    """
    roots = _sorted_roots(_depressed_cubic_roots(spec.m, spec.nn, spec.sign))
    s = 3.0 * spec.m if spec.sign == "plus" else -3.0 * spec.m
    res = tuple(abs(x**3 + s * x + 2.0 * spec.nn) for x in roots)
    return RootSet(roots, "closed_form", res)


def descartes_factorization(spec: QuarticSpec) -> DescartesFactors:
    """Solve the resolvent bicubic and build the quadratic-factor
    coefficients alpha, beta, gamma of Descartes's method.

    The resolvent in xi = alpha^2 is
    xi^3 + 2 p xi^2 + (p^2 - 4 r) xi - q^2 = 0; the root of largest
    modulus is taken so that q/alpha stays well conditioned.
    """
    p, q, r = complex(spec.p), complex(spec.q), complex(spec.r)
    if q == 0:
        raise DomainError("degenerate quartic: q = 0 (biquadratic) is unsupported")
    b2, b1, b0 = 2.0 * p, p * p - 4.0 * r, -q * q
    # depress xi = y - b2/3, then y^3 - 3 m y + 2 nn = 0
    shift = b2 / 3.0
    m = (b2 * b2 / 3.0 - b1) / 3.0
    nn = (b0 + 2.0 * b2**3 / 27.0 - b2 * b1 / 3.0) / 2.0
    if abs(m) < 1e-40:
        cube = (-2.0 * nn) ** (1.0 / 3.0)
        rot = cmath.exp(2j * math.pi / 3.0)
        ys = (cube, cube * rot, cube * rot.conjugate())
    else:
        ys = _depressed_cubic_roots(m, nn, "minus")
    for xi in sorted((y - shift for y in ys), key=abs, reverse=True):
        if xi == 0:
            continue
        root = cmath.sqrt(xi)
        for alpha in (root, -root):
            gamma = (p + xi + q / alpha) / 2.0
            if gamma != 0:
                return DescartesFactors(alpha, r / gamma, gamma, xi)
    raise DomainError("degenerate quartic: gamma = 0 in every factorization")


def quartic_roots(spec: QuarticSpec) -> RootSet:
    """All four roots of x^4 + p x^2 + q x + r = 0 via Descartes's
    factorization; roots sorted lexicographically by (re, im)."""
    f = descartes_factorization(spec)
    s1 = cmath.sqrt(f.alpha * f.alpha - 4.0 * f.beta)
    s2 = cmath.sqrt(f.alpha * f.alpha - 4.0 * f.gamma)
    roots = _sorted_roots(
        (
            (-f.alpha + s1) / 2.0,
            (-f.alpha - s1) / 2.0,
            (f.alpha + s2) / 2.0,
            (f.alpha - s2) / 2.0,
        )
    )
    res = tuple(
        abs(x**4 + spec.p * x * x + spec.q * x + spec.r) for x in roots
    )
    return RootSet(roots, "closed_form", res)


def g_function(z) -> complex:
    """g(z) = -z^(1/6) cosh((1/3) acosh(-1/sqrt(z))), principal branches.

    2^(2/3) g(z) is a root of the quartic-resolvent cubic
    xi^3 - 4 t xi - 1 = 0 written through z = 4 (4t/3)^3; as a function
    of z it always satisfies 4 g^3 - 3 z^(1/3) g - 1 = 0.
    """
    z = complex(z)
    if z == 0:
        raise DomainError("g_function is singular at z = 0")
    return -(z ** (1.0 / 6.0)) * cmath.cosh(cmath.acosh(-1.0 / cmath.sqrt(z)) / 3.0)


def trinomial_closed_roots(n: int, t) -> RootSet:
    """Closed-form roots of x^n - x + t = 0 for n in {2, 3, 4}."""
    t = complex(t)
    if n == 2:
        return quadratic_roots(t)
    inst = TrinomialInstance(n, t)
    if n == 3:
        # x^3 - 3 (1/3) x + 2 (t/2) = 0
        roots = _sorted_roots(_depressed_cubic_roots(1.0 / 3.0, t / 2.0, "minus"))
        return RootSet(roots, "closed_form", tuple(residual(inst, x) for x in roots))
    if n == 4:
        rs = quartic_roots(QuarticSpec(0.0, -1.0, t))
        return RootSet(rs.roots, "closed_form", tuple(residual(inst, x) for x in rs.roots))
    raise DomainError(f"no closed form implemented for n = {n}")

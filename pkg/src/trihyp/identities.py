"""Catalog of special-function reduction identities with a differential
checker.

Every entry pairs the special-function side (LHS, evaluated through the
:mod:`trihyp.specfun` series machinery) with an independently coded
elementary side (RHS).  The two sides share nothing but ``specfun``
primitives, so agreement on sampled parameters is a genuine
cross-check.  Each entry also carries a domain predicate encoding the
piecewise exclusions and the numerically validated branch region, plus
a deterministic sampler for that domain.

Several printed elementary forms contain a bracket of the shape
``1 - (truncated binomial series)`` whose value shrinks like t^(n+1);
evaluating them literally at small |t| cancels catastrophically.  For
those entries the bracket is rewritten as the exact tail of the
binomial series (a finite-ratio term recurrence), which is used for
small |t| and agrees with the printed form elsewhere.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from random import Random
from typing import Callable, Mapping, Sequence

from .errors import DivergenceError, DomainError
from .specfun import (
    HypergeometricSpec,
    bell_polynomial,
    gamma,
    hyp1f1,
    hyp2f1,
    hyp3f2,
    hyp_pfq_regularized,
    incomplete_beta,
    legendre_p,
    legendre_polynomial,
    lower_incomplete_gamma,
    pochhammer,
)
from .roots import g_function

__all__ = [
    "IdentityDescriptor",
    "CheckRecord",
    "list_identities",
    "get_identity",
    "eval_identity",
    "check_grid",
    "default_grid",
    "faa_di_bruno_derivative",
    "i13_rhs",
    "i13_piecewise",
    "i14a_rhs",
    "i14b_rhs",
    "i15_rhs",
    "DEFAULT_SEED",
]

DEFAULT_SEED = 20260811

_FACT = math.factorial
_SQRT_PI = math.sqrt(math.pi)


@dataclass(frozen=True)
class ParamSpec:
    name: str
    kind: str  # "int" | "complex"


@dataclass(frozen=True)
class IdentityDescriptor:
    """One catalog entry: paired LHS/RHS evaluators plus metadata."""

    id: str
    params: tuple
    domain: str
    lhs: Callable[..., complex]
    rhs: Callable[..., complex]
    anchor: str
    in_domain: Callable[..., bool] = field(repr=False, default=lambda **kw: True)
    sample: Callable[[Random], dict] = field(repr=False, default=lambda rng: {})
    special_points: tuple = ()
    notes: str = ""


@dataclass(frozen=True)
class CheckRecord:
    """Outcome of one differential comparison."""

    identity_id: str
    params: dict
    lhs_value: complex | None
    rhs_value: complex | None
    abs_err: float
    rel_err: float
    verdict: str  # pass | fail | skipped_domain | divergent_both


# --------------------------------------------------------------------------
# shared elementary building blocks (RHS side only)
# --------------------------------------------------------------------------


def _binomial_tail(c, k0: int, u) -> complex:
    """sum_{k >= k0} (c)_k u^k / k!  by term recurrence (needs |u| < 1)."""
    c, u = complex(c), complex(u)
    term = pochhammer(c, k0) / _FACT(k0) * u**k0
    total = term
    k = k0
    for _ in range(4000):
        term *= (c + k) * u / (k + 1)
        total += term
        k += 1
        if abs(term) <= 1e-17 * abs(total) + 1e-300:
            break
    return total


_TAIL_CUT = 0.8  # switch to the tail rewrite while the binomial variable is this small


def _half_bracket(n: int, t) -> complex:
    """[1 - sqrt(1-t) sum_{k<=n} (-1/2)_k/k! (t/(t-1))^k], stable form.

    Equals sqrt(1-t) * tail_{k>n} of the binomial series of 1/sqrt(1-t)
    in u = t/(t-1); the tail rewrite avoids the u^(n+1) cancellation.
    """
    t = complex(t)
    u = t / (t - 1.0)
    if abs(u) <= _TAIL_CUT:
        return cmath.sqrt(1.0 - t) * _binomial_tail(-0.5, n + 1, u)
    s = sum(pochhammer(-0.5, k) / _FACT(k) * u**k for k in range(n + 1))
    return 1.0 - cmath.sqrt(1.0 - t) * s


def _rhs_i01(t):
    t = complex(t)
    if t == 0:
        return 1.0 + 0.0j
    if t == 1:
        return 2.0 + 0.0j
    return 2.0 / t * (1.0 - cmath.sqrt(1.0 - t))


def _rhs_i02(n, t):
    t = complex(t)
    if t == 0:
        return 1.0 + 0.0j
    if t == 1:
        if n == 0:
            return 2.0 + 0.0j
        raise DivergenceError("2F1(1/2+n,1+n;2+n;1) diverges for n >= 1")
    return (
        2.0 * (-1) ** n * _FACT(n + 1) / (pochhammer(0.5, n) * t ** (n + 1))
    ) * _half_bracket(n, t)


def _rhs_i03(n, t):
    t = complex(t)
    if t == 0:
        return 1.0 + 0.0j
    if t == 1:
        if n == 0:
            return 4.0 + 0.0j
        raise DivergenceError("2F1(1+2n,3/2+n;3+2n;1) diverges for n >= 1")
    pref = (-1) ** n * _FACT(n + 1) / pochhammer(0.5, n)
    w = t * t / (4.0 * (t - 1.0))
    if abs(w) <= _TAIL_CUT:
        # bracket = -2 sqrt(1-t) * tail; prefactor (2/t)^(2n+2) w^(n+1)
        # collapses to (t-1)^(-(n+1))
        tail = _binomial_tail(-0.5, n + 1, w) / w ** (n + 1)
        return pref * 2.0 * cmath.sqrt(1.0 - t) * tail / (t - 1.0) ** (n + 1)
    s = sum(pochhammer(-0.5, k) / _FACT(k) * w**k for k in range(n + 1))
    return pref * (2.0 / t) ** (2 * (n + 1)) * (2.0 - t - 2.0 * cmath.sqrt(1.0 - t) * s)


def _rhs_i04(n, t):
    t = complex(t)
    if t == 0:
        return 0.0 + 0.0j
    if t == 1:
        return 2.0 * (-1) ** n * _FACT(n) / pochhammer(0.5, n) + 0.0j
    return 2.0 * (-1) ** n * _FACT(n) / pochhammer(0.5, n) * _half_bracket(n, t)


def _rhs_i05(n, t):
    t = complex(t)
    if t == 0:
        return 1.0 + 0.0j
    if t == 1:
        if n == 0:
            return 2.0 + 0.0j
        raise DivergenceError("2F1(1/2+n,1+n;2+n;1) diverges for n >= 1")
    pref = 2.0 * (-1) ** n * _FACT(n + 1) / (pochhammer(0.5, n) * t ** (n + 1))
    if abs(t) <= _TAIL_CUT:
        # bracket = (1-t)^(1/2-n) * tail of the binomial series of
        # (1-t)^(n-1/2) in t
        return pref * (1.0 - t) ** (0.5 - n) * _binomial_tail(0.5 - n, n + 1, t)
    s = sum(pochhammer(0.5 - n, k) / _FACT(k) * t**k for k in range(n + 1))
    return pref * (1.0 - (1.0 - t) ** (0.5 - n) * s)


def _rhs_i06(n, t):
    t = complex(t)
    return pochhammer(0.5, n) / cmath.sqrt(1.0 - t) * (t / (1.0 - t)) ** n


def _seven_bracket(n: int, t) -> complex:
    """[1 - (1/sqrt(1-t)) sum_{k<=n} (1/2)_k/k! (t/(t-1))^k], stable form."""
    t = complex(t)
    u = t / (t - 1.0)
    if abs(u) <= _TAIL_CUT:
        return _binomial_tail(0.5, n + 1, u) / cmath.sqrt(1.0 - t)
    s = sum(pochhammer(0.5, k) / _FACT(k) * u**k for k in range(n + 1))
    return 1.0 - s / cmath.sqrt(1.0 - t)


def _rhs_i07(n, t):
    t = complex(t)
    if t == 0:
        return 1.0 + 0.0j
    if t == 1:
        return 2.0 * (n + 1) / (2 * n + 1) + 0.0j
    pref = 2.0 * _FACT(n + 1) / (pochhammer(1.5, n) * cmath.sqrt(1.0 - t))
    return pref * ((t - 1.0) / t) ** (n + 1) * _seven_bracket(n, t)


def _rhs_i08(n, t):
    t = complex(t)
    if t == 0:
        return 1.0 + 0.0j
    if t == 1:
        return 2.0 * (n + 1) / (2 * n + 1) + 0.0j
    u = cmath.sqrt(1.0 - t)
    v = (u - 1.0) / u
    pref = 2.0 * _FACT(n + 1) / pochhammer(1.5, n)
    if abs(v) <= 2.0 * _TAIL_CUT:
        # the explicit ((t-1)/t)^(n+1) piece cancels the untruncated part
        # of the sum exactly (both equal +-2 u^(2n+1)/((1-u)(1+u))^(n+1)),
        # leaving the binomial tail in v/2
        tail = _binomial_tail(n + 1.0, n + 1, v / 2.0)
        return pref * (-(2.0**-n)) * (u / (u - 1.0)) ** n / (1.0 - u) * tail
    s = sum(
        pochhammer(n + 1, k) / (_FACT(k) * 2.0 ** (k + n)) * v ** (k - n)
        for k in range(n + 1)
    )
    return pref * (2.0 / u * ((t - 1.0) / t) ** (n + 1) + s / (1.0 - u))


def _rhs_i09(n, t):
    # bracket sign corrected relative to the printed form: the sum is
    # subtracted (it is the truncated binomial series of (1-t)^(n+1/2))
    t = complex(t)
    if t == 0:
        return 1.0 + 0.0j
    if t == 1:
        return 2.0 * (n + 1) / (2 * n + 1) + 0.0j
    pref = 2.0 * _FACT(n + 1) / pochhammer(1.5, n)
    if abs(t) <= _TAIL_CUT:
        return pref * _binomial_tail(-n - 0.5, n + 1, t) / (-t) ** (n + 1)
    s = sum(pochhammer(-n - 0.5, k) / _FACT(k) * t**k for k in range(n + 1))
    return pref / (-t) ** (n + 1) * ((1.0 - t) ** (n + 0.5) - s)


def _rhs_i10(n, t):
    t = complex(t)
    if t == 0:
        return 0.0 + 0.0j
    return (
        ((t - 1.0) / t) ** (n / 2.0)
        / (2.0**n * pochhammer(0.5, n))
        * _seven_bracket(n - 1, t)
    )


def _rhs_i11(n, t):
    return 2.0 * pochhammer(0.5, n) * complex(t) ** (n - 1)


def _rhs_i12(n, t):
    t = complex(t)
    return -((-2.0) ** n) * pochhammer(0.5, n) * t * (1.0 - t * t) ** ((n - 1) / 2.0)


def i13_rhs(z) -> complex:
    """(3/sqrt(z)) sin((1/3) asin(sqrt(z))); the z -> 0 limit is 1."""
    z = complex(z)
    if z == 0:
        return 1.0 + 0.0j
    return 3.0 / cmath.sqrt(z) * cmath.sin(cmath.asin(cmath.sqrt(z)) / 3.0)


def i13_piecewise(z) -> complex:
    """The two-branch cosh/cos form of the same reduction.

    For real z > 1 this is the continuation from below the branch cut,
    the complex conjugate of what principal-branch asin produces there.
    """
    z = complex(z)
    sz = cmath.sqrt(z)
    if z.imag == 0.0 and z.real >= 1.0:
        u = cmath.acosh(sz) / 3.0
        return 3.0 / (2.0 * sz) * (cmath.cosh(u) - 1j * math.sqrt(3.0) * cmath.sinh(u))
    u = cmath.acos(sz) / 3.0
    return 3.0 / (2.0 * sz) * (cmath.cos(u) - math.sqrt(3.0) * cmath.sin(u))


def _h_coeff(s: int, z) -> complex:
    """h_s(z), the s-th derivative of (1/3) asin(sqrt(z)) in closed form."""
    z = complex(z)
    return (
        (-1j) ** (s - 1)
        * _FACT(s - 1)
        / (6.0 * (z * (1.0 - z)) ** (s / 2.0))
        * legendre_polynomial(s - 1, (1.0 - 2.0 * z) / (2.0 * cmath.sqrt(z * (z - 1.0))))
    )


def faa_di_bruno_derivative(n: int, z) -> complex:
    """n-th derivative of sin((1/3) asin(sqrt(z))) assembled from Bell
    polynomials of the inner-function derivatives h_s."""
    if n < 1:
        raise DomainError("derivative order must be >= 1")
    z = complex(z)
    if z == 0 or z == 1:
        raise DomainError("derivative is singular at z in {0, 1}")
    u = cmath.asin(cmath.sqrt(z)) / 3.0
    total = 0.0 + 0.0j
    for k in range(1, n + 1):
        hs = [_h_coeff(s, z) for s in range(1, n - k + 2)]
        total += cmath.sin(u + math.pi * k / 2.0) * bell_polynomial(n, k, hs)
    return total


def _rhs_i14(n, z):
    z = complex(z)
    return 6.0 * z ** (n - 0.5) / _SQRT_PI * faa_di_bruno_derivative(n, z)


def i14a_rhs(z) -> complex:
    """Elementary form of the n = 1 member: cos((1/3) asin sqrt(z)) / sqrt(1-z)."""
    z = complex(z)
    return cmath.cos(cmath.asin(cmath.sqrt(z)) / 3.0) / cmath.sqrt(1.0 - z)


def i14b_rhs(z) -> complex:
    """Elementary form of the n = 2 member."""
    z = complex(z)
    u = cmath.asin(cmath.sqrt(z)) / 3.0
    return ((3.0 - 6.0 * z) * cmath.cos(u) + cmath.sqrt(-z * (z - 1.0)) * cmath.sin(u)) / (
        3.0 * (1.0 - z) ** 1.5
    )


def _g_bracket(z) -> complex:
    z = complex(z)
    g = g_function(z)
    sg = cmath.sqrt(g)
    return cmath.sqrt(g + 3.0 * z ** (1.0 / 3.0) * sg / (1.0 - 2.0 * g * sg)) - sg


def i15_rhs(z) -> complex:
    """(4/3) z^(-1/3) [sqrt(g + 3 z^(1/3) sqrt(g)/(1 - 2 g^(3/2))) - sqrt(g)]."""
    z = complex(z)
    return 4.0 / 3.0 * z ** (-1.0 / 3.0) * _g_bracket(z)


def _rhs_i16(z):
    z = complex(z)
    w = -4.0 * z / (1.0 - z) ** 2
    return i15_rhs(w) / cmath.sqrt(1.0 - z)


def _i17_argument(z):
    return cmath.sqrt(2.0 / (1.0 + cmath.sqrt(1.0 - complex(z))))


def _lhs_i17(z):
    x = _i17_argument(z)
    return legendre_p(-1.0 / 6.0, 1.0 / 3.0, x) * legendre_p(-1.0 / 6.0, -1.0 / 3.0, x)


def _rhs_i17(z):
    z = complex(z)
    return (
        cmath.sqrt(6.0 * (1.0 + cmath.sqrt(1.0 - z)))
        / (math.pi * z ** (1.0 / 3.0))
        * _g_bracket(z)
    )


def _i18_sides(n, t):
    """Worst-disagreeing pair among the equivalent elementary forms
    (I02 vs I05; I07 vs I08; I07 vs I09)."""
    pairs = (
        (_rhs_i02(n, t), _rhs_i05(n, t)),
        (_rhs_i07(n, t), _rhs_i08(n, t)),
        (_rhs_i07(n, t), _rhs_i09(n, t)),
    )
    return max(pairs, key=lambda p: abs(p[0] - p[1]) / max(1.0, abs(p[0])))


def _rhs_k01(n, z):
    z = complex(z)
    if z == 0:
        return 1.0 + 0.0j
    return n * (-z) ** (-n) * lower_incomplete_gamma(n, -z)


def _rhs_k02(n, z):
    z = complex(z)
    if z == 0:
        return 1.0 + 0.0j
    return n * cmath.exp(z) * lower_incomplete_gamma(n, z) / z**n


# --------------------------------------------------------------------------
# domains and samplers
# --------------------------------------------------------------------------


def _disc(rng: Random, radius: float, min_abs: float = 0.0) -> complex:
    while True:
        r = radius * math.sqrt(rng.random())
        if r >= min_abs:
            return r * cmath.exp(1j * rng.uniform(0.0, 2.0 * math.pi))


def _in_disc(t, radius=0.92, min_abs=0.0) -> bool:
    return min_abs <= abs(complex(t)) <= radius


def _int_in(n, lo, hi) -> bool:
    return isinstance(n, int) and lo <= n <= hi


def _make_nt_sampler(n_lo, n_hi, radius=0.92, min_abs=0.0, cycle=None):
    ns = cycle or list(range(n_lo, n_hi + 1))

    def sample(rng: Random) -> dict:
        return {"n": ns[rng.randrange(len(ns))], "t": _disc(rng, radius, min_abs)}

    return sample


_P_T = (ParamSpec("t", "complex"),)
_P_NT = (ParamSpec("n", "int"), ParamSpec("t", "complex"))
_P_Z = (ParamSpec("z", "complex"),)
_P_NZ = (ParamSpec("n", "int"), ParamSpec("z", "complex"))


def _entry(**kw) -> IdentityDescriptor:
    return IdentityDescriptor(**kw)


_CATALOG: dict[str, IdentityDescriptor] = {}


def _register(desc: IdentityDescriptor):
    if desc.id in _CATALOG:
        raise ValueError(f"duplicate identity id {desc.id}")
    _CATALOG[desc.id] = desc


_register(
    _entry(
        id="I01",
        params=_P_T,
        domain="|t| <= 0.92 union {t = 1}",
        lhs=lambda t: hyp2f1(0.5, 1.0, 2.0, t),
        rhs=_rhs_i01,
        anchor="Gauss 2F1(1/2,1;2;t) in elementary form",
        in_domain=lambda t: _in_disc(t) or t == 1,
        sample=lambda rng: {"t": _disc(rng, 0.92)},
        special_points=({"t": 0.0}, {"t": 1.0}),
    )
)

_register(
    _entry(
        id="I02",
        params=_P_NT,
        domain="n in 0..5, |t| <= 0.92 union {t = 0, t = 1}; t = 1 divergent for n >= 1",
        lhs=lambda n, t: hyp2f1(0.5 + n, 1.0 + n, 2.0 + n, t),
        rhs=_rhs_i02,
        anchor="first differentiation formula of the base reduction",
        in_domain=lambda n, t: _int_in(n, 0, 5) and (_in_disc(t) or t == 1),
        sample=_make_nt_sampler(0, 5),
        special_points=({"n": 0, "t": 0.0}, {"n": 0, "t": 1.0}, {"n": 2, "t": 1.0}),
    )
)

_register(
    _entry(
        id="I03",
        params=_P_NT,
        domain="n in 0..5, |t| <= 0.92 union {t = 0, t = 1}; t = 1 divergent for n >= 1",
        lhs=lambda n, t: hyp2f1(1.0 + 2 * n, 1.5 + n, 3.0 + 2 * n, t),
        rhs=_rhs_i03,
        anchor="quadratic transformation of the first differentiation formula",
        in_domain=lambda n, t: _int_in(n, 0, 5) and (_in_disc(t) or t == 1),
        sample=_make_nt_sampler(0, 5),
        special_points=({"n": 1, "t": 0.0}, {"n": 0, "t": 1.0}, {"n": 1, "t": 1.0}),
    )
)

_register(
    _entry(
        id="I04",
        params=_P_NT,
        domain="n in 0..5, |t| <= 0.92 union {t = 0, t = 1}",
        lhs=lambda n, t: incomplete_beta(1.0 + n, 0.5 - n, t),
        rhs=_rhs_i04,
        anchor="incomplete beta B(1+n, 1/2-n, t) in elementary form",
        in_domain=lambda n, t: _int_in(n, 0, 5) and (_in_disc(t) or t == 1),
        sample=_make_nt_sampler(0, 5),
        special_points=({"n": 1, "t": 0.0}, {"n": 0, "t": 1.0}, {"n": 3, "t": 1.0}),
    )
)

_register(
    _entry(
        id="I05",
        params=_P_NT,
        domain="n in 0..5, |t| <= 0.92 union {t = 0, t = 1}; t = 1 divergent for n >= 1",
        lhs=lambda n, t: hyp2f1(0.5 + n, 1.0 + n, 2.0 + n, t),
        rhs=_rhs_i05,
        anchor="alternative elementary form with (1-t)^(1/2-n) prefactor",
        in_domain=lambda n, t: _int_in(n, 0, 5) and (_in_disc(t) or t == 1),
        sample=_make_nt_sampler(0, 5),
        special_points=({"n": 2, "t": 0.0}, {"n": 0, "t": 1.0}, {"n": 1, "t": 1.0}),
    )
)

_register(
    _entry(
        id="I06",
        params=_P_NT,
        domain="n in 0..6, |t| <= 0.92; t = 1 excluded (both sides divergent)",
        lhs=lambda n, t: hyp_pfq_regularized(
            HypergeometricSpec.of((0.5, 1.0), (1.0 - n,), t)
        ).value,
        rhs=_rhs_i06,
        anchor="regularized 2F1(1/2,1;1-n;t) reduction",
        in_domain=lambda n, t: _int_in(n, 0, 6) and _in_disc(t) and t != 1,
        sample=_make_nt_sampler(0, 6),
        special_points=({"n": 2, "t": 0.5}, {"n": 0, "t": 0.0}),
    )
)

_register(
    _entry(
        id="I07",
        params=_P_NT,
        domain="n in 0..5, |t| <= 0.92 union {t = 0, t = 1}",
        lhs=lambda n, t: hyp2f1(0.5, 1.0, 2.0 + n, t),
        rhs=_rhs_i07,
        anchor="third differentiation formula; t = 1 row is the Gauss value 2(n+1)/(2n+1)",
        in_domain=lambda n, t: _int_in(n, 0, 5) and (_in_disc(t) or t == 1),
        sample=_make_nt_sampler(0, 5),
        special_points=({"n": 0, "t": 0.0}, {"n": 1, "t": 1.0}, {"n": 4, "t": 1.0}),
    )
)

_register(
    _entry(
        id="I08",
        params=_P_NT,
        domain="n in 0..5, |t| <= 0.92 union {t = 0, t = 1}",
        lhs=lambda n, t: hyp2f1(0.5, 1.0, 2.0 + n, t),
        rhs=_rhs_i08,
        anchor="variant via the Vidunas transformation",
        in_domain=lambda n, t: _int_in(n, 0, 5) and (_in_disc(t) or t == 1),
        sample=_make_nt_sampler(0, 5),
        special_points=({"n": 0, "t": 0.0}, {"n": 2, "t": 1.0}),
    )
)

_register(
    _entry(
        id="I09",
        params=_P_NT,
        domain="n in 0..5, |t| <= 0.92 union {t = 0, t = 1}",
        lhs=lambda n, t: hyp2f1(0.5, 1.0, 2.0 + n, t),
        rhs=_rhs_i09,
        anchor="variant via the 2F1(1,b;m;z) partial-fraction formula",
        in_domain=lambda n, t: _int_in(n, 0, 5) and (_in_disc(t) or t == 1),
        sample=_make_nt_sampler(0, 5),
        special_points=({"n": 0, "t": 0.0}, {"n": 3, "t": 1.0}),
        notes="bracket sign corrected: the truncated binomial sum is subtracted",
    )
)

_register(
    _entry(
        id="I10",
        params=_P_NT,
        domain="n in 1..4, t real in [-6, 0]; branch-valid only on the negative real axis",
        lhs=lambda n, t: legendre_p(-n, -n, 1.0 / cmath.sqrt(1.0 - t)),
        rhs=_rhs_i10,
        anchor="Legendre P_{-n}^{-n}(1/sqrt(1-t)) in elementary form",
        in_domain=lambda n, t: _int_in(n, 1, 4)
        and complex(t).imag == 0.0
        and -6.0 <= complex(t).real <= 0.0,
        sample=lambda rng: {"n": rng.randrange(1, 5), "t": rng.uniform(-6.0, -0.01)},
        special_points=({"n": 1, "t": 0.0}, {"n": 3, "t": 0.0}),
        notes="for t off the negative real axis the printed power combination "
        "picks up a unit phase and the identity fails; domain restricted accordingly",
    )
)

_register(
    _entry(
        id="I11",
        params=_P_NT,
        domain="n in 1..6, |t| <= 3 (series terminates, any finite t works)",
        lhs=lambda n, t: hyp_pfq_regularized(
            HypergeometricSpec.of((0.5 - n, 1.0 - n), (2.0 - n,), t)
        ).value,
        rhs=_rhs_i11,
        anchor="regularized 2F1(1/2-n,1-n;2-n;t) = 2 (1/2)_n t^(n-1)",
        in_domain=lambda n, t: _int_in(n, 1, 6) and abs(complex(t)) <= 3.0,
        sample=lambda rng: {"n": rng.randrange(1, 7), "t": _disc(rng, 3.0)},
        special_points=({"n": 1, "t": 0.7}, {"n": 2, "t": 0.3}),
        notes="the n = 1 row is the t-independent value 1, consistent with the "
        "general row 2 (1/2)_n t^(n-1)",
    )
)

_register(
    _entry(
        id="I12",
        params=_P_NT,
        domain="n in 1..4, t real with |t| <= 0.99 (Ferrers region)",
        lhs=lambda n, t: legendre_p(n, n - 1, t),
        rhs=_rhs_i12,
        anchor="P_n^(n-1)(t) = -(-2)^n (1/2)_n t (1-t^2)^((n-1)/2)",
        in_domain=lambda n, t: _int_in(n, 1, 4)
        and complex(t).imag == 0.0
        and abs(complex(t).real) <= 0.99,
        sample=lambda rng: {"n": rng.randrange(1, 5), "t": rng.uniform(-0.99, 0.99)},
        special_points=({"n": 1, "t": 0.3}, {"n": 4, "t": -0.5}),
    )
)

_register(
    _entry(
        id="I13",
        params=_P_Z,
        domain="|z| <= 0.95 union {z = 1}",
        lhs=lambda z: hyp2f1(1.0 / 3.0, 2.0 / 3.0, 1.5, z),
        rhs=i13_rhs,
        anchor="2F1(1/3,2/3;3/2;z) = (3/sqrt z) sin((1/3) asin sqrt z)",
        in_domain=lambda z: _in_disc(z, 0.95) or z == 1,
        sample=lambda rng: {"z": _disc(rng, 0.95)},
        special_points=({"z": 0.0}, {"z": 1.0}),
    )
)

_register(
    _entry(
        id="I14",
        params=_P_NZ,
        domain="n in 1..3, z real in (0, 0.97]; Bell form is branch-valid on (0,1) only",
        lhs=lambda n, z: hyp_pfq_regularized(
            HypergeometricSpec.of((1.0 / 3.0, 2.0 / 3.0), (1.5 - n,), z)
        ).value,
        rhs=_rhs_i14,
        anchor="regularized 2F1(1/3,2/3;3/2-n;z) via Bell polynomials of h_s",
        in_domain=lambda n, z: _int_in(n, 1, 3)
        and complex(z).imag == 0.0
        and 0.005 <= complex(z).real <= 0.97,
        sample=lambda rng: {"n": rng.randrange(1, 4), "z": rng.uniform(0.005, 0.97)},
        special_points=({"n": 1, "z": 0.25}, {"n": 2, "z": 0.5}, {"n": 3, "z": 0.1}),
    )
)

_register(
    _entry(
        id="I15",
        params=_P_Z,
        domain="0 < |z| <= 0.95 union {z = 1}",
        lhs=lambda z: hyp3f2(0.25, 0.5, 0.75, 2.0 / 3.0, 4.0 / 3.0, z),
        rhs=i15_rhs,
        anchor="3F2(1/4,1/2,3/4;2/3,4/3;z) through the resolvent function g",
        in_domain=lambda z: (_in_disc(z, 0.95) and abs(complex(z)) > 1e-8) or z == 1,
        sample=lambda rng: {"z": _disc(rng, 0.95, min_abs=1e-3)},
        special_points=({"z": 1.0}, {"z": 0.5}, {"z": -0.5}),
    )
)

_register(
    _entry(
        id="I16",
        params=_P_Z,
        domain="|z| <= 0.95 with |4z/(1-z)^2| <= 0.95, z != 0",
        lhs=lambda z: hyp3f2(0.5, 5.0 / 6.0, 1.0 / 6.0, 2.0 / 3.0, 4.0 / 3.0, z),
        rhs=_rhs_i16,
        anchor="Kato quadratic transformation of the resolvent reduction",
        in_domain=lambda z: _in_disc(z, 0.95)
        and abs(complex(z)) > 1e-8
        and abs(4.0 * complex(z) / (1.0 - complex(z)) ** 2) <= 0.95,
        sample=lambda rng: _sample_i16(rng),
        special_points=({"z": 0.1}, {"z": -0.5}, {"z": 0.15}),
    )
)


def _sample_i16(rng: Random) -> dict:
    while True:
        z = _disc(rng, 0.95, min_abs=1e-3)
        if abs(4.0 * z / (1.0 - z) ** 2) <= 0.95:
            return {"z": z}


_register(
    _entry(
        id="I17",
        params=_P_Z,
        domain="0 < |z| <= 0.95, or z real in [-6, 0), or z = 1",
        lhs=_lhs_i17,
        rhs=_rhs_i17,
        anchor="product of Legendre functions P_(-1/6)^(1/3) P_(-1/6)^(-1/3)",
        in_domain=lambda z: (
            (_in_disc(z, 0.95) and abs(complex(z)) > 1e-8)
            or (complex(z).imag == 0.0 and -6.0 <= complex(z).real < 0.0)
            or z == 1
        ),
        sample=lambda rng: (
            {"z": _disc(rng, 0.95, min_abs=1e-3)}
            if rng.random() < 0.7
            else {"z": rng.uniform(-6.0, -0.05)}
        ),
        special_points=({"z": 1.0}, {"z": 0.5}),
    )
)

_register(
    _entry(
        id="I18",
        params=_P_NT,
        domain="n in 0..5, 0 < |t| <= 0.92 (shared domain of the equivalent forms)",
        lhs=lambda n, t: _i18_sides(n, t)[0],
        rhs=lambda n, t: _i18_sides(n, t)[1],
        anchor="equivalence of the alternative elementary representations "
        "(I02 = I05, I07 = I08 = I09)",
        in_domain=lambda n, t: _int_in(n, 0, 5) and _in_disc(t, min_abs=1e-6),
        sample=_make_nt_sampler(0, 5, min_abs=0.01),
        special_points=({"n": 1, "t": 0.5}, {"n": 3, "t": -0.4}),
        notes="reports the worst-disagreeing pair among the three equivalences",
    )
)

_register(
    _entry(
        id="K01",
        params=_P_NZ,
        domain="n in 1..5, |z| <= 8",
        lhs=lambda n, z: hyp1f1(n, 1 + n, z),
        rhs=_rhs_k01,
        anchor="Kummer 1F1(n;1+n;z) = n (-z)^(-n) gamma(n, -z)",
        in_domain=lambda n, z: _int_in(n, 1, 5) and abs(complex(z)) <= 8.0,
        sample=lambda rng: {"n": rng.randrange(1, 6), "z": _disc(rng, 8.0)},
        special_points=({"n": 1, "z": 0.0}, {"n": 3, "z": -2.0}),
    )
)

_register(
    _entry(
        id="K02",
        params=_P_NZ,
        domain="n in 1..5, |z| <= 8",
        lhs=lambda n, z: hyp1f1(1, 1 + n, z),
        rhs=_rhs_k02,
        anchor="Kummer 1F1(1;1+n;z) = n e^z gamma(n, z) / z^n",
        in_domain=lambda n, z: _int_in(n, 1, 5) and abs(complex(z)) <= 8.0,
        sample=lambda rng: {"n": rng.randrange(1, 6), "z": _disc(rng, 8.0)},
        special_points=({"n": 1, "z": 0.0}, {"n": 2, "z": 1.5}),
    )
)


# --------------------------------------------------------------------------
# public operations
# --------------------------------------------------------------------------


def list_identities() -> tuple:
    """All catalog entries in stable id order."""
    return tuple(_CATALOG[k] for k in sorted(_CATALOG))


def get_identity(identity_id: str) -> IdentityDescriptor:
    try:
        return _CATALOG[identity_id]
    except KeyError:
        raise DomainError(f"unknown identity id {identity_id!r}") from None


def _coerce_params(desc: IdentityDescriptor, params: Mapping) -> dict:
    out = {}
    for spec in desc.params:
        if spec.name not in params:
            raise DomainError(f"{desc.id}: missing parameter {spec.name!r}")
        v = params[spec.name]
        if spec.kind == "int":
            iv = int(round(v.real if isinstance(v, complex) else v))
            if iv != (v.real if isinstance(v, complex) else v):
                raise DomainError(f"{desc.id}: parameter {spec.name} must be an integer")
            out[spec.name] = iv
        else:
            out[spec.name] = complex(v)
    extra = set(params) - {p.name for p in desc.params}
    if extra:
        raise DomainError(f"{desc.id}: unexpected parameters {sorted(extra)}")
    return out


def _record(desc, params, lv, rv, tol):
    abs_err = abs(lv - rv)
    if lv == 0:
        rel_err = 0.0 if abs_err == 0.0 else math.inf
    else:
        rel_err = abs_err / abs(lv)
    ok = rel_err <= tol or (abs_err <= tol and abs(lv) < 1.0)
    return CheckRecord(
        desc.id, params, lv, rv, abs_err, rel_err, "pass" if ok else "fail"
    )


def eval_identity(identity_id: str, params: Mapping, tol: float) -> CheckRecord:
    """Differentially evaluate one identity at one parameter point.

    Points where exactly one side diverges count as ``fail``; points
    where both sides are genuinely infinite (the divergent rows of the
    piecewise forms) come back as ``divergent_both``.
    """
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    desc = get_identity(identity_id)
    p = _coerce_params(desc, params)
    if not desc.in_domain(**p):
        return CheckRecord(desc.id, p, None, None, math.nan, math.nan, "skipped_domain")
    try:
        lv = desc.lhs(**p)
        l_div = False
    except DivergenceError:
        lv, l_div = None, True
    try:
        rv = desc.rhs(**p)
        r_div = False
    except DivergenceError:
        rv, r_div = None, True
    if l_div and r_div:
        return CheckRecord(desc.id, p, None, None, 0.0, 0.0, "divergent_both")
    if l_div or r_div:
        return CheckRecord(desc.id, p, lv, rv, math.inf, math.inf, "fail")
    return _record(desc, p, lv, rv, tol)


def check_grid(identity_id: str, grid: Sequence, tol: float) -> list:
    """One :class:`CheckRecord` per grid point.

    Grid points may be mappings or positional tuples in catalog
    parameter order.  Points outside the entry's domain predicate are
    reported as ``skipped_domain``, never as failures.
    """
    desc = get_identity(identity_id)
    records = []
    for point in grid:
        if not isinstance(point, Mapping):
            point = {spec.name: v for spec, v in zip(desc.params, point)}
        records.append(eval_identity(identity_id, point, tol))
    return records


def default_grid(identity_id: str, count: int = 200, seed: int = DEFAULT_SEED) -> list:
    """Deterministic pseudo-random sample of the entry's declared domain,
    with the piecewise special points prepended."""
    desc = get_identity(identity_id)
    rng = Random(f"{seed}:{identity_id}")
    points = [dict(p) for p in desc.special_points[:count]]
    while len(points) < count:
        points.append(desc.sample(rng))
    return points

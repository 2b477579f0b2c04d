"""Closed-form right-hand-side evaluators for the master identities: finite
residue sums for each kernel family, the infinite-series center-line case, the
third-order-pole expansion with derivative terms, and the Gamma-ratio series
transforms.

These implement the displayed finite sums verbatim (strict-floor limits).  The
kernels module's contour-integral residues form the independent second path;
the two must agree, which is the main anti-bug device of the package.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from . import integrand as ig
from . import kernels as kn
from . import quadrature as qd
from .errors import (
    NonConvergenceError,
    OnContourError,
    ParityError,
    PremiseError,
    ResonanceError,
)
from .numerics import floor_int, gamma, gamma_ratio, log_gamma

_PI = math.pi
_VANISH_TOL = 1e-13


@dataclass(frozen=True)
class TheoremInstance:
    """A (kernel, integrand, mode, scale) tuple whose RHS is a residue sum."""

    theorem_id: str
    kernel: kn.KernelSpec
    integrand: ig.IntegrandSpec
    mode: str = "single"
    a: complex = 1.0
    extra: dict = field(default_factory=dict)


def _mode_pair(F: ig.IntegrandSpec, mode: str, z1: complex, z2: complex) -> complex:
    """The mode's combination evaluated at the pole's split arguments."""
    if mode == "product_parity":
        ig._require_parity(F, ("even", "odd"), mode)
        return ig.eval(F, z1) * ig.eval(F, z2)
    if mode == "sum_even":
        ig._require_parity(F, ("even",), mode)
        return ig.eval(F, z1) + ig.eval(F, z2)
    if mode == "diff_odd":
        ig._require_parity(F, ("odd",), mode)
        return ig.eval(F, z1) - ig.eval(F, z2)
    if mode == "sum_odd_squares":
        ig._require_parity(F, ("odd",), mode)
        return ig.eval(F, z1) ** 2 + ig.eval(F, z2) ** 2
    if mode == "cross_parity":
        if not isinstance(F, ig.OddFactor):
            raise ParityError("cross_parity pairs odd_sinh(b) with even_cosh(b)")
        Fe = ig.EvenFactor(F.b)
        return ig.eval(F, z1) * ig.eval(Fe, z2) - ig.eval(Fe, z1) * ig.eval(F, z2)
    raise ValueError(f"unknown mode {mode!r}")


def _central_value(F: ig.IntegrandSpec, mode: str, a: complex) -> complex:
    """F(a/4) in single mode; the split-argument combination otherwise."""
    if mode == "single":
        return ig.eval(F, a / 4)
    return _mode_pair(F, mode, -0.5j * a, 0.5j * a)


def _require_kernel(inst: TheoremInstance, cls, op: str) -> None:
    if not isinstance(inst.kernel, cls):
        raise TypeError(f"{op} needs kernel {cls.__name__}, got {type(inst.kernel).__name__}")


def rhs_fcosh(inst: TheoremInstance) -> complex:
    """Master identity for 1/cosh(pi x): the integral collapses to F(a/4)."""
    _require_kernel(inst, kn.CoshPi, "rhs_fcosh")
    return _central_value(inst.integrand, inst.mode, inst.a)


def rhs_gen1(inst: TheoremInstance) -> complex:
    """Single-pole sinh kernel, 0 < p < 1: -i F(a/4) / (2p)."""
    _require_kernel(inst, kn.SinhP, "rhs_gen1")
    p = inst.kernel.p
    if not 0 < p < 1:
        raise ValueError(f"rhs_gen1 is the single-pole window 0 < p < 1, got p={p}")
    return -1j * _central_value(inst.integrand, inst.mode, inst.a) / (2 * p)


def _gen1a_term(inst: TheoremInstance, p: float, n: int) -> complex:
    a = complex(inst.a)
    if inst.mode == "single":
        return ig.eval(inst.integrand, -a * ((n + 1) ** 2 - p * p) / (4 * p * p))
    z1 = 1j * a * (n + 1 - p) / (2 * p)
    z2 = 1j * a * (n + 1 + p) / (2 * p)
    return _mode_pair(inst.integrand, inst.mode, z1, z2)


def rhs_gen1a(inst: TheoremInstance) -> complex:
    """General sinh kernel: i/(2p) * sum of alternating F values over the
    strict-floor index window."""
    _require_kernel(inst, kn.SinhP, "rhs_gen1a")
    p = inst.kernel.p
    if p == int(p):
        # a kernel zero sits on the contour; the sum is the principal value
        # only when the integrand kills it
        edge = _gen1a_term(inst, p, int(-p - 1))
        if abs(edge) > _VANISH_TOL:
            raise OnContourError(
                f"pole on the contour at integer p={p} and the integrand does not vanish there"
            )
    total = 0.0 + 0.0j
    for n in range(floor_int(-p), floor_int(p - 1) + 1):
        total += (-1.0) ** n * _gen1a_term(inst, p, n)
    return 1j * total / (2 * p)


def _gen2_window(q: float, r: float) -> int:
    return floor_int((q * q + r * r) / abs(q))


def _gen2_term(inst: TheoremInstance, s: complex, n: int) -> complex:
    a = complex(inst.a)
    if inst.mode == "single":
        return ig.eval(inst.integrand, a * (s * s - n * n) / (4 * s * s))
    z1 = -1j * a * (s - n) / (2 * s)
    z2 = 1j * a * (s + n) / (2 * s)
    return _mode_pair(inst.integrand, inst.mode, z1, z2)


def rhs_gen2(inst: TheoremInstance) -> complex:
    """Complex-parameter sinh kernel: central term plus the M-term paired sum."""
    _require_kernel(inst, kn.SinhPQ, "rhs_gen2")
    if isinstance(inst.kernel, kn.SinhCubed):
        raise TypeError("rhs_gen2 takes the first-power kernel; use rhs_cubed")
    q, r = inst.kernel.q, inst.kernel.r
    if q == 0:
        raise ValueError("q = 0 is the infinite-series case; use rhs_q0")
    s = complex(q, r)
    total = -0.5j * _central_value(inst.integrand, inst.mode, inst.a) / s
    for n in range(1, _gen2_window(q, r) + 1):
        total += -1j * (-1.0) ** n * _gen2_term(inst, s, n) / s
    return total


def rhs_q0(inst: TheoremInstance) -> complex:
    """Center-line case q = 0: the value of int F(a x(x+i))/sin(r pi (i+2x)) dx,
    an accelerated infinite alternating series plus half the central term."""
    _require_kernel(inst, kn.SinhPQ, "rhs_q0")
    q, r = inst.kernel.q, inst.kernel.r
    if q != 0 or r == 0:
        raise ValueError("rhs_q0 needs q = 0, r != 0")
    if inst.mode != "single":
        raise ParityError("rhs_q0 supports single mode")
    a = complex(inst.a)
    F = inst.integrand

    def term(n: int) -> complex:
        return (-1.0) ** n * ig.eval(F, a * (r * r + n * n) / (4 * r * r))

    series = qd.sum_alternating(term, qd.QuadratureOptions(target_abs_tol=1e-13))
    return (series.value + 0.5 * ig.eval(F, a / 4)) / (1j * r)


def rhs_cubed(inst: TheoremInstance) -> complex:
    """Third-power sinh kernel: the five-term expression with F' and F'' terms,
    divided by pi to return the integral's value."""
    _require_kernel(inst, kn.SinhCubed, "rhs_cubed")
    if inst.mode != "single":
        raise ParityError("rhs_cubed supports single mode")
    q, r = inst.kernel.q, inst.kernel.r
    if q == 0:
        raise ValueError("q = 0 has no finite census")
    s = complex(q, r)
    a = complex(inst.a)
    F = inst.integrand
    c = a / 4
    total = 1j * ig.eval(F, c) / (4 * s) - 1j * a * ig.deriv(F, c, 1) / (8 * _PI ** 2 * s ** 3)
    for n in range(1, _gen2_window(q, r) + 1):
        zn = a * (s * s - n * n) / (4 * s * s)
        sign = (-1.0) ** n
        total += sign * (
            1j * ig.eval(F, zn) / (2 * s)
            - 1j * a * ig.deriv(F, zn, 1) / (4 * _PI ** 2 * s ** 3)
            + 1j * a * a * n * n * ig.deriv(F, zn, 2) / (8 * _PI ** 2 * s ** 5)
        )
    return total


def rhs_a1(inst: TheoremInstance) -> complex:
    """Half-shift kernel identity for int F(a x(x+i))/sinh(2 k pi x) dx; the
    integrand must vanish at the on-contour argument z = 0."""
    _require_kernel(inst, kn.Sinh4k, "rhs_a1")
    if inst.mode != "single":
        raise ParityError("rhs_a1 supports single mode")
    k = inst.kernel.k
    F = inst.integrand
    a = complex(inst.a)
    if abs(ig.eval(F, 0.0)) > _VANISH_TOL:
        raise PremiseError("integrand must vanish at 0 for the half-shift identity")
    acc = 0.5 * ig.eval(F, a / 4)
    for n in range(1, k):
        acc += (-1.0) ** n * ig.eval(F, a * (k * k - n * n) / (4 * k * k))
    return -1j * (-1.0) ** k * acc / k


def rhs_a3(inst: TheoremInstance) -> complex:
    """Odd-cosh kernel 1/cosh(pi (2k-1) x); reduces to rhs_fcosh at k = 1."""
    _require_kernel(inst, kn.CoshOdd, "rhs_a3")
    if inst.mode != "single":
        raise ParityError("rhs_a3 supports single mode")
    k = inst.kernel.k
    F = inst.integrand
    a = complex(inst.a)
    c = 2 * k - 1
    total = (-1.0) ** (k + 1) * ig.eval(F, a / 4) / c
    for n in range(1, k):
        total += (
            -2 * (-1.0) ** k / c
            * (-1.0) ** n
            * ig.eval(F, a * (c * c - 4 * n * n) / (4 * c * c))
        )
    return total


def rhs_a4(inst: TheoremInstance) -> complex:
    """Paired-cosh kernel: the (2k-1)-term sum; equals rhs_a3 at b = 0."""
    _require_kernel(inst, kn.CoshPair, "rhs_a4")
    if inst.mode != "single":
        raise ParityError("rhs_a4 supports single mode")
    k, b = inst.kernel.k, inst.kernel.b
    F = inst.integrand
    a = complex(inst.a)
    c = 2 * k - 1
    total = 0.0 + 0.0j
    for n in range(1, 2 * k):
        w = -1j * a * (2j * b - 2 * n - 1 + 4 * k) * (1j * (2 * n - 1) + 2 * b) / (4 * c * c)
        total += (-1.0) ** (n + 1) * ig.eval(F, w)
    return total / (math.cosh(_PI * b) * c)


def rhs_variation(inst: TheoremInstance) -> complex:
    """Parity-split variations: the finite sum with split arguments
    i a (n+1 -/+ p)/(2p) (or the paired complex-parameter form)."""
    if inst.mode == "single":
        raise ParityError("rhs_variation is for the non-single modes")
    if isinstance(inst.kernel, kn.SinhP):
        return rhs_gen1a(inst)
    if isinstance(inst.kernel, kn.SinhPQ) and not isinstance(inst.kernel, kn.SinhCubed):
        return rhs_gen2(inst)
    if isinstance(inst.kernel, kn.CoshPi):
        return rhs_fcosh(inst)
    raise TypeError("variation modes are defined for the full-depth sinh/cosh kernels")


def _rgamma(w: float) -> float:
    """1/Gamma(w) for real w, zero at the poles."""
    r = round(w)
    if r <= 0 and abs(w - r) < 1e-12:
        return 0.0
    if w > 0.5:
        return 1.0 / gamma(w).real
    # reflection keeps large negative arguments stable
    return math.sin(_PI * w) * math.exp(log_gamma(1.0 - w).real) / _PI


def gamma_series_closed_form(alpha: float, k: int) -> float:
    """Closed form of sum (-1)^n / prod_{j<k}(alpha + j - n^2): half the Gamma
    ratio plus a k-term cosecant sum."""
    if not (isinstance(k, int) and k >= 1):
        raise ValueError("k must be a positive integer")
    if not alpha > 0:
        raise ValueError("alpha must be positive")
    for n in range(k):
        root = math.sqrt(alpha + n)
        if abs(root - round(root)) < 1e-9:
            raise ResonanceError(f"csc pole: alpha + {n} is a perfect square")
    total = 0.5 * gamma_ratio(alpha, alpha + k).real
    coef = _PI / (2 * math.factorial(k - 1))
    for n in range(k):
        root = math.sqrt(alpha + n)
        total += (
            coef * (-1.0) ** n * math.comb(k - 1, n) / (math.sin(_PI * root) * root)
        )
    return total


def _gamma_ratio_neg(a: float, b: float, n: int) -> float:
    """Gamma(a - n^2)/Gamma(b - n^2) for arbitrary n, stable for large n."""
    x, y = a - n * n, b - n * n
    if n * n <= 30:
        return (gamma(x) / gamma(y)).real
    # reflect both arguments (the (-1)^{n^2} factors cancel); both shifted
    # arguments are comfortably positive here
    return (
        math.sin(_PI * b)
        / math.sin(_PI * a)
        * math.exp(log_gamma(1.0 + n * n - b).real - log_gamma(1.0 + n * n - a).real)
    )


def gamma_series_transform(alpha: float, beta: float) -> tuple[float, float]:
    """Both sides of the Gamma-ratio series transform, for comparison.

    Left: sum (-1)^n Gamma(alpha - n^2)/Gamma(beta - n^2).
    Right: Gamma(alpha)/(2 Gamma(beta)) plus the cosecant series (finite when
    beta - alpha is a positive integer).
    """
    if not beta > alpha > 0.5:
        raise ValueError("needs beta > alpha > 1/2")
    for v in (alpha, beta):
        if abs(v - round(v)) < 1e-12:
            raise ValueError("integer alpha or beta hits Gamma poles under reflection")

    lhs = qd.sum_alternating(
        lambda n: (-1.0) ** n * _gamma_ratio_neg(alpha, beta, n),
        qd.QuadratureOptions(target_abs_tol=1e-13),
        start=0,
    ).value.real

    rhs = 0.5 * gamma_ratio(alpha, beta).real
    delta = beta - alpha
    n = 0
    while True:
        root = math.sqrt(alpha + n)
        if abs(root - round(root)) < 1e-9:
            raise ResonanceError(f"csc pole at n={n}")
        rg = _rgamma(delta - n)
        if rg != 0.0:
            term = (
                0.5
                * _PI
                * (-1.0) ** n
                / math.factorial(n)
                * rg
                / (math.sin(_PI * root) * root)
            )
            rhs += term
            if n > delta and abs(term) < 1e-14:
                break
        elif n > delta:
            break
        n += 1
        if n > 400:
            raise NonConvergenceError("cosecant series did not settle")
    return lhs, rhs

"""The closed family of admissible functions F(z) used by the identity catalog,
with exact first and second derivatives and parity metadata.

F is deliberately a closed variant family rather than user-supplied code: the
third-order-pole sums need exact derivatives, and every catalog identity is
expressible with these variants.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass

from . import numerics
from .errors import BranchCutError, ParityError, PoleError

_CUT_TOL = 1e-12


def _principal_power(w: complex, s: complex) -> complex:
    """w**s on the principal branch, arg in (-pi, pi]."""
    if w == 0:
        if s == 0:
            return 1.0 + 0.0j
        if complex(s).real > 0:
            return 0.0 + 0.0j
        raise PoleError(f"0**{s} is singular")
    return cmath.exp(complex(s) * cmath.log(w))


@dataclass(frozen=True)
class Constant:
    """F(z) = 1."""

    parity = "even"

    def _value(self, z: complex) -> complex:
        return 1.0 + 0.0j

    def _deriv1(self, z: complex) -> complex:
        return 0.0 + 0.0j

    def _deriv2(self, z: complex) -> complex:
        return 0.0 + 0.0j

    def text(self) -> str:
        return "const"


@dataclass(frozen=True)
class PowerZ:
    """F(z) = z**s, principal branch."""

    s: complex

    @property
    def parity(self) -> str:
        s = complex(self.s)
        if s.imag == 0 and s.real == round(s.real):
            return "even" if round(s.real) % 2 == 0 else "odd"
        return "neither"

    def _check(self, z: complex) -> None:
        z = complex(z)
        s = complex(self.s)
        integer_s = s.imag == 0 and s.real == round(s.real)
        if not integer_s and abs(z.imag) <= _CUT_TOL and z.real < -_CUT_TOL:
            raise BranchCutError(f"z={z} lies on the principal cut of z**{self.s}")

    def _value(self, z: complex) -> complex:
        self._check(z)
        return _principal_power(z, self.s)

    def _deriv1(self, z: complex) -> complex:
        self._check(z)
        return self.s * _principal_power(z, self.s - 1)

    def _deriv2(self, z: complex) -> complex:
        self._check(z)
        return self.s * (self.s - 1) * _principal_power(z, self.s - 2)

    def text(self) -> str:
        return f"powz(s={_fmt(self.s)})"


@dataclass(frozen=True)
class ShiftedPower:
    """F(z) = 1/(z - i b)**s; the cut runs from ib in the negative real direction."""

    s: complex
    b: float

    parity = "neither"

    def _shift(self, z: complex) -> complex:
        w = complex(z) - 1j * self.b
        if abs(w) <= _CUT_TOL:
            raise PoleError(f"z={z} at the branch point of 1/(z-ib)**s")
        if abs(w.imag) <= _CUT_TOL and w.real < 0:
            raise BranchCutError(f"z={z} on the cut of 1/(z-ib)**s")
        return w

    def _value(self, z: complex) -> complex:
        return _principal_power(self._shift(z), -self.s)

    def _deriv1(self, z: complex) -> complex:
        return -self.s * _principal_power(self._shift(z), -self.s - 1)

    def _deriv2(self, z: complex) -> complex:
        return self.s * (self.s + 1) * _principal_power(self._shift(z), -self.s - 2)

    def text(self) -> str:
        return f"shifted_pow(s={_fmt(self.s)},b={_fmt(self.b)})"


@dataclass(frozen=True)
class ExpLinear:
    """F(z) = exp(-b z)."""

    b: complex

    @property
    def parity(self) -> str:
        return "even" if self.b == 0 else "neither"

    def _value(self, z: complex) -> complex:
        return cmath.exp(-self.b * complex(z))

    def _deriv1(self, z: complex) -> complex:
        return -self.b * cmath.exp(-self.b * complex(z))

    def _deriv2(self, z: complex) -> complex:
        return self.b * self.b * cmath.exp(-self.b * complex(z))

    def text(self) -> str:
        return f"expl(b={_fmt(self.b)})"


@dataclass(frozen=True)
class PowerSin:
    """F(z) = z**s * sin(z)."""

    s: complex

    @property
    def parity(self) -> str:
        s = complex(self.s)
        if s.imag == 0 and s.real == round(s.real):
            return "odd" if round(s.real) % 2 == 0 else "even"
        return "neither"

    def _value(self, z: complex) -> complex:
        return PowerZ(self.s)._value(z) * cmath.sin(z) if z != 0 else _zero_limit(self.s)

    def _deriv1(self, z: complex) -> complex:
        p = PowerZ(self.s)
        return p._deriv1(z) * cmath.sin(z) + p._value(z) * cmath.cos(z)

    def _deriv2(self, z: complex) -> complex:
        p = PowerZ(self.s)
        return (
            p._deriv2(z) * cmath.sin(z)
            + 2 * p._deriv1(z) * cmath.cos(z)
            - p._value(z) * cmath.sin(z)
        )

    def text(self) -> str:
        return f"pow_sin(s={_fmt(self.s)})"


def _zero_limit(s: complex) -> complex:
    # z**s * sin(z) ~ z**(s+1) as z -> 0
    if complex(s).real > -1:
        return 0.0 + 0.0j
    raise PoleError(f"z**{s} sin(z) singular at 0")


@dataclass(frozen=True)
class PowerCos:
    """F(z) = z**s * cos(z)."""

    s: complex

    @property
    def parity(self) -> str:
        s = complex(self.s)
        if s.imag == 0 and s.real == round(s.real):
            return "even" if round(s.real) % 2 == 0 else "odd"
        return "neither"

    def _value(self, z: complex) -> complex:
        return PowerZ(self.s)._value(z) * cmath.cos(z)

    def _deriv1(self, z: complex) -> complex:
        p = PowerZ(self.s)
        return p._deriv1(z) * cmath.cos(z) - p._value(z) * cmath.sin(z)

    def _deriv2(self, z: complex) -> complex:
        p = PowerZ(self.s)
        return (
            p._deriv2(z) * cmath.cos(z)
            - 2 * p._deriv1(z) * cmath.sin(z)
            - p._value(z) * cmath.cos(z)
        )

    def text(self) -> str:
        return f"pow_cos(s={_fmt(self.s)})"


@dataclass(frozen=True)
class PowerExp:
    """F(z) = z**s * exp(-b z)."""

    s: complex
    b: complex

    @property
    def parity(self) -> str:
        return PowerZ(self.s).parity if self.b == 0 else "neither"

    def _value(self, z: complex) -> complex:
        return PowerZ(self.s)._value(z) * cmath.exp(-self.b * complex(z))

    def _deriv1(self, z: complex) -> complex:
        p = PowerZ(self.s)
        e = cmath.exp(-self.b * complex(z))
        return (p._deriv1(z) - self.b * p._value(z)) * e

    def _deriv2(self, z: complex) -> complex:
        p = PowerZ(self.s)
        e = cmath.exp(-self.b * complex(z))
        return (
            p._deriv2(z) - 2 * self.b * p._deriv1(z) + self.b * self.b * p._value(z)
        ) * e

    def text(self) -> str:
        return f"pow_exp(s={_fmt(self.s)},b={_fmt(self.b)})"


@dataclass(frozen=True)
class GammaRatio:
    """F(z) = Gamma(alpha + z) / Gamma(beta + z)."""

    alpha: float
    beta: float

    parity = "neither"

    def _value(self, z: complex) -> complex:
        num = self.alpha + complex(z)
        den = self.beta + complex(z)
        if numerics._near_nonpositive_integer(den):
            return 0.0 + 0.0j  # reciprocal Gamma zero
        return numerics.gamma_ratio(num, den)

    def _psi_parts(self, z: complex) -> tuple[complex, complex]:
        return (
            numerics.digamma(self.alpha + complex(z)) - numerics.digamma(self.beta + complex(z)),
            numerics.trigamma(self.alpha + complex(z)) - numerics.trigamma(self.beta + complex(z)),
        )

    def _deriv1(self, z: complex) -> complex:
        dpsi, _ = self._psi_parts(z)
        return self._value(z) * dpsi

    def _deriv2(self, z: complex) -> complex:
        dpsi, dtri = self._psi_parts(z)
        return self._value(z) * (dpsi * dpsi + dtri)

    def text(self) -> str:
        return f"gamma_ratio(alpha={_fmt(self.alpha)},beta={_fmt(self.beta)})"


@dataclass(frozen=True)
class EvenFactor:
    """Fe(z) = cosh(b z); the even building block of the variation modes."""

    b: float

    parity = "even"

    def _value(self, z: complex) -> complex:
        return cmath.cosh(self.b * complex(z))

    def _deriv1(self, z: complex) -> complex:
        return self.b * cmath.sinh(self.b * complex(z))

    def _deriv2(self, z: complex) -> complex:
        return self.b * self.b * cmath.cosh(self.b * complex(z))

    def text(self) -> str:
        return f"even_cosh(b={_fmt(self.b)})"


@dataclass(frozen=True)
class OddFactor:
    """Fo(z) = sinh(b z); the odd building block of the variation modes."""

    b: float

    parity = "odd"

    def _value(self, z: complex) -> complex:
        return cmath.sinh(self.b * complex(z))

    def _deriv1(self, z: complex) -> complex:
        return self.b * cmath.cosh(self.b * complex(z))

    def _deriv2(self, z: complex) -> complex:
        return self.b * self.b * cmath.sinh(self.b * complex(z))

    def text(self) -> str:
        return f"odd_sinh(b={_fmt(self.b)})"


IntegrandSpec = (
    Constant
    | PowerZ
    | ShiftedPower
    | ExpLinear
    | PowerSin
    | PowerCos
    | PowerExp
    | GammaRatio
    | EvenFactor
    | OddFactor
)

# Variation modes: how F replaces F(a x (x+i)) while preserving x -> -x-i symmetry.
MODES = ("single", "product_parity", "sum_even", "diff_odd", "sum_odd_squares", "cross_parity")


def eval(F: IntegrandSpec, z: complex) -> complex:  # noqa: A001 - spec operation name
    """F(z) on the principal branch."""
    return F._value(complex(z))


def deriv(F: IntegrandSpec, z: complex, order: int) -> complex:
    """Exact analytic derivative of F at z, order 1 or 2."""
    if order == 1:
        return F._deriv1(complex(z))
    if order == 2:
        return F._deriv2(complex(z))
    raise ValueError(f"derivative order must be 1 or 2, got {order}")


def _require_parity(F: IntegrandSpec, allowed: tuple[str, ...], mode: str) -> None:
    if F.parity not in allowed:
        raise ParityError(f"mode {mode!r} needs parity in {allowed}, got {F.parity!r}")


def combined_eval(F: IntegrandSpec, mode: str, a: complex, x: complex) -> complex:
    """The mode's combination of F evaluated at strip point x.

    single          F(a x (x+i))
    product_parity  F(ax) F(a(x+i))          (F even or odd)
    sum_even        F(ax) + F(a(x+i))        (F even)
    diff_odd        F(ax) - F(a(x+i))        (F odd)
    sum_odd_squares F(ax)^2 + F(a(x+i))^2    (F odd)
    cross_parity    Fo(ax) Fe(a(x+i)) - Fe(ax) Fo(a(x+i))   (F odd; Fe same b)

    Every combination is invariant under x -> -x-i.
    """
    x = complex(x)
    a = complex(a)
    if mode == "single":
        return F._value(a * x * (x + 1j))
    z1 = a * x
    z2 = a * (x + 1j)
    if mode == "product_parity":
        _require_parity(F, ("even", "odd"), mode)
        return F._value(z1) * F._value(z2)
    if mode == "sum_even":
        _require_parity(F, ("even",), mode)
        return F._value(z1) + F._value(z2)
    if mode == "diff_odd":
        _require_parity(F, ("odd",), mode)
        return F._value(z1) - F._value(z2)
    if mode == "sum_odd_squares":
        _require_parity(F, ("odd",), mode)
        return F._value(z1) ** 2 + F._value(z2) ** 2
    if mode == "cross_parity":
        if not isinstance(F, OddFactor):
            raise ParityError("cross_parity pairs odd_sinh(b) with even_cosh(b)")
        Fe = EvenFactor(F.b)
        return F._value(z1) * Fe._value(z2) - Fe._value(z1) * F._value(z2)
    raise ValueError(f"unknown mode {mode!r}")


def validate_growth(F: IntegrandSpec, mode: str, a: complex) -> tuple[bool, str]:
    """Advisory check that |combined integrand| * |x| * e^{-pi |x|} stays bounded.

    Samples both strip edges at |Re x| in {5, 10, 20, 40}; never raises.
    """
    metrics: list[float] = []
    try:
        for r in (5.0, 10.0, 20.0, 40.0):
            worst = 0.0
            for x in (r, -r, r - 1j, -r - 1j):
                g = combined_eval(F, mode, a, x)
                m = abs(g) * abs(x) * math.exp(-math.pi * abs(x.real))
                if not math.isfinite(m):
                    return False, f"non-finite combined integrand at |Re x|={r}"
                worst = max(worst, m)
            metrics.append(worst)
    except (OverflowError, PoleError, BranchCutError, ParityError, ValueError) as exc:
        return False, f"sampling failed: {exc}"
    growing = any(b > 4.0 * aa + 1e-290 for aa, b in zip(metrics, metrics[1:]))
    if growing:
        return False, f"metric grows along the strip edges: {metrics}"
    return True, f"metric decays: {metrics}"


_FORMS: dict[str, tuple[type, tuple[str, ...]]] = {
    "const": (Constant, ()),
    "powz": (PowerZ, ("s",)),
    "shifted_pow": (ShiftedPower, ("s", "b")),
    "expl": (ExpLinear, ("b",)),
    "pow_sin": (PowerSin, ("s",)),
    "pow_cos": (PowerCos, ("s",)),
    "pow_exp": (PowerExp, ("s", "b")),
    "gamma_ratio": (GammaRatio, ("alpha", "beta")),
    "even_cosh": (EvenFactor, ("b",)),
    "odd_sinh": (OddFactor, ("b",)),
}

_FORM_RE = re.compile(r"^\s*([a-z_]+)\s*(?:\(\s*(.*?)\s*\))?\s*$")


def _fmt(v: complex | float) -> str:
    v = complex(v)
    if v.imag == 0:
        return repr(v.real)
    return repr(v)


def parse_integrand(text: str) -> IntegrandSpec:
    """Parse the canonical text form, e.g. 'powz(s=1.5)' or 'expl(b=2)'."""
    m = _FORM_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse integrand form {text!r}")
    name, argstr = m.group(1), m.group(2) or ""
    if name not in _FORMS:
        raise ValueError(f"unknown integrand {name!r}; choices: {sorted(_FORMS)}")
    cls, fields = _FORMS[name]
    kwargs: dict[str, complex | float] = {}
    if argstr:
        for piece in argstr.split(","):
            key, _, val = piece.partition("=")
            key = key.strip()
            if key not in fields:
                raise ValueError(f"{name} does not take parameter {key!r}")
            kwargs[key] = complex(val) if "j" in val else float(val)
    missing = [f for f in fields if f not in kwargs]
    if missing:
        raise ValueError(f"{name} missing parameters {missing}")
    return cls(**kwargs)

"""Reciprocal hyperbolic kernels: strip-translation symmetry laws, the census of
kernel poles inside the integration strip, and per-pole residue contributions.

The residue path here is deliberately independent of the closed-form evaluators:
contributions are computed by small numerical contour integrals around each pole,
so agreement with the finite-sum module is a genuine cross-check.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass

from . import integrand as ig
from .errors import InfiniteCensusError, NearPoleError, ParityError
from .numerics import floor_int, inv_cosh_c, inv_sinh_c

_PI = math.pi
_NEAR_POLE = 1e-12


@dataclass(frozen=True)
class CoshPi:
    """K(x) = 1/cosh(pi x); strip -1 <= Im x <= 0; K(x) + K(-x-i) = 0."""

    strip_depth = 1.0
    shift = 1.0  # image is -x - i*shift

    def _denominator_zeros(self) -> list[tuple[complex, int, int]]:
        return [(-0.5j, 1, 0)]

    def _eval(self, x: complex) -> complex:
        return inv_cosh_c(_PI * x)

    def text(self) -> str:
        return "cosh_pi"


@dataclass(frozen=True)
class SinhP:
    """K(x) = 1/sinh(pi p (2x+i)), p > 0; strip depth 1."""

    p: float

    strip_depth = 1.0
    shift = 1.0

    def __post_init__(self) -> None:
        if not self.p > 0:
            raise ValueError("p must be positive")

    def _denominator_zeros(self) -> list[tuple[complex, int, int]]:
        # x_n = i (n + 1 - p) / (2p); inside for -p-1 <= n+1-p <= ... see census
        out = []
        n = floor_int(-self.p)
        while n <= floor_int(self.p - 1) + 1:
            loc = 1j * (n + 1 - self.p) / (2 * self.p)
            if -1 - 1e-15 <= loc.imag <= 1e-15:
                out.append((loc, 1, n))
            n += 1
        return out

    def _eval(self, x: complex) -> complex:
        return inv_sinh_c(_PI * self.p * (2 * x + 1j))

    def text(self) -> str:
        return f"sinh_p(p={self.p!r})"


@dataclass(frozen=True)
class SinhPQ:
    """K(x) = 1/sinh(pi (q+ir) (2x+i)); q = 0 leaves infinitely many strip poles."""

    q: float
    r: float

    strip_depth = 1.0
    shift = 1.0

    def _s(self) -> complex:
        return complex(self.q, self.r)

    def _denominator_zeros(self) -> list[tuple[complex, int, int]]:
        if self.q == 0:
            raise InfiniteCensusError("q = 0: every pole sits on the center line")
        s = self._s()
        mod2 = self.q * self.q + self.r * self.r
        out = []
        bound = mod2 / abs(self.q)
        n = -int(math.floor(bound + 2))
        while n <= int(math.floor(bound + 2)):
            if n != 0 or True:
                loc = 0.5j * (n / s - 1)
                if -1 - 1e-15 <= loc.imag <= 1e-15:
                    out.append((loc, 1, n))
            n += 1
        return out

    def _eval(self, x: complex) -> complex:
        return inv_sinh_c(_PI * self._s() * (2 * x + 1j))

    def text(self) -> str:
        return f"sinh_pq(q={self.q!r},r={self.r!r})"


@dataclass(frozen=True)
class SinhCubed(SinhPQ):
    """K(x) = 1/sinh^3(pi (q+ir) (2x+i)); third-order poles."""

    def _denominator_zeros(self) -> list[tuple[complex, int, int]]:
        return [(loc, 3, n) for (loc, _o, n) in super()._denominator_zeros()]

    def _eval(self, x: complex) -> complex:
        v = inv_sinh_c(_PI * self._s() * (2 * x + 1j))
        return v * v * v

    def text(self) -> str:
        return f"sinh_cubed(q={self.q!r},r={self.r!r})"


@dataclass(frozen=True)
class Sinh4k:
    """K(x) = 1/sinh(4 k pi x) = 1/sinh(2 k pi (2x+i)); strip depth 1/2,
    K(x) + K(-x - i/2) = 0."""

    k: int

    strip_depth = 0.5
    shift = 0.5

    def __post_init__(self) -> None:
        if not (isinstance(self.k, int) and self.k >= 1):
            raise ValueError("k must be a positive integer")

    def _denominator_zeros(self) -> list[tuple[complex, int, int]]:
        return [(-0.25j * j / self.k, 1, j) for j in range(0, 2 * self.k + 1)]

    def _eval(self, x: complex) -> complex:
        return inv_sinh_c(4 * self.k * _PI * x)

    def text(self) -> str:
        return f"sinh_4k(k={self.k!r})"


@dataclass(frozen=True)
class CoshOdd:
    """K(x) = 1/cosh(pi (2k-1) x); strip depth 1."""

    k: int

    strip_depth = 1.0
    shift = 1.0

    def __post_init__(self) -> None:
        if not (isinstance(self.k, int) and self.k >= 1):
            raise ValueError("k must be a positive integer")

    def _denominator_zeros(self) -> list[tuple[complex, int, int]]:
        c = 2 * self.k - 1
        out = []
        for j in range(0, 2 * self.k - 1):
            # index n: 0 at the central pole, +/- outward
            out.append((-1j * (j + 0.5) / c, 1, self.k - 1 - j))
        return out

    def _eval(self, x: complex) -> complex:
        return inv_cosh_c(_PI * (2 * self.k - 1) * x)

    def text(self) -> str:
        return f"cosh_odd(k={self.k!r})"


@dataclass(frozen=True)
class CoshPair:
    """K(x) = cosh(pi(2k-1)x) / (cosh^2(pi b) + sinh^2(pi(2k-1)x))
            = cosh(pi(2k-1)x) / (cosh(pi(b+(2k-1)x)) cosh(pi(b-(2k-1)x)))."""

    k: int
    b: float

    strip_depth = 1.0
    shift = 1.0

    def __post_init__(self) -> None:
        if not (isinstance(self.k, int) and self.k >= 1):
            raise ValueError("k must be a positive integer")

    def _denominator_zeros(self) -> list[tuple[complex, int, int]]:
        c = 2 * self.k - 1
        out = []
        for n in range(1, 2 * self.k):
            out.append(((self.b - 1j * (n - 0.5)) / c, 1, n))      # cosh(pi(b - cx)) zeros
            if self.b != 0:
                out.append(((-self.b - 1j * (n - 0.5)) / c, 1, -n))  # cosh(pi(b + cx)) zeros
        return out

    def _eval(self, x: complex) -> complex:
        c = 2 * self.k - 1
        w = _PI * c * x
        if abs(w.real) > 350.0:  # sinh**2 would overflow; true value underflows
            return 0.0j
        num = cmath.cosh(w)
        den = math.cosh(_PI * self.b) ** 2 + cmath.sinh(w) ** 2
        return num / den

    def text(self) -> str:
        return f"cosh_pair(k={self.k!r},b={self.b!r})"


KernelSpec = CoshPi | SinhP | SinhPQ | SinhCubed | Sinh4k | CoshOdd | CoshPair


@dataclass(frozen=True)
class PoleInfo:
    """One census entry: a kernel pole inside the strip (or on the real axis)."""

    location: complex
    order: int
    n: int
    weight: complex  # closed-form coefficient of F (single mode) at this pole
    on_contour: bool = False


def kernel_eval(K: KernelSpec, x: complex) -> complex:
    """Kernel value at x; refuses within 1e-12 of a pole."""
    x = complex(x)
    if _distance_to_poles(K, x) < _NEAR_POLE:
        raise NearPoleError(f"x={x} within {_NEAR_POLE} of a kernel pole")
    return K._eval(x)


def strip_image(K: KernelSpec, x: complex) -> complex:
    """The strip-translation partner of x under the kernel's symmetry law."""
    return -complex(x) - 1j * K.shift


def symmetry_defect(K: KernelSpec, x: complex) -> float:
    """|K(x) + K(image(x))|; zero in exact arithmetic."""
    x = complex(x)
    y = strip_image(K, x)
    if _distance_to_poles(K, x) < 1e-6 or _distance_to_poles(K, y) < 1e-6:
        raise NearPoleError("symmetry sample too close to a pole")
    return abs(K._eval(x) + K._eval(y))


def _lattice_distance(x: complex, point_of: "callable", guess: float) -> float:
    n0 = int(round(guess))
    return min(abs(x - point_of(n)) for n in range(n0 - 2, n0 + 3))


def _distance_to_poles(K: KernelSpec, x: complex) -> float:
    """Distance from x to the nearest pole of the kernel (full lattice, not just
    the strip census)."""
    x = complex(x)
    if isinstance(K, CoshPi):
        return _lattice_distance(x, lambda m: 1j * (m + 0.5), x.imag - 0.5)
    if isinstance(K, (SinhP, SinhPQ, SinhCubed)):
        s = complex(K.p, 0.0) if isinstance(K, SinhP) else complex(K.q, K.r)
        nu = -1j * s * (2 * x + 1j)  # pole lattice is nu = integer
        return _lattice_distance(x, lambda n: 0.5j * (n / s - 1), nu.real)
    if isinstance(K, Sinh4k):
        return _lattice_distance(x, lambda j: -0.25j * j / K.k, -4 * K.k * x.imag)
    if isinstance(K, CoshOdd):
        c = 2 * K.k - 1
        return _lattice_distance(x, lambda j: -1j * (j + 0.5) / c, -c * x.imag - 0.5)
    if isinstance(K, CoshPair):
        c = 2 * K.k - 1
        d1 = _lattice_distance(x, lambda n: (K.b - 1j * (n - 0.5)) / c, -c * x.imag + 0.5)
        d2 = _lattice_distance(x, lambda n: (-K.b - 1j * (n - 0.5)) / c, -c * x.imag + 0.5)
        return min(d1, d2)
    raise TypeError(f"unknown kernel {K!r}")


def poles_in_strip(K: KernelSpec) -> list[PoleInfo]:
    """Complete census of kernel poles in the strip, edge pairs merged.

    Poles strictly inside appear individually.  When a pole sits exactly on the
    real axis its strip-translation partner sits on the far edge; the pair is
    merged into a single on_contour entry carrying both principal-value halves
    (the two half-residues are equal by the symmetry law).
    """
    zeros = K._denominator_zeros()
    edge_tol = 1e-9
    interior: list[tuple[complex, int, int]] = []
    top_edge: list[tuple[complex, int, int]] = []
    for loc, order, n in zeros:
        if abs(loc.imag) <= edge_tol:
            top_edge.append((complex(loc.real, 0.0), order, n))
        elif abs(loc.imag + K.strip_depth) <= edge_tol:
            continue  # bottom-edge partner of a top-edge pole; merged there
        else:
            interior.append((loc, order, n))
    out = [
        PoleInfo(loc, order, n, _pole_weight(K, n, order), on_contour=False)
        for (loc, order, n) in interior
    ]
    out += [
        PoleInfo(loc, order, n, _pole_weight(K, n, order), on_contour=True)
        for (loc, order, n) in top_edge
    ]
    out.sort(key=lambda p: (p.location.imag, p.location.real))
    return out


def _pole_weight(K: KernelSpec, n: int, order: int) -> complex:
    """Closed-form coefficient multiplying F (single mode) in the pole's
    contribution; for order-3 poles this is the coefficient of the plain-F term."""
    if isinstance(K, CoshPi):
        return 1.0 + 0.0j
    if isinstance(K, SinhP):
        return 1j * (-1.0) ** n / (2 * K.p)
    if isinstance(K, SinhCubed):
        s = complex(K.q, K.r)
        return 1j * (-1.0) ** n / (4 * s)
    if isinstance(K, SinhPQ):
        s = complex(K.q, K.r)
        return -1j * (-1.0) ** n / (2 * s)
    if isinstance(K, Sinh4k):
        return -1j * (-1.0) ** n / (2 * K.k)
    if isinstance(K, CoshOdd):
        j = K.k - 1 - n
        return (-1.0) ** j / (2 * K.k - 1)
    if isinstance(K, CoshPair):
        fold = 2.0 if K.b == 0 else 1.0
        return fold * (-1.0) ** (abs(n) + 1) / (2 * (2 * K.k - 1) * math.cosh(_PI * K.b))
    raise TypeError(f"unknown kernel {K!r}")


def pole_argument(K: KernelSpec, pole: PoleInfo, a: complex) -> complex:
    """The value z at which F is evaluated in this pole's residue term."""
    a = complex(a)
    x = pole.location
    if isinstance(K, Sinh4k):
        return 4 * a * x * (x + 0.5j)
    return a * x * (x + 1j)


def _contour_residue(h, center: complex, radius: float) -> complex:
    """(1/2pi i) closed contour integral of h around center (trapezoid rule)."""
    best = None
    n = 64
    while n <= 4096:
        acc = 0.0 + 0.0j
        for j in range(n):
            w = cmath.exp(2j * _PI * j / n)
            acc += h(center + radius * w) * w
        val = acc * radius / n
        if best is not None and abs(val - best) <= 1e-14 * max(1.0, abs(val)):
            return val
        best = val
        n *= 2
    return best


def residue_contribution(
    K: KernelSpec,
    pole: PoleInfo,
    F: ig.IntegrandSpec,
    mode: str = "single",
    a: complex = 1.0,
) -> complex:
    """Full contribution of this census pole to the closed-form side of the
    kernel's master identity, computed by a numerical contour integral.

    Orders 1 and 3 are handled alike; on_contour entries already carry both
    principal-value halves.  For Sinh4k the identity is stated for
    int F(a x(x+i)) / sinh(2 k pi x) dx, whose residues live at 2x; the factor
    is folded in here.
    """
    a = complex(a)
    if isinstance(K, Sinh4k):
        if mode != "single":
            raise ParityError("variation modes are defined for the full-depth kernels")

        def h(u: complex) -> complex:
            return ig.eval(F, 4 * a * u * (u + 0.5j)) * K._eval(u)

        mult = -2j * _PI
    else:

        def h(u: complex) -> complex:
            return ig.combined_eval(F, mode, a, u) * K._eval(u)

        mult = -1j * _PI
    radius = _safe_radius(K, pole)
    return mult * _contour_residue(h, pole.location, radius)


def _pole_spacing(K: KernelSpec) -> float:
    """Nearest-neighbour distance within the kernel's full pole lattice."""
    if isinstance(K, CoshPi):
        return 1.0
    if isinstance(K, (SinhP, SinhPQ, SinhCubed)):
        s = K.p if isinstance(K, SinhP) else math.hypot(K.q, K.r)
        return 1.0 / (2.0 * s)
    if isinstance(K, Sinh4k):
        return 1.0 / (4.0 * K.k)
    if isinstance(K, CoshOdd):
        return 1.0 / (2 * K.k - 1)
    if isinstance(K, CoshPair):
        c = 2 * K.k - 1
        within = 1.0 / c
        across = 2.0 * abs(K.b) / c
        return within if K.b == 0 else min(within, across)
    raise TypeError(f"unknown kernel {K!r}")


def _safe_radius(K: KernelSpec, pole: PoleInfo) -> float:
    return min(0.35 * _pole_spacing(K), 0.2)


_KERNEL_FORMS: dict[str, tuple[type, tuple[str, ...], tuple[type, ...]]] = {
    "cosh_pi": (CoshPi, (), ()),
    "sinh_p": (SinhP, ("p",), (float,)),
    "sinh_pq": (SinhPQ, ("q", "r"), (float, float)),
    "sinh_cubed": (SinhCubed, ("q", "r"), (float, float)),
    "sinh_4k": (Sinh4k, ("k",), (int,)),
    "cosh_odd": (CoshOdd, ("k",), (int,)),
    "cosh_pair": (CoshPair, ("k", "b"), (int, float)),
}

_FORM_RE = re.compile(r"^\s*([a-z_0-9]+)\s*(?:\(\s*(.*?)\s*\))?\s*$")


def parse_kernel(text: str) -> KernelSpec:
    """Parse the canonical kernel form, e.g. 'sinh_p(p=0.7)' or 'cosh_pi'."""
    m = _FORM_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse kernel form {text!r}")
    name, argstr = m.group(1), m.group(2) or ""
    if name not in _KERNEL_FORMS:
        raise ValueError(f"unknown kernel {name!r}; choices: {sorted(_KERNEL_FORMS)}")
    cls, fields, types = _KERNEL_FORMS[name]
    kwargs: dict[str, float | int] = {}
    if argstr:
        for piece in argstr.split(","):
            key, _, val = piece.partition("=")
            key = key.strip()
            if key not in fields:
                raise ValueError(f"{name} does not take parameter {key!r}")
            kwargs[key] = types[fields.index(key)](float(val))
    missing = [f for f in fields if f not in kwargs]
    if missing:
        raise ValueError(f"{name} missing parameters {missing}")
    return cls(**kwargs)

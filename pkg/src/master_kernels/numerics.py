"""Scalar special functions: complex Gamma, log-Gamma, digamma, real dilogarithm,
real Riemann zeta, and the strict-floor convention used by the finite residue sums.

Everything here is pure and reentrant; no state is kept between calls.
"""

from __future__ import annotations

import cmath
import math

from .errors import DomainError, PoleError

PI = math.pi
TWO_PI = 2.0 * math.pi

# Godfrey's Lanczos coefficients, g = 607/128, 15 terms.  Relative error of the
# rational part is ~1e-15 for Re z >= 0.5; reflection covers the left half plane.
_LANCZOS_G = 607.0 / 128.0
_LANCZOS_C = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)

_POLE_TOL = 1e-12


def _near_nonpositive_integer(z: complex, tol: float = _POLE_TOL) -> bool:
    if abs(z.imag) > tol:
        return False
    r = round(z.real)
    return r <= 0 and abs(z.real - r) <= tol


def _lanczos_sum(z: complex) -> complex:
    # z has Re z >= 0.5 here; series in 1/(z+k).
    acc = _LANCZOS_C[0]
    for k in range(1, len(_LANCZOS_C)):
        acc += _LANCZOS_C[k] / (z + (k - 1))
    return acc


def gamma(z: complex) -> complex:
    """Complex Gamma function (principal values), Lanczos with reflection.

    Raises PoleError within 1e-12 of a non-positive integer.
    """
    z = complex(z)
    if _near_nonpositive_integer(z):
        raise PoleError(f"gamma pole at non-positive integer: z={z}")
    if z.real < 0.5:
        # reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
        return PI / (cmath.sin(PI * z) * gamma(1.0 - z))
    zz = z - 1.0
    t = zz + _LANCZOS_G + 0.5
    return math.sqrt(TWO_PI) * t ** (zz + 0.5) * cmath.exp(-t) * _lanczos_sum(z)


def log_gamma(z: complex) -> complex:
    """log Gamma(z), continuous on Re z > 0 (used for stable Gamma ratios)."""
    z = complex(z)
    if _near_nonpositive_integer(z):
        raise PoleError(f"log_gamma pole at non-positive integer: z={z}")
    if z.real < 0.5:
        # log reflection; fine away from the real negative axis, and on it we
        # only need the value up to the 2*pi*i ambiguity since callers take
        # exp of differences of log_gamma at nearby arguments.
        return cmath.log(PI) - cmath.log(cmath.sin(PI * z)) - log_gamma(1.0 - z)
    zz = z - 1.0
    t = zz + _LANCZOS_G + 0.5
    return 0.5 * math.log(TWO_PI) + (zz + 0.5) * cmath.log(t) - t + cmath.log(_lanczos_sum(z))


def gamma_ratio(num: complex, den: complex) -> complex:
    """Gamma(num)/Gamma(den), computed via log-Gamma when both arguments sit in
    the right half plane (avoids overflow for large arguments)."""
    num = complex(num)
    den = complex(den)
    if num.real > 0.5 and den.real > 0.5:
        return cmath.exp(log_gamma(num) - log_gamma(den))
    return gamma(num) / gamma(den)


# Bernoulli numbers B_2..B_16 for the digamma/trigamma asymptotic tails.
_BERNOULLI = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
)


def digamma(z: complex) -> complex:
    """Complex digamma psi(z): recurrence into Re z >= 10 then asymptotic series."""
    z = complex(z)
    if _near_nonpositive_integer(z):
        raise PoleError(f"digamma pole at non-positive integer: z={z}")
    if z.real < 0.5:
        # psi(1-z) - psi(z) = pi cot(pi z)
        return digamma(1.0 - z) - PI / cmath.tan(PI * z)
    acc = 0.0 + 0.0j
    while z.real < 10.0:
        acc -= 1.0 / z
        z += 1.0
    inv2 = 1.0 / (z * z)
    # asymptotic: psi(z) ~ ln z - 1/(2z) - sum B_{2n}/(2n z^{2n})
    tail = 0.0 + 0.0j
    power = inv2
    for n, b in enumerate(_BERNOULLI, start=1):
        tail += b / (2 * n) * power
        power *= inv2
    return acc + cmath.log(z) - 0.5 / z - tail


def trigamma(z: complex) -> complex:
    """Complex trigamma psi'(z)."""
    z = complex(z)
    if _near_nonpositive_integer(z):
        raise PoleError(f"trigamma pole at non-positive integer: z={z}")
    if z.real < 0.5:
        # psi'(z) + psi'(1-z) = pi^2 / sin^2(pi z)
        return (PI / cmath.sin(PI * z)) ** 2 - trigamma(1.0 - z)
    acc = 0.0 + 0.0j
    while z.real < 10.0:
        acc += 1.0 / (z * z)
        z += 1.0
    inv = 1.0 / z
    inv2 = inv * inv
    # psi'(z) ~ 1/z + 1/(2z^2) + sum B_{2n} / z^{2n+1}
    tail = inv + 0.5 * inv2
    power = inv2 * inv
    for b in _BERNOULLI:
        tail += b * power
        power *= inv2
    return acc + tail


_EXP_CAP = 700.0


def sech(x: float) -> float:
    """1/cosh(x) with graceful underflow to 0 for huge |x|."""
    return 0.0 if abs(x) > _EXP_CAP else 1.0 / math.cosh(x)


def csch(x: float) -> float:
    """1/sinh(x) with graceful underflow to 0 for huge |x| (x must be nonzero)."""
    return 0.0 if abs(x) > _EXP_CAP else 1.0 / math.sinh(x)


def expn(x: float) -> float:
    """exp(x) that saturates to 0/inf instead of raising on extreme arguments."""
    if x > _EXP_CAP:
        return math.inf
    if x < -_EXP_CAP:
        return 0.0
    return math.exp(x)


def inv_cos_c(w: complex) -> complex:
    """1/cos(w) for complex w, underflowing to 0 far from the real axis."""
    return 0.0j if abs(w.imag) > _EXP_CAP else 1.0 / cmath.cos(w)


def inv_cosh_c(w: complex) -> complex:
    """1/cosh(w) for complex w, underflowing to 0 for large |Re w|."""
    return 0.0j if abs(w.real) > _EXP_CAP else 1.0 / cmath.cosh(w)


def inv_sinh_c(w: complex) -> complex:
    """1/sinh(w) for complex w, underflowing to 0 for large |Re w| (w off the zeros)."""
    return 0.0j if abs(w.real) > _EXP_CAP else 1.0 / cmath.sinh(w)


def floor_int(x: float) -> int:
    """Greatest integer strictly less than x when x is an integer, else usual floor.

    This is the convention the residue-sum limits use: floor_int(2) == 1.
    """
    if abs(x) >= 2.0 ** 52:
        raise DomainError(f"floor_int argument too large: {x}")
    f = math.floor(x)
    return f - 1 if f == x else f


def dilog(x: float) -> float:
    """Real dilogarithm Li2(x) for x <= 1.

    Direct series for |x| <= 0.5, standard reflection/inversion identities
    elsewhere; absolute accuracy ~1e-15.
    """
    x = float(x)
    if x > 1.0:
        raise DomainError(f"dilog domain is x <= 1, got {x}")
    if x == 1.0:
        return PI * PI / 6.0
    if x == 0.0:
        return 0.0
    if x < -1.0:
        # Li2(x) = -Li2(1/x) - pi^2/6 - ln^2(-x)/2
        return -dilog(1.0 / x) - PI * PI / 6.0 - 0.5 * math.log(-x) ** 2
    if x > 0.5:
        # Li2(x) + Li2(1-x) = pi^2/6 - ln(x) ln(1-x)
        return PI * PI / 6.0 - math.log(x) * math.log(1.0 - x) - dilog(1.0 - x)
    if x < -0.5:
        # Landen: Li2(x) = -Li2(x/(x-1)) - ln^2(1-x)/2
        return -dilog(x / (x - 1.0)) - 0.5 * math.log(1.0 - x) ** 2
    total = 0.0
    term = 1.0
    for n in range(1, 200):
        term *= x
        inc = term / (n * n)
        total += inc
        if abs(inc) < 1e-18 * max(1.0, abs(total)):
            break
    return total


def zeta_real(s: float) -> float:
    """Riemann zeta for real s > 1 via Borwein's alternating-series acceleration."""
    s = float(s)
    if s <= 1.0:
        raise DomainError(f"zeta_real domain is s > 1, got {s}")
    n = 32
    # Borwein algorithm 2: d_k = n * sum_{j<=k} (n+j-1)! 4^j / ((n-j)! (2j)!)
    d = [0.0] * (n + 1)
    acc = 0.0
    for j in range(n + 1):
        acc += math.factorial(n + j - 1) * 4 ** j / (math.factorial(n - j) * math.factorial(2 * j))
        d[j] = n * acc
    eta = 0.0
    for k in range(n):
        eta += (-1) ** k * (d[k] - d[n]) / (k + 1) ** s
    eta = -eta / d[n]
    return eta / (1.0 - 2.0 ** (1.0 - s))

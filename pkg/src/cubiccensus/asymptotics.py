"""Special functions and the constants of the two-term density model.

The model for the number of cubic fields of a refined class alpha with
|disc| <= x is

    main term       C_alpha * x / (3 zeta(3))
    secondary term  K_alpha * B * x^(5/6),    B < 0,

where C_alpha and K_alpha are products of local factors over the places in
alpha's support and

    B = 3 (3 + sqrt(3)) zeta(1/3) Gamma(1/3)^3 / (10 pi^3 zeta(5/3)).

A variant of B with an extra zeta(2) in the denominator circulates in one
rendering of the formula; it is exposed behind include_zeta2 for diagnostics
but disagrees with the published count tables by a factor ~1.64, so the
default excludes it.

zeta is evaluated by two independent in-repo routines (accelerated
alternating series and Euler-Maclaurin) that are required to agree; Gamma
comes from Spouge's rational approximation with coefficients computed on the
fly, validated against the reflection identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Sequence

from cubiccensus.forms import SYMBOLS, SplittingSymbol

# ---------------------------------------------------------------------------
# Riemann zeta on the positive real axis (s != 1), two routes


def zeta_alternating(s: float, terms: int = 40) -> float:
    """zeta(s) via the eta series with Cohen-Villegas-Zagier acceleration.

    eta(s) = sum (-1)^(n-1) n^-s = (1 - 2^(1-s)) zeta(s); the accelerated sum
    converges like (3 + sqrt(8))^-terms, far below double precision at the
    default depth.  Valid for all real s > 0 except s = 1.
    """
    if s <= 0 or s == 1:
        raise ValueError(f"s={s} outside the supported domain (s > 0, s != 1)")
    n = terms
    d = (3 + math.sqrt(8.0)) ** n
    d = (d + 1 / d) / 2
    b, c, acc = -1.0, -d, 0.0
    for k in range(n):
        c = b - c
        acc += c * (k + 1) ** (-s)
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1))
    eta = acc / d
    return eta / (1 - 2 ** (1 - s))


_BERNOULLI = [
    Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
    Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6), Fraction(-3617, 510),
    Fraction(43867, 798), Fraction(-174611, 330), Fraction(854513, 138),
    Fraction(-236364091, 2730),
]


def zeta_euler_maclaurin(s: float, cutoff: int = 24, corrections: int = 10) -> float:
    """zeta(s) by Euler-Maclaurin summation; valid for real s > 0, s != 1."""
    if s <= 0 or s == 1:
        raise ValueError(f"s={s} outside the supported domain (s > 0, s != 1)")
    N = cutoff
    acc = sum(k ** (-s) for k in range(1, N))
    acc += N ** (1 - s) / (s - 1) + 0.5 * N ** (-s)
    rising = s  # s (s+1) ... (s + 2j - 2)
    power = N ** (-s - 1)
    for j in range(1, corrections + 1):
        acc += float(_BERNOULLI[j - 1]) / math.factorial(2 * j) * rising * power
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        power /= N * N
    return acc


@lru_cache(maxsize=None)
def riemann_zeta(s: float) -> float:
    """zeta(s) with the two in-repo methods cross-checked to 1e-10 relative."""
    za = zeta_alternating(s)
    zm = zeta_euler_maclaurin(s)
    if abs(za - zm) > 1e-10 * max(1.0, abs(za)):
        raise ArithmeticError(f"zeta methods disagree at s={s}: {za} vs {zm}")
    return za


# ---------------------------------------------------------------------------
# Gamma(1/3) by Spouge's approximation


def _spouge_gamma(z: float, a: int = 20) -> float:
    """Gamma(z+1) for z > -1 via Spouge's rational approximation."""
    acc = math.sqrt(2 * math.pi)
    for k in range(1, a):
        ck = ((-1) ** (k - 1)) / math.factorial(k - 1) * (a - k) ** (k - 0.5) * math.exp(a - k)
        acc += ck / (z + k)
    return (z + a) ** (z + 0.5) * math.exp(-(z + a)) * acc


@lru_cache(maxsize=None)
def gamma_one_third() -> float:
    """Gamma(1/3), validated against Gamma(1/3) Gamma(2/3) = 2 pi / sqrt(3)."""
    g13 = 3.0 * _spouge_gamma(1.0 / 3.0)  # Gamma(1/3) = 3 Gamma(4/3)
    g23 = 1.5 * _spouge_gamma(2.0 / 3.0)
    if abs(g13 * g23 * math.sqrt(3.0) / (2 * math.pi) - 1.0) > 1e-12:
        raise ArithmeticError("Gamma reflection identity check failed")
    return g13


# ---------------------------------------------------------------------------
# Local and global density factors


@dataclass(frozen=True)
class RefinedClass:
    """A finite set of local conditions: an optional sign at infinity and a
    splitting symbol at finitely many primes."""

    sign: Optional[str] = None
    local: tuple[tuple[int, SplittingSymbol], ...] = ()

    def __post_init__(self):
        if self.sign not in (None, "+", "-"):
            raise ValueError(f"sign must be '+', '-' or None, got {self.sign!r}")
        primes = [p for p, _ in self.local]
        if len(set(primes)) != len(primes):
            raise ValueError("repeated prime in local conditions")
        object.__setattr__(self, "local", tuple(sorted(self.local)))

    @classmethod
    def of(cls, sign: Optional[str] = None, local: Optional[Mapping[int, SplittingSymbol]] = None) -> "RefinedClass":
        return cls(sign=sign, local=tuple((local or {}).items()))

    def local_map(self) -> dict[int, SplittingSymbol]:
        return dict(self.local)


SIGN_MAIN_FACTOR = {"-": 0.75, "+": 0.25}
_SQRT3 = math.sqrt(3.0)
SIGN_SECONDARY_FACTOR = {"-": 3 / (3 + _SQRT3), "+": _SQRT3 / (3 + _SQRT3)}


def local_density_factors(p: int, symbol: SplittingSymbol) -> tuple[float, float]:
    """Normalized local factors (main, secondary) for a splitting condition.

    Raw columns, with t = p^(-1/3):
        main:       111: 1/6   21: 1/2            3: 1/3          121: 1/p            13: 1/p^2
        secondary:  (1+t)^3/6  (1+t)(1+t^2)/2     (1+t^3)/3       (1+t)^2/p           (1+t)/p^2
    divided by the normalizers 1 + 1/p + 1/p^2 and
    (1 - p^(-5/3))(1 + 1/p)/(1 - p^(-1/3)), so each column sums to 1.
    """
    t = p ** (-1.0 / 3.0)
    main_raw = {
        SplittingSymbol.SPLIT: 1.0 / 6.0,
        SplittingSymbol.PARTIAL: 1.0 / 2.0,
        SplittingSymbol.INERT: 1.0 / 3.0,
        SplittingSymbol.RAMIFIED_PARTIAL: 1.0 / p,
        SplittingSymbol.RAMIFIED_TOTAL: 1.0 / (p * p),
    }[symbol]
    sec_raw = {
        SplittingSymbol.SPLIT: (1 + t) ** 3 / 6.0,
        SplittingSymbol.PARTIAL: (1 + t) * (1 + t * t) / 2.0,
        SplittingSymbol.INERT: (1 + t**3) / 3.0,
        SplittingSymbol.RAMIFIED_PARTIAL: (1 + t) ** 2 / p,
        SplittingSymbol.RAMIFIED_TOTAL: (1 + t) / (p * p),
    }[symbol]
    main_norm = 1 + 1.0 / p + 1.0 / (p * p)
    sec_norm = (1 - p ** (-5.0 / 3.0)) * (1 + 1.0 / p) / (1 - t)
    return main_raw / main_norm, sec_raw / sec_norm


def density_factors(alpha: RefinedClass) -> tuple[float, float]:
    """Global (main, secondary) factors: products of local ones over the
    support, with the sign factors at infinity; empty support gives (1, 1)."""
    main = sec = 1.0
    if alpha.sign is not None:
        main *= SIGN_MAIN_FACTOR[alpha.sign]
        sec *= SIGN_SECONDARY_FACTOR[alpha.sign]
    for p, symbol in alpha.local:
        m, s = local_density_factors(p, symbol)
        main *= m
        sec *= s
    return main, sec


@lru_cache(maxsize=None)
def secondary_coefficient(include_zeta2: bool = False) -> float:
    """The (negative) coefficient B of the x^(5/6) secondary term.

    include_zeta2 adds the spurious zeta(2) in the denominator for
    diagnostics; the published count tables rule it out.
    """
    num = 3 * (3 + _SQRT3) * riemann_zeta(1.0 / 3.0) * gamma_one_third() ** 3
    den = 10 * math.pi**3 * riemann_zeta(5.0 / 3.0)
    if include_zeta2:
        den *= riemann_zeta(2.0)
    return num / den


@dataclass(frozen=True)
class AsymptoticModel:
    """Evaluators for the predicted field counts of one refined class."""

    main_factor: float
    secondary_factor: float
    secondary: float = field(default=0.0)

    def main_term(self, x: float) -> float:
        return self.main_factor * x / (3 * riemann_zeta(3.0))

    def two_term(self, x: float) -> float:
        return self.main_term(x) + self.secondary_factor * self.secondary * x ** (5.0 / 6.0)


def model_for(alpha: RefinedClass, include_zeta2: bool = False) -> AsymptoticModel:
    main, sec = density_factors(alpha)
    return AsymptoticModel(main, sec, secondary_coefficient(include_zeta2))


def predicted_main(alpha: RefinedClass, x: float) -> float:
    """Main-term prediction C_alpha * x / (3 zeta(3))."""
    return model_for(alpha).main_term(x)


def predicted_two_term(alpha: RefinedClass, x: float) -> float:
    """Two-term prediction: main term plus the x^(5/6) correction."""
    return model_for(alpha).two_term(x)


# ---------------------------------------------------------------------------
# Census-backed diagnostics


def dirichlet_partial_sum(
    records: Iterable, s: float, cutoff: int, census_xmax: Optional[int] = None
) -> float:
    """Partial sum over fields with |disc| <= cutoff of 1/(w |disc|^s), with
    weight w = 3 for cyclic fields (their automorphisms) and 1 otherwise.

    records may be FieldRecord instances or (disc, cyclic) pairs.  Pass the
    census bound as census_xmax to reject a cutoff the census cannot cover.
    """
    if census_xmax is not None and cutoff > census_xmax:
        raise ValueError(f"cutoff {cutoff} exceeds the census range {census_xmax}")
    acc = 0.0
    for rec in records:
        disc, cyclic = (rec.disc, rec.cyclic) if hasattr(rec, "disc") else rec
        if abs(disc) > cutoff:
            continue
        acc += 1.0 / ((3.0 if cyclic else 1.0) * abs(disc) ** s)
    return acc


def fit_cyclic_weight(
    nonabelian: Sequence[int],
    cyclic: Sequence[int],
    xs: Sequence[int],
) -> float:
    """Least-squares weight u minimizing
    sum_j ((g(x_j) + u f(x_j) - model(x_j)) / sqrt(x_j))^2
    where model is the two-term positive-sign prediction.

    The theoretically favored value is 1/3; the published series lands near
    0.31.
    """
    if not xs:
        raise ValueError("empty grid")
    if not (len(nonabelian) == len(cyclic) == len(xs)):
        raise ValueError("series and grid must have equal length")
    alpha = RefinedClass.of("+")
    num = den = 0.0
    for g, f, x in zip(nonabelian, cyclic, xs):
        w = 1.0 / math.sqrt(x)
        target = (predicted_two_term(alpha, x) - g) * w
        fv = f * w
        num += fv * target
        den += fv * fv
    if den == 0.0:
        return 0.0
    return num / den

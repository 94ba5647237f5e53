"""Exact integer algebra of binary cubic forms.

A binary cubic form (a, b, c, d) stands for a*x^3 + b*x^2*y + c*x*y^2 + d*y^3.
Everything here is exact integer arithmetic: discriminant, Hessian covariant,
the GL2(Z) substitution action, irreducibility over Q, maximality of the
associated cubic ring at a prime, and the splitting type of a prime in the
corresponding cubic field.

Conventions:
  * A form is primitive when gcd(a, b, c, d) = 1.
  * The Hessian of F is the quadratic form (P, Q, R) with
        P = b^2 - 3ac,  Q = bc - 9ad,  R = c^2 - 3bd,
    satisfying Q^2 - 4PR = -3 disc(F).
  * transform(F, M) substitutes (x, y) -> (m11*x + m12*y, m21*x + m22*y).
"""

from __future__ import annotations

import math
from enum import Enum
from functools import lru_cache
from typing import NamedTuple


class BinaryCubicForm(NamedTuple):
    a: int
    b: int
    c: int
    d: int


class QuadraticForm(NamedTuple):
    P: int
    Q: int
    R: int


class UnimodularMatrix(NamedTuple):
    m11: int
    m12: int
    m21: int
    m22: int

    @property
    def det(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    def inverse(self) -> "UnimodularMatrix":
        d = self.det
        if d == 1:
            return UnimodularMatrix(self.m22, -self.m12, -self.m21, self.m11)
        if d == -1:
            return UnimodularMatrix(-self.m22, self.m12, self.m21, -self.m11)
        raise ValueError(f"matrix {self} is not unimodular (det={d})")


class SplittingSymbol(str, Enum):
    """How a prime decomposes in a cubic field: residue degrees with
    ramification marked by an exponent (121 = partially ramified 1^2 1,
    13 = totally ramified 1^3)."""

    SPLIT = "111"
    PARTIAL = "21"
    INERT = "3"
    RAMIFIED_PARTIAL = "121"
    RAMIFIED_TOTAL = "13"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


SYMBOLS = (
    SplittingSymbol.SPLIT,
    SplittingSymbol.PARTIAL,
    SplittingSymbol.INERT,
    SplittingSymbol.RAMIFIED_PARTIAL,
    SplittingSymbol.RAMIFIED_TOTAL,
)

RAMIFIED_SYMBOLS = (SplittingSymbol.RAMIFIED_PARTIAL, SplittingSymbol.RAMIFIED_TOTAL)

IDENTITY = UnimodularMatrix(1, 0, 0, 1)


class FactorizationBoundError(RuntimeError):
    """Trial-division budget exhausted while looking for squared prime factors."""


def discriminant(F: BinaryCubicForm) -> int:
    a, b, c, d = F
    return 18 * a * b * c * d + b * b * c * c - 4 * a * c**3 - 4 * b**3 * d - 27 * a * a * d * d


def hessian(F: BinaryCubicForm) -> QuadraticForm:
    a, b, c, d = F
    return QuadraticForm(b * b - 3 * a * c, b * c - 9 * a * d, c * c - 3 * b * d)


def content(F: BinaryCubicForm) -> int:
    return math.gcd(math.gcd(abs(F.a), abs(F.b)), math.gcd(abs(F.c), abs(F.d)))


def is_primitive(F: BinaryCubicForm) -> bool:
    return content(F) == 1


def evaluate(F: BinaryCubicForm, x: int, y: int) -> int:
    a, b, c, d = F
    return ((a * x + b * y) * x + c * y * y) * x + d * y**3


def transform(F: BinaryCubicForm, M: UnimodularMatrix) -> BinaryCubicForm:
    """Substitution action F(M(x, y)); preserves the discriminant."""
    if abs(M.det) != 1:
        raise ValueError(f"matrix {M} is not unimodular (det={M.det})")
    a, b, c, d = F
    p, q, r, s = M
    na = evaluate(F, p, r)
    nd = evaluate(F, q, s)
    nb = 3 * a * p * p * q + b * (p * p * s + 2 * p * q * r) + c * (r * r * q + 2 * p * r * s) + 3 * d * r * r * s
    nc = 3 * a * p * q * q + b * (q * q * r + 2 * p * q * s) + c * (p * s * s + 2 * q * r * s) + 3 * d * r * s * s
    return BinaryCubicForm(na, nb, nc, nd)


def negate(F: BinaryCubicForm) -> BinaryCubicForm:
    return BinaryCubicForm(-F.a, -F.b, -F.c, -F.d)


@lru_cache(maxsize=200_000)
def _divisors(n: int) -> tuple[int, ...]:
    """Positive divisors of n > 0."""
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return tuple(small + large[::-1])


def is_irreducible(F: BinaryCubicForm) -> bool:
    """No linear factor over Q.

    A projective rational root (p:q) in lowest terms forces q | a and p | d;
    a = 0 or d = 0 give the roots (1:0), (0:1) outright.
    """
    a, b, c, d = F
    if a == 0 and b == 0 and c == 0 and d == 0:
        raise ValueError("zero form")
    if a == 0 or d == 0:
        return False
    for q in _divisors(abs(a)):
        for p in _divisors(abs(d)):
            if math.gcd(p, q) != 1:
                continue
            if ((a * p + b * q) * p + c * q * q) * p + d * q**3 == 0:
                return False
            if ((-a * p + b * q) * p - c * q * q) * p + d * q**3 == 0:
                return False
    return True


# ---------------------------------------------------------------------------
# Roots of F mod p in P^1(F_p)


def projective_roots(F: BinaryCubicForm, p: int) -> list[tuple[int, int, int]]:
    """Roots of F mod p in P^1(F_p) as (x, y, multiplicity).

    The point at infinity is represented (1, 0, m). Multiplicities are found
    by repeated deflation, which is characteristic-safe (no derivatives).
    """
    a, b, c, d = (F.a % p, F.b % p, F.c % p, F.d % p)
    if a == 0 and b == 0 and c == 0 and d == 0:
        raise ValueError(f"form {F} vanishes identically mod {p}")
    roots: list[tuple[int, int, int]] = []
    # multiplicity at (1:0) = number of leading coefficients divisible by p
    if a == 0:
        m = 1 + (b == 0) + (b == 0 and c == 0)
        roots.append((1, 0, m))
    for r in range(p):
        if (((a * r + b) * r + c) * r + d) % p != 0:
            continue
        # affine root r; multiplicity by repeated synthetic division by (t - r)
        coeffs = [a, b, c, d]
        mult = 0
        while len(coeffs) > 1:
            quot = []
            acc = 0
            for cf in coeffs[:-1]:
                acc = (acc * r + cf) % p
                quot.append(acc)
            rem = (acc * r + coeffs[-1]) % p
            if rem != 0:
                break
            mult += 1
            coeffs = quot
        roots.append((r, 1, mult))
    return roots


def splitting_type(F: BinaryCubicForm, p: int) -> SplittingSymbol:
    """Splitting symbol of p, read off from the factorization of F mod p.

    Caller must ensure F is maximal at p, otherwise the reduction mod p does
    not reflect the field.
    """
    roots = projective_roots(F, p)
    mults = sorted(r[2] for r in roots)
    if mults == [1, 1, 1]:
        return SplittingSymbol.SPLIT
    if mults == [1]:
        return SplittingSymbol.PARTIAL
    if mults == []:
        return SplittingSymbol.INERT
    if mults == [1, 2]:
        return SplittingSymbol.RAMIFIED_PARTIAL
    if mults == [3]:
        return SplittingSymbol.RAMIFIED_TOTAL
    raise ArithmeticError(f"impossible root multiplicities {mults} for {F} mod {p}")


# ---------------------------------------------------------------------------
# Maximality of the cubic ring at p


def _valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def is_maximal_at(F: BinaryCubicForm, p: int) -> bool:
    """Whether the cubic ring of F is maximal at p.

    If p^2 does not divide disc(F) the ring is maximal.  Otherwise F mod p has
    exactly one multiple root r in P^1(F_p); the ring fails to be maximal at p
    exactly when F(r~) = 0 mod p^2 for an integral lift r~ of r (the value mod
    p^2 is lift-independent because both partials of F vanish at a multiple
    root).
    """
    if not is_primitive(F):
        raise ValueError(f"form {F} is not primitive")
    D = discriminant(F)
    if D == 0:
        raise ValueError(f"form {F} is degenerate")
    if _valuation(D, p) <= 1:
        return True
    multiple = [(x, y) for x, y, m in projective_roots(F, p) if m >= 2]
    if len(multiple) != 1:
        raise ArithmeticError(f"expected one multiple root of {F} mod {p}, got {multiple}")
    x, y = multiple[0]
    return evaluate(F, x, y) % (p * p) != 0


def squared_prime_divisors(n: int, trial_bound: int = 1_000_000) -> list[int]:
    """Primes p with p^2 | n, found by trial division up to trial_bound.

    After removing every prime <= trial_bound the leftover cofactor has all
    prime factors above the bound; if it is below trial_bound^3 it has at most
    two of them, so its square part is detectable with an integer square-root
    test.  Beyond that the factorization is refused rather than silently
    wrong.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("0 has every squared divisor")
    out = []
    m = n
    f = 2
    while f <= trial_bound and f * f <= m:
        if m % f == 0:
            v = 0
            while m % f == 0:
                m //= f
                v += 1
            if v >= 2:
                out.append(f)
        f += 1 if f == 2 else 2
    if m > 1:
        if m <= trial_bound:
            pass  # m is a single prime to the first power
        elif m > trial_bound**3:
            raise FactorizationBoundError(
                f"cofactor {m} of {n} exceeds the trial-division budget {trial_bound}"
            )
        else:
            r = math.isqrt(m)
            if r * r == m:
                out.append(r)
    return out


def is_maximal(F: BinaryCubicForm, trial_bound: int = 1_000_000) -> bool:
    """Maximal at every prime whose square divides the discriminant."""
    return all(is_maximal_at(F, p) for p in squared_prime_divisors(discriminant(F), trial_bound))


def is_cyclic(F: BinaryCubicForm) -> bool:
    """Galois (cyclic) cubic <=> square discriminant."""
    D = discriminant(F)
    if D <= 0:
        return False
    r = math.isqrt(D)
    return r * r == D


# ---------------------------------------------------------------------------
# Dedekind criterion for monic rings Z[t]/(t^3 + b t^2 + c t + d):
# an independent oracle for maximality when a = 1.


def _poly_trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_mul(f: list[int], g: list[int], p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                out[i + j] = (out[i + j] + fi * gj) % p
    return _poly_trim(out)


def _poly_divmod(f: list[int], g: list[int], p: int) -> tuple[list[int], list[int]]:
    f = f[:]
    g = _poly_trim(g[:])
    if not g:
        raise ZeroDivisionError
    inv = pow(g[-1], -1, p)
    q = [0] * max(0, len(f) - len(g) + 1)
    while len(f) >= len(g) and _poly_trim(f):
        if f[-1] == 0:
            f.pop()
            continue
        k = len(f) - len(g)
        coef = f[-1] * inv % p
        q[k] = coef
        for i, gi in enumerate(g):
            f[i + k] = (f[i + k] - coef * gi) % p
        f = _poly_trim(f)
    return _poly_trim(q), f


def _poly_gcd(f: list[int], g: list[int], p: int) -> list[int]:
    f, g = _poly_trim(f[:]), _poly_trim(g[:])
    while g:
        f, g = g, _poly_divmod(f, g, p)[1]
    if f:
        inv = pow(f[-1], -1, p)
        f = [x * inv % p for x in f]
    return f


def _factor_cubic_mod_p(coeffs: list[int], p: int) -> list[tuple[list[int], int]]:
    """Factor a monic cubic over F_p into (monic irreducible, multiplicity).

    Input and factors use ascending coefficient lists.  Root scan plus
    deflation; the rootless leftover of degree 2 or 3 is irreducible.
    """
    f = [x % p for x in coeffs]  # ascending: [d, c, b, 1]
    factors: list[tuple[list[int], int]] = []
    for r in range(p):
        mult = 0
        while len(f) > 1:
            acc = 0
            for cf in reversed(f):
                acc = (acc * r + cf) % p
            if acc != 0:
                break
            # synthetic division by (t - r), descending Horner
            desc = list(reversed(f))
            quot = []
            run = 0
            for cf in desc[:-1]:
                run = (run * r + cf) % p
                quot.append(run)
            f = list(reversed(quot))
            mult += 1
        if mult:
            factors.append(([(-r) % p, 1], mult))
    if len(f) > 1:
        factors.append((f, 1))
    return factors


def dedekind_is_maximal(b: int, c: int, d: int, p: int) -> bool:
    """Dedekind's criterion for Z[t]/(t^3 + b t^2 + c t + d) at p.

    Factor f mod p, let g* lift the radical and h* lift f/rad(f); the ring is
    p-maximal iff gcd((g*h* - f)/p, g*, h*) = 1 over F_p.
    """
    f = [d % p, c % p, b % p, 1]
    factors = _factor_cubic_mod_p(f, p)
    g = [1]
    h = [1]
    for poly, mult in factors:
        g = _poly_mul(g, poly, p)
        for _ in range(mult - 1):
            h = _poly_mul(h, poly, p)
    # integral lifts with coefficients in [0, p)
    gh = [0] * (len(g) + len(h) - 1)
    for i, gi in enumerate(g):
        for j, hj in enumerate(h):
            gh[i + j] += gi * hj
    fint = [d, c, b, 1]
    while len(gh) < 4:
        gh.append(0)
    T = [(gh[i] - fint[i]) // p if (gh[i] - fint[i]) % p == 0 else None for i in range(4)]
    if any(t is None for t in T):
        raise ArithmeticError("g*h* != f mod p; factorization bug")
    Tp = [t % p for t in T]  # type: ignore[operator]
    gcd1 = _poly_gcd(Tp, g, p)
    gcd2 = _poly_gcd(gcd1, h, p)
    return gcd2 == [1]

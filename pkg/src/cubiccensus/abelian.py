"""Cyclic (abelian) cubic fields by conductor and cubic character.

A cyclic cubic field has square discriminant f^2 where the conductor f is
9^eps times a product of distinct primes = 1 mod 3.  A conductor with t prime
factors (counting 9 as the prime 3) carries 2^(t-1) fields: each factor
contributes one of two conjugate local cubic characters and global conjugation
identifies a choice with its overall conjugate.

Splitting of an unramified prime p is decided by the product of the local
cubic characters at p: trivial product means p splits completely (111),
otherwise p is inert (3).  Primes dividing the conductor are totally ramified
(13).  The symbols 21 and 121 cannot occur in a Galois cubic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from cubiccensus.forms import SplittingSymbol


def _sieve_primes(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i, v in enumerate(sieve) if v]


@lru_cache(maxsize=8)
def _conductor_primes(bound: int) -> list[int]:
    """Primes = 1 mod 3 up to bound."""
    return [p for p in _sieve_primes(bound) if p % 3 == 1]


@dataclass(frozen=True)
class CyclicFieldLabel:
    """One cyclic cubic field: a conductor plus a character choice.

    factors lists the conductor's building blocks (9 for the wild part, else
    primes = 1 mod 3); exponents[i] in {1, 2} picks one of the two conjugate
    local characters.  The first exponent is pinned to 1: conjugating every
    local choice gives the same field, so labels are counted modulo that flip.
    """

    conductor: int
    factors: tuple[int, ...]
    exponents: tuple[int, ...]

    @property
    def discriminant(self) -> int:
        return self.conductor * self.conductor


def _conductor_factorizations(bound: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    """All valid conductors f <= bound as (f, factors), factors ascending."""
    primes = _conductor_primes(bound)

    def rec(start: int, prod: int, parts: tuple[int, ...]) -> Iterator[tuple[int, tuple[int, ...]]]:
        for i in range(start, len(primes)):
            p = primes[i]
            if prod * p > bound:
                break
            yield prod * p, parts + (p,)
            yield from rec(i + 1, prod * p, parts + (p,))

    # without and with the wild factor 9
    yield from rec(0, 1, ())
    if 9 <= bound:
        yield 9, (9,)
        yield from rec(0, 9, (9,))


def conductors(bound: int) -> list[tuple[int, int]]:
    """Valid conductors f <= bound with their field counts 2^(t-1), sorted."""
    out = [(f, 1 << (len(parts) - 1)) for f, parts in _conductor_factorizations(bound)]
    out.sort()
    return out


def labels(bound: int) -> Iterator[CyclicFieldLabel]:
    """One label per cyclic cubic field with conductor <= bound."""
    for f, parts in sorted(_conductor_factorizations(bound)):
        t = len(parts)
        for bits in range(1 << (t - 1)):
            exps = (1,) + tuple(1 + ((bits >> i) & 1) for i in range(t - 1))
            yield CyclicFieldLabel(f, parts, exps)


def count_cyclic_fields(x: int) -> int:
    """Number of cyclic cubic fields with discriminant <= x."""
    if x < 1:
        return 0
    return sum(n for _, n in conductors(math.isqrt(x)))


def cyclic_count_at_disc(n: int) -> int:
    """Number of cyclic cubic fields with discriminant exactly n."""
    if n < 1:
        return 0
    f = math.isqrt(n)
    if f * f != n:
        return 0
    t = 0
    m = f
    if m % 9 == 0:
        m //= 9
        t += 1
    if m % 3 == 0:
        return 0
    # round the sieve bound up so repeated calls share one cached prime list
    for p in _conductor_primes(1 << max(f, 2).bit_length()):
        if p > f:
            break
        if m % p == 0:
            m //= p
            t += 1
            if m % p == 0:
                return 0
    if m != 1 or t == 0:
        return 0
    return 1 << (t - 1)


# ---------------------------------------------------------------------------
# Cubic characters and splitting


@lru_cache(maxsize=200_000)
def _cubic_character_class(q: int, p: int) -> int:
    """Class of p in (Z/q)* / cubes, as an element of Z/3.

    q is a conductor factor (9 or a prime = 1 mod 3) and p a prime not
    dividing q.  The class is the discrete log of p modulo cubes, with the
    generator convention fixed per q; 0 means p is a local cube.
    """
    if q == 9:
        return {1: 0, 8: 0, 2: 1, 7: 1, 4: 2, 5: 2}[p % 9]
    # find a generator of F_q* (smallest primitive root)
    g = _primitive_root(q)
    e = (q - 1) // 3
    omega = pow(g, e, q)
    t = pow(p, e, q)
    if t == 1:
        return 0
    if t == omega:
        return 1
    return 2


@lru_cache(maxsize=100_000)
def _primitive_root(q: int) -> int:
    phi = q - 1
    fac = []
    m = phi
    f = 2
    while f * f <= m:
        if m % f == 0:
            fac.append(f)
            while m % f == 0:
                m //= f
        f += 1
    if m > 1:
        fac.append(m)
    for g in range(2, q):
        if all(pow(g, phi // r, q) != 1 for r in fac):
            return g
    raise ArithmeticError(f"no primitive root mod {q}")


def splitting_in_cyclic(label: CyclicFieldLabel, p: int) -> SplittingSymbol:
    """Splitting symbol of the prime p in the labelled cyclic field."""
    f = label.conductor
    if (f % p == 0) or (p == 3 and f % 9 == 0):
        return SplittingSymbol.RAMIFIED_TOTAL
    total = 0
    for q, e in zip(label.factors, label.exponents):
        total += e * _cubic_character_class(q, p)
    return SplittingSymbol.SPLIT if total % 3 == 0 else SplittingSymbol.INERT


def count_cyclic_fields_matching(
    x: int, local: Optional[dict[int, SplittingSymbol]] = None, sign: Optional[str] = None
) -> int:
    """Cyclic cubic fields with disc <= x meeting the given local conditions.

    sign '-' or a requested symbol in {21, 121} at any prime is impossible in
    a Galois cubic and gives 0 immediately.
    """
    if sign == "-":
        return 0
    if not local:
        return count_cyclic_fields(x)
    if any(s in (SplittingSymbol.PARTIAL, SplittingSymbol.RAMIFIED_PARTIAL) for s in local.values()):
        return 0
    count = 0
    for label in labels(math.isqrt(x)):
        if all(splitting_in_cyclic(label, p) is s for p, s in local.items()):
            count += 1
    return count


def conductor_csv_lines(bound: int) -> Iterator[str]:
    """CSV dump: conductor, number of prime factors, field count, disc."""
    yield "conductor,t,n_fields,disc"
    for f, parts in sorted(_conductor_factorizations(bound)):
        t = len(parts)
        yield f"{f},{t},{1 << (t - 1)},{f * f}"


def asymptotic_density_constant(prime_bound: int = 1_000_000) -> float:
    """Diagnostic constant in the sqrt(x)-growth of the cyclic count.

    Truncated Euler product 11*sqrt(3)/(36*pi) * prod (p+2)(p-1)/(p(p+1))
    over primes = 1 mod 6 up to prime_bound, with a logarithmic tail factor.
    Reported for information only.
    """
    prod = 1.0
    for p in _conductor_primes(prime_bound):
        prod *= (p + 2) * (p - 1) / (p * (p + 1))
    # each remaining factor is 1 - 2/(p(p+1)); the log-tail is ~ -2/(B log B)
    tail = 2.0 / (prime_bound * math.log(prime_bound))
    return 11 * math.sqrt(3) / (36 * math.pi) * prod * math.exp(-tail)

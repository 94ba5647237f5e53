"""Canonical representatives of GL2(Z)-classes of binary cubic forms.

Every comparison made here is an exact integer sign test; no floating point
enters any reduction decision.  This matters because the classical source of
census off-by-ones is a boundary tie resolved inconsistently in floats.

Positive discriminant: the Hessian is positive definite.  Reduce it by Gauss
reduction to 0 <= Q <= P <= R, carry the transform to the cubic form, then
take the lexicographically smallest coefficient tuple with positive leading
coefficient over the (finite) automorphism orbit of the reduced Hessian.

Negative discriminant: the form has one real root rho and a complex pair phi,
phibar.  The positive definite covariant is x^2 - 2 Re(phi) xy + |phi|^2 y^2,
i.e. (1, -s, n) with s = 2 Re(phi), n = |phi|^2.  For an irreducible form s
and n are irrational, so the Gauss-reduced position 0 < s < 1 < n is strict
and the reduced representative with positive leading coefficient is unique.
The walk below decides every step through integer sign predicates:

    s > t   <=>  F(-b - a*t, a) > 0          (integer t, a > 0)
    s > 0   <=>  a*d - b*c > 0
    n > 1   <=>  d^2 - b*d + a*c - a^2 > 0

both derived from the sign of F at rational points against its single real
root.
"""

from __future__ import annotations

from cubiccensus.forms import (
    BinaryCubicForm,
    QuadraticForm,
    UnimodularMatrix,
    discriminant,
    evaluate,
    hessian,
    is_irreducible,
    is_primitive,
    negate,
    transform,
)

_T = lambda k: UnimodularMatrix(1, k, 0, 1)   # (x, y) -> (x + k y, y)
_SWAPNEG = UnimodularMatrix(0, -1, 1, 0)      # (x, y) -> (-y, x)
_SWAP = UnimodularMatrix(0, 1, 1, 0)          # (x, y) -> (y, x)
_FLIP = UnimodularMatrix(1, 0, 0, -1)         # (x, y) -> (x, -y)

_MAX_REDUCTION_STEPS = 3000


def _matmul(A: UnimodularMatrix, B: UnimodularMatrix) -> UnimodularMatrix:
    return UnimodularMatrix(
        A.m11 * B.m11 + A.m12 * B.m21,
        A.m11 * B.m12 + A.m12 * B.m22,
        A.m21 * B.m11 + A.m22 * B.m21,
        A.m21 * B.m12 + A.m22 * B.m22,
    )


# ---------------------------------------------------------------------------
# Positive definite integer quadratic forms (the Hessian when disc > 0)


def reduce_definite(q: QuadraticForm) -> tuple[QuadraticForm, UnimodularMatrix]:
    """Gauss-reduce a positive definite integer form to 0 <= Q <= P <= R.

    Returns the reduced form and M with q o M = reduced.
    """
    P, Q, R = q
    if P <= 0 or 4 * P * R - Q * Q <= 0:
        raise ValueError(f"form {q} is not positive definite")
    M = UnimodularMatrix(1, 0, 0, 1)
    for _ in range(_MAX_REDUCTION_STEPS):
        m = Q % (2 * P)
        Qn = m if m <= P else m - 2 * P
        k = (Qn - Q) // (2 * P)
        if k:
            R = P * k * k + Q * k + R
            Q = Qn
            M = _matmul(M, _T(k))
        if P > R:
            P, Q, R = R, -Q, P
            M = _matmul(M, _SWAPNEG)
        else:
            break
    else:
        raise ArithmeticError(f"definite reduction did not converge for {q}")
    if Q < 0:
        Q = -Q
        M = _matmul(M, _FLIP)
    return QuadraticForm(P, Q, R), M


def definite_automorphisms(q: QuadraticForm) -> list[UnimodularMatrix]:
    """All M in GL2(Z) with q o M = q, for reduced positive definite q.

    Any column of such an M is a primitive vector v with q(v) <= R, and for
    reduced q those all lie in {+-(1,0), +-(0,1), +-(1,-1)}.
    """
    P, Q, R = q
    vecs = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)]

    def val(v):
        return P * v[0] * v[0] + Q * v[0] * v[1] + R * v[1] * v[1]

    out = []
    for v in vecs:
        if val(v) != P:
            continue
        for w in vecs:
            det = v[0] * w[1] - v[1] * w[0]
            if det not in (1, -1):
                continue
            if val(w) != R:
                continue
            # middle coefficient of q o M must equal Q
            mid = 2 * P * v[0] * w[0] + Q * (v[0] * w[1] + w[0] * v[1]) + 2 * R * v[1] * w[1]
            if mid == Q:
                out.append(UnimodularMatrix(v[0], w[0], v[1], w[1]))
    return out


# ---------------------------------------------------------------------------
# Integer sign predicates for the complex covariant (disc < 0, a > 0)


def _s_exceeds(F: BinaryCubicForm, t: int) -> bool:
    """Whether 2 Re(phi) > t; requires F.a > 0 and disc(F) < 0."""
    return evaluate(F, -F.b - F.a * t, F.a) > 0


def _s_positive(F: BinaryCubicForm) -> bool:
    return F.a * F.d - F.b * F.c > 0


def _n_exceeds_one(F: BinaryCubicForm) -> bool:
    return F.d * F.d - F.b * F.d + F.a * F.c - F.a * F.a > 0


def is_reduced_complex(F: BinaryCubicForm) -> bool:
    """Strict reduced position for disc < 0: a > 0, 0 < s < 1 < n."""
    return (
        F.a > 0
        and _s_positive(F)
        and not _s_exceeds(F, 1)
        and _n_exceeds_one(F)
    )


def _floor_s(F: BinaryCubicForm) -> int:
    """floor(2 Re(phi)) by exact bisection on the predicates above."""
    a = F.a
    bound = abs(F.b) // a + max(abs(F.b), abs(F.c), abs(F.d)) // a + 3
    lo, hi = -bound, bound
    if not _s_exceeds(F, lo) or _s_exceeds(F, hi):
        raise ArithmeticError(f"covariant bound failed for {F}")
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _s_exceeds(F, mid):
            lo = mid
        else:
            hi = mid
    return lo


def reduce_complex(F: BinaryCubicForm) -> BinaryCubicForm:
    """The unique reduced representative of an irreducible form with disc < 0."""
    G = F if F.a > 0 else negate(F)
    for _ in range(_MAX_REDUCTION_STEPS):
        k = (_floor_s(G) + 1) // 2
        if k:
            G = transform(G, _T(k))
        if not _s_positive(G):
            G = transform(G, _FLIP)
        if _n_exceeds_one(G):
            if not is_reduced_complex(G):  # certify the exit state
                raise ArithmeticError(f"reduction landed on a non-reduced form {G}")
            return G
        G = transform(G, _SWAP)
        if G.a < 0:
            G = negate(G)
    raise ArithmeticError(f"complex reduction did not converge for {F}")


# ---------------------------------------------------------------------------
# Canonical class representatives


def orbit_minimum(F: BinaryCubicForm, auts: list[UnimodularMatrix]) -> BinaryCubicForm:
    """Lex-smallest positive-leading-coefficient form in the orbit F o auts."""
    best = None
    for M in auts:
        G = transform(F, M)
        if G.a < 0:
            G = negate(G)
        if best is None or G < best:
            best = G
    assert best is not None
    return best


def canonicalize(F: BinaryCubicForm) -> BinaryCubicForm:
    """Distinguished representative of the GL2(Z)-class of F.

    canonicalize(F o M) = canonicalize(F) for unimodular M, and the map is
    idempotent.  Rejects imprimitive or reducible input.
    """
    if not is_primitive(F):
        raise ValueError(f"form {F} is not primitive")
    if not is_irreducible(F):
        raise ValueError(f"form {F} is reducible")
    D = discriminant(F)
    if D > 0:
        _, M = reduce_definite(hessian(F))
        G = transform(F, M)
        return orbit_minimum(G, definite_automorphisms(hessian(G)))
    return reduce_complex(F)

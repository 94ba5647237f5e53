import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubiccensus.canonical import (
    canonicalize,
    definite_automorphisms,
    is_reduced_complex,
    orbit_minimum,
    reduce_complex,
    reduce_definite,
)
from cubiccensus.forms import (
    BinaryCubicForm,
    QuadraticForm,
    UnimodularMatrix,
    discriminant,
    hessian,
    is_irreducible,
    is_primitive,
    transform,
)


def test_reduce_definite_reaches_reduced_position():
    q = QuadraticForm(13, 41, 37)
    r, M = reduce_definite(q)
    assert 0 <= r.Q <= r.P <= r.R
    assert r.Q * r.Q - 4 * r.P * r.R == q.Q * q.Q - 4 * q.P * q.R
    # q o M = r
    P, Q, R = q
    m11, m12, m21, m22 = M
    assert P * m11 * m11 + Q * m11 * m21 + R * m21 * m21 == r.P
    assert P * m12 * m12 + Q * m12 * m22 + R * m22 * m22 == r.R


@given(st.integers(1, 40), st.integers(-80, 80), st.integers(1, 40))
@settings(max_examples=200)
def test_reduce_definite_random(P, Q, R):
    if 4 * P * R - Q * Q <= 0:
        return
    r, _ = reduce_definite(QuadraticForm(P, Q, R))
    assert 0 <= r.Q <= r.P <= r.R


def test_automorphism_group_orders():
    assert len(definite_automorphisms(QuadraticForm(2, 1, 3))) == 2   # generic
    assert len(definite_automorphisms(QuadraticForm(1, 0, 2))) == 4   # Q = 0
    assert len(definite_automorphisms(QuadraticForm(1, 0, 1))) == 8   # square
    assert len(definite_automorphisms(QuadraticForm(7, 7, 7))) == 12  # hexagonal


def test_automorphisms_fix_the_form():
    for q in (QuadraticForm(2, 1, 3), QuadraticForm(7, 7, 7), QuadraticForm(1, 0, 1)):
        P, Q, R = q
        for M in definite_automorphisms(q):
            m11, m12, m21, m22 = M
            assert P * m11 * m11 + Q * m11 * m21 + R * m21 * m21 == P
            assert P * m12 * m12 + Q * m12 * m22 + R * m22 * m22 == R


def test_canonicalize_cbrt2_class():
    F = BinaryCubicForm(1, 0, 0, -2)
    G = BinaryCubicForm(1, 3, 3, -1)  # F o (1,1;0,1)
    cF = canonicalize(F)
    assert cF == canonicalize(G)
    assert discriminant(cF) == -108
    assert is_reduced_complex(cF)


def test_canonicalize_idempotent():
    for F in (BinaryCubicForm(1, 0, 0, -2), BinaryCubicForm(1, 1, -2, -1), BinaryCubicForm(1, 0, -1, -2)):
        c = canonicalize(F)
        assert canonicalize(c) == c


def test_canonicalize_rejects_bad_input():
    with pytest.raises(ValueError):
        canonicalize(BinaryCubicForm(2, 2, 2, 2))
    with pytest.raises(ValueError):
        canonicalize(BinaryCubicForm(0, 1, 1, 1))


def test_reduce_complex_known_representative():
    # the disc -23 class (field of x^3 - x - 1)
    F = BinaryCubicForm(1, -1, 0, 1)
    assert discriminant(F) == -23
    G = reduce_complex(F)
    assert G == BinaryCubicForm(1, -1, 2, -1)
    assert discriminant(G) == -23


unimods = st.builds(
    lambda ks: _word(ks),
    st.lists(st.tuples(st.integers(-3, 3), st.booleans()), min_size=1, max_size=5),
)


def _word(ks):
    M = UnimodularMatrix(1, 0, 0, 1)
    for k, sw in ks:
        M = _mul(M, UnimodularMatrix(1, k, 0, 1))
        if sw:
            M = _mul(M, UnimodularMatrix(0, 1, 1, 0))
    return M


def _mul(A, B):
    return UnimodularMatrix(
        A.m11 * B.m11 + A.m12 * B.m21,
        A.m11 * B.m12 + A.m12 * B.m22,
        A.m21 * B.m11 + A.m22 * B.m21,
        A.m21 * B.m12 + A.m22 * B.m22,
    )


census_like_forms = st.builds(
    BinaryCubicForm,
    st.integers(-6, 6),
    st.integers(-6, 6),
    st.integers(-6, 6),
    st.integers(-6, 6),
).filter(lambda F: is_primitive(F) and discriminant(F) != 0 and is_irreducible(F))


@given(census_like_forms, unimods)
@settings(max_examples=400, deadline=None)
def test_canonicalize_is_a_class_function(F, M):
    assert canonicalize(transform(F, M)) == canonicalize(F)


@given(census_like_forms)
@settings(max_examples=200, deadline=None)
def test_canonicalize_preserves_class_data(F):
    c = canonicalize(F)
    assert discriminant(c) == discriminant(F)
    assert c.a > 0
    if discriminant(F) < 0:
        assert is_reduced_complex(c)
    else:
        P, Q, R = hessian(c)
        assert 0 <= Q <= P <= R


def test_orbit_minimum_hexagonal_cyclic_field():
    F = BinaryCubicForm(1, 1, -2, -1)
    auts = definite_automorphisms(hessian(F))
    assert len(auts) == 12
    m = orbit_minimum(F, auts)
    assert m.a > 0
    assert canonicalize(F) == m

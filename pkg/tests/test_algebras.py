import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from cubical import enveloping as env, generators as gen, moore
from cubical.free_algebra import Term, apply, gen as g, unit_term
from cubical.operad import EMPTY_A, MU, ONE, AElement

H = F(1, 2)
x, y = g("x"), g("y")


def A(*pairs):
    return AElement.of(*pairs)


# free algebra

def test_apply_examples():
    assert apply(ONE, [x]) == x
    assert apply(MU, [x, y]) == Term(MU, ("x", "y"))
    assert apply(MU, [x, unit_term()]) == Term(A((0, H)), ("x",))
    assert unit_term().arity == 0
    assert apply(MU, [unit_term(), unit_term()]) == Term(EMPTY_A, ())


# enveloping monoid

def test_p_and_q_examples():
    D = env.DPoint
    assert env.p(D(H, 1), D(H, 1)) == D(F(3, 4), 1)
    assert env.p(D(H, 1), D(F(1, 4), H)) == D(F(5, 8), F(3, 4))
    assert env.p(D(H, F(3, 4)), D(H, 1)) == D(F(5, 8), F(3, 4))
    assert env.q(D(H, 1), D(H, 1)) == A((0, F(2, 3)), (F(2, 3), 1))
    assert env.q(D(H, 1), D(F(1, 4), H)) == A((0, F(4, 5)), (F(4, 5), 1))


def test_decomposition_identity_example():
    d1, d2 = env.DPoint(H, 1), env.DPoint(F(1, 4), H)
    assert env.d_circ2(d1, d2) == env.circ(env.p(d1, d2).as_a(), 1, env.q(d1, d2))


def test_env_multiply_examples():
    e = env.EnvElement(H, 1, x)
    assert env.env_multiply(env.ENV_UNIT, e) == e
    assert env.env_multiply(e, env.ENV_UNIT) == e
    got = env.env_multiply(e, env.EnvElement(H, 1, y))
    assert got == env.EnvElement(F(3, 4), 1, apply(A((0, F(2, 3)), (F(2, 3), 1)), [x, y]))


def test_unit_label_is_erased():
    assert env.EnvElement(H, 1, unit_term()) == env.EnvElement(H, 1)


def test_f_m_and_normalization():
    a = A((F(1, 8), F(1, 4)), (H, F(3, 4)))
    pt, b = env.f_m(a)
    assert pt == env.DPoint(H, F(3, 4)) and b == A((F(1, 4), H))
    assert env.recompose(pt, b) == a
    assert env.f_m(A((F(1, 3), F(2, 3)))) == (env.DBarPoint(F(1, 3), F(2, 3)), EMPTY_A)
    assert env.normalize_ur(ONE, []) == env.ENV_UNIT
    assert env.normalize_ur(a, [x]) == env.EnvElement(H, F(3, 4), apply(A((F(1, 4), H)), [x]))


def test_chi_psi_examples():
    assert env.chi(env.ENV_UNIT) == unit_term()
    assert env.chi(env.EnvElement(H, 1, x)) == apply(A((0, H)), [x])
    assert env.psi(unit_term()) == env.EnvElement(H, 1)
    assert env.psi(x) == env.EnvElement(H, 1, x)
    assert env.chi(env.psi(x)) == apply(A((0, H)), [x])
    assert env.chi(env.psi(env.chi(env.psi(x)))).shape == A((0, F(1, 4)))


def test_homotopy_examples():
    e = env.EnvElement(F(3, 4), 1, x)
    assert env.H(1, e) == e
    assert env.H(0, e) == env.EnvElement(H, 1, x)
    assert env.H(H, e) == env.EnvElement(F(5, 8), 1, x)
    assert env.G(1, x) == x
    assert env.G(0, x) == env.chi(env.psi(x))
    assert env.G(H, x) == apply(A((0, F(3, 4))), [x])
    with pytest.raises(ValueError):
        env.H(F(3, 2), e)


def test_interchange_examples():
    ds = [env.DPoint(H, 1), env.DPoint(F(1, 4), H)]
    assert env.g_max_min(ds) == env.DPoint(H, F(3, 4))
    assert env.g_max_min(env.diag(env.DPoint(F(1, 3), F(2, 3)), 3)) == env.DPoint(F(1, 3), F(2, 3))
    assert env.h(1, ds) == ds
    assert env.h(0, ds) == env.diag(env.g_max_min(ds), 2)
    assert env.h(H, ds) == [env.DPoint(H, F(7, 8)), env.DPoint(F(3, 8), F(5, 8))]


def test_q_compatibility_literal_reading_fails():
    # Reading "the same for q" as h applied to q-breakpoints is false; the
    # breakpoint of q(a, h_t(c)_i) matches the one recovered from the p side.
    a = env.DPoint(H, 1)
    cs = [env.DPoint(H, 1), env.DPoint(F(1, 4), H)]
    lhs = env.q_break(a, env.h(0, cs)[0])
    assert lhs == F(2, 3)
    assert max(env.q_break(a, c) for c in cs) == F(4, 5)
    hp = env.h(0, [env.p(a, c) for c in cs])
    assert env.q_from_p(a, hp[0]) == lhs


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_env_associativity(seed):
    rng = random.Random(seed)
    a, b, c = (gen.random_env(rng) for _ in range(3))
    m = env.env_multiply
    assert m(m(a, b), c) == m(a, m(b, c))


# Moore and C

def test_moore_examples():
    assert moore.moore_multiply(moore.MOORE_UNIT, moore.MooreElement(2, x)) == moore.MooreElement(2, x)
    got = moore.moore_multiply(moore.MooreElement(2, x), moore.MooreElement(1, y))
    assert got == moore.MooreElement(3, apply(A((0, F(2, 3)), (F(2, 3), 1)), [x, y]))
    got = moore.moore_multiply(moore.MooreElement(1, x), moore.MooreElement(1))
    assert got == moore.MooreElement(2, apply(A((0, H)), [x]))
    assert moore.moore_chi(moore.MooreElement(2, x)) == x
    assert moore.moore_chi(moore.MOORE_UNIT) == unit_term()


def test_c_examples():
    c = moore.CElement(1, 2, 0, x)
    assert moore.c_multiply(moore.C_UNIT, c) == c
    got = moore.c_multiply(c, moore.CElement(3, 1, 2, y))
    assert got == moore.CElement(7, 2, 4, apply(A((0, F(1, 7)), (F(1, 7), 1)), [x, y]))
    assert moore.embed_moore(moore.MooreElement(2, x)) == moore.CElement(2, 1, 0, x)
    assert moore.embed_moore(moore.MOORE_UNIT) == moore.C_UNIT
    assert moore.embed_env(env.ENV_UNIT) == moore.C_UNIT
    assert moore.embed_env(env.EnvElement(H, 1, x)) == moore.CElement(H, H, 0, x)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_embeddings_are_homomorphisms(seed):
    rng = random.Random(seed)
    m1, m2 = gen.random_moore(rng), gen.random_moore(rng)
    e1, e2 = gen.random_env(rng), gen.random_env(rng)
    assert moore.embed_moore(moore.moore_multiply(m1, m2)) == moore.c_multiply(moore.embed_moore(m1), moore.embed_moore(m2))
    assert moore.embed_env(env.env_multiply(e1, e2)) == moore.c_multiply(moore.embed_env(e1), moore.embed_env(e2))

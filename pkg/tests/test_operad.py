import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from cubical import generators as gen
from cubical.operad import (
    EMPTY_A, MU, ONE, AElement, Cube, CubesConfig, GeometryError, Interval,
    affine_embed, circ, config_from_lists, gamma, include_dim, invert_permutation,
    lex_to_colex, pairing_rho, permute, rho_one, unit_config,
)

H = F(1, 2)


def cube(*pairs):
    return Cube(tuple(Interval(F(a), F(b)) for a, b in pairs))


def test_affine_embed_examples():
    assert affine_embed(cube((0, 1), (0, 1)), cube((F(1, 3), H), (0, 1))) == cube((F(1, 3), H), (0, 1))
    assert affine_embed(cube((H, 1)), cube((0, H))) == cube((H, F(3, 4)))
    assert affine_embed(cube((0, H), (0, 1)), cube((H, 1), (H, 1))) == cube((F(1, 4), H), (H, 1))


def test_gamma_and_circ_examples():
    assert gamma(MU, [MU, ONE]) == AElement.of((0, F(1, 4)), (F(1, 4), H), (H, 1))
    assert gamma(MU, [EMPTY_A, ONE]) == AElement.of((H, 1))
    assert circ(MU, 2, EMPTY_A) == AElement.of((0, H))
    assert circ(MU, 2, MU) == AElement.of((0, H), (H, F(3, 4)), (F(3, 4), 1))
    assert circ(MU, 1, ONE) == MU


def test_permute_include_and_rho():
    mu = MU.as_config()
    assert permute(mu, (1, 0)) == config_from_lists([[(H, 1)], [(0, H)]])
    assert include_dim(MU, 2) == config_from_lists([[(0, H), (0, 1)], [(H, 1), (0, 1)]])
    assert include_dim(EMPTY_A, 3) == CubesConfig.empty(3)
    quads = pairing_rho(MU, mu)
    assert set(quads.cubes) == {cube((0, H), (0, H)), cube((0, H), (H, 1)),
                                cube((H, 1), (0, H)), cube((H, 1), (H, 1))}
    assert pairing_rho(ONE, mu) == rho_one(mu)
    assert pairing_rho(MU, CubesConfig.empty(1)).arity == 0


def test_lex_to_colex_is_a_permutation():
    for l in range(1, 4):
        for m in range(1, 4):
            assert sorted(lex_to_colex(l, m)) == list(range(l * m))


def test_overlapping_cubes_rejected():
    with pytest.raises(GeometryError):
        config_from_lists([[(0, H)], [(F(1, 4), 1)]])


def test_json_round_trip():
    c = config_from_lists([[(0, F(1, 3)), (F(2, 7), 1)], [(F(1, 3), 1), (0, H)]])
    assert CubesConfig.from_json(c.to_json()) == c
    assert AElement.from_json(MU.to_json()) == MU


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 3), st.integers(1, 4))
def test_unit_and_equivariance(seed, dim, k):
    rng = random.Random(seed)
    c = gen.random_config(rng, dim, k)
    assert gamma(unit_config(dim), [c]) == c
    assert gamma(c, [unit_config(dim)] * k) == c
    s = gen.random_permutation(rng, k)
    assert permute(permute(c, s), invert_permutation(s)) == c


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32))
def test_partial_associativity(seed):
    rng = random.Random(seed)
    a, b, c = (gen.random_a(rng, rng.randint(1, 3)) for _ in range(3))
    i = rng.randint(1, a.arity)
    j = rng.randint(1, b.arity)
    assert circ(circ(a, i, b), i + j - 1, c) == circ(a, i, circ(b, j, c))

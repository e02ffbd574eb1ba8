from fractions import Fraction as F

import pytest

from cubical import paths
from cubical.data import load
from cubical.operad import MU, circ, config_from_lists, include_dim, permute

H = F(1, 2)


def test_validate_segment_examples():
    mu = MU.as_config()
    assert paths.validate_segment(mu, mu).valid
    swap = paths.validate_segment(mu, permute(mu, (1, 0)))
    assert not swap.valid and swap.gap.contains(H)
    k = paths.sigma_braid().keyframes
    assert paths.validate_segment(k[1], k[2]).valid


def test_shipped_invalid_path_gap():
    raw = load("invalid_path.json")
    with pytest.raises(paths.PathError) as err:
        paths.PLPath.from_json(raw)
    v = err.value.violation
    assert err.value.segment == 1
    assert v.time == paths.Gap(F(3, 4), F(5, 6), False, False)
    assert v.local == paths.Gap(H, F(2, 3), False, False)
    assert v.to_json()["pair"] == [1, 2]


def test_touching_is_allowed():
    # cube 2 slides down until it abuts cube 1, never overlapping
    a = config_from_lists([[(0, H), (0, H)], [(H, 1), (H, 1)]])
    b = config_from_lists([[(0, H), (0, H)], [(0, H), (H, 1)]])
    assert paths.validate_segment(a, b).valid


def test_path_json_round_trip():
    s = paths.sigma_braid()
    assert paths.PLPath.from_json(s.to_json()) == s
    assert paths.PLPath.from_json(load("sigma.json")) == s
    assert paths.PLPath.from_json(load("alpha.json")) == paths.alpha()


def test_path_operations():
    s = paths.sigma_braid()
    assert paths.reverse(paths.reverse(s)) == s
    loop = paths.concat(s, paths.permute_path(s, paths.SWAP))
    assert loop.start == loop.end == include_dim(MU, 2)
    c = paths.compose_const(paths.PLPath.constant(MU), 1, MU)
    assert c.is_constant() and c.start == circ(MU, 1, MU).as_config()
    a = paths.alpha()
    for t in (0, F(1, 3), H, 1):
        assert paths.compose_const(a, 2, MU, "inner")(t) == circ(MU.as_config(), 2, a(t))


def test_pentagon():
    loop = paths.assemble_pentagon()
    corners = loop.corners
    assert len(loop.edges) == 5 and len(set(corners)) == 5
    assert circ(MU, 1, circ(MU, 1, MU)).as_config() in corners
    cert = paths.cone_fill(loop).certify()
    assert cert == {"seams": 10, "triangles": 5}
    assert paths.stabilize_fill(loop).certify()["triangles"] > 0


def test_unit_triangle():
    loop = paths.assemble_unit_triangle()
    assert len(loop.edges) == 3
    assert MU.as_config() in loop.corners
    alpha_edge = paths.gamma_path(paths.alpha(), [paths.ONE, paths.EMPTY_A, paths.ONE])
    assert alpha_edge.start == config_from_lists([[(0, F(1, 4))], [(H, 1)]])
    paths.cone_fill(loop).certify()


def test_user_alpha_is_checked():
    with pytest.raises(paths.PathError):
        paths.assemble_pentagon(paths.sigma_braid())


def test_constant_loop_fillings():
    c = paths.PLPath.constant(MU)
    paths.cone_fill(c).certify()
    paths.stabilize_fill(c).certify()


def test_hexagon_closes():
    loop = paths.assemble_hexagon()
    assert len(loop.edges) == 6
    assert loop.as_path().is_closed()
    assert include_dim(circ(MU, 1, MU), 2) in [permute(c, p) for c in loop.corners
                                                for p in ((0, 1, 2), (1, 0, 2), (2, 0, 1), (1, 2, 0), (0, 2, 1), (2, 1, 0))]

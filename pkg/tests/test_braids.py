import pytest

from cubical import braids, paths
from cubical.braids import BraidWord

s = paths.sigma_braid()


def test_extraction_examples():
    assert braids.extract_braid(paths.PLPath.constant(s.start)).letters == ()
    assert braids.extract_braid(s).to_json() == [1]
    loop = paths.concat(s, paths.permute_path(s, paths.SWAP))
    w = braids.extract_braid(loop)
    assert w.to_json() == [1, 1]
    assert not braids.is_trivial(w)
    assert braids.permutation_image(w) == (0, 1)


def test_reversed_sigma_is_inverse():
    assert braids.extract_braid(paths.reverse(s)).to_json() == [-1]


def test_artin_examples():
    assert braids.artin_image(BraidWord(3, ())) == [(1,), (2,), (3,)]
    assert braids.artin_image(BraidWord(2, (1,))) == [(1, 2, -1), (1,)]
    assert braids.artin_image(BraidWord(2, (1, 1)))[0] == (1, 2, 1, -2, -1)
    assert braids.braid_equal(BraidWord(3, (1, 2, 1)), BraidWord(3, (2, 1, 2)))
    assert not braids.braid_equal(BraidWord(3, (1, 2)), BraidWord(3, (2, 1)))
    assert not braids.is_trivial(BraidWord(2, (1, 1)))
    assert braids.permutation_image(BraidWord(2, (1,))) == (1, 0)


def test_hexagon_word():
    w = braids.extract_braid(paths.assemble_hexagon().as_path())
    assert w.to_json() == [1, 2, -2, -1]
    assert braids.is_trivial(w)


def test_hexagon_with_sigma_in_first_slot_is_not_trivial():
    # the fifth edge must place mu into the second slot of sigma
    w = braids.extract_braid(paths.assemble_hexagon(sigma_slot=1).as_path())
    assert w.to_json() == [1, 2, 2, 1]
    assert not braids.is_trivial(w)


def test_degenerate_crossing():
    from cubical.operad import config_from_lists
    from fractions import Fraction as F
    h = F(1, 2)
    # centers share x for the whole segment
    a = config_from_lists([[(0, 1), (0, h)], [(0, 1), (h, 1)]])
    with pytest.raises(braids.DegenerateCrossing):
        braids.extract_braid(paths.PLPath.through(a, a))


def test_bad_generator():
    with pytest.raises(ValueError):
        BraidWord(2, (2,))
    with pytest.raises(ValueError):
        braids.braid_equal(BraidWord(2, ()), BraidWord(3, ()))

import math
import random

import pytest

from loopbracket.freegroup import CyclicWord, Word, primitive_root
from loopbracket.linking import (
    Ray,
    RootViolation,
    compare_rays,
    crossings_between,
    passes,
    ray_angle,
    self_crossing_count,
)
from loopbracket.surface import PANTS, TORUS1, RibbonRose, enumerate_rank2_roses
from loopbracket.verify import random_cyclic, random_rose

from oracles import christoffel_word, local_crossing_count, local_self_crossing_count


def cw(text):
    return CyclicWord(Word.parse(text).letters)


def test_ray_angles_on_torus():
    assert ray_angle(Ray((), (1,)), TORUS1, 4) == (0, 2, 2, 2)
    assert ray_angle(Ray((), (2,)), TORUS1, 4) == (1, 2, 2, 2)


def test_compare_rays():
    a = Ray((), (1,))
    b = Ray((), (2,))
    assert compare_rays(a, a, TORUS1) == 0
    assert compare_rays(a, b, TORUS1) == -1
    assert compare_rays(b, a, TORUS1) == 1
    # same infinite word written with a preperiod
    assert compare_rays(Ray((1, 2), (1, 2)), Ray((), (1, 2)), TORUS1) == 0
    assert compare_rays(Ray((1,), (2, 1)), Ray((), (1, 2)), TORUS1) == 0


def test_first_coordinate_decides_different_first_letters():
    r1, r2 = Ray((), (1, 2, 2)), Ray((), (-1, -2))
    assert ray_angle(r1, PANTS, 1) < ray_angle(r2, PANTS, 1)
    assert compare_rays(r1, r2, PANTS) == -1


def test_disjoint_boundary_curves_on_pants():
    assert crossings_between(cw("a"), cw("b"), PANTS) == []


def test_generators_cross_once_on_punctured_torus():
    cs = crossings_between(cw("a"), cw("b"), TORUS1)
    assert len(cs) == 1


def test_common_root_rejected():
    with pytest.raises(ValueError, match="same-root"):
        crossings_between(cw("ab"), cw("ab"), TORUS1)
    with pytest.raises(ValueError, match="same-root"):
        crossings_between(cw("ab"), cw("BABA"), TORUS1)


def test_shared_segment_counted_once():
    # the axes of a and ab share an edge; the naive count sees the same
    # crossing at both of its vertices
    assert len(crossings_between(cw("a"), cw("ab"), TORUS1)) == 1


@pytest.mark.parametrize(
    "word, rose, expected",
    [
        ("a", PANTS, 0),
        ("a", TORUS1, 0),
        ("ab", TORUS1, 0),
        ("aab", TORUS1, 0),  # Christoffel word of slope 1/2: simple
        ("aab", PANTS, 1),
        ("aB", PANTS, 1),
        ("ab", PANTS, 0),  # the third boundary curve
        ("abAB", TORUS1, 0),  # the boundary of the punctured torus
    ],
)
def test_self_crossing_examples(word, rose, expected):
    assert self_crossing_count(cw(word), rose) == expected


def test_self_crossing_requires_primitive():
    with pytest.raises(ValueError, match="power formula"):
        self_crossing_count(cw("abab"), TORUS1)


def test_christoffel_words_are_simple():
    for p in range(8):
        for q in range(8):
            if math.gcd(p, q) == 1:
                assert self_crossing_count(CyclicWord(christoffel_word(p, q)), TORUS1) == 0


def test_simple_pairs_on_torus_meet_homologically():
    slopes = [(p, q) for p in range(5) for q in range(5) if math.gcd(p, q) == 1]
    for (p1, q1) in slopes:
        for (p2, q2) in slopes:
            if (p1, q1) == (p2, q2):
                continue
            w1 = CyclicWord(christoffel_word(p1, q1))
            w2 = CyclicWord(christoffel_word(p2, q2))
            assert len(crossings_between(w1, w2, TORUS1)) == abs(p1 * q2 - q1 * p2)


def _random_pairs(n, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        rank = rng.randint(2, 3)
        rose = random_rose(rng, rank)
        c1 = CyclicWord(random_cyclic(rng, rank, rng.randint(1, 7)))
        c2 = CyclicWord(random_cyclic(rng, rank, rng.randint(1, 7)))
        r1, r2 = primitive_root(c1)[0], primitive_root(c2)[0]
        if r1 != r2 and r1 != r2.inverse():
            out.append((c1, c2, rose))
    return out


@pytest.mark.parametrize("c1, c2, rose", _random_pairs(300, 11))
def test_count_matches_local_oracle(c1, c2, rose):
    assert len(crossings_between(c1, c2, rose)) == local_crossing_count(rose.sigma, c1.letters, c2.letters)


def test_self_count_matches_local_oracle():
    rng = random.Random(3)
    for _ in range(400):
        rank = rng.randint(2, 3)
        rose = random_rose(rng, rank)
        t = random_cyclic(rng, rank, rng.randint(1, 9))
        c = CyclicWord(t)
        if primitive_root(c)[1] != 1:
            continue
        assert self_crossing_count(c, rose) == local_self_crossing_count(rose.sigma, c.letters)


def test_symmetry_rotation_and_reversal():
    for c1, c2, rose in _random_pairs(120, 5):
        c12 = crossings_between(c1, c2, rose)
        c21 = crossings_between(c2, c1, rose)
        assert len(c12) == len(c21)
        assert sorted(c.sign for c in c12) == sorted(-c.sign for c in c21)
        # inverting both words keeps the count
        assert len(crossings_between(c1.inverse(), c2.inverse(), rose)) == len(c12)


def test_each_pass_pair_crosses_at_most_once():
    for c1, c2, rose in _random_pairs(100, 9):
        pairs = [(c.pass1.position, c.pass2.position) for c in crossings_between(c1, c2, rose)]
        assert len(pairs) == len(set(pairs))


def test_cut_independence():
    # relabelling a <-> A moves the cut point of sigma; counts must not change
    rng = random.Random(21)
    for _ in range(80):
        rose = rng.choice(enumerate_rank2_roses())
        c1 = CyclicWord(random_cyclic(rng, 2, rng.randint(1, 6)))
        c2 = CyclicWord(random_cyclic(rng, 2, rng.randint(1, 6)))
        r1, r2 = primitive_root(c1)[0], primitive_root(c2)[0]
        if r1 == r2 or r1 == r2.inverse():
            continue
        flip = {1: -1, -1: 1, 2: 2, -2: -2}
        rose2 = RibbonRose(2, tuple(flip[x] for x in rose.sigma))
        d1 = CyclicWord(flip[x] for x in c1.letters)
        d2 = CyclicWord(flip[x] for x in c2.letters)
        assert len(crossings_between(c1, c2, rose)) == len(crossings_between(d1, d2, rose2))


def test_homology_lower_bound_on_torus():
    rng = random.Random(17)
    for _ in range(150):
        c1 = CyclicWord(random_cyclic(rng, 2, rng.randint(1, 6)))
        c2 = CyclicWord(random_cyclic(rng, 2, rng.randint(1, 6)))
        r1, r2 = primitive_root(c1)[0], primitive_root(c2)[0]
        if r1 == r2 or r1 == r2.inverse():
            continue
        h1 = (sum(1 if x == 1 else -1 for x in c1.letters if abs(x) == 1),
              sum(1 if x == 2 else -1 for x in c1.letters if abs(x) == 2))
        h2 = (sum(1 if x == 1 else -1 for x in c2.letters if abs(x) == 1),
              sum(1 if x == 2 else -1 for x in c2.letters if abs(x) == 2))
        cs = crossings_between(c1, c2, TORUS1)
        det = h1[0] * h2[1] - h1[1] * h2[0]
        assert len(cs) >= abs(det)
        # signed count is the algebraic intersection number
        assert abs(sum(c.sign for c in cs)) == abs(det)


def test_algebraic_sign_convention():
    # a then b is a positive frame on the punctured torus with sigma (a, b, A, B)
    (c,) = crossings_between(cw("a"), cw("b"), TORUS1)
    assert c.sign == 1


def test_passes_cover_word():
    ps = passes(cw("aab"))
    assert [p.position for p in ps] == [0, 1, 2]
    assert ps[0].out_ray.period == (1, 1, 2)
    assert ps[0].in_ray.period == (-2, -1, -1)


def test_root_violation_guard():
    # two lifts of the same line through the base: their rays coincide
    from loopbracket.linking import _Angles, _linking

    p = passes(cw("ab"))[0]
    with pytest.raises(RootViolation):
        _linking(p, p, _Angles(TORUS1, 8))

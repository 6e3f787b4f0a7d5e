import random

import pytest
from hypothesis import given, strategies as st

from tonal.action import ALL_TRANSLATIONS, Translation, act_on_daynumber
from tonal.permutation import (
    TRECENA_LABELS,
    Permutation,
    PermutationError,
    cayley_image,
    compose,
    cycle_decomposition,
    format_cycles,
    from_cycles,
    from_orbit_map,
    generate_cyclic,
    inverse,
    is_isomorphic_to_zn,
    order,
    parity,
    parse_cycles,
    power,
    sign,
    square_rotations,
    two_line,
)


@st.composite
def perms(draw, max_degree=12):
    n = draw(st.integers(1, max_degree))
    return Permutation(draw(st.permutations(range(n))))


@st.composite
def perm_pairs(draw):
    n = draw(st.integers(1, 10))
    return (
        Permutation(draw(st.permutations(range(n)))),
        Permutation(draw(st.permutations(range(n)))),
        Permutation(draw(st.permutations(range(n)))),
    )


def brute_order(p):
    k, current = 1, p
    while not current.is_identity():
        current, k = compose(current, p), k + 1
    return k


def test_sigma_two_line(sig):
    top, bottom = two_line(sig, TRECENA_LABELS)
    assert top == [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 0]
    assert bottom == [1, 14, 7, 0, 13, 6, 19, 12, 5, 18, 11, 4, 17, 10, 3, 16, 9, 2, 15, 8]


def test_sigma_cycles(sig):
    dec = cycle_decomposition(sig)
    assert dec.cycles == ((0, 8, 12, 4), (2, 14, 10, 18), (3, 7, 19, 15), (5, 13, 17, 9))
    assert dec.fixed_points == {1, 6, 11, 16}
    assert dec.transpositions() == 12
    # as printed: (2,14,10,18)(3,7,19,15)(4,0,8,12)(5,13,17,9)
    assert sig == parse_cycles("(2,14,10,18)(3,7,19,15)(4,0,8,12)(5,13,17,9)", 20)


def test_sigma_order_parity(sig):
    assert order(sig) == 4
    assert parity(sig) == "even"
    assert parity(sig ** 2) == "even"


def test_sigma_powers(sig):
    assert power(sig, 0).is_identity()
    assert power(sig, 4).is_identity()
    assert power(sig, -1) == sig ** 3 == inverse(sig)
    assert compose(sig, sig) == parse_cycles("(2,10)(14,18)(3,19)(7,15)(4,8)(0,12)(5,17)(13,9)", 20)
    assert sig ** 3 == parse_cycles("(2,18,10,14)(3,15,19,7)(4,12,8,0)(5,9,17,13)", 20)
    assert compose(sig, sig ** 3).is_identity()
    assert inverse(sig ** 2) == sig ** 2
    assert cycle_decomposition(sig ** 2).cycle_type == [2] * 8


def test_sigma_cyclic_subgroup(sig):
    group = generate_cyclic(sig)
    assert group.order == 4
    assert group.elements[0].is_identity() and group.elements[1] == sig
    ok, witness = is_isomorphic_to_zn(group, 4)
    assert ok and witness[3] == inverse(sig)
    assert is_isomorphic_to_zn(group, 5) == (False, None)
    assert generate_cyclic(sig ** 2).order == 2


def test_identity_subgroup():
    group = generate_cyclic(Permutation.identity(20))
    assert group.order == 1
    assert is_isomorphic_to_zn(group, 1)[0]


def test_rotation_group_correspondence(sig):
    group = generate_cyclic(sig)
    _, witness = is_isomorphic_to_zn(group, 4)
    rot = square_rotations()
    to_rot = {witness[k]: rot.elements[k] for k in range(4)}
    for a in range(4):
        for b in range(4):
            g, h = witness[a], witness[b]
            assert to_rot[g * h] == to_rot[g] * to_rot[h]
            assert g * h == witness[(a + b) % 4]


def test_from_orbit_map_identity():
    assert from_orbit_map(3, [(0, 0), (1, 1), (2, 2)]).is_identity()


@pytest.mark.parametrize(
    "pairs, message",
    [
        ([(0, 1), (0, 2), (2, 0)], "duplicate point"),
        ([(0, 1), (1, 0)], "missing"),
        ([(0, 1), (1, 1), (2, 0)], "image 1"),
        ([(0, 3), (1, 1), (2, 2)], "outside"),
    ],
)
def test_from_orbit_map_validation(pairs, message):
    with pytest.raises(PermutationError, match=message):
        from_orbit_map(3, pairs)


def test_from_orbit_map_rejects_repeated_image_in_sigma_row():
    bottom = [1, 14, 7, 0, 13, 6, 19, 12, 5, 18, 11, 4, 17, 10, 3, 16, 9, 2, 15, 7]
    with pytest.raises(PermutationError):
        from_orbit_map(20, zip(TRECENA_LABELS, bottom))


def test_constructor_rejects_non_bijection():
    with pytest.raises(PermutationError):
        Permutation([0, 0, 1])


def test_compose_degree_mismatch():
    with pytest.raises(PermutationError):
        compose(Permutation.identity(3), Permutation.identity(4))


def test_compose_is_function_composition():
    p = Permutation([1, 2, 0])
    q = Permutation([0, 2, 1])
    assert compose(p, q)(1) == p(q(1))
    assert all(compose(p, q)(i) == p(q(i)) for i in range(3))


def test_cycle_format():
    assert format_cycles(Permutation.identity(5)) == "id"
    assert format_cycles(Permutation([1, 0, 2])) == "(0,1)"
    assert parity(Permutation([1, 0, 2])) == "odd"
    assert parse_cycles("id", 4).is_identity()
    with pytest.raises(PermutationError):
        parse_cycles("(0,1)x", 3)
    with pytest.raises(PermutationError):
        from_cycles(4, [(0, 1), (1, 2)])


@given(perm_pairs())
def test_group_axioms(triple):
    p, q, r = triple
    e = Permutation.identity(p.degree)
    assert compose(compose(p, q), r) == compose(p, compose(q, r))
    assert compose(p, e) == p == compose(e, p)
    assert compose(p, inverse(p)) == e == compose(inverse(p), p)


@given(perm_pairs())
def test_parity_is_homomorphism(triple):
    p, q, _ = triple
    assert sign(compose(p, q)) == sign(p) * sign(q)


@given(perms())
def test_order_is_minimal_power(p):
    k = order(p)
    assert k == brute_order(p)
    assert power(p, k).is_identity()
    assert all(not power(p, j).is_identity() for j in range(1, k))


@given(perms(), st.integers(-30, 30), st.integers(-30, 30))
def test_power_laws(p, a, b):
    assert compose(power(p, a), power(p, b)) == power(p, a + b)


@given(perms())
def test_cycle_reconstitution(p):
    dec = cycle_decomposition(p)
    assert from_cycles(p.degree, dec.cycles) == p
    assert parse_cycles(format_cycles(p), p.degree) == p
    points = sorted([x for c in dec.cycles for x in c] + list(dec.fixed_points))
    assert points == list(range(p.degree))
    assert all(c[0] == min(c) for c in dec.cycles)
    assert [c[0] for c in dec.cycles] == sorted(c[0] for c in dec.cycles)
    pairs = [(c[i], c[(i + 1) % len(c)]) for c in dec.cycles for i in range(len(c))]
    pairs += [(x, x) for x in dec.fixed_points]
    assert from_orbit_map(p.degree, pairs) == p


def test_order_brute_force_degree_20_corpus(sig):
    rng = random.Random(7)
    corpus = [sig ** k for k in range(4)]
    for _ in range(200):
        images = list(range(20))
        rng.shuffle(images)
        corpus.append(Permutation(images))
    for p in corpus:
        assert order(p) == brute_order(p)


def test_cayley_images():
    assert cayley_image(Translation(0, 0)).is_identity()
    gen = cayley_image(Translation(1, 1))
    assert cycle_decomposition(gen).cycles == (tuple(range(260)),)
    assert order(gen) == 260
    thirteen = cayley_image(Translation(0, 13))
    assert order(thirteen) == brute_order(thirteen) == 20


def test_cayley_embedding_homomorphism_exhaustive():
    images = {t: cayley_image(t).images for t in ALL_TRANSLATIONS}
    assert len(set(images.values())) == 260
    for t1 in ALL_TRANSLATIONS:
        p1 = images[t1]
        for t2 in ALL_TRANSLATIONS:
            assert tuple(p1[j] for j in images[t2]) == images[t1 + t2]


def test_cayley_matches_action():
    t = Translation(4, 4)
    p = cayley_image(t)
    assert all(p(x) == act_on_daynumber(t, x) for x in range(260))

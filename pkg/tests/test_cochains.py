import random

import pytest

from wittcoh.cochains import (
    Cochain,
    boundary,
    coboundary,
    generator,
    generator_action,
    graded_slice,
    max_length,
    pairing,
    wedge,
)


def c(*monos):
    return Cochain.from_terms(monos)


def random_homogeneous(rng, n, q, k=1):
    basis = graded_slice(k, n, q).basis
    if not basis:
        return Cochain.zero()
    picks = rng.sample(basis, rng.randint(1, min(4, len(basis))))
    return Cochain.from_terms(picks)


# --- wedge -------------------------------------------------------------------


def test_wedge_merges_sorted():
    assert wedge(generator(1), generator(2)) == c((1, 2))
    assert wedge(generator(2), generator(1)) == c((1, 2))


def test_wedge_repeated_index_vanishes():
    assert not wedge(generator(1), generator(1))


def test_char2_square_of_one_cochain():
    v = generator(1) + generator(2)
    assert not wedge(v, v)


def test_char2_square_of_two_cochain():
    w = c((1, 4), (2, 3))
    assert not wedge(w, w)


def test_wedge_associative_commutative():
    rng = random.Random(3)
    for _ in range(50):
        a = random_homogeneous(rng, rng.randint(2, 9), rng.randint(1, 2))
        b = random_homogeneous(rng, rng.randint(2, 9), rng.randint(1, 2))
        d = random_homogeneous(rng, rng.randint(2, 9), 1)
        assert wedge(a, b) == wedge(b, a)
        assert wedge(wedge(a, b), d) == wedge(a, wedge(b, d))


# --- coboundary ----------------------------------------------------------------


def test_coboundary_of_odd_generator():
    assert coboundary(generator(5), 1) == c((1, 4), (2, 3))


def test_coboundary_of_even_generator_vanishes():
    assert not coboundary(generator(4), 1)


def test_coboundary_of_pair():
    assert not coboundary(c((1, 2)), 1)
    assert coboundary(c((3,)), 1) == c((1, 2))


def test_coboundary_minimal_index_variants():
    assert coboundary(generator(3), 0) == c((0, 3), (1, 2))
    assert coboundary(generator(3), -1) == c((-1, 4), (0, 3), (1, 2))
    assert coboundary(generator(-1), -1) == c((-1, 0))


def test_coboundary_rejects_low_index():
    with pytest.raises(ValueError):
        coboundary(c((0, 3)), 1)


def test_coboundary_is_derivation():
    rng = random.Random(9)
    for _ in range(40):
        a = random_homogeneous(rng, rng.randint(2, 10), rng.randint(1, 2))
        b = random_homogeneous(rng, rng.randint(2, 10), rng.randint(1, 2))
        lhs = coboundary(wedge(a, b), 1)
        rhs = wedge(coboundary(a, 1), b) + wedge(a, coboundary(b, 1))
        assert lhs == rhs


# --- boundary -----------------------------------------------------------------


def test_boundary_examples():
    assert boundary(c((1, 2)), 1) == c((3,))
    assert not boundary(c((2, 4)), 1)


def test_boundary_rejects_low_index():
    with pytest.raises(ValueError):
        boundary(c((-1, 2)), 0)


def test_boundary_squares_to_zero():
    for n in range(2, 16):
        for q in range(1, max_length(1, n) + 1):
            for mono in graded_slice(1, n, q).basis:
                assert not boundary(boundary(Cochain.from_terms([mono]), 1), 1)


def test_boundary_duality_with_coboundary():
    for k in (-1, 0, 1):
        for n in range(k, 17):
            for q in range(2, max_length(k, n) + 1):
                src = graded_slice(k, n, q)
                dst = graded_slice(k, n, q - 1)
                for x in src.basis:
                    dx = boundary(Cochain.from_terms([x]), k)
                    for y in dst.basis:
                        dy = coboundary(Cochain.from_terms([y]), k)
                        assert pairing(dx, Cochain.from_terms([y])) == pairing(
                            Cochain.from_terms([x]), dy
                        )


# --- generator action ----------------------------------------------------------


def test_action_examples():
    assert not generator_action(-1, generator(2), 1)
    assert generator_action(-1, generator(3), 1) == c((4,))


def test_action_raising_identity():
    eps = c((3, 5), (1, 7))
    assert generator_action(-1, eps, 1) == coboundary(generator(9), 1)


def test_action_below_minimum_rejected():
    with pytest.raises(ValueError):
        generator_action(2, generator(1), 1)  # 1 - 2 = -1 < 1


def test_action_commutes_with_coboundary():
    for n in range(1, 15):
        for q in range(1, max_length(1, n) + 1):
            for mono in graded_slice(1, n, q).basis:
                v = Cochain.from_terms([mono])
                assert generator_action(-1, coboundary(v, 1), 1) == coboundary(
                    generator_action(-1, v, 1), 1
                )


# --- slices ---------------------------------------------------------------------


def test_slice_basis_and_empty_target():
    sl = graded_slice(1, 5, 2)
    assert sl.basis == ((1, 4), (2, 3))
    assert sl.delta.nrows == 0 and sl.delta.ncols == 2


def test_slice_degree3():
    sl = graded_slice(1, 3, 1)
    assert sl.basis == ((3,),)
    target = graded_slice(1, 3, 2)
    assert target.basis == ((1, 2),)
    assert sl.delta.column(0) == 1  # e3 -> e1^e2


def test_slice_empty():
    assert graded_slice(2, 4, 2).dim == 0


def test_slice_coords_roundtrip():
    sl = graded_slice(1, 12, 2)
    v = sl.coords(c((1, 11), (5, 7)))
    assert sl.cochain(v) == c((1, 11), (5, 7))
    with pytest.raises(ValueError):
        sl.coords(c((2, 3)))


def test_coboundary_squares_to_zero_matrixwise():
    for k in (-1, 0, 1, 2):
        for n in range(k, 21):
            for q in range(1, max_length(k, n) + 1):
                sl = graded_slice(k, n, q)
                nxt = graded_slice(k, n, q + 1)
                assert (nxt.delta @ sl.delta).is_zero()


def test_coboundary_squares_to_zero_deep():
    for n in range(1, 51):
        for q in range(1, max_length(1, n) + 1):
            sl = graded_slice(1, n, q)
            nxt = graded_slice(1, n, q + 1)
            assert (nxt.delta @ sl.delta).is_zero()


def test_max_length():
    assert max_length(1, 5) == 2
    assert max_length(1, 6) == 3
    assert max_length(0, 0) == 1
    assert max_length(-1, -1) == 2
    assert max_length(2, 1) == 0


def test_homogeneity_bookkeeping():
    v = c((1, 4), (2, 3))
    assert v.is_homogeneous() and v.degree == 5 and v.length == 2
    mixed = c((1,), (1, 2))
    assert not mixed.is_homogeneous()
    with pytest.raises(ValueError):
        _ = mixed.degree
    with pytest.raises(ValueError):
        _ = Cochain.zero().degree

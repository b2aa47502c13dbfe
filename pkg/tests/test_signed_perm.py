import itertools
import random
from collections import Counter
from math import factorial

import pytest

from radixcode.errors import DimensionMismatch, NotASignedPermutation
from radixcode.signed_perm import (
    Root,
    RootKind,
    act_on_root,
    all_roots,
    compose,
    from_images,
    identity,
    inverse,
    parse_window,
    phi_i,
    positive_roots,
)
from radixcode.verify import enumerate_group


def matrix(window):
    """Signed permutation matrix: column i is the image of e_i."""
    n = len(window)
    m = [[0] * n for _ in range(n)]
    for i, img in enumerate(window):
        m[abs(img) - 1][i] = 1 if img > 0 else -1
    return m


def matmul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def window_of(m):
    n = len(m)
    out = []
    for j in range(n):
        (i, v), = [(i, m[i][j]) for i in range(n) if m[i][j]]
        out.append((i + 1) * v)
    return tuple(out)


def apply(m, vec):
    return [sum(m[i][k] * vec[k] for k in range(len(vec))) for i in range(len(m))]


def root_vec(root, n):
    v = [0] * n
    for k, c in root.vector().items():
        v[k - 1] = c
    return v


def test_from_images_examples():
    assert from_images([-2, -1]).images == (-2, -1)
    assert from_images([1, 2, 3]) == identity(3)


@pytest.mark.parametrize("bad", [[1, 1], [0, 1], [1, 3], [], [2, -2]])
def test_from_images_rejects(bad):
    with pytest.raises(NotASignedPermutation):
        from_images(bad)


def test_parse_window_forms():
    assert parse_window("-2,-1") == from_images([-2, -1])
    assert parse_window("[-2, -1]") == from_images([-2, -1])
    with pytest.raises(NotASignedPermutation):
        parse_window("a,b")
    with pytest.raises(NotASignedPermutation):
        parse_window("[1.5]")


def test_call_with_signed_index():
    pi = from_images([-2, -1])
    assert pi(1) == -2 and pi(-1) == 2 and pi(2) == -1
    with pytest.raises(IndexError):
        pi(3)


def test_compose_examples():
    pi5 = from_images([-2, -1])
    assert inverse(pi5) == pi5
    assert compose(identity(2), pi5) == pi5
    assert compose(from_images([2, 1]), from_images([-1, 2])) == from_images([-2, 1])
    assert from_images([2, 1]) * from_images([-1, 2]) == from_images([-2, 1])


def test_compose_matches_matrix_product():
    for n in (1, 2, 3):
        elements = list(enumerate_group(n))
        for a, b in itertools.product(elements, repeat=2):
            assert compose(a, b).images == window_of(matmul(matrix(a.images), matrix(b.images)))


def test_inverse_matches_matrix_transpose():
    for pi in enumerate_group(3):
        m = matrix(pi.images)
        transpose = [list(row) for row in zip(*m)]
        assert inverse(pi).images == window_of(transpose)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        compose(identity(2), identity(3))


def test_group_order():
    for n in range(1, 6):
        elements = list(enumerate_group(n))
        assert len(elements) == len(set(elements)) == 2**n * factorial(n)


def test_group_laws_exhaustive_pairs():
    for n in range(1, 5):
        elements = list(enumerate_group(n))
        e = identity(n)
        for pi in elements:
            assert compose(pi, inverse(pi)) == e == compose(inverse(pi), pi)
            assert compose(e, pi) == pi == compose(pi, e)
        if n <= 3:
            for a, b in itertools.product(elements, repeat=2):
                assert inverse(compose(a, b)) == compose(inverse(b), inverse(a))
        rng = random.Random(n)
        for _ in range(300):
            a, b, c = (rng.choice(elements) for _ in range(3))
            assert compose(compose(a, b), c) == compose(a, compose(b, c))


def test_positive_roots_b2():
    roots = positive_roots(2)
    assert set(roots) == {
        Root(RootKind.SINGLE, 1),
        Root(RootKind.SINGLE, 2),
        Root(RootKind.SUM, 1, 2),
        Root(RootKind.DIFF, 1, 2),
    }
    assert len(roots) == 4


def test_phi_i_sizes():
    assert phi_i(2, 2) == [Root(RootKind.SINGLE, 2)]
    assert len(phi_i(4, 2)) == 5
    for n in range(1, 8):
        assert len(positive_roots(n)) == n * n
        slices = [phi_i(n, i) for i in range(1, n + 1)]
        assert [len(s) for s in slices] == [2 * (n - i) + 1 for i in range(1, n + 1)]
        assert sum(slices, []) == positive_roots(n)
        assert len(set(positive_roots(n))) == n * n
    with pytest.raises(IndexError):
        phi_i(3, 4)


def test_root_canonical_form():
    assert Root.from_vector({1: -1, 2: 1}) == -Root(RootKind.DIFF, 1, 2)
    assert Root.from_vector({2: -1, 1: -1}) == Root(RootKind.SUM, 1, 2, -1)
    assert Root.from_vector({3: 1}).positive
    with pytest.raises(ValueError):
        Root.from_vector({1: 2})
    with pytest.raises(ValueError):
        Root(RootKind.SUM, 2, 1)
    assert str(-Root(RootKind.DIFF, 1, 2)) == "-(e1-e2)"


def test_act_on_root_examples():
    pi5 = from_images([-2, -1])
    assert act_on_root(pi5, Root(RootKind.SINGLE, 1)) == Root(RootKind.SINGLE, 2, None, -1)
    swap = from_images([2, 1])
    assert act_on_root(swap, Root(RootKind.DIFF, 1, 2)) == -Root(RootKind.DIFF, 1, 2)
    for v in all_roots(3):
        assert act_on_root(identity(3), v) == v


def test_act_on_root_matches_matrix():
    for n in (2, 3):
        for pi in enumerate_group(n):
            m = matrix(pi.images)
            for v in all_roots(n):
                assert root_vec(act_on_root(pi, v), n) == apply(m, root_vec(v, n))


def test_action_permutes_roots():
    for n in range(1, 5):
        roots = Counter(all_roots(n))
        for pi in enumerate_group(n):
            assert Counter(act_on_root(pi, v) for v in roots) == roots


def test_two_row_display():
    assert from_images([-2, -1]).two_row().split("\n")[1].split() == ["-2", "-1"]

"""Tableau enumerators against printed examples and brute-force filters."""

import itertools

import pytest

from ospchar.symfun import Partition, partitions_up_to, skew_schur_jt, subpartitions
from ospchar.characters import standard_x, standard_xy
from ospchar.algebra import embed
from ospchar import tableaux
from ospchar.tableaux import (
    is_odd_symplectic,
    is_orthosymplectic,
    is_semistandard,
    is_supertableau,
    is_symplectic,
    odd_symplectic_grids,
    odd_symplectic_tableaux,
    odd_symplectic_weight_sum,
    orthosymplectic_grids,
    orthosymplectic_weight_sum,
    ssyt_grids,
    ssyt_weight_sum,
    super_grids,
    super_weight_sum,
    symplectic_grids,
    symplectic_tableaux,
    symplectic_weight_sum,
)


# -- printed example values ---------------------------------------------------


def test_ssyt_examples():
    vs, xs = standard_x(2)
    assert ssyt_weight_sum(Partition([1]), Partition(), 2) == xs[0] + xs[1]
    assert ssyt_weight_sum(Partition([2, 1]), Partition(), 2) == xs[0] ** 2 * xs[1] + xs[0] * xs[1] ** 2
    assert ssyt_weight_sum(Partition([1, 1, 1]), Partition(), 2).is_zero()


def test_super_example_eight_tableaux():
    lam = Partition([2, 1])
    grids = list(super_grids(lam, 2, 1))
    assert len(grids) == 8
    vs, xs, ys = standard_xy(2, 1)
    x1, x2, y1 = xs[0], xs[1], ys[0]
    expected = (
        x1 ** 2 * x2
        + x1 * x2 ** 2
        + x1 ** 2 * y1
        + 2 * x1 * x2 * y1
        + x2 ** 2 * y1
        + x1 * y1 ** 2
        + x2 * y1 ** 2
    )
    assert super_weight_sum(lam, 2, 1) == expected


def test_super_trivial_and_zero():
    assert super_weight_sum(Partition(), 2, 1).is_one()
    assert super_weight_sum(Partition([2, 2]), 1, 1).is_zero()


def test_symplectic_single_cell():
    vs, xs = standard_x(1)
    x = xs[0]
    assert symplectic_weight_sum(Partition([1]), 1) == x + x.inverse()
    assert symplectic_weight_sum(Partition([1, 1]), 1).is_zero()


def test_symplectic_printed_tableau():
    # rows (1, 1b, 2), (2b, 2b), (4, 4b) in a shape-(3,2,2) tableau over n=4
    lam = Partition([3, 2, 2])
    grid = ((0, 1, 2), (3, 3), (6, 7))
    assert is_symplectic(grid, lam, 4)
    vs, xs = standard_x(4)
    weight = vs.one()
    for row in grid:
        for v in row:
            w = xs[v >> 1]
            weight = weight * (w.inverse() if v & 1 else w)
    assert weight == xs[1].inverse()
    assert grid in set(symplectic_grids(lam, 4))


def test_orthosymplectic_example_eight_tableaux():
    lam = Partition([2])
    grids = list(orthosymplectic_grids(lam, 1, 2))
    assert len(grids) == 8
    vs, xs, ys = standard_xy(1, 2)
    x1, y1, y2 = xs[0], ys[0], ys[1]
    xb = x1.inverse()
    expected = x1 ** 2 + xb ** 2 + vs.one() + y1 * (x1 + xb) + y2 * (x1 + xb) + y1 * y2
    assert orthosymplectic_weight_sum(lam, 1, 2) == expected


def test_orthosymplectic_trivial():
    assert orthosymplectic_weight_sum(Partition(), 2, 1).is_one()


def test_orthosymplectic_printed_tableau():
    # rows (1b, 2, 3p), (2b, 1p, 3p), (4, 3p), (2p) over n=4, m=3
    lam = Partition([3, 3, 2, 1])
    n, m = 4, 3
    grid = ((1, 2, 10), (3, 8, 10), (6, 10), (9,))
    assert is_orthosymplectic(grid, lam, n, m)
    vs, xs, ys = standard_xy(n, m)
    weight = vs.one()
    for row in grid:
        for v in row:
            if v < 2 * n:
                w = xs[v >> 1]
                weight = weight * (w.inverse() if v & 1 else w)
            else:
                weight = weight * ys[v - 2 * n]
    assert weight == xs[0].inverse() * xs[3] * ys[0] * ys[1] * ys[2] ** 3


def test_odd_symplectic_examples():
    vs, xs = standard_x(2)
    x1, x2 = xs
    expected = (
        x1 ** 2 * x2
        + x2
        + x1 * x2 ** 2
        + x1.inverse() ** 2 * x2
        + x1.inverse() * x2 ** 2
    )
    assert odd_symplectic_weight_sum(Partition([2, 1]), 2) == expected
    assert len(list(odd_symplectic_grids(Partition([2, 1]), 2))) == 5
    assert odd_symplectic_weight_sum(Partition(), 2).is_one()
    vs1, xs1 = standard_x(1)
    assert odd_symplectic_weight_sum(Partition([1]), 1) == xs1[0]


def test_odd_symplectic_length_error():
    with pytest.raises(ValueError):
        odd_symplectic_weight_sum(Partition([1, 1]), 1)


# -- brute-force cross-checks ---------------------------------------------------


def brute(shape, inner, letters, checker):
    cells = []
    for r, width in enumerate(shape.parts):
        start = inner.part(r + 1)
        cells.extend((r, start + c) for c in range(width - start))
    found = set()
    for values in itertools.product(range(letters), repeat=len(cells)):
        rows = [[] for _ in shape.parts]
        for (r, c), v in zip(cells, values):
            rows[r].append(v)
        grid = tuple(tuple(row) for row in rows)
        if checker(grid):
            found.add(grid)
    return found


SHAPES = [Partition([1]), Partition([2]), Partition([1, 1]), Partition([2, 1]), Partition([2, 2])]


@pytest.mark.parametrize("lam", SHAPES)
@pytest.mark.parametrize("n", [1, 2])
def test_ssyt_matches_brute_force(lam, n):
    mu = Partition()
    want = brute(lam, mu, n, lambda g: is_semistandard(g, lam, mu, n))
    got = set(ssyt_grids(lam, mu, n))
    assert got == want


def test_skew_ssyt_matches_brute_force():
    lam, mu, n = Partition([2, 2]), Partition([1]), 2
    want = brute(lam, mu, n, lambda g: is_semistandard(g, lam, mu, n))
    got = set(ssyt_grids(lam, mu, n))
    assert got == want


@pytest.mark.parametrize("lam", SHAPES)
@pytest.mark.parametrize("n,m", [(1, 1), (1, 2), (2, 1)])
def test_super_matches_brute_force(lam, n, m):
    want = brute(lam, Partition(), n + m, lambda g: is_supertableau(g, lam, n, m))
    got = set(super_grids(lam, n, m))
    assert got == want


@pytest.mark.parametrize("lam", SHAPES)
@pytest.mark.parametrize("n", [1, 2])
def test_symplectic_matches_brute_force(lam, n):
    want = brute(lam, Partition(), 2 * n, lambda g: is_symplectic(g, lam, n))
    got = set(symplectic_grids(lam, n))
    assert got == want


@pytest.mark.parametrize("lam", SHAPES)
@pytest.mark.parametrize("n,m", [(1, 1), (1, 2), (2, 1)])
def test_orthosymplectic_matches_brute_force(lam, n, m):
    want = brute(lam, Partition(), 2 * n + m, lambda g: is_orthosymplectic(g, lam, n, m))
    got = set(orthosymplectic_grids(lam, n, m))
    assert got == want


@pytest.mark.parametrize("lam", SHAPES)
@pytest.mark.parametrize("n", [2, 3])
def test_odd_symplectic_matches_brute_force(lam, n):
    want = brute(lam, Partition(), 2 * n - 1, lambda g: is_odd_symplectic(g, lam, n))
    got = set(odd_symplectic_grids(lam, n))
    assert got == want


# -- structural invariants --------------------------------------------------------


def test_ssyt_agrees_with_jacobi_trudi():
    for n in (1, 2, 3):
        vs, xs = standard_x(n)
        for lam in partitions_up_to(6):
            assert ssyt_weight_sum(lam, Partition(), n) == skew_schur_jt(lam, Partition(), xs, vars=vs)


def test_symplectic_bar_symmetry():
    from ospchar.algebra import substitute

    for n in (1, 2):
        for lam in partitions_up_to(4, max_length=n):
            p = symplectic_weight_sum(lam, n)
            for i in range(1, n + 1):
                name = f"x{i}"
                assert substitute(p, name, p.vars.gen(name).inverse()) == p


def test_orthosymplectic_with_no_primes_is_symplectic():
    for n in (1, 2):
        for lam in partitions_up_to(4, max_length=n):
            assert orthosymplectic_weight_sum(lam, n, 0) == symplectic_weight_sum(lam, n)


def test_orthosymplectic_expands_over_symplectic_times_skew():
    for n, m in ((1, 1), (1, 2), (2, 1), (2, 2)):
        vs, xs, ys = standard_xy(n, m)
        for lam in partitions_up_to(4, max_length=n):
            total = vs.zero()
            for mu in subpartitions(lam, max_length=n):
                sp = embed(symplectic_weight_sum(mu, n), vs)
                total = total + sp * skew_schur_jt(lam.conjugate(), mu.conjugate(), ys, vars=vs)
            assert orthosymplectic_weight_sum(lam, n, m) == total


def test_super_vanishing_criterion():
    for n in (1, 2, 3):
        for m in (1, 2, 3):
            for lam in partitions_up_to(6):
                value = super_weight_sum(lam, n, m)
                assert value.is_zero() == (lam.part(n + 1) > m)


# -- display ----------------------------------------------------------------------


def test_display_tokens():
    ts = [str(t) for t in symplectic_tableaux(Partition([1]), 1)]
    assert ts == ["[[1]]", "[[1b]]"]
    odd = [str(t) for t in odd_symplectic_tableaux(Partition([1]), 2)]
    assert odd == ["[[1]]", "[[1b]]", "[[2]]"]
    ortho = [str(t) for t in tableaux.orthosymplectic_tableaux(Partition([1]), 1, 1)]
    assert ortho == ["[[1]]", "[[1b]]", "[[1p]]"]
    skew = [str(t) for t in tableaux.ssyt_tableaux(Partition([2]), Partition([1]), 1)]
    assert skew == ["[[.,1]]"]

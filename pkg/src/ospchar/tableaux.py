"""Tableau enumeration for five alphabets, with exact weight sums.

Each family fills a Young diagram row-major by backtracking, pruning each
cell's candidates from its left and top neighbours plus the family's row
bound.  The weight sums over complete fillings are the ground truth that the
closed-form character formulas are checked against.

Entry encodings (0-based codes):

* semistandard: ``0..n-1`` for the letters ``1 < ... < n``
* super: ``0..n-1`` unprimed, ``n..n+m-1`` primed (``1 < .. < n < 1' < .. < m'``)
* symplectic: ``2i`` is the letter ``i+1``, ``2i+1`` its barred partner
  (``1 < 1b < ... < n < nb``)
* orthosymplectic: symplectic codes ``0..2n-1`` then primed ``2n..2n+m-1``
* odd symplectic: ``0..2n-3`` barred pairs for letters ``1..n-1``, ``2n-2``
  the unbarred letter ``n``

A validity checker per family restates the defining rules by whole-tableau
scans, independently of the enumerator's pruning; the tests compare the two
on brute-forced small shapes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .algebra import LaurentPolynomial, VariableSet
from .symfun import Partition


@dataclass(frozen=True)
class Tableau:
    """A filled (possibly skew) shape, entries as display tokens.

    Tokens: plain letters ``3``, barred ``3b``, primed ``2p``; cells of the
    inner shape print as ``.``.
    """

    shape: tuple[int, ...]
    inner: tuple[int, ...]
    rows: tuple[tuple[str, ...], ...]

    def __str__(self) -> str:
        body = []
        for r, width in enumerate(self.shape):
            skip = self.inner[r] if r < len(self.inner) else 0
            cells = ["."] * skip + list(self.rows[r])
            body.append("[" + ",".join(cells) + "]")
        return "[" + ",".join(body) + "]"


def _xy_vars(n: int, m: int) -> VariableSet:
    return VariableSet([f"x{i}" for i in range(1, n + 1)] + [f"y{j}" for j in range(1, m + 1)])


def _x_vars(n: int) -> VariableSet:
    return VariableSet([f"x{i}" for i in range(1, n + 1)])


def _cells(shape: Sequence[int], inner: Sequence[int]) -> list[tuple[int, int]]:
    out = []
    for r, width in enumerate(shape):
        start = inner[r] if r < len(inner) else 0
        if start > width:
            raise ValueError("inner shape is not contained in the outer shape")
        out.extend((r, c) for c in range(start, width))
    return out


def _in_shape(shape: Sequence[int], inner: Sequence[int], r: int, c: int) -> bool:
    if r < 0 or r >= len(shape):
        return False
    start = inner[r] if r < len(inner) else 0
    return start <= c < shape[r]


def _grids(shape, inner, candidates) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Row-major backtracking; ``candidates(grid, r, c)`` yields legal codes."""
    cells = _cells(shape, inner)
    if not cells:
        yield ()
        return
    grid = {c: -1 for c in cells}

    def rec(idx: int):
        if idx == len(cells):
            snap = []
            for r, width in enumerate(shape):
                start = inner[r] if r < len(inner) else 0
                snap.append(tuple(grid[(r, c)] for c in range(start, width)))
            yield tuple(snap)
            return
        r, c = cells[idx]
        for v in candidates(grid, r, c):
            grid[(r, c)] = v
            yield from rec(idx + 1)
        grid[(r, c)] = -1

    yield from rec(0)


def _neighbors(grid, shape, inner, r, c):
    left = grid.get((r, c - 1)) if _in_shape(shape, inner, r, c - 1) else None
    top = grid.get((r - 1, c)) if _in_shape(shape, inner, r - 1, c) else None
    if left == -1:
        left = None
    if top == -1:
        top = None
    return left, top


# -- semistandard -----------------------------------------------------


def ssyt_grids(lam: Partition, mu: Partition, n: int) -> Iterator[tuple]:
    if not lam.contains(mu):
        raise ValueError(f"{mu!r} is not contained in {lam!r}")
    shape, inner = lam.parts, mu.parts

    def candidates(grid, r, c):
        left, top = _neighbors(grid, shape, inner, r, c)
        lo = 0
        if left is not None:
            lo = max(lo, left)
        if top is not None:
            lo = max(lo, top + 1)
        return range(lo, n)

    return _grids(shape, inner, candidates)


def is_semistandard(grid, lam: Partition, mu: Partition, n: int) -> bool:
    """Rows weakly increase, columns strictly increase, entries in 0..n-1."""
    vals = _grid_dict(grid, lam, mu)
    for (r, c), v in vals.items():
        if not 0 <= v < n:
            return False
        if (r, c - 1) in vals and vals[(r, c - 1)] > v:
            return False
        if (r - 1, c) in vals and vals[(r - 1, c)] >= v:
            return False
    return True


def ssyt_weight_sum(lam: Partition, mu: Partition, n: int) -> LaurentPolynomial:
    vs = _x_vars(n)
    terms: dict[tuple[int, ...], int] = {}
    for grid in ssyt_grids(lam, mu, n):
        e = [0] * n
        for row in grid:
            for v in row:
                e[v] += 1
        key = tuple(e)
        terms[key] = terms.get(key, 0) + 1
    return vs.poly(terms)


# -- super ------------------------------------------------------------


def super_grids(lam: Partition, n: int, m: int) -> Iterator[tuple]:
    shape, inner = lam.parts, ()

    def candidates(grid, r, c):
        left, top = _neighbors(grid, shape, inner, r, c)
        lo = 0
        if left is not None:
            lo = max(lo, left)
        if top is not None:
            lo = max(lo, top)
        for v in range(lo, n + m):
            if v < n and top == v:
                continue  # unprimed letters are strict down columns
            if v >= n and left == v:
                continue  # primed letters are strict across rows
            yield v

    return _grids(shape, inner, candidates)


def is_supertableau(grid, lam: Partition, n: int, m: int) -> bool:
    vals = _grid_dict(grid, lam, Partition())
    for (r, c), v in vals.items():
        if not 0 <= v < n + m:
            return False
        left = vals.get((r, c - 1))
        top = vals.get((r - 1, c))
        if left is not None and left > v:
            return False
        if top is not None and top > v:
            return False
        if v < n and top == v:
            return False
        if v >= n and left == v:
            return False
    return True


def super_weight_sum(lam: Partition, n: int, m: int) -> LaurentPolynomial:
    vs = _xy_vars(n, m)
    width = n + m
    terms: dict[tuple[int, ...], int] = {}
    for grid in super_grids(lam, n, m):
        e = [0] * width
        for row in grid:
            for v in row:
                e[v] += 1
        key = tuple(e)
        terms[key] = terms.get(key, 0) + 1
    return vs.poly(terms)


# -- symplectic and odd symplectic ------------------------------------


def _king_grids(shape: Sequence[int], letters: int) -> Iterator[tuple]:
    """Fillings with weak rows, strict columns, and row r entries >= code 2r."""
    inner = ()

    def candidates(grid, r, c):
        left, top = _neighbors(grid, shape, inner, r, c)
        lo = 2 * r
        if left is not None:
            lo = max(lo, left)
        if top is not None:
            lo = max(lo, top + 1)
        return range(lo, letters)

    return _grids(shape, inner, candidates)


def _is_king(grid, lam: Partition, letters: int) -> bool:
    vals = _grid_dict(grid, lam, Partition())
    for (r, c), v in vals.items():
        if not 2 * r <= v < letters:
            return False
        if (r, c - 1) in vals and vals[(r, c - 1)] > v:
            return False
        if (r - 1, c) in vals and vals[(r - 1, c)] >= v:
            return False
    return True


def symplectic_grids(lam: Partition, n: int) -> Iterator[tuple]:
    return _king_grids(lam.parts, 2 * n)


def is_symplectic(grid, lam: Partition, n: int) -> bool:
    return _is_king(grid, lam, 2 * n)


def symplectic_weight_sum(lam: Partition, n: int) -> LaurentPolynomial:
    """Sum of x^(occurrences of i minus occurrences of i-bar); zero if the shape is too tall."""
    vs = _x_vars(n)
    terms: dict[tuple[int, ...], int] = {}
    for grid in symplectic_grids(lam, n):
        e = [0] * n
        for row in grid:
            for v in row:
                e[v >> 1] += -1 if v & 1 else 1
        key = tuple(e)
        terms[key] = terms.get(key, 0) + 1
    return vs.poly(terms)


def odd_symplectic_grids(lam: Partition, n: int) -> Iterator[tuple]:
    if lam.length > n:
        raise ValueError(f"partition length {lam.length} exceeds n={n}")
    return _king_grids(lam.parts, 2 * n - 1)


def is_odd_symplectic(grid, lam: Partition, n: int) -> bool:
    return _is_king(grid, lam, 2 * n - 1)


def odd_symplectic_weight_sum(lam: Partition, n: int) -> LaurentPolynomial:
    """Like the symplectic weight, but the top letter n has no barred partner."""
    if lam.length > n:
        raise ValueError(f"partition length {lam.length} exceeds n={n}")
    vs = _x_vars(n)
    top = 2 * n - 2
    terms: dict[tuple[int, ...], int] = {}
    for grid in odd_symplectic_grids(lam, n):
        e = [0] * n
        for row in grid:
            for v in row:
                if v == top:
                    e[n - 1] += 1
                else:
                    e[v >> 1] += -1 if v & 1 else 1
        key = tuple(e)
        terms[key] = terms.get(key, 0) + 1
    return vs.poly(terms)


# -- orthosymplectic ---------------------------------------------------


def orthosymplectic_grids(lam: Partition, n: int, m: int) -> Iterator[tuple]:
    shape, inner = lam.parts, ()
    base = 2 * n

    def candidates(grid, r, c):
        left, top = _neighbors(grid, shape, inner, r, c)
        # Unprimed cells form the symplectic portion, which must be a Young
        # subdiagram: an unprimed entry cannot sit right of or below a prime.
        if (left is None or left < base) and (top is None or top < base):
            lo = 2 * r
            if left is not None:
                lo = max(lo, left)
            if top is not None:
                lo = max(lo, top + 1)
            yield from range(lo, base)
        lo = base
        if left is not None and left >= base:
            lo = max(lo, left + 1)  # primes are strict across rows
        if top is not None and top >= base:
            lo = max(lo, top)  # primes are weak down columns
        yield from range(lo, base + m)

    return _grids(shape, inner, candidates)


def is_orthosymplectic(grid, lam: Partition, n: int, m: int) -> bool:
    """Symplectic sub-Young-diagram of unprimed codes, primed skew part
    strict across rows and weak down columns."""
    vals = _grid_dict(grid, lam, Partition())
    base = 2 * n
    core_rows = [0] * lam.length
    for (r, c), v in vals.items():
        if not 0 <= v < base + m:
            return False
        if v < base:
            core_rows[r] = max(core_rows[r], c + 1)
    # the unprimed portion must be left-closed in each row and top-closed in
    # each column, i.e. itself a Young diagram anchored at the corner
    for (r, c), v in vals.items():
        if v >= base and c < core_rows[r]:
            return False
    for r in range(1, lam.length):
        if core_rows[r] > core_rows[r - 1]:
            return False
    core = {(r, c): v for (r, c), v in vals.items() if v < base}
    for (r, c), v in core.items():
        if v < 2 * r:
            return False
        if (r, c - 1) in core and core[(r, c - 1)] > v:
            return False
        if (r - 1, c) in core and core[(r - 1, c)] >= v:
            return False
    primed = {(r, c): v for (r, c), v in vals.items() if v >= base}
    for (r, c), v in primed.items():
        if (r, c - 1) in primed and primed[(r, c - 1)] >= v:
            return False
        if (r - 1, c) in primed and primed[(r - 1, c)] > v:
            return False
    return True


def orthosymplectic_weight_sum(lam: Partition, n: int, m: int) -> LaurentPolynomial:
    vs = _xy_vars(n, m)
    base = 2 * n
    terms: dict[tuple[int, ...], int] = {}
    for grid in orthosymplectic_grids(lam, n, m):
        e = [0] * (n + m)
        for row in grid:
            for v in row:
                if v < base:
                    e[v >> 1] += -1 if v & 1 else 1
                else:
                    e[n + v - base] += 1
        key = tuple(e)
        terms[key] = terms.get(key, 0) + 1
    return vs.poly(terms)


# -- display and shared helpers ----------------------------------------


def _grid_dict(grid, lam: Partition, mu: Partition) -> dict[tuple[int, int], int]:
    vals = {}
    for r, row in enumerate(grid):
        start = mu.part(r + 1)
        for k, v in enumerate(row):
            vals[(r, start + k)] = v
    return vals


def _ssyt_token(v: int) -> str:
    return str(v + 1)


def _super_token(v: int, n: int) -> str:
    return str(v + 1) if v < n else f"{v - n + 1}p"


def _king_token(v: int) -> str:
    return f"{(v >> 1) + 1}b" if v & 1 else str((v >> 1) + 1)


def _odd_token(v: int, n: int) -> str:
    return str(n) if v == 2 * n - 2 else _king_token(v)


def _ortho_token(v: int, n: int) -> str:
    return _king_token(v) if v < 2 * n else f"{v - 2 * n + 1}p"


def _build(lam: Partition, mu: Partition, grid, token) -> Tableau:
    return Tableau(lam.parts, mu.parts, tuple(tuple(token(v) for v in row) for row in grid))


def ssyt_tableaux(lam: Partition, mu: Partition, n: int) -> Iterator[Tableau]:
    for grid in ssyt_grids(lam, mu, n):
        yield _build(lam, mu, grid, _ssyt_token)


def super_tableaux(lam: Partition, n: int, m: int) -> Iterator[Tableau]:
    for grid in super_grids(lam, n, m):
        yield _build(lam, Partition(), grid, lambda v: _super_token(v, n))


def symplectic_tableaux(lam: Partition, n: int) -> Iterator[Tableau]:
    for grid in symplectic_grids(lam, n):
        yield _build(lam, Partition(), grid, _king_token)


def odd_symplectic_tableaux(lam: Partition, n: int) -> Iterator[Tableau]:
    for grid in odd_symplectic_grids(lam, n):
        yield _build(lam, Partition(), grid, lambda v: _odd_token(v, n))


def orthosymplectic_tableaux(lam: Partition, n: int, m: int) -> Iterator[Tableau]:
    for grid in orthosymplectic_grids(lam, n, m):
        yield _build(lam, Partition(), grid, lambda v: _ortho_token(v, n))

"""Closed-form character computations for five families.

Every function takes explicit variable arguments: ``xs`` (and ``ys``) are
unit monomials in a shared variable set, so the same formulas evaluate both
at the standard alphabets x_1..x_n / y_1..y_m and at specialized points such
as (x_1, ..., 1/x_n).  Bars are inverses: ``xb = x.inverse()``.

Routes implemented per family (all agreeing, which the identity suite and
the acceptance tests verify against tableau enumeration):

* general linear: ratio of alternants; Jacobi-Trudi determinant
* general linear superalgebra (hook): Jacobi-Trudi in the complete
  supersymmetric functions; bordered Cauchy-block determinant
* symplectic: Weyl quotient of alternants in x^e - x^-e
* orthosymplectic: hyperoctahedral Jacobi-Trudi; a bordered determinant with
  rational entries; an equivalent bordered determinant with Laurent entries;
  the expansion sum over symplectic times skew Schur
* odd symplectic: quotient determinant with one distinguished variable
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import (
    LaurentPolynomial,
    RationalFunction,
    VariableSet,
    det_bareiss,
    det_rational,
    exact_div,
)
from .symfun import (
    Partition,
    complete,
    jseries_table,
    k_index,
    skew_schur_jt,
    subpartitions,
    super_complete,
)
from . import tableaux

Poly = LaurentPolynomial


def standard_xy(n: int, m: int) -> tuple[VariableSet, list[Poly], list[Poly]]:
    """Variable set x1..xn, y1..ym with its generators split into X and Y."""
    vs = VariableSet([f"x{i}" for i in range(1, n + 1)] + [f"y{j}" for j in range(1, m + 1)])
    gens = vs.gens()
    return vs, gens[:n], gens[n:]


def standard_x(n: int) -> tuple[VariableSet, list[Poly]]:
    vs = VariableSet([f"x{i}" for i in range(1, n + 1)])
    return vs, vs.gens()


def _vs_of(xs: Sequence[Poly], ys: Sequence[Poly] = ()) -> VariableSet:
    if xs:
        return xs[0].vars
    if ys:
        return ys[0].vars
    raise ValueError("at least one variable is required")


def _require_length(lam: Partition, n: int) -> None:
    if lam.length > n:
        raise ValueError(f"partition {lam.parts} is longer than the {n} variables")


def _prod(vs: VariableSet, factors) -> Poly:
    out = vs.one()
    for f in factors:
        out = out * f
    return out


# -- general linear -----------------------------------------------------


def schur_bialternant(lam: Partition, xs: Sequence[Poly]) -> Poly:
    """det(x_i^(lam_j + n - j)) / det(x_i^(n - j))."""
    n = len(xs)
    _require_length(lam, n)
    vs = _vs_of(xs)
    num = [[xs[i] ** (lam.part(j) + n - j) for j in range(1, n + 1)] for i in range(n)]
    den = [[xs[i] ** (n - j) for j in range(1, n + 1)] for i in range(n)]
    return exact_div(det_bareiss(num, vs), det_bareiss(den, vs))


# -- hook (general linear superalgebra) ----------------------------------


def hook_schur_jt(lam: Partition, xs: Sequence[Poly], ys: Sequence[Poly]) -> Poly:
    """det(H_{lam_i - i + j}) over the complete supersymmetric functions."""
    vs = _vs_of(xs, ys)
    size = max(lam.length, 1)
    table = {}

    def h(r: int) -> Poly:
        if r not in table:
            table[r] = super_complete(r, xs, ys, vs)
        return table[r]

    rows = [[h(lam.part(i) - i + j) for j in range(1, size + 1)] for i in range(1, size + 1)]
    return det_bareiss(rows, vs)


def hook_schur_det(lam: Partition, xs: Sequence[Poly], ys: Sequence[Poly]) -> Poly:
    """Bordered determinant with Cauchy block 1/(x_i + y_j).

    Valid for lam_{n+1} <= m.  The block matrix has the n x m Cauchy block,
    k - 1 columns of x-powers, m - n + k - 1 rows of y-powers and a zero
    block; the result is (-1)^(mn - n + k - 1) / D times its determinant,
    where D = prod(x_i - x_j) prod(y_i - y_j) / prod(x_i + y_j).
    """
    n, m = len(xs), len(ys)
    vs = _vs_of(xs, ys)
    if lam.part(n + 1) > m:
        raise ValueError(f"part {n + 1} of {lam.parts} exceeds m={m}")
    k = k_index(lam, n, m)
    size = m + k - 1
    lamc = lam.conjugate()
    one = vs.one()
    rows: list[list[RationalFunction]] = []
    for i in range(n):
        x = xs[i]
        row = [RationalFunction(one, x + ys[j]) for j in range(m)]
        row += [
            RationalFunction(x ** (lam.part(j) + n - m - j))
            for j in range(1, k)
        ]
        rows.append(row)
    zero_r = RationalFunction(vs.zero())
    for i in range(1, m - n + k):
        row = [RationalFunction(ys[j] ** (lamc.part(i) + m - n - i)) for j in range(m)]
        row += [zero_r] * (k - 1)
        rows.append(row)
    assert len(rows) == size
    det = det_rational(rows)
    dnum = _prod(vs, (xs[i] - xs[j] for i in range(n) for j in range(i + 1, n)))
    dnum = dnum * _prod(vs, (ys[i] - ys[j] for i in range(m) for j in range(i + 1, m)))
    dden = _prod(vs, (x + y for x in xs for y in ys))
    sign = -1 if (m * n - n + k - 1) % 2 else 1
    result = det * RationalFunction(dden, dnum)
    return sign * result.to_laurent()


# -- symplectic -----------------------------------------------------------


def symplectic_denominator_product(xs: Sequence[Poly]) -> Poly:
    """prod(x_i - 1/x_i) * prod_{i<j}(x_i + 1/x_i - x_j - 1/x_j)."""
    vs = _vs_of(xs)
    inv = [x.inverse() for x in xs]
    out = _prod(vs, (x - xb for x, xb in zip(xs, inv)))
    n = len(xs)
    for i in range(n):
        for j in range(i + 1, n):
            out = out * (xs[i] + inv[i] - xs[j] - inv[j])
    return out


def symplectic_weyl(lam: Partition, xs: Sequence[Poly], check_denominator: bool = True) -> Poly:
    """Weyl quotient det(x_i^a - x_i^-a), a = lam_j + n - j + 1, over the
    same determinant at the empty partition.

    The denominator determinant is checked against its closed product form
    before dividing (disable with check_denominator for repeated calls with
    one alphabet).
    """
    n = len(xs)
    _require_length(lam, n)
    vs = _vs_of(xs)
    den = symplectic_denominator_product(xs)
    if check_denominator:
        den_rows = [
            [xs[i] ** (n - j + 1) - xs[i] ** (j - n - 1) for j in range(1, n + 1)]
            for i in range(n)
        ]
        if det_bareiss(den_rows, vs) != den:
            raise RuntimeError("symplectic denominator does not match its product form")
    num = [
        [
            xs[i] ** (lam.part(j) + n - j + 1) - xs[i] ** (j - n - 1 - lam.part(j))
            for j in range(1, n + 1)
        ]
        for i in range(n)
    ]
    return exact_div(det_bareiss(num, vs), den)


# -- orthosymplectic -------------------------------------------------------


def ortho_jt(lam: Partition, xs: Sequence[Poly], ys: Sequence[Poly]) -> Poly:
    """det of the n x n matrix with first column J_{lam_i - i + 1} and
    j-th column J_{lam_i - i + j} + J_{lam_i - i - j + 2} for j >= 2,
    J_r = sum_l h_l(X, 1/X) e_{r-l}(Y)."""
    n = len(xs)
    _require_length(lam, n)
    vs = _vs_of(xs, ys)
    rmax = max(lam.part(1) + n - 1, 0)
    jt = jseries_table(rmax, xs, ys, vs)
    zero = vs.zero()

    def J(r: int) -> Poly:
        return jt[r] if r >= 0 else zero

    rows = []
    for i in range(1, n + 1):
        a = lam.part(i) - i
        row = [J(a + 1)]
        row += [J(a + j) + J(a - j + 2) for j in range(2, n + 1)]
        rows.append(row)
    return det_bareiss(rows, vs)


def ortho_det_rational(lam: Partition, xs: Sequence[Poly], ys: Sequence[Poly]) -> Poly:
    """Bordered determinant with rational entries.

    Row i of the main block carries the common denominator
    prod_q (x_i + y_q)(1/x_i + y_q); its entries are
    x_i/((x_i+y_j) prod(1/x_i+y_q)) - (1/x_i)/((1/x_i+y_j) prod(x_i+y_q))
    and the k - 1 border columns x_i^e/prod(1/x_i+y_q) - x_i^-e/prod(x_i+y_q)
    with e = lam_j + n - m - j + 1.  The lower border holds y-powers.
    With Y empty this is the symplectic Weyl quotient.
    """
    n, m = len(xs), len(ys)
    _require_length(lam, n)
    if m == 0:
        return symplectic_weyl(lam, xs)
    vs = _vs_of(xs, ys)
    k = k_index(lam, n, m)
    lamc = lam.conjugate()
    rows: list[list[RationalFunction]] = []
    for i in range(n):
        x = xs[i]
        xb = x.inverse()
        p = _prod(vs, (x + y for y in ys))
        q = _prod(vs, (xb + y for y in ys))
        den = p * q
        row = []
        for j in range(m):
            num = x * _prod(vs, (x + ys[t] for t in range(m) if t != j)) - xb * _prod(
                vs, (xb + ys[t] for t in range(m) if t != j)
            )
            row.append(RationalFunction(num, den))
        for j in range(1, k):
            e = lam.part(j) + n - m - j + 1
            row.append(RationalFunction(x ** e * p - xb ** e * q, den))
        rows.append(row)
    zero_r = RationalFunction(vs.zero())
    for i in range(1, m - n + k):
        row = [RationalFunction(ys[j] ** (lamc.part(i) + m - n - i)) for j in range(m)]
        row += [zero_r] * (k - 1)
        rows.append(row)
    assert len(rows) == m + k - 1
    det = det_rational(rows)
    dnum = symplectic_denominator_product(xs)
    dnum = dnum * _prod(vs, (ys[i] - ys[j] for i in range(m) for j in range(i + 1, m)))
    dden = _prod(vs, ((x + y) * (x.inverse() + y) for x in xs for y in ys))
    sign = -1 if (m * n - n + k - 1) % 2 else 1
    result = det * RationalFunction(dden, dnum)
    return sign * result.to_laurent()


def ortho_det_laurent(lam: Partition, xs: Sequence[Poly], ys: Sequence[Poly]) -> Poly:
    """Equivalent bordered determinant with Laurent polynomial entries.

    Main block (-1)^(m-j) (x_i^j - x_i^-j); border columns
    x_i^e prod(x_i + y_q) - x_i^-e prod(1/x_i + y_q), e = lam_j + n - m - j + 1;
    lower border h_{lam'_i - n - i + j}(Y); divided by the symplectic
    denominator product with sign (-1)^(mn - n + k - 1).
    """
    n, m = len(xs), len(ys)
    _require_length(lam, n)
    if m == 0:
        return symplectic_weyl(lam, xs)
    vs = _vs_of(xs, ys)
    k = k_index(lam, n, m)
    lamc = lam.conjugate()
    zero = vs.zero()
    rows: list[list[Poly]] = []
    for i in range(n):
        x = xs[i]
        xb = x.inverse()
        p = _prod(vs, (x + y for y in ys))
        q = _prod(vs, (xb + y for y in ys))
        row = []
        for j in range(1, m + 1):
            entry = x ** j - xb ** j
            row.append(-entry if (m - j) % 2 else entry)
        for j in range(1, k):
            e = lam.part(j) + n - m - j + 1
            row.append(x ** e * p - xb ** e * q)
        rows.append(row)
    for i in range(1, m - n + k):
        row = [complete(lamc.part(i) - n - i + j, ys, vs) for j in range(1, m + 1)]
        row += [zero] * (k - 1)
        rows.append(row)
    assert len(rows) == m + k - 1
    det = det_bareiss(rows, vs)
    sign = -1 if (m * n - n + k - 1) % 2 else 1
    return sign * exact_div(det, symplectic_denominator_product(xs))


def ortho_single_y(lam: Partition, xs: Sequence[Poly], y: Poly) -> Poly:
    """One-prime-variable case: det(x_i^(a+1) - x_i^-(a+1) + y (x_i^a - x_i^-a))
    over the symplectic denominator product, a = lam_j + n - j."""
    n = len(xs)
    _require_length(lam, n)
    vs = _vs_of(xs)
    rows = []
    for i in range(n):
        x = xs[i]
        row = []
        for j in range(1, n + 1):
            a = lam.part(j) + n - j
            row.append(x ** (a + 1) - x ** (-a - 1) + y * (x ** a - x ** (-a)))
        rows.append(row)
    return exact_div(det_bareiss(rows, vs), symplectic_denominator_product(xs))


def ortho_single_y_long(lam: Partition, xs: Sequence[Poly], y: Poly) -> Poly:
    """Single-prime-variable case for shapes longer than n with lam_{n+1} <= 1.

    Rows below the n-th are all length one and forced to carry the prime, so
    the value is y^(len - n) times the length-n case on the truncated shape.
    """
    n = len(xs)
    ell = lam.length
    if ell <= n:
        return ortho_single_y(lam, xs, y)
    if lam.part(n + 1) > 1:
        raise ValueError(f"part {n + 1} of {lam.parts} exceeds 1")
    head = Partition(lam.parts[:n])
    return y ** (ell - n) * ortho_single_y(head, xs, y)


def ortho_sp_schur_sum(lam: Partition, xs: Sequence[Poly], ys: Sequence[Poly]) -> Poly:
    """Sum over mu inside lam of sp_mu(X) * s_{lam'/mu'}(Y)."""
    n = len(xs)
    vs = _vs_of(xs, ys)
    if xs:
        symplectic_weyl(Partition(), xs)  # one denominator check per alphabet
    lamc = lam.conjugate()
    total = vs.zero()
    for mu in subpartitions(lam, max_length=n):
        sp = symplectic_weyl(mu, xs, check_denominator=False)
        sk = skew_schur_jt(lamc, mu.conjugate(), ys, vars=vs)
        total = total + sp * sk
    return total


# -- odd symplectic ---------------------------------------------------------


def odd_denominator_product(xs: Sequence[Poly]) -> Poly:
    """prod_{i<n}(x_i - 1/x_i) * prod_{i<j<=n}(x_i + 1/x_i - x_j - 1/x_j)."""
    vs = _vs_of(xs)
    n = len(xs)
    inv = [x.inverse() for x in xs]
    out = _prod(vs, (xs[i] - inv[i] for i in range(n - 1)))
    for i in range(n):
        for j in range(i + 1, n):
            out = out * (xs[i] + inv[i] - xs[j] - inv[j])
    return out


def odd_symplectic_det(lam: Partition, xs: Sequence[Poly], check_denominator: bool = True) -> Poly:
    """Quotient det A_lam / det A_empty, the last variable distinguished.

    Rows i < n: (x_i^(a+1) - x_i^-(a+1)) - (1/y)(x_i^a - x_i^-a) with
    a = lam_j + n - j and y the last variable; row n: y^(lam_j + n - j).
    det A_empty equals the closed product, which is checked before dividing.
    """
    n = len(xs)
    if n < 1:
        raise ValueError("needs at least one variable")
    _require_length(lam, n)
    vs = _vs_of(xs)
    y = xs[n - 1]
    yb = y.inverse()

    def matrix(p: Partition) -> list[list[Poly]]:
        rows = []
        for i in range(n - 1):
            x = xs[i]
            row = []
            for j in range(1, n + 1):
                a = p.part(j) + n - j
                row.append(x ** (a + 1) - x ** (-a - 1) - yb * (x ** a - x ** (-a)))
            rows.append(row)
        rows.append([y ** (p.part(j) + n - j) for j in range(1, n + 1)])
        return rows

    den = odd_denominator_product(xs)
    if check_denominator:
        if det_bareiss(matrix(Partition()), vs) != den:
            raise RuntimeError("odd symplectic denominator does not match its product form")
    return exact_div(det_bareiss(matrix(lam), vs), den)


# -- request dispatch --------------------------------------------------------


FAMILIES = ("schur", "hook", "symplectic", "orthosymplectic", "odd_symplectic")
METHODS = ("tableau", "jt", "det", "weyl", "okada", "sp_schur_sum")

_SUPPORTED = {
    ("schur", "tableau"),
    ("schur", "jt"),
    ("schur", "weyl"),
    ("hook", "tableau"),
    ("hook", "jt"),
    ("hook", "det"),
    ("symplectic", "tableau"),
    ("symplectic", "weyl"),
    ("orthosymplectic", "tableau"),
    ("orthosymplectic", "jt"),
    ("orthosymplectic", "det"),
    ("orthosymplectic", "sp_schur_sum"),
    ("odd_symplectic", "tableau"),
    ("odd_symplectic", "okada"),
}


@dataclass(frozen=True)
class CharacterRequest:
    """One character computation: which family, by which route, at which point."""

    family: str
    method: str
    lam: Partition
    n: int
    m: int = 0

    def validate(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if (self.family, self.method) not in _SUPPORTED:
            raise ValueError(f"method {self.method!r} is not available for {self.family!r}")
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.m < 0:
            raise ValueError("m must be nonnegative")
        uses_m = self.family in ("hook", "orthosymplectic")
        if uses_m and self.m < 1:
            raise ValueError(f"family {self.family!r} needs m >= 1")
        if self.family in ("schur", "symplectic", "odd_symplectic") and self.lam.length > self.n:
            raise ValueError(f"partition {self.lam.parts} is longer than n={self.n}")
        if self.family == "orthosymplectic" and self.method in ("jt", "det", "sp_schur_sum"):
            if self.lam.length > self.n:
                raise ValueError(f"partition {self.lam.parts} is longer than n={self.n}")
        if self.family == "hook" and self.method == "det" and self.lam.part(self.n + 1) > self.m:
            raise ValueError("outside the determinant formula's domain: lam_{n+1} > m")

    def compute(self) -> Poly:
        self.validate()
        lam, n, m = self.lam, self.n, self.m
        if self.method == "tableau":
            if self.family == "schur":
                return tableaux.ssyt_weight_sum(lam, Partition(), n)
            if self.family == "hook":
                return tableaux.super_weight_sum(lam, n, m)
            if self.family == "symplectic":
                return tableaux.symplectic_weight_sum(lam, n)
            if self.family == "orthosymplectic":
                return tableaux.orthosymplectic_weight_sum(lam, n, m)
            return tableaux.odd_symplectic_weight_sum(lam, n)
        if self.family == "schur":
            if self.method == "weyl":
                return schur_bialternant(lam, standard_x(n)[1])
            return skew_schur_jt(lam, Partition(), standard_x(n)[1])
        if self.family == "hook":
            _, xs, ys = standard_xy(n, m)
            return hook_schur_jt(lam, xs, ys) if self.method == "jt" else hook_schur_det(lam, xs, ys)
        if self.family == "symplectic":
            return symplectic_weyl(lam, standard_x(n)[1])
        if self.family == "orthosymplectic":
            _, xs, ys = standard_xy(n, m)
            if self.method == "jt":
                return ortho_jt(lam, xs, ys)
            if self.method == "det":
                return ortho_det_rational(lam, xs, ys)
            return ortho_sp_schur_sum(lam, xs, ys)
        return odd_symplectic_det(lam, standard_x(n)[1])

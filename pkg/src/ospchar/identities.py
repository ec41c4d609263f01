"""Machine verification of the package's character identities.

Each ``verify_*`` function evaluates both sides of one identity exactly and
returns a VerificationReport; a failure carries the two values and the first
term where they differ, so a broken formula is immediately localizable.
``run_suite`` sweeps everything over a bounded parameter grid in a fixed
order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from importlib import resources
from itertools import combinations

from .algebra import (
    LaurentPolynomial,
    RationalFunction,
    VariableSet,
    det_bareiss,
    det_rational,
    substitute,
)
from .symfun import (
    Partition,
    box_partitions,
    elementary,
    laurent_complete,
    partitions_up_to,
)
from .characters import (
    CharacterRequest,
    hook_schur_det,
    hook_schur_jt,
    odd_denominator_product,
    odd_symplectic_det,
    ortho_det_laurent,
    ortho_det_rational,
    ortho_jt,
    ortho_single_y,
    ortho_sp_schur_sum,
    standard_x,
    standard_xy,
    symplectic_denominator_product,
    symplectic_weyl,
)
from . import tableaux

Poly = LaurentPolynomial


@dataclass
class VerificationReport:
    """Outcome of one identity check; pass means exact equality."""

    identity: str
    params: dict
    status: str  # "pass" | "fail"
    witness: dict | None = None
    note: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_dict(self) -> dict:
        out = {"identity": self.identity, "params": self.params, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note is not None:
            out["note"] = self.note
        return out

    def __str__(self) -> str:
        args = " ".join(f"{k}={v}" for k, v in self.params.items())
        head = f"{self.status.upper():4s} {self.identity} {args}".rstrip()
        if self.witness and "first_diff" in self.witness:
            head += f"  [first differing term: {self.witness['first_diff']}]"
        return head


def first_difference(left: Poly, right: Poly) -> str | None:
    """Canonical text of the largest monomial whose coefficients differ."""
    if left == right:
        return None
    keys = set(left.terms) | set(right.terms)
    mono = max(
        (e for e in keys if left.terms.get(e, 0) != right.terms.get(e, 0)),
        key=lambda e: (sum(e), e),
    )
    lc = left.terms.get(mono, 0)
    rc = right.terms.get(mono, 0)
    body = left.vars.poly({mono: 1}).to_text()
    return f"{body}: {lc} vs {rc}"


def compare(identity: str, params: dict, left: Poly, right: Poly, note: str | None = None) -> VerificationReport:
    if left == right:
        return VerificationReport(identity, params, "pass", note=note)
    return VerificationReport(
        identity,
        params,
        "fail",
        witness={
            "left": left.to_text(),
            "right": right.to_text(),
            "first_diff": first_difference(left, right),
        },
        note=note,
    )


def _lam_params(lam: Partition, **rest) -> dict:
    return {"lambda": lam.to_string(), **rest}


# -- character method agreements ------------------------------------------


def verify_ortho_methods(lam: Partition, n: int, m: int) -> VerificationReport:
    """Tableau sum against the four closed orthosymplectic formulas."""
    params = _lam_params(lam, n=n, m=m)
    base = tableaux.orthosymplectic_weight_sum(lam, n, m)
    _, xs, ys = standard_xy(n, m)
    for name, value in (
        ("jt", ortho_jt(lam, xs, ys)),
        ("det", ortho_det_rational(lam, xs, ys)),
        ("det_equiv", ortho_det_laurent(lam, xs, ys)),
        ("sp_schur_sum", ortho_sp_schur_sum(lam, xs, ys)),
    ):
        if value != base:
            rep = compare("ortho_methods", params, base, value)
            rep.witness["method"] = name
            return rep
    return VerificationReport("ortho_methods", params, "pass")


def verify_hook_methods(lam: Partition, n: int, m: int) -> VerificationReport:
    """Tableau sum against the Jacobi-Trudi and Cauchy-block hook formulas."""
    params = _lam_params(lam, n=n, m=m)
    base = tableaux.super_weight_sum(lam, n, m)
    _, xs, ys = standard_xy(n, m)
    for name, value in (
        ("jt", hook_schur_jt(lam, xs, ys)),
        ("det", hook_schur_det(lam, xs, ys)),
    ):
        if value != base:
            rep = compare("hook_methods", params, base, value)
            rep.witness["method"] = name
            return rep
    return VerificationReport("hook_methods", params, "pass")


def verify_symplectic_methods(lam: Partition, n: int) -> VerificationReport:
    params = _lam_params(lam, n=n)
    base = tableaux.symplectic_weight_sum(lam, n)
    value = symplectic_weyl(lam, standard_x(n)[1])
    return compare("symplectic_methods", params, base, value)


def verify_odd_methods(lam: Partition, n: int) -> VerificationReport:
    params = _lam_params(lam, n=n)
    base = tableaux.odd_symplectic_weight_sum(lam, n)
    value = odd_symplectic_det(lam, standard_x(n)[1])
    return compare("odd_methods", params, base, value)


def verify_odd_ortho_specialization(lam: Partition, n: int) -> VerificationReport:
    """Odd symplectic character equals the orthosymplectic one at
    (x_1, ..., x_{n-1}, 1/x_n) with single prime variable -1/x_n."""
    params = _lam_params(lam, n=n)
    _, xs = standard_x(n)
    lhs = odd_symplectic_det(lam, xs)
    rhs = ortho_single_y(lam, xs[:-1] + [xs[-1].inverse()], -xs[-1].inverse())
    return compare("odd_ortho_specialization", params, lhs, rhs)


# -- denominators ----------------------------------------------------------


def verify_symplectic_denominator(n: int) -> VerificationReport:
    vs, xs = standard_x(n)
    det = det_bareiss(
        [[xs[i] ** (n - j + 1) - xs[i] ** (j - n - 1) for j in range(1, n + 1)] for i in range(n)],
        vs,
    )
    return compare("symplectic_denominator", {"n": n}, det, symplectic_denominator_product(xs))


def verify_odd_denominator(n: int) -> VerificationReport:
    vs, xs = standard_x(n)
    y = xs[-1]
    yb = y.inverse()
    rows = []
    for i in range(n - 1):
        x = xs[i]
        row = []
        for j in range(1, n + 1):
            a = n - j
            row.append(x ** (a + 1) - x ** (-a - 1) - yb * (x ** a - x ** (-a)))
        rows.append(row)
    rows.append([y ** (n - j) for j in range(1, n + 1)])
    return compare("odd_denominator", {"n": n}, det_bareiss(rows, vs), odd_denominator_product(xs))


# -- supersymmetry ----------------------------------------------------------


def verify_supersymmetry(lam: Partition, n: int, m: int) -> VerificationReport:
    """Hook Schur polynomials lose all dependence on t under x_n -> t, y_m -> -t."""
    if n < 1 or m < 1:
        raise ValueError("needs n, m >= 1")
    params = _lam_params(lam, n=n, m=m)
    vs = VariableSet(
        [f"x{i}" for i in range(1, n + 1)] + [f"y{j}" for j in range(1, m + 1)] + ["t"]
    )
    gens = vs.gens()
    xs, ys, t = gens[:n], gens[n : n + m], gens[-1]
    hs = hook_schur_jt(lam, xs, ys)
    sub = substitute(substitute(hs, f"x{n}", t), f"y{m}", -t)
    if not sub.depends_on("t"):
        return VerificationReport("supersymmetry", params, "pass")
    idx = vs.index("t")
    leftover = vs.poly({e: c for e, c in sub.terms.items() if e[idx]})
    return VerificationReport(
        "supersymmetry",
        params,
        "fail",
        witness={"left": sub.to_text(), "right": "", "first_diff": leftover.to_text()},
    )


# -- matrix-product evaluation of power differences --------------------------


def verify_power_product(n: int, l: int) -> VerificationReport:
    """x_j^l - x_j^-l as (h-row) x (signed-e matrix) x (alternant column).

    The h's run over the 2n letters x_i, 1/x_i; the matrix entry at (u, v)
    is (-1)^(v-u) e_{v-u} of the same letters; the column holds
    x_j^(n+1-u) - x_j^-(n+1-u).
    """
    if l < 0:
        raise ValueError("l must be nonnegative")
    params = {"n": n, "l": l}
    vs, xs = standard_x(n)
    letters = xs + [x.inverse() for x in xs]
    zero = vs.zero()

    def hbar(r: int) -> Poly:
        return laurent_complete(r, xs, vs) if r >= 0 else zero

    def esign(r: int) -> Poly:
        if r < 0:
            return zero
        e = elementary(r, letters, vs)
        return -e if r % 2 else e

    row = [hbar(l - n)] + [hbar(l - n - 1 + j) + hbar(l - n + 1 - j) for j in range(2, n + 1)]
    mid = [[esign(v - u) for v in range(1, n + 1)] for u in range(1, n + 1)]
    prod_row = [zero] * n
    for v in range(n):
        for u in range(n):
            prod_row[v] = prod_row[v] + row[u] * mid[u][v]
    lhs = vs.zero()
    rhs = vs.zero()
    for j in range(n):
        x = xs[j]
        got = vs.zero()
        for u in range(1, n + 1):
            got = got + prod_row[u - 1] * (x ** (n + 1 - u) - x ** (u - n - 1))
        want = x ** l - x ** (-l)
        if got != want:
            return compare("power_product", {**params, "j": j + 1}, got, want)
    return VerificationReport("power_product", params, "pass")


# -- first-column hook coordinates and their complement ----------------------


def verify_beta_complement(lam: Partition, n1: int, n2: int) -> VerificationReport:
    """{lam_i + n1 - i} and {n1 - 1 + j - lam'_j} partition {0..n1+n2-1}."""
    if lam.length > n1 or lam.part(1) > n2:
        raise ValueError("partition does not fit the given box")
    params = _lam_params(lam, n1=n1, n2=n2)
    conj = lam.conjugate()
    first = {lam.part(i) + n1 - i for i in range(1, n1 + 1)}
    second = {n1 - 1 + j - conj.part(j) for j in range(1, n2 + 1)}
    ok = (
        len(first) == n1
        and len(second) == n2
        and not (first & second)
        and first | second == set(range(n1 + n2))
    )
    if ok:
        return VerificationReport("beta_complement", params, "pass")
    return VerificationReport(
        "beta_complement",
        params,
        "fail",
        witness={
            "left": str(sorted(first)),
            "right": str(sorted(second)),
            "first_diff": str(sorted((first & second) | (set(range(n1 + n2)) - first - second))),
        },
    )


# -- Cauchy-Binet ------------------------------------------------------------


def verify_cauchy_binet(
    m: int, n: int, seed: int = 0, entries: tuple | None = None
) -> VerificationReport:
    """sum over m-subsets B of det X[B] det Y[B] equals det(X Y^t)."""
    if m > n:
        raise ValueError("needs m <= n")
    params = {"m": m, "n": n, "seed": seed}
    vs = VariableSet([])
    if entries is None:
        rng = random.Random(seed)
        X = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        Y = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
    else:
        X, Y = entries
    cX = [[vs.const(v) for v in row] for row in X]
    cY = [[vs.const(v) for v in row] for row in Y]
    lhs = vs.zero()
    for cols in combinations(range(n), m):
        dx = det_bareiss([[row[c] for c in cols] for row in cX], vs)
        dy = det_bareiss([[row[c] for c in cols] for row in cY], vs)
        lhs = lhs + dx * dy
    prod = [
        [
            vs.const(sum(X[i][t] * Y[j][t] for t in range(n)))
            for j in range(m)
        ]
        for i in range(m)
    ]
    rhs = det_bareiss(prod, vs)
    return compare("cauchy_binet", params, lhs, rhs, note=f"seeded random entries, seed={seed}")


# -- clearing powers and specializing the first variable ---------------------


def verify_specialization_reduction(
    lam: Partition, n: int, r: int, variant: str
) -> VerificationReport:
    """(x_1...x_n)^r char is a polynomial, and its x_1 = 0 value is the
    same expression one variable down when lam_1 = r, else zero.

    variant "sp" uses the symplectic character; "spo" the orthosymplectic
    character with a single prime variable z.
    """
    if variant not in ("sp", "spo"):
        raise ValueError(f"unknown variant {variant!r}")
    if lam.length > n or lam.part(1) > r:
        raise ValueError("needs len(lam) <= n and lam_1 <= r")
    params = _lam_params(lam, n=n, r=r, variant=variant)
    names = [f"x{i}" for i in range(1, n + 1)] + (["z"] if variant == "spo" else [])
    vs = VariableSet(names)
    xs = [vs.gen(f"x{i}") for i in range(1, n + 1)]

    def char(p: Partition, vars_: list[Poly]) -> Poly:
        if not vars_:
            return vs.one()
        if variant == "sp":
            return symplectic_weyl(p, vars_)
        return ortho_single_y(p, vars_, vs.gen("z"))

    cleared = char(lam, xs)
    for x in xs:
        cleared = cleared * x ** r
    for i in range(1, n + 1):
        if cleared.has_negative_exponent(f"x{i}"):
            return VerificationReport(
                "specialization_reduction",
                params,
                "fail",
                witness={
                    "left": cleared.to_text(),
                    "right": "",
                    "first_diff": f"negative exponent of x{i}",
                },
            )
    specialized = substitute(cleared, "x1", 0)
    if lam.part(1) == r:
        expected = char(lam.drop_first(), xs[1:])
        for x in xs[1:]:
            expected = expected * x ** r
    else:
        expected = vs.zero()
    return compare("specialization_reduction", params, specialized, expected)


# -- rational kernel determinants ---------------------------------------------


def _kernel_vars(n: int) -> tuple[VariableSet, list[Poly], list[Poly], list[Poly], list[Poly], Poly, Poly]:
    names = (
        [f"x{i}" for i in range(1, n + 1)]
        + [f"y{i}" for i in range(1, n + 1)]
        + [f"a{i}" for i in range(1, n + 1)]
        + [f"b{i}" for i in range(1, n + 1)]
        + ["z", "c"]
    )
    vs = VariableSet(names)
    g = vs.gens()
    return vs, g[:n], g[n : 2 * n], g[2 * n : 3 * n], g[3 * n : 4 * n], g[-2], g[-1]


def _kernel_entry(x: Poly, y: Poly, z: Poly, a: Poly, b: Poly, sign: int) -> RationalFunction:
    """p (sign=-1) or q (sign=+1) kernel entry as a rational function."""
    vs = x.vars
    one = vs.one()
    s = vs.const(sign)
    num_xy = (one + s * x * z) * (one + s * y * z) - a * b * (x + s * z) * (y + s * z)
    num_diff = -a * (x + s * z) * (one + s * y * z) + b * (one + s * x * z) * (y + s * z)
    return RationalFunction(num_xy, one - x * y) + RationalFunction(num_diff, x - y)


def verify_kernel_det(n: int, variant: str) -> VerificationReport:
    """Bordered rational kernel determinants against alternant determinants.

    variant "p": the (n+1) x (n+1) matrix of p-kernel entries bordered by
    1 - a_i, 1 - b_j and (1-c)/(1-z^2) equals
    (-1)^n det V / ((1-z^2) prod (x_i - y_j)(1 - x_i y_j)) with V the
    (2n+1) x (2n+1) matrix of rows x_i^(j-1) - a_i x_i^(2n+1-j) and a final
    z-row with c.  variant "q": the plain n x n q-kernel determinant equals
    the same expression without the 1-z^2 factor and with final row
    (-z)^(2n+1-j).  Equality is checked by cross-multiplication.
    """
    if variant not in ("p", "q"):
        raise ValueError(f"unknown variant {variant!r}")
    params = {"n": n, "variant": variant}
    vs, xs, ys, as_, bs, z, c = _kernel_vars(n)
    one = vs.one()
    sign_entry = -1 if variant == "p" else 1
    kernel = [
        [_kernel_entry(xs[i], ys[j], z, as_[i], bs[j], sign_entry) for j in range(n)]
        for i in range(n)
    ]
    big = 2 * n + 1
    if variant == "p":
        rows = [kernel[i] + [RationalFunction(one - as_[i])] for i in range(n)]
        rows.append(
            [RationalFunction(one - bs[j]) for j in range(n)]
            + [RationalFunction(one - c, one - z * z)]
        )
        lhs = det_rational(rows)
        vrows = [
            [xs[i] ** (j - 1) - as_[i] * xs[i] ** (big - j) for j in range(1, big + 1)]
            for i in range(n)
        ]
        vrows += [
            [ys[i] ** (j - 1) - bs[i] * ys[i] ** (big - j) for j in range(1, big + 1)]
            for i in range(n)
        ]
        vrows.append([z ** (j - 1) - c * z ** (big - j) for j in range(1, big + 1)])
        den = one - z * z
    else:
        lhs = det_rational(kernel)
        vrows = [
            [xs[i] ** (j - 1) - as_[i] * xs[i] ** (big - j) for j in range(1, big + 1)]
            for i in range(n)
        ]
        vrows += [
            [ys[i] ** (j - 1) - bs[i] * ys[i] ** (big - j) for j in range(1, big + 1)]
            for i in range(n)
        ]
        vrows.append([(-z) ** (big - j) for j in range(1, big + 1)])
        den = one
    for i in range(n):
        for j in range(n):
            den = den * (xs[i] - ys[j]) * (one - xs[i] * ys[j])
    detv = det_bareiss(vrows, vs)
    rhs = RationalFunction(-detv if n % 2 else detv, den)
    if lhs == rhs:
        return VerificationReport("kernel_det", params, "pass")
    return VerificationReport(
        "kernel_det",
        params,
        "fail",
        witness={
            "left": f"({lhs.num.to_text()}) / ({lhs.den.to_text()})",
            "right": f"({rhs.num.to_text()}) / ({rhs.den.to_text()})",
            "first_diff": first_difference(lhs.num * rhs.den, rhs.num * lhs.den),
        },
    )


# -- product-sum identities ----------------------------------------------------


def _bkw_vars(n: int, m: int) -> tuple[VariableSet, list[Poly], list[Poly], Poly]:
    vs = VariableSet(
        [f"x{i}" for i in range(1, n + 1)] + [f"y{j}" for j in range(1, m + 1)] + ["z"]
    )
    g = vs.gens()
    return vs, g[:n], g[n : n + m], g[-1]


def verify_bkw_general(n: int, m: int, r: int) -> VerificationReport:
    """Sum of z^r spo(X; z) spo(Y; z) over box shapes against a z-graded sum
    of symplectic characters of near-rectangles in the joint alphabet.

    The right side's label with part r - 1 < 0 (only possible at r = 0) is
    treated as absent; at r = 0 both sides collapse to 1.
    """
    if not (1 <= n <= m):
        raise ValueError("needs 1 <= n <= m")
    if r < 0:
        raise ValueError("needs r >= 0")
    params = {"n": n, "m": m, "r": r}
    vs, xs, ys, z = _bkw_vars(n, m)
    lhs = vs.zero()
    for lam in box_partitions(n, r):
        left = ortho_single_y(lam, xs, z)
        right = ortho_single_y(lam.prepend(r, m - n), ys, z)
        lhs = lhs + z ** r * left * right
    rhs = vs.zero()
    skipped = 0
    for j in range(1, m + n + 2):
        tail = m + n + 1 - j
        if r == 0 and tail > 0:
            skipped += 1
            continue
        nu = Partition((r,) * (j - 1) + (r - 1,) * tail)
        rhs = rhs + z ** (r + tail) * symplectic_weyl(nu, xs + ys)
    note = None
    if skipped:
        note = f"r=0: skipped {skipped} right-side labels with a negative part"
    return compare("bkw_general", params, lhs, rhs, note=note)


def verify_bkw_original(n: int, m: int, r: int) -> VerificationReport:
    """Sum of z^-r times products of two odd symplectic characters against a
    single rectangular symplectic character in all m + n + 1 variables."""
    if not (1 <= n <= m):
        raise ValueError("needs 1 <= n <= m")
    if r < 0:
        raise ValueError("needs r >= 0")
    params = {"n": n, "m": m, "r": r}
    vs, xs, ys, z = _bkw_vars(n, m)
    lhs = vs.zero()
    for lam in box_partitions(n + 1, r):
        left = odd_symplectic_det(lam, xs + [z])
        right = odd_symplectic_det(lam.prepend(r, m - n), ys + [z])
        lhs = lhs + z ** (-r) * left * right
    rhs = symplectic_weyl(Partition((r,) * (m + n + 1)), xs + ys + [z])
    return compare("bkw_original", params, lhs, rhs)


# -- pinned worked examples -----------------------------------------------------


GOLDEN_CASES = (
    ("orthosymplectic_det_n1_m2_lam_2.txt", CharacterRequest("orthosymplectic", "det", Partition([2]), 1, 2)),
    ("orthosymplectic_tableau_n1_m2_lam_2.txt", CharacterRequest("orthosymplectic", "tableau", Partition([2]), 1, 2)),
    ("hook_jt_n2_m1_lam_2_1.txt", CharacterRequest("hook", "jt", Partition([2, 1]), 2, 1)),
    ("odd_symplectic_okada_n2_lam_2_1.txt", CharacterRequest("odd_symplectic", "okada", Partition([2, 1]), 2)),
)


def verify_golden() -> list[VerificationReport]:
    """Recompute the pinned worked examples and compare with the stored text."""
    reports = []
    for fname, req in GOLDEN_CASES:
        want = (
            resources.files("ospchar").joinpath("golden").joinpath(fname).read_text().strip()
        )
        got = req.compute().to_text()
        params = {
            "family": req.family,
            "method": req.method,
            "lambda": req.lam.to_string(),
            "n": req.n,
            "m": req.m,
        }
        if got == want:
            reports.append(VerificationReport("golden", params, "pass"))
        else:
            reports.append(
                VerificationReport(
                    "golden",
                    params,
                    "fail",
                    witness={"left": got, "right": want, "first_diff": fname},
                )
            )
    return reports


# -- the full sweep ---------------------------------------------------------------


def run_suite(max_n: int, max_m: int, max_weight: int) -> list[VerificationReport]:
    """Run every identity check over a bounded grid, in deterministic order.

    Character-method agreements sweep all shapes of weight up to max_weight
    for each alphabet; the lemma-style checks run over small grids derived
    from the bounds.  Failures are collected, never raised.
    """
    if max_n < 1 or max_m < 1 or max_weight < 1:
        raise ValueError("bounds must be at least 1")
    reports: list[VerificationReport] = []
    for n in range(1, max_n + 1):
        for m in range(1, max_m + 1):
            for lam in partitions_up_to(max_weight, max_length=n):
                reports.append(verify_ortho_methods(lam, n, m))
    for n in range(1, max_n + 1):
        for m in range(1, max_m + 1):
            for lam in partitions_up_to(max_weight):
                if lam.part(n + 1) <= m:
                    reports.append(verify_hook_methods(lam, n, m))
    for n in range(1, max_n + 1):
        for lam in partitions_up_to(max_weight, max_length=n):
            reports.append(verify_symplectic_methods(lam, n))
            reports.append(verify_odd_methods(lam, n))
    for n in range(2, max_n + 1):
        for lam in partitions_up_to(min(max_weight, 5), max_length=n):
            reports.append(verify_odd_ortho_specialization(lam, n))
    for n in range(1, max_n + 1):
        for m in range(1, max_m + 1):
            for lam in partitions_up_to(min(max_weight, 5)):
                if lam.part(n + 1) <= m:
                    reports.append(verify_supersymmetry(lam, n, m))
    for n in range(1, max_n + 1):
        reports.append(verify_symplectic_denominator(n))
        reports.append(verify_odd_denominator(n))
        for l in range(0, max_weight + 1):
            reports.append(verify_power_product(n, l))
    for lam in box_partitions(min(max_n, 3), min(max_m, 3)):
        reports.append(verify_beta_complement(lam, min(max_n, 3), min(max_m, 3)))
    for mm in range(1, min(max_n, 2) + 1):
        for nn in range(mm, 5):
            reports.append(verify_cauchy_binet(mm, nn, seed=mm * 10 + nn))
    for variant in ("sp", "spo"):
        for n in range(1, min(max_n, 2) + 1):
            for r in range(0, min(max_weight, 3) + 1):
                for lam in box_partitions(n, r):
                    reports.append(verify_specialization_reduction(lam, n, r, variant))
    for variant in ("p", "q"):
        for n in range(1, min(max_n, 2) + 1):
            reports.append(verify_kernel_det(n, variant))
    for n in range(1, min(max_n, 2) + 1):
        for m in range(n, min(max_m, 2) + 1):
            for r in range(0, min(max_weight, 2) + 1):
                reports.append(verify_bkw_general(n, m, r))
    for n, m in ((1, 1), (1, 2)):
        if n <= max_n and m <= max_m:
            for r in range(0, min(max_weight, 2) + 1):
                reports.append(verify_bkw_original(n, m, r))
    reports.extend(verify_golden())
    return reports

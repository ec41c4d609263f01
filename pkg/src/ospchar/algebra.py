"""Exact arithmetic for multivariate Laurent polynomials and rational functions.

A Laurent polynomial is a finite map from exponent vectors (entries may be
negative) to nonzero arbitrary-precision integer coefficients.  The inverse
of a variable is represented by a negative exponent, never by an extra
variable, so the substitution x -> 1/x is total.

Monomials are ordered graded-lexicographically on the exponent vector; since
both sides of a comparison shift by the same amount, the order is insensitive
to the per-variable shift that makes all exponents nonnegative, and it is a
proper monomial order on the shifted vectors.  The order fixes canonical
serialization and the leading-term choice during division.

Determinants: fraction-free (Bareiss) elimination over polynomial entries,
cofactor expansion with common-row-denominator clearing over rational
entries.  Matrix sizes stay in the single digits throughout this package, so
clarity wins over asymptotics.
"""

from __future__ import annotations

from heapq import heapify, heappop, heappush
from operator import add
from typing import Iterable, Sequence


class AlgebraError(ValueError):
    """Base class for arithmetic contract violations."""


class VariableMismatchError(AlgebraError):
    """Operands belong to different variable sets."""


class PoleError(AlgebraError):
    """Substitution of zero into a negative power."""


class ExactDivisionError(AlgebraError):
    """Division was requested but the quotient is not exact."""

    def __init__(self, message: str, remainder: "LaurentPolynomial | None" = None):
        super().__init__(message)
        self.remainder = remainder


def _term_key(exps: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    return (sum(exps), exps)


def _mul_packed(a: dict, b: dict) -> dict:
    """Multiply two term maps by packing exponent vectors into integers.

    Each variable gets a bit field wide enough for the sum of both operands'
    exponent ranges, so monomial products become single integer additions.
    Used only above a size threshold; result is a normalized term map.
    """
    width = len(next(iter(a)))
    if width == 0:
        ca = sum(a.values())
        cb = sum(b.values())
        return {(): ca * cb} if ca * cb else {}
    acols = list(zip(*a))
    bcols = list(zip(*b))
    amin = [min(col) for col in acols]
    bmin = [min(col) for col in bcols]
    spans = [
        max(col_a) - lo_a + max(col_b) - lo_b
        for col_a, lo_a, col_b, lo_b in zip(acols, amin, bcols, bmin)
    ]
    bits = [max(1, s.bit_length()) for s in spans]
    shifts = []
    pos = 0
    for w in reversed(bits):
        shifts.append(pos)
        pos += w
    shifts.reverse()

    def pack(terms, mins):
        packed = {}
        for e, c in terms.items():
            k = 0
            for x, lo, s in zip(e, mins, shifts):
                k |= (x - lo) << s
            packed[k] = c
        return packed

    pa = pack(a, amin)
    pb = pack(b, bmin)
    out: dict[int, int] = {}
    get = out.get
    for k2, c2 in pb.items():
        for k1, c1 in pa.items():
            k = k1 + k2
            nc = get(k, 0) + c1 * c2
            if nc:
                out[k] = nc
            else:
                del out[k]
    offs = [la + lb for la, lb in zip(amin, bmin)]
    masks = [(1 << w) - 1 for w in bits]
    result = {}
    for k, c in out.items():
        result[tuple(((k >> s) & m) + o for s, m, o in zip(shifts, masks, offs))] = c
    return result


class VariableSet:
    """An immutable, ordered collection of distinct variable names."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        names = tuple(str(n) for n in names)
        if len(set(names)) != len(names):
            raise AlgebraError(f"duplicate variable names in {names!r}")
        self.names = names
        self._index = {n: i for i, n in enumerate(names)}

    def __len__(self) -> int:
        return len(self.names)

    def __eq__(self, other) -> bool:
        return isinstance(other, VariableSet) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"VariableSet({list(self.names)!r})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise AlgebraError(f"unknown variable {name!r} in {self.names}") from None

    def zero(self) -> "LaurentPolynomial":
        return LaurentPolynomial._raw(self, {})

    def one(self) -> "LaurentPolynomial":
        return self.const(1)

    def const(self, c: int) -> "LaurentPolynomial":
        if c == 0:
            return self.zero()
        return LaurentPolynomial._raw(self, {(0,) * len(self.names): int(c)})

    def monomial(self, coeff: int, exps: Sequence[int]) -> "LaurentPolynomial":
        return LaurentPolynomial(self, {tuple(exps): coeff})

    def gen(self, name: str) -> "LaurentPolynomial":
        exps = [0] * len(self.names)
        exps[self.index(name)] = 1
        return LaurentPolynomial._raw(self, {tuple(exps): 1})

    def gens(self) -> list["LaurentPolynomial"]:
        return [self.gen(n) for n in self.names]

    def poly(self, terms: dict) -> "LaurentPolynomial":
        return LaurentPolynomial(self, terms)


def union_vars(a: VariableSet, b: VariableSet) -> VariableSet:
    """Variable set with a's names followed by b's new names, in order."""
    if a == b:
        return a
    seen = set(a.names)
    return VariableSet(a.names + tuple(n for n in b.names if n not in seen))


class LaurentPolynomial:
    """Immutable sparse Laurent polynomial with integer coefficients.

    ``terms`` maps exponent tuples (one entry per variable, possibly
    negative) to nonzero coefficients.  Instances are equal iff they have the
    same variable set and identical term maps.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: VariableSet, terms: dict):
        width = len(vars)
        clean: dict[tuple[int, ...], int] = {}
        for exps, coeff in terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != width:
                raise AlgebraError(
                    f"exponent vector {exps} has length {len(exps)}, expected {width}"
                )
            coeff = int(coeff)
            if coeff:
                clean[exps] = clean.get(exps, 0) + coeff
                if not clean[exps]:
                    del clean[exps]
        self.vars = vars
        self.terms = clean

    @classmethod
    def _raw(cls, vars: VariableSet, terms: dict) -> "LaurentPolynomial":
        # Internal fast path: terms must already be normalized.
        self = object.__new__(cls)
        self.vars = vars
        self.terms = terms
        return self

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * len(self.vars): 1}

    def is_unit_monomial(self) -> bool:
        """True for c*x^e with c = +-1, the units of the Laurent ring."""
        if len(self.terms) != 1:
            return False
        return next(iter(self.terms.values())) in (1, -1)

    def depends_on(self, name: str) -> bool:
        idx = self.vars.index(name)
        return any(e[idx] for e in self.terms)

    def has_negative_exponent(self, name: str | None = None) -> bool:
        if name is None:
            return any(x < 0 for e in self.terms for x in e)
        idx = self.vars.index(name)
        return any(e[idx] < 0 for e in self.terms)

    # -- ring operations ----------------------------------------------

    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            if other.vars != self.vars:
                raise VariableMismatchError(
                    f"operands use different variables: {self.vars.names} vs {other.vars.names}"
                )
            return other
        if isinstance(other, int):
            return self.vars.const(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.vars.const(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.vars, frozenset(self.terms.items())))

    def __add__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for e, c in other.terms.items():
            nc = out.get(e, 0) + c
            if nc:
                out[e] = nc
            else:
                del out[e]
        return LaurentPolynomial._raw(self.vars, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return self.vars.zero()
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (e2, c2), = b.items()
            if not any(e2):
                return LaurentPolynomial._raw(
                    self.vars, {e: c * c2 for e, c in a.items()}
                )
            return LaurentPolynomial._raw(
                self.vars,
                {tuple(map(add, e, e2)): c * c2 for e, c in a.items()},
            )
        if len(a) * len(b) > 256:
            return LaurentPolynomial._raw(self.vars, _mul_packed(a, b))
        out: dict[tuple[int, ...], int] = {}
        get = out.get
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = tuple(map(add, e1, e2))
                nc = get(e, 0) + c1 * c2
                if nc:
                    out[e] = nc
                else:
                    del out[e]
        return LaurentPolynomial._raw(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPolynomial":
        if n < 0:
            return self.inverse() ** (-n)
        if len(self.terms) == 1:
            (e, c), = self.terms.items()
            return LaurentPolynomial._raw(
                self.vars, {tuple(x * n for x in e): c ** n}
            )
        result = self.vars.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def inverse(self) -> "LaurentPolynomial":
        """Inverse of a unit monomial; anything else has no Laurent inverse."""
        if not self.is_unit_monomial():
            raise AlgebraError(f"not invertible in the Laurent ring: {self.to_text()}")
        (e, c), = self.terms.items()
        return LaurentPolynomial._raw(self.vars, {tuple(-x for x in e): c})

    def shift(self, offsets: Sequence[int]) -> "LaurentPolynomial":
        """Multiply by the monomial with the given exponent vector."""
        offsets = tuple(offsets)
        return LaurentPolynomial._raw(
            self.vars, {tuple(map(add, e, offsets)): c for e, c in self.terms.items()}
        )

    def min_exponents(self) -> tuple[int, ...]:
        """Per-variable minimum exponent over all terms (zero polynomial: all 0)."""
        if not self.terms:
            return (0,) * len(self.vars)
        cols = zip(*self.terms)
        return tuple(min(col) for col in cols)

    # -- serialization ------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items(), key=lambda t: _term_key(t[0]), reverse=True)

    def to_text(self) -> str:
        """Canonical text form, terms in decreasing monomial order."""
        if not self.terms:
            return "0"
        names = self.vars.names
        pieces = []
        for i, (exps, coeff) in enumerate(self.sorted_terms()):
            factors = [f"{n}^{e}" if e != 1 else n for n, e in zip(names, exps) if e]
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if i == 0:
                pieces.append(body if coeff > 0 else "-" + body)
            else:
                pieces.append((" + " if coeff > 0 else " - ") + body)
        return "".join(pieces)

    def to_json_dict(self) -> dict:
        return {
            "vars": list(self.vars.names),
            "terms": [
                {"c": str(c), "e": list(e)} for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "LaurentPolynomial":
        vs = VariableSet(data["vars"])
        return cls(vs, {tuple(t["e"]): int(t["c"]) for t in data["terms"]})

    def __repr__(self) -> str:
        return f"<{self.to_text()}>"


def embed(p: LaurentPolynomial, target: VariableSet) -> LaurentPolynomial:
    """Re-express p in a variable set containing all of p's names."""
    if p.vars == target:
        return p
    positions = [target.index(n) for n in p.vars.names]
    width = len(target)
    out = {}
    for e, c in p.terms.items():
        ne = [0] * width
        for pos, x in zip(positions, e):
            ne[pos] = x
        out[tuple(ne)] = c
    return LaurentPolynomial._raw(target, out)


def substitute(
    p: LaurentPolynomial,
    name: str,
    value: "LaurentPolynomial | int",
    vars: VariableSet | None = None,
) -> LaurentPolynomial:
    """Exact substitution of ``value`` for the variable ``name`` in ``p``.

    The result lives in ``vars`` when given, otherwise in p's own set (when
    the value introduces no new names) or in the union of both sets.
    Substituting 0 into a negative power raises PoleError; raising a
    non-unit value to a negative power is not representable and raises.
    """
    idx = p.vars.index(name)
    if isinstance(value, int):
        value = p.vars.const(value)
    if vars is None:
        if set(value.vars.names) <= set(p.vars.names):
            target = p.vars
        else:
            target = union_vars(p.vars, value.vars)
    else:
        target = vars
    value_t = embed(value, target)
    if value_t.is_zero():
        if p.has_negative_exponent(name):
            raise PoleError(f"pole at zero: substituting 0 for {name}")
        kept = {e: c for e, c in p.terms.items() if e[idx] == 0}
        return embed(LaurentPolynomial._raw(p.vars, kept), target)
    powers: dict[int, LaurentPolynomial] = {}
    result = target.zero()
    for e, c in p.terms.items():
        k = e[idx]
        if k not in powers:
            powers[k] = value_t ** k
        base = list(e)
        base[idx] = 0
        mono = embed(LaurentPolynomial._raw(p.vars, {tuple(base): c}), target)
        result = result + mono * powers[k]
    return result


def exact_div(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    """Quotient q with q*b == a, verified; raises ExactDivisionError otherwise.

    Both operands are shifted so every exponent is nonnegative, the shifted
    polynomials are divided by ordinary multivariate long division, and the
    quotient is shifted back.  Per-variable minimum exponents are additive
    over products, so the back-shift is exact whenever the division is.
    """
    if a.vars != b.vars:
        raise VariableMismatchError("exact_div operands use different variables")
    if b.is_zero():
        raise ExactDivisionError("division by the zero polynomial")
    if a.is_zero():
        return a.vars.zero()
    amin = a.min_exponents()
    bmin = b.min_exponents()
    A = a.shift(tuple(-x for x in amin))
    B = b.shift(tuple(-x for x in bmin))

    # Pack shifted exponent vectors as [total degree | e_1 | ... | e_k] bit
    # fields, so integer comparison is exactly the graded-lex term order.
    # With that order the leading monomial strictly decreases during the
    # division loop and every intermediate monomial keeps total degree at
    # most max(deg A, deg B), so the shared field width never overflows.
    width = len(a.vars)
    dmax = max(
        max(sum(e) for e in A.terms), max(sum(e) for e in B.terms), 1
    )
    w = dmax.bit_length()
    mask = (1 << w) - 1
    shifts = [(width - 1 - v) * w for v in range(width)]  # degree field above all

    def pack(e: tuple[int, ...]) -> int:
        k = sum(e) << (width * w)
        for x, s in zip(e, shifts):
            k |= x << s
        return k

    def unpack(k: int) -> tuple[int, ...]:
        return tuple((k >> s) & mask for s in shifts)

    rem = {pack(e): c for e, c in A.terms.items()}
    bpacked = sorted((pack(e), c) for e, c in B.terms.items())
    btop, btop_c = bpacked[-1]
    heap = [-k for k in rem]
    heapify(heap)
    q: dict[int, int] = {}
    while rem:
        k = -heappop(heap)
        rc = rem.get(k)
        if rc is None:
            continue
        if any((k >> s) & mask < (btop >> s) & mask for s in shifts) or rc % btop_c:
            witness = LaurentPolynomial(
                a.vars, {unpack(kk): cc for kk, cc in rem.items()}
            ).shift(amin)
            raise ExactDivisionError(
                f"inexact division, remainder {witness.to_text()}", remainder=witness
            )
        qk = k - btop
        qc = rc // btop_c
        q[qk] = qc
        # the btop term cancels k exactly; every other key is strictly
        # smaller, so pushing (possibly duplicate) heap entries is safe
        for bk, bc in bpacked:
            e = qk + bk
            nc = rem.get(e, 0) - qc * bc
            if nc:
                rem[e] = nc
                heappush(heap, -e)
            else:
                del rem[e]
    offset = tuple(x - y for x, y in zip(amin, bmin))
    quot = LaurentPolynomial._raw(
        a.vars, {unpack(k): c for k, c in q.items()}
    ).shift(offset)
    if quot * b != a:
        raise ExactDivisionError("division self-check failed", remainder=None)
    return quot


class RationalFunction:
    """Quotient of two Laurent polynomials; the denominator is nonzero.

    There is no canonical gcd reduction: equality is decided by
    cross-multiplication.  Addition reuses a shared denominator when the two
    denominators are equal, and multiplication cancels when one operand's
    numerator equals the other's denominator; both shortcuts only ever pick a
    different representative of the same fraction.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPolynomial, den: LaurentPolynomial | None = None):
        if den is None:
            den = num.vars.one()
        if num.vars != den.vars:
            raise VariableMismatchError("numerator and denominator variables differ")
        if den.is_zero():
            raise AlgebraError("zero denominator")
        if num.is_zero():
            den = num.vars.one()
        self.num = num
        self.den = den

    @property
    def vars(self) -> VariableSet:
        return self.num.vars

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, LaurentPolynomial):
            return RationalFunction(other)
        if isinstance(other, int):
            return RationalFunction(self.vars.const(other))
        return NotImplemented

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __add__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RationalFunction(self.vars.zero())
        if self.den == other.num:
            return RationalFunction(self.num, other.den)
        if self.num == other.den:
            return RationalFunction(other.num, self.den)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def reciprocal(self) -> "RationalFunction":
        if self.is_zero():
            raise AlgebraError("reciprocal of zero")
        return RationalFunction(self.den, self.num)

    def to_laurent(self) -> LaurentPolynomial:
        """Exact quotient as a Laurent polynomial; raises if not exact."""
        return exact_div(self.num, self.den)

    def __repr__(self) -> str:
        return f"<({self.num.to_text()}) / ({self.den.to_text()})>"


# -- determinants -----------------------------------------------------


def _det_vars(rows, vars):
    if rows:
        return rows[0][0].vars
    if vars is None:
        raise AlgebraError("0x0 determinant needs an explicit variable set")
    return vars


def det_bareiss(
    rows: Sequence[Sequence[LaurentPolynomial]], vars: VariableSet | None = None
) -> LaurentPolynomial:
    """Fraction-free determinant of a square Laurent polynomial matrix.

    Every division along the way is exact (by the previous pivot); the empty
    matrix has determinant 1.
    """
    vs = _det_vars(rows, vars)
    n = len(rows)
    if n == 0:
        return vs.one()
    m = [list(row) for row in rows]
    if any(len(row) != n for row in m):
        raise AlgebraError("matrix is not square")
    sign = 1
    prev = vs.one()
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return vs.zero()
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = exact_div(pivot * m[i][j] - m[i][k] * m[k][j], prev)
        prev = pivot
    d = m[n - 1][n - 1]
    return -d if sign < 0 else d


def det_cofactor(rows: Sequence[Sequence], vars: VariableSet | None = None):
    """Determinant by first-row expansion, memoized on column subsets.

    Works over any entry type supporting +, *, unary - and is_zero(); used
    directly on polynomial matrices and, through det_rational, on matrices of
    rational functions.
    """
    vs = _det_vars(rows, vars)
    n = len(rows)
    if n == 0:
        return vs.one()
    if any(len(row) != n for row in rows):
        raise AlgebraError("matrix is not square")
    zero = vs.zero()
    memo: dict[tuple[int, ...], object] = {(): vs.one()}

    def minor(r: int, cols: tuple[int, ...]):
        got = memo.get(cols)
        if got is not None:
            return got
        row = rows[r]
        acc = None
        for t, c in enumerate(cols):
            entry = row[c]
            if entry.is_zero():
                continue
            term = entry * minor(r + 1, cols[:t] + cols[t + 1 :])
            if t & 1:
                term = -term
            acc = term if acc is None else acc + term
        if acc is None:
            acc = zero
        memo[cols] = acc
        return acc

    return minor(0, tuple(range(n)))


def det_rational(rows: Sequence[Sequence[RationalFunction]]) -> RationalFunction:
    """Determinant of a matrix of rational functions.

    Each row is first put over a single denominator (the product of its
    distinct entry denominators), which by row-linearity factors out of the
    determinant; the remaining polynomial matrix is expanded by cofactors.
    """
    n = len(rows)
    if n == 0:
        raise AlgebraError("0x0 rational determinant needs no clearing; use det_cofactor")
    vs = rows[0][0].vars
    one = vs.one()
    cleared: list[list[LaurentPolynomial]] = []
    denprod = one
    for row in rows:
        if len(row) != n:
            raise AlgebraError("matrix is not square")
        distinct: list[LaurentPolynomial] = []
        for entry in row:
            if not entry.den.is_one() and all(entry.den != d for d in distinct):
                distinct.append(entry.den)
        mult = one
        for d in distinct:
            mult = mult * d
        cleared.append(
            [
                e.num if e.den == mult else e.num * exact_div(mult, e.den)
                for e in row
            ]
        )
        denprod = denprod * mult
    return RationalFunction(det_cofactor(cleared, vs), denprod)


class SquareMatrix:
    """Square matrix over one ring: Laurent polynomials or rational functions.

    det() picks the evaluation strategy from the entry type: Bareiss for
    polynomial entries, cofactor expansion with denominator clearing for
    rational ones.
    """

    __slots__ = ("entries", "vars", "size")

    def __init__(self, entries: Sequence[Sequence], vars: VariableSet | None = None):
        rows = [list(r) for r in entries]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise AlgebraError("matrix is not square")
        kinds = {type(e) for row in rows for e in row}
        if kinds - {LaurentPolynomial, RationalFunction}:
            raise AlgebraError(f"unsupported entry types: {kinds}")
        if kinds == {LaurentPolynomial, RationalFunction}:
            rows = [
                [e if isinstance(e, RationalFunction) else RationalFunction(e) for e in row]
                for row in rows
            ]
        self.entries = rows
        self.size = n
        self.vars = _det_vars(rows, vars)

    def __getitem__(self, ij: tuple[int, int]):
        return self.entries[ij[0]][ij[1]]

    def transpose(self) -> "SquareMatrix":
        return SquareMatrix(
            [[self.entries[j][i] for j in range(self.size)] for i in range(self.size)],
            self.vars,
        )

    def det(self):
        if self.size == 0:
            return self.vars.one()
        if isinstance(self.entries[0][0], RationalFunction):
            return det_rational(self.entries)
        return det_bareiss(self.entries, self.vars)

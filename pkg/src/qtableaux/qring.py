"""Exact Laurent polynomial arithmetic in one variable q.

Coefficients are Python ints (arbitrary precision), exponents may be
negative.  A polynomial is a finite map from exponent to nonzero
coefficient; the empty map is 0 and every value has exactly one stored
representation.  Instances are immutable, so they can be shared freely
between concurrent evaluations.

The brackets of the q-world live here as well:

* ``angle_bracket(i)`` is q^i - q^-i, with the convention that index 0
  gives the constant 1 (not q^0 - q^0 = 0) — every ratio formula in the
  character module consumes index 0 only through this convention;
* ``angle_factorial(i)`` is the product of angle brackets 1..i;
* ``square_bracket(i)`` is q^i - 1.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

PolyLike = Union["LaurentPoly", int]


class InexactDivision(ArithmeticError):
    """Polynomial division left a remainder.

    The ratio formulas in this library are provably exact, so this firing
    signals an implementation bug, never a user error.
    """


class LaurentPoly:
    """An element of Z[q, q^-1] in canonical form (no zero coefficients)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | int = 0):
        if isinstance(terms, int):
            terms = {0: terms}
        clean = {}
        for e, c in terms.items():
            if not isinstance(e, int) or not isinstance(c, int):
                raise TypeError(f"exponents and coefficients must be int, got {e!r}: {c!r}")
            if c:
                clean[e] = c
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- inspection ---------------------------------------------------------

    def terms(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs, exponent ascending."""
        return sorted(self._terms.items())

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no exponents")
        return min(self._terms)

    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no exponents")
        return max(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(other: PolyLike) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: PolyLike) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: PolyLike) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: PolyLike) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: PolyLike) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other: PolyLike) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return exact_div(self, other)

    def shift(self, exponent: int) -> "LaurentPoly":
        """Multiply by the monomial q^exponent."""
        return LaurentPoly({e + exponent: c for e, c in self._terms.items()})

    def substitute_inverse(self) -> "LaurentPoly":
        """The image under q -> q^-1 (an involution)."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def eval_at_one(self) -> int:
        """Value at q = 1, i.e. the coefficient sum."""
        return sum(self._terms.values())

    # -- serialisation ------------------------------------------------------

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPoly":
        return cls({exponent: coefficient})

    def to_pairs(self) -> list[list]:
        """JSON form: [exponent, coefficient-as-decimal-string] pairs,
        exponent ascending."""
        return [[e, str(c)] for e, c in self.terms()]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence]) -> "LaurentPoly":
        out: dict[int, int] = {}
        for e, c in pairs:
            e = int(e)
            if e in out:
                raise ValueError(f"duplicate exponent {e}")
            out[e] = int(c)
        return cls(out)

    # -- comparisons and display --------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        # Constants compare equal to ints, so they must hash like ints.
        if not self._terms:
            return hash(0)
        if len(self._terms) == 1 and 0 in self._terms:
            return hash(self._terms[0])
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for e, c in self.terms():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            sign = "-" if c < 0 else "+"
            chunks.append((sign, body))
        first_sign, first_body = chunks[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in chunks[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self.terms())!r})"


ZERO = LaurentPoly()
ONE = LaurentPoly(1)
Q = LaurentPoly.monomial(1)


@lru_cache(maxsize=None)
def angle_bracket(i: int) -> LaurentPoly:
    """q^i - q^-i for i >= 1; the constant 1 for i = 0 by convention."""
    if i < 0:
        raise ValueError(f"angle bracket index must be non-negative, got {i}")
    if i == 0:
        return ONE
    return LaurentPoly({i: 1, -i: -1})


@lru_cache(maxsize=None)
def angle_factorial(i: int) -> LaurentPoly:
    """Product of angle_bracket(1) .. angle_bracket(i); 1 when i = 0."""
    if i < 0:
        raise ValueError(f"factorial index must be non-negative, got {i}")
    if i == 0:
        return ONE
    return angle_factorial(i - 1) * angle_bracket(i)


def square_bracket(i: int) -> LaurentPoly:
    """q^i - 1 for positive i; vanishes at q = 1, so divide before evaluating."""
    if i < 1:
        raise ValueError(f"square bracket index must be positive, got {i}")
    return LaurentPoly({i: 1, 0: -1})


def exact_div(num: PolyLike, den: PolyLike) -> LaurentPoly:
    """Divide exactly in Z[q, q^-1], raising InexactDivision on a remainder.

    Both arguments are shifted to non-negative exponents, divided as
    ordinary integer polynomials, and the quotient shifted back.  A leading
    coefficient that fails to divide also means the quotient does not exist
    over the integers, so it raises too.
    """
    num = LaurentPoly._coerce(num)
    den = LaurentPoly._coerce(den)
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return ZERO
    na, nb = num.min_exp(), num.max_exp()
    da, db = den.min_exp(), den.max_exp()
    ncoeffs = [num.coefficient(e) for e in range(na, nb + 1)]
    dcoeffs = [den.coefficient(e) for e in range(da, db + 1)]
    if len(ncoeffs) < len(dcoeffs):
        raise InexactDivision(f"({num}) is not divisible by ({den})")
    lead = dcoeffs[-1]
    rem = list(ncoeffs)
    quot = [0] * (len(ncoeffs) - len(dcoeffs) + 1)
    for k in range(len(quot) - 1, -1, -1):
        top = rem[k + len(dcoeffs) - 1]
        if top == 0:
            continue
        if top % lead:
            raise InexactDivision(f"({num}) is not divisible by ({den})")
        c = top // lead
        quot[k] = c
        for t, d in enumerate(dcoeffs):
            rem[k + t] -= c * d
    if any(rem):
        raise InexactDivision(f"({num}) is not divisible by ({den})")
    base = na - da
    return LaurentPoly({base + k: c for k, c in enumerate(quot) if c})


def determinant(matrix: Sequence[Sequence[PolyLike]]) -> LaurentPoly:
    """Exact determinant of a square matrix of Laurent polynomials.

    Cofactor expansion up to 4x4, fraction-free elimination above that; the
    two paths agree and the test suite holds them to it.  The empty matrix
    has determinant 1.
    """
    n = len(matrix)
    rows = []
    for row in matrix:
        if len(row) != n:
            raise ValueError(f"matrix is not square: {n} rows, a row of length {len(row)}")
        rows.append([LaurentPoly._coerce(x) for x in row])
    if n == 0:
        return ONE
    if n <= 4:
        return _det_cofactor(rows)
    return _det_bareiss(rows)


def _det_cofactor(rows: list[list[LaurentPoly]]) -> LaurentPoly:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = ZERO
    for j, pivot in enumerate(rows[0]):
        if pivot.is_zero():
            continue
        minor = [[r[t] for t in range(n) if t != j] for r in rows[1:]]
        term = pivot * _det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _det_bareiss(rows: list[list[LaurentPoly]]) -> LaurentPoly:
    # One-step fraction-free elimination: every division below is exact by
    # construction (the quotients are minors of the original matrix).
    n = len(rows)
    a = [list(r) for r in rows]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            for r in range(k + 1, n):
                if not a[r][k].is_zero():
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev)
            a[i][k] = ZERO
        prev = a[k][k]
    result = a[n - 1][n - 1]
    return result if sign == 1 else -result

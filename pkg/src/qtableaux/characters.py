"""Character specialisations of the classical families, by independent routes.

Each character is evaluated at one specific geometric point, which turns it
into a single Laurent polynomial in q whose value at q = 1 is the module
dimension:

    GL(n)    x_j = q^(j-1)          statistic |T| - r,     r = box count
    Sp(2n)   x_j = q^(2j-1)         statistic 2|T| - r(T)
    O(2n+1)  x_j = q^(2j)           statistic 2|T|
    O(2n)    x_j = q^(2j-1)         statistic 2|T| - r(T)
    SO(2n)   x_j = q^(2(j-1))       (shapes with exactly n parts only)

where |T| sums entries with barred symbols negative and inf as zero, and
r(T) counts unbarred minus barred boxes.  The same polynomial is reachable
four ways — summing the statistic over enumerated tableaux, a ratio of
determinants, a hook/content product over the boxes, and a closed product
over the shifted part vector mu — and the verify sweep holds all routes to
exact equality.

Divisions are always performed as one full numerator product divided by one
full denominator product, so they are exact whenever the mathematics says
they are; InexactDivision here means a bug, not bad input.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .qring import (
    ONE,
    LaurentPoly,
    angle_bracket,
    angle_factorial,
    determinant,
    exact_div,
    square_bracket,
)
from .shapes import Partition, TooFewRows, b_stat, content_gl, content_o, content_sp, hook_length, mu_vector
from .tableaux import BOTH, NEGATIVE, POSITIVE, Family, ShapeNotFull, Stats, classify_even, enumerate_tableaux

ROUTE_ENUMERATION = "enumeration"
ROUTE_DETERMINANT = "determinant"
ROUTE_PRODUCT = "product"
ROUTE_MU = "mu"


class UnsupportedRoute(ValueError):
    """The requested evaluation route does not exist for this family."""


class NonIntegerDimension(ArithmeticError):
    """A closed-form dimension came out fractional; signals a formula bug."""


@dataclass(frozen=True)
class CharResult:
    """A character specialisation plus how it was computed."""

    family: Family
    shape: Partition
    n: int
    route: str
    poly: LaurentPoly

    @property
    def dimension(self) -> int:
        return self.poly.eval_at_one()

    def to_json(self) -> dict:
        return {
            "family": self.family.value,
            "shape": list(self.shape.parts),
            "n": self.n,
            "route": self.route,
            "poly": self.poly.to_pairs(),
            "dimension": str(self.dimension),
        }


def statistic_exponent(family: Family, st: Stats) -> int:
    """Exponent of q contributed by one tableau to its family's character."""
    if family is Family.GL:
        return st.entry_sum - st.r
    if family in (Family.SP, Family.EVEN_O):
        return 2 * st.entry_sum - st.r
    if family is Family.ODD_O:
        return 2 * st.entry_sum
    raise UnsupportedRoute(f"no tableau statistic for family {family}")


def _require_rows(lam: Partition, n: int) -> None:
    if n < lam.length:
        raise TooFewRows(f"n={n} is smaller than the {lam.length} parts of {lam.parts}")


def char_enumeration(family: Family, lam: Partition, n: int) -> CharResult:
    """Sum the statistic monomial over all tableaux of the family."""
    if family is Family.SO_EVEN:
        raise UnsupportedRoute("the SO split has no tableau generating function route")
    _require_rows(lam, n)
    exponents = Counter(statistic_exponent(family, t.stats()) for t in enumerate_tableaux(family, lam, n))
    return CharResult(family, lam, n, ROUTE_ENUMERATION, LaurentPoly(dict(exponents)))


def _minus_entry(e: int) -> LaurentPoly:
    return LaurentPoly({e: 1, -e: -1})


def _plus_entry(e: int) -> LaurentPoly:
    # e = 0 correctly gives the constant 2 here.
    return LaurentPoly.monomial(e) + LaurentPoly.monomial(-e)


def char_determinant(family: Family, lam: Partition, n: int) -> CharResult:
    """Ratio of the two n x n specialised alternants.

    The numerator uses the shifted parts mu_i = lam_i + n - i, the
    denominator the same matrix for the empty shape.  In the even
    orthogonal case with exactly n parts the character carries an extra
    factor 2, which is applied to the numerator *before* dividing: the
    undoubled ratio is a half-integer polynomial there, so dividing first
    would not stay in Z[q, q^-1].
    """
    if family not in (Family.SP, Family.ODD_O, Family.EVEN_O):
        raise UnsupportedRoute(f"no determinant route for family {family}")
    _require_rows(lam, n)
    mu = mu_vector(lam, n)
    mu0 = mu_vector(Partition(), n)

    def matrix(vec: tuple[int, ...]) -> list[list[LaurentPoly]]:
        out = []
        for m in vec:
            if family is Family.SP:
                row = [_minus_entry((2 * j - 1) * (m + 1)) for j in range(1, n + 1)]
            elif family is Family.ODD_O:
                row = [_minus_entry(j * (2 * m + 1)) for j in range(1, n + 1)]
            else:
                row = [_plus_entry((2 * j - 1) * m) for j in range(1, n + 1)]
            out.append(row)
        return out

    num = determinant(matrix(mu))
    den = determinant(matrix(mu0))
    if family is Family.EVEN_O and lam.length == n:
        num = 2 * num
    return CharResult(family, lam, n, ROUTE_DETERMINANT, exact_div(num, den))


def hook_product(lam: Partition, n: int) -> LaurentPoly:
    """Product of angle brackets of all hook lengths of the shape."""
    _require_rows(lam, n)
    return prod((angle_bracket(hook_length(lam, c)) for c in lam.cells()), start=ONE)


def content_product(family: Family, lam: Partition, n: int) -> LaurentPoly:
    """Product of angle brackets of the shifted contents of the shape."""
    _require_rows(lam, n)
    if family is Family.SP:
        return prod((angle_bracket(2 * n + content_sp(lam, c)) for c in lam.cells()), start=ONE)
    if family is Family.ODD_O:
        return prod((angle_bracket(2 * n + 1 + content_o(lam, c)) for c in lam.cells()), start=ONE)
    if family is Family.EVEN_O:
        return prod((angle_bracket(2 * n + content_o(lam, c)) for c in lam.cells()), start=ONE)
    raise UnsupportedRoute(f"no bracket content product for family {family}")


def char_product(family: Family, lam: Partition, n: int) -> CharResult:
    """The hook-content form: shifted-content product over hook product."""
    _require_rows(lam, n)
    if family is Family.GL:
        num = prod((square_bracket(n + content_gl(c)) for c in lam.cells()), start=ONE)
        den = prod((square_bracket(hook_length(lam, c)) for c in lam.cells()), start=ONE)
        poly = exact_div(num, den).shift(b_stat(lam))
    elif family in (Family.SP, Family.ODD_O, Family.EVEN_O):
        poly = exact_div(content_product(family, lam, n), hook_product(lam, n))
    else:
        raise UnsupportedRoute(f"no hook-content route for family {family}")
    return CharResult(family, lam, n, ROUTE_PRODUCT, poly)


def char_mu_formula(family: Family, lam: Partition, n: int) -> CharResult:
    """Closed form over the shifted part vector mu (index 0 brackets are 1)."""
    if family not in (Family.SP, Family.ODD_O, Family.EVEN_O):
        raise UnsupportedRoute(f"no closed mu form for family {family}")
    _require_rows(lam, n)
    mu = mu_vector(lam, n)
    num: list[LaurentPoly] = []
    den: list[LaurentPoly] = []
    if family is Family.SP:
        num += [angle_bracket(m + 1) for m in mu]
        num += [angle_bracket(mu[i] - mu[j]) * angle_bracket(mu[i] + mu[j] + 2) for i in range(n) for j in range(i + 1, n)]
        den += [angle_factorial(2 * i - 1) for i in range(1, n + 1)]
    elif family is Family.ODD_O:
        num += [angle_bracket(2 * m + 1) for m in mu]
        num += [angle_bracket(mu[i] - mu[j]) * angle_bracket(mu[i] + mu[j] + 1) for i in range(n) for j in range(i + 1, n)]
        den += [angle_factorial(2 * i - 1) for i in range(1, n + 1)]
    else:
        num += [angle_bracket(2 * m) for m in mu]
        num += [angle_bracket(mu[i] - mu[j]) * angle_bracket(mu[i] + mu[j]) for i in range(n) for j in range(i + 1, n)]
        den += [angle_bracket(m) for m in mu]
        den += [angle_factorial(2 * i) for i in range(1, n)]
    poly = exact_div(prod(num, start=ONE), prod(den, start=ONE))
    return CharResult(family, lam, n, ROUTE_MU, poly)


def hook_product_mu_form(lam: Partition, n: int) -> LaurentPoly:
    """The hook product rewritten over mu: prod <mu_i>! / prod_{i<j} <mu_i - mu_j>."""
    mu = mu_vector(lam, n)
    num = prod((angle_factorial(m) for m in mu), start=ONE)
    den = prod(
        (angle_bracket(mu[i] - mu[j]) for i in range(n) for j in range(i + 1, n)),
        start=ONE,
    )
    return exact_div(num, den)


def content_product_mu_form(family: Family, lam: Partition, n: int) -> LaurentPoly:
    """The shifted-content products rewritten over mu, per family."""
    mu = mu_vector(lam, n)
    num: list[LaurentPoly] = []
    den: list[LaurentPoly] = []
    if family is Family.SP:
        num += [angle_factorial(m + 1) for m in mu]
        num += [angle_bracket(mu[i] + mu[j] + 2) for i in range(n) for j in range(i + 1, n)]
        den += [angle_factorial(2 * i - 1) for i in range(1, n + 1)]
    elif family is Family.ODD_O:
        num += [angle_factorial(m) for m in mu]
        num += [angle_bracket(mu[i] + mu[j] + 1) for i in range(n) for j in range(i, n)]
        den += [angle_factorial(2 * i - 1) for i in range(1, n + 1)]
    elif family is Family.EVEN_O:
        num += [angle_factorial(m) for m in mu]
        num += [angle_bracket(mu[i] + mu[j]) for i in range(n) for j in range(i, n)]
        den += [angle_bracket(m) for m in mu]
        den += [angle_factorial(2 * i) for i in range(1, n)]
    else:
        raise UnsupportedRoute(f"no content product for family {family}")
    return exact_div(prod(num, start=ONE), prod(den, start=ONE))


def so_char(lam: Partition, n: int) -> CharResult:
    """The SO(2n) specialisation at x_j = q^(2(j-1)) for a full shape.

    At that point the two alternants in the plus/minus characters collapse
    to the same ratio, so both restricted characters share this polynomial;
    its value at q = 1 is the common dimension of the split pieces.
    """
    if lam.length != n:
        raise ShapeNotFull(f"the SO split needs exactly n={n} parts, got {lam.length}")
    mu = mu_vector(lam, n)
    num = prod(
        (angle_bracket(mu[i] - mu[j]) * angle_bracket(mu[i] + mu[j]) for i in range(n) for j in range(i + 1, n)),
        start=ONE,
    )
    den = prod((angle_factorial(2 * i - 1) * angle_bracket(i) for i in range(1, n)), start=ONE)
    return CharResult(Family.SO_EVEN, lam, n, ROUTE_PRODUCT, exact_div(num, den))


def so_char_alternate(lam: Partition, n: int) -> LaurentPoly:
    """Cross-check form of the SO specialisation: the even orthogonal
    hook-content product times prod <2i>/<i> (i < n) times prod <mu_i>/<2mu_i>.

    Cancelling <2i>!/<2i> = <2i-1>! shows this equals ``so_char`` exactly,
    and the verify sweep asserts it does.
    """
    if lam.length != n:
        raise ShapeNotFull(f"the SO split needs exactly n={n} parts, got {lam.length}")
    mu = mu_vector(lam, n)
    num: list[LaurentPoly] = [angle_bracket(2 * i) for i in range(1, n)]
    num += [angle_bracket(m) for m in mu]
    num += [angle_bracket(2 * n + content_o(lam, c)) for c in lam.cells()]
    den: list[LaurentPoly] = [angle_bracket(i) for i in range(1, n)]
    den += [angle_bracket(2 * m) for m in mu]
    den += [angle_bracket(hook_length(lam, c)) for c in lam.cells()]
    return exact_div(prod(num, start=ONE), prod(den, start=ONE))


def d_so(lam: Partition, n: int) -> int:
    """Half the even orthogonal dimension; the size of each split piece."""
    if lam.length != n:
        raise ShapeNotFull(f"the SO split needs exactly n={n} parts, got {lam.length}")
    total = Fraction(1, 2)
    for c in lam.cells():
        total *= Fraction(2 * n + content_o(lam, c), hook_length(lam, c))
    if total.denominator != 1:
        raise NonIntegerDimension(f"half of the O({2 * n}) dimension of {lam.parts} is not an integer")
    return int(total)


def dimension(family: Family, lam: Partition, n: int) -> int:
    """Exact closed-form tableau count (the character at q = 1)."""
    total = Fraction(1)
    if family is Family.GL:
        factors = ((n + content_gl(c), hook_length(lam, c)) for c in lam.cells())
    elif family is Family.SP:
        _require_rows(lam, n)
        factors = ((2 * n + content_sp(lam, c), hook_length(lam, c)) for c in lam.cells())
    elif family is Family.ODD_O:
        _require_rows(lam, n)
        factors = ((2 * n + 1 + content_o(lam, c), hook_length(lam, c)) for c in lam.cells())
    elif family is Family.EVEN_O:
        _require_rows(lam, n)
        factors = ((2 * n + content_o(lam, c), hook_length(lam, c)) for c in lam.cells())
    else:
        raise UnsupportedRoute(f"no hook-content dimension for family {family}")
    for num, den in factors:
        total *= Fraction(num, den)
    if total.denominator != 1:
        raise NonIntegerDimension(f"dimension of {family} shape {lam.parts} at n={n} is not an integer")
    return int(total)


def split_counts(lam: Partition, n: int) -> tuple[int, int]:
    """(#positive, #negative) over the even orthogonal tableaux of a full
    shape; tableaux classified as both count towards each side."""
    pos = 0
    neg = 0
    for t in enumerate_tableaux(Family.EVEN_O, lam, n):
        cls = classify_even(t)
        if cls in (POSITIVE, BOTH):
            pos += 1
        if cls in (NEGATIVE, BOTH):
            neg += 1
    return pos, neg


_ROUTES = {
    ROUTE_ENUMERATION: char_enumeration,
    ROUTE_DETERMINANT: char_determinant,
    ROUTE_PRODUCT: char_product,
    ROUTE_MU: char_mu_formula,
}


def char(family: Family, lam: Partition, n: int, route: str = ROUTE_PRODUCT) -> CharResult:
    """Dispatch a character computation to the named route."""
    if family is Family.SO_EVEN:
        if route != ROUTE_PRODUCT:
            raise UnsupportedRoute(f"family so-even only supports the product route, not {route!r}")
        return so_char(lam, n)
    try:
        fn = _ROUTES[route]
    except KeyError:
        raise UnsupportedRoute(f"unknown route {route!r}") from None
    return fn(family, lam, n)


def routes_for(family: Family) -> list[str]:
    """The evaluation routes available to a family."""
    if family is Family.GL:
        return [ROUTE_ENUMERATION, ROUTE_PRODUCT]
    if family is Family.SO_EVEN:
        return [ROUTE_PRODUCT]
    return [ROUTE_ENUMERATION, ROUTE_DETERMINANT, ROUTE_PRODUCT, ROUTE_MU]

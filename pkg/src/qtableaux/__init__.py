"""Exact enumeration of symplectic and orthogonal Young tableaux, and the
q-specialisations of the corresponding classical group characters.

Everything is computed in exact integer arithmetic: characters live in
Z[q, q^-1], dimensions are exact rationals asserted integral, and every
quantity is reachable by independent routes that the test suite and the
``verify`` sweep hold to exact equality.
"""

from .characters import (
    CharResult,
    NonIntegerDimension,
    UnsupportedRoute,
    char,
    char_determinant,
    char_enumeration,
    char_mu_formula,
    char_product,
    content_product,
    content_product_mu_form,
    d_so,
    dimension,
    hook_product,
    hook_product_mu_form,
    routes_for,
    so_char,
    so_char_alternate,
    split_counts,
    statistic_exponent,
)
from .qring import (
    ONE,
    Q,
    ZERO,
    InexactDivision,
    LaurentPoly,
    angle_bracket,
    angle_factorial,
    determinant,
    exact_div,
    square_bracket,
)
from .shapes import (
    Cell,
    CellOutsideDiagram,
    NotAnInteger,
    NotWeaklyDecreasing,
    Partition,
    TooFewRows,
    b_stat,
    content_gl,
    content_o,
    content_sp,
    hook_length,
    mu_vector,
    parse_partition,
    partitions_of,
    partitions_up_to,
)
from .tableaux import (
    BOTH,
    NEGATIVE,
    NEITHER,
    POSITIVE,
    Family,
    ShapeNotFull,
    Stats,
    Tableau,
    classify_even,
    enumerate_tableaux,
    is_admissible,
    is_orthogonal,
    is_semistandard,
    is_symplectic,
    parse_tableau,
)
from .verify import CheckRow, SweepReport, run_sweep

__version__ = "0.1.0"

__all__ = [
    "BOTH",
    "Cell",
    "CellOutsideDiagram",
    "CharResult",
    "CheckRow",
    "Family",
    "InexactDivision",
    "LaurentPoly",
    "NEGATIVE",
    "NEITHER",
    "NonIntegerDimension",
    "NotAnInteger",
    "NotWeaklyDecreasing",
    "ONE",
    "POSITIVE",
    "Partition",
    "Q",
    "ShapeNotFull",
    "Stats",
    "SweepReport",
    "Tableau",
    "TooFewRows",
    "UnsupportedRoute",
    "ZERO",
    "angle_bracket",
    "angle_factorial",
    "b_stat",
    "char",
    "char_determinant",
    "char_enumeration",
    "char_mu_formula",
    "char_product",
    "classify_even",
    "content_gl",
    "content_o",
    "content_product",
    "content_product_mu_form",
    "content_sp",
    "d_so",
    "determinant",
    "dimension",
    "enumerate_tableaux",
    "exact_div",
    "hook_length",
    "hook_product",
    "hook_product_mu_form",
    "is_admissible",
    "is_orthogonal",
    "is_semistandard",
    "is_symplectic",
    "mu_vector",
    "parse_partition",
    "parse_tableau",
    "partitions_of",
    "partitions_up_to",
    "routes_for",
    "run_sweep",
    "so_char",
    "so_char_alternate",
    "split_counts",
    "square_bracket",
    "statistic_exponent",
]

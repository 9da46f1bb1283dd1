"""The full cross-checking sweep: every identity the library claims, run
exactly over a range of shapes.

For each shape with at most ``max_size`` boxes and each n from the number
of parts (at least 1) up to ``max_n``, the sweep checks

* route equivalence: enumeration, determinant, hook-content product and
  the closed mu form all give the same polynomial (GL has no determinant
  or mu route and is checked enumeration against product);
* the hook and content product identities against their mu forms;
* palindromy: the barred-alphabet characters are fixed by q -> q^-1;
* q = 1 consistency: the closed-form dimension equals the enumerated count
  and the coefficient sum of the product-route polynomial;
* for shapes with exactly n parts, the SO split: positive and negative
  tableau counts both equal half the even orthogonal dimension (which must
  be even), the SO character's value at q = 1 agrees, and the alternate
  product form of the SO character agrees coefficient for coefficient.

Tasks are independent and may fan out over a thread pool (capped by the
TABLEAUX_THREADS environment variable); output order is fixed by the task
list, so results are identical regardless of worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .characters import (
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
    so_char,
    so_char_alternate,
    split_counts,
)
from .shapes import Partition, partitions_up_to
from .tableaux import Family

DEFAULT_MAX_SIZE = 6
DEFAULT_MAX_N = 4


@dataclass(frozen=True)
class CheckRow:
    """One verified claim: (family, shape, n, check) plus the outcome."""

    family: str
    shape: str
    n: int
    check: str
    ok: bool
    detail: str = ""


@dataclass
class SweepReport:
    max_size: int
    max_n: int
    rows: list[CheckRow] = field(default_factory=list)

    @property
    def failures(self) -> list[CheckRow]:
        return [r for r in self.rows if not r.ok]

    @property
    def ok(self) -> bool:
        return not self.failures


def _shape_text(lam: Partition) -> str:
    return str(lam) if lam.parts else "-"


def _row(lam: Partition, n: int, family: str, check: str, ok: bool, detail: str = "") -> CheckRow:
    return CheckRow(family, _shape_text(lam), n, check, ok, detail if not ok else "")


def check_task(lam: Partition, n: int) -> list[CheckRow]:
    """All checks for one (shape, n) pair, in fixed order.

    A division or integrality failure inside a formula is itself a detected
    inconsistency, so it becomes a FAIL row instead of aborting the sweep.
    """
    try:
        return _check_task(lam, n)
    except ArithmeticError as exc:
        return [CheckRow("-", _shape_text(lam), n, "error", False, f"{type(exc).__name__}: {exc}")]


def _check_task(lam: Partition, n: int) -> list[CheckRow]:
    rows: list[CheckRow] = []

    # GL: enumeration against the hook-content product.
    gl_enum = char_enumeration(Family.GL, lam, n)
    gl_prod = char_product(Family.GL, lam, n)
    rows.append(
        _row(lam, n, "gl", "routes", gl_enum.poly == gl_prod.poly,
             f"enumeration={gl_enum.poly} product={gl_prod.poly}")
    )
    gl_dim = dimension(Family.GL, lam, n)
    rows.append(
        _row(lam, n, "gl", "dimension",
             gl_dim == gl_enum.dimension == gl_prod.dimension,
             f"formula={gl_dim} enumerated={gl_enum.dimension} product-at-1={gl_prod.dimension}")
    )

    # The hook product identity is family independent.
    hooks = hook_product(lam, n)
    hooks_mu = hook_product_mu_form(lam, n)
    rows.append(_row(lam, n, "-", "hook-identity", hooks == hooks_mu, f"boxes={hooks} mu-form={hooks_mu}"))

    for family in (Family.SP, Family.ODD_O, Family.EVEN_O):
        label = family.value
        enum = char_enumeration(family, lam, n)
        det = char_determinant(family, lam, n)
        prd = char_product(family, lam, n)
        mu = char_mu_formula(family, lam, n)
        rows.append(
            _row(lam, n, label, "routes",
                 enum.poly == det.poly == prd.poly == mu.poly,
                 f"enumeration={enum.poly} determinant={det.poly} product={prd.poly} mu={mu.poly}")
        )
        rows.append(
            _row(lam, n, label, "palindromy",
                 prd.poly.substitute_inverse() == prd.poly,
                 f"poly={prd.poly} reversed={prd.poly.substitute_inverse()}")
        )
        dim = dimension(family, lam, n)
        rows.append(
            _row(lam, n, label, "dimension",
                 dim == enum.dimension == prd.dimension,
                 f"formula={dim} enumerated={enum.dimension} product-at-1={prd.dimension}")
        )
        contents = content_product(family, lam, n)
        contents_mu = content_product_mu_form(family, lam, n)
        rows.append(
            _row(lam, n, label, "content-identity", contents == contents_mu,
                 f"boxes={contents} mu-form={contents_mu}")
        )

    if lam.parts and lam.length == n:
        pos, neg = split_counts(lam, n)
        half = d_so(lam, n)
        even_dim = dimension(Family.EVEN_O, lam, n)
        rows.append(
            _row(lam, n, "so-even", "so-split",
                 even_dim % 2 == 0 and pos == neg == half == even_dim // 2,
                 f"positive={pos} negative={neg} half-formula={half} even-o-dimension={even_dim}")
        )
        so = so_char(lam, n)
        rows.append(
            _row(lam, n, "so-even", "so-dimension", so.dimension == half,
                 f"poly-at-1={so.dimension} half-formula={half}")
        )
        alt = so_char_alternate(lam, n)
        rows.append(
            _row(lam, n, "so-even", "so-remark-form", so.poly == alt,
                 f"closed={so.poly} alternate={alt}")
        )

    return rows


def sweep_tasks(max_size: int, max_n: int) -> list[tuple[Partition, int]]:
    tasks = []
    for lam in partitions_up_to(max_size):
        for n in range(max(1, lam.length), max_n + 1):
            tasks.append((lam, n))
    return tasks


def thread_cap() -> int:
    raw = os.environ.get("TABLEAUX_THREADS", "").strip()
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_sweep(max_size: int = DEFAULT_MAX_SIZE, max_n: int = DEFAULT_MAX_N, threads: int | None = None) -> SweepReport:
    """Run every check over the sweep range; deterministic row order."""
    tasks = sweep_tasks(max_size, max_n)
    workers = threads if threads is not None else thread_cap()
    report = SweepReport(max_size=max_size, max_n=max_n)
    if workers <= 1:
        chunks = [check_task(lam, n) for lam, n in tasks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(lambda t: check_task(*t), tasks))
    for chunk in chunks:
        report.rows.extend(chunk)
    return report

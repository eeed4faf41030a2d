"""Weight distributions, binomial moments, and enumerator polynomials.

The weight distribution counts codewords by weight.  The b-th binomial
moment sums, over all supports of size b, the number of codewords carried
by the support; each summand is a power of q with exponent the dimension of
the supported part, so moments are computed rank-theoretically without
touching individual codewords (the codeword route lives in the oracle
module as the independent cross-check).  Binomial transforms convert each
table into the other exactly over the integers.

Enumerator polynomials are homogeneous of degree n in (x, y) and stored as
integer coefficient vectors indexed by x-degree; one counts all codewords
by weight, the other only the radical's.  The minimum distance is the
trailing x-degree of their difference.

Duality: the supported dimension of the dual relates to the complementarily
supported dimension of the code through the rank identity

    dim_F(part of C' in A) = 2*dim(A) - dim_F(C) + dim_F(part of C in A-complement),

which exponentiates to the moment identity with factor q^(2*dim(A) - dim_F(C)).
The commonly quoted factor q^(2*(dim(A) - k)) agrees exactly when the code
has trivial radical (dim_F = 2k) and is reported conditionally.
"""

from __future__ import annotations

import math

from .anticodes import all_anticodes, intersect_with_anticode
from .errors import DEFAULT_BUDGET, check_budget
from .report import CheckResult

__all__ = [
    "weight_distribution",
    "binomial_moments",
    "moments_from_distribution",
    "distribution_from_moments",
    "enumerator_polys",
    "poly_from_moments",
    "distance_from_enumerators",
    "format_enumerator",
    "evaluate_enumerator",
    "macwilliams_check",
]


def _space_of(obj):
    return obj.space if hasattr(obj, "space") else obj


def _as_code(obj):
    from .codes import Code

    return obj if isinstance(obj, Code) else Code(obj)


def weight_distribution(code, budget: int = DEFAULT_BUDGET) -> list[int]:
    """Codeword counts by weight, indices 0..n; entry 0 is always 1."""
    code = _as_code(code)
    all_counts, _ = code._weight_tables(budget)
    return [int(x) for x in all_counts]


def binomial_moments(code, budget: int = DEFAULT_BUDGET) -> list[int]:
    """Moments indexed 0..n, computed from supported-part dimensions."""
    space = _space_of(code)
    n, q = space.n, space.q
    check_budget(2**n, budget, "support scan")
    moments = [0] * (n + 1)
    for a in all_anticodes(n):
        moments[a.dim] += q ** intersect_with_anticode(space, a).dim_f
    return moments


def moments_from_distribution(w: list[int]) -> list[int]:
    """Binomial transform of a weight distribution (exact integer map)."""
    n = len(w) - 1
    return [sum(math.comb(n - a, b - a) * w[a] for a in range(b + 1)) for b in range(n + 1)]


def distribution_from_moments(b: list[int]) -> list[int]:
    """Inverse binomial transform (exact integer map)."""
    n = len(b) - 1
    return [
        sum((-1) ** (a - j) * math.comb(n - j, a - j) * b[j] for j in range(a + 1))
        for a in range(n + 1)
    ]


def enumerator_polys(code, budget: int = DEFAULT_BUDGET) -> tuple[list[int], list[int]]:
    """Coefficient vectors (radical enumerator, full enumerator) by x-degree."""
    code = _as_code(code)
    from .codes import Code

    rad_counts = weight_distribution(Code(code.space.radical()), budget)
    full_counts = weight_distribution(code, budget)
    return rad_counts, full_counts


def poly_from_moments(moments: list[int]) -> list[int]:
    """Expand sum_b B_b x^b (y-x)^(n-b) into coefficients by x-degree."""
    n = len(moments) - 1
    coeffs = [0] * (n + 1)
    for b, mb in enumerate(moments):
        for j in range(n - b + 1):
            coeffs[b + j] += mb * (-1) ** j * math.comb(n - b, j)
    return coeffs


def distance_from_enumerators(a_coeffs: list[int], b_coeffs: list[int]) -> int | None:
    """Trailing x-degree of the difference of the two enumerators."""
    if len(a_coeffs) != len(b_coeffs):
        raise ValueError("enumerators must share a degree")
    for i, (a, b) in enumerate(zip(a_coeffs, b_coeffs)):
        if a != b:
            return i
    return None


def evaluate_enumerator(coeffs: list[int], x: int, y: int) -> int:
    n = len(coeffs) - 1
    return sum(c * x**a * y ** (n - a) for a, c in enumerate(coeffs))


def format_enumerator(coeffs: list[int]) -> str:
    """Render with descending y-degree, e.g. ``y^2 + 2xy + 5x^2``."""
    n = len(coeffs) - 1
    terms = []
    for a, c in enumerate(coeffs):
        if c == 0:
            continue
        parts = []
        if c != 1 or (a == 0 and n == 0):
            parts.append(str(c))
        if a == 1:
            parts.append("x")
        elif a > 1:
            parts.append(f"x^{a}")
        if n - a == 1:
            parts.append("y")
        elif n - a > 1:
            parts.append(f"y^{n - a}")
        if not parts:
            parts.append("1")
        terms.append("".join(parts))
    return " + ".join(terms) if terms else "0"


def macwilliams_check(code, budget: int = DEFAULT_BUDGET) -> list[CheckResult]:
    """Verify the duality identities between a code and its dual.

    Per support: the rank identity above, checked on exponents.  Aggregated:
    cross-multiplied integer form of the moment identity, plus the
    conditional unshifted-exponent form that requires a trivial radical.
    """
    space = _space_of(code)
    dual = space.perp()
    n, q = space.n, space.q
    check_budget(2**n, budget, "support scan")
    k = space.sym_dim
    dim_f = space.dim_f
    full = frozenset(range(n))

    self_dims = {}
    dual_dims = {}
    for a in all_anticodes(n):
        self_dims[a.support] = intersect_with_anticode(space, a).dim_f
        dual_dims[a.support] = intersect_with_anticode(dual, a).dim_f

    per_items = []
    for a in all_anticodes(n):
        comp = full - a.support
        lhs = dual_dims[a.support]
        rhs = 2 * a.dim - dim_f + self_dims[comp]
        per_items.append((sorted(a.support), lhs, rhs, lhs == rhs))
    checks = [
        CheckResult(
            "macwilliams-per-anticode",
            all(ok for *_, ok in per_items),
            checked=len(per_items),
            failures=sum(1 for *_, ok in per_items if not ok),
            witness=next(
                (
                    {"support": tag, "lhs": lhs, "rhs": rhs}
                    for tag, lhs, rhs, ok in per_items
                    if not ok
                ),
                None,
            ),
        )
    ]

    moments_self = [0] * (n + 1)
    moments_dual = [0] * (n + 1)
    for supp, df in self_dims.items():
        moments_self[len(supp)] += q**df
    for supp, df in dual_dims.items():
        moments_dual[len(supp)] += q**df
    agg_items = []
    for b in range(n + 1):
        lhs = moments_dual[b] * q**dim_f
        rhs = q ** (2 * b) * moments_self[n - b]
        agg_items.append((b, lhs, rhs, lhs == rhs))
    checks.append(
        CheckResult(
            "macwilliams-moments",
            all(ok for *_, ok in agg_items),
            checked=len(agg_items),
            failures=sum(1 for *_, ok in agg_items if not ok),
        )
    )

    if dim_f == 2 * k:
        plain_items = []
        for b in range(n + 1):
            # exponent 2*(b - k) may be negative; compare cross-multiplied
            lhs = moments_dual[b] * q ** (2 * k)
            rhs = q ** (2 * b) * moments_self[n - b]
            plain_items.append((b, lhs, rhs, lhs == rhs))
        checks.append(
            CheckResult(
                "macwilliams-moments-unshifted",
                all(ok for *_, ok in plain_items),
                checked=len(plain_items),
                failures=sum(1 for *_, ok in plain_items if not ok),
                note="radical is trivial, so the unshifted exponent applies",
            )
        )
    else:
        checks.append(
            CheckResult(
                "macwilliams-moments-unshifted",
                True,
                note=(
                    "skipped: nontrivial radical (dim_F != 2k); the shifted "
                    "exponent 2*dim(A) - dim_F is the one that holds"
                ),
            )
        )
    return checks

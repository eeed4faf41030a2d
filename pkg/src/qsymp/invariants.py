"""Support-profile invariants of a code and the bound-verification suite.

Two integer maps drive everything here.  For a code C and an anticode A:

* ``alpha(C, A)``  -- the symplectic pair count of C's part supported in A;
* ``beta(C, A)``   -- the isorank of that part, in excess of the isorank of
  the radical's part supported in A.

Because the anticode lattice is the subset lattice of the factor set, both
maps are tabulated over all 2^n supports; profiles take maxima at fixed
support size, generalized weights take minima at prescribed map values, and
all the inequalities those quantities satisfy (monotone steps, the Galois
correspondences, and the Singleton-type bounds) are replayed as explicit
integer checks by :func:`verify_bounds`.

Extrema are taken over free-support anticodes only.  That convention is
forced by the characterization of anticodes as free subspaces: a subspace
whose pair count equals its maximum weight is the full space on its
support.  A consequence worth flagging: for the two-factor repetition code
the span of ``(e,e)`` and ``(f,f)`` is isotropic over the binary field, so
it is *not* an anticode (its pair count is 0, its maximum weight 2), and
the size-1 profile of that code is 0 even though treating that span as an
anticode would give 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .anticodes import Anticode, all_anticodes, intersect_with_anticode
from .errors import DEFAULT_BUDGET, check_budget
from .report import CheckResult

__all__ = [
    "alpha",
    "beta",
    "support_table",
    "profiles",
    "generalized_weights",
    "InvariantTable",
    "invariant_table",
    "verify_bounds",
]


def _space_of(obj):
    return obj.space if hasattr(obj, "space") else obj


def alpha(code, a: Anticode) -> int:
    """Symplectic pair count of the code's part supported in the anticode."""
    return intersect_with_anticode(_space_of(code), a).sym_dim


def beta(code, a: Anticode) -> int:
    """Isorank of the supported part, minus the radical's supported isorank."""
    space = _space_of(code)
    inner = intersect_with_anticode(space, a)
    rad_inner = intersect_with_anticode(space.radical(), a)
    return inner.isorank - rad_inner.isorank


def support_table(code, budget: int = DEFAULT_BUDGET) -> dict[frozenset, tuple[int, int]]:
    """(alpha, beta) for every support, keyed by frozen support set.

    Cached on the code object; the scan covers all 2^n supports and is
    guarded by the budget.
    """
    cached = getattr(code, "_support_table_cache", None)
    if cached is not None:
        return cached
    space = _space_of(code)
    check_budget(2**space.n, budget, "support scan")
    rad = space.radical()
    table: dict[frozenset, tuple[int, int]] = {}
    for a in all_anticodes(space.n):
        inner = intersect_with_anticode(space, a)
        rad_inner = intersect_with_anticode(rad, a)
        table[a.support] = (inner.sym_dim, inner.isorank - rad_inner.isorank)
    try:
        code._support_table_cache = table
    except AttributeError:
        pass
    return table


def profiles(code, budget: int = DEFAULT_BUDGET) -> tuple[list[int], list[int]]:
    """Profiles by support size: maxima of alpha and of beta, sizes 0..n.

    Size 0 only sees the zero anticode, so both profiles start at 0.
    """
    space = _space_of(code)
    table = support_table(code, budget)
    n = space.n
    theta = [0] * (n + 1)
    phi = [0] * (n + 1)
    for supp, (a_val, b_val) in table.items():
        b = len(supp)
        theta[b] = max(theta[b], a_val)
        phi[b] = max(phi[b], b_val)
    return theta, phi


def generalized_weights(
    code, budget: int = DEFAULT_BUDGET
) -> tuple[list[int | None], list[int | None], list[int | None]]:
    """Minimal anticode dimensions reaching prescribed alpha/beta levels.

    Returns three lists indexed by the level ``a = 1..k``: the least support
    size with ``alpha >= a``, with ``beta >= a``, and with
    ``alpha + beta >= 2a``.  Entries are ``None`` only if no support
    qualifies, which cannot happen for ``a <= k`` since the full support
    attains ``alpha = beta = k``; the sentinel is kept for defensive
    completeness.  Supports are scanned by increasing size, lexicographic
    within a size, stopping at the first hit.
    """
    space = _space_of(code)
    table = support_table(code, budget)
    k = space.sym_dim
    vartheta: list[int | None] = [None] * k
    varphi: list[int | None] = [None] * k
    delta: list[int | None] = [None] * k
    for a_level in range(1, k + 1):
        for anticode in all_anticodes(space.n):
            a_val, b_val = table[anticode.support]
            idx = a_level - 1
            if vartheta[idx] is None and a_val >= a_level:
                vartheta[idx] = anticode.dim
            if varphi[idx] is None and b_val >= a_level:
                varphi[idx] = anticode.dim
            if delta[idx] is None and a_val + b_val >= 2 * a_level:
                delta[idx] = anticode.dim
            if vartheta[idx] is not None and varphi[idx] is not None and delta[idx] is not None:
                break
    return vartheta, varphi, delta


@dataclass
class InvariantTable:
    """All support-profile invariants of one code."""

    n: int
    k: int
    theta: list[int]
    phi: list[int]
    vartheta: list[int | None]
    varphi: list[int | None]
    delta: list[int | None]

    def to_dict(self) -> dict:
        unattained = lambda xs: ["unattained" if x is None else int(x) for x in xs]
        return {
            "n": self.n,
            "k": self.k,
            "theta": [int(x) for x in self.theta],
            "phi": [int(x) for x in self.phi],
            "vartheta": unattained(self.vartheta),
            "varphi": unattained(self.varphi),
            "delta": unattained(self.delta),
        }

    def format_table(self) -> str:
        """Aligned ASCII rendering (presentation only)."""
        lines = []
        header = ["b"] + [str(b) for b in range(self.n + 1)]
        rows = [
            header,
            ["theta"] + [str(x) for x in self.theta],
            ["phi"] + [str(x) for x in self.phi],
        ]
        if self.k:
            rows.append(["a"] + [str(a) for a in range(1, self.k + 1)])
            fmt = lambda xs: ["-" if x is None else str(x) for x in xs]
            rows.append(["vartheta"] + fmt(self.vartheta))
            rows.append(["varphi"] + fmt(self.varphi))
            rows.append(["delta"] + fmt(self.delta))
        width = max(len(cell) for row in rows for cell in row) + 2
        for row in rows:
            lines.append("".join(cell.rjust(width) for cell in row))
        return "\n".join(lines)


def invariant_table(code, budget: int = DEFAULT_BUDGET) -> InvariantTable:
    space = _space_of(code)
    theta, phi = profiles(code, budget)
    vartheta, varphi, delta = generalized_weights(code, budget)
    return InvariantTable(
        n=space.n,
        k=space.sym_dim,
        theta=theta,
        phi=phi,
        vartheta=vartheta,
        varphi=varphi,
        delta=delta,
    )


def verify_bounds(code, budget: int = DEFAULT_BUDGET) -> list[CheckResult]:
    """Replay every profile/weight inequality for one code as integer checks.

    Failures become report entries, never exceptions.  Checks whose
    hypotheses fail (no minimum distance, or a radical different from the
    dual) are recorded as skipped.
    """
    from .codes import Code

    space = _space_of(code)
    code_obj = code if isinstance(code, Code) else Code(space)
    n, k = space.n, space.sym_dim
    table = support_table(code_obj, budget)
    theta, phi = profiles(code_obj, budget)
    vartheta, varphi, delta = generalized_weights(code_obj, budget)
    d = code_obj.distance(budget)
    self_orthogonal = space.radical() == space.perp()
    checks: list[CheckResult] = []

    def add(identity, passed, lhs=None, rhs=None, note=None):
        checks.append(CheckResult(identity, passed, lhs=lhs, rhs=rhs, note=note))

    def add_all(identity, items, note=None):
        fails = [(tag, lhs, rhs) for tag, lhs, rhs, ok in items if not ok]
        checks.append(
            CheckResult(
                identity,
                not fails,
                checked=len(items),
                failures=len(fails),
                witness=(
                    {"instance": fails[0][0], "lhs": fails[0][1], "rhs": fails[0][2]}
                    if fails
                    else None
                ),
                note=note,
            )
        )

    # Pointwise facts over every support.
    add_all(
        "alpha-le-beta",
        [(sorted(s), a_val, b_val, a_val <= b_val) for s, (a_val, b_val) in table.items()],
    )
    dual_space = space.perp()
    dual_dims = {
        a.support: intersect_with_anticode(dual_space, a).dim_f for a in all_anticodes(n)
    }
    self_dims = {a.support: intersect_with_anticode(space, a).dim_f for a in all_anticodes(n)}
    full = frozenset(range(n))
    rank_items = []
    for s in table:
        comp = full - s
        lhs = self_dims[s]
        rhs = space.dim_f - 2 * len(comp) + dual_dims[comp]
        rank_items.append((sorted(s), lhs, rhs, lhs == rhs))
    add_all("duality-rank-identity", rank_items)

    if self_orthogonal:
        items = []
        for s, (_, b_val) in table.items():
            comp = full - s
            a_comp = table[comp][0]
            items.append((sorted(s), b_val + a_comp, k, b_val + a_comp == k))
        add_all("weight-complementarity", items)
        items = []
        for s, (a_val, b_val) in table.items():
            comp = full - s
            ac, bc = table[comp]
            items.append((sorted(s), b_val - a_val, bc - ac, b_val - a_val == bc - ac))
        add_all("alpha-beta-difference-complement", items)
        if d is not None:
            items = []
            for s, (a_val, b_val) in table.items():
                if len(s) < d:
                    items.append((sorted(s), (a_val, b_val), (0, 0), a_val == 0 and b_val == 0))
            add_all("small-support-trivial", items)
    else:
        add(
            "weight-complementarity",
            True,
            note="skipped: radical differs from the dual (not applicable)",
        )

    # Profile steps.
    step_items = []
    for b in range(1, n):
        step_items.append((f"theta[{b}->{b + 1}]", theta[b + 1], theta[b] + 2, theta[b + 1] <= theta[b] + 2))
        step_items.append((f"phi[{b}->{b + 1}]", phi[b + 1], phi[b] + 2, phi[b + 1] <= phi[b] + 2))
        if theta[b + 1] == theta[b] + 2:
            step_items.append((f"phi-flat[{b}]", phi[b + 1], phi[b], phi[b + 1] == phi[b]))
        if phi[b + 1] == phi[b] + 2:
            step_items.append((f"theta-flat[{b}]", theta[b + 1], theta[b], theta[b + 1] == theta[b]))
        step_items.append(
            (
                f"joint-step[{b}]",
                theta[b + 1] + phi[b + 1],
                theta[b] + phi[b] + 2,
                theta[b + 1] + phi[b + 1] <= theta[b] + phi[b] + 2,
            )
        )
    add_all("profile-steps", step_items)

    # Galois correspondences between weights and profiles.
    inf = n + 1
    galois_items = []
    for a_level in range(1, k + 1):
        vt = vartheta[a_level - 1]
        vp = varphi[a_level - 1]
        for b in range(1, n + 1):
            lhs = a_level <= theta[b]
            rhs = (vt if vt is not None else inf) <= b
            galois_items.append((f"theta[a={a_level},b={b}]", lhs, rhs, lhs == rhs))
            lhs = a_level <= phi[b]
            rhs = (vp if vp is not None else inf) <= b
            galois_items.append((f"phi[a={a_level},b={b}]", lhs, rhs, lhs == rhs))
    add_all("galois-connection", galois_items)

    # Weight monotonicity.
    pair_items = []
    for a_level in range(1, k - 1):
        vt0, vt2 = vartheta[a_level - 1], vartheta[a_level + 1]
        if vt0 is not None and vt2 is not None:
            pair_items.append((f"vartheta[{a_level}]", vt0 + 1, vt2, vt0 + 1 <= vt2))
        vp0, vp2 = varphi[a_level - 1], varphi[a_level + 1]
        if vp0 is not None and vp2 is not None:
            pair_items.append((f"varphi[{a_level}]", vp0 + 1, vp2, vp0 + 1 <= vp2))
    add_all("weights-pair-step", pair_items)
    mono_items = []
    for a_level in range(1, k):
        d0, d1 = delta[a_level - 1], delta[a_level]
        if d0 is not None and d1 is not None:
            mono_items.append((f"delta[{a_level}]", d0 + 1, d1, d0 + 1 <= d1))
    add_all("delta-monotone", mono_items)
    lower_items = [
        (f"varphi[{a_level}]", varphi[a_level - 1], a_level, varphi[a_level - 1] >= a_level)
        for a_level in range(1, k + 1)
        if varphi[a_level - 1] is not None
    ]
    add_all("weights-lower-bound", lower_items)

    # Distance-dependent bounds.
    if d is None:
        add("singleton", True, note="skipped: no codewords outside the radical")
        add("generalized-singleton-upper", True, note="skipped: distance undefined")
        add("generalized-singleton-self-orthogonal", True, note="skipped: distance undefined")
    else:
        add("singleton", 2 * (d - 1) <= n - k, lhs=2 * (d - 1), rhs=n - k)
        gs_items = []
        for a_level in range(1, k + 1):
            da = delta[a_level - 1]
            bound = n - d - k + a_level + 1
            if da is not None:
                gs_items.append((f"delta[{a_level}]", da, bound, da <= bound))
        add_all("generalized-singleton-upper", gs_items)
        if self_orthogonal:
            gs2 = []
            for a_level in range(1, k + 1):
                vp = varphi[a_level - 1]
                bound = n - d - (k - a_level) // 2 + 1
                if vp is not None:
                    gs2.append((f"varphi[{a_level}]", vp, bound, vp <= bound))
            add_all("generalized-singleton-self-orthogonal", gs2)
            if k >= 1 and varphi[0] is not None:
                add("anticode-distance", varphi[0] == d, lhs=varphi[0], rhs=d)
        else:
            add(
                "generalized-singleton-self-orthogonal",
                True,
                note="skipped: radical differs from the dual",
            )
    return checks

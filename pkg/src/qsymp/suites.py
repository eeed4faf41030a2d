"""Batched verification suites.

Each suite replays a family of identities over fixtures, seeded random
instances, or exhaustive small scans, and returns aggregated
:class:`~qsymp.report.CheckResult` entries (one per identity, with counts
and a first-failure witness).  The CLI wraps these; the acceptance tests
call them directly with their full instance counts.
"""

from __future__ import annotations

from itertools import product

import numpy as np

from . import anticodes as ac
from . import enumerators as en
from . import invariants as iv
from . import oracle
from .codes import (
    Code,
    bacon_shor_code,
    from_pauli,
    random_code,
    random_stabilizer_code,
    random_subspace,
    repetition_code,
    shor_code,
    shor_stabilizer_rows,
)
from .errors import DEFAULT_BUDGET
from .report import CheckResult
from .symplectic import Subspace

SUITE_NAMES = (
    "fixtures",
    "identities",
    "stabilizer",
    "bounds",
    "transforms",
    "oracle",
    "macwilliams",
    "cleaning",
)


class _Tally:
    """Accumulate per-identity pass/fail counts with a first-failure witness."""

    def __init__(self):
        self.counts: dict[str, list] = {}
        self.order: list[str] = []

    def add(self, identity: str, ok: bool, witness=None):
        if identity not in self.counts:
            self.counts[identity] = [0, 0, None]
            self.order.append(identity)
        entry = self.counts[identity]
        entry[0] += 1
        if not ok:
            entry[1] += 1
            if entry[2] is None:
                entry[2] = witness
        return ok

    def add_result(self, result: CheckResult, instance: str):
        witness = {"instance": instance}
        if result.witness:
            witness.update(result.witness)
        elif not result.passed:
            witness.update({"lhs": result.lhs, "rhs": result.rhs})
        self.add(result.identity, result.passed, witness)

    def results(self) -> list[CheckResult]:
        out = []
        for identity in self.order:
            checked, failed, witness = self.counts[identity]
            out.append(
                CheckResult(
                    identity,
                    failed == 0,
                    checked=checked,
                    failures=failed,
                    witness=witness,
                )
            )
        return out


def _value_check(identity, lhs, rhs, note=None) -> CheckResult:
    return CheckResult(identity, lhs == rhs, lhs=lhs, rhs=rhs, note=note)


# ---------------------------------------------------------------------------
# fixtures


def fixture_suite(budget: int = DEFAULT_BUDGET) -> list[CheckResult]:
    """Golden values for the three named codes."""
    checks: list[CheckResult] = []

    # Two-factor repetition code.
    rep = repetition_code()
    checks.append(_value_check("repetition-params", tuple(rep.params(budget)), (2, 1, 2, 1, 2)))
    checks.append(
        _value_check(
            "repetition-dual-space",
            rep.space.perp().to_json_dict()["basis"],
            from_pauli(["ZZ"]).to_json_dict()["basis"],
        )
    )
    a_poly, b_poly = en.enumerator_polys(rep, budget)
    checks.append(_value_check("repetition-enumerator-full", b_poly, [1, 2, 5]))
    checks.append(
        _value_check(
            "repetition-enumerator-radical",
            a_poly,
            [1, 0, 1],
            note=(
                "the dual of this 3-dimensional code is 1-dimensional, so the "
                "radical holds 2 vectors and the enumerator is y^2 + x^2; a "
                "circulated value of y^2 + 3x^2 would need a 4-element radical, "
                "contradicting isorank 2"
            ),
        )
    )
    checks.append(_value_check("repetition-moments", en.binomial_moments(rep, budget), [1, 4, 8]))
    checks.append(
        _value_check(
            "repetition-dual-moments",
            en.binomial_moments(rep.dual(), budget),
            [1, 2, 2],
            note=(
                "index-1 value 2 is forced by the moment duality (a circulated "
                "value of 1 is inconsistent with it); index-2 equals the dual's "
                "cardinality 2^(2n - dim_F) = 2"
            ),
        )
    )
    theta, phi = iv.profiles(rep, budget)
    checks.append(
        _value_check(
            "repetition-profiles",
            (theta, phi),
            ([0, 0, 1], [0, 1, 1]),
            note=(
                "size-1 alpha-profile is 0 under the free-support convention: "
                "the isotropic span of (e,e) and (f,f) has pair count 0, so it "
                "is not an anticode even though its maximum weight is 2"
            ),
        )
    )
    _, varphi, delta = iv.generalized_weights(rep, budget)
    checks.append(_value_check("repetition-varphi-1", varphi[0], rep.distance(budget)))
    checks.append(_value_check("repetition-delta-1", delta[0], 2))

    # 2x2 Bacon-Shor subsystem code.
    bs = bacon_shor_code()
    checks.append(_value_check("bacon-shor-logical-count", bs.logical_count, 1))
    checks.append(
        _value_check(
            "bacon-shor-stabilizer",
            bs.stabilizer.to_json_dict()["basis"],
            from_pauli(["XXXX", "ZZZZ"]).to_json_dict()["basis"],
        )
    )
    cnorm = bs.normalizer
    checks.append(_value_check("bacon-shor-params", tuple(cnorm.params(budget)), (4, 2, 4, 2, 4)))
    theta, phi = iv.profiles(cnorm, budget)
    checks.append(_value_check("bacon-shor-theta", theta, [0, 0, 0, 2, 2]))
    checks.append(_value_check("bacon-shor-phi", phi, [0, 0, 2, 2, 2]))
    pattern_ok = (
        phi[2] == phi[1] + 2
        and theta[2] == theta[1]
        and theta[3] == theta[2] + 2
        and phi[3] == phi[2]
    )
    checks.append(
        CheckResult(
            "bacon-shor-step-pattern",
            pattern_ok,
            lhs=(theta, phi),
            note="alternating +2 steps between the two profiles",
        )
    )
    step_checks = [r for r in iv.verify_bounds(cnorm, budget) if r.identity == "profile-steps"]
    checks.append(
        CheckResult(
            "bacon-shor-profile-steps",
            all(r.passed for r in step_checks),
            checked=sum(r.checked or 0 for r in step_checks),
            failures=sum(r.failures or 0 for r in step_checks),
        )
    )

    # Nine-factor Shor code.
    shor = shor_code()
    p = shor.params(budget)
    checks.append(_value_check("shor-params", (p.n, p.k, p.s, p.d), (9, 1, 9, 3)))
    _, varphi, _ = iv.generalized_weights(shor, budget)
    checks.append(_value_check("shor-varphi-1", varphi[0], 3))
    front = ac.Anticode(9, frozenset(range(4)))
    dec = ac.s_prime_decompose(shor, front, radical_rows=shor_stabilizer_rows())
    checks.append(
        _value_check(
            "shor-radical-in-support",
            dec.rad_in_a.to_json_dict()["basis"],
            from_pauli(["ZZIIIIIII", "IZZIIIIII"]).to_json_dict()["basis"],
        )
    )
    checks.append(
        _value_check(
            "shor-radical-in-complement",
            dec.rad_in_aperp.to_json_dict()["basis"],
            from_pauli(["IIIIZZIII", "IIIIIIZZI", "IIIIIIIZZ"]).to_json_dict()["basis"],
        )
    )
    checks.append(
        _value_check(
            "shor-transversal-summand",
            dec.s_prime.to_json_dict()["basis"],
            from_pauli(["IIIZZIIII", "XXXXXXIII", "IIIXXXXXX"]).to_json_dict()["basis"],
        )
    )
    punct_front = ac.puncture(dec.s_prime, front)
    punct_back = ac.puncture(dec.s_prime, front.complement())
    checks.append(
        _value_check(
            "shor-punctured-transversal-front",
            punct_front.to_json_dict()["basis"],
            from_pauli(["IIIZ", "XXXX", "IIIX"]).to_json_dict()["basis"],
        )
    )
    checks.append(
        _value_check(
            "shor-punctured-transversal-back",
            punct_back.to_json_dict()["basis"],
            from_pauli(["ZIIII", "XXIII", "XXXXX"]).to_json_dict()["basis"],
        )
    )
    checks.append(
        _value_check("shor-punctured-dims", (punct_front.sym_dim, punct_back.sym_dim), (1, 1))
    )
    checks.append(
        _value_check(
            "shor-punctured-isoranks",
            (punct_front.isorank, punct_back.isorank),
            (2, 2),
            note=(
                "both punctured summands have one pair plus a one-dimensional "
                "radical (dim_F 3 = 1 + 2), so isorank 2 is forced by the "
                "splitting bookkeeping; a circulated value of 1 is "
                "inconsistent with it"
            ),
        )
    )
    two_support = ac.Anticode(9, frozenset({0, 1}))
    checks.append(
        _value_check(
            "shor-cleaning-below-distance",
            ac.puncture(shor, two_support).to_json_dict()["basis"],
            ac.puncture(shor.radical_space(), two_support).to_json_dict()["basis"],
            note="any support smaller than the distance is cleanable",
        )
    )
    return checks


# ---------------------------------------------------------------------------
# general identities (random + exhaustive)


def _per_support_general(tally: _Tally, code: Code, tag: str, budget: int) -> None:
    space = code.space
    n = space.n
    table = iv.support_table(code, budget)
    dual = space.perp()
    full = frozenset(range(n))
    dual_dims = {}
    self_dims = {}
    for a in ac.all_anticodes(n):
        self_dims[a.support] = ac.intersect_with_anticode(space, a).dim_f
        dual_dims[a.support] = ac.intersect_with_anticode(dual, a).dim_f
    for a in ac.all_anticodes(n):
        s = a.support
        comp = full - s
        lhs = self_dims[s]
        rhs = space.dim_f - 2 * len(comp) + dual_dims[comp]
        tally.add(
            "duality-rank-identity",
            lhs == rhs,
            {"instance": tag, "support": sorted(s), "lhs": lhs, "rhs": rhs},
        )
        a_val, b_val = table[s]
        tally.add(
            "alpha-le-beta",
            a_val <= b_val,
            {"instance": tag, "support": sorted(s), "lhs": a_val, "rhs": b_val},
        )
        for result in ac.verify_cleaning(space, a):
            tally.add_result(result, f"{tag} support={sorted(s)}")


def _pair_identities(tally: _Tally, w1: Subspace, w2: Subspace, tag: str) -> None:
    # Pair count and isorank are checked as modular on orthogonal pairs and
    # monotone on nested pairs.  They are NOT super/submodular on arbitrary
    # pairs: span{e1,f1} against span{e1+e2,f1} violates both inequalities
    # (their pairs share f1 and collapse in the sum), so no such check runs.
    both = w1 + w2
    meet = w1 & w2
    tally.add(
        "dim-f-modularity",
        both.dim_f + meet.dim_f == w1.dim_f + w2.dim_f,
        {"instance": tag, "lhs": both.dim_f + meet.dim_f, "rhs": w1.dim_f + w2.dim_f},
    )
    if w2.perp().contains_space(w1):
        tally.add(
            "modularity-orthogonal-dim",
            both.sym_dim + meet.sym_dim == w1.sym_dim + w2.sym_dim,
            {"instance": tag},
        )
        tally.add(
            "modularity-orthogonal-irk",
            both.isorank + meet.isorank == w1.isorank + w2.isorank,
            {"instance": tag},
        )
    if w2.contains_space(w1):
        tally.add("monotonicity-dim", w1.sym_dim <= w2.sym_dim, {"instance": tag})
        tally.add("monotonicity-irk", w1.isorank <= w2.isorank, {"instance": tag})


def _perp_identities(tally: _Tally, w: Subspace, tag: str) -> None:
    p = w.perp()
    n = w.n
    tally.add(
        "perp-dim",
        p.sym_dim == n - w.isorank,
        {"instance": tag, "lhs": p.sym_dim, "rhs": n - w.isorank},
    )
    tally.add(
        "perp-irk",
        p.isorank == n - w.sym_dim,
        {"instance": tag, "lhs": p.isorank, "rhs": n - w.sym_dim},
    )
    tally.add("double-perp", p.perp() == w, {"instance": tag})
    tally.add("radical-of-perp", p.radical() == w.radical(), {"instance": tag})
    rad = w.radical()
    tally.add("radical-inside-perp", p.contains_space(rad), {"instance": tag})
    tally.add(
        "radical-equals-perp-iff-stabilizer",
        (rad == p) == w.is_stabilizer(),
        {"instance": tag},
    )
    tally.add(
        "splitting-consistency",
        w.dim_f == w.sym_dim + w.isorank,
        {"instance": tag, "lhs": w.dim_f, "rhs": w.sym_dim + w.isorank},
    )


def general_identity_suite(
    rng: np.random.Generator,
    trials: int = 36,
    qs: tuple[int, ...] = (2, 3, 5),
    max_n: int = 4,
    budget: int = DEFAULT_BUDGET,
) -> list[CheckResult]:
    """Random codes: rank duality, cleaning, perp duality, modularity, alpha<=beta."""
    tally = _Tally()
    for t in range(trials):
        q = qs[t % len(qs)]
        n = int(rng.integers(1, max_n + 1))
        code = random_code(rng, q, n)
        tag = f"random[{t}] q={q} n={n}"
        _per_support_general(tally, code, tag, budget)
        _perp_identities(tally, code.space, tag)
        other = random_subspace(rng, q, n)
        _pair_identities(tally, code.space, other, tag)
        # orthogonal pair: a random subspace of the complement
        room = other.perp()
        coeffs = rng.integers(0, q, size=(int(rng.integers(0, room.dim_f + 1)), room.dim_f))
        w1 = Subspace((coeffs @ room.basis) % q if coeffs.size else coeffs.reshape(0, 2 * n), q, n)
        _pair_identities(tally, w1, other, tag + " orthogonal")
        # nested pair: a random subspace of the code
        coeffs = rng.integers(0, q, size=(int(rng.integers(0, code.dim_f + 1)), code.dim_f))
        inner = Subspace(
            (coeffs @ code.space.basis) % q if coeffs.size else coeffs.reshape(0, 2 * n), q, n
        )
        _pair_identities(tally, inner, code.space, tag + " nested")
    return tally.results()


def all_subspaces(q: int, n: int) -> list[Subspace]:
    """Every subspace of the 2n-dimensional ambient space (small cases only)."""
    vectors = [np.array(v, dtype=np.int64) for v in product(range(q), repeat=2 * n)]
    vectors = [v for v in vectors if v.any()]
    zero = Subspace.zero(q, n)
    seen = {zero}
    frontier = [zero]
    while frontier:
        fresh = []
        for w in frontier:
            for v in vectors:
                if v not in w:
                    bigger = w + Subspace(v.reshape(1, -1), q, n)
                    if bigger not in seen:
                        seen.add(bigger)
                        fresh.append(bigger)
        frontier = fresh
    return sorted(seen, key=lambda s: (s.dim_f, s.basis.tobytes()))


def exhaustive_small_suite(budget: int = DEFAULT_BUDGET, max_n: int = 2) -> list[CheckResult]:
    """Every subspace (and every ordered pair) over the binary field, n <= 2."""
    tally = _Tally()
    for n in range(1, max_n + 1):
        spaces = all_subspaces(2, n)
        for i, w in enumerate(spaces):
            tag = f"exhaustive n={n} #{i}"
            _perp_identities(tally, w, tag)
            _per_support_general(tally, Code(w), tag, budget)
        for i, w1 in enumerate(spaces):
            for j, w2 in enumerate(spaces):
                _pair_identities(tally, w1, w2, f"exhaustive n={n} pair ({i},{j})")
    return tally.results()


# ---------------------------------------------------------------------------
# stabilizer-conditional identities


def stabilizer_suite(
    rng: np.random.Generator,
    trials: int = 24,
    max_n: int = 5,
    q: int = 2,
    budget: int = DEFAULT_BUDGET,
) -> list[CheckResult]:
    """Identities whose proofs need the radical to equal the dual."""
    tally = _Tally()
    for t in range(trials):
        n = int(rng.integers(1, max_n + 1))
        code = random_stabilizer_code(rng, n, q)
        tag = f"stabilizer[{t}] q={q} n={n}"
        _stabilizer_code_checks(tally, code, tag, budget)
    return tally.results()


def _stabilizer_code_checks(tally: _Tally, code: Code, tag: str, budget: int) -> None:
    space = code.space
    n = space.n
    rad = space.radical()
    d = code.distance(budget)
    for result in iv.verify_bounds(code, budget):
        tally.add_result(result, tag)
    for result in en.macwilliams_check(code, budget):
        tally.add_result(result, tag)
    full = frozenset(range(n))
    for a in ac.all_anticodes(n):
        s = a.support
        comp_a = ac.Anticode(n, full - s)
        inner_comp = ac.intersect_with_anticode(space, comp_a)
        rad_inner = ac.intersect_with_anticode(rad, a)
        lhs = comp_a.dim - inner_comp.sym_dim - inner_comp.isorank
        rhs = a.dim - rad_inner.isorank - space.sym_dim
        tally.add(
            "macwilliams-dim-irk",
            lhs == rhs,
            {"instance": tag, "support": sorted(s), "lhs": lhs, "rhs": rhs},
        )
        if d is None or a.dim < d:
            tally.add(
                "cleaning-below-distance",
                ac.puncture(space, a) == ac.puncture(rad, a),
                {"instance": tag, "support": sorted(s)},
            )
        for result in ac.complementarity_check(space, a):
            tally.add_result(result, f"{tag} support={sorted(s)}")


def bounds_suite(
    rng: np.random.Generator, trials: int = 12, budget: int = DEFAULT_BUDGET
) -> list[CheckResult]:
    """Bound checks on the fixtures plus a few random stabilizer codes."""
    tally = _Tally()
    for name, code in (
        ("repetition", repetition_code()),
        ("bacon-shor-normalizer", bacon_shor_code().normalizer),
        ("shor", shor_code()),
    ):
        for result in iv.verify_bounds(code, budget):
            tally.add_result(result, name)
    for t in range(trials):
        n = int(rng.integers(1, 6))
        code = random_stabilizer_code(rng, n, 2)
        for result in iv.verify_bounds(code, budget):
            tally.add_result(result, f"random-stabilizer[{t}]")
    return tally.results()


# ---------------------------------------------------------------------------
# transforms


def transforms_suite(
    rng: np.random.Generator, trials: int = 40, budget: int = DEFAULT_BUDGET
) -> list[CheckResult]:
    """Moment/distribution transforms invert each other; both enumerator routes agree."""
    tally = _Tally()
    fixture_tables = []
    for name, code in (
        ("repetition", repetition_code()),
        ("repetition-dual", repetition_code().dual()),
        ("bacon-shor-normalizer", bacon_shor_code().normalizer),
        ("shor", shor_code()),
    ):
        w = en.weight_distribution(code, budget)
        b = en.binomial_moments(code, budget)
        fixture_tables.append((name, w, b))
        tally.add(
            "moments-from-distribution",
            en.moments_from_distribution(w) == b,
            {"instance": name},
        )
        tally.add(
            "distribution-from-moments",
            en.distribution_from_moments(b) == w,
            {"instance": name},
        )
        tally.add(
            "enumerator-routes-agree",
            en.poly_from_moments(b) == w,
            {"instance": name},
        )
    for t in range(trials):
        n = int(rng.integers(0, 7))
        table = [int(x) for x in rng.integers(0, 50, size=n + 1)]
        back = en.distribution_from_moments(en.moments_from_distribution(table))
        tally.add("transform-roundtrip-w", back == table, {"instance": f"random-table[{t}]"})
        back = en.moments_from_distribution(en.distribution_from_moments(table))
        tally.add("transform-roundtrip-b", back == table, {"instance": f"random-table[{t}]"})
        q = (2, 3)[t % 2]
        code = random_code(rng, q, int(rng.integers(1, 4)))
        w = en.weight_distribution(code, budget)
        b = en.binomial_moments(code, budget)
        tally.add(
            "moments-from-distribution", en.moments_from_distribution(w) == b,
            {"instance": f"random-code[{t}]"},
        )
        tally.add(
            "distribution-from-moments", en.distribution_from_moments(b) == w,
            {"instance": f"random-code[{t}]"},
        )
        tally.add(
            "enumerator-routes-agree", en.poly_from_moments(b) == w,
            {"instance": f"random-code[{t}]"},
        )
    return tally.results()


# ---------------------------------------------------------------------------
# oracle equivalence


def _oracle_code_checks(tally: _Tally, code: Code, tag: str, budget: int, supports=None) -> None:
    space = code.space
    tally.add(
        "oracle-distance",
        code.distance(budget) == oracle.brute_min_distance(space, budget),
        {"instance": tag},
    )
    tally.add(
        "oracle-distribution",
        en.weight_distribution(code, budget) == oracle.brute_weight_distribution(space, budget),
        {"instance": tag},
    )
    tally.add(
        "oracle-moments",
        en.binomial_moments(code, budget) == oracle.brute_binomial_moments(space, budget),
        {"instance": tag},
    )
    if supports is None:
        supports = [a.support for a in ac.all_anticodes(space.n)]
    for s in supports:
        a = ac.Anticode(space.n, s)
        fast = (iv.alpha(code, a), iv.beta(code, a))
        brute = oracle.brute_alpha_beta(space, s, budget)
        tally.add(
            "oracle-alpha-beta",
            fast == brute,
            {"instance": tag, "support": sorted(s), "lhs": list(fast), "rhs": list(brute)},
        )
    pairs, irk = oracle.brute_sym_dim_irk(space, budget)
    tally.add(
        "oracle-dim-irk",
        (space.sym_dim, space.isorank) == (pairs, irk),
        {"instance": tag, "lhs": [space.sym_dim, space.isorank], "rhs": [pairs, irk]},
    )


def oracle_suite(
    rng: np.random.Generator, trials: int = 10, budget: int = DEFAULT_BUDGET
) -> list[CheckResult]:
    """Fast paths against the literal brute-force reference."""
    tally = _Tally()
    bs = bacon_shor_code()
    shor = shor_code()
    shor_supports = [
        frozenset(),
        frozenset({0}),
        frozenset(range(4)),
        frozenset(range(4, 9)),
        frozenset(range(9)),
    ]
    _oracle_code_checks(tally, repetition_code(), "repetition", budget)
    rep_words = sorted(oracle.brute_codeword_set(repetition_code().space, budget))
    expected = sorted(
        {
            (0, 0, 0, 0), (1, 0, 1, 0), (0, 1, 0, 1), (1, 1, 1, 1),
            (0, 1, 0, 0), (1, 1, 1, 0), (0, 0, 0, 1), (1, 0, 1, 1),
        }
    )
    tally.add("oracle-codeword-set", rep_words == expected, {"instance": "repetition"})
    _oracle_code_checks(tally, bs.gauge, "bacon-shor-gauge", budget)
    _oracle_code_checks(tally, bs.normalizer, "bacon-shor-normalizer", budget)
    _oracle_code_checks(tally, shor, "shor", budget, supports=shor_supports)
    for t in range(trials):
        q = (2, 3)[t % 2]
        n = int(rng.integers(1, 5))
        code = random_code(rng, q, n)
        _oracle_code_checks(tally, code, f"random[{t}] q={q} n={n}", budget)
    return tally.results()


# ---------------------------------------------------------------------------
# focused convenience suites


def cleaning_suite(
    rng: np.random.Generator, trials: int = 20, budget: int = DEFAULT_BUDGET
) -> list[CheckResult]:
    tally = _Tally()
    for name, code in (
        ("repetition", repetition_code()),
        ("bacon-shor-normalizer", bacon_shor_code().normalizer),
        ("shor", shor_code()),
    ):
        for a in ac.all_anticodes(code.n):
            for result in ac.verify_cleaning(code.space, a):
                tally.add_result(result, f"{name} support={sorted(a.support)}")
    for t in range(trials):
        q = (2, 3, 5)[t % 3]
        n = int(rng.integers(1, 4))
        code = random_code(rng, q, n)
        for a in ac.all_anticodes(n):
            for result in ac.verify_cleaning(code.space, a):
                tally.add_result(result, f"random[{t}] support={sorted(a.support)}")
    return tally.results()


def macwilliams_suite(
    rng: np.random.Generator, trials: int = 20, budget: int = DEFAULT_BUDGET
) -> list[CheckResult]:
    tally = _Tally()
    for name, code in (
        ("repetition", repetition_code()),
        ("bacon-shor-normalizer", bacon_shor_code().normalizer),
        ("shor", shor_code()),
    ):
        for result in en.macwilliams_check(code, budget):
            tally.add_result(result, name)
    for t in range(trials):
        q = (2, 3)[t % 2]
        n = int(rng.integers(1, 4))
        code = random_code(rng, q, n)
        for result in en.macwilliams_check(code, budget):
            tally.add_result(result, f"random[{t}]")
    return tally.results()


# ---------------------------------------------------------------------------
# aggregation


def run_suites(
    suite: str = "all",
    seed: int = 0,
    budget: int = DEFAULT_BUDGET,
    trials: int | None = None,
) -> dict:
    """Run one suite (or all) and assemble a stable, JSON-ready report."""
    if suite != "all" and suite not in SUITE_NAMES:
        raise ValueError(f"unknown suite {suite!r}; choose from {('all',) + SUITE_NAMES}")
    sections: list[tuple[str, list[CheckResult]]] = []

    def rng():
        return np.random.default_rng(seed)

    def want(name):
        return suite in ("all", name)

    if want("fixtures"):
        sections.append(("fixtures", fixture_suite(budget)))
    if want("identities"):
        checks = general_identity_suite(rng(), trials=trials or 36, budget=budget)
        checks += exhaustive_small_suite(budget)
        sections.append(("identities", checks))
    if want("stabilizer"):
        sections.append(("stabilizer", stabilizer_suite(rng(), trials=trials or 24, budget=budget)))
    if want("bounds"):
        sections.append(("bounds", bounds_suite(rng(), trials=trials or 12, budget=budget)))
    if want("transforms"):
        sections.append(("transforms", transforms_suite(rng(), trials=trials or 40, budget=budget)))
    if want("oracle"):
        sections.append(("oracle", oracle_suite(rng(), trials=trials or 10, budget=budget)))
    if want("macwilliams"):
        sections.append(("macwilliams", macwilliams_suite(rng(), trials=trials or 20, budget=budget)))
    if want("cleaning"):
        sections.append(("cleaning", cleaning_suite(rng(), trials=trials or 20, budget=budget)))

    total = sum(len(checks) for _, checks in sections)
    failed = sum(1 for _, checks in sections for c in checks if not c.passed)
    return {
        "suite": suite,
        "seed": seed,
        "sections": [
            {"name": name, "checks": [c.to_dict() for c in checks]} for name, checks in sections
        ],
        "summary": {"identities": total, "failed": failed, "pass": failed == 0},
    }

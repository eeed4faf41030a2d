"""Literal brute-force reference computations.

Everything here works by enumerating codewords from a basis with a
mixed-radix counter and then counting, filtering, or pairing set elements.
No Gaussian elimination, no rank arguments: dimensions come from logarithms
of set sizes, radicals come from filtering on the product, and spanning
sets come from incremental closure by enumeration.  The point is
independence from the fast paths, which these functions exist to check.
"""

from __future__ import annotations

from .errors import DEFAULT_BUDGET, check_budget

Word = tuple[int, ...]


def _space_of(obj):
    return obj.space if hasattr(obj, "space") else obj


def _form(u: Word, v: Word, q: int) -> int:
    total = 0
    for i in range(0, len(u), 2):
        total += u[i] * v[i + 1] - u[i + 1] * v[i]
    return total % q


def _weight(v: Word) -> int:
    return sum(1 for i in range(0, len(v), 2) if v[i] or v[i + 1])


def _support_mask(v: Word) -> int:
    mask = 0
    for i in range(0, len(v), 2):
        if v[i] or v[i + 1]:
            mask |= 1 << (i // 2)
    return mask


def enumerate_codewords(space, budget: int = DEFAULT_BUDGET):
    """Yield every codeword exactly once as a tuple of ints.

    Codeword i uses the mixed-radix digits of i (least significant first)
    as coefficients against the basis rows.
    """
    space = _space_of(space)
    q, k = space.q, space.dim_f
    check_budget(q**k, budget, "codeword enumeration")
    basis = [tuple(int(x) for x in row) for row in space.basis]
    width = 2 * space.n
    for idx in range(q**k):
        coeffs = []
        rem = idx
        for _ in range(k):
            coeffs.append(rem % q)
            rem //= q
        word = [0] * width
        for c, row in zip(coeffs, basis):
            if c:
                for j in range(width):
                    word[j] = (word[j] + c * row[j]) % q
        yield tuple(word)


def _log_size(count: int, q: int) -> int:
    m = 0
    while q**m < count:
        m += 1
    if q**m != count:
        raise AssertionError(f"set size {count} is not a power of {q}")
    return m


def _closure_generators(words: list[Word], q: int) -> list[Word]:
    """A spanning subset found by growing a closure set, scanning in order."""
    width = len(words[0]) if words else 0
    zero = tuple([0] * width)
    spanned = {zero}
    gens: list[Word] = []
    for w in words:
        if w in spanned:
            continue
        gens.append(w)
        extra = set()
        for s in spanned:
            for c in range(1, q):
                extra.add(tuple((s[j] + c * w[j]) % q for j in range(width)))
        spanned |= extra
    return gens


def _radical_set(words: list[Word], q: int) -> list[Word]:
    gens = _closure_generators(words, q)
    return [v for v in words if all(_form(v, g, q) == 0 for g in gens)]


def _dim_irk_of_set(words: list[Word], q: int) -> tuple[int, int]:
    dim_f = _log_size(len(words), q)
    rad_dim = _log_size(len(_radical_set(words, q)), q)
    pairs = (dim_f - rad_dim) // 2
    return pairs, pairs + rad_dim


def brute_min_distance(space, budget: int = DEFAULT_BUDGET) -> int | None:
    """Least weight over codewords outside the radical, by full scan."""
    space = _space_of(space)
    words = list(enumerate_codewords(space, budget))
    rad = set(_radical_set(words, space.q))
    best = None
    for w in words:
        if w in rad:
            continue
        wt = _weight(w)
        if best is None or wt < best:
            best = wt
    return best


def brute_weight_distribution(space, budget: int = DEFAULT_BUDGET) -> list[int]:
    space = _space_of(space)
    counts = [0] * (space.n + 1)
    for w in enumerate_codewords(space, budget):
        counts[_weight(w)] += 1
    return counts


def brute_binomial_moments(space, budget: int = DEFAULT_BUDGET) -> list[int]:
    """Moments by counting codewords inside each support, one support at a time."""
    from itertools import combinations

    space = _space_of(space)
    n = space.n
    words = list(enumerate_codewords(space, budget))
    check_budget(2**n * max(len(words), 1), budget, "support scan")
    masks = [_support_mask(w) for w in words]
    moments = [0] * (n + 1)
    for b in range(n + 1):
        for combo in combinations(range(n), b):
            jmask = 0
            for j in combo:
                jmask |= 1 << j
            moments[b] += sum(1 for m in masks if m & ~jmask == 0)
    return moments


def brute_alpha_beta(space, support, budget: int = DEFAULT_BUDGET) -> tuple[int, int]:
    """(alpha, beta) for one support by membership filtering and counting."""
    space = _space_of(space)
    support = frozenset(int(j) for j in support)
    jmask = 0
    for j in support:
        jmask |= 1 << j
    q = space.q
    words = list(enumerate_codewords(space, budget))
    inside = [w for w in words if _support_mask(w) & ~jmask == 0]
    rad = _radical_set(words, q)
    rad_inside = [w for w in rad if _support_mask(w) & ~jmask == 0]
    pairs, irk = _dim_irk_of_set(inside, q)
    _, rad_irk = _dim_irk_of_set(rad_inside, q)
    return pairs, irk - rad_irk


def brute_sym_dim_irk(space, budget: int = DEFAULT_BUDGET) -> tuple[int, int]:
    """(pair count, isorank) of a whole subspace by the counting route."""
    space = _space_of(space)
    words = list(enumerate_codewords(space, budget))
    return _dim_irk_of_set(words, space.q)


def brute_codeword_set(space, budget: int = DEFAULT_BUDGET) -> set[Word]:
    return set(enumerate_codewords(space, budget))

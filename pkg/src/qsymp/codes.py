"""Codes in the symplectic ambient space, their parameters, and fixtures.

A code is any subspace of the n-factor space.  Its parameters are the
length ``n``, the dimension ``k`` (symplectic pair count), the isorank
``s``, the minimum distance ``d`` (least weight over codewords outside the
radical; undefined when every codeword is radical), and the maximum weight.
Stabilizer codes arise as orthogonal complements of isotropic subspaces;
subsystem codes arise from an arbitrary gauge code.
"""

from __future__ import annotations

from collections import namedtuple
from dataclasses import dataclass

import numpy as np

from .errors import DEFAULT_BUDGET, CommutationError, ParseError, check_budget
from .symplectic import Subspace, Vector

CodeParams = namedtuple("CodeParams", ["n", "k", "s", "d", "maxwt"])

PAULI_TO_FACTOR = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
FACTOR_TO_PAULI = {v: k for k, v in PAULI_TO_FACTOR.items()}


def _strip_phase(s: str) -> str:
    """Drop a leading sign and imaginary-unit prefix: the image is phase-blind.

    Only a lowercase ``i`` counts as the phase unit; an uppercase ``I`` is
    the identity letter.
    """
    body = s
    if body[:1] in "+-":
        body = body[1:]
    if body[:1] == "i":
        body = body[1:]
    return body


def pauli_to_vector(s: str) -> Vector:
    """Parse a Pauli word over I/X/Z/Y into interleaved coordinates (q=2)."""
    word = _strip_phase(s)
    coords = np.zeros(2 * len(word), dtype=np.int64)
    for i, letter in enumerate(word.upper()):
        try:
            x, z = PAULI_TO_FACTOR[letter]
        except KeyError:
            raise ParseError(f"unknown Pauli letter {letter!r} in {s!r}") from None
        coords[2 * i] = x
        coords[2 * i + 1] = z
    return coords


def vector_to_pauli(v) -> str:
    """Inverse of :func:`pauli_to_vector`; requires binary coordinates."""
    v = np.asarray(v, dtype=np.int64).reshape(-1, 2)
    if ((v != 0) & (v != 1)).any():
        raise ValueError("Pauli words exist only over the two-element field")
    return "".join(FACTOR_TO_PAULI[(int(x), int(z))] for x, z in v)


def parse_pauli_text(text: str) -> list[str]:
    """Read one generator per line; '#' starts a comment, blanks are skipped.

    Leading signs/phases (``-``, ``+``, lowercase ``i``) are discarded.
    """
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_phase(raw.split("#", 1)[0].strip())
        if not line:
            continue
        if any(c not in PAULI_TO_FACTOR for c in line.upper()):
            bad = next(c for c in line.upper() if c not in PAULI_TO_FACTOR)
            raise ParseError(f"unknown Pauli letter {bad!r}", line=lineno)
        out.append(line.upper())
    lengths = {len(s) for s in out}
    if len(lengths) > 1:
        raise ParseError(f"generators have inconsistent lengths {sorted(lengths)}")
    return out


def from_pauli(generators: list[str]) -> Subspace:
    """Span of the parsed generators, canonicalized, over the binary field."""
    if not generators:
        raise ValueError("cannot infer the factor count from an empty generator list")
    lengths = {len(s) for s in generators}
    if len(lengths) > 1:
        raise ParseError(f"generators have inconsistent lengths {sorted(lengths)}")
    rows = np.array([pauli_to_vector(s) for s in generators], dtype=np.int64)
    return Subspace(rows, 2, len(generators[0]))


class Code:
    """A subspace regarded as a code, with lazily computed parameters."""

    def __init__(self, space: Subspace):
        self.space = space
        self._weight_tables_cache: tuple[np.ndarray, np.ndarray] | None = None

    @property
    def q(self) -> int:
        return self.space.q

    @property
    def n(self) -> int:
        return self.space.n

    @property
    def dim_f(self) -> int:
        return self.space.dim_f

    @property
    def k(self) -> int:
        return self.space.sym_dim

    @property
    def s(self) -> int:
        return self.space.isorank

    def dual(self) -> "Code":
        return Code(self.space.perp())

    def radical_space(self) -> Subspace:
        return self.space.radical()

    def is_stabilizer(self) -> bool:
        return self.space.is_stabilizer()

    def __eq__(self, other) -> bool:
        return isinstance(other, Code) and self.space == other.space

    def __hash__(self) -> int:
        return hash(("Code", self.space))

    def __repr__(self) -> str:
        return f"Code(q={self.q}, n={self.n}, dim_f={self.dim_f})"

    def _weight_tables(self, budget: int) -> tuple[np.ndarray, np.ndarray]:
        """Counts of codewords by weight: (all, outside-the-radical)."""
        if self._weight_tables_cache is not None:
            return self._weight_tables_cache
        n, q = self.n, self.q
        all_counts = np.zeros(n + 1, dtype=np.int64)
        nonrad_counts = np.zeros(n + 1, dtype=np.int64)
        gram = self.space._gram
        for digits, words in codeword_batches(self.space, budget):
            weights = (words.reshape(words.shape[0], n, 2) != 0).any(axis=2).sum(axis=1)
            np.add.at(all_counts, weights, 1)
            if gram.size:
                nonrad = ((digits @ gram) % q).any(axis=1)
                np.add.at(nonrad_counts, weights[nonrad], 1)
        self._weight_tables_cache = (all_counts, nonrad_counts)
        return self._weight_tables_cache

    def distance(self, budget: int = DEFAULT_BUDGET) -> int | None:
        """Exact minimum distance by enumeration; None when no codeword counts.

        Enumeration is skipped entirely for isotropic codes, where the set of
        eligible codewords is empty.
        """
        if self.space.is_isotropic():
            return None
        _, nonrad = self._weight_tables(budget)
        hits = np.nonzero(nonrad)[0]
        return int(hits[0]) if hits.size else None

    def max_weight(self, budget: int = DEFAULT_BUDGET) -> int:
        if self.dim_f == 0:
            return 0
        all_counts, _ = self._weight_tables(budget)
        return int(np.nonzero(all_counts)[0][-1])

    def params(self, budget: int = DEFAULT_BUDGET) -> CodeParams:
        return CodeParams(
            n=self.n,
            k=self.k,
            s=self.s,
            d=self.distance(budget),
            maxwt=self.max_weight(budget),
        )

    def to_json_dict(self, role: str = "code") -> dict:
        out = self.space.to_json_dict()
        out["role"] = role
        return out


def codeword_batches(space: Subspace, budget: int = DEFAULT_BUDGET, batch_size: int = 1 << 13):
    """Yield ``(coefficient_digits, codewords)`` arrays covering the space once.

    Codeword ``i`` has mixed-radix coefficient digits of ``i`` (least
    significant first) against the canonical basis, so the order is
    deterministic.  Refuses to start if ``q ** dim_f`` exceeds the budget.
    """
    q, k = space.q, space.dim_f
    total = q**k
    check_budget(total, budget, "codeword enumeration")
    if k == 0:
        digits = np.zeros((1, 0), dtype=np.int64)
        yield digits, np.zeros((1, 2 * space.n), dtype=np.int64)
        return
    powers = q ** np.arange(k, dtype=np.int64)
    for start in range(0, total, batch_size):
        idx = np.arange(start, min(start + batch_size, total), dtype=np.int64)
        digits = (idx[:, None] // powers) % q
        yield digits, (digits @ space.basis) % q


def stabilizer_code_from_isotropic(s: Subspace) -> Code:
    """The code whose radical is exactly ``s``: its orthogonal complement.

    Rejects non-isotropic input, naming the first offending generator pair.
    """
    gram = s._gram
    bad = np.argwhere(gram % s.q != 0)
    if bad.size:
        i, j = (int(x) for x in bad[0])
        raise CommutationError(i, j, int(gram[i, j]))
    return Code(s.perp())


@dataclass(frozen=True)
class SubsystemCode:
    """Gauge code plus the derived stabilizer and normalizer."""

    gauge: Code
    stabilizer: Subspace
    normalizer: Code
    logical_count: int


def subsystem_from_gauge(gauge: Code | Subspace) -> SubsystemCode:
    """Derive the subsystem structure of an arbitrary gauge code.

    The stabilizer is the gauge's radical and the normalizer is the
    stabilizer's complement; the logical count is the normalizer's pair
    count minus the gauge's.
    """
    d = gauge if isinstance(gauge, Code) else Code(gauge)
    stab = d.space.radical()
    normalizer = Code(stab.perp())
    return SubsystemCode(
        gauge=d,
        stabilizer=stab,
        normalizer=normalizer,
        logical_count=normalizer.space.sym_dim - d.space.sym_dim,
    )


# Named fixture codes used throughout the test-suite and the demos.

REPETITION_STABILIZERS = ("ZZ",)
BACON_SHOR_GAUGE = ("XXII", "IIXX", "ZIZI", "IZIZ")
SHOR_STABILIZERS = (
    "ZZIIIIIII",
    "IZZIIIIII",
    "IIIZZIIII",
    "IIIIZZIII",
    "IIIIIIZZI",
    "IIIIIIIZZ",
    "XXXXXXIII",
    "IIIXXXXXX",
)


def repetition_code() -> Code:
    """The two-factor bit-flip repetition code, a [[2,1,1]] stabilizer code."""
    return stabilizer_code_from_isotropic(from_pauli(list(REPETITION_STABILIZERS)))


def bacon_shor_code() -> SubsystemCode:
    """The 2x2 Bacon-Shor subsystem code, a [[4,1,2]] code."""
    return subsystem_from_gauge(Code(from_pauli(list(BACON_SHOR_GAUGE))))


def shor_code() -> Code:
    """The nine-factor Shor code, a [[9,1,3]] stabilizer code."""
    return stabilizer_code_from_isotropic(from_pauli(list(SHOR_STABILIZERS)))


def shor_stabilizer_rows() -> np.ndarray:
    """The eight Shor stabilizer generators in their conventional order."""
    return np.array([pauli_to_vector(s) for s in SHOR_STABILIZERS], dtype=np.int64)


def random_subspace(rng: np.random.Generator, q: int, n: int, rows: int | None = None) -> Subspace:
    """Span of uniformly random rows (so the resulting dimension varies)."""
    if rows is None:
        rows = int(rng.integers(0, 2 * n + 1))
    return Subspace(rng.integers(0, q, size=(rows, 2 * n)), q, n)


def random_code(rng: np.random.Generator, q: int, n: int) -> Code:
    return Code(random_subspace(rng, q, n))


def random_isotropic(rng: np.random.Generator, q: int, n: int, dim_f: int | None = None) -> Subspace:
    """A random isotropic subspace, grown one orthogonal vector at a time."""
    if dim_f is None:
        dim_f = int(rng.integers(0, n + 1))
    if dim_f > n:
        raise ValueError(f"isotropic dimension {dim_f} exceeds the bound {n}")
    s = Subspace.zero(q, n)
    while s.dim_f < dim_f:
        room = s.perp()
        coeffs = rng.integers(0, q, size=room.dim_f)
        v = (coeffs @ room.basis) % q
        if not v.any() or v in s:
            continue
        s = s + Subspace(v.reshape(1, -1), q, n)
    return s


def random_stabilizer_code(rng: np.random.Generator, n: int, q: int = 2) -> Code:
    """A random stabilizer code: the complement of a random isotropic space."""
    return stabilizer_code_from_isotropic(random_isotropic(rng, q, n))

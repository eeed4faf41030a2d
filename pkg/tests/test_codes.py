import pytest

from qsymp.codes import (
    Code,
    bacon_shor_code,
    codeword_batches,
    from_pauli,
    parse_pauli_text,
    pauli_to_vector,
    random_code,
    random_isotropic,
    random_stabilizer_code,
    repetition_code,
    shor_code,
    stabilizer_code_from_isotropic,
    subsystem_from_gauge,
    vector_to_pauli,
)
from qsymp.errors import BudgetExceededError, CommutationError, ParseError
from qsymp.symplectic import Subspace


# ---------------------------------------------------------------------------
# Pauli parsing


def test_pauli_letter_map():
    assert pauli_to_vector("IXZY").tolist() == [0, 0, 1, 0, 0, 1, 1, 1]
    assert vector_to_pauli([0, 0, 1, 0, 0, 1, 1, 1]) == "IXZY"


def test_from_pauli_repetition_stabilizer():
    assert from_pauli(["ZZ"]) == Subspace([[0, 1, 0, 1]], 2, 2)


def test_from_pauli_identity_word_gives_zero_space():
    assert from_pauli(["II"]) == Subspace.zero(2, 2)


def test_from_pauli_shor_generators():
    s = from_pauli(
        ["ZZIIIIIII", "IZZIIIIII", "IIIZZIIII", "IIIIZZIII",
         "IIIIIIZZI", "IIIIIIIZZ", "XXXXXXIII", "IIIXXXXXX"]
    )
    assert s.n == 9
    assert s.dim_f == 8
    assert s.is_isotropic()


def test_pauli_round_trip_up_to_row_reduction():
    gens = ["XXII", "IIXX", "ZIZI", "IZIZ"]
    space = from_pauli(gens)
    again = from_pauli([vector_to_pauli(row) for row in space.basis])
    assert again == space


def test_pauli_parse_errors():
    with pytest.raises(ParseError):
        pauli_to_vector("XQZ")
    with pytest.raises(ParseError):
        from_pauli(["XX", "XXX"])
    with pytest.raises(ParseError) as err:
        parse_pauli_text("XX\nXB\n")
    assert "line 2" in str(err.value)


def test_pauli_file_comments_and_blanks():
    text = "# stabilizers\n\nZZ  # weight two\n"
    assert parse_pauli_text(text) == ["ZZ"]


def test_pauli_signs_and_phases_are_discarded():
    assert parse_pauli_text("-ZZ\n+XX\n-iYI\niIZ\n") == ["ZZ", "XX", "YI", "IZ"]
    assert (pauli_to_vector("-iXZ") == pauli_to_vector("XZ")).all()
    # an uppercase I is the identity letter, never a phase
    assert parse_pauli_text("-IXZ\n") == ["IXZ"]


def test_vector_to_pauli_rejects_larger_fields():
    with pytest.raises(ValueError):
        vector_to_pauli([2, 0])


# ---------------------------------------------------------------------------
# stabilizer construction


def test_repetition_code_construction():
    c = repetition_code()
    expected = Subspace([[1, 0, 1, 0], [0, 1, 0, 1], [0, 1, 0, 0]], 2, 2)
    assert c.space == expected
    assert c.is_stabilizer()
    assert c.radical_space() == from_pauli(["ZZ"])


def test_stabilizer_from_zero_space_is_everything():
    c = stabilizer_code_from_isotropic(Subspace.zero(2, 3))
    assert c.space == Subspace.full(2, 3)
    assert c.k == 3


def test_shor_construction():
    c = shor_code()
    assert (c.n, c.dim_f, c.k, c.s) == (9, 10, 1, 9)
    assert c.is_stabilizer()


def test_non_commuting_generators_are_rejected():
    bad = from_pauli(["XI", "ZI"])
    with pytest.raises(CommutationError) as err:
        stabilizer_code_from_isotropic(bad)
    msg = str(err.value)
    assert "generators 1 and 2" in msg


# ---------------------------------------------------------------------------
# subsystem construction


def test_bacon_shor_subsystem():
    sub = bacon_shor_code()
    assert sub.stabilizer == from_pauli(["XXXX", "ZZZZ"])
    assert sub.normalizer.dim_f == 6
    assert sub.logical_count == 1
    assert sub.gauge.k == 1 and sub.gauge.s == 3
    # sandwich: dual of normalizer <= gauge <= normalizer
    assert sub.gauge.space.contains_space(sub.normalizer.space.perp())
    assert sub.normalizer.space.contains_space(sub.gauge.space)
    assert sub.gauge.space.radical() == sub.normalizer.space.perp()


def test_isotropic_gauge_degenerates():
    d = Code(from_pauli(["ZZ"]))
    sub = subsystem_from_gauge(d)
    assert sub.stabilizer == d.space
    assert sub.gauge.k == 0
    assert sub.logical_count == sub.normalizer.k


def test_subsystem_invariants_random(rng):
    for _ in range(25):
        n = int(rng.integers(1, 5))
        sub = subsystem_from_gauge(random_code(rng, 2, n))
        assert sub.stabilizer.is_isotropic()
        assert sub.normalizer.space.contains_space(sub.gauge.space)
        assert sub.gauge.space.contains_space(sub.normalizer.space.perp())
        assert sub.gauge.space.radical() == sub.normalizer.space.perp()
        assert sub.logical_count == sub.normalizer.k - sub.gauge.k
        assert sub.logical_count >= 0


# ---------------------------------------------------------------------------
# parameters


def test_repetition_params(repetition):
    assert tuple(repetition.params()) == (2, 1, 2, 1, 2)


def test_bacon_shor_normalizer_params(bacon_shor):
    assert tuple(bacon_shor.normalizer.params()) == (4, 2, 4, 2, 4)


def test_shor_distance(shor):
    assert shor.distance() == 3
    assert shor.params().maxwt == 9


def test_zero_code_params():
    c = Code(Subspace.zero(2, 3))
    assert tuple(c.params()) == (3, 0, 0, None, 0)


def test_isotropic_code_has_no_distance():
    c = Code(from_pauli(["ZZ"]))
    assert c.distance() is None


def test_distance_budget_guard(shor):
    fresh = shor_code()
    with pytest.raises(BudgetExceededError) as err:
        fresh.distance(budget=100)
    assert err.value.needed == 2**10
    assert err.value.to_dict()["error"] == "budget-exceeded"


def test_codeword_batches_cover_the_code(repetition):
    words = set()
    for _digits, batch in codeword_batches(repetition.space):
        words.update(tuple(int(x) for x in row) for row in batch)
    assert len(words) == 8
    assert all(w in repetition.space for w in words)


def test_dimension_bound_by_max_weight(rng):
    for _ in range(40):
        q = int(rng.choice([2, 3]))
        code = random_code(rng, q, int(rng.integers(1, 4)))
        assert code.k <= code.max_weight()


def test_singleton_bound_on_random_stabilizer_codes(rng):
    for _ in range(40):
        code = random_stabilizer_code(rng, int(rng.integers(1, 6)))
        d = code.distance()
        if d is not None:
            assert 2 * (d - 1) <= code.n - code.k


def test_random_isotropic_is_isotropic(rng):
    for q in (2, 3):
        for _ in range(15):
            n = int(rng.integers(1, 5))
            s = random_isotropic(rng, q, n)
            assert s.is_isotropic()
            assert s.dim_f <= n
    with pytest.raises(ValueError):
        random_isotropic(rng, 2, 2, dim_f=3)

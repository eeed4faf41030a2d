"""Codes from Pauli words, their parameters, and subsystem structure."""

from qsymp import (
    Code,
    bacon_shor_code,
    from_pauli,
    repetition_code,
    shor_code,
    stabilizer_code_from_isotropic,
    subsystem_from_gauge,
    vector_to_pauli,
)

# A stabilizer code is the orthogonal complement of a commuting generator set.
rep = repetition_code()          # built from the single generator ZZ
print("repetition code params (n, k, s, d, maxwt):", tuple(rep.params()))
print("canonical basis as Pauli words:", [vector_to_pauli(r) for r in rep.space.basis])

# Non-commuting input is rejected with the offending pair named.
try:
    stabilizer_code_from_isotropic(from_pauli(["XI", "ZI"]))
except Exception as exc:
    print("rejected:", exc)

# The nine-factor code: eight generators, one logical pair, distance three.
shor = shor_code()
print("\nnine-factor code params:", tuple(shor.params()))

# A subsystem code comes from any gauge code: its radical is the stabilizer,
# the stabilizer's complement is the normalizer.
sub = bacon_shor_code()
print("\n2x2 subsystem code:")
print("  stabilizer:", [vector_to_pauli(r) for r in sub.stabilizer.basis])
print("  gauge pair count:", sub.gauge.k, " normalizer pair count:", sub.normalizer.k)
print("  logical count:", sub.logical_count)
print("  normalizer params:", tuple(sub.normalizer.params()))

# Any code works as a gauge; the sandwich dual(C) <= D <= C always holds.
d = Code(from_pauli(["XXI", "IZZ"]))
sub2 = subsystem_from_gauge(d)
print("\nad-hoc gauge on three factors -> logical count", sub2.logical_count)

"""Anticodes as supports, puncturing/shortening, and the cleaning identity."""

from qsymp import (
    Anticode,
    puncture,
    repetition_code,
    s_prime_decompose,
    shor_code,
    shorten,
    vector_to_pauli,
    verify_cleaning,
)
from qsymp.codes import shor_stabilizer_rows

# An anticode is the free subspace on a support; it is determined by the
# support alone, so the lattice operations are set operations.
a = Anticode(9, frozenset(range(4)))        # factors 1..4 (0-based inside)
print("anticode support:", sorted(a.support), "dim:", a.dim)
print("complement support:", sorted(a.complement().support))

rep = repetition_code()
first = Anticode(2, frozenset({0}))
print("\nshortening the two-factor code to its first factor:",
      shorten(rep, first).basis.tolist())

# The cleaning identity: shortening the dual equals the dual of the
# puncturing (and symmetrically), inside the punctured ambient space.
for check in verify_cleaning(rep, first):
    print(f"{check.identity}: {'pass' if check.passed else 'FAIL'}")

# Below the distance, puncturing cannot see anything beyond the radical.
shor = shor_code()
small = Anticode(9, frozenset({1, 5}))
print("\npuncturing below the distance equals puncturing the radical:",
      puncture(shor, small) == puncture(shor.radical_space(), small))

# The radical decomposes against any support into the part inside, the part
# inside the complement, and a transversal summand that projects injectively
# onto both sides.
dec = s_prime_decompose(shor, a, radical_rows=shor_stabilizer_rows())
print("\nradical split against factors 1..4:")
print("  inside support:   ", [vector_to_pauli(r) for r in dec.rad_in_a.basis])
print("  inside complement:", [vector_to_pauli(r) for r in dec.rad_in_aperp.basis])
print("  transversal:      ", [vector_to_pauli(r) for r in dec.s_prime.basis])

pf = puncture(dec.s_prime, a)
pb = puncture(dec.s_prime, a.complement())
print("\npunctured transversal, front:", [vector_to_pauli(r) for r in pf.basis])
print("punctured transversal, back: ", [vector_to_pauli(r) for r in pb.basis])
print("pair counts match:", pf.sym_dim, "=", pb.sym_dim)
print("isoranks match:   ", pf.isorank, "=", pb.isorank,
      " (one pair + a one-dimensional radical on each side)")

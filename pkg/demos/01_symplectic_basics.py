"""Tour of the symplectic substrate: vectors, the product, and subspaces.

Vectors over n factors are stored in interleaved coordinates
(x_1, z_1, ..., x_n, z_n); factor i carries x_i*e + z_i*f for the defining
pair (e, f).  Everything below prints, so just run the file.
"""

from qsymp import Subspace, hamming_weight, support_of, symplectic_form, vector_from_factors

E, F, O = (1, 0), (0, 1), (0, 0)

# The defining relation: the product of the pair (e, f) is 1.
u = vector_from_factors([E, O])
v = vector_from_factors([F, O])
print("product of (e,0) and (f,0):", symplectic_form(u, v, 2))

# Over the binary field the product of (e,e) with (f,f) vanishes: 1 + 1 = 0.
print("product of (e,e) and (f,f):", symplectic_form(vector_from_factors([E, E]),
                                                     vector_from_factors([F, F]), 2))

# Weight counts the nonzero factors, not the nonzero coordinates.
w = vector_from_factors([E, O, (1, 1)])
print("weight of (e, 0, e+f):", hamming_weight(w), "support:", support_of(w))

# A subspace canonicalizes its spanning rows, so equality is structural.
c = Subspace([vector_from_factors([E, E]),
              vector_from_factors([F, F]),
              vector_from_factors([F, O])], q=2)
print("\nthe two-factor code, canonical basis:")
print(c.basis)

# Its orthogonal complement is the span of (f,f): one line, as dimensions demand.
print("dual basis:", c.perp().basis.tolist())
print("radical equals the dual here:", c.radical() == c.perp())

# The orthogonal splitting: pairs plus radical.
split = c.orthogonal_split()
print("\nsplitting: %d pair(s), radical of dimension %d"
      % (len(split.pairs), split.radical_basis.shape[0]))
print("pair count (dim) =", c.sym_dim, " isorank =", c.isorank,
      " dim_F =", c.dim_f, "= dim + isorank")

# Saturating isorank = n characterizes the self-orthogonal ("stabilizer") case.
print("is a stabilizer subspace:", c.is_stabilizer())

# The two invariants are monotone and, on orthogonal pairs, modular -- but
# NOT modular on arbitrary pairs.  The classic counterexample:
w1 = Subspace([[1, 0, 0, 0], [0, 1, 0, 0]], 2, 2)   # span{e1, f1}
w2 = Subspace([[1, 0, 1, 0], [0, 1, 0, 0]], 2, 2)   # span{e1+e2, f1}
s, m = w1 + w2, w1 & w2
print("\ncounterexample to pair-count supermodularity:")
print("dim(sum) + dim(meet) =", s.sym_dim + m.sym_dim,
      "<", w1.sym_dim + w2.sym_dim, "= dim(W1) + dim(W2)")

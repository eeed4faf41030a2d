"""Support profiles, generalized weights, and the Singleton-type bounds."""

from qsymp import (
    Anticode,
    alpha,
    bacon_shor_code,
    beta,
    invariant_table,
    repetition_code,
    shor_code,
    verify_bounds,
)

# alpha counts the pairs of the code's part inside an anticode; beta counts
# the isorank excess of that part over the radical's part.
bs = bacon_shor_code().normalizer
a = Anticode(4, frozenset({0, 1, 2}))
print("alpha on factors 1..3:", alpha(bs, a), " beta:", beta(bs, a))

# Profiles maximize the maps at fixed support size; generalized weights
# minimize the support size at prescribed map values.
table = invariant_table(bs)
print("\n2x2 subsystem normalizer:")
print(table.format_table())

rep = repetition_code()
table = invariant_table(rep)
print("\ntwo-factor code:")
print(table.format_table())
print("note: the size-1 alpha-profile is 0 because the isotropic span of")
print("(e,e) and (f,f) is not an anticode (pair count 0 < max weight 2);")
print("only free supports qualify.")

# The first beta-weight equals the distance whenever the dual sits inside
# the code; the weights then satisfy the quantum Singleton bound.
shor = shor_code()
t = invariant_table(shor)
print("\nnine-factor code: varphi_1 =", t.varphi[0], "= distance", shor.distance())

print("\nbound suite on the nine-factor code:")
for check in verify_bounds(shor):
    status = "pass" if check.passed else "FAIL"
    extra = f" ({check.note})" if check.note else ""
    print(f"  {check.identity}: {status}{extra}")

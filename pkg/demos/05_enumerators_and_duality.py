"""Weight distributions, binomial moments, enumerators, and duality."""

from qsymp import (
    binomial_moments,
    distance_from_enumerators,
    distribution_from_moments,
    enumerator_polys,
    format_enumerator,
    macwilliams_check,
    moments_from_distribution,
    repetition_code,
    shor_code,
    weight_distribution,
)

rep = repetition_code()

# The weight distribution counts codewords by weight; binomial moments sum
# supported-part sizes over all supports of each size.
w = weight_distribution(rep)
b = binomial_moments(rep)
print("distribution:", w)
print("moments:     ", b)

# The two tables carry the same information: exact integer transforms.
print("transform forward: ", moments_from_distribution(w) == b)
print("transform backward:", distribution_from_moments(b) == w)

# Enumerator polynomials: the full one from all codewords, the radical one
# from the radical only.  The distance is the trailing degree of their gap.
a_poly, b_poly = enumerator_polys(rep)
print("\nB(x, y) =", format_enumerator(b_poly))
print("A(x, y) =", format_enumerator(a_poly))
print("trailing degree of B - A:", distance_from_enumerators(a_poly, b_poly),
      "= distance", rep.distance())

# Duality: the dual's moments mirror the code's with the factor
# q^(2*dim(A) - dim_F).  For the two-factor code the first dual moment is
#   2^(2 - 3) * 4 = 2.
print("\ndual moments:", binomial_moments(rep.dual()))
for check in macwilliams_check(rep):
    status = "pass" if check.passed else "FAIL"
    extra = f" ({check.note})" if check.note else ""
    print(f"  {check.identity}: {status}{extra}")

# Same machinery at the nine-factor scale (1024 codewords).
shor = shor_code()
a_poly, b_poly = enumerator_polys(shor)
print("\nnine-factor code: B(1,1) =", sum(b_poly), " A(1,1) =", sum(a_poly),
      " trailing degree =", distance_from_enumerators(a_poly, b_poly))

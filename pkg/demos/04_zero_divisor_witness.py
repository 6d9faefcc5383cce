"""Why a disjoint torus pair bounds the motion-planning complexity from below.

Given a decomposable m-torus and a disjoint decomposable l-torus, one builds
m(r-1) + l cohomology classes on the r-fold product, each vanishing on the
diagonal (zero-divisors), whose product survives pullback to a torus of
exactly that dimension.  The survival is witnessed by the coefficient of the
fundamental-class monomial being +1 or -1.

This script shows the machinery at small size: the substituted zero-divisor
factors, the expansion, and the unimodular witness across a grid.
"""

from striptc import evaluate_witness, surviving_terms, witness_factor_count, zeta_pullback

print("substituted zero-divisor factors for (m, l, r) = (1, 1, 2):")
print("  z-class on factors (1,2):", zeta_pullback(("z", 1), 1, 2, 1, 1, 2))
print("  y-class on factors (1,2):", zeta_pullback(("y", 1), 1, 2, 1, 1, 2))
print("  product expands to a single monomial:")
for mono, coeff in surviving_terms(1, 1, 2):
    label = " ".join(str(g) for g in mono)
    print(f"    ({coeff}) * {label}")
print()

print("for r = 3 the y-classes chain along consecutive factors:")
print("  y on factors (2,3):", zeta_pullback(("y", 1), 2, 3, 1, 1, 3))
print()

print("witness values across the grid (a sound certificate gives +1 or -1):")
print(f"{'m':>3} {'l':>3} {'r':>3} {'factors':>8} {'value':>6} {'terms':>6}")
for m in range(1, 5):
    for l in range(1, m + 1):
        for r in range(2, 5):
            value = evaluate_witness(m, l, r)
            terms = surviving_terms(m, l, r)
            print(
                f"{m:>3} {l:>3} {r:>3} {witness_factor_count(m, l, r):>8} "
                f"{str(value):>6} {len(terms):>6}"
            )

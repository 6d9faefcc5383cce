"""Build and verify the disjoint decomposable torus pairs.

A wheel W(i1,...,ik) is an embedded torus: i2 orbits i1, i3 orbits both, and
so on; products of disjoint wheels placed left to right are again tori.  For
each (n, w) the certificate is a pair A, B of such products whose degree-1
homology images are independent and span trivially-intersecting subspaces.
Such a pair certifies the lower bound (r-1)m + l for the r-stop sequential
topological complexity, and the same bound for the distributional variant.

The verification is doubled: once symbolically in the wheel basis (exact
rational elimination), and once at chain level in the cell model (GF(2)
cycles modulo boundaries).
"""

from striptc import ComplexParams, build_tori, product_h1_image, verify_certificate

for (n, w) in [(3, 2), (4, 2), (7, 3), (5, 5)]:
    params = ComplexParams(n, w)
    pair = build_tori(params)
    print(f"(n={n}, w={w}):")
    print(f"  A = {pair.A}   ({pair.m}-torus)")
    print(f"  B = {pair.B}   ({pair.l}-torus)")
    print("  image of A in degree-1 homology:")
    for v in product_h1_image(pair.A):
        print(f"    {v!r}")
    print("  image of B in degree-1 homology:")
    for v in product_h1_image(pair.B):
        print(f"    {v!r}")

    report = verify_certificate(params)
    print(f"  decomposable: A={report.decomposable_A} B={report.decomposable_B}")
    print(f"  disjoint (symbolic): {report.disjoint_symbolic}")
    if report.disjoint_chain is None:
        print(f"  disjoint (chain oracle): skipped - {report.chain_skipped_reason}")
    else:
        print(f"  disjoint (chain oracle): {report.disjoint_chain}")
    bounds = ", ".join(f"r={r}: {report.lower_bound(r)}" for r in range(2, 6))
    print(f"  certified lower bounds: {bounds}\n")

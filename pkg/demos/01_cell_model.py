"""Walk through the cell model of disk configurations in a strip.

The configuration space of n unit disks in an infinite strip of width w
deformation-retracts onto a finite CW complex whose cells are *symbols*:
orderings of 1..n cut by bars into blocks of size at most w.  This script
enumerates the model for small parameters and shows the face/coface moves.
"""

from striptc import ComplexParams, Symbol, cell_count, cofaces, enumerate_cells, faces

params = ComplexParams(n=3, w=2)
print(f"model for n={params.n} disks in a width-{params.w} strip")
print(f"dimension formula: n - ceil(n/w) = {params.top_dimension}\n")

for d in range(params.n):
    cells = enumerate_cells(params, d)
    print(f"dimension {d}: {len(cells)} cells")
    if cells:
        print("   " + ", ".join(str(s) for s in cells))
print()

# deleting a bar merges two blocks, in every riffle order that keeps each
# block's internal order; that is the coface move
v = Symbol.parse("1|2|3")
print(f"cofaces of {v}: " + ", ".join(str(c) for c in cofaces(v, params)))

e = Symbol.parse("1 2|3")
print(f"faces of {e}:   " + ", ".join(str(f) for f in faces(e, params)))
print(f"cofaces of {e}: none (merging would stack 3 disks in a width-2 strip)\n")

# the width bound caps the dimension: a block needs its disks stacked abreast
print("cell counts across a small grid (rows n, columns w):")
for n in range(1, 7):
    row = []
    for w in range(1, n + 1):
        p = ComplexParams(n, w)
        total = sum(cell_count(p, d) for d in range(n))
        row.append(f"w={w}: {total:>6} cells, top dim {p.top_dimension}")
    print(f"  n={n}: " + " | ".join(row))

"""F2 chain complex of the strip model: boundaries, ranks, Betti numbers.

All chain-level arithmetic is over the two-element field.  The integral
homology of these complexes is free, so F2 ranks already determine the
rational Betti numbers, and working mod 2 sidesteps orientation bookkeeping
entirely.

The expensive pieces are organized around one primitive: incremental GF(2)
column reduction (:mod:`._gf2`).  Ranks of the boundary matrices are computed
top dimension first so that the pivot rows of the reduced boundary in
dimension d+1 can *clear* columns of the boundary in dimension d (a cleared
column is a linear combination of earlier ones and contributes nothing to the
rank).  The reduction of the degree-2 boundary is kept alive afterwards: it
is the workhorse for deciding whether degree-1 cycles are independent modulo
boundaries.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial

import numpy as np

from ._gf2 import F2RankEngine, rank_f2
from .errors import (
    DimensionMismatchError,
    InvalidParamsError,
    NotACycleError,
    ResourceLimitError,
)
from .symbols import ComplexParams, cell_count, compositions

__all__ = [
    "BOUNDARY_CONVENTION",
    "ChainComplexF2",
    "ChainVector",
    "betti",
    "build_complex",
    "classes_independent",
    "clear_cache",
    "get_complex",
    "rank_f2",
]

# Version tag of the boundary convention (riffle-shuffle cofaces, mod-2
# multiplicities).  Cached artifacts are keyed on it: changing the shuffle
# interpretation must invalidate every cache.
BOUNDARY_CONVENTION = "riffle-mod2-v1"

DEFAULT_MAX_CELLS = 3_000_000
DEFAULT_MEMORY_BUDGET = 4 * 1024**3


@dataclass(frozen=True)
class ChainVector:
    """An F2 chain: a dimension plus the set of supporting cell indices."""

    dimension: int
    support: frozenset[int]

    def as_array(self) -> np.ndarray:
        return np.array(sorted(self.support), dtype=np.int32)


def _estimate_cost(params: ComplexParams) -> tuple[list[int], int, int]:
    """Cell counts per dimension, total boundary entries, rough byte footprint."""
    n, w = params.n, params.w
    counts = []
    nnz = 0
    for d in range(params.top_dimension + 1):
        counts.append(cell_count(params, d))
        if d >= 1:
            per_perm = sum(
                sum((1 << part) - 2 for part in comp)
                for comp in compositions(n, n - d, w)
            )
            nnz += factorial(n) * per_perm
    # cell string + list slot + index dict entry, plus CSC entries
    est_bytes = sum(counts) * 180 + nnz * 12
    return counts, nnz, est_bytes


def _serialize(perm: tuple[int, ...], cuts: tuple[int, ...]) -> str:
    parts = []
    prev = 0
    for c in cuts:
        parts.append(" ".join(map(str, perm[prev:c])))
        prev = c
    parts.append(" ".join(map(str, perm[prev:])))
    return "|".join(parts)


class ChainComplexF2:
    """Built complex: sorted cell lists per dimension plus CSC boundaries.

    ``cells[d]`` is the lexicographically sorted list of serialized d-cells;
    ``boundary_csc(d)`` gives the mod-2 boundary matrix with one column per
    d-cell and one row per (d-1)-cell, columns sorted by row index.
    """

    def __init__(self, params: ComplexParams, memory_budget: int | None = None):
        self.params = params
        self.memory_budget = memory_budget
        self.cells: list[list[str]] = []
        self._indptr: list[np.ndarray | None] = [None]
        self._indices: list[np.ndarray | None] = [None]
        self._index: list[dict[str, int]] = []
        self._rank: dict[int, int] = {}
        self._pivot_rows: dict[int, np.ndarray] = {}
        self._engines: dict[int, F2RankEngine] = {}

    # -- structure ---------------------------------------------------------

    @property
    def top_dimension(self) -> int:
        return len(self.cells) - 1

    def n_cells(self, d: int) -> int:
        if 0 <= d <= self.top_dimension:
            return len(self.cells[d])
        return 0

    def cell_counts(self) -> list[int]:
        return [len(c) for c in self.cells]

    def cell_index(self, d: int, serialization: str) -> int:
        return self._index[d][serialization]

    def boundary_csc(self, d: int) -> tuple[np.ndarray, np.ndarray, int]:
        """(indptr, indices, nrows) of the boundary from dimension d to d-1."""
        if not 1 <= d <= self.top_dimension:
            raise InvalidParamsError(f"no boundary matrix in dimension {d}")
        return self._indptr[d], self._indices[d], self.n_cells(d - 1)

    def boundary_matrix(self, d: int) -> np.ndarray:
        """Dense uint8 boundary matrix; intended for small complexes only."""
        indptr, indices, nrows = self.boundary_csc(d)
        ncols = len(indptr) - 1
        out = np.zeros((nrows, ncols), dtype=np.uint8)
        for j in range(ncols):
            out[indices[indptr[j]:indptr[j + 1]], j] = 1
        return out

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * c for d, c in enumerate(self.cell_counts()))

    # -- ranks and homology --------------------------------------------------

    def _reduce(self, d: int) -> None:
        """Reduce the dimension-d boundary, reusing clearing info from above."""
        if d in self._rank:
            return
        top = self.top_dimension
        if d < 1 or d > top:
            self._rank[d] = 0
            self._pivot_rows[d] = np.zeros(0, dtype=np.int64)
            return
        self._reduce(d + 1)
        indptr, indices, nrows = self.boundary_csc(d)
        ncols = len(indptr) - 1
        mask = np.ones(ncols, dtype=bool)
        cleared = self._pivot_rows[d + 1]
        if cleared.size:
            mask[cleared] = False
        engine = F2RankEngine(nrows, self.memory_budget)
        engine.add_csc(indptr, indices, mask)
        self._rank[d] = engine.rank
        self._pivot_rows[d] = engine.pivot_rows()
        # degree-2 reduction doubles as the oracle for degree-1 cycle classes
        if d == 2:
            self._engines[d] = engine

    def rank_boundary(self, d: int) -> int:
        self._reduce(d)
        return self._rank[d]

    def _engine_for(self, d: int) -> F2RankEngine:
        """Reduction state of the dimension-d boundary (built if needed)."""
        if d not in self._engines:
            if d < 1 or d > self.top_dimension:
                self._engines[d] = F2RankEngine(self.n_cells(d - 1) if d >= 1 else 0)
            else:
                self._reduce(d + 1)
                indptr, indices, nrows = self.boundary_csc(d)
                mask = np.ones(len(indptr) - 1, dtype=bool)
                cleared = self._pivot_rows[d + 1]
                if cleared.size:
                    mask[cleared] = False
                engine = F2RankEngine(nrows, self.memory_budget)
                engine.add_csc(indptr, indices, mask)
                self._rank.setdefault(d, engine.rank)
                self._pivot_rows.setdefault(d, engine.pivot_rows())
                self._engines[d] = engine
        return self._engines[d]

    def betti(self) -> list[int]:
        """Betti numbers b_0..b_top over F2 (= rational, homology is free)."""
        out = []
        for d in range(self.top_dimension + 1):
            b = self.n_cells(d) - self.rank_boundary(d) - self.rank_boundary(d + 1)
            out.append(b)
        return out

    # -- chain-level queries ---------------------------------------------------

    def boundary_of(self, vector: ChainVector) -> frozenset[int]:
        """Mod-2 boundary support of a chain."""
        d = vector.dimension
        if d < 0 or d > self.top_dimension:
            raise DimensionMismatchError(f"no cells in dimension {d}")
        if d == 0:
            return frozenset()
        indptr, indices, _ = self.boundary_csc(d)
        gathered = np.concatenate(
            [indices[indptr[j]:indptr[j + 1]] for j in sorted(vector.support)]
            or [np.zeros(0, dtype=np.int32)]
        )
        rows, counts = np.unique(gathered, return_counts=True)
        return frozenset(int(r) for r in rows[counts % 2 == 1])

    def verify_d_squared(self, chunk: int = 65536) -> None:
        """Check boundary-of-boundary vanishes mod 2 in every dimension.

        Raises AssertionError with the offending dimension on failure.
        """
        for d in range(2, self.top_dimension + 1):
            indptr, indices, _ = self.boundary_csc(d)
            indptr1, indices1, nrows1 = self.boundary_csc(d - 1)
            lens1 = np.diff(indptr1)
            ncols = len(indptr) - 1
            for a in range(0, ncols, chunk):
                b = min(a + chunk, ncols)
                faces = indices[indptr[a]:indptr[b]].astype(np.int64)
                col_of_face = np.repeat(
                    np.arange(a, b, dtype=np.int64), np.diff(indptr[a:b + 1])
                )
                sub = lens1[faces]
                total = int(sub.sum())
                if total == 0:
                    continue
                starts = np.repeat(indptr1[faces], sub)
                offs = np.arange(total, dtype=np.int64) - np.repeat(
                    np.cumsum(sub) - sub, sub
                )
                rows2 = indices1[starts + offs].astype(np.int64)
                cols2 = np.repeat(col_of_face, sub)
                keys = cols2 * nrows1 + rows2
                _, counts = np.unique(keys, return_counts=True)
                if np.any(counts % 2 != 0):
                    raise AssertionError(
                        f"boundary-of-boundary is nonzero in dimension {d}"
                    )


def build_complex(
    params: ComplexParams,
    *,
    max_cells: int | None = None,
    memory_budget: int | None = None,
    validate: bool = True,
) -> ChainComplexF2:
    """Build the full complex for (n, w), boundaries included.

    ``validate=True`` (the default) checks that the composite of consecutive
    boundary maps vanishes mod 2 before returning.

    Raises :class:`ResourceLimitError` if the predicted cell count or memory
    footprint exceeds the configured budget.
    """
    max_cells = DEFAULT_MAX_CELLS if max_cells is None else max_cells
    memory_budget = DEFAULT_MEMORY_BUDGET if memory_budget is None else memory_budget
    counts, _, est_bytes = _estimate_cost(params)
    if sum(counts) > max_cells:
        worst = int(np.argmax(counts))
        raise ResourceLimitError(
            f"complex for (n={params.n}, w={params.w}) has {sum(counts)} cells, "
            f"over the budget of {max_cells} (dimension {worst} alone has "
            f"{counts[worst]})",
            dimension=worst,
            count=counts[worst],
        )
    if est_bytes > memory_budget:
        raise ResourceLimitError(
            f"estimated footprint {est_bytes} bytes exceeds the memory budget "
            f"of {memory_budget} bytes",
            count=est_bytes,
        )

    n, w = params.n, params.w
    cx = ChainComplexF2(params, memory_budget)
    labels = tuple(range(1, n + 1))

    for d in range(params.top_dimension + 1):
        comps = list(compositions(n, n - d, w))
        strs: list[str] = []
        face_rows: list[list[int]] | None = [] if d >= 1 else None
        if d >= 1:
            below = cx._index[d - 1]
        for comp in comps:
            cuts = tuple(itertools.accumulate(comp))
            bar_cuts = cuts[:-1]
            starts = (0,) + cuts[:-1]
            split_blocks = [
                (s, e) for s, e in zip(starts, cuts) if e - s >= 2
            ]
            # precompute the bar layout of each face of this block pattern
            face_cut_cache = {
                (s, e, r): tuple(sorted(set(bar_cuts) | {s + r}))
                for (s, e) in split_blocks
                for r in range(1, e - s)
            }
            for perm in itertools.permutations(labels):
                strs.append(_serialize(perm, bar_cuts))
                if d == 0:
                    continue
                rows: list[int] = []
                for (s, e) in split_blocks:
                    size = e - s
                    block = perm[s:e]
                    for r in range(1, size):
                        for chosen in itertools.combinations(range(size), r):
                            in_chosen = set(chosen)
                            b1 = tuple(block[i] for i in chosen)
                            b2 = tuple(
                                block[i] for i in range(size) if i not in in_chosen
                            )
                            fperm = perm[:s] + b1 + b2 + perm[e:]
                            rows.append(
                                below[_serialize(fperm, face_cut_cache[(s, e, r)])]
                            )
                rows.sort()
                face_rows.append(rows)

        order = sorted(range(len(strs)), key=strs.__getitem__)
        cells_sorted = [strs[i] for i in order]
        cx.cells.append(cells_sorted)
        cx._index.append({s: i for i, s in enumerate(cells_sorted)})
        if d >= 1:
            indptr = np.zeros(len(order) + 1, dtype=np.int64)
            for col, gen in enumerate(order):
                indptr[col + 1] = indptr[col] + len(face_rows[gen])
            indices = np.empty(int(indptr[-1]), dtype=np.int32)
            for col, gen in enumerate(order):
                indices[indptr[col]:indptr[col + 1]] = face_rows[gen]
            cx._indptr.append(indptr)
            cx._indices.append(indices)

    if validate:
        cx.verify_d_squared()
    return cx


def betti(complex: ChainComplexF2) -> list[int]:
    """Betti numbers of a built complex."""
    return complex.betti()


def classes_independent(
    cycles: list[ChainVector], complex: ChainComplexF2
) -> bool:
    """True iff the cycles are linearly independent in homology over F2.

    Every vector must be a cycle of one common dimension d; independence is
    decided by whether each cycle enlarges the span of the dimension-(d+1)
    boundary image.  Over these complexes (free integral homology) mod-2
    independence of integral classes implies rational independence.
    """
    if not cycles:
        return True
    dims = {v.dimension for v in cycles}
    if len(dims) > 1:
        raise DimensionMismatchError(f"cycles span several dimensions: {sorted(dims)}")
    d = dims.pop()
    if d < 0 or d > complex.top_dimension:
        raise DimensionMismatchError(f"no cells in dimension {d}")
    ncells = complex.n_cells(d)
    for i, v in enumerate(cycles):
        if any(not 0 <= j < ncells for j in v.support):
            raise DimensionMismatchError(
                f"vector {i} indexes cells outside dimension {d}"
            )
        if d >= 1 and complex.boundary_of(v):
            raise NotACycleError(
                f"vector {i} has nonzero boundary", index=i
            )
    engine = complex._engine_for(d + 1).fork()
    added = 0
    for v in cycles:
        if engine.add_column(v.as_array()):
            added += 1
    return added == len(cycles)


_CACHE: dict[tuple[int, int], ChainComplexF2] = {}


def get_complex(
    params: ComplexParams,
    *,
    max_cells: int | None = None,
    memory_budget: int | None = None,
) -> ChainComplexF2:
    """Build-once cache of complexes keyed by (n, w)."""
    key = (params.n, params.w)
    if key not in _CACHE:
        _CACHE[key] = build_complex(
            params, max_cells=max_cells, memory_budget=memory_budget
        )
    return _CACHE[key]


def clear_cache() -> None:
    _CACHE.clear()

"""Rank reduction over the two-element field.

Columns are reduced left-looking against a cache of pivot columns, with the
pivot of a column being its largest nonzero row.  A column is kept in one of
two forms: a sorted ``int32`` index array while its support is sparse, or a
packed bit vector (a Python int, 64 bits per word) once its support exceeds
one set bit per 64 rows.  XOR is a C-level merge in the first form and a
word-wise big-int XOR in the second, so the reduction never touches Python
ints element by element.

The engine is incremental: after reducing a base matrix you can keep feeding
columns and ask whether each one enlarged the span.  That is exactly the
primitive needed both for Betti numbers and for deciding independence of
cycles modulo boundaries.
"""

from __future__ import annotations

import numpy as np

from .errors import ResourceLimitError

def _to_bits(rows: np.ndarray, nrows: int) -> int:
    """Pack a sorted index array into an int bit mask (64 rows per word)."""
    buf = np.zeros((nrows + 7) // 8 or 1, dtype=np.uint8)
    r = rows.astype(np.int64)
    np.bitwise_or.at(buf, r >> 3, (1 << (r & 7)).astype(np.uint8))
    return int.from_bytes(buf.tobytes(), "little")


class F2RankEngine:
    """Incremental GF(2) column reducer with pivot caching.

    Parameters
    ----------
    nrows:
        Row count of the matrix being reduced.
    memory_budget:
        Optional cap, in bytes, on the total size of cached pivot columns.
        Exceeding it raises :class:`ResourceLimitError` rather than thrashing.
    """

    def __init__(self, nrows: int, memory_budget: int | None = None):
        self.nrows = int(nrows)
        self.memory_budget = memory_budget
        self._pivots: dict[int, np.ndarray | int] = {}
        self._stored_bytes = 0
        # beyond this support size the packed form is smaller
        self._dense_cutoff = max(64, self.nrows // 64)

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def pivot_rows(self) -> np.ndarray:
        return np.fromiter(self._pivots.keys(), dtype=np.int64, count=len(self._pivots))

    def fork(self) -> "F2RankEngine":
        """Cheap copy sharing the (immutable) pivot columns.

        Lets a caller feed extra columns without disturbing the base
        reduction; stored columns are never mutated, so sharing is safe.
        """
        clone = F2RankEngine(self.nrows, self.memory_budget)
        clone._pivots = dict(self._pivots)
        clone._stored_bytes = self._stored_bytes
        return clone

    def _store(self, pivot: int, col) -> None:
        if isinstance(col, np.ndarray) and col.size > self._dense_cutoff:
            col = _to_bits(col, self.nrows)
        self._stored_bytes += (
            col.nbytes if isinstance(col, np.ndarray) else self.nrows // 8 + 32
        )
        if self.memory_budget is not None and self._stored_bytes > self.memory_budget:
            raise ResourceLimitError(
                f"pivot cache exceeded memory budget of {self.memory_budget} bytes",
                count=self._stored_bytes,
            )
        self._pivots[pivot] = col

    def add_column(self, rows: np.ndarray) -> bool:
        """Reduce one column; return True iff it enlarged the span.

        ``rows`` must be a strictly increasing array of row indices (the
        column's support).  The array may be retained by the engine.
        """
        cur: np.ndarray | int = rows
        while True:
            if isinstance(cur, np.ndarray):
                if cur.size == 0:
                    return False
                pivot = int(cur[-1])
            else:
                if cur == 0:
                    return False
                pivot = cur.bit_length() - 1
            other = self._pivots.get(pivot)
            if other is None:
                self._store(pivot, cur)
                return True
            if isinstance(cur, np.ndarray) and isinstance(other, np.ndarray):
                cur = np.setxor1d(cur, other, assume_unique=True)
                if cur.size > self._dense_cutoff:
                    cur = _to_bits(cur, self.nrows)
            else:
                if isinstance(cur, np.ndarray):
                    cur = _to_bits(cur, self.nrows)
                if isinstance(other, np.ndarray):
                    other = _to_bits(other, self.nrows)
                cur = cur ^ other

    def add_csc(
        self,
        indptr: np.ndarray,
        indices: np.ndarray,
        mask: np.ndarray | None = None,
    ) -> int:
        """Feed every (unmasked) column of a CSC matrix; return how many added rank."""
        added = 0
        for j in range(len(indptr) - 1):
            if mask is not None and not mask[j]:
                continue
            if self.add_column(indices[indptr[j]:indptr[j + 1]]):
                added += 1
        return added


def rank_f2(matrix) -> int:
    """GF(2) rank of a dense 0/1 matrix (any integer dtype, reduced mod 2)."""
    m = np.asarray(matrix)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {m.shape}")
    nrows, ncols = m.shape
    engine = F2RankEngine(nrows)
    for j in range(ncols):
        rows = np.flatnonzero(m[:, j] % 2 != 0).astype(np.int32)
        engine.add_column(rows)
    return engine.rank


def rank_f2_csc(indptr: np.ndarray, indices: np.ndarray, nrows: int) -> int:
    """GF(2) rank of a sparse matrix given as sorted-per-column CSC arrays."""
    engine = F2RankEngine(nrows)
    engine.add_csc(indptr, indices)
    return engine.rank

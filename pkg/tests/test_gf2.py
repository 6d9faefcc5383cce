import numpy as np
import pytest

from striptc._gf2 import F2RankEngine, rank_f2, rank_f2_csc
from striptc.errors import ResourceLimitError


def dense_rank_oracle(mat):
    """Plain dense row-elimination over GF(2); independent of the engine."""
    m = (np.array(mat, dtype=np.int64) % 2).astype(np.uint8)
    rank = 0
    rows, cols = m.shape
    for c in range(cols):
        pivot = None
        for r in range(rank, rows):
            if m[r, c]:
                pivot = r
                break
        if pivot is None:
            continue
        m[[rank, pivot]] = m[[pivot, rank]]
        for r in range(rows):
            if r != rank and m[r, c]:
                m[r] ^= m[rank]
        rank += 1
    return rank


def test_trivial_ranks():
    assert rank_f2(np.zeros((4, 7), dtype=int)) == 0
    assert rank_f2(np.zeros((0, 0), dtype=int).reshape(0, 0)) == 0
    for k in (1, 3, 10):
        assert rank_f2(np.eye(k, dtype=int)) == k


def test_mod2_reduction_of_entries():
    assert rank_f2(np.array([[2, 4], [6, 8]])) == 0
    assert rank_f2(np.array([[3, 1], [1, 3]])) == 1


@pytest.mark.parametrize("seed", range(6))
def test_random_matrices_against_dense_oracle(seed):
    rng = np.random.default_rng(seed)
    rows, cols = rng.integers(1, 40, size=2)
    m = rng.integers(0, 2, size=(rows, cols))
    assert rank_f2(m) == dense_rank_oracle(m)


def test_packed_column_path_and_oracle_agreement():
    # enough rows that dense supports cross the packing cutoff
    rng = np.random.default_rng(41)
    m = (rng.random((300, 60)) < 0.5).astype(int)
    assert rank_f2(m) == dense_rank_oracle(m)


def test_engine_incremental_and_duplicates():
    eng = F2RankEngine(nrows=10)
    col = np.array([1, 3, 7], dtype=np.int32)
    assert eng.add_column(col)
    assert not eng.add_column(col.copy())  # same column adds nothing
    assert eng.add_column(np.array([3], dtype=np.int32))
    # 1,3,7 ^ 3 = 1,7 is still dependent on the two stored columns? no:
    # {1,3,7} and {3} span {1,7} as well, so it should not add rank
    assert not eng.add_column(np.array([1, 7], dtype=np.int32))
    assert eng.rank == 2
    assert set(eng.pivot_rows().tolist()) == {7, 3}


def test_engine_fork_isolation():
    eng = F2RankEngine(nrows=5)
    eng.add_column(np.array([0, 2], dtype=np.int32))
    fork = eng.fork()
    assert fork.add_column(np.array([1], dtype=np.int32))
    assert fork.rank == 2
    assert eng.rank == 1  # base engine untouched


def test_engine_csc_and_empty_columns():
    indptr = np.array([0, 2, 2, 3], dtype=np.int64)
    indices = np.array([0, 1, 1], dtype=np.int32)
    assert rank_f2_csc(indptr, indices, nrows=2) == 2
    eng = F2RankEngine(2)
    added = eng.add_csc(indptr, indices, mask=np.array([True, True, False]))
    assert added == 1 and eng.rank == 1


def test_memory_budget_enforced():
    eng = F2RankEngine(nrows=1000, memory_budget=8)
    with pytest.raises(ResourceLimitError):
        eng.add_column(np.arange(100, dtype=np.int32))


def test_rank_f2_rejects_bad_shapes():
    with pytest.raises(ValueError):
        rank_f2(np.zeros(3))

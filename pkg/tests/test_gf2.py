"""Tests for bit-packed GF(2) rank and block assembly."""

import random

import pytest

from congruent.gf2 import BitMatrix, block_compose, rank_f2


def naive_rank(rows):
    """Row reduction on lists of 0/1 ints, the slow way."""
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    cols = len(rows[0])
    rank = 0
    for c in range(cols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                rows[i] = [(x + y) % 2 for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def test_rank_trivial():
    assert rank_f2(BitMatrix.zeros(3, 5)) == 0
    assert rank_f2(BitMatrix.zeros(1, 1)) == 0
    for k in range(1, 9):
        assert rank_f2(BitMatrix.identity(k)) == k
    assert rank_f2(BitMatrix.from_rows([[1, 1], [1, 0]])) == 2


def test_rank_does_not_mutate():
    m = BitMatrix.from_rows([[1, 1], [1, 0]])
    rank_f2(m)
    assert m.to_rows() == [[1, 1], [1, 0]]


def test_rank_bounds_and_transpose():
    rng = random.Random(11)
    for _ in range(200):
        rows = [[rng.randrange(2) for _ in range(16)] for _ in range(16)]
        m = BitMatrix.from_rows(rows)
        r = rank_f2(m)
        assert r <= 16
        assert r == rank_f2(m.transpose())


def test_rank_against_naive_oracle():
    rng = random.Random(12)
    for _ in range(10000):
        nrows = rng.randrange(1, 7)
        ncols = rng.randrange(1, 7)
        rows = [[rng.randrange(2) for _ in range(ncols)] for _ in range(nrows)]
        assert rank_f2(BitMatrix.from_rows(rows)) == naive_rank(rows), rows


def test_block_compose_examples():
    z = BitMatrix.zeros(1, 1)
    one = BitMatrix.from_rows([[1]])
    assert block_compose([[z, z], [z, z]]).to_rows() == [[0, 0], [0, 0]]
    # C = [0], D2 = [1], Dm2 = [0] assembles to [[1,1],[1,0]]
    c, d2, dm2 = z, one, z
    m = block_compose([[c ^ d2, d2], [d2, c ^ dm2]])
    assert m.to_rows() == [[1, 1], [1, 0]]
    # C = [0], D2 = [1], Dm2 = [1] assembles to [[1,1],[1,1]]
    m = block_compose([[z ^ one, one], [one, z ^ one]])
    assert m.to_rows() == [[1, 1], [1, 1]]


def test_block_compose_shape_mismatch():
    with pytest.raises(ValueError):
        block_compose([[BitMatrix.zeros(1, 2), BitMatrix.zeros(2, 1)], [BitMatrix.zeros(1, 1), BitMatrix.zeros(1, 1)]])


def test_xor_shape_mismatch():
    with pytest.raises(ValueError):
        BitMatrix.zeros(2, 2) ^ BitMatrix.zeros(2, 3)


def test_from_rows_validation():
    with pytest.raises(ValueError):
        BitMatrix.from_rows([[1, 0], [1]])
    with pytest.raises(ValueError):
        BitMatrix(1, 2, [5])  # bit beyond column count


def test_get_and_diagonal():
    d = BitMatrix.diagonal([1, 0, 1])
    assert d.to_rows() == [[1, 0, 0], [0, 0, 0], [0, 0, 1]]
    assert d.get(0, 0) == 1 and d.get(1, 1) == 0
    with pytest.raises(IndexError):
        d.get(3, 0)

"""Cells of the strip model and their face/coface combinatorics.

A cell of the width-``w`` model on ``n`` disks is a *symbol*: an ordering of
the labels ``1..n`` cut by bars into nonempty blocks of size at most ``w``.
A symbol with ``b`` bars names a cell of dimension ``n - 1 - b``; deleting a
bar and riffle-shuffling the two merged blocks produces the cofaces, and the
reverse operation (splitting a block into an ordered pair of complementary
subsequences) produces the faces.

Symbols serialize as blocks of space-separated labels joined by ``|``
(e.g. ``"2 1|3"``); that string is the canonical identity of a cell, and
cells of a fixed dimension are always enumerated in lexicographic order of
their serialization.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial

from .errors import InvalidParamsError


@dataclass(frozen=True, order=True)
class ComplexParams:
    """Ambient parameters: ``n`` disks in an infinite strip of width ``w``."""

    n: int
    w: int

    def __post_init__(self):
        if self.n < 1 or self.w < 1:
            raise InvalidParamsError(
                f"need n >= 1 and w >= 1, got n={self.n}, w={self.w}"
            )

    @property
    def top_dimension(self) -> int:
        """Dimension of the model: n - ceil(n/w)."""
        return self.n - (-(-self.n // self.w))


@dataclass(frozen=True)
class Symbol:
    """One cell: a permutation of 1..n plus the bar cut positions.

    ``bars`` holds the strictly increasing cut indices in ``1..n-1``; a cut
    at ``c`` separates ``labels[:c]`` from ``labels[c:]``.
    """

    labels: tuple[int, ...]
    bars: tuple[int, ...] = ()

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def dimension(self) -> int:
        return len(self.labels) - 1 - len(self.bars)

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        out = []
        prev = 0
        for c in self.bars:
            out.append(self.labels[prev:c])
            prev = c
        out.append(self.labels[prev:])
        return tuple(out)

    def serialize(self) -> str:
        return "|".join(" ".join(map(str, b)) for b in self.blocks())

    def __str__(self) -> str:
        return self.serialize()

    @classmethod
    def parse(cls, text: str) -> "Symbol":
        blocks = [tuple(int(x) for x in part.split()) for part in text.split("|")]
        if any(not b for b in blocks):
            raise InvalidParamsError(f"empty block in symbol {text!r}")
        labels = tuple(itertools.chain.from_iterable(blocks))
        cuts = tuple(itertools.accumulate(len(b) for b in blocks[:-1]))
        return cls(labels, cuts)

    def validate(self, params: ComplexParams) -> None:
        """Raise unless this symbol names a cell of the (n, w) model."""
        n = params.n
        if sorted(self.labels) != list(range(1, n + 1)):
            raise InvalidParamsError(
                f"labels of {self} are not a permutation of 1..{n}"
            )
        if any(not 1 <= c <= n - 1 for c in self.bars) or list(self.bars) != sorted(
            set(self.bars)
        ):
            raise InvalidParamsError(f"bad bar positions {self.bars} in {self}")
        if any(len(b) > params.w for b in self.blocks()):
            raise InvalidParamsError(
                f"{self} has a block wider than w={params.w}"
            )


def compositions(total: int, parts: int, width: int):
    """Yield compositions of ``total`` into ``parts`` parts, each in 1..width."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    lo = max(1, total - width * (parts - 1))
    hi = min(width, total - (parts - 1))
    for first in range(lo, hi + 1):
        for rest in compositions(total - first, parts - 1, width):
            yield (first,) + rest


def count_compositions(total: int, parts: int, width: int) -> int:
    """Number of compositions of ``total`` into ``parts`` parts, each <= width."""
    if parts < 0:
        return 0
    table = [1] + [0] * total
    for _ in range(parts):
        new = [0] * (total + 1)
        for s in range(total + 1):
            if table[s]:
                for part in range(1, min(width, total - s) + 1):
                    new[s + part] += table[s]
        table = new
    return table[total]


def cell_count(params: ComplexParams, d: int) -> int:
    """Number of d-cells: n! times the number of admissible block-size patterns."""
    n = params.n
    if d < 0 or d > n - 1:
        return 0
    return factorial(n) * count_compositions(n, n - d, params.w)


def enumerate_cells(params: ComplexParams, d: int) -> list[Symbol]:
    """All d-cells of the (n, w) model, sorted by serialization.

    Empty above the top dimension n - ceil(n/w).
    """
    n = params.n
    if not 0 <= d <= n - 1:
        raise InvalidParamsError(f"dimension {d} out of range for n={n}")
    out = []
    for comp in compositions(n, n - d, params.w):
        cuts = tuple(itertools.accumulate(comp[:-1]))
        for perm in itertools.permutations(range(1, n + 1)):
            out.append(Symbol(perm, cuts))
    out.sort(key=Symbol.serialize)
    return out


def shuffles(left: tuple[int, ...], right: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All riffle interleavings of two disjoint blocks.

    Each result preserves the internal order of ``left`` and of ``right``;
    there are binomial(|left|+|right|, |left|) of them.
    """
    left, right = tuple(left), tuple(right)
    if not left or not right:
        raise InvalidParamsError("shuffle requires two nonempty blocks")
    if set(left) & set(right):
        raise InvalidParamsError(f"blocks {left} and {right} overlap")
    total = len(left) + len(right)
    out = []
    for pos in itertools.combinations(range(total), len(left)):
        merged = [0] * total
        pos_set = set(pos)
        it_l, it_r = iter(left), iter(right)
        for i in range(total):
            merged[i] = next(it_l) if i in pos_set else next(it_r)
        out.append(tuple(merged))
    return out


def cofaces(s: Symbol, params: ComplexParams) -> list[Symbol]:
    """Cells one dimension up: delete one bar, shuffle the merged blocks.

    Merges that would exceed the width bound are dropped, so every result
    is again a cell of the (n, w) model.
    """
    blocks = s.blocks()
    out = []
    for b in range(len(blocks) - 1):
        lblk, rblk = blocks[b], blocks[b + 1]
        if len(lblk) + len(rblk) > params.w:
            continue
        for merged in shuffles(lblk, rblk):
            new_blocks = blocks[:b] + (merged,) + blocks[b + 2:]
            labels = tuple(itertools.chain.from_iterable(new_blocks))
            cuts = tuple(itertools.accumulate(len(x) for x in new_blocks[:-1]))
            out.append(Symbol(labels, cuts))
    return out


def faces(s: Symbol, params: ComplexParams) -> list[Symbol]:
    """Codimension-1 faces, one entry per deshuffle of a block.

    Each block B with |B| >= 2 splits into every ordered pair of nonempty
    complementary subsequences (B1, B2); the face replaces B by B1|B2.
    Multiplicities are retained (the F2 boundary reduces them mod 2).
    """
    blocks = s.blocks()
    out = []
    for b, block in enumerate(blocks):
        size = len(block)
        if size < 2:
            continue
        for k in range(1, size):
            for chosen in itertools.combinations(range(size), k):
                in_chosen = set(chosen)
                b1 = tuple(block[i] for i in chosen)
                b2 = tuple(block[i] for i in range(size) if i not in in_chosen)
                new_blocks = blocks[:b] + (b1, b2) + blocks[b + 1:]
                labels = tuple(itertools.chain.from_iterable(new_blocks))
                cuts = tuple(itertools.accumulate(len(x) for x in new_blocks[:-1]))
                out.append(Symbol(labels, cuts))
    return out

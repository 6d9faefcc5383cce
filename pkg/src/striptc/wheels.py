"""Wheels, concatenation products, and their degree-1 homology images.

A wheel ``W(i1,...,ik)`` is an embedded (k-1)-torus: disk i2 orbits i1, i3
orbits both, and so on.  Concatenation products place disjoint wheels left to
right in the strip and are again embedded tori.  This module works entirely
in the subspace of degree-1 homology spanned by two-disk wheel classes; all
coefficients are exact rationals.

For w = 2 a two-disk wheel splits the strip, so the singleton wheels to its
left and to its right cannot be exchanged; a degree-1 basis class therefore
carries the number of singletons on the left.  For w >= 3 all singletons can
be commuted past a two-disk wheel, and the canonical position (everything on
the right, in decreasing label order) is used.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .chains import ChainComplexF2, ChainVector, get_complex
from .errors import (
    DimensionMismatchError,
    InvalidParamsError,
    WheelTooSmallError,
)
from .symbols import ComplexParams, Symbol


@dataclass(frozen=True)
class Wheel:
    """An ordered tuple of distinct disk labels; a (k-1)-torus."""

    disks: tuple[int, ...]

    def __post_init__(self):
        if not self.disks:
            raise InvalidParamsError("a wheel needs at least one disk")
        if len(set(self.disks)) != len(self.disks):
            raise InvalidParamsError(f"repeated disk in wheel {self.disks}")
        if any(d < 1 for d in self.disks):
            raise InvalidParamsError(f"disk labels must be positive: {self.disks}")

    @property
    def size(self) -> int:
        return len(self.disks)

    @property
    def degree(self) -> int:
        return len(self.disks) - 1

    @property
    def is_canonical(self) -> bool:
        """Largest label first."""
        return self.disks[0] == max(self.disks)

    def serialize(self) -> str:
        return "W(" + ",".join(map(str, self.disks)) + ")"

    def __str__(self) -> str:
        return self.serialize()


def rank_compare(a: Wheel, b: Wheel) -> int:
    """Total preorder on wheels: more disks ranks above, then larger max label.

    Returns a negative number, zero, or a positive number as ``a`` ranks
    below, equal to, or above ``b``.
    """
    ka = (a.size, max(a.disks))
    kb = (b.size, max(b.disks))
    return (ka > kb) - (ka < kb)


@dataclass(frozen=True)
class WheelProduct:
    """Left-to-right concatenation of disjoint wheels in a fixed ambient strip."""

    factors: tuple[Wheel, ...]
    params: ComplexParams

    def __post_init__(self):
        seen: set[int] = set()
        for f in self.factors:
            if f.size > self.params.w:
                raise InvalidParamsError(
                    f"{f} has more disks than the strip width {self.params.w}"
                )
            overlap = seen & set(f.disks)
            if overlap:
                raise InvalidParamsError(f"disks {sorted(overlap)} used twice")
            seen |= set(f.disks)
        if seen and max(seen) > self.params.n:
            raise InvalidParamsError(
                f"disk {max(seen)} outside ambient 1..{self.params.n}"
            )

    @property
    def dimension(self) -> int:
        """Torus dimension: sum of (size - 1) over the factors."""
        return sum(f.degree for f in self.factors)

    def disks(self) -> set[int]:
        return {d for f in self.factors for d in f.disks}

    def serialize(self) -> str:
        return "".join(f.serialize() for f in self.factors)

    def __str__(self) -> str:
        return self.serialize()

    @classmethod
    def parse(cls, text: str, params: ComplexParams) -> "WheelProduct":
        parts = re.findall(r"W\(([0-9,\s]*?)\)", text)
        if not parts or "".join(f"W({p})" for p in parts).replace(" ", "") != text.replace(" ", ""):
            raise InvalidParamsError(f"cannot parse wheel product {text!r}")
        factors = tuple(
            Wheel(tuple(int(x) for x in p.split(","))) for p in parts
        )
        return cls(factors, params)


def is_basis_form(p: WheelProduct) -> bool:
    """Whether every factor is canonical and every adjacent pair is admissible.

    Adjacent wheels W1 (left) and W2 (right) are admissible when W1 outranks
    W2 or their combined disk count exceeds the strip width (in which case
    they cannot be commuted anyway).
    """
    if any(not f.is_canonical for f in p.factors):
        return False
    w = p.params.w
    for left, right in zip(p.factors, p.factors[1:]):
        if left.size + right.size > w:
            continue
        if rank_compare(left, right) <= 0:
            return False
    return True


@dataclass(frozen=True, order=True)
class H1BasisClass:
    """A two-disk wheel class W(i, j), i > j, with singleton-position data.

    ``left_count`` is meaningful only in width 2; wider strips always use the
    canonical value 0.
    """

    i: int
    j: int
    left_count: int = 0

    def __post_init__(self):
        if not self.i > self.j >= 1:
            raise InvalidParamsError(f"need i > j >= 1, got ({self.i}, {self.j})")
        if self.left_count < 0:
            raise InvalidParamsError("left_count must be non-negative")

    def serialize(self) -> str:
        if self.left_count:
            return f"W({self.i},{self.j})@{self.left_count}"
        return f"W({self.i},{self.j})"

    def __str__(self) -> str:
        return self.serialize()


class H1Vector:
    """A finitely supported rational vector over the wheel basis classes."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[H1BasisClass, Fraction | int]):
        self.coeffs: dict[H1BasisClass, Fraction] = {
            k: Fraction(v) for k, v in coeffs.items() if v
        }

    def support(self) -> set[H1BasisClass]:
        return set(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, H1Vector) and self.coeffs == other.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for cls in sorted(self.coeffs):
            c = self.coeffs[cls]
            terms.append(f"{c}*{cls}" if c != 1 else str(cls))
        return " + ".join(terms)

    def to_json(self) -> list[dict]:
        return [
            {
                "i": cls.i,
                "j": cls.j,
                "left_count": cls.left_count,
                "coeff": str(self.coeffs[cls]),
            }
            for cls in sorted(self.coeffs)
        ]


def _pair_class(a: int, b: int, left_count: int) -> H1BasisClass:
    return H1BasisClass(max(a, b), min(a, b), left_count)


def wheel_h1_image(wheel: Wheel, context: WheelProduct) -> list[H1Vector]:
    """Degree-1 image of one factor of a concatenation product.

    For W(i1,...,ik) the image splits into k-1 coordinate circles; the one
    for disk i_t (t >= 2) is the class sum W(i1,i_t) + ... + W(i_{t-1},i_t),
    each pair written largest label first.  In width 2 the single resulting
    class records how many disks sit to the left of the factor.
    """
    if wheel.size < 2:
        raise WheelTooSmallError(f"{wheel} has no degree-1 image")
    try:
        pos = context.factors.index(wheel)
    except ValueError:
        raise InvalidParamsError(f"{wheel} is not a factor of {context}") from None
    if context.params.w == 2:
        left_count = sum(f.size for f in context.factors[:pos])
    else:
        left_count = 0
    disks = wheel.disks
    out = []
    for t in range(1, wheel.size):
        coeffs = {
            _pair_class(disks[s], disks[t], left_count): Fraction(1)
            for s in range(t)
        }
        out.append(H1Vector(coeffs))
    return out


def product_h1_image(p: WheelProduct) -> list[H1Vector]:
    """Degree-1 images of all factors, left to right; one vector per torus dimension."""
    out: list[H1Vector] = []
    for f in p.factors:
        if f.size >= 2:
            out.extend(wheel_h1_image(f, p))
    return out


def _sorted_support(vectors: Iterable[H1Vector]) -> list[H1BasisClass]:
    support: set[H1BasisClass] = set()
    for v in vectors:
        support |= v.support()
    return sorted(support)


def h1_rank(vectors: list[H1Vector]) -> int:
    """Rank of a list of vectors, by exact fraction elimination."""
    pivots: dict[H1BasisClass, dict[H1BasisClass, Fraction]] = {}
    for v in vectors:
        row = dict(v.coeffs)
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                scale = row[lead]
                pivots[lead] = {k: c / scale for k, c in row.items()}
                break
            factor = row[lead]
            for k, c in piv.items():
                row[k] = row.get(k, Fraction(0)) - factor * c
                if not row[k]:
                    del row[k]
    return len(pivots)


def spans_disjoint(a: list[H1Vector], b: list[H1Vector]) -> bool:
    """True iff the spans of the two families intersect trivially."""
    return h1_rank(list(a) + list(b)) == h1_rank(list(a)) + h1_rank(list(b))


def class_to_cycle(
    cls: H1BasisClass,
    params: ComplexParams,
    complex: ChainComplexF2 | None = None,
) -> ChainVector:
    """Chain-level 1-cycle realizing a basis class.

    The cycle is the mod-2 sum of the two 1-cells that place the pair block
    {i, j} (in both internal orders) after ``left_count`` singleton blocks;
    singletons on each side appear in decreasing label order.
    """
    n, w = params.n, params.w
    if w < 2:
        raise DimensionMismatchError("width-1 strips have no 1-cells")
    if cls.i > n:
        raise DimensionMismatchError(f"{cls} does not fit in ambient 1..{n}")
    singles = sorted(set(range(1, n + 1)) - {cls.i, cls.j}, reverse=True)
    if cls.left_count > len(singles):
        raise DimensionMismatchError(
            f"left_count {cls.left_count} exceeds the {len(singles)} free disks"
        )
    if complex is None:
        complex = get_complex(params)
    left = singles[: cls.left_count]
    right = singles[cls.left_count:]
    support = set()
    for pair in ((cls.i, cls.j), (cls.j, cls.i)):
        blocks = [(x,) for x in left] + [pair] + [(x,) for x in right]
        labels = tuple(x for blk in blocks for x in blk)
        cuts = []
        acc = 0
        for blk in blocks[:-1]:
            acc += len(blk)
            cuts.append(acc)
        sym = Symbol(labels, tuple(cuts))
        support.add(complex.cell_index(1, sym.serialize()))
    return ChainVector(1, frozenset(support))


def vectors_to_cycle(
    vectors: Iterable[H1Vector],
    params: ComplexParams,
    complex: ChainComplexF2 | None = None,
) -> list[ChainVector]:
    """Chain representatives of H1 vectors (mod-2 sums of class cycles).

    Requires every coefficient to be an odd-over-odd rational so that the
    mod-2 reduction is faithful; the image formulas only ever produce 0/1.
    """
    if complex is None:
        complex = get_complex(params)
    out = []
    for v in vectors:
        support: set[int] = set()
        for cls, coeff in v.coeffs.items():
            if coeff.denominator % 2 == 0:
                raise InvalidParamsError(
                    f"coefficient {coeff} of {cls} has no mod-2 reduction"
                )
            if coeff.numerator % 2 == 0:
                continue
            support ^= class_to_cycle(cls, params, complex).support
        out.append(ChainVector(1, frozenset(support)))
    return out

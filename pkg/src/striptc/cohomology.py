"""Zero-divisor products in the cohomology of a torus power.

The lower-bound argument multiplies m(r-1) + l classes of the form
``a x 1 - 1 x a`` (pulled back to the r-fold product along pairs of factors)
and evaluates the result on the fundamental class of a torus of dimension
m(r-1) + l.  After pulling back along the torus pair, everything happens in
an exterior algebra on generators x[k, s]: one block of l generators on
tensor factor 1 (the l-torus) and a block of m generators on each factor
2..r (copies of the m-torus).  Degree-1 generators anticommute across factor
blocks as well as within them, so a monomial is just a sorted tuple of
generators and signs come from counting transpositions.

The witness computation is exact rational arithmetic throughout; a healthy
run produces a single top-degree monomial with coefficient +1 or -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import InvalidParamsError

# The l-torus occupies tensor factor 1; factors 2..r carry the m-torus.  The
# product of zero-divisors below pairs factors (1,2) for both blocks, so this
# is the assignment under which the pullback survives.
G_FACTOR = 1


@dataclass(frozen=True, order=True)
class ExtGenerator:
    """Degree-1 exterior generator: (tensor factor, slot within that factor)."""

    factor: int
    slot: int

    def serialize(self) -> str:
        return f"x[{self.factor},{self.slot}]"

    def __str__(self) -> str:
        return self.serialize()


Monomial = tuple[ExtGenerator, ...]


def _merge_mul(a: Monomial, b: Monomial) -> tuple[Monomial, int] | None:
    """Sorted merge of two sorted monomials with transposition parity.

    Returns None when the monomials share a generator (the square of a
    degree-1 class vanishes).
    """
    out: list[ExtGenerator] = []
    inv = 0
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            return None
        if a[i] < b[j]:
            out.append(a[i])
            i += 1
        else:
            # b[j] moves left past the rest of a
            inv += len(a) - i
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out), (-1) ** inv


class ExtElement:
    """Exact rational element of the exterior algebra on ExtGenerators."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction | int] | None = None):
        self.terms: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                c = Fraction(coeff)
                if c:
                    self.terms[mono] = c

    @classmethod
    def zero(cls) -> "ExtElement":
        return cls()

    @classmethod
    def scalar(cls, c) -> "ExtElement":
        return cls({(): Fraction(c)})

    @classmethod
    def generator(cls, g: ExtGenerator) -> "ExtElement":
        return cls({(g,): Fraction(1)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, ExtElement) and self.terms == other.terms

    def __neg__(self) -> "ExtElement":
        return ExtElement({m: -c for m, c in self.terms.items()})

    def __add__(self, other: "ExtElement") -> "ExtElement":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return ExtElement(out)

    def __sub__(self, other: "ExtElement") -> "ExtElement":
        return self + (-other)

    def __mul__(self, other) -> "ExtElement":
        if not isinstance(other, ExtElement):
            return ExtElement({m: c * Fraction(other) for m, c in self.terms.items()})
        out: dict[Monomial, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                merged = _merge_mul(ma, mb)
                if merged is None:
                    continue
                mono, sign = merged
                acc = out.get(mono, Fraction(0)) + sign * ca * cb
                if acc:
                    out[mono] = acc
                elif mono in out:
                    del out[mono]
        return ExtElement(out)

    __rmul__ = __mul__

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(mono, Fraction(0))

    def degrees(self) -> set[int]:
        return {len(m) for m in self.terms}

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for mono in sorted(self.terms):
            c = self.terms[mono]
            label = "*".join(str(g) for g in mono) if mono else "1"
            bits.append(f"({c})*{label}")
        return " + ".join(bits)


def _substitute(kind: str, slot: int, factor: int, m: int, l: int) -> ExtElement:
    """Image of y_slot or z_slot on one tensor factor after the torus pullback.

    y-classes restrict to zero on the l-torus factor, z-classes to zero on
    the m-torus factors; otherwise the class lands on that factor's own
    exterior generator.
    """
    if kind == "y":
        if factor == G_FACTOR:
            return ExtElement.zero()
        return ExtElement.generator(ExtGenerator(factor, slot))
    if kind == "z":
        if factor != G_FACTOR:
            return ExtElement.zero()
        return ExtElement.generator(ExtGenerator(factor, slot))
    raise InvalidParamsError(f"unknown class kind {kind!r} (expected 'y' or 'z')")


def zeta_pullback(
    symbol: tuple[str, int] | str,
    i: int,
    j: int,
    m: int,
    l: int,
    r: int,
) -> ExtElement:
    """Pullback of ``a x 1 - 1 x a`` placed on factors (i, j) of the r-fold product.

    ``symbol`` is ('y', p) with 1 <= p <= m or ('z', q) with 1 <= q <= l
    (strings like "y2" also work).
    """
    if isinstance(symbol, str):
        kind, slot = symbol[0], int(symbol[1:])
    else:
        kind, slot = symbol
    if r < 2:
        raise InvalidParamsError(f"need r >= 2, got {r}")
    if not 1 <= i < j <= r:
        raise InvalidParamsError(f"need 1 <= i < j <= r, got i={i}, j={j}")
    bound = m if kind == "y" else l
    if not 1 <= slot <= bound:
        raise InvalidParamsError(f"slot {slot} out of range for kind {kind!r}")
    return _substitute(kind, slot, i, m, l) - _substitute(kind, slot, j, m, l)


def witness_factor_count(m: int, l: int, r: int) -> int:
    """Number of degree-1 zero-divisor factors in the witness product."""
    return m * (r - 1) + l


def witness_product(m: int, l: int, r: int) -> ExtElement:
    """The full product: the z-block on factors (1,2), then y-blocks chained
    along (1,2), (2,3), ..., (r-1, r)."""
    if not (m >= l >= 1):
        raise InvalidParamsError(f"need m >= l >= 1, got m={m}, l={l}")
    if r < 2:
        raise InvalidParamsError(f"need r >= 2, got {r}")
    acc = ExtElement.scalar(1)
    for q in range(1, l + 1):
        acc = acc * zeta_pullback(("z", q), 1, 2, m, l, r)
    for p in range(1, m + 1):
        acc = acc * zeta_pullback(("y", p), 1, 2, m, l, r)
    for k in range(3, r + 1):
        for p in range(1, m + 1):
            acc = acc * zeta_pullback(("y", p), k - 1, k, m, l, r)
    return acc


def top_monomial(m: int, l: int, r: int) -> Monomial:
    """Every slot of every factor: the fundamental-class monomial."""
    gens = [ExtGenerator(G_FACTOR, q) for q in range(1, l + 1)]
    for k in range(2, r + 1):
        gens.extend(ExtGenerator(k, p) for p in range(1, m + 1))
    return tuple(sorted(gens))


def surviving_terms(m: int, l: int, r: int) -> list[tuple[Monomial, Fraction]]:
    """Top-degree monomials of the expanded product, with coefficients.

    The product of m(r-1)+l degree-1 factors is homogeneous of top degree,
    so this is the entire expansion; a healthy run has exactly one term.
    """
    product = witness_product(m, l, r)
    target = witness_factor_count(m, l, r)
    return [
        (mono, coeff)
        for mono, coeff in sorted(product.terms.items())
        if len(mono) == target
    ]


def evaluate_witness(m: int, l: int, r: int) -> Fraction:
    """Coefficient of the fundamental-class monomial in the witness product.

    A sound certificate yields +1 or -1; anything else means the pairing of
    torus factors with zero-divisor factors is broken.  The product must be
    homogeneous of degree m(r-1)+l, which is checked.
    """
    product = witness_product(m, l, r)
    target = witness_factor_count(m, l, r)
    stray = product.degrees() - {target}
    if stray:
        raise InvalidParamsError(
            f"witness product is not homogeneous of degree {target}: "
            f"found degrees {sorted(stray)}"
        )
    return product.coefficient(top_monomial(m, l, r))


def permute_factors(element: ExtElement, perm: Sequence[int]) -> ExtElement:
    """Relabel tensor factors by ``perm`` (1-indexed), tracking signs.

    Useful for checking that the witness value is permutation-invariant up
    to sign.
    """
    lookup = {i + 1: p for i, p in enumerate(perm)}
    out = ExtElement.zero()
    for mono, coeff in element.terms.items():
        gens = [ExtGenerator(lookup[g.factor], g.slot) for g in mono]
        # bubble-sort parity of the relabeled tuple
        sign = 1
        for a in range(len(gens)):
            for b in range(a + 1, len(gens)):
                if gens[a] > gens[b]:
                    sign = -sign
        out = out + ExtElement({tuple(sorted(gens)): sign * coeff})
    return out

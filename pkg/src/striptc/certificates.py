"""Disjoint decomposable torus pairs and their verification.

For every supported (n, w) this module constructs a pair of embedded tori
A, B (concatenation products of wheels) whose degree-1 homology images are
independent and have trivially intersecting spans.  Such a pair certifies
the lower bound (r-1)m + l for the r-stop sequential (and distributional)
topological complexity, where m, l are the torus dimensions.

Three constructions, by parameter range:

* 2 <= n <= w: A = W(n,...,1), an (n-1)-torus, and B = W(n-1,...,1)W(n), an
  (n-2)-torus.
* n > w = 2: chains of two-disk wheels; a two-disk wheel blocks the strip,
  so the singleton positions participate in the bookkeeping.
* n > w > 2: m = ceil(n/w) wheels of width w whose lead disks are the m
  largest labels and whose tails tile the remaining labels in descending
  runs of w-1; B reuses the same tails with the lead disks rotated.

Every generated pair is checked to use each disk exactly once; a failure is
raised as :class:`TorusConstructionError` rather than repaired, since it
would mean the closed-form label pattern is wrong.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chains import BOUNDARY_CONVENTION, classes_independent, get_complex
from .errors import InvalidParamsError, TorusConstructionError
from .symbols import ComplexParams, cell_count
from .wheels import (
    H1BasisClass,
    H1Vector,
    Wheel,
    WheelProduct,
    h1_rank,
    product_h1_image,
    spans_disjoint,
    vectors_to_cycle,
)

# Chain-level cross-checks are run whenever the complex fits this many cells;
# beyond it the symbolic verdict stands alone and the report says so.
CHAIN_CELL_BUDGET = 1_500_000


@dataclass(frozen=True)
class TorusPair:
    """The certificate pair: an m-torus A and an l-torus B, m >= l."""

    A: WheelProduct
    B: WheelProduct
    m: int
    l: int

    @property
    def params(self) -> ComplexParams:
        return self.A.params


def lower_bound(m: int, l: int, r: int) -> int:
    """(r-1)m + l, the bound certified by an (m, l) disjoint pair.

    ``l = 0`` is admitted (the two-disk ambient has a point for B).
    """
    if r < 2:
        raise InvalidParamsError(f"need r >= 2, got {r}")
    if m < l or l < 0:
        raise InvalidParamsError(f"need m >= l >= 0, got m={m}, l={l}")
    return (r - 1) * m + l


def _check_partition(p: WheelProduct, n: int, name: str) -> None:
    used = [d for f in p.factors for d in f.disks]
    if sorted(used) != list(range(1, n + 1)):
        raise TorusConstructionError(
            f"torus {name} = {p} does not use each of 1..{n} exactly once"
        )


def _tails(n: int, w: int, m: int) -> list[tuple[int, ...]]:
    pool = list(range(n - m, 0, -1))
    out = [tuple(pool[f * (w - 1):(f + 1) * (w - 1)]) for f in range(m - 1)]
    out.append(tuple(pool[(m - 1) * (w - 1):]))
    return out


def build_tori(params: ComplexParams) -> TorusPair:
    """The certificate pair for (n, w).

    Raises :class:`InvalidParamsError` for n = 1 (contractible, nothing to
    certify) and w = 1 (disks cannot pass; no torus pair exists).
    """
    n, w = params.n, params.w
    if n < 2 or w < 2:
        raise InvalidParamsError(
            f"no torus certificate for (n={n}, w={w}): "
            + ("contractible ambient" if n < 2 else "width-1 strip not supported")
        )

    if n <= w:
        a = WheelProduct((Wheel(tuple(range(n, 0, -1))),), params)
        b = WheelProduct(
            (Wheel(tuple(range(n - 1, 0, -1))), Wheel((n,))), params
        )
    elif w == 2:
        half = n // 2
        if n % 2 == 0:
            a_factors = [Wheel((n - j, half - j)) for j in range(half)]
            b_factors = [Wheel((n, 1))] + [
                Wheel((n - 1 - j, half - j)) for j in range(half - 1)
            ]
        else:
            half = (n - 1) // 2
            a_factors = [Wheel((n - j, half - j)) for j in range(half)]
            a_factors.append(Wheel((half + 1,)))
            b_factors = [Wheel((n - 1 - j, half - j)) for j in range(half)]
            b_factors.append(Wheel((n,)))
        a = WheelProduct(tuple(a_factors), params)
        b = WheelProduct(tuple(b_factors), params)
    else:
        m = -(-n // w)
        assert m >= 2, "n > w forces at least two wheels"
        tails = _tails(n, w, m)
        a = WheelProduct(
            tuple(Wheel((n - f,) + tails[f]) for f in range(m)), params
        )
        b_leads = [n - 1 - f for f in range(m - 1)] + [n]
        b = WheelProduct(
            tuple(Wheel((b_leads[f],) + tails[f]) for f in range(m)), params
        )

    _check_partition(a, n, "A")
    _check_partition(b, n, "B")
    pair = TorusPair(a, b, a.dimension, b.dimension)
    expected = (n - 1, n - 2) if n <= w else (params.top_dimension,) * 2
    if (pair.m, pair.l) != expected:
        raise TorusConstructionError(
            f"pair dimensions ({pair.m}, {pair.l}) differ from expected {expected}"
        )
    return pair


def _projection_classes(pair: TorusPair) -> list[H1BasisClass] | None:
    """Coordinate subspace used for the projection disjointness argument.

    For n <= w: all classes W(n, j).  For n > w > 2: the classes pairing each
    lead disk of A with the members of its own tail.  Width 2 uses the
    basis-support argument instead, so no projection set is defined.
    """
    params = pair.params
    n, w = params.n, params.w
    if n <= w:
        return [H1BasisClass(n, j) for j in range(1, n)]
    if w == 2:
        return None
    out = []
    for f in pair.A.factors:
        lead, tail = f.disks[0], f.disks[1:]
        out.extend(H1BasisClass(lead, t) for t in tail)
    return out


def _restricted_rank(vectors: list[H1Vector], classes: list[H1BasisClass]) -> int:
    keep = set(classes)
    restricted = [
        H1Vector({c: v.coeffs[c] for c in v.support() & keep}) for v in vectors
    ]
    return h1_rank(restricted)


def _restriction_is_zero(vectors: list[H1Vector], classes: list[H1BasisClass]) -> bool:
    keep = set(classes)
    return all(not (v.support() & keep) for v in vectors)


@dataclass
class CertificateReport:
    """Outcome of verifying one torus pair."""

    pair: TorusPair
    decomposable_A: bool
    decomposable_B: bool
    disjoint_symbolic: bool
    support_classes_disjoint: bool | None
    projection_full_rank: bool | None
    disjoint_chain: bool | None
    chain_skipped_reason: str | None

    @property
    def params(self) -> ComplexParams:
        return self.pair.params

    @property
    def passed_symbolic(self) -> bool:
        return (
            self.decomposable_A and self.decomposable_B and self.disjoint_symbolic
        )

    @property
    def consistent(self) -> bool:
        """Chain and symbolic verdicts agree whenever both were computed."""
        if self.disjoint_chain is None:
            return True
        return self.disjoint_chain == (
            self.decomposable_A and self.decomposable_B and self.disjoint_symbolic
        )

    def lower_bound(self, r: int) -> int | None:
        """(r-1)m + l, reported only when the symbolic checks hold."""
        if not self.passed_symbolic:
            return None
        return lower_bound(self.pair.m, self.pair.l, r)

    def to_json(self, r: int | None = None) -> dict:
        out = {
            "n": self.params.n,
            "w": self.params.w,
            "A": self.pair.A.serialize(),
            "B": self.pair.B.serialize(),
            "m": self.pair.m,
            "l": self.pair.l,
            "decomposable_A": self.decomposable_A,
            "decomposable_B": self.decomposable_B,
            "disjoint_symbolic": self.disjoint_symbolic,
            "support_classes_disjoint": self.support_classes_disjoint,
            "projection_full_rank": self.projection_full_rank,
            "disjoint_chain": self.disjoint_chain,
            "chain_skipped_reason": self.chain_skipped_reason,
            "consistent": self.consistent,
            "convention": BOUNDARY_CONVENTION,
        }
        if r is not None:
            out["r"] = r
            out["lower_bound"] = self.lower_bound(r)
        return out


def verify_certificate(
    params: ComplexParams,
    *,
    chain: bool | None = None,
    chain_cell_budget: int | None = None,
) -> CertificateReport:
    """Build the pair for (n, w) and run every applicable check.

    ``chain=None`` runs the chain-level oracle whenever the complex fits the
    cell budget; ``True`` forces it (resource errors propagate); ``False``
    skips it.
    """
    pair = build_tori(params)
    im_a = product_h1_image(pair.A)
    im_b = product_h1_image(pair.B)

    decomposable_a = h1_rank(im_a) == pair.m
    decomposable_b = h1_rank(im_b) == pair.l
    disjoint_symbolic = spans_disjoint(im_a, im_b)

    support_disjoint: bool | None = None
    if params.w == 2:
        sup_a = set().union(*(v.support() for v in im_a)) if im_a else set()
        sup_b = set().union(*(v.support() for v in im_b)) if im_b else set()
        support_disjoint = not (sup_a & sup_b)

    projection_ok: bool | None = None
    proj = _projection_classes(pair)
    if proj is not None:
        projection_ok = (
            _restricted_rank(im_a, proj) == pair.m
            and _restriction_is_zero(im_b, proj)
        )

    budget = CHAIN_CELL_BUDGET if chain_cell_budget is None else chain_cell_budget
    total_cells = sum(
        cell_count(params, d) for d in range(params.top_dimension + 1)
    )
    disjoint_chain: bool | None = None
    skip_reason: str | None = None
    if chain is False:
        skip_reason = "chain verification disabled by caller"
    elif chain is None and total_cells > budget:
        skip_reason = (
            f"complex has {total_cells} cells, over the chain-verification "
            f"budget of {budget}"
        )
    else:
        cx = get_complex(params)
        cycles = vectors_to_cycle(im_a + im_b, params, cx)
        disjoint_chain = classes_independent(cycles, cx)

    return CertificateReport(
        pair=pair,
        decomposable_A=decomposable_a,
        decomposable_B=decomposable_b,
        disjoint_symbolic=disjoint_symbolic,
        support_classes_disjoint=support_disjoint,
        projection_full_rank=projection_ok,
        disjoint_chain=disjoint_chain,
        chain_skipped_reason=skip_reason,
    )

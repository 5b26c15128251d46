"""Relation models: pairwise comparison plus an exact segment oracle.

For a triple (x, y, z) the segment oracle labels every weight lam in [0,1]
by how the mixture x`lam`y compares with z, as a finite exact partition of
the unit interval.  All section sets are read off that partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import intervals as iv
from .intervals import EMPTY, FULL, Interval, SectionSet
from .spaces import CarrierError, MixtureSpace, Point, Simplex


class ComparisonOutcome(Enum):
    BETTER = "better"          # x > y
    WORSE = "worse"            # x < y
    EQUIVALENT = "equivalent"  # x ~ y
    INCOMPARABLE = "incomparable"

    @staticmethod
    def from_weak(x_over_y: bool, y_over_x: bool) -> "ComparisonOutcome":
        if x_over_y and y_over_x:
            return ComparisonOutcome.EQUIVALENT
        if x_over_y:
            return ComparisonOutcome.BETTER
        if y_over_x:
            return ComparisonOutcome.WORSE
        return ComparisonOutcome.INCOMPARABLE


class Label(str, Enum):
    STRICT_ABOVE = "strict_above"    # x lam y  >  z
    STRICT_BELOW = "strict_below"    # x lam y  <  z
    INDIFFERENT = "indifferent"      # x lam y  ~  z
    INCOMPARABLE = "incomparable"


OUTCOME_TO_LABEL = {
    ComparisonOutcome.BETTER: Label.STRICT_ABOVE,
    ComparisonOutcome.WORSE: Label.STRICT_BELOW,
    ComparisonOutcome.EQUIVALENT: Label.INDIFFERENT,
    ComparisonOutcome.INCOMPARABLE: Label.INCOMPARABLE,
}

SECTION_LABELS = {
    "ge": (Label.STRICT_ABOVE, Label.INDIFFERENT),
    "le": (Label.STRICT_BELOW, Label.INDIFFERENT),
    "gt": (Label.STRICT_ABOVE,),
    "lt": (Label.STRICT_BELOW,),
    "eq": (Label.INDIFFERENT,),
    "incomparable": (Label.INCOMPARABLE,),
}


class PartitionError(ValueError):
    pass


class NotRepresentableError(ValueError):
    """Raised when a relation's sections are not finite interval unions."""


@dataclass(frozen=True)
class LabeledPartition:
    """Exact cover of [0,1] by labeled intervals, sorted and disjoint."""

    pieces: tuple[tuple[Interval, Label], ...]

    def __post_init__(self):
        object.__setattr__(self, "_sections", {})

    def label_at(self, lam: Fraction) -> Label:
        for piece, label in self.pieces:
            if lam in piece:
                return label
        raise PartitionError(f"weight {lam} not covered")  # pragma: no cover

    def section(self, which: str) -> SectionSet:
        got = self._sections.get(which)
        if got is None:
            labels = SECTION_LABELS[which]
            got = iv.normalize([p for p, lab in self.pieces if lab in labels])
            self._sections[which] = got
        return got

    def mirrored(self) -> "LabeledPartition":
        """The partition for the swapped pair: weight lam becomes 1 - lam."""
        flipped = tuple(
            (Interval(1 - piece.hi, 1 - piece.lo, piece.hi_closed, piece.lo_closed),
             label)
            for piece, label in reversed(self.pieces)
        )
        return LabeledPartition(flipped)


def assemble_partition(sections: dict[Label, SectionSet]) -> LabeledPartition:
    """Build and validate a partition from per-label section sets."""
    pieces = []
    for label, sec in sections.items():
        for piece in sec.intervals:
            pieces.append((piece, label))
    pieces.sort(key=lambda item: (item[0].lo, not item[0].lo_closed))

    pos = iv.ZERO
    expect_closed = True
    for piece, _ in pieces:
        if piece.lo != pos or piece.lo_closed != expect_closed:
            raise PartitionError(f"gap or overlap at {pos}: {pieces}")
        pos = piece.hi
        expect_closed = not piece.hi_closed
    if pos != iv.ONE or expect_closed:
        raise PartitionError(f"partition does not reach 1: {pieces}")
    return LabeledPartition(tuple(pieces))


# ---------------------------------------------------------------------------
# Affine regions in the weight variable: {lam in [0,1] : a*lam + b  op  c}
# ---------------------------------------------------------------------------


def affine_ge(a: Fraction, b: Fraction, c: Fraction, strict: bool = False) -> SectionSet:
    if a == 0:
        return FULL if (b > c if strict else b >= c) else EMPTY
    t = (c - b) / a
    if a > 0:  # lam >(=) t
        if strict:
            if t < 0:
                return FULL
            if t >= 1:
                return EMPTY
            return iv.interval(t, 1, False, True)
        if t <= 0:
            return FULL
        if t > 1:
            return EMPTY
        return iv.interval(t, 1)
    # a < 0: lam <(=) t
    if strict:
        if t > 1:
            return FULL
        if t <= 0:
            return EMPTY
        return iv.interval(0, min(t, iv.ONE), True, False)
    if t >= 1:
        return FULL
    if t < 0:
        return EMPTY
    return iv.interval(0, t)


def affine_le(a: Fraction, b: Fraction, c: Fraction, strict: bool = False) -> SectionSet:
    return affine_ge(-a, -b, -c, strict)


def affine_eq(a: Fraction, b: Fraction, c: Fraction) -> SectionSet:
    if a == 0:
        return FULL if b == c else EMPTY
    t = (c - b) / a
    if 0 <= t <= 1:
        return iv.point(t)
    return EMPTY


# ---------------------------------------------------------------------------
# Relation models
# ---------------------------------------------------------------------------


class RelationModel:
    kind = "abstract"
    has_segment_oracle = True

    def __init__(self, space: MixtureSpace):
        self.space = space
        self._segment_cache: dict = {}

    def compare(self, x: Point, y: Point) -> ComparisonOutcome:  # pragma: no cover
        raise NotImplementedError

    def classify_segment(self, x: Point, y: Point, z: Point) -> LabeledPartition:
        raise NotRepresentableError(f"{self.kind} relation has no segment oracle")

    def segment(self, x: Point, y: Point, z: Point) -> LabeledPartition:
        key = (x, y, z)
        got = self._segment_cache.get(key)
        if got is None:
            mirrored = self._segment_cache.get((y, x, z))
            if mirrored is not None:
                got = mirrored.mirrored()
            else:
                got = self.classify_segment(x, y, z)
            self._segment_cache[key] = got
        return got

    def section(self, x: Point, y: Point, z: Point, which: str) -> SectionSet:
        return self.segment(x, y, z).section(which)

    def descriptor(self) -> dict:  # pragma: no cover - overridden
        return {"kind": self.kind}


class MultiUtility(RelationModel):
    """x is weakly preferred to y iff every utility agrees: u.x >= u.y."""

    kind = "multi_utility"

    def __init__(self, utilities: Sequence[Sequence], space: Optional[MixtureSpace] = None):
        utils = tuple(tuple(Fraction(v) for v in u) for u in utilities)
        if not utils or len({len(u) for u in utils}) != 1:
            raise ValueError("need one or more utility vectors of equal length")
        super().__init__(space or Simplex(len(utils[0])))
        self.utilities = utils
        self._dots: dict[Point, tuple[Fraction, ...]] = {}

    def dots(self, p: Point) -> tuple[Fraction, ...]:
        got = self._dots.get(p)
        if got is None:
            got = tuple(sum(u * c for u, c in zip(vec, p.coords)) for vec in self.utilities)
            self._dots[p] = got
        return got

    def compare(self, x: Point, y: Point) -> ComparisonOutcome:
        dx, dy = self.dots(x), self.dots(y)
        return ComparisonOutcome.from_weak(
            all(a >= b for a, b in zip(dx, dy)),
            all(b >= a for a, b in zip(dx, dy)),
        )

    @staticmethod
    def _half_space_bounds(coeffs, sign):
        # intersection of {lam : sign*(a*lam + b) >= 0} over all utilities;
        # every constraint is non-strict, so the result is a closed interval
        lo, hi = iv.ZERO, iv.ONE
        for a, b in coeffs:
            a, b = sign * a, sign * b
            if a == 0:
                if b < 0:
                    return None
                continue
            t = -b / a
            if a > 0:
                if t > lo:
                    lo = t
            elif t < hi:
                hi = t
        if lo > hi:
            return None
        return lo, hi

    @staticmethod
    def _minus_closed(outer, cut) -> list[Interval]:
        # closed interval minus closed interval: open edges at the cut
        if outer is None:
            return []
        olo, ohi = outer
        if cut is None or cut[1] < olo or cut[0] > ohi:
            return [Interval(olo, ohi)]
        pieces = []
        if olo < cut[0]:
            pieces.append(Interval(olo, cut[0], True, False))
        if cut[1] < ohi:
            pieces.append(Interval(cut[1], ohi, False, True))
        return pieces

    def classify_segment(self, x: Point, y: Point, z: Point) -> LabeledPartition:
        dx, dy, dz = self.dots(x), self.dots(y), self.dots(z)
        coeffs = [(dx[i] - dy[i], dy[i] - dz[i]) for i in range(len(self.utilities))]
        ge = self._half_space_bounds(coeffs, 1)
        le = self._half_space_bounds(coeffs, -1)

        eq = EMPTY
        if ge is not None and le is not None:
            elo, ehi = max(ge[0], le[0]), min(ge[1], le[1])
            if elo <= ehi:
                eq = SectionSet((Interval(elo, ehi),))
        ge_set = EMPTY if ge is None else SectionSet((Interval(*ge),))
        le_set = EMPTY if le is None else SectionSet((Interval(*le),))
        return assemble_partition({
            Label.STRICT_ABOVE: iv.normalize(self._minus_closed(ge, le)),
            Label.STRICT_BELOW: iv.normalize(self._minus_closed(le, ge)),
            Label.INDIFFERENT: eq,
            Label.INCOMPARABLE: iv.complement(iv.union(ge_set, le_set)),
        })

    def descriptor(self) -> dict:
        return {
            "kind": "multi_utility",
            "utilities": [[str(v) for v in u] for u in self.utilities],
        }


class CatalogPiecewise(RelationModel):
    """Hand-coded relation with a closed-form segment oracle."""

    kind = "catalog"

    def __init__(
        self,
        entry_id: str,
        space: MixtureSpace,
        compare_fn: Callable[[Point, Point], ComparisonOutcome],
        segment_fn: Optional[Callable[[Point, Point, Point], LabeledPartition]],
    ):
        super().__init__(space)
        self.entry_id = entry_id
        self._compare = compare_fn
        self._segment = segment_fn

    def compare(self, x: Point, y: Point) -> ComparisonOutcome:
        return self._compare(x, y)

    def classify_segment(self, x: Point, y: Point, z: Point) -> LabeledPartition:
        if self._segment is None:  # pragma: no cover - catalog entries supply one
            return super().classify_segment(x, y, z)
        return self._segment(x, y, z)

    def descriptor(self) -> dict:
        return {"kind": "catalog", "id": self.entry_id}


class QuotientDerived(RelationModel):
    """Relation induced on a quotient space; anti-symmetric by construction."""

    kind = "quotient"

    def __init__(self, base: RelationModel, qspace):
        super().__init__(qspace)
        self.base = base
        self.has_segment_oracle = base.has_segment_oracle

    def compare(self, x: Point, y: Point) -> ComparisonOutcome:
        return self.base.compare(self.space.canonical(x), self.space.canonical(y))

    def classify_segment(self, x: Point, y: Point, z: Point) -> LabeledPartition:
        cx, cy, cz = (self.space.canonical(p) for p in (x, y, z))
        return self.base.segment(cx, cy, cz)

    def descriptor(self) -> dict:
        return {"kind": "quotient", "base": self.base.descriptor()}


class PointwiseOnly(RelationModel):
    """Comparator without a segment oracle; sections are unrepresentable."""

    kind = "pointwise"
    has_segment_oracle = False

    def __init__(
        self,
        entry_id: str,
        space: MixtureSpace,
        compare_fn: Callable[[Point, Point], ComparisonOutcome],
        strong_witness_fn=None,
    ):
        super().__init__(space)
        self.entry_id = entry_id
        self._compare = compare_fn
        # optional hook: (x, y, z) -> (lam, delta) weights proving the
        # strict pair survives mixing toward z, or None when unknown
        self.strong_witness_fn = strong_witness_fn

    def compare(self, x: Point, y: Point) -> ComparisonOutcome:
        return self._compare(x, y)

    def descriptor(self) -> dict:
        return {"kind": "catalog", "id": self.entry_id}


# ---------------------------------------------------------------------------
# Checked module-level surface
# ---------------------------------------------------------------------------


def compare(rel: RelationModel, x: Point, y: Point) -> ComparisonOutcome:
    for p in (x, y):
        if not rel.space.contains(p):
            raise CarrierError(f"point not in carrier: {p}")
    return rel.compare(x, y)


def classify_segment(rel: RelationModel, x: Point, y: Point, z: Point) -> LabeledPartition:
    for p in (x, y, z):
        if not rel.space.contains(p):
            raise CarrierError(f"point not in carrier: {p}")
    return rel.segment(x, y, z)


def section(rel: RelationModel, x: Point, y: Point, z: Point, which: str) -> SectionSet:
    if which not in SECTION_LABELS:
        raise ValueError(f"unknown section selector: {which!r}")
    return classify_segment(rel, x, y, z).section(which)

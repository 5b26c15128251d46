"""Finite decision procedures, with witnesses, for the preference axioms.

Every universally quantified axiom is decided over an explicit finite
universe (closed under grid-weight mixtures) with a deterministic
counterexample on failure.  Section-based axioms use the relation's exact
segment oracle, so quantification over the mixing weight itself is exact,
not sampled.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from . import intervals as iv
from .intervals import OPEN_UNIT, SectionSet, analyze, representative
from .relations import (
    ComparisonOutcome,
    MultiUtility,
    RelationModel,
)
from .spaces import DEFAULT_GRID, Point, augment_points
from .verdicts import AxiomVerdict, Status


class AxiomId(str, Enum):
    REFLEXIVE = "reflexive"
    COMPLETE = "complete"
    NONTRIVIAL = "nontrivial"
    TRANSITIVE = "transitive"
    NEGATIVELY_TRANSITIVE = "negatively_transitive"
    SEMI_TRANSITIVE = "semi_transitive"
    SEMI_TRANSITIVE_UP = "semi_transitive_up"      # x ~ y > z  =>  x > z
    SEMI_TRANSITIVE_DOWN = "semi_transitive_down"  # x > y ~ z  =>  x > z
    TRANSITIVE_SYM = "transitive_sym"
    TRANSITIVE_STRICT = "transitive_strict"
    ANTI_SYMMETRIC = "anti_symmetric"
    MIXTURE_CONTINUOUS = "mixture_continuous"
    ARCHIMEDEAN = "archimedean"
    STRONG_ARCHIMEDEAN = "strong_archimedean"
    OPEN_STRICT_SECTIONS = "open_strict_sections"
    OPEN_INCOMPARABLE_SECTIONS = "open_incomparable_sections"
    LINEAR = "linear"
    CONVEX = "convex"
    CONCAVE = "concave"
    STAR_CONVEX = "star_convex"
    STAR_CONCAVE = "star_concave"
    INDEPENDENT = "independent"
    FRAGILE = "fragile"
    FLIMSY = "flimsy"


ORDER_AXIOMS = (
    AxiomId.REFLEXIVE, AxiomId.COMPLETE, AxiomId.NONTRIVIAL, AxiomId.TRANSITIVE,
    AxiomId.NEGATIVELY_TRANSITIVE, AxiomId.SEMI_TRANSITIVE,
    AxiomId.SEMI_TRANSITIVE_UP, AxiomId.SEMI_TRANSITIVE_DOWN,
    AxiomId.TRANSITIVE_SYM, AxiomId.TRANSITIVE_STRICT, AxiomId.ANTI_SYMMETRIC,
)

CONVEXITY_AXIOMS = (
    AxiomId.LINEAR, AxiomId.CONVEX, AxiomId.CONCAVE,
    AxiomId.STAR_CONVEX, AxiomId.STAR_CONCAVE,
)

ALL_AXIOMS = ORDER_AXIOMS + (
    AxiomId.MIXTURE_CONTINUOUS, AxiomId.ARCHIMEDEAN, AxiomId.STRONG_ARCHIMEDEAN,
    AxiomId.OPEN_STRICT_SECTIONS, AxiomId.OPEN_INCOMPARABLE_SECTIONS,
) + CONVEXITY_AXIOMS + (AxiomId.INDEPENDENT, AxiomId.FRAGILE, AxiomId.FLIMSY)


@dataclass(frozen=True)
class Universe:
    """Finite instantiation of the carrier: base points, mixture-closure
    depth, and the rational weight grid used for closure and sampling."""

    points: tuple[Point, ...]
    closure_depth: int = 1
    grid: tuple[Fraction, ...] = DEFAULT_GRID

    def to_json(self) -> dict:
        from .spaces import point_to_json

        return {
            "points": [point_to_json(p) for p in self.points],
            "closure_depth": self.closure_depth,
            "grid": [str(g) for g in self.grid],
        }


def _holds(axiom, note=None):
    return AxiomVerdict(axiom, Status.HOLDS, note=note)


def _fails(axiom, witness=None, note=None):
    return AxiomVerdict(axiom, Status.FAILS, witness, note)


def _na(axiom, note):
    return AxiomVerdict(axiom, Status.NOT_APPLICABLE, note=note)


class AxiomEngine:
    """Caches comparisons, sections and verdicts for one (relation, universe)."""

    def __init__(self, rel: RelationModel, universe: Universe):
        self.rel = rel
        self.space = rel.space
        self.universe = universe
        self.grid = tuple(universe.grid)
        self.points = augment_points(
            self.space, universe.points, universe.grid, universe.closure_depth
        )
        self._cmp: dict[tuple[Point, Point], ComparisonOutcome] = {}
        self._verdicts: dict[str, AxiomVerdict] = {}
        self._strict_pairs: Optional[list[tuple[Point, Point]]] = None
        self._incomp: Optional[dict[Point, list[Point]]] = None

    # -- comparison layer ---------------------------------------------------

    def compare(self, x: Point, y: Point) -> ComparisonOutcome:
        key = (x, y)
        got = self._cmp.get(key)
        if got is None:
            got = self.rel.compare(x, y)
            self._cmp[key] = got
        return got

    def weak(self, x, y) -> bool:
        return self.compare(x, y) in (ComparisonOutcome.BETTER, ComparisonOutcome.EQUIVALENT)

    def strict(self, x, y) -> bool:
        return self.compare(x, y) is ComparisonOutcome.BETTER

    def equiv(self, x, y) -> bool:
        return self.compare(x, y) is ComparisonOutcome.EQUIVALENT

    def incomparable(self, x, y) -> bool:
        return self.compare(x, y) is ComparisonOutcome.INCOMPARABLE

    def strict_pairs(self) -> list[tuple[Point, Point]]:
        if self._strict_pairs is None:
            self._strict_pairs = [
                (x, y) for x in self.points for y in self.points if self.strict(x, y)
            ]
        return self._strict_pairs

    def incomparable_partners(self) -> dict[Point, list[Point]]:
        if self._incomp is None:
            self._incomp = {
                x: [y for y in self.points if self.incomparable(x, y)]
                for x in self.points
            }
        return self._incomp

    def section(self, x, y, z, which: str) -> SectionSet:
        return self.rel.segment(x, y, z).section(which)

    # -- verdict dispatch ---------------------------------------------------

    def verdict(self, axiom) -> AxiomVerdict:
        name = axiom.value if isinstance(axiom, AxiomId) else str(axiom)
        if name not in self._verdicts:
            method = getattr(self, f"_check_{name}")
            self._verdicts[name] = method()
        return self._verdicts[name]

    def all_verdicts(self) -> dict[str, AxiomVerdict]:
        return {a.value: self.verdict(a) for a in ALL_AXIOMS}

    # -- order axioms ---------------------------------------------------------

    def _check_reflexive(self):
        for x in self.points:
            if not self.equiv(x, x):
                return _fails(AxiomId.REFLEXIVE, {"x": x})
        return _holds(AxiomId.REFLEXIVE)

    def _check_complete(self):
        for x in self.points:
            for y in self.points:
                if self.incomparable(x, y):
                    return _fails(AxiomId.COMPLETE, {"x": x, "y": y})
        return _holds(AxiomId.COMPLETE)

    def _check_nontrivial(self):
        for x in self.points:
            for y in self.points:
                if self.strict(x, y):
                    return AxiomVerdict(AxiomId.NONTRIVIAL, Status.HOLDS, {"x": x, "y": y})
        return _fails(AxiomId.NONTRIVIAL, note="no strict pair on the universe")

    def _check_transitive(self):
        for x in self.points:
            for y in self.points:
                if not self.weak(x, y):
                    continue
                for z in self.points:
                    if self.weak(y, z) and not self.weak(x, z):
                        return _fails(AxiomId.TRANSITIVE, {"x": x, "y": y, "z": z})
        return _holds(AxiomId.TRANSITIVE)

    def _check_negatively_transitive(self):
        for x in self.points:
            for y in self.points:
                if self.weak(x, y):
                    continue
                for z in self.points:
                    if not self.weak(y, z) and self.weak(x, z):
                        return _fails(
                            AxiomId.NEGATIVELY_TRANSITIVE, {"x": x, "y": y, "z": z}
                        )
        return _holds(AxiomId.NEGATIVELY_TRANSITIVE)

    def negatively_transitive_strict(self) -> AxiomVerdict:
        """Negative transitivity of the strict part (not a Table axiom)."""
        name = "negatively_transitive_strict"
        for x in self.points:
            for y in self.points:
                if self.strict(x, y):
                    continue
                for z in self.points:
                    if not self.strict(y, z) and self.strict(x, z):
                        return _fails(name, {"x": x, "y": y, "z": z})
        return _holds(name)

    def _check_semi_transitive_down(self):
        for x in self.points:
            for y in self.points:
                if not self.strict(x, y):
                    continue
                for z in self.points:
                    if self.equiv(y, z) and not self.strict(x, z):
                        return _fails(
                            AxiomId.SEMI_TRANSITIVE_DOWN, {"x": x, "y": y, "z": z}
                        )
        return _holds(AxiomId.SEMI_TRANSITIVE_DOWN)

    def _check_semi_transitive_up(self):
        for x in self.points:
            for y in self.points:
                if not self.equiv(x, y):
                    continue
                for z in self.points:
                    if self.strict(y, z) and not self.strict(x, z):
                        return _fails(
                            AxiomId.SEMI_TRANSITIVE_UP, {"x": x, "y": y, "z": z}
                        )
        return _holds(AxiomId.SEMI_TRANSITIVE_UP)

    def _check_semi_transitive(self):
        down = self.verdict(AxiomId.SEMI_TRANSITIVE_DOWN)
        up = self.verdict(AxiomId.SEMI_TRANSITIVE_UP)
        if down.passed and up.passed:
            return _holds(AxiomId.SEMI_TRANSITIVE)
        bad = down if down.failed else up
        bad_name = getattr(bad.axiom, "value", bad.axiom)
        return _fails(AxiomId.SEMI_TRANSITIVE, bad.witness, note=f"{bad_name} fails")

    def _check_transitive_sym(self):
        for x in self.points:
            for y in self.points:
                if not self.equiv(x, y):
                    continue
                for z in self.points:
                    if self.equiv(y, z) and not self.equiv(x, z):
                        return _fails(AxiomId.TRANSITIVE_SYM, {"x": x, "y": y, "z": z})
        return _holds(AxiomId.TRANSITIVE_SYM)

    def _check_transitive_strict(self):
        for x in self.points:
            for y in self.points:
                if not self.strict(x, y):
                    continue
                for z in self.points:
                    if self.strict(y, z) and not self.strict(x, z):
                        return _fails(AxiomId.TRANSITIVE_STRICT, {"x": x, "y": y, "z": z})
        return _holds(AxiomId.TRANSITIVE_STRICT)

    def _check_anti_symmetric(self):
        for x in self.points:
            for y in self.points:
                if x != y and self.equiv(x, y):
                    return _fails(AxiomId.ANTI_SYMMETRIC, {"x": x, "y": y})
        return _holds(AxiomId.ANTI_SYMMETRIC)

    # -- section topology axioms ----------------------------------------------

    def _oracle_or_na(self, axiom):
        if not self.rel.has_segment_oracle:
            return _na(axiom, "sections are not finite interval unions for this relation")
        return None

    def _check_mixture_continuous(self):
        na = self._oracle_or_na(AxiomId.MIXTURE_CONTINUOUS)
        if na:
            return na
        for x in self.points:
            for y in self.points:
                for z in self.points:
                    for which in ("ge", "le"):
                        sec = self.section(x, y, z, which)
                        if not analyze(sec).is_closed:
                            return _fails(
                                AxiomId.MIXTURE_CONTINUOUS,
                                {"x": x, "y": y, "z": z, "which": which, "section": sec},
                            )
        return _holds(AxiomId.MIXTURE_CONTINUOUS)

    def _check_open_strict_sections(self):
        na = self._oracle_or_na(AxiomId.OPEN_STRICT_SECTIONS)
        if na:
            return na
        for x in self.points:
            for y in self.points:
                for z in self.points:
                    for which in ("gt", "lt"):
                        sec = self.section(x, y, z, which)
                        if not analyze(sec).is_open:
                            return _fails(
                                AxiomId.OPEN_STRICT_SECTIONS,
                                {"x": x, "y": y, "z": z, "which": which, "section": sec},
                            )
        return _holds(AxiomId.OPEN_STRICT_SECTIONS)

    def _check_open_incomparable_sections(self):
        na = self._oracle_or_na(AxiomId.OPEN_INCOMPARABLE_SECTIONS)
        if na:
            return na
        for x in self.points:
            for y in self.points:
                for z in self.points:
                    sec = self.section(x, y, z, "incomparable")
                    if not analyze(sec).is_open:
                        return _fails(
                            AxiomId.OPEN_INCOMPARABLE_SECTIONS,
                            {"x": x, "y": y, "z": z, "section": sec},
                        )
        return _holds(AxiomId.OPEN_INCOMPARABLE_SECTIONS)

    def _has_interior_weight(self, sec: SectionSet) -> bool:
        return not iv.intersect(sec, OPEN_UNIT).is_empty()

    def _check_archimedean(self):
        # Each half carries its own incomparability guard: the upper half is
        # required whenever y has an incomparable partner z, the lower half
        # whenever x has an incomparable partner w.
        incomp = self.incomparable_partners()
        guarded = [
            (x, y) for x, y in self.strict_pairs() if incomp[x] or incomp[y]
        ]
        if not guarded:
            return _holds(AxiomId.ARCHIMEDEAN, note="vacuous: no qualifying tuple")
        na = self._oracle_or_na(AxiomId.ARCHIMEDEAN)
        if na:
            return na
        for x, y in guarded:
            for z in incomp[y]:
                if not self._has_interior_weight(self.section(x, z, y, "gt")):
                    return _fails(
                        AxiomId.ARCHIMEDEAN,
                        {"x": x, "y": y, "z": z,
                         "section": self.section(x, z, y, "gt")},
                        note="no interior weight keeps x-side strictly above y",
                    )
            for w in incomp[x]:
                if not self._has_interior_weight(self.section(y, w, x, "lt")):
                    return _fails(
                        AxiomId.ARCHIMEDEAN,
                        {"x": x, "y": y, "w": w,
                         "section": self.section(y, w, x, "lt")},
                        note="no interior weight keeps y-side strictly below x",
                    )
        return _holds(AxiomId.ARCHIMEDEAN)

    def _check_strong_archimedean(self):
        pairs = self.strict_pairs()
        if not pairs:
            return _holds(AxiomId.STRONG_ARCHIMEDEAN, note="vacuous: no strict pair")
        if not self.rel.has_segment_oracle:
            return self._strong_archimedean_pointwise(pairs)
        for x, y in pairs:
            for z in self.points:
                above = self.section(x, z, y, "gt")
                below = self.section(y, z, x, "lt")
                if not self._has_interior_weight(above):
                    return _fails(
                        AxiomId.STRONG_ARCHIMEDEAN,
                        {"x": x, "y": y, "z": z, "section": above},
                        note="no interior weight keeps x-side strictly above y",
                    )
                if not self._has_interior_weight(below):
                    return _fails(
                        AxiomId.STRONG_ARCHIMEDEAN,
                        {"x": x, "y": y, "z": z, "section": below},
                        note="no interior weight keeps y-side strictly below x",
                    )
        return _holds(AxiomId.STRONG_ARCHIMEDEAN)

    def _strong_archimedean_pointwise(self, pairs):
        fn = getattr(self.rel, "strong_witness_fn", None)
        if fn is None:
            return _na(
                AxiomId.STRONG_ARCHIMEDEAN,
                "no segment oracle and no pointwise witness constructor",
            )
        for x, y in pairs:
            for z in self.points:
                got = fn(x, y, z)
                if got is None:
                    return _na(
                        AxiomId.STRONG_ARCHIMEDEAN,
                        "pointwise witness search inconclusive",
                    )
                lam, delta = got
                ok = (
                    0 < lam < 1
                    and 0 < delta < 1
                    and self.rel.compare(self.space.mix(x, lam, z), y)
                    is ComparisonOutcome.BETTER
                    and self.rel.compare(self.space.mix(y, delta, z), x)
                    is ComparisonOutcome.WORSE
                )
                if not ok:  # pragma: no cover - witness constructors are exact
                    return _na(
                        AxiomId.STRONG_ARCHIMEDEAN, "pointwise witness failed verification"
                    )
        return _holds(AxiomId.STRONG_ARCHIMEDEAN, note="pointwise witness search")

    # -- convexity family -------------------------------------------------------

    def _check_convex(self):
        na = self._oracle_or_na(AxiomId.CONVEX)
        if na:
            return na
        for x in self.points:
            for y in self.points:
                for z in self.points:
                    if not (self.weak(x, z) and self.weak(y, z)):
                        continue
                    sec = self.section(x, y, z, "ge")
                    if sec != iv.FULL:
                        return _fails(
                            AxiomId.CONVEX,
                            {"x": x, "y": y, "z": z,
                             "lam": representative(iv.complement(sec))},
                        )
        return _holds(AxiomId.CONVEX)

    def _check_concave(self):
        na = self._oracle_or_na(AxiomId.CONCAVE)
        if na:
            return na
        for x in self.points:
            for y in self.points:
                for z in self.points:
                    if not (self.weak(z, x) and self.weak(z, y)):
                        continue
                    sec = self.section(x, y, z, "le")
                    if sec != iv.FULL:
                        return _fails(
                            AxiomId.CONCAVE,
                            {"x": x, "y": y, "z": z,
                             "lam": representative(iv.complement(sec))},
                        )
        return _holds(AxiomId.CONCAVE)

    def _check_star_convex(self):
        na = self._oracle_or_na(AxiomId.STAR_CONVEX)
        if na:
            return na
        for x in self.points:
            for y in self.points:
                if x == y or not self.weak(x, y):
                    continue
                sec = self.section(x, y, y, "gt")
                if not iv.is_subset(OPEN_UNIT, sec):
                    return _fails(
                        AxiomId.STAR_CONVEX,
                        {"x": x, "y": y,
                         "lam": representative(iv.difference(OPEN_UNIT, sec))},
                    )
        return _holds(AxiomId.STAR_CONVEX)

    def _check_star_concave(self):
        na = self._oracle_or_na(AxiomId.STAR_CONCAVE)
        if na:
            return na
        for x in self.points:
            for y in self.points:
                if x == y or not self.weak(y, x):
                    continue
                sec = self.section(x, y, y, "lt")
                if not iv.is_subset(OPEN_UNIT, sec):
                    return _fails(
                        AxiomId.STAR_CONCAVE,
                        {"x": x, "y": y,
                         "lam": representative(iv.difference(OPEN_UNIT, sec))},
                    )
        return _holds(AxiomId.STAR_CONCAVE)

    def _check_linear(self):
        na = self._oracle_or_na(AxiomId.LINEAR)
        if na:
            return na
        if not (self.verdict(AxiomId.REFLEXIVE).passed
                and self.verdict(AxiomId.TRANSITIVE_SYM).passed):
            return _na(
                AxiomId.LINEAR,
                "linearity is characterized by convex indifference sections only "
                "for reflexive relations with transitive indifference",
            )
        for x in self.points:
            for y in self.points:
                for z in self.points:
                    sec = self.section(x, y, z, "eq")
                    if not analyze(sec).is_convex:
                        first, second = sec.intervals[0], sec.intervals[1]
                        return _fails(
                            AxiomId.LINEAR,
                            {"x": x, "y": y, "z": z, "section": sec,
                             "lam": (first.hi + second.lo) / 2},
                        )
        return _holds(AxiomId.LINEAR)

    # -- independence, fragility, flimsiness ------------------------------------

    def _check_independent(self):
        if isinstance(self.rel, MultiUtility):
            return _holds(
                AxiomId.INDEPENDENT,
                note="exact: utility gaps scale linearly in the mixing weight",
            )
        weights = [g for g in self.grid if 0 < g <= 1]
        for x in self.points:
            for y in self.points:
                same = self.equiv(x, y)
                for z in self.points:
                    for lam in weights:
                        mixed_same = self.compare(
                            self.space.mix(x, lam, z), self.space.mix(y, lam, z)
                        ) is ComparisonOutcome.EQUIVALENT
                        if mixed_same != same:
                            return _fails(
                                AxiomId.INDEPENDENT,
                                {"x": x, "y": y, "z": z, "lam": lam},
                                note="indifference and mixed indifference disagree",
                            )
        return AxiomVerdict(
            AxiomId.INDEPENDENT, Status.SAMPLED,
            note="biconditional verified on grid weights",
        )

    def _check_fragile(self):
        na = self._oracle_or_na(AxiomId.FRAGILE)
        if na:
            return na
        for x in self.points:
            for y in self.points:
                for z in self.points:
                    part = self.rel.segment(x, y, z)
                    strict = iv.union(part.section("gt"), part.section("lt"))
                    if strict.is_empty():
                        continue
                    target = iv.closure(iv.interior(part.section("incomparable")))
                    hit = iv.intersect(strict, target)
                    if not hit.is_empty():
                        return AxiomVerdict(
                            AxiomId.FRAGILE, Status.HOLDS,
                            {"x": x, "y": y, "z": z, "lam": representative(hit)},
                            note="strict weight inside the closure of open "
                                 "incomparability",
                        )
        return _fails(AxiomId.FRAGILE, note="no fragile weight on the universe")

    def _check_flimsy(self):
        na = self._oracle_or_na(AxiomId.FLIMSY)
        if na:
            return na
        for x in self.points:
            for y in self.points:
                for z in self.points:
                    part = self.rel.segment(x, y, z)
                    bowtie = part.section("incomparable")
                    if bowtie.is_empty():
                        continue
                    comparable = iv.union(part.section("ge"), part.section("le"))
                    hit = iv.intersect(bowtie, iv.closure(comparable))
                    if not hit.is_empty():
                        return AxiomVerdict(
                            AxiomId.FLIMSY, Status.HOLDS,
                            {"x": x, "y": y, "z": z, "lam": representative(hit)},
                            note="incomparable weight is a limit of comparable weights",
                        )
        return _fails(AxiomId.FLIMSY, note="no flimsy weight on the universe")


# ---------------------------------------------------------------------------
# Module-level checker surface
# ---------------------------------------------------------------------------


def check_order_axioms(rel: RelationModel, universe: Universe) -> dict[str, AxiomVerdict]:
    engine = AxiomEngine(rel, universe)
    return {a.value: engine.verdict(a) for a in ORDER_AXIOMS}


def check_mixture_continuity(rel, universe) -> AxiomVerdict:
    return AxiomEngine(rel, universe).verdict(AxiomId.MIXTURE_CONTINUOUS)


def check_archimedean(rel, universe) -> AxiomVerdict:
    return AxiomEngine(rel, universe).verdict(AxiomId.ARCHIMEDEAN)


def check_strong_archimedean(rel, universe) -> AxiomVerdict:
    return AxiomEngine(rel, universe).verdict(AxiomId.STRONG_ARCHIMEDEAN)


def check_open_strict_sections(rel, universe) -> AxiomVerdict:
    return AxiomEngine(rel, universe).verdict(AxiomId.OPEN_STRICT_SECTIONS)


def check_open_incomparable_sections(rel, universe) -> AxiomVerdict:
    return AxiomEngine(rel, universe).verdict(AxiomId.OPEN_INCOMPARABLE_SECTIONS)


def check_convexity_family(rel, universe) -> dict[str, AxiomVerdict]:
    engine = AxiomEngine(rel, universe)
    return {a.value: engine.verdict(a) for a in CONVEXITY_AXIOMS}


def check_independence(rel, universe, grid: Optional[Sequence[Fraction]] = None) -> AxiomVerdict:
    if grid is not None:
        universe = Universe(universe.points, universe.closure_depth, tuple(grid))
    return AxiomEngine(rel, universe).verdict(AxiomId.INDEPENDENT)


def check_fragile(rel, universe) -> AxiomVerdict:
    return AxiomEngine(rel, universe).verdict(AxiomId.FRAGILE)


def check_flimsy(rel, universe) -> AxiomVerdict:
    return AxiomEngine(rel, universe).verdict(AxiomId.FLIMSY)

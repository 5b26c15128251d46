"""Seeded random multi-utility instances for fuzzing and property sweeps.

Universes are the simplex vertices plus a random rational point, closed
under midpoint mixtures, then enriched: whenever some strict section has a
boundary weight adjacent to an open incomparability interval, the boundary
mixture, an adjacent incomparable mixture, and (if needed) a constructed
incomparable partner are added as points.  On the enriched universe the
interior-weight checks fail exactly when the section shapes say they must,
so finite verdicts line up with the relation's global behavior.
"""

from __future__ import annotations

import os
import random
from fractions import Fraction
from typing import Iterator, Optional

from . import intervals as iv
from .axioms import AxiomEngine, AxiomId, Universe
from .relations import ComparisonOutcome, MultiUtility
from .spaces import Point, augment_points

F = Fraction

DEFAULT_SEED = 20260808
ENRICH_GRID = (F(1, 2),)


def seeded_rng(seed: Optional[int] = None) -> random.Random:
    if seed is None:
        seed = int(os.environ.get("PREFCHECK_SEED", DEFAULT_SEED))
    return random.Random(seed)


def random_utilities(rng: random.Random, n_coords: int, n_utils: int,
                     lo: int = -5, hi: int = 5) -> tuple:
    return tuple(
        tuple(F(rng.randint(lo, hi)) for _ in range(n_coords))
        for _ in range(n_utils)
    )


def random_simplex_point(rng: random.Random, n_coords: int) -> Point:
    weights = [rng.randint(0, 6) for _ in range(n_coords)]
    if sum(weights) == 0:
        weights[rng.randrange(n_coords)] = 1
    total = sum(weights)
    return Point(tuple(F(w, total) for w in weights))


def _incomparable_partner(rel: MultiUtility, points: list[Point],
                          target: Point) -> Optional[Point]:
    """A point incomparable to `target`, constructed if none is present.

    Moving from `target` along the difference of any incomparable pair
    trades the utilities against each other, which forces incomparability
    as soon as the move stays inside the simplex.
    """
    for w in points:
        if rel.compare(target, w) is ComparisonOutcome.INCOMPARABLE:
            return None
    directions = []
    for c in points:
        for d in points:
            if rel.compare(c, d) is ComparisonOutcome.INCOMPARABLE:
                directions.append(tuple(a - b for a, b in zip(c.coords, d.coords)))
    for vec in directions:
        for k in range(1, 12):
            step = F(1, 2 ** k)
            for sign in (1, -1):
                coords = tuple(a + sign * step * v
                               for a, v in zip(target.coords, vec))
                if all(c >= 0 for c in coords):
                    cand = Point(coords)
                    if rel.compare(target, cand) is ComparisonOutcome.INCOMPARABLE:
                        return cand
    return None


def _boundary_enrichment(rel: MultiUtility, points: list[Point]) -> list[Point]:
    found = None
    for x in points:
        for y in points:
            for z in points:
                part = rel.segment(x, y, z)
                bowtie_core = iv.closure(iv.interior(part.section("incomparable")))
                if bowtie_core.is_empty():
                    continue
                for which in ("gt", "lt"):
                    hit = iv.intersect(part.section(which), bowtie_core)
                    if not hit.is_empty():
                        found = (x, y, part, hit)
                        break
                if found:
                    break
            if found:
                break
        if found:
            break
    if not found:
        return []

    x, y, part, hit = found
    lam0 = iv.representative(hit)
    bow_interior = iv.interior(part.section("incomparable"))
    piece = next(p for p in bow_interior.intervals if p.lo <= lam0 <= p.hi)
    lam_mid = (piece.lo + piece.hi) / 2
    boundary = rel.space.mix(x, lam0, y)
    inside = rel.space.mix(x, lam_mid, y)
    additions = [p for p in (boundary, inside) if p not in points]
    partner = _incomparable_partner(rel, points + additions, boundary)
    if partner is not None and partner not in points:
        additions.append(partner)
    return additions


def instance_universe(rel: MultiUtility, base_points: tuple[Point, ...]) -> Universe:
    points = augment_points(rel.space, base_points, ENRICH_GRID, depth=1)
    points = points + _boundary_enrichment(rel, points)
    return Universe(tuple(points), closure_depth=0, grid=ENRICH_GRID)


def random_multi_utility_instance(
    rng: random.Random, n_coords: int, n_utils: int
) -> tuple[MultiUtility, Universe]:
    rel = MultiUtility(random_utilities(rng, n_coords, n_utils))
    base = tuple(rel.space.vertices())
    if n_coords <= 3:  # keep larger simplexes at vertex resolution
        base += (random_simplex_point(rng, n_coords),)
    return rel, instance_universe(rel, base)


def random_single_utility_instance(
    rng: random.Random, n_coords: int = 3
) -> tuple[MultiUtility, Universe]:
    return random_multi_utility_instance(rng, n_coords, 1)


def random_pareto_instance(
    rng: random.Random, n_coords: int = 3, max_tries: int = 400
) -> tuple[MultiUtility, Universe, AxiomEngine]:
    """Two-utility instance verified incomplete and nontrivial on its universe."""
    for _ in range(max_tries):
        rel, universe = random_multi_utility_instance(rng, n_coords, 2)
        engine = AxiomEngine(rel, universe)
        if engine.verdict(AxiomId.COMPLETE).failed and engine.verdict(
            AxiomId.NONTRIVIAL
        ).passed:
            return rel, universe, engine
    raise RuntimeError("could not draw an incomplete nontrivial instance")


def fuzz_corpus(count: int, seed: Optional[int] = None) -> Iterator[tuple[str, MultiUtility, Universe]]:
    """Deterministic stream of instances cycling utility counts and simplex sizes."""
    rng = seeded_rng(seed)
    shapes = [(3, 1), (3, 2), (3, 3), (4, 1), (4, 2)]
    for i in range(count):
        n_coords, n_utils = shapes[i % len(shapes)]
        rel, universe = random_multi_utility_instance(rng, n_coords, n_utils)
        yield f"fuzz-{i:04d}-u{n_utils}x{n_coords}", rel, universe


def soundness_violations(rel, universe, engine=None) -> list:
    from .theorems import run_all_theorems

    return [
        report
        for report in run_all_theorems(rel, universe, engine=engine)
        if report.applicable and not report.consistent
    ]

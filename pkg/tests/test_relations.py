from fractions import Fraction

import pytest

from prefcheck import intervals as iv
from prefcheck.catalog import ENTRY_IDS, load_entry
from prefcheck.intervals import FULL, interval, point, union
from prefcheck.quadratic import quad_pt
from prefcheck.relations import (
    ComparisonOutcome,
    Label,
    MultiUtility,
    NotRepresentableError,
    OUTCOME_TO_LABEL,
    PartitionError,
    affine_eq,
    affine_ge,
    affine_le,
    assemble_partition,
    classify_segment,
    compare,
    section,
)
from prefcheck.spaces import CarrierError, pt

F = Fraction

ORACLE_ENTRIES = [eid for eid in ENTRY_IDS
                  if load_entry(eid).relation.has_segment_oracle]


# ---------------------------------------------------------------------------
# comparison
# ---------------------------------------------------------------------------


def test_fragile_unit_compare_examples():
    rel = load_entry("fragile_unit").relation
    assert compare(rel, pt(1), pt(0)) is ComparisonOutcome.BETTER
    assert compare(rel, pt(F(3, 10)), pt(F(7, 10))) is ComparisonOutcome.INCOMPARABLE
    assert compare(rel, pt(F(3, 10)), pt(F(3, 10))) is ComparisonOutcome.EQUIVALENT


def test_compare_rejects_points_outside_carrier():
    rel = load_entry("fragile_unit").relation
    with pytest.raises(CarrierError):
        compare(rel, pt(2), pt(0))


def test_reflexive_on_every_entry():
    for eid in ENTRY_IDS:
        entry = load_entry(eid)
        for p in entry.universe.points:
            assert entry.relation.compare(p, p) is ComparisonOutcome.EQUIVALENT


# ---------------------------------------------------------------------------
# segment oracles
# ---------------------------------------------------------------------------


def test_appx1_segment_at_top_triple():
    rel = load_entry("appx1").relation
    part = classify_segment(rel, pt(1), pt(0), pt(0))
    assert part.section("gt") == point(1)
    assert part.section("eq") == point(0)
    assert part.section("incomparable") == interval(0, 1, False, False)


def test_single_utility_segment_crosses_at_half():
    rel = MultiUtility(((0, 1, 2),))
    e1, e2, e3 = rel.space.vertices()
    part = classify_segment(rel, e1, e3, e2)
    assert part.section("eq") == point(F(1, 2))
    assert part.section("gt") == interval(0, F(1, 2), True, False)
    assert part.section("lt") == interval(F(1, 2), 1, False, True)


@pytest.mark.parametrize("eid", ORACLE_ENTRIES)
def test_constant_segment_on_diagonal(eid):
    entry = load_entry(eid)
    x = entry.universe.points[0]
    part = classify_segment(entry.relation, x, x, x)
    assert part.section("eq") == FULL


def test_section_examples():
    appx2 = load_entry("appx2").relation
    assert section(appx2, pt(1), pt(0), pt(0), "incomparable") == interval(F(1, 2), 1)
    flimsy = load_entry("flimsy_0_3").relation
    got = section(flimsy, pt(3), pt(0), pt(0), "ge")
    assert got == union(interval(0, F(1, 3), True, False),
                        interval(F(2, 3), 1, False, True))


def test_section_rejects_unknown_selector():
    rel = load_entry("appx1").relation
    with pytest.raises(ValueError):
        section(rel, pt(1), pt(0), pt(0), "nonsense")


def test_pointwise_relation_has_no_sections():
    entry = load_entry("appx4_rationals")
    with pytest.raises(NotRepresentableError):
        classify_segment(entry.relation, quad_pt(1), quad_pt(0), quad_pt(0, F(1, 2)))


# ---------------------------------------------------------------------------
# partition invariants
# ---------------------------------------------------------------------------


def _universe_triples(entry, limit=None):
    pts = entry.universe.points
    triples = [(x, y, z) for x in pts for y in pts for z in pts]
    return triples if limit is None else triples[:limit]


@pytest.mark.parametrize("eid", ORACLE_ENTRIES)
def test_partition_totality(eid):
    entry = load_entry(eid)
    for x, y, z in _universe_triples(entry):
        part = entry.relation.segment(x, y, z)
        total = iv.EMPTY
        for which in ("gt", "lt", "eq", "incomparable"):
            total = iv.union(total, part.section(which))
        assert total == FULL


@pytest.mark.parametrize("eid", ORACLE_ENTRIES)
def test_segment_endpoints_match_compare(eid):
    entry = load_entry(eid)
    rel = entry.relation
    for x, y, z in _universe_triples(entry):
        part = rel.segment(x, y, z)
        assert part.label_at(iv.ONE) == OUTCOME_TO_LABEL[rel.compare(x, z)]
        assert part.label_at(iv.ZERO) == OUTCOME_TO_LABEL[rel.compare(y, z)]


@pytest.mark.parametrize("eid", ORACLE_ENTRIES)
def test_segment_swap_symmetry(eid):
    entry = load_entry(eid)
    weights = [F(p, 20) for p in range(21)]
    for x, y, z in _universe_triples(entry):
        forward = entry.relation.segment(x, y, z)
        backward = entry.relation.segment(y, x, z)
        for lam in weights:
            assert forward.label_at(lam) == backward.label_at(1 - lam)


def test_multi_utility_weak_sections_are_convex():
    import random

    rng = random.Random(7)
    for _ in range(25):
        utils = [[rng.randint(-4, 4) for _ in range(3)] for _ in range(rng.randint(1, 3))]
        rel = MultiUtility(utils)
        pts = rel.space.vertices()
        for x in pts:
            for y in pts:
                for z in pts:
                    part = rel.segment(x, y, z)
                    assert iv.analyze(part.section("ge")).is_convex
                    assert iv.analyze(part.section("le")).is_convex


@pytest.mark.parametrize("eid", ORACLE_ENTRIES)
def test_oracle_against_pointwise_compare(eid):
    """Labels agree with direct comparison of the mixed point (p/100 grid)."""
    entry = load_entry(eid)
    rel, space = entry.relation, entry.space
    weights = [F(p, 100) for p in range(101)]
    for x, y, z in _universe_triples(entry):
        part = rel.segment(x, y, z)
        for lam in weights:
            got = part.label_at(lam)
            want = OUTCOME_TO_LABEL[rel.compare(space.mix(x, lam, y), z)]
            assert got == want, (eid, x, y, z, lam)


# ---------------------------------------------------------------------------
# affine region helpers and partition assembly
# ---------------------------------------------------------------------------


def test_affine_regions_match_brute_force():
    values = [F(p, 16) for p in range(17)]
    cases = [(F(2), F(-1), F(0)), (F(-3), F(2), F(1, 2)), (F(0), F(1), F(1)),
             (F(0), F(0), F(1)), (F(1, 3), F(0), F(1))]
    for a, b, c in cases:
        for strict in (False, True):
            ge = affine_ge(a, b, c, strict)
            le = affine_le(a, b, c, strict)
            for lam in values:
                val = a * lam + b
                assert (lam in ge) == (val > c if strict else val >= c)
                assert (lam in le) == (val < c if strict else val <= c)
        eq = affine_eq(a, b, c)
        for lam in values:
            assert (lam in eq) == (a * lam + b == c)


def test_assemble_partition_rejects_gaps_and_overlaps():
    with pytest.raises(PartitionError):
        assemble_partition({Label.INDIFFERENT: interval(0, F(1, 2), True, False)})
    with pytest.raises(PartitionError):
        assemble_partition({
            Label.INDIFFERENT: interval(0, F(1, 2)),
            Label.INCOMPARABLE: interval(F(1, 2), 1),
        })

from fractions import Fraction

import pytest

from prefcheck.catalog import load_entry
from prefcheck.relations import ComparisonOutcome
from prefcheck.spaces import (
    CarrierError,
    DEFAULT_GRID,
    Point,
    QuotientError,
    RealInterval,
    Simplex,
    SplitSpace,
    check_c1_c2,
    check_mixture_axioms,
    mix,
    pt,
    quotient,
    split_a,
    split_b,
)

F = Fraction


@pytest.fixture
def triangle():
    return Simplex(3)


def test_weight_one_returns_left_point(triangle):
    e1, e2, _ = triangle.vertices()
    assert mix(triangle, e1, 1, e2) == e1
    assert mix(triangle, e1, 0, e2) == e2


def test_split_space_cross_arm_mixture():
    space = SplitSpace()
    assert mix(space, split_a(1), F(1, 2), split_b(1)) == split_b(F(1, 2))
    # weight 1 keeps the vertical point, weight 0 the horizontal one
    assert mix(space, split_a(1), 1, split_b(1)) == split_a(1)
    assert mix(space, split_b(1), 0, split_a(1)) == split_a(1)
    # mixing toward the vertical arm scales the horizontal coordinate
    assert mix(space, split_b(1), F(3, 4), split_a(F(1, 3))) == split_b(F(3, 4))


def test_nested_mixture_collapses(triangle):
    e1, e2, _ = triangle.vertices()
    inner = mix(triangle, e1, F(1, 2), e2)
    assert mix(triangle, e1, F(1, 2), inner) == mix(triangle, e1, F(3, 4), e2)


def test_mix_validates_weight_and_carrier(triangle):
    e1, e2, _ = triangle.vertices()
    with pytest.raises(CarrierError):
        mix(triangle, e1, F(3, 2), e2)
    with pytest.raises(CarrierError):
        mix(triangle, pt(1, 1, 0), F(1, 2), e2)


def test_split_space_carrier():
    space = SplitSpace()
    assert space.contains(split_a(0))        # the origin sits on the vertical arm
    assert not space.contains(Point((F(0), F(0)), part="B"))
    assert not space.contains(pt(F(1, 2), F(1, 2)))


def test_simplex_mixture_axioms_hold(triangle):
    verdicts = check_mixture_axioms(triangle, triangle.vertices())
    assert all(verdicts[name].passed for name in ("S1", "S2", "S3", "S4"))


def test_split_space_mixture_axioms_hold():
    space = SplitSpace()
    points = [split_b(1), split_a(0), split_a(1), split_b(F(1, 2))]
    verdicts = check_mixture_axioms(space, points)
    assert all(verdicts[name].passed for name in ("S1", "S2", "S3", "S4"))


def test_simplex_cancellation_passes(triangle):
    verdicts = check_c1_c2(triangle, triangle.vertices())
    assert verdicts["C1"].passed and verdicts["C2"].passed


def test_split_space_cancellation_fails():
    space = SplitSpace()
    points = [split_b(1), split_a(0), split_a(1), split_b(F(1, 2))]
    verdicts = check_c1_c2(space, points)
    c1 = verdicts["C1"]
    assert c1.failed
    w = c1.witness
    # mixing toward either vertical point follows the same path
    assert w["x"] == split_b(1)
    assert {w["y"], w["y_prime"]} == {split_a(0), split_a(1)}
    assert 0 < w["lam"] < 1
    assert space.mix(w["x"], w["lam"], w["y"]) == space.mix(w["x"], w["lam"], w["y_prime"])
    assert verdicts["C2"].passed


def test_quotient_classes_of_split_relation():
    entry = load_entry("split_hm")
    points = (split_a(1), split_a(0), split_b(F(1, 2)), split_b(1))
    qspace, qrel = quotient(entry.space, entry.relation, points)
    assert qspace.classes == (
        (split_a(1), split_a(0)),
        (split_b(F(1, 2)),),
        (split_b(1),),
    )
    assert qspace.representatives == (split_a(1), split_b(F(1, 2)), split_b(1))


def test_quotient_with_trivial_indifference_gives_singletons():
    entry = load_entry("appx1")
    points = (pt(0), pt(F(1, 2)), pt(1))
    qspace, _ = quotient(entry.space, entry.relation, points)
    assert all(len(cls) == 1 for cls in qspace.classes)


def test_quotient_projection_commutes_with_mixture():
    entry = load_entry("split_hm")
    points = entry.universe.points
    qspace, _ = quotient(entry.space, entry.relation, points)
    for x in points:
        for y in points:
            for lam in DEFAULT_GRID:
                direct = qspace.canonical(entry.space.mix(x, lam, y))
                lifted = qspace.mix(qspace.canonical(x), lam, qspace.canonical(y))
                assert direct == lifted


def test_quotient_mixture_axioms_with_derived_relation():
    entry = load_entry("split_hm")
    qspace, qrel = quotient(entry.space, entry.relation, entry.universe.points)
    verdicts = check_mixture_axioms(qspace, qspace.representatives, relation=qrel)
    assert all(verdicts[name].passed for name in ("M1", "M2", "M3", "M4"))


def test_quotient_rejects_non_independent_relation():
    # appx2's block indifference is not respected by mixing toward the top
    entry = load_entry("appx2")
    with pytest.raises(QuotientError):
        quotient(entry.space, entry.relation, (pt(0), pt(F(1, 4)), pt(1)))


def test_derived_relation_is_anti_symmetric_complete_transitive():
    from prefcheck.axioms import AxiomEngine, Universe

    entry = load_entry("split_hm")
    qspace, qrel = quotient(entry.space, entry.relation, entry.universe.points)
    engine = AxiomEngine(qrel, Universe(qspace.representatives))
    for axiom in ("anti_symmetric", "complete", "transitive", "mixture_continuous"):
        assert engine.verdict(axiom).passed, axiom


def test_real_interval_carrier():
    space = RealInterval(F(0), F(3))
    assert space.contains(pt(3)) and not space.contains(pt(4))
    assert mix(space, pt(3), F(1, 3), pt(0)) == pt(1)

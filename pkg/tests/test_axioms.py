from fractions import Fraction

import pytest

from prefcheck import intervals as iv
from prefcheck.axioms import (
    AxiomEngine,
    AxiomId,
    Universe,
    check_archimedean,
    check_convexity_family,
    check_flimsy,
    check_fragile,
    check_independence,
    check_mixture_continuity,
    check_open_incomparable_sections,
    check_open_strict_sections,
    check_order_axioms,
    check_strong_archimedean,
)
from prefcheck.catalog import ENTRY_IDS, load_entry
from prefcheck.intervals import FULL, OPEN_UNIT, analyze, interval, point, union
from prefcheck.relations import ComparisonOutcome, MultiUtility
from prefcheck.spaces import pt
from prefcheck.verdicts import Status

F = Fraction


def entry_engine(eid):
    entry = load_entry(eid)
    return AxiomEngine(entry.relation, entry.universe)


# ---------------------------------------------------------------------------
# order axioms
# ---------------------------------------------------------------------------


def test_appx1_order_axioms():
    entry = load_entry("appx1")
    verdicts = check_order_axioms(entry.relation, entry.universe)
    assert verdicts["complete"].failed
    w = verdicts["complete"].witness
    assert entry.relation.compare(w["x"], w["y"]) is ComparisonOutcome.INCOMPARABLE
    assert verdicts["transitive"].passed
    assert verdicts["nontrivial"].passed


def test_single_utility_is_total_preorder():
    rel = MultiUtility(((0, 1, 2),))
    verdicts = check_order_axioms(rel, Universe(tuple(rel.space.vertices())))
    for name in ("complete", "transitive", "semi_transitive"):
        assert verdicts[name].passed


def test_pareto_incompleteness_witnessed():
    entry = load_entry("pareto2")
    verdicts = check_order_axioms(entry.relation, entry.universe)
    assert verdicts["complete"].failed
    assert verdicts["transitive"].passed
    assert verdicts["nontrivial"].passed


def test_semi_transitive_is_conjunction_of_halves(entry_engines):
    for engine in entry_engines.values():
        combined = engine.verdict(AxiomId.SEMI_TRANSITIVE)
        up = engine.verdict(AxiomId.SEMI_TRANSITIVE_UP)
        down = engine.verdict(AxiomId.SEMI_TRANSITIVE_DOWN)
        assert combined.passed == (up.passed and down.passed)


# ---------------------------------------------------------------------------
# continuity and interior-weight axioms
# ---------------------------------------------------------------------------


def test_mixture_continuity_verdicts():
    appx1 = load_entry("appx1")
    assert check_mixture_continuity(appx1.relation, appx1.universe).passed

    appx3 = load_entry("appx3")
    verdict = check_mixture_continuity(appx3.relation, appx3.universe)
    assert verdict.failed
    # the weak lower section at (0, 1, 0) is a half-open interval
    sec = appx3.relation.section(pt(0), pt(1), pt(0), "le")
    assert sec == interval(F(1, 2), 1, False, True)
    assert not analyze(sec).is_closed

    eu3 = load_entry("eu3")
    assert check_mixture_continuity(eu3.relation, eu3.universe).passed


def test_archimedean_verdicts():
    appx1 = load_entry("appx1")
    verdict = check_archimedean(appx1.relation, appx1.universe)
    assert verdict.failed
    w = verdict.witness
    assert w["x"] == pt(1) and w["y"] == pt(0)
    # no interior weight keeps the mixture strictly above the bottom
    assert iv.intersect(w["section"], OPEN_UNIT).is_empty()

    eu3 = load_entry("eu3")
    assert check_archimedean(eu3.relation, eu3.universe).passed

    fragile = load_entry("fragile_unit")
    assert check_archimedean(fragile.relation, fragile.universe).failed


def test_strong_archimedean_verdicts():
    appx3 = load_entry("appx3")
    verdict = check_strong_archimedean(appx3.relation, appx3.universe)
    assert verdict.failed
    w = verdict.witness
    assert (w["x"], w["y"], w["z"]) == (pt(F(1, 2)), pt(0), pt(0))
    assert appx3.relation.section(pt(F(1, 2)), pt(0), pt(0), "gt") == point(1)

    appx2 = load_entry("appx2")
    vacuous = check_strong_archimedean(appx2.relation, appx2.universe)
    assert vacuous.passed and "vacuous" in vacuous.note

    eu3 = load_entry("eu3")
    assert check_strong_archimedean(eu3.relation, eu3.universe).passed


def test_pointwise_strong_archimedean_for_quadratic_entry():
    entry = load_entry("appx4_rationals")
    verdict = check_strong_archimedean(entry.relation, entry.universe)
    assert verdict.status is Status.HOLDS
    assert verdict.note == "pointwise witness search"
    assert check_mixture_continuity(entry.relation, entry.universe).status \
        is Status.NOT_APPLICABLE


def test_open_strict_sections_verdicts():
    appx1 = load_entry("appx1")
    assert check_open_strict_sections(appx1.relation, appx1.universe).failed
    assert appx1.relation.section(pt(1), pt(0), pt(0), "gt") == point(1)

    appx2 = load_entry("appx2")   # no strict part at all
    assert check_open_strict_sections(appx2.relation, appx2.universe).passed

    eu3 = load_entry("eu3")
    assert check_open_strict_sections(eu3.relation, eu3.universe).passed


def test_open_incomparable_sections_verdicts():
    appx2 = load_entry("appx2")
    verdict = check_open_incomparable_sections(appx2.relation, appx2.universe)
    assert verdict.failed
    assert appx2.relation.section(pt(1), pt(0), pt(0), "incomparable") \
        == interval(F(1, 2), 1)

    appx3 = load_entry("appx3")   # complete: no incomparability anywhere
    assert check_open_incomparable_sections(appx3.relation, appx3.universe).passed

    appx1 = load_entry("appx1")
    assert check_open_incomparable_sections(appx1.relation, appx1.universe).passed


# ---------------------------------------------------------------------------
# convexity family
# ---------------------------------------------------------------------------


def test_star_convex_but_not_convex():
    entry = load_entry("star_cvx_not_cvx")
    verdicts = check_convexity_family(entry.relation, entry.universe)
    assert verdicts["star_convex"].passed
    convex = verdicts["convex"]
    assert convex.failed
    e1, e2, e3 = pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)
    assert (convex.witness["x"], convex.witness["y"], convex.witness["z"]) \
        == (e1, e3, e2)
    assert convex.witness["lam"] == F(1, 2)


def test_single_utility_convexity_family():
    rel = MultiUtility(((0, 1, 2),))
    verdicts = check_convexity_family(rel, Universe(tuple(rel.space.vertices())))
    for name in ("linear", "convex", "concave"):
        assert verdicts[name].passed


def test_linear_check_requires_lemma_hypotheses():
    # a relation with intransitive indifference gets no linearity verdict
    from prefcheck.relations import CatalogPiecewise, Label, assemble_partition
    from prefcheck.spaces import RealInterval

    def cmp(u, v):
        gap = abs(u.coords[0] - v.coords[0])
        return (ComparisonOutcome.EQUIVALENT if gap <= F(1, 4)
                else ComparisonOutcome.INCOMPARABLE)

    def seg(x, y, z):
        a, b = x.coords[0] - y.coords[0], y.coords[0]
        from prefcheck.relations import affine_ge, affine_le
        near = iv.intersect(affine_ge(a, b, z.coords[0] - F(1, 4)),
                            affine_le(a, b, z.coords[0] + F(1, 4)))
        return assemble_partition({
            Label.INDIFFERENT: near,
            Label.INCOMPARABLE: iv.complement(near),
        })

    rel = CatalogPiecewise("near", RealInterval(F(0), F(1)), cmp, seg)
    verdicts = check_convexity_family(rel, Universe((pt(0), pt(F(1, 2)), pt(1))))
    assert verdicts["linear"].status is Status.NOT_APPLICABLE


# ---------------------------------------------------------------------------
# independence, fragility, flimsiness
# ---------------------------------------------------------------------------


def test_independence_verdicts():
    split = load_entry("split_hm")
    verdict = check_independence(split.relation, split.universe)
    assert verdict.status is Status.SAMPLED

    rel = MultiUtility(((2, 1, 0), (0, 1, 3)))
    analytic = check_independence(rel, Universe(tuple(rel.space.vertices())))
    assert analytic.status is Status.HOLDS

    appx3 = load_entry("appx3")
    broken = check_independence(appx3.relation, appx3.universe)
    assert broken.failed
    w = broken.witness
    mixed_x = appx3.space.mix(w["x"], w["lam"], w["z"])
    mixed_y = appx3.space.mix(w["y"], w["lam"], w["z"])
    same = appx3.relation.compare(w["x"], w["y"]) is ComparisonOutcome.EQUIVALENT
    mixed_same = appx3.relation.compare(mixed_x, mixed_y) is ComparisonOutcome.EQUIVALENT
    assert same != mixed_same


def test_fragile_unit_is_fragile():
    entry = load_entry("fragile_unit")
    verdict = check_fragile(entry.relation, entry.universe)
    assert verdict.status is Status.HOLDS
    # the defining set computation at the sure-thing triple
    part = entry.relation.segment(pt(1), pt(0), pt(0))
    assert part.section("gt") == point(1)
    bowtie = part.section("incomparable")
    assert iv.interior(bowtie) == interval(0, 1, False, False)
    assert iv.closure(iv.interior(bowtie)) == FULL


def test_complete_relations_are_not_fragile_or_flimsy():
    for eid in ("eu3", "appx3", "split_hm"):
        entry = load_entry(eid)
        assert check_fragile(entry.relation, entry.universe).failed
        assert check_flimsy(entry.relation, entry.universe).failed


def test_pareto_is_fragile_with_reverifiable_witness():
    entry = load_entry("pareto2")
    verdict = check_fragile(entry.relation, entry.universe)
    assert verdict.status is Status.HOLDS
    w = verdict.witness
    part = entry.relation.segment(w["x"], w["y"], w["z"])
    strict = iv.union(part.section("gt"), part.section("lt"))
    target = iv.closure(iv.interior(part.section("incomparable")))
    assert w["lam"] in iv.intersect(strict, target)


def test_flimsy_0_3_is_flimsy():
    entry = load_entry("flimsy_0_3")
    verdict = check_flimsy(entry.relation, entry.universe)
    assert verdict.status is Status.HOLDS
    part = entry.relation.segment(pt(3), pt(0), pt(0))
    bowtie = part.section("incomparable")
    assert bowtie == interval(F(1, 3), F(2, 3))
    comparable = iv.union(part.section("ge"), part.section("le"))
    hit = iv.intersect(bowtie, iv.closure(comparable))
    assert hit == union(point(F(1, 3)), point(F(2, 3)))
    assert check_fragile(entry.relation, entry.universe).failed


def test_fragility_matches_shrinking_neighborhood_test(entry_engines):
    """Set form == neighborhood form on ten dyadic neighborhoods."""
    for eid, engine in entry_engines.items():
        verdict = engine.verdict(AxiomId.FRAGILE)
        if verdict.status is not Status.HOLDS:
            continue
        w = verdict.witness
        part = engine.rel.segment(w["x"], w["y"], w["z"])
        bowtie = part.section("incomparable")
        lam = w["lam"]
        for k in range(1, 11):
            eps = F(1, 2 ** k)
            lo = max(iv.ZERO, lam - eps)
            hi = min(iv.ONE, lam + eps)
            nbhd = interval(lo, hi, lo == 0, hi == 1)
            inside = iv.intersect(nbhd, iv.interior(bowtie))
            assert not iv.interior(inside).is_empty() or not inside.is_empty()
            # the open core of the neighborhood meets open incomparability
            assert not iv.intersect(iv.interior(nbhd), iv.interior(bowtie)).is_empty()


# ---------------------------------------------------------------------------
# every failing verdict re-verifies against the defining formula
# ---------------------------------------------------------------------------


def _reverify(engine, name, verdict):
    w = verdict.witness
    rel, space = engine.rel, engine.space
    weak = engine.weak
    strict = engine.strict
    equiv = engine.equiv
    if name == "reflexive":
        return not equiv(w["x"], w["x"])
    if name == "complete":
        return engine.incomparable(w["x"], w["y"])
    if name == "transitive":
        return weak(w["x"], w["y"]) and weak(w["y"], w["z"]) and not weak(w["x"], w["z"])
    if name == "negatively_transitive":
        return (not weak(w["x"], w["y"]) and not weak(w["y"], w["z"])
                and weak(w["x"], w["z"]))
    if name in ("semi_transitive", "semi_transitive_down"):
        down = (strict(w["x"], w["y"]) and equiv(w["y"], w["z"])
                and not strict(w["x"], w["z"]))
        if name == "semi_transitive_down":
            return down
        up = (equiv(w["x"], w["y"]) and strict(w["y"], w["z"])
              and not strict(w["x"], w["z"]))
        return down or up
    if name == "semi_transitive_up":
        return (equiv(w["x"], w["y"]) and strict(w["y"], w["z"])
                and not strict(w["x"], w["z"]))
    if name == "transitive_sym":
        return equiv(w["x"], w["y"]) and equiv(w["y"], w["z"]) and not equiv(w["x"], w["z"])
    if name == "transitive_strict":
        return strict(w["x"], w["y"]) and strict(w["y"], w["z"]) and not strict(w["x"], w["z"])
    if name == "anti_symmetric":
        return w["x"] != w["y"] and equiv(w["x"], w["y"])
    if name == "mixture_continuous":
        sec = rel.section(w["x"], w["y"], w["z"], w["which"])
        return not analyze(sec).is_closed
    if name == "open_strict_sections":
        sec = rel.section(w["x"], w["y"], w["z"], w["which"])
        return not analyze(sec).is_open
    if name == "open_incomparable_sections":
        sec = rel.section(w["x"], w["y"], w["z"], "incomparable")
        return not analyze(sec).is_open
    if name == "archimedean":
        if "z" in w:
            return (strict(w["x"], w["y"])
                    and engine.incomparable(w["y"], w["z"])
                    and iv.intersect(rel.section(w["x"], w["z"], w["y"], "gt"),
                                     OPEN_UNIT).is_empty())
        return (strict(w["x"], w["y"])
                and engine.incomparable(w["x"], w["w"])
                and iv.intersect(rel.section(w["y"], w["w"], w["x"], "lt"),
                                 OPEN_UNIT).is_empty())
    if name == "strong_archimedean":
        above = iv.intersect(rel.section(w["x"], w["z"], w["y"], "gt"), OPEN_UNIT)
        below = iv.intersect(rel.section(w["y"], w["z"], w["x"], "lt"), OPEN_UNIT)
        return strict(w["x"], w["y"]) and (above.is_empty() or below.is_empty())
    if name == "convex":
        return (weak(w["x"], w["z"]) and weak(w["y"], w["z"])
                and w["lam"] not in rel.section(w["x"], w["y"], w["z"], "ge"))
    if name == "concave":
        return (weak(w["z"], w["x"]) and weak(w["z"], w["y"])
                and w["lam"] not in rel.section(w["x"], w["y"], w["z"], "le"))
    if name == "star_convex":
        return (w["x"] != w["y"] and weak(w["x"], w["y"])
                and w["lam"] not in rel.section(w["x"], w["y"], w["y"], "gt"))
    if name == "star_concave":
        return (w["x"] != w["y"] and weak(w["y"], w["x"])
                and w["lam"] not in rel.section(w["x"], w["y"], w["y"], "lt"))
    if name == "linear":
        return not analyze(rel.section(w["x"], w["y"], w["z"], "eq")).is_convex
    if name == "independent":
        mixed_x = space.mix(w["x"], w["lam"], w["z"])
        mixed_y = space.mix(w["y"], w["lam"], w["z"])
        return equiv(w["x"], w["y"]) != (
            rel.compare(mixed_x, mixed_y) is ComparisonOutcome.EQUIVALENT
        )
    if name == "fragile":
        part = rel.segment(w["x"], w["y"], w["z"])
        strict_set = iv.union(part.section("gt"), part.section("lt"))
        target = iv.closure(iv.interior(part.section("incomparable")))
        return w["lam"] in iv.intersect(strict_set, target)
    if name == "flimsy":
        part = rel.segment(w["x"], w["y"], w["z"])
        comparable = iv.union(part.section("ge"), part.section("le"))
        return w["lam"] in iv.intersect(part.section("incomparable"),
                                        iv.closure(comparable))
    raise AssertionError(f"no reverifier for {name}")


def test_every_witnessed_verdict_reverifies(entry_engines):
    checked = 0
    for eid, engine in entry_engines.items():
        for name, verdict in engine.all_verdicts().items():
            if verdict.witness is None:
                continue
            if verdict.status is Status.HOLDS and name not in ("fragile", "flimsy"):
                continue  # existential holds (nontrivial) checked elsewhere
            assert _reverify(engine, name, verdict), (eid, name, verdict)
            checked += 1
    assert checked > 25

"""Distance spaces, Vietoris-Rips construction, gluings, and the metric
hypotheses as decidable predicates."""

from fractions import Fraction
from itertools import combinations

import pytest

from ripsdecomp import (
    DistanceSpace,
    GluingMismatch,
    InvalidInput,
    MetricCover,
    check_cross_domination,
    check_shared_witness,
    check_simplex_assumption,
    check_strong_simplex_assumption,
    diam,
    glue,
    is_metric_gluing,
    is_pseudometric,
    validate,
    vietoris_rips,
)
from ripsdecomp.corpus import case_by_name, space_for

from conftest import label_simplices, random_pseudometric, rng_for


def mc_for(name, r=None):
    case = case_by_name(name)
    space = space_for(case)
    return MetricCover(space, case.x, case.y, case.r if r is None else r)


class TestValidate:
    def test_nine_point_table_ok(self):
        assert validate(space_for(case_by_name("nine-pt-circle"))) == []

    def test_symmetry_violation_located(self):
        space = DistanceSpace(["1", "2"], [[0, 1], [2, 0]])
        assert validate(space) == [(0, 1)]

    def test_reflexivity_violation_located(self):
        space = DistanceSpace(["1", "2"], [["1/2", 1], [1, 0]])
        assert validate(space) == [(0, 0)]

    def test_non_square_rejected(self):
        with pytest.raises(InvalidInput):
            DistanceSpace(["1", "2"], [[0, 1]])

    def test_negative_rejected(self):
        with pytest.raises(InvalidInput):
            DistanceSpace(["1", "2"], [[0, -1], [-1, 0]])


class TestPseudometric:
    def test_eight_point_table_is_metric(self):
        assert is_pseudometric(space_for(case_by_name("eight-pt-s3"))) is None

    def test_witness_triple(self):
        space = DistanceSpace(
            ["x", "y", "z"], [[0, 1, 3], [1, 0, 1], [3, 1, 0]]
        )
        assert is_pseudometric(space) == ("x", "y", "z")

    def test_glue_outputs_are_pseudometrics(self):
        rng = rng_for(201)
        for _ in range(20):
            shared = ["s0", "s1"]
            dx = random_pseudometric(rng, shared + ["p0", "p1"])
            dy_raw = random_pseudometric(rng, shared + ["q0"])
            # force agreement on the shared block
            matrix = [list(row) for row in dy_raw.matrix]
            for i, a in enumerate(shared):
                for j, b in enumerate(shared):
                    matrix[i][j] = dx.d_label(a, b)
            dy = DistanceSpace(dy_raw.labels, matrix)
            if is_pseudometric(dy) is not None:
                continue
            glued = glue(dx, dy, shared)
            assert is_pseudometric(glued) is None


class TestDiam:
    def test_singleton(self):
        space = space_for(case_by_name("nine-pt-circle"))
        assert diam(space, ["z3"]) == 0

    def test_inscribed_triangle(self):
        space = space_for(case_by_name("nine-pt-circle"))
        assert diam(space, ["z1", "z4", "z7"]) == 3

    def test_matches_pairwise_scan(self):
        rng = rng_for(202)
        space = random_pseudometric(rng, [f"p{i}" for i in range(7)])
        for _ in range(20):
            pts = rng.sample(space.labels, rng.randint(1, 7))
            brute = max(
                (space.d_label(a, b) for a, b in combinations(pts, 2)),
                default=Fraction(0),
            )
            assert diam(space, pts) == brute

    def test_empty_rejected(self):
        with pytest.raises(InvalidInput):
            diam(space_for(case_by_name("nine-pt-circle")), [])


class TestVietorisRips:
    def test_below_minimum_distance_is_discrete(self):
        space = space_for(case_by_name("nine-pt-circle"))
        k = vietoris_rips(space, "1/2", 2)
        assert len(k.simplices()) == 9

    def test_nine_point_profile(self):
        from ripsdecomp import homology

        space = space_for(case_by_name("nine-pt-circle"))
        k = vietoris_rips(space, 3, 4)
        assert homology(k, "q", max_deg=4).betti_vector(0, 4) == (0, 0, 2, 0, 0)

    def test_threshold_monotone(self):
        space = space_for(case_by_name("nine-pt-circle"))
        small = set(vietoris_rips(space, 1, 1).edges())
        large = set(vietoris_rips(space, 2, 1).edges())
        assert small <= large

    def test_restriction_identity(self):
        rng = rng_for(203)
        for name in ("nine-pt-circle", "eight-pt-s3", "six-pt-entry"):
            case = case_by_name(name)
            space = space_for(case)
            k = vietoris_rips(space, case.r, 3)
            subset = rng.sample(space.labels, rng.randint(1, len(space.labels)))
            restricted = k.restrict({space.index(p) for p in subset})
            direct = vietoris_rips(space.subspace(subset), case.r, 3)
            assert label_simplices(restricted) == label_simplices(direct)


class TestGlue:
    def test_one_side_contained_degenerates(self):
        rng = rng_for(204)
        dx = random_pseudometric(rng, ["a", "b", "c", "d"])
        dy = dx.subspace(["b", "c"])
        glued = glue(dx, dy, ["b", "c"])
        assert glued.labels == dx.labels
        assert glued.matrix == dx.matrix

    def test_eight_point_halves_reproduce_cross_distances(self):
        case = case_by_name("eight-pt-s3")
        space = space_for(case)
        shared = ["a11", "a12", "a21", "a22"]
        dx = space.subspace(["x1", "x2"] + shared)
        dy = space.subspace(shared + ["y1", "y2"])
        glued = glue(dx, dy, shared)
        for p in space.labels:
            for q in space.labels:
                assert glued.d_label(p, q) == space.d_label(p, q)

    def test_disagreement_rejected(self):
        dx = DistanceSpace(["a", "x"], [[0, 1], [1, 0]])
        dy = DistanceSpace(["a", "y"], [[0, 2], [2, 0]])
        glue(dx, dy, ["a"])  # fine: "a" alone carries no distances
        dx2 = DistanceSpace(["a", "b", "x"], [[0, 1, 1], [1, 0, 1], [1, 1, 0]])
        dy2 = DistanceSpace(["a", "b", "y"], [[0, 2, 1], [2, 0, 1], [1, 1, 0]])
        with pytest.raises(GluingMismatch):
            glue(dx2, dy2, ["a", "b"])

    def test_empty_shared_part_warns_and_gives_infinite(self):
        dx = DistanceSpace(["x"], [[0]])
        dy = DistanceSpace(["y"], [[0]])
        with pytest.warns(UserWarning):
            glued = glue(dx, dy, [])
        assert glued.d_label("x", "y") == float("inf")

    def test_output_is_metric_gluing(self):
        rng = rng_for(205)
        for _ in range(15):
            shared = ["s0", "s1"]
            dx = random_pseudometric(rng, shared + ["p0", "p1"])
            dy = DistanceSpace(
                dx.subspace(shared).labels + ("q0",),
                [
                    [dx.d_label("s0", "s0"), dx.d_label("s0", "s1"), 2],
                    [dx.d_label("s1", "s0"), dx.d_label("s1", "s1"), 3],
                    [2, 3, 0],
                ],
            )
            if is_pseudometric(dy) is not None:
                continue
            glued = glue(dx, dy, shared)
            assert is_metric_gluing(glued, dx.labels, dy.labels) is None


class TestIsMetricGluing:
    def test_eight_point_table(self):
        case = case_by_name("eight-pt-s3")
        assert is_metric_gluing(space_for(case), case.x, case.y) is None

    def test_shortcut_not_through_intersection(self):
        # four points, the cross pair cheaper than any detour
        space = DistanceSpace(
            ["p", "a", "b", "q"],
            [
                [0, 1, 1, "141/100"],
                [1, 0, "141/100", 1],
                [1, "141/100", 0, 1],
                ["141/100", 1, 1, 0],
            ],
        )
        assert is_pseudometric(space) is None
        assert is_metric_gluing(space, ["p", "a", "b"], ["a", "b", "q"]) == ("p", "q")


class TestSharedWitness:
    def test_square_holds_with_first_point(self):
        res = check_shared_witness(mc_for("square-4pt"))
        assert res.ok and res.witness == "a"

    def test_empty_intersection_fails(self):
        space = DistanceSpace(["x", "y"], [[0, 1], [1, 0]])
        res = check_shared_witness(MetricCover(space, ["x"], ["y"], 1))
        assert not res.ok

    def test_vacuous_when_no_close_cross_pairs(self):
        space = DistanceSpace(
            ["x", "a", "y"], [[0, 1, 5], [1, 0, 1], [5, 1, 0]]
        )
        res = check_shared_witness(MetricCover(space, ["x", "a"], ["a", "y"], 1))
        assert res.ok and res.witness == "a"


class TestCrossDomination:
    def test_collinear_midpoint_holds(self):
        space = DistanceSpace(
            ["x", "v", "y"], [[0, 1, 2], [1, 0, 1], [2, 1, 0]]
        )
        assert check_cross_domination(MetricCover(space, ["x", "v"], ["v", "y"], 1)).ok

    def test_far_witness_point(self):
        space = DistanceSpace(
            ["x", "v", "y"], [[0, 2, 1], [2, 0, 1], [1, 1, 0]]
        )
        res = check_cross_domination(MetricCover(space, ["x", "v"], ["v", "y"], 1))
        assert not res.ok and res.witness == ("x", "y", "v")

    def test_empty_intersection_fails_with_reason(self):
        space = DistanceSpace(["x", "y"], [[0, 1], [1, 0]])
        res = check_cross_domination(MetricCover(space, ["x"], ["y"], 1))
        assert not res.ok and res.note

    def test_singleton_domination_implies_shared_witness(self):
        rng = rng_for(206)
        found = 0
        for _ in range(40):
            labels = ["v"] + [f"x{i}" for i in range(2)] + [f"y{i}" for i in range(2)]
            space = random_pseudometric(rng, labels)
            mc = MetricCover(
                space, ["v", "x0", "x1"], ["v", "y0", "y1"],
                rng.randint(1, 8),
            )
            if check_cross_domination(mc).ok:
                found += 1
                assert check_shared_witness(mc).ok
        assert found > 0


class TestSimplexAssumptions:
    def test_eight_point_both_hold(self):
        mc = mc_for("eight-pt-s3")
        assert check_simplex_assumption(mc).ok
        assert check_strong_simplex_assumption(mc).ok

    def test_five_point_simplex_holds_strong_fails(self):
        mc = mc_for("five-pt-gluing")
        assert check_simplex_assumption(mc).ok
        strong = check_strong_simplex_assumption(mc)
        assert not strong.ok
        assert strong.witness == ("y", "a1", "a2")

    def test_far_apart_intersection_witness(self):
        # both intersection points sit within r of the cross edge's ends but
        # lie 2r apart from each other
        space = DistanceSpace(
            ["x", "a", "b", "y"],
            [
                [0, 1, 1, 1],
                [1, 0, 2, 1],
                [1, 2, 0, 1],
                [1, 1, 1, 0],
            ],
        )
        mc = MetricCover(space, ["x", "a", "b"], ["a", "b", "y"], 1)
        res = check_simplex_assumption(mc)
        assert not res.ok and res.witness == ("x", "a", "b")

    def test_strong_arithmetic_witness(self):
        space = DistanceSpace(
            ["x", "a", "b", "y"],
            [
                [0, "1/2", "1/2", 1],
                ["1/2", 0, 1, "1/2"],
                ["1/2", 1, 0, "1/2"],
                [1, "1/2", "1/2", 0],
            ],
        )
        mc = MetricCover(space, ["x", "a", "b"], ["a", "b", "y"], 1)
        assert check_simplex_assumption(mc).ok
        res = check_strong_simplex_assumption(mc)
        assert not res.ok and res.witness == ("x", "a", "b")

    def test_strong_implies_simplex_on_random_instances(self):
        rng = rng_for(207)
        strong_hits = 0
        for _ in range(60):
            labels = [f"x{i}" for i in range(2)] + ["a0", "a1"] + [f"y{i}" for i in range(2)]
            space = random_pseudometric(rng, labels, max_whole=4)
            mc = MetricCover(
                space,
                ["x0", "x1", "a0", "a1"],
                ["a0", "a1", "y0", "y1"],
                rng.randint(2, 6),
            )
            if check_strong_simplex_assumption(mc).ok:
                strong_hits += 1
                assert check_simplex_assumption(mc).ok
        assert strong_hits > 0

    def test_simplex_assumption_matches_standard_simplex_stars(self):
        # equivalent form: the obstruction of every cross-edge vertex over the
        # intersection is a standard simplex
        for name in ("eight-pt-s3", "five-pt-gluing", "square-4pt"):
            case = case_by_name(name)
            space = space_for(case)
            mc = MetricCover(space, case.x, case.y, case.r)
            k = vietoris_rips(space, case.r, 4)
            a = {space.index(p) for p in set(case.x) & set(case.y)}
            verdict = check_simplex_assumption(mc).ok
            stars_standard = True
            for i, j in mc.cross_pairs_within():
                for v in (i, j):
                    obs = k.obstruction((v,), a)
                    verts = tuple(obs.vertices)
                    if verts and verts not in obs:
                        stars_standard = False
            assert verdict == stars_standard


class TestCoverValidation:
    def test_cover_must_use_every_point(self):
        space = DistanceSpace(
            ["x", "a", "y"], [[0, 1, 2], [1, 0, 1], [2, 1, 0]]
        )
        from ripsdecomp import CoverError

        with pytest.raises(CoverError):
            MetricCover(space, ["x"], ["y"], 1)

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import concept_at, world_from_dist, worlds
from intension.errors import (
    EmptyTable,
    InvalidConcept,
    InvalidDegree,
    InvalidOverlap,
    InvalidProperty,
    UniverseTooLarge,
    UnknownProperty,
)
from intension.model import (
    Concept,
    InstanceTable,
    WorldModel,
    build_exclusive_world,
    build_independent_world,
    concept_event_probability,
    degree_mismatches,
    joint_event_probability,
    world_from_instances,
)

TOL = 1e-12


class TestConcept:
    def test_holds_pairs(self):
        c = Concept("bird", (("beak", 1.0), ("flies", 0.9)))
        assert c.ids == ("beak", "flies")
        assert c.degree("flies") == 0.9

    def test_rejects_empty(self):
        with pytest.raises(InvalidConcept):
            Concept("empty", ())

    def test_rejects_duplicates(self):
        with pytest.raises(InvalidConcept):
            Concept("dup", (("a", 0.5), ("a", 0.7)))

    @pytest.mark.parametrize("degree", [-0.1, 1.1, float("nan")])
    def test_rejects_bad_degree(self, degree):
        with pytest.raises(InvalidDegree):
            Concept("bad", (("a", degree),))

    @pytest.mark.parametrize("pid", ["", "two words", "tab\tid", 7])
    def test_rejects_bad_id(self, pid):
        with pytest.raises(InvalidProperty):
            Concept("bad", ((pid, 0.5),))


class TestBuildIndependentWorld:
    def test_degenerate_certainty(self):
        world = build_independent_world(["a"], [1.0])
        assert world.probs[1] == 1.0
        assert world.probs[0] == 0.0

    def test_uniform_product(self):
        world = build_independent_world(["a", "b"], [0.5, 0.5])
        assert np.allclose(world.probs, 0.25, atol=TOL)

    def test_three_marginals_product(self):
        world = build_independent_world(["a", "b", "c"], [0.2, 0.5, 0.9])
        # mask for a=0, b=1, c=1 is bits 1 and 2
        assert world.probs[0b110] == pytest.approx(0.8 * 0.5 * 0.9, abs=TOL)
        assert float(world.probs.sum()) == pytest.approx(1.0, abs=TOL)

    def test_cap(self):
        with pytest.raises(UniverseTooLarge):
            build_independent_world([f"v{i}" for i in range(25)], [0.5] * 25)

    def test_bad_marginal(self):
        with pytest.raises(InvalidDegree):
            build_independent_world(["a"], [1.2])

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            build_independent_world(["a", "b"], [0.5])

    @given(st.lists(st.floats(0.0, 1.0, allow_nan=False), min_size=1, max_size=6))
    def test_marginals_recovered(self, marginals):
        universe = tuple(f"v{i}" for i in range(len(marginals)))
        world = build_independent_world(universe, marginals)
        for pid, mu in zip(universe, marginals):
            assert world.marginal(pid) == pytest.approx(mu, abs=TOL)
            single = Concept("c", ((pid, mu),))
            assert concept_event_probability(single, world) == pytest.approx(mu, abs=TOL)


class TestBuildExclusiveWorld:
    def test_total_overlap_degenerate(self):
        world, f, w = build_exclusive_world(1, 1, 1)
        assert world.universe == ("p1",)
        assert world.probs[1] == 1.0
        assert f.properties == w.properties

    def test_counts_4_3_2(self):
        world, f, w = build_exclusive_world(4, 3, 2)
        assert len(world.universe) == 5
        assert concept_event_probability(f, world) == pytest.approx(0.8, abs=TOL)
        assert concept_event_probability(w, world) == pytest.approx(0.6, abs=TOL)
        assert joint_event_probability(f, w, world) == pytest.approx(0.4, abs=TOL)

    def test_disjoint(self):
        world, f, w = build_exclusive_world(2, 2, 0)
        assert len(world.universe) == 4
        assert joint_event_probability(f, w, world) == 0.0

    def test_share_counts_exhaustive(self):
        # P(F) = n/s, P(W) = m/s, P(F and W) = k/s across the full grid
        for n in range(1, 9):
            for m in range(1, 9):
                for k in range(1, min(n, m) + 1):
                    world, f, w = build_exclusive_world(n, m, k)
                    s = n + m - k
                    assert concept_event_probability(f, world) == pytest.approx(n / s, abs=TOL)
                    assert concept_event_probability(w, world) == pytest.approx(m / s, abs=TOL)
                    assert joint_event_probability(f, w, world) == pytest.approx(k / s, abs=TOL)
                    for pid in world.universe:
                        assert world.marginal(pid) == pytest.approx(1 / s, abs=TOL)

    def test_bad_overlap(self):
        with pytest.raises(InvalidOverlap):
            build_exclusive_world(4, 3, 4)

    def test_cap(self):
        with pytest.raises(UniverseTooLarge):
            build_exclusive_world(20, 10, 1)

    def test_bad_counts(self):
        with pytest.raises(ValueError):
            build_exclusive_world(0, 1, 0)


class TestWorldFromInstances:
    def test_two_equal_rows(self):
        table = InstanceTable(("a", "b"), ((0b01, 1.0), (0b10, 1.0)))
        world = world_from_instances(table)
        assert world.probs[0b01] == 0.5
        assert world.probs[0b10] == 0.5

    def test_weight_normalization(self):
        table = InstanceTable(("a",), ((1, 3.0), (0, 1.0)))
        world = world_from_instances(table)
        assert world.probs[1] == pytest.approx(0.75, abs=TOL)

    def test_single_row(self):
        world = world_from_instances(InstanceTable(("a", "b"), ((0b11, 2.0),)))
        assert world.probs[0b11] == 1.0

    def test_zero_total_weight(self):
        with pytest.raises(EmptyTable):
            InstanceTable(("a",), ((1, 0.0),))

    def test_duplicate_masks_accumulate(self):
        table = InstanceTable(("a",), ((1, 1.0), (1, 1.0), (0, 2.0)))
        world = world_from_instances(table)
        assert world.probs[1] == pytest.approx(0.5, abs=TOL)

    def test_reserialization_idempotent(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            size = int(rng.integers(1, 5))
            n_rows = int(rng.integers(1, 8))
            rows = tuple(
                (int(rng.integers(0, 1 << size)), float(rng.random()) + 0.01)
                for _ in range(n_rows)
            )
            universe = tuple(f"v{i}" for i in range(size))
            world = world_from_instances(InstanceTable(universe, rows))
            again = world_from_instances(
                InstanceTable(universe, tuple((m, float(p)) for m, p in enumerate(world.probs) if p > 0))
            )
            assert np.allclose(world.probs, again.probs, atol=TOL)


class TestWorldModel:
    def test_weights_sum_to_one(self):
        world = WorldModel.from_weights(("a", "b"), [1.0, 2.0, 3.0, 4.0])
        assert float(world.probs.sum()) == pytest.approx(1.0, abs=TOL)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            WorldModel.from_weights(("a",), [-1.0, 2.0])

    def test_rejects_nonfinite(self):
        with pytest.raises(ValueError):
            WorldModel.from_weights(("a",), [float("inf"), 1.0])

    def test_rejects_wrong_length(self):
        with pytest.raises(ValueError):
            WorldModel.from_weights(("a", "b"), [0.5, 0.5])

    def test_rejects_duplicate_universe(self):
        with pytest.raises(InvalidProperty):
            WorldModel.from_weights(("a", "a"), [0.25] * 4)

    def test_cap_checked_before_table(self):
        with pytest.raises(UniverseTooLarge):
            WorldModel.from_weights(tuple(f"v{i}" for i in range(25)), [1.0])

    def test_probs_frozen(self):
        world = WorldModel.from_weights(("a",), [0.5, 0.5])
        with pytest.raises(ValueError):
            world.probs[0] = 1.0

    def test_unknown_property(self):
        world = WorldModel.from_weights(("a",), [0.5, 0.5])
        with pytest.raises(UnknownProperty):
            world.marginal("zzz")

    def test_marginal_table_rejects_duplicates(self):
        world = WorldModel.from_weights(("a", "b"), [0.25] * 4)
        with pytest.raises(ValueError):
            world.marginal_table(["a", "a"])

    @given(worlds(max_vars=5))
    @settings(max_examples=50)
    def test_constructed_worlds_normalized(self, world):
        assert float(world.probs.sum()) == pytest.approx(1.0, abs=TOL)


class TestConceptEventProbability:
    def test_exclusive_formula(self):
        world, f, _ = build_exclusive_world(4, 3, 2)
        assert concept_event_probability(f, world) == pytest.approx(0.8, abs=TOL)

    def test_full_universe_complement(self):
        dist = {(0, 0): 0.1, (0, 1): 0.2, (1, 0): 0.3, (1, 1): 0.4}
        world = world_from_dist(("a", "b"), dist)
        whole = concept_at(world, "all", ("a", "b"))
        assert concept_event_probability(whole, world) == pytest.approx(1.0 - 0.1, abs=TOL)

    def test_independent_pair_union(self):
        world = build_independent_world(["a", "b"], [0.5, 0.5])
        c = concept_at(world, "ab", ("a", "b"))
        assert concept_event_probability(c, world) == pytest.approx(0.75, abs=TOL)

    def test_unknown_property(self):
        world = build_independent_world(["a"], [0.5])
        with pytest.raises(UnknownProperty):
            concept_event_probability(Concept("c", (("zzz", 0.5),)), world)


class TestDegreeMismatches:
    def test_silent_when_close(self):
        world = build_independent_world(["a"], [0.5])
        assert degree_mismatches(Concept("c", (("a", 0.5),)), world) == []

    def test_reports_disagreement(self):
        world = build_independent_world(["a"], [0.9])
        messages = degree_mismatches(Concept("c", (("a", 0.5),)), world)
        assert len(messages) == 1
        assert "a" in messages[0] and "0.5" in messages[0] and "0.9" in messages[0]

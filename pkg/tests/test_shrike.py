import math

import numpy as np
import pytest

from shoa.core import (
    Bird,
    Bounds,
    EvalCounter,
    Nest,
    Problem,
    RngStream,
    Role,
    RunConfig,
)
from shoa.shrike import (
    FeedMode,
    candidate_position,
    explore,
    feed_factor,
    feed_vector,
    generate_nestlings,
    regenerate_nest,
    run,
    step,
)
from conftest import ScriptedRng


def sphere_problem(half=100.0, dim=2):
    return Problem(
        "sphere", dim, Bounds.symmetric(half, dim),
        objective=lambda x: float(np.sum(x * x)),
    )


def make_bird(pos, fitness, role=Role.NESTLING):
    return Bird(np.asarray(pos, dtype=float), fitness, role)


def two_parent_nest(male_pos, male_fit, female_pos, female_fit):
    male = make_bird(male_pos, male_fit, Role.MALE_PARENT)
    female = make_bird(female_pos, female_fit, Role.FEMALE_PARENT)
    return Nest([male, female])


class TestFeedFactor:
    def test_start_of_run_is_one(self):
        for i in (1, 3, 10):
            assert feed_factor(i, 10, 0, 500) == 1.0

    def test_end_of_run_last_dimension(self):
        assert feed_factor(10, 10, 500, 500) == pytest.approx(math.exp(-2), abs=1e-12)

    def test_midpoint(self):
        assert feed_factor(10, 10, 250, 500) == pytest.approx(math.exp(-1), abs=1e-12)

    def test_bounded_and_monotone(self):
        lo, hi = math.exp(-2), 1.0
        for i in (1, 5, 10):
            prev = hi + 1
            for t in range(0, 501, 25):
                r = feed_factor(i, 10, t, 500)
                assert lo - 1e-12 <= r <= hi
                assert r <= prev + 1e-15
                prev = r

    def test_vector_matches_scalar(self):
        vec = feed_vector(10, 123, 500)
        for i in range(1, 11):
            assert vec[i - 1] == pytest.approx(feed_factor(i, 10, 123, 500), rel=1e-15)


class TestGenerateNestlings:
    def test_zero_dither_gives_reflection(self):
        nest = two_parent_nest([1.0, 2.0], 5.0, [3.0, 1.0], 10.0)
        problem = sphere_problem()
        rng = ScriptedRng([np.zeros(2)])
        generate_nestlings(nest, 1, problem, EvalCounter(), rng)
        # nestling = 2*female - male
        assert np.allclose(nest.birds[2].position, [5.0, 0.0])
        assert nest.birds[2].role == Role.NESTLING

    def test_equal_parents_box(self):
        problem = sphere_problem()
        nest = two_parent_nest([4.0, -4.0], 32.0, [4.0, -4.0], 32.0)
        generate_nestlings(nest, 20, problem, EvalCounter(), RngStream(5))
        for bird in nest.birds[2:]:
            assert np.all(np.abs(bird.position - np.array([4.0, -4.0])) <= 1.0)

    def test_default_clutch_grows_to_nine(self):
        nest = two_parent_nest([0.0, 0.0], 0.0, [1.0, 1.0], 2.0)
        generate_nestlings(nest, 7, sphere_problem(), EvalCounter(), RngStream(1))
        assert len(nest.birds) == 9
        assert nest.birds[0].role == Role.MALE_PARENT
        assert nest.birds[1].role == Role.FEMALE_PARENT

    def test_parents_unchanged_and_evaluations_counted(self):
        nest = two_parent_nest([0.0, 0.0], 0.0, [1.0, 1.0], 2.0)
        counter = EvalCounter()
        generate_nestlings(nest, 7, sphere_problem(), counter, RngStream(1))
        assert counter.count == 7
        assert np.array_equal(nest.birds[0].position, [0.0, 0.0])
        assert nest.birds[1].fitness == 2.0


class TestCandidatePosition:
    def setup_method(self):
        self.problem = sphere_problem()
        self.cfg = RunConfig(seed=0)

    def test_male_mode_with_bird_at_male_doubles(self):
        bird = make_bird([3.0, -4.0], 25.0)
        male = make_bird([3.0, -4.0], 25.0, Role.MALE_PARENT)
        female = make_bird([0.0, 0.0], 0.0, Role.FEMALE_PARENT)
        cand = candidate_position(
            bird, FeedMode.MALE, male, female, t=0, cfg=self.cfg,
            rng=ScriptedRng([]), problem=self.problem,
        )
        assert np.allclose(cand, [6.0, -8.0])

    def test_self_mode_at_start_doubles(self):
        bird = make_bird([2.0, 5.0], 29.0, Role.MALE_PARENT)
        cand = candidate_position(
            bird, FeedMode.SELF, bird, bird, t=0, cfg=self.cfg,
            rng=ScriptedRng([]), problem=self.problem,
        )
        assert np.allclose(cand, [4.0, 10.0])

    def test_self_mode_clamps(self):
        bird = make_bird([90.0, 90.0], 0.0, Role.MALE_PARENT)
        cand = candidate_position(
            bird, FeedMode.SELF, bird, bird, t=0, cfg=self.cfg,
            rng=ScriptedRng([]), problem=self.problem,
        )
        assert np.allclose(cand, [100.0, 100.0])

    def test_female_mode_zero_draw_zero_alpha_fixed_point(self):
        cfg = RunConfig(alpha_const=0.0, seed=0)
        bird = make_bird([1.0, 2.0], 5.0)
        female = make_bird([9.0, 9.0], 1.0, Role.FEMALE_PARENT)
        cand = candidate_position(
            bird, FeedMode.FEMALE, female, female, t=10, cfg=cfg,
            rng=ScriptedRng([np.zeros(2)]), problem=self.problem,
        )
        assert np.allclose(cand, [1.0, 2.0])

    def test_female_mode_adds_sine_to_every_coordinate(self):
        cfg = RunConfig(alpha_const=1.0, seed=0)
        bird = make_bird([1.0, 2.0], 5.0)
        female = make_bird([1.0, 2.0], 1.0, Role.FEMALE_PARENT)
        cand = candidate_position(
            bird, FeedMode.FEMALE, female, female, t=10, cfg=cfg,
            rng=ScriptedRng([np.zeros(2)]), problem=self.problem,
        )
        assert np.allclose(cand, np.array([1.0, 2.0]) + math.sin(1.0))


class TestExplore:
    def test_zero_perturbation_keeps_position(self):
        problem = sphere_problem()
        bird = make_bird([1.0, 1.0], 2.0)
        counter = EvalCounter()
        explore(bird, problem, counter, ScriptedRng([np.zeros(2), 0.0]))
        assert np.allclose(bird.position, [1.0, 1.0])
        assert counter.count == 1

    def test_improving_jump_is_kept(self):
        # objective minimized at the all-ones point, bird at the origin
        problem = Problem(
            "shifted", 2, Bounds.symmetric(100.0, 2),
            objective=lambda x: float(np.sum((x - 1.0) ** 2)),
        )
        bird = make_bird([0.0, 0.0], 2.0)
        # r=0 and sin(alpha)=1 moves the bird to the all-ones point
        explore(bird, problem, EvalCounter(), ScriptedRng([np.zeros(2), math.pi / 2]))
        assert np.allclose(bird.position, [1.0, 1.0])
        assert bird.fitness == 0.0

    def test_worsening_jump_is_rejected(self):
        # deviation from the unconditional-acceptance reading: only
        # strict improvements survive any move, exploration included
        problem = sphere_problem()
        bird = make_bird([0.0, 0.0], 0.0)
        explore(bird, problem, EvalCounter(), ScriptedRng([np.zeros(2), math.pi / 2]))
        assert np.allclose(bird.position, [0.0, 0.0])
        assert bird.fitness == 0.0


class TestRegenerateNest:
    def setup_method(self):
        self.problem = sphere_problem()
        self.cfg = RunConfig(seed=0, nestlings=7)

    def test_best_two_survive_and_breed(self):
        birds = [make_bird([float(i), 0.0], float(i)) for i in range(9)]
        birds[0].role = Role.MALE_PARENT
        birds[1].role = Role.FEMALE_PARENT
        nest = Nest(birds)
        regenerate_nest(nest, self.cfg, self.problem, EvalCounter(), RngStream(0))
        assert len(nest.birds) == 9
        assert nest.birds[0].fitness == 0.0 and nest.birds[0].role == Role.MALE_PARENT
        assert nest.birds[1].fitness == 1.0 and nest.birds[1].role == Role.FEMALE_PARENT

    def test_two_bird_nest_swaps_roles_by_fitness(self):
        nest = two_parent_nest([5.0, 0.0], 25.0, [1.0, 0.0], 1.0)
        regenerate_nest(nest, self.cfg, self.problem, EvalCounter(), RngStream(0))
        male, female = nest.parents()
        assert male.fitness <= female.fitness
        assert np.allclose(male.position, [1.0, 0.0])

    def test_equal_fitness_keeps_first_two_by_index(self):
        birds = [make_bird([1.0, 0.0], 7.0) for _ in range(9)]
        tags = [bird.position for bird in birds]
        birds[0].role = Role.MALE_PARENT
        birds[1].role = Role.FEMALE_PARENT
        nest = Nest(birds)
        regenerate_nest(nest, self.cfg, self.problem, EvalCounter(), RngStream(0))
        assert nest.birds[0].position is tags[0]
        assert nest.birds[1].position is tags[1]

    def test_nest_record_competes_for_a_parent_slot(self):
        # the remembered best re-enters when strictly better than the
        # live birds, so discoveries survive regeneration
        nest = two_parent_nest([5.0, 0.0], 25.0, [6.0, 0.0], 36.0)
        nest.local_best.offer(np.array([0.5, 0.0]), 0.25)
        regenerate_nest(nest, self.cfg, self.problem, EvalCounter(), RngStream(0))
        male, female = nest.parents()
        assert male.fitness == 0.25
        assert np.allclose(male.position, [0.5, 0.0])
        assert female.fitness == 25.0


class TestStep:
    def test_first_iteration_regenerates_every_nest(self):
        problem = sphere_problem()
        cfg = RunConfig(nests=4, nestlings=3, regeneration_period=10,
                        max_iterations=20, seed=8)
        rng = RngStream(cfg.seed)
        counter = EvalCounter()
        nests = []
        from shoa.core import SwarmState
        from shoa.shrike import _assign_parent_roles
        from shoa.core import evaluate, init_position
        for _ in range(cfg.nests):
            birds = []
            for _ in range(2):
                pos = init_position(problem.bounds, rng)
                birds.append(Bird(pos, evaluate(problem, pos, counter, rng), Role.NESTLING))
            _assign_parent_roles(birds[0], birds[1])
            nests.append(Nest(birds))
        state = SwarmState(nests, counter)
        step(state, problem, cfg, rng)
        assert all(len(n.birds) == 2 + cfg.nestlings for n in state.nests)
        assert state.iteration == 1

    def test_fitness_never_increases_and_global_best_monotone(self):
        problem = sphere_problem()
        cfg = RunConfig(nests=3, nestlings=4, regeneration_period=5,
                        max_iterations=30, seed=3)
        fits = {}

        def observer(state):
            for ni, nest in enumerate(state.nests):
                for bi, bird in enumerate(nest.birds):
                    key = (ni, bi)
                    if state.iteration > 0 and key in fits and \
                            state.iteration % cfg.regeneration_period != 1:
                        assert bird.fitness <= fits[key] + 1e-15
                    fits[key] = bird.fitness

        result = run(problem, cfg, observer=observer)
        curve = np.array(result.curve)
        assert np.all(np.diff(curve) <= 0)


class TestRun:
    def test_curve_shape_and_final_value(self):
        problem = sphere_problem()
        cfg = RunConfig(max_iterations=40, regeneration_period=10, seed=21)
        result = run(problem, cfg)
        assert len(result.curve) == cfg.max_iterations + 1
        assert result.curve[-1] == result.best_fitness
        assert np.all(np.diff(result.curve) <= 0)

    def test_bit_identical_reruns(self):
        problem = sphere_problem()
        cfg = RunConfig(max_iterations=50, regeneration_period=25, seed=77)
        a = run(problem, cfg)
        b = run(problem, cfg)
        assert a.curve == b.curve
        assert a.best_fitness == b.best_fitness
        assert np.array_equal(a.best_position, b.best_position)
        assert a.evaluations == b.evaluations

    def test_evaluation_counter_matches_wrapped_tally(self):
        base = sphere_problem()
        tally = EvalCounter()

        def counting(x, _inner=base.objective):
            tally.count += 1
            return _inner(x)

        problem = Problem(base.id, base.dimension, base.bounds, objective=counting)
        cfg = RunConfig(nests=5, nestlings=3, regeneration_period=10,
                        max_iterations=40, seed=1)
        result = run(problem, cfg)
        assert result.evaluations == tally.count

    def test_population_count_after_every_step(self):
        problem = sphere_problem()
        cfg = RunConfig(nests=6, nestlings=4, regeneration_period=7,
                        max_iterations=30, seed=10)
        counts = []

        def observer(state):
            counts.append(sum(len(n.birds) for n in state.nests))

        run(problem, cfg, observer=observer)
        assert counts[0] == cfg.nests * 2  # freshly initialized
        assert all(c == cfg.nests * (2 + cfg.nestlings) for c in counts[1:])

    def test_one_male_one_female_per_nest_always(self):
        problem = sphere_problem()
        cfg = RunConfig(nests=4, nestlings=5, regeneration_period=6,
                        max_iterations=25, seed=33)

        def observer(state):
            for nest in state.nests:
                roles = [b.role for b in nest.birds]
                assert roles.count(Role.MALE_PARENT) == 1
                assert roles.count(Role.FEMALE_PARENT) == 1

        run(problem, cfg, observer=observer)

    def test_role_assignment_orders_parents_by_fitness(self):
        nest = two_parent_nest([3.0, 0.0], 9.0, [1.0, 0.0], 1.0)
        cfg = RunConfig(seed=0)
        regenerate_nest(nest, cfg, sphere_problem(), EvalCounter(), RngStream(2))
        male, female = nest.parents()
        assert male.fitness <= female.fitness

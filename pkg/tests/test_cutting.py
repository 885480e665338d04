import random
from fractions import Fraction

import pytest

from halvecut.core.errors import CuttingError, EmptyInputError
from halvecut.cutting import (
    SAMPLED,
    VERTICAL_REFINEMENT,
    CuttingParams,
    SampleBackoff,
    WeightedLineSet,
    net_sample_size,
    sample_net,
    simple_weak_cutting,
    trapezoid_loads,
    verify_cutting,
    weak_cutting,
    weighted_draws,
)
from halvecut.arrangement import FaceId, build_arrangement
from halvecut.geom import Line, Point
from halvecut.oracle import random_lines


def test_backoff_schedule():
    backoff = SampleBackoff(base=2, max_value=16, max_tries=6)
    schedule = [backoff.next_constant() for _ in range(7)]
    assert schedule == [2, 2, 4, 8, 16, 16, None]
    assert backoff.attempts == 6


def test_weighted_line_set_merges_duplicates():
    line = Line.from_slope(1, 0)
    weights = WeightedLineSet.from_pairs([(line, 1), (Line(2, -2, 0), Fraction(1, 2)), (Line.vertical(0), 0)])
    assert len(weights) == 2
    assert weights.weight(line) == Fraction(3, 2)
    assert weights.total_weight == Fraction(3, 2)
    assert weights.positive() == [line]
    assert Line.vertical(0) in weights


def test_negative_weights_are_rejected():
    with pytest.raises(CuttingError):
        WeightedLineSet.from_pairs([(Line.vertical(0), -1)])


def test_weighted_draws_skip_zero_weight_and_stop_early():
    heavy, light, dead = Line.from_slope(0, 0), Line.from_slope(1, 0), Line.from_slope(2, 0)
    weights = WeightedLineSet.from_pairs([(heavy, 100), (light, Fraction(1, 3)), (dead, 0)])
    drawn = weighted_draws(weights, 10_000, random.Random(1))
    assert set(drawn) == {heavy, light}
    with pytest.raises(EmptyInputError):
        weighted_draws(WeightedLineSet.uniform([dead], 0), 5, random.Random(1))


def test_draws_are_reproducible():
    weights = WeightedLineSet.uniform(random_lines(30, random.Random(4)))
    first = sample_net(weights, Fraction(1, 4), Fraction(1, 2), seed=9, constant=1, dimension=1)
    second = sample_net(weights, Fraction(1, 4), Fraction(1, 2), seed=9, constant=1, dimension=1)
    assert first == second


def test_net_sample_size_grows_as_delta_shrinks():
    sizes = [net_sample_size(Fraction(1, d), Fraction(1, 2), constant=1, dimension=1) for d in (2, 4, 8, 16)]
    assert sizes == sorted(sizes) and sizes[0] >= 1


@pytest.mark.parametrize("delta,phi", [(0, Fraction(1, 2)), (Fraction(1, 2), 1)])
def test_sample_net_argument_ranges(delta, phi):
    with pytest.raises(CuttingError):
        sample_net(WeightedLineSet.uniform([Line.vertical(0)]), delta, phi, seed=0)


def test_cutting_params():
    params = CuttingParams(Fraction(1, 5))
    assert params.r == 50
    assert params.log_r == 6
    assert params.alpha == 18
    assert params.delta == Fraction(1, 2 * 18 * 50)
    assert params.sample_size(1) == 18 * 50 * 6
    with pytest.raises(CuttingError):
        CuttingParams(Fraction(0))
    with pytest.raises(CuttingError):
        CuttingParams(Fraction(1, 2), oversample_alpha=0)


def test_verify_cutting_on_trivial_cuttings():
    lines = [Line.from_slope(i, i * i) for i in range(3)]
    weights = WeightedLineSet.uniform(lines)
    empty = verify_cutting(weights, [], Fraction(1, 3))
    assert not empty.valid and empty.worst_weight == 3 and empty.limit == 1
    assert verify_cutting(weights, lines, Fraction(1, 3)).valid


def test_eps_one_needs_no_lines():
    weights = WeightedLineSet.uniform(random_lines(5, random.Random(0)))
    assert weak_cutting(weights, 1).size == 0
    assert simple_weak_cutting(weights, 1).size == 0


def test_weak_cutting_on_a_small_set():
    weights = WeightedLineSet.uniform(random_lines(12, random.Random(2)))
    eps = Fraction(1, 2)
    cutting = weak_cutting(weights, eps, CuttingParams(eps, seed=5))
    assert verify_cutting(weights, cutting, eps).valid
    assert set(cutting.tagged(SAMPLED)) <= set(weights.lines)
    assert all(line.is_vertical for line in cutting.tagged(VERTICAL_REFINEMENT))
    assert cutting.stats.attempts >= 1


def test_weak_cutting_rejects_mismatched_params():
    weights = WeightedLineSet.uniform(random_lines(4, random.Random(2)))
    with pytest.raises(CuttingError):
        weak_cutting(weights, Fraction(1, 2), CuttingParams(Fraction(1, 3)))


def test_simple_weak_cutting_on_a_small_set():
    weights = WeightedLineSet.uniform(random_lines(12, random.Random(3)))
    eps = Fraction(1, 3)
    cutting = simple_weak_cutting(weights, eps, seed=1)
    assert verify_cutting(weights, cutting, eps).valid
    with pytest.raises(CuttingError):
        simple_weak_cutting(weights, 0)


def test_trapezoid_loads_on_sample_lines_are_zero():
    lines = [Line.from_slope(i, i * i) for i in range(3)]
    arrangement = build_arrangement(lines)
    assert trapezoid_loads(arrangement, WeightedLineSet.uniform(lines)) == {}
    foreign = WeightedLineSet.uniform([Line.horizontal(-50)])
    assert set(trapezoid_loads(arrangement, foreign).values()) == {1}


@pytest.mark.slow
@pytest.mark.parametrize("n", [50, 100])
@pytest.mark.parametrize("eps", [Fraction(1, 5)])
def test_cuttings_are_valid_on_random_sets(n, eps):
    weights = WeightedLineSet.uniform(random_lines(n, random.Random(n)))
    weak = weak_cutting(weights, eps, CuttingParams(eps, seed=n))
    simple = simple_weak_cutting(weights, eps, seed=n)
    assert verify_cutting(weights, weak, eps).valid
    assert verify_cutting(weights, simple, eps).valid


@pytest.mark.slow
def test_weak_cutting_is_no_larger_than_the_simple_one():
    eps = Fraction(1, 20)
    weights = WeightedLineSet.uniform(random_lines(60, random.Random(7)))
    weak = sorted(weak_cutting(weights, eps, CuttingParams(eps, seed=s)).size for s in range(3))
    simple = sorted(simple_weak_cutting(weights, eps, seed=s).size for s in range(3))
    assert weak[1] <= simple[1]


def _brute_worst_face(weights, lines):
    """Largest crossing weight over the open 2-faces, testing every line against every face."""
    arrangement = build_arrangement(lines)
    worst = Fraction(0)
    for face in arrangement.faces:
        region = arrangement.region(FaceId(2, face.index))
        load = sum((w for line, w in weights.items() if region.crosses(line)), Fraction(0))
        worst = max(worst, load)
    return worst


def test_weak_cutting_refines_faces_of_a_partial_sample():
    heavy = [Line.from_slope(i, i * i) for i in range(8)]
    light = [Line.horizontal(1000 + j) for j in range(4)]
    weights = WeightedLineSet.from_pairs([(line, 10**6) for line in heavy] + [(line, 1) for line in light])
    eps = Fraction(9, 10)
    cutting = weak_cutting(weights, eps, CuttingParams(eps, net_constant_c=1, seed=3, oversample_alpha=2))

    sampled = cutting.tagged(SAMPLED)
    walls = cutting.tagged(VERTICAL_REFINEMENT)
    assert len(sampled) < len(weights.positive())
    assert walls
    vertex_xs = {v.x for v in build_arrangement(sampled).vertices}
    assert all(wall.is_vertical and wall.c / wall.a in vertex_xs for wall in walls)
    assert cutting.stats.refinement_lines * cutting.stats.alpha <= cutting.stats.refinement_complexity
    assert verify_cutting(weights, cutting, eps).valid


def test_full_sample_skips_the_refinement():
    lines = random_lines(6, random.Random(4))
    weights = WeightedLineSet.uniform(lines)
    eps = Fraction(1, 2)
    cutting = weak_cutting(weights, eps, CuttingParams(eps, seed=1))
    assert set(cutting.lines) == set(lines)
    assert cutting.tagged(VERTICAL_REFINEMENT) == []
    assert cutting.stats.refined_faces == 0


def test_mixed_weight_cutting_is_valid():
    lines = random_lines(24, random.Random(11))
    weights = WeightedLineSet.from_pairs((line, 1 if i % 2 else 3) for i, line in enumerate(lines))
    eps = Fraction(1, 5)
    cutting = weak_cutting(weights, eps, CuttingParams(eps, seed=2))
    report = verify_cutting(weights, cutting, eps)
    assert report.valid
    assert report.worst_weight <= eps * weights.total_weight


@pytest.mark.parametrize("keep", [1, 3, 5])
def test_verify_cutting_matches_a_face_scan(keep):
    lines = random_lines(10, random.Random(keep))
    weights = WeightedLineSet.from_pairs((line, 1 if i % 3 else 3) for i, line in enumerate(lines))
    cutting = lines[:keep]
    report = verify_cutting(weights, cutting, Fraction(1, 2))
    assert report.worst_weight == _brute_worst_face(weights, cutting)
    assert report.valid == (report.worst_weight <= weights.total_weight / 2)


def test_sample_net_hits_every_heavy_segment():
    rng = random.Random(8)
    lines = random_lines(200, rng)
    weights = WeightedLineSet.uniform(lines)
    delta = Fraction(1, 4)
    net = set(sample_net(weights, delta, Fraction(1, 2), seed=8))
    assert len(net) < len(lines)

    heavy = 0
    for _ in range(200):
        p = Point(rng.randint(-2000, 2000), rng.randint(-2000, 2000))
        q = Point(rng.randint(-2000, 2000), rng.randint(-2000, 2000))
        crossing = {line for line in lines if line.side(p) * line.side(q) < 0}
        if len(crossing) >= delta * len(lines):
            heavy += 1
            assert crossing & net
    assert heavy > 0

from fractions import Fraction

import pytest

from halvecut.core.errors import InstanceError
from halvecut.core.instance import Instance, single_set
from halvecut.geom import Point


def test_instance_properties(square):
    instance = Instance.from_sets([(square, Fraction(1, 2)), (square[:2] + [Point(5, 5)], 1)])
    assert instance.k == 2
    assert instance.sizes == [4, 3]
    assert instance.m == 7
    assert instance.fr == Fraction(1, 2)
    assert len(instance.all_points) == 5
    assert instance.membership()[square[0]] == [0, 1]
    assert instance.sets[0].limit == 2
    assert instance.sets[1].guard_threshold == 3


def test_points_are_deduplicated_within_a_set():
    instance = single_set([Point(0, 0), Point(0, 0), Point(1, 0)], 1)
    assert instance.sizes == [2]


@pytest.mark.parametrize("fraction", [0, Fraction(3, 2), -1])
def test_fraction_outside_unit_interval_is_rejected(square, fraction):
    with pytest.raises(InstanceError):
        single_set(square, fraction)


def test_unsolvable_fraction_is_rejected(square):
    with pytest.raises(InstanceError):
        single_set(square, Fraction(1, 5))


def test_empty_inputs_are_rejected():
    with pytest.raises(InstanceError):
        Instance.from_sets([])
    with pytest.raises(InstanceError):
        single_set([], 1)

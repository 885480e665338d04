from fractions import Fraction

import pytest

from halvecut.cli.files import (
    dump_instance,
    dump_result,
    encode_point,
    parse_instance,
    parse_point,
    parse_rational,
    parse_result,
    to_text,
)
from halvecut.core.errors import InstanceError
from halvecut.geom import Line, Point


def test_rationals_and_points():
    assert parse_rational([3, 6], "x") == Fraction(1, 2)
    assert parse_rational(2, "x") == 2
    assert parse_point([1, 2, -3, 4], "p") == Point(Fraction(1, 2), Fraction(-3, 4))
    assert encode_point(Point(Fraction(1, 2), 3)) == [1, 2, 3, 1]
    assert encode_point(Point(1, 3)) == [1, 3]
    for bad in (True, 0.5, "1/2", [1, 2, 3]):
        with pytest.raises(InstanceError):
            parse_rational(bad, "x")


def test_instance_round_trip():
    data = {
        "sets": [
            {"points": [[0, 0], [1, 2, 5, 1]], "fraction": [1, 2]},
            {"points": [[3, 3]], "fraction": [1, 1]},
        ],
        "meta": {"seed": 4, "name": "mixed"},
    }
    parsed = parse_instance(data)
    assert dump_instance(parsed.instance, parsed.meta) == data
    assert parse_instance(dump_instance(parsed.instance, parsed.meta)) == parsed


def test_result_round_trip():
    lines = (Line(1, 0, 2), Line.from_slope(Fraction(1, 3), 1))
    data = dump_result(lines=lines, stats={"ratio": Fraction(2, 3)}, shear=Fraction(1, 7), valid=True)
    assert data["stats"]["ratio"] == [2, 3]
    result = parse_result(data)
    assert result.lines == lines and result.shear == Fraction(1, 7) and result.valid
    assert to_text(data) == to_text(dict(reversed(list(data.items()))))


@pytest.mark.parametrize("data", [
    {"lines": [], "guards": []},
    {"stats": {}},
    {"lines": [[[0, 1], [0, 1], [1, 1]]]},
    {"lines": [], "valid": "yes"},
    {"guards": [], "colour": "red"},
])
def test_result_parsing_is_strict(data):
    with pytest.raises(InstanceError):
        parse_result(data)

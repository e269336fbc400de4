import pytest

from rrclosure.core.errors import UnsupportedDimensionError
from rrclosure.models.monomial import MonomialIdeal
from rrclosure.utils.svg import INPUT_FILL, RESULT_FILL, staircase_svg


def test_plot_is_deterministic(witness_ideal, witness_closure):
    first = staircase_svg(witness_ideal, witness_closure, title="rr")
    assert first == staircase_svg(witness_ideal, witness_closure, title="rr")
    assert first.startswith("<svg ")
    assert first.endswith("</svg>\n")


def test_closure_gain_is_shaded_once(witness_ideal, witness_closure):
    svg = staircase_svg(witness_ideal, witness_closure)
    assert svg.count(f'fill="{RESULT_FILL}"') == 1
    assert svg.count(f'fill="{INPUT_FILL}"') > 0


def test_labels_are_escaped():
    svg = staircase_svg(MonomialIdeal.of([(1, 1)]), names=("a<b", "c&d"), title="I & J")
    assert "a&lt;b" in svg
    assert "c&amp;d" in svg
    assert "I &amp; J" in svg


def test_only_two_variables():
    with pytest.raises(UnsupportedDimensionError):
        staircase_svg(MonomialIdeal.of([(1, 0, 0)]))

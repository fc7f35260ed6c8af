import pytest

from hubforce import heaven, hellc4
from hubforce.examples import example_graph


def test_hellc4_structure():
    g = hellc4()
    assert g.n == 4
    assert g.hub is None
    assert g.num_edges == 8
    for u, v, w in g.edges():
        assert w == 1
        assert g.weight(v, u) == 1


def test_heaven_structure():
    g = heaven(3)
    assert g.n == 5
    assert g.hub == 4
    assert g.num_edges == 12
    assert all(g.weight(4, v) == 3 for v in range(4))


def test_heaven_zero_weight_keeps_hub():
    g = heaven(0)
    assert g.hub == 4
    assert g.num_edges == 8


def test_heaven_rejects_negative_weight():
    with pytest.raises(ValueError):
        heaven(-1)


def test_example_graph_dispatch():
    assert example_graph("hellc4") == hellc4()
    assert example_graph("heaven", 5) == heaven(5)
    assert example_graph("heaven") == heaven(2)
    with pytest.raises(ValueError):
        example_graph("hellc4", 2)
    with pytest.raises(ValueError):
        example_graph("purgatory")

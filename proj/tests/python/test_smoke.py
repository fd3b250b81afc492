"""Smoke tests for the python bindings."""

import egkit


def test_compose_and_reduced():
    assert egkit.compose_word([1, 2, 1, 3], 4) == [3, 2, 4, 1]
    assert egkit.is_reduced([3, 2, 1, 2, 3, 2], 4)
    assert not egkit.is_reduced([1, 1], 3)


def test_eg_map_worked_example():
    p, q = egkit.eg_map([3, 2, 1, 2, 3, 2])
    assert p == [[1, 2, 3], [2, 3], [3]]
    assert q == [[1, 4, 5], [2, 6], [3]]
    assert egkit.eg_inverse(q) == [3, 2, 1, 2, 3, 2]
    assert egkit.evacuation(q) == [[1, 2, 6], [3, 5], [4]]
    assert egkit.is_frozen(p)


def test_diagram_and_patterns():
    assert egkit.diagram_shape([5, 6, 1, 4, 2, 3]) == [2, 2, 2, 2]
    assert egkit.lehmer_code([8, 1, 3, 9, 7, 5, 2, 4, 6]) == [7, 0, 1, 5, 4, 2, 0, 0, 0]
    assert egkit.is_vexillary([8, 1, 3, 9, 7, 5, 2, 4, 6])
    assert not egkit.contains_pattern([5, 6, 1, 4, 2, 3], [1, 3, 2])


def test_enumeration_and_counts():
    assert len(egkit.enumerate_networks(4)) == 16
    assert egkit.count_syt([3, 2, 1]) == 16
    assert egkit.count_132_networks(6) == 286
    assert egkit.eta_table(4) == [2, 2, 8, 2, 2]


def test_sampling_is_deterministic():
    a = egkit.random_network(5, 123)
    b = egkit.random_network(5, 123)
    assert a == b
    assert egkit.is_reduced(a, 5)


def test_poset_summary():
    summary = egkit.poset_summary([[1], [2], [3]])
    assert summary["bottom"] == [1, 1, 1]
    assert summary["top"] == [3, 2, 1]
    assert summary["height"] == 3


def test_wiring_svg():
    svg = egkit.wiring_svg([2, 3, 2, 1, 2, 3], 4)
    assert svg.count("<polyline") == 4

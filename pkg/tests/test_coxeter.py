import json
import random
from itertools import combinations

import pytest

from common.errors import InputError, NotRightAngledError, UnknownGeneratorError
from complexes.library import rp2_eleven
from coxeter.catalog import (
    coset_enumeration_order,
    finite_type,
    format_order,
    is_spherical,
    special_subgroup_order,
)
from coxeter.io import dump_coxeter_graph, parse_coxeter_graph, system_from_document
from coxeter.presentation import coxeter_presentation
from coxeter.system import INFINITY, CoxeterSystem
from interface.documents import load_system


def _linear(labels, default="two"):
    """Path diagram s0 - s1 - ... with the given labels along it."""
    names = [f"s{i}" for i in range(len(labels) + 1)]
    edges = [(names[i], names[i + 1], m) for i, m in enumerate(labels)]
    return CoxeterSystem.build(names, edges, default=default)


def test_parse_minimal_graph():
    sys = parse_coxeter_graph('{"vertices": ["a", "b", "c"], "edges": [{"u": "a", "v": "b", "m": 3}]}')
    assert sys.m("a", "b") == 3
    assert sys.m("b", "a") == 3
    assert sys.m("a", "c") == INFINITY
    assert sys.m("a", "a") == 1
    assert not sys.is_right_angled


@pytest.mark.parametrize(
    "document, fragment",
    [
        ({"vertices": ["a", "a"]}, "duplicate vertex"),
        ({"vertices": ["a"], "edges": [{"u": "a", "v": "q", "m": 2}]}, "unknown generator"),
        ({"vertices": ["a", "b"], "edges": [{"u": "a", "v": "b", "m": 1}]}, "below 2"),
        ({"vertices": ["a"], "edges": [{"u": "a", "v": "a", "m": 2}]}, "self-label"),
        (
            {"vertices": ["a", "b"], "edges": [{"u": "a", "v": "b", "m": 2}, {"u": "b", "v": "a", "m": 3}]},
            "conflicting",
        ),
        ({"vertices": ["a"], "default": "three"}, "default"),
        ({"vertices": []}, "vertices"),
    ],
)
def test_invalid_graphs(document, fragment):
    with pytest.raises(InputError) as info:
        system_from_document(document, source="graph.json")
    assert fragment in str(info.value)
    assert info.value.source == "graph.json"


def test_malformed_json_is_an_input_error():
    with pytest.raises(InputError) as info:
        parse_coxeter_graph('{"vertices": ["a",]}', source="graph.json")
    assert info.value.location.startswith("line 1")


def test_unknown_generator_lookup():
    sys = CoxeterSystem.build(["a", "b"])
    with pytest.raises(UnknownGeneratorError):
        sys.m("a", "z")


def test_dump_and_parse_agree(bowtie_system):
    text = dump_coxeter_graph(bowtie_system)
    assert parse_coxeter_graph(text) == bowtie_system
    assert dump_coxeter_graph(parse_coxeter_graph(text)) == text


def test_default_two_stores_only_the_exceptions():
    sys = CoxeterSystem.build(["a", "b", "c"], [("a", "b", 2), ("b", "c", INFINITY)], default="two")
    document = json.loads(dump_coxeter_graph(sys))
    assert document["edges"] == [{"u": "b", "v": "c", "m": "infinity"}]
    assert sys.commutes("a", "c")


def test_bow_tie_subdivision_file(data_dir, bowtie_system):
    sys = load_system(str(data_dir / "examples" / "bowtie-subdivision.json"))
    assert len(sys) == 13
    assert len(sys.finite_pairs()) == 24
    assert sys.is_right_angled
    assert set(sys.vertices) == set(bowtie_system.vertices)
    assert {frozenset(p[:2]) for p in sys.finite_pairs()} == {frozenset(p[:2]) for p in bowtie_system.finite_pairs()}


def test_complex_file_reads_as_right_angled_system(data_dir):
    sys = load_system(str(data_dir / "examples" / "bowtie.json"))
    assert sys.vertices == ("a", "b", "c", "d", "e")
    assert sys.commutes("a", "b")
    assert sys.m("a", "d") == INFINITY


@pytest.mark.parametrize(
    "labels, order, name",
    [
        ([], 2, "A1"),
        ([3], 6, "I2(3)"),
        ([5], 10, "I2(5)"),
        ([3, 3], 24, "A3"),
        ([4, 3], 48, "B3"),
        ([5, 3], 120, "H3"),
        ([3, 3, 3], 120, "A4"),
        ([4, 3, 3], 384, "B4"),
        ([3, 4, 3], 1152, "F4"),
        ([5, 3, 3], 14400, "H4"),
    ],
)
def test_linear_diagrams(labels, order, name):
    sys = _linear(labels)
    assert special_subgroup_order(sys, sys.vertices) == order
    assert [t.name for t in finite_type(sys, sys.vertices)] == [name]


@pytest.mark.parametrize("labels", [[5, 3, 3, 3], [6, 3], [4, 4], [3, 5, 3], [4, 3, 4]])
def test_infinite_linear_diagrams(labels):
    sys = _linear(labels)
    assert not is_spherical(sys, sys.vertices)
    assert special_subgroup_order(sys, sys.vertices) == INFINITY
    assert format_order(INFINITY) == "infinite"


def test_branched_diagrams():
    d4 = CoxeterSystem.build(
        ["c", "x", "y", "z"], [("c", "x", 3), ("c", "y", 3), ("c", "z", 3)], default="two"
    )
    assert [t.name for t in finite_type(d4, d4.vertices)] == ["D4"]
    assert special_subgroup_order(d4, d4.vertices) == 192

    triangle = CoxeterSystem.build(["a", "b", "c"], [("a", "b", 3), ("b", "c", 3), ("a", "c", 3)])
    assert not is_spherical(triangle, ["a", "b", "c"])
    assert is_spherical(triangle, ["a", "b"])


def test_orders_of_right_angled_subsets(rp2_eleven_system):
    assert special_subgroup_order(rp2_eleven_system, []) == 1
    assert special_subgroup_order(rp2_eleven_system, ["a", "b"]) == 4
    assert special_subgroup_order(rp2_eleven_system, ["a", "b", "k"]) == 8
    assert special_subgroup_order(rp2_eleven_system, ["a", "c"]) == INFINITY


def test_catalog_agrees_with_coset_enumeration():
    sys = CoxeterSystem.build(
        ["p", "q", "r", "s"],
        [("p", "q", 3), ("q", "r", 4), ("r", "s", 5), ("p", "s", 2), ("p", "r", 2), ("q", "s", 2)],
    )
    for k in range(4):
        for subset in combinations(sys.vertices, k):
            if is_spherical(sys, subset):
                assert coset_enumeration_order(sys, subset) == special_subgroup_order(sys, subset)


def test_sphericity_is_closed_under_subsets():
    sys = CoxeterSystem.build(
        ["a", "b", "c", "d"],
        [("a", "b", 3), ("b", "c", 3), ("c", "d", 4), ("a", "c", 2), ("a", "d", 2), ("b", "d", 2)],
    )
    for k in range(1, 5):
        for subset in combinations(sys.vertices, k):
            if is_spherical(sys, subset):
                for j in range(k):
                    assert all(is_spherical(sys, sub) for sub in combinations(subset, j))


def test_coxeter_presentation_relator_count():
    sys = CoxeterSystem.right_angled(rp2_eleven())
    pres = coxeter_presentation(sys)
    assert len(pres.generators) == 11
    assert len(pres.relators) == 11 + 30
    assert sorted(set(pres.relator_lengths())) == [2, 4]


def test_general_presentation_uses_labels():
    pres = coxeter_presentation(_linear([5]))
    assert [str(r) for r in pres.relators] == ["s0 s0", "s1 s1", "s0 s1 s0 s1 s0 s1 s0 s1 s0 s1"]


def test_right_angled_requirement():
    with pytest.raises(NotRightAngledError) as info:
        _linear([3]).require_right_angled("nerve check")
    assert info.value.subject == ("s0", "s1")


@pytest.mark.parametrize("m", range(2, 9))
def test_dihedral_orders_agree_with_coset_enumeration(m):
    sys = CoxeterSystem.build(["s", "t"], [("s", "t", m)])
    assert special_subgroup_order(sys, ["s", "t"]) == 2 * m
    assert coset_enumeration_order(sys, ["s", "t"]) == 2 * m


def test_sphericity_is_monotone_on_random_systems():
    rng = random.Random(2718)
    for n in range(1, 9):
        for _ in range(4):
            names = [f"g{i}" for i in range(n)]
            edges = []
            for u, v in combinations(names, 2):
                m = rng.choice([2, 2, 2, 3, 3, 4, 5, 6, None])
                if m is not None:
                    edges.append((u, v, m))
            sys = CoxeterSystem.build(names, edges)
            spherical = {
                subset
                for k in range(n + 1)
                for subset in combinations(names, k)
                if is_spherical(sys, subset)
            }
            for subset in spherical:
                for drop in range(len(subset)):
                    assert subset[:drop] + subset[drop + 1:] in spherical

import networkx as nx
import pytest

from coloring.colorings import (
    Coloring,
    all_colorings,
    chromatic_number,
    coloring_by_dimension,
    coloring_hom,
    exact_coloring,
    find_coloring,
    greedy_coloring,
)
from coloring.conditions import (
    GENERATING,
    NONE_CERTIFIED,
    NORMAL_GENERATING,
    check_generation_conditions,
    normal_generation_identity,
    pullback_presentation,
    subgroup_generators,
)
from common.errors import ImproperColoringError, InputError, PreconditionError, StarConditionError
from common.settings import load_settings, use_settings
from complexes.library import bow_tie_subdivision, rp2_six, triangle_subdivision
from complexes.simplicial import from_facets
from coxeter.system import CoxeterSystem
from coxeter.word_problem import racg_equal
from presentations.abelian import abelian_invariants
from presentations.words import Word


def _path_system(length):
    names = [f"p{i}" for i in range(length)]
    return CoxeterSystem.right_angled(from_facets([names[i], names[i + 1]] for i in range(length - 1)))


@pytest.mark.parametrize(
    "graph, expected",
    [
        (nx.empty_graph(3), 1),
        (nx.path_graph(4), 2),
        (nx.cycle_graph(5), 3),
        (nx.complete_graph(4), 4),
        (nx.petersen_graph(), 3),
    ],
)
def test_chromatic_numbers(graph, expected):
    assert chromatic_number(graph) == expected
    if expected > 1:
        assert exact_coloring(graph, expected - 1) is None


def test_exact_colourings_are_proper(rp2_eleven_system):
    graph = rp2_eleven_system.labeled_graph()
    assert chromatic_number(graph) == 4
    coloring = exact_coloring(graph, 4)
    assert coloring.is_proper(graph)
    assert coloring.color_count == 4
    assert chromatic_number(CoxeterSystem.right_angled(rp2_six()).labeled_graph()) == 6


def test_all_colorings_counts_each_partition_once():
    colourings = list(all_colorings(nx.path_graph(3), 2))
    assert len(colourings) == 1
    assert len(list(all_colorings(nx.empty_graph(3), 3, exactly=True))) == 1
    assert len(list(all_colorings(nx.empty_graph(3), 3))) == 5


def test_every_four_colouring_of_the_projective_plane_breaks_the_star_condition(rp2_eleven_system):
    graph = rp2_eleven_system.labeled_graph()
    colourings = list(all_colorings(graph, 4, exactly=True))
    assert colourings
    for c in colourings:
        report = check_generation_conditions(rp2_eleven_system, c)
        assert not report.star_condition
        with pytest.raises(StarConditionError):
            pullback_presentation(rp2_eleven_system, c)


def test_greedy_fallback_beyond_the_limits(tmp_path, rp2_eleven_system):
    settings = load_settings(tmp_path / "absent.json")
    settings.coloring.exact_vertex_limit = 5
    use_settings(settings)
    graph = rp2_eleven_system.labeled_graph()
    coloring = find_coloring(graph, 11)
    assert coloring is not None
    assert not coloring.exact
    assert coloring.is_proper(graph)
    assert find_coloring(graph, 1) is None


def test_greedy_colouring_is_proper(bowtie_system):
    graph = bowtie_system.labeled_graph()
    assert greedy_coloring(graph).is_proper(graph)


def test_coloring_by_dimension(bowtie_system):
    c = coloring_by_dimension(bow_tie_subdivision())
    assert c.palette == ["0", "1", "2"]
    assert c["{c}"] == "0"
    assert c["{a,b,c}"] == "2"
    assert c.is_proper(bowtie_system.labeled_graph())
    with pytest.raises(PreconditionError):
        coloring_by_dimension(from_facets([["a", "b"]]))


def test_coloring_classes(rp2_eleven_coloring):
    assert rp2_eleven_coloring.classes()["3"] == ["i", "k"]
    assert rp2_eleven_coloring.base_points() == {"0": "a", "1": "b", "2": "g", "3": "i"}
    psi = coloring_hom(rp2_eleven_coloring)
    assert psi.rank == 4
    assert psi.vector("i") == (0, 0, 0, 1)
    with pytest.raises(InputError):
        Coloring.from_classes({"0": ["a"], "1": ["a"]})
    with pytest.raises(InputError):
        rp2_eleven_coloring["z"]


def test_improper_colouring_is_rejected(bowtie_system):
    c = Coloring({v: "0" for v in bowtie_system.vertices})
    with pytest.raises(ImproperColoringError):
        check_generation_conditions(bowtie_system, c)


def test_generation_modes(bowtie_system, triangle_system, rp2_eleven_system, rp2_eleven_coloring):
    bowtie = check_generation_conditions(bowtie_system, coloring_by_dimension(bow_tie_subdivision()))
    assert bowtie.all_adjacent
    assert bowtie.mode == NORMAL_GENERATING
    disconnected = [p.colours for p in bowtie.pairs if not p.connected]
    assert disconnected == [("1", "2")]
    assert bowtie.star_condition

    triangle = check_generation_conditions(triangle_system, coloring_by_dimension(triangle_subdivision()))
    assert triangle.mode == GENERATING

    path = _path_system(4)
    c = Coloring.from_classes({"0": ["p0"], "1": ["p1", "p3"], "2": ["p2"]})
    assert check_generation_conditions(path, c).mode == NONE_CERTIFIED

    report = check_generation_conditions(rp2_eleven_system, rp2_eleven_coloring)
    assert report.first_star_violation() is not None


def test_subgroup_generators(bowtie_system, triangle_system):
    full = subgroup_generators(bowtie_system, coloring_by_dimension(bow_tie_subdivision()))
    assert len(full.words) == 10 + 15 + 1
    assert all(len(w) == 2 for w in full.words)

    economical = subgroup_generators(bowtie_system, coloring_by_dimension(bow_tie_subdivision()), economical=True)
    assert len(economical.words) == 10
    assert economical.mode == NORMAL_GENERATING

    small = subgroup_generators(triangle_system, coloring_by_dimension(triangle_subdivision()), economical=True)
    assert len(small.words) == 4


def test_normal_generation_identity():
    path = _path_system(5)
    c = Coloring.from_classes({"0": ["p0", "p2", "p4"], "1": ["p1", "p3"]})
    factors = normal_generation_identity(path, c, "p3", "p0", "p4")
    product = Word()
    for f in factors:
        assert len(f) == 2
        assert c[f.letters[0][0]] == c[f.letters[1][0]] or "p3" in f.generators()
        product = product * f
    assert racg_equal(path, product, Word.from_generators(["p3", "p0", "p4", "p3"]))

    with pytest.raises(PreconditionError):
        normal_generation_identity(path, c, "p3", "p0", "p1")


def test_pullback_presentation_of_triangle_subdivision(triangle_system):
    pres = pullback_presentation(triangle_system, coloring_by_dimension(triangle_subdivision()))
    assert len(pres.generators) == 7
    assert len(pres.relators) == 16
    assert set(pres.relator_lengths()) == {4}
    invariants = abelian_invariants(pres)
    assert invariants.free_rank == 3
    assert invariants.torsion == (2, 2, 2, 2)

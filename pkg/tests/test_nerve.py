from fractions import Fraction
from itertools import product

import pytest

from coloring.colorings import coloring_by_dimension, coloring_hom
from common.errors import InputError, NotRightAngledError, PreconditionError
from complexes.library import boundary_of_simplex, bow_tie_subdivision, pentagon_complex, rp2_eleven
from complexes.simplicial import from_facets
from coxeter.system import CoxeterSystem
from homology.groups import homology
from homology.rings import QQ, ZZ, Fp
from nerve.davis import davis_quotient, torsion_free_kernel_check
from nerve.euler import chiswell_euler, euler_from_face_counts
from nerve.reports import free_cohomology_report, vcd_report
from nerve.spherical import nerve
from presentations.homomorphisms import TwoGroupHom


def _cycle_system(n):
    names = [f"c{i}" for i in range(n)]
    return CoxeterSystem.right_angled(from_facets([names[i], names[(i + 1) % n]] for i in range(n)))


def _octahedron_system():
    facets = [[f"x{sx}", f"y{sy}", f"z{sz}"] for sx, sy, sz in product("+-", repeat=3)]
    return CoxeterSystem.right_angled(from_facets(facets))


def test_right_angled_nerve_is_the_flag_complex(rp2_eleven_system):
    N = nerve(rp2_eleven_system)
    assert N.complex == rp2_eleven()
    assert N.order(("a", "b")) == 4
    assert N.order(("b", "a")) == 4
    assert len(N.spherical_subsets()) == 1 + 11 + 30 + 20


def test_general_nerve_uses_the_catalog():
    affine = CoxeterSystem.build(["a", "b", "c"], [("a", "b", 3), ("b", "c", 3), ("a", "c", 3)])
    N = nerve(affine)
    assert N.complex.facets == (("a", "b"), ("a", "c"), ("b", "c"))
    assert N.order(("a", "b")) == 6

    a3 = CoxeterSystem.build(["a", "b", "c"], [("a", "b", 3), ("b", "c", 3)], default="two")
    assert nerve(a3).maximal_subsets() == (("a", "b", "c"),)
    assert nerve(a3).order(("a", "b", "c")) == 24


@pytest.mark.parametrize(
    "system, scaled",
    [
        (lambda: CoxeterSystem.right_angled(rp2_eleven()), 4),
        (lambda: CoxeterSystem.right_angled(pentagon_complex()), 24),
        (lambda: CoxeterSystem.right_angled(bow_tie_subdivision()), -8),
    ],
)
def test_euler_characteristics(system, scaled):
    N = nerve(system())
    chi = chiswell_euler(N)
    assert 8 * chi == scaled
    assert euler_from_face_counts(N.complex.f_vector()) == chi


def test_finite_groups_have_reciprocal_euler_characteristic():
    a3 = CoxeterSystem.build(["a", "b", "c"], [("a", "b", 3), ("b", "c", 3)], default="two")
    assert chiswell_euler(a3) == Fraction(1, 24)
    assert chiswell_euler(CoxeterSystem.build(["a", "b"], [("a", "b", 5)])) == Fraction(1, 10)


def test_one_generator_davis_quotient():
    sys = CoxeterSystem.build(["a"])
    psi = TwoGroupHom.from_vectors(1, {"a": [1]})
    quotient = davis_quotient(sys, psi)
    assert quotient.index == 2
    assert quotient.cells_per_dim == (3, 2)
    assert quotient.euler_characteristic == 1
    assert [str(g) for g in homology(quotient.data)] == ["Z", "0"]


def test_triangle_subdivision_davis_quotient(triangle_system):
    K = nerve(triangle_system).complex
    psi = coloring_hom(coloring_by_dimension(K))
    quotient = davis_quotient(triangle_system, psi)
    assert quotient.index == 8
    assert quotient.euler_characteristic == 8 * chiswell_euler(triangle_system)
    assert quotient.euler_characteristic == -2


@pytest.mark.slow
def test_bow_tie_davis_quotient(bowtie_system):
    psi = coloring_hom(coloring_by_dimension(nerve(bowtie_system).complex))
    quotient = davis_quotient(bowtie_system, psi)
    assert quotient.cells_per_dim == (120, 800, 1248, 576)
    assert quotient.euler_characteristic == -8
    h1 = homology(quotient.data)[1]
    assert h1.free_rank == 11
    assert not h1.torsion


def test_kernel_check(bowtie_system):
    good = coloring_hom(coloring_by_dimension(nerve(bowtie_system).complex))
    assert torsion_free_kernel_check(bowtie_system, good)

    flat = TwoGroupHom(1, {v: 1 for v in bowtie_system.vertices})
    check = torsion_free_kernel_check(bowtie_system, flat)
    assert not check
    assert check.failing_subset in nerve(bowtie_system).maximal_subsets()
    with pytest.raises(PreconditionError, match="torsion"):
        davis_quotient(bowtie_system, flat)


def test_davis_quotient_needs_right_angles():
    sys = CoxeterSystem.build(["a", "b"], [("a", "b", 3)])
    psi = TwoGroupHom.from_vectors(1, {"a": [1], "b": [1]})
    with pytest.raises(NotRightAngledError):
        davis_quotient(sys, psi)


def test_vcd_report_on_projective_plane(rp2_eleven_system):
    report = vcd_report(rp2_eleven_system, [ZZ, QQ, Fp(2)])
    assert report.dim_k == 2
    assert report.vcd_upper == 3
    assert report.pseudo_manifold
    assert report.rings["Z"].verdict == "certified"
    assert report.rings["Z"].vcd == 3
    assert report.rings["F2"].verdict == "certified"
    assert report.rings["Q"].verdict == "bounded"
    assert report.rings["Q"].vcd is None
    assert not report.rings["Z"].duality_group


def test_vcd_report_other_cases(bowtie_system):
    finite = vcd_report(CoxeterSystem.right_angled(boundary_of_simplex(3)))
    assert finite.finite_group
    assert finite.rings["Z"].verdict == "finite"

    assert vcd_report(bowtie_system).rings["Z"].verdict == "surjection"

    circle = vcd_report(_cycle_system(5))
    assert circle.rings["Z"].verdict == "certified"
    assert circle.rings["Z"].vcd == 2
    assert circle.rings["Z"].duality_group


def test_free_cohomology_of_a_sphere_nerve():
    report = free_cohomology_report(_octahedron_system(), ZZ)
    assert report.dim_k == 2
    assert [e.degree for e in report.entries] == [0, 1, 2, 3]
    assert [e.description for e in report.entries[:3]] == ["0", "0", "0"]
    assert report.entries[3].description == "Z°"


def test_free_cohomology_of_the_projective_plane(rp2_eleven_system):
    with pytest.raises(PreconditionError, match="orientable"):
        free_cohomology_report(rp2_eleven_system, ZZ)
    report = free_cohomology_report(rp2_eleven_system, Fp(2))
    assert [e.degree for e in report.entries] == [0, 1, 2, 3]
    assert report.entries[2].description != "0"
    assert report.entries[3].description == "F2°"


def test_free_cohomology_needs_a_manifold_nerve(bowtie_system):
    with pytest.raises(PreconditionError):
        free_cohomology_report(bowtie_system)


def test_homomorphism_with_images_off_the_vertices_is_rejected():
    sys = CoxeterSystem.build(["a"])
    psi = TwoGroupHom.from_vectors(2, {"a": [1, 0], "zz": [0, 1]})
    with pytest.raises(InputError, match="zz"):
        davis_quotient(sys, psi)
    with pytest.raises(InputError, match="zz"):
        torsion_free_kernel_check(sys, psi)

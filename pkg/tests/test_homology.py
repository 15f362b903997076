import random

import numpy as np
import pytest
from sympy import Matrix

from common.errors import InputError
from complexes.library import boundary_of_simplex, bow_tie, hollow_triangle, pentagon_complex, rp2_eleven, simplex
from complexes.simplicial import from_facets
from homology.chains import DeltaComplexData, delta_complex_from_document
from homology.groups import HomologyGroup, betti_numbers, cohomology, homology, homology_batch
from homology.manifolds import is_r_homology_manifold, is_r_homology_sphere, sphere_homology_check
from homology.matrices import (
    IntegerMatrix,
    bareiss_determinant,
    integer_rank,
    invariant_factors,
    minor_gcd_invariants,
    modular_rank,
    smith_normal_form,
)
from homology.rings import QQ, ZZ, CoefficientRing, Fp


def _random_matrices(count, rows, cols, seed=7):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        entries = rng.integers(-4, 5, size=(rows, cols))
        if rng.random() < 0.3:
            entries[-1] = entries[0] + entries[1]
        if rng.random() < 0.3:
            entries = entries * 2
        yield IntegerMatrix(entries)


def test_smith_normal_form_matches_minor_gcds():
    for M in _random_matrices(120, 5, 6):
        assert invariant_factors(M) == minor_gcd_invariants(M)


def test_smith_transforms_reproduce_the_diagonal():
    for M in _random_matrices(30, 4, 5, seed=11):
        snf = smith_normal_form(M)
        assert snf.U @ M @ snf.V == snf.D
        assert snf.D.is_diagonal()
        factors = snf.invariant_factors
        assert all(b % a == 0 for a, b in zip(factors, factors[1:]))
        assert factors == invariant_factors(M)


def test_invariant_factor_product_is_the_determinant():
    for M in _random_matrices(40, 4, 4, seed=3):
        det = Matrix(M.to_lists()).det()
        assert bareiss_determinant(M.to_lists()) == det
        if det != 0:
            product = 1
            for d in invariant_factors(M):
                product *= d
            assert product == abs(det)


def test_ranks():
    M = IntegerMatrix([[2, 0], [0, 3], [2, 3]])
    assert integer_rank(M) == 2
    assert modular_rank(M, 2) == 1
    assert modular_rank(M, 3) == 1
    assert modular_rank(M, 5) == 2
    assert invariant_factors(IntegerMatrix([[2, 4], [6, 8]])) == [2, 4]


def test_matrix_rejects_floats():
    with pytest.raises(InputError):
        IntegerMatrix(np.array([[0.5, 1.0]]))


def test_rp2_homology(rp2):
    assert [str(g) for g in homology(rp2, ZZ)] == ["Z", "Z/2", "0"]
    assert betti_numbers(homology(rp2, Fp(2))) == [1, 1, 1]
    assert betti_numbers(homology(rp2, Fp(3))) == [1, 0, 0]
    assert betti_numbers(homology(rp2, QQ)) == [1, 0, 0]


def test_rp2_cohomology_moves_torsion_up(rp2):
    assert [str(g) for g in cohomology(rp2, ZZ)] == ["Z", "0", "Z/2"]


def test_reduced_homology():
    assert [str(g) for g in homology(simplex(2), ZZ, reduced=True)] == ["0", "0", "0"]
    assert [str(g) for g in homology(hollow_triangle(), ZZ, reduced=True)] == ["0", "Z"]
    assert [str(g) for g in homology(bow_tie(), ZZ)] == ["Z", "0", "0"]


def test_homology_group_text():
    assert str(HomologyGroup(3, (2, 2, 2, 2))) == "Z^3 + (Z/2)^4"
    assert str(HomologyGroup(0, (2, 6))) == "Z/2 + Z/6"
    assert str(HomologyGroup(2, (), Fp(3))) == "2"
    with pytest.raises(InputError):
        HomologyGroup(0, (2, 3))
    with pytest.raises(InputError):
        HomologyGroup(0, (2,), QQ)


def test_homology_group_document():
    group = HomologyGroup(1, (2,))
    assert HomologyGroup.from_document(group.to_document()) == group


def test_ring_parsing():
    assert CoefficientRing.parse("z") is ZZ
    assert CoefficientRing.parse("Fp:3") == Fp(3)
    assert CoefficientRing.parse("F2").label == "F2"
    with pytest.raises(InputError):
        CoefficientRing.parse("Fp:4")
    with pytest.raises(InputError):
        CoefficientRing.parse("R")


@pytest.mark.parametrize("n", [1, 2, 3])
def test_simplex_boundaries_are_spheres(n):
    K = boundary_of_simplex(n + 1)
    for ring in (ZZ, QQ, Fp(2)):
        assert is_r_homology_sphere(K, ring)


def test_sphere_check_of_empty_complex():
    from complexes.simplicial import from_facets

    assert sphere_homology_check(from_facets([]), -1)
    assert not sphere_homology_check(hollow_triangle(), 0)
    assert sphere_homology_check(hollow_triangle(), 1)


def test_manifold_predicates(rp2):
    assert is_r_homology_manifold(rp2, ZZ)
    for ring in (ZZ, QQ, Fp(2), Fp(3)):
        assert not is_r_homology_sphere(rp2, ring)
    verdict = is_r_homology_manifold(bow_tie(), ZZ)
    assert not verdict
    assert verdict.simplex == ("c",)
    assert "['c']" in verdict.reason


def test_delta_complex_document():
    circle = delta_complex_from_document({"cells_per_dim": [1, 1], "boundaries": [[[0]]]})
    assert [str(g) for g in homology(circle)] == ["Z", "Z"]
    with pytest.raises(InputError):
        DeltaComplexData((1, 1, 1), (IntegerMatrix([[1]]), IntegerMatrix([[1]]))).validate()
    with pytest.raises(InputError):
        delta_complex_from_document({"cells_per_dim": [1]})


def test_homology_batch_with_workers(rp2):
    items = [rp2, bow_tie(), boundary_of_simplex(3), hollow_triangle()]
    sequential = [homology(K) for K in items]
    assert homology_batch(items, ZZ, jobs=2) == sequential
    assert homology_batch(items, ZZ, jobs=1) == sequential


def test_smith_normal_form_on_wider_entries():
    rng = np.random.default_rng(2718)
    for _ in range(12):
        M = IntegerMatrix(rng.integers(-9, 10, size=(6, 7)))
        snf = smith_normal_form(M)
        assert snf.U @ M @ snf.V == snf.D
        assert snf.invariant_factors == minor_gcd_invariants(M)


def test_torsion_is_sorted_after_taking_absolute_values():
    assert HomologyGroup(0, (-4, 2)).torsion == (2, 4)
    assert HomologyGroup(1, (-1, 3, -3)).torsion == (3, 3)


def _sample_complexes(rp2):
    complexes = [rp2, rp2_eleven(), bow_tie(), boundary_of_simplex(3), hollow_triangle(), pentagon_complex()]
    rng = random.Random(17)
    names = [f"v{i}" for i in range(7)]
    for _ in range(10):
        complexes.append(from_facets([rng.sample(names, rng.randint(2, 4)) for _ in range(rng.randint(2, 5))]))
    return complexes


def test_prime_field_betti_numbers_dominate_rational_ones(rp2):
    for K in _sample_complexes(rp2):
        rational = betti_numbers(homology(K, QQ))
        for p in (2, 3, 5):
            modular = betti_numbers(homology(K, Fp(p)))
            assert all(b_p >= b_q for b_p, b_q in zip(modular, rational))
        assert betti_numbers(homology(K, ZZ)) == rational


def test_homology_manifolds_are_pseudo_manifolds(rp2):
    detected = 0
    for K in _sample_complexes(rp2):
        if not is_r_homology_manifold(K, ZZ):
            continue
        detected += 1
        n = K.dimension
        for s in K.faces(n - 1):
            assert len([f for f in K.facets_containing(s) if len(f) == n + 1]) == 2
    assert detected >= 3

from fractions import Fraction

import pytest

from grassmann.exceptions import InconsistentArray, InfeasibleParameters
from grassmann.params import (ClassicalParams, IntersectionArray, Spectrum,
                              array_from_classical, characterization_scope,
                              check_moments, classical_eigenvalues,
                              classical_spectrum, clique_ext_grid_spectrum,
                              clique_extension_spectrum, grassmann_array,
                              grassmann_classical, grassmann_dimension,
                              grid_spectrum, multiplicity, p_table)


def test_classical_parameters_of_j2_4_2():
    cp = grassmann_classical(4, 2, 2)
    assert cp == ClassicalParams(2, 2, 2, 6)
    ia = array_from_classical(cp)
    assert str(ia) == '{18,8;1,9}'
    assert ia.valencies == (1, 18, 16)
    assert ia.v == 35
    assert ia.a(1) == 9


def test_classical_parameters_of_j3_4_2():
    cp = grassmann_classical(4, 2, 3)
    assert cp.beta == 12
    assert str(array_from_classical(cp)) == '{48,27;1,16}'


def test_classical_parameters_of_j2_6_3():
    ia = array_from_classical(grassmann_classical(6, 3, 2))
    assert str(ia) == '{98,72,32;1,9,49}'
    assert ia.v == 1395


@pytest.mark.parametrize('n, D, q', [
    (4, 2, 2), (5, 2, 2), (6, 3, 2), (6, 3, 3), (8, 4, 2), (9, 4, 5),
    (12, 6, 4), (20, 10, 2),
])
def test_two_array_formulas_agree(n, D, q):
    assert array_from_classical(grassmann_classical(n, D, q)) == \
        grassmann_array(n, D, q)


@pytest.mark.parametrize('n, D, q', [(4, 2, 2), (7, 3, 3), (8, 4, 2)])
def test_grassmann_dimension(n, D, q):
    assert grassmann_dimension(grassmann_classical(n, D, q)) == n


def test_grassmann_dimension_of_other_parameters():
    assert grassmann_dimension(ClassicalParams(3, 2, 0, 5)) is None
    assert grassmann_dimension(ClassicalParams(3, 2, 2, 5)) is None


def test_grassmann_classical_rejects():
    with pytest.raises(ValueError):
        grassmann_classical(5, 3, 2)
    with pytest.raises(ValueError):
        grassmann_classical(4, 1, 2)
    with pytest.raises(ValueError):
        grassmann_classical(4, 2, 1)


def test_infeasible_parameters():
    with pytest.raises(InfeasibleParameters):
        array_from_classical(ClassicalParams(2, 2, 2, 1))


def test_inconsistent_arrays():
    with pytest.raises(InconsistentArray):
        IntersectionArray((3,), (2,))
    with pytest.raises(InconsistentArray):
        IntersectionArray((3, 1), (1, 2))
    with pytest.raises(InconsistentArray):
        IntersectionArray((3, 2), (1,))


def test_p_table_of_j2_4_2():
    pt = p_table(grassmann_array(4, 2, 2))
    assert pt.D == 2
    assert pt[1, 1, 1] == 9
    assert pt[2, 1, 1] == 9
    assert pt[0, 2, 2] == 16
    assert pt[1, 1, 2] == 8
    assert pt[1, 2, 2] == 8
    assert pt[2, 1, 2] == 9
    assert pt[3, 0, 0] == 0
    assert pt.as_frame(0).values.tolist() == [[1, 0, 0], [0, 18, 0], [0, 0, 16]]


def test_p_table_row_sums_for_larger_diameter():
    ia = grassmann_array(10, 5, 2)
    pt = p_table(ia)
    for h in range(ia.D + 1):
        for i in range(ia.D + 1):
            assert sum(pt[h, i, j] for j in range(ia.D + 1)) == ia.valencies[i]


def test_classical_spectrum_j2_4_2():
    sp = classical_spectrum(4, 2, 2)
    assert sp.pairs == ((18, 1), (3, 14), (-3, 20))
    assert [Fraction(t) for t in sp.eigenvalues] == classical_eigenvalues(
        grassmann_classical(4, 2, 2))


def test_classical_spectrum_j3_4_2():
    assert classical_spectrum(4, 2, 3).pairs == ((48, 1), (8, 39), (-4, 90))


def test_classical_spectrum_j2_6_3():
    sp = classical_spectrum(6, 3, 2)
    assert sp.pairs == ((98, 1), (35, 62), (5, 588), (-7, 744))
    assert check_moments(sp, 1395, 98)


@pytest.mark.parametrize('n, D, q', [(6, 3, 2), (8, 4, 3), (11, 5, 2)])
def test_biggs_multiplicities_match_closed_form(n, D, q):
    ia = grassmann_array(n, D, q)
    for theta, mult in classical_spectrum(n, D, q).pairs:
        assert multiplicity(ia, theta) == mult


def test_spectrum_merges_and_sorts():
    sp = Spectrum(((-1, 2), (3, 1), (-1, 3), (0, 0)))
    assert sp.pairs == ((3, 1), (-1, 5))
    assert sp.v == 6
    assert sp.multiplicity(7) == 0
    assert str(sp) == '{[3]^1, [-1]^5}'
    with pytest.raises(ValueError):
        Spectrum(((1, -1),))


def test_grid_spectra():
    assert grid_spectrum(4).pairs == ((6, 1), (2, 6), (-2, 9))
    assert grid_spectrum(3, 7).pairs == ((8, 1), (5, 2), (1, 6), (-2, 12))
    assert clique_ext_grid_spectrum(2, 7).pairs == \
        ((25, 1), (11, 12), (-1, 49), (-3, 36))
    assert clique_extension_spectrum(grid_spectrum(4), 1) == grid_spectrum(4)


def test_characterization_scope():
    assert not characterization_scope(6, 3, 2)
    assert characterization_scope(18, 9, 2)
    assert characterization_scope(16, 8, 3)
    assert characterization_scope(12, 3, 2)
    assert not characterization_scope(9, 3, 2)


@pytest.mark.parametrize('ia', [
    grassmann_array(4, 2, 2), grassmann_array(4, 2, 3), grassmann_array(6, 3, 2),
    grassmann_array(7, 3, 2), grassmann_array(8, 4, 3), grassmann_array(10, 5, 2),
    IntersectionArray((6, 3), (1, 2)),
], ids=str)
def test_p_table_invariants(ia):
    pt = p_table(ia)
    D, k = ia.D, ia.valencies
    for h in range(D + 1):
        for i in range(D + 1):
            for j in range(D + 1):
                value = pt[h, i, j]
                assert value == pt[h, j, i]
                assert value >= 0
                if i + j < h or abs(i - j) > h:
                    assert value == 0, (h, i, j)
            if i <= h:
                assert pt[h, i, h - i] > 0
        assert pt[0, h, h] == k[h]


def test_cached_p_table_is_read_only():
    pt = p_table(grassmann_array(4, 2, 2))
    with pytest.raises(ValueError):
        pt.table[1, 1, 1] = 0
    assert p_table(grassmann_array(4, 2, 2))[1, 1, 1] == 9

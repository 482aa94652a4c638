import numpy as np
import pytest

from grassmann.exceptions import NotPrimePower, UnsupportedOrder
from grassmann.gf import make_field, rank, rref


@pytest.mark.parametrize('q', [2, 3, 4, 5, 7, 8, 9, 11, 13, 16])
def test_field_axioms(q):
    field = make_field(q)
    assert field.check_axioms() == []
    assert field.p ** field.e == q


def test_gf4_multiplication():
    field = make_field(4)
    # x * x = x + 1
    assert field.mul[2, 2] == 3
    assert field.add[2, 3] == 1
    assert field.inv[2] == 3


def test_gf9_multiplication():
    field = make_field(9)
    # x * x = -1
    assert field.mul[3, 3] == 2
    assert field.neg[1] == 2


def test_division():
    field = make_field(7)
    assert field.div(3, 5) == 2
    with pytest.raises(ZeroDivisionError):
        field.div(3, 0)


def test_rejected_orders():
    with pytest.raises(NotPrimePower):
        make_field(6)
    with pytest.raises(NotPrimePower):
        make_field(1)
    with pytest.raises(UnsupportedOrder):
        make_field(32)


def test_rref_over_gf2():
    r, A = rref([[1, 1, 0, 0], [0, 1, 1, 0]], make_field(2))
    assert r == 2
    assert A.tolist() == [[1, 0, 1, 0], [0, 1, 1, 0]]


def test_rref_over_gf3_drops_dependent_rows():
    r, A = rref([[2, 1], [1, 2]], make_field(3))
    assert r == 1
    assert A.tolist() == [[1, 2], [0, 0]]


def test_rref_is_canonical():
    field = make_field(4)
    M = np.array([[1, 2, 3, 0], [0, 1, 1, 2]])
    # another basis of the same row space
    other = np.array([field.add[M[0], field.mul[3, M[1]]], field.mul[2, M[1]]])
    assert (rref(M, field)[1] == rref(other, field)[1]).all()
    assert rank(np.vstack([M, other]), field) == 2


def test_rref_leaves_input_alone():
    M = np.array([[0, 1], [1, 1]])
    rref(M, make_field(2))
    assert M.tolist() == [[0, 1], [1, 1]]
    with pytest.raises(ValueError):
        rref([1, 0, 1], make_field(2))

import pytest

from grassmann.graphs import grassmann_graph, local_graph
from grassmann.params import grassmann_classical


@pytest.fixture(scope='session')
def j2_4_2():
    return grassmann_graph(4, 2, 2)


@pytest.fixture(scope='session')
def j3_4_2():
    return grassmann_graph(4, 2, 3)


@pytest.fixture(scope='session')
def j2_6_3():
    return grassmann_graph(6, 3, 2)


@pytest.fixture(scope='session')
def cp_6_3_2():
    return grassmann_classical(6, 3, 2)


@pytest.fixture(scope='session')
def local_6_3_2(j2_6_3):
    return local_graph(j2_6_3, 0)

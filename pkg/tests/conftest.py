from __future__ import annotations

import pytest

from f2q import h2_integral_path
from f2q.hamiltonian import build_hamiltonian, load_integrals, partition_commuting


@pytest.fixture(scope="session")
def h2_table():
    with open(h2_integral_path()) as fh:
        return load_integrals(fh)


@pytest.fixture(scope="session")
def h_bk(h2_table):
    return build_hamiltonian(h2_table, "bk")


@pytest.fixture(scope="session")
def h_jw(h2_table):
    return build_hamiltonian(h2_table, "jw")


@pytest.fixture(scope="session")
def part_bk(h_bk):
    return partition_commuting(h_bk)


@pytest.fixture(scope="session")
def part_jw(h_jw):
    return partition_commuting(h_jw)

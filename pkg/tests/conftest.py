import pytest

from srg12.constructions import build_bvls243, build_k3, build_paley9


@pytest.fixture(scope="session")
def paley9():
    return build_paley9()


@pytest.fixture(scope="session")
def k3():
    return build_k3()


@pytest.fixture(scope="session")
def bvls():
    return build_bvls243()


@pytest.fixture(scope="session")
def bvls_report(bvls):
    """Full identity ledger on the 243-vertex graph, computed once."""
    from srg12.identities import run_all_checks

    return run_all_checks(bvls, source="bvls243")

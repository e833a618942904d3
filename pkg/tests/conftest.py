import pytest

from knotfish.table import compute_all, load_bundled

# Anchor trefoil: positive chirality, writhe +3.
TREFOIL_PD = "PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]"
TREFOIL_GAUSS = "O1+U2+O3+U1+O2+U3+"


@pytest.fixture(scope="session")
def bundled_records():
    return load_bundled()


@pytest.fixture(scope="session")
def bundled_computed(bundled_records):
    records = compute_all(bundled_records)
    assert all(r.invariants is not None for r in records)
    return records


@pytest.fixture(scope="session")
def by_name(bundled_computed):
    return {r.name: r for r in bundled_computed}

import os

# every BetaElement built during the tests checks its strand variables
os.environ.setdefault("ZBETA_CHECK", "1")

import pytest  # noqa: E402

import zbeta.beta  # noqa: E402


@pytest.fixture(autouse=True, scope="session")
def _check_invariants():
    old = zbeta.beta.CHECK_INVARIANTS
    zbeta.beta.CHECK_INVARIANTS = True
    yield
    zbeta.beta.CHECK_INVARIANTS = old

import pytest

from cjm_sign_posets.core.guards import GuardLimits
from cjm_sign_posets.core.poset import build_poset, bounded_extension, Family


@pytest.fixture(autouse=True)
def _no_forced_guards(monkeypatch):
    monkeypatch.delenv(GuardLimits.FORCE_ENV_VAR, raising=False)


@pytest.fixture
def r31():
    return build_poset(3, 1, Family.R)


@pytest.fixture
def r31_hat(r31):
    return bounded_extension(r31)

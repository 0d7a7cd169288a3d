import pytest

from fanocalc.profiles import standard_models


@pytest.fixture(scope="session")
def models():
    """The six standard blowup models keyed by short name."""
    return standard_models()

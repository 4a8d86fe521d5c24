import pytest

from src.config.constants import Constants

ENV_KEYS = ['ZETA_PREC_BITS', 'ZETA_TERMS', 'ZETA_CHUNK_SIZE', 'ZETA_WORKERS', 'ZETA_EM_MAX_N',
            'ZETA_EM_MAX_J', 'LOG_LEVEL']


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: direct sums with a million terms (deselect with -m 'not slow')")


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Tests see the built-in defaults unless they set a variable themselves."""
    for key in ENV_KEYS:
        monkeypatch.delenv(key, raising=False)


@pytest.fixture
def bits() -> int:
    """Working precision for fast tests."""
    return 128


@pytest.fixture
def full_bits() -> int:
    return Constants.DEFAULT_PRECISION_BITS

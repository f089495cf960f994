import pytest

from sftoric.surfaces import BUNDLED, load_bundled


@pytest.fixture(scope="session")
def bundled():
    """name -> (fan, spec) for all sixteen bundled surfaces."""
    return {name: load_bundled(name) for name in BUNDLED}

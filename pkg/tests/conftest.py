import pytest

from wesym.codes import EnumeratorCache


@pytest.fixture(scope="session")
def cache(tmp_path_factory):
    """Shared enumerator cache so dual pairs are computed once per session."""
    return EnumeratorCache(str(tmp_path_factory.mktemp("enum-cache")))

import numpy as np
import pytest

from rmqbatch import backend


@pytest.fixture(params=["py", "c"])
def kern(request):
    """Run the test under each kernel backend; the compiled one skips if unbuilt."""
    name = request.param
    if name == "c" and not backend.compiled_available():
        pytest.skip("compiled backend not built")
    prev = backend.use(name)
    try:
        yield name
    finally:
        backend.use(prev)


@pytest.fixture
def rng():
    return np.random.default_rng(0xC0FFEE)

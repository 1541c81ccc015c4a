import sys

import numpy as np
import pytest
from hypothesis import settings

from dualmono import _backend

settings.register_profile("dualmono", derandomize=True, deadline=None, max_examples=60)
settings.load_profile("dualmono")

KERNELS = {"python": _backend.jacobi_eigh_py}
if _backend.jacobi_eigh_ext is not None:
    KERNELS["cython"] = _backend.jacobi_eigh_ext


@pytest.fixture(params=sorted(KERNELS))
def kernel(request):
    return KERNELS[request.param]


@pytest.fixture(params=sorted(KERNELS))
def backend(request, monkeypatch):
    """Route the package eigensolver through each available kernel."""
    monkeypatch.setattr(_backend, "jacobi_eigh", KERNELS[request.param])
    return request.param


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_hermitian(rng, n, rank=None):
    rank = n if rank is None else rank
    x = rng.standard_normal((n, rank)) + 1j * rng.standard_normal((n, rank))
    return x @ x.conj().T


def random_density(rng, n, rank=None):
    h = random_hermitian(rng, n, rank)
    return h / np.trace(h).real


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[number])

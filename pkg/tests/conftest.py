import time

import pytest

from ffcfrac.algebra import fq_ctx_make
from ffcfrac.kernels import available_backends


@pytest.fixture(params=available_backends())
def backend(request):
    """Pin the prime-field contexts used in tests to one kernel backend."""
    ctxs = [fq_ctx_make(p) for p in (3, 5, 7)]
    for F in ctxs:
        F.use_backend(request.param)
    yield request.param
    for F in ctxs:
        F._ops = None


@pytest.fixture
def F3():
    return fq_ctx_make(3)


@pytest.fixture
def F5():
    return fq_ctx_make(5)


@pytest.fixture
def F9():
    return fq_ctx_make(3, 2, fq_ctx_make(3).poly([1, 0, 1]))


_LIMIT = 120.0


def pytest_sessionstart(session):
    session.config._ffcf_t0 = time.perf_counter()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    dt = time.perf_counter() - config._ffcf_t0
    verdict = 'PASS' if dt < _LIMIT else 'FAIL'
    terminalreporter.write_line(f'{verdict} suite time: {dt:.1f}s (limit {_LIMIT:.0f}s)')


def pytest_sessionfinish(session, exitstatus):
    if time.perf_counter() - session.config._ffcf_t0 >= _LIMIT and exitstatus == 0:
        session.exitstatus = 1

import pytest

from mubkit import kernels

ACCEPTANCE_LINES = {}  # criterion number -> summary line


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # JIT compilation happens here, not inside timed acceptance checks
    kernels.quadratic_phase_sum(1, 1, 3, 6)
    kernels.overlap_extremes(__import__("numpy").eye(2, dtype=complex)[None])
    kernels.max_cliques_through_zero(kernels.coprime_adjacency(3), collect_all=True)
    kernels.max_cliques_through_zero(kernels.coprime_adjacency(3), collect_all=False)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section(f"acceptance criteria ({kernels.backend()} kernels)")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])

import itertools

import pytest

from flagquiver import borel, build_parabolic, build_root_system


def root_combo(system, coeffs):
    """Weight from integer coefficients over the simple roots."""
    total = [0] * system.ambient_dim
    for c, a in zip(coeffs, system.simple_roots):
        for k, x in enumerate(a.coords2):
            total[k] += c * x
    return system.weight(total)


def all_parabolics(system):
    for size in range(1, system.rank + 1):
        for sigma in itertools.combinations(range(1, system.rank + 1), size):
            yield build_parabolic(system, sigma)


@pytest.fixture(scope="session")
def sweep_parabolics():
    """Every parabolic of A1..A5, D4, D5, plus the E6/E7/E8 Borel cases."""
    out = []
    for rank in range(1, 6):
        out.extend(all_parabolics(build_root_system("A", rank)))
    for rank in (4, 5):
        out.extend(all_parabolics(build_root_system("D", rank)))
    for rank in (6, 7, 8):
        out.append(borel(build_root_system("E", rank)))
    return out

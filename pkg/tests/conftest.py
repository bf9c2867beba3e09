"""Shared helpers for the test suite."""

from __future__ import annotations

import math

from qqwalk import Quaternion

SQRT_HALF = 1.0 / math.sqrt(2.0)


def q(w=0.0, x=0.0, y=0.0, z=0.0) -> Quaternion:
    return Quaternion(w, x, y, z)


def assert_qclose(actual: Quaternion, expected: Quaternion, tol: float = 1e-12):
    dev = actual.max_dev(expected)
    assert dev <= tol, f"{actual} != {expected} (dev {dev:.3e} > {tol:.1e})"


def assert_mclose(actual, expected, tol: float = 1e-12):
    dev = actual.max_dev(expected)
    assert dev <= tol, f"{actual} != {expected} (dev {dev:.3e} > {tol:.1e})"


def assert_dist_close(actual: dict, expected: dict, tol: float = 1e-12):
    for x in sorted(set(actual) | set(expected)):
        a, e = actual.get(x, 0.0), expected.get(x, 0.0)
        assert abs(a - e) <= tol, f"site {x}: {a} != {e} (tol {tol:.1e})"


def max_dist_dev(one: dict, other: dict) -> float:
    sites = set(one) | set(other)
    return max(abs(one.get(x, 0.0) - other.get(x, 0.0)) for x in sites)

"""Seeded verification suites behind the ``verify`` CLI subcommand.

Each suite returns a list of report dicts
``{"check": name, "pass": bool, "max_residual": float, "params": {...}}``
and is deterministic for a fixed seed.
"""

from __future__ import annotations

from random import Random

from .coin import Coin, QMatrix2, preset_coin, random_unitary_coin
from .pathsum import decompose_pqrs, path_sum_bruteforce, path_sum_reduced
from .quaternion import DEFAULT_TOL, Quaternion
from .stationary import (
    PolarInitialState,
    build_eigenstate_flip,
    build_eigenstate_flipneg,
    check_two_step_uniformity,
    classify_measure,
    complexify_initial_state,
    quadratic_form_coefficients,
    right_eigen_check,
    verify_stationary,
)
from .walk import PeriodicState, distributions, random_unit_pair


def _report(check: str, passed: bool, residual: float, **params) -> dict:
    return {"check": check, "pass": bool(passed),
            "max_residual": float(residual), "params": params}


def _random_direction(rng: Random) -> Quaternion:
    while True:
        q = Quaternion(*(rng.gauss(0.0, 1.0) for _ in range(4)))
        if q.norm() > 1e-6:
            return q / q.norm()


def _random_imaginary_unit(rng: Random) -> Quaternion:
    while True:
        x, y, z = (rng.gauss(0.0, 1.0) for _ in range(3))
        norm = (x * x + y * y + z * z) ** 0.5
        if norm > 1e-6:
            return Quaternion(0.0, x / norm, y / norm, z / norm)


def suite_unitary(seed: int = 0, tol: float = DEFAULT_TOL) -> list[dict]:
    rng = Random(seed)
    coins = 50
    ident = QMatrix2.identity()
    worst_unitary = 0.0
    worst_rows = 0.0
    for _ in range(coins):
        coin = random_unitary_coin(rng)
        u, adj = coin.matrix, coin.matrix.adjoint()
        worst_unitary = max(worst_unitary,
                            (u @ adj).max_dev(ident), (adj @ u).max_dev(ident))
        gram_diag = (coin.a * coin.a.conj() + coin.b * coin.b.conj(),
                     coin.c * coin.c.conj() + coin.d * coin.d.conj())
        gram_off = coin.a * coin.c.conj() + coin.b * coin.d.conj()
        worst_rows = max(worst_rows,
                         gram_diag[0].max_dev(Quaternion(1.0)),
                         gram_diag[1].max_dev(Quaternion(1.0)),
                         gram_off.max_dev(Quaternion()))
    return [
        _report("random-coin-unitarity", worst_unitary <= tol, worst_unitary,
                coins=coins, seed=seed, tol=tol),
        _report("row-orthonormality", worst_rows <= tol, worst_rows,
                coins=coins, seed=seed, tol=tol),
    ]


def suite_pqrs(seed: int = 0, tol: float = DEFAULT_TOL) -> list[dict]:
    rng = Random(seed)
    reports = []

    table_worst = 0.0
    coins = [preset_coin("hadamard"), preset_coin("example-ijk")]
    coins += [random_unitary_coin(rng) for _ in range(10)]
    for coin in coins:
        for (left, right), (coeff, basis) in coin.product_table(tol).items():
            dev = (coeff * coin.basis(basis)).max_dev(
                coin.basis(left) @ coin.basis(right))
            table_worst = max(table_worst, dev)
    reports.append(_report("product-table", table_worst <= tol, table_worst,
                           coins=len(coins), seed=seed, tol=tol))

    oracle_worst = 0.0
    round_trip_worst = 0.0
    for coin in coins[:5]:
        for n in range(0, 7):
            for l in range(n + 1):
                brute = path_sum_bruteforce(coin, n, l, n - l)
                reduced = path_sum_reduced(coin, n, l, n - l)
                oracle_worst = max(oracle_worst, brute.max_dev(reduced))
                deco = decompose_pqrs(coin, brute, tol)
                round_trip_worst = max(round_trip_worst,
                                       deco.reconstruct(coin).max_dev(brute))
    reports.append(_report("word-reduction-oracle", oracle_worst <= tol,
                           oracle_worst, coins=5, max_n=6, seed=seed, tol=tol))
    reports.append(_report("pqrs-round-trip", round_trip_worst <= tol,
                           round_trip_worst, coins=5, max_n=6, seed=seed, tol=tol))

    coeff_worst = 0.0
    quat_coin = random_unitary_coin(rng)
    a, b, c = quat_coin.a, quat_coin.b, quat_coin.c
    deco = decompose_pqrs(quat_coin, path_sum_bruteforce(quat_coin, 4, 3, 1), tol)
    coeff_worst = max(coeff_worst,
                      deco.p.max_dev(a * b * c + b * c * a),
                      deco.q.max_dev(Quaternion()),
                      deco.r.max_dev(a * a * b),
                      deco.s.max_dev(c * a * a))
    complex_coin = random_unitary_coin(rng, entries="complex")
    a, b, c = complex_coin.a, complex_coin.b, complex_coin.c
    deco = decompose_pqrs(complex_coin, path_sum_bruteforce(complex_coin, 4, 3, 1), tol)
    coeff_worst = max(coeff_worst, deco.p.max_dev(2.0 * (a * b * c)))
    reports.append(_report("pqrs-known-coefficients", coeff_worst <= tol,
                           coeff_worst, seed=seed, tol=tol))
    return reports


def _random_b0_coin(rng: Random) -> Coin:
    a = _random_direction(rng)
    d = _random_direction(rng)
    return Coin(QMatrix2(a, Quaternion(), Quaternion(), d))


def _random_b0_state(rng: Random) -> PeriodicState:
    period = rng.randint(1, 8)
    kind = rng.randrange(3)
    if kind == 0:
        # fully random amplitudes
        pairs = [(Quaternion(*(rng.gauss(0.0, 1.0) for _ in range(4))),
                  Quaternion(*(rng.gauss(0.0, 1.0) for _ in range(4))))
                 for _ in range(period)]
        return PeriodicState(pairs)
    if kind == 1:
        # uniform site norm with parity-constant |psiL|: genuinely invariant
        # (needs an even period so the parity pattern survives the wrap)
        period = 2 * rng.randint(1, 4)
        left_even, left_odd = rng.uniform(0.1, 0.9), rng.uniform(0.1, 0.9)
        pairs = []
        for site in range(period):
            level = left_even if site % 2 == 0 else left_odd
            left = _random_direction(rng) * level
            right = _random_direction(rng) * (1.0 - level * level) ** 0.5
            pairs.append((left, right))
        return PeriodicState(pairs)
    # non-constant measure: invariance is expected to fail
    pairs = [(Quaternion(float(site + 1)), Quaternion(0.5))
             for site in range(period)]
    return PeriodicState(pairs)


def suite_stationary(seed: int = 0, tol: float = DEFAULT_TOL) -> list[dict]:
    rng = Random(seed)
    reports = []

    uniform_ok = True
    for _ in range(20):
        coin = random_unitary_coin(rng)
        spinor = random_unit_pair(rng)
        state = PeriodicState.constant(spinor)
        uniform_ok = uniform_ok and verify_stationary(coin, state, 30, tol)
    reports.append(_report("uniform-stationary", uniform_ok, 0.0,
                           coins=20, steps=30, seed=seed, tol=tol))

    flip = preset_coin("flip")
    candidate = build_eigenstate_flip(-1, [(Quaternion(1), Quaternion(1)),
                                           (Quaternion(2), Quaternion(2))])
    stationary = verify_stationary(flip, candidate.state, 20, tol)
    klass = classify_measure(candidate.state.measure(), window=8, tol=tol)
    witness_ok = stationary and klass.kind == "other"
    reports.append(_report("a0-witness", witness_ok, 0.0,
                           coin="flip", kind=klass.kind, steps=20, tol=tol))

    falsified = 0
    samples = 200
    for _ in range(samples):
        state = _random_b0_state(rng)
        coin = _random_b0_coin(rng)
        if not check_two_step_uniformity(coin, state, tol).implication_holds:
            falsified += 1
    reports.append(_report("b0-two-step-uniformity", falsified == 0,
                           float(falsified), samples=samples, seed=seed, tol=tol))
    return reports


def suite_eigen(seed: int = 0, tol: float = DEFAULT_TOL) -> list[dict]:
    rng = Random(seed)
    flip = preset_coin("flip")
    flip_neg = preset_coin("flip-neg")
    worst = 0.0
    ok = True
    for sign in (1, -1):
        coeffs = [(_random_direction(rng) * rng.uniform(0.5, 2.0),
                   _random_direction(rng) * rng.uniform(0.5, 2.0))
                  for _ in range(rng.randint(1, 3))]
        passed, residual = right_eigen_check(
            flip, build_eigenstate_flip(sign, coeffs), tol)
        ok = ok and passed
        worst = max(worst, residual)
    for _ in range(3):
        lam = _random_imaginary_unit(rng)
        coeffs = [(_random_direction(rng), _random_direction(rng))
                  for _ in range(rng.randint(1, 3))]
        passed, residual = right_eigen_check(
            flip_neg, build_eigenstate_flipneg(lam, coeffs), tol)
        ok = ok and passed
        worst = max(worst, residual)
    reports = [_report("right-eigenpair", ok, worst, seed=seed, tol=tol)]

    # the eigenvalue must act on the right; left action has to break for a
    # candidate whose amplitudes do not commute with lambda
    lam = Quaternion(0.0, 1.0, 0.0, 0.0)
    candidate = build_eigenstate_flipneg(lam, [(Quaternion(0, 0, 1), Quaternion(1))])
    evolved = candidate.state.evolve(flip_neg)
    right_dev = 0.0
    left_dev = 0.0
    for x in range(candidate.state.period):
        for idx in (0, 1):
            amp = candidate.state.amplitude(x)[idx]
            got = evolved.amplitude(x)[idx]
            right_dev = max(right_dev, got.max_dev(amp * lam))
            left_dev = max(left_dev, got.max_dev(lam * amp))
    guard_ok = right_dev <= tol and left_dev > 0.5
    reports.append(_report("right-vs-left-action", guard_ok, right_dev,
                           left_deviation=left_dev, tol=tol))
    return reports


def suite_theorem1(seed: int = 0, tol: float = DEFAULT_TOL) -> list[dict]:
    rng = Random(seed)
    worst = 0.0
    for _ in range(5):
        coin = random_unitary_coin(rng, entries="real")
        for _ in range(20):
            alpha, beta = random_unit_pair(rng)
            polar = PolarInitialState.from_pair(alpha, beta)
            twin = complexify_initial_state(polar)
            original = distributions(coin, (alpha, beta), 8)
            reduced = distributions(coin, twin, 8)
            for dist_a, dist_b in zip(original, reduced):
                for x in set(dist_a) | set(dist_b):
                    worst = max(worst, abs(dist_a.get(x, 0.0) - dist_b.get(x, 0.0)))
    reports = [_report("complexified-distribution-equality", worst <= tol,
                       worst, coins=5, states=20, max_n=8, seed=seed, tol=tol)]

    law_worst = 0.0
    for _ in range(5):
        coin = random_unitary_coin(rng, entries="real")
        alpha, beta = random_unit_pair(rng)
        dist = distributions(coin, (alpha, beta), 4)[4]
        overlap = (alpha * beta.conj()).real
        for l in range(5):
            m = 4 - l
            a_coef, b_coef, c_coef = quadratic_form_coefficients(coin, 4, l, m)
            predicted = (a_coef * alpha.norm_sq() + b_coef * beta.norm_sq()
                         + c_coef * overlap)
            law_worst = max(law_worst, abs(predicted - dist.get(m - l, 0.0)))
    reports.append(_report("position-law-coefficients", law_worst <= tol,
                           law_worst, coins=5, n=4, seed=seed, tol=tol))
    return reports


SUITES = {
    "unitary": suite_unitary,
    "pqrs": suite_pqrs,
    "stationary": suite_stationary,
    "eigen": suite_eigen,
    "theorem1": suite_theorem1,
}

SUITE_ORDER = ("unitary", "pqrs", "stationary", "eigen", "theorem1")


def run_suites(name: str, seed: int = 0, tol: float = DEFAULT_TOL) -> list[dict]:
    """Run one named suite, or all of them in a fixed order."""
    if name == "all":
        reports = []
        for suite_name in SUITE_ORDER:
            reports.extend(SUITES[suite_name](seed=seed, tol=tol))
        return reports
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; "
                         f"available: all, {', '.join(sorted(SUITES))}")
    return SUITES[name](seed=seed, tol=tol)

"""Right-eigenpair checks, stationary measures, and measure classification.

Eigenvalues of the evolution operator multiply the state from the RIGHT
(``E(psi) = psi * lambda``); over quaternions this is genuinely different
from left multiplication, and all checks here keep that order.  A valid
right eigenpair with unimodular eigenvalue makes the site measure
stationary under every power of the evolution.

Also here: the polar parameterization of initial spinors and the
reduction that replaces a quaternion initial spinor by a complex one with
the same position law for every real coin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from statistics import linear_regression

from .coin import Coin
from .pathsum import path_sum_reduced
from .quaternion import DEFAULT_TOL, Quaternion
from .walk import Measure, NotNormalizedError, PeriodicState, WalkState

#: Residual tolerance for the exponential-profile least-squares fit.
EXP_FIT_TOL = 1e-6


class ZeroCoefficientError(ValueError):
    """Eigenstate construction requires all coefficient pairs nonzero."""


class NotImaginaryUnitError(ValueError):
    """Eigenvalue must be a unit quaternion with zero real part."""


class WrongCoinClassError(ValueError):
    """Operation requires a coin from a different degeneracy class."""


class NotRealCoinError(ValueError):
    """Operation requires a coin with real entries."""


@dataclass
class EigenCandidate:
    """A periodic state proposed as a right eigenvector, with its eigenvalue."""

    state: PeriodicState
    eigenvalue: Quaternion

    def __post_init__(self):
        # unitarity of the evolution forces |lambda| = 1
        if abs(self.eigenvalue.norm() - 1.0) > DEFAULT_TOL:
            raise ValueError(f"eigenvalue must be unimodular, got |lambda| = "
                             f"{self.eigenvalue.norm()!r}")


def right_eigen_check(coin: Coin, candidate: EigenCandidate,
                      tol: float = DEFAULT_TOL) -> tuple[bool, float]:
    """Verify ``E(psi) = psi * lambda`` sitewise over one period.

    Componentwise this demands, at every site x,
    ``psiL(x) lambda = a psiL(x+1) + b psiR(x+1)`` and
    ``psiR(x) lambda = c psiL(x-1) + d psiR(x-1)``.

    Returns (passed, max residual).
    """
    lam = candidate.eigenvalue
    state = candidate.state
    a, b, c, d = coin.a, coin.b, coin.c, coin.d
    worst = 0.0
    for x in range(state.period):
        left, right = state.amplitude(x)
        up_left, up_right = state.amplitude(x + 1)
        down_left, down_right = state.amplitude(x - 1)
        res_left = (left * lam).max_dev(a * up_left + b * up_right)
        res_right = (right * lam).max_dev(c * down_left + d * down_right)
        worst = max(worst, res_left, res_right)
    return worst <= tol, worst


def _coerce_coeffs(coeffs) -> list[tuple[Quaternion, Quaternion]]:
    out = []
    for alpha, beta in coeffs:
        qa = alpha if isinstance(alpha, Quaternion) else Quaternion(alpha)
        qb = beta if isinstance(beta, Quaternion) else Quaternion(beta)
        if qa.norm_sq() == 0.0 or qb.norm_sq() == 0.0:
            raise ZeroCoefficientError("every coefficient pair must be nonzero")
        out.append((qa, qb))
    if not out:
        raise ValueError("need at least one coefficient pair")
    return out


def build_eigenstate_flip(lambda_sign: int, coeffs) -> EigenCandidate:
    """Right eigenvector of the coin [[0,1],[1,0]] for lambda = +1 or -1.

    ``coeffs`` lists (alpha, beta) pairs placed on consecutive even sites
    and repeated periodically; the odd sites interleave as
    ``psiL(2x-1) = beta_{2x} lambda`` and ``psiR(2x+1) = alpha_{2x} lambda``.
    The measure alternates ``|alpha_{2x}|^2 + |beta_{2x}|^2`` on even sites
    with ``|alpha_{2x}|^2 + |beta_{2x+2}|^2`` on odd ones, so unequal
    moduli give a stationary measure that is neither uniform nor an
    exponential profile.
    """
    if lambda_sign not in (1, -1):
        raise ValueError("lambda_sign must be +1 or -1")
    lam = Quaternion(float(lambda_sign))
    pairs = _coerce_coeffs(coeffs)
    k = len(pairs)
    sites: list[tuple[Quaternion, Quaternion]] = []
    for idx in range(k):
        alpha, beta = pairs[idx]
        next_beta = pairs[(idx + 1) % k][1]
        sites.append((alpha, beta))
        sites.append((next_beta * lam, alpha * lam))
    return EigenCandidate(PeriodicState(sites), lam)


def build_eigenstate_flipneg(eigenvalue: Quaternion, coeffs) -> EigenCandidate:
    """Right eigenvector of the coin [[0,1],[-1,0]].

    Admissible eigenvalues are exactly the unit imaginary quaternions
    (they square to -1, which the site recursion demands).  The layout
    matches :func:`build_eigenstate_flip` except for a sign:
    ``psiL(2x-1) = -beta_{2x} lambda``.
    """
    if (abs(eigenvalue.real) > DEFAULT_TOL
            or abs(eigenvalue.norm() - 1.0) > DEFAULT_TOL):
        raise NotImaginaryUnitError(
            f"eigenvalue must be a unit imaginary quaternion, got {eigenvalue}")
    pairs = _coerce_coeffs(coeffs)
    k = len(pairs)
    sites: list[tuple[Quaternion, Quaternion]] = []
    for idx in range(k):
        alpha, beta = pairs[idx]
        next_beta = pairs[(idx + 1) % k][1]
        sites.append((alpha, beta))
        sites.append((-(next_beta * eigenvalue), alpha * eigenvalue))
    return EigenCandidate(PeriodicState(sites), eigenvalue)


def verify_stationary(coin: Coin, state: WalkState, n_max: int,
                      tol: float = DEFAULT_TOL) -> bool:
    """True iff the site measure is unchanged for every step 1..n_max."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    reference = state.measure()
    current = state
    for _ in range(n_max):
        current = current.evolve(coin)
        if not current.measure().approx_eq(reference, tol):
            return False
    return True


@dataclass(frozen=True)
class TwoStepUniformityReport:
    """Outcome of the b=0 check [measure invariant for 2 steps] => [uniform]."""

    measure_invariant: bool
    measure_uniform: bool

    @property
    def implication_holds(self) -> bool:
        return (not self.measure_invariant) or self.measure_uniform


def check_two_step_uniformity(coin: Coin, state: PeriodicState,
                              tol: float = DEFAULT_TOL) -> TwoStepUniformityReport:
    """For a b=0 coin, test one state against the two-step uniformity law.

    For diagonal coins the left and right components shift rigidly, and a
    measure preserved for two consecutive steps is already uniform; this
    check reports both sides of that implication for a single state so a
    randomized sweep can look for counterexamples.

    Raises:
        WrongCoinClassError: coin is not in the b=0 class.
    """
    if coin.case(tol) != "b=0":
        raise WrongCoinClassError("two-step uniformity check needs a b=0 coin")
    reference = state.measure()
    invariant = True
    current = state
    for _ in range(2):
        current = current.evolve(coin)
        if not current.measure().approx_eq(reference, tol):
            invariant = False
            break
    uniform = (max(reference.values) - min(reference.values)) <= tol
    return TwoStepUniformityReport(measure_invariant=invariant,
                                   measure_uniform=uniform)


@dataclass
class MeasureClass:
    """Classification tag for a measure.

    ``kind`` is "uniform", "exponential", or "other"; symmetry under
    ``x -> -x`` is reported independently.  Parameter fields are filled
    for the kind they belong to and left None otherwise.
    """

    kind: str
    symmetric: bool
    uniform_value: float | None = None
    gamma: float | None = None
    c_plus: float | None = None
    c_zero: float | None = None
    c_minus: float | None = None

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind, "symmetric": self.symmetric}
        if self.kind == "uniform":
            out["c"] = self.uniform_value
        elif self.kind == "exponential":
            out.update(gamma=self.gamma, c_plus=self.c_plus,
                       c_zero=self.c_zero, c_minus=self.c_minus)
        return out


def _fit_exponential_side(mu: Measure, window: int, sign: int):
    """Fit log mu = log C - |x| log gamma on one side; None if it fails."""
    xs: list[float] = []
    ys: list[float] = []
    for step in range(1, window + 1):
        v = mu.value(sign * step)
        if v <= 0.0:
            return None
        xs.append(float(step))
        ys.append(math.log(v))
    if len(xs) < 3:
        return None
    slope, intercept = linear_regression(xs, ys)
    residual = max(abs(y - (slope * x + intercept)) for x, y in zip(xs, ys))
    if residual > EXP_FIT_TOL:
        return None
    gamma = math.exp(-slope)
    return gamma, math.exp(intercept)


def classify_measure(mu: Measure, window: int = 8,
                     tol: float = DEFAULT_TOL) -> MeasureClass:
    """Classify a measure as uniform, exponential-profile, or other.

    Uniform takes precedence over the exponential profile
    ``mu(x) = C_+- gamma^(-|x|)`` (fitted by least squares on log values,
    gamma in (0,1), residual within ``EXP_FIT_TOL``).  Periodic measures
    are never exponential by construction.  Symmetry is an independent
    flag checked across the window and the full represented support.
    """
    if mu.periodic:
        lo = min(mu.values)
        hi = max(mu.values)
    else:
        samples = [mu.value(x) for x in range(-window, window + 1)]
        lo, hi = min(samples), max(samples)
    uniform = (hi - lo) <= tol and lo > 0.0

    reach = max(window, mu.support_radius())
    symmetric = all(abs(mu.value(x) - mu.value(-x)) <= tol
                    for x in range(1, reach + 1))

    if uniform:
        mean = (lo + hi) / 2.0
        return MeasureClass("uniform", symmetric, uniform_value=mean)

    if not mu.periodic and mu.value(0) > 0.0:
        span = min(window, mu.support_radius())
        plus = _fit_exponential_side(mu, span, +1)
        minus = _fit_exponential_side(mu, span, -1)
        if plus is not None and minus is not None:
            gamma_plus, c_plus = plus
            gamma_minus, c_minus = minus
            gamma = (gamma_plus + gamma_minus) / 2.0
            if abs(gamma_plus - gamma_minus) <= EXP_FIT_TOL and 0.0 < gamma < 1.0:
                return MeasureClass("exponential", symmetric, gamma=gamma,
                                    c_plus=c_plus, c_zero=mu.value(0),
                                    c_minus=c_minus)

    return MeasureClass("other", symmetric)


def _axis_of(q: Quaternion) -> tuple[float, tuple[float, float, float]]:
    """Polar angle in [0, pi] and unit axis of a (possibly zero) quaternion."""
    im_norm = math.sqrt(q.x * q.x + q.y * q.y + q.z * q.z)
    if q.norm() == 0.0:
        return 0.0, (0.0, 0.0, 1.0)
    theta = math.atan2(im_norm, q.w)
    if im_norm == 0.0:
        # axis is unconstrained when the imaginary part vanishes
        return theta, (0.0, 0.0, 1.0)
    return theta, (q.x / im_norm, q.y / im_norm, q.z / im_norm)


@dataclass(frozen=True)
class PolarInitialState:
    """Polar form of a unit spinor (alpha, beta).

    ``alpha = (cos theta_a + n_a . (i,j,k) sin theta_a) cos xi`` and
    ``beta = (cos theta_b + n_b . (i,j,k) sin theta_b) sin xi`` with unit
    3-vectors n_a, n_b, ``xi in [0, pi/2]``.
    """

    theta_alpha: float
    theta_beta: float
    xi: float
    axis_alpha: tuple[float, float, float]
    axis_beta: tuple[float, float, float]

    @classmethod
    def from_pair(cls, alpha: Quaternion, beta: Quaternion) -> "PolarInitialState":
        total = alpha.norm_sq() + beta.norm_sq()
        if abs(total - 1.0) > 1e-9:
            raise NotNormalizedError(f"spinor has squared norm {total!r}")
        theta_a, axis_a = _axis_of(alpha)
        theta_b, axis_b = _axis_of(beta)
        xi = math.atan2(beta.norm(), alpha.norm())
        return cls(theta_a, theta_b, xi, axis_a, axis_b)

    def to_pair(self) -> tuple[Quaternion, Quaternion]:
        ca, sa = math.cos(self.theta_alpha), math.sin(self.theta_alpha)
        cb, sb = math.cos(self.theta_beta), math.sin(self.theta_beta)
        ax, ay, az = self.axis_alpha
        bx, by, bz = self.axis_beta
        scale_a = math.cos(self.xi)
        scale_b = math.sin(self.xi)
        alpha = Quaternion(ca, ax * sa, ay * sa, az * sa) * scale_a
        beta = Quaternion(cb, bx * sb, by * sb, bz * sb) * scale_b
        return alpha, beta


def effective_phase_cosine(polar: PolarInitialState) -> float:
    """cos(theta_a) cos(theta_b) + (n_a . n_b) sin(theta_a) sin(theta_b).

    This is the only trace the quaternion phases leave in the position law
    of a real-coin walk; its magnitude never exceeds 1.
    """
    overlap = sum(u * v for u, v in zip(polar.axis_alpha, polar.axis_beta))
    value = (math.cos(polar.theta_alpha) * math.cos(polar.theta_beta)
             + overlap * math.sin(polar.theta_alpha) * math.sin(polar.theta_beta))
    if abs(value) > 1.0 + 1e-9:
        raise ValueError(f"phase cosine {value!r} out of range; "
                         "axes are not unit vectors")
    return max(-1.0, min(1.0, value))


def complexify_initial_state(polar: PolarInitialState) -> tuple[Quaternion, Quaternion]:
    """Complex spinor with the same position law for every real coin.

    The replacement keeps the moduli (via xi) and encodes the whole phase
    content in one relative angle whose cosine matches
    :func:`effective_phase_cosine`.  Convention: the alpha phase is set to
    0 and the beta phase to ``-arccos`` of that cosine.
    """
    k = effective_phase_cosine(polar)
    theta_beta = -math.acos(k)
    alpha = Quaternion(math.cos(polar.xi))
    beta = Quaternion(math.cos(theta_beta) * math.sin(polar.xi),
                      math.sin(theta_beta) * math.sin(polar.xi))
    return alpha, beta


def quadratic_form_coefficients(coin: Coin, n: int, l: int, m: int,
                                tol: float = DEFAULT_TOL) -> tuple[float, float, float]:
    """Coefficients (A, B, C) of the real-coin position law.

    For a coin with real entries the path sum at split (l, m) is a real
    matrix [[r11, r12], [r21, r22]], and for ANY quaternion initial spinor
    ``P(X_n = m - l) = A |alpha|^2 + B |beta|^2 + C Re(alpha conj(beta))``
    with A = r11^2 + r21^2, B = r12^2 + r22^2,
    C = 2 (r11 r12 + r21 r22).

    Raises:
        NotRealCoinError: some coin entry has a nonzero imaginary part.
    """
    if not coin.is_real(tol):
        raise NotRealCoinError("quadratic form coefficients require a real coin")
    xi = path_sum_reduced(coin, n, l, m)
    r11, r12 = xi.e11.w, xi.e12.w
    r21, r22 = xi.e21.w, xi.e22.w
    a_coef = r11 * r11 + r21 * r21
    b_coef = r12 * r12 + r22 * r22
    c_coef = 2.0 * (r11 * r12 + r21 * r22)
    return a_coef, b_coef, c_coef

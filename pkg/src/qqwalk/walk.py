"""Walker states on the integer line, one-step evolution, and distributions.

Two state representations cover everything at desk scale: a dense finite
window that grows by one site per step (walks started from a point), and a
periodic block of amplitudes (translation-structured states such as the
uniform state and the eigenstate constructions, which have infinite
support but finite description).  Evolution is exact in both.

The site amplitude is a pair (left component, right component); one step
sends ``psiL'(x) = a psiL(x+1) + b psiR(x+1)`` and
``psiR'(x) = c psiL(x-1) + d psiR(x-1)`` with coin entries multiplying
from the left.
"""

from __future__ import annotations

from .coin import Coin
from .quaternion import DEFAULT_TOL, Quaternion

#: Tolerance on | |alpha|^2 + |beta|^2 - 1 | for initial spinors.
NORM_TOL = 1e-9

AmplitudePair = tuple[Quaternion, Quaternion]

_ZERO = Quaternion()
_ZERO_PAIR: AmplitudePair = (_ZERO, _ZERO)


class NotNormalizedError(ValueError):
    """Initial spinor does not have unit norm."""


def _coerce_pairs(pairs) -> tuple[AmplitudePair, ...]:
    out = []
    for pair in pairs:
        left, right = pair
        if not isinstance(left, Quaternion) or not isinstance(right, Quaternion):
            raise TypeError("amplitudes must be Quaternion pairs")
        out.append((left, right))
    if not out:
        raise ValueError("state needs at least one amplitude pair")
    if all(l.norm_sq() == 0.0 and r.norm_sq() == 0.0 for l, r in out):
        raise ValueError("state must not be identically zero")
    return tuple(out)


class FiniteSupportState:
    """Amplitudes on a dense window ``[offset, offset + len)``; zero outside."""

    __slots__ = ("offset", "pairs")

    def __init__(self, offset: int, pairs):
        self.offset = int(offset)
        self.pairs = _coerce_pairs(pairs)

    @classmethod
    def delta(cls, spinor: AmplitudePair, site: int = 0) -> "FiniteSupportState":
        """State concentrated on a single site."""
        return cls(site, [spinor])

    def sites(self) -> range:
        return range(self.offset, self.offset + len(self.pairs))

    def amplitude(self, x: int) -> AmplitudePair:
        idx = x - self.offset
        if 0 <= idx < len(self.pairs):
            return self.pairs[idx]
        return _ZERO_PAIR

    def evolve(self, coin: Coin) -> "FiniteSupportState":
        """One time step; the support grows by one site on each end."""
        a, b = coin.a, coin.b
        c, d = coin.c, coin.d
        old = self.pairs
        n = len(old)
        new_pairs = []
        for i in range(n + 2):
            # new window starts at offset-1: source for the left component
            # sits at old index i, for the right component at old index i-2
            if i < n:
                left_src = old[i]
                new_left = a * left_src[0] + b * left_src[1]
            else:
                new_left = _ZERO
            if 2 <= i:
                right_src = old[i - 2]
                new_right = c * right_src[0] + d * right_src[1]
            else:
                new_right = _ZERO
            new_pairs.append((new_left, new_right))
        return FiniteSupportState(self.offset - 1, new_pairs)

    def measure(self) -> "Measure":
        return Measure([l.norm_sq() + r.norm_sq() for l, r in self.pairs],
                       offset=self.offset)

    def norm_sq(self) -> float:
        return sum(l.norm_sq() + r.norm_sq() for l, r in self.pairs)

    def to_json(self) -> dict:
        return {"kind": "finite", "offset": self.offset,
                "amplitudes": [[l.to_json(), r.to_json()] for l, r in self.pairs]}

    def __repr__(self):
        return f"FiniteSupportState(offset={self.offset}, sites={len(self.pairs)})"


class PeriodicState:
    """One period of a state with ``psi(x) = pairs[x mod period]``."""

    __slots__ = ("pairs",)

    def __init__(self, pairs):
        self.pairs = _coerce_pairs(pairs)

    @classmethod
    def constant(cls, spinor: AmplitudePair) -> "PeriodicState":
        """The same spinor at every site (period 1)."""
        return cls([spinor])

    @property
    def period(self) -> int:
        return len(self.pairs)

    def amplitude(self, x: int) -> AmplitudePair:
        return self.pairs[x % len(self.pairs)]

    def evolve(self, coin: Coin) -> "PeriodicState":
        """One time step; shift-equivariance keeps the period fixed."""
        a, b = coin.a, coin.b
        c, d = coin.c, coin.d
        old = self.pairs
        p = len(old)
        new_pairs = []
        for i in range(p):
            left_src = old[(i + 1) % p]
            right_src = old[(i - 1) % p]
            new_pairs.append((a * left_src[0] + b * left_src[1],
                              c * right_src[0] + d * right_src[1]))
        return PeriodicState(new_pairs)

    def measure(self) -> "Measure":
        return Measure([l.norm_sq() + r.norm_sq() for l, r in self.pairs],
                       periodic=True)

    def to_json(self) -> dict:
        return {"kind": "periodic", "period": self.period,
                "amplitudes": [[l.to_json(), r.to_json()] for l, r in self.pairs]}

    def __repr__(self):
        return f"PeriodicState(period={self.period})"


WalkState = FiniteSupportState | PeriodicState


def state_from_json(data: dict) -> WalkState:
    if not isinstance(data, dict) or "kind" not in data:
        raise ValueError("state JSON needs a 'kind' tag")
    pairs = [(Quaternion.from_json(l), Quaternion.from_json(r))
             for l, r in data.get("amplitudes", [])]
    if data["kind"] == "finite":
        return FiniteSupportState(int(data.get("offset", 0)), pairs)
    if data["kind"] == "periodic":
        if "period" in data and int(data["period"]) != len(pairs):
            raise ValueError("declared period does not match the amplitude count")
        return PeriodicState(pairs)
    raise ValueError(f"unknown state kind {data['kind']!r}")


class Measure:
    """Nonnegative weight per site, on a finite window or one period."""

    __slots__ = ("values", "offset", "periodic")

    def __init__(self, values, offset: int = 0, periodic: bool = False):
        vals = tuple(float(v) for v in values)
        if not vals:
            raise ValueError("measure needs at least one value")
        if any(v < 0.0 for v in vals):
            raise ValueError("measure values must be nonnegative")
        if all(v == 0.0 for v in vals):
            raise ValueError("measure must not be identically zero")
        self.values = vals
        self.offset = int(offset)
        self.periodic = bool(periodic)

    @classmethod
    def from_sites(cls, weights: dict[int, float]) -> "Measure":
        """Finite measure from a site -> weight map (gaps filled with 0)."""
        lo, hi = min(weights), max(weights)
        return cls([weights.get(x, 0.0) for x in range(lo, hi + 1)], offset=lo)

    def value(self, x: int) -> float:
        if self.periodic:
            return self.values[x % len(self.values)]
        idx = x - self.offset
        if 0 <= idx < len(self.values):
            return self.values[idx]
        return 0.0

    def sites(self) -> range:
        if self.periodic:
            return range(len(self.values))
        return range(self.offset, self.offset + len(self.values))

    def total(self) -> float:
        """Sum over the window (finite) or one period (periodic)."""
        return sum(self.values)

    def support_radius(self) -> int:
        if self.periodic:
            return len(self.values)
        return max(abs(self.offset), abs(self.offset + len(self.values) - 1))

    def approx_eq(self, other: "Measure", tol: float = DEFAULT_TOL) -> bool:
        if self.periodic != other.periodic:
            raise ValueError("cannot compare periodic and finite measures")
        if self.periodic:
            if len(self.values) != len(other.values):
                raise ValueError("periodic measures have different periods")
            return all(abs(u - v) <= tol for u, v in zip(self.values, other.values))
        lo = min(self.offset, other.offset)
        hi = max(self.offset + len(self.values), other.offset + len(other.values))
        return all(abs(self.value(x) - other.value(x)) <= tol for x in range(lo, hi))

    def to_json(self) -> dict:
        if self.periodic:
            return {"kind": "periodic", "period": len(self.values),
                    "values": list(self.values)}
        return {"kind": "finite", "offset": self.offset, "values": list(self.values)}

    def __repr__(self):
        tag = "periodic" if self.periodic else f"offset={self.offset}"
        return f"Measure({tag}, values={list(self.values)})"


def measure_from_json(data: dict) -> Measure:
    if not isinstance(data, dict) or "kind" not in data:
        raise ValueError("measure JSON needs a 'kind' tag")
    if data["kind"] == "finite":
        return Measure(data["values"], offset=int(data.get("offset", 0)))
    if data["kind"] == "periodic":
        return Measure(data["values"], periodic=True)
    raise ValueError(f"unknown measure kind {data['kind']!r}")


def _check_normalized(spinor: AmplitudePair) -> None:
    total = spinor[0].norm_sq() + spinor[1].norm_sq()
    if abs(total - 1.0) > NORM_TOL:
        raise NotNormalizedError(f"initial spinor has squared norm {total!r}")


def distributions(coin: Coin, spinor: AmplitudePair, n_max: int) -> list[dict[int, float]]:
    """Position laws for times 0..n_max of the walk started at the origin.

    Each entry maps site -> probability; exactly-zero sites are omitted,
    so the support automatically reflects the parity of the step count.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    _check_normalized(spinor)
    state = FiniteSupportState.delta(spinor)
    out = []
    for _ in range(n_max + 1):
        mu = state.measure()
        out.append({x: mu.value(x) for x in mu.sites() if mu.value(x) != 0.0})
        state = state.evolve(coin)
    return out


def distribution(coin: Coin, spinor: AmplitudePair, n: int) -> dict[int, float]:
    """P(X_n = x) for the walk started from ``spinor`` at the origin."""
    return distributions(coin, spinor, n)[n]


def hadamard_three_step_distribution(spinor: AmplitudePair) -> dict[int, float]:
    """Closed-form three-step position law of the Hadamard walk.

    With initial spinor (alpha, beta):
    P(-3) = |alpha+beta|^2/8, P(-1) = (4|alpha|^2 + |alpha+beta|^2)/8,
    P(1) = (4|beta|^2 + |alpha-beta|^2)/8, P(3) = |alpha-beta|^2/8.
    """
    _check_normalized(spinor)
    alpha, beta = spinor
    plus = (alpha + beta).norm_sq()
    minus = (alpha - beta).norm_sq()
    law = {
        -3: plus / 8.0,
        -1: (4.0 * alpha.norm_sq() + plus) / 8.0,
        1: (4.0 * beta.norm_sq() + minus) / 8.0,
        3: minus / 8.0,
    }
    return {x: p for x, p in law.items() if p != 0.0}


def random_unit_pair(rng) -> AmplitudePair:
    """Uniform random spinor with |alpha|^2 + |beta|^2 = 1."""
    while True:
        comps = [rng.gauss(0.0, 1.0) for _ in range(8)]
        norm = sum(v * v for v in comps) ** 0.5
        if norm > 1e-6:
            alpha = Quaternion(*comps[:4]) / norm
            beta = Quaternion(*comps[4:]) / norm
            return (alpha, beta)

"""2x2 quaternion matrices and the unitary coin with its split-operator algebra.

A coin ``U = [[a, b], [c, d]]`` splits into a top-row part P (one step to
the left) and a bottom-row part Q (one step to the right).  Together with
the row-swapped mates R and S, products of any two of {P, Q, R, S}
collapse to a single coin entry times another basis element.  That closed
multiplication table is what makes long products of step operators
reducible to one coefficient and one basis letter.
"""

from __future__ import annotations

import json
import math
import os
from random import Random

from .quaternion import DEFAULT_TOL, Quaternion, parse_quaternion


class NotUnitaryError(ValueError):
    """A coin matrix failed the unitarity check."""


class TableMismatchError(ValueError):
    """A product-table entry disagreed with the direct matrix product."""


def _q(value) -> Quaternion:
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, (int, float)):
        return Quaternion(value)
    raise TypeError(f"expected a quaternion entry, got {type(value).__name__}")


class QMatrix2:
    """A 2x2 matrix with quaternion entries (row-major e11, e12, e21, e22)."""

    __slots__ = ("e11", "e12", "e21", "e22")

    def __init__(self, e11, e12, e21, e22):
        self.e11 = _q(e11)
        self.e12 = _q(e12)
        self.e21 = _q(e21)
        self.e22 = _q(e22)

    @classmethod
    def identity(cls) -> "QMatrix2":
        return cls(Quaternion(1.0), Quaternion(), Quaternion(), Quaternion(1.0))

    @classmethod
    def zeros(cls) -> "QMatrix2":
        return cls(Quaternion(), Quaternion(), Quaternion(), Quaternion())

    def entries(self) -> tuple[Quaternion, Quaternion, Quaternion, Quaternion]:
        return (self.e11, self.e12, self.e21, self.e22)

    def __add__(self, other):
        if isinstance(other, QMatrix2):
            return QMatrix2(self.e11 + other.e11, self.e12 + other.e12,
                            self.e21 + other.e21, self.e22 + other.e22)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, QMatrix2):
            return QMatrix2(self.e11 - other.e11, self.e12 - other.e12,
                            self.e21 - other.e21, self.e22 - other.e22)
        return NotImplemented

    def __matmul__(self, other):
        # entry products keep the left factor's entries on the left
        if isinstance(other, QMatrix2):
            return QMatrix2(
                self.e11 * other.e11 + self.e12 * other.e21,
                self.e11 * other.e12 + self.e12 * other.e22,
                self.e21 * other.e11 + self.e22 * other.e21,
                self.e21 * other.e12 + self.e22 * other.e22,
            )
        return NotImplemented

    def __rmul__(self, coeff):
        """Left scalar multiple ``coeff * M``: every entry is premultiplied."""
        if isinstance(coeff, (Quaternion, int, float)):
            c = _q(coeff)
            return QMatrix2(c * self.e11, c * self.e12, c * self.e21, c * self.e22)
        return NotImplemented

    def adjoint(self) -> "QMatrix2":
        """Conjugate transpose."""
        return QMatrix2(self.e11.conj(), self.e21.conj(),
                        self.e12.conj(), self.e22.conj())

    def apply(self, pair: tuple[Quaternion, Quaternion]) -> tuple[Quaternion, Quaternion]:
        """Matrix-vector product with entries acting from the left."""
        top, bottom = pair
        return (self.e11 * top + self.e12 * bottom,
                self.e21 * top + self.e22 * bottom)

    def max_dev(self, other: "QMatrix2") -> float:
        return max(self.e11.max_dev(other.e11), self.e12.max_dev(other.e12),
                   self.e21.max_dev(other.e21), self.e22.max_dev(other.e22))

    def approx_eq(self, other: "QMatrix2", tol: float = DEFAULT_TOL) -> bool:
        return self.max_dev(other) <= tol

    def __eq__(self, other):
        if isinstance(other, QMatrix2):
            return self.entries() == other.entries()
        return NotImplemented

    def __hash__(self):
        return hash(self.entries())

    def is_unitary(self, tol: float = DEFAULT_TOL) -> bool:
        """True iff both M M* and M* M are the identity within ``tol``.

        Either product implies the other for square quaternion matrices;
        checking both is a cheap guard against arithmetic slips.
        """
        ident = QMatrix2.identity()
        adj = self.adjoint()
        return ((self @ adj).max_dev(ident) <= tol
                and (adj @ self).max_dev(ident) <= tol)

    def to_json(self) -> list[list[list[float]]]:
        return [[self.e11.to_json(), self.e12.to_json()],
                [self.e21.to_json(), self.e22.to_json()]]

    @classmethod
    def from_json(cls, data) -> "QMatrix2":
        if (not isinstance(data, (list, tuple)) or len(data) != 2
                or any(len(row) != 2 for row in data)):
            raise ValueError("expected a 2x2 nested array of quaternions")
        return cls(Quaternion.from_json(data[0][0]), Quaternion.from_json(data[0][1]),
                   Quaternion.from_json(data[1][0]), Quaternion.from_json(data[1][1]))

    def __repr__(self):
        return (f"QMatrix2([[{self.e11}, {self.e12}], "
                f"[{self.e21}, {self.e22}]])")


# Closed multiplication table of the split basis: (left, right) -> (coin
# entry premultiplying the result, result letter).  Holds for any a,b,c,d.
PRODUCT_RULES: dict[tuple[str, str], tuple[str, str]] = {
    ("P", "P"): ("a", "P"), ("P", "Q"): ("b", "R"),
    ("P", "R"): ("a", "R"), ("P", "S"): ("b", "P"),
    ("Q", "P"): ("c", "S"), ("Q", "Q"): ("d", "Q"),
    ("Q", "R"): ("c", "Q"), ("Q", "S"): ("d", "S"),
    ("R", "P"): ("c", "P"), ("R", "Q"): ("d", "R"),
    ("R", "R"): ("c", "R"), ("R", "S"): ("d", "P"),
    ("S", "P"): ("a", "S"), ("S", "Q"): ("b", "Q"),
    ("S", "R"): ("a", "Q"), ("S", "S"): ("b", "S"),
}


class Coin:
    """A validated unitary coin together with its split parts.

    Attributes:
        matrix: the unitary ``[[a, b], [c, d]]``.
        p: ``[[a, b], [0, 0]]`` (moves the walker left).
        q: ``[[0, 0], [c, d]]`` (moves the walker right).
        r: ``[[c, d], [0, 0]]`` and s: ``[[0, 0], [a, b]]``, the mates that
           close {P, Q, R, S} under multiplication.
    """

    __slots__ = ("matrix", "p", "q", "r", "s")

    def __init__(self, matrix: QMatrix2, tol: float = DEFAULT_TOL):
        if not matrix.is_unitary(tol):
            raise NotUnitaryError("coin matrix is not unitary within tolerance "
                                  f"{tol!r}")
        zero = Quaternion()
        self.matrix = matrix
        self.p = QMatrix2(matrix.e11, matrix.e12, zero, zero)
        self.q = QMatrix2(zero, zero, matrix.e21, matrix.e22)
        self.r = QMatrix2(matrix.e21, matrix.e22, zero, zero)
        self.s = QMatrix2(zero, zero, matrix.e11, matrix.e12)

    @property
    def a(self) -> Quaternion:
        return self.matrix.e11

    @property
    def b(self) -> Quaternion:
        return self.matrix.e12

    @property
    def c(self) -> Quaternion:
        return self.matrix.e21

    @property
    def d(self) -> Quaternion:
        return self.matrix.e22

    def entry(self, name: str) -> Quaternion:
        try:
            return {"a": self.matrix.e11, "b": self.matrix.e12,
                    "c": self.matrix.e21, "d": self.matrix.e22}[name]
        except KeyError:
            raise ValueError(f"unknown coin entry {name!r}") from None

    def basis(self, letter: str) -> QMatrix2:
        try:
            return {"P": self.p, "Q": self.q, "R": self.r, "S": self.s}[letter]
        except KeyError:
            raise ValueError(f"unknown basis letter {letter!r}") from None

    def case(self, tol: float = DEFAULT_TOL) -> str:
        """Degeneracy class: ``"a=0"``, ``"b=0"``, or ``"abcd!=0"``.

        Unitarity makes these three cases exhaustive: a zero entry forces
        the rest of its row and column structure.
        """
        if self.a.norm() <= tol:
            return "a=0"
        if self.b.norm() <= tol:
            return "b=0"
        return "abcd!=0"

    def is_real(self, tol: float = DEFAULT_TOL) -> bool:
        return all(e.imag.norm() <= tol for e in self.matrix.entries())

    def product_table(self, tol: float = DEFAULT_TOL) -> dict[tuple[str, str], tuple[Quaternion, str]]:
        """The 16 products of {P, Q, R, S} as (coefficient, basis letter).

        Every entry is re-verified against the direct matrix product.

        Raises:
            TableMismatchError: if any entry deviates beyond ``tol``
                (a corrupted or non-unitary coin).
        """
        table = {}
        for (left, right), (entry_name, result) in PRODUCT_RULES.items():
            coeff = self.entry(entry_name)
            direct = self.basis(left) @ self.basis(right)
            dev = (coeff * self.basis(result)).max_dev(direct)
            if dev > tol:
                raise TableMismatchError(
                    f"product {left}{right} deviates from {entry_name}{result} "
                    f"by {dev!r}")
            table[(left, right)] = (coeff, result)
        return table

    def to_json(self) -> dict:
        return {"a": self.a.to_json(), "b": self.b.to_json(),
                "c": self.c.to_json(), "d": self.d.to_json()}

    def __repr__(self):
        return f"Coin({self.matrix!r})"


_SQRT_HALF = 1.0 / math.sqrt(2.0)


def _preset_matrices() -> dict[str, QMatrix2]:
    one, i, j, k = Quaternion(1), Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1)
    return {
        "hadamard": QMatrix2(_SQRT_HALF * one, _SQRT_HALF * one,
                             _SQRT_HALF * one, -_SQRT_HALF * one),
        "example-ijk": QMatrix2(_SQRT_HALF * one, _SQRT_HALF * i,
                                _SQRT_HALF * j, _SQRT_HALF * k),
        "flip": QMatrix2(0, 1, 1, 0),
        "flip-neg": QMatrix2(0, 1, -1, 0),
    }


PRESET_NAMES = tuple(sorted(_preset_matrices()))


def preset_coin(name: str) -> Coin:
    matrices = _preset_matrices()
    if name not in matrices:
        raise ValueError(f"unknown coin preset {name!r}; "
                         f"available: {', '.join(PRESET_NAMES)}")
    return Coin(matrices[name])


def coin_from_json(data: dict) -> Coin:
    """Build a coin from ``{"a": [...], "b": [...], "c": [...], "d": [...]}``.

    Entry values may be 4-arrays or human-readable text like ``"1+0i+0j+0k"``.
    """
    if not isinstance(data, dict):
        raise ValueError(f"expected a coin object, got {type(data).__name__}")
    missing = {"a", "b", "c", "d"} - data.keys()
    if missing:
        raise ValueError(f"coin spec is missing entries: {', '.join(sorted(missing))}")
    a, b, c, d = (Quaternion.from_json(data[key]) for key in ("a", "b", "c", "d"))
    return Coin(QMatrix2(a, b, c, d))


def coin_from_spec(spec: str) -> Coin:
    """Resolve a preset name, inline JSON object, or path to a JSON file."""
    if spec in _preset_matrices():
        return preset_coin(spec)
    if spec.lstrip().startswith("{"):
        return coin_from_json(json.loads(spec))
    if os.path.exists(spec):
        with open(spec, encoding="utf-8") as fh:
            return coin_from_json(json.load(fh))
    raise ValueError(f"coin spec {spec!r} is not a preset, inline JSON, or file")


def _random_entry(rng: Random, entries: str) -> Quaternion:
    if entries == "real":
        return Quaternion(rng.gauss(0.0, 1.0))
    if entries == "complex":
        return Quaternion(rng.gauss(0.0, 1.0), rng.gauss(0.0, 1.0))
    if entries == "quaternion":
        return Quaternion(rng.gauss(0.0, 1.0), rng.gauss(0.0, 1.0),
                          rng.gauss(0.0, 1.0), rng.gauss(0.0, 1.0))
    raise ValueError(f"unknown entry field {entries!r}")


def random_unitary_coin(rng: Random, entries: str = "quaternion") -> Coin:
    """Draw a Haar-ish random unitary coin by Gram-Schmidt on gaussian rows.

    Row inner product is ``<u, v> = u1 conj(v1) + u2 conj(v2)`` with the
    projection coefficient applied on the left of the subtracted row, so
    orthonormality holds in the noncommutative sense the evolution needs.
    ``entries`` restricts components to "real", "complex" (w, x only), or
    full "quaternion"; Gram-Schmidt stays inside the chosen subfield.
    """
    while True:
        g1 = (_random_entry(rng, entries), _random_entry(rng, entries))
        g2 = (_random_entry(rng, entries), _random_entry(rng, entries))
        n1 = math.sqrt(g1[0].norm_sq() + g1[1].norm_sq())
        if n1 < 1e-6:
            continue
        v1 = (g1[0] / n1, g1[1] / n1)
        overlap = g2[0] * v1[0].conj() + g2[1] * v1[1].conj()
        w = (g2[0] - overlap * v1[0], g2[1] - overlap * v1[1])
        n2 = math.sqrt(w[0].norm_sq() + w[1].norm_sq())
        if n2 < 1e-6:
            continue
        return Coin(QMatrix2(v1[0], v1[1], w[0] / n2, w[1] / n2))

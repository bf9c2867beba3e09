"""Coin algebra: unitarity, the P/Q/R/S split, and the product table."""

from __future__ import annotations

import json
import math
from random import Random

import pytest

from qqwalk import (
    Coin,
    NotUnitaryError,
    QMatrix2,
    Quaternion,
    TableMismatchError,
    coin_from_json,
    coin_from_spec,
    preset_coin,
    random_unitary_coin,
)

from conftest import SQRT_HALF, assert_mclose, assert_qclose, q


def random_matrix(rng: Random) -> QMatrix2:
    return QMatrix2(*(Quaternion(*(rng.gauss(0, 1) for _ in range(4)))
                      for _ in range(4)))


def test_identity_matmul():
    m = random_matrix(Random(1))
    ident = QMatrix2.identity()
    assert (ident @ m) == m
    assert (m @ ident) == m


def test_hadamard_involution():
    h = preset_coin("hadamard").matrix
    assert_mclose(h @ h, QMatrix2.identity())


def test_adjoint_involution():
    m = random_matrix(Random(2))
    assert m.adjoint().adjoint() == m


def test_adjoint_antihomomorphism():
    rng = Random(3)
    for _ in range(20):
        m, n = random_matrix(rng), random_matrix(rng)
        assert_mclose((m @ n).adjoint(), n.adjoint() @ m.adjoint())


def test_is_unitary():
    assert preset_coin("hadamard").matrix.is_unitary(1e-10)
    assert preset_coin("example-ijk").matrix.is_unitary(1e-10)
    shear = QMatrix2(1, 1, 0, 1)
    assert not shear.is_unitary(1e-10)
    with pytest.raises(NotUnitaryError):
        Coin(shear)


def test_example_ijk_rows_orthonormal():
    coin = preset_coin("example-ijk")
    assert_qclose(coin.a * coin.a.conj() + coin.b * coin.b.conj(), q(1))
    assert_qclose(coin.c * coin.c.conj() + coin.d * coin.d.conj(), q(1))
    assert_qclose(coin.a * coin.c.conj() + coin.b * coin.d.conj(), q(0))


def test_split_hadamard():
    coin = preset_coin("hadamard")
    assert coin.p == QMatrix2(SQRT_HALF, SQRT_HALF, 0, 0)
    assert coin.q == QMatrix2(0, 0, SQRT_HALF, -SQRT_HALF)


def test_split_example_ijk():
    coin = preset_coin("example-ijk")
    assert coin.p == QMatrix2(q(SQRT_HALF), q(0, SQRT_HALF), q(), q())
    assert coin.q == QMatrix2(q(), q(), q(0, 0, SQRT_HALF), q(0, 0, 0, SQRT_HALF))


def test_split_flip():
    coin = preset_coin("flip")
    assert coin.p == QMatrix2(0, 1, 0, 0)
    assert coin.q == QMatrix2(0, 0, 1, 0)


def test_split_sums_to_coin_exactly():
    rng = Random(4)
    for coin in (preset_coin("hadamard"), preset_coin("example-ijk"),
                 random_unitary_coin(rng)):
        assert (coin.p + coin.q) == coin.matrix


def test_p_squared_is_a_times_p():
    rng = Random(5)
    for coin in (preset_coin("hadamard"), random_unitary_coin(rng)):
        assert_mclose(coin.p @ coin.p, coin.a * coin.p)


def test_product_table_entries():
    h = preset_coin("hadamard")
    table = h.product_table()
    coeff, basis = table[("P", "Q")]
    assert basis == "R"
    assert_qclose(coeff, q(SQRT_HALF))

    ijk = preset_coin("example-ijk")
    coeff, basis = ijk.product_table()[("Q", "P")]
    assert basis == "S"
    assert_qclose(coeff, q(0, 0, SQRT_HALF))
    assert_mclose(ijk.q @ ijk.p, coeff * ijk.s)


@pytest.mark.parametrize("name", ["hadamard", "example-ijk", "flip", "flip-neg"])
def test_product_table_matches_products_presets(name):
    coin = preset_coin(name)
    for (left, right), (coeff, basis) in coin.product_table(1e-10).items():
        direct = coin.basis(left) @ coin.basis(right)
        assert_mclose(coeff * coin.basis(basis), direct, 1e-10)


def test_product_table_random_coins():
    rng = Random(6)
    for _ in range(20):
        coin = random_unitary_coin(rng)
        for (left, right), (coeff, basis) in coin.product_table(1e-10).items():
            assert_mclose(coeff * coin.basis(basis),
                          coin.basis(left) @ coin.basis(right), 1e-10)


def test_product_table_detects_corruption():
    coin = preset_coin("hadamard")
    coin.p = QMatrix2(1, 1, 0, 0)  # no longer the top row of U
    with pytest.raises(TableMismatchError):
        coin.product_table()


def test_random_sampler_unitary_and_subfields():
    rng = Random(7)
    for _ in range(20):
        assert random_unitary_coin(rng).matrix.is_unitary(1e-10)
    for _ in range(5):
        coin = random_unitary_coin(rng, entries="complex")
        assert coin.matrix.is_unitary(1e-10)
        assert all(e.y == 0.0 and e.z == 0.0 for e in coin.matrix.entries())
    for _ in range(5):
        coin = random_unitary_coin(rng, entries="real")
        assert coin.matrix.is_unitary(1e-10)
        assert coin.is_real(0.0)


def test_degeneracy_cases():
    assert preset_coin("flip").case() == "a=0"
    assert preset_coin("flip-neg").case() == "a=0"
    diag = Coin(QMatrix2(q(0, 1), q(), q(), q(0, 0, 0, 1)))
    assert diag.case() == "b=0"
    assert preset_coin("hadamard").case() == "abcd!=0"


def test_coin_json_round_trip():
    coin = preset_coin("example-ijk")
    again = coin_from_json(coin.to_json())
    assert again.matrix == coin.matrix


def test_coin_from_json_accepts_text_entries():
    coin = coin_from_json({"a": "0+0i+0j+0k", "b": "1", "c": "1", "d": [0, 0, 0, 0]})
    assert coin.matrix == preset_coin("flip").matrix


def test_coin_from_spec_forms(tmp_path):
    assert coin_from_spec("flip").matrix == preset_coin("flip").matrix
    inline = json.dumps(preset_coin("flip").to_json())
    assert coin_from_spec(inline).matrix == preset_coin("flip").matrix
    path = tmp_path / "coin.json"
    path.write_text(inline)
    assert coin_from_spec(str(path)).matrix == preset_coin("flip").matrix
    with pytest.raises(ValueError):
        coin_from_spec("no-such-preset")


def test_coin_from_json_rejects_missing_entries():
    with pytest.raises(ValueError):
        coin_from_json({"a": [1, 0, 0, 0]})


def test_matrix_apply_keeps_entry_order():
    m = QMatrix2(q(0, 1), q(), q(), q())  # e11 = i
    top, _ = m.apply((q(0, 0, 1), q()))   # i * j = k, not j * i
    assert top == q(0, 0, 0, 1)


def test_matrix_json_round_trip():
    m = random_matrix(Random(8))
    assert QMatrix2.from_json(m.to_json()) == m

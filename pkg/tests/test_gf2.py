import pytest

from f2q.gf2 import BitMatrix, bits_of, identity, pack_bits


def test_identity_round_trip():
    m = identity(5)
    assert m.is_identity()
    assert m.matvec(0b10110) == 0b10110


def test_entry_and_supports():
    m = BitMatrix(3, (0b011, 0b100, 0b111))
    assert m.entry(0, 0) == 1 and m.entry(0, 2) == 0
    assert m.row_support(2) == (0, 1, 2)
    assert m.col_support(2) == (1, 2)


def test_mul_against_naive():
    import numpy as np

    rng = np.random.default_rng(5)
    for _ in range(50):
        n = int(rng.integers(1, 9))
        a = BitMatrix(n, tuple(int(rng.integers(0, 1 << n)) for _ in range(n)))
        b = BitMatrix(n, tuple(int(rng.integers(0, 1 << n)) for _ in range(n)))
        want = (a.to_numpy().astype(int) @ b.to_numpy().astype(int)) % 2
        assert (a.mul(b).to_numpy() == want).all()


def test_matvec_against_naive():
    import numpy as np

    rng = np.random.default_rng(6)
    for _ in range(50):
        n = int(rng.integers(1, 9))
        a = BitMatrix(n, tuple(int(rng.integers(0, 1 << n)) for _ in range(n)))
        v = int(rng.integers(0, 1 << n))
        vec = np.array([(v >> j) & 1 for j in range(n)])
        want = (a.to_numpy().astype(int) @ vec) % 2
        got = a.matvec(v)
        assert [(got >> j) & 1 for j in range(n)] == want.tolist()


def test_inverse():
    m = BitMatrix(3, (0b001, 0b011, 0b111))
    assert m.mul(m.inverse()).is_identity()
    assert m.inverse().mul(m).is_identity()


def test_singular_rejected():
    with pytest.raises(ValueError, match="singular"):
        BitMatrix(2, (0b11, 0b11)).inverse()


def test_size_validation():
    with pytest.raises(ValueError):
        BitMatrix(0, ())
    with pytest.raises(ValueError):
        BitMatrix(2, (0b100, 0b01))  # bit outside width
    with pytest.raises(ValueError):
        identity(100000)  # above cap


def test_bit_helpers():
    assert bits_of(0b10110) == (1, 2, 4)
    assert pack_bits((1, 2, 4)) == 0b10110
    assert bits_of(0) == ()


def test_format_grid_orientation():
    m = BitMatrix(2, (0b01, 0b11))
    # row 1 printed on top, column 1 leftmost
    assert m.format_grid().splitlines() == ["1 1", "0 1"]

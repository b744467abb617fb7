"""Creation/annihilation operators on qubits under three encodings.

Each encoding maps the mode operators a_j / a+_j to two-term Pauli sums:

* ``jordan-wigner``: ladder on qubit j, Z chain on every lower qubit.
* ``parity``:        X chain on every higher qubit (the running sums all
  contain orbital j), ladder-with-sign on qubits (j, j-1).
* ``bravyi-kitaev``: X on the update set, Z on the parity set, and the
  flip-set-corrected ladder on qubit j; all supports are O(log n).

Composite operators (number, Coulomb/exchange, hopping, excitation,
number-excitation, double-excitation) are produced by multiplying encoded
mode operators and simplifying, never by case dispatch; the published
closed forms for the tree encoding are kept where they exist and are
cross-checked against the composed route in the tests.

``fermionic_oracle`` realizes any product of mode operators as a dense
matrix directly from the occupation-basis action rules (flip bit j, phase
-1 per occupied lower orbital), independent of every encoding, and anchors
all correctness tests.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .encodings import (
    flip_set,
    flip_set_closed,
    parity_set,
    y_phase_set,
    set_symdiff,
    update_set,
)
from . import pauli
from .pauli import PauliString, PauliSum

ENCODINGS = ("jordan-wigner", "parity", "bravyi-kitaev")

_ENCODING_ALIASES = {
    "jordan-wigner": "jordan-wigner",
    "jw": "jordan-wigner",
    "parity": "parity",
    "bravyi-kitaev": "bravyi-kitaev",
    "bk": "bravyi-kitaev",
}

# Register basis each encoding acts on.
ENCODING_BASIS = {
    "jordan-wigner": "occupation",
    "parity": "parity",
    "bravyi-kitaev": "bravyi-kitaev",
}


def normalize_encoding(tag: str) -> str:
    try:
        return _ENCODING_ALIASES[tag.lower()]
    except KeyError:
        raise ValueError(
            f"unknown encoding {tag!r}; expected one of {ENCODINGS} (or jw/bk)"
        ) from None


def _check_mode(j: int, n: int) -> None:
    if not 0 <= j < n:
        raise ValueError(f"mode {j} out of range for {n} orbitals")


# ---------------------------------------------------------------------------
# Mode operators
# ---------------------------------------------------------------------------

def mode_operator(kind: str, dagger: bool, j: int, n: int) -> PauliSum:
    """Qubit representation of a_j (dagger=False) or a+_j (dagger=True)."""
    kind = normalize_encoding(kind)
    _check_mode(j, n)
    # Both branches below share the shape (X-part +/- i Y-part)/2 with the
    # minus sign selecting the creation operator.
    sign = -0.5j if dagger else 0.5j
    if kind == "jordan-wigner":
        chain = (1 << j) - 1
        x_term = PauliString(n, 1 << j, chain, 0.5)
        y_term = PauliString(n, 1 << j, (1 << j) | chain, sign)
    elif kind == "parity":
        above = ((1 << n) - 1) & ~((1 << (j + 1)) - 1)
        below = 1 << (j - 1) if j > 0 else 0
        x_term = PauliString(n, above | (1 << j), below, 0.5)
        y_term = PauliString(n, above | (1 << j), 1 << j, sign)
    else:
        upd = _mask(update_set(j, n))
        x_term = PauliString(n, upd | (1 << j), _mask(parity_set(j, n)), 0.5)
        y_term = PauliString(n, upd | (1 << j), (1 << j) | _mask(y_phase_set(j, n)), sign)
    return PauliSum(n, [x_term, y_term])


def bk_flip_ladder(kind: str, j: int, n: int) -> PauliSum:
    """Flip-set-corrected ladder operator (X_j Z_F(j) -/+ iY_j)/2, odd j only.

    For even j the flip set is empty and the operator degenerates to the
    plain ladder; that case is rejected so callers take the ladder path.
    """
    if kind not in ("raise", "lower"):
        raise ValueError(f"kind must be 'raise' or 'lower', got {kind!r}")
    _check_mode(j, n)
    if j % 2 == 0:
        raise ValueError("flip-set ladder is defined for odd indices only")
    sign = -0.5j if kind == "raise" else 0.5j
    return PauliSum(
        n,
        [
            PauliString(n, 1 << j, _mask(flip_set(j, n)), 0.5),
            PauliString(n, 1 << j, 1 << j, sign),
        ],
    )


def _mask(indices) -> int:
    m = 0
    for q in indices:
        m |= 1 << q
    return m


# ---------------------------------------------------------------------------
# Composite operators
# ---------------------------------------------------------------------------

def number_operator(kind: str, i: int, n: int) -> PauliSum:
    """a+_i a_i.  Closed form (1 - Z on the closed flip set)/2 where known."""
    kind = normalize_encoding(kind)
    _check_mode(i, n)
    if kind == "jordan-wigner":
        zmask = 1 << i
    elif kind == "bravyi-kitaev":
        zmask = _mask(flip_set_closed(i, n))
    else:
        return mode_operator(kind, True, i, n) * mode_operator(kind, False, i, n)
    return PauliSum(n, [PauliString(n, 0, 0, 0.5), PauliString(n, 0, zmask, -0.5)])


def coulomb_exchange(kind: str, i: int, j: int, n: int) -> PauliSum:
    """a+_i a+_j a_j a_i, a product of two number operators."""
    kind = normalize_encoding(kind)
    _check_mode(i, n)
    _check_mode(j, n)
    if i == j:
        raise ValueError("Coulomb/exchange operator needs distinct modes")
    if kind == "bravyi-kitaev":
        fi = flip_set_closed(i, n)
        fj = flip_set_closed(j, n)
        return PauliSum(
            n,
            [
                PauliString(n, 0, 0, 0.25),
                PauliString(n, 0, _mask(fi), -0.25),
                PauliString(n, 0, _mask(fj), -0.25),
                PauliString(n, 0, _mask(set_symdiff(fi, fj)), 0.25),
            ],
        )
    return number_operator(kind, i, n) * number_operator(kind, j, n)


def hopping_product(kind: str, i: int, j: int, n: int) -> PauliSum:
    """a+_i a_j for i != j, composed from mode operators and simplified.

    i > j is handled through the adjoint of the i < j case.
    """
    kind = normalize_encoding(kind)
    _check_mode(i, n)
    _check_mode(j, n)
    if i == j:
        raise ValueError("use number_operator for i == j")
    if i > j:
        return hopping_product(kind, j, i, n).adjoint()
    return mode_operator(kind, True, i, n) * mode_operator(kind, False, j, n)


def excitation_operator(kind: str, i: int, j: int, h: complex, n: int) -> PauliSum:
    """h a+_i a_j + conj(h) a+_j a_i (Hermitian one-body transition)."""
    if i == j:
        raise ValueError("use number_operator for i == j")
    t = hopping_product(kind, i, j, n) * h
    return t + t.adjoint()


def number_excitation_operator(
    kind: str, i: int, j: int, k: int, h: complex, n: int
) -> PauliSum:
    """h a+_i a+_j a_j a_k + conj(h) a+_k a+_j a_j a_i.

    Equals the (i,k) excitation times the j number operator because the
    number operator commutes with mode operators on other indices.
    """
    if len({i, j, k}) != 3:
        raise ValueError("indices must be distinct")
    return excitation_operator(kind, i, k, h, n) * number_operator(kind, j, n)


def double_excitation_operator(
    kind: str, i: int, j: int, k: int, l: int, h: complex, n: int
) -> PauliSum:
    """h a+_i a+_j a_k a_l + conj(h) a+_l a+_k a_j a_i.

    Reordering with the anticommutation relations turns the quartic string
    into (a+_i a_l)(a+_j a_k) for distinct indices, so the result is the
    product of two hopping terms plus its adjoint.
    """
    if len({i, j, k, l}) != 4:
        raise ValueError("indices must be distinct")
    t = (hopping_product(kind, i, l, n) * hopping_product(kind, j, k, n)) * h
    return t + t.adjoint()


# ---------------------------------------------------------------------------
# Dense fermionic oracle
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FermionOperator:
    """Product of mode operators, written left to right (rightmost acts first).

    ``modes`` holds (index, dagger) pairs; e.g. ((0, True), (2, False)) is
    a+_0 a_2.
    """

    modes: tuple[tuple[int, bool], ...]
    coeff: complex = 1.0


def _mode_matrix(j: int, dagger: bool, n: int) -> np.ndarray:
    dim = 1 << n
    out = np.zeros((dim, dim), dtype=complex)
    lower = (1 << j) - 1
    for state in range(dim):
        occupied = (state >> j) & 1
        if occupied == (1 if dagger else 0):
            continue
        phase = -1.0 if ((state & lower).bit_count() & 1) else 1.0
        out[state ^ (1 << j), state] = phase
    return out


def fermionic_oracle(op: FermionOperator, n: int, cap: int | None = None) -> np.ndarray:
    """Dense matrix of the operator product, straight from the action rules."""
    cap = pauli.DENSE_CAP if cap is None else cap
    if n > cap:
        raise ValueError(f"dense realization capped at {cap} orbitals")
    for j, _ in op.modes:
        _check_mode(j, n)
    out = np.eye(1 << n, dtype=complex) * op.coeff
    for j, dagger in op.modes:
        out = out @ _mode_matrix(j, dagger, n)
    return out


def encoding_permutation(kind: str, n: int) -> np.ndarray:
    """Permutation matrix sending occupation basis states to encoded states.

    Column f of the result is the basis vector of the encoded register
    value, so  P @ e_f = e_enc(f)  and any encoded operator O satisfies
    fermionic_oracle == P^-1 @ O @ P when the encoding is faithful.
    """
    from .encodings import bk_matrix, parity_matrix

    kind = normalize_encoding(kind)
    dim = 1 << n
    out = np.zeros((dim, dim), dtype=complex)
    if kind == "jordan-wigner":
        mat = None
    elif kind == "parity":
        mat = parity_matrix(n)
    else:
        mat = bk_matrix(n)
    for f in range(dim):
        enc = f if mat is None else mat.matvec(f)
        out[enc, f] = 1.0
    return out

"""Basis maps between occupation, parity, and binary-tree qubit registers.

An n-orbital register state is a bit string f_{n-1} ... f_0.  Three ways to
store it on n qubits:

* ``occupation``:    qubit j holds f_j.
* ``parity``:        qubit j holds the running parity f_0 + ... + f_j (mod 2).
* ``bravyi-kitaev``: qubit j holds a partial sum over a binary-tree grouping
  of orbitals; even j stores f_j alone, odd j also folds in a block of
  lower orbitals.

Both non-trivial maps are linear over GF(2); ``parity_matrix`` and
``bk_matrix`` produce them in the packed row form of :mod:`f2q.gf2`
(row i = output bit i, column j = input bit j).

The index sets driving the operator transformations are read off these
matrices:

* ``parity_set(j)``: qubits whose joint parity equals that of orbitals
  0..j-1.  Row j of ``prefix_parity_matrix(n) * bk_inverse_matrix(n)``;
  using the inclusive running-parity matrix here would fold qubit j's own
  flip set into the row and break the published set values.
* ``update_set(j)``: qubits above j storing a partial sum containing f_j;
  column j of ``bk_matrix(n)`` above the diagonal.  Only odd indices ever
  appear.
* ``flip_set(j)``: qubits below j whose parity says whether tree qubit j
  agrees with f_j; row j of ``bk_inverse_matrix(n)`` below the diagonal.
  Empty for even j.
* ``remainder_set(j)``: parity set minus flip set; ``y_phase_set(j)``
  selects the parity set for even j and the remainder set for odd j (the
  Z support accompanying the Y quadrature of a mode operator).

All sets are returned as strictly increasing tuples of qubit indices so
that downstream Pauli-string construction is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gf2 import N_CAP, BitMatrix, bits_of

BASES = ("occupation", "parity", "bravyi-kitaev")

_BASIS_ALIASES = {
    "occupation": "occupation",
    "occ": "occupation",
    "parity": "parity",
    "bravyi-kitaev": "bravyi-kitaev",
    "bk": "bravyi-kitaev",
}


def normalize_basis(tag: str) -> str:
    try:
        return _BASIS_ALIASES[tag.lower()]
    except KeyError:
        raise ValueError(f"unknown basis tag {tag!r}; expected one of {BASES}") from None


@dataclass(frozen=True)
class BasisState:
    """Length-n bit string with a basis tag; bits[0] is the highest bit f_{n-1}."""

    bits: str
    basis: str = "occupation"

    def __post_init__(self) -> None:
        if not self.bits or any(c not in "01" for c in self.bits):
            raise ValueError(f"bits must be a nonempty 0/1 string, got {self.bits!r}")
        object.__setattr__(self, "basis", normalize_basis(self.basis))

    @property
    def n(self) -> int:
        return len(self.bits)

    def to_int(self) -> int:
        """Packed value with bit j = component j (rightmost character)."""
        return int(self.bits, 2)

    @classmethod
    def from_int(cls, value: int, n: int, basis: str = "occupation") -> BasisState:
        return cls(format(value, f"0{n}b"), basis)


@lru_cache(maxsize=None)
def parity_matrix(n: int) -> BitMatrix:
    """Running-parity map: output bit i = f_0 + ... + f_i (mod 2)."""
    return BitMatrix(n, tuple((1 << (i + 1)) - 1 for i in range(n)))


@lru_cache(maxsize=None)
def prefix_parity_matrix(n: int) -> BitMatrix:
    """Strict prefix variant: output bit i = f_0 + ... + f_{i-1} (mod 2)."""
    return BitMatrix(n, tuple((1 << i) - 1 for i in range(n)))


@lru_cache(maxsize=None)
def bk_matrix(n: int) -> BitMatrix:
    """Occupation -> tree-register matrix by block-doubling recursion.

    The 1x1 matrix is [1]; each doubling places two copies on the diagonal
    and fills the whole top row; other sizes slice the low-index corner of
    the next power of two.
    """
    if n < 1:
        raise ValueError(f"matrix size must be >= 1, got {n}")
    if n > N_CAP:
        raise ValueError(f"matrix size {n} exceeds cap {N_CAP}")
    size = 1
    rows: list[int] = [1]
    while size < n:
        shifted = [r << size for r in rows]
        rows = rows + shifted
        size *= 2
        rows[size - 1] = (1 << size) - 1
    return BitMatrix(n, tuple(r & ((1 << n) - 1) for r in rows[:n]))


@lru_cache(maxsize=None)
def bk_inverse_matrix(n: int) -> BitMatrix:
    """Inverse of ``bk_matrix(n)`` over GF(2)."""
    return bk_matrix(n).inverse()


@lru_cache(maxsize=None)
def _tree_to_prefix_parity(n: int) -> BitMatrix:
    # Row j gives the tree-register qubits whose parity equals the parity
    # of orbitals 0..j-1.
    return prefix_parity_matrix(n).mul(bk_inverse_matrix(n))


def encode_state(v: BasisState, target: str) -> BasisState:
    """Re-express a register state in another basis.

    Any source basis is accepted; non-occupation sources are routed through
    the occupation basis with the inverse matrices, so every round trip is
    exact.
    """
    target = normalize_basis(target)
    n = len(v.bits)
    value = v.to_int()
    if v.basis != "occupation":
        inv = parity_matrix(n).inverse() if v.basis == "parity" else bk_inverse_matrix(n)
        value = inv.matvec(value)
    if target == "parity":
        value = parity_matrix(n).matvec(value)
    elif target == "bravyi-kitaev":
        value = bk_matrix(n).matvec(value)
    return BasisState.from_int(value, n, target)


def _check_index(j: int, n: int) -> None:
    if not 0 <= j < n:
        raise ValueError(f"index {j} out of range for {n} orbitals")


def parity_set(j: int, n: int) -> tuple[int, ...]:
    """Qubits whose joint parity equals the parity of orbitals below j."""
    _check_index(j, n)
    return bits_of(_tree_to_prefix_parity(n).rows[j])


def update_set(j: int, n: int) -> tuple[int, ...]:
    """Qubits above j that must flip when the occupancy of orbital j flips."""
    _check_index(j, n)
    return bits_of(_col_mask(bk_matrix(n), j) & ~(1 << j))


def flip_set(j: int, n: int) -> tuple[int, ...]:
    """Qubits whose parity says whether qubit j is inverted w.r.t. orbital j."""
    _check_index(j, n)
    return bits_of(bk_inverse_matrix(n).rows[j] & ~(1 << j))


def remainder_set(j: int, n: int) -> tuple[int, ...]:
    """Parity set minus flip set."""
    return set_diff(parity_set(j, n), flip_set(j, n))


def y_phase_set(j: int, n: int) -> tuple[int, ...]:
    """Z support of a mode operator's Y quadrature.

    Whole parity set for even j; for odd j the flip-set part is handled by
    the sign structure of the corrected ladder, leaving the remainder set.
    """
    return parity_set(j, n) if j % 2 == 0 else remainder_set(j, n)


def _col_mask(m: BitMatrix, j: int) -> int:
    out = 0
    for i in range(m.n):
        out |= ((m.rows[i] >> j) & 1) << i
    return out


# ---------------------------------------------------------------------------
# Sorted-tuple set algebra.  Inputs must be strictly increasing tuples.
# ---------------------------------------------------------------------------

def set_union(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(set(a) | set(b)))


def set_intersect(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(set(a) & set(b)))


def set_diff(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(set(a) - set(b)))


def set_symdiff(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(set(a) ^ set(b)))


def flip_set_closed(j: int, n: int) -> tuple[int, ...]:
    """Flip set together with j itself (the Z support of a number operator)."""
    return set_union(flip_set(j, n), (j,))


@dataclass(frozen=True)
class PairSets:
    """Every set needed to transform a two-index operator product."""

    rem_i: tuple[int, ...]
    rem_j: tuple[int, ...]
    y_phase_i: tuple[int, ...]
    y_phase_j: tuple[int, ...]
    update_sym: tuple[int, ...]       # update sets, symmetric difference
    overlap: tuple[int, ...]          # update set of i meeting parity set of j
    parity_sym: tuple[int, ...]       # parity sets, symmetric difference
    parity_rem: tuple[int, ...]       # parity(i) sym-diff remainder(j)
    rem_parity: tuple[int, ...]       # remainder(i) sym-diff parity(j)
    rem_rem: tuple[int, ...]          # remainder sets, symmetric difference
    flip_closed_i: tuple[int, ...]
    flip_closed_j: tuple[int, ...]
    flip_closed_sym: tuple[int, ...]  # closed flip sets, symmetric difference


def derived_sets(i: int, j: int, n: int) -> PairSets:
    """Bundle of single- and pairwise index sets for modes i != j."""
    _check_index(i, n)
    _check_index(j, n)
    if i == j:
        raise ValueError("pairwise sets require distinct indices")
    p_i, p_j = parity_set(i, n), parity_set(j, n)
    r_i, r_j = remainder_set(i, n), remainder_set(j, n)
    return PairSets(
        rem_i=r_i,
        rem_j=r_j,
        y_phase_i=y_phase_set(i, n),
        y_phase_j=y_phase_set(j, n),
        update_sym=set_symdiff(update_set(i, n), update_set(j, n)),
        overlap=set_intersect(update_set(i, n), p_j),
        parity_sym=set_symdiff(p_i, p_j),
        parity_rem=set_symdiff(p_i, r_j),
        rem_parity=set_symdiff(r_i, p_j),
        rem_rem=set_symdiff(r_i, r_j),
        flip_closed_i=flip_set_closed(i, n),
        flip_closed_j=flip_set_closed(j, n),
        flip_closed_sym=set_symdiff(flip_set_closed(i, n), flip_set_closed(j, n)),
    )


def sets_table(n: int) -> str:
    """Plain-text table of P/U/F/R sets per index, for diffing against references."""
    _check_index(0, n)

    def fmt(s: tuple[int, ...]) -> str:
        return "{" + ",".join(map(str, s)) + "}" if s else "{}"

    header = f"{'j':>4}  {'P(j)':<18}{'U(j)':<18}{'F(j)':<18}{'R(j)':<18}"
    lines = [header]
    for j in range(n):
        lines.append(
            f"{j:>4}  {fmt(parity_set(j, n)):<18}{fmt(update_set(j, n)):<18}"
            f"{fmt(flip_set(j, n)):<18}{fmt(remainder_set(j, n)):<18}"
        )
    return "\n".join(lines)

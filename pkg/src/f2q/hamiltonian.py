"""Second-quantized Hamiltonian assembly from integral tables.

The electronic Hamiltonian is

    H = sum_ij h_ij a+_i a_j + 1/2 sum_ijkl h_ijkl a+_i a+_j a_k a_l

with one- and two-electron integrals supplied as data.  Assembly is a
direct loop: every nonzero integral contributes the product of its encoded
mode operators, and term collection in the Pauli algebra performs all of
the cancellation and merging that the operator classes would otherwise be
tracked through by hand.  Nothing is specialized to a particular molecule.

Integral files are line-oriented text:

    n <orbital count>
    h1 <i> <j> <re> [im]
    h2 <i> <j> <k> <l> <re> [im]

with ``#`` comments; unspecified entries are zero.  The two-body index
convention pairs i with l and j with k (h_ijkl multiplies a+_i a+_j a_k
a_l), so Hermiticity requires h_ijkl = conj(h_lkji).  Files must list every
nonzero entry explicitly; no permutational symmetry is filled in.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import IO

import numpy as np

from .fermions import mode_operator, normalize_encoding
from .pauli import PauliSum

HERMITICITY_TOL = 1e-12


class IntegralFormatError(ValueError):
    """Malformed integral file; carries the offending line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class TableValidationError(ValueError):
    """Structurally sound file whose values violate a physical constraint."""


@dataclass(frozen=True)
class IntegralTable:
    """One- and two-electron integrals for n spin orbitals."""

    n: int
    one_body: dict[tuple[int, int], complex] = field(default_factory=dict)
    two_body: dict[tuple[int, int, int, int], complex] = field(default_factory=dict)
    metadata: str = ""

    def __post_init__(self) -> None:
        if self.n < 1:
            raise TableValidationError("orbital count must be >= 1")
        for idx in self.one_body:
            if any(not 0 <= k < self.n for k in idx):
                raise TableValidationError(f"one-body index {idx} out of range")
        for idx in self.two_body:
            if any(not 0 <= k < self.n for k in idx):
                raise TableValidationError(f"two-body index {idx} out of range")
        self.validate_hermiticity()

    def validate_hermiticity(self, tol: float = HERMITICITY_TOL) -> None:
        for (i, j), v in self.one_body.items():
            w = self.one_body.get((j, i), 0.0)
            if abs(v - np.conj(w)) > tol:
                raise TableValidationError(
                    f"one-body integrals violate h[{i},{j}] == conj(h[{j},{i}])"
                )
        for (i, j, k, l), v in self.two_body.items():
            w = self.two_body.get((l, k, j, i), 0.0)
            if abs(v - np.conj(w)) > tol:
                raise TableValidationError(
                    f"two-body integrals violate h[{i},{j},{k},{l}] == conj(h[{l},{k},{j},{i}])"
                )


def load_integrals(source: IO[str] | str) -> IntegralTable:
    """Parse an integral file (text stream or string).  See module docstring."""
    text = source if isinstance(source, str) else source.read()
    n: int | None = None
    one: dict[tuple[int, int], complex] = {}
    two: dict[tuple[int, int, int, int], complex] = {}
    comments: list[str] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
            continue
        fields = line.split()
        tag = fields[0].lower()
        if tag == "n":
            if n is not None:
                raise IntegralFormatError(lineno, "duplicate orbital-count header")
            n = _parse_int(fields, 1, lineno)
            if len(fields) != 2:
                raise IntegralFormatError(lineno, "header is 'n <count>'")
            if n < 1:
                raise IntegralFormatError(lineno, "orbital count must be >= 1")
        elif tag == "h1":
            if n is None:
                raise IntegralFormatError(lineno, "record before 'n' header")
            if len(fields) not in (4, 5):
                raise IntegralFormatError(lineno, "record is 'h1 <i> <j> <re> [im]'")
            i, j = (_parse_index(fields, p, lineno, n) for p in (1, 2))
            one[(i, j)] = _parse_value(fields, 3, lineno)
        elif tag == "h2":
            if n is None:
                raise IntegralFormatError(lineno, "record before 'n' header")
            if len(fields) not in (6, 7):
                raise IntegralFormatError(lineno, "record is 'h2 <i> <j> <k> <l> <re> [im]'")
            i, j, k, l = (_parse_index(fields, p, lineno, n) for p in (1, 2, 3, 4))
            two[(i, j, k, l)] = _parse_value(fields, 5, lineno)
        else:
            raise IntegralFormatError(lineno, f"unknown record tag {fields[0]!r}")

    if n is None:
        raise IntegralFormatError(0, "missing 'n <count>' header")
    return IntegralTable(n, one, two, metadata="; ".join(comments))


def _parse_int(fields: list[str], pos: int, lineno: int) -> int:
    try:
        return int(fields[pos])
    except (IndexError, ValueError):
        raise IntegralFormatError(lineno, f"field {pos} must be an integer") from None


def _parse_index(fields: list[str], pos: int, lineno: int, n: int) -> int:
    v = _parse_int(fields, pos, lineno)
    if not 0 <= v < n:
        raise IntegralFormatError(lineno, f"orbital index {v} out of range [0, {n})")
    return v


def _parse_value(fields: list[str], pos: int, lineno: int) -> complex:
    try:
        re = float(fields[pos])
        im = float(fields[pos + 1]) if pos + 1 < len(fields) else 0.0
    except ValueError:
        raise IntegralFormatError(lineno, "bad numeric value") from None
    return complex(re, im)


# ---------------------------------------------------------------------------
# Assembly and partitioning
# ---------------------------------------------------------------------------

def build_hamiltonian(table: IntegralTable, kind: str) -> PauliSum:
    """Qubit Hamiltonian for the chosen encoding, by direct expansion."""
    kind = normalize_encoding(kind)
    n = table.n
    total = PauliSum.zero(n)

    def raise_op(i: int) -> PauliSum:
        return mode_operator(kind, True, i, n)

    def lower_op(i: int) -> PauliSum:
        return mode_operator(kind, False, i, n)

    for (i, j), h in sorted(table.one_body.items()):
        if h == 0:
            continue
        total = total + (raise_op(i) * lower_op(j)) * h
    for (i, j, k, l), h in sorted(table.two_body.items()):
        if h == 0:
            continue
        total = total + (raise_op(i) * raise_op(j) * lower_op(k) * lower_op(l)) * (0.5 * h)
    return total


@dataclass(frozen=True)
class PartitionedHamiltonian:
    """A Pauli sum split into internally commuting groups of terms."""

    full: PauliSum
    parts: tuple[PauliSum, ...]

    @property
    def n(self) -> int:
        return self.full.n


def partition_commuting(h: PauliSum) -> PartitionedHamiltonian:
    """Greedy first-fit partition of terms into mutually commuting groups.

    Terms are considered in canonical order and placed in the first group
    whose members all commute with them, so diagonal-style terms land in
    the first group and the result is deterministic.
    """
    groups: list[list] = []
    for term in h.terms():
        for group in groups:
            if all(term.commutes_with(other) for other in group):
                group.append(term)
                break
        else:
            groups.append([term])
    return PartitionedHamiltonian(h, tuple(PauliSum(h.n, g) for g in groups))

"""Pauli strings and sums in symplectic (X-mask, Z-mask) form.

A string on n qubits is a complex coefficient times a tensor product of
single-qubit factors I/X/Y/Z.  Factors are packed into two bitmasks: bit j
of ``x`` set means an X component on qubit j, bit j of ``z`` a Z component,
both set meaning Y.  All scalar content lives in the coefficient; the
masks never carry phase.

Multiplication composes masks by XOR and accumulates the product phase
into the coefficient via the standard symplectic bookkeeping (a labelled
string equals i^{|x&z|} X^x Z^z, so the phase exponent of a product is
|xa&za| + |xb&zb| - |xc&zc| + 2|za&xb| mod 4).

Sums keep one entry per distinct mask pair, prune coefficients below
``DROP_TOL``, and iterate in a canonical order: lexicographic on the label
pattern with qubit n-1 leftmost (I < X < Y < Z), which fixes serialization
and every downstream tie-break.

Dense realizations are little-endian: qubit j is the j-th tensor factor
from the right, so basis-state index bit j is qubit j.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

# Coefficients at or below this magnitude are treated as exact zeros.
DROP_TOL = 1e-12

# Largest qubit count realized as a dense matrix by default.
DENSE_CAP = 12

_PAULI_2x2 = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

_LABELS = {(0, 0): "I", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}
_MASKS = {v: k for k, v in _LABELS.items()}


@dataclass(frozen=True)
class PauliString:
    """coefficient * tensor product of I/X/Y/Z factors on n qubits."""

    n: int
    x: int
    z: int
    coeff: complex = 1.0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("qubit count must be >= 1")
        mask = (1 << self.n) - 1
        if (self.x & ~mask) or (self.z & ~mask):
            raise ValueError("mask has bits outside the qubit range")

    @property
    def pattern(self) -> str:
        """Label string, qubit n-1 leftmost (e.g. 'ZIXY')."""
        return "".join(
            _LABELS[(self.x >> q) & 1, (self.z >> q) & 1]
            for q in range(self.n - 1, -1, -1)
        )

    @property
    def weight(self) -> int:
        return (self.x | self.z).bit_count()

    @property
    def support(self) -> tuple[int, ...]:
        m = self.x | self.z
        return tuple(q for q in range(self.n) if (m >> q) & 1)

    def label(self, q: int) -> str:
        return _LABELS[(self.x >> q) & 1, (self.z >> q) & 1]

    @classmethod
    def from_pattern(cls, pattern: str, coeff: complex = 1.0) -> PauliString:
        x = z = 0
        n = len(pattern)
        for pos, c in enumerate(pattern):
            q = n - 1 - pos
            try:
                xb, zb = _MASKS[c]
            except KeyError:
                raise ValueError(f"invalid Pauli label {c!r}") from None
            x |= xb << q
            z |= zb << q
        return cls(n, x, z, coeff)

    @classmethod
    def from_sets(
        cls,
        n: int,
        x_set: Iterable[int] = (),
        y_set: Iterable[int] = (),
        z_set: Iterable[int] = (),
        coeff: complex = 1.0,
    ) -> PauliString:
        """Build from disjoint qubit-index sets for the X, Y, and Z factors."""
        xm = ym = zm = 0
        for q in x_set:
            xm |= 1 << q
        for q in y_set:
            ym |= 1 << q
        for q in z_set:
            zm |= 1 << q
        if xm & ym or xm & zm or ym & zm:
            raise ValueError("X/Y/Z index sets must be disjoint")
        return cls(n, xm | ym, zm | ym, coeff)

    def commutes_with(self, other: PauliString) -> bool:
        """True unless the factors anticommute on an odd number of qubits."""
        if self.n != other.n:
            raise ValueError("qubit count mismatch")
        return ((self.x & other.z).bit_count() + (self.z & other.x).bit_count()) % 2 == 0

    def multiply(self, other: PauliString) -> PauliString:
        if self.n != other.n:
            raise ValueError("qubit count mismatch")
        xc = self.x ^ other.x
        zc = self.z ^ other.z
        exponent = (
            (self.x & self.z).bit_count()
            + (other.x & other.z).bit_count()
            - (xc & zc).bit_count()
            + 2 * (self.z & other.x).bit_count()
        ) % 4
        return PauliString(self.n, xc, zc, self.coeff * other.coeff * (1j) ** exponent)

    __mul__ = multiply

    def adjoint(self) -> PauliString:
        # the labelled factor product is Hermitian; only the coefficient conjugates
        return PauliString(self.n, self.x, self.z, self.coeff.conjugate())

    def to_matrix(self, cap: int | None = None) -> np.ndarray:
        cap = DENSE_CAP if cap is None else cap
        if self.n > cap:
            raise ValueError(f"dense realization capped at {cap} qubits")
        out = np.array([[self.coeff]], dtype=complex)
        for q in range(self.n - 1, -1, -1):
            out = np.kron(out, _PAULI_2x2[self.label(q)])
        return out

    def __repr__(self) -> str:
        return f"PauliString({self.coeff:+g} * {self.pattern})"


class PauliSum:
    """Linear combination of PauliStrings with collected, pruned terms."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Iterable[PauliString] = ()):
        if n < 1:
            raise ValueError("qubit count must be >= 1")
        self.n = n
        self._terms: dict[tuple[int, int], complex] = {}
        for t in terms:
            if t.n != n:
                raise ValueError("qubit count mismatch")
            self._accumulate(t.x, t.z, t.coeff)
        self._prune()

    # -- construction helpers ------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> PauliSum:
        return cls(n)

    @classmethod
    def identity(cls, n: int, coeff: complex = 1.0) -> PauliSum:
        return cls(n, [PauliString(n, 0, 0, coeff)])

    def _accumulate(self, x: int, z: int, coeff: complex) -> None:
        key = (x, z)
        self._terms[key] = self._terms.get(key, 0.0) + coeff

    def _prune(self) -> None:
        self._terms = {k: c for k, c in self._terms.items() if abs(c) > DROP_TOL}

    # -- views ----------------------------------------------------------------

    def terms(self) -> list[PauliString]:
        """Terms in canonical pattern order."""
        out = [PauliString(self.n, x, z, c) for (x, z), c in self._terms.items()]
        out.sort(key=lambda t: t.pattern)
        return out

    def coefficient(self, pattern: str) -> complex:
        ref = PauliString.from_pattern(pattern)
        if ref.n != self.n:
            raise ValueError("pattern length mismatch")
        return self._terms.get((ref.x, ref.z), 0.0)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[PauliString]:
        return iter(self.terms())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PauliSum):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def approx_equal(self, other: PauliSum, tol: float = 1e-12) -> bool:
        if self.n != other.n:
            return False
        keys = set(self._terms) | set(other._terms)
        return all(
            abs(self._terms.get(k, 0.0) - other._terms.get(k, 0.0)) <= tol for k in keys
        )

    # -- algebra ----------------------------------------------------------------

    def __add__(self, other: PauliSum) -> PauliSum:
        if self.n != other.n:
            raise ValueError("qubit count mismatch")
        out = PauliSum(self.n)
        out._terms = dict(self._terms)
        for (x, z), c in other._terms.items():
            out._accumulate(x, z, c)
        out._prune()
        return out

    def __sub__(self, other: PauliSum) -> PauliSum:
        return self + (other * -1.0)

    def __mul__(self, other: PauliSum | complex) -> PauliSum:
        if isinstance(other, PauliSum):
            if self.n != other.n:
                raise ValueError("qubit count mismatch")
            out = PauliSum(self.n)
            for (xa, za), ca in self._terms.items():
                a = PauliString(self.n, xa, za, ca)
                for (xb, zb), cb in other._terms.items():
                    p = a.multiply(PauliString(self.n, xb, zb, cb))
                    out._accumulate(p.x, p.z, p.coeff)
            out._prune()
            return out
        out = PauliSum(self.n)
        out._terms = {k: c * other for k, c in self._terms.items()}
        out._prune()
        return out

    def __rmul__(self, other: complex) -> PauliSum:
        return self * other

    def adjoint(self) -> PauliSum:
        out = PauliSum(self.n)
        out._terms = {k: c.conjugate() for k, c in self._terms.items()}
        return out

    def is_hermitian(self, tol: float = 1e-12) -> bool:
        return all(abs(c.imag) <= tol for c in self._terms.values())

    def to_matrix(self, cap: int | None = None) -> np.ndarray:
        cap = DENSE_CAP if cap is None else cap
        if self.n > cap:
            raise ValueError(f"dense realization capped at {cap} qubits")
        dim = 1 << self.n
        out = np.zeros((dim, dim), dtype=complex)
        for t in self.terms():
            out += t.to_matrix(cap)
        return out

    def __repr__(self) -> str:
        if not self._terms:
            return f"PauliSum(n={self.n}, 0)"
        parts = ", ".join(f"{t.coeff:+g}*{t.pattern}" for t in self.terms()[:6])
        more = "" if len(self) <= 6 else f", ... ({len(self)} terms)"
        return f"PauliSum(n={self.n}, {parts}{more})"


# ---------------------------------------------------------------------------
# Ladder operators and parity projectors
# ---------------------------------------------------------------------------

def ladder(kind: str, j: int, n: int) -> PauliSum:
    """Single-qubit raising/lowering operator (X -/+ iY)/2 on qubit j."""
    if kind not in ("raise", "lower"):
        raise ValueError(f"kind must be 'raise' or 'lower', got {kind!r}")
    if not 0 <= j < n:
        raise ValueError(f"qubit {j} out of range for {n} qubits")
    sign = -1.0 if kind == "raise" else 1.0
    return PauliSum(
        n,
        [
            PauliString(n, 1 << j, 0, 0.5),
            PauliString(n, 1 << j, 1 << j, sign * 0.5j),
        ],
    )


def parity_projector(kind: str, subset: Iterable[int], n: int) -> PauliSum:
    """Projector (1 +/- Z_S)/2 onto even/odd joint parity of the subset."""
    if kind not in ("even", "odd"):
        raise ValueError(f"kind must be 'even' or 'odd', got {kind!r}")
    zmask = 0
    for q in subset:
        if not 0 <= q < n:
            raise ValueError(f"qubit {q} out of range for {n} qubits")
        zmask |= 1 << q
    sign = 1.0 if kind == "even" else -1.0
    return PauliSum(
        n,
        [PauliString(n, 0, 0, 0.5), PauliString(n, 0, zmask, sign * 0.5)],
    )


# ---------------------------------------------------------------------------
# Text serialization: one term per line, "<re> <im> <pattern>"
# ---------------------------------------------------------------------------

def dump_sum(s: PauliSum) -> str:
    lines = [f"{t.coeff.real:.17g} {t.coeff.imag:.17g} {t.pattern}" for t in s.terms()]
    return "\n".join(lines) + ("\n" if lines else "")

def parse_sum(text: str, n: int | None = None) -> PauliSum:
    terms = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 3:
            raise ValueError(f"line {lineno}: expected '<re> <im> <pattern>'")
        try:
            coeff = complex(float(fields[0]), float(fields[1]))
        except ValueError:
            raise ValueError(f"line {lineno}: bad coefficient") from None
        terms.append(PauliString.from_pattern(fields[2], coeff))
    if not terms:
        if n is None:
            raise ValueError("empty operator with no explicit qubit count")
        return PauliSum(n)
    width = terms[0].n
    if any(t.n != width for t in terms):
        raise ValueError("inconsistent pattern lengths")
    if n is not None and n != width:
        raise ValueError(f"pattern width {width} does not match requested {n}")
    return PauliSum(width, terms)

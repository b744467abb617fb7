"""Pauli-exponential circuits, product-formula schedules, gate accounting.

``exponentiate_term`` lowers exp(-i theta P) for a single weighted Pauli
string to the standard shape: single-qubit basis changes onto the Z axis
(H for X factors, the X-axis quarter rotations RXF/RXI for Y factors), a
linear CNOT ladder accumulating the joint parity onto the lowest support
qubit, one RZ there, then the mirrored ladder and inverse basis changes.
A weight-w string with m non-Z factors therefore costs exactly 2(w-1)
CNOTs and 1 + 2m single-qubit gates; identity strings cost no gates and
are tracked as an explicit global phase so downstream eigenvalue
extraction stays exact.

No cross-term cancellation or merging is ever performed: the counters are
defined by plain concatenation of per-term circuits.

``suzuki_schedule`` provides the order-1..4 two-block product formulas as
(block, scale) sequences; ``trotter_circuit`` expands them over a
partitioned operator, either block-at-a-time (``naive``) or alternating
single terms from the two blocks in descending coefficient magnitude
(``interleaved``, first order only).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .hamiltonian import PartitionedHamiltonian
from .pauli import PauliString, PauliSum

GATE_KINDS = ("CNOT", "RZ", "H", "RXF", "RXI", "GPHASE")


@dataclass(frozen=True)
class Gate:
    """One gate: CNOT(control, target), RZ/H/RXF/RXI(qubit), or GPHASE.

    ``angle`` is the RZ rotation angle or the global phase; RXF/RXI are the
    fixed quarter turns about X taking the Y axis to/from the Z axis.
    """

    kind: str
    qubits: tuple[int, ...] = ()
    angle: float = 0.0

    def __post_init__(self) -> None:
        if self.kind not in GATE_KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if not math.isfinite(self.angle):
            raise ValueError("gate angle must be finite")


@dataclass(frozen=True)
class GateCounts:
    sqg: int
    cnot: int

    @property
    def total(self) -> int:
        return self.sqg + self.cnot

    def __add__(self, other: GateCounts) -> GateCounts:
        return GateCounts(self.sqg + other.sqg, self.cnot + other.cnot)


@dataclass
class Circuit:
    """Ordered gate list on a fixed-width register."""

    width: int
    gates: list[Gate] = field(default_factory=list)

    def append(self, gate: Gate) -> None:
        if any(q >= self.width or q < 0 for q in gate.qubits):
            raise ValueError("gate qubit outside circuit width")
        self.gates.append(gate)

    def extend(self, other: Circuit) -> None:
        if other.width != self.width:
            raise ValueError("width mismatch")
        self.gates.extend(other.gates)

    def counts(self) -> GateCounts:
        return gate_count(self)

    def to_text(self) -> str:
        lines = [f"width {self.width}"]
        for g in self.gates:
            if g.kind == "CNOT":
                lines.append(f"CNOT {g.qubits[0]} {g.qubits[1]}")
            elif g.kind == "RZ":
                lines.append(f"RZ {g.qubits[0]} {g.angle:.17g}")
            elif g.kind == "GPHASE":
                lines.append(f"GPHASE {g.angle:.17g}")
            else:
                lines.append(f"{g.kind} {g.qubits[0]}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> Circuit:
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("width "):
            raise ValueError("missing 'width <n>' header")
        circ = cls(int(lines[0].split()[1]))
        for ln in lines[1:]:
            fields = ln.split()
            kind = fields[0]
            if kind == "CNOT":
                circ.append(Gate("CNOT", (int(fields[1]), int(fields[2]))))
            elif kind == "RZ":
                circ.append(Gate("RZ", (int(fields[1]),), float(fields[2])))
            elif kind == "GPHASE":
                circ.append(Gate("GPHASE", (), float(fields[1])))
            elif kind in ("H", "RXF", "RXI"):
                circ.append(Gate(kind, (int(fields[1]),)))
            else:
                raise ValueError(f"unknown gate line {ln!r}")
        return circ


def gate_count(circuit: Circuit) -> GateCounts:
    """Exact gate counters; global phases count as neither SQG nor CNOT."""
    sqg = cnot = 0
    for g in circuit.gates:
        if g.kind == "CNOT":
            cnot += 1
        elif g.kind != "GPHASE":
            sqg += 1
    return GateCounts(sqg, cnot)


# ---------------------------------------------------------------------------
# Single-term exponentials
# ---------------------------------------------------------------------------

def exponentiate_term(term: PauliString, theta: float, width: int) -> Circuit:
    """Circuit for exp(-i * theta * term), term coefficient included.

    The RZ angle is 2 * theta * coefficient (RZ(a) = exp(-i a Z / 2)); an
    identity term compiles to the single global phase exp(-i theta c).
    """
    if abs(term.coeff.imag) > 1e-12:
        raise ValueError("cannot exponentiate a term with complex coefficient")
    if term.n > width:
        raise ValueError("term does not fit the circuit width")
    angle = theta * term.coeff.real
    circ = Circuit(width)
    support = term.support
    if not support:
        circ.append(Gate("GPHASE", (), -angle))
        return circ

    forward: list[Gate] = []
    for q in support:
        label = term.label(q)
        if label == "X":
            forward.append(Gate("H", (q,)))
        elif label == "Y":
            forward.append(Gate("RXF", (q,)))
    for g in forward:
        circ.append(g)

    ladder = [
        Gate("CNOT", (support[k], support[k - 1]))
        for k in range(len(support) - 1, 0, -1)
    ]
    for g in ladder:
        circ.append(g)
    circ.append(Gate("RZ", (support[0],), 2.0 * angle))
    for g in reversed(ladder):
        circ.append(g)
    for g in reversed(forward):
        circ.append(Gate("RXI", g.qubits) if g.kind == "RXF" else g)
    return circ


# ---------------------------------------------------------------------------
# Product-formula schedules
# ---------------------------------------------------------------------------

# Order-4 split constants: four copies of p1 bracket p3 = 1 - 4 p1.
_P1 = 1.0 / (4.0 - 4.0 ** (1.0 / 3.0))

_SEQUENCES: dict[int, tuple[tuple[int, float], ...]] = {
    1: ((0, 1.0), (1, 1.0)),
    2: ((0, 0.5), (1, 1.0), (0, 0.5)),
    3: (
        (0, 7.0 / 24.0),
        (1, 2.0 / 3.0),
        (0, 3.0 / 4.0),
        (1, -2.0 / 3.0),
        (0, -1.0 / 24.0),
        (1, 1.0),
    ),
    4: tuple(
        (block, p * scale)
        for p in (_P1, _P1, 1.0 - 4.0 * _P1, _P1, _P1)
        for block, scale in ((0, 0.5), (1, 1.0), (0, 0.5))
    ),
}

ORDERINGS = ("naive", "interleaved")


@dataclass(frozen=True)
class TrotterSchedule:
    """Exponent sequence for one step of a two-block product formula."""

    order: int
    steps: int
    ordering: str = "naive"
    sequence: tuple[tuple[int, float], ...] = ()

    def __post_init__(self) -> None:
        if self.ordering not in ORDERINGS:
            raise ValueError(f"ordering must be one of {ORDERINGS}")
        if self.steps < 1:
            raise ValueError("step count must be >= 1")


def suzuki_schedule(order: int, steps: int, ordering: str = "naive") -> TrotterSchedule:
    """The order-1..4 product formula as a per-step (block, scale) sequence."""
    if order not in _SEQUENCES:
        raise ValueError(f"unsupported product-formula order {order}; expected 1..4")
    return TrotterSchedule(order, steps, ordering, _SEQUENCES[order])


def _magnitude_sorted(part: PauliSum) -> list[PauliString]:
    # descending |coefficient|; equal magnitudes keep canonical pattern order
    return sorted(part.terms(), key=lambda t: -abs(t.coeff))


def interleaved_terms(ph: PartitionedHamiltonian) -> list[PauliString]:
    """First-order step ordering that alternates terms across the two blocks.

    Both blocks are sorted by descending coefficient magnitude, then terms
    alternate starting from the first block until the second is exhausted;
    the rest of the first block follows.
    """
    if len(ph.parts) != 2:
        raise ValueError("interleaved ordering requires exactly two blocks")
    a = _magnitude_sorted(ph.parts[0])
    b = _magnitude_sorted(ph.parts[1])
    out: list[PauliString] = []
    for k in range(max(len(a), len(b))):
        if k < len(a):
            out.append(a[k])
        if k < len(b):
            out.append(b[k])
    return out


def step_terms(
    ph: PartitionedHamiltonian, schedule: TrotterSchedule, ordering: str | None = None
) -> list[tuple[PauliString, float]]:
    """(term, scale) sequence for a single step of the schedule."""
    ordering = schedule.ordering if ordering is None else ordering
    if ordering not in ORDERINGS:
        raise ValueError(f"ordering must be one of {ORDERINGS}")
    if ordering == "interleaved":
        if schedule.order != 1:
            raise ValueError("interleaved ordering is defined for first order only")
        return [(t, 1.0) for t in interleaved_terms(ph)]
    if len(ph.parts) == 2:
        seq = schedule.sequence
    elif schedule.order == 1:
        seq = tuple((k, 1.0) for k in range(len(ph.parts)))
    else:
        raise ValueError("orders above 1 require exactly two blocks")
    out: list[tuple[PauliString, float]] = []
    for block, scale in seq:
        out.extend((t, scale) for t in ph.parts[block].terms())
    return out


def trotter_circuit(
    ph: PartitionedHamiltonian,
    schedule: TrotterSchedule,
    time: float = 1.0,
    ordering: str | None = None,
) -> Circuit:
    """Concatenated per-term exponentials for the full schedule."""
    terms = step_terms(ph, schedule, ordering)
    dt = time / schedule.steps
    circ = Circuit(ph.n)
    for _ in range(schedule.steps):
        for term, scale in terms:
            circ.extend(exponentiate_term(term, scale * dt, ph.n))
    return circ

import numpy as np
import pytest
import scipy.linalg

from f2q.circuits import (
    Circuit,
    Gate,
    exponentiate_term,
    gate_count,
    interleaved_terms,
    step_terms,
    suzuki_schedule,
    trotter_circuit,
)
from f2q.pauli import PauliString
from f2q.spectral import run_circuit, trotter_propagator


def circuit_matrix(circ):
    dim = 1 << circ.width
    out = np.zeros((dim, dim), dtype=complex)
    for k in range(dim):
        basis = np.zeros(dim, dtype=complex)
        basis[k] = 1.0
        out[:, k] = run_circuit(circ, basis)
    return out


def test_z_chain_costs():
    circ = exponentiate_term(PauliString.from_pattern("ZZZZ"), 0.3, 4)
    counts = circ.counts()
    assert (counts.sqg, counts.cnot) == (1, 6)


def test_mixed_basis_costs():
    circ = exponentiate_term(PauliString.from_pattern("YXXY"), 0.3, 4)
    counts = circ.counts()
    assert (counts.sqg, counts.cnot) == (9, 6)


def test_identity_term_is_pure_phase():
    circ = exponentiate_term(PauliString.from_pattern("IIII", -0.8), 1.0, 4)
    counts = circ.counts()
    assert (counts.sqg, counts.cnot, counts.total) == (0, 0, 0)
    assert [g.kind for g in circ.gates] == ["GPHASE"]
    assert np.allclose(circuit_matrix(circ), np.exp(0.8j) * np.eye(16))


def test_complex_coefficient_rejected():
    with pytest.raises(ValueError, match="complex"):
        exponentiate_term(PauliString.from_pattern("Z", 1.0j), 0.5, 1)


def test_count_law_random():
    rng = np.random.default_rng(12)
    for _ in range(100):
        n = int(rng.integers(1, 6))
        p = PauliString(n, int(rng.integers(0, 1 << n)), int(rng.integers(0, 1 << n)), 1.0)
        counts = exponentiate_term(p, 0.1, n).counts()
        w = p.weight
        m = sum(1 for q in p.support if p.label(q) in "XY")
        if w == 0:
            assert counts.total == 0
        else:
            assert counts.cnot == 2 * (w - 1)
            assert counts.sqg == 1 + 2 * m


def test_exponential_matches_expm():
    rng = np.random.default_rng(13)
    for _ in range(50):
        n = int(rng.integers(1, 5))
        p = PauliString(
            n, int(rng.integers(0, 1 << n)), int(rng.integers(0, 1 << n)),
            float(rng.normal()),
        )
        theta = float(rng.normal())
        got = circuit_matrix(exponentiate_term(p, theta, n))
        want = scipy.linalg.expm(-1j * theta * p.to_matrix())
        assert np.max(np.abs(got - want)) < 1e-10


def test_schedule_structures():
    assert suzuki_schedule(1, 3).sequence == ((0, 1.0), (1, 1.0))
    assert suzuki_schedule(2, 1).sequence == ((0, 0.5), (1, 1.0), (0, 0.5))
    with pytest.raises(ValueError):
        suzuki_schedule(5, 1)
    with pytest.raises(ValueError):
        suzuki_schedule(1, 0)


def test_fourth_order_constants():
    seq = suzuki_schedule(4, 1).sequence
    assert len(seq) == 15
    for block in (0, 1):
        assert abs(sum(s for b, s in seq if b == block) - 1.0) < 1e-12
    p1 = 1.0 / (4.0 - 4.0 ** (1.0 / 3.0))
    assert abs((1.0 - 4.0 * p1) + 4.0 * p1 - 1.0) < 1e-15


def test_third_order_scales_sum_to_one():
    seq = suzuki_schedule(3, 1).sequence
    for block in (0, 1):
        assert abs(sum(s for b, s in seq if b == block) - 1.0) < 1e-12


def test_table_gate_totals(part_bk, part_jw):
    one = suzuki_schedule(1, 1)
    assert trotter_circuit(part_bk, one).counts().total == 74
    assert trotter_circuit(part_jw, one).counts().total == 82
    assert trotter_circuit(part_bk, suzuki_schedule(1, 3)).counts().total == 222
    assert trotter_circuit(part_bk, suzuki_schedule(1, 11)).counts().total == 814
    assert trotter_circuit(part_jw, suzuki_schedule(1, 11)).counts().total == 902
    assert trotter_circuit(part_jw, suzuki_schedule(1, 4)).counts().total == 328


def test_part_counts(part_bk, part_jw):
    from f2q.hamiltonian import partition_commuting

    expect = {("bk", 0): (10, 24), ("bk", 1): (20, 20),
              ("jw", 0): (10, 12), ("jw", 1): (36, 24)}
    for tag, ph in (("bk", part_bk), ("jw", part_jw)):
        for k, part in enumerate(ph.parts):
            circ = trotter_circuit(partition_commuting(part), suzuki_schedule(1, 1))
            counts = circ.counts()
            assert (counts.sqg, counts.cnot) == expect[(tag, k)]


def test_interleaved_ordering_structure(part_bk):
    terms = interleaved_terms(part_bk)
    assert len(terms) == 15
    # alternates starting from the diagonal block, largest magnitudes first
    assert terms[0].weight == 0                     # identity leads the diagonal list
    assert abs(terms[1].coeff) == pytest.approx(0.04532175)
    mags = [abs(t.coeff) for t in terms[0::2][:6]]  # diagonal slots descend
    assert mags == sorted(mags, reverse=True)


def test_interleaved_requires_two_blocks_first_order(part_bk):
    with pytest.raises(ValueError, match="first order"):
        step_terms(part_bk, suzuki_schedule(2, 1), "interleaved")
    from f2q.hamiltonian import partition_commuting

    single = partition_commuting(part_bk.parts[0])
    with pytest.raises(ValueError, match="two blocks"):
        interleaved_terms(single)
    # a single commuting block is fine for first-order naive
    circ = trotter_circuit(single, suzuki_schedule(1, 2))
    assert circ.counts().total == 2 * 34
    with pytest.raises(ValueError, match="two blocks"):
        trotter_circuit(single, suzuki_schedule(2, 1))


def test_trotter_circuit_matches_dense_propagator(part_bk):
    for order in (1, 2, 3, 4):
        for steps in (1, 2, 4):
            sched = suzuki_schedule(order, steps)
            got = circuit_matrix(trotter_circuit(part_bk, sched, 1.0))
            want = trotter_propagator(part_bk, sched, 1.0)
            assert np.max(np.abs(got - want)) < 1e-9


def test_interleaved_circuit_matches_dense(part_bk):
    sched = suzuki_schedule(1, 3, "interleaved")
    got = circuit_matrix(trotter_circuit(part_bk, sched, 1.0))
    want = trotter_propagator(part_bk, sched, 1.0)
    assert np.max(np.abs(got - want)) < 1e-9


def test_circuit_text_round_trip(part_bk):
    circ = trotter_circuit(part_bk, suzuki_schedule(1, 1))
    text = circ.to_text()
    back = Circuit.from_text(text)
    assert back.width == circ.width and back.gates == circ.gates
    assert text.startswith("width 4\n")


def test_circuit_text_errors():
    with pytest.raises(ValueError, match="width"):
        Circuit.from_text("CNOT 0 1\n")
    with pytest.raises(ValueError, match="unknown gate"):
        Circuit.from_text("width 2\nTOFFOLI 0 1\n")


def test_gate_validation():
    with pytest.raises(ValueError, match="unknown gate kind"):
        Gate("SWAP", (0, 1))
    with pytest.raises(ValueError, match="finite"):
        Gate("RZ", (0,), float("nan"))
    circ = Circuit(2)
    with pytest.raises(ValueError, match="width"):
        circ.append(Gate("H", (2,)))


def test_gate_count_excludes_global_phase():
    circ = Circuit(1, [Gate("GPHASE", (), 0.4), Gate("H", (0,))])
    counts = gate_count(circ)
    assert (counts.sqg, counts.cnot, counts.total) == (1, 0, 1)
    empty = gate_count(Circuit(3))
    assert (empty.sqg, empty.cnot, empty.total) == (0, 0, 0)

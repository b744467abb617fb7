"""Fermion-to-qubit compilation toolkit.

Maps second-quantized electronic-structure operators onto Pauli-string
qubit operators under the Jordan-Wigner, parity, and Bravyi-Kitaev
encodings, lowers the results to gate circuits through product-formula
schedules with exact gate accounting, and evaluates eigenvalue precision
against gate cost on dense state vectors.
"""

from .encodings import (
    BasisState,
    bk_matrix,
    bk_inverse_matrix,
    parity_matrix,
    derived_sets,
    encode_state,
    flip_set,
    parity_set,
    remainder_set,
    y_phase_set,
    sets_table,
    update_set,
)
from .pauli import PauliString, PauliSum, dump_sum, ladder, parity_projector, parse_sum
from .fermions import (
    ENCODINGS,
    FermionOperator,
    bk_flip_ladder,
    coulomb_exchange,
    double_excitation_operator,
    excitation_operator,
    fermionic_oracle,
    hopping_product,
    mode_operator,
    number_excitation_operator,
    number_operator,
)
from .hamiltonian import (
    IntegralTable,
    PartitionedHamiltonian,
    build_hamiltonian,
    load_integrals,
    partition_commuting,
)
from .circuits import (
    Circuit,
    Gate,
    GateCounts,
    TrotterSchedule,
    exponentiate_term,
    gate_count,
    suzuki_schedule,
    trotter_circuit,
)
from .spectral import (
    SpectralResult,
    exact_phase_energy,
    ground_state,
    precision_sweep,
    run_circuit,
    trotter_phase_estimate,
    write_csv,
)

__version__ = "0.1.0"

H2_INTEGRALS = "h2_sto3g.int"


def h2_integral_path() -> str:
    """Path of the bundled molecular-hydrogen integral fixture."""
    from importlib.resources import files

    return str(files("f2q").joinpath("data", H2_INTEGRALS))

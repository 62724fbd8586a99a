"""Two-qubit Heisenberg XYZ resource under Milburn intrinsic decoherence.

Dynamics, negativity, and the quality of the evolving state as a resource for
standard teleportation and for entanglement teleportation.
"""

from .dynamics import (
    KrausSet,
    XState,
    asymptotic_state,
    integrate_master_equation,
    kraus_operators,
    long_time,
    propagate,
    propagate_kraus,
    propagate_xstate_closed_form,
    trace_distance,
)
from .entanglement import negativity, negativity_xstate, partial_transpose
from .enttel import (
    T1Input,
    T1Output,
    t1_average_fidelity,
    t1_average_fidelity_quadrature,
    t1_fidelity,
    t1_fidelity_coefficients,
    t1_output_components,
    t1_output_negativity,
    teleport_t1,
)
from .errors import (
    DegenerateClosedForm,
    InvalidScenario,
    NoDephasing,
    NotXState,
    ParseError,
    StepTooLarge,
    TruncationFailure,
    ValidationError,
)
from .model import (
    ModelParams,
    Spectrum,
    build_hamiltonian,
    closed_form_spectrum,
    numeric_spectrum,
    thermal_state,
)
from .states import named_state
from .teleport import (
    BellProbabilities,
    QubitAngles,
    T0Case,
    bell_probabilities,
    bell_probabilities_trace,
    max_fidelity_t0,
    phi_max_asymptotic,
    phi_max_case,
    teleport_t0,
)

__version__ = "0.1.0"

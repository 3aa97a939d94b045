"""Holonomic control of the degenerate dark subspace of driven Lambda-type
ensembles in a cavity: sector enumeration, Hamiltonians, Zeno/dark-subspace
extraction, non-Abelian holonomies, SU(2) gate synthesis, collective-state
preparation and time-dependent dynamics."""

from .application import (
    DICKE_PATH,
    EStateSpec,
    apply_holonomy,
    baseline_ramp_fidelity,
    build_e_state,
    dicke_fidelity,
    initial_product_state,
    prepare_dicke_holonomic,
    search_dicke_path,
)
from .dynamics import (
    DEFAULT_T_SCALE,
    DICKE_WEIGHTS,
    EvolutionReport,
    Schedule,
    dicke_schedule,
    evolve,
    fidelity_sweep,
    smooth_progress,
)
from .fock import (
    BasisState,
    SectorBasis,
    SectorConfig,
    apply_ladder,
    bilinear,
    dicke_vector,
    enumerate_basis,
    operator_string,
)
from .gates import (
    AxisAngle,
    approximate_x,
    axis_angle,
    bloch_point,
    coverage_fraction,
    default_generators,
    find_theta_star,
    universality_sample,
)
from .holonomy import (
    HolonomyResult,
    TransportError,
    c_y,
    closed_form_phi,
    closed_form_program,
    closed_form_theta,
    compose_w,
    compose_w_prime,
    phi_loop_coefficients,
    proj_distance,
    transport,
)
from .model import (
    ControlParams,
    ModelConfig,
    build_h,
    build_hg,
    build_homega,
    build_n,
    build_parity,
)
from .paths import (
    PathContinuityError,
    PathProgram,
    PathSyntaxError,
    PhiLoop,
    ThetaRamp,
    parse_angle,
    parse_path,
    theta_ramp_program,
    w_prime_program,
    w_program,
)
from .subspace import (
    EffectiveBlock,
    Frame,
    dark_coefficients_42,
    dark_frame,
    degeneracy_scan,
    effective_block,
    null_space,
    zeno_frame,
    zeta_states,
)

__version__ = "0.1.0"

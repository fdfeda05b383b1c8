"""Decoding thresholds and Markov-channel success bounds for spatially
coupled LDPC protographs with sub-block access, via BEC density evolution."""

__version__ = "0.1.0"

from .density_evolution import (
    ClampSpec,
    DeConfig,
    DeResult,
    Direction,
    INFINITE,
    de_run,
    helper_transfer,
    iterated_transfer,
    protograph_threshold,
    q_of,
    regular_fixed_point,
    target_de,
    target_threshold,
)
from .errors import NonConvergenceError, ProtographValidationError, ThresholdSearchError
from .kernels import BACKEND as KERNEL_BACKEND
from .markov import (
    ChannelModel,
    DecoderChain,
    SbStateChain,
    SbStateMap,
    SequenceVerdict,
    anti_termination_closed_form,
    classify_sequence,
    count_sequences,
    decoder_chain,
    gilbert_elliott,
    iid_channel,
    one_sided_success,
    pseudo_termination_prob,
    reverse_chain,
    sb_state_chain,
    sb_state_map,
    stationary,
    two_sided_success,
)
from .protograph import (
    CoupledChain,
    DegreeProfile,
    PermutationWitness,
    Protomatrix,
    SubBlockProto,
    couple,
    cutting_vector_sb,
    degree_profile,
    dump_protograph,
    enumerate_symmetric_designs,
    is_realizable_binary,
    is_symmetric_degree_profile,
    is_symmetric_sb,
    load_protograph,
    uncoupled_sb,
)
from .thresholds import (
    PhiPsi,
    SbThresholds,
    SgThresholdReport,
    delta_hat,
    eps3_via_protograph,
    global_threshold,
    phi_psi,
    sb_thresholds,
    sg_threshold,
    theorem1_report,
)

__all__ = [name for name in dir() if not name.startswith("_")]

//! Consistent sequences of Hecke modules (FI_H-modules) and their
//! stability invariants, all computed within a finite truncation `n_max`.

mod experiments;
mod free;
mod sequence;
mod span;
mod stability;

pub use experiments::{
    noetherian_experiment, run_trial, shift_decompose_mm, NoetherianReport, NoetherianTrial, ShiftDecomposition,
};
pub use free::{build_free, build_m, build_m_specht, free_cover, unbounded_sequence, FreeCover, FreeSequence, Summand};
pub use sequence::{
    check_consistency, cokernel, direct_sum, kernel, shift, tensor, ConsistencyVerdict, ConsistentSequence,
    SequenceMorphism,
};
pub use span::{close_under, generation_degree, span, span_spaces, GenerationDegree, SpanResult};
pub use stability::{
    decompositions, degrees, is_uniformly_stable, multiplicity_table, phi_a, weight, DegreeReport, MapVerdict,
    MultiplicityTable, PhiA, StabilityVerdict, TransitionCheck,
};

//! Chain complex `K_n`, the cochain complex with values in a graded
//! bimodule, and cohomology groups over fields and the integers.

pub mod chain;
pub mod cochain;
pub mod groups;

pub use chain::{
    boundary_apply, boundary_matrix, boundary_squared_witness, contraction_p, homotopy_apply, homotopy_s,
    homotopy_witness,
};
pub use cochain::{coboundary, coboundary_matrix, complex_witness, CochainSpace, Support};
pub use groups::{
    check_complex, cohomology_group, derivations, inner_derivations, is_coboundary, is_cocycle,
    outer_derivations, CocycleCheck, CohomologyGroup,
};

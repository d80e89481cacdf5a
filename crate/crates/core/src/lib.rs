//! Exact q-series expansions of affine A_r^(1) characters.
//!
//! The character of an integrable highest-weight module is computed from the
//! permutation weights of its shifted affine Weyl orbit: dominant horizontal
//! weights grouped by depth, each carrying a sign. The same numbers are
//! reproduced independently from shell-organized theta sums and, for the
//! basic module, from the closed form `Θ(A_r)/Φ^r`.

pub mod character;
pub mod error;
pub mod lattice;
pub mod orbits;
pub mod qseries;
pub mod symmetric;
pub mod theta;

pub use character::{
    anomaly, character_at_point, normalized_character, permutation_weights,
    signed_dimension_series, CharacterSeries, Method, PointCharacter,
};
pub use error::{Error, Result};
pub use lattice::{
    inner_product, root_shell, weyl_vector, DynkinLabels, HorizontalWeight, Rank, RootShell,
};
pub use orbits::{
    compose_lemma, enumerate_fundamental, enumerate_translations, make_shifted_spec,
    signature_index, AffineDominant, PermutationWeight, PermutationWeightRecord,
    PermutationWeightSet, ShiftedOrbitSpec,
};
pub use qseries::{basic_character_rhs, euler_phi, lattice_theta, QSeries};
pub use symmetric::{
    alternant, homogeneous_table, schur_value, weight_alternant, weyl_dimension,
    weyl_dimension_jacobi_trudi, EvaluationPoint, HomogeneousTable,
};
pub use theta::{guaranteed_order, oracle_character, shell_sum, t_polynomial, TPolynomial};

//! The structural statements about `P_G`: the degrevlex basis, the shape of
//! the lex basis, minimal primes over an anti-diagonal variable, finite-field
//! evidence for that decomposition, and the class group rank.

pub mod classify;
pub mod minprimes;
pub mod rank;
pub mod revlex;
pub mod variety;

pub use classify::{
    classify_basis, classify_element, lex_gb_classify, reduced_lex_basis, ClassifiedElement,
    LexGBClassification, Template,
};
pub use minprimes::{
    check_edge_primes, check_min_y, min_y_count, min_y_enumerate, minimal_primes, EdgePrimeReport,
    MinYReport, MinimalPrimeWitness, VertexSelection, WitnessClass, WitnessDetail,
};
pub use rank::{
    class_group_rank, find_graph_with_rank, rank_bounds, survey, BoundStatus, ClassGroupReport,
    RankRealisation, SurveyEntry, SurveyReport,
};
pub use revlex::{verify_revlex_gb, RevlexReport};
pub use variety::{variety_check, VarietyReport, POINT_GUARD};

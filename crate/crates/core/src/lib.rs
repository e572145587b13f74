//! Energies of unicyclic graphs: exact characteristic polynomials, root
//! isolation, Coulson-integral quadrature, closed forms for the lollipop
//! family, polynomial sign certificates and exhaustive extremal search.

pub mod certify;
pub mod charpoly;
pub mod closed_forms;
pub mod energy;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod graph;
pub mod graph6;
pub mod jacobi;
pub mod poly;
pub mod quadrature;
pub mod roots;
pub mod sturm;
pub mod tables;
pub mod trees;

pub use charpoly::{charpoly, charpoly_general_reference, matching_count};
pub use energy::{
    cycle_energy_reference, energy, energy_coulson, energy_diff_coulson, energy_eigensolver_oracle, Method,
};
pub use error::{Error, Result};
pub use graph::{make_cycle, make_cycle_with_pendants, make_lollipop, make_path, Graph};
pub use graph6::{format_graph6, parse_graph6};
pub use poly::IntPolynomial;
pub use roots::{energy_of_poly, isolate_real_roots, EnergyValue, RootEnclosure, Spectrum};
pub use certify::{
    certify_poly_sign, certify_radical_sign, run_claim_suite, verify_certificate, Asserted, ClaimStatus, Domain,
    SignCertificate, SuiteReport, Verdict,
};
pub use closed_forms::{
    check_lemma6_identity, eval_f_factored, eval_pq, eval_sample, modulus_sq_P6, modulus_sq_Pt, ClosedFormSample,
    ClosedForms,
};
pub use enumerate::{count_unicyclic, max_energy_search, unicyclic_graphs, SearchResult, UnicyclicCode};
pub use tables::{reproduce_table, TableId, TableReport};
pub use trees::{rooted_trees, LevelSequence};

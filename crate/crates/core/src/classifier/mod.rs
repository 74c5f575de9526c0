//! Global classification: the two-site census, the five-site enumeration of
//! local translation-invariant maps, staircase realizations and circuit witnesses.

mod census;
mod circuit;
mod five_site;
mod realize;

pub use census::{census_c2, Census, CensusCounts, CensusEntry};
pub use circuit::{
    circuit_depth_witness, commutes_with_translates, decoration_factors, witness_for_pair,
    CircuitLayer, LayeredCircuit, WitnessError,
};
pub use five_site::{
    consistent_pairs, enumerate_5site, family_instances, match_family, ImagePair, Survivor, RADIUS,
};
pub use realize::{
    base_gate, cycle3, one_site_cliffords, realize_staircase, shifted_u1, Realization, RealizeError,
};

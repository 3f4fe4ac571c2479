//! Cyclotomic numbers, Puiseux series and witness construction.

pub mod cyclo;
pub mod series;
pub mod witness;

pub use cyclo::{cyclotomic_poly, poly_from_roots, CycloNumber};
pub use series::{PuiseuxSeries, SeriesError, Val};
pub use witness::{
    build_witness_central, build_witness_gl, eval_character, Check, WitnessError, WitnessReport,
};

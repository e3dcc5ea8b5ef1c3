//! Rational cubic examples: polynomial arithmetic, Galois types, general
//! position, certified Eckardt checks and the end-to-end pipeline.

mod galois;
mod interval;
mod poly;
mod position;

pub use galois::{check_cubic, cubic_galois_type, rational_roots, rational_square_class};
pub use interval::{approximate_roots, certified_roots, max_width, sqrt_upper, ComplexInterval, Interval, Rounded};
pub use poly::{parse_rational, Poly, QPoly};
pub use position::{
    companion, general_position, sextic, triple_sum_determinant, wedge3_basis, wedge3_derivation, GeneralPosition,
    QMatrix,
};

pub mod eckardt;
mod pipeline;

pub use eckardt::{eckardt_concurrent, eckardt_concurrent_with_cap, Concurrency, EckardtCheck};
pub use pipeline::{
    brauer_for_galois_type, example_brauer, example_report, example_report_with_cap, principality_check,
    search_shift, ExampleReport, PrincipalityReport,
};

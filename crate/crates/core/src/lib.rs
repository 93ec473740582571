//! Exact-arithmetic verification library: cyclotomic numbers, symmetric
//! functions in the power-sum basis, finite-group character theory,
//! two-letter weight combinatorics, ordered-set tensor calculus, quadratic
//! scalar derivations, and the named verification suites that tie them
//! together. All arithmetic is exact; nothing here uses floating point.

pub mod chartheory;
pub mod delannoy;
pub mod exactnum;
pub mod ofrob;
pub mod report;
pub mod scalaralg;
pub mod suites;
pub mod symfunc;

pub use chartheory::{ClassFunction, GroupTable};
pub use delannoy::{Weight, WeightMultiset};
pub use exactnum::{Cyclotomic, Rational};
pub use ofrob::{Morphism, OFrobAlgebra};
pub use report::{CheckResult, CheckStatus, Report, SuiteParams};
pub use scalaralg::QuadraticScalar;
pub use symfunc::{Partition, PowerSumPoly};

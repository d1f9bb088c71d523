//! Exact arithmetic: integers, Laurent polynomials, rational functions,
//! q-shifted factorials and truncated power series.

pub mod factor;
pub mod gcd;
pub mod int;
pub mod mono;
pub mod parse;
pub mod poly;
pub mod qpoch;
pub mod ratfunc;
pub mod series;
pub mod symbols;

pub use int::Int;
pub use mono::Mono;
pub use parse::parse_ratfunc;
pub use poly::Poly;
pub use qpoch::{qpoch, qpoch_inf_inv_series, qpoch_inf_series};
pub use ratfunc::RatFunc;
pub use series::TruncSeries;
pub use symbols::{Symbol, SymbolKind};

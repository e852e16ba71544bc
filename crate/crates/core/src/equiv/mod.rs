//! Equivalence decisions for square-free quartics and quintics and for the
//! germ families `V_t` and `V_{s,t}`, with an interval-numeric path for
//! irrational or complex parameters.

mod decide;
mod expr;
mod interval;

pub use decide::{
    adaptive, equivalent_quartics, equivalent_quintics, germ_equiv_family_st, germ_equiv_family_t,
    numeric_eval, Comparison, EquivalenceVerdict, Mode, NumericValue, Value, DEFAULT_DIGITS,
};
pub use expr::{pi, sin_cos, Expr};
pub use interval::{decimal, scientific, ComplexInterval, Interval};

#[cfg(test)]
mod tests;

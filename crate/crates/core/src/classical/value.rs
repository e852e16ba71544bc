use num_rational::BigRational;

use crate::ratpoly::Ring;

/// An absolute invariant kept as the ratio `numerator / denominator` of two
/// relative invariants. It is *defined* exactly when the denominator is nonzero;
/// undefined values are ordinary values so batch evaluation never aborts.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantValue<R: Ring = BigRational> {
    pub name: &'static str,
    pub numerator: R,
    pub denominator: R,
}

impl<R: Ring> InvariantValue<R> {
    pub fn new(name: &'static str, numerator: R, denominator: R) -> Self {
        InvariantValue {
            name,
            numerator,
            denominator,
        }
    }

    pub fn is_defined(&self) -> bool {
        !self.denominator.is_zero()
    }

    /// The exact quotient, if defined and if the ring can divide.
    pub fn value(&self) -> Option<R> {
        if !self.is_defined() {
            return None;
        }
        self.numerator.exact_div(&self.denominator).ok()
    }

    /// Equality of two defined ratios by cross-multiplication. `None` if
    /// either side is undefined.
    pub fn same_as(&self, other: &Self) -> Option<bool> {
        if !self.is_defined() || !other.is_defined() {
            return None;
        }
        Some(
            self.numerator.clone() * &other.denominator
                == other.numerator.clone() * &self.denominator,
        )
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> InvariantValue<S> {
        InvariantValue::new(self.name, f(&self.numerator), f(&self.denominator))
    }
}

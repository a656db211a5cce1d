//! Orthonormal basis tags.
//!
//! Every operator carries a domain and codomain tag. Two operators compose
//! only when the tags fit; tags also fix the dimension of the coefficient
//! space. All built-in families are orthonormal in L2(0,1), so the adjoint of
//! a coefficient matrix is its conjugate transpose.

use std::fmt;

/// Identifies the orthonormal basis carried by one coefficient slot.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BasisTag {
    /// `sqrt(2) sin(n pi y)` for `n = 1..=N`; dimension `N`.
    Sine(usize),
    /// `1, sqrt(2) cos(n pi y)` for `n = 1..=N`; dimension `N + 1`.
    Cosine(usize),
    /// Anonymous orthonormal basis of the given dimension.
    Abstract(usize),
    /// Direct sum of the parts; dimension is the sum of part dimensions.
    Product(Vec<BasisTag>),
}

impl BasisTag {
    pub fn dim(&self) -> usize {
        match self {
            BasisTag::Sine(n) => *n,
            BasisTag::Cosine(n) => *n + 1,
            BasisTag::Abstract(d) => *d,
            BasisTag::Product(parts) => parts.iter().map(BasisTag::dim).sum(),
        }
    }

    /// Direct sum of two copies of `self`, the carrier of 2x2 block operators.
    pub fn doubled(&self) -> BasisTag {
        BasisTag::Product(vec![self.clone(), self.clone()])
    }
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisTag::Sine(n) => write!(f, "Sine({n})"),
            BasisTag::Cosine(n) => write!(f, "Cosine({n})"),
            BasisTag::Abstract(d) => write!(f, "Abstract({d})"),
            BasisTag::Product(parts) => {
                write!(f, "Product(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims() {
        assert_eq!(BasisTag::Sine(4).dim(), 4);
        assert_eq!(BasisTag::Cosine(4).dim(), 5);
        assert_eq!(
            BasisTag::Product(vec![BasisTag::Sine(4), BasisTag::Cosine(4)]).dim(),
            9
        );
        assert_eq!(BasisTag::Abstract(7).dim(), 7);
    }

    #[test]
    fn display_names_both_tags() {
        let t = BasisTag::Product(vec![BasisTag::Sine(2), BasisTag::Cosine(2)]);
        assert_eq!(t.to_string(), "Product(Sine(2), Cosine(2))");
    }
}

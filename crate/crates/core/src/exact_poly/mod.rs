//! Exact integer polynomials, products of linear factors `(1 + d t)`, and the
//! rational power series built from them.

mod factors;
mod poly;
mod rational;

pub use factors::LinearFactorProduct;
pub use poly::IntPoly;
pub use rational::{PolyFraction, RationalSeries};

/// Product `a · b`.
pub fn poly_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    a * b
}

/// Drops all terms of degree greater than `n`.
pub fn poly_truncate(p: &IntPoly, n: usize) -> IntPoly {
    p.truncate(n)
}

/// Coefficients `a_0..=a_order` of the expansion of `f`.
pub fn series_expand(f: &RationalSeries, order: usize) -> IntPoly {
    f.expand(order)
}

pub fn reduce(f: &RationalSeries) -> RationalSeries {
    f.reduce()
}

pub fn rat_mul(f: &RationalSeries, g: &RationalSeries) -> RationalSeries {
    f.mul(g)
}

pub fn rat_add(f: &RationalSeries, g: &RationalSeries) -> RationalSeries {
    f.add(g)
}

/// `f(-t/(1+t))` as a plain polynomial fraction.
pub fn subst_dual(f: &RationalSeries) -> PolyFraction {
    f.subst_dual()
}

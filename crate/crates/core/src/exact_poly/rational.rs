use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{IntPoly, LinearFactorProduct};

/// The formal power series `numerator(t) / ∏_j (1 + d_j t)`.
///
/// A value may be held in unreduced ("generator") form; [`RationalSeries::reduce`]
/// yields the unique representative in which no denominator factor divides the
/// numerator. Derived equality compares representatives, so compare reduced
/// forms (or use [`RationalSeries::same_function`]) when testing for equality of
/// rational functions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalSeries {
    numerator: IntPoly,
    denominator: LinearFactorProduct,
}

impl RationalSeries {
    pub fn new(numerator: IntPoly, denominator: LinearFactorProduct) -> Self {
        Self {
            numerator,
            denominator,
        }
    }

    pub fn polynomial(p: IntPoly) -> Self {
        Self::new(p, LinearFactorProduct::one())
    }

    pub fn one() -> Self {
        Self::polynomial(IntPoly::one())
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &LinearFactorProduct {
        &self.denominator
    }

    pub fn into_parts(self) -> (IntPoly, LinearFactorProduct) {
        (self.numerator, self.denominator)
    }

    /// Coefficients `a_0..=a_order` of the power-series expansion.
    pub fn expand(&self, order: usize) -> IntPoly {
        expand_quotient(&self.numerator, &self.denominator.expand(), order)
    }

    /// Removes every factor `(1 + d t)` that divides the numerator exactly,
    /// repeating until no factor divides.
    pub fn reduce(&self) -> RationalSeries {
        let mut numerator = self.numerator.clone();
        let mut kept = Vec::with_capacity(self.denominator.len());
        for &d in self.denominator.factors() {
            match numerator.div_exact(&IntPoly::linear(BigInt::from(d))) {
                Some(q) => numerator = q,
                None => kept.push(d),
            }
        }
        // Factors are tried once each; a factor that failed cannot start
        // dividing after other divisions since (1 + d t) is prime in ℤ[t].
        let denominator = LinearFactorProduct::new(kept).expect("factors stay positive");
        RationalSeries::new(numerator, denominator)
    }

    pub fn is_reduced(&self) -> bool {
        self.denominator
            .multiplicities()
            .keys()
            .all(|&d| self.numerator.div_exact(&IntPoly::linear(BigInt::from(d))).is_none())
    }

    /// Product with the denominator multisets combined, then reduced.
    pub fn mul(&self, other: &RationalSeries) -> RationalSeries {
        RationalSeries::new(
            &self.numerator * &other.numerator,
            self.denominator.union(&other.denominator),
        )
        .reduce()
    }

    /// Sum over the multiset-lcm of the denominators, then reduced.
    pub fn add(&self, other: &RationalSeries) -> RationalSeries {
        let common = self.denominator.lcm(&other.denominator);
        let lift = |f: &RationalSeries| {
            let extra = common
                .difference(&f.denominator)
                .expect("lcm contains each operand");
            &f.numerator * &extra.expand()
        };
        RationalSeries::new(&lift(self) + &lift(other), common).reduce()
    }

    /// Rewrites over a larger denominator: `extra` factors are multiplied into
    /// both numerator and denominator.
    pub fn with_extra_factors(&self, extra: &LinearFactorProduct) -> RationalSeries {
        RationalSeries::new(
            &self.numerator * &extra.expand(),
            self.denominator.union(extra),
        )
    }

    /// Equality as rational functions, by cross-multiplication.
    pub fn same_function(&self, other: &RationalSeries) -> bool {
        &self.numerator * &other.denominator.expand() == &other.numerator * &self.denominator.expand()
    }

    /// The substitution `t ↦ -t/(1+t)`.
    ///
    /// With `p = deg P` and `r` factors, `1 + d(-t/(1+t)) = (1 - (d-1)t)/(1+t)`
    /// gives numerator `Σ_k p_k (-1)^k t^k (1+t)^{p-k}` times `(1+t)^{max(r-p,0)}`
    /// over `∏_j (1 - (d_j - 1)t)` times `(1+t)^{max(p-r,0)}`.
    pub fn subst_dual(&self) -> PolyFraction {
        let denominator: IntPoly = self
            .denominator
            .factors()
            .iter()
            .map(|&d| IntPoly::linear(-BigInt::from(d - 1)))
            .product();
        let Some(p) = self.numerator.degree() else {
            return PolyFraction::new(IntPoly::zero(), denominator);
        };
        let r = self.denominator.len();
        let top = dual_numerator(&self.numerator, p);
        let one_plus_t = IntPoly::linear(BigInt::one());
        let numerator = &top * &one_plus_t.pow(r.saturating_sub(p) as u32);
        let denominator = &denominator * &one_plus_t.pow(p.saturating_sub(r) as u32);
        PolyFraction::new(numerator, denominator)
    }
}

impl From<IntPoly> for RationalSeries {
    fn from(p: IntPoly) -> Self {
        Self::polynomial(p)
    }
}

/// A quotient of two integer polynomials, used where the denominator leaves the
/// `∏(1 + d t)` shape (the image of the duality substitution).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFraction {
    pub numerator: IntPoly,
    pub denominator: IntPoly,
}

impl PolyFraction {
    /// Normalizes the sign so the denominator's lowest-order coefficient is positive.
    pub fn new(numerator: IntPoly, denominator: IntPoly) -> Self {
        assert!(!denominator.is_zero(), "zero denominator");
        let negate = denominator
            .trailing_term()
            .is_some_and(|(_, c)| c.is_negative());
        if negate {
            Self {
                numerator: -numerator,
                denominator: -denominator,
            }
        } else {
            Self {
                numerator,
                denominator,
            }
        }
    }

    /// Power-series expansion to `order`; `None` unless the denominator's
    /// constant term is `±1` (otherwise the coefficients need not be integers).
    pub fn expand(&self, order: usize) -> Option<IntPoly> {
        let c0 = self.denominator.coeff(0);
        c0.abs()
            .is_one()
            .then(|| expand_quotient(&self.numerator, &self.denominator, order))
    }

    /// The substitution `t ↦ -t/(1+t)` for an arbitrary fraction. Common powers
    /// of `(1+t)` are cancelled.
    pub fn subst_dual(&self) -> PolyFraction {
        let one_plus_t = IntPoly::linear(BigInt::one());
        let b = self.denominator.degree().expect("nonzero denominator");
        let denominator = dual_numerator(&self.denominator, b);
        let Some(a) = self.numerator.degree() else {
            return PolyFraction::new(IntPoly::zero(), denominator);
        };
        let numerator = dual_numerator(&self.numerator, a);
        PolyFraction::new(
            &numerator * &one_plus_t.pow(b.saturating_sub(a) as u32),
            &denominator * &one_plus_t.pow(a.saturating_sub(b) as u32),
        )
    }

    pub fn same_function(&self, other: &PolyFraction) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }

    /// Multiplies the numerator by `-1`.
    pub fn negated(&self) -> PolyFraction {
        PolyFraction {
            numerator: -&self.numerator,
            denominator: self.denominator.clone(),
        }
    }
}

impl From<&RationalSeries> for PolyFraction {
    fn from(f: &RationalSeries) -> Self {
        PolyFraction::new(f.numerator.clone(), f.denominator.expand())
    }
}

/// `Σ_k c_k (-1)^k t^k (1+t)^{deg-k}` for `deg ≥ deg p`: the numerator of
/// `p(-t/(1+t))` over `(1+t)^deg`.
fn dual_numerator(p: &IntPoly, deg: usize) -> IntPoly {
    let one_plus_t = IntPoly::linear(BigInt::one());
    let mut powers = Vec::with_capacity(deg + 1);
    powers.push(IntPoly::one());
    for k in 1..=deg {
        powers.push(&powers[k - 1] * &one_plus_t);
    }
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            let c = if k % 2 == 1 { -c } else { c.clone() };
            powers[deg - k].shift(k).scale(&c)
        })
        .sum()
}

/// Expands `num / den` by the recurrence `a_k = p_k - Σ_{j≥1} e_j a_{k-j}`,
/// divided through by `e_0 = ±1`.
fn expand_quotient(num: &IntPoly, den: &IntPoly, order: usize) -> IntPoly {
    let e = den.coeffs();
    let e0_negative = e[0].is_negative();
    let mut a: Vec<BigInt> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut acc = num.coeff(k);
        for j in 1..e.len().min(k + 1) {
            acc -= &e[j] * &a[k - j];
        }
        a.push(if e0_negative { -acc } else { acc });
    }
    IntPoly::new(a)
}

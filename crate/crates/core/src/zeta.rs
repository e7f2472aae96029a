//! Segre zeta functions: constructors, the product for splayed sums, and the
//! structural checks every zeta must pass.
//!
//! A zeta function is stored in reduced form. Its trailing numerator term
//! `degree · t^codim` is cached alongside and recomputed on construction.

use log::warn;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Result, ZetaError};
use crate::exact_poly::{IntPoly, LinearFactorProduct, RationalSeries};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SegreZeta {
    rat: RationalSeries,
    codim: usize,
    degree: BigInt,
}

impl SegreZeta {
    /// Reduces `rat` and reads off codimension and degree from its trailing term.
    pub fn from_series(rat: RationalSeries) -> Result<Self> {
        let rat = rat.reduce();
        let (codim, degree) = codim_and_degree(&rat)?;
        if codim == 0 {
            return Err(ZetaError::InvalidSegreData(
                "constant term must vanish (codimension ≥ 1)".into(),
            ));
        }
        if !degree.is_positive() {
            return Err(ZetaError::NonPositiveDegree(degree.to_string()));
        }
        Ok(Self { rat, codim, degree })
    }

    pub fn series(&self) -> &RationalSeries {
        &self.rat
    }

    pub fn numerator(&self) -> &IntPoly {
        self.rat.numerator()
    }

    pub fn denominator(&self) -> &LinearFactorProduct {
        self.rat.denominator()
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn degree(&self) -> &BigInt {
        &self.degree
    }

    pub fn expand(&self, order: usize) -> IntPoly {
        self.rat.expand(order)
    }

    /// The numerator over `∏_{d ∈ degrees} (1 + d t)`, or `None` when the reduced
    /// denominator is not a sub-multiset of `degrees`.
    pub fn generator_numerator(&self, degrees: &LinearFactorProduct) -> Option<IntPoly> {
        let extra = degrees.difference(self.rat.denominator())?;
        Some(self.rat.numerator() * &extra.expand())
    }
}

/// Truncated pushforward `Σ a_i H^i` of the Segre class of `Z ⊂ ℙ^n`, as produced
/// by an external computer-algebra system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegreClassData {
    ambient_dim: usize,
    coeffs: Vec<BigInt>,
}

impl SegreClassData {
    pub fn new(ambient_dim: usize, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() > ambient_dim + 1 {
            return Err(ZetaError::InvalidSegreData(format!(
                "{} coefficients exceed the {} classes H^0..H^{ambient_dim} of ℙ^{ambient_dim}",
                coeffs.len(),
                ambient_dim + 1
            )));
        }
        if coeffs.first().is_some_and(|c| !c.is_zero()) {
            return Err(ZetaError::InvalidSegreData(
                "coefficient of H^0 must be 0 for a proper subscheme".into(),
            ));
        }
        Ok(Self {
            ambient_dim,
            coeffs,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }
}

fn degree_list(degrees: &[u64]) -> Result<LinearFactorProduct> {
    if degrees.is_empty() {
        return Err(ZetaError::EmptyGeneratingSet);
    }
    LinearFactorProduct::new(degrees.to_vec())
}

/// Zeta of a complete intersection: `(∏ d_i) t^r / ∏ (1 + d_i t)`.
pub fn ci_zeta(degrees: &[u64]) -> Result<SegreZeta> {
    let factors = degree_list(degrees)?;
    let numerator = IntPoly::monomial(factors.degree_product(), factors.len());
    SegreZeta::from_series(RationalSeries::new(numerator, factors))
}

/// Rebuilds the zeta of an ideal with generators of the given degrees from its
/// Segre class truncated to codimension `r`, where `r + 1 = degrees.len()`.
pub fn bootstrap_zeta(degrees: &[u64], segre: &SegreClassData) -> Result<SegreZeta> {
    let factors = degree_list(degrees)?;
    let r = factors.len() - 1;
    if segre.coeffs.len() < r + 1 {
        return Err(ZetaError::InsufficientSegreData {
            needed: r,
            got: segre.coeffs.len(),
        });
    }
    if segre.ambient_dim < r {
        return Err(ZetaError::InvalidSegreData(format!(
            "ambient dimension {} is below r = {r}; the Segre class in ℙ^{} does not determine the zeta",
            segre.ambient_dim, segre.ambient_dim
        )));
    }
    if segre.coeffs.len() > r + 1 {
        warn!(
            "ignoring Segre coefficients beyond H^{r} ({} supplied)",
            segre.coeffs.len()
        );
    }

    let s = IntPoly::new(segre.coeffs[..=r].to_vec());
    let n_poly = (&s * &factors.expand()).truncate(r);
    let numerator = &n_poly + &IntPoly::monomial(factors.degree_product(), r + 1);
    let zeta = SegreZeta::from_series(RationalSeries::new(numerator, factors.clone()))
        .map_err(|e| ZetaError::NotASegreClass(e.to_string()))?;

    let report = validate_zeta(&zeta, degrees);
    if let Some(failed) = report.first_failure() {
        return Err(ZetaError::NotASegreClass(format!(
            "{}: {}",
            failed.name, failed.detail
        )));
    }
    Ok(zeta)
}

/// Zeta of a scheme cut out by hypersurfaces of degree `d` from one linear
/// system in `ℙ^n`, given the counts `N_i` of intersection points of `i`
/// general members with `n - i` general hyperplanes.
pub fn linear_system_zeta(d: u64, n: usize, counts: &[u64]) -> Result<SegreZeta> {
    if d == 0 {
        return Err(ZetaError::InvalidDegree(0));
    }
    if n == 0 {
        return Err(ZetaError::ZeroAmbientDimension);
    }
    if counts.len() != n + 1 {
        return Err(ZetaError::CountLength {
            expected: n + 1,
            got: counts.len(),
        });
    }
    if counts[0] != 1 {
        return Err(ZetaError::BadHyperplaneCount);
    }
    let dd = BigInt::from(d);
    let linear = IntPoly::linear(dd.clone());
    let mut power = BigInt::one();
    let mut numerator = IntPoly::monomial(num_traits::pow(dd.clone(), n + 1), n + 1);
    for (i, &count) in counts.iter().enumerate() {
        let a = &power - BigInt::from(count);
        if a.is_negative() {
            return Err(ZetaError::CountsExceedBezout {
                index: i,
                count,
                bound: power.to_string(),
            });
        }
        let term = linear.pow((n - i) as u32).shift(i).scale(&a);
        numerator = &numerator + &term;
        power *= &dd;
    }
    let factors = LinearFactorProduct::new(vec![d; n + 1])?;
    SegreZeta::from_series(RationalSeries::new(numerator, factors))
}

/// Zeta of `I' + I''` for ideals in disjoint sets of variables.
pub fn splayed_product(z1: &SegreZeta, z2: &SegreZeta) -> SegreZeta {
    let zeta = SegreZeta::from_series(z1.rat.mul(&z2.rat))
        .expect("product of zetas has a positive trailing term");
    debug_assert_eq!(zeta.codim, z1.codim + z2.codim);
    debug_assert_eq!(zeta.degree, &z1.degree * &z2.degree);
    zeta
}

/// Trailing exponent and coefficient of the numerator.
pub fn codim_and_degree(f: &RationalSeries) -> Result<(usize, BigInt)> {
    f.numerator()
        .trailing_term()
        .map(|(k, c)| (k, c.clone()))
        .ok_or(ZetaError::ZeroSeries)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of [`validate_zeta`], one entry per structural condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub const CHECK_POLES: &str = "poles";
pub const CHECK_NONNEGATIVE: &str = "nonnegative";
pub const CHECK_LEADING: &str = "leading";
pub const CHECK_TRAILING: &str = "trailing";

/// Checks the rationality structure of `z` against generators of the given degrees:
///
/// - `poles`: the reduced denominator divides `∏ (1 + d_i t)`;
/// - `nonnegative`: the numerator over `∏ (1 + d_i t)` has nonnegative coefficients;
/// - `leading`: that numerator has degree `r + 1` with top coefficient `∏ d_i`,
///   `r + 1` being the number of generators;
/// - `trailing`: the trailing term sits at `t^codim` with positive coefficient.
pub fn validate_zeta(z: &SegreZeta, degrees: &[u64]) -> ValidationReport {
    let mut checks = Vec::with_capacity(4);
    let gens = LinearFactorProduct::new(degrees.iter().copied().filter(|&d| d > 0).collect())
        .expect("zero degrees filtered");
    let degrees_ok = !degrees.is_empty() && !degrees.contains(&0);

    let gen_num = degrees_ok.then(|| z.generator_numerator(&gens)).flatten();
    checks.push(Check {
        name: CHECK_POLES,
        passed: gen_num.is_some(),
        detail: if !degrees_ok {
            "degrees must be a nonempty list of positive integers".into()
        } else if gen_num.is_some() {
            format!("{} divides {}", z.denominator(), gens)
        } else {
            format!("{} does not divide {}", z.denominator(), gens)
        },
    });

    match &gen_num {
        Some(p) => {
            let negative: Vec<usize> = p
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| c.is_negative())
                .map(|(k, _)| k)
                .collect();
            checks.push(Check {
                name: CHECK_NONNEGATIVE,
                passed: negative.is_empty(),
                detail: if negative.is_empty() {
                    "all numerator coefficients are nonnegative".into()
                } else {
                    format!("negative coefficient(s) at t^{negative:?}")
                },
            });

            let top = gens.len();
            let want = gens.degree_product();
            let deg = p.degree().unwrap_or(0);
            let got = p.coeff(top);
            checks.push(Check {
                name: CHECK_LEADING,
                passed: deg <= top && got == want,
                detail: format!(
                    "numerator degree {deg} (bound {top}), coefficient of t^{top} is {got}, expected {want}"
                ),
            });
        }
        None => {
            for name in [CHECK_NONNEGATIVE, CHECK_LEADING] {
                checks.push(Check {
                    name,
                    passed: false,
                    detail: "no generator form: denominator is not covered by the degrees".into(),
                });
            }
        }
    }

    let trailing = z.numerator().trailing_term();
    let trailing_ok = matches!(trailing, Some((k, c)) if k == z.codim && c.is_positive() && *c == z.degree);
    checks.push(Check {
        name: CHECK_TRAILING,
        passed: trailing_ok,
        detail: match trailing {
            Some((k, c)) => format!("trailing term {c}·t^{k}, codim {}", z.codim),
            None => "zero numerator".into(),
        },
    });

    ValidationReport { checks }
}

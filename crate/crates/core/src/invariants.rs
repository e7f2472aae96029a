//! Projective invariants read off a zeta function: polar degrees, the degree and
//! dimension of the dual variety, and recognition of complete-intersection shape.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Result, ZetaError};
use crate::exact_poly::{IntPoly, LinearFactorProduct};
use crate::zeta::SegreZeta;

/// Polar degrees of `Z ⊂ ℙ^n`, read from `(-1)^codim ζ(-t/(1+t))`.
///
/// The values are the ranks of `Z` only when `Z` is nonsingular and the zeta
/// comes from an ideal defining it; the transform is computed regardless and
/// `assumes_nonsingular` is always set to record that caveat.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarDegrees {
    pub n: usize,
    pub m: usize,
    /// `[δ_m, δ_{m-1}, …, δ_0]`.
    pub deltas: Vec<BigInt>,
    /// Coefficients of `t^{n+1}`, `t^{n+2}`, … of the same series.
    pub tail: Vec<BigInt>,
    pub assumes_nonsingular: bool,
}

impl PolarDegrees {
    /// `δ_i`, for `0 ≤ i ≤ m`.
    pub fn delta(&self, i: usize) -> Option<&BigInt> {
        (i <= self.m).then(|| &self.deltas[self.m - i])
    }
}

/// Polar degrees with the default tail of `n` further coefficients.
pub fn polar_degrees(z: &SegreZeta, n: usize) -> Result<PolarDegrees> {
    polar_degrees_with_tail(z, n, n)
}

pub fn polar_degrees_with_tail(z: &SegreZeta, n: usize, tail_len: usize) -> Result<PolarDegrees> {
    let codim = z.codim();
    if codim > n {
        return Err(ZetaError::CodimExceedsAmbient { codim, n });
    }
    let dual = z.series().subst_dual();
    let dual = if codim % 2 == 1 { dual.negated() } else { dual };
    let series = dual
        .expand(n + tail_len)
        .expect("dual denominator has constant term 1");
    let coeffs = |range: std::ops::RangeInclusive<usize>| range.map(|k| series.coeff(k)).collect();
    Ok(PolarDegrees {
        n,
        m: n - codim,
        deltas: coeffs(codim..=n),
        tail: if tail_len == 0 {
            Vec::new()
        } else {
            coeffs(n + 1..=n + tail_len)
        },
        assumes_nonsingular: true,
    })
}

/// Dimension and degree of the dual variety: the first nonzero `δ_i` (in
/// increasing `i`) is the degree, and the dimension is `n - 1 - i`.
pub fn dual_info(pd: &PolarDegrees) -> (isize, BigInt) {
    (0..=pd.m)
        .find_map(|i| {
            let d = pd.delta(i).expect("i ≤ m");
            (!d.is_zero()).then(|| (pd.n as isize - 1 - i as isize, d.clone()))
        })
        .unwrap_or((-1, BigInt::zero()))
}

/// The degrees `[e_1, …, e_r]` when `z` is exactly `(∏ e_j) t^r / ∏ (1 + e_j t)`
/// with `r = codim`.
pub fn as_complete_intersection(z: &SegreZeta) -> Option<Vec<u64>> {
    let den = z.denominator();
    let num = z.numerator();
    let shape = num.is_monomial()
        && den.len() == z.codim()
        && num.trailing_term().is_some_and(|(_, c)| *c == den.degree_product());
    shape.then(|| den.factors().to_vec())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LciReport {
    pub is_ci_type: bool,
    /// Degrees whose product is `deg Z` and whose factors account for the normal bundle.
    pub normal_degrees: Option<Vec<u64>>,
    pub residual_degrees: Option<Vec<u64>>,
}

impl LciReport {
    fn failed() -> Self {
        Self {
            is_ci_type: false,
            normal_degrees: None,
            residual_degrees: None,
        }
    }
}

/// For `Z` of codimension `r` cut out by `m ≤ n - r` forms of the given degrees,
/// looks for an `r`-subset `S` of the degrees with `∏_S d = deg Z` and generator
/// numerator `deg Z · t^r · ∏_{i∉S} (1 + d_i t)`.
pub fn lci_consistency_check(z: &SegreZeta, n: usize, degrees: &[u64]) -> Result<LciReport> {
    let r = z.codim();
    if r > n {
        return Err(ZetaError::CodimExceedsAmbient { codim: r, n });
    }
    let m = degrees.len();
    if m > n - r {
        return Err(ZetaError::TooManyGenerators { m, bound: n - r });
    }
    let gens = LinearFactorProduct::new(degrees.to_vec())?;
    let Some(numerator) = z.generator_numerator(&gens) else {
        return Ok(LciReport::failed());
    };
    let deg_z = z.degree();

    let found = gens
        .factors()
        .iter()
        .copied()
        .combinations(r)
        .dedup()
        .find(|subset| {
            let normal = LinearFactorProduct::new(subset.clone()).expect("positive degrees");
            if normal.degree_product() != *deg_z {
                return false;
            }
            let residual = gens.difference(&normal).expect("subset of gens");
            numerator == IntPoly::monomial(deg_z.clone(), r) * residual.expand()
        });

    Ok(match found {
        Some(subset) => {
            let normal = LinearFactorProduct::new(subset.clone()).expect("positive degrees");
            let residual = gens.difference(&normal).expect("subset of gens");
            LciReport {
                is_ci_type: true,
                normal_degrees: Some(subset),
                residual_degrees: Some(residual.factors().to_vec()),
            }
        }
        None => LciReport::failed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_poly::RationalSeries;
    use crate::staircase::{monomial2d_zeta, MonomialIdeal2D};
    use crate::zeta::ci_zeta;

    fn zeta(num: &[i64], den: &[u64]) -> SegreZeta {
        SegreZeta::from_series(RationalSeries::new(
            IntPoly::from_i64s(num),
            LinearFactorProduct::new(den.to_vec()).unwrap(),
        ))
        .unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn twisted_cubic() -> SegreZeta {
        zeta(&[0, 0, 3, 8], &[2, 2, 2])
    }

    #[test]
    fn twisted_cubic_ranks() {
        let pd = polar_degrees(&twisted_cubic(), 3).unwrap();
        assert_eq!(pd.m, 1);
        assert_eq!(pd.deltas, big(&[3, 4]));
        assert_eq!(pd.tail, big(&[3, 0, -5]));
        assert_eq!(dual_info(&pd), (2, BigInt::from(4)));
    }

    #[test]
    fn linear_subspace_ranks() {
        for n in 1..7 {
            for c in 1..=n {
                let pd = polar_degrees(&ci_zeta(&vec![1; c]).unwrap(), n).unwrap();
                let mut want = vec![0; n - c + 1];
                want[0] = 1;
                assert_eq!(pd.deltas, big(&want));
                assert_eq!(dual_info(&pd), ((n - 1 - pd.m) as isize, BigInt::from(1)));
            }
        }
    }

    #[test]
    fn quadric_surface_ranks() {
        let pd = polar_degrees(&ci_zeta(&[2]).unwrap(), 3).unwrap();
        assert_eq!(pd.deltas, big(&[2, 2, 2]));
        assert_eq!(dual_info(&pd), (2, BigInt::from(2)));
    }

    #[test]
    fn codim_exceeds_ambient() {
        assert_eq!(
            polar_degrees(&ci_zeta(&[2, 2, 2]).unwrap(), 2),
            Err(ZetaError::CodimExceedsAmbient { codim: 3, n: 2 })
        );
    }

    #[test]
    fn recognizes_complete_intersections() {
        assert_eq!(as_complete_intersection(&ci_zeta(&[4, 2, 3]).unwrap()), Some(vec![2, 3, 4]));
        assert_eq!(as_complete_intersection(&twisted_cubic()), None);
        let paper = MonomialIdeal2D::new([(7, 0), (5, 1), (4, 2), (3, 4), (2, 5), (1, 7)]).unwrap();
        assert_eq!(as_complete_intersection(&monomial2d_zeta(&paper)), None);
        // Right shape, wrong constant.
        assert_eq!(as_complete_intersection(&zeta(&[0, 0, 5], &[2, 3])), None);
    }

    #[test]
    fn lci_splits() {
        let z = ci_zeta(&[2, 3]).unwrap();
        let report = lci_consistency_check(&z, 5, &[2, 3]).unwrap();
        assert!(report.is_ci_type);
        assert_eq!(report.normal_degrees, Some(vec![2, 3]));
        assert_eq!(report.residual_degrees, Some(vec![]));

        let report = lci_consistency_check(&z, 5, &[2, 3, 6]).unwrap();
        assert_eq!(report.normal_degrees, Some(vec![2, 3]));
        assert_eq!(report.residual_degrees, Some(vec![6]));
    }

    #[test]
    fn lci_hypothesis_gate() {
        assert_eq!(
            lci_consistency_check(&twisted_cubic(), 3, &[2, 2, 2]),
            Err(ZetaError::TooManyGenerators { m: 3, bound: 1 })
        );
    }

    #[test]
    fn lci_rejects_non_ci_numerator() {
        // (3t^2 + 8t^3)/(1+2t)^3 over degrees [2,2,2] in P^8: no split exists.
        let report = lci_consistency_check(&twisted_cubic(), 8, &[2, 2, 2]).unwrap();
        assert!(!report.is_ci_type);
        // Uncovered pole.
        let report = lci_consistency_check(&ci_zeta(&[2, 3]).unwrap(), 6, &[2, 5]).unwrap();
        assert!(!report.is_ci_type);
    }
}

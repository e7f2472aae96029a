use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exact_poly::{IntPoly, LinearFactorProduct, PolyFraction, RationalSeries};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Style {
    Plain,
    Latex,
}

fn power(k: usize, style: Style) -> String {
    match (k, style) {
        (0, _) => String::new(),
        (1, _) => "t".into(),
        (k, Style::Plain) => format!("t^{k}"),
        (k, Style::Latex) => format!("t^{{{k}}}"),
    }
}

/// Terms in increasing degree: `2t^2 + 24t^3`, `t - t^2`, `0`.
pub fn poly(p: &IntPoly, style: Style) -> String {
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let magnitude = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if k == 0 || !magnitude.is_one() {
            out.push_str(&magnitude.to_string());
        }
        out.push_str(&power(k, style));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn term_count(p: &IntPoly) -> usize {
    p.coeffs().iter().filter(|c| !c.is_zero()).count()
}

/// `(1+2t)^3(1+5t)`.
pub fn factors(f: &LinearFactorProduct, style: Style) -> String {
    match style {
        Style::Plain => f.to_string(),
        Style::Latex => f
            .multiplicities()
            .into_iter()
            .map(|(d, m)| {
                let base = if d == 1 { "(1+t)".to_string() } else { format!("(1+{d}t)") };
                if m == 1 {
                    base
                } else {
                    format!("{base}^{{{m}}}")
                }
            })
            .collect(),
    }
}

/// `(2t^2 + 24t^3)/((1+2t)(1+3t)(1+4t))`, `2t/(1+2t)`; a bare numerator when
/// the denominator is empty. Plain output parses back with the inline grammar.
pub fn series(f: &RationalSeries, style: Style) -> String {
    let num = poly(f.numerator(), style);
    let den = f.denominator();
    if den.is_empty() {
        return num;
    }
    let den_str = factors(den, style);
    match style {
        Style::Latex => format!("\\frac{{{num}}}{{{den_str}}}"),
        Style::Plain => {
            let num = if term_count(f.numerator()) > 1 {
                format!("({num})")
            } else {
                num
            };
            if den.len() == 1 {
                format!("{num}/{den_str}")
            } else {
                format!("{num}/({den_str})")
            }
        }
    }
}

pub fn fraction(f: &PolyFraction, style: Style) -> String {
    let num = poly(&f.numerator, style);
    if f.denominator == IntPoly::one() {
        return num;
    }
    let den = poly(&f.denominator, style);
    match style {
        Style::Latex => format!("\\frac{{{num}}}{{{den}}}"),
        Style::Plain => {
            let wrap = |p: &IntPoly, s: String| if term_count(p) > 1 { format!("({s})") } else { s };
            format!("{}/{}", wrap(&f.numerator, num), wrap(&f.denominator, den))
        }
    }
}

pub fn int_list<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn delta_name(i: usize, style: Style) -> String {
    match style {
        Style::Plain => format!("delta_{i}"),
        Style::Latex => format!("\\delta_{{{i}}}"),
    }
}

pub fn bigints(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(num: &[i64], den: &[u64]) -> RationalSeries {
        RationalSeries::new(
            IntPoly::from_i64s(num),
            LinearFactorProduct::new(den.to_vec()).unwrap(),
        )
    }

    #[test]
    fn plain_series() {
        assert_eq!(
            series(&rs(&[0, 0, 2, 24], &[2, 3, 4]), Style::Plain),
            "(2t^2 + 24t^3)/((1+2t)(1+3t)(1+4t))"
        );
        assert_eq!(series(&rs(&[0, 0, 0, 6], &[2, 3, 4]), Style::Plain), "6t^3/((1+2t)(1+3t)(1+4t))");
        assert_eq!(series(&rs(&[0, 0, 3, 8], &[2, 2, 2]), Style::Plain), "(3t^2 + 8t^3)/((1+2t)^3)");
        assert_eq!(series(&rs(&[0, 2], &[2]), Style::Plain), "2t/(1+2t)");
        assert_eq!(series(&rs(&[0, 1], &[1]), Style::Plain), "t/(1+t)");
        assert_eq!(series(&rs(&[1, -1], &[]), Style::Plain), "1 - t");
    }

    #[test]
    fn plain_poly() {
        assert_eq!(poly(&IntPoly::from_i64s(&[0, 0, 0, 6, -54, 330]), Style::Plain), "6t^3 - 54t^4 + 330t^5");
        assert_eq!(poly(&IntPoly::from_i64s(&[-1, -1]), Style::Plain), "-1 - t");
        assert_eq!(poly(&IntPoly::zero(), Style::Plain), "0");
    }

    #[test]
    fn latex_series() {
        assert_eq!(
            series(&rs(&[0, 1, 57, 640, 2016], &[6, 6, 7, 8]), Style::Latex),
            "\\frac{t + 57t^{2} + 640t^{3} + 2016t^{4}}{(1+6t)^{2}(1+7t)(1+8t)}"
        );
    }

    #[test]
    fn dual_fraction() {
        let f = PolyFraction::new(IntPoly::from_i64s(&[0, 0, 3, -5]), IntPoly::from_i64s(&[1, -3, 3, -1]));
        assert_eq!(fraction(&f, Style::Plain), "(3t^2 - 5t^3)/(1 - 3t + 3t^2 - t^3)");
    }

    #[test]
    fn plain_output_reparses() {
        for f in [rs(&[0, 0, 2, 24], &[2, 3, 4]), rs(&[0, 1], &[1]), rs(&[0, 0, 3, 8], &[2, 2, 2])] {
            assert_eq!(super::super::parse::parse_zeta(&series(&f, Style::Plain)).unwrap(), f);
        }
    }
}

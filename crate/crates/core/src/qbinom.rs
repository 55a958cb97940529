//! Gaussian (q-)binomial and pq-binomial coefficients.
//!
//! Both are built by dividing as we multiply: after step `i` the running
//! value is the coefficient with lower index `i`, which is already a
//! polynomial, so every division is exact and intermediate sizes stay small.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::exact_poly::{ExponentBox, LaurentPoly, TruncatedSeries};

fn binomial_poly(plus: (i64, i64), minus: (i64, i64)) -> LaurentPoly {
    LaurentPoly::from_terms([(plus, BigInt::one()), (minus, -BigInt::one())])
}

/// `(1−q^{d+1})⋯(1−q^{d+n}) / ((1−q)⋯(1−qⁿ))`, a polynomial in `q` of degree `d·n`.
pub fn gaussian_binomial(d: u32, n: u32) -> LaurentPoly {
    let d = i64::from(d);
    let mut acc = LaurentPoly::one();
    for i in 1..=i64::from(n) {
        acc = &acc * &binomial_poly((0, 0), (0, d + i));
        acc = acc
            .div_exact_binomial((0, 0), (0, i))
            .expect("gaussian binomial partial product is a polynomial");
    }
    acc
}

/// `∏_{i=1..k} (p^{d+i} − q^{d+i}) / (pⁱ − qⁱ)`, homogeneous of degree `d·k`.
pub fn pq_binomial(d: u32, k: u32) -> LaurentPoly {
    let d = i64::from(d);
    let mut acc = LaurentPoly::one();
    for i in 1..=i64::from(k) {
        acc = &acc * &binomial_poly((d + i, 0), (0, d + i));
        acc = acc
            .div_exact_binomial((i, 0), (0, i))
            .expect("pq-binomial partial product is a polynomial");
    }
    acc
}

/// `G_m = ∏_{k+l=m} (1 − t pᵏ qˡ)⁻¹` up to `tᴺ`, assembled from the
/// pq-binomial coefficients `[m, j]_{pq}`.
pub fn pq_binomial_series(m: u32, order: usize) -> TruncatedSeries {
    TruncatedSeries::from_coeffs(pq_binomial_row(m, order, None))
}

/// [`pq_binomial_series`] with every coefficient clipped to `bounds`.
pub fn pq_binomial_series_within(m: u32, order: usize, bounds: ExponentBox) -> TruncatedSeries {
    TruncatedSeries::from_coeffs(pq_binomial_row(m, order, Some(bounds)))
}

fn pq_binomial_row(m: u32, order: usize, bounds: Option<ExponentBox>) -> Vec<LaurentPoly> {
    // Reuse the running product: [m, j] = [m, j−1]·(p^{m+j} − q^{m+j})/(pʲ − qʲ).
    let m = i64::from(m);
    let mut row = Vec::with_capacity(order + 1);
    let mut acc = LaurentPoly::one();
    row.push(acc.clone());
    for j in 1..=order as i64 {
        acc = &acc * &binomial_poly((m + j, 0), (0, m + j));
        acc = acc
            .div_exact_binomial((j, 0), (0, j))
            .expect("pq-binomial partial product is a polynomial");
        let mut c = acc.clone();
        if let Some(bx) = bounds {
            c.retain_within(bx);
        }
        row.push(c);
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_poly(cs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_terms(cs.iter().enumerate().map(|(b, &c)| ((0, b as i64), c)))
    }

    fn pq(terms: &[((i64, i64), i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn gaussian_small_values() {
        assert_eq!(gaussian_binomial(5, 0), LaurentPoly::one());
        assert_eq!(gaussian_binomial(1, 2), q_poly(&[1, 1, 1]));
        assert_eq!(gaussian_binomial(2, 2), q_poly(&[1, 1, 2, 1, 1]));
    }

    #[test]
    fn pq_small_values() {
        assert_eq!(pq_binomial(4, 0), LaurentPoly::one());
        let sq = pq(&[((2, 0), 1), ((1, 1), 1), ((0, 2), 1)]);
        assert_eq!(pq_binomial(1, 2), sq);
        assert_eq!(pq_binomial(2, 1), sq);
    }

    #[test]
    fn series_coefficients() {
        let g0 = pq_binomial_series(0, 3);
        for j in 0..=3 {
            assert_eq!(*g0.coeff(j), LaurentPoly::one());
        }
        let sq = pq(&[((2, 0), 1), ((1, 1), 1), ((0, 2), 1)]);
        assert_eq!(*pq_binomial_series(1, 2).coeff(2), sq);
        assert_eq!(*pq_binomial_series(2, 1).coeff(1), sq);
    }

    #[test]
    fn windowed_row_is_clipped() {
        let bx = ExponentBox::new(1, 1);
        let g = pq_binomial_series_within(1, 2, bx);
        assert_eq!(*g.coeff(2), pq(&[((1, 1), 1)]));
    }
}

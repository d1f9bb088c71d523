//! q-shifted factorials.

use super::int::Int;
use super::mono::Mono;
use super::ratfunc::RatFunc;
use super::series::TruncSeries;
use super::symbols::Symbol;
use crate::error::{Error, Result};

/// `(b; q)_k = prod_{i<k} (1 - b q^i)`; negative `k` uses
/// `(b)_{-m} = 1/(b q^{-m})_m`.
pub fn qpoch(base: &RatFunc, k: i64) -> Result<RatFunc> {
    if k < 0 {
        let shifted = base.mul(&RatFunc::qt(k as i32, 0));
        return qpoch(&shifted, -k)?.inv();
    }
    let mut acc = RatFunc::one();
    for i in 0..k {
        let f = RatFunc::one_minus(&base.mul(&RatFunc::qt(i as i32, 0)));
        acc = acc.mul(&f);
    }
    Ok(acc)
}

/// `(b; q)_infinity` expanded to total degree `cutoff` in `letters`.
///
/// The base must be a letter-free coefficient times a letter monomial of
/// positive degree; Euler's expansion
/// `(u)_infinity = sum_k (-1)^k q^{k(k-1)/2} u^k / (q)_k` is then finite.
pub fn qpoch_inf_series(base: &RatFunc, letters: &[Symbol], cutoff: u32) -> Result<TruncSeries> {
    let (coeff, key) = split_base(base, letters)?;
    let deg = key.degree() as u32;
    let mut out = TruncSeries::zero(letters, cutoff);
    let mut qk = RatFunc::one();
    let mut k = 0u32;
    while k * deg <= cutoff {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let c = coeff
            .pow(k as i32)?
            .mul(&RatFunc::qt((k * k.saturating_sub(1) / 2) as i32, 0))
            .mul(&RatFunc::int(sign))
            .div(&qk)?;
        out.add_term(key.pow(k as i32), &c);
        k += 1;
        qk = qk.mul(&RatFunc::one_minus(&RatFunc::qt(k as i32, 0)));
    }
    Ok(out)
}

/// `1/(b; q)_infinity` expanded to total degree `cutoff`:
/// `sum_k u^k/(q)_k`.
pub fn qpoch_inf_inv_series(base: &RatFunc, letters: &[Symbol], cutoff: u32) -> Result<TruncSeries> {
    let (coeff, key) = split_base(base, letters)?;
    let deg = key.degree() as u32;
    let mut out = TruncSeries::zero(letters, cutoff);
    let mut qk = RatFunc::one();
    let mut k = 0u32;
    while k * deg <= cutoff {
        out.add_term(key.pow(k as i32), &coeff.pow(k as i32)?.div(&qk)?);
        k += 1;
        qk = qk.mul(&RatFunc::one_minus(&RatFunc::qt(k as i32, 0)));
    }
    Ok(out)
}

fn split_base(base: &RatFunc, letters: &[Symbol]) -> Result<(RatFunc, Mono)> {
    let idx: Vec<usize> = letters.iter().map(|s| s.index()).collect();
    let coeffs = base
        .coefficients_in(&idx)
        .ok_or_else(|| Error::Precondition("base has letters in a denominator".into()))?;
    if coeffs.len() != 1 {
        return Err(Error::Precondition("base must be a single letter monomial times a scalar".into()));
    }
    let (key, c) = coeffs.into_iter().next().expect("one entry");
    if key.0.degree() <= 0 || !key.0.is_nonneg() {
        return Err(Error::Precondition(
            "base free of alphabet letters: infinite product does not truncate".into(),
        ));
    }
    Ok((c, key.0))
}

/// Helper used throughout: `(x; q)_k` for a monomial `c * m`.
pub fn qpoch_term(c: i64, m: &Mono, k: i64) -> Result<RatFunc> {
    qpoch(&RatFunc::term(Int::from(c), m.clone()), k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finite_products() {
        let b = RatFunc::sym("b");
        assert!(qpoch(&b, 0).unwrap().is_one());
        let two = RatFunc::one_minus(&b).mul(&RatFunc::one_minus(&b.mul(&RatFunc::q())));
        assert_eq!(qpoch(&b, 2).unwrap(), two);
        // (b)_{-1} (b q^{-1})_1 = 1
        let m1 = qpoch(&b, -1).unwrap();
        assert!(m1.mul(&RatFunc::one_minus(&b.mul(&RatFunc::qt(-1, 0)))).is_one());
    }

    #[test]
    fn infinite_product_first_order() {
        let x = Symbol::letter(1);
        let c = RatFunc::sym("c");
        let s = qpoch_inf_series(&c.mul(&RatFunc::var(x)), &[x], 1).unwrap();
        let expect = c.neg().div(&RatFunc::one_minus(&RatFunc::q())).unwrap();
        assert_eq!(s.coefficient(&Mono::var(x, 1)), expect);
        let inv = qpoch_inf_inv_series(&c.mul(&RatFunc::var(x)), &[x], 4).unwrap();
        let s4 = qpoch_inf_series(&c.mul(&RatFunc::var(x)), &[x], 4).unwrap();
        assert!(s4.mul(&inv).equals(&TruncSeries::one(&[x], 4)));
        assert!(qpoch_inf_series(&c, &[x], 3).is_err());
    }
}

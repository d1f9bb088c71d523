//! Series-side building blocks shared by the catalog entries.

use crate::error::{Error, Result};
use crate::families::RRule;
use crate::macdonald::branch::{MacdonaldRule, SeriesBrancher};
use crate::partitions::{gen_poch_many, partitions_up_to, Partition};
use crate::ring::{qpoch_inf_inv_series, qpoch_inf_series, RatFunc, Symbol, TruncSeries};

pub(crate) static R_HAT: RRule = RRule { normalized: true };
pub(crate) static P_HAT: MacdonaldRule = MacdonaldRule { normalized: true };

/// `x1..xn` as series letters.
pub fn alphabet(n: usize) -> Vec<Symbol> {
    (1..=n).map(Symbol::letter).collect()
}

/// `prod (u)_inf / prod (v)_inf` over the given bases, each base a scalar
/// times a positive-degree monomial in `letters`. Zero bases contribute 1.
pub fn inf_product(num: &[RatFunc], den: &[RatFunc], letters: &[Symbol], cutoff: u32) -> Result<TruncSeries> {
    let mut acc = TruncSeries::one(letters, cutoff);
    for u in num.iter().filter(|u| !u.is_zero()) {
        acc = acc.mul(&qpoch_inf_series(u, letters, cutoff)?);
    }
    for v in den.iter().filter(|v| !v.is_zero()) {
        acc = acc.mul(&qpoch_inf_inv_series(v, letters, cutoff)?);
    }
    Ok(acc)
}

/// `prod_{x in X} prod_u (u x)_inf / prod_v (v x)_inf` for letter-free `u`, `v`.
pub fn alphabet_product(num: &[RatFunc], den: &[RatFunc], letters: &[Symbol], cutoff: u32) -> Result<TruncSeries> {
    let spread = |bases: &[RatFunc]| -> Vec<RatFunc> {
        letters
            .iter()
            .flat_map(|&x| bases.iter().map(move |u| u.mul(&RatFunc::var(x))))
            .collect()
    };
    inf_product(&spread(num), &spread(den), letters, cutoff)
}

/// Skew `R-hat_{lambda/base}(X; b)` for many `lambda`, sharing one memo.
pub(crate) fn r_hat<'r>(base: &Partition, letters: &[Symbol], b: &RatFunc, cutoff: u32) -> SeriesBrancher<'r> {
    SeriesBrancher::new(&R_HAT, base.clone(), letters.to_vec(), &[b.clone()], cutoff)
}

/// Skew `P-hat_{lambda/base}(X)` for many `lambda`.
pub(crate) fn p_hat<'r>(base: &Partition, letters: &[Symbol], cutoff: u32) -> SeriesBrancher<'r> {
    SeriesBrancher::new(&P_HAT, base.clone(), letters.to_vec(), &[], cutoff)
}

/// Partitions `lambda ⊇ mu` with `|lambda - mu| <= extra` and at most `max_len` parts.
pub(crate) fn supersets(mu: &Partition, extra: u32, max_len: usize) -> Vec<Partition> {
    partitions_up_to(mu.weight() + extra, max_len)
        .into_iter()
        .filter(|l| l.contains(mu))
        .collect()
}

/// Partitions contained in `mu`.
pub(crate) fn subsets(mu: &Partition) -> Vec<Partition> {
    partitions_up_to(mu.weight(), mu.len())
        .into_iter()
        .filter(|l| mu.contains(l))
        .collect()
}

/// `(-1)^{|lambda|} q^{n(lambda')} t^{-n(lambda)}`.
fn quasi_sign(lam: &Partition) -> RatFunc {
    let s = RatFunc::qt(lam.conjugate().n() as i32, -(lam.n() as i32));
    if lam.weight() % 2 == 0 {
        s
    } else {
        s.neg()
    }
}

/// The basic hypergeometric series
/// `sum (uppers)_lambda / (lowers without last)_lambda (quasi-sign)^{s-r+1} z^{|lambda|} R-hat_lambda(X; last lower)`,
/// truncated at `|lambda| <= cutoff`.
pub fn hyperseries(
    uppers: &[RatFunc],
    lowers: &[RatFunc],
    z: &RatFunc,
    letters: &[Symbol],
    cutoff: u32,
) -> Result<TruncSeries> {
    let Some((last, rest)) = lowers.split_last() else {
        return Err(Error::Precondition("hyperseries needs at least one lower parameter".into()));
    };
    let exponent = lowers.len() as i32 - uppers.len() as i32 + 1;
    let mut rb = r_hat(&Partition::empty(), letters, last, cutoff);
    let mut acc = TruncSeries::zero(letters, cutoff);
    for lam in partitions_up_to(cutoff, letters.len()) {
        let up = gen_poch_many(uppers, &lam);
        if up.is_zero() {
            continue;
        }
        let w = lam.weight() as i32;
        let coef = up
            .div(&gen_poch_many(rest, &lam))?
            .mul(&quasi_sign(&lam).pow(exponent)?)
            .mul(&z.pow(w)?);
        if coef.is_zero() {
            continue;
        }
        acc = acc.add(&rb.value(&lam)?.scale(&coef));
    }
    Ok(acc)
}

//! The one-letter branching coefficients `psi`, `phi` and `psi'`.

use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::partitions::{b_lambda, Partition};
use crate::ring::RatFunc;

/// `prod_{i<k} (1 - q^{a+i} t^b)`, or with `q` and `t` exchanged.
fn poch_qt(a: i32, b: i32, k: u32, swap: bool) -> RatFunc {
    let mut acc = RatFunc::one();
    for i in 0..k as i32 {
        let m = if swap { RatFunc::qt(b, a + i) } else { RatFunc::qt(a + i, b) };
        acc = acc.mul(&RatFunc::one_minus(&m));
    }
    acc
}

/// Telescoped form of the infinite-product expression for `psi`.
///
/// With `f(u) = (ut)_inf/(uq)_inf` one has `f(u)/f(uq^k) = (ut)_k/(uq)_k`, so
/// for each `i <= j` the four `f` factors, which share the power `t^{j-i}`,
/// collapse to two finite ratios.
fn psi_raw(lam: &Partition, mu: &Partition, swap: bool) -> RatFunc {
    let l = mu.len();
    let mut num = RatFunc::one();
    let mut den = RatFunc::one();
    for i in 1..=l {
        for j in i..=l {
            let tt = (j - i) as i32;
            let a = (mu.part(i) - mu.part(j)) as i32;
            let c = (lam.part(i) - mu.part(j)) as i32;
            let d = (mu.part(i) - lam.part(j + 1)) as i32;
            let b = (lam.part(i) - lam.part(j + 1)) as i32;
            num = num.mul(&poch_qt(a, tt + 1, (c - a) as u32, swap));
            den = den.mul(&poch_qt(a + 1, tt, (c - a) as u32, swap));
            num = num.mul(&poch_qt(d + 1, tt, (b - d) as u32, swap));
            den = den.mul(&poch_qt(d, tt + 1, (b - d) as u32, swap));
        }
    }
    num.div(&den).expect("q-Pochhammer factors are nonzero")
}

static PSI: Memo<(Partition, Partition, bool), RatFunc> = Memo::new();

fn psi_cached(lam: &Partition, mu: &Partition, swap: bool) -> RatFunc {
    PSI.get_or((lam.clone(), mu.clone(), swap), || psi_raw(lam, mu, swap))
}

/// `psi_{lambda/mu}` for a horizontal strip `lambda/mu`.
pub fn psi(lam: &Partition, mu: &Partition) -> Result<RatFunc> {
    if !lam.is_horizontal_strip_over(mu) {
        return Err(Error::Precondition(format!("{lam}/{mu} is not a horizontal strip")));
    }
    Ok(psi_cached(lam, mu, false))
}

/// `psi` with the roles of `q` and `t` exchanged.
pub fn psi_swapped(lam: &Partition, mu: &Partition) -> Result<RatFunc> {
    if !lam.is_horizontal_strip_over(mu) {
        return Err(Error::Precondition(format!("{lam}/{mu} is not a horizontal strip")));
    }
    Ok(psi_cached(lam, mu, true))
}

/// `phi_{lambda/mu} = (b_lambda / b_mu) psi_{lambda/mu}`.
pub fn phi(lam: &Partition, mu: &Partition) -> Result<RatFunc> {
    let p = psi(lam, mu)?;
    Ok(p.mul(&b_lambda(lam)).div(&b_lambda(mu))?)
}

/// `psi'_{lambda/mu}(q,t) = psi_{lambda'/mu'}(t,q)`, for vertical strips.
pub fn psi_prime(lam: &Partition, mu: &Partition) -> Result<RatFunc> {
    if !lam.is_vertical_strip_over(mu) {
        return Err(Error::Precondition(format!("{lam}/{mu} is not a vertical strip")));
    }
    psi_swapped(&lam.conjugate(), &mu.conjugate())
}

/// Both components at once; each is `None` when its strip condition fails.
pub fn phi_psi_prime(lam: &Partition, mu: &Partition) -> (Option<RatFunc>, Option<RatFunc>) {
    (phi(lam, mu).ok(), psi_prime(lam, mu).ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_ratfunc;

    fn p(parts: &[u32]) -> Partition {
        Partition::from(parts)
    }

    fn r(s: &str) -> RatFunc {
        parse_ratfunc(s).unwrap()
    }

    #[test]
    fn small_values() {
        assert!(psi(&p(&[2, 1]), &p(&[2, 1])).unwrap().is_one());
        assert!(psi(&p(&[1]), &p(&[])).unwrap().is_one());
        assert_eq!(
            psi(&p(&[2]), &p(&[1])).unwrap(),
            r("(1-t)*(1-q^2)/((1-q)*(1-q*t))")
        );
        assert!(psi(&p(&[1, 1]), &p(&[1])).unwrap().is_one());
        assert!(psi(&p(&[2, 2]), &p(&[1])).is_err());
    }

    #[test]
    fn primes_and_phi() {
        assert_eq!(
            psi_prime(&p(&[1, 1]), &p(&[1])).unwrap(),
            r("(1-q)*(1-t^2)/((1-t)*(1-q*t))")
        );
        assert!(phi(&p(&[3]), &p(&[3])).unwrap().is_one());
        assert_eq!(phi(&p(&[1]), &p(&[])).unwrap(), r("(1-t)/(1-q)"));
    }
}

//! Multivariate gcd by recursive content / primitive-part reduction and a
//! primitive polynomial remainder sequence in one main variable.
//!
//! This is the slow general path; the rational-function layer only reaches
//! it for denominators that are not products of binomials.

use super::factor::absorb;
use super::mono::Mono;
use super::poly::Poly;

/// Term-count budget for intermediate remainders.
const BUDGET: usize = 200_000;

/// Gcd in the Laurent polynomial ring over the rationals, normalized to a
/// primitive polynomial without monomial content and with positive leading
/// coefficient. Returns `None` if intermediate expressions exceed the budget.
pub fn gcd(a: &Poly, b: &Poly) -> Option<Poly> {
    if a.is_zero() {
        return Some(if b.is_zero() { Poly::zero() } else { absorb(b).2 });
    }
    if b.is_zero() {
        return Some(absorb(a).2);
    }
    gcd_canon(&absorb(a).2, &absorb(b).2)
}

fn gcd_canon(a: &Poly, b: &Poly) -> Option<Poly> {
    if a.is_one() || b.is_one() {
        return Some(Poly::one());
    }
    if a == b {
        return Some(a.clone());
    }
    let va = a.variables();
    let vb = b.variables();
    let common: Vec<usize> = va.iter().copied().filter(|v| vb.contains(v)).collect();
    if common.is_empty() {
        return Some(Poly::one());
    }
    // a variable missing from one side reduces to a content computation
    if let Some(&v) = va.iter().find(|v| !vb.contains(v)) {
        let ca = content_in(a, v)?;
        return gcd_canon(&ca, b);
    }
    if let Some(&v) = vb.iter().find(|v| !va.contains(v)) {
        let cb = content_in(b, v)?;
        return gcd_canon(a, &cb);
    }
    let v = *common
        .iter()
        .min_by_key(|&&v| a.degree_range(v).1.max(b.degree_range(v).1))
        .expect("nonempty");
    let ca = content_in(a, v)?;
    let cb = content_in(b, v)?;
    let gc = gcd_canon(&ca, &cb)?;
    let mut p = a.div_exact(&ca).expect("content divides");
    let mut r = b.div_exact(&cb).expect("content divides");
    if p.degree_range(v).1 < r.degree_range(v).1 {
        std::mem::swap(&mut p, &mut r);
    }
    loop {
        if r.degree_range(v).1 == 0 {
            return Some(gc);
        }
        let rem = prem(&p, &r, v)?;
        if rem.is_zero() {
            let g = gc.mul(&r);
            return Some(absorb(&g).2);
        }
        let rem = absorb(&rem).2;
        let crem = content_in(&rem, v)?;
        let rem = rem.div_exact(&crem).expect("content divides");
        p = r;
        r = rem;
    }
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
fn content_in(p: &Poly, v: usize) -> Option<Poly> {
    let mut g: Option<Poly> = None;
    for (_, c) in p.coeffs_in(v) {
        let c = absorb(&c).2;
        g = Some(match g {
            None => c,
            Some(prev) => gcd_canon(&prev, &c)?,
        });
        if g.as_ref().map(Poly::is_one).unwrap_or(false) {
            break;
        }
    }
    Some(g.unwrap_or_else(Poly::one))
}

/// Pseudo-remainder of `a` by `b` in the variable `v`.
fn prem(a: &Poly, b: &Poly, v: usize) -> Option<Poly> {
    let n = b.degree_range(v).1;
    let bc = b.coeffs_in(v);
    let lb = bc.get(&n).expect("leading coefficient").clone();
    let mut r = a.clone();
    loop {
        let m = r.degree_range(v).1;
        if r.is_zero() || m < n {
            return Some(r);
        }
        let lr = r.coeffs_in(v).remove(&m).expect("leading coefficient");
        let mut shift = Mono::one();
        shift.set(v, m - n);
        r = r.mul(&lb).sub(&b.mul(&lr).shift(&shift));
        if r.len() > BUDGET {
            return None;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::int::Int;
    use crate::ring::symbols::Symbol;

    #[test]
    fn shared_factor_recovered() {
        let q = Poly::var(Symbol::q());
        let t = Poly::var(Symbol::t());
        let a = Poly::var(Symbol::var("a"));
        let g = q.add(&t).add(&Poly::one());
        let x = g.mul(&q.sub(&a));
        let y = g.mul(&t.mul(&a).add(&Poly::int(3)));
        assert_eq!(gcd(&x, &y).unwrap(), g);
        let coprime = gcd(&q.sub(&a), &q.add(&a)).unwrap();
        assert!(coprime.is_one());
        let scaled = gcd(&x.scale(&Int::from(6)), &x.scale(&Int::from(-4))).unwrap();
        assert_eq!(scaled, absorb(&x).2);
    }
}

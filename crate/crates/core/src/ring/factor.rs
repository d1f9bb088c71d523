//! Interned denominator factors and binomial splitting.
//!
//! Every factor is stored once in a global table as a canonical polynomial:
//! nonnegative exponents, no monomial content, primitive, positive leading
//! coefficient. Binomials `m1 - m2` and `m1 + m2` are split into cyclotomic
//! pieces `Phi_d(v)` for a primitive Laurent monomial `v`; those pieces are
//! irreducible, so trial division decides coprimality with them.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::int::Int;
use super::mono::Mono;
use super::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactorId(pub(crate) u32);

#[derive(Debug)]
pub struct FactorData {
    pub poly: Poly,
    /// Known irreducible (cyclotomic in a monomial).
    pub irreducible: bool,
    /// Indices of the variables occurring in `poly`.
    pub vars: Vec<usize>,
}

struct Interner {
    list: Vec<Arc<FactorData>>,
    index: HashMap<Poly, u32>,
}

fn interner() -> &'static RwLock<Interner> {
    static TABLE: OnceLock<RwLock<Interner>> = OnceLock::new();
    TABLE.get_or_init(|| {
        RwLock::new(Interner {
            list: Vec::new(),
            index: HashMap::new(),
        })
    })
}

/// Interns a canonical polynomial.
pub(crate) fn intern(poly: Poly, irreducible: bool) -> FactorId {
    {
        let t = interner().read().expect("factor table poisoned");
        if let Some(&i) = t.index.get(&poly) {
            return FactorId(i);
        }
    }
    let mut t = interner().write().expect("factor table poisoned");
    if let Some(&i) = t.index.get(&poly) {
        return FactorId(i);
    }
    let id = t.list.len() as u32;
    let vars = poly.variables();
    t.list.push(Arc::new(FactorData {
        poly: poly.clone(),
        irreducible,
        vars,
    }));
    t.index.insert(poly, id);
    FactorId(id)
}

pub(crate) fn factor(id: FactorId) -> Arc<FactorData> {
    let t = interner().read().expect("factor table poisoned");
    t.list[id.0 as usize].clone()
}

/// Integer coefficients of the `d`-th cyclotomic polynomial, lowest degree
/// first.
pub(crate) fn cyclotomic(d: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(c) = cache.read().expect("cyclotomic cache poisoned").get(&d) {
        return c.clone();
    }
    // x^d - 1 divided by Phi_e for every proper divisor e
    let mut num = vec![0i64; d as usize + 1];
    num[0] = -1;
    num[d as usize] = 1;
    for e in 1..d {
        if d % e == 0 {
            let div = cyclotomic(e);
            num = divide_monic(&num, &div);
        }
    }
    let out = Arc::new(num);
    cache.write().expect("cyclotomic cache poisoned").insert(d, out.clone());
    out
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quo = vec![0i64; num.len() - dn];
    for k in (0..quo.len()).rev() {
        let c = rem[k + dn];
        quo[k] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[k + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quo
}

/// Splits a canonical-form polynomial into `unit * content * prod factors`.
pub(crate) struct Split {
    pub coeff: Int,
    pub mono: Mono,
    pub factors: Vec<(FactorId, i32)>,
}

/// Pulls out integer content, sign and monomial content. Returns
/// `(c, m, rest)` with `p = c * m * rest` and `rest` canonical.
pub(crate) fn absorb(p: &Poly) -> (Int, Mono, Poly) {
    debug_assert!(!p.is_zero());
    let m = p.min_mono();
    let mut rest = p.shift(&m.inv());
    let mut c = rest.content();
    if rest.leading().expect("nonzero").1.is_negative() {
        c = c.neg();
    }
    if !c.is_one() {
        rest = rest.div_int_exact(&c);
    }
    (c, m, rest)
}

/// Factors `p` (nonzero) as far as binomial splitting allows.
pub(crate) fn split(p: &Poly) -> Split {
    let (c, m, rest) = absorb(p);
    if rest.is_one() {
        return Split {
            coeff: c,
            mono: m,
            factors: Vec::new(),
        };
    }
    if rest.len() == 2 {
        if let Some(mut s) = split_binomial(&rest) {
            s.coeff = s.coeff.mul(&c);
            s.mono = s.mono.mul(&m);
            return s;
        }
    }
    let id = intern(rest, false);
    Split {
        coeff: c,
        mono: m,
        factors: vec![(id, 1)],
    }
}

fn gcd_u(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u(b, a % b)
    }
}

/// `rest` is canonical with two terms; succeeds when both coefficients are
/// `+-1`.
fn split_binomial(rest: &Poly) -> Option<Split> {
    let [(m1, c1), (m2, c2)] = rest.terms() else {
        return None;
    };
    if !c1.abs().is_one() || !c2.abs().is_one() {
        return None;
    }
    // rest = c2*m2*(1 + s*u)
    let u = m1.div(m2);
    let plus = c1 == c2;
    let mut g: u32 = 0;
    for (_, e) in u.support() {
        g = gcd_u(g, e.unsigned_abs());
    }
    let mut v = Mono(u.0.iter().map(|&e| e / g as i16).collect());
    if v.support().next().map(|(_, e)| e < 0).unwrap_or(false) {
        v = v.inv();
    }
    let orders: Vec<u32> = if plus {
        (1..=2 * g).filter(|d| (2 * g) % d == 0 && g % d != 0).collect()
    } else {
        (1..=g).filter(|d| g % d == 0).collect()
    };
    let mut factors = Vec::with_capacity(orders.len());
    let mut lead_mono = Mono::one();
    let mut lead_coeff = Int::ONE;
    for d in orders {
        let coeffs = cyclotomic(d);
        let terms: Vec<(Mono, Int)> = coeffs
            .iter()
            .enumerate()
            .filter(|(_, &k)| k != 0)
            .map(|(k, &cf)| (v.pow(k as i32), Int::from(cf)))
            .collect();
        let poly = Poly::from_terms(terms);
        let (_, _, canon) = absorb(&poly);
        let (lm, lc) = canon.leading().expect("nonzero").clone();
        lead_mono = lead_mono.mul(&lm);
        lead_coeff = lead_coeff.mul(&lc);
        factors.push((intern(canon, true), 1));
    }
    // unit = lt(rest) / prod lt(factors)
    let (rm, rc) = rest.leading().expect("nonzero");
    Some(Split {
        coeff: rc.div_exact(&lead_coeff).expect("unit coefficient"),
        mono: rm.div(&lead_mono),
        factors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::symbols::Symbol;

    #[test]
    fn cyclotomic_small() {
        assert_eq!(*cyclotomic(1), vec![-1, 1]);
        assert_eq!(*cyclotomic(2), vec![1, 1]);
        assert_eq!(*cyclotomic(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic(12), vec![1, 0, -1, 0, 1]);
    }

    fn expand(s: &Split) -> Poly {
        let mut p = Poly::monomial(s.mono.clone(), s.coeff.clone());
        for &(id, e) in &s.factors {
            p = p.mul(&factor(id).poly.pow(e as u32));
        }
        p
    }

    #[test]
    fn binomials_split_and_recombine() {
        let q = Symbol::q();
        let t = Symbol::t();
        let cases = [
            Poly::one_minus(Mono::var(q, 6), Int::ONE),
            Poly::one_minus(Mono::var(q, 4), Int::from(-1)),
            Poly::one_minus(Mono::from_pairs(&[(q, 2), (t, -2)]), Int::ONE),
            Poly::one_minus(Mono::from_pairs(&[(q, -3), (t, 1)]), Int::from(-1)).scale(&Int::from(-5)),
        ];
        for p in cases {
            let s = split(&p);
            assert_eq!(expand(&s), p);
        }
        let s = split(&Poly::one_minus(Mono::var(q, 6), Int::ONE));
        assert_eq!(s.factors.len(), 4);
    }
}

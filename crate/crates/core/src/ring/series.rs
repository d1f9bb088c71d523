//! Power series in a chosen set of letters, truncated at a total degree.

use std::collections::BTreeMap;
use std::fmt;

use super::factor;
use super::int::Int;
use super::mono::{Desc, Mono};
use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::symbols::Symbol;
use crate::error::{Error, Result};

/// Truncated series: every stored key is a monomial in `letters` of total
/// degree at most `cutoff`; coefficients are rational functions in the
/// remaining symbols.
#[derive(Clone, Debug)]
pub struct TruncSeries {
    letters: Vec<usize>,
    cutoff: u32,
    terms: BTreeMap<Desc, RatFunc>,
}

/// First coefficient where two series differ.
#[derive(Clone, Debug)]
pub struct Mismatch {
    pub monomial: Mono,
    pub left: RatFunc,
    pub right: RatFunc,
}

fn key_degree(m: &Mono) -> u32 {
    m.degree() as u32
}

impl TruncSeries {
    pub fn zero(letters: &[Symbol], cutoff: u32) -> TruncSeries {
        let mut l: Vec<usize> = letters.iter().map(|s| s.index()).collect();
        l.sort_unstable();
        l.dedup();
        TruncSeries {
            letters: l,
            cutoff,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: RatFunc, letters: &[Symbol], cutoff: u32) -> TruncSeries {
        let mut s = TruncSeries::zero(letters, cutoff);
        if !c.is_zero() {
            s.terms.insert(Desc(Mono::one()), c);
        }
        s
    }

    pub fn one(letters: &[Symbol], cutoff: u32) -> TruncSeries {
        TruncSeries::constant(RatFunc::one(), letters, cutoff)
    }

    fn empty_like(&self, cutoff: u32) -> TruncSeries {
        TruncSeries {
            letters: self.letters.clone(),
            cutoff,
            terms: BTreeMap::new(),
        }
    }

    pub fn letters(&self) -> Vec<Symbol> {
        self.letters.iter().map(|&i| Symbol::from_index(i)).collect()
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &RatFunc)> {
        self.terms.iter().map(|(k, v)| (&k.0, v))
    }

    pub fn coefficient(&self, m: &Mono) -> RatFunc {
        self.terms.get(&Desc(m.clone())).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// Adds `c * m` (dropped if beyond the cutoff).
    pub fn add_term(&mut self, m: Mono, c: &RatFunc) {
        if c.is_zero() || key_degree(&m) > self.cutoff {
            return;
        }
        let key = Desc(m);
        let v = match self.terms.get(&key) {
            Some(old) => old.add(c),
            None => c.clone(),
        };
        if v.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, v);
        }
    }

    fn check_compatible(&self, other: &TruncSeries) {
        assert_eq!(self.letters, other.letters, "series over different letters");
    }

    pub fn add(&self, other: &TruncSeries) -> TruncSeries {
        self.check_compatible(other);
        let cutoff = self.cutoff.min(other.cutoff);
        let mut out = self.truncate(cutoff);
        for (k, v) in &other.terms {
            out.add_term(k.0.clone(), v);
        }
        out
    }

    pub fn neg(&self) -> TruncSeries {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.neg();
        }
        out
    }

    pub fn sub(&self, other: &TruncSeries) -> TruncSeries {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &RatFunc) -> TruncSeries {
        let mut out = self.empty_like(self.cutoff);
        if c.is_zero() {
            return out;
        }
        for (k, v) in &self.terms {
            out.terms.insert(k.clone(), v.mul(c));
        }
        out
    }

    /// Multiplies by a letter monomial, shifting degrees.
    pub fn shift(&self, m: &Mono) -> TruncSeries {
        let mut out = self.empty_like(self.cutoff);
        for (k, v) in &self.terms {
            out.add_term(k.0.mul(m), v);
        }
        out
    }

    pub fn truncate(&self, cutoff: u32) -> TruncSeries {
        let mut out = self.empty_like(cutoff.min(self.cutoff));
        for (k, v) in &self.terms {
            if key_degree(&k.0) <= out.cutoff {
                out.terms.insert(k.clone(), v.clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        self.check_compatible(other);
        let cutoff = self.cutoff.min(other.cutoff);
        let mut acc: BTreeMap<Desc, Vec<RatFunc>> = BTreeMap::new();
        for (ka, va) in &self.terms {
            let da = key_degree(&ka.0);
            if da > cutoff {
                continue;
            }
            for (kb, vb) in &other.terms {
                if da + key_degree(&kb.0) > cutoff {
                    continue;
                }
                acc.entry(Desc(ka.0.mul(&kb.0))).or_default().push(va.mul(vb));
            }
        }
        let mut out = self.empty_like(cutoff);
        for (k, vs) in acc {
            let v = RatFunc::sum(vs.iter());
            if !v.is_zero() {
                out.terms.insert(k, v);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> TruncSeries {
        let mut acc = TruncSeries {
            letters: self.letters.clone(),
            cutoff: self.cutoff,
            terms: BTreeMap::from([(Desc(Mono::one()), RatFunc::one())]),
        };
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Homogeneous component of degree `d`.
    pub fn component(&self, d: u32) -> TruncSeries {
        let mut out = self.empty_like(self.cutoff);
        for (k, v) in &self.terms {
            if key_degree(&k.0) == d {
                out.terms.insert(k.clone(), v.clone());
            }
        }
        out
    }

    /// Inverse of a series with nonzero constant term.
    pub fn inv(&self) -> Result<TruncSeries> {
        let c0 = self.coefficient(&Mono::one());
        if c0.is_zero() {
            return Err(Error::Precondition("series has zero constant term".into()));
        }
        let inv0 = c0.inv()?;
        let comps: Vec<TruncSeries> = (0..=self.cutoff).map(|d| self.component(d)).collect();
        let mut h: Vec<TruncSeries> = vec![TruncSeries::constant(inv0.clone(), &self.letters(), self.cutoff)];
        for n in 1..=self.cutoff as usize {
            let mut s = self.empty_like(self.cutoff);
            for j in 1..=n {
                if comps[j].is_zero() || h[n - j].is_zero() {
                    continue;
                }
                s = s.add(&comps[j].mul(&h[n - j]));
            }
            h.push(s.scale(&inv0.neg()));
        }
        let mut out = self.empty_like(self.cutoff);
        for part in h {
            for (k, v) in part.terms {
                out.terms.insert(k, v);
            }
        }
        Ok(out)
    }

    /// Compares all retained coefficients up to the smaller cutoff.
    pub fn first_mismatch(&self, other: &TruncSeries) -> Option<Mismatch> {
        let cutoff = self.cutoff.min(other.cutoff);
        let diff = self.truncate(cutoff).sub(&other.truncate(cutoff));
        // report in increasing degree for readable witnesses
        let mut keys: Vec<&Desc> = diff.terms.keys().collect();
        keys.sort_by(|a, b| b.cmp(a));
        keys.first().map(|k| Mismatch {
            monomial: k.0.clone(),
            left: self.coefficient(&k.0),
            right: other.coefficient(&k.0),
        })
    }

    pub fn equals(&self, other: &TruncSeries) -> bool {
        self.first_mismatch(other).is_none()
    }

    /// Expands a polynomial (letters nonnegative) into a series.
    pub fn from_poly(p: &Poly, letters: &[Symbol], cutoff: u32) -> Result<TruncSeries> {
        let mut out = TruncSeries::zero(letters, cutoff);
        let mut groups: BTreeMap<Desc, Vec<(Mono, Int)>> = BTreeMap::new();
        for (m, c) in p.terms() {
            let mut key = Mono::one();
            let mut rest = m.clone();
            for (i, e) in m.support() {
                if out.letters.contains(&i) {
                    if e < 0 {
                        return Err(Error::Precondition("negative power of a series letter".into()));
                    }
                    key.set(i, e);
                    rest.set(i, 0);
                }
            }
            if key_degree(&key) <= cutoff {
                groups.entry(Desc(key)).or_default().push((rest, c.clone()));
            }
        }
        for (k, ts) in groups {
            out.add_term(k.0, &RatFunc::from_poly(&Poly::from_terms(ts)));
        }
        Ok(out)
    }

    /// Expansion of a rational function whose denominator factors have
    /// nonzero letter-free parts.
    pub fn from_ratfunc(r: &RatFunc, letters: &[Symbol], cutoff: u32) -> Result<TruncSeries> {
        let mut out = TruncSeries::zero(letters, cutoff);
        if r.is_zero() {
            return Ok(out);
        }
        let (cn, cd, mono, num, fac) = r.parts();
        let mut scalar = RatFunc::from_int(cn.clone()).div(&RatFunc::from_int(cd.clone()))?;
        let mut key = Mono::one();
        let mut other = Mono::one();
        for (i, e) in mono.support() {
            if out.letters.contains(&i) {
                if e < 0 {
                    return Err(Error::Precondition("negative power of a series letter".into()));
                }
                key.set(i, e);
            } else {
                other.set(i, e);
            }
        }
        if key_degree(&key) > cutoff {
            return Ok(out);
        }
        scalar = scalar.mul(&RatFunc::mono(other));
        let mut series = TruncSeries::from_poly(num, letters, cutoff - key_degree(&key))?;
        for &(id, e) in fac {
            let f = factor::factor(id);
            if !f.vars.iter().any(|v| out.letters.contains(v)) {
                scalar = scalar.mul(&RatFunc::from_factor(id, e));
                continue;
            }
            let fs = TruncSeries::from_poly(&f.poly, letters, series.cutoff)?;
            let fs = if e > 0 {
                fs.pow(e as u32)
            } else {
                fs.inv()
                    .map_err(|_| Error::Precondition(format!("factor {} is not a unit series", f.poly)))?
                    .pow((-e) as u32)
            };
            series = series.mul(&fs);
        }
        out = series.scale(&scalar);
        out.cutoff = cutoff;
        let shifted = out.shift(&key);
        Ok(shifted)
    }

    /// Applies a map to every coefficient.
    pub fn map_coeffs<F: Fn(&RatFunc) -> Result<RatFunc>>(&self, f: F) -> Result<TruncSeries> {
        let mut out = self.empty_like(self.cutoff);
        for (k, v) in &self.terms {
            let nv = f(v)?;
            if !nv.is_zero() {
                out.terms.insert(k.clone(), nv);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = super::symbols::symbol_names();
        let mut first = true;
        for (k, v) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let mut m = String::new();
            Poly::monomial(k.0.clone(), Int::ONE).write_with(&names, &mut m);
            write!(f, "[{}]*{}", v, m)?;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(deg {})", self.cutoff + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series() {
        let x = Symbol::letter(1);
        let one_minus_x = RatFunc::one_minus(&RatFunc::var(x));
        let s = TruncSeries::from_ratfunc(&one_minus_x, &[x], 5).unwrap();
        let inv = s.inv().unwrap();
        for k in 0..=5 {
            assert!(inv.coefficient(&Mono::var(x, k)).is_one());
        }
        assert!(s.mul(&inv).equals(&TruncSeries::one(&[x], 5)));
    }

    #[test]
    fn rational_expansion_matches_product() {
        let x = Symbol::letter(1);
        let b = RatFunc::sym("b");
        let bx = b.mul(&RatFunc::var(x));
        let r = RatFunc::one().div(&RatFunc::one_minus(&bx)).unwrap();
        let s = TruncSeries::from_ratfunc(&r, &[x], 4).unwrap();
        let direct = TruncSeries::from_ratfunc(&RatFunc::one_minus(&bx), &[x], 4).unwrap();
        assert!(s.mul(&direct).equals(&TruncSeries::one(&[x], 4)));
        assert_eq!(s.coefficient(&Mono::var(x, 3)), b.pow(3).unwrap());
    }
}

//! Rational functions kept in partially factored form.
//!
//! A value is `(cn/cd) * m * N * prod F_i^{e_i}` where `m` is a Laurent
//! monomial, `N` a canonical polynomial (primitive, no monomial content,
//! positive leading coefficient) and the `F_i` interned canonical factors
//! with nonzero integer exponents. Negative-exponent factors never divide
//! `N`. The fully reduced `num/den` pair is produced on demand for printing.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use smallvec::SmallVec;

use super::factor::{self, absorb, split, FactorId};
use super::gcd::gcd;
use super::int::Int;
use super::mono::{Desc, Mono};
use super::poly::{may_divide, MonoImage, Poly};
use super::symbols::{symbol_names, Symbol};
use crate::error::{Error, Result};

type Factors = SmallVec<[(FactorId, i32); 8]>;

#[derive(Clone, Debug)]
pub struct RatFunc {
    cn: Int,
    cd: Int,
    mono: Mono,
    num: Poly,
    fac: Factors,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

fn reduce_rational(n: Int, d: Int) -> (Int, Int) {
    if n.is_zero() {
        return (Int::ZERO, Int::ONE);
    }
    let g = n.gcd(&d);
    let (mut n, mut d) = if g.is_one() {
        (n, d)
    } else {
        (n.div_exact(&g).expect("gcd"), d.div_exact(&g).expect("gcd"))
    };
    if d.is_negative() {
        n = n.neg();
        d = d.neg();
    }
    (n, d)
}

fn merge_factors(a: &[(FactorId, i32)], b: &[(FactorId, i32)], sign: i32) -> Factors {
    let mut out = Factors::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i]);
            i += 1;
        } else if take_b {
            out.push((b[j].0, sign * b[j].1));
            j += 1;
        } else {
            let e = a[i].1 + sign * b[j].1;
            if e != 0 {
                out.push((a[i].0, e));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl RatFunc {
    pub fn zero() -> RatFunc {
        RatFunc {
            cn: Int::ZERO,
            cd: Int::ONE,
            mono: Mono::one(),
            num: Poly::one(),
            fac: Factors::new(),
        }
    }

    pub fn one() -> RatFunc {
        RatFunc::from_int(Int::ONE)
    }

    pub fn from_int(c: Int) -> RatFunc {
        RatFunc {
            cn: c,
            ..RatFunc::zero()
        }
    }

    pub fn int(c: i64) -> RatFunc {
        RatFunc::from_int(Int::from(c))
    }

    pub fn rational(n: i64, d: i64) -> RatFunc {
        assert!(d != 0, "zero denominator");
        let (cn, cd) = reduce_rational(Int::from(n), Int::from(d));
        RatFunc {
            cn,
            cd,
            ..RatFunc::zero()
        }
    }

    pub fn term(c: Int, m: Mono) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            cn: c,
            mono: m,
            ..RatFunc::zero()
        }
    }

    pub fn mono(m: Mono) -> RatFunc {
        RatFunc::term(Int::ONE, m)
    }

    pub fn var(s: Symbol) -> RatFunc {
        RatFunc::mono(Mono::var(s, 1))
    }

    /// Symbol power `s^e`, `e` may be negative.
    pub fn var_pow(s: Symbol, e: i32) -> RatFunc {
        RatFunc::mono(Mono::var(s, e))
    }

    pub fn q() -> RatFunc {
        RatFunc::var(Symbol::q())
    }

    pub fn t() -> RatFunc {
        RatFunc::var(Symbol::t())
    }

    /// `q^a t^b`.
    pub fn qt(a: i32, b: i32) -> RatFunc {
        RatFunc::mono(Mono::from_pairs(&[(Symbol::q(), a), (Symbol::t(), b)]))
    }

    /// Parameter or letter by name (registered on demand).
    pub fn sym(name: &str) -> RatFunc {
        RatFunc::var(Symbol::var(name))
    }

    pub fn from_poly(p: &Poly) -> RatFunc {
        if p.is_zero() {
            return RatFunc::zero();
        }
        if p.len() == 2 {
            let s = split(p);
            return RatFunc {
                cn: s.coeff,
                cd: Int::ONE,
                mono: s.mono,
                num: Poly::one(),
                fac: s.factors.into_iter().collect(),
            };
        }
        let (c, m, rest) = absorb(p);
        RatFunc {
            cn: c,
            cd: Int::ONE,
            mono: m,
            num: rest,
            fac: Factors::new(),
        }
    }

    /// `num/den`; fails on a zero denominator.
    pub fn new(num: &Poly, den: &Poly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::from_poly(num).div(&RatFunc::from_poly(den))
    }

    /// `1 - x`.
    pub fn one_minus(x: &RatFunc) -> RatFunc {
        if let Some((c, m)) = x.as_term() {
            return RatFunc::from_poly(&Poly::one_minus(m, c));
        }
        RatFunc::one().sub(x)
    }

    pub fn is_zero(&self) -> bool {
        self.cn.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.cn.is_one() && self.cd.is_one() && self.mono.is_one() && self.num.is_one() && self.fac.is_empty()
    }

    /// Integer or rational constant, if the value is free of symbols.
    pub fn as_rational(&self) -> Option<(Int, Int)> {
        if self.mono.is_one() && self.num.is_one() && self.fac.is_empty() {
            Some((self.cn.clone(), self.cd.clone()))
        } else {
            None
        }
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || self.as_rational().is_some()
    }

    /// Single term with integer coefficient.
    pub fn as_term(&self) -> Option<(Int, Mono)> {
        if self.cd.is_one() && self.num.is_one() && self.fac.is_empty() && !self.is_zero() {
            Some((self.cn.clone(), self.mono.clone()))
        } else {
            None
        }
    }

    pub fn neg(&self) -> RatFunc {
        let mut r = self.clone();
        r.cn = r.cn.neg();
        r
    }

    pub fn scale_int(&self, k: i64) -> RatFunc {
        self.mul(&RatFunc::int(k))
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        let (cn, cd) = reduce_rational(self.cn.mul(&other.cn), self.cd.mul(&other.cd));
        let num = if other.num.is_one() {
            self.num.clone()
        } else if self.num.is_one() {
            other.num.clone()
        } else {
            self.num.mul(&other.num)
        };
        let mut r = RatFunc {
            cn,
            cd,
            mono: self.mono.mul(&other.mono),
            num,
            fac: merge_factors(&self.fac, &other.fac, 1),
        };
        r.cancel();
        r
    }

    /// Divides `num` by negative-exponent factors wherever possible.
    fn cancel(&mut self) {
        if self.num.is_one() {
            return;
        }
        for k in 0..self.fac.len() {
            let (id, mut e) = self.fac[k];
            if e >= 0 {
                continue;
            }
            let f = factor::factor(id);
            let nv = self.num.variables();
            if !f.vars.iter().all(|v| nv.contains(v)) {
                continue;
            }
            while e < 0 && !self.num.is_one() {
                if !may_divide(&self.num, &f.poly) {
                    break;
                }
                match self.num.div_exact(&f.poly) {
                    Some(q) => {
                        self.num = q;
                        e += 1;
                    }
                    None => break,
                }
            }
            self.fac[k].1 = e;
            if self.num.is_one() {
                break;
            }
        }
        self.fac.retain(|(_, e)| *e != 0);
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (cn, cd) = reduce_rational(self.cd.clone(), self.cn.clone());
        let mut fac: Factors = self.fac.iter().map(|&(id, e)| (id, -e)).collect();
        let mut r = RatFunc {
            cn,
            cd,
            mono: self.mono.inv(),
            num: Poly::one(),
            fac: Factors::new(),
        };
        if !self.num.is_one() {
            let s = split(&self.num);
            let (cn, cd) = reduce_rational(r.cn.clone(), r.cd.mul(&s.coeff));
            r.cn = cn;
            r.cd = cd;
            r.mono = r.mono.div(&s.mono);
            let mut extra: Vec<(FactorId, i32)> = s.factors.iter().map(|&(id, e)| (id, -e)).collect();
            extra.sort();
            fac = merge_factors(&fac, &extra, 1);
        }
        r.fac = fac;
        Ok(r)
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: i32) -> Result<RatFunc> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let mut acc = RatFunc::one();
        let mut base = self.clone();
        let mut e = k as u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    /// Expands `num * prod F^e` over the given nonnegative exponents.
    fn expand_with(num: &Poly, parts: &[(FactorId, i32)]) -> Poly {
        let mut p = num.clone();
        for &(id, e) in parts {
            debug_assert!(e > 0);
            p = p.mul(&factor::factor(id).poly.pow(e as u32));
        }
        p
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // common part: gcd of rational constants, min monomial, min factor powers
        let gn = self.cn.gcd(&other.cn);
        let g = self.cd.gcd(&other.cd);
        let lcd = self.cd.div_exact(&g).expect("gcd").mul(&other.cd);
        let m = self.mono.min(&other.mono);
        let mut common = Factors::new();
        let mut rest_a: Vec<(FactorId, i32)> = Vec::new();
        let mut rest_b: Vec<(FactorId, i32)> = Vec::new();
        let (a, b) = (&self.fac, &other.fac);
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let (id, ea, eb) = if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
                i += 1;
                (a[i - 1].0, a[i - 1].1, 0)
            } else if i >= a.len() || b[j].0 < a[i].0 {
                j += 1;
                (b[j - 1].0, 0, b[j - 1].1)
            } else {
                i += 1;
                j += 1;
                (a[i - 1].0, a[i - 1].1, b[j - 1].1)
            };
            let emin = ea.min(eb);
            if emin != 0 {
                common.push((id, emin));
            }
            if ea > emin {
                rest_a.push((id, ea - emin));
            }
            if eb > emin {
                rest_b.push((id, eb - emin));
            }
        }
        let ka = self.cn.div_exact(&gn).expect("gcd").mul(&lcd.div_exact(&self.cd).expect("lcm"));
        let kb = other.cn.div_exact(&gn).expect("gcd").mul(&lcd.div_exact(&other.cd).expect("lcm"));
        let pa = RatFunc::expand_with(&self.num, &rest_a).mul_term(&self.mono.div(&m), &ka);
        let pb = RatFunc::expand_with(&other.num, &rest_b).mul_term(&other.mono.div(&m), &kb);
        let s = pa.add(&pb);
        if s.is_zero() {
            return RatFunc::zero();
        }
        let (cs, ms, ns) = absorb(&s);
        let (cn, cd) = reduce_rational(gn.mul(&cs), lcd);
        let mut r = RatFunc {
            cn,
            cd,
            mono: m.mul(&ms),
            num: ns,
            fac: common,
        };
        r.cancel();
        r
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn sum<'a, I: IntoIterator<Item = &'a RatFunc>>(items: I) -> RatFunc {
        let mut acc = RatFunc::zero();
        for x in items {
            acc = acc.add(x);
        }
        acc
    }

    pub fn product<'a, I: IntoIterator<Item = &'a RatFunc>>(items: I) -> RatFunc {
        let mut acc = RatFunc::one();
        for x in items {
            acc = acc.mul(x);
        }
        acc
    }

    /// Unreduced numerator and denominator polynomials (denominator with
    /// positive leading coefficient).
    pub fn num_den(&self) -> (Poly, Poly) {
        let mut pos_m = Mono::one();
        let mut neg_m = Mono::one();
        for (i, e) in self.mono.support() {
            if e > 0 {
                pos_m.set(i, e);
            } else {
                neg_m.set(i, -e);
            }
        }
        let pos: Vec<(FactorId, i32)> = self.fac.iter().copied().filter(|&(_, e)| e > 0).collect();
        let neg: Vec<(FactorId, i32)> = self.fac.iter().map(|&(id, e)| (id, -e)).filter(|&(_, e)| e > 0).collect();
        let num = RatFunc::expand_with(&self.num, &pos).mul_term(&pos_m, &self.cn);
        let den = RatFunc::expand_with(&Poly::one(), &neg).mul_term(&neg_m, &self.cd);
        (num, den)
    }

    /// Fully reduced numerator and denominator.
    pub fn reduced(&self) -> (Poly, Poly) {
        if self.is_zero() {
            return (Poly::zero(), Poly::one());
        }
        let mut pos_m = Mono::one();
        let mut neg_m = Mono::one();
        for (i, e) in self.mono.support() {
            if e > 0 {
                pos_m.set(i, e);
            } else {
                neg_m.set(i, -e);
            }
        }
        let pos: Vec<(FactorId, i32)> = self.fac.iter().copied().filter(|&(_, e)| e > 0).collect();
        let mut num = RatFunc::expand_with(&self.num, &pos);
        let mut den_parts: Vec<Poly> = Vec::new();
        for &(id, e) in self.fac.iter().filter(|(_, e)| *e < 0) {
            let f = factor::factor(id);
            for _ in 0..(-e) {
                if f.irreducible {
                    if may_divide(&num, &f.poly) {
                        if let Some(qn) = num.div_exact(&f.poly) {
                            num = qn;
                            continue;
                        }
                    }
                    den_parts.push(f.poly.clone());
                } else {
                    match gcd(&num, &f.poly) {
                        Some(g) if !g.is_one() => {
                            num = num.div_exact(&g).expect("gcd divides");
                            let rest = f.poly.div_exact(&g).expect("gcd divides");
                            if !rest.is_one() {
                                den_parts.push(rest);
                            }
                        }
                        _ => den_parts.push(f.poly.clone()),
                    }
                }
            }
        }
        let mut den = Poly::monomial(neg_m, self.cd.clone());
        for p in &den_parts {
            den = den.mul(p);
        }
        (num.mul_term(&pos_m, &self.cn), den)
    }

    /// Value as `s -> infinity`: ratio of leading coefficients in `s` when the
    /// degrees agree, zero when the denominator dominates.
    pub fn limit_at_infinity(&self, s: Symbol) -> Result<RatFunc> {
        let (n, d) = self.num_den();
        if n.is_zero() {
            return Ok(RatFunc::zero());
        }
        let nc = n.coeffs_in(s.index());
        let dc = d.coeffs_in(s.index());
        let (&dn, ln) = nc.iter().next_back().expect("nonzero numerator");
        let (&dd, ld) = dc.iter().next_back().expect("nonzero denominator");
        match dn.cmp(&dd) {
            std::cmp::Ordering::Less => Ok(RatFunc::zero()),
            std::cmp::Ordering::Greater => Err(Error::Precondition(format!("unbounded as {s} grows"))),
            std::cmp::Ordering::Equal => RatFunc::from_poly(ln).div(&RatFunc::from_poly(ld)),
        }
    }

    pub fn to_canonical(&self) -> String {
        let names = symbol_names();
        let (n, d) = self.reduced();
        let mut s = String::new();
        if d.is_one() {
            n.write_with(&names, &mut s);
        } else {
            s.push('(');
            n.write_with(&names, &mut s);
            s.push_str(")/(");
            d.write_with(&names, &mut s);
            s.push(')');
        }
        s
    }

    /// Reduced numerator and denominator, each in canonical text form.
    pub fn canonical_parts(&self) -> (String, String) {
        let names = symbol_names();
        let (n, d) = self.reduced();
        let (mut ns, mut ds) = (String::new(), String::new());
        n.write_with(&names, &mut ns);
        d.write_with(&names, &mut ds);
        (ns, ds)
    }

    /// Indices of all symbols occurring (possibly only in cancelled form).
    pub fn variables(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.mono.support().map(|(i, _)| i).collect();
        v.extend(self.num.variables());
        for &(id, _) in &self.fac {
            v.extend(factor::factor(id).vars.iter().copied());
        }
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.variables().contains(&s.index())
    }

    /// Substitutes symbols by rational functions simultaneously.
    pub fn substitute(&self, bindings: &[(Symbol, RatFunc)]) -> Result<RatFunc> {
        if self.is_zero() || bindings.is_empty() {
            return Ok(self.clone());
        }
        let monomial = bindings.iter().all(|(_, v)| v.is_zero() || v.as_term().is_some());
        if monomial {
            let width = bindings.iter().map(|(s, _)| s.index() + 1).max().unwrap_or(0);
            let mut images: Vec<Option<MonoImage>> = vec![None; width];
            for (s, v) in bindings {
                images[s.index()] = Some(match v.as_term() {
                    Some((c, m)) => MonoImage::Mono(c, m),
                    None => MonoImage::Zero,
                });
            }
            self.substitute_with(|p| {
                p.substitute_monomial(&images)
                    .map(|r| RatFunc::from_poly(&r))
                    .ok_or_else(|| Error::VanishingDenominator("zero image under a negative power".into()))
            }, bindings)
        } else {
            let map: HashMap<usize, RatFunc> = bindings.iter().map(|(s, v)| (s.index(), v.clone())).collect();
            self.substitute_with(|p| eval_poly(p, &map), bindings)
        }
    }

    fn substitute_with<F>(&self, eval: F, bindings: &[(Symbol, RatFunc)]) -> Result<RatFunc>
    where
        F: Fn(&Poly) -> Result<RatFunc>,
    {
        let mono_val = {
            let mut acc = RatFunc::one();
            for (i, e) in self.mono.support() {
                let img = bindings
                    .iter()
                    .find(|(s, _)| s.index() == i)
                    .map(|(_, v)| v.clone())
                    .unwrap_or_else(|| RatFunc::var(Symbol::from_index(i)));
                if img.is_zero() {
                    if e < 0 {
                        return Err(Error::VanishingDenominator(format!(
                            "{} -> 0 in a denominator",
                            Symbol::from_index(i)
                        )));
                    }
                    return Ok(RatFunc::zero());
                }
                acc = acc.mul(&img.pow(e)?);
            }
            acc
        };
        let mut acc = mono_val.mul(&RatFunc::rational_from(&self.cn, &self.cd));
        if !self.num.is_one() {
            let v = eval(&self.num)?;
            if v.is_zero() {
                return Ok(RatFunc::zero());
            }
            acc = acc.mul(&v);
        }
        for &(id, e) in &self.fac {
            let f = factor::factor(id);
            let v = eval(&f.poly)?;
            if v.is_zero() {
                if e < 0 {
                    return Err(Error::VanishingDenominator(format!("factor {} vanishes", f.poly)));
                }
                return Ok(RatFunc::zero());
            }
            acc = acc.mul(&v.pow(e)?);
        }
        Ok(acc)
    }

    fn rational_from(n: &Int, d: &Int) -> RatFunc {
        let (cn, cd) = reduce_rational(n.clone(), d.clone());
        RatFunc {
            cn,
            cd,
            ..RatFunc::zero()
        }
    }

    pub fn subs(&self, s: Symbol, v: &RatFunc) -> Result<RatFunc> {
        self.substitute(&[(s, v.clone())])
    }

    /// Expansion as a polynomial in the variables `vars` with rational
    /// function coefficients; `None` if some denominator involves them.
    /// Laurent exponents in `vars` are allowed.
    pub fn coefficients_in(&self, vars: &[usize]) -> Option<BTreeMap<Desc, RatFunc>> {
        let mut out = BTreeMap::new();
        if self.is_zero() {
            return Some(out);
        }
        let involves = |fv: &[usize]| fv.iter().any(|v| vars.contains(v));
        let mut scalar = RatFunc::rational_from(&self.cn, &self.cd);
        let mut key_mono = Mono::one();
        let mut other_mono = Mono::one();
        for (i, e) in self.mono.support() {
            if vars.contains(&i) {
                key_mono.set(i, e);
            } else {
                other_mono.set(i, e);
            }
        }
        scalar = scalar.mul(&RatFunc::mono(other_mono));
        let mut expand_parts: Vec<(FactorId, i32)> = Vec::new();
        for &(id, e) in &self.fac {
            let f = factor::factor(id);
            if involves(&f.vars) {
                if e < 0 {
                    return None;
                }
                expand_parts.push((id, e));
            } else {
                scalar.fac = merge_factors(&scalar.fac, &[(id, e)], 1);
            }
        }
        let p = RatFunc::expand_with(&self.num, &expand_parts);
        let mut groups: HashMap<Mono, Vec<(Mono, Int)>> = HashMap::new();
        for (m, c) in p.terms() {
            let mut key = Mono::one();
            let mut rest = m.clone();
            for (i, e) in m.support() {
                if vars.contains(&i) {
                    key.set(i, e);
                    rest.set(i, 0);
                }
            }
            groups.entry(key.mul(&key_mono)).or_default().push((rest, c.clone()));
        }
        for (k, terms) in groups {
            let coeff = RatFunc::from_poly(&Poly::from_terms(terms)).mul(&scalar);
            if !coeff.is_zero() {
                out.insert(Desc(k), coeff);
            }
        }
        Some(out)
    }

    pub(crate) fn parts(&self) -> (&Int, &Int, &Mono, &Poly, &[(FactorId, i32)]) {
        (&self.cn, &self.cd, &self.mono, &self.num, &self.fac)
    }

    pub(crate) fn from_factor(id: FactorId, e: i32) -> RatFunc {
        RatFunc {
            fac: std::iter::once((id, e)).collect(),
            ..RatFunc::one()
        }
    }

    fn structurally_equal(&self, other: &RatFunc) -> bool {
        self.cn == other.cn
            && self.cd == other.cd
            && self.mono == other.mono
            && self.num == other.num
            && self.fac == other.fac
    }
}

fn eval_poly(p: &Poly, map: &HashMap<usize, RatFunc>) -> Result<RatFunc> {
    let mut powers: HashMap<(usize, i32), RatFunc> = HashMap::new();
    let mut acc = RatFunc::zero();
    for (m, c) in p.terms() {
        let mut term = RatFunc::from_int(c.clone());
        let mut rest = Mono::one();
        for (i, e) in m.support() {
            match map.get(&i) {
                Some(v) => {
                    if !powers.contains_key(&(i, e)) {
                        powers.insert((i, e), v.pow(e)?);
                    }
                    term = term.mul(&powers[&(i, e)]);
                }
                None => rest.set(i, e),
            }
        }
        acc = acc.add(&term.mul(&RatFunc::mono(rest)));
    }
    Ok(acc)
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &RatFunc) -> bool {
        self.structurally_equal(other) || self.sub(other).is_zero()
    }
}

impl Eq for RatFunc {}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical())
    }
}

impl From<i64> for RatFunc {
    fn from(v: i64) -> Self {
        RatFunc::int(v)
    }
}

impl From<&Poly> for RatFunc {
    fn from(p: &Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl std::ops::Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::add(self, rhs)
    }
}

impl std::ops::Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::sub(self, rhs)
    }
}

impl std::ops::Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::mul(self, rhs)
    }
}

impl std::ops::Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RatFunc {
        RatFunc::q()
    }

    fn om(x: &RatFunc) -> RatFunc {
        RatFunc::one_minus(x)
    }

    #[test]
    fn spec_normalizations() {
        let one = RatFunc::one();
        let a = om(&q().pow(2).unwrap()).div(&om(&q())).unwrap();
        assert_eq!(a.to_canonical(), "q+1");
        let b = q().sub(&q().pow(2).unwrap()).div(&q().pow(2).unwrap()).unwrap();
        assert_eq!(b.to_canonical(), "(-q+1)/(q)");
        let t = RatFunc::t();
        let c = om(&t).mul(&om(&q().pow(2).unwrap())).div(&om(&q()).mul(&om(&q().mul(&t)))).unwrap();
        assert_eq!(c.to_canonical(), "(q*t-q+t-1)/(q*t-1)");
        assert!(one.sub(&one).is_zero());
    }

    #[test]
    fn sums_cancel() {
        let x = q().div(&om(&q())).unwrap();
        let y = RatFunc::one().div(&om(&q())).unwrap();
        // q/(1-q) + 1 = 1/(1-q)
        assert_eq!(x.add(&RatFunc::one()), y);
        assert!(x.add(&RatFunc::one()).sub(&y).is_zero());
        assert_eq!(x.add(&RatFunc::one()).to_canonical(), "(-1)/(q-1)");
    }

    #[test]
    fn substitution_examples() {
        let qs = Symbol::q();
        let t = Symbol::t();
        let b = Symbol::var("b");
        let z = RatFunc::sym("z");
        let inv_q = RatFunc::var_pow(qs, -1);
        assert_eq!(om(&q()).subs(qs, &inv_q).unwrap().to_canonical(), "(q-1)/(q)");
        let e = RatFunc::one().div(&om(&RatFunc::var(b).mul(&z))).unwrap();
        assert!(e.subs(b, &RatFunc::zero()).unwrap().is_one());
        let f = om(&RatFunc::t()).div(&om(&q().mul(&RatFunc::t()))).unwrap();
        let g = om(&q()).div(&om(&q().pow(2).unwrap())).unwrap();
        assert_eq!(f.subs(t, &q()).unwrap(), g);
        let h = RatFunc::one().div(&om(&q())).unwrap();
        assert!(h.subs(qs, &RatFunc::one()).is_err());
    }
}

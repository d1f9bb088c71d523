//! Symmetric polynomials in monomial-orbit or P-basis form.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::partitions::{horizontal_strip_predecessors, partitions_of, Partition};
use crate::ring::{Int, Mono, Poly, RatFunc, Symbol};

use super::coeffs::psi;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    Monomial,
    P,
}

/// A symmetric function of `n` letters: `sum_k c_k m_k` or `sum_k c_k P_k`.
#[derive(Clone, Debug)]
pub struct SymFunc {
    n: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, RatFunc>,
}

impl SymFunc {
    pub fn zero(n: usize, basis: Basis) -> SymFunc {
        SymFunc {
            n,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// A single basis element (zero if it has more than `n` parts).
    pub fn basis_element(n: usize, basis: Basis, lam: &Partition) -> SymFunc {
        let mut s = SymFunc::zero(n, basis);
        s.add_term(lam.clone(), &RatFunc::one());
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, RatFunc> {
        &self.coeffs
    }

    pub fn coefficient(&self, lam: &Partition) -> RatFunc {
        self.coeffs.get(lam).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c` to the coefficient of `lam`; terms with too many parts vanish.
    pub fn add_term(&mut self, lam: Partition, c: &RatFunc) {
        if lam.len() > self.n || c.is_zero() {
            return;
        }
        let v = match self.coeffs.get(&lam) {
            Some(old) => old.add(c),
            None => c.clone(),
        };
        if v.is_zero() {
            self.coeffs.remove(&lam);
        } else {
            self.coeffs.insert(lam, v);
        }
    }

    fn check_compatible(&self, other: &SymFunc) -> Result<()> {
        if self.n != other.n || self.basis != other.basis {
            return Err(Error::Precondition("symmetric functions in different spaces".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_term(k.clone(), v);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.add(&other.scale(&RatFunc::int(-1)))
    }

    pub fn scale(&self, c: &RatFunc) -> SymFunc {
        let mut out = SymFunc::zero(self.n, self.basis);
        for (k, v) in &self.coeffs {
            out.add_term(k.clone(), &v.mul(c));
        }
        out
    }

    /// Coefficientwise exact comparison (after basis change if needed).
    pub fn equals(&self, other: &SymFunc) -> Result<bool> {
        let a = self.to_monomial();
        let b = other.to_monomial();
        Ok(a.sub(&b)?.is_zero())
    }

    /// Re-expansion in the monomial-orbit basis.
    pub fn to_monomial(&self) -> SymFunc {
        match self.basis {
            Basis::Monomial => self.clone(),
            Basis::P => {
                let mut out = SymFunc::zero(self.n, Basis::Monomial);
                for (lam, c) in &self.coeffs {
                    for (k, v) in macdonald_p(lam, self.n).coeffs {
                        out.add_term(k, &v.mul(c));
                    }
                }
                out
            }
        }
    }

    /// Full exponent map of a monomial-basis function.
    fn exponent_map(&self) -> HashMap<Vec<u32>, RatFunc> {
        let mut out = HashMap::new();
        for (k, v) in &self.to_monomial().coeffs {
            for alpha in crate::partitions::composition_orbit(k, self.n) {
                out.insert(alpha, v.clone());
            }
        }
        out
    }

    /// Product, computed in the monomial basis.
    pub fn mul(&self, other: &SymFunc) -> Result<SymFunc> {
        if self.n != other.n {
            return Err(Error::Precondition("symmetric functions in different alphabets".into()));
        }
        let a = self.exponent_map();
        let b = other.exponent_map();
        let mut targets: BTreeMap<Partition, Vec<RatFunc>> = BTreeMap::new();
        for (alpha, ca) in &a {
            for (beta, cb) in &b {
                let sum: Vec<u32> = alpha.iter().zip(beta).map(|(x, y)| x + y).collect();
                if sum.windows(2).all(|w| w[0] >= w[1]) {
                    targets
                        .entry(Partition::new(sum).expect("decreasing"))
                        .or_default()
                        .push(ca.mul(cb));
                }
            }
        }
        let mut out = SymFunc::zero(self.n, Basis::Monomial);
        for (k, vs) in targets {
            out.add_term(k, &RatFunc::sum(vs.iter()));
        }
        Ok(out)
    }

    /// Value at the given letter values.
    pub fn eval(&self, values: &[RatFunc]) -> Result<RatFunc> {
        if values.len() != self.n {
            return Err(Error::Precondition(format!(
                "{} values for {} letters",
                values.len(),
                self.n
            )));
        }
        let mut acc = RatFunc::zero();
        for (k, c) in &self.to_monomial().coeffs {
            let mut m = RatFunc::zero();
            for alpha in crate::partitions::composition_orbit(k, self.n) {
                let mut term = RatFunc::one();
                for (v, &e) in values.iter().zip(&alpha) {
                    if e > 0 {
                        term = term.mul(&v.pow(e as i32)?);
                    }
                }
                m = m.add(&term);
            }
            acc = acc.add(&m.mul(c));
        }
        Ok(acc)
    }

    /// Value as a rational function of the letters `x1..xn`.
    pub fn to_ratfunc(&self) -> RatFunc {
        let mut acc = RatFunc::zero();
        for (k, c) in &self.to_monomial().coeffs {
            acc = acc.add(&RatFunc::from_poly(&monomial_symmetric(k, self.n)).mul(c));
        }
        acc
    }

    /// Reads a symmetric polynomial in `x1..xn` back into orbit form,
    /// checking that it really is symmetric.
    pub fn from_ratfunc(f: &RatFunc, n: usize) -> Result<SymFunc> {
        let vars: Vec<usize> = (1..=n).map(|i| Symbol::letter(i).index()).collect();
        let coeffs = f
            .coefficients_in(&vars)
            .ok_or_else(|| Error::Precondition("letters occur in a denominator".into()))?;
        let mut out = SymFunc::zero(n, Basis::Monomial);
        let mut seen = 0usize;
        for (m, c) in &coeffs {
            let alpha: Vec<i32> = vars.iter().map(|&v| m.0.get(v)).collect();
            if alpha.iter().any(|&e| e < 0) {
                return Err(Error::Precondition("negative letter exponent".into()));
            }
            if alpha.windows(2).all(|w| w[0] >= w[1]) {
                out.add_term(Partition::new(alpha.iter().map(|&e| e as u32).collect())?, c);
            }
            seen += 1;
        }
        let expected: usize = out
            .coeffs
            .keys()
            .map(|k| crate::partitions::composition_orbit(k, n).len())
            .sum();
        if expected != seen {
            return Err(Error::Precondition("polynomial is not symmetric".into()));
        }
        for (k, c) in &out.coeffs {
            for alpha in crate::partitions::composition_orbit(k, n) {
                let mut m = Mono::one();
                for (i, &e) in alpha.iter().enumerate() {
                    m.set(vars[i], e as i32);
                }
                let other = coeffs.get(&crate::ring::mono::Desc(m)).cloned().unwrap_or_else(RatFunc::zero);
                if other != *c {
                    return Err(Error::Precondition("polynomial is not symmetric".into()));
                }
            }
        }
        Ok(out)
    }
}

/// `m_k(x1..xn)` as an integer polynomial.
pub fn monomial_symmetric(k: &Partition, n: usize) -> Poly {
    let terms: Vec<(Mono, Int)> = crate::partitions::composition_orbit(k, n)
        .into_iter()
        .map(|alpha| {
            let mut m = Mono::one();
            for (i, &e) in alpha.iter().enumerate() {
                if e > 0 {
                    m.set(Symbol::letter(i + 1).index(), e as i32);
                }
            }
            (m, Int::ONE)
        })
        .collect();
    if k.len() > n {
        return Poly::zero();
    }
    Poly::from_terms(terms)
}

static PCOEF: Memo<(Partition, Partition), RatFunc> = Memo::new();

/// Coefficient of `m_kappa` in `P_lambda`, independent of the number of
/// letters (as long as there are at least `l(kappa)`).
///
/// Sums `prod psi` over Gelfand-Tsetlin chains whose successive weight
/// differences are the parts of `kappa`.
pub fn p_coefficient(lam: &Partition, kappa: &Partition) -> RatFunc {
    if lam.weight() != kappa.weight() || !lam.dominates(kappa) {
        return RatFunc::zero();
    }
    PCOEF.get_or((lam.clone(), kappa.clone()), || {
        let mut memo: HashMap<(Partition, usize), RatFunc> = HashMap::new();
        chain_sum(lam, kappa.parts(), &mut memo)
    })
}

fn chain_sum(lam: &Partition, alpha: &[u32], memo: &mut HashMap<(Partition, usize), RatFunc>) -> RatFunc {
    let Some((&last, rest)) = alpha.split_last() else {
        return if lam.is_empty() { RatFunc::one() } else { RatFunc::zero() };
    };
    if lam.len() > alpha.len() {
        return RatFunc::zero();
    }
    if let Some(v) = memo.get(&(lam.clone(), alpha.len())) {
        return v.clone();
    }
    let mut acc = RatFunc::zero();
    for mu in horizontal_strip_predecessors(lam) {
        if lam.weight() - mu.weight() != last {
            continue;
        }
        let inner = chain_sum(&mu, rest, memo);
        if inner.is_zero() {
            continue;
        }
        acc = acc.add(&inner.mul(&psi(lam, &mu).expect("strip")));
    }
    memo.insert((lam.clone(), alpha.len()), acc.clone());
    acc
}

/// `P_lambda(x1..xn)` in the monomial-orbit basis; zero when `l(lambda) > n`.
pub fn macdonald_p(lam: &Partition, n: usize) -> SymFunc {
    let mut out = SymFunc::zero(n, Basis::Monomial);
    if lam.len() > n {
        return out;
    }
    for kappa in partitions_of(lam.weight(), n) {
        let c = p_coefficient(lam, &kappa);
        out.add_term(kappa, &c);
    }
    out
}

/// Signed permutations of `0..n` (Leibniz expansion order).
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, n: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, n, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut perms = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], n, &mut perms);
    perms
        .into_iter()
        .map(|p| {
            let mut inv = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if p[i] > p[j] {
                        inv += 1;
                    }
                }
            }
            (p, if inv % 2 == 0 { 1 } else { -1 })
        })
        .collect()
}

/// Determinant of a small square matrix of rational functions.
pub fn det(m: &[Vec<RatFunc>]) -> RatFunc {
    let n = m.len();
    let mut acc = RatFunc::zero();
    for (p, sign) in permutations(n) {
        let mut term = RatFunc::int(sign);
        for (i, &j) in p.iter().enumerate() {
            term = term.mul(&m[i][j]);
            if term.is_zero() {
                break;
            }
        }
        acc = acc.add(&term);
    }
    acc
}

/// `prod_{i<j} (x_i - x_j)`.
pub fn vandermonde(n: usize) -> Poly {
    let mut acc = Poly::one();
    for i in 1..=n {
        for j in i + 1..=n {
            acc = acc.mul(&Poly::var(Symbol::letter(i)).sub(&Poly::var(Symbol::letter(j))));
        }
    }
    acc
}

/// `det(x_i^{lambda_j + n - j})` as a polynomial.
pub fn alternant(exps: &[u32]) -> Poly {
    let n = exps.len();
    let mut terms = Vec::new();
    for (p, sign) in permutations(n) {
        let mut m = Mono::one();
        for (i, &j) in p.iter().enumerate() {
            m.set(Symbol::letter(i + 1).index(), exps[j] as i32);
        }
        terms.push((m, Int::from(sign)));
    }
    Poly::from_terms(terms)
}

/// Schur polynomial as the exact quotient of the alternant by the
/// Vandermonde product; zero when `l(lambda) > n`.
pub fn schur_det(lam: &Partition, n: usize) -> Result<SymFunc> {
    if lam.len() > n {
        return Ok(SymFunc::zero(n, Basis::Monomial));
    }
    let exps: Vec<u32> = (1..=n).map(|j| lam.part(j) + (n - j) as u32).collect();
    let quotient = alternant(&exps)
        .div_exact(&vandermonde(n))
        .ok_or_else(|| Error::InexactDivision("alternant by Vandermonde".into()))?;
    SymFunc::from_ratfunc(&RatFunc::from_poly(&quotient), n)
}

/// Expansion in the P basis by peeling off lexicographically largest terms
/// (a linear extension of dominance, so the P-to-m matrix is unitriangular).
pub fn to_p_basis(f: &SymFunc) -> SymFunc {
    if f.basis == Basis::P {
        return f.clone();
    }
    let mut rest = f.clone();
    let mut out = SymFunc::zero(f.n, Basis::P);
    while let Some(top) = lex_top(&rest) {
        let c = rest.coefficient(&top);
        out.add_term(top.clone(), &c);
        let p = macdonald_p(&top, f.n).scale(&c);
        rest = rest.sub(&p).expect("same space");
    }
    out
}

fn lex_top(f: &SymFunc) -> Option<Partition> {
    f.coeffs.keys().max_by(|a, b| a.weight().cmp(&b.weight()).then_with(|| a.parts().cmp(b.parts()))).cloned()
}

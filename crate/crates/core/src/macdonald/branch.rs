//! Generic letter-by-letter evaluation of a branching rule.
//!
//! `f_lambda(x_1..x_n; a) = sum_mu f_{lambda/mu}(x_n; a) f_mu(x_1..x_{n-1}; g(a))`
//! with `f_lambda(-; a) = delta_{lambda, base}`. A nonzero `base` gives the
//! skew functions of the same rule.

use std::collections::HashMap;

use crate::error::Result;
use crate::partitions::{c_prime, horizontal_strip_predecessors, Partition};
use crate::ring::{RatFunc, Symbol, TruncSeries};

use super::coeffs::psi;

pub trait BranchRule: Sync {
    fn name(&self) -> &'static str;

    /// `f_{lambda/mu}(z; params)`; only called for `mu` in `predecessors`.
    fn coefficient(&self, lam: &Partition, mu: &Partition, z: &RatFunc, params: &[RatFunc]) -> Result<RatFunc>;

    /// Parameter evolution `a' = g(a)`.
    fn next_params(&self, params: &[RatFunc]) -> Vec<RatFunc> {
        params.to_vec()
    }

    /// Candidates `mu` with possibly nonzero coefficient.
    fn predecessors(&self, lam: &Partition) -> Vec<Partition> {
        horizontal_strip_predecessors(lam)
    }

    /// True when `f_{lambda/mu}(z)` has letter degree at least `|lambda/mu|`,
    /// which lets series evaluation discard heavy `lambda` early.
    fn graded(&self) -> bool {
        false
    }
}

/// `z^{|lambda/mu|}` on horizontal strips.
pub struct SchurRule;

impl BranchRule for SchurRule {
    fn name(&self) -> &'static str {
        "schur"
    }

    fn coefficient(&self, lam: &Partition, mu: &Partition, z: &RatFunc, _: &[RatFunc]) -> Result<RatFunc> {
        z.pow((lam.weight() - mu.weight()) as i32)
    }

    fn graded(&self) -> bool {
        true
    }
}

/// `P_{lambda/mu}(z) = psi_{lambda/mu} z^{|lambda/mu|}`, or its normalised
/// form `t^{n(lambda)-n(mu)} (c'_mu/c'_lambda) P_{lambda/mu}(z)`.
pub struct MacdonaldRule {
    pub normalized: bool,
}

/// Skew Macdonald `P_{lambda/mu}(z)` in one letter.
pub fn skew_p_letter(lam: &Partition, mu: &Partition, z: &RatFunc) -> Result<RatFunc> {
    if !lam.is_horizontal_strip_over(mu) {
        return Ok(RatFunc::zero());
    }
    Ok(psi(lam, mu)?.mul(&z.pow((lam.weight() - mu.weight()) as i32)?))
}

/// `t^{n(lambda)-n(mu)} c'_mu / c'_lambda`, the factor turning `P` into `P-hat`.
pub fn hat_factor(lam: &Partition, mu: &Partition) -> RatFunc {
    RatFunc::qt(0, lam.n() as i32 - mu.n() as i32)
        .mul(&c_prime(mu))
        .div(&c_prime(lam))
        .expect("c' nonzero")
}

/// Normalised skew `P-hat_{lambda/mu}(z)` in one letter.
pub fn skew_phat_letter(lam: &Partition, mu: &Partition, z: &RatFunc) -> Result<RatFunc> {
    let v = skew_p_letter(lam, mu, z)?;
    if v.is_zero() {
        return Ok(v);
    }
    Ok(v.mul(&hat_factor(lam, mu)))
}

impl BranchRule for MacdonaldRule {
    fn name(&self) -> &'static str {
        if self.normalized {
            "macdonald-normalized"
        } else {
            "macdonald"
        }
    }

    fn coefficient(&self, lam: &Partition, mu: &Partition, z: &RatFunc, _: &[RatFunc]) -> Result<RatFunc> {
        if self.normalized {
            skew_phat_letter(lam, mu, z)
        } else {
            skew_p_letter(lam, mu, z)
        }
    }

    fn graded(&self) -> bool {
        true
    }
}

fn param_levels(rule: &dyn BranchRule, params: &[RatFunc], n: usize) -> Vec<Vec<RatFunc>> {
    // levels[k] holds the parameters used when k letters remain
    let mut levels = vec![Vec::new(); n + 1];
    if n == 0 {
        return levels;
    }
    levels[n] = params.to_vec();
    for k in (1..n).rev() {
        levels[k] = rule.next_params(&levels[k + 1]);
    }
    levels
}

/// Exact evaluation with a memo shared across all requested `lambda`.
pub struct Brancher<'r> {
    rule: &'r dyn BranchRule,
    base: Partition,
    letters: Vec<RatFunc>,
    levels: Vec<Vec<RatFunc>>,
    memo: HashMap<(Partition, usize), RatFunc>,
}

impl<'r> Brancher<'r> {
    pub fn new(rule: &'r dyn BranchRule, base: Partition, letters: Vec<RatFunc>, params: &[RatFunc]) -> Self {
        let levels = param_levels(rule, params, letters.len());
        Brancher {
            rule,
            base,
            letters,
            levels,
            memo: HashMap::new(),
        }
    }

    pub fn value(&mut self, lam: &Partition) -> Result<RatFunc> {
        let n = self.letters.len();
        self.eval(lam, n)
    }

    fn eval(&mut self, lam: &Partition, k: usize) -> Result<RatFunc> {
        if k == 0 {
            return Ok(if *lam == self.base { RatFunc::one() } else { RatFunc::zero() });
        }
        if !lam.contains(&self.base) {
            return Ok(RatFunc::zero());
        }
        if let Some(v) = self.memo.get(&(lam.clone(), k)) {
            return Ok(v.clone());
        }
        let mut acc = RatFunc::zero();
        for mu in self.rule.predecessors(lam) {
            if !mu.contains(&self.base) {
                continue;
            }
            let inner = self.eval(&mu, k - 1)?;
            if inner.is_zero() {
                continue;
            }
            let c = self.rule.coefficient(lam, &mu, &self.letters[k - 1], &self.levels[k])?;
            acc = acc.add(&c.mul(&inner));
        }
        self.memo.insert((lam.clone(), k), acc.clone());
        Ok(acc)
    }
}

/// `f_lambda(letters; params)` for a single `lambda`.
pub fn branch_build(rule: &dyn BranchRule, lam: &Partition, letters: &[RatFunc], params: &[RatFunc]) -> Result<RatFunc> {
    Brancher::new(rule, Partition::empty(), letters.to_vec(), params).value(lam)
}

/// Skew version `f_{lambda/base}(letters; params)`.
pub fn branch_build_skew(
    rule: &dyn BranchRule,
    lam: &Partition,
    base: &Partition,
    letters: &[RatFunc],
    params: &[RatFunc],
) -> Result<RatFunc> {
    Brancher::new(rule, base.clone(), letters.to_vec(), params).value(lam)
}

/// Letters `x1..xn` as rational functions.
pub fn letter_values(n: usize) -> Vec<RatFunc> {
    (1..=n).map(|i| RatFunc::var(Symbol::letter(i))).collect()
}

/// Truncated power-series evaluation in symbolic letters.
pub struct SeriesBrancher<'r> {
    rule: &'r dyn BranchRule,
    base: Partition,
    letters: Vec<Symbol>,
    levels: Vec<Vec<RatFunc>>,
    cutoff: u32,
    memo: HashMap<(Partition, usize), TruncSeries>,
    coeff_memo: HashMap<(Partition, Partition, usize), TruncSeries>,
}

impl<'r> SeriesBrancher<'r> {
    pub fn new(rule: &'r dyn BranchRule, base: Partition, letters: Vec<Symbol>, params: &[RatFunc], cutoff: u32) -> Self {
        let levels = param_levels(rule, params, letters.len());
        SeriesBrancher {
            rule,
            base,
            letters,
            levels,
            cutoff,
            memo: HashMap::new(),
            coeff_memo: HashMap::new(),
        }
    }

    pub fn value(&mut self, lam: &Partition) -> Result<TruncSeries> {
        let n = self.letters.len();
        self.eval(lam, n)
    }

    fn zero(&self) -> TruncSeries {
        TruncSeries::zero(&self.letters, self.cutoff)
    }

    fn coefficient(&mut self, lam: &Partition, mu: &Partition, k: usize) -> Result<TruncSeries> {
        let key = (lam.clone(), mu.clone(), k);
        if let Some(s) = self.coeff_memo.get(&key) {
            return Ok(s.clone());
        }
        let z = RatFunc::var(self.letters[k - 1]);
        let c = self.rule.coefficient(lam, mu, &z, &self.levels[k])?;
        let s = TruncSeries::from_ratfunc(&c, &self.letters, self.cutoff)?;
        self.coeff_memo.insert(key, s.clone());
        Ok(s)
    }

    fn eval(&mut self, lam: &Partition, k: usize) -> Result<TruncSeries> {
        if k == 0 {
            return Ok(if *lam == self.base {
                TruncSeries::one(&self.letters, self.cutoff)
            } else {
                self.zero()
            });
        }
        if !lam.contains(&self.base) {
            return Ok(self.zero());
        }
        if self.rule.graded() && lam.weight() - self.base.weight() > self.cutoff {
            return Ok(self.zero());
        }
        if let Some(v) = self.memo.get(&(lam.clone(), k)) {
            return Ok(v.clone());
        }
        let mut acc = self.zero();
        for mu in self.rule.predecessors(lam) {
            if !mu.contains(&self.base) {
                continue;
            }
            let inner = self.eval(&mu, k - 1)?;
            if inner.is_zero() {
                continue;
            }
            let c = self.coefficient(lam, &mu, k)?;
            acc = acc.add(&c.mul(&inner));
        }
        self.memo.insert((lam.clone(), k), acc.clone());
        Ok(acc)
    }
}

/// Series version of [`branch_build_skew`].
pub fn branch_series(
    rule: &dyn BranchRule,
    lam: &Partition,
    base: &Partition,
    letters: &[Symbol],
    params: &[RatFunc],
    cutoff: u32,
) -> Result<TruncSeries> {
    SeriesBrancher::new(rule, base.clone(), letters.to_vec(), params, cutoff).value(lam)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_ratfunc;

    fn p(parts: &[u32]) -> Partition {
        Partition::from(parts)
    }

    #[test]
    fn schur_and_macdonald_small() {
        let xs = letter_values(2);
        assert_eq!(
            branch_build(&SchurRule, &p(&[1]), &xs, &[]).unwrap(),
            parse_ratfunc("x1+x2").unwrap()
        );
        let rule = MacdonaldRule { normalized: false };
        assert_eq!(
            branch_build(&rule, &p(&[1, 1]), &xs, &[]).unwrap(),
            parse_ratfunc("x1*x2").unwrap()
        );
        let expect = parse_ratfunc("x1^2+x2^2+(1+q)*(1-t)/(1-q*t)*x1*x2").unwrap();
        assert_eq!(branch_build(&rule, &p(&[2]), &xs, &[]).unwrap(), expect);
        assert!(branch_build(&rule, &p(&[1, 1, 1]), &xs, &[]).unwrap().is_zero());
    }

    #[test]
    fn series_matches_exact() {
        let rule = MacdonaldRule { normalized: true };
        let letters = [Symbol::letter(1), Symbol::letter(2)];
        let exact = branch_build(&rule, &p(&[2, 1]), &letter_values(2), &[]).unwrap();
        let s = branch_series(&rule, &p(&[2, 1]), &p(&[]), &letters, &[], 4).unwrap();
        assert!(s.equals(&TruncSeries::from_ratfunc(&exact, &letters, 4).unwrap()));
    }
}

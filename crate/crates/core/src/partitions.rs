//! Partitions, Young-diagram statistics and partition-indexed factors.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ring::{qpoch, RatFunc};

/// Weakly decreasing sequence of positive parts; the empty sequence is the
/// zero partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

/// How `mu` sits inside `lambda`, most specific first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StripRelation {
    NotContained,
    Contained,
    HorizontalStrip,
    VerticalStrip,
}

/// Arm, arm-colength, leg and leg-colength of a square.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HookStats {
    pub arm: u32,
    pub arm_co: u32,
    pub leg: u32,
    pub leg_co: u32,
}

impl Partition {
    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    /// Accepts trailing zeros; rejects increasing sequences.
    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        let mut p = parts;
        while p.last() == Some(&0) {
            p.pop();
        }
        if p.windows(2).any(|w| w[0] < w[1]) || p.contains(&0) {
            return Err(Error::Parse(format!("{p:?} is not weakly decreasing")));
        }
        Ok(Partition(p))
    }

    /// Panics on invalid input; for literals in code and tests.
    pub fn from(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).expect("valid partition")
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn sorted(mut parts: Vec<u32>) -> Partition {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted")
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `lambda_i`, 1-based, zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return u32::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        (1..=n).map(|i| self.part(i)).collect()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        if self.is_empty() {
            return Partition::empty();
        }
        Partition((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// `n(lambda) = sum (i-1) lambda_i`.
    pub fn n(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, &p)| i as u32 * p).sum()
    }

    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.0.iter().zip(&self.0).all(|(m, l)| m <= l)
    }

    /// `mu ≼ lambda`: interlacing `lambda_{i+1} <= mu_i <= lambda_i`.
    pub fn is_horizontal_strip_over(&self, mu: &Partition) -> bool {
        if mu.len() > self.len() {
            return false;
        }
        (1..=self.len()).all(|i| self.part(i + 1) <= mu.part(i) && mu.part(i) <= self.part(i))
    }

    pub fn is_vertical_strip_over(&self, mu: &Partition) -> bool {
        self.contains(mu) && (1..=self.len()).all(|i| self.part(i) - mu.part(i) <= 1)
    }

    pub fn strip_relation(&self, mu: &Partition) -> StripRelation {
        if !self.contains(mu) {
            StripRelation::NotContained
        } else if self.is_horizontal_strip_over(mu) {
            StripRelation::HorizontalStrip
        } else if self.is_vertical_strip_over(mu) {
            StripRelation::VerticalStrip
        } else {
            StripRelation::Contained
        }
    }

    pub fn has_square(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && j as u32 <= self.part(i)
    }

    pub fn hook_stats(&self, i: usize, j: usize) -> Result<HookStats> {
        if !self.has_square(i, j) {
            return Err(Error::Precondition(format!("square ({i},{j}) not in {self}")));
        }
        let conj_j = self.0.iter().filter(|&&p| p as usize >= j).count();
        Ok(HookStats {
            arm: self.part(i) - j as u32,
            arm_co: j as u32 - 1,
            leg: (conj_j - i) as u32,
            leg_co: i as u32 - 1,
        })
    }

    /// Squares `(i, j)` in row-major order.
    pub fn squares(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.weight() as usize);
        for (i, &p) in self.0.iter().enumerate() {
            for j in 1..=p as usize {
                out.push((i + 1, j));
            }
        }
        out
    }

    /// Squares of `self` not in `mu`.
    pub fn skew_squares(&self, mu: &Partition) -> Vec<(usize, usize)> {
        self.squares().into_iter().filter(|&(i, j)| !mu.has_square(i, j)).collect()
    }

    /// `lambda_(i)`: part `i` decremented, if still a partition.
    pub fn decrement(&self, i: usize) -> Option<Partition> {
        if i == 0 || i > self.len() || self.part(i) <= self.part(i + 1) {
            return None;
        }
        let mut p = self.0.clone();
        p[i - 1] -= 1;
        Partition::new(p).ok()
    }

    /// `lambda^(i)`: part `i` incremented, if still a partition.
    pub fn increment(&self, i: usize) -> Option<Partition> {
        if i == 0 || i > self.len() + 1 || (i > 1 && self.part(i - 1) <= self.part(i)) {
            return None;
        }
        let mut p = self.padded(i);
        p[i - 1] += 1;
        Partition::new(p).ok()
    }

    /// Dominance `self >= other` (same weight assumed by callers).
    pub fn dominates(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0u32, 0u32);
        for i in 1..=n {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Subtracts `k` from every one of the first `n` parts (requires
    /// `l(self) = n` and all parts at least `k`).
    pub fn minus_columns(&self, k: u32) -> Partition {
        Partition::new(self.0.iter().map(|p| p - k).collect()).expect("still decreasing")
    }
}

impl Ord for Partition {
    /// Weight first, then reverse lexicographic (larger first part first).
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Partition> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<u32>> = s
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad part `{p}` in `{s}`"))))
            .collect();
        Partition::new(parts?)
    }
}

/// All partitions of `w` with at most `max_len` parts, in canonical order.
pub fn partitions_of(w: u32, max_len: usize) -> Vec<Partition> {
    fn rec(rem: u32, max_part: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max_part.min(rem)).rev() {
            cur.push(p);
            rec(rem - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(w, w, max_len, &mut Vec::new(), &mut out);
    out
}

/// All partitions of weight at most `w` and length at most `max_len`.
pub fn partitions_up_to(w: u32, max_len: usize) -> Vec<Partition> {
    (0..=w).flat_map(|k| partitions_of(k, max_len)).collect()
}

/// All `mu` with `mu ≼ lambda`, heaviest first.
pub fn horizontal_strip_predecessors(lambda: &Partition) -> Vec<Partition> {
    let n = lambda.len();
    let mut out = Vec::new();
    fn rec(lambda: &Partition, i: usize, n: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i > n {
            out.push(Partition::new(cur.clone()).expect("interlacing"));
            return;
        }
        for m in (lambda.part(i + 1)..=lambda.part(i)).rev() {
            cur.push(m);
            rec(lambda, i + 1, n, cur, out);
            cur.pop();
        }
    }
    rec(lambda, 1, n, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| b.weight().cmp(&a.weight()).then_with(|| a.cmp(b)));
    out
}

/// All partitions `mu ⊆ lambda`, canonical order.
pub fn subpartitions(lambda: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    fn rec(lambda: &Partition, i: usize, bound: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition::new(cur.clone()).expect("decreasing"));
        if i > lambda.len() {
            return;
        }
        for m in 1..=bound.min(lambda.part(i)) {
            cur.push(m);
            rec(lambda, i + 1, m, cur, out);
            cur.pop();
        }
    }
    rec(lambda, 1, lambda.part(1), &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Distinct rearrangements of `mu` padded to length `n`, lexicographically
/// decreasing.
pub fn composition_orbit(mu: &Partition, n: usize) -> Vec<Vec<u32>> {
    let mut cur = mu.padded(n);
    let mut out = vec![cur.clone()];
    // previous-permutation iteration from the decreasing arrangement
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] > cur[i]) else {
            break;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] < cur[i - 1]).expect("exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
    out
}

/// `(b)_lambda = prod_i (b t^{1-i})_{lambda_i}`.
pub fn gen_poch(b: &RatFunc, lambda: &Partition) -> RatFunc {
    let mut acc = RatFunc::one();
    for (i, &p) in lambda.parts().iter().enumerate() {
        let base = b.mul(&RatFunc::qt(0, -(i as i32)));
        acc = acc.mul(&qpoch(&base, p as i64).expect("nonnegative length"));
    }
    acc
}

/// `(b)_lambda` as the product over squares of `1 - b q^{a'} t^{-l'}`.
pub fn gen_poch_squares(b: &RatFunc, lambda: &Partition) -> RatFunc {
    let mut acc = RatFunc::one();
    for (i, j) in lambda.squares() {
        let f = b.mul(&RatFunc::qt(j as i32 - 1, 1 - i as i32));
        acc = acc.mul(&RatFunc::one_minus(&f));
    }
    acc
}

/// Product of several generalised factorials `(b1, b2, ...)_lambda`.
pub fn gen_poch_many(bs: &[RatFunc], lambda: &Partition) -> RatFunc {
    RatFunc::product(bs.iter().map(|b| gen_poch(b, lambda)).collect::<Vec<_>>().iter())
}

/// `(b)_lambda / (b)_mu` as a product over the skew squares; `mu ⊆ lambda`.
pub fn gen_poch_skew(b: &RatFunc, lambda: &Partition, mu: &Partition) -> RatFunc {
    let mut acc = RatFunc::one();
    for (i, j) in lambda.skew_squares(mu) {
        let f = b.mul(&RatFunc::qt(j as i32 - 1, 1 - i as i32));
        acc = acc.mul(&RatFunc::one_minus(&f));
    }
    acc
}

/// `c'_lambda = prod (1 - q^{a+1} t^l)`.
pub fn c_prime(lambda: &Partition) -> RatFunc {
    let mut acc = RatFunc::one();
    for (i, j) in lambda.squares() {
        let h = lambda.hook_stats(i, j).expect("square");
        acc = acc.mul(&RatFunc::one_minus(&RatFunc::qt(h.arm as i32 + 1, h.leg as i32)));
    }
    acc
}

/// `c_lambda = prod (1 - q^a t^{l+1})`.
pub fn c_lambda(lambda: &Partition) -> RatFunc {
    let mut acc = RatFunc::one();
    for (i, j) in lambda.squares() {
        let h = lambda.hook_stats(i, j).expect("square");
        acc = acc.mul(&RatFunc::one_minus(&RatFunc::qt(h.arm as i32, h.leg as i32 + 1)));
    }
    acc
}

/// `b_lambda = c_lambda / c'_lambda`.
pub fn b_lambda(lambda: &Partition) -> RatFunc {
    c_lambda(lambda).div(&c_prime(lambda)).expect("c' nonzero")
}

/// `(c_lambda, c'_lambda, b_lambda, n(lambda), n(lambda'))`.
pub fn c_factors(lambda: &Partition) -> (RatFunc, RatFunc, RatFunc, u32, u32) {
    let c = c_lambda(lambda);
    let cp = c_prime(lambda);
    let b = c.div(&cp).expect("c' nonzero");
    (c, cp, b, lambda.n(), lambda.conjugate().n())
}

/// `omega_lambda = sum_{i=1}^n q^{-lambda_i} t^{i-n}`.
pub fn omega(lambda: &Partition, n: usize) -> Result<RatFunc> {
    if n < lambda.len() {
        return Err(Error::Precondition(format!("n = {n} < l({lambda})")));
    }
    let terms: Vec<RatFunc> = (1..=n)
        .map(|i| RatFunc::qt(-(lambda.part(i) as i32), i as i32 - n as i32))
        .collect();
    Ok(RatFunc::sum(terms.iter()))
}

/// `(1)_{lambda/mu} = prod_{s in lambda - mu} (1 - q^{a'} t^{-l'})`.
pub fn one_poch_skew(lambda: &Partition, mu: &Partition) -> Result<RatFunc> {
    if !lambda.contains(mu) {
        return Err(Error::Precondition(format!("{mu} not contained in {lambda}")));
    }
    Ok(gen_poch_skew(&RatFunc::one(), lambda, mu))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::from(parts)
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3]).conjugate(), p(&[1, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn strips() {
        assert_eq!(p(&[6, 2]).strip_relation(&p(&[3])), StripRelation::HorizontalStrip);
        assert_eq!(p(&[2, 2]).strip_relation(&p(&[1])), StripRelation::Contained);
        assert_eq!(p(&[1, 1]).strip_relation(&p(&[1])), StripRelation::HorizontalStrip);
        assert!(p(&[1, 1]).is_vertical_strip_over(&p(&[1])));
        assert_eq!(p(&[1]).strip_relation(&p(&[2])), StripRelation::NotContained);
    }

    #[test]
    fn hooks() {
        let l = p(&[2, 1]);
        let h = l.hook_stats(1, 1).unwrap();
        assert_eq!((h.arm, h.arm_co, h.leg, h.leg_co), (1, 0, 1, 0));
        let h = l.hook_stats(1, 2).unwrap();
        assert_eq!((h.arm, h.arm_co, h.leg, h.leg_co), (0, 1, 0, 0));
        assert!(l.hook_stats(2, 2).is_err());
    }

    #[test]
    fn enumerations() {
        assert_eq!(
            horizontal_strip_predecessors(&p(&[2, 1])),
            vec![p(&[2, 1]), p(&[2]), p(&[1, 1]), p(&[1])]
        );
        assert_eq!(partitions_up_to(2, 2), vec![p(&[]), p(&[1]), p(&[2]), p(&[1, 1])]);
        assert_eq!(composition_orbit(&p(&[2, 1]), 2), vec![vec![2, 1], vec![1, 2]]);
        assert_eq!(composition_orbit(&p(&[1]), 3).len(), 3);
        assert_eq!(subpartitions(&p(&[2, 1])).len(), 5);
    }

    #[test]
    fn factors() {
        let b = RatFunc::sym("b");
        let expect = RatFunc::one_minus(&b)
            .mul(&RatFunc::one_minus(&b.mul(&RatFunc::q())))
            .mul(&RatFunc::one_minus(&b.mul(&RatFunc::qt(0, -1))));
        assert_eq!(gen_poch(&b, &p(&[2, 1])), expect);
        assert!(gen_poch(&RatFunc::t(), &p(&[1, 1])).is_zero());
        let (c, cp, bl, n, nc) = c_factors(&p(&[1]));
        assert_eq!(c, RatFunc::one_minus(&RatFunc::t()));
        assert_eq!(cp, RatFunc::one_minus(&RatFunc::q()));
        assert_eq!(bl, c.div(&cp).unwrap());
        assert_eq!((n, nc), (0, 0));
        assert_eq!(c_factors(&p(&[2])).4, 1);
        assert_eq!(
            omega(&p(&[2, 1]), 2).unwrap(),
            RatFunc::qt(-2, -1).add(&RatFunc::qt(-1, 0))
        );
        assert_eq!(
            one_poch_skew(&p(&[1, 1]), &p(&[1])).unwrap(),
            RatFunc::one_minus(&RatFunc::qt(0, -1))
        );
    }
}

//! q-difference operators of Macdonald type acting on rational functions.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::families::r_exact;
use crate::macdonald::coeffs::psi_prime;
use crate::macdonald::symfunc::macdonald_p;
use crate::partitions::{omega, partitions_of, Partition};
use crate::ring::{Poly, RatFunc, Symbol};

pub const MAX_LETTERS: usize = 4;

/// `f` with `x_i -> q^k x_i` (letters are 1-based).
pub fn qshift(f: &RatFunc, i: usize, k: i32) -> Result<RatFunc> {
    let x = Symbol::letter(i);
    f.subs(x, &RatFunc::var(x).mul(&RatFunc::qt(k, 0)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorKind {
    /// `D_n(c)`
    Dnc,
    /// `D_n^1`
    Dn1,
    /// `D_n(b, c)`
    Dnbc,
    /// `E_n = sum x_i A_i(x; 1/t) (T_{1/q, x_i} - 1)`
    CalE,
    /// `D_n^1(b) = sum A_i(x; 1/t) ((1 - b x_i/q) T_{1/q, x_i} + b x_i/q)`
    CalD1,
}

#[derive(Clone, Debug)]
pub struct DiffOperator {
    kind: OperatorKind,
    n: usize,
    b: RatFunc,
    c: RatFunc,
}

fn x(i: usize) -> RatFunc {
    RatFunc::var(Symbol::letter(i))
}

/// `prod_{i in I, j not in I} (t x_i - x_j)/(x_i - x_j)` for the given `t`.
fn cross_factor(set: &[bool], t: &RatFunc) -> Result<RatFunc> {
    let n = set.len();
    let mut acc = RatFunc::one();
    for i in 0..n {
        if !set[i] {
            continue;
        }
        for j in 0..n {
            if set[j] {
                continue;
            }
            let num = t.mul(&x(i + 1)).sub(&x(j + 1));
            acc = acc.mul(&num.div(&x(i + 1).sub(&x(j + 1)))?);
        }
    }
    Ok(acc)
}

fn single(n: usize, i: usize) -> Vec<bool> {
    (0..n).map(|k| k == i).collect()
}

impl DiffOperator {
    fn new(kind: OperatorKind, n: usize, b: RatFunc, c: RatFunc) -> Result<Self> {
        if n == 0 || n > MAX_LETTERS {
            return Err(Error::Bound(format!("operators need 1 <= n <= {MAX_LETTERS}")));
        }
        Ok(DiffOperator { kind, n, b, c })
    }

    pub fn dn_c(n: usize, c: &RatFunc) -> Result<Self> {
        Self::new(OperatorKind::Dnc, n, RatFunc::zero(), c.clone())
    }

    pub fn dn_1(n: usize) -> Result<Self> {
        Self::new(OperatorKind::Dn1, n, RatFunc::zero(), RatFunc::zero())
    }

    pub fn dn_bc(n: usize, b: &RatFunc, c: &RatFunc) -> Result<Self> {
        Self::new(OperatorKind::Dnbc, n, b.clone(), c.clone())
    }

    pub fn cal_e(n: usize) -> Result<Self> {
        Self::new(OperatorKind::CalE, n, RatFunc::zero(), RatFunc::zero())
    }

    pub fn cal_d1(n: usize, b: &RatFunc) -> Result<Self> {
        Self::new(OperatorKind::CalD1, n, b.clone(), RatFunc::zero())
    }

    pub fn kind(&self) -> OperatorKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The operator as `sum coefficient * prod_i T_{q, x_i}^{shift_i}`,
    /// terms with equal shifts merged.
    pub fn terms(&self) -> Result<BTreeMap<Vec<i32>, RatFunc>> {
        let n = self.n;
        let t = RatFunc::t();
        let tinv = RatFunc::qt(0, -1);
        let qinv = RatFunc::qt(-1, 0);
        let mut out: BTreeMap<Vec<i32>, RatFunc> = BTreeMap::new();
        let mut push = |shift: Vec<i32>, c: RatFunc| {
            let e = out.entry(shift).or_insert_with(RatFunc::zero);
            *e = e.add(&c);
        };
        match self.kind {
            OperatorKind::Dnc | OperatorKind::Dnbc => {
                for mask in 0u32..(1 << n) {
                    let set: Vec<bool> = (0..n).map(|i| mask & (1 << i) != 0).collect();
                    let k = mask.count_ones() as i32;
                    let mut coef = cross_factor(&set, &t)?.mul(&RatFunc::qt(0, k * (k - 1) / 2));
                    if self.kind == OperatorKind::Dnc {
                        coef = coef.mul(&self.c.neg().pow(k)?);
                    } else {
                        if k % 2 == 1 {
                            coef = coef.neg();
                        }
                        let bt = self.b.mul(&RatFunc::qt(0, 1 - n as i32));
                        for (i, &inside) in set.iter().enumerate() {
                            let f = if inside {
                                self.c.sub(&bt.mul(&x(i + 1)))
                            } else {
                                RatFunc::one_minus(&self.b.mul(&x(i + 1)))
                            };
                            coef = coef.mul(&f);
                        }
                    }
                    push(set.iter().map(|&s| s as i32).collect(), coef);
                }
            }
            OperatorKind::Dn1 => {
                for i in 0..n {
                    let a = cross_factor(&single(n, i), &t)?;
                    push(single(n, i).iter().map(|&s| s as i32).collect(), a);
                }
            }
            OperatorKind::CalE | OperatorKind::CalD1 => {
                for i in 0..n {
                    let a = cross_factor(&single(n, i), &tinv)?;
                    let shift: Vec<i32> = single(n, i).iter().map(|&s| -(s as i32)).collect();
                    if self.kind == OperatorKind::CalE {
                        let xa = a.mul(&x(i + 1));
                        push(shift, xa.clone());
                        push(vec![0; n], xa.neg());
                    } else {
                        let bx = self.b.mul(&x(i + 1)).mul(&qinv);
                        push(shift, a.mul(&RatFunc::one_minus(&bx)));
                        push(vec![0; n], a.mul(&bx));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `op f`. The cross factors have denominators `x_i - x_j`; for symmetric
    /// `f` these cancel, and any that survive are reported as an error.
    pub fn apply(&self, f: &RatFunc) -> Result<RatFunc> {
        let mut parts = Vec::new();
        for (shift, coef) in self.terms()? {
            if coef.is_zero() {
                continue;
            }
            let mut g = f.clone();
            for (i, &k) in shift.iter().enumerate() {
                if k != 0 {
                    g = qshift(&g, i + 1, k)?;
                }
            }
            parts.push(coef.mul(&g));
        }
        let out = RatFunc::sum(parts.iter());
        self.assert_exact(&out)?;
        Ok(out)
    }

    fn assert_exact(&self, f: &RatFunc) -> Result<()> {
        if f.is_zero() {
            return Ok(());
        }
        let (_, den) = f.reduced();
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                let diff = Poly::var(Symbol::letter(i)).sub(&Poly::var(Symbol::letter(j)));
                if den.div_exact(&diff).is_some() {
                    return Err(Error::InexactDivision(format!(
                        "x{i} - x{j} survives in the denominator; input not symmetric?"
                    )));
                }
            }
        }
        Ok(())
    }
}

fn letters(n: usize) -> Vec<RatFunc> {
    (1..=n).map(x).collect()
}

/// `prod_i (1 - c q^{lambda_i} t^{n-i})`.
pub fn macdonald_eigenvalue(lam: &Partition, n: usize, c: &RatFunc) -> RatFunc {
    let mut acc = RatFunc::one();
    for i in 1..=n {
        acc = acc.mul(&RatFunc::one_minus(&c.mul(&RatFunc::qt(lam.part(i) as i32, (n - i) as i32))));
    }
    acc
}

/// `D_n(c) P_lambda = P_lambda prod (1 - c q^{lambda_i} t^{n-i})`.
pub fn check_macdonald_operator(lam: &Partition, n: usize, c: &RatFunc) -> Result<bool> {
    let p = macdonald_p(lam, n).to_ratfunc();
    let lhs = DiffOperator::dn_c(n, c)?.apply(&p)?;
    Ok(lhs == p.mul(&macdonald_eigenvalue(lam, n, c)))
}

/// `D_n^1 P_lambda = P_lambda sum q^{lambda_i} t^{n-i}`.
pub fn check_first_operator(lam: &Partition, n: usize) -> Result<bool> {
    let p = macdonald_p(lam, n).to_ratfunc();
    let ev: Vec<RatFunc> = (1..=n).map(|i| RatFunc::qt(lam.part(i) as i32, (n - i) as i32)).collect();
    Ok(DiffOperator::dn_1(n)?.apply(&p)? == p.mul(&RatFunc::sum(ev.iter())))
}

/// `D_n(b, c) R_lambda(X; b) = R_lambda(X; bq) prod (1 - c q^{lambda_i} t^{n-i})`.
pub fn check_dn_bc_eigen(lam: &Partition, n: usize, b: &RatFunc, c: &RatFunc) -> Result<bool> {
    let xs = letters(n);
    let r = r_exact(lam, &xs, b)?;
    let lhs = DiffOperator::dn_bc(n, b, c)?.apply(&r)?;
    let rhs = r_exact(lam, &xs, &b.mul(&RatFunc::q()))?.mul(&macdonald_eigenvalue(lam, n, c));
    Ok(lhs == rhs)
}

/// `D_n^1(b) R_lambda(X; b) = omega_lambda R_lambda(X; b)`.
pub fn check_cal_d_eigen(lam: &Partition, n: usize, b: &RatFunc) -> Result<bool> {
    let r = r_exact(lam, &letters(n), b)?;
    let lhs = DiffOperator::cal_d1(n, b)?.apply(&r)?;
    Ok(lhs == r.mul(&omega(lam, n)?))
}

/// Right-hand side of the expansion of `D_n(b, c) P_mu` over vertical strips:
/// `sum (-b)^{|lambda-mu|} P_lambda psi'_{lambda/mu} prod_{lambda_i = mu_i}(1 - c q^{lambda_i} t^{n-i})
/// prod_{lambda_i != mu_i}(1 - q^{mu_i} t^{1-i})`.
pub fn dn_bc_on_p_expansion(mu: &Partition, n: usize, b: &RatFunc, c: &RatFunc) -> Result<RatFunc> {
    let mut terms = Vec::new();
    for k in 0..=n as u32 {
        for lam in partitions_of(mu.weight() + k, n) {
            let Ok(pp) = psi_prime(&lam, mu) else { continue };
            let mut coef = b.neg().pow(k as i32)?.mul(&pp);
            for i in 1..=n {
                let f = if lam.part(i) == mu.part(i) {
                    RatFunc::one_minus(&c.mul(&RatFunc::qt(lam.part(i) as i32, (n - i) as i32)))
                } else {
                    RatFunc::one_minus(&RatFunc::qt(mu.part(i) as i32, 1 - i as i32))
                };
                coef = coef.mul(&f);
            }
            terms.push(coef.mul(&macdonald_p(&lam, n).to_ratfunc()));
        }
    }
    Ok(RatFunc::sum(terms.iter()))
}

/// Checks the expansion of `D_n(b, c) P_mu` against direct application.
pub fn check_dn_bc_on_p(mu: &Partition, n: usize, b: &RatFunc, c: &RatFunc) -> Result<bool> {
    let p = macdonald_p(mu, n).to_ratfunc();
    let lhs = DiffOperator::dn_bc(n, b, c)?.apply(&p)?;
    Ok(lhs == dn_bc_on_p_expansion(mu, n, b, c)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_ratfunc;

    fn r(s: &str) -> RatFunc {
        parse_ratfunc(s).unwrap()
    }

    #[test]
    fn shifts() {
        assert_eq!(qshift(&r("x1+x2"), 1, 1).unwrap(), r("q*x1+x2"));
        assert_eq!(qshift(&r("1/(1-b*x1)"), 1, 1).unwrap(), r("1/(1-b*q*x1)"));
        let f = r("x1^2/(1-b*x1*x2)");
        assert_eq!(qshift(&qshift(&f, 1, 1).unwrap(), 1, -1).unwrap(), f);
    }

    #[test]
    fn small_actions() {
        let d = DiffOperator::dn_1(2).unwrap();
        assert_eq!(d.apply(&r("x1+x2")).unwrap(), r("(q*t+1)*(x1+x2)"));
        let d = DiffOperator::dn_bc(1, &r("b"), &r("c")).unwrap();
        assert_eq!(d.apply(&RatFunc::one()).unwrap(), r("1-c"));
        let d = DiffOperator::cal_d1(1, &r("b")).unwrap();
        let f = r("x1/(1-b*x1)");
        assert_eq!(d.apply(&f).unwrap(), f.mul(&r("1/q")));
        assert!(DiffOperator::dn_1(2).unwrap().apply(&r("x1")).is_err());
        assert!(DiffOperator::dn_1(5).is_err());
    }
}

//! The concrete branching families `M`, `O`, `R(a,b)` and `R(b)`, with the
//! closed forms, specialisations and lemmas of `R_lambda(X;b)`.

use crate::error::{Error, Result};
use crate::macdonald::branch::{hat_factor, skew_p_letter, BranchRule, Brancher, SeriesBrancher};
use crate::macdonald::lambda_ring::skew_p_diff;
use crate::macdonald::qbinom::qbinom_skewq;
use crate::macdonald::symfunc::{det, macdonald_p, vandermonde};
use crate::partitions::{
    c_lambda, c_prime, composition_orbit, gen_poch, gen_poch_skew, one_poch_skew, partitions_of, subpartitions,
    Partition,
};
use crate::ring::{qpoch, Mono, RatFunc, Symbol, TruncSeries};

/// `M_lambda(x; a, b)`: `z^{|lambda-mu|} (a/z)_lambda/(a/z)_mu P_{lambda/mu}[(1-b)/(1-t)]`,
/// parameters `(a, b) -> (a/b, b)`.
pub struct MRule;

impl BranchRule for MRule {
    fn name(&self) -> &'static str {
        "M"
    }

    fn coefficient(&self, lam: &Partition, mu: &Partition, z: &RatFunc, params: &[RatFunc]) -> Result<RatFunc> {
        let (a, b) = (&params[0], &params[1]);
        let p = skew_p_diff(lam, mu, &RatFunc::one(), b)?;
        if p.is_zero() {
            return Ok(p);
        }
        let az = a.div(z)?;
        Ok(z.pow((lam.weight() - mu.weight()) as i32)?
            .mul(&gen_poch_skew(&az, lam, mu))
            .mul(&p))
    }

    fn next_params(&self, params: &[RatFunc]) -> Vec<RatFunc> {
        vec![params[0].div(&params[1]).expect("b nonzero"), params[1].clone()]
    }

    fn predecessors(&self, lam: &Partition) -> Vec<Partition> {
        subpartitions(lam)
    }
}

/// `O_lambda(x; a, b)`: `(a/z, bz)_lambda/(a/z, bz)_mu P_{lambda/mu}(1/b)`,
/// parameters `(a, b) -> (a/t, b/t)`.
pub struct ORule;

impl BranchRule for ORule {
    fn name(&self) -> &'static str {
        "O"
    }

    fn coefficient(&self, lam: &Partition, mu: &Partition, z: &RatFunc, params: &[RatFunc]) -> Result<RatFunc> {
        let (a, b) = (&params[0], &params[1]);
        let p = skew_p_letter(lam, mu, &b.inv()?)?;
        if p.is_zero() {
            return Ok(p);
        }
        Ok(gen_poch_skew(&a.div(z)?, lam, mu)
            .mul(&gen_poch_skew(&b.mul(z), lam, mu))
            .mul(&p))
    }

    fn next_params(&self, params: &[RatFunc]) -> Vec<RatFunc> {
        let tinv = RatFunc::qt(0, -1);
        vec![params[0].mul(&tinv), params[1].mul(&tinv)]
    }
}

/// `R_lambda(x; a, b)`: `(z/a)_lambda (bz/t)_mu / ((z/a)_mu (bz)_lambda) P_{lambda/mu}(a)`,
/// parameters `(a, b) -> (at, b)`.
pub struct RabRule;

impl BranchRule for RabRule {
    fn name(&self) -> &'static str {
        "Rab"
    }

    fn coefficient(&self, lam: &Partition, mu: &Partition, z: &RatFunc, params: &[RatFunc]) -> Result<RatFunc> {
        let (a, b) = (&params[0], &params[1]);
        let p = skew_p_letter(lam, mu, a)?;
        if p.is_zero() {
            return Ok(p);
        }
        let bz = b.mul(z);
        Ok(gen_poch_skew(&z.div(a)?, lam, mu)
            .mul(&gen_poch(&bz.mul(&RatFunc::qt(0, -1)), mu))
            .div(&gen_poch(&bz, lam))?
            .mul(&p))
    }

    fn next_params(&self, params: &[RatFunc]) -> Vec<RatFunc> {
        vec![params[0].mul(&RatFunc::t()), params[1].clone()]
    }
}

/// `R_lambda(X; b)`: `(bz/t)_mu/(bz)_lambda P_{lambda/mu}(z)`; the normalised
/// version uses `P-hat_{lambda/mu}(z)` and produces `R-hat_lambda`.
pub struct RRule {
    pub normalized: bool,
}

impl BranchRule for RRule {
    fn name(&self) -> &'static str {
        if self.normalized {
            "R-normalized"
        } else {
            "R"
        }
    }

    fn coefficient(&self, lam: &Partition, mu: &Partition, z: &RatFunc, params: &[RatFunc]) -> Result<RatFunc> {
        let mut p = skew_p_letter(lam, mu, z)?;
        if p.is_zero() {
            return Ok(p);
        }
        if self.normalized {
            p = p.mul(&hat_factor(lam, mu));
        }
        let bz = params[0].mul(z);
        Ok(gen_poch(&bz.mul(&RatFunc::qt(0, -1)), mu)
            .div(&gen_poch(&bz, lam))?
            .mul(&p))
    }

    fn graded(&self) -> bool {
        true
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    M,
    O,
    Rab,
    R,
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        match s {
            "M" => Ok(Family::M),
            "O" => Ok(Family::O),
            "Rab" => Ok(Family::Rab),
            "R" => Ok(Family::R),
            other => Err(Error::Parse(format!("unknown family `{other}`"))),
        }
    }
}

impl Family {
    pub fn rule(self) -> &'static dyn BranchRule {
        match self {
            Family::M => &MRule,
            Family::O => &ORule,
            Family::Rab => &RabRule,
            Family::R => &RRule { normalized: false },
        }
    }

    /// Names of the parameters, in order.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Family::M | Family::O | Family::Rab => &["a", "b"],
            Family::R => &["b"],
        }
    }
}

/// Value of a family at the given letter values.
pub fn family_value(family: Family, lam: &Partition, letters: &[RatFunc], params: &[RatFunc]) -> Result<RatFunc> {
    if params.len() != family.param_names().len() {
        return Err(Error::Precondition(format!(
            "family {family:?} takes {} parameters",
            family.param_names().len()
        )));
    }
    if family == Family::O && params[1].is_zero() {
        return Err(Error::Precondition("family O needs b != 0".into()));
    }
    Brancher::new(family.rule(), Partition::empty(), letters.to_vec(), params).value(lam)
}

pub fn family_m(lam: &Partition, letters: &[RatFunc], a: &RatFunc, b: &RatFunc) -> Result<RatFunc> {
    family_value(Family::M, lam, letters, &[a.clone(), b.clone()])
}

pub fn family_o(lam: &Partition, letters: &[RatFunc], a: &RatFunc, b: &RatFunc) -> Result<RatFunc> {
    family_value(Family::O, lam, letters, &[a.clone(), b.clone()])
}

pub fn family_rab(lam: &Partition, letters: &[RatFunc], a: &RatFunc, b: &RatFunc) -> Result<RatFunc> {
    family_value(Family::Rab, lam, letters, &[a.clone(), b.clone()])
}

/// Interpolation Macdonald polynomial: `M` at `(a, b) = (t^{n-1}, t)`.
pub fn interpolation_m(lam: &Partition, letters: &[RatFunc]) -> Result<RatFunc> {
    let n = letters.len() as i32;
    family_m(lam, letters, &RatFunc::qt(0, (n - 1).max(0)), &RatFunc::t())
}

/// `R_lambda(X; b)` by branching.
pub fn r_exact(lam: &Partition, letters: &[RatFunc], b: &RatFunc) -> Result<RatFunc> {
    Brancher::new(&RRule { normalized: false }, Partition::empty(), letters.to_vec(), &[b.clone()]).value(lam)
}

/// `R-hat_lambda = t^{n(lambda)} R_lambda / c'_lambda`.
pub fn r_norm(lam: &Partition, letters: &[RatFunc], b: &RatFunc) -> Result<RatFunc> {
    r_norm_skew(lam, &Partition::empty(), letters, b)
}

/// Skew `R-hat_{lambda/mu}(X; b)` with `R-hat_{lambda/mu}(-; b) = delta`.
pub fn r_norm_skew(lam: &Partition, mu: &Partition, letters: &[RatFunc], b: &RatFunc) -> Result<RatFunc> {
    Brancher::new(&RRule { normalized: true }, mu.clone(), letters.to_vec(), &[b.clone()]).value(lam)
}

/// Expansion of `R_lambda(X; b)` up to total letter degree `cutoff`.
pub fn r_series(lam: &Partition, letters: &[Symbol], b: &RatFunc, cutoff: u32) -> Result<TruncSeries> {
    SeriesBrancher::new(&RRule { normalized: false }, Partition::empty(), letters.to_vec(), &[b.clone()], cutoff)
        .value(lam)
}

/// Expansion of `R-hat_{lambda/mu}(X; b)` up to total letter degree `cutoff`.
pub fn r_norm_skew_series(
    lam: &Partition,
    mu: &Partition,
    letters: &[Symbol],
    b: &RatFunc,
    cutoff: u32,
) -> Result<TruncSeries> {
    SeriesBrancher::new(&RRule { normalized: true }, mu.clone(), letters.to_vec(), &[b.clone()], cutoff).value(lam)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    /// `t = q`: `det(x_i^{lambda_j+n-j} / (b x_i)_{lambda_j-j+1}) / Delta(x)`.
    TEqualsQ,
    /// `t = 1`: sum over rearrangements `u` of `lambda` of `prod x_i^{u_i}/(b x_i)_{u_i}`.
    TEqualsOne,
}

/// Closed forms of `R_lambda(x1..xn; b)` at `t = q` and `t = 1`.
pub fn r_closed(lam: &Partition, n: usize, b: &RatFunc, which: ClosedForm) -> Result<RatFunc> {
    if lam.len() > n {
        return Ok(RatFunc::zero());
    }
    let xs: Vec<RatFunc> = (1..=n).map(|i| RatFunc::var(Symbol::letter(i))).collect();
    match which {
        ClosedForm::TEqualsQ => {
            let mut m = Vec::with_capacity(n);
            for x in &xs {
                let mut row = Vec::with_capacity(n);
                for j in 1..=n {
                    let e = lam.part(j) as i64 + (n - j) as i64;
                    let k = lam.part(j) as i64 - j as i64 + 1;
                    row.push(x.pow(e as i32)?.div(&qpoch(&b.mul(x), k)?)?);
                }
                m.push(row);
            }
            det(&m).div(&RatFunc::from_poly(&vandermonde(n)))
        }
        ClosedForm::TEqualsOne => {
            let mut terms = Vec::new();
            for u in composition_orbit(lam, n) {
                let mut term = RatFunc::one();
                for (x, &ui) in xs.iter().zip(&u) {
                    term = term.mul(&x.pow(ui as i32)?.div(&qpoch(&b.mul(x), ui as i64)?)?);
                }
                terms.push(term);
            }
            Ok(RatFunc::sum(terms.iter()))
        }
    }
}

/// `<lambda> = (q^{lambda_1} t^{n-1}, ..., q^{lambda_n})`.
pub fn spec_point(lam: &Partition, n: usize) -> Vec<RatFunc> {
    (1..=n).map(|i| RatFunc::qt(lam.part(i) as i32, (n - i) as i32)).collect()
}

/// `P_lambda(<0>) = t^{n(lambda)} (t^n)_lambda / c_lambda`.
pub fn p_principal(lam: &Partition, n: usize) -> RatFunc {
    RatFunc::qt(0, lam.n() as i32)
        .mul(&gen_poch(&RatFunc::qt(0, n as i32), lam))
        .div(&c_lambda(lam))
        .expect("c nonzero")
}

/// `R_lambda(a<0>; b) = a^{|lambda|} P_lambda(<0>) / (a b t^{n-1})_lambda`.
pub fn r_principal(lam: &Partition, n: usize, b: &RatFunc, a: Option<&RatFunc>) -> Result<RatFunc> {
    if lam.len() > n {
        return Err(Error::Precondition(format!("l({lam}) > n = {n}")));
    }
    let one = RatFunc::one();
    let a = a.unwrap_or(&one);
    let base = a.mul(b).mul(&RatFunc::qt(0, n as i32 - 1));
    a.pow(lam.weight() as i32)?
        .mul(&p_principal(lam, n))
        .div(&gen_poch(&base, lam))
}

/// Lemma: `R_lambda(cX; b) = c^{|lambda|} R_lambda(X; bc)`, with symbolic `c`.
pub fn lemma_scale(lam: &Partition, n: usize, b: &RatFunc) -> Result<bool> {
    let c = RatFunc::sym("c");
    let xs = letters(n);
    let scaled: Vec<RatFunc> = xs.iter().map(|x| x.mul(&c)).collect();
    let lhs = r_exact(lam, &scaled, b)?;
    let rhs = c.pow(lam.weight() as i32)?.mul(&r_exact(lam, &xs, &b.mul(&c))?);
    Ok(lhs == rhs)
}

/// The `c -> infinity` value of `R_lambda(cX; b)`.
pub fn r_limit(lam: &Partition, n: usize, b: &RatFunc) -> Result<RatFunc> {
    let c = Symbol::var("c");
    let scaled: Vec<RatFunc> = letters(n).iter().map(|x| x.mul(&RatFunc::var(c))).collect();
    r_exact(lam, &scaled, b)?.limit_at_infinity(c)
}

/// Lemma: the limit equals `(-t^{1-n}/b)^{|lambda|} q^{-n(lambda')} t^{n(lambda)} P_lambda(<0>)`.
pub fn lemma_limit(lam: &Partition, n: usize, b: &RatFunc) -> Result<bool> {
    let w = lam.weight() as i32;
    let base = RatFunc::qt(0, 1 - n as i32).div(b)?.neg();
    let expect = base
        .pow(w)?
        .mul(&RatFunc::qt(-(lam.conjugate().n() as i32), lam.n() as i32))
        .mul(&p_principal(lam, n));
    Ok(r_limit(lam, n, b)? == expect)
}

/// Lemma: for `l(lambda) = n`, `R_lambda(X; b) = R_{lambda - 1^n}(X; bq) prod x/(1-bx)`.
pub fn lemma_reduce(lam: &Partition, b: &RatFunc) -> Result<bool> {
    let n = lam.len();
    if n == 0 {
        return Err(Error::Precondition("needs l(lambda) >= 1".into()));
    }
    let xs = letters(n);
    let lower = lam.minus_columns(1);
    let mut rhs = r_exact(&lower, &xs, &b.mul(&RatFunc::q()))?;
    for x in &xs {
        rhs = rhs.mul(x).div(&RatFunc::one_minus(&b.mul(x)))?;
    }
    Ok(r_exact(lam, &xs, b)? == rhs)
}

/// `R_lambda(a<mu>; b) / R_lambda(a<0>; b)`.
pub fn eval_ratio(lam: &Partition, mu: &Partition, n: usize, a: &RatFunc, b: &RatFunc) -> Result<RatFunc> {
    let at = |pt: Vec<RatFunc>| -> Vec<RatFunc> { pt.iter().map(|v| v.mul(a)).collect() };
    let top = r_exact(lam, &at(spec_point(mu, n)), b)?;
    top.div(&r_principal(lam, n, b, Some(a))?)
}

/// Evaluation symmetry `R_lambda(a<mu>)/R_lambda(a<0>) = R_mu(a<lambda>)/R_mu(a<0>)`.
pub fn eval_symmetry(lam: &Partition, mu: &Partition, n: usize, a: &RatFunc, b: &RatFunc) -> Result<bool> {
    if lam.len() > n || mu.len() > n {
        return Err(Error::Precondition("partitions longer than n".into()));
    }
    Ok(eval_ratio(lam, mu, n, a, b)? == eval_ratio(mu, lam, n, a, b)?)
}

fn invert_qt(f: &RatFunc) -> Result<RatFunc> {
    f.substitute(&[(Symbol::q(), RatFunc::qt(-1, 0)), (Symbol::t(), RatFunc::qt(0, -1))])
}

/// `M_kappa(1/x1..1/xn; 1/q, 1/t)` for the interpolation polynomials.
pub fn interpolation_m_inverted(kappa: &Partition, n: usize) -> Result<RatFunc> {
    let m = interpolation_m(kappa, &letters(n))?;
    let mut binds = vec![(Symbol::q(), RatFunc::qt(-1, 0)), (Symbol::t(), RatFunc::qt(0, -1))];
    for i in 1..=n {
        binds.push((Symbol::letter(i), RatFunc::var_pow(Symbol::letter(i), -1)));
    }
    m.substitute(&binds)
}

/// `R_lambda(X; q^{1-m}) = M_{m^n - lambda}(1/X; 1/q, 1/t) / M_{m^n}(1/X; 1/q, 1/t)`,
/// together with `M_{m^n}(1/X; 1/q, 1/t) = prod x^{-m} (x; 1/q)_m`.
pub fn interpolation_link(lam: &Partition, m: u32, n: usize) -> Result<bool> {
    if lam.len() > n || lam.part(1) > m {
        return Err(Error::Precondition(format!("need l({lam}) <= {n} and parts <= {m}")));
    }
    let comp: Vec<u32> = (1..=n).rev().map(|i| m - lam.part(i)).collect();
    let comp = Partition::new(comp)?;
    let full = Partition::new(vec![m; n])?;
    let den = interpolation_m_inverted(&full, n)?;
    let mut closed = RatFunc::one();
    for x in letters(n) {
        closed = closed.mul(&x.pow(-(m as i32))?).mul(&qpoch(&x, m as i64)?);
    }
    let closed = invert_qt(&closed)?;
    if den != closed {
        return Ok(false);
    }
    let lhs = r_exact(lam, &letters(n), &RatFunc::qt(1 - m as i32, 0))?;
    Ok(lhs == interpolation_m_inverted(&comp, n)?.div(&den)?)
}

fn letters(n: usize) -> Vec<RatFunc> {
    (1..=n).map(|i| RatFunc::var(Symbol::letter(i))).collect()
}

/// Scale factor `t^{n(lambda)} / c'_lambda` between `R` and `R-hat`.
pub fn norm_factor(lam: &Partition) -> RatFunc {
    RatFunc::qt(0, lam.n() as i32).div(&c_prime(lam)).expect("c' nonzero")
}

/// `[b^r] R-hat_mu(X; b)` for `r = 0..=order`, read off the branching definition.
pub fn b_taylor_exact(mu: &Partition, n: usize, order: u32) -> Result<Vec<RatFunc>> {
    let b = Symbol::var("b");
    let r = r_norm(mu, &letters(n), &RatFunc::var(b))?;
    let s = TruncSeries::from_ratfunc(&r, &[b], order)?;
    Ok((0..=order).map(|k| s.coefficient(&Mono::var(b, k as i32))).collect())
}

/// The Taylor coefficients predicted by
/// `R-hat_mu(X; b) = sum_{lambda ⊇ mu} b^{|lambda-mu|} (1)_{lambda/mu} [lambda; mu] P-hat_lambda(X)`.
pub fn b_taylor_predicted(mu: &Partition, n: usize, order: u32) -> Result<Vec<RatFunc>> {
    let mut out = Vec::with_capacity(order as usize + 1);
    for r in 0..=order {
        let mut terms = Vec::new();
        for lam in partitions_of(mu.weight() + r, n) {
            if !lam.contains(mu) {
                continue;
            }
            let c = one_poch_skew(&lam, mu)?.mul(&qbinom_skewq(&lam, mu)?);
            if c.is_zero() {
                continue;
            }
            terms.push(c.mul(&norm_factor(&lam)).mul(&macdonald_p(&lam, n).to_ratfunc()));
        }
        out.push(RatFunc::sum(terms.iter()));
    }
    Ok(out)
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
    fn one_letter_values() {
        let z = [r("x1")];
        let (a, b) = (r("a"), r("b"));
        assert_eq!(r_exact(&p(&[3]), &z, &b).unwrap(), r("x1^3/((1-b*x1)*(1-b*q*x1)*(1-b*q^2*x1))"));
        assert_eq!(family_o(&p(&[1]), &z, &a, &b).unwrap(), r("(1-a/x1)*(1-b*x1)/b"));
        assert_eq!(family_rab(&p(&[1]), &z, &a, &b).unwrap(), r("a*(1-x1/a)/(1-b*x1)"));
        assert_eq!(r_norm(&p(&[1]), &z, &b).unwrap(), r("x1/((1-q)*(1-b*x1))"));
        for lam in [p(&[1]), p(&[2]), p(&[2, 1]), p(&[1, 1])] {
            let expect = RatFunc::qt(0, lam.n() as i32)
                .mul(&RatFunc::var(Symbol::letter(1)).pow(lam.weight() as i32).unwrap())
                .mul(&gen_poch(&a.div(&z[0]).unwrap(), &lam))
                .mul(&gen_poch(&b, &lam))
                .div(&c_lambda(&lam))
                .unwrap();
            assert_eq!(family_m(&lam, &z, &a, &b).unwrap(), expect, "{lam}");
        }
    }

    #[test]
    fn two_letter_r() {
        let xs = letters(2);
        assert_eq!(
            r_exact(&p(&[1]), &xs, &r("b")).unwrap(),
            r("(x1+x2-b*(1+1/t)*x1*x2)/((1-b*x1)*(1-b*x2))")
        );
        assert_eq!(r_principal(&p(&[1]), 2, &r("b"), None).unwrap(), r("(1+t)/(1-b*t)"));
        let s = r_series(&p(&[1]), &[Symbol::letter(1)], &r("b"), 2).unwrap();
        assert!(s.equals(&TruncSeries::from_ratfunc(&r("x1+b*x1^2"), &[Symbol::letter(1)], 2).unwrap()));
    }

    #[test]
    fn closed_forms_small() {
        let b = r("b");
        assert_eq!(r_closed(&p(&[1]), 2, &b, ClosedForm::TEqualsOne).unwrap(), r("x1/(1-b*x1)+x2/(1-b*x2)"));
        assert_eq!(r_closed(&p(&[2]), 1, &b, ClosedForm::TEqualsQ).unwrap(), r("x1^2/((1-b*x1)*(1-b*q*x1))"));
    }

    #[test]
    fn lemmas_small() {
        let b = r("b");
        assert!(lemma_scale(&p(&[1]), 1, &b).unwrap());
        assert!(lemma_limit(&p(&[1]), 1, &b).unwrap());
        assert_eq!(r_limit(&p(&[1]), 1, &b).unwrap(), r("-1/b"));
        assert!(lemma_reduce(&p(&[2, 1]), &b).unwrap());
        assert!(eval_symmetry(&p(&[1]), &p(&[]), 2, &r("a"), &b).unwrap());
    }
}

//! The catalog entries.

use crate::error::Result;
use crate::families::{b_taylor_exact, b_taylor_predicted, norm_factor, r_exact, r_principal, MRule, ORule, RabRule};
use crate::macdonald::branch::{skew_phat_letter, BranchRule};
use crate::macdonald::lambda_ring::{skew_p_diff, skew_q_diff};
use crate::macdonald::qbinom::qbinom_skewq;
use crate::macdonald::symfunc::macdonald_p;
use crate::operators::{dn_bc_on_p_expansion, macdonald_eigenvalue, DiffOperator};
use crate::partitions::{gen_poch, gen_poch_many, gen_poch_skew, omega, partitions_up_to, subpartitions, Partition};
use crate::ring::{qpoch, RatFunc, Symbol, TruncSeries};

use super::series::{alphabet, alphabet_product, hyperseries, inf_product, p_hat, r_hat, subsets, supersets};
use super::{exact_witness, series_witness, Config, Ctx, Entry, Witness};

type Found = Result<Option<Witness>>;

macro_rules! bail_on {
    ($w:expr) => {
        if let Some(w) = $w {
            return Ok(Some(w));
        }
    };
}

pub(super) static CATALOG: &[Entry] = &[
    Entry {
        id: "suf-symmetry",
        title: "two-step branching sums are symmetric in the two letters (M, O and R(a,b) rules)",
        params: &["a", "b"],
        default: Config::new(2, 0, 3),
        note: None,
        run: suf_symmetry,
    },
    Entry {
        id: "skew-cauchy-macdonald",
        title: "skew Cauchy identity at the difference alphabet (a-c)/(1-t), and the q-binomial theorem",
        params: &["a", "c"],
        default: Config::new(2, 3, 2),
        note: None,
        run: skew_cauchy_macdonald,
    },
    Entry {
        id: "pieri-macdonald",
        title: "P-hat_mu prod (bx)/(ax) expanded in P-hat_lambda",
        params: &["a", "b"],
        default: Config::new(2, 3, 2),
        note: None,
        run: pieri_macdonald,
    },
    Entry {
        id: "skew-cauchy-R",
        title: "skew Cauchy-type identity for R-hat with ab = cd, and its b = 0 degeneration",
        params: &["a", "b", "c", "d"],
        default: Config::new(2, 3, 2),
        note: None,
        run: skew_cauchy_r,
    },
    Entry {
        id: "pieri-R",
        title: "Pieri formula for R-hat with ab = cd",
        params: &["a", "b", "c", "d"],
        default: Config::new(2, 3, 2),
        note: None,
        run: pieri_r,
    },
    Entry {
        id: "q-binomial-R",
        title: "sum (b)_lambda/(b)_mu [lambda;mu] P-hat_lambda = R-hat_mu prod (bx)/(x), and the b = 0 case",
        params: &["b"],
        default: Config::new(2, 3, 2),
        note: None,
        run: q_binomial_r,
    },
    Entry {
        id: "one-phi-one",
        title: "multivariable 1phi1 summation",
        params: &["b", "c"],
        default: Config::new(2, 3, 2),
        note: None,
        run: one_phi_one,
    },
    Entry {
        id: "q-gauss",
        title: "q-Gauss sum for R-hat, and its principal specialisation",
        params: &["a", "b", "c"],
        default: Config::new(2, 3, 0),
        note: Some("the principal specialisation is checked with normalised P-hat_lambda(<0>)"),
        run: q_gauss,
    },
    Entry {
        id: "b-taylor",
        title: "Taylor coefficients of R-hat_mu(X; b) in b",
        params: &[],
        default: Config::new(2, 3, 2),
        note: None,
        run: b_taylor,
    },
    Entry {
        id: "saalschutz",
        title: "generalised q-Pfaff-Saalschutz sum (exact, all nu ⊆ lambda)",
        params: &["a", "b", "c"],
        default: Config::new(1, 0, 4),
        note: None,
        run: saalschutz,
    },
    Entry {
        id: "sears",
        title: "Sears transformation for skew Macdonald polynomials (exact, all nu ⊆ lambda)",
        params: &["a", "b", "c", "d", "e"],
        default: Config::new(1, 0, 3),
        note: None,
        run: sears,
    },
    Entry {
        id: "propskew",
        title: "skew q-Gauss transformation in the grading c = ab*y1",
        params: &["a", "b"],
        default: Config::new(1, 4, 2),
        note: Some(
            "c/ab is the fresh degree-one letter y1; the left side is multiplied by (c, c/ab)_inf and the \
             right side by (c/a, c/b)_inf before comparing",
        ),
        run: propskew,
    },
    Entry {
        id: "rains-cauchy-terminating",
        title: "terminating Cauchy-type identity at (b, c) = (q^-N, t), N = 1..=degree (exact)",
        params: &["a", "d", "e"],
        default: Config::new(1, 2, 2),
        note: Some("degree plays the role of N"),
        run: rains_terminating,
    },
    Entry {
        id: "ktw",
        title: "q-Kummer-Thomae-Whipple transformation with f = de/bc, and its d = c reduction",
        params: &["a", "b", "c", "d", "e"],
        default: Config::new(2, 3, 2),
        note: None,
        run: ktw,
    },
    Entry {
        id: "heine",
        title: "Heine transformation of 2Phi1",
        params: &["a", "b", "c", "z"],
        default: Config::new(2, 3, 2),
        note: None,
        run: heine,
    },
    Entry {
        id: "dn-bc-eigen",
        title: "D_n(b,c) R_lambda(X;b) = R_lambda(X;bq) prod (1 - c q^lambda_i t^{n-i})",
        params: &["b", "c"],
        default: Config::new(2, 0, 3),
        note: None,
        run: dn_bc_eigen,
    },
    Entry {
        id: "calD-eigen",
        title: "D_n^1(b) R_lambda(X;b) = omega_lambda R_lambda(X;b)",
        params: &["b"],
        default: Config::new(2, 0, 3),
        note: None,
        run: cal_d_eigen,
    },
    Entry {
        id: "dn-bc-on-P",
        title: "expansion of D_n(b,c) P_mu over vertical strips",
        params: &["b", "c"],
        default: Config::new(2, 0, 2),
        note: None,
        run: dn_bc_on_p,
    },
];

fn q_times(x: &RatFunc) -> RatFunc {
    x.mul(&RatFunc::q())
}

fn at2<'a>(tag: &'a str, mu: &'a Partition, nu: &'a Partition) -> impl FnOnce() -> String + 'a {
    move || format!("{tag} mu={mu} nu={nu}")
}

fn at_lambda<'a>(tag: &'a str, lam: &'a Partition) -> impl FnOnce() -> String + 'a {
    move || format!("{tag} lambda={lam}")
}

fn at_mu<'a>(tag: &'a str, mu: &'a Partition) -> impl FnOnce() -> String + 'a {
    move || format!("{tag} mu={mu}")
}

fn small_partitions(w: u32) -> Vec<Partition> {
    partitions_up_to(w, w as usize)
}

fn suf_symmetry(ctx: &Ctx) -> Found {
    let (a, b) = (ctx.param("a"), ctx.param("b"));
    let y = RatFunc::var(Symbol::letter(1));
    let z = RatFunc::var(Symbol::letter(2));
    let rules: [&dyn BranchRule; 3] = [&MRule, &ORule, &RabRule];
    for rule in rules {
        let params = vec![a.clone(), b.clone()];
        let next = rule.next_params(&params);
        // the deliberate error: forget the parameter update on the right
        let next_right = if ctx.mutate() { params.clone() } else { next.clone() };
        for lam in small_partitions(ctx.weight()) {
            for nu in subpartitions(&lam) {
                let side = |u: &RatFunc, v: &RatFunc, inner: &[RatFunc]| -> Result<RatFunc> {
                    let mut terms = Vec::new();
                    for mu in subpartitions(&lam) {
                        if !mu.contains(&nu) {
                            continue;
                        }
                        let outer = rule.coefficient(&lam, &mu, u, &params)?;
                        if outer.is_zero() {
                            continue;
                        }
                        terms.push(outer.mul(&rule.coefficient(&mu, &nu, v, inner)?));
                    }
                    Ok(RatFunc::sum(terms.iter()))
                };
                let l = side(&z, &y, &next)?;
                let r = side(&y, &z, &next_right)?;
                bail_on!(exact_witness(|| format!("{} lambda={lam} nu={nu}", rule.name()), &l, &r));
            }
        }
    }
    Ok(None)
}

/// Both sides of the skew Cauchy identity at `(a-c)/(1-t)` for fixed `(mu, nu)`.
fn skew_cauchy_sides(
    mu: &Partition,
    nu: &Partition,
    a: &RatFunc,
    c: &RatFunc,
    xs: &[Symbol],
    d: u32,
    mutate: bool,
) -> Result<(TruncSeries, TruncSeries)> {
    let mut lhs = TruncSeries::zero(xs, d);
    let mut pl = p_hat(mu, xs, d);
    for lam in supersets(mu, d, mu.len() + xs.len()) {
        if !lam.contains(nu) {
            continue;
        }
        let qv = skew_q_diff(&lam, nu, a, c)?;
        if qv.is_zero() {
            continue;
        }
        lhs = lhs.add(&pl.value(&lam)?.scale(&qv));
    }
    let mut inner = TruncSeries::zero(xs, d);
    for lam in subsets(mu) {
        if !nu.contains(&lam) {
            continue;
        }
        let qv = skew_q_diff(mu, &lam, a, c)?;
        if qv.is_zero() {
            continue;
        }
        // P-hat_{nu/lambda}: branch from lambda
        let mut pnl = p_hat(&lam, xs, d);
        inner = inner.add(&pnl.value(nu)?.scale(&qv));
    }
    let cc = if mutate { q_times(c) } else { c.clone() };
    let rhs = alphabet_product(&[cc], &[a.clone()], xs, d)?.mul(&inner);
    Ok((lhs, rhs))
}

fn skew_cauchy_macdonald(ctx: &Ctx) -> Found {
    let (a, c) = (ctx.param("a"), ctx.param("c"));
    let (xs, d) = (alphabet(ctx.n()), ctx.degree());
    for mu in small_partitions(ctx.weight()) {
        for nu in small_partitions(ctx.weight()) {
            let (l, r) = skew_cauchy_sides(&mu, &nu, &a, &c, &xs, d, ctx.mutate())?;
            bail_on!(series_witness(at2("skew Cauchy", &mu, &nu), &l, &r));
        }
    }
    // q-binomial theorem: sum (a)_lambda P-hat_lambda = prod (ax)/(x)
    let mut l = TruncSeries::zero(&xs, d);
    let mut pl = p_hat(&Partition::empty(), &xs, d);
    for lam in partitions_up_to(d, xs.len()) {
        l = l.add(&pl.value(&lam)?.scale(&gen_poch(&a, &lam)));
    }
    let r = alphabet_product(&[a.clone()], &[RatFunc::one()], &xs, d)?;
    bail_on!(series_witness(|| "q-binomial theorem".into(), &l, &r));
    Ok(None)
}

fn pieri_macdonald(ctx: &Ctx) -> Found {
    let (a, b) = (ctx.param("a"), ctx.param("b"));
    let (xs, d) = (alphabet(ctx.n()), ctx.degree());
    let bb = if ctx.mutate() { q_times(&b) } else { b.clone() };
    let prod = alphabet_product(&[bb], &[a.clone()], &xs, d)?;
    let mut ph = p_hat(&Partition::empty(), &xs, d);
    for mu in partitions_up_to(ctx.weight().min(d), xs.len()) {
        let l = ph.value(&mu)?.mul(&prod);
        let mut r = TruncSeries::zero(&xs, d);
        for lam in supersets(&mu, d - mu.weight(), xs.len()) {
            let qv = skew_q_diff(&lam, &mu, &a, &b)?;
            if !qv.is_zero() {
                r = r.add(&ph.value(&lam)?.scale(&qv));
            }
        }
        bail_on!(series_witness(at_mu("Pieri", &mu), &l, &r));
    }
    Ok(None)
}

/// Parameters `(a, b, c, d)` with `ab = cd`.
fn abcd(ctx: &Ctx) -> Result<(RatFunc, RatFunc, RatFunc, RatFunc)> {
    let (a, b, c) = (ctx.param("a"), ctx.param("b"), ctx.param("c"));
    let d = ctx.derived("d", a.mul(&b).div(&c)?, "ab = cd")?;
    Ok((a, b, c, d))
}

#[allow(clippy::too_many_arguments)]
fn skew_cauchy_r_sides(
    mu: &Partition,
    nu: &Partition,
    (a, b, c, d): (&RatFunc, &RatFunc, &RatFunc, &RatFunc),
    xs: &[Symbol],
    deg: u32,
    mutate: bool,
) -> Result<(TruncSeries, TruncSeries)> {
    let bc = b.div(c)?;
    let bc_left = if mutate { q_times(&bc) } else { bc.clone() };
    let mut lhs = TruncSeries::zero(xs, deg);
    let mut rl = r_hat(mu, xs, b, deg);
    for lam in supersets(mu, deg, mu.len() + xs.len()) {
        if !lam.contains(nu) {
            continue;
        }
        let qv = skew_q_diff(&lam, nu, a, c)?;
        if qv.is_zero() {
            continue;
        }
        let coef = gen_poch_skew(&bc_left, &lam, nu).mul(&qv);
        lhs = lhs.add(&rl.value(&lam)?.scale(&coef));
    }
    let mut inner = TruncSeries::zero(xs, deg);
    for lam in subsets(mu) {
        if !nu.contains(&lam) {
            continue;
        }
        let qv = skew_q_diff(mu, &lam, a, c)?;
        if qv.is_zero() {
            continue;
        }
        let coef = gen_poch_skew(&bc, mu, &lam).mul(&qv);
        let mut rr = r_hat(&lam, xs, d, deg);
        inner = inner.add(&rr.value(nu)?.scale(&coef));
    }
    let prod = alphabet_product(&[c.clone(), d.clone()], &[a.clone(), b.clone()], xs, deg)?;
    Ok((lhs, prod.mul(&inner)))
}

fn skew_cauchy_r(ctx: &Ctx) -> Found {
    let (a, b, c, d) = abcd(ctx)?;
    let (xs, deg) = (alphabet(ctx.n()), ctx.degree());
    let parts = small_partitions(ctx.weight());
    for mu in &parts {
        for nu in &parts {
            let (l, r) = skew_cauchy_r_sides(mu, nu, (&a, &b, &c, &d), &xs, deg, ctx.mutate())?;
            bail_on!(series_witness(at2("skew Cauchy-type", mu, nu), &l, &r));
        }
    }
    // at b = 0 (so d = 0) both sides coincide term by term with the
    // Macdonald skew Cauchy identity
    if !ctx.is_bound("b") && !ctx.is_bound("d") && !ctx.mutate() {
        let zero = RatFunc::zero();
        for mu in &parts {
            for nu in &parts {
                let (l0, r0) = skew_cauchy_r_sides(mu, nu, (&a, &zero, &c, &zero), &xs, deg, false)?;
                let (lm, rm) = skew_cauchy_sides(mu, nu, &a, &c, &xs, deg, false)?;
                bail_on!(series_witness(at2("b=0 left side", mu, nu), &l0, &lm));
                bail_on!(series_witness(at2("b=0 right side", mu, nu), &r0, &rm));
            }
        }
    }
    Ok(None)
}

fn pieri_r(ctx: &Ctx) -> Found {
    let (a, b, c, d) = abcd(ctx)?;
    let (xs, deg) = (alphabet(ctx.n()), ctx.degree());
    let bc = b.div(&c)?;
    let bc = if ctx.mutate() { q_times(&bc) } else { bc };
    let prod = alphabet_product(&[c.clone(), d.clone()], &[a.clone(), b.clone()], &xs, deg)?;
    let mut rd = r_hat(&Partition::empty(), &xs, &d, deg);
    let mut rb = r_hat(&Partition::empty(), &xs, &b, deg);
    for mu in partitions_up_to(ctx.weight().min(deg), xs.len()) {
        let l = rd.value(&mu)?.mul(&prod);
        let mut r = TruncSeries::zero(&xs, deg);
        for lam in supersets(&mu, deg - mu.weight(), xs.len()) {
            let qv = skew_q_diff(&lam, &mu, &a, &c)?;
            if qv.is_zero() {
                continue;
            }
            r = r.add(&rb.value(&lam)?.scale(&gen_poch_skew(&bc, &lam, &mu).mul(&qv)));
        }
        bail_on!(series_witness(at_mu("Pieri", &mu), &l, &r));
    }
    Ok(None)
}

fn q_binomial_r(ctx: &Ctx) -> Found {
    let b = ctx.param("b");
    let (xs, deg) = (alphabet(ctx.n()), ctx.degree());
    let b_left = if ctx.mutate() { q_times(&b) } else { b.clone() };
    let one = [RatFunc::one()];
    let prod = alphabet_product(&[b.clone()], &one, &xs, deg)?;
    let inv = alphabet_product(&[], &one, &xs, deg)?;
    let mut ph = p_hat(&Partition::empty(), &xs, deg);
    let mut rb = r_hat(&Partition::empty(), &xs, &b, deg);
    for mu in partitions_up_to(ctx.weight().min(deg), xs.len()) {
        let mut l = TruncSeries::zero(&xs, deg);
        let mut l0 = TruncSeries::zero(&xs, deg);
        for lam in supersets(&mu, deg - mu.weight(), xs.len()) {
            let qb = qbinom_skewq(&lam, &mu)?;
            if qb.is_zero() {
                continue;
            }
            let p = ph.value(&lam)?;
            l = l.add(&p.scale(&gen_poch_skew(&b_left, &lam, &mu).mul(&qb)));
            l0 = l0.add(&p.scale(&qb));
        }
        let r = rb.value(&mu)?.mul(&prod);
        bail_on!(series_witness(at_mu("q-binomial", &mu), &l, &r));
        let r0 = ph.value(&mu)?.mul(&inv);
        bail_on!(series_witness(at_mu("b=0", &mu), &l0, &r0));
    }
    Ok(None)
}

fn one_phi_one(ctx: &Ctx) -> Found {
    let (b, c) = (ctx.param("b"), ctx.param("c"));
    let (xs, deg) = (alphabet(ctx.n()), ctx.degree());
    let bc = b.div(&c)?;
    let c_pow = if ctx.mutate() { q_times(&c) } else { c.clone() };
    let prod = alphabet_product(&[c.clone()], &[b.clone()], &xs, deg)?;
    let mut ph = p_hat(&Partition::empty(), &xs, deg);
    let mut rb = r_hat(&Partition::empty(), &xs, &b, deg);
    for mu in partitions_up_to(ctx.weight().min(deg), xs.len()) {
        let mut l = TruncSeries::zero(&xs, deg);
        for lam in supersets(&mu, deg - mu.weight(), xs.len()) {
            let qv = skew_q_diff(&lam, &mu, &RatFunc::zero(), &RatFunc::one())?;
            if qv.is_zero() {
                continue;
            }
            let coef = c_pow
                .pow((lam.weight() - mu.weight()) as i32)?
                .mul(&gen_poch_skew(&bc, &lam, &mu))
                .mul(&qv);
            l = l.add(&rb.value(&lam)?.scale(&coef));
        }
        let r = ph.value(&mu)?.mul(&prod);
        bail_on!(series_witness(at_mu("1phi1", &mu), &l, &r));
    }
    Ok(None)
}

fn q_gauss(ctx: &Ctx) -> Found {
    let (a, b, c) = (ctx.param("a"), ctx.param("b"), ctx.param("c"));
    let (n, deg) = (ctx.n(), ctx.degree());
    let xs = alphabet(n);
    let ab = a.mul(&b);
    let z = c.div(&ab)?;
    let uppers = if ctx.mutate() { [a.clone(), a.clone()] } else { [a.clone(), b.clone()] };
    let l = hyperseries(&uppers, &[c.clone()], &z, &xs, deg)?;
    let r = alphabet_product(&[c.div(&a)?, c.div(&b)?], &[c.clone(), z.clone()], &xs, deg)?;
    bail_on!(series_witness(|| "q-Gauss".into(), &l, &r));

    // principal specialisation x_i = s t^{1-i}, with the grading letter s
    let s = Symbol::var("y1");
    let sv = RatFunc::var(s);
    let scale = sv.mul(&RatFunc::qt(0, 1 - n as i32));
    let mut l = TruncSeries::zero(&[s], deg);
    for lam in partitions_up_to(deg, n) {
        let term = z
            .pow(lam.weight() as i32)?
            .mul(&gen_poch_many(&uppers, &lam))
            .mul(&norm_factor(&lam))
            .mul(&r_principal(&lam, n, &c, Some(&scale))?);
        l = l.add(&TruncSeries::from_ratfunc(&term, &[s], deg)?);
    }
    let mut num = Vec::new();
    let mut den = Vec::new();
    for i in 1..=n {
        let ci = c.mul(&sv).mul(&RatFunc::qt(0, 1 - i as i32));
        num.push(ci.div(&a)?);
        num.push(ci.div(&b)?);
        den.push(ci.div(&ab)?);
        den.push(ci);
    }
    let r = inf_product(&num, &den, &[s], deg)?;
    bail_on!(series_witness(|| format!("principal specialisation n={n}"), &l, &r));
    Ok(None)
}

fn b_taylor(ctx: &Ctx) -> Found {
    let (n, order) = (ctx.n(), ctx.degree());
    for mu in partitions_up_to(ctx.weight(), n) {
        let exact = b_taylor_exact(&mu, n, order)?;
        let predicted = b_taylor_predicted(&mu, n, order)?;
        for (r, (e, p)) in exact.iter().zip(&predicted).enumerate() {
            // the deliberate error: b -> bq on the expansion side
            let p = if ctx.mutate() { p.mul(&RatFunc::qt(r as i32, 0)) } else { p.clone() };
            bail_on!(exact_witness(|| format!("[b^{r}] mu={mu}"), e, &p));
        }
    }
    Ok(None)
}

fn saalschutz(ctx: &Ctx) -> Found {
    let (a, b, c) = (ctx.param("a"), ctx.param("b"), ctx.param("c"));
    let c_sum = if ctx.mutate() { q_times(&c) } else { c.clone() };
    for lam in small_partitions(ctx.weight()) {
        for nu in subpartitions(&lam) {
            let mut terms = Vec::new();
            for mu in subpartitions(&lam) {
                if !mu.contains(&nu) {
                    continue;
                }
                let q1 = skew_q_diff(&lam, &mu, &a, &b)?;
                if q1.is_zero() {
                    continue;
                }
                let q2 = skew_q_diff(&mu, &nu, &b, &c)?;
                terms.push(gen_poch(&a, &mu).div(&gen_poch(&c_sum, &mu))?.mul(&q1).mul(&q2));
            }
            let l = RatFunc::sum(terms.iter());
            let r = gen_poch(&a, &nu)
                .mul(&gen_poch(&b, &lam))
                .div(&gen_poch(&b, &nu).mul(&gen_poch(&c, &lam)))?
                .mul(&skew_q_diff(&lam, &nu, &a, &c)?);
            bail_on!(exact_witness(|| format!("lambda={lam} nu={nu}"), &l, &r));
        }
    }
    Ok(None)
}

fn sears(ctx: &Ctx) -> Found {
    let [a, b, c, d, e] = ["a", "b", "c", "d", "e"].map(|s| ctx.param(s));
    let aq = q_times(&a);
    let big = aq.mul(&aq).div(&b.mul(&c).mul(&d).mul(&e))?;
    let one = RatFunc::one();
    // sum_mu (aq/u, aq/v)_{lambda/mu} (w, x)_{mu/nu} P_{lambda/mu}[(1-aq/wx)/(1-t)] P_{mu/nu}[(aq/wx - B)/(1-t)]
    let side = |lam: &Partition, nu: &Partition, u: &RatFunc, v: &RatFunc, w: &RatFunc, x: &RatFunc| -> Result<RatFunc> {
        let (au, av) = (aq.div(u)?, aq.div(v)?);
        let awx = aq.div(&w.mul(x))?;
        let mut terms = Vec::new();
        for mu in subpartitions(lam) {
            if !mu.contains(nu) {
                continue;
            }
            let p1 = skew_p_diff(lam, &mu, &one, &awx)?;
            if p1.is_zero() {
                continue;
            }
            let p2 = skew_p_diff(&mu, nu, &awx, &big)?;
            let coef = gen_poch_skew(&au, lam, &mu)
                .mul(&gen_poch_skew(&av, lam, &mu))
                .mul(&gen_poch_skew(w, &mu, nu))
                .mul(&gen_poch_skew(x, &mu, nu));
            terms.push(coef.mul(&p1).mul(&p2));
        }
        Ok(RatFunc::sum(terms.iter()))
    };
    let d_left = if ctx.mutate() { q_times(&d) } else { d.clone() };
    for lam in small_partitions(ctx.weight()) {
        for nu in subpartitions(&lam) {
            let l = side(&lam, &nu, &b, &c, &d_left, &e)?;
            let r = side(&lam, &nu, &d, &e, &b, &c)?;
            bail_on!(exact_witness(|| format!("lambda={lam} nu={nu}"), &l, &r));
        }
    }
    Ok(None)
}

fn propskew(ctx: &Ctx) -> Found {
    let (a, b) = (ctx.param("a"), ctx.param("b"));
    let u_sym = Symbol::var("y1");
    let u = RatFunc::var(u_sym);
    let letters = [u_sym];
    let deg = ctx.degree();
    let c = a.mul(&b).mul(&u);
    let one = RatFunc::one();
    let tinv = RatFunc::qt(0, -1);
    let cbt = if ctx.mutate() { c.div(&b)? } else { c.div(&b)?.mul(&tinv) };
    let series = |f: &RatFunc| TruncSeries::from_ratfunc(f, &letters, deg);
    let parts = small_partitions(ctx.weight());
    for mu in &parts {
        for nu in &parts {
            let mut l = TruncSeries::zero(&letters, deg);
            for lam in supersets(mu, deg, mu.len() + 1) {
                if !lam.contains(nu) {
                    continue;
                }
                let p = skew_phat_letter(&lam, mu, &u)?;
                if p.is_zero() {
                    continue;
                }
                let term = gen_poch(&a, &lam)
                    .div(&gen_poch(&c, &lam))?
                    .mul(&p)
                    .mul(&skew_q_diff(&lam, nu, &one, &b)?);
                l = l.add(&series(&term)?);
            }
            let mut inner = TruncSeries::zero(&letters, deg);
            for lam in subsets(mu) {
                if !nu.contains(&lam) {
                    continue;
                }
                let p = skew_phat_letter(nu, &lam, &u)?;
                if p.is_zero() {
                    continue;
                }
                let term = gen_poch(&cbt, &lam)
                    .mul(&gen_poch_skew(&a, nu, &lam))
                    .mul(&p)
                    .mul(&skew_q_diff(mu, &lam, &one, &b)?);
                inner = inner.add(&series(&term)?);
            }
            let pref = gen_poch(&a, mu)
                .div(&gen_poch(&c.mul(&tinv), mu))?
                .div(&gen_poch(&c.div(&b)?, nu))?;
            let l = l.mul(&inf_product(&[c.clone(), u.clone()], &[], &letters, deg)?);
            let r = inner
                .mul(&series(&pref)?)
                .mul(&inf_product(&[c.div(&a)?, c.div(&b)?], &[], &letters, deg)?);
            bail_on!(series_witness(at2("skew q-Gauss", mu, nu), &l, &r));
        }
    }
    Ok(None)
}

fn rains_terminating(ctx: &Ctx) -> Found {
    let [a, d, e] = ["a", "d", "e"].map(|s| ctx.param(s));
    let one = RatFunc::one();
    let t = RatFunc::t();
    let parts = small_partitions(ctx.weight());
    for big_n in 1..=ctx.degree().max(1) {
        let qn = RatFunc::qt(-(big_n as i32), 0);
        let f = a.mul(&d).mul(&RatFunc::qt(1 - big_n as i32, 0)).div(&e)?;
        let edt = e.div(&d.mul(&t))?;
        let edt = if ctx.mutate() { edt.mul(&t) } else { edt };
        let z = qpoch(&e.div(&a)?, big_n as i64)?
            .mul(&qpoch(&e.div(&d)?, big_n as i64)?)
            .div(&qpoch(&e, big_n as i64)?.mul(&qpoch(&e.div(&a.mul(&d))?, big_n as i64)?))?;
        for mu in &parts {
            for nu in &parts {
                let mut terms = Vec::new();
                let len = mu.len() + 1;
                for lam in partitions_up_to(big_n * len as u32, len) {
                    if lam.part(1) > big_n || !lam.contains(mu) || !lam.contains(nu) {
                        continue;
                    }
                    let p = skew_phat_letter(&lam, mu, &one)?;
                    if p.is_zero() {
                        continue;
                    }
                    let coef = RatFunc::qt(lam.weight() as i32, 0)
                        .mul(&gen_poch(&a, &lam))
                        .mul(&gen_poch(&qn, &lam))
                        .div(&gen_poch(&e, &lam).mul(&gen_poch(&f, &lam)))?;
                    terms.push(coef.mul(&p).mul(&skew_q_diff(&lam, nu, &one, &d)?));
                }
                let l = RatFunc::sum(terms.iter());

                let mut terms = Vec::new();
                for lam in subsets(nu) {
                    if !mu.contains(&lam) {
                        continue;
                    }
                    let p = skew_phat_letter(nu, &lam, &one)?;
                    if p.is_zero() {
                        continue;
                    }
                    let coef = d
                        .mul(&t)
                        .div(&RatFunc::q())?
                        .pow(lam.weight() as i32)?
                        .mul(&gen_poch(&edt, &lam))
                        .mul(&gen_poch(&f.div(&d.mul(&t))?, &lam))
                        .mul(&gen_poch_skew(&a, nu, &lam))
                        .mul(&gen_poch_skew(&qn, nu, &lam));
                    terms.push(coef.mul(&p).mul(&skew_q_diff(mu, &lam, &one, &d)?));
                }
                let pref_mu = RatFunc::q()
                    .div(&t)?
                    .pow(mu.weight() as i32)?
                    .mul(&gen_poch(&a, mu))
                    .mul(&gen_poch(&qn, mu))
                    .div(&gen_poch(&e.div(&t)?, mu).mul(&gen_poch(&f.div(&t)?, mu)))?;
                let pref_nu = RatFunc::q()
                    .div(&d)?
                    .pow(nu.weight() as i32)?
                    .div(&gen_poch(&e.div(&d)?, nu).mul(&gen_poch(&f.div(&d)?, nu)))?;
                let r = pref_mu.mul(&pref_nu).mul(&z).mul(&RatFunc::sum(terms.iter()));
                bail_on!(exact_witness(|| format!("N={big_n} mu={mu} nu={nu}"), &l, &r));
            }
        }
    }
    Ok(None)
}

fn ktw(ctx: &Ctx) -> Found {
    let [a, b, c, d, e] = ["a", "b", "c", "d", "e"].map(|s| ctx.param(s));
    let f = ctx.derived("f", d.mul(&e).div(&b.mul(&c))?, "f = de/bc")?;
    let (xs, deg) = (alphabet(ctx.n()), ctx.degree());
    let ea = e.div(&a)?;
    let ex_a = if ctx.mutate() { e.clone() } else { ea.clone() };
    let prod = alphabet_product(&[f.clone(), ex_a], &[e.clone(), f.div(&a)?], &xs, deg)?;
    let dc = d.div(&c)?;
    let cfa = c.mul(&f).div(&a)?;

    // the general transformation, for mu of small weight
    let mut re = r_hat(&Partition::empty(), &xs, &e, deg);
    let mut rf = r_hat(&Partition::empty(), &xs, &f, deg);
    for mu in partitions_up_to(ctx.weight().min(deg), xs.len()) {
        let dc_mu = gen_poch(&dc, &mu);
        if dc_mu.is_zero() {
            // d = c: the right side is singular for nonempty mu
            continue;
        }
        let mut l = TruncSeries::zero(&xs, deg);
        let mut r = TruncSeries::zero(&xs, deg);
        for lam in supersets(&mu, deg - mu.weight(), xs.len()) {
            let ql = skew_q_diff(&lam, &mu, &f.div(&a)?, &cfa)?;
            if !ql.is_zero() {
                let coef = gen_poch_many(&[a.clone(), b.clone()], &lam).div(&gen_poch(&d, &lam))?;
                l = l.add(&re.value(&lam)?.scale(&coef.mul(&ql)));
            }
            let qr = skew_q_diff(&lam, &mu, &ea, &cfa)?;
            if !qr.is_zero() {
                let coef = gen_poch_many(&[a.clone(), dc.clone()], &lam).div(&gen_poch(&d, &lam))?;
                r = r.add(&rf.value(&lam)?.scale(&coef.mul(&qr)));
            }
        }
        let pref = gen_poch(&b, &mu).div(&dc_mu)?;
        let r = r.mul(&prod).scale(&pref);
        bail_on!(series_witness(at_mu("transformation", &mu), &l, &r));
    }

    // the 3Phi2 form
    let l = hyperseries(&[a.clone(), b.clone(), c.clone()], &[d.clone(), e.clone()], &f.div(&a)?, &xs, deg)?;
    let r = hyperseries(&[a.clone(), d.div(&b)?, dc.clone()], &[d.clone(), f.clone()], &ea, &xs, deg)?.mul(&prod);
    bail_on!(series_witness(|| "3Phi2".into(), &l, &r));

    // d = c: the left side is a 2Phi1 summed by q-Gauss
    if !ctx.is_bound("d") && !ctx.is_bound("f") {
        let f = e.div(&b)?;
        let l = hyperseries(&[a.clone(), b.clone(), c.clone()], &[c.clone(), e.clone()], &f.div(&a)?, &xs, deg)?;
        let gauss = hyperseries(&[a.clone(), b.clone()], &[e.clone()], &f.div(&a)?, &xs, deg)?;
        bail_on!(series_witness(|| "d=c against 2Phi1".into(), &l, &gauss));
        let ex_a = if ctx.mutate() { e.clone() } else { ea.clone() };
        let prod = alphabet_product(&[f.clone(), ex_a], &[e.clone(), f.div(&a)?], &xs, deg)?;
        bail_on!(series_witness(|| "d=c against the product".into(), &l, &prod));
    }
    Ok(None)
}

fn heine(ctx: &Ctx) -> Found {
    let [a, b, c, z] = ["a", "b", "c", "z"].map(|s| ctx.param(s));
    let (xs, deg) = (alphabet(ctx.n()), ctx.degree());
    let az = a.mul(&z);
    let ca = c.div(&a)?;
    let abzc = a.mul(&b).mul(&z).div(&c)?;
    let az_prod = if ctx.mutate() { z.clone() } else { az.clone() };
    let prod = alphabet_product(&[ca.clone(), az_prod], &[c.clone(), z.clone()], &xs, deg)?;

    let l = hyperseries(&[a.clone(), b.clone()], &[c.clone()], &z, &xs, deg)?;
    let r = hyperseries(&[a.clone(), abzc.clone()], &[az.clone()], &ca, &xs, deg)?.mul(&prod);
    bail_on!(series_witness(|| "2Phi1".into(), &l, &r));

    // with a fixed lower partition mu and [lambda; mu] weights
    let mut rc = r_hat(&Partition::empty(), &xs, &c, deg);
    let mut raz = r_hat(&Partition::empty(), &xs, &az, deg);
    for mu in partitions_up_to(ctx.weight().min(deg), xs.len()) {
        if mu.is_empty() {
            continue;
        }
        let mut l = TruncSeries::zero(&xs, deg);
        let mut r = TruncSeries::zero(&xs, deg);
        for lam in supersets(&mu, deg - mu.weight(), xs.len()) {
            let qb = qbinom_skewq(&lam, &mu)?;
            if qb.is_zero() {
                continue;
            }
            let k = (lam.weight() - mu.weight()) as i32;
            let cl = z
                .pow(k)?
                .mul(&gen_poch_skew(&a, &lam, &mu))
                .mul(&gen_poch_skew(&b, &lam, &mu))
                .mul(&qb);
            l = l.add(&rc.value(&lam)?.scale(&cl));
            let cr = ca
                .pow(k)?
                .mul(&gen_poch_skew(&a, &lam, &mu))
                .mul(&gen_poch_skew(&abzc, &lam, &mu))
                .mul(&qb);
            r = r.add(&raz.value(&lam)?.scale(&cr));
        }
        bail_on!(series_witness(at_mu("skew form", &mu), &l, &r.mul(&prod)));
    }
    Ok(None)
}

fn letter_values(n: usize) -> Vec<RatFunc> {
    (1..=n).map(|i| RatFunc::var(Symbol::letter(i))).collect()
}

fn dn_bc_eigen(ctx: &Ctx) -> Found {
    let (b, c) = (ctx.param("b"), ctx.param("c"));
    let n = ctx.n();
    let xs = letter_values(n);
    let op = DiffOperator::dn_bc(n, &b, &c)?;
    let c_eig = if ctx.mutate() { q_times(&c) } else { c.clone() };
    for lam in partitions_up_to(ctx.weight(), n) {
        let l = op.apply(&r_exact(&lam, &xs, &b)?)?;
        let r = r_exact(&lam, &xs, &q_times(&b))?.mul(&macdonald_eigenvalue(&lam, n, &c_eig));
        bail_on!(exact_witness(at_lambda("eigen", &lam), &l, &r));
    }
    Ok(None)
}

fn cal_d_eigen(ctx: &Ctx) -> Found {
    let b = ctx.param("b");
    let n = ctx.n();
    let xs = letter_values(n);
    let op = DiffOperator::cal_d1(n, &b)?;
    for lam in partitions_up_to(ctx.weight(), n) {
        let rl = r_exact(&lam, &xs, &b)?;
        let mut ev = omega(&lam, n)?;
        if ctx.mutate() {
            ev = q_times(&ev);
        }
        bail_on!(exact_witness(at_lambda("eigen", &lam), &op.apply(&rl)?, &rl.mul(&ev)));
    }
    Ok(None)
}

fn dn_bc_on_p(ctx: &Ctx) -> Found {
    let (b, c) = (ctx.param("b"), ctx.param("c"));
    let n = ctx.n();
    let op = DiffOperator::dn_bc(n, &b, &c)?;
    let b_exp = if ctx.mutate() { b.neg() } else { b.clone() };
    for mu in partitions_up_to(ctx.weight(), n) {
        let l = op.apply(&macdonald_p(&mu, n).to_ratfunc())?;
        let r = dn_bc_on_p_expansion(&mu, n, &b_exp, &c)?;
        bail_on!(exact_witness(at_mu("expansion", &mu), &l, &r));
    }
    Ok(None)
}

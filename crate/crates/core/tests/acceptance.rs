//! Acceptance run: one line per criterion, each with its time budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qbranch_core::families::{
    b_taylor_exact, b_taylor_predicted, eval_symmetry, family_value, r_closed, r_exact, r_principal, ClosedForm,
    Family,
};
use qbranch_core::identities::{alphabet, alphabet_product, canary, catalog, check, hyperseries, run_all, Config};
use qbranch_core::macdonald::qbinom::{qbinom_closed_t1, qbinom_closed_tq, qbinom_recursion, qbinom_skewq};
use qbranch_core::macdonald::{letter_values, macdonald_p, schur_det};
use qbranch_core::operators::{
    check_cal_d_eigen, check_dn_bc_eigen, check_dn_bc_on_p, check_first_operator, check_macdonald_operator,
};
use qbranch_core::partitions::{partitions_up_to, Partition};
use qbranch_core::ring::{parse_ratfunc, qpoch, RatFunc, Symbol, TruncSeries};

type Outcome = Result<(), String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn r(s: &str) -> RatFunc {
    parse_ratfunc(s).expect("valid expression")
}

fn swap(f: &RatFunc, i: usize, j: usize) -> RatFunc {
    f.substitute(&[
        (Symbol::letter(i), RatFunc::var(Symbol::letter(j))),
        (Symbol::letter(j), RatFunc::var(Symbol::letter(i))),
    ])
    .expect("substitution")
}

fn at_t(f: &RatFunc, v: &RatFunc) -> RatFunc {
    f.subs(Symbol::t(), v).expect("substitution")
}

fn symmetry() -> Outcome {
    let (a, b) = (r("a"), r("b"));
    for fam in [Family::M, Family::O, Family::Rab, Family::R] {
        let params = if fam == Family::R { vec![b.clone()] } else { vec![a.clone(), b.clone()] };
        for n in 1..=3 {
            for lam in partitions_up_to(4, 4) {
                let v = family_value(fam, &lam, &letter_values(n), &params).map_err(|e| e.to_string())?;
                for i in 1..n {
                    ensure(swap(&v, i, i + 1) == v, || format!("{fam:?}_{lam} not symmetric in x{i}, x{} (n={n})", i + 1))?;
                }
            }
        }
    }
    Ok(())
}

fn schur_reduction() -> Outcome {
    for n in 1..=3 {
        for lam in partitions_up_to(5, 5) {
            let p = if lam.len() > n { RatFunc::zero() } else { macdonald_p(&lam, n).to_ratfunc() };
            let s = schur_det(&lam, n).map_err(|e| e.to_string())?.to_ratfunc();
            ensure(at_t(&p, &RatFunc::q()) == s, || format!("P_{lam} at t=q differs from s_{lam} (n={n})"))?;
        }
    }
    Ok(())
}

fn qbinom_triple() -> Outcome {
    let err = |e: qbranch_core::Error| e.to_string();
    for lam in partitions_up_to(5, 5) {
        let l = lam.len().max(1);
        for mu in partitions_up_to(lam.weight(), 5).into_iter().filter(|m| lam.contains(m)) {
            let s = qbinom_skewq(&lam, &mu).map_err(err)?;
            for n in l..=l + 2 {
                let rec = qbinom_recursion(&lam, &mu, n).map_err(err)?;
                ensure(rec == s, || format!("[{lam};{mu}]: recursion at n={n} differs from skewQ"))?;
            }
            let tq = qbinom_closed_tq(&lam, &mu).map_err(err)?;
            ensure(at_t(&s, &RatFunc::q()) == tq, || format!("[{lam};{mu}] at t=q"))?;
            let t1 = qbinom_closed_t1(&lam, &mu).map_err(err)?;
            ensure(at_t(&s, &RatFunc::one()) == t1, || format!("[{lam};{mu}] at t=1"))?;
        }
    }
    let v = qbinom_closed_tq(&Partition::new(vec![1, 1]).unwrap(), &Partition::new(vec![1]).unwrap()).map_err(err)?;
    ensure(v == r("(1+q)/q"), || format!("[(1,1);(1)] at t=q is {}", v.to_canonical()))
}

fn principal() -> Outcome {
    let b = r("b");
    for n in 1..=4usize {
        let pt: Vec<RatFunc> = (0..n).map(|i| RatFunc::qt(0, i as i32)).collect();
        for lam in partitions_up_to(4, n) {
            let direct = r_exact(&lam, &pt, &b).map_err(|e| e.to_string())?;
            let closed = r_principal(&lam, n, &b, None).map_err(|e| e.to_string())?;
            ensure(direct == closed, || format!("R_{lam} at the principal point, n={n}"))?;
        }
    }
    let v = r_principal(&Partition::new(vec![1]).unwrap(), 2, &b, None).map_err(|e| e.to_string())?;
    ensure(v == r("(1+t)/(1-b*t)"), || format!("R_(1) principal at n=2 is {}", v.to_canonical()))
}

fn evaluation_symmetry() -> Outcome {
    let (a, b) = (r("a"), r("b"));
    for n in 1..=3 {
        let parts = partitions_up_to(3, n);
        for (i, lam) in parts.iter().enumerate() {
            for mu in &parts[i..] {
                let ok = eval_symmetry(lam, mu, n, &a, &b).map_err(|e| e.to_string())?;
                ensure(ok, || format!("lambda={lam}, mu={mu}, n={n}"))?;
            }
        }
    }
    Ok(())
}

fn operators() -> Outcome {
    let (b, c) = (r("b"), r("c"));
    let err = |e: qbranch_core::Error| e.to_string();
    for n in 1..=3 {
        for lam in partitions_up_to(3, n) {
            ensure(check_macdonald_operator(&lam, n, &c).map_err(err)?, || format!("D_n(c) on P_{lam}, n={n}"))?;
            ensure(check_first_operator(&lam, n).map_err(err)?, || format!("D_n^1 on P_{lam}, n={n}"))?;
        }
    }
    for n in 1..=2 {
        for lam in partitions_up_to(3, n) {
            ensure(check_dn_bc_eigen(&lam, n, &b, &c).map_err(err)?, || format!("D_n(b,c) on R_{lam}, n={n}"))?;
            ensure(check_cal_d_eigen(&lam, n, &b).map_err(err)?, || format!("calD_n^1(b) on R_{lam}, n={n}"))?;
        }
        for mu in partitions_up_to(2, n) {
            ensure(check_dn_bc_on_p(&mu, n, &b, &c).map_err(err)?, || format!("D_n(b,c) on P_{mu}, n={n}"))?;
        }
    }
    Ok(())
}

fn catalog_suite() -> Outcome {
    let run = |id: &str, cfg: Config| -> Outcome {
        let res = check(id, &cfg).map_err(|e| format!("{id}: {e}"))?;
        ensure(res.pass, || format!("{id} failed at {:?}", res.witness))
    };
    for n in 1..=2 {
        run("q-gauss", Config::new(n, 3, 0))?;
    }
    run("pieri-R", Config::new(2, 3, 2))?;
    run("skew-cauchy-R", Config::new(2, 3, 2))?;
    run("ktw", Config::new(1, 3, 1).bind("d", r("c")))?;
    run("rains-cauchy-terminating", Config::new(1, 2, 2))?;
    for e in catalog() {
        let bad = canary(e.id).map_err(|err| format!("canary {}: {err}", e.id))?;
        ensure(!bad.pass && bad.witness.is_some(), || format!("canary of {} did not fail", e.id))?;
    }
    let start = Instant::now();
    for res in run_all() {
        let res = res.map_err(|e| e.to_string())?;
        ensure(res.pass, || format!("{} failed at {:?}", res.id, res.witness))?;
    }
    println!("    full catalog run: {:.2?}", start.elapsed());
    Ok(())
}

fn b_taylor() -> Outcome {
    for n in 1..=2 {
        for mu in partitions_up_to(2, n) {
            let exact = b_taylor_exact(&mu, n, 3).map_err(|e| e.to_string())?;
            let predicted = b_taylor_predicted(&mu, n, 3).map_err(|e| e.to_string())?;
            for (k, (x, y)) in exact.iter().zip(&predicted).enumerate() {
                ensure(x == y, || format!("coefficient of b^{k} for mu={mu}, n={n}"))?;
            }
        }
    }
    Ok(())
}

fn closed_forms() -> Outcome {
    let b = r("b");
    let err = |e: qbranch_core::Error| e.to_string();
    for n in 1..=2 {
        for lam in partitions_up_to(4, n) {
            let v = r_exact(&lam, &letter_values(n), &b).map_err(err)?;
            let tq = r_closed(&lam, n, &b, ClosedForm::TEqualsQ).map_err(err)?;
            ensure(at_t(&v, &RatFunc::q()) == tq, || format!("t=q closed form of R_{lam}, n={n}"))?;
            let t1 = r_closed(&lam, n, &b, ClosedForm::TEqualsOne).map_err(err)?;
            ensure(at_t(&v, &RatFunc::one()) == t1, || format!("t=1 closed form of R_{lam}, n={n}"))?;
        }
    }
    Ok(())
}

fn classical_gauss() -> Outcome {
    const D: u32 = 6;
    let err = |e: qbranch_core::Error| e.to_string();
    let xs = alphabet(1);
    let x = RatFunc::var(Symbol::letter(1));
    let (a, b, c) = (r("a"), r("b"), r("c"));
    let z = c.div(&a.mul(&b)).map_err(err)?;
    let series = hyperseries(&[a.clone(), b.clone()], std::slice::from_ref(&c), &z, &xs, D).map_err(err)?;
    // sum_k (a,b)_k / (q, cx)_k (cx/ab)^k, term by term
    let mut classical = TruncSeries::zero(&xs, D);
    for k in 0..=D as i64 {
        let num = qpoch(&a, k).map_err(err)?.mul(&qpoch(&b, k).map_err(err)?);
        let den = qpoch(&RatFunc::q(), k).map_err(err)?.mul(&qpoch(&c.mul(&x), k).map_err(err)?);
        let term = num.mul(&z.mul(&x).pow(k as i32).map_err(err)?).div(&den).map_err(err)?;
        classical = classical.add(&TruncSeries::from_ratfunc(&term, &xs, D).map_err(err)?);
    }
    let product = alphabet_product(&[c.div(&a).map_err(err)?, c.div(&b).map_err(err)?], &[c.clone(), z], &xs, D)
        .map_err(err)?;
    if let Some(m) = series.first_mismatch(&classical) {
        return Err(format!("series and termwise sum differ at {:?}", m.monomial));
    }
    if let Some(m) = classical.first_mismatch(&product) {
        return Err(format!("sum and product differ at {:?}", m.monomial));
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 10] = [
        ("symmetry of M, O, Rab, R (|lambda| <= 4, n <= 3)", 300, symmetry),
        ("Schur reduction at t = q (|lambda| <= 5, n <= 3)", 120, schur_reduction),
        ("q-binomial routes agree (|lambda| <= 5)", 300, qbinom_triple),
        ("principal specialisation (|lambda| <= 4, n <= 4)", 120, principal),
        ("evaluation symmetry (|lambda|, |mu| <= 3, n <= 3)", 600, evaluation_symmetry),
        ("operator eigen-suite", 600, operators),
        ("identity catalog and canaries", 1800, catalog_suite),
        ("Taylor coefficients in b through b^3", 120, b_taylor),
        ("closed forms at t = q and t = 1", 120, closed_forms),
        ("one-letter q-Gauss at degree 6", 60, classical_gauss),
    ];
    let mut failed = 0;
    for (i, (name, budget, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let took = start.elapsed();
        let line = match outcome {
            Ok(()) if took <= Duration::from_secs(*budget) => format!("PASS {:>2} {name} ({took:.2?}, budget {budget}s)", i + 1),
            Ok(()) => format!("FAIL {:>2} {name}: over budget ({took:.2?} > {budget}s)", i + 1),
            Err(msg) => format!("FAIL {:>2} {name}: {msg} ({took:.2?})", i + 1),
        };
        if line.starts_with("FAIL") {
            failed += 1;
        }
        println!("{line}");
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

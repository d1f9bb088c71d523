use std::time::Instant;

use qbranch_core::families::{
    eval_symmetry, family_value, interpolation_link, lemma_limit, lemma_reduce, lemma_scale, r_closed, r_exact,
    r_norm, r_principal, ClosedForm, Family,
};
use qbranch_core::macdonald::branch::{branch_build, MacdonaldRule};
use qbranch_core::partitions::{partitions_up_to, Partition};
use qbranch_core::ring::{RatFunc, Symbol};

fn letters(n: usize) -> Vec<RatFunc> {
    (1..=n).map(|i| RatFunc::var(Symbol::letter(i))).collect()
}

fn swap(f: &RatFunc, i: usize, j: usize) -> RatFunc {
    f.substitute(&[
        (Symbol::letter(i), RatFunc::var(Symbol::letter(j))),
        (Symbol::letter(j), RatFunc::var(Symbol::letter(i))),
    ])
    .unwrap()
}

#[test]
fn families_symmetric() {
    let (a, b) = (RatFunc::sym("a"), RatFunc::sym("b"));
    for fam in [Family::M, Family::O, Family::Rab, Family::R] {
        let start = Instant::now();
        let params: Vec<RatFunc> = if fam == Family::R { vec![b.clone()] } else { vec![a.clone(), b.clone()] };
        for n in 2..=3 {
            for lam in partitions_up_to(4, 4) {
                let v = family_value(fam, &lam, &letters(n), &params).unwrap();
                for i in 1..n {
                    assert_eq!(swap(&v, i, i + 1), v, "{fam:?} {lam} n={n}");
                }
            }
        }
        eprintln!("{fam:?}: {:?}", start.elapsed());
    }
}

#[test]
fn r_basic_reductions() {
    let b = RatFunc::sym("b");
    let rule = MacdonaldRule { normalized: false };
    for n in 1..=3 {
        for lam in partitions_up_to(4, 4) {
            let v = r_exact(&lam, &letters(n), &b).unwrap();
            if lam.len() > n {
                assert!(v.is_zero());
            }
            let at0 = r_exact(&lam, &letters(n), &RatFunc::zero()).unwrap();
            assert_eq!(at0, branch_build(&rule, &lam, &letters(n), &[]).unwrap());
        }
    }
}

#[test]
fn o_inversion_symmetry() {
    let (a, b) = (RatFunc::sym("a"), RatFunc::sym("b"));
    for n in 1..=2 {
        let inv: Vec<RatFunc> = (1..=n).map(|i| RatFunc::var_pow(Symbol::letter(i), -1)).collect();
        for lam in partitions_up_to(3, 3) {
            let lhs = family_value(Family::O, &lam, &letters(n), &[a.clone(), b.clone()]).unwrap();
            let rhs = family_value(Family::O, &lam, &inv, &[b.clone(), a.clone()]).unwrap();
            let scale = a.div(&b).unwrap().pow(lam.weight() as i32).unwrap();
            assert_eq!(lhs, rhs.mul(&scale), "{lam} n={n}");
        }
    }
}

#[test]
fn principal_specialisation() {
    let b = RatFunc::sym("b");
    for n in 1..=4usize {
        let pt: Vec<RatFunc> = (0..n).map(|i| RatFunc::qt(0, i as i32)).collect();
        for lam in partitions_up_to(4, n) {
            assert_eq!(r_exact(&lam, &pt, &b).unwrap(), r_principal(&lam, n, &b, None).unwrap(), "{lam} n={n}");
        }
    }
}

#[test]
fn lemmas() {
    let b = RatFunc::sym("b");
    for n in 1..=2 {
        for lam in partitions_up_to(3, n) {
            assert!(lemma_scale(&lam, n, &b).unwrap(), "scale {lam}");
            assert!(lemma_limit(&lam, n, &b).unwrap(), "limit {lam}");
        }
    }
    for lam in partitions_up_to(4, 3) {
        if !lam.is_empty() {
            assert!(lemma_reduce(&lam, &b).unwrap(), "reduce {lam}");
        }
    }
}

#[test]
fn ab_symmetry_of_normalised_r() {
    let (a, b) = (RatFunc::sym("a"), RatFunc::sym("b"));
    for n in 1..=2 {
        let ax: Vec<RatFunc> = letters(n).iter().map(|x| x.mul(&a)).collect();
        let bx: Vec<RatFunc> = letters(n).iter().map(|x| x.mul(&b)).collect();
        for lam in partitions_up_to(3, n) {
            let lhs = r_norm(&lam, &ax, &b).unwrap();
            let rhs = r_norm(&lam, &bx, &a).unwrap().mul(&a.div(&b).unwrap().pow(lam.weight() as i32).unwrap());
            assert_eq!(lhs, rhs, "{lam} n={n}");
        }
    }
}

#[test]
fn evaluation_symmetry() {
    let (a, b) = (RatFunc::sym("a"), RatFunc::sym("b"));
    let start = Instant::now();
    for n in 1..=3 {
        let parts = partitions_up_to(3, n);
        for (i, lam) in parts.iter().enumerate() {
            for mu in &parts[i..] {
                assert!(eval_symmetry(lam, mu, n, &a, &b).unwrap(), "{lam} {mu} n={n}");
            }
        }
    }
    eprintln!("evaluation symmetry: {:?}", start.elapsed());
}

#[test]
fn closed_forms() {
    let b = RatFunc::sym("b");
    for n in 1..=2 {
        for lam in partitions_up_to(4, n) {
            let v = r_exact(&lam, &letters(n), &b).unwrap();
            let tq = v.subs(Symbol::t(), &RatFunc::q()).unwrap();
            assert_eq!(tq, r_closed(&lam, n, &b, ClosedForm::TEqualsQ).unwrap(), "t=q {lam}");
            let t1 = v.subs(Symbol::t(), &RatFunc::one()).unwrap();
            assert_eq!(t1, r_closed(&lam, n, &b, ClosedForm::TEqualsOne).unwrap(), "t=1 {lam}");
        }
    }
}

#[test]
fn interpolation_polynomials_link() {
    for lam in partitions_up_to(4, 2) {
        if lam.part(1) <= 2 {
            assert!(interpolation_link(&lam, 2, 2).unwrap(), "{lam}");
        }
    }
    let _ = Partition::empty();
}

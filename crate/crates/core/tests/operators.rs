use qbranch_core::operators::{
    check_cal_d_eigen, check_dn_bc_eigen, check_dn_bc_on_p, check_first_operator, check_macdonald_operator,
};
use qbranch_core::partitions::partitions_up_to;
use qbranch_core::ring::RatFunc;

#[test]
fn macdonald_operator_eigenvalues() {
    let c = RatFunc::sym("c");
    for n in 1..=3 {
        for lam in partitions_up_to(3, n) {
            assert!(check_macdonald_operator(&lam, n, &c).unwrap(), "D_n(c) {lam} n={n}");
            assert!(check_first_operator(&lam, n).unwrap(), "D_n^1 {lam} n={n}");
        }
    }
}

#[test]
fn generalised_operators_on_r() {
    let (b, c) = (RatFunc::sym("b"), RatFunc::sym("c"));
    for n in 1..=2 {
        for lam in partitions_up_to(3, n) {
            assert!(check_dn_bc_eigen(&lam, n, &b, &c).unwrap(), "D_n(b,c) {lam} n={n}");
            assert!(check_cal_d_eigen(&lam, n, &b).unwrap(), "calD {lam} n={n}");
        }
    }
}

#[test]
fn generalised_operator_on_p() {
    let (b, c) = (RatFunc::sym("b"), RatFunc::sym("c"));
    for n in 1..=2 {
        for mu in partitions_up_to(2, n) {
            assert!(check_dn_bc_on_p(&mu, n, &b, &c).unwrap(), "{mu} n={n}");
        }
    }
}

use qbranch_core::identities::{
    alphabet, alphabet_product, canary, catalog, check, check_default, entry, hyperseries, report_json, Config,
};
use qbranch_core::ring::{parse_ratfunc, qpoch, Mono, RatFunc, Symbol, TruncSeries};
use qbranch_core::Error;

fn r(s: &str) -> RatFunc {
    parse_ratfunc(s).unwrap()
}

#[test]
fn every_entry_passes_and_every_canary_fails() {
    for e in catalog() {
        let ok = check_default(e.id).unwrap();
        assert!(ok.pass, "{} failed: {:?}", e.id, ok.witness);
        let bad = canary(e.id).unwrap();
        assert!(!bad.pass, "canary of {} passed", e.id);
        let w = bad.witness.expect("failures carry a witness");
        assert_ne!(w.left, w.right, "{}", e.id);
        assert!(!w.monomial.is_empty());
    }
}

#[test]
fn q_gauss_canary_fails_in_degree_one() {
    let bad = canary("q-gauss").unwrap();
    let w = bad.witness.unwrap();
    let m = r(&w.monomial);
    let (_, mono) = m.as_term().unwrap();
    assert_eq!(mono.degree(), 1);
}

#[test]
fn ktw_with_d_equal_c() {
    let cfg = Config::new(1, 3, 1).bind("d", r("c"));
    assert!(check("ktw", &cfg).unwrap().pass);
}

#[test]
fn specialised_parameters() {
    let cfg = Config::new(2, 3, 1).bind("a", r("q^2")).bind("c", r("t"));
    assert!(check("pieri-R", &cfg).unwrap().pass);
    let cfg = Config::new(1, 4, 0).bind("b", r("q^-2"));
    assert!(check("q-gauss", &cfg).unwrap().pass);
}

#[test]
fn errors() {
    assert!(matches!(check_default("no-such-identity"), Err(Error::UnknownIdentity(_))));
    let cfg = Config::new(2, 3, 1).bind("d", r("a"));
    assert!(matches!(check("pieri-R", &cfg), Err(Error::Precondition(_))));
    let cfg = Config::new(2, 3, 1).bind("w", r("1"));
    assert!(matches!(check("pieri-R", &cfg), Err(Error::Precondition(_))));
    assert!(matches!(check("q-gauss", &Config::new(5, 3, 0)), Err(Error::Bound(_))));
    assert!(matches!(check("q-gauss", &Config::new(2, 7, 0)), Err(Error::Bound(_))));
    assert!(matches!(check("saalschutz", &Config::new(1, 0, 9)), Err(Error::Bound(_))));
}

#[test]
fn hyperseries_basics() {
    let xs = alphabet(2);
    assert!(matches!(hyperseries(&[r("a")], &[], &r("z"), &xs, 3), Err(Error::Precondition(_))));
    let one = hyperseries(&[], &[r("c")], &RatFunc::zero(), &xs, 3).unwrap();
    assert!(one.equals(&TruncSeries::one(&xs, 3)));
}

#[test]
fn two_phi_one_in_one_letter_is_classical() {
    let xs = alphabet(1);
    let x = Symbol::letter(1);
    let (a, b, c, z) = (r("a"), r("b"), r("c"), r("z"));
    let s = hyperseries(&[a.clone(), b.clone()], std::slice::from_ref(&c), &z, &xs, 3).unwrap();
    // (a,b)_k z^k x^k / ((q)_k (cx)_k), expanded in x
    let mut classical = TruncSeries::zero(&xs, 3);
    for k in 0..=3i64 {
        let term = qpoch(&a, k)
            .unwrap()
            .mul(&qpoch(&b, k).unwrap())
            .mul(&z.pow(k as i32).unwrap())
            .mul(&RatFunc::var_pow(x, k as i32))
            .div(&qpoch(&RatFunc::q(), k).unwrap().mul(&qpoch(&c.mul(&RatFunc::var(x)), k).unwrap()))
            .unwrap();
        classical = classical.add(&TruncSeries::from_ratfunc(&term, &xs, 3).unwrap());
    }
    assert!(s.equals(&classical));
}

#[test]
fn q_gauss_in_one_letter_matches_product() {
    let xs = alphabet(1);
    let (a, b, c) = (r("a"), r("b"), r("c"));
    let z = c.div(&a.mul(&b)).unwrap();
    let s = hyperseries(&[a.clone(), b.clone()], std::slice::from_ref(&c), &z, &xs, 4).unwrap();
    let p = alphabet_product(&[r("c/a"), r("c/b")], &[c.clone(), z.clone()], &xs, 4).unwrap();
    assert!(s.equals(&p));
    assert!(!s.coefficient(&Mono::var(Symbol::letter(1), 4)).is_zero());
}

#[test]
fn json_report_shape() {
    let res = vec![check_default("saalschutz").unwrap(), canary("saalschutz").unwrap()];
    let text = report_json(&res);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 2);
    assert_eq!(arr[0]["id"], "saalschutz");
    assert_eq!(arr[0]["pass"], true);
    assert!(arr[0].get("witness").is_none());
    assert_eq!(arr[1]["pass"], false);
    assert!(arr[1]["witness"]["monomial"].is_string());
    assert!(arr[0]["millis"].is_u64());
    assert_eq!(arr[0]["config"]["weight"], 4);
}

#[test]
fn catalog_ids_are_unique_and_known() {
    let ids: Vec<&str> = catalog().iter().map(|e| e.id).collect();
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    sorted.dedup();
    assert_eq!(sorted.len(), ids.len());
    for id in [
        "suf-symmetry",
        "skew-cauchy-macdonald",
        "pieri-macdonald",
        "skew-cauchy-R",
        "pieri-R",
        "q-binomial-R",
        "one-phi-one",
        "q-gauss",
        "b-taylor",
        "saalschutz",
        "sears",
        "propskew",
        "rains-cauchy-terminating",
        "ktw",
        "heine",
        "dn-bc-eigen",
        "calD-eigen",
        "dn-bc-on-P",
    ] {
        assert!(entry(id).is_ok(), "{id}");
    }
}

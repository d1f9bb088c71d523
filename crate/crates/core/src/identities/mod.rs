//! Catalog of identities, each checked either as an exact equality of
//! rational functions or as an equality of power series truncated at a total
//! degree in the alphabet.

mod checks;
mod series;

pub use series::{alphabet, alphabet_product, hyperseries, inf_product};

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::ring::{Mono, RatFunc, TruncSeries};

pub const MAX_N: usize = 4;
pub const MAX_DEGREE: u32 = 6;
pub const MAX_WEIGHT: u32 = 8;

/// Size of a check. `weight` bounds the fixed partitions of an entry (or the
/// summation range of the finite identities); `bindings` specialise
/// parameters, all others stay symbolic.
#[derive(Clone, Debug, PartialEq)]
pub struct Config {
    pub n: usize,
    pub degree: u32,
    pub weight: u32,
    pub bindings: BTreeMap<String, RatFunc>,
    pub mutate: bool,
}

impl Config {
    pub const fn new(n: usize, degree: u32, weight: u32) -> Config {
        Config {
            n,
            degree,
            weight,
            bindings: BTreeMap::new(),
            mutate: false,
        }
    }

    pub fn bind(mut self, name: &str, value: RatFunc) -> Config {
        self.bindings.insert(name.to_string(), value);
        self
    }

    /// The same configuration with the entry's deliberate error switched on.
    pub fn mutated(mut self) -> Config {
        self.mutate = true;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 || self.n > MAX_N {
            return Err(Error::Bound(format!("n = {} outside 1..={MAX_N}", self.n)));
        }
        if self.degree > MAX_DEGREE {
            return Err(Error::Bound(format!("degree {} exceeds {MAX_DEGREE}", self.degree)));
        }
        if self.weight > MAX_WEIGHT {
            return Err(Error::Bound(format!("partition weight {} exceeds {MAX_WEIGHT}", self.weight)));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let mut binds = Map::new();
        for (k, v) in &self.bindings {
            binds.insert(k.clone(), Value::String(v.to_canonical()));
        }
        json!({
            "n": self.n,
            "degree": self.degree,
            "weight": self.weight,
            "bindings": binds,
            "mutate": self.mutate,
        })
    }
}

/// Where two sides first differ. Exact identities report the monomial `1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub at: String,
    pub monomial: String,
    pub left: String,
    pub right: String,
}

impl Witness {
    fn to_json(&self) -> Value {
        json!({
            "at": self.at,
            "monomial": self.monomial,
            "left": self.left,
            "right": self.right,
        })
    }
}

/// First differing coefficient of two truncated series.
pub(crate) fn series_witness(at: impl FnOnce() -> String, l: &TruncSeries, r: &TruncSeries) -> Option<Witness> {
    l.first_mismatch(r).map(|m| Witness {
        at: at(),
        monomial: RatFunc::mono(m.monomial).to_canonical(),
        left: m.left.to_canonical(),
        right: m.right.to_canonical(),
    })
}

pub(crate) fn exact_witness(at: impl FnOnce() -> String, l: &RatFunc, r: &RatFunc) -> Option<Witness> {
    (l != r).then(|| Witness {
        at: at(),
        monomial: RatFunc::mono(Mono::one()).to_canonical(),
        left: l.to_canonical(),
        right: r.to_canonical(),
    })
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub id: &'static str,
    pub config: Config,
    pub pass: bool,
    pub witness: Option<Witness>,
    pub millis: u128,
    pub note: Option<&'static str>,
}

impl CheckResult {
    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("id".into(), json!(self.id));
        obj.insert("config".into(), self.config.to_json());
        obj.insert("pass".into(), json!(self.pass));
        if let Some(w) = &self.witness {
            obj.insert("witness".into(), w.to_json());
        }
        obj.insert("millis".into(), json!(self.millis as u64));
        if let Some(n) = self.note {
            obj.insert("note".into(), json!(n));
        }
        Value::Object(obj)
    }
}

/// JSON array report, one object per result, in the given order.
pub fn report_json(results: &[CheckResult]) -> String {
    let arr: Vec<Value> = results.iter().map(CheckResult::to_json).collect();
    serde_json::to_string_pretty(&Value::Array(arr)).expect("json values serialise")
}

type CheckFn = fn(&Ctx) -> Result<Option<Witness>>;

pub struct Entry {
    pub id: &'static str,
    pub title: &'static str,
    /// Parameter names that may be bound.
    pub params: &'static [&'static str],
    pub default: Config,
    pub note: Option<&'static str>,
    run: CheckFn,
}

/// What a check sees: the configuration and its parameter bindings.
pub(crate) struct Ctx<'a> {
    cfg: &'a Config,
}

impl Ctx<'_> {
    pub(crate) fn n(&self) -> usize {
        self.cfg.n
    }

    pub(crate) fn degree(&self) -> u32 {
        self.cfg.degree
    }

    pub(crate) fn weight(&self) -> u32 {
        self.cfg.weight
    }

    pub(crate) fn mutate(&self) -> bool {
        self.cfg.mutate
    }

    /// The bound value of `name`, or the symbol itself.
    pub(crate) fn param(&self, name: &str) -> RatFunc {
        self.cfg.bindings.get(name).cloned().unwrap_or_else(|| RatFunc::sym(name))
    }

    pub(crate) fn is_bound(&self, name: &str) -> bool {
        self.cfg.bindings.contains_key(name)
    }

    /// A parameter fixed by a constraint: `value` unless bound, in which case
    /// the binding has to agree with it.
    pub(crate) fn derived(&self, name: &str, value: RatFunc, constraint: &str) -> Result<RatFunc> {
        match self.cfg.bindings.get(name) {
            Some(v) if *v != value => Err(Error::Precondition(format!(
                "binding {name} = {} violates {constraint}",
                v.to_canonical()
            ))),
            _ => Ok(value),
        }
    }
}

pub fn catalog() -> &'static [Entry] {
    checks::CATALOG
}

pub fn entry(id: &str) -> Result<&'static Entry> {
    catalog()
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Runs one identity at the given configuration.
pub fn check(id: &str, cfg: &Config) -> Result<CheckResult> {
    let e = entry(id)?;
    cfg.validate()?;
    if let Some(k) = cfg.bindings.keys().find(|k| !e.params.contains(&k.as_str())) {
        return Err(Error::Precondition(format!(
            "`{id}` has no parameter `{k}` (parameters: {})",
            e.params.join(", ")
        )));
    }
    let start = Instant::now();
    let witness = (e.run)(&Ctx { cfg })?;
    Ok(CheckResult {
        id: e.id,
        config: cfg.clone(),
        pass: witness.is_none(),
        witness,
        millis: start.elapsed().as_millis(),
        note: e.note,
    })
}

/// Runs `id` at its default configuration.
pub fn check_default(id: &str) -> Result<CheckResult> {
    check(id, &entry(id)?.default)
}

/// Runs the deliberately broken variant of `id`; a sound harness reports a failure.
pub fn canary(id: &str) -> Result<CheckResult> {
    check(id, &entry(id)?.default.clone().mutated())
}

/// Runs the given entries concurrently; results come back in input order.
pub fn run_many(jobs: &[(&str, Config)]) -> Vec<Result<CheckResult>> {
    jobs.par_iter().map(|(id, cfg)| check(id, cfg)).collect()
}

/// Every catalog entry at its default configuration, in catalog order.
pub fn run_all() -> Vec<Result<CheckResult>> {
    let jobs: Vec<(&str, Config)> = catalog().iter().map(|e| (e.id, e.default.clone())).collect();
    run_many(&jobs)
}

//! Global symbol table.
//!
//! Symbols are identified by their registration index, and the index order is
//! the variable order used by the monomial ordering. A fixed set of names is
//! registered up front so that indices (and therefore printed output) do not
//! depend on which computation happened to mention a symbol first.

use std::fmt;
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymbolKind {
    BaseQ,
    BaseT,
    Parameter,
    Letter,
}

/// Handle to a registered symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(pub(crate) u16);

struct Registry {
    names: Vec<(String, SymbolKind)>,
}

/// Number of alphabet letters `x1..xN` registered eagerly.
pub const PRESEEDED_LETTERS: usize = 8;

const PRESEEDED_PARAMS: [&str; 8] = ["a", "b", "c", "d", "e", "f", "z", "w"];

fn registry() -> &'static RwLock<Registry> {
    static REG: OnceLock<RwLock<Registry>> = OnceLock::new();
    REG.get_or_init(|| {
        let mut names = vec![
            ("q".to_string(), SymbolKind::BaseQ),
            ("t".to_string(), SymbolKind::BaseT),
        ];
        for p in PRESEEDED_PARAMS {
            names.push((p.to_string(), SymbolKind::Parameter));
        }
        for i in 1..=PRESEEDED_LETTERS {
            names.push((format!("x{i}"), SymbolKind::Letter));
        }
        for i in 1..=4 {
            names.push((format!("y{i}"), SymbolKind::Letter));
        }
        RwLock::new(Registry { names })
    })
}

fn kind_for_name(name: &str) -> SymbolKind {
    let bytes = name.as_bytes();
    if (bytes[0] == b'x' || bytes[0] == b'y')
        && bytes.len() > 1
        && bytes[1..].iter().all(u8::is_ascii_digit)
    {
        SymbolKind::Letter
    } else {
        SymbolKind::Parameter
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Symbol {
    pub fn q() -> Symbol {
        Symbol(0)
    }

    pub fn t() -> Symbol {
        Symbol(1)
    }

    /// Looks up `name`, registering it if it is new.
    pub fn named(name: &str) -> Result<Symbol> {
        if !valid_name(name) {
            return Err(Error::Parse(format!("invalid symbol name `{name}`")));
        }
        {
            let reg = registry().read().expect("symbol registry poisoned");
            if let Some(i) = reg.names.iter().position(|(n, _)| n == name) {
                return Ok(Symbol(i as u16));
            }
        }
        let mut reg = registry().write().expect("symbol registry poisoned");
        if let Some(i) = reg.names.iter().position(|(n, _)| n == name) {
            return Ok(Symbol(i as u16));
        }
        if reg.names.len() >= i16::MAX as usize {
            return Err(Error::Bound("too many symbols registered".into()));
        }
        let kind = kind_for_name(name);
        reg.names.push((name.to_string(), kind));
        Ok(Symbol((reg.names.len() - 1) as u16))
    }

    /// Convenience for names known to be valid (panics otherwise).
    pub fn var(name: &str) -> Symbol {
        Symbol::named(name).expect("valid symbol name")
    }

    /// The `i`-th alphabet letter `x{i}` (1-based).
    pub fn letter(i: usize) -> Symbol {
        Symbol::var(&format!("x{i}"))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(i: usize) -> Symbol {
        Symbol(i as u16)
    }

    pub fn name(self) -> String {
        let reg = registry().read().expect("symbol registry poisoned");
        reg.names[self.0 as usize].0.clone()
    }

    pub fn kind(self) -> SymbolKind {
        let reg = registry().read().expect("symbol registry poisoned");
        reg.names[self.0 as usize].1
    }

    pub fn is_letter(self) -> bool {
        self.kind() == SymbolKind::Letter
    }
}

/// Snapshot of all symbol names, indexed by symbol index.
pub fn symbol_names() -> Vec<String> {
    let reg = registry().read().expect("symbol registry poisoned");
    reg.names.iter().map(|(n, _)| n.clone()).collect()
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preseeded_order() {
        assert_eq!(Symbol::q().name(), "q");
        assert_eq!(Symbol::t().name(), "t");
        assert_eq!(Symbol::q().kind(), SymbolKind::BaseQ);
        assert!(Symbol::var("a").index() < Symbol::letter(1).index());
        assert!(Symbol::letter(1).is_letter());
        assert!(!Symbol::var("b").is_letter());
    }

    #[test]
    fn registration_is_idempotent() {
        let s1 = Symbol::named("gamma_1").unwrap();
        let s2 = Symbol::named("gamma_1").unwrap();
        assert_eq!(s1, s2);
        assert!(Symbol::named("1abc").is_err());
    }
}

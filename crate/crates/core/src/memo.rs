//! Process-wide memo tables: concurrent reads, exclusive inserts.
//!
//! Two threads may compute the same entry at the same time; the values are
//! equal, so whichever insert lands last is harmless.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{OnceLock, RwLock};

pub(crate) struct Memo<K, V> {
    cell: OnceLock<RwLock<HashMap<K, V>>>,
}

impl<K: Hash + Eq + Clone, V: Clone> Memo<K, V> {
    pub(crate) const fn new() -> Self {
        Memo { cell: OnceLock::new() }
    }

    fn map(&self) -> &RwLock<HashMap<K, V>> {
        self.cell.get_or_init(|| RwLock::new(HashMap::new()))
    }

    pub(crate) fn get(&self, key: &K) -> Option<V> {
        self.map().read().expect("memo poisoned").get(key).cloned()
    }

    pub(crate) fn insert(&self, key: K, value: V) {
        self.map().write().expect("memo poisoned").insert(key, value);
    }


    pub(crate) fn get_or(&self, key: K, f: impl FnOnce() -> V) -> V {
        if let Some(v) = self.get(&key) {
            return v;
        }
        let v = f();
        self.insert(key, v.clone());
        v
    }

    pub(crate) fn len(&self) -> usize {
        self.map().read().expect("memo poisoned").len()
    }

    pub(crate) fn clear(&self) {
        self.map().write().expect("memo poisoned").clear();
    }
}

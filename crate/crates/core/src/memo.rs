//! Memo tables shared by the homology and profile computations.
//!
//! With `std` the table sits behind an `RwLock` and may be filled from many
//! workers; racing inserts of one key store equal values, so the last write
//! wins. Without `std` the table is single-threaded.

use alloc::collections::BTreeMap;

pub(crate) struct Memo<K, V> {
    #[cfg(feature = "std")]
    table: std::sync::RwLock<BTreeMap<K, V>>,
    #[cfg(not(feature = "std"))]
    table: core::cell::RefCell<BTreeMap<K, V>>,
}

impl<K: Ord, V: Clone> Memo<K, V> {
    pub(crate) fn new() -> Self {
        Memo {
            table: Default::default(),
        }
    }

    #[cfg(feature = "std")]
    pub(crate) fn get(&self, key: &K) -> Option<V> {
        self.table.read().unwrap_or_else(|e| e.into_inner()).get(key).cloned()
    }

    #[cfg(feature = "std")]
    pub(crate) fn insert(&self, key: K, value: V) {
        self.table.write().unwrap_or_else(|e| e.into_inner()).insert(key, value);
    }

    #[cfg(feature = "std")]
    pub(crate) fn len(&self) -> usize {
        self.table.read().unwrap_or_else(|e| e.into_inner()).len()
    }

    #[cfg(not(feature = "std"))]
    pub(crate) fn get(&self, key: &K) -> Option<V> {
        self.table.borrow().get(key).cloned()
    }

    #[cfg(not(feature = "std"))]
    pub(crate) fn insert(&self, key: K, value: V) {
        self.table.borrow_mut().insert(key, value);
    }

    #[cfg(not(feature = "std"))]
    pub(crate) fn len(&self) -> usize {
        self.table.borrow().len()
    }

    #[cfg(feature = "std")]
    pub(crate) fn snapshot(&self) -> alloc::vec::Vec<(K, V)>
    where
        K: Clone,
    {
        let table = self.table.read().unwrap_or_else(|e| e.into_inner());
        table.iter().map(|(k, v)| (k.clone(), v.clone())).collect()
    }

    #[cfg(not(feature = "std"))]
    pub(crate) fn snapshot(&self) -> alloc::vec::Vec<(K, V)>
    where
        K: Clone,
    {
        self.table
            .borrow()
            .iter()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect()
    }

    pub(crate) fn get_or_insert_with(&self, key: K, f: impl FnOnce() -> V) -> V {
        if let Some(v) = self.get(&key) {
            return v;
        }
        let v = f();
        self.insert(key, v.clone());
        v
    }
}

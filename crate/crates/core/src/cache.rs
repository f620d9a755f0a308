//! Memo tables shared by the category contexts.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex};

use crate::error::Result;

pub type Cache<K, V> = Mutex<HashMap<K, Arc<V>>>;

/// Looks up `key`, building and inserting the value on a miss. The lock is
/// not held while building, so concurrent misses may build twice; the first
/// insert wins.
pub fn cached<K: Hash + Eq + Clone, V>(
    cache: &Cache<K, V>,
    key: &K,
    build: impl FnOnce() -> Result<V>,
) -> Result<Arc<V>> {
    if let Some(v) = cache.lock().unwrap().get(key) {
        return Ok(v.clone());
    }
    let v = Arc::new(build()?);
    Ok(cache
        .lock()
        .unwrap()
        .entry(key.clone())
        .or_insert(v)
        .clone())
}

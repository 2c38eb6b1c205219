//! Shared, immutable Grundy tables keyed by ruleset and bound.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use crate::error::Result;
use crate::grundy::{grundy_table, GrundyTable};
use crate::rulesets::Ruleset;
use crate::table_io::TableCache;

/// Builds each `(ruleset, bound)` table once and hands out shared handles.
/// Optionally backed by an on-disk [`TableCache`].
///
/// The lock is not held while a table is computed; two threads asking for
/// the same missing table may both build it, and the second result is
/// dropped. Both are identical, so readers never observe a difference.
#[derive(Debug, Default)]
pub struct TableStore {
    tables: Mutex<BTreeMap<(Ruleset, u32), Arc<GrundyTable>>>,
    cache: Option<TableCache>,
}

impl TableStore {
    pub fn new() -> Self {
        TableStore::default()
    }

    pub fn with_cache(cache: TableCache) -> Self {
        TableStore {
            tables: Mutex::default(),
            cache: Some(cache),
        }
    }

    pub fn get(&self, rs: Ruleset, bound: u32) -> Result<Arc<GrundyTable>> {
        let key = (rs, bound);
        if let Some(t) = self.tables.lock().expect("table store poisoned").get(&key) {
            return Ok(Arc::clone(t));
        }
        let built = match &self.cache {
            Some(cache) => cache.load_or_build(rs, bound)?,
            None => grundy_table(rs, bound)?,
        };
        let mut tables = self.tables.lock().expect("table store poisoned");
        Ok(Arc::clone(tables.entry(key).or_insert_with(|| Arc::new(built))))
    }

    /// Every table built so far, ordered by ruleset then bound.
    pub fn tables(&self) -> Vec<Arc<GrundyTable>> {
        self.tables
            .lock()
            .expect("table store poisoned")
            .values()
            .cloned()
            .collect()
    }

    pub fn len(&self) -> usize {
        self.tables.lock().expect("table store poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

//! Memoized character tables and Brauer systems keyed by element set.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::brauer::BrauerSystem;
use crate::chartab::CharacterTable;
use crate::error::Result;
use crate::perm::{class_fusion, PermGroup, Permutation};

type GroupKey = (usize, Vec<Permutation>);

fn key(g: &PermGroup) -> GroupKey {
    (g.degree(), g.elements().to_vec())
}

/// Cache shared by all computations on one ambient group.
///
/// Subgroups met along Fong chains and normalizers recur across blocks, so
/// every table is built once per element set.
#[derive(Default)]
pub struct Session {
    groups: Mutex<HashMap<GroupKey, Arc<PermGroup>>>,
    tables: Mutex<HashMap<GroupKey, Arc<CharacterTable>>>,
    brauer: Mutex<HashMap<(GroupKey, u64), Arc<BrauerSystem>>>,
}

impl Session {
    pub fn new() -> Self {
        Self::default()
    }

    /// Canonical handle for a group with this element set.
    pub fn intern(&self, g: PermGroup) -> Arc<PermGroup> {
        let k = key(&g);
        self.groups.lock().expect("session lock").entry(k).or_insert_with(|| Arc::new(g)).clone()
    }

    pub fn intern_arc(&self, g: &Arc<PermGroup>) -> Arc<PermGroup> {
        let k = key(g);
        self.groups.lock().expect("session lock").entry(k).or_insert_with(|| g.clone()).clone()
    }

    pub fn table(&self, g: &Arc<PermGroup>) -> Result<Arc<CharacterTable>> {
        let g = self.intern_arc(g);
        let k = key(&g);
        if let Some(t) = self.tables.lock().expect("session lock").get(&k) {
            return Ok(t.clone());
        }
        let t = Arc::new(CharacterTable::compute(g)?);
        Ok(self.tables.lock().expect("session lock").entry(k).or_insert(t).clone())
    }

    pub fn brauer(&self, g: &Arc<PermGroup>, p: u64) -> Result<Arc<BrauerSystem>> {
        let k = (key(g), p);
        if let Some(b) = self.brauer.lock().expect("session lock").get(&k) {
            return Ok(b.clone());
        }
        let b = Arc::new(BrauerSystem::compute(self.table(g)?, p)?);
        Ok(self.brauer.lock().expect("session lock").entry(k).or_insert(b).clone())
    }

    pub fn fusion(&self, h: &PermGroup, g: &PermGroup) -> Result<Vec<usize>> {
        class_fusion(h, g)
    }
}

#![allow(dead_code)]

use std::sync::Arc;

use lifts_core::perm::{group_from_cycles, PermGroup};
pub use lifts_core::verify::{F273_MULTIPLIER, F273_ROTATION};

pub fn group(degree: usize, gens: &[&str]) -> Arc<PermGroup> {
    Arc::new(group_from_cycles(degree, gens).expect("valid generators"))
}

pub fn f273() -> Arc<PermGroup> {
    group(91, &[F273_ROTATION, F273_MULTIPLIER])
}

pub mod oracles;

pub fn corpus_path() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data/corpus.txt")
}

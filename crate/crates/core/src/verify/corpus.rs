//! Text corpus of permutation groups.
//!
//! ```text
//! # comment
//! group S3
//! degree 3
//! gens (1 2 3), (1 2)
//! primes 2, 3
//! end
//! ```

use std::collections::HashSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{is_prime, PermGroup, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<String>,
    /// Empty means every prime dividing the order.
    pub primes: Vec<u64>,
}

impl CorpusEntry {
    pub fn permutations(&self) -> Result<Vec<Permutation>> {
        self.generators.iter().map(|g| Permutation::parse_cycles(g, self.degree)).collect()
    }

    pub fn build(&self, cap: usize) -> Result<PermGroup> {
        let gens = self.permutations()?;
        if gens.is_empty() {
            return Ok(PermGroup::trivial(self.degree));
        }
        PermGroup::generate(&gens, cap)
    }
}

/// Splits `(1 2)(3 4), (5 6)` at top-level commas.
fn split_generators(text: &str, line: usize) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in text.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        if !(0..=1).contains(&depth) {
            return Err(Error::Parse { line, msg: "unbalanced parentheses".into() });
        }
        cur.push(ch);
    }
    if depth != 0 {
        return Err(Error::Parse { line, msg: "unbalanced parentheses".into() });
    }
    out.push(cur);
    out.into_iter()
        .map(|s| s.trim().to_string())
        .map(|s| if s.is_empty() { Err(Error::Parse { line, msg: "empty generator".into() }) } else { Ok(s) })
        .collect()
}

#[derive(Default)]
struct Pending {
    start: usize,
    name: String,
    degree: Option<usize>,
    generators: Vec<String>,
    primes: Vec<u64>,
}

pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>> {
    let mut entries: Vec<CorpusEntry> = Vec::new();
    let mut names = HashSet::new();
    let mut pending: Option<Pending> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, rest) = match content.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (content, ""),
        };
        let err = |msg: String| Error::Parse { line, msg };
        match (key, pending.as_mut()) {
            ("group", None) => {
                if rest.is_empty() || rest.contains(char::is_whitespace) {
                    return Err(err(format!("bad group name {:?}", rest)));
                }
                pending = Some(Pending { start: line, name: rest.to_string(), ..Default::default() });
            }
            ("group", Some(_)) => return Err(err("missing 'end' before 'group'".into())),
            (_, None) => return Err(err(format!("{:?} outside a group block", key))),
            ("degree", Some(p)) => {
                let d: usize = rest.parse().map_err(|_| err(format!("bad degree {:?}", rest)))?;
                if d == 0 || p.degree.is_some() {
                    return Err(err("degree must be given once and be positive".into()));
                }
                p.degree = Some(d);
            }
            ("gens", Some(p)) => p.generators.extend(split_generators(rest, line)?),
            ("primes", Some(p)) => {
                for tok in rest.split(',').map(str::trim) {
                    let q: u64 = tok.parse().map_err(|_| err(format!("bad prime {:?}", tok)))?;
                    if !is_prime(q) {
                        return Err(err(format!("{} is not prime", q)));
                    }
                    if !p.primes.contains(&q) {
                        p.primes.push(q);
                    }
                }
            }
            ("end", Some(_)) => {
                let p = pending.take().expect("pending entry");
                let degree = p.degree.ok_or_else(|| err(format!("group {} has no degree", p.name)))?;
                let entry = CorpusEntry { name: p.name, degree, generators: p.generators, primes: p.primes };
                entry.permutations().map_err(|e| Error::Parse { line: p.start, msg: e.to_string() })?;
                if !names.insert(entry.name.clone()) {
                    return Err(Error::DuplicateName(entry.name));
                }
                entries.push(entry);
            }
            (other, Some(_)) => return Err(err(format!("unknown keyword {:?}", other))),
        }
    }
    if let Some(p) = pending {
        return Err(Error::Parse { line: p.start, msg: format!("group {} is missing 'end'", p.name) });
    }
    Ok(entries)
}

pub fn load_corpus(path: impl AsRef<Path>) -> Result<Vec<CorpusEntry>> {
    parse_corpus(&std::fs::read_to_string(path)?)
}

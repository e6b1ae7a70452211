//! Normal-form cache shared by every equality check in the process.
//!
//! Entries are keyed by the full braid word, so a hash collision can never
//! produce a wrong form. The cache can be persisted to a flat text file
//! whose first line is the SHA-256 of the body; a file that fails the check
//! is ignored and the cache starts cold.

use std::collections::HashMap;
use std::fs;
use std::path::Path;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::OnceLock;

use parking_lot::RwLock;
use sha2::{Digest, Sha256};

use super::garside::GarsideNF;
use super::perm::Permutation;
use crate::error::Result;
use crate::words::Word;

type Key = (usize, Word);

pub struct NfCache {
    map: RwLock<HashMap<Key, GarsideNF>>,
    enabled: AtomicBool,
}

const HEADER: &str = "braidaut-nf-cache v1";

impl NfCache {
    fn new() -> Self {
        NfCache { map: RwLock::new(HashMap::new()), enabled: AtomicBool::new(true) }
    }

    /// The process-wide cache.
    pub fn global() -> &'static NfCache {
        static CACHE: OnceLock<NfCache> = OnceLock::new();
        CACHE.get_or_init(NfCache::new)
    }

    pub fn set_enabled(&self, on: bool) {
        self.enabled.store(on, Ordering::Relaxed);
    }

    pub fn enabled(&self) -> bool {
        self.enabled.load(Ordering::Relaxed)
    }

    pub fn len(&self) -> usize {
        self.map.read().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.map.write().clear();
    }

    pub fn get_or_compute(&self, n: usize, w: &Word) -> GarsideNF {
        if !self.enabled() {
            return GarsideNF::from_word(n, w);
        }
        let key = (n, w.clone());
        if let Some(nf) = self.map.read().get(&key) {
            return nf.clone();
        }
        let nf = GarsideNF::from_word(n, w);
        self.map.write().insert(key, nf.clone());
        nf
    }

    fn body(&self) -> String {
        let map = self.map.read();
        let mut lines: Vec<String> = map
            .iter()
            .map(|((n, w), nf)| {
                let factors: Vec<String> = nf
                    .factors()
                    .iter()
                    .map(|p| p.images().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
                    .collect();
                format!("{n}\t{w}\t{}\t{}", nf.inf(), factors.join(";"))
            })
            .collect();
        lines.sort();
        lines.join("\n")
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let body = self.body();
        let sum = hex::encode(Sha256::digest(body.as_bytes()));
        fs::write(path, format!("{HEADER} {sum}\n{body}"))?;
        Ok(())
    }

    /// Load entries from `path`. Returns the number of entries loaded; a
    /// missing, corrupt or tampered file loads nothing.
    pub fn load(&self, path: &Path) -> usize {
        let Ok(text) = fs::read_to_string(path) else {
            return 0;
        };
        let (head, body) = text.split_once('\n').unwrap_or((text.as_str(), ""));
        let Some(sum) = head.strip_prefix(HEADER).map(str::trim) else {
            return 0;
        };
        if hex::encode(Sha256::digest(body.as_bytes())) != sum {
            return 0;
        }
        let mut parsed = Vec::new();
        for line in body.lines().filter(|l| !l.is_empty()) {
            match parse_line(line) {
                Some(entry) => parsed.push(entry),
                None => return 0,
            }
        }
        let count = parsed.len();
        let mut map = self.map.write();
        for (k, v) in parsed {
            map.insert(k, v);
        }
        count
    }
}

fn parse_line(line: &str) -> Option<(Key, GarsideNF)> {
    let mut cols = line.split('\t');
    let n: usize = cols.next()?.parse().ok()?;
    let w: Word = cols.next()?.parse().ok()?;
    let inf: i64 = cols.next()?.parse().ok()?;
    let factors_col = cols.next().unwrap_or("");
    let mut nf = GarsideNF::delta(n).pow(inf);
    for f in factors_col.split(';').filter(|f| !f.is_empty()) {
        let imgs: Vec<usize> = f.split(',').map(|v| v.parse().ok()).collect::<Option<_>>()?;
        if imgs.len() != n {
            return None;
        }
        let p = Permutation::from_images(&imgs);
        let word = GarsideNF::from_word(n, &simple_word(&p));
        nf = nf.mul(&word);
    }
    Some(((n, w), nf))
}

fn simple_word(p: &Permutation) -> Word {
    use crate::words::Letter;
    Word::from_letters(p.crossing_word().into_iter().map(|i| Letter::Sigma(i as u8 + 1)))
}

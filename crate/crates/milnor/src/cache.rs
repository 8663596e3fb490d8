//! Append-only JSON-lines store of search records, keyed by family hash.

use std::collections::{BTreeMap, HashSet};
use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use milnor_core::search::{Choice, RecordStatus, SearchRecord};
use milnor_core::{ExpVec, Rational};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ChoiceLine {
    pub exps: Vec<u16>,
    pub coeff: String,
    pub weight: u32,
}

/// One line of the store.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RecordLine {
    pub hash: String,
    pub base_hash: String,
    pub base: String,
    pub total: String,
    pub symbol: String,
    pub assignment: Vec<ChoiceLine>,
    pub mu_generic: Option<u32>,
    pub jump: Option<u32>,
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl RecordLine {
    pub fn from_record(r: &SearchRecord, arity: usize) -> Self {
        RecordLine {
            hash: r.hash.clone(),
            base_hash: r.base_hash.clone(),
            base: r.base.clone(),
            total: r.total.clone(),
            symbol: r.symbol.clone(),
            assignment: r
                .assignment
                .iter()
                .map(|c| ChoiceLine {
                    exps: c.direction.as_slice(arity).to_vec(),
                    coeff: c.coeff.to_string(),
                    weight: c.weight,
                })
                .collect(),
            mu_generic: r.mu_generic,
            jump: r.jump,
            status: r.status.name().to_string(),
            error: match &r.status {
                RecordStatus::Failed(m) => Some(m.clone()),
                _ => None,
            },
        }
    }

    pub fn to_record(&self) -> Option<SearchRecord> {
        let status = match self.status.as_str() {
            "ok" => RecordStatus::Ok,
            "generic_non_isolated" => RecordStatus::GenericNonIsolated,
            "failed" => RecordStatus::Failed(self.error.clone().unwrap_or_default()),
            _ => return None,
        };
        if (status == RecordStatus::Ok) != self.jump.is_some() || self.hash.len() != 64 {
            return None;
        }
        let mut assignment = Vec::with_capacity(self.assignment.len());
        for c in &self.assignment {
            if c.exps.is_empty() || c.exps.len() > 4 {
                return None;
            }
            assignment.push(Choice {
                direction: ExpVec::new(&c.exps),
                coeff: c.coeff.parse::<Rational>().ok()?,
                weight: c.weight,
            });
        }
        Some(SearchRecord {
            hash: self.hash.clone(),
            base_hash: self.base_hash.clone(),
            base: self.base.clone(),
            total: self.total.clone(),
            symbol: self.symbol.clone(),
            assignment,
            mu_generic: self.mu_generic,
            jump: self.jump,
            status,
        })
    }
}

#[derive(Debug, Default)]
pub struct Loaded {
    /// Distinct records in file order.
    pub records: Vec<SearchRecord>,
    /// Lines that failed to parse or validate.
    pub corrupt: usize,
}

impl Loaded {
    pub fn histogram(&self) -> BTreeMap<u32, u64> {
        let mut h = BTreeMap::new();
        for j in self.records.iter().filter_map(|r| r.jump) {
            *h.entry(j).or_insert(0) += 1;
        }
        h
    }
}

/// Reads every record; a missing file is an empty store.
pub fn load(path: &Path) -> io::Result<Loaded> {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(Loaded::default()),
        Err(e) => return Err(e),
    };
    let mut out = Loaded::default();
    let mut seen = HashSet::new();
    for (n, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str::<RecordLine>(&line)
            .ok()
            .and_then(|l| l.to_record())
        {
            Some(r) => {
                if seen.insert(r.hash.clone()) {
                    out.records.push(r);
                }
            }
            None => {
                eprintln!("warning: {}:{}: corrupt record skipped", path.display(), n + 1);
                out.corrupt += 1;
            }
        }
    }
    Ok(out)
}

/// Appends the records whose hash is not yet stored; returns how many
/// lines were written.
pub fn store(path: &Path, records: &[SearchRecord], arity: usize) -> io::Result<usize> {
    let mut seen: HashSet<String> = load(path)?.records.into_iter().map(|r| r.hash).collect();
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    let mut written = 0;
    for r in records {
        if !seen.insert(r.hash.clone()) {
            continue;
        }
        let line = serde_json::to_string(&RecordLine::from_record(r, arity))?;
        writeln!(file, "{line}")?;
        written += 1;
    }
    file.flush()?;
    Ok(written)
}

/// Records of one base germ.
pub fn query(path: &Path, base_hash: &str) -> io::Result<Loaded> {
    let mut l = load(path)?;
    l.records.retain(|r| r.base_hash == base_hash);
    Ok(l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use milnor_core::deform::FamilyOptions;
    use milnor_core::search::evaluate;
    use milnor_core::{Poly, Ring};

    fn records() -> Vec<SearchRecord> {
        let r = Ring::plane(&[]);
        let f0 = Poly::parse(&r, "x^4 + y^4").unwrap();
        let opts = FamilyOptions::default();
        let c = |e: [u16; 2], c: i64, w: u32| Choice {
            direction: ExpVec::new(&e),
            coeff: Rational::from_int(c),
            weight: w,
        };
        vec![
            evaluate(&f0, 9, &[], &opts),
            evaluate(&f0, 9, &[c([2, 0], 1, 2), c([1, 2], 2, 1)], &opts),
            evaluate(&f0, 9, &[c([1, 2], -1, 1)], &opts),
        ]
    }

    #[test]
    fn store_then_load_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        let recs = records();
        assert_eq!(store(&path, &recs, 2).unwrap(), 3);
        let back = load(&path).unwrap();
        assert_eq!(back.records, recs);
        assert_eq!(back.corrupt, 0);
        assert_eq!(back.histogram(), BTreeMap::from([(0, 1), (2, 1), (4, 1)]));
    }

    #[test]
    fn duplicate_store_is_idempotent() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        let recs = records();
        store(&path, &recs, 2).unwrap();
        assert_eq!(store(&path, &recs, 2).unwrap(), 0);
        assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 3);
    }

    #[test]
    fn query_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        let recs = records();
        store(&path, &recs, 2).unwrap();
        assert!(query(&path, "0000").unwrap().records.is_empty());
        assert_eq!(query(&path, &recs[0].base_hash).unwrap().records.len(), 3);
        let mut f = OpenOptions::new().append(true).open(&path).unwrap();
        writeln!(f, "{{\"hash\": 3").unwrap();
        writeln!(f, "not json").unwrap();
        let l = load(&path).unwrap();
        assert_eq!(l.corrupt, 2);
        assert_eq!(l.records.len(), 3);
        assert!(load(&dir.path().join("missing")).unwrap().records.is_empty());
    }
}

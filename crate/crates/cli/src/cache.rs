//! JSON-lines witness cache. Lines that do not parse are corruption (exit 3);
//! realized records whose witness fails exact re-verification are dropped.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use descartes_core::pattern::canonicalize_with;
use descartes_core::realize::{ComboStatus, Status, Witness};
use descartes_core::Combo;

use crate::error::CliError;
use crate::records::Record;

#[derive(Debug, Default)]
pub struct Cache {
    path: Option<PathBuf>,
    witnesses: BTreeMap<Combo, (Witness, u64)>,
    pub rejected: usize,
}

impl Cache {
    /// A missing file is an empty cache.
    pub fn load(path: &Path) -> Result<Cache, CliError> {
        let mut cache = Cache {
            path: Some(path.to_path_buf()),
            ..Cache::default()
        };
        let file = match fs::File::open(path) {
            Ok(f) => f,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(cache),
            Err(e) => return Err(CliError::io(path, e)),
        };
        for (idx, line) in BufReader::new(file).lines().enumerate() {
            let line_no = idx + 1;
            let text = line.map_err(|e| CliError::io(path, e))?;
            if text.trim().is_empty() {
                continue;
            }
            let corrupt = |message: String| CliError::Corrupt {
                path: path.to_path_buf(),
                line: line_no,
                message,
            };
            let record: Record = serde_json::from_str(&text).map_err(|e| corrupt(e.to_string()))?;
            if record.status != "realized" {
                continue;
            }
            match record
                .verified_witness()
                .map_err(|e| corrupt(e.to_string()))?
            {
                Some(w) => cache.insert(&w, record.seed),
                None => cache.rejected += 1,
            }
        }
        Ok(cache)
    }

    pub fn insert(&mut self, w: &Witness, seed: u64) {
        let (canonical, g) = canonicalize_with(w.combo());
        if let Some(t) = w.transport(g) {
            self.witnesses.entry(canonical).or_insert((t, seed));
        }
    }

    /// A verified witness for `combo`, transported from the stored orbit member.
    pub fn get(&self, combo: &Combo) -> Option<(Witness, u64)> {
        let (canonical, g) = canonicalize_with(combo);
        let (w, seed) = self.witnesses.get(&canonical)?;
        Some((w.transport(g)?, *seed))
    }

    pub fn len(&self) -> usize {
        self.witnesses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn record(&mut self, s: &ComboStatus) {
        if let Status::Realized { witness, .. } = &s.status {
            self.insert(witness, s.seed);
        }
    }

    /// Rewrites the cache file with every witness, in canonical order.
    pub fn save(&self) -> Result<(), CliError> {
        let Some(path) = &self.path else {
            return Ok(());
        };
        let tmp = path.with_extension("tmp");
        let mut out =
            io::BufWriter::new(fs::File::create(&tmp).map_err(|e| CliError::io(&tmp, e))?);
        for (w, seed) in self.witnesses.values() {
            let status = crate::records::cached_status(w.clone(), *seed);
            writeln!(out, "{}", Record::from_status(&status).to_line())
                .map_err(|e| CliError::io(&tmp, e))?;
        }
        out.flush().map_err(|e| CliError::io(&tmp, e))?;
        drop(out);
        fs::rename(&tmp, path).map_err(|e| CliError::io(path, e))
    }
}

//! KL tables persisted as JSON under `$WHITTAKER_KL_CACHE`, with a SHA-256
//! checksum of the rows. A file that fails to parse or to match its checksum
//! is ignored and rewritten.

use std::fmt::Write as _;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use whittaker::klpoly::KlTable;
use whittaker::WeylSubgroup;

pub const ENV: &str = "WHITTAKER_KL_CACHE";

pub type Row = (String, String, String);

#[derive(Serialize, Deserialize)]
struct Entry {
    group: String,
    checksum: String,
    rows: Vec<Row>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Off,
    Hit,
    Miss,
    Corrupt,
}

fn checksum(group: &str, rows: &[Row]) -> String {
    let mut h = Sha256::new();
    h.update(group.as_bytes());
    for (x, w, p) in rows {
        for part in [x, w, p] {
            h.update((part.len() as u64).to_le_bytes());
            h.update(part.as_bytes());
        }
    }
    h.finalize().iter().fold(String::new(), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

pub fn path_for(dir: &str, group: &str) -> PathBuf {
    PathBuf::from(dir).join(format!("kl-{group}.json"))
}

fn load(dir: &str, group: &str) -> Result<Option<Vec<Row>>, ()> {
    let Ok(text) = std::fs::read_to_string(path_for(dir, group)) else { return Ok(None) };
    let entry: Entry = serde_json::from_str(&text).map_err(|_| ())?;
    if entry.group != group || entry.checksum != checksum(group, &entry.rows) {
        return Err(());
    }
    Ok(Some(entry.rows))
}

fn store(dir: &str, group: &str, rows: &[Row]) {
    let entry = Entry { group: group.into(), checksum: checksum(group, rows), rows: rows.to_vec() };
    if std::fs::create_dir_all(dir).is_ok() {
        // A failed write only costs a recomputation next time.
        let _ = std::fs::write(path_for(dir, group), serde_json::to_string(&entry).unwrap_or_default());
    }
}

/// The rows `(x, w, P_{x,w})` of the table of `g`, named `name`.
pub fn kl_rows(name: &str, g: &WeylSubgroup) -> (Vec<Row>, Status) {
    let Ok(dir) = std::env::var(ENV) else { return (KlTable::shared(g).rows(), Status::Off) };
    let status = match load(&dir, name) {
        Ok(Some(rows)) => return (rows, Status::Hit),
        Ok(None) => Status::Miss,
        Err(()) => Status::Corrupt,
    };
    let rows = KlTable::shared(g).rows();
    store(&dir, name, &rows);
    (rows, status)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checksum_separates_fields() {
        let a = vec![("s1".to_string(), "s1s2".to_string(), "1".to_string())];
        let b = vec![("s1s".to_string(), "1s2".to_string(), "1".to_string())];
        assert_ne!(checksum("A2", &a), checksum("A2", &b));
        assert_eq!(checksum("A2", &a).len(), 64);
    }
}

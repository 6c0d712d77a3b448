//! Output formats and catalog persistence.
//!
//! * planar_code: ASCII header `>>planar_code<<`, then per map one byte
//!   for the vertex count followed by each vertex's rotation-ordered
//!   neighbor list (1-based vertex bytes) terminated by 0.
//! * dot: plain undirected graphviz output, one edge per map edge.
//! * json: one record per map with a stable field order, arrays sorted
//!   by canonical code.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::catalog::CatalogEntry;
use crate::map::CombinatorialMap;
use crate::{Result, RingError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    PlanarCode,
    Dot,
    Json,
}

impl std::str::FromStr for ExportFormat {
    type Err = RingError;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "planar_code" | "planar-code" | "plc" => Ok(ExportFormat::PlanarCode),
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            other => Err(RingError::Parameter(format!("unknown format: {other}"))),
        }
    }
}

/// Serialized per-map record; field order is the file format.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RecordJson {
    pub p: u32,
    pub q: u32,
    pub n: u32,
    pub inner_seq: String,
    pub outer_seq: String,
    #[serde(rename = "V")]
    pub v: u32,
    #[serde(rename = "E")]
    pub e: u32,
    #[serde(rename = "F")]
    pub f: u32,
    pub aut_order: u64,
    pub self_complementary: bool,
    pub two_paths: bool,
    pub non_polyhedral: bool,
    pub canonical_hex: String,
}

impl RecordJson {
    pub fn from_entry(e: &CatalogEntry) -> Self {
        let r = &e.record;
        RecordJson {
            p: r.p,
            q: r.q,
            n: r.n,
            inner_seq: r.inner_seq.to_string(),
            outer_seq: r.outer_seq.to_string(),
            v: r.v,
            e: r.e,
            f: r.f,
            aut_order: r.aut_order,
            self_complementary: r.self_complementary,
            two_paths: r.two_paths,
            non_polyhedral: r.non_polyhedral,
            canonical_hex: r.canonical.to_hex(),
        }
    }
}

pub fn records_json(entries: &[CatalogEntry]) -> Vec<RecordJson> {
    let mut recs: Vec<RecordJson> = entries.iter().map(RecordJson::from_entry).collect();
    recs.sort_by(|a, b| a.canonical_hex.cmp(&b.canonical_hex));
    recs
}

/// planar_code bytes for a list of maps.
pub fn planar_code(maps: &[&CombinatorialMap]) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    out.extend_from_slice(b">>planar_code<<");
    for m in maps {
        let nv = m.num_vertices();
        if nv > 255 {
            return Err(RingError::Parameter("planar_code supports at most 255 vertices".into()));
        }
        out.push(nv as u8);
        for v in 0..nv {
            for &d in m.vertex_darts(v) {
                out.push(m.head(d) as u8 + 1);
            }
            out.push(0);
        }
    }
    Ok(out)
}

/// Graphviz output for one map.
pub fn dot(map: &CombinatorialMap, name: &str) -> String {
    let mut s = format!("graph {name} {{\n");
    for d in 0..map.num_darts() as u32 {
        if d < map.alpha(d) {
            s.push_str(&format!("  v{} -- v{};\n", map.tail(d), map.head(d)));
        }
    }
    s.push_str("}\n");
    s
}

/// Outcome of persisting one (p, q, n) result file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PersistOutcome {
    Created,
    Unchanged,
    /// The file existed with different content; lists codes only present
    /// before and only present now. The file is overwritten.
    Changed { removed: Vec<String>, added: Vec<String> },
}

fn result_path(dir: &Path, p: u32, q: u32, n: u32) -> PathBuf {
    dir.join(format!("{p}_{q}_{n}.json"))
}

/// Write the catalog for one parameter triple, comparing against any
/// existing file first.
pub fn persist_catalog(
    dir: &Path,
    p: u32,
    q: u32,
    n: u32,
    entries: &[CatalogEntry],
) -> Result<PersistOutcome> {
    std::fs::create_dir_all(dir)?;
    let path = result_path(dir, p, q, n);
    let recs = records_json(entries);
    let outcome = if path.exists() {
        let old: Vec<RecordJson> = serde_json::from_str(&std::fs::read_to_string(&path)?)?;
        if old == recs {
            PersistOutcome::Unchanged
        } else {
            let old_codes: BTreeSet<String> =
                old.iter().map(|r| r.canonical_hex.clone()).collect();
            let new_codes: BTreeSet<String> =
                recs.iter().map(|r| r.canonical_hex.clone()).collect();
            PersistOutcome::Changed {
                removed: old_codes.difference(&new_codes).cloned().collect(),
                added: new_codes.difference(&old_codes).cloned().collect(),
            }
        }
    } else {
        PersistOutcome::Created
    };
    let mut f = std::fs::File::create(&path)?;
    f.write_all(serde_json::to_string_pretty(&recs)?.as_bytes())?;
    Ok(outcome)
}

pub fn load_catalog(dir: &Path, p: u32, q: u32, n: u32) -> Result<Vec<RecordJson>> {
    let path = result_path(dir, p, q, n);
    Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
}

/// Export entries to the destination: json and planar_code produce one
/// file, dot one file per map. Returns the written paths.
pub fn export(
    entries: &[CatalogEntry],
    format: ExportFormat,
    destination: &Path,
) -> Result<Vec<PathBuf>> {
    if entries.is_empty() {
        return Ok(Vec::new());
    }
    let (p, q, n) = {
        let r = &entries[0].record;
        (r.p, r.q, r.n)
    };
    std::fs::create_dir_all(destination)?;
    let mut written = Vec::new();
    match format {
        ExportFormat::Json => {
            let path = result_path(destination, p, q, n);
            std::fs::write(&path, serde_json::to_string_pretty(&records_json(entries))?)?;
            written.push(path);
        }
        ExportFormat::PlanarCode => {
            let path = destination.join(format!("{p}_{q}_{n}.plc"));
            let maps: Vec<&CombinatorialMap> = entries.iter().map(|e| &e.map).collect();
            std::fs::write(&path, planar_code(&maps)?)?;
            written.push(path);
        }
        ExportFormat::Dot => {
            for (i, e) in entries.iter().enumerate() {
                let path = destination.join(format!("{p}_{q}_{n}_{i}.dot"));
                std::fs::write(&path, dot(&e.map, &format!("m{i}")))?;
                written.push(path);
            }
        }
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assemble::prism;
    use crate::catalog::entry_from_map;

    #[test]
    fn cube_planar_code_is_48_bytes() {
        let cube = prism(4);
        let bytes = planar_code(&[&cube]).unwrap();
        assert_eq!(bytes.len(), 15 + 1 + 8 * 4);
        assert_eq!(&bytes[..15], b">>planar_code<<");
        assert_eq!(bytes[15], 8);
        // every vertex block: three nonzero neighbor bytes then 0
        let mut pos = 16;
        for _ in 0..8 {
            for _ in 0..3 {
                assert!(bytes[pos] >= 1 && bytes[pos] <= 8);
                pos += 1;
            }
            assert_eq!(bytes[pos], 0);
            pos += 1;
        }
    }

    #[test]
    fn dot_edge_count_matches() {
        let m = prism(5);
        let text = dot(&m, "g");
        let edges = text.matches(" -- ").count();
        assert_eq!(edges, m.num_edges());
    }

    #[test]
    fn persist_roundtrip_and_diff() {
        let dir = std::env::temp_dir().join(format!("ringmap_test_{}", std::process::id()));
        let _ = std::fs::remove_dir_all(&dir);
        let entry = entry_from_map(3, 4, 3, prism(3)).unwrap();
        let one = vec![entry];
        assert_eq!(
            persist_catalog(&dir, 3, 4, 3, &one).unwrap(),
            PersistOutcome::Created
        );
        assert_eq!(
            persist_catalog(&dir, 3, 4, 3, &one).unwrap(),
            PersistOutcome::Unchanged
        );
        let loaded = load_catalog(&dir, 3, 4, 3).unwrap();
        assert_eq!(loaded.len(), 1);
        assert_eq!(loaded[0].v, 6);
        match persist_catalog(&dir, 3, 4, 3, &[]).unwrap() {
            PersistOutcome::Changed { removed, added } => {
                assert_eq!(removed.len(), 1);
                assert!(added.is_empty());
            }
            other => panic!("expected change report, got {other:?}"),
        }
        let _ = std::fs::remove_dir_all(&dir);
    }

    #[test]
    fn json_records_are_sorted_and_complete() {
        let caps = crate::Caps::default();
        let entries = crate::catalog::enumerate_maps(5, 5, 6, caps).unwrap();
        let recs = records_json(&entries);
        assert_eq!(recs.len(), 2);
        assert!(recs[0].canonical_hex <= recs[1].canonical_hex);
        let text = serde_json::to_string(&recs).unwrap();
        for key in [
            "\"p\"",
            "\"q\"",
            "\"n\"",
            "\"inner_seq\"",
            "\"outer_seq\"",
            "\"V\"",
            "\"E\"",
            "\"F\"",
            "\"aut_order\"",
            "\"self_complementary\"",
            "\"two_paths\"",
            "\"non_polyhedral\"",
            "\"canonical_hex\"",
        ] {
            assert!(text.contains(key), "missing {key}");
        }
    }
}

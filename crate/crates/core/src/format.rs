//! Plain-text matrix and map-table files.
//!
//! ```text
//! ring p=2 s=3 n=3 rows=2
//! 1 2 3
//! 0 4 4
//! ```
//!
//! ```text
//! table p=2 s=2 target_s=1 width=2 entries=4
//! 0 0 0
//! 1 0 1
//! 2 1 1
//! 3 1 0
//! ```
//!
//! Blank lines and lines starting with `#` are ignored when parsing. Matrix
//! entries may be negative or unreduced; they are reduced mod `p^s`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ring::{RingMatrix, RingSpec};

/// The full table of an element map `Z_{p^s} -> Z_{p^t}^width`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapTable {
    domain: RingSpec,
    codomain: RingSpec,
    images: Vec<Vec<u64>>,
}

impl MapTable {
    pub fn new(domain: RingSpec, codomain: RingSpec, images: Vec<Vec<u64>>) -> Result<Self> {
        if images.len() as u64 != domain.modulus() {
            return Err(Error::LengthMismatch { left: domain.modulus() as usize, right: images.len() });
        }
        let width = images.first().map_or(0, Vec::len);
        for img in &images {
            if img.len() != width {
                return Err(Error::LengthMismatch { left: width, right: img.len() });
            }
            for &x in img {
                codomain.check(x)?;
            }
        }
        Ok(Self { domain, codomain, images })
    }

    pub fn domain(&self) -> RingSpec {
        self.domain
    }

    pub fn codomain(&self) -> RingSpec {
        self.codomain
    }

    pub fn width(&self) -> usize {
        self.images.first().map_or(0, Vec::len)
    }

    pub fn image(&self, u: u64) -> &[u64] {
        &self.images[u as usize]
    }

    pub fn images(&self) -> &[Vec<u64>] {
        &self.images
    }
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_header<'a>(line: usize, text: &'a str, tag: &str) -> Result<BTreeMap<&'a str, u64>> {
    let mut words = text.split_whitespace();
    if words.next() != Some(tag) {
        return Err(Error::Parse { line, msg: format!("expected a `{tag}` header") });
    }
    let mut fields = BTreeMap::new();
    for w in words {
        let (k, v) = w
            .split_once('=')
            .ok_or_else(|| Error::Parse { line, msg: format!("malformed header field `{w}`") })?;
        let v = v
            .parse()
            .map_err(|_| Error::Parse { line, msg: format!("header field `{k}` is not a non-negative integer") })?;
        fields.insert(k, v);
    }
    Ok(fields)
}

fn field(fields: &BTreeMap<&str, u64>, line: usize, key: &str) -> Result<u64> {
    fields.get(key).copied().ok_or_else(|| Error::Parse { line, msg: format!("header is missing `{key}`") })
}

fn ring(p: u64, s: u64, line: usize) -> Result<RingSpec> {
    let s = u32::try_from(s).map_err(|_| Error::Parse { line, msg: "s out of range".into() })?;
    RingSpec::new(p, s).map_err(|e| Error::Parse { line, msg: e.to_string() })
}

fn parse_ints(line: usize, text: &str) -> Result<Vec<i128>> {
    text.split_whitespace()
        .map(|t| t.parse::<i128>().map_err(|_| Error::Parse { line, msg: format!("`{t}` is not an integer") }))
        .collect()
}

pub fn parse_matrix(text: &str) -> Result<RingMatrix> {
    let mut lines = data_lines(text);
    let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
    let fields = parse_header(hl, header, "ring")?;
    let spec = ring(field(&fields, hl, "p")?, field(&fields, hl, "s")?, hl)?;
    let n = field(&fields, hl, "n")? as usize;
    let nrows = field(&fields, hl, "rows")? as usize;
    let mut rows = Vec::with_capacity(nrows);
    let mut last = hl;
    for (line, text) in lines {
        let row = parse_ints(line, text)?;
        if row.len() != n {
            return Err(Error::Parse { line, msg: format!("expected {n} entries, found {}", row.len()) });
        }
        rows.push(row.into_iter().map(|x| spec.reduce(x)).collect());
        last = line;
    }
    if rows.len() != nrows {
        return Err(Error::Parse { line: last, msg: format!("header declares {nrows} rows, found {}", rows.len()) });
    }
    Ok(RingMatrix::from_reduced(spec, n, rows))
}

pub fn write_matrix(m: &RingMatrix) -> String {
    let spec = m.spec();
    let mut out = format!("ring p={} s={} n={} rows={}\n", spec.p(), spec.s(), m.ncols(), m.nrows());
    out.push_str(&m.to_string());
    out
}

pub fn parse_table(text: &str) -> Result<MapTable> {
    let mut lines = data_lines(text);
    let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
    let fields = parse_header(hl, header, "table")?;
    let p = field(&fields, hl, "p")?;
    let domain = ring(p, field(&fields, hl, "s")?, hl)?;
    let codomain = ring(p, field(&fields, hl, "target_s")?, hl)?;
    let width = field(&fields, hl, "width")? as usize;
    let entries = field(&fields, hl, "entries")?;
    if entries != domain.modulus() {
        return Err(Error::Parse { line: hl, msg: format!("a table over {domain} needs {} entries", domain.modulus()) });
    }
    let mut images = Vec::with_capacity(entries as usize);
    for (line, text) in lines {
        let row = parse_ints(line, text)?;
        if row.len() != width + 1 {
            return Err(Error::Parse { line, msg: format!("expected an index and {width} components") });
        }
        if row[0] != images.len() as i128 {
            return Err(Error::Parse { line, msg: format!("expected index {}, found {}", images.len(), row[0]) });
        }
        let img = row[1..]
            .iter()
            .map(|&x| {
                u64::try_from(x)
                    .ok()
                    .filter(|&x| x < codomain.modulus())
                    .ok_or_else(|| Error::Parse { line, msg: format!("component {x} not in {codomain}") })
            })
            .collect::<Result<Vec<_>>>()?;
        images.push(img);
    }
    if images.len() as u64 != entries {
        return Err(Error::Parse { line: hl, msg: format!("declared {entries} entries, found {}", images.len()) });
    }
    MapTable::new(domain, codomain, images)
}

pub fn write_table(t: &MapTable) -> String {
    let mut out = format!(
        "table p={} s={} target_s={} width={} entries={}\n",
        t.domain.p(),
        t.domain.s(),
        t.codomain.s(),
        t.width(),
        t.images.len()
    );
    for (u, img) in t.images.iter().enumerate() {
        let _ = write!(out, "{u}");
        for x in img {
            let _ = write!(out, " {x}");
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_round_trip() {
        let text = "ring p=2 s=3 n=3 rows=2\n1 2 3\n0 4 4\n";
        let m = parse_matrix(text).unwrap();
        assert_eq!(m.rows(), &[vec![1, 2, 3], vec![0, 4, 4]]);
        assert_eq!(write_matrix(&m), text);
    }

    #[test]
    fn matrix_reduces_and_skips_comments() {
        let m = parse_matrix("# octo\nring p=3 s=1 n=2 rows=1\n\n-1 7\n").unwrap();
        assert_eq!(m.rows(), &[vec![2, 1]]);
    }

    #[test]
    fn empty_matrix() {
        let m = parse_matrix("ring p=2 s=2 n=3 rows=0\n").unwrap();
        assert_eq!((m.nrows(), m.ncols()), (0, 3));
        assert_eq!(write_matrix(&m), "ring p=2 s=2 n=3 rows=0\n");
    }

    #[test]
    fn matrix_errors() {
        assert!(matches!(parse_matrix(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_matrix("ring p=4 s=2 n=1 rows=0"), Err(Error::Parse { .. })));
        assert!(matches!(parse_matrix("ring p=2 s=2 n=2 rows=1\n1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_matrix("ring p=2 s=2 n=1 rows=2\n1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_matrix("ring p=2 s=2 n=1 rows=1\nx\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_matrix("matrix p=2 s=2 n=1 rows=0"), Err(Error::Parse { .. })));
        assert!(matches!(parse_matrix("ring p=2 n=1 rows=0"), Err(Error::Parse { .. })));
    }

    #[test]
    fn table_round_trip() {
        let text = "table p=2 s=2 target_s=1 width=2 entries=4\n0 0 0\n1 0 1\n2 1 1\n3 1 0\n";
        let t = parse_table(text).unwrap();
        assert_eq!(t.image(2), &[1, 1]);
        assert_eq!(write_table(&t), text);
    }

    #[test]
    fn table_errors() {
        let bad_index = "table p=2 s=1 target_s=1 width=1 entries=2\n0 0\n2 1\n";
        assert!(matches!(parse_table(bad_index), Err(Error::Parse { line: 3, .. })));
        let bad_value = "table p=2 s=1 target_s=1 width=1 entries=2\n0 0\n1 2\n";
        assert!(matches!(parse_table(bad_value), Err(Error::Parse { line: 3, .. })));
        let short = "table p=2 s=2 target_s=1 width=1 entries=4\n0 0\n";
        assert!(matches!(parse_table(short), Err(Error::Parse { .. })));
    }
}

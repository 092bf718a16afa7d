//! Deterministic serialization of built objects.
//!
//! A document carries a header (object name, construction mode, `n`,
//! dimension, tensor arity, optional evaluation point, tool version) and
//! either one sparse matrix or one record per sigma pair. Scalars serialize
//! as `[s_exponent, "numerator", "denominator"]` triples sorted by ascending
//! exponent; entries are 1-based and sorted row-major. The JSON emitter
//! writes keys in sorted order with a fixed layout, so identical inputs
//! produce identical bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::basis::BasisTable;
use crate::error::Error;
use crate::matrix::GradedMatrix;
use crate::scalar::{Laurent, Rational};

pub const FORMAT_VERSION: &str = env!("CARGO_PKG_VERSION");

pub type CoeffTriple = (i64, BigInt, BigInt);

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatrixEntry {
    /// 1-based row index.
    pub row: usize,
    /// 1-based column index.
    pub col: usize,
    pub coeffs: Vec<CoeffTriple>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairRecord {
    /// 1-based positions of the pair, higher weight first.
    pub b: usize,
    pub a: usize,
    pub entries: Vec<MatrixEntry>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Payload {
    Matrix(Vec<MatrixEntry>),
    Records(Vec<PairRecord>),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExportDocument {
    pub version: String,
    pub object: String,
    pub mode: String,
    pub n: usize,
    pub dim: usize,
    pub arity: usize,
    pub at_q: Option<Rational>,
    pub payload: Payload,
}

fn laurent_to_triples(v: &Laurent) -> Vec<CoeffTriple> {
    v.terms()
        .map(|(e, c)| (e, c.numer().clone(), c.denom().clone()))
        .collect()
}

fn triples_to_laurent(triples: &[CoeffTriple]) -> Laurent {
    Laurent::from_terms(
        triples
            .iter()
            .map(|(e, num, den)| (*e, Rational::new(num.clone(), den.clone()))),
    )
}

fn matrix_entries(m: &GradedMatrix) -> Vec<MatrixEntry> {
    m.entries()
        .map(|(r, c, v)| MatrixEntry {
            row: r + 1,
            col: c + 1,
            coeffs: laurent_to_triples(v),
        })
        .collect()
}

impl ExportDocument {
    pub fn from_matrix(
        object: &str,
        mode: &str,
        at_q: Option<Rational>,
        n: usize,
        m: &GradedMatrix,
    ) -> Self {
        ExportDocument {
            version: FORMAT_VERSION.to_string(),
            object: object.to_string(),
            mode: mode.to_string(),
            n,
            dim: m.table().dim,
            arity: m.arity(),
            at_q,
            payload: Payload::Matrix(matrix_entries(m)),
        }
    }

    pub fn from_sigma_table(
        mode: &str,
        at_q: Option<Rational>,
        n: usize,
        dim: usize,
        mats: &BTreeMap<(usize, usize), GradedMatrix>,
    ) -> Self {
        let records = mats
            .iter()
            .map(|(&(b, a), m)| PairRecord {
                b: b + 1,
                a: a + 1,
                entries: matrix_entries(m),
            })
            .collect();
        ExportDocument {
            version: FORMAT_VERSION.to_string(),
            object: "sigma-table".to_string(),
            mode: mode.to_string(),
            n,
            dim,
            arity: 1,
            at_q,
            payload: Payload::Records(records),
        }
    }

    /// Reconstructs the matrix of a `Matrix` document.
    pub fn matrix(&self) -> Result<GradedMatrix, Error> {
        let entries = match &self.payload {
            Payload::Matrix(entries) => entries,
            Payload::Records(_) => {
                return Err(Error::Parse(
                    "document holds a sigma table, not a matrix".into(),
                ))
            }
        };
        let table = BasisTable::new(self.n)?;
        if table.dim != self.dim {
            return Err(Error::Parse(format!(
                "dim {} inconsistent with n {}",
                self.dim, self.n
            )));
        }
        entries_to_matrix(entries, &table, self.arity)
    }

    /// Reconstructs the per-pair matrices of a `Records` document.
    pub fn record_matrices(&self) -> Result<BTreeMap<(usize, usize), GradedMatrix>, Error> {
        let records = match &self.payload {
            Payload::Records(records) => records,
            Payload::Matrix(_) => {
                return Err(Error::Parse(
                    "document holds a matrix, not a sigma table".into(),
                ))
            }
        };
        let table = BasisTable::new(self.n)?;
        let mut out = BTreeMap::new();
        for rec in records {
            let m = entries_to_matrix(&rec.entries, &table, 1)?;
            out.insert((rec.b - 1, rec.a - 1), m);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        let mut out = String::new();
        out.push_str("{\n");
        let _ = writeln!(out, "  \"arity\": {},", self.arity);
        match &self.at_q {
            Some(q) => {
                let _ = writeln!(out, "  \"at_q\": \"{}/{}\",", q.numer(), q.denom());
            }
            None => out.push_str("  \"at_q\": null,\n"),
        }
        let _ = writeln!(out, "  \"dim\": {},", self.dim);
        match &self.payload {
            Payload::Matrix(entries) => {
                out.push_str("  \"entries\": [");
                write_entry_list(&mut out, entries, "  ");
                out.push_str("],\n");
            }
            Payload::Records(_) => {}
        }
        let _ = writeln!(out, "  \"mode\": \"{}\",", escape(&self.mode));
        let _ = writeln!(out, "  \"n\": {},", self.n);
        let _ = writeln!(out, "  \"object\": \"{}\",", escape(&self.object));
        if let Payload::Records(records) = &self.payload {
            out.push_str("  \"records\": [");
            for (i, rec) in records.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str("\n    {\"entries\": [");
                write_entry_list(&mut out, &rec.entries, "    ");
                let _ = write!(out, "], \"pair\": [{}, {}]}}", rec.b, rec.a);
            }
            if !records.is_empty() {
                out.push_str("\n  ");
            }
            out.push_str("],\n");
        }
        let _ = writeln!(out, "  \"version\": \"{}\"", escape(&self.version));
        out.push_str("}\n");
        out
    }

    /// A human-oriented dense grid: header lines, then one line per row with
    /// tab-separated cells, zeros printed as dots.
    pub fn to_dense_text(&self) -> String {
        let mut out = String::new();
        let at_q = match &self.at_q {
            Some(q) => format!("{}/{}", q.numer(), q.denom()),
            None => "-".to_string(),
        };
        let _ = writeln!(
            out,
            "# object={} n={} dim={} arity={} mode={} at_q={} version={}",
            self.object, self.n, self.dim, self.arity, self.mode, at_q, self.version
        );
        match &self.payload {
            Payload::Matrix(entries) => {
                let side = self.dim.pow(self.arity as u32);
                write_dense_grid(&mut out, entries, side);
            }
            Payload::Records(records) => {
                for rec in records {
                    let _ = writeln!(out, "# pair b={} a={}", rec.b, rec.a);
                    write_dense_grid(&mut out, &rec.entries, self.dim);
                }
            }
        }
        out
    }

    pub fn parse_json(text: &str) -> Result<Self, Error> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let obj = value
            .as_object()
            .ok_or_else(|| parse_err("top level must be an object"))?;
        let version = get_str(obj, "version")?;
        let object = get_str(obj, "object")?;
        let mode = get_str(obj, "mode")?;
        let n = get_usize(obj, "n")?;
        let dim = get_usize(obj, "dim")?;
        let arity = get_usize(obj, "arity")?;
        let at_q = match obj.get("at_q") {
            None | Some(serde_json::Value::Null) => None,
            Some(serde_json::Value::String(s)) => Some(parse_rational(s)?),
            Some(_) => return Err(parse_err("at_q must be null or \"num/den\"")),
        };
        let payload = if let Some(entries) = obj.get("entries") {
            Payload::Matrix(parse_entries(entries)?)
        } else if let Some(records) = obj.get("records") {
            let arr = records
                .as_array()
                .ok_or_else(|| parse_err("records must be an array"))?;
            let mut out = Vec::with_capacity(arr.len());
            for rec in arr {
                let rec_obj = rec
                    .as_object()
                    .ok_or_else(|| parse_err("record must be an object"))?;
                let pair = rec_obj
                    .get("pair")
                    .and_then(|p| p.as_array())
                    .ok_or_else(|| parse_err("record needs a pair"))?;
                if pair.len() != 2 {
                    return Err(parse_err("pair must have two positions"));
                }
                let b = pair[0]
                    .as_u64()
                    .ok_or_else(|| parse_err("bad pair index"))? as usize;
                let a = pair[1]
                    .as_u64()
                    .ok_or_else(|| parse_err("bad pair index"))? as usize;
                let entries = rec_obj
                    .get("entries")
                    .ok_or_else(|| parse_err("record needs entries"))?;
                out.push(PairRecord {
                    b,
                    a,
                    entries: parse_entries(entries)?,
                });
            }
            Payload::Records(out)
        } else {
            return Err(parse_err("document needs entries or records"));
        };
        Ok(ExportDocument {
            version,
            object,
            mode,
            n,
            dim,
            arity,
            at_q,
            payload,
        })
    }
}

fn entries_to_matrix(
    entries: &[MatrixEntry],
    table: &Arc<BasisTable>,
    arity: usize,
) -> Result<GradedMatrix, Error> {
    let side = table.side(arity);
    let mut m = GradedMatrix::zero(table.clone(), arity);
    for e in entries {
        if e.row == 0 || e.col == 0 || e.row > side || e.col > side {
            return Err(Error::Parse(format!(
                "entry ({}, {}) out of range",
                e.row, e.col
            )));
        }
        m.insert_add(e.row - 1, e.col - 1, triples_to_laurent(&e.coeffs));
    }
    Ok(m)
}

fn write_entry_list(out: &mut String, entries: &[MatrixEntry], indent: &str) {
    for (i, e) in entries.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "\n{indent}  [{}, {}, [", e.row, e.col);
        for (j, (exp, num, den)) in e.coeffs.iter().enumerate() {
            if j > 0 {
                out.push_str(", ");
            }
            let _ = write!(out, "[{exp}, \"{num}\", \"{den}\"]");
        }
        out.push_str("]]");
    }
    if !entries.is_empty() {
        out.push('\n');
        out.push_str(indent);
    }
}

fn write_dense_grid(out: &mut String, entries: &[MatrixEntry], side: usize) {
    let mut grid: BTreeMap<(usize, usize), String> = BTreeMap::new();
    for e in entries {
        grid.insert((e.row, e.col), triples_to_laurent(&e.coeffs).to_string());
    }
    for r in 1..=side {
        let cells: Vec<String> = (1..=side)
            .map(|c| {
                grid.get(&(r, c))
                    .cloned()
                    .unwrap_or_else(|| ".".to_string())
            })
            .collect();
        let _ = writeln!(out, "{}", cells.join("\t"));
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn parse_err(msg: &str) -> Error {
    Error::Parse(msg.to_string())
}

fn get_str(obj: &serde_json::Map<String, serde_json::Value>, key: &str) -> Result<String, Error> {
    obj.get(key)
        .and_then(|v| v.as_str())
        .map(|s| s.to_string())
        .ok_or_else(|| parse_err(&format!("missing string field `{key}`")))
}

fn get_usize(obj: &serde_json::Map<String, serde_json::Value>, key: &str) -> Result<usize, Error> {
    obj.get(key)
        .and_then(|v| v.as_u64())
        .map(|v| v as usize)
        .ok_or_else(|| parse_err(&format!("missing integer field `{key}`")))
}

/// Parses `"num/den"` or a bare integer string into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let (num, den) = match text.split_once('/') {
        Some((num, den)) => (num.trim(), den.trim()),
        None => (text.trim(), "1"),
    };
    let num = BigInt::from_str(num).map_err(|e| Error::Parse(format!("bad numerator: {e}")))?;
    let den = BigInt::from_str(den).map_err(|e| Error::Parse(format!("bad denominator: {e}")))?;
    if den.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(Rational::new(num, den))
}

use num_traits::Zero;

fn parse_entries(value: &serde_json::Value) -> Result<Vec<MatrixEntry>, Error> {
    let arr = value
        .as_array()
        .ok_or_else(|| parse_err("entries must be an array"))?;
    let mut out = Vec::with_capacity(arr.len());
    for entry in arr {
        let parts = entry
            .as_array()
            .ok_or_else(|| parse_err("entry must be an array"))?;
        if parts.len() != 3 {
            return Err(parse_err("entry must be [row, col, coeffs]"));
        }
        let row = parts[0].as_u64().ok_or_else(|| parse_err("bad row"))? as usize;
        let col = parts[1].as_u64().ok_or_else(|| parse_err("bad col"))? as usize;
        let coeffs_arr = parts[2]
            .as_array()
            .ok_or_else(|| parse_err("bad coefficient list"))?;
        let mut coeffs = Vec::with_capacity(coeffs_arr.len());
        for triple in coeffs_arr {
            let t = triple
                .as_array()
                .ok_or_else(|| parse_err("coefficient must be a triple"))?;
            if t.len() != 3 {
                return Err(parse_err("coefficient must be [exp, num, den]"));
            }
            let exp = t[0].as_i64().ok_or_else(|| parse_err("bad exponent"))?;
            let num = t[1]
                .as_str()
                .ok_or_else(|| parse_err("numerator must be a string"))?;
            let den = t[2]
                .as_str()
                .ok_or_else(|| parse_err("denominator must be a string"))?;
            let num = BigInt::from_str(num).map_err(|e| Error::Parse(e.to_string()))?;
            let den = BigInt::from_str(den).map_err(|e| Error::Parse(e.to_string()))?;
            if den <= BigInt::from(0) {
                return Err(parse_err("denominator must be positive"));
            }
            coeffs.push((exp, num, den));
        }
        out.push(MatrixEntry { row, col, coeffs });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rmatrix::{build_vector_r, RMode};
    use crate::scalar::rat;
    use proptest::prelude::*;

    #[test]
    fn header_and_first_entry_for_n2() {
        let r = build_vector_r(2, RMode::ClosedForm).unwrap();
        let doc = ExportDocument::from_matrix("vector-R", "closed-form", None, 2, &r);
        assert_eq!(doc.dim, 4);
        assert_eq!(doc.arity, 2);
        match &doc.payload {
            Payload::Matrix(entries) => {
                // diagonal entry q^{(d1, d1)} = s^-2 at 1-based (1, 1)
                let first = &entries[0];
                assert_eq!((first.row, first.col), (1, 1));
                assert_eq!(first.coeffs, vec![(-2, BigInt::from(1), BigInt::from(1))]);
            }
            _ => panic!("expected matrix payload"),
        }
    }

    #[test]
    fn json_round_trip_for_built_objects() {
        let r = build_vector_r(2, RMode::ClosedForm).unwrap();
        let doc = ExportDocument::from_matrix("vector-R", "closed-form", None, 2, &r);
        let text = doc.to_json();
        let back = ExportDocument::parse_json(&text).unwrap();
        assert_eq!(doc, back);
        assert_eq!(back.matrix().unwrap(), r);
        // byte determinism
        assert_eq!(text, back.to_json());
    }

    #[test]
    fn sigma_table_document_round_trips() {
        use crate::rep::Rep;
        use crate::sigma::SigmaTable;
        let rep = Rep::vector(2).unwrap();
        let mats = SigmaTable::extended(2).unwrap().evaluate(&rep);
        let doc = ExportDocument::from_sigma_table("recursion", None, 2, 4, &mats);
        match &doc.payload {
            Payload::Records(records) => {
                assert_eq!(records.len(), 6);
                // the (even1, even2) record is empty
                let zero = records.iter().find(|r| (r.b, r.a) == (2, 3)).unwrap();
                assert!(zero.entries.is_empty());
            }
            _ => panic!("expected records"),
        }
        let back = ExportDocument::parse_json(&doc.to_json()).unwrap();
        assert_eq!(doc, back);
        assert_eq!(back.record_matrices().unwrap(), mats);
    }

    #[test]
    fn evaluated_document_carries_the_point() {
        let r = build_vector_r(2, RMode::ClosedForm)
            .unwrap()
            .eval_q(&rat(4, 1))
            .unwrap();
        let doc = ExportDocument::from_matrix("vector-R", "closed-form", Some(rat(4, 1)), 2, &r);
        let back = ExportDocument::parse_json(&doc.to_json()).unwrap();
        assert_eq!(back.at_q, Some(rat(4, 1)));
        assert_eq!(back.matrix().unwrap(), r);
    }

    #[test]
    fn dense_text_has_full_grid() {
        let r = build_vector_r(2, RMode::ClosedForm).unwrap();
        let doc = ExportDocument::from_matrix("vector-R", "closed-form", None, 2, &r);
        let text = doc.to_dense_text();
        // header + 16 rows
        assert_eq!(text.lines().count(), 17);
        assert!(text.lines().nth(1).unwrap().starts_with("s^-2\t"));
    }

    #[test]
    fn parse_rational_accepts_both_forms() {
        assert_eq!(parse_rational("3/2").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("4").unwrap(), rat(4, 1));
        assert_eq!(parse_rational("-5/10").unwrap(), rat(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    proptest! {
        #[test]
        fn round_trip_random_matrices(entries in proptest::collection::vec(
            (0usize..16, 0usize..16, -4i64..=4, -9i64..=9, 1i64..=4), 0..10)) {
            let table = BasisTable::new(2).unwrap();
            let mut m = GradedMatrix::zero(table, 2);
            for (r, c, e, num, den) in entries {
                m.insert_add(r, c, Laurent::monomial(e, rat(num, den)));
            }
            let doc = ExportDocument::from_matrix("vector-R", "closed-form", None, 2, &m);
            let back = ExportDocument::parse_json(&doc.to_json()).unwrap();
            prop_assert_eq!(back.matrix().unwrap(), m);
            prop_assert_eq!(doc.to_json(), back.to_json());
        }
    }
}

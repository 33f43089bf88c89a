//! Line-oriented record output: CSV with a fixed header, or JSON lines.

use std::fmt::Display;
use std::io::Write;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::Error;

/// Serialize any `Display` value as a string (exact rationals as "n/d").
pub fn ser_display<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    JsonLines,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "csv" => Ok(Self::Csv),
            "jsonl" | "json-lines" => Ok(Self::JsonLines),
            other => Err(Error::Unsupported(format!("output format '{other}'"))),
        }
    }
}

/// Write one line per record. CSV rows take their header from the first
/// record; an empty record list produces an empty output.
pub fn write_records<W: Write, R: Serialize>(
    out: W,
    records: &[R],
    format: Format,
) -> std::io::Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in records {
                w.serialize(r).map_err(std::io::Error::other)?;
            }
            w.flush()
        }
        Format::JsonLines => {
            let mut out = std::io::BufWriter::new(out);
            for r in records {
                serde_json::to_writer(&mut out, r)?;
                out.write_all(b"\n")?;
            }
            out.flush()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Row {
        a: i64,
        b: Option<String>,
    }

    #[test]
    fn csv_and_jsonl() {
        let rows = [Row { a: 1, b: None }, Row { a: 2, b: Some("1/2".into()) }];
        let mut buf = Vec::new();
        write_records(&mut buf, &rows, Format::Csv).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "a,b\n1,\n2,1/2\n");
        let mut buf = Vec::new();
        write_records(&mut buf, &rows, Format::JsonLines).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "{\"a\":1,\"b\":null}\n{\"a\":2,\"b\":\"1/2\"}\n"
        );
    }

    #[test]
    fn empty_is_empty() {
        let mut buf = Vec::new();
        write_records::<_, Row>(&mut buf, &[], Format::Csv).unwrap();
        assert!(buf.is_empty());
    }
}

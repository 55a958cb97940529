//! Text, JSON and CSV renderings of counts.
//!
//! Counts are always written as decimal strings so that consumers limited
//! to 64-bit numbers cannot silently truncate them.

use std::io::{self, Write};

use clap::ValueEnum;
use invcount_core::{BigUint as Count, Form, Method};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRecord {
    pub form: String,
    pub d: u32,
    pub n: u32,
    pub method: String,
    pub value: String,
}

impl CountRecord {
    pub fn new(form: Form, d: u32, n: u32, method: Method, value: &Count) -> Self {
        Self {
            form: form.name().to_owned(),
            d,
            n,
            method: method.name().to_owned(),
            value: value.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coefficient {
    pub n: u32,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesRecord {
    pub form: String,
    pub d: u32,
    pub method: String,
    pub coefficients: Vec<Coefficient>,
}

impl SeriesRecord {
    pub fn new(form: Form, d: u32, method: Method, rows: &[(u32, Count)], skip_zeros: bool) -> Self {
        let coefficients = rows
            .iter()
            .filter(|(_, c)| !(skip_zeros && *c == Count::default()))
            .map(|(n, c)| Coefficient {
                n: *n,
                value: c.to_string(),
            })
            .collect();
        Self {
            form: form.name().to_owned(),
            d,
            method: method.name().to_owned(),
            coefficients,
        }
    }

    pub fn write(&self, format: SeriesFormat, out: &mut dyn Write) -> io::Result<()> {
        match format {
            SeriesFormat::Text => {
                for c in &self.coefficients {
                    writeln!(out, "{}\t{}", c.n, c.value)?;
                }
            }
            SeriesFormat::Csv => {
                writeln!(out, "n,value")?;
                for c in &self.coefficients {
                    writeln!(out, "{},{}", c.n, c.value)?;
                }
            }
            SeriesFormat::Json => {
                writeln!(out, "{}", serde_json::to_string(self).expect("plain struct serializes"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows() -> Vec<(u32, Count)> {
        vec![(0, Count::from(1u32)), (1, Count::default()), (2, Count::from(3u32))]
    }

    #[test]
    fn text_and_csv() {
        let rec = SeriesRecord::new(Form::Ternary, 3, Method::Counting, &rows(), false);
        let mut buf = Vec::new();
        rec.write(SeriesFormat::Text, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "0\t1\n1\t0\n2\t3\n");
        let mut buf = Vec::new();
        rec.write(SeriesFormat::Csv, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "n,value\n0,1\n1,0\n2,3\n");
    }

    #[test]
    fn json_shape() {
        let rec = SeriesRecord::new(Form::Ternary, 3, Method::Genfunc, &rows(), true);
        let mut buf = Vec::new();
        rec.write(SeriesFormat::Json, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "{\"form\":\"ternary\",\"d\":3,\"method\":\"genfunc\",\"coefficients\":[{\"n\":0,\"value\":\"1\"},{\"n\":2,\"value\":\"3\"}]}\n"
        );
    }
}

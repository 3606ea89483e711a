//! Serialization of measures, histograms and figure data.
//!
//! Multiplicities always travel as decimal strings: they exceed 64-bit
//! range quickly. Measure entries are ordered lexicographically by `(a, b)`
//! and histogram rows ascending by value, so identical inputs produce
//! byte-identical files.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::demazure::SignedMeasure;
use crate::lattice::{HighestWeight, WeightCoord};
use crate::stats::Histogram;
use crate::weyl::WeylWord;

/// Serialization failure modes.
#[derive(Debug, thiserror::Error)]
pub enum SerializeError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed multiplicity `{0}`")]
    BadMultiplicity(String),
    #[error("explicit zero multiplicity at ({0}, {1})")]
    ZeroMultiplicity(i64, i64),
    #[error("duplicate coordinates ({0}, {1})")]
    DuplicateCoord(i64, i64),
    #[error("malformed word: {0}")]
    BadWord(#[from] crate::weyl::ParseWordError),
    #[error("malformed row `{0}`")]
    BadRow(String),
}

#[derive(Serialize, Deserialize)]
struct MeasureDoc {
    m: u32,
    n: u32,
    word: String,
    entries: Vec<MeasureEntry>,
}

#[derive(Serialize, Deserialize)]
struct MeasureEntry {
    a: i64,
    b: i64,
    mult: String,
}

fn measure_doc(mu: &SignedMeasure, word: &WeylWord) -> MeasureDoc {
    MeasureDoc {
        m: mu.hw().m,
        n: mu.hw().n,
        word: word.to_string(),
        entries: mu
            .iter()
            .map(|(w, p)| MeasureEntry {
                a: w.a,
                b: w.b,
                mult: p.to_string(),
            })
            .collect(),
    }
}

/// Measure in the JSON schema
/// `{"m", "n", "word", "entries": [{"a", "b", "mult"}]}`.
pub fn measure_to_json(mu: &SignedMeasure, word: &WeylWord) -> String {
    let mut out = serde_json::to_string_pretty(&measure_doc(mu, word)).expect("measure to JSON");
    out.push('\n');
    out
}

fn parse_mult(s: &str) -> Result<BigInt, SerializeError> {
    s.parse::<BigInt>()
        .map_err(|_| SerializeError::BadMultiplicity(s.to_owned()))
}

fn collect_entries(
    raw: impl IntoIterator<Item = (i64, i64, BigInt)>,
) -> Result<Vec<(WeightCoord, BigInt)>, SerializeError> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for (a, b, mult) in raw {
        if mult.is_zero() {
            return Err(SerializeError::ZeroMultiplicity(a, b));
        }
        if !seen.insert((a, b)) {
            return Err(SerializeError::DuplicateCoord(a, b));
        }
        out.push((WeightCoord::new(a, b), mult));
    }
    Ok(out)
}

/// Parses the JSON measure schema back into a measure and its word.
pub fn measure_from_json(text: &str) -> Result<(SignedMeasure, WeylWord), SerializeError> {
    let doc: MeasureDoc = serde_json::from_str(text)?;
    let word: WeylWord = doc.word.parse()?;
    let mut raw = Vec::with_capacity(doc.entries.len());
    for e in &doc.entries {
        raw.push((e.a, e.b, parse_mult(&e.mult)?));
    }
    let entries = collect_entries(raw)?;
    Ok((
        SignedMeasure::from_entries(HighestWeight::new(doc.m, doc.n), entries),
        word,
    ))
}

/// Measure as a delimited table with header `a,b,mult`.
pub fn measure_to_delimited(mu: &SignedMeasure, sep: char) -> String {
    let mut out = format!("a{sep}b{sep}mult\n");
    for (w, p) in mu.iter() {
        out.push_str(&format!("{}{sep}{}{sep}{}\n", w.a, w.b, p));
    }
    out
}

/// Parses the delimited measure table; the ambient highest weight is not
/// part of the table and must be supplied.
pub fn measure_from_delimited(
    text: &str,
    sep: char,
    hw: HighestWeight,
) -> Result<SignedMeasure, SerializeError> {
    let mut raw = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if idx == 0 || line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(sep).collect();
        if fields.len() != 3 {
            return Err(SerializeError::BadRow(line.to_owned()));
        }
        let a: i64 = fields[0]
            .parse()
            .map_err(|_| SerializeError::BadRow(line.to_owned()))?;
        let b: i64 = fields[1]
            .parse()
            .map_err(|_| SerializeError::BadRow(line.to_owned()))?;
        raw.push((a, b, parse_mult(fields[2])?));
    }
    Ok(SignedMeasure::from_entries(hw, collect_entries(raw)?))
}

/// Histogram as a JSON object mapping values to multiplicity strings, in
/// ascending value order.
pub fn histogram_to_json(h: &Histogram) -> String {
    let mut out = String::from("{");
    for (idx, (v, p)) in h.iter().enumerate() {
        if idx > 0 {
            out.push(',');
        }
        out.push_str(&format!("\n  \"{v}\": \"{p}\""));
    }
    if !h.is_empty() {
        out.push('\n');
    }
    out.push_str("}\n");
    out
}

/// Parses the JSON histogram object.
pub fn histogram_from_json(text: &str) -> Result<Histogram, SerializeError> {
    let map: std::collections::BTreeMap<String, String> = serde_json::from_str(text)?;
    let mut entries = Vec::with_capacity(map.len());
    for (v, p) in map {
        let v: i64 = v.parse().map_err(|_| SerializeError::BadRow(v.clone()))?;
        entries.push((v, parse_mult(&p)?));
    }
    Ok(Histogram::from_entries(entries))
}

/// Histogram as a two-column table `value,mult`, ascending by value.
pub fn histogram_to_delimited(h: &Histogram, sep: char) -> String {
    let mut out = format!("value{sep}mult\n");
    for (v, p) in h.iter() {
        out.push_str(&format!("{v}{sep}{p}\n"));
    }
    out
}

/// Weight-plane figure data: rows `(a-b, a, mult)` sorted by finite weight
/// then degree. Any affine rescaling of the first column reproduces the
/// plotted horizontal axis.
pub fn weight2d_to_delimited(mu: &SignedMeasure, sep: char) -> String {
    let mut rows: Vec<(i64, i64, &BigInt)> = mu
        .iter()
        .map(|(w, p)| (w.finite_weight_dev(), w.degree(), p))
        .collect();
    rows.sort_by_key(|&(fin, deg, _)| (fin, deg));
    let mut out = format!("finite{sep}degree{sep}mult\n");
    for (fin, deg, p) in rows {
        out.push_str(&format!("{fin}{sep}{deg}{sep}{p}\n"));
    }
    out
}

/// Weight-plane figure data as JSON: an array of `(a-b, a, mult)` objects
/// in the same order as the delimited form.
pub fn weight2d_to_json(mu: &SignedMeasure) -> String {
    #[derive(Serialize)]
    struct Row {
        finite: i64,
        degree: i64,
        mult: String,
    }
    let mut rows: Vec<Row> = mu
        .iter()
        .map(|(w, p)| Row {
            finite: w.finite_weight_dev(),
            degree: w.degree(),
            mult: p.to_string(),
        })
        .collect();
    rows.sort_by_key(|r| (r.finite, r.degree));
    let mut out = serde_json::to_string_pretty(&rows).expect("rows to JSON");
    out.push('\n');
    out
}

/// Decimal approximation of an exact rational, rounded half away from zero
/// to `digits` fractional digits. Display-layer only.
pub fn rational_decimal(r: &BigRational, digits: u32) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits as usize);
    let scaled = r.numer() * &scale;
    let denom = r.denom();
    let (quot, rem) = (scaled.clone() / denom, scaled % denom);
    let quot = if &rem.abs() * BigInt::from(2) >= denom.abs() {
        if r.numer().is_negative() {
            quot - BigInt::from(1)
        } else {
            quot + BigInt::from(1)
        }
    } else {
        quot
    };
    let negative = quot.is_negative();
    let digits_str = quot.abs().to_string();
    let digits = digits as usize;
    let padded = if digits_str.len() <= digits {
        format!("{:0>width$}", digits_str, width = digits + 1)
    } else {
        digits_str
    };
    let split = padded.len() - digits;
    let (int_part, frac_part) = padded.split_at(split);
    let sign = if negative { "-" } else { "" };
    format!("{sign}{int_part}.{frac_part}")
}

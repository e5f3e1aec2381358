//! On-disk formats: frame files and signal files as JSON (complex entries as
//! `[re, im]` pairs), reports as JSON with every checked value carrying its
//! tolerance, and plot/matrix data as CSV.
//!
//! Maps are kept sorted so identical inputs produce byte-identical files.

use crate::CliError;
use framecast_core::frame::{Frame, Label};
use framecast_core::{Complex64, ComplexMatrix};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::collections::BTreeMap;
use std::path::Path;

pub const SCHEMA_VERSION: &str = "1";

/// Serialized frame: `dim`, row vectors of `[re, im]` pairs, optional labels
/// (numbers, pairs, or tags), and a free-form metadata map.
#[derive(Debug, Serialize, Deserialize)]
pub struct FrameFile {
    pub schema_version: String,
    pub dim: usize,
    pub vectors: Vec<Vec<[f64; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<LabelValue>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub metadata: Option<BTreeMap<String, Value>>,
}

/// Label wire form: a bare number, an `[x, y]` pair, or a string tag.
#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LabelValue {
    Frequency(f64),
    Point([f64; 2]),
    Tag(String),
}

impl FrameFile {
    pub fn from_frame(frame: &Frame, metadata: Option<BTreeMap<String, Value>>) -> Self {
        let vectors = (0..frame.len())
            .map(|i| frame.vector(i).iter().map(|z| [z.re, z.im]).collect())
            .collect();
        let labels = frame.labels().map(|ls| {
            ls.iter()
                .map(|l| match l {
                    Label::Frequency(x) => LabelValue::Frequency(*x),
                    Label::Point2(x, y) => LabelValue::Point([*x, *y]),
                    Label::Tag(t) => LabelValue::Tag(t.clone()),
                })
                .collect()
        });
        let mut metadata = metadata.unwrap_or_default();
        if let Some(note) = frame.basis_note() {
            metadata.insert("basis_note".into(), Value::String(note.to_string()));
        }
        Self {
            schema_version: SCHEMA_VERSION.into(),
            dim: frame.dim(),
            vectors,
            labels,
            metadata: if metadata.is_empty() {
                None
            } else {
                Some(metadata)
            },
        }
    }

    pub fn into_frame(self) -> Result<Frame, CliError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(CliError::BadInput(format!(
                "unrecognized schema_version {:?}",
                self.schema_version
            )));
        }
        let rows: Vec<Vec<Complex64>> = self
            .vectors
            .iter()
            .map(|row| row.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
            .collect();
        let mut frame = Frame::new(self.dim, &rows).map_err(CliError::math)?;
        if let Some(labels) = self.labels {
            let labels = labels
                .into_iter()
                .map(|l| match l {
                    LabelValue::Frequency(x) => Label::Frequency(x),
                    LabelValue::Point([x, y]) => Label::Point2(x, y),
                    LabelValue::Tag(t) => Label::Tag(t),
                })
                .collect();
            frame = frame.with_labels(labels).map_err(CliError::math)?;
        }
        if let Some(meta) = &self.metadata {
            if let Some(Value::String(note)) = meta.get("basis_note") {
                frame = frame.with_basis_note(note.clone());
            }
        }
        Ok(frame)
    }
}

/// Serialized signal: a flat complex vector.
#[derive(Debug, Serialize, Deserialize)]
pub struct SignalFile {
    pub schema_version: String,
    pub values: Vec<[f64; 2]>,
}

impl SignalFile {
    pub fn into_values(self) -> Vec<Complex64> {
        self.values
            .iter()
            .map(|&[re, im]| Complex64::new(re, im))
            .collect()
    }
}

/// A numeric output together with the tolerance it was checked against.
#[derive(Debug, Serialize, Deserialize)]
pub struct CheckedValue {
    pub value: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckedValue {
    /// Checks `|value - target| <= tolerance`.
    pub fn near(value: f64, target: f64, tolerance: f64) -> Self {
        Self {
            value,
            tolerance,
            pass: (value - target).abs() <= tolerance,
        }
    }

    /// Checks `value <= tolerance`.
    pub fn below(value: f64, tolerance: f64) -> Self {
        Self {
            value,
            tolerance,
            pass: value <= tolerance,
        }
    }
}

/// Command report: inputs echoed, outputs with their tolerances, tool
/// version.
#[derive(Debug, Serialize, Deserialize)]
pub struct ReportFile {
    pub command: String,
    pub inputs_echo: BTreeMap<String, Value>,
    pub outputs: BTreeMap<String, Value>,
    pub tool_version: String,
}

impl ReportFile {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            inputs_echo: BTreeMap::new(),
            outputs: BTreeMap::new(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn echo(&mut self, key: &str, value: impl Into<Value>) {
        self.inputs_echo.insert(key.to_string(), value.into());
    }

    pub fn output(&mut self, key: &str, value: impl Into<Value>) {
        self.outputs.insert(key.to_string(), value.into());
    }

    pub fn checked(&mut self, key: &str, value: CheckedValue) {
        self.outputs.insert(
            key.to_string(),
            serde_json::to_value(value).expect("checked value serializes"),
        );
    }
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Io(format!("cannot parse {}: {e}", path.display())))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Io(format!("cannot serialize: {e}")))?;
    text.push('\n');
    std::fs::write(path, text)
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}

/// Writes a complex matrix as CSV with a header row; entries are `re` and
/// `im` column pairs.
pub fn write_matrix_csv(path: &Path, m: &ComplexMatrix) -> Result<(), CliError> {
    let mut out = String::new();
    let header: Vec<String> = (0..m.cols())
        .flat_map(|j| [format!("re_{j}"), format!("im_{j}")])
        .collect();
    out.push_str(&header.join(","));
    out.push('\n');
    for i in 0..m.rows() {
        let row: Vec<String> = m
            .row(i)
            .iter()
            .flat_map(|z| [format_float(z.re), format_float(z.im)])
            .collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    std::fs::write(path, out)
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}

/// Shortest decimal form that round-trips the exact binary value.
pub fn format_float(x: f64) -> String {
    let mut buf = ryu_like(x);
    if !buf.contains('.') && !buf.contains('e') && !buf.contains("inf") && !buf.contains("NaN") {
        buf.push_str(".0");
    }
    buf
}

fn ryu_like(x: f64) -> String {
    // `{:?}` on f64 prints the shortest representation that parses back to
    // the same bits.
    format!("{x:?}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frame_file_round_trip_preserves_every_bit() {
        // Awkward values: non-terminating decimals, tiny magnitudes,
        // negative zero.
        let nasty = [
            std::f64::consts::PI,
            1.0 / 3.0,
            0.1 + 0.2,
            1e-300,
            -0.0,
            6.02e23,
            -1.2345678901234567e-8,
            f64::MIN_POSITIVE,
        ];
        let rows: Vec<Vec<Complex64>> = nasty
            .chunks(2)
            .map(|pair| vec![Complex64::new(pair[0], pair[1])])
            .collect();
        let frame = Frame::new(1, &rows).unwrap();
        let file = FrameFile::from_frame(&frame, None);
        let text = serde_json::to_string(&file).unwrap();
        let parsed: FrameFile = serde_json::from_str(&text).unwrap();
        let back = parsed.into_frame().unwrap();
        for i in 0..frame.len() {
            for (a, b) in frame.vector(i).iter().zip(back.vector(i)) {
                assert_eq!(a.re.to_bits(), b.re.to_bits());
                assert_eq!(a.im.to_bits(), b.im.to_bits());
            }
        }
    }

    #[test]
    fn float_formatting_round_trips() {
        for x in [0.1, 1.0, -0.0, 1e-308, 123_456_789.123_456_78, 2.0_f64.powi(-53)] {
            let s = format_float(x);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back.to_bits(), x.to_bits(), "{s}");
        }
    }

    #[test]
    fn unknown_schema_version_is_rejected() {
        let file = FrameFile {
            schema_version: "999".into(),
            dim: 1,
            vectors: vec![vec![[1.0, 0.0]]],
            labels: None,
            metadata: None,
        };
        assert!(file.into_frame().is_err());
    }
}

//! Published reference energies, shipped as `data/reference.csv`.
//!
//! Values are kept as the printed digit strings (thousands-separating spaces
//! removed) next to their parsed form, so the transcription can be checked
//! digit for digit.

use std::fmt;

use serde::Deserialize;

use crate::ansatz::QuantumNumbers;
use crate::{Error, Result};

const REFERENCE_CSV: &str = include_str!("../../data/reference.csv");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableId {
    /// Combined Varshni-Hellmann potential.
    Vhp = 1,
    Hellmann = 2,
    Varshni = 3,
    Yukawa = 4,
}

impl TableId {
    pub const ALL: [TableId; 4] = [Self::Vhp, Self::Hellmann, Self::Varshni, Self::Yukawa];

    pub fn new(id: u8) -> Result<Self> {
        match id {
            1 => Ok(Self::Vhp),
            2 => Ok(Self::Hellmann),
            3 => Ok(Self::Varshni),
            4 => Ok(Self::Yukawa),
            other => Err(Error::Argument(format!(
                "table id must be 1..=4, got {other}"
            ))),
        }
    }

    pub fn number(self) -> u8 {
        self as u8
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// Independent comparison columns, named after their source reference.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RefSource {
    /// Nikiforov-Uvarov / WKB, Varshni potential.
    Ref19,
    /// Parametric Nikiforov-Uvarov, Hellmann potential.
    Ref20,
    /// Perturbative treatment, Hellmann potential.
    Ref21,
    /// Asymptotic iteration, Yukawa potential.
    Ref22,
    /// Accurate numerical solution, Yukawa potential.
    Ref23,
}

impl RefSource {
    pub const ALL: [RefSource; 5] = [
        Self::Ref19,
        Self::Ref20,
        Self::Ref21,
        Self::Ref22,
        Self::Ref23,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Self::Ref19 => "ref19",
            Self::Ref20 => "ref20",
            Self::Ref21 => "ref21",
            Self::Ref22 => "ref22",
            Self::Ref23 => "ref23",
        }
    }
}

/// A printed number and its value.
#[derive(Debug, Clone, PartialEq)]
pub struct Printed {
    pub text: String,
    pub value: f64,
}

impl Printed {
    fn parse(text: &str) -> Result<Self> {
        let value = text
            .parse()
            .map_err(|_| Error::Data(format!("not a number: `{text}`")))?;
        Ok(Self {
            text: text.to_owned(),
            value,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceRow {
    pub table: TableId,
    /// Spectroscopic label, e.g. `"2p"`.
    pub state: String,
    pub qn: QuantumNumbers,
    /// The table's first numeric column: `α` for Tables 1-3, `g` for Table 4.
    pub key: Printed,
    pub e_paper: Printed,
    pub refs: Vec<(RefSource, Printed)>,
    /// Row is internally inconsistent as printed and excluded from pass/fail.
    pub suspect: bool,
}

impl ReferenceRow {
    pub fn reference(&self, source: RefSource) -> Option<f64> {
        self.refs
            .iter()
            .find(|(s, _)| *s == source)
            .map(|(_, p)| p.value)
    }
}

#[derive(Debug, Deserialize)]
struct RawRow {
    table: u8,
    state: String,
    key: String,
    e_paper: String,
    ref19: Option<String>,
    ref20: Option<String>,
    ref21: Option<String>,
    ref22: Option<String>,
    ref23: Option<String>,
    suspect: bool,
}

impl RawRow {
    fn into_row(self) -> Result<ReferenceRow> {
        let refs = RefSource::ALL
            .into_iter()
            .zip([self.ref19, self.ref20, self.ref21, self.ref22, self.ref23])
            .filter_map(|(source, text)| text.map(|t| (source, t)))
            .map(|(source, text)| Printed::parse(&text).map(|p| (source, p)))
            .collect::<Result<Vec<_>>>()?;
        Ok(ReferenceRow {
            table: TableId::new(self.table).map_err(|e| Error::Data(e.to_string()))?,
            qn: QuantumNumbers::from_label(&self.state).map_err(|e| Error::Data(e.to_string()))?,
            state: self.state,
            key: Printed::parse(&self.key)?,
            e_paper: Printed::parse(&self.e_paper)?,
            refs,
            suspect: self.suspect,
        })
    }
}

/// All embedded rows, in file order.
pub fn reference_rows() -> Result<Vec<ReferenceRow>> {
    parse_reference(REFERENCE_CSV)
}

pub fn table_rows(table: TableId) -> Result<Vec<ReferenceRow>> {
    Ok(reference_rows()?
        .into_iter()
        .filter(|r| r.table == table)
        .collect())
}

pub(crate) fn parse_reference(text: &str) -> Result<Vec<ReferenceRow>> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize::<RawRow>()
        .map(|raw| raw?.into_row())
        .collect()
}

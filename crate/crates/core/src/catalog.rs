//! The counter catalog: which counters exist, how user clauses expand into
//! them, and what each backend calls them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::reader::Clause;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CounterType {
    Cpu,
    Memory,
    FloatingPoint,
    Vector,
    Branch,
    Cache,
}

impl CounterType {
    pub const ALL: [CounterType; 6] = [
        CounterType::Cpu,
        CounterType::Memory,
        CounterType::FloatingPoint,
        CounterType::Vector,
        CounterType::Branch,
        CounterType::Cache,
    ];

    pub fn token(self) -> &'static str {
        match self {
            CounterType::Cpu => "cpu",
            CounterType::Memory => "memory",
            CounterType::FloatingPoint => "floating-point",
            CounterType::Vector => "vector",
            CounterType::Branch => "branch",
            CounterType::Cache => "cache",
        }
    }

    pub fn from_token(token: &str) -> Option<Self> {
        CounterType::ALL.into_iter().find(|t| t.token() == token)
    }

    /// Counter names of this type, in catalog order.
    pub fn counter_names(self) -> &'static [&'static str] {
        match self {
            CounterType::Cpu => &["cycles", "instructions"],
            CounterType::Memory => &["loads", "stores"],
            CounterType::FloatingPoint => &[
                "instructions",
                "operations",
                "multiply",
                "add",
                "divide",
                "sqrt",
                "inverse",
            ],
            CounterType::Vector => &["single-precision", "double-precision"],
            CounterType::Branch => &[
                "unconditional",
                "conditional",
                "taken",
                "not-taken",
                "mispredicted",
                "correctly-predicted",
            ],
            CounterType::Cache => &[
                "invalidation",
                "l1-data",
                "l2-data",
                "l3-data",
                "l1-instructions",
                "l2-instructions",
                "l3-instructions",
                "l1-loads",
                "l2-loads",
                "l1-stores",
                "l2-stores",
            ],
        }
    }

    fn first_index(self) -> u8 {
        CounterType::ALL
            .iter()
            .take_while(|&&t| t != self)
            .map(|t| t.counter_names().len() as u8)
            .sum()
    }
}

impl fmt::Display for CounterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Number of counters in the catalog.
pub const CATALOG_SIZE: usize = 30;

/// A catalog counter, identified by its canonical index.
///
/// Ordering follows the catalog (type order, then counter order within the
/// type), so a `BTreeSet<CounterId>` iterates in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CounterId(u8);

impl CounterId {
    pub fn from_index(index: usize) -> Option<Self> {
        (index < CATALOG_SIZE).then_some(CounterId(index as u8))
    }

    pub fn lookup(counter_type: CounterType, name: &str) -> Option<Self> {
        let pos = counter_type
            .counter_names()
            .iter()
            .position(|n| *n == name)?;
        Some(CounterId(counter_type.first_index() + pos as u8))
    }

    pub fn canonical_index(self) -> usize {
        self.0 as usize
    }

    pub fn counter_type(self) -> CounterType {
        let mut idx = self.0;
        for t in CounterType::ALL {
            let n = t.counter_names().len() as u8;
            if idx < n {
                return t;
            }
            idx -= n;
        }
        unreachable!("counter index out of range")
    }

    pub fn name(self) -> &'static str {
        let t = self.counter_type();
        t.counter_names()[(self.0 - t.first_index()) as usize]
    }

    /// `<type>.<name>`, the external spelling used in JSON and by the soft
    /// backend.
    pub fn dotted(self) -> String {
        format!("{}.{}", self.counter_type().token(), self.name())
    }
}

impl fmt::Display for CounterId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.counter_type().token(), self.name())
    }
}

impl FromStr for CounterId {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (t, n) = s
            .split_once('.')
            .ok_or_else(|| CatalogError::UnknownType(s.to_string()))?;
        let ty = CounterType::from_token(t).ok_or_else(|| CatalogError::UnknownType(t.into()))?;
        CounterId::lookup(ty, n).ok_or_else(|| CatalogError::UnknownCounter {
            counter_type: t.into(),
            counter: n.into(),
        })
    }
}

impl Serialize for CounterId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Papi,
    Soft,
}

impl Backend {
    pub fn name(self) -> &'static str {
        match self {
            Backend::Papi => "papi",
            Backend::Soft => "soft",
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
pub enum CatalogError {
    #[error("unknown counter type `{0}`")]
    UnknownType(String),
    #[error("unknown counter `{counter}` for type `{counter_type}`")]
    UnknownCounter {
        counter_type: String,
        counter: String,
    },
    #[error("backend `{backend}` has no event for `{counter}`")]
    UnsupportedCounter { backend: Backend, counter: String },
}

/// Every catalog counter in canonical order.
pub fn expand_all() -> BTreeSet<CounterId> {
    (0..CATALOG_SIZE)
        .filter_map(CounterId::from_index)
        .collect()
}

pub fn all_of_type(t: CounterType) -> BTreeSet<CounterId> {
    t.counter_names()
        .iter()
        .filter_map(|n| CounterId::lookup(t, n))
        .collect()
}

/// Resolves one clause to catalog counters. A clause with no counter list
/// stands for all counters of its type.
pub fn resolve_clause(clause: &Clause) -> Result<BTreeSet<CounterId>, CatalogError> {
    let t = CounterType::from_token(&clause.counter_type)
        .ok_or_else(|| CatalogError::UnknownType(clause.counter_type.clone()))?;
    if clause.counters.is_empty() {
        return Ok(all_of_type(t));
    }
    clause
        .counters
        .iter()
        .map(|c| {
            CounterId::lookup(t, c).ok_or_else(|| CatalogError::UnknownCounter {
                counter_type: clause.counter_type.clone(),
                counter: c.clone(),
            })
        })
        .collect()
}

const BACKEND_TABLE: &str = include_str!("../data/backend_events.tsv");

/// Backend event names loaded from the tab-separated data table.
#[derive(Debug, Clone)]
pub struct EventTable {
    columns: Vec<String>,
    rows: Vec<(CounterId, Vec<Option<String>>)>,
}

/// A single row of the event table with its trailing comment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventRow {
    pub counter: String,
    pub events: Vec<String>,
    pub comment: Option<String>,
}

/// Splits the raw table into its header and rows. Unknown counter names are
/// kept as-is so the caller can report them.
pub fn parse_event_rows(text: &str) -> (Vec<String>, Vec<EventRow>) {
    let mut header = Vec::new();
    let mut rows = Vec::new();
    for line in text.lines() {
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        let (data, comment) = match line.split_once('#') {
            Some((d, c)) => (d, Some(c.trim().to_string())),
            None => (line, None),
        };
        let cells: Vec<String> = data
            .split('\t')
            .map(|c| c.trim().to_string())
            .filter(|c| !c.is_empty())
            .collect();
        if header.is_empty() {
            header = cells;
            continue;
        }
        let mut cells = cells.into_iter();
        let Some(counter) = cells.next() else {
            continue;
        };
        rows.push(EventRow {
            counter,
            events: cells.collect(),
            comment,
        });
    }
    (header, rows)
}

impl EventTable {
    pub fn parse(text: &str) -> Result<Self, CatalogError> {
        let (header, raw) = parse_event_rows(text);
        let columns = header.into_iter().skip(1).collect::<Vec<_>>();
        let mut rows = Vec::with_capacity(raw.len());
        for row in raw {
            let id: CounterId = row.counter.parse()?;
            let mut events: Vec<Option<String>> = row
                .events
                .into_iter()
                .map(|e| (e != "-").then_some(e))
                .collect();
            events.resize(columns.len(), None);
            rows.push((id, events));
        }
        Ok(EventTable { columns, rows })
    }

    pub fn builtin() -> &'static EventTable {
        static TABLE: OnceLock<EventTable> = OnceLock::new();
        TABLE
            .get_or_init(|| EventTable::parse(BACKEND_TABLE).expect("bundled event table is valid"))
    }

    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    pub fn event(&self, column: &str, id: CounterId) -> Option<&str> {
        let col = self.columns.iter().position(|c| c == column)?;
        self.rows
            .iter()
            .find(|(r, _)| *r == id)
            .and_then(|(_, evs)| evs[col].as_deref())
    }
}

/// Event name for `id` under `backend`. The soft backend uses the dotted
/// name itself.
pub fn backend_event(backend: Backend, id: CounterId) -> Result<String, CatalogError> {
    match backend {
        Backend::Soft => Ok(id.dotted()),
        Backend::Papi => EventTable::builtin()
            .event(backend.name(), id)
            .map(str::to_string)
            .ok_or_else(|| CatalogError::UnsupportedCounter {
                backend,
                counter: id.dotted(),
            }),
    }
}

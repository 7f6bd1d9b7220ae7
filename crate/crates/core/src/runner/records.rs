use std::path::Path;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use super::RunError;

/// One region execution as written by the instrumented program.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegionRecord {
    pub name: String,
    #[serde(rename = "temporal-id")]
    pub temporal_id: u64,
    pub counters: IndexMap<String, i64>,
}

pub type RegionTotals = IndexMap<String, IndexMap<String, i64>>;

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct RunReport {
    /// Records from the last repetition.
    pub records: Vec<RegionRecord>,
    pub per_region_totals: RegionTotals,
    /// Wall-clock time of each repetition, in milliseconds.
    pub wall_times: Vec<f64>,
}

impl RunReport {
    pub fn mean_wall_time(&self) -> Option<f64> {
        (!self.wall_times.is_empty())
            .then(|| self.wall_times.iter().sum::<f64>() / self.wall_times.len() as f64)
    }
}

/// Sums counters per region name, in order of first appearance.
pub fn aggregate(records: &[RegionRecord]) -> RegionTotals {
    let mut totals = RegionTotals::new();
    for r in records {
        let region = totals.entry(r.name.clone()).or_default();
        for (counter, value) in &r.counters {
            *region.entry(counter.clone()).or_default() += value;
        }
    }
    totals
}

pub fn parse_records(text: &str) -> Result<Vec<RegionRecord>, serde_json::Error> {
    serde_json::from_str(text)
}

pub fn read_records(path: &Path) -> Result<Vec<RegionRecord>, RunError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| RunError::CollectFailed(format!("cannot read {}: {e}", path.display())))?;
    parse_records(&text).map_err(|e| RunError::CollectFailed(format!("{}: {e}", path.display())))
}

//! Report records and their JSON and plain-text renderings.
//!
//! Exact values are authoritative and rendered as `p/q` (or an integer);
//! decimals are the exact value rounded half-up to `--places` digits.

use argstrength::ellsberg::{FirstChoice, Prediction, SecondChoice, Table1Row, Variant};
use argstrength::{round_half_up, CoherenceStatus, CoherenceVerdict, ConclusionInterval, Distribution, Rational};
use argstrength::{PreferenceOrder, StrengthScore};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Number {
    pub exact: String,
    pub decimal: String,
}

impl Number {
    pub fn new(value: &Rational, places: usize) -> Self {
        Self { exact: exact(value), decimal: round_half_up(value, places) }
    }
}

pub fn exact(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ZeroLayerReport {
    pub depth: usize,
    /// 1-based premise numbers.
    pub premises: Vec<usize>,
    pub conditions: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CoherenceReport {
    pub status: &'static str,
    pub zero_layers: Vec<ZeroLayerReport>,
    /// 1-based premise numbers of the unsatisfiable level, when incoherent.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conflict: Option<Vec<usize>>,
}

impl CoherenceReport {
    pub fn new(verdict: &CoherenceVerdict) -> Self {
        let one_based = |ids: &[usize]| ids.iter().map(|i| i + 1).collect::<Vec<_>>();
        Self {
            status: match verdict.status {
                CoherenceStatus::Coherent => "coherent",
                CoherenceStatus::Incoherent => "incoherent",
            },
            zero_layers: verdict
                .zero_layers
                .iter()
                .map(|l| ZeroLayerReport {
                    depth: l.depth,
                    premises: one_based(&l.premises),
                    conditions: l.conditions.iter().map(ToString::to_string).collect(),
                })
                .collect(),
            conflict: verdict.conflict.as_deref().map(one_based),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IntervalReport {
    pub lower: Number,
    pub upper: Number,
}

#[derive(Debug, Clone, Serialize)]
pub struct StrengthReport {
    pub value: Number,
    pub precision_factor: Number,
    pub location_factor: Number,
}

impl StrengthReport {
    pub fn new(score: &StrengthScore, places: usize) -> Self {
        Self {
            value: Number::new(&score.value, places),
            precision_factor: Number::new(&score.precision_factor, places),
            location_factor: Number::new(&score.location_factor, places),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WorldMass {
    pub world: String,
    pub mass: Number,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub lower: Vec<WorldMass>,
    pub upper: Vec<WorldMass>,
}

fn masses(distribution: &Option<Distribution>, places: usize) -> Vec<WorldMass> {
    let Some(d) = distribution else { return Vec::new() };
    d.masses
        .iter()
        .map(|(w, m)| WorldMass { world: w.describe(&d.atoms), mass: Number::new(m, places) })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct Record {
    pub label: String,
    pub source: String,
    pub coherence: CoherenceReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interval: Option<IntervalReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vacuous_reason: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strength: Option<StrengthReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<WitnessReport>,
}

impl Record {
    pub fn new(label: String, source: String, verdict: &CoherenceVerdict) -> Self {
        Self {
            label,
            source,
            coherence: CoherenceReport::new(verdict),
            interval: None,
            vacuous_reason: None,
            strength: None,
            witnesses: None,
        }
    }

    pub fn with_interval(mut self, interval: &ConclusionInterval, places: usize, witnesses: bool) -> Self {
        self.interval = Some(IntervalReport {
            lower: Number::new(&interval.lower, places),
            upper: Number::new(&interval.upper, places),
        });
        self.vacuous_reason = interval.vacuous_reason.map(|r| r.as_str());
        if witnesses {
            self.witnesses = Some(WitnessReport {
                lower: masses(&interval.lower_witness, places),
                upper: masses(&interval.upper_witness, places),
            });
        }
        self
    }

    pub fn with_strength(mut self, score: &StrengthScore, places: usize) -> Self {
        self.strength = Some(StrengthReport::new(score, places));
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassReport {
    pub labels: Vec<String>,
    pub strength: Number,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrderReport {
    pub display: String,
    pub classes: Vec<ClassReport>,
}

impl OrderReport {
    pub fn new(order: &PreferenceOrder, places: usize) -> Self {
        Self {
            display: order.to_string(),
            classes: order
                .classes
                .iter()
                .map(|c| ClassReport { labels: c.labels.clone(), strength: Number::new(&c.strength, places) })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PredictionReport {
    pub bet_1_vs_2: &'static str,
    pub bet_3_vs_4: &'static str,
    pub strategy: &'static str,
    pub description: &'static str,
}

impl PredictionReport {
    pub fn new(prediction: &Prediction) -> Self {
        Self {
            bet_1_vs_2: match prediction.first {
                FirstChoice::Bet1 => "bet 1",
                FirstChoice::Bet2 => "bet 2",
                FirstChoice::Tie => "tie",
            },
            bet_3_vs_4: match prediction.second {
                SecondChoice::Bet3 => "bet 3",
                SecondChoice::Bet4 => "bet 4",
                SecondChoice::Tie => "tie",
            },
            strategy: prediction.strategy.code(),
            description: prediction.strategy.description(),
        }
    }
}

/// The single document printed by `--json`.
#[derive(Debug, Clone, Serialize)]
pub struct Document {
    pub command: &'static str,
    pub places: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<&'static str>,
    pub records: Vec<Record>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<OrderReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prediction: Option<PredictionReport>,
}

impl Document {
    pub fn new(command: &'static str, places: usize, records: Vec<Record>) -> Self {
        Self { command, places, variant: None, records, order: None, prediction: None }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn ellsberg_record(row: &Table1Row, variant: Variant, places: usize) -> Record {
    let mut record = Record {
        label: row.label.clone(),
        source: format!("ellsberg:{variant}:bet{}", row.bet),
        coherence: CoherenceReport { status: "coherent", zero_layers: Vec::new(), conflict: None },
        interval: None,
        vacuous_reason: None,
        strength: None,
        witnesses: None,
    };
    record = record.with_interval(&row.interval, places, false);
    record.with_strength(&row.strength, places)
}

/// Left-aligned plain-text table.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = line(header.iter().map(|h| h.to_string()).collect());
    out.push('\n');
    for row in rows {
        out.push_str(&line(row.clone()));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use argstrength::{int, ratio};

    #[test]
    fn exact_strings() {
        assert_eq!(exact(&ratio(33, 100)), "33/100");
        assert_eq!(exact(&int(1)), "1");
        assert_eq!(exact(&ratio(-1, 3)), "-1/3");
    }

    #[test]
    fn number_rounds_half_up() {
        let n = Number::new(&ratio(2211, 20000), 2);
        assert_eq!((n.exact.as_str(), n.decimal.as_str()), ("2211/20000", "0.11"));
        assert_eq!(Number::new(&ratio(1, 8), 2).decimal, "0.13");
    }

    #[test]
    fn table_alignment() {
        let out = table(&["a", "bb"], &[vec!["xyz".into(), "1".into()]]);
        assert_eq!(out, "a    bb\nxyz  1\n");
    }
}

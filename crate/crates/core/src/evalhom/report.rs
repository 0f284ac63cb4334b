//! Homology tables and their JSON, CSV and text renderings.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::exactlin::{HomologySummary, Ring};

/// One line of a homology table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub arity: Option<usize>,
    pub weight: Option<usize>,
    pub degree: i64,
    pub free_rank: usize,
    pub torsion: Vec<String>,
}

/// A homology report: `{"object", "ring", "bounds", "table"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub object: String,
    pub ring: String,
    pub bounds: BTreeMap<String, i64>,
    pub table: Vec<TableRow>,
}

/// Rows of a summary, one per degree in which chains exist.
pub fn rows(summary: &HomologySummary, arity: Option<usize>, weight: Option<usize>) -> Vec<TableRow> {
    summary
        .records
        .iter()
        .map(|r| TableRow {
            arity,
            weight,
            degree: r.degree,
            free_rank: r.free_rank,
            torsion: r.torsion.iter().map(|t| t.to_string()).collect(),
        })
        .collect()
}

impl Report {
    pub fn new(object: impl Into<String>, ring: Ring, bounds: &[(&str, i64)], table: Vec<TableRow>) -> Report {
        Report {
            object: object.into(),
            ring: ring.to_string(),
            bounds: bounds.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            table,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per row; torsion coefficients are separated by `;`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("object,ring,arity,weight,degree,free_rank,torsion\n");
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        for r in &self.table {
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                self.object,
                self.ring,
                opt(r.arity),
                opt(r.weight),
                r.degree,
                r.free_rank,
                r.torsion.join(";")
            ));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let bounds: Vec<String> = self.bounds.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut out = format!("{} over {} ({})\n", self.object, self.ring, bounds.join(", "));
        for r in &self.table {
            let mut key = Vec::new();
            if let Some(a) = r.arity {
                key.push(format!("arity {a}"));
            }
            if let Some(w) = r.weight {
                key.push(format!("weight {w}"));
            }
            key.push(format!("degree {}", r.degree));
            let torsion = if r.torsion.is_empty() {
                String::new()
            } else {
                format!(" torsion {}", r.torsion.join(","))
            };
            out.push_str(&format!("  {}: rank {}{}\n", key.join(", "), r.free_rank, torsion));
        }
        out
    }

    /// Nonzero free ranks keyed by `(arity, weight, degree)`.
    pub fn ranks(&self) -> BTreeMap<(Option<usize>, Option<usize>, i64), usize> {
        self.table
            .iter()
            .filter(|r| r.free_rank > 0)
            .map(|r| ((r.arity, r.weight, r.degree), r.free_rank))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        Report::new(
            "demo",
            Ring::Integers,
            &[("n", 2)],
            vec![
                TableRow {
                    arity: Some(2),
                    weight: None,
                    degree: 3,
                    free_rank: 1,
                    torsion: vec!["2".to_string(), "6".to_string()],
                },
                TableRow {
                    arity: Some(2),
                    weight: None,
                    degree: 4,
                    free_rank: 0,
                    torsion: vec![],
                },
            ],
        )
    }

    #[test]
    fn renderings() {
        let r = sample();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["object"], "demo");
        assert_eq!(v["ring"], "z");
        assert_eq!(v["bounds"]["n"], 2);
        assert_eq!(v["table"][0]["torsion"][1], "6");
        assert!(v["table"][0]["weight"].is_null());
        let csv = r.to_csv();
        assert_eq!(csv.lines().nth(1), Some("demo,z,2,,3,1,2;6"));
        assert_eq!(csv.lines().count(), 3);
        assert!(r.to_text().contains("arity 2, degree 3: rank 1 torsion 2,6"));
        assert_eq!(r.ranks().len(), 1);
    }
}

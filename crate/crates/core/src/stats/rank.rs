//! Cross-dataset rank aggregation.
//!
//! Within each dataset, metrics are ranked by descending `|tau|` (rank 1 is
//! the strongest correlation in either direction); tied cells share a rank
//! according to the [`TieRule`]. A metric's average rank is the mean of its
//! per-dataset ranks over the datasets where it has a value.

use serde::{Deserialize, Serialize};

use super::StatsError;
use crate::num::Real;

/// How tied `|tau|` cells share a rank.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TieRule {
    /// Tied cells get the mean of the positions they span.
    #[default]
    Average,
    /// Tied cells all get the first position of their span.
    Min,
}

/// A metrics x datasets matrix of correlation values; `None` marks cells
/// where a metric was unavailable on a dataset.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TauMatrix<R> {
    pub metrics: Vec<String>,
    pub datasets: Vec<String>,
    /// Row-major: `values[metric][dataset]`.
    pub values: Vec<Vec<Option<R>>>,
}

impl<R: Real> TauMatrix<R> {
    pub fn new(
        metrics: Vec<String>,
        datasets: Vec<String>,
        values: Vec<Vec<Option<R>>>,
    ) -> Result<Self, StatsError> {
        if metrics.is_empty() || datasets.is_empty() {
            return Err(StatsError::EmptyMatrix);
        }
        if values.len() != metrics.len() || values.iter().any(|row| row.len() != datasets.len()) {
            return Err(StatsError::ShapeMismatch {
                rows: values.len(),
                expected_rows: metrics.len(),
                cols: values.first().map_or(0, Vec::len),
                expected_cols: datasets.len(),
            });
        }
        Ok(Self {
            metrics,
            datasets,
            values,
        })
    }
}

/// Per-dataset ranks and the average-rank column.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankTable<R> {
    pub metrics: Vec<String>,
    pub datasets: Vec<String>,
    /// `ranks[metric][dataset]`; `None` where the tau cell was missing.
    pub ranks: Vec<Vec<Option<R>>>,
    /// Mean of the present ranks per metric; `None` for all-missing rows.
    pub avg_rank: Vec<Option<R>>,
}

impl<R: Real> RankTable<R> {
    /// Average rank for a metric by name.
    pub fn avg_rank_of(&self, metric: &str) -> Option<R> {
        let idx = self.metrics.iter().position(|m| m == metric)?;
        self.avg_rank[idx]
    }

    /// Metric indices sorted by ascending average rank (best first);
    /// all-missing rows sink to the end. Ties keep input order.
    pub fn order_by_avg_rank(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.metrics.len()).collect();
        order.sort_by(|&a, &b| match (self.avg_rank[a], self.avg_rank[b]) {
            (Some(x), Some(y)) => x.partial_cmp(&y).unwrap(),
            (Some(_), None) => std::cmp::Ordering::Less,
            (None, Some(_)) => std::cmp::Ordering::Greater,
            (None, None) => std::cmp::Ordering::Equal,
        });
        order
    }
}

/// Rank every dataset column of `matrix` by `|tau|` descending and append
/// the average-rank column.
pub fn rank_metrics<R: Real>(
    matrix: &TauMatrix<R>,
    tie_rule: TieRule,
) -> Result<RankTable<R>, StatsError> {
    if matrix.metrics.is_empty() || matrix.datasets.is_empty() {
        return Err(StatsError::EmptyMatrix);
    }
    let n_metrics = matrix.metrics.len();
    let n_datasets = matrix.datasets.len();
    let mut ranks: Vec<Vec<Option<R>>> = vec![vec![None; n_datasets]; n_metrics];

    for d in 0..n_datasets {
        let mut present: Vec<(usize, R)> = (0..n_metrics)
            .filter_map(|m| matrix.values[m][d].map(|v| (m, v.abs())))
            .collect();
        // Descending |tau|; index tie-break keeps the sort total.
        present.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then(a.0.cmp(&b.0)));
        let mut i = 0;
        while i < present.len() {
            let mut j = i;
            while j + 1 < present.len() && present[j + 1].1 == present[i].1 {
                j += 1;
            }
            let rank = match tie_rule {
                TieRule::Average => {
                    let first = R::from_count(i + 1);
                    let last = R::from_count(j + 1);
                    (first + last) / R::from_f64(2.0).unwrap()
                }
                TieRule::Min => R::from_count(i + 1),
            };
            for &(m, _) in &present[i..=j] {
                ranks[m][d] = Some(rank);
            }
            i = j + 1;
        }
    }

    let avg_rank = ranks
        .iter()
        .map(|row| {
            let present: Vec<R> = row.iter().flatten().copied().collect();
            if present.is_empty() {
                None
            } else {
                Some(present.iter().copied().sum::<R>() / R::from_count(present.len()))
            }
        })
        .collect();

    Ok(RankTable {
        metrics: matrix.metrics.clone(),
        datasets: matrix.datasets.clone(),
        ranks,
        avg_rank,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn names(n: usize, prefix: &str) -> Vec<String> {
        (0..n).map(|i| format!("{prefix}{i}")).collect()
    }

    #[test]
    fn single_column_ranks_by_absolute_value() {
        let matrix = TauMatrix::new(
            names(3, "m"),
            names(1, "d"),
            vec![vec![Some(0.9)], vec![Some(-0.95)], vec![Some(0.1)]],
        )
        .unwrap();
        let table = rank_metrics(&matrix, TieRule::Average).unwrap();
        assert_eq!(
            table.ranks.iter().map(|r| r[0].unwrap()).collect::<Vec<f64>>(),
            vec![2.0, 1.0, 3.0]
        );
        assert_eq!(
            table.avg_rank.iter().map(|r| r.unwrap()).collect::<Vec<f64>>(),
            vec![2.0, 1.0, 3.0]
        );
    }

    #[test]
    fn ties_share_average_rank() {
        let matrix = TauMatrix::new(
            names(3, "m"),
            names(1, "d"),
            vec![vec![Some(0.5)], vec![Some(-0.5)], vec![Some(0.2)]],
        )
        .unwrap();
        let table = rank_metrics(&matrix, TieRule::Average).unwrap();
        assert_relative_eq!(table.ranks[0][0].unwrap(), 1.5);
        assert_relative_eq!(table.ranks[1][0].unwrap(), 1.5);
        assert_relative_eq!(table.ranks[2][0].unwrap(), 3.0);
        let table = rank_metrics(&matrix, TieRule::Min).unwrap();
        assert_relative_eq!(table.ranks[0][0].unwrap(), 1.0);
        assert_relative_eq!(table.ranks[1][0].unwrap(), 1.0);
        assert_relative_eq!(table.ranks[2][0].unwrap(), 3.0);
    }

    #[test]
    fn sign_flip_of_a_row_does_not_change_ranks() {
        let mut values = vec![
            vec![Some(0.4), Some(0.2)],
            vec![Some(0.3), Some(0.5)],
            vec![Some(0.1), Some(0.6)],
        ];
        let matrix = TauMatrix::new(names(3, "m"), names(2, "d"), values.clone()).unwrap();
        let base = rank_metrics(&matrix, TieRule::Average).unwrap();
        for cell in values[1].iter_mut() {
            *cell = cell.map(|v: f64| -v);
        }
        let flipped = TauMatrix::new(names(3, "m"), names(2, "d"), values).unwrap();
        let flipped = rank_metrics(&flipped, TieRule::Average).unwrap();
        assert_eq!(base.ranks, flipped.ranks);
        assert_eq!(base.avg_rank, flipped.avg_rank);
    }

    #[test]
    fn missing_cells_are_excluded_from_column_and_average() {
        let matrix = TauMatrix::new(
            names(3, "m"),
            names(2, "d"),
            vec![
                vec![Some(0.9), Some(0.9)],
                vec![None, Some(0.5)],
                vec![Some(0.1), None],
            ],
        )
        .unwrap();
        let table = rank_metrics(&matrix, TieRule::Average).unwrap();
        // Column 0 ranks only metrics 0 and 2.
        assert_eq!(table.ranks[0][0], Some(1.0));
        assert_eq!(table.ranks[1][0], None);
        assert_eq!(table.ranks[2][0], Some(2.0));
        // Averages span only present cells.
        assert_relative_eq!(table.avg_rank[1].unwrap(), 2.0);
        assert_relative_eq!(table.avg_rank[2].unwrap(), 2.0);
    }

    #[test]
    fn empty_matrix_is_an_error() {
        assert!(TauMatrix::<f64>::new(vec![], vec!["d".into()], vec![]).is_err());
        assert!(TauMatrix::<f64>::new(vec!["m".into()], vec![], vec![vec![]]).is_err());
    }

    #[test]
    fn order_by_avg_rank_puts_best_first() {
        let matrix = TauMatrix::new(
            names(3, "m"),
            names(1, "d"),
            vec![vec![Some(0.2)], vec![Some(0.9)], vec![Some(0.5)]],
        )
        .unwrap();
        let table = rank_metrics(&matrix, TieRule::Average).unwrap();
        assert_eq!(table.order_by_avg_rank(), vec![1, 2, 0]);
    }
}

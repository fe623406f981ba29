//! CSV import/export for tau matrices and rank tables.
//!
//! Layout: a header row of dataset names after a leading `metric_id`
//! column; one row per metric; empty cells mark missing values. Lines
//! starting with `#` are comments (provenance headers are written there).

use std::io::{Read, Write};

use super::rank::{RankTable, TauMatrix};
use super::StatsError;
use crate::num::Real;

/// Write provenance comments followed by the matrix.
pub fn write_tau_matrix<R: Real, W: Write>(
    mut out: W,
    matrix: &TauMatrix<R>,
    comments: &[String],
) -> Result<(), StatsError> {
    for comment in comments {
        writeln!(out, "# {comment}")?;
    }
    let mut writer = csv::Writer::from_writer(out);
    let mut header = vec!["metric_id".to_string()];
    header.extend(matrix.datasets.iter().cloned());
    writer.write_record(&header)?;
    for (metric, row) in matrix.metrics.iter().zip(&matrix.values) {
        let mut record = vec![metric.clone()];
        record.extend(row.iter().map(|cell| match cell {
            Some(v) => format!("{v}"),
            None => String::new(),
        }));
        writer.write_record(&record)?;
    }
    writer.flush()?;
    Ok(())
}

/// Read a matrix written by [`write_tau_matrix`] (or hand-authored in the
/// same layout).
pub fn read_tau_matrix<R: Real, I: Read>(input: I) -> Result<TauMatrix<R>, StatsError> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(input);
    let headers = reader.headers()?.clone();
    if headers.len() < 2 {
        return Err(StatsError::EmptyMatrix);
    }
    let datasets: Vec<String> = headers.iter().skip(1).map(str::to_string).collect();
    let mut metrics = Vec::new();
    let mut values = Vec::new();
    for (row_idx, record) in reader.records().enumerate() {
        let record = record?;
        let metric = record
            .get(0)
            .filter(|m| !m.is_empty())
            .ok_or(StatsError::MissingMetricId { row: row_idx + 2 })?;
        metrics.push(metric.to_string());
        let mut row = Vec::with_capacity(datasets.len());
        for col in 1..=datasets.len() {
            let cell = record.get(col).unwrap_or("");
            if cell.is_empty() {
                row.push(None);
            } else {
                let parsed: f64 = cell.parse().map_err(|_| StatsError::BadCell {
                    row: row_idx + 2,
                    value: cell.to_string(),
                })?;
                row.push(Some(R::from_f64(parsed).ok_or(StatsError::BadCell {
                    row: row_idx + 2,
                    value: cell.to_string(),
                })?));
            }
        }
        values.push(row);
    }
    TauMatrix::new(metrics, datasets, values)
}

/// Write a rank table: per-dataset rank columns plus `avg_rank`, rows
/// sorted best-first by average rank.
pub fn write_rank_table<R: Real, W: Write>(
    mut out: W,
    table: &RankTable<R>,
    comments: &[String],
) -> Result<(), StatsError> {
    for comment in comments {
        writeln!(out, "# {comment}")?;
    }
    let mut writer = csv::Writer::from_writer(out);
    let mut header = vec!["metric_id".to_string()];
    header.extend(table.datasets.iter().cloned());
    header.push("avg_rank".to_string());
    writer.write_record(&header)?;
    for idx in table.order_by_avg_rank() {
        let mut record = vec![table.metrics[idx].clone()];
        record.extend(table.ranks[idx].iter().map(|cell| match cell {
            Some(v) => format!("{v}"),
            None => String::new(),
        }));
        record.push(match table.avg_rank[idx] {
            Some(v) => format!("{v}"),
            None => String::new(),
        });
        writer.write_record(&record)?;
    }
    writer.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats::{rank_metrics, TieRule};

    #[test]
    fn matrix_round_trips_through_csv() {
        let matrix = TauMatrix::new(
            vec!["alpha".into(), "beta".into()],
            vec!["d1".into(), "d2".into()],
            vec![vec![Some(0.25), None], vec![Some(-0.5), Some(1.0)]],
        )
        .unwrap();
        let mut buffer = Vec::new();
        write_tau_matrix(&mut buffer, &matrix, &["seed=7".into()]).unwrap();
        let text = String::from_utf8(buffer.clone()).unwrap();
        assert!(text.starts_with("# seed=7\n"));
        let back: TauMatrix<f64> = read_tau_matrix(&buffer[..]).unwrap();
        assert_eq!(back, matrix);
    }

    #[test]
    fn bad_cells_error_with_row_number() {
        let data = "metric_id,d1\nalpha,not-a-number\n";
        let err = read_tau_matrix::<f64, _>(data.as_bytes()).unwrap_err();
        assert!(matches!(err, StatsError::BadCell { row: 2, .. }));
    }

    #[test]
    fn rank_table_rows_sorted_by_avg_rank() {
        let matrix = TauMatrix::new(
            vec!["weak".into(), "strong".into()],
            vec!["d1".into()],
            vec![vec![Some(0.1)], vec![Some(0.9)]],
        )
        .unwrap();
        let table = rank_metrics(&matrix, TieRule::Average).unwrap();
        let mut buffer = Vec::new();
        write_rank_table(&mut buffer, &table, &[]).unwrap();
        let text = String::from_utf8(buffer).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "metric_id,d1,avg_rank");
        assert!(lines[1].starts_with("strong,1"));
        assert!(lines[2].starts_with("weak,2"));
    }
}

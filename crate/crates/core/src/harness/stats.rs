use super::{HarnessError, RunRecord};
use std::collections::BTreeMap;

/// Five-number summary with linearly interpolated quartiles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantileSummary {
    pub min: f64,
    pub q25: f64,
    pub median: f64,
    pub q75: f64,
    pub max: f64,
}

pub fn quantiles(values: &[f64]) -> Result<QuantileSummary, HarnessError> {
    if values.is_empty() {
        return Err(HarnessError::EmptyInput);
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let q = |p: f64| {
        let pos = p * (v.len() - 1) as f64;
        let lo = pos.floor() as usize;
        let hi = pos.ceil() as usize;
        v[lo] + (pos - lo as f64) * (v[hi] - v[lo])
    };
    Ok(QuantileSummary {
        min: v[0],
        q25: q(0.25),
        median: q(0.5),
        q75: q(0.75),
        max: v[v.len() - 1],
    })
}

/// One summary point of one method.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub experiment: String,
    pub method: String,
    /// Iteration or time-bucket edge, depending on the axis.
    pub at: f64,
    pub residual: QuantileSummary,
}

type RunKey = (String, String, usize);

fn group_runs(records: &[RunRecord]) -> BTreeMap<RunKey, Vec<&RunRecord>> {
    let mut runs: BTreeMap<RunKey, Vec<&RunRecord>> = BTreeMap::new();
    for r in records {
        runs.entry((r.experiment.clone(), r.method.clone(), r.repeat))
            .or_default()
            .push(r);
    }
    for v in runs.values_mut() {
        v.sort_by_key(|r| r.iter);
    }
    runs
}

fn summarize_by<F>(records: &[RunRecord], grid_for: F) -> Result<Vec<SummaryRow>, HarnessError>
where
    F: Fn(&[&Vec<&RunRecord>]) -> Result<Vec<(f64, Vec<f64>)>, HarnessError>,
{
    let runs = group_runs(records);
    let mut by_method: BTreeMap<(String, String), Vec<&Vec<&RunRecord>>> = BTreeMap::new();
    for ((e, m, _), v) in &runs {
        by_method.entry((e.clone(), m.clone())).or_default().push(v);
    }
    let mut out = Vec::new();
    for ((experiment, method), group) in by_method {
        for (at, values) in grid_for(&group)? {
            out.push(SummaryRow {
                experiment: experiment.clone(),
                method: method.clone(),
                at,
                residual: quantiles(&values)?,
            });
        }
    }
    Ok(out)
}

/// Residual quantiles per method at every recorded iteration. Runs that
/// stopped early contribute their final residual to later iterations.
pub fn iteration_summary(records: &[RunRecord]) -> Result<Vec<SummaryRow>, HarnessError> {
    summarize_by(records, |group| {
        let mut grid: Vec<usize> = group.iter().flat_map(|run| run.iter().map(|r| r.iter)).collect();
        grid.sort_unstable();
        grid.dedup();
        Ok(grid
            .into_iter()
            .map(|k| {
                let values = group
                    .iter()
                    .map(|run| {
                        let idx = run.partition_point(|r| r.iter <= k);
                        run[idx.saturating_sub(1)].residual
                    })
                    .collect();
                (k as f64, values)
            })
            .collect())
    })
}

/// Residual quantiles per method at `buckets` equally spaced times ending
/// at the slowest run's final time. Every run's final record is used at the
/// last edge.
pub fn time_summary(records: &[RunRecord], buckets: usize) -> Result<Vec<SummaryRow>, HarnessError> {
    if buckets == 0 {
        return Err(HarnessError::Config("at least one time bucket is required".into()));
    }
    summarize_by(records, |group| {
        let mut end: f64 = 0.0;
        for run in group {
            for r in run.iter() {
                end = end.max(r.elapsed_s.ok_or(HarnessError::MissingTiming)?);
            }
        }
        Ok((1..=buckets)
            .map(|b| {
                let edge = if b == buckets {
                    end
                } else {
                    end * b as f64 / buckets as f64
                };
                let values = group
                    .iter()
                    .map(|run| {
                        let idx = run.partition_point(|r| r.elapsed_s.unwrap_or(0.0) <= edge);
                        run[idx.saturating_sub(1)].residual
                    })
                    .collect();
                (edge, values)
            })
            .collect())
    })
}

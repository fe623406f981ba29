//! Kendall Tau-b rank correlation with tie correction.
//!
//! `tau_b = (C - D) / sqrt((n0 - n1)(n0 - n2))` where `n0 = n(n-1)/2` and
//! `n1`/`n2` are the tied-pair counts within x and y. Pairs tied in both
//! vectors count toward neither C nor D. Computed in O(n log n) by sorting
//! on (x, y) and merge-counting inversions in y.

use serde::{Deserialize, Serialize};

use super::StatsError;
use crate::num::Real;

/// Tau-b, its significance, and the pair decomposition for one vector pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CorrelationResult<R> {
    pub tau_b: R,
    /// Two-sided p-value from the tie-corrected normal approximation.
    pub p_value: R,
    pub n: usize,
    pub concordant: u64,
    pub discordant: u64,
    pub ties_x_only: u64,
    pub ties_y_only: u64,
    pub ties_both: u64,
    /// Tie-group moments feeding the variance: `sum t(t-1)(2t+5)`,
    /// `sum t(t-1)`, `sum t(t-1)(t-2)` over x groups, then y groups.
    pub x_tie_moments: [u64; 3],
    pub y_tie_moments: [u64; 3],
}

impl<R: Real> CorrelationResult<R> {
    /// Total number of pairs, `n(n-1)/2`.
    pub fn pair_count(&self) -> u64 {
        let n = self.n as u64;
        n * (n - 1) / 2
    }
}

struct TieSummary {
    pairs: u64,          // sum t(t-1)/2
    moment_2t5: u64,     // sum t(t-1)(2t+5)
    moment_t1: u64,      // sum t(t-1)
    moment_t2: u64,      // sum t(t-1)(t-2)
}

fn tie_groups<R: Real, K: Fn(usize) -> R>(order: &[usize], key: K) -> TieSummary {
    let mut summary = TieSummary {
        pairs: 0,
        moment_2t5: 0,
        moment_t1: 0,
        moment_t2: 0,
    };
    let mut i = 0;
    while i < order.len() {
        let mut j = i + 1;
        while j < order.len() && key(order[j]) == key(order[i]) {
            j += 1;
        }
        let t = (j - i) as u64;
        summary.pairs += t * (t - 1) / 2;
        summary.moment_2t5 += t * (t - 1) * (2 * t + 5);
        summary.moment_t1 += t * (t - 1);
        summary.moment_t2 += t * (t - 1) * t.saturating_sub(2);
        i = j;
    }
    summary
}

fn merge_count_inversions<R: Real>(values: &mut [R], buffer: &mut [R]) -> u64 {
    let n = values.len();
    if n <= 1 {
        return 0;
    }
    let mid = n / 2;
    let (left, right) = values.split_at_mut(mid);
    let mut inversions = merge_count_inversions(left, &mut buffer[..mid])
        + merge_count_inversions(right, &mut buffer[mid..]);
    let (mut i, mut j, mut k) = (0, 0, 0);
    while i < left.len() && j < right.len() {
        if right[j] < left[i] {
            inversions += (left.len() - i) as u64;
            buffer[k] = right[j];
            j += 1;
        } else {
            buffer[k] = left[i];
            i += 1;
        }
        k += 1;
    }
    while i < left.len() {
        buffer[k] = left[i];
        i += 1;
        k += 1;
    }
    while j < right.len() {
        buffer[k] = right[j];
        j += 1;
        k += 1;
    }
    values.copy_from_slice(&buffer[..n]);
    inversions
}

/// Compute tau-b between `x` and `y`.
///
/// Errors on length mismatch, fewer than two observations, non-finite
/// values, or a constant vector (tau undefined).
pub fn kendall_tau_b<R: Real>(x: &[R], y: &[R]) -> Result<CorrelationResult<R>, StatsError> {
    if x.len() != y.len() {
        return Err(StatsError::LengthMismatch {
            x: x.len(),
            y: y.len(),
        });
    }
    let n = x.len();
    if n < 2 {
        return Err(StatsError::TooShort { n, min: 2 });
    }
    if x.iter().chain(y.iter()).any(|v| !v.is_finite()) {
        return Err(StatsError::NonFinite);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        x[a].partial_cmp(&x[b])
            .unwrap()
            .then(y[a].partial_cmp(&y[b]).unwrap())
    });

    let x_ties = tie_groups(&order, |i| x[i]);
    // Pairs tied in both coordinates: groups of equal (x, y).
    let both = {
        let mut pairs = 0u64;
        let mut i = 0;
        while i < n {
            let mut j = i + 1;
            while j < n && x[order[j]] == x[order[i]] && y[order[j]] == y[order[i]] {
                j += 1;
            }
            let t = (j - i) as u64;
            pairs += t * (t - 1) / 2;
            i = j;
        }
        pairs
    };

    let mut y_sequence: Vec<R> = order.iter().map(|&i| y[i]).collect();
    let mut buffer = y_sequence.clone();
    let discordant = merge_count_inversions(&mut y_sequence, &mut buffer);

    let mut y_order: Vec<usize> = (0..n).collect();
    y_order.sort_by(|&a, &b| y[a].partial_cmp(&y[b]).unwrap());
    let y_ties = tie_groups(&y_order, |i| y[i]);

    let n0 = (n as u64) * (n as u64 - 1) / 2;
    let denom_x = n0 - x_ties.pairs;
    let denom_y = n0 - y_ties.pairs;
    if denom_x == 0 || denom_y == 0 {
        return Err(StatsError::ConstantInput);
    }

    let concordant = n0 - x_ties.pairs - y_ties.pairs + both - discordant;
    let con_minus_dis = concordant as i64 - discordant as i64;
    let tau = R::from_i64(con_minus_dis).unwrap()
        / (R::from_u64(denom_x).unwrap() * R::from_u64(denom_y).unwrap()).sqrt();
    let tau = tau.min(R::one()).max(-R::one());

    let mut result = CorrelationResult {
        tau_b: tau,
        p_value: R::one(),
        n,
        concordant,
        discordant,
        ties_x_only: x_ties.pairs - both,
        ties_y_only: y_ties.pairs - both,
        ties_both: both,
        x_tie_moments: [x_ties.moment_2t5, x_ties.moment_t1, x_ties.moment_t2],
        y_tie_moments: [y_ties.moment_2t5, y_ties.moment_t1, y_ties.moment_t2],
    };
    result.p_value = tau_p_value(&result)?;
    Ok(result)
}

/// Two-sided p-value for `result` under the null of independence, using the
/// tie-corrected normal approximation of the C - D statistic.
pub fn tau_p_value<R: Real>(result: &CorrelationResult<R>) -> Result<R, StatsError> {
    let n = result.n;
    if n < 2 {
        return Err(StatsError::TooShort { n, min: 2 });
    }
    let nf = n as f64;
    let v0 = nf * (nf - 1.0) * (2.0 * nf + 5.0);
    let vt = result.x_tie_moments[0] as f64;
    let vu = result.y_tie_moments[0] as f64;
    let t1 = result.x_tie_moments[1] as f64;
    let u1 = result.y_tie_moments[1] as f64;
    let t2 = result.x_tie_moments[2] as f64;
    let u2 = result.y_tie_moments[2] as f64;

    let mut var = (v0 - vt - vu) / 18.0 + (t1 * u1) / (2.0 * nf * (nf - 1.0));
    if n > 2 {
        var += (t2 * u2) / (9.0 * nf * (nf - 1.0) * (nf - 2.0));
    }
    if var <= 0.0 {
        return Ok(R::one());
    }
    let z = (result.concordant as f64 - result.discordant as f64) / var.sqrt();
    let p = libm::erfc(z.abs() / std::f64::consts::SQRT_2);
    Ok(R::from_f64(p.clamp(0.0, 1.0)).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn perfect_concordance() {
        let r = kendall_tau_b(&[1.0, 2.0, 3.0], &[1.0, 2.0, 3.0]).unwrap();
        assert_relative_eq!(r.tau_b, 1.0);
        assert_eq!(r.concordant, 3);
        assert_eq!(r.discordant, 0);
    }

    #[test]
    fn perfect_discordance() {
        let r = kendall_tau_b(&[1.0, 2.0, 3.0], &[3.0, 2.0, 1.0]).unwrap();
        assert_relative_eq!(r.tau_b, -1.0);
    }

    #[test]
    fn tied_fixture_is_exactly_point_eight() {
        let r = kendall_tau_b(&[1.0, 2.0, 2.0, 3.0], &[1.0, 2.0, 3.0, 3.0]).unwrap();
        assert_relative_eq!(r.tau_b, 0.8);
        assert_eq!(r.concordant, 4);
        assert_eq!(r.discordant, 0);
        assert_eq!(r.ties_x_only, 1);
        assert_eq!(r.ties_y_only, 1);
        assert_eq!(r.ties_both, 0);
    }

    #[test]
    fn counts_sum_to_pair_total() {
        let x = [1.0, 1.0, 2.0, 2.0, 3.0, 3.0, 3.0];
        let y = [1.0, 2.0, 2.0, 2.0, 1.0, 3.0, 3.0];
        let r = kendall_tau_b(&x, &y).unwrap();
        assert_eq!(
            r.concordant + r.discordant + r.ties_x_only + r.ties_y_only + r.ties_both,
            r.pair_count()
        );
    }

    #[test]
    fn errors_on_bad_input() {
        assert!(matches!(
            kendall_tau_b(&[1.0, 2.0], &[1.0]),
            Err(StatsError::LengthMismatch { .. })
        ));
        assert!(matches!(
            kendall_tau_b::<f64>(&[1.0], &[1.0]),
            Err(StatsError::TooShort { .. })
        ));
        assert!(matches!(
            kendall_tau_b(&[2.0, 2.0, 2.0], &[1.0, 2.0, 3.0]),
            Err(StatsError::ConstantInput)
        ));
        assert!(matches!(
            kendall_tau_b(&[f64::NAN, 2.0], &[1.0, 2.0]),
            Err(StatsError::NonFinite)
        ));
    }

    #[test]
    fn null_center_has_p_one() {
        // C == D for this permutation, so z = 0 and p = 1.
        let x = [1.0, 2.0, 3.0, 4.0];
        let y = [2.0, 4.0, 1.0, 3.0];
        let r = kendall_tau_b(&x, &y).unwrap();
        assert_relative_eq!(r.tau_b, 0.0);
        assert_relative_eq!(r.p_value, 1.0);
    }

    #[test]
    fn strong_correlation_is_significant() {
        let x: Vec<f64> = (0..10).map(|i| i as f64).collect();
        let y = x.clone();
        let r = kendall_tau_b(&x, &y).unwrap();
        assert!(r.p_value < 1e-4, "p = {}", r.p_value);
    }

    #[test]
    fn p_value_needs_two_points() {
        let r = CorrelationResult::<f64> {
            tau_b: 0.0,
            p_value: 1.0,
            n: 1,
            concordant: 0,
            discordant: 0,
            ties_x_only: 0,
            ties_y_only: 0,
            ties_both: 0,
            x_tie_moments: [0; 3],
            y_tie_moments: [0; 3],
        };
        assert!(tau_p_value(&r).is_err());
    }

    #[test]
    fn symmetry_and_sign_antisymmetry() {
        let x = [1.0, 3.0, 2.0, 5.0, 4.0, 4.0];
        let y = [2.0, 1.0, 4.0, 3.0, 5.0, 5.0];
        let xy = kendall_tau_b(&x, &y).unwrap().tau_b;
        let yx = kendall_tau_b(&y, &x).unwrap().tau_b;
        assert_relative_eq!(xy, yx);
        let neg: Vec<f64> = y.iter().map(|v| -v).collect();
        let x_neg = kendall_tau_b(&x, &neg).unwrap().tau_b;
        assert_relative_eq!(x_neg, -xy);
    }

    #[test]
    fn invariant_under_monotone_transform() {
        let x = [0.5f64, 1.5, 1.5, 2.25, 9.0, 3.0];
        let y = [1.0f64, 4.0, 2.0, 8.0, 16.0, 2.0];
        let base = kendall_tau_b(&x, &y).unwrap().tau_b;
        let x_t: Vec<f64> = x.iter().map(|v| (v * 3.0).exp()).collect();
        let y_t: Vec<f64> = y.iter().map(|v| v.ln()).collect();
        let transformed = kendall_tau_b(&x_t, &y_t).unwrap().tau_b;
        assert_relative_eq!(base, transformed, epsilon = 1e-12);
    }

    #[test]
    fn f32_agrees_with_f64() {
        let x64 = [1.0f64, 2.0, 2.0, 3.0];
        let y64 = [1.0f64, 2.0, 3.0, 3.0];
        let x32: Vec<f32> = x64.iter().map(|&v| v as f32).collect();
        let y32: Vec<f32> = y64.iter().map(|&v| v as f32).collect();
        let r64 = kendall_tau_b(&x64, &y64).unwrap();
        let r32 = kendall_tau_b(&x32, &y32).unwrap();
        assert!((r64.tau_b - r32.tau_b as f64).abs() < 1e-6);
    }
}

//! Length-standardized sentiment trajectories.
//!
//! A valence series is resampled to a fixed number of bins by keeping the
//! leading coefficients of an unnormalized DCT-II and evaluating the
//! matching DCT-III reconstruction (with `1/n` amplitude compensation) at
//! the new length. This convention resamples constant signals exactly and
//! keeps the "absolute" trajectory in original sentiment units. The
//! "relative" trajectory is the same curve min-max scaled to `[-1, +1]`.

use std::f64::consts::PI;

use chrono::NaiveDate;
use serde::Serialize;
use thiserror::Error;

use crate::corpus::{CorpusError, TokenStream};
use crate::valence::ValenceSeries;

#[derive(Debug, Error)]
pub enum TrajectoryError {
    #[error("empty input vector")]
    EmptyInput,
    #[error("low-pass size {low_pass} out of range for input length {len}")]
    LowPassOutOfRange { low_pass: usize, len: usize },
    #[error("output length {n_bins} must be at least 2")]
    TooFewBins { n_bins: usize },
    #[error("series of {len} values is shorter than the low-pass size {low_pass}")]
    SeriesTooShort { len: usize, low_pass: usize },
    #[error("extrema radius {radius} invalid for {n_bins} bins (need radius >= 1 and n_bins > 2*radius)")]
    BadRadius { radius: usize, n_bins: usize },
    #[error("series length {series} does not match stream length {stream}")]
    LengthMismatch { series: usize, stream: usize },
    #[error(transparent)]
    Corpus(#[from] CorpusError),
}

/// Resampling parameters.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrajectoryParams {
    /// Number of leading DCT coefficients kept.
    pub low_pass: usize,
    /// Output trajectory length.
    pub n_bins: usize,
    /// Neighborhood half-width (in bins) for extremum detection.
    pub extrema_radius: usize,
}

impl TrajectoryParams {
    pub const DEFAULT_LOW_PASS: usize = 10;
    pub const CORPUS_BINS: usize = 10_000;
    pub const ARTIST_BINS: usize = 1_000;

    /// Default radius: 0.5% of the trajectory length, at least one bin.
    pub fn default_radius(n_bins: usize) -> usize {
        ((0.005 * n_bins as f64).ceil() as usize).max(1)
    }

    pub fn with_bins(n_bins: usize) -> Self {
        Self {
            low_pass: Self::DEFAULT_LOW_PASS,
            n_bins,
            extrema_radius: Self::default_radius(n_bins),
        }
    }

    /// Corpus-level defaults (10,000 bins).
    pub fn corpus() -> Self {
        Self::with_bins(Self::CORPUS_BINS)
    }

    /// Artist-level defaults (1,000 bins).
    pub fn artist() -> Self {
        Self::with_bins(Self::ARTIST_BINS)
    }

    pub fn validate(&self) -> Result<(), TrajectoryError> {
        if self.n_bins < 2 {
            return Err(TrajectoryError::TooFewBins { n_bins: self.n_bins });
        }
        if self.low_pass < 1 {
            return Err(TrajectoryError::LowPassOutOfRange {
                low_pass: self.low_pass,
                len: 0,
            });
        }
        if self.extrema_radius < 1 || self.n_bins <= 2 * self.extrema_radius {
            return Err(TrajectoryError::BadRadius {
                radius: self.extrema_radius,
                n_bins: self.n_bins,
            });
        }
        Ok(())
    }
}

/// Forward coefficients `C_k = Σ_t x_t · cos(π(2t+1)k / (2n))` for
/// `k = 0..L-1`, reconstructed at `N` points as
/// `y_j = (1/n)·[C_0 + 2·Σ_{k≥1} C_k · cos(π(2j+1)k / (2N))]`.
pub fn dct_lowpass_resample(
    values: &[f64],
    low_pass: usize,
    out_len: usize,
) -> Result<Vec<f64>, TrajectoryError> {
    let n = values.len();
    if n == 0 {
        return Err(TrajectoryError::EmptyInput);
    }
    if low_pass < 1 || low_pass > n {
        return Err(TrajectoryError::LowPassOutOfRange { low_pass, len: n });
    }
    if out_len < 2 {
        return Err(TrajectoryError::TooFewBins { n_bins: out_len });
    }

    let mut coeffs = vec![0.0f64; low_pass];
    for (k, c) in coeffs.iter_mut().enumerate() {
        let step = PI * k as f64 / (2.0 * n as f64);
        let mut acc = 0.0f64;
        for (t, &x) in values.iter().enumerate() {
            acc += x * (step * (2 * t + 1) as f64).cos();
        }
        *c = acc;
    }

    let inv_n = 1.0 / n as f64;
    let mut out = Vec::with_capacity(out_len);
    for j in 0..out_len {
        let mut acc = coeffs[0];
        for (k, &c) in coeffs.iter().enumerate().skip(1) {
            let angle = PI * k as f64 * (2 * j + 1) as f64 / (2.0 * out_len as f64);
            acc += 2.0 * c * angle.cos();
        }
        out.push(acc * inv_n);
    }
    Ok(out)
}

/// Min-max scaling output; `degenerate` flags a constant input, which maps
/// to all zeros instead of failing so batch processing never aborts.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaledVector {
    pub values: Vec<f64>,
    pub degenerate: bool,
}

/// Scale to `[-1, +1]`: `y = -1 + 2(x - min)/(max - min)`.
pub fn minmax_scale(values: &[f64]) -> Result<ScaledVector, TrajectoryError> {
    if values.is_empty() {
        return Err(TrajectoryError::EmptyInput);
    }
    let min = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if max == min {
        return Ok(ScaledVector {
            values: vec![0.0; values.len()],
            degenerate: true,
        });
    }
    let span = max - min;
    Ok(ScaledVector {
        values: values.iter().map(|&x| -1.0 + 2.0 * (x - min) / span).collect(),
        degenerate: false,
    })
}

/// A length-standardized trajectory with its bin → date mapping.
#[derive(Debug, Clone)]
pub struct Trajectory {
    /// Reconstruction in original sentiment units.
    pub absolute: Vec<f64>,
    /// `absolute` min-max scaled to `[-1, +1]` (all zeros when degenerate).
    pub relative: Vec<f64>,
    /// Publication date of the song containing each bin's center token.
    pub bin_dates: Vec<NaiveDate>,
    pub params: TrajectoryParams,
    pub degenerate: bool,
}

/// Resample a valence series into a dated trajectory.
pub fn extract_trajectory(
    series: &ValenceSeries,
    stream: &TokenStream,
    params: &TrajectoryParams,
) -> Result<Trajectory, TrajectoryError> {
    params.validate()?;
    if series.len() != stream.len() {
        return Err(TrajectoryError::LengthMismatch {
            series: series.len(),
            stream: stream.len(),
        });
    }
    if series.len() < params.low_pass {
        return Err(TrajectoryError::SeriesTooShort {
            len: series.len(),
            low_pass: params.low_pass,
        });
    }
    let absolute = dct_lowpass_resample(&series.values, params.low_pass, params.n_bins)?;
    let scaled = minmax_scale(&absolute)?;
    let bin_dates = (0..params.n_bins)
        .map(|b| stream.bin_to_date(b, params.n_bins))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Trajectory {
        absolute,
        relative: scaled.values,
        bin_dates,
        params: params.clone(),
        degenerate: scaled.degenerate,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtremumKind {
    Maximum,
    Minimum,
}

/// A local extremum of the relative trajectory.
#[derive(Debug, Clone, Serialize)]
pub struct Extremum {
    pub bin: usize,
    pub kind: ExtremumKind,
    /// Value on the relative scale.
    pub value: f64,
    /// `100 · (bin + 0.5) / n_bins`.
    pub progression_pct: f64,
    pub date: NaiveDate,
}

/// Neighborhood scan: bin `i` is a maximum iff `values[i] >= values[j]` for
/// all in-range `j` with `|j - i| <= radius` and strictly greater for at
/// least one of them; minima are symmetric. Boundary bins are eligible
/// (their neighborhood is truncated) and plateaus report the leftmost bin.
pub(crate) fn scan_extrema(values: &[f64], radius: usize) -> Vec<(usize, ExtremumKind)> {
    let n = values.len();
    let mut raw: Vec<(usize, ExtremumKind)> = Vec::new();
    for i in 0..n {
        let lo = i.saturating_sub(radius);
        let hi = (i + radius).min(n.saturating_sub(1));
        let mut ge_all = true;
        let mut le_all = true;
        let mut strictly_above = false;
        let mut strictly_below = false;
        for j in lo..=hi {
            if j == i {
                continue;
            }
            if values[i] < values[j] {
                ge_all = false;
            }
            if values[i] > values[j] {
                le_all = false;
            }
            if values[i] > values[j] {
                strictly_above = true;
            }
            if values[i] < values[j] {
                strictly_below = true;
            }
        }
        if ge_all && strictly_above {
            raw.push((i, ExtremumKind::Maximum));
        } else if le_all && strictly_below {
            raw.push((i, ExtremumKind::Minimum));
        }
    }
    // collapse plateau runs (qualifying bins joined by a constant stretch)
    // to their leftmost bin
    let mut out: Vec<(usize, ExtremumKind)> = Vec::new();
    for (bin, kind) in raw {
        match out.last() {
            Some(&(prev_bin, prev_kind))
                if prev_kind == kind && contiguous_plateau(values, prev_bin, bin) => {}
            _ => out.push((bin, kind)),
        }
    }
    out
}

/// True when every bin in `[left, right]` holds the same value.
fn contiguous_plateau(values: &[f64], left: usize, right: usize) -> bool {
    let v = values[left];
    values[left..=right].iter().all(|&x| x == v)
}

/// Local extrema of the relative trajectory, sorted by bin. A degenerate
/// (constant) trajectory yields an empty list.
pub fn find_extrema(traj: &Trajectory, radius: usize) -> Result<Vec<Extremum>, TrajectoryError> {
    let n_bins = traj.relative.len();
    if radius < 1 || n_bins <= 2 * radius {
        return Err(TrajectoryError::BadRadius { radius, n_bins });
    }
    if traj.degenerate {
        return Ok(Vec::new());
    }
    Ok(scan_extrema(&traj.relative, radius)
        .into_iter()
        .map(|(bin, kind)| Extremum {
            bin,
            kind,
            value: traj.relative[bin],
            progression_pct: 100.0 * (bin as f64 + 0.5) / n_bins as f64,
            date: traj.bin_dates[bin],
        })
        .collect())
}

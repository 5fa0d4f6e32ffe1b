//! Trajectory comparison and external-series alignment.
//!
//! Cosine similarity with the ±0.40 classification thresholds, ingestion of
//! monthly crime counts, projection of those counts onto a trajectory's bin
//! axis (median-token anchors, loess smoothing, min-max scaling) and the
//! anti-cyclic lead-lag scan pairing sentiment troughs with crime peaks.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::Path;

use chrono::NaiveDate;
use serde::Serialize;
use thiserror::Error;

use crate::corpus::TokenStream;
use crate::trajectory::{minmax_scale, scan_extrema, ExtremumKind, Trajectory, TrajectoryError};

pub const DEFAULT_SIMILARITY_THRESHOLD: f64 = 0.40;
pub const DEFAULT_LOESS_SPAN: f64 = 0.30;
pub const DEFAULT_MAX_LAG_DAYS: i64 = 90;

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("row {row}: malformed crime record: {message}")]
    Malformed { row: usize, message: String },
    #[error("missing column `{name}` in crime CSV header")]
    MissingColumn { name: &'static str },
    #[error("row {row}: unparseable month `{value}` (expected YYYY-MM)")]
    BadMonth { row: usize, value: String },
    #[error("row {row}: invalid count `{value}` (expected a non-negative integer)")]
    BadCount { row: usize, value: String },
    #[error("row {row}: duplicate month {month} for crime type `{crime_type}`")]
    DuplicateMonth {
        row: usize,
        month: YearMonth,
        crime_type: String,
    },
    #[error("vector lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("cosine similarity undefined for a zero vector")]
    ZeroVector,
    #[error("need at least 2 usable artists, found {found}")]
    TooFewArtists { found: usize },
    #[error("crime series and corpus share no months")]
    NoOverlap,
    #[error("loess needs at least 4 points, found {found}")]
    TooFewPoints { found: usize },
    #[error("span {span} out of range (0, 1]")]
    BadSpan { span: f64 },
    #[error("x values must be strictly increasing")]
    XNotIncreasing,
    #[error("anchors for months {first} and {second} collapse onto bin {bin}; use more bins or a larger corpus")]
    AnchorCollision {
        first: YearMonth,
        second: YearMonth,
        bin: usize,
    },
    #[error(transparent)]
    Trajectory(#[from] TrajectoryError),
}

// ---------------------------------------------------------------------------
// cosine similarity and classification
// ---------------------------------------------------------------------------

pub fn cosine_similarity(u: &[f64], v: &[f64]) -> Result<f64, AnalysisError> {
    if u.len() != v.len() {
        return Err(AnalysisError::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    let mut dot = 0.0;
    let mut nu = 0.0;
    let mut nv = 0.0;
    for (&a, &b) in u.iter().zip(v) {
        dot += a * b;
        nu += a * a;
        nv += b * b;
    }
    if nu == 0.0 || nv == 0.0 {
        return Err(AnalysisError::ZeroVector);
    }
    Ok(dot / (nu.sqrt() * nv.sqrt()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SimilarityLabel {
    /// Diagonal entries.
    SelfPair,
    Similar,
    Dissimilar,
    Independent,
}

impl SimilarityLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::SelfPair => "self",
            Self::Similar => "similar",
            Self::Dissimilar => "dissimilar",
            Self::Independent => "independent",
        }
    }
}

impl fmt::Display for SimilarityLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Strictly greater than `threshold` → similar, strictly smaller than
/// `-threshold` → dissimilar, everything else (boundaries included) →
/// independent.
pub fn classify_similarity(value: f64, threshold: f64) -> SimilarityLabel {
    if value > threshold {
        SimilarityLabel::Similar
    } else if value < -threshold {
        SimilarityLabel::Dissimilar
    } else {
        SimilarityLabel::Independent
    }
}

/// Which trajectory vector similarity is computed on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VectorMode {
    /// Min-max scaled curves (the default).
    Relative,
    /// Raw reconstruction in sentiment units.
    Absolute,
}

impl VectorMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Relative => "relative",
            Self::Absolute => "absolute",
        }
    }
    fn select<'a>(&self, t: &'a Trajectory) -> &'a [f64] {
        match self {
            Self::Relative => &t.relative,
            Self::Absolute => &t.absolute,
        }
    }
}

/// One artist's trajectory plus the song count used for ordering.
#[derive(Debug, Clone)]
pub struct ArtistTrajectory {
    pub artist: String,
    pub songs: usize,
    pub trajectory: Trajectory,
}

/// Pairwise cosines and their classification labels.
#[derive(Debug, Clone)]
pub struct SimilarityMatrix {
    /// Ordered by descending song count, then name.
    pub artists: Vec<String>,
    pub song_counts: Vec<usize>,
    pub values: Vec<Vec<f64>>,
    pub labels: Vec<Vec<SimilarityLabel>>,
    /// Artists dropped because their selected vector had zero norm.
    pub excluded: Vec<String>,
    pub threshold: f64,
    pub mode: VectorMode,
}

pub fn similarity_matrix(
    items: &[ArtistTrajectory],
    mode: VectorMode,
    threshold: f64,
) -> Result<SimilarityMatrix, AnalysisError> {
    let mut ordered: Vec<&ArtistTrajectory> = items.iter().collect();
    ordered.sort_by(|a, b| b.songs.cmp(&a.songs).then_with(|| a.artist.cmp(&b.artist)));

    let mut kept: Vec<&ArtistTrajectory> = Vec::new();
    let mut excluded = Vec::new();
    for item in ordered {
        let vec = mode.select(&item.trajectory);
        if vec.iter().all(|&x| x == 0.0) {
            excluded.push(item.artist.clone());
        } else {
            kept.push(item);
        }
    }
    if kept.len() < 2 {
        return Err(AnalysisError::TooFewArtists { found: kept.len() });
    }
    let len0 = mode.select(&kept[0].trajectory).len();
    for item in &kept {
        let len = mode.select(&item.trajectory).len();
        if len != len0 {
            return Err(AnalysisError::LengthMismatch {
                left: len0,
                right: len,
            });
        }
    }

    let n = kept.len();
    let mut values = vec![vec![0.0; n]; n];
    let mut labels = vec![vec![SimilarityLabel::SelfPair; n]; n];
    for i in 0..n {
        values[i][i] = 1.0;
        for j in (i + 1)..n {
            let cos = cosine_similarity(
                mode.select(&kept[i].trajectory),
                mode.select(&kept[j].trajectory),
            )?;
            let label = classify_similarity(cos, threshold);
            values[i][j] = cos;
            values[j][i] = cos;
            labels[i][j] = label;
            labels[j][i] = label;
        }
    }
    Ok(SimilarityMatrix {
        artists: kept.iter().map(|i| i.artist.clone()).collect(),
        song_counts: kept.iter().map(|i| i.songs).collect(),
        values,
        labels,
        excluded,
        threshold,
        mode,
    })
}

// ---------------------------------------------------------------------------
// crime series
// ---------------------------------------------------------------------------

/// A calendar month with total ordering and index arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YearMonth {
    pub year: i32,
    /// 1-based.
    pub month: u32,
}

impl YearMonth {
    pub fn new(year: i32, month: u32) -> Option<Self> {
        (1..=12).contains(&month).then_some(Self { year, month })
    }

    pub fn parse(s: &str) -> Option<Self> {
        let (y, m) = s.split_once('-')?;
        if y.len() != 4 || m.len() != 2 {
            return None;
        }
        Self::new(y.parse().ok()?, m.parse().ok()?)
    }

    pub fn of_date(date: NaiveDate) -> Self {
        use chrono::Datelike;
        Self {
            year: date.year(),
            month: date.month(),
        }
    }

    /// Months since year 0; consecutive months differ by exactly 1.
    pub fn index(&self) -> i64 {
        self.year as i64 * 12 + (self.month as i64 - 1)
    }

    /// Monthly aggregates are dated to mid-month.
    pub fn mid_month(&self) -> NaiveDate {
        NaiveDate::from_ymd_opt(self.year, self.month, 15).expect("month validated")
    }
}

impl fmt::Display for YearMonth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:04}-{:02}", self.year, self.month)
    }
}

impl Serialize for YearMonth {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Crime categories; unknown labels are preserved verbatim.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum CrimeType {
    Homicide,
    RobberyPersonal,
    ViolenceWithInjury,
    Other(String),
}

impl CrimeType {
    pub fn parse(s: &str) -> Self {
        match s {
            "homicide" => Self::Homicide,
            "robbery_personal" => Self::RobberyPersonal,
            "violence_with_injury" => Self::ViolenceWithInjury,
            other => Self::Other(other.to_string()),
        }
    }

    pub fn label(&self) -> &str {
        match self {
            Self::Homicide => "homicide",
            Self::RobberyPersonal => "robbery_personal",
            Self::ViolenceWithInjury => "violence_with_injury",
            Self::Other(s) => s,
        }
    }
}

impl fmt::Display for CrimeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Monthly counts for one crime type, strictly increasing in month.
#[derive(Debug, Clone)]
pub struct CrimeSeries {
    pub crime_type: CrimeType,
    pub points: Vec<(YearMonth, u64)>,
}

/// Load `month,type,count` CSV; one series per distinct type, sorted by
/// type label.
pub fn load_crime(path: &Path) -> Result<Vec<CrimeSeries>, AnalysisError> {
    let text = fs::read_to_string(path).map_err(|source| AnalysisError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| AnalysisError::Malformed {
            row: 1,
            message: e.to_string(),
        })?
        .clone();
    let col = |name: &'static str| -> Result<usize, AnalysisError> {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or(AnalysisError::MissingColumn { name })
    };
    let (c_month, c_type, c_count) = (col("month")?, col("type")?, col("count")?);

    let mut by_type: BTreeMap<String, Vec<(usize, YearMonth, u64)>> = BTreeMap::new();
    for record in reader.records() {
        let record = record.map_err(|e| AnalysisError::Malformed {
            row: e.position().map(|p| p.line() as usize).unwrap_or(0),
            message: e.to_string(),
        })?;
        let row = record.position().map(|p| p.line() as usize).unwrap_or(0);
        let month_raw = record.get(c_month).unwrap_or("");
        let month = YearMonth::parse(month_raw).ok_or_else(|| AnalysisError::BadMonth {
            row,
            value: month_raw.to_string(),
        })?;
        let type_raw = record.get(c_type).unwrap_or("").to_string();
        let count_raw = record.get(c_count).unwrap_or("");
        let count: i64 = count_raw.parse().map_err(|_| AnalysisError::BadCount {
            row,
            value: count_raw.to_string(),
        })?;
        if count < 0 {
            return Err(AnalysisError::BadCount {
                row,
                value: count_raw.to_string(),
            });
        }
        by_type
            .entry(type_raw)
            .or_default()
            .push((row, month, count as u64));
    }

    let mut out = Vec::new();
    for (label, mut rows) in by_type {
        rows.sort_by_key(|&(_, m, _)| m);
        for pair in rows.windows(2) {
            if pair[0].1 == pair[1].1 {
                return Err(AnalysisError::DuplicateMonth {
                    row: pair[1].0,
                    month: pair[1].1,
                    crime_type: label,
                });
            }
        }
        out.push(CrimeSeries {
            crime_type: CrimeType::parse(&label),
            points: rows.into_iter().map(|(_, m, c)| (m, c)).collect(),
        });
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// alignment onto the trajectory axis
// ---------------------------------------------------------------------------

/// A month's position on the trajectory bin axis.
#[derive(Debug, Clone, Serialize)]
pub struct Anchor {
    pub month: YearMonth,
    pub bin: usize,
    pub count: u64,
    /// True when the month had no songs and its bin was interpolated.
    pub interpolated: bool,
}

/// Bin that contains token `idx` when `n_tokens` tokens map onto `n_bins`.
fn bin_of_token(idx: usize, n_tokens: usize, n_bins: usize) -> usize {
    let bin = ((idx as f64 + 0.5) / n_tokens as f64 * n_bins as f64).floor() as usize;
    bin.min(n_bins - 1)
}

/// Project a crime series onto the stream's bin axis. Months with songs
/// anchor at the bin of their median token; months without songs (but inside
/// the corpus range) interpolate linearly between the surrounding anchored
/// months; months outside the range are dropped with a warning.
pub fn align_crime(
    series: &CrimeSeries,
    stream: &TokenStream,
    n_bins: usize,
) -> Result<(Vec<Anchor>, Vec<String>), AnalysisError> {
    // median token index of every month that has songs
    let mut month_bins: BTreeMap<YearMonth, usize> = BTreeMap::new();
    {
        let mut token_indices: BTreeMap<YearMonth, (usize, usize)> = BTreeMap::new();
        for song_idx in 0..stream.n_songs() {
            let (start, end) = stream.song_token_range(song_idx);
            let month = YearMonth::of_date(stream.songs()[song_idx].date);
            token_indices
                .entry(month)
                .and_modify(|(s, e)| {
                    *s = (*s).min(start);
                    *e = (*e).max(end);
                })
                .or_insert((start, end));
        }
        for (month, (start, end)) in token_indices {
            let median = start + (end - start - 1) / 2;
            month_bins.insert(month, bin_of_token(median, stream.len(), n_bins));
        }
    }
    let first_month = *month_bins.keys().next().expect("non-empty stream");
    let last_month = *month_bins.keys().next_back().expect("non-empty stream");

    let mut warnings = Vec::new();
    let mut anchors: Vec<Anchor> = Vec::new();
    for &(month, count) in &series.points {
        if month < first_month || month > last_month {
            warnings.push(format!(
                "{}: month {month} outside corpus range {first_month}..{last_month}, dropped",
                series.crime_type
            ));
            continue;
        }
        let (bin, interpolated) = match month_bins.get(&month) {
            Some(&bin) => (bin, false),
            None => {
                let (&m1, &b1) = month_bins.range(..month).next_back().expect("bounded below");
                let (&m2, &b2) = month_bins.range(month..).next().expect("bounded above");
                let t = (month.index() - m1.index()) as f64 / (m2.index() - m1.index()) as f64;
                let bin = (b1 as f64 + t * (b2 as f64 - b1 as f64)).round() as usize;
                (bin, true)
            }
        };
        if let Some(prev) = anchors.last() {
            if bin <= prev.bin {
                if interpolated {
                    warnings.push(format!(
                        "{}: interpolated anchor for {month} collides with bin {bin}, dropped",
                        series.crime_type
                    ));
                    continue;
                }
                return Err(AnalysisError::AnchorCollision {
                    first: prev.month,
                    second: month,
                    bin,
                });
            }
        }
        anchors.push(Anchor {
            month,
            bin,
            count,
            interpolated,
        });
    }
    if anchors.is_empty() {
        return Err(AnalysisError::NoOverlap);
    }
    Ok((anchors, warnings))
}

// ---------------------------------------------------------------------------
// loess
// ---------------------------------------------------------------------------

fn tricube(u: f64) -> f64 {
    if u >= 1.0 {
        0.0
    } else {
        let t = 1.0 - u * u * u;
        t * t * t
    }
}

/// Local quadratic regression with tricube weights over the
/// `q = max(4, ceil(span·n))` nearest neighbors of each evaluation point;
/// no robustness iterations. Degenerate local fits fall back to a local
/// linear fit, then to the local weighted mean.
pub fn loess_smooth(
    points: &[(f64, f64)],
    span: f64,
    eval_at: &[f64],
) -> Result<Vec<f64>, AnalysisError> {
    let n = points.len();
    if n < 4 {
        return Err(AnalysisError::TooFewPoints { found: n });
    }
    if !(span > 0.0 && span <= 1.0) {
        return Err(AnalysisError::BadSpan { span });
    }
    for pair in points.windows(2) {
        if pair[1].0 <= pair[0].0 {
            return Err(AnalysisError::XNotIncreasing);
        }
    }
    let q = ((span * n as f64).ceil() as usize).max(4).min(n);

    let mut out = Vec::with_capacity(eval_at.len());
    for &x0 in eval_at {
        // q nearest neighbors via a two-pointer window (ties prefer smaller x)
        let insert = points.partition_point(|&(x, _)| x < x0);
        let mut lo = insert;
        let mut hi = insert; // window is [lo, hi)
        while hi - lo < q {
            let left_dist = if lo > 0 {
                (x0 - points[lo - 1].0).abs()
            } else {
                f64::INFINITY
            };
            let right_dist = if hi < n {
                (points[hi].0 - x0).abs()
            } else {
                f64::INFINITY
            };
            if left_dist <= right_dist {
                lo -= 1;
            } else {
                hi += 1;
            }
        }
        let window = &points[lo..hi];
        let d_max = window
            .iter()
            .map(|&(x, _)| (x - x0).abs())
            .fold(0.0f64, f64::max);
        out.push(fit_local(window, x0, d_max));
    }
    Ok(out)
}

/// Weighted quadratic fit on `u = (x - x0)/d_max`, evaluated at `x0`
/// (i.e. the fitted intercept).
fn fit_local(window: &[(f64, f64)], x0: f64, d_max: f64) -> f64 {
    let scale = if d_max > 0.0 { d_max } else { 1.0 };
    let mut s = [0.0f64; 5]; // Σ w·u^k
    let mut t = [0.0f64; 3]; // Σ w·u^k·y
    for &(x, y) in window {
        let u = (x - x0) / scale;
        let w = tricube(u.abs() * scale / if d_max > 0.0 { d_max } else { 1.0 });
        let mut p = w;
        for k in 0..5 {
            s[k] += p;
            if k < 3 {
                t[k] += p * y;
            }
            p *= u;
        }
    }
    // quadratic normal equations
    if let Some(b0) = solve3(
        [[s[0], s[1], s[2]], [s[1], s[2], s[3]], [s[2], s[3], s[4]]],
        [t[0], t[1], t[2]],
    ) {
        return b0;
    }
    // linear fallback
    let det = s[0] * s[2] - s[1] * s[1];
    if det.abs() > 1e-12 {
        return (t[0] * s[2] - t[1] * s[1]) / det;
    }
    // weighted mean fallback
    if s[0] > 0.0 {
        return t[0] / s[0];
    }
    window.iter().map(|&(_, y)| y).sum::<f64>() / window.len() as f64
}

/// Solve a symmetric 3×3 system by Gaussian elimination with partial
/// pivoting; returns the first unknown or `None` when near-singular.
fn solve3(mut a: [[f64; 3]; 3], mut b: [f64; 3]) -> Option<f64> {
    let mut order = [0usize, 1, 2];
    for col in 0..3 {
        let (pivot_row, pivot_val) = (col..3)
            .map(|r| (r, a[r][col].abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))?;
        if pivot_val < 1e-10 {
            return None;
        }
        a.swap(col, pivot_row);
        b.swap(col, pivot_row);
        order.swap(col, pivot_row);
        for r in (col + 1)..3 {
            let f = a[r][col] / a[col][col];
            for c in col..3 {
                a[r][c] -= f * a[col][c];
            }
            b[r] -= f * b[col];
        }
    }
    let x2 = b[2] / a[2][2];
    let x1 = (b[1] - a[1][2] * x2) / a[1][1];
    let x0 = (b[0] - a[0][1] * x1 - a[0][2] * x2) / a[0][0];
    Some(x0)
}

// ---------------------------------------------------------------------------
// aligned series and lead-lag
// ---------------------------------------------------------------------------

/// A crime series projected, smoothed and scaled onto the bin axis.
#[derive(Debug, Clone)]
pub struct AlignedSeries {
    pub crime_type: CrimeType,
    pub anchors: Vec<Anchor>,
    /// First bin covered; `smoothed`/`scaled` run from here.
    pub start_bin: usize,
    /// Loess evaluations at every covered integer bin.
    pub smoothed: Vec<f64>,
    /// `smoothed` min-max scaled to `[-1, +1]`.
    pub scaled: Vec<f64>,
    pub degenerate: bool,
    pub span: f64,
}

impl AlignedSeries {
    /// Align, smooth (loess at every covered bin) and scale one series.
    pub fn build(
        series: &CrimeSeries,
        stream: &TokenStream,
        n_bins: usize,
        span: f64,
    ) -> Result<(Self, Vec<String>), AnalysisError> {
        let (anchors, warnings) = align_crime(series, stream, n_bins)?;
        let points: Vec<(f64, f64)> = anchors
            .iter()
            .map(|a| (a.bin as f64, a.count as f64))
            .collect();
        let start_bin = anchors.first().expect("non-empty anchors").bin;
        let end_bin = anchors.last().expect("non-empty anchors").bin;
        let eval_at: Vec<f64> = (start_bin..=end_bin).map(|b| b as f64).collect();
        let smoothed = loess_smooth(&points, span, &eval_at)?;
        let scaled = minmax_scale(&smoothed)?;
        Ok((
            Self {
                crime_type: series.crime_type.clone(),
                anchors,
                start_bin,
                smoothed,
                scaled: scaled.values,
                degenerate: scaled.degenerate,
                span,
            },
            warnings,
        ))
    }

    pub fn end_bin(&self) -> usize {
        self.start_bin + self.smoothed.len().saturating_sub(1)
    }

    /// Month of the anchor nearest to `bin` (ties prefer the earlier month).
    pub fn month_at_bin(&self, bin: usize) -> YearMonth {
        self.anchors
            .iter()
            .min_by_key(|a| (a.bin.abs_diff(bin), a.month))
            .expect("non-empty anchors")
            .month
    }
}

/// A sentiment trough followed by a crime peak within the lag window.
#[derive(Debug, Clone, Serialize)]
pub struct LeadLagCandidate {
    pub crime_type: String,
    pub trough_bin: usize,
    pub trough_date: NaiveDate,
    pub peak_bin: usize,
    pub peak_date: NaiveDate,
    pub lag_days: i64,
}

/// All (sentiment minimum, crime maximum) pairs with
/// `0 < peak_date − trough_date ≤ max_lag_days`, sorted by lag.
///
/// Sentiment minima come from the relative curve, crime maxima from the
/// scaled curve; both use the trajectory's extremum radius (clamped to the
/// crime curve's extent). Crime peaks are dated mid-month via the nearest
/// anchor.
pub fn lead_lag_candidates(
    sentiment: &Trajectory,
    crime: &AlignedSeries,
    max_lag_days: i64,
) -> Vec<LeadLagCandidate> {
    let radius = sentiment.params.extrema_radius.max(1);
    let troughs: Vec<(usize, NaiveDate)> = if sentiment.degenerate {
        Vec::new()
    } else {
        scan_extrema(&sentiment.relative, radius)
            .into_iter()
            .filter(|&(_, kind)| kind == ExtremumKind::Minimum)
            .map(|(bin, _)| (bin, sentiment.bin_dates[bin]))
            .collect()
    };
    let crime_radius = radius
        .min(crime.scaled.len().saturating_sub(1) / 2)
        .max(1);
    let peaks: Vec<(usize, NaiveDate)> = if crime.degenerate {
        Vec::new()
    } else {
        scan_extrema(&crime.scaled, crime_radius)
            .into_iter()
            .filter(|&(_, kind)| kind == ExtremumKind::Maximum)
            .map(|(offset, _)| {
                let bin = crime.start_bin + offset;
                (bin, crime.month_at_bin(bin).mid_month())
            })
            .collect()
    };

    let mut out = Vec::new();
    for &(trough_bin, trough_date) in &troughs {
        for &(peak_bin, peak_date) in &peaks {
            let lag_days = (peak_date - trough_date).num_days();
            if lag_days > 0 && lag_days <= max_lag_days {
                out.push(LeadLagCandidate {
                    crime_type: crime.crime_type.label().to_string(),
                    trough_bin,
                    trough_date,
                    peak_bin,
                    peak_date,
                    lag_days,
                });
            }
        }
    }
    sort_candidates(&mut out);
    out
}

/// Candidates across several aligned series, merged deterministically.
pub fn lead_lag_all(
    sentiment: &Trajectory,
    crimes: &[AlignedSeries],
    max_lag_days: i64,
) -> Vec<LeadLagCandidate> {
    let mut out: Vec<LeadLagCandidate> = crimes
        .iter()
        .flat_map(|c| lead_lag_candidates(sentiment, c, max_lag_days))
        .collect();
    sort_candidates(&mut out);
    out
}

fn sort_candidates(out: &mut [LeadLagCandidate]) {
    out.sort_by(|a, b| {
        a.lag_days
            .cmp(&b.lag_days)
            .then_with(|| a.crime_type.cmp(&b.crime_type))
            .then_with(|| a.trough_bin.cmp(&b.trough_bin))
            .then_with(|| a.peak_bin.cmp(&b.peak_bin))
    });
}

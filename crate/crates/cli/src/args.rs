//! Command-line surface.

use std::path::PathBuf;

use chrono::NaiveDate;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "sentarc",
    version,
    about = "Sentiment trajectory analytics for time-ordered lyric corpora",
    propagate_version = true
)]
pub struct Cli {
    /// Worker threads for per-artist work (0 = library default).
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Corpus statistics: song/token counts, song-length mean and SD, date range.
    Stats(StatsArgs),
    /// Out-of-vocabulary rates against a frequency list, plus the annotation worksheet.
    Oov(OovArgs),
    /// Corpus- or artist-level sentiment trajectories (CSV + SVG).
    Trajectory(TrajectoryArgs),
    /// Pairwise cosine similarity between artist trajectories.
    Similarity(SimilarityArgs),
    /// Align monthly crime counts onto the corpus trajectory and scan for lead-lag candidates.
    Crime(CrimeArgs),
    /// Run the full pipeline (stats, oov, trajectories, similarity, crime) into one directory.
    Report(ReportArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormatArg {
    Jsonl,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum LevelArg {
    Corpus,
    Artist,
}

#[derive(Args, Debug, Clone)]
pub struct CorpusArgs {
    /// Songs file: JSONL ({"artist","title","date","lyrics"} per line) or
    /// CSV with header artist,title,date,lyrics.
    #[arg(long)]
    pub songs: PathBuf,

    /// Input format; default inferred from the file extension.
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,

    /// Keep only songs dated on/after this day (YYYY-MM-DD).
    #[arg(long)]
    pub min_date: Option<NaiveDate>,

    /// Keep only songs dated on/before this day (YYYY-MM-DD).
    #[arg(long)]
    pub max_date: Option<NaiveDate>,
}

#[derive(Args, Debug, Clone)]
pub struct LexiconArgs {
    /// Sentiment lexicon TSV: term<TAB>valence.
    #[arg(long)]
    pub sentiment: PathBuf,

    /// Valence shifter TSV: term<TAB>negator|amplifier|deamplifier|adversative.
    #[arg(long)]
    pub shifters: PathBuf,

    /// Optional slang translation TSV applied before scoring
    /// (term<TAB>replacement words, or a filled annotation worksheet).
    #[arg(long)]
    pub slang: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct ValenceArgs {
    /// Backward context window (tokens) examined for shifters.
    #[arg(long, default_value_t = 4)]
    pub window: usize,

    /// Magnitude step per amplifier / de-amplifier in the window.
    #[arg(long, default_value_t = 0.8)]
    pub amp_weight: f64,

    /// Boost applied when an adversative conjunction bounds the window.
    #[arg(long, default_value_t = 0.25)]
    pub adv_weight: f64,

    /// Lower bound on the magnitude multiplier.
    #[arg(long, default_value_t = 0.2)]
    pub floor: f64,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// Directory for output artifacts.
    #[arg(long, default_value = ".")]
    pub out: PathBuf,

    /// Record a generation timestamp in artifact headers (off by default so
    /// identical runs produce byte-identical files).
    #[arg(long, default_value_t = false)]
    pub stamp: bool,
}

#[derive(Args, Debug)]
pub struct StatsArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct OovArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,

    /// Reference frequency list: one word per line, most frequent first.
    #[arg(long)]
    pub freq: PathBuf,

    /// Optional slang translation TSV applied before measuring.
    #[arg(long)]
    pub slang: Option<PathBuf>,

    /// Number of ranked OOV terms kept in the report and worksheet.
    #[arg(long, default_value_t = 300)]
    pub top_k: usize,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct TrajectoryArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,
    #[command(flatten)]
    pub lexicons: LexiconArgs,
    #[command(flatten)]
    pub valence: ValenceArgs,

    /// Trajectory level: one curve for the whole corpus, or one per artist.
    #[arg(long, value_enum, default_value_t = LevelArg::Corpus)]
    pub level: LevelArg,

    /// Output trajectory length (default: 10000 corpus-level, 1000 artist-level).
    #[arg(long)]
    pub bins: Option<usize>,

    /// Number of leading DCT coefficients kept.
    #[arg(long, default_value_t = 10)]
    pub low_pass: usize,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct SimilarityArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,
    #[command(flatten)]
    pub lexicons: LexiconArgs,
    #[command(flatten)]
    pub valence: ValenceArgs,

    /// Only compare artists with at least this many songs.
    #[arg(long, default_value_t = 23)]
    pub min_songs: usize,

    /// Artist trajectory length.
    #[arg(long, default_value_t = 1000)]
    pub bins: usize,

    /// Number of leading DCT coefficients kept.
    #[arg(long, default_value_t = 10)]
    pub low_pass: usize,

    /// Classification threshold: > t similar, < -t dissimilar, else independent.
    #[arg(long, default_value_t = 0.40)]
    pub threshold: f64,

    /// Compare absolute (unscaled) trajectory vectors instead of relative ones.
    #[arg(long, default_value_t = false)]
    pub absolute: bool,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct CrimeArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,
    #[command(flatten)]
    pub lexicons: LexiconArgs,
    #[command(flatten)]
    pub valence: ValenceArgs,

    /// Monthly crime counts CSV with header month,type,count (month = YYYY-MM).
    #[arg(long)]
    pub crime: PathBuf,

    /// Loess span (fraction of anchors in each local fit).
    #[arg(long, default_value_t = 0.30)]
    pub span: f64,

    /// Maximum days between a sentiment trough and a following crime peak.
    #[arg(long, default_value_t = 90)]
    pub max_lag: i64,

    /// Corpus trajectory length.
    #[arg(long, default_value_t = 10000)]
    pub bins: usize,

    /// Number of leading DCT coefficients kept.
    #[arg(long, default_value_t = 10)]
    pub low_pass: usize,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct ReportArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,
    #[command(flatten)]
    pub lexicons: LexiconArgs,
    #[command(flatten)]
    pub valence: ValenceArgs,

    /// Reference frequency list; when absent the OOV step is skipped.
    #[arg(long)]
    pub freq: Option<PathBuf>,

    /// Monthly crime counts CSV; when absent the crime step is skipped.
    #[arg(long)]
    pub crime: Option<PathBuf>,

    /// Number of ranked OOV terms kept in the report and worksheet.
    #[arg(long, default_value_t = 300)]
    pub top_k: usize,

    /// Only compare artists with at least this many songs.
    #[arg(long, default_value_t = 23)]
    pub min_songs: usize,

    /// Corpus trajectory length.
    #[arg(long, default_value_t = 10000)]
    pub bins: usize,

    /// Artist trajectory length.
    #[arg(long, default_value_t = 1000)]
    pub artist_bins: usize,

    /// Number of leading DCT coefficients kept.
    #[arg(long, default_value_t = 10)]
    pub low_pass: usize,

    /// Classification threshold for similarity labels.
    #[arg(long, default_value_t = 0.40)]
    pub threshold: f64,

    /// Loess span for crime smoothing.
    #[arg(long, default_value_t = 0.30)]
    pub span: f64,

    /// Maximum lead-lag window in days.
    #[arg(long, default_value_t = 90)]
    pub max_lag: i64,

    #[command(flatten)]
    pub output: OutputArgs,
}

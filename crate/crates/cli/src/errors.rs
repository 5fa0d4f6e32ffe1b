//! Error aggregation and exit-code policy.
//!
//! Exit codes: 0 success, 2 input/parse error, 3 precondition violation,
//! 4 internal invariant breach.

use sentarc_core::analysis::AnalysisError;
use sentarc_core::corpus::CorpusError;
use sentarc_core::lexicon::LexiconError;
use sentarc_core::trajectory::TrajectoryError;
use thiserror::Error;

pub const EXIT_INPUT: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Lexicon(#[from] LexiconError),
    #[error(transparent)]
    Trajectory(#[from] TrajectoryError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Corpus(e) => match e {
                CorpusError::Io { .. }
                | CorpusError::Malformed { .. }
                | CorpusError::MissingField { .. }
                | CorpusError::BadDate { .. }
                | CorpusError::EmptyLyrics { .. }
                | CorpusError::EmptyArtist { .. }
                | CorpusError::InvalidRecord { .. } => EXIT_INPUT,
                CorpusError::EmptyCollection => EXIT_PRECONDITION,
                CorpusError::BinOutOfRange { .. } => EXIT_INTERNAL,
            },
            CliError::Lexicon(e) => match e {
                LexiconError::Io { .. }
                | LexiconError::WriteIo { .. }
                | LexiconError::Parse { .. }
                | LexiconError::DuplicateTerm { .. }
                | LexiconError::UnknownCategory { .. }
                | LexiconError::BadValence { .. }
                | LexiconError::CyclicRule { .. } => EXIT_INPUT,
                LexiconError::EmptyTokens | LexiconError::EmptyReference => EXIT_PRECONDITION,
            },
            CliError::Trajectory(e) => match e {
                TrajectoryError::EmptyInput
                | TrajectoryError::LowPassOutOfRange { .. }
                | TrajectoryError::TooFewBins { .. }
                | TrajectoryError::SeriesTooShort { .. }
                | TrajectoryError::BadRadius { .. } => EXIT_PRECONDITION,
                TrajectoryError::LengthMismatch { .. } => EXIT_INTERNAL,
                TrajectoryError::Corpus(c) => CliError::Corpus(clone_corpus_class(c)).exit_code(),
            },
            CliError::Analysis(e) => match e {
                AnalysisError::Io { .. }
                | AnalysisError::Malformed { .. }
                | AnalysisError::MissingColumn { .. }
                | AnalysisError::BadMonth { .. }
                | AnalysisError::BadCount { .. }
                | AnalysisError::DuplicateMonth { .. } => EXIT_INPUT,
                AnalysisError::ZeroVector
                | AnalysisError::TooFewArtists { .. }
                | AnalysisError::NoOverlap
                | AnalysisError::TooFewPoints { .. }
                | AnalysisError::BadSpan { .. }
                | AnalysisError::AnchorCollision { .. } => EXIT_PRECONDITION,
                AnalysisError::LengthMismatch { .. } | AnalysisError::XNotIncreasing => {
                    EXIT_INTERNAL
                }
                AnalysisError::Trajectory(t) => {
                    CliError::Trajectory(clone_trajectory_class(t)).exit_code()
                }
            },
            CliError::Write { .. } => EXIT_INPUT,
            CliError::Precondition(_) => EXIT_PRECONDITION,
        }
    }
}

// exit-code classification needs only the variant, not the payload
fn clone_corpus_class(e: &CorpusError) -> CorpusError {
    match e {
        CorpusError::EmptyCollection => CorpusError::EmptyCollection,
        CorpusError::BinOutOfRange { bin, n_bins } => CorpusError::BinOutOfRange {
            bin: *bin,
            n_bins: *n_bins,
        },
        _ => CorpusError::Malformed {
            row: 0,
            message: String::new(),
        },
    }
}

fn clone_trajectory_class(e: &TrajectoryError) -> TrajectoryError {
    match e {
        TrajectoryError::LengthMismatch { series, stream } => TrajectoryError::LengthMismatch {
            series: *series,
            stream: *stream,
        },
        TrajectoryError::Corpus(c) => TrajectoryError::Corpus(clone_corpus_class(c)),
        _ => TrajectoryError::EmptyInput,
    }
}

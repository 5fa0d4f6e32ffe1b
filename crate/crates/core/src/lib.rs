//! Deterministic text analytics for time-ordered lyric corpora.
//!
//! The pipeline: ingest dated song records ([`corpus`]), normalize slang and
//! measure out-of-vocabulary rates against a frequency reference ([`lexicon`]),
//! score every token with valence-shifter weighting ([`valence`]), resample the
//! resulting series into length-standardized sentiment trajectories via a
//! DCT low-pass filter ([`trajectory`]), and compare trajectories or align
//! external monthly count series onto the same progression axis ([`analysis`]).
//!
//! All operations are pure functions of their inputs; every container is
//! immutable after construction and safe to share across threads.

pub mod analysis;
pub mod corpus;
pub mod lexicon;
pub mod trajectory;
pub mod valence;

//! Corpus ingestion and time ordering.
//!
//! Songs are validated, sorted by `(date, artist, title)` and flattened into
//! token streams that remember which song (and therefore which publication
//! date) every token came from. That token-position → date mapping is what
//! lets trajectory bins be annotated with calendar dates later on.

use std::collections::{BTreeMap, HashSet};
use std::fs;
use std::path::Path;

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lexicon::SlangDictionary;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("row {row}: malformed record: {message}")]
    Malformed { row: usize, message: String },
    #[error("row {row}: missing field `{field}`")]
    MissingField { row: usize, field: &'static str },
    #[error("row {row}: unparseable date `{value}` (expected YYYY-MM-DD)")]
    BadDate { row: usize, value: String },
    #[error("row {row}: lyrics empty after tokenization")]
    EmptyLyrics { row: usize },
    #[error("row {row}: empty artist")]
    EmptyArtist { row: usize },
    #[error("invalid record `{artist}` / `{title}`: {message}")]
    InvalidRecord {
        artist: String,
        title: String,
        message: String,
    },
    #[error("empty song collection")]
    EmptyCollection,
    #[error("bin {bin} out of range for {n_bins} bins")]
    BinOutOfRange { bin: usize, n_bins: usize },
}

/// Supported songs-file encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Jsonl,
    Csv,
}

impl InputFormat {
    /// Infer the format from a file extension.
    pub fn from_path(path: &Path) -> Option<Self> {
        match path
            .extension()
            .and_then(|e| e.to_str())
            .map(|e| e.to_ascii_lowercase())
            .as_deref()
        {
            Some("jsonl") | Some("json") | Some("ndjson") => Some(Self::Jsonl),
            Some("csv") => Some(Self::Csv),
            _ => None,
        }
    }
}

/// One dated lyric document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SongRecord {
    pub artist: String,
    pub title: String,
    pub date: NaiveDate,
    pub lyrics: String,
}

impl SongRecord {
    fn check(&self) -> Result<(), String> {
        if self.artist.trim().is_empty() {
            return Err("empty artist".into());
        }
        if tokenize(&self.lyrics).is_empty() {
            return Err("lyrics empty after tokenization".into());
        }
        Ok(())
    }

    /// Total order used everywhere songs are time-ordered. The date is the
    /// primary key; `(artist, title)` breaks ties so that input order can
    /// never leak into any downstream result.
    fn sort_key(&self) -> (NaiveDate, &str, &str) {
        (self.date, self.artist.as_str(), self.title.as_str())
    }
}

/// Validated, time-ordered songs plus an artist index.
#[derive(Debug, Clone)]
pub struct SongCollection {
    songs: Vec<SongRecord>,
    by_artist: BTreeMap<String, Vec<usize>>,
}

impl SongCollection {
    /// Validate and order records. Accepts an empty list; operations that
    /// need songs fail with [`CorpusError::EmptyCollection`] instead.
    pub fn new(mut songs: Vec<SongRecord>) -> Result<Self, CorpusError> {
        for s in &songs {
            s.check().map_err(|message| CorpusError::InvalidRecord {
                artist: s.artist.clone(),
                title: s.title.clone(),
                message,
            })?;
        }
        songs.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        let mut by_artist: BTreeMap<String, Vec<usize>> = BTreeMap::new();
        for (i, s) in songs.iter().enumerate() {
            by_artist.entry(s.artist.clone()).or_default().push(i);
        }
        Ok(Self { songs, by_artist })
    }

    pub fn songs(&self) -> &[SongRecord] {
        &self.songs
    }

    pub fn len(&self) -> usize {
        self.songs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.songs.is_empty()
    }

    /// Artist names in lexicographic order.
    pub fn artists(&self) -> impl Iterator<Item = &str> {
        self.by_artist.keys().map(String::as_str)
    }

    /// Indices (into `songs()`, already time-ordered) of one artist's songs.
    pub fn songs_of(&self, artist: &str) -> &[usize] {
        self.by_artist.get(artist).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Keep only songs within the inclusive `[min, max]` date window.
    pub fn filter_dates(&self, min: Option<NaiveDate>, max: Option<NaiveDate>) -> SongCollection {
        let songs: Vec<SongRecord> = self
            .songs
            .iter()
            .filter(|s| min.is_none_or(|d| s.date >= d) && max.is_none_or(|d| s.date <= d))
            .cloned()
            .collect();
        // records were already validated; re-validation cannot fail
        SongCollection::new(songs).expect("filtered records stay valid")
    }
}

/// Result of [`load_songs`]: the collection plus non-fatal warnings
/// (currently only duplicate `(artist, title, date)` triples).
#[derive(Debug)]
pub struct LoadedSongs {
    pub collection: SongCollection,
    pub warnings: Vec<String>,
}

/// Load songs from JSONL (one object per line) or RFC-4180 CSV with a
/// `artist,title,date,lyrics` header. Malformed rows abort with an error
/// naming the row; duplicate `(artist, title, date)` triples only warn.
pub fn load_songs(path: &Path, format: InputFormat) -> Result<LoadedSongs, CorpusError> {
    let records = match format {
        InputFormat::Jsonl => parse_jsonl(path)?,
        InputFormat::Csv => parse_csv(path)?,
    };
    let mut warnings = Vec::new();
    let mut seen: HashSet<(String, String, NaiveDate)> = HashSet::new();
    for (row, rec) in &records {
        let key = (rec.artist.clone(), rec.title.clone(), rec.date);
        if !seen.insert(key) {
            warnings.push(format!(
                "row {row}: duplicate song (artist={:?}, title={:?}, date={})",
                rec.artist, rec.title, rec.date
            ));
        }
    }
    let collection = SongCollection::new(records.into_iter().map(|(_, r)| r).collect())?;
    Ok(LoadedSongs {
        collection,
        warnings,
    })
}

fn read_file(path: &Path) -> Result<String, CorpusError> {
    fs::read_to_string(path).map_err(|source| CorpusError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn parse_date(row: usize, value: &str) -> Result<NaiveDate, CorpusError> {
    NaiveDate::parse_from_str(value, "%Y-%m-%d").map_err(|_| CorpusError::BadDate {
        row,
        value: value.to_string(),
    })
}

fn validate_row(row: usize, rec: &SongRecord) -> Result<(), CorpusError> {
    if rec.artist.trim().is_empty() {
        return Err(CorpusError::EmptyArtist { row });
    }
    if tokenize(&rec.lyrics).is_empty() {
        return Err(CorpusError::EmptyLyrics { row });
    }
    Ok(())
}

fn parse_jsonl(path: &Path) -> Result<Vec<(usize, SongRecord)>, CorpusError> {
    let text = read_file(path)?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let row = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let value: serde_json::Value =
            serde_json::from_str(line).map_err(|e| CorpusError::Malformed {
                row,
                message: e.to_string(),
            })?;
        let field = |name: &'static str| -> Result<String, CorpusError> {
            value
                .get(name)
                .and_then(|v| v.as_str())
                .map(str::to_string)
                .ok_or(CorpusError::MissingField { row, field: name })
        };
        let rec = SongRecord {
            artist: field("artist")?,
            title: field("title")?,
            date: parse_date(row, &field("date")?)?,
            lyrics: field("lyrics")?,
        };
        validate_row(row, &rec)?;
        out.push((row, rec));
    }
    Ok(out)
}

fn parse_csv(path: &Path) -> Result<Vec<(usize, SongRecord)>, CorpusError> {
    let text = read_file(path)?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| CorpusError::Malformed {
            row: 1,
            message: e.to_string(),
        })?
        .clone();
    let col = |name: &'static str| -> Result<usize, CorpusError> {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or(CorpusError::MissingField { row: 1, field: name })
    };
    let (c_artist, c_title, c_date, c_lyrics) =
        (col("artist")?, col("title")?, col("date")?, col("lyrics")?);

    let mut out = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| CorpusError::Malformed {
            row: e
                .position()
                .map(|p| p.line() as usize)
                .unwrap_or(0),
            message: e.to_string(),
        })?;
        let row = record
            .position()
            .map(|p| p.line() as usize)
            .unwrap_or(0);
        let get = |idx: usize, field: &'static str| -> Result<String, CorpusError> {
            match record.get(idx) {
                Some(v) if !v.is_empty() => Ok(v.to_string()),
                _ => Err(CorpusError::MissingField { row, field }),
            }
        };
        let rec = SongRecord {
            artist: get(c_artist, "artist")?,
            title: record.get(c_title).unwrap_or("").to_string(),
            date: parse_date(row, &get(c_date, "date")?)?,
            lyrics: get(c_lyrics, "lyrics")?,
        };
        validate_row(row, &rec)?;
        out.push((row, rec));
    }
    Ok(out)
}

/// Lowercase word tokens: a token is a maximal run of letters, digits and
/// internal apostrophes; everything else separates. Lowercasing is
/// Unicode-aware and any character that stops being alphanumeric after
/// lowercasing is dropped, which keeps the function idempotent on its own
/// output. The typographic apostrophe U+2019 is folded to `'`.
pub fn tokenize(text: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    for ch in text.chars() {
        let ch = if ch == '\u{2019}' { '\'' } else { ch };
        if ch.is_alphanumeric() {
            for lc in ch.to_lowercase() {
                if lc.is_alphanumeric() || lc == '\'' {
                    current.push(lc);
                }
            }
        } else if ch == '\'' {
            current.push(ch);
        } else {
            flush_token(&mut current, &mut tokens);
        }
    }
    flush_token(&mut current, &mut tokens);
    tokens
}

fn flush_token(current: &mut String, tokens: &mut Vec<String>) {
    if current.is_empty() {
        return;
    }
    let trimmed = current.trim_matches('\'');
    if !trimmed.is_empty() {
        tokens.push(trimmed.to_string());
    }
    current.clear();
}

/// Artist/title/date of one song inside a stream, in stream order.
#[derive(Debug, Clone)]
pub struct StreamSong {
    pub artist: String,
    pub title: String,
    pub date: NaiveDate,
}

/// A flattened, time-ordered token sequence with per-token provenance.
#[derive(Debug, Clone)]
pub struct TokenStream {
    tokens: Vec<String>,
    songs: Vec<StreamSong>,
    /// Token index at which each song starts; `boundaries[0] == 0`.
    boundaries: Vec<usize>,
}

impl TokenStream {
    fn from_records<'a, I: Iterator<Item = &'a SongRecord>>(records: I) -> Self {
        let mut tokens = Vec::new();
        let mut songs = Vec::new();
        let mut boundaries = Vec::new();
        for rec in records {
            boundaries.push(tokens.len());
            songs.push(StreamSong {
                artist: rec.artist.clone(),
                title: rec.title.clone(),
                date: rec.date,
            });
            tokens.extend(tokenize(&rec.lyrics));
        }
        Self {
            tokens,
            songs,
            boundaries,
        }
    }

    /// Concatenate the whole collection into one time-ordered stream.
    pub fn concatenate(collection: &SongCollection) -> Result<Self, CorpusError> {
        if collection.is_empty() {
            return Err(CorpusError::EmptyCollection);
        }
        Ok(Self::from_records(collection.songs().iter()))
    }

    /// One time-ordered stream per artist.
    pub fn group_by_artist(
        collection: &SongCollection,
    ) -> Result<BTreeMap<String, TokenStream>, CorpusError> {
        if collection.is_empty() {
            return Err(CorpusError::EmptyCollection);
        }
        let mut out = BTreeMap::new();
        for artist in collection.artists() {
            let stream = Self::from_records(
                collection
                    .songs_of(artist)
                    .iter()
                    .map(|&i| &collection.songs()[i]),
            );
            out.insert(artist.to_string(), stream);
        }
        Ok(out)
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn n_songs(&self) -> usize {
        self.songs.len()
    }

    pub fn songs(&self) -> &[StreamSong] {
        &self.songs
    }

    pub fn boundaries(&self) -> &[usize] {
        &self.boundaries
    }

    /// Index (into `songs()`) of the song containing token `idx`.
    pub fn song_index_of(&self, idx: usize) -> usize {
        debug_assert!(idx < self.tokens.len());
        self.boundaries.partition_point(|&b| b <= idx) - 1
    }

    pub fn date_of_token(&self, idx: usize) -> NaiveDate {
        self.songs[self.song_index_of(idx)].date
    }

    /// Token index range `[start, end)` of song `song_idx`.
    pub fn song_token_range(&self, song_idx: usize) -> (usize, usize) {
        let start = self.boundaries[song_idx];
        let end = self
            .boundaries
            .get(song_idx + 1)
            .copied()
            .unwrap_or(self.tokens.len());
        (start, end)
    }

    /// Publication date of the song containing the center token of `bin`
    /// when the stream is split into `n_bins` equal progression bins.
    pub fn bin_to_date(&self, bin: usize, n_bins: usize) -> Result<NaiveDate, CorpusError> {
        if bin >= n_bins {
            return Err(CorpusError::BinOutOfRange { bin, n_bins });
        }
        if self.is_empty() {
            return Err(CorpusError::EmptyCollection);
        }
        let pos = ((bin as f64 + 0.5) / n_bins as f64 * self.tokens.len() as f64).floor() as usize;
        Ok(self.date_of_token(pos.min(self.tokens.len() - 1)))
    }

    /// Rewrite the stream through a slang dictionary: one left-to-right pass,
    /// replacements inherit the source token's song and are not re-examined.
    pub fn translate(&self, slang: &SlangDictionary) -> TokenStream {
        let mut tokens = Vec::with_capacity(self.tokens.len());
        let mut boundaries = Vec::with_capacity(self.boundaries.len());
        for song_idx in 0..self.songs.len() {
            boundaries.push(tokens.len());
            let (start, end) = self.song_token_range(song_idx);
            for token in &self.tokens[start..end] {
                match slang.get(token) {
                    Some(replacement) => tokens.extend(replacement.iter().cloned()),
                    None => tokens.push(token.clone()),
                }
            }
        }
        TokenStream {
            tokens,
            songs: self.songs.clone(),
            boundaries,
        }
    }
}

/// Corpus-level summary statistics.
#[derive(Debug, Clone, Serialize)]
pub struct CorpusStats {
    pub n_songs: usize,
    pub n_tokens: usize,
    pub n_artists: usize,
    pub mean_song_length: f64,
    /// Sample standard deviation (divisor n−1); 0 for a single song.
    pub sd_song_length: f64,
    pub min_date: NaiveDate,
    pub max_date: NaiveDate,
}

pub fn corpus_stats(collection: &SongCollection) -> Result<CorpusStats, CorpusError> {
    if collection.is_empty() {
        return Err(CorpusError::EmptyCollection);
    }
    let lengths: Vec<usize> = collection
        .songs()
        .iter()
        .map(|s| tokenize(&s.lyrics).len())
        .collect();
    let n = lengths.len();
    let n_tokens: usize = lengths.iter().sum();
    let mean = n_tokens as f64 / n as f64;
    let sd = if n < 2 {
        0.0
    } else {
        let ss: f64 = lengths
            .iter()
            .map(|&l| {
                let d = l as f64 - mean;
                d * d
            })
            .sum();
        (ss / (n - 1) as f64).sqrt()
    };
    Ok(CorpusStats {
        n_songs: n,
        n_tokens,
        n_artists: collection.artists().count(),
        mean_song_length: mean,
        sd_song_length: sd,
        min_date: collection.songs().first().unwrap().date,
        max_date: collection.songs().last().unwrap().date,
    })
}

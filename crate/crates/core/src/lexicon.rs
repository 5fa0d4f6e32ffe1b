//! Lexical resources: sentiment valences, valence shifters, slang
//! translations and frequency reference lists, plus out-of-vocabulary
//! reporting and the annotation worksheet round-trip.
//!
//! All files are UTF-8, tab-separated where applicable; lines starting with
//! `#` and blank lines are ignored. Terms are case-folded on load.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    WriteIo {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: expected {expected}")]
    Parse {
        path: String,
        line: usize,
        expected: String,
    },
    #[error("{path}:{line}: duplicate term `{term}`")]
    DuplicateTerm {
        path: String,
        line: usize,
        term: String,
    },
    #[error("{path}:{line}: unknown category `{category}` (expected negator|amplifier|deamplifier|adversative)")]
    UnknownCategory {
        path: String,
        line: usize,
        category: String,
    },
    #[error("{path}:{line}: invalid valence `{value}` (must be a finite nonzero number)")]
    BadValence {
        path: String,
        line: usize,
        value: String,
    },
    #[error("cyclic slang rule: `{term}` expands through `{via}`, which is itself a source term")]
    CyclicRule { term: String, via: String },
    #[error("empty token list: OOV rates are undefined")]
    EmptyTokens,
    #[error("empty reference frequency list")]
    EmptyReference,
}

/// Yield `(line_number, content)` for data lines, skipping comments/blanks.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
}

fn read_file(path: &Path) -> Result<String, LexiconError> {
    fs::read_to_string(path).map_err(|source| LexiconError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn split_tsv(path: &str, line: usize, l: &str, n_fields: usize) -> Result<Vec<String>, LexiconError> {
    let fields: Vec<String> = l.split('\t').map(|f| f.trim().to_string()).collect();
    if fields.len() != n_fields {
        return Err(LexiconError::Parse {
            path: path.to_string(),
            line,
            expected: format!("{n_fields} tab-separated fields, found {}", fields.len()),
        });
    }
    Ok(fields)
}

/// term → signed valence; zero or non-finite valences are rejected.
#[derive(Debug, Clone, Default)]
pub struct SentimentLexicon {
    map: HashMap<String, f64>,
}

impl SentimentLexicon {
    /// Load `term<TAB>valence` rows.
    pub fn from_path(path: &Path) -> Result<Self, LexiconError> {
        let text = read_file(path)?;
        let name = path.display().to_string();
        let mut map = HashMap::new();
        for (line, l) in data_lines(&text) {
            let fields = split_tsv(&name, line, l, 2)?;
            let term = fields[0].to_lowercase();
            let valence: f64 = fields[1].parse().map_err(|_| LexiconError::BadValence {
                path: name.clone(),
                line,
                value: fields[1].clone(),
            })?;
            if !valence.is_finite() || valence == 0.0 {
                return Err(LexiconError::BadValence {
                    path: name.clone(),
                    line,
                    value: fields[1].clone(),
                });
            }
            if map.insert(term.clone(), valence).is_some() {
                return Err(LexiconError::DuplicateTerm {
                    path: name,
                    line,
                    term,
                });
            }
        }
        Ok(Self { map })
    }

    pub fn from_entries<I: IntoIterator<Item = (String, f64)>>(entries: I) -> Self {
        Self {
            map: entries.into_iter().map(|(t, v)| (t.to_lowercase(), v)).collect(),
        }
    }

    pub fn get(&self, term: &str) -> Option<f64> {
        self.map.get(term).copied()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// The four valence-shifter categories.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShifterKind {
    Negator,
    Amplifier,
    Deamplifier,
    Adversative,
}

impl ShifterKind {
    fn parse(s: &str) -> Option<Self> {
        match s {
            "negator" => Some(Self::Negator),
            "amplifier" => Some(Self::Amplifier),
            "deamplifier" => Some(Self::Deamplifier),
            "adversative" => Some(Self::Adversative),
            _ => None,
        }
    }
}

/// term → shifter category.
#[derive(Debug, Clone, Default)]
pub struct ShifterLexicon {
    map: HashMap<String, ShifterKind>,
}

impl ShifterLexicon {
    /// Load `term<TAB>category` rows.
    pub fn from_path(path: &Path) -> Result<Self, LexiconError> {
        let text = read_file(path)?;
        let name = path.display().to_string();
        let mut map = HashMap::new();
        for (line, l) in data_lines(&text) {
            let fields = split_tsv(&name, line, l, 2)?;
            let term = fields[0].to_lowercase();
            let kind = ShifterKind::parse(&fields[1]).ok_or_else(|| LexiconError::UnknownCategory {
                path: name.clone(),
                line,
                category: fields[1].clone(),
            })?;
            if map.insert(term.clone(), kind).is_some() {
                return Err(LexiconError::DuplicateTerm {
                    path: name,
                    line,
                    term,
                });
            }
        }
        Ok(Self { map })
    }

    pub fn from_entries<I: IntoIterator<Item = (String, ShifterKind)>>(entries: I) -> Self {
        Self {
            map: entries.into_iter().map(|(t, k)| (t.to_lowercase(), k)).collect(),
        }
    }

    pub fn get(&self, term: &str) -> Option<ShifterKind> {
        self.map.get(term).copied()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// Worksheet header written by [`export_oov_worksheet`]; a file starting with
/// this line re-imports as a dictionary through [`SlangDictionary::from_path`].
const WORKSHEET_HEADER: &str = "term\tfrequency\ttranslation";

/// term → replacement token sequence (single-token sources only).
#[derive(Debug, Clone, Default)]
pub struct SlangDictionary {
    map: HashMap<String, Vec<String>>,
}

impl SlangDictionary {
    /// Load either `term<TAB>replacement words` rows or a filled annotation
    /// worksheet (`term<TAB>frequency<TAB>translation` with its header row);
    /// worksheet rows with an empty translation are skipped.
    pub fn from_path(path: &Path) -> Result<Self, LexiconError> {
        let text = read_file(path)?;
        let name = path.display().to_string();
        let worksheet = data_lines(&text)
            .next()
            .map(|(_, l)| l.trim_end() == WORKSHEET_HEADER)
            .unwrap_or(false);
        let mut map = HashMap::new();
        for (line, l) in data_lines(&text) {
            let (term, replacement) = if worksheet {
                if l.trim_end() == WORKSHEET_HEADER {
                    continue;
                }
                let fields: Vec<&str> = l.split('\t').collect();
                if fields.len() != 3 {
                    return Err(LexiconError::Parse {
                        path: name.clone(),
                        line,
                        expected: format!("3 tab-separated fields, found {}", fields.len()),
                    });
                }
                if fields[2].trim().is_empty() {
                    continue; // not yet annotated
                }
                (fields[0].trim().to_string(), fields[2].trim().to_string())
            } else {
                let fields = split_tsv(&name, line, l, 2)?;
                (fields[0].clone(), fields[1].clone())
            };
            let term = term.to_lowercase();
            let tokens: Vec<String> = replacement
                .split_whitespace()
                .map(|t| t.to_lowercase())
                .collect();
            if tokens.is_empty() {
                return Err(LexiconError::Parse {
                    path: name.clone(),
                    line,
                    expected: "a non-empty replacement".to_string(),
                });
            }
            if map.insert(term.clone(), tokens).is_some() {
                return Err(LexiconError::DuplicateTerm {
                    path: name,
                    line,
                    term,
                });
            }
        }
        let dict = Self { map };
        dict.check_acyclic()?;
        Ok(dict)
    }

    pub fn from_pairs<I: IntoIterator<Item = (String, Vec<String>)>>(
        pairs: I,
    ) -> Result<Self, LexiconError> {
        let dict = Self {
            map: pairs
                .into_iter()
                .map(|(t, r)| {
                    (
                        t.to_lowercase(),
                        r.into_iter().map(|w| w.to_lowercase()).collect(),
                    )
                })
                .collect(),
        };
        dict.check_acyclic()?;
        Ok(dict)
    }

    /// No replacement token may itself be a source term; this is what makes
    /// the single rewrite pass idempotent.
    fn check_acyclic(&self) -> Result<(), LexiconError> {
        let mut sources: Vec<&String> = self.map.keys().collect();
        sources.sort(); // deterministic error selection
        for term in sources {
            for via in &self.map[term] {
                if self.map.contains_key(via) {
                    return Err(LexiconError::CyclicRule {
                        term: term.clone(),
                        via: via.clone(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn get(&self, term: &str) -> Option<&[String]> {
        self.map.get(term).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// Reference word list ordered most-frequent-first.
#[derive(Debug, Clone, Default)]
pub struct FrequencyList {
    words: Vec<String>,
    rank: HashMap<String, usize>,
}

impl FrequencyList {
    /// Load one word per line, rank order.
    pub fn from_path(path: &Path) -> Result<Self, LexiconError> {
        let text = read_file(path)?;
        let name = path.display().to_string();
        let mut words = Vec::new();
        let mut rank = HashMap::new();
        for (line, l) in data_lines(&text) {
            let word = l.trim().to_lowercase();
            if rank.insert(word.clone(), words.len()).is_some() {
                return Err(LexiconError::DuplicateTerm {
                    path: name,
                    line,
                    term: word,
                });
            }
            words.push(word);
        }
        Ok(Self { words, rank })
    }

    pub fn from_words<I: IntoIterator<Item = String>>(words: I) -> Self {
        let words: Vec<String> = words.into_iter().map(|w| w.to_lowercase()).collect();
        let rank = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        Self { words, rank }
    }

    pub fn contains(&self, word: &str) -> bool {
        self.rank.contains_key(word)
    }

    /// 0-based rank (most frequent first).
    pub fn rank_of(&self, word: &str) -> Option<usize> {
        self.rank.get(word).copied()
    }

    pub fn words(&self) -> &[String] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// File locations for [`load_lexicons`]; every resource is optional.
#[derive(Debug, Clone, Default)]
pub struct LexiconPaths {
    pub sentiment: Option<std::path::PathBuf>,
    pub shifters: Option<std::path::PathBuf>,
    pub slang: Option<std::path::PathBuf>,
    pub frequency: Option<std::path::PathBuf>,
}

/// The loaded lexical resources.
#[derive(Debug, Clone, Default)]
pub struct LexiconSet {
    pub sentiment: Option<SentimentLexicon>,
    pub shifters: Option<ShifterLexicon>,
    pub slang: Option<SlangDictionary>,
    pub frequency: Option<FrequencyList>,
}

pub fn load_lexicons(paths: &LexiconPaths) -> Result<LexiconSet, LexiconError> {
    Ok(LexiconSet {
        sentiment: paths
            .sentiment
            .as_deref()
            .map(SentimentLexicon::from_path)
            .transpose()?,
        shifters: paths
            .shifters
            .as_deref()
            .map(ShifterLexicon::from_path)
            .transpose()?,
        slang: paths
            .slang
            .as_deref()
            .map(SlangDictionary::from_path)
            .transpose()?,
        frequency: paths
            .frequency
            .as_deref()
            .map(FrequencyList::from_path)
            .transpose()?,
    })
}

/// One entry of the ranked OOV table.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct OovEntry {
    pub term: String,
    pub frequency: usize,
}

/// Out-of-vocabulary rates plus the ranked unmatched terms.
#[derive(Debug, Clone, Serialize)]
pub struct OovReport {
    /// Fraction of running tokens absent from the reference list.
    pub token_oov_rate: f64,
    /// Fraction of distinct types absent from the reference list.
    pub type_oov_rate: f64,
    /// Unmatched terms with corpus frequency, most frequent first
    /// (ties broken alphabetically), truncated to `top_k`.
    pub ranked_oov: Vec<OovEntry>,
}

pub fn oov_report(
    tokens: &[String],
    reference: &FrequencyList,
    top_k: usize,
) -> Result<OovReport, LexiconError> {
    if tokens.is_empty() {
        return Err(LexiconError::EmptyTokens);
    }
    if reference.is_empty() {
        return Err(LexiconError::EmptyReference);
    }
    let mut counts: HashMap<&str, usize> = HashMap::new();
    for t in tokens {
        *counts.entry(t.as_str()).or_insert(0) += 1;
    }
    let mut oov_tokens = 0usize;
    let mut oov_types = 0usize;
    let mut ranked: Vec<OovEntry> = Vec::new();
    for (term, count) in &counts {
        if !reference.contains(term) {
            oov_tokens += count;
            oov_types += 1;
            ranked.push(OovEntry {
                term: (*term).to_string(),
                frequency: *count,
            });
        }
    }
    ranked.sort_by(|a, b| b.frequency.cmp(&a.frequency).then_with(|| a.term.cmp(&b.term)));
    ranked.truncate(top_k);
    Ok(OovReport {
        token_oov_rate: oov_tokens as f64 / tokens.len() as f64,
        type_oov_rate: oov_types as f64 / counts.len() as f64,
        ranked_oov: ranked,
    })
}

/// Single left-to-right rewrite pass; replacements are not re-examined.
pub fn apply_slang(tokens: &[String], slang: &SlangDictionary) -> Vec<String> {
    let mut out = Vec::with_capacity(tokens.len());
    for t in tokens {
        match slang.get(t) {
            Some(replacement) => out.extend(replacement.iter().cloned()),
            None => out.push(t.clone()),
        }
    }
    out
}

/// Write the annotation worksheet: ranked OOV terms with an empty
/// translation column. A filled worksheet loads back through
/// [`SlangDictionary::from_path`].
pub fn export_oov_worksheet(report: &OovReport, path: &Path) -> Result<(), LexiconError> {
    let mut buf = String::new();
    buf.push_str(WORKSHEET_HEADER);
    buf.push('\n');
    for e in &report.ranked_oov {
        buf.push_str(&format!("{}\t{}\t\n", e.term, e.frequency));
    }
    let mut file = fs::File::create(path).map_err(|source| LexiconError::WriteIo {
        path: path.display().to_string(),
        source,
    })?;
    file.write_all(buf.as_bytes()).map_err(|source| LexiconError::WriteIo {
        path: path.display().to_string(),
        source,
    })
}

//! Per-token sentiment scoring with valence-shifter weighting.
//!
//! Every token with a base valence is re-weighted by the shifters found in a
//! backward context window: negators flip the sign (and, when an odd number
//! of them is present, swap the amplifier/de-amplifier roles), amplifiers and
//! de-amplifiers scale the magnitude, and an adversative conjunction cuts the
//! window short while boosting the scored token. The window never crosses a
//! song boundary, so shifters cannot leak between concatenated songs.

use crate::corpus::TokenStream;
use crate::lexicon::{SentimentLexicon, ShifterKind, ShifterLexicon};

/// Weighting constants for [`score_tokens`].
#[derive(Debug, Clone, PartialEq)]
pub struct ShifterParams {
    /// Number of preceding tokens examined for shifters.
    pub window: usize,
    /// Per-amplifier (and per-de-amplifier) magnitude step.
    pub amp_weight: f64,
    /// Boost applied when an adversative conjunction bounds the window.
    pub adv_weight: f64,
    /// Lower bound on the magnitude multiplier.
    pub floor: f64,
}

impl Default for ShifterParams {
    fn default() -> Self {
        Self {
            window: 4,
            amp_weight: 0.8,
            adv_weight: 0.25,
            floor: 0.2,
        }
    }
}

impl ShifterParams {
    /// `window ≥ 1`, `amp_weight > 0`, `adv_weight ≥ 0`, `0 < floor ≤ 1`.
    pub fn validate(&self) -> Result<(), String> {
        if self.window < 1 {
            return Err("window must be at least 1".into());
        }
        if !(self.amp_weight > 0.0) || !self.amp_weight.is_finite() {
            return Err("amp_weight must be positive and finite".into());
        }
        if self.adv_weight < 0.0 || !self.adv_weight.is_finite() {
            return Err("adv_weight must be non-negative and finite".into());
        }
        if !(self.floor > 0.0 && self.floor <= 1.0) {
            return Err("floor must be in (0, 1]".into());
        }
        Ok(())
    }
}

/// One modified sentiment value per token; zero exactly for tokens with no
/// sentiment-lexicon entry.
#[derive(Debug, Clone, PartialEq)]
pub struct ValenceSeries {
    pub values: Vec<f64>,
}

impl ValenceSeries {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Score every token of `stream`. Writing `N`, `A`, `D` for the negator,
/// amplifier and de-amplifier counts in the context window (with `A` and `D`
/// swapped when `N` is odd), a token with base valence `v` scores
///
/// `v · (−1)^N · max(floor, 1 + amp_weight·(A − D)) · (1 + adv_weight·[adversative bound])`
///
/// The context holds up to `window` preceding tokens, truncated at the
/// current song's start and at the most recent adversative conjunction
/// (which is excluded from the counts but sets the boost flag). Tokens
/// without a base valence score zero, including shifter tokens themselves.
pub fn score_tokens(
    stream: &TokenStream,
    sentiment: &SentimentLexicon,
    shifters: &ShifterLexicon,
    params: &ShifterParams,
) -> ValenceSeries {
    let tokens = stream.tokens();
    let mut values = Vec::with_capacity(tokens.len());
    for song_idx in 0..stream.n_songs() {
        let (start, end) = stream.song_token_range(song_idx);
        for i in start..end {
            let Some(base) = sentiment.get(&tokens[i]) else {
                values.push(0.0);
                continue;
            };
            let lo = start.max(i.saturating_sub(params.window));
            let mut negators = 0u32;
            let mut amplifiers = 0i64;
            let mut deamplifiers = 0i64;
            let mut adversative_bound = false;
            for j in (lo..i).rev() {
                match shifters.get(&tokens[j]) {
                    Some(ShifterKind::Adversative) => {
                        adversative_bound = true;
                        break;
                    }
                    Some(ShifterKind::Negator) => negators += 1,
                    Some(ShifterKind::Amplifier) => amplifiers += 1,
                    Some(ShifterKind::Deamplifier) => deamplifiers += 1,
                    None => {}
                }
            }
            if negators % 2 == 1 {
                std::mem::swap(&mut amplifiers, &mut deamplifiers);
            }
            let sign = if negators % 2 == 1 { -1.0 } else { 1.0 };
            let magnitude = (1.0 + params.amp_weight * (amplifiers - deamplifiers) as f64)
                .max(params.floor);
            let boost = if adversative_bound {
                1.0 + params.adv_weight
            } else {
                1.0
            };
            values.push(base * sign * magnitude * boost);
        }
    }
    ValenceSeries { values }
}

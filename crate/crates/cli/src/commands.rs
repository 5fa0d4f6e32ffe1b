//! Subcommand implementations.

use std::collections::BTreeMap;
use std::path::Path;

use rayon::prelude::*;

use sentarc_core::analysis::{
    lead_lag_all, load_crime, similarity_matrix, AlignedSeries, ArtistTrajectory, SimilarityMatrix,
    VectorMode,
};
use sentarc_core::corpus::{
    corpus_stats, load_songs, InputFormat, SongCollection, TokenStream,
};
use sentarc_core::lexicon::{
    export_oov_worksheet, oov_report, FrequencyList, OovReport, SentimentLexicon, ShifterLexicon,
    SlangDictionary,
};
use sentarc_core::trajectory::{
    extract_trajectory, find_extrema, ExtremumKind, Trajectory, TrajectoryParams,
};
use sentarc_core::valence::{score_tokens, ShifterParams};

use crate::args::{
    CorpusArgs, CrimeArgs, FormatArg, LevelArg, LexiconArgs, OovArgs, OutputArgs, ReportArgs,
    SimilarityArgs, StatsArgs, TrajectoryArgs, ValenceArgs,
};
use crate::errors::CliError;
use crate::output::{csv_field, fmt_f, json_artifact, slugify, write_atomic, Meta};
use crate::svg;

const CRIME_COLORS: [&str; 6] = [
    "#c0392b", "#2980b9", "#27ae60", "#8e44ad", "#d35400", "#16a085",
];

// ---------------------------------------------------------------------------
// shared plumbing
// ---------------------------------------------------------------------------

fn resolve_format(args: &CorpusArgs) -> Result<InputFormat, CliError> {
    match args.format {
        Some(FormatArg::Jsonl) => Ok(InputFormat::Jsonl),
        Some(FormatArg::Csv) => Ok(InputFormat::Csv),
        None => InputFormat::from_path(&args.songs).ok_or_else(|| {
            CliError::Precondition(format!(
                "cannot infer input format from {}; pass --format jsonl|csv",
                args.songs.display()
            ))
        }),
    }
}

fn load_collection(args: &CorpusArgs) -> Result<SongCollection, CliError> {
    let format = resolve_format(args)?;
    let loaded = load_songs(&args.songs, format)?;
    for w in &loaded.warnings {
        eprintln!("warning: {w}");
    }
    let unfiltered = loaded.collection.len();
    let collection = loaded.collection.filter_dates(args.min_date, args.max_date);
    if collection.is_empty() && unfiltered > 0 {
        return Err(CliError::Precondition(
            "no songs remain after the --min-date/--max-date filter".to_string(),
        ));
    }
    Ok(collection)
}

struct ValenceLexicons {
    sentiment: SentimentLexicon,
    shifters: ShifterLexicon,
    slang: Option<SlangDictionary>,
}

fn load_valence_lexicons(args: &LexiconArgs) -> Result<ValenceLexicons, CliError> {
    Ok(ValenceLexicons {
        sentiment: SentimentLexicon::from_path(&args.sentiment)?,
        shifters: ShifterLexicon::from_path(&args.shifters)?,
        slang: args
            .slang
            .as_deref()
            .map(SlangDictionary::from_path)
            .transpose()?,
    })
}

fn shifter_params(args: &ValenceArgs) -> Result<ShifterParams, CliError> {
    let params = ShifterParams {
        window: args.window,
        amp_weight: args.amp_weight,
        adv_weight: args.adv_weight,
        floor: args.floor,
    };
    params.validate().map_err(CliError::Precondition)?;
    Ok(params)
}

fn translated_stream(
    collection: &SongCollection,
    slang: Option<&SlangDictionary>,
) -> Result<TokenStream, CliError> {
    let stream = TokenStream::concatenate(collection)?;
    Ok(match slang {
        Some(dict) => stream.translate(dict),
        None => stream,
    })
}

fn ensure_out_dir(args: &OutputArgs) -> Result<(), CliError> {
    std::fs::create_dir_all(&args.out).map_err(|source| CliError::Write {
        path: args.out.display().to_string(),
        source,
    })
}

fn meta_corpus(meta: &mut Meta, args: &CorpusArgs) {
    meta.push("songs", args.songs.display());
    meta.push_opt("min_date", args.min_date);
    meta.push_opt("max_date", args.max_date);
}

fn meta_lexicons(meta: &mut Meta, args: &LexiconArgs) {
    meta.push("sentiment", args.sentiment.display());
    meta.push("shifters", args.shifters.display());
    meta.push_opt("slang", args.slang.as_deref().map(Path::display));
}

fn meta_valence(meta: &mut Meta, args: &ValenceArgs) {
    meta.push("window", args.window);
    meta.push("amp_weight", args.amp_weight);
    meta.push("adv_weight", args.adv_weight);
    meta.push("floor", args.floor);
}

fn finish_meta(meta: &mut Meta, output: &OutputArgs) {
    if output.stamp {
        meta.push(
            "generated_at",
            chrono::Utc::now().format("%Y-%m-%dT%H:%M:%SZ"),
        );
    }
}

// ---------------------------------------------------------------------------
// stats
// ---------------------------------------------------------------------------

pub fn cmd_stats(args: &StatsArgs) -> Result<(), CliError> {
    let collection = load_collection(&args.corpus)?;
    let stats = corpus_stats(&collection)?;

    let mut meta = Meta::new("stats");
    meta_corpus(&mut meta, &args.corpus);
    finish_meta(&mut meta, &args.output);

    ensure_out_dir(&args.output)?;
    let json = json_artifact(
        &meta,
        "stats",
        serde_json::to_value(&stats).expect("stats serialize"),
    );
    write_atomic(&args.output.out.join("stats.json"), &json)?;

    println!("songs:            {}", stats.n_songs);
    println!("artists:          {}", stats.n_artists);
    println!("tokens:           {}", stats.n_tokens);
    println!("mean song length: {:.2}", stats.mean_song_length);
    println!("sd song length:   {:.2}", stats.sd_song_length);
    println!("date range:       {} .. {}", stats.min_date, stats.max_date);
    println!("wrote {}", args.output.out.join("stats.json").display());
    Ok(())
}

// ---------------------------------------------------------------------------
// oov
// ---------------------------------------------------------------------------

fn oov_json(
    meta: &Meta,
    report: &OovReport,
    before: Option<(f64, f64)>,
) -> String {
    let mut value = serde_json::to_value(report).expect("report serialize");
    if let Some((token_rate, type_rate)) = before {
        let obj = value.as_object_mut().expect("report object");
        obj.insert(
            "before_translation".to_string(),
            serde_json::json!({
                "token_oov_rate": token_rate,
                "type_oov_rate": type_rate,
            }),
        );
    }
    json_artifact(meta, "report", value)
}

pub fn cmd_oov(args: &OovArgs) -> Result<(), CliError> {
    let collection = load_collection(&args.corpus)?;
    let reference = FrequencyList::from_path(&args.freq)?;
    let slang = args
        .slang
        .as_deref()
        .map(SlangDictionary::from_path)
        .transpose()?;

    let raw = TokenStream::concatenate(&collection)?;
    let before = match &slang {
        Some(_) => {
            let r = oov_report(raw.tokens(), &reference, args.top_k)?;
            Some((r.token_oov_rate, r.type_oov_rate))
        }
        None => None,
    };
    let measured = match &slang {
        Some(dict) => raw.translate(dict),
        None => raw,
    };
    let report = oov_report(measured.tokens(), &reference, args.top_k)?;

    let mut meta = Meta::new("oov");
    meta_corpus(&mut meta, &args.corpus);
    meta.push("freq", args.freq.display());
    meta.push_opt("slang", args.slang.as_deref().map(Path::display));
    meta.push("top_k", args.top_k);
    finish_meta(&mut meta, &args.output);

    ensure_out_dir(&args.output)?;
    write_atomic(
        &args.output.out.join("oov.json"),
        &oov_json(&meta, &report, before),
    )?;
    export_oov_worksheet(&report, &args.output.out.join("oov_worksheet.tsv"))?;

    if let Some((tok, _)) = before {
        println!("token OOV rate: {:.4} (before translation: {:.4})", report.token_oov_rate, tok);
    } else {
        println!("token OOV rate: {:.4}", report.token_oov_rate);
    }
    println!("type OOV rate:  {:.4}", report.type_oov_rate);
    println!(
        "ranked OOV terms kept: {} (top-k {})",
        report.ranked_oov.len(),
        args.top_k
    );
    println!(
        "wrote {} and {}",
        args.output.out.join("oov.json").display(),
        args.output.out.join("oov_worksheet.tsv").display()
    );
    Ok(())
}

// ---------------------------------------------------------------------------
// trajectory
// ---------------------------------------------------------------------------

fn trajectory_csv(meta: &Meta, traj: &Trajectory) -> String {
    let n = traj.relative.len();
    let mut out = meta.comment_block();
    out.push_str("bin,progression_pct,absolute,relative,date\n");
    for bin in 0..n {
        out.push_str(&format!(
            "{bin},{},{},{},{}\n",
            fmt_f(100.0 * (bin as f64 + 0.5) / n as f64),
            fmt_f(traj.absolute[bin]),
            fmt_f(traj.relative[bin]),
            traj.bin_dates[bin]
        ));
    }
    out
}

fn trajectory_svg(meta: &Meta, traj: &Trajectory, title: &str) -> String {
    let n = traj.relative.len() as f64;
    let prog = |bin: usize| 100.0 * (bin as f64 + 0.5) / n;
    let absolute: Vec<(f64, f64)> = traj
        .absolute
        .iter()
        .enumerate()
        .map(|(b, &v)| (prog(b), v))
        .collect();
    let relative: Vec<(f64, f64)> = traj
        .relative
        .iter()
        .enumerate()
        .map(|(b, &v)| (prog(b), v))
        .collect();
    svg::chart(
        meta,
        &[
            (
                &format!("{title} - absolute sentiment"),
                "progression (%)",
                vec![svg::Series {
                    label: "absolute",
                    color: "#555555",
                    width: 1.5,
                    points: absolute,
                }],
            ),
            (
                &format!("{title} - relative sentiment"),
                "progression (%)",
                vec![svg::Series {
                    label: "relative",
                    color: "#808080",
                    width: 1.5,
                    points: relative,
                }],
            ),
        ],
    )
}

fn print_extrema(traj: &Trajectory) -> Result<(), CliError> {
    let extrema = find_extrema(traj, traj.params.extrema_radius)?;
    if extrema.is_empty() {
        println!("no local extrema (degenerate or flat trajectory)");
        return Ok(());
    }
    for e in extrema {
        let kind = match e.kind {
            ExtremumKind::Maximum => "maximum",
            ExtremumKind::Minimum => "minimum",
        };
        println!(
            "local {kind} at bin {} ({:.2}%, {}) value {:+.3}",
            e.bin, e.progression_pct, e.date, e.value
        );
    }
    Ok(())
}

/// Score + resample one stream; `None` when the stream is shorter than the
/// low-pass size (batch callers skip those with a warning).
fn artist_trajectory(
    stream: &TokenStream,
    lex: &ValenceLexicons,
    params: &ShifterParams,
    traj_params: &TrajectoryParams,
) -> Result<Option<Trajectory>, CliError> {
    let series = score_tokens(stream, &lex.sentiment, &lex.shifters, params);
    match extract_trajectory(&series, stream, traj_params) {
        Ok(t) => Ok(Some(t)),
        Err(sentarc_core::trajectory::TrajectoryError::SeriesTooShort { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

pub fn cmd_trajectory(args: &TrajectoryArgs) -> Result<(), CliError> {
    let collection = load_collection(&args.corpus)?;
    let lex = load_valence_lexicons(&args.lexicons)?;
    let params = shifter_params(&args.valence)?;
    let bins = args.bins.unwrap_or(match args.level {
        LevelArg::Corpus => TrajectoryParams::CORPUS_BINS,
        LevelArg::Artist => TrajectoryParams::ARTIST_BINS,
    });
    let traj_params = TrajectoryParams {
        low_pass: args.low_pass,
        n_bins: bins,
        extrema_radius: TrajectoryParams::default_radius(bins),
    };
    traj_params.validate()?;
    ensure_out_dir(&args.output)?;

    let mut meta = Meta::new("trajectory");
    meta_corpus(&mut meta, &args.corpus);
    meta_lexicons(&mut meta, &args.lexicons);
    meta_valence(&mut meta, &args.valence);
    meta.push(
        "level",
        match args.level {
            LevelArg::Corpus => "corpus",
            LevelArg::Artist => "artist",
        },
    );
    meta.push("bins", bins);
    meta.push("low_pass", args.low_pass);
    finish_meta(&mut meta, &args.output);

    match args.level {
        LevelArg::Corpus => {
            let stream = translated_stream(&collection, lex.slang.as_ref())?;
            let series = score_tokens(&stream, &lex.sentiment, &lex.shifters, &params);
            let traj = extract_trajectory(&series, &stream, &traj_params)?;
            let csv_path = args.output.out.join("trajectory_corpus.csv");
            write_atomic(&csv_path, &trajectory_csv(&meta, &traj))?;
            write_atomic(
                &args.output.out.join("trajectory_corpus.svg"),
                &trajectory_svg(&meta, &traj, "corpus"),
            )?;
            println!("corpus trajectory: {} bins ({} tokens)", bins, stream.len());
            print_extrema(&traj)?;
            println!("wrote {}", csv_path.display());
        }
        LevelArg::Artist => {
            let trajectories = artist_trajectories(&collection, &lex, &params, &traj_params, 1)?;
            let mut written = 0usize;
            let mut used_slugs: BTreeMap<String, usize> = BTreeMap::new();
            for (artist, _, traj) in &trajectories {
                let mut artist_meta = meta.clone();
                artist_meta.push("artist", artist);
                let slug = {
                    let base = slugify(artist);
                    let n = used_slugs.entry(base.clone()).or_insert(0);
                    *n += 1;
                    if *n == 1 {
                        base
                    } else {
                        format!("{base}_{n}")
                    }
                };
                let csv_path = args.output.out.join(format!("trajectory_artist_{slug}.csv"));
                write_atomic(&csv_path, &trajectory_csv(&artist_meta, traj))?;
                write_atomic(
                    &args.output.out.join(format!("trajectory_artist_{slug}.svg")),
                    &trajectory_svg(&artist_meta, traj, artist),
                )?;
                written += 1;
            }
            println!(
                "artist trajectories: {written} written ({} bins each)",
                bins
            );
        }
    }
    Ok(())
}

/// Time-ordered per-artist trajectories for artists with at least
/// `min_songs` songs. Artists whose streams are too short are skipped with
/// a warning. Computed in parallel, merged in artist order.
fn artist_trajectories(
    collection: &SongCollection,
    lex: &ValenceLexicons,
    params: &ShifterParams,
    traj_params: &TrajectoryParams,
    min_songs: usize,
) -> Result<Vec<(String, usize, Trajectory)>, CliError> {
    let streams: BTreeMap<String, TokenStream> = TokenStream::group_by_artist(collection)?;
    let qualifying: Vec<(String, usize, TokenStream)> = streams
        .into_iter()
        .filter_map(|(artist, stream)| {
            let songs = collection.songs_of(&artist).len();
            (songs >= min_songs).then(|| {
                let stream = match &lex.slang {
                    Some(dict) => stream.translate(dict),
                    None => stream,
                };
                (artist, songs, stream)
            })
        })
        .collect();

    let computed: Vec<Result<(String, usize, Option<Trajectory>), CliError>> = qualifying
        .par_iter()
        .map(|(artist, songs, stream)| {
            artist_trajectory(stream, lex, params, traj_params)
                .map(|t| (artist.clone(), *songs, t))
        })
        .collect();

    let mut out = Vec::new();
    for item in computed {
        let (artist, songs, traj) = item?;
        match traj {
            Some(t) => out.push((artist, songs, t)),
            None => eprintln!(
                "warning: artist {artist:?} skipped (stream shorter than low-pass size {})",
                traj_params.low_pass
            ),
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// similarity
// ---------------------------------------------------------------------------

fn similarity_csv(meta: &Meta, matrix: &SimilarityMatrix) -> String {
    let mut out = meta.comment_block();
    out.push_str("artist_a,artist_b,cosine,label\n");
    for (i, a) in matrix.artists.iter().enumerate() {
        for (j, b) in matrix.artists.iter().enumerate() {
            out.push_str(&format!(
                "{},{},{},{}\n",
                csv_field(a),
                csv_field(b),
                fmt_f(matrix.values[i][j]),
                matrix.labels[i][j]
            ));
        }
    }
    out
}

fn print_similarity(matrix: &SimilarityMatrix) {
    let width = matrix
        .artists
        .iter()
        .map(|a| a.len())
        .max()
        .unwrap_or(6)
        .max(6);
    print!("{:width$} ", "");
    for a in &matrix.artists {
        print!(" {a:>width$}");
    }
    println!();
    for (i, a) in matrix.artists.iter().enumerate() {
        print!("{a:>width$} ");
        for j in 0..matrix.artists.len() {
            print!(" {:>width$}", format!("{:+.2}", matrix.values[i][j]));
        }
        println!();
    }
    println!();
    for (i, a) in matrix.artists.iter().enumerate() {
        for (j, b) in matrix.artists.iter().enumerate() {
            if j > i {
                println!("{a} vs {b}: {:+.2} ({})", matrix.values[i][j], matrix.labels[i][j]);
            }
        }
    }
}

pub fn cmd_similarity(args: &SimilarityArgs) -> Result<(), CliError> {
    let collection = load_collection(&args.corpus)?;
    let lex = load_valence_lexicons(&args.lexicons)?;
    let params = shifter_params(&args.valence)?;
    let traj_params = TrajectoryParams {
        low_pass: args.low_pass,
        n_bins: args.bins,
        extrema_radius: TrajectoryParams::default_radius(args.bins),
    };
    traj_params.validate()?;

    let trajectories =
        artist_trajectories(&collection, &lex, &params, &traj_params, args.min_songs)?;
    if trajectories.len() < 2 {
        return Err(CliError::Precondition(format!(
            "need at least 2 artists with >= {} songs, found {}",
            args.min_songs,
            trajectories.len()
        )));
    }
    let items: Vec<ArtistTrajectory> = trajectories
        .into_iter()
        .map(|(artist, songs, trajectory)| ArtistTrajectory {
            artist,
            songs,
            trajectory,
        })
        .collect();
    let mode = if args.absolute {
        VectorMode::Absolute
    } else {
        VectorMode::Relative
    };
    let matrix = similarity_matrix(&items, mode, args.threshold)?;
    for a in &matrix.excluded {
        eprintln!("warning: artist {a:?} excluded (degenerate trajectory)");
    }

    let mut meta = Meta::new("similarity");
    meta_corpus(&mut meta, &args.corpus);
    meta_lexicons(&mut meta, &args.lexicons);
    meta_valence(&mut meta, &args.valence);
    meta.push("min_songs", args.min_songs);
    meta.push("bins", args.bins);
    meta.push("low_pass", args.low_pass);
    meta.push("threshold", args.threshold);
    meta.push("mode", mode.as_str());
    for (artist, songs) in matrix.artists.iter().zip(&matrix.song_counts) {
        meta.push("artist", format!("{artist} (songs={songs})"));
    }
    finish_meta(&mut meta, &args.output);

    ensure_out_dir(&args.output)?;
    let path = args.output.out.join("similarity.csv");
    write_atomic(&path, &similarity_csv(&meta, &matrix))?;
    print_similarity(&matrix);
    println!("wrote {}", path.display());
    Ok(())
}

// ---------------------------------------------------------------------------
// crime
// ---------------------------------------------------------------------------

fn aligned_csv(meta: &Meta, aligned: &AlignedSeries) -> String {
    let mut out = meta.comment_block();
    out.push_str("bin,anchor_count,smoothed,scaled\n");
    let anchor_at: BTreeMap<usize, u64> = aligned
        .anchors
        .iter()
        .map(|a| (a.bin, a.count))
        .collect();
    for (offset, (&sm, &sc)) in aligned.smoothed.iter().zip(&aligned.scaled).enumerate() {
        let bin = aligned.start_bin + offset;
        let anchor = anchor_at
            .get(&bin)
            .map(|c| c.to_string())
            .unwrap_or_default();
        out.push_str(&format!("{bin},{anchor},{},{}\n", fmt_f(sm), fmt_f(sc)));
    }
    out
}

fn crime_overlay_svg(
    meta: &Meta,
    sentiment: &Trajectory,
    aligned: &[AlignedSeries],
) -> String {
    let n = sentiment.relative.len() as f64;
    let prog = |bin: usize| 100.0 * (bin as f64 + 0.5) / n;
    let mut series = vec![svg::Series {
        label: "sentiment",
        color: "#808080",
        width: 1.5,
        points: sentiment
            .relative
            .iter()
            .enumerate()
            .map(|(b, &v)| (prog(b), v))
            .collect(),
    }];
    for (i, a) in aligned.iter().enumerate() {
        series.push(svg::Series {
            label: a.crime_type.label(),
            color: CRIME_COLORS[i % CRIME_COLORS.len()],
            width: 1.5,
            points: a
                .scaled
                .iter()
                .enumerate()
                .map(|(offset, &v)| (prog(a.start_bin + offset), v))
                .collect(),
        });
    }
    svg::chart(
        meta,
        &[(
            "relative sentiment and scaled crime counts",
            "progression (%)",
            series,
        )],
    )
}

pub fn cmd_crime(args: &CrimeArgs) -> Result<(), CliError> {
    let collection = load_collection(&args.corpus)?;
    let lex = load_valence_lexicons(&args.lexicons)?;
    let params = shifter_params(&args.valence)?;
    let traj_params = TrajectoryParams {
        low_pass: args.low_pass,
        n_bins: args.bins,
        extrema_radius: TrajectoryParams::default_radius(args.bins),
    };
    traj_params.validate()?;

    let stream = translated_stream(&collection, lex.slang.as_ref())?;
    let series = score_tokens(&stream, &lex.sentiment, &lex.shifters, &params);
    let sentiment = extract_trajectory(&series, &stream, &traj_params)?;
    let crime_series = load_crime(&args.crime)?;
    if crime_series.is_empty() {
        return Err(CliError::Precondition(format!(
            "no crime series found in {}",
            args.crime.display()
        )));
    }

    let mut meta = Meta::new("crime");
    meta_corpus(&mut meta, &args.corpus);
    meta_lexicons(&mut meta, &args.lexicons);
    meta_valence(&mut meta, &args.valence);
    meta.push("crime", args.crime.display());
    meta.push("bins", args.bins);
    meta.push("low_pass", args.low_pass);
    meta.push("span", args.span);
    meta.push("max_lag", args.max_lag);
    finish_meta(&mut meta, &args.output);

    ensure_out_dir(&args.output)?;
    let mut aligned_ok: Vec<AlignedSeries> = Vec::new();
    let mut first_err: Option<CliError> = None;
    for cs in &crime_series {
        match AlignedSeries::build(cs, &stream, args.bins, args.span) {
            Ok((aligned, warnings)) => {
                for w in warnings {
                    eprintln!("warning: {w}");
                }
                aligned_ok.push(aligned);
            }
            Err(e) => {
                eprintln!("warning: series {} skipped: {e}", cs.crime_type);
                if first_err.is_none() {
                    first_err = Some(e.into());
                }
            }
        }
    }
    if aligned_ok.is_empty() {
        return Err(first_err.unwrap_or_else(|| {
            CliError::Precondition("no crime series could be aligned".to_string())
        }));
    }

    for aligned in &aligned_ok {
        let mut series_meta = meta.clone();
        series_meta.push("crime_type", aligned.crime_type.label());
        let path = args
            .output
            .out
            .join(format!("aligned_{}.csv", slugify(aligned.crime_type.label())));
        write_atomic(&path, &aligned_csv(&series_meta, aligned))?;
        println!(
            "aligned {}: {} anchors over bins {}..{}",
            aligned.crime_type,
            aligned.anchors.len(),
            aligned.start_bin,
            aligned.end_bin()
        );
    }

    let candidates = lead_lag_all(&sentiment, &aligned_ok, args.max_lag);
    let json = json_artifact(
        &meta,
        "candidates",
        serde_json::to_value(&candidates).expect("candidates serialize"),
    );
    write_atomic(&args.output.out.join("leadlag.json"), &json)?;
    write_atomic(
        &args.output.out.join("crime_overlay.svg"),
        &crime_overlay_svg(&meta, &sentiment, &aligned_ok),
    )?;

    if candidates.is_empty() {
        println!("no lead-lag candidates within {} days", args.max_lag);
    } else {
        for c in &candidates {
            println!(
                "candidate: sentiment trough {} -> {} peak {} (lag {} days)",
                c.trough_date, c.crime_type, c.peak_date, c.lag_days
            );
        }
    }
    println!(
        "wrote {} and {}",
        args.output.out.join("leadlag.json").display(),
        args.output.out.join("crime_overlay.svg").display()
    );
    Ok(())
}

// ---------------------------------------------------------------------------
// report
// ---------------------------------------------------------------------------

pub fn cmd_report(args: &ReportArgs) -> Result<(), CliError> {
    let out = &args.output.out;
    ensure_out_dir(&args.output)?;

    println!("== stats ==");
    cmd_stats(&StatsArgs {
        corpus: args.corpus.clone(),
        output: args.output.clone(),
    })?;

    if let Some(freq) = &args.freq {
        println!("== oov ==");
        cmd_oov(&OovArgs {
            corpus: args.corpus.clone(),
            freq: freq.clone(),
            slang: args.lexicons.slang.clone(),
            top_k: args.top_k,
            output: args.output.clone(),
        })?;
    } else {
        println!("== oov == (skipped: no --freq)");
    }

    println!("== corpus trajectory ==");
    cmd_trajectory(&TrajectoryArgs {
        corpus: args.corpus.clone(),
        lexicons: args.lexicons.clone(),
        valence: args.valence.clone(),
        level: LevelArg::Corpus,
        bins: Some(args.bins),
        low_pass: args.low_pass,
        output: args.output.clone(),
    })?;

    println!("== artist trajectories ==");
    cmd_trajectory(&TrajectoryArgs {
        corpus: args.corpus.clone(),
        lexicons: args.lexicons.clone(),
        valence: args.valence.clone(),
        level: LevelArg::Artist,
        bins: Some(args.artist_bins),
        low_pass: args.low_pass,
        output: args.output.clone(),
    })?;

    println!("== similarity ==");
    cmd_similarity(&SimilarityArgs {
        corpus: args.corpus.clone(),
        lexicons: args.lexicons.clone(),
        valence: args.valence.clone(),
        min_songs: args.min_songs,
        bins: args.artist_bins,
        low_pass: args.low_pass,
        threshold: args.threshold,
        absolute: false,
        output: args.output.clone(),
    })?;

    if let Some(crime) = &args.crime {
        println!("== crime ==");
        cmd_crime(&CrimeArgs {
            corpus: args.corpus.clone(),
            lexicons: args.lexicons.clone(),
            valence: args.valence.clone(),
            crime: crime.clone(),
            span: args.span,
            max_lag: args.max_lag,
            bins: args.bins,
            low_pass: args.low_pass,
            output: args.output.clone(),
        })?;
    } else {
        println!("== crime == (skipped: no --crime)");
    }

    println!("report complete: {}", out.display());
    Ok(())
}

#!/usr/bin/env python3
"""Independent reference implementation used to produce the golden files in
crates/cli/tests/golden/.

Everything numeric here is recomputed from scratch with NumPy (tokenizer,
shifter-weighted valence, DCT low-pass resampling, min-max scaling, anchor
projection, loess, cosine matrix) so the goldens do not inherit any bug from
the Rust implementation. Run from the repository root:

    python3 tools/oracle/make_goldens.py

The script writes the goldens and prints a summary. The CI acceptance test
compares `sentarc` output byte-for-byte against these files.
"""

import json
import math
import os
from datetime import date

import numpy as np

ROOT = os.path.normpath(os.path.join(os.path.dirname(__file__), "..", ".."))
GOLDEN = os.path.join(ROOT, "crates", "cli", "tests", "golden")

SONGS = "data/demo_songs.jsonl"
SENTIMENT = "data/lexicon_sentiment.tsv"
SHIFTERS = "data/lexicon_shifters.tsv"
SLANG = "data/slang_starter.tsv"
CRIME = "data/demo_crime.csv"

WINDOW, AMP, ADV, FLOOR = 4, 0.8, 0.25, 0.2
CORPUS_BINS, ARTIST_BINS, LOW_PASS = 2000, 500, 10
MIN_SONGS, THRESHOLD, SPAN, MAX_LAG = 3, 0.40, 0.30, 90


# -- corpus -----------------------------------------------------------------

def tokenize(text):
    out, cur = [], []

    def flush():
        if cur:
            tok = "".join(cur).strip("'")
            if tok:
                out.append(tok)
            cur.clear()

    for ch in text:
        if ch == "’":
            ch = "'"
        if ch.isalnum():
            for lc in ch.lower():
                if lc.isalnum() or lc == "'":
                    cur.append(lc)
        elif ch == "'":
            cur.append(ch)
        else:
            flush()
    flush()
    return out


def load_songs(path):
    songs = [json.loads(l) for l in open(path, encoding="utf-8") if l.strip()]
    for s in songs:
        s["date"] = date.fromisoformat(s["date"])
    songs.sort(key=lambda s: (s["date"], s["artist"], s["title"]))
    return songs


def data_lines(path):
    for line in open(path, encoding="utf-8"):
        line = line.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        yield line


def load_tsv(path):
    return [line.split("\t") for line in data_lines(path)]


def build_stream(songs, slang):
    tokens, boundaries, meta = [], [], []
    for s in songs:
        boundaries.append(len(tokens))
        meta.append(s)
        for t in tokenize(s["lyrics"]):
            rep = slang.get(t)
            tokens.extend(rep if rep else [t])
    return tokens, boundaries, meta


# -- valence ----------------------------------------------------------------

def score(tokens, boundaries, sentiment, shifters):
    values = np.zeros(len(tokens))
    starts = np.zeros(len(tokens), dtype=int)
    for k, b in enumerate(boundaries):
        end = boundaries[k + 1] if k + 1 < len(boundaries) else len(tokens)
        starts[b:end] = b
    for i, tok in enumerate(tokens):
        v = sentiment.get(tok)
        if v is None:
            continue
        lo = max(starts[i], i - WINDOW)
        n = a = d = 0
        bounded = False
        for j in range(i - 1, lo - 1, -1):
            kind = shifters.get(tokens[j])
            if kind == "adversative":
                bounded = True
                break
            elif kind == "negator":
                n += 1
            elif kind == "amplifier":
                a += 1
            elif kind == "deamplifier":
                d += 1
        if n % 2 == 1:
            a, d = d, a
        sign = -1.0 if n % 2 == 1 else 1.0
        mag = max(FLOOR, 1.0 + AMP * (a - d))
        boost = 1.0 + ADV if bounded else 1.0
        values[i] = v * sign * mag * boost
    return values


# -- trajectory -------------------------------------------------------------

def dct_resample(x, low_pass, out_len):
    n = len(x)
    t = np.arange(n)
    k = np.arange(low_pass)
    coeffs = (x[None, :] * np.cos(np.pi * k[:, None] * (2 * t[None, :] + 1) / (2 * n))).sum(axis=1)
    j = np.arange(out_len)
    y = np.full(out_len, coeffs[0])
    for kk in range(1, low_pass):
        y = y + 2.0 * coeffs[kk] * np.cos(np.pi * kk * (2 * j + 1) / (2 * out_len))
    return y / n


def minmax(values):
    lo, hi = values.min(), values.max()
    if hi == lo:
        return np.zeros_like(values)
    return -1.0 + 2.0 * (values - lo) / (hi - lo)


def bin_dates(boundaries, meta, n_tokens, n_bins):
    dates = []
    for b in range(n_bins):
        pos = min(int((b + 0.5) / n_bins * n_tokens), n_tokens - 1)
        song = 0
        for k, start in enumerate(boundaries):
            if start <= pos:
                song = k
        dates.append(meta[song]["date"])
    return dates


# -- crime ------------------------------------------------------------------

def month_index(ym):
    y, m = ym
    return y * 12 + (m - 1)


def anchors_for(points, boundaries, meta, n_tokens, n_bins):
    spans = {}
    for k, s in enumerate(meta):
        start = boundaries[k]
        end = boundaries[k + 1] if k + 1 < len(boundaries) else n_tokens
        ym = (s["date"].year, s["date"].month)
        if ym in spans:
            a, b = spans[ym]
            spans[ym] = (min(a, start), max(b, end))
        else:
            spans[ym] = (start, end)
    month_bins = {}
    for ym, (start, end) in spans.items():
        median = start + (end - start - 1) // 2
        month_bins[ym] = min(int((median + 0.5) / n_tokens * n_bins), n_bins - 1)
    anchored = sorted(month_bins)
    first, last = anchored[0], anchored[-1]

    out = []
    for ym, count in points:
        if ym < first or ym > last:
            continue
        if ym in month_bins:
            b = month_bins[ym]
        else:
            prev = max(m for m in anchored if m < ym)
            nxt = min(m for m in anchored if m > ym)
            t = (month_index(ym) - month_index(prev)) / (month_index(nxt) - month_index(prev))
            raw = month_bins[prev] + t * (month_bins[nxt] - month_bins[prev])
            b = math.floor(raw + 0.5)  # round half away from zero (positive domain)
            if out and b <= out[-1][1]:
                continue
        out.append((ym, b, count))
    return out


def tricube(u):
    return (1 - u**3) ** 3 if u < 1 else 0.0


def loess(points, span, eval_at):
    n = len(points)
    q = min(max(4, math.ceil(span * n)), n)
    xs = np.array([p[0] for p in points])
    ys = np.array([p[1] for p in points])
    out = []
    for x0 in eval_at:
        order = sorted(range(n), key=lambda i: (abs(xs[i] - x0), i))
        sel = sorted(order[:q])
        d = np.abs(xs[sel] - x0)
        dmax = d.max()
        scale = dmax if dmax > 0 else 1.0
        u = (xs[sel] - x0) / scale
        w = np.array([tricube(di / scale) for di in d])
        sw = np.sqrt(w)
        design = np.stack([np.ones_like(u), u, u * u], axis=1)
        coef, *_ = np.linalg.lstsq(design * sw[:, None], ys[sel] * sw, rcond=None)
        out.append(coef[0])
    return np.array(out)


# -- artifact writers (format contract mirrored from the CLI) ---------------

def f6(v):
    return f"{v:.6f}"


def meta_lines(pairs):
    return "".join(f"# {k}: {v}\n" for k, v in pairs)


def common_meta(command):
    return [
        ("tool", "sentarc 0.1.0"),
        ("command", command),
        ("songs", SONGS),
        ("sentiment", SENTIMENT),
        ("shifters", SHIFTERS),
        ("slang", SLANG),
        ("window", WINDOW),
        ("amp_weight", AMP),
        ("adv_weight", ADV),
        ("floor", FLOOR),
    ]


def write(path, text):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(text)
    print(f"wrote {os.path.relpath(path, ROOT)}")


def trajectory_csv(meta_pairs, absolute, relative, dates):
    n = len(absolute)
    rows = [meta_lines(meta_pairs), "bin,progression_pct,absolute,relative,date\n"]
    for b in range(n):
        rows.append(
            f"{b},{f6(100.0 * (b + 0.5) / n)},{f6(absolute[b])},{f6(relative[b])},{dates[b].isoformat()}\n"
        )
    return "".join(rows)


def main():
    os.chdir(ROOT)
    sentiment = {t.lower(): float(v) for t, v in load_tsv(SENTIMENT)}
    shifters = {t.lower(): c for t, c in load_tsv(SHIFTERS)}
    slang = {t.lower(): r.split() for t, r in load_tsv(SLANG)}
    songs = load_songs(SONGS)

    # corpus trajectory -------------------------------------------------
    tokens, boundaries, meta = build_stream(songs, slang)
    values = score(tokens, boundaries, sentiment, shifters)
    absolute = dct_resample(values, LOW_PASS, CORPUS_BINS)
    relative = minmax(absolute)
    dates = bin_dates(boundaries, meta, len(tokens), CORPUS_BINS)
    pairs = common_meta("trajectory") + [
        ("level", "corpus"),
        ("bins", CORPUS_BINS),
        ("low_pass", LOW_PASS),
    ]
    write(
        os.path.join(GOLDEN, "trajectory_corpus.csv"),
        trajectory_csv(pairs, absolute, relative, dates),
    )
    trough = int(np.argmin(relative))
    print(
        f"  corpus: {len(tokens)} translated tokens, trough at bin {trough} "
        f"({100.0 * (trough + 0.5) / CORPUS_BINS:.2f}%, {dates[trough]})"
    )

    # artist trajectories + similarity -----------------------------------
    artists = sorted({s["artist"] for s in songs})
    vectors = {}
    counts = {}
    for artist in artists:
        own = [s for s in songs if s["artist"] == artist]
        counts[artist] = len(own)
        if len(own) < MIN_SONGS:
            continue
        t, b, m = build_stream(own, slang)
        v = score(t, b, sentiment, shifters)
        vectors[artist] = minmax(dct_resample(v, LOW_PASS, ARTIST_BINS))
    ordered = sorted(vectors, key=lambda a: (-counts[a], a))

    def cos(u, v):
        return float(np.dot(u, v) / (np.linalg.norm(u) * np.linalg.norm(v)))

    def label(i, j):
        if i == j:
            return "self"
        c = cos(vectors[ordered[i]], vectors[ordered[j]])
        if c > THRESHOLD:
            return "similar"
        if c < -THRESHOLD:
            return "dissimilar"
        return "independent"

    pairs = common_meta("similarity") + [
        ("min_songs", MIN_SONGS),
        ("bins", ARTIST_BINS),
        ("low_pass", LOW_PASS),
        ("threshold", THRESHOLD),
        ("mode", "relative"),
    ] + [("artist", f"{a} (songs={counts[a]})") for a in ordered]
    rows = [meta_lines(pairs), "artist_a,artist_b,cosine,label\n"]
    for i, a in enumerate(ordered):
        for j, b in enumerate(ordered):
            c = 1.0 if i == j else cos(vectors[a], vectors[b])
            rows.append(f"{a},{b},{f6(c)},{label(i, j)}\n")
    write(os.path.join(GOLDEN, "similarity.csv"), "".join(rows))
    print(f"  similarity: {len(ordered)} artists: {ordered}")

    # aligned homicide ----------------------------------------------------
    crime_rows = [l.split(",") for l in data_lines(CRIME)][1:]
    homicide = [
        ((int(mo[:4]), int(mo[5:7])), int(c))
        for mo, ty, c in crime_rows
        if ty == "homicide"
    ]
    anchors = anchors_for(homicide, boundaries, meta, len(tokens), CORPUS_BINS)
    pts = [(float(b), float(c)) for _, b, c in anchors]
    start, end = anchors[0][1], anchors[-1][1]
    smoothed = loess(pts, SPAN, [float(b) for b in range(start, end + 1)])
    scaled = minmax(smoothed)
    anchor_at = {b: c for _, b, c in anchors}
    pairs = common_meta("crime") + [
        ("crime", CRIME),
        ("bins", CORPUS_BINS),
        ("low_pass", LOW_PASS),
        ("span", SPAN),
        ("max_lag", MAX_LAG),
        ("crime_type", "homicide"),
    ]
    rows = [meta_lines(pairs), "bin,anchor_count,smoothed,scaled\n"]
    for off in range(end - start + 1):
        b = start + off
        a = str(anchor_at[b]) if b in anchor_at else ""
        rows.append(f"{b},{a},{f6(smoothed[off])},{f6(scaled[off])}\n")
    write(os.path.join(GOLDEN, "aligned_homicide.csv"), "".join(rows))
    peak = start + int(np.argmax(scaled))
    print(f"  homicide: {len(anchors)} anchors, smoothed peak at bin {peak}")


if __name__ == "__main__":
    main()

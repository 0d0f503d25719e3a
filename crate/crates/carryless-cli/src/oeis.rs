//! OEIS b-file acquisition, parsing and comparison.
//!
//! A b-file is plain text, one "index value" pair per line, with '#'
//! comment lines and blank lines skipped. Reference data is resolved
//! fixture first, then cache, then (unless offline) a remote fetch from
//! oeis.org with a courtesy delay and at most one request per sequence
//! per run.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::time::Duration;

use carryless_core::sequences::Term;

/// Where reference data came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Fixture,
    Cache,
    Remote,
}

impl Source {
    pub fn token(self) -> &'static str {
        match self {
            Source::Fixture => "fixture",
            Source::Cache => "cache",
            Source::Remote => "remote",
        }
    }
}

/// A parsed b-file: contiguous (index, value) records.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFileSeq {
    pub a_number: String,
    pub records: Vec<(i64, String)>,
    pub source: Source,
}

#[derive(Debug, thiserror::Error)]
pub enum OeisError {
    #[error("{a_number}: malformed b-file line {line}: {text:?}")]
    Parse {
        a_number: String,
        line: usize,
        text: String,
    },
    #[error("{a_number}: non-contiguous index at b-file line {line} (expected {expected})")]
    NonContiguous {
        a_number: String,
        line: usize,
        expected: i64,
    },
    #[error("{a_number}: reference data unavailable: {cause}")]
    Unavailable { a_number: String, cause: String },
}

/// Offline fixtures shipped with the crate, first 250 terms each.
static FIXTURES: &[(&str, &str)] = &[
    ("A004520", include_str!("../fixtures/b004520.txt")),
    ("A059729", include_str!("../fixtures/b059729.txt")),
    ("A014263", include_str!("../fixtures/b014263.txt")),
    ("A169964", include_str!("../fixtures/b169964.txt")),
    ("A169884", include_str!("../fixtures/b169884.txt")),
    ("A169968", include_str!("../fixtures/b169968.txt")),
    ("A169887", include_str!("../fixtures/b169887.txt")),
    ("A169962", include_str!("../fixtures/b169962.txt")),
    ("A169963", include_str!("../fixtures/b169963.txt")),
    ("A169889", include_str!("../fixtures/b169889.txt")),
    ("A169885", include_str!("../fixtures/b169885.txt")),
    ("A169890", include_str!("../fixtures/b169890.txt")),
    ("A169973", include_str!("../fixtures/b169973.txt")),
    ("A059692", include_str!("../fixtures/b059692.txt")),
    ("A003893", include_str!("../fixtures/b003893.txt")),
    ("A000689", include_str!("../fixtures/b000689.txt")),
];

/// "A004520" -> "b004520.txt"
pub fn bfile_name(a_number: &str) -> String {
    format!("b{}.txt", a_number.trim_start_matches('A'))
}

/// Parse b-file text. Lines are "index value"; '#' lines and blank
/// lines are skipped; indices must increase by exactly 1.
pub fn parse_bfile(a_number: &str, text: &str, source: Source) -> Result<BFileSeq, OeisError> {
    let mut records: Vec<(i64, String)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let parsed = match (parts.next(), parts.next(), parts.next()) {
            (Some(idx), Some(val), None) => idx
                .parse::<i64>()
                .ok()
                .filter(|_| val.chars().all(|c| c.is_ascii_digit() || c == '-'))
                .map(|i| (i, val.to_string())),
            _ => None,
        };
        let (idx, val) = parsed.ok_or_else(|| OeisError::Parse {
            a_number: a_number.to_string(),
            line: lineno + 1,
            text: raw.to_string(),
        })?;
        if let Some((prev, _)) = records.last() {
            if idx != prev + 1 {
                return Err(OeisError::NonContiguous {
                    a_number: a_number.to_string(),
                    line: lineno + 1,
                    expected: prev + 1,
                });
            }
        }
        records.push((idx, val));
    }
    Ok(BFileSeq {
        a_number: a_number.to_string(),
        records,
        source,
    })
}

// one remote attempt per sequence per run
static REQUESTED: Mutex<BTreeSet<String>> = Mutex::new(BTreeSet::new());

fn courtesy_pause(delay: Duration) {
    static LAST: Mutex<Option<std::time::Instant>> = Mutex::new(None);
    let mut last = LAST.lock().unwrap();
    if let Some(prev) = *last {
        let elapsed = prev.elapsed();
        if elapsed < delay {
            std::thread::sleep(delay - elapsed);
        }
    }
    *last = Some(std::time::Instant::now());
}

pub fn default_cache_dir() -> PathBuf {
    std::env::var_os("CARRYLESS_CACHE_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| {
            let base = std::env::var_os("XDG_CACHE_HOME")
                .map(PathBuf::from)
                .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))
                .unwrap_or_else(std::env::temp_dir);
            base.join("carryless")
        })
}

/// Resolve reference data: fixture, then cache, then remote (unless
/// offline). Remote bytes are stored verbatim in the cache.
pub fn fetch(a_number: &str, cache_dir: &Path, offline: bool) -> Result<BFileSeq, OeisError> {
    fetch_with_delay(a_number, cache_dir, offline, Duration::from_secs(1))
}

pub fn fetch_with_delay(
    a_number: &str,
    cache_dir: &Path,
    offline: bool,
    delay: Duration,
) -> Result<BFileSeq, OeisError> {
    if let Some((_, text)) = FIXTURES.iter().find(|(a, _)| *a == a_number) {
        return parse_bfile(a_number, text, Source::Fixture);
    }
    let cache_path = cache_dir.join(bfile_name(a_number));
    if let Ok(text) = fs::read_to_string(&cache_path) {
        return parse_bfile(a_number, &text, Source::Cache);
    }
    if offline {
        return Err(OeisError::Unavailable {
            a_number: a_number.to_string(),
            cause: "offline and not cached".to_string(),
        });
    }
    {
        let mut requested = REQUESTED.lock().unwrap();
        if !requested.insert(a_number.to_string()) {
            return Err(OeisError::Unavailable {
                a_number: a_number.to_string(),
                cause: "already attempted this run".to_string(),
            });
        }
    }
    courtesy_pause(delay);
    let url = format!("https://oeis.org/{}/{}", a_number, bfile_name(a_number));
    let unavailable = |cause: String| OeisError::Unavailable {
        a_number: a_number.to_string(),
        cause,
    };
    let client = reqwest::blocking::Client::builder()
        .timeout(Duration::from_secs(30))
        .build()
        .map_err(|e| unavailable(e.to_string()))?;
    let resp = client
        .get(&url)
        .send()
        .and_then(|r| r.error_for_status())
        .map_err(|e| unavailable(e.to_string()))?;
    let bytes = resp.bytes().map_err(|e| unavailable(e.to_string()))?;
    let text = String::from_utf8_lossy(&bytes).into_owned();
    let seq = parse_bfile(a_number, &text, Source::Remote)?;
    let _ = fs::create_dir_all(cache_dir);
    let _ = fs::write(&cache_path, &bytes);
    Ok(seq)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Mismatch,
    Unavailable,
}

impl Verdict {
    pub fn token(self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::Unavailable => "unavailable",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonReport {
    pub a_number: String,
    pub terms_compared: usize,
    pub first_mismatch: Option<(i64, String, String)>,
    pub verdict: Verdict,
}

/// Align generated terms with the reference on index and compare up to
/// `min_terms` of the overlap. A mismatch-free comparison that covers
/// fewer than `min_terms` terms is reported unavailable, not a match.
pub fn compare(generated: &[Term], reference: &BFileSeq, min_terms: usize) -> ComparisonReport {
    let mut terms_compared = 0usize;
    let mut first_mismatch = None;
    for (idx, value) in generated {
        let reference_value = match reference.records.first() {
            Some((start, _)) => {
                let pos = idx - start;
                if pos < 0 {
                    continue;
                }
                match reference.records.get(pos as usize) {
                    Some((_, v)) => v,
                    None => break,
                }
            }
            None => break,
        };
        terms_compared += 1;
        if reference_value != value {
            first_mismatch = Some((*idx, reference_value.clone(), value.clone()));
            break;
        }
        if terms_compared >= min_terms {
            break;
        }
    }
    let verdict = if first_mismatch.is_some() {
        Verdict::Mismatch
    } else if terms_compared >= min_terms {
        Verdict::Match
    } else {
        Verdict::Unavailable
    };
    ComparisonReport {
        a_number: reference.a_number.clone(),
        terms_compared,
        first_mismatch,
        verdict,
    }
}

//! The job document.
//!
//! ```text
//! # comments run to end of line
//! dim = 2
//!
//! [vertices]
//! 1 0
//! 0 1
//! -1 -1
//!
//! [ops]
//! chart = 1, 2
//! params = a, b
//!
//! [options]
//! seed = 0
//! samples = 6
//! flip_sign = false
//! ehrhart_kmax = 2
//! ```
//!
//! `[ops]` holds either `chart` (1-based vertex indices of a maximal cone)
//! with `params`, or `params` with `lambda`, a comma-separated list of affine
//! forms giving λ in lattice coordinates. Entries may share a line when
//! separated by `;`.

use chow_obstruct::exact_math::{AffineForm, ParamSpace};
use chow_obstruct::localization::OnePsSpec;
use chow_obstruct::toric_fan::FanoPolytope;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Options {
    pub seed: u64,
    /// Total sample count; `None` means `#params + 4`.
    pub samples: Option<usize>,
    pub flip_sign: bool,
    pub ehrhart_kmax: u32,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: 0,
            samples: None,
            flip_sign: false,
            ehrhart_kmax: 2,
        }
    }
}

#[derive(Debug, Clone)]
pub struct JobSpec {
    pub polytope: FanoPolytope,
    pub ops: OnePsSpec,
    pub options: Options,
}

impl JobSpec {
    pub fn params(&self) -> &ParamSpace {
        self.ops.params()
    }

    pub fn sample_count(&self) -> usize {
        self.options.samples.unwrap_or(self.params().len() + 4)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{}{field}: {message}", line.map(|l| format!("line {l}: ")).unwrap_or_default())]
pub struct JobError {
    pub line: Option<usize>,
    pub field: String,
    pub message: String,
}

fn err(line: Option<usize>, field: &str, message: impl ToString) -> JobError {
    JobError {
        line,
        field: field.to_string(),
        message: message.to_string(),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Top,
    Vertices,
    Ops,
    Options,
}

/// A `key = value` entry with the line it came from.
struct Entry<'a> {
    line: usize,
    key: &'a str,
    value: &'a str,
}

fn split_list(value: &str) -> impl Iterator<Item = &str> {
    value
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
}

fn parse_entry(line: usize, text: &str) -> Result<Entry<'_>, JobError> {
    let (key, value) = text.split_once('=').ok_or_else(|| {
        err(
            Some(line),
            "entry",
            format!("expected `key = value`, found `{text}`"),
        )
    })?;
    Ok(Entry {
        line,
        key: key.trim(),
        value: value.trim(),
    })
}

fn set_once<'a>(slot: &mut Option<Entry<'a>>, entry: Entry<'a>) -> Result<(), JobError> {
    if let Some(prev) = slot {
        return Err(err(
            Some(entry.line),
            entry.key,
            format!("already set on line {}", prev.line),
        ));
    }
    *slot = Some(entry);
    Ok(())
}

fn parse_number<T: std::str::FromStr>(e: &Entry<'_>) -> Result<T, JobError>
where
    T::Err: std::fmt::Display,
{
    e.value
        .parse()
        .map_err(|x| err(Some(e.line), e.key, format!("`{}`: {x}", e.value)))
}

pub fn parse_job(document: &str) -> Result<JobSpec, JobError> {
    let mut section = Section::Top;
    let mut dim: Option<Entry<'_>> = None;
    let mut rows: Vec<(usize, Vec<i64>)> = Vec::new();
    let (mut chart, mut params, mut lambda) = (None, None, None);
    let (mut seed, mut samples, mut flip, mut kmax) = (None, None, None, None);
    let mut seen_vertices = false;

    for (i, raw) in document.lines().enumerate() {
        let line = i + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        if let Some(name) = text.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
            section = match name.trim() {
                "vertices" => {
                    seen_vertices = true;
                    Section::Vertices
                }
                "ops" => Section::Ops,
                "options" => Section::Options,
                other => {
                    return Err(err(
                        Some(line),
                        "section",
                        format!("unknown section `[{other}]`"),
                    ))
                }
            };
            continue;
        }
        match section {
            Section::Top => {
                let e = parse_entry(line, text)?;
                match e.key {
                    "dim" => set_once(&mut dim, e)?,
                    other => return Err(err(Some(line), other, "unknown field; expected `dim`")),
                }
            }
            Section::Vertices => {
                let row = split_list(text)
                    .map(|t| {
                        t.parse::<i64>().map_err(|_| {
                            err(Some(line), "vertices", format!("`{t}` is not an integer"))
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                rows.push((line, row));
            }
            Section::Ops => {
                for part in text.split(';').map(str::trim).filter(|p| !p.is_empty()) {
                    let e = parse_entry(line, part)?;
                    match e.key {
                        "chart" => set_once(&mut chart, e)?,
                        "params" => set_once(&mut params, e)?,
                        "lambda" => set_once(&mut lambda, e)?,
                        other => {
                            return Err(err(
                                Some(line),
                                other,
                                "unknown field; expected chart, params or lambda",
                            ))
                        }
                    }
                }
            }
            Section::Options => {
                let e = parse_entry(line, text)?;
                match e.key {
                    "seed" => set_once(&mut seed, e)?,
                    "samples" => set_once(&mut samples, e)?,
                    "flip_sign" => set_once(&mut flip, e)?,
                    "ehrhart_kmax" => set_once(&mut kmax, e)?,
                    other => {
                        return Err(err(
                            Some(line),
                            other,
                            "unknown option; expected seed, samples, flip_sign or ehrhart_kmax",
                        ))
                    }
                }
            }
        }
    }

    let dim_entry = dim.ok_or_else(|| err(None, "dim", "missing"))?;
    let n: usize = parse_number(&dim_entry)?;
    if n == 0 {
        return Err(err(Some(dim_entry.line), "dim", "must be positive"));
    }
    if !seen_vertices || rows.is_empty() {
        return Err(err(None, "vertices", "missing"));
    }
    for (row_index, (line, row)) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(err(
                Some(*line),
                "vertices",
                format!(
                    "vertex {} has {} entries, expected {n}",
                    row_index + 1,
                    row.len()
                ),
            ));
        }
    }
    let vertex_count = rows.len();
    let polytope = FanoPolytope::new(n, rows.into_iter().map(|(_, r)| r).collect())
        .map_err(|e| err(None, "vertices", e))?;

    let params_entry = params.ok_or_else(|| err(None, "ops", "missing `params`"))?;
    let names: Vec<&str> = split_list(params_entry.value).collect();
    let space = ParamSpace::new(&names).map_err(|e| err(Some(params_entry.line), "params", e))?;

    let ops = match (chart, lambda) {
        (Some(_), Some(l)) => {
            return Err(err(
                Some(l.line),
                "lambda",
                "give either `chart` or `lambda`, not both",
            ))
        }
        (None, None) => return Err(err(None, "ops", "missing `chart` or `lambda`")),
        (Some(c), None) => {
            let mut cone = Vec::new();
            for t in split_list(c.value) {
                let index: usize = t.parse().map_err(|_| {
                    err(
                        Some(c.line),
                        "chart",
                        format!("`{t}` is not a vertex index"),
                    )
                })?;
                if index == 0 || index > vertex_count {
                    return Err(err(
                        Some(c.line),
                        "chart",
                        format!("vertex index {index} out of range 1..={vertex_count}"),
                    ));
                }
                cone.push(index - 1);
            }
            if cone.len() != n {
                return Err(err(
                    Some(c.line),
                    "chart",
                    format!("{} indices for dimension {n}", cone.len()),
                ));
            }
            if space.len() != n {
                return Err(err(
                    Some(params_entry.line),
                    "params",
                    format!("a chart needs {n} parameters, found {}", space.len()),
                ));
            }
            OnePsSpec::Chart {
                cone,
                params: space,
            }
        }
        (None, Some(l)) => {
            let coords = l
                .value
                .split(',')
                .map(|f| space.parse_form(f.trim()))
                .collect::<Result<Vec<AffineForm>, _>>()
                .map_err(|e| err(Some(l.line), "lambda", e))?;
            if coords.len() != n {
                return Err(err(
                    Some(l.line),
                    "lambda",
                    format!("{} coordinates for dimension {n}", coords.len()),
                ));
            }
            OnePsSpec::Explicit {
                params: space,
                coords,
            }
        }
    };

    let mut options = Options::default();
    if let Some(e) = seed {
        options.seed = parse_number(&e)?;
    }
    if let Some(e) = samples {
        options.samples = Some(parse_number(&e)?);
    }
    if let Some(e) = flip {
        options.flip_sign = parse_number(&e)?;
    }
    if let Some(e) = kmax {
        options.ehrhart_kmax = parse_number(&e)?;
    }
    Ok(JobSpec {
        polytope,
        ops,
        options,
    })
}

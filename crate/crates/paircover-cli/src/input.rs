//! File and stdin parsing: proposal labels and design files.
//!
//! A design file is either the text form — first line `v t lambda`, then one
//! block per line as comma-separated point labels — or the JSON envelope
//! `{"v":…,"t":…,"lambda":…,"blocks":[[…],…]}` that `bibd --format json`
//! emits, detected by a leading `{`.

use std::fmt;
use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};

use paircover::{Block, Design};

/// On-disk JSON schema for a design with its validation parameters.
#[derive(Serialize, Deserialize)]
pub struct DesignFile {
    pub v: usize,
    pub t: usize,
    pub lambda: usize,
    pub blocks: Vec<Vec<usize>>,
}

#[derive(Debug)]
pub enum CliError {
    Core(paircover::Error),
    Input(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(err) => write!(f, "{err}"),
            CliError::Input(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<paircover::Error> for CliError {
    fn from(err: paircover::Error) -> Self {
        CliError::Core(err)
    }
}

fn read_source(path: Option<&Path>) -> Result<String, CliError> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|err| CliError::Input(format!("cannot read {}: {err}", p.display()))),
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|err| CliError::Input(format!("cannot read stdin: {err}")))?;
            Ok(text)
        }
    }
}

/// Reads a design plus its (t, lambda) from a file or stdin.
pub fn read_design(path: Option<&Path>) -> Result<(Design, usize, usize), CliError> {
    let text = read_source(path)?;
    if text.trim_start().starts_with('{') {
        let parsed: DesignFile = serde_json::from_str(&text)
            .map_err(|err| CliError::Input(format!("invalid design JSON: {err}")))?;
        let blocks = parsed
            .blocks
            .into_iter()
            .map(|points| Block { points })
            .collect();
        return Ok((
            Design {
                v: parsed.v,
                blocks,
            },
            parsed.t,
            parsed.lambda,
        ));
    }

    let mut lines = text.lines().filter(|line| !line.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| CliError::Input("empty design file".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [v, t, lambda] = fields.as_slice() else {
        return Err(CliError::Input(format!(
            "design header must be \"v t lambda\", got {header:?}"
        )));
    };
    let parse = |s: &str, what: &str| {
        s.parse::<usize>()
            .map_err(|_| CliError::Input(format!("invalid {what}: {s:?}")))
    };
    let v = parse(v, "v")?;
    let t = parse(t, "t")?;
    let lambda = parse(lambda, "lambda")?;

    let mut blocks = Vec::new();
    for line in lines {
        let points = line
            .trim()
            .split(',')
            .map(|s| parse(s.trim(), "point label"))
            .collect::<Result<Vec<usize>, CliError>>()?;
        blocks.push(Block { points });
    }
    Ok((Design { v, blocks }, t, lambda))
}

/// Reads exactly `n` labels, one per line; line i names proposal i.
pub fn read_labels(path: &Path, n: usize) -> Result<Vec<String>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|err| CliError::Input(format!("cannot read {}: {err}", path.display())))?;
    let labels: Vec<String> = text
        .lines()
        .map(|line| line.trim_end_matches('\r').to_string())
        .collect();
    if labels.len() != n {
        return Err(CliError::Input(format!(
            "labels file {} has {} lines, need exactly {n}",
            path.display(),
            labels.len()
        )));
    }
    Ok(labels)
}

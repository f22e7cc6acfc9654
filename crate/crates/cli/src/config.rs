//! Run configuration: command-line flags, optionally overridden by a JSON file.

use std::path::Path;

use serde::Deserialize;

use sandwich_rm::analysis::distance::{DistanceOptions, Strategy};
use sandwich_rm::{Family, Kind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldConfig {
    pub p: u32,
    #[serde(default = "one")]
    pub l: u32,
    pub n: u32,
    pub modulus: Option<Vec<u32>>,
}

fn one() -> u32 {
    1
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeConfig {
    pub family: Option<Family>,
    pub r: Option<i64>,
    #[serde(rename = "I")]
    pub i: Option<Vec<u32>>,
    pub kind: Option<Kind>,
}

/// Contents of a `--config` file. Every key is optional.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub field: Option<FieldConfig>,
    pub code: Option<CodeConfig>,
    pub format: Option<Format>,
    pub budget: Option<u64>,
    pub threads: Option<usize>,
    pub strategy: Option<Strategy>,
    pub seed: Option<u64>,
    pub random_iters: Option<usize>,
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<RunConfig, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
    }
}

/// Field and code selection after merging flags with the config file.
#[derive(Debug, Clone)]
pub struct Resolved {
    pub p: u32,
    pub l: u32,
    pub n: u32,
    pub modulus: Option<Vec<u32>>,
    pub family: Family,
    pub r: Option<i64>,
    pub i: Vec<u32>,
    pub kind: Kind,
    pub format: Format,
    pub distance: DistanceOptions,
}

/// Splits a prime power q into (p, l).
pub fn split_q(q: u32) -> Result<(u32, u32), String> {
    sandwich_rm::field::prime_power(q).map_err(|e| e.to_string())
}

/// The `--I` argument.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ISet(pub Vec<u32>);

/// Parses "1,3", "{1,3}", "" or "{}".
pub fn parse_i(s: &str) -> Result<ISet, String> {
    let t = s
        .trim()
        .trim_start_matches('{')
        .trim_end_matches('}')
        .trim();
    if t.is_empty() {
        return Ok(ISet(Vec::new()));
    }
    t.split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|e| format!("bad I entry {x:?}: {e}"))
        })
        .collect::<Result<_, _>>()
        .map(ISet)
}

pub fn parse_kind(s: &str) -> Result<Kind, String> {
    match s {
        "extended" => Ok(Kind::Extended),
        "punctured" => Ok(Kind::Punctured),
        _ => Err(format!("kind must be extended or punctured, got {s:?}")),
    }
}

pub fn parse_family(s: &str) -> Result<Family, String> {
    match s {
        "sandwich" => Ok(Family::Sandwich),
        "rm" => Ok(Family::Rm),
        _ => Err(format!("family must be sandwich or rm, got {s:?}")),
    }
}

pub fn parse_strategy(s: &str) -> Result<Strategy, String> {
    match s {
        "auto" => Ok(Strategy::Auto),
        "exhaustive" => Ok(Strategy::Exhaustive),
        "support" => Ok(Strategy::Support),
        "bz" => Ok(Strategy::Bz),
        _ => Err(format!("unknown strategy {s:?}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_syntax() {
        assert_eq!(parse_i("1,3").unwrap().0, vec![1, 3]);
        assert_eq!(parse_i("{0, 2}").unwrap().0, vec![0, 2]);
        assert!(parse_i("").unwrap().0.is_empty());
        assert!(parse_i("a").is_err());
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let ok: RunConfig =
            serde_json::from_str(r#"{"code": {"r": 5, "I": [1]}, "budget": 10}"#).unwrap();
        assert_eq!(ok.code.unwrap().i, Some(vec![1]));
        assert!(serde_json::from_str::<RunConfig>(r#"{"budgit": 10}"#).is_err());
        assert!(serde_json::from_str::<RunConfig>(r#"{"code": {"rr": 1}}"#).is_err());
    }
}

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};

pub const DEFAULT_MU0: f64 = 0.511;

/// Plain `key=value` settings; `#` starts a comment.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Config {
    pub mu0_mev: Option<f64>,
    pub masses_path: Option<PathBuf>,
    pub matrix_cap: Option<u32>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Config> {
        let mut c = Config::default();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                bail!("config line {}: expected key=value", n + 1);
            };
            let (k, v) = (k.trim(), v.trim());
            match k {
                "mu0_mev" => c.mu0_mev = Some(v.parse().with_context(|| format!("config mu0_mev = {v}"))?),
                "masses_path" => c.masses_path = Some(PathBuf::from(v)),
                "matrix_cap" => c.matrix_cap = Some(v.parse().with_context(|| format!("config matrix_cap = {v}"))?),
                _ => bail!("config line {}: unknown key {k}", n + 1),
            }
        }
        Ok(c)
    }

    pub fn load(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Config::parse(&text)
    }
}

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Parser, Debug)]
#[command(name = "superfit", version, about = "Annihilators, super Fitting ideals and resolutions of generic Z/2-graded maps")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Minimal generators of the annihilator of coker Φ.
    Ann {
        #[command(flatten)]
        instance: Instance,
        #[arg(long)]
        json: bool,
    },
    /// Check one claim on one instance.
    Verify {
        claim: Claim,
        /// d e m n (not used by `cauchy`)
        #[arg(num_args = 4, value_names = ["D", "E", "M", "N"])]
        instance: Vec<usize>,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        #[command(flatten)]
        bounds: Bounds,
        #[arg(long)]
        json: bool,
    },
    /// Run a claim over a grid of instances, appending one JSON record per
    /// instance. Instances already present in the output are skipped.
    Sweep {
        claim: Claim,
        #[command(flatten)]
        grid: Grid,
        #[command(flatten)]
        bounds: Bounds,
        /// Defaults to `sweep-<claim>.jsonl` in $SUPERFIT_LOG_DIR (or the
        /// current directory).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct Instance {
    pub d: usize,
    pub e: usize,
    pub m: usize,
    pub n: usize,
    #[arg(long = "char", default_value_t = 0)]
    pub characteristic: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Claim {
    Thm1a,
    Thm1b,
    Cor2,
    Cauchy,
    Conj41,
    Lie,
}

impl Claim {
    pub fn name(self) -> &'static str {
        match self {
            Claim::Thm1a => "thm1a",
            Claim::Thm1b => "thm1b",
            Claim::Cor2 => "cor2",
            Claim::Cauchy => "cauchy",
            Claim::Conj41 => "conj41",
            Claim::Lie => "lie",
        }
    }

    /// Conjecture checks report without failing the exit code.
    pub fn is_conjecture(self) -> bool {
        self == Claim::Conj41
    }
}

#[derive(Args, Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    /// Homological degree bound for conj41 (default 4)
    #[arg(long)]
    pub imax: Option<usize>,
    /// Internal degree bound for conj41 (default |Λ(d,e)| + 4)
    #[arg(long)]
    pub jmax: Option<i32>,
    /// Degree bound for cauchy
    #[arg(long, default_value_t = 5)]
    pub tmax: u32,
    /// Upper bounds D E M N for cauchy
    #[arg(long, num_args = 4, value_names = ["D", "E", "M", "N"], default_values_t = [2usize, 2, 2, 2])]
    pub dims: Vec<usize>,
    /// Number of sampled lists for thm1b
    #[arg(long, default_value_t = 4)]
    pub samples: usize,
    /// Seed for thm1b sampling
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
}

/// Ranges are `a..b` (inclusive), comma lists, or single values.
#[derive(Args, Debug, Clone)]
pub struct Grid {
    #[arg(long = "d", default_value = "0")]
    pub d: String,
    #[arg(long = "e", default_value = "0")]
    pub e: String,
    #[arg(long = "m", default_value = "0")]
    pub m: String,
    #[arg(long = "n", default_value = "0")]
    pub n: String,
    #[arg(long = "char", default_value = "0")]
    pub characteristic: String,
}

pub fn parse_values(text: &str) -> Result<Vec<u64>, String> {
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some((a, b)) = part.split_once("..") {
            let a: u64 = a.trim().parse().map_err(|_| format!("bad range start in `{part}`"))?;
            let b: u64 = b.trim().trim_start_matches('=').parse().map_err(|_| format!("bad range end in `{part}`"))?;
            out.extend(a..=b);
        } else {
            out.push(part.parse().map_err(|_| format!("bad value `{part}`"))?);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_lists() {
        assert_eq!(parse_values("0..2").unwrap(), vec![0, 1, 2]);
        assert_eq!(parse_values("3,0,3").unwrap(), vec![0, 3]);
        assert_eq!(parse_values("2..1").unwrap(), Vec::<u64>::new());
        assert_eq!(parse_values("").unwrap(), Vec::<u64>::new());
        assert!(parse_values("a").is_err());
    }
}

//! Run settings shared by the command-line tool and the examples.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::census::ScanConfig;
use crate::cyclotomic::{DEFAULT_LEVEL_CAP, DEFAULT_PREFILTER_TOL};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::recursion::{ExploreBudget, MarginalCriteria};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    /// Worker threads; 0 uses every available core.
    pub threads: usize,
    pub level_cap: u64,
    pub prefilter_tol: f64,
    pub out_dir: PathBuf,
    pub marginal_small: Rational,
    pub marginal_large: Rational,
    pub max_depth: usize,
    pub max_nodes: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        let m = MarginalCriteria::default();
        let b = ExploreBudget::default();
        RunConfig {
            threads: 0,
            level_cap: DEFAULT_LEVEL_CAP,
            prefilter_tol: DEFAULT_PREFILTER_TOL,
            out_dir: PathBuf::from("census-out"),
            marginal_small: m.small,
            marginal_large: m.large,
            max_depth: b.max_depth,
            max_nodes: b.max_nodes,
        }
    }
}

impl RunConfig {
    /// Read a JSON file; missing fields take their defaults.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let cfg: RunConfig = serde_json::from_str(&text)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.level_cap == 0 || self.max_depth == 0 || self.max_nodes == 0 {
            return Err(Error::Parse(
                "level_cap, max_depth and max_nodes must be positive".into(),
            ));
        }
        if self.prefilter_tol.is_nan() || self.prefilter_tol <= 0.0 {
            return Err(Error::Parse("prefilter_tol must be positive".into()));
        }
        self.marginal()?;
        Ok(())
    }

    pub fn scan(&self) -> ScanConfig {
        ScanConfig {
            threads: self.threads,
            level_cap: self.level_cap,
            prefilter_tol: self.prefilter_tol,
        }
    }

    pub fn marginal(&self) -> Result<MarginalCriteria> {
        MarginalCriteria::new(self.marginal_small.clone(), self.marginal_large.clone())
    }

    pub fn budget(&self) -> ExploreBudget {
        ExploreBudget {
            max_depth: self.max_depth,
            max_nodes: self.max_nodes,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_json_uses_defaults() {
        let c: RunConfig =
            serde_json::from_str(r#"{"threads": 4, "marginal_small": "1/2"}"#).unwrap();
        assert_eq!(c.threads, 4);
        assert_eq!(c.marginal_small, Rational::new(1, 2));
        assert_eq!(c.level_cap, DEFAULT_LEVEL_CAP);
        assert!(c.validate().is_ok());
        assert!(serde_json::from_str::<RunConfig>(r#"{"thread": 4}"#).is_err());
        let bad = RunConfig {
            marginal_small: 140.into(),
            ..RunConfig::default()
        };
        assert!(bad.validate().is_err());
    }
}

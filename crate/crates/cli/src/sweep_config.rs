//! Sweep configuration files.
//!
//! ```json
//! {
//!   "families": [ {"label": "...", "atoms": [...], "density": [...]},
//!                 "relative/path/to/measure.json" ],
//!   "params": [ {"p": 1.0, "q": 2.0, "alpha": 2.0},
//!               {"p": 1.0, "q": "inf", "alpha": 2.0} ],
//!   "mode": "bounded",
//!   "depth": 40
//! }
//! ```
//!
//! Family entries are either inline measure specs or paths resolved
//! relative to the config file. `q` accepts the string `"inf"` for the
//! Bloch target.

use std::path::Path;

use serde::Deserialize;

use hilbertmu::analyzer::{SweepMode, SweepParam};
use hilbertmu::measures::MeasureSpec;

use crate::Failure;

#[derive(Deserialize)]
#[serde(untagged)]
enum FamilyEntry {
    Inline(MeasureSpec),
    Path(String),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum QValue {
    Number(f64),
    Text(String),
}

#[derive(Deserialize)]
struct RawParam {
    p: f64,
    q: QValue,
    alpha: f64,
}

#[derive(Deserialize)]
struct RawConfig {
    families: Vec<FamilyEntry>,
    params: Vec<RawParam>,
    mode: String,
    #[serde(default = "default_depth")]
    depth: usize,
}

fn default_depth() -> usize {
    40
}

pub struct SweepConfigFile {
    pub families: Vec<MeasureSpec>,
    pub params: Vec<SweepParam>,
    pub mode: SweepMode,
    pub depth: usize,
}

impl SweepConfigFile {
    pub fn load(path: &Path) -> Result<Self, Failure> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::parse(format!("cannot read {}: {e}", path.display())))?;
        let raw: RawConfig = serde_json::from_str(&text)
            .map_err(|e| Failure::parse(format!("sweep config {}: {e}", path.display())))?;
        let base = path.parent().unwrap_or_else(|| Path::new("."));

        let mut families = Vec::with_capacity(raw.families.len());
        for entry in raw.families {
            match entry {
                FamilyEntry::Inline(spec) => families.push(spec),
                FamilyEntry::Path(rel) => {
                    let full = base.join(&rel);
                    let text = std::fs::read_to_string(&full).map_err(|e| {
                        Failure::parse(format!("cannot read family {}: {e}", full.display()))
                    })?;
                    families.push(MeasureSpec::from_json(&text)?);
                }
            }
        }

        let mut params = Vec::with_capacity(raw.params.len());
        for rp in raw.params {
            let q = match rp.q {
                QValue::Number(v) => v,
                QValue::Text(t) if t.eq_ignore_ascii_case("inf") => f64::INFINITY,
                QValue::Text(t) => {
                    return Err(Failure::parse(format!(
                        "param q must be a number or \"inf\", got \"{t}\""
                    )))
                }
            };
            params.push(SweepParam {
                p: rp.p,
                q,
                alpha: rp.alpha,
            });
        }

        let mode: SweepMode = raw.mode.parse()?;
        if !(8..=52).contains(&raw.depth) {
            return Err(Failure::parse(format!(
                "depth must lie in 8..=52, got {}",
                raw.depth
            )));
        }
        Ok(SweepConfigFile {
            families,
            params,
            mode,
            depth: raw.depth,
        })
    }
}

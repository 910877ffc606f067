use thiserror::Error;

#[derive(Debug, Error)]
pub enum LieError {
    #[error("unrecognized algebra `{0}` (expected e.g. su3, so5, sp3, so8 or A2, B2, C3, D4)")]
    BadLabel(String),
    #[error("{family} rank {rank} is not supported (minimum {min})")]
    UnsupportedRank { family: char, rank: usize, min: usize },
    #[error("{op} is not defined for the {family} family")]
    UnsupportedFamily { op: &'static str, family: char },
    #[error("order {order} is outside the supported range {range} for {op}")]
    OrderOutOfRange { op: &'static str, order: usize, range: &'static str },
    #[error("{what} needs {needed} entries, over the budget of {budget} (raise LIEINV_BUDGET)")]
    Budget { what: String, needed: u64, budget: u64 },
    #[error("convention violation: {0}")]
    Convention(String),
    #[error("input tensor is not ad-invariant (residual {0:.3e})")]
    NotInvariant(f64),
    #[error("construction check failed: {0}")]
    Construction(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("rank-deficient basis, null combination {0:?}")]
    DegenerateBasis(Vec<f64>),
    #[error("cannot normalize a zero tensor")]
    ZeroNorm,
    #[error("incomplete tower: orders sum to {sum} but the algebra has dimension {dim}")]
    IncompleteTower { sum: usize, dim: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

pub type Result<T> = std::result::Result<T, LieError>;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Entry budget for dense enumerations, from `LIEINV_BUDGET` when set.
pub fn budget() -> u64 {
    std::env::var("LIEINV_BUDGET")
        .ok()
        .and_then(|s| s.trim().replace('_', "").parse::<f64>().ok())
        .filter(|b| *b >= 1.0)
        .map(|b| b as u64)
        .unwrap_or(DEFAULT_BUDGET)
}

pub fn check_budget(what: impl FnOnce() -> String, needed: u64) -> Result<()> {
    let budget = budget();
    if needed > budget {
        return Err(LieError::Budget { what: what(), needed, budget });
    }
    Ok(())
}

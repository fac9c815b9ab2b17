//! Scenario parameters and their validation.

use koszul_core::{AlgebraError, PrimeField, DEFAULT_PRIME};
use thiserror::Error;

pub const DEFAULT_SEED: u64 = 20240601;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("{path}:{line}: {msg}")]
    Config { path: String, line: usize, msg: String },
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl VerifyError {
    /// Input problems map to exit code 2, everything else to 1.
    pub fn is_input(&self) -> bool {
        matches!(
            self,
            VerifyError::Input(_)
                | VerifyError::Config { .. }
                | VerifyError::Algebra(AlgebraError::Input(_))
                | VerifyError::Algebra(AlgebraError::Parse { .. })
                | VerifyError::Algebra(AlgebraError::InvalidField(_))
        )
    }
}

pub type Result<T, E = VerifyError> = std::result::Result<T, E>;

/// Raw scenario parameters; `None` means "use the scenario default".
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pub d: Option<i64>,
    pub c: Option<i64>,
    pub e: Option<i64>,
    pub k: Option<i64>,
    pub n: Option<i64>,
    pub max_index: Option<i64>,
    pub p: Option<u32>,
    pub seed: Option<u64>,
    pub window: Option<Vec<i64>>,
    pub grid: Option<i64>,
}

impl Params {
    pub fn field(&self) -> Result<PrimeField> {
        Ok(PrimeField::new(self.p.unwrap_or(DEFAULT_PRIME))?)
    }

    pub fn seed(&self) -> u64 {
        self.seed.unwrap_or(DEFAULT_SEED)
    }

    pub fn positive(&self, name: &str, value: Option<i64>, default: i64) -> Result<i64> {
        let v = value.unwrap_or(default);
        if v < 1 {
            return Err(VerifyError::Input(format!("{name} must be a positive integer")));
        }
        Ok(v)
    }

    pub fn nonnegative(&self, name: &str, value: Option<i64>, default: i64) -> Result<i64> {
        let v = value.unwrap_or(default);
        if v < 0 {
            return Err(VerifyError::Input(format!("{name} must be a nonnegative integer")));
        }
        Ok(v)
    }

    pub fn d_or(&self, default: i64) -> Result<i64> {
        self.positive("d", self.d, default)
    }

    pub fn c_or(&self, default: i64) -> Result<i64> {
        self.positive("c", self.c, default)
    }

    pub fn e_or(&self, default: i64) -> Result<i64> {
        self.positive("e", self.e, default)
    }

    pub fn k_or(&self, default: i64) -> Result<i64> {
        self.positive("k", self.k, default)
    }

    pub fn n_or(&self, default: i64) -> Result<i64> {
        self.positive("n", self.n, default)
    }

    pub fn max_index_or(&self, default: i64) -> Result<i64> {
        self.positive("N", self.max_index, default)
    }

    pub fn grid_or(&self, default: i64) -> Result<i64> {
        self.nonnegative("grid", self.grid, default)
    }

    /// A window with `rank` components; a single value is repeated.
    pub fn window_or(&self, default: &[i64]) -> Result<Vec<i64>> {
        let w = self.window.clone().unwrap_or_else(|| default.to_vec());
        let w = if w.len() == 1 && default.len() > 1 { vec![w[0]; default.len()] } else { w };
        if w.len() != default.len() {
            return Err(VerifyError::Input(format!("window needs {} components", default.len())));
        }
        if w.iter().any(|&x| x < 0) {
            return Err(VerifyError::Input("window must be nonnegative".into()));
        }
        Ok(w)
    }
}

/// `"8,4"` or `"5"`.
pub fn parse_window(text: &str) -> std::result::Result<Vec<i64>, String> {
    text.split(',').map(|s| s.trim().parse::<i64>().map_err(|_| format!("bad window component {s:?}"))).collect()
}

//! TOML problem configuration.
//!
//! ```toml
//! components = 2
//! w0 = 0.0                      # optional, default 0
//!
//! [vapor]
//! a = [200.0, 300.0]
//! d = [0.0, 0.0]                # optional, default zeros
//!
//! [liquid]
//! a = [500.0, 400.0]
//! d = [-1.495e8, -6.35e7]
//!
//! [left]
//! chi = -0.95
//! rho = [2.5, 7.5]
//! v = 0.0
//!
//! [right]
//! chi = 0.5
//! rho = [600.0, 800.0]
//! v = 0.0
//!
//! [solver]                      # optional
//! mode = "rh-consistent"        # or "paper-literal"
//! tol_rel = 1e-12
//! max_iter = 200
//!
//! [sample]                      # optional
//! xi_min = -500.0
//! xi_max = 600.0
//! count = 101
//! ```

use std::fmt;

use serde::Deserialize;

use crate::eos::{EosParameters, PhaseLaw};
use crate::star_solver::SolverOptions;
use crate::state::RiemannState;
use crate::wave_curves::ShockMode;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    components: Option<i64>,
    w0: Option<f64>,
    vapor: Option<RawPhase>,
    liquid: Option<RawPhase>,
    left: Option<RawState>,
    right: Option<RawState>,
    solver: Option<RawSolver>,
    sample: Option<RawSample>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPhase {
    a: Option<Vec<f64>>,
    d: Option<Vec<f64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawState {
    chi: Option<f64>,
    rho: Option<Vec<f64>>,
    v: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSolver {
    mode: Option<String>,
    tol_rel: Option<f64>,
    max_iter: Option<i64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSample {
    xi_min: Option<f64>,
    xi_max: Option<f64>,
    count: Option<i64>,
}

/// Uniform sampling grid for the exported profile.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleGrid {
    pub xi_min: f64,
    pub xi_max: f64,
    pub count: usize,
}

/// A validated problem definition.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveConfig {
    pub params: EosParameters,
    pub left: RiemannState,
    pub right: RiemannState,
    pub solver: SolverOptions,
    pub sample: Option<SampleGrid>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub key: String,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.key, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConfigError {
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    Invalid(Vec<Violation>),
}

impl ConfigError {
    /// Violations for validation errors, empty for parse errors.
    pub fn violations(&self) -> &[Violation] {
        match self {
            ConfigError::Invalid(v) => v,
            ConfigError::Parse { .. } => &[],
        }
    }
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::Parse {
                line,
                column,
                message,
            } => write!(f, "parse error at line {line}, column {column}: {message}"),
            ConfigError::Invalid(violations) => {
                write!(f, "invalid configuration ({} problems)", violations.len())?;
                for v in violations {
                    write!(f, "\n  {v}")?;
                }
                Ok(())
            }
        }
    }
}

impl std::error::Error for ConfigError {}

#[derive(Default)]
struct Validator {
    violations: Vec<Violation>,
}

impl Validator {
    fn push(&mut self, key: &str, message: impl Into<String>) {
        self.violations.push(Violation {
            key: key.to_string(),
            message: message.into(),
        });
    }

    fn required<T: Clone>(&mut self, key: &str, value: &Option<T>) -> Option<T> {
        if value.is_none() {
            self.push(key, "missing required key");
        }
        value.clone()
    }

    fn finite(&mut self, key: &str, value: Option<f64>) -> Option<f64> {
        match value {
            Some(x) if !x.is_finite() => {
                self.push(key, format!("must be finite, got {x}"));
                None
            }
            other => other,
        }
    }

    /// Checks length against `n` (when known) and every entry with `check`.
    fn array(
        &mut self,
        key: &str,
        values: Option<Vec<f64>>,
        n: Option<usize>,
        check: impl Fn(f64) -> Option<&'static str>,
    ) -> Option<Vec<f64>> {
        let values = values?;
        let mut ok = true;
        if let Some(n) = n {
            if values.len() != n {
                self.push(key, format!("has {} entries, expected {n}", values.len()));
                ok = false;
            }
        }
        for (i, &x) in values.iter().enumerate() {
            if let Some(problem) = check(x) {
                self.push(&format!("{key}[{i}]"), format!("{problem}, got {x}"));
                ok = false;
            }
        }
        ok.then_some(values)
    }
}

fn finite_check(x: f64) -> Option<&'static str> {
    (!x.is_finite()).then_some("must be finite")
}

fn positive_check(x: f64) -> Option<&'static str> {
    (!(x.is_finite() && x > 0.0)).then_some("must be positive")
}

fn line_column(text: &str, offset: usize) -> (usize, usize) {
    let offset = offset.min(text.len());
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let column = offset - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    (line, column)
}

/// Parses and validates a configuration, reporting every violation found.
pub fn parse_config(text: &str) -> Result<SolveConfig, ConfigError> {
    let raw: RawConfig = toml::from_str(text).map_err(|e| {
        let (line, column) = e
            .span()
            .map_or((0, 0), |span| line_column(text, span.start));
        ConfigError::Parse {
            line,
            column,
            message: e.message().trim().to_string(),
        }
    })?;

    let mut val = Validator::default();

    let n = match val.required("components", &raw.components) {
        Some(n) if n >= 1 => Some(n as usize),
        Some(n) => {
            val.push("components", format!("must be at least 1, got {n}"));
            None
        }
        None => None,
    };

    let w0 = match val.finite("w0", raw.w0) {
        Some(w) if w < 0.0 => {
            val.push("w0", format!("must be non-negative, got {w}"));
            None
        }
        Some(w) => Some(w),
        None if raw.w0.is_some() => None,
        None => Some(0.0),
    };

    let mut phase = |name: &str, raw: &Option<RawPhase>, d_default: bool| {
        let Some(p) = raw else {
            val.push(name, "missing required table");
            return None;
        };
        let a_key = format!("{name}.a");
        let d_key = format!("{name}.d");
        let a = val.required(&a_key, &p.a);
        let a = val.array(&a_key, a, n, positive_check);
        let d = match (&p.d, d_default) {
            (None, true) => n.map(|n| vec![0.0; n]),
            (d, _) => {
                let d = val.required(&d_key, d);
                val.array(&d_key, d, n, finite_check)
            }
        };
        Some((a?, d?))
    };
    let vapor = phase("vapor", &raw.vapor, true);
    let liquid = phase("liquid", &raw.liquid, false);

    let mut state = |name: &str, raw: &Option<RawState>| {
        let Some(s) = raw else {
            val.push(name, "missing required table");
            return None;
        };
        let chi_key = format!("{name}.chi");
        let rho_key = format!("{name}.rho");
        let v_key = format!("{name}.v");
        let chi = val.required(&chi_key, &s.chi);
        let chi = val.finite(&chi_key, chi);
        let rho = val.required(&rho_key, &s.rho);
        let rho = val.array(&rho_key, rho, n, positive_check);
        let v = val.required(&v_key, &s.v);
        let v = val.finite(&v_key, v);
        Some((chi?, rho?, v?))
    };
    let left = state("left", &raw.left);
    let right = state("right", &raw.right);

    let mut solver = SolverOptions::default();
    if let Some(s) = &raw.solver {
        if let Some(mode) = &s.mode {
            match mode.parse::<ShockMode>() {
                Ok(m) => solver.mode = m,
                Err(e) => val.push("solver.mode", e),
            }
        }
        if let Some(tol) = s.tol_rel {
            if tol.is_finite() && tol > 0.0 && tol < 1.0 {
                solver.tol_rel = tol;
            } else {
                val.push("solver.tol_rel", format!("must lie in (0, 1), got {tol}"));
            }
        }
        if let Some(it) = s.max_iter {
            if it >= 1 {
                solver.max_iter = it as usize;
            } else {
                val.push("solver.max_iter", format!("must be at least 1, got {it}"));
            }
        }
    }

    let sample = raw.sample.as_ref().and_then(|s| {
        let xi_min = val.required("sample.xi_min", &s.xi_min);
        let xi_min = val.finite("sample.xi_min", xi_min);
        let xi_max = val.required("sample.xi_max", &s.xi_max);
        let xi_max = val.finite("sample.xi_max", xi_max);
        let count = match val.required("sample.count", &s.count) {
            Some(c) if c >= 2 => Some(c as usize),
            Some(c) => {
                val.push("sample.count", format!("must be at least 2, got {c}"));
                None
            }
            None => None,
        };
        let (xi_min, xi_max) = (xi_min?, xi_max?);
        if xi_min >= xi_max {
            val.push(
                "sample.xi_max",
                format!("must exceed sample.xi_min ({xi_max} <= {xi_min})"),
            );
            return None;
        }
        let count = count?;
        Some(SampleGrid {
            xi_min,
            xi_max,
            count,
        })
    });

    if !val.violations.is_empty() {
        return Err(ConfigError::Invalid(val.violations));
    }
    let (Some(w0), Some((va, vd)), Some((la, ld)), Some(left), Some(right)) =
        (w0, vapor, liquid, left, right)
    else {
        unreachable!("every missing piece records a violation");
    };

    let build = || -> crate::Result<SolveConfig> {
        Ok(SolveConfig {
            params: EosParameters::new(PhaseLaw::new(va, vd)?, PhaseLaw::new(la, ld)?, w0)?,
            left: RiemannState::new(left.0, left.1, left.2)?,
            right: RiemannState::new(right.0, right.1, right.2)?,
            solver,
            sample,
        })
    };
    build().map_err(|e| {
        ConfigError::Invalid(vec![Violation {
            key: "(model)".into(),
            message: e.to_string(),
        }])
    })
}

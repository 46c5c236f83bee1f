use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Invalid input outside the physical domain (non-positive mass, r <= 0, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Gamma function pole at a non-positive integer.
    #[error("gamma pole at z = {re}{im:+}i")]
    GammaPole { re: f64, im: f64 },

    /// Series did not reach the requested tolerance within the term cap.
    #[error("series did not converge within {terms} terms")]
    Convergence { terms: usize },

    /// z -> 1-z connection formula is degenerate: p3 - p1 - p2 is an integer.
    #[error("degenerate connection formula: p3 - p1 - p2 = {0} is an integer")]
    DegenerateConnection(f64),

    /// Asymptotic wave number squared is non-positive; the channel is closed.
    #[error("evanescent channel: k^2 = {k2} <= 0")]
    EvanescentChannel { k2: f64 },

    /// The lambda radicand 1/4 + l(l+1) - sigma a^2 b^2 is negative.
    #[error("supercritical coupling: lambda radicand = {radicand} < 0")]
    SupercriticalStrength { radicand: f64 },

    /// Sinusoidal fit of the tail failed; the solution is not asymptotic yet.
    #[error("asymptotic regime not reached: fit residual {residual:.2e} of amplitude")]
    AsymptoticRegimeNotReached { residual: f64 },

    /// Invalid integration / grid configuration.
    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Complex special functions needed by the closed-form solution: the analytic
//! log-gamma (continuous imaginary part, not reduced mod 2 pi) and the Gauss
//! hypergeometric function on z in [0, 1) with the z -> 1-z connection formula.

mod gamma;
mod hyp2f1;

pub use gamma::{arg_gamma, log_gamma};
pub use hyp2f1::{hyp2f1, hyp2f1_connection, hyp2f1_series, Hyp2F1Params};

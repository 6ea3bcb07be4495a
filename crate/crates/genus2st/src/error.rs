use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("curve is singular: discriminant vanishes over Q")]
    SingularCurve,

    #[error("bad reduction at p = {p}")]
    BadReduction { p: u64 },

    #[error("Weil bound violated at p = {p}: c1 = {c1}, c2 = {c2}")]
    WeilViolation { p: u64, c1: i64, c2: i64 },

    #[error("no odd-degree model over F_{p}: f has no rational Weierstrass point")]
    NoOddModel { p: u64 },

    #[error("group order ambiguous at p = {p} after {trials} trial divisors")]
    Ambiguous { p: u64, trials: u32 },

    #[error("non-integral intermediate value: {0}")]
    NonIntegral(String),

    #[error("unknown Sato-Tate group label: {0}")]
    UnknownGroup(String),
}

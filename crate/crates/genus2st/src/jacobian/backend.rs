//! The accelerated `(c1, c2)` backend: exact `c1` from the O(p) affine
//! count, then `c2` by the cheapest sound route available at the prime.
//!
//! Route selection per prime:
//!   1. below the crossover, naive `F_{p^2}` counting;
//!   2. with a rational Weierstrass point, BSGS over the Weil window on the
//!      odd model and its twist;
//!   3. otherwise, the Hasse-Witt congruence mod `p` plus the 2-torsion
//!      parity cut the window to at most three candidates, which are
//!      settled by order tests against random divisors over `F_{p^m}`
//!      (`m` the smallest factor degree of `f` mod `p`, one of 2, 3, 6);
//!   4. naive counting as the last resort if an ambiguity survives.

use super::cantor::Jacobian;
use super::cartier::cartier_manin_congruence;
use super::field::{find_nonsquare, ExtField, Field, PrimeField};
use super::order::{c2_by_bsgs, jac_order_ext, odd_model, twist_odd_model, to_biguint, OrderWindow};
use super::pattern::{factor_degrees, jacobian_order_is_odd, min_degree_factor};
use crate::counting::{trace_datum_from_counts, Curve, ReducedCurve, TraceDatum};
use crate::ffield::{find_nonresidue, QCharTable};
use crate::{Error, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Tuning knobs for the accelerated backend.
#[derive(Clone, Copy, Debug)]
pub struct JacConfig {
    /// below this prime the naive `F_{p^2}` count is used directly
    pub naive_crossover: u64,
    /// random-divisor budget for BSGS ambiguity resolution
    pub max_divisor_trials: u32,
    /// random-divisor budget for the extension-field candidate tests
    pub extension_trials: u32,
}

impl Default for JacConfig {
    fn default() -> Self {
        JacConfig { naive_crossover: 4096, max_divisor_trials: 8, extension_trials: 8 }
    }
}

/// Which backend computes a `TraceDatum`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    Naive,
    Jacobian,
}

impl std::str::FromStr for Backend {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "naive" => Ok(Backend::Naive),
            "jac" | "jacobian" => Ok(Backend::Jacobian),
            other => Err(Error::Parse(format!("unknown backend {other:?}"))),
        }
    }
}

/// Exact `(c1, c2)` at a good odd prime via the selected backend.
pub fn trace_datum(curve: &Curve, p: u64, backend: Backend, cfg: &JacConfig) -> Result<TraceDatum> {
    let red = curve.reduce(p);
    if !red.good() {
        return Err(Error::BadReduction { p });
    }
    match backend {
        Backend::Naive => crate::counting::trace_datum_from_reduced(&red),
        Backend::Jacobian => trace_datum_reduced_accel(&red, cfg),
    }
}

/// Accelerated path on an already-reduced good model.
pub fn trace_datum_reduced_accel(red: &ReducedCurve, cfg: &JacConfig) -> Result<TraceDatum> {
    let p = red.p;
    if p <= cfg.naive_crossover {
        return crate::counting::trace_datum_from_reduced(red);
    }
    let chi = QCharTable::new(p);
    let (sum, root) = red.affine_char_sum(&chi);
    let infinity = if red.degree == 5 { 1i64 } else { 1 + chi.chi(red.coeffs[6]) as i64 };
    let c1 = sum + infinity - 1;
    let n1 = p as i64 + 1 + c1;

    // deterministic per-prime randomness keeps runs reproducible
    let mut rng = ChaCha8Rng::seed_from_u64(p ^ 0x9e3779b97f4a7c15);

    let f: Vec<u64> = red.coeffs[..=red.degree].to_vec();
    if red.degree == 5 || root.is_some() {
        let fld = PrimeField { p };
        let quintic = odd_model(&fld, &f, root)?;
        let n = find_nonresidue(p);
        let ftw = twist_odd_model(&fld, &quintic, n);
        match c2_by_bsgs(&fld, &quintic, &ftw, p, c1, &mut rng, cfg.max_divisor_trials) {
            Ok(c2) => return finish(p, c1, c2),
            Err(Error::Ambiguous { .. }) => {} // fall through to the congruence route
            Err(e) => return Err(e),
        }
    }
    match c2_congruence_route(red, &f, c1, root, cfg, &mut rng) {
        Ok(c2) => finish(p, c1, c2),
        Err(Error::Ambiguous { .. }) | Err(Error::NoOddModel { .. }) => {
            // last resort: exact but O(p^2)
            let n2 = red.count_points(2) as i64;
            trace_datum_from_counts(p, n1, n2)
        }
        Err(e) => Err(e),
    }
}

fn finish(p: u64, c1: i64, c2: i64) -> Result<TraceDatum> {
    let td = TraceDatum { p, weight: 1, c1, c2 };
    if !td.weil_ok() {
        return Err(Error::WeilViolation { p, c1, c2 });
    }
    Ok(td)
}

/// `c2` by the Hasse-Witt congruence, the 2-torsion parity, and (if more
/// than one candidate survives the window) order tests on the Jacobian
/// over the smallest field carrying a Weierstrass point.
fn c2_congruence_route(
    red: &ReducedCurve,
    f: &[u64],
    c1: i64,
    root: Option<u64>,
    cfg: &JacConfig,
    rng: &mut ChaCha8Rng,
) -> Result<i64> {
    let p = red.p;
    let win = OrderWindow::new(p, c1);
    let (c1m, c2m) = cartier_manin_congruence(f, p);
    debug_assert_eq!(c1.rem_euclid(p as i64) as u64, c1m, "Hasse-Witt trace disagrees at {p}");
    let degrees = factor_degrees(f, p);
    let order_odd = jacobian_order_is_odd(&degrees, red.degree);
    // #J = base + c2; parity of #J fixes c2 mod 2
    let want_parity = ((if order_odd { 1i128 } else { 0 }) - win.base).rem_euclid(2);

    // candidates: c2 = c2m (mod p), c2 = parity (mod 2), c2 in window
    let mut cands: Vec<i64> = Vec::new();
    let mut k = win.lo + (c2m as i128 - win.lo).rem_euclid(p as i128);
    while k <= win.hi {
        if k.rem_euclid(2) == want_parity {
            cands.push(k as i64);
        }
        k += p as i128;
    }
    match cands.len() {
        0 => return Err(Error::Ambiguous { p, trials: 0 }),
        1 => return Ok(cands[0]),
        _ => {}
    }

    // order tests: base field if an odd model exists there, else the
    // extension generated by a smallest-degree factor (degree 2, 3 or 6)
    if red.degree == 5 || root.is_some() {
        let fld = PrimeField { p };
        let quintic = odd_model(&fld, &f.to_vec(), root)?;
        let n = find_nonresidue(p);
        let ftw = twist_odd_model(&fld, &quintic, n);
        candidate_filter(&fld, quintic, ftw, p, c1, 1, cands, cfg.extension_trials, rng)
    } else {
        let m = degrees[0] as u32;
        debug_assert!(matches!(m, 2 | 3 | 6), "rootless sextic has min factor degree 2, 3 or 6");
        let modulus = min_degree_factor(f, p, rng);
        let ext = ExtField::new(p, modulus);
        let fe: Vec<_> = f.iter().map(|&c| ext.from_base(c)).collect();
        let root = ext.gen(); // the class of x is a root of its minimal factor
        let quintic = odd_model(&ext, &fe, Some(root))?;
        let n = find_nonsquare(&ext, rng);
        let ftw = twist_odd_model(&ext, &quintic, n);
        candidate_filter(&ext, quintic, ftw, p, c1, m, cands, cfg.extension_trials, rng)
    }
}

/// Keep the candidates whose predicted orders kill random divisors on the
/// curve and its twist, until a single one survives.
#[allow(clippy::too_many_arguments)]
fn candidate_filter<F: Field>(
    field: &F,
    quintic: Vec<F::E>,
    twisted: Vec<F::E>,
    p: u64,
    c1: i64,
    m: u32,
    mut cands: Vec<i64>,
    trials: u32,
    rng: &mut ChaCha8Rng,
) -> Result<i64> {
    let jac = Jacobian::new(field, quintic);
    let jac_tw = Jacobian::new(field, twisted);
    for trial in 0..trials {
        let on_twist = trial % 2 == 1;
        let j = if on_twist { &jac_tw } else { &jac };
        let d = j.random_divisor(rng);
        cands.retain(|&c2| {
            let order = jac_order_ext(p, c1, c2, m, on_twist);
            match to_biguint(&order) {
                Some(o) => j.is_identity(&j.scalar_mul(&d, &o)),
                None => false, // negative candidate order is impossible
            }
        });
        match cands.len() {
            1 => return Ok(cands[0]),
            0 => return Err(Error::Ambiguous { p, trials: trial + 1 }),
            _ => {}
        }
    }
    Err(Error::Ambiguous { p, trials })
}

/// Public op: the unique `c2` consistent with exact `c1`, by BSGS over the
/// Weil window on an odd-degree model. Declines with `NoOddModel` when `f`
/// has no rational Weierstrass point mod `p`, and `Ambiguous` if the
/// window is not resolved within the divisor budget.
pub fn jacobian_order_from_c1(curve: &Curve, p: u64, c1: i64, cfg: &JacConfig) -> Result<i64> {
    let red = curve.reduce(p);
    if !red.good() {
        return Err(Error::BadReduction { p });
    }
    let f: Vec<u64> = red.coeffs[..=red.degree].to_vec();
    let root = if red.degree == 6 {
        let chi = QCharTable::new(p);
        let (_, root) = red.affine_char_sum(&chi);
        match root {
            Some(r) => Some(r),
            None => return Err(Error::NoOddModel { p }),
        }
    } else {
        None
    };
    let fld = PrimeField { p };
    let quintic = odd_model(&fld, &f, root)?;
    let n = find_nonresidue(p);
    let ftw = twist_odd_model(&fld, &quintic, n);
    let mut rng = ChaCha8Rng::seed_from_u64(p ^ 0x517cc1b727220a95);
    c2_by_bsgs(&fld, &quintic, &ftw, p, c1, &mut rng, cfg.max_divisor_trials)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{good_primes, parse_curve, trace_datum_naive};

    #[test]
    fn jacobian_order_matches_naive_small() {
        // tiny prime: the window exceeds the group exponent, so the pure
        // BSGS op may decline with Ambiguous; if it resolves it must agree
        let cfg = JacConfig { naive_crossover: 0, ..Default::default() };
        let c = parse_curve("x^5+x").unwrap();
        let td = trace_datum_naive(&c, 3).unwrap();
        match jacobian_order_from_c1(&c, 3, td.c1, &cfg) {
            Ok(c2) => assert_eq!(c2, td.c2),
            Err(Error::Ambiguous { p: 3, .. }) => {}
            Err(e) => panic!("{e}"),
        }
        // the full backend always resolves via the congruence route
        let fast = trace_datum(&c, 3, Backend::Jacobian, &cfg).unwrap();
        assert_eq!((fast.c1, fast.c2), (td.c1, td.c2));
    }

    #[test]
    fn backend_equivalence_spread() {
        // full p <= 500 equivalence on more fixtures runs in the
        // acceptance suite; keep a fast spread here including rootless
        // sextic primes that exercise every fallback tier
        let cfg = JacConfig { naive_crossover: 0, ..Default::default() };
        for s in ["x^5-x+1", "x^6+1", "x^6+6x^5-20x^4+20x^3-20x^2-8x+8"] {
            let c = parse_curve(s).unwrap();
            for p in good_primes(&c, 140).into_iter().filter(|&p| p >= 7) {
                let naive = trace_datum_naive(&c, p).unwrap();
                let fast = trace_datum(&c, p, Backend::Jacobian, &cfg).unwrap();
                assert_eq!((fast.c1, fast.c2), (naive.c1, naive.c2), "{s} p={p}");
            }
        }
    }

    #[test]
    fn no_odd_model_is_reported() {
        // x^6 + 1 mod 7: no rational Weierstrass point (f has no root)
        let c = parse_curve("x^6+1").unwrap();
        let red = c.reduce(7);
        let chi = QCharTable::new(7);
        let (_, root) = red.affine_char_sum(&chi);
        assert!(root.is_none());
        let td = trace_datum_naive(&c, 7).unwrap();
        match jacobian_order_from_c1(&c, 7, td.c1, &JacConfig::default()) {
            Err(Error::NoOddModel { p: 7 }) => {}
            other => panic!("expected NoOddModel, got {other:?}"),
        }
    }

    #[test]
    fn identity_order_sanity() {
        use crate::jacobian::cantor::Jacobian;
        use crate::jacobian::field::PrimeField;
        use rand::SeedableRng;
        let c = parse_curve("x^5+3x").unwrap();
        let p = 1009u64;
        let td = trace_datum_naive(&c, p).unwrap();
        let order_i = (p as i128) * (p as i128) + 1 + td.c1 as i128 * (p as i128 + 1)
            + td.c2 as i128;
        assert!(order_i > 0);
        let order = order_i as u128;
        let fld = PrimeField { p };
        let red = c.reduce(p);
        let quintic = odd_model(&fld, &red.coeffs[..=5].to_vec(), None).unwrap();
        let jac = Jacobian::new(&fld, quintic);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
        for _ in 0..10 {
            let d = jac.random_divisor(&mut rng);
            assert!(jac.is_identity(&jac.scalar_mul_u128(&d, order)));
        }
    }
}

//! Prime streams, degree-1-prime weighting over a number field, and
//! weighted moment/histogram accumulation of normalized L-polynomial
//! coefficients for a curve.
//!
//! Only degree-1 primes are used: for unramified `p`, the weight is the
//! number of distinct roots of the defining polynomial mod `p`, and all
//! arithmetic stays over prime fields. Ramified and bad-reduction primes
//! are skipped and reported. The per-prime jobs run in parallel; the
//! cheap merge is sequential in ascending `p`, so results are
//! deterministic for any thread count.

use crate::counting::{parse_poly, poly_to_string, resultant_z, Curve, TraceDatum};
use crate::ffield::primes_up_to;
use crate::jacobian::{trace_datum, Backend, JacConfig};
use crate::parallel::par_map;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

/// A number field `k = Q[x]/(g)`, `g` monic and squarefree; `g = x` is `Q`.
#[derive(Clone, Debug)]
pub struct NumberFieldSpec {
    poly: Vec<i64>,
    disc: BigInt,
}

impl NumberFieldSpec {
    pub fn rationals() -> Self {
        NumberFieldSpec { poly: vec![0, 1], disc: BigInt::from(1) }
    }

    pub fn new(poly: Vec<i64>) -> Result<Self> {
        let d = poly.len().saturating_sub(1);
        if d == 0 || poly[d] != 1 {
            return Err(Error::Parse("field polynomial must be monic of degree >= 1".into()));
        }
        let f: Vec<BigInt> = poly.iter().map(|&c| BigInt::from(c)).collect();
        let fp: Vec<BigInt> = (1..=d).map(|i| BigInt::from(i as i64) * &f[i]).collect();
        let disc = if d == 1 { BigInt::from(1) } else { resultant_z(&f, &fp) };
        if disc.is_zero() {
            return Err(Error::Parse("field polynomial is not squarefree".into()));
        }
        Ok(NumberFieldSpec { poly, disc: disc.abs() })
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::new(parse_poly(s)?)
    }

    pub fn is_rational(&self) -> bool {
        self.poly.len() == 2 && self.poly == [0, 1]
    }

    pub fn poly_string(&self) -> String {
        poly_to_string(&self.poly)
    }

    pub fn is_ramified(&self, p: u64) -> bool {
        (&self.disc % BigInt::from(p)).is_zero()
    }

    /// Number of degree-1 primes above an unramified `p`: the number of
    /// distinct roots of `g` mod `p`.
    pub fn prime_weight(&self, p: u64) -> u32 {
        let g: Vec<u64> = self.poly.iter().map(|&c| crate::ffield::reduce_i64(c, p)).collect();
        let mut g = g;
        while g.last() == Some(&0) {
            g.pop();
        }
        if g.len() <= 1 {
            return 0;
        }
        // deg gcd(x^p - x, g)
        let xp = crate::jacobian::field::poly_powmod(&[0, 1], p as u128, &g, p);
        let mut xpx = xp;
        if xpx.len() < 2 {
            xpx.resize(2, 0);
        }
        xpx[1] = crate::ffield::submod(xpx[1], 1, p);
        let d = crate::counting::gcd_mod_p(xpx, g, p);
        d.len().saturating_sub(1) as u32
    }
}

/// Why primes were skipped during accumulation.
#[derive(Clone, Debug, Default, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SkipReport {
    pub ramified: Vec<u64>,
    pub bad_reduction: Vec<u64>,
    pub weight_zero: u64,
}

/// Weighted per-prime data plus derived moment statistics.
#[derive(Clone, Debug)]
pub struct MomentStats {
    pub curve: Curve,
    pub field_poly: String,
    pub bound: u64,
    pub nmax: u32,
    /// ascending in `p`, weights filled in
    pub data: Vec<TraceDatum>,
    pub skipped: SkipReport,
}

/// Histogram convention: 100 bins by default, `a1` over `[-4,4]`, `a2`
/// over `[-2,6]`; exact atom events are excluded from the bins and
/// reported out-of-band.
pub const DEFAULT_BINS: usize = 100;

impl MomentStats {
    pub fn total_weight(&self) -> u64 {
        self.data.iter().map(|d| d.weight as u64).sum()
    }

    /// Weighted mean of `a1^n`.
    pub fn moment_a1(&self, n: u32) -> f64 {
        let w = self.total_weight();
        if w == 0 {
            return f64::NAN;
        }
        let s: f64 = self
            .data
            .iter()
            .map(|d| d.weight as f64 * d.a1().powi(n as i32))
            .sum();
        s / w as f64
    }

    /// Weighted mean of `a2^n`.
    pub fn moment_a2(&self, n: u32) -> f64 {
        let w = self.total_weight();
        if w == 0 {
            return f64::NAN;
        }
        let s: f64 = self
            .data
            .iter()
            .map(|d| d.weight as f64 * d.a2().powi(n as i32))
            .sum();
        s / w as f64
    }

    /// Weighted frequency of the exact event `c1 = 0`.
    pub fn atom_a1_zero(&self) -> f64 {
        let w = self.total_weight();
        if w == 0 {
            return f64::NAN;
        }
        let s: u64 = self.data.iter().filter(|d| d.c1 == 0).map(|d| d.weight as u64).sum();
        s as f64 / w as f64
    }

    /// Expected weighted rate of exact `c1 = 0` hits produced by the
    /// continuous part of the distribution: the normalized coefficients
    /// live on a grid of spacing `1/sqrt(p)`, so a continuous density `d`
    /// at 0 produces false atoms at rate `d / sqrt(p)`. The density is
    /// estimated from the non-atom data near 0.
    pub fn false_atom_rate_a1(&self) -> f64 {
        let w = self.total_weight();
        if w == 0 {
            return 0.0;
        }
        let h = 0.25;
        let near: u64 = self
            .data
            .iter()
            .filter(|d| d.c1 != 0 && d.a1().abs() < h)
            .map(|d| d.weight as u64)
            .sum();
        let dens = near as f64 / (2.0 * h * w as f64);
        let spacing: f64 = self
            .data
            .iter()
            .map(|d| d.weight as f64 / (d.p as f64).sqrt())
            .sum::<f64>()
            / w as f64;
        dens * spacing
    }

    /// Same correction for the `a2` atoms at integer `j` (grid spacing `1/p`).
    pub fn false_atom_rate_a2(&self, j: i64) -> f64 {
        let w = self.total_weight();
        if w == 0 {
            return 0.0;
        }
        let h = 0.25;
        let near: u64 = self
            .data
            .iter()
            .filter(|d| {
                let p = d.p as i64;
                !(d.c2 % p == 0 && d.c2 / p == j) && (d.a2() - j as f64).abs() < h
            })
            .map(|d| d.weight as u64)
            .sum();
        let dens = near as f64 / (2.0 * h * w as f64);
        let spacing: f64 =
            self.data.iter().map(|d| d.weight as f64 / d.p as f64).sum::<f64>() / w as f64;
        dens * spacing
    }

    /// Weighted frequencies of the exact events `c2 = j p`, `j = -2..2`.
    pub fn atom_a2(&self) -> [f64; 5] {
        let w = self.total_weight();
        let mut out = [0.0f64; 5];
        if w == 0 {
            return [f64::NAN; 5];
        }
        for d in &self.data {
            let p = d.p as i64;
            if d.c2 % p == 0 {
                let j = d.c2 / p;
                if (-2..=2).contains(&j) {
                    out[(j + 2) as usize] += d.weight as f64;
                }
            }
        }
        for v in out.iter_mut() {
            *v /= w as f64;
        }
        out
    }

    /// Weight-normalized histogram: `(bin center, frequency)` such that
    /// `sum freq * bin_width + atom mass = 1`.
    pub fn histogram(&self, coeff: crate::catalog::Coeff, bins: usize) -> Vec<(f64, f64)> {
        assert!(bins >= 1);
        let (lo, hi) = crate::catalog::support(coeff);
        let width = (hi - lo) / bins as f64;
        let mut acc = vec![0u64; bins];
        let total = self.total_weight();
        for d in &self.data {
            let (value, is_atom) = match coeff {
                crate::catalog::Coeff::A1 => (d.a1(), d.c1 == 0),
                crate::catalog::Coeff::A2 => {
                    let p = d.p as i64;
                    (d.a2(), d.c2 % p == 0 && (-2..=2).contains(&(d.c2 / p)))
                }
            };
            if is_atom {
                continue;
            }
            let idx = (((value - lo) / width) as usize).min(bins - 1);
            acc[idx] += d.weight as u64;
        }
        (0..bins)
            .map(|i| {
                let center = lo + (i as f64 + 0.5) * width;
                let freq = if total == 0 {
                    0.0
                } else {
                    acc[i] as f64 / (total as f64 * width)
                };
                (center, freq)
            })
            .collect()
    }
}

/// Accumulate trace data for all good odd degree-1 primes `p <= bound`.
pub fn accumulate(
    curve: &Curve,
    field: &NumberFieldSpec,
    bound: u64,
    nmax: u32,
    backend: Backend,
    cfg: &JacConfig,
) -> Result<MomentStats> {
    let mut stats = MomentStats {
        curve: curve.clone(),
        field_poly: field.poly_string(),
        bound: 0,
        nmax,
        data: Vec::new(),
        skipped: SkipReport::default(),
    };
    extend(&mut stats, field, bound, backend, cfg)?;
    Ok(stats)
}

/// Extend existing stats to a larger bound, computing only new primes.
pub fn extend(
    stats: &mut MomentStats,
    field: &NumberFieldSpec,
    bound: u64,
    backend: Backend,
    cfg: &JacConfig,
) -> Result<()> {
    if bound <= stats.bound {
        return Ok(());
    }
    let from = stats.bound;
    let curve = stats.curve.clone();
    let todo: Vec<u64> = primes_up_to(bound)
        .into_iter()
        .filter(|&p| p > 2 && p > from)
        .collect();

    enum Outcome {
        Datum(TraceDatum),
        Ramified(u64),
        Bad(u64),
        WeightZero,
        Err(Error),
    }
    let cfg = *cfg;
    let results = par_map(todo, move |p| {
        if field.is_ramified(p) {
            return Outcome::Ramified(p);
        }
        let w = field.prime_weight(p);
        if w == 0 {
            return Outcome::WeightZero;
        }
        match trace_datum(&curve, p, backend, &cfg) {
            Ok(mut td) => {
                td.weight = w;
                Outcome::Datum(td)
            }
            Err(Error::BadReduction { p }) => Outcome::Bad(p),
            Err(e) => Outcome::Err(e),
        }
    });
    for r in results {
        match r {
            Outcome::Datum(td) => stats.data.push(td),
            Outcome::Ramified(p) => stats.skipped.ramified.push(p),
            Outcome::Bad(p) => stats.skipped.bad_reduction.push(p),
            Outcome::WeightZero => stats.skipped.weight_zero += 1,
            Outcome::Err(e) => return Err(e),
        }
    }
    stats.bound = bound;
    Ok(())
}

/// JSON shape for stats output.
#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StatsJson {
    pub curve: String,
    pub field: String,
    pub n: u64,
    pub nmax: u32,
    pub a1_moments: Vec<f64>,
    pub a2_moments: Vec<f64>,
    pub atom_frequencies: AtomJson,
    pub skipped_primes: SkipReport,
    pub total_weight: u64,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AtomJson {
    pub a1_zero: f64,
    pub a2: [f64; 5],
}

pub fn stats_json(stats: &MomentStats) -> StatsJson {
    StatsJson {
        curve: poly_to_string(&stats.curve.coeffs()[..=stats.curve.degree()]),
        field: stats.field_poly.clone(),
        n: stats.bound,
        nmax: stats.nmax,
        a1_moments: (1..=stats.nmax).map(|n| stats.moment_a1(n)).collect(),
        a2_moments: (1..=stats.nmax.min(10)).map(|n| stats.moment_a2(n)).collect(),
        atom_frequencies: AtomJson { a1_zero: stats.atom_a1_zero(), a2: stats.atom_a2() },
        skipped_primes: stats.skipped.clone(),
        total_weight: stats.total_weight(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::parse_curve;

    #[test]
    fn prime_weight_examples() {
        let q = NumberFieldSpec::rationals();
        for &p in &[3u64, 11, 101] {
            assert_eq!(q.prime_weight(p), 1);
        }
        let k = NumberFieldSpec::parse("x^2+2").unwrap();
        // -2 = 9 = 3^2 mod 11: two roots
        assert_eq!(k.prime_weight(11), 2);
        // -2 = 3 mod 5 is a nonsquare
        assert_eq!(k.prime_weight(5), 0);
        assert!(k.is_ramified(2));
        assert!(!k.is_ramified(11));
    }

    #[test]
    fn weight_matches_legendre_for_quadratic() {
        let k = NumberFieldSpec::parse("x^2+2").unwrap();
        for p in crate::ffield::primes_up_to(200).into_iter().skip(1) {
            if k.is_ramified(p) {
                continue;
            }
            let expect = match crate::ffield::legendre(-2, p) {
                1 => 2,
                -1 => 0,
                _ => unreachable!(),
            };
            assert_eq!(k.prime_weight(p), expect, "p={p}");
        }
    }

    #[test]
    fn empty_stats_below_first_prime() {
        let c = parse_curve("x^5-x+1").unwrap();
        let q = NumberFieldSpec::rationals();
        let s = accumulate(&c, &q, 2, 4, Backend::Naive, &JacConfig::default()).unwrap();
        assert_eq!(s.total_weight(), 0);
        assert!(s.moment_a1(2).is_nan());
    }

    #[test]
    fn m0_is_one_and_weighting_trivial_over_q() {
        let c = parse_curve("x^5-x+1").unwrap();
        let q = NumberFieldSpec::rationals();
        let s = accumulate(&c, &q, 500, 4, Backend::Naive, &JacConfig::default()).unwrap();
        assert!(s.total_weight() > 0);
        assert!((s.moment_a1(0) - 1.0).abs() < 1e-15);
        assert!((s.moment_a2(0) - 1.0).abs() < 1e-15);
        // over Q every weight is 1
        assert!(s.data.iter().all(|d| d.weight == 1));
    }

    #[test]
    fn backend_independence_small() {
        let cfg = JacConfig { naive_crossover: 0, ..Default::default() };
        let q = NumberFieldSpec::rationals();
        for s in ["x^5-x+1", "x^6+10x^3-2"] {
            let c = parse_curve(s).unwrap();
            let a = accumulate(&c, &q, 600, 4, Backend::Naive, &JacConfig::default()).unwrap();
            let b = accumulate(&c, &q, 600, 4, Backend::Jacobian, &cfg).unwrap();
            assert_eq!(a.data, b.data, "{s}");
        }
    }

    #[test]
    fn histogram_normalizes_with_atoms() {
        let c = parse_curve("x^5-x").unwrap(); // J(C2): strong atoms
        let q = NumberFieldSpec::rationals();
        let s = accumulate(&c, &q, 2000, 2, Backend::Naive, &JacConfig::default()).unwrap();
        for coeff in [crate::catalog::Coeff::A1, crate::catalog::Coeff::A2] {
            let h = s.histogram(coeff, 80);
            let width = 8.0 / 80.0;
            let cont: f64 = h.iter().map(|&(_, f)| f * width).sum();
            let atom = match coeff {
                crate::catalog::Coeff::A1 => s.atom_a1_zero(),
                crate::catalog::Coeff::A2 => s.atom_a2().iter().sum(),
            };
            assert!((cont + atom - 1.0).abs() < 1e-9, "{coeff:?}: {cont} + {atom}");
        }
    }

    #[test]
    fn extend_matches_fresh_run() {
        let c = parse_curve("x^6+x^2+1").unwrap();
        let q = NumberFieldSpec::rationals();
        let cfg = JacConfig::default();
        let mut incremental = accumulate(&c, &q, 300, 4, Backend::Naive, &cfg).unwrap();
        extend(&mut incremental, &q, 900, Backend::Naive, &cfg).unwrap();
        let fresh = accumulate(&c, &q, 900, 4, Backend::Naive, &cfg).unwrap();
        assert_eq!(incremental.data, fresh.data);
    }
}

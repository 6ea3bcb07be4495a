//! Naive point counting for genus-2 curves `y^2 = f(x)` over `F_p` and
//! `F_{p^2}`, good-reduction tests, quadratic twists, and conversion to
//! exact and normalized L-polynomial coefficients.
//!
//! Conventions, fixed here and validated downstream against the printed
//! moment statistics: `p = 2` is excluded everywhere; points at infinity on
//! the smooth model are 1 for degree-5 models and `1 + chi_q(f_6)` for
//! degree-6 models; good reduction means the degree is preserved and the
//! reduction stays squarefree.

use crate::ffield::{addmod, mulmod, primes_up_to, reduce_i64, submod, Fp2Ctx, Fp2Elem, QCharTable};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;

/// An integer-coefficient genus-2 model `y^2 = f(x)`, `deg f` in `{5, 6}`,
/// nonsingular over `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve {
    coeffs: [i64; 7],
    degree: usize,
}

impl Curve {
    /// Build from ascending coefficients `[f0, .., f_deg]`; rejects
    /// degenerate degrees and singular models.
    pub fn new(coeffs: &[i64]) -> Result<Curve> {
        let mut c = [0i64; 7];
        if coeffs.len() > 7 {
            return Err(Error::Parse("degree above 6".into()));
        }
        c[..coeffs.len()].copy_from_slice(coeffs);
        let degree = (0..7).rev().find(|&i| c[i] != 0).map(|i| i).unwrap_or(0);
        if degree != 5 && degree != 6 {
            return Err(Error::Parse(format!("degree must be 5 or 6, got {degree}")));
        }
        let curve = Curve { coeffs: c, degree };
        if curve.disc().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(curve)
    }

    pub fn coeffs(&self) -> &[i64; 7] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn leading(&self) -> i64 {
        self.coeffs[self.degree]
    }

    /// Discriminant of `f` over `Q` (up to the standard normalization
    /// `disc = (-1)^{d(d-1)/2} Res(f, f') / lc`).
    pub fn disc(&self) -> BigInt {
        let f: Vec<BigInt> = self.coeffs[..=self.degree].iter().map(|&a| BigInt::from(a)).collect();
        let fp: Vec<BigInt> = (1..=self.degree)
            .map(|i| BigInt::from(i as i64) * &f[i])
            .collect();
        let res = resultant_z(&f, &fp);
        let d = self.degree;
        let sign = if (d * (d - 1) / 2) % 2 == 0 { 1 } else { -1 };
        let q = res / &f[d];
        BigInt::from(sign) * q
    }

    /// Substitute `x -> x + shift` (a Q-isomorphism of the model).
    pub fn shift_x(&self, shift: i64) -> Curve {
        let mut out = [0i64; 7];
        for i in 0..=self.degree {
            // (x + shift)^i built up iteratively
            let mut pow = [0i64; 7];
            pow[0] = 1;
            for _ in 0..i {
                let mut next = [0i64; 7];
                for j in 0..7 {
                    if pow[j] != 0 {
                        next[j + 1] += pow[j];
                        next[j] += pow[j].checked_mul(shift).expect("shift overflow");
                    }
                }
                pow = next;
            }
            for j in 0..7 {
                out[j] = out[j]
                    .checked_add(self.coeffs[i].checked_mul(pow[j]).expect("shift overflow"))
                    .expect("shift overflow");
            }
        }
        Curve { coeffs: out, degree: self.degree }
    }

    /// Reduce the model mod `p`.
    pub fn reduce(&self, p: u64) -> ReducedCurve {
        let mut c = [0u64; 7];
        for i in 0..7 {
            c[i] = reduce_i64(self.coeffs[i], p);
        }
        let degree = (0..7).rev().find(|&i| c[i] != 0).unwrap_or(0);
        ReducedCurve { p, coeffs: c, degree, declared_degree: self.degree }
    }
}

/// Resultant of two integer polynomials (ascending coefficients), as the
/// Sylvester determinant computed by fraction-free (Bareiss) elimination.
/// The matrices here are at most 15x15, so this is exact and cheap.
pub fn resultant_z(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let deg = |v: &[BigInt]| v.iter().rposition(|c| !c.is_zero());
    let (da, db) = match (deg(a), deg(b)) {
        (Some(da), Some(db)) => (da, db),
        _ => return BigInt::zero(),
    };
    if da == 0 {
        return a[0].clone().pow(db as u32);
    }
    if db == 0 {
        return b[0].clone().pow(da as u32);
    }
    let n = da + db;
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for row in 0..db {
        for i in 0..=da {
            m[row][row + i] = a[da - i].clone();
        }
    }
    for row in 0..da {
        for i in 0..=db {
            m[db + row][row + i] = b[db - i].clone();
        }
    }
    // Bareiss fraction-free elimination
    let mut sign = 1i32;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev; // exact by Bareiss
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    BigInt::from(sign) * m[n - 1][n - 1].clone()
}

/// Per-prime exact L-polynomial data with normalized coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct TraceDatum {
    pub p: u64,
    /// number of degree-1 primes above `p` (filled by the stats layer)
    pub weight: u32,
    pub c1: i64,
    pub c2: i64,
}

impl TraceDatum {
    pub fn a1(&self) -> f64 {
        self.c1 as f64 / (self.p as f64).sqrt()
    }

    pub fn a2(&self) -> f64 {
        self.c2 as f64 / self.p as f64
    }

    /// Region-S inequalities in exact integer form.
    pub fn weil_ok(&self) -> bool {
        let p = self.p as i128;
        let c1 = self.c1 as i128;
        let c2 = self.c2 as i128;
        // |a1| <= 4
        if c1 * c1 > 16 * p {
            return false;
        }
        // a2 <= a1^2/4 + 2  <=>  4 c2 <= c1^2 + 8p
        if 4 * c2 > c1 * c1 + 8 * p {
            return false;
        }
        // a2 >= 2|a1| - 2  <=>  c2 + 2p >= 2|c1| sqrt(p)
        let lhs = c2 + 2 * p;
        lhs >= 0 && lhs * lhs >= 4 * c1 * c1 * p
    }
}

/// A model reduced mod `p`.
#[derive(Clone, Debug)]
pub struct ReducedCurve {
    pub p: u64,
    pub coeffs: [u64; 7],
    pub degree: usize,
    declared_degree: usize,
}

impl ReducedCurve {
    pub fn new(p: u64, coeffs: [u64; 7]) -> ReducedCurve {
        let degree = (0..7).rev().find(|&i| coeffs[i] % p != 0).unwrap_or(0);
        let mut c = coeffs;
        for x in c.iter_mut() {
            *x %= p;
        }
        ReducedCurve { p, coeffs: c, degree, declared_degree: degree }
    }

    /// Degree preserved and reduction squarefree.
    pub fn good(&self) -> bool {
        if self.degree != self.declared_degree {
            return false;
        }
        squarefree_mod_p(&self.coeffs[..=self.degree], self.p)
    }

    /// Horner evaluation of `f` at `x` mod `p`.
    #[inline]
    pub fn eval(&self, x: u64) -> u64 {
        let p = self.p;
        let mut acc = 0u64;
        for &c in self.coeffs[..=self.degree].iter().rev() {
            acc = addmod(mulmod(acc, x, p), c, p);
        }
        acc
    }

    /// `sum_x chi(f(x))` over `F_p`, plus the first Weierstrass root seen.
    ///
    /// Evaluation walks the finite-difference table of `f`, so the inner
    /// loop is `deg f` modular additions per point.
    pub fn affine_char_sum(&self, chi: &QCharTable) -> (i64, Option<u64>) {
        let p = self.p;
        let d = self.degree;
        // forward differences at 0: diffs[i] = (Delta^i f)(0)
        let mut vals: Vec<u64> = (0..=d as u64).map(|x| self.eval(x)).collect();
        let mut diffs = Vec::with_capacity(d + 1);
        for _ in 0..=d {
            diffs.push(vals[0]);
            for i in 0..vals.len() - 1 {
                vals[i] = submod(vals[i + 1], vals[i], p);
            }
            vals.pop();
        }
        let mut sum = 0i64;
        let mut root = None;
        for x in 0..p {
            let v = diffs[0];
            let s = chi.chi(v);
            sum += s as i64;
            if s == 0 && root.is_none() {
                root = Some(x);
            }
            for i in 0..d {
                diffs[i] = addmod(diffs[i], diffs[i + 1], p);
            }
        }
        (sum, root)
    }

    /// `#C(F_q)` on the smooth model for `q = p` or `p^2`.
    pub fn count_points(&self, extension_degree: u32) -> u64 {
        let p = self.p;
        match extension_degree {
            1 => {
                let chi = QCharTable::new(p);
                let (sum, _) = self.affine_char_sum(&chi);
                let infinity = if self.degree == 5 {
                    1i64
                } else {
                    1 + chi.chi(self.coeffs[6]) as i64
                };
                (p as i64 + sum + infinity) as u64
            }
            2 => {
                let ctx = Fp2Ctx::new(p);
                let chi = QCharTable::new(p);
                let coeffs: Vec<(u64, u64)> =
                    self.coeffs[..=self.degree].iter().map(|&c| (c, 0)).collect();
                let d = self.degree;
                let eval2 = |x: Fp2Elem| {
                    let mut acc = (0u64, 0u64);
                    for &c in coeffs.iter().rev() {
                        acc = ctx.add(ctx.mul(acc, x), c);
                    }
                    acc
                };
                let mut sum = 0i64;
                // finite differences along x0 on each line x = x0 + x1 w
                let mut diffs: Vec<Fp2Elem> = Vec::with_capacity(d + 1);
                for x1 in 0..p {
                    let mut vals: Vec<Fp2Elem> =
                        (0..=d as u64).map(|x0| eval2((x0, x1))).collect();
                    diffs.clear();
                    for _ in 0..=d {
                        diffs.push(vals[0]);
                        for i in 0..vals.len() - 1 {
                            vals[i] = ctx.sub(vals[i + 1], vals[i]);
                        }
                        vals.pop();
                    }
                    for _x0 in 0..p {
                        sum += chi.chi(ctx.norm(diffs[0])) as i64;
                        for i in 0..d {
                            diffs[i] = ctx.add(diffs[i], diffs[i + 1]);
                        }
                    }
                }
                // deg 6: the leading coefficient is an F_p unit, hence a
                // square in F_{p^2}, so both infinite points are rational.
                let infinity = if self.degree == 5 { 1i64 } else { 2 };
                ((p as i64 * p as i64) + sum + infinity) as u64
            }
            _ => panic!("extension degree must be 1 or 2"),
        }
    }
}

/// `gcd(f, f') = const` test over `F_p`.
fn squarefree_mod_p(f: &[u64], p: u64) -> bool {
    let fp: Vec<u64> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| mulmod(i as u64, c, p))
        .collect();
    let g = gcd_mod_p(f.to_vec(), fp, p);
    g.len() == 1
}

/// Polynomial gcd over `F_p`, ascending coefficients, result monic.
pub(crate) fn gcd_mod_p(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        // a mod b
        let db = b.len() - 1;
        let inv = crate::ffield::invmod(b[db], p);
        while a.len() > db {
            let da = a.len() - 1;
            if da < db {
                break;
            }
            let c = mulmod(a[da], inv, p);
            if c != 0 {
                for i in 0..=db {
                    let t = mulmod(c, b[i], p);
                    a[da - db + i] = submod(a[da - db + i], t, p);
                }
            }
            a.pop();
            trim(&mut a);
            if a.len() <= db {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
        trim(&mut b);
    }
    trim(&mut a);
    if let Some(&lc) = a.last() {
        let inv = crate::ffield::invmod(lc, p);
        for c in a.iter_mut() {
            *c = mulmod(*c, inv, p);
        }
    }
    a
}

/// Good reduction at odd `p`: degree preserved and discriminant nonzero
/// mod `p`.
pub fn good_reduction(curve: &Curve, p: u64) -> bool {
    assert!(p >= 3 && p % 2 == 1, "p = 2 is excluded everywhere");
    curve.reduce(p).good()
}

/// Exact `(c1, c2)` at `p` by affine counting over `F_p` and `F_{p^2}`.
pub fn trace_datum_naive(curve: &Curve, p: u64) -> Result<TraceDatum> {
    if !good_reduction(curve, p) {
        return Err(Error::BadReduction { p });
    }
    let red = curve.reduce(p);
    trace_datum_from_reduced(&red)
}

pub(crate) fn trace_datum_from_reduced(red: &ReducedCurve) -> Result<TraceDatum> {
    let p = red.p;
    let n1 = red.count_points(1) as i64;
    let n2 = red.count_points(2) as i64;
    trace_datum_from_counts(p, n1, n2)
}

/// Assemble a `TraceDatum` from `#C(F_p)` and `#C(F_{p^2})`.
pub fn trace_datum_from_counts(p: u64, n1: i64, n2: i64) -> Result<TraceDatum> {
    let pi = p as i64;
    let c1 = n1 - pi - 1;
    let num = n2 + c1 * c1 - pi * pi - 1;
    if num % 2 != 0 {
        return Err(Error::NonIntegral(format!("c2 at p = {p}")));
    }
    let c2 = num / 2;
    let td = TraceDatum { p, weight: 1, c1, c2 };
    if !td.weil_ok() {
        return Err(Error::WeilViolation { p, c1, c2 });
    }
    Ok(td)
}

/// The quadratic twist `y^2 = t f(x)` over `F_p`, `t` the least nonresidue.
pub fn quadratic_twist(curve: &Curve, p: u64) -> ReducedCurve {
    let red = curve.reduce(p);
    twist_reduced(&red)
}

pub(crate) fn twist_reduced(red: &ReducedCurve) -> ReducedCurve {
    let t = crate::ffield::find_nonresidue(red.p);
    let mut c = [0u64; 7];
    for i in 0..7 {
        c[i] = mulmod(t, red.coeffs[i], red.p);
    }
    ReducedCurve {
        p: red.p,
        coeffs: c,
        degree: red.degree,
        declared_degree: red.declared_degree,
    }
}

/// Good odd primes of a curve up to `n`.
pub fn good_primes(curve: &Curve, n: u64) -> Vec<u64> {
    primes_up_to(n)
        .into_iter()
        .filter(|&p| p > 2 && good_reduction(curve, p))
        .collect()
}

/// Parse a curve literal: either a polynomial in `x` like
/// `x^6+3x^4+x^2-1`, or a bracketed ascending coefficient list
/// `[-1,0,1,0,3,0,1]`.
pub fn parse_curve(s: &str) -> Result<Curve> {
    Curve::new(&parse_poly(s)?)
}

/// Parse an integer polynomial in `x`, returning ascending coefficients.
pub fn parse_poly(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    let bad = |m: &str| Error::Parse(format!("{m}: {s:?}"));
    if s.starts_with('[') {
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| bad("unterminated coefficient list"))?;
        let coeffs = inner
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| bad("bad coefficient")))
            .collect::<Result<Vec<i64>>>()?;
        return Ok(coeffs);
    }
    // term-by-term polynomial parser
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let cleaned = cleaned.replace('−', "-").replace("**", "^");
    let mut coeffs: Vec<i64> = Vec::new();
    let mut term = String::new();
    let mut terms: Vec<String> = Vec::new();
    for (i, ch) in cleaned.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 && !term.ends_with('^') {
            terms.push(std::mem::take(&mut term));
        }
        term.push(ch);
    }
    if !term.is_empty() {
        terms.push(term);
    }
    if terms.is_empty() {
        return Err(bad("empty polynomial"));
    }
    for t in terms {
        let (coef_str, pow) = match t.find('x') {
            None => (t.as_str(), 0usize),
            Some(ix) => {
                let rest = &t[ix + 1..];
                let pow = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^')
                        .ok_or_else(|| bad("expected ^ after x"))?
                        .parse::<usize>()
                        .map_err(|_| bad("bad exponent"))?
                };
                (&t[..ix], pow)
            }
        };
        let coef_str = coef_str.strip_suffix('*').unwrap_or(coef_str);
        let coef = match coef_str {
            "" | "+" => 1,
            "-" => -1,
            c => c.parse::<i64>().map_err(|_| bad("bad coefficient"))?,
        };
        if pow > 6 {
            return Err(bad("degree above 6"));
        }
        if coeffs.len() <= pow {
            coeffs.resize(pow + 1, 0);
        }
        coeffs[pow] += coef;
    }
    Ok(coeffs)
}

/// Render ascending coefficients as a polynomial in `x`.
pub fn poly_to_string(coeffs: &[i64]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mag = c.abs();
        let var = match i {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{i}"),
        };
        let body = if i == 0 {
            format!("{mag}")
        } else if mag == 1 {
            var
        } else {
            format!("{mag}{var}")
        };
        if parts.is_empty() {
            parts.push(if c < 0 { format!("-{body}") } else { body });
        } else {
            parts.push(format!("{}{}", if c < 0 { "-" } else { "+" }, body));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.concat()
    }
}

//! Factorization pattern of `f` mod `p` (distinct-degree plus an
//! equal-degree split for the factor the extension fallback needs), and
//! the parity of `#Jac(F_p)` read off the pattern.
//!
//! The 2-torsion of the Jacobian is even-cardinality subsets of the
//! Weierstrass points modulo complements; a rational point of order 2
//! exists iff some proper nonempty Galois-stable even subset exists. For
//! squarefree `f` that is a statement about the factor degrees alone.

use super::field::{poly_powmod, poly_rem};
use crate::counting::gcd_mod_p;
use crate::ffield::{invmod, mulmod, submod};
use rand::Rng;

/// Multiset of irreducible factor degrees, ascending, with multiplicity
/// expanded (e.g. two cubics give `[3, 3]`).
pub fn factor_degrees(f: &[u64], p: u64) -> Vec<usize> {
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    let mut rem = f.to_vec();
    trim(&mut rem);
    let mut out = Vec::new();
    let mut h = vec![0u64, 1]; // x
    let mut i = 0usize;
    while rem.len() > 1 {
        i += 1;
        if 2 * i > rem.len() - 1 {
            // remainder is irreducible
            out.push(rem.len() - 1);
            break;
        }
        h = poly_powmod(&h, p as u128, &rem, p);
        // gcd(h - x, rem) = product of all degree-i factors
        let mut hx = h.clone();
        if hx.len() < 2 {
            hx.resize(2, 0);
        }
        hx[1] = submod(hx[1], 1, p);
        let g = gcd_mod_p(hx, rem.clone(), p);
        if g.len() > 1 {
            let k = (g.len() - 1) / i;
            for _ in 0..k {
                out.push(i);
            }
            // rem /= g
            rem = poly_div_exact(&rem, &g, p);
            if rem.len() > 1 {
                h = poly_rem(h, &rem, p);
            }
        }
    }
    out.sort_unstable();
    out
}

fn poly_div_exact(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lcinv = invmod(b[db], p);
    let mut q = vec![0u64; rem.len() - db];
    while rem.len() > db {
        let dr = rem.len() - 1;
        let c = mulmod(rem[dr], lcinv, p);
        q[dr - db] = c;
        if c != 0 {
            for i in 0..=db {
                let t = mulmod(c, b[i], p);
                rem[dr - db + i] = submod(rem[dr - db + i], t, p);
            }
        }
        rem.pop();
        while rem.last() == Some(&0) {
            rem.pop();
        }
    }
    debug_assert!(rem.is_empty(), "division not exact");
    while q.last() == Some(&0) {
        q.pop();
    }
    q
}

/// One monic irreducible factor of smallest degree, by distinct-degree
/// then Cantor-Zassenhaus equal-degree splitting.
pub fn min_degree_factor<R: Rng>(f: &[u64], p: u64, rng: &mut R) -> Vec<u64> {
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    let mut rem = f.to_vec();
    trim(&mut rem);
    let mut h = vec![0u64, 1];
    let mut i = 0usize;
    loop {
        i += 1;
        if 2 * i > rem.len() - 1 {
            return monic(&rem, p);
        }
        h = poly_powmod(&h, p as u128, &rem, p);
        let mut hx = h.clone();
        if hx.len() < 2 {
            hx.resize(2, 0);
        }
        hx[1] = submod(hx[1], 1, p);
        let g = gcd_mod_p(hx, rem.clone(), p);
        if g.len() > 1 {
            // g is a product of degree-i irreducibles; split off one
            return equal_degree_split(&g, i, p, rng);
        }
    }
}

fn monic(f: &[u64], p: u64) -> Vec<u64> {
    let lc = *f.last().unwrap();
    if lc == 1 {
        return f.to_vec();
    }
    let inv = invmod(lc, p);
    f.iter().map(|&c| mulmod(c, inv, p)).collect()
}

/// Cantor-Zassenhaus: split a product of degree-`d` irreducibles until a
/// single degree-`d` factor remains.
fn equal_degree_split<R: Rng>(g: &[u64], d: usize, p: u64, rng: &mut R) -> Vec<u64> {
    let g = monic(g, p);
    let dg = g.len() - 1;
    if dg == d {
        return g;
    }
    // exponent (p^d - 1)/2 fits u128 for p < 2^21, d <= 6
    let e = (p as u128).pow(d as u32) / 2;
    loop {
        let mut h: Vec<u64> = (0..dg).map(|_| rng.gen_range(0..p)).collect();
        while h.last() == Some(&0) {
            h.pop();
        }
        if h.len() <= 1 {
            continue;
        }
        let w = poly_powmod(&h, e, &g, p);
        // gcd(w - 1, g)
        let mut w1 = w;
        if w1.is_empty() {
            w1.push(0);
        }
        w1[0] = submod(w1[0], 1, p);
        let s = gcd_mod_p(w1, g.clone(), p);
        let ds = s.len().saturating_sub(1);
        if ds > 0 && ds < dg {
            let (a, b) = if ds <= dg - ds {
                (s.clone(), poly_div_exact(&g, &s, p))
            } else {
                (poly_div_exact(&g, &s, p), s.clone())
            };
            let _ = b;
            return equal_degree_split(&a, d, p, rng);
        }
    }
}

/// Parity of `#Jac(F_p)`: `true` when odd.
///
/// For a squarefree sextic there is no rational 2-torsion exactly for the
/// patterns `{6}` and `{3,3}`; for a quintic model (with the extra
/// rational Weierstrass point at infinity) exactly when `f` is
/// irreducible.
pub fn jacobian_order_is_odd(degrees: &[usize], model_degree: usize) -> bool {
    if model_degree == 6 {
        degrees == [6] || degrees == [3, 3]
    } else {
        degrees == [5]
    }
}

/// Verify a candidate factor stays a factor (used in debug checks).
pub fn divides(f: &[u64], g: &[u64], p: u64) -> bool {
    poly_rem(f.to_vec(), g, p).is_empty()
}

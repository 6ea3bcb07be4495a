//! Hasse-Witt matrix of `y^2 = f(x)` mod `p`, from the middle coefficients
//! of `h = f^{(p-1)/2}`, which satisfy the first-order recurrence induced
//! by `f h' = m f' h`.
//!
//! This pins the L-polynomial mod `p`: `c1 = -tr(A)` and `c2 = det(A)`
//! (mod `p`), which narrows the Weil window to a handful of candidates at
//! primes where no odd-degree model exists. Cost is O(p) multiplications.

use crate::ffield::{addmod, invmod, mulmod, powmod, submod};

/// Congruence classes `(c1 mod p, c2 mod p)` from the Hasse-Witt matrix.
/// `f` is squarefree mod `p` of degree 5 or 6 (ascending coefficients).
pub fn cartier_manin_congruence(f: &[u64], p: u64) -> (u64, u64) {
    let d = f.len() - 1;
    assert!(d == 5 || d == 6);
    // shift so that f(0) != 0 (the matrix invariants don't change)
    let mut fc: Vec<u64> = f.to_vec();
    if fc[0] == 0 {
        let mut a = 1u64;
        loop {
            let mut acc = 0u64;
            for &c in fc.iter().rev() {
                acc = addmod(mulmod(acc, a, p), c, p);
            }
            if acc != 0 {
                break;
            }
            a += 1;
        }
        fc = shift_poly(&fc, a, p);
    }
    let frev: Vec<u64> = fc.iter().rev().copied().collect();

    // inverse table for 1..=p-1
    let mut inv = vec![0u64; (p as usize).max(2)];
    inv[1] = 1;
    for i in 2..p as usize {
        // inv[i] = -(p/i) * inv[p % i]
        let q = p / i as u64;
        inv[i] = mulmod(p - q, inv[(p % i as u64) as usize], p);
    }

    let m = (p - 1) / 2;
    // coefficients of f^m at the four positions
    let lo = power_series_coeffs(&fc, m, p, &inv, (p - 1) as usize);
    let h_p1 = lo[(p - 1) as usize];
    let h_p2 = lo[(p - 2) as usize];
    // top coefficients via the reversed polynomial: h_{k} = hrev_{dm - k}
    let dm = d as u64 * m;
    let top_idx = (dm - (2 * p - 2)) as usize; // index of h_{2p-2} in hrev
    let hi = power_series_coeffs(&frev, m, p, &inv, top_idx);
    let h_2p2 = hi[top_idx];
    let h_2p1 = if (dm as i128 - (2 * p - 1) as i128) < 0 {
        0
    } else {
        hi[(dm - (2 * p - 1)) as usize]
    };

    // A = [[h_{p-1}, h_{p-2}], [h_{2p-1}, h_{2p-2}]]
    let tr = addmod(h_p1, h_2p2, p);
    let det = submod(mulmod(h_p1, h_2p2, p), mulmod(h_p2, h_2p1, p), p);
    (submod(0, tr, p), det)
}

/// First `n_max + 1` coefficients of `g = f^m` mod `p` via
/// `f_0 K g_K = sum_{j>=1} ((m+1) j - K) f_j g_{K-j}`; needs `f_0 != 0`
/// and `n_max < p` so the step index stays invertible.
fn power_series_coeffs(f: &[u64], m: u64, p: u64, inv: &[u64], n_max: usize) -> Vec<u64> {
    debug_assert!(f[0] != 0 && (n_max as u64) < p);
    let d = f.len() - 1;
    let f0inv = invmod(f[0], p);
    let mut g = vec![0u64; n_max + 1];
    g[0] = powmod(f[0], m, p);
    let m1 = (m + 1) % p;
    for k in 1..=n_max {
        let kk = k as u64 % p;
        let mut acc = 0u64;
        for j in 1..=d.min(k) {
            if f[j] == 0 {
                continue;
            }
            // ((m+1) j - K) mod p
            let a = mulmod(m1, j as u64, p);
            let coef = submod(a, kk, p);
            acc = addmod(acc, mulmod(coef, mulmod(f[j], g[k - j], p), p), p);
        }
        g[k] = mulmod(acc, mulmod(inv[k % p as usize], f0inv, p), p);
    }
    g
}

/// `f(x + a)` mod `p`.
fn shift_poly(f: &[u64], a: u64, p: u64) -> Vec<u64> {
    let mut coeffs = f.to_vec();
    let n = coeffs.len();
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        // Horner deflation by (x - a) with a as the shift point
        let mut carry = 0u64;
        let mut q = vec![0u64; coeffs.len().saturating_sub(1)];
        let mut rem = 0u64;
        for i in (0..coeffs.len()).rev() {
            let cur = addmod(coeffs[i], mulmod(carry, a, p), p);
            if i == 0 {
                rem = cur;
            } else {
                q[i - 1] = cur;
                carry = cur;
            }
        }
        out.push(rem);
        coeffs = q;
        if coeffs.is_empty() {
            break;
        }
    }
    while out.len() < n {
        out.push(0);
    }
    out
}

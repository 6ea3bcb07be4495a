//! The base integer sequences that every moment formula is built from.
//!
//! `b_{i,n}` is the coefficient of `X^n` in `(X^2 + iX + 1)^n`, and
//! `d_{i,n}` subtracts the coefficient of `X^{n+1}`. `b_n = b_{0,n}` gives
//! the even moments of the U(1) trace, `c_n = b_n / (n/2 + 1)` the SU(2)
//! (Catalan) ones. `bhat`/`chat` are the binomial transforms that show up
//! for the product groups.
//!
//! Everything is exact `i128` arithmetic; the values stay far below the
//! overflow line for every `n` the crate ever asks for (n <= 20).

/// Binomial coefficient as `i128`.
pub fn binom(n: u32, k: u32) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for j in 0..k {
        acc = acc * (n - j) as i128 / (j + 1) as i128;
    }
    acc
}

/// Coefficients of `(X^2 + iX + 1)^n`, ascending.
fn poly_pow(i: i128, n: u32) -> Vec<i128> {
    let mut acc = vec![1i128];
    for _ in 0..n {
        let mut next = vec![0i128; acc.len() + 2];
        for (k, &a) in acc.iter().enumerate() {
            next[k] += a;
            next[k + 1] += a * i;
            next[k + 2] += a;
        }
        acc = next;
    }
    acc
}

/// `b_{i,n} = [X^n] (X^2 + iX + 1)^n` for `i` in `0..=4`.
pub fn seq_b(i: u8, n: u32) -> i128 {
    poly_pow(i as i128, n)[n as usize]
}

/// `d_{i,n} = [X^n] (X^2+iX+1)^n - [X^{n+1}] (X^2+iX+1)^n`.
pub fn seq_d(i: u8, n: u32) -> i128 {
    let c = poly_pow(i as i128, n);
    let hi = c.get(n as usize + 1).copied().unwrap_or(0);
    c[n as usize] - hi
}

/// `b_n = b_{0,n}`: central binomial for even `n`, zero for odd.
pub fn seq_b0(n: u32) -> i128 {
    if n % 2 == 1 {
        0
    } else {
        binom(n, n / 2)
    }
}

/// `c_n = b_n / (n/2 + 1)`: Catalan numbers on the even indices.
pub fn seq_c(n: u32) -> i128 {
    if n % 2 == 1 {
        0
    } else {
        seq_b0(n) / (n as i128 / 2 + 1)
    }
}

/// `bhat_n = sum_k C(n,k) 2^(n-k) b_k^2`.
pub fn seq_bhat(n: u32) -> i128 {
    (0..=n)
        .map(|k| binom(n, k) * (1i128 << (n - k)) * seq_b0(k) * seq_b0(k))
        .sum()
}

/// `chat_n = sum_k C(n,k) 2^(n-k) c_k^2`.
pub fn seq_chat(n: u32) -> i128 {
    (0..=n)
        .map(|k| binom(n, k) * (1i128 << (n - k)) * seq_c(k) * seq_c(k))
        .sum()
}

/// `sum_k C(n,k) 2^(n-k) b_k c_k` (mixed product transform).
pub fn seq_bc_hat(n: u32) -> i128 {
    (0..=n)
        .map(|k| binom(n, k) * (1i128 << (n - k)) * seq_b0(k) * seq_c(k))
        .sum()
}

/// `a1`-moment kernel of the full group: `c_n c_{n+4} - c_{n+2}^2`.
pub fn seq_usp4_a1(n: u32) -> i128 {
    seq_c(n) * seq_c(n + 4) - seq_c(n + 2) * seq_c(n + 2)
}

/// `a2`-moment of the full group: binomial transform of the `a1` kernel.
pub fn seq_usp4_a2(n: u32) -> i128 {
    (0..=n)
        .map(|k| binom(n, k) * (1i128 << (n - k)) * (seq_c(k) * seq_c(k + 2) - seq_c(k + 1) * seq_c(k + 1)))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_values() {
        // [X^4](X^2+1)^4 = C(4,2) = 6, and 6/(4/2+1) = 2
        assert_eq!(seq_b(0, 4), 6);
        assert_eq!(seq_c(4), 2);
        // Table row: first a1 moment of the largest component is b_{4,1} = 4
        assert_eq!(seq_b(4, 1), 4);
        assert_eq!(seq_b0(2), 2);
        assert_eq!(seq_b0(6), 20);
    }

    #[test]
    fn d2_is_catalan() {
        // d_{2,n} = Catalan numbers (A000108)
        let catalan = [1i128, 1, 2, 5, 14, 42, 132, 429, 1430];
        for (n, &c) in catalan.iter().enumerate() {
            assert_eq!(seq_d(2, n as u32), c, "n={n}");
        }
    }

    #[test]
    fn d0_signs_and_small_tables() {
        // b_{1,n} = central Motzkin-ish A002426: 1, 1, 3, 7, 19, 51, 141
        let a002426 = [1i128, 1, 3, 7, 19, 51, 141];
        for (n, &v) in a002426.iter().enumerate() {
            assert_eq!(seq_b(1, n as u32), v);
        }
        // b_{2,n} = C(2n, n): 1, 2, 6, 20, 70
        for n in 0..8u32 {
            assert_eq!(seq_b(2, n), binom(2 * n, n));
        }
        // d_{1,n} = Riordan numbers A005043: 1, 0, 1, 1, 3, 6, 15, 36
        let a005043 = [1i128, 0, 1, 1, 3, 6, 15, 36];
        for (n, &v) in a005043.iter().enumerate() {
            assert_eq!(seq_d(1, n as u32), v);
        }
    }

    #[test]
    fn binomial_transform_identities() {
        // b_{i,n} = sum_k C(n,k) b_{2k} (i-2)^{n-k}: the two routes to the
        // U(1) coset a2-moments must agree.
        for i in 0..=4u8 {
            for n in 0..=12u32 {
                let direct = seq_b(i, n);
                let via_sum: i128 = (0..=n)
                    .map(|k| binom(n, k) * seq_b0(2 * k) * (i as i128 - 2).pow(n - k))
                    .sum();
                assert_eq!(direct, via_sum, "i={i} n={n}");
                let dd = seq_d(i, n);
                let dd_sum: i128 = (0..=n)
                    .map(|k| binom(n, k) * seq_c(2 * k) * (i as i128 - 2).pow(n - k))
                    .sum();
                assert_eq!(dd, dd_sum, "d i={i} n={n}");
            }
        }
    }

    #[test]
    fn convolution_identities() {
        // sum_k C(n,k) b_k b_{n-k} = b_n^2 (Vandermonde), and the analogous
        // closed forms for the mixed sums.
        for n in 0..=14u32 {
            let conv_bb: i128 = (0..=n).map(|k| binom(n, k) * seq_b0(k) * seq_b0(n - k)).sum();
            assert_eq!(conv_bb, seq_b0(n) * seq_b0(n), "bb n={n}");
            let conv_bc: i128 = (0..=n).map(|k| binom(n, k) * seq_b0(k) * seq_c(n - k)).sum();
            assert_eq!(conv_bc, seq_c(n) * seq_b0(n + 2) / 2, "bc n={n}");
            let conv_cc: i128 = (0..=n).map(|k| binom(n, k) * seq_c(k) * seq_c(n - k)).sum();
            assert_eq!(conv_cc, seq_c(n) * seq_c(n + 2), "cc n={n}");
        }
    }

    #[test]
    fn hat_values() {
        assert_eq!(seq_bhat(1), 2);
        assert_eq!(seq_chat(1), 2);
        // F-group a2 moments: 2, 8, 32, 148, 712
        let f_a2 = [1i128, 2, 8, 32, 148, 712];
        for (n, &v) in f_a2.iter().enumerate() {
            assert_eq!(seq_bhat(n as u32), v);
        }
    }
}

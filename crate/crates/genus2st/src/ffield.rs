//! Exact arithmetic in `F_p` and `F_{p^2}` for odd primes `p`, plus the
//! quadratic-character machinery that every counting loop leans on.
//!
//! Moduli stay below 2^32, so products fit in a `u128` without tricks.
//! Primality of `p` is the caller's job; primes come out of a sieve.

/// `a * b mod p` via widening multiplication.
#[inline(always)]
pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline(always)]
pub fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline(always)]
pub fn submod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

/// `a^e mod p` by square-and-multiply.
pub fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Modular inverse by extended Euclid. Panics if `gcd(a, p) != 1`.
pub fn invmod(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    assert!(r0 == 1, "invmod: {a} not invertible mod {p}");
    s0.rem_euclid(p as i128) as u64
}

/// Reduce a signed integer into `[0, p)`.
#[inline(always)]
pub fn reduce_i64(a: i64, p: u64) -> u64 {
    a.rem_euclid(p as i64) as u64
}

/// Legendre symbol `(a | p)` for an odd prime `p`, by Euler's criterion.
///
/// Returns 0 when `p | a`, +1 on nonzero squares, -1 otherwise.
/// Multiplicative in `a`. Rejects even `p`; primality is caller-validated.
pub fn legendre(a: i64, p: u64) -> i8 {
    assert!(p >= 3 && p % 2 == 1, "legendre: p must be an odd prime, got {p}");
    let a = reduce_i64(a, p);
    if a == 0 {
        return 0;
    }
    let e = powmod(a, (p - 1) / 2, p);
    if e == 1 {
        1
    } else {
        -1
    }
}

/// Smallest positive quadratic nonresidue mod `p`.
pub fn find_nonresidue(p: u64) -> u64 {
    (2..p)
        .find(|&t| legendre(t as i64, p) == -1)
        .expect("every odd prime has a nonresidue >= 2")
}

/// Precomputed quadratic-character table for one prime.
///
/// `chi(a)` is +1 exactly on the (p-1)/2 nonzero squares, 0 at 0, and -1
/// elsewhere. Built once per prime in O(p); read-only afterwards, so it is
/// safe to share across threads.
pub struct QCharTable {
    p: u64,
    table: Vec<i8>,
}

impl QCharTable {
    pub fn new(p: u64) -> Self {
        assert!(p >= 3 && p % 2 == 1);
        let mut table = vec![-1i8; p as usize];
        table[0] = 0;
        let mut sq = 1u64; // x^2 incrementally: (x+1)^2 = x^2 + 2x + 1
        for x in 1..=(p - 1) / 2 {
            table[sq as usize] = 1;
            sq = (sq + 2 * x + 1) % p;
        }
        QCharTable { p, table }
    }

    #[inline(always)]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline(always)]
    pub fn chi(&self, a: u64) -> i8 {
        self.table[a as usize]
    }

    #[inline(always)]
    pub fn chi_i64(&self, a: i64) -> i8 {
        self.table[reduce_i64(a, self.p) as usize]
    }
}

/// Arithmetic context for `F_{p^2} = F_p(sqrt(t))`, `t` a fixed nonresidue.
///
/// Elements are coordinate pairs `(x0, x1)` w.r.t. the basis `{1, sqrt(t)}`.
#[derive(Clone, Copy, Debug)]
pub struct Fp2Ctx {
    pub p: u64,
    pub t: u64,
}

/// An element of `F_{p^2}` as coordinates over the basis `{1, sqrt(t)}`.
pub type Fp2Elem = (u64, u64);

impl Fp2Ctx {
    pub fn new(p: u64) -> Self {
        Fp2Ctx { p, t: find_nonresidue(p) }
    }

    #[inline(always)]
    pub fn add(&self, a: Fp2Elem, b: Fp2Elem) -> Fp2Elem {
        (addmod(a.0, b.0, self.p), addmod(a.1, b.1, self.p))
    }

    #[inline(always)]
    pub fn sub(&self, a: Fp2Elem, b: Fp2Elem) -> Fp2Elem {
        (submod(a.0, b.0, self.p), submod(a.1, b.1, self.p))
    }

    /// `(a0 + a1 w)(b0 + b1 w) = a0 b0 + t a1 b1 + (a0 b1 + a1 b0) w`.
    #[inline(always)]
    pub fn mul(&self, a: Fp2Elem, b: Fp2Elem) -> Fp2Elem {
        let p = self.p;
        let x = addmod(mulmod(a.0, b.0, p), mulmod(self.t, mulmod(a.1, b.1, p), p), p);
        let y = addmod(mulmod(a.0, b.1, p), mulmod(a.1, b.0, p), p);
        (x, y)
    }

    /// Norm to `F_p`: `z * z^p = x0^2 - t x1^2`.
    #[inline(always)]
    pub fn norm(&self, a: Fp2Elem) -> u64 {
        let p = self.p;
        submod(mulmod(a.0, a.0, p), mulmod(self.t, mulmod(a.1, a.1, p), p), p)
    }

    pub fn inv(&self, a: Fp2Elem) -> Fp2Elem {
        let n = invmod(self.norm(a), self.p);
        (mulmod(a.0, n, self.p), mulmod(submod(0, a.1, self.p), n, self.p))
    }

    /// Quadratic character of `F_{p^2}`, computed as the Legendre symbol of
    /// the norm.
    #[inline(always)]
    pub fn char_via(&self, a: Fp2Elem, chi: &QCharTable) -> i8 {
        chi.chi(self.norm(a))
    }

    pub fn char(&self, a: Fp2Elem) -> i8 {
        legendre(self.norm(a) as i64, self.p)
    }
}

/// Integer square root (floor).
pub fn isqrt(n: u128) -> u128 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as u128;
    // correct the float guess
    while x > 0 && x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

/// Square root mod an odd prime by Tonelli-Shanks. `None` for nonresidues.
pub fn sqrtmod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if legendre(a as i64, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(powmod(a, (p + 1) / 4, p));
    }
    // p = 1 mod 4: full Tonelli-Shanks
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = find_nonresidue(p);
    let mut m = s;
    let mut c = powmod(z, q, p);
    let mut t = powmod(a, q, p);
    let mut r = powmod(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0u32;
        let mut tt = t;
        while tt != 1 {
            tt = mulmod(tt, tt, p);
            i += 1;
        }
        let mut b = c;
        for _ in 0..m - i - 1 {
            b = mulmod(b, b, p);
        }
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    Some(r)
}

/// Sieve of Eratosthenes; all primes `<= n` in ascending order.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut is_prime = vec![true; n + 1];
    is_prime[0] = false;
    is_prime[1] = false;
    let mut i = 2;
    while i * i <= n {
        if is_prime[i] {
            let mut j = i * i;
            while j <= n {
                is_prime[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (2..=n as u64).filter(|&k| is_prime[k as usize]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Brute-force residue set: squares mod p by enumeration.
    fn squares(p: u64) -> Vec<bool> {
        let mut s = vec![false; p as usize];
        for x in 1..p {
            s[mulmod(x, x, p) as usize] = true;
        }
        s
    }

    #[test]
    fn legendre_small_cases() {
        // squares mod 7 are {1, 2, 4}
        let sq7 = squares(7);
        assert!(sq7[1] && sq7[2] && sq7[4] && !sq7[3] && !sq7[5] && !sq7[6]);
        assert_eq!(legendre(0, 7), 0);
        assert_eq!(legendre(2, 7), 1);
        assert_eq!(legendre(3, 7), -1);
    }

    #[test]
    fn legendre_matches_enumeration() {
        for &p in &[3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            let sq = squares(p);
            for a in 0..p {
                let want = if a == 0 {
                    0
                } else if sq[a as usize] {
                    1
                } else {
                    -1
                };
                assert_eq!(legendre(a as i64, p), want, "p={p} a={a}");
            }
        }
    }

    #[test]
    fn legendre_multiplicative_and_balanced() {
        for &p in &[13u64, 101, 257] {
            let mut sum = 0i64;
            for a in 0..p {
                sum += legendre(a as i64, p) as i64;
            }
            assert_eq!(sum, 0, "character sums to zero over F_{p}");
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            for _ in 0..200 {
                let a = rng.gen_range(1..p) as i64;
                let b = rng.gen_range(1..p) as i64;
                assert_eq!(legendre(a * b, p), legendre(a, p) * legendre(b, p));
            }
        }
    }

    #[test]
    fn nonresidue_values() {
        // squares mod 7 = {1,2,4}; mod 3 = {1}; mod 5 = {1,4}
        assert_eq!(find_nonresidue(7), 3);
        assert_eq!(find_nonresidue(3), 2);
        assert_eq!(find_nonresidue(5), 2);
    }

    #[test]
    fn char_table_counts() {
        for &p in &[11u64, 13, 1009] {
            let t = QCharTable::new(p);
            assert_eq!(t.chi(0), 0);
            let plus = (0..p).filter(|&a| t.chi(a) == 1).count() as u64;
            assert_eq!(plus, (p - 1) / 2);
            for a in 0..p {
                assert_eq!(t.chi(a), legendre(a as i64, p));
            }
        }
    }

    #[test]
    fn fp2_char_zero_and_sqrt_t() {
        let ctx = Fp2Ctx::new(3);
        assert_eq!(ctx.t, 2);
        assert_eq!(ctx.char((0, 0)), 0);
        // z = sqrt(t): norm = -t = -2 = 1 mod 3, a square
        assert_eq!(ctx.char((0, 1)), legendre(-2, 3));
        assert_eq!(ctx.char((0, 1)), 1);
    }

    #[test]
    fn fp2_char_matches_brute_force_squaring() {
        for &p in &[3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            let ctx = Fp2Ctx::new(p);
            // enumerate all squares in F_{p^2}
            let idx = |z: Fp2Elem| (z.0 * p + z.1) as usize;
            let mut sq = vec![false; (p * p) as usize];
            for x0 in 0..p {
                for x1 in 0..p {
                    let z = ctx.mul((x0, x1), (x0, x1));
                    sq[idx(z)] = true;
                }
            }
            for x0 in 0..p {
                for x1 in 0..p {
                    let z = (x0, x1);
                    let want = if z == (0, 0) {
                        0
                    } else if sq[idx(z)] {
                        1
                    } else {
                        -1
                    };
                    assert_eq!(ctx.char(z), want, "p={p} z={z:?}");
                }
            }
        }
    }

    #[test]
    fn fp2_field_axioms_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for &p in &[7u64, 101, 65537] {
            let ctx = Fp2Ctx::new(p);
            let rand_el = |rng: &mut ChaCha8Rng| (rng.gen_range(0..p), rng.gen_range(0..p));
            for _ in 0..300 {
                let a = rand_el(&mut rng);
                let b = rand_el(&mut rng);
                let c = rand_el(&mut rng);
                // associativity and commutativity
                assert_eq!(ctx.mul(ctx.mul(a, b), c), ctx.mul(a, ctx.mul(b, c)));
                assert_eq!(ctx.mul(a, b), ctx.mul(b, a));
                // distributivity
                assert_eq!(ctx.mul(a, ctx.add(b, c)), ctx.add(ctx.mul(a, b), ctx.mul(a, c)));
                // inverses
                if a != (0, 0) {
                    assert_eq!(ctx.mul(a, ctx.inv(a)), (1, 0));
                }
            }
            // squares map to +1
            for _ in 0..50 {
                let a = rand_el(&mut rng);
                if a != (0, 0) {
                    assert_eq!(ctx.char(ctx.mul(a, a)), 1);
                }
            }
        }
    }

    #[test]
    fn sqrtmod_roundtrip() {
        for &p in &[3u64, 5, 13, 17, 97, 65537] {
            for a in 0..p.min(200) {
                match sqrtmod(a, p) {
                    Some(r) => assert_eq!(mulmod(r, r, p), a % p),
                    None => assert_eq!(legendre(a as i64, p), -1),
                }
            }
        }
    }

    #[test]
    fn isqrt_exact() {
        for n in 0..2000u128 {
            let s = isqrt(n);
            assert!(s * s <= n && (s + 1) * (s + 1) > n);
        }
        assert_eq!(isqrt((1u128 << 64) - 1), u32::MAX as u128);
    }

    #[test]
    fn primes_sieve() {
        let ps = primes_up_to(100);
        assert_eq!(ps.len(), 25);
        assert_eq!(ps[0], 2);
        assert_eq!(*ps.last().unwrap(), 97);
    }
}

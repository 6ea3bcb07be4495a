//! Mumford representation and Cantor composition/reduction for the
//! Jacobian of an odd-degree genus-2 model `y^2 = F(x)`, `F` monic of
//! degree 5, generic over the coefficient field.

use super::field::Field;
use num_bigint::BigUint;
use rand::Rng;

/// Dense polynomial, ascending coefficients, no trailing zeros.
pub type Poly<E> = Vec<E>;

pub fn deg<E>(a: &Poly<E>) -> isize {
    a.len() as isize - 1
}

fn trim<F: Field>(f: &F, a: &mut Poly<F::E>) {
    while a.last().map(|c| f.is_zero(c)) == Some(true) {
        a.pop();
    }
}

pub fn poly_add<F: Field>(f: &F, a: &Poly<F::E>, b: &Poly<F::E>) -> Poly<F::E> {
    let mut out = vec![f.zero(); a.len().max(b.len())];
    for (i, &c) in a.iter().enumerate() {
        out[i] = c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] = f.add(out[i], c);
    }
    trim(f, &mut out);
    out
}

pub fn poly_sub<F: Field>(f: &F, a: &Poly<F::E>, b: &Poly<F::E>) -> Poly<F::E> {
    let mut out = vec![f.zero(); a.len().max(b.len())];
    for (i, &c) in a.iter().enumerate() {
        out[i] = c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] = f.sub(out[i], c);
    }
    trim(f, &mut out);
    out
}

pub fn poly_neg<F: Field>(f: &F, a: &Poly<F::E>) -> Poly<F::E> {
    a.iter().map(|&c| f.neg(c)).collect()
}

pub fn poly_mul<F: Field>(f: &F, a: &Poly<F::E>, b: &Poly<F::E>) -> Poly<F::E> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if f.is_zero(&x) {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(f, &mut out);
    out
}

pub fn poly_scale<F: Field>(f: &F, a: &Poly<F::E>, c: F::E) -> Poly<F::E> {
    let mut out: Poly<F::E> = a.iter().map(|&x| f.mul(x, c)).collect();
    trim(f, &mut out);
    out
}

/// Quotient and remainder; divisor must be nonzero.
pub fn poly_divrem<F: Field>(f: &F, a: &Poly<F::E>, b: &Poly<F::E>) -> (Poly<F::E>, Poly<F::E>) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let db = b.len() - 1;
    let lcinv = f.inv(b[db]);
    let mut rem = a.clone();
    trim(f, &mut rem);
    if rem.len() <= db {
        return (vec![], rem);
    }
    let mut q = vec![f.zero(); rem.len() - db];
    while rem.len() > db {
        let dr = rem.len() - 1;
        let c = f.mul(rem[dr], lcinv);
        q[dr - db] = c;
        if !f.is_zero(&c) {
            for i in 0..=db {
                rem[dr - db + i] = f.sub(rem[dr - db + i], f.mul(c, b[i]));
            }
        }
        rem.pop();
        trim(f, &mut rem);
    }
    trim(f, &mut q);
    (q, rem)
}

pub fn poly_rem<F: Field>(f: &F, a: &Poly<F::E>, b: &Poly<F::E>) -> Poly<F::E> {
    poly_divrem(f, a, b).1
}

/// Make monic; zero polynomial passes through.
pub fn poly_monic<F: Field>(f: &F, a: &Poly<F::E>) -> Poly<F::E> {
    match a.last() {
        None => vec![],
        Some(&lc) => {
            if lc == f.one() {
                a.clone()
            } else {
                poly_scale(f, a, f.inv(lc))
            }
        }
    }
}

/// Extended gcd: returns monic `g` with `s a + t b = g`.
pub fn poly_xgcd<F: Field>(
    f: &F,
    a: &Poly<F::E>,
    b: &Poly<F::E>,
) -> (Poly<F::E>, Poly<F::E>, Poly<F::E>) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    trim(f, &mut r0);
    trim(f, &mut r1);
    let (mut s0, mut s1) = (vec![f.one()], vec![]);
    let (mut t0, mut t1) = (vec![], vec![f.one()]);
    while !r1.is_empty() {
        let (q, r) = poly_divrem(f, &r0, &r1);
        let s = poly_sub(f, &s0, &poly_mul(f, &q, &s1));
        let t = poly_sub(f, &t0, &poly_mul(f, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    if let Some(&lc) = r0.last() {
        if lc != f.one() {
            let inv = f.inv(lc);
            r0 = poly_scale(f, &r0, inv);
            s0 = poly_scale(f, &s0, inv);
            t0 = poly_scale(f, &t0, inv);
        }
    }
    (r0, s0, t0)
}

pub fn poly_eval<F: Field>(f: &F, a: &Poly<F::E>, x: F::E) -> F::E {
    let mut acc = f.zero();
    for &c in a.iter().rev() {
        acc = f.add(f.mul(acc, x), c);
    }
    acc
}

/// A reduced divisor class in Mumford form: `u` monic of degree <= 2,
/// `deg v < deg u`, with `u | v^2 - F`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MumfordDivisor<E: Copy + PartialEq + Eq + std::hash::Hash + std::fmt::Debug> {
    pub u: Vec<E>,
    pub v: Vec<E>,
}

/// Jacobian of `y^2 = F(x)`, `F` monic quintic over the field.
pub struct Jacobian<'a, F: Field> {
    pub field: &'a F,
    pub f: Poly<F::E>,
}

impl<'a, F: Field> Jacobian<'a, F> {
    pub fn new(field: &'a F, f: Poly<F::E>) -> Self {
        assert_eq!(f.len(), 6, "expect a quintic model");
        assert_eq!(*f.last().unwrap(), field.one(), "expect a monic model");
        Jacobian { field, f }
    }

    pub fn identity(&self) -> MumfordDivisor<F::E> {
        MumfordDivisor { u: vec![self.field.one()], v: vec![] }
    }

    pub fn is_identity(&self, d: &MumfordDivisor<F::E>) -> bool {
        d.u.len() == 1 && d.v.is_empty()
    }

    pub fn neg(&self, d: &MumfordDivisor<F::E>) -> MumfordDivisor<F::E> {
        let f = self.field;
        let v = poly_rem(f, &poly_neg(f, &d.v), &d.u);
        MumfordDivisor { u: d.u.clone(), v }
    }

    /// Is `(u, v)` a valid reduced divisor? (`u | v^2 - F`)
    pub fn contains(&self, d: &MumfordDivisor<F::E>) -> bool {
        let f = self.field;
        if d.u.len() > 3 || d.v.len() + 1 > d.u.len() {
            return false;
        }
        let diff = poly_sub(f, &poly_mul(f, &d.v, &d.v), &self.f);
        poly_rem(f, &diff, &d.u).is_empty()
    }

    /// Cantor composition followed by reduction to degree <= 2.
    pub fn add(&self, d1: &MumfordDivisor<F::E>, d2: &MumfordDivisor<F::E>) -> MumfordDivisor<F::E> {
        let f = self.field;
        let (u1, v1) = (&d1.u, &d1.v);
        let (u2, v2) = (&d2.u, &d2.v);

        // d = gcd(u1, u2, v1 + v2) = s1 u1 + s2 u2 + s3 (v1 + v2)
        let (g1, e1, e2) = poly_xgcd(f, u1, u2);
        let w = poly_add(f, v1, v2);
        let (d, c1, c2) = poly_xgcd(f, &g1, &w);
        let s1 = poly_mul(f, &c1, &e1);
        let s2 = poly_mul(f, &c1, &e2);
        let s3 = c2;

        let (u, rem) = poly_divrem(f, &poly_mul(f, u1, u2), &poly_mul(f, &d, &d));
        debug_assert!(rem.is_empty());

        // v = (s1 u1 v2 + s2 u2 v1 + s3 (v1 v2 + F)) / d mod u
        let t1 = poly_mul(f, &poly_mul(f, &s1, u1), v2);
        let t2 = poly_mul(f, &poly_mul(f, &s2, u2), v1);
        let t3 = poly_mul(f, &s3, &poly_add(f, &poly_mul(f, v1, v2), &self.f));
        let num = poly_add(f, &poly_add(f, &t1, &t2), &t3);
        let (vq, vrem) = poly_divrem(f, &num, &d);
        debug_assert!(vrem.is_empty());
        let mut u = poly_monic(f, &u);
        let mut v = poly_rem(f, &vq, &u);

        // reduction: u' = (F - v^2)/u, v' = -v mod u'
        while deg(&u) > 2 {
            let diff = poly_sub(f, &self.f, &poly_mul(f, &v, &v));
            let (unew, urem) = poly_divrem(f, &diff, &u);
            debug_assert!(urem.is_empty());
            let unew = poly_monic(f, &unew);
            let vnew = poly_rem(f, &poly_neg(f, &v), &unew);
            u = unew;
            v = vnew;
        }
        MumfordDivisor { u, v }
    }

    /// `n * D` by double-and-add.
    pub fn scalar_mul(&self, d: &MumfordDivisor<F::E>, n: &BigUint) -> MumfordDivisor<F::E> {
        let mut acc = self.identity();
        if n.bits() == 0 {
            return acc;
        }
        for i in (0..n.bits()).rev() {
            acc = self.add(&acc, &acc);
            if n.bit(i) {
                acc = self.add(&acc, d);
            }
        }
        acc
    }

    pub fn scalar_mul_u128(&self, d: &MumfordDivisor<F::E>, n: u128) -> MumfordDivisor<F::E> {
        self.scalar_mul(d, &BigUint::from(n))
    }

    /// A random degree-1 divisor `[(x, y) - infinity]`.
    pub fn random_divisor<R: Rng>(&self, rng: &mut R) -> MumfordDivisor<F::E> {
        let f = self.field;
        loop {
            let x = f.rand_elem(rng);
            let val = poly_eval(f, &self.f, x);
            if let Some(y) = f.sqrt(val, rng) {
                if f.is_zero(&y) && rng.gen::<bool>() {
                    continue; // mostly avoid 2-torsion points
                }
                let u = vec![f.neg(x), f.one()];
                let v = if f.is_zero(&y) { vec![] } else { vec![y] };
                return MumfordDivisor { u, v };
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jacobian::field::PrimeField;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn quintic(field: &PrimeField, coeffs: [i64; 6]) -> Poly<u64> {
        coeffs.iter().map(|&c| crate::ffield::reduce_i64(c, field.p)).collect()
    }

    #[test]
    fn identity_and_inverse_laws() {
        let fld = PrimeField { p: 1009 };
        let f = quintic(&fld, [1, -1, 0, 0, 0, 1]); // x^5 - x + 1
        let jac = Jacobian::new(&fld, f);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let d = jac.random_divisor(&mut rng);
            assert!(jac.contains(&d));
            assert_eq!(jac.add(&d, &jac.identity()), d);
            let n = jac.neg(&d);
            assert!(jac.is_identity(&jac.add(&d, &n)));
        }
    }

    #[test]
    fn commutative_and_associative() {
        let fld = PrimeField { p: 617 };
        let f = quintic(&fld, [3, 0, 1, 0, 0, 1]); // x^5 + x^2 + 3
        let jac = Jacobian::new(&fld, f);
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..40 {
            let a = jac.random_divisor(&mut rng);
            let b = jac.random_divisor(&mut rng);
            let c = jac.random_divisor(&mut rng);
            assert_eq!(jac.add(&a, &b), jac.add(&b, &a));
            let ab_c = jac.add(&jac.add(&a, &b), &c);
            let a_bc = jac.add(&a, &jac.add(&b, &c));
            assert_eq!(ab_c, a_bc);
            assert!(jac.contains(&ab_c));
        }
    }

    #[test]
    fn scalar_mul_matches_repeated_addition() {
        let fld = PrimeField { p: 211 };
        let f = quintic(&fld, [1, 2, 0, 0, 0, 1]);
        let jac = Jacobian::new(&fld, f);
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let d = jac.random_divisor(&mut rng);
        let mut acc = jac.identity();
        for n in 0..25u128 {
            assert_eq!(jac.scalar_mul_u128(&d, n), acc, "n={n}");
            acc = jac.add(&acc, &d);
        }
    }

    #[test]
    fn group_order_kills_divisors() {
        // brute-force the order of J(F_p) from (c1, c2), then check
        // Lagrange on random divisors
        let fld = PrimeField { p: 31 };
        let curve = crate::counting::parse_curve("x^5+x").unwrap();
        let td = crate::counting::trace_datum_naive(&curve, 31).unwrap();
        let n_i = 31i128 * 31 + 1 + td.c1 as i128 * 32 + td.c2 as i128;
        assert!(n_i > 0);
        let n = n_i as u128;
        let f = quintic(&fld, [0, 1, 0, 0, 0, 1]);
        let jac = Jacobian::new(&fld, f);
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..10 {
            let d = jac.random_divisor(&mut rng);
            assert!(jac.is_identity(&jac.scalar_mul_u128(&d, n)));
        }
    }
}

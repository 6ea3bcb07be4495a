//! Moment sequences: the per-group closed forms, and the independent
//! component-averaging route used to cross-validate them.
//!
//! `moment_a1`/`moment_a2` evaluate the closed forms. The component route
//! (`moment_a1_from_components` etc.) averages the per-coset moments over
//! the stored coset multiset; the two must agree for every group and every
//! `n`, which the tests check up to `n = 12`.

use super::data::{Component, GroupId};
use super::seqs::*;

/// One term of an `a1` closed form, evaluated at even `n` (odd moments all
/// vanish since `-1` lies in every group).
#[derive(Clone, Copy, Debug)]
pub enum A1Term {
    /// `(r^2)^{n/2} b_n`
    Bt(i64),
    /// `(r^2)^{n/2} c_n`
    Ct(i64),
    /// bare `0^n`
    Zn,
    /// `b_n^2`
    BSq,
    /// `c_n b_{n+2} / 2`
    Cb2,
    /// `c_n c_{n+2}`
    Cc2,
    /// `c_n c_{n+4} - c_{n+2}^2`
    Usp,
}

/// One term of an `a2` closed form.
#[derive(Clone, Copy, Debug)]
pub enum A2Term {
    /// `b_{i,n}`
    Bi(u8),
    /// `d_{i,n}`
    Di(u8),
    /// `k^n` (with `0^0 = 1`)
    Pc(i64),
    /// `bhat_n`
    BHat,
    /// `chat_n`
    CHat,
    /// `b_n`
    Bn,
    /// `c_n`
    Cn,
    /// `(-1)^n d_n`
    Sd,
    /// `sum_k C(n,k) 2^{n-k} b_k c_k`
    Bch,
    /// `sum_k C(n,k) 2^{n-k} (c_k c_{k+2} - c_{k+1}^2)`
    Usp2,
}

pub struct MomentSpec {
    pub denom: i128,
    pub a1: &'static [(i128, A1Term)],
    pub a2: &'static [(i128, A2Term)],
}

fn eval_a1_term(t: A1Term, n: u32) -> i128 {
    match t {
        A1Term::Bt(r2) => {
            if n % 2 == 1 {
                0
            } else {
                (r2 as i128).pow(n / 2) * seq_b0(n)
            }
        }
        A1Term::Ct(r2) => {
            if n % 2 == 1 {
                0
            } else {
                (r2 as i128).pow(n / 2) * seq_c(n)
            }
        }
        A1Term::Zn => i128::from(n == 0),
        A1Term::BSq => seq_b0(n) * seq_b0(n),
        A1Term::Cb2 => seq_c(n) * seq_b0(n + 2) / 2,
        A1Term::Cc2 => seq_c(n) * seq_c(n + 2),
        A1Term::Usp => seq_usp4_a1(n),
    }
}

fn eval_a2_term(t: A2Term, n: u32) -> i128 {
    match t {
        A2Term::Bi(i) => seq_b(i, n),
        A2Term::Di(i) => seq_d(i, n),
        A2Term::Pc(k) => (k as i128).pow(n),
        A2Term::BHat => seq_bhat(n),
        A2Term::CHat => seq_chat(n),
        A2Term::Bn => seq_b0(n),
        A2Term::Cn => seq_c(n),
        A2Term::Sd => if n % 2 == 0 { seq_d(0, n) } else { -seq_d(0, n) },
        A2Term::Bch => seq_bc_hat(n),
        A2Term::Usp2 => seq_usp4_a2(n),
    }
}

/// `E[a1^n]` for the group, as an exact integer.
pub fn moment_a1(g: GroupId, n: u32) -> i128 {
    let spec = &MOMENTS[g.index()];
    let sum: i128 = spec.a1.iter().map(|&(c, t)| c * eval_a1_term(t, n)).sum();
    assert!(sum % spec.denom == 0, "a1 moment of {g} at n={n} not integral");
    sum / spec.denom
}

/// `E[a2^n]` for the group, as an exact integer.
pub fn moment_a2(g: GroupId, n: u32) -> i128 {
    let spec = &MOMENTS[g.index()];
    let sum: i128 = spec.a2.iter().map(|&(c, t)| c * eval_a2_term(t, n)).sum();
    assert!(sum % spec.denom == 0, "a2 moment of {g} at n={n} not integral");
    sum / spec.denom
}

/// `E[a1^n]` restricted to a single component.
pub fn component_moment_a1(comp: Component, n: u32) -> i128 {
    use Component::*;
    let zn = i128::from(n == 0);
    match comp {
        U1Plus { k } => eval_a1_term(A1Term::Bt(Component::r2_for_k(k)), n),
        SU2Plus { k } => eval_a1_term(A1Term::Ct(Component::r2_for_k(k)), n),
        U1Minus { .. } | SU2Minus | G11AB | G11C | G11AC | G33J => zn,
        G11 => (0..=n).map(|j| binom(n, j) * seq_b0(j) * seq_b0(n - j)).sum(),
        G11A => seq_b0(n),
        G13 => (0..=n).map(|j| binom(n, j) * seq_b0(j) * seq_c(n - j)).sum(),
        G13A => seq_c(n),
        G33 => (0..=n).map(|j| binom(n, j) * seq_c(j) * seq_c(n - j)).sum(),
        USp4 => seq_usp4_a1(n),
    }
}

/// `E[a2^n]` restricted to a single component.
pub fn component_moment_a2(comp: Component, n: u32) -> i128 {
    use Component::*;
    match comp {
        U1Plus { k } => seq_b(Component::r2_for_k(k) as u8, n),
        U1Minus { k } => (2 - Component::r2_for_k(k) as i128).pow(n),
        SU2Plus { k } => seq_d(Component::r2_for_k(k) as u8, n),
        SU2Minus => eval_a2_term(A2Term::Sd, n),
        G11 => seq_bhat(n),
        G11A | G11AB | G13A => 2i128.pow(n),
        G11C => seq_b0(n),
        G11AC => i128::from(n == 0),
        G13 => seq_bc_hat(n),
        G33 => seq_chat(n),
        G33J => seq_c(n),
        USp4 => seq_usp4_a2(n),
    }
}

/// `E[a1^n]` by averaging the stored coset multiset; must equal
/// [`moment_a1`], which evaluates the independently transcribed closed form.
pub fn moment_a1_from_components(g: GroupId, n: u32) -> i128 {
    let rec = g.record();
    let sum: i128 = rec
        .components
        .iter()
        .map(|&(comp, m)| m as i128 * component_moment_a1(comp, n))
        .sum();
    assert!(sum % rec.c as i128 == 0, "component a1 average of {g} at n={n} not integral");
    sum / rec.c as i128
}

/// `E[a2^n]` by averaging the stored coset multiset.
pub fn moment_a2_from_components(g: GroupId, n: u32) -> i128 {
    let rec = g.record();
    let sum: i128 = rec
        .components
        .iter()
        .map(|&(comp, m)| m as i128 * component_moment_a2(comp, n))
        .sum();
    assert!(sum % rec.c as i128 == 0, "component a2 average of {g} at n={n} not integral");
    sum / rec.c as i128
}

/// `z_1 = c * Pr[a1 = 0]`: the number of components with vanishing trace.
pub fn z1(g: GroupId) -> u32 {
    g.record()
        .components
        .iter()
        .filter(|(comp, _)| comp.a1_is_zero())
        .map(|&(_, m)| m)
        .sum()
}

/// `z_2 = [z_{2,-2}, ..., z_{2,2}]`: component counts of the `a2` atoms at
/// `-2, -1, 0, 1, 2`.
pub fn z2(g: GroupId) -> [u32; 5] {
    let mut z = [0u32; 5];
    for &(comp, m) in g.record().components {
        if let Some(v) = comp.a2_atom() {
            z[(v + 2) as usize] += m;
        }
    }
    z
}

/// The 11-integer signature distinguishing the 55 groups:
/// `(zhat_{1,0}, zhat_{2,-2..2}, E[a1^2], E[a1^4], E[a2], E[a2^2], E[a2^3])`
/// with `zhat_{i,j} = 48 z_{i,j} / c`.
pub fn signature(g: GroupId) -> crate::survey::Signature {
    let c = g.record().c;
    let zh = |z: u32| (48 * z / c) as i64;
    let z2v = z2(g);
    crate::survey::Signature([
        zh(z1(g)),
        zh(z2v[0]),
        zh(z2v[1]),
        zh(z2v[2]),
        zh(z2v[3]),
        zh(z2v[4]),
        moment_a1(g, 2) as i64,
        moment_a1(g, 4) as i64,
        moment_a2(g, 1) as i64,
        moment_a2(g, 2) as i64,
        moment_a2(g, 3) as i64,
    ])
}

use A1Term::*;
use A2Term::*;

macro_rules! ms {
    ($den:expr, [$(($c1:expr, $t1:expr)),+], [$(($c2:expr, $t2:expr)),+]) => {
        MomentSpec { denom: $den, a1: &[$(($c1, $t1)),+], a2: &[$(($c2, $t2)),+] }
    };
}

/// Closed forms for the `a1` and `a2` moment sequences, one per group, in
/// the canonical order of `GroupId::all()`.
pub static MOMENTS: [MomentSpec; 55] = [
    // C1
    ms!(1, [(1, Bt(4))], [(1, Bi(4))]),
    // C2
    ms!(2, [(1, Bt(4)), (1, Bt(0))], [(1, Bi(4)), (1, Bi(0))]),
    // C3
    ms!(3, [(1, Bt(4)), (2, Bt(1))], [(1, Bi(4)), (2, Bi(1))]),
    // C4
    ms!(4, [(1, Bt(4)), (1, Bt(0)), (2, Bt(2))], [(1, Bi(4)), (1, Bi(0)), (2, Bi(2))]),
    // C6
    ms!(6, [(1, Bt(4)), (1, Bt(0)), (2, Bt(1)), (2, Bt(3))],
        [(1, Bi(4)), (1, Bi(0)), (2, Bi(1)), (2, Bi(3))]),
    // D2
    ms!(4, [(1, Bt(4)), (3, Bt(0))], [(1, Bi(4)), (3, Bi(0))]),
    // D3
    ms!(6, [(1, Bt(4)), (3, Bt(0)), (2, Bt(1))], [(1, Bi(4)), (3, Bi(0)), (2, Bi(1))]),
    // D4
    ms!(8, [(1, Bt(4)), (5, Bt(0)), (2, Bt(2))], [(1, Bi(4)), (5, Bi(0)), (2, Bi(2))]),
    // D6
    ms!(12, [(1, Bt(4)), (7, Bt(0)), (2, Bt(1)), (2, Bt(3))],
        [(1, Bi(4)), (7, Bi(0)), (2, Bi(1)), (2, Bi(3))]),
    // T
    ms!(12, [(1, Bt(4)), (3, Bt(0)), (8, Bt(1))], [(1, Bi(4)), (3, Bi(0)), (8, Bi(1))]),
    // O
    ms!(24, [(1, Bt(4)), (9, Bt(0)), (8, Bt(1)), (6, Bt(2))],
        [(1, Bi(4)), (9, Bi(0)), (8, Bi(1)), (6, Bi(2))]),
    // J(C1)
    ms!(2, [(1, Bt(4)), (1, Bt(0))], [(1, Bi(4)), (1, Pc(-2))]),
    // J(C2)
    ms!(4, [(1, Bt(4)), (3, Bt(0))], [(1, Bi(4)), (1, Bi(0)), (1, Pc(2)), (1, Pc(-2))]),
    // J(C3)
    ms!(6, [(1, Bt(4)), (3, Bt(0)), (2, Bt(1))],
        [(1, Bi(4)), (2, Bi(1)), (2, Pc(1)), (1, Pc(-2))]),
    // J(C4)
    ms!(8, [(1, Bt(4)), (5, Bt(0)), (2, Bt(2))],
        [(1, Bi(4)), (1, Bi(0)), (2, Bi(2)), (2, Pc(0)), (1, Pc(2)), (1, Pc(-2))]),
    // J(C6)
    ms!(12, [(1, Bt(4)), (7, Bt(0)), (2, Bt(1)), (2, Bt(3))],
        [(1, Bi(4)), (1, Bi(0)), (2, Bi(1)), (2, Bi(3)), (2, Pc(1)), (2, Pc(-1)), (1, Pc(2)), (1, Pc(-2))]),
    // J(D2)
    ms!(8, [(1, Bt(4)), (7, Bt(0))], [(1, Bi(4)), (3, Bi(0)), (3, Pc(2)), (1, Pc(-2))]),
    // J(D3)
    ms!(12, [(1, Bt(4)), (9, Bt(0)), (2, Bt(1))],
        [(1, Bi(4)), (3, Bi(0)), (3, Pc(2)), (2, Bi(1)), (2, Pc(1)), (1, Pc(-2))]),
    // J(D4)
    ms!(16, [(1, Bt(4)), (13, Bt(0)), (2, Bt(2))],
        [(1, Bi(4)), (5, Bi(0)), (5, Pc(2)), (2, Bi(2)), (2, Pc(0)), (1, Pc(-2))]),
    // J(D6)
    ms!(24, [(1, Bt(4)), (19, Bt(0)), (2, Bt(1)), (2, Bt(3))],
        [(1, Bi(4)), (2, Bi(1)), (2, Bi(3)), (2, Pc(1)), (2, Pc(-1)), (7, Bi(0)), (7, Pc(2)), (1, Pc(-2))]),
    // J(T)
    ms!(24, [(1, Bt(4)), (15, Bt(0)), (8, Bt(1))],
        [(1, Bi(4)), (3, Bi(0)), (3, Pc(2)), (8, Bi(1)), (8, Pc(1)), (1, Pc(-2))]),
    // J(O)
    ms!(48, [(1, Bt(4)), (33, Bt(0)), (8, Bt(1)), (6, Bt(2))],
        [(1, Bi(4)), (9, Bi(0)), (9, Pc(2)), (8, Bi(1)), (8, Pc(1)), (6, Bi(2)), (6, Pc(0)), (1, Pc(-2))]),
    // C_{2,1}
    ms!(2, [(1, Bt(4)), (1, Bt(0))], [(1, Bi(4)), (1, Pc(2))]),
    // C_{4,1}
    ms!(4, [(1, Bt(4)), (3, Bt(0))], [(1, Bi(4)), (1, Bi(0)), (2, Pc(0))]),
    // C_{6,1}
    ms!(6, [(1, Bt(4)), (3, Bt(0)), (2, Bt(1))],
        [(1, Bi(4)), (2, Bi(1)), (2, Pc(-1)), (1, Pc(2))]),
    // D_{2,1}
    ms!(4, [(1, Bt(4)), (3, Bt(0))], [(1, Bi(4)), (1, Bi(0)), (2, Pc(2))]),
    // D_{4,1}
    ms!(8, [(1, Bt(4)), (7, Bt(0))], [(1, Bi(4)), (3, Bi(0)), (2, Pc(2)), (2, Pc(0))]),
    // D_{6,1}
    ms!(12, [(1, Bt(4)), (9, Bt(0)), (2, Bt(1))],
        [(1, Bi(4)), (3, Bi(0)), (2, Bi(1)), (2, Pc(-1)), (4, Pc(2))]),
    // D_{3,2}
    ms!(6, [(1, Bt(4)), (3, Bt(0)), (2, Bt(1))], [(1, Bi(4)), (2, Bi(1)), (3, Pc(2))]),
    // D_{4,2}
    ms!(8, [(1, Bt(4)), (5, Bt(0)), (2, Bt(2))],
        [(1, Bi(4)), (1, Bi(0)), (2, Bi(2)), (4, Pc(2))]),
    // D_{6,2}
    ms!(12, [(1, Bt(4)), (7, Bt(0)), (2, Bt(1)), (2, Bt(3))],
        [(1, Bi(4)), (1, Bi(0)), (2, Bi(1)), (2, Bi(3)), (6, Pc(2))]),
    // O_1
    ms!(24, [(1, Bt(4)), (15, Bt(0)), (8, Bt(1))],
        [(1, Bi(4)), (3, Bi(0)), (8, Bi(1)), (6, Pc(2)), (6, Pc(0))]),
    // E1
    ms!(1, [(1, Ct(4))], [(1, Di(4))]),
    // E2
    ms!(2, [(1, Ct(4)), (1, Ct(0))], [(1, Di(4)), (1, Di(0))]),
    // E3
    ms!(3, [(1, Ct(4)), (2, Ct(1))], [(1, Di(4)), (2, Di(1))]),
    // E4
    ms!(4, [(1, Ct(4)), (1, Ct(0)), (2, Ct(2))], [(1, Di(4)), (1, Di(0)), (2, Di(2))]),
    // E6
    ms!(6, [(1, Ct(4)), (1, Ct(0)), (2, Ct(1)), (2, Ct(3))],
        [(1, Di(4)), (1, Di(0)), (2, Di(1)), (2, Di(3))]),
    // J(E1)
    ms!(2, [(1, Ct(4)), (1, Ct(0))], [(1, Di(4)), (1, Sd)]),
    // J(E2)
    ms!(4, [(1, Ct(4)), (3, Ct(0))], [(1, Di(4)), (1, Di(0)), (2, Sd)]),
    // J(E3)
    ms!(6, [(1, Ct(4)), (3, Ct(0)), (2, Ct(1))], [(1, Di(4)), (2, Di(1)), (3, Sd)]),
    // J(E4)
    ms!(8, [(1, Ct(4)), (5, Ct(0)), (2, Ct(2))], [(1, Di(4)), (1, Di(0)), (2, Di(2)), (4, Sd)]),
    // J(E6)
    ms!(12, [(1, Ct(4)), (7, Ct(0)), (2, Ct(1)), (2, Ct(3))],
        [(1, Di(4)), (1, Di(0)), (2, Di(1)), (2, Di(3)), (6, Sd)]),
    // F
    ms!(1, [(1, BSq)], [(1, BHat)]),
    // F_a
    ms!(2, [(1, Bt(1)), (1, BSq)], [(1, BHat), (1, Pc(2))]),
    // F_c
    ms!(2, [(1, BSq), (1, Zn)], [(1, BHat), (1, Bn)]),
    // F_{ab}
    ms!(2, [(1, BSq), (1, Zn)], [(1, BHat), (1, Pc(2))]),
    // F_{ac}
    ms!(4, [(1, BSq), (3, Zn)], [(1, BHat), (2, Pc(0)), (1, Pc(2))]),
    // F_{a,b}
    ms!(4, [(1, BSq), (2, Bt(1)), (1, Zn)], [(1, BHat), (3, Pc(2))]),
    // F_{ab,c}
    ms!(4, [(1, BSq), (3, Zn)], [(1, BHat), (2, Bn), (1, Pc(2))]),
    // F_{a,b,c}
    ms!(8, [(1, BSq), (2, Bt(1)), (5, Zn)], [(1, BHat), (2, Bn), (2, Pc(0)), (3, Pc(2))]),
    // G_{1,3}
    ms!(1, [(1, Cb2)], [(1, Bch)]),
    // N(G_{1,3})
    ms!(2, [(1, Cb2), (1, Ct(1))], [(1, Bch), (1, Pc(2))]),
    // G_{3,3}
    ms!(1, [(1, Cc2)], [(1, CHat)]),
    // N(G_{3,3})
    ms!(2, [(1, Cc2), (1, Zn)], [(1, CHat), (1, Cn)]),
    // USp(4)
    ms!(1, [(1, Usp)], [(1, Usp2)]),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moment_spot_values() {
        assert_eq!(moment_a1(GroupId::C1, 2), 8);
        assert_eq!(moment_a1(GroupId::C1, 6), 1280);
        assert_eq!(moment_a1(GroupId::USp4, 10), 594);
        for g in GroupId::all() {
            assert_eq!(moment_a1(g, 1), 0, "{g}: odd a1 moments vanish");
            assert_eq!(moment_a1(g, 0), 1);
            assert_eq!(moment_a2(g, 0), 1);
        }
        let t_a2: Vec<i128> = (1..=5).map(|n| moment_a2(GroupId::T, n)).collect();
        assert_eq!(t_a2, vec![1, 4, 12, 52, 236]);
        let usp_a2: Vec<i128> = (1..=5).map(|n| moment_a2(GroupId::USp4, n)).collect();
        assert_eq!(usp_a2, vec![1, 2, 4, 10, 27]);
        for n in 0..=12 {
            assert_eq!(moment_a2(GroupId::Fa, n), moment_a2(GroupId::Fab, n));
        }
    }

    #[test]
    fn closed_forms_match_component_averages() {
        for g in GroupId::all() {
            for n in 0..=12 {
                assert_eq!(
                    moment_a1(g, n),
                    moment_a1_from_components(g, n),
                    "{g} a1 n={n}"
                );
                assert_eq!(
                    moment_a2(g, n),
                    moment_a2_from_components(g, n),
                    "{g} a2 n={n}"
                );
            }
        }
    }

    #[test]
    fn moments_nonnegative_and_jensen() {
        for g in GroupId::all() {
            for n in (0..=12).step_by(2) {
                assert!(moment_a1(g, n) >= 0);
                assert!(moment_a2(g, n) >= 0);
            }
            let e1 = moment_a2(g, 1);
            let e2 = moment_a2(g, 2);
            assert!(e2 >= e1 * e1, "{g}: E[a2^2] >= E[a2]^2");
        }
    }

    #[test]
    fn signature_examples() {
        let s = signature(GroupId::C1);
        assert_eq!(&s.0[..6], &[0, 0, 0, 0, 0, 0]);
        let u = signature(GroupId::USp4);
        assert_eq!(&u.0[6..], &[1, 3, 1, 2, 4]);
    }
}

//! Density functions of `a1` and `a2` for each group: a continuous part
//! plus a list of atoms, reported separately so delta masses never hide in
//! a histogram bin.
//!
//! One-dimensional components have elementary closed forms. For the
//! two-dimensional identity components (`U(1)xU(1)`, `U(1)xSU(2)`,
//! `SU(2)xSU(2)`, and the full group) only the joint density is in closed
//! form; the marginals are computed by adaptive quadrature, which is the
//! contract here (tolerance 1e-9 per evaluation).

use super::data::{Component, GroupId};
use crate::numeric::tanh_sinh_ext;
use std::f64::consts::PI;

/// Tolerance for the inner marginal quadratures.
const MARGINAL_TOL: f64 = 1e-9;

/// Which coefficient a density describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coeff {
    A1,
    A2,
}

/// `rho(a1, a2)`: positive exactly on the interior of the allowed region.
#[inline]
pub fn rho(a1: f64, a2: f64) -> f64 {
    (a1 * a1 - 4.0 * a2 + 8.0) * (a2 - 2.0 * a1 + 2.0) * (a2 + 2.0 * a1 + 2.0)
}

/// Joint density of `(a1, a2)` for the full group: `(1/4pi^2) sqrt(max(rho, 0))`.
pub fn joint_density_usp4(a1: f64, a2: f64) -> f64 {
    let r = rho(a1, a2);
    if r <= 0.0 {
        0.0
    } else {
        r.sqrt() / (4.0 * PI * PI)
    }
}

fn is_2d(comp: Component) -> bool {
    matches!(
        comp,
        Component::G11 | Component::G13 | Component::G33 | Component::USp4
    )
}

/// Shared shape of the four 2d joints: `coef * num * sqrt(rho-combination)`
/// evaluated from the three factors `p1, p2, p3` (all positive inside the
/// region) and, for `U(1)xSU(2)`, the extra numerator.
#[inline]
fn joint_from_factors(comp: Component, p1: f64, p2: f64, p3: f64, num_g13: f64) -> f64 {
    match comp {
        Component::G11 => 2.0 / (PI * PI * (p1 * p2 * p3).sqrt()),
        Component::G13 => num_g13 / (2.0 * PI * PI * (p1 * p2 * p3).sqrt()),
        Component::G33 => (p2 * p3 / p1).sqrt() / (2.0 * PI * PI),
        Component::USp4 => (p1 * p2 * p3).sqrt() / (4.0 * PI * PI),
        _ => unreachable!("not a 2d component"),
    }
}

/// Marginal in `a1` of a 2d component, by quadrature over the `a2` section.
///
/// The factors of `rho` vanishing at the section endpoints are evaluated
/// from the quadrature's exact endpoint offsets, so the integrand stays
/// accurate arbitrarily close to the singularities.
fn marginal_a1(comp: Component, t: f64) -> f64 {
    let t = t.abs(); // all four joints are even in a1
    if t >= 4.0 {
        return 0.0;
    }
    let lo = 2.0 * t - 2.0;
    let hi = 0.25 * t * t + 2.0;
    tanh_sinh_ext(
        |_, from_lo, from_hi| {
            let p1 = 4.0 * from_hi;
            let p2 = from_lo;
            let p3 = from_lo + 4.0 * t;
            let num = 2.0 * from_lo + t * (4.0 - t);
            joint_from_factors(comp, p1, p2, p3, num)
        },
        lo,
        hi,
        MARGINAL_TOL,
    )
}

/// Marginal in `a2` of a 2d component; the `a1` section is symmetric and
/// splits in two for `t > 2`.
fn marginal_a2(comp: Component, t: f64) -> f64 {
    if !(-2.0..6.0).contains(&t) {
        return 0.0;
    }
    let outer = 0.5 * (t + 2.0);
    if t <= 2.0 {
        // integrate a1 over (0, outer), doubled; `8 - 4t >= 0` keeps p1 stable
        let c = 8.0 - 4.0 * t;
        2.0 * tanh_sinh_ext(
            |a1, from_lo, from_hi| {
                let p1 = from_lo * from_lo + c;
                let p2 = 2.0 * from_hi;
                let p3 = 2.0 * (outer + a1);
                let num = 0.25 * (6.0 - t) * (t + 2.0) + from_hi * (outer + a1);
                joint_from_factors(comp, p1, p2, p3, num)
            },
            0.0,
            outer,
            MARGINAL_TOL,
        )
    } else {
        let inner = 2.0 * (t - 2.0).sqrt();
        if inner >= outer {
            return 0.0;
        }
        2.0 * tanh_sinh_ext(
            |a1, from_lo, from_hi| {
                let p1 = from_lo * (from_lo + 2.0 * inner);
                let p2 = 2.0 * from_hi;
                let p3 = t + 2.0 + 2.0 * a1;
                let num = 0.25 * (6.0 - t) * (t + 2.0) + from_hi * (outer + a1);
                joint_from_factors(comp, p1, p2, p3, num)
            },
            inner,
            outer,
            MARGINAL_TOL,
        )
    }
}

/// Continuous part of the density of `a1` or `a2` on one component.
pub fn component_density(comp: Component, coeff: Coeff, t: f64) -> f64 {
    use Component::*;
    let arcsine = |t: f64, four_r2: f64| {
        if t * t < four_r2 {
            1.0 / (PI * (four_r2 - t * t).sqrt())
        } else {
            0.0
        }
    };
    let semicircle = |t: f64, r2: f64| {
        // density of r * a_SU2 at t: sqrt(4 r^2 - t^2) / (2 pi r^2)
        if t * t < 4.0 * r2 {
            (4.0 * r2 - t * t).sqrt() / (2.0 * PI * r2)
        } else {
            0.0
        }
    };
    match (comp, coeff) {
        (U1Plus { k }, Coeff::A1) => {
            let r2 = Component::r2_for_k(k) as f64;
            if r2 == 0.0 {
                0.0 // atom at 0
            } else {
                arcsine(t, 4.0 * r2)
            }
        }
        (U1Plus { k }, Coeff::A2) => {
            let r2 = Component::r2_for_k(k) as f64;
            let u = r2 - t;
            if u * u < 4.0 {
                1.0 / (PI * (4.0 - u * u).sqrt())
            } else {
                0.0
            }
        }
        (U1Minus { .. }, _) => 0.0,
        (SU2Plus { k }, Coeff::A1) => {
            let r2 = Component::r2_for_k(k) as f64;
            if r2 == 0.0 {
                0.0
            } else {
                semicircle(t, r2)
            }
        }
        (SU2Plus { k }, Coeff::A2) => {
            let r2 = Component::r2_for_k(k) as f64;
            let u = t - r2 + 2.0; // a_SU2^2, in (0, 4)
            if u > 0.0 && u < 4.0 {
                (4.0 / u - 1.0).sqrt() / (2.0 * PI)
            } else {
                0.0
            }
        }
        (SU2Minus, Coeff::A1) => 0.0,
        (SU2Minus, Coeff::A2) => {
            let u = 2.0 - t;
            if u > 0.0 && u < 4.0 {
                (4.0 / u - 1.0).sqrt() / (2.0 * PI)
            } else {
                0.0
            }
        }
        (G11A, Coeff::A1) => arcsine(t, 4.0),
        (G11A, Coeff::A2) => 0.0,
        (G11AB | G11AC, _) => 0.0,
        (G11C, Coeff::A1) => 0.0,
        (G11C, Coeff::A2) => arcsine(t, 4.0),
        (G13A, Coeff::A1) => semicircle(t, 1.0),
        (G13A, Coeff::A2) => 0.0,
        (G33J, Coeff::A1) => 0.0,
        (G33J, Coeff::A2) => semicircle(t, 1.0),
        (c, Coeff::A1) if is_2d(c) => marginal_a1(c, t),
        (c, Coeff::A2) if is_2d(c) => marginal_a2(c, t),
        _ => unreachable!(),
    }
}

/// Atom carried by one component for the given coefficient, if any.
pub fn component_atom(comp: Component, coeff: Coeff) -> Option<f64> {
    match coeff {
        Coeff::A1 => {
            if comp.a1_is_zero() || matches!(comp, Component::U1Plus { k: 2 }) {
                Some(0.0)
            } else {
                None
            }
        }
        Coeff::A2 => comp.a2_atom().map(|v| v as f64),
    }
}

/// Continuous density value at `t`, plus the full atom list
/// `(location, mass)`, for the group's `a1` or `a2` distribution.
pub fn density(g: GroupId, coeff: Coeff, t: f64) -> (f64, Vec<(f64, f64)>) {
    let rec = g.record();
    let c = rec.c as f64;
    let mut cont = 0.0;
    let mut atoms: Vec<(f64, f64)> = Vec::new();
    for &(comp, m) in rec.components {
        let w = m as f64 / c;
        match component_atom(comp, coeff) {
            Some(loc) => {
                if let Some(e) = atoms.iter_mut().find(|e| e.0 == loc) {
                    e.1 += w;
                } else {
                    atoms.push((loc, w));
                }
            }
            None => cont += w * component_density(comp, coeff, t),
        }
    }
    atoms.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    (cont, atoms)
}

/// Density of `a1` at `t` for the group (continuous part, atoms).
pub fn density_a1(g: GroupId, t: f64) -> (f64, Vec<(f64, f64)>) {
    density(g, Coeff::A1, t)
}

/// Density of `a2` at `t` for the group (continuous part, atoms).
pub fn density_a2(g: GroupId, t: f64) -> (f64, Vec<(f64, f64)>) {
    density(g, Coeff::A2, t)
}

/// Support interval of the coefficient.
pub fn support(coeff: Coeff) -> (f64, f64) {
    match coeff {
        Coeff::A1 => (-4.0, 4.0),
        Coeff::A2 => (-2.0, 6.0),
    }
}

/// Natural split points of the continuous part, for outer quadratures:
/// component support endpoints and the point where 2d sections change shape.
pub fn density_cuts(g: GroupId, coeff: Coeff) -> Vec<f64> {
    let mut cuts = Vec::new();
    for &(comp, _) in g.record().components {
        use Component::*;
        match (comp, coeff) {
            (U1Plus { k } | SU2Plus { k }, Coeff::A1) => {
                let r2 = Component::r2_for_k(k) as f64;
                let e = 2.0 * r2.sqrt();
                cuts.push(-e);
                cuts.push(e);
            }
            (U1Plus { k } | SU2Plus { k }, Coeff::A2) => {
                let r2 = Component::r2_for_k(k) as f64;
                cuts.push(r2 - 2.0);
                cuts.push(r2 + 2.0);
            }
            (SU2Minus, Coeff::A2) | (G11C | G33J, Coeff::A2) | (G11A | G13A, Coeff::A1) => {
                cuts.push(-2.0);
                cuts.push(2.0);
            }
            (c, _) if is_2d(c) => {
                cuts.push(0.0);
                cuts.push(2.0);
            }
            _ => {}
        }
    }
    cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    cuts.dedup();
    cuts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::moments::{moment_a1, moment_a2};
    use crate::numeric::integrate_split;

    #[test]
    fn c1_density_closed_form() {
        // single component with r = -2: arcsine on (-4, 4)
        for &t in &[0.0, 1.0, -3.5, 3.9] {
            let (d, atoms) = density_a1(GroupId::C1, t);
            assert!(atoms.is_empty());
            assert!((d - 1.0 / (PI * (16.0 - t * t).sqrt())).abs() < 1e-15);
        }
        assert_eq!(density_a1(GroupId::C1, 4.1).0, 0.0);
    }

    #[test]
    fn jc1_atom_mass() {
        let (_, atoms) = density_a2(GroupId::JC1, 0.0);
        assert_eq!(atoms, vec![(-2.0, 0.5)]);
    }

    #[test]
    fn usp4_peak_value() {
        let peak = joint_density_usp4(0.0, 2.0 / 3.0);
        let expect = 8.0 / (PI * PI * 27.0f64.sqrt());
        assert!((peak - expect).abs() < 1e-14);
        // stationary: nearby values are smaller
        for &(da1, da2) in &[(0.01, 0.0), (-0.01, 0.0), (0.0, 0.01), (0.0, -0.01)] {
            assert!(joint_density_usp4(da1, 2.0 / 3.0 + da2) < peak);
        }
    }

    #[test]
    fn marginal_moments_match_exact_values() {
        // quadrature against the exact integer moments pins the marginal
        // machinery for every 2d component
        for comp in [Component::G11, Component::G13, Component::G33, Component::USp4] {
            for n in 0..=3u32 {
                let ia1 = integrate_split(
                    |t| t.powi(n as i32) * marginal_a1(comp, t),
                    -4.0,
                    4.0,
                    &[0.0],
                    1e-9,
                );
                let ia2 = integrate_split(
                    |t| t.powi(n as i32) * marginal_a2(comp, t),
                    -2.0,
                    6.0,
                    &[0.0, 2.0],
                    1e-9,
                );
                let ea1 = crate::catalog::moments::component_moment_a1(comp, n) as f64;
                let ea2 = crate::catalog::moments::component_moment_a2(comp, n) as f64;
                assert!((ia1 - ea1).abs() < 2e-6, "{comp:?} a1 n={n}: {ia1} vs {ea1}");
                assert!((ia2 - ea2).abs() < 2e-6, "{comp:?} a2 n={n}: {ia2} vs {ea2}");
            }
        }
    }

    #[test]
    fn group_densities_normalize_sample() {
        // full normalization for a representative slice; the acceptance
        // suite runs all 55
        for g in [GroupId::C1, GroupId::JC6, GroupId::JE4, GroupId::FaBC, GroupId::NG13, GroupId::USp4] {
            for coeff in [Coeff::A1, Coeff::A2] {
                let (lo, hi) = support(coeff);
                let cuts = density_cuts(g, coeff);
                let total = integrate_split(|t| density(g, coeff, t).0, lo, hi, &cuts, 1e-9)
                    + density(g, coeff, 0.0).1.iter().map(|&(_, m)| m).sum::<f64>();
                assert!((total - 1.0).abs() < 1e-6, "{g} {coeff:?}: {total}");
            }
        }
    }

    #[test]
    fn first_moments_from_density() {
        for g in [GroupId::T, GroupId::E6, GroupId::Fac, GroupId::NG33] {
            for (coeff, exact) in [
                (Coeff::A1, moment_a1(g, 2) as f64),
                (Coeff::A2, moment_a2(g, 2) as f64),
            ] {
                let (lo, hi) = support(coeff);
                let cuts = density_cuts(g, coeff);
                let m2 = integrate_split(|t| t * t * density(g, coeff, t).0, lo, hi, &cuts, 1e-9)
                    + density(g, coeff, 0.0)
                        .1
                        .iter()
                        .map(|&(loc, m)| m * loc * loc)
                        .sum::<f64>();
                assert!((m2 - exact).abs() < 1e-5, "{g} {coeff:?}: {m2} vs {exact}");
            }
        }
    }
}

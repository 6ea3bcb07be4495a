//! The exact catalog of the 55 candidate Sato-Tate groups of `USp(4)`:
//! identity components and coset multisets, atom invariants `z1`/`z2`,
//! integer moment sequences, density functions and group signatures.
//!
//! The coset data and the moment closed forms are transcribed separately
//! and cross-validated by averaging; the printed moment tables pin both.

mod data;
mod density;
pub mod moments;
pub mod seqs;

pub use data::{Component, GroupId, GroupRecord, GROUPS, GROUP_COUNT};
pub use density::{
    component_density, density, density_a1, density_a2, density_cuts, joint_density_usp4, rho,
    support, Coeff,
};
pub use moments::{moment_a1, moment_a2, signature, z1, z2};

use serde::Serialize;

/// Stable JSON shape of one catalog entry.
#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GroupJson {
    pub id: GroupId,
    pub d: u8,
    pub c: u32,
    pub component_group: &'static str,
    pub end_r: Option<&'static str>,
    pub galois_type: Option<&'static str>,
    pub z1: u32,
    pub z2: [u32; 5],
    pub realizable: bool,
    pub realizable_real_place: bool,
    pub realizable_over_q: bool,
    pub a1_moments: Vec<i128>,
    pub a2_moments: Vec<i128>,
}

/// Serialize a record, with moments up to `a1^nmax_a1` and `a2^nmax_a2`.
pub fn group_json(g: GroupId, nmax_a1: u32, nmax_a2: u32) -> GroupJson {
    let rec = g.record();
    GroupJson {
        id: g,
        d: rec.d,
        c: rec.c,
        component_group: rec.component_group,
        end_r: rec.end_r,
        galois_type: rec.galois_type,
        z1: z1(g),
        z2: z2(g),
        realizable: rec.realizable,
        realizable_real_place: rec.realizable_real_place,
        realizable_over_q: rec.realizable_over_q,
        a1_moments: (1..=nmax_a1).map(|n| moment_a1(g, n)).collect(),
        a2_moments: (1..=nmax_a2).map(|n| moment_a2(g, n)).collect(),
    }
}

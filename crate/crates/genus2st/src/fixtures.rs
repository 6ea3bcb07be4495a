//! Reference curves realizing the catalog groups, used as test fixtures
//! and CLI examples. Fields are given by monic defining polynomials in
//! `x` (`x` itself denotes the rationals).

use crate::catalog::GroupId;

#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    pub group: GroupId,
    pub curve: &'static str,
    pub field: &'static str,
}

/// The 34 groups realizable over the rationals, with a curve for each.
pub const Q_CURVES: [Fixture; 34] = [
    Fixture { group: GroupId::JC2, curve: "x^5-x", field: "x" },
    Fixture { group: GroupId::JC4, curve: "x^6+x^5-5x^4-5x^2-x+1", field: "x" },
    Fixture { group: GroupId::JC6, curve: "x^6-15x^4-20x^3+6x+1", field: "x" },
    Fixture { group: GroupId::JD2, curve: "x^5+9x", field: "x" },
    Fixture { group: GroupId::JD3, curve: "x^6+10x^3-2", field: "x" },
    Fixture { group: GroupId::JD4, curve: "x^5+3x", field: "x" },
    Fixture { group: GroupId::JD6, curve: "x^6+3x^5+10x^3-15x^2+15x-6", field: "x" },
    Fixture { group: GroupId::JT, curve: "x^6+6x^5-20x^4+20x^3-20x^2-8x+8", field: "x" },
    Fixture { group: GroupId::JO, curve: "x^6-5x^4+10x^3-5x^2+2x-1", field: "x" },
    Fixture { group: GroupId::C21, curve: "x^6+1", field: "x" },
    Fixture { group: GroupId::C61, curve: "x^6+6x^5-30x^4+20x^3+15x^2-12x+1", field: "x" },
    Fixture { group: GroupId::D21, curve: "x^5+x", field: "x" },
    Fixture { group: GroupId::D41, curve: "x^5+2x", field: "x" },
    Fixture { group: GroupId::D61, curve: "x^6+6x^5-30x^4-40x^3+60x^2+24x-8", field: "x" },
    Fixture { group: GroupId::D32, curve: "x^6+4", field: "x" },
    Fixture { group: GroupId::D42, curve: "x^6+x^5+10x^3+5x^2+x-2", field: "x" },
    Fixture { group: GroupId::D62, curve: "x^6+2", field: "x" },
    Fixture { group: GroupId::O1, curve: "x^6+7x^5+10x^4+10x^3+15x^2+17x+4", field: "x" },
    Fixture { group: GroupId::Fac, curve: "x^5+1", field: "x" },
    Fixture { group: GroupId::FaB, curve: "x^6+3x^4+x^2-1", field: "x" },
    Fixture { group: GroupId::E1, curve: "x^6+x^4+x^2+1", field: "x" },
    Fixture { group: GroupId::E2, curve: "x^6+x^5+3x^4+3x^2-x+1", field: "x" },
    Fixture { group: GroupId::E3, curve: "x^5+x^4-3x^3-4x^2-x", field: "x" },
    Fixture { group: GroupId::E4, curve: "x^5+x^4+x^2-x", field: "x" },
    Fixture { group: GroupId::E6, curve: "x^5+2x^4-x^3-3x^2-x", field: "x" },
    Fixture { group: GroupId::JE1, curve: "x^5+x^3+x", field: "x" },
    Fixture { group: GroupId::JE2, curve: "x^5+x^3-x", field: "x" },
    Fixture { group: GroupId::JE3, curve: "x^6+x^3+4", field: "x" },
    Fixture { group: GroupId::JE4, curve: "x^5+x^3+2x", field: "x" },
    Fixture { group: GroupId::JE6, curve: "x^6+x^3-2", field: "x" },
    Fixture { group: GroupId::NG13, curve: "x^6+3x^4-2", field: "x" },
    Fixture { group: GroupId::G33, curve: "x^6+x^2+1", field: "x" },
    Fixture { group: GroupId::NG33, curve: "x^6+x^5+x-1", field: "x" },
    Fixture { group: GroupId::USp4, curve: "x^5-x+1", field: "x" },
];

/// The running example: a curve over `Q(sqrt(-2))` whose Jacobian has the
/// tetrahedral group, with printed moment statistics at `N = 2^k`.
pub const T_CURVE: Fixture = Fixture {
    group: GroupId::T,
    curve: "x^6+6x^5-20x^4+20x^3-20x^2-8x+8",
    field: "x^2+2",
};

/// Printed row-16 moment statistics for [`T_CURVE`]:
/// `(M2, M4, M6, M8)(a1)` then `(M1..M5)(a2)` at `N = 2^16`.
pub const T_CURVE_ROW16_A1: [f64; 4] = [1.94, 10.93, 102.75, 1266.03];
pub const T_CURVE_ROW16_A2: [f64; 5] = [0.97, 3.86, 11.05, 46.56, 203.16];

/// Exact moments of the tetrahedral group (the limiting row of the same
/// table): `(M2, M4, M6, M8)(a1) = (2, 12, 120, 1540)`,
/// `(M1..M5)(a2) = (1, 4, 12, 52, 236)`.
pub const T_GROUP_A1: [i64; 4] = [2, 12, 120, 1540];
pub const T_GROUP_A2: [i64; 5] = [1, 4, 12, 52, 236];

/// Base changes of the `J(O)` curve realizing other catalog groups over
/// subfields of its endomorphism field (`a^3 - 4a + 4 = 0`,
/// `b^4 + 22b + 22 = 0`).
pub const JO_TOWER: [Fixture; 5] = [
    Fixture { group: GroupId::O, curve: "x^6-5x^4+10x^3-5x^2+2x-1", field: "x^2+2" },
    Fixture { group: GroupId::JT, curve: "x^6-5x^4+10x^3-5x^2+2x-1", field: "x^2+11" },
    Fixture { group: GroupId::O1, curve: "x^6-5x^4+10x^3-5x^2+2x-1", field: "x^2-22" },
    Fixture { group: GroupId::JD4, curve: "x^6-5x^4+10x^3-5x^2+2x-1", field: "x^3-4x+4" },
    Fixture { group: GroupId::JD3, curve: "x^6-5x^4+10x^3-5x^2+2x-1", field: "x^4+22x+22" },
];

//! Static data for the 55 groups: identity component, coset structure,
//! component-group labels, endomorphism algebras and realizability flags.
//!
//! Coset descriptors use the order `k` of the coset (so `r = 2cos(pi/k)`,
//! `r^2` in `{4,0,1,2,3}` for `k = 1,2,4,3,6` resp.); the split-case rows
//! get their own named kinds. The moment formulas in `moments.rs` are
//! transcribed independently and the test suite checks that averaging the
//! per-coset distributions over these multisets reproduces them exactly.

use serde::Serialize;

/// Labels for the 55 candidate Sato-Tate groups of `USp(4)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[allow(clippy::upper_case_acronyms)]
pub enum GroupId {
    C1, C2, C3, C4, C6, D2, D3, D4, D6, T, O,
    JC1, JC2, JC3, JC4, JC6, JD2, JD3, JD4, JD6, JT, JO,
    C21, C41, C61, D21, D41, D61, D32, D42, D62, O1,
    E1, E2, E3, E4, E6, JE1, JE2, JE3, JE4, JE6,
    F, Fa, Fc, Fab, Fac,
    /// `F_{a,b}`
    FaB,
    /// `F_{ab,c}`
    FabC,
    /// `F_{a,b,c}`
    FaBC,
    G13, NG13, G33, NG33, USp4,
}

pub const GROUP_COUNT: usize = 55;

/// One coset (or coset family) of a group, with its trace distribution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Component {
    /// Coset of `U(1)` with sign `s = +1` and order `k`:
    /// `a1 = r a_U`, `a2 = a_U^2 + r^2 - 2`.
    U1Plus { k: u8 },
    /// Coset of `U(1)` with `s = -1`: `a1 = 0`, `a2 = 2 - r^2` (an atom).
    U1Minus { k: u8 },
    /// Coset of `SU(2)` with `s = +1`: `a1 = r a_S`, `a2 = a_S^2 + r^2 - 2`.
    SU2Plus { k: u8 },
    /// Coset of `SU(2)` with `s = -1`: `a1 = 0`, `a2 = 2 - a_S^2`.
    SU2Minus,
    /// Identity component of `U(1) x U(1)`:
    /// `a1 = a + a'`, `a2 = a a' + 2` with independent U(1) traces.
    G11,
    /// `U(1) x U(1)` coset inverting one factor: `a1 = a_U`, `a2 = 2`.
    G11A,
    /// Coset inverting both factors: `a1 = 0`, `a2 = 2`.
    G11AB,
    /// Factor-swapping coset: `a1 = 0`, `a2 = a_U`.
    G11C,
    /// Swap-and-invert coset (order 4): `a1 = 0`, `a2 = 0`.
    G11AC,
    /// Identity component of `U(1) x SU(2)`:
    /// `a1 = a_U + a_S`, `a2 = a_U a_S + 2`.
    G13,
    /// Nontrivial coset of `N(U(1) x SU(2))`: `a1 = a_S`, `a2 = 2`.
    G13A,
    /// Identity component of `SU(2) x SU(2)`:
    /// `a1 = a + a'`, `a2 = a a' + 2` with independent SU(2) traces.
    G33,
    /// Factor-swapping coset of `N(SU(2) x SU(2))`: `a1 = 0`, `a2 = a_S`.
    G33J,
    /// The full group: joint density `(1/4pi^2) sqrt(max(rho, 0))`.
    USp4,
}

impl Component {
    /// `r^2` for the coset order `k` (`r = zeta_{2k} + zeta_{2k}^{-1}`).
    pub fn r2_for_k(k: u8) -> i64 {
        match k {
            1 => 4,
            2 => 0,
            3 => 1,
            4 => 2,
            6 => 3,
            _ => panic!("coset order must be one of 1,2,3,4,6"),
        }
    }

    /// Does `a1` vanish identically on this component?
    pub fn a1_is_zero(&self) -> bool {
        matches!(
            self,
            Component::U1Plus { k: 2 }
                | Component::U1Minus { .. }
                | Component::SU2Plus { k: 2 }
                | Component::SU2Minus
                | Component::G11AB
                | Component::G11C
                | Component::G11AC
                | Component::G33J
        )
    }

    /// The constant value of `a2` on this component, when there is one.
    pub fn a2_atom(&self) -> Option<i64> {
        match self {
            Component::U1Minus { k } => Some(2 - Self::r2_for_k(*k)),
            Component::G11A | Component::G11AB | Component::G13A => Some(2),
            Component::G11AC => Some(0),
            _ => None,
        }
    }
}

/// Dimension (`d`), component count (`c`), labels, flags and coset multiset
/// for one group.
#[derive(Clone, Debug)]
pub struct GroupRecord {
    pub id: GroupId,
    pub d: u8,
    pub c: u32,
    pub component_group: &'static str,
    pub end_r: Option<&'static str>,
    pub galois_type: Option<&'static str>,
    pub realizable: bool,
    pub realizable_real_place: bool,
    pub realizable_over_q: bool,
    pub components: &'static [(Component, u32)],
}

use Component::*;

macro_rules! rec {
    ($id:ident, $d:expr, $c:expr, $cg:expr, $endr:expr, $gt:expr, $comps:expr) => {
        GroupRecord {
            id: GroupId::$id,
            d: $d,
            c: $c,
            component_group: $cg,
            end_r: $endr,
            galois_type: $gt,
            realizable: GroupId::$id.realizable(),
            realizable_real_place: GroupId::$id.realizable_real_place(),
            realizable_over_q: GroupId::$id.realizable_over_q(),
            components: $comps,
        }
    };
}

impl GroupId {
    pub fn all() -> [GroupId; GROUP_COUNT] {
        use GroupId::*;
        [
            C1, C2, C3, C4, C6, D2, D3, D4, D6, T, O,
            JC1, JC2, JC3, JC4, JC6, JD2, JD3, JD4, JD6, JT, JO,
            C21, C41, C61, D21, D41, D61, D32, D42, D62, O1,
            E1, E2, E3, E4, E6, JE1, JE2, JE3, JE4, JE6,
            F, Fa, Fc, Fab, Fac, FaB, FabC, FaBC,
            G13, NG13, G33, NG33, USp4,
        ]
    }

    /// Index in the canonical (table) order.
    pub fn index(self) -> usize {
        Self::all().iter().position(|&g| g == self).unwrap()
    }

    pub fn label(self) -> &'static str {
        use GroupId::*;
        match self {
            C1 => "C1", C2 => "C2", C3 => "C3", C4 => "C4", C6 => "C6",
            D2 => "D2", D3 => "D3", D4 => "D4", D6 => "D6", T => "T", O => "O",
            JC1 => "J(C1)", JC2 => "J(C2)", JC3 => "J(C3)", JC4 => "J(C4)",
            JC6 => "J(C6)", JD2 => "J(D2)", JD3 => "J(D3)", JD4 => "J(D4)",
            JD6 => "J(D6)", JT => "J(T)", JO => "J(O)",
            C21 => "C_{2,1}", C41 => "C_{4,1}", C61 => "C_{6,1}",
            D21 => "D_{2,1}", D41 => "D_{4,1}", D61 => "D_{6,1}",
            D32 => "D_{3,2}", D42 => "D_{4,2}", D62 => "D_{6,2}", O1 => "O_1",
            E1 => "E1", E2 => "E2", E3 => "E3", E4 => "E4", E6 => "E6",
            JE1 => "J(E1)", JE2 => "J(E2)", JE3 => "J(E3)", JE4 => "J(E4)",
            JE6 => "J(E6)",
            F => "F", Fa => "F_a", Fc => "F_c", Fab => "F_{ab}", Fac => "F_{ac}",
            FaB => "F_{a,b}", FabC => "F_{ab,c}", FaBC => "F_{a,b,c}",
            G13 => "G_{1,3}", NG13 => "N(G_{1,3})", G33 => "G_{3,3}",
            NG33 => "N(G_{3,3})", USp4 => "USp(4)",
        }
    }

    /// Parse a label; tolerant of braces, underscores and case.
    pub fn parse(s: &str) -> Option<GroupId> {
        let norm = |t: &str| {
            t.chars()
                .filter(|c| !matches!(c, '_' | '{' | '}' | ' '))
                .flat_map(|c| c.to_lowercase())
                .collect::<String>()
        };
        let key = norm(s);
        let key = key.as_str();
        // "usp4" and "usp(4)" both accepted
        GroupId::all()
            .into_iter()
            .find(|g| norm(g.label()) == key || (*g == GroupId::USp4 && key == "usp4"))
    }

    /// Occurs as the Sato-Tate group of some abelian surface (52 of 55).
    pub const fn realizable(self) -> bool {
        use GroupId::*;
        !matches!(self, Fc | FabC | FaBC)
    }

    /// Occurs over a number field with a real place (35 of 55).
    pub const fn realizable_real_place(self) -> bool {
        use GroupId::*;
        self.realizable()
            && !matches!(
                self,
                C1 | C2 | C3 | C4 | C6 | D2 | D3 | D4 | D6 | T | O
                    | F | Fa | G13 | JC1 | C41 | JC3
            )
    }

    /// Occurs over `Q` (34 of 55).
    pub const fn realizable_over_q(self) -> bool {
        self.realizable_real_place() && !matches!(self, GroupId::Fab)
    }

    pub fn record(self) -> &'static GroupRecord {
        &GROUPS[self.index()]
    }
}

impl std::fmt::Display for GroupId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for GroupId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

impl std::str::FromStr for GroupId {
    type Err = crate::Error;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        GroupId::parse(s).ok_or_else(|| crate::Error::UnknownGroup(s.to_string()))
    }
}

pub static GROUPS: [GroupRecord; GROUP_COUNT] = [
    rec!(C1, 1, 1, "C_1", Some("M_2(C)"), Some("F[C_1]"),
        &[(U1Plus { k: 1 }, 1)]),
    rec!(C2, 1, 2, "C_2", Some("CxC"), Some("F[C_2]"),
        &[(U1Plus { k: 1 }, 1), (U1Plus { k: 2 }, 1)]),
    rec!(C3, 1, 3, "C_3", Some("CxC"), Some("F[C_3]"),
        &[(U1Plus { k: 1 }, 1), (U1Plus { k: 3 }, 2)]),
    rec!(C4, 1, 4, "C_4", Some("CxC"), Some("F[C_4]"),
        &[(U1Plus { k: 1 }, 1), (U1Plus { k: 2 }, 1), (U1Plus { k: 4 }, 2)]),
    rec!(C6, 1, 6, "C_6", Some("CxC"), Some("F[C_6]"),
        &[(U1Plus { k: 1 }, 1), (U1Plus { k: 2 }, 1), (U1Plus { k: 3 }, 2), (U1Plus { k: 6 }, 2)]),
    rec!(D2, 1, 4, "D_2", Some("C"), Some("F[D_2]"),
        &[(U1Plus { k: 1 }, 1), (U1Plus { k: 2 }, 3)]),
    rec!(D3, 1, 6, "D_3", Some("C"), Some("F[D_3]"),
        &[(U1Plus { k: 1 }, 1), (U1Plus { k: 2 }, 3), (U1Plus { k: 3 }, 2)]),
    rec!(D4, 1, 8, "D_4", Some("C"), Some("F[D_4]"),
        &[(U1Plus { k: 1 }, 1), (U1Plus { k: 2 }, 5), (U1Plus { k: 4 }, 2)]),
    rec!(D6, 1, 12, "D_6", Some("C"), Some("F[D_6]"),
        &[(U1Plus { k: 1 }, 1), (U1Plus { k: 2 }, 7), (U1Plus { k: 3 }, 2), (U1Plus { k: 6 }, 2)]),
    rec!(T, 1, 12, "A_4", Some("C"), Some("F[A_4]"),
        &[(U1Plus { k: 1 }, 1), (U1Plus { k: 2 }, 3), (U1Plus { k: 3 }, 8)]),
    rec!(O, 1, 24, "S_4", Some("C"), Some("F[S_4]"),
        &[(U1Plus { k: 1 }, 1), (U1Plus { k: 2 }, 9), (U1Plus { k: 3 }, 8), (U1Plus { k: 4 }, 6)]),
    rec!(JC1, 1, 2, "C_2", Some("H"), Some("F[C_2,C_1,H]"),
        &[(U1Plus { k: 1 }, 1), (U1Minus { k: 1 }, 1)]),
    rec!(JC2, 1, 4, "D_2", Some("C"), Some("F[D_2,C_2,H]"),
        &[(U1Plus { k: 1 }, 1), (U1Plus { k: 2 }, 1), (U1Minus { k: 1 }, 1), (U1Minus { k: 2 }, 1)]),
    rec!(JC3, 1, 6, "C_6", Some("C"), Some("F[C_6,C_3,H]"),
        &[(U1Plus { k: 1 }, 1), (U1Plus { k: 3 }, 2), (U1Minus { k: 1 }, 1), (U1Minus { k: 3 }, 2)]),
    rec!(JC4, 1, 8, "C_4xC_2", Some("C"), Some("F[C_4xC_2,C_4]"),
        &[(U1Plus { k: 1 }, 1), (U1Plus { k: 2 }, 1), (U1Plus { k: 4 }, 2),
          (U1Minus { k: 1 }, 1), (U1Minus { k: 2 }, 1), (U1Minus { k: 4 }, 2)]),
    rec!(JC6, 1, 12, "C_6xC_2", Some("C"), Some("F[C_6xC_2,C_6]"),
        &[(U1Plus { k: 1 }, 1), (U1Plus { k: 2 }, 1), (U1Plus { k: 3 }, 2), (U1Plus { k: 6 }, 2),
          (U1Minus { k: 1 }, 1), (U1Minus { k: 2 }, 1), (U1Minus { k: 3 }, 2), (U1Minus { k: 6 }, 2)]),
    rec!(JD2, 1, 8, "D_2xC_2", Some("R"), Some("F[D_2xC_2,D_2]"),
        &[(U1Plus { k: 1 }, 1), (U1Plus { k: 2 }, 3), (U1Minus { k: 1 }, 1), (U1Minus { k: 2 }, 3)]),
    rec!(JD3, 1, 12, "D_6", Some("R"), Some("F[D_6,D_3,H]"),
        &[(U1Plus { k: 1 }, 1), (U1Plus { k: 2 }, 3), (U1Plus { k: 3 }, 2),
          (U1Minus { k: 1 }, 1), (U1Minus { k: 2 }, 3), (U1Minus { k: 3 }, 2)]),
    rec!(JD4, 1, 16, "D_4xC_2", Some("R"), Some("F[D_4xC_2,D_4]"),
        &[(U1Plus { k: 1 }, 1), (U1Plus { k: 2 }, 5), (U1Plus { k: 4 }, 2),
          (U1Minus { k: 1 }, 1), (U1Minus { k: 2 }, 5), (U1Minus { k: 4 }, 2)]),
    rec!(JD6, 1, 24, "D_6xC_2", Some("R"), Some("F[D_6xC_2,D_6]"),
        &[(U1Plus { k: 1 }, 1), (U1Plus { k: 2 }, 7), (U1Plus { k: 3 }, 2), (U1Plus { k: 6 }, 2),
          (U1Minus { k: 1 }, 1), (U1Minus { k: 2 }, 7), (U1Minus { k: 3 }, 2), (U1Minus { k: 6 }, 2)]),
    rec!(JT, 1, 24, "A_4xC_2", Some("R"), Some("F[A_4xC_2,A_4]"),
        &[(U1Plus { k: 1 }, 1), (U1Plus { k: 2 }, 3), (U1Plus { k: 3 }, 8),
          (U1Minus { k: 1 }, 1), (U1Minus { k: 2 }, 3), (U1Minus { k: 3 }, 8)]),
    rec!(JO, 1, 48, "S_4xC_2", Some("R"), Some("F[S_4xC_2,S_4]"),
        &[(U1Plus { k: 1 }, 1), (U1Plus { k: 2 }, 9), (U1Plus { k: 3 }, 8), (U1Plus { k: 4 }, 6),
          (U1Minus { k: 1 }, 1), (U1Minus { k: 2 }, 9), (U1Minus { k: 3 }, 8), (U1Minus { k: 4 }, 6)]),
    rec!(C21, 1, 2, "C_2", Some("M_2(R)"), Some("F[C_2,C_1,M_2(R)]"),
        &[(U1Plus { k: 1 }, 1), (U1Minus { k: 2 }, 1)]),
    rec!(C41, 1, 4, "C_4", Some("C"), Some("F[C_4,C_2]"),
        &[(U1Plus { k: 1 }, 1), (U1Plus { k: 2 }, 1), (U1Minus { k: 4 }, 2)]),
    rec!(C61, 1, 6, "C_6", Some("C"), Some("F[C_6,C_3,M_2(R)]"),
        &[(U1Plus { k: 1 }, 1), (U1Plus { k: 3 }, 2), (U1Minus { k: 2 }, 1), (U1Minus { k: 6 }, 2)]),
    rec!(D21, 1, 4, "D_2", Some("RxR"), Some("F[D_2,C_2,M_2(R)]"),
        &[(U1Plus { k: 1 }, 1), (U1Plus { k: 2 }, 1), (U1Minus { k: 2 }, 2)]),
    rec!(D41, 1, 8, "D_4", Some("R"), Some("F[D_4,D_2]"),
        &[(U1Plus { k: 1 }, 1), (U1Plus { k: 2 }, 3), (U1Minus { k: 2 }, 2), (U1Minus { k: 4 }, 2)]),
    rec!(D61, 1, 12, "D_6", Some("R"), Some("F[D_6,D_3,M_2(R)]"),
        &[(U1Plus { k: 1 }, 1), (U1Plus { k: 2 }, 3), (U1Plus { k: 3 }, 2),
          (U1Minus { k: 2 }, 4), (U1Minus { k: 6 }, 2)]),
    rec!(D32, 1, 6, "D_3", Some("RxR"), Some("F[D_3,C_3]"),
        &[(U1Plus { k: 1 }, 1), (U1Plus { k: 3 }, 2), (U1Minus { k: 2 }, 3)]),
    rec!(D42, 1, 8, "D_4", Some("RxR"), Some("F[D_4,C_4]"),
        &[(U1Plus { k: 1 }, 1), (U1Plus { k: 2 }, 1), (U1Plus { k: 4 }, 2), (U1Minus { k: 2 }, 4)]),
    rec!(D62, 1, 12, "D_6", Some("RxR"), Some("F[D_6,C_6]"),
        &[(U1Plus { k: 1 }, 1), (U1Plus { k: 2 }, 1), (U1Plus { k: 3 }, 2), (U1Plus { k: 6 }, 2),
          (U1Minus { k: 2 }, 6)]),
    rec!(O1, 1, 24, "S_4", Some("R"), Some("F[S_4,A_4]"),
        &[(U1Plus { k: 1 }, 1), (U1Plus { k: 2 }, 3), (U1Plus { k: 3 }, 8),
          (U1Minus { k: 2 }, 6), (U1Minus { k: 4 }, 6)]),
    rec!(E1, 3, 1, "C_1", Some("M_2(R)"), Some("E[C_1]"),
        &[(SU2Plus { k: 1 }, 1)]),
    rec!(E2, 3, 2, "C_2", Some("C"), Some("E[C_2,C]"),
        &[(SU2Plus { k: 1 }, 1), (SU2Plus { k: 2 }, 1)]),
    rec!(E3, 3, 3, "C_3", Some("C"), Some("E[C_3]"),
        &[(SU2Plus { k: 1 }, 1), (SU2Plus { k: 3 }, 2)]),
    rec!(E4, 3, 4, "C_4", Some("C"), Some("E[C_4]"),
        &[(SU2Plus { k: 1 }, 1), (SU2Plus { k: 2 }, 1), (SU2Plus { k: 4 }, 2)]),
    rec!(E6, 3, 6, "C_6", Some("C"), Some("E[C_6]"),
        &[(SU2Plus { k: 1 }, 1), (SU2Plus { k: 2 }, 1), (SU2Plus { k: 3 }, 2), (SU2Plus { k: 6 }, 2)]),
    rec!(JE1, 3, 2, "C_2", Some("RxR"), Some("E[C_2,RxR]"),
        &[(SU2Plus { k: 1 }, 1), (SU2Minus, 1)]),
    rec!(JE2, 3, 4, "D_2", Some("R"), Some("E[D_2]"),
        &[(SU2Plus { k: 1 }, 1), (SU2Plus { k: 2 }, 1), (SU2Minus, 2)]),
    rec!(JE3, 3, 6, "D_3", Some("R"), Some("E[D_3]"),
        &[(SU2Plus { k: 1 }, 1), (SU2Plus { k: 3 }, 2), (SU2Minus, 3)]),
    rec!(JE4, 3, 8, "D_4", Some("R"), Some("E[D_4]"),
        &[(SU2Plus { k: 1 }, 1), (SU2Plus { k: 2 }, 1), (SU2Plus { k: 4 }, 2), (SU2Minus, 4)]),
    rec!(JE6, 3, 12, "D_6", Some("R"), Some("E[D_6]"),
        &[(SU2Plus { k: 1 }, 1), (SU2Plus { k: 2 }, 1), (SU2Plus { k: 3 }, 2), (SU2Plus { k: 6 }, 2),
          (SU2Minus, 6)]),
    rec!(F, 2, 1, "C_1", Some("CxC"), Some("D[C_1]"),
        &[(G11, 1)]),
    rec!(Fa, 2, 2, "C_2", Some("RxC"), Some("D[C_2,RxC]"),
        &[(G11, 1), (G11A, 1)]),
    rec!(Fc, 2, 2, "C_2", None, None,
        &[(G11, 1), (G11C, 1)]),
    rec!(Fab, 2, 2, "C_2", Some("RxR"), Some("D[C_2,RxR]"),
        &[(G11, 1), (G11AB, 1)]),
    rec!(Fac, 2, 4, "C_4", Some("R"), Some("D[C_4]"),
        &[(G11, 1), (G11AB, 1), (G11AC, 2)]),
    rec!(FaB, 2, 4, "D_2", Some("RxR"), Some("D[D_2]"),
        &[(G11, 1), (G11A, 2), (G11AB, 1)]),
    rec!(FabC, 2, 4, "D_2", None, None,
        &[(G11, 1), (G11AB, 1), (G11C, 2)]),
    rec!(FaBC, 2, 8, "D_4", None, None,
        &[(G11, 1), (G11A, 2), (G11AB, 1), (G11C, 2), (G11AC, 2)]),
    rec!(G13, 4, 1, "C_1", Some("RxC"), Some("C[C_1]"),
        &[(G13, 1)]),
    rec!(NG13, 4, 2, "C_2", Some("RxR"), Some("C[C_2]"),
        &[(G13, 1), (G13A, 1)]),
    rec!(G33, 6, 1, "C_1", Some("RxR"), Some("B[C_1]"),
        &[(G33, 1)]),
    rec!(NG33, 6, 2, "C_2", Some("R"), Some("B[C_2]"),
        &[(G33, 1), (G33J, 1)]),
    rec!(USp4, 10, 1, "C_1", Some("R"), Some("A[C_1]"),
        &[(USp4, 1)]),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fifty_five_distinct_labels() {
        let all = GroupId::all();
        assert_eq!(all.len(), 55);
        let mut labels: Vec<_> = all.iter().map(|g| g.label()).collect();
        labels.sort();
        labels.dedup();
        assert_eq!(labels.len(), 55);
    }

    #[test]
    fn parse_roundtrip_and_aliases() {
        for g in GroupId::all() {
            assert_eq!(GroupId::parse(g.label()), Some(g), "{}", g.label());
        }
        assert_eq!(GroupId::parse("usp4"), Some(GroupId::USp4));
        assert_eq!(GroupId::parse("j(c1)"), Some(GroupId::JC1));
        assert_eq!(GroupId::parse("C2,1"), Some(GroupId::C21));
        assert_eq!(GroupId::parse("F_{a,b,c}"), Some(GroupId::FaBC));
        assert_eq!(GroupId::parse("nope"), None);
    }

    #[test]
    fn multiplicities_sum_to_c_and_divide_48() {
        for rec in GROUPS.iter() {
            let total: u32 = rec.components.iter().map(|&(_, m)| m).sum();
            assert_eq!(total, rec.c, "{}", rec.id);
            assert_eq!(48 % rec.c, 0, "{}: c divides 48", rec.id);
        }
    }

    #[test]
    fn realizability_counts() {
        let all = GroupId::all();
        assert_eq!(all.iter().filter(|g| g.realizable()).count(), 52);
        assert_eq!(all.iter().filter(|g| g.realizable_real_place()).count(), 35);
        assert_eq!(all.iter().filter(|g| g.realizable_over_q()).count(), 34);
        // the three with no Galois type are exactly the non-realizable ones
        for rec in GROUPS.iter() {
            assert_eq!(rec.galois_type.is_none(), !rec.realizable, "{}", rec.id);
            assert_eq!(rec.end_r.is_none(), !rec.realizable, "{}", rec.id);
        }
    }

    #[test]
    fn dimension_matches_identity_component() {
        for rec in GROUPS.iter() {
            let d0 = match rec.components[0].0 {
                Component::U1Plus { k: 1 } => 1,
                Component::SU2Plus { k: 1 } => 3,
                Component::G11 => 2,
                Component::G13 => 4,
                Component::G33 => 6,
                Component::USp4 => 10,
                ref other => panic!("{}: first component {other:?} is not an identity", rec.id),
            };
            assert_eq!(rec.d, d0, "{}", rec.id);
        }
    }
}

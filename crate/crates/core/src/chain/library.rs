//! Named basic Clifford transformations and derived chain transforms.

use crate::clifford::CliffordTableau;
use crate::pauli::ps;

use super::{LocalMap, Transform};

fn t2(x: [&str; 2], z: [&str; 2]) -> CliffordTableau {
    CliffordTableau::from_text(2, &x, &z).expect("library tableau is valid")
}

fn t3(x: [&str; 3], z: [&str; 3]) -> CliffordTableau {
    CliffordTableau::from_text(3, &x, &z).expect("library tableau is valid")
}

fn sign(s: i8) -> &'static str {
    if s < 0 {
        "-"
    } else {
        "+"
    }
}

/// `X1->X1Z2, X2->Z1Y2`, `Z` fixed. Chain: `X_n -> Z_{n-1} Y_n Z_{n+1}`.
pub fn basic_u1() -> CliffordTableau {
    t2(["+XZ@1", "+ZY@1"], ["+Z@1", "+Z@2"])
}

/// Chain: `X_n -> -Z_{n-2} Z_{n-1} Y_n Z_{n+1} Z_{n+2}`, `Z_n -> Z_n`.
pub fn basic_u2() -> CliffordTableau {
    t3(["+YZZ@1", "+ZY@1", "+ZIY@1"], ["+Z@1", "+Z@2", "+Z@3"])
}

/// Chain: `X_n -> Z_{n-2} X_n Z_{n+2}`, `Z_n -> Z_n`.
pub fn basic_u3() -> CliffordTableau {
    t3(["+XZZ@1", "+ZXZ@1", "+ZZX@1"], ["+Z@1", "+Z@2", "+Z@3"])
}

/// Chain: `X_n -> -Z_{n-2} Y_{n-1} Y_n Y_{n+1} Z_{n+2}`, `Z_n -> -Z_{n-1} X_n Z_{n+1}`.
pub fn basic_u4() -> CliffordTableau {
    t3(["+XXX@1", "+ZYX@1", "+ZXY@1"], ["+Z@1", "+X@2", "+X@3"])
}

/// Kramers-Wannier: `X1->X1, X2->Z2, Z1->Z1Z2, Z2->X1X2`.
pub fn kramers_wannier() -> CliffordTableau {
    t2(["+X@1", "+Z@2"], ["+ZZ@1", "+XX@1"])
}

/// Maps the trivial paramagnet to the cluster state: `X1->X1Z2, X2->Z1X2`, `Z` fixed.
pub fn cluster() -> CliffordTableau {
    t2(["+XZ@1", "+ZX@1"], ["+Z@1", "+Z@2"])
}

/// Two-site example with `X1X2 -> -Y1Y2`: `X1->X1X2, X2->Z1Z2, Z1->Z1, Z2->X2`.
pub fn worked_example() -> CliffordTableau {
    t2(["+XX@1", "+ZZ@1"], ["+Z@1", "+X@2"])
}

/// `X1->X1Z2, X2->Z2, Z1->Z1, Z2->Z1Y2`; turns the transverse field into
/// `Z_{n-1} Y_n Z_{n+1}`.
pub fn field_decoration() -> CliffordTableau {
    t2(["+XZ@1", "+Z@2"], ["+Z@1", "+ZY@1"])
}

/// String `prod S_{n+2j}` with `X_n -> s_x Z_n X_{n+1}`, `Z_n -> s_z Z_n Y_{n+1}`.
pub fn nl2_signed(sx: i8, sz: i8) -> CliffordTableau {
    t2(
        [&format!("{}ZX@1", sign(sx)), "+XZ@1"],
        [&format!("{}ZY@1", sign(sz)), "+YZ@1"],
    )
}

/// String `prod S_{n+3j} S_{n+3j+1}` with `X_n -> s_x X_n Z_{n+1}`, `Z_n -> s_z X_n Y_{n+1}`.
pub fn nl3_signed(sx: i8, sz: i8) -> CliffordTableau {
    t2(
        [&format!("{}XZ@1", sign(sx)), "+ZX@1"],
        [&format!("{}XY@1", sign(sz)), "+YX@1"],
    )
}

/// Travelling boundary operator with `X_n -> s_x Y_n X_{n+1}`, `Z_n -> s_z Y_n Z_{n+1}`.
pub fn nl4_signed(sx: i8, sz: i8) -> CliffordTableau {
    t2(
        [&format!("{}YX@1", sign(sx)), "+XY@1"],
        [&format!("{}YZ@1", sign(sz)), "+ZY@1"],
    )
}

/// `X_n->-Z_nX_{n+1}, X_{n+1}->X_nZ_{n+1}, Z_n->Z_nY_{n+1}, Z_{n+1}->Y_nZ_{n+1}`.
pub fn nl2_example() -> CliffordTableau {
    nl2_signed(-1, 1)
}

/// `X_n->X_nZ_{n+1}, X_{n+1}->Z_nX_{n+1}, Z_n->X_nY_{n+1}, Z_{n+1}->Y_nX_{n+1}`.
pub fn nl3_example() -> CliffordTableau {
    nl3_signed(1, 1)
}

/// `X_n->-Y_nX_{n+1}, X_{n+1}->X_nY_{n+1}, Z_n->Y_nZ_{n+1}, Z_{n+1}->Z_nY_{n+1}`.
pub fn nl4_example() -> CliffordTableau {
    nl4_signed(-1, 1)
}

/// Commuting two-site factor: `X1->X1Y2, Z1->Z1Y2, X2->Y1X2, Z2->Y1Z2`.
pub fn u_star() -> CliffordTableau {
    t2(["+XY@1", "+YX@1"], ["+ZY@1", "+YZ@1"])
}

/// One-site tableau from the images of `X` and `Z` (e.g. `"+Y@1"`).
pub fn basis(x: &str, z: &str) -> CliffordTableau {
    CliffordTableau::from_text(1, &[x], &[z]).expect("valid one-site tableau")
}

/// First decoration in the factorization of `U4`: `X_n -> Z_{n-1} X_n Z_{n+1}`, `Z_n -> -Z_n`.
/// This is `X -> Z Y Z, Y -> Z X Z` preceded by the basis change `X -> Y, Z -> Z`.
pub fn decoration_v1() -> LocalMap {
    LocalMap::new(ps("+ZXZ@-1"), ps("-Z@0"))
}

/// Second decoration: `X_n -> Z_{n-1} Y_n Z_{n+1}`, `Z_n -> Z_{n-1} X_n Z_{n+1}`.
/// This is `X -> Z X Z, Z -> Z Y Z` followed by the basis change `X -> Y, Z -> -Z`.
pub fn decoration_v2() -> LocalMap {
    LocalMap::new(ps("+ZYZ@-1"), ps("+ZXZ@-1"))
}

/// `X -> Z Y Z, Y -> Z X Z` as written, without basis adjustment.
pub fn decoration_v1_bare() -> LocalMap {
    LocalMap::new(ps("+ZYZ@-1"), ps("-Z@0"))
}

/// `X -> Z X Z, Z -> Z Y Z` as written, without basis adjustment.
pub fn decoration_v2_bare() -> LocalMap {
    LocalMap::new(ps("+ZXZ@-1"), ps("+ZYZ@-1"))
}

/// The composite `U4 U2`: applies `U2` first, then `U4`.
pub fn u4_after_u2() -> Transform {
    Transform::then(
        Transform::staircase(basic_u2()),
        Transform::staircase(basic_u4()),
    )
}

/// Basis change `X -> X, Z -> -Y` followed by the NL2 example staircase.
/// Maps the next-nearest-neighbour Ising form at zero field to a local model.
pub fn nl2_after_basis() -> Transform {
    Transform::then(
        Transform::on_site(&basis("+X@1", "-Y@1")),
        Transform::staircase(nl2_example()),
    )
}

/// Every named tableau with its registry name.
pub fn named_tableaux() -> Vec<(&'static str, CliffordTableau)> {
    vec![
        ("ID", CliffordTableau::identity(2)),
        ("U1", basic_u1()),
        ("U2", basic_u2()),
        ("U3", basic_u3()),
        ("U4", basic_u4()),
        ("KW", kramers_wannier()),
        ("CLUSTER", cluster()),
        ("FIELD", field_decoration()),
        ("EXAMPLE", worked_example()),
        ("NL2", nl2_example()),
        ("NL3", nl3_example()),
        ("NL4", nl4_example()),
        ("USTAR", u_star()),
        ("SWAP", CliffordTableau::swap()),
    ]
}

pub fn tableau_by_name(name: &str) -> Option<CliffordTableau> {
    let upper = name.to_ascii_uppercase();
    named_tableaux()
        .into_iter()
        .find(|(n, _)| *n == upper)
        .map(|(_, t)| t)
}

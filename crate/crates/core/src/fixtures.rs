//! The hand-verified instance corpus used across the test suites.

use crate::comonadics::QCounitalCoalgebra;
use crate::linmap::LinMap;
use crate::monadics::QUnitalAlgebra;
use crate::pairing::DualPairing;
use crate::ring::ExactRing;

const Z2: ExactRing = ExactRing::Zn(2);

/// Dimension-1 unital algebra over `Z_2`.
pub fn i1() -> QUnitalAlgebra {
    QUnitalAlgebra::new(
        Z2,
        1,
        LinMap::from_rows(Z2, &[&[1]]),
        LinMap::from_rows(Z2, &[&[1]]),
    )
    .unwrap()
}

/// `Z_2 x Z_2` with pointwise product and quasi-unit `e1` (an idempotent
/// that is not the unit): regular and central but the product is not
/// compatible.
pub fn i2() -> QUnitalAlgebra {
    QUnitalAlgebra::new(
        Z2,
        2,
        LinMap::from_rows(Z2, &[&[1, 0, 0, 0], &[0, 0, 0, 1]]),
        LinMap::from_rows(Z2, &[&[1], &[0]]),
    )
    .unwrap()
}

/// Upper-triangular 2x2 matrices over `Z_2` with basis
/// `x = E11, y = E12, z = E22` and quasi-unit `x`: the idempotent `x` is
/// not central (`xy = y`, `yx = 0`).
pub fn i3() -> QUnitalAlgebra {
    // columns ordered xx, xy, xz, yx, yy, yz, zx, zy, zz
    QUnitalAlgebra::new(
        Z2,
        3,
        LinMap::from_rows(
            Z2,
            &[
                &[1, 0, 0, 0, 0, 0, 0, 0, 0],
                &[0, 1, 0, 0, 0, 1, 0, 0, 0],
                &[0, 0, 0, 0, 0, 0, 0, 0, 1],
            ],
        ),
        LinMap::from_rows(Z2, &[&[1], &[0], &[0]]),
    )
    .unwrap()
}

/// Group-like coalgebra on two generators with quasi-counit supported on
/// the first one; the transpose dual of [`i2`].
pub fn c2() -> QCounitalCoalgebra {
    QCounitalCoalgebra::new(
        Z2,
        2,
        LinMap::from_rows(Z2, &[&[1, 0], &[0, 0], &[0, 0], &[0, 1]]),
        LinMap::from_rows(Z2, &[&[1, 0]]),
    )
    .unwrap()
}

/// Transpose dual of [`i3`]: regular but asymmetric quasi-counit.
pub fn c3() -> QCounitalCoalgebra {
    i3().transpose_dual()
}

/// The classical rank-1 self-duality: every flag holds.
pub fn p1() -> DualPairing {
    DualPairing::new(
        Z2,
        1,
        1,
        LinMap::from_rows(Z2, &[&[1]]),
        LinMap::from_rows(Z2, &[&[1]]),
    )
    .unwrap()
}

/// The canonical nontrivial regular pairing over `Z_2`:
/// `eta = e1 (x) e1`, `eps(ei (x) ej) = [i = j = 1]`. Regular on both
/// sides, symmetric on neither.
pub fn p2() -> DualPairing {
    DualPairing::new(
        Z2,
        2,
        2,
        LinMap::from_rows(Z2, &[&[1], &[0], &[0], &[0]]),
        LinMap::from_rows(Z2, &[&[1, 0, 0, 0]]),
    )
    .unwrap()
}

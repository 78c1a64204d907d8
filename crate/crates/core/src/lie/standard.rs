//! Built-in algebras and modules used by the catalog and the tests.

use std::sync::Arc;

use super::{LieAlgebra, LieModule};
use crate::linalg::{rat, RatMatrix};

/// `sl_2` in the basis `(e, h, f)`: `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_int_brackets(
        "sl2",
        &["e", "h", "f"],
        &[(1, 0, &[(0, 2)]), (1, 2, &[(2, -2)]), (0, 2, &[(1, 1)])],
    )
}

/// `gl_2 = sl_2 ⊕ Q z` in the basis `(e, h, f, z)`.
pub fn gl2() -> LieAlgebra {
    LieAlgebra::from_int_brackets(
        "gl2",
        &["e", "h", "f", "z"],
        &[(1, 0, &[(0, 2)]), (1, 2, &[(2, -2)]), (0, 2, &[(1, 1)])],
    )
}

/// Heisenberg algebra `(x, y, z)` with `[x,y] = z`.
pub fn heisenberg() -> LieAlgebra {
    LieAlgebra::from_int_brackets("h3", &["x", "y", "z"], &[(0, 1, &[(2, 1)])])
}

/// Borel subalgebra of `sl_2`: `(h, e)` with `[h,e] = 2e`.
pub fn borel() -> LieAlgebra {
    LieAlgebra::from_int_brackets("borel", &["h", "e"], &[(0, 1, &[(1, 2)])])
}

/// `sl_2 ⋉ V` with `V` the standard module: basis `(e, h, f, v1, v2)`.
pub fn sl2_ltimes_std() -> LieAlgebra {
    LieAlgebra::from_int_brackets(
        "sl2semi",
        &["e", "h", "f", "v1", "v2"],
        &[
            (1, 0, &[(0, 2)]),
            (1, 2, &[(2, -2)]),
            (0, 2, &[(1, 1)]),
            (0, 4, &[(3, 1)]),
            (1, 3, &[(3, 1)]),
            (1, 4, &[(4, -1)]),
            (2, 3, &[(4, 1)]),
        ],
    )
}

/// `sl_2 ⋉ h_3`: basis `(e, h, f, v1, v2, z)` with `[v1, v2] = z` central.
pub fn sl2_ltimes_heisenberg() -> LieAlgebra {
    LieAlgebra::from_int_brackets(
        "jacobi",
        &["e", "h", "f", "v1", "v2", "z"],
        &[
            (1, 0, &[(0, 2)]),
            (1, 2, &[(2, -2)]),
            (0, 2, &[(1, 1)]),
            (0, 4, &[(3, 1)]),
            (1, 3, &[(3, 1)]),
            (1, 4, &[(4, -1)]),
            (2, 3, &[(4, 1)]),
            (3, 4, &[(5, 1)]),
        ],
    )
}

/// `Q t ⋉ h_3`: basis `(t, x, y, z)`, `[t,x] = x`, `[t,y] = -y`, `[x,y] = z`.
pub fn torus_ltimes_heisenberg() -> LieAlgebra {
    LieAlgebra::from_int_brackets(
        "torheis",
        &["t", "x", "y", "z"],
        &[(0, 1, &[(1, 1)]), (0, 2, &[(2, -1)]), (1, 2, &[(3, 1)])],
    )
}

/// Irreducible `sl_2`-module of highest weight `n` (dimension `n + 1`),
/// pulled back along the first three basis elements of `g`, which must be
/// `(e, h, f)`; the remaining basis elements act by zero.
pub fn sl2_irrep(g: Arc<LieAlgebra>, n: usize) -> LieModule {
    let d = n + 1;
    let mut e = RatMatrix::zeros(d, d);
    let mut h = RatMatrix::zeros(d, d);
    let mut f = RatMatrix::zeros(d, d);
    for k in 0..d {
        h[(k, k)] = rat(n as i64 - 2 * k as i64);
        if k + 1 < d {
            f[(k + 1, k)] = rat(k as i64 + 1);
        }
        if k > 0 {
            e[(k - 1, k)] = rat((n - k + 1) as i64);
        }
    }
    let mut action = vec![e, h, f];
    action.resize(g.dim(), RatMatrix::zeros(d, d));
    LieModule::new(g, d, action).expect("sl2 irreducible module")
}

/// `V ⊂ sl_2 ⋉ V` as a module: the adjoint action restricted to the ideal.
pub fn std_module_of_semidirect(g: Arc<LieAlgebra>) -> LieModule {
    let n = g.dim();
    let action = (0..n)
        .map(|i| RatMatrix::from_fn(2, 2, |r, c| g.structure_constant(i, 3 + c, 3 + r).clone()))
        .collect();
    let m = LieModule::new(g, 2, action).expect("ideal is a module");
    debug_assert!(!m.actions().iter().all(|a| a.is_zero()) || n == 0);
    m
}

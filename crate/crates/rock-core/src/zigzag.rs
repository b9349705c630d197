//! The zigzag algebra `Z` of type `A_{e-1}`.
//!
//! For `e > 2` this is the doubled quiver on vertices `J = {1..e-1}` with
//! arrows `a^{k,j}: j -> k` for `|k-j| = 1`, modulo: paths of length three or
//! more vanish, non-cycle paths of length two vanish, and all 2-cycles based
//! at the same vertex are equal (the loop `c e_j`). For `e = 2` it is
//! `Z[c]/(c^2)` with `c` in degree 2. Products compose right to left, so
//! `x·y` means "`y` then `x`" and `e_j Z` is spanned by the basis paths with
//! target `j`.

use crate::laurent::LaurentPoly;

/// A basis element of `Z`: a vertex idempotent, the degree-2 loop at a
/// vertex, or an arrow between neighboring vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ZElem {
    /// `e_j`, degree 0.
    Vertex(usize),
    /// `c e_j`, degree 2.
    Loop(usize),
    /// `a^{to,from}` with `|to - from| = 1`, degree 1.
    Arrow { to: usize, from: usize },
}

impl ZElem {
    pub fn degree(&self) -> i64 {
        match self {
            ZElem::Vertex(_) => 0,
            ZElem::Arrow { .. } => 1,
            ZElem::Loop(_) => 2,
        }
    }

    pub fn source(&self) -> usize {
        match *self {
            ZElem::Vertex(j) | ZElem::Loop(j) => j,
            ZElem::Arrow { from, .. } => from,
        }
    }

    pub fn target(&self) -> usize {
        match *self {
            ZElem::Vertex(j) | ZElem::Loop(j) => j,
            ZElem::Arrow { to, .. } => to,
        }
    }
}

/// The basis `B_Z`: arrows plus `c^m e_j` for `m ∈ {0,1}`.
pub fn basis(e: usize) -> Vec<ZElem> {
    assert!(e >= 2);
    let mut out = Vec::new();
    for j in 1..e {
        out.push(ZElem::Vertex(j));
        out.push(ZElem::Loop(j));
    }
    for j in 1..e {
        for k in [j.wrapping_sub(1), j + 1] {
            if (1..e).contains(&k) {
                out.push(ZElem::Arrow { to: k, from: j });
            }
        }
    }
    out
}

/// Basis of `e_j Z`: the basis paths with target `j`.
pub fn basis_ej(j: usize, e: usize) -> Vec<ZElem> {
    basis(e).into_iter().filter(|x| x.target() == j).collect()
}

/// Basis of `e_j Z e_k`.
pub fn basis_ej_ek(j: usize, k: usize, e: usize) -> Vec<ZElem> {
    basis(e)
        .into_iter()
        .filter(|x| x.target() == j && x.source() == k)
        .collect()
}

/// Product of two basis elements; `None` is zero. Structure constants are
/// always 0 or 1, so no coefficient is returned.
pub fn zigzag_mul(x: ZElem, y: ZElem, e: usize) -> Option<ZElem> {
    debug_assert!(e >= 2);
    if x.source() != y.target() {
        return None;
    }
    if x.degree() + y.degree() > 2 {
        return None;
    }
    match (x, y) {
        (ZElem::Vertex(_), y) => Some(y),
        (x, ZElem::Vertex(_)) => Some(x),
        (ZElem::Arrow { to, .. }, ZElem::Arrow { from, .. }) => {
            // A length-two path: a cycle gives the loop, anything else dies.
            (to == from).then_some(ZElem::Loop(from))
        }
        _ => unreachable!("degree filter leaves only vertex and arrow-arrow products"),
    }
}

/// `dim_q Z = (e-1)(1+q^2) + 2(e-2)q`.
pub fn graded_dim_z(e: usize) -> LaurentPoly {
    basis(e).into_iter().fold(LaurentPoly::zero(), |mut acc, x| {
        acc.add_term(x.degree(), 1);
        acc
    })
}

/// `dim e_j Z` (4 in the middle, 3 at the ends for e > 2, 2 for e = 2).
pub fn dim_ej_z(j: usize, e: usize) -> usize {
    basis_ej(j, e).len()
}

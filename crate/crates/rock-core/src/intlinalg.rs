//! Exact integer linear algebra: Hermite normal form, saturated integer
//! kernels, linear solves over `Z`, and lattices closed under bilinear maps.
//!
//! Coefficients are arbitrary-precision integers throughout; HNF coefficient
//! growth makes fixed-width types unsound here.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

pub type Int = BigInt;

/// A dense matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: Vec<Vec<Int>>,
    pub cols: usize,
}

impl IntMatrix {
    pub fn new(rows: Vec<Vec<Int>>, cols: usize) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == cols));
        Self { rows, cols }
    }

    pub fn from_i64(rows: &[Vec<i64>], cols: usize) -> Self {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| Int::from(x)).collect())
                .collect(),
            cols,
        )
    }

    pub fn identity(n: usize) -> Self {
        Self::new(
            (0..n)
                .map(|i| (0..n).map(|j| Int::from((i == j) as i64)).collect())
                .collect(),
            n,
        )
    }

    pub fn transpose(&self) -> IntMatrix {
        let rows = (0..self.cols)
            .map(|c| self.rows.iter().map(|r| r[c].clone()).collect())
            .collect();
        IntMatrix::new(rows, self.rows.len())
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }
}

fn row_axpy(dst: &mut [Int], src: &[Int], c: &Int) {
    if c.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d += c * s;
        }
    }
}

/// Floor division, matching the reduction `0 <= a - q·b < b` for `b > 0`.
fn floor_div(a: &Int, b: &Int) -> Int {
    num_integer::Integer::div_floor(a, b)
}

/// Row-style Hermite normal form of the row space, together with a
/// unimodular transform `u` such that `u · m = hnf`. The returned HNF keeps
/// its zero rows so the transform stays aligned.
pub fn hnf_with_transform(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.n_rows());
    let mut r = 0;
    for c in 0..h.cols {
        if r >= h.n_rows() {
            break;
        }
        // Clear column c below row r by gcd elimination.
        loop {
            let mut best: Option<usize> = None;
            for i in r..h.n_rows() {
                if !h.rows[i][c].is_zero() {
                    let better = match best {
                        None => true,
                        Some(j) => h.rows[i][c].abs() < h.rows[j][c].abs(),
                    };
                    if better {
                        best = Some(i);
                    }
                }
            }
            let Some(p) = best else { break };
            h.rows.swap(r, p);
            u.rows.swap(r, p);
            let mut all_clear = true;
            for i in r + 1..h.n_rows() {
                if h.rows[i][c].is_zero() {
                    continue;
                }
                let q = -(&h.rows[i][c] / &h.rows[r][c]);
                let pivot_row = h.rows[r].clone();
                row_axpy(&mut h.rows[i], &pivot_row, &q);
                let upivot = u.rows[r].clone();
                row_axpy(&mut u.rows[i], &upivot, &q);
                if !h.rows[i][c].is_zero() {
                    all_clear = false;
                }
            }
            if all_clear {
                break;
            }
        }
        if h.rows[r][c].is_zero() {
            continue;
        }
        if h.rows[r][c].is_negative() {
            for x in h.rows[r].iter_mut() {
                *x = -x.clone();
            }
            for x in u.rows[r].iter_mut() {
                *x = -x.clone();
            }
        }
        // Reduce the entries above the pivot into [0, pivot).
        for i in 0..r {
            let q = -floor_div(&h.rows[i][c], &h.rows[r][c]);
            if !q.is_zero() {
                let pivot_row = h.rows[r].clone();
                row_axpy(&mut h.rows[i], &pivot_row, &q);
                let upivot = u.rows[r].clone();
                row_axpy(&mut u.rows[i], &upivot, &q);
            }
        }
        r += 1;
    }
    (h, u)
}

/// The Hermite normal form of the row space of `m`, zero rows dropped.
pub fn hnf(m: &IntMatrix) -> IntMatrix {
    let (h, _) = hnf_with_transform(m);
    let rows: Vec<Vec<Int>> = h.rows.into_iter().filter(|r| !is_zero_row(r)).collect();
    IntMatrix::new(rows, m.cols)
}

fn is_zero_row(r: &[Int]) -> bool {
    r.iter().all(|x| x.is_zero())
}

/// Basis of the saturated integer kernel `{v : m · v = 0}`.
pub fn kernel(m: &IntMatrix) -> Lattice {
    let at = m.transpose();
    let (h, u) = hnf_with_transform(&at);
    let rows: Vec<Vec<Int>> = h
        .rows
        .iter()
        .zip(u.rows)
        .filter(|(hr, _)| is_zero_row(hr))
        .map(|(_, ur)| ur)
        .collect();
    Lattice::from_rows(IntMatrix::new(rows, m.cols))
}

/// Any integer solution of `x · m = b`, if one exists.
pub fn solve(m: &IntMatrix, b: &[Int]) -> Option<Vec<Int>> {
    assert_eq!(b.len(), m.cols);
    let (h, u) = hnf_with_transform(m);
    let mut residual: Vec<Int> = b.to_vec();
    let mut y = vec![Int::zero(); h.n_rows()];
    for (i, row) in h.rows.iter().enumerate() {
        let Some(p) = row.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        if residual[p].is_zero() {
            continue;
        }
        let (q, r) = num_integer::Integer::div_rem(&residual[p], &row[p]);
        if !r.is_zero() {
            return None;
        }
        let negq = -&q;
        y[i] = q;
        row_axpy(&mut residual, row, &negq);
    }
    if !is_zero_row(&residual) {
        return None;
    }
    // x = y · u.
    let mut x = vec![Int::zero(); u.cols];
    for (i, yi) in y.iter().enumerate() {
        row_axpy(&mut x, &u.rows[i], yi);
    }
    Some(x)
}

/// A lattice inside `Z^ambient`, stored as an echelon row basis (HNF after
/// `normalize`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    basis: IntMatrix,
}

impl Lattice {
    pub fn empty(ambient: usize) -> Self {
        Self {
            basis: IntMatrix::new(Vec::new(), ambient),
        }
    }

    pub fn from_rows(rows: IntMatrix) -> Self {
        Self { basis: hnf(&rows) }
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols
    }

    pub fn rank(&self) -> usize {
        self.basis.n_rows()
    }

    pub fn basis_rows(&self) -> &[Vec<Int>] {
        &self.basis.rows
    }

    /// Exact membership test by reduction against the echelon basis.
    pub fn member(&self, v: &[Int]) -> bool {
        assert_eq!(v.len(), self.ambient());
        let mut residual = v.to_vec();
        for row in &self.basis.rows {
            let p = row.iter().position(|x| !x.is_zero()).unwrap();
            if residual[p].is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(&residual[p], &row[p]);
            if !r.is_zero() {
                return false;
            }
            let negq = -q;
            row_axpy(&mut residual, row, &negq);
        }
        is_zero_row(&residual)
    }

    /// Adjoins a vector; returns whether the lattice grew.
    pub fn insert(&mut self, v: &[Int]) -> bool {
        assert_eq!(v.len(), self.ambient());
        let mut v = v.to_vec();
        let mut changed_rows = false;
        let mut i = 0;
        while i < self.basis.rows.len() {
            let Some(pv) = v.iter().position(|x| !x.is_zero()) else {
                break;
            };
            let pr = self.basis.rows[i]
                .iter()
                .position(|x| !x.is_zero())
                .unwrap();
            if pv < pr {
                break;
            }
            if pv > pr {
                i += 1;
                continue;
            }
            // Same pivot column: combine to the gcd, keep reducing.
            let a = self.basis.rows[i][pr].clone();
            let b = v[pv].clone();
            if (&b % &a).is_zero() {
                let q = -(&b / &a);
                let row = self.basis.rows[i].clone();
                row_axpy(&mut v, &row, &q);
            } else {
                let g = num_integer::Integer::extended_gcd(&a, &b);
                let row = self.basis.rows[i].clone();
                let mut new_row = vec![Int::zero(); self.ambient()];
                row_axpy(&mut new_row, &row, &g.x);
                row_axpy(&mut new_row, &v, &g.y);
                let cb = &b / &g.gcd;
                let ca = -(&a / &g.gcd);
                let mut new_v = vec![Int::zero(); self.ambient()];
                row_axpy(&mut new_v, &row, &cb);
                row_axpy(&mut new_v, &v, &ca);
                self.basis.rows[i] = new_row;
                v = new_v;
                changed_rows = true;
            }
        }
        if is_zero_row(&v) {
            return changed_rows;
        }
        if v.iter().find(|x| !x.is_zero()).unwrap().is_negative() {
            for x in v.iter_mut() {
                *x = -x.clone();
            }
        }
        self.basis.rows.push(v);
        self.basis
            .rows
            .sort_by_key(|r| r.iter().position(|x| !x.is_zero()).unwrap_or(usize::MAX));
        true
    }

    /// Re-normalizes the basis to the unique HNF.
    pub fn normalize(&mut self) {
        self.basis = hnf(&self.basis);
    }
}

/// Closes `lattice` under the bilinear map `f` by iterating products of the
/// current basis pairs, adjoining and re-reducing until stable. Passes are
/// capped at the ambient dimension plus one: rank grows monotonically and is
/// bounded, so hitting the cap indicates a bug in the caller's map.
pub fn close_under(lattice: &Lattice, f: impl Fn(&[Int], &[Int]) -> Vec<Int>) -> Lattice {
    let mut l = lattice.clone();
    let cap = l.ambient() + 1;
    for _pass in 0..cap {
        let rows: Vec<Vec<Int>> = l.basis_rows().to_vec();
        let mut grew = false;
        for x in &rows {
            for y in &rows {
                let p = f(x, y);
                if l.insert(&p) {
                    grew = true;
                }
            }
        }
        if !grew {
            l.normalize();
            // Verification pass: the result is closed under f.
            let rows: Vec<Vec<Int>> = l.basis_rows().to_vec();
            for x in &rows {
                for y in &rows {
                    assert!(l.member(&f(x, y)), "close_under result not closed");
                }
            }
            return l;
        }
    }
    panic!("close_under failed to stabilize within ambient+1 passes");
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[Vec<i64>], cols: usize) -> IntMatrix {
        IntMatrix::from_i64(rows, cols)
    }

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn hnf_examples() {
        let id = IntMatrix::identity(3);
        assert_eq!(hnf(&id), id);

        let m = mat(&[vec![2, 4], vec![0, 3]], 2);
        let h = hnf(&m);
        assert_eq!(h.rows, vec![ints(&[2, 1]), ints(&[0, 3])]);

        let z = mat(&[vec![0, 0], vec![0, 0]], 2);
        assert_eq!(hnf(&z).n_rows(), 0);
    }

    #[test]
    fn hnf_idempotent_and_lattice_invariant() {
        let m = mat(&[vec![6, 8, 5], vec![2, 3, 1], vec![4, 5, 4]], 3);
        let h = hnf(&m);
        assert_eq!(hnf(&h), h);
        let lat = Lattice::from_rows(m.clone());
        for r in &h.rows {
            assert!(lat.member(r));
        }
        let lat_h = Lattice::from_rows(h.clone());
        for r in &m.rows {
            assert!(lat_h.member(r));
        }
    }

    #[test]
    fn transform_recovers_hnf() {
        let m = mat(&[vec![6, 8, 5], vec![2, 3, 1]], 3);
        let (h, u) = hnf_with_transform(&m);
        for (i, hr) in h.rows.iter().enumerate() {
            let mut acc = vec![Int::zero(); 3];
            for (j, mr) in m.rows.iter().enumerate() {
                row_axpy(&mut acc, mr, &u.rows[i][j]);
            }
            assert_eq!(&acc, hr);
        }
    }

    #[test]
    fn kernel_examples() {
        let k = kernel(&mat(&[vec![1, 1]], 2));
        assert_eq!(k.rank(), 1);
        assert!(k.member(&ints(&[1, -1])));

        let k = kernel(&mat(&[vec![2, 4]], 2));
        assert_eq!(k.rank(), 1);
        assert!(k.member(&ints(&[2, -1])));
        assert!(!k.member(&ints(&[1, 0])));

        let k = kernel(&mat(&[vec![1, 0], vec![0, 1]], 2));
        assert_eq!(k.rank(), 0);
    }

    #[test]
    fn kernel_is_orthogonal_and_saturated() {
        let m = mat(&[vec![2, 4, 6], vec![1, 2, 3], vec![0, 5, 5]], 3);
        let k = kernel(&m);
        for v in k.basis_rows() {
            for r in &m.rows {
                let dot: Int = v.iter().zip(r).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
        // The rational kernel is spanned by (1, 1, -1); the integer kernel
        // must contain the primitive vector itself, not only a multiple.
        assert_eq!(k.rank(), 1);
        assert!(k.member(&ints(&[1, 1, -1])));
    }

    #[test]
    fn solve_examples() {
        let id = IntMatrix::identity(3);
        let b = ints(&[4, -1, 7]);
        assert_eq!(solve(&id, &b), Some(b.clone()));

        let m = mat(&[vec![2, 0], vec![0, 1]], 2);
        assert_eq!(solve(&m, &ints(&[4, 3])), Some(ints(&[2, 3])));
        assert_eq!(solve(&m, &ints(&[3, 0])), None);

        // Verified by substitution on a non-square system.
        let m = mat(&[vec![1, 2, 3], vec![0, 1, 1]], 3);
        let b = ints(&[1, 3, 4]);
        let x = solve(&m, &b).unwrap();
        let mut acc = vec![Int::zero(); 3];
        for (i, r) in m.rows.iter().enumerate() {
            row_axpy(&mut acc, r, &x[i]);
        }
        assert_eq!(acc, b);
    }

    #[test]
    fn member_examples() {
        let l = Lattice::from_rows(mat(&[vec![2, 0]], 2));
        assert!(!l.member(&ints(&[1, 0])));
        assert!(l.member(&ints(&[4, 0])));
    }

    #[test]
    fn insert_matches_full_rehnf() {
        let mut l = Lattice::empty(3);
        let vectors = [
            ints(&[2, 4, 0]),
            ints(&[0, 3, 1]),
            ints(&[1, 1, 1]),
            ints(&[0, 0, 5]),
        ];
        let mut rows: Vec<Vec<Int>> = Vec::new();
        for v in &vectors {
            l.insert(v);
            rows.push(v.clone());
            let reference = Lattice::from_rows(IntMatrix::new(rows.clone(), 3));
            let mut copy = l.clone();
            copy.normalize();
            assert_eq!(copy, reference);
        }
    }

    #[test]
    fn close_under_examples() {
        // A multiplicatively closed lattice is a fixed point in one pass.
        let l = Lattice::from_rows(mat(&[vec![1, 0], vec![0, 1]], 2));
        let pointwise =
            |x: &[Int], y: &[Int]| vec![&x[0] * &y[0], &x[1] * &y[1]];
        let closed = close_under(&l, pointwise);
        assert_eq!(closed.rank(), 2);

        // Span of (1,2) under coordinatewise product must grow to catch
        // (1,4).
        let l = Lattice::from_rows(mat(&[vec![1, 2]], 2));
        let closed = close_under(&l, pointwise);
        assert_eq!(closed.rank(), 2);
        assert!(closed.member(&ints(&[1, 4])));
    }
}

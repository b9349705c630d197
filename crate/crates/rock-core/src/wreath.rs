//! The wreath product `W_d = Z^{⊗d} ⋊ Z S_d` and its colored permutation
//! modules `M_{λ,c}`.
//!
//! Elements of `W_d` are integer combinations of `(z_1 ⊗ ... ⊗ z_d) g` with
//! `z_t ∈ B_Z` and `g ∈ S_d`; conjugation permutes tensor slots by
//! `g^{-1}(x_1 ⊗ ... ⊗ x_d) g = x_{g1} ⊗ ... ⊗ x_{gd}`. The module `M_{λ,c}`
//! has basis `{m·(z ⊗ g)}` with `g` running over the minimal right-coset
//! representatives `^λD` and `z_t` over the basis of `e_{c_r} Z` for `t` in
//! block `r`; arbitrary products rewrite to that normal form through the
//! sign character `ε_{λ,c}` of the parabolic.

use crate::combin::{
    block_lengths, min_coset_reps, parabolic_factorize, ColoredComposition, Permutation,
};
use crate::zigzag::{basis_ej, zigzag_mul, ZElem};
use crate::Result;
use std::collections::BTreeMap;

/// A pure tensor `z_1 ⊗ ... ⊗ z_d` of basis elements.
pub type ZTuple = Vec<ZElem>;

/// Cartesian product of a list of choice sets; one empty tuple when the
/// list is empty.
pub(crate) fn product_of<T: Clone>(factors: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![vec![]];
    for f in factors {
        out = out
            .into_iter()
            .flat_map(|v| {
                f.iter().map(move |x| {
                    let mut w = v.clone();
                    w.push(x.clone());
                    w
                })
            })
            .collect();
    }
    out
}

/// `(g y g^{-1})_t = y_{g^{-1}(t)}`.
fn conjugate(y: &ZTuple, g: &Permutation) -> ZTuple {
    let ginv = g.inverse();
    (0..y.len()).map(|t| y[ginv.apply(t)]).collect()
}

/// Componentwise product of two tuples; `None` is zero.
fn tuple_mul(x: &ZTuple, y: &ZTuple, e: usize) -> Option<ZTuple> {
    x.iter()
        .zip(y)
        .map(|(&a, &b)| zigzag_mul(a, b, e))
        .collect()
}

pub fn tuple_degree(z: &ZTuple) -> i64 {
    z.iter().map(|x| x.degree()).sum()
}

fn all_vertex_tuples(d: usize, e: usize) -> Vec<ZTuple> {
    let factors: Vec<Vec<ZElem>> = (0..d).map(|_| (1..e).map(ZElem::Vertex).collect()).collect();
    product_of(&factors)
}

/// An element of `W_d`: a sparse integer combination of `(tuple, g)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WreathElement {
    pub terms: BTreeMap<(ZTuple, Permutation), i64>,
}

impl WreathElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(z: ZTuple, g: Permutation) -> Self {
        let mut out = Self::zero();
        out.add_term(z, g, 1);
        out
    }

    /// The identity `1_Z^{⊗d} ⊗ id`: the sum over all vertex tuples.
    pub fn one(d: usize, e: usize) -> Self {
        let mut out = Self::zero();
        for z in all_vertex_tuples(d, e) {
            out.add_term(z, Permutation::identity(d), 1);
        }
        out
    }

    /// `x[a]`: `x` in slot `a` (0-indexed), identity components elsewhere.
    pub fn slot(x: ZElem, a: usize, d: usize, e: usize) -> Self {
        let factors: Vec<Vec<ZElem>> = (0..d)
            .map(|t| {
                if t == a {
                    vec![x]
                } else {
                    (1..e).map(ZElem::Vertex).collect()
                }
            })
            .collect();
        let mut out = Self::zero();
        for z in product_of(&factors) {
            out.add_term(z, Permutation::identity(d), 1);
        }
        out
    }

    /// The elementary transposition `s_r ∈ S_d ⊆ W_d`.
    pub fn transposition(d: usize, e: usize, r: usize) -> Self {
        let s = Permutation::transposition(d, r, r + 1);
        let mut out = Self::zero();
        for z in all_vertex_tuples(d, e) {
            out.add_term(z, s.clone(), 1);
        }
        out
    }

    pub fn add_term(&mut self, z: ZTuple, g: Permutation, c: i64) {
        if c == 0 {
            return;
        }
        let key = (z, g);
        let entry = self.terms.entry(key.clone()).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn scaled(&self, c: i64) -> Self {
        let mut out = Self::zero();
        for ((z, g), &v) in &self.terms {
            out.add_term(z.clone(), g.clone(), v * c);
        }
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((z, g), &c) in &other.terms {
            out.add_term(z.clone(), g.clone(), c);
        }
        out
    }

    /// Degree when all terms share one, `None` otherwise.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degs = self.terms.keys().map(|(z, _)| tuple_degree(z));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }
}

/// Product in `W_d`: bilinear extension of
/// `(x ⊗ g)(y ⊗ h) = x·(g y g^{-1}) ⊗ g h`.
pub fn wreath_mul(a: &WreathElement, b: &WreathElement, e: usize) -> WreathElement {
    let mut out = WreathElement::zero();
    for ((x, g), &ca) in &a.terms {
        for ((y, h), &cb) in &b.terms {
            if let Some(z) = tuple_mul(x, &conjugate(y, g), e) {
                out.add_term(z, g.compose(h), ca * cb);
            }
        }
    }
    out
}

/// The full tuple-times-permutation basis of `W_d`; `d!(4e-6)^d` elements.
pub fn wreath_basis(d: usize, e: usize) -> Vec<(ZTuple, Permutation)> {
    let zb = crate::zigzag::basis(e);
    let factors: Vec<Vec<ZElem>> = (0..d).map(|_| zb.clone()).collect();
    let tuples = product_of(&factors);
    let mut out = Vec::new();
    for g in all_permutations(d) {
        for z in &tuples {
            out.push((z.clone(), g.clone()));
        }
    }
    out
}

pub fn all_permutations(d: usize) -> Vec<Permutation> {
    use itertools::Itertools;
    (0..d)
        .permutations(d)
        .map(Permutation::from_images)
        .collect()
}

/// The sign `ζ_j`: `+1` for odd colors, `-1` for even ones.
pub fn zeta(j: usize) -> i64 {
    if j % 2 == 1 {
        1
    } else {
        -1
    }
}

/// `ε_{λ,c}(g) = Π_r ζ_{c_r}^{ℓ(g_r)}` for `g ∈ S_λ`.
pub fn epsilon(lc: &ColoredComposition, g: &Permutation) -> Result<i64> {
    let lengths = block_lengths(g, &lc.lambda)?;
    Ok(lengths
        .iter()
        .zip(&lc.colors)
        .map(|(&l, &c)| if l % 2 == 0 { 1 } else { zeta(c) })
        .product())
}

/// The idempotent `e_{λ,c} = e_{c_1}^{⊗λ_1} ⊗ ... ⊗ e_{c_n}^{⊗λ_n}` as a
/// tuple.
pub fn e_lambda_tuple(lc: &ColoredComposition) -> ZTuple {
    (0..lc.d())
        .map(|t| ZElem::Vertex(lc.colors[lc.lambda.block_of(t)]))
        .collect()
}

/// The colored permutation module `M_{λ,c}` with its canonical basis and
/// right `W_d`-action.
pub struct ColoredModule {
    pub lc: ColoredComposition,
    pub e: usize,
    pub d: usize,
    /// Basis `m·(z ⊗ g)`, `g ∈ ^λD`, `z_t ∈ e_{c_r} B_Z`, sorted.
    pub basis: Vec<(ZTuple, Permutation)>,
    index: BTreeMap<(ZTuple, Permutation), usize>,
    pub degrees: Vec<i64>,
}

impl ColoredModule {
    pub fn new(lc: &ColoredComposition, e: usize) -> Self {
        let d = lc.d();
        let reps = min_coset_reps(&lc.lambda);
        let slot_bases: Vec<Vec<ZElem>> = (0..d)
            .map(|t| basis_ej(lc.colors[lc.lambda.block_of(t)], e))
            .collect();
        let tuples = product_of(&slot_bases);
        let mut basis = Vec::new();
        for g in &reps {
            for z in &tuples {
                basis.push((z.clone(), g.clone()));
            }
        }
        basis.sort();
        let index = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, k)| (k, i))
            .collect();
        let degrees = basis.iter().map(|(z, _)| tuple_degree(z)).collect();
        ColoredModule {
            lc: lc.clone(),
            e,
            d,
            basis,
            index,
            degrees,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Index of the cyclic generator `m_{λ,c} = m·(e_{λ,c} ⊗ id)`.
    pub fn generator_index(&self) -> usize {
        let z = e_lambda_tuple(&self.lc);
        self.index[&(z, Permutation::identity(self.d))]
    }

    pub fn generator(&self) -> Vec<i64> {
        let mut v = vec![0; self.dim()];
        v[self.generator_index()] = 1;
        v
    }

    /// Action of the pure element `(y ⊗ h)` on basis vector `idx`: multiply
    /// in `e_λ W_d`, then rewrite `g h = h_1 g_2` with `h_1 ∈ S_λ`,
    /// extracting the sign `ε(h_1)` and permuting the tensor slots by `h_1`.
    pub fn act_basis(&self, idx: usize, y: &ZTuple, h: &Permutation) -> Option<(usize, i64)> {
        let (z, g) = &self.basis[idx];
        let w = tuple_mul(z, &conjugate(y, g), self.e)?;
        let gh = g.compose(h);
        let (h1, g2) = parabolic_factorize(&gh, &self.lc.lambda);
        let sign = epsilon(&self.lc, &h1).expect("factor lies in the parabolic");
        let permuted: ZTuple = (0..self.d).map(|t| w[h1.apply(t)]).collect();
        let i = *self
            .index
            .get(&(permuted, g2))
            .expect("rewritten term is an admissible basis element");
        Some((i, sign))
    }

    /// Right action of a `W_d` element on a coordinate vector.
    pub fn act(&self, v: &[i64], w: &WreathElement) -> Vec<i64> {
        let mut out = vec![0i64; self.dim()];
        for (idx, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for ((y, h), &cw) in &w.terms {
                if let Some((i, sign)) = self.act_basis(idx, y, h) {
                    out[i] += c * cw * sign;
                }
            }
        }
        out
    }

    /// Action matrix of `w`; `matrix[col][row]` = coefficient of basis `row`
    /// in the image of basis `col`.
    pub fn action_matrix(&self, w: &WreathElement) -> Vec<Vec<i64>> {
        (0..self.dim())
            .map(|idx| {
                let mut v = vec![0; self.dim()];
                v[idx] = 1;
                self.act(&v, w)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::Composition;
    use crate::gdim::{module_dim_closed_form, wreath_dim_closed_form};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn lc(parts: &[usize], colors: &[usize], e: usize) -> ColoredComposition {
        ColoredComposition::new(Composition::new(parts.to_vec()), colors.to_vec(), e).unwrap()
    }

    fn random_element(d: usize, e: usize, rng: &mut StdRng, terms: usize) -> WreathElement {
        let b = wreath_basis(d, e);
        let mut out = WreathElement::zero();
        for _ in 0..terms {
            let (z, g) = b[rng.gen_range(0..b.len())].clone();
            out.add_term(z, g, rng.gen_range(-2..=2i64));
        }
        out
    }

    #[test]
    fn identity_is_neutral() {
        for (d, e) in [(1, 2), (2, 2), (2, 3), (3, 2)] {
            let one = WreathElement::one(d, e);
            let mut rng = StdRng::seed_from_u64(0);
            for _ in 0..10 {
                let a = random_element(d, e, &mut rng, 3);
                assert_eq!(wreath_mul(&one, &a, e), a);
                assert_eq!(wreath_mul(&a, &one, e), a);
            }
        }
    }

    #[test]
    fn conjugation_matches_defining_relation() {
        // g^{-1} (x_1⊗...⊗x_d) g = x_{g1} ⊗ ... ⊗ x_{gd}.
        let mut rng = StdRng::seed_from_u64(1);
        for (d, e) in [(2, 3), (3, 2), (3, 3)] {
            let zb = crate::zigzag::basis(e);
            let perms = all_permutations(d);
            for _ in 0..20 {
                let z: ZTuple = (0..d).map(|_| zb[rng.gen_range(0..zb.len())]).collect();
                let g = perms[rng.gen_range(0..perms.len())].clone();
                let x = WreathElement::basis(z.clone(), Permutation::identity(d));
                let mut ge = WreathElement::zero();
                let mut gie = WreathElement::zero();
                for t in all_vertex_tuples(d, e) {
                    ge.add_term(t.clone(), g.clone(), 1);
                    gie.add_term(t, g.inverse(), 1);
                }
                let lhs = wreath_mul(&gie, &wreath_mul(&x, &ge, e), e);
                let expected: ZTuple = (0..d).map(|t| z[g.apply(t)]).collect();
                let rhs = WreathElement::basis(expected, Permutation::identity(d));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn associativity_on_random_homogeneous_triples() {
        let mut rng = StdRng::seed_from_u64(2);
        let mut checked = 0;
        for (d, e) in [(2, 2), (2, 3), (3, 2), (2, 4), (3, 3)] {
            for _ in 0..40 {
                let a = random_element(d, e, &mut rng, 2);
                let b = random_element(d, e, &mut rng, 2);
                let c = random_element(d, e, &mut rng, 2);
                let left = wreath_mul(&wreath_mul(&a, &b, e), &c, e);
                let right = wreath_mul(&a, &wreath_mul(&b, &c, e), e);
                assert_eq!(left, right);
                checked += 1;
            }
        }
        assert_eq!(checked, 200);
    }

    #[test]
    fn degree_additivity() {
        let mut rng = StdRng::seed_from_u64(3);
        for (d, e) in [(2, 3), (3, 2)] {
            let b = wreath_basis(d, e);
            for _ in 0..50 {
                let (z1, g1) = b[rng.gen_range(0..b.len())].clone();
                let (z2, g2) = b[rng.gen_range(0..b.len())].clone();
                let x = WreathElement::basis(z1.clone(), g1);
                let y = WreathElement::basis(z2.clone(), g2);
                let p = wreath_mul(&x, &y, e);
                if let Some(deg) = p.homogeneous_degree() {
                    assert_eq!(deg, tuple_degree(&z1) + tuple_degree(&z2));
                }
            }
        }
    }

    #[test]
    fn wreath_dimension_by_basis_count() {
        for e in 2..=4usize {
            for d in 1..=3usize {
                assert_eq!(
                    wreath_basis(d, e).len() as u64,
                    wreath_dim_closed_form(e, d)
                );
            }
        }
    }

    #[test]
    fn epsilon_examples_and_multiplicativity() {
        let c = lc(&[2, 1], &[1, 2], 3);
        // All-odd colors give +1.
        let codd = lc(&[2, 1], &[1, 1], 3);
        let s0 = Permutation::transposition(3, 0, 1);
        assert_eq!(epsilon(&codd, &s0).unwrap(), 1);
        // An even-colored block transposition gives -1.
        let ceven = lc(&[2, 1], &[2, 1], 3);
        assert_eq!(epsilon(&ceven, &s0).unwrap(), -1);
        // Outside the parabolic: error.
        let s1 = Permutation::transposition(3, 1, 2);
        assert_eq!(epsilon(&c, &s1), Err(crate::Error::NotInParabolic));
        // Multiplicativity within S_lambda.
        let lam = lc(&[3], &[2], 3);
        for g in all_permutations(3) {
            for h in all_permutations(3) {
                let gh = g.compose(&h);
                assert_eq!(
                    epsilon(&lam, &gh).unwrap(),
                    epsilon(&lam, &g).unwrap() * epsilon(&lam, &h).unwrap()
                );
            }
        }
    }

    #[test]
    fn module_dims_match_closed_form() {
        for e in 2..=4usize {
            for (parts, colors) in [
                (vec![1], vec![1]),
                (vec![2], vec![1]),
                (vec![1, 1], vec![1, 1]),
                (vec![2, 1], vec![1, 1]),
            ] {
                let colors: Vec<usize> = colors.iter().map(|&c: &usize| c.min(e - 1)).collect();
                let lcc =
                    ColoredComposition::new(Composition::new(parts.clone()), colors.clone(), e)
                        .unwrap();
                let m = ColoredModule::new(&lcc, e);
                assert_eq!(m.dim() as u64, module_dim_closed_form(&lcc, e));
            }
        }
        // The spec's headline case: e=3, lambda=(2), c=(1) has dimension 9.
        let m = ColoredModule::new(&lc(&[2], &[1], 3), 3);
        assert_eq!(m.dim(), 9);
    }

    #[test]
    fn generator_is_epsilon_twisted() {
        // m·(e_λ ⊗ g) = ε(g)·m for g ∈ S_λ.
        let lam = lc(&[2, 1], &[2, 1], 3);
        let m = ColoredModule::new(&lam, 3);
        let gen = m.generator();
        let el = e_lambda_tuple(&lam);
        for g in all_permutations(3) {
            if !g.in_parabolic(&lam.lambda) {
                continue;
            }
            let w = WreathElement::basis(el.clone(), g.clone());
            let image = m.act(&gen, &w);
            let expected: Vec<i64> = gen
                .iter()
                .map(|&c| c * epsilon(&lam, &g).unwrap())
                .collect();
            assert_eq!(image, expected);
        }
    }

    #[test]
    fn action_is_associative() {
        // (v·w)·w' = v·(w w') on random triples.
        let mut rng = StdRng::seed_from_u64(4);
        for (d, e) in [(2, 2), (2, 3), (3, 2)] {
            let lam = lc(
                &if d == 2 { vec![1, 1] } else { vec![2, 1] },
                &[1, 1],
                e,
            );
            let m = ColoredModule::new(&lam, e);
            for _ in 0..20 {
                let mut v = vec![0i64; m.dim()];
                for _ in 0..3 {
                    v[rng.gen_range(0..m.dim())] = rng.gen_range(-2..=2);
                }
                let w1 = random_element(d, e, &mut rng, 2);
                let w2 = random_element(d, e, &mut rng, 2);
                let lhs = m.act(&m.act(&v, &w1), &w2);
                let rhs = m.act(&v, &wreath_mul(&w1, &w2, e));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn action_matrices_respect_products_on_generators() {
        // ρ(w)ρ(w') = ρ(ww') for elementary transpositions and slots x[a].
        let e = 3;
        let lam = lc(&[1, 1], &[1, 2], e);
        let m = ColoredModule::new(&lam, e);
        let mut gens = vec![WreathElement::transposition(2, e, 0)];
        for x in crate::zigzag::basis(e) {
            for a in 0..2 {
                gens.push(WreathElement::slot(x, a, 2, e));
            }
        }
        for w1 in &gens {
            for w2 in &gens {
                let prod = wreath_mul(w1, w2, e);
                for idx in 0..m.dim() {
                    let mut v = vec![0i64; m.dim()];
                    v[idx] = 1;
                    assert_eq!(m.act(&m.act(&v, w1), w2), m.act(&v, &prod));
                }
            }
        }
    }

    #[test]
    fn module_grading_bounds() {
        let e = 3;
        let lam = lc(&[2], &[1], e);
        let m = ColoredModule::new(&lam, e);
        for (idx, &deg) in m.degrees.iter().enumerate() {
            assert!(
                (0..=2 * m.d as i64).contains(&deg),
                "basis {idx} degree {deg}"
            );
        }
    }
}

//! The Turner double `D_Q(n,d)` built directly from signed symmetric
//! invariants of `X^{⊗d}`, `X = M_n(P_Q)`.
//!
//! `P_Q` is the path algebra of a linearly oriented type `A_{e-1}` quiver
//! modulo paths of length two: vertices `ι_j` (even, degree 0) and edges
//! `α_j: j -> j+1` (odd, degree 1). The symmetric group acts on `X^{⊗d}` by
//! signed place permutations; `Inv^f X` carries the orbit-sum basis indexed
//! by weakly increasing tuples with no repeated odd entry. The double is
//! `D^d X = ⊕_f Inv^f X ⊗ (Inv^{d-f} X)*` with the Sweedler product; the
//! dual factor's grading is the primal one shifted by `2(d-f)`, so the whole
//! algebra is concentrated in degrees `0..=2d`.

use crate::laurent::LaurentPoly;
use std::collections::{BTreeMap, HashMap};

/// A basis element of `P_Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PElem {
    /// `ι_j`, `j ∈ 1..e`.
    Vertex(usize),
    /// `α_j: j -> j+1`, `j ∈ 1..e-1`.
    Edge(usize),
}

impl PElem {
    fn parity(&self) -> u8 {
        match self {
            PElem::Vertex(_) => 0,
            PElem::Edge(_) => 1,
        }
    }

    fn source(&self) -> usize {
        match *self {
            PElem::Vertex(j) => j,
            PElem::Edge(j) => j,
        }
    }

    fn target(&self) -> usize {
        match *self {
            PElem::Vertex(j) => j,
            PElem::Edge(j) => j + 1,
        }
    }

    /// Function composition; `None` is zero. Paths of length two die.
    fn mul(self, other: PElem) -> Option<PElem> {
        if self.source() != other.target() {
            return None;
        }
        match (self, other) {
            (PElem::Vertex(_), y) => Some(y),
            (x, PElem::Vertex(_)) => Some(x),
            (PElem::Edge(_), PElem::Edge(_)) => None,
        }
    }
}

/// A basis element of `X = M_n(P_Q)`: `p · E_{row,col}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XElem {
    pub p: PElem,
    pub row: usize,
    pub col: usize,
}

/// The basis of `X` in a fixed total order.
pub fn x_basis(e: usize, n: usize) -> Vec<XElem> {
    let mut out = Vec::new();
    for j in 1..e {
        for row in 0..n {
            for col in 0..n {
                out.push(XElem {
                    p: PElem::Vertex(j),
                    row,
                    col,
                });
            }
        }
    }
    for j in 1..e.saturating_sub(1) {
        for row in 0..n {
            for col in 0..n {
                out.push(XElem {
                    p: PElem::Edge(j),
                    row,
                    col,
                });
            }
        }
    }
    out
}

/// A canonical invariant-basis index: a weakly increasing tuple of X-basis
/// indices with all odd entries pairwise distinct.
pub type InvIndex = Vec<usize>;

/// A coordinate vector over the orbit basis of some `Inv^f X`.
pub type InvVec = Vec<(usize, i64)>;

struct InvLevel {
    tuples: Vec<InvIndex>,
    index: HashMap<InvIndex, usize>,
    degrees: Vec<i64>,
    parities: Vec<u8>,
}

/// All computation state for one `D_Q(n,d)`: the X basis, the invariant
/// bases of every rank `0..=d`, and memoized product/coproduct tables.
pub struct DoubleContext {
    pub e: usize,
    pub n: usize,
    pub d: usize,
    xs: Vec<XElem>,
    x_parity: Vec<u8>,
    x_index: HashMap<XElem, usize>,
    levels: Vec<InvLevel>,
    orbit_cache: HashMap<(usize, usize), Vec<(Vec<usize>, i64)>>,
    mul_cache: HashMap<(usize, usize, usize), InvVec>,
    delta_cache: HashMap<(usize, usize, usize), Vec<(usize, usize, i64)>>,
}

impl DoubleContext {
    pub fn new(e: usize, n: usize, d: usize) -> Self {
        let xs = x_basis(e, n);
        let x_parity: Vec<u8> = xs.iter().map(|x| x.p.parity()).collect();
        let x_index: HashMap<XElem, usize> = xs
            .iter()
            .copied()
            .enumerate()
            .map(|(i, x)| (x, i))
            .collect();
        let mut levels = Vec::with_capacity(d + 1);
        for f in 0..=d {
            let mut tuples = Vec::new();
            gen_tuples(&xs, &x_parity, f, 0, &mut Vec::new(), &mut tuples);
            let index = tuples
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, t)| (t, i))
                .collect();
            let degrees = tuples
                .iter()
                .map(|t| t.iter().map(|&i| x_parity[i] as i64).sum())
                .collect();
            let parities = tuples
                .iter()
                .map(|t| t.iter().map(|&i| x_parity[i]).sum::<u8>() % 2)
                .collect();
            levels.push(InvLevel {
                tuples,
                index,
                degrees,
                parities,
            });
        }
        DoubleContext {
            e,
            n,
            d,
            xs,
            x_parity,
            x_index,
            levels,
            orbit_cache: HashMap::new(),
            mul_cache: HashMap::new(),
            delta_cache: HashMap::new(),
        }
    }

    /// Rank of `Inv^f X`.
    pub fn inv_rank(&self, f: usize) -> usize {
        self.levels[f].tuples.len()
    }

    pub fn inv_tuple(&self, f: usize, idx: usize) -> &InvIndex {
        &self.levels[f].tuples[idx]
    }

    pub fn inv_degree(&self, f: usize, idx: usize) -> i64 {
        self.levels[f].degrees[idx]
    }

    fn inv_parity(&self, f: usize, idx: usize) -> u8 {
        self.levels[f].parities[idx]
    }

    /// Word expansion of the orbit sum `v_T`: distinct arrangements with the
    /// Koszul sign of the rearrangement (odd-odd inversions).
    fn orbit_words(&mut self, f: usize, idx: usize) -> &Vec<(Vec<usize>, i64)> {
        let key = (f, idx);
        if !self.orbit_cache.contains_key(&key) {
            let t = self.levels[f].tuples[idx].clone();
            let mut words = Vec::new();
            distinct_arrangements(&t, &mut Vec::new(), &mut words);
            let expanded: Vec<(Vec<usize>, i64)> = words
                .into_iter()
                .map(|w| {
                    let mut inv = 0;
                    for i in 0..w.len() {
                        for j in i + 1..w.len() {
                            if self.x_parity[w[i]] == 1
                                && self.x_parity[w[j]] == 1
                                && w[i] > w[j]
                            {
                                inv += 1;
                            }
                        }
                    }
                    let sign = if inv % 2 == 0 { 1 } else { -1 };
                    (w, sign)
                })
                .collect();
            self.orbit_cache.insert(key, expanded);
        }
        &self.orbit_cache[&key]
    }

    /// Componentwise product of two words in `X^{⊗f}` with the tensor Koszul
    /// sign `(-1)^{Σ_{i<j} |y_i||x_j|}`.
    fn word_mul(&self, x: &[usize], y: &[usize]) -> Option<(Vec<usize>, i64)> {
        let mut sign_exp = 0u32;
        for i in 0..y.len() {
            for j in i + 1..x.len() {
                sign_exp += (self.x_parity[y[i]] * self.x_parity[x[j]]) as u32;
            }
        }
        let mut out = Vec::with_capacity(x.len());
        for (&a, &b) in x.iter().zip(y) {
            let xa = self.xs[a];
            let xb = self.xs[b];
            if xa.col != xb.row {
                return None;
            }
            let p = xa.p.mul(xb.p)?;
            out.push(self.x_index[&XElem {
                p,
                row: xa.row,
                col: xb.col,
            }]);
        }
        Some((out, if sign_exp % 2 == 0 { 1 } else { -1 }))
    }

    /// Product `v_a · v_b` in `Inv^f X`, in orbit coordinates.
    pub fn inv_mul(&mut self, f: usize, a: usize, b: usize) -> InvVec {
        let key = (f, a, b);
        if let Some(v) = self.mul_cache.get(&key) {
            return v.clone();
        }
        let wa = self.orbit_words(f, a).clone();
        let wb = self.orbit_words(f, b).clone();
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for (u, su) in &wa {
            for (w, sw) in &wb {
                if let Some((prod, sp)) = self.word_mul(u, w) {
                    // Keep only canonical (sorted) words: they carry the
                    // orbit coordinates of the invariant result.
                    if prod.windows(2).all(|p| p[0] <= p[1]) {
                        if let Some(&idx) = self.levels[f].index.get(&prod) {
                            *acc.entry(idx).or_insert(0) += su * sw * sp;
                        }
                        // A sorted word with repeated odd entries indexes no
                        // basis element; its coefficient must vanish in any
                        // invariant vector, so dropping it is sound.
                    }
                }
            }
        }
        let v: InvVec = acc.into_iter().filter(|&(_, c)| c != 0).collect();
        self.mul_cache.insert(key, v.clone());
        v
    }

    /// Coproduct component `Δ_{a,f-a}(v_idx) = Σ c · v_P ⊗ v_Q` as triples
    /// `(P, Q, c)`.
    pub fn delta(&mut self, f: usize, idx: usize, a: usize) -> Vec<(usize, usize, i64)> {
        let key = (f, idx, a);
        if let Some(v) = self.delta_cache.get(&key) {
            return v.clone();
        }
        let words = self.orbit_words(f, idx).clone();
        let mut acc: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for (w, s) in &words {
            let (left, right) = w.split_at(a);
            if left.windows(2).all(|p| p[0] <= p[1]) && right.windows(2).all(|p| p[0] <= p[1]) {
                if let (Some(&pi), Some(&qi)) = (
                    self.levels[a].index.get(left),
                    self.levels[f - a].index.get(right),
                ) {
                    *acc.entry((pi, qi)).or_insert(0) += s;
                }
            }
        }
        let v: Vec<(usize, usize, i64)> = acc
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|((p, q), c)| (p, q, c))
            .collect();
        self.delta_cache.insert(key, v.clone());
        v
    }

    /// Degree of a basis term of `D^d X`: primal degree plus the dual
    /// factor's `2(d-f)`-shifted degree.
    pub fn term_degree(&self, f: usize, a: usize, b: usize) -> i64 {
        self.inv_degree(f, a) + 2 * (self.d - f) as i64 - self.inv_degree(self.d - f, b)
    }

    /// The unit `1_X^{⊗d} ⊗ ε`: the sum of all weakly increasing tuples of
    /// diagonal vertex elements, paired with the rank-0 dual generator.
    pub fn unit(&self) -> DoubleElement {
        let diag: Vec<usize> = self
            .xs
            .iter()
            .enumerate()
            .filter(|(_, x)| matches!(x.p, PElem::Vertex(_)) && x.row == x.col)
            .map(|(i, _)| i)
            .collect();
        let mut out = DoubleElement::zero(self.d);
        let mut stack = Vec::new();
        collect_multisets(&diag, self.d, 0, &mut stack, &mut |t| {
            let idx = self.levels[self.d].index[t];
            out.add_term(self.d, idx, 0, 1);
        });
        out
    }

    /// The Sweedler product on `D^d X`.
    pub fn mul(&mut self, x: &DoubleElement, y: &DoubleElement) -> DoubleElement {
        assert_eq!(x.d, self.d);
        assert_eq!(y.d, self.d);
        let d = self.d;
        let mut out = DoubleElement::zero(d);
        for (&(f1, a, bdual), &cx) in &x.terms {
            for (&(f2, cc, ddual), &cy) in &y.terms {
                if f1 + f2 < d {
                    continue;
                }
                let g = d - f2;
                let h = f1 + f2 - d;
                let par_eta = self.inv_parity(f2, cc);
                let par_x = self.inv_parity(d - f1, bdual);
                let par_y = self.inv_parity(d - f2, ddual);
                let dxa = self.delta(f1, a, g);
                let dcc = self.delta(f2, cc, h);
                for &(p, q, c1) in &dxa {
                    let par_p = self.inv_parity(g, p);
                    let par_q = self.inv_parity(f1 - g, q);
                    for &(r, s, c2) in &dcc {
                        let par_r = self.inv_parity(h, r);
                        let sign_exp = par_p as u32 * (par_q + par_eta + par_x) as u32
                            + par_r as u32 * par_x as u32;
                        let sign = if sign_exp % 2 == 0 { 1i64 } else { -1 };
                        // Primal part: v_q · v_r in Inv^h.
                        let prim = self.inv_mul(h, q, r);
                        if prim.is_empty() {
                            continue;
                        }
                        // Dual part: (x·v_s)(v_p·y) evaluated on the basis
                        // of Inv^{d-h}.
                        let dual = self.dual_product(bdual, s, f2 - h, p, ddual, f1, f2, par_y);
                        if dual.is_empty() {
                            continue;
                        }
                        for &(pi, pc) in &prim {
                            for &(wi, wc) in &dual {
                                out.add_term(h, pi, wi, cx * cy * sign * c1 * c2 * pc * wc);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// The functional `(x · v_s)(v_p · y)` on `Inv^{2d-f1-f2} X`, in dual
    /// coordinates. `x = v_b*` has rank `d-f1`, `y = v_ddual*` has rank
    /// `d-f2`, `v_s ∈ Inv^{f2-h}`, `v_p ∈ Inv^{d-f2}`.
    #[allow(clippy::too_many_arguments)]
    fn dual_product(
        &mut self,
        bdual: usize,
        s: usize,
        s_rank: usize,
        p: usize,
        ddual: usize,
        f1: usize,
        f2: usize,
        par_y: u8,
    ) -> InvVec {
        let d = self.d;
        debug_assert_eq!(s_rank, d - f1);
        let w_rank = 2 * d - f1 - f2;
        let par_p = self.inv_parity(d - f2, p);
        let par_g2 = (par_p + par_y) % 2;
        let mut out = Vec::new();
        for w in 0..self.inv_rank(w_rank) {
            let mut total = 0i64;
            for (v1, v2, c3) in self.delta(w_rank, w, d - f1) {
                // F(v1) = x(v_s · v_v1): the b-coordinate of the product.
                let fprod = self.inv_mul(d - f1, s, v1);
                let fval = fprod
                    .iter()
                    .find(|&&(i, _)| i == bdual)
                    .map(|&(_, c)| c)
                    .unwrap_or(0);
                if fval == 0 {
                    continue;
                }
                // G(v2) = y(v_v2 · v_p).
                let gprod = self.inv_mul(d - f2, v2, p);
                let gval = gprod
                    .iter()
                    .find(|&&(i, _)| i == ddual)
                    .map(|&(_, c)| c)
                    .unwrap_or(0);
                if gval == 0 {
                    continue;
                }
                let par_v1 = self.inv_parity(d - f1, v1);
                let sign = if (par_g2 * par_v1) % 2 == 0 { 1 } else { -1 };
                total += c3 * sign * fval * gval;
            }
            if total != 0 {
                out.push((w, total));
            }
        }
        out
    }

    /// `dim_q D^d X` with the shifted dual grading.
    pub fn graded_rank(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for f in 0..=self.d {
            for a in 0..self.inv_rank(f) {
                for b in 0..self.inv_rank(self.d - f) {
                    p.add_term(self.term_degree(f, a, b), 1);
                }
            }
        }
        p
    }

    pub fn total_rank(&self) -> usize {
        (0..=self.d)
            .map(|f| self.inv_rank(f) * self.inv_rank(self.d - f))
            .sum()
    }
}

fn gen_tuples(
    xs: &[XElem],
    parity: &[u8],
    f: usize,
    start: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<InvIndex>,
) {
    if stack.len() == f {
        out.push(stack.clone());
        return;
    }
    for i in start..xs.len() {
        // Repeated odd entries vanish under signed symmetrization.
        if parity[i] == 1 && stack.last() == Some(&i) {
            continue;
        }
        stack.push(i);
        gen_tuples(xs, parity, f, i, stack, out);
        stack.pop();
    }
}

fn distinct_arrangements(t: &[usize], stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if stack.len() == t.len() {
        out.push(stack.clone());
        return;
    }
    let mut remaining: Vec<usize> = t.to_vec();
    for s in stack.iter() {
        let pos = remaining.iter().position(|x| x == s).unwrap();
        remaining.remove(pos);
    }
    let mut seen = std::collections::HashSet::new();
    for &x in &remaining {
        if seen.insert(x) {
            stack.push(x);
            distinct_arrangements(t, stack, out);
            stack.pop();
        }
    }
}

fn collect_multisets(
    pool: &[usize],
    size: usize,
    start: usize,
    stack: &mut Vec<usize>,
    f: &mut impl FnMut(&InvIndex),
) {
    if stack.len() == size {
        let mut t = stack.clone();
        t.sort_unstable();
        f(&t);
        return;
    }
    for i in start..pool.len() {
        stack.push(pool[i]);
        collect_multisets(pool, size, i, stack, f);
        stack.pop();
    }
}

/// An element of `D^d X`: sparse coefficients over the pair basis
/// `(f, a ∈ Inv^f, b ∈ (Inv^{d-f})*)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleElement {
    pub d: usize,
    pub terms: BTreeMap<(usize, usize, usize), i64>,
}

impl DoubleElement {
    pub fn zero(d: usize) -> Self {
        Self {
            d,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(d: usize, f: usize, a: usize, b: usize) -> Self {
        let mut x = Self::zero(d);
        x.add_term(f, a, b, 1);
        x
    }

    pub fn add_term(&mut self, f: usize, a: usize, b: usize, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry((f, a, b)).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&(f, a, b));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zigzag::graded_dim_z;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn inv_ranks_by_binomial_count() {
        // Σ_k C(odd, k) C(even + f - k - 1, f - k).
        for (e, n, d) in [(2, 1, 2), (2, 2, 2), (3, 2, 2), (3, 1, 3)] {
            let ctx = DoubleContext::new(e, n, d);
            let even = (e - 1) * n * n;
            let odd = e.saturating_sub(2) * n * n;
            for f in 0..=d {
                let expected: u64 = (0..=f.min(odd))
                    .map(|k| binom(odd, k) * binom(even + f - k - 1, f - k))
                    .sum();
                assert_eq!(ctx.inv_rank(f) as u64, expected, "e={e} n={n} f={f}");
            }
        }
        // e=2, n=1: X has rank 1 (all even), so Inv^2 has rank 1.
        let ctx = DoubleContext::new(2, 1, 2);
        assert_eq!(ctx.inv_rank(2), 1);
    }

    fn binom(n: usize, k: usize) -> u64 {
        if k > n {
            return 0;
        }
        let mut r = 1u64;
        for i in 0..k {
            r = r * (n - i) as u64 / (i + 1) as u64;
        }
        r
    }

    #[test]
    fn d1_graded_rank_matches_zigzag() {
        // dim_q D^1 X = (e-1)(1+q^2) + 2(e-2)q = dim_q Z for every e, n = 1.
        for e in 2..=5 {
            let ctx = DoubleContext::new(e, 1, 1);
            assert_eq!(ctx.graded_rank(), graded_dim_z(e), "e={e}");
        }
    }

    #[test]
    fn unit_is_neutral() {
        let mut rng = StdRng::seed_from_u64(7);
        let mut checked = 0;
        for (e, n, d) in [(2, 1, 1), (2, 2, 2), (3, 2, 2), (3, 1, 2)] {
            let mut ctx = DoubleContext::new(e, n, d);
            let one = ctx.unit();
            assert_eq!(ctx.mul(&one, &one), one, "unit is idempotent");
            for _ in 0..25 {
                let x = random_element(&ctx, &mut rng, 3);
                assert_eq!(ctx.mul(&one, &x), x);
                assert_eq!(ctx.mul(&x, &one), x);
                checked += 1;
            }
        }
        assert_eq!(checked, 100);
    }

    fn random_element(ctx: &DoubleContext, rng: &mut StdRng, terms: usize) -> DoubleElement {
        let mut x = DoubleElement::zero(ctx.d);
        for _ in 0..terms {
            let f = rng.gen_range(0..=ctx.d);
            let a = rng.gen_range(0..ctx.inv_rank(f));
            let b = rng.gen_range(0..ctx.inv_rank(ctx.d - f));
            x.add_term(f, a, b, rng.gen_range(-2..=2i64));
        }
        x
    }

    #[test]
    fn product_is_associative() {
        let mut rng = StdRng::seed_from_u64(8);
        let mut checked = 0;
        for (e, n, d) in [(2, 1, 2), (2, 2, 2), (3, 2, 2), (3, 1, 3)] {
            let mut ctx = DoubleContext::new(e, n, d);
            for _ in 0..50 {
                let x = random_element(&ctx, &mut rng, 2);
                let y = random_element(&ctx, &mut rng, 2);
                let z = random_element(&ctx, &mut rng, 2);
                let xy = ctx.mul(&x, &y);
                let yz = ctx.mul(&y, &z);
                assert_eq!(ctx.mul(&xy, &z), ctx.mul(&x, &yz));
                checked += 1;
            }
        }
        assert_eq!(checked, 200);
    }

    #[test]
    fn product_respects_grading_and_rank_filtration() {
        let mut ctx = DoubleContext::new(3, 2, 2);
        let d = ctx.d;
        for f1 in 0..=d {
            for f2 in 0..=d {
                let x = DoubleElement::basis(d, f1, 0, 0);
                let y = DoubleElement::basis(d, f2, 0, 0);
                let p = ctx.mul(&x, &y);
                for (&(f, a, b), _) in &p.terms {
                    assert_eq!(f, f1 + f2 - d, "rank component");
                    assert_eq!(
                        ctx.term_degree(f, a, b),
                        ctx.term_degree(f1, 0, 0) + ctx.term_degree(f2, 0, 0)
                    );
                }
                if f1 + f2 < d {
                    assert!(p.is_zero());
                }
            }
        }
    }

    #[test]
    fn degrees_stay_in_range() {
        for (e, n, d) in [(2, 2, 2), (3, 2, 2)] {
            let ctx = DoubleContext::new(e, n, d);
            for f in 0..=d {
                for a in 0..ctx.inv_rank(f) {
                    for b in 0..ctx.inv_rank(d - f) {
                        let deg = ctx.term_degree(f, a, b);
                        assert!((0..=2 * d as i64).contains(&deg));
                    }
                }
            }
        }
    }
}

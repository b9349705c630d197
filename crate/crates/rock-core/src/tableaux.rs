//! Standard tableaux for skew shapes with divided-power residue words, the
//! degree statistic, refinements, colored tableaux and the matrix-counting
//! sets they biject onto.

use crate::combin::{
    is_j_bend, residue, Multipartition, Node, Partition, SkewShape,
};
use crate::words::DividedPowerWord;
use crate::{Error, Result};
use std::collections::BTreeMap;

/// Addable `i`-nodes of a partition.
pub fn addable(nu: &Partition, i: usize, e: usize) -> Vec<(usize, usize)> {
    nu.addable_nodes()
        .into_iter()
        .filter(|&(r, s)| residue(r, s, e) == i)
        .collect()
}

/// Removable `i`-nodes of a partition.
pub fn removable(nu: &Partition, i: usize, e: usize) -> Vec<(usize, usize)> {
    nu.removable_nodes()
        .into_iter()
        .filter(|&(r, s)| residue(r, s, e) == i)
        .collect()
}

/// `d_U(ν) = Σ_{v ∈ Add(ν,i)} a(v,U) - Σ_{v ∈ Rem(ν,i)\U} a(v,U)` where
/// `a(v,U)` counts the nodes of `U` strictly above `v`. `U` must consist of
/// removable `i`-nodes of `ν`.
pub fn d_u(nu: &Partition, u: &[(usize, usize)], i: usize, e: usize) -> Result<i64> {
    let rem = removable(nu, i, e);
    if !u.iter().all(|x| rem.contains(x)) {
        return Err(Error::NotRemovable(i));
    }
    let above = |v: (usize, usize)| u.iter().filter(|x| x.0 < v.0).count() as i64;
    let add_sum: i64 = addable(nu, i, e).into_iter().map(above).sum();
    let rem_sum: i64 = rem
        .into_iter()
        .filter(|x| !u.contains(x))
        .map(above)
        .sum();
    Ok(add_sum - rem_sum)
}

/// An `i`-standard tableau of skew shape with a divided-power word: labels
/// are `1..=r`, fiber `k` has `m_k` nodes of residue `i_k`, and labels
/// strictly increase along rows and columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardTableau {
    pub shape: SkewShape,
    pub word: DividedPowerWord,
    /// node -> label, sorted by node.
    pub labels: BTreeMap<(usize, usize), usize>,
    pub degree: i64,
}

impl StandardTableau {
    /// Independent validity re-check straight from the definition.
    pub fn is_valid(&self, e: usize) -> bool {
        let cells = self.shape.cells();
        if cells.len() != self.labels.len() || !cells.iter().all(|c| self.labels.contains_key(c)) {
            return false;
        }
        // (i) strictly order-preserving on comparable nodes.
        for (&u, &ku) in &self.labels {
            for (&v, &kv) in &self.labels {
                if u != v && u.0 <= v.0 && u.1 <= v.1 && ku >= kv {
                    return false;
                }
            }
        }
        // (ii), (iii) residues and fiber sizes.
        for (k, &(i, m)) in self.word.entries.iter().enumerate() {
            let fiber: Vec<_> = self
                .labels
                .iter()
                .filter(|&(_, &l)| l == k + 1)
                .map(|(&c, _)| c)
                .collect();
            if fiber.len() != m || fiber.iter().any(|&(r, s)| residue(r, s, e) != i) {
                return false;
            }
        }
        true
    }
}

/// Recomputes the degree of a tableau from scratch by replaying the fibers.
pub fn degree(t: &StandardTableau, e: usize) -> i64 {
    let mut nu = t.shape.inner.clone();
    let mut total = 0;
    for (k, &(i, _)) in t.word.entries.iter().enumerate() {
        let fiber: Vec<(usize, usize)> = t
            .labels
            .iter()
            .filter(|&(_, &l)| l == k + 1)
            .map(|(&c, _)| c)
            .collect();
        for &(r, s) in &fiber {
            nu = nu.with_cell_added(r, s);
        }
        total += d_u(&nu, &fiber, i, e).expect("fiber nodes are removable");
    }
    total
}

/// All `word`-standard tableaux of the given skew shape. Empty when the
/// residue content of the shape does not match the weight of the word.
pub fn enumerate_std(shape: &SkewShape, word: &DividedPowerWord, e: usize) -> Vec<StandardTableau> {
    if shape.content(e) != word.weight(e).counts || shape.size() != word.len_expanded() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut labels = BTreeMap::new();
    fill(
        shape,
        word,
        e,
        0,
        shape.inner.clone(),
        0,
        &mut labels,
        &mut out,
    );
    out
}

#[allow(clippy::too_many_arguments)]
fn fill(
    shape: &SkewShape,
    word: &DividedPowerWord,
    e: usize,
    k: usize,
    nu: Partition,
    deg: i64,
    labels: &mut BTreeMap<(usize, usize), usize>,
    out: &mut Vec<StandardTableau>,
) {
    if k == word.entries.len() {
        let t = StandardTableau {
            shape: shape.clone(),
            word: word.clone(),
            labels: labels.clone(),
            degree: deg,
        };
        debug_assert_eq!(degree(&t, e), deg);
        out.push(t);
        return;
    }
    let (i, m) = word.entries[k];
    // Candidate nodes: addable i-nodes of nu that stay inside the outer shape.
    let cands: Vec<(usize, usize)> = addable(&nu, i, e)
        .into_iter()
        .filter(|&(r, s)| shape.outer.has_cell(r, s))
        .collect();
    if cands.len() < m {
        return;
    }
    for chosen in subsets(&cands, m) {
        let mut next = nu.clone();
        for &(r, s) in &chosen {
            next = next.with_cell_added(r, s);
        }
        let du = d_u(&next, &chosen, i, e).expect("chosen nodes are removable after insertion");
        for &c in &chosen {
            labels.insert(c, k + 1);
        }
        fill(shape, word, e, k + 1, next, deg + du, labels, out);
        for c in &chosen {
            labels.remove(c);
        }
    }
}

fn subsets(items: &[(usize, usize)], m: usize) -> Vec<Vec<(usize, usize)>> {
    use itertools::Itertools;
    items.iter().copied().combinations(m).collect()
}

/// All refinements of `t`: standard tableaux for the expanded word whose
/// label blocks reproduce the fibers of `t`. Lemma-checked elsewhere:
/// `Σ_s q^{deg s} = i! · q^{deg t}`.
pub fn refinements(t: &StandardTableau, e: usize) -> Vec<StandardTableau> {
    let hat = DividedPowerWord::from_word(&t.word.hat());
    enumerate_std(&t.shape, &hat, e)
        .into_iter()
        .filter(|s| {
            let mut offset = 0;
            t.word.entries.iter().enumerate().all(|(k, &(_, m))| {
                let want: Vec<_> = t
                    .labels
                    .iter()
                    .filter(|&(_, &l)| l == k + 1)
                    .map(|(&c, _)| c)
                    .collect();
                let got: Vec<_> = s
                    .labels
                    .iter()
                    .filter(|&(_, &l)| offset < l && l <= offset + m)
                    .map(|(&c, _)| c)
                    .collect();
                offset += m;
                want == got
            })
        })
        .collect()
}

/// A colored tableau: a weakly increasing map `Y(𝝁) -> {1..n}` whose fiber
/// `r` is a `c_r`-bend of size `λ_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredTableau {
    pub shape: Multipartition,
    pub labels: BTreeMap<Node, usize>,
}

impl ColoredTableau {
    pub fn is_valid(&self, lc: &crate::combin::ColoredComposition) -> bool {
        let nodes = self.shape.nodes();
        if nodes.len() != self.labels.len() {
            return false;
        }
        for u in &nodes {
            for v in &nodes {
                if u.leq(v) && self.labels[u] > self.labels[v] {
                    return false;
                }
            }
        }
        for (r, (&lam, &c)) in lc
            .lambda
            .parts()
            .iter()
            .zip(lc.colors.iter())
            .enumerate()
        {
            let fiber: Vec<Node> = self
                .labels
                .iter()
                .filter(|&(_, &l)| l == r + 1)
                .map(|(&n, _)| n)
                .collect();
            if fiber.len() != lam || !is_j_bend(&fiber, c) {
                return false;
            }
        }
        true
    }
}

/// Ways to grow `nu` into `nu'` with `nu'/nu` a horizontal strip of size
/// `m`, inside the bound `beta`.
fn horizontal_strip_extensions(nu: &Partition, beta: &Partition, m: usize) -> Vec<Partition> {
    let rows = beta.len();
    let mut out = Vec::new();
    let mut current: Vec<usize> = (1..=rows).map(|r| nu.part(r)).collect();
    fn rec(
        r: usize,
        rows: usize,
        left: usize,
        nu: &Partition,
        beta: &Partition,
        current: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if r > rows {
            if left == 0 {
                out.push(Partition::new(current.clone()).unwrap());
            }
            return;
        }
        let lo = nu.part(r);
        let cap = if r == 1 { beta.part(1) } else { beta.part(r).min(nu.part(r - 1)) };
        for v in lo..=cap {
            if v - lo > left {
                break;
            }
            current[r - 1] = v;
            rec(r + 1, rows, left - (v - lo), nu, beta, current, out);
        }
        current[r - 1] = lo;
    }
    rec(1, rows, m, nu, beta, &mut current, &mut out);
    out
}

/// Ways to grow `nu` by a vertical strip of size `m` inside `beta`, via
/// conjugation.
fn vertical_strip_extensions(nu: &Partition, beta: &Partition, m: usize) -> Vec<Partition> {
    horizontal_strip_extensions(&nu.conjugate(), &beta.conjugate(), m)
        .into_iter()
        .map(|p| p.conjugate())
        .collect()
}

/// All colored tableaux of shape `mu` (an `I`-multipartition) and type
/// `(λ,c)`, built fiber by fiber through `j`-bend extensions.
pub fn enumerate_colored(
    mu: &Multipartition,
    lc: &crate::combin::ColoredComposition,
) -> Vec<ColoredTableau> {
    if mu.size() != lc.d() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let start = Multipartition::empty(mu.components.len());
    extend_colored(mu, lc, 0, &start, &mut Vec::new(), &mut out);
    out
}

fn extend_colored(
    mu: &Multipartition,
    lc: &crate::combin::ColoredComposition,
    r: usize,
    current: &Multipartition,
    fibers: &mut Vec<Vec<Node>>,
    out: &mut Vec<ColoredTableau>,
) {
    if r == lc.n() {
        if current == mu {
            let mut labels = BTreeMap::new();
            for (idx, fiber) in fibers.iter().enumerate() {
                for &u in fiber {
                    labels.insert(u, idx + 1);
                }
            }
            out.push(ColoredTableau {
                shape: mu.clone(),
                labels,
            });
        }
        return;
    }
    let c = lc.colors[r];
    let lam = lc.lambda.parts()[r];
    // Split the bend size between a horizontal strip on component c-1 and a
    // vertical strip on component c.
    for h in 0..=lam {
        let v = lam - h;
        let lows = horizontal_strip_extensions(
            &current.components[c - 1],
            &mu.components[c - 1],
            h,
        );
        for low in lows {
            let highs =
                vertical_strip_extensions(&current.components[c], &mu.components[c], v);
            for high in highs {
                let mut next = current.clone();
                let mut fiber = Vec::new();
                for (rr, ss) in diff_cells(&low, &next.components[c - 1]) {
                    fiber.push(Node::with_component(rr, ss, c - 1));
                }
                for (rr, ss) in diff_cells(&high, &next.components[c]) {
                    fiber.push(Node::with_component(rr, ss, c));
                }
                next.components[c - 1] = low.clone();
                next.components[c] = high;
                fibers.push(fiber);
                extend_colored(mu, lc, r + 1, &next, fibers, out);
                fibers.pop();
            }
        }
    }
}

fn diff_cells(big: &Partition, small: &Partition) -> Vec<(usize, usize)> {
    big.cells().filter(|&(r, s)| !small.has_cell(r, s)).collect()
}

/// `Inc(j) = {j, j-1} ⊆ I`.
pub fn inc(j: usize) -> [usize; 2] {
    debug_assert!(j >= 1);
    [j, j - 1]
}

/// `|_{(λ,c)} M(n,d)_{(ω,b)}|`: tuples `(T^0..T^{e-1})` of n×d matrices with
/// total row sums `λ`, total column sums all 1, and `t^i_{r,s} = 0` unless
/// `i ∈ Inc(c_r) ∩ Inc(b_s)`. Counted through the equivalent maps
/// `φ: [1,d] -> [1,n] × I`.
pub fn matrix_count(lc: &crate::combin::ColoredComposition, b: &[usize]) -> u64 {
    let d = lc.d();
    assert_eq!(b.len(), d);
    let mut quota: Vec<usize> = lc.lambda.parts().to_vec();
    count_maps(lc, b, 0, &mut quota)
}

fn count_maps(
    lc: &crate::combin::ColoredComposition,
    b: &[usize],
    s: usize,
    quota: &mut Vec<usize>,
) -> u64 {
    if s == b.len() {
        return quota.iter().all(|&q| q == 0) as u64;
    }
    let mut total = 0;
    for r in 0..lc.n() {
        if quota[r] == 0 {
            continue;
        }
        let cr = lc.colors[r];
        let common = inc(cr)
            .iter()
            .filter(|i| inc(b[s]).contains(i))
            .count() as u64;
        if common == 0 {
            continue;
        }
        quota[r] -= 1;
        total += common * count_maps(lc, b, s + 1, quota);
        quota[r] += 1;
    }
    total
}

/// The index-sum side: `Σ_{(A,B)} Π_i |S_{β_i(A)} : S_{A,i}|` over compatible
/// pairs of row/column-constrained matrices.
pub fn index_sum(lc: &crate::combin::ColoredComposition, b: &[usize], e: usize) -> u64 {
    let n = lc.n();
    let d = lc.d();
    assert_eq!(b.len(), d);
    // A: row r splits λ_r between columns c_r and c_r - 1.
    let mut total = 0u64;
    let splits: Vec<Vec<usize>> = lc
        .lambda
        .parts()
        .iter()
        .map(|&lam| (0..=lam).collect())
        .collect();
    for choice in cartesian(&splits) {
        let mut a = vec![vec![0usize; e]; n];
        for r in 0..n {
            let cr = lc.colors[r];
            a[r][cr] = choice[r];
            a[r][cr - 1] = lc.lambda.parts()[r] - choice[r];
        }
        let beta_a: Vec<usize> = (0..e).map(|i| (0..n).map(|r| a[r][i]).sum()).collect();
        // B: each column s puts its single 1 in a row from Inc(b_s).
        let col_choices: Vec<Vec<usize>> = (0..d).map(|s| inc(b[s]).to_vec()).collect();
        for cols in cartesian(&col_choices) {
            let mut alpha_b = vec![0usize; e];
            for &i in &cols {
                alpha_b[i] += 1;
            }
            if alpha_b != beta_a {
                continue;
            }
            let mut prod = 1u64;
            for i in 0..e {
                prod *= multinomial(beta_a[i], (0..n).map(|r| a[r][i]));
            }
            total += prod;
        }
    }
    total
}

fn cartesian(choices: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for c in choices {
        out = out
            .into_iter()
            .flat_map(|v| {
                c.iter().map(move |&x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn multinomial(total: usize, parts: impl Iterator<Item = usize>) -> u64 {
    let mut result = 1u64;
    let mut used = 0usize;
    for p in parts {
        for k in 1..=p {
            used += 1;
            result = result * used as u64 / k as u64;
        }
    }
    debug_assert_eq!(used, total);
    result
}

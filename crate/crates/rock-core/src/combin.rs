//! Partitions, compositions, multipartitions, nodes and symmetric-group
//! coset machinery.
//!
//! Everything downstream indexes off these types: partitions and their Young
//! diagrams, compositions `λ ∈ Λ(n,d)`, colored compositions `(λ,c)`,
//! multipartitions, nodes with residues, horizontal/vertical strips and
//! `j`-bends, and minimal-length coset representatives in `S_d`.

use crate::{Error, Result};
use itertools::Itertools;
use std::fmt;

/// A partition: weakly decreasing positive parts, trailing zeros normalized
/// away. Equality of `Partition`s therefore ignores trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BadPartition);
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of positive parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The `r`-th part (1-indexed), zero past the end.
    pub fn part(&self, r: usize) -> usize {
        if r >= 1 && r <= self.parts.len() {
            self.parts[r - 1]
        } else {
            0
        }
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|s| self.parts.iter().take_while(|&&p| p >= s).count())
            .collect();
        Partition { parts }
    }

    pub fn contains(&self, inner: &Partition) -> bool {
        (1..=inner.len()).all(|r| inner.part(r) <= self.part(r))
    }

    /// Nodes of the Young diagram, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (1..=p).map(move |s| (r + 1, s)))
    }

    pub fn has_cell(&self, r: usize, s: usize) -> bool {
        r >= 1 && s >= 1 && s <= self.part(r)
    }

    /// Addable nodes: those `u ∉ Y(λ)` with `Y(λ) ∪ {u}` a partition diagram.
    pub fn addable_nodes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 1..=self.len() + 1 {
            let here = self.part(r);
            let above = if r == 1 { usize::MAX } else { self.part(r - 1) };
            if here < above {
                out.push((r, here + 1));
            }
        }
        out
    }

    /// Removable nodes: those `u ∈ Y(λ)` with `Y(λ) \ {u}` a partition diagram.
    pub fn removable_nodes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 1..=self.len() {
            let here = self.part(r);
            let below = self.part(r + 1);
            if here > below {
                out.push((r, here));
            }
        }
        out
    }

    pub fn with_cell_added(&self, r: usize, s: usize) -> Partition {
        let mut parts = self.parts.clone();
        if r == parts.len() + 1 {
            parts.push(0);
        }
        debug_assert_eq!(parts[r - 1] + 1, s);
        parts[r - 1] += 1;
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "()")
        } else {
            write!(f, "({})", self.parts.iter().join(","))
        }
    }
}

/// A composition: a fixed-length list of non-negative parts. Positions
/// matter, so trailing zeros are kept.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Start offsets of the blocks `B_r = {offset+1, ..., offset+λ_r}` in
    /// `{1, ..., d}`.
    pub fn block_offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.parts.len());
        let mut acc = 0;
        for &p in &self.parts {
            out.push(acc);
            acc += p;
        }
        out
    }

    /// Which block (0-indexed) the position `t ∈ {0, ..., d-1}` belongs to.
    pub fn block_of(&self, t: usize) -> usize {
        let mut acc = 0;
        for (r, &p) in self.parts.iter().enumerate() {
            acc += p;
            if t < acc {
                return r;
            }
        }
        panic!("position {t} outside composition of {}", self.size());
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

/// A colored composition `(λ, c)`: a composition of length `n` together with
/// a color `c_r ∈ J = {1, ..., e-1}` for each part.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredComposition {
    pub lambda: Composition,
    pub colors: Vec<usize>,
}

impl ColoredComposition {
    pub fn new(lambda: Composition, colors: Vec<usize>, e: usize) -> Result<Self> {
        if lambda.len() != colors.len() {
            return Err(Error::Domain("composition/color length mismatch".into()));
        }
        if colors.iter().any(|&c| c == 0 || c >= e) {
            return Err(Error::Domain(format!("colors must lie in 1..={}", e - 1)));
        }
        Ok(Self { lambda, colors })
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    pub fn d(&self) -> usize {
        self.lambda.size()
    }

    /// `d_j = Σ_{c_r = j} λ_r` for `j ∈ J`, indexed `1..e-1` (entry 0 unused).
    pub fn color_weights(&self, e: usize) -> Vec<usize> {
        let mut d = vec![0; e];
        for (r, &c) in self.colors.iter().enumerate() {
            d[c] += self.lambda.parts()[r];
        }
        d
    }
}

/// A multipartition: one partition per component of an ordered index set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition {
    pub components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        Self { components }
    }

    pub fn empty(num_components: usize) -> Self {
        Self {
            components: vec![Partition::empty(); num_components],
        }
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(|p| p.size()).sum()
    }

    pub fn nodes(&self) -> Vec<Node> {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(i, p)| p.cells().map(move |(r, s)| Node::with_component(r, s, i)))
            .collect()
    }

    pub fn contains(&self, other: &Multipartition) -> bool {
        self.components.len() == other.components.len()
            && self
                .components
                .iter()
                .zip(&other.components)
                .all(|(a, b)| a.contains(b))
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.components.iter().join(", "))
    }
}

/// A node `(r, s)` or `(r, s, i)` with 1-based row `r` and column `s`; `i`
/// indexes the component for multipartition nodes (0 for plain ones).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub row: usize,
    pub col: usize,
    pub component: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Self {
        Self {
            row,
            col,
            component: 0,
        }
    }

    pub fn with_component(row: usize, col: usize, component: usize) -> Self {
        Self {
            row,
            col,
            component,
        }
    }

    /// The partial order on nodes: same component, both coordinates `<=`.
    pub fn leq(&self, other: &Node) -> bool {
        self.component == other.component && self.row <= other.row && self.col <= other.col
    }

    pub fn independent(&self, other: &Node) -> bool {
        !self.leq(other) && !other.leq(self)
    }
}

/// Residue of a node: `(s - r) mod e`.
pub fn residue(row: usize, col: usize, e: usize) -> usize {
    debug_assert!(e >= 2);
    (col as i64 - row as i64).rem_euclid(e as i64) as usize
}

/// A skew shape `λ \ μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::BadSkew);
        }
        Ok(Self { outer, inner })
    }

    pub fn from_partition(outer: Partition) -> Self {
        Self {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.outer
            .cells()
            .filter(|&(r, s)| !self.inner.has_cell(r, s))
            .collect()
    }

    /// Residue content as an `I`-indexed count vector.
    pub fn content(&self, e: usize) -> Vec<usize> {
        let mut counts = vec![0; e];
        for (r, s) in self.cells() {
            counts[residue(r, s, e)] += 1;
        }
        counts
    }
}

/// Residue content of a straight shape.
pub fn content(lambda: &Partition, e: usize) -> Vec<usize> {
    SkewShape::from_partition(lambda.clone()).content(e)
}

/// Is `U ⊆ N` a horizontal strip: convex, no two nodes in the same column.
pub fn is_horizontal_strip(nodes: &[(usize, usize)]) -> bool {
    no_repeat(nodes, |&(_, s)| s) && is_convex(nodes)
}

/// Is `U ⊆ N` a vertical strip: convex, no two nodes in the same row.
pub fn is_vertical_strip(nodes: &[(usize, usize)]) -> bool {
    no_repeat(nodes, |&(r, _)| r) && is_convex(nodes)
}

fn no_repeat<K: Eq + std::hash::Hash>(
    nodes: &[(usize, usize)],
    key: impl Fn(&(usize, usize)) -> K,
) -> bool {
    let mut seen = std::collections::HashSet::new();
    nodes.iter().all(|u| seen.insert(key(u)))
}

fn is_convex(nodes: &[(usize, usize)]) -> bool {
    let set: std::collections::HashSet<_> = nodes.iter().copied().collect();
    for &(r1, s1) in nodes {
        for &(r2, s2) in nodes {
            if r1 <= r2 && s1 <= s2 {
                for r in r1..=r2 {
                    for s in s1..=s2 {
                        if !set.contains(&(r, s)) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Is the node set `U ⊂ N^I` a `j`-bend: contained in components `j-1` and
/// `j`, a horizontal strip on component `j-1` and a vertical strip on
/// component `j`.
pub fn is_j_bend(nodes: &[Node], j: usize) -> bool {
    debug_assert!(j >= 1);
    let lower: Vec<_> = nodes
        .iter()
        .filter(|u| u.component == j - 1)
        .map(|u| (u.row, u.col))
        .collect();
    let upper: Vec<_> = nodes
        .iter()
        .filter(|u| u.component == j)
        .map(|u| (u.row, u.col))
        .collect();
    if lower.len() + upper.len() != nodes.len() {
        return false;
    }
    is_horizontal_strip(&lower) && is_vertical_strip(&upper)
}

/// A permutation of `{1, ..., d}`, stored 0-indexed as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(d: usize) -> Self {
        Self {
            images: (0..d).collect(),
        }
    }

    /// From the 0-indexed image list; must be a bijection.
    pub fn from_images(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut seen = vec![false; images.len()];
            images.iter().all(|&i| {
                let fresh = i < seen.len() && !seen[i];
                if fresh {
                    seen[i] = true;
                }
                fresh
            })
        });
        Self { images }
    }

    pub fn transposition(d: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..d).collect();
        images.swap(a, b);
        Self { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, t: usize) -> usize {
        self.images[t]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: (0..self.degree())
                .map(|t| self.apply(other.apply(t)))
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (t, &i) in self.images.iter().enumerate() {
            images[i] = t;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(t, &i)| t == i)
    }

    /// Coxeter length: the inversion count.
    pub fn length(&self) -> usize {
        let mut l = 0;
        for a in 0..self.degree() {
            for b in a + 1..self.degree() {
                if self.images[a] > self.images[b] {
                    l += 1;
                }
            }
        }
        l
    }

    /// Does the permutation preserve every block of `lambda`?
    pub fn in_parabolic(&self, lambda: &Composition) -> bool {
        debug_assert_eq!(self.degree(), lambda.size());
        (0..self.degree()).all(|t| lambda.block_of(self.apply(t)) == lambda.block_of(t))
    }
}

/// Minimal-length representatives of the right cosets `S_λ \ S_d`, i.e. the
/// set `^λD`. A permutation `g` lies in `^λD` iff for each block the values
/// of that block appear in `g` in increasing position order.
pub fn min_coset_reps(lambda: &Composition) -> Vec<Permutation> {
    let d = lambda.size();
    let offsets = lambda.block_offsets();
    // Distribute the positions 0..d among the blocks; within a block, values
    // are assigned in position order.
    let mut out = Vec::new();
    let mut assignment = vec![usize::MAX; d];
    distribute(lambda, &offsets, 0, &mut assignment, &mut out, d);
    out
}

fn distribute(
    lambda: &Composition,
    offsets: &[usize],
    block: usize,
    assignment: &mut Vec<usize>,
    out: &mut Vec<Permutation>,
    d: usize,
) {
    if block == lambda.len() {
        out.push(Permutation::from_images(assignment.clone()));
        return;
    }
    let free: Vec<usize> = (0..d).filter(|&t| assignment[t] == usize::MAX).collect();
    let k = lambda.parts()[block];
    for positions in free.iter().copied().combinations(k) {
        for (idx, &t) in positions.iter().enumerate() {
            assignment[t] = offsets[block] + idx;
        }
        distribute(lambda, offsets, block + 1, assignment, out, d);
        for &t in &positions {
            assignment[t] = usize::MAX;
        }
    }
}

/// Minimal-length representatives of the left cosets `S_d / S_λ` (the set
/// `D^λ`), mirrored from `^λD`.
pub fn min_coset_reps_left(lambda: &Composition) -> Vec<Permutation> {
    min_coset_reps(lambda)
        .into_iter()
        .map(|g| g.inverse())
        .collect()
}

/// Factor `w = h g` with `h ∈ S_λ` and `g ∈ ^λD`; returns `(h, g)`.
pub fn parabolic_factorize(w: &Permutation, lambda: &Composition) -> (Permutation, Permutation) {
    let d = w.degree();
    let offsets = lambda.block_offsets();
    // g renumbers, within each block, the values of w in position order.
    let mut g_images = vec![0; d];
    for (block, &len) in lambda.parts().iter().enumerate() {
        let lo = offsets[block];
        let hi = lo + len;
        let mut positions: Vec<usize> = (0..d).filter(|&t| (lo..hi).contains(&w.apply(t))).collect();
        positions.sort_unstable();
        for (idx, &t) in positions.iter().enumerate() {
            g_images[t] = lo + idx;
        }
    }
    let g = Permutation::from_images(g_images);
    let h = w.compose(&g.inverse());
    debug_assert!(h.in_parabolic(lambda));
    debug_assert_eq!(h.compose(&g), *w);
    (h, g)
}

/// Lengths `ℓ(h_r)` of the block components of `h ∈ S_λ`.
pub fn block_lengths(h: &Permutation, lambda: &Composition) -> Result<Vec<usize>> {
    if !h.in_parabolic(lambda) {
        return Err(Error::NotInParabolic);
    }
    let offsets = lambda.block_offsets();
    Ok(lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(block, &len)| {
            let lo = offsets[block];
            let mut inv = 0;
            for a in lo..lo + len {
                for b in a + 1..lo + len {
                    if h.apply(a) > h.apply(b) {
                        inv += 1;
                    }
                }
            }
            inv
        })
        .collect())
}

/// All partitions of `d`, in decreasing lexicographic order.
pub fn partitions_of(d: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    gen_partitions(d, d, &mut stack, &mut out);
    out
}

fn gen_partitions(left: usize, max: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if left == 0 {
        out.push(Partition {
            parts: stack.clone(),
        });
        return;
    }
    for p in (1..=max.min(left)).rev() {
        stack.push(p);
        gen_partitions(left - p, p, stack, out);
        stack.pop();
    }
}

/// All compositions of `d` into `n` parts, in decreasing lexicographic order.
pub fn compositions(n: usize, d: usize) -> Vec<Composition> {
    if n == 0 {
        return if d == 0 {
            vec![Composition::new(vec![])]
        } else {
            vec![]
        };
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    gen_compositions(n, d, &mut stack, &mut out);
    out
}

fn gen_compositions(n: usize, left: usize, stack: &mut Vec<usize>, out: &mut Vec<Composition>) {
    if n == 1 {
        stack.push(left);
        out.push(Composition::new(stack.clone()));
        stack.pop();
        return;
    }
    for p in (0..=left).rev() {
        stack.push(p);
        gen_compositions(n - 1, left - p, stack, out);
        stack.pop();
    }
}

/// All multipartitions with `num_components` components and total size `d`.
pub fn multipartitions(num_components: usize, d: usize) -> Vec<Multipartition> {
    compositions(num_components, d)
        .into_iter()
        .flat_map(|sizes| {
            sizes
                .parts()
                .iter()
                .map(|&k| partitions_of(k))
                .multi_cartesian_product_or_single()
                .map(Multipartition::new)
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Like `multi_cartesian_product` but yielding one empty tuple for an empty
/// list of factors.
trait ProductExt: Iterator + Sized {
    fn multi_cartesian_product_or_single(self) -> std::vec::IntoIter<Vec<Partition>>;
}

impl<I> ProductExt for I
where
    I: Iterator<Item = Vec<Partition>>,
{
    fn multi_cartesian_product_or_single(self) -> std::vec::IntoIter<Vec<Partition>> {
        let factors: Vec<Vec<Partition>> = self.collect();
        if factors.is_empty() {
            return vec![vec![]].into_iter();
        }
        factors
            .into_iter()
            .multi_cartesian_product()
            .collect::<Vec<_>>()
            .into_iter()
    }
}

/// All colored compositions `(λ, c) ∈ Λ(n,d) × J^n`.
pub fn colored_compositions(n: usize, d: usize, e: usize) -> Vec<ColoredComposition> {
    let colors: Vec<Vec<usize>> = if n == 0 {
        vec![vec![]]
    } else {
        (0..n).map(|_| (1..e).collect::<Vec<_>>()).multi_cartesian_product().collect()
    };
    compositions(n, d)
        .into_iter()
        .cartesian_product(colors)
        .map(|(lambda, c)| ColoredComposition::new(lambda, c, e).unwrap())
        .collect()
}

//! Abacus displays, e-cores, e-quotients, Rouquier cores and hook
//! decompositions of RoCK-block partitions.
//!
//! An abacus display with `N` beads puts a bead at the integer `λ_k + N - k`
//! for each `k = 1..N`; the integer `e·t + i` is drawn as position `t` on
//! runner `i`. Cores, quotients and weights are read off bead counts per
//! runner, and for a `d`-Rouquier core the hooks `H(r,s,i)` tile every
//! partition of its block.

use crate::combin::{Multipartition, Node, Partition};
use crate::{Error, Result};
use std::collections::BTreeSet;

/// An abacus display: `N` beads on `e` runners.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbacusDisplay {
    e: usize,
    n_beads: usize,
    /// Bead positions as integers `e·t + i`.
    beads: BTreeSet<usize>,
}

impl AbacusDisplay {
    /// The abacus display of `lambda` with `n_beads` beads.
    pub fn of_partition(lambda: &Partition, n_beads: usize, e: usize) -> Result<Self> {
        if n_beads < lambda.len() {
            return Err(Error::TooFewBeads {
                needed: lambda.len(),
                got: n_beads,
            });
        }
        let beads = (1..=n_beads)
            .map(|k| lambda.part(k) + n_beads - k)
            .collect();
        Ok(Self { e, n_beads, beads })
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn n_beads(&self) -> usize {
        self.n_beads
    }

    pub fn bead_integers(&self) -> &BTreeSet<usize> {
        &self.beads
    }

    /// Bead positions `(t, i)` meaning integer `e·t + i`.
    pub fn bead_positions(&self) -> Vec<(usize, usize)> {
        self.beads.iter().map(|&x| (x / self.e, x % self.e)).collect()
    }

    pub fn has_bead(&self, x: usize) -> bool {
        self.beads.contains(&x)
    }

    /// The partition this display encodes; inverse of `of_partition`.
    pub fn partition(&self) -> Partition {
        let mut xs: Vec<usize> = self.beads.iter().copied().collect();
        xs.sort_unstable_by(|a, b| b.cmp(a));
        let parts = xs
            .iter()
            .enumerate()
            .map(|(idx, &x)| x + idx + 1 - self.n_beads)
            .collect();
        Partition::new(parts).expect("bead set always decodes to a partition")
    }

    /// Bead count `b_i` on each runner.
    pub fn runner_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.e];
        for &x in &self.beads {
            counts[x % self.e] += 1;
        }
        counts
    }

    /// Integer position of the bead with number `r` (exactly `r-1` beads
    /// succeed it).
    pub fn bead_number(&self, r: usize) -> usize {
        debug_assert!(r >= 1 && r <= self.n_beads);
        *self.beads.iter().rev().nth(r - 1).unwrap()
    }

    /// Integer position of the non-bead with number `s` (exactly `s-1`
    /// non-beads precede it).
    pub fn nonbead_number(&self, s: usize) -> usize {
        debug_assert!(s >= 1);
        let mut seen = 0;
        for x in 0.. {
            if !self.beads.contains(&x) {
                seen += 1;
                if seen == s {
                    return x;
                }
            }
        }
        unreachable!()
    }

    /// Bead/non-bead duality: `(r,s) ∈ Y(λ)` iff bead `r` succeeds non-bead `s`.
    pub fn node_test(&self, r: usize, s: usize) -> bool {
        if r > self.n_beads {
            return false;
        }
        self.bead_number(r) > self.nonbead_number(s)
    }

    /// The e-core, e-quotient and e-weight of the displayed partition.
    ///
    /// The quotient component `λ^(i)` is read from runner `i` with `b_i`
    /// beads, so its labeling depends on `N mod e`; the core and the weight
    /// do not.
    pub fn core_quotient_weight(&self) -> (Partition, Multipartition, usize) {
        let counts = self.runner_counts();
        // Core: push all beads down.
        let core_beads: BTreeSet<usize> = (0..self.e)
            .flat_map(|i| (0..counts[i]).map(move |t| t * self.e + i))
            .collect();
        let core = AbacusDisplay {
            e: self.e,
            n_beads: self.n_beads,
            beads: core_beads,
        }
        .partition();
        // Quotient: runner i, read as a 1-runner abacus with b_i beads.
        let components: Vec<Partition> = (0..self.e)
            .map(|i| {
                let mut ts: Vec<usize> = self
                    .beads
                    .iter()
                    .filter(|&&x| x % self.e == i)
                    .map(|&x| x / self.e)
                    .collect();
                ts.sort_unstable_by(|a, b| b.cmp(a));
                let parts = ts
                    .iter()
                    .enumerate()
                    .map(|(idx, &t)| t + idx + 1 - counts[i])
                    .collect();
                Partition::new(parts).unwrap()
            })
            .collect();
        let quotient = Multipartition::new(components);
        let weight = quotient.size();
        (core, quotient, weight)
    }
}

/// Convenience wrapper: core, quotient and weight of `lambda` with `n_beads`
/// beads.
pub fn core_quotient_weight(
    lambda: &Partition,
    n_beads: usize,
    e: usize,
) -> Result<(Partition, Multipartition, usize)> {
    Ok(AbacusDisplay::of_partition(lambda, n_beads, e)?.core_quotient_weight())
}

/// An e-core fixed together with a bead count, ready to index a block
/// `P_{ρ,d}`. When `rouquier` is set, the stored abacus witnesses the
/// `d`-Rouquier condition: runner `i+1` carries at least `d-1` more beads
/// than runner `i`, and the hook machinery applies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCore {
    pub rho: Partition,
    pub e: usize,
    pub d: usize,
    /// Residue `κ = -N mod e`.
    pub kappa: usize,
    /// The bead count actually used for all block computations; satisfies
    /// `N ≥ |ρ| + d·e` and `min_i b_i ≥ d`.
    pub n_used: usize,
    /// Bead counts per runner at `n_used`.
    pub runner_counts: Vec<usize>,
    /// Whether the stored abacus witnesses the d-Rouquier condition.
    pub rouquier: bool,
}

impl BlockCore {
    /// Fixes a bead count for an arbitrary e-core, without any Rouquier
    /// requirement. Fails if `rho` is not an e-core.
    pub fn plain(rho: &Partition, d: usize, e: usize) -> Result<Self> {
        let n0 = rho.len().max(1);
        let ab = AbacusDisplay::of_partition(rho, n0, e)?;
        let (c, _, w) = ab.core_quotient_weight();
        if c != *rho || w != 0 {
            return Err(Error::Domain("not an e-core".into()));
        }
        let mut n = n0;
        let mut counts = ab.runner_counts();
        while n < rho.size() + d * e || counts.iter().min().copied().unwrap_or(0) < d {
            n += e;
            counts = AbacusDisplay::of_partition(rho, n, e)?.runner_counts();
        }
        Ok(Self {
            rho: rho.clone(),
            e,
            d,
            kappa: (e - n % e) % e,
            n_used: n,
            runner_counts: counts,
            rouquier: rouquier_condition(&AbacusDisplay::of_partition(rho, n, e)?.runner_counts(), d),
        })
    }
    pub fn b(&self, i: usize) -> usize {
        self.runner_counts[i]
    }

    pub fn b_gt(&self, i: usize) -> usize {
        self.runner_counts[i + 1..].iter().sum()
    }

    pub fn b_lt(&self, i: usize) -> usize {
        self.runner_counts[..i].iter().sum()
    }
}

fn rouquier_condition(counts: &[usize], d: usize) -> bool {
    counts.windows(2).all(|w| w[1] >= w[0] + d - 1)
}

/// All Rouquier witnesses for `rho` among `e` consecutive bead counts.
///
/// The bead-difference condition is invariant under `N -> N + e`, so
/// scanning `e` consecutive values decides the property; the scan starts
/// high enough that every reported witness already satisfies the `N ≥ |ρ| +
/// d·e` convention.
pub fn rouquier_witnesses(rho: &Partition, d: usize, e: usize) -> Vec<BlockCore> {
    assert!(d >= 1 && e >= 2);
    let n0 = rho.len().max(rho.size()) + d * e * e;
    let mut out = Vec::new();
    for n in n0..n0 + e {
        let ab = AbacusDisplay::of_partition(rho, n, e).unwrap();
        let counts = ab.runner_counts();
        if rouquier_condition(&counts, d) {
            let kappa = (e - n % e) % e;
            // Raise N until every runner can hold any quotient component of
            // size <= d, keeping N mod e fixed.
            let min_b = *counts.iter().min().unwrap();
            let lift = d.saturating_sub(min_b);
            let n_used = n + lift * e;
            let counts = counts.iter().map(|&b| b + lift).collect();
            out.push(BlockCore {
                rho: rho.clone(),
                e,
                d,
                kappa,
                n_used,
                runner_counts: counts,
                rouquier: true,
            });
        }
    }
    out
}

/// Is `rho` a `d`-Rouquier core? Returns the smallest-`N` witness if so.
pub fn is_rouquier_core(rho: &Partition, d: usize, e: usize) -> Option<BlockCore> {
    rouquier_witnesses(rho, d, e).into_iter().next()
}

/// Builds the minimal staircase `d`-Rouquier core: `b_i = (d-1)·i + 1` beads
/// on runner `i`.
pub fn make_rouquier_core(e: usize, d: usize) -> BlockCore {
    assert!(d >= 1 && e >= 2);
    let beads: BTreeSet<usize> = (0..e)
        .flat_map(|i| (0..(d - 1) * i + 1).map(move |t| t * e + i))
        .collect();
    let n_beads = beads.len();
    let rho = AbacusDisplay {
        e,
        n_beads,
        beads,
    }
    .partition();
    is_rouquier_core(&rho, d, e).expect("staircase bead profile is d-Rouquier")
}

/// An e-hook: the translate of `Y((i+1, 1^{e-i-1}))` with vertex `(x, y)` in
/// `Z × Z` and arm length `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hook {
    pub vertex: (i64, i64),
    pub arm: usize,
    pub e: usize,
}

impl Hook {
    pub fn nodes(&self) -> Vec<(i64, i64)> {
        let (x, y) = self.vertex;
        let mut out: Vec<(i64, i64)> = (0..=self.arm as i64).map(|k| (x, y + k)).collect();
        out.extend((1..(self.e - self.arm) as i64).map(|k| (x + k, y)));
        out
    }

    /// The node `(x, y+i)` at the end of the arm.
    pub fn hand(&self) -> (i64, i64) {
        (self.vertex.0, self.vertex.1 + self.arm as i64)
    }

    /// The node `(x+e-i-1, y)` at the end of the leg.
    pub fn foot(&self) -> (i64, i64) {
        (
            self.vertex.0 + (self.e - self.arm - 1) as i64,
            self.vertex.1,
        )
    }

    /// Is `self` a right extension of `other`: the foot of `self` is the
    /// right neighbor of the hand of `other`.
    pub fn is_right_extension_of(&self, other: &Hook) -> bool {
        let hand = other.hand();
        self.foot() == (hand.0, hand.1 + 1)
    }

    /// Is `self` a bottom extension of `other`: the hand of `self` is the
    /// bottom neighbor of the foot of `other`.
    pub fn is_bottom_extension_of(&self, other: &Hook) -> bool {
        let foot = other.foot();
        self.hand() == (foot.0 + 1, foot.1)
    }

    pub fn independent(&self, other: &Hook) -> bool {
        self.nodes().iter().all(|&(r, s)| {
            other
                .nodes()
                .iter()
                .all(|&(k, l)| !((r <= k && s <= l) || (k <= r && l <= s)))
        })
    }
}

/// The hook `H(r,s,i)` attached to the quotient node `(r,s,i)` of a
/// `d`-Rouquier core.
pub fn hook(core: &BlockCore, r: usize, s: usize, i: usize) -> Hook {
    let e = core.e as i64;
    let (r, s, bi) = (r as i64, s as i64, core.b(i) as i64);
    let x = r - (e - i as i64 - 1) * (bi - r + s) + core.b_gt(i) as i64;
    let y = s + i as i64 * (bi - r + s) - core.b_lt(i) as i64;
    Hook {
        vertex: (x, y),
        arm: i,
        e: core.e,
    }
}

/// All partitions with core `rho` and weight `d`, via the inverse of the
/// quotient bijection, in the enumeration order of the multipartitions.
pub fn partitions_in_block(core: &BlockCore, d: usize) -> Vec<Partition> {
    multipartitions_to_block(core, &crate::combin::multipartitions(core.e, d))
}

/// Inverse quotient map: place the component `μ^(i)` on runner `i`.
pub fn from_quotient(core: &BlockCore, quotient: &Multipartition) -> Partition {
    assert_eq!(quotient.components.len(), core.e);
    let e = core.e;
    let beads: BTreeSet<usize> = (0..e)
        .flat_map(|i| {
            let bi = core.b(i);
            let comp = &quotient.components[i];
            assert!(comp.len() <= bi, "runner {i} cannot hold the component");
            (1..=bi).map(move |k| (comp.part(k) + bi - k) * e + i)
        })
        .collect();
    AbacusDisplay {
        e,
        n_beads: core.n_used,
        beads,
    }
    .partition()
}

fn multipartitions_to_block(core: &BlockCore, quots: &[Multipartition]) -> Vec<Partition> {
    quots.iter().map(|q| from_quotient(core, q)).collect()
}

/// The quotient of `mu` computed with the core's fixed bead count, checked
/// to lie in the block `P_{ρ,d}`.
pub fn quotient_in_block(core: &BlockCore, mu: &Partition) -> Result<Multipartition> {
    let (c, q, w) = core_quotient_weight(mu, core.n_used, core.e)?;
    if c != core.rho || w != core.d {
        return Err(Error::NotInBlock);
    }
    Ok(q)
}

/// Hook decomposition of `Y(μ) \ Y(ρ)`: one hook per quotient node, pairwise
/// disjoint and covering the skew diagram exactly.
pub fn hook_decomposition(core: &BlockCore, mu: &Partition) -> Result<Vec<(Node, Hook)>> {
    if !core.rouquier {
        return Err(Error::NotRouquier { d: core.d });
    }
    let quot = quotient_in_block(core, mu)?;
    let out: Vec<(Node, Hook)> = quot
        .nodes()
        .into_iter()
        .map(|u| (u, hook(core, u.row, u.col, u.component)))
        .collect();
    Ok(out)
}

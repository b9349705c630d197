//! Graded dimension engines: quantum integers, the cyclotomic two-sided
//! idempotent truncation formula, the RoCK-block truncation formula, and the
//! closed-form dimension counts they specialize to.

use crate::abacus::{partitions_in_block, BlockCore};
use crate::combin::{partitions_of, ColoredComposition, Partition, SkewShape};
use crate::laurent::LaurentPoly;
use crate::tableaux::enumerate_std;
use crate::words::{a_lambda, gg_word, DividedPowerWord};
use crate::{Error, Result};
use rayon::prelude::*;

/// Quantum integer `[m] = (q^m - q^-m) / (q - q^-1)`.
pub fn q_int(m: usize) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for k in 0..m {
        p.add_term(m as i64 - 1 - 2 * k as i64, 1);
    }
    p
}

/// Quantum factorial `[m]! = [1][2]...[m]`.
pub fn q_factorial(m: usize) -> LaurentPoly {
    (1..=m).fold(LaurentPoly::one(), |acc, k| acc * q_int(k))
}

/// `i! = [m_1]! ... [m_r]!` for a divided-power word.
pub fn dpw_factorial(word: &DividedPowerWord) -> LaurentPoly {
    word.entries
        .iter()
        .fold(LaurentPoly::one(), |acc, &(_, m)| acc * q_factorial(m))
}

/// Graded rank of the cyclotomic truncation `1_i R^{Λ0}_θ 1_j`:
/// `q^{<j>-<i>} Σ_μ Σ_{s,t} q^{deg s + deg t}` over partitions `μ` with the
/// right content. Returns the zero polynomial when the weights differ.
pub fn cyclotomic_graded_dim(
    i: &DividedPowerWord,
    j: &DividedPowerWord,
    e: usize,
) -> LaurentPoly {
    let wi = i.weight(e);
    let wj = j.weight(e);
    if wi != wj {
        return LaurentPoly::zero();
    }
    let prefix = j.angle() - i.angle();
    let mut total = LaurentPoly::zero();
    for mu in partitions_of(wi.height()) {
        if crate::combin::content(&mu, e) != wi.counts {
            continue;
        }
        let shape = SkewShape::from_partition(mu);
        let s_degrees: Vec<i64> = enumerate_std(&shape, i, e).iter().map(|t| t.degree).collect();
        if s_degrees.is_empty() {
            continue;
        }
        let t_degrees: Vec<i64> = enumerate_std(&shape, j, e).iter().map(|t| t.degree).collect();
        for &a in &s_degrees {
            for &b in &t_degrees {
                total.add_term(prefix + a + b, 1);
            }
        }
    }
    total
}

/// Graded rank of the RoCK truncation `γ^{λ,c} C_{ρ,d} γ^{λ',c'}`:
/// `q^{a_λ - a_λ'} Σ_{μ ∈ P_{ρ,d}} Σ_{t,t'} q^{deg t + deg t'}` over pairs of
/// standard tableaux of shape `μ\ρ` with the shifted Gelfand-Graev words.
pub fn rock_truncation_dim(
    core: &BlockCore,
    lc: &ColoredComposition,
    lc2: &ColoredComposition,
    e: usize,
    d: usize,
) -> Result<LaurentPoly> {
    if core.e != e || core.d != d {
        return Err(Error::Domain(
            "core parameters disagree with the requested (e, d)".into(),
        ));
    }
    if !core.rouquier {
        return Err(Error::NotRouquier { d });
    }
    if lc.d() != d || lc2.d() != d {
        return Err(Error::Domain("colored compositions must have size d".into()));
    }
    let w1 = gg_word(lc, e).shift(core.kappa, e);
    let w2 = gg_word(lc2, e).shift(core.kappa, e);
    let prefix = a_lambda(lc, e) - a_lambda(lc2, e);
    let block = partitions_in_block(core, d);
    let total = block
        .par_iter()
        .map(|mu| {
            let shape = SkewShape::new(mu.clone(), core.rho.clone())
                .expect("the core is contained in every member of its block");
            let t1: Vec<i64> = enumerate_std(&shape, &w1, e).iter().map(|t| t.degree).collect();
            if t1.is_empty() {
                return LaurentPoly::zero();
            }
            let t2: Vec<i64> = enumerate_std(&shape, &w2, e).iter().map(|t| t.degree).collect();
            let mut local = LaurentPoly::zero();
            for &a in &t1 {
                for &b in &t2 {
                    local.add_term(prefix + a + b, 1);
                }
            }
            local
        })
        .reduce(LaurentPoly::zero, |a, b| a + b);
    Ok(total)
}

/// Count of standard tableaux of shape `μ\ρ` with word `l(λ,c)^{+κ}`; the
/// left side of the colored-tableau correspondence.
pub fn std_count_in_block(
    core: &BlockCore,
    mu: &Partition,
    lc: &ColoredComposition,
    e: usize,
) -> usize {
    let w = gg_word(lc, e).shift(core.kappa, e);
    let shape = SkewShape::new(mu.clone(), core.rho.clone()).expect("block member contains core");
    enumerate_std(&shape, &w, e).len()
}

/// `dim M_{λ,c}` by the closed formula: `|S_d : S_λ| · 3^{d_1 + d_{e-1}} ·
/// 4^{Σ_{1<j<e-1} d_j}` for `e > 2` and `|S_d : S_λ| · 2^{d_1}` for `e = 2`.
pub fn module_dim_closed_form(lc: &ColoredComposition, e: usize) -> u64 {
    let d = lc.d();
    let index = multinomial_index(d, lc.lambda.parts());
    let weights = lc.color_weights(e);
    if e == 2 {
        index * 2u64.pow(weights[1] as u32)
    } else {
        let ends = (weights[1] + weights[e - 1]) as u32;
        let mids: usize = weights[2..e - 1].iter().sum();
        index * 3u64.pow(ends) * 4u64.pow(mids as u32)
    }
}

/// `dim W_d = d! (4e-6)^d`.
pub fn wreath_dim_closed_form(e: usize, d: usize) -> u64 {
    (1..=d as u64).product::<u64>() * (4 * e as u64 - 6).pow(d as u32)
}

/// `|S_d : S_λ| = d! / Π λ_r!`.
pub fn multinomial_index(d: usize, parts: &[usize]) -> u64 {
    let mut result = 1u64;
    let mut used = 0usize;
    for &p in parts {
        for k in 1..=p {
            used += 1;
            result = result * used as u64 / k as u64;
        }
    }
    debug_assert_eq!(used, d);
    result
}

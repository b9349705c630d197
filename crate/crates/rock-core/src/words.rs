//! Residue words over `I = Z/eZ`, divided-power words, the one-column word
//! sets `I^{δ,j}`, Gelfand-Graev words, and the separated / semicuspidal
//! classification of imaginary words.

use crate::combin::ColoredComposition;
use crate::{Error, Result};
use itertools::Itertools;
use std::collections::{BTreeMap, HashMap, HashSet};

/// A word over `I = Z/eZ`, entries in `0..e`.
pub type Word = Vec<usize>;

/// A divided-power word: a list of letters with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DividedPowerWord {
    pub entries: Vec<(usize, usize)>,
}

impl DividedPowerWord {
    pub fn from_word(word: &[usize]) -> Self {
        Self {
            entries: word.iter().map(|&i| (i, 1)).collect(),
        }
    }

    /// The expanded word, each letter repeated by its multiplicity.
    pub fn hat(&self) -> Word {
        self.entries
            .iter()
            .flat_map(|&(i, m)| std::iter::repeat(i).take(m))
            .collect()
    }

    /// `<i> = Σ m_k (m_k - 1) / 2`.
    pub fn angle(&self) -> i64 {
        self.entries
            .iter()
            .map(|&(_, m)| (m as i64) * (m as i64 - 1) / 2)
            .sum()
    }

    pub fn len_expanded(&self) -> usize {
        self.entries.iter().map(|&(_, m)| m).sum()
    }

    /// Entry-wise shift by `kappa` modulo `e`.
    pub fn shift(&self, kappa: usize, e: usize) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .map(|&(i, m)| ((i + kappa) % e, m))
                .collect(),
        }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().copied());
        Self { entries }
    }

    pub fn weight(&self, e: usize) -> WeightVector {
        let mut counts = vec![0; e];
        for &(i, m) in &self.entries {
            counts[i] += m;
        }
        WeightVector { counts }
    }
}

/// An element of `Q_+`: non-negative counts of each simple root `α_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector {
    pub counts: Vec<usize>,
}

impl WeightVector {
    pub fn of_word(word: &[usize], e: usize) -> Self {
        let mut counts = vec![0; e];
        for &i in word {
            counts[i] += 1;
        }
        Self { counts }
    }

    pub fn height(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Is this `d·δ` for some `d`, and which `d`?
    pub fn delta_multiple(&self) -> Option<usize> {
        let d = self.counts[0];
        self.counts.iter().all(|&c| c == d).then_some(d)
    }
}

/// The words `I^{δ,j}`: all `0 k j` where `k` is a shuffle of `(1, ...,
/// j-1)` and `(e-1, ..., j+1)`.
pub fn delta_words(e: usize, j: usize) -> Vec<Word> {
    assert!(e >= 2 && (1..e).contains(&j));
    let up: Vec<usize> = (1..j).collect();
    let down: Vec<usize> = ((j + 1)..e).rev().collect();
    shuffles(&up, &down)
        .into_iter()
        .map(|k| {
            let mut w = Vec::with_capacity(e);
            w.push(0);
            w.extend(k);
            w.push(j);
            w
        })
        .collect()
}

/// All interleavings of two words, in position-choice order, deduplicated.
pub fn shuffles(a: &[usize], b: &[usize]) -> Vec<Word> {
    let total = a.len() + b.len();
    let mut out = Vec::new();
    for positions in (0..total).combinations(a.len()) {
        let posset: HashSet<usize> = positions.iter().copied().collect();
        let mut w = Vec::with_capacity(total);
        let (mut ia, mut ib) = (0, 0);
        for t in 0..total {
            if posset.contains(&t) {
                w.push(a[ia]);
                ia += 1;
            } else {
                w.push(b[ib]);
                ib += 1;
            }
        }
        out.push(w);
    }
    out.sort();
    out.dedup();
    out
}

/// How the fixed representative of `I^{δ,j}` is assembled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum LjStyle {
    /// `(0, 1, ..., j-1, e-1, e-2, ..., j+1, j)`.
    #[default]
    UpDown,
    /// `(0, e-1, e-2, ..., j+1, 1, 2, ..., j-1, j)`.
    DownUp,
}

/// The fixed word `l^j ∈ I^{δ,j}` used for Gelfand-Graev idempotents.
pub fn canonical_lj(e: usize, j: usize) -> Word {
    lj_with_style(e, j, LjStyle::UpDown)
}

pub fn lj_with_style(e: usize, j: usize, style: LjStyle) -> Word {
    assert!(e >= 2 && (1..e).contains(&j));
    let mut w = vec![0];
    match style {
        LjStyle::UpDown => {
            w.extend(1..j);
            w.extend(((j + 1)..e).rev());
        }
        LjStyle::DownUp => {
            w.extend(((j + 1)..e).rev());
            w.extend(1..j);
        }
    }
    w.push(j);
    w
}

/// `l^j(m)`: every letter of `l^j` raised to the `m`-th divided power.
pub fn lj_divided(e: usize, j: usize, m: usize, style: LjStyle) -> DividedPowerWord {
    DividedPowerWord {
        entries: lj_with_style(e, j, style).into_iter().map(|i| (i, m)).collect(),
    }
}

/// The Gelfand-Graev word `l(λ,c) = l^{c_1}(λ_1) ... l^{c_n}(λ_n)`.
pub fn gg_word(lc: &ColoredComposition, e: usize) -> DividedPowerWord {
    gg_word_with_style(lc, e, LjStyle::UpDown)
}

pub fn gg_word_with_style(lc: &ColoredComposition, e: usize, style: LjStyle) -> DividedPowerWord {
    let mut entries = Vec::new();
    for (r, &m) in lc.lambda.parts().iter().enumerate() {
        entries.extend(lj_divided(e, lc.colors[r], m, style).entries);
    }
    DividedPowerWord { entries }
}

/// `a_λ = -e Σ λ_t (λ_t - 1) / 2 = -<l(λ,c)>`.
pub fn a_lambda(lc: &ColoredComposition, e: usize) -> i64 {
    -(e as i64)
        * lc.lambda
            .parts()
            .iter()
            .map(|&m| (m as i64) * (m as i64 - 1) / 2)
            .sum::<i64>()
}

/// Positive roots of the finite type `A_{e-1}` system on `J`: interval
/// sums `α_a + ... + α_b` for `1 <= a <= b <= e-1`, as `I`-indexed vectors.
fn finite_positive_roots(e: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in 1..e {
        for b in a..e {
            let mut v = vec![0; e];
            for i in a..=b {
                v[i] = 1;
            }
            out.push(v);
        }
    }
    out
}

/// Can `theta` be written as a sum of roots from `gens` (repetition
/// allowed)? Bounded memoized search; all generators are non-negative
/// vectors, so the state space is the box under `theta`.
fn in_root_monoid(theta: &[usize], gens: &[Vec<usize>], memo: &mut HashMap<Vec<usize>, bool>) -> bool {
    if theta.iter().all(|&c| c == 0) {
        return true;
    }
    if let Some(&r) = memo.get(theta) {
        return r;
    }
    let mut ok = false;
    for g in gens {
        if g.iter().zip(theta).all(|(a, b)| a <= b) {
            let rest: Vec<usize> = theta.iter().zip(g).map(|(b, a)| b - a).collect();
            if in_root_monoid(&rest, gens, memo) {
                ok = true;
                break;
            }
        }
    }
    memo.insert(theta.to_vec(), ok);
    ok
}

/// Generators of the monoid spanned by `Φ_+^{≼δ} = {nδ - β} ∪ {δ}` with the
/// δ-coefficient bounded by `dmax`.
fn cone_generators_pre(e: usize, dmax: usize) -> Vec<Vec<usize>> {
    let mut gens = vec![vec![1; e]];
    for beta in finite_positive_roots(e) {
        for n in 1..=dmax {
            gens.push((0..e).map(|i| n - beta[i]).collect());
        }
    }
    gens
}

/// Generators of the monoid spanned by `Φ_+^{≽δ} = {β + nδ} ∪ {δ}`.
fn cone_generators_post(e: usize, dmax: usize) -> Vec<Vec<usize>> {
    let mut gens = vec![vec![1; e]];
    for beta in finite_positive_roots(e) {
        for n in 0..=dmax {
            gens.push((0..e).map(|i| beta[i] + n).collect());
        }
    }
    gens
}

/// Is the word separated: every split `i = j k` has the prefix weight in
/// the `≼δ` cone and the suffix weight in the `≽δ` cone.
pub fn is_separated(word: &[usize], e: usize) -> Result<bool> {
    let weight = WeightVector::of_word(word, e);
    let Some(d) = weight.delta_multiple() else {
        return Err(Error::NotImaginaryWeight);
    };
    let pre_gens = cone_generators_pre(e, d);
    let post_gens = cone_generators_post(e, d);
    let mut memo_pre = HashMap::new();
    let mut memo_post = HashMap::new();
    for cut in 0..=word.len() {
        let wpre = WeightVector::of_word(&word[..cut], e);
        let wpost = WeightVector::of_word(&word[cut..], e);
        if !in_root_monoid(&wpre.counts, &pre_gens, &mut memo_pre)
            || !in_root_monoid(&wpost.counts, &post_gens, &mut memo_post)
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All semicuspidal words of weight `d·δ`: shuffles of `d` words drawn with
/// repetition from `∪_j I^{δ,j}`.
pub fn semicuspidal_words(e: usize, d: usize) -> Vec<Word> {
    let pool: Vec<Word> = (1..e).flat_map(|j| delta_words(e, j)).collect();
    let mut out: HashSet<Word> = HashSet::new();
    for combo in (0..pool.len()).combinations_with_replacement(d) {
        let words: Vec<&Word> = combo.iter().map(|&k| &pool[k]).collect();
        let mut partial: Vec<Word> = vec![vec![]];
        for w in words {
            let mut next = HashSet::new();
            for p in &partial {
                for sh in shuffles(p, w) {
                    next.insert(sh);
                }
            }
            partial = next.into_iter().collect();
        }
        out.extend(partial);
    }
    let mut v: Vec<Word> = out.into_iter().collect();
    v.sort();
    v
}

/// Membership in `I^{dδ}_sc` by shuffle-decomposition search.
///
/// Scans the word left to right, maintaining the set of partially-built
/// `I^{δ,j}` factors; a partial factor that has consumed the up-run through
/// `a-1` and the down-run through `b+1` is the state `(a, b)`, which can
/// consume `a`, consume `b`, or close with the final letter `j` when `a = b`.
pub fn is_semicuspidal(word: &[usize], e: usize) -> bool {
    let weight = WeightVector::of_word(word, e);
    let Some(d) = weight.delta_multiple() else {
        return false;
    };
    if d == 0 {
        return word.is_empty();
    }
    let mut memo: HashMap<(usize, BTreeMap<(usize, usize), usize>), bool> = HashMap::new();
    search(word, e, d, 0, &BTreeMap::new(), &mut memo)
}

fn search(
    word: &[usize],
    e: usize,
    d: usize,
    pos: usize,
    open: &BTreeMap<(usize, usize), usize>,
    memo: &mut HashMap<(usize, BTreeMap<(usize, usize), usize>), bool>,
) -> bool {
    if pos == word.len() {
        return open.is_empty();
    }
    let key = (pos, open.clone());
    if let Some(&r) = memo.get(&key) {
        return r;
    }
    let letter = word[pos];
    let mut ok = false;
    // Start a new factor: the first letter of every word in I^{δ,j} is 0.
    // After the 0, the up-run starts at 1 and the down-run at e-1;
    // for e = 2 the only continuation is closing with j = 1.
    let total_open: usize = open.values().sum();
    if letter == 0 && total_open < d {
        let mut next = open.clone();
        *next.entry((1, e - 1)).or_insert(0) += 1;
        ok = search(word, e, d, pos + 1, &next, memo);
    }
    if !ok {
        let states: Vec<(usize, usize)> = open.keys().copied().collect();
        for (a, b) in states {
            let step = |na: usize, nb: usize, close: bool, memo: &mut HashMap<_, _>| -> bool {
                let mut next = open.clone();
                let cnt = next.get_mut(&(a, b)).unwrap();
                *cnt -= 1;
                if *cnt == 0 {
                    next.remove(&(a, b));
                }
                if !close {
                    *next.entry((na, nb)).or_insert(0) += 1;
                }
                search(word, e, d, pos + 1, &next, memo)
            };
            // Consume the next up-run letter.
            if letter == a && a < b && step(a + 1, b, false, memo) {
                ok = true;
                break;
            }
            // Consume the next down-run letter.
            if letter == b && a < b && step(a, b - 1, false, memo) {
                ok = true;
                break;
            }
            // Close the factor with the final letter j = a = b.
            if letter == a && a == b && step(0, 0, true, memo) {
                ok = true;
                break;
            }
        }
    }
    memo.insert(key, ok);
    ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::Composition;

    fn word(s: &str) -> Word {
        s.chars().map(|c| c.to_digit(10).unwrap() as usize).collect()
    }

    #[test]
    fn delta_word_examples() {
        assert_eq!(delta_words(3, 1), vec![word("021")]);
        assert_eq!(delta_words(3, 2), vec![word("012")]);
        for e in 3..=6 {
            assert_eq!(delta_words(e, e - 2).len(), e - 2);
        }
        for e in 2..=6 {
            for j in 1..e {
                for w in delta_words(e, j) {
                    assert_eq!(w.len(), e);
                    assert_eq!(w[0], 0);
                    assert_eq!(*w.last().unwrap(), j);
                    let mut sorted = w.clone();
                    sorted.sort_unstable();
                    sorted.dedup();
                    assert_eq!(sorted.len(), e, "entries pairwise distinct");
                }
            }
        }
    }

    #[test]
    fn canonical_lj_examples() {
        assert_eq!(canonical_lj(3, 1), word("021"));
        assert_eq!(canonical_lj(5, 3), word("01243"));
        assert_eq!(canonical_lj(2, 1), word("01"));
        for e in 2..=6 {
            for j in 1..e {
                assert!(delta_words(e, j).contains(&canonical_lj(e, j)));
                assert!(delta_words(e, j).contains(&lj_with_style(e, j, LjStyle::DownUp)));
            }
        }
    }

    #[test]
    fn gg_word_examples() {
        // Single box: plain word, a = 0.
        let lc = ColoredComposition::new(Composition::new(vec![1]), vec![2], 4).unwrap();
        let w = gg_word(&lc, 4);
        assert_eq!(w.hat(), canonical_lj(4, 2));
        assert_eq!(w.angle(), 0);
        assert_eq!(a_lambda(&lc, 4), 0);

        // e=2, lambda=(2), c=(1).
        let lc = ColoredComposition::new(Composition::new(vec![2]), vec![1], 2).unwrap();
        let w = gg_word(&lc, 2);
        assert_eq!(w.entries, vec![(0, 2), (1, 2)]);
        assert_eq!(a_lambda(&lc, 2), -2);
        assert_eq!(w.angle(), 2);

        // a_omega = 0.
        let omega = ColoredComposition::new(Composition::new(vec![1, 1, 1]), vec![1, 2, 1], 3).unwrap();
        assert_eq!(a_lambda(&omega, 3), 0);
    }

    #[test]
    fn gg_word_weight_and_angle() {
        let lc = ColoredComposition::new(Composition::new(vec![2, 1]), vec![1, 2], 3).unwrap();
        let w = gg_word(&lc, 3);
        assert_eq!(w.weight(3).delta_multiple(), Some(3));
        assert_eq!(-w.angle(), a_lambda(&lc, 3));
        assert_eq!(w.hat().len(), 9);
    }

    #[test]
    fn separated_examples() {
        // Members of I^{δ,j} are separated.
        for e in 2..=5 {
            for j in 1..e {
                for w in delta_words(e, j) {
                    assert!(is_separated(&w, e).unwrap());
                }
            }
        }
        // Paper example at e=5.
        assert!(is_separated(&word("0012342341"), 5).unwrap());
        // Prefix (1) has weight α_1, not in the cone.
        assert!(!is_separated(&word("1100"), 2).unwrap());
        assert_eq!(
            is_separated(&word("011"), 2).unwrap_err(),
            Error::NotImaginaryWeight
        );
    }

    #[test]
    fn semicuspidal_examples() {
        let sc = semicuspidal_words(2, 2);
        assert_eq!(sc, vec![word("0011"), word("0101")]);
        assert!(!is_semicuspidal(&word("0012342341"), 5));
        assert!(is_separated(&word("0012342341"), 5).unwrap());
        for e in 2..=5 {
            for j in 1..e {
                let one = semicuspidal_words(e, 1);
                for w in delta_words(e, j) {
                    assert!(one.contains(&w));
                    assert!(is_semicuspidal(&w, e));
                }
            }
        }
    }

    #[test]
    fn semicuspidal_matches_membership_test() {
        for (e, d) in [(2, 2), (3, 2), (2, 3)] {
            let sc: HashSet<Word> = semicuspidal_words(e, d).into_iter().collect();
            // Exhaust all words of weight d·δ.
            let m = d * e;
            let mut all = vec![vec![]];
            for _ in 0..m {
                all = all
                    .into_iter()
                    .flat_map(|w: Word| {
                        (0..e).map(move |i| {
                            let mut v = w.clone();
                            v.push(i);
                            v
                        })
                    })
                    .collect();
            }
            for w in all {
                if WeightVector::of_word(&w, e).delta_multiple() != Some(d) {
                    continue;
                }
                assert_eq!(sc.contains(&w), is_semicuspidal(&w, e), "word {w:?}");
                if sc.contains(&w) {
                    assert!(is_separated(&w, e).unwrap(), "sc ⊆ sep fails at {w:?}");
                }
            }
        }
    }
}

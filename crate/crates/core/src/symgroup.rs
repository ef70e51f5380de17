//! Permutations of integer intervals, compositions, and the statistics
//! that tie them together.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `[start, start + len - 1]` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Perm {
    start: usize,
    images: Vec<usize>,
}

impl Perm {
    pub fn new(start: usize, images: Vec<usize>) -> Result<Self> {
        let len = images.len();
        let mut seen = vec![false; len];
        for &v in &images {
            if v < start || v >= start + len || seen[v - start] {
                return Err(Error::InvalidPermutation(format!("{images:?} on [{start},{}]", start + len - 1)));
            }
            seen[v - start] = true;
        }
        Ok(Self { start, images })
    }

    /// Builds a permutation from its images, inferring the interval.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let start = images.iter().copied().min().unwrap_or(1);
        Self::new(start, images)
    }

    pub fn identity(start: usize, len: usize) -> Self {
        Self { start, images: (start..start + len).collect() }
    }

    /// The long element `i ↦ a + b - i` of `S_{[a,b]}`.
    pub fn long_element(a: usize, b: usize) -> Self {
        assert!(a <= b + 1, "empty or valid interval required");
        Self { start: a, images: (a..=b).rev().collect() }
    }

    /// `σ_{i_1} ⋯ σ_{i_ℓ}` on `[start, start + len - 1]`.
    pub fn from_word(start: usize, len: usize, word: &[usize]) -> Result<Self> {
        let mut p = Self::identity(start, len);
        for &i in word {
            if i < start || i + 1 >= start + len {
                return Err(Error::IndexOutOfRange { index: i, max: start + len - 2 });
            }
            // right multiplication by σ_i swaps positions i and i+1
            p.images.swap(i - start, i + 1 - start);
        }
        Ok(p)
    }

    /// Every permutation of `[start, start + len - 1]`, lexicographically.
    pub fn all(start: usize, len: usize) -> Vec<Perm> {
        (start..start + len)
            .permutations(len)
            .map(|images| Perm { start, images })
            .collect()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    /// Last element of the interval (`start - 1` when empty).
    pub fn end(&self) -> usize {
        self.start + self.images.len() - 1
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `π(i)` for `i` in the interval.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - self.start]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == self.start + k)
    }

    fn check_same_interval(&self, other: &Perm) -> Result<()> {
        if self.start != other.start || self.len() != other.len() {
            return Err(Error::IntervalMismatch(self.start, self.end(), other.start, other.end()));
        }
        Ok(())
    }

    /// `(πρ)(i) = π(ρ(i))`.
    pub fn compose(&self, rho: &Perm) -> Result<Perm> {
        self.check_same_interval(rho)?;
        Ok(Perm { start: self.start, images: rho.images.iter().map(|&r| self.apply(r)).collect() })
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.len()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v - self.start] = self.start + k;
        }
        Perm { start: self.start, images }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        self.images
            .iter()
            .tuple_combinations()
            .filter(|(a, b)| a > b)
            .count()
    }

    /// A reduced word `[i_1, …, i_ℓ]` with `π = σ_{i_1} ⋯ σ_{i_ℓ}`,
    /// found by repeatedly sorting away the leftmost descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut images = self.images.clone();
        let mut word = Vec::new();
        'outer: loop {
            for k in 0..images.len().saturating_sub(1) {
                if images[k] > images[k + 1] {
                    images.swap(k, k + 1);
                    // π = π' σ_i, and π' is handled next, so σ_i goes last
                    word.push(self.start + k);
                    continue 'outer;
                }
            }
            break;
        }
        word.reverse();
        word
    }

    /// A reduced word obtained from the rightmost descent instead.
    pub fn reduced_word_rightmost(&self) -> Vec<usize> {
        let mut images = self.images.clone();
        let mut word = Vec::new();
        'outer: loop {
            for k in (0..images.len().saturating_sub(1)).rev() {
                if images[k] > images[k + 1] {
                    images.swap(k, k + 1);
                    word.push(self.start + k);
                    continue 'outer;
                }
            }
            break;
        }
        word.reverse();
        word
    }

    /// All reduced words; exponential, intended for small lengths.
    pub fn all_reduced_words(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut suffix = Vec::new();
        collect_words(&mut self.images.clone(), self.start, &mut suffix, &mut out);
        out.sort();
        out
    }

    /// Entrywise reflection `π(i) ↦ a + b - π(i)` within the interval.
    pub fn complement(&self) -> Perm {
        let ab = self.start + self.end();
        Perm { start: self.start, images: self.images.iter().map(|&v| ab - v).collect() }
    }

    /// The concatenation `π_1 π_2` of permutations of adjacent intervals.
    pub fn concat(first: &Perm, second: &Perm) -> Result<Perm> {
        if !first.is_empty() && !second.is_empty() && second.start != first.end() + 1 {
            return Err(Error::IntervalMismatch(first.start, first.end(), second.start, second.end()));
        }
        let start = if first.is_empty() { second.start } else { first.start };
        let mut images = first.images.clone();
        images.extend_from_slice(&second.images);
        Perm::new(start, images)
    }

    /// Splits a permutation of `[1,n]` as `π_1 π_2` with `π_1 ∈ S_{[1,m]}`.
    pub fn split_at(&self, m: usize) -> Result<(Perm, Perm)> {
        if m > self.len() {
            return Err(Error::NotConcatenated { m });
        }
        let first = Perm::new(self.start, self.images[..m].to_vec()).map_err(|_| Error::NotConcatenated { m })?;
        let second = Perm::new(self.start + m, self.images[m..].to_vec()).map_err(|_| Error::NotConcatenated { m })?;
        Ok((first, second))
    }

    /// Extends by fixed points to a permutation of `[1, n]`.
    pub fn embed(&self, n: usize) -> Result<Perm> {
        if self.start == 0 || self.end() > n {
            return Err(Error::IntervalMismatch(self.start, self.end(), 1, n));
        }
        let mut images: Vec<usize> = (1..=n).collect();
        for (k, &v) in self.images.iter().enumerate() {
            images[self.start - 1 + k] = v;
        }
        Ok(Perm { start: 1, images })
    }

    /// `π(μ) = (μ_{π⁻¹(1)}, …, μ_{π⁻¹(n)})`.
    pub fn act_composition(&self, mu: &Composition) -> Result<Composition> {
        if mu.len() != self.len() {
            return Err(Error::LengthMismatch { expected: self.len(), found: mu.len() });
        }
        let inv = self.inverse();
        Ok(Composition((0..self.len()).map(|k| mu.0[inv.images[k] - self.start]).collect()))
    }

    /// One-line notation: bare digits when every entry is below 10.
    pub fn one_line(&self) -> String {
        if self.images.iter().all(|&v| v < 10) {
            self.images.iter().map(|v| v.to_string()).collect()
        } else {
            self.images.iter().join(",")
        }
    }
}

fn collect_words(images: &mut Vec<usize>, start: usize, suffix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let mut any = false;
    for k in 0..images.len().saturating_sub(1) {
        if images[k] > images[k + 1] {
            any = true;
            images.swap(k, k + 1);
            suffix.push(start + k);
            collect_words(images, start, suffix, out);
            suffix.pop();
            images.swap(k, k + 1);
        }
    }
    if !any {
        out.push(suffix.iter().rev().copied().collect());
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.one_line())
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad permutation entry {p:?}"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad digit {c:?}"))))
                .collect::<Result<_>>()?
        };
        if values.is_empty() {
            return Err(Error::Parse("empty permutation".into()));
        }
        Perm::from_images(values)
    }
}

/// A vector of nonnegative integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition(pub Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Self(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `μ_i` for one-based `i`.
    pub fn part(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn max_part(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Composition(v)
    }

    /// `inv(γ) = |{i < j : γ_i > γ_j}|`.
    pub fn inv(&self) -> usize {
        self.0.iter().tuple_combinations().filter(|(a, b)| a > b).count()
    }

    /// All compositions with `len` parts and total size `size`, in
    /// lexicographically decreasing order.
    pub fn all_of_size(len: usize, size: u32) -> Vec<Composition> {
        fn rec(len: usize, size: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
            if len == 1 {
                prefix.push(size);
                out.push(Composition(prefix.clone()));
                prefix.pop();
                return;
            }
            for first in (0..=size).rev() {
                prefix.push(first);
                rec(len - 1, size - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if len == 0 {
            if size == 0 {
                out.push(Composition(Vec::new()));
            }
            return out;
        }
        rec(len, size, &mut Vec::new(), &mut out);
        out
    }

    /// Compositions with `len` parts and size at most `max_size`, ordered by
    /// size and then lexicographically.
    pub fn all_up_to(len: usize, max_size: u32) -> Vec<Composition> {
        (0..=max_size).flat_map(|d| Self::all_of_size(len, d)).collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Composition(Vec::new()));
        }
        s.split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad composition part {p:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(Composition)
    }
}

fn require_partition(lambda: &Composition) -> Result<()> {
    if !lambda.is_weakly_decreasing() {
        return Err(Error::NotWeaklyDecreasing(lambda.to_string()));
    }
    Ok(())
}

/// Minimal length representatives of `S_m / (S_m)_λ`: those `π` with
/// `π(i) < π(j)` whenever `i < j` and `λ_i = λ_j`.
pub fn coset_min_reps(lambda: &Composition) -> Result<Vec<Perm>> {
    require_partition(lambda)?;
    let m = lambda.len();
    Ok(Perm::all(1, m)
        .into_iter()
        .filter(|p| {
            (0..m).tuple_combinations().all(|(i, j)| lambda.0[i] != lambda.0[j] || p.images[i] < p.images[j])
        })
        .collect())
}

/// The minimal representative of `π (S_m)_λ`: sort the images inside each
/// block of equal parts of `λ`.
pub fn coset_underline(pi: &Perm, lambda: &Composition) -> Result<Perm> {
    require_partition(lambda)?;
    if pi.len() != lambda.len() {
        return Err(Error::LengthMismatch { expected: lambda.len(), found: pi.len() });
    }
    let mut images = pi.images.clone();
    let mut k = 0;
    while k < images.len() {
        let mut end = k + 1;
        while end < images.len() && lambda.0[end] == lambda.0[k] {
            end += 1;
        }
        images[k..end].sort_unstable();
        k = end;
    }
    Ok(Perm { start: pi.start, images })
}

/// `ℓ_μ(π)`: pairs `i < j` with `π(i) > π(j)` and `μ_i ≤ μ_j`.
pub fn ell_mu(mu: &Composition, pi: &Perm) -> Result<usize> {
    if mu.len() != pi.len() {
        return Err(Error::LengthMismatch { expected: pi.len(), found: mu.len() });
    }
    Ok((0..mu.len())
        .tuple_combinations()
        .filter(|&(i, j)| pi.images[i] > pi.images[j] && mu.0[i] <= mu.0[j])
        .count())
}

/// `(inv(γ), inv(λ|γ))` where the second adds pairs `λ_i > γ_j`.
pub fn inv_stats(lambda: &Composition, gamma: &Composition) -> (usize, usize) {
    let inv_gamma = gamma.inv();
    let cross = lambda
        .0
        .iter()
        .cartesian_product(gamma.0.iter())
        .filter(|(l, g)| l > g)
        .count();
    (inv_gamma, inv_gamma + cross)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn composition_convention() {
        assert_eq!(p("132").compose(&p("213")).unwrap(), p("312"));
        assert_eq!(p("231").inverse(), p("312"));
        let id = Perm::identity(1, 3);
        assert_eq!(p("231").compose(&id).unwrap(), p("231"));
        assert!(p("12").compose(&p("123")).is_err());
    }

    #[test]
    fn reduced_words_multiply_back() {
        for pi in Perm::all(1, 4) {
            let w = pi.reduced_word();
            assert_eq!(w.len(), pi.length());
            assert_eq!(Perm::from_word(1, 4, &w).unwrap(), pi);
            let w2 = pi.reduced_word_rightmost();
            assert_eq!(Perm::from_word(1, 4, &w2).unwrap(), pi);
            for w in pi.all_reduced_words() {
                assert_eq!(w.len(), pi.length());
                assert_eq!(Perm::from_word(1, 4, &w).unwrap(), pi);
            }
        }
        assert_eq!(Perm::identity(1, 3).reduced_word(), Vec::<usize>::new());
        assert_eq!(p("321").length(), 3);
        let w = p("2143").reduced_word();
        assert_eq!(w.len(), 2);
        assert_eq!(Perm::from_word(1, 4, &w).unwrap(), p("2143"));
    }

    #[test]
    fn long_elements_and_complements() {
        assert_eq!(Perm::long_element(1, 3), p("321"));
        assert_eq!(Perm::long_element(3, 5).images(), &[5, 4, 3]);
        for (m, n) in [(0usize, 4usize), (1, 4), (2, 5)] {
            let k = n - m;
            assert_eq!(Perm::long_element(m + 1, n).length(), k * (k - 1) / 2);
        }
        assert_eq!(p("1432").complement(), p("4123"));
        assert_eq!(p("132").complement(), p("312"));
        assert_eq!(p("546").complement(), p("564"));
        assert_eq!(p("546").complement().complement(), p("546"));
    }

    #[test]
    fn concatenation_and_split() {
        let pi = Perm::concat(&p("132"), &p("546")).unwrap();
        assert_eq!(pi, p("132546"));
        let (a, b) = pi.split_at(3).unwrap();
        assert_eq!((a, b), (p("132"), p("546")));
        assert!(p("312465").split_at(2).is_err());
    }

    fn brute_coset_reps(lambda: &Composition) -> Vec<Perm> {
        let m = lambda.len();
        Perm::all(1, m)
            .into_iter()
            .filter(|p| {
                (0..m).all(|i| (i + 1..m).all(|j| lambda.0[i] != lambda.0[j] || p.apply(i + 1) < p.apply(j + 1)))
            })
            .collect()
    }

    #[test]
    fn coset_representatives() {
        let l = |v: Vec<u32>| Composition(v);
        assert_eq!(coset_min_reps(&l(vec![1, 0])).unwrap(), vec![p("12"), p("21")]);
        assert_eq!(coset_min_reps(&l(vec![1, 1])).unwrap(), vec![p("12")]);
        let reps = coset_min_reps(&l(vec![2, 1, 1])).unwrap();
        assert_eq!(reps.len(), 3);
        assert_eq!(reps, brute_coset_reps(&l(vec![2, 1, 1])));
        assert!(coset_min_reps(&l(vec![0, 1])).is_err());
    }

    #[test]
    fn underline_is_min_length_in_coset() {
        let lambda = Composition(vec![2, 2, 0]);
        let stab: Vec<Perm> = Perm::all(1, 3).into_iter().filter(|s| s.act_composition(&lambda).unwrap() == lambda).collect();
        for pi in Perm::all(1, 3) {
            let coset: Vec<Perm> = stab.iter().map(|s| pi.compose(s).unwrap()).collect();
            let best = coset.iter().min_by_key(|c| c.length()).unwrap();
            let u = coset_underline(&pi, &lambda).unwrap();
            assert_eq!(&u, best);
            let sigma = u.inverse().compose(&pi).unwrap();
            assert_eq!(pi.length(), u.length() + sigma.length());
        }
        assert_eq!(coset_underline(&p("213"), &lambda).unwrap(), p("123"));
        assert_eq!(coset_underline(&p("21"), &Composition(vec![1, 1])).unwrap(), p("12"));
        assert_eq!(coset_underline(&p("231"), &Composition(vec![3, 2, 1])).unwrap(), p("231"));
    }

    #[test]
    fn ell_mu_values() {
        let mu = Composition(vec![1, 1, 1]);
        assert_eq!(ell_mu(&mu, &Perm::identity(1, 3)).unwrap(), 0);
        assert_eq!(ell_mu(&mu, &Perm::long_element(1, 3)).unwrap(), 3);
        let lambda = Composition(vec![2, 1, 1]);
        let mu = lambda.concat(&Composition(vec![0, 3]));
        for rep in coset_min_reps(&lambda).unwrap() {
            assert_eq!(ell_mu(&mu, &rep.embed(5).unwrap()).unwrap(), 0);
        }
    }

    #[test]
    fn inversion_statistics() {
        let c = |v: Vec<u32>| Composition(v);
        assert_eq!(inv_stats(&c(vec![]), &c(vec![0, 1, 2])).0, 0);
        assert_eq!(inv_stats(&c(vec![]), &c(vec![2, 1, 0])).0, 3);
        assert_eq!(inv_stats(&c(vec![1]), &c(vec![0, 2])), (0, 1));
    }

    #[test]
    fn action_on_compositions() {
        let mu = Composition(vec![3, 5, 7]);
        assert_eq!(Perm::identity(1, 3).act_composition(&mu).unwrap(), mu);
        assert_eq!(Perm::long_element(1, 3).act_composition(&mu).unwrap(), Composition(vec![7, 5, 3]));
        assert_eq!(p("213").act_composition(&mu).unwrap(), Composition(vec![5, 3, 7]));
    }

    #[test]
    fn parsing() {
        assert_eq!(p("132645").images(), &[1, 3, 2, 6, 4, 5]);
        assert_eq!(p("1,3,2").images(), &[1, 3, 2]);
        assert_eq!(p("546").start(), 4);
        assert!("122".parse::<Perm>().is_err());
        assert_eq!("0,1".parse::<Composition>().unwrap(), Composition(vec![0, 1]));
        let big = Perm::long_element(1, 10);
        assert_eq!(big.one_line(), "10,9,8,7,6,5,4,3,2,1");
        assert_eq!(big.one_line().parse::<Perm>().unwrap(), big);
    }

    #[test]
    fn composition_enumeration() {
        let all = Composition::all_up_to(3, 2);
        assert_eq!(all.len(), 10);
        assert_eq!(all[0], Composition(vec![0, 0, 0]));
        assert_eq!(all[1], Composition(vec![1, 0, 0]));
    }
}

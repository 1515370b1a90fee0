//! Minimum distance of binary images, the best-known-distance table, and
//! seeded search for ACD codes.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code::{check_cap, AdditiveCode, CodeType};
use crate::duality::{self, AcdCertificate};
use crate::error::{Error, Result};
use crate::field::{BitVector, MixedWord};
use crate::wmap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Optimality {
    /// Distance meets the tabulated best known value.
    Optimal,
    /// Distance falls short of the best known value by `gap`.
    NearOptimal(usize),
    /// No table entry for these parameters.
    Unknown,
}

impl fmt::Display for Optimality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Optimality::Optimal => f.write_str("optimal"),
            Optimality::NearOptimal(gap) => write!(f, "near-optimal (gap {gap})"),
            Optimality::Unknown => f.write_str("unknown"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceReport {
    pub n: usize,
    pub k: usize,
    /// Minimum nonzero weight; `None` for the zero code.
    pub d: Option<usize>,
    /// Entry w counts the codewords of weight w; length n + 1.
    pub weight_distribution: Vec<u64>,
    pub best_known: Option<usize>,
    pub optimality: Optimality,
}

impl DistanceReport {
    /// Fills in the best known distance and the optimality verdict.
    pub fn with_best_known(mut self, table: &BestKnownTable) -> DistanceReport {
        self.best_known = table.lookup(self.n, self.k);
        self.optimality = match (self.best_known, self.d) {
            (Some(best), Some(d)) if d >= best => Optimality::Optimal,
            (Some(best), Some(d)) => Optimality::NearOptimal(best - d),
            _ => Optimality::Unknown,
        };
        self
    }
}

/// Exact minimum distance and weight distribution of a binary code
/// (`beta == 0`) by enumerating its 2^k words.
pub fn min_distance(c: &AdditiveCode, cap: u64) -> Result<DistanceReport> {
    if c.beta() != 0 {
        return Err(Error::Inapplicable(
            "minimum distance is defined for binary codes",
        ));
    }
    let n = c.alpha();
    let mut weight_distribution = alloc::vec![0u64; n + 1];
    for word in c.codewords(cap)? {
        weight_distribution[word.binary_part().weight()] += 1;
    }
    let d = (1..=n).find(|&w| weight_distribution[w] > 0);
    Ok(DistanceReport {
        n,
        k: c.dimension(),
        d,
        weight_distribution,
        best_known: None,
        optimality: Optimality::Unknown,
    })
}

/// Distance report of the binary image W(C), with best-known lookup.
pub fn image_distance(
    c: &AdditiveCode,
    table: &BestKnownTable,
    cap: u64,
) -> Result<DistanceReport> {
    let image = wmap::w_map_code(c);
    Ok(min_distance(image.image(), cap)?.with_best_known(table))
}

/// Best known minimum distances of binary linear [n, k] codes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BestKnownTable {
    entries: BTreeMap<(usize, usize), usize>,
}

const BUILTIN_TABLE: &str = include_str!("best_known.txt");

impl BestKnownTable {
    pub fn empty() -> Self {
        Self::default()
    }

    /// The entries shipped with the crate.
    pub fn builtin() -> Self {
        Self::parse(BUILTIN_TABLE).expect("builtin table is well formed")
    }

    /// Parses lines of the form `n k d`. Blank lines and text after `#` are
    /// ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut table = Self::empty();
        table.extend_from_str(text)?;
        Ok(table)
    }

    /// Adds the entries of `text`, overriding existing ones.
    pub fn extend_from_str(&mut self, text: &str) -> Result<()> {
        for (i, line) in text.lines().enumerate() {
            let content = line.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let fields: Vec<usize> = content
                .split_whitespace()
                .map(str::parse)
                .collect::<core::result::Result<_, _>>()
                .map_err(|_| Error::TableLine { line: i + 1 })?;
            let [n, k, d] = fields[..] else {
                return Err(Error::TableLine { line: i + 1 });
            };
            self.entries.insert((n, k), d);
        }
        Ok(())
    }

    pub fn insert(&mut self, n: usize, k: usize, d: usize) {
        self.entries.insert((n, k), d);
    }

    pub fn lookup(&self, n: usize, k: usize) -> Option<usize> {
        self.entries.get(&(n, k)).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Look up in the builtin table.
pub fn best_known_lookup(n: usize, k: usize) -> Option<usize> {
    BestKnownTable::builtin().lookup(n, k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Draw `trials` random generator matrices.
    Random { trials: u64 },
    /// Visit every subspace once, as its reduced echelon basis.
    Exhaustive,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Filters {
    pub acd: bool,
    pub image_lcd: bool,
    /// Minimum distance of the binary image.
    pub min_distance: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSpec {
    pub alpha: usize,
    pub beta: usize,
    /// F2-dimension of the generated codes. When absent, random mode draws
    /// it uniformly from `1..=alpha + 2 beta` and exhaustive mode visits
    /// every dimension in that range.
    pub k: Option<usize>,
    pub target_type: Option<CodeType>,
    pub mode: SearchMode,
    pub filters: Filters,
    pub seed: u64,
    /// Bound on enumerated words (per distance computation) and on the
    /// number of codes visited in exhaustive mode.
    pub cap: u64,
}

impl SearchSpec {
    pub fn new(alpha: usize, beta: usize, mode: SearchMode) -> Self {
        SearchSpec {
            alpha,
            beta,
            k: None,
            target_type: None,
            mode,
            filters: Filters::default(),
            seed: 0,
            cap: crate::code::DEFAULT_ENUMERATION_CAP,
        }
    }

    fn linear_length(&self) -> usize {
        self.alpha + 2 * self.beta
    }

    fn dimensions(&self) -> (usize, usize) {
        match self.k {
            Some(k) => (k, k),
            None => (1, self.linear_length()),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.linear_length();
        if self.alpha + self.beta == 0 {
            return Err(Error::InvalidSearch("alpha + beta must be positive".into()));
        }
        if let Some(k) = self.k {
            if k > n {
                return Err(Error::InvalidSearch(format!(
                    "k = {k} exceeds alpha + 2 beta = {n}"
                )));
            }
        }
        if let Some(t) = self.target_type {
            if (t.alpha, t.beta) != (self.alpha, self.beta) {
                return Err(Error::InvalidSearch(format!(
                    "target type {t} does not have shape ({},{})",
                    self.alpha, self.beta
                )));
            }
        }
        let (_, k_max) = self.dimensions();
        check_cap(k_max, self.cap)?;
        if self.mode == SearchMode::Exhaustive {
            let size = self.exhaustive_size();
            if size > self.cap as u128 {
                return Err(Error::CapExceeded {
                    required: size,
                    cap: self.cap,
                });
            }
        }
        Ok(())
    }

    /// Number of codes exhaustive mode would visit, saturating.
    pub fn exhaustive_size(&self) -> u128 {
        let (lo, hi) = self.dimensions();
        (lo..=hi)
            .map(|k| gaussian_binomial(self.linear_length(), k))
            .fold(0u128, u128::saturating_add)
    }
}

/// Number of k-dimensional subspaces of F2^n, saturating at `u128::MAX`.
pub fn gaussian_binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    // Product of (2^(n-i) - 1) / (2^(i+1) - 1); each partial product is an
    // integer.
    let mut value: u128 = 1;
    for i in 0..k {
        if n - i >= 127 {
            return u128::MAX;
        }
        let num = (1u128 << (n - i)) - 1;
        let den = (1u128 << (i + 1)) - 1;
        value = match value.checked_mul(num) {
            Some(v) => v / den,
            None => return u128::MAX,
        };
    }
    value
}

/// A code that passed every filter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchHit {
    /// Trial index in random mode, enumeration index in exhaustive mode.
    pub trial: u64,
    pub code: AdditiveCode,
    pub certificate: AcdCertificate,
    pub distance: DistanceReport,
}

/// Runs a search. The stream depends only on `spec`: trial `t` of random
/// mode uses ChaCha8 seeded with `spec.seed` on stream `t`.
pub fn search<'a>(spec: &SearchSpec, table: &'a BestKnownTable) -> Result<Search<'a>> {
    spec.validate()?;
    let source = match spec.mode {
        SearchMode::Random { trials } => Source::Random { next: 0, trials },
        SearchMode::Exhaustive => {
            let (lo, hi) = spec.dimensions();
            Source::Exhaustive {
                next: 0,
                subspaces: Subspaces::new(spec.linear_length(), lo, hi),
            }
        }
    };
    Ok(Search {
        spec: spec.clone(),
        table,
        source,
    })
}

pub struct Search<'a> {
    spec: SearchSpec,
    table: &'a BestKnownTable,
    source: Source,
}

enum Source {
    Random { next: u64, trials: u64 },
    Exhaustive { next: u64, subspaces: Subspaces },
}

impl Search<'_> {
    /// Draws the code for random trial `trial`; `None` when the drawn rows
    /// are dependent and fall short of a requested dimension.
    fn random_code(&self, trial: u64) -> Option<AdditiveCode> {
        let spec = &self.spec;
        let n = spec.linear_length();
        let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
        rng.set_stream(trial);
        let k = spec.k.unwrap_or_else(|| rng.random_range(1..=n));
        let rows = (0..k)
            .map(|_| {
                let v = BitVector::from_bools((0..n).map(|_| rng.random::<bool>()));
                MixedWord::delinearize(spec.alpha, spec.beta, &v)
            })
            .collect();
        let code = AdditiveCode::from_rows(spec.alpha, spec.beta, rows).expect("shapes agree");
        (code.dimension() == k).then_some(code)
    }

    fn evaluate(&self, trial: u64, code: AdditiveCode) -> Option<SearchHit> {
        let spec = &self.spec;
        if let Some(t) = spec.target_type {
            if code.code_type() != t {
                return None;
            }
        }
        if spec.filters.acd && !duality::hull_is_trivial(&code) {
            return None;
        }
        if spec.filters.image_lcd && !wmap::is_image_lcd(&wmap::w_map_code(&code)) {
            return None;
        }
        let distance =
            image_distance(&code, self.table, spec.cap).expect("cap checked by validate");
        if let Some(d0) = spec.filters.min_distance {
            if distance.d.is_none_or(|d| d < d0) {
                return None;
            }
        }
        Some(SearchHit {
            trial,
            certificate: duality::is_acd(&code),
            code,
            distance,
        })
    }
}

impl Iterator for Search<'_> {
    type Item = SearchHit;

    fn next(&mut self) -> Option<SearchHit> {
        loop {
            let (trial, code) = match &mut self.source {
                Source::Random { next, trials } => {
                    if *next >= *trials {
                        return None;
                    }
                    let t = *next;
                    *next += 1;
                    (t, None)
                }
                Source::Exhaustive { next, subspaces } => {
                    let basis = subspaces.next()?;
                    let t = *next;
                    *next += 1;
                    (t, Some(basis))
                }
            };
            let code = match code {
                Some(basis) => {
                    AdditiveCode::from_linear_basis(self.spec.alpha, self.spec.beta, &basis)
                }
                None => match self.random_code(trial) {
                    Some(c) => c,
                    None => continue,
                },
            };
            if let Some(hit) = self.evaluate(trial, code) {
                return Some(hit);
            }
        }
    }
}

/// Every subspace of F2^n with dimension in `lo..=hi`, each as its reduced
/// row echelon basis. Order: by dimension, then pivot set in lexicographic
/// order, then free entries as a binary counter.
pub struct Subspaces {
    n: usize,
    k: usize,
    hi: usize,
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    mask: u128,
    done: bool,
}

impl Subspaces {
    pub fn new(n: usize, lo: usize, hi: usize) -> Self {
        let mut s = Subspaces {
            n,
            k: lo,
            hi: hi.min(n),
            pivots: (0..lo).collect(),
            free: Vec::new(),
            mask: 0,
            done: lo > hi.min(n),
        };
        s.refresh_free();
        s
    }

    /// Positions (row, column) right of each pivot that are not pivot columns.
    fn refresh_free(&mut self) {
        self.free.clear();
        for (r, &p) in self.pivots.iter().enumerate() {
            for c in p + 1..self.n {
                if !self.pivots.contains(&c) {
                    self.free.push((r, c));
                }
            }
        }
        self.mask = 0;
    }

    /// Next k-combination of 0..n; false when exhausted.
    fn advance_pivots(&mut self) -> bool {
        let (n, k) = (self.n, self.k);
        let Some(i) = (0..k).rev().find(|&i| self.pivots[i] < n - k + i) else {
            return false;
        };
        self.pivots[i] += 1;
        for j in i + 1..k {
            self.pivots[j] = self.pivots[j - 1] + 1;
        }
        true
    }

    fn advance(&mut self) {
        let limit = 1u128 << self.free.len();
        self.mask += 1;
        if self.mask < limit {
            return;
        }
        if !self.advance_pivots() {
            self.k += 1;
            if self.k > self.hi {
                self.done = true;
                return;
            }
            self.pivots = (0..self.k).collect();
        }
        self.refresh_free();
    }
}

impl Iterator for Subspaces {
    type Item = Vec<BitVector>;

    fn next(&mut self) -> Option<Vec<BitVector>> {
        if self.done {
            return None;
        }
        let mut rows: Vec<BitVector> = self
            .pivots
            .iter()
            .map(|&p| BitVector::unit(self.n, p))
            .collect();
        for (bit, &(r, c)) in self.free.iter().enumerate() {
            if (self.mask >> bit) & 1 == 1 {
                rows[r].set(c, true);
            }
        }
        self.advance();
        Some(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::tests::{code, w, I, W, W2};
    use crate::field::testing::word;
    use alloc::vec;
    use proptest::prelude::*;

    #[test]
    fn repetition_code_distance() {
        let rep = code(5, 0, &[w(&[1, 1, 1, 1, 1], &[])]);
        let r = min_distance(&rep, 1 << 10).unwrap();
        assert_eq!(r.d, Some(5));
        assert_eq!(r.weight_distribution, vec![1, 0, 0, 0, 0, 1]);
    }

    #[test]
    fn distance_of_quaternary_code_is_refused() {
        assert!(min_distance(&code(1, 1, &[w(&[1], &[I])]), 16).is_err());
    }

    #[test]
    fn distance_refuses_over_cap() {
        let c = AdditiveCode::ambient(6, 0);
        assert_eq!(
            min_distance(&c, 32).unwrap_err(),
            Error::CapExceeded {
                required: 64,
                cap: 32
            }
        );
    }

    #[test]
    fn image_distance_of_length_seven_example() {
        let c = code(3, 2, &[w(&[1, 1, 1], &[W, W2]), w(&[0, 0, 0], &[W, W])]);
        let r = image_distance(&c, &BestKnownTable::builtin(), 1 << 10).unwrap();
        assert_eq!((r.n, r.k, r.d), (7, 2, Some(4)));
        assert_eq!(r.optimality, Optimality::Optimal);
    }

    #[test]
    fn builtin_table_entries() {
        assert_eq!(best_known_lookup(16, 6), Some(6));
        assert_eq!(best_known_lookup(7, 2), Some(4));
        assert_eq!(best_known_lookup(100, 50), None);
    }

    #[test]
    fn table_parsing() {
        let t = BestKnownTable::parse("# comment\n\n8 4 4  # extended Hamming\n").unwrap();
        assert_eq!(t.lookup(8, 4), Some(4));
        assert_eq!(
            BestKnownTable::parse("1 2\n"),
            Err(Error::TableLine { line: 1 })
        );
        assert_eq!(
            BestKnownTable::parse("7 2 4\nx 1 1"),
            Err(Error::TableLine { line: 2 })
        );
    }

    #[test]
    fn near_optimal_gap() {
        let mut table = BestKnownTable::empty();
        table.insert(5, 1, 6);
        let rep = code(5, 0, &[w(&[1, 1, 1, 1, 1], &[])]);
        let r = min_distance(&rep, 64).unwrap().with_best_known(&table);
        assert_eq!(r.optimality, Optimality::NearOptimal(1));
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(3, 1), 7);
        assert_eq!(gaussian_binomial(4, 2), 35);
        assert_eq!(gaussian_binomial(8, 2), 10795);
        assert_eq!(gaussian_binomial(5, 0), 1);
        assert_eq!(gaussian_binomial(2, 3), 0);
    }

    #[test]
    fn subspace_enumeration_counts() {
        for n in 1..=6 {
            for k in 0..=n {
                let all: Vec<_> = Subspaces::new(n, k, k).collect();
                assert_eq!(all.len() as u128, gaussian_binomial(n, k), "n={n} k={k}");
            }
        }
        assert_eq!(Subspaces::new(3, 1, 3).count(), 7 + 7 + 1);
    }

    #[test]
    fn exhaustive_one_by_one_single_generator() {
        let mut spec = SearchSpec::new(1, 1, SearchMode::Exhaustive);
        spec.k = Some(1);
        let table = BestKnownTable::builtin();
        assert_eq!(search(&spec, &table).unwrap().count(), 7);
        spec.filters.acd = true;
        let hits: Vec<_> = search(&spec, &table).unwrap().collect();
        assert_eq!(hits.len(), 6);
        assert!(hits.iter().all(|h| h.code.rows()[0] != w(&[1], &[W2])));
    }

    #[test]
    fn random_search_finds_length_seven_code() {
        let mut spec = SearchSpec::new(3, 2, SearchMode::Random { trials: 10_000 });
        spec.k = Some(2);
        spec.seed = 7;
        spec.filters = Filters {
            acd: true,
            image_lcd: true,
            min_distance: Some(4),
        };
        let table = BestKnownTable::builtin();
        let hits: Vec<_> = search(&spec, &table).unwrap().collect();
        assert!(!hits.is_empty());
        for h in &hits {
            assert!(h.certificate.is_acd());
            assert_eq!((h.distance.n, h.distance.k, h.distance.d), (7, 2, Some(4)));
        }
        let again: Vec<_> = search(&spec, &table).unwrap().collect();
        assert_eq!(hits, again);
    }

    #[test]
    fn impossible_distance_gives_no_hits() {
        let mut spec = SearchSpec::new(2, 1, SearchMode::Random { trials: 200 });
        spec.filters.min_distance = Some(5);
        assert_eq!(
            search(&spec, &BestKnownTable::builtin()).unwrap().count(),
            0
        );
    }

    #[test]
    fn invalid_specs() {
        let table = BestKnownTable::builtin();
        assert!(matches!(
            search(
                &SearchSpec::new(0, 0, SearchMode::Random { trials: 1 }),
                &table
            ),
            Err(Error::InvalidSearch(_))
        ));
        let mut spec = SearchSpec::new(4, 4, SearchMode::Exhaustive);
        spec.cap = 1000;
        assert!(matches!(
            search(&spec, &table),
            Err(Error::CapExceeded { .. })
        ));
        let mut spec = SearchSpec::new(1, 1, SearchMode::Random { trials: 1 });
        spec.k = Some(4);
        assert!(matches!(
            search(&spec, &table),
            Err(Error::InvalidSearch(_))
        ));
        let zero_trials = SearchSpec::new(2, 2, SearchMode::Random { trials: 0 });
        assert_eq!(search(&zero_trials, &table).unwrap().count(), 0);
    }

    #[test]
    fn target_type_filter() {
        let mut spec = SearchSpec::new(1, 1, SearchMode::Exhaustive);
        spec.target_type = Some(CodeType {
            alpha: 1,
            beta: 1,
            k1: 1,
            k2p: 0,
            k2pp: 1,
        });
        let hits: Vec<_> = search(&spec, &BestKnownTable::builtin()).unwrap().collect();
        assert_eq!(hits.len(), 6);
        assert!(hits.iter().all(|h| h.code.dimension() == 2));
        assert!(!hits
            .iter()
            .any(|h| h.code.contains(&w(&[0], &[W])) && h.code.contains(&w(&[0], &[I]))));
    }

    /// Distance as the minimum over distinct pairs of codewords.
    fn pairwise_distance(c: &AdditiveCode) -> Option<usize> {
        let words: Vec<_> = c
            .codewords(1 << 12)
            .unwrap()
            .map(|w| w.binary_part().clone())
            .collect();
        let mut best = None;
        for (i, u) in words.iter().enumerate() {
            for v in &words[i + 1..] {
                let d = u.xor(v).weight();
                best = Some(best.map_or(d, |b: usize| b.min(d)));
            }
        }
        best
    }

    proptest! {
        #[test]
        fn min_distance_matches_pairwise_oracle(
            (n, rows) in (1usize..=12).prop_flat_map(|n| (Just(n), proptest::collection::vec(word(n, 0), 0..=8)))
        ) {
            let c = AdditiveCode::from_rows(n, 0, rows).unwrap();
            let r = min_distance(&c, 1 << 12).unwrap();
            prop_assert_eq!(r.d, pairwise_distance(&c));
            prop_assert_eq!(r.weight_distribution.iter().sum::<u64>(), 1u64 << c.dimension());
            prop_assert_eq!(r.weight_distribution[0], 1);
        }

        #[test]
        fn search_is_deterministic(seed in any::<u64>(), a in 0usize..=3, b in 1usize..=2) {
            let mut spec = SearchSpec::new(a, b, SearchMode::Random { trials: 30 });
            spec.seed = seed;
            spec.filters.acd = true;
            let table = BestKnownTable::builtin();
            let first: Vec<_> = search(&spec, &table).unwrap().collect();
            let second: Vec<_> = search(&spec, &table).unwrap().collect();
            for h in &first {
                prop_assert_eq!(h.certificate.is_acd(), duality::hull_is_trivial(&h.code));
            }
            prop_assert_eq!(first, second);
        }
    }
}

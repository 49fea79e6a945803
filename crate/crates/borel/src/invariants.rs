//! Hilbert functions, reduction numbers, Eliahou-Kervaire Betti tables, a
//! Koszul-homology Betti oracle, and the f-index encoding of the minimal
//! generators of a strongly stable Artinian ideal.
//!
//! Betti tables here index the *ideal* `I`, so `beta[q][i] =
//! dim Tor_q(I, k)_i`; use [`BettiTable::quotient_table`] for the shifted
//! `R/I` indexing produced by Koszul homology.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::groebner::{buchberger, GroebnerBasis, Polynomial};
use crate::monomial::{Monomial, MonomialIdeal};

/// Default degree cutoff for Artinian detection; a loud failure beyond it.
pub const DEFAULT_DEGREE_BOUND: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantsError {
    #[error("quotient is not Artinian: Hilbert function positive through degree {degree_bound}")]
    NotArtinian { degree_bound: usize },
    #[error("ideal is not stable; the Eliahou-Kervaire formula does not apply")]
    NotStable,
    #[error("ideal is not strongly stable: the Borel move x{to_var}*({generator})/x{from_var} escapes it")]
    NotStronglyStable {
        generator: Monomial,
        from_var: usize,
        to_var: usize,
    },
    #[error("degree bound {given} too small: Koszul homology needs socle degree + n = {required}")]
    DegreeBoundTooSmall { required: usize, given: usize },
    #[error("no pure power of x{var} in the ideal")]
    NoPurePower { var: usize },
    #[error("generator {index} is not homogeneous")]
    NotHomogeneous { index: usize },
    #[error("Betti table is inconsistent: {0}")]
    InconsistentBetti(String),
    #[error("invalid f-index: {0}")]
    InvalidFIndex(String),
}

/// `binom(a, b)` as an exact signed integer, zero outside `0 <= b <= a`.
pub(crate) fn binom(a: i64, b: i64) -> i128 {
    if b < 0 || a < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut result: i128 = 1;
    for k in 0..b {
        result = result * (a - k) as i128 / (k + 1) as i128;
    }
    result
}

/// Number of degree-`d` monomials in `n` variables.
pub fn binomial_count(n: usize, d: u32) -> u64 {
    binom(n as i64 - 1 + d as i64, d as i64) as u64
}

/// The Hilbert function of an Artinian quotient: `values[d] = dim (R/I)_d`
/// with the last stored value positive and zero beyond. The zero algebra is
/// the empty sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct HilbertFunction {
    values: Vec<u64>,
}

impl HilbertFunction {
    /// Normalizes by trimming trailing zeros.
    pub fn new(mut values: Vec<u64>) -> Self {
        while values.last() == Some(&0) {
            values.pop();
        }
        HilbertFunction { values }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// `H(d)`, zero beyond the socle degree.
    pub fn value(&self, d: usize) -> u64 {
        self.values.get(d).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The largest degree with a nonzero value. Panics on the zero algebra.
    pub fn socle_degree(&self) -> usize {
        assert!(!self.values.is_empty(), "zero algebra has no socle degree");
        self.values.len() - 1
    }

    /// `H(i) == H(t - i)` for all `i`.
    pub fn is_symmetric(&self) -> bool {
        let k = self.values.len();
        (0..k / 2).all(|i| self.values[i] == self.values[k - 1 - i])
    }

    pub fn total_dimension(&self) -> u64 {
        self.values.iter().sum()
    }
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Hilbert function of `R/I` by counting standard monomials degree by
/// degree, with the default Artinian cutoff.
pub fn hilbert_function(ideal: &MonomialIdeal) -> Result<HilbertFunction, InvariantsError> {
    hilbert_function_with_bound(ideal, DEFAULT_DEGREE_BOUND)
}

pub fn hilbert_function_with_bound(
    ideal: &MonomialIdeal,
    degree_bound: usize,
) -> Result<HilbertFunction, InvariantsError> {
    let mut values = Vec::new();
    for d in 0..=degree_bound {
        let count = ideal.standard_monomials(d as u32).len() as u64;
        if count == 0 {
            return Ok(HilbertFunction::new(values));
        }
        values.push(count);
    }
    Err(InvariantsError::NotArtinian { degree_bound })
}

/// Graded Betti numbers `beta[q][i]` of an ideal; only nonzero entries are
/// stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    entries: BTreeMap<(u32, u32), u64>,
}

impl BettiTable {
    pub fn new(n: usize) -> Self {
        BettiTable {
            n,
            entries: BTreeMap::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn get(&self, q: u32, i: u32) -> u64 {
        self.entries.get(&(q, i)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, q: u32, i: u32, value: u64) {
        if value == 0 {
            self.entries.remove(&(q, i));
        } else {
            self.entries.insert((q, i), value);
        }
    }

    pub fn add(&mut self, q: u32, i: u32, value: u64) {
        if value > 0 {
            *self.entries.entry((q, i)).or_insert(0) += value;
        }
    }

    /// Nonzero entries, ordered by `(q, i)`.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, u64)> + '_ {
        self.entries.iter().map(|(&(q, i), &v)| (q, i, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest internal degree `i` with a nonzero entry.
    pub fn max_internal_degree(&self) -> Option<u32> {
        self.entries.keys().map(|&(_, i)| i).max()
    }

    /// Total Betti number of homological degree `q`.
    pub fn total(&self, q: u32) -> u64 {
        self.entries
            .iter()
            .filter(|(&(p, _), _)| p == q)
            .map(|(_, &v)| v)
            .sum()
    }

    /// The same data in `R/I` indexing: `beta[0][0] = 1` and homological
    /// degrees shifted up by one.
    pub fn quotient_table(&self) -> BettiTable {
        let mut out = BettiTable::new(self.n);
        out.set(0, 0, 1);
        for (q, i, v) in self.entries() {
            out.set(q + 1, i, v);
        }
        out
    }

    /// Recovers the Hilbert function of `R/I` from the alternating-sum
    /// formula over a free resolution of `I` with these Betti numbers.
    pub fn hilbert_function(&self) -> Result<HilbertFunction, InvariantsError> {
        let n = self.n as i64;
        let horizon = self.max_internal_degree().unwrap_or(0) as i64 + n;
        let mut values: Vec<u64> = Vec::new();
        let mut first_zero: Option<i64> = None;
        for d in 0..=horizon {
            // dim I_d as an alternating sum over the resolution.
            let mut ideal_dim: i128 = 0;
            for (q, i, v) in self.entries() {
                let sign = if q % 2 == 0 { 1 } else { -1 };
                ideal_dim += sign * v as i128 * binom(n - 1 + d - i as i64, n - 1);
            }
            let h = binom(n - 1 + d, n - 1) - ideal_dim;
            if h < 0 {
                return Err(InvariantsError::InconsistentBetti(format!(
                    "negative Hilbert value {h} in degree {d}"
                )));
            }
            match (h == 0, first_zero) {
                (true, None) => first_zero = Some(d),
                (false, Some(z)) => {
                    return Err(InvariantsError::InconsistentBetti(format!(
                        "Hilbert value vanishes at degree {z} but is positive at {d}"
                    )))
                }
                _ => {}
            }
            values.push(h as u64);
        }
        if first_zero.is_none() {
            return Err(InvariantsError::NotArtinian {
                degree_bound: horizon as usize,
            });
        }
        Ok(HilbertFunction::new(values))
    }

    /// Macaulay-style text diagram: one row per strand `d = i - q`.
    pub fn diagram(&self) -> String {
        if self.entries.is_empty() {
            return "empty Betti table\n".to_string();
        }
        let max_q = self.entries.keys().map(|&(q, _)| q).max().unwrap();
        let min_d = self.entries.keys().map(|&(q, i)| i - q).min().unwrap();
        let max_d = self.entries.keys().map(|&(q, i)| i - q).max().unwrap();
        let width = 7;
        let mut out = String::new();
        out.push_str(&" ".repeat(width));
        for q in 0..=max_q {
            out.push_str(&format!("{q:>width$}"));
        }
        out.push('\n');
        out.push_str(&format!("{:>width$}", "total:"));
        for q in 0..=max_q {
            out.push_str(&format!("{:>width$}", self.total(q)));
        }
        out.push('\n');
        for d in min_d..=max_d {
            out.push_str(&format!("{:>width$}", format!("{d}:")));
            for q in 0..=max_q {
                let v = self.get(q, q + d);
                if v == 0 {
                    out.push_str(&format!("{:>width$}", "."));
                } else {
                    out.push_str(&format!("{v:>width$}"));
                }
            }
            out.push('\n');
        }
        out
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut state = serializer.serialize_struct("BettiTable", 2)?;
        state.serialize_field("n", &self.n)?;
        let map: BTreeMap<String, u64> = self
            .entries
            .iter()
            .map(|(&(q, i), &v)| (format!("{q},{i}"), v))
            .collect();
        state.serialize_field("entries", &map)?;
        state.end()
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            entries: BTreeMap<String, u64>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let mut table = BettiTable::new(raw.n);
        for (key, value) in raw.entries {
            let mut parts = key.splitn(2, ',');
            let parse = |s: Option<&str>| {
                s.and_then(|s| s.trim().parse::<u32>().ok())
                    .ok_or_else(|| serde::de::Error::custom(format!("bad Betti key '{key}'")))
            };
            let q = parse(parts.next())?;
            let i = parse(parts.next())?;
            table.set(q, i, value);
        }
        Ok(table)
    }
}

/// Eliahou-Kervaire Betti numbers of a stable monomial ideal:
/// `beta[q][i] = sum over degree-(i-q) generators T of binom(max(T)-1, q)`.
pub fn ek_betti(ideal: &MonomialIdeal) -> Result<BettiTable, InvariantsError> {
    if !ideal.is_stable() {
        return Err(InvariantsError::NotStable);
    }
    Ok(ek_betti_raw(ideal))
}

/// The Eliahou-Kervaire formula applied mechanically, with no stability
/// check; the result equals the true Betti table only for stable ideals.
pub fn ek_betti_raw(ideal: &MonomialIdeal) -> BettiTable {
    let mut table = BettiTable::new(ideal.num_vars());
    for g in ideal.generators() {
        let d = g.degree();
        let mv = g.max_var();
        if mv == 0 {
            // The unit ideal is R itself, free on one degree-0 generator.
            table.add(0, 0, 1);
            continue;
        }
        for q in 0..mv as u32 {
            table.add(q, d + q, binom(mv as i64 - 1, q as i64) as u64);
        }
    }
    table
}

/// A basis-indexed view of the quotient `R/I` good enough to run the Koszul
/// differential: monomial ideals multiply standard monomials directly, while
/// polynomial ideals reduce against a Groebner basis.
enum QuotientRing<'a> {
    Monomial(&'a MonomialIdeal),
    Reduced {
        basis: &'a GroebnerBasis,
        initial: MonomialIdeal,
    },
}

impl QuotientRing<'_> {
    fn initial(&self) -> &MonomialIdeal {
        match self {
            QuotientRing::Monomial(i) => i,
            QuotientRing::Reduced { initial, .. } => initial,
        }
    }

    /// Coordinates of `x_var * m` in the standard basis of the next degree.
    fn var_action(
        &self,
        m: &Monomial,
        var: usize,
        target: &BTreeMap<Monomial, usize>,
    ) -> Vec<(usize, BigRational)> {
        let product = m.mul_var(var);
        match self {
            QuotientRing::Monomial(ideal) => {
                if ideal.contains(&product) {
                    Vec::new()
                } else {
                    vec![(target[&product], BigRational::one())]
                }
            }
            QuotientRing::Reduced { basis, .. } => {
                let nf = basis.normal_form(&Polynomial::monomial(product));
                nf.terms()
                    .map(|(mono, coeff)| (target[mono], coeff.clone()))
                    .collect()
            }
        }
    }
}

/// Rank of a dense rational matrix by Gaussian elimination.
fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let pivot = match (rank..nrows).find(|&r| !rows[r][col].is_zero()) {
            Some(p) => p,
            None => continue,
        };
        rows.swap(rank, pivot);
        let (pivot_row, rest) = rows.split_at_mut(rank + 1);
        let pivot_row = &pivot_row[rank];
        for row in rest {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot_row[col];
            for c in col..ncols {
                let sub = &factor * &pivot_row[c];
                row[c] -= sub;
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Koszul-homology Betti numbers of a monomial ideal: an oracle for
/// `Tor_q(I, k)_i` independent of the Eliahou-Kervaire formula, computed as
/// homology of the Koszul complex on `x1..xn` tensored with `R/I`, strand by
/// strand, then shifted from `R/I` to ideal indexing.
pub fn koszul_betti(
    ideal: &MonomialIdeal,
    degree_bound: usize,
) -> Result<BettiTable, InvariantsError> {
    koszul_betti_impl(QuotientRing::Monomial(ideal), degree_bound)
}

/// Koszul-homology Betti numbers of the ideal generated by homogeneous
/// polynomials, with multiplications reduced against a Groebner basis.
pub fn koszul_betti_of_polynomials(
    gens: &[Polynomial],
    degree_bound: usize,
) -> Result<BettiTable, InvariantsError> {
    for (index, f) in gens.iter().enumerate() {
        if !f.is_homogeneous() {
            return Err(InvariantsError::NotHomogeneous { index });
        }
    }
    let basis = buchberger(gens);
    let initial = basis.initial_ideal();
    koszul_betti_impl(
        QuotientRing::Reduced {
            basis: &basis,
            initial,
        },
        degree_bound,
    )
}

fn koszul_betti_impl(
    ring: QuotientRing<'_>,
    degree_bound: usize,
) -> Result<BettiTable, InvariantsError> {
    let ideal = ring.initial();
    let n = ideal.num_vars();
    if !ideal.is_artinian() {
        return Err(InvariantsError::NotArtinian {
            degree_bound: DEFAULT_DEGREE_BOUND,
        });
    }
    let hilbert = hilbert_function(ideal)?;
    let socle = if hilbert.is_empty() {
        0
    } else {
        hilbert.socle_degree()
    };
    let required = socle + n;
    if degree_bound < required {
        return Err(InvariantsError::DegreeBoundTooSmall {
            required,
            given: degree_bound,
        });
    }

    // Subsets of {1..n} of each size, in deterministic order.
    let mut subsets: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n + 1];
    for mask in 0u32..(1 << n) {
        let vars: Vec<usize> = (1..=n).filter(|v| mask & (1 << (v - 1)) != 0).collect();
        subsets[vars.len()].push(vars);
    }
    for q in &mut subsets {
        q.sort();
    }

    let mut table = BettiTable::new(n);
    // Tor_q(R/I, k)_d vanishes beyond d = socle + q, so this horizon is safe.
    for d in 0..=required as u32 {
        // Strand bases: K_q in internal degree d is spanned by e_S (x) m with
        // |S| = q and m standard of degree d - q.
        let mut bases: Vec<Vec<(usize, Monomial)>> = Vec::with_capacity(n + 2);
        let mut index_of: Vec<BTreeMap<Monomial, usize>> = Vec::with_capacity(n + 2);
        for q in 0..=n {
            if q as u32 > d {
                bases.push(Vec::new());
                index_of.push(BTreeMap::new());
                continue;
            }
            let std = ideal.standard_monomials(d - q as u32);
            let lookup: BTreeMap<Monomial, usize> =
                std.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
            let mut strand = Vec::with_capacity(subsets[q].len() * std.len());
            for (si, _) in subsets[q].iter().enumerate() {
                for m in &std {
                    strand.push((si, m.clone()));
                }
            }
            bases.push(strand);
            index_of.push(lookup);
        }

        // rank of the differential K_q -> K_{q-1} in this strand
        let mut ranks = vec![0usize; n + 2];
        for q in 1..=n {
            let cols = &bases[q];
            let rows = &bases[q - 1];
            if cols.is_empty() || rows.is_empty() {
                continue;
            }
            let row_count = subsets[q - 1].len();
            let std_count = index_of[q - 1].len();
            let row_index = |si: usize, mi: usize| si * std_count + mi;
            let mut matrix = vec![vec![BigRational::zero(); cols.len()]; rows.len()];
            let subset_pos: BTreeMap<&Vec<usize>, usize> = subsets[q - 1]
                .iter()
                .enumerate()
                .map(|(i, s)| (s, i))
                .collect();
            debug_assert_eq!(rows.len(), row_count * std_count);
            for (ci, (si, m)) in cols.iter().enumerate() {
                let vars = &subsets[q][*si];
                for (pos, &v) in vars.iter().enumerate() {
                    let reduced: Vec<usize> =
                        vars.iter().copied().filter(|&u| u != v).collect();
                    let target_subset = subset_pos[&reduced];
                    let sign = if pos % 2 == 0 {
                        BigRational::one()
                    } else {
                        -BigRational::one()
                    };
                    for (mi, coeff) in ring.var_action(m, v, &index_of[q - 1]) {
                        matrix[row_index(target_subset, mi)][ci] += &sign * coeff;
                    }
                }
            }
            ranks[q] = rational_rank(matrix);
        }

        for q in 0..=n {
            let dim = bases[q].len();
            let homology = dim - ranks[q] - ranks[q + 1];
            if homology > 0 && q >= 1 {
                // Shift: Tor_q(I)_d = Tor_{q+1}(R/I)_d.
                table.add(q as u32 - 1, d, homology as u64);
            }
        }
    }
    Ok(table)
}

/// The i-th reduction number read off a strongly stable ideal:
/// `min { t : x_{n-i}^{t+1} in I }`.
pub fn reduction_number(ideal: &MonomialIdeal, i: usize) -> Result<u32, InvariantsError> {
    let n = ideal.num_vars();
    assert!(i < n, "reduction index {i} out of 0..{n}");
    let var = n - i;
    let power = ideal
        .generators()
        .iter()
        .filter(|g| g.max_var() <= var && g.exponents()[..var - 1].iter().all(|&e| e == 0))
        .map(|g| g.exponent_of(var))
        .min();
    match power {
        Some(p) => Ok(p.saturating_sub(1)),
        None => Err(InvariantsError::NoPurePower { var }),
    }
}

/// The i-th reduction number computed from the definition: adjoin `i` random
/// linear forms and find the first vanishing degree of the quotient. An
/// oracle for [`reduction_number`] via the invariance of reduction numbers
/// under passage to the generic initial ideal.
pub fn reduction_number_direct(
    gens: &[Polynomial],
    i: usize,
    seed: u64,
    entry_bound: i64,
) -> Result<u32, InvariantsError> {
    let n = gens
        .first()
        .expect("reduction_number_direct needs generators")
        .num_vars();
    for (index, f) in gens.iter().enumerate() {
        if !f.is_homogeneous() {
            return Err(InvariantsError::NotHomogeneous { index });
        }
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut extended = gens.to_vec();
    for _ in 0..i {
        let form = loop {
            let candidate = Polynomial::from_terms(
                n,
                (1..=n).map(|v| {
                    (
                        Monomial::var(v, n),
                        BigRational::from(BigInt::from(rng.gen_range(-entry_bound..=entry_bound))),
                    )
                }),
            );
            if !candidate.is_zero() {
                break candidate;
            }
        };
        extended.push(form);
    }
    let initial = buchberger(&extended).initial_ideal();
    for d in 0..=DEFAULT_DEGREE_BOUND {
        if initial.standard_monomials(d as u32).is_empty() {
            return Ok((d as u32).saturating_sub(1));
        }
    }
    Err(InvariantsError::NotArtinian {
        degree_bound: DEFAULT_DEGREE_BOUND,
    })
}

/// Number of minimal generators of top variable `xn` and the given degree.
pub fn max_n_generator_count(ideal: &MonomialIdeal, d: u32) -> usize {
    let n = ideal.num_vars();
    ideal
        .generators()
        .iter()
        .filter(|g| g.max_var() == n && g.degree() == d)
        .count()
}

/// The f-index of a strongly stable Artinian ideal: `f1` is the least pure
/// power of `x1` inside, and for each tuple `alpha` in `J_{i-1}` the value
/// `f_i(alpha)` is the least `t` with `x^alpha * x_i^t` a member. Together
/// with the index sets `J_i` this encodes the minimal generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FIndex {
    n: usize,
    f1: u32,
    /// `levels[k]` is the map `f_{k+2}` on `J_{k+1}`.
    levels: Vec<BTreeMap<Vec<u32>, u32>>,
}

impl FIndex {
    /// Assembles an f-index from raw parts and validates the structural
    /// invariants (domains match the J-sets, positivity, monotonicity).
    pub fn from_parts(
        n: usize,
        f1: u32,
        levels: Vec<BTreeMap<Vec<u32>, u32>>,
    ) -> Result<Self, InvariantsError> {
        let candidate = FIndex { n, f1, levels };
        candidate.validate()?;
        Ok(candidate)
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn f1(&self) -> u32 {
        self.f1
    }

    /// `f_i(alpha)` for `1 <= i <= n`; `alpha` must have length `i - 1`.
    /// Returns `None` when `alpha` lies outside `J_{i-1}`.
    pub fn f(&self, i: usize, alpha: &[u32]) -> Option<u32> {
        assert!(i >= 1 && i <= self.n, "level {i} out of range");
        assert_eq!(alpha.len(), i - 1, "tuple length must be i - 1");
        if i == 1 {
            return Some(self.f1);
        }
        self.levels[i - 2].get(alpha).copied()
    }

    /// The map `f_i` for `2 <= i <= n`, keyed by tuples of `J_{i-1}` in
    /// ascending lexicographic order.
    pub fn level(&self, i: usize) -> &BTreeMap<Vec<u32>, u32> {
        assert!(i >= 2 && i <= self.n, "level {i} out of range");
        &self.levels[i - 2]
    }

    /// The index set `J_i` for `1 <= i <= n-1`, in ascending lexicographic
    /// order.
    pub fn j_set(&self, i: usize) -> Vec<Vec<u32>> {
        assert!(i >= 1 && i < self.n, "J_{i} undefined for this codimension");
        if i == 1 {
            return (0..self.f1).map(|a| vec![a]).collect();
        }
        self.levels[i - 2]
            .iter()
            .flat_map(|(alpha, &f)| {
                (0..f).map(move |a| {
                    let mut tuple = alpha.clone();
                    tuple.push(a);
                    tuple
                })
            })
            .collect()
    }

    /// Socle degree of the quotient: `f_n(0,...,0) - 1`.
    pub fn socle_degree(&self) -> u32 {
        if self.n == 1 {
            self.f1 - 1
        } else {
            self.levels[self.n - 2][&vec![0; self.n - 1]] - 1
        }
    }

    /// The generator set encoded by the f-index: `x1^f1` together with
    /// `x^alpha * x_i^{f_i(alpha)}` over all levels. Inverse of [`f_index`].
    pub fn generators(&self) -> MonomialIdeal {
        let n = self.n;
        let mut gens = vec![Monomial::var_power(1, self.f1, n)];
        for (k, level) in self.levels.iter().enumerate() {
            let i = k + 2;
            for (alpha, &f) in level {
                let mut exps = vec![0u32; n];
                exps[..alpha.len()].copy_from_slice(alpha);
                exps[i - 1] = f;
                gens.push(Monomial::new(exps));
            }
        }
        MonomialIdeal::new(n, gens)
    }

    /// Checks the defining invariants: each level's domain is exactly the
    /// J-set below it, all values are positive, values rise by at least one
    /// when any coordinate drops by one, moving mass to a later coordinate
    /// never lowers the value, and `|alpha| < f_i(0,...,0)` on every J-set.
    pub fn validate(&self) -> Result<(), InvariantsError> {
        if self.f1 == 0 {
            return Err(InvariantsError::InvalidFIndex("f1 must be positive".into()));
        }
        if self.levels.len() != self.n.saturating_sub(1) {
            return Err(InvariantsError::InvalidFIndex(format!(
                "expected {} levels, found {}",
                self.n.saturating_sub(1),
                self.levels.len()
            )));
        }
        for (k, level) in self.levels.iter().enumerate() {
            let i = k + 2;
            let expected = self.j_set(i - 1);
            let domain: Vec<Vec<u32>> = level.keys().cloned().collect();
            if domain != expected {
                return Err(InvariantsError::InvalidFIndex(format!(
                    "domain of f_{i} does not match J_{}",
                    i - 1
                )));
            }
            for (alpha, &value) in level {
                if value == 0 {
                    return Err(InvariantsError::InvalidFIndex(format!(
                        "f_{i}{alpha:?} must be positive"
                    )));
                }
                // Dropping one coordinate raises the value by at least one.
                for j in 0..alpha.len() {
                    if alpha[j] == 0 {
                        continue;
                    }
                    let mut lowered = alpha.clone();
                    lowered[j] -= 1;
                    let below = level.get(&lowered).copied().ok_or_else(|| {
                        InvariantsError::InvalidFIndex(format!(
                            "J-set not downward closed at {alpha:?}"
                        ))
                    })?;
                    if value > below.saturating_sub(1) {
                        return Err(InvariantsError::InvalidFIndex(format!(
                            "f_{i}{alpha:?} = {value} exceeds f_{i}{lowered:?} - 1 = {}",
                            below.saturating_sub(1)
                        )));
                    }
                    // Moving that unit of mass to a later coordinate must not
                    // lower the value.
                    for t in j + 1..alpha.len() {
                        let mut moved = lowered.clone();
                        moved[t] += 1;
                        if let Some(other) = level.get(&moved) {
                            if value > *other {
                                return Err(InvariantsError::InvalidFIndex(format!(
                                    "f_{i}{alpha:?} = {value} exceeds f_{i}{moved:?} = {other}"
                                )));
                            }
                        } else {
                            return Err(InvariantsError::InvalidFIndex(format!(
                                "Borel move of {alpha:?} leaves J_{}",
                                i - 1
                            )));
                        }
                    }
                }
            }
            // |alpha| <= f_{i-1}(0,...,0) - 1 over the domain J_{i-1}, for
            // i - 1 >= 2 (J_1 satisfies its bound by construction).
            if i >= 3 {
                let zeros_below = vec![0u32; i - 2];
                let bound = self.levels[k - 1][&zeros_below];
                for alpha in level.keys() {
                    let weight: u32 = alpha.iter().sum();
                    if weight + 1 > bound {
                        return Err(InvariantsError::InvalidFIndex(format!(
                            "|{alpha:?}| = {weight} violates the f_{}(0,...,0) - 1 bound",
                            i - 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// The f-index of a strongly stable Artinian monomial ideal.
pub fn f_index(ideal: &MonomialIdeal) -> Result<FIndex, InvariantsError> {
    if let Some(v) = ideal.strong_stability_violation() {
        return Err(InvariantsError::NotStronglyStable {
            generator: v.generator,
            from_var: v.from_var,
            to_var: v.to_var,
        });
    }
    f_index_raw(ideal)
}

/// The f-index scan applied to any Artinian monomial ideal, with no
/// stability check. For non-Borel-fixed ideals the scan still records the
/// least pure-power thresholds, but the minimal-generator correspondence of
/// the strongly stable case is not guaranteed.
pub fn f_index_raw(ideal: &MonomialIdeal) -> Result<FIndex, InvariantsError> {
    let n = ideal.num_vars();
    if !ideal.is_artinian() {
        return Err(InvariantsError::NotArtinian {
            degree_bound: DEFAULT_DEGREE_BOUND,
        });
    }
    let least_power = |prefix: &[u32], var: usize| -> u32 {
        let mut exps = vec![0u32; n];
        exps[..prefix.len()].copy_from_slice(prefix);
        (0..)
            .find(|&t| {
                exps[var - 1] = t;
                ideal.contains(&Monomial::new(exps.iter().copied()))
            })
            .expect("Artinian ideal bounds every pure-power scan")
    };

    let f1 = least_power(&[], 1);
    let mut levels: Vec<BTreeMap<Vec<u32>, u32>> = Vec::new();
    let mut j_prev: Vec<Vec<u32>> = (0..f1).map(|a| vec![a]).collect();
    for i in 2..=n {
        let mut level = BTreeMap::new();
        for alpha in &j_prev {
            level.insert(alpha.clone(), least_power(alpha, i));
        }
        if i < n {
            j_prev = level
                .iter()
                .flat_map(|(alpha, &f)| {
                    (0..f).map(move |a| {
                        let mut tuple = alpha.clone();
                        tuple.push(a);
                        tuple
                    })
                })
                .collect();
        }
        levels.push(level);
    }
    Ok(FIndex { n, f1, levels })
}

//! Exact-rational sparse polynomials, reduced Groebner bases under graded
//! revlex, generic coordinate changes, and the generic initial ideal.
//!
//! The gin computation draws random integer matrices, transforms the
//! generators, and keeps the common initial ideal across independent trials;
//! disagreement between trials is surfaced as an error instead of silently
//! accepting one candidate.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use thiserror::Error;

use crate::monomial::{Monomial, MonomialIdeal};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GinError {
    #[error("generator {index} is not homogeneous")]
    NotHomogeneous { index: usize },
    #[error("gin requires at least 2 trials, got {trials}")]
    TooFewTrials { trials: u32 },
    #[error(
        "trial {trial} produced a different initial ideal; raise the trial \
         count or the matrix entry bound"
    )]
    TrialsDisagree { trial: u32 },
    #[error("agreeing trials produced a non-strongly-stable ideal (internal error)")]
    StabilityCheckFailed,
    #[error("coordinate change matrix is singular")]
    SingularMatrix,
}

/// A sparse polynomial over the rationals with exact arbitrary-precision
/// coefficients. Terms are kept in a map ordered by graded revlex, so the
/// leading term is the last entry.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: BigRational) -> Self {
        let mut p = Polynomial::zero(n);
        if !c.is_zero() {
            p.terms.insert(Monomial::unit(n), c);
        }
        p
    }

    /// The monomial `m` with coefficient one.
    pub fn monomial(m: Monomial) -> Self {
        let n = m.num_vars();
        let mut p = Polynomial::zero(n);
        p.terms.insert(m, BigRational::one());
        p
    }

    /// Builds a polynomial from term pairs, merging duplicates and dropping
    /// zero coefficients.
    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (Monomial, BigRational)>,
    ) -> Self {
        let mut p = Polynomial::zero(n);
        for (m, c) in terms {
            p.add_term(&m, &c);
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending revlex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.iter().next_back().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.terms.iter().next_back().map(|(_, c)| c)
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&BigRational> {
        self.terms.get(m)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Adds `c * m` in place.
    pub fn add_term(&mut self, m: &Monomial, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        assert_eq!(m.num_vars(), self.n, "term in wrong ring");
        match self.terms.get_mut(m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(m);
                }
            }
            None => {
                self.terms.insert(m.clone(), c.clone());
            }
        }
    }

    /// Adds `c * m * g` in place; the workhorse of polynomial reduction.
    pub fn add_scaled_mul(&mut self, c: &BigRational, m: &Monomial, g: &Polynomial) {
        assert_eq!(self.n, g.n);
        for (gm, gc) in &g.terms {
            self.add_term(&m.mul(gm), &(c * gc));
        }
    }

    pub fn scale(&mut self, c: &BigRational) {
        if c.is_zero() {
            self.terms.clear();
            return;
        }
        for coeff in self.terms.values_mut() {
            *coeff *= c;
        }
    }

    /// Divides by the leading coefficient, making the polynomial monic.
    pub fn make_monic(&mut self) {
        if let Some(lc) = self.leading_coefficient().cloned() {
            if !lc.is_one() {
                self.scale(&lc.recip());
            }
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.n, other.n);
        let mut out = Polynomial::zero(self.n);
        for (m, c) in &self.terms {
            out.add_scaled_mul(c, m, other);
        }
        out
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m, &(-c.clone()));
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_unit() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A reduced Groebner basis under graded revlex: every element is monic and
/// no term of any element is divisible by the leading monomial of another.
#[derive(Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    n: usize,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn num_vars(&self) -> usize {
        self.n
    }

    /// Basis elements, sorted by ascending leading monomial.
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    /// Total reduction of `f`: the unique remainder none of whose terms is
    /// divisible by a leading monomial of the basis. Linear over the
    /// rationals.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form_against(f, &self.elements)
    }

    /// Ideal membership via vanishing normal form.
    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// The initial ideal: minimal generators among the leading monomials.
    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(
            self.n,
            self.elements
                .iter()
                .filter_map(|f| f.leading_monomial().cloned()),
        )
    }
}

/// Reduces `f` against `reducers` (all monic), eliminating leading terms
/// first and shunting irreducible terms into the remainder.
fn normal_form_against(f: &Polynomial, reducers: &[Polynomial]) -> Polynomial {
    let n = f.num_vars();
    let mut work = f.clone();
    let mut remainder = Polynomial::zero(n);
    'outer: while let Some(lm) = work.leading_monomial().cloned() {
        let lc = work.leading_coefficient().unwrap().clone();
        for g in reducers {
            let glm = g.leading_monomial().expect("zero reducer");
            if glm.divides(&lm) {
                let q = lm.checked_div(glm).unwrap();
                work.add_scaled_mul(&-lc.clone(), &q, g);
                continue 'outer;
            }
        }
        remainder.add_term(&lm, &lc);
        work.add_term(&lm, &-lc);
    }
    remainder
}

/// The S-polynomial of two monic polynomials.
fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let fl = f.leading_monomial().expect("zero polynomial");
    let gl = g.leading_monomial().expect("zero polynomial");
    let lcm = fl.lcm(gl);
    let mut s = Polynomial::zero(f.num_vars());
    s.add_scaled_mul(&BigRational::one(), &lcm.checked_div(fl).unwrap(), f);
    s.add_scaled_mul(&-BigRational::one(), &lcm.checked_div(gl).unwrap(), g);
    s
}

/// Pair queue key implementing the normal selection strategy: lowest lcm
/// degree first, ties broken by revlex on the lcm, then by index.
fn pair_key(basis: &[Polynomial], i: usize, j: usize) -> (u32, Monomial, usize, usize) {
    let lcm = basis[i]
        .leading_monomial()
        .unwrap()
        .lcm(basis[j].leading_monomial().unwrap());
    (lcm.degree(), lcm, i, j)
}

/// Buchberger's algorithm: the reduced Groebner basis of the ideal generated
/// by `gens` under graded revlex. Deterministic for a fixed input order.
pub fn buchberger(gens: &[Polynomial]) -> GroebnerBasis {
    let n = gens
        .first()
        .map(Polynomial::num_vars)
        .expect("buchberger needs at least one generator");
    let mut basis: Vec<Polynomial> = Vec::new();
    for f in gens {
        assert_eq!(f.num_vars(), n, "generators in mixed rings");
        if !f.is_zero() {
            let mut g = f.clone();
            g.make_monic();
            basis.push(g);
        }
    }
    if basis.is_empty() {
        return GroebnerBasis {
            n,
            elements: Vec::new(),
        };
    }

    let mut pending: BTreeSet<(u32, Monomial, usize, usize)> = BTreeSet::new();
    for j in 1..basis.len() {
        for i in 0..j {
            pending.insert(pair_key(&basis, i, j));
        }
    }

    while let Some(key) = pending.iter().next().cloned() {
        pending.remove(&key);
        let (_, lcm, i, j) = key;

        // Product criterion: coprime leading monomials reduce to zero.
        let product = basis[i]
            .leading_monomial()
            .unwrap()
            .mul(basis[j].leading_monomial().unwrap());
        if lcm == product {
            continue;
        }
        // Chain criterion: skip when some third leading monomial divides the
        // lcm and both companion pairs have already been handled.
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&lcm)
                && !pending.contains(&pair_key(&basis, i.min(k), i.max(k)))
                && !pending.contains(&pair_key(&basis, j.min(k), j.max(k)))
        });
        if chained {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j]);
        let mut r = normal_form_against(&s, &basis);
        if !r.is_zero() {
            r.make_monic();
            let new_index = basis.len();
            basis.push(r);
            for k in 0..new_index {
                pending.insert(pair_key(&basis, k, new_index));
            }
        }
    }

    // Minimalize: drop elements whose leading monomial is divisible by
    // another surviving leading monomial.
    basis.sort_by(|f, g| f.leading_monomial().unwrap().cmp(g.leading_monomial().unwrap()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for f in basis {
        let lm = f.leading_monomial().unwrap();
        if !minimal
            .iter()
            .any(|g| g.leading_monomial().unwrap().divides(lm))
        {
            minimal.push(f);
        }
    }

    // Tail-reduce each element against the others; leading monomials are
    // untouched, so one sweep yields the reduced basis.
    let snapshot = minimal.clone();
    for (idx, f) in minimal.iter_mut().enumerate() {
        let others: Vec<Polynomial> = snapshot
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != idx)
            .map(|(_, g)| g.clone())
            .collect();
        *f = normal_form_against(f, &others);
        f.make_monic();
    }

    GroebnerBasis {
        n,
        elements: minimal,
    }
}

/// An invertible integer change of coordinates `x_i -> sum_j m[i][j] x_j`.
#[derive(Clone, PartialEq, Eq)]
pub struct CoordinateChange {
    n: usize,
    matrix: Vec<Vec<i64>>,
}

impl CoordinateChange {
    /// Validates invertibility over the rationals.
    pub fn new(matrix: Vec<Vec<i64>>) -> Result<Self, GinError> {
        let n = matrix.len();
        assert!(matrix.iter().all(|row| row.len() == n), "matrix not square");
        if determinant(&matrix).is_zero() {
            return Err(GinError::SingularMatrix);
        }
        Ok(CoordinateChange { n, matrix })
    }

    pub fn identity(n: usize) -> Self {
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        CoordinateChange { n, matrix }
    }

    /// Draws entries uniformly from `[-entry_bound, entry_bound]`, resampling
    /// until the matrix is invertible.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, n: usize, entry_bound: i64) -> Self {
        assert!(entry_bound >= 1);
        loop {
            let matrix: Vec<Vec<i64>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| rng.gen_range(-entry_bound..=entry_bound))
                        .collect()
                })
                .collect();
            if !determinant(&matrix).is_zero() {
                return CoordinateChange { n, matrix };
            }
        }
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// Applies the substitution to one polynomial, expanding and normalizing.
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        self.apply_all(std::slice::from_ref(f)).pop().unwrap()
    }

    /// Applies the substitution to a family, sharing the power tables of the
    /// substituted linear forms across all generators.
    pub fn apply_all(&self, gens: &[Polynomial]) -> Vec<Polynomial> {
        let n = self.n;
        let mut max_pow = vec![0u32; n];
        for f in gens {
            assert_eq!(f.num_vars(), n, "polynomial in wrong ring");
            for (m, _) in f.terms() {
                for v in 0..n {
                    max_pow[v] = max_pow[v].max(m.exponents()[v]);
                }
            }
        }
        // powers[v][k] = (sum_j m[v][j] x_j)^k
        let powers: Vec<Vec<Polynomial>> = (0..n)
            .map(|v| {
                let linear = Polynomial::from_terms(
                    n,
                    (0..n).map(|j| {
                        (
                            Monomial::var(j + 1, n),
                            BigRational::from(BigInt::from(self.matrix[v][j])),
                        )
                    }),
                );
                let mut list = vec![Polynomial::constant(n, BigRational::one())];
                for k in 1..=max_pow[v] {
                    let next = list[(k - 1) as usize].mul(&linear);
                    list.push(next);
                }
                list
            })
            .collect();

        gens.iter()
            .map(|f| {
                let mut out = Polynomial::zero(n);
                for (m, c) in f.terms() {
                    let mut term = Polynomial::constant(n, c.clone());
                    for v in 0..n {
                        let e = m.exponents()[v];
                        if e > 0 {
                            term = term.mul(&powers[v][e as usize]);
                        }
                    }
                    out = out.add(&term);
                }
                out
            })
            .collect()
    }
}

impl fmt::Debug for CoordinateChange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoordinateChange({:?})", self.matrix)
    }
}

fn determinant(matrix: &[Vec<i64>]) -> BigRational {
    let n = matrix.len();
    let mut m: Vec<Vec<BigRational>> = matrix
        .iter()
        .map(|row| {
            row.iter()
                .map(|&e| BigRational::from(BigInt::from(e)))
                .collect()
        })
        .collect();
    let mut det = BigRational::one();
    for col in 0..n {
        let pivot = match (col..n).find(|&r| !m[r][col].is_zero()) {
            Some(p) => p,
            None => return BigRational::zero(),
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col].clone();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &m[col][col];
            for c in col..n {
                let sub = &factor * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}

/// Options for the gin computation. The random number generator is a seeded
/// ChaCha20 stream, so a fixed seed replays bit-identically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GinOptions {
    pub trials: u32,
    pub entry_bound: i64,
    pub seed: u64,
}

impl Default for GinOptions {
    fn default() -> Self {
        GinOptions {
            trials: 3,
            entry_bound: 100,
            seed: 0,
        }
    }
}

/// The generic initial ideal of the homogeneous ideal generated by `gens`
/// under graded revlex.
///
/// Draws `trials` independent random coordinate changes, computes the initial
/// ideal of each transformed ideal, and requires all trials to agree; the
/// common value is additionally checked to be strongly stable. Matrices that
/// happen to land outside the generic locus surface as
/// [`GinError::TrialsDisagree`].
pub fn gin(gens: &[Polynomial], options: &GinOptions) -> Result<MonomialIdeal, GinError> {
    if options.trials < 2 {
        return Err(GinError::TooFewTrials {
            trials: options.trials,
        });
    }
    let nonzero: Vec<Polynomial> = gens.iter().filter(|f| !f.is_zero()).cloned().collect();
    let n = match nonzero.first() {
        Some(f) => f.num_vars(),
        None => {
            let n = gens.first().map(Polynomial::num_vars).unwrap_or(0);
            return Ok(MonomialIdeal::zero(n));
        }
    };
    for (index, f) in gens.iter().enumerate() {
        if !f.is_homogeneous() {
            return Err(GinError::NotHomogeneous { index });
        }
    }

    let mut rng = ChaCha20Rng::seed_from_u64(options.seed);
    let mut agreed: Option<MonomialIdeal> = None;
    for trial in 0..options.trials {
        let change = CoordinateChange::random(&mut rng, n, options.entry_bound);
        let transformed = change.apply_all(&nonzero);
        let basis = buchberger(&transformed);
        let ini = basis.initial_ideal();
        match &agreed {
            None => agreed = Some(ini),
            Some(prev) => {
                if *prev != ini {
                    return Err(GinError::TrialsDisagree { trial });
                }
            }
        }
    }
    let ideal = agreed.expect("at least two trials ran");
    if !ideal.is_strongly_stable() {
        return Err(GinError::StabilityCheckFailed);
    }
    Ok(ideal)
}

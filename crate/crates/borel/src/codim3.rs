//! Reconstruction procedures special to three variables: the Betti table of
//! gin(I) from the Betti table of I under the weak Lefschetz property, the
//! generators of top variable at most 2, the full generic initial ideal from
//! Betti numbers under strong Lefschetz and from the Hilbert function alone
//! under strong Stanley, plus the cancellation-principle consistency check.
//!
//! Every reconstruction validates its own output (strong stability, f-index
//! invariants, matching Betti/Hilbert data) and fails loudly rather than
//! return an unvalidated ideal.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::invariants::{
    ek_betti, hilbert_function, BettiTable, FIndex, HilbertFunction, InvariantsError,
};
use crate::lefschetz::{betti_from_hf_wlp, r1_from_hf_wlp, ssp_criterion, ssp_flag};
use crate::monomial::{Monomial, MonomialIdeal};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReconstructError {
    #[error("reconstruction works in exactly 3 variables, got {0}")]
    WrongCodimension(usize),
    #[error("inconsistent input: {0}")]
    InconsistentInput(String),
    #[error("inconsistent Betti table: {0}")]
    InconsistentTable(String),
    #[error("multiplicities sum to {got}, expected {expected}")]
    SumMismatch { expected: usize, got: usize },
    #[error("reconstructed generator set is not strongly stable")]
    StabilityViolated,
    #[error("the strong Stanley property forces a symmetric Hilbert function")]
    AsymmetricHilbert,
}

impl From<InvariantsError> for ReconstructError {
    fn from(e: InvariantsError) -> Self {
        ReconstructError::InconsistentInput(e.to_string())
    }
}

/// The unique non-decreasing integer sequence with the given value
/// multiplicities.
pub fn recover_sequence(
    counts: &BTreeMap<u32, u64>,
    domain_size: usize,
) -> Result<Vec<u32>, ReconstructError> {
    let total: u64 = counts.values().sum();
    if total as usize != domain_size {
        return Err(ReconstructError::SumMismatch {
            expected: domain_size,
            got: total as usize,
        });
    }
    let mut sequence = Vec::with_capacity(domain_size);
    for (&value, &count) in counts {
        for _ in 0..count {
            sequence.push(value);
        }
    }
    Ok(sequence)
}

fn require_codim3(n: usize) -> Result<(), ReconstructError> {
    if n == 3 {
        Ok(())
    } else {
        Err(ReconstructError::WrongCodimension(n))
    }
}

fn socle_of(h: &HilbertFunction) -> Result<u32, ReconstructError> {
    if h.is_empty() {
        return Err(ReconstructError::InconsistentInput(
            "the zero algebra has no reconstruction".into(),
        ));
    }
    Ok(h.socle_degree() as u32)
}

/// The full Betti table of gin(I) from the Betti table of I and the Hilbert
/// function, assuming the weak Lefschetz property: the top row and everything
/// past shift `r1 + 2` come from the Hilbert function, and the remaining
/// generator/syzygy entries follow by downward induction through the
/// cancellation identities.
pub fn betti_gin_from_betti_i(
    b_i: &BettiTable,
    h: &HilbertFunction,
) -> Result<BettiTable, ReconstructError> {
    require_codim3(b_i.num_vars())?;
    let derived = b_i.hilbert_function()?;
    if derived != *h {
        return Err(ReconstructError::InconsistentInput(
            "Betti table and Hilbert function disagree".into(),
        ));
    }
    let r1 = r1_from_hf_wlp(h)
        .map_err(|e| ReconstructError::InconsistentInput(e.to_string()))?;
    socle_of(h)?;
    let a = b_i
        .entries()
        .filter(|&(q, _, _)| q == 0)
        .map(|(_, i, _)| i)
        .min()
        .ok_or_else(|| {
            ReconstructError::InconsistentInput("Betti table has no generator row".into())
        })?;

    let mut out = betti_from_hf_wlp(h, r1, 3);
    // Downward induction from the known beta[0][r1+2]: the generator and
    // first-syzygy entries below the top shift alternate through the
    // cancellation identities with the table of I.
    let mut beta0_above = out.get(0, r1 + 2);
    for i in (1..=r1 + 1).rev() {
        let b1 = beta0_above as i64 + b_i.get(1, i + 1) as i64 - b_i.get(0, i + 1) as i64;
        if b1 < 0 {
            return Err(ReconstructError::InconsistentTable(format!(
                "negative first-syzygy count at internal degree {}",
                i + 1
            )));
        }
        out.set(1, i + 1, b1 as u64);
        let b0 = b1 - out.get(2, i + 2) as i64 + i64::from(i == a);
        if b0 < 0 {
            return Err(ReconstructError::InconsistentTable(format!(
                "negative generator count at internal degree {i}"
            )));
        }
        out.set(0, i, b0 as u64);
        beta0_above = b0 as u64;
    }

    // The reconstructed table must resolve the same Hilbert function.
    if out.hilbert_function()? != *h {
        return Err(ReconstructError::InconsistentTable(
            "reconstructed table resolves a different Hilbert function".into(),
        ));
    }
    Ok(out)
}

/// The generators of gin(I) with top variable at most 2, recovered from its
/// Betti table: `f1` is the least generator degree, and the degrees
/// `j + f2(j)` form the unique non-decreasing sequence whose multiplicities
/// are the generator counts at degrees up to `r1`, with the balance sitting
/// at `r1 + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Max2Generators {
    pub f1: u32,
    /// `f2[j] = f_2(j)` for `0 <= j < f1`.
    pub f2: Vec<u32>,
}

impl Max2Generators {
    /// The monomial generators `x1^f1` and `x1^j * x2^{f2(j)}`.
    pub fn monomials(&self, n: usize) -> Vec<Monomial> {
        let mut gens = vec![Monomial::var_power(1, self.f1, n)];
        for (j, &f) in self.f2.iter().enumerate() {
            gens.push(Monomial::var_power(1, j as u32, n).mul_var_power(2, f));
        }
        gens
    }
}

pub fn reconstruct_max2_generators(
    b_gin: &BettiTable,
    r1: u32,
) -> Result<Max2Generators, ReconstructError> {
    require_codim3(b_gin.num_vars())?;
    let a = b_gin
        .entries()
        .filter(|&(q, _, _)| q == 0)
        .map(|(_, i, _)| i)
        .min()
        .ok_or_else(|| {
            ReconstructError::InconsistentTable("no generators in the Betti table".into())
        })?;
    if a > r1 + 1 {
        return Err(ReconstructError::InconsistentTable(format!(
            "least generator degree {a} exceeds r1 + 1 = {}",
            r1 + 1
        )));
    }

    // Degrees of the x2-generators: counted by beta[0][i] for i <= r1 (where
    // every generator has top variable at most 2), minus the one x1^a; the
    // remaining mass sits at degree r1 + 1.
    let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
    let mut assigned: u64 = 0;
    for i in a..=r1 {
        let mut c = b_gin.get(0, i);
        if i == a {
            if c == 0 {
                return Err(ReconstructError::InconsistentTable(
                    "least generator degree carries no generator".into(),
                ));
            }
            c -= 1;
        }
        counts.insert(i, c);
        assigned += c;
    }
    if assigned > a as u64 {
        return Err(ReconstructError::InconsistentTable(format!(
            "{assigned} short generators exceed the {a} available x2-slots"
        )));
    }
    counts.insert(r1 + 1, a as u64 - assigned);

    let degrees = recover_sequence(&counts, a as usize)?;
    // Non-decreasing degrees attach to j = a-1 down to 0.
    let mut f2 = vec![0u32; a as usize];
    for (k, &d) in degrees.iter().enumerate() {
        let j = a - 1 - k as u32;
        if d <= j {
            return Err(ReconstructError::InconsistentTable(format!(
                "degree {d} cannot carry a generator x1^{j} * x2^(..)"
            )));
        }
        f2[j as usize] = d - j;
    }
    if f2.first() != Some(&(r1 + 1)) {
        return Err(ReconstructError::InconsistentTable(format!(
            "f2(0) = {:?} must equal r1 + 1 = {}",
            f2.first(),
            r1 + 1
        )));
    }
    Ok(Max2Generators { f1: a, f2 })
}

/// Full reconstruction of gin(I) from the Betti table and Hilbert function of
/// I, assuming the strong Lefschetz property. The top-variable generator
/// degrees are pinned by the unique-sequence argument: blocks of `J_2` tuples
/// of equal weight, ordered by descending first coordinate inside a block and
/// by descending weight across blocks, receive the sorted degree multiset
/// carried by the top Betti row.
pub fn reconstruct_gin_slp(
    b_i: &BettiTable,
    h: &HilbertFunction,
) -> Result<MonomialIdeal, ReconstructError> {
    let b_gin = betti_gin_from_betti_i(b_i, h)?;
    let r1 = r1_from_hf_wlp(h)
        .map_err(|e| ReconstructError::InconsistentInput(e.to_string()))?;
    let max2 = reconstruct_max2_generators(&b_gin, r1)?;

    let j2: Vec<(u32, u32)> = (0..max2.f1)
        .flat_map(|a1| (0..max2.f2[a1 as usize]).map(move |a2| (a1, a2)))
        .collect();
    let counts: BTreeMap<u32, u64> = b_gin
        .entries()
        .filter(|&(q, _, _)| q == 2)
        .map(|(_, i, v)| (i - 2, v))
        .collect();
    let degrees = recover_sequence(&counts, j2.len())?;

    let mut f3: BTreeMap<Vec<u32>, u32> = BTreeMap::new();
    let mut next = 0usize;
    for weight in (0..=r1).rev() {
        let mut block: Vec<(u32, u32)> = j2
            .iter()
            .copied()
            .filter(|&(a1, a2)| a1 + a2 == weight)
            .collect();
        block.sort_by(|x, y| y.0.cmp(&x.0));
        for (a1, a2) in block {
            let d = degrees[next];
            next += 1;
            if d <= weight {
                return Err(ReconstructError::InconsistentTable(format!(
                    "degree {d} too small for a weight-{weight} tuple"
                )));
            }
            f3.insert(vec![a1, a2], d - weight);
        }
    }
    debug_assert_eq!(next, degrees.len());

    let level2: BTreeMap<Vec<u32>, u32> = max2
        .f2
        .iter()
        .enumerate()
        .map(|(j, &f)| (vec![j as u32], f))
        .collect();
    let findex = FIndex::from_parts(3, max2.f1, vec![level2, f3])
        .map_err(|e| ReconstructError::InconsistentTable(e.to_string()))?;
    let ideal = findex.generators();

    if !ideal.is_strongly_stable() {
        return Err(ReconstructError::StabilityViolated);
    }
    if ek_betti(&ideal)? != b_gin {
        return Err(ReconstructError::InconsistentTable(
            "reconstructed ideal resolves a different Betti table".into(),
        ));
    }
    if hilbert_function(&ideal)? != *h {
        return Err(ReconstructError::InconsistentInput(
            "reconstructed ideal has a different Hilbert function".into(),
        ));
    }
    Ok(ideal)
}

/// Full reconstruction of gin(I) from the Hilbert function alone, assuming
/// the strong Stanley property: `J_2` collects, for each weight `d` up to
/// `r1`, the revlex-smallest `H(d) - H(d-1)` tuples of weight `d`; the
/// top-variable exponents are forced to `t - 2d + 1`, and the short
/// generators follow from the J-set by the maximal-extension rule.
pub fn reconstruct_gin_ssp(h: &HilbertFunction) -> Result<MonomialIdeal, ReconstructError> {
    if !h.is_symmetric() {
        return Err(ReconstructError::AsymmetricHilbert);
    }
    let t = socle_of(h)?;
    let r1 = r1_from_hf_wlp(h)
        .map_err(|e| ReconstructError::InconsistentInput(e.to_string()))?;

    let mut j2: BTreeSet<(u32, u32)> = BTreeSet::new();
    for d in 0..=r1 {
        // beta[2][2 + (t - d + 1)] of gin, read off the Hilbert function.
        let shift = (t + 1 - d) as usize;
        let members = h.value(shift - 1).saturating_sub(h.value(shift));
        if members > (d + 1) as u64 {
            return Err(ReconstructError::InconsistentInput(format!(
                "{members} weight-{d} tuples demanded but only {} exist",
                d + 1
            )));
        }
        // The revlex-smallest tuples of weight d have the smallest first
        // coordinate.
        for a1 in 0..members as u32 {
            j2.insert((a1, d - a1));
        }
    }

    // Short generators from the J-set: f1 and f2 are one past the largest
    // extensions lying inside it.
    let f1 = j2
        .iter()
        .filter(|&&(_, a2)| a2 == 0)
        .map(|&(a1, _)| a1)
        .max()
        .map(|m| m + 1)
        .ok_or_else(|| {
            ReconstructError::InconsistentInput("empty J-set; no generators recoverable".into())
        })?;
    let mut f2 = Vec::with_capacity(f1 as usize);
    for a1 in 0..f1 {
        let best = j2
            .iter()
            .filter(|&&(b1, _)| b1 == a1)
            .map(|&(_, a2)| a2)
            .max()
            .ok_or_else(|| {
                ReconstructError::InconsistentInput(format!(
                    "J-set is not downward closed at first coordinate {a1}"
                ))
            })?;
        f2.push(best + 1);
    }

    let level2: BTreeMap<Vec<u32>, u32> = f2
        .iter()
        .enumerate()
        .map(|(j, &f)| (vec![j as u32], f))
        .collect();
    let level3: BTreeMap<Vec<u32>, u32> = j2
        .iter()
        .map(|&(a1, a2)| (vec![a1, a2], t + 1 - 2 * (a1 + a2)))
        .collect();
    let findex = FIndex::from_parts(3, f1, vec![level2, level3])
        .map_err(|e| ReconstructError::InconsistentInput(e.to_string()))?;
    let ideal = findex.generators();

    if !ideal.is_strongly_stable() {
        return Err(ReconstructError::StabilityViolated);
    }
    if !ssp_criterion(&findex, t).verdict {
        return Err(ReconstructError::InconsistentInput(
            "reconstructed ideal fails the strong Stanley criterion".into(),
        ));
    }
    if hilbert_function(&ideal)? != *h {
        return Err(ReconstructError::InconsistentInput(
            "reconstructed ideal has a different Hilbert function".into(),
        ));
    }
    Ok(ideal)
}

/// `true` iff `alpha` is reachable from `beta` by consecutive elementary
/// Borel moves (each swapping one variable factor for a smaller-index one):
/// equal degree with every partial sum of `beta` dominated by `alpha`'s.
/// On two coordinates this is exactly the equal-degree revlex comparison.
fn borel_reachable(beta: &Monomial, alpha: &Monomial) -> bool {
    if beta.degree() != alpha.degree() {
        return false;
    }
    let mut beta_sum = 0u32;
    let mut alpha_sum = 0u32;
    for (b, a) in beta.exponents().iter().zip(alpha.exponents()) {
        beta_sum += b;
        alpha_sum += a;
        if beta_sum > alpha_sum {
            return false;
        }
    }
    true
}

/// Checks the Borel-move closure of the generator set: whenever
/// `x^alpha * xn^gamma` and the bottom monomial `x_{n-1}^{|alpha|} * xn^gamma`
/// are both minimal generators, every intermediate `x^beta * xn^gamma` with
/// `|beta| = |alpha|` and `alpha` obtained from `beta` by consecutive
/// elementary Borel moves on the first `n - 1` variables must be one too.
pub fn borel_move_generator_check(ideal: &MonomialIdeal) -> bool {
    let n = ideal.num_vars();
    if n < 2 {
        return true;
    }
    let gens: BTreeSet<&Monomial> = ideal.generators().iter().collect();
    let prefix_ring = MonomialIdeal::zero(n - 1);
    for g in ideal.generators() {
        let gamma = g.exponent_of(n);
        let alpha = Monomial::new(g.exponents()[..n - 1].iter().copied());
        let weight = alpha.degree();
        if weight == 0 {
            continue;
        }
        let bottom = Monomial::var_power(n - 1, weight, n).mul_var_power(n, gamma);
        if !gens.contains(&bottom) {
            continue;
        }
        for beta in prefix_ring.standard_monomials(weight) {
            if !borel_reachable(&beta, &alpha) {
                continue;
            }
            let candidate = Monomial::new(
                beta.exponents()
                    .iter()
                    .copied()
                    .chain(std::iter::once(gamma)),
            );
            if !gens.contains(&candidate) {
                return false;
            }
        }
    }
    true
}

/// Necessary-and-sufficient flag test for the strong Stanley property of an
/// algebra sharing the Hilbert function of a strong Stanley one: the
/// staircase `x_{n-1}^i * xn^{t-2i+1}` together with `x_{n-1}^{r1+1}` must
/// lie inside the generic initial ideal. Agrees with [`ssp_criterion`].
pub fn ssp_flag_test(
    gin_j: &MonomialIdeal,
    h: &HilbertFunction,
) -> Result<bool, ReconstructError> {
    let t = socle_of(h)?;
    let r1 = r1_from_hf_wlp(h)
        .map_err(|e| ReconstructError::InconsistentInput(e.to_string()))?;
    let flag = ssp_flag(r1, t, gin_j.num_vars());
    Ok(flag.iter().all(|m| gin_j.contains(m)))
}

/// Feasibility of obtaining `b_i` from `b_gin` by cancelling consecutive
/// pairs in equal internal degree: returns the cancellation multiplicities
/// `c[q][d]` with `b_gin[q][d] - b_i[q][d] = c[q-1][d] + c[q][d]`, or `None`
/// when the chain system has no non-negative solution.
pub fn cancellation_check(
    b_i: &BettiTable,
    b_gin: &BettiTable,
) -> Option<BTreeMap<(u32, u32), u64>> {
    assert_eq!(b_i.num_vars(), b_gin.num_vars(), "tables in different rings");
    let n = b_i.num_vars() as u32;
    let degrees: BTreeSet<u32> = b_i
        .entries()
        .chain(b_gin.entries())
        .map(|(_, i, _)| i)
        .collect();
    let mut cancellations = BTreeMap::new();
    for &d in &degrees {
        // The system is a chain in q, so the greedy solution is the solution.
        let mut carry: i64 = 0;
        for q in 0..n {
            let diff = b_gin.get(q, d) as i64 - b_i.get(q, d) as i64;
            let c = diff - carry;
            if c < 0 {
                return None;
            }
            if c > 0 {
                cancellations.insert((q, d), c as u64);
            }
            carry = c;
        }
        if carry != 0 {
            return None;
        }
    }
    Some(cancellations)
}

/// Reconstruction modes exposed by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReconstructionMode {
    WlpBetti,
    SlpBetti,
    SspHilbert,
}

/// Validated reconstruction request: the Betti table is mandatory for the
/// two Betti-driven modes, and when both table and Hilbert function are given
/// they must resolve each other.
#[derive(Debug, Clone)]
pub struct ReconstructionInput {
    pub mode: ReconstructionMode,
    pub betti: Option<BettiTable>,
    pub hilbert: HilbertFunction,
}

/// What a reconstruction yields: the weak-Lefschetz mode determines the
/// Betti table of gin(I) and its short generators only; the two strong modes
/// pin the whole minimal generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reconstruction {
    WlpBetti {
        betti_gin: BettiTable,
        max2_generators: Vec<Monomial>,
    },
    Generators(MonomialIdeal),
}

impl ReconstructionInput {
    pub fn validate(&self) -> Result<(), ReconstructError> {
        if self.hilbert.is_empty() {
            return Err(ReconstructError::InconsistentInput(
                "empty Hilbert function".into(),
            ));
        }
        match self.mode {
            ReconstructionMode::WlpBetti | ReconstructionMode::SlpBetti => {
                let betti = self.betti.as_ref().ok_or_else(|| {
                    ReconstructError::InconsistentInput(
                        "this mode needs a Betti table".into(),
                    )
                })?;
                require_codim3(betti.num_vars())?;
                if betti.hilbert_function()? != self.hilbert {
                    return Err(ReconstructError::InconsistentInput(
                        "Betti table and Hilbert function disagree".into(),
                    ));
                }
            }
            ReconstructionMode::SspHilbert => {
                if let Some(betti) = &self.betti {
                    require_codim3(betti.num_vars())?;
                    if betti.hilbert_function()? != self.hilbert {
                        return Err(ReconstructError::InconsistentInput(
                            "Betti table and Hilbert function disagree".into(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn run(&self) -> Result<Reconstruction, ReconstructError> {
        self.validate()?;
        match self.mode {
            ReconstructionMode::WlpBetti => {
                let betti = self.betti.as_ref().expect("validated");
                let betti_gin = betti_gin_from_betti_i(betti, &self.hilbert)?;
                let r1 = r1_from_hf_wlp(&self.hilbert)
                    .map_err(|e| ReconstructError::InconsistentInput(e.to_string()))?;
                let max2 = reconstruct_max2_generators(&betti_gin, r1)?;
                Ok(Reconstruction::WlpBetti {
                    betti_gin,
                    max2_generators: max2.monomials(3),
                })
            }
            ReconstructionMode::SlpBetti => {
                let betti = self.betti.as_ref().expect("validated");
                Ok(Reconstruction::Generators(reconstruct_gin_slp(
                    betti,
                    &self.hilbert,
                )?))
            }
            ReconstructionMode::SspHilbert => Ok(Reconstruction::Generators(
                reconstruct_gin_ssp(&self.hilbert)?,
            )),
        }
    }
}

/// The pair of strongly stable codimension-4 ideals with equal graded Betti
/// tables, both strong Stanley at socle degree 12, that are nevertheless
/// different: reconstruction from Betti numbers or the Hilbert function is a
/// strictly codimension-3 phenomenon.
pub fn example412_fixture() -> (MonomialIdeal, MonomialIdeal) {
    const FIRST: [[u32; 4]; 33] = [
        [2, 0, 0, 0],
        [1, 2, 0, 0],
        [0, 4, 0, 0],
        [0, 3, 1, 0],
        [1, 1, 3, 0],
        [0, 2, 3, 0],
        [1, 0, 5, 0],
        [0, 1, 5, 0],
        [0, 0, 7, 0],
        [0, 0, 6, 1],
        [1, 0, 4, 3],
        [0, 1, 4, 3],
        [0, 0, 5, 3],
        [1, 1, 2, 5],
        [0, 2, 2, 5],
        [1, 0, 3, 5],
        [0, 1, 3, 5],
        [0, 0, 4, 5],
        [0, 3, 0, 7],
        [1, 1, 1, 7],
        [0, 2, 1, 7],
        [1, 0, 2, 7],
        [0, 1, 2, 7],
        [0, 0, 3, 7],
        [1, 1, 0, 9],
        [0, 2, 0, 9],
        [1, 0, 1, 9],
        [0, 1, 1, 9],
        [0, 0, 2, 9],
        [1, 0, 0, 11],
        [0, 1, 0, 11],
        [0, 0, 1, 11],
        [0, 0, 0, 13],
    ];
    const SECOND: [[u32; 4]; 33] = [
        [2, 0, 0, 0],
        [1, 2, 0, 0],
        [0, 4, 0, 0],
        [1, 1, 2, 0],
        [0, 3, 2, 0],
        [1, 0, 4, 0],
        [0, 2, 4, 0],
        [0, 1, 5, 0],
        [0, 0, 7, 0],
        [0, 0, 6, 1],
        [0, 2, 3, 3],
        [0, 1, 4, 3],
        [0, 0, 5, 3],
        [0, 3, 1, 5],
        [0, 2, 2, 5],
        [1, 0, 3, 5],
        [0, 1, 3, 5],
        [0, 0, 4, 5],
        [0, 3, 0, 7],
        [1, 1, 1, 7],
        [0, 2, 1, 7],
        [1, 0, 2, 7],
        [0, 1, 2, 7],
        [0, 0, 3, 7],
        [1, 1, 0, 9],
        [0, 2, 0, 9],
        [1, 0, 1, 9],
        [0, 1, 1, 9],
        [0, 0, 2, 9],
        [1, 0, 0, 11],
        [0, 1, 0, 11],
        [0, 0, 1, 11],
        [0, 0, 0, 13],
    ];
    let build = |rows: &[[u32; 4]; 33]| {
        MonomialIdeal::new(4, rows.iter().map(|r| Monomial::new(r.iter().copied())))
    };
    (build(&FIRST), build(&SECOND))
}

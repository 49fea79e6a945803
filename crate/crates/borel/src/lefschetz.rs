//! Weak/strong Lefschetz and strong Stanley property checks, three ways:
//! the f-index criteria, the graded Betti-number criterion, and a
//! brute-force multiplication-rank oracle on standard monomial bases.
//!
//! All checks multiply by the last variable `xn`. For Borel-fixed input this
//! decides the property of the algebra itself; the CLI routes arbitrary
//! homogeneous ideals through their generic initial ideal first.

use serde::Serialize;
use thiserror::Error;

use crate::invariants::{
    binom, hilbert_function, reduction_number, BettiTable, FIndex, HilbertFunction,
    InvariantsError,
};
use crate::monomial::{Monomial, MonomialIdeal};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LefschetzError {
    #[error("Hilbert function never weakly decreases; no reduction number")]
    StrictlyIncreasing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LefschetzProperty {
    Wlp,
    Slp,
    Ssp,
}

impl std::fmt::Display for LefschetzProperty {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LefschetzProperty::Wlp => write!(f, "weak Lefschetz"),
            LefschetzProperty::Slp => write!(f, "strong Lefschetz"),
            LefschetzProperty::Ssp => write!(f, "strong Stanley"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckMethod {
    Criterion,
    Betti,
    Oracle,
}

/// One violation: for criterion methods `tuple` is the offending J-set tuple
/// and `f_value` the f-index value; for the rank oracle `tuple` is
/// `[degree, power]` and `f_value` the observed rank.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub tuple: Vec<u32>,
    pub f_value: i64,
    pub required: i64,
    pub constraint: String,
}

/// Outcome of one property check; `verdict == false` guarantees at least one
/// witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LefschetzReport {
    pub property: LefschetzProperty,
    pub verdict: bool,
    pub method: CheckMethod,
    pub r1: u32,
    pub t: u32,
    pub witnesses: Vec<Witness>,
}

impl LefschetzReport {
    fn new(
        property: LefschetzProperty,
        method: CheckMethod,
        r1: u32,
        t: u32,
        witnesses: Vec<Witness>,
    ) -> Self {
        LefschetzReport {
            property,
            verdict: witnesses.is_empty(),
            method,
            r1,
            t,
            witnesses,
        }
    }
}

/// Rank of multiplication by `xn^power` from `(R/I)_d` to `(R/I)_{d+power}`:
/// the count of degree-`d` standard monomials still standard after the
/// multiplication, since distinct monomials stay distinct.
pub fn mult_rank(ideal: &MonomialIdeal, d: u32, power: u32) -> usize {
    let n = ideal.num_vars();
    ideal
        .standard_monomials(d)
        .iter()
        .filter(|m| !ideal.contains(&m.mul_var_power(n, power)))
        .count()
}

/// First reduction number of an Artinian monomial ideal, defaulting to zero
/// in the univariate ring where no smaller variable exists.
fn r1_of(ideal: &MonomialIdeal) -> Result<u32, InvariantsError> {
    if ideal.num_vars() == 1 {
        Ok(0)
    } else {
        reduction_number(ideal, 1)
    }
}

fn rank_oracle(
    ideal: &MonomialIdeal,
    property: LefschetzProperty,
) -> Result<LefschetzReport, InvariantsError> {
    let h = hilbert_function(ideal)?;
    if h.is_empty() {
        // The zero algebra: every multiplication map is between zero spaces.
        return Ok(LefschetzReport::new(property, CheckMethod::Oracle, 0, 0, Vec::new()));
    }
    let t = h.socle_degree() as u32;
    let r1 = r1_of(ideal)?;
    let mut witnesses = Vec::new();

    let mut check_power = |power: u32| {
        for d in 0..=t {
            let rank = mult_rank(ideal, d, power) as i64;
            let required = (h.value(d as usize).min(h.value((d + power) as usize))) as i64;
            if rank != required {
                witnesses.push(Witness {
                    tuple: vec![d, power],
                    f_value: rank,
                    required,
                    constraint: format!("rank of xn^{power} on degree {d} must be maximal"),
                });
            }
        }
    };

    match property {
        LefschetzProperty::Wlp => check_power(1),
        LefschetzProperty::Slp => {
            for power in 1..=t {
                check_power(power);
            }
        }
        LefschetzProperty::Ssp => {
            for i in 0..=t / 2 {
                let power = t - 2 * i;
                let rank = mult_rank(ideal, i, power) as i64;
                let source = h.value(i as usize) as i64;
                let target = h.value((t - i) as usize) as i64;
                if source != target {
                    witnesses.push(Witness {
                        tuple: vec![i, power],
                        f_value: source,
                        required: target,
                        constraint: format!("dim in degrees {i} and {} must agree", t - i),
                    });
                } else if rank != source {
                    witnesses.push(Witness {
                        tuple: vec![i, power],
                        f_value: rank,
                        required: source,
                        constraint: format!("xn^{power} must be bijective from degree {i}"),
                    });
                }
            }
        }
    }
    Ok(LefschetzReport::new(property, CheckMethod::Oracle, r1, t, witnesses))
}

/// Rank oracle for the weak Lefschetz property: multiplication by `xn` has
/// maximal rank in every degree. Requires Artinian input; for Borel-fixed
/// ideals this single linear form decides the property of the algebra.
pub fn wlp_oracle(ideal: &MonomialIdeal) -> Result<LefschetzReport, InvariantsError> {
    rank_oracle(ideal, LefschetzProperty::Wlp)
}

/// Rank oracle for the strong Lefschetz property: every power of `xn` has
/// maximal rank. Powers beyond the socle degree are vacuously maximal.
pub fn slp_oracle(ideal: &MonomialIdeal) -> Result<LefschetzReport, InvariantsError> {
    rank_oracle(ideal, LefschetzProperty::Slp)
}

/// Rank oracle for the strong Stanley property: `xn^{t-2i}` is bijective
/// from degree `i` to degree `t-i` for every `i` up to `t/2`.
pub fn ssp_oracle(ideal: &MonomialIdeal) -> Result<LefschetzReport, InvariantsError> {
    rank_oracle(ideal, LefschetzProperty::Ssp)
}

/// Weak Lefschetz criterion on the f-index: every tuple of `J_{n-1}` must
/// satisfy `|alpha| + f_n(alpha) >= r1 + 1`, i.e. every minimal generator
/// divisible by `xn` has degree at least `r1 + 1`.
pub fn wlp_criterion(f: &FIndex, r1: u32) -> LefschetzReport {
    let t = f.socle_degree();
    let mut witnesses = Vec::new();
    if f.num_vars() >= 2 {
        let n = f.num_vars();
        for alpha in f.j_set(n - 1) {
            let weight: u32 = alpha.iter().sum();
            let value = f.f(n, &alpha).expect("tuple drawn from J_{n-1}");
            if (weight + value) < r1 + 1 {
                witnesses.push(Witness {
                    tuple: alpha,
                    f_value: value as i64,
                    required: (r1 + 1) as i64 - weight as i64,
                    constraint: format!(
                        "generator degree {} must reach r1 + 1 = {}",
                        weight + value,
                        r1 + 1
                    ),
                });
            }
        }
    }
    LefschetzReport::new(LefschetzProperty::Wlp, CheckMethod::Criterion, r1, t, witnesses)
}

/// Strong Lefschetz criterion on the f-index: the weak condition together
/// with `f_n(alpha) >= f_n(0,...,0,|alpha|+1) + 1`, reading the second value
/// as zero when `(0,...,0,|alpha|+1)` lies outside `J_{n-1}`.
pub fn slp_criterion(f: &FIndex, r1: u32) -> LefschetzReport {
    let t = f.socle_degree();
    let mut witnesses = Vec::new();
    if f.num_vars() >= 2 {
        let n = f.num_vars();
        for alpha in f.j_set(n - 1) {
            let weight: u32 = alpha.iter().sum();
            let value = f.f(n, &alpha).expect("tuple drawn from J_{n-1}");
            if (weight + value) < r1 + 1 {
                witnesses.push(Witness {
                    tuple: alpha.clone(),
                    f_value: value as i64,
                    required: (r1 + 1) as i64 - weight as i64,
                    constraint: format!(
                        "generator degree {} must reach r1 + 1 = {}",
                        weight + value,
                        r1 + 1
                    ),
                });
                continue;
            }
            let mut ladder = vec![0u32; n - 2];
            ladder.push(weight + 1);
            let next = f.f(n, &ladder).unwrap_or(0);
            if value < next + 1 {
                witnesses.push(Witness {
                    tuple: alpha,
                    f_value: value as i64,
                    required: (next + 1) as i64,
                    constraint: format!(
                        "f_n must exceed f_n(0,...,0,{}) = {next}",
                        weight + 1
                    ),
                });
            }
        }
    }
    LefschetzReport::new(LefschetzProperty::Slp, CheckMethod::Criterion, r1, t, witnesses)
}

/// Strong Stanley criterion on the f-index: `f_n(alpha) = t - 2|alpha| + 1`
/// exactly, for every tuple of `J_{n-1}`.
pub fn ssp_criterion(f: &FIndex, t: u32) -> LefschetzReport {
    let r1 = f.r1();
    let mut witnesses = Vec::new();
    if f.num_vars() >= 2 {
        let n = f.num_vars();
        for alpha in f.j_set(n - 1) {
            let weight: u32 = alpha.iter().sum();
            let value = f.f(n, &alpha).expect("tuple drawn from J_{n-1}");
            let required = t as i64 - 2 * weight as i64 + 1;
            if value as i64 != required {
                witnesses.push(Witness {
                    tuple: alpha,
                    f_value: value as i64,
                    required,
                    constraint: format!("f_n must equal t - 2|alpha| + 1 = {required}"),
                });
            }
        }
    }
    LefschetzReport::new(LefschetzProperty::Ssp, CheckMethod::Criterion, r1, t, witnesses)
}

impl FIndex {
    /// First reduction number read off the f-index: one less than the least
    /// pure power of `x_{n-1}`, or zero in the univariate ring.
    pub fn r1(&self) -> u32 {
        let n = self.num_vars();
        match n {
            1 => 0,
            2 => self.f1() - 1,
            _ => self.f(n - 1, &vec![0; n - 2]).expect("all-zero tuple is in every J-set") - 1,
        }
    }
}

/// Betti-number test for the weak Lefschetz property: with `d` the least
/// shift carrying a top-row entry, the top row must equal the generator row
/// beyond `d`, and every row must be the binomial multiple of the generator
/// row there. Both characterizations are evaluated and conjoined.
pub fn wlp_betti_criterion(betti: &BettiTable) -> bool {
    let n = betti.num_vars() as u32;
    let top = n - 1;
    let first = (0..=betti.max_internal_degree().unwrap_or(0))
        .find(|&j| betti.get(top, top + j) > 0);
    let d = match first {
        Some(d) => d,
        None => return true,
    };
    let horizon = betti.max_internal_degree().unwrap_or(0);
    let mut ok = true;
    for j in d + 1..=horizon {
        if betti.get(top, top + j) != betti.get(0, j) {
            ok = false;
        }
        for i in 0..n {
            if betti.get(i, i + j) != binom(n as i64 - 1, i as i64) as u64 * betti.get(0, j) {
                ok = false;
            }
        }
    }
    ok
}

/// Betti numbers of gin(I) determined by the Hilbert function under the weak
/// Lefschetz property: the top row is the backward difference of `H` past
/// `r1`, and past `r1 + 2` every row is its binomial multiple. Entries
/// outside this determined region are not populated.
pub fn betti_from_hf_wlp(h: &HilbertFunction, r1: u32, n: usize) -> BettiTable {
    let mut table = BettiTable::new(n);
    if h.is_empty() {
        return table;
    }
    let t = h.socle_degree() as u32;
    let top = n as u32 - 1;
    for d in r1 + 1..=t + 1 {
        // Attested WLP forces H to be non-increasing past r1.
        let drop = h
            .value(d as usize - 1)
            .saturating_sub(h.value(d as usize));
        table.set(top, top + d, drop);
        if d >= r1 + 2 {
            for i in 0..n as u32 {
                table.set(i, i + d, binom(n as i64 - 1, i as i64) as u64 * drop);
            }
        }
    }
    table
}

/// First reduction number from the Hilbert function under the weak Lefschetz
/// property: one less than the first degree where `H` weakly decreases.
pub fn r1_from_hf_wlp(h: &HilbertFunction) -> Result<u32, LefschetzError> {
    if h.is_empty() {
        return Err(LefschetzError::StrictlyIncreasing);
    }
    let t = h.socle_degree();
    for d in 1..=t + 1 {
        if h.value(d - 1) >= h.value(d) {
            return Ok((d - 1) as u32);
        }
    }
    // Unreachable for Artinian algebras: H drops to zero past the socle.
    Err(LefschetzError::StrictlyIncreasing)
}

/// The flag of minimal generators forced by the strong Stanley property:
/// `x_{n-1}^{r1+1}` together with `x_{n-1}^i * xn^{t-2i+1}` for
/// `0 <= i <= r1`. In the univariate ring the staircase degenerates to the
/// single pure power `x1^{t+1}`.
pub fn ssp_flag(r1: u32, t: u32, n: usize) -> Vec<Monomial> {
    if n == 1 {
        return vec![Monomial::var_power(1, t + 1, 1)];
    }
    let mut flag = vec![Monomial::var_power(n - 1, r1 + 1, n)];
    for i in 0..=r1 {
        let power = t as i64 - 2 * i as i64 + 1;
        if power < 0 {
            continue;
        }
        flag.push(
            Monomial::var_power(n - 1, i, n).mul_var_power(n, power as u32),
        );
    }
    flag.sort();
    flag.dedup();
    flag
}

/// The strong Stanley property via its equivalence with strong Lefschetz
/// plus a symmetric Hilbert function; must agree with [`ssp_oracle`].
pub fn ssp_via_slp_symmetry(ideal: &MonomialIdeal) -> Result<bool, InvariantsError> {
    let slp = slp_oracle(ideal)?;
    let h = hilbert_function(ideal)?;
    Ok(slp.verdict && h.is_symmetric())
}

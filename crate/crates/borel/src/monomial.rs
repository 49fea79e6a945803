//! Exponent-vector monomials, the graded reverse lexicographic order, and
//! monomial ideals stored by their divisibility-minimal generating sets.
//!
//! The variable convention throughout the crate is `x1 > x2 > ... > xn`.
//! Every operation that names a variable takes a 1-based index.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use smallvec::SmallVec;
use thiserror::Error;

/// Errors raised by checked monomial operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonomialError {
    #[error("variable count mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
}

/// A monomial in `n` variables, stored as its exponent vector.
///
/// The total order (`Ord`) is graded reverse lexicographic with
/// `x1 > x2 > ... > xn`: degrees are compared first, and on equal degree
/// `a > b` iff the last nonzero entry of `a - b` is negative.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u32; 8]>,
}

impl Monomial {
    /// Builds a monomial from its exponent vector.
    pub fn new(exps: impl IntoIterator<Item = u32>) -> Self {
        Monomial {
            exps: exps.into_iter().collect(),
        }
    }

    /// The unit monomial `1` in `n` variables.
    pub fn unit(n: usize) -> Self {
        Monomial {
            exps: smallvec::smallvec![0; n],
        }
    }

    /// The variable `x_var` (1-based) in `n` variables.
    pub fn var(var: usize, n: usize) -> Self {
        Self::var_power(var, 1, n)
    }

    /// The pure power `x_var^k` (1-based `var`) in `n` variables.
    pub fn var_power(var: usize, k: u32, n: usize) -> Self {
        assert!(var >= 1 && var <= n, "variable index {var} out of 1..={n}");
        let mut exps: SmallVec<[u32; 8]> = smallvec::smallvec![0; n];
        exps[var - 1] = k;
        Monomial { exps }
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of `x_var` (1-based).
    pub fn exponent_of(&self, var: usize) -> u32 {
        self.exps[var - 1]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// The largest 1-based index of a variable dividing the monomial,
    /// or `0` for the unit monomial.
    pub fn max_var(&self) -> usize {
        self.exps
            .iter()
            .rposition(|&e| e > 0)
            .map_or(0, |i| i + 1)
    }

    /// Product of two monomials. Panics on exponent overflow, which cannot
    /// occur at the degrees this crate is designed for.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars(), other.num_vars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.checked_add(*b).expect("monomial exponent overflow"))
                .collect(),
        }
    }

    /// Multiplies by `x_var` (1-based).
    pub fn mul_var(&self, var: usize) -> Self {
        let mut m = self.clone();
        m.exps[var - 1] = m.exps[var - 1].checked_add(1).expect("exponent overflow");
        m
    }

    /// Multiplies by `x_var^k` (1-based).
    pub fn mul_var_power(&self, var: usize, k: u32) -> Self {
        let mut m = self.clone();
        m.exps[var - 1] = m.exps[var - 1].checked_add(k).expect("exponent overflow");
        m
    }

    /// `true` iff `self` divides `other`.
    pub fn divides(&self, other: &Self) -> bool {
        self.num_vars() == other.num_vars()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn lcm(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars(), other.num_vars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// Graded reverse lexicographic comparison. Panics when the variable
    /// counts differ; use [`Monomial::checked_revlex_cmp`] for a fallible
    /// variant.
    pub fn revlex_cmp(&self, other: &Self) -> Ordering {
        assert_eq!(
            self.num_vars(),
            other.num_vars(),
            "revlex comparison of monomials in different rings"
        );
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Equal degree: the last nonzero entry of self - other decides,
        // negative entry meaning self is the larger monomial.
        for (a, b) in self.exps.iter().zip(&other.exps).rev() {
            match a.cmp(b) {
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => {}
            }
        }
        Ordering::Equal
    }

    pub fn checked_revlex_cmp(&self, other: &Self) -> Result<Ordering, MonomialError> {
        if self.num_vars() != other.num_vars() {
            return Err(MonomialError::DimensionMismatch {
                left: self.num_vars(),
                right: other.num_vars(),
            });
        }
        Ok(self.revlex_cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.revlex_cmp(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    /// Canonical form: factors by increasing variable index, `^1` suppressed,
    /// the unit monomial printed as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A witness that a generator escapes the ideal under an elementary Borel
/// move: `generator` has positive exponent on `x_from`, yet
/// `x_to * generator / x_from` is not a member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorelViolation {
    pub generator: Monomial,
    /// 1-based index of the variable removed by the move.
    pub from_var: usize,
    /// 1-based index of the variable inserted by the move (`to_var < from_var`).
    pub to_var: usize,
    pub moved: Monomial,
}

/// A monomial ideal, stored by its minimal system of generators.
///
/// Generators are kept sorted by ascending degree and, inside a degree,
/// by descending revlex, so equal ideals compare equal structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, discarding non-minimal
    /// generators. All monomials must live in `n` variables.
    pub fn new(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            assert_eq!(g.num_vars(), n, "generator in wrong ring");
        }
        let mut minimal: Vec<Monomial> = Vec::new();
        let mut sorted = gens;
        sorted.sort_by(generator_order);
        sorted.dedup();
        for g in sorted {
            if !minimal.iter().any(|h| h.divides(&g)) {
                minimal.push(g);
            }
        }
        MonomialIdeal { n, gens: minimal }
    }

    /// The zero ideal (no generators).
    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    /// The unit ideal `(1)`.
    pub fn unit(n: usize) -> Self {
        MonomialIdeal::new(n, [Monomial::unit(n)])
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    /// Minimal generators, sorted by ascending degree then descending revlex.
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_unit()
    }

    /// Membership: divisibility by some minimal generator.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Minimal generators of the given degree.
    pub fn generators_of_degree(&self, d: u32) -> impl Iterator<Item = &Monomial> {
        self.gens.iter().filter(move |g| g.degree() == d)
    }

    /// First failure of the strong stability (Borel-fixedness) test, if any.
    ///
    /// Checks every generator `T`, every `i` with positive exponent and every
    /// `j < i` for membership of `x_j * T / x_i`; this generator-level check
    /// is equivalent to closure of the whole ideal under elementary Borel
    /// moves.
    pub fn strong_stability_violation(&self) -> Option<BorelViolation> {
        for g in &self.gens {
            for i in 1..=self.n {
                if g.exponent_of(i) == 0 {
                    continue;
                }
                for j in 1..i {
                    let moved = g.checked_div(&Monomial::var(i, self.n)).unwrap().mul_var(j);
                    if !self.contains(&moved) {
                        return Some(BorelViolation {
                            generator: g.clone(),
                            from_var: i,
                            to_var: j,
                            moved,
                        });
                    }
                }
            }
        }
        None
    }

    pub fn is_strongly_stable(&self) -> bool {
        self.strong_stability_violation().is_none()
    }

    /// Stability in the weaker sense: for every generator `T` and every
    /// `j < max(T)`, the monomial `x_j * T / x_max(T)` is a member. This is
    /// the hypothesis of the Eliahou-Kervaire resolution.
    pub fn is_stable(&self) -> bool {
        self.gens.iter().all(|g| {
            let mv = g.max_var();
            if mv == 0 {
                return true;
            }
            (1..mv).all(|j| {
                let moved = g.checked_div(&Monomial::var(mv, self.n)).unwrap().mul_var(j);
                self.contains(&moved)
            })
        })
    }

    /// The colon ideal `(I : x_var^power)` with `var` 1-based.
    ///
    /// Each generator has its `x_var` exponent reduced by `power` (clamped at
    /// zero); the result is minimalized.
    pub fn colon_power(&self, var: usize, power: u32) -> MonomialIdeal {
        assert!(var >= 1 && var <= self.n, "variable index out of range");
        let gens = self.gens.iter().map(|g| {
            let mut exps: SmallVec<[u32; 8]> = g.exponents().into();
            exps[var - 1] = exps[var - 1].saturating_sub(power);
            Monomial { exps }
        });
        MonomialIdeal::new(self.n, gens)
    }

    /// All degree-`d` monomials outside the ideal, in descending revlex
    /// order. These form a basis of `(R/I)_d`.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps: SmallVec<[u32; 8]> = smallvec::smallvec![0; self.n];
        self.collect_standard(d, 0, &mut exps, &mut out);
        out.sort_by(|a, b| b.revlex_cmp(a));
        out
    }

    fn collect_standard(
        &self,
        remaining: u32,
        var: usize,
        exps: &mut SmallVec<[u32; 8]>,
        out: &mut Vec<Monomial>,
    ) {
        if var + 1 == self.n {
            exps[var] = remaining;
            let m = Monomial { exps: exps.clone() };
            if !self.contains(&m) {
                out.push(m);
            }
            exps[var] = 0;
            return;
        }
        for e in 0..=remaining {
            exps[var] = e;
            self.collect_standard(remaining - e, var + 1, exps, out);
        }
        exps[var] = 0;
    }

    /// `true` iff the ideal contains a pure power of every variable,
    /// i.e. iff `R/I` is Artinian.
    pub fn is_artinian(&self) -> bool {
        (1..=self.n).all(|v| {
            self.gens
                .iter()
                .any(|g| g.max_var() <= v && g.exponents()[..v - 1].iter().all(|&e| e == 0))
        })
    }

    /// The smallest strongly stable ideal containing `seeds`: the closure of
    /// the seed set under elementary Borel moves, minimalized.
    pub fn borel_closure(n: usize, seeds: impl IntoIterator<Item = Monomial>) -> MonomialIdeal {
        let mut closed: BTreeSet<Monomial> = BTreeSet::new();
        let mut queue: Vec<Monomial> = seeds.into_iter().collect();
        while let Some(m) = queue.pop() {
            assert_eq!(m.num_vars(), n, "seed in wrong ring");
            if !closed.insert(m.clone()) {
                continue;
            }
            for i in 2..=n {
                if m.exponent_of(i) == 0 {
                    continue;
                }
                let lowered = m.checked_div(&Monomial::var(i, n)).unwrap();
                for j in 1..i {
                    queue.push(lowered.mul_var(j));
                }
            }
        }
        MonomialIdeal::new(n, closed)
    }
}

/// Generator display order: ascending degree, then descending revlex.
fn generator_order(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| b.revlex_cmp(a))
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{m, showcase_ideal};

    #[test]
    fn revlex_orders_variables_by_index() {
        let x1 = Monomial::var(1, 3);
        let x2 = Monomial::var(2, 3);
        assert_eq!(x1.revlex_cmp(&x2), Ordering::Greater);
    }

    #[test]
    fn revlex_degree_two_tiebreak() {
        // x2^2 > x1*x3: the difference (-1, 2, -1) ends in a negative entry.
        let a = m(&[0, 2, 0]);
        let b = m(&[1, 0, 1]);
        assert_eq!(a.revlex_cmp(&b), Ordering::Greater);
    }

    #[test]
    fn revlex_reflexive() {
        let a = m(&[1, 2, 0]);
        assert_eq!(a.revlex_cmp(&a.clone()), Ordering::Equal);
    }

    #[test]
    fn revlex_checked_rejects_mismatched_rings() {
        let a = m(&[1, 0]);
        let b = m(&[1, 0, 0]);
        assert_eq!(
            a.checked_revlex_cmp(&b),
            Err(MonomialError::DimensionMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn minimalize_drops_multiples() {
        let i = MonomialIdeal::new(1, [m(&[2]), m(&[3])]);
        assert_eq!(i.generators(), &[m(&[2])]);

        let j = MonomialIdeal::new(2, [m(&[1, 0]), m(&[0, 1]), m(&[1, 1])]);
        assert_eq!(j.generators(), &[m(&[1, 0]), m(&[0, 1])]);
    }

    #[test]
    fn minimalize_keeps_showcase_generators() {
        let base = showcase_ideal();
        let mut gens: Vec<Monomial> = base.generators().to_vec();
        gens.push(m(&[2, 0, 0, 1])); // x1^2*x4, redundant
        let again = MonomialIdeal::new(4, gens);
        assert_eq!(again, base);
    }

    #[test]
    fn contains_uses_divisibility() {
        let i = showcase_ideal();
        assert!(i.contains(&m(&[0, 2, 1, 0]))); // listed generator x2^2*x3
        assert!(!i.contains(&m(&[0, 0, 2, 2]))); // x3^2*x4^2
        assert!(!i.contains(&Monomial::unit(4)));
        assert!(MonomialIdeal::unit(4).contains(&Monomial::unit(4)));
    }

    #[test]
    fn strong_stability_of_showcase() {
        assert!(showcase_ideal().is_strongly_stable());
    }

    #[test]
    fn strong_stability_violation_reported() {
        let i = MonomialIdeal::new(2, [m(&[0, 1])]);
        let violation = i.strong_stability_violation().expect("(x2) is not stable");
        assert_eq!(violation.moved, m(&[1, 0]));
        assert_eq!((violation.from_var, violation.to_var), (2, 1));

        assert!(MonomialIdeal::new(2, [m(&[1, 0])]).is_strongly_stable());
    }

    #[test]
    fn colon_power_reduces_exponents() {
        let i = MonomialIdeal::new(2, [m(&[2, 0]), m(&[0, 3])]);
        let c = i.colon_power(2, 1);
        assert_eq!(c, MonomialIdeal::new(2, [m(&[2, 0]), m(&[0, 2])]));
        assert_eq!(i.colon_power(1, 0), i);
    }

    #[test]
    fn colon_showcase_by_x4_power() {
        let c = showcase_ideal().colon_power(4, 5);
        let expected = MonomialIdeal::new(
            4,
            [m(&[1, 0, 0, 0]), m(&[0, 1, 0, 0]), m(&[0, 0, 1, 0]), m(&[0, 0, 0, 2])],
        );
        assert_eq!(c, expected);
    }

    #[test]
    fn standard_monomials_enumeration() {
        let i = MonomialIdeal::new(2, [m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]);
        assert!(i.standard_monomials(2).is_empty());

        let j = MonomialIdeal::new(2, [m(&[2, 0]), m(&[1, 1]), m(&[0, 3])]);
        assert_eq!(j.standard_monomials(2), vec![m(&[0, 2])]);

        let linear = showcase_ideal().standard_monomials(1);
        assert_eq!(
            linear,
            vec![m(&[1, 0, 0, 0]), m(&[0, 1, 0, 0]), m(&[0, 0, 1, 0]), m(&[0, 0, 0, 1])]
        );
    }

    #[test]
    fn standard_monomials_sorted_descending() {
        let i = MonomialIdeal::new(3, [m(&[2, 0, 0])]);
        let std2 = i.standard_monomials(2);
        for w in std2.windows(2) {
            assert_eq!(w[0].revlex_cmp(&w[1]), Ordering::Greater);
        }
    }

    #[test]
    fn artinian_detection() {
        assert!(MonomialIdeal::new(2, [m(&[2, 0]), m(&[0, 3])]).is_artinian());
        assert!(!MonomialIdeal::new(2, [m(&[1, 0])]).is_artinian());
        assert!(showcase_ideal().is_artinian());
    }

    #[test]
    fn borel_closure_is_strongly_stable() {
        let i = MonomialIdeal::borel_closure(3, [m(&[0, 0, 3]), m(&[0, 2, 1])]);
        assert!(i.is_strongly_stable());
        assert!(i.contains(&m(&[3, 0, 0])));
    }

    #[test]
    fn max_var_and_degree() {
        assert_eq!(m(&[1, 0, 2, 0]).max_var(), 3);
        assert_eq!(Monomial::unit(4).max_var(), 0);
        assert_eq!(m(&[1, 0, 2, 0]).degree(), 3);
    }

    #[test]
    fn display_canonical_form() {
        assert_eq!(m(&[2, 0, 1]).to_string(), "x1^2*x3");
        assert_eq!(Monomial::unit(2).to_string(), "1");
        assert_eq!(m(&[0, 1, 0]).to_string(), "x2");
    }
}

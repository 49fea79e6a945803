//! Random generators for fuzzing: strongly stable Artinian monomial ideals
//! via Borel closures of random seeds, and small homogeneous polynomial
//! ideals for the gin engine.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use crate::groebner::Polynomial;
use crate::invariants::hilbert_function;
use crate::monomial::{Monomial, MonomialIdeal};

/// Shape of a random strongly stable sample.
#[derive(Debug, Clone)]
pub struct CorpusOptions {
    /// Upper bound on the socle degree of the sample (inclusive).
    pub max_socle: u32,
    /// How many random seed monomials to close under Borel moves, beyond the
    /// mandatory pure power of the last variable.
    pub extra_seeds: usize,
}

impl Default for CorpusOptions {
    fn default() -> Self {
        CorpusOptions {
            max_socle: 8,
            extra_seeds: 3,
        }
    }
}

fn random_monomial<R: Rng + ?Sized>(rng: &mut R, n: usize, degree: u32) -> Monomial {
    let mut exps = vec![0u32; n];
    for _ in 0..degree {
        exps[rng.gen_range(0..n)] += 1;
    }
    Monomial::new(exps)
}

/// A random strongly stable Artinian ideal: the Borel closure of a pure
/// power of the last variable together with a handful of random monomials,
/// resampled until the socle degree fits the requested bound.
pub fn random_strongly_stable<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    options: &CorpusOptions,
) -> MonomialIdeal {
    loop {
        let cap = rng.gen_range(2..=options.max_socle.max(2));
        let mut seeds = vec![Monomial::var_power(n, cap, n)];
        for _ in 0..options.extra_seeds {
            let degree = rng.gen_range(1..=cap);
            seeds.push(random_monomial(rng, n, degree));
        }
        let ideal = MonomialIdeal::borel_closure(n, seeds);
        if ideal.is_unit() {
            continue;
        }
        debug_assert!(ideal.is_artinian());
        let hilbert = hilbert_function(&ideal).expect("Borel closure of a pure power is Artinian");
        if hilbert.is_empty() {
            continue;
        }
        if hilbert.socle_degree() as u32 <= options.max_socle {
            return ideal;
        }
    }
}

/// A random homogeneous polynomial with small integer coefficients; every
/// monomial of the chosen degree appears with the given density. Never zero.
pub fn random_homogeneous<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    degree: u32,
    density: f64,
) -> Polynomial {
    let all = MonomialIdeal::zero(n).standard_monomials(degree);
    loop {
        let poly = Polynomial::from_terms(
            n,
            all.iter().filter_map(|m| {
                if rng.gen_bool(density) {
                    let c = loop {
                        let c = rng.gen_range(-3i64..=3);
                        if c != 0 {
                            break c;
                        }
                    };
                    Some((m.clone(), BigRational::from(BigInt::from(c))))
                } else {
                    None
                }
            }),
        );
        if !poly.is_zero() {
            return poly;
        }
    }
}

/// A family of random homogeneous polynomials with degrees drawn from
/// `1..=max_degree`.
pub fn random_homogeneous_family<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    count: usize,
    max_degree: u32,
) -> Vec<Polynomial> {
    (0..count)
        .map(|_| {
            let degree = rng.gen_range(1..=max_degree);
            random_homogeneous(rng, n, degree, 0.7)
        })
        .collect()
}

//! Fixtures shared by the integration suites.

#![allow(dead_code)]

use borel::{Monomial, MonomialIdeal, Polynomial};

pub fn m(exps: &[u32]) -> Monomial {
    Monomial::new(exps.iter().copied())
}

pub fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::new(n, gens.iter().map(|e| m(e)))
}

/// Monomial generators of an ideal as polynomials, for feeding the Groebner
/// engine.
pub fn as_polynomials(ideal: &MonomialIdeal) -> Vec<Polynomial> {
    ideal
        .generators()
        .iter()
        .map(|g| Polynomial::monomial(g.clone()))
        .collect()
}

/// The 15-generator strongly stable showcase ideal in k[x1..x4]: Hilbert
/// function (1,4,8,8,7,4,1), r1 = 2, strong Lefschetz but not strong Stanley.
pub fn showcase_ideal() -> MonomialIdeal {
    ideal(
        4,
        &[
            &[2, 0, 0, 0],
            &[1, 1, 0, 0],
            &[0, 3, 0, 0],
            &[0, 2, 1, 0],
            &[1, 0, 2, 0],
            &[0, 1, 2, 0],
            &[0, 0, 3, 0],
            &[1, 0, 1, 2],
            &[0, 2, 0, 3],
            &[0, 1, 1, 3],
            &[0, 0, 2, 3],
            &[1, 0, 0, 5],
            &[0, 1, 0, 5],
            &[0, 0, 1, 5],
            &[0, 0, 0, 7],
        ],
    )
}

/// The showcase ideal with x1*x3*x4^2 deepened to x1*x3*x4^3: symmetric
/// Hilbert function (1,4,8,8,8,4,1) and the strong Stanley property.
pub fn showcase_stanley_variant() -> MonomialIdeal {
    ideal(
        4,
        &[
            &[2, 0, 0, 0],
            &[1, 1, 0, 0],
            &[0, 3, 0, 0],
            &[0, 2, 1, 0],
            &[1, 0, 2, 0],
            &[0, 1, 2, 0],
            &[0, 0, 3, 0],
            &[1, 0, 1, 3],
            &[0, 2, 0, 3],
            &[0, 1, 1, 3],
            &[0, 0, 2, 3],
            &[1, 0, 0, 5],
            &[0, 1, 0, 5],
            &[0, 0, 1, 5],
            &[0, 0, 0, 7],
        ],
    )
}

/// Codimension-3 strongly stable ideal with the strong Stanley property;
/// Hilbert function (1,3,3,1), r1 = 1.
pub fn codim3_wlp_ideal() -> MonomialIdeal {
    ideal(
        3,
        &[
            &[2, 0, 0],
            &[1, 1, 0],
            &[0, 2, 0],
            &[1, 0, 2],
            &[0, 1, 2],
            &[0, 0, 4],
        ],
    )
}

/// Codimension-3 ideal without the weak Lefschetz property (the degree-2
/// generator x1*x3 is too short); not strongly stable.
pub fn codim3_no_wlp_ideal() -> MonomialIdeal {
    ideal(
        3,
        &[
            &[2, 0, 0],
            &[1, 1, 0],
            &[1, 0, 1],
            &[0, 3, 0],
            &[0, 1, 2],
            &[0, 0, 4],
        ],
    )
}

//! Generic initial ideals of Artinian algebras: strongly stable monomial
//! ideals, an exact-rational Groebner/gin engine, Hilbert functions and
//! Eliahou-Kervaire Betti tables, weak/strong Lefschetz and strong Stanley
//! property checks, and the codimension-3 reconstruction procedures that
//! recover gin(I) from Betti numbers or the Hilbert function.
//!
//! Variable convention: `x1 > x2 > ... > xn`; `xn` plays the role of the
//! distinguished (Lefschetz) linear form throughout.

pub mod codim3;
pub mod corpus;
pub mod groebner;
pub mod invariants;
pub mod lefschetz;
pub mod monomial;

pub use codim3::{
    betti_gin_from_betti_i, borel_move_generator_check, cancellation_check, example412_fixture,
    reconstruct_gin_slp, reconstruct_gin_ssp, reconstruct_max2_generators, recover_sequence,
    ssp_flag_test, Max2Generators, ReconstructError, Reconstruction, ReconstructionInput,
    ReconstructionMode,
};

pub use groebner::{
    buchberger, gin, CoordinateChange, GinError, GinOptions, GroebnerBasis, Polynomial,
};
pub use invariants::{
    ek_betti, ek_betti_raw, f_index, f_index_raw, hilbert_function, koszul_betti,
    koszul_betti_of_polynomials, max_n_generator_count, reduction_number,
    reduction_number_direct, BettiTable, FIndex, HilbertFunction, InvariantsError,
};
pub use lefschetz::{
    betti_from_hf_wlp, mult_rank, r1_from_hf_wlp, slp_criterion, slp_oracle, ssp_criterion,
    ssp_flag, ssp_oracle, ssp_via_slp_symmetry, wlp_betti_criterion, wlp_criterion, wlp_oracle,
    CheckMethod, LefschetzError, LefschetzProperty, LefschetzReport, Witness,
};
pub use monomial::{BorelViolation, Monomial, MonomialError, MonomialIdeal};

#[cfg(test)]
pub(crate) mod testutil {
    use crate::monomial::{Monomial, MonomialIdeal};

    pub fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.iter().copied())
    }

    pub fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|e| m(e)))
    }

    /// The 15-generator strongly stable showcase ideal in k[x1..x4], with
    /// Hilbert function (1,4,8,8,7,4,1). It has the strong Lefschetz but not
    /// the strong Stanley property.
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

    /// The showcase ideal with x1*x3*x4^2 replaced by x1*x3*x4^3; strongly
    /// stable with symmetric Hilbert function (1,4,8,8,8,4,1) and the strong
    /// Stanley property.
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

    /// Codimension-3 ideal with the weak Lefschetz property (in fact the
    /// strong Stanley property); Hilbert function (1,3,3,1).
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

    /// Codimension-3 ideal without the weak Lefschetz property: the degree-2
    /// generator x1*x3 forces a rank drop. Note this ideal is not strongly
    /// stable (x2*x3^2 -> x2^2*x3 escapes it).
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
}

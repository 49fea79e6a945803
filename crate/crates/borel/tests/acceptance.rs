//! Acceptance suite: exact replay of the worked examples and the randomized
//! cross-validation corpora. Each test prints one pass line with its timing
//! (visible under `cargo test -- --nocapture`).

mod common;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use borel::corpus::{random_homogeneous_family, random_strongly_stable, CorpusOptions};
use borel::{
    betti_gin_from_betti_i, buchberger, cancellation_check, ek_betti, example412_fixture,
    f_index, f_index_raw, gin, hilbert_function, koszul_betti, koszul_betti_of_polynomials,
    r1_from_hf_wlp, reconstruct_gin_slp, reconstruct_gin_ssp, reduction_number,
    reduction_number_direct, slp_criterion, slp_oracle, ssp_criterion, ssp_flag_test, ssp_oracle,
    ssp_via_slp_symmetry, wlp_betti_criterion, wlp_criterion, wlp_oracle, GinOptions, Monomial,
    MonomialIdeal, Polynomial,
};

use common::{
    as_polynomials, codim3_no_wlp_ideal, codim3_wlp_ideal, ideal, showcase_ideal,
    showcase_stanley_variant,
};

fn finish(number: u32, name: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    println!("acceptance {number} ({name}): PASS in {elapsed:?} (budget {budget:?})");
    assert!(
        elapsed <= budget,
        "criterion {number} exceeded its {budget:?} budget: {elapsed:?}"
    );
}

/// Runs gin following the documented caller contract on trial disagreement:
/// raise the entry bound and redraw. Random integer matrices land outside
/// the generic locus with small positive probability (certainly when the
/// input has linear generators), and the engine surfaces that as an error
/// rather than guessing.
fn gin_with_retry(gens: &[Polynomial], seed: u64) -> MonomialIdeal {
    let mut options = GinOptions {
        seed,
        ..GinOptions::default()
    };
    for _ in 0..4 {
        match gin(gens, &options) {
            Ok(ideal) => return ideal,
            Err(borel::GinError::TrialsDisagree { .. }) => {
                options.entry_bound *= 10;
                options.seed = options.seed.wrapping_add(1);
            }
            Err(e) => panic!("gin failed: {e}"),
        }
    }
    panic!("gin kept disagreeing after raising the entry bound");
}

#[test]
fn criterion_01_f_index_reproduction() {
    let start = Instant::now();
    let f = f_index(&showcase_ideal()).unwrap();

    assert_eq!(f.f1(), 2);
    assert_eq!(f.j_set(1), vec![vec![0], vec![1]]);
    assert_eq!(f.f(2, &[0]), Some(3));
    assert_eq!(f.f(2, &[1]), Some(1));
    assert_eq!(
        f.j_set(2),
        vec![vec![0, 0], vec![0, 1], vec![0, 2], vec![1, 0]]
    );
    let f3: Vec<u32> = f.j_set(2).iter().map(|a| f.f(3, a).unwrap()).collect();
    assert_eq!(f3, vec![3, 2, 1, 2]);
    assert_eq!(
        f.j_set(3),
        vec![
            vec![0, 0, 0],
            vec![0, 0, 1],
            vec![0, 0, 2],
            vec![0, 1, 0],
            vec![0, 1, 1],
            vec![0, 2, 0],
            vec![1, 0, 0],
            vec![1, 0, 1],
        ]
    );
    finish(1, "f-index reproduction", start, Duration::from_secs(1));
}

#[test]
fn criterion_02_wlp_example() {
    let start = Instant::now();

    let bad = codim3_no_wlp_ideal();
    let r1 = reduction_number(&bad, 1).unwrap();
    assert_eq!(r1, 2);
    // The scan runs mechanically: this ideal is not strongly stable.
    let f = f_index_raw(&bad).unwrap();
    let report = wlp_criterion(&f, r1);
    assert!(!report.verdict);
    let witness = &report.witnesses[0];
    assert_eq!(witness.tuple, vec![1, 0]);
    let degree = witness.tuple.iter().sum::<u32>() as i64 + witness.f_value;
    assert_eq!(degree, 2, "witness generator degree");
    assert!(degree < (r1 + 1) as i64);
    assert!(!wlp_oracle(&bad).unwrap().verdict);

    let good = codim3_wlp_ideal();
    let r1 = reduction_number(&good, 1).unwrap();
    assert_eq!(r1, 1);
    let f = f_index(&good).unwrap();
    assert!(wlp_criterion(&f, r1).verdict);
    assert!(wlp_oracle(&good).unwrap().verdict);

    finish(2, "weak Lefschetz pair", start, Duration::from_secs(1));
}

#[test]
fn criterion_03_slp_example() {
    let start = Instant::now();
    let ideal = showcase_ideal();
    let r1 = reduction_number(&ideal, 1).unwrap();
    assert_eq!(r1, 2);
    let h = hilbert_function(&ideal).unwrap();
    assert_eq!(r1_from_hf_wlp(&h).unwrap(), 2);

    let f = f_index(&ideal).unwrap();
    assert!(slp_criterion(&f, r1).verdict);
    assert!(slp_oracle(&ideal).unwrap().verdict);
    finish(3, "strong Lefschetz showcase", start, Duration::from_secs(1));
}

#[test]
fn criterion_04_ssp_example() {
    let start = Instant::now();

    let bad = showcase_ideal();
    let h = hilbert_function(&bad).unwrap();
    assert_eq!(h.socle_degree(), 6);
    let f = f_index(&bad).unwrap();
    let report = ssp_criterion(&f, 6);
    assert!(!report.verdict);
    let witness = report
        .witnesses
        .iter()
        .find(|w| w.tuple == vec![1, 0, 1])
        .expect("witness tuple (1,0,1)");
    assert_eq!(witness.f_value, 2);
    assert_eq!(witness.required, 3);
    assert!(!ssp_oracle(&bad).unwrap().verdict);

    let good = showcase_stanley_variant();
    let f = f_index(&good).unwrap();
    assert!(ssp_criterion(&f, 6).verdict);
    assert!(ssp_oracle(&good).unwrap().verdict);

    finish(4, "strong Stanley pair", start, Duration::from_secs(1));
}

#[test]
fn criterion_05_codim4_twins() {
    let start = Instant::now();
    let (first, second) = example412_fixture();

    assert!(first.is_strongly_stable());
    assert!(second.is_strongly_stable());
    assert_eq!(first.num_generators(), 33);
    assert_eq!(second.num_generators(), 33);

    assert_eq!(ek_betti(&first).unwrap(), ek_betti(&second).unwrap());

    for ideal in [&first, &second] {
        let h = hilbert_function(ideal).unwrap();
        assert_eq!(h.socle_degree(), 12);
        let f = f_index(ideal).unwrap();
        assert!(ssp_criterion(&f, 12).verdict);
    }
    assert_ne!(first, second);
    finish(5, "codim-4 twin fixtures", start, Duration::from_secs(5));
}

#[test]
fn criterion_06_criterion_oracle_fuzz() {
    let start = Instant::now();
    let mut rng = ChaCha20Rng::seed_from_u64(2024);
    let options = CorpusOptions::default();
    let mut verdict_counts = [0usize; 3];
    for sample in 0..500 {
        let n = rng.gen_range(2..=4);
        let ideal = random_strongly_stable(&mut rng, n, &options);
        let f = f_index(&ideal).unwrap();
        let h = hilbert_function(&ideal).unwrap();
        let t = h.socle_degree() as u32;
        let r1 = reduction_number(&ideal, 1).unwrap();

        let wlp_c = wlp_criterion(&f, r1).verdict;
        let wlp_o = wlp_oracle(&ideal).unwrap().verdict;
        let wlp_b = wlp_betti_criterion(&ek_betti(&ideal).unwrap());
        assert_eq!(wlp_c, wlp_o, "WLP disagreement on sample {sample}: {ideal}");
        assert_eq!(wlp_c, wlp_b, "WLP Betti disagreement on sample {sample}: {ideal}");

        let slp_c = slp_criterion(&f, r1).verdict;
        let slp_o = slp_oracle(&ideal).unwrap().verdict;
        assert_eq!(slp_c, slp_o, "SLP disagreement on sample {sample}: {ideal}");

        let ssp_c = ssp_criterion(&f, t).verdict;
        let ssp_o = ssp_oracle(&ideal).unwrap().verdict;
        let ssp_s = ssp_via_slp_symmetry(&ideal).unwrap();
        assert_eq!(ssp_c, ssp_o, "SSP disagreement on sample {sample}: {ideal}");
        assert_eq!(ssp_c, ssp_s, "SSP symmetry disagreement on sample {sample}: {ideal}");

        // Implication chain.
        assert!(!ssp_c || slp_c, "SSP without SLP on {ideal}");
        assert!(!slp_c || wlp_c, "SLP without WLP on {ideal}");

        // Under WLP a weak decrease certifies d > r1.
        if wlp_c {
            for d in 1..=t as usize + 1 {
                if h.value(d - 1) >= h.value(d) {
                    assert!(d as u32 > r1, "weak decrease at {d} <= r1 = {r1} on {ideal}");
                }
            }
        }

        verdict_counts[0] += wlp_c as usize;
        verdict_counts[1] += slp_c as usize;
        verdict_counts[2] += ssp_c as usize;
    }
    println!(
        "  fuzz verdicts over 500 samples: wlp {}, slp {}, ssp {}",
        verdict_counts[0], verdict_counts[1], verdict_counts[2]
    );
    // The corpus must exercise both verdicts of every property.
    for (i, &count) in verdict_counts.iter().enumerate() {
        assert!(count > 0 && count < 500, "degenerate corpus for property {i}");
    }
    finish(6, "criterion/oracle fuzz", start, Duration::from_secs(120));
}

#[test]
fn criterion_07_gin_engine() {
    let start = Instant::now();

    // Twenty seeds, one answer.
    let quadrics = [
        Polynomial::monomial(Monomial::new([2u32, 0])),
        Polynomial::monomial(Monomial::new([0u32, 2])),
    ];
    let expected = ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]);
    for seed in 0..20 {
        let options = GinOptions {
            seed,
            ..GinOptions::default()
        };
        assert_eq!(gin(&quadrics, &options).unwrap(), expected, "seed {seed}");
    }

    // gin fixes every strongly stable fixture.
    let (twin_a, twin_b) = example412_fixture();
    for fixture in [
        showcase_ideal(),
        showcase_stanley_variant(),
        codim3_wlp_ideal(),
        twin_a,
        twin_b,
    ] {
        let computed = gin(&as_polynomials(&fixture), &GinOptions::default()).unwrap();
        assert_eq!(computed, fixture, "gin must fix {fixture}");
    }

    // Hilbert functions agree between I and gin(I), degree by degree.
    let mut rng = ChaCha20Rng::seed_from_u64(77);
    for sample in 0..50 {
        let count = rng.gen_range(2..=4);
        let gens = random_homogeneous_family(&mut rng, 3, count, 3);
        let direct = buchberger(&gens).initial_ideal();
        let seed = rng.gen();
        let generic = gin(
            &gens,
            &GinOptions {
                seed,
                ..GinOptions::default()
            },
        )
        .unwrap();
        for d in 0..=8u32 {
            assert_eq!(
                direct.standard_monomials(d).len(),
                generic.standard_monomials(d).len(),
                "Hilbert value mismatch at degree {d} on sample {sample}"
            );
        }
    }
    finish(7, "gin engine", start, Duration::from_secs(120));
}

#[test]
fn criterion_08_reduction_numbers() {
    let start = Instant::now();
    let mut rng = ChaCha20Rng::seed_from_u64(88);
    let mut accepted = 0;
    let mut wlp_samples = 0;
    while accepted < 50 {
        let n = rng.gen_range(2..=3usize);
        let count = rng.gen_range(n..=n + 2);
        let gens = random_homogeneous_family(&mut rng, n, count, 3);
        let initial = buchberger(&gens).initial_ideal();
        if !initial.is_artinian() {
            continue;
        }
        accepted += 1;
        let seed: u64 = rng.gen();
        let generic = gin(
            &gens,
            &GinOptions {
                seed,
                ..GinOptions::default()
            },
        )
        .unwrap();
        for i in 0..n {
            let from_gin = reduction_number(&generic, i).unwrap();
            let direct = reduction_number_direct(&gens, i, seed.wrapping_add(i as u64), 100).unwrap();
            assert_eq!(from_gin, direct, "reduction number r_{i} mismatch");
        }
        // Under WLP the first reduction number is visible in the Hilbert
        // function.
        if wlp_oracle(&generic).unwrap().verdict {
            wlp_samples += 1;
            let h = hilbert_function(&generic).unwrap();
            assert_eq!(
                r1_from_hf_wlp(&h).unwrap(),
                reduction_number(&generic, 1).unwrap()
            );
        }
    }
    println!("  reduction-number corpus: 50 samples, {wlp_samples} with WLP");
    assert!(wlp_samples > 0);
    finish(8, "reduction numbers", start, Duration::from_secs(120));
}

#[test]
fn criterion_09_codim3_round_trips() {
    let start = Instant::now();
    let mut rng = ChaCha20Rng::seed_from_u64(99);
    let options = CorpusOptions::default();
    let mut slp_count = 0;
    let mut ssp_count = 0;
    let mut flag_checks = 0;
    for _ in 0..200 {
        let sample = random_strongly_stable(&mut rng, 3, &options);
        let h = hilbert_function(&sample).unwrap();
        let betti = ek_betti(&sample).unwrap();

        if wlp_oracle(&sample).unwrap().verdict {
            // Fixed point: gin fixes strongly stable ideals, so the Betti
            // reconstruction returns the table itself.
            assert_eq!(
                betti_gin_from_betti_i(&betti, &h).unwrap(),
                betti,
                "Betti fixed point failed on {sample}"
            );

            // Flag test agreement whenever the Hilbert function is realized
            // by some strong Stanley algebra.
            if h.is_symmetric() {
                if let Ok(reference) = reconstruct_gin_ssp(&h) {
                    let _ = reference;
                    flag_checks += 1;
                    let f = f_index(&sample).unwrap();
                    let t = h.socle_degree() as u32;
                    assert_eq!(
                        ssp_flag_test(&sample, &h).unwrap(),
                        ssp_criterion(&f, t).verdict,
                        "flag test disagreement on {sample}"
                    );
                }
            }
        }
        if slp_oracle(&sample).unwrap().verdict {
            slp_count += 1;
            assert_eq!(
                reconstruct_gin_slp(&betti, &h).unwrap(),
                sample,
                "SLP round trip failed on {sample}"
            );
        }
        if ssp_oracle(&sample).unwrap().verdict {
            ssp_count += 1;
            assert_eq!(
                reconstruct_gin_ssp(&h).unwrap(),
                sample,
                "SSP round trip failed on {sample}"
            );
        }
    }
    println!(
        "  codim-3 corpus: 200 samples, {slp_count} SLP round trips, {ssp_count} SSP round trips, {flag_checks} flag checks"
    );
    assert!(slp_count >= 20, "too few SLP samples to be meaningful");
    assert!(ssp_count >= 5, "too few SSP samples to be meaningful");
    finish(9, "codim-3 round trips", start, Duration::from_secs(120));
}

#[test]
fn criterion_10_betti_oracle_cross_check() {
    let start = Instant::now();

    // Koszul homology equals the Eliahou-Kervaire formula on stable input.
    let mut rng = ChaCha20Rng::seed_from_u64(1010);
    let options = CorpusOptions {
        max_socle: 6,
        ..CorpusOptions::default()
    };
    for sample in 0..30 {
        let ideal = random_strongly_stable(&mut rng, 3, &options);
        let socle = hilbert_function(&ideal).unwrap().socle_degree();
        let koszul = koszul_betti(&ideal, socle + 3).unwrap();
        let ek = ek_betti(&ideal).unwrap();
        assert_eq!(koszul, ek, "Betti oracle mismatch on sample {sample}: {ideal}");
    }

    // Cancellation feasibility between the Betti table of I and of gin(I).
    let mut pairs = 0;
    while pairs < 20 {
        let count = rng.gen_range(3..=4);
        let gens = random_homogeneous_family(&mut rng, 3, count, 3);
        let initial = buchberger(&gens).initial_ideal();
        if !initial.is_artinian() {
            continue;
        }
        pairs += 1;
        let socle = hilbert_function(&initial).unwrap().socle_degree();
        let b_i = koszul_betti_of_polynomials(&gens, socle + 3).unwrap();
        let seed: u64 = rng.gen();
        let generic = gin(
            &gens,
            &GinOptions {
                seed,
                ..GinOptions::default()
            },
        )
        .unwrap();
        let b_gin = ek_betti(&generic).unwrap();
        assert!(
            cancellation_check(&b_i, &b_gin).is_some(),
            "cancellation infeasible for pair {pairs}"
        );
    }
    finish(10, "Betti oracle cross-check", start, Duration::from_secs(300));
}

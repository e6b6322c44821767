//! Oracle checks: root counts against polynomials built from known
//! roots, and the ratio-test sufficiency on a randomized corpus.

use exact_core::{Poly, Rat};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use realroots::{
    hutchinson_check_window, is_real_rooted_nonpositive, real_roots_with_multiplicity,
    sturm_count, Endpoint,
};

fn rand_rat(rng: &mut StdRng, lo: i64, hi: i64, max_den: i64) -> Rat {
    Rat::new(rng.gen_range(lo..=hi), rng.gen_range(1..=max_den))
}

/// Builds `lc * prod (x - r_i)` from explicit roots.
fn poly_from_roots(lc: &Rat, roots: &[Rat]) -> Poly {
    let mut p = Poly::constant(lc.clone());
    for r in roots {
        p = &p * &Poly::new(vec![-r, Rat::one()]);
    }
    p
}

#[test]
fn sturm_count_matches_known_roots() {
    let mut rng = StdRng::seed_from_u64(0x5742_1001);
    for _ in 0..200 {
        let deg = rng.gen_range(1..=6);
        let mut roots = Vec::with_capacity(deg);
        while roots.len() < deg {
            let r = rand_rat(&mut rng, -6, 6, 4);
            roots.push(r.clone());
            // occasionally repeat a root to exercise multiplicities
            if roots.len() < deg && rng.gen_bool(0.3) {
                roots.push(r);
            }
        }
        roots.truncate(deg);
        let lc = loop {
            let c = rand_rat(&mut rng, -3, 3, 2);
            if !c.is_zero() {
                break c;
            }
        };
        let p = poly_from_roots(&lc, &roots);

        // whole line: distinct count and multiplicity count
        let mut distinct = roots.clone();
        distinct.sort();
        distinct.dedup();
        assert_eq!(
            sturm_count(&p, Endpoint::NegInf, Endpoint::PosInf).unwrap(),
            distinct.len()
        );
        assert_eq!(real_roots_with_multiplicity(&p).unwrap(), deg);

        // random half-open window (lo, hi]
        let a = rand_rat(&mut rng, -8, 8, 3);
        let b = rand_rat(&mut rng, -8, 8, 3);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        if lo == hi {
            continue;
        }
        let expect = distinct.iter().filter(|r| **r > lo && **r <= hi).count();
        let got = sturm_count(
            &p,
            Endpoint::Finite(lo.clone()),
            Endpoint::Finite(hi.clone()),
        )
        .unwrap();
        assert_eq!(got, expect, "roots {roots:?} window ({lo}, {hi}]");
    }
}

/// Draws a positive-coefficient polynomial whose consecutive ratios are
/// all at least 4 (so every section is forced to be real-rooted).
fn ratio_dominated_poly(rng: &mut StdRng, deg: usize) -> Vec<Rat> {
    let mut coeffs = Vec::with_capacity(deg + 1);
    coeffs.push(rand_rat(rng, 1, 5, 3));
    if deg >= 1 {
        coeffs.push(rand_rat(rng, 1, 5, 3));
    }
    for k in 2..=deg {
        // a_k = a_{k-1}^2 / (a_{k-2} * ratio), ratio >= 4
        let ratio = &Rat::from_int(4) + &rand_rat(rng, 0, 3, 2);
        let prev = &coeffs[k - 1];
        let prev2 = &coeffs[k - 2];
        coeffs.push(prev * prev / (prev2 * &ratio));
    }
    coeffs
}

#[test]
fn ratio_condition_forces_real_roots_with_all_sections() {
    let mut rng = StdRng::seed_from_u64(0x5742_1002);
    for _ in 0..40 {
        let deg = rng.gen_range(2..=8);
        let coeffs = ratio_dominated_poly(&mut rng, deg);
        let rep = hutchinson_check_window(&coeffs).unwrap();
        assert!(rep.passes_hutchinson);

        let p = Poly::new(coeffs.clone());
        assert!(is_real_rooted_nonpositive(&p).unwrap().all_real);

        // every contiguous section, with the power of x factored out
        for m in 0..=deg {
            for n in m..=deg {
                let section = Poly::new(coeffs[m..=n].to_vec());
                assert!(
                    is_real_rooted_nonpositive(&section).unwrap().all_real,
                    "section {m}..={n} of {coeffs:?}"
                );
            }
        }
    }
}

#[test]
fn e1_prefix_passes_ratio_test() {
    use genfun::expand_e1;
    let qs = vec![
        Rat::from_int(4),
        Rat::new(9, 2),
        Rat::from_int(5),
        Rat::from_int(4),
    ];
    let s = expand_e1(&qs, 6).unwrap();
    let rep = realroots::hutchinson_check(&s).unwrap();
    assert!(rep.passes_hutchinson);
    // the ratio at index n recovers q_n exactly
    assert_eq!(rep.ratios, qs);
}

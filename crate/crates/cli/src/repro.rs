//! Canned verification scenarios with machine-readable step reports.

use exact_core::{
    pole_power_series, series_derivative_shifted, series_product, Poly, Rat,
    SeriesPrefix,
};
use genfun::{expand_aswe, expand_e1, ASWEParams, CoeffSeq};
use preserver::{conjecture_scan, h2n3_coefficient, hadamard, lemma2_q, tt2_witness, SubReport};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use realroots::hutchinson_check;
use serde::Serialize;
use serde_json::json;
use tpcheck::minor_scan;

#[derive(Debug, Serialize)]
pub struct StepReport {
    pub name: String,
    pub pass: bool,
    pub info: serde_json::Value,
}

#[derive(Debug, Serialize)]
pub struct ReproReport {
    pub target: String,
    pub pass: bool,
    pub steps: Vec<StepReport>,
}

impl ReproReport {
    fn new(target: &str) -> Self {
        ReproReport {
            target: target.to_owned(),
            pass: true,
            steps: Vec::new(),
        }
    }

    fn step(&mut self, name: &str, pass: bool, info: serde_json::Value) {
        self.pass &= pass;
        self.steps.push(StepReport {
            name: name.to_owned(),
            pass,
            info,
        });
    }
}

fn rand_rat(rng: &mut StdRng, lo: i64, hi: i64, max_den: i64) -> Rat {
    Rat::new(rng.gen_range(lo..=hi), rng.gen_range(1..=max_den))
}

fn rats(vals: &[(i64, i64)]) -> Vec<Rat> {
    vals.iter().map(|&(p, q)| Rat::new(p, q)).collect()
}

/// The index multiplier applied to the coefficients of
/// `1/((1-z)(2-z))`: image prefix, series identity of the image's
/// generating function, and a negative-minor witness.
pub fn counterexample() -> ReproReport {
    let mut rep = ReproReport::new("counterexample");
    let order = 20;

    let params = ASWEParams::new(
        Rat::new(1, 2),
        0,
        Rat::zero(),
        vec![],
        vec![Rat::one(), Rat::new(1, 2)],
    );
    let b = expand_aswe(&params, order).unwrap();
    let ks = CoeffSeq::from_rats(
        (0..order as i64).map(Rat::from_int).collect(),
        false,
    );
    let image = hadamard(&ks, &b);

    let expect_prefix = rats(&[(0, 1), (3, 4), (7, 4), (45, 16), (31, 8)]);
    let got_prefix = &image.coeffs()[..5];
    rep.step(
        "image prefix is (0, 3/4, 7/4, 45/16, 31/8, ...)",
        got_prefix == expect_prefix.as_slice(),
        json!({
            "got": got_prefix.iter().map(|r| r.to_string()).collect::<Vec<_>>()
        }),
    );

    // z f'(z) = z (3 - 2z) / ((1-z)^2 (2-z)^2), checked as series:
    // 1/((1-z)^2 (2-z)^2) = (1/4) / ((1-z)^2 (1-z/2)^2)
    let lhs = series_derivative_shifted(b.prefix());
    let squared_poles = series_product(
        &pole_power_series(&Rat::one(), 2, order),
        &pole_power_series(&Rat::new(1, 2), 2, order),
    )
    .scale(&Rat::new(1, 4));
    let numerator = SeriesPrefix::from_poly(
        &Poly::new(vec![Rat::zero(), Rat::from_int(3), Rat::from_int(-2)]),
        order,
    );
    let rhs = series_product(&squared_poles, &numerator);
    rep.step(
        "z f'(z) equals z(3 - 2z)/((1-z)^2 (2-z)^2) to order 20",
        lhs.coeffs() == rhs.coeffs(),
        json!({ "order": order, "numerator": "z(3 - 2z)" }),
    );

    match minor_scan(&image, 4, 12, 12) {
        Ok(scan) => {
            let pass = scan.is_violated() && scan.witness.is_some();
            rep.step(
                "minor scan finds a negative witness",
                pass,
                serde_json::to_value(&scan).unwrap(),
            );
        }
        Err(e) => rep.step("minor scan finds a negative witness", false, json!(e.to_string())),
    }
    rep
}

/// The pole-exponential convolution closed form, re-verified to order
/// 30 for orders 2..=5 with fixed and sampled parameters.
pub fn lemma2(seed: u64) -> ReproReport {
    let mut rep = ReproReport::new("lemma2");
    let mut rng = StdRng::seed_from_u64(seed);
    for k in 2..=5usize {
        let mut checked = 0;
        let mut pass = true;
        let mut cases: Vec<(Rat, Rat, Rat)> = vec![
            (Rat::one(), Rat::one(), Rat::one()),
            (Rat::new(1, 2), Rat::from_int(3), Rat::new(1, 5)),
        ];
        for _ in 0..3 {
            cases.push((
                rand_rat(&mut rng, 1, 4, 4),
                rand_rat(&mut rng, 1, 4, 4),
                rand_rat(&mut rng, 1, 4, 4),
            ));
        }
        for (beta, gamma, delta) in cases {
            match lemma2_q(k, &beta, &gamma, &delta, 30) {
                Ok(result) => {
                    checked += 1;
                    pass &= result.identity_checked_to == 30;
                }
                Err(e) => {
                    pass = false;
                    rep.step("identity failure", false, json!(e.to_string()));
                }
            }
        }
        rep.step(
            &format!("closed form verified for k = {k}"),
            pass,
            json!({ "match": pass, "order": 30, "cases": checked }),
        );
    }
    rep
}

/// The odd-pole sign witness: closed form against full assembly, and
/// the negative sign at the scale the argument needs.
pub fn h_sign(seed: u64) -> ReproReport {
    let mut rep = ReproReport::new("h-sign");
    let mut rng = StdRng::seed_from_u64(seed);

    let h = h2n3_coefficient(
        3,
        &Rat::one(),
        &Rat::one(),
        &Rat::one(),
        &Rat::from_int(100),
        &Rat::new(1, 100),
    );
    match h {
        Ok(v) => rep.step(
            "sign at n=3, gamma=100, delta=1/100, beta=1, B0=B1=1",
            v.signum() == -1,
            json!({ "h": v.to_string(), "sign": v.signum() }),
        ),
        Err(e) => rep.step("closed form at the decisive scale", false, json!(e.to_string())),
    }

    for n in [3usize, 5] {
        let mut pass = true;
        let mut checked = 0;
        for _ in 0..10 {
            let b0 = rand_rat(&mut rng, 1, 6, 4);
            let b1 = rand_rat(&mut rng, 1, 6, 4);
            let beta = rand_rat(&mut rng, 1, 3, 3);
            let gamma = rand_rat(&mut rng, 1, 5, 3);
            let delta = rand_rat(&mut rng, 1, 5, 3);
            match h2n3_coefficient(n, &b0, &b1, &beta, &gamma, &delta) {
                Ok(_) => checked += 1,
                Err(_) => pass = false,
            }
        }
        rep.step(
            &format!("closed form equals assembled coefficient for n = {n}"),
            pass,
            json!({ "samples": checked }),
        );
    }
    rep
}

/// The sufficiency inequalities at the boundary and on sampled
/// parameter quadruples.
pub fn tt2_witness_scenario(seed: u64) -> ReproReport {
    let mut rep = ReproReport::new("tt2-witness");
    let mut rng = StdRng::seed_from_u64(seed);

    match tt2_witness(&Rat::from_int(4), &Rat::from_int(4), &Rat::one(), &Rat::one()) {
        Ok(w) => {
            let pass = w.alpha1.as_rat() == Some(&Rat::new(-2, 3))
                && w.alpha2.as_rat() == Some(&Rat::from_int(-2))
                && w.alpha1.mul_rat(&w.b.recip()).as_rat() == Some(&Rat::new(-1, 6))
                && w.flags.all();
            rep.step(
                "boundary b = 4: alpha1 = -2/3, alpha2 = -2, alpha1/b = -1/6",
                pass,
                serde_json::to_value(&w).unwrap(),
            );
        }
        Err(e) => rep.step("boundary b = 4", false, json!(e.to_string())),
    }

    let mut accepted = 0;
    let mut all_pass = true;
    while accepted < 40 {
        let b = &Rat::from_int(4) + &rand_rat(&mut rng, 0, 6, 3);
        let a = &Rat::from_int(4) + &rand_rat(&mut rng, 0, 8, 2);
        let q2 = &Rat::one() + &rand_rat(&mut rng, 0, 4, 2);
        let q3 = &Rat::one() + &rand_rat(&mut rng, 0, 4, 2);
        match tt2_witness(&a, &b, &q2, &q3) {
            Ok(w) => {
                accepted += 1;
                all_pass &= w.flags.all();
            }
            Err(_) => continue, // precondition miss, resample
        }
    }
    rep.step(
        "sampled quadruples satisfy every inequality",
        all_pass,
        json!({ "samples": accepted }),
    );
    rep
}

/// The ratio-4 family: its prefix ratios, and the remainder grid.
pub fn e1_hutchinson() -> ReproReport {
    let mut rep = ReproReport::new("e1-hutchinson");
    let qs = vec![Rat::from_int(4); 5];
    let a = expand_e1(&qs, 7).unwrap();

    match hutchinson_check(&a) {
        Ok(ratio) => rep.step(
            "every consecutive ratio is exactly 4",
            ratio.passes_hutchinson && ratio.ratios.iter().all(|r| *r == Rat::from_int(4)),
            serde_json::to_value(&ratio).unwrap(),
        ),
        Err(e) => rep.step("ratio check", false, json!(e.to_string())),
    }

    match conjecture_scan(&a, 2, &[2, 3, 4]) {
        Ok(v) => {
            let pass = v.details.iter().all(|d| match &d.report {
                SubReport::Cell(c) => {
                    c.hutchinson_passes == Some(true) && c.real_rooted == Some(true)
                }
                _ => false,
            });
            rep.step(
                "every remainder truncation passes both tests",
                pass,
                serde_json::to_value(&v).unwrap(),
            );
        }
        Err(e) => rep.step("remainder grid", false, json!(e.to_string())),
    }
    rep
}

//! The non-product families: the `q`-parameterized entire functions,
//! the partial theta function, and the seven derived test sequences.

use exact_core::{Rat, SeriesPrefix};

use crate::seq::{CoeffSeq, FamilyTag, ParamsEcho};
use crate::GenfunError;

/// Expands `a_0 = a_1 = 1`, `a_k = 1/(q_2^{k-1} q_3^{k-2} ... q_k)`.
///
/// `qlist` supplies `q_2, q_3, ...` in order; computing `n` coefficients
/// needs `q_k` up to `k = n - 1`, so `qlist.len() >= n - 2`.
pub fn expand_e1(qlist: &[Rat], n: usize) -> Result<CoeffSeq, GenfunError> {
    assert!(n >= 1, "truncation order must be >= 1");
    if n > qlist.len() + 2 {
        return Err(GenfunError::MissingE1Parameter {
            requested: n,
            needed: n - 1,
            provided: qlist.len(),
        });
    }
    for q in qlist {
        if !q.is_positive() {
            return Err(GenfunError::InvalidParameter {
                name: "q_k",
                value: q.to_string(),
                constraint: "q_k > 0",
            });
        }
    }

    let mut coeffs = Vec::with_capacity(n);
    coeffs.push(Rat::one());
    if n >= 2 {
        coeffs.push(Rat::one());
    }
    // a_k = a_{k-1} / (q_2 q_3 ... q_k)
    let mut q_prod = Rat::one();
    for k in 2..n {
        q_prod *= &qlist[k - 2];
        let prev = coeffs[k - 1].clone();
        coeffs.push(prev / &q_prod);
    }

    Ok(CoeffSeq::new(
        SeriesPrefix::new(coeffs, false),
        FamilyTag::E1,
        ParamsEcho::E1 {
            qs: qlist.to_vec(),
        },
    ))
}

/// Expands the partial theta function: coefficient `j` is `a^{-j^2}`.
/// Requires `a > 1`.
pub fn partial_theta(a: &Rat, n: usize) -> Result<CoeffSeq, GenfunError> {
    assert!(n >= 1, "truncation order must be >= 1");
    if *a <= Rat::one() {
        return Err(GenfunError::InvalidParameter {
            name: "a",
            value: a.to_string(),
            constraint: "a > 1",
        });
    }
    let inv = a.recip();
    let mut coeffs = Vec::with_capacity(n);
    coeffs.push(Rat::one());
    // a^{-j^2} = a^{-(j-1)^2} * a^{-(2j-1)}
    let mut step = Rat::one();
    for _j in 1..n {
        step = step * &inv * &inv;
        let odd_power = &step * a; // a^{-(2j-1)}
        let prev = coeffs.last().unwrap().clone();
        coeffs.push(prev * odd_power);
    }

    Ok(CoeffSeq::new(
        SeriesPrefix::new(coeffs, false),
        FamilyTag::PartialTheta,
        ParamsEcho::PartialTheta { a: a.clone() },
    ))
}

/// Number of derived test families.
pub const L1_FAMILY_COUNT: usize = 7;

/// The seven derived test sequences, in order:
///
/// 1. all ones
/// 2. `(k)`
/// 3. `(k + 1)`
/// 4. `((c^{k+1} - 1)/(c - 1))`
/// 5. `((c^k - 1)/(c - 1))`
/// 6. `(1, d+1, d+1, ...)`
/// 7. delayed step: `n + 1` zeros, then ones
///
/// Requires `c > 0`, `c != 1`, `d >= 0`.
pub fn lemma_l1_sequences(c: &Rat, d: &Rat, n: usize, len: usize) -> Vec<CoeffSeq> {
    assert!(c.is_positive() && *c != Rat::one(), "need c > 0, c != 1");
    assert!(!d.is_negative(), "need d >= 0");
    assert!(len >= 1, "truncation order must be >= 1");

    let mut out = Vec::with_capacity(L1_FAMILY_COUNT);
    let echo = |which: u8| ParamsEcho::L1 {
        which,
        c: c.clone(),
        d: d.clone(),
        n,
    };
    let seq = |which: u8, coeffs: Vec<Rat>| {
        CoeffSeq::new(
            SeriesPrefix::new(coeffs, false),
            FamilyTag::L1Family,
            echo(which),
        )
    };

    out.push(seq(1, vec![Rat::one(); len]));
    out.push(seq(2, (0..len).map(|k| Rat::from_int(k as i64)).collect()));
    out.push(seq(
        3,
        (0..len).map(|k| Rat::from_int(k as i64 + 1)).collect(),
    ));

    let c_minus_one = c - &Rat::one();
    // family 4: (c^{k+1} - 1)/(c - 1); family 5: (c^k - 1)/(c - 1)
    let mut f4 = Vec::with_capacity(len);
    let mut f5 = Vec::with_capacity(len);
    let mut c_pow = Rat::one();
    for _ in 0..len {
        f5.push((&c_pow - &Rat::one()) / &c_minus_one);
        c_pow *= c;
        f4.push((&c_pow - &Rat::one()) / &c_minus_one);
    }
    out.push(seq(4, f4));
    out.push(seq(5, f5));

    let mut f6 = vec![&Rat::one() + d; len];
    f6[0] = Rat::one();
    out.push(seq(6, f6));

    let f7 = (0..len)
        .map(|k| {
            if k <= n {
                Rat::zero()
            } else {
                Rat::one()
            }
        })
        .collect();
    out.push(seq(7, f7));

    out
}

//! Exact determinants for small rational matrices.
//!
//! The production kernel clears denominators per matrix, then runs
//! Bareiss fraction-free elimination over integers, so no rational
//! arithmetic happens inside the elimination and every sign is exact.
//! A machine-integer (`i128`) path with overflow checks handles the
//! common small cases; anything that overflows falls back to big
//! integers.

use exact_core::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// Naive cofactor expansion. Exponential; kept as an independent oracle
/// for the elimination kernel.
pub fn det_cofactor(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    assert!(n >= 1 && m.iter().all(|r| r.len() == n), "square matrix");
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = Rat::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let sub: Vec<Vec<Rat>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &det_cofactor(&sub);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= &term;
        }
    }
    total
}

/// Exact determinant by denominator clearing plus fraction-free
/// elimination.
pub fn det_exact(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    assert!(n >= 1 && m.iter().all(|r| r.len() == n), "square matrix");

    let mut lcm = BigInt::one();
    for row in m {
        for v in row {
            lcm = lcm.lcm(v.denom());
        }
    }

    let lifted: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| v.numer() * (&lcm / v.denom()))
                .collect()
        })
        .collect();

    let det_int = match as_i128_matrix(&lifted).and_then(bareiss_i128) {
        Some(d) => BigInt::from(d),
        None => bareiss_big(lifted),
    };

    let mut scale = BigInt::one();
    for _ in 0..n {
        scale *= &lcm;
    }
    Rat::from_big(det_int, scale)
}

fn as_i128_matrix(m: &[Vec<BigInt>]) -> Option<Vec<Vec<i128>>> {
    m.iter()
        .map(|row| row.iter().map(BigInt::to_i128).collect())
        .collect()
}

/// Bareiss elimination over `i128` with overflow checks; `None` means
/// "retry with big integers".
pub(crate) fn bareiss_i128(mut a: Vec<Vec<i128>>) -> Option<i128> {
    let n = a.len();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for p in 0..n.saturating_sub(1) {
        if a[p][p] == 0 {
            let Some(r) = (p + 1..n).find(|&r| a[r][p] != 0) else {
                return Some(0);
            };
            a.swap(p, r);
            sign = -sign;
        }
        for i in p + 1..n {
            for j in p + 1..n {
                let lhs = a[p][p].checked_mul(a[i][j])?;
                let rhs = a[i][p].checked_mul(a[p][j])?;
                // exact by the Bareiss identity
                a[i][j] = lhs.checked_sub(rhs)? / prev;
            }
            a[i][p] = 0;
        }
        prev = a[p][p];
    }
    Some(sign * a[n - 1][n - 1])
}

pub(crate) fn bareiss_big(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut negate = false;
    let mut prev = BigInt::one();
    for p in 0..n.saturating_sub(1) {
        if a[p][p].is_zero() {
            let Some(r) = (p + 1..n).find(|&r| !a[r][p].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(p, r);
            negate = !negate;
        }
        for i in p + 1..n {
            for j in p + 1..n {
                a[i][j] = (&a[p][p] * &a[i][j] - &a[i][p] * &a[p][j]) / &prev;
            }
            a[i][p] = BigInt::zero();
        }
        prev = a[p][p].clone();
    }
    let d = std::mem::replace(&mut a[n - 1][n - 1], BigInt::zero());
    if negate {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[(i64, i64)]]) -> Vec<Vec<Rat>> {
        rows.iter()
            .map(|r| r.iter().map(|&(p, q)| Rat::new(p, q)).collect())
            .collect()
    }

    #[test]
    fn known_small_determinants() {
        assert_eq!(det_exact(&mat(&[&[(7, 2)]])), Rat::new(7, 2));
        // [[1, 2], [3, 4]] -> -2
        assert_eq!(
            det_exact(&mat(&[&[(1, 1), (2, 1)], &[(3, 1), (4, 1)]])),
            Rat::from_int(-2)
        );
        // singular with zero pivot on the way
        assert_eq!(
            det_exact(&mat(&[
                &[(0, 1), (1, 1), (1, 1)],
                &[(0, 1), (0, 1), (1, 1)],
                &[(0, 1), (0, 1), (0, 1)]
            ])),
            Rat::zero()
        );
        // rational entries
        assert_eq!(
            det_exact(&mat(&[&[(1, 2), (3, 4)], &[(0, 1), (1, 2)]])),
            Rat::new(1, 4)
        );
    }

    #[test]
    fn pivot_swap_sign() {
        // rows swapped identity
        let m = mat(&[&[(0, 1), (1, 1)], &[(1, 1), (0, 1)]]);
        assert_eq!(det_exact(&m), Rat::from_int(-1));
        assert_eq!(det_cofactor(&m), Rat::from_int(-1));
    }

    #[test]
    fn big_entries_take_bigint_path() {
        // entries around 2^70 force the fallback
        let big = Rat::from_big_int(BigInt::from(1u128 << 70));
        let one = Rat::one();
        let m = vec![
            vec![big.clone(), one.clone(), one.clone()],
            vec![one.clone(), big.clone(), one.clone()],
            vec![one.clone(), one.clone(), big.clone()],
        ];
        assert_eq!(det_exact(&m), det_cofactor(&m));
    }

    #[test]
    fn matches_cofactor_on_random_rationals() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(0x7055_0001);
        for _ in 0..200 {
            let n = rng.gen_range(1..=5);
            let m: Vec<Vec<Rat>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| Rat::new(rng.gen_range(-9..=9), rng.gen_range(1..=9)))
                        .collect()
                })
                .collect();
            assert_eq!(det_exact(&m), det_cofactor(&m));
        }
    }
}

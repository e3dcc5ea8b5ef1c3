//! Small integer number theory: squarefree parts, prime powers, residue symbols.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;

/// Squarefree part of a nonzero integer, keeping its sign: `-12 ↦ -3`, `18 ↦ 2`.
///
/// Uses trial division up to `10⁶`; a cofactor left over is accepted if it is
/// a perfect square or small enough to have at most two prime factors, each
/// above the trial bound (hence distinct unless it is a square).
pub fn squarefree_part(n: &BigInt) -> Result<BigInt> {
    if n.is_zero() {
        return Err(Error::InvalidInput("squarefree part of 0".into()));
    }
    let sign = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut m = n.abs();
    let mut part = BigInt::one();
    let mut p = 2u64;
    while p <= TRIAL_DIVISION_LIMIT {
        let bp = BigInt::from(p);
        if &bp * &bp > m {
            break;
        }
        let mut e = 0u32;
        while (&m % &bp).is_zero() {
            m /= &bp;
            e += 1;
        }
        if e % 2 == 1 {
            part *= &bp;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m.is_one() {
        return Ok(sign * part);
    }
    let r = m.sqrt();
    if &r * &r == m {
        return Ok(sign * part);
    }
    let limit = BigInt::from(TRIAL_DIVISION_LIMIT);
    if m <= &limit * &limit * &limit {
        return Ok(sign * part * m);
    }
    Err(Error::TooLarge { what: "cofactor for squarefree extraction", bound: TRIAL_DIVISION_LIMIT as usize })
}

pub fn is_squarefree(d: i64) -> bool {
    d != 0 && squarefree_part(&BigInt::from(d)).map(|s| s == BigInt::from(d)).unwrap_or(false)
}

/// `Some((p, i))` when `n = pⁱ` with `p` prime and `i >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n && !n.is_multiple_of(p) {
        p += 1;
    }
    if !n.is_multiple_of(p) {
        p = n;
    }
    let mut m = n;
    let mut i = 0;
    while m.is_multiple_of(p) {
        m /= p;
        i += 1;
    }
    (m == 1).then_some((p, i))
}

/// Legendre symbol `(a / p)` for an odd prime `p`, by Euler's criterion.
pub fn legendre(a: i64, p: u64) -> i64 {
    let p_big = BigInt::from(p);
    let a = BigInt::from(a).mod_floor(&p_big);
    if a.is_zero() {
        return 0;
    }
    let r = a.modpow(&BigInt::from((p - 1) / 2), &p_big);
    if r.is_one() {
        1
    } else {
        -1
    }
}

/// Multiplicative inverse of `a` modulo `n`, if it exists.
pub fn inverse_mod(a: i64, n: u64) -> Option<u64> {
    let n_i = n as i128;
    let e = (a as i128).extended_gcd(&n_i);
    (e.gcd == 1).then(|| e.x.rem_euclid(n_i) as u64)
}

/// The units of `Z/n`.
pub fn units_mod(n: u64) -> Vec<u64> {
    (1..n.max(2)).filter(|&t| t.gcd(&n) == 1).collect()
}

pub fn to_i64(x: &BigInt) -> Result<i64> {
    x.to_i64().ok_or_else(|| Error::InvalidInput(format!("{x} does not fit in 64 bits")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sf(n: i64) -> i64 {
        to_i64(&squarefree_part(&BigInt::from(n)).unwrap()).unwrap()
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(sf(-12), -3);
        assert_eq!(sf(18), 2);
        assert_eq!(sf(1), 1);
        assert_eq!(sf(-1), -1);
        assert_eq!(sf(49), 1);
        assert_eq!(sf(-108), -3);
        // p² with p above the trial bound
        let p = BigInt::from(1_000_003u64);
        assert_eq!(squarefree_part(&(&p * &p * 5)).unwrap(), BigInt::from(5));
        assert!(squarefree_part(&BigInt::zero()).is_err());
        assert!(is_squarefree(-3) && !is_squarefree(8) && !is_squarefree(0));
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(16), Some((2, 4)));
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(97), Some((97, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(0), None);
    }

    #[test]
    fn residue_symbols() {
        assert_eq!(legendre(2, 7), 1);
        assert_eq!(legendre(3, 7), -1);
        assert_eq!(legendre(-1, 5), 1);
        assert_eq!(legendre(14, 7), 0);
        assert_eq!(inverse_mod(3, 8), Some(3));
        assert_eq!(inverse_mod(2, 8), None);
        assert_eq!(inverse_mod(-1, 9), Some(8));
        assert_eq!(units_mod(9), vec![1, 2, 4, 5, 7, 8]);
        assert_eq!(units_mod(2), vec![1]);
    }
}

//! Integer and rational kernels: square roots, square tests, factorization,
//! squarefree parts.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Trial division bound before switching to Pollard rho.
pub const TRIAL_LIMIT: u64 = 1_000_000;

/// Default iteration cap for Pollard rho, summed over all splits.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rat_int(n: impl Into<Int>) -> Rat {
    Rat::from_integer(n.into())
}

/// Parses "p", "p/q" or "-p/q".
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: Int = n.parse().map_err(|_| Error::Parse(s.to_string()))?;
    let d: Int = d.parse().map_err(|_| Error::Parse(s.to_string()))?;
    if d.is_zero() {
        return Err(Error::Domain(format!("zero denominator in {s}")));
    }
    Ok(Rat::new(n, d))
}

pub fn parse_int(s: &str) -> Result<Int> {
    s.trim().parse().map_err(|_| Error::Parse(s.to_string()))
}

/// Floor of the square root.
pub fn isqrt(n: &Int) -> Result<Int> {
    if n.is_negative() {
        return Err(Error::Domain(format!("isqrt of negative {n}")));
    }
    Ok(n.sqrt())
}

/// Exact non-negative root when `n` is a perfect square.
pub fn is_square(n: &Int) -> Option<Int> {
    if n.is_negative() {
        return None;
    }
    // squares mod 64 filter
    let low = (n & Int::from(63u8)).to_u8().unwrap_or(0);
    if !matches!(low, 0 | 1 | 4 | 9 | 16 | 17 | 25 | 33 | 36 | 41 | 49 | 57) {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    let n = is_square(r.numer())?;
    let d = is_square(r.denom())?;
    Some(Rat::new(n, d))
}

pub fn rat_square(r: &Rat) -> Rat {
    r * r
}

fn small_primes(limit: u64) -> Vec<u64> {
    let limit = limit as usize;
    let mut sieve = vec![true; limit + 1];
    sieve[0] = false;
    if limit >= 1 {
        sieve[1] = false;
    }
    let mut i = 2;
    while i * i <= limit {
        if sieve[i] {
            let mut j = i * i;
            while j <= limit {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve.iter().enumerate().filter(|(_, &p)| p).map(|(i, _)| i as u64).collect()
}

fn primes() -> &'static [u64] {
    use std::sync::OnceLock;
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| small_primes(TRIAL_LIMIT))
}

/// Miller-Rabin with the first twelve prime bases; deterministic below 3.3e24.
pub fn is_probable_prime(n: &Int) -> bool {
    let two = Int::from(2u8);
    if n < &two {
        return false;
    }
    for &p in &primes()[..12] {
        let p = Int::from(p);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n1: Int = n - 1u8;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'witness: for &a in &primes()[..12] {
        let mut x = Int::from(a).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent's variant of Pollard rho. Returns a nontrivial factor or `None`
/// once `budget` iterations are spent.
fn rho_brent(n: &Int, c: u64, budget: &mut u64) -> Option<Int> {
    let c = Int::from(c);
    let f = |x: &Int| (x * x + &c) % n;
    let m = 128u64;
    let mut y = Int::from(2u8);
    let mut r = 1u64;
    let mut q = Int::one();
    let mut g = Int::one();
    let mut x = y.clone();
    let mut ys = y.clone();
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            let steps = m.min(r - k);
            if *budget < steps {
                return None;
            }
            *budget -= steps;
            for _ in 0..steps {
                y = f(&y);
                q = (q * (&x - &y).abs()) % n;
            }
            g = q.gcd(n);
            k += m;
        }
        r *= 2;
    }
    if &g == n {
        loop {
            if *budget == 0 {
                return None;
            }
            *budget -= 1;
            ys = f(&ys);
            g = (&x - &ys).abs().gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    if &g == n {
        None
    } else {
        Some(g)
    }
}

fn split(n: Int, budget: &mut u64, out: &mut Vec<Int>) -> Result<()> {
    if n.is_one() {
        return Ok(());
    }
    if is_probable_prime(&n) {
        out.push(n);
        return Ok(());
    }
    if let Some(r) = is_square(&n) {
        let mut half = Vec::new();
        split(r, budget, &mut half)?;
        out.extend(half.iter().cloned());
        out.extend(half);
        return Ok(());
    }
    for c in 1u64..=32 {
        if let Some(d) = rho_brent(&n, c, budget) {
            let other = &n / &d;
            split(d, budget, out)?;
            return split(other, budget, out);
        }
        if *budget == 0 {
            break;
        }
    }
    Err(Error::Unfactored(n.to_string()))
}

/// Prime factors of |n| with multiplicity, ascending.
pub fn factorize(n: &Int, budget: u64) -> Result<Vec<Int>> {
    if n.is_zero() {
        return Err(Error::Domain("factorize(0)".into()));
    }
    let mut n = n.abs();
    let mut out = Vec::new();
    for &p in primes() {
        let pb = Int::from(p);
        if &pb * &pb > n {
            break;
        }
        loop {
            let (q, r) = n.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            out.push(pb.clone());
            n = q;
        }
    }
    if !n.is_one() {
        let limit = Int::from(TRIAL_LIMIT);
        if n <= &limit * &limit {
            out.push(n);
        } else {
            let mut budget = budget;
            split(n, &mut budget, &mut out)?;
        }
    }
    out.sort();
    Ok(out)
}

/// `d` squarefree with `n = d * s^2`, sign kept on `d`. Returns `(d, s)`.
pub fn squarefree_decompose(n: &Int, budget: u64) -> Result<(Int, Int)> {
    if n.is_zero() {
        return Err(Error::Domain("squarefree part of 0".into()));
    }
    let factors = factorize(n, budget)?;
    let mut d = Int::one();
    let mut s = Int::one();
    let mut i = 0;
    while i < factors.len() {
        let mut j = i;
        while j < factors.len() && factors[j] == factors[i] {
            j += 1;
        }
        let e = j - i;
        if e % 2 == 1 {
            d *= &factors[i];
        }
        for _ in 0..e / 2 {
            s *= &factors[i];
        }
        i = j;
    }
    if n.sign() == Sign::Minus {
        d = -d;
    }
    Ok((d, s))
}

pub fn squarefree_part(n: &Int, budget: u64) -> Result<Int> {
    squarefree_decompose(n, budget).map(|(d, _)| d)
}

pub fn fmt_rat(r: &Rat) -> String {
    r.to_string()
}

pub fn sgn(r: &Rat) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isqrt_values() {
        assert_eq!(isqrt(&int(0)).unwrap(), int(0));
        assert_eq!(isqrt(&int(169)).unwrap(), int(13));
        assert_eq!(isqrt(&int(170)).unwrap(), int(13));
        assert!(isqrt(&int(-1)).is_err());
    }

    #[test]
    fn square_filter_agrees_with_root() {
        for n in 0..5000i64 {
            let r = (n as f64).sqrt() as i64;
            let expect = (r - 1..=r + 1).find(|k| *k >= 0 && k * k == n);
            assert_eq!(is_square(&int(n)), expect.map(int), "{n}");
        }
        assert_eq!(is_square(&int(-4)), None);
    }

    #[test]
    fn rat_sqrt_values() {
        assert_eq!(rat_sqrt(&rat(961, 4)), Some(rat(31, 2)));
        assert_eq!(rat_sqrt(&rat(2, 9)), None);
        assert_eq!(rat_sqrt(&rat(-1, 4)), None);
    }

    #[test]
    fn factorize_small() {
        let f = factorize(&int(120), DEFAULT_BUDGET).unwrap();
        assert_eq!(f, vec![int(2), int(2), int(2), int(3), int(5)]);
        assert!(factorize(&int(1), DEFAULT_BUDGET).unwrap().is_empty());
        assert!(factorize(&int(0), DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn factorize_needs_rho() {
        // two primes above the trial bound
        let p: Int = "1000003".parse().unwrap();
        let q: Int = "1000033".parse().unwrap();
        let r: Int = "1000037".parse().unwrap();
        let n = &p * &q * &r;
        assert_eq!(factorize(&n, DEFAULT_BUDGET).unwrap(), vec![p, q, r]);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let p: Int = "1000000000039".parse().unwrap();
        let q: Int = "1000000000061".parse().unwrap();
        let err = factorize(&(&p * &q), 1).unwrap_err();
        assert!(matches!(err, Error::Unfactored(_)));
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_part(&int(180), DEFAULT_BUDGET).unwrap(), int(5));
        assert_eq!(squarefree_part(&int(360), DEFAULT_BUDGET).unwrap(), int(10));
        assert_eq!(squarefree_part(&int(-28), DEFAULT_BUDGET).unwrap(), int(-7));
    }

    #[test]
    fn parse_round_trip() {
        for s in ["41/6", "-3/2", "7", "0"] {
            assert_eq!(parse_rat(s).unwrap().to_string(), s);
        }
        assert_eq!(parse_rat("6/4").unwrap(), rat(3, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        let big = "214038981475081188634947041892245670988588201";
        assert_eq!(parse_int(big).unwrap().to_string(), big);
    }
}

//! Dense univariate polynomials and rational functions over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{Int, Rat};

/// Coefficients lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rat::from_integer(Int::from(c))).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Poly::from_ints(&[0, 1])
    }

    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = c;
        Poly::new(v)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * Rat::from_integer(Int::from(k))).collect())
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().recip();
        self.scale(&inv)
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or(Error::DivByZero)?;
        let mut r = self.coeffs.clone();
        let lc = d.lead();
        let n = self.coeffs.len();
        if n <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut q = vec![Rat::zero(); n - dd];
        for k in (0..n - dd).rev() {
            let c = &r[k + dd] / &lc;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((Poly::new(q), Poly::new(r)))
    }

    /// Integer coefficients of the primitive part, positive leading coefficient.
    fn primitive_ints(&self) -> Vec<Int> {
        let l = self.coeffs.iter().fold(Int::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<Int> = self.coeffs.iter().map(|c| (c * Rat::from_integer(l.clone())).to_integer()).collect();
        primitive(ints)
    }

    fn from_int_vec(v: Vec<Int>) -> Poly {
        Poly::new(v.into_iter().map(Rat::from_integer).collect())
    }

    /// Monic gcd, computed with a primitive pseudo-remainder sequence.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let mut a = self.primitive_ints();
        let mut b = other.primitive_ints();
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = primitive(prem(&a, &b));
            a = b;
            b = r;
        }
        Poly::from_int_vec(a).monic()
    }

    pub fn chebyshev_t(m: usize) -> Poly {
        chebyshev(Poly::t(), m)
    }

    /// U_m with U_0 = 1, U_1 = 2x.
    pub fn chebyshev_u(m: usize) -> Poly {
        chebyshev(Poly::from_ints(&[0, 2]), m)
    }
}

fn chebyshev(first: Poly, m: usize) -> Poly {
    let two_t = Poly::from_ints(&[0, 2]);
    let (mut a, mut b) = (Poly::one(), first);
    if m == 0 {
        return a;
    }
    for _ in 1..m {
        let next = &(&two_t * &b) - &a;
        a = b;
        b = next;
    }
    b
}

fn trim(mut v: Vec<Int>) -> Vec<Int> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn primitive(v: Vec<Int>) -> Vec<Int> {
    let v = trim(v);
    let Some(lead) = v.last() else { return v };
    let mut g = v.iter().fold(Int::zero(), |acc, c| acc.gcd(c));
    if lead.is_negative() {
        g = -g;
    }
    v.into_iter().map(|c| c / &g).collect()
}

/// Pseudo-remainder of integer polynomials.
fn prem(a: &[Int], b: &[Int]) -> Vec<Int> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let lr = r.last().cloned().unwrap();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &lr * bc;
        }
        r = trim(r);
    }
    r
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = Rat::zero();
        Poly::new((0..n).map(|k| self.coeffs.get(k).unwrap_or(&z) + o.coeffs.get(k).unwrap_or(&z)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self + &(-o)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Rat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly::new(v)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let body = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{body}")?;
            } else if mag.is_integer() {
                write!(f, "{mag}*{body}")?;
            } else {
                write!(f, "({mag})*{body}")?;
            }
        }
        Ok(())
    }
}

/// Reduced quotient of polynomials with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc { num, den: Poly::one() };
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num, den);
        if g.degree() != Some(0) {
            n = n.div_rem(&g).expect("gcd nonzero").0;
            d = d.div_rem(&g).expect("gcd nonzero").0;
        }
        let lc = d.lead().recip();
        RatFunc { num: n.scale(&lc), den: d.scale(&lc) }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_constant(&self) -> Option<Rat> {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => Some(Rat::zero()),
            (Some(0), Some(0)) => Some(self.num.lead() / self.den.lead()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rat) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn div(&self, o: &RatFunc) -> Result<RatFunc> {
        if o.is_zero() {
            return Err(Error::DivByZero);
        }
        Ok(Self::normalized(&self.num * &o.den, &self.den * &o.num))
    }

    pub fn derivative(&self) -> RatFunc {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::normalized(n, &self.den * &self.den)
    }

    /// n-th derivative, reduced after every order.
    pub fn differentiate(&self, n: usize) -> RatFunc {
        (0..n).fold(self.clone(), |f, _| f.derivative())
    }

    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivByZero);
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }

    /// p(self) by Horner's rule.
    pub fn compose(p: &Poly, x: &RatFunc) -> RatFunc {
        p.coeffs().iter().rev().fold(RatFunc::zero(), |acc, c| &(&acc * x) + &RatFunc::constant(c.clone()))
    }

    pub fn from_ints(num: &[i64], den: &[i64]) -> Result<RatFunc> {
        RatFunc::new(Poly::from_ints(num), Poly::from_ints(den))
    }

    /// Equality by cross-multiplication, independent of normalization.
    pub fn eq_cross(&self, o: &RatFunc) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.den == o.den {
            return RatFunc::normalized(&self.num + &o.num, self.den.clone());
        }
        RatFunc::normalized(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        RatFunc::normalized(&self.num * &o.num, &self.den * &o.den)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn zero_degree_sentinel() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(p(&[0, 0, 0]).degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
    }

    #[test]
    fn cancellation() {
        let f = RatFunc::new(p(&[-1, 0, 1]), p(&[1, 1])).unwrap();
        assert_eq!(f, RatFunc::from_poly(p(&[-1, 1])));
        assert!(RatFunc::new(p(&[1]), Poly::zero()).is_err());
    }

    #[test]
    fn derivatives() {
        let t2 = RatFunc::from_poly(p(&[0, 0, 1]));
        assert_eq!(t2.derivative(), RatFunc::from_poly(p(&[0, 2])));
        let inv = RatFunc::new(p(&[1]), p(&[0, 1])).unwrap();
        let expect = RatFunc::new(p(&[-1]), p(&[0, 0, 1])).unwrap();
        assert_eq!(inv.derivative(), expect);
        assert_eq!(inv.differentiate(2), RatFunc::new(p(&[2]), p(&[0, 0, 0, 1])).unwrap());
    }

    #[test]
    fn chebyshev_small() {
        assert_eq!(Poly::chebyshev_t(3), p(&[0, -3, 0, 4]));
        assert_eq!(Poly::chebyshev_u(2), p(&[-1, 0, 4]));
        assert_eq!(Poly::chebyshev_t(3).eval(&rat(2, 1)), rat(26, 1));
        assert_eq!(Poly::chebyshev_t(0), Poly::one());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[0, -3, 0, 4]).to_string(), "4*t^3 - 3*t");
        assert_eq!(p(&[-1, 1]).to_string(), "t - 1");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::new(vec![rat(1, 2)]).to_string(), "1/2");
    }

    #[test]
    fn gcd_finds_common_factor() {
        let a = &p(&[1, 1]) * &p(&[2, 0, 3]);
        let b = &p(&[1, 1]) * &p(&[-5, 7]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
    }
}

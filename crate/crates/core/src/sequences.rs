//! Congruent-number sequences from Fibonacci/Lucas identities and Chebyshev
//! polynomials, and the Brahmagupta triangles with their integral points.

use num_traits::{One, Zero};

use crate::elliptic::{Curve, Point};
use crate::error::{Error, Result};
use crate::exact::{is_square, squarefree_decompose, Int, Rat};
use crate::polyrat::Poly;
use crate::report::Check;
use crate::triples::RatTriangle;

fn q(v: &Int) -> Rat {
    Rat::from_integer(v.clone())
}

fn r(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibPair {
    pub f: Int,
    pub l: Int,
}

pub fn fib_lucas(n: u64) -> FibPair {
    let (mut f0, mut f1) = (Int::zero(), Int::one());
    for _ in 0..n {
        let next = &f0 + &f1;
        f0 = std::mem::replace(&mut f1, next);
    }
    // L_n = F_{n-1} + F_{n+1} = 2 F_{n+1} - F_n
    let l = Int::from(2) * &f1 - &f0;
    FibPair { f: f0, l }
}

/// L_n^2 - 5 F_n^2 = 4 (-1)^n.
pub fn fib_identity(n: u64) -> bool {
    let p = fib_lucas(n);
    let sign = if n.is_multiple_of(2) { 4 } else { -4 };
    &p.l * &p.l - Int::from(5) * &p.f * &p.f == Int::from(sign)
}

/// (a(a+c)/2, a^2(a+c)/2) and (c^2/4, c(a^2-b^2)/8).
pub fn standard_points(t: &RatTriangle) -> (Point, Point) {
    let s = &t.a + &t.c;
    let p1 = Point::new(&t.a * &s / r(2), &t.a * &t.a * &s / r(2));
    let p2 = Point::new(&t.c * &t.c / r(4), &t.c * (&t.a * &t.a - &t.b * &t.b) / r(8));
    (p1, p2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqFamily {
    pub label: String,
    pub triangle: RatTriangle,
    pub n: Int,
    pub p0: Option<Point>,
    pub p1: Point,
    pub p2: Point,
}

impl SeqFamily {
    fn build(label: String, triangle: RatTriangle, n: Int, p0: Option<Point>) -> Self {
        let (p1, p2) = standard_points(&triangle);
        SeqFamily { label, triangle, n, p0, p1, p2 }
    }

    pub fn curve(&self) -> Result<Curve> {
        Curve::congruent(&q(&self.n))
    }

    pub fn checks(&self) -> Result<Vec<Check>> {
        let e = self.curve()?;
        let l = &self.label;
        let mut out = vec![
            Check::new(format!("{l}: triangle has area N"), self.triangle.check(&q(&self.n))),
            Check::new(format!("{l}: P1 on E_N"), e.on_curve(&self.p1)),
            Check::new(format!("{l}: P2 on E_N"), e.on_curve(&self.p2)),
            Check::new(format!("{l}: P2 = 2 P1"), e.double(&self.p1)? == self.p2),
        ];
        if let Some(p0) = &self.p0 {
            let t = Point::ints(0, 0);
            out.push(Check::new(format!("{l}: P0 on E_N"), e.on_curve(p0)));
            out.push(Check::new(format!("{l}: P1 = (0,0) + P0"), e.add(&t, p0)? == self.p1));
            out.push(Check::new(format!("{l}: P2 = 2 P0"), e.double(p0)? == self.p2));
        }
        out.push(Check::new(format!("{l}: P1 of infinite order"), e.certify_infinite_order(&self.p1)));
        Ok(out)
    }

    /// Squarefree area d with the triangle scaled down by s, N = d s^2.
    pub fn reduced(&self, budget: u64) -> Result<(Int, RatTriangle)> {
        let (d, s) = squarefree_decompose(&self.n, budget)?;
        Ok((d, self.triangle.scale(&(Rat::one() / q(&s)))))
    }
}

/// (5 F, 4 L / F, (L^2 + 4)/F) with F = F_2n, L = L_2n; N = 10 L; P0 = (-20, 100 F).
pub fn fib_even_family(n: u64) -> Result<SeqFamily> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    let FibPair { f, l } = fib_lucas(2 * n);
    let tri = RatTriangle::new(r(5) * q(&f), r(4) * q(&l) / q(&f), (q(&l) * q(&l) + r(4)) / q(&f));
    let p0 = Point::new(r(-20), r(100) * q(&f));
    Ok(SeqFamily::build(format!("fib even n={n}"), tri, Int::from(10) * l, Some(p0)))
}

/// 20 (10 L_2n)^2 = (100 F_2n)^2 + 20^3.
pub fn fib_even_line_identity(n: u64) -> bool {
    let FibPair { f, l } = fib_lucas(2 * n);
    let ten_l = Int::from(10) * &l;
    let hundred_f = Int::from(100) * &f;
    Int::from(20) * &ten_l * &ten_l == &hundred_f * &hundred_f + Int::from(8000)
}

/// (L^2 - 4, 4 L, 5 F^2) with F = F_2n+1, L = L_2n+1; N = 2 (L^2 - 4) L.
pub fn fib_odd_family(n: u64) -> Result<SeqFamily> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    let FibPair { f, l } = fib_lucas(2 * n + 1);
    let a = &l * &l - Int::from(4);
    let tri = RatTriangle::new(q(&a), r(4) * q(&l), r(5) * q(&(&f * &f)));
    let nn = Int::from(2) * &a * &l;
    Ok(SeqFamily::build(format!("fib odd n={n}"), tri, nn, None))
}

/// T_m(x) and U_{m-1}(x) at an integer.
pub fn chebyshev_tu(m: u64, x: &Int) -> (Int, Int) {
    let two_x = Int::from(2) * x;
    let (mut t0, mut t1) = (Int::one(), x.clone());
    let (mut u0, mut u1) = (Int::zero(), Int::one());
    if m == 0 {
        return (t0, u0);
    }
    for _ in 1..m {
        let t2 = &two_x * &t1 - &t0;
        let u2 = &two_x * &u1 - &u0;
        t0 = std::mem::replace(&mut t1, t2);
        u0 = std::mem::replace(&mut u1, u2);
    }
    (t1, u1)
}

/// T_m^2 = (x^2 - 1) U_{m-1}^2 + 1 as polynomials, for m = 1..=max_m.
pub fn pell_identity_symbolic(max_m: usize) -> Vec<Check> {
    let x2m1 = Poly::from_ints(&[-1, 0, 1]);
    (1..=max_m)
        .map(|m| {
            let t = Poly::chebyshev_t(m);
            let u = Poly::chebyshev_u(m - 1);
            let rhs = &(&x2m1 * &(&u * &u)) + &Poly::one();
            Check::new(format!("Pell identity m={m}"), &t * &t == rhs)
        })
        .collect()
}

/// ((x^2-1) U, 2T/U, (T^2+1)/U) with T = T_m(x), U = U_{m-1}(x); N = (x^2-1) T.
pub fn cheb_family(m: u64, x: &Int) -> Result<SeqFamily> {
    if m == 0 || x < &Int::from(2) {
        return Err(Error::Domain("need m >= 1 and n >= 2".into()));
    }
    let (t, u) = chebyshev_tu(m, x);
    let w = x * x - Int::one();
    let tri = RatTriangle::new(q(&(&w * &u)), r(2) * q(&t) / q(&u), (q(&t) * q(&t) + r(1)) / q(&u));
    let p0 = Point::new(q(&(Int::one() - x * x)), q(&(&w * &w * &u)));
    Ok(SeqFamily::build(format!("cheb m={m} n={x}"), tri, &w * &t, Some(p0)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Brahmagupta {
    pub k: u64,
    pub t: Int,
    pub sides: [Int; 3],
    pub perimeter_half: Int,
    pub area: Int,
    pub curve: Curve,
    pub q: [Point; 4],
}

/// Sides (t-1, t, t+1) with t = 2 T_k(2); curve y^2 = (x+AB)(x+BC)(x+AC).
pub fn brahmagupta(k: u64) -> Result<Brahmagupta> {
    let (tk, _) = chebyshev_tu(k, &Int::from(2));
    let t = Int::from(2) * tk;
    let (a, b, c) = (&t - Int::one(), t.clone(), &t + Int::one());
    let p = Int::from(3) * &t / Int::from(2);
    let heron = &p * (&p - &a) * (&p - &b) * (&p - &c);
    let s = is_square(&heron).ok_or_else(|| Error::NotSquare(format!("Heron area^2 = {heron}")))?;
    let curve = Curve::from_roots(&q(&(&a * &b)), &q(&(&b * &c)), &q(&(&a * &c)))?;
    let two = Int::from(2);
    let pts = [
        (Int::zero(), &a * &b * &c),
        (-(&b * &b), b.clone()),
        (&two - &a * &b, &two * &c),
        (&two - &b * &c, &two * &a),
    ]
    .map(|(x, y)| Point::new(q(&x), q(&y)));
    Ok(Brahmagupta { k, t, sides: [a, b, c], perimeter_half: p, area: s, curve, q: pts })
}

impl Brahmagupta {
    pub fn checks(&self) -> Result<Vec<Check>> {
        let k = self.k;
        let mut out = Vec::new();
        for (i, p) in self.q.iter().enumerate() {
            out.push(Check::new(format!("brahmagupta k={k}: Q{i} on curve"), self.curve.on_curve(p)));
        }
        if self.t > Int::from(2) {
            for (i, p) in self.q.iter().enumerate() {
                out.push(Check::new(
                    format!("brahmagupta k={k}: Q{i} of infinite order"),
                    self.curve.certify_infinite_order(p),
                ));
            }
            let link = cheb_family(k, &Int::from(2))?;
            out.push(Check::eq(format!("brahmagupta k={k}: P = N_k,2"), &self.perimeter_half, &link.n));
        } else {
            for (i, p) in self.q.iter().enumerate() {
                let ord = self.curve.small_order(p, 12)?;
                out.push(Check::new(format!("brahmagupta k={k}: Q{i} of order 4"), ord == Some(4)));
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn fib_values() {
        assert_eq!(fib_lucas(0), FibPair { f: int(0), l: int(2) });
        assert_eq!(fib_lucas(6), FibPair { f: int(8), l: int(18) });
        assert_eq!(fib_lucas(7), FibPair { f: int(13), l: int(29) });
    }

    #[test]
    fn chebyshev_values() {
        assert_eq!(chebyshev_tu(3, &int(2)), (int(26), int(15)));
        assert_eq!(chebyshev_tu(1, &int(5)), (int(5), int(1)));
        assert_eq!(chebyshev_tu(0, &int(2)), (int(1), int(0)));
    }

    #[test]
    fn small_families() {
        let f = fib_even_family(1).unwrap();
        assert_eq!(f.n, int(30));
        assert_eq!(f.triangle, RatTriangle::new(r(5), r(12), r(13)));
        let o = fib_odd_family(1).unwrap();
        assert_eq!((o.n.clone(), o.triangle.clone()), (int(96), RatTriangle::new(r(12), r(16), r(20))));
        assert!(cheb_family(0, &int(2)).is_err());
    }
}

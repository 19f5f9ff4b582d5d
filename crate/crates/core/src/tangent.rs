//! Tangent chains: successive (f1, f2) solutions for one congruent number,
//! each step a point doubling on E_N.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::cassini::heegner_two;
use crate::elliptic::{Curve, Point};
use crate::error::{Error, Result};
use crate::exact::{is_square, rat_sqrt, Int, Rat};
use crate::report::Check;
use crate::triples::RatTriangle;

/// Chains deeper than this need `tangent_chain_unbounded`.
pub const MAX_DEPTH: usize = 5;

fn r(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// (N(a+c)/b, 2N^2(a+c)/b^2).
pub fn triangle_to_point(tri: &RatTriangle, n: &Rat) -> Result<Point> {
    if tri.b.is_zero() {
        return Err(Error::DivByZero);
    }
    let s = &tri.a + &tri.c;
    Ok(Point::new(n * &s / &tri.b, r(2) * n * n * &s / (&tri.b * &tri.b)))
}

/// ((x^2-N^2)/y, 2Nx/y, (x^2+N^2)/y).
pub fn point_to_triangle(p: &Point, n: &Rat) -> Result<RatTriangle> {
    let (Some(x), Some(y)) = (p.x(), p.y()) else {
        return Err(Error::Domain("point at infinity".into()));
    };
    if y.is_zero() {
        return Err(Error::DivByZero);
    }
    let x2 = x * x;
    let n2 = n * n;
    Ok(RatTriangle::new((&x2 - &n2) / y, r(2) * n * x / y, (&x2 + &n2) / y))
}

/// (c^2/4, c(a^2-b^2)/8): twice the point of the triangle, up to sign and torsion.
pub fn half_point(tri: &RatTriangle) -> Point {
    let c = &tri.c;
    Point::new(c * c / r(4), c * (&tri.a * &tri.a - &tri.b * &tri.b) / r(8))
}

/// (c1, c2) = (den c, num c / 2) of a hypotenuse.
pub fn hypotenuse_pair(c: &Rat) -> (Int, Rat) {
    let c = c.abs();
    (c.denom().clone(), Rat::new(c.numer().clone(), Int::from(2)))
}

/// f2^2 = sqrt(c2^2 + N c1^2) +- c2, f1 = c1/f2; f2 > 0.
pub fn solve_f(c1: &Int, c2: &Rat, n: &Int) -> Result<(Int, Int)> {
    let nq = Rat::from_integer(n.clone());
    let c1q = Rat::from_integer(c1.clone());
    let c4 = rat_sqrt(&(c2 * c2 + &nq * &c1q * &c1q))
        .ok_or_else(|| Error::NotSquare("c2^2 + N c1^2: not on tangent chain".into()))?;
    for f2sq in [&c4 + c2, &c4 - c2] {
        if !f2sq.is_positive() || !f2sq.is_integer() {
            continue;
        }
        let Some(f2) = is_square(&f2sq.to_integer()) else { continue };
        if !c1.is_multiple_of(&f2) {
            continue;
        }
        let f1 = c1 / &f2;
        let f1q = Rat::from_integer(&f1 * &f1);
        let back = (&nq * &f1q - &f2sq).abs() / r(2);
        if &back == c2 {
            return Ok((f1, f2));
        }
    }
    Err(Error::NotSquare("no square branch for f2^2: not on tangent chain".into()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainEntry {
    pub f1: Int,
    pub f2: Int,
    pub triangle: RatTriangle,
    pub point: Point,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentChain {
    pub n: Int,
    pub start: RatTriangle,
    pub start_point: Point,
    pub entries: Vec<ChainEntry>,
}

pub fn tangent_chain(tri0: &RatTriangle, n: &Int, depth: usize) -> Result<TangentChain> {
    if depth > MAX_DEPTH {
        return Err(Error::Domain(format!("depth {depth} exceeds {MAX_DEPTH}")));
    }
    tangent_chain_unbounded(tri0, n, depth)
}

pub fn tangent_chain_unbounded(tri0: &RatTriangle, n: &Int, depth: usize) -> Result<TangentChain> {
    let nq = Rat::from_integer(n.clone());
    if depth == 0 {
        return Err(Error::Domain("depth must be at least 1".into()));
    }
    if !tri0.check(&nq) {
        return Err(Error::Domain(format!("starting triangle does not have area {n}")));
    }
    let start = tri0.abs();
    let start_point = triangle_to_point(&start, &nq)?;
    let mut entries = Vec::with_capacity(depth);
    let mut cur = start.clone();
    for _ in 0..depth {
        let (c1, c2) = hypotenuse_pair(&cur.c);
        let (f1, f2) = solve_f(&c1, &c2, n)?;
        let h = heegner_two(n, &f1, &Rat::from_integer(&f2 * &f2))?;
        let point = triangle_to_point(&h.triangle, &nq)?;
        cur = h.triangle.clone();
        entries.push(ChainEntry { f1, f2, triangle: h.triangle, point });
    }
    Ok(TangentChain { n: n.clone(), start, start_point, entries })
}

impl TangentChain {
    pub fn curve(&self) -> Result<Curve> {
        Curve::congruent(&Rat::from_integer(self.n.clone()))
    }

    /// Doubling points: half_point of the start triangle, then of each entry.
    pub fn doubling_points(&self) -> Vec<Point> {
        std::iter::once(&self.start).chain(self.entries.iter().map(|e| &e.triangle)).map(half_point).collect()
    }

    pub fn checks(&self) -> Result<Vec<Check>> {
        let e = self.curve()?;
        let nq = Rat::from_integer(self.n.clone());
        let mut out = Vec::new();
        let mut prev = self.start_point.clone();
        let mut prev_c = self.start.c.clone();
        for (i, en) in self.entries.iter().enumerate() {
            let k = i + 1;
            out.push(Check::new(format!("S{k} triangle area N"), en.triangle.check(&nq)));
            out.push(Check::new(format!("S{k} point on E_N"), e.on_curve(&en.point)));
            let (c1, c2) = hypotenuse_pair(&prev_c);
            let f1sq = Rat::from_integer(&en.f1 * &en.f1);
            let f2sq = Rat::from_integer(&en.f2 * &en.f2);
            let hold = c1 == &en.f1 * &en.f2 && c2 == (&nq * f1sq - f2sq).abs() / r(2);
            out.push(Check::new(format!("S{k} f1 f2 solve the previous hypotenuse"), hold));
            let twice = e.double(&prev)?;
            out.push(Check::new(format!("S{k} point is twice the previous"), twice.x() == en.point.x()));
            prev = en.point.clone();
            prev_c = en.triangle.c.clone();
        }
        let hs = self.doubling_points();
        for (i, w) in hs.windows(2).enumerate() {
            let d = e.double(&w[0])?;
            out.push(Check::new(format!("H{} = 2 H{} up to sign", i + 1, i), d.eq_up_to_sign(&w[1])));
        }
        Ok(out)
    }
}

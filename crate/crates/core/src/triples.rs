//! Euclid triples, the three derived rational triangles, the area identity,
//! connecting-line points, concordant forms and the distance identity.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::elliptic::{Curve, Point};
use crate::error::{Error, Result};
use crate::exact::{is_square, rat_sqrt, Int, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PythTriple {
    pub a: Int,
    pub b: Int,
    pub c: Int,
}

impl PythTriple {
    pub fn is_valid(&self) -> bool {
        &self.a * &self.a + &self.b * &self.b == &self.c * &self.c
    }

    pub fn is_primitive(&self) -> bool {
        self.a.gcd(&self.b).is_one()
    }

    pub fn area(&self) -> Int {
        &self.a * &self.b / 2
    }

    pub fn to_triangle(&self) -> RatTriangle {
        RatTriangle::new(
            Rat::from_integer(self.a.clone()),
            Rat::from_integer(self.b.clone()),
            Rat::from_integer(self.c.clone()),
        )
    }
}

/// Right triangle with signed rational sides.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatTriangle {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

impl RatTriangle {
    pub fn new(a: Rat, b: Rat, c: Rat) -> Self {
        RatTriangle { a, b, c }
    }

    /// Hypotenuse from the legs; `None` when it is irrational.
    pub fn from_legs(a: Rat, b: Rat) -> Option<Self> {
        let c = rat_sqrt(&(&a * &a + &b * &b))?;
        Some(RatTriangle { a, b, c })
    }

    pub fn parse(a: &str, b: &str, c: &str) -> Result<Self> {
        use crate::exact::parse_rat;
        Ok(RatTriangle::new(parse_rat(a)?, parse_rat(b)?, parse_rat(c)?))
    }

    pub fn area(&self) -> Rat {
        &self.a * &self.b / Rat::from_integer(Int::from(2))
    }

    pub fn is_right(&self) -> bool {
        &self.a * &self.a + &self.b * &self.b == &self.c * &self.c
    }

    /// Pythagoras holds, no side vanishes and the area matches.
    pub fn check(&self, n: &Rat) -> bool {
        self.is_right() && !self.a.is_zero() && !self.b.is_zero() && &self.area() == n
    }

    pub fn scale(&self, k: &Rat) -> RatTriangle {
        RatTriangle::new(&self.a * k, &self.b * k, &self.c * k)
    }

    pub fn abs(&self) -> RatTriangle {
        RatTriangle::new(self.a.abs(), self.b.abs(), self.c.abs())
    }

    pub fn swap(&self) -> RatTriangle {
        RatTriangle::new(self.b.clone(), self.a.clone(), self.c.clone())
    }
}

impl fmt::Display for RatTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

fn check_order(m: &Int, n: &Int) -> Result<()> {
    if !(m > n && n > &Int::zero()) {
        return Err(Error::Domain(format!("need m > n > 0, got ({m}, {n})")));
    }
    Ok(())
}

pub fn euclid(m: &Int, n: &Int) -> Result<PythTriple> {
    check_order(m, n)?;
    Ok(PythTriple { a: m * m - n * n, b: Int::from(2) * m * n, c: m * m + n * n })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derived {
    pub ac: RatTriangle,
    pub bc: RatTriangle,
    pub ba: RatTriangle,
}

impl Derived {
    pub fn as_array(&self) -> [&RatTriangle; 3] {
        [&self.ac, &self.bc, &self.ba]
    }
}

fn q(n: &Int) -> Rat {
    Rat::from_integer(n.clone())
}

pub fn derived_from(t: &PythTriple) -> Derived {
    let (a, b, c) = (q(&t.a), q(&t.b), q(&t.c));
    let two = q(&Int::from(2));
    let (a2, b2, c2) = (&a * &a, &b * &b, &c * &c);
    let abc = &a * &b * &c;
    Derived {
        ac: RatTriangle::new(&two * &a * &c / &b, &b * (&a2 + &c2) / (&a * &c), (&a2 * &a2 + &c2 * &c2) / &abc),
        bc: RatTriangle::new(&two * &b * &c / &a, &a * (&b2 + &c2) / (&b * &c), (&b2 * &b2 + &c2 * &c2) / &abc),
        ba: RatTriangle::new(&two * &b * &a / &c, &c * (&b2 - &a2) / (&b * &a), (&b2 * &b2 + &a2 * &a2) / &abc),
    }
}

pub fn derived_triples(m: &Int, n: &Int) -> Result<Derived> {
    Ok(derived_from(&euclid(m, n)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AreaQuad {
    pub n: Int,
    pub n_ac: Int,
    pub n_bc: Int,
    pub n_ba: Int,
}

pub fn area_quad(t: &PythTriple) -> AreaQuad {
    let (a2, b2, c2) = (&t.a * &t.a, &t.b * &t.b, &t.c * &t.c);
    AreaQuad { n: t.area(), n_ac: &a2 + &c2, n_bc: &b2 + &c2, n_ba: &b2 - &a2 }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AreaIdentity {
    pub quad: AreaQuad,
    pub lhs: Int,
    pub rhs: Int,
}

impl AreaIdentity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Sum of squared derived areas against 6(C^4 - 4N^2).
pub fn area_identity_check(m: &Int, n: &Int) -> Result<AreaIdentity> {
    let t = euclid(m, n)?;
    let quad = area_quad(&t);
    let lhs = &quad.n_ac * &quad.n_ac + &quad.n_bc * &quad.n_bc + &quad.n_ba * &quad.n_ba;
    let c2 = &t.c * &t.c;
    let rhs = Int::from(6) * (&c2 * &c2 - Int::from(4) * &quad.n * &quad.n);
    Ok(AreaIdentity { quad, lhs, rhs })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connecting {
    pub ac: (Curve, Point),
    pub bc: (Curve, Point),
    pub ba: (Curve, Point),
}

impl Connecting {
    pub fn all(&self) -> [&(Curve, Point); 3] {
        [&self.ac, &self.bc, &self.ba]
    }
}

/// Points at height 2ABC on the three derived curves.
pub fn connecting_points(m: &Int, n: &Int) -> Result<Connecting> {
    let t = euclid(m, n)?;
    let quad = area_quad(&t);
    let y = q(&(Int::from(2) * &t.a * &t.b * &t.c));
    let curve = |n: &Int| Curve::congruent(&q(n));
    Ok(Connecting {
        ac: (curve(&quad.n_ac)?, Point::new(q(&-(&t.b * &t.b)), y.clone())),
        bc: (curve(&quad.n_bc)?, Point::new(q(&-(&t.a * &t.a)), y.clone())),
        ba: (curve(&quad.n_ba)?, Point::new(q(&(&t.c * &t.c)), y)),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Concordant {
    pub x: Int,
    pub y: Int,
    pub z: Int,
    pub t: Int,
    pub n: Int,
}

impl Concordant {
    pub fn holds(&self) -> bool {
        let (x2, ny2) = (&self.x * &self.x, &self.n * &self.y * &self.y);
        &self.z * &self.z == &x2 + &ny2 && &self.t * &self.t == &x2 - &ny2
    }
}

fn poly8(m: &Int, n: &Int, c: [i64; 5]) -> Int {
    // c0 m^8 + c1 m^6 n^2 + c2 m^4 n^4 + c3 m^2 n^6 + c4 n^8
    let (m2, n2) = (m * m, n * n);
    let mut acc = Int::zero();
    for (k, ck) in c.iter().enumerate() {
        acc += Int::from(*ck) * m2.pow(4 - k as u32) * n2.pow(k as u32);
    }
    acc
}

/// Concordant-form solutions for the AC, BC and BA triangles, with z and t
/// taken from the closed forms and reported as absolute values.
pub fn concordant_solutions(m: &Int, n: &Int) -> Result<[Concordant; 3]> {
    let t = euclid(m, n)?;
    let quad = area_quad(&t);
    let (a2, b2, c2) = (&t.a * &t.a, &t.b * &t.b, &t.c * &t.c);
    let y = Int::from(2) * &t.a * &t.b * &t.c;
    let two = Int::from(2);
    let sols = [
        Concordant {
            x: &a2 * &a2 + &c2 * &c2,
            y: y.clone(),
            z: (&two * poly8(m, n, [1, 4, -2, 4, 1])).abs(),
            t: (&two * poly8(m, n, [1, -4, -2, -4, 1])).abs(),
            n: quad.n_ac.clone(),
        },
        Concordant {
            x: &b2 * &b2 + &c2 * &c2,
            y: y.clone(),
            z: poly8(m, n, [1, 12, 6, 12, 1]).abs(),
            t: poly8(m, n, [1, -4, -26, -4, 1]).abs(),
            n: quad.n_bc.clone(),
        },
        Concordant {
            x: &b2 * &b2 + &a2 * &a2,
            y,
            z: poly8(m, n, [1, -12, 6, -12, 1]).abs(),
            t: poly8(m, n, [1, 4, -26, 4, 1]).abs(),
            n: quad.n_ba.clone(),
        },
    ];
    for s in &sols {
        let ny2 = &s.n * &s.y * &s.y;
        let x2 = &s.x * &s.x;
        let z = is_square(&(&x2 + &ny2));
        let tt = is_square(&(&x2 - &ny2));
        if z.as_ref() != Some(&s.z) || tt.as_ref() != Some(&s.t) {
            return Err(Error::Domain(format!("concordant closed form mismatch at ({m}, {n})")));
        }
    }
    Ok(sols)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceReport {
    /// c_i - a_i for the AC, BC, BA triangles.
    pub d: [Rat; 3],
    /// 2 (C^4 - 3 (AB)^2) / (ABC).
    pub l: Rat,
    /// Normalized Pythagorean quadruple components, non-negative.
    pub quad: [Rat; 3],
    pub sum_sq_ok: bool,
    pub sum_ok: bool,
    pub pair_ok: bool,
    pub products_square: bool,
}

impl DistanceReport {
    pub fn holds(&self) -> bool {
        self.sum_sq_ok && self.sum_ok && self.pair_ok && self.products_square
    }
}

pub fn distance_identity(m: &Int, n: &Int) -> Result<DistanceReport> {
    let t = euclid(m, n)?;
    let der = derived_from(&t);
    let d = der.as_array().map(|tr| &tr.c - &tr.a);
    let (a, b, c) = (q(&t.a), q(&t.b), q(&t.c));
    let ab = &a * &b;
    let c4 = &c * &c * &c * &c;
    let r = |v: i64| Rat::from_integer(Int::from(v));
    let l = r(2) * (c4 - r(3) * &ab * &ab) / (&ab * &c);
    let l2 = &l * &l;
    let sum_sq: Rat = d.iter().map(|x| x * x).sum();
    let sum: Rat = d.iter().sum();
    let pairs = &d[0] * &d[1] + &d[0] * &d[2] + &d[1] * &d[2];
    let quad = [(&d[0] + &d[1] - &d[2]).abs(), (&d[0] - &d[1] + &d[2]).abs(), (-&d[0] + &d[1] + &d[2]).abs()];
    let prods = [r(4) * &d[0] * &d[1], r(4) * &d[0] * &d[2], r(4) * &d[1] * &d[2]];
    let products_square = prods.iter().zip(quad.iter()).all(|(p, qv)| rat_sqrt(p).as_ref() == Some(qv));
    Ok(DistanceReport {
        sum_sq_ok: r(2) * sum_sq == l2,
        sum_ok: &sum * &sum == l2,
        pair_ok: r(4) * pairs == l2,
        products_square,
        d,
        l,
        quad,
    })
}

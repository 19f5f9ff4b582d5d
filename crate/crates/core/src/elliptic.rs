//! Group law on y^2 = x^3 + a2 x^2 + a4 x + a6 over the rationals.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{Int, Rat};

/// Largest order of a rational torsion point (Mazur).
pub const MAZUR_BOUND: u32 = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve {
    pub a2: Rat,
    pub a4: Rat,
    pub a6: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Point {
    Infinity,
    Affine(Rat, Rat),
}

impl Point {
    pub fn new(x: Rat, y: Rat) -> Self {
        Point::Affine(x, y)
    }

    pub fn ints(x: i64, y: i64) -> Self {
        Point::Affine(Rat::from_integer(Int::from(x)), Rat::from_integer(Int::from(y)))
    }

    pub fn x(&self) -> Option<&Rat> {
        match self {
            Point::Affine(x, _) => Some(x),
            Point::Infinity => None,
        }
    }

    pub fn y(&self) -> Option<&Rat> {
        match self {
            Point::Affine(_, y) => Some(y),
            Point::Infinity => None,
        }
    }

    pub fn neg(&self) -> Point {
        match self {
            Point::Infinity => Point::Infinity,
            Point::Affine(x, y) => Point::Affine(x.clone(), -y),
        }
    }

    /// Equal, or equal after negating y.
    pub fn eq_up_to_sign(&self, o: &Point) -> bool {
        self == o || &self.neg() == o
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Infinity => write!(f, "inf"),
            Point::Affine(x, y) => write!(f, "({x}, {y})"),
        }
    }
}

impl Curve {
    /// Rejects singular cubics.
    pub fn new(a2: Rat, a4: Rat, a6: Rat) -> Result<Self> {
        let c = Curve { a2, a4, a6 };
        if c.discriminant().is_zero() {
            return Err(Error::Domain("singular curve".into()));
        }
        Ok(c)
    }

    /// E_N: y^2 = x^3 - N^2 x.
    pub fn congruent(n: &Rat) -> Result<Self> {
        Curve::new(Rat::zero(), -(n * n), Rat::zero())
    }

    pub fn congruent_int(n: i64) -> Result<Self> {
        Curve::congruent(&Rat::from_integer(Int::from(n)))
    }

    /// y^2 = (x + r1)(x + r2)(x + r3).
    pub fn from_roots(r1: &Rat, r2: &Rat, r3: &Rat) -> Result<Self> {
        Curve::new(r1 + r2 + r3, r1 * r2 + r1 * r3 + r2 * r3, r1 * r2 * r3)
    }

    /// Discriminant of the cubic, times 16.
    pub fn discriminant(&self) -> Rat {
        let (a, b, c) = (&self.a2, &self.a4, &self.a6);
        let r = |v: i64| Rat::from_integer(Int::from(v));
        let d = a * a * b * b - r(4) * b * b * b - r(4) * a * a * a * c - r(27) * c * c + r(18) * a * b * c;
        r(16) * d
    }

    pub fn rhs(&self, x: &Rat) -> Rat {
        ((x + &self.a2) * x + &self.a4) * x + &self.a6
    }

    pub fn on_curve(&self, p: &Point) -> bool {
        match p {
            Point::Infinity => true,
            Point::Affine(x, y) => y * y == self.rhs(x),
        }
    }

    fn check(&self, p: &Point) -> Result<()> {
        if self.on_curve(p) {
            Ok(())
        } else {
            Err(Error::OffCurve(p.to_string()))
        }
    }

    pub fn add(&self, p: &Point, q: &Point) -> Result<Point> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, q))
    }

    fn add_unchecked(&self, p: &Point, q: &Point) -> Point {
        let (x1, y1, x2, y2) = match (p, q) {
            (Point::Infinity, _) => return q.clone(),
            (_, Point::Infinity) => return p.clone(),
            (Point::Affine(x1, y1), Point::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        let lambda = if x1 == x2 {
            if (y1 + y2).is_zero() {
                return Point::Infinity;
            }
            let three = Rat::from_integer(Int::from(3));
            let two = Rat::from_integer(Int::from(2));
            (three * x1 * x1 + &two * &self.a2 * x1 + &self.a4) / (two * y1)
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let x3 = &lambda * &lambda - &self.a2 - x1 - x2;
        let y3 = -(y1 + &lambda * (&x3 - x1));
        Point::Affine(x3, y3)
    }

    pub fn double(&self, p: &Point) -> Result<Point> {
        self.add(p, p)
    }

    pub fn mul(&self, k: &Int, p: &Point) -> Result<Point> {
        self.check(p)?;
        if k < &Int::zero() {
            return Err(Error::Domain("negative multiplier".into()));
        }
        let mut acc = Point::Infinity;
        let mut base = p.clone();
        let bits = k.bits();
        for i in 0..bits {
            if k.bit(i) {
                acc = self.add_unchecked(&acc, &base);
            }
            if i + 1 < bits {
                base = self.add_unchecked(&base, &base);
            }
        }
        Ok(acc)
    }

    pub fn mul_small(&self, k: u32, p: &Point) -> Result<Point> {
        self.mul(&Int::from(k), p)
    }

    /// Order of `p` if it is at most `bound`.
    pub fn small_order(&self, p: &Point, bound: u32) -> Result<Option<u32>> {
        self.check(p)?;
        let mut acc = Point::Infinity;
        for k in 1..=bound {
            acc = self.add_unchecked(&acc, p);
            if acc == Point::Infinity {
                return Ok(Some(k));
            }
        }
        Ok(None)
    }

    /// No multiple up to the Mazur bound vanishes, so the point has infinite order.
    pub fn certify_infinite_order(&self, p: &Point) -> bool {
        matches!(self.small_order(p, MAZUR_BOUND), Ok(None))
    }
}

/// The neutral multiplier, handy in callers.
pub fn one() -> Int {
    Int::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn e6_and_e5_points() {
        let e6 = Curve::congruent_int(6).unwrap();
        assert!(e6.on_curve(&Point::ints(12, 36)));
        assert!(!e6.on_curve(&Point::ints(25, 120)));
        let e7 = Curve::congruent_int(7).unwrap();
        assert!(e7.on_curve(&Point::ints(25, 120)));
        let e5 = Curve::congruent_int(5).unwrap();
        assert!(e5.on_curve(&Point::ints(-4, 6)));
        assert!(e5.on_curve(&Point::Infinity));
    }

    #[test]
    fn doubling_on_e5() {
        let e5 = Curve::congruent_int(5).unwrap();
        let p2 = Point::new(rat(1681, 144), rat(-62279, 1728));
        assert_eq!(e5.double(&Point::ints(-4, 6)).unwrap(), p2);
        assert_eq!(e5.mul_small(2, &Point::ints(-4, 6)).unwrap(), p2);
        assert!(p2.eq_up_to_sign(&Point::new(rat(1681, 144), rat(62279, 1728))));
    }

    #[test]
    fn identity_and_inverse() {
        let e = Curve::congruent_int(78).unwrap();
        let p = Point::ints(-3, 135);
        assert_eq!(e.add(&p, &Point::Infinity).unwrap(), p);
        assert_eq!(e.add(&p, &p.neg()).unwrap(), Point::Infinity);
        assert_eq!(e.mul_small(0, &p).unwrap(), Point::Infinity);
        assert_eq!(e.mul_small(1, &p).unwrap(), p);
        assert_eq!(e.mul_small(2, &Point::Infinity).unwrap(), Point::Infinity);
        assert_eq!(e.add(&Point::ints(0, 0), &p).unwrap(), Point::ints(2028, 91260));
    }

    #[test]
    fn two_torsion() {
        let e = Curve::congruent_int(5).unwrap();
        for x in [0, 5, -5] {
            assert_eq!(e.small_order(&Point::ints(x, 0), 12).unwrap(), Some(2));
        }
        assert!(!e.certify_infinite_order(&Point::ints(0, 0)));
        assert!(e.certify_infinite_order(&Point::ints(-4, 6)));
    }

    #[test]
    fn off_curve_rejected() {
        let e = Curve::congruent_int(5).unwrap();
        assert!(matches!(e.add(&Point::ints(1, 1), &Point::Infinity), Err(Error::OffCurve(_))));
    }

    #[test]
    fn singular_rejected() {
        assert!(Curve::congruent_int(0).is_err());
    }
}

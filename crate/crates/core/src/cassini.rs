//! Heegner-style systems linking (N, f1, f2) to Cassini ovals, with all oval
//! geometry carried in squared coordinates.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat_sqrt, Int, Rat};
use crate::triples::RatTriangle;

fn q(v: &Int) -> Rat {
    Rat::from_integer(v.clone())
}

fn r(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeegnerQuad {
    pub c1sq: Rat,
    pub c2: Rat,
    pub c3sq: Rat,
    pub c4sq: Rat,
}

impl HeegnerQuad {
    pub fn c1(&self) -> Option<Rat> {
        rat_sqrt(&self.c1sq)
    }

    pub fn c3(&self) -> Option<Rat> {
        rat_sqrt(&self.c3sq)
    }

    pub fn c4(&self) -> Option<Rat> {
        rat_sqrt(&self.c4sq)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LoopForm {
    One,
    Lemniscate,
    Two,
}

/// y^2 = sqrt(4 k a'^2 x^2 + b'^4) - k x^2 - a'^2; k = 1 is the classical oval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CassiniOval {
    pub a2: Rat,
    pub b4: Rat,
    pub k: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxisPoints {
    /// Positive x^2 of the X-axis points (each gives +-x).
    pub x_sq: Vec<Rat>,
    /// Positive y^2 of the Y-axis points.
    pub y_sq: Vec<Rat>,
    pub through_origin: bool,
    pub form: LoopForm,
}

impl CassiniOval {
    pub fn new(a2: Rat, b4: Rat) -> Result<Self> {
        Self::with_k(a2, b4, 1)
    }

    pub fn with_k(a2: Rat, b4: Rat, k: u32) -> Result<Self> {
        if !b4.is_positive() || a2.is_negative() || k == 0 {
            return Err(Error::Domain("need b'^4 > 0, a'^2 >= 0, k > 0".into()));
        }
        Ok(CassiniOval { a2, b4, k })
    }

    pub fn b2(&self) -> Option<Rat> {
        rat_sqrt(&self.b4)
    }

    pub fn loop_form(&self) -> LoopForm {
        let a4 = &self.a2 * &self.a2;
        match self.b4.cmp(&a4) {
            std::cmp::Ordering::Greater => LoopForm::One,
            std::cmp::Ordering::Equal => LoopForm::Lemniscate,
            std::cmp::Ordering::Less => LoopForm::Two,
        }
    }

    /// (y^2 + k x^2 + a'^2)^2 - 4 k a'^2 x^2 - b'^4 at squared coordinates.
    pub fn residual(&self, x_sq: &Rat, y_sq: &Rat) -> Rat {
        let k = r(self.k as i64);
        let s = y_sq + &k * x_sq + &self.a2;
        &s * &s - r(4) * &k * &self.a2 * x_sq - &self.b4
    }

    pub fn axis_points(&self) -> Result<AxisPoints> {
        let b2 = self.b2().ok_or_else(|| Error::NotSquare(format!("b'^4 = {}", self.b4)))?;
        let k = r(self.k as i64);
        let mut x_sq = vec![(&self.a2 + &b2) / &k];
        let inner = (&self.a2 - &b2) / &k;
        if inner.is_positive() {
            x_sq.insert(0, inner);
        }
        let ysq = &b2 - &self.a2;
        let y_sq = if ysq.is_positive() { vec![ysq] } else { Vec::new() };
        Ok(AxisPoints { x_sq, y_sq, through_origin: b2 == self.a2, form: self.loop_form() })
    }

    /// Sampled upper-half points for plotting, mirrored below.
    pub fn sample(&self, samples: usize) -> Vec<(f64, f64)> {
        let a2 = rat_f64(&self.a2);
        let b4 = rat_f64(&self.b4);
        let k = self.k as f64;
        let xmax = ((a2 + b4.sqrt()) / k).sqrt();
        let mut out = Vec::new();
        let steps = samples.max(2);
        for i in 0..steps {
            let x = -xmax + 2.0 * xmax * i as f64 / (steps - 1) as f64;
            let y2 = (4.0 * k * a2 * x * x + b4).sqrt() - k * x * x - a2;
            if y2 >= 0.0 {
                let y = y2.sqrt();
                out.push((x, y));
                out.push((x, -y));
            }
        }
        out
    }
}

fn rat_f64(v: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    v.to_f64().unwrap_or(f64::NAN)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Heegner {
    pub quad: HeegnerQuad,
    pub triangle: RatTriangle,
    pub oval: CassiniOval,
    pub axis: AxisPoints,
}

fn side(v: &Rat, what: &str) -> Result<Rat> {
    rat_sqrt(v).ok_or_else(|| Error::NotSquare(format!("{what} = {v} (invalid adjunction)")))
}

fn build_triangle(a2: Rat, b2: Rat) -> Result<RatTriangle> {
    let a = side(&a2, "a^2")?;
    let b = side(&b2, "b^2")?;
    let c = side(&(&a2 + &b2), "c^2")?;
    Ok(RatTriangle::new(a, b, c))
}

/// Two X-axis intersections: c1^2 = f1^2 f2^2, c2 = |N f1^2 - f2^2|/2.
pub fn heegner_two(n: &Int, f1: &Int, f2sq: &Rat) -> Result<Heegner> {
    let nn = q(n);
    let f1sq = q(&(f1 * f1));
    let c1sq = &f1sq * f2sq;
    let c2 = (&nn * &f1sq - f2sq).abs() / r(2);
    let c3sq = (&nn * &c1sq - &c2 * &c2).abs();
    let c4sq = &nn * &c1sq + &c2 * &c2;
    if c1sq.is_zero() || c2.is_zero() || c3sq.is_zero() {
        return Err(Error::Domain("degenerate Heegner quadruple".into()));
    }
    let a2 = &c3sq * &c4sq / (&c1sq * &c2 * &c2);
    let b2 = r(4) * &c1sq * &c2 * &c2 * &nn * &nn / (&c3sq * &c4sq);
    let triangle = build_triangle(a2, b2)?;
    let oval = CassiniOval::new(&c2 * &c2, &c1sq * &c1sq * &nn * &nn)?;
    let axis = oval.axis_points()?;
    Ok(Heegner { quad: HeegnerQuad { c1sq, c2, c3sq, c4sq }, triangle, oval, axis })
}

/// Four X-axis intersections: c3 = f1^2 - f2^2, c4^2 = 4 f1^2 f2^2, c1^2 = (c4^2 - c3^2)/N.
pub fn heegner_four(n: &Int, f1: &Int, f2sq: &Rat) -> Result<Heegner> {
    let nn = q(n);
    if nn.is_zero() {
        return Err(Error::Domain("N = 0".into()));
    }
    let f1sq = q(&(f1 * f1));
    let c3 = &f1sq - f2sq;
    let c3sq = &c3 * &c3;
    let c4sq = r(4) * &f1sq * f2sq;
    if c3sq.is_zero() || c4sq <= c3sq {
        return Err(Error::Domain(format!("need 0 < c3^2 < c4^2, got c3^2 = {c3sq}, c4^2 = {c4sq}")));
    }
    let c2 = &f1sq + f2sq;
    let c1sq = (&c4sq - &c3sq) / &nn;
    let a2 = &c1sq * &c2 * &c2 * &nn * &nn / (&c3sq * &c4sq);
    let b2 = r(4) * &c3sq * &c4sq / (&c1sq * &c2 * &c2);
    let triangle = build_triangle(a2, b2)?;
    let oval = CassiniOval::with_k(&c2 * &c2, &c1sq * &c1sq * &nn * &nn, 2)?;
    let axis = oval.axis_points()?;
    Ok(Heegner { quad: HeegnerQuad { c1sq, c2, c3sq, c4sq }, triangle, oval, axis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn unit_oval() {
        let o = CassiniOval::new(rat(1, 1), rat(4, 1)).unwrap();
        let ax = o.axis_points().unwrap();
        assert_eq!(ax.x_sq, vec![rat(3, 1)]);
        assert_eq!(ax.y_sq, vec![rat(1, 1)]);
        assert_eq!(ax.form, LoopForm::One);
        assert!(o.residual(&rat(3, 1), &rat(0, 1)).is_zero());
        assert!(o.residual(&rat(0, 1), &rat(1, 1)).is_zero());
    }

    #[test]
    fn lemniscate() {
        let o = CassiniOval::new(rat(4, 1), rat(16, 1)).unwrap();
        let ax = o.axis_points().unwrap();
        assert_eq!(ax.x_sq, vec![rat(8, 1)]);
        assert!(ax.y_sq.is_empty() && ax.through_origin);
        assert_eq!(ax.form, LoopForm::Lemniscate);
    }

    #[test]
    fn four_system_small() {
        let h = heegner_four(&int(7), &int(2), &rat(1, 1)).unwrap();
        assert_eq!(h.quad.c1sq, rat(1, 1));
        assert_eq!(h.quad.c2, rat(5, 1));
        assert_eq!(h.quad.c3sq, rat(9, 1));
        assert_eq!(h.quad.c4sq, rat(16, 1));
        assert!(h.triangle.check(&rat(7, 1)));
        assert_eq!(h.axis.x_sq, vec![rat(9, 1), rat(16, 1)]);
        assert!(heegner_four(&int(7), &int(1), &rat(1, 1)).is_err());
    }

    #[test]
    fn samples_lie_on_oval() {
        let o = CassiniOval::new(rat(4900, 1), rat(28561 * 841, 1)).unwrap();
        for (x, y) in o.sample(33) {
            let lhs = ((x - 70.0).powi(2) + y * y) * ((x + 70.0).powi(2) + y * y);
            assert!((lhs / (28561.0 * 841.0) - 1.0).abs() < 1e-6);
        }
    }
}

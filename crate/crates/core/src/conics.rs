//! Conjugate conics: triangles and curve points from (N, f1, f2), the
//! line-ellipse intersection family, reduce/raise to a squarefree area,
//! ellipse lattice points and the twin hyperbolas.

use num_traits::{One, Signed, Zero};

use crate::elliptic::{Curve, Point};
use crate::error::{Error, Result};
use crate::exact::{rat_sqrt, sgn, squarefree_decompose, Int, Rat};
use crate::polyrat::{Poly, RatFunc};
use crate::report::Check;
use crate::triples::RatTriangle;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Adjoin {
    None,
    SqrtN,
    Sqrt2N,
    Sqrt2,
}

impl Adjoin {
    /// (u * radical)^2 for f2 = u times the adjoined radical.
    pub fn square(self, u: &Int, n: &Int) -> Rat {
        let base = q(&(u * u));
        match self {
            Adjoin::None => base,
            Adjoin::SqrtN => base * q(n),
            Adjoin::Sqrt2N => base * q(n) * r(2),
            Adjoin::Sqrt2 => base * r(2),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicInput {
    pub n: Rat,
    pub f1: Int,
    /// f2 squared; an adjoined f2 = u sqrt(N) or u sqrt(2N) only enters through this.
    pub f2sq: Rat,
    pub f2_sign: i32,
    /// Sign of the ellipse ordinate e at the chosen point.
    pub e_sign: i32,
}

fn q(v: &Int) -> Rat {
    Rat::from_integer(v.clone())
}

fn r(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

impl ConicInput {
    pub fn new(n: Rat, f1: Int, f2sq: Rat) -> Self {
        ConicInput { n, f1, f2sq, f2_sign: 1, e_sign: 1 }
    }

    /// Integer f2 = u, or u sqrt(N), or u sqrt(2N).
    pub fn adjoined(n: &Int, f1: Int, u: &Int, adjoin: Adjoin) -> Self {
        let mut c = ConicInput::new(q(n), f1, adjoin.square(u, n));
        c.f2_sign = if u.is_negative() { -1 } else { 1 };
        c
    }

    pub fn with_e_sign(mut self, s: i32) -> Self {
        self.e_sign = s;
        self
    }

    fn parts(&self) -> Result<Parts> {
        if self.f1.is_zero() || !self.f2sq.is_positive() {
            return Err(Error::Domain("need f1 != 0 and f2^2 > 0".into()));
        }
        let f1sq = q(&(&self.f1 * &self.f1));
        let nf = &self.n * &f1sq;
        let d = &nf - &self.f2sq;
        let s = &nf + &self.f2sq;
        if d.is_zero() {
            return Err(Error::Domain("N f1^2 = f2^2".into()));
        }
        let e2 = &nf * &self.f2sq - &d * &d / r(4);
        if !e2.is_positive() {
            return Err(Error::Domain(format!("e^2 = {e2} is not positive")));
        }
        Ok(Parts { f1sq, d, s, e2 })
    }

    fn sign_f(&self) -> i32 {
        sgn(&q(&self.f1)) * self.f2_sign * self.e_sign
    }
}

struct Parts {
    f1sq: Rat,
    d: Rat,
    s: Rat,
    e2: Rat,
}

fn root(v: &Rat, what: &str) -> Result<Rat> {
    rat_sqrt(v).ok_or_else(|| Error::NotSquare(format!("{what} = {v}")))
}

fn signed(v: Rat, s: i32) -> Rat {
    if s < 0 {
        -v
    } else {
        v
    }
}

/// Right triangle of area N from the conjugate conics.
pub fn conic_triangle(inp: &ConicInput) -> Result<RatTriangle> {
    let p = inp.parts()?;
    let f = &inp.f2sq;
    let a2 = &p.e2 * &p.s * &p.s / (&p.f1sq * f * &p.d * &p.d);
    let b2 = r(4) * &inp.n * &inp.n * &p.f1sq * f * &p.d * &p.d / (&p.e2 * &p.s * &p.s);
    let a = root(&a2, "a^2")?;
    let b = root(&b2, "b^2")?;
    let c = root(&(&a2 + &b2), "c^2")?;
    let s = inp.sign_f() * sgn(&p.d);
    Ok(RatTriangle::new(signed(a, s), signed(b, s), signed(c, s)))
}

/// The two points of infinite order on E_N.
pub fn conic_ec_points(inp: &ConicInput) -> Result<(Point, Point)> {
    let p = inp.parts()?;
    let f = &inp.f2sq;
    let n2 = &inp.n * &inp.n;
    let h = &p.s / r(2);
    let d = &p.d;
    let f1_4 = &p.f1sq * &p.f1sq;
    let x1 = -(d * d) / (r(4) * &p.f1sq * f);
    let y1n = d.pow(5) - r(16) * &n2 * &f1_4 * f * f * d;
    let y1sq = &y1n * &y1n / (r(1024) * &p.e2 * &h * &h * &f1_4 * &p.f1sq * f * f * f);
    let y1 = signed(root(&y1sq, "y1^2")?, inp.sign_f() * sgn(&y1n));
    let x2 = r(4) * &n2 * &p.f1sq * f / (d * d);
    let y2n = r(16) * &n2 * &f1_4 * f * f - d.pow(4);
    let y2sq = &n2 * &n2 * &p.f1sq * f * &y2n * &y2n / (r(4) * &p.e2 * &h * &h * d.pow(6));
    let y2 = signed(root(&y2sq, "y2^2")?, inp.sign_f() * sgn(&y2n) * sgn(d));
    let e = Curve::congruent(&inp.n)?;
    let (p1, p2) = (Point::new(x1, y1), Point::new(x2, y2));
    for pt in [&p1, &p2] {
        if !e.on_curve(pt) {
            return Err(Error::OffCurve(pt.to_string()));
        }
    }
    Ok((p1, p2))
}

/// Closed-form triangle sides of the intersection family, in t.
pub fn intersect_closed_form() -> (RatFunc, RatFunc, RatFunc) {
    let f = |n: &[i64], d: &[i64]| RatFunc::from_ints(n, d).expect("nonzero");
    (
        f(&[3, 8, -24, 32, -16], &[2, -4]),
        f(&[-20, 72, -160, 320, -320, 128], &[-3, -8, 24, -32, 16]),
        f(&[41, -208, 688, -1216, 1504, -1792, 1792, -1024, 256], &[6, 4, -80, 160, -160, 64]),
    )
}

/// N(t) = (4t^2 + 1)(4t^2 - 8t + 5).
pub fn intersect_n_poly() -> Poly {
    &Poly::from_ints(&[1, 0, 4]) * &Poly::from_ints(&[5, -8, 4])
}

/// ab/2 = N(t) and a^2 + b^2 = c^2 for the closed form.
pub fn intersect_identities() -> Vec<Check> {
    let (a, b, c) = intersect_closed_form();
    let area = (&a * &b).scale(&Rat::new(Int::one(), Int::from(2)));
    vec![
        Check::new("ab/2 = (4t^2+1)(4t^2-8t+5)", area == RatFunc::from_poly(intersect_n_poly())),
        Check::new("a^2 + b^2 = c^2 in t", &(&a * &a) + &(&b * &b) == &c * &c),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Intersection {
    pub n: Rat,
    pub x_t: Rat,
    pub e_t: Rat,
    pub triangle: RatTriangle,
    pub p1: Point,
    pub p2: Point,
    /// Conic-route points scaled onto E_N; equal to p1, p2 up to sign.
    pub conic_p1: Point,
    pub conic_p2: Point,
}

fn scale_point(p: &Point, lambda: &Rat) -> Point {
    match p {
        Point::Infinity => Point::Infinity,
        Point::Affine(x, y) => Point::new(x * lambda * lambda, y * lambda * lambda * lambda),
    }
}

/// Second intersection of the line through (f^2, f^2) with slope t and the ellipse.
pub fn intersect_example(t: &Rat, f: &Int) -> Result<Intersection> {
    let two_t1 = r(2) * t - r(1);
    if two_t1.is_zero() || f.is_zero() {
        return Err(Error::Domain("need t != 1/2 and f != 0".into()));
    }
    let f2 = q(&(f * f));
    let t2 = t * t;
    let w = r(4) * &t2 + r(1);
    let quad = r(4) * &t2 - r(8) * t + r(5);
    let x_t = &f2 * &quad / &w;
    let e_t = &f2 * (-r(4) * &t2 + r(4) * t + r(1)) / &w;
    let inp = ConicInput::new(x_t.clone(), Int::one(), f2).with_e_sign(sgn(&e_t));
    let lambda = &w / q(&f.abs());
    let triangle = conic_triangle(&inp)?.scale(&lambda);
    let (c1, c2) = conic_ec_points(&inp)?;
    let n = &w * &quad;
    let u = r(4) * &t2 - r(4) * t - r(1);
    let v = r(4) * &t2 - r(4) * t + r(3);
    let p1 = Point::new(-r(4) * &two_t1 * &two_t1, r(2) * &two_t1 * &u * &v);
    let wq2 = &w * &w * &quad * &quad;
    let p2 = Point::new(&wq2 / (r(4) * &two_t1 * &two_t1), &wq2 * &u * &v / (r(8) * two_t1.pow(3)));
    let e = Curve::congruent(&n)?;
    for pt in [&p1, &p2] {
        if !e.on_curve(pt) {
            return Err(Error::OffCurve(pt.to_string()));
        }
    }
    Ok(Intersection {
        n,
        x_t,
        e_t,
        triangle,
        p1,
        p2,
        conic_p1: scale_point(&c1, &lambda),
        conic_p2: scale_point(&c2, &lambda),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruentResult {
    pub n_raw: Rat,
    pub n_primitive: Int,
    pub triangle: RatTriangle,
    /// x = u/v with u v = d s^2.
    pub square_factor: Int,
    pub denominator: Int,
    pub lambda: Rat,
    /// b was negated to make the area positive.
    pub flipped: bool,
}

/// Rescale a triangle of area x to area |squarefree(num(x) den(x))|.
pub fn reduce_raise(x: &Rat, tri: &RatTriangle, budget: u64) -> Result<CongruentResult> {
    if x.is_zero() {
        return Err(Error::Domain("x = 0".into()));
    }
    if &tri.area() != x || !tri.is_right() {
        return Err(Error::Domain(format!("triangle {tri} does not have area {x}")));
    }
    let (u, v) = (x.numer().clone(), x.denom().clone());
    let (d, s) = squarefree_decompose(&(&u * &v), budget)?;
    let lambda = Rat::new(v.clone(), s.clone());
    let mut triangle = tri.scale(&lambda);
    let flipped = d.is_negative();
    if flipped {
        triangle.b = -triangle.b;
    }
    Ok(CongruentResult {
        n_raw: x.clone(),
        n_primitive: d.abs(),
        triangle,
        square_factor: s,
        denominator: v,
        lambda,
        flipped,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePoint {
    pub x: Int,
    pub e: Int,
    /// Closed-form triangle of area x.
    pub triangle: RatTriangle,
    /// Triangle from the conic route with the same e.
    pub conic: RatTriangle,
}

fn lattice_xe(m: &Int, n: &Int) -> (Int, [Int; 4], [Int; 4]) {
    let (m2, n2, mn) = (m * m, n * n, m * n);
    let s = &m2 + &n2;
    let xs = [
        &s * (&m2 + Int::from(4) * &mn + Int::from(5) * &n2),
        &s * (&m2 - Int::from(4) * &mn + Int::from(5) * &n2),
        &s * (Int::from(5) * &m2 - Int::from(4) * &mn + &n2),
        &s * (Int::from(5) * &m2 + Int::from(4) * &mn + &n2),
    ];
    let ep = &s * (&m2 + Int::from(2) * &mn - &n2);
    let em = &s * (&m2 - Int::from(2) * &mn - &n2);
    (s, xs, [ep.clone(), em.clone(), ep, em])
}

fn lattice_legs(m: &Int, n: &Int) -> Result<[Rat; 4]> {
    let (m, n) = (q(m), q(n));
    let (m2, n2, mn) = (&m * &m, &n * &n, &m * &n);
    let two = r(2);
    let p = &m2 + &two * &mn - &n2;
    let mm = &m2 - &two * &mn - &n2;
    let fracs = [
        (&p * (&m2 + &two * &mn + r(3) * &n2), &two * &n * (&m + &n)),
        (&mm * (&m2 - &two * &mn + r(3) * &n2), &two * &n * (&m - &n)),
        (&p * (r(3) * &m2 - &two * &mn + &n2), &two * &m * (&m - &n)),
        (-(&mm * (r(3) * &m2 + &two * &mn + &n2)), &two * &m * (&m + &n)),
    ];
    let mut out: Vec<Rat> = Vec::with_capacity(4);
    for (i, (num, den)) in fracs.into_iter().enumerate() {
        if den.is_zero() || num.is_zero() {
            return Err(Error::Domain(format!("lattice point {} degenerate for ({m}, {n})", i + 1)));
        }
        out.push(num / den);
    }
    Ok([out[0].clone(), out[1].clone(), out[2].clone(), out[3].clone()])
}

/// The four ellipse lattice points for (N, f1, f2) = (x, 1, m^2 + n^2).
pub fn lattice_points(m: &Int, n: &Int) -> Result<Vec<LatticePoint>> {
    let (s, xs, es) = lattice_xe(m, n);
    let legs = lattice_legs(m, n)?;
    let mut out = Vec::with_capacity(4);
    for i in 0..4 {
        let x = q(&xs[i]);
        let a = legs[i].clone();
        let b = r(2) * &x / &a;
        let triangle = RatTriangle::from_legs(a, b)
            .ok_or_else(|| Error::NotSquare(format!("hypotenuse of lattice triangle {}", i + 1)))?;
        let inp = ConicInput::new(x, Int::one(), q(&(&s * &s))).with_e_sign(sgn(&q(&es[i])));
        let conic = conic_triangle(&inp)?;
        out.push(LatticePoint { x: xs[i].clone(), e: es[i].clone(), triangle, conic });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Secondary {
    pub slope: Rat,
    pub x2: Rat,
    pub e2: Rat,
    pub n: Rat,
    /// The displayed N_i2 polynomial at (m, n, t).
    pub n_formula: Rat,
    pub triangle: RatTriangle,
}

fn n_formula(i: usize, m: &Rat, n: &Rat, t: &Rat) -> Rat {
    let four = r(4);
    let (m2, n2, mn) = (m * m, n * n, m * n);
    let pre = (&four * t * t + r(1)) * (&m2 + &n2);
    let f = |k: i64| &four * t * (t + r(k));
    let g = |k: i64| &four * t * (r(5) * t + r(k));
    let inner = match i {
        0 => &m2 * (f(-2) + r(5)) + &four * &mn * (f(-1) - r(1)) + &n2 * (g(2) + r(1)),
        1 => &m2 * (f(2) + r(5)) - &four * &mn * (f(1) - r(1)) + &n2 * (g(-2) + r(1)),
        2 => &m2 * (g(-2) + r(1)) - &four * &mn * (f(1) - r(1)) + &n2 * (f(2) + r(5)),
        _ => &m2 * (g(2) + r(1)) + &four * &mn * (f(-1) - r(1)) + &n2 * (f(-2) + r(5)),
    };
    pre * inner
}

/// Second intersections of the lines through the lattice points, slopes t, -t, t, -t,
/// taking the positive root for e.
pub fn lattice_secondary(m: &Int, n: &Int, t: &Rat) -> Result<Vec<Secondary>> {
    let (s, xs, es) = lattice_xe(m, n);
    if s.is_zero() {
        return Err(Error::Domain("m = n = 0".into()));
    }
    let big_s = q(&(&s * &s));
    let lambda = r(4) * t * t + r(1);
    let mut out = Vec::with_capacity(4);
    for i in 0..4 {
        let slope = if i % 2 == 0 { t.clone() } else { -t };
        let (x, e) = (q(&xs[i]), q(&es[i]));
        let a2 = &slope * &slope + Rat::new(Int::one(), Int::from(4));
        let a1 = r(2) * &slope * (&e - &slope * &x) - &big_s * Rat::new(Int::from(3), Int::from(2));
        let x2 = -a1 / a2 - &x;
        if x2 == x {
            return Err(Error::Domain(format!("line {} is tangent", i + 1)));
        }
        let e2 = &slope * (&x2 - &x) + &e;
        let inp = ConicInput::new(x2.clone(), Int::one(), big_s.clone());
        let triangle = conic_triangle(&inp)?.scale(&lambda);
        let nn = &lambda * &lambda * &x2;
        out.push(Secondary { slope, n_formula: n_formula(i, &q(m), &q(n), t), x2, e2, n: nn, triangle });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Twin {
    pub n1: Rat,
    pub n2: Rat,
    pub tri1: RatTriangle,
    pub tri2: RatTriangle,
}

fn ev(c: &[i64], t: &Rat) -> Rat {
    Poly::from_ints(c).eval(t)
}

fn nonzero(v: Rat, what: &str) -> Result<Rat> {
    if v.is_zero() {
        Err(Error::Domain(format!("{what} vanishes")))
    } else {
        Ok(v)
    }
}

pub const TWIN_P1: [i64; 5] = [19, -12, 30, -36, 11];
pub const TWIN_P2: [i64; 5] = [43, -132, 66, 60, 11];

/// Congruent number polynomials N1, N2 and their triangles at t.
pub fn twin_hyperbolas(t: &Rat) -> Result<Twin> {
    let tt = t * t;
    if tt == r(3) || tt == r(1) {
        return Err(Error::Domain("t^2 in {1, 3}".into()));
    }
    let n1 = r(2) * ev(&TWIN_P1, t);
    let n2 = r(2) * ev(&TWIN_P2, t);
    let u1 = nonzero(ev(&[9, -10, 3], t) * ev(&[-31, 84, -62, 12, 1], t), "a1 numerator")?;
    let v1 = nonzero(ev(&[-1, -2, 1], t) * ev(&[17, -22, 7], t) * ev(&[25, -48, 46, -24, 5], t), "a1 denominator")?;
    let u2 = nonzero(ev(&[3, -2, 3], t) * ev(&[17, -60, 22, 36, 1], t), "a2 numerator")?;
    let v2 = nonzero(ev(&[-7, 2, 1], t) * ev(&[-1, -2, 7], t) * ev(&[13, -36, 22, 12, 5], t), "a2 denominator")?;
    let half = Rat::new(Int::one(), Int::from(2));
    let tri = |u: &Rat, v: &Rat, n: &Rat| -> Result<RatTriangle> {
        let a = -(u * n * &half / v);
        let b = -(r(4) * v / u);
        RatTriangle::from_legs(a, b).ok_or_else(|| Error::NotSquare("twin hypotenuse".into()))
    };
    Ok(Twin { tri1: tri(&u1, &v1, &n1)?, tri2: tri(&u2, &v2, &n2)?, n1, n2 })
}

/// Square-factor decompositions of H(x1) and H(x2), with H(x) = 2 h1^2 h2^2.
pub fn twin_identities() -> Vec<Check> {
    let f = |n: &[i64], d: &[i64]| RatFunc::from_ints(n, d).expect("nonzero");
    let h = Poly::from_ints(&[6, -8, 12, 8, 6]);
    let x1 = f(&[4, -6, 2], &[-3, 0, 1]);
    let x2 = f(&[3, -6, -1], &[-2, 0, 2]);
    let hx1 = RatFunc::compose(&h, &x1);
    let hx2 = RatFunc::compose(&h, &x2);
    let sq = |g: RatFunc| &g * &g;
    let t2m3 = Poly::from_ints(&[-3, 0, 1]);
    let t2m1 = Poly::from_ints(&[-1, 0, 1]);
    let k1 = sq(RatFunc::new(Poly::from_ints(&[9, -10, 3]), t2m3.pow(2)).expect("nonzero"));
    let want1 = &k1 * &RatFunc::from_poly(Poly::from_ints(&TWIN_P1).scale(&r(2)));
    let p2half = RatFunc::from_poly(Poly::from_ints(&TWIN_P2).scale(&Rat::new(Int::one(), Int::from(2))));
    let k2 = sq(RatFunc::new(Poly::from_ints(&[3, -2, 3]), t2m1.pow(2).scale(&r(2))).expect("nonzero"));
    let want2 = &k2 * &p2half;
    let printed = sq(RatFunc::new(Poly::from_ints(&[3, -2, 3]), t2m1.pow(2).scale(&r(4))).expect("nonzero"));
    let printed2 = &printed * &p2half;
    vec![
        Check::new("H(x1) = ((3t^2-10t+9)/(t^2-3)^2)^2 * 2(11t^4-36t^3+30t^2-12t+19)", hx1 == want1),
        Check::new("H(x2) = ((3t^2-2t+3)/(2(t^2-1)^2))^2 * (11t^4+60t^3+66t^2-132t+43)/2", hx2 == want2),
        Check::new("printed H(x2) form is H(x2)/4", hx2 == printed2.scale(&r(4))),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn small_conic() {
        let t = conic_triangle(&ConicInput::new(rat(5, 1), int(1), rat(1, 1))).unwrap();
        assert!(t.check(&rat(5, 1)));
        assert!(conic_triangle(&ConicInput::new(rat(1, 1), int(1), rat(1, 1))).is_err());
    }

    #[test]
    fn reduce_raise_cases() {
        let base = RatTriangle::new(rat(3, 2), rat(20, 3), rat(41, 6));
        let r45 = reduce_raise(&rat(45, 1), &base.scale(&rat(3, 1)), 1000).unwrap();
        assert_eq!(r45.n_primitive, int(5));
        assert_eq!(r45.lambda, rat(1, 3));
        assert_eq!(r45.triangle, base);
        let r54 = reduce_raise(&rat(5, 4), &base.scale(&rat(1, 2)), 1000).unwrap();
        assert_eq!(r54.n_primitive, int(5));
        let t14 = RatTriangle::new(rat(21, 2), rat(8, 3), rat(65, 6));
        let r72 = reduce_raise(&rat(7, 2), &t14.scale(&rat(1, 2)), 1000).unwrap();
        assert_eq!(r72.n_primitive, int(14));
        assert_eq!(r72.triangle, t14);
        assert!(reduce_raise(&rat(7, 1), &base, 1000).is_err());
    }

    #[test]
    fn intersect_t0_t1() {
        for t in [0, 1] {
            let r = intersect_example(&rat(t, 1), &int(1)).unwrap();
            assert_eq!(r.n, rat(5, 1));
            assert!(r.triangle.check(&rat(5, 1)));
        }
        assert!(intersect_example(&rat(1, 2), &int(1)).is_err());
    }

    #[test]
    fn twin_t0() {
        let tw = twin_hyperbolas(&rat(0, 1)).unwrap();
        assert_eq!((tw.n1.clone(), tw.n2.clone()), (rat(38, 1), rat(86, 1)));
        assert!(tw.tri1.check(&tw.n1) && tw.tri2.check(&tw.n2));
        assert!(twin_hyperbolas(&rat(1, 1)).is_err());
    }

    #[test]
    fn lattice_2_1() {
        for p in lattice_points(&int(2), &int(1)).unwrap() {
            assert!(p.triangle.check(&q(&p.x)));
        }
        assert!(lattice_points(&int(1), &int(1)).is_err());
    }
}

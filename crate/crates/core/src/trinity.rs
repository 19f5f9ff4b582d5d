//! The three sphere parameterizations in t, their vector algebra and
//! derivative identities, and a numeric check of the trigonometric circles.

use std::fmt;

use num_traits::Zero;

use crate::exact::{Int, Rat};
use crate::par::{self, Exec};
use crate::polyrat::{Poly, RatFunc};
use crate::report::Check;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vec3F {
    pub x: RatFunc,
    pub y: RatFunc,
    pub z: RatFunc,
}

fn r(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

impl Vec3F {
    pub fn new(x: RatFunc, y: RatFunc, z: RatFunc) -> Self {
        Vec3F { x, y, z }
    }

    pub fn zero() -> Self {
        Vec3F::new(RatFunc::zero(), RatFunc::zero(), RatFunc::zero())
    }

    pub fn constant(v: [Rat; 3]) -> Self {
        let [x, y, z] = v;
        Vec3F::new(RatFunc::constant(x), RatFunc::constant(y), RatFunc::constant(z))
    }

    pub fn components(&self) -> [&RatFunc; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn dot(&self, o: &Vec3F) -> RatFunc {
        let s = &(&self.x * &o.x) + &(&self.y * &o.y);
        &s + &(&self.z * &o.z)
    }

    pub fn cross(&self, o: &Vec3F) -> Vec3F {
        Vec3F::new(
            &(&self.y * &o.z) - &(&self.z * &o.y),
            &(&self.z * &o.x) - &(&self.x * &o.z),
            &(&self.x * &o.y) - &(&self.y * &o.x),
        )
    }

    pub fn norm2(&self) -> RatFunc {
        self.dot(self)
    }

    pub fn scale(&self, c: &Rat) -> Vec3F {
        Vec3F::new(self.x.scale(c), self.y.scale(c), self.z.scale(c))
    }

    /// Componentwise product with a constant vector.
    pub fn hadamard(&self, v: [Rat; 3]) -> Vec3F {
        Vec3F::new(self.x.scale(&v[0]), self.y.scale(&v[1]), self.z.scale(&v[2]))
    }

    /// Scalar function times a constant vector.
    pub fn from_scalar(f: &RatFunc, v: [Rat; 3]) -> Vec3F {
        Vec3F::new(f.scale(&v[0]), f.scale(&v[1]), f.scale(&v[2]))
    }

    pub fn sub(&self, o: &Vec3F) -> Vec3F {
        Vec3F::new(&self.x - &o.x, &self.y - &o.y, &self.z - &o.z)
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(|c| c.is_zero())
    }

    pub fn differentiate(&self, n: usize) -> Vec3F {
        Vec3F::new(self.x.differentiate(n), self.y.differentiate(n), self.z.differentiate(n))
    }

    pub fn eval_f64(&self, t: f64) -> [f64; 3] {
        [self.x.eval_f64(t), self.y.eval_f64(t), self.z.eval_f64(t)]
    }
}

impl fmt::Display for Vec3F {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.x, self.y, self.z)
    }
}

fn den8() -> Poly {
    // t^8 + 14 t^4 + 1
    Poly::from_ints(&[1, 0, 0, 0, 14, 0, 0, 0, 1])
}

fn rf(num: Poly, half: bool) -> RatFunc {
    let den = if half { den8().scale(&r(2, 1)) } else { den8() };
    RatFunc::new(num, den).expect("nonzero denominator")
}

/// Sphere S_i with its squared radius.
pub fn sphere_params(i: u8) -> Option<(Vec3F, Rat)> {
    let p = Poly::from_ints;
    let t2m1 = p(&[-1, 0, 1]);
    let t2p1 = p(&[1, 0, 1]);
    let four_t2 = p(&[0, 0, 4]);
    match i {
        1 => Some((
            Vec3F::new(
                rf(p(&[-1, 0, 0, 0, 1]).pow(2), false),
                rf(&four_t2 * &t2p1.pow(2), false),
                rf(&four_t2 * &t2m1.pow(2), false),
            ),
            r(1, 1),
        )),
        2 => Some((
            Vec3F::new(
                rf(&four_t2 * &p(&[1, 0, 0, 0, 1]), false),
                rf(&t2m1.pow(2) * &p(&[1, 0, 6, 0, 1]), true),
                rf(-&(&t2p1.pow(2) * &p(&[1, 0, -6, 0, 1])), true),
            ),
            r(1, 2),
        )),
        3 => Some((
            Vec3F::new(
                rf(p(&[1, 0, 0, 0, 6, 0, 0, 0, 1]), false),
                rf(p(&[1, 0, 4, 0, 22, 0, 4, 0, 1]), true),
                rf(p(&[1, 0, -4, 0, 22, 0, -4, 0, 1]), true),
            ),
            r(3, 2),
        )),
        _ => None,
    }
}

fn is_const(f: &RatFunc, c: Rat) -> bool {
    f.as_constant() == Some(c)
}

/// Plane, norm and componentwise Pythagoras relations plus the derivative
/// plane relations up to `max_order`.
pub fn verify_sphere_relations(max_order: usize) -> Vec<Check> {
    let s: Vec<Vec3F> = (1..=3).map(|i| sphere_params(i).unwrap().0).collect();
    let radii = [r(1, 1), r(1, 2), r(3, 2)];
    let plane = |v: &Vec3F, sy: i64, sz: i64| {
        let y = v.y.scale(&r(sy, 1));
        let z = v.z.scale(&r(sz, 1));
        &(&v.x + &y) + &z
    };
    let planes = [(1, -1, 1), (-1, -1, 0), (1, 1, 2)];
    let mut out = Vec::new();
    for (i, (sy, sz, k)) in planes.iter().enumerate() {
        out.push(Check::new(
            format!("plane S{}: x {} y {} z = {k}", i + 1, sign(*sy), sign(*sz)),
            is_const(&plane(&s[i], *sy, *sz), r(*k, 1)),
        ));
        out.push(Check::new(format!("norm S{} = {}", i + 1, radii[i]), is_const(&s[i].norm2(), radii[i].clone())));
    }
    let names = ["x", "y", "z"];
    for (k, name) in names.iter().enumerate() {
        let lhs = &(s[0].components()[k] * s[0].components()[k]) + &(s[1].components()[k] * s[1].components()[k]);
        let rhs = s[2].components()[k] * s[2].components()[k];
        out.push(Check::new(format!("{name}1^2 + {name}2^2 = {name}3^2"), lhs == rhs));
    }
    for n in 1..=max_order {
        let d: Vec<Vec3F> = s.iter().map(|v| v.differentiate(n)).collect();
        for (i, (sy, sz, _)) in planes.iter().enumerate() {
            out.push(Check::new(format!("d^{n} plane S{} vanishes", i + 1), plane(&d[i], *sy, *sz).is_zero()));
        }
    }
    out
}

fn sign(s: i64) -> &'static str {
    if s < 0 {
        "-"
    } else {
        "+"
    }
}

/// a = (x,y,z)_1, b = (x,-y,z)_2, c = (x,y,-z)_3.
pub fn trinity_vectors() -> (Vec3F, Vec3F, Vec3F) {
    let (s1, _) = sphere_params(1).unwrap();
    let (s2, _) = sphere_params(2).unwrap();
    let (s3, _) = sphere_params(3).unwrap();
    let b = Vec3F::new(s2.x, -&s2.y, s2.z);
    let c = Vec3F::new(s3.x, s3.y, -&s3.z);
    (s1, b, c)
}

/// Dot, cross, triple-product and angle relations of a, b, c.
pub fn verify_vector_relations() -> Vec<Check> {
    let (a, b, c) = trinity_vectors();
    let half = r(1, 2);
    let mut out = vec![
        Check::new("|a|^2 = 1", is_const(&a.norm2(), r(1, 1))),
        Check::new("|b|^2 = 1/2", is_const(&b.norm2(), half.clone())),
        Check::new("|c|^2 = 3/2", is_const(&c.norm2(), r(3, 2))),
        Check::new("a.b = 0", a.dot(&b).is_zero()),
        Check::new("b.c = 0", b.dot(&c).is_zero()),
        Check::new("a.c = 1", is_const(&a.dot(&c), r(1, 1))),
        Check::new("a.(b x c) = 1/2", is_const(&a.dot(&b.cross(&c)), half.clone())),
        Check::new("b.(c x a) = 1/2", is_const(&b.dot(&c.cross(&a)), half.clone())),
        Check::new("c.(a x b) = 1/2", is_const(&c.dot(&a.cross(&b)), half)),
    ];
    let axbc = a.cross(&b.cross(&c));
    out.push(Check::new("a x (b x c) = b", axbc == b));
    out.push(Check::new("c x (b x a) = b", c.cross(&b.cross(&a)) == b));
    out.push(Check::new("c x a = b", c.cross(&a) == b));
    out.push(Check::new("b x (a x c) = 0", b.cross(&a.cross(&c)).is_zero()));
    let ac = a.dot(&c);
    let cos2 = (&ac * &ac).div(&(&a.norm2() * &c.norm2()));
    out.push(Check::new("(a.c)^2 / (|a|^2 |c|^2) = 2/3", cos2.ok().is_some_and(|f| is_const(&f, r(2, 3)))));
    let axb = a.cross(&b);
    let t1 = axb.dot(&c);
    let cos2t = (&t1 * &t1).div(&(&axb.norm2() * &c.norm2()));
    out.push(Check::new("((a x b).c)^2 / (|a x b|^2 |c|^2) = 1/3", cos2t.ok().is_some_and(|f| is_const(&f, r(1, 3)))));
    let bxc = b.cross(&c);
    let t2 = bxc.dot(&a);
    let cos2u = (&t2 * &t2).div(&(&bxc.norm2() * &a.norm2()));
    out.push(Check::new("((b x c).a)^2 / (|b x c|^2 |a|^2) = 1/3", cos2u.ok().is_some_and(|f| is_const(&f, r(1, 3)))));
    out
}

struct Derivs {
    a: Vec<Vec3F>,
    b: Vec<Vec3F>,
    c: Vec<Vec3F>,
}

fn derivs(max: usize) -> Derivs {
    let (a, b, c) = trinity_vectors();
    let build = |v: Vec3F| {
        let mut out = vec![v];
        for _ in 0..max {
            let next = out.last().unwrap().differentiate(1);
            out.push(next);
        }
        out
    };
    Derivs { a: build(a), b: build(b), c: build(c) }
}

fn same_order_checks(d: &Derivs, n: usize) -> Vec<Check> {
    let (a, b, c) = (&d.a[n], &d.b[n], &d.c[n]);
    let ac = a.dot(c);
    let mut out = vec![
        Check::new(format!("d{n}a.d{n}b = 0"), a.dot(b).is_zero()),
        Check::new(format!("d{n}b.d{n}c = 0"), b.dot(c).is_zero()),
        Check::new(format!("d{n}a.d{n}c = |d{n}a|^2/2"), ac == a.norm2().scale(&r(1, 2))),
        Check::new(format!("d{n}a.d{n}c = 2|d{n}b|^2/3"), ac == b.norm2().scale(&r(2, 3))),
        Check::new(format!("d{n}a.d{n}c = 2|d{n}c|^2"), ac == c.norm2().scale(&r(2, 1))),
        Check::new(format!("d{n}a x d{n}c = 0"), a.cross(c).is_zero()),
    ];
    out.retain(|_| true);
    out
}

fn mixed_checks(d: &Derivs, n: usize, m: usize) -> Vec<Check> {
    let (an, bn) = (&d.a[n], &d.b[n]);
    let (am, bm, cm) = (&d.a[m], &d.b[m], &d.c[m]);
    let cn = &d.c[n];
    let tag = format!("(n,m)=({n},{m})");
    let two = r(2, 1);
    let bc_dot = bn.dot(cm);
    let ba_dot = bn.dot(am);
    let bc_cross = bn.cross(cm);
    let ba_cross = bn.cross(am);
    let ac_dot = an.dot(cm);
    let ac_cross = an.cross(cm);
    let mmp = [r(-1, 1), r(-1, 1), r(1, 1)];
    let ppm = [r(1, 1), r(1, 1), r(-1, 1)];
    let dots = [an.dot(am).scale(&r(3, 1)), bn.dot(bm).scale(&r(4, 1)), cn.dot(cm).scale(&r(12, 1))];
    let crosses = [an.cross(am).scale(&r(3, 1)), bn.cross(bm).scale(&r(4, 1)), cn.cross(cm).scale(&r(12, 1))];
    let two_bc_cross = bc_cross.scale(&two);
    let two_bc_dot_v = Vec3F::from_scalar(&bc_dot.scale(&two), ppm.clone());
    vec![
        Check::new(format!("2 db.dc = db.da {tag}"), bc_dot.scale(&two) == ba_dot),
        Check::new(format!("2 db x dc = db x da {tag}"), two_bc_cross == ba_cross),
        Check::new(format!("3 da.da = 4 db.db = 12 dc.dc {tag}"), dots[0] == dots[1] && dots[1] == dots[2]),
        Check::new(
            format!("3 da x da = 4 db x db = 12 dc x dc {tag}"),
            crosses[0] == crosses[1] && crosses[1] == crosses[2],
        ),
        Check::new(
            format!("(da.dc)(-1,-1,1) = 2 db x dc = db x da {tag}"),
            Vec3F::from_scalar(&ac_dot, mmp) == two_bc_cross && two_bc_cross == ba_cross,
        ),
        Check::new(
            format!("3 da x dc = 2 (db.dc)(1,1,-1) = (db.da)(1,1,-1) {tag}"),
            ac_cross.scale(&r(3, 1)) == two_bc_dot_v && two_bc_dot_v == Vec3F::from_scalar(&ba_dot, ppm),
        ),
    ]
}

/// Same-order and mixed-order derivative identities for orders 1..=max.
pub fn verify_derivative_identities(max_n: usize, max_m: usize, exec: Exec) -> Vec<Check> {
    let max = max_n.max(max_m);
    let d = derivs(max);
    let mut jobs: Vec<(usize, usize)> = Vec::new();
    for n in 1..=max_n {
        for m in 1..=max_m {
            jobs.push((n, m));
        }
    }
    let same: Vec<usize> = (1..=max_n.min(max_m)).collect();
    let mut out = par::flat_map(exec, &same, |&n| same_order_checks(&d, n));
    out.extend(par::flat_map(exec, &jobs, |&(n, m)| mixed_checks(&d, n, m)));
    out
}

/// Sum of squared sides of the derived triangles against the closed form.
pub fn triple_sum_identity(m: &Int, n: &Int) -> crate::error::Result<bool> {
    let t = crate::triples::euclid(m, n)?;
    let d = crate::triples::derived_from(&t);
    let tr = d.as_array();
    let sa: Rat = tr.iter().map(|x| &x.a * &x.a).sum();
    let sb: Rat = tr.iter().map(|x| &x.b * &x.b).sum();
    let sc: Rat = tr.iter().map(|x| &x.c * &x.c).sum();
    let q = |v: &Int| Rat::from_integer(v.clone());
    let (a, b, c) = (q(&t.a), q(&t.b), q(&t.c));
    let c4 = &c * &c * &c * &c;
    let ab2 = &a * &b * &a * &b;
    let abc = &a * &b * &c;
    let rhs = r(4, 1) * (&c4 - &ab2) * (&c4 - &ab2) / (&abc * &abc);
    Ok(sa == rhs && r(2, 1) * sb == rhs && r(2, 3) * sc == rhs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Circle {
    C1,
    C2,
    C3,
}

impl Circle {
    pub fn variants(self) -> Vec<[f64; 3]> {
        let all: Vec<[f64; 3]> = [-1.0, 1.0]
            .iter()
            .flat_map(|&x| [-1.0, 1.0].into_iter().flat_map(move |y| [-1.0, 1.0].into_iter().map(move |z| [x, y, z])))
            .collect();
        match self {
            Circle::C2 => vec![[1.0, 1.0, 1.0], [-1.0, 1.0, 1.0], [1.0, -1.0, 1.0], [1.0, 1.0, -1.0]],
            _ => all,
        }
    }

    /// Base point at angle t, using the plotted form for C3.
    pub fn point(self, t: f64) -> [f64; 3] {
        let (c, s) = (t.cos(), t.sin());
        let r3 = 3f64.sqrt();
        match self {
            Circle::C1 => [1.0 / 3.0 - c / r3 - s / 3.0, 1.0 / 3.0 + c / r3 - s / 3.0, 1.0 / 3.0 + 2.0 * s / 3.0],
            Circle::C2 => [-c / 2.0 - s / (2.0 * r3), -c / 2.0 + s / (2.0 * r3), -s / r3],
            Circle::C3 => {
                [2.0 / 3.0 - c / (2.0 * r3) - s / 6.0, 2.0 / 3.0 + c / (2.0 * r3) - s / 6.0, 2.0 / 3.0 + s / 3.0]
            }
        }
    }

    /// C3 exactly as printed in the caption, z = 2/3 - sin(t)/6.
    pub fn caption_c3(t: f64) -> [f64; 3] {
        let mut p = Circle::C3.point(t);
        p[2] = 2.0 / 3.0 - t.sin() / 6.0;
        p
    }

    fn sphere_r2(self) -> f64 {
        match self {
            Circle::C1 => 1.0,
            Circle::C2 => 0.5,
            Circle::C3 => 1.5,
        }
    }

    fn plane_rhs(self) -> f64 {
        match self {
            Circle::C1 => 1.0,
            Circle::C2 => 0.0,
            Circle::C3 => 2.0,
        }
    }

    fn center_scale(self) -> f64 {
        match self {
            Circle::C1 => 1.0 / 3.0,
            Circle::C2 => 0.0,
            Circle::C3 => 2.0 / 3.0,
        }
    }

    pub fn circle_r2(self) -> f64 {
        match self {
            Circle::C1 => 2.0 / 3.0,
            Circle::C2 => 0.5,
            Circle::C3 => 1.0 / 6.0,
        }
    }

    /// Plane normal for the base circle; C2 lies in x - y - z = 0.
    fn normal(self) -> [f64; 3] {
        match self {
            Circle::C2 => [1.0, -1.0, -1.0],
            _ => [1.0, 1.0, 1.0],
        }
    }

    /// Second sphere (center scale, radius^2) whose intersection with the
    /// origin sphere is this circle.
    fn second_sphere(self) -> Option<(f64, f64)> {
        match self {
            Circle::C1 => Some((1.0, 2.0)),
            Circle::C3 => Some((0.75, 3.0 / 16.0)),
            Circle::C2 => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CircleReport {
    pub circle: Circle,
    pub variants: usize,
    pub samples: usize,
    /// Largest absolute residual over all variants, samples and conditions.
    pub max_residual: f64,
    pub tolerance: f64,
}

impl CircleReport {
    pub fn pass(&self) -> bool {
        self.max_residual < self.tolerance
    }
}

pub const CIRCLE_TOL: f64 = 1e-9;

fn dot3(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn dist2(a: [f64; 3], b: [f64; 3]) -> f64 {
    (0..3).map(|i| (a[i] - b[i]).powi(2)).sum()
}

/// Residuals of `point` against sphere, plane, center distance and (for C1
/// and C3) the second sphere, for sign variant `s`.
pub fn circle_residual(circle: Circle, s: [f64; 3], p: [f64; 3]) -> f64 {
    let q = [s[0] * p[0], s[1] * p[1], s[2] * p[2]];
    let n = circle.normal();
    let ns = [s[0] * n[0], s[1] * n[1], s[2] * n[2]];
    let k = circle.center_scale();
    let center = [s[0] * k, s[1] * k, s[2] * k];
    let mut res = [
        (dot3(q, q) - circle.sphere_r2()).abs(),
        (dot3(ns, q) - circle.plane_rhs()).abs(),
        (dist2(q, center) - circle.circle_r2()).abs(),
    ]
    .into_iter()
    .fold(0.0, f64::max);
    if let Some((scale, r2)) = circle.second_sphere() {
        let far = [s[0] * scale, s[1] * scale, s[2] * scale];
        res = res.max((dist2(q, far) - r2).abs());
    }
    res
}

pub fn circle_check(circle: Circle, samples: usize) -> CircleReport {
    let variants = circle.variants();
    let mut max_residual: f64 = 0.0;
    for k in 0..samples {
        let t = -std::f64::consts::PI + 2.0 * std::f64::consts::PI * k as f64 / samples as f64;
        let p = circle.point(t);
        for s in &variants {
            max_residual = max_residual.max(circle_residual(circle, *s, p));
        }
    }
    CircleReport { circle, variants: variants.len(), samples, max_residual, tolerance: CIRCLE_TOL }
}

/// Every symbolic identity plus the numeric circle checks.
pub fn verify(max_order: usize, samples: usize, exec: Exec) -> (Vec<Check>, Vec<CircleReport>) {
    let mut checks = verify_sphere_relations(max_order);
    checks.extend(verify_vector_relations());
    checks.extend(verify_derivative_identities(max_order, max_order, exec));
    let circles: Vec<CircleReport> =
        [Circle::C1, Circle::C2, Circle::C3].iter().map(|c| circle_check(*c, samples)).collect();
    (checks, circles)
}

/// True when a constant RatFunc equals `v`; used by callers printing values.
pub fn const_value(f: &RatFunc) -> Option<Rat> {
    f.as_constant().filter(|c| !c.is_zero() || f.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere1_x_component() {
        let (s1, r2) = sphere_params(1).unwrap();
        let num = Poly::from_ints(&[1, 0, 0, 0, -2, 0, 0, 0, 1]);
        assert_eq!(s1.x, RatFunc::new(num, den8()).unwrap());
        assert_eq!(r2, r(1, 1));
        assert_eq!(sphere_params(3).unwrap().1, r(3, 2));
        assert!(sphere_params(4).is_none());
        let at2: Rat = s1
            .components()
            .iter()
            .map(|f| {
                let v = f.eval(&r(2, 1)).unwrap();
                &v * &v
            })
            .sum();
        assert_eq!(at2, r(1, 1));
    }

    #[test]
    fn circle_points() {
        let p = Circle::C2.point(0.0);
        assert!((p[0] + 0.5).abs() < 1e-15 && (p[1] + 0.5).abs() < 1e-15 && p[2].abs() < 1e-15);
        let q = Circle::C1.point(std::f64::consts::FRAC_PI_2);
        assert!(q[0].abs() < 1e-12 && q[1].abs() < 1e-12 && (q[2] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn caption_c3_is_off_the_plane() {
        let p = Circle::caption_c3(1.0);
        assert!(circle_residual(Circle::C3, [1.0; 3], p) > 1e-3);
    }

    #[test]
    fn triple_sums() {
        assert!(triple_sum_identity(&Int::from(2), &Int::from(1)).unwrap());
        assert!(triple_sum_identity(&Int::from(7), &Int::from(4)).unwrap());
    }
}

//! The congruent-number recurrence: pick a side p/q of a triangle with area N,
//! step to (r, p r, q^2 N) with r^2 = p^4 + 4 N^2 q^4, and walk the side tree.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{is_square, parse_int, parse_rat, rat_sqrt, Int, Rat};
use crate::par::{self, Exec};
use crate::report::Check;
use crate::triples::{euclid, RatTriangle};

const TABLE: &str = include_str!("../data/recurrence.txt");

/// Walks longer than this are rejected.
pub const MAX_WALK: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecState {
    pub n: Int,
    pub p: Int,
    pub q: Int,
}

impl RecState {
    /// (p/q, 2Nq/p, sqrt(p^4 + 4N^2q^4)/(pq)).
    pub fn triangle(&self) -> Result<RatTriangle> {
        if self.p.is_zero() || self.q.is_zero() {
            return Err(Error::DivByZero);
        }
        let n = Rat::from_integer(self.n.clone());
        let a = Rat::new(self.p.clone(), self.q.clone());
        let b = Rat::from_integer(Int::from(2)) * &n / &a;
        let c = rat_sqrt(&(&a * &a + &b * &b)).ok_or_else(|| Error::NotSquare("not a right-triangle state".into()))?;
        Ok(RatTriangle::new(a, b, c))
    }
}

impl fmt::Display for RecState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n, self.p, self.q)
    }
}

/// (N, numerator, denominator) of the chosen side in lowest terms.
pub fn assign(tri: &RatTriangle, side: Side, n: &Int) -> Result<RecState> {
    let s = match side {
        Side::A => &tri.a,
        Side::B => &tri.b,
    };
    if s.is_zero() {
        return Err(Error::Domain("chosen side is zero".into()));
    }
    let s = s.abs();
    Ok(RecState { n: n.clone(), p: s.numer().clone(), q: s.denom().clone() })
}

/// (N, p, q) -> (r, p r, q^2 N).
pub fn rec_step(s: &RecState) -> Result<RecState> {
    let p2 = &s.p * &s.p;
    let q2 = &s.q * &s.q;
    let rad = &p2 * &p2 + Int::from(4) * &s.n * &s.n * &q2 * &q2;
    let r = is_square(&rad).ok_or_else(|| Error::NotSquare("not a right-triangle state".into()))?;
    Ok(RecState { p: &s.p * &r, q: q2 * &s.n, n: r })
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WalkPath(pub Vec<Side>);

impl FromStr for WalkPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "-" {
            return Ok(WalkPath(Vec::new()));
        }
        s.chars()
            .map(|c| match c {
                'a' | 'A' => Ok(Side::A),
                'b' | 'B' => Ok(Side::B),
                _ => Err(Error::Parse(format!("walk path {s:?}: only a and b allowed"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(WalkPath)
    }
}

impl fmt::Display for WalkPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        for s in &self.0 {
            f.write_str(match s {
                Side::A => "a",
                Side::B => "b",
            })?;
        }
        Ok(())
    }
}

/// Congruent numbers and triangles after each step of the path.
pub fn walk(tri0: &RatTriangle, n0: &Int, path: &WalkPath) -> Result<Vec<(Int, RatTriangle)>> {
    if path.0.len() > MAX_WALK {
        return Err(Error::Domain(format!("walk longer than {MAX_WALK}")));
    }
    let mut tri = tri0.clone();
    let mut n = n0.clone();
    let mut out = Vec::with_capacity(path.0.len());
    for &side in &path.0 {
        let s = rec_step(&assign(&tri, side, &n)?)?;
        tri = s.triangle()?;
        n = s.n;
        out.push((n.clone(), tri.clone()));
    }
    Ok(out)
}

fn euclid_triangle(m: &Int, n: &Int) -> Result<(Int, RatTriangle)> {
    let t = euclid(m, n)?;
    Ok((t.area(), t.to_triangle()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    APow(u32),
    AB,
    BB,
}

impl ClosedForm {
    /// The literal walk each printed side-path label corresponds to.
    pub fn walk_path(self) -> WalkPath {
        match self {
            ClosedForm::APow(i) => WalkPath(vec![Side::A; i as usize]),
            ClosedForm::AB => WalkPath(vec![Side::B]),
            ClosedForm::BB => WalkPath(vec![Side::B, Side::A]),
        }
    }

    pub fn label(self) -> String {
        match self {
            ClosedForm::APow(i) => format!("a^{i}"),
            ClosedForm::AB => "ab".into(),
            ClosedForm::BB => "bb".into(),
        }
    }
}

fn pw(x: &Int, e: u64) -> Int {
    num_traits::pow(x.clone(), e as usize)
}

pub fn closed_form(m: &Int, n: &Int, which: ClosedForm) -> Result<RatTriangle> {
    euclid(m, n)?;
    let q = |v: Int| Rat::from_integer(v);
    let (m2, n2) = (m * m, n * n);
    let d = &m2 - &n2;
    Ok(match which {
        ClosedForm::APow(i) => {
            if i == 0 {
                return Err(Error::Domain("a^i needs i >= 1".into()));
            }
            let e = 1u64 << (i + 1);
            let den = q(pw(&(m * n), 1u64 << (i - 1)));
            RatTriangle::new(q(pw(m, e) - pw(n, e)) / &den, q(Int::from(2)) * &den, q(pw(m, e) + pw(n, e)) / &den)
        }
        ClosedForm::AB => {
            let c = &m2 * &m2 + Int::from(6) * &m2 * &n2 + &n2 * &n2;
            RatTriangle::new(q(Int::from(4) * m * n * (&m2 + &n2)) / q(d.clone()), q(d.clone()), q(c) / q(d))
        }
        ClosedForm::BB => {
            let d2 = q(&d * &d);
            let (m4, n4) = (&m2 * &m2, &n2 * &n2);
            let a =
                Int::from(8) * m * n * (&m4 * &m2 + Int::from(7) * &m4 * &n2 + Int::from(7) * &m2 * &n4 + &n4 * &n2);
            let c = &m4 * &m4
                + Int::from(28) * &m4 * &m2 * &n2
                + Int::from(70) * &m4 * &n4
                + Int::from(28) * &m2 * &n4 * &n2
                + &n4 * &n4;
            RatTriangle::new(q(a) / &d2, d2.clone(), q(c) / &d2)
        }
    })
}

/// The closed form against the walk from euclid(m, n).
pub fn closed_form_check(m: &Int, n: &Int, which: ClosedForm) -> Result<Check> {
    let want = closed_form(m, n, which)?;
    let (n0, t0) = euclid_triangle(m, n)?;
    let steps = walk(&t0, &n0, &which.walk_path())?;
    let (_, got) = steps.last().ok_or_else(|| Error::Domain("empty walk".into()))?;
    Ok(Check::with(format!("{} closed form at ({m}, {n})", which.label()), got == &want, got.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableCell {
    pub root_n: Int,
    pub root: RatTriangle,
    pub path: WalkPath,
    pub n: Int,
    pub triangle: RatTriangle,
}

pub fn parse_cells(text: &str) -> Result<Vec<TableCell>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() != 9 {
            return Err(Error::Parse(format!("line {}: expected 9 fields", i + 1)));
        }
        let tri = |a: &str, b: &str, c: &str| -> Result<RatTriangle> {
            Ok(RatTriangle::new(parse_rat(a)?, parse_rat(b)?, parse_rat(c)?))
        };
        out.push(TableCell {
            root_n: parse_int(f[0])?,
            root: tri(f[1], f[2], f[3])?,
            path: f[4].parse()?,
            n: parse_int(f[5])?,
            triangle: tri(f[6], f[7], f[8])?,
        });
    }
    Ok(out)
}

pub fn table_cells() -> Vec<TableCell> {
    parse_cells(TABLE).expect("bundled recurrence table parses")
}

pub fn check_cell(cell: &TableCell) -> Check {
    let name = format!("{} {}", cell.root_n, cell.path);
    let got = if cell.path.0.is_empty() {
        Ok((cell.root_n.clone(), cell.root.clone()))
    } else {
        walk(&cell.root, &cell.root_n, &cell.path).map(|v| v.last().cloned().expect("nonempty walk"))
    };
    match got {
        Ok((n, t)) => {
            let area_ok = t.check(&Rat::from_integer(n.clone()));
            let pass = n == cell.n && t == cell.triangle && area_ok;
            Check::with(name, pass, format!("{n}: {t}"))
        }
        Err(e) => Check::with(name, false, e.to_string()),
    }
}

pub fn table_check(exec: Exec) -> Vec<Check> {
    par::map(exec, &table_cells(), check_cell)
}

/// True when (m, n) is a valid coprime, opposite-parity generator pair.
pub fn is_primitive_pair(m: &Int, n: &Int) -> bool {
    use num_integer::Integer;
    m > n && n.is_positive() && m.gcd(n).is_one() && (m + n).is_odd()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn step_examples() {
        let s = |n, p, q| RecState { n: int(n), p: int(p), q: int(q) };
        assert_eq!(rec_step(&s(6, 3, 1)).unwrap().n, int(15));
        assert_eq!(rec_step(&s(6, 4, 1)).unwrap().n, int(20));
        assert_eq!(rec_step(&s(15, 15, 2)).unwrap().n, int(255));
        assert!(rec_step(&s(6, 1, 1)).is_err());
    }

    #[test]
    fn assign_examples() {
        let t = RatTriangle::new(rat(15, 2), rat(4, 1), rat(17, 2));
        assert_eq!(assign(&t, Side::B, &int(15)).unwrap(), RecState { n: int(15), p: int(4), q: int(1) });
        assert_eq!(assign(&t, Side::A, &int(15)).unwrap().q, int(2));
    }

    #[test]
    fn path_round_trip() {
        for s in ["-", "a", "abba"] {
            assert_eq!(s.parse::<WalkPath>().unwrap().to_string(), s);
        }
        assert!("abc".parse::<WalkPath>().is_err());
    }

    #[test]
    fn closed_forms_at_2_1() {
        let t = closed_form(&int(2), &int(1), ClosedForm::AB).unwrap();
        assert_eq!(t, RatTriangle::new(rat(40, 3), rat(3, 1), rat(41, 3)));
        let t = closed_form(&int(2), &int(1), ClosedForm::APow(1)).unwrap();
        assert_eq!(t, RatTriangle::new(rat(15, 2), rat(4, 1), rat(17, 2)));
    }
}

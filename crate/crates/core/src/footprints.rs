//! Footprint equations: (N, m, n) solutions keyed on the class of N mod 8,
//! side recovery from (p^2, q^2), and verification of the solution tables.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{is_probable_prime, parse_int, rat_sqrt, Int, Rat};
use crate::par::{self, Exec};
use crate::triples::RatTriangle;

const TABLE: &str = include_str!("../data/footprints.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Class {
    T0a,
    T0b,
    TI,
    TII,
    TIII,
    TIV,
}

impl Class {
    pub const ALL: [Class; 6] = [Class::T0a, Class::T0b, Class::TI, Class::TII, Class::TIII, Class::TIV];

    pub fn family(self) -> Family {
        match self {
            Class::T0a | Class::T0b => Family::T0,
            Class::TI => Family::TI,
            Class::TII => Family::TII,
            Class::TIII => Family::TIII,
            Class::TIV => Family::TIV,
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for Class {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Class::ALL
            .into_iter()
            .find(|c| c.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown footprint class {s:?}")))
    }
}

/// The table a class belongs to; T0a and T0b share Table 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    T0,
    TI,
    TII,
    TIII,
    TIV,
}

impl Family {
    pub fn table_name(self) -> &'static str {
        match self {
            Family::T0 => "0",
            Family::TI => "I",
            Family::TII => "II",
            Family::TIII => "III",
            Family::TIV => "IV",
        }
    }

    pub fn from_table_name(s: &str) -> Result<Self> {
        [Family::T0, Family::TI, Family::TII, Family::TIII, Family::TIV]
            .into_iter()
            .find(|f| f.table_name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown table {s:?}")))
    }
}

/// p = 1, 5, 7 mod 8 give T0, TI, TII; 2p with p = 7, 3 mod 8 give TIII, TIV.
pub fn classify(n: &Int) -> Result<Family> {
    let eight = Int::from(8);
    let unsupported = || Error::Domain(format!("{n} is not p or 2p in a footprint family"));
    let (p, doubled) = if n.is_even() { (n / 2, true) } else { (n.clone(), false) };
    if !p.is_positive() || !is_probable_prime(&p) {
        return Err(unsupported());
    }
    let r = u32::try_from(p.mod_floor(&eight)).unwrap_or(0);
    match (doubled, r) {
        (false, 1) => Ok(Family::T0),
        (false, 5) => Ok(Family::TI),
        (false, 7) => Ok(Family::TII),
        (true, 7) => Ok(Family::TIII),
        (true, 3) => Ok(Family::TIV),
        _ => Err(unsupported()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FootprintRow {
    pub n: Int,
    pub m: Int,
    pub k: Int,
    pub class: Class,
}

impl fmt::Display for FootprintRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({}, {}) {}", self.n, self.m, self.k, self.class)
    }
}

impl FootprintRow {
    pub fn new(n: i64, m: i64, k: i64, class: Class) -> Self {
        FootprintRow { n: Int::from(n), m: Int::from(m), k: Int::from(k), class }
    }
}

/// p^2 and q^2; p and q themselves may carry radicals that cancel in a and b.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PQ {
    pub p_sq: Rat,
    pub q_sq: Rat,
}

impl PQ {
    pub fn p(&self) -> Option<Rat> {
        rat_sqrt(&self.p_sq)
    }

    pub fn q(&self) -> Option<Rat> {
        rat_sqrt(&self.q_sq)
    }
}

fn q(v: Int) -> Rat {
    Rat::from_integer(v)
}

fn sq(v: &Int) -> Int {
    v * v
}

pub fn t0a_norm(m: &Int, n: &Int) -> Int {
    let (m2, n2) = (sq(m), sq(n));
    &m2 * &m2 + Int::from(6) * &m2 * &n2 + &n2 * &n2
}

pub fn footprint_pq(row: &FootprintRow) -> Result<PQ> {
    let (nn, m, n) = (&row.n, &row.m, &row.k);
    let (m2, n2) = (sq(m), sq(n));
    let mn = m * n;
    let pq = match row.class {
        Class::T0a => {
            if &t0a_norm(m, n) != nn {
                return Err(Error::Domain(format!("{row}: N != m^4 + 6m^2n^2 + n^4")));
            }
            let p = nn * (&m2 - &n2);
            let qv = Int::from(2) * &mn * (&m2 + &n2);
            PQ { p_sq: q(sq(&p)), q_sq: q(sq(&qv)) }
        }
        Class::T0b => {
            let inner = Int::from(4) * sq(&mn) - sq(&(&m2 - &n2));
            let p_sq = q(sq(&(&m2 + &n2)) * nn * inner) / q(Int::from(16));
            let qv = q(&mn * (&m2 - &n2)) / q(Int::from(2));
            PQ { p_sq, q_sq: &qv * &qv }
        }
        Class::TI => {
            let s = &m2 * nn - &n2;
            let p_sq = q(sq(&(sq(&mn) * nn))) - q(sq(&sq(&s))) / q(Int::from(16));
            let qv = q(&mn * &s) / q(Int::from(2));
            PQ { p_sq, q_sq: &qv * &qv }
        }
        Class::TII => {
            let inner = Int::from(4) * sq(&mn) - sq(&(&m2 - &n2));
            let p_sq = q(sq(&(&m2 + &n2)) * nn * inner);
            let qv = Int::from(2) * &mn * (&m2 - &n2);
            PQ { p_sq, q_sq: q(sq(&qv)) }
        }
        Class::TIII => {
            let d = &m2 - Int::from(2) * &n2;
            let inner = Int::from(8) * sq(&mn) - sq(&d);
            let p_sq = q(sq(&(&m2 + Int::from(2) * &n2)) * nn * inner);
            PQ { p_sq, q_sq: q(Int::from(8) * sq(&mn) * sq(&d)) }
        }
        Class::TIV => {
            let half = q(nn.clone()) / q(Int::from(2));
            let f = &m2 - &n2 - Int::from(2) * &mn;
            let g = sq(&(m - n)) + Int::from(2) * &m2;
            let h = sq(&(m + n)) + Int::from(2) * &n2;
            let p_sq = q(sq(&f) * g * h) * half;
            let qv = (&m2 - &n2 + Int::from(2) * &mn) * (&m2 + &n2);
            PQ { p_sq, q_sq: q(sq(&qv)) }
        }
    };
    Ok(pq)
}

/// The TIII q^2 as printed, 8 m^2 n^2 (m^2 - n^2)^2; kept to show it fails the table.
pub fn tiii_printed_pq(row: &FootprintRow) -> Result<PQ> {
    let mut pq = footprint_pq(&FootprintRow { class: Class::TIII, ..row.clone() })?;
    let (m2, n2) = (sq(&row.m), sq(&row.k));
    pq.q_sq = q(Int::from(8) * sq(&(&row.m * &row.k)) * sq(&(&m2 - &n2)));
    Ok(pq)
}

fn root(v: &Rat, what: &str, row: &FootprintRow) -> Result<Rat> {
    rat_sqrt(v).ok_or_else(|| Error::NotSquare(format!("{row}: {what} = {v}")))
}

/// a = p/q, b = 2Nq/p, c = sqrt(a^2 + b^2), all from squares.
pub fn triangle_from_pq(n: &Int, pq: &PQ, row: &FootprintRow) -> Result<RatTriangle> {
    if pq.p_sq.is_zero() || pq.q_sq.is_zero() {
        return Err(Error::Domain(format!("{row}: p or q vanishes")));
    }
    let nq = q(n.clone());
    let a2 = &pq.p_sq / &pq.q_sq;
    let b2 = q(Int::from(4)) * &nq * &nq * &pq.q_sq / &pq.p_sq;
    let a = root(&a2, "a^2", row)?;
    let b = root(&b2, "b^2", row)?;
    let c = root(&(&a2 + &b2), "c^2", row)?;
    Ok(RatTriangle::new(a, b, c))
}

pub fn footprint_triangle(row: &FootprintRow) -> Result<RatTriangle> {
    triangle_from_pq(&row.n, &footprint_pq(row)?, row)
}

pub fn parse_rows(text: &str) -> Result<Vec<FootprintRow>> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() != 4 {
            return Err(Error::Parse(format!("line {}: expected `N m n class`", i + 1)));
        }
        rows.push(FootprintRow { n: parse_int(f[0])?, m: parse_int(f[1])?, k: parse_int(f[2])?, class: f[3].parse()? });
    }
    Ok(rows)
}

pub fn table_rows() -> Vec<FootprintRow> {
    parse_rows(TABLE).expect("bundled footprint table parses")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowReport {
    pub row: FootprintRow,
    pub triangle: Option<RatTriangle>,
    pub error: Option<String>,
    pub class_ok: bool,
}

impl RowReport {
    pub fn pass(&self) -> bool {
        self.class_ok && self.error.is_none()
    }
}

pub fn verify_row(row: &FootprintRow) -> RowReport {
    let class_ok = classify(&row.n).map(|f| f == row.class.family()).unwrap_or(false);
    let res = footprint_triangle(row).and_then(|t| {
        if t.check(&Rat::from_integer(row.n.clone())) {
            Ok(t)
        } else {
            Err(Error::Domain(format!("{row}: area or Pythagoras fails")))
        }
    });
    match res {
        Ok(t) => RowReport { row: row.clone(), triangle: Some(t), error: None, class_ok },
        Err(e) => RowReport { row: row.clone(), triangle: None, error: Some(e.to_string()), class_ok },
    }
}

pub fn verify_rows(rows: &[FootprintRow], exec: Exec) -> Vec<RowReport> {
    par::map(exec, rows, verify_row)
}

/// Every bundled row, optionally restricted to one table.
pub fn verify_tables(table: Option<Family>, exec: Exec) -> Vec<RowReport> {
    let rows: Vec<FootprintRow> =
        table_rows().into_iter().filter(|r| table.is_none_or(|f| r.class.family() == f)).collect();
    verify_rows(&rows, exec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&int(353)).unwrap(), Family::T0);
        assert_eq!(classify(&int(157)).unwrap(), Family::TI);
        assert_eq!(classify(&int(7)).unwrap(), Family::TII);
        assert_eq!(classify(&int(382)).unwrap(), Family::TIII);
        assert_eq!(classify(&int(22)).unwrap(), Family::TIV);
        assert!(classify(&int(11)).is_err());
        assert!(classify(&int(15)).is_err());
    }

    #[test]
    fn pq_examples() {
        let pq = footprint_pq(&FootprintRow::new(353, 4, 1, Class::T0a)).unwrap();
        assert_eq!((pq.p(), pq.q()), (Some(rat(5295, 1)), Some(rat(136, 1))));
        let pq = footprint_pq(&FootprintRow::new(7, 2, 1, Class::TII)).unwrap();
        assert_eq!((pq.p(), pq.q()), (Some(rat(35, 1)), Some(rat(12, 1))));
        assert!(footprint_pq(&FootprintRow::new(353, 4, 2, Class::T0a)).is_err());
    }

    #[test]
    fn degenerate_six() {
        let t = footprint_triangle(&FootprintRow::new(6, 1, 0, Class::TIV)).unwrap();
        assert_eq!(t, RatTriangle::new(rat(3, 1), rat(4, 1), rat(5, 1)));
    }

    #[test]
    fn class_names_round_trip() {
        for c in Class::ALL {
            assert_eq!(c.to_string().parse::<Class>().unwrap(), c);
        }
        assert_eq!(Family::from_table_name("iii").unwrap(), Family::TIII);
    }
}

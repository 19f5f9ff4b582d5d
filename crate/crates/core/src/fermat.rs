//! The tree of Pythagorean triples whose hypotenuse and leg sum are both
//! squares, grown from x = 1 by the two-child fraction map.

use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exact::{is_square, parse_int, Int, Rat};
use crate::par::{self, Exec};
use crate::report::Check;

const TABLE: &str = include_str!("../data/fermat.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Root,
    Sum,
    Diff,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FermatNode {
    pub x: Rat,
    pub depth: usize,
    pub parent: Option<usize>,
    pub a: Int,
    pub b: Int,
    pub c: Int,
    pub kind: Kind,
    /// sqrt(a + b) and sqrt(c).
    pub sum_root: Int,
    pub c_root: Int,
}

impl fmt::Display for FermatNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x={} ({}, {}, {})", self.x, self.a, self.b, self.c)
    }
}

/// (pq, -(p^2 - q^2)/2, (p^2 + q^2)/2) for x = p/q with p, q odd.
pub fn triple_from_fraction(x: &Rat) -> Result<(Int, Int, Int)> {
    let (p, q) = (x.numer(), x.denom());
    if p.is_even() || q.is_even() {
        return Err(Error::Domain(format!("{x}: p and q must both be odd")));
    }
    let (p2, q2) = (p * p, q * q);
    let two = Int::from(2);
    Ok((p * q, -(&p2 - &q2) / &two, (&p2 + &q2) / &two))
}

pub fn node_from_fraction(x: &Rat) -> Result<FermatNode> {
    let (a, b, c) = triple_from_fraction(x)?;
    let sum = &a + &b;
    let sum_root = is_square(&sum).ok_or_else(|| Error::NotSquare(format!("{x}: a + b = {sum}")))?;
    let c_root = is_square(&c).ok_or_else(|| Error::NotSquare(format!("{x}: c = {c}")))?;
    let kind = if x.is_one() {
        Kind::Root
    } else if a.is_positive() && b.is_positive() {
        Kind::Sum
    } else {
        Kind::Diff
    };
    Ok(FermatNode { x: x.clone(), depth: 0, parent: None, a, b, c, kind, sum_root, c_root })
}

/// x = ((2mn)^2 + n^4 +- 4mn sqrt(8m^4 + n^4)) / (16m^4 + n^4), n = a - b, m = sqrt(a+b) sqrt(c).
pub fn children(node: &FermatNode) -> Result<[Rat; 2]> {
    let n = &node.a - &node.b;
    let m = &node.sum_root * &node.c_root;
    let (m2, n2) = (&m * &m, &n * &n);
    let (m4, n4) = (&m2 * &m2, &n2 * &n2);
    let rad = Int::from(8) * &m4 + &n4;
    let d = is_square(&rad).ok_or_else(|| Error::NotSquare(format!("{node}: 8m^4 + n^4 = {rad}")))?;
    let mn = &m * &n;
    let base = Int::from(4) * &mn * &mn + &n4;
    let den = Int::from(16) * &m4 + &n4;
    let shift = Int::from(4) * &mn * &d;
    Ok([Rat::new(&base + &shift, den.clone()), Rat::new(&base - &shift, den)])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FermatTree {
    pub depth: usize,
    pub nodes: Vec<FermatNode>,
}

/// Level-by-level expansion from x = 1, skipping 1 and fractions already seen.
pub fn enumerate(depth: usize) -> Result<FermatTree> {
    let mut root = node_from_fraction(&Rat::one())?;
    root.depth = 0;
    let mut nodes = vec![root];
    let mut seen: HashSet<Rat> = HashSet::from([Rat::one()]);
    let mut frontier = vec![0usize];
    for level in 1..=depth {
        let mut next = Vec::new();
        for &i in &frontier {
            for x in children(&nodes[i])? {
                if x.is_one() || !seen.insert(x.clone()) {
                    continue;
                }
                let mut node = node_from_fraction(&x)?;
                node.depth = level;
                node.parent = Some(i);
                next.push(nodes.len());
                nodes.push(node);
            }
        }
        frontier = next;
    }
    Ok(FermatTree { depth, nodes })
}

pub fn node_checks(node: &FermatNode) -> Vec<Check> {
    let tag = format!("node {}", node.x);
    let (p, q) = (node.x.numer(), node.x.denom());
    let sum = &node.a + &node.b;
    vec![
        Check::new(format!("{tag}: a^2 + b^2 = c^2"), &node.a * &node.a + &node.b * &node.b == &node.c * &node.c),
        Check::new(format!("{tag}: a + b square"), &node.sum_root * &node.sum_root == sum),
        Check::new(format!("{tag}: c square"), &node.c_root * &node.c_root == node.c),
        Check::new(format!("{tag}: p, q odd and coprime"), p.is_odd() && q.is_odd() && p.gcd(q).is_one()),
        Check::new(format!("{tag}: children exist"), children(node).is_ok()),
    ]
}

impl FermatTree {
    pub fn verify(&self, exec: Exec) -> Vec<Check> {
        par::flat_map(exec, &self.nodes, node_checks)
    }

    /// P_i (both legs positive) and N_i (otherwise), each numbered by increasing c.
    pub fn labelled(&self) -> Vec<(String, &FermatNode)> {
        let mut out = Vec::new();
        for (kind, tag) in [(Kind::Diff, "N"), (Kind::Sum, "P")] {
            let mut v: Vec<&FermatNode> = self.nodes.iter().filter(|n| n.kind == kind).collect();
            v.sort_by(|x, y| x.c.cmp(&y.c));
            out.extend(v.into_iter().enumerate().map(|(i, n)| (format!("{tag}{}", i + 1), n)));
        }
        out
    }

    pub fn label(&self, label: &str) -> Option<&FermatNode> {
        self.labelled().into_iter().find(|(l, _)| l == label).map(|(_, n)| n)
    }

    pub fn smallest_sum(&self) -> Option<&FermatNode> {
        self.nodes.iter().filter(|n| n.kind == Kind::Sum).min_by(|x, y| x.c.cmp(&y.c))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub label: String,
    pub a: Int,
    pub b: Int,
    pub c: Int,
}

pub fn table_entries() -> Vec<TableEntry> {
    TABLE
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            let p = |s: &str| parse_int(s).expect("bundled fermat table parses");
            TableEntry { label: f[0].to_string(), a: p(f[1]), b: p(f[2]), c: p(f[3]) }
        })
        .collect()
}

/// Each bundled entry against the same label in the tree.
pub fn table_check(tree: &FermatTree) -> Vec<Check> {
    table_entries()
        .into_iter()
        .map(|e| {
            let name = format!("{} = ({}, {}, {})", e.label, e.a, e.b, e.c);
            match tree.label(&e.label) {
                Some(n) => Check::new(name, n.a == e.a && n.b == e.b && n.c == e.c),
                None => Check::with(name, false, "not reached at this depth"),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn root_and_first_child() {
        let root = node_from_fraction(&rat(1, 1)).unwrap();
        assert_eq!((root.a.clone(), root.b.clone(), root.c.clone()), (int(1), int(0), int(1)));
        let kids = children(&root).unwrap();
        assert_eq!(kids, [rat(1, 1), rat(-7, 17)]);
        let n1 = node_from_fraction(&rat(-7, 17)).unwrap();
        assert_eq!((n1.a, n1.b, n1.c), (int(-119), int(120), int(169)));
        assert_eq!(n1.kind, Kind::Diff);
    }

    #[test]
    fn rejects_even_parts() {
        assert!(node_from_fraction(&rat(2, 3)).is_err());
        assert!(node_from_fraction(&rat(3, 5)).is_err());
    }
}

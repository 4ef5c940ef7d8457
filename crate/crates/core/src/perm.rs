//! Permutations of `{1..n}`.
//!
//! Points are 1-based at every public boundary. Products follow the
//! right-to-left convention `(p * q)(i) = p(q(i))`, which makes
//! [`Permutation::matrix`] a homomorphism when entry `(i, j)` is 1 iff
//! `p(j) = i`.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// A bijection of `{1..n}` onto itself.
///
/// The derived ordering compares image sequences lexicographically and is
/// the canonical element order used by groups.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // images[i] = p(i + 1) - 1
    images: Vec<u32>,
}

/// Nontrivial cycles of a permutation in canonical form: each cycle starts
/// at its minimum point and cycles are sorted by that minimum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleSet {
    cycles: Vec<Vec<usize>>,
}

impl CycleSet {
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn is_subset(&self, other: &CycleSet) -> bool {
        self.cycles.iter().all(|c| other.cycles.binary_search(c).is_ok())
    }
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its 1-based image sequence.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n {
                return Err(Error::PointOutOfRange { point: img, degree: n });
            }
            if std::mem::replace(&mut seen[img - 1], true) {
                return Err(Error::NotBijection(n));
            }
            out.push((img - 1) as u32);
        }
        Ok(Permutation { images: out })
    }

    pub(crate) fn from_images0(images: Vec<u32>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| v as usize == i)
        });
        Permutation { images }
    }

    /// Builds a permutation from disjoint cycles of 1-based points.
    pub fn from_cycles(cycles: &[Vec<usize>], degree: usize) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for &pt in cycle {
                if pt == 0 || pt > degree {
                    return Err(Error::PointOutOfRange { point: pt, degree });
                }
                if std::mem::replace(&mut seen[pt - 1], true) {
                    return Err(Error::RepeatedPoint(pt));
                }
            }
            for (i, &pt) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                images[pt - 1] = (next - 1) as u32;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 1-based point.
    pub fn image(&self, point: usize) -> usize {
        self.images[point - 1] as usize + 1
    }

    /// 1-based image sequence.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    #[inline]
    pub(crate) fn apply0(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i)
    }

    /// `p.compose(q)` maps `i` to `p(q(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&j| self.images[j as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// Nontrivial cycles as 0-based points, canonical order.
    pub(crate) fn cycles0(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply0(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.apply0(start);
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.apply0(cur);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycles(&self) -> CycleSet {
        CycleSet {
            cycles: self
                .cycles0()
                .into_iter()
                .map(|c| c.into_iter().map(|p| p + 1).collect())
                .collect(),
        }
    }

    /// Lengths of all orbits, fixed points included.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles0().iter().map(Vec::len).collect();
        lens.extend(std::iter::repeat_n(1, self.fixed_count()));
        lens.sort_unstable();
        lens
    }

    pub fn orbit_count(&self) -> usize {
        self.cycles0().len() + self.fixed_count()
    }

    /// Points moved by the permutation, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.degree())
            .filter(|&i| self.apply0(i) != i)
            .map(|i| i + 1)
            .collect()
    }

    pub fn fixed_count(&self) -> usize {
        (0..self.degree()).filter(|&i| self.apply0(i) == i).count()
    }

    pub fn is_fixed_point_free(&self) -> bool {
        self.fixed_count() == 0
    }

    pub fn is_even(&self) -> bool {
        let n = self.degree();
        (n - self.orbit_count()).is_multiple_of(2)
    }

    /// Permutation matrix: entry `(i, j)` is 1 iff `p(j) = i`.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let n = self.degree();
        let mut m = vec![vec![0i64; n]; n];
        for j in 0..n {
            m[self.apply0(j)][j] = 1;
        }
        m
    }

    /// Parses cycle notation such as `(1 2 3)(4,5)`, `()` or `id`.
    pub fn parse(text: &str, degree: usize) -> Result<Permutation> {
        let trimmed = text.trim();
        if trimmed == "id" {
            return Ok(Permutation::identity(degree));
        }
        let mut rest = trimmed;
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        if rest.is_empty() {
            return Err(Error::Malformed("empty input".into()));
        }
        if rest.replace(char::is_whitespace, "") == "()" {
            return Ok(Permutation::identity(degree));
        }
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(Error::Malformed(format!("expected '(' at {rest:?}")));
            };
            let Some(close) = body.find(')') else {
                return Err(Error::Malformed("unclosed cycle".into()));
            };
            cycles.push(parse_cycle_body(&body[..close])?);
            rest = body[close + 1..].trim_start();
        }
        Permutation::from_cycles(&cycles, degree)
    }
}

fn parse_cycle_body(body: &str) -> Result<Vec<usize>> {
    let mut points = Vec::new();
    let mut expect_point = true;
    let mut after_comma = false;
    let mut chars = body.trim().chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_ascii_digit() {
            if !expect_point {
                return Err(Error::Malformed(format!("missing separator in ({body})")));
            }
            let mut digits = String::new();
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                digits.push(d);
                chars.next();
            }
            let point: usize = digits
                .parse()
                .map_err(|_| Error::Malformed(format!("bad point {digits:?}")))?;
            if point == 0 {
                return Err(Error::Malformed("points start at 1".into()));
            }
            points.push(point);
            expect_point = false;
            after_comma = false;
        } else if c.is_whitespace() {
            chars.next();
            expect_point = true;
        } else if c == ',' {
            if after_comma || points.is_empty() {
                return Err(Error::Malformed(format!("stray ',' in ({body})")));
            }
            chars.next();
            expect_point = true;
            after_comma = true;
        } else {
            return Err(Error::Malformed(format!("unexpected {c:?} in ({body})")));
        }
    }
    if after_comma {
        return Err(Error::Malformed(format!("trailing ',' in ({body})")));
    }
    if points.len() < 2 {
        return Err(Error::Malformed(format!("cycle ({body}) needs at least two points")));
    }
    Ok(points)
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on degree mismatch; use [`Permutation::compose`] for a checked product.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        self.compose_unchecked(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles.cycles() {
            f.write_str("(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(text: &str, n: usize) -> Permutation {
        Permutation::parse(text, n).unwrap()
    }

    fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let n = a.len();
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
            .collect()
    }

    #[test]
    fn compose_examples() {
        assert!(p("(1 2)", 3).compose(&p("(1 2)", 3)).unwrap().is_identity());
        assert_eq!(p("(1 2 3)", 3).compose(&Permutation::identity(3)).unwrap(), p("(1 2 3)", 3));
        assert_eq!(p("(1 2)", 3).compose(&p("(2 3)", 3)).unwrap(), p("(1 2 3)", 3));
        assert_eq!(
            p("(1 2)", 3).compose(&p("(1 2)", 4)),
            Err(Error::DegreeMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p("(1 2 3)", 3).inverse(), p("(1 3 2)", 3));
        assert!(Permutation::identity(5).inverse().is_identity());
        assert_eq!(p("(1 2)(3 4)", 4).inverse(), p("(1 2)(3 4)", 4));
    }

    #[test]
    fn cycle_examples() {
        let q = Permutation::from_images(&[2, 1, 4, 3, 5]).unwrap();
        assert_eq!(q.cycles().cycles(), &[vec![1, 2], vec![3, 4]]);
        assert!(Permutation::identity(4).cycles().is_empty());
        let r = Permutation::from_images(&[2, 3, 1]).unwrap();
        assert_eq!(r.cycles().cycles(), &[vec![1, 2, 3]]);
        // canonical rotation
        assert_eq!(p("(3 1 2)", 3).cycles().cycles(), &[vec![1, 2, 3]]);
    }

    #[test]
    fn support_and_fixed_points() {
        let t = p("(1 2)", 4);
        assert_eq!(t.support(), vec![1, 2]);
        assert_eq!(t.fixed_count(), 2);
        let id = Permutation::identity(6);
        assert!(id.support().is_empty());
        assert_eq!(id.fixed_count(), 6);
        let c = p("(1 2 3 4)", 4);
        assert_eq!(c.support(), vec![1, 2, 3, 4]);
        assert_eq!(c.fixed_count(), 0);
    }

    #[test]
    fn matrix_examples() {
        assert_eq!(Permutation::identity(3).matrix(), vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(p("(1 2)", 2).matrix(), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(
            matmul(&p("(1 2)", 3).matrix(), &p("(2 3)", 3).matrix()),
            p("(1 2 3)", 3).matrix()
        );
    }

    #[test]
    fn parse_examples() {
        let q = p("(1 2 3)(4 5)", 5);
        assert_eq!(q.images(), vec![2, 3, 1, 5, 4]);
        assert!(p("()", 4).is_identity());
        assert!(p("id", 4).is_identity());
        assert_eq!(p("(1,2, 3) (4 5)", 5), q);
        assert_eq!(Permutation::parse("(1 2)(2 3)", 3), Err(Error::RepeatedPoint(2)));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            Permutation::parse("(1 5)", 4),
            Err(Error::PointOutOfRange { point: 5, degree: 4 })
        );
        for bad in ["", "(1 2", "1 2)", "(1)", "(1 x)", "(0 1)", "(1,,2)", "(1 2,)", "(1 2)x"] {
            assert!(
                matches!(Permutation::parse(bad, 4), Err(Error::Malformed(_))),
                "{bad:?} should be malformed"
            );
        }
    }

    #[test]
    fn format_cycles() {
        assert_eq!(p("(5 4)(3 1 2)", 5).to_string(), "(1 2 3)(4 5)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(&v).unwrap())
    }

    proptest! {
        #[test]
        fn group_laws(a in perm_strategy(7), b in perm_strategy(7), c in perm_strategy(7)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert!((&a * &a.inverse()).is_identity());
            prop_assert_eq!(&a * &Permutation::identity(7), a.clone());
        }

        #[test]
        fn matrix_is_homomorphism(a in perm_strategy(6), b in perm_strategy(6)) {
            prop_assert_eq!(matmul(&a.matrix(), &b.matrix()), (&a * &b).matrix());
        }

        #[test]
        fn cycles_round_trip(a in perm_strategy(9)) {
            let cs = a.cycles();
            prop_assert_eq!(Permutation::from_cycles(cs.cycles(), 9).unwrap(), a.clone());
            prop_assert_eq!(Permutation::parse(&a.to_string(), 9).unwrap(), a.clone());
            let mut pts: Vec<usize> = cs.cycles().iter().flatten().copied().collect();
            pts.sort_unstable();
            prop_assert_eq!(pts, a.support());
            prop_assert_eq!(a.support().len() + a.fixed_count(), 9);
        }
    }
}

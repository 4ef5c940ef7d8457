//! Indecomposable elements and factorizations into them.
//!
//! `g` is decomposable when `g = xy` with `x, y` nontrivial group elements of
//! disjoint support. Equivalently some nontrivial `x != g` in the group has
//! every cycle of `x` among the cycles of `g` (written `x ⪯ g`): then
//! `y = x^-1 g` consists of the remaining cycles and lies in the group too.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::PermutationGroup;
use crate::perm::Permutation;

/// Largest number of nontrivial cycles for which subsets are enumerated.
pub const DEFAULT_MAX_CYCLES: usize = 24;

/// The ⪯ relation: every cycle of `h` is a cycle of `g`.
///
/// Holds iff `h` agrees with `g` on the support of `h`.
pub fn divides(h: &Permutation, g: &Permutation) -> bool {
    h.degree() == g.degree() && (0..h.degree()).all(|i| h.apply0(i) == i || h.apply0(i) == g.apply0(i))
}

/// The permutation made of the cycles of `g` selected by `mask`.
fn sub_permutation(g: &Permutation, cycles: &[Vec<usize>], mask: u64) -> Permutation {
    let mut images: Vec<u32> = (0..g.degree() as u32).collect();
    for (bit, cycle) in cycles.iter().enumerate() {
        if mask >> bit & 1 == 1 {
            for &pt in cycle {
                images[pt] = g.apply0(pt) as u32;
            }
        }
    }
    Permutation::from_images0(images)
}

fn checked_cycles(g: &Permutation, max_cycles: usize) -> Result<Vec<Vec<usize>>> {
    let cycles = g.cycles0();
    if cycles.len() > max_cycles {
        return Err(Error::TooManyCycles {
            count: cycles.len(),
            limit: max_cycles,
        });
    }
    Ok(cycles)
}

pub fn is_indecomposable(group: &PermutationGroup, g: &Permutation) -> Result<bool> {
    is_indecomposable_with(group, g, DEFAULT_MAX_CYCLES)
}

pub fn is_indecomposable_with(group: &PermutationGroup, g: &Permutation, max_cycles: usize) -> Result<bool> {
    group.require_index(g)?;
    let cycles = checked_cycles(g, max_cycles)?;
    if cycles.len() <= 1 {
        return Ok(true);
    }
    // Splits come in complementary pairs; fix the last cycle on the right.
    let half = 1u64 << (cycles.len() - 1);
    Ok((1..half).all(|mask| !group.contains(&sub_permutation(g, &cycles, mask))))
}

/// All group elements `k` with `k ⪯ g`, identity and `g` included, in canonical order.
pub fn divisors(group: &PermutationGroup, g: &Permutation, max_cycles: usize) -> Result<Vec<Permutation>> {
    group.require_index(g)?;
    let cycles = checked_cycles(g, max_cycles)?;
    let mut out: Vec<Permutation> = (0..1u64 << cycles.len())
        .map(|mask| sub_permutation(g, &cycles, mask))
        .filter(|k| group.contains(k))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// The indecomposable elements `S` of a group, identity included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndecompSet {
    members: Vec<usize>,
    flags: Vec<bool>,
}

impl IndecompSet {
    /// Sorted element indices.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// Members other than the identity (index 0).
    pub fn nontrivial(&self) -> &[usize] {
        &self.members[1..]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains_index(&self, index: usize) -> bool {
        self.flags.get(index).copied().unwrap_or(false)
    }
}

pub fn indecomposable_set(group: &PermutationGroup) -> Result<IndecompSet> {
    indecomposable_set_with(group, DEFAULT_MAX_CYCLES)
}

pub fn indecomposable_set_with(group: &PermutationGroup, max_cycles: usize) -> Result<IndecompSet> {
    let flags: Vec<bool> = group
        .elements()
        .par_iter()
        .map(|g| is_indecomposable_with(group, g, max_cycles))
        .collect::<Result<_>>()?;
    let members = flags
        .iter()
        .enumerate()
        .filter(|(_, &f)| f)
        .map(|(i, _)| i)
        .collect();
    Ok(IndecompSet { members, flags })
}

/// Word lengths from the identity in the Cayley graph with edges `h ~ h*s`.
///
/// `generators` must be closed under inverses. Unreachable elements get
/// `u32::MAX`. Each BFS level is computed as a pull over the unvisited
/// elements, so the result does not depend on scheduling.
pub fn word_lengths(group: &PermutationGroup, generators: &[usize]) -> Vec<u32> {
    let mut dist = vec![u32::MAX; group.order()];
    dist[group.identity_index()] = 0;
    let mut unvisited: Vec<usize> = (1..group.order()).collect();
    let mut level = 0u32;
    while !unvisited.is_empty() {
        let (reached, rest): (Vec<usize>, Vec<usize>) = unvisited
            .par_iter()
            .partition(|&&v| generators.iter().any(|&s| dist[group.mul_index(v, s)] == level));
        if reached.is_empty() {
            break;
        }
        level += 1;
        for v in reached {
            dist[v] = level;
        }
        unvisited = rest;
    }
    dist
}

/// Shortest factorizations into nontrivial indecomposables.
#[derive(Debug, Clone)]
pub struct Factorizer<'a> {
    group: &'a PermutationGroup,
    set: IndecompSet,
    dist: Vec<u32>,
}

impl<'a> Factorizer<'a> {
    pub fn new(group: &'a PermutationGroup, set: IndecompSet) -> Self {
        let dist = word_lengths(group, set.nontrivial());
        Factorizer { group, set, dist }
    }

    pub fn set(&self) -> &IndecompSet {
        &self.set
    }

    /// Word length of every element, by canonical index.
    pub fn word_lengths(&self) -> &[u32] {
        &self.dist
    }

    /// Longest minimal factorization over the group.
    pub fn max_length(&self) -> usize {
        self.dist.iter().copied().max().unwrap_or(0) as usize
    }

    /// A shortest sequence of nontrivial indecomposables multiplying to `g`,
    /// lexicographically smallest by element index.
    pub fn decompose_min(&self, g: &Permutation) -> Result<Vec<Permutation>> {
        let target = self.group.require_index(g)?;
        Ok(self
            .decompose_index(target)?
            .into_iter()
            .map(|i| self.group.element(i).clone())
            .collect())
    }

    pub fn decompose_index(&self, target: usize) -> Result<Vec<usize>> {
        if self.dist[target] == u32::MAX {
            return Err(Error::TheoremViolation(format!(
                "{} is not generated by the indecomposables",
                self.group.element(target)
            )));
        }
        let mut factors = Vec::new();
        let mut rest = target;
        while rest != self.group.identity_index() {
            let want = self.dist[rest] - 1;
            let s = *self
                .set
                .nontrivial()
                .iter()
                .find(|&&s| self.dist[self.group.mul_index(self.group.inverse_index(s), rest)] == want)
                .expect("BFS predecessor exists");
            factors.push(s);
            rest = self.group.mul_index(self.group.inverse_index(s), rest);
        }
        Ok(factors)
    }
}

/// Convenience wrapper computing the indecomposable set on the fly.
pub fn decompose_min(group: &PermutationGroup, g: &Permutation) -> Result<Vec<Permutation>> {
    let set = indecomposable_set(group)?;
    Factorizer::new(group, set).decompose_min(g)
}

/// `g = a * b` with `a, b` indecomposable and at least one of them fixed-point
/// free. The first admissible `a` in canonical order is returned.
pub fn strong_factorization(
    group: &PermutationGroup,
    set: &IndecompSet,
    g: &Permutation,
) -> Result<(Permutation, Permutation)> {
    if !group.is_transitive() {
        return Err(Error::Intransitive);
    }
    let target = group.require_index(g)?;
    for &a in set.members() {
        let b = group.mul_index(group.inverse_index(a), target);
        if !set.contains_index(b) {
            continue;
        }
        let (pa, pb) = (group.element(a), group.element(b));
        if pa.is_fixed_point_free() || pb.is_fixed_point_free() {
            return Ok((pa.clone(), pb.clone()));
        }
    }
    Err(Error::TheoremViolation(format!(
        "no factorization of {g} into two indecomposables with a fixed-point-free factor"
    )))
}

/// `g = x * y` in the full symmetric group with `x` an `n`-cycle and `y` a
/// `k`-cycle, `k` the number of orbits of `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFactorization {
    pub x: Permutation,
    pub y: Permutation,
    pub orbit_count: usize,
    /// `k = 1`: `g` is already an `n`-cycle and `y` is the identity.
    pub degenerate: bool,
}

/// Takes `h` cycling the minimum point of each orbit of `g` (ascending), so
/// that `g * h` is an `n`-cycle, and returns `x = g * h`, `y = h^-1`.
pub fn sym_factorization(g: &Permutation) -> SymFactorization {
    let n = g.degree();
    let mut seen = vec![false; n];
    let mut reps = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        reps.push(start + 1);
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cur = g.apply0(cur);
        }
    }
    let k = reps.len();
    let h = if k >= 2 {
        Permutation::from_cycles(&[reps], n).expect("distinct representatives")
    } else {
        Permutation::identity(n)
    };
    SymFactorization {
        x: g * &h,
        y: h.inverse(),
        orbit_count: k,
        degenerate: k == 1,
    }
}

/// For `n >= 4` even and `g` even: `g = x * y` with `x` having exactly two
/// orbits, both of even length, and `y` a single cycle or having exactly two
/// nontrivial orbits of even length.
pub fn alt_factorization(g: &Permutation) -> Result<(Permutation, Permutation)> {
    let n = g.degree();
    if !n.is_multiple_of(2) || n < 4 {
        return Err(Error::InvalidParams(format!("degree must be even and at least 4, got {n}")));
    }
    if !g.is_even() {
        return Err(Error::InvalidParams(format!("{g} is an odd permutation")));
    }
    if g.is_identity() {
        let x = Permutation::from_cycles(&[vec![1, 2], (3..=n).collect()], n).expect("disjoint cycles");
        let y = x.inverse();
        return Ok((x, y));
    }
    let SymFactorization { x: cycle, y: kcycle, .. } = sym_factorization(g);
    // a transposition (a b) with a fixed by y and b two steps along the n-cycle
    let a = (0..n).find(|&i| kcycle.apply0(i) == i).expect("k < n for g != 1");
    let b = cycle.apply0(cycle.apply0(a));
    let t = Permutation::from_cycles(&[vec![a + 1, b + 1]], n).expect("a != b");
    Ok((&cycle * &t, &t * &kcycle))
}

/// Exactly two orbits (fixed points included), each of even length.
pub fn has_two_even_orbits(x: &Permutation) -> bool {
    let lens = x.orbit_lengths();
    lens.len() == 2 && lens.iter().all(|l| l % 2 == 0)
}

/// A single nontrivial cycle, or exactly two nontrivial orbits of even length.
pub fn is_cycle_or_two_even_orbits(y: &Permutation) -> bool {
    let cycles = y.cycles0();
    cycles.len() == 1 || (cycles.len() == 2 && cycles.iter().all(|c| c.len() % 2 == 0))
}

//! Fully enumerated permutation groups.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::stabchain::StabChain;

/// Default enumeration cap on the group order.
pub const DEFAULT_ORDER_CAP: usize = 200_000;

/// A permutation group with every element materialized in canonical
/// (lexicographic image) order, plus a stabilizer chain for membership.
#[derive(Debug, Clone)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    inverses: Vec<usize>,
    chain: StabChain,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitStructure {
    /// Orbits as sorted 1-based point lists, ordered by minimum point.
    pub orbits: Vec<Vec<usize>>,
    pub t_all: usize,
    pub t_nontrivial: usize,
}

/// A nontrivial G-invariant partition into equal-size blocks.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BlockSystem {
    pub blocks: Vec<Vec<usize>>,
}

impl BlockSystem {
    pub fn block_size(&self) -> usize {
        self.blocks.first().map_or(0, Vec::len)
    }
}

impl PermutationGroup {
    /// Closure of `generators` under composition. Fails if the order exceeds `cap`.
    pub fn generate(degree: usize, generators: &[Permutation], cap: usize) -> Result<Self> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let chain = StabChain::new(degree, generators);
        let order = chain.order();
        if order > cap as u128 {
            return Err(Error::CapExceeded { order, cap });
        }

        let id = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::with_capacity(order as usize);
        let mut queue = VecDeque::new();
        seen.insert(id.clone());
        queue.push_back(id);
        while let Some(h) = queue.pop_front() {
            for g in generators {
                let next = &h * g;
                if !seen.contains(&next) {
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort_unstable();
        if elements.len() as u128 != order {
            return Err(Error::TheoremViolation(format!(
                "stabilizer chain order {order} disagrees with enumeration {}",
                elements.len()
            )));
        }
        let inverses = elements
            .iter()
            .map(|e| elements.binary_search(&e.inverse()).expect("closed under inverse"))
            .collect();
        Ok(PermutationGroup {
            degree,
            generators: generators.to_vec(),
            elements,
            inverses,
            chain,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> &Permutation {
        &self.elements[index]
    }

    pub fn stab_chain(&self) -> &StabChain {
        &self.chain
    }

    /// Canonical index of `p`, by table lookup.
    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub(crate) fn require_index(&self, p: &Permutation) -> Result<usize> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        self.index_of(p).ok_or_else(|| Error::NotMember(p.to_string()))
    }

    /// Membership via the stabilizer chain.
    pub fn contains(&self, p: &Permutation) -> bool {
        self.chain.contains(p)
    }

    /// Index of the identity; always 0 in lexicographic order.
    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn inverse_index(&self, index: usize) -> usize {
        self.inverses[index]
    }

    /// Index of `elements[a] * elements[b]`.
    pub fn mul_index(&self, a: usize, b: usize) -> usize {
        let prod = self.elements[a].compose_unchecked(&self.elements[b]);
        self.elements.binary_search(&prod).expect("group is closed")
    }

    pub fn orbits(&self) -> OrbitStructure {
        let mut seen = vec![false; self.degree];
        let mut orbits = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut i = 0;
            while i < orbit.len() {
                let pt = orbit[i];
                for g in &self.generators {
                    let img = g.apply0(pt);
                    if !seen[img] {
                        seen[img] = true;
                        orbit.push(img);
                    }
                }
                i += 1;
            }
            let mut orbit: Vec<usize> = orbit.into_iter().map(|p| p + 1).collect();
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        let t_nontrivial = orbits.iter().filter(|o| o.len() >= 2).count();
        OrbitStructure {
            t_all: orbits.len(),
            t_nontrivial,
            orbits,
        }
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().t_all <= 1
    }

    /// True iff the group has a single orbit on ordered `k`-tuples of distinct points.
    pub fn is_k_transitive(&self, k: usize) -> Result<bool> {
        if k == 0 || k > self.degree {
            return Err(Error::InvalidParams(format!(
                "k = {k} outside 1..={}",
                self.degree
            )));
        }
        let total: u128 = (0..k).map(|i| (self.degree - i) as u128).product();
        if total > self.order() as u128 {
            return Ok(false);
        }
        let start: Vec<usize> = (0..k).collect();
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        seen.insert(start.clone());
        let mut queue = vec![start];
        while let Some(t) = queue.pop() {
            for g in &self.generators {
                let img: Vec<usize> = t.iter().map(|&x| g.apply0(x)).collect();
                if seen.insert(img.clone()) {
                    queue.push(img);
                }
            }
        }
        Ok(seen.len() as u128 == total)
    }

    /// Minimal nontrivial block systems of a transitive group.
    ///
    /// For each point `b != 1` the finest invariant partition joining 1 and `b`
    /// is computed by union-find closure; the minimal nontrivial results are
    /// returned in sorted order.
    pub fn block_systems(&self) -> Result<Vec<BlockSystem>> {
        if !self.is_transitive() {
            return Err(Error::Intransitive);
        }
        let n = self.degree;
        let mut found: BTreeSet<BlockSystem> = BTreeSet::new();
        for beta in 1..n {
            let partition = self.minimal_block_partition(beta);
            if partition.len() > 1 {
                found.insert(BlockSystem { blocks: partition });
            }
        }
        // keep only systems not strictly coarser than another one found
        let all: Vec<BlockSystem> = found.into_iter().collect();
        let mut minimal: Vec<BlockSystem> = all
            .iter()
            .filter(|sys| {
                !all.iter().any(|other| {
                    other.block_size() < sys.block_size() && refines(other, sys)
                })
            })
            .cloned()
            .collect();
        minimal.sort_by_key(|s| (s.block_size(), s.blocks.clone()));
        Ok(minimal)
    }

    fn minimal_block_partition(&self, beta: usize) -> Vec<Vec<usize>> {
        let n = self.degree;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut queue = vec![(0usize, beta)];
        parent[beta] = 0;
        while let Some((a, b)) = queue.pop() {
            for g in &self.generators {
                let ra = find(&mut parent, g.apply0(a));
                let rb = find(&mut parent, g.apply0(b));
                if ra != rb {
                    let (lo, hi) = (ra.min(rb), ra.max(rb));
                    parent[hi] = lo;
                    queue.push((lo, hi));
                }
            }
        }
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut root_block = vec![usize::MAX; n];
        for x in 0..n {
            let r = find(&mut parent, x);
            if root_block[r] == usize::MAX {
                root_block[r] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[root_block[r]].push(x + 1);
        }
        blocks
    }

    pub fn is_primitive(&self) -> Result<bool> {
        Ok(self.block_systems()?.is_empty())
    }

    /// Indices of the elements without fixed points.
    pub fn fixed_point_free_elements(&self) -> Vec<usize> {
        self.elements
            .iter()
            .enumerate()
            .filter(|(_, e)| e.is_fixed_point_free())
            .map(|(i, _)| i)
            .collect()
    }

    /// Subgroup generated by `gens`, as sorted element indices of this group.
    pub fn subgroup_indices(&self, gens: &[Permutation]) -> Result<Vec<usize>> {
        for g in gens {
            self.require_index(g)?;
        }
        let sub = PermutationGroup::generate(self.degree, gens, self.order())?;
        Ok(sub
            .elements
            .iter()
            .map(|e| self.index_of(e).expect("subgroup element"))
            .collect())
    }
}

fn refines(fine: &BlockSystem, coarse: &BlockSystem) -> bool {
    fine.blocks
        .iter()
        .all(|b| coarse.blocks.iter().any(|c| b.iter().all(|x| c.binary_search(x).is_ok())))
}

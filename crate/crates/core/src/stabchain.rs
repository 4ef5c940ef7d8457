//! Deterministic Schreier-Sims with the fixed base `1, 2, ..., n`.
//!
//! The table layout follows Knuth's formulation: level `k` stores, for each
//! point `j` in the orbit of `k` under the pointwise stabilizer of
//! `0..k`, an element `sigma` of that stabilizer with `sigma(k) = j`.

use crate::perm::Permutation;

#[derive(Debug, Clone)]
struct Level {
    // transversal[j] = (sigma, sigma^-1) with sigma(k) = j
    transversal: Vec<Option<(Permutation, Permutation)>>,
    strong_gens: Vec<Permutation>,
}

/// Stabilizer chain with base points in ascending order.
#[derive(Debug, Clone)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, generators: &[Permutation]) -> Self {
        let id = Permutation::identity(degree);
        let levels = (0..degree)
            .map(|k| {
                let mut transversal = vec![None; degree];
                transversal[k] = Some((id.clone(), id.clone()));
                Level {
                    transversal,
                    strong_gens: Vec::new(),
                }
            })
            .collect();
        let mut chain = StabChain { degree, levels };
        for g in generators {
            chain.add(0, g.clone());
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Residue of sifting `p` from `level` downwards; identity iff `p` is a member.
    fn sift(&self, level: usize, p: &Permutation) -> Option<Permutation> {
        let mut cur = p.clone();
        for k in level..self.degree {
            let j = cur.apply0(k);
            match &self.levels[k].transversal[j] {
                Some((_, inv)) => cur = inv * &cur,
                None => return Some(cur),
            }
        }
        if cur.is_identity() {
            None
        } else {
            Some(cur)
        }
    }

    fn add(&mut self, k: usize, p: Permutation) {
        if k >= self.degree || self.sift(k, &p).is_none() {
            return;
        }
        self.levels[k].strong_gens.push(p.clone());
        let reps: Vec<Permutation> = self.levels[k]
            .transversal
            .iter()
            .flatten()
            .map(|(s, _)| s.clone())
            .collect();
        for sigma in reps {
            self.extend(k, &p * &sigma);
        }
    }

    fn extend(&mut self, k: usize, p: Permutation) {
        let j = p.apply0(k);
        match &self.levels[k].transversal[j] {
            None => {
                let inv = p.inverse();
                self.levels[k].transversal[j] = Some((p.clone(), inv));
                let gens = self.levels[k].strong_gens.clone();
                for tau in gens {
                    self.extend(k, &tau * &p);
                }
            }
            Some((_, inv)) => {
                let residue = inv * &p;
                self.add(k + 1, residue);
            }
        }
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.sift(0, p).is_none()
    }

    /// Orbit length of base point `k` under its level stabilizer.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels
            .iter()
            .map(|l| l.transversal.iter().filter(|t| t.is_some()).count())
            .collect()
    }

    /// Group order as the product of the basic orbit lengths.
    pub fn order(&self) -> u128 {
        self.orbit_lengths()
            .into_iter()
            .fold(1u128, |acc, len| acc.saturating_mul(len as u128))
    }
}

//! Geometry of the permutation polytope `P(G)`, the convex hull of the
//! permutation matrices of `G`.
//!
//! Everything here is combinatorial or exact: faces come from the ⪯
//! characterization of smallest faces, dimensions from exact integer rank.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::PermutationGroup;
use crate::indecomp::{self, word_lengths, IndecompSet, DEFAULT_MAX_CYCLES};
use crate::perm::Permutation;
use crate::rank::{rank, EchelonBasis};

/// `matrix(p) - matrix(base)` flattened row-major.
fn difference_vector(p: &Permutation, base: &Permutation) -> Vec<i64> {
    let n = p.degree();
    let mut v = vec![0i64; n * n];
    for j in 0..n {
        v[p.apply0(j) * n + j] += 1;
        v[base.apply0(j) * n + j] -= 1;
    }
    v
}

/// Affine dimension of a set of permutation matrices (`-1` for an empty set
/// is reported as 0).
pub fn affine_dimension<'a>(points: impl IntoIterator<Item = &'a Permutation>) -> usize {
    let mut iter = points.into_iter();
    let Some(base) = iter.next() else { return 0 };
    let n = base.degree();
    rank(n * n, iter.map(|p| difference_vector(p, base)))
}

/// Dimension of `P(G)`: exact rank of `{matrix(g) - I : g in G}`.
pub fn dimension(group: &PermutationGroup) -> usize {
    let n = group.degree();
    let id = Permutation::identity(n);
    let mut basis = EchelonBasis::new(n * n);
    for g in group.elements().iter().skip(1) {
        basis.insert(&difference_vector(g, &id));
    }
    basis.rank()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionBounds {
    pub dimension: usize,
    pub t_all: usize,
    pub two_transitive: bool,
    /// `(n - t_all)^2`
    pub upper: usize,
    pub equality_holds: bool,
    /// `(n - 1)^2`
    pub birkhoff: usize,
}

/// Dimension together with the orbit bound `(n - t)^2`. Degree 1 counts as
/// 2-transitive.
pub fn dimension_bounds(group: &PermutationGroup) -> Result<DimensionBounds> {
    let n = group.degree();
    let dimension = dimension(group);
    let t_all = group.orbits().t_all;
    let two_transitive = n < 2 || group.is_k_transitive(2)?;
    let upper = (n - t_all).pow(2);
    Ok(DimensionBounds {
        dimension,
        t_all,
        two_transitive,
        upper,
        equality_holds: dimension == upper,
        birkhoff: (n - 1).pow(2),
    })
}

/// True iff `P(G)` is a simplex: dimension `|G| - 1`.
pub fn is_simplex(group: &PermutationGroup) -> bool {
    dimension(group) + 1 == group.order()
}

/// `g` and `h` span an edge iff `h^-1 g` is indecomposable.
pub fn is_edge(group: &PermutationGroup, g: &Permutation, h: &Permutation) -> Result<bool> {
    group.require_index(g)?;
    group.require_index(h)?;
    if g == h {
        return Err(Error::EqualVertices);
    }
    indecomp::is_indecomposable(group, &(&h.inverse() * g))
}

/// The smallest face of `P(G)` containing `g` and `h`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceDescriptor {
    pub g: usize,
    pub h: usize,
    /// Sorted indices of `{h k : k in G, k ⪯ h^-1 g}`.
    pub vertex_indices: Vec<usize>,
    pub affine_dim: usize,
}

pub fn smallest_face(group: &PermutationGroup, g: &Permutation, h: &Permutation) -> Result<FaceDescriptor> {
    smallest_face_with(group, g, h, DEFAULT_MAX_CYCLES)
}

pub fn smallest_face_with(
    group: &PermutationGroup,
    g: &Permutation,
    h: &Permutation,
    max_cycles: usize,
) -> Result<FaceDescriptor> {
    let gi = group.require_index(g)?;
    let hi = group.require_index(h)?;
    let quotient = &h.inverse() * g;
    let vertices: Vec<Permutation> = indecomp::divisors(group, &quotient, max_cycles)?
        .iter()
        .map(|k| h * k)
        .collect();
    let mut vertex_indices: Vec<usize> = vertices
        .iter()
        .map(|v| group.index_of(v).expect("coset of a member"))
        .collect();
    vertex_indices.sort_unstable();
    Ok(FaceDescriptor {
        g: gi,
        h: hi,
        affine_dim: affine_dimension(&vertices),
        vertex_indices,
    })
}

/// Edge graph of `P(G)`: the Cayley graph of `G` with respect to the
/// nontrivial indecomposables. Left multiplication is a graph automorphism,
/// so distances from the identity determine the whole metric.
#[derive(Debug, Clone)]
pub struct PolytopeGraph<'a> {
    group: &'a PermutationGroup,
    set: IndecompSet,
    dist: Vec<u32>,
}

impl<'a> PolytopeGraph<'a> {
    pub fn new(group: &'a PermutationGroup, set: IndecompSet) -> Self {
        let dist = word_lengths(group, set.nontrivial());
        PolytopeGraph { group, set, dist }
    }

    pub fn set(&self) -> &IndecompSet {
        &self.set
    }

    /// Distances from the identity by element index.
    pub fn distances(&self) -> &[u32] {
        &self.dist
    }

    pub fn diameter(&self) -> usize {
        self.dist.iter().copied().max().unwrap_or(0) as usize
    }

    /// Number of elements at each distance from the identity.
    pub fn eccentricity_profile(&self) -> Vec<usize> {
        let mut profile = vec![0; self.diameter() + 1];
        for &d in &self.dist {
            profile[d as usize] += 1;
        }
        profile
    }

    /// Sorted indices of `{g s : s in S, s != 1}`.
    pub fn neighbors(&self, g: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .set
            .nontrivial()
            .iter()
            .map(|&s| self.group.mul_index(g, s))
            .collect();
        out.sort_unstable();
        out
    }

    /// Adjacency list lines `i: j k ...` followed by a legend `i = cycles`.
    pub fn export_adjacency(&self) -> String {
        let mut out = String::new();
        for g in 0..self.group.order() {
            let nbrs: Vec<String> = self.neighbors(g).iter().map(usize::to_string).collect();
            out.push_str(&format!("{g}: {}\n", nbrs.join(" ")));
        }
        out.push_str("# legend\n");
        for (i, e) in self.group.elements().iter().enumerate() {
            out.push_str(&format!("{i} = {e}\n"));
        }
        out
    }
}

/// Diameter of the edge graph of `P(G)`.
pub fn diameter(group: &PermutationGroup) -> Result<usize> {
    let set = indecomp::indecomposable_set(group)?;
    Ok(PolytopeGraph::new(group, set).diameter())
}

/// `min{2t, floor(n/2)}` with `t` the number of nontrivial orbits.
pub fn diameter_bound(group: &PermutationGroup) -> usize {
    (2 * group.orbits().t_nontrivial).min(group.degree() / 2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AffineDependence {
    /// Indecomposable factors with pairwise disjoint supports, product `g`.
    pub parts: Vec<String>,
    /// `matrix(g) - I == sum(matrix(g_i) - I)` holds exactly.
    pub holds: bool,
}

fn disjoint_parts(group: &PermutationGroup, g: &Permutation) -> Result<Vec<Permutation>> {
    let proper = indecomp::divisors(group, g, DEFAULT_MAX_CYCLES)?
        .into_iter()
        .find(|d| !d.is_identity() && d != g);
    match proper {
        None => Ok(vec![g.clone()]),
        Some(d) => {
            let rest = &d.inverse() * g;
            let mut parts = disjoint_parts(group, &d)?;
            parts.extend(disjoint_parts(group, &rest)?);
            Ok(parts)
        }
    }
}

/// Splits `g` into disjoint indecomposable factors taken from its divisors in
/// `G` and checks `g - e = sum(g_i - e)` on the integer matrices.
pub fn affine_dependence_check(group: &PermutationGroup, g: &Permutation) -> Result<AffineDependence> {
    group.require_index(g)?;
    let parts = if g.is_identity() {
        vec![]
    } else {
        disjoint_parts(group, g)?
    };
    if parts.len() < 2 {
        return Err(Error::NoDisjointFactorization(g.to_string()));
    }
    let id = Permutation::identity(g.degree());
    let lhs = difference_vector(g, &id);
    let mut rhs = vec![0i64; lhs.len()];
    for part in &parts {
        for (acc, x) in rhs.iter_mut().zip(difference_vector(part, &id)) {
            *acc += x;
        }
    }
    Ok(AffineDependence {
        parts: parts.iter().map(Permutation::to_string).collect(),
        holds: lhs == rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::CatalogEntry;
    use crate::group::DEFAULT_ORDER_CAP;
    use crate::oracle::rational_rank;

    fn p(text: &str, n: usize) -> Permutation {
        Permutation::parse(text, n).unwrap()
    }

    fn cat(text: &str) -> PermutationGroup {
        CatalogEntry::parse(text).unwrap().spec().build(DEFAULT_ORDER_CAP).unwrap()
    }

    fn group(n: usize, gens: &[&str]) -> PermutationGroup {
        let gens: Vec<_> = gens.iter().map(|g| p(g, n)).collect();
        PermutationGroup::generate(n, &gens, DEFAULT_ORDER_CAP).unwrap()
    }

    fn oracle_dimension(group: &PermutationGroup) -> usize {
        let id = Permutation::identity(group.degree());
        let rows: Vec<Vec<i64>> = group.elements().iter().map(|g| difference_vector(g, &id)).collect();
        rational_rank(&rows)
    }

    #[test]
    fn edges() {
        let s4 = cat("symmetric(4)");
        let id = Permutation::identity(4);
        assert!(is_edge(&s4, &id, &p("(1 2)", 4)).unwrap());
        assert!(!is_edge(&s4, &id, &p("(1 2)(3 4)", 4)).unwrap());
        let v = group(4, &["(1 2)(3 4)"]);
        assert!(is_edge(&v, &id, &p("(1 2)(3 4)", 4)).unwrap());
        assert_eq!(is_edge(&s4, &id, &id), Err(Error::EqualVertices));
    }

    #[test]
    fn faces() {
        let s4 = cat("symmetric(4)");
        let id = Permutation::identity(4);
        let g = p("(1 2)(3 4)", 4);
        let face = smallest_face(&s4, &id, &g).unwrap();
        let verts: Vec<String> = face.vertex_indices.iter().map(|&i| s4.element(i).to_string()).collect();
        assert_eq!(verts, vec!["()", "(3 4)", "(1 2)", "(1 2)(3 4)"]);
        assert_eq!(face.affine_dim, 2);
        let rows: Vec<Vec<i64>> = face
            .vertex_indices
            .iter()
            .map(|&i| difference_vector(s4.element(i), &id))
            .collect();
        assert_eq!(rational_rank(&rows), 2);

        let edge = smallest_face(&s4, &id, &p("(1 2)", 4)).unwrap();
        assert_eq!((edge.vertex_indices.len(), edge.affine_dim), (2, 1));
        let point = smallest_face(&s4, &g, &g).unwrap();
        assert_eq!((point.vertex_indices.len(), point.affine_dim), (1, 0));
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(&cat("symmetric(3)")), 4);
        assert_eq!(dimension(&cat("alternating(4)")), 9);
        assert_eq!(dimension(&cat("cyclic(2)")), 1);
        assert_eq!(dimension(&cat("dihedral(4)")), 5);
        assert_eq!(dimension(&cat("symmetric(1)")), 0);
        for text in ["dihedral(4)", "cyclic(4)", "alternating(4)", "mixing_example_gp(3)", "psl_2_5"] {
            let g = cat(text);
            assert_eq!(dimension(&g), oracle_dimension(&g), "{text}");
        }
    }

    #[test]
    fn bounds() {
        let s4 = dimension_bounds(&cat("symmetric(4)")).unwrap();
        assert!(s4.two_transitive && s4.equality_holds);
        assert_eq!(s4.dimension, 9);
        let c4 = dimension_bounds(&cat("cyclic(4)")).unwrap();
        assert_eq!(c4.dimension, 3);
        assert!(!c4.two_transitive);
        let t = dimension_bounds(&group(3, &["(1 2)"])).unwrap();
        assert_eq!((t.t_all, t.upper, t.dimension), (2, 1, 1));
    }

    #[test]
    fn simplex() {
        assert!(is_simplex(&cat("cyclic(3)")));
        assert!(!is_simplex(&cat("symmetric(4)")));
        assert!(is_simplex(&cat("symmetric(1)")));
        assert!(is_simplex(&group(4, &[])));
    }

    #[test]
    fn diameters() {
        assert_eq!(diameter(&cat("symmetric(3)")).unwrap(), 1);
        assert_eq!(diameter(&cat("symmetric(4)")).unwrap(), 2);
        assert_eq!(diameter(&cat("alternating(5)")).unwrap(), 1);
        assert_eq!(diameter(&cat("dihedral4_power(1)")).unwrap(), 2);
        assert_eq!(diameter(&cat("dihedral4_power(2)")).unwrap(), 4);
        assert_eq!(diameter(&group(3, &[])).unwrap(), 0);
    }

    #[test]
    fn graph_is_symmetric_and_exportable() {
        let s3 = cat("symmetric(3)");
        let graph = PolytopeGraph::new(&s3, indecomp::indecomposable_set(&s3).unwrap());
        for a in 0..s3.order() {
            for b in graph.neighbors(a) {
                assert!(graph.neighbors(b).contains(&a));
            }
        }
        assert_eq!(graph.eccentricity_profile(), vec![1, 5]);
        let text = graph.export_adjacency();
        assert!(text.starts_with("0: 1 2 3 4 5\n"));
        assert!(text.contains("# legend\n0 = ()\n"));
    }

    #[test]
    fn affine_dependence() {
        let s4 = cat("symmetric(4)");
        let dep = affine_dependence_check(&s4, &p("(1 2)(3 4)", 4)).unwrap();
        assert_eq!(dep.parts, vec!["(3 4)", "(1 2)"]);
        assert!(dep.holds);
        assert!(matches!(
            affine_dependence_check(&s4, &p("(1 2)", 4)),
            Err(Error::NoDisjointFactorization(_))
        ));
        let s6 = cat("symmetric(6)");
        let dep = affine_dependence_check(&s6, &p("(1 2)(3 4)(5 6)", 6)).unwrap();
        assert_eq!(dep.parts.len(), 3);
        assert!(dep.holds);
    }
}

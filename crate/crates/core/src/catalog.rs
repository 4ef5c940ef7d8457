//! Named group constructions used as fixtures.
//!
//! Every entry resolves to a [`GroupSpec`]: a degree plus generators in cycle
//! notation. The generator strings are produced deterministically, so emitting
//! the same entry twice yields byte-identical specs.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::spec_file::GroupSpec;

/// A catalog construction with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogEntry {
    Symmetric(usize),
    Alternating(usize),
    Cyclic(usize),
    /// Symmetries of a regular `n`-gon acting on its vertices.
    Dihedral(usize),
    /// Direct product acting on disjoint consecutive point sets.
    DirectProduct(Vec<CatalogEntry>),
    /// `t` copies of the dihedral group of the square on `4t` points.
    Dihedral4Power(usize),
    /// Two disjoint `p`-cycles `x, y` and an involution swapping them (order `2p^2`).
    MixingExampleGp(usize),
    /// `Z/p wr J` on `pq` points, `J` the nonabelian group of order `qr`
    /// acting on `q` points as affine maps `i -> a*i + b` of `Z/q`.
    WreathCyclicByGroup { p: usize, q: usize, r: usize },
    /// PSL(2,5) on the projective line over GF(5).
    Psl25,
    /// AGL(3,2) on the 8 vectors of GF(2)^3.
    Affine32,
}

/// Names accepted by [`CatalogEntry::from_parts`], with parameter hints.
pub const CATALOG_NAMES: &[(&str, &str)] = &[
    ("symmetric", "n"),
    ("alternating", "n"),
    ("cyclic", "n"),
    ("dihedral", "n >= 3"),
    ("direct_product", "entry entry ..."),
    ("dihedral4_power", "t"),
    ("mixing_example_gp", "odd prime p"),
    ("wreath_cyclic_by_group", "p q r (primes, q > r, r | q-1, p distinct)"),
    ("psl_2_5", ""),
    ("affine_3_2", ""),
];

const PSL_2_5_GENERATORS: &[&str] = &["(1 2 3 4 5)", "(1 6)(2 5)"];
const AFFINE_3_2_GENERATORS: &[&str] = &["(1 2)(3 4)(5 6)(7 8)", "(2 3 5 4 7 8 6)", "(3 4)(7 8)"];

pub(crate) fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn cycle_string(points: impl IntoIterator<Item = usize>) -> String {
    let pts: Vec<String> = points.into_iter().map(|p| p.to_string()).collect();
    format!("({})", pts.join(" "))
}

impl CatalogEntry {
    /// Parses `name`, `name(args)` or nested forms such as
    /// `direct_product(cyclic(3), symmetric(4))`.
    pub fn parse(text: &str) -> Result<CatalogEntry> {
        let text = text.trim();
        match text.find('(') {
            None => CatalogEntry::from_parts::<&str>(text, &[]),
            Some(open) => {
                let Some(inner) = text[open + 1..].strip_suffix(')') else {
                    return Err(Error::InvalidParams(format!("unbalanced parentheses in {text:?}")));
                };
                let args = split_top_level(inner)?;
                CatalogEntry::from_parts(text[..open].trim(), &args)
            }
        }
    }

    /// Builds an entry from a name and its parameters as strings.
    /// `direct_product` parameters are themselves entry descriptors.
    pub fn from_parts<S: AsRef<str>>(name: &str, params: &[S]) -> Result<CatalogEntry> {
        let ints = || -> Result<Vec<usize>> {
            params
                .iter()
                .map(|s| {
                    s.as_ref()
                        .trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidParams(format!("{name}: bad integer {:?}", s.as_ref())))
                })
                .collect()
        };
        let one = || -> Result<usize> {
            match ints()?.as_slice() {
                [n] => Ok(*n),
                _ => Err(Error::InvalidParams(format!("{name} takes one integer"))),
            }
        };
        let none = || -> Result<()> {
            if params.is_empty() {
                Ok(())
            } else {
                Err(Error::InvalidParams(format!("{name} takes no parameters")))
            }
        };
        let entry = match name {
            "symmetric" => CatalogEntry::Symmetric(one()?),
            "alternating" => CatalogEntry::Alternating(one()?),
            "cyclic" => CatalogEntry::Cyclic(one()?),
            "dihedral" => CatalogEntry::Dihedral(one()?),
            "dihedral4_power" => CatalogEntry::Dihedral4Power(one()?),
            "mixing_example_gp" => CatalogEntry::MixingExampleGp(one()?),
            "wreath_cyclic_by_group" => match ints()?.as_slice() {
                &[p, q, r] => CatalogEntry::WreathCyclicByGroup { p, q, r },
                _ => return Err(Error::InvalidParams("wreath_cyclic_by_group takes p q r".into())),
            },
            "direct_product" => CatalogEntry::DirectProduct(
                params
                    .iter()
                    .map(|s| CatalogEntry::parse(s.as_ref()))
                    .collect::<Result<_>>()?,
            ),
            "psl_2_5" => {
                none()?;
                CatalogEntry::Psl25
            }
            "affine_3_2" => {
                none()?;
                CatalogEntry::Affine32
            }
            other => return Err(Error::UnknownCatalog(other.to_string())),
        };
        entry.validate()?;
        Ok(entry)
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParams(msg));
        match *self {
            CatalogEntry::Symmetric(n) | CatalogEntry::Alternating(n) | CatalogEntry::Cyclic(n) if n == 0 => {
                bad("degree must be positive".into())
            }
            CatalogEntry::Dihedral(n) if n < 3 => bad(format!("dihedral needs n >= 3, got {n}")),
            CatalogEntry::Dihedral4Power(0) => bad("dihedral4_power needs t >= 1".into()),
            CatalogEntry::MixingExampleGp(p) if p == 2 || !is_prime(p) => {
                bad(format!("mixing_example_gp needs an odd prime, got {p}"))
            }
            CatalogEntry::WreathCyclicByGroup { p, q, r } => {
                if !(is_prime(p) && is_prime(q) && is_prime(r)) {
                    bad(format!("p, q, r must be primes, got {p}, {q}, {r}"))
                } else if q <= r || (q - 1) % r != 0 {
                    bad(format!("need q > r and r | q-1, got q = {q}, r = {r}"))
                } else if p == q || p == r {
                    bad(format!("p = {p} must differ from q and r"))
                } else {
                    Ok(())
                }
            }
            CatalogEntry::DirectProduct(ref parts) if parts.is_empty() => {
                bad("direct_product needs at least one factor".into())
            }
            _ => Ok(()),
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            CatalogEntry::Symmetric(n)
            | CatalogEntry::Alternating(n)
            | CatalogEntry::Cyclic(n)
            | CatalogEntry::Dihedral(n) => *n,
            CatalogEntry::DirectProduct(parts) => parts.iter().map(CatalogEntry::degree).sum(),
            CatalogEntry::Dihedral4Power(t) => 4 * t,
            CatalogEntry::MixingExampleGp(p) => 2 * p,
            CatalogEntry::WreathCyclicByGroup { p, q, .. } => p * q,
            CatalogEntry::Psl25 => 6,
            CatalogEntry::Affine32 => 8,
        }
    }

    /// Generators as cycle strings on `1..=degree`.
    fn generator_strings(&self) -> Vec<String> {
        match *self {
            CatalogEntry::Symmetric(n) => match n {
                1 => vec![],
                2 => vec!["(1 2)".into()],
                _ => vec!["(1 2)".into(), cycle_string(1..=n)],
            },
            CatalogEntry::Alternating(n) => (3..=n).map(|i| cycle_string([1, 2, i])).collect(),
            CatalogEntry::Cyclic(n) => {
                if n == 1 {
                    vec![]
                } else {
                    vec![cycle_string(1..=n)]
                }
            }
            CatalogEntry::Dihedral(n) => {
                let reflection: String = (1..=n / 2).map(|i| cycle_string([i, n + 1 - i])).collect();
                vec![cycle_string(1..=n), reflection]
            }
            CatalogEntry::DirectProduct(ref parts) => {
                let mut offset = 0;
                let mut gens = Vec::new();
                for part in parts {
                    let d = part.degree();
                    for g in part.generator_strings() {
                        let perm = Permutation::parse(&g, d).expect("catalog generator");
                        gens.push(shift_cycles(&perm, offset));
                    }
                    offset += d;
                }
                gens
            }
            CatalogEntry::Dihedral4Power(t) => {
                CatalogEntry::DirectProduct(vec![CatalogEntry::Dihedral(4); t]).generator_strings()
            }
            CatalogEntry::MixingExampleGp(p) => {
                let swap: String = (1..=p).map(|i| cycle_string([i, p + i])).collect();
                vec![cycle_string(1..=p), cycle_string(p + 1..=2 * p), swap]
            }
            CatalogEntry::WreathCyclicByGroup { p, q, r } => {
                let a = (2..q).find(|&a| multiplicative_order(a, q) == r).expect("r | q-1");
                let point = |block: usize, fibre: usize| block * p + fibre + 1;
                let lift = |f: &dyn Fn(usize) -> usize| {
                    let images: Vec<usize> = (0..q)
                        .flat_map(|i| (0..p).map(move |c| (i, c)))
                        .map(|(i, c)| point(f(i), c))
                        .collect();
                    Permutation::from_images(&images).expect("block map").to_string()
                };
                vec![
                    cycle_string((0..p).map(|c| point(0, c))),
                    lift(&|i| (i + 1) % q),
                    lift(&|i| (a * i) % q),
                ]
            }
            CatalogEntry::Psl25 => PSL_2_5_GENERATORS.iter().map(|s| s.to_string()).collect(),
            CatalogEntry::Affine32 => AFFINE_3_2_GENERATORS.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn spec(&self) -> GroupSpec {
        GroupSpec {
            name: Some(self.to_string()),
            degree: self.degree(),
            generators: self.generator_strings(),
        }
    }
}

fn multiplicative_order(a: usize, m: usize) -> usize {
    let mut x = a % m;
    let mut k = 1;
    while x != 1 {
        x = x * a % m;
        k += 1;
    }
    k
}

fn shift_cycles(p: &Permutation, offset: usize) -> String {
    p.cycles()
        .cycles()
        .iter()
        .map(|c| cycle_string(c.iter().map(|x| x + offset)))
        .collect()
}

fn split_top_level(inner: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in inner.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur).trim().to_string());
                continue;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(Error::InvalidParams("unbalanced parentheses".into()));
        }
        cur.push(c);
    }
    if depth != 0 {
        return Err(Error::InvalidParams("unbalanced parentheses".into()));
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    Ok(out)
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogEntry::Symmetric(n) => write!(f, "symmetric({n})"),
            CatalogEntry::Alternating(n) => write!(f, "alternating({n})"),
            CatalogEntry::Cyclic(n) => write!(f, "cyclic({n})"),
            CatalogEntry::Dihedral(n) => write!(f, "dihedral({n})"),
            CatalogEntry::DirectProduct(parts) => {
                let inner: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "direct_product({})", inner.join(","))
            }
            CatalogEntry::Dihedral4Power(t) => write!(f, "dihedral4_power({t})"),
            CatalogEntry::MixingExampleGp(p) => write!(f, "mixing_example_gp({p})"),
            CatalogEntry::WreathCyclicByGroup { p, q, r } => write!(f, "wreath_cyclic_by_group({p},{q},{r})"),
            CatalogEntry::Psl25 => f.write_str("psl_2_5"),
            CatalogEntry::Affine32 => f.write_str("affine_3_2"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_ORDER_CAP;

    fn order(text: &str) -> usize {
        CatalogEntry::parse(text)
            .unwrap()
            .spec()
            .build(DEFAULT_ORDER_CAP)
            .unwrap()
            .order()
    }

    #[test]
    fn orders() {
        assert_eq!(order("symmetric(1)"), 1);
        assert_eq!(order("symmetric(5)"), 120);
        assert_eq!(order("alternating(6)"), 360);
        assert_eq!(order("alternating(2)"), 1);
        assert_eq!(order("cyclic(7)"), 7);
        assert_eq!(order("dihedral(4)"), 8);
        assert_eq!(order("dihedral(5)"), 10);
        assert_eq!(order("dihedral4_power(2)"), 64);
        assert_eq!(order("mixing_example_gp(5)"), 50);
        assert_eq!(order("mixing_example_gp(7)"), 98);
        assert_eq!(order("wreath_cyclic_by_group(5,3,2)"), 750);
        assert_eq!(order("psl_2_5"), 60);
        assert_eq!(order("affine_3_2"), 1344);
        assert_eq!(order("direct_product(cyclic(3), symmetric(3))"), 18);
    }

    #[test]
    fn degrees() {
        assert_eq!(CatalogEntry::parse("mixing_example_gp(5)").unwrap().spec().degree, 10);
        assert_eq!(CatalogEntry::parse("dihedral4_power(2)").unwrap().spec().degree, 8);
        assert_eq!(CatalogEntry::parse("wreath_cyclic_by_group(5,3,2)").unwrap().degree(), 15);
    }

    #[test]
    fn from_parts_matches_descriptor() {
        let a = CatalogEntry::from_parts("dihedral4_power", &["2"]).unwrap();
        assert_eq!(a, CatalogEntry::parse("dihedral4_power(2)").unwrap());
        let b = CatalogEntry::from_parts("direct_product", &["cyclic(3)", "dihedral(4)"]).unwrap();
        assert_eq!(b.to_string(), "direct_product(cyclic(3),dihedral(4))");
        assert_eq!(CatalogEntry::parse(&b.to_string()).unwrap(), b);
    }

    #[test]
    fn invalid() {
        assert!(matches!(CatalogEntry::parse("bogus(3)"), Err(Error::UnknownCatalog(_))));
        assert!(matches!(CatalogEntry::parse("mixing_example_gp(2)"), Err(Error::InvalidParams(_))));
        assert!(matches!(CatalogEntry::parse("mixing_example_gp(9)"), Err(Error::InvalidParams(_))));
        assert!(matches!(CatalogEntry::parse("wreath_cyclic_by_group(5,5,2)"), Err(Error::InvalidParams(_))));
        assert!(CatalogEntry::parse("wreath_cyclic_by_group(5,7,2)").is_ok());
        assert!(matches!(CatalogEntry::parse("wreath_cyclic_by_group(5,7,5)"), Err(Error::InvalidParams(_))));
        assert!(matches!(CatalogEntry::parse("dihedral(2)"), Err(Error::InvalidParams(_))));
        assert!(matches!(CatalogEntry::parse("psl_2_5(3)"), Err(Error::InvalidParams(_))));
        assert!(matches!(CatalogEntry::parse("symmetric"), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn gp_involution_conjugates() {
        let spec = CatalogEntry::MixingExampleGp(5).spec();
        let gens = spec.permutations().unwrap();
        let (x, y, u) = (&gens[0], &gens[1], &gens[2]);
        assert_eq!(&(u * x) * u, y.clone());
    }

    #[test]
    fn reproducible() {
        let e = CatalogEntry::parse("wreath_cyclic_by_group(5,3,2)").unwrap();
        assert_eq!(e.spec(), e.spec());
        let g1 = e.spec().build(DEFAULT_ORDER_CAP).unwrap();
        let g2 = e.spec().build(DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(g1.elements(), g2.elements());
    }
}

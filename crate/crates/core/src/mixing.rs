//! Random walks on the Cayley graph of `(G, S)` with `S` the indecomposable
//! elements, identity included.
//!
//! `Q^k` is the law of `s_1 s_2 ... s_k` with the `s_i` independent and
//! uniform on `S`; it is obtained from the point mass at the identity by
//! repeated right multiplication with a uniform `S`-step. Exact mode keeps
//! integer word counts over the common denominator `|S|^k`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{is_prime, CatalogEntry};
use crate::error::{Error, Result};
use crate::group::{PermutationGroup, DEFAULT_ORDER_CAP};
use crate::indecomp::{indecomposable_set, IndecompSet};

/// Tolerance on the total mass in floating mode.
pub const FLOAT_SUM_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

/// Size limits for exact-rational mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactLimits {
    pub max_order: usize,
    pub max_steps: usize,
}

impl Default for ExactLimits {
    fn default() -> Self {
        ExactLimits {
            max_order: 2000,
            max_steps: 12,
        }
    }
}

impl ExactLimits {
    fn check(&self, order: usize, steps: usize) -> Result<()> {
        if order > self.max_order || steps > self.max_steps {
            return Err(Error::ExactCapExceeded {
                max_order: self.max_order,
                max_steps: self.max_steps,
            });
        }
        Ok(())
    }

    pub fn allows(&self, order: usize, steps: usize) -> bool {
        self.check(order, steps).is_ok()
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Masses {
    Exact { counts: Vec<BigUint>, denom: BigUint },
    Float(Vec<f64>),
}

/// A probability vector over group elements by canonical index.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    masses: Masses,
}

impl Distribution {
    pub fn point_mass(order: usize, index: usize, mode: Mode) -> Result<Distribution> {
        if index >= order {
            return Err(Error::IndexOutOfRange { index, order });
        }
        let masses = match mode {
            Mode::Exact => {
                let mut counts = vec![BigUint::zero(); order];
                counts[index] = BigUint::one();
                Masses::Exact {
                    counts,
                    denom: BigUint::one(),
                }
            }
            Mode::Float => {
                let mut v = vec![0.0; order];
                v[index] = 1.0;
                Masses::Float(v)
            }
        };
        Ok(Distribution { masses })
    }

    pub fn uniform(order: usize, mode: Mode) -> Distribution {
        let masses = match mode {
            Mode::Exact => Masses::Exact {
                counts: vec![BigUint::one(); order],
                denom: BigUint::from(order),
            },
            Mode::Float => Masses::Float(vec![1.0 / order as f64; order]),
        };
        Distribution { masses }
    }

    pub(crate) fn from_float(v: Vec<f64>) -> Distribution {
        Distribution {
            masses: Masses::Float(v),
        }
    }

    pub fn mode(&self) -> Mode {
        match self.masses {
            Masses::Exact { .. } => Mode::Exact,
            Masses::Float(_) => Mode::Float,
        }
    }

    pub fn len(&self) -> usize {
        match &self.masses {
            Masses::Exact { counts, .. } => counts.len(),
            Masses::Float(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn probability(&self, index: usize) -> f64 {
        match &self.masses {
            Masses::Exact { counts, denom } => ratio_to_f64(&counts[index], denom),
            Masses::Float(v) => v[index],
        }
    }

    pub fn probability_exact(&self, index: usize) -> Option<BigRational> {
        match &self.masses {
            Masses::Exact { counts, denom } => Some(rational(&counts[index], denom)),
            Masses::Float(_) => None,
        }
    }

    pub fn probabilities(&self) -> Vec<f64> {
        (0..self.len()).map(|i| self.probability(i)).collect()
    }

    /// Total mass; exactly one in exact mode.
    pub fn total(&self) -> f64 {
        match &self.masses {
            Masses::Exact { counts, denom } => ratio_to_f64(&counts.iter().sum(), denom),
            Masses::Float(v) => v.iter().sum(),
        }
    }

    pub fn total_exact(&self) -> Option<BigRational> {
        match &self.masses {
            Masses::Exact { counts, denom } => Some(rational(&counts.iter().sum(), denom)),
            Masses::Float(_) => None,
        }
    }

    /// One step: `out(g) = sum over s in S of dist(g s^-1) / |S|`.
    pub fn evolve(&self, group: &PermutationGroup, set: &IndecompSet) -> Result<Distribution> {
        if self.len() != group.order() {
            return Err(Error::IndexOutOfRange {
                index: self.len(),
                order: group.order(),
            });
        }
        let steps: Vec<usize> = set.members().iter().map(|&s| group.inverse_index(s)).collect();
        let masses = match &self.masses {
            Masses::Exact { counts, denom } => {
                let next: Vec<BigUint> = (0..group.order())
                    .into_par_iter()
                    .map(|g| steps.iter().map(|&s| &counts[group.mul_index(g, s)]).sum())
                    .collect();
                Masses::Exact {
                    counts: next,
                    denom: denom * BigUint::from(steps.len()),
                }
            }
            Masses::Float(v) => {
                let scale = 1.0 / steps.len() as f64;
                let next: Vec<f64> = (0..group.order())
                    .into_par_iter()
                    .map(|g| steps.iter().map(|&s| v[group.mul_index(g, s)]).sum::<f64>() * scale)
                    .collect();
                Masses::Float(next)
            }
        };
        Ok(Distribution { masses })
    }

    /// Total variation distance to the uniform distribution.
    pub fn tv_distance(&self) -> f64 {
        match &self.masses {
            Masses::Exact { .. } => self.tv_distance_exact().expect("exact").to_f64().unwrap_or(f64::NAN),
            Masses::Float(v) => {
                let u = 1.0 / v.len() as f64;
                0.5 * v.iter().map(|p| (p - u).abs()).sum::<f64>()
            }
        }
    }

    /// `(1/2) sum |c_g/D - 1/|G||`, computed as `sum |c_g |G| - D| / (2 D |G|)`.
    pub fn tv_distance_exact(&self) -> Option<BigRational> {
        let Masses::Exact { counts, denom } = &self.masses else {
            return None;
        };
        let order = BigInt::from(counts.len());
        let d = BigInt::from(denom.clone());
        let numer: BigInt = counts
            .iter()
            .map(|c| (BigInt::from(c.clone()) * &order - &d).abs())
            .sum();
        Some(BigRational::new(numer, BigInt::from(2) * d * order))
    }

    /// Mass of a set of element indices.
    pub fn coset_mass(&self, indices: &[usize]) -> Result<f64> {
        self.check_indices(indices)?;
        Ok(match &self.masses {
            Masses::Exact { counts, denom } => {
                ratio_to_f64(&indices.iter().map(|&i| &counts[i]).sum(), denom)
            }
            Masses::Float(v) => indices.iter().map(|&i| v[i]).sum(),
        })
    }

    pub fn coset_mass_exact(&self, indices: &[usize]) -> Result<BigRational> {
        self.check_indices(indices)?;
        match &self.masses {
            Masses::Exact { counts, denom } => Ok(rational(&indices.iter().map(|&i| &counts[i]).sum(), denom)),
            Masses::Float(_) => Err(Error::ModeMismatch),
        }
    }

    fn check_indices(&self, indices: &[usize]) -> Result<()> {
        match indices.iter().find(|&&i| i >= self.len()) {
            Some(&index) => Err(Error::IndexOutOfRange {
                index,
                order: self.len(),
            }),
            None => Ok(()),
        }
    }
}

fn rational(num: &BigUint, den: &BigUint) -> BigRational {
    BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

fn ratio_to_f64(num: &BigUint, den: &BigUint) -> f64 {
    rational(num, den).to_f64().unwrap_or(f64::NAN)
}

/// Uniform distribution on `S`.
pub fn step_distribution(group: &PermutationGroup, set: &IndecompSet, mode: Mode) -> Result<Distribution> {
    Distribution::point_mass(group.order(), group.identity_index(), mode)?.evolve(group, set)
}

/// `Q^k`, starting from the point mass at the identity.
pub fn walk_distribution(group: &PermutationGroup, set: &IndecompSet, k: usize, mode: Mode) -> Result<Distribution> {
    let mut dist = Distribution::point_mass(group.order(), group.identity_index(), mode)?;
    for _ in 0..k {
        dist = dist.evolve(group, set)?;
    }
    Ok(dist)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurvePoint {
    pub k: usize,
    pub d: f64,
    /// Exact value as `numerator/denominator` in exact mode.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_exact: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MixingCurve {
    pub order: usize,
    pub s_size: usize,
    pub mode: Mode,
    pub points: Vec<CurvePoint>,
}

impl MixingCurve {
    pub fn d(&self, k: usize) -> f64 {
        self.points[k].d
    }
}

/// `d(0), ..., d(kmax)`.
pub fn mixing_curve(
    group: &PermutationGroup,
    set: &IndecompSet,
    kmax: usize,
    mode: Mode,
    limits: ExactLimits,
) -> Result<MixingCurve> {
    if kmax == 0 {
        return Err(Error::InvalidParams("kmax must be at least 1".into()));
    }
    if mode == Mode::Exact {
        limits.check(group.order(), kmax)?;
    }
    let mut dist = Distribution::point_mass(group.order(), group.identity_index(), mode)?;
    let mut points = Vec::with_capacity(kmax + 1);
    for k in 0..=kmax {
        if k > 0 {
            dist = dist.evolve(group, set)?;
        }
        points.push(CurvePoint {
            k,
            d: dist.tv_distance(),
            d_exact: dist.tv_distance_exact().map(|r| r.to_string()),
        });
    }
    Ok(MixingCurve {
        order: group.order(),
        s_size: set.len(),
        mode,
        points,
    })
}

/// Empirical law of `k`-step products from a ChaCha8 stream seeded with `seed`.
pub fn monte_carlo_walk(group: &PermutationGroup, set: &IndecompSet, k: usize, trials: usize, seed: u64) -> Result<Distribution> {
    if trials == 0 {
        return Err(Error::InvalidParams("trials must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let members = set.members();
    let mut counts = vec![0u64; group.order()];
    for _ in 0..trials {
        let mut cur = group.identity_index();
        for _ in 0..k {
            cur = group.mul_index(cur, members[rng.gen_range(0..members.len())]);
        }
        counts[cur] += 1;
    }
    Ok(Distribution::from_float(
        counts.into_iter().map(|c| c as f64 / trials as f64).collect(),
    ))
}

/// Soft tolerance on `TV(empirical, exact)`: `3 sqrt(|G| / trials) / 2`.
pub fn monte_carlo_tolerance(order: usize, trials: usize) -> f64 {
    1.5 * (order as f64 / trials as f64).sqrt()
}

/// Half the L1 distance between two distributions on the same group.
pub fn tv_between(a: &Distribution, b: &Distribution) -> f64 {
    0.5 * (0..a.len()).map(|i| (a.probability(i) - b.probability(i)).abs()).sum::<f64>()
}

/// The two non-primitive families whose walks mix slowly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlowFamily {
    /// Two disjoint `p`-cycles and a swapping involution.
    Gp { p: usize },
    /// `Z/p wr J` with `|J| = qr`.
    Wreath { p: usize, q: usize, r: usize },
}

/// A probability with its exact form when available.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Mass {
    pub value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyStep {
    pub k: usize,
    /// `Q^k(N)`
    pub mass_n: Mass,
    /// `Q^k(uN)`, the coset outside N (gp family only)
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mass_shifted: Option<Mass>,
    /// gp: `(1 - 2/p)^k`; wreath: `(1 - 1/p)^k`
    pub bound: Mass,
    /// gp: even k compares `Q^k(N)`, odd k compares `Q^k(uN)` (strictly);
    /// wreath: `Q^k(N) >= bound`. Not checked at `k = 0`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inequality_holds: Option<bool>,
    pub d: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SlowFamilyReport {
    pub family: String,
    pub group: String,
    pub degree: usize,
    pub order: usize,
    pub mode: Mode,
    pub n_order: usize,
    pub s_size: usize,
    pub s_in_n: usize,
    pub s_outside_n: usize,
    /// gp: `2p - 1`; wreath: `(q-1)p^q + q(p-1) + 1`
    pub formula_s_in_n: usize,
    /// gp: `p^2` (every element outside `N`); wreath: `(r-1)p^(q-1)`
    pub formula_s_outside_n: usize,
    /// gp: `|S ∩ N| / |S|`; wreath: `|S \ N| / |S|`
    pub checked_fraction: Mass,
    /// gp: `2/p`; wreath: `1/p`
    pub fraction_bound: Mass,
    pub fraction_below_bound: bool,
    pub steps: Vec<FamilyStep>,
    /// Every checked trajectory inequality holds.
    pub all_inequalities_hold: bool,
}

fn mass_of(dist: &Distribution, indices: &[usize]) -> Result<Mass> {
    Ok(match dist.mode() {
        Mode::Exact => {
            let exact = dist.coset_mass_exact(indices)?;
            Mass {
                value: exact.to_f64().unwrap_or(f64::NAN),
                exact: Some(exact.to_string()),
            }
        }
        Mode::Float => Mass {
            value: dist.coset_mass(indices)?,
            exact: None,
        },
    })
}

fn ratio_mass(num: usize, den: usize, exact: bool) -> (Mass, BigRational) {
    let r = BigRational::new(BigInt::from(num), BigInt::from(den));
    (
        Mass {
            value: num as f64 / den as f64,
            exact: exact.then(|| r.to_string()),
        },
        r,
    )
}

fn power_mass(base: &BigRational, k: usize, exact: bool) -> (Mass, BigRational) {
    let mut r = BigRational::one();
    for _ in 0..k {
        r *= base;
    }
    (
        Mass {
            value: r.to_f64().unwrap_or(f64::NAN),
            exact: exact.then(|| r.to_string()),
        },
        r,
    )
}

/// Compares `lhs` against `rhs`: exactly when an exact form exists.
fn compare(lhs: &Mass, lhs_exact: Option<BigRational>, rhs: &BigRational, strict: bool) -> bool {
    match lhs_exact {
        Some(l) => {
            if strict {
                &l > rhs
            } else {
                &l >= rhs
            }
        }
        None => {
            let r = rhs.to_f64().unwrap_or(f64::NAN);
            if strict {
                lhs.value > r
            } else {
                lhs.value >= r
            }
        }
    }
}

/// Builds the family group and reports indecomposable counts, coset masses
/// `Q^k(N)` and `d(k)` for `k = 0..=kmax`. Exact mode is used when the
/// limits allow it.
pub fn slow_family_report(family: SlowFamily, kmax: usize, limits: ExactLimits) -> Result<SlowFamilyReport> {
    let entry = match family {
        SlowFamily::Gp { p } => {
            if p == 2 || !is_prime(p) {
                return Err(Error::InvalidParams(format!("p must be an odd prime, got {p}")));
            }
            CatalogEntry::MixingExampleGp(p)
        }
        SlowFamily::Wreath { p, q, r } => CatalogEntry::WreathCyclicByGroup { p, q, r },
    };
    let entry = CatalogEntry::parse(&entry.to_string())?;
    let group = entry.spec().build(DEFAULT_ORDER_CAP)?;
    let set = indecomposable_set(&group)?;
    let gens = group.generators().to_vec();
    // gp: N = <x, y>; wreath: N = base group with the translations of J
    let n_indices = group.subgroup_indices(&gens[..2])?;
    let mut in_n = vec![false; group.order()];
    for &i in &n_indices {
        in_n[i] = true;
    }
    let s_in_n = set.members().iter().filter(|&&i| in_n[i]).count();
    let s_outside_n = set.len() - s_in_n;

    let exact = limits.allows(group.order(), kmax);
    let mode = if exact { Mode::Exact } else { Mode::Float };

    let (family_name, formula_in, formula_out, fraction_den, step_base, strict) = match family {
        SlowFamily::Gp { p } => ("gp", 2 * p - 1, p * p, p, BigRational::new(BigInt::from(p - 2), BigInt::from(p)), true),
        SlowFamily::Wreath { p, q, r } => (
            "wreath",
            (q - 1) * p.pow(q as u32) + q * (p - 1) + 1,
            (r - 1) * p.pow(q as u32 - 1),
            p,
            BigRational::new(BigInt::from(p - 1), BigInt::from(p)),
            false,
        ),
    };
    let fraction_bound_num = if family_name == "gp" { 2 } else { 1 };
    let checked_count = if family_name == "gp" { s_in_n } else { s_outside_n };
    let (checked_fraction, frac) = ratio_mass(checked_count, set.len(), true);
    let (fraction_bound, bound_frac) = ratio_mass(fraction_bound_num, fraction_den, true);
    let fraction_below_bound = frac < bound_frac;

    let shifted: Vec<usize> = match family {
        SlowFamily::Gp { .. } => {
            // the coset outside N, i.e. uN
            let u = group.require_index(&gens[2])?;
            let mut v: Vec<usize> = n_indices.iter().map(|&n| group.mul_index(u, n)).collect();
            v.sort_unstable();
            v
        }
        SlowFamily::Wreath { .. } => Vec::new(),
    };

    let mut dist = Distribution::point_mass(group.order(), group.identity_index(), mode)?;
    let mut steps = Vec::with_capacity(kmax + 1);
    for k in 0..=kmax {
        if k > 0 {
            dist = dist.evolve(&group, &set)?;
        }
        let mass_n = mass_of(&dist, &n_indices)?;
        let mass_shifted = if shifted.is_empty() {
            None
        } else {
            Some(mass_of(&dist, &shifted)?)
        };
        let (bound, bound_exact) = power_mass(&step_base, k, exact);
        let inequality_holds = (k > 0).then(|| match family {
            SlowFamily::Gp { .. } if k % 2 == 1 => {
                let m = mass_shifted.as_ref().expect("gp coset");
                compare(m, dist.coset_mass_exact(&shifted).ok(), &bound_exact, strict)
            }
            _ => compare(&mass_n, dist.coset_mass_exact(&n_indices).ok(), &bound_exact, strict),
        });
        steps.push(FamilyStep {
            k,
            mass_n,
            mass_shifted,
            bound,
            inequality_holds,
            d: dist.tv_distance(),
        });
    }
    let all_inequalities_hold = steps.iter().all(|s| s.inequality_holds != Some(false));
    Ok(SlowFamilyReport {
        family: family_name.to_string(),
        group: entry.to_string(),
        degree: group.degree(),
        order: group.order(),
        mode,
        n_order: n_indices.len(),
        s_size: set.len(),
        s_in_n,
        s_outside_n,
        formula_s_in_n: formula_in,
        formula_s_outside_n: formula_out,
        checked_fraction,
        fraction_bound,
        fraction_below_bound,
        steps,
        all_inequalities_hold,
    })
}

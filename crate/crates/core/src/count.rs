//! Brute-force point counts over prime fields.
//!
//! Points of `P^{n-1}(F_q)` are enumerated through their canonical
//! representatives: the first nonzero coordinate is `1`. The enumeration is
//! split into work units by the position of that leading one (and, inside a
//! stratum, by the value of the next coordinate); units are counted in
//! parallel and summed, so totals do not depend on scheduling.

use std::collections::BTreeSet;

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::embedding::RotationSystem;
use crate::error::{Error, Result};
use crate::kirchhoff::psi;
use crate::motive::{evaluate_at_q, ClassPoly};
use crate::multipoly::{is_prime, SubsetPoly};

/// Default bound on `n * log2(q)`, i.e. `q^n <= 2^24`.
pub const DEFAULT_MAX_WORK_BITS: u32 = 24;

/// Zeros of a polynomial split by whether they lie on a coordinate hyperplane.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrataCount {
    pub total: u64,
    /// Zeros with every coordinate nonzero.
    pub off_sigma: u64,
    pub on_sigma: u64,
}

impl std::ops::Add for StrataCount {
    type Output = StrataCount;

    fn add(self, rhs: StrataCount) -> StrataCount {
        StrataCount {
            total: self.total + rhs.total,
            off_sigma: self.off_sigma + rhs.off_sigma,
            on_sigma: self.on_sigma + rhs.on_sigma,
        }
    }
}

/// Class prediction against a brute-force count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub q: u64,
    pub total: u64,
    pub off_sigma: u64,
    pub on_sigma: u64,
    pub class_value: i64,
    pub pass: bool,
}

/// Outcome of pushing the off-hyperplane zeros of `Ψ_Γ` through coordinate
/// inversion and comparing with the off-hyperplane zeros of the dual.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CremonaReport {
    pub q: u64,
    pub primal_off_sigma: u64,
    pub dual_off_sigma: u64,
    /// Distinct zeros have distinct images.
    pub injective: bool,
    /// The image is exactly the dual's off-hyperplane zero set.
    pub image_matches: bool,
    /// Inverting twice returns every point.
    pub involution: bool,
    pub pass: bool,
}

/// Brute-force counter with a size guard.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PointCounter {
    /// Refuse domains with `q^n > 2^max_work_bits`.
    pub max_work_bits: u32,
}

impl Default for PointCounter {
    fn default() -> Self {
        PointCounter {
            max_work_bits: DEFAULT_MAX_WORK_BITS,
        }
    }
}

/// Number of points of `P^{n-1}(F_q)`, `(q^n - 1) / (q - 1)`.
pub fn projective_point_count(n: usize, q: u64) -> u64 {
    (0..n).fold(0u64, |acc, _| acc * q + 1)
}

#[derive(Debug, Clone, Copy)]
struct WorkUnit {
    lead: usize,
    next_value: Option<u64>,
}

fn work_units(n: usize, q: u64) -> Vec<WorkUnit> {
    let mut units = Vec::new();
    for lead in (0..n).rev() {
        if lead + 1 < n {
            units.extend((0..q).map(|v| WorkUnit {
                lead,
                next_value: Some(v),
            }));
        } else {
            units.push(WorkUnit {
                lead,
                next_value: None,
            });
        }
    }
    units
}

fn visit_unit<F: FnMut(&[u64])>(unit: WorkUnit, n: usize, q: u64, mut f: F) {
    let mut point = vec![0u64; n];
    point[unit.lead] = 1;
    let mut free_start = unit.lead + 1;
    if let Some(v) = unit.next_value {
        point[unit.lead + 1] = v;
        free_start += 1;
    }
    loop {
        f(&point);
        let mut i = n;
        loop {
            if i == free_start {
                return;
            }
            i -= 1;
            point[i] += 1;
            if point[i] < q {
                break;
            }
            point[i] = 0;
        }
    }
}

/// Canonical representatives of `P^{n-1}(F_q)` in lexicographic order.
pub fn projective_points(n: usize, q: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for unit in work_units(n, q) {
        visit_unit(unit, n, q, |p| out.push(p.to_vec()));
    }
    out
}

/// Polynomial reduced mod `q`, as (coefficient, variable indices) pairs.
struct Compiled {
    terms: Vec<(u64, Vec<usize>)>,
    q: u64,
}

impl Compiled {
    fn new(p: &SubsetPoly, q: u64) -> Self {
        let terms = p
            .terms()
            .map(|(s, c)| {
                let c = c.rem_euclid(q as i64) as u64;
                (c, s.iter().map(|v| v as usize - 1).collect())
            })
            .filter(|(c, _)| *c != 0)
            .collect();
        Compiled { terms, q }
    }

    fn eval(&self, point: &[u64]) -> u64 {
        let q = self.q;
        let mut acc = 0u64;
        for (c, vars) in &self.terms {
            let mut t = *c;
            for &v in vars {
                t = t * point[v] % q;
                if t == 0 {
                    break;
                }
            }
            acc = (acc + t) % q;
        }
        acc
    }
}

impl PointCounter {
    pub fn new(max_work_bits: u32) -> Self {
        PointCounter { max_work_bits }
    }

    fn check_domain(&self, n: usize, q: u64) -> Result<()> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if n == 0 {
            return Err(Error::Input("projective space needs at least one coordinate".into()));
        }
        let limit = 1u128 << self.max_work_bits.min(127);
        let work = (0..n).try_fold(1u128, |acc, _| acc.checked_mul(q as u128));
        match work {
            Some(w) if w <= limit => Ok(()),
            _ => Err(Error::DomainTooLarge(format!(
                "q^n = {q}^{n} exceeds 2^{}",
                self.max_work_bits
            ))),
        }
    }

    fn fold_points<T, F>(&self, n: usize, q: u64, per_point: F) -> T
    where
        T: Default + Send + std::ops::Add<Output = T>,
        F: Fn(&[u64]) -> T + Sync,
    {
        work_units(n, q)
            .into_par_iter()
            .map(|unit| {
                let mut acc = T::default();
                visit_unit(unit, n, q, |p| {
                    let v = per_point(p);
                    acc = std::mem::take(&mut acc) + v;
                });
                acc
            })
            .reduce(T::default, |a, b| a + b)
    }

    /// Zeros of `p` in `P^{n-1}(F_q)`, `n = p.var_count()`.
    pub fn count_zeros(&self, p: &SubsetPoly, q: u64) -> Result<StrataCount> {
        let n = p.var_count();
        self.check_domain(n, q)?;
        let compiled = Compiled::new(p, q);
        Ok(self.fold_points(n, q, |pt| {
            if compiled.eval(pt) != 0 {
                return StrataCount::default();
            }
            let off = pt.iter().all(|&x| x != 0);
            StrataCount {
                total: 1,
                off_sigma: u64::from(off),
                on_sigma: u64::from(!off),
            }
        }))
    }

    /// Points of `P^{n-1}(F_q)` with at least `k` vanishing coordinates.
    pub fn count_multi_vanishing(&self, n: usize, k: usize, q: u64) -> Result<u64> {
        if k == 0 || k > n {
            return Err(Error::Input(format!("need 1 <= k <= n, got k = {k}, n = {n}")));
        }
        self.check_domain(n, q)?;
        Ok(self.fold_points(n, q, |pt| {
            u64::from(pt.iter().filter(|&&x| x == 0).count() >= k)
        }))
    }

    /// Compares `c` at `T = q - 1` with the number of zeros of `p`.
    pub fn verify_class(&self, c: &ClassPoly, p: &SubsetPoly, q: u64) -> Result<VerifyReport> {
        let counts = self.count_zeros(p, q)?;
        let class_value = evaluate_at_q(c, q)?
            .to_i64()
            .ok_or(Error::Overflow("class value"))?;
        Ok(VerifyReport {
            q,
            total: counts.total,
            off_sigma: counts.off_sigma,
            on_sigma: counts.on_sigma,
            class_value,
            pass: class_value >= 0 && class_value as u64 == counts.total,
        })
    }

    fn off_sigma_zeros(&self, p: &SubsetPoly, q: u64) -> Result<Vec<Vec<u64>>> {
        let n = p.var_count();
        self.check_domain(n, q)?;
        let compiled = Compiled::new(p, q);
        let mut zeros = Vec::new();
        // off the coordinate hyperplanes the leading one sits at position 0
        for unit in work_units(n, q).into_iter().filter(|u| u.lead == 0) {
            visit_unit(unit, n, q, |pt| {
                if pt.iter().all(|&x| x != 0) && compiled.eval(pt) == 0 {
                    zeros.push(pt.to_vec());
                }
            });
        }
        Ok(zeros)
    }

    /// Checks that coordinate inversion is a bijection from the zeros of
    /// `Ψ_Γ` off the coordinate hyperplanes to those of `Ψ` of the dual.
    pub fn cremona_point_check(&self, r: &RotationSystem, q: u64) -> Result<CremonaReport> {
        let dual = r.dual()?;
        let primal_poly = psi(r.graph())?;
        let dual_poly = psi(dual.graph())?;
        let primal = self.off_sigma_zeros(&primal_poly, q)?;
        let dual_zeros: BTreeSet<Vec<u64>> = self.off_sigma_zeros(&dual_poly, q)?.into_iter().collect();

        let inverse = inverse_table(q);
        let images: Vec<Vec<u64>> = primal.iter().map(|p| cremona_map(p, &inverse, q)).collect();
        let image_set: BTreeSet<Vec<u64>> = images.iter().cloned().collect();
        let injective = image_set.len() == primal.len();
        let image_matches = image_set == dual_zeros;
        let involution = primal
            .iter()
            .zip(&images)
            .all(|(p, img)| &cremona_map(img, &inverse, q) == p);
        Ok(CremonaReport {
            q,
            primal_off_sigma: primal.len() as u64,
            dual_off_sigma: dual_zeros.len() as u64,
            injective,
            image_matches,
            involution,
            pass: injective && image_matches && involution,
        })
    }
}

/// `inverse[x] = x^{-1} mod q` for `x != 0`.
pub fn inverse_table(q: u64) -> Vec<u64> {
    let mut inv = vec![0u64; q as usize];
    for x in 1..q {
        inv[x as usize] = mod_pow(x, q - 2, q);
    }
    inv
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// `(t_1 : ⋯ : t_n) ↦ (1/t_1 : ⋯ : 1/t_n)`, renormalized to a leading one.
/// Defined only for points with every coordinate nonzero.
pub fn cremona_map(point: &[u64], inverse: &[u64], q: u64) -> Vec<u64> {
    let inv: Vec<u64> = point.iter().map(|&x| inverse[x as usize]).collect();
    let scale = inverse[inv[0] as usize];
    inv.iter().map(|&x| x * scale % q).collect()
}

pub fn count_zeros(p: &SubsetPoly, q: u64) -> Result<StrataCount> {
    PointCounter::default().count_zeros(p, q)
}

pub fn count_multi_vanishing(n: usize, k: usize, q: u64) -> Result<u64> {
    PointCounter::default().count_multi_vanishing(n, k, q)
}

pub fn verify_class(c: &ClassPoly, p: &SubsetPoly, q: u64) -> Result<VerifyReport> {
    PointCounter::default().verify_class(c, p, q)
}

pub fn cremona_point_check(r: &RotationSystem, q: u64) -> Result<CremonaReport> {
    PointCounter::default().cremona_point_check(r, q)
}

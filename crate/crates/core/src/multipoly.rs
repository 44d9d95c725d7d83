//! Multilinear integer polynomials in `t_1, ..., t_n`.
//!
//! Every monomial is squarefree, so a term is just an [`EdgeSubset`] with a
//! coefficient. The type stays closed under the operations it offers:
//! addition, variable-disjoint multiplication and the reciprocal transform
//! `(t_1 ... t_n) * p(1/t)`, which on multilinear polynomials complements
//! every monomial.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeSubset, MAX_EDGES};

/// Largest support handled by the exhaustive factor search.
pub const MAX_FACTOR_SEARCH_VARS: usize = 26;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubsetPoly {
    var_count: usize,
    terms: BTreeMap<EdgeSubset, i64>,
}

impl SubsetPoly {
    pub fn zero(var_count: usize) -> Self {
        assert!(var_count <= MAX_EDGES);
        SubsetPoly {
            var_count,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(var_count: usize, c: i64) -> Self {
        Self::monomial(var_count, EdgeSubset::EMPTY, c).expect("empty monomial is always valid")
    }

    pub fn one(var_count: usize) -> Self {
        Self::constant(var_count, 1)
    }

    /// The single variable `t_i`.
    pub fn variable(var_count: usize, i: u32) -> Result<Self> {
        Self::monomial(var_count, EdgeSubset::single(i), 1)
    }

    pub fn monomial(var_count: usize, vars: EdgeSubset, coeff: i64) -> Result<Self> {
        Self::from_terms(var_count, [(vars, coeff)])
    }

    /// Sums the given terms; repeated monomials are merged and zeros dropped.
    pub fn from_terms<I>(var_count: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (EdgeSubset, i64)>,
    {
        if var_count > MAX_EDGES {
            return Err(Error::InvalidPolynomial(format!(
                "{var_count} variables exceeds {MAX_EDGES}"
            )));
        }
        let universe = EdgeSubset::full(var_count);
        let mut p = SubsetPoly::zero(var_count);
        for (vars, c) in terms {
            if !vars.is_subset(universe) {
                return Err(Error::InvalidPolynomial(format!(
                    "monomial {vars} uses variables beyond t{var_count}"
                )));
            }
            p.add_term(vars, c)?;
        }
        Ok(p)
    }

    fn add_term(&mut self, vars: EdgeSubset, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let entry = self.terms.entry(vars).or_insert(0);
        *entry = entry.checked_add(c).ok_or(Error::Overflow("polynomial addition"))?;
        if *entry == 0 {
            self.terms.remove(&vars);
        }
        Ok(())
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    /// Terms in ascending bitmask order.
    pub fn terms(&self) -> impl Iterator<Item = (EdgeSubset, i64)> + '_ {
        self.terms.iter().map(|(&s, &c)| (s, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, vars: EdgeSubset) -> i64 {
        self.terms.get(&vars).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for nonzero constants and for zero.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|s| s.is_empty())
    }

    /// Variables occurring in some term.
    pub fn support(&self) -> EdgeSubset {
        self.terms.keys().fold(EdgeSubset::EMPTY, |acc, &s| acc.union(s))
    }

    pub fn add(&self, other: &SubsetPoly) -> Result<SubsetPoly> {
        self.check_same_vars(other)?;
        let mut out = self.clone();
        for (s, c) in other.terms() {
            out.add_term(s, c)?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Result<SubsetPoly> {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> Result<SubsetPoly> {
        let mut out = SubsetPoly::zero(self.var_count);
        for (s, c) in self.terms() {
            out.add_term(s, c.checked_mul(k).ok_or(Error::Overflow("polynomial scaling"))?)?;
        }
        Ok(out)
    }

    /// Product of two polynomials whose supports do not meet.
    pub fn mul_disjoint(&self, other: &SubsetPoly) -> Result<SubsetPoly> {
        self.check_same_vars(other)?;
        if !self.support().is_disjoint(other.support()) {
            return Err(Error::NotVariableDisjoint);
        }
        let mut out = SubsetPoly::zero(self.var_count);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let c = ca.checked_mul(cb).ok_or(Error::Overflow("polynomial product"))?;
                out.add_term(a.union(b), c)?;
            }
        }
        Ok(out)
    }

    /// `p(point) mod q`, with `point[i]` the value of `t_{i+1}`.
    pub fn evaluate_mod(&self, point: &[u64], q: u64) -> Result<u64> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if point.len() != self.var_count {
            return Err(Error::PointLength {
                expected: self.var_count,
                got: point.len(),
            });
        }
        let reduced: Vec<u64> = point.iter().map(|&x| x % q).collect();
        Ok(self.evaluate_reduced(&reduced, q))
    }

    /// Evaluation at already-reduced residues; `q` is trusted to be prime.
    pub(crate) fn evaluate_reduced(&self, point: &[u64], q: u64) -> u64 {
        let q128 = q as u128;
        let mut acc = 0u128;
        for (s, c) in self.terms() {
            let mut term = c.rem_euclid(q as i64) as u128;
            for v in s.iter() {
                term = term * point[v as usize - 1] as u128 % q128;
                if term == 0 {
                    break;
                }
            }
            acc = (acc + term) % q128;
        }
        acc as u64
    }

    /// `(t_1 ... t_n) * p(1/t_1, ..., 1/t_n)`: each monomial is replaced by its
    /// complement in `{1, ..., n}`.
    pub fn reciprocal_transform(&self) -> SubsetPoly {
        SubsetPoly {
            var_count: self.var_count,
            terms: self
                .terms()
                .map(|(s, c)| (s.complement(self.var_count), c))
                .collect(),
        }
    }

    pub fn degree(&self) -> Result<usize> {
        self.terms
            .keys()
            .map(|s| s.len())
            .max()
            .ok_or_else(|| Error::InvalidPolynomial("degree of the zero polynomial".into()))
    }

    /// All terms share one degree. The zero polynomial counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|s| s.len());
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Searches for `p = f * g` with `f`, `g` nonconstant and supported on
    /// disjoint sets of variables. Bipartitions of the support are scanned in
    /// a fixed order with the smallest variable always in the first part, so
    /// the answer is deterministic.
    pub fn find_disjoint_factorization(&self) -> Result<Option<(SubsetPoly, SubsetPoly)>> {
        if self.is_zero() {
            return Err(Error::InvalidPolynomial("cannot factor the zero polynomial".into()));
        }
        if self.is_constant() {
            return Err(Error::InvalidPolynomial("cannot factor a constant".into()));
        }
        let vars = self.support().to_vec();
        if vars.len() > MAX_FACTOR_SEARCH_VARS {
            return Err(Error::DomainTooLarge(format!(
                "factor search over {} variables (limit {MAX_FACTOR_SEARCH_VARS})",
                vars.len()
            )));
        }
        let (first, rest) = vars.split_first().expect("nonconstant polynomial has support");
        let full = self.support();
        // the last mask puts every variable in the first part
        let masks = (1u64 << rest.len()) - 1;
        for mask in 0..masks {
            let mut part = EdgeSubset::single(*first);
            for (i, &v) in rest.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    part.insert(v);
                }
            }
            if let Some(pair) = self.split_along(part, full.difference(part))? {
                return Ok(Some(pair));
            }
        }
        Ok(None)
    }

    /// Tests whether the coefficient matrix indexed by (monomial restricted to
    /// `left`, monomial restricted to `right`) has rank one, and if so returns
    /// the integer factors with the left one primitive.
    pub(crate) fn split_along(
        &self,
        left: EdgeSubset,
        right: EdgeSubset,
    ) -> Result<Option<(SubsetPoly, SubsetPoly)>> {
        let mut rows: Vec<EdgeSubset> = Vec::new();
        let mut cols: Vec<EdgeSubset> = Vec::new();
        let mut row_index = HashMap::new();
        let mut col_index = HashMap::new();
        for &s in self.terms.keys() {
            let r = s.intersection(left);
            let c = s.intersection(right);
            row_index.entry(r).or_insert_with(|| {
                rows.push(r);
                rows.len() - 1
            });
            col_index.entry(c).or_insert_with(|| {
                cols.push(c);
                cols.len() - 1
            });
        }
        if rows.len() * cols.len() != self.terms.len() {
            return Ok(None);
        }
        let (&pivot_set, &pivot) = self.terms.iter().next().expect("nonzero");
        let pr = pivot_set.intersection(left);
        let pc = pivot_set.intersection(right);
        let row_coeffs: Vec<i64> = rows.iter().map(|&r| self.coefficient(r.union(pc))).collect();
        let col_coeffs: Vec<i64> = cols.iter().map(|&c| self.coefficient(pr.union(c))).collect();
        for (&s, &c) in &self.terms {
            let r = row_index[&s.intersection(left)];
            let k = col_index[&s.intersection(right)];
            let lhs = c as i128 * pivot as i128;
            let rhs = row_coeffs[r] as i128 * col_coeffs[k] as i128;
            if lhs != rhs {
                return Ok(None);
            }
        }
        let content = row_coeffs.iter().fold(0i64, |g, &x| gcd(g, x));
        let sign = if row_coeffs[0] < 0 { -1 } else { 1 };
        let left_coeffs: Vec<i64> = row_coeffs.iter().map(|&x| sign * x / content).collect();
        let lead = left_coeffs[row_index[&pr]] as i128;
        let mut right_coeffs = Vec::with_capacity(cols.len());
        for &x in &col_coeffs {
            if x as i128 % lead != 0 {
                return Ok(None);
            }
            right_coeffs.push(i64::try_from(x as i128 / lead).map_err(|_| Error::Overflow("factor"))?);
        }
        let f = SubsetPoly::from_terms(self.var_count, rows.into_iter().zip(left_coeffs))?;
        let g = SubsetPoly::from_terms(self.var_count, cols.into_iter().zip(right_coeffs))?;
        debug_assert_eq!(f.mul_disjoint(&g).as_ref(), Ok(self));
        Ok(Some((f, g)))
    }

    fn check_same_vars(&self, other: &SubsetPoly) -> Result<()> {
        if self.var_count != other.var_count {
            return Err(Error::VarCountMismatch(self.var_count, other.var_count));
        }
        Ok(())
    }

    /// JSON term-list form: `{"n": .., "terms": [{"vars": [..], "coeff": ..}]}`.
    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            n: self.var_count,
            terms: self
                .terms()
                .map(|(s, c)| TermJson {
                    vars: s.to_vec(),
                    coeff: c,
                })
                .collect(),
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i64
}

/// Deterministic trial-division primality test.
pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    if q < 4 {
        return true;
    }
    if q.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Canonical text: terms by ascending bitmask, variables as `t3`, joined by
/// `" + "` (or `" - "` before a negative coefficient).
impl fmt::Display for SubsetPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (s, c)) in self.terms().enumerate() {
            let magnitude = c.unsigned_abs();
            match (i, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let vars: Vec<String> = s.iter().map(|v| format!("t{v}")).collect();
            if vars.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude == 1 {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{magnitude}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub vars: Vec<u32>,
    pub coeff: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

impl TryFrom<PolyJson> for SubsetPoly {
    type Error = Error;

    fn try_from(json: PolyJson) -> Result<Self> {
        let mut terms = Vec::with_capacity(json.terms.len());
        for t in json.terms {
            if let Some(&bad) = t.vars.iter().find(|&&v| v == 0 || v as usize > json.n) {
                return Err(Error::InvalidPolynomial(format!("variable t{bad} out of range")));
            }
            let vars = EdgeSubset::from_edges(t.vars.iter().copied());
            if vars.len() != t.vars.len() {
                return Err(Error::InvalidPolynomial("repeated variable in a term".into()));
            }
            terms.push((vars, t.coeff));
        }
        SubsetPoly::from_terms(json.n, terms)
    }
}

impl Serialize for SubsetPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SubsetPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        SubsetPoly::try_from(PolyJson::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(n: usize, terms: &[(&[u32], i64)]) -> SubsetPoly {
        SubsetPoly::from_terms(
            n,
            terms.iter().map(|(vs, c)| (vs.iter().copied().collect(), *c)),
        )
        .unwrap()
    }

    fn t(n: usize, i: u32) -> SubsetPoly {
        SubsetPoly::variable(n, i).unwrap()
    }

    #[test]
    fn addition() {
        assert_eq!(t(2, 1).add(&t(2, 2)).unwrap().to_string(), "t1 + t2");
        let cancel = t(1, 1).add(&t(1, 1).neg().unwrap()).unwrap();
        assert!(cancel.is_zero());
        assert_eq!(cancel.to_string(), "0");
        let a = poly(3, &[(&[1, 2], 1), (&[2, 3], 1)]);
        let b = poly(3, &[(&[1, 2], 1)]);
        assert_eq!(a.add(&b).unwrap(), poly(3, &[(&[1, 2], 2), (&[2, 3], 1)]));
        assert_eq!(t(2, 1).add(&t(3, 1)), Err(Error::VarCountMismatch(2, 3)));
    }

    #[test]
    fn disjoint_products() {
        let a = poly(4, &[(&[1], 1), (&[2], 1)]);
        let b = poly(4, &[(&[3], 1), (&[4], 1)]);
        assert_eq!(
            a.mul_disjoint(&b).unwrap().to_string(),
            "t1*t3 + t2*t3 + t1*t4 + t2*t4"
        );
        assert_eq!(SubsetPoly::one(4).mul_disjoint(&a).unwrap(), a);
        let c = poly(5, &[(&[1], 1), (&[2], 1), (&[3], 1)]);
        let d = poly(5, &[(&[4, 5], 1)]);
        assert_eq!(
            c.mul_disjoint(&d).unwrap(),
            poly(5, &[(&[1, 4, 5], 1), (&[2, 4, 5], 1), (&[3, 4, 5], 1)])
        );
        assert_eq!(a.mul_disjoint(&a), Err(Error::NotVariableDisjoint));
    }

    #[test]
    fn modular_evaluation() {
        let e2 = poly(3, &[(&[1, 2], 1), (&[1, 3], 1), (&[2, 3], 1)]);
        assert_eq!(e2.evaluate_mod(&[1, 1, 1], 2).unwrap(), 1);
        let e1 = poly(3, &[(&[1], 1), (&[2], 1), (&[3], 1)]);
        assert_eq!(e1.evaluate_mod(&[1, 1, 0], 2).unwrap(), 0);
        assert_eq!(e1.evaluate_mod(&[0, 0, 0], 7).unwrap(), 0);
        assert_eq!(e1.evaluate_mod(&[1, 1, 1], 4), Err(Error::NotPrime(4)));
        assert!(matches!(e1.evaluate_mod(&[1, 1], 5), Err(Error::PointLength { .. })));
        let neg = poly(1, &[(&[1], -3)]);
        assert_eq!(neg.evaluate_mod(&[1], 5).unwrap(), 2);
    }

    #[test]
    fn reciprocal_examples() {
        let e2 = poly(3, &[(&[1, 2], 1), (&[1, 3], 1), (&[2, 3], 1)]);
        assert_eq!(e2.reciprocal_transform(), poly(3, &[(&[1], 1), (&[2], 1), (&[3], 1)]));
        assert_eq!(SubsetPoly::one(3).reciprocal_transform(), poly(3, &[(&[1, 2, 3], 1)]));
        assert_eq!(e2.reciprocal_transform().reciprocal_transform(), e2);
    }

    #[test]
    fn degrees() {
        let p = poly(3, &[(&[1, 2], 1), (&[2, 3], 1)]);
        assert_eq!(p.degree().unwrap(), 2);
        assert!(p.is_homogeneous());
        let q = poly(1, &[(&[], 1), (&[1], 1)]);
        assert!(!q.is_homogeneous());
        assert!(SubsetPoly::zero(2).degree().is_err());
    }

    #[test]
    fn factor_search_examples() {
        let m = poly(2, &[(&[1, 2], 1)]);
        assert_eq!(m.find_disjoint_factorization().unwrap(), Some((t(2, 1), t(2, 2))));
        let e1 = poly(3, &[(&[1], 1), (&[2], 1), (&[3], 1)]);
        assert_eq!(e1.find_disjoint_factorization().unwrap(), None);
        assert!(SubsetPoly::one(2).find_disjoint_factorization().is_err());
        assert!(SubsetPoly::zero(2).find_disjoint_factorization().is_err());
    }

    #[test]
    fn factor_search_handles_coefficients() {
        // (2 t1 + 4 t2)(3 t3 - t4) = 6 t1t3 - 2 t1t4 + 12 t2t3 - 4 t2t4
        let p = poly(4, &[(&[1, 3], 6), (&[1, 4], -2), (&[2, 3], 12), (&[2, 4], -4)]);
        let (f, g) = p.find_disjoint_factorization().unwrap().unwrap();
        assert_eq!(f, poly(4, &[(&[1], 1), (&[2], 2)]));
        assert_eq!(g, poly(4, &[(&[3], 6), (&[4], -2)]));
        assert_eq!(f.mul_disjoint(&g).unwrap(), p);
    }

    #[test]
    fn text_rendering() {
        let p = poly(3, &[(&[], -1), (&[1, 3], 2), (&[2], -1)]);
        assert_eq!(p.to_string(), "-1 - t2 + 2*t1*t3");
        assert_eq!(SubsetPoly::one(3).to_string(), "1");
    }

    #[test]
    fn json_form() {
        let p = poly(3, &[(&[1, 2], 1), (&[3], -2)]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"n":3,"terms":[{"vars":[1,2],"coeff":1},{"vars":[3],"coeff":-2}]}"#);
        let back: SubsetPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<SubsetPoly>(r#"{"n":2,"terms":[{"vars":[3],"coeff":1}]}"#)
            .is_err());
    }

    #[test]
    fn overflow_is_reported() {
        let big = SubsetPoly::constant(1, i64::MAX);
        assert_eq!(big.add(&SubsetPoly::one(1)), Err(Error::Overflow("polynomial addition")));
        let x = poly(2, &[(&[1], i64::MAX)]);
        let y = poly(2, &[(&[2], 2)]);
        assert_eq!(x.mul_disjoint(&y), Err(Error::Overflow("polynomial product")));
    }

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&q| is_prime(q)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    fn arb_poly(n: usize) -> impl Strategy<Value = SubsetPoly> {
        prop::collection::vec((0u64..(1 << n), -5i64..=5), 0..8).prop_map(move |ts| {
            SubsetPoly::from_terms(n, ts.into_iter().map(|(b, c)| (EdgeSubset::from_bits(b), c)))
                .unwrap()
        })
    }

    /// Polynomial on variables `1..=k` and one on `k+1..=n`.
    fn arb_disjoint_pair() -> impl Strategy<Value = (SubsetPoly, SubsetPoly)> {
        (1usize..5, 1usize..5).prop_flat_map(|(a, b)| {
            let n = a + b;
            (arb_poly(a), arb_poly(b)).prop_map(move |(p, q)| {
                let lift = |p: &SubsetPoly, shift: u32| {
                    SubsetPoly::from_terms(
                        n,
                        p.terms().map(|(s, c)| (s.iter().map(|v| v + shift).collect(), c)),
                    )
                    .unwrap()
                };
                (lift(&p, 0), lift(&q, a as u32))
            })
        })
    }

    proptest! {
        #[test]
        fn reciprocal_is_an_involution_that_complements_degree(p in arb_poly(6)) {
            let r = p.reciprocal_transform();
            prop_assert_eq!(r.reciprocal_transform(), p.clone());
            if !p.is_zero() && p.is_homogeneous() {
                prop_assert!(r.is_homogeneous());
                prop_assert_eq!(r.degree().unwrap(), 6 - p.degree().unwrap());
            }
        }

        #[test]
        fn product_evaluates_to_product(
            (f, g) in arb_disjoint_pair(),
            seed in prop::collection::vec(0u64..1000, 8),
            qi in 0usize..6,
        ) {
            let q = [2u64, 3, 5, 7, 11, 13][qi];
            let point: Vec<u64> = seed.iter().take(f.var_count()).copied().collect();
            let fg = f.mul_disjoint(&g).unwrap();
            let lhs = fg.evaluate_mod(&point, q).unwrap();
            let rhs = f.evaluate_mod(&point, q).unwrap() * g.evaluate_mod(&point, q).unwrap() % q;
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn found_factors_multiply_back((f, g) in arb_disjoint_pair()) {
            let p = f.mul_disjoint(&g).unwrap();
            if !p.is_zero() && !p.is_constant() {
                if let Some((a, b)) = p.find_disjoint_factorization().unwrap() {
                    prop_assert!(!a.is_constant() && !b.is_constant());
                    prop_assert!(a.support().is_disjoint(b.support()));
                    prop_assert_eq!(a.mul_disjoint(&b).unwrap(), p);
                }
            }
        }

        #[test]
        fn json_round_trip(p in arb_poly(5)) {
            let back: SubsetPoly = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
            prop_assert_eq!(back, p);
        }
    }
}

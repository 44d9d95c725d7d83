//! Grothendieck classes written as integer polynomials in the torus class
//! `T = L - 1`, where `L` is the class of the affine line.
//!
//! Counting points over `F_q` is a ring homomorphism out of the Grothendieck
//! ring sending `T` to `q - 1`, so [`evaluate_at_q`] turns every class below
//! into a prediction that the [`count`](crate::count) module can check.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Family;

/// Exact integer polynomial in `T`; `coeffs[i]` multiplies `T^i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ClassPoly {
    coeffs: Vec<BigInt>,
}

impl ClassPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ClassPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        ClassPoly { coeffs: Vec::new() }
    }

    /// The class of a point.
    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_i64s(&[c])
    }

    /// `T`, the class of the multiplicative group.
    pub fn torus() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// `L = T + 1`, the class of the affine line.
    pub fn lefschetz() -> Self {
        Self::from_i64s(&[1, 1])
    }

    /// `c * T^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::from(c);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero class.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(ClassPoly::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Value at `T = x` (Horner).
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Exact quotient `self / divisor`; any remainder is an error.
    pub fn div_exact(&self, divisor: &ClassPoly) -> Result<ClassPoly> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::InexactDivision("division by the zero class".into()));
        };
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if self.is_zero() {
                Ok(ClassPoly::zero())
            } else {
                Err(Error::InexactDivision(format!("{self} by {divisor}")))
            };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!("{self} by {divisor}")));
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * d;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision(format!("{self} by {divisor}")));
        }
        Ok(ClassPoly::new(quot))
    }

    /// Rewrites the class in the basis of powers of `L = T + 1`.
    pub fn to_lefschetz_basis(&self) -> Vec<BigInt> {
        let t_in_l = ClassPoly::from_i64s(&[-1, 1]);
        let mut acc = ClassPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &t_in_l) + &ClassPoly::new(vec![c.clone()]);
        }
        acc.coeffs
    }

    /// Rendering in `L`, e.g. `L^2 + L + 1`.
    pub fn lefschetz_string(&self) -> String {
        render(&self.to_lefschetz_basis(), "L")
    }
}

fn render(coeffs: &[BigInt], var: &str) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mag = c.abs();
        if k == 0 || !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        match k {
            0 => {}
            1 => out.push_str(var),
            _ => out.push_str(&format!("{var}^{k}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `T^2 + 3T + 3` style; the zero class prints as `0`.
impl fmt::Display for ClassPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.coeffs, "T"))
    }
}

impl Add for &ClassPoly {
    type Output = ClassPoly;

    fn add(self, rhs: &ClassPoly) -> ClassPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &ClassPoly, i: usize| p.coeffs.get(i).cloned().unwrap_or_default();
        ClassPoly::new((0..len).map(|i| get(self, i) + get(rhs, i)).collect())
    }
}

impl Neg for &ClassPoly {
    type Output = ClassPoly;

    fn neg(self) -> ClassPoly {
        ClassPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &ClassPoly {
    type Output = ClassPoly;

    fn sub(self, rhs: &ClassPoly) -> ClassPoly {
        self + &(-rhs)
    }
}

impl Mul for &ClassPoly {
    type Output = ClassPoly;

    fn mul(self, rhs: &ClassPoly) -> ClassPoly {
        if self.is_zero() || rhs.is_zero() {
            return ClassPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ClassPoly::new(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for ClassPoly {
            type Output = ClassPoly;
            fn $m(self, rhs: ClassPoly) -> ClassPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Small(i64),
    Big(String),
}

/// Serialized as the ascending coefficient array, e.g. `[3, 3, 1]`.
/// Coefficients beyond 64 bits are written as decimal strings.
impl Serialize for ClassPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let repr: Vec<CoeffRepr> = self
            .coeffs
            .iter()
            .map(|c| match c.to_i64() {
                Some(x) => CoeffRepr::Small(x),
                None => CoeffRepr::Big(c.to_string()),
            })
            .collect();
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ClassPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = Vec::<CoeffRepr>::deserialize(d)?;
        let coeffs = repr
            .into_iter()
            .map(|c| match c {
                CoeffRepr::Small(x) => Ok(BigInt::from(x)),
                CoeffRepr::Big(s) => s.parse::<BigInt>().map_err(serde::de::Error::custom),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(ClassPoly::new(coeffs))
    }
}

#[cfg(test)]
fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn sign_pow(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Input(what.to_string()))
    }
}

/// `[A^n] = L^n = (T + 1)^n`.
pub fn affine_class(n: usize) -> ClassPoly {
    ClassPoly::lefschetz().pow(n as u32)
}

/// `[P^n] = 1 + L + ⋯ + L^n`.
pub fn projective_class(n: usize) -> ClassPoly {
    (0..=n).fold(ClassPoly::zero(), |acc, k| &acc + &affine_class(k))
}

/// Class of the union `Σ_n` of the coordinate hyperplanes in `P^{n-1}`:
/// `((1 + T)^n - 1 - T^n) / T`.
pub fn sigma_class(n: usize) -> Result<ClassPoly> {
    require(n >= 1, "sigma class needs n >= 1")?;
    let numerator = &(&affine_class(n) - &ClassPoly::one()) - &ClassPoly::monomial(1, n);
    numerator.div_exact(&ClassPoly::torus())
}

/// The hyperplane-section operator `g ↦ (g(T) - g(-1)) / (T + 1)`.
pub fn hyperplane_section(g: &ClassPoly) -> ClassPoly {
    let at_minus_one = g.eval(&BigInt::from(-1));
    let shifted = g - &ClassPoly::new(vec![at_minus_one]);
    shifted
        .div_exact(&ClassPoly::lefschetz())
        .expect("T = -1 is a root after subtracting g(-1)")
}

/// Class of `L ∩ Σ_n`, where `L` is the hyperplane `t_1 + ⋯ + t_n = 0`,
/// obtained as the hyperplane section of `[Σ_n]` and cross-checked against
/// `((1+T)^{n-1} - 1)/T - (T^{n-1} - (-1)^{n-1})/(T + 1)`.
pub fn line_sigma_class(n: usize) -> Result<ClassPoly> {
    require(n >= 2, "line/sigma class needs n >= 2")?;
    let via_section = hyperplane_section(&sigma_class(n)?);
    let first = (&affine_class(n - 1) - &ClassPoly::one()).div_exact(&ClassPoly::torus())?;
    let second = alternating_quotient(n - 1)?;
    let two_term = &first - &second;
    if via_section != two_term {
        return Err(Error::Defect(format!(
            "H([Σ_{n}]) = {via_section} but the two-term expression gives {two_term}"
        )));
    }
    Ok(via_section)
}

/// `(T^k - (-1)^k) / (T + 1)`.
fn alternating_quotient(k: usize) -> Result<ClassPoly> {
    (&ClassPoly::monomial(1, k) - &ClassPoly::constant(sign_pow(k))).div_exact(&ClassPoly::lefschetz())
}

/// Class of the part of the banana hypersurface off the coordinate
/// hyperplanes: `[L] - [L ∩ Σ_n]`, which must equal `(T^{n-1} - (-1)^{n-1}) / (T + 1)`.
pub fn banana_off_sigma_class(n: usize) -> Result<ClassPoly> {
    require(n >= 2, "banana class needs n >= 2")?;
    let off = &projective_class(n - 2) - &line_sigma_class(n)?;
    let expected = alternating_quotient(n - 1)?;
    if off != expected {
        return Err(Error::Defect(format!(
            "[L] - [L ∩ Σ_{n}] = {off}, expected {expected}"
        )));
    }
    Ok(off)
}

/// Class of the locus `S_n` of points with at least two vanishing
/// coordinates: `[Σ_n] - n T^{n-2}`.
pub fn sn_class(n: usize) -> Result<ClassPoly> {
    require(n >= 2, "S_n class needs n >= 2")?;
    Ok(&sigma_class(n)? - &ClassPoly::monomial(n as i64, n - 2))
}

/// Class of the graph hypersurface of a family member.
///
/// The banana class is assembled as `[X ∖ Σ_n] + [S_n]`, its off-hyperplane
/// part plus its intersection with the coordinate hyperplanes.
pub fn family_class(kind: Family, n: usize) -> Result<ClassPoly> {
    kind.check_size(n)?;
    match kind {
        Family::Star => Ok(ClassPoly::zero()),
        Family::Flower => sigma_class(n),
        Family::Polygon => Ok(projective_class(n - 2)),
        Family::Banana => Ok(&banana_off_sigma_class(n)? + &sn_class(n)?),
    }
}

/// The point-count specialization `T ↦ q - 1`.
pub fn evaluate_at_q(c: &ClassPoly, q: u64) -> Result<BigInt> {
    require(q >= 2, "q must be at least 2")?;
    Ok(c.eval(&BigInt::from(q - 1)))
}

/// The alternative closed form
/// `((T+1)^n - 1)/T - (T^n - (-1)^n)/T - n T^{n-2}` for the banana class,
/// as a polynomial. Its second quotient is not exact for odd `n`, so this
/// fails there; see [`banana_alternative_value`] for a pointwise reading.
pub fn banana_alternative_class(n: usize) -> Result<ClassPoly> {
    Family::Banana.check_size(n)?;
    let first = (&affine_class(n) - &ClassPoly::one()).div_exact(&ClassPoly::torus())?;
    let second = (&ClassPoly::monomial(1, n) - &ClassPoly::constant(sign_pow(n)))
        .div_exact(&ClassPoly::torus())?;
    Ok(&(&first - &second) - &ClassPoly::monomial(n as i64, n - 2))
}

/// The alternative banana expression evaluated as a rational number at
/// `T = q - 1`. It disagrees with the point count (e.g. `2` instead of `3`
/// at `n = 3, q = 2`), which is why [`family_class`] does not use it.
pub fn banana_alternative_value(n: usize, q: u64) -> Result<BigRational> {
    Family::Banana.check_size(n)?;
    require(q >= 2, "q must be at least 2")?;
    let t = BigInt::from(q - 1);
    let tr = BigRational::from_integer(t.clone());
    let pow = |base: &BigInt, k: usize| num_traits::pow(base.clone(), k);
    let first = BigRational::new(pow(&(&t + 1), n) - 1, t.clone());
    let second = BigRational::new(pow(&t, n) - sign_pow(n), t.clone());
    let third = BigRational::from_integer(BigInt::from(n)) * num_traits::pow(tr, n - 2);
    Ok(first - second - third)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(coeffs: &[i64]) -> ClassPoly {
        ClassPoly::from_i64s(coeffs)
    }

    #[test]
    fn affine_and_projective() {
        assert_eq!(affine_class(0), c(&[1]));
        assert_eq!(affine_class(1), c(&[1, 1]));
        assert_eq!(affine_class(2), c(&[1, 2, 1]));
        assert_eq!(projective_class(0), c(&[1]));
        assert_eq!(projective_class(1), c(&[2, 1]));
        assert_eq!(projective_class(2), c(&[3, 3, 1]));
        assert_eq!(projective_class(2).to_string(), "T^2 + 3T + 3");
        assert_eq!(projective_class(2).lefschetz_string(), "L^2 + L + 1");
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_class(2).unwrap(), c(&[2]));
        assert_eq!(sigma_class(3).unwrap(), c(&[3, 3]));
        assert_eq!(sigma_class(1).unwrap(), ClassPoly::zero());
        assert!(sigma_class(0).is_err());
    }

    #[test]
    fn sigma_matches_binomial_sum_and_torus_complement() {
        for n in 1..=12 {
            let sum = (1..n).fold(ClassPoly::zero(), |acc, i| {
                &acc + &ClassPoly::new(
                    (0..n - 1 - i)
                        .map(|_| BigInt::zero())
                        .chain(std::iter::once(binomial(n, i)))
                        .collect(),
                )
            });
            let sigma = sigma_class(n).unwrap();
            assert_eq!(sigma, sum, "n = {n}");
            let complement = &projective_class(n - 1) - &ClassPoly::monomial(1, n - 1);
            assert_eq!(sigma, complement, "n = {n}");
        }
    }

    #[test]
    fn hyperplane_section_examples() {
        for n in 1..=10 {
            assert_eq!(hyperplane_section(&projective_class(n)), projective_class(n - 1));
        }
        assert_eq!(hyperplane_section(&c(&[7])), ClassPoly::zero());
        assert_eq!(hyperplane_section(&sigma_class(3).unwrap()), c(&[3]));
    }

    #[test]
    fn line_sigma_examples() {
        assert_eq!(line_sigma_class(3).unwrap(), c(&[3]));
        assert_eq!(line_sigma_class(2).unwrap(), ClassPoly::zero());
        // [Σ_4] = 4T^2 + 6T + 4; g(-1) = 2; (4T^2 + 6T + 2)/(T + 1) = 4T + 2
        assert_eq!(line_sigma_class(4).unwrap(), c(&[2, 4]));
        for n in 3..=8 {
            line_sigma_class(n).unwrap();
        }
    }

    #[test]
    fn off_sigma_examples() {
        assert_eq!(banana_off_sigma_class(3).unwrap(), c(&[-1, 1]));
        assert_eq!(banana_off_sigma_class(2).unwrap(), c(&[1]));
        assert_eq!(banana_off_sigma_class(4).unwrap(), c(&[1, -1, 1]));
        assert_eq!(banana_off_sigma_class(3).unwrap().to_string(), "T - 1");
        for n in 2..=12 {
            let off = banana_off_sigma_class(n).unwrap();
            let lhs = &off * &ClassPoly::lefschetz();
            let rhs = &ClassPoly::monomial(1, n - 1) - &ClassPoly::constant(sign_pow(n - 1));
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn sn_examples() {
        assert_eq!(sn_class(3).unwrap(), c(&[3]));
        assert_eq!(sn_class(2).unwrap(), ClassPoly::zero());
        assert_eq!(sn_class(4).unwrap(), c(&[4, 6]));
    }

    #[test]
    fn family_examples() {
        assert_eq!(family_class(Family::Banana, 3).unwrap().to_string(), "T + 2");
        assert_eq!(family_class(Family::Polygon, 3).unwrap(), c(&[2, 1]));
        assert_eq!(family_class(Family::Star, 7).unwrap(), ClassPoly::zero());
        assert_eq!(family_class(Family::Flower, 3).unwrap().to_string(), "3T + 3");
        assert!(family_class(Family::Banana, 1).is_err());
    }

    #[test]
    fn point_count_specialization() {
        assert_eq!(evaluate_at_q(&projective_class(2), 2).unwrap(), BigInt::from(7));
        assert_eq!(evaluate_at_q(&ClassPoly::zero(), 5).unwrap(), BigInt::zero());
        let banana3 = family_class(Family::Banana, 3).unwrap();
        assert_eq!(evaluate_at_q(&banana3, 3).unwrap(), BigInt::from(4));
        assert!(evaluate_at_q(&banana3, 1).is_err());
    }

    #[test]
    fn alternative_banana_form() {
        assert!(matches!(banana_alternative_class(3), Err(Error::InexactDivision(_))));
        assert_eq!(
            banana_alternative_value(3, 2).unwrap(),
            BigRational::from_integer(BigInt::from(2))
        );
    }

    #[test]
    fn exact_division() {
        let p = c(&[-1, 0, 1]);
        assert_eq!(p.div_exact(&c(&[1, 1])).unwrap(), c(&[-1, 1]));
        assert!(c(&[1, 0, 1]).div_exact(&c(&[1, 1])).is_err());
        assert!(p.div_exact(&ClassPoly::zero()).is_err());
        assert_eq!(c(&[2, 4]).div_exact(&c(&[1, 2])).unwrap(), c(&[2]));
    }

    #[test]
    fn rendering() {
        assert_eq!(c(&[1, -1, 1]).to_string(), "T^2 - T + 1");
        assert_eq!(c(&[0, -2]).to_string(), "-2T");
        assert_eq!(ClassPoly::zero().to_string(), "0");
        assert_eq!(serde_json::to_string(&c(&[3, 3, 1])).unwrap(), "[3,3,1]");
    }

    fn arb_class() -> impl Strategy<Value = ClassPoly> {
        prop::collection::vec(-50i64..=50, 0..=9).prop_map(|v| ClassPoly::from_i64s(&v))
    }

    proptest! {
        #[test]
        fn section_is_linear(g in arb_class(), h in arb_class(), a in -20i64..=20, b in -20i64..=20) {
            let (a, b) = (BigInt::from(a), BigInt::from(b));
            let lhs = hyperplane_section(&(&g.scale(&a) + &h.scale(&b)));
            let rhs = &hyperplane_section(&g).scale(&a) + &hyperplane_section(&h).scale(&b);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn lefschetz_basis_round_trips(g in arb_class()) {
            let back = g.to_lefschetz_basis().iter().enumerate().fold(ClassPoly::zero(), |acc, (k, c)| {
                &acc + &affine_class(k).scale(c)
            });
            prop_assert_eq!(back, g);
        }

        #[test]
        fn json_round_trip(g in arb_class()) {
            let back: ClassPoly = serde_json::from_str(&serde_json::to_string(&g).unwrap()).unwrap();
            prop_assert_eq!(back, g);
        }
    }
}

//! Exact arithmetic: Laurent polynomials in `q` over the integers, residues
//! modulo `e`, and q-characters (elements of the free `Z[q, q^-1]`-module
//! with basis the residue sequences of length `n`).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient ring for [`LaurentPoly`]. Blanket-implemented for anything
/// integer-like (`i64`, `i128`, `num_bigint::BigInt`, ...).
pub trait Coefficient:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Coefficient for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// A Laurent polynomial `sum_k c_k q^k`, stored sparsely by exponent.
///
/// No stored coefficient is ever zero, so structural equality is
/// mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly<C = i64> {
    terms: BTreeMap<i64, C>,
}

impl<C: Coefficient> Default for LaurentPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> LaurentPoly<C> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), 0)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(C::one(), 1)
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        Self::monomial(C::one(), k)
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: C, exponent: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `q^k` (zero when absent).
    pub fn coeff(&self, k: i64) -> C {
        self.terms.get(&k).cloned().unwrap_or_else(C::zero)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True iff the polynomial is `c q^0` for some (possibly zero) `c`.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|k| *k == 0)
    }

    pub fn add_term(&mut self, exponent: i64, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exponent) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(exponent, sum);
                }
            }
            None => {
                self.terms.insert(exponent, c);
            }
        }
    }

    /// The bar involution `f(q) -> f(q^-1)`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (-k, c.clone())).collect(),
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        self.terms
            .iter()
            .all(|(k, c)| self.terms.get(&-k).is_some_and(|d| d == c))
    }

    /// Specialisation `q = 1`.
    pub fn eval_at_one(&self) -> C {
        self.terms
            .values()
            .cloned()
            .fold(C::zero(), |acc, c| acc + c)
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }
}

impl<C: Coefficient> Add<&LaurentPoly<C>> for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coefficient> Add for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(mut self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        self += &rhs;
        self
    }
}

impl<C: Coefficient> AddAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn add_assign(&mut self, rhs: &LaurentPoly<C>) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c.clone());
        }
    }
}

impl<C: Coefficient> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }
}

impl<C: Coefficient> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        -&self
    }
}

impl<C: Coefficient> Sub<&LaurentPoly<C>> for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        self + &(-rhs)
    }
}

impl<C: Coefficient> Sub for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        &self - &rhs
    }
}

impl<C: Coefficient> Mul<&LaurentPoly<C>> for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, x.clone() * y.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Mul for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        &self * &rhs
    }
}

impl<C: Coefficient> std::iter::Sum for LaurentPoly<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl<C: Coefficient + fmt::Display + PartialOrd> fmt::Display for LaurentPoly<C> {
    /// Ascending exponents, e.g. `q^-1 + 2`, `-q + 3q^2`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (k, c)) in self.terms.iter().enumerate() {
            let negative = *c < C::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            if idx == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            let unit = abs.is_one();
            match (*k, unit) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{abs}q")?,
                (k, true) => write!(f, "q^{k}")?,
                (k, false) => write!(f, "{abs}q^{k}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coefficient + fmt::Display + PartialOrd> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// JSON form: an object mapping exponent strings to integer coefficients,
/// e.g. `{"-1": 1, "1": 1}`.
impl<C: Coefficient + Serialize> Serialize for LaurentPoly<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (k, c) in &self.terms {
            map.serialize_entry(&k.to_string(), c)?;
        }
        map.end()
    }
}

impl<'de, C: Coefficient + Deserialize<'de>> Deserialize<'de> for LaurentPoly<C> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw: BTreeMap<String, C> = BTreeMap::deserialize(deserializer)?;
        let mut out = LaurentPoly::zero();
        for (k, c) in raw {
            let exp: i64 = k
                .trim()
                .parse()
                .map_err(|_| de::Error::custom(format!("bad exponent key {k:?}")))?;
            out.add_term(exp, c);
        }
        Ok(out)
    }
}

/// An element of `I = Z/eZ`, kept in `[0, e)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue {
    value: usize,
    modulus: usize,
}

impl Residue {
    /// Reduces an arbitrary integer modulo `e`.
    pub fn new(value: i64, e: usize) -> Self {
        assert!(e >= 2, "residue modulus must be at least 2");
        Self {
            value: value.rem_euclid(e as i64) as usize,
            modulus: e,
        }
    }

    pub fn value(self) -> usize {
        self.value
    }

    pub fn modulus(self) -> usize {
        self.modulus
    }
}

impl Add<i64> for Residue {
    type Output = Residue;
    fn add(self, rhs: i64) -> Residue {
        Residue::new(self.value as i64 + rhs, self.modulus)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// A residue sequence `i = (i_1, ..., i_n)` in `I^n`.
///
/// Ordered lexicographically, which agrees with the order of the digit
/// strings for a fixed `e <= 10`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueSequence {
    modulus: usize,
    entries: Vec<usize>,
}

impl ResidueSequence {
    pub fn new(e: usize, entries: Vec<usize>) -> Result<Self> {
        crate::error::check_e(e)?;
        if let Some(bad) = entries.iter().find(|v| **v >= e) {
            return Err(Error::InvalidParameter(format!(
                "residue {bad} out of range for e = {e}"
            )));
        }
        Ok(Self {
            modulus: e,
            entries,
        })
    }

    pub(crate) fn from_raw(e: usize, entries: Vec<usize>) -> Self {
        debug_assert!(entries.iter().all(|v| *v < e));
        Self {
            modulus: e,
            entries,
        }
    }

    /// Parses the canonical string form: one digit per entry when `e <= 10`
    /// (`"01220101"`), otherwise entries separated by `.` (`"0.11.3"`).
    pub fn parse(e: usize, s: &str) -> Result<Self> {
        crate::error::check_e(e)?;
        let s = s.trim();
        let entries: Vec<usize> = if s.is_empty() {
            Vec::new()
        } else if s.contains('.') || s.contains(',') {
            s.split(['.', ','])
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad residue {t:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad residue digit {c:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        Self::new(e, entries)
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn get(&self, a: usize) -> Option<Residue> {
        self.entries.get(a).map(|v| Residue {
            value: *v,
            modulus: self.modulus,
        })
    }
}

impl fmt::Display for ResidueSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modulus <= 10 {
            for v in &self.entries {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.entries.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join("."))
        }
    }
}

impl Serialize for ResidueSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A q-character: a finitely supported map from residue sequences to Laurent
/// polynomials. Every key has length `n` and modulus `e`; zero coefficients
/// are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Character<C = i64> {
    n: usize,
    e: usize,
    terms: BTreeMap<ResidueSequence, LaurentPoly<C>>,
}

impl<C: Coefficient> Character<C> {
    pub fn new(n: usize, e: usize) -> Self {
        Self {
            n,
            e,
            terms: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn e(&self) -> usize {
        self.e
    }

    fn check_key(&self, i: &ResidueSequence) -> Result<()> {
        if i.len() != self.n || i.modulus() != self.e {
            return Err(Error::DimensionMismatch {
                left_n: self.n,
                left_e: self.e,
                right_n: i.len(),
                right_e: i.modulus(),
            });
        }
        Ok(())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.e != other.e {
            return Err(Error::DimensionMismatch {
                left_n: self.n,
                left_e: self.e,
                right_n: other.n,
                right_e: other.e,
            });
        }
        Ok(())
    }

    /// Adds `f * i`.
    pub fn add_term(&mut self, i: ResidueSequence, f: &LaurentPoly<C>) -> Result<()> {
        self.check_key(&i)?;
        if f.is_zero() {
            return Ok(());
        }
        match self.terms.get_mut(&i) {
            Some(existing) => {
                *existing += f;
                if existing.is_zero() {
                    self.terms.remove(&i);
                }
            }
            None => {
                self.terms.insert(i, f.clone());
            }
        }
        Ok(())
    }

    pub fn coeff(&self, i: &ResidueSequence) -> LaurentPoly<C> {
        self.terms.get(i).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ResidueSequence, &LaurentPoly<C>)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Pointwise sum; fails when `n` or `e` differ.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (i, f) in &other.terms {
            out.add_term(i.clone(), f)?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.scale(&-LaurentPoly::one()))
    }

    /// Scalar multiplication by a Laurent polynomial.
    pub fn scale(&self, f: &LaurentPoly<C>) -> Self {
        let mut out = Self::new(self.n, self.e);
        for (i, g) in &self.terms {
            let prod = g * f;
            if !prod.is_zero() {
                out.terms.insert(i.clone(), prod);
            }
        }
        out
    }

    /// The bar involution applied coefficientwise.
    pub fn bar(&self) -> Self {
        Self {
            n: self.n,
            e: self.e,
            terms: self
                .terms
                .iter()
                .map(|(i, f)| (i.clone(), f.bar()))
                .collect(),
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        self.terms.values().all(|f| f.is_bar_invariant())
    }

    /// Sum over all keys of the coefficients evaluated at `q = 1`; for the
    /// character of a tableau set this is its cardinality.
    pub fn mass(&self) -> C {
        self.terms
            .values()
            .map(|f| f.eval_at_one())
            .fold(C::zero(), |acc, c| acc + c)
    }
}

impl<C: Coefficient + fmt::Display + PartialOrd> fmt::Debug for Character<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Character(n={}, e={}) {{", self.n, self.e)?;
        for (idx, (i, g)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{i}: {g}")?;
        }
        f.write_str("}")
    }
}

/// JSON form: `{"n": .., "e": .., "terms": {"0101": {"0": 1}, ...}}`.
impl<C: Coefficient + Serialize> Serialize for Character<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a, C: Coefficient + Serialize> {
            n: usize,
            e: usize,
            terms: BTreeMap<String, &'a LaurentPoly<C>>,
        }
        Wire {
            n: self.n,
            e: self.e,
            terms: self.terms.iter().map(|(i, f)| (i.to_string(), f)).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de, C: Coefficient + Deserialize<'de>> Deserialize<'de> for Character<C> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(bound = "C: Coefficient + Deserialize<'de>")]
        struct Wire<C: Coefficient> {
            n: usize,
            e: usize,
            terms: BTreeMap<String, LaurentPoly<C>>,
        }
        let wire: Wire<C> = Wire::deserialize(deserializer)?;
        let mut out = Character::new(wire.n, wire.e);
        for (key, f) in wire.terms {
            let i = ResidueSequence::parse(wire.e, &key).map_err(de::Error::custom)?;
            out.add_term(i, &f).map_err(de::Error::custom)?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    fn seq(e: usize, s: &str) -> ResidueSequence {
        ResidueSequence::parse(e, s).unwrap()
    }

    #[test]
    fn bar_examples() {
        // q + 2 -> q^-1 + 2
        assert_eq!(poly(&[(1, 1), (0, 2)]).bar(), poly(&[(-1, 1), (0, 2)]));
        assert_eq!(LaurentPoly::<i64>::zero().bar(), LaurentPoly::zero());
        let sym = poly(&[(-1, 1), (1, 1)]);
        assert_eq!(sym.bar(), sym);
        assert!(sym.is_bar_invariant());
        assert!(!LaurentPoly::<i64>::q().is_bar_invariant());
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let f = poly(&[(3, 2), (3, -2), (0, 1)]);
        assert_eq!(f.num_terms(), 1);
        assert_eq!(&f - &f, LaurentPoly::zero());
        assert!(LaurentPoly::monomial(0i64, 5).is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(LaurentPoly::<i64>::zero().to_string(), "0");
        assert_eq!(LaurentPoly::<i64>::one().to_string(), "1");
        assert_eq!(LaurentPoly::<i64>::q().to_string(), "q");
        assert_eq!(poly(&[(-1, 1), (0, 2)]).to_string(), "q^-1 + 2");
        assert_eq!(poly(&[(1, -1), (2, 3)]).to_string(), "-q + 3q^2");
    }

    #[test]
    fn json_roundtrip_and_shape() {
        let f = poly(&[(-2, 1), (2, 2)]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"-2":1,"2":2}"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn bigint_coefficients() {
        use num_bigint::BigInt;
        let big = BigInt::from(i64::MAX) * BigInt::from(4);
        let f = LaurentPoly::monomial(big.clone(), 2);
        let g = &f * &f;
        assert_eq!(g.coeff(4), &big * &big);
        assert_eq!(g.bar().coeff(-4), &big * &big);
    }

    #[test]
    fn residue_reduction() {
        assert_eq!(Residue::new(-1, 3).value(), 2);
        assert_eq!(Residue::new(7, 3).value(), 1);
        assert_eq!((Residue::new(2, 3) + 1).value(), 0);
    }

    #[test]
    fn residue_sequence_strings() {
        let i = seq(3, "01220101");
        assert_eq!(i.to_string(), "01220101");
        assert_eq!(i.len(), 8);
        assert!(ResidueSequence::parse(3, "013").is_err());
        let big = ResidueSequence::new(12, vec![0, 11, 3]).unwrap();
        assert_eq!(big.to_string(), "0.11.3");
        assert_eq!(ResidueSequence::parse(12, "0.11.3").unwrap(), big);
    }

    #[test]
    fn character_add_scale_cancel() {
        let i = seq(2, "01");
        let mut a: Character = Character::new(2, 2);
        a.add_term(i.clone(), &LaurentPoly::one()).unwrap();
        let mut b: Character = Character::new(2, 2);
        b.add_term(i.clone(), &LaurentPoly::q()).unwrap();
        let sum = a.checked_add(&b).unwrap();
        assert_eq!(sum.coeff(&i), poly(&[(0, 1), (1, 1)]));
        // scale({i: 1+q}, q) = {i: q + q^2}
        assert_eq!(sum.scale(&LaurentPoly::q()).coeff(&i), poly(&[(1, 1), (2, 1)]));
        // c + (-1) c = empty
        let neg = sum.scale(&poly(&[(0, -1)]));
        assert!(sum.checked_add(&neg).unwrap().is_empty());
    }

    #[test]
    fn character_bar_examples() {
        let mut c: Character = Character::new(2, 2);
        c.add_term(seq(2, "01"), &LaurentPoly::q()).unwrap();
        assert_eq!(c.bar().coeff(&seq(2, "01")), LaurentPoly::q_pow(-1));
        let empty: Character = Character::new(3, 2);
        assert_eq!(empty.bar(), empty);
    }

    #[test]
    fn character_dimension_mismatch() {
        let a: Character = Character::new(2, 2);
        let b: Character = Character::new(2, 3);
        assert!(matches!(a.checked_add(&b), Err(Error::DimensionMismatch { .. })));
        let mut c: Character = Character::new(2, 2);
        assert!(c.add_term(seq(2, "010"), &LaurentPoly::one()).is_err());
    }

    #[test]
    fn character_json_roundtrip() {
        let mut c: Character = Character::new(3, 3);
        c.add_term(seq(3, "012"), &poly(&[(-1, 1), (1, 1)])).unwrap();
        c.add_term(seq(3, "021"), &LaurentPoly::one()).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        let back: Character = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-6i64..6, -5i64..5), 0..6).prop_map(LaurentPoly::from_terms)
    }

    fn arb_character() -> impl Strategy<Value = Character> {
        prop::collection::vec((prop::collection::vec(0usize..3, 3), arb_poly()), 0..5).prop_map(
            |terms| {
                let mut c: Character = Character::new(3, 3);
                for (i, f) in terms {
                    c.add_term(ResidueSequence::new(3, i).unwrap(), &f).unwrap();
                }
                c
            },
        )
    }

    proptest! {
        #[test]
        fn bar_is_multiplicative_involution(f in arb_poly(), g in arb_poly()) {
            prop_assert_eq!((&f * &g).bar(), &f.bar() * &g.bar());
            prop_assert_eq!(f.bar().bar(), f.clone());
            prop_assert_eq!((&f + &g).bar(), &f.bar() + &g.bar());
        }

        #[test]
        fn ring_laws(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert_eq!((&f * &g).eval_at_one(), f.eval_at_one() * g.eval_at_one());
            prop_assert_eq!((&f + &g).eval_at_one(), f.eval_at_one() + g.eval_at_one());
        }

        #[test]
        fn character_bar_commutes_with_add(a in arb_character(), b in arb_character()) {
            let sum = a.checked_add(&b).unwrap();
            prop_assert_eq!(sum.bar(), a.bar().checked_add(&b.bar()).unwrap());
            prop_assert_eq!(a.bar().bar(), a.clone());
        }
    }
}

//! Exact arithmetic in ℤ[q^{±1}] extended by invertible commuting scalar symbols.
//!
//! A [`Ring`] fixes the list of symbols (the first one is always `q`); every
//! [`LaurentPoly`] carries its ring, and its exponent vectors have exactly one
//! entry per symbol.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent vector of a Laurent monomial, one entry per ring symbol.
pub type Exponents = Vec<i64>;

/// Coefficient ring ℤ[q^{±1}, s₁^{±1}, …].
#[derive(Clone, Debug)]
pub struct Ring {
    symbols: Arc<[String]>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.symbols, &other.symbols) || self.symbols == other.symbols
    }
}

impl Eq for Ring {}

impl Ring {
    /// Ring with `q` followed by the given extra symbols.
    ///
    /// Panics on duplicate or empty symbol names.
    pub fn new(extra: &[&str]) -> Ring {
        let mut symbols = vec!["q".to_string()];
        for s in extra {
            assert!(!s.is_empty(), "empty symbol name");
            assert!(!symbols.iter().any(|t| t == s), "duplicate symbol `{s}`");
            symbols.push((*s).to_string());
        }
        Ring { symbols: symbols.into() }
    }

    /// The ring ℤ[q^{±1}, a^{±1}, b^{±1}] used by the expression language and the check suite.
    pub fn standard() -> Ring {
        static STANDARD: OnceLock<Ring> = OnceLock::new();
        STANDARD.get_or_init(|| Ring::new(&["a", "b"])).clone()
    }

    pub fn width(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s == name)
    }

    pub fn zero(&self) -> LaurentPoly {
        LaurentPoly { ring: self.clone(), terms: BTreeMap::new() }
    }

    pub fn one(&self) -> LaurentPoly {
        self.int(1)
    }

    pub fn int(&self, n: impl Into<BigInt>) -> LaurentPoly {
        self.monomial(n.into(), &vec![0; self.width()])
    }

    pub fn q(&self) -> LaurentPoly {
        self.q_pow(1)
    }

    /// The monomial q^k.
    pub fn q_pow(&self, k: i64) -> LaurentPoly {
        let mut e = vec![0; self.width()];
        e[0] = k;
        self.monomial(BigInt::one(), &e)
    }

    /// The monomial for a named symbol, if the ring declares it.
    pub fn symbol(&self, name: &str) -> Option<LaurentPoly> {
        let i = self.index_of(name)?;
        let mut e = vec![0; self.width()];
        e[i] = 1;
        Some(self.monomial(BigInt::one(), &e))
    }

    pub fn monomial(&self, coeff: BigInt, exps: &[i64]) -> LaurentPoly {
        assert_eq!(exps.len(), self.width(), "exponent vector width mismatch");
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps.to_vec(), coeff);
        }
        LaurentPoly { ring: self.clone(), terms }
    }
}

/// q-integer [n]_q = (qⁿ − q⁻ⁿ)/(q − q⁻¹) as a Laurent polynomial.
pub fn qint(ring: &Ring, n: i64) -> LaurentPoly {
    let mut p = ring.zero();
    for k in 0..n.unsigned_abs() as i64 {
        p += ring.q_pow(n.abs() - 1 - 2 * k);
    }
    if n < 0 {
        -p
    } else {
        p
    }
}

/// Exact element of a [`Ring`]: a finite map from exponent vectors to nonzero integers.
#[derive(Clone)]
pub struct LaurentPoly {
    ring: Ring,
    terms: BTreeMap<Exponents, BigInt>,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && self.ring == other.ring
    }
}

impl Eq for LaurentPoly {}

impl std::hash::Hash for LaurentPoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl LaurentPoly {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(e, c)| c.is_one() && e.iter().all(|x| *x == 0))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i64]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Coefficient of q^k in a polynomial whose other symbols all have exponent zero.
    pub fn q_coeff(&self, k: i64) -> BigInt {
        let mut e = vec![0; self.ring.width()];
        e[0] = k;
        self.coeff(&e)
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Exponents, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// A single term with coefficient ±1, i.e. a unit of the ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    pub fn inverse(&self) -> Result<LaurentPoly> {
        if !self.is_unit() {
            return Err(Error::NotInvertible(self.to_string()));
        }
        let (e, c) = self.terms.iter().next().unwrap();
        let inv: Vec<i64> = e.iter().map(|x| -x).collect();
        Ok(self.ring.monomial(c.clone(), &inv))
    }

    /// Integer power; negative exponents are allowed only for units.
    pub fn pow(&self, exp: i64) -> Result<LaurentPoly> {
        if exp < 0 {
            return self.inverse()?.pow(-exp);
        }
        let mut base = self.clone();
        let mut acc = self.ring.one();
        let mut e = exp as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn scale_int(&self, k: &BigInt) -> LaurentPoly {
        if k.is_zero() {
            return self.ring.zero();
        }
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect();
        LaurentPoly { ring: self.ring.clone(), terms }
    }

    /// Multiply by the monomial with the given exponent vector (coefficient 1).
    pub fn shift(&self, by: &[i64]) -> LaurentPoly {
        assert_eq!(by.len(), self.ring.width());
        let terms =
            self.terms.iter().map(|(e, c)| (e.iter().zip(by).map(|(a, b)| a + b).collect(), c.clone())).collect();
        LaurentPoly { ring: self.ring.clone(), terms }
    }

    /// Componentwise minimum of the exponent vectors, `None` for zero.
    pub fn min_exponents(&self) -> Option<Exponents> {
        let mut it = self.terms.keys();
        let mut m = it.next()?.clone();
        for e in it {
            for (a, b) in m.iter_mut().zip(e) {
                *a = (*a).min(*b);
            }
        }
        Some(m)
    }

    /// Componentwise maximum of the exponent vectors, `None` for zero.
    pub fn max_exponents(&self) -> Option<Exponents> {
        let mut it = self.terms.keys();
        let mut m = it.next()?.clone();
        for e in it {
            for (a, b) in m.iter_mut().zip(e) {
                *a = (*a).max(*b);
            }
        }
        Some(m)
    }

    /// Gcd of the integer coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide every coefficient by `k`; fails unless `k` divides all of them.
    pub fn div_int(&self, k: &BigInt) -> Result<LaurentPoly> {
        if k.is_zero() {
            return Err(Error::InexactDivision);
        }
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let (quot, rem) = c.div_rem(k);
            if !rem.is_zero() {
                return Err(Error::InexactDivision);
            }
            terms.insert(e.clone(), quot);
        }
        Ok(LaurentPoly { ring: self.ring.clone(), terms })
    }

    /// Exact quotient `self / d`; fails when `d` does not divide `self`.
    ///
    /// Uses lexicographic leading-term division. Every quotient exponent must
    /// lie in the box `[min(self) − max(d), max(self) − min(d)]`, which bounds
    /// the loop when the division is not exact.
    pub fn div_exact(&self, d: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_ring(d);
        if d.is_zero() {
            return Err(Error::InexactDivision);
        }
        if self.is_zero() {
            return Ok(self.ring.zero());
        }
        if d.is_unit() {
            return Ok(self * &d.inverse()?);
        }
        let (lo, hi) = {
            let (nmin, nmax) = (self.min_exponents().unwrap(), self.max_exponents().unwrap());
            let (dmin, dmax) = (d.min_exponents().unwrap(), d.max_exponents().unwrap());
            let lo: Vec<i64> = nmin.iter().zip(&dmax).map(|(a, b)| a - b).collect();
            let hi: Vec<i64> = nmax.iter().zip(&dmin).map(|(a, b)| a - b).collect();
            (lo, hi)
        };
        let (dlead_e, dlead_c) = d.leading_term().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = self.ring.zero();
        while let Some((re, rc)) = rem.leading_term() {
            let (c, r) = rc.div_rem(&dlead_c);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            let e: Vec<i64> = re.iter().zip(&dlead_e).map(|(a, b)| a - b).collect();
            if e.iter().zip(lo.iter().zip(&hi)).any(|(x, (l, h))| x < l || x > h) {
                return Err(Error::InexactDivision);
            }
            let t = self.ring.monomial(c, &e);
            rem -= &t * d;
            quot += t;
        }
        Ok(quot)
    }

    /// Exact rational value at the given point (one nonzero value per symbol).
    pub fn specialize(&self, values: &[BigRational]) -> Result<BigRational> {
        if values.len() != self.ring.width() {
            return Err(Error::SpecializationArity { expected: self.ring.width(), got: values.len() });
        }
        if let Some(i) = values.iter().position(|v| v.is_zero()) {
            return Err(Error::ZeroSpecialization(self.ring.symbols[i].clone()));
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (v, k) in values.iter().zip(e) {
                t *= rational_pow(v, *k);
            }
            acc += t;
        }
        Ok(acc)
    }

    fn check_ring(&self, other: &LaurentPoly) {
        assert!(self.ring == other.ring, "mixing Laurent polynomials from different rings");
    }

    fn add_term(&mut self, e: &[i64], c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(e);
                }
            }
            None => {
                self.terms.insert(e.to_vec(), c.clone());
            }
        }
    }
}

fn rational_pow(v: &BigRational, k: i64) -> BigRational {
    let mut base = if k < 0 { v.recip() } else { v.clone() };
    let mut e = k.unsigned_abs();
    let mut acc = BigRational::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.check_ring(rhs);
        for (e, c) in &rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        *self += &rhs;
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.check_ring(rhs);
        for (e, c) in &rhs.terms {
            self.add_term(e, &-c);
        }
    }
}

impl SubAssign for LaurentPoly {
    fn sub_assign(&mut self, rhs: LaurentPoly) {
        *self -= &rhs;
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_ring(rhs);
        let mut out = self.ring.zero();
        let mut e = vec![0; self.ring.width()];
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                for (k, slot) in e.iter_mut().enumerate() {
                    *slot = e1[k] + e2[k];
                }
                out.add_term(&e, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        LaurentPoly { ring: self.ring.clone(), terms }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<LaurentPoly> for &'a LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl LaurentPoly {
    fn fmt_monomial(&self, e: &[i64], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, k) in self.ring.symbols.iter().zip(e) {
            if *k == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if *k == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{k}")?;
            }
        }
        Ok(())
    }

    /// Terms in rendering order: positive coefficients first, then negative
    /// ones, each group by exponent vector lexicographically descending.
    pub(crate) fn display_order(&self) -> Vec<(&Exponents, &BigInt)> {
        let pos = self.terms.iter().rev().filter(|(_, c)| c.is_positive());
        let neg = self.terms.iter().rev().filter(|(_, c)| c.is_negative());
        pos.chain(neg).collect()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.display_order().into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let constant = e.iter().all(|k| *k == 0);
            if constant {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                self.fmt_monomial(e, f)?;
            } else {
                write!(f, "{mag}*")?;
                self.fmt_monomial(e, f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn qint_small_values() {
        let ring = Ring::new(&[]);
        let q = ring.q();
        assert_eq!(qint(&ring, 3), ring.q_pow(2) + ring.one() + ring.q_pow(-2));
        assert!(qint(&ring, 0).is_zero());
        assert_eq!(qint(&ring, -2), -(q.clone() + ring.q_pow(-1)));
        assert_eq!(qint(&ring, 1), ring.one());
        assert_eq!(qint(&ring, 3).to_string(), "q^2 + 1 + q^-2");
    }

    #[test]
    fn arithmetic_examples() {
        let ring = Ring::new(&[]);
        let q = ring.q();
        let qi = ring.q_pow(-1);
        assert_eq!(&(&q - &qi) * &(&q + &qi), ring.q_pow(2) - ring.q_pow(-2));
        let p = &q + &ring.int(7);
        assert!((&p + &(-&p)).is_zero());
        let lhs = ring.q_pow(2) - ring.one();
        let rhs = &q * &(&q - &qi);
        assert!((lhs - rhs).is_zero());
    }

    #[test]
    fn negative_power_needs_unit() {
        let ring = Ring::new(&[]);
        let p = ring.q() + ring.one();
        assert!(matches!(p.pow(-1), Err(Error::NotInvertible(_))));
        assert!(matches!(ring.int(2).pow(-1), Err(Error::NotInvertible(_))));
        assert_eq!((-ring.q_pow(3)).pow(-2).unwrap(), ring.q_pow(-6));
        assert_eq!(p.pow(0).unwrap(), ring.one());
    }

    #[test]
    fn specialize_examples() {
        let ring = Ring::new(&[]);
        let v = qint(&ring, 3).specialize(&[r(2, 1)]).unwrap();
        assert_eq!(v, r(21, 4));
        assert!(ring.zero().specialize(&[r(5, 3)]).unwrap().is_zero());
        let d = ring.q() - ring.q_pow(-1);
        assert!(d.specialize(&[r(1, 1)]).unwrap().is_zero());
        assert!(matches!(d.specialize(&[r(0, 1)]), Err(Error::ZeroSpecialization(_))));
        assert!(matches!(d.specialize(&[]), Err(Error::SpecializationArity { .. })));
    }

    #[test]
    fn rendering() {
        let ring = Ring::standard();
        let one = ring.one();
        assert_eq!((&one - &ring.q_pow(2)).to_string(), "1 - q^2");
        assert_eq!((&one - &ring.q_pow(-2)).to_string(), "1 - q^-2");
        assert_eq!((-qint(&ring, 2)).to_string(), "-q - q^-1");
        let a = ring.symbol("a").unwrap();
        assert_eq!((&a * &ring.q_pow(2)).scale_int(&BigInt::from(3)).to_string(), "3*q^2*a");
        assert_eq!(a.pow(-1).unwrap().to_string(), "a^-1");
        assert_eq!(ring.zero().to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let ring = Ring::new(&["a"]);
        let a = ring.symbol("a").unwrap();
        let x = &ring.q() + &a;
        let y = &ring.q_pow(-3) - &(&a * &ring.int(2));
        let prod = &x * &y;
        assert_eq!(prod.div_exact(&x).unwrap(), y);
        assert_eq!(prod.div_exact(&y).unwrap(), x);
        assert_eq!(x.div_exact(&y), Err(Error::InexactDivision));
        assert_eq!(ring.int(3).div_exact(&ring.int(2)), Err(Error::InexactDivision));
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-4i64..=4, -3i64..=3, -5i64..=5), 0..5).prop_map(|ts| {
            let ring = Ring::new(&["a"]);
            let mut p = ring.zero();
            for (eq, ea, c) in ts {
                p += ring.monomial(c.into(), &[eq, ea]);
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(x in arb_poly(), y in arb_poly(), z in arb_poly()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert!(x.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn qint_addition_law(m in -12i64..12, n in -12i64..12) {
            let ring = Ring::new(&[]);
            let lhs = qint(&ring, m + n);
            let rhs = &(&ring.q_pow(n) * &qint(&ring, m)) + &(&ring.q_pow(-m) * &qint(&ring, n));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn specialize_is_homomorphism(x in arb_poly(), y in arb_poly(),
                                      qn in 1i64..9, qd in 1i64..9, an in -7i64..7) {
            prop_assume!(an != 0);
            let pt = [r(qn, qd), r(an, 3)];
            let sx = x.specialize(&pt).unwrap();
            let sy = y.specialize(&pt).unwrap();
            prop_assert_eq!((&x * &y).specialize(&pt).unwrap(), &sx * &sy);
            prop_assert_eq!((&x + &y).specialize(&pt).unwrap(), &sx + &sy);
        }

        #[test]
        fn division_inverts_multiplication(x in arb_poly(), y in arb_poly()) {
            prop_assume!(!y.is_zero());
            prop_assert_eq!((&x * &y).div_exact(&y).unwrap(), x);
        }
    }
}

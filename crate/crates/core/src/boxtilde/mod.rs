//! Normal-form arithmetic in the algebra with generators x₀…x₃ and central
//! invertible c₀…c₃ subject to (q·xᵢxᵢ₊₁ − q⁻¹·xᵢ₊₁xᵢ)/(q − q⁻¹) = cᵢ.
//!
//! Every element has a unique expansion in the basis
//! `(even word over x₀,x₂)·(odd word over x₁,x₃)·(central monomial)`.
//! [`BoxElem`] stores that expansion; [`BoxAlgebra`] performs the rewriting
//! that brings products back to it.

mod auto;
mod engine;
pub mod oracle;

pub use auto::CentralUnit;
pub use engine::{BoxAlgebra, Limits, Strategy};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::qcoeff::LaurentPoly;

/// A generator xᵢ, i ∈ ℤ₄.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    X0,
    X1,
    X2,
    X3,
}

impl Gen {
    pub const ALL: [Gen; 4] = [Gen::X0, Gen::X1, Gen::X2, Gen::X3];

    /// xᵢ for i taken mod 4.
    pub fn from_index(i: i64) -> Gen {
        Gen::ALL[i.rem_euclid(4) as usize]
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn is_even(self) -> bool {
        self.index().is_multiple_of(2)
    }

    pub fn shift(self, k: i64) -> Gen {
        Gen::from_index(self.index() as i64 + k)
    }

    pub fn name(self) -> &'static str {
        ["x0", "x1", "x2", "x3"][self.index()]
    }
}

/// The q-exponent ⟨u,v⟩ and central index γ(u,v) of the reduction rule
/// `v·u = q^⟨u,v⟩·u·v + (1 − q^⟨u,v⟩)·c_γ(u,v)` for u even, v odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReductionTables {
    /// Rows x₀, x₂; columns x₁, x₃.
    pub pairing: [[i64; 2]; 2],
    pub gamma: [[usize; 2]; 2],
}

pub const REDUCTION_TABLES: ReductionTables = ReductionTables { pairing: [[2, -2], [-2, 2]], gamma: [[0, 3], [1, 2]] };

impl ReductionTables {
    pub fn pairing(&self, u: Gen, v: Gen) -> i64 {
        debug_assert!(u.is_even() && !v.is_even());
        self.pairing[u.index() / 2][v.index() / 2]
    }

    pub fn gamma(&self, u: Gen, v: Gen) -> usize {
        debug_assert!(u.is_even() && !v.is_even());
        self.gamma[u.index() / 2][v.index() / 2]
    }
}

/// c₀^{n₀}c₁^{n₁}c₂^{n₂}c₃^{n₃}.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CentralMono(pub [i64; 4]);

impl CentralMono {
    pub fn one() -> CentralMono {
        CentralMono([0; 4])
    }

    /// cᵢ^k
    pub fn c(i: usize, k: i64) -> CentralMono {
        let mut e = [0; 4];
        e[i % 4] = k;
        CentralMono(e)
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn mul(&self, other: &CentralMono) -> Result<CentralMono> {
        let mut e = [0; 4];
        for (i, slot) in e.iter_mut().enumerate() {
            *slot = self.0[i].checked_add(other.0[i]).ok_or(Error::ExponentOverflow)?;
        }
        Ok(CentralMono(e))
    }

    pub fn pow(&self, k: i64) -> Result<CentralMono> {
        let mut e = [0; 4];
        for (i, slot) in e.iter_mut().enumerate() {
            *slot = self.0[i].checked_mul(k).ok_or(Error::ExponentOverflow)?;
        }
        Ok(CentralMono(e))
    }

    pub fn inverse(&self) -> CentralMono {
        CentralMono(self.0.map(|x| -x))
    }

    /// Image under cᵢ ↦ cᵢ₊ₖ.
    pub fn shift(&self, k: i64) -> CentralMono {
        let mut e = [0; 4];
        for (i, n) in self.0.iter().enumerate() {
            e[(i as i64 + k).rem_euclid(4) as usize] = *n;
        }
        CentralMono(e)
    }
}

impl fmt::Display for CentralMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("-");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, n)| **n != 0)
            .map(|(i, n)| if *n == 1 { format!("c{i}") } else { format!("c{i}^{n}") })
            .collect();
        f.write_str(&parts.join("."))
    }
}

/// Basis element `u·v·c` with u an even word, v an odd word and c central.
///
/// Ordered by total word length descending, then even word, odd word and
/// central monomial; this is also the rendering order of [`BoxElem`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalMono {
    even: Vec<Gen>,
    odd: Vec<Gen>,
    central: CentralMono,
}

impl NormalMono {
    pub fn new(even: Vec<Gen>, odd: Vec<Gen>, central: CentralMono) -> Result<NormalMono> {
        if let Some(g) = even.iter().find(|g| !g.is_even()) {
            return Err(Error::InvalidMonomial(format!("{} in the even word", g.name())));
        }
        if let Some(g) = odd.iter().find(|g| g.is_even()) {
            return Err(Error::InvalidMonomial(format!("{} in the odd word", g.name())));
        }
        Ok(NormalMono { even, odd, central })
    }

    pub fn one() -> NormalMono {
        NormalMono { even: Vec::new(), odd: Vec::new(), central: CentralMono::one() }
    }

    /// Split an already sorted word (all even letters before all odd ones).
    pub(crate) fn from_sorted(word: Vec<Gen>, central: CentralMono) -> NormalMono {
        let k = word.iter().position(|g| !g.is_even()).unwrap_or(word.len());
        debug_assert!(word[k..].iter().all(|g| !g.is_even()));
        let mut even = word;
        let odd = even.split_off(k);
        NormalMono { even, odd, central }
    }

    pub(crate) fn from_parts_unchecked(even: Vec<Gen>, odd: Vec<Gen>, central: CentralMono) -> NormalMono {
        NormalMono { even, odd, central }
    }

    pub fn even(&self) -> &[Gen] {
        &self.even
    }

    pub fn odd(&self) -> &[Gen] {
        &self.odd
    }

    pub fn central(&self) -> CentralMono {
        self.central
    }

    pub fn with_central(&self, central: CentralMono) -> NormalMono {
        NormalMono { even: self.even.clone(), odd: self.odd.clone(), central }
    }

    /// The full word u·v.
    pub fn word(&self) -> Vec<Gen> {
        let mut w = self.even.clone();
        w.extend_from_slice(&self.odd);
        w
    }

    /// (even length, odd length).
    pub fn bidegree(&self) -> (usize, usize) {
        (self.even.len(), self.odd.len())
    }

    fn total_len(&self) -> usize {
        self.even.len() + self.odd.len()
    }
}

impl PartialOrd for NormalMono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NormalMono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other
            .total_len()
            .cmp(&self.total_len())
            .then_with(|| self.even.cmp(&other.even))
            .then_with(|| self.odd.cmp(&other.odd))
            .then_with(|| self.central.cmp(&other.central))
    }
}

fn fmt_word(w: &[Gen]) -> String {
    if w.is_empty() {
        "-".to_string()
    } else {
        w.iter().map(|g| g.name()).collect::<Vec<_>>().join(".")
    }
}

impl fmt::Display for NormalMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {} | {}", fmt_word(&self.even), fmt_word(&self.odd), self.central)
    }
}

/// Render one `coeff * body` summand of a sum.
///
/// Single-term coefficients carry their sign into the joining operator;
/// multi-term ones are parenthesized. With `bare` set the body is the
/// identity and only the coefficient is written.
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    coeff: &LaurentPoly,
    body: &str,
    bare: bool,
) -> fmt::Result {
    if coeff.num_terms() == 1 {
        let negative = coeff.terms().next().map(|(_, c)| c.is_negative()).unwrap_or(false);
        let mag = if negative { -coeff } else { coeff.clone() };
        match (first, negative) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        if bare {
            write!(f, "{mag}")
        } else if mag.is_one() {
            f.write_str(body)
        } else {
            write!(f, "{mag} * {body}")
        }
    } else {
        if !first {
            f.write_str(" + ")?;
        }
        if bare {
            write!(f, "({coeff})")
        } else {
            write!(f, "({coeff}) * {body}")
        }
    }
}

/// An element in normal form: a finite map from basis monomials to nonzero coefficients.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct BoxElem {
    terms: BTreeMap<NormalMono, LaurentPoly>,
}

impl BoxElem {
    pub fn zero() -> BoxElem {
        BoxElem { terms: BTreeMap::new() }
    }

    pub fn term(mono: NormalMono, coeff: LaurentPoly) -> BoxElem {
        let mut e = BoxElem::zero();
        e.add_term(mono, coeff);
        e
    }

    pub fn scalar(coeff: LaurentPoly) -> BoxElem {
        BoxElem::term(NormalMono::one(), coeff)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NormalMono, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &NormalMono) -> Option<&LaurentPoly> {
        self.terms.get(mono)
    }

    /// The coefficient when this is a multiple of the identity (or zero).
    pub fn as_scalar(&self) -> Option<Option<&LaurentPoly>> {
        match self.terms.len() {
            0 => Some(None),
            1 => self.terms.get(&NormalMono::one()).map(Some),
            _ => None,
        }
    }

    pub fn add_term(&mut self, mono: NormalMono, coeff: LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(c) => {
                *c += &coeff;
                if c.is_zero() {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, coeff);
            }
        }
    }

    pub fn scale(&self, k: &LaurentPoly) -> BoxElem {
        let mut out = BoxElem::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    /// Multiply by a central monomial (no rewriting needed).
    pub fn mul_central(&self, c: &CentralMono) -> Result<BoxElem> {
        let mut out = BoxElem::zero();
        for (m, k) in &self.terms {
            out.add_term(m.with_central(m.central.mul(c)?), k.clone());
        }
        Ok(out)
    }

    pub fn into_terms(self) -> BTreeMap<NormalMono, LaurentPoly> {
        self.terms
    }
}

impl FromIterator<(NormalMono, LaurentPoly)> for BoxElem {
    fn from_iter<I: IntoIterator<Item = (NormalMono, LaurentPoly)>>(iter: I) -> Self {
        let mut e = BoxElem::zero();
        for (m, c) in iter {
            e.add_term(m, c);
        }
        e
    }
}

impl AddAssign<&BoxElem> for BoxElem {
    fn add_assign(&mut self, rhs: &BoxElem) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&BoxElem> for BoxElem {
    fn sub_assign(&mut self, rhs: &BoxElem) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl<'a> Add<&'a BoxElem> for &'a BoxElem {
    type Output = BoxElem;
    fn add(self, rhs: &BoxElem) -> BoxElem {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a BoxElem> for &'a BoxElem {
    type Output = BoxElem;
    fn sub(self, rhs: &BoxElem) -> BoxElem {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for BoxElem {
    type Output = BoxElem;
    fn add(mut self, rhs: BoxElem) -> BoxElem {
        self += &rhs;
        self
    }
}

impl Sub for BoxElem {
    type Output = BoxElem;
    fn sub(mut self, rhs: BoxElem) -> BoxElem {
        self -= &rhs;
        self
    }
}

impl Neg for &BoxElem {
    type Output = BoxElem;
    fn neg(self) -> BoxElem {
        BoxElem { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for BoxElem {
    type Output = BoxElem;
    fn neg(self) -> BoxElem {
        -&self
    }
}

impl fmt::Display for BoxElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            write_term(f, i == 0, c, &format!("[{m}]"), false)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BoxElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BoxElem({self})")
    }
}

use std::fmt;

use super::{BoxAlgebra, BoxElem, CentralMono, Gen, NormalMono};
use crate::error::{Error, Result};
use crate::qcoeff::{LaurentPoly, Ring};

/// A unit `coeff · c₀^{n₀}⋯c₃^{n₃}` where `coeff` is a signed monomial.
///
/// These are the invertible central elements the engine can represent:
/// scaling parameters for [`BoxAlgebra::scale_auto`] and targets for
/// [`BoxAlgebra::specialize_central`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralUnit {
    coeff: LaurentPoly,
    central: CentralMono,
}

impl CentralUnit {
    pub fn new(coeff: LaurentPoly, central: CentralMono) -> Result<CentralUnit> {
        if !coeff.is_unit() {
            return Err(Error::NotInvertible(coeff.to_string()));
        }
        Ok(CentralUnit { coeff, central })
    }

    pub fn one(ring: &Ring) -> CentralUnit {
        CentralUnit { coeff: ring.one(), central: CentralMono::one() }
    }

    pub fn scalar(coeff: LaurentPoly) -> Result<CentralUnit> {
        CentralUnit::new(coeff, CentralMono::one())
    }

    /// cᵢ^k
    pub fn c(ring: &Ring, i: usize, k: i64) -> CentralUnit {
        CentralUnit { coeff: ring.one(), central: CentralMono::c(i, k) }
    }

    /// Read a unit off an element of the form `u·[- | - | c]`.
    pub fn from_elem(e: &BoxElem) -> Result<CentralUnit> {
        let mut it = e.terms();
        match (it.next(), it.next()) {
            (Some((m, k)), None) if m.even().is_empty() && m.odd().is_empty() => {
                CentralUnit::new(k.clone(), m.central())
            }
            _ => Err(Error::NotInvertible(e.to_string())),
        }
    }

    pub fn coeff(&self) -> &LaurentPoly {
        &self.coeff
    }

    pub fn central(&self) -> CentralMono {
        self.central
    }

    pub fn is_one(&self) -> bool {
        self.coeff.is_one() && self.central.is_one()
    }

    pub fn mul(&self, other: &CentralUnit) -> Result<CentralUnit> {
        Ok(CentralUnit { coeff: &self.coeff * &other.coeff, central: self.central.mul(&other.central)? })
    }

    pub fn pow(&self, k: i64) -> Result<CentralUnit> {
        Ok(CentralUnit { coeff: self.coeff.pow(k)?, central: self.central.pow(k)? })
    }

    pub fn inverse(&self) -> Result<CentralUnit> {
        self.pow(-1)
    }

    pub fn to_elem(&self) -> BoxElem {
        BoxElem::term(NormalMono::from_parts_unchecked(vec![], vec![], self.central), self.coeff.clone())
    }
}

impl fmt::Display for CentralUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_elem())
    }
}

impl BoxAlgebra {
    /// Image under ρ̃: xᵢ ↦ xᵢ₊₁, cᵢ ↦ cᵢ₊₁.
    pub fn rho(&self, e: &BoxElem) -> Result<BoxElem> {
        let mut out = BoxElem::zero();
        for (m, k) in e.terms() {
            let w: Vec<Gen> = m.word().iter().map(|g| g.shift(1)).collect();
            out += &self.reduce_word(&w, m.central().shift(1), k.clone())?;
        }
        Ok(out)
    }

    /// ρ̃ᵏ for any integer k.
    pub fn rho_pow(&self, e: &BoxElem, k: i64) -> Result<BoxElem> {
        let mut out = e.clone();
        for _ in 0..k.rem_euclid(4) {
            out = self.rho(&out)?;
        }
        Ok(out)
    }

    /// Image under g̃(α): xᵢ ↦ αᵢxᵢ, cᵢ ↦ αᵢαᵢ₊₁cᵢ.
    ///
    /// The αᵢ are central, so monomials map to multiples of themselves and
    /// no rewriting is needed.
    pub fn scale_auto(&self, alpha: &[CentralUnit; 4], e: &BoxElem) -> Result<BoxElem> {
        let cimg: Vec<CentralUnit> = (0..4)
            .map(|i| alpha[i].mul(&alpha[(i + 1) % 4])?.mul(&CentralUnit::c(self.ring(), i, 1)))
            .collect::<Result<_>>()?;
        let mut out = BoxElem::zero();
        for (m, k) in e.terms() {
            let mut u = CentralUnit::one(self.ring());
            for g in m.even().iter().chain(m.odd()) {
                u = u.mul(&alpha[g.index()])?;
            }
            for (i, n) in m.central().0.iter().enumerate() {
                u = u.mul(&cimg[i].pow(*n)?)?;
            }
            out.add_term(m.with_central(u.central), k * &u.coeff);
        }
        Ok(out)
    }

    /// Image under the homomorphism fixing each xᵢ and sending cᵢ ↦ valuesᵢ.
    pub fn specialize_central(&self, e: &BoxElem, values: &[CentralUnit; 4]) -> Result<BoxElem> {
        let mut out = BoxElem::zero();
        for (m, k) in e.terms() {
            let mut u = CentralUnit::one(self.ring());
            for (i, n) in m.central().0.iter().enumerate() {
                u = u.mul(&values[i].pow(*n)?)?;
            }
            out.add_term(m.with_central(u.central), k * &u.coeff);
        }
        Ok(out)
    }

    /// Image under cᵢ ↦ 1 for all i.
    pub fn canonical_image(&self, e: &BoxElem) -> Result<BoxElem> {
        let one = CentralUnit::one(self.ring());
        self.specialize_central(e, &[one.clone(), one.clone(), one.clone(), one])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Gen::*;

    #[test]
    fn rho_is_a_homomorphism_on_words() {
        let a = BoxAlgebra::standard();
        let u = a.word(&[X1, X0, X3]).unwrap();
        let v = a.word(&[X2, X1]).unwrap();
        let lhs = a.rho(&a.mul(&u, &v).unwrap()).unwrap();
        let rhs = a.mul(&a.rho(&u).unwrap(), &a.rho(&v).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(a.rho_pow(&u, 4).unwrap(), u);
        assert_eq!(a.rho_pow(&u, -1).unwrap(), a.rho_pow(&u, 3).unwrap());
    }

    #[test]
    fn scale_auto_preserves_products() {
        let a = BoxAlgebra::standard();
        let ring = a.ring().clone();
        let sa = ring.symbol("a").unwrap();
        let sb = ring.symbol("b").unwrap();
        let alpha = [
            CentralUnit::scalar(sa.clone()).unwrap(),
            CentralUnit::new(ring.int(-1), CentralMono::c(2, 1)).unwrap(),
            CentralUnit::scalar(sb.pow(-1).unwrap()).unwrap(),
            CentralUnit::c(&ring, 0, -1),
        ];
        let u = a.word(&[X1, X0, X3, X2]).unwrap();
        let v = a.word(&[X3, X0]).unwrap();
        let lhs = a.scale_auto(&alpha, &a.mul(&u, &v).unwrap()).unwrap();
        let rhs = a.mul(&a.scale_auto(&alpha, &u).unwrap(), &a.scale_auto(&alpha, &v).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn non_unit_rejected() {
        let ring = Ring::standard();
        assert!(CentralUnit::scalar(ring.int(2)).is_err());
        assert!(CentralUnit::scalar(&ring.q() + &ring.one()).is_err());
        assert!(CentralUnit::scalar(-ring.q()).is_ok());
    }

    #[test]
    fn canonical_image_drops_centrals() {
        let a = BoxAlgebra::standard();
        let e = a.word(&[X1, X0]).unwrap();
        let ring = a.ring();
        let expected =
            &a.word(&[X0, X1]).unwrap().scale(&ring.q_pow(2)) + &a.one().scale(&(&ring.one() - &ring.q_pow(2)));
        assert_eq!(a.canonical_image(&e).unwrap(), expected);
    }
}

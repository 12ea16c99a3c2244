//! Bidegrees, the ℤ-grading by r − s, and the lift of words in A, B.

use std::collections::BTreeMap;
use std::fmt;

use crate::boxtilde::{BoxAlgebra, BoxElem, CentralMono, Gen, NormalMono};
use crate::error::{Error, Result};
use crate::qcoeff::LaurentPoly;

/// (even-word length, odd-word length) of a basis monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bidegree {
    pub r: usize,
    pub s: usize,
}

impl Bidegree {
    pub fn of(m: &NormalMono) -> Bidegree {
        let (r, s) = m.bidegree();
        Bidegree { r, s }
    }

    pub fn degree(&self) -> i64 {
        self.r as i64 - self.s as i64
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r, self.s)
    }
}

pub fn bidegree_components(e: &BoxElem) -> BTreeMap<Bidegree, BoxElem> {
    let mut out: BTreeMap<Bidegree, BoxElem> = BTreeMap::new();
    for (m, k) in e.terms() {
        out.entry(Bidegree::of(m)).or_default().add_term(m.clone(), k.clone());
    }
    out
}

/// The ℤ-degrees present in e.
pub fn degrees(e: &BoxElem) -> Vec<i64> {
    let mut d: Vec<i64> = e.terms().map(|(m, _)| Bidegree::of(m).degree()).collect();
    d.sort_unstable();
    d.dedup();
    d
}

/// Projection onto ℤ-degree n.
pub fn pi(n: i64, e: &BoxElem) -> BoxElem {
    e.terms().filter(|(m, _)| Bidegree::of(m).degree() == n).map(|(m, k)| (m.clone(), k.clone())).collect()
}

/// Bidegrees of (odd word)·(even word) outside {(r−ℓ, s−ℓ) : 0 ≤ ℓ ≤ min(r,s)}.
pub fn product_grading_violations(alg: &BoxAlgebra, odd: &[Gen], even: &[Gen]) -> Result<Vec<Bidegree>> {
    let (r, s) = (even.len(), odd.len());
    let mut w = odd.to_vec();
    w.extend_from_slice(even);
    let e = alg.word(&w)?;
    Ok(bidegree_components(&e).into_keys().filter(|b| !(b.r <= r && b.s <= s && r - b.r == s - b.s)).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AB {
    A,
    B,
}

/// A word in the generators A, B.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ABWord(pub Vec<AB>);

impl ABWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All 2ⁿ words of length n, A < B, first letter most significant.
    pub fn all(n: usize) -> Vec<ABWord> {
        (0..1usize << n)
            .map(|bits| ABWord((0..n).map(|i| if bits >> (n - 1 - i) & 1 == 0 { AB::A } else { AB::B }).collect()))
            .collect()
    }

    pub fn parse(s: &str) -> Option<ABWord> {
        s.chars()
            .map(|c| match c {
                'A' => Some(AB::A),
                'B' => Some(AB::B),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(ABWord)
    }
}

impl fmt::Display for ABWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for l in &self.0 {
            f.write_str(if *l == AB::A { "A" } else { "B" })?;
        }
        Ok(())
    }
}

/// Scalars a, b in A⁺ = a·x₀, A⁻ = a⁻¹·x₁, B⁺ = b·x₂, B⁻ = b⁻¹·x₃.
#[derive(Clone, Debug)]
pub struct LiftParams {
    a: LaurentPoly,
    a_inv: LaurentPoly,
    b: LaurentPoly,
    b_inv: LaurentPoly,
}

impl LiftParams {
    pub fn new(a: LaurentPoly, b: LaurentPoly) -> Result<LiftParams> {
        Ok(LiftParams { a_inv: a.inverse()?, b_inv: b.inverse()?, a, b })
    }

    /// The symbols `a` and `b` of the algebra's ring.
    pub fn symbolic(alg: &BoxAlgebra) -> Result<LiftParams> {
        let ring = alg.ring();
        let get = |n: &str| ring.symbol(n).ok_or_else(|| Error::Config(format!("ring has no symbol `{n}`")));
        LiftParams::new(get("a")?, get("b")?)
    }

    fn plus(&self, g: AB) -> (Gen, &LaurentPoly) {
        match g {
            AB::A => (Gen::X0, &self.a),
            AB::B => (Gen::X2, &self.b),
        }
    }

    fn minus(&self, g: AB) -> (Gen, &LaurentPoly) {
        match g {
            AB::A => (Gen::X1, &self.a_inv),
            AB::B => (Gen::X3, &self.b_inv),
        }
    }

    /// g⁺ + g⁻
    pub fn generator(&self, alg: &BoxAlgebra, g: AB) -> BoxElem {
        let (p, kp) = self.plus(g);
        let (m, km) = self.minus(g);
        &alg.x(p.index() as i64).scale(kp) + &alg.x(m.index() as i64).scale(km)
    }

    /// g₁⁺g₂⁺⋯gₙ⁺ as a single normal monomial.
    pub fn plus_word(&self, alg: &BoxAlgebra, w: &ABWord) -> BoxElem {
        let mut k = alg.ring().one();
        let mut even = Vec::with_capacity(w.len());
        for g in &w.0 {
            let (x, s) = self.plus(*g);
            k = &k * s;
            even.push(x);
        }
        BoxElem::term(NormalMono::new(even, vec![], CentralMono::one()).expect("even letters"), k)
    }

    /// g₁⁻g₂⁻⋯gₙ⁻ as a single normal monomial.
    pub fn minus_word(&self, alg: &BoxAlgebra, w: &ABWord) -> BoxElem {
        let mut k = alg.ring().one();
        let mut odd = Vec::with_capacity(w.len());
        for g in &w.0 {
            let (x, s) = self.minus(*g);
            k = &k * s;
            odd.push(x);
        }
        BoxElem::term(NormalMono::new(vec![], odd, CentralMono::one()).expect("odd letters"), k)
    }
}

/// The 2ⁿ signed words g₁^{ε₁}⋯gₙ^{εₙ} with their scalar, before reduction.
pub fn sharp_summands(p: &LiftParams, w: &ABWord) -> Vec<(Vec<Gen>, LaurentPoly)> {
    let mut acc: Vec<(Vec<Gen>, LaurentPoly)> = vec![(Vec::new(), p.a.ring().one())];
    for g in &w.0 {
        let mut next = Vec::with_capacity(acc.len() * 2);
        for (word, k) in &acc {
            for (x, s) in [p.plus(*g), p.minus(*g)] {
                let mut nw = word.clone();
                nw.push(x);
                next.push((nw, k * s));
            }
        }
        acc = next;
    }
    acc
}

/// Normal form of the lift of w: the sum of its 2ⁿ summands.
pub fn sharp_lift(alg: &BoxAlgebra, p: &LiftParams, w: &ABWord) -> Result<BoxElem> {
    let mut out = BoxElem::zero();
    for (word, k) in sharp_summands(p, w) {
        out += &alg.reduce_word(&word, CentralMono::one(), k)?;
    }
    Ok(out)
}

/// Lifts of all 2ⁿ words of length n, sharing prefixes.
pub fn sharp_lift_all(alg: &BoxAlgebra, p: &LiftParams, n: usize) -> Result<Vec<(ABWord, BoxElem)>> {
    let gens = [p.generator(alg, AB::A), p.generator(alg, AB::B)];
    let mut level = vec![(ABWord::default(), alg.one())];
    for _ in 0..n {
        let mut next = Vec::with_capacity(level.len() * 2);
        for (w, e) in &level {
            for (g, ge) in [AB::A, AB::B].into_iter().zip(&gens) {
                let mut nw = w.clone();
                nw.0.push(g);
                next.push((nw, alg.mul(e, ge)?));
            }
        }
        level = next;
    }
    Ok(level)
}

/// φₙ(w) = πₙ(lift(w)) with n = |w|.
pub fn phi_n(alg: &BoxAlgebra, p: &LiftParams, w: &ABWord) -> Result<BoxElem> {
    Ok(pi(w.len() as i64, &sharp_lift(alg, p, w)?))
}

/// Degrees of e outside [−n, n] or of the wrong parity.
pub fn spread_violations(e: &BoxElem, n: usize, bound: i64) -> Vec<i64> {
    let n = n as i64;
    degrees(e).into_iter().filter(|d| d.abs() > bound || (d - n).rem_euclid(2) != 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use Gen::*;

    fn setup() -> (BoxAlgebra, LiftParams) {
        let alg = BoxAlgebra::standard();
        let p = LiftParams::symbolic(&alg).unwrap();
        (alg, p)
    }

    #[test]
    fn components_and_projection() {
        let alg = BoxAlgebra::standard();
        let e = alg.word(&[X1, X0]).unwrap();
        let comps = bidegree_components(&e);
        assert_eq!(comps.keys().copied().collect::<Vec<_>>(), vec![Bidegree { r: 0, s: 0 }, Bidegree { r: 1, s: 1 }]);
        let sum = comps.values().fold(BoxElem::zero(), |acc, c| &acc + c);
        assert_eq!(sum, e);
        let x = &alg.x(0) + &alg.x(1);
        assert_eq!(pi(1, &x), alg.x(0));
        assert_eq!(pi(0, &alg.one()), alg.one());
        let w = alg.word(&[X0, X2, X1, X3]).unwrap();
        assert!(pi(2, &w).is_zero());
    }

    #[test]
    fn lift_of_single_letters() {
        let (alg, p) = setup();
        let a = alg.ring().symbol("a").unwrap();
        let lift = sharp_lift(&alg, &p, &ABWord::parse("A").unwrap()).unwrap();
        assert_eq!(lift.to_string(), "a^-1 * [- | x1 | -] + a * [x0 | - | -]");
        assert_eq!(phi_n(&alg, &p, &ABWord::parse("A").unwrap()).unwrap(), alg.x(0).scale(&a));
        assert_eq!(sharp_summands(&p, &ABWord::parse("AB").unwrap()).len(), 4);
    }

    #[test]
    fn phi_two() {
        let (alg, p) = setup();
        let w = ABWord::parse("AB").unwrap();
        assert_eq!(phi_n(&alg, &p, &w).unwrap().to_string(), "a*b * [x0.x2 | - | -]");
        assert_eq!(phi_n(&alg, &p, &w).unwrap(), p.plus_word(&alg, &w));
        // lower-length words vanish under the degree-3 projection
        assert!(pi(3, &sharp_lift(&alg, &p, &w).unwrap()).is_zero());
    }

    #[test]
    fn prefix_sharing_matches_direct() {
        let (alg, p) = setup();
        for (w, e) in sharp_lift_all(&alg, &p, 3).unwrap() {
            assert_eq!(e, sharp_lift(&alg, &p, &w).unwrap(), "{w}");
        }
    }

    #[test]
    fn product_grading() {
        let alg = BoxAlgebra::standard();
        assert!(product_grading_violations(&alg, &[X1, X3, X3], &[X0, X2]).unwrap().is_empty());
        assert!(product_grading_violations(&alg, &[], &[X0, X2]).unwrap().is_empty());
    }

    #[test]
    fn word_enumeration() {
        let ws = ABWord::all(2);
        assert_eq!(ws.iter().map(|w| w.to_string()).collect::<Vec<_>>(), ["AA", "AB", "BA", "BB"]);
    }
}

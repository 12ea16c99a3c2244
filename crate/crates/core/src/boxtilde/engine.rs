use std::collections::{BTreeMap, HashMap};

use super::{BoxElem, CentralMono, Gen, NormalMono, REDUCTION_TABLES};
use crate::error::{Error, Result};
use crate::qcoeff::{qint, LaurentPoly, Ring};

/// Resource limits for rewriting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Longest word the rewriter accepts.
    pub word_cap: usize,
    /// Most live terms (pending plus finished) allowed during one reduction.
    pub term_budget: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { word_cap: 64, term_budget: 1_000_000 }
    }
}

impl Limits {
    pub const WORD_CAP_VAR: &'static str = "QDG_WORD_CAP";
    pub const TERM_BUDGET_VAR: &'static str = "QDG_TERM_BUDGET";

    /// Defaults overridden by `QDG_WORD_CAP` and `QDG_TERM_BUDGET`.
    pub fn from_env() -> Result<Limits> {
        let mut l = Limits::default();
        if let Some(v) = read_var(Self::WORD_CAP_VAR)? {
            l.word_cap = v;
        }
        if let Some(v) = read_var(Self::TERM_BUDGET_VAR)? {
            l.term_budget = v;
        }
        Ok(l)
    }
}

fn read_var(name: &str) -> Result<Option<usize>> {
    match std::env::var(name) {
        Ok(s) => {
            s.trim().parse().map(Some).map_err(|_| Error::Config(format!("{name}={s:?} is not a nonnegative integer")))
        }
        Err(_) => Ok(None),
    }
}

/// Which out-of-order pair the rewriter resolves first. The normal form
/// does not depend on the choice; both exist so that this can be tested.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    #[default]
    Leftmost,
    Rightmost,
}

/// The rewriting engine.
#[derive(Clone, Debug)]
pub struct BoxAlgebra {
    ring: Ring,
    limits: Limits,
    strategy: Strategy,
}

type PendingKey = (usize, usize, Vec<Gen>, CentralMono);

impl BoxAlgebra {
    pub fn new(ring: Ring) -> BoxAlgebra {
        BoxAlgebra { ring, limits: Limits::default(), strategy: Strategy::default() }
    }

    pub fn standard() -> BoxAlgebra {
        BoxAlgebra::new(Ring::standard())
    }

    pub fn with_limits(mut self, limits: Limits) -> BoxAlgebra {
        self.limits = limits;
        self
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> BoxAlgebra {
        self.strategy = strategy;
        self
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    pub fn one(&self) -> BoxElem {
        BoxElem::scalar(self.ring.one())
    }

    pub fn scalar(&self, k: LaurentPoly) -> BoxElem {
        BoxElem::scalar(k)
    }

    /// xᵢ, index mod 4.
    pub fn x(&self, i: i64) -> BoxElem {
        let g = Gen::from_index(i);
        let m = if g.is_even() {
            NormalMono::from_parts_unchecked(vec![g], vec![], CentralMono::one())
        } else {
            NormalMono::from_parts_unchecked(vec![], vec![g], CentralMono::one())
        };
        BoxElem::term(m, self.ring.one())
    }

    /// cᵢ^k, index mod 4.
    pub fn c(&self, i: i64, k: i64) -> BoxElem {
        let m = NormalMono::from_parts_unchecked(vec![], vec![], CentralMono::c(i.rem_euclid(4) as usize, k));
        BoxElem::term(m, self.ring.one())
    }

    /// Normal form of the word g₁⋯gₙ.
    pub fn word(&self, letters: &[Gen]) -> Result<BoxElem> {
        self.reduce_word(letters, CentralMono::one(), self.ring.one())
    }

    /// Normal form of `coeff · g₁⋯gₙ · central`.
    pub fn reduce_word(&self, letters: &[Gen], central: CentralMono, coeff: LaurentPoly) -> Result<BoxElem> {
        let cap = self.limits.word_cap;
        if letters.len() > cap {
            return Err(Error::ReductionBudget { len: letters.len(), cap });
        }
        let mut out = BoxElem::zero();
        if coeff.is_zero() {
            return Ok(out);
        }
        let steps = StepCoeffs::new(&self.ring);
        let mut pending: BTreeMap<PendingKey, LaurentPoly> = BTreeMap::new();
        pending.insert((letters.len(), inversions(letters), letters.to_vec(), central), coeff);
        while let Some(((len, inv, w, cm), k)) = pending.pop_last() {
            if k.is_zero() {
                continue;
            }
            let Some(p) = self.find_pair(&w) else {
                out.add_term(NormalMono::from_sorted(w, cm), k);
                continue;
            };
            let (v, u) = (w[p], w[p + 1]);
            let e = REDUCTION_TABLES.pairing(u, v);
            let g = REDUCTION_TABLES.gamma(u, v);
            let (swap_coeff, contract_coeff) = steps.get(e);

            let mut contracted = w.clone();
            contracted.drain(p..p + 2);
            let cinv = inversions(&contracted);
            let ccm = cm.mul(&CentralMono::c(g, 1))?;
            push(&mut pending, (len - 2, cinv, contracted, ccm), &k * contract_coeff);

            let mut swapped = w;
            swapped.swap(p, p + 1);
            push(&mut pending, (len, inv - 1, swapped, cm), &k * swap_coeff);

            let live = pending.len() + out.num_terms();
            if live > self.limits.term_budget {
                return Err(Error::TermBudget { terms: live, budget: self.limits.term_budget });
            }
        }
        Ok(out)
    }

    fn find_pair(&self, w: &[Gen]) -> Option<usize> {
        let bad = |i: &usize| !w[*i].is_even() && w[*i + 1].is_even();
        let n = w.len().saturating_sub(1);
        match self.strategy {
            Strategy::Leftmost => (0..n).find(bad),
            Strategy::Rightmost => (0..n).rev().find(bad),
        }
    }

    /// Product of two normal forms.
    ///
    /// Only the odd-then-even middle of each pair of monomials needs
    /// rewriting; those middles are cached for the duration of the call.
    pub fn mul(&self, a: &BoxElem, b: &BoxElem) -> Result<BoxElem> {
        let mut cache: HashMap<(Vec<Gen>, Vec<Gen>), BoxElem> = HashMap::new();
        let mut out = BoxElem::zero();
        for (m1, k1) in a.terms() {
            for (m2, k2) in b.terms() {
                let key = (m1.odd().to_vec(), m2.even().to_vec());
                if !cache.contains_key(&key) {
                    let mut middle = key.0.clone();
                    middle.extend_from_slice(&key.1);
                    let nf = self.word(&middle)?;
                    cache.insert(key.clone(), nf);
                }
                let central = m1.central().mul(&m2.central())?;
                let k = k1 * k2;
                for (mm, kk) in cache[&key].terms() {
                    let mut even = m1.even().to_vec();
                    even.extend_from_slice(mm.even());
                    let mut odd = mm.odd().to_vec();
                    odd.extend_from_slice(m2.odd());
                    let c = central.mul(&mm.central())?;
                    out.add_term(NormalMono::from_parts_unchecked(even, odd, c), &k * kk);
                }
                if out.num_terms() > self.limits.term_budget {
                    return Err(Error::TermBudget { terms: out.num_terms(), budget: self.limits.term_budget });
                }
            }
        }
        Ok(out)
    }

    /// Left-to-right product of several elements.
    pub fn product<'a>(&self, factors: impl IntoIterator<Item = &'a BoxElem>) -> Result<BoxElem> {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, a: &BoxElem, n: u32) -> Result<BoxElem> {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    /// Sᵢ = xᵢ³xᵢ₊₂ − [3]xᵢ²xᵢ₊₂xᵢ + [3]xᵢxᵢ₊₂xᵢ² − xᵢ₊₂xᵢ³.
    pub fn s_element(&self, i: i64) -> Result<BoxElem> {
        let a = Gen::from_index(i);
        let b = Gen::from_index(i + 2);
        let three = qint(&self.ring, 3);
        let one = self.ring.one();
        let mut out = BoxElem::zero();
        out += &self.reduce_word(&[a, a, a, b], CentralMono::one(), one.clone())?;
        out += &self.reduce_word(&[a, a, b, a], CentralMono::one(), -&three)?;
        out += &self.reduce_word(&[a, b, a, a], CentralMono::one(), three)?;
        out += &self.reduce_word(&[b, a, a, a], CentralMono::one(), -one)?;
        Ok(out)
    }
}

fn push(pending: &mut BTreeMap<PendingKey, LaurentPoly>, key: PendingKey, k: LaurentPoly) {
    if k.is_zero() {
        return;
    }
    match pending.get_mut(&key) {
        Some(c) => *c += &k,
        None => {
            pending.insert(key, k);
        }
    }
}

/// Number of (odd, even) pairs out of order; each swap lowers it by one.
fn inversions(w: &[Gen]) -> usize {
    let mut odd_seen = 0;
    let mut inv = 0;
    for g in w {
        if g.is_even() {
            inv += odd_seen;
        } else {
            odd_seen += 1;
        }
    }
    inv
}

/// q^e and 1 − q^e for e = ±2.
struct StepCoeffs {
    plus: (LaurentPoly, LaurentPoly),
    minus: (LaurentPoly, LaurentPoly),
}

impl StepCoeffs {
    fn new(ring: &Ring) -> StepCoeffs {
        let one = ring.one();
        let p = ring.q_pow(2);
        let m = ring.q_pow(-2);
        StepCoeffs { plus: (p.clone(), &one - &p), minus: (m.clone(), &one - &m) }
    }

    fn get(&self, e: i64) -> (&LaurentPoly, &LaurentPoly) {
        match e {
            2 => (&self.plus.0, &self.plus.1),
            -2 => (&self.minus.0, &self.minus.1),
            _ => unreachable!("pairing values are ±2"),
        }
    }
}

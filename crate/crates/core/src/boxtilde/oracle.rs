//! An independent model of the algebra acting on T ⊗ T ⊗ L, where L is the
//! Laurent ring in λ₀…λ₃.
//!
//! x₀ and x₂ prepend x and y to the first factor, λ-multiplication realizes
//! the central generators, and x₁, x₃ act by an explicit sum over the first
//! factor. The orbit of 1 ⊗ 1 ⊗ 1 is in bijection with the normal-form
//! basis, so acting with a word and translating back gives a second route
//! to its normal form that shares no code with the rewriter.

use std::collections::BTreeMap;

use super::{BoxElem, CentralMono, Gen, Limits, NormalMono};
use crate::error::{Error, Result};
use crate::freealg::{FreeWord, Letter};
use crate::qcoeff::{LaurentPoly, Ring};

/// One letter of the acting word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Action {
    X(Gen),
    /// Multiplication by λᵢ^k.
    C(usize, i64),
}

/// Basis vector u ⊗ v ⊗ λ^w.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TensorKey {
    pub u: FreeWord,
    pub v: FreeWord,
    pub w: [i64; 4],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElem {
    terms: BTreeMap<TensorKey, LaurentPoly>,
}

fn pairing(a: Letter, b: Letter) -> i64 {
    if a == b {
        2
    } else {
        -2
    }
}

fn lambda_index(a: Letter, b: Letter) -> usize {
    match (a, b) {
        (Letter::X, Letter::X) => 0,
        (Letter::Y, Letter::X) => 1,
        (Letter::Y, Letter::Y) => 2,
        (Letter::X, Letter::Y) => 3,
    }
}

impl TensorElem {
    /// 1 ⊗ 1 ⊗ 1
    pub fn unit(ring: &Ring) -> TensorElem {
        let mut terms = BTreeMap::new();
        terms.insert(TensorKey { u: FreeWord::empty(), v: FreeWord::empty(), w: [0; 4] }, ring.one());
        TensorElem { terms }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TensorKey, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    fn add(&mut self, key: TensorKey, k: LaurentPoly) {
        if k.is_zero() {
            return;
        }
        let e = self.terms.entry(key);
        match e {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &k;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(k);
            }
        }
    }

    /// Apply one generator.
    pub fn act(&self, ring: &Ring, a: Action) -> Result<TensorElem> {
        let mut out = TensorElem { terms: BTreeMap::new() };
        for (key, k) in &self.terms {
            match a {
                Action::C(i, n) => {
                    let mut w = key.w;
                    w[i] = w[i].checked_add(n).ok_or(Error::ExponentOverflow)?;
                    out.add(TensorKey { w, ..key.clone() }, k.clone());
                }
                Action::X(g) if g.is_even() => {
                    let l = if g == Gen::X0 { Letter::X } else { Letter::Y };
                    let mut u = vec![l];
                    u.extend_from_slice(key.u.letters());
                    out.add(TensorKey { u: FreeWord(u), ..key.clone() }, k.clone());
                }
                Action::X(g) => {
                    let l = if g == Gen::X1 { Letter::X } else { Letter::Y };
                    let u = key.u.letters();
                    let mut v = vec![l];
                    v.extend_from_slice(key.v.letters());
                    let total: i64 = u.iter().map(|&ui| pairing(ui, l)).sum();
                    out.add(TensorKey { u: key.u.clone(), v: FreeWord(v), w: key.w }, k * &ring.q_pow(total));
                    let mut prefix = 0;
                    for i in 0..u.len() {
                        let e = pairing(u[i], l);
                        let mut rest = u[..i].to_vec();
                        rest.extend_from_slice(&u[i + 1..]);
                        let mut w = key.w;
                        let j = lambda_index(u[i], l);
                        w[j] = w[j].checked_add(1).ok_or(Error::ExponentOverflow)?;
                        let coeff = &ring.q_pow(prefix) * &(&ring.one() - &ring.q_pow(e));
                        out.add(TensorKey { u: FreeWord(rest), v: key.v.clone(), w }, k * &coeff);
                        prefix += e;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Translate u ⊗ v ⊗ λ^w to the monomial u(x₀,x₂)·v(x₁,x₃)·c^w.
    pub fn to_box(&self) -> BoxElem {
        let even = |w: &FreeWord| w.letters().iter().map(|l| if *l == Letter::X { Gen::X0 } else { Gen::X2 }).collect();
        let odd = |w: &FreeWord| w.letters().iter().map(|l| if *l == Letter::X { Gen::X1 } else { Gen::X3 }).collect();
        self.terms
            .iter()
            .map(|(key, k)| {
                (NormalMono::from_parts_unchecked(even(&key.u), odd(&key.v), CentralMono(key.w)), k.clone())
            })
            .collect()
    }
}

/// Image of 1 ⊗ 1 ⊗ 1 under the word a₁a₂⋯aₙ (so aₙ acts first).
pub fn module_action(ring: &Ring, word: &[Action], limits: Limits) -> Result<TensorElem> {
    let xs = word.iter().filter(|a| matches!(a, Action::X(_))).count();
    if xs > limits.word_cap {
        return Err(Error::ReductionBudget { len: xs, cap: limits.word_cap });
    }
    let mut t = TensorElem::unit(ring);
    for a in word.iter().rev() {
        t = t.act(ring, *a)?;
        if t.num_terms() > limits.term_budget {
            return Err(Error::TermBudget { terms: t.num_terms(), budget: limits.term_budget });
        }
    }
    Ok(t)
}

/// Normal form of a word computed through the module.
pub fn oracle_normal_form(ring: &Ring, letters: &[Gen], limits: Limits) -> Result<BoxElem> {
    let word: Vec<Action> = letters.iter().map(|g| Action::X(*g)).collect();
    Ok(module_action(ring, &word, limits)?.to_box())
}

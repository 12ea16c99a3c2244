//! Checks that maps defined on generators respect defining relations.
//!
//! Relations are kept as formal word polynomials so that substitution and
//! comparison happen before any rewriting; only the index-shift check of
//! the central extension evaluates through the engine.

use std::collections::BTreeMap;
use std::fmt;

use super::{nonzero, Check, CheckKind, Context, Witness};
use crate::boxtilde::{BoxElem, CentralMono, Gen};
use crate::error::Result;
use crate::qcoeff::{qint, LaurentPoly, Ring};

use CheckKind::{Control, Identity};

/// A noncommutative polynomial over words in letters `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordPoly<L: Ord> {
    pub terms: BTreeMap<Vec<L>, LaurentPoly>,
}

impl<L: Ord + Clone> WordPoly<L> {
    fn new() -> Self {
        WordPoly { terms: BTreeMap::new() }
    }

    fn add(&mut self, w: Vec<L>, k: LaurentPoly) {
        if k.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert_with(|| k.ring().zero());
        *e += &k;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    /// Image under letters ↦ (scalar, letter).
    pub fn substitute<M: Ord + Clone>(&self, f: impl Fn(&L) -> (LaurentPoly, M)) -> WordPoly<M> {
        let mut out = WordPoly::new();
        for (w, k) in &self.terms {
            let mut c = k.clone();
            let mut nw = Vec::with_capacity(w.len());
            for l in w {
                let (s, m) = f(l);
                c = &c * &s;
                nw.push(m);
            }
            out.add(nw, c);
        }
        out
    }

    /// The unit λ with self = λ·other, if there is one.
    pub fn unit_multiple_of(&self, other: &WordPoly<L>) -> Option<LaurentPoly> {
        if self.terms.len() != other.terms.len() || self.terms.is_empty() {
            return None;
        }
        let (w0, k0) = self.terms.iter().next()?;
        let l = k0.div_exact(other.terms.get(w0)?).ok()?;
        if !l.is_unit() {
            return None;
        }
        self.terms.iter().all(|(w, k)| other.terms.get(w).is_some_and(|o| &(o * &l) == k)).then_some(l)
    }
}

impl<L: Ord + fmt::Display> fmt::Display for WordPoly<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, k)) in self.terms.iter().enumerate() {
            let body: Vec<String> = w.iter().map(|l| l.to_string()).collect();
            crate::boxtilde::write_term(f, i == 0, k, &body.join("*"), w.is_empty())?;
        }
        Ok(())
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Generator x_{ij} of the tetrahedron-type target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TetGen(pub usize, pub usize);

impl fmt::Display for TetGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}{}", self.0, self.1)
    }
}

fn m4(i: i64) -> usize {
    i.rem_euclid(4) as usize
}

/// q·uv − q⁻¹·vu − (q − q⁻¹)
fn weyl<L: Ord + Clone>(ring: &Ring, u: L, v: L) -> WordPoly<L> {
    let mut p = WordPoly::new();
    p.add(vec![u.clone(), v.clone()], ring.q());
    p.add(vec![v, u], -ring.q_pow(-1));
    p.add(vec![], -(&ring.q() - &ring.q_pow(-1)));
    p
}

/// u³v − [3]u²vu + [3]uvu² − vu³
fn serre<L: Ord + Clone>(ring: &Ring, u: L, v: L) -> WordPoly<L> {
    let three = qint(ring, 3);
    let mut p = WordPoly::new();
    p.add(vec![u.clone(), u.clone(), u.clone(), v.clone()], ring.one());
    p.add(vec![u.clone(), u.clone(), v.clone(), u.clone()], -&three);
    p.add(vec![u.clone(), v.clone(), u.clone(), u.clone()], three);
    p.add(vec![v, u.clone(), u.clone(), u], -ring.one());
    p
}

/// Defining relations of the quotient with cᵢ = 1, indexed by i.
fn box_relation(ring: &Ring, serre_rel: bool, i: i64) -> WordPoly<Gen> {
    if serre_rel {
        serre(ring, Gen::from_index(i), Gen::from_index(i + 2))
    } else {
        weyl(ring, Gen::from_index(i), Gen::from_index(i + 1))
    }
}

/// All instances of the target's q-Weyl and q-Serre schemas.
pub fn tetrahedron_instances(ring: &Ring) -> Vec<(String, WordPoly<TetGen>)> {
    let mut out = Vec::new();
    for i in 0..4i64 {
        for (d1, d2) in [(1, 1), (1, 2), (2, 1)] {
            let (j, k) = (i + d1, i + d1 + d2);
            let (a, b) = (TetGen(m4(i), m4(j)), TetGen(m4(j), m4(k)));
            out.push((format!("weyl({},{},{})", m4(i), m4(j), m4(k)), weyl(ring, a, b)));
        }
        let (a, b) = (TetGen(m4(i), m4(i + 1)), TetGen(m4(i + 2), m4(i + 3)));
        out.push((format!("serre({},{},{},{})", m4(i), m4(i + 1), m4(i + 2), m4(i + 3)), serre(ring, a, b)));
    }
    out
}

/// The shifted relation of the central extension, evaluated.
fn rho_relation(ctx: &Context, i: i64, shift_c: bool) -> Result<BoxElem> {
    let a = &ctx.alg;
    let ring = a.ring();
    let s = |g: Gen| g.shift(1);
    let (u, v) = (s(Gen::from_index(i)), s(Gen::from_index(i + 1)));
    let c = if shift_c { CentralMono::c(m4(i + 1), 1) } else { CentralMono::c(m4(i), 1) };
    let mut e = a.reduce_word(&[u, v], CentralMono::one(), ring.q())?;
    e += &a.reduce_word(&[v, u], CentralMono::one(), -ring.q_pow(-1))?;
    e += &a.reduce_word(&[], c, -(&ring.q() - &ring.q_pow(-1)))?;
    Ok(e)
}

fn scaling_image(ring: &Ring, rel: &WordPoly<Gen>, odd_exp: i64, shift: Option<Gen>) -> WordPoly<Gen> {
    let a = ring.symbol("a").expect("standard ring");
    rel.substitute(|g| {
        let k = if g.is_even() { a.clone() } else { a.pow(odd_exp).expect("monomial") };
        let target = if Some(*g) == shift { g.shift(1) } else { *g };
        (k, target)
    })
}

fn match_any<L: Ord + Clone + fmt::Display>(
    image: &WordPoly<L>,
    candidates: &[(String, WordPoly<L>)],
) -> Option<Witness> {
    if candidates.iter().any(|(_, c)| image.unit_multiple_of(c).is_some()) {
        None
    } else {
        Some(Witness::Syntactic(format!("{image} matches no relation")))
    }
}

pub(super) fn register(out: &mut Vec<Check>) {
    for i in 0..4i64 {
        for (kind, name, shift_c) in [
            (Identity, format!("presentation.rho.i{i}"), true),
            (Control, format!("control.presentation.rho.i{i}.fixed_c"), false),
        ] {
            out.push(Check::new(name, kind, move |ctx| Ok(nonzero(rho_relation(ctx, i, shift_c)?))));
        }
        for (rel, serre_rel) in [("weyl", false), ("serre", true)] {
            // A diagonal scaling keeps every q-Serre relation homogeneous, so
            // its control moves one letter instead of changing an exponent.
            let (control, odd_exp, shift) = if serre_rel {
                ("index_shift", -1, Some(Gen::from_index(i + 2)))
            } else {
                ("wrong_exponent", -2, None)
            };
            for (kind, name, e, sh) in [
                (Identity, format!("presentation.scaling.{rel}.i{i}"), -1, None),
                (Control, format!("control.presentation.scaling.{rel}.i{i}.{control}"), odd_exp, shift),
            ] {
                out.push(Check::new(name, kind, move |ctx| {
                    let ring = ctx.alg.ring();
                    let all: Vec<(String, WordPoly<Gen>)> = [false, true]
                        .into_iter()
                        .flat_map(|s| (0..4).map(move |j| (s, j)))
                        .map(|(s, j)| (format!("{j}"), box_relation(ring, s, j)))
                        .collect();
                    let image = scaling_image(ring, &box_relation(ring, serre_rel, i), e, sh);
                    Ok(match_any(&image, &all))
                }));
            }
            for (kind, name, wrong) in [
                (Identity, format!("presentation.tetrahedron.{rel}.i{i}"), false),
                (Control, format!("control.presentation.tetrahedron.{rel}.i{i}.wrong_target"), true),
            ] {
                out.push(Check::new(name, kind, move |ctx| {
                    let ring = ctx.alg.ring();
                    let image = box_relation(ring, serre_rel, i).substitute(|g| {
                        let j = g.index() as i64;
                        let target = if wrong { TetGen(m4(j - 1), m4(j + 1)) } else { TetGen(m4(j - 1), m4(j)) };
                        (ring.one(), target)
                    });
                    Ok(match_any(&image, &tetrahedron_instances(ring)))
                }));
            }
        }
    }
}

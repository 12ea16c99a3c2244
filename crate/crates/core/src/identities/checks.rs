use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::fixtures::Table;
use super::{first_nonzero, nonzero, Check, CheckKind, Context, Witness};
use crate::boxtilde::oracle::oracle_normal_form;
use crate::boxtilde::{BoxAlgebra, BoxElem, CentralMono, CentralUnit, Gen, Strategy};
use crate::error::Result;
use crate::gradings::{self, ABWord, Bidegree, LiftParams};
use crate::qcoeff::{qint, LaurentPoly};

use CheckKind::{Control, Identity};

pub(super) fn register(out: &mut Vec<Check>, ctx: &Context) {
    s_commutation(out);
    tables(out, ctx);
    qdg(out);
    general_qdg(out);
    automorphisms(out);
    engine(out);
    grading(out);
}

/// Deterministic generator for a named check.
pub(crate) fn rng_for(ctx: &Context, name: &str) -> ChaCha8Rng {
    let h = name.bytes().fold(0xcbf29ce484222325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100000001b3));
    ChaCha8Rng::seed_from_u64(ctx.seed ^ h)
}

pub(crate) fn random_word(rng: &mut impl Rng, max_len: usize) -> Vec<Gen> {
    let n = rng.gen_range(0..=max_len);
    (0..n).map(|_| Gen::from_index(rng.gen_range(0..4))).collect()
}

pub(crate) fn random_elem(alg: &BoxAlgebra, rng: &mut impl Rng) -> Result<BoxElem> {
    let ring = alg.ring();
    let mut e = BoxElem::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let w = random_word(rng, 5);
        let c = CentralMono([0; 4].map(|_| rng.gen_range(-1..=1)));
        let k = ring.q_pow(rng.gen_range(-3..=3)).scale_int(&rng.gen_range(-3i64..=3).into());
        e += &alg.reduce_word(&w, c, k)?;
    }
    Ok(e)
}

fn s_commutation(out: &mut Vec<Check>) {
    for i in 0..4i64 {
        for (side, shift, exp) in [("right", 1, 4i64), ("left", -1, -4)] {
            for (kind, name, e) in [
                (Identity, format!("s_commutation.i{i}.{side}"), exp),
                (Control, format!("control.s_commutation.i{i}.{side}.q3"), exp - exp.signum()),
            ] {
                out.push(Check::new(name, kind, move |ctx| {
                    let a = &ctx.alg;
                    let s = a.s_element(i)?;
                    let x = a.x(i + shift);
                    let lhs = a.mul(&x, &s)?;
                    let rhs = a.mul(&s, &x)?.scale(&a.ring().q_pow(e));
                    Ok(nonzero(&lhs - &rhs))
                }));
            }
        }
    }
}

fn table_differences(ctx: &Context, t: &Table) -> Result<Vec<BoxElem>> {
    match t {
        Table::Coeff(c) => c.differences(&ctx.alg),
        Table::Grid(g) => g.differences(&ctx.alg),
    }
}

/// The table with one entry shifted by q.
fn perturbed(ctx: &Context, t: &Table) -> Table {
    let q = ctx.alg.ring().q();
    let mut t = t.clone();
    match &mut t {
        Table::Coeff(c) => {
            let entry = c.rows.iter_mut().flat_map(|(_, cs)| cs.iter_mut()).find(|k| !k.is_zero());
            if let Some(k) = entry {
                *k += &q;
            }
        }
        Table::Grid(g) => {
            if let Some(r) = g.rows.first_mut() {
                r.weight += &q;
            }
        }
    }
    t
}

fn tables(out: &mut Vec<Check>, ctx: &Context) {
    for t in &ctx.tables {
        let name = t.name().to_string();
        let n1 = name.clone();
        out.push(Check::new(format!("tables.{name}"), Identity, move |ctx| {
            Ok(first_nonzero(table_differences(ctx, ctx.table(&n1)?)?))
        }));
        out.push(Check::new(format!("control.tables.{name}.perturbed"), Control, move |ctx| {
            let t = perturbed(ctx, ctx.table(&name)?);
            Ok(first_nonzero(table_differences(ctx, &t)?))
        }));
    }
}

/// X³Y − [3]X²YX + [3]XYX² − YX³
fn serre_form(a: &BoxAlgebra, x: &BoxElem, y: &BoxElem) -> Result<BoxElem> {
    let three = qint(a.ring(), 3);
    let x2 = a.mul(x, x)?;
    let x3 = a.mul(&x2, x)?;
    let mut e = a.mul(&x3, y)?;
    e -= &a.product([&x2, y, x])?.scale(&three);
    e += &a.product([x, y, &x2])?.scale(&three);
    e -= &a.mul(y, &x3)?;
    Ok(e)
}

/// (q² − q⁻²)²
fn qdg_scalar(a: &BoxAlgebra) -> LaurentPoly {
    let d = &a.ring().q_pow(2) - &a.ring().q_pow(-2);
    &d * &d
}

/// (q − q⁻¹)², the wrong scalar used by controls.
fn wrong_scalar(a: &BoxAlgebra) -> LaurentPoly {
    let d = &a.ring().q() - &a.ring().q_pow(-1);
    &d * &d
}

fn qdg(out: &mut Vec<Check>) {
    // first:  A³B − [3]A²BA + [3]ABA² − BA³ + k·c₀(AB − BA) = S₀ + S₁
    // second: B³A − [3]B²AB + [3]BAB² − AB³ + k·c₂(BA − AB) = S₂ + S₃
    for (which, central, drop_name) in [("first", 0i64, "no_c0"), ("second", 2, "no_c2")] {
        for (kind, name, keep_c) in
            [(Identity, format!("qdg.{which}"), true), (Control, format!("control.qdg.{which}.{drop_name}"), false)]
        {
            out.push(Check::new(name, kind, move |ctx| {
                let a = &ctx.alg;
                let ab = [&a.x(0) + &a.x(1), &a.x(2) + &a.x(3)];
                let (x, y) = if central == 0 { (&ab[0], &ab[1]) } else { (&ab[1], &ab[0]) };
                let mut e = serre_form(a, x, y)?;
                let comm = &a.mul(x, y)? - &a.mul(y, x)?;
                let c = if keep_c { a.c(central, 1) } else { a.one() };
                e += &a.mul(&c, &comm)?.scale(&qdg_scalar(a));
                e -= &a.s_element(central)?;
                e -= &a.s_element(central + 1)?;
                Ok(nonzero(e))
            }));
        }
    }
}

/// Named choices of (α₀, α₁, α₂, α₃).
pub(crate) fn alpha_sets(a: &BoxAlgebra) -> Result<Vec<(&'static str, [CentralUnit; 4])>> {
    let ring = a.ring();
    let one = CentralUnit::one(ring);
    let sa = CentralUnit::scalar(ring.symbol("a").expect("standard ring"))?;
    let sb = CentralUnit::scalar(ring.symbol("b").expect("standard ring"))?;
    Ok(vec![
        ("unit", [one.clone(), one.clone(), one.clone(), one.clone()]),
        ("ab", [sa.clone(), sa.inverse()?, sb.clone(), sb.inverse()?]),
        ("natural", [one.clone(), CentralUnit::c(ring, 0, -1), one, CentralUnit::c(ring, 2, -1)]),
    ])
}

fn scalar_alphas(a: &BoxAlgebra, label: &str) -> Result<[CentralUnit; 4]> {
    let ring = a.ring();
    let sym = |n: &str| ring.symbol(n).expect("standard ring");
    let ks = match label {
        "ab" => [sym("a"), sym("a").pow(-1)?, sym("b"), sym("b").pow(-1)?],
        _ => [ring.q(), sym("a"), sym("b").pow(-1)?, &(&ring.q() * &sym("b")) * &sym("a").pow(-1)?],
    };
    let [k0, k1, k2, k3] = ks;
    Ok([CentralUnit::scalar(k0)?, CentralUnit::scalar(k1)?, CentralUnit::scalar(k2)?, CentralUnit::scalar(k3)?])
}

/// LHS − RHS of the α-scaled relation, or the ρ̃²-image for `second`.
fn general_difference(a: &BoxAlgebra, al: &[CentralUnit; 4], second: bool, k: &LaurentPoly) -> Result<BoxElem> {
    let term = |i: usize| a.mul(&al[i].to_elem(), &a.x(i as i64));
    let aa = &term(0)? + &term(1)?;
    let bb = &term(2)? + &term(3)?;
    // (x, y, first index of the S pair, central index)
    let (x, y, i, ci) = if second { (&bb, &aa, 2usize, 2usize) } else { (&aa, &bb, 0, 0) };
    let mut e = serre_form(a, x, y)?;
    let coeff = al[ci].mul(&al[ci + 1])?.mul(&CentralUnit::c(a.ring(), ci, 1))?;
    let comm = &a.mul(x, y)? - &a.mul(y, x)?;
    e += &a.mul(&coeff.to_elem(), &comm)?.scale(k);
    // αᵢ³αᵢ₊₂Sᵢ + αᵢ₊₁³αᵢ₊₃Sᵢ₊₁
    for j in [i, i + 1] {
        let w = al[j].pow(3)?.mul(&al[(j + 2) % 4])?;
        e -= &a.mul(&w.to_elem(), &a.s_element(j as i64)?)?;
    }
    Ok(e)
}

fn general_qdg(out: &mut Vec<Check>) {
    for label in ["unit", "ab", "natural"] {
        for which in ["first", "second"] {
            let second = which == "second";
            out.push(Check::new(format!("general_qdg.{label}.{which}"), Identity, move |ctx| {
                let a = &ctx.alg;
                let sets = alpha_sets(a)?;
                let al = &sets.iter().find(|s| s.0 == label).expect("known label").1;
                let d = general_difference(a, al, second, &qdg_scalar(a))?;
                if !d.is_zero() {
                    return Ok(nonzero(d));
                }
                // The quotient by cᵢ ↦ 1 inherits the relation.
                let can = a.canonical_image(&d)?;
                if !can.is_zero() {
                    return Ok(nonzero(can));
                }
                if label == "natural" {
                    let ci = if second { 2 } else { 0 };
                    let coeff = al[ci].mul(&al[ci + 1])?.mul(&CentralUnit::c(a.ring(), ci, 1))?;
                    if !coeff.is_one() {
                        return Ok(Some(Witness::Syntactic(format!("error coefficient {coeff} is not 1"))));
                    }
                }
                Ok(None)
            }));
            out.push(Check::new(format!("control.general_qdg.{label}.{which}.wrong_scalar"), Control, move |ctx| {
                let a = &ctx.alg;
                let sets = alpha_sets(a)?;
                let al = &sets.iter().find(|s| s.0 == label).expect("known label").1;
                Ok(nonzero(general_difference(a, al, second, &wrong_scalar(a))?))
            }));
        }
    }
}

fn automorphisms(out: &mut Vec<Check>) {
    for (kind, name, power) in
        [(Identity, "automorphism.rho_order", 4usize), (Control, "control.automorphism.rho_order.cube", 3)]
    {
        out.push(Check::new(name, kind, move |ctx| {
            let a = &ctx.alg;
            let mut rng = rng_for(ctx, "automorphism.rho_order");
            let mut diffs = Vec::new();
            for _ in 0..25 {
                let e = random_elem(a, &mut rng)?;
                let mut r = e.clone();
                for _ in 0..power {
                    r = a.rho(&r)?;
                }
                diffs.push(&r - &e);
            }
            Ok(first_nonzero(diffs))
        }));
    }
    for i in 0..4i64 {
        for (kind, name, target) in [
            (Identity, format!("automorphism.rho_serre.i{i}"), i + 1),
            (Control, format!("control.automorphism.rho_serre.i{i}.skip"), i + 2),
        ] {
            out.push(Check::new(name, kind, move |ctx| {
                let a = &ctx.alg;
                Ok(nonzero(&a.rho(&a.s_element(i)?)? - &a.s_element(target)?))
            }));
        }
    }
    // The inverse law needs scalar α; central ones are moved by g̃ itself.
    for label in ["ab", "mixed"] {
        for (kind, name, invert) in [
            (Identity, format!("automorphism.scale_inverse.{label}"), true),
            (Control, format!("control.automorphism.scale_inverse.{label}.squared"), false),
        ] {
            out.push(Check::new(name, kind, move |ctx| {
                let a = &ctx.alg;
                let al = scalar_alphas(a, label)?;
                let inv: [CentralUnit; 4] = if invert {
                    [al[0].inverse()?, al[1].inverse()?, al[2].inverse()?, al[3].inverse()?]
                } else {
                    al.clone()
                };
                let mut rng = rng_for(ctx, &format!("automorphism.scale_inverse.{label}"));
                let mut diffs = Vec::new();
                for _ in 0..50 {
                    let e = random_elem(a, &mut rng)?;
                    let back = a.scale_auto(&al, &a.scale_auto(&inv, &e)?)?;
                    diffs.push(&back - &e);
                }
                Ok(first_nonzero(diffs))
            }));
        }
    }
}

fn engine(out: &mut Vec<Check>) {
    const WORDS: usize = 200;
    for (kind, name, perturb) in
        [(Identity, "engine.confluence", false), (Control, "control.engine.confluence.reversed", true)]
    {
        out.push(Check::new(name, kind, move |ctx| {
            let left = ctx.alg.clone().with_strategy(Strategy::Leftmost);
            let right = ctx.alg.clone().with_strategy(Strategy::Rightmost);
            let mut rng = rng_for(ctx, "engine.confluence");
            let mut diffs = Vec::new();
            for _ in 0..WORDS {
                let w = random_word(&mut rng, 10);
                let mut w2 = w.clone();
                if perturb {
                    w2.reverse();
                }
                diffs.push(&left.word(&w)? - &right.word(&w2)?);
            }
            Ok(first_nonzero(diffs))
        }));
    }
    for (kind, name, perturb) in [(Identity, "engine.oracle", false), (Control, "control.engine.oracle.swapped", true)]
    {
        out.push(Check::new(name, kind, move |ctx| {
            let a = &ctx.alg;
            let mut rng = rng_for(ctx, "engine.oracle");
            let mut diffs = Vec::new();
            for _ in 0..WORDS {
                let w = random_word(&mut rng, 10);
                let mut w2 = w.clone();
                if perturb && w2.len() >= 2 {
                    w2.swap(0, 1);
                }
                diffs.push(&a.word(&w)? - &oracle_normal_form(a.ring(), &w2, a.limits())?);
            }
            Ok(first_nonzero(diffs))
        }));
    }
}

fn allowed(r: usize, s: usize, b: Bidegree) -> bool {
    b.r <= r && b.s <= s && r - b.r == s - b.s
}

fn random_gens(rng: &mut impl Rng, n: usize, even: bool) -> Vec<Gen> {
    let base = if even { 0 } else { 1 };
    (0..n).map(|_| Gen::from_index(base + 2 * rng.gen_range(0..2))).collect()
}

fn grading(out: &mut Vec<Check>) {
    for n in 1..=5usize {
        for (kind, name, minus) in [
            (Identity, format!("grading.phi.n{n}"), false),
            (Control, format!("control.grading.phi.n{n}.minus_word"), true),
        ] {
            out.push(Check::new(name, kind, move |ctx| {
                let a = &ctx.alg;
                let p = LiftParams::symbolic(a)?;
                let mut diffs = Vec::new();
                for w in ABWord::all(n) {
                    let predicted = if minus { p.minus_word(a, &w) } else { p.plus_word(a, &w) };
                    diffs.push(&gradings::phi_n(a, &p, &w)? - &predicted);
                }
                // Shorter words have no degree-n component.
                for w in ABWord::all(n - 1) {
                    diffs.push(gradings::pi(n as i64, &gradings::sharp_lift(a, &p, &w)?));
                }
                Ok(first_nonzero(diffs))
            }));
        }
    }
    const PAIRS: usize = 8;
    for s in 0..=4usize {
        for r in 0..=4usize {
            for (kind, name, shift) in [
                (Identity, format!("grading.product.s{s}.r{r}"), 0),
                (Control, format!("control.grading.product.s{s}.r{r}.shifted"), r + 1),
            ] {
                out.push(Check::new(name, kind, move |ctx| {
                    let a = &ctx.alg;
                    let mut rng = rng_for(ctx, &format!("grading.product.s{s}.r{r}"));
                    for _ in 0..PAIRS {
                        let odd = random_gens(&mut rng, s, false);
                        let even = random_gens(&mut rng, r, true);
                        let mut w = odd.clone();
                        w.extend_from_slice(&even);
                        let comps = gradings::bidegree_components(&a.word(&w)?);
                        let bad: Vec<String> =
                            comps.keys().filter(|b| !allowed(r + shift, s, **b)).map(|b| b.to_string()).collect();
                        if !bad.is_empty() {
                            let word: Vec<&str> = w.iter().map(|g| g.name()).collect();
                            return Ok(Some(Witness::Syntactic(format!(
                                "{} has components {}",
                                word.join("*"),
                                bad.join(", ")
                            ))));
                        }
                    }
                    Ok(None)
                }));
            }
        }
    }
    for n in 1..=super::MAX_LIFT_LEN {
        for (kind, name, bound) in [
            (Identity, format!("grading.spread.n{n}"), n as i64),
            (Control, format!("control.grading.spread.n{n}.narrow"), n as i64 - 1),
        ] {
            out.push(Check::new(name, kind, move |ctx| {
                for (w, e) in ctx.lifts(n)? {
                    let bad = gradings::spread_violations(e, n, bound);
                    if !bad.is_empty() {
                        return Ok(Some(Witness::Syntactic(format!("lift of {w} has degrees {bad:?}"))));
                    }
                }
                Ok(None)
            }));
        }
    }
}

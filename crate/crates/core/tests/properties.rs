//! Randomized algebraic laws of the rewriting engine, its automorphisms and
//! the gradings.

mod common;

use std::sync::OnceLock;

use proptest::prelude::*;
use qdg::boxtilde::oracle::oracle_normal_form;
use qdg::boxtilde::{BoxAlgebra, BoxElem, CentralMono, CentralUnit, Gen, Strategy as Reduction};
use qdg::freealg::{FreeElem, FreeWord, Letter};
use qdg::gradings::{degrees, pi};
use qdg::qcoeff::Ring;

fn alg() -> &'static BoxAlgebra {
    static A: OnceLock<BoxAlgebra> = OnceLock::new();
    A.get_or_init(BoxAlgebra::standard)
}

fn gens(max: usize) -> impl Strategy<Value = Vec<Gen>> {
    prop::collection::vec((0i64..4).prop_map(Gen::from_index), 0..=max)
}

/// Small elements: up to three words of length ≤ 3 with ±q^k coefficients.
fn elem() -> impl Strategy<Value = BoxElem> {
    prop::collection::vec((gens(3), -2i64..=2, -2i64..=2, 0usize..4, -1i64..=1), 0..=3).prop_map(|ts| {
        let a = alg();
        let mut out = BoxElem::zero();
        for (w, k, n, ci, ce) in ts {
            if n == 0 {
                continue;
            }
            let coeff = &a.ring().int(n) * &a.ring().q_pow(k);
            out += &a.reduce_word(&w, CentralMono::c(ci, ce), coeff).unwrap();
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn strategies_and_oracle_agree(w in gens(10)) {
        let a = alg();
        let left = a.clone().with_strategy(Reduction::Leftmost).word(&w).unwrap();
        let right = a.clone().with_strategy(Reduction::Rightmost).word(&w).unwrap();
        let oracle = oracle_normal_form(a.ring(), &w, a.limits()).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(&left, &oracle);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn multiplication_is_associative(x in elem(), y in elem(), z in elem()) {
        let a = alg();
        let l = a.mul(&a.mul(&x, &y).unwrap(), &z).unwrap();
        let r = a.mul(&x, &a.mul(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn rho_is_multiplicative_of_order_four(x in elem(), y in elem()) {
        let a = alg();
        let xy = a.mul(&x, &y).unwrap();
        prop_assert_eq!(a.rho(&xy).unwrap(), a.mul(&a.rho(&x).unwrap(), &a.rho(&y).unwrap()).unwrap());
        prop_assert_eq!(a.rho_pow(&x, 4).unwrap(), x);
    }

    #[test]
    fn scaling_is_multiplicative(x in elem(), y in elem(), central in any::<bool>()) {
        let a = alg();
        let r = a.ring();
        let al = if central {
            [CentralUnit::one(r), CentralUnit::c(r, 0, -1), CentralUnit::one(r), CentralUnit::c(r, 2, -1)]
        } else {
            let s = |n: &str| CentralUnit::scalar(r.symbol(n).unwrap()).unwrap();
            [s("a"), s("b"), s("a").inverse().unwrap(), s("b")]
        };
        let g = |e: &BoxElem| a.scale_auto(&al, e).unwrap();
        prop_assert_eq!(g(&a.mul(&x, &y).unwrap()), a.mul(&g(&x), &g(&y)).unwrap());
    }

    #[test]
    fn even_words_are_normal(w in prop::collection::vec(prop::bool::ANY, 0..8), odd in any::<bool>()) {
        let a = alg();
        let letters: Vec<Gen> =
            w.iter().map(|&b| Gen::from_index(2 * b as i64 + odd as i64)).collect();
        let e = a.word(&letters).unwrap();
        prop_assert_eq!(e.num_terms(), 1);
        let (m, k) = e.terms().next().unwrap();
        prop_assert!(k.is_one());
        prop_assert_eq!(m.word(), letters);
    }

    #[test]
    fn grading_is_multiplicative(x in elem(), y in elem(), r in -3i64..=3, s in -3i64..=3) {
        let a = alg();
        let (xr, ys) = (pi(r, &x), pi(s, &y));
        let p = a.mul(&xr, &ys).unwrap();
        prop_assert!(degrees(&p).iter().all(|&d| d == r + s), "{:?}", degrees(&p));
    }

    #[test]
    fn projections_decompose(x in elem()) {
        let ds = degrees(&x);
        let mut sum = BoxElem::zero();
        for &n in &ds {
            let p = pi(n, &x);
            prop_assert_eq!(pi(n, &p), p.clone());
            for &m in ds.iter().filter(|&&m| m != n) {
                prop_assert!(pi(m, &p).is_zero());
            }
            sum += &p;
        }
        prop_assert_eq!(sum, x);
    }

    #[test]
    fn free_products_add_degrees(u in prop::collection::vec(any::<bool>(), 0..6), v in prop::collection::vec(any::<bool>(), 0..6)) {
        let ring = Ring::new(&[]);
        let word = |bs: &[bool]| FreeWord(bs.iter().map(|&b| if b { Letter::X } else { Letter::Y }).collect());
        let e = &FreeElem::term(word(&u), ring.q()) * &FreeElem::term(word(&v), ring.one());
        prop_assert_eq!(e.homogeneous_degree(), Some(u.len() + v.len()));
    }
}

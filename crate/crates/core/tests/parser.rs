//! The expression corpus round trip and parser robustness.

mod common;

use proptest::prelude::*;
use qdg::boxtilde::BoxAlgebra;
use qdg::expr::{self, Mode};
use qdg::qcoeff::Ring;
use qdg::Error;

#[test]
fn corpus_round_trips() {
    let alg = BoxAlgebra::standard();
    let free = Ring::new(&[]);
    let lines = common::corpus();
    assert_eq!(lines.len(), 50);
    for l in lines {
        common::round_trip(&alg, &free, l).unwrap();
    }
}

#[test]
fn spec_examples() {
    let alg = BoxAlgebra::standard();
    let e = |s: &str| expr::parse_box(&alg, s).unwrap();
    assert_eq!(e("x1*x0"), e("q^2*x0*x1 + (1-q^2)*c0"));
    assert_eq!(e("x0^3*x2 - qint(3)*x0^2*x2*x0 + qint(3)*x0*x2*x0^2 - x2*x0^3"), alg.s_element(0).unwrap());
    assert!(e("0").is_zero());
    assert_eq!(e("0").to_string(), "0");
    assert_eq!(expr::parse_scalar(alg.ring(), "qint(3)").unwrap().to_string(), "q^2 + 1 + q^-2");
    assert_eq!(e("-q^2"), alg.scalar(-alg.ring().q_pow(2)));
}

#[test]
fn mode_and_position_errors() {
    assert!(matches!(expr::parse("x0*y", Mode::Box), Err(Error::Mode { offset: 3, .. })));
    assert!(matches!(expr::parse("x*x0", Mode::Free), Err(Error::Mode { offset: 2, .. })));
    assert!(matches!(expr::parse("x0 x1", Mode::Box), Err(Error::Parse { offset: 3, .. })));
    assert!(matches!(expr::parse("x0^-1", Mode::Box), Err(Error::Parse { .. })));
    assert!(matches!(expr::parse("(x0", Mode::Box), Err(Error::Parse { offset: 3, .. })));
}

proptest! {
    #[test]
    fn arbitrary_input_never_panics(s in "[ -~]{0,40}") {
        for mode in [Mode::Box, Mode::Free, Mode::Scalar] {
            if let Err(e) = expr::parse(&s, mode) {
                match e {
                    Error::Parse { offset, .. } | Error::Mode { offset, .. } => prop_assert!(offset <= s.len()),
                    other => prop_assert!(false, "unexpected error {other}"),
                }
            }
        }
    }

    #[test]
    fn token_soup_never_panics(toks in prop::collection::vec(
        prop::sample::select(vec!["x0", "x3", "c1", "q", "a", "^", "-", "+", "*", "(", ")", "2", "-1", "qint(", "[", "|", "]", ".", "c0^2"]), 0..16)) {
        let s = toks.join("");
        let alg = BoxAlgebra::standard();
        let _ = expr::parse_box(&alg, &s);
    }
}

//! The free algebra T on two letters, the q-Serre elements, and the graded
//! dimensions of U⁺_q computed as 2ⁿ − rank of the degree-n relation span.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::qcoeff::{qint, LaurentPoly, Ring};
use crate::rank::{fraction_free_rank, rational_rank, SparseRow};

/// Default cap on the degree handled by [`dim_uplus`] (matrices up to 4096 columns).
pub const DEFAULT_DEGREE_CAP: usize = 12;

/// A standard generator of T. `X < Y` fixes the column order of rank matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn swap(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Letter::X => "x",
            Letter::Y => "y",
        }
    }
}

/// A word g₁g₂⋯gₙ in T; the empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord(pub Vec<Letter>);

impl FreeWord {
    pub fn empty() -> FreeWord {
        FreeWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        FreeWord(v)
    }

    /// All 2ⁿ words of length n in lexicographic order (x < y).
    pub fn all(n: usize) -> Vec<FreeWord> {
        (0..1usize << n).map(|i| FreeWord::from_index(i, n)).collect()
    }

    /// Position of this word among all words of its length.
    pub fn index(&self) -> usize {
        self.0.iter().fold(0, |acc, l| (acc << 1) | (*l == Letter::Y) as usize)
    }

    fn from_index(i: usize, n: usize) -> FreeWord {
        FreeWord((0..n).map(|k| if (i >> (n - 1 - k)) & 1 == 1 { Letter::Y } else { Letter::X }).collect())
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let names: Vec<_> = self.0.iter().map(|l| l.name()).collect();
        f.write_str(&names.join("*"))
    }
}

/// Element of T: a finite map from words to nonzero Laurent coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeElem {
    terms: BTreeMap<FreeWord, LaurentPoly>,
}

impl FreeElem {
    pub fn zero() -> FreeElem {
        FreeElem { terms: BTreeMap::new() }
    }

    pub fn term(word: FreeWord, coeff: LaurentPoly) -> FreeElem {
        let mut e = FreeElem::zero();
        e.add_term(word, coeff);
        e
    }

    pub fn scalar(coeff: LaurentPoly) -> FreeElem {
        FreeElem::term(FreeWord::empty(), coeff)
    }

    pub fn letter(ring: &Ring, l: Letter) -> FreeElem {
        FreeElem::term(FreeWord(vec![l]), ring.one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &FreeWord) -> Option<&LaurentPoly> {
        self.terms.get(w)
    }

    pub fn add_term(&mut self, word: FreeWord, coeff: LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&word) {
            Some(c) => {
                *c += &coeff;
                if c.is_zero() {
                    self.terms.remove(&word);
                }
            }
            None => {
                self.terms.insert(word, coeff);
            }
        }
    }

    /// The common length of all words, `None` when empty or mixed.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut lens = self.terms.keys().map(FreeWord::len);
        let first = lens.next()?;
        lens.all(|l| l == first).then_some(first)
    }

    /// Image under the automorphism exchanging x and y.
    pub fn swap_letters(&self) -> FreeElem {
        let mut out = FreeElem::zero();
        for (w, c) in &self.terms {
            out.add_term(FreeWord(w.0.iter().map(|l| l.swap()).collect()), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &LaurentPoly) -> FreeElem {
        let mut out = FreeElem::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * k);
        }
        out
    }

    /// w₁ · self · w₂
    pub fn sandwich(&self, left: &FreeWord, right: &FreeWord) -> FreeElem {
        FreeElem { terms: self.terms.iter().map(|(w, c)| (left.concat(w).concat(right), c.clone())).collect() }
    }

    pub fn pow(&self, ring: &Ring, n: u32) -> FreeElem {
        (0..n).fold(FreeElem::scalar(ring.one()), |acc, _| &acc * self)
    }
}

impl<'a> Add<&'a FreeElem> for &'a FreeElem {
    type Output = FreeElem;
    fn add(self, rhs: &FreeElem) -> FreeElem {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a FreeElem> for &'a FreeElem {
    type Output = FreeElem;
    fn sub(self, rhs: &FreeElem) -> FreeElem {
        self + &(-rhs)
    }
}

impl Neg for &FreeElem {
    type Output = FreeElem;
    fn neg(self) -> FreeElem {
        FreeElem { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl<'a> Mul<&'a FreeElem> for &'a FreeElem {
    type Output = FreeElem;
    fn mul(self, rhs: &FreeElem) -> FreeElem {
        let mut out = FreeElem::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for FreeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            crate::boxtilde::write_term(f, i == 0, c, &w.to_string(), w.is_empty())?;
        }
        Ok(())
    }
}

/// The q-Serre elements (S_x, S_y) of T.
pub fn serre_elements(ring: &Ring) -> (FreeElem, FreeElem) {
    use Letter::{X, Y};
    let q3 = qint(ring, 3);
    let one = ring.one();
    let sx_terms = [
        (vec![X, X, X, Y], one.clone()),
        (vec![X, X, Y, X], -&q3),
        (vec![X, Y, X, X], q3.clone()),
        (vec![Y, X, X, X], -&one),
    ];
    let mut sx = FreeElem::zero();
    for (w, c) in sx_terms {
        sx.add_term(FreeWord(w), c);
    }
    let sy = sx.swap_letters();
    (sx, sy)
}

/// Spanning set {w₁·S_g·w₂ : |w₁| + |w₂| = n − 4} of the degree-n part of the
/// two-sided ideal generated by S_x and S_y; empty for n ≤ 3.
pub fn relation_span(ring: &Ring, n: usize) -> Vec<FreeElem> {
    if n < 4 {
        return Vec::new();
    }
    let (sx, sy) = serre_elements(ring);
    let mut out = Vec::new();
    for s in [&sx, &sy] {
        for left_len in 0..=n - 4 {
            let lefts = FreeWord::all(left_len);
            let rights = FreeWord::all(n - 4 - left_len);
            for l in &lefts {
                for r in &rights {
                    out.push(s.sandwich(l, r));
                }
            }
        }
    }
    out
}

fn rows_to_matrix(rows: &[FreeElem], n: usize) -> Result<Vec<SparseRow>> {
    let mut out = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        if row.is_zero() {
            continue;
        }
        if row.homogeneous_degree() != Some(n) {
            return Err(Error::NonHomogeneous { row: i, degree: n });
        }
        out.push(row.terms().map(|(w, c)| (w.index(), c.clone())).collect());
    }
    Ok(out)
}

/// Rank over the fraction field of the coefficient ring of the matrix whose
/// rows are the coefficient vectors of `rows` in the basis of length-n words.
pub fn rank_over_fraction_field(rows: &[FreeElem], n: usize) -> Result<usize> {
    let mut matrix = rows_to_matrix(rows, n)?;
    // Clear each row to polynomial form by a monomial shift.
    for row in &mut matrix {
        let mut min: Option<Vec<i64>> = None;
        for c in row.values() {
            let m = c.min_exponents().unwrap();
            min = Some(match min {
                None => m,
                Some(prev) => prev.iter().zip(&m).map(|(a, b)| (*a).min(*b)).collect(),
            });
        }
        if let Some(min) = min {
            let by: Vec<i64> = min.iter().map(|x| -x).collect();
            for c in row.values_mut() {
                *c = c.shift(&by);
            }
        }
    }
    Ok(fraction_free_rank(matrix))
}

/// Rank of the same matrix with every symbol replaced by the given rational value.
pub fn specialized_rank(rows: &[FreeElem], n: usize, point: &[BigRational]) -> Result<usize> {
    let matrix = rows_to_matrix(rows, n)?;
    let mut spec = Vec::with_capacity(matrix.len());
    for row in matrix {
        let mut r = BTreeMap::new();
        for (col, c) in row {
            let v = c.specialize(point)?;
            if v != BigRational::default() {
                r.insert(col, v);
            }
        }
        spec.push(r);
    }
    Ok(rational_rank(spec))
}

/// A random rational point with every value nonzero and q² ≠ 1.
pub fn random_point(ring: &Ring, rng: &mut impl Rng) -> Vec<BigRational> {
    (0..ring.width())
        .map(|_| loop {
            let num: i64 = rng.gen_range(-40..=40);
            let den: i64 = rng.gen_range(1..=40);
            let v = BigRational::new(BigInt::from(num), BigInt::from(den));
            let one = BigRational::from_integer(1.into());
            if num != 0 && v.abs() != one {
                break v;
            }
        })
        .collect()
}

/// Maximum of the specialized ranks at `samples` seeded random points.
pub fn max_specialized_rank(rows: &[FreeElem], n: usize, ring: &Ring, samples: usize, seed: u64) -> Result<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0;
    for _ in 0..samples {
        let pt = random_point(ring, &mut rng);
        best = best.max(specialized_rank(rows, n, &pt)?);
    }
    Ok(best)
}

/// dim U⁺ₙ = 2ⁿ − rank of the degree-n relation span.
pub fn dim_uplus(ring: &Ring, n: usize, cap: usize) -> Result<usize> {
    if n > cap {
        return Err(Error::DegreeCap { n, cap });
    }
    let rank = rank_over_fraction_field(&relation_span(ring, n), n)?;
    Ok((1usize << n) - rank)
}

/// One row of the graded-dimension table.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DimRow {
    pub n: usize,
    pub words: usize,
    pub rank: usize,
    pub dim: usize,
    /// Maximum rank over the random rational specializations.
    pub specialized_rank: usize,
}

/// Number of random specializations used for the rank cross-check.
pub const CROSS_CHECK_SAMPLES: usize = 3;

/// Graded dimensions for degrees 0..=max with the specialization cross-check.
pub fn dims_table(ring: &Ring, max: usize, cap: usize, seed: u64) -> Result<Vec<DimRow>> {
    if max > cap {
        return Err(Error::DegreeCap { n: max, cap });
    }
    (0..=max)
        .map(|n| {
            let rows = relation_span(ring, n);
            let rank = rank_over_fraction_field(&rows, n)?;
            let specialized_rank =
                max_specialized_rank(&rows, n, ring, CROSS_CHECK_SAMPLES, seed.wrapping_add(n as u64))?;
            Ok(DimRow { n, words: 1 << n, rank, dim: (1 << n) - rank, specialized_rank })
        })
        .collect()
}

//! Exact rank of sparse matrices over ℤ[q^{±1}, …] (fraction-free) and over ℚ.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::qcoeff::LaurentPoly;

/// Sparse row: column index → nonzero entry.
pub type SparseRow = BTreeMap<usize, LaurentPoly>;

/// Rank over the fraction field by Bareiss elimination with complete pivoting.
///
/// After step k every live entry is a (k+1)-minor of the input, so dividing
/// by the previous pivot is exact. Pivots are chosen deterministically,
/// preferring units and short entries so that the minors stay small.
pub fn fraction_free_rank(rows: Vec<SparseRow>) -> usize {
    let mut active: Vec<SparseRow> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    let mut prev: Option<LaurentPoly> = None;
    let mut rank = 0;
    while !active.is_empty() {
        let (ri, col) = choose_pivot(&active);
        let pivot_row = active.remove(ri);
        let p = pivot_row[&col].clone();
        for row in active.iter_mut() {
            let a = row.remove(&col);
            let mut next: SparseRow = BTreeMap::new();
            for (c, v) in row.iter() {
                next.insert(*c, &p * v);
            }
            if let Some(a) = a {
                for (c, v) in &pivot_row {
                    if *c == col {
                        continue;
                    }
                    let t = &a * v;
                    match next.get_mut(c) {
                        Some(e) => *e -= &t,
                        None => {
                            next.insert(*c, -t);
                        }
                    }
                }
            }
            next.retain(|_, v| !v.is_zero());
            if let Some(d) = &prev {
                for v in next.values_mut() {
                    *v = v.div_exact(d).expect("Bareiss division is exact");
                }
            }
            *row = next;
        }
        active.retain(|r| !r.is_empty());
        prev = Some(p);
        rank += 1;
    }
    rank
}

/// Non-units last, then fewer terms, shorter rows, lower column, lower row.
type PivotKey = (bool, usize, usize, usize, usize);

fn choose_pivot(rows: &[SparseRow]) -> (usize, usize) {
    let mut best: Option<(PivotKey, (usize, usize))> = None;
    for (ri, row) in rows.iter().enumerate() {
        for (col, v) in row {
            let key = (!v.is_unit(), v.num_terms(), row.len(), *col, ri);
            if best.as_ref().is_none_or(|(k, _)| key < *k) {
                best = Some((key, (ri, *col)));
            }
        }
    }
    best.expect("nonempty matrix").1
}

/// Rank over ℚ by sparse Gaussian elimination into an echelon basis.
pub fn rational_rank(rows: Vec<BTreeMap<usize, BigRational>>) -> usize {
    let mut basis: BTreeMap<usize, BTreeMap<usize, BigRational>> = BTreeMap::new();
    for mut row in rows {
        row.retain(|_, v| !v.is_zero());
        while let Some((&lead, lead_val)) = row.iter().next() {
            match basis.get(&lead) {
                Some(b) => {
                    let factor = lead_val.clone();
                    for (c, v) in b {
                        let t = &factor * v;
                        let e = row.entry(*c).or_insert_with(BigRational::zero);
                        *e -= t;
                        if e.is_zero() {
                            row.remove(c);
                        }
                    }
                }
                None => {
                    let inv = lead_val.recip();
                    let normalized = row.iter().map(|(c, v)| (*c, v * &inv)).collect();
                    basis.insert(lead, normalized);
                    break;
                }
            }
        }
    }
    basis.len()
}

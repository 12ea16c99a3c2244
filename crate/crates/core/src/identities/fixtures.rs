//! Loader for the embedded coefficient tables.

use crate::boxtilde::{BoxAlgebra, BoxElem, NormalMono};
use crate::error::{Error, Result};
use crate::expr::{self, Expr, Mode};
use crate::qcoeff::{LaurentPoly, Ring};

pub const TABLES: &str = include_str!("tables.txt");

/// Normal forms of several elements given term by term.
#[derive(Clone, Debug)]
pub struct CoeffTable {
    pub name: String,
    pub source: String,
    pub columns: Vec<(String, Expr)>,
    pub rows: Vec<(NormalMono, Vec<LaurentPoly>)>,
}

/// A product of two weighted sums written out cell by cell.
#[derive(Clone, Debug)]
pub struct GridTable {
    pub name: String,
    pub source: String,
    pub total: Expr,
    pub col_weights: Vec<LaurentPoly>,
    pub col_terms: Vec<Expr>,
    pub rows: Vec<GridRow>,
}

#[derive(Clone, Debug)]
pub struct GridRow {
    pub weight: LaurentPoly,
    pub term: Expr,
    pub cells: Vec<Expr>,
}

#[derive(Clone, Debug)]
pub enum Table {
    Coeff(CoeffTable),
    Grid(GridTable),
}

impl Table {
    pub fn name(&self) -> &str {
        match self {
            Table::Coeff(t) => &t.name,
            Table::Grid(t) => &t.name,
        }
    }

    pub fn source(&self) -> &str {
        match self {
            Table::Coeff(t) => &t.source,
            Table::Grid(t) => &t.source,
        }
    }
}

impl CoeffTable {
    /// Σ_rows coefficient · term for column j.
    pub fn expected(&self, j: usize) -> BoxElem {
        self.rows.iter().map(|(m, cs)| (m.clone(), cs[j].clone())).collect()
    }

    /// Per column: computed normal form minus the tabulated expansion.
    pub fn differences(&self, alg: &BoxAlgebra) -> Result<Vec<BoxElem>> {
        (0..self.columns.len()).map(|j| Ok(&expr::eval_box(alg, &self.columns[j].1)? - &self.expected(j))).collect()
    }
}

impl GridTable {
    /// Cell-wise differences `cell − row·column`, then the weighted total.
    pub fn differences(&self, alg: &BoxAlgebra) -> Result<Vec<BoxElem>> {
        let cols: Vec<BoxElem> = self.col_terms.iter().map(|e| expr::eval_box(alg, e)).collect::<Result<_>>()?;
        let mut out = Vec::new();
        let mut sum = BoxElem::zero();
        for row in &self.rows {
            let r = expr::eval_box(alg, &row.term)?;
            for (j, cell) in row.cells.iter().enumerate() {
                let c = expr::eval_box(alg, cell)?;
                out.push(&c - &alg.mul(&r, &cols[j])?);
                sum += &c.scale(&(&row.weight * &self.col_weights[j]));
            }
        }
        out.push(&expr::eval_box(alg, &self.total)? - &sum);
        Ok(out)
    }
}

fn err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Fixture(format!("line {}: {msg}", line + 1))
}

fn split_list(s: &str) -> Vec<&str> {
    s.split(';').map(str::trim).collect()
}

fn scalars(ring: &Ring, line: usize, s: &str) -> Result<Vec<LaurentPoly>> {
    split_list(s).into_iter().map(|c| expr::parse_scalar(ring, c).map_err(|e| err(line, e))).collect()
}

fn exprs(line: usize, s: &str) -> Result<Vec<Expr>> {
    split_list(s).into_iter().map(|c| expr::parse(c, Mode::Box).map_err(|e| err(line, e))).collect()
}

#[derive(Default)]
struct Pending {
    kind: &'static str,
    name: String,
    source: String,
    columns: Vec<(String, Expr)>,
    coeff_rows: Vec<(NormalMono, Vec<LaurentPoly>)>,
    total: Option<Expr>,
    weights: Vec<LaurentPoly>,
    terms: Vec<Expr>,
    grid_rows: Vec<GridRow>,
}

/// Parse table text against `ring`.
pub fn parse_tables(ring: &Ring, text: &str) -> Result<Vec<Table>> {
    let mut out = Vec::new();
    let mut cur: Option<Pending> = None;
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, rest) = line.split_once(' ').unwrap_or((line, ""));
        let rest = rest.trim();
        match (key, cur.as_mut()) {
            ("table" | "grid", None) => {
                let kind = if key == "table" { "table" } else { "grid" };
                cur = Some(Pending { kind, name: rest.to_string(), ..Default::default() });
            }
            ("source", Some(p)) => p.source = rest.to_string(),
            ("columns", Some(p)) if p.kind == "table" => {
                p.columns = split_list(rest)
                    .into_iter()
                    .map(|c| Ok((c.to_string(), expr::parse(c, Mode::Box).map_err(|e| err(ln, e))?)))
                    .collect::<Result<_>>()?;
            }
            ("total", Some(p)) if p.kind == "grid" => {
                p.total = Some(expr::parse(rest, Mode::Box).map_err(|e| err(ln, e))?);
            }
            ("weights", Some(p)) if p.kind == "grid" => p.weights = scalars(ring, ln, rest)?,
            ("terms", Some(p)) if p.kind == "grid" => p.terms = exprs(ln, rest)?,
            ("row", Some(p)) => {
                let (head, body) = rest.split_once(':').ok_or_else(|| err(ln, "row without ':'"))?;
                if p.kind == "table" {
                    let m = match expr::parse(head.trim(), Mode::Box).map_err(|e| err(ln, e))? {
                        Expr::Mono(m) => m,
                        _ => return Err(err(ln, "row term must be a bracket monomial")),
                    };
                    let cs = scalars(ring, ln, body)?;
                    if cs.len() != p.columns.len() {
                        return Err(err(ln, format!("{} coefficients for {} columns", cs.len(), p.columns.len())));
                    }
                    p.coeff_rows.push((m, cs));
                } else {
                    let (w, t) = head.split_once(',').ok_or_else(|| err(ln, "grid row needs `weight, term`"))?;
                    let weight = expr::parse_scalar(ring, w.trim()).map_err(|e| err(ln, e))?;
                    let term = expr::parse(t.trim(), Mode::Box).map_err(|e| err(ln, e))?;
                    let cells = exprs(ln, body)?;
                    if cells.len() != p.terms.len() || p.weights.len() != p.terms.len() {
                        return Err(err(ln, "grid row length does not match the column terms"));
                    }
                    p.grid_rows.push(GridRow { weight, term, cells });
                }
            }
            ("end", Some(_)) => {
                let p = cur.take().expect("open table");
                out.push(if p.kind == "table" {
                    Table::Coeff(CoeffTable { name: p.name, source: p.source, columns: p.columns, rows: p.coeff_rows })
                } else {
                    Table::Grid(GridTable {
                        name: p.name,
                        source: p.source,
                        total: p.total.ok_or_else(|| err(ln, "grid without total"))?,
                        col_weights: p.weights,
                        col_terms: p.terms,
                        rows: p.grid_rows,
                    })
                });
            }
            _ => return Err(err(ln, format!("unexpected `{key}`"))),
        }
    }
    if cur.is_some() {
        return Err(Error::Fixture("unterminated table".into()));
    }
    let mut names: Vec<&str> = out.iter().map(Table::name).collect();
    names.sort_unstable();
    if names.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Fixture("duplicate table name".into()));
    }
    Ok(out)
}

/// The embedded tables.
pub fn load(ring: &Ring) -> Result<Vec<Table>> {
    parse_tables(ring, TABLES)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_tables_load() {
        let ring = Ring::standard();
        let ts = load(&ring).unwrap();
        assert_eq!(ts.len(), 22);
        let expand = ts.iter().find(|t| t.name() == "expand").unwrap();
        match expand {
            Table::Coeff(t) => {
                assert_eq!(t.columns.len(), 4);
                assert_eq!(t.rows.len(), 34);
            }
            _ => panic!("expand is a coefficient table"),
        }
    }

    #[test]
    fn malformed_input() {
        let ring = Ring::standard();
        assert!(parse_tables(&ring, "table t\ncolumns x0\nrow [x0 | - | -] : 1 ; 2\nend\n").is_err());
        assert!(parse_tables(&ring, "table t\ncolumns x0\n").is_err());
        assert!(parse_tables(&ring, "row [x0 | - | -] : 1\n").is_err());
    }
}

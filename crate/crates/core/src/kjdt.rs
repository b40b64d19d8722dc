//! Reverse K-theoretic jeu de taquin inside a rectangle, and the left key
//! of an increasing tableau.
//!
//! A slide places bullets in a set of outer corners. Then for each label
//! `v` from the largest down to 1, the cells holding a bullet or `v` form a
//! short ribbon; inside every connected component of that ribbon with at
//! least two boxes, bullets and `v`s trade places. The bullets are erased
//! at the end.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::tableaux::{Composition, Tableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cell {
    Empty,
    Bullet,
    Label(u32),
}

/// A partial filling of an `rows x cols` rectangle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SlideState {
    rows: usize,
    cols: usize,
    cells: Vec<Cell>,
}

impl SlideState {
    pub fn empty(rows: usize, cols: usize) -> Self {
        SlideState {
            rows,
            cols,
            cells: vec![Cell::Empty; rows * cols],
        }
    }

    /// A straight tableau placed in the top-left corner of the rectangle.
    pub fn from_tableau(t: &Tableau, rows: usize, cols: usize) -> Result<Self> {
        if t.rows().len() > rows || t.num_cols() > cols {
            return Err(Error::input(format!(
                "tableau {t} does not fit in a {rows}x{cols} rectangle"
            )));
        }
        let mut s = SlideState::empty(rows, cols);
        for (r, c, v) in t.cells() {
            s.set(r, c, Cell::Label(v));
        }
        Ok(s)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Cell {
        self.cells[r * self.cols + c]
    }

    fn set(&mut self, r: usize, c: usize, v: Cell) {
        self.cells[r * self.cols + c] = v;
    }

    fn positions(&self) -> impl Iterator<Item = (usize, usize)> {
        let cols = self.cols;
        (0..self.rows * cols).map(move |i| (i / cols, i % cols))
    }

    pub fn labels(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.positions().filter_map(|(r, c)| match self.get(r, c) {
            Cell::Label(v) => Some((r, c, v)),
            _ => None,
        })
    }

    pub fn has_bullets(&self) -> bool {
        self.cells.contains(&Cell::Bullet)
    }

    pub fn max_label(&self) -> u32 {
        self.labels().map(|(_, _, v)| v).max().unwrap_or(0)
    }

    /// Labels read row by row from the bottom row up, left to right.
    pub fn reading_word(&self) -> Vec<u32> {
        (0..self.rows)
            .rev()
            .flat_map(|r| (0..self.cols).map(move |c| (r, c)))
            .filter_map(|(r, c)| match self.get(r, c) {
                Cell::Label(v) => Some(v),
                _ => None,
            })
            .collect()
    }

    pub fn lds(&self) -> usize {
        crate::tableaux::lds(&self.reading_word())
    }

    /// Labels strictly increase along every row and down every column.
    pub fn is_increasing(&self) -> bool {
        let line_ok = |line: Vec<u32>| line.windows(2).all(|w| w[0] < w[1]);
        let row = |r: usize| {
            (0..self.cols)
                .filter_map(|c| match self.get(r, c) {
                    Cell::Label(v) => Some(v),
                    _ => None,
                })
                .collect::<Vec<_>>()
        };
        let col = |c: usize| {
            (0..self.rows)
                .filter_map(|r| match self.get(r, c) {
                    Cell::Label(v) => Some(v),
                    _ => None,
                })
                .collect::<Vec<_>>()
        };
        (0..self.rows).all(|r| line_ok(row(r))) && (0..self.cols).all(|c| line_ok(col(c)))
    }

    /// `lambda[r]`: row lengths of the largest Young diagram of unlabelled
    /// cells (the inner shape of the skew filling).
    fn inner_shape(&self) -> Vec<usize> {
        let mut lam = vec![0; self.rows];
        let mut bound = self.cols;
        for (r, len) in lam.iter_mut().enumerate() {
            let first_label = (0..self.cols)
                .find(|&c| matches!(self.get(r, c), Cell::Label(_)))
                .unwrap_or(self.cols);
            bound = bound.min(first_label);
            *len = bound;
        }
        lam
    }

    /// `nu[r]`: row lengths of the outer shape, the inner shape together
    /// with every cell weakly northwest of a label.
    fn outer_shape(&self) -> Vec<usize> {
        let mut nu = self.inner_shape();
        for (r, c, _) in self.labels() {
            nu[r] = nu[r].max(c + 1);
        }
        for r in (0..self.rows.saturating_sub(1)).rev() {
            nu[r] = nu[r].max(nu[r + 1]);
        }
        nu
    }

    /// The minimal cells of the rectangle outside the outer shape: cells
    /// whose north and west neighbours lie in the outer shape or outside
    /// the rectangle. Sorted by column.
    pub fn outer_corners(&self) -> Vec<(usize, usize)> {
        let nu = self.outer_shape();
        let mut out: Vec<(usize, usize)> = (0..self.rows)
            .filter(|&r| nu[r] < self.cols && (r == 0 || nu[r - 1] > nu[r]))
            .map(|r| (r, nu[r]))
            .collect();
        out.sort_by_key(|&(_, c)| c);
        out
    }

    /// The labels fill exactly the complement of the inner shape: a
    /// bottom-right justified diagram.
    pub fn is_reverse_straight(&self) -> bool {
        let lam = self.inner_shape();
        !self.has_bullets()
            && self
                .positions()
                .all(|(r, c)| matches!(self.get(r, c), Cell::Label(_)) == (c >= lam[r]))
    }

    /// One reverse K-jeu-de-taquin slide into `corners`.
    pub fn rev_kjdt(&self, corners: &[(usize, usize)]) -> Result<SlideState> {
        let mut s = self.rev_kjdt_switches(corners)?.pop().unwrap();
        for cell in &mut s.cells {
            if *cell == Cell::Bullet {
                *cell = Cell::Empty;
            }
        }
        Ok(s)
    }

    /// The states of one slide with bullets still in place: the start with
    /// bullets at `corners`, then the state after every switch that moved
    /// something.
    pub fn rev_kjdt_switches(&self, corners: &[(usize, usize)]) -> Result<Vec<SlideState>> {
        if self.has_bullets() {
            return Err(Error::input("slide state already holds bullets"));
        }
        if corners.is_empty() {
            return Err(Error::input("a slide needs at least one outer corner"));
        }
        let outer = self.outer_corners();
        if let Some(bad) = corners.iter().find(|x| !outer.contains(x)) {
            return Err(Error::input(format!(
                "cell {bad:?} is not an outer corner (outer corners: {outer:?})"
            )));
        }
        let mut s = self.clone();
        for &(r, c) in corners {
            s.set(r, c, Cell::Bullet);
        }
        let mut states = vec![s.clone()];
        for v in (1..=self.max_label()).rev() {
            s.switch_ribbon(v)?;
            if s != *states.last().unwrap() {
                states.push(s.clone());
            }
        }
        Ok(states)
    }

    /// Apply `switch` to the short ribbon of bullets and `v`s.
    fn switch_ribbon(&mut self, v: u32) -> Result<()> {
        let label = Cell::Label(v);
        let ribbon: BTreeSet<(usize, usize)> = self
            .positions()
            .filter(|&(r, c)| matches!(self.get(r, c), Cell::Bullet) || self.get(r, c) == label)
            .collect();
        self.check_short_ribbon(&ribbon)?;
        let mut seen = BTreeSet::new();
        for &start in &ribbon {
            if !seen.insert(start) {
                continue;
            }
            let mut component = vec![start];
            let mut i = 0;
            while i < component.len() {
                let (r, c) = component[i];
                i += 1;
                for nb in neighbours(r, c) {
                    if ribbon.contains(&nb) && seen.insert(nb) {
                        component.push(nb);
                    }
                }
            }
            if component.len() > 1 {
                for (r, c) in component {
                    let flipped = if self.get(r, c) == Cell::Bullet {
                        label
                    } else {
                        Cell::Bullet
                    };
                    self.set(r, c, flipped);
                }
            }
        }
        Ok(())
    }

    fn check_short_ribbon(&self, ribbon: &BTreeSet<(usize, usize)>) -> Result<()> {
        for &(r, c) in ribbon {
            let block = [(r, c), (r, c + 1), (r + 1, c), (r + 1, c + 1)];
            if block.iter().all(|x| ribbon.contains(x)) {
                return Err(Error::Ribbon {
                    reason: "contains a 2x2 block",
                    cells: block.to_vec(),
                });
            }
            for nb in [(r, c + 1), (r + 1, c)] {
                if ribbon.contains(&nb) && self.get(r, c) == self.get(nb.0, nb.1) {
                    return Err(Error::Ribbon {
                        reason: "adjacent boxes hold the same symbol",
                        cells: vec![(r, c), nb],
                    });
                }
            }
        }
        for r in 0..self.rows {
            let row: Vec<_> = ribbon.iter().filter(|x| x.0 == r).copied().collect();
            if row.len() > 2 {
                return Err(Error::Ribbon {
                    reason: "more than two boxes in a row",
                    cells: row,
                });
            }
        }
        for c in 0..self.cols {
            let col: Vec<_> = ribbon.iter().filter(|x| x.1 == c).copied().collect();
            if col.len() > 2 {
                return Err(Error::Ribbon {
                    reason: "more than two boxes in a column",
                    cells: col,
                });
            }
        }
        Ok(())
    }

    /// Slide into the leftmost outer corner until reverse straight.
    pub fn rev_krect_leftmost(&self) -> SlideState {
        self.rev_krect_leftmost_trace().pop().unwrap()
    }

    /// Every state visited by [`SlideState::rev_krect_leftmost`], starting
    /// with `self`.
    pub fn rev_krect_leftmost_trace(&self) -> Vec<SlideState> {
        let cap = (self.rows * self.cols).pow(2);
        let mut trace = vec![self.clone()];
        let mut cur = self.clone();
        while !cur.is_reverse_straight() {
            assert!(trace.len() <= cap, "reverse rectification exceeded {cap} slides");
            let corner = *cur
                .outer_corners()
                .first()
                .expect("a state that is not reverse straight has an outer corner");
            cur = cur
                .rev_kjdt(&[corner])
                .unwrap_or_else(|e| panic!("slide from {cur} failed: {e}"));
            assert!(cur.is_increasing(), "slide produced a non-increasing state {cur}");
            trace.push(cur.clone());
        }
        trace
    }

    /// Labels of column `c`, top to bottom.
    pub fn column_labels(&self, c: usize) -> Vec<u32> {
        (0..self.rows)
            .filter_map(|r| match self.get(r, c) {
                Cell::Label(v) => Some(v),
                _ => None,
            })
            .collect()
    }

    /// `{"shape": [cols, ...], "rows": [[null | label | "•", ...], ...]}`.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = (0..self.rows)
            .map(|r| {
                Value::Array(
                    (0..self.cols)
                        .map(|c| match self.get(r, c) {
                            Cell::Empty => Value::Null,
                            Cell::Bullet => json!("•"),
                            Cell::Label(v) => json!(v),
                        })
                        .collect(),
                )
            })
            .collect();
        json!({ "shape": vec![self.cols; self.rows], "rows": rows })
    }
}

fn neighbours(r: usize, c: usize) -> impl Iterator<Item = (usize, usize)> {
    let mut v = vec![(r + 1, c), (r, c + 1)];
    if r > 0 {
        v.push((r - 1, c));
    }
    if c > 0 {
        v.push((r, c - 1));
    }
    v.into_iter()
}

/// Rows separated by `/`, cells by `,`; `.` is empty and `*` a bullet.
impl fmt::Display for SlideState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                f.write_str("/")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(",")?;
                }
                match self.get(r, c) {
                    Cell::Empty => f.write_str(".")?,
                    Cell::Bullet => f.write_str("*")?,
                    Cell::Label(v) => write!(f, "{v}")?,
                }
            }
        }
        Ok(())
    }
}

impl FromStr for SlideState {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let grid: Vec<Vec<Cell>> = s
            .trim()
            .split('/')
            .map(|row| {
                row.split(',')
                    .map(|t| match t.trim() {
                        "." => Ok(Cell::Empty),
                        "*" | "•" => Ok(Cell::Bullet),
                        x => x
                            .parse::<u32>()
                            .ok()
                            .filter(|&v| v > 0)
                            .map(Cell::Label)
                            .ok_or_else(|| Error::parse(format!("bad cell {x:?}"))),
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        let cols = grid[0].len();
        if grid.iter().any(|r| r.len() != cols) {
            return Err(Error::parse("slide state rows must have equal length"));
        }
        Ok(SlideState {
            rows: grid.len(),
            cols,
            cells: grid.into_iter().flatten().collect(),
        })
    }
}

/// The left key of a straight increasing tableau `p`.
///
/// Column 1 is copied from `p`. Column `l+1` is the leftmost column of the
/// leftmost-corner reverse rectification of the first `l+1` columns of `p`
/// inside the `(height of column 1) x (l+1)` rectangle.
pub fn left_key(p: &Tableau) -> Tableau {
    let cols = p.columns();
    let Some(first) = cols.first() else {
        return Tableau::default();
    };
    let height = first.len();
    let mut key_cols = vec![first.clone()];
    for l in 1..cols.len() {
        let state = SlideState::from_tableau(&p.leading_columns(l + 1), height, l + 1)
            .expect("leading columns fit their bounding rectangle");
        let rect = state.rev_krect_leftmost();
        let column = rect.column_labels(0);
        assert_eq!(
            column.len(),
            cols[l].len(),
            "left key column {} of {p} has the wrong length",
            l + 1
        );
        key_cols.push(column);
    }
    let key = Tableau::from_columns(&key_cols).expect("left key columns weakly shorten");
    assert!(key.is_key(), "left key {key} of {p} is not a key");
    key
}

pub fn left_key_content(p: &Tableau) -> Composition {
    left_key(p).content()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(s: &str) -> SlideState {
        s.parse().unwrap()
    }

    fn tab(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn outer_corner_examples() {
        let s = st(".,.,2/.,2,./1,.,./.,.,.");
        assert_eq!(s.outer_corners(), vec![(3, 0), (2, 1), (1, 2)]);
        assert!(st("1,2/2,3").outer_corners().is_empty());
        assert!(st(".").outer_corners().is_empty());
        assert!(st(".").is_reverse_straight());

        // the vacated cell (1,0) belongs to the inner shape
        let s = st(".,1/.,.");
        assert_eq!(s.outer_corners(), vec![(1, 1)]);
        assert!(!s.is_reverse_straight());
        assert_eq!(s.rev_krect_leftmost(), st(".,./.,1"));
    }

    #[test]
    fn switch_ribbon_example() {
        // bullets and 5s standing in for the two symbols
        let mut s = st(".,.,.,5/.,5,*,./5,*,.,.");
        s.switch_ribbon(5).unwrap();
        assert_eq!(s, st(".,.,.,5/.,*,5,./*,5,.,."));

        let mut s = st("5");
        s.switch_ribbon(5).unwrap();
        assert_eq!(s, st("5"));

        let mut s = st("5/*");
        s.switch_ribbon(5).unwrap();
        assert_eq!(s, st("*/5"));
    }

    #[test]
    fn switch_rejects_non_ribbons() {
        let mut s = st("5,*/*,5");
        assert!(matches!(s.switch_ribbon(5), Err(Error::Ribbon { .. })));
        let mut s = st("*,5,*");
        assert!(matches!(s.switch_ribbon(5), Err(Error::Ribbon { .. })));
        let mut s = st("5,5");
        assert!(matches!(s.switch_ribbon(5), Err(Error::Ribbon { .. })));
    }

    #[test]
    fn worked_three_corner_slide() {
        let s = st(".,.,2/.,2,./1,.,./.,.,.");
        let corners = s.outer_corners();
        let out = s.rev_kjdt(&corners).unwrap();
        assert_eq!(out, st(".,.,./.,.,2/.,2,./1,.,."));
    }

    #[test]
    fn slide_single_label() {
        let s = st("1,.,./.,.,.");
        assert_eq!(s.outer_corners(), vec![(1, 0), (0, 1)]);
        assert_eq!(s.rev_kjdt(&[(0, 1)]).unwrap(), st(".,1,./.,.,."));
        assert_eq!(s.rev_kjdt(&[(1, 0)]).unwrap(), st(".,.,./1,.,."));
        assert!(s.rev_kjdt(&[(1, 1)]).is_err());
        assert!(s.rev_kjdt(&[]).is_err());
    }

    #[test]
    fn two_by_two_trace() {
        let s = SlideState::from_tableau(&tab("1,2/2"), 2, 2).unwrap();
        assert_eq!(s.outer_corners(), vec![(1, 1)]);
        let out = s.rev_kjdt(&[(1, 1)]).unwrap();
        assert_eq!(out, st(".,1/1,2"));
        assert_eq!(s.rev_krect_leftmost(), st(".,1/1,2"));
    }

    /// The continuation slides from the worked example, with the corner
    /// choices displayed there, end in the single row 1,2.
    #[test]
    fn worked_rectification_trace() {
        let mut s = st(".,.,./.,.,2/.,2,./1,.,.");
        for corner in [(2, 2), (3, 1), (3, 2)] {
            assert!(s.outer_corners().contains(&corner), "{corner:?} in {s}");
            s = s.rev_kjdt(&[corner]).unwrap();
        }
        assert_eq!(s, st(".,.,./.,.,./.,.,./.,1,2"));
        assert!(s.is_reverse_straight());
        assert_eq!(
            st(".,.,./.,.,2/.,2,./1,.,.").rev_krect_leftmost(),
            st(".,.,./.,.,./.,.,./.,1,2")
        );
    }

    #[test]
    fn already_straight_is_fixed() {
        let s = st(".,1/1,2");
        assert_eq!(s.rev_krect_leftmost_trace().len(), 1);
    }

    #[test]
    fn left_key_examples() {
        let p = tab("1,2,3,5,7/2,4,5,6/4,6");
        assert_eq!(left_key(&p), tab("1,1,1,1,2/2,2,2,2/4,4"));
        assert_eq!(left_key_content(&p), Composition::new(vec![4, 5, 0, 2]));
        assert_eq!(left_key(&tab("1,2/2")), tab("1,1/2"));
        assert_eq!(left_key_content(&tab("1,2/2")), Composition::new(vec![2, 1]));
        assert_eq!(left_key(&tab("1/3/4")), tab("1/3/4"));
        assert_eq!(left_key(&Tableau::default()), Tableau::default());
    }

    #[test]
    fn left_key_third_column_trace() {
        let s = SlideState::from_tableau(&tab("1,2,3/2,4,5/4,6"), 3, 3).unwrap();
        assert_eq!(s.outer_corners(), vec![(2, 2)]);
        let got: Vec<String> = s
            .rev_kjdt_switches(&[(2, 2)])
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        let expect = [
            "1,2,3/2,4,5/4,6,*",
            "1,2,3/2,4,5/4,*,6",
            "1,2,3/2,*,5/*,4,6",
            "1,*,3/*,2,5/2,4,6",
            "*,1,3/1,2,5/2,4,6",
        ];
        assert_eq!(got, expect);
        let trace = s.rev_krect_leftmost_trace();
        assert_eq!(trace.len(), 2);
        assert_eq!(trace[1], st(".,1,3/1,2,5/2,4,6"));
        assert_eq!(trace[1].column_labels(0), vec![1, 2]);
    }

    #[test]
    fn conjecture_example_contents() {
        let got: Vec<String> = ["1,2,4/3", "1,2/3,4", "1,2,4/3,4"]
            .iter()
            .map(|p| left_key_content(&tab(p)).to_string())
            .collect();
        assert_eq!(got, ["3,0,1", "2,0,2", "3,0,2"]);
    }

    #[test]
    fn json_trace_shape() {
        let v = st("*,1/.,2").to_json();
        assert_eq!(v.to_string(), r#"{"rows":[["•",1],[null,2]],"shape":[2,2]}"#);
    }
}

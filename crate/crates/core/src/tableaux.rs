//! Partitions, weak compositions and straight-shape tableaux, with the
//! enumerations the expansion formulas sum over.
//!
//! Cells are addressed `(row, col)`, 0-based, English convention (row 0 on
//! top). Labels are positive integers.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symgroup::{join, parse_list, Permutation, Word};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Trailing zeros are dropped; anything else out of order is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::input(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(n-1, n-2, ..., 1)`.
    pub fn staircase(n: usize) -> Self {
        Partition((1..n).rev().collect())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Column lengths.
    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (0..width)
                .map(|c| self.0.iter().filter(|&&r| r > c).count())
                .collect(),
        )
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Partitions of `d` with at most `max_len` parts, each at most
    /// `max_part`, in decreasing lexicographic order.
    pub fn of_size(d: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
        fn go(rem: usize, cap: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if left == 0 {
                return;
            }
            for p in (1..=cap.min(rem)).rev() {
                cur.push(p);
                go(rem - p, p, left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(d, max_part, max_len, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions contained in `self`, ordered by size, then in
    /// decreasing lexicographic order.
    pub fn subshapes(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for d in 0..=self.size() {
            out.extend(
                Partition::of_size(d, self.len(), self.0.first().copied().unwrap_or(0))
                    .into_iter()
                    .filter(|p| self.contains(p)),
            );
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0))
    }
}

/// A weak composition, stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(mut entries: Vec<usize>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        Composition(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// `alpha_i`, 1-based, zero past the end.
    pub fn at(&self, i: usize) -> usize {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Ascents `i` with `alpha_i < alpha_{i+1}`, 1-based.
    pub fn ascents(&self) -> Vec<usize> {
        (1..self.len()).filter(|&i| self.at(i) < self.at(i + 1)).collect()
    }

    /// `alpha s_i`: exchange entries `i` and `i+1`.
    pub fn swapped(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        if v.len() < i + 1 {
            v.resize(i + 1, 0);
        }
        v.swap(i - 1, i);
        Composition::new(v)
    }

    /// `(0^k, alpha)`.
    pub fn prepend_zeros(&self, k: usize) -> Self {
        let mut v = vec![0; k];
        v.extend(&self.0);
        Composition::new(v)
    }

    pub fn sort_to_partition(&self) -> Partition {
        let mut v: Vec<usize> = self.0.iter().copied().filter(|&a| a > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    /// Weak compositions of `d` with at most `len` entries (trailing zeros
    /// trimmed), in decreasing lexicographic order of the padded vectors.
    pub fn of_size(d: usize, len: usize) -> Vec<Composition> {
        fn go(rem: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if left == 1 {
                cur.push(rem);
                out.push(Composition::new(cur.clone()));
                cur.pop();
                return;
            }
            for a in (0..=rem).rev() {
                cur.push(a);
                go(rem - a, left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if len == 0 {
            if d == 0 {
                out.push(Composition::default());
            }
            return out;
        }
        go(d, len, &mut Vec::new(), &mut out);
        out
    }
}

impl From<Vec<usize>> for Composition {
    fn from(v: Vec<usize>) -> Self {
        Composition::new(v)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0))
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Composition::default());
        }
        Ok(Composition::new(parse_list(s)?))
    }
}

/// A straight-shape filling with positive labels. No ordering condition;
/// see [`IncreasingTableau`] and [`RowStrictTableau`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
pub struct TableauJson {
    pub shape: Vec<usize>,
    pub rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let rows: Vec<Vec<u32>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::input("row lengths must weakly decrease"));
        }
        if rows.iter().flatten().any(|&v| v == 0) {
            return Err(Error::input("labels must be positive"));
        }
        Ok(Tableau { rows })
    }

    /// Build from columns listed left to right, each top to bottom.
    pub fn from_columns(cols: &[Vec<u32>]) -> Result<Self> {
        let height = cols.first().map_or(0, Vec::len);
        let rows = (0..height)
            .map(|r| cols.iter().filter_map(|c| c.get(r).copied()).collect())
            .collect();
        Tableau::new(rows)
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> Option<u32> {
        self.rows.get(r).and_then(|row| row.get(c)).copied()
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(Vec::len).collect())
    }

    pub fn num_boxes(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn num_cols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        self.rows.iter().filter_map(|r| r.get(c).copied()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.num_cols()).map(|c| self.column(c)).collect()
    }

    /// The first `k` columns.
    pub fn leading_columns(&self, k: usize) -> Tableau {
        Tableau {
            rows: self
                .rows
                .iter()
                .map(|r| r[..r.len().min(k)].to_vec())
                .collect(),
        }
    }

    /// Columns from rightmost to leftmost, each read top to bottom.
    pub fn word(&self) -> Word {
        Word(
            self.columns()
                .into_iter()
                .rev()
                .flatten()
                .map(|v| v as usize)
                .collect(),
        )
    }

    /// Rows from bottom to top, each left to right.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Longest strictly decreasing subsequence of the reading word.
    pub fn lds(&self) -> usize {
        lds(&self.reading_word())
    }

    /// Entry `i` counts the occurrences of label `i`.
    pub fn content(&self) -> Composition {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut v = vec![0; max];
        for &l in self.rows.iter().flatten() {
            v[l as usize - 1] += 1;
        }
        Composition::new(v)
    }

    /// Column label sets are nested: each column's set is contained in the
    /// set of the column to its left.
    pub fn is_key(&self) -> bool {
        let sets: Vec<BTreeSet<u32>> = self
            .columns()
            .into_iter()
            .map(|c| c.into_iter().collect())
            .collect();
        sets.windows(2).all(|w| w[1].is_subset(&w[0]))
    }

    pub fn is_increasing(&self) -> bool {
        self.cells().all(|(r, c, v)| {
            (c == 0 || self.rows[r][c - 1] < v) && (r == 0 || self.rows[r - 1][c] < v)
        })
    }

    pub fn is_row_strict_column_weak(&self) -> bool {
        self.cells().all(|(r, c, v)| {
            (c == 0 || self.rows[r][c - 1] < v) && (r == 0 || self.rows[r - 1][c] <= v)
        })
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &v)| (r, c, v)))
    }

    pub fn to_json(&self) -> TableauJson {
        TableauJson {
            shape: self.shape().0,
            rows: self.rows.clone(),
        }
    }
}

/// Length of the longest strictly decreasing subsequence.
pub fn lds(word: &[u32]) -> usize {
    let mut best = vec![1usize; word.len()];
    for j in 0..word.len() {
        for i in 0..j {
            if word[i] > word[j] {
                best[j] = best[j].max(best[i] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// `1,2/2`: rows separated by `/`, cells by `,`.
impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| join(r)).collect();
        f.write_str(&rows.join("/"))
    }
}

impl FromStr for Tableau {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Tableau::default());
        }
        let rows = s
            .split('/')
            .map(|r| {
                parse_list(r).map(|v| v.into_iter().map(|x| x as u32).collect::<Vec<u32>>())
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(rows)
    }
}

/// A straight-shape tableau whose labels strictly increase along rows and
/// down columns. Labels may repeat in different rows and columns.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IncreasingTableau(Tableau);

impl IncreasingTableau {
    pub fn new(t: Tableau) -> Result<Self> {
        if let Some((r, c, v)) = t.cells().find(|&(r, c, v)| {
            (c > 0 && t.rows[r][c - 1] >= v) || (r > 0 && t.rows[r - 1][c] >= v)
        }) {
            return Err(Error::input(format!(
                "not increasing: label {v} at cell ({r}, {c}) does not exceed its left or upper neighbour"
            )));
        }
        Ok(IncreasingTableau(t))
    }

    pub fn into_inner(self) -> Tableau {
        self.0
    }
}

impl Deref for IncreasingTableau {
    type Target = Tableau;
    fn deref(&self) -> &Tableau {
        &self.0
    }
}

impl fmt::Display for IncreasingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for IncreasingTableau {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IncreasingTableau::new(s.parse()?)
    }
}

/// Rows strictly increase, columns weakly increase.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RowStrictTableau(Tableau);

impl RowStrictTableau {
    pub fn new(t: Tableau) -> Result<Self> {
        if !t.is_row_strict_column_weak() {
            return Err(Error::input(format!(
                "{t} is not row strict and column weak"
            )));
        }
        Ok(RowStrictTableau(t))
    }
}

impl Deref for RowStrictTableau {
    type Target = Tableau;
    fn deref(&self) -> &Tableau {
        &self.0
    }
}

/// Straight-shape filling by nonempty label sets such that every choice of
/// one label per cell is semistandard: `max(left) <= min(right)` along
/// rows and `max(above) < min(below)` down columns. Sets are sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetValuedTableau {
    rows: Vec<Vec<Vec<u32>>>,
}

impl SetValuedTableau {
    pub fn rows(&self) -> &[Vec<Vec<u32>>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(Vec::len).collect())
    }

    pub fn label_count(&self) -> usize {
        self.rows.iter().flatten().map(Vec::len).sum()
    }

    /// Exponent vector of `x^T` in `m` variables.
    pub fn weight(&self, m: usize) -> Vec<u32> {
        let mut w = vec![0; m];
        for &l in self.rows.iter().flatten().flatten() {
            w[l as usize - 1] += 1;
        }
        w
    }
}

/// `{1|2},{2}/{3}`.
impl fmt::Display for SetValuedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| {
                        let labels: Vec<String> = s.iter().map(u32::to_string).collect();
                        format!("{{{}}}", labels.join("|"))
                    })
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        f.write_str(&rows.join("/"))
    }
}

/// Row-major backtracking fill of `shape`. `choices(rows_so_far, r, c)`
/// lists the admissible values for cell `(r, c)` in order.
fn fill<T: Clone>(
    shape: &Partition,
    choices: &dyn Fn(&[Vec<T>], usize, usize) -> Vec<T>,
    mut emit: impl FnMut(&[Vec<T>]),
) {
    fn go<T: Clone>(
        shape: &[usize],
        r: usize,
        c: usize,
        rows: &mut Vec<Vec<T>>,
        choices: &dyn Fn(&[Vec<T>], usize, usize) -> Vec<T>,
        emit: &mut dyn FnMut(&[Vec<T>]),
    ) {
        if r == shape.len() {
            emit(rows);
            return;
        }
        if c == shape[r] {
            rows.push(Vec::new());
            go(shape, r + 1, 0, rows, choices, emit);
            rows.pop();
            return;
        }
        for v in choices(rows, r, c) {
            rows[r].push(v);
            go(shape, r, c + 1, rows, choices, emit);
            rows[r].pop();
        }
    }
    let mut rows = vec![Vec::new()];
    go(shape.parts(), 0, 0, &mut rows, choices, &mut emit);
}

/// Increasing fillings of `shape` by labels `1..=max_entry`, in row-major
/// lexicographic order.
pub fn enumerate_increasing(shape: &Partition, max_entry: u32) -> Vec<IncreasingTableau> {
    let mut out = Vec::new();
    let choices = |rows: &[Vec<u32>], r: usize, c: usize| -> Vec<u32> {
        let left = if c > 0 { rows[r][c - 1] } else { 0 };
        let up = if r > 0 { rows[r - 1][c] } else { 0 };
        (left.max(up) + 1..=max_entry).collect()
    };
    fill(shape, &choices, |rows| {
        out.push(IncreasingTableau(Tableau::new(rows.to_vec()).unwrap()));
    });
    out
}

/// Row-strict, column-weak fillings of `shape` by labels `1..=max_entry`.
pub fn enumerate_row_strict(shape: &Partition, max_entry: u32) -> Vec<RowStrictTableau> {
    let mut out = Vec::new();
    let choices = |rows: &[Vec<u32>], r: usize, c: usize| -> Vec<u32> {
        let lo = match (c > 0, r > 0) {
            (true, true) => (rows[r][c - 1] + 1).max(rows[r - 1][c]),
            (true, false) => rows[r][c - 1] + 1,
            (false, true) => rows[r - 1][c],
            (false, false) => 1,
        };
        (lo..=max_entry).collect()
    };
    fill(shape, &choices, |rows| {
        out.push(RowStrictTableau(Tableau::new(rows.to_vec()).unwrap()));
    });
    out
}

/// Semistandard fillings (rows weak, columns strict) by `1..=max_entry`.
pub fn enumerate_semistandard(shape: &Partition, max_entry: u32) -> Vec<Tableau> {
    let mut out = Vec::new();
    let choices = |rows: &[Vec<u32>], r: usize, c: usize| -> Vec<u32> {
        let left = if c > 0 { rows[r][c - 1] } else { 1 };
        let up = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
        (left.max(up)..=max_entry).collect()
    };
    fill(shape, &choices, |rows| out.push(Tableau::new(rows.to_vec()).unwrap()));
    out
}

/// Set-valued semistandard fillings of `shape` with labels `<= max_entry`.
/// Cell sets are tried in increasing bitmask order.
pub fn enumerate_set_valued(shape: &Partition, max_entry: u32) -> Vec<SetValuedTableau> {
    let mut out = Vec::new();
    let subsets: Vec<Vec<u32>> = (1u64..1 << max_entry)
        .map(|mask| (1..=max_entry).filter(|&l| mask >> (l - 1) & 1 == 1).collect())
        .collect();
    let choices = |rows: &[Vec<Vec<u32>>], r: usize, c: usize| -> Vec<Vec<u32>> {
        let left_max = if c > 0 { *rows[r][c - 1].last().unwrap() } else { 0 };
        let up_max = if r > 0 { *rows[r - 1][c].last().unwrap() } else { 0 };
        subsets
            .iter()
            .filter(|s| s[0] >= left_max && s[0] > up_max)
            .cloned()
            .collect()
    };
    fill(shape, &choices, |rows| {
        out.push(SetValuedTableau {
            rows: rows.iter().filter(|r| !r.is_empty()).cloned().collect(),
        })
    });
    out
}

/// Every increasing tableau with labels `<= n-1`. Strictness forces the
/// label in cell `(r, c)` to be at least `r + c + 1`, so every such tableau
/// fits inside the staircase `(n-1, ..., 1)`. Ordered by shape (size, then
/// decreasing lexicographic), then row-major lexicographic filling.
pub fn staircase_increasing(n: usize) -> Vec<IncreasingTableau> {
    let max_entry = n.saturating_sub(1) as u32;
    Partition::staircase(n)
        .subshapes()
        .iter()
        .flat_map(|shape| enumerate_increasing(shape, max_entry))
        .collect()
}

/// The tableaux indexing the conjectured expansion of the Grothendieck
/// polynomial of `w`: straight-shape increasing tableaux whose column
/// word is a Hecke word for `w`.
pub fn conjecture_tableaux(w: &Permutation) -> Vec<IncreasingTableau> {
    staircase_increasing(w.n())
        .into_iter()
        .filter(|p| p.word().is_hecke_word(w).expect("labels are generators of S_n"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn tab(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn sorting_compositions() {
        assert_eq!(Composition::new(vec![1, 0, 2, 1]).sort_to_partition(), part(&[2, 1, 1]));
        assert_eq!(Composition::new(vec![0, 0]).sort_to_partition(), Partition::empty());
        assert_eq!(Composition::new(vec![4, 5, 0, 2]).sort_to_partition(), part(&[5, 4, 2]));
    }

    #[test]
    fn words() {
        let p = tab("1,2,3,5,7/2,4,5,6/4,6");
        assert_eq!(p.word(), Word(vec![7, 5, 6, 3, 5, 2, 4, 6, 1, 2, 4]));
        assert_eq!(tab("1,2/2").word(), Word(vec![2, 1, 2]));
        assert_eq!(tab("1").word(), Word(vec![1]));
    }

    /// All 2^3 labelings of (2,1) by {1,2}, filtered directly.
    #[test]
    fn increasing_small() {
        let shape = part(&[2, 1]);
        let mut brute = Vec::new();
        for a in 1..=2u32 {
            for b in 1..=2 {
                for c in 1..=2 {
                    let t = Tableau::new(vec![vec![a, b], vec![c]]).unwrap();
                    if t.is_increasing() {
                        brute.push(t);
                    }
                }
            }
        }
        let got: Vec<Tableau> = enumerate_increasing(&shape, 2)
            .into_iter()
            .map(IncreasingTableau::into_inner)
            .collect();
        assert_eq!(got, brute);
        assert_eq!(got, vec![tab("1,2/2")]);

        let singles: Vec<String> = enumerate_increasing(&part(&[1]), 3)
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(singles, ["1", "2", "3"]);
        assert!(enumerate_increasing(&part(&[1, 1, 1]), 2).is_empty());
    }

    #[test]
    fn increasing_fill_bound() {
        for t in staircase_increasing(5) {
            assert!(t.is_increasing());
            for (r, c, v) in t.cells() {
                assert!(v as usize >= r + c + 1);
            }
        }
    }

    #[test]
    fn conjecture_tableaux_examples() {
        let w: Permutation = "31524".parse().unwrap();
        let got: Vec<String> = conjecture_tableaux(&w).iter().map(ToString::to_string).collect();
        assert_eq!(got, ["1,2,4/3", "1,2/3,4", "1,2,4/3,4"]);

        let got: Vec<String> = conjecture_tableaux(&"321".parse().unwrap())
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(got, ["1,2/2"]);

        let got = conjecture_tableaux(&Permutation::identity(4));
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].num_boxes(), 0);
    }

    /// Direct filter over every labelling of every staircase subshape,
    /// without the increasing-tableau enumerator.
    #[test]
    fn conjecture_tableaux_exhaustive_small() {
        for n in 3..=4 {
            let max = (n - 1) as u32;
            for w in Permutation::all(n) {
                let mut brute = Vec::new();
                for shape in Partition::staircase(n).subshapes() {
                    let cells = shape.size();
                    let total = (max as usize).pow(cells as u32);
                    for code in 0..total {
                        let mut labels = Vec::with_capacity(cells);
                        let mut x = code;
                        for _ in 0..cells {
                            labels.push((x % max as usize) as u32 + 1);
                            x /= max as usize;
                        }
                        labels.reverse();
                        let mut it = labels.into_iter();
                        let rows = shape
                            .parts()
                            .iter()
                            .map(|&len| it.by_ref().take(len).collect())
                            .collect();
                        let t = Tableau::new(rows).unwrap();
                        if t.is_increasing() && t.word().is_hecke_word(&w).unwrap() {
                            brute.push(t);
                        }
                    }
                }
                let got: Vec<Tableau> = conjecture_tableaux(&w)
                    .into_iter()
                    .map(IncreasingTableau::into_inner)
                    .collect();
                assert_eq!(got, brute, "w = {w}");
            }
        }
    }

    #[test]
    fn lds_examples() {
        assert_eq!(Tableau::default().lds(), 0);
        assert_eq!(tab("1,2/2").lds(), 2);
        assert_eq!(lds(&[1, 2, 2]), 1);
        assert_eq!(lds(&[3, 2, 2, 1]), 3);
    }

    #[test]
    fn set_valued() {
        let got: Vec<String> = enumerate_set_valued(&part(&[1]), 2)
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(got, ["{1}", "{2}", "{1|2}"]);
        assert_eq!(enumerate_set_valued(&part(&[1]), 1).len(), 1);
        assert!(enumerate_set_valued(&part(&[1, 1]), 1).is_empty());
        for m in 1..=6 {
            assert_eq!(enumerate_set_valued(&part(&[1]), m).len(), (1 << m) - 1);
        }
        let t = &enumerate_set_valued(&part(&[2, 1]), 3)[5];
        assert_eq!(t.weight(3).iter().sum::<u32>() as usize, t.label_count());
    }

    /// Every singleton choice of a set-valued tableau is semistandard.
    #[test]
    fn set_valued_selections_are_semistandard() {
        let shape = part(&[2, 1]);
        let ssyt: BTreeSet<Tableau> = enumerate_semistandard(&shape, 3).into_iter().collect();
        for t in enumerate_set_valued(&shape, 3) {
            let cells: Vec<&Vec<u32>> = t.rows().iter().flatten().collect();
            let combos: usize = cells.iter().map(|s| s.len()).product();
            for mut code in 0..combos {
                let mut flat = Vec::new();
                for s in &cells {
                    flat.push(s[code % s.len()]);
                    code /= s.len();
                }
                let rows = vec![flat[..2].to_vec(), flat[2..].to_vec()];
                assert!(ssyt.contains(&Tableau::new(rows).unwrap()), "{t}");
            }
        }
    }

    #[test]
    fn row_strict() {
        let got: Vec<String> = enumerate_row_strict(&part(&[1, 1]), 1)
            .iter()
            .map(|t| t.to_string())
            .collect();
        assert_eq!(got, ["1/1"]);
        let got: Vec<String> = enumerate_row_strict(&part(&[2]), 2)
            .iter()
            .map(|t| t.to_string())
            .collect();
        assert_eq!(got, ["1,2"]);
        let got: Vec<String> = enumerate_row_strict(&part(&[2, 1]), 2)
            .iter()
            .map(|t| t.to_string())
            .collect();
        assert_eq!(got, ["1,2/1", "1,2/2"]);
    }

    #[test]
    fn contents_and_keys() {
        let k = tab("1,1,1,1,2/2,2,2,2/4,4");
        assert_eq!(k.content(), Composition::new(vec![4, 5, 0, 2]));
        assert!(k.is_key());
        assert_eq!(tab("1,1/2").content(), Composition::new(vec![2, 1]));
        assert_eq!(Tableau::default().content(), Composition::default());
        assert!(tab("1,2/2").is_key());
        assert!(!tab("1,3/2").is_key());
        assert!(tab("1/3/4").is_key());
    }

    /// A key is determined by its column sets.
    #[test]
    fn key_rebuilds_from_column_sets() {
        for t in staircase_increasing(4) {
            let k = crate::kjdt::left_key(&t);
            let sets: Vec<BTreeSet<u32>> = k
                .columns()
                .into_iter()
                .map(|c| c.into_iter().collect())
                .collect();
            let cols: Vec<Vec<u32>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
            assert_eq!(Tableau::from_columns(&cols).unwrap(), k);
        }
    }

    #[test]
    fn partitions() {
        assert_eq!(Partition::of_size(4, 4, 4).len(), 5);
        assert_eq!(Partition::of_size(4, 2, 4).len(), 3);
        assert_eq!(part(&[3, 1, 1]).conjugate(), part(&[3, 1, 1]));
        assert_eq!(part(&[4, 2]).conjugate(), part(&[2, 2, 1, 1]));
        assert_eq!(Partition::staircase(4).subshapes().len(), 14);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Composition::of_size(2, 2).len(), 3);
        assert_eq!(Composition::of_size(5, 4).len(), 56);
    }

    #[test]
    fn tableau_text() {
        assert!("2,1".parse::<IncreasingTableau>().is_err());
        assert!("1/1".parse::<IncreasingTableau>().is_err());
        assert!("1/2,3".parse::<Tableau>().is_err());
        assert_eq!(tab("1,2/2").to_string(), "1,2/2");
        let j = serde_json::to_string(&tab("1,2/2").to_json()).unwrap();
        assert_eq!(j, r#"{"shape":[2,1],"rows":[[1,2],[2]]}"#);
    }
}

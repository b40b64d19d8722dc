//! Change of basis into key, Lascoux and Schur polynomials by exact
//! rational Gaussian elimination.
//!
//! This is the linear-algebra side of every expansion check: it knows
//! nothing about tableaux, so its answers can be compared against the
//! combinatorial rules.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::algebra::{BetaScalar, Exponent, MVPolynomial};
use crate::error::{Error, Result};
use crate::families::{schur, FamilyCache};
use crate::tableaux::{Composition, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Key,
    Lascoux,
    Schur,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Key => "key",
            Basis::Lascoux => "lascoux",
            Basis::Schur => "schur",
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Basis::Key => "k",
            Basis::Lascoux => "L",
            Basis::Schur => "s",
        }
    }
}

/// Coefficients of a polynomial in one of the bases. Schur indices are
/// partitions stored as compositions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    basis: Basis,
    terms: BTreeMap<Composition, BetaScalar>,
}

impl Expansion {
    fn new(basis: Basis) -> Self {
        Expansion {
            basis,
            terms: BTreeMap::new(),
        }
    }

    fn add(&mut self, index: Composition, c: BetaScalar) {
        let slot = self.terms.entry(index.clone()).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&index);
        }
    }

    /// Build from `(index, b-power, integer coefficient)` triples.
    pub fn from_signed<I>(basis: Basis, terms: I) -> Expansion
    where
        I: IntoIterator<Item = (Composition, usize, i64)>,
    {
        let mut out = Expansion::new(basis);
        for (a, k, c) in terms {
            out.add(a, BetaScalar::monomial(c, k));
        }
        out
    }

    pub fn plus(&self, other: &Expansion) -> Expansion {
        assert_eq!(self.basis, other.basis, "adding expansions in different bases");
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add(a.clone(), c.clone());
        }
        out
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Composition, BetaScalar> {
        &self.terms
    }

    pub fn coeff(&self, index: &Composition) -> BetaScalar {
        self.terms.get(index).cloned().unwrap_or_default()
    }

    /// Integer coefficient of `b^k * basis[index]`.
    pub fn coeff_at(&self, index: &Composition, k: usize) -> BigInt {
        self.coeff(index).coeff(k)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(index, b-power, coefficient)` in index order.
    pub fn flat_terms(&self) -> Vec<(&Composition, usize, &BigInt)> {
        self.terms
            .iter()
            .flat_map(|(a, c)| c.terms().map(move |(k, v)| (a, k, v)))
            .collect()
    }

    /// Every coefficient is a nonnegative integer.
    pub fn is_positive(&self) -> bool {
        self.flat_terms().iter().all(|(_, _, c)| **c > BigInt::zero())
    }

    /// Keep only the `b^k` part.
    pub fn beta_part(&self, k: usize) -> Expansion {
        let mut out = Expansion::new(self.basis);
        for (a, c) in &self.terms {
            out.add(a.clone(), c.part(k));
        }
        out
    }

    /// Sum of coefficient times basis element, in `vars` variables (only
    /// used for Schur).
    pub fn reconstruct(&self, cache: &FamilyCache, vars: usize) -> MVPolynomial {
        let mut out = MVPolynomial::zero(vars);
        for (a, c) in &self.terms {
            let b = match self.basis {
                Basis::Key => (*cache.key(a)).clone(),
                Basis::Lascoux => (*cache.lascoux(a)).clone(),
                Basis::Schur => schur(&a.sort_to_partition(), vars),
            };
            out += &b.scale(c);
        }
        out
    }

    /// `{"basis": ..., "terms": [{"index": [...], "beta": k, "c": "..."}]}`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .flat_terms()
            .into_iter()
            .map(|(a, k, c)| json!({ "index": a.entries(), "beta": k, "c": c.to_string() }))
            .collect();
        json!({ "basis": self.basis.name(), "terms": terms })
    }
}

/// `1·L[3,0,1] + 1·L[2,0,2] + 1·L[3,0,2]·b`.
impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.flat_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        let rendered: Vec<String> = terms
            .into_iter()
            .map(|(a, k, c)| {
                let beta = match k {
                    0 => String::new(),
                    1 => "·b".into(),
                    _ => format!("·b^{k}"),
                };
                format!("{c}·{}[{a}]{beta}", self.basis.symbol())
            })
            .collect();
        f.write_str(&rendered.join(" + "))
    }
}

type SparseVec = BTreeMap<Exponent, BigInt>;

fn pad(e: &Exponent, len: usize) -> Exponent {
    let mut v = e.to_vec();
    v.resize(len, 0);
    Exponent::new(v)
}

fn as_vector(p: &MVPolynomial, len: usize) -> SparseVec {
    p.terms()
        .filter_map(|(e, c)| {
            let c0 = c.at_zero();
            (!c0.is_zero()).then(|| (pad(e, len), c0))
        })
        .collect()
}

/// Solve `sum_j x_j columns[j] = rhs` over the rationals. `None` when the
/// system is inconsistent; panics when the columns are dependent.
fn solve(columns: &[SparseVec], rhs: &SparseVec) -> Option<Vec<BigRational>> {
    type Row = BTreeMap<usize, BigRational>;
    let mut equations: BTreeMap<&Exponent, (Row, BigRational)> = BTreeMap::new();
    for (e, v) in rhs {
        equations.entry(e).or_insert_with(|| (Row::new(), BigRational::zero())).1 =
            BigRational::from_integer(v.clone());
    }
    for (j, col) in columns.iter().enumerate() {
        for (e, v) in col {
            equations
                .entry(e)
                .or_insert_with(|| (Row::new(), BigRational::zero()))
                .0
                .insert(j, BigRational::from_integer(v.clone()));
        }
    }

    let mut pivots: BTreeMap<usize, (Row, BigRational)> = BTreeMap::new();
    for (_, (mut row, mut b)) in equations {
        let mut from = 0;
        loop {
            let hit = row
                .range(from..)
                .map(|(&c, _)| c)
                .find(|c| pivots.contains_key(c));
            let Some(c) = hit else { break };
            let factor = row.remove(&c).unwrap();
            let (prow, pb) = &pivots[&c];
            for (&j, v) in prow {
                if j == c {
                    continue;
                }
                let entry = row.entry(j).or_insert_with(BigRational::zero);
                *entry -= &factor * v;
                if entry.is_zero() {
                    row.remove(&j);
                }
            }
            b -= &factor * pb;
            from = c + 1;
        }
        match row.iter().next() {
            None if b.is_zero() => {}
            None => return None,
            Some((&c, lead)) => {
                let lead = lead.clone();
                for v in row.values_mut() {
                    *v /= &lead;
                }
                b /= &lead;
                pivots.insert(c, (row, b));
            }
        }
    }

    assert_eq!(
        pivots.len(),
        columns.len(),
        "basis columns are linearly dependent"
    );
    let mut x = vec![BigRational::zero(); columns.len()];
    for (&c, (row, b)) in pivots.iter().rev() {
        let mut v = b.clone();
        for (&j, a) in row.range(c + 1..) {
            v -= a * &x[j];
        }
        x[c] = v;
    }
    Some(x)
}

fn integral(q: &BigRational, what: impl fmt::Display) -> BigInt {
    assert!(q.is_integer(), "non-integral coefficient {q} for {what}");
    q.to_integer()
}

/// Solve one graded piece against a list of basis vectors.
fn solve_piece(
    basis: Basis,
    beta: usize,
    degree: usize,
    vars: usize,
    indices: &[Composition],
    columns: &[SparseVec],
    piece: &SparseVec,
) -> Result<Vec<(Composition, BigInt)>> {
    let x = solve(columns, piece).ok_or(Error::NotInSpan {
        basis: basis.name(),
        beta,
        degree,
        vars,
    })?;
    Ok(indices
        .iter()
        .zip(x)
        .filter(|(_, q)| !q.is_zero())
        .map(|(a, q)| (a.clone(), integral(&q, a)))
        .collect())
}

fn check_vars(f: &MVPolynomial, vars: usize, basis: Basis) -> Result<()> {
    if f.used_vars() > vars {
        let (k, d) = f
            .terms()
            .filter(|(e, _)| e.iter().skip(vars).any(|&p| p != 0))
            .map(|(e, c)| (c.terms().next().unwrap().0, e.degree()))
            .next()
            .unwrap();
        return Err(Error::NotInSpan {
            basis: basis.name(),
            beta: k,
            degree: d,
            vars,
        });
    }
    Ok(())
}

/// Expand every `(b-power, x-degree)` piece of `f` in the key
/// polynomials `kappa_alpha` with `|alpha|` equal to the degree and at most
/// `vars` parts.
pub fn expand_in_keys(cache: &FamilyCache, f: &MVPolynomial, vars: usize) -> Result<Expansion> {
    check_vars(f, vars, Basis::Key)?;
    let len = vars.max(f.vars());
    let mut out = Expansion::new(Basis::Key);
    for ((k, d), piece) in f.graded_pieces() {
        let piece: SparseVec = piece.into_iter().map(|(e, c)| (pad(&e, len), c)).collect();
        let indices = Composition::of_size(d, vars);
        let columns: Vec<SparseVec> = indices
            .iter()
            .map(|a| as_vector(&cache.key(a), len))
            .collect();
        for (a, c) in solve_piece(Basis::Key, k, d, vars, &indices, &columns, &piece)? {
            out.add(a, BetaScalar::monomial(c, k));
        }
    }
    Ok(out)
}

/// Expand an adjusted-homogeneous `f` of adjusted degree `g` in the Lascoux
/// polynomials with at most `vars` parts. The coefficient of
/// `Omega_alpha` is an integer times `b^{|alpha| - g}`.
///
/// The `b^0` part of `f` can only come from `|alpha| = g`, where the Lascoux
/// polynomial reduces to its key polynomial; solving it and subtracting
/// leaves a remainder whose lowest `b`-power `j` again only sees
/// `|alpha| = g + j`. Each stage is a key expansion of a single piece.
pub fn expand_in_lascoux(
    cache: &FamilyCache,
    f: &MVPolynomial,
    vars: usize,
) -> Result<Expansion> {
    check_vars(f, vars, Basis::Lascoux)?;
    let mut out = Expansion::new(Basis::Lascoux);
    let components = f.adjusted_components();
    if components.is_empty() {
        return Ok(out);
    }
    if components.len() > 1 {
        return Err(Error::input(format!(
            "polynomial is not adjusted-homogeneous (adjusted degrees {:?})",
            components.keys().collect::<Vec<_>>()
        )));
    }
    let g = *components.keys().next().unwrap();
    if g < 0 {
        return Err(Error::input(format!("negative adjusted degree {g}")));
    }
    let g = g as usize;
    let top = f.x_degree().unwrap();
    let len = vars.max(f.vars());

    let mut remainder = f.with_vars(len);
    while let Some(((j, d), piece)) = remainder.graded_pieces().into_iter().next() {
        if d > top {
            return Err(Error::NotInSpan {
                basis: Basis::Lascoux.name(),
                beta: j,
                degree: d,
                vars,
            });
        }
        debug_assert_eq!(d, g + j);
        let indices = Composition::of_size(d, vars);
        let columns: Vec<SparseVec> = indices
            .iter()
            .map(|a| as_vector(&cache.key(a), len))
            .collect();
        let solved = solve_piece(Basis::Lascoux, j, d, vars, &indices, &columns, &piece)?;
        for (a, c) in solved {
            let coeff = BetaScalar::monomial(c, j);
            remainder -= &cache.lascoux(&a).scale(&coeff);
            out.add(a, coeff);
        }
    }
    Ok(out)
}

/// Expand a polynomial symmetric in `x_1..x_m` in Schur polynomials,
/// piece by piece, for x-degrees up to `max_degree` (all when `None`).
pub fn expand_in_schur(
    f: &MVPolynomial,
    m: usize,
    max_degree: Option<usize>,
) -> Result<Expansion> {
    if f.used_vars() > m {
        return Err(Error::input(format!(
            "polynomial uses variables beyond x{m}"
        )));
    }
    if let Some(i) = (1..m).find(|&i| !f.is_symmetric_in(i)) {
        return Err(Error::input(format!(
            "polynomial is not symmetric in x{i}, x{}",
            i + 1
        )));
    }
    let len = m.max(f.vars());
    let mut schurs: HashMap<Partition, SparseVec> = HashMap::new();
    let mut out = Expansion::new(Basis::Schur);
    for ((k, d), piece) in f.graded_pieces() {
        if max_degree.is_some_and(|top| d > top) {
            continue;
        }
        let piece: SparseVec = piece.into_iter().map(|(e, c)| (pad(&e, len), c)).collect();
        let shapes = Partition::of_size(d, m, d);
        let columns: Vec<SparseVec> = shapes
            .iter()
            .map(|lam| {
                schurs
                    .entry(lam.clone())
                    .or_insert_with(|| as_vector(&schur(lam, m), len))
                    .clone()
            })
            .collect();
        let indices: Vec<Composition> = shapes
            .iter()
            .map(|l| Composition::new(l.parts().to_vec()))
            .collect();
        for (a, c) in solve_piece(Basis::Schur, k, d, m, &indices, &columns, &piece)? {
            out.add(a, BetaScalar::monomial(c, k));
        }
    }
    Ok(out)
}

/// The multiset `{alpha -> multiplicity}` as an expansion with every
/// coefficient carried at `b^{power}`.
pub fn expansion_from_terms<I>(basis: Basis, terms: I) -> Expansion
where
    I: IntoIterator<Item = (Composition, usize)>,
{
    let mut out = Expansion::new(basis);
    for (a, k) in terms {
        out.add(a, BetaScalar::beta_pow(k));
    }
    out
}

/// Indices that occur in either expansion with different coefficients.
pub fn differing_indices(a: &Expansion, b: &Expansion) -> BTreeSet<Composition> {
    a.terms
        .keys()
        .chain(b.terms.keys())
        .filter(|k| a.coeff(k) != b.coeff(k))
        .cloned()
        .collect()
}

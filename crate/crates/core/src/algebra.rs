//! Exact sparse polynomials in `x1, x2, ...` with coefficients in `Z[b]`,
//! together with the divided-difference operator family.
//!
//! Operator indices are 1-based: `swap_vars(p, i)` exchanges `x_i` and
//! `x_{i+1}`.

use std::cmp::{max, Ordering};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Deref, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A polynomial in the single parameter `b` (beta) with integer coefficients.
///
/// Index `k` of the coefficient vector holds the coefficient of `b^k`. The
/// vector never has trailing zeros, so the zero scalar is empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BetaScalar(Vec<BigInt>);

impl BetaScalar {
    pub fn zero() -> Self {
        BetaScalar(Vec::new())
    }

    pub fn one() -> Self {
        BetaScalar(vec![BigInt::one()])
    }

    /// `c * b^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.push(c);
        BetaScalar(v)
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn beta_pow(k: usize) -> Self {
        Self::monomial(1, k)
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut s = BetaScalar(coeffs);
        s.trim();
        s
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.0.get(k).cloned().unwrap_or_default()
    }

    /// Highest power of `b` present, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Nonzero `(k, coefficient)` pairs in increasing `k`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// The `b = 0` specialization.
    pub fn at_zero(&self) -> BigInt {
        self.coeff(0)
    }

    /// Multiply by `b^k`.
    pub fn shifted(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.0.iter().cloned());
        BetaScalar(v)
    }

    /// Keep only the `b^k` part.
    pub fn part(&self, k: usize) -> Self {
        Self::monomial(self.coeff(k), k)
    }
}

impl<'a> AddAssign<&'a BetaScalar> for BetaScalar {
    fn add_assign(&mut self, rhs: &'a BetaScalar) {
        if self.0.len() < rhs.0.len() {
            self.0.resize(rhs.0.len(), BigInt::zero());
        }
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
        self.trim();
    }
}

impl<'a> SubAssign<&'a BetaScalar> for BetaScalar {
    fn sub_assign(&mut self, rhs: &'a BetaScalar) {
        if self.0.len() < rhs.0.len() {
            self.0.resize(rhs.0.len(), BigInt::zero());
        }
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
        self.trim();
    }
}

impl<'a> Add for &'a BetaScalar {
    type Output = BetaScalar;
    fn add(self, rhs: &'a BetaScalar) -> BetaScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub for &'a BetaScalar {
    type Output = BetaScalar;
    fn sub(self, rhs: &'a BetaScalar) -> BetaScalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &BetaScalar {
    type Output = BetaScalar;
    fn neg(self) -> BetaScalar {
        BetaScalar(self.0.iter().map(|c| -c).collect())
    }
}

impl<'a> Mul for &'a BetaScalar {
    type Output = BetaScalar;
    fn mul(self, rhs: &'a BetaScalar) -> BetaScalar {
        if self.is_zero() || rhs.is_zero() {
            return BetaScalar::zero();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        BetaScalar::from_coeffs(v)
    }
}

impl fmt::Display for BetaScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let poly = MVPolynomial::constant(self.clone(), 0);
        write!(f, "{poly}")
    }
}

/// Exponent vector of a monomial `x1^e1 * ... * xm^em`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn new(powers: Vec<u32>) -> Self {
        Exponent(powers)
    }

    pub fn zeros(m: usize) -> Self {
        Exponent(vec![0; m])
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    fn padded(&self, m: usize) -> Exponent {
        let mut v = self.0.clone();
        v.resize(m, 0);
        Exponent(v)
    }
}

impl Deref for Exponent {
    type Target = [u32];
    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl From<Vec<u32>> for Exponent {
    fn from(v: Vec<u32>) -> Self {
        Exponent(v)
    }
}

/// A sparse polynomial in `x1..xm` over `Z[b]`.
///
/// No stored coefficient is zero and every exponent has length `vars`.
/// Equality ignores the declared ambient: the shorter side is padded with
/// zero powers before comparing.
#[derive(Clone, Debug, Default)]
pub struct MVPolynomial {
    vars: usize,
    terms: BTreeMap<Exponent, BetaScalar>,
}

impl PartialEq for MVPolynomial {
    fn eq(&self, other: &Self) -> bool {
        match self.vars.cmp(&other.vars) {
            Ordering::Equal => self.terms == other.terms,
            Ordering::Less => self.with_vars(other.vars).terms == other.terms,
            Ordering::Greater => self.terms == other.with_vars(self.vars).terms,
        }
    }
}

impl Eq for MVPolynomial {}

impl MVPolynomial {
    pub fn zero(vars: usize) -> Self {
        MVPolynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(BetaScalar::one(), vars)
    }

    pub fn constant(c: BetaScalar, vars: usize) -> Self {
        Self::monomial(Exponent::zeros(vars), c)
    }

    /// `c * x^exp`; the ambient is the exponent length.
    pub fn monomial(exp: impl Into<Exponent>, c: BetaScalar) -> Self {
        let exp = exp.into();
        let mut p = Self::zero(exp.len());
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    /// The variable `x_i` (1-based) in an ambient of at least `i` variables.
    pub fn var(i: usize, vars: usize) -> Self {
        assert!(i >= 1, "variables are 1-based");
        let mut e = vec![0; max(vars, i)];
        e[i - 1] = 1;
        Self::monomial(e, BetaScalar::one())
    }

    /// Build from `(exponent, coefficient)` pairs, summing duplicates.
    pub fn from_terms<I>(vars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, BetaScalar)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            if e.len() > p.vars {
                p = p.with_vars(e.len());
            }
            let e = e.padded(p.vars);
            p.add_term(e, &c);
        }
        p
    }

    fn add_term(&mut self, e: Exponent, c: &BetaScalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BetaScalar)> {
        self.terms.iter()
    }

    /// Coefficient of `x^exp`, treating missing positions as zero powers.
    pub fn coeff(&self, exp: &[u32]) -> BetaScalar {
        let (head, tail) = exp.split_at(exp.len().min(self.vars));
        if tail.iter().any(|&e| e != 0) {
            return BetaScalar::zero();
        }
        let key = Exponent(head.to_vec()).padded(self.vars);
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    /// Same polynomial in a larger ambient.
    ///
    /// Panics if `m` is smaller than the current ambient: truncation is
    /// never implicit, use [`MVPolynomial::restrict_vars`] or
    /// [`MVPolynomial::shrink_vars`].
    pub fn with_vars(&self, m: usize) -> Self {
        assert!(m >= self.vars, "with_vars cannot shrink the ambient");
        if m == self.vars {
            return self.clone();
        }
        MVPolynomial {
            vars: m,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.padded(m), c.clone()))
                .collect(),
        }
    }

    /// Drop ambient variables that no term uses, keeping at least `m`.
    pub fn shrink_vars(&self, m: usize) -> Self {
        if m >= self.vars {
            return self.with_vars(m);
        }
        assert!(
            self.terms.keys().all(|e| e[m..].iter().all(|&p| p == 0)),
            "shrink_vars would drop a used variable"
        );
        MVPolynomial {
            vars: m,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (Exponent(e[..m].to_vec()), c.clone()))
                .collect(),
        }
    }

    /// Smallest ambient that holds every term.
    pub fn used_vars(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().rposition(|&p| p != 0).map_or(0, |i| i + 1))
            .max()
            .unwrap_or(0)
    }

    /// Largest total x-degree of a term, `None` for zero.
    pub fn x_degree(&self) -> Option<usize> {
        self.terms.keys().map(Exponent::degree).max()
    }

    /// Rebuild from scratch; the identity on any value this module produces.
    pub fn canonical(&self) -> Self {
        Self::from_terms(
            self.vars,
            self.terms.iter().map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    pub fn scale(&self, c: &BetaScalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        let mut out = Self::zero(self.vars);
        for (e, d) in &self.terms {
            let prod = d * c;
            if !prod.is_zero() {
                out.terms.insert(e.clone(), prod);
            }
        }
        out
    }

    /// Multiply by `b^k`.
    pub fn shift_beta(&self, k: usize) -> Self {
        MVPolynomial {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.shifted(k)))
                .collect(),
        }
    }

    /// Multiply by `x_i`.
    pub fn mul_var(&self, i: usize) -> Self {
        let m = max(self.vars, i);
        let base = self.with_vars(m);
        MVPolynomial {
            vars: m,
            terms: base
                .terms
                .into_iter()
                .map(|(mut e, c)| {
                    e.0[i - 1] += 1;
                    (e, c)
                })
                .collect(),
        }
    }

    fn reconcile(&self, other: &Self) -> (Self, Self) {
        let m = max(self.vars, other.vars);
        (self.with_vars(m), other.with_vars(m))
    }

    /// Exchange `x_i` and `x_{i+1}`; the ambient grows to `i+1` if needed.
    pub fn swap_vars(&self, i: usize) -> Self {
        assert!(i >= 1, "operator indices are 1-based");
        let m = max(self.vars, i + 1);
        MVPolynomial {
            vars: m,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.padded(m);
                    e.0.swap(i - 1, i);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// `(p - s_i p) / (x_i - x_{i+1})`.
    ///
    /// Terms are grouped by the powers of the other variables and by
    /// `a + b`, where `x_i^a x_{i+1}^b`. Within a group the numerator is a
    /// binary form in `x_i, x_{i+1}` and is divided by `x_i - x_{i+1}` by
    /// cancelling its leading `x_i` power repeatedly. A nonzero remainder
    /// panics.
    pub fn divided_difference(&self, i: usize) -> Self {
        assert!(i >= 1, "operator indices are 1-based");
        let m = max(self.vars, i + 1);
        let (xi, xj) = (i - 1, i);

        // (rest exponent with positions i, i+1 zeroed, a + b) -> c_a by a
        let mut groups: BTreeMap<(Exponent, u32), BTreeMap<u32, BetaScalar>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.padded(m);
            let (a, b) = (rest.0[xi], rest.0[xj]);
            rest.0[xi] = 0;
            rest.0[xj] = 0;
            groups
                .entry((rest, a + b))
                .or_default()
                .insert(a, c.clone());
        }

        let mut out = Self::zero(m);
        let zero = BetaScalar::zero();
        for ((rest, d), coeffs) in groups {
            let at = |a: u32| coeffs.get(&a).unwrap_or(&zero);
            // numerator coefficient of x_i^a x_{i+1}^{d-a} is c_a - c_{d-a}
            let mut carry = BetaScalar::zero();
            for a in (1..=d).rev() {
                carry += &(at(a) - at(d - a));
                if !carry.is_zero() {
                    let mut e = rest.clone();
                    e.0[xi] = a - 1;
                    e.0[xj] = d - a;
                    out.terms.insert(e, carry.clone());
                }
            }
            carry += &(at(0) - at(d));
            assert!(
                carry.is_zero(),
                "divided difference: nonzero remainder {carry} dividing by x{i} - x{}",
                i + 1
            );
        }
        out
    }

    /// `d_i((1 + b x_{i+1}) p)`.
    pub fn pi(&self, i: usize) -> Self {
        let lifted = self + &self.mul_var(i + 1).shift_beta(1);
        lifted.divided_difference(i)
    }

    /// `d_i(x_i (1 + b x_{i+1}) p)`.
    pub fn pi_tilde(&self, i: usize) -> Self {
        let xp = self.mul_var(i);
        let lifted = &xp + &xp.mul_var(i + 1).shift_beta(1);
        lifted.divided_difference(i)
    }

    /// `d_i(x_i p)`, the isobaric divided difference (`pi_tilde` at `b = 0`).
    pub fn demazure(&self, i: usize) -> Self {
        self.mul_var(i).divided_difference(i)
    }

    /// Specialize `b = 0`.
    pub fn beta_zero(&self) -> Self {
        let mut out = Self::zero(self.vars);
        for (e, c) in &self.terms {
            let c0 = c.at_zero();
            if !c0.is_zero() {
                out.terms.insert(e.clone(), BetaScalar::from_int(c0));
            }
        }
        out
    }

    /// Split by adjusted degree: a term `c b^k x^e` has adjusted degree
    /// `|e| - k`.
    pub fn adjusted_components(&self) -> BTreeMap<i64, MVPolynomial> {
        let mut out: BTreeMap<i64, MVPolynomial> = BTreeMap::new();
        for (e, c) in &self.terms {
            for (k, v) in c.terms() {
                let deg = e.degree() as i64 - k as i64;
                out.entry(deg)
                    .or_insert_with(|| Self::zero(self.vars))
                    .add_term(e.clone(), &BetaScalar::monomial(v.clone(), k));
            }
        }
        out
    }

    /// Integer coefficients of each `(b-power, x-degree)` graded piece.
    pub fn graded_pieces(&self) -> BTreeMap<(usize, usize), BTreeMap<Exponent, BigInt>> {
        let mut out: BTreeMap<(usize, usize), BTreeMap<Exponent, BigInt>> = BTreeMap::new();
        for (e, c) in &self.terms {
            for (k, v) in c.terms() {
                out.entry((k, e.degree()))
                    .or_default()
                    .insert(e.clone(), v.clone());
            }
        }
        out
    }

    /// Substitute `x_j = 0` for every `j > m`.
    pub fn restrict_vars(&self, m: usize) -> Self {
        let mut out = Self::zero(m);
        for (e, c) in &self.terms {
            if e.len() > m && e[m..].iter().any(|&p| p != 0) {
                continue;
            }
            out.terms.insert(e.padded(m), c.clone());
        }
        out
    }

    /// True iff `p` is invariant under exchanging `x_i` and `x_{i+1}`.
    pub fn is_symmetric_in(&self, i: usize) -> bool {
        self.swap_vars(i) == *self
    }

    /// Terms in display order: by `b`-power, then x-exponent in decreasing
    /// lexicographic order.
    pub fn sorted_terms(&self) -> Vec<(usize, &Exponent, &BigInt)> {
        let mut out: Vec<_> = self
            .terms
            .iter()
            .flat_map(|(e, c)| c.terms().map(move |(k, v)| (k, e, v)))
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(a.1)));
        out
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            vars: self.vars,
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(k, e, c)| TermJson {
                    beta: k,
                    exp: e.to_vec(),
                    c: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &PolyJson) -> Result<Self> {
        let mut p = Self::zero(j.vars);
        for t in &j.terms {
            if t.exp.len() != j.vars {
                return Err(Error::parse(format!(
                    "term exponent {:?} does not have length {}",
                    t.exp, j.vars
                )));
            }
            let c: BigInt = t
                .c
                .parse()
                .map_err(|_| Error::parse(format!("bad coefficient {:?}", t.c)))?;
            p.add_term(Exponent(t.exp.clone()), &BetaScalar::monomial(c, t.beta));
        }
        Ok(p)
    }
}

/// Wire form of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub beta: usize,
    pub exp: Vec<u32>,
    pub c: String,
}

impl<'a> Add for &'a MVPolynomial {
    type Output = MVPolynomial;
    fn add(self, rhs: &'a MVPolynomial) -> MVPolynomial {
        let (mut a, b) = if self.vars >= rhs.vars {
            (self.clone(), rhs.with_vars(self.vars))
        } else {
            (self.with_vars(rhs.vars), rhs.clone())
        };
        for (e, c) in b.terms {
            a.add_term(e, &c);
        }
        a
    }
}

impl<'a> Sub for &'a MVPolynomial {
    type Output = MVPolynomial;
    fn sub(self, rhs: &'a MVPolynomial) -> MVPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &MVPolynomial {
    type Output = MVPolynomial;
    fn neg(self) -> MVPolynomial {
        MVPolynomial {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl<'a> Mul for &'a MVPolynomial {
    type Output = MVPolynomial;
    fn mul(self, rhs: &'a MVPolynomial) -> MVPolynomial {
        let (a, b) = self.reconcile(rhs);
        let mut out = MVPolynomial::zero(a.vars);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e = Exponent(ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect());
                out.add_term(e, &(ca * cb));
            }
        }
        out
    }
}

impl AddAssign<&MVPolynomial> for MVPolynomial {
    fn add_assign(&mut self, rhs: &MVPolynomial) {
        if rhs.vars > self.vars {
            *self = self.with_vars(rhs.vars);
        }
        for (e, c) in &rhs.terms {
            self.add_term(e.padded(self.vars), c);
        }
    }
}

impl SubAssign<&MVPolynomial> for MVPolynomial {
    fn sub_assign(&mut self, rhs: &MVPolynomial) {
        *self += &(-rhs);
    }
}

/// Text form: `x1^2*x2 + b*x1^2*x2^2`. Terms are joined by `" + "`; a
/// negative term carries a leading `-` (`x1 + -b`).
impl fmt::Display for MVPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (k, e, c)) in terms.into_iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if k > 0 {
                factors.push(if k == 1 { "b".into() } else { format!("b^{k}") });
            }
            for (j, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => factors.push(format!("x{}", j + 1)),
                    _ => factors.push(format!("x{}^{p}", j + 1)),
                }
            }
            let abs = c.abs();
            if c.is_negative() {
                f.write_str("-")?;
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl FromStr for MVPolynomial {
    type Err = Error;

    /// Parses the text form produced by `Display`; spaces are optional. The
    /// ambient is the largest variable index mentioned.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(MVPolynomial::zero(0));
        }
        let mut parsed: Vec<(Vec<u32>, usize, BigInt)> = Vec::new();
        for term in s.split('+') {
            let term: String = term.chars().filter(|c| !c.is_whitespace()).collect();
            let term = term.as_str();
            let (neg, body) = match term.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, term),
            };
            if body.is_empty() {
                return Err(Error::parse(format!("empty term in {s:?}")));
            }
            let mut c = BigInt::one();
            let mut k = 0usize;
            let mut exp: Vec<u32> = Vec::new();
            for factor in body.split('*') {
                let (base, pow) = match factor.split_once('^') {
                    Some((b, p)) => (
                        b,
                        p.parse::<u32>()
                            .map_err(|_| Error::parse(format!("bad power in {factor:?}")))?,
                    ),
                    None => (factor, 1),
                };
                if base == "b" {
                    k += pow as usize;
                } else if let Some(idx) = base.strip_prefix('x') {
                    let j: usize = idx
                        .parse()
                        .ok()
                        .filter(|&j| j >= 1)
                        .ok_or_else(|| Error::parse(format!("bad variable {base:?}")))?;
                    if exp.len() < j {
                        exp.resize(j, 0);
                    }
                    exp[j - 1] += pow;
                } else {
                    let v: BigInt = base
                        .parse()
                        .map_err(|_| Error::parse(format!("bad factor {factor:?}")))?;
                    c *= num_traits::pow(v, pow as usize);
                }
            }
            if neg {
                c = -c;
            }
            parsed.push((exp, k, c));
        }
        let vars = parsed.iter().map(|t| t.0.len()).max().unwrap_or(0);
        Ok(MVPolynomial::from_terms(
            vars,
            parsed
                .into_iter()
                .map(|(e, k, c)| (Exponent(e), BetaScalar::monomial(c, k))),
        ))
    }
}

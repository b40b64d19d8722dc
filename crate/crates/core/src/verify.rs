//! The Grothendieck-to-Lascoux conjecture check and the cross-check
//! suites for the surrounding theorems.
//!
//! Every check compares two exact polynomials (or two exact expansions);
//! a mismatch is returned as a witness inside the report, never as an
//! error.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::{BetaScalar, MVPolynomial};
use crate::error::{Error, Result};
use crate::expand::{
    expand_in_keys, expand_in_lascoux, expand_in_schur, expansion_from_terms, Basis, Expansion,
};
use crate::families::{buch_g, groth_compatible_all, stable_groth, FamilyCache};
use crate::kjdt::left_key;
use crate::symgroup::Permutation;
use crate::tableaux::{
    conjecture_tableaux, enumerate_row_strict, Composition, IncreasingTableau, Partition, Tableau,
};

/// One tableau's contribution `b^{beta_power} * Omega_{content}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureTerm {
    pub tableau: Tableau,
    pub key: Tableau,
    pub shape: Partition,
    pub content: Composition,
    pub beta_power: usize,
}

#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub w: Permutation,
    pub holds: bool,
    pub terms: Vec<ConjectureTerm>,
    pub lhs_equals_rhs: bool,
    pub elapsed: Duration,
    /// Both sides, kept only when they differ.
    pub counterexample: Option<(MVPolynomial, MVPolynomial)>,
}

impl ConjectureReport {
    pub fn elapsed_ms(&self) -> u128 {
        self.elapsed.as_millis()
    }

    /// The right-hand side as a Lascoux expansion.
    pub fn expansion(&self) -> Expansion {
        expansion_from_terms(
            Basis::Lascoux,
            self.terms.iter().map(|t| (t.content.clone(), t.beta_power)),
        )
    }

    /// One JSON-lines record. Timing is left out so reports are
    /// reproducible byte for byte.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|t| {
                json!({
                    "tableau": t.tableau.to_string(),
                    "shape": t.shape.parts(),
                    "content": t.content.entries(),
                    "beta_power": t.beta_power,
                })
            })
            .collect();
        let mut v = json!({
            "kind": "report",
            "w": self.w.to_string(),
            "holds": self.holds,
            "lhs_equals_rhs": self.lhs_equals_rhs,
            "terms": terms,
        });
        if let Some(bundle) = self.counterexample_bundle() {
            v["counterexample"] = bundle;
        }
        v
    }

    /// `w`, both polynomials, every tableau and every left key.
    pub fn counterexample_bundle(&self) -> Option<Value> {
        let (lhs, rhs) = self.counterexample.as_ref()?;
        Some(json!({
            "w": self.w.to_string(),
            "grothendieck": lhs.to_json(),
            "rhs": rhs.to_json(),
            "tableaux": self.terms.iter().map(|t| t.tableau.to_string()).collect::<Vec<_>>(),
            "left_keys": self.terms.iter().map(|t| t.key.to_string()).collect::<Vec<_>>(),
        }))
    }

    pub fn to_text(&self) -> String {
        let status = if self.holds { "holds" } else { "FAILS" };
        format!("{} {status}: {}", self.w, self.expansion())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub name: String,
    pub population: String,
    pub failures: Vec<Value>,
    pub passed: bool,
}

impl SuiteReport {
    pub fn new(name: impl Into<String>, population: impl Into<String>, failures: Vec<Value>) -> Self {
        SuiteReport {
            name: name.into(),
            population: population.into(),
            passed: failures.is_empty(),
            failures,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": "summary",
            "suite": self.name,
            "population": self.population,
            "passed": self.passed,
            "failures": self.failures,
        })
    }

    pub fn to_text(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut out = format!("{status} {} [{}]", self.name, self.population);
        if !self.passed {
            out += &format!(" ({} failures)", self.failures.len());
        }
        out
    }
}

fn population(n: usize) -> String {
    let count: usize = (1..=n).product();
    format!("S_{n} ({count} permutations)")
}

fn mismatch(w: &Permutation, lhs: &MVPolynomial, rhs: &MVPolynomial) -> Value {
    json!({ "w": w.to_string(), "lhs": lhs.to_string(), "rhs": rhs.to_string() })
}

fn terms_of(w: &Permutation, tableaux: &[IncreasingTableau]) -> Vec<ConjectureTerm> {
    let ell = w.length();
    tableaux
        .iter()
        .map(|p| {
            let key = left_key(p);
            ConjectureTerm {
                shape: p.shape(),
                content: key.content(),
                beta_power: p.num_boxes() - ell,
                key,
                tableau: (**p).clone(),
            }
        })
        .collect()
}

fn rhs_of(cache: &FamilyCache, terms: &[ConjectureTerm]) -> MVPolynomial {
    let mut out = MVPolynomial::zero(1);
    for t in terms {
        out += &cache
            .lascoux(&t.content)
            .scale(&BetaScalar::beta_pow(t.beta_power));
    }
    out
}

/// Sum over the increasing tableaux whose word is a Hecke word for `w` of
/// `b^{#boxes - l(w)} * Omega_{content(K_-(P))}`.
pub fn conjecture_rhs(cache: &FamilyCache, w: &Permutation) -> MVPolynomial {
    rhs_of(cache, &terms_of(w, &conjecture_tableaux(w)))
}

pub fn check_conjecture(cache: &FamilyCache, w: &Permutation) -> ConjectureReport {
    let start = Instant::now();
    let terms = terms_of(w, &conjecture_tableaux(w));
    let rhs = rhs_of(cache, &terms);
    let lhs = cache.grothendieck(w);
    let equal = *lhs == rhs;
    ConjectureReport {
        w: w.clone(),
        holds: equal,
        terms,
        lhs_equals_rhs: equal,
        elapsed: start.elapsed(),
        counterexample: (!equal).then(|| ((*lhs).clone(), rhs)),
    }
}

fn pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("failed to start worker pool")
}

/// Reports for every `w` in `S_n`, in lexicographic order whatever the
/// number of workers.
pub fn check_all_reports(cache: &FamilyCache, n: usize, jobs: usize) -> Vec<ConjectureReport> {
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    pool(jobs).install(|| perms.par_iter().map(|w| check_conjecture(cache, w)).collect())
}

/// Summary of a batch of conjecture reports.
pub fn summarize(population: String, reports: &[ConjectureReport]) -> SuiteReport {
    let failures = reports
        .iter()
        .filter(|r| !r.holds)
        .map(|r| r.counterexample_bundle().unwrap())
        .collect();
    SuiteReport::new("conjecture", population, failures)
}

pub fn check_all(cache: &FamilyCache, n: usize, jobs: usize) -> Result<SuiteReport> {
    if n < 2 {
        return Err(Error::input("check_all needs n >= 2"));
    }
    Ok(summarize(population(n), &check_all_reports(cache, n, jobs)))
}

/// Grothendieck polynomials against the compatible-sequence formula.
pub fn suite_fk(cache: &FamilyCache, n: usize) -> SuiteReport {
    let failures = groth_compatible_all(n)
        .into_iter()
        .filter_map(|(w, rhs)| {
            let lhs = cache.grothendieck(&w);
            (*lhs != rhs).then(|| mismatch(&w, &lhs, &rhs))
        })
        .collect();
    SuiteReport::new("fk", population(n), failures)
}

/// Schubert polynomials against the sum of key polynomials over tableaux
/// whose word is a reduced word.
pub fn schub_to_key_rhs(cache: &FamilyCache, w: &Permutation) -> MVPolynomial {
    let mut out = MVPolynomial::zero(1);
    for p in conjecture_tableaux(w) {
        if p.word().is_reduced(w).unwrap() {
            out += &*cache.key(&left_key(&p).content());
        }
    }
    out
}

pub fn suite_schub_to_key(cache: &FamilyCache, n: usize) -> SuiteReport {
    let failures = Permutation::all(n)
        .filter_map(|w| {
            let lhs = cache.schubert(&w);
            let rhs = schub_to_key_rhs(cache, &w);
            (lhs != rhs).then(|| mismatch(&w, &lhs, &rhs))
        })
        .collect();
    SuiteReport::new("schub-key", population(n), failures)
}

/// `b_{w,lambda}`: the number of conjecture tableaux of each shape.
pub fn bksty_coefficients(w: &Permutation) -> BTreeMap<Partition, usize> {
    let mut out = BTreeMap::new();
    for p in conjecture_tableaux(w) {
        *out.entry(p.shape()).or_insert(0) += 1;
    }
    out
}

/// `sum_lambda b^{|lambda| - l(w)} b_{w,lambda} G_lambda` in `m` variables.
pub fn bksty_rhs(w: &Permutation, m: usize) -> MVPolynomial {
    let ell = w.length();
    let mut out = MVPolynomial::zero(m);
    for (lam, count) in bksty_coefficients(w) {
        let c = BetaScalar::monomial(count, lam.size() - ell);
        out += &buch_g(&lam, m).scale(&c);
    }
    out
}

pub fn suite_bksty(n: usize, m: usize) -> SuiteReport {
    let failures = Permutation::all(n)
        .filter_map(|w| {
            let lhs = stable_groth(&w, m);
            let rhs = bksty_rhs(&w, m);
            (lhs != rhs).then(|| mismatch(&w, &lhs, &rhs))
        })
        .collect();
    SuiteReport::new("bksty", format!("{}, m = {m}", population(n)), failures)
}

/// `d_{w,lambda}` for `|lambda| <= max_degree` and at most `m` rows:
/// row strict, column weak tableaux whose word is a Hecke word for `w`.
pub fn fg_coefficients(w: &Permutation, m: usize, max_degree: usize) -> BTreeMap<Partition, usize> {
    let top = w.n().saturating_sub(1) as u32;
    let mut out = BTreeMap::new();
    for d in w.length()..=max_degree {
        for lam in Partition::of_size(d, m, d) {
            let count = enumerate_row_strict(&lam, top)
                .iter()
                .filter(|t| t.word().is_hecke_word(w).unwrap())
                .count();
            if count > 0 {
                out.insert(lam, count);
            }
        }
    }
    out
}

/// Schur expansion of the stable Grothendieck polynomial in `m` variables
/// against the row-strict tableau count, for x-degrees up to `m`.
pub fn suite_fg(w: &Permutation, m: usize) -> SuiteReport {
    let pop = format!("w = {w}, m = {m}, degrees {}..={m}", w.length());
    let g = stable_groth(w, m);
    let got = match expand_in_schur(&g, m, Some(m)) {
        Ok(e) => e,
        Err(e) => return SuiteReport::new("fg", pop, vec![json!({ "w": w.to_string(), "error": e.to_string() })]),
    };
    let ell = w.length();
    let want = expansion_from_terms(
        Basis::Schur,
        fg_coefficients(w, m, m).into_iter().flat_map(|(lam, count)| {
            let k = lam.size() - ell;
            std::iter::repeat_n((Composition::new(lam.parts().to_vec()), k), count)
        }),
    );
    let failures = if got == want {
        vec![]
    } else {
        vec![json!({ "w": w.to_string(), "expanded": got.to_string(), "counted": want.to_string() })]
    };
    SuiteReport::new("fg", pop, failures)
}

/// Linear-algebra Lascoux expansion of `G_w` against the left-key
/// contents; `None` when they agree and every coefficient is positive.
pub fn oracle_witness(cache: &FamilyCache, w: &Permutation) -> Option<Value> {
    let vars = w.n().saturating_sub(1).max(1);
    let tableau_side = check_conjecture(cache, w).expansion();
    match expand_in_lascoux(cache, &cache.grothendieck(w), vars) {
        Ok(e) if e == tableau_side && e.is_positive() => None,
        Ok(e) => Some(json!({
            "w": w.to_string(),
            "linear_algebra": e.to_string(),
            "left_keys": tableau_side.to_string(),
            "positive": e.is_positive(),
        })),
        Err(e) => Some(json!({ "w": w.to_string(), "error": e.to_string() })),
    }
}

pub fn suite_oracle(cache: &FamilyCache, n: usize) -> SuiteReport {
    let failures = Permutation::all(n)
        .filter_map(|w| oracle_witness(cache, &w))
        .collect();
    SuiteReport::new("oracle", population(n), failures)
}

/// Key expansion of `Omega_{1,0,2,1}`, whose `b^1` part has a negative
/// coefficient.
pub fn warning_example(cache: &FamilyCache) -> Expansion {
    let alpha = Composition::new(vec![1, 0, 2, 1]);
    expand_in_keys(cache, &cache.lascoux(&alpha), 4)
        .expect("a Lascoux polynomial lies in the span of the keys")
}

/// The displayed `b^0` and `b^1` parts of the warning example.
pub fn warning_expected() -> Expansion {
    let c = |v: &[usize]| Composition::new(v.to_vec());
    Expansion::from_signed(
        Basis::Key,
        [
            (c(&[1, 0, 2, 1]), 0, 1),
            (c(&[1, 1, 2, 1]), 1, 2),
            (c(&[2, 0, 2, 1]), 1, 1),
            (c(&[1, 2, 2]), 1, 1),
            (c(&[2, 1, 2]), 1, -1),
        ],
    )
}

pub fn suite_warning(cache: &FamilyCache) -> (Expansion, SuiteReport) {
    let e = warning_example(cache);
    let shown = e.beta_part(0).plus(&e.beta_part(1));
    let failures = if shown == warning_expected() {
        vec![]
    } else {
        vec![json!({ "computed": shown.to_string(), "expected": warning_expected().to_string() })]
    };
    (e, SuiteReport::new("warning", "Omega_{1,0,2,1} in keys, b^0 and b^1", failures))
}

/// `restrict_vars(G_{1^k x w}, m)` for each `k`, which should all agree
/// with the stable limit `stable_groth(w, m)`.
pub fn stable_limit_witness(
    cache: &FamilyCache,
    w: &Permutation,
    m: usize,
    ks: &[usize],
) -> Option<Value> {
    let limit = stable_groth(w, m);
    let bad: Vec<usize> = ks
        .iter()
        .copied()
        .filter(|&k| cache.grothendieck(&w.shift(k)).restrict_vars(m) != limit)
        .collect();
    (!bad.is_empty()).then(|| json!({ "w": w.to_string(), "m": m, "k": bad }))
}

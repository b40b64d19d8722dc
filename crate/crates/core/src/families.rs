//! The polynomial families: Grothendieck and Schubert polynomials by
//! `pi_i` recursion, Lascoux and key polynomials by `pi_tilde_i` recursion,
//! compatible-sequence sums, stable Grothendieck polynomials, and
//! set-valued tableau generating functions.

use std::collections::{BTreeMap, HashMap};
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{BetaScalar, Exponent, MVPolynomial, PolyJson};
use crate::error::{Error, Result};
use crate::symgroup::{demazure_step, Permutation};
use crate::tableaux::{enumerate_semistandard, enumerate_set_valued, Composition, Partition};

/// Which ascent drives a recursion step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pivot {
    Smallest,
    Largest,
}

impl Pivot {
    fn choose(self, ascents: &[usize]) -> Option<usize> {
        match self {
            Pivot::Smallest => ascents.first().copied(),
            Pivot::Largest => ascents.last().copied(),
        }
    }
}

type Memo<K> = RwLock<HashMap<K, Arc<MVPolynomial>>>;

/// Memo tables for the recursive families.
///
/// Entries are inserted only when absent and never mutated, so a cache can
/// be shared by concurrent workers; two workers racing on the same key
/// compute identical values.
#[derive(Default)]
pub struct FamilyCache {
    groth: Memo<Vec<usize>>,
    lascoux: Memo<Composition>,
    key: Memo<Composition>,
}

fn lookup<K: std::hash::Hash + Eq>(memo: &Memo<K>, k: &K) -> Option<Arc<MVPolynomial>> {
    memo.read().unwrap().get(k).cloned()
}

fn insert<K: std::hash::Hash + Eq>(memo: &Memo<K>, k: K, v: MVPolynomial) -> Arc<MVPolynomial> {
    memo.write()
        .unwrap()
        .entry(k)
        .or_insert_with(|| Arc::new(v))
        .clone()
}

impl FamilyCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// The beta-Grothendieck polynomial of `w`, in `x_1..x_{n-1}`.
    pub fn grothendieck(&self, w: &Permutation) -> Arc<MVPolynomial> {
        let key = w.one_line().to_vec();
        if let Some(p) = lookup(&self.groth, &key) {
            return p;
        }
        let n = w.n();
        let p = match Pivot::Smallest.choose(&w.ascents()) {
            None => staircase_monomial(n),
            Some(i) => self
                .grothendieck(&w.mul_simple(i))
                .pi(i)
                .shrink_vars(n.saturating_sub(1)),
        };
        insert(&self.groth, key, p)
    }

    /// `grothendieck(w)` at `b = 0`.
    pub fn schubert(&self, w: &Permutation) -> MVPolynomial {
        self.grothendieck(w).beta_zero()
    }

    /// The beta-Lascoux polynomial of `alpha`, in `x_1..x_len(alpha)`.
    pub fn lascoux(&self, alpha: &Composition) -> Arc<MVPolynomial> {
        if let Some(p) = lookup(&self.lascoux, alpha) {
            return p;
        }
        let p = match Pivot::Smallest.choose(&alpha.ascents()) {
            None => dominant_monomial(alpha),
            Some(i) => self
                .lascoux(&alpha.swapped(i))
                .pi_tilde(i)
                .with_vars(alpha.len()),
        };
        insert(&self.lascoux, alpha.clone(), p)
    }

    /// The key polynomial (Demazure character) of `alpha`: the Lascoux
    /// polynomial at `b = 0`. Computed by the same recursion with the
    /// isobaric divided difference, which is `pi_tilde` at `b = 0`.
    pub fn key(&self, alpha: &Composition) -> Arc<MVPolynomial> {
        if let Some(p) = lookup(&self.key, alpha) {
            return p;
        }
        let p = match Pivot::Smallest.choose(&alpha.ascents()) {
            None => dominant_monomial(alpha),
            Some(i) => self
                .key(&alpha.swapped(i))
                .demazure(i)
                .with_vars(alpha.len()),
        };
        insert(&self.key, alpha.clone(), p)
    }

    pub fn len_groth(&self) -> usize {
        self.groth.read().unwrap().len()
    }

    pub fn len_lascoux(&self) -> usize {
        self.lascoux.read().unwrap().len()
    }

    /// Write every Grothendieck and Lascoux entry as JSON lines, in key
    /// order, after a format header.
    pub fn save_jsonl(&self, path: &Path) -> Result<()> {
        let io = |e: std::io::Error| Error::Cache(format!("{}: {e}", path.display()));
        let mut out = BufWriter::new(File::create(path).map_err(io)?);
        let mut lines = vec![serde_json::to_string(&CacheHeader {
            format: CACHE_FORMAT.into(),
            version: CACHE_VERSION,
        })
        .unwrap()];
        let groth: BTreeMap<Vec<usize>, Arc<MVPolynomial>> = self
            .groth
            .read()
            .unwrap()
            .iter()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        for (k, p) in groth {
            let w = Permutation::new(k).expect("memo keys are permutations");
            lines.push(record("groth", w.to_string(), &p));
        }
        let lascoux: BTreeMap<Composition, Arc<MVPolynomial>> = self
            .lascoux
            .read()
            .unwrap()
            .iter()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        for (k, p) in lascoux {
            lines.push(record("lascoux", k.to_string(), &p));
        }
        for l in lines {
            writeln!(out, "{l}").map_err(io)?;
        }
        out.flush().map_err(io)
    }

    /// Read a cache written by [`FamilyCache::save_jsonl`]. Entries already
    /// present are kept, and must agree with the file.
    pub fn load_jsonl(&self, path: &Path) -> Result<usize> {
        let io = |e: std::io::Error| Error::Cache(format!("{}: {e}", path.display()));
        let reader = BufReader::new(File::open(path).map_err(io)?);
        let mut lines = reader.lines();
        let header: CacheHeader = match lines.next() {
            Some(l) => serde_json::from_str(&l.map_err(io)?)
                .map_err(|e| Error::Cache(format!("bad header: {e}")))?,
            None => return Err(Error::Cache("empty cache file".into())),
        };
        if header.format != CACHE_FORMAT || header.version != CACHE_VERSION {
            return Err(Error::Cache(format!(
                "unsupported cache format {:?} version {}",
                header.format, header.version
            )));
        }
        let mut count = 0;
        for line in lines {
            let line = line.map_err(io)?;
            if line.trim().is_empty() {
                continue;
            }
            let rec: CacheRecord = serde_json::from_str(&line)
                .map_err(|e| Error::Cache(format!("bad record: {e}")))?;
            let poly = MVPolynomial::from_json(&rec.poly)?;
            let stored = match rec.kind.as_str() {
                "groth" => {
                    let w: Permutation = rec.key.parse()?;
                    insert(&self.groth, w.one_line().to_vec(), poly.clone())
                }
                "lascoux" => {
                    let a: Composition = rec.key.parse()?;
                    insert(&self.lascoux, a, poly.clone())
                }
                other => return Err(Error::Cache(format!("unknown record kind {other:?}"))),
            };
            if *stored != poly {
                return Err(Error::Cache(format!(
                    "record {} {} disagrees with the cached value",
                    rec.kind, rec.key
                )));
            }
            count += 1;
        }
        Ok(count)
    }
}

const CACHE_FORMAT: &str = "kgroth-cache";
const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheHeader {
    format: String,
    version: u32,
}

#[derive(Serialize, Deserialize)]
struct CacheRecord {
    kind: String,
    key: String,
    poly: PolyJson,
}

fn record(kind: &str, key: String, p: &MVPolynomial) -> String {
    serde_json::to_string(&CacheRecord {
        kind: kind.into(),
        key,
        poly: p.to_json(),
    })
    .unwrap()
}

/// `x_1^{n-1} x_2^{n-2} ... x_{n-1}`.
fn staircase_monomial(n: usize) -> MVPolynomial {
    let e: Vec<u32> = (1..n).rev().map(|p| p as u32).collect();
    MVPolynomial::monomial(e, BetaScalar::one())
}

fn dominant_monomial(alpha: &Composition) -> MVPolynomial {
    let e: Vec<u32> = alpha.entries().iter().map(|&a| a as u32).collect();
    MVPolynomial::monomial(e, BetaScalar::one())
}

/// Uncached Grothendieck recursion with an explicit pivot rule.
pub fn grothendieck_by(w: &Permutation, pivot: Pivot) -> MVPolynomial {
    match pivot.choose(&w.ascents()) {
        None => staircase_monomial(w.n()),
        Some(i) => grothendieck_by(&w.mul_simple(i), pivot)
            .pi(i)
            .shrink_vars(w.n().saturating_sub(1)),
    }
}

/// Uncached Lascoux recursion with an explicit pivot rule.
pub fn lascoux_by(alpha: &Composition, pivot: Pivot) -> MVPolynomial {
    match pivot.choose(&alpha.ascents()) {
        None => dominant_monomial(alpha),
        Some(i) => lascoux_by(&alpha.swapped(i), pivot)
            .pi_tilde(i)
            .with_vars(alpha.len()),
    }
}

/// Which compatible pairs `(a, i)` a sum ranges over.
#[derive(Clone, Copy, Debug)]
struct PairRules {
    /// Largest value of `i_j`.
    max_index: usize,
    /// Require `i_j <= a_j`.
    bounded: bool,
    /// Only reduced words `a`.
    reduced: bool,
}

/// Sum `b^{N - l(w)} x^i` over pairs `(a, i)` obeying `rules`, for every
/// `w` in `S_n` at once (or only `target` and the permutations below it in
/// length).
///
/// Runs of equal `i_j` must carry strictly decreasing letters, since a weak
/// ascent `a_j <= a_{j+1}` forces `i_j < i_{j+1}`. A pair is therefore a
/// choice, for each value `v = 1..max_index`, of a set of letters read in
/// decreasing order; the sum is a dynamic program over `v` keyed by the
/// Demazure product so far.
fn compatible_sums(
    n: usize,
    rules: PairRules,
    target: Option<&Permutation>,
) -> BTreeMap<Permutation, MVPolynomial> {
    let m = rules.max_index;
    let max_len = target.map_or(usize::MAX, Permutation::length);
    let letters = n.saturating_sub(1);
    // product -> (exponent -> count)
    let mut states: BTreeMap<Vec<usize>, BTreeMap<Vec<u32>, BigInt>> = BTreeMap::new();
    states
        .entry((1..=n).collect())
        .or_default()
        .insert(vec![0; m], BigInt::one());

    for v in 1..=m {
        let lo = if rules.bounded { v } else { 1 };
        let allowed: Vec<usize> = (lo..=letters).rev().collect();
        let mut next: BTreeMap<Vec<usize>, BTreeMap<Vec<u32>, BigInt>> = BTreeMap::new();
        for (w, exps) in &states {
            for mask in 0u32..1 << allowed.len() {
                let mut u = Permutation::new(w.clone()).unwrap();
                let mut ok = true;
                let mut count = 0;
                for (bit, &a) in allowed.iter().enumerate() {
                    if mask >> bit & 1 == 0 {
                        continue;
                    }
                    count += 1;
                    let before = u.length();
                    demazure_step(&mut u, a);
                    if rules.reduced && u.length() == before {
                        ok = false;
                        break;
                    }
                }
                if !ok || u.length() > max_len {
                    continue;
                }
                let slot = next.entry(u.one_line().to_vec()).or_default();
                for (e, c) in exps {
                    let mut e = e.clone();
                    e[v - 1] = count;
                    *slot.entry(e).or_insert_with(BigInt::zero) += c;
                }
            }
        }
        states = next;
    }

    states
        .into_iter()
        .filter(|(w, _)| target.is_none_or(|t| Permutation::new(w.clone()).unwrap() == *t))
        .map(|(w, exps)| {
            let w = Permutation::new(w).unwrap();
            let len = w.length();
            let poly = MVPolynomial::from_terms(
                m,
                exps.into_iter().map(|(e, c)| {
                    let deg: usize = e.iter().map(|&x| x as usize).sum();
                    (Exponent::new(e), BetaScalar::monomial(c, deg - len))
                }),
            );
            (w, poly)
        })
        .collect()
}

fn single(map: BTreeMap<Permutation, MVPolynomial>, w: &Permutation, vars: usize) -> MVPolynomial {
    map.into_iter()
        .find(|(u, _)| u == w)
        .map(|(_, p)| p)
        .unwrap_or_else(|| MVPolynomial::zero(vars))
}

/// The Grothendieck polynomial of `w` as a sum over compatible pairs:
/// `a` a Hecke word for `w`, `i` weakly increasing, `i_j <= a_j`, and
/// `a_j <= a_{j+1}` forcing `i_j < i_{j+1}`.
pub fn groth_compatible(w: &Permutation) -> MVPolynomial {
    let vars = w.n().saturating_sub(1);
    let rules = PairRules {
        max_index: vars,
        bounded: true,
        reduced: false,
    };
    single(compatible_sums(w.n(), rules, Some(w)), w, vars)
}

/// `groth_compatible` for every `w` in `S_n`.
pub fn groth_compatible_all(n: usize) -> BTreeMap<Permutation, MVPolynomial> {
    let rules = PairRules {
        max_index: n.saturating_sub(1),
        bounded: true,
        reduced: false,
    };
    compatible_sums(n, rules, None)
}

/// The compatible-pair sum restricted to reduced words: the Schubert
/// polynomial of `w`.
pub fn schubert_compatible(w: &Permutation) -> MVPolynomial {
    let vars = w.n().saturating_sub(1);
    let rules = PairRules {
        max_index: vars,
        bounded: true,
        reduced: true,
    };
    single(compatible_sums(w.n(), rules, Some(w)), w, vars)
}

/// The stable Grothendieck polynomial of `w` in `x_1..x_m`: compatible
/// pairs without the bound `i_j <= a_j`, and `i_j <= m`.
pub fn stable_groth(w: &Permutation, m: usize) -> MVPolynomial {
    let rules = PairRules {
        max_index: m,
        bounded: false,
        reduced: false,
    };
    single(compatible_sums(w.n(), rules, Some(w)), w, m)
}

/// `G_lambda` in `x_1..x_m` as a sum over set-valued tableaux:
/// `b^{#labels - |lambda|} x^T`.
pub fn buch_g(lambda: &Partition, m: usize) -> MVPolynomial {
    if lambda.is_empty() {
        return MVPolynomial::one(m);
    }
    let size = lambda.size();
    MVPolynomial::from_terms(
        m,
        enumerate_set_valued(lambda, m as u32).into_iter().map(|t| {
            (
                Exponent::new(t.weight(m)),
                BetaScalar::beta_pow(t.label_count() - size),
            )
        }),
    )
}

/// The Schur polynomial `s_lambda(x_1..x_m)`. Its terms are the `b^0`
/// terms of [`buch_g`], the singleton set-valued tableaux, so it is summed
/// over semistandard tableaux directly.
pub fn schur(lambda: &Partition, m: usize) -> MVPolynomial {
    if lambda.is_empty() {
        return MVPolynomial::one(m);
    }
    MVPolynomial::from_terms(
        m,
        enumerate_semistandard(lambda, m as u32).into_iter().map(|t| {
            let mut e = vec![0u32; m];
            for (_, _, v) in t.cells() {
                e[v as usize - 1] += 1;
            }
            (Exponent::new(e), BetaScalar::one())
        }),
    )
}

/// `s_{sort(alpha)}(x_1..x_n) == kappa_{(0^big_n, alpha)}(x_1..x_n, 0, ...)`.
pub fn stabilization_check(cache: &FamilyCache, alpha: &Composition, n: usize, big_n: usize) -> bool {
    assert!(big_n > n, "stabilization needs N > n");
    let shifted = alpha.prepend_zeros(big_n);
    cache.key(&shifted).restrict_vars(n) == schur(&alpha.sort_to_partition(), n)
}

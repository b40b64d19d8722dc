//! Permutations in one-line notation, words in the simple transpositions,
//! and the 0-Hecke (Demazure) product.
//!
//! Multiplying `w` on the right by `s_a` exchanges positions `a` and `a+1`
//! of the one-line notation, so the word `(2, 4, 1, 3)` multiplies out to
//! `31524`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::tableaux::Partition;

/// An element of `S_n` in one-line notation. `n` is carried explicitly;
/// equality and hashing ignore trailing fixed points.
#[derive(Clone, Debug)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::input(format!(
                    "{one_line:?} is not a permutation of 1..{n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            one_line: (1..=n).collect(),
        }
    }

    /// `w_0 = n (n-1) ... 1`.
    pub fn longest_element(n: usize) -> Self {
        Permutation {
            one_line: (1..=n).rev().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// `w(i)`, 1-based; fixed beyond `n`.
    pub fn at(&self, i: usize) -> usize {
        self.one_line.get(i - 1).copied().unwrap_or(i)
    }

    /// One-line notation without trailing fixed points.
    pub fn trimmed(&self) -> &[usize] {
        let mut end = self.one_line.len();
        while end > 0 && self.one_line[end - 1] == end {
            end -= 1;
        }
        &self.one_line[..end]
    }

    /// The same permutation in `S_m`, `m >= n`.
    pub fn extended(&self, m: usize) -> Self {
        assert!(m >= self.n(), "cannot embed S_{} into S_{m}", self.n());
        let mut one_line = self.one_line.clone();
        one_line.extend(self.n() + 1..=m);
        Permutation { one_line }
    }

    pub fn is_identity(&self) -> bool {
        self.trimmed().is_empty()
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.one_line;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count())
            .sum()
    }

    /// Positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.at(i) > self.at(i + 1)).collect()
    }

    /// Positions `i` with `w(i) < w(i+1)`.
    pub fn ascents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.at(i) < self.at(i + 1)).collect()
    }

    /// `w s_i`: exchange positions `i` and `i+1`.
    pub fn mul_simple(&self, i: usize) -> Self {
        assert!(i >= 1 && i < self.n(), "s_{i} is not in S_{}", self.n());
        let mut one_line = self.one_line.clone();
        one_line.swap(i - 1, i);
        Permutation { one_line }
    }

    /// `1^k x w`: fix `1..k`, then act as `w` shifted up by `k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut one_line: Vec<usize> = (1..=k).collect();
        one_line.extend(self.one_line.iter().map(|v| v + k));
        Permutation { one_line }
    }

    /// If `w` has exactly one descent `k`, returns `(k, lambda(w))` with
    /// `lambda_i = w(k-i+1) - (k-i+1)`. The identity has no descent and
    /// returns `None`; its shape is the empty partition at any `k`.
    pub fn grassmannian_data(&self) -> Option<(usize, Partition)> {
        let d = self.descents();
        if d.len() != 1 {
            return None;
        }
        let k = d[0];
        let parts = (1..=k).map(|i| self.at(k - i + 1) - (k - i + 1)).collect();
        Some((k, Partition::new(parts).expect("Grassmannian shape is a partition")))
    }

    /// The Grassmannian permutation with descent at `k` (or the identity)
    /// whose shape is `lambda`, in the smallest `S_n` that holds it.
    pub fn grassmannian_from_partition(lambda: &Partition, k: usize) -> Result<Self> {
        let parts = lambda.parts();
        if parts.len() > k {
            return Err(Error::input(format!(
                "partition {lambda} has more than {k} parts"
            )));
        }
        if parts.is_empty() {
            return Ok(Permutation::identity(k.max(1)));
        }
        let part = |i: usize| parts.get(i - 1).copied().unwrap_or(0);
        let head: Vec<usize> = (1..=k).map(|j| part(k - j + 1) + j).collect();
        let n = k + parts[0];
        let mut one_line = head.clone();
        one_line.extend((1..=n).filter(|v| !head.contains(v)));
        Permutation::new(one_line)
    }

    /// Every element of `S_n` in lexicographic one-line order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut next = Some((1..=n).collect::<Vec<usize>>());
        std::iter::from_fn(move || {
            let cur = next.take()?;
            let mut succ = cur.clone();
            if next_permutation(&mut succ) {
                next = Some(succ);
            }
            Some(Permutation { one_line: cur })
        })
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl PartialEq for Permutation {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for Permutation {}

impl Hash for Permutation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.trimmed().cmp(other.trimmed())
    }
}

/// `31524` when `n <= 9`, otherwise `3,1,5,2,4,...`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.one_line {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            f.write_str(&join(&self.one_line))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let one_line: Vec<usize> = if s.contains(',') {
            parse_list(s)?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::parse(format!("bad permutation {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        if one_line.is_empty() {
            return Err(Error::parse("empty permutation"));
        }
        Permutation::new(one_line)
    }
}

/// A word in the generators `s_1, s_2, ...`; letter `a` stands for `s_a`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn check_letters(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|&&a| a == 0 || a >= n) {
            Some(a) => Err(Error::input(format!(
                "letter {a} is not a generator of S_{n}"
            ))),
            None => Ok(()),
        }
    }

    /// The plain product `s_{a1} s_{a2} ...` in `S_n`.
    pub fn product(&self, n: usize) -> Result<Permutation> {
        self.check_letters(n)?;
        Ok(self
            .0
            .iter()
            .fold(Permutation::identity(n), |w, &a| w.mul_simple(a)))
    }

    /// The Demazure product: fold with `w <- w s_a` when that raises the
    /// length, else keep `w`. This is the permutation of the word's class
    /// in the 0-Hecke monoid.
    pub fn demazure_product(&self, n: usize) -> Result<Permutation> {
        self.check_letters(n)?;
        let mut w = Permutation::identity(n);
        for &a in &self.0 {
            demazure_step(&mut w, a);
        }
        Ok(w)
    }

    /// True iff the Demazure product of the word is `w`.
    pub fn is_hecke_word(&self, w: &Permutation) -> Result<bool> {
        Ok(self.demazure_product(w.n())? == *w)
    }

    /// True iff the word multiplies out to `w` and has length `l(w)`.
    pub fn is_reduced(&self, w: &Permutation) -> Result<bool> {
        Ok(self.len() == w.length() && self.product(w.n())? == *w)
    }
}

/// One Demazure step in place. `a` must be a valid generator for `w`.
pub(crate) fn demazure_step(w: &mut Permutation, a: usize) {
    if w.one_line[a - 1] < w.one_line[a] {
        w.one_line.swap(a - 1, a);
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::default());
        }
        Ok(Word(parse_list(s)?))
    }
}

pub(crate) fn join<T: fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub(crate) fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::parse(format!("bad integer {t:?} in {s:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{BTreeMap, HashSet};

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn lengths() {
        assert_eq!(Permutation::identity(4).length(), 0);
        assert_eq!(perm("321").length(), 3);
        assert_eq!(perm("31524").length(), 4);
    }

    #[test]
    fn longest() {
        assert_eq!(Permutation::longest_element(1).to_string(), "1");
        assert_eq!(Permutation::longest_element(3).to_string(), "321");
        assert_eq!(Permutation::longest_element(5).to_string(), "54321");
    }

    #[test]
    fn demazure_products() {
        assert_eq!(word("4,2,4,1,3").demazure_product(5).unwrap(), perm("31524"));
        assert_eq!(word("1,1").demazure_product(2).unwrap(), perm("21"));
        assert!(Word::default().demazure_product(4).unwrap().is_identity());
        assert!(word("5").demazure_product(5).is_err());
        assert!(word("0").demazure_product(5).is_err());
    }

    #[test]
    fn hecke_and_reduced() {
        assert!(word("4,2,4,1,3").is_hecke_word(&perm("31524")).unwrap());
        assert!(word("1").is_hecke_word(&perm("21")).unwrap());
        assert!(!word("1").is_hecke_word(&Permutation::identity(2)).unwrap());
        assert!(word("2,4,1,3").is_reduced(&perm("31524")).unwrap());
        assert!(!word("1,1").is_reduced(&perm("21")).unwrap());
        assert!(Word::default().is_reduced(&Permutation::identity(3)).unwrap());
        assert!(!word("4,2,4,1,3").is_reduced(&perm("31524")).unwrap());
    }

    #[test]
    fn grassmannian() {
        let (k, lam) = perm("23514").grassmannian_data().unwrap();
        assert_eq!((k, lam.parts()), (3, &[2, 1, 1][..]));
        let (k, lam) = perm("21").grassmannian_data().unwrap();
        assert_eq!((k, lam.parts()), (1, &[1][..]));
        assert!(perm("321").grassmannian_data().is_none());
        assert!(perm("123").grassmannian_data().is_none());

        let p = |v: Vec<usize>| Partition::new(v).unwrap();
        assert_eq!(
            Permutation::grassmannian_from_partition(&p(vec![2, 1, 1]), 3).unwrap(),
            perm("23514")
        );
        assert_eq!(
            Permutation::grassmannian_from_partition(&p(vec![1]), 1).unwrap(),
            perm("21")
        );
        assert!(Permutation::grassmannian_from_partition(&p(vec![]), 4)
            .unwrap()
            .is_identity());
        assert!(Permutation::grassmannian_from_partition(&p(vec![1, 1]), 1).is_err());
    }

    #[test]
    fn grassmannian_round_trip() {
        for n in 2..=6 {
            for w in Permutation::all(n) {
                if let Some((k, lam)) = w.grassmannian_data() {
                    let v = Permutation::grassmannian_from_partition(&lam, k).unwrap();
                    assert_eq!(v, w);
                }
            }
        }
    }

    #[test]
    fn shifts() {
        assert_eq!(perm("21").shift(2).to_string(), "1243");
        assert_eq!(perm("31524").shift(0), perm("31524"));
        assert_eq!(perm("132").shift(1).to_string(), "1243");
        for w in Permutation::all(4) {
            for k in 0..=3 {
                assert_eq!(w.shift(k).length(), w.length());
            }
        }
    }

    #[test]
    fn enumeration() {
        let s1: Vec<_> = Permutation::all(1).map(|w| w.to_string()).collect();
        assert_eq!(s1, ["1"]);
        let s2: Vec<_> = Permutation::all(2).map(|w| w.to_string()).collect();
        assert_eq!(s2, ["12", "21"]);
        let s3: Vec<_> = Permutation::all(3).collect();
        assert_eq!(s3.len(), 6);
        assert_eq!(s3[0].to_string(), "123");
        assert_eq!(s3[5].to_string(), "321");
        assert_eq!(Permutation::all(5).count(), 120);
        let strings: Vec<String> = Permutation::all(4).map(|w| w.to_string()).collect();
        let mut sorted = strings.clone();
        sorted.sort();
        assert_eq!(strings, sorted);
    }

    #[test]
    fn equality_ignores_trailing_fixed_points() {
        assert_eq!(perm("21"), perm("2134"));
        assert_eq!(perm("1"), Permutation::identity(5));
        let set: HashSet<Permutation> = [perm("21"), perm("213")].into_iter().collect();
        assert_eq!(set.len(), 1);
    }

    #[test]
    fn text_formats() {
        assert_eq!(perm("3,1,5,2,4"), perm("31524"));
        let big = Permutation::identity(10).mul_simple(9);
        assert_eq!(big.to_string(), "1,2,3,4,5,6,7,8,10,9");
        assert_eq!(big.to_string().parse::<Permutation>().unwrap(), big);
        assert!("3152".parse::<Permutation>().is_err());
        assert_eq!(word("4,2,4,1,3").to_string(), "4,2,4,1,3");
    }

    fn reduced_words(w: &Permutation) -> Vec<Word> {
        if w.is_identity() {
            return vec![Word::default()];
        }
        let mut out = Vec::new();
        for d in w.descents() {
            for mut r in reduced_words(&w.mul_simple(d)) {
                r.0.push(d);
                out.push(r);
            }
        }
        out
    }

    #[test]
    fn reduced_words_are_hecke_words_and_tolerate_doubling() {
        for w in Permutation::all(4) {
            for r in reduced_words(&w) {
                assert!(r.is_reduced(&w).unwrap());
                assert!(r.is_hecke_word(&w).unwrap());
                for pos in 0..r.len() {
                    let mut doubled = r.0.clone();
                    doubled.insert(pos, r.0[pos]);
                    assert!(Word(doubled).is_hecke_word(&w).unwrap());
                }
            }
        }
    }

    #[test]
    fn appending_never_lowers_length() {
        let mut words = vec![Word::default()];
        for _ in 0..5 {
            let mut next = Vec::new();
            for w in &words {
                let before = w.demazure_product(4).unwrap().length();
                for a in 1..4 {
                    let mut ext = w.0.clone();
                    ext.push(a);
                    let ext = Word(ext);
                    assert!(ext.demazure_product(4).unwrap().length() >= before);
                    next.push(ext);
                }
            }
            words = next;
        }
    }

    /// Classes of words of length <= 5 over the generators of S_4 under the
    /// Hecke relations, computed by closing under the rewrite rules. Two
    /// words share a class exactly when their Demazure products agree. The
    /// longest element needs six letters, so 23 classes occur.
    #[test]
    fn demazure_product_matches_rewriting_closure() {
        const MAX: usize = 5;
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        let mut frontier = vec![vec![]];
        for _ in 0..MAX {
            let mut next = Vec::new();
            for w in &frontier {
                for a in 1..=3 {
                    let mut e: Vec<usize> = w.clone();
                    e.push(a);
                    next.push(e);
                }
            }
            words.extend(next.iter().cloned());
            frontier = next;
        }
        let index: BTreeMap<Vec<usize>, usize> =
            words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let mut parent: Vec<usize> = (0..words.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let mut union = |a: &[usize], b: &[usize]| {
            if let (Some(&i), Some(&j)) = (index.get(a), index.get(b)) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri] = rj;
            }
        };
        for w in &words {
            for p in 0..w.len() {
                // u_i u_i = u_i
                if p + 1 < w.len() && w[p] == w[p + 1] {
                    let mut short = w.clone();
                    short.remove(p);
                    union(w, &short);
                }
                // u_i u_j = u_j u_i for |i - j| > 1
                if p + 1 < w.len() && w[p].abs_diff(w[p + 1]) > 1 {
                    let mut c = w.clone();
                    c.swap(p, p + 1);
                    union(w, &c);
                }
                // u_i u_{i+1} u_i = u_{i+1} u_i u_{i+1}
                if p + 2 < w.len() && w[p] == w[p + 2] && w[p].abs_diff(w[p + 1]) == 1 {
                    let mut c = w.clone();
                    c[p] = w[p + 1];
                    c[p + 1] = w[p];
                    c[p + 2] = w[p + 1];
                    union(w, &c);
                }
            }
        }
        let mut class_of: BTreeMap<usize, Permutation> = BTreeMap::new();
        let mut product_of: BTreeMap<Permutation, usize> = BTreeMap::new();
        for (i, w) in words.iter().enumerate() {
            let root = find(&mut parent, i);
            let d = Word(w.clone()).demazure_product(4).unwrap();
            if let Some(prev) = class_of.insert(root, d.clone()) {
                assert_eq!(prev, d, "class of {w:?} mixes products");
            }
            if let Some(prev) = product_of.insert(d.clone(), root) {
                assert_eq!(prev, root, "product {d} split across classes");
            }
        }
        assert_eq!(product_of.len(), 23);
    }
}

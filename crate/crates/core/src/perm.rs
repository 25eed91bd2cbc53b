//! Signed permutations, permutations of finite sets, and word utilities.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, ParseErrorKind, Result};

/// A finite sequence of nonzero integers. `a` and `-a` are distinct letters.
pub type Word = Vec<i32>;

/// Shared interface of the two Coxeter groups we compute in: W_n and S_X.
///
/// Generators are indexed by `generators()`; multiplication by a generator
/// is on the right unless stated otherwise.
pub trait CoxeterElement: Clone + Eq + Hash {
    fn generators(&self) -> std::ops::Range<usize>;
    fn is_right_descent(&self, s: usize) -> bool;
    fn mul_generator(&self, s: usize) -> Self;
    fn left_mul_generator(&self, s: usize) -> Self;
    fn inverse(&self) -> Self;
    fn length(&self) -> usize;
    fn one(&self) -> Self;

    fn right_descent_set(&self) -> Vec<usize> {
        self.generators()
            .filter(|&s| self.is_right_descent(s))
            .collect()
    }

    fn is_left_descent(&self, s: usize) -> bool {
        self.inverse().is_right_descent(s)
    }

    /// Greedy reduced word: peel off the smallest right descent each time.
    fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::with_capacity(self.length());
        while let Some(s) = w.generators().find(|&s| w.is_right_descent(s)) {
            rev.push(s);
            w = w.mul_generator(s);
        }
        rev.reverse();
        rev
    }

    /// Product of a generator word `t_{s_1} ⋯ t_{s_k}`, starting from `self`.
    fn mul_word(&self, word: &[usize]) -> Self {
        word.iter().fold(self.clone(), |w, &s| w.mul_generator(s))
    }
}

/// `u ∘ v`, folding a reduced word of `v` into `u`.
pub fn demazure_product<T: CoxeterElement>(u: &T, v: &T) -> T {
    demazure_word(u, &v.reduced_word())
}

/// `u ∘ s_1 ∘ ⋯ ∘ s_k`.
pub fn demazure_word<T: CoxeterElement>(u: &T, word: &[usize]) -> T {
    let mut w = u.clone();
    for &s in word {
        if !w.is_right_descent(s) {
            w = w.mul_generator(s);
        }
    }
    w
}

/// `w^{-1} ∘ w`.
pub fn hecke_image<T: CoxeterElement>(w: &T) -> T {
    demazure_product(&w.inverse(), w)
}

/// All reduced words, in lexicographic order.
pub fn reduced_words<T: CoxeterElement>(w: &T) -> Vec<Vec<usize>> {
    fn go<T: CoxeterElement>(w: &T, suffix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let des = w.right_descent_set();
        if des.is_empty() {
            out.push(suffix.iter().rev().copied().collect());
            return;
        }
        for s in des {
            suffix.push(s);
            go(&w.mul_generator(s), suffix, out);
            suffix.pop();
        }
    }
    let mut out = Vec::new();
    go(w, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// |R(w)| by memoized recursion over right descents.
pub fn count_reduced_words<T: CoxeterElement>(w: &T) -> BigUint {
    let mut memo: HashMap<T, BigUint> = HashMap::new();
    count_memo(w, &mut memo)
}

fn count_memo<T: CoxeterElement>(w: &T, memo: &mut HashMap<T, BigUint>) -> BigUint {
    if let Some(c) = memo.get(w) {
        return c.clone();
    }
    let des = w.right_descent_set();
    let total = if des.is_empty() {
        BigUint::one()
    } else {
        let mut t = BigUint::zero();
        for s in des {
            t += count_memo(&w.mul_generator(s), memo);
        }
        t
    };
    memo.insert(w.clone(), total.clone());
    total
}

// ---------------------------------------------------------------------------
// Signed permutations
// ---------------------------------------------------------------------------

/// An element of W_n, stored by its window `w(1), …, w(n)`.
///
/// Ordering is lexicographic on windows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    pub fn from_window(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for (pos, &v) in window.iter().enumerate() {
            let kind = if v == 0 {
                Some(ParseErrorKind::Zero)
            } else if v.unsigned_abs() as usize > n {
                Some(ParseErrorKind::OutOfRange {
                    value: v as i64,
                    rank: n,
                })
            } else if seen[v.unsigned_abs() as usize] {
                Some(ParseErrorKind::Duplicate(v.abs() as i64))
            } else {
                None
            };
            if let Some(kind) = kind {
                return Err(Error::Parse {
                    position: pos,
                    kind,
                });
            }
            seen[v.unsigned_abs() as usize] = true;
        }
        Ok(Self { window })
    }

    /// Caller guarantees the window is valid.
    pub(crate) fn from_window_unchecked(window: Vec<i32>) -> Self {
        debug_assert!(Self::from_window(window.clone()).is_ok());
        Self { window }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            window: (1..=n as i32).collect(),
        }
    }

    /// The generator `t_i` of W_n; `t_0` negates 1, `t_i` swaps i and i+1.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::InvalidArgument(format!(
                "generator t_{i} does not exist in W_{n}"
            )));
        }
        Ok(Self::identity(n).mul_generator(i))
    }

    /// The longest element 1̄2̄⋯n̄.
    pub fn longest(n: usize) -> Self {
        Self {
            window: (1..=n as i32).map(|i| -i).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    pub fn into_window(self) -> Vec<i32> {
        self.window
    }

    /// `w(i)` for `i ∈ [±n] ∪ {0}`.
    pub fn apply(&self, i: i32) -> i32 {
        match i.cmp(&0) {
            std::cmp::Ordering::Greater => self.window[(i - 1) as usize],
            std::cmp::Ordering::Less => -self.window[(-i - 1) as usize],
            std::cmp::Ordering::Equal => 0,
        }
    }

    /// `self · other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(self.mul(other))
    }

    pub(crate) fn mul(&self, other: &Self) -> Self {
        Self {
            window: other.window.iter().map(|&v| self.apply(v)).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.rank()];
        for (i, &v) in self.window.iter().enumerate() {
            let pos = v.unsigned_abs() as usize - 1;
            inv[pos] = if v > 0 { i as i32 + 1 } else { -(i as i32 + 1) };
        }
        Self { window: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.window
            .iter()
            .enumerate()
            .all(|(i, &v)| v == i as i32 + 1)
    }

    pub fn is_involution(&self) -> bool {
        self.window
            .iter()
            .enumerate()
            .all(|(i, &v)| self.apply(v) == i as i32 + 1)
    }

    /// The full one-line form on `-n, …, -1, 1, …, n`.
    pub fn expanded(&self) -> Vec<i32> {
        let mut out: Vec<i32> = self.window.iter().rev().map(|&v| -v).collect();
        out.extend_from_slice(&self.window);
        out
    }

    /// Inversions of `w` as a map on the totally ordered set `[±n]`.
    pub fn signed_inversions(&self) -> usize {
        inversions(&self.expanded())
    }

    /// ℓ0: number of negative window entries.
    pub fn neg_count(&self) -> usize {
        self.window.iter().filter(|&&v| v < 0).count()
    }

    pub fn coxeter_length(&self) -> usize {
        (self.signed_inversions() + self.neg_count()) / 2
    }

    /// Cycles of `w` on `[±n]`, each starting at its smallest element.
    pub fn signed_cycles(&self) -> Vec<Vec<i32>> {
        let n = self.rank() as i32;
        let mut seen = vec![false; 2 * self.rank() + 1];
        let idx = |i: i32| (i + n) as usize;
        let mut cycles = Vec::new();
        for start in (-n..=n).filter(|&i| i != 0) {
            if seen[idx(start)] {
                continue;
            }
            let mut cyc = vec![start];
            seen[idx(start)] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[idx(cur)] = true;
                cyc.push(cur);
                cur = self.apply(cur);
            }
            cycles.push(cyc);
        }
        cycles
    }

    /// ℓ′0: number of cycles on `[±n]` that are closed under negation.
    pub fn symmetric_cycle_count(&self) -> usize {
        self.signed_cycles()
            .iter()
            .filter(|c| c.contains(&-c[0]))
            .count()
    }

    /// ℓ′: the reflection length.
    pub fn absolute_length(&self) -> usize {
        let k = self.signed_cycles().len();
        self.rank() - (k - self.symmetric_cycle_count()) / 2
    }

    pub fn right_descents(&self) -> Vec<usize> {
        self.right_descent_set()
    }

    pub fn left_descents(&self) -> Vec<usize> {
        self.inverse().right_descent_set()
    }

    /// Image under the standard inclusion S_n ↪ W_n.
    pub fn from_unsigned(p: &SetPermutation) -> Result<Self> {
        let n = p.size() as i32;
        if p.domain() != (1..=n).collect::<Vec<_>>().as_slice() {
            return Err(Error::InvalidArgument(
                "inclusion S_n -> W_n needs domain {1..n}".into(),
            ));
        }
        Ok(Self {
            window: p.one_line().to_vec(),
        })
    }

    /// Inverse of [`from_unsigned`](Self::from_unsigned), if all entries are positive.
    pub fn to_unsigned(&self) -> Option<SetPermutation> {
        if self.window.iter().any(|&v| v < 0) {
            return None;
        }
        Some(SetPermutation::from_window_unchecked(self.window.clone()))
    }

    /// Ψ_n: conjugate through the order isomorphism `[±n] → [2n]`.
    pub fn psi_embed(&self) -> SetPermutation {
        let n = self.rank() as i32;
        let psi = |i: i32| if i < 0 { i + n + 1 } else { i + n };
        let mut img = vec![0; 2 * self.rank()];
        for i in (-n..=n).filter(|&i| i != 0) {
            img[(psi(i) - 1) as usize] = psi(self.apply(i));
        }
        SetPermutation::from_window_unchecked(img)
    }

    /// All `2^n n!` elements, in lexicographic window order.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::with_capacity((1..=n).product::<usize>() << n);
        for p in (1..=n as i32).permutations(n) {
            for mask in 0u32..(1 << n) {
                let window = p
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v })
                    .collect();
                out.push(Self { window });
            }
        }
        out.sort();
        out
    }

    /// All involutions of W_n (by recursive matching), lexicographic.
    pub fn involutions(n: usize) -> Vec<Self> {
        fn go(window: &mut Vec<i32>, out: &mut Vec<SignedPermutation>) {
            let Some(i) = window.iter().position(|&v| v == 0) else {
                out.push(SignedPermutation {
                    window: window.clone(),
                });
                return;
            };
            let a = i as i32 + 1;
            for img in [a, -a] {
                window[i] = img;
                go(window, out);
            }
            for j in i + 1..window.len() {
                if window[j] != 0 {
                    continue;
                }
                let b = j as i32 + 1;
                for sign in [1, -1] {
                    window[i] = sign * b;
                    window[j] = sign * a;
                    go(window, out);
                    window[j] = 0;
                }
            }
            window[i] = 0;
        }
        let mut out = Vec::new();
        go(&mut vec![0; n], &mut out);
        out.sort();
        out
    }

    /// Parse `"a,b,c"`. The rank is the number of entries.
    pub fn parse(text: &str) -> Result<Self> {
        Self::parse_with_rank(text, None)
    }

    pub fn parse_with_rank(text: &str, rank: Option<usize>) -> Result<Self> {
        let trimmed = text.trim();
        let window: Vec<i32> = if trimmed.is_empty() {
            Vec::new()
        } else {
            trimmed
                .split(',')
                .enumerate()
                .map(|(pos, tok)| {
                    tok.trim().parse::<i32>().map_err(|_| Error::Parse {
                        position: pos,
                        kind: ParseErrorKind::NotAnInteger(tok.trim().to_string()),
                    })
                })
                .collect::<Result<_>>()?
        };
        if let Some(r) = rank {
            if r != window.len() {
                return Err(Error::Parse {
                    position: window.len().min(r),
                    kind: ParseErrorKind::WrongLength {
                        expected: r,
                        found: window.len(),
                    },
                });
            }
        }
        Self::from_window(window)
    }
}

impl CoxeterElement for SignedPermutation {
    fn generators(&self) -> std::ops::Range<usize> {
        0..self.rank()
    }

    /// `t_i` is a right descent iff `w_i > w_{i+1}`, with `w_0 = 0`.
    fn is_right_descent(&self, s: usize) -> bool {
        if s == 0 {
            self.window[0] < 0
        } else {
            self.window[s - 1] > self.window[s]
        }
    }

    fn mul_generator(&self, s: usize) -> Self {
        let mut window = self.window.clone();
        if s == 0 {
            window[0] = -window[0];
        } else {
            window.swap(s - 1, s);
        }
        Self { window }
    }

    fn left_mul_generator(&self, s: usize) -> Self {
        let t = |v: i32| -> i32 {
            let a = v.abs();
            let mapped = match (s, a) {
                (0, 1) => -1,
                (0, _) => a,
                (s, a) if a == s as i32 => a + 1,
                (s, a) if a == s as i32 + 1 => a - 1,
                _ => a,
            };
            v.signum() * mapped
        };
        Self {
            window: self.window.iter().map(|&v| t(v)).collect(),
        }
    }

    fn inverse(&self) -> Self {
        SignedPermutation::inverse(self)
    }

    fn length(&self) -> usize {
        self.coxeter_length()
    }

    fn one(&self) -> Self {
        Self::identity(self.rank())
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.window.iter().join(","))
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl serde::Serialize for SignedPermutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.window.serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for SignedPermutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let window = Vec::<i32>::deserialize(d)?;
        Self::from_window(window).map_err(serde::de::Error::custom)
    }
}

/// All `n²` reflections of W_n, lexicographic.
pub fn reflections(n: usize) -> Vec<SignedPermutation> {
    let mut out = Vec::with_capacity(n * n);
    let id = SignedPermutation::identity(n);
    for i in 0..n {
        let mut w = id.window.clone();
        w[i] = -w[i];
        out.push(SignedPermutation { window: w });
        for j in i + 1..n {
            let mut s = id.window.clone();
            s[i] = -(j as i32 + 1);
            s[j] = -(i as i32 + 1);
            out.push(SignedPermutation { window: s });
            let mut t = id.window.clone();
            t.swap(i, j);
            out.push(SignedPermutation { window: t });
        }
    }
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// Permutations of a finite set
// ---------------------------------------------------------------------------

/// A permutation of a finite set `X ⊂ ℤ`.
///
/// `images[k]` is the image of the `k`-th smallest element of `X`, so
/// `images` is the one-line representation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPermutation {
    domain: Vec<i32>,
    images: Vec<i32>,
}

impl SetPermutation {
    /// `domain` need not be sorted; `images` lists the image of each entry of `domain`.
    pub fn new(domain: Vec<i32>, images: Vec<i32>) -> Result<Self> {
        if domain.len() != images.len() {
            return Err(Error::InvalidArgument(format!(
                "domain has {} points but {} images given",
                domain.len(),
                images.len()
            )));
        }
        let mut pairs: Vec<(i32, i32)> = domain.into_iter().zip(images).collect();
        pairs.sort();
        let domain: Vec<i32> = pairs.iter().map(|p| p.0).collect();
        let images: Vec<i32> = pairs.iter().map(|p| p.1).collect();
        if domain.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument("repeated domain point".into()));
        }
        let mut sorted_img = images.clone();
        sorted_img.sort();
        if sorted_img != domain {
            return Err(Error::InvalidArgument(
                "images are not a rearrangement of the domain".into(),
            ));
        }
        Ok(Self { domain, images })
    }

    /// A permutation of `{1..n}` from its one-line form.
    pub fn from_window(images: Vec<i32>) -> Result<Self> {
        let n = images.len() as i32;
        Self::new((1..=n).collect(), images)
    }

    pub(crate) fn from_window_unchecked(images: Vec<i32>) -> Self {
        Self {
            domain: (1..=images.len() as i32).collect(),
            images,
        }
    }

    /// The permutation of `sorted(X)` given by a word whose letters are `X`
    /// in one-line order.
    pub fn from_one_line(word: &[i32]) -> Result<Self> {
        let mut domain = word.to_vec();
        domain.sort();
        let images = word.to_vec();
        Self::new(domain, images)
    }

    /// An involution from its 2-cycles; every other point of `domain` is fixed.
    pub fn from_cycles(domain: &[i32], cycles: &[(i32, i32)]) -> Result<Self> {
        let mut map: HashMap<i32, i32> = domain.iter().map(|&x| (x, x)).collect();
        for &(a, b) in cycles {
            if !map.contains_key(&a) || !map.contains_key(&b) {
                return Err(Error::InvalidArgument(format!(
                    "cycle ({a},{b}) leaves the domain"
                )));
            }
            if map[&a] != a || map[&b] != b {
                return Err(Error::InvalidArgument(format!(
                    "cycle ({a},{b}) overlaps another cycle"
                )));
            }
            map.insert(a, b);
            map.insert(b, a);
        }
        let (dom, img): (Vec<i32>, Vec<i32>) = map.into_iter().unzip();
        Self::new(dom, img)
    }

    pub fn identity_on(domain: &[i32]) -> Self {
        let mut d = domain.to_vec();
        d.sort();
        d.dedup();
        Self {
            images: d.clone(),
            domain: d,
        }
    }

    pub fn domain(&self) -> &[i32] {
        &self.domain
    }

    pub fn one_line(&self) -> &[i32] {
        &self.images
    }

    pub fn size(&self) -> usize {
        self.domain.len()
    }

    pub fn apply(&self, x: i32) -> Option<i32> {
        self.domain.binary_search(&x).ok().map(|k| self.images[k])
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.domain != other.domain {
            return Err(Error::InvalidArgument("domains differ".into()));
        }
        Ok(Self {
            domain: self.domain.clone(),
            images: other
                .images
                .iter()
                .map(|&x| self.apply(x).expect("same domain"))
                .collect(),
        })
    }

    pub fn is_involution(&self) -> bool {
        self.domain
            .iter()
            .zip(&self.images)
            .all(|(&x, &y)| self.apply(y) == Some(x))
    }

    /// Cyc_A: pairs `(a, b)` with `a ≤ b = z(a)`; requires an involution.
    pub fn cyc_a(&self) -> Vec<(i32, i32)> {
        self.domain
            .iter()
            .zip(&self.images)
            .filter(|(a, b)| a <= b)
            .map(|(&a, &b)| (a, b))
            .collect()
    }

    /// The 2-cycles `(a, b)`, `a < b`.
    pub fn transpositions(&self) -> Vec<(i32, i32)> {
        self.cyc_a().into_iter().filter(|(a, b)| a < b).collect()
    }

    pub fn all(n: usize) -> Vec<Self> {
        (1..=n as i32)
            .permutations(n)
            .map(Self::from_window_unchecked)
            .collect()
    }

    pub fn involutions(n: usize) -> Vec<Self> {
        Self::all(n)
            .into_iter()
            .filter(|p| p.is_involution())
            .collect()
    }
}

impl CoxeterElement for SetPermutation {
    /// `s_i` swaps the `i`-th and `(i+1)`-th smallest points, `1 ≤ i < |X|`.
    fn generators(&self) -> std::ops::Range<usize> {
        1..self.size().max(1)
    }

    fn is_right_descent(&self, s: usize) -> bool {
        self.images[s - 1] > self.images[s]
    }

    fn mul_generator(&self, s: usize) -> Self {
        let mut images = self.images.clone();
        images.swap(s - 1, s);
        Self {
            domain: self.domain.clone(),
            images,
        }
    }

    fn left_mul_generator(&self, s: usize) -> Self {
        let (a, b) = (self.domain[s - 1], self.domain[s]);
        let images = self
            .images
            .iter()
            .map(|&x| {
                if x == a {
                    b
                } else if x == b {
                    a
                } else {
                    x
                }
            })
            .collect();
        Self {
            domain: self.domain.clone(),
            images,
        }
    }

    fn inverse(&self) -> Self {
        let mut pairs: Vec<(i32, i32)> = self
            .images
            .iter()
            .copied()
            .zip(self.domain.iter().copied())
            .collect();
        pairs.sort();
        Self {
            domain: self.domain.clone(),
            images: pairs.into_iter().map(|p| p.1).collect(),
        }
    }

    fn length(&self) -> usize {
        inversions(&self.images)
    }

    fn one(&self) -> Self {
        Self::identity_on(&self.domain)
    }
}

impl fmt::Display for SetPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.images.iter().join(","))
    }
}

impl fmt::Debug for SetPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}} -> [{}]", self.domain.iter().join(","), self)
    }
}

// ---------------------------------------------------------------------------
// Words
// ---------------------------------------------------------------------------

pub fn inversions(w: &[i32]) -> usize {
    let mut count = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                count += 1;
            }
        }
    }
    count
}

/// Des(w): adjacent pairs `(w_i, w_{i+1})` with `w_i > w_{i+1}`.
pub fn word_descents(w: &[i32]) -> Vec<(i32, i32)> {
    w.windows(2)
        .filter(|p| p[0] > p[1])
        .map(|p| (p[0], p[1]))
        .collect()
}

/// Drop `w_{i+1}` whenever `w_i > w_{i+1}`.
pub fn sort_left(w: &[i32]) -> Word {
    w.iter()
        .enumerate()
        .filter(|&(i, &x)| i == 0 || w[i - 1] < x)
        .map(|(_, &x)| x)
        .collect()
}

/// Drop `w_i` whenever `w_i > w_{i+1}`.
pub fn sort_right(w: &[i32]) -> Word {
    w.iter()
        .enumerate()
        .filter(|&(i, &x)| i + 1 == w.len() || x < w[i + 1])
        .map(|(_, &x)| x)
        .collect()
}

/// `[[w]]`: keep only the first occurrence of each letter.
pub fn dedupe_first(w: &[i32]) -> Word {
    let mut seen = std::collections::HashSet::new();
    w.iter().copied().filter(|x| seen.insert(*x)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConsecutivePattern {
    /// Three adjacent letters in strictly decreasing order.
    P321,
    /// Adjacent `w_i w_{i+1}` with `0 > w_i > w_{i+1}`.
    NegNeg,
}

pub fn has_consecutive_pattern(w: &[i32], kind: ConsecutivePattern) -> bool {
    match kind {
        ConsecutivePattern::P321 => w.windows(3).any(|t| t[0] > t[1] && t[1] > t[2]),
        ConsecutivePattern::NegNeg => w.windows(2).any(|p| 0 > p[0] && p[0] > p[1]),
    }
}

pub(crate) fn letters(w: &[i32]) -> String {
    w.iter().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashSet, VecDeque};

    fn sp(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(sp("1,2,3"), SignedPermutation::identity(3));
        let w = sp("-2,-1");
        assert_eq!(w, SignedPermutation::identity(2).mul_word(&[0, 1, 0]));
        let err = SignedPermutation::parse("1,1").unwrap_err();
        assert!(matches!(
            err,
            Error::Parse {
                position: 1,
                kind: ParseErrorKind::Duplicate(1)
            }
        ));
        assert!(matches!(
            SignedPermutation::parse("1,0").unwrap_err(),
            Error::Parse {
                position: 1,
                kind: ParseErrorKind::Zero
            }
        ));
        assert!(matches!(
            SignedPermutation::parse("3,1").unwrap_err(),
            Error::Parse { position: 0, .. }
        ));
        assert_eq!(sp(" -3, 1 ,-2").to_string(), "-3,1,-2");
        assert_eq!(sp("").rank(), 0);
    }

    #[test]
    fn compose_and_inverse() {
        let id = SignedPermutation::identity(2);
        let t0 = SignedPermutation::generator(2, 0).unwrap();
        let t1 = SignedPermutation::generator(2, 1).unwrap();
        assert_eq!(id.compose(&t1).unwrap(), t1);
        // i ↦ t0(t1(i)) sends 1 ↦ 2 and 2 ↦ -1.
        assert_eq!(t0.compose(&t1).unwrap(), sp("2,-1"));
        assert_eq!(t1.compose(&t0).unwrap(), sp("-2,1"));
        let w = sp("-3,1,-2");
        assert!(w.compose(&w.inverse()).unwrap().is_identity());
        assert_eq!(sp("2,-1").inverse(), sp("-2,1"));
        assert!(matches!(
            w.compose(&id),
            Err(Error::RankMismatch { left: 3, right: 2 })
        ));
    }

    #[test]
    fn lengths() {
        assert_eq!(SignedPermutation::identity(4).coxeter_length(), 0);
        assert_eq!(sp("-2,-1").coxeter_length(), 3);
        assert_eq!(sp("-3,-2,-1").coxeter_length(), 6);
        assert_eq!(
            sp("-3,-2,-1"),
            SignedPermutation::identity(3).mul_word(&[0, 1, 2, 0, 1, 0])
        );
        assert_eq!(sp("-2,-1").neg_count(), 2);
        assert_eq!(sp("1,-2").neg_count(), 1);
        assert_eq!(SignedPermutation::identity(3).absolute_length(), 0);
        assert_eq!(sp("-1,-2").absolute_length(), 2);
        assert_eq!(sp("2,1").absolute_length(), 1);
    }

    /// Length from breadth-first search in the Cayley graph.
    #[test]
    fn length_matches_cayley_distance() {
        for n in 0..=4 {
            let id = SignedPermutation::identity(n);
            let mut dist = HashMap::from([(id.clone(), 0usize)]);
            let mut queue = VecDeque::from([id]);
            while let Some(w) = queue.pop_front() {
                let d = dist[&w];
                for s in 0..n {
                    let v = w.mul_generator(s);
                    if !dist.contains_key(&v) {
                        dist.insert(v.clone(), d + 1);
                        queue.push_back(v);
                    }
                }
            }
            assert_eq!(dist.len(), SignedPermutation::all(n).len());
            for (w, d) in dist {
                assert_eq!(w.coxeter_length(), d, "{w}");
                assert_eq!(w.reduced_word().len(), d);
                assert_eq!(
                    SignedPermutation::identity(n).mul_word(&w.reduced_word()),
                    w
                );
            }
        }
    }

    #[test]
    fn descents() {
        assert!(SignedPermutation::identity(3).right_descents().is_empty());
        assert_eq!(sp("-1,2").right_descents(), vec![0]);
        // 0 > -2 but -2 < -1.
        assert_eq!(sp("-2,-1").right_descents(), vec![0]);
        for w in SignedPermutation::all(3) {
            for s in 0..3 {
                assert_eq!(
                    w.is_right_descent(s),
                    w.mul_generator(s).coxeter_length() < w.coxeter_length()
                );
                assert_eq!(
                    w.is_left_descent(s),
                    w.left_mul_generator(s).coxeter_length() < w.coxeter_length()
                );
                let t = SignedPermutation::generator(3, s).unwrap();
                assert_eq!(w.left_mul_generator(s), t.mul(&w));
                assert_eq!(w.mul_generator(s), w.mul(&t));
            }
        }
    }

    #[test]
    fn sorting_words() {
        assert_eq!(sort_left(&[2, 1, 3, 4, 7, 6, 5]), vec![2, 3, 4, 7]);
        assert_eq!(sort_right(&[2, 1, 3, 4, 7, 6, 5]), vec![1, 3, 4, 5]);
        let sigma = [-2, 1, -3, 4, -7, 6, -5];
        assert_eq!(sort_left(&sigma), vec![-2, 1, 4, 6]);
        assert_eq!(sort_right(&sigma), vec![-2, -3, -7, -5]);
        assert_eq!(sort_left(&[1, 2, 3]), vec![1, 2, 3]);
        assert_eq!(sort_right(&[1, 2, 3]), vec![1, 2, 3]);
    }

    #[test]
    fn dedupe() {
        assert_eq!(dedupe_first(&[1, 1, 2, 2]), vec![1, 2]);
        assert_eq!(dedupe_first(&[3, -1, 2]), vec![3, -1, 2]);
    }

    #[test]
    fn psi() {
        assert_eq!(
            SignedPermutation::identity(3).psi_embed(),
            SetPermutation::from_window_unchecked((1..=6).collect())
        );
        assert_eq!(sp("1,-2").psi_embed().one_line(), &[4, 2, 3, 1]);
        assert_eq!(sp("-2,-1").psi_embed().length(), 4);
        let all = SignedPermutation::all(3);
        for u in &all {
            let pu = u.psi_embed();
            assert_eq!(pu.length(), 2 * u.coxeter_length() - u.neg_count());
            let abs_a = 3 * 2 - {
                // cycles of the type-A image
                let mut seen = HashSet::new();
                let mut c = 0;
                for x in 1..=6 {
                    if seen.insert(x) {
                        c += 1;
                        let mut y = pu.apply(x).unwrap();
                        while seen.insert(y) {
                            y = pu.apply(y).unwrap();
                        }
                    }
                }
                c
            };
            assert_eq!(abs_a, 2 * u.absolute_length() - u.symmetric_cycle_count());
            for v in &all {
                assert_eq!(u.mul(v).psi_embed(), pu.compose(&v.psi_embed()).unwrap());
            }
        }
    }

    #[test]
    fn patterns() {
        use ConsecutivePattern::*;
        assert!(has_consecutive_pattern(&[5, 4, 3, 2, 1], P321));
        assert!(!has_consecutive_pattern(&[-3, 4, -5, 1, -2], P321));
        assert!(has_consecutive_pattern(&[-1, -2, 3], NegNeg));
        assert!(!has_consecutive_pattern(&[-2, -1, 3], NegNeg));
    }

    #[test]
    fn reflection_set() {
        assert_eq!(reflections(1), vec![sp("-1")]);
        assert_eq!(reflections(2).len(), 4);
        for n in 1..=4 {
            let r = reflections(n);
            assert_eq!(r.len(), n * n);
            for w in r {
                assert!(w.is_involution());
                assert_eq!(w.absolute_length(), 1);
            }
        }
    }

    #[test]
    fn involution_enumeration() {
        let counts: Vec<usize> = (0..=6)
            .map(|n| SignedPermutation::involutions(n).len())
            .collect();
        assert_eq!(counts, vec![1, 2, 6, 20, 76, 312, 1384]);
        let brute: Vec<_> = SignedPermutation::all(4)
            .into_iter()
            .filter(|w| w.is_involution())
            .collect();
        assert_eq!(brute, SignedPermutation::involutions(4));
    }

    #[test]
    fn set_permutations() {
        let z =
            SetPermutation::from_cycles(&[1, 2, 4, 5, 6, 7], &[(1, 2), (4, 7), (5, 6)]).unwrap();
        assert_eq!(z.one_line(), &[2, 1, 7, 6, 5, 4]);
        assert!(z.is_involution());
        assert_eq!(z.cyc_a(), vec![(1, 2), (4, 7), (5, 6)]);
        let w = SetPermutation::from_window(vec![2, 3, 1]).unwrap();
        assert_eq!(w.inverse().one_line(), &[3, 1, 2]);
        assert_eq!(w.length(), 2);
        assert_eq!(w.reduced_word(), vec![1, 2]);
        for p in SetPermutation::all(4) {
            for s in 1..4 {
                let t = SetPermutation::identity_on(&[1, 2, 3, 4]).mul_generator(s);
                assert_eq!(p.left_mul_generator(s), t.compose(&p).unwrap());
            }
        }
        let incl = SignedPermutation::from_unsigned(&w).unwrap();
        assert_eq!(incl.to_unsigned().unwrap(), w);
    }
}

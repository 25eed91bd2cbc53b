//! Atomic involutions: the nesting criterion, radius, the maps η, π⁰, π¹,
//! dispersed Dyck paths, and closed-form counts checked against enumeration.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::config::{check_bound, CENSUS_ENUM_LIMIT};
use crate::error::{Error, Result};
use crate::hecke::SignedInvolution;
use crate::numbers::{binomial, pow2};
use crate::perm::{CoxeterElement, SetPermutation, SignedPermutation};
use crate::structure;

/// Cycles of `z` on `[±n]` as `(lo, hi)` with `lo ≤ hi`.
fn signed_cycles(z: &SignedInvolution) -> Vec<(i32, i32)> {
    let n = z.rank() as i32;
    (-n..=n)
        .filter(|&i| i != 0)
        .map(|i| (i, z.apply(i)))
        .filter(|&(i, j)| i <= j)
        .collect()
}

/// Some cycle `{b, c}` with `a < b ≤ c < d` inside a cycle `{a, d}` with `a ≠ -d`.
fn has_asymmetric_nesting(cycles: &[(i32, i32)]) -> bool {
    cycles
        .iter()
        .any(|&(a, d)| a < d && a != -d && cycles.iter().any(|&(b, c)| a < b && c < d))
}

/// At most one negated point and no cycle nested inside a non-symmetric one.
pub fn is_atomic(z: &SignedInvolution) -> bool {
    z.neg_count() <= 1 && !has_asymmetric_nesting(&signed_cycles(z))
}

/// The same test phrased through the extremal atoms: `neg(z) ≤ 1` and
/// `0_B(z) = 0_B(z, M_min) = 1_B(z, M_min)`.
pub fn is_atomic_extremal(z: &SignedInvolution) -> bool {
    if z.neg_count() > 1 {
        return false;
    }
    let m = structure::m_min(z);
    let zero = structure::zero_b(z);
    structure::zero_b_with(z, &m).ok() == Some(zero.clone())
        && structure::one_b_with(z, &m).ok() == Some(zero)
}

/// Type A: no cycles `{a, d}, {b, c}` with `a < b ≤ c < d`.
pub fn is_atomic_a(z: &SetPermutation) -> bool {
    z.is_involution() && !has_asymmetric_nesting(&z.cyc_a())
}

/// ρ(z): the largest `r` with `z(r) < -r`, or 0.
pub fn radius(z: &SignedInvolution) -> Result<usize> {
    if !is_atomic(z) {
        return Err(Error::NotAtomic(z.to_string()));
    }
    let n = z.rank() as i32;
    Ok((1..=n).rev().find(|&r| z.apply(r) < -r).unwrap_or(0) as usize)
}

/// η(ε) in `W_n`, `ε ∈ {±1}^{r-1}` with `r = ⌊n/2⌋`.
pub fn eta(eps: &[i32], n: usize) -> Result<SignedInvolution> {
    if n < 2 {
        return Err(Error::InvalidArgument("η needs n ≥ 2".into()));
    }
    let r = n / 2;
    if eps.len() != r - 1 || eps.iter().any(|e| e.abs() != 1) {
        return Err(Error::InvalidArgument(format!(
            "η on W_{n} takes {} signs ±1",
            r - 1
        )));
    }
    let mut a: Vec<i32> = eps.iter().zip(1..).map(|(&e, i)| e * i).collect();
    a.sort_unstable();
    let mut w = vec![0i32; n];
    let mut set = |p: i32, q: i32| {
        w[p as usize - 1] = q;
        w[q.unsigned_abs() as usize - 1] = q.signum() * p;
    };
    let r = r as i32;
    set(r + 1, -r);
    for (i, &ai) in (1..).zip(&a) {
        set(r + 1 + i, ai);
    }
    if n % 2 == 1 {
        set(n as i32, n as i32);
    }
    SignedInvolution::new(SignedPermutation::from_window(w)?)
}

/// `Y_n`: elements of `X⁰_n` with `z(⌊n/2⌋) < -⌊n/2⌋`; `{1}` for `n < 2`.
pub fn y_set(n: usize) -> Vec<SignedInvolution> {
    if n < 2 {
        return vec![SignedInvolution::identity(n)];
    }
    let r = (n / 2) as i32;
    atomic_involutions(n)
        .into_iter()
        .filter(|z| z.neg_count() == 0 && z.apply(r) < -r)
        .collect()
}

/// Conjugate `x` by the order-preserving bijection `[±m] → points`, where
/// `points` is a sorted set closed under negation and under `x`.
fn restrict(x: &SignedPermutation, points: &[i32]) -> Result<SignedInvolution> {
    let pos = &points[points.len() / 2..];
    let index = |v: i32| -> Result<i32> {
        pos.binary_search(&v.abs())
            .map(|k| v.signum() * (k as i32 + 1))
            .map_err(|_| Error::InvalidArgument(format!("{v} leaves the restricted set")))
    };
    let w = pos
        .iter()
        .map(|&p| index(x.apply(p)))
        .collect::<Result<Vec<_>>>()?;
    SignedInvolution::new(SignedPermutation::from_window(w)?)
}

/// Inverse of [`restrict`]: extend `y ∈ W_m` to `[±n]` through the
/// order-preserving map `[±m] → points`, filling the rest from `rest`.
fn embed(
    y: &SignedInvolution,
    pos: &[i32],
    n: usize,
    rest: impl Fn(i32) -> i32,
) -> Result<SignedInvolution> {
    let theta = |v: i32| v.signum() * pos[v.unsigned_abs() as usize - 1];
    let w: Vec<i32> = (1..=n as i32)
        .map(|i| match pos.binary_search(&i) {
            Ok(k) => theta(y.apply(k as i32 + 1)),
            Err(_) => rest(i),
        })
        .collect();
    SignedInvolution::new(SignedPermutation::from_window(w)?)
}

fn symmetric(pos: &BTreeSet<i32>) -> Vec<i32> {
    pos.iter()
        .rev()
        .map(|&p| -p)
        .chain(pos.iter().copied())
        .collect()
}

/// π⁰(x) = (y, z) for `x ∈ X⁰_{n,r}`.
pub fn pi0(x: &SignedInvolution) -> Result<(SignedInvolution, SetPermutation)> {
    if x.neg_count() != 0 {
        return Err(Error::InvalidArgument(format!("{x} has negated points")));
    }
    let r = radius(x)? as i32;
    let n = x.rank();
    let w = x.perm();
    if r == 0 {
        return Ok((
            SignedInvolution::identity(0),
            SetPermutation::from_window(w.window().to_vec())?,
        ));
    }
    let inner: Vec<i32> = (-r..=r).filter(|&i| i != 0).collect();
    let pos: BTreeSet<i32> = inner
        .iter()
        .flat_map(|&i| [i.abs(), w.apply(i).abs()])
        .collect();
    let y = restrict(w, &symmetric(&pos))?;
    let j: Vec<i32> = inner
        .iter()
        .map(|&i| w.apply(i))
        .filter(|&v| v > 0)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut img: Vec<i32> = w.window().to_vec();
    for (i, &ji) in (1..).zip(&j) {
        img[i as usize - 1] = ji;
        img[ji as usize - 1] = i;
    }
    if img.iter().any(|&v| v < 0) {
        return Err(Error::InvalidArgument(format!(
            "{x} is outside X⁰_{{{n},{r}}}"
        )));
    }
    Ok((y, SetPermutation::from_window(img)?))
}

/// π⁰⁻¹(y, z): `r = rank(y)/2`.
pub fn pi0_inverse(y: &SignedInvolution, z: &SetPermutation) -> Result<SignedInvolution> {
    if !y.rank().is_multiple_of(2) {
        return Err(Error::InvalidArgument("y must lie in W_{2r}".into()));
    }
    let r = (y.rank() / 2) as i32;
    let n = z.size();
    let zi = |i: i32| z.apply(i).expect("point of [n]");
    let pos: BTreeSet<i32> = (1..=r).flat_map(|i| [i, zi(i)]).collect();
    let pos: Vec<i32> = pos.into_iter().collect();
    if pos.len() != 2 * r as usize {
        return Err(Error::InvalidArgument(format!(
            "{z} does not move 1..{r} outward"
        )));
    }
    embed(y, &pos, n, zi)
}

/// π¹(x) = (y, m): drop the symmetric edge `{-m, m}` and standardize.
pub fn pi1(x: &SignedInvolution) -> Result<(SignedInvolution, i32)> {
    let &[m] = x.neg() else {
        return Err(Error::InvalidArgument(format!(
            "{x} has {} negated points, expected 1",
            x.neg_count()
        )));
    };
    let n = x.rank() as i32;
    let pos: BTreeSet<i32> = (1..=n).filter(|&i| i != m).collect();
    Ok((restrict(x.perm(), &symmetric(&pos))?, m))
}

/// π¹⁻¹(y, m): insert a negated point `m` into `y ∈ W_n`.
pub fn pi1_inverse(y: &SignedInvolution, m: i32) -> Result<SignedInvolution> {
    let n = y.rank() + 1;
    if m < 1 || m > n as i32 {
        return Err(Error::InvalidArgument(format!("m = {m} outside 1..{n}")));
    }
    let pos: Vec<i32> = (1..=n as i32).filter(|&i| i != m).collect();
    embed(y, &pos, n, |_| -m)
}

// ---------------------------------------------------------------------------
// Dispersed Dyck paths
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
    Flat,
}

/// A path of `Up`/`Down`/`Flat` steps that stays at height ≥ 0, takes
/// `Flat` steps only at height 0, and ends at even height.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut h = 0i32;
        for &s in &steps {
            match s {
                Step::Up => h += 1,
                Step::Down => h -= 1,
                Step::Flat if h != 0 => {
                    return Err(Error::InvalidArgument("flat step above the axis".into()))
                }
                Step::Flat => {}
            }
            if h < 0 {
                return Err(Error::InvalidArgument("path dips below the axis".into()));
            }
        }
        if h % 2 != 0 {
            return Err(Error::InvalidArgument("path ends at odd height".into()));
        }
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Half the number of non-flat steps.
    pub fn k(&self) -> usize {
        self.steps.iter().filter(|&&s| s != Step::Flat).count() / 2
    }

    /// `D_n`, sorted.
    pub fn all(n: usize) -> Vec<Self> {
        fn go(left: usize, h: i32, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
            if left == 0 {
                if h % 2 == 0 {
                    out.push(DyckPath { steps: cur.clone() });
                }
                return;
            }
            for s in [Step::Up, Step::Down, Step::Flat] {
                let nh = match s {
                    Step::Up => h + 1,
                    Step::Down if h == 0 => continue,
                    Step::Down => h - 1,
                    Step::Flat if h != 0 => continue,
                    Step::Flat => h,
                };
                cur.push(s);
                go(left - 1, nh, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, 0, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// `D_{n,k}`.
    pub fn all_k(n: usize, k: usize) -> Vec<Self> {
        Self::all(n).into_iter().filter(|p| p.k() == k).collect()
    }

    /// Step `i` records how `z` moves `j = i - n - 1`.
    pub fn from_involution(z: &SignedInvolution) -> Result<Self> {
        if z.neg_count() != 0 || !is_atomic(z) {
            return Err(Error::InvalidArgument(format!("{z} is not in X⁰_n")));
        }
        let n = z.rank() as i32;
        let steps = (-n..0)
            .map(|j| match z.apply(j) {
                v if v == j => Step::Flat,
                v if v > j => Step::Up,
                _ => Step::Down,
            })
            .collect();
        Self::new(steps)
    }

    /// The atomic involution with no negated points whose left endpoints
    /// `a_0 < … < a_{2k-1}` come from the up and down steps, and
    /// `z(a_i) = -a_{2k-1-i}`.
    pub fn to_involution(&self) -> SignedInvolution {
        let n = self.len() as i32;
        let mut a: Vec<i32> = (1..=n)
            .zip(&self.steps)
            .filter_map(|(i, s)| match s {
                Step::Up => Some(-n + i - 1),
                Step::Down => Some(n - i + 1),
                Step::Flat => None,
            })
            .collect();
        a.sort_unstable();
        let mut w: Vec<i32> = (1..=n).collect();
        let len = a.len();
        for (i, &ai) in a.iter().enumerate() {
            let img = -a[len - 1 - i];
            if ai > 0 {
                w[ai as usize - 1] = img;
            } else {
                w[(-ai) as usize - 1] = -img;
            }
        }
        SignedInvolution::new(SignedPermutation::from_window_unchecked(w))
            .expect("paired endpoints form an involution")
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::Up => "U",
                Step::Down => "D",
                Step::Flat => "F",
            })?;
        }
        Ok(())
    }
}

/// `D_{n,k}` paired with `X^{0,k}_n`.
pub fn dyck_bijection(n: usize, k: usize) -> Result<Vec<(DyckPath, SignedInvolution)>> {
    if k > n / 2 {
        return Err(Error::InvalidArgument(format!("k = {k} exceeds ⌊{n}/2⌋")));
    }
    Ok(DyckPath::all_k(n, k)
        .into_iter()
        .map(|p| {
            let z = p.to_involution();
            (p, z)
        })
        .collect())
}

// ---------------------------------------------------------------------------
// Enumeration and counts
// ---------------------------------------------------------------------------

/// `X_n`, sorted.
pub fn atomic_involutions(n: usize) -> Vec<SignedInvolution> {
    SignedInvolution::all(n)
        .into_iter()
        .filter(is_atomic)
        .collect()
}

/// `Z_{n,r}`: atomic involutions of `S_n` with `i < z(i)` for `i ≤ r`.
pub fn z_set(n: usize, r: usize) -> Vec<SetPermutation> {
    SetPermutation::involutions(n)
        .into_iter()
        .filter(|z| is_atomic_a(z) && (1..=r as i32).all(|i| z.apply(i).is_some_and(|v| v > i)))
        .collect()
}

fn ceil_half(n: usize) -> u64 {
    n.div_ceil(2) as u64
}

/// `⌈2^{r-1}⌉`.
fn ceil_pow(r: usize) -> BigUint {
    if r == 0 {
        BigUint::one()
    } else {
        pow2(r as u64 - 1)
    }
}

pub fn formula_x0(n: usize, r: usize) -> BigUint {
    ceil_pow(r) * binomial((n - r.min(n)) as u64, ceil_half(n))
}

/// `|X¹_{n,r}|`, from the count for `X¹_{m+1,r}` with `m = n - 1`.
pub fn formula_x1(n: usize, r: usize) -> BigUint {
    if n == 0 || r > n {
        return BigUint::default();
    }
    let m = n - 1;
    let c = ceil_half(m);
    (c + 1) * ceil_pow(r) * binomial((m + 1 - r) as u64, c + 1)
}

pub fn formula_z(n: usize, r: usize) -> BigUint {
    binomial((n - r.min(n)) as u64, ceil_half(n))
}

pub fn formula_y(n: usize) -> BigUint {
    if n < 2 {
        BigUint::one()
    } else {
        pow2((n / 2) as u64 - 1)
    }
}

pub fn formula_a0(n: usize) -> BigUint {
    let n64 = n as u64;
    if n % 2 == 1 {
        pow2(n64 - 1)
    } else if n == 0 {
        BigUint::one()
    } else {
        pow2(n64 - 1) + binomial(n64, n64 / 2) / 2u32
    }
}

pub fn formula_a1(n: usize) -> BigUint {
    let n64 = n as u64;
    if n % 2 == 1 {
        (n64 + 1) * pow2(n64) / 4u32
    } else {
        (n64 + 2) * (pow2(n64) - binomial(n64, n64 / 2)) / 4u32
    }
}

pub fn formula_a(n: usize) -> BigUint {
    let n64 = n as u64;
    if n % 2 == 1 {
        (n64 + 3) * pow2(n64) / 4u32
    } else {
        ((n64 + 4) * pow2(n64) - n64 * binomial(n64, n64 / 2)) / 4u32
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CensusClass {
    /// `a⁰_n = |X⁰_n|`
    A0,
    /// `a¹_n = |X¹_n|`
    A1,
    /// `a_n = |X_n|`
    A,
    /// `|X⁰_{n,r}|`
    X0R,
    /// `|X¹_{n,r}|`
    X1R,
    /// `|X^{0,k}_n|`
    X0K,
    /// `|Y_n|`
    Y,
    /// `|Z_{n,r}|`
    Z,
    /// `|D_{n,k}|`
    D,
}

impl CensusClass {
    pub fn name(self) -> &'static str {
        match self {
            CensusClass::A0 => "a0",
            CensusClass::A1 => "a1",
            CensusClass::A => "a",
            CensusClass::X0R => "X0_r",
            CensusClass::X1R => "X1_r",
            CensusClass::X0K => "X0_k",
            CensusClass::Y => "Y",
            CensusClass::Z => "Z_r",
            CensusClass::D => "D_k",
        }
    }

    /// 0 or 1 negated points, where the class fixes it.
    pub fn neg_class(self) -> Option<u8> {
        match self {
            CensusClass::A0 | CensusClass::X0R | CensusClass::X0K | CensusClass::Y => Some(0),
            CensusClass::A1 | CensusClass::X1R => Some(1),
            _ => None,
        }
    }
}

impl fmt::Display for CensusClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub n: usize,
    pub class: CensusClass,
    pub r: Option<usize>,
    pub k: Option<usize>,
    pub enumerated: Option<BigUint>,
    pub formula: BigUint,
}

impl CensusRow {
    /// `None` when no enumeration was run.
    pub fn matches(&self) -> Option<bool> {
        self.enumerated.as_ref().map(|e| *e == self.formula)
    }
}

/// Every closed form for `n`, with enumerated counts alongside when `check`.
pub fn census(n: usize, check: bool) -> Result<Vec<CensusRow>> {
    if check {
        check_bound("n", n, CENSUS_ENUM_LIMIT)?;
    }
    let big = |c: usize| Some(BigUint::from(c));
    let xs = if check {
        atomic_involutions(n)
    } else {
        Vec::new()
    };
    let count = |f: &dyn Fn(&SignedInvolution) -> bool| {
        if check {
            big(xs.iter().filter(|z| f(z)).count())
        } else {
            None
        }
    };
    let radius_of = |z: &SignedInvolution| radius(z).expect("atomic");
    let h = n / 2;
    let mut rows = Vec::new();
    let mut row = |class, r, k, enumerated, formula| {
        rows.push(CensusRow {
            n,
            class,
            r,
            k,
            enumerated,
            formula,
        })
    };
    row(
        CensusClass::A0,
        None,
        None,
        count(&|z| z.neg_count() == 0),
        formula_a0(n),
    );
    row(
        CensusClass::A1,
        None,
        None,
        count(&|z| z.neg_count() == 1),
        formula_a1(n),
    );
    row(CensusClass::A, None, None, count(&|_| true), formula_a(n));
    for r in 0..=h {
        let e = count(&|z| z.neg_count() == 0 && radius_of(z) == r);
        row(CensusClass::X0R, Some(r), None, e, formula_x0(n, r));
    }
    for r in 0..=h {
        let e = count(&|z| z.neg_count() == 1 && radius_of(z) == r);
        row(CensusClass::X1R, Some(r), None, e, formula_x1(n, r));
    }
    for k in 0..=h {
        let e = count(&|z| z.neg_count() == 0 && z.pair_count() == k);
        row(
            CensusClass::X0K,
            None,
            Some(k),
            e,
            binomial(n as u64, k as u64),
        );
    }
    let e = check.then(|| BigUint::from(y_set(n).len()));
    row(CensusClass::Y, Some(h), None, e, formula_y(n));
    for r in 0..=h {
        let e = check.then(|| BigUint::from(z_set(n, r).len()));
        row(CensusClass::Z, Some(r), None, e, formula_z(n, r));
    }
    for k in 0..=h {
        let e = check.then(|| BigUint::from(DyckPath::all_k(n, k).len()));
        row(
            CensusClass::D,
            None,
            Some(k),
            e,
            binomial(n as u64, k as u64),
        );
    }
    Ok(rows)
}

// ---------------------------------------------------------------------------
// Full commutativity
// ---------------------------------------------------------------------------

/// Order of `st`.
fn braid_order<T: CoxeterElement>(one: &T, s: usize, t: usize) -> usize {
    let st = one.mul_generator(s).mul_generator(t);
    let mut x = st.clone();
    let mut m = 1;
    while x != *one {
        x = x.mul_word(&[s, t]);
        m += 1;
    }
    m
}

/// Whether some run of `m(s, t) ≥ 3` alternating letters `s t s ⋯` occurs.
fn has_braid(word: &[usize], m: &dyn Fn(usize, usize) -> usize) -> bool {
    (0..word.len()).any(|i| {
        if i + 1 >= word.len() || word[i] == word[i + 1] {
            return false;
        }
        let (s, t) = (word[i], word[i + 1]);
        let k = m(s, t);
        k >= 3
            && i + k <= word.len()
            && (0..k).all(|j| word[i + j] == if j % 2 == 0 { s } else { t })
    })
}

/// Every reduced word reachable from any other by commuting adjacent
/// letters: no word in one commutation class contains a braid run.
pub fn is_fully_commutative<T: CoxeterElement>(w: &T) -> bool {
    let one = w.one();
    let gens: Vec<usize> = w.generators().collect();
    let max = gens.iter().copied().max().unwrap_or(0) + 1;
    let mut table = vec![vec![0usize; max]; max];
    for &s in &gens {
        for &t in &gens {
            table[s][t] = if s == t { 1 } else { braid_order(&one, s, t) };
        }
    }
    let m = |s: usize, t: usize| table[s][t];
    let start = w.reduced_word();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(word) = queue.pop_front() {
        if has_braid(&word, &m) {
            return false;
        }
        for i in 0..word.len().saturating_sub(1) {
            if word[i] != word[i + 1] && m(word[i], word[i + 1]) == 2 {
                let mut next = word.clone();
                next.swap(i, i + 1);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    true
}

/// The first atomic involution of `W_1, …, W_max_n` that is not fully commutative.
pub fn fc_witness(max_n: usize) -> Option<SignedInvolution> {
    (1..=max_n)
        .flat_map(SignedInvolution::all)
        .find(|z| is_atomic(z) && !is_fully_commutative(z.perm()))
}

/// 321-avoidance of a one-line word.
pub fn avoids_321(w: &[i32]) -> bool {
    let n = w.len();
    !(0..n).any(|i| (i + 1..n).any(|j| w[i] > w[j] && (j + 1..n).any(|k| w[j] > w[k])))
}

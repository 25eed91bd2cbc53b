//! Reduced words, `R̂(z)`, hook-length counts, and the enumerative
//! identities relating them.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::config::{check_bound, WORD_LENGTH_LIMIT};
use crate::error::{Error, Result};
use crate::hecke::{self, SignedInvolution};
use crate::numbers::{binomial, factorial};
use crate::orders;
use crate::perm::{self, CoxeterElement, SetPermutation, SignedPermutation};

/// An integer partition; `strict` ones are drawn shifted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    strict: bool,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing and positive"
            )));
        }
        Ok(Self {
            parts,
            strict: false,
        })
    }

    pub fn new_strict(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not strictly decreasing and positive"
            )));
        }
        Ok(Self {
            parts,
            strict: true,
        })
    }

    /// `(n, n-1, …, 1)`.
    pub fn staircase(n: usize) -> Self {
        Self {
            parts: (1..=n).rev().collect(),
            strict: false,
        }
    }

    /// `p^q`: `q` rows of length `p`.
    pub fn rectangle(p: usize, q: usize) -> Self {
        Self {
            parts: if p == 0 { Vec::new() } else { vec![p; q] },
            strict: false,
        }
    }

    /// `(n, n-2, n-4, …)`, strict.
    pub fn shifted_staircase(n: usize) -> Self {
        Self {
            parts: (1..=n).rev().step_by(2).collect(),
            strict: true,
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

/// `f^λ` by the hook-length formula.
pub fn hook_f(lambda: &Partition) -> BigUint {
    let parts = &lambda.parts;
    let col_len = |j: usize| parts.iter().take_while(|&&p| p > j).count();
    let mut hooks = BigUint::one();
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row {
            hooks *= (row - j - 1) + (col_len(j) - i - 1) + 1;
        }
    }
    factorial(lambda.size() as u64) / hooks
}

/// `g^μ` by the shifted hook-length formula. Cell `(i, j)` of the shifted
/// diagram has hook `arm + leg + 1 + μ_{j+1}`, the last term counting the
/// row that starts just right of column `j`.
pub fn shifted_g(mu: &Partition) -> Result<BigUint> {
    if !mu.strict {
        return Err(Error::InvalidPartition(format!(
            "{mu} is not marked strict"
        )));
    }
    let parts = &mu.parts;
    let l = parts.len();
    let in_diagram = |i: usize, j: usize| i < l && j >= i && j < i + parts[i];
    let mut hooks = BigUint::one();
    for (i, &row) in parts.iter().enumerate() {
        for j in i..i + row {
            let arm = i + row - 1 - j;
            let leg = (i + 1..l).filter(|&k| in_diagram(k, j)).count();
            let extra = parts.get(j + 1).copied().unwrap_or(0);
            hooks *= arm + leg + 1 + extra;
        }
    }
    Ok(factorial(mu.size() as u64) / hooks)
}

/// `g^μ` by Thrall's product, used to cross-check [`shifted_g`].
pub fn thrall_g(mu: &Partition) -> Result<BigUint> {
    if !mu.strict {
        return Err(Error::InvalidPartition(format!(
            "{mu} is not marked strict"
        )));
    }
    let parts = &mu.parts;
    let mut num = factorial(mu.size() as u64);
    let mut den = BigUint::one();
    for (i, &a) in parts.iter().enumerate() {
        den *= factorial(a as u64);
        for &b in &parts[i + 1..] {
            num *= a - b;
            den *= a + b;
        }
    }
    Ok(num / den)
}

/// All reduced words of `w`, refusing lengths above the enumeration bound.
pub fn reduced_words<T: CoxeterElement>(w: &T) -> Result<Vec<Vec<usize>>> {
    check_bound("length", w.length(), WORD_LENGTH_LIMIT)?;
    Ok(perm::reduced_words(w))
}

pub fn count_reduced_words<T: CoxeterElement>(w: &T) -> BigUint {
    perm::count_reduced_words(w)
}

/// `|R̂(z)|`, by counting.
pub fn rhat(z: &SignedInvolution) -> BigUint {
    orders::atoms(z).iter().map(count_reduced_words).sum()
}

/// `R̂(z)`, enumerated and sorted.
pub fn rhat_words(z: &SignedInvolution) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for w in orders::atoms(z) {
        out.extend(reduced_words(&w)?);
    }
    out.sort();
    Ok(out)
}

/// `R̂(z)` for an involution of `S_X`, enumerated from a brute atom scan.
pub fn rhat_words_a(z: &SetPermutation) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for w in hecke::atoms_brute_a(z)? {
        out.extend(reduced_words(&w)?);
    }
    out.sort();
    Ok(out)
}

/// The relations spanning `R̂(z)`: braid and commutation moves anywhere, plus
/// the initial moves `t_i t_{i+1} ~ t_{i+1} t_i`, `t_0t_1t_0 ~ t_1t_0t_1`, and
/// `t_0t_1t_2t_0t_1t_0 ~ t_0t_1t_2t_1t_0t_1` on a prefix.
pub fn relation_neighbours(word: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut swap_at = |at: usize, from: &[usize], to: &[usize]| {
        if word.len() >= at + from.len() && word[at..at + from.len()] == *from {
            let mut next = word.to_vec();
            next[at..at + to.len()].copy_from_slice(to);
            out.push(next);
        }
    };
    for i in 0..word.len() {
        if i + 1 < word.len() {
            let (s, t) = (word[i], word[i + 1]);
            if s.abs_diff(t) >= 2 {
                swap_at(i, &[s, t], &[t, s]);
            }
        }
        if i + 2 < word.len() {
            let (s, t) = (word[i], word[i + 1]);
            if s.abs_diff(t) == 1 && s.min(t) >= 1 && word[i + 2] == s {
                swap_at(i, &[s, t, s], &[t, s, t]);
            }
        }
        swap_at(i, &[0, 1, 0, 1], &[1, 0, 1, 0]);
        swap_at(i, &[1, 0, 1, 0], &[0, 1, 0, 1]);
    }
    if word.len() >= 2 && word[0].abs_diff(word[1]) == 1 && word[0].min(word[1]) >= 1 {
        swap_at(0, &[word[0], word[1]], &[word[1], word[0]]);
    }
    swap_at(0, &[0, 1, 0], &[1, 0, 1]);
    swap_at(0, &[1, 0, 1], &[0, 1, 0]);
    swap_at(0, &[0, 1, 2, 0, 1, 0], &[0, 1, 2, 1, 0, 1]);
    swap_at(0, &[0, 1, 2, 1, 0, 1], &[0, 1, 2, 0, 1, 0]);
    out
}

/// Closure of one word under [`relation_neighbours`], sorted.
pub fn relation_closure(word: &[usize]) -> Vec<Vec<usize>> {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::from([word.to_vec()]);
    let mut stack = vec![word.to_vec()];
    while let Some(w) = stack.pop() {
        for u in relation_neighbours(&w) {
            if seen.insert(u.clone()) {
                stack.push(u);
            }
        }
    }
    seen.into_iter().collect()
}

// ---------------------------------------------------------------------------
// Identity report
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Shown for comparison; not a check.
    Reported,
    /// Outside the enumeration budget.
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Reported => "reported",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub n: usize,
    pub lhs_label: String,
    pub lhs: String,
    pub rhs_label: String,
    pub rhs: String,
    pub status: Status,
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} n={}: {} = {}, {} = {}: {}",
            self.name, self.n, self.lhs_label, self.lhs, self.rhs_label, self.rhs, self.status
        )
    }
}

/// Enumeration budgets for [`verify_identities`].
pub const IDENTITY_MAX_B: usize = 3;
pub const IDENTITY_MAX_A: usize = 4;

fn check(
    name: &'static str,
    n: usize,
    lhs: (String, Option<BigUint>),
    rhs: (String, Option<BigUint>),
) -> IdentityCheck {
    let show = |v: &Option<BigUint>| v.as_ref().map_or("-".to_string(), |x| x.to_string());
    let status = match (&lhs.1, &rhs.1) {
        (Some(a), Some(b)) if a == b => Status::Pass,
        (Some(_), Some(_)) => Status::Fail,
        _ => Status::Skipped,
    };
    IdentityCheck {
        name,
        n,
        lhs: show(&lhs.1),
        lhs_label: lhs.0,
        rhs: show(&rhs.1),
        rhs_label: rhs.0,
        status,
    }
}

fn reported(
    name: &'static str,
    n: usize,
    lhs: (String, String),
    rhs: (String, String),
) -> IdentityCheck {
    IdentityCheck {
        name,
        n,
        lhs_label: lhs.0,
        lhs: lhs.1,
        rhs_label: rhs.0,
        rhs: rhs.1,
        status: Status::Reported,
    }
}

fn fraction(num: BigUint, den: BigUint) -> String {
    if (&num % &den).is_zero() {
        (num / den).to_string()
    } else {
        format!("{num}/{den}")
    }
}

/// Longest element of `S_m` as a permutation of `{1..m}`.
pub fn longest_a(m: usize) -> SetPermutation {
    SetPermutation::from_window((1..=m as i32).rev().collect()).expect("reversal")
}

fn enumerate<T: CoxeterElement>(w: &T, allowed: bool) -> Option<BigUint> {
    allowed
        .then(|| reduced_words(w).ok())
        .flatten()
        .map(|r| BigUint::from(r.len()))
}

/// `0!1!⋯(p-1)!(pq)! / (q!(q+1)!⋯(q+p-1)!)`.
pub fn rectangle_product(p: usize, q: usize) -> BigUint {
    let num = (0..p).fold(factorial((p * q) as u64), |acc, i| {
        acc * factorial(i as u64)
    });
    let den = (q..q + p).fold(BigUint::one(), |acc, i| acc * factorial(i as u64));
    num / den
}

/// Every identity at `n`, both sides computed independently. Printed
/// closed forms that disagree with enumeration are reported, not checked.
pub fn verify_identities(n: usize) -> Vec<IdentityCheck> {
    let mut out = Vec::new();
    let a_ok = n <= IDENTITY_MAX_A;
    let b_ok = n <= IDENTITY_MAX_B;
    let w0a = longest_a(n + 1);
    let r_w0a = enumerate(&w0a, a_ok);
    let stair = Partition::staircase(n);
    let f_stair = hook_f(&stair);

    out.push(check(
        "stanley",
        n,
        (format!("|R(w0 of S_{})|", n + 1), r_w0a.clone()),
        (format!("f^{stair}"), Some(f_stair.clone())),
    ));
    let den = (1..=n as u32).fold(BigUint::one(), |acc, i| {
        acc * BigUint::from(2 * i - 1).pow(i)
    });
    let printed = fraction(factorial((n * (n + 1) / 2) as u64), den);
    out.push(reported(
        "stanley-printed",
        n,
        ("printed product".into(), printed),
        (format!("f^{stair}"), f_stair.to_string()),
    ));

    let w0b = SignedInvolution::longest(n);
    let rhat_b = b_ok
        .then(|| rhat_words(&w0b).ok())
        .flatten()
        .map(|r| BigUint::from(r.len()));
    out.push(check(
        "mp",
        n,
        (format!("|R^(w0 of W_{n})|"), rhat_b),
        (format!("|R(w0 of S_{})|", n + 1), r_w0a),
    ));

    let rhat_a = if a_ok {
        rhat_words_a(&w0a).ok().map(|r| BigUint::from(r.len()))
    } else {
        None
    };
    let (p, q) = (n / 2, n.div_ceil(2));
    let c2 = |m: usize| m * m.saturating_sub(1) / 2;
    let hmp = binomial((c2(p) + c2(q)) as u64, c2(p) as u64)
        * hook_f(&Partition::staircase(p.saturating_sub(1)))
        * hook_f(&Partition::staircase(q.saturating_sub(1)));
    out.push(reported(
        "hmp-printed",
        n,
        (
            format!("|R^(w0 of S_{})|", n + 1),
            rhat_a.map_or("-".into(), |v| v.to_string()),
        ),
        ("printed product".into(), hmp.to_string()),
    ));

    let gamma = SignedInvolution::grassmannian(n);
    let (gp, gq) = (n.div_ceil(2), (n + 1).div_ceil(2));
    let rhat_g = (n <= 6)
        .then(|| rhat_words(&gamma).ok())
        .flatten()
        .map(|r| BigUint::from(r.len()));
    let rect = Partition::rectangle(gp, gq);
    let shifted = Partition::shifted_staircase(n);
    out.push(check(
        "gamma-f",
        n,
        (format!("|R^(gamma_{n})|"), rhat_g.clone()),
        (format!("f^{rect}"), Some(hook_f(&rect))),
    ));
    out.push(check(
        "gamma-g",
        n,
        (format!("|R^(gamma_{n})|"), rhat_g.clone()),
        (format!("g^{shifted}"), shifted_g(&shifted).ok()),
    ));
    out.push(check(
        "gamma-product",
        n,
        (
            format!("|R^(gamma_{n})|"),
            rhat_g.or_else(|| Some(rhat(&gamma))),
        ),
        ("rectangle product".into(), Some(rectangle_product(gp, gq))),
    ));
    out
}

/// The unique atom of `γ_n`: `n̄ (n-2)̄ ⋯` over the residues of `n`, then the
/// other residues increasing.
pub fn grassmannian_atom(n: usize) -> SignedPermutation {
    let n = n as i32;
    let neg = (1..=n).rev().filter(|i| (n - i) % 2 == 0).map(|i| -i);
    let pos = (1..=n).filter(|i| (n - i) % 2 == 1);
    SignedPermutation::from_window(neg.chain(pos).collect()).expect("rearrangement")
}

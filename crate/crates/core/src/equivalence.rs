//! The relations ≈_A and ≈_B on one-line words, whose classes are the sets of
//! inverse Hecke atoms.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::config::{check_bound, CLASS_RANK_LIMIT};
use crate::error::{Error, Result};
use crate::hecke;
use crate::orders;
use crate::perm::{SignedPermutation, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveSystem {
    /// `cba ≈ cab ≈ bca` at any three consecutive positions, `a < b < c`.
    ApproxA,
    /// ≈_A plus `āb̄ ≈ b̄ā ≈ ab̄` on the first two letters and
    /// `c̄āb̄ ≈ c̄b̄ā ≈ c̄ab̄` on the first three, `0 < a < b < c`.
    ApproxB,
}

impl MoveSystem {
    pub fn name(self) -> &'static str {
        match self {
            MoveSystem::ApproxA => "approxA",
            MoveSystem::ApproxB => "approxB",
        }
    }
}

impl fmt::Display for MoveSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MoveSystem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "approxa" | "a" => Ok(MoveSystem::ApproxA),
            "approxb" | "b" => Ok(MoveSystem::ApproxB),
            _ => Err(Error::InvalidArgument(format!("unknown ruleset {s:?}"))),
        }
    }
}

/// The three arrangements `[cba, cab, bca]` of `a < b < c`.
fn triple_forms(a: i32, b: i32, c: i32) -> [[i32; 3]; 3] {
    [[c, b, a], [c, a, b], [b, c, a]]
}

fn replace(w: &[i32], at: usize, letters: &[i32]) -> Word {
    let mut out = w.to_vec();
    out[at..at + letters.len()].copy_from_slice(letters);
    out
}

/// Every word one ruleset step away from `w`.
pub fn neighbours(w: &[i32], ruleset: MoveSystem) -> Vec<Word> {
    let mut out = Vec::new();
    for i in 0..w.len().saturating_sub(2) {
        let mut t = [w[i], w[i + 1], w[i + 2]];
        t.sort_unstable();
        let forms = triple_forms(t[0], t[1], t[2]);
        if let Some(k) = forms.iter().position(|f| f[..] == w[i..i + 3]) {
            for (j, f) in forms.iter().enumerate() {
                if j != k {
                    out.push(replace(w, i, f));
                }
            }
        }
    }
    if ruleset == MoveSystem::ApproxB {
        if w.len() >= 2 {
            out.extend(
                initial_forms(&w[..2])
                    .into_iter()
                    .map(|f| replace(w, 0, &f)),
            );
        }
        if w.len() >= 3 && w[0] < 0 {
            let c = -w[0];
            for f in initial_forms(&w[1..3]) {
                if f.iter().all(|x| x.abs() < c) {
                    out.push(replace(w, 1, &f));
                }
            }
        }
    }
    out
}

/// For a two-letter prefix in one of the forms `āb̄, b̄ā, ab̄` (`0 < a < b`),
/// the other two forms.
fn initial_forms(p: &[i32]) -> Vec<[i32; 2]> {
    let (x, y) = (p[0], p[1]);
    if y >= 0 {
        return Vec::new();
    }
    let (a, b) = if x < 0 && x > y {
        (-x, -y) // āb̄
    } else if x < y {
        (-y, -x) // b̄ā
    } else if x > 0 && x < -y {
        (x, -y) // ab̄
    } else {
        return Vec::new();
    };
    [[-a, -b], [-b, -a], [a, -b]]
        .into_iter()
        .filter(|f| f[..] != p[..2])
        .collect()
}

/// The class of a word under the ruleset, sorted. Letters must be distinct.
pub fn word_class(w: &[i32], ruleset: MoveSystem) -> Vec<Word> {
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    seen.insert(w.to_vec());
    let mut stack = vec![w.to_vec()];
    while let Some(v) = stack.pop() {
        for u in neighbours(&v, ruleset) {
            if seen.insert(u.clone()) {
                stack.push(u);
            }
        }
    }
    seen.into_iter().collect()
}

/// The class of `w` under the ruleset, sorted.
pub fn equivalence_class(w: &SignedPermutation, ruleset: MoveSystem) -> Vec<SignedPermutation> {
    orders::closure(std::slice::from_ref(w), |v| neighbours(v, ruleset))
}

/// If `w` starts `v_1 < … < v_i < v_{i+1} < 0`, the words obtained by
/// rewriting the last two letters of that prefix `b̄ā` to `āb̄` and to `ab̄`,
/// for every such `i`. Each output is ≈_B-equivalent to `w`.
pub fn extended_initial_move(w: &SignedPermutation) -> Vec<SignedPermutation> {
    let v = w.window();
    let mut out = Vec::new();
    let mut i = 1;
    while i < v.len() && v[i] < 0 && v[i - 1] < v[i] {
        let mut u = v.to_vec();
        u.swap(i - 1, i);
        let mut x = u.clone();
        x[i - 1] = -x[i - 1];
        out.push(SignedPermutation::from_window(u).expect("swap"));
        out.push(SignedPermutation::from_window(x).expect("swap and negate"));
        i += 1;
    }
    out
}

/// Partition of `W_n` into classes, ordered by least element.
pub fn partition(n: usize, ruleset: MoveSystem) -> Result<Vec<Vec<SignedPermutation>>> {
    check_bound("rank", n, CLASS_RANK_LIMIT)?;
    let mut done: HashSet<SignedPermutation> = HashSet::new();
    let mut out = Vec::new();
    for w in SignedPermutation::all(n) {
        if done.contains(&w) {
            continue;
        }
        let class = equivalence_class(&w, ruleset);
        done.extend(class.iter().cloned());
        out.push(class);
    }
    Ok(out)
}

/// Whether every ≈_B class of `W_n` is exactly `A_hecke(z)^{-1}` for the
/// involution `z = w ∘ w^{-1}` of any member.
pub fn verify_hecke_classes(n: usize) -> Result<bool> {
    for class in partition(n, MoveSystem::ApproxB)? {
        let z = hecke::hecke_image(&class[0].inverse());
        let mut expect: Vec<_> = hecke::hecke_atoms_brute(&z)?
            .iter()
            .map(|w| w.inverse())
            .collect();
        expect.sort();
        if expect != class {
            return Ok(false);
        }
    }
    Ok(true)
}

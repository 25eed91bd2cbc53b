//! Demazure products, Hecke images, and exhaustive atom scans.

use std::fmt;

use itertools::Itertools;

use crate::config::{brute_bound, check_bound, TYPE_A_BRUTE_SIZE};
use crate::error::{Error, Result};
use crate::perm::{self, CoxeterElement, SetPermutation, SignedPermutation};

/// A self-inverse signed permutation with its cycle data precomputed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedInvolution {
    perm: SignedPermutation,
    neg: Vec<i32>,
    fix: Vec<i32>,
    pairs: Vec<(i32, i32)>,
}

impl SignedInvolution {
    pub fn new(perm: SignedPermutation) -> Result<Self> {
        if !perm.is_involution() {
            return Err(Error::NotInvolution(perm.to_string()));
        }
        let n = perm.rank() as i32;
        let mut neg = Vec::new();
        let mut fix = Vec::new();
        for i in 1..=n {
            match perm.apply(i) {
                v if v == i => fix.push(i),
                v if v == -i => neg.push(i),
                _ => {}
            }
        }
        // (a, b) with |a| < z(a) = b, listed by b.
        let mut pairs: Vec<(i32, i32)> = (1..=n)
            .map(|b| (perm.apply(b), b))
            .filter(|&(a, b)| a.abs() < b)
            .collect();
        pairs.sort_by_key(|p| p.1);
        Ok(Self {
            perm,
            neg,
            fix,
            pairs,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(SignedPermutation::parse(text)?)
    }

    pub fn identity(n: usize) -> Self {
        Self::new(SignedPermutation::identity(n)).expect("identity")
    }

    /// `1̄2̄⋯n̄`.
    pub fn longest(n: usize) -> Self {
        Self::new(SignedPermutation::longest(n)).expect("w0 is an involution")
    }

    /// γ_n: `i ↦ -(n+1-i)`.
    pub fn grassmannian(n: usize) -> Self {
        let w = (1..=n as i32).map(|i| -(n as i32 + 1 - i)).collect();
        Self::new(SignedPermutation::from_window_unchecked(w)).expect("γ_n is an involution")
    }

    pub fn all(n: usize) -> Vec<Self> {
        SignedPermutation::involutions(n)
            .into_iter()
            .map(|p| Self::new(p).expect("enumerated involution"))
            .collect()
    }

    pub fn perm(&self) -> &SignedPermutation {
        &self.perm
    }

    pub fn rank(&self) -> usize {
        self.perm.rank()
    }

    pub fn apply(&self, i: i32) -> i32 {
        self.perm.apply(i)
    }

    /// Neg(z): `i ∈ [n]` with `z(i) = -i`.
    pub fn neg(&self) -> &[i32] {
        &self.neg
    }

    pub fn fix(&self) -> &[i32] {
        &self.fix
    }

    /// Pair(z): `(a, b) ∈ [±n]×[n]` with `|a| < z(a) = b`.
    pub fn pairs(&self) -> &[(i32, i32)] {
        &self.pairs
    }

    pub fn neg_count(&self) -> usize {
        self.neg.len()
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    /// Cyc_B(z) = Pair(z) ⊔ {(-a,-a) : a ∈ Neg} ⊔ {(a,a) : a ∈ Fix}.
    pub fn cyc_b(&self) -> Vec<(i32, i32)> {
        let mut out = self.pairs.clone();
        out.extend(self.neg.iter().map(|&a| (-a, -a)));
        out.extend(self.fix.iter().map(|&a| (a, a)));
        out.sort();
        out
    }

    pub fn coxeter_length(&self) -> usize {
        self.perm.coxeter_length()
    }

    pub fn absolute_length(&self) -> usize {
        self.neg.len() + self.pairs.len()
    }

    /// ℓ̂(z) = (ℓ(z) + ℓ′(z)) / 2.
    pub fn involution_length(&self) -> usize {
        (self.coxeter_length() + self.absolute_length()) / 2
    }
}

impl fmt::Display for SignedInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.perm.fmt(f)
    }
}

impl fmt::Debug for SignedInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.perm, f)
    }
}

impl TryFrom<SignedPermutation> for SignedInvolution {
    type Error = Error;
    fn try_from(p: SignedPermutation) -> Result<Self> {
        Self::new(p)
    }
}

pub fn demazure(u: &SignedPermutation, v: &SignedPermutation) -> Result<SignedPermutation> {
    if u.rank() != v.rank() {
        return Err(Error::RankMismatch {
            left: u.rank(),
            right: v.rank(),
        });
    }
    Ok(perm::demazure_product(u, v))
}

/// `t_i ∘ z ∘ t_i` by the three-case rule.
pub fn demazure_conjugate(i: usize, z: &SignedInvolution) -> Result<SignedInvolution> {
    if i >= z.rank() {
        return Err(Error::InvalidArgument(format!(
            "generator t_{i} does not exist in W_{}",
            z.rank()
        )));
    }
    let p = z.perm();
    if p.is_right_descent(i) {
        return Ok(z.clone());
    }
    let zs = p.mul_generator(i);
    let sz = p.left_mul_generator(i);
    let out = if zs == sz {
        zs
    } else {
        zs.left_mul_generator(i)
    };
    SignedInvolution::new(out)
}

pub fn hecke_image(w: &SignedPermutation) -> SignedInvolution {
    SignedInvolution::new(perm::hecke_image(w)).expect("w^-1 ∘ w is an involution")
}

pub fn involution_length(z: &SignedInvolution) -> usize {
    z.involution_length()
}

/// If `w ∈ A(z)^{-1}` for some `z`, return that `z`.
pub fn inverse_atom_of(w: &SignedPermutation) -> Option<SignedInvolution> {
    let z = hecke_image(&w.inverse());
    (w.coxeter_length() == z.involution_length()).then_some(z)
}

pub fn is_inverse_atom(w: &SignedPermutation) -> bool {
    inverse_atom_of(w).is_some()
}

pub fn atoms_brute(z: &SignedInvolution) -> Result<Vec<SignedPermutation>> {
    atoms_brute_with(z, brute_bound())
}

pub fn atoms_brute_with(z: &SignedInvolution, bound: usize) -> Result<Vec<SignedPermutation>> {
    check_bound("rank", z.rank(), bound)?;
    let len = z.involution_length();
    Ok(SignedPermutation::all(z.rank())
        .into_iter()
        .filter(|w| w.coxeter_length() == len && hecke_image(w) == *z)
        .collect())
}

pub fn hecke_atoms_brute(z: &SignedInvolution) -> Result<Vec<SignedPermutation>> {
    hecke_atoms_brute_with(z, brute_bound())
}

pub fn hecke_atoms_brute_with(
    z: &SignedInvolution,
    bound: usize,
) -> Result<Vec<SignedPermutation>> {
    check_bound("rank", z.rank(), bound)?;
    Ok(SignedPermutation::all(z.rank())
        .into_iter()
        .filter(|w| hecke_image(w) == *z)
        .collect())
}

/// A_hecke(w0) and A(w0) are closed under inversion.
pub fn symmetry_check_w0(n: usize) -> Result<bool> {
    let w0 = SignedInvolution::longest(n);
    let closed = |set: Vec<SignedPermutation>| {
        let mut inv: Vec<_> = set.iter().map(|w| w.inverse()).collect();
        inv.sort();
        inv == set
    };
    Ok(closed(hecke_atoms_brute(&w0)?) && closed(atoms_brute(&w0)?))
}

/// Type-A scan: all `w ∈ S_X` with `w^{-1} ∘ w = z`, sorted.
pub fn hecke_atoms_brute_a(z: &SetPermutation) -> Result<Vec<SetPermutation>> {
    if !z.is_involution() {
        return Err(Error::NotInvolution(z.to_string()));
    }
    check_bound("size", z.size(), TYPE_A_BRUTE_SIZE)?;
    let domain = z.domain().to_vec();
    let mut out: Vec<SetPermutation> = domain
        .iter()
        .copied()
        .permutations(domain.len())
        .map(|img| SetPermutation::new(domain.clone(), img).expect("rearrangement"))
        .filter(|w| perm::hecke_image(w) == *z)
        .collect();
    out.sort();
    Ok(out)
}

/// Type-A scan for minimal-length Hecke atoms.
pub fn atoms_brute_a(z: &SetPermutation) -> Result<Vec<SetPermutation>> {
    let all = hecke_atoms_brute_a(z)?;
    let min = all.iter().map(|w| w.length()).min().unwrap_or(0);
    Ok(all.into_iter().filter(|w| w.length() == min).collect())
}

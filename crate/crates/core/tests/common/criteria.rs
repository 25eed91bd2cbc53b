//! One check per acceptance criterion. Each returns a short summary on
//! success and the first counterexample on failure.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use atomkit::census;
use atomkit::equivalence::{self, MoveSystem};
use atomkit::hecke;
use atomkit::orders::{self, OrderKind};
use atomkit::structure;
use atomkit::tableaux::{self, Partition};
use atomkit::{SetPermutation, SignedInvolution};
use num_bigint::BigUint;

use super::*;

pub type Outcome = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> std::result::Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("{what} took {t:?}, over {limit:?}"))
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn catalan(k: usize) -> usize {
    binom(2 * k, k) / (k + 1)
}

fn involutions_upto(n: usize) -> impl Iterator<Item = SignedInvolution> {
    (1..=n).flat_map(SignedInvolution::all)
}

pub fn oracle() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for z in involutions_upto(4) {
        let fast = orders::atoms_fast(&z);
        let mut brute: Vec<_> = hecke::atoms_brute(&z)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|w| w.inverse())
            .collect();
        brute.sort();
        ensure(fast == brute, || {
            format!("z = {z}: fast {fast:?} vs brute {brute:?}")
        })?;
        count += 1;
    }
    within(start, Duration::from_secs(30), "oracle sweep")?;
    Ok(format!("{count} involutions, n ≤ 4, {:?}", start.elapsed()))
}

pub fn goldens() -> Outcome {
    let h = orders::hasse(&SignedInvolution::longest(4), OrderKind::LtB);
    ensure(h.elements.len() == 11, || {
        format!("|A(w0_4)| = {}", h.elements.len())
    })?;
    ensure(diagram_vertices(&h) == figure_vertices(INTRO_NODES), || {
        "intro vertices differ".into()
    })?;
    ensure(
        diagram_edges(&h, style_lt_b) == figure_edges(INTRO_NODES, INTRO_EDGES),
        || "intro labelled edges differ".into(),
    )?;
    let h5 = orders::hasse(&SignedInvolution::longest(5), OrderKind::LlB);
    ensure(h5.elements.len() == 30, || {
        format!("|A(w0_5)| = {}", h5.elements.len())
    })?;
    ensure(
        diagram_vertices(&h5) == figure_vertices(FIG_LLB_NODES),
        || "n = 5 vertices differ".into(),
    )?;
    let z = SignedInvolution::parse("-1,-2,-4,-3").map_err(|e| e.to_string())?;
    let comps = orders::components_a(&z);
    let sizes: Vec<usize> = comps.iter().map(|c| c.elements.len()).collect();
    ensure(sizes.iter().sum::<usize>() == 6 && comps.len() == 2, || {
        format!("1̄2̄4̄3̄ components {sizes:?}")
    })?;
    Ok("11-element <_B diagram, 30-element n = 5 set, 6 atoms in 2 components".into())
}

pub fn shape_bijection() -> Outcome {
    let mut count = 0;
    for z in involutions_upto(4) {
        let m = z.neg_count();
        let ncsp: BTreeSet<_> = structure::ncsp(&z, None).into_iter().collect();
        ensure(ncsp.len() == binom(m, m / 2), || {
            format!("z = {z}: |NCSP| = {}", ncsp.len())
        })?;
        let h = orders::hasse(&z, OrderKind::LtA);
        let comps = h.components().len();
        ensure(comps == ncsp.len(), || {
            format!("z = {z}: {comps} components")
        })?;
        let minimal = h.minimal();
        let shapes: BTreeSet<_> = minimal
            .iter()
            .map(|w| structure::shape(w).expect("inverse atom"))
            .collect();
        ensure(minimal.len() == comps && shapes == ncsp, || {
            format!("z = {z}: shapes of minimal elements differ from NCSP(z)")
        })?;
        count += 1;
    }
    Ok(format!("{count} involutions, n ≤ 4"))
}

pub fn catalan_maxima() -> Outcome {
    let mut count = 0;
    for z in involutions_upto(5) {
        let h = orders::hasse(&z, OrderKind::LtB);
        let k = z.neg_count().div_ceil(2);
        let max = h.maximal();
        ensure(max.len() == catalan(k), || {
            format!("z = {z}: {} maxima, C_{k} = {}", max.len(), catalan(k))
        })?;
        count += 1;
    }
    let h = orders::hasse(&SignedInvolution::longest(5), OrderKind::LtB);
    let max: BTreeSet<Vec<i32>> = h.maximal().iter().map(|w| w.window().to_vec()).collect();
    let sinks: BTreeSet<Vec<i32>> = FIG_LLB_SINKS
        .iter()
        .map(|s| node(FIG_LLB_NODES, s))
        .collect();
    ensure(max == sinks, || {
        "maxima of 1̄2̄3̄4̄5̄ differ from the figure's sinks".into()
    })?;
    Ok(format!(
        "{count} involutions, n ≤ 5 (exhaustive); 5 maxima for 1̄2̄3̄4̄5̄"
    ))
}

pub fn gradedness() -> Outcome {
    let mut covers = 0;
    for z in involutions_upto(4) {
        let h = orders::hasse(&z, OrderKind::LtA);
        let r = orders::ranks(&h);
        for &(i, j, _) in &h.covers {
            ensure(r[j] == r[i] + 1, || {
                format!("z = {z}: rank_A {} -> {}", h.elements[i], h.elements[j])
            })?;
        }
        let minimal: BTreeSet<_> = h.minimal().into_iter().collect();
        for (w, &rw) in h.elements.iter().zip(&r) {
            ensure((rw == 0) == minimal.contains(w), || {
                format!("z = {z}: rank_A({w}) = {rw}")
            })?;
        }
        covers += h.covers.len();
        let zero = structure::zero_b(&z);
        let one = structure::one_b(&z);
        for order in [OrderKind::LtB, OrderKind::LlB, OrderKind::LllB] {
            let h = orders::hasse(&z, order);
            let r = orders::ranks(&h);
            for &(i, j, k) in &h.covers {
                ensure(r[j] == r[i] + 1, || {
                    format!("z = {z}: rank_B {} -{k}-> {}", h.elements[i], h.elements[j])
                })?;
            }
            covers += h.covers.len();
            let top = *r.iter().max().unwrap();
            for (w, &rw) in h.elements.iter().zip(&r) {
                ensure((rw == 0) == (*w == zero), || {
                    format!("z = {z}: rank_B({w}) = 0")
                })?;
                ensure((rw == top) == (*w == one), || {
                    format!("z = {z}: rank_B max at {w}")
                })?;
            }
        }
    }
    Ok(format!("{covers} covers checked across four orders, n ≤ 4"))
}

pub fn hecke_classes() -> Outcome {
    for n in 0..=4 {
        let ok = equivalence::verify_hecke_classes(n).map_err(|e| e.to_string())?;
        ensure(ok, || {
            format!("≈_B classes of W_{n} differ from Hecke atom sets")
        })?;
    }
    for n in 1..=5usize {
        let mut seen = 0;
        for z in SetPermutation::involutions(n) {
            let mut expect: Vec<Vec<i32>> = hecke::hecke_atoms_brute_a(&z)
                .map_err(|e| e.to_string())?
                .iter()
                .map(|w| atomkit::CoxeterElement::inverse(w).one_line().to_vec())
                .collect();
            expect.sort();
            let class = equivalence::word_class(&expect[0], MoveSystem::ApproxA);
            ensure(class == expect, || {
                format!("≈_A class in S_{n} for z = {z}")
            })?;
            seen += class.len();
        }
        ensure(seen == (1..=n).product::<usize>(), || {
            format!("≈_A classes do not cover S_{n}")
        })?;
    }
    Ok("≈_B on W_n, n ≤ 4; ≈_A on S_n, n ≤ 5".into())
}

pub fn nested_goldens() -> Outcome {
    let w = sp("-1,6,7,-2,3,4,8,-9,5");
    let z = SignedInvolution::parse("-1,-7,6,4,5,3,-2,-8,-9").map_err(|e| e.to_string())?;
    let d = structure::nested_data(&w).map_err(|e| e.to_string())?;
    let ndes: BTreeSet<_> = d.ndes.iter().copied().collect();
    let expect: BTreeSet<_> = [(8, -9), (7, -2), (6, 3)].into_iter().collect();
    ensure(ndes == expect, || format!("NDes = {:?}", d.ndes))?;
    ensure(d.nneg == [1], || format!("NNeg = {:?}", d.nneg))?;
    ensure(d.nfix == [4, 5], || format!("NFix = {:?}", d.nfix))?;
    let sh = structure::shape(&w).map_err(|e| e.to_string())?;
    let blocks: BTreeSet<(i32, i32)> = sh
        .blocks()
        .iter()
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();
    let expect: BTreeSet<_> = [(-9, -8), (-1, 1), (8, 9)].into_iter().collect();
    ensure(blocks == expect, || format!("sh(w) = {sh}"))?;
    let back = structure::recover_involution(&w).map_err(|e| e.to_string())?;
    ensure(back == z, || format!("recovered {back}"))?;
    Ok(format!("w = {w}, sh(w) = {sh}, z = {z}"))
}

pub fn census_counts() -> Outcome {
    let start = Instant::now();
    let mut rows = 0;
    for n in 0..=8 {
        for row in census::census(n, true).map_err(|e| e.to_string())? {
            ensure(row.matches() == Some(true), || format!("{row:?}"))?;
            rows += 1;
        }
    }
    let a0: Vec<String> = (0..8).map(|n| census::formula_a0(n).to_string()).collect();
    ensure(a0 == ["1", "1", "3", "4", "11", "16", "42", "64"], || {
        format!("a0 = {a0:?}")
    })?;
    let a: Vec<String> = (0..8).map(|n| census::formula_a(n).to_string()).collect();
    ensure(a == ["1", "2", "5", "12", "26", "64", "130", "320"], || {
        format!("a = {a:?}")
    })?;
    for z in involutions_upto(4) {
        let unique = hecke::atoms_brute(&z).map_err(|e| e.to_string())?.len() == 1;
        ensure(census::is_atomic(&z) == unique, || {
            format!("is_atomic({z})")
        })?;
    }
    within(start, Duration::from_secs(60), "census")?;
    Ok(format!(
        "{rows} rows for n ≤ 8 agree, {:?}",
        start.elapsed()
    ))
}

pub fn identities() -> Outcome {
    let big = |x: u32| BigUint::from(x);
    let r3 = tableaux::reduced_words(&tableaux::longest_a(3))
        .map_err(|e| e.to_string())?
        .len();
    ensure(r3 == 2, || format!("|R(321)| = {r3}"))?;
    let r4 = tableaux::reduced_words(&tableaux::longest_a(4))
        .map_err(|e| e.to_string())?
        .len();
    let f321 = tableaux::hook_f(&Partition::staircase(3));
    ensure(r4 == 16 && f321 == big(16), || {
        format!("|R(4321)| = {r4}, f = {f321}")
    })?;
    let rb2 = tableaux::rhat_words(&SignedInvolution::longest(2))
        .map_err(|e| e.to_string())?
        .len();
    ensure(rb2 == 2 && rb2 == r3, || format!("R̂(w0 of W_2) = {rb2}"))?;
    let seq: Vec<usize> = (1..=5)
        .map(|n| tableaux::rhat_words(&SignedInvolution::grassmannian(n)).map(|r| r.len()))
        .collect::<atomkit::Result<_>>()
        .map_err(|e| e.to_string())?;
    ensure(seq == [1, 1, 2, 5, 42], || format!("R̂(γ_n) = {seq:?}"))?;
    for n in [3usize, 5] {
        let g = tableaux::shifted_g(&Partition::shifted_staircase(n)).map_err(|e| e.to_string())?;
        ensure(g == BigUint::from(seq[n - 1]), || {
            format!("g at n = {n} is {g}")
        })?;
    }
    Ok(format!(
        "R̂(γ_1..5) = {seq:?}; shifted hooks agree at n = 3, 5"
    ))
}

pub fn probes() -> Outcome {
    let mut comps = 0;
    for z in involutions_upto(4) {
        for rep in orders::probe_components_a(&z).map_err(|e| e.to_string())? {
            ensure(rep.graded && rep.bounded, || {
                format!("z = {z}: <_A component {rep:?}")
            })?;
            comps += 1;
        }
    }
    let mut semis = 0;
    for z in involutions_upto(5) {
        let rep = orders::poset_probe(&z, OrderKind::LlB, false).map_err(|e| e.to_string())?;
        ensure(rep.lower_semilattice, || {
            format!("z = {z}: ≪_B is not a lower semilattice")
        })?;
        semis += 1;
    }
    let mut lattices = 0;
    let mut total = 0;
    for z in involutions_upto(5) {
        let rep = orders::poset_probe(&z, OrderKind::LllB, false).map_err(|e| e.to_string())?;
        lattices += rep.lattice as usize;
        total += 1;
    }
    Ok(format!(
        "{comps} bounded graded <_A components; {semis} ≪_B lower semilattices; ⋘_B lattices {lattices}/{total} (n ≤ 5, reported)"
    ))
}

pub type Criterion = (&'static str, fn() -> Outcome);

pub const ALL: [Criterion; 10] = [
    ("oracle equivalence", oracle),
    ("worked-example goldens", goldens),
    ("shape bijection", shape_bijection),
    ("Catalan maxima", catalan_maxima),
    ("gradedness", gradedness),
    ("Hecke classes", hecke_classes),
    ("nested-descent goldens", nested_goldens),
    ("census", census_counts),
    ("enumerative identities", identities),
    ("poset probes", probes),
];

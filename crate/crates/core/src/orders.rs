//! Atomic orders on `A(z)^{-1}`: covering moves, fast atom sets, Hasse
//! diagrams, rank functions, components, extremes, and poset probes.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;

use crate::config::PROBE_LIMIT;
use crate::error::{Error, Result};
use crate::hecke::{self, SignedInvolution};
use crate::perm::{inversions, SetPermutation, SignedPermutation};
use crate::structure::{self, Matching, NestedData};

/// The generating relations. `v ◁ w` always means `v` is the lower element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoverKind {
    /// `cab → bca` at any three consecutive positions, `a < b < c`.
    A,
    /// `b̄ā… → ab̄…` or `c̄b̄ā… → c̄ab̄…`, `0 < a < b < c`.
    B,
    /// `b̄ā → ab̄` at positions `i, i+1` after a strictly increasing prefix.
    Bplus,
    /// `b̄ā → ab̄` at positions `i, i+1` with `b` the least absolute value so far.
    StrongB,
    /// `c̄ ⋯ ab̄ → ā ⋯ bc̄` with every other letter before `a` smaller than `a` in absolute value.
    BlackB,
}

pub const ALL_COVER_KINDS: [CoverKind; 5] = [
    CoverKind::A,
    CoverKind::B,
    CoverKind::Bplus,
    CoverKind::StrongB,
    CoverKind::BlackB,
];

/// The four atomic orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrderKind {
    /// `<_A`, generated by ◁_A.
    LtA,
    /// `<_B`, generated by ◁_A and ◁_B.
    LtB,
    /// `≪_B`, generated by ◁_A and the strong move.
    LlB,
    /// `⋘_B`, generated by ◁_A, the strong move, and the three-letter move.
    LllB,
}

pub const ALL_ORDERS: [OrderKind; 4] = [
    OrderKind::LtA,
    OrderKind::LtB,
    OrderKind::LlB,
    OrderKind::LllB,
];

impl OrderKind {
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::LtA => "ltA",
            OrderKind::LtB => "ltB",
            OrderKind::LlB => "llB",
            OrderKind::LllB => "lllB",
        }
    }

    pub fn generators(self) -> &'static [CoverKind] {
        match self {
            OrderKind::LtA => &[CoverKind::A],
            OrderKind::LtB => &[CoverKind::A, CoverKind::B],
            OrderKind::LlB => &[CoverKind::A, CoverKind::StrongB],
            OrderKind::LllB => &[CoverKind::A, CoverKind::StrongB, CoverKind::BlackB],
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OrderKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ALL_ORDERS
            .into_iter()
            .find(|o| o.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "unknown order {s:?}; expected ltA, ltB, llB or lllB"
                ))
            })
    }
}

/// Edge label in a Hasse diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum EdgeKind {
    A,
    /// A ◁_B pair.
    B,
    /// A strong move that is not a ◁_B pair.
    SB,
    /// The three-letter move.
    BB,
}

impl EdgeKind {
    pub fn name(self) -> &'static str {
        match self {
            EdgeKind::A => "A",
            EdgeKind::B => "B",
            EdgeKind::SB => "SB",
            EdgeKind::BB => "BB",
        }
    }
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

// ---------------------------------------------------------------------------
// Moves
// ---------------------------------------------------------------------------

/// All `w` with `v ◁ w`.
pub fn up_moves(v: &[i32], kind: CoverKind) -> Vec<Vec<i32>> {
    let n = v.len();
    let mut out = Vec::new();
    match kind {
        CoverKind::A => {
            for i in 0..n.saturating_sub(2) {
                let (c, a, b) = (v[i], v[i + 1], v[i + 2]);
                if a < b && b < c {
                    let mut w = v.to_vec();
                    w[i..i + 3].copy_from_slice(&[b, c, a]);
                    out.push(w);
                }
            }
        }
        CoverKind::B => {
            if n >= 2 && v[0] < v[1] && v[1] < 0 {
                let mut w = v.to_vec();
                w[0] = -v[1];
                w[1] = v[0];
                out.push(w);
            }
            if n >= 3 && v[0] < v[1] && v[1] < v[2] && v[2] < 0 {
                let mut w = v.to_vec();
                w[1] = -v[2];
                w[2] = v[1];
                out.push(w);
            }
        }
        CoverKind::Bplus => {
            for i in 0..n.saturating_sub(1) {
                if v[i + 1] >= 0 || !v[..=i + 1].windows(2).all(|p| p[0] < p[1]) {
                    continue;
                }
                let mut w = v.to_vec();
                w[i] = -v[i + 1];
                w[i + 1] = v[i];
                out.push(w);
            }
        }
        CoverKind::StrongB => {
            for i in 0..n.saturating_sub(1) {
                let (nb, na) = (v[i], v[i + 1]);
                if !(nb < na && na < 0) {
                    continue;
                }
                if v[..i].iter().any(|x| x.abs() < -nb) {
                    continue;
                }
                let mut w = v.to_vec();
                w[i] = -na;
                w[i + 1] = nb;
                out.push(w);
            }
        }
        CoverKind::BlackB => {
            for j in 1..n.saturating_sub(1) {
                let (a, nb) = (v[j], v[j + 1]);
                if !(a > 0 && nb < 0 && a < -nb) {
                    continue;
                }
                let b = -nb;
                for i in 0..j {
                    let c = -v[i];
                    if c <= b {
                        continue;
                    }
                    if (0..j).filter(|&k| k != i).any(|k| v[k].abs() >= a) {
                        continue;
                    }
                    let mut w = v.to_vec();
                    w[i] = -a;
                    w[j] = b;
                    w[j + 1] = -c;
                    out.push(w);
                }
            }
        }
    }
    out
}

/// All `v` with `v ◁ w`.
pub fn down_moves(w: &[i32], kind: CoverKind) -> Vec<Vec<i32>> {
    let n = w.len();
    let mut out = Vec::new();
    match kind {
        CoverKind::A => {
            for i in 0..n.saturating_sub(2) {
                let (b, c, a) = (w[i], w[i + 1], w[i + 2]);
                if a < b && b < c {
                    let mut v = w.to_vec();
                    v[i..i + 3].copy_from_slice(&[c, a, b]);
                    out.push(v);
                }
            }
        }
        CoverKind::B => {
            if n >= 2 && w[0] > 0 && w[1] < 0 && w[0] < -w[1] {
                let mut v = w.to_vec();
                v[0] = w[1];
                v[1] = -w[0];
                out.push(v);
            }
            // c̄ab̄ → c̄b̄ā
            if n >= 3 && w[1] > 0 && w[2] < 0 && w[1] < -w[2] && w[0] < w[2] {
                let mut v = w.to_vec();
                v[1] = w[2];
                v[2] = -w[1];
                out.push(v);
            }
        }
        CoverKind::Bplus | CoverKind::StrongB => {
            for i in 0..n.saturating_sub(1) {
                let (a, nb) = (w[i], w[i + 1]);
                if !(a > 0 && nb < 0 && a < -nb) {
                    continue;
                }
                let mut v = w.to_vec();
                v[i] = nb;
                v[i + 1] = -a;
                let ok = if kind == CoverKind::Bplus {
                    v[..=i + 1].windows(2).all(|p| p[0] < p[1])
                } else {
                    v[..i].iter().all(|x| x.abs() > -nb)
                };
                if ok {
                    out.push(v);
                }
            }
        }
        CoverKind::BlackB => {
            for j in 1..n.saturating_sub(1) {
                let (b, nc) = (w[j], w[j + 1]);
                if !(b > 0 && nc < 0 && b < -nc) {
                    continue;
                }
                let c = -nc;
                for i in 0..j {
                    let a = -w[i];
                    if !(0 < a && a < b) {
                        continue;
                    }
                    if (0..j).filter(|&k| k != i).any(|k| w[k].abs() >= a) {
                        continue;
                    }
                    let mut v = w.to_vec();
                    v[i] = -c;
                    v[j] = a;
                    v[j + 1] = -b;
                    out.push(v);
                }
            }
        }
    }
    out
}

/// Does `v ◁ w` hold for the given relation?
pub fn covers(v: &SignedPermutation, w: &SignedPermutation, kind: CoverKind) -> Result<bool> {
    if v.rank() != w.rank() {
        return Err(Error::RankMismatch {
            left: v.rank(),
            right: w.rank(),
        });
    }
    Ok(up_moves(v.window(), kind)
        .iter()
        .any(|u| u.as_slice() == w.window()))
}

fn to_perm(w: Vec<i32>) -> SignedPermutation {
    SignedPermutation::from_window(w).expect("moves permute and re-sign letters")
}

/// Breadth-first closure of `seeds` under a neighbour function, sorted.
pub(crate) fn closure<F>(seeds: &[SignedPermutation], mut neighbours: F) -> Vec<SignedPermutation>
where
    F: FnMut(&[i32]) -> Vec<Vec<i32>>,
{
    let mut seen: HashSet<SignedPermutation> = seeds.iter().cloned().collect();
    let mut queue: VecDeque<SignedPermutation> = seeds.iter().cloned().collect();
    while let Some(v) = queue.pop_front() {
        for u in neighbours(v.window()) {
            let u = to_perm(u);
            if seen.insert(u.clone()) {
                queue.push_back(u);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    out
}

/// Closure of `seeds` under the given moves in both directions, sorted.
pub fn move_closure(seeds: &[SignedPermutation], kinds: &[CoverKind]) -> Vec<SignedPermutation> {
    closure(seeds, |w| {
        kinds
            .iter()
            .flat_map(|&k| up_moves(w, k).into_iter().chain(down_moves(w, k)))
            .collect()
    })
}

/// `A(z)^{-1}`, grown from `0_B(z)` under ◁_A and ◁_B.
pub fn atoms_fast(z: &SignedInvolution) -> Vec<SignedPermutation> {
    move_closure(&[structure::zero_b(z)], &[CoverKind::A, CoverKind::B])
}

/// `A(z)`: the inverses of [`atoms_fast`], sorted.
pub fn atoms(z: &SignedInvolution) -> Vec<SignedPermutation> {
    let mut out: Vec<_> = atoms_fast(z).iter().map(|w| w.inverse()).collect();
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// Hasse diagrams
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseDiagram {
    pub order: OrderKind,
    pub elements: Vec<SignedPermutation>,
    /// `(lower, upper, kind)`, sorted.
    pub covers: Vec<(usize, usize, EdgeKind)>,
}

impl HasseDiagram {
    /// Build from an element set closed under the order's moves.
    pub fn from_elements(elements: Vec<SignedPermutation>, order: OrderKind) -> Self {
        let index: HashMap<&SignedPermutation, usize> =
            elements.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut edges: BTreeMap<(usize, usize), EdgeKind> = BTreeMap::new();
        for (i, v) in elements.iter().enumerate() {
            for &k in order.generators() {
                for u in up_moves(v.window(), k) {
                    let u = to_perm(u);
                    let Some(&j) = index.get(&u) else { continue };
                    let label = match k {
                        CoverKind::A => EdgeKind::A,
                        CoverKind::B => EdgeKind::B,
                        CoverKind::BlackB => EdgeKind::BB,
                        CoverKind::StrongB | CoverKind::Bplus => {
                            if up_moves(v.window(), CoverKind::B)
                                .iter()
                                .any(|x| x.as_slice() == u.window())
                            {
                                EdgeKind::B
                            } else {
                                EdgeKind::SB
                            }
                        }
                    };
                    edges.entry((i, j)).or_insert(label);
                }
            }
        }
        let covers = edges.into_iter().map(|((i, j), k)| (i, j, k)).collect();
        Self {
            order,
            elements,
            covers,
        }
    }

    pub fn index_of(&self, w: &SignedPermutation) -> Option<usize> {
        self.elements.binary_search(w).ok()
    }

    pub fn minimal(&self) -> Vec<SignedPermutation> {
        let mut has_below = vec![false; self.elements.len()];
        for &(_, j, _) in &self.covers {
            has_below[j] = true;
        }
        self.pick(|i| !has_below[i])
    }

    pub fn maximal(&self) -> Vec<SignedPermutation> {
        let mut has_above = vec![false; self.elements.len()];
        for &(i, _, _) in &self.covers {
            has_above[i] = true;
        }
        self.pick(|i| !has_above[i])
    }

    fn pick(&self, keep: impl Fn(usize) -> bool) -> Vec<SignedPermutation> {
        (0..self.elements.len())
            .filter(|&i| keep(i))
            .map(|i| self.elements[i].clone())
            .collect()
    }

    /// Connected components of the underlying undirected graph, as index sets.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.elements.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for &(i, j, _) in &self.covers {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(i);
        }
        groups.into_values().collect()
    }

    /// Strict-down-set bitsets: bit `j` of `below[i]` is set iff `j < i` in the order.
    fn down_sets(&self) -> Vec<FixedBitSet> {
        let n = self.elements.len();
        let mut lower: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        let mut upper: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(i, j, _) in &self.covers {
            lower[j].push(i);
            upper[i].push(j);
            indeg[j] += 1;
        }
        let mut below = vec![FixedBitSet::with_capacity(n); n];
        let mut queue: VecDeque<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        while let Some(v) = queue.pop_front() {
            for &l in &lower[v] {
                let mut set = below[l].clone();
                set.insert(l);
                below[v].union_with(&set);
            }
            for &u in &upper[v] {
                indeg[u] -= 1;
                if indeg[u] == 0 {
                    queue.push_back(u);
                }
            }
        }
        below
    }

    /// `v ≤ w` in the order.
    pub fn le(&self, v: usize, w: usize) -> bool {
        v == w || self.down_sets()[w].contains(v)
    }

    /// A function that rises by exactly 1 along every cover, if one exists,
    /// normalized to 0 at the least vertex of each component. Independent of
    /// the closed-form rank functions.
    pub fn consistent_rank(&self) -> Option<Vec<i64>> {
        let n = self.elements.len();
        let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
        for &(i, j, _) in &self.covers {
            adj[i].push((j, 1));
            adj[j].push((i, -1));
        }
        let mut rank: Vec<Option<i64>> = vec![None; n];
        for comp in self.components() {
            rank[comp[0]] = Some(0);
            let mut queue = VecDeque::from([comp[0]]);
            while let Some(v) = queue.pop_front() {
                let rv = rank[v].unwrap();
                for &(u, d) in &adj[v] {
                    match rank[u] {
                        None => {
                            rank[u] = Some(rv + d);
                            queue.push_back(u);
                        }
                        Some(ru) if ru != rv + d => return None,
                        Some(_) => {}
                    }
                }
            }
            let lo = comp.iter().map(|&i| rank[i].unwrap()).min().unwrap();
            for &i in &comp {
                rank[i] = Some(rank[i].unwrap() - lo);
            }
        }
        Some(rank.into_iter().map(Option::unwrap).collect())
    }
}

pub fn hasse(z: &SignedInvolution, order: OrderKind) -> HasseDiagram {
    HasseDiagram::from_elements(atoms_fast(z), order)
}

// ---------------------------------------------------------------------------
// Rank functions
// ---------------------------------------------------------------------------

fn offset_a(d: &NestedData) -> usize {
    let mut count = 0;
    for &(b1, a1) in &d.ndes {
        for &(b2, a2) in &d.ndes {
            if a1 < a2 && a2 < b2 && b2 < b1 {
                count += 1;
            }
        }
    }
    count
}

fn offset_b(d: &NestedData) -> usize {
    let mut count = 0;
    for &(b1, a1) in &d.ndes {
        for &(b2, a2) in &d.ndes {
            if a1 <= a2 && a2 < -b1 && -b1 < 0 && b1 <= b2 {
                count += 1;
            }
        }
    }
    count
}

fn rank_a_of(w: &SignedPermutation, d: &NestedData) -> i64 {
    let big: HashSet<i32> = d.ndes.iter().map(|p| p.0).collect();
    let (l, r): (Vec<i32>, Vec<i32>) = w.window().iter().partition(|x| big.contains(x));
    inversions(&r) as i64 - inversions(&l) as i64 + offset_a(d) as i64
}

fn rank_b_of(w: &SignedPermutation, d: &NestedData) -> i64 {
    rank_a_of(w, d) + offset_b(d) as i64
}

pub fn rank_a(w: &SignedPermutation) -> Result<i64> {
    Ok(rank_a_of(w, &structure::nested_data(w)?))
}

pub fn rank_b(w: &SignedPermutation) -> Result<usize> {
    let r = rank_b_of(w, &structure::nested_data(w)?);
    Ok(usize::try_from(r).expect("rank_B is nonnegative on inverse atoms"))
}

pub fn offsets(w: &SignedPermutation) -> Result<(usize, usize)> {
    let d = structure::nested_data(w)?;
    Ok((offset_a(&d), offset_b(&d)))
}

/// rank_A for `<_A`, rank_B otherwise, on every element of the diagram.
/// Elements must be inverse atoms.
pub fn ranks(h: &HasseDiagram) -> Vec<i64> {
    h.elements
        .iter()
        .map(|w| {
            let d = structure::nested_data_unchecked(w);
            match h.order {
                OrderKind::LtA => rank_a_of(w, &d),
                _ => rank_b_of(w, &d),
            }
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Components and extremes
// ---------------------------------------------------------------------------

/// A `~_A`-class of `A(z)^{-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentA {
    pub elements: Vec<SignedPermutation>,
    pub shape: Matching,
    /// ζ ∈ I(S_X), X the letters of any element, with one transposition per nested descent.
    pub zeta: SetPermutation,
}

pub fn components_a(z: &SignedInvolution) -> Vec<ComponentA> {
    let h = hasse(z, OrderKind::LtA);
    let mut out: Vec<ComponentA> = h
        .components()
        .into_iter()
        .map(|idx| {
            let elements: Vec<_> = idx.iter().map(|&i| h.elements[i].clone()).collect();
            let d = structure::nested_data_unchecked(&elements[0]);
            let shape = structure::shape_of(&d);
            let cycles: Vec<(i32, i32)> = d.ndes.iter().map(|&(b, a)| (a, b)).collect();
            let zeta = SetPermutation::from_cycles(elements[0].window(), &cycles)
                .expect("nested descents are disjoint transpositions");
            ComponentA {
                elements,
                shape,
                zeta,
            }
        })
        .collect();
    out.sort_by(|a, b| a.shape.cmp(&b.shape));
    out
}

/// Minimal and maximal elements of `(A(z)^{-1}, order)`.
pub fn extremes(
    z: &SignedInvolution,
    order: OrderKind,
) -> (Vec<SignedPermutation>, Vec<SignedPermutation>) {
    let h = hasse(z, order);
    (h.minimal(), h.maximal())
}

// ---------------------------------------------------------------------------
// Probes
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ProbeReport {
    pub order: String,
    pub size: usize,
    pub covers: usize,
    pub components: usize,
    /// The closed-form rank function rises by 1 on every cover.
    pub graded: bool,
    /// Some function rises by 1 on every cover (checked only when asked).
    pub graded_paranoid: Option<bool>,
    /// Unique minimum and unique maximum.
    pub bounded: bool,
    pub lattice: bool,
    pub lower_semilattice: bool,
    pub upper_semilattice: bool,
}

pub fn poset_probe(z: &SignedInvolution, order: OrderKind, paranoid: bool) -> Result<ProbeReport> {
    let h = hasse(z, order);
    probe_diagram(&h, paranoid)
}

/// Lattice probes on each `<_A`-component separately.
pub fn probe_components_a(z: &SignedInvolution) -> Result<Vec<ProbeReport>> {
    components_a(z)
        .into_iter()
        .map(|c| {
            probe_diagram(
                &HasseDiagram::from_elements(c.elements, OrderKind::LtA),
                true,
            )
        })
        .collect()
}

pub fn probe_diagram(h: &HasseDiagram, paranoid: bool) -> Result<ProbeReport> {
    let n = h.elements.len();
    if n > PROBE_LIMIT {
        return Err(Error::BoundExceeded {
            what: "poset size",
            value: n,
            bound: PROBE_LIMIT,
        });
    }
    let r = ranks(h);
    let graded = h.covers.iter().all(|&(i, j, _)| r[j] == r[i] + 1);
    let graded_paranoid = paranoid.then(|| h.consistent_rank().is_some());
    let bounded = h.minimal().len() == 1 && h.maximal().len() == 1;

    let below = h.down_sets();
    let mut down_closed: Vec<FixedBitSet> = below.clone();
    for (i, set) in down_closed.iter_mut().enumerate() {
        set.insert(i);
    }
    let mut up_closed = vec![FixedBitSet::with_capacity(n); n];
    for (i, set) in down_closed.iter().enumerate() {
        for j in set.ones() {
            up_closed[j].insert(i);
        }
    }
    let has_extremum = |sets: &[FixedBitSet], x: usize, y: usize| {
        let mut common = sets[x].clone();
        common.intersect_with(&sets[y]);
        let size = common.count_ones(..);
        common.ones().any(|m| sets[m].count_ones(..) == size)
    };
    let mut meets = true;
    let mut joins = true;
    'outer: for x in 0..n {
        for y in x + 1..n {
            if meets && !has_extremum(&down_closed, x, y) {
                meets = false;
            }
            if joins && !has_extremum(&up_closed, x, y) {
                joins = false;
            }
            if !meets && !joins {
                break 'outer;
            }
        }
    }
    Ok(ProbeReport {
        order: h.order.name().to_string(),
        size: n,
        covers: h.covers.len(),
        components: h.components().len(),
        graded,
        graded_paranoid,
        bounded,
        lattice: meets && joins,
        lower_semilattice: meets,
        upper_semilattice: joins,
    })
}

/// Checks that `w` is an inverse atom of `z`.
pub fn is_inverse_atom_of(w: &SignedPermutation, z: &SignedInvolution) -> bool {
    hecke::inverse_atom_of(w).as_ref() == Some(z)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    fn inv(s: &str) -> SignedInvolution {
        SignedInvolution::parse(s).unwrap()
    }

    #[test]
    fn cover_examples() {
        assert!(covers(&sp("-4,-3,-2,-1"), &sp("3,-4,-2,-1"), CoverKind::B).unwrap());
        assert!(!covers(&sp("-4,-3,-2,-1"), &sp("-4,2,-3,-1"), CoverKind::A).unwrap());
        assert!(covers(&sp("3,1,2"), &sp("2,3,1"), CoverKind::A).unwrap());
        assert!(covers(&sp("-3,1,-2"), &sp("-1,2,-3"), CoverKind::BlackB).unwrap());
        assert!(covers(&sp("-3,-2,-1"), &sp("-3,1,-2"), CoverKind::B).unwrap());
        assert!(covers(&sp("-3,-2,-1"), &sp("-3,1,-2"), CoverKind::Bplus).unwrap());
        assert!(covers(&sp("-3,-2,-1"), &sp("-3,1,-2"), CoverKind::StrongB).unwrap());
        assert!(covers(&sp("1"), &sp("1,2"), CoverKind::A).is_err());
    }

    #[test]
    fn up_and_down_are_inverse() {
        for w in SignedPermutation::all(4) {
            for k in ALL_COVER_KINDS {
                for u in up_moves(w.window(), k) {
                    assert!(
                        down_moves(&u, k).iter().any(|x| x.as_slice() == w.window()),
                        "{k:?} {w}"
                    );
                }
                for d in down_moves(w.window(), k) {
                    assert!(
                        up_moves(&d, k).iter().any(|x| x.as_slice() == w.window()),
                        "{k:?} {w}"
                    );
                }
            }
        }
    }

    #[test]
    fn relation_inclusions() {
        for v in SignedPermutation::all(4) {
            let b = up_moves(v.window(), CoverKind::B);
            let bplus = up_moves(v.window(), CoverKind::Bplus);
            let strong = up_moves(v.window(), CoverKind::StrongB);
            assert!(b.iter().all(|w| bplus.contains(w)));
            assert!(bplus.iter().all(|w| strong.contains(w)));
        }
    }

    #[test]
    fn small_atom_sets() {
        assert_eq!(
            atoms_fast(&SignedInvolution::identity(3)),
            vec![SignedPermutation::identity(3)]
        );
        assert_eq!(atoms_fast(&SignedInvolution::longest(4)).len(), 11);
        assert_eq!(atoms_fast(&inv("-1,-2,-4,-3")).len(), 6);
        assert_eq!(atoms(&inv("-1,-2")), vec![sp("-2,-1"), sp("1,-2")]);
    }

    #[test]
    fn rank_examples() {
        let w = sp("-3,4,-5,1,-2");
        assert_eq!(rank_a(&w).unwrap(), 1);
        assert_eq!(offsets(&w).unwrap().0, 1);
        let w = sp("1,-5,2,-3,6,-4");
        assert_eq!(rank_a(&w).unwrap(), 2);
        assert_eq!(offsets(&w).unwrap().1, 4);
        assert_eq!(rank_b(&w).unwrap(), 6);
        let z = SignedInvolution::longest(4);
        assert_eq!(rank_b(&structure::zero_b(&z)).unwrap(), 0);
    }

    #[test]
    fn two_components() {
        let comps = components_a(&inv("-1,-2,-4,-3"));
        assert_eq!(comps.len(), 2);
        let zetas: Vec<Vec<(i32, i32)>> = comps.iter().map(|c| c.zeta.transpositions()).collect();
        assert!(zetas.contains(&vec![(-3, 4)]));
        assert!(zetas.contains(&vec![(-3, 4), (-2, 1)]));
        assert!(comps.iter().all(|c| c.elements.len() == 3));
    }

    #[test]
    fn order_names() {
        for o in ALL_ORDERS {
            assert_eq!(o.name().parse::<OrderKind>().unwrap(), o);
        }
        assert!("ltC".parse::<OrderKind>().is_err());
    }

    #[test]
    fn probe_small() {
        let z = SignedInvolution::longest(3);
        let r = poset_probe(&z, OrderKind::LlB, true).unwrap();
        assert!(r.graded);
        assert_eq!(r.graded_paranoid, Some(true));
        assert!(r.lower_semilattice);
        let id = SignedInvolution::identity(2);
        let r = poset_probe(&id, OrderKind::LtA, false).unwrap();
        assert!(r.bounded && r.lattice && r.size == 1);
    }
}

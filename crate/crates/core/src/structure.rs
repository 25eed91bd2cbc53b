//! Nested descent graphs, nested statistics, shapes, and extremal inverse atoms.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use itertools::Itertools;

use crate::config::DEFAULT_NESTED_LIMIT;
use crate::error::{Error, Result};
use crate::hecke::{self, SignedInvolution};
use crate::perm::{dedupe_first, letters, SetPermutation, SignedPermutation, Word};

/// A descent pair `(b, a)` with `b > a`, read off adjacent letters `b a`.
pub type Label = (i32, i32);

/// The DAG of subwords reached by repeatedly deleting one adjacent descent pair.
///
/// Vertex 0 is the input word. Vertices are ordered by decreasing length,
/// then lexicographically; edges by (source, target).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NestedDescentGraph {
    pub vertices: Vec<Word>,
    pub edges: Vec<(usize, usize, Label)>,
}

impl NestedDescentGraph {
    pub fn source(&self) -> &Word {
        &self.vertices[0]
    }

    /// Indices of vertices with no children.
    pub fn sinks(&self) -> Vec<usize> {
        let has_child: BTreeSet<usize> = self.edges.iter().map(|e| e.0).collect();
        (0..self.vertices.len())
            .filter(|i| !has_child.contains(i))
            .collect()
    }

    /// The global sink, when it is unique.
    pub fn sink(&self) -> Option<&Word> {
        match self.sinks().as_slice() {
            [s] => Some(&self.vertices[*s]),
            _ => None,
        }
    }

    /// The label set common to every source-to-sink path, if there is one.
    pub fn path_labels(&self) -> Option<Vec<Label>> {
        let n = self.vertices.len();
        let mut out_edges: Vec<Vec<(usize, Label)>> = vec![Vec::new(); n];
        for &(s, t, l) in &self.edges {
            out_edges[s].push((t, l));
        }
        // Edges only go to strictly shorter words, so reverse index order works.
        let mut sets: Vec<Option<BTreeSet<Label>>> = vec![None; n];
        for v in (0..n).rev() {
            let mut mine: Option<BTreeSet<Label>> = None;
            if out_edges[v].is_empty() {
                mine = Some(BTreeSet::new());
            }
            for &(t, l) in &out_edges[v] {
                let below = sets[t].as_ref()?;
                if below.contains(&l) {
                    return None;
                }
                let mut s = below.clone();
                s.insert(l);
                match &mine {
                    None => mine = Some(s),
                    Some(m) if *m == s => {}
                    Some(_) => return None,
                }
            }
            sets[v] = mine;
        }
        sets[0].take().map(|s| s.into_iter().collect())
    }
}

/// The children of `w`: remove one adjacent descent `w_i > w_{i+1}`.
pub fn children(w: &[i32]) -> Vec<(Word, Label)> {
    (0..w.len().saturating_sub(1))
        .filter(|&i| w[i] > w[i + 1])
        .map(|i| {
            let mut c = w[..i].to_vec();
            c.extend_from_slice(&w[i + 2..]);
            (c, (w[i], w[i + 1]))
        })
        .collect()
}

pub fn nested_descent_graph(w: &[i32]) -> Result<NestedDescentGraph> {
    if let Some(x) = w.iter().duplicates().next() {
        return Err(Error::RepeatedLetter(*x));
    }
    let mut index: HashMap<Word, usize> = HashMap::from([(w.to_vec(), 0)]);
    let mut vertices = vec![w.to_vec()];
    let mut raw_edges = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for (c, label) in children(&vertices[v]) {
            let t = *index.entry(c.clone()).or_insert_with(|| {
                vertices.push(c);
                queue.push_back(vertices.len() - 1);
                vertices.len() - 1
            });
            raw_edges.push((v, t, label));
        }
    }
    // Canonical order: longer words first, then lexicographic.
    let mut order: Vec<usize> = (0..vertices.len()).collect();
    order.sort_by(|&a, &b| {
        vertices[b]
            .len()
            .cmp(&vertices[a].len())
            .then_with(|| vertices[a].cmp(&vertices[b]))
    });
    let mut rename = vec![0; vertices.len()];
    for (new, &old) in order.iter().enumerate() {
        rename[old] = new;
    }
    let mut edges: Vec<_> = raw_edges
        .into_iter()
        .map(|(s, t, l)| (rename[s], rename[t], l))
        .collect();
    edges.sort();
    let vertices = order.into_iter().map(|i| vertices[i].clone()).collect();
    Ok(NestedDescentGraph { vertices, edges })
}

/// NDes, NFix and NNeg of an inverse atom.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize)]
pub struct NestedData {
    /// Labels `(b, a)`, sorted.
    pub ndes: Vec<Label>,
    pub nfix: Vec<i32>,
    pub nneg: Vec<i32>,
}

impl NestedData {
    fn is_type_b_pair(&(b, a): &Label) -> bool {
        0 < b && b < -a
    }

    /// NDes minus the pairs `(a, -b)` with `0 < a < b`.
    pub fn ndes_b(&self) -> Vec<Label> {
        self.ndes
            .iter()
            .filter(|l| !Self::is_type_b_pair(l))
            .copied()
            .collect()
    }

    /// NNeg plus both `a` and `b` for each pair `(a, -b)`, `0 < a < b`.
    pub fn nneg_b(&self) -> Vec<i32> {
        let mut out = self.nneg.clone();
        for &(a, nb) in self.ndes.iter().filter(|l| Self::is_type_b_pair(l)) {
            out.push(a);
            out.push(-nb);
        }
        out.sort();
        out
    }
}

/// Nested data read off a single path; the caller vouches for path independence.
fn nested_data_along_path(w: &[i32]) -> NestedData {
    let mut cur = w.to_vec();
    let mut ndes = Vec::new();
    while let Some((c, l)) = children(&cur).into_iter().next() {
        ndes.push(l);
        cur = c;
    }
    ndes.sort();
    NestedData {
        ndes,
        nfix: cur.iter().filter(|&&x| x > 0).copied().sorted().collect(),
        nneg: cur
            .iter()
            .filter(|&&x| x < 0)
            .map(|x| -x)
            .sorted()
            .collect(),
    }
}

/// Structural test on a word: unique sink and path-independent labels.
pub fn nested_data_word(w: &[i32]) -> Result<NestedData> {
    let g = nested_descent_graph(w)?;
    let not_atom = || Error::NotInverseAtom(letters(w));
    let sink = g.sink().ok_or_else(not_atom)?.clone();
    let ndes = g.path_labels().ok_or_else(not_atom)?;
    Ok(NestedData {
        ndes,
        nfix: sink.iter().filter(|&&x| x > 0).copied().sorted().collect(),
        nneg: sink
            .iter()
            .filter(|&&x| x < 0)
            .map(|x| -x)
            .sorted()
            .collect(),
    })
}

pub fn nested_data(w: &SignedPermutation) -> Result<NestedData> {
    nested_data_with(w, DEFAULT_NESTED_LIMIT)
}

/// Up to rank `limit` the full graph is built and checked; above it a single
/// path is followed after the algebraic membership test.
pub fn nested_data_with(w: &SignedPermutation, limit: usize) -> Result<NestedData> {
    if !hecke::is_inverse_atom(w) {
        return Err(Error::NotInverseAtom(w.to_string()));
    }
    if w.rank() <= limit {
        nested_data_word(w.window())
    } else {
        Ok(nested_data_along_path(w.window()))
    }
}

/// Nested data without building the graph; `w` must be an inverse atom.
pub(crate) fn nested_data_unchecked(w: &SignedPermutation) -> NestedData {
    nested_data_along_path(w.window())
}

pub fn nested_data_b(w: &SignedPermutation) -> Result<(Vec<Label>, Vec<i32>)> {
    let d = nested_data(w)?;
    Ok((d.ndes_b(), d.nneg_b()))
}

/// The involution `z` with `w ∈ A(z)^{-1}`, assembled from nested data.
pub fn recover_involution(w: &SignedPermutation) -> Result<SignedInvolution> {
    let d = nested_data(w)?;
    let z = involution_from_nested(w.rank(), &d)?;
    debug_assert_eq!(z, hecke::hecke_image(&w.inverse()));
    Ok(z)
}

fn involution_from_nested(n: usize, d: &NestedData) -> Result<SignedInvolution> {
    let mut window = vec![0i32; n];
    let mut set = |i: i32, v: i32| {
        if i > 0 {
            window[(i - 1) as usize] = v;
        } else {
            window[(-i - 1) as usize] = -v;
        }
    };
    for &x in &d.nfix {
        set(x, x);
    }
    for x in d.nneg_b() {
        set(x, -x);
    }
    // A label (b, a) records z(a) = b.
    for (b, a) in d.ndes_b() {
        set(a, b);
        set(b, a);
    }
    SignedInvolution::new(SignedPermutation::from_window(window)?)
}

// ---------------------------------------------------------------------------
// Matchings
// ---------------------------------------------------------------------------

/// A matching on a finite set of signed integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    vertices: Vec<i32>,
    /// Each block `(lo, hi)` with `lo < hi`, sorted by `lo`.
    blocks: Vec<(i32, i32)>,
}

impl Matching {
    pub fn new(vertices: &[i32], blocks: &[(i32, i32)]) -> Result<Self> {
        let mut vs = vertices.to_vec();
        vs.sort();
        vs.dedup();
        let mut bs: Vec<(i32, i32)> = blocks.iter().map(|&(x, y)| (x.min(y), x.max(y))).collect();
        bs.sort();
        bs.dedup();
        let mut used = BTreeSet::new();
        for &(x, y) in &bs {
            if x == y {
                return Err(Error::InvalidMatching(format!(
                    "block {{{x},{y}}} is a loop"
                )));
            }
            for v in [x, y] {
                if vs.binary_search(&v).is_err() {
                    return Err(Error::InvalidMatching(format!("{v} is not a vertex")));
                }
                if !used.insert(v) {
                    return Err(Error::InvalidMatching(format!("{v} is in two blocks")));
                }
            }
        }
        Ok(Self {
            vertices: vs,
            blocks: bs,
        })
    }

    pub fn vertices(&self) -> &[i32] {
        &self.vertices
    }

    pub fn blocks(&self) -> &[(i32, i32)] {
        &self.blocks
    }

    pub fn is_perfect(&self) -> bool {
        2 * self.blocks.len() == self.vertices.len()
    }

    pub fn is_symmetric(&self) -> bool {
        self.vertices
            .iter()
            .all(|v| self.vertices.binary_search(&-v).is_ok())
            && self
                .blocks
                .iter()
                .all(|&(x, y)| self.blocks.binary_search(&(-y, -x)).is_ok())
    }

    pub fn is_noncrossing(&self) -> bool {
        self.blocks
            .iter()
            .tuple_combinations()
            .all(|(&(i, k), &(j, l))| !((i < j && j < k && k < l) || (j < i && i < l && l < k)))
    }

    /// Blocks `{i, -i}`.
    pub fn trivial_blocks(&self) -> usize {
        self.blocks.iter().filter(|&&(x, y)| x == -y).count()
    }

    /// Positive nontrivial blocks `(a, b)`, `0 < a < b`.
    pub fn positive_blocks(&self) -> Vec<(i32, i32)> {
        self.blocks.iter().filter(|b| b.0 > 0).copied().collect()
    }

    /// Points `a > 0` in trivial blocks.
    pub fn trivial_points(&self) -> Vec<i32> {
        self.blocks
            .iter()
            .filter(|&&(x, y)| x == -y)
            .map(|b| b.1)
            .collect()
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.blocks.iter().map(|(x, y)| format!("{{{x},{y}}}"));
        write!(f, "{}", parts.format(","))
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matching[{self}]")
    }
}

impl serde::Serialize for Matching {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let blocks: Vec<[i32; 2]> = self.blocks.iter().map(|&(x, y)| [x, y]).collect();
        blocks.serialize(s)
    }
}

fn signed_support(z: &SignedInvolution) -> Vec<i32> {
    let mut v: Vec<i32> = z.neg().iter().flat_map(|&a| [a, -a]).collect();
    v.sort();
    v
}

/// sh(w) on `±Neg(z)`: `{a,b}, {-a,-b}` for each nested descent `(a, -b)`
/// with `0 < a < b`, and `{e, -e}` for each `e ∈ NNeg(w)`.
pub fn shape(w: &SignedPermutation) -> Result<Matching> {
    let d = nested_data(w)?;
    Ok(shape_of(&d))
}

pub(crate) fn shape_of(d: &NestedData) -> Matching {
    let mut blocks: Vec<(i32, i32)> = d.nneg.iter().map(|&e| (-e, e)).collect();
    let mut vertices: Vec<i32> = d.nneg.iter().flat_map(|&e| [e, -e]).collect();
    for &(a, nb) in d.ndes.iter().filter(|l| NestedData::is_type_b_pair(l)) {
        let b = -nb;
        blocks.push((a, b));
        blocks.push((-b, -a));
        vertices.extend([a, b, -a, -b]);
    }
    Matching::new(&vertices, &blocks).expect("shape blocks are disjoint")
}

/// NCSP(z), optionally restricted to at most `max_trivial` trivial blocks.
pub fn ncsp(z: &SignedInvolution, max_trivial: Option<usize>) -> Vec<Matching> {
    ncsp_on(z.neg(), max_trivial)
}

/// Noncrossing symmetric perfect matchings on `±points` (points positive).
pub fn ncsp_on(points: &[i32], max_trivial: Option<usize>) -> Vec<Matching> {
    let mut vs: Vec<i32> = points.iter().flat_map(|&a| [a, -a]).collect();
    vs.sort();
    let mut out = Vec::new();
    let mut partner: HashMap<i32, i32> = HashMap::new();
    ncsp_rec(&vs, &mut partner, &mut Vec::new(), &mut out);
    let mut ms: Vec<Matching> = out
        .into_iter()
        .map(|b| Matching::new(&vs, &b).expect("valid by construction"))
        .filter(|m| max_trivial.is_none_or(|k| m.trivial_blocks() <= k))
        .collect();
    ms.sort();
    ms.dedup();
    ms
}

fn crosses(a: (i32, i32), b: (i32, i32)) -> bool {
    let (i, k) = (a.0.min(a.1), a.0.max(a.1));
    let (j, l) = (b.0.min(b.1), b.0.max(b.1));
    (i < j && j < k && k < l) || (j < i && i < l && l < k)
}

fn ncsp_rec(
    vs: &[i32],
    partner: &mut HashMap<i32, i32>,
    blocks: &mut Vec<(i32, i32)>,
    out: &mut Vec<Vec<(i32, i32)>>,
) {
    let Some(&v) = vs.iter().find(|v| !partner.contains_key(v)) else {
        out.push(blocks.clone());
        return;
    };
    let candidates: Vec<i32> = vs
        .iter()
        .copied()
        .filter(|&u| u > v && !partner.contains_key(&u))
        .collect();
    for u in candidates {
        let b = (v, u);
        let mirror = (-u, -v);
        let new: Vec<(i32, i32)> = if mirror == b {
            vec![b]
        } else {
            vec![b, mirror]
        };
        if new.len() == 2 && (partner.contains_key(&mirror.0) || partner.contains_key(&mirror.1)) {
            continue;
        }
        let all_blocks = blocks.iter().chain(new.iter());
        if new
            .iter()
            .any(|&nb| all_blocks.clone().any(|&ob| ob != nb && crosses(nb, ob)))
        {
            continue;
        }
        for &(x, y) in &new {
            partner.insert(x, y);
            partner.insert(y, x);
        }
        let mark = blocks.len();
        blocks.extend(new.iter().copied());
        ncsp_rec(vs, partner, blocks, out);
        blocks.truncate(mark);
        for &(x, y) in &new {
            partner.remove(&x);
            partner.remove(&y);
        }
    }
}

fn check_ncsp(z: &SignedInvolution, m: &Matching) -> Result<()> {
    if m.vertices() != signed_support(z).as_slice() {
        return Err(Error::InvalidMatching(format!(
            "{m} is not on the negated points of {z}"
        )));
    }
    if !(m.is_perfect() && m.is_symmetric() && m.is_noncrossing()) {
        return Err(Error::InvalidMatching(format!(
            "{m} is not a noncrossing symmetric perfect matching"
        )));
    }
    Ok(())
}

/// M_min: every negated point in a trivial block.
pub fn m_min(z: &SignedInvolution) -> Matching {
    let blocks: Vec<(i32, i32)> = z.neg().iter().map(|&a| (-a, a)).collect();
    Matching::new(&signed_support(z), &blocks).expect("trivial blocks")
}

/// M_max: pair consecutive negated points from the top; an odd one out at
/// the bottom stays trivial.
pub fn m_max(z: &SignedInvolution) -> Matching {
    let neg = z.neg();
    let mut blocks = Vec::new();
    let start = neg.len() % 2;
    if start == 1 {
        blocks.push((-neg[0], neg[0]));
    }
    for pair in neg[start..].chunks(2) {
        blocks.push((pair[0], pair[1]));
        blocks.push((-pair[1], -pair[0]));
    }
    Matching::new(&signed_support(z), &blocks).expect("consecutive blocks")
}

/// Cyc_B(z, M).
pub fn cyc_b_with(z: &SignedInvolution, m: &Matching) -> Vec<(i32, i32)> {
    let mut out: Vec<(i32, i32)> = z.pairs().to_vec();
    out.extend(m.positive_blocks().into_iter().map(|(a, b)| (-b, a)));
    out.extend(m.trivial_points().into_iter().map(|a| (-a, -a)));
    out.extend(z.fix().iter().map(|&a| (a, a)));
    out
}

fn flatten_swapped(pairs: &[(i32, i32)]) -> Word {
    let flat: Vec<i32> = pairs.iter().flat_map(|&(a, b)| [b, a]).collect();
    dedupe_first(&flat)
}

/// 0_B(z, M): `[[b_1 a_1 b_2 a_2 ⋯]]` with Cyc_B(z, M) sorted by first entry.
pub fn zero_b_with(z: &SignedInvolution, m: &Matching) -> Result<SignedPermutation> {
    check_ncsp(z, m)?;
    let mut cyc = cyc_b_with(z, m);
    cyc.sort();
    SignedPermutation::from_window(flatten_swapped(&cyc))
}

/// 1_B(z, M): the same with Cyc_B(z, M) sorted by second entry.
pub fn one_b_with(z: &SignedInvolution, m: &Matching) -> Result<SignedPermutation> {
    check_ncsp(z, m)?;
    let mut cyc = cyc_b_with(z, m);
    cyc.sort_by_key(|&(a, b)| (b, a));
    SignedPermutation::from_window(flatten_swapped(&cyc))
}

pub fn zero_b(z: &SignedInvolution) -> SignedPermutation {
    zero_b_with(z, &m_min(z)).expect("M_min is in NCSP(z)")
}

pub fn one_b(z: &SignedInvolution) -> SignedPermutation {
    one_b_with(z, &m_max(z)).expect("M_max is in NCSP(z)")
}

/// 0_A(z) and 1_A(z) for an involution of a finite set.
pub fn zero_one_a(z: &SetPermutation) -> Result<(SetPermutation, SetPermutation)> {
    if !z.is_involution() {
        return Err(Error::NotInvolution(z.to_string()));
    }
    let mut cyc = z.cyc_a();
    cyc.sort();
    let zero = SetPermutation::from_one_line(&flatten_swapped(&cyc))?;
    cyc.sort_by_key(|&(a, b)| (b, a));
    let one = SetPermutation::from_one_line(&flatten_swapped(&cyc))?;
    Ok((zero, one))
}

//! Simplicial complexes and nim played on them.
//!
//! A complex is stored as its antichain of maximal faces over at most 16
//! named vertices, faces being bitmasks. Simplicial nim puts stones on every
//! vertex; a move picks a non-empty face and removes a positive number of
//! stones from every vertex of that face. [`NimTable`] classifies every
//! stone vector inside a bounded box by a retrograde dynamic-programming
//! pass, which doubles as the P-set oracle for the fast combined-game engine.

use crate::game::Outcome;
use crate::Limits;
use thiserror::Error;

/// Bitmask face cap; masks are `u16`.
pub const MAX_VERTICES: usize = 16;

/// Per-vertex stone counts, in vertex order.
pub type StoneVector = Vec<u32>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimplicialError {
    #[error("vertex {0} is not covered by any face")]
    UncoveredVertex(String),
    #[error("a complex needs at least one maximal face")]
    EmptyFaceList,
    #[error("faces must be non-empty")]
    EmptyFace,
    #[error("face references unknown vertex {0}")]
    UnknownVertexInFace(String),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),
    #[error("{count} vertices exceed the supported maximum of {cap}")]
    TooManyVertices { count: usize, cap: usize },
    #[error("stone vector has length {actual}, expected {expected}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("stone vector lies outside the solved box")]
    OutsideBox,
    #[error("box would need {requested} cells, cap is {cap}")]
    SizeLimitExceeded { requested: u64, cap: u64 },
}

/// A non-empty set of vertices, as a bitmask with vertex `i` at bit `i`.
///
/// The derived `Ord` (numeric mask order) is the canonical face ordering
/// used for deterministic tie-breaking everywhere.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face(u16);

impl Face {
    pub fn from_bits(bits: u16) -> Face {
        Face(bits)
    }

    pub fn singleton(vertex: usize) -> Face {
        Face(1 << vertex)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, vertex: usize) -> bool {
        vertex < MAX_VERTICES && self.0 & (1 << vertex) != 0
    }

    pub fn is_subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    /// Vertex indices in ascending order.
    pub fn vertices(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..MAX_VERTICES).filter(move |v| bits & (1 << v) != 0)
    }
}

impl std::fmt::Debug for Face {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Face{{")?;
        for (k, v) in self.vertices().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A simplicial complex in canonical form: named vertices plus the antichain
/// of maximal faces, every vertex covered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    maximal: Vec<Face>,
}

impl SimplicialComplex {
    /// Canonicalizes a face list: drops faces absorbed by a superset,
    /// deduplicates, and checks that every declared vertex is covered.
    pub fn from_maximal_faces<S: AsRef<str>>(
        vertices: &[S],
        faces: &[Vec<S>],
    ) -> Result<SimplicialComplex, SimplicialError> {
        if vertices.len() > MAX_VERTICES {
            return Err(SimplicialError::TooManyVertices {
                count: vertices.len(),
                cap: MAX_VERTICES,
            });
        }
        let names: Vec<String> = vertices.iter().map(|s| s.as_ref().to_owned()).collect();
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(SimplicialError::DuplicateVertex(name.clone()));
            }
        }
        if faces.is_empty() {
            return Err(SimplicialError::EmptyFaceList);
        }

        let mut masks: Vec<Face> = Vec::new();
        for face in faces {
            if face.is_empty() {
                return Err(SimplicialError::EmptyFace);
            }
            let mut bits: u16 = 0;
            for v in face {
                let idx = names
                    .iter()
                    .position(|n| n == v.as_ref())
                    .ok_or_else(|| SimplicialError::UnknownVertexInFace(v.as_ref().to_owned()))?;
                bits |= 1 << idx;
            }
            masks.push(Face(bits));
        }

        // antichain: keep only faces not contained in another
        let mut maximal: Vec<Face> = Vec::new();
        for &f in &masks {
            if masks
                .iter()
                .any(|&g| f != g && f.is_subset_of(g) && !g.is_subset_of(f))
            {
                continue;
            }
            if !maximal.contains(&f) {
                maximal.push(f);
            }
        }
        maximal.sort_unstable();

        let covered = maximal.iter().fold(0u16, |acc, f| acc | f.bits());
        for (i, name) in names.iter().enumerate() {
            if covered & (1 << i) == 0 {
                return Err(SimplicialError::UncoveredVertex(name.clone()));
            }
        }

        Ok(SimplicialComplex {
            vertices: names,
            maximal,
        })
    }

    /// The complex whose maximal faces are exactly the singletons.
    pub fn discrete<S: AsRef<str>>(vertices: &[S]) -> Result<SimplicialComplex, SimplicialError> {
        let faces: Vec<Vec<String>> = vertices
            .iter()
            .map(|v| vec![v.as_ref().to_owned()])
            .collect();
        let names: Vec<String> = vertices.iter().map(|s| s.as_ref().to_owned()).collect();
        SimplicialComplex::from_maximal_faces(&names, &faces)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|n| n == name)
    }

    /// Maximal faces, ascending in canonical order.
    pub fn maximal_faces(&self) -> &[Face] {
        &self.maximal
    }

    /// Every non-empty face (all non-empty subsets of maximal faces),
    /// deduplicated, ascending in canonical order.
    pub fn faces(&self) -> Vec<Face> {
        let mut seen = vec![false; 1 << self.vertices.len()];
        let mut out: Vec<Face> = Vec::new();
        for &m in &self.maximal {
            // descending submask enumeration of the non-empty subsets of m
            let m = m.bits();
            let mut s = m;
            while s != 0 {
                if !seen[s as usize] {
                    seen[s as usize] = true;
                    out.push(Face(s));
                }
                s = (s - 1) & m;
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_face(&self, f: Face) -> bool {
        !f.is_empty() && self.maximal.iter().any(|&m| f.is_subset_of(m))
    }

    pub fn is_discrete(&self) -> bool {
        self.maximal.len() == self.vertices.len() && self.maximal.iter().all(|f| f.len() == 1)
    }

    /// Builds a face mask from vertex names; the result may or may not be a
    /// face of the complex (check with [`SimplicialComplex::is_face`]).
    pub fn face_from_names<S: AsRef<str>>(&self, names: &[S]) -> Result<Face, SimplicialError> {
        let mut bits: u16 = 0;
        for v in names {
            let idx = self
                .vertex_index(v.as_ref())
                .ok_or_else(|| SimplicialError::UnknownVertexInFace(v.as_ref().to_owned()))?;
            bits |= 1 << idx;
        }
        Ok(Face(bits))
    }

    pub fn format_face(&self, f: Face) -> String {
        let inner: Vec<&str> = f.vertices().map(|v| self.vertices[v].as_str()).collect();
        format!("{{{}}}", inner.join(","))
    }

    fn check_len(&self, s: &[u32]) -> Result<(), SimplicialError> {
        if s.len() != self.vertices.len() {
            return Err(SimplicialError::LengthMismatch {
                expected: self.vertices.len(),
                actual: s.len(),
            });
        }
        Ok(())
    }
}

/// All nim moves from `s`: for each usable non-empty face, every strict
/// decrease on exactly that face's vertices. A face is usable only if all
/// its vertices carry at least one stone. Sub-faces matter here; maximal
/// faces alone would miss moves. Result is sorted lexicographically.
pub fn nim_moves(
    complex: &SimplicialComplex,
    s: &[u32],
) -> Result<Vec<StoneVector>, SimplicialError> {
    complex.check_len(s)?;
    let mut out: Vec<StoneVector> = Vec::new();
    for face in complex.faces() {
        if face.vertices().any(|v| s[v] == 0) {
            continue;
        }
        let fvs: Vec<usize> = face.vertices().collect();
        let mut target: Vec<u32> = vec![0; fvs.len()];
        loop {
            let mut next = s.to_vec();
            for (k, &v) in fvs.iter().enumerate() {
                next[v] = target[k];
            }
            out.push(next);
            // odometer over the face coordinates
            let mut done = true;
            for k in (0..fvs.len()).rev() {
                if target[k] + 1 < s[fvs[k]] {
                    target[k] += 1;
                    done = false;
                    break;
                }
                target[k] = 0;
            }
            if done {
                break;
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Outcome of a single stone vector under ordinary multi-heap nim:
/// P exactly when the bitwise XOR of the entries is zero.
pub fn bouton_outcome(s: &[u32]) -> Outcome {
    if s.iter().fold(0u32, |acc, &x| acc ^ x) == 0 {
        Outcome::P
    } else {
        Outcome::N
    }
}

/// Dense retrograde table of nim outcomes over the box of vectors
/// componentwise at most `bound`.
#[derive(Debug, Clone)]
pub struct NimTable {
    complex: SimplicialComplex,
    bound: StoneVector,
    weights: Vec<u64>,
    outcomes: Vec<Outcome>,
}

impl NimTable {
    /// Solves the whole box in one lexicographic pass; every nim move
    /// strictly lowers the mixed-radix cell index, so the order is valid.
    pub fn solve(
        complex: &SimplicialComplex,
        bound: &[u32],
        limits: &Limits,
    ) -> Result<NimTable, SimplicialError> {
        complex.check_len(bound)?;
        let n = bound.len();
        let mut cells: u64 = 1;
        for &b in bound {
            cells = cells.saturating_mul(b as u64 + 1);
        }
        if cells > limits.max_cells {
            return Err(SimplicialError::SizeLimitExceeded {
                requested: cells,
                cap: limits.max_cells,
            });
        }

        let mut weights = vec![1u64; n];
        for i in (0..n.saturating_sub(1)).rev() {
            weights[i] = weights[i + 1] * (bound[i + 1] as u64 + 1);
        }

        let faces: Vec<Vec<usize>> = complex
            .faces()
            .into_iter()
            .map(|f| f.vertices().collect())
            .collect();

        let mut outcomes = vec![Outcome::P; cells as usize];
        let mut v: StoneVector = vec![0; n];
        for id in 0..cells {
            let mut is_n = false;
            'faces: for fvs in &faces {
                if fvs.iter().any(|&x| v[x] == 0) {
                    continue;
                }
                // walk all strict decreases on this face
                let mut target: Vec<u32> = vec![0; fvs.len()];
                loop {
                    let mut child = id;
                    for (k, &x) in fvs.iter().enumerate() {
                        child -= (v[x] - target[k]) as u64 * weights[x];
                    }
                    if outcomes[child as usize] == Outcome::P {
                        is_n = true;
                        break 'faces;
                    }
                    let mut done = true;
                    for k in (0..fvs.len()).rev() {
                        if target[k] + 1 < v[fvs[k]] {
                            target[k] += 1;
                            done = false;
                            break;
                        }
                        target[k] = 0;
                    }
                    if done {
                        break;
                    }
                }
            }
            if is_n {
                outcomes[id as usize] = Outcome::N;
            }
            for i in (0..n).rev() {
                if v[i] < bound[i] {
                    v[i] += 1;
                    break;
                }
                v[i] = 0;
            }
        }

        Ok(NimTable {
            complex: complex.clone(),
            bound: bound.to_vec(),
            weights,
            outcomes,
        })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn bound(&self) -> &[u32] {
        &self.bound
    }

    fn cell_id(&self, s: &[u32]) -> Result<u64, SimplicialError> {
        self.complex.check_len(s)?;
        let mut id = 0u64;
        for (i, (&x, &b)) in s.iter().zip(&self.bound).enumerate() {
            if x > b {
                return Err(SimplicialError::OutsideBox);
            }
            id += x as u64 * self.weights[i];
        }
        Ok(id)
    }

    pub fn outcome(&self, s: &[u32]) -> Result<Outcome, SimplicialError> {
        Ok(self.outcomes[self.cell_id(s)? as usize])
    }

    /// All P-positions in the box, in lexicographic order.
    pub fn pset(&self) -> Vec<StoneVector> {
        let n = self.bound.len();
        let mut out = Vec::new();
        let mut v: StoneVector = vec![0; n];
        for id in 0..self.outcomes.len() {
            if self.outcomes[id] == Outcome::P {
                out.push(v.clone());
            }
            for i in (0..n).rev() {
                if v[i] < self.bound[i] {
                    v[i] += 1;
                    break;
                }
                v[i] = 0;
            }
        }
        out
    }

    /// A nim move from `s` into the P-set: the chosen face strictly
    /// decreases, everything else stays. Returns `None` when `s` itself is a
    /// P-position. Deterministic: first face in canonical order that works,
    /// then the lexicographically smallest target.
    pub fn move_to_pset(
        &self,
        s: &[u32],
    ) -> Result<Option<(Face, StoneVector)>, SimplicialError> {
        if self.outcome(s)? == Outcome::P {
            return Ok(None);
        }
        for face in self.complex.faces() {
            if face.vertices().any(|v| s[v] == 0) {
                continue;
            }
            let fvs: Vec<usize> = face.vertices().collect();
            let mut target: Vec<u32> = vec![0; fvs.len()];
            loop {
                let mut cand = s.to_vec();
                for (k, &v) in fvs.iter().enumerate() {
                    cand[v] = target[k];
                }
                if self.outcome(&cand)? == Outcome::P {
                    return Ok(Some((face, cand)));
                }
                let mut done = true;
                for k in (0..fvs.len()).rev() {
                    if target[k] + 1 < s[fvs[k]] {
                        target[k] += 1;
                        done = false;
                        break;
                    }
                    target[k] = 0;
                }
                if done {
                    break;
                }
            }
        }
        unreachable!("an N-position always has a nim move into the P-set");
    }
}

/// One-shot outcome of simplicial nim at `s` (builds the box up to `s`).
pub fn nim_outcome(
    complex: &SimplicialComplex,
    s: &[u32],
    limits: &Limits,
) -> Result<Outcome, SimplicialError> {
    NimTable::solve(complex, s, limits)?.outcome(s)
}

/// All P-positions componentwise at most `bound`, in lexicographic order.
pub fn nim_pset(
    complex: &SimplicialComplex,
    bound: &[u32],
    limits: &Limits,
) -> Result<Vec<StoneVector>, SimplicialError> {
    Ok(NimTable::solve(complex, bound, limits)?.pset())
}

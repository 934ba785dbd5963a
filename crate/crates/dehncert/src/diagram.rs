//! Knot diagrams as combinatorial maps.
//!
//! A diagram with `n` crossings is stored as `4n` darts, one per corner of
//! each crossing. Dart `4c + k` is corner `k` of crossing `c`, with corners
//! numbered counterclockwise so that corner 0 is the incoming under-strand
//! (the PD convention). Three permutations generate everything:
//!
//! - [`sigma`] rotates a dart counterclockwise to the next corner of the
//!   same crossing,
//! - [`through`] jumps to the antipodal corner, following the strand
//!   through the crossing,
//! - [`Diagram::alpha`] carries a dart to the far end of its edge.
//!
//! Faces are the orbits of `sigma . alpha`, strands the orbits of
//! `alpha . through`. The Euler characteristic `V - E + F` of a diagram
//! that embeds in the sphere is 2, and the constructors reject anything
//! else, so every `Diagram` in circulation is planar.
//!
//! Input formats: PD codes ([`Diagram::from_pd`]), signed Gauss codes
//! ([`Diagram::from_gauss`]) and Dowker-Thistlethwaite codes
//! ([`Diagram::from_dt`]). The latter two determine the embedding only up
//! to reflection of the sphere, so [`Diagram::is_isomorphic_to`] compares
//! diagrams up to that reflection as well.

use thiserror::Error;

/// A dart identifier: `4 * crossing + corner`.
pub type Dart = usize;

/// One PD tuple: the four edge labels at a crossing, counterclockwise
/// from the incoming under-strand.
pub type PdTuple = [usize; 4];

/// Rejections shared by all diagram constructors.
#[derive(Debug, Error)]
pub enum DiagramError {
    /// The code is syntactically broken: bad label multiplicities,
    /// non-consecutive strand labels, an empty code, and so on.
    #[error("malformed code: {0}")]
    MalformedCode(String),

    /// The code is well-formed but admits no embedding in the sphere.
    #[error("not realizable in the sphere: {0}")]
    NonRealizable(String),

    /// The code describes a link, not a knot.
    #[error("expected a knot, found a link with {components} components")]
    MultiComponent { components: usize },
}

/// Handedness of a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    #[must_use]
    pub const fn flipped(self) -> Self {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// Why a diagram fails to be prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NonPrimeWitness {
    /// A crossing with the same face on two opposite corners; it can be
    /// removed by untwisting a kink.
    Nugatory { crossing: usize },
    /// Two edge labels whose removal disconnects the underlying 4-valent
    /// graph, exhibiting the diagram as a connected sum.
    EdgeCut { edges: (usize, usize) },
}

/// Counterclockwise rotation to the next corner of the same crossing.
#[inline]
#[must_use]
pub const fn sigma(d: Dart) -> Dart {
    (d & !3) | (d.wrapping_add(1) & 3)
}

/// Clockwise rotation, the inverse of [`sigma`].
#[inline]
#[must_use]
pub const fn sigma_inv(d: Dart) -> Dart {
    (d & !3) | (d.wrapping_add(3) & 3)
}

/// The antipodal corner: where the strand entering at `d` leaves the
/// crossing.
#[inline]
#[must_use]
pub const fn through(d: Dart) -> Dart {
    d ^ 2
}

/// The crossing a dart belongs to.
#[inline]
#[must_use]
pub const fn crossing_of(d: Dart) -> usize {
    d >> 2
}

/// The corner (0..4) a dart occupies at its crossing.
#[inline]
#[must_use]
pub const fn corner_of(d: Dart) -> usize {
    d & 3
}

/// A knot diagram, validated to be a planar single-component projection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    tuples: Vec<PdTuple>,
    alpha: Vec<Dart>,
}

impl Diagram {
    /// The zero-crossing diagram of the unknot.
    #[must_use]
    pub fn unknot() -> Self {
        Diagram { tuples: Vec::new(), alpha: Vec::new() }
    }

    /// Parses a PD code: one tuple of edge labels per crossing, listed
    /// counterclockwise from the incoming under-strand, with edges
    /// numbered `1..=2n` along the knot.
    pub fn from_pd(code: &[PdTuple]) -> Result<Self, DiagramError> {
        let n = code.len();
        if n == 0 {
            return Err(DiagramError::MalformedCode(
                "empty PD code (use Diagram::unknot for the zero-crossing diagram)".into(),
            ));
        }
        let m = 2 * n;
        let succ = |e: usize| e % m + 1;

        let mut slots: Vec<Vec<Dart>> = vec![Vec::new(); m + 1];
        for (ci, tuple) in code.iter().enumerate() {
            for (k, &e) in tuple.iter().enumerate() {
                if e == 0 || e > m {
                    return Err(DiagramError::MalformedCode(format!(
                        "edge label {e} out of range 1..={m}"
                    )));
                }
                slots[e].push(4 * ci + k);
            }
        }
        for (e, occ) in slots.iter().enumerate().skip(1) {
            if occ.len() != 2 {
                return Err(DiagramError::MalformedCode(format!(
                    "edge label {e} occurs {} times, expected 2",
                    occ.len()
                )));
            }
        }
        for (ci, &[a, b, c, d]) in code.iter().enumerate() {
            if c != succ(a) {
                return Err(DiagramError::MalformedCode(format!(
                    "crossing {ci}: under-strand labels {a}, {c} are not consecutive"
                )));
            }
            if d != succ(b) && b != succ(d) {
                return Err(DiagramError::MalformedCode(format!(
                    "crossing {ci}: over-strand labels {b}, {d} are not consecutive"
                )));
            }
        }

        let mut alpha = vec![0; 4 * n];
        for occ in slots.iter().skip(1) {
            alpha[occ[0]] = occ[1];
            alpha[occ[1]] = occ[0];
        }

        let diagram = Diagram { tuples: code.to_vec(), alpha };
        let chi = n as i64 - m as i64 + diagram.faces().len() as i64;
        if chi != 2 {
            return Err(DiagramError::NonRealizable(format!(
                "Euler characteristic {chi}, expected 2"
            )));
        }
        let components = diagram.components();
        if components != 1 {
            return Err(DiagramError::MultiComponent { components });
        }
        Ok(diagram)
    }

    /// Realizes a signed Gauss code: `+i` is an over-pass and `-i` an
    /// under-pass of crossing `i`, crossings labeled `1..=n`, each visited
    /// exactly once in each role.
    ///
    /// The embedding is found by searching the per-crossing handedness
    /// choices for one with Euler characteristic 2. A code whose shadow
    /// embeds several ways yields the first choice vector in
    /// lexicographic order, and the overall reflection is pinned by fixing
    /// the handedness of crossing 1, so the result is deterministic.
    pub fn from_gauss(code: &[i64]) -> Result<Self, DiagramError> {
        if code.is_empty() || code.len() % 2 != 0 {
            return Err(DiagramError::MalformedCode(format!(
                "Gauss code length {} is not a positive even number",
                code.len()
            )));
        }
        let n = code.len() / 2;
        if n > GAUSS_SEARCH_LIMIT {
            return Err(DiagramError::MalformedCode(format!(
                "Gauss code has {n} crossings, realization search supports at most \
                 {GAUSS_SEARCH_LIMIT}"
            )));
        }

        let mut over_pos = vec![usize::MAX; n + 1];
        let mut under_pos = vec![usize::MAX; n + 1];
        for (pos, &v) in code.iter().enumerate() {
            let i = v.unsigned_abs() as usize;
            if v == 0 || i > n {
                return Err(DiagramError::MalformedCode(format!(
                    "crossing label {v} out of range for {n} crossings"
                )));
            }
            let slot = if v > 0 { &mut over_pos[i] } else { &mut under_pos[i] };
            if *slot != usize::MAX {
                let role = if v > 0 { "over" } else { "under" };
                return Err(DiagramError::MalformedCode(format!(
                    "crossing {i} passes {role} twice"
                )));
            }
            *slot = pos;
        }

        let m = 2 * n;
        let edge_in = |p: usize| (p + m - 1) % m + 1;
        let edge_out = |p: usize| p + 1;

        for bits in 0u64..1u64 << (n - 1) {
            let mut tuples = Vec::with_capacity(n);
            for i in 1..=n {
                let (pu, po) = (under_pos[i], over_pos[i]);
                let over_in_first = i == 1 || bits >> (i - 2) & 1 == 0;
                tuples.push(if over_in_first {
                    [edge_in(pu), edge_in(po), edge_out(pu), edge_out(po)]
                } else {
                    [edge_in(pu), edge_out(po), edge_out(pu), edge_in(po)]
                });
            }
            match Self::from_pd(&tuples) {
                Ok(diagram) => return Ok(diagram),
                Err(DiagramError::NonRealizable(_)) => continue,
                Err(other) => return Err(other),
            }
        }
        Err(DiagramError::NonRealizable(
            "no choice of crossing handedness embeds this Gauss code in the sphere".into(),
        ))
    }

    /// Realizes a Dowker-Thistlethwaite code: entry `k` pairs odd position
    /// `2k-1` with even position `|a_k|`, and `a_k > 0` means the
    /// even-numbered pass is the over-pass.
    pub fn from_dt(code: &[i64]) -> Result<Self, DiagramError> {
        let n = code.len();
        if n == 0 {
            return Err(DiagramError::MalformedCode("empty DT code".into()));
        }
        let mut seen = vec![false; n + 1];
        for &a in code {
            let v = a.unsigned_abs() as usize;
            if a == 0 || v % 2 != 0 || v > 2 * n {
                return Err(DiagramError::MalformedCode(format!(
                    "DT entry {a} is not an even number with magnitude at most {}",
                    2 * n
                )));
            }
            if std::mem::replace(&mut seen[v / 2], true) {
                return Err(DiagramError::MalformedCode(format!(
                    "even position {v} is paired twice"
                )));
            }
        }

        let mut gauss = vec![0i64; 2 * n];
        for (k0, &a) in code.iter().enumerate() {
            let k = k0 as i64 + 1;
            let odd = 2 * k0;
            let even = a.unsigned_abs() as usize - 1;
            if a > 0 {
                gauss[even] = k;
                gauss[odd] = -k;
            } else {
                gauss[even] = -k;
                gauss[odd] = k;
            }
        }
        Self::from_gauss(&gauss)
    }

    /// The standard `p`-crossing diagram of the closed 2-strand braid:
    /// crossing `k` takes its first pass on edges `k-1 -> k` and its
    /// second on `p+k-1 -> p+k`, passing under on odd-numbered visits.
    /// Odd `p` gives the (2, p) torus knot, `p = 1` the one-kink unknot;
    /// even `p` is a 2-component link and is rejected.
    pub fn two_strand_torus(p: usize) -> Result<Self, DiagramError> {
        if p == 0 {
            return Err(DiagramError::MalformedCode(
                "a closed 2-strand braid needs at least one crossing".into(),
            ));
        }
        if p % 2 == 0 {
            return Err(DiagramError::MultiComponent { components: 2 });
        }
        let m = 2 * p;
        let code: Vec<PdTuple> = (1..=p)
            .map(|k| {
                let first_in = if k == 1 { m } else { k - 1 };
                let first_out = k;
                let second_in = p + k - 1;
                let second_out = p + k;
                if k % 2 == 1 {
                    [first_in, second_in, first_out, second_out]
                } else {
                    [second_in, first_in, second_out, first_out]
                }
            })
            .collect();
        Self::from_pd(&code)
    }

    // ------------------------------------------------------------------
    // Combinatorial map
    // ------------------------------------------------------------------

    #[must_use]
    pub fn crossing_number(&self) -> usize {
        self.tuples.len()
    }

    #[must_use]
    pub fn dart_count(&self) -> usize {
        self.alpha.len()
    }

    /// The PD tuples backing this diagram.
    #[must_use]
    pub fn pd(&self) -> &[PdTuple] {
        &self.tuples
    }

    /// The far end of the edge containing `d`.
    #[inline]
    #[must_use]
    pub fn alpha(&self, d: Dart) -> Dart {
        self.alpha[d]
    }

    /// The edge label at a dart.
    #[inline]
    #[must_use]
    pub fn label_of(&self, d: Dart) -> usize {
        self.tuples[d >> 2][d & 3]
    }

    /// Next dart counterclockwise around the face to the left of `d`.
    #[inline]
    #[must_use]
    pub fn face_next(&self, d: Dart) -> Dart {
        sigma(self.alpha[d])
    }

    /// Next entry dart along the strand through `d`.
    #[inline]
    #[must_use]
    pub fn strand_next(&self, d: Dart) -> Dart {
        self.alpha[through(d)]
    }

    /// All faces, each as its cycle of darts. The unknot has two faces but
    /// no darts, so it yields no orbits here; use [`Diagram::face_count`]
    /// where only the count matters.
    #[must_use]
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let mut seen = vec![false; self.alpha.len()];
        let mut faces = Vec::new();
        for start in 0..self.alpha.len() {
            if seen[start] {
                continue;
            }
            let mut face = Vec::new();
            let mut d = start;
            loop {
                seen[d] = true;
                face.push(d);
                d = self.face_next(d);
                if d == start {
                    break;
                }
            }
            faces.push(face);
        }
        faces
    }

    #[must_use]
    pub fn face_count(&self) -> usize {
        if self.tuples.is_empty() {
            2
        } else {
            self.faces().len()
        }
    }

    /// Face sizes in ascending order.
    #[must_use]
    pub fn face_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.faces().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    }

    fn components(&self) -> usize {
        if self.alpha.is_empty() {
            return 1;
        }
        let mut seen = vec![false; self.alpha.len()];
        let mut orbits = 0;
        for start in 0..self.alpha.len() {
            if seen[start] {
                continue;
            }
            orbits += 1;
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                d = self.strand_next(d);
            }
        }
        orbits / 2
    }

    // ------------------------------------------------------------------
    // Diagram predicates
    // ------------------------------------------------------------------

    /// Whether the strand alternates under, over, under, ... along the
    /// knot. Corner parity encodes the role (even corners under, odd
    /// corners over), so this is a single pass over the darts.
    #[must_use]
    pub fn is_alternating(&self) -> bool {
        (0..self.alpha.len()).all(|d| (d ^ self.strand_next(d)) & 1 == 1)
    }

    /// Signs of the crossings, in crossing order.
    #[must_use]
    pub fn signs(&self) -> Vec<Sign> {
        let m = self.alpha.len() / 2;
        let succ = |e: usize| e % m + 1;
        self.tuples
            .iter()
            .map(|&[_, b, _, d]| if d == succ(b) { Sign::Positive } else { Sign::Negative })
            .collect()
    }

    #[must_use]
    pub fn writhe(&self) -> i64 {
        self.signs()
            .iter()
            .map(|s| if *s == Sign::Positive { 1 } else { -1 })
            .sum()
    }

    /// `None` when the diagram is prime (reduced and not a connected
    /// sum), otherwise a witness for the failure.
    #[must_use]
    pub fn primality(&self) -> Option<NonPrimeWitness> {
        if self.tuples.is_empty() {
            return None;
        }

        let faces = self.faces();
        let mut face_id = vec![usize::MAX; self.alpha.len()];
        for (f, face) in faces.iter().enumerate() {
            for &d in face {
                face_id[d] = f;
            }
        }
        for c in 0..self.tuples.len() {
            if face_id[4 * c] == face_id[4 * c + 2] || face_id[4 * c + 1] == face_id[4 * c + 3] {
                return Some(NonPrimeWitness::Nugatory { crossing: c });
            }
        }

        let m = self.alpha.len() / 2;
        let mut ends = vec![(0usize, 0usize); m + 1];
        for (e, end) in ends.iter_mut().enumerate().skip(1) {
            let d = self.dart_with_label(e);
            *end = (crossing_of(d), crossing_of(self.alpha[d]));
        }
        for e in 1..=m {
            if ends[e].0 == ends[e].1 {
                continue;
            }
            for f in e + 1..=m {
                if ends[f].0 == ends[f].1 {
                    continue;
                }
                if !self.connected_without(&ends, e, f) {
                    return Some(NonPrimeWitness::EdgeCut { edges: (e, f) });
                }
            }
        }
        None
    }

    #[must_use]
    pub fn is_prime(&self) -> bool {
        self.primality().is_none()
    }

    /// Whether the diagram has no nugatory crossing.
    #[must_use]
    pub fn is_reduced(&self) -> bool {
        !matches!(self.primality(), Some(NonPrimeWitness::Nugatory { .. }))
    }

    fn dart_with_label(&self, e: usize) -> Dart {
        (0..self.alpha.len())
            .find(|&d| self.label_of(d) == e)
            .expect("every label in 1..=2n occurs in a validated diagram")
    }

    fn connected_without(&self, ends: &[(usize, usize)], e: usize, f: usize) -> bool {
        let n = self.tuples.len();
        let mut adj = vec![Vec::new(); n];
        for (lab, &(x, y)) in ends.iter().enumerate().skip(1) {
            if lab != e && lab != f {
                adj[x].push(y);
                adj[y].push(x);
            }
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == n
    }

    // ------------------------------------------------------------------
    // Transforms
    // ------------------------------------------------------------------

    /// The mirror image: every crossing switched, embedding unchanged.
    /// Each tuple is rotated to start at what was the incoming over-strand.
    #[must_use]
    pub fn mirror(&self) -> Self {
        if self.tuples.is_empty() {
            return self.clone();
        }
        let signs = self.signs();
        let code: Vec<PdTuple> = self
            .tuples
            .iter()
            .zip(&signs)
            .map(|(&[a, b, c, d], sign)| match sign {
                Sign::Positive => [b, c, d, a],
                Sign::Negative => [d, a, b, c],
            })
            .collect();
        Self::from_pd(&code).expect("mirror of a valid diagram is valid")
    }

    /// The diagram reflected in the plane: rotation reversed at every
    /// crossing, over/under unchanged.
    #[must_use]
    pub fn reflect(&self) -> Self {
        if self.tuples.is_empty() {
            return self.clone();
        }
        let code: Vec<PdTuple> = self.tuples.iter().map(|&[a, b, c, d]| [a, d, c, b]).collect();
        Self::from_pd(&code).expect("reflection of a valid diagram is valid")
    }

    /// Renumbers the edges: the traversal basepoint moves by `offset`
    /// edges, and `reverse` flips the traversal direction.
    #[must_use]
    pub fn relabel(&self, offset: usize, reverse: bool) -> Self {
        if self.tuples.is_empty() {
            return self.clone();
        }
        let m = self.alpha.len() / 2;
        let new = |e: usize| {
            if reverse {
                (2 * m - e + offset) % m + 1
            } else {
                (e - 1 + offset) % m + 1
            }
        };
        let code: Vec<PdTuple> = self
            .tuples
            .iter()
            .map(|&[a, b, c, d]| {
                if reverse {
                    [new(c), new(d), new(a), new(b)]
                } else {
                    [new(a), new(b), new(c), new(d)]
                }
            })
            .collect();
        Self::from_pd(&code).expect("relabeling preserves validity")
    }

    // ------------------------------------------------------------------
    // Serialization and isomorphism
    // ------------------------------------------------------------------

    /// Emits a PD code for this diagram, edges renumbered along the
    /// traversal starting at dart 0. Parsing it back gives an isomorphic
    /// diagram.
    #[must_use]
    pub fn serialize_pd(&self) -> Vec<PdTuple> {
        if self.tuples.is_empty() {
            return Vec::new();
        }
        self.serialize_from(0)
    }

    fn serialize_from(&self, start: Dart) -> Vec<PdTuple> {
        let n = self.tuples.len();
        let m = 2 * n;
        let mut new_label = vec![0usize; m + 1];
        let mut under_entry = vec![usize::MAX; n];
        let mut visited = vec![false; n];
        let mut order = Vec::with_capacity(n);

        let mut d = start;
        for step in 0..m {
            let c = crossing_of(d);
            if !std::mem::replace(&mut visited[c], true) {
                order.push(c);
            }
            if d & 1 == 0 {
                under_entry[c] = d;
            }
            let out = through(d);
            new_label[self.label_of(out)] = step + 1;
            d = self.alpha[out];
        }

        order
            .iter()
            .map(|&c| {
                let u = under_entry[c];
                [
                    new_label[self.label_of(u)],
                    new_label[self.label_of(sigma(u))],
                    new_label[self.label_of(through(u))],
                    new_label[self.label_of(sigma(through(u)))],
                ]
            })
            .collect()
    }

    /// A canonical PD code: the lexicographically least serialization over
    /// all starting darts of the diagram and of its reflection. Two
    /// diagrams are isomorphic as decorated maps on the unoriented sphere
    /// exactly when their canonical codes agree.
    #[must_use]
    pub fn canonical_pd(&self) -> Vec<PdTuple> {
        if self.tuples.is_empty() {
            return Vec::new();
        }
        let mut best: Option<Vec<PdTuple>> = None;
        for variant in [self.clone(), self.reflect()] {
            for start in 0..variant.alpha.len() {
                let code = variant.serialize_from(start);
                if best.as_ref().map_or(true, |b| code < *b) {
                    best = Some(code);
                }
            }
        }
        best.expect("nonempty diagram has at least one serialization")
    }

    /// Isomorphism of decorated maps on the unoriented sphere: a
    /// relabeling, possibly composed with a reflection. Over/under data
    /// must match on the nose.
    #[must_use]
    pub fn is_isomorphic_to(&self, other: &Self) -> bool {
        self.canonical_pd() == other.canonical_pd()
    }
}

const GAUSS_SEARCH_LIMIT: usize = 20;

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const TREFOIL: [PdTuple; 3] = [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]];
    pub(crate) const FIGURE_EIGHT: [PdTuple; 4] =
        [[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]];
    const SQUARE_SUM: [PdTuple; 6] = [
        [1, 4, 2, 5],
        [3, 12, 4, 1],
        [5, 2, 6, 3],
        [9, 7, 10, 6],
        [11, 9, 12, 8],
        [7, 11, 8, 10],
    ];

    #[test]
    fn trefoil_face_structure() {
        let d = Diagram::from_pd(&TREFOIL).unwrap();
        assert_eq!(d.crossing_number(), 3);
        assert_eq!(d.face_count(), 5);
        assert_eq!(d.face_sizes(), vec![2, 2, 2, 3, 3]);
        assert!(d.is_alternating());
        assert!(d.is_prime());
        assert!(d.is_reduced());
        assert_eq!(d.writhe(), 3);
    }

    #[test]
    fn figure_eight_face_structure() {
        let d = Diagram::from_pd(&FIGURE_EIGHT).unwrap();
        assert_eq!(d.face_count(), 6);
        assert!(d.is_alternating());
        assert!(d.is_prime());
        assert_eq!(d.writhe(), 0);
        let signs = d.signs();
        let positives = signs.iter().filter(|s| **s == Sign::Positive).count();
        assert_eq!(positives, 2);
    }

    #[test]
    fn empty_pd_is_malformed() {
        assert!(matches!(Diagram::from_pd(&[]), Err(DiagramError::MalformedCode(_))));
    }

    #[test]
    fn kink_is_nugatory() {
        let d = Diagram::from_pd(&[[1, 1, 2, 2]]).unwrap();
        assert_eq!(d.face_sizes(), vec![1, 1, 2]);
        assert!(d.is_alternating());
        assert!(!d.is_reduced());
        assert_eq!(d.primality(), Some(NonPrimeWitness::Nugatory { crossing: 0 }));
    }

    #[test]
    fn connected_sum_has_edge_cut() {
        let d = Diagram::from_pd(&SQUARE_SUM).unwrap();
        assert!(d.is_alternating());
        assert!(d.is_reduced());
        assert_eq!(d.primality(), Some(NonPrimeWitness::EdgeCut { edges: (6, 12) }));
    }

    #[test]
    fn hopf_link_is_rejected() {
        let err = Diagram::from_pd(&[[1, 3, 2, 4], [3, 1, 4, 2]]).unwrap_err();
        assert!(matches!(err, DiagramError::MultiComponent { components: 2 }));
    }

    #[test]
    fn virtual_trefoil_gauss_code_is_not_realizable() {
        assert!(matches!(
            Diagram::from_gauss(&[1, 2, -1, -2]),
            Err(DiagramError::NonRealizable(_))
        ));
    }

    #[test]
    fn dt_trefoil_matches_pd_trefoil() {
        let from_dt = Diagram::from_dt(&[4, 6, 2]).unwrap();
        let from_pd = Diagram::from_pd(&TREFOIL).unwrap();
        assert!(from_dt.is_isomorphic_to(&from_pd));
    }

    #[test]
    fn trefoil_gauss_code_realizes() {
        let d = Diagram::from_gauss(&[-1, 3, -2, 1, -3, 2]).unwrap();
        assert!(d.is_alternating());
        assert!(d.is_isomorphic_to(&Diagram::from_pd(&TREFOIL).unwrap()));
    }

    #[test]
    fn two_strand_torus_family() {
        let trefoil = Diagram::two_strand_torus(3).unwrap();
        assert!(trefoil.is_isomorphic_to(&Diagram::from_pd(&TREFOIL).unwrap()));
        let kink = Diagram::two_strand_torus(1).unwrap();
        assert_eq!(kink.face_sizes(), vec![1, 1, 2]);
        assert!(matches!(
            Diagram::two_strand_torus(4),
            Err(DiagramError::MultiComponent { components: 2 })
        ));
        for p in [5, 7, 9, 11] {
            let d = Diagram::two_strand_torus(p).unwrap();
            assert!(d.is_alternating(), "(2, {p}) should alternate");
            assert!(d.is_prime());
            assert_eq!(d.crossing_number(), p);
        }
    }

    #[test]
    fn serialization_round_trips() {
        for d in [
            Diagram::from_pd(&TREFOIL).unwrap(),
            Diagram::from_pd(&FIGURE_EIGHT).unwrap(),
            Diagram::from_pd(&SQUARE_SUM).unwrap(),
        ] {
            let back = Diagram::from_pd(&d.serialize_pd()).unwrap();
            assert!(back.is_isomorphic_to(&d));
        }
    }

    #[test]
    fn relabeling_is_invisible_to_isomorphism() {
        let d = Diagram::from_pd(&FIGURE_EIGHT).unwrap();
        for offset in 0..8 {
            for reverse in [false, true] {
                let r = d.relabel(offset, reverse);
                assert!(r.is_isomorphic_to(&d), "offset {offset}, reverse {reverse}");
            }
        }
    }

    #[test]
    fn mirror_is_an_involution() {
        for code in [TREFOIL.as_slice(), FIGURE_EIGHT.as_slice(), SQUARE_SUM.as_slice()] {
            let d = Diagram::from_pd(code).unwrap();
            assert_eq!(d.mirror().mirror(), d);
            assert_eq!(d.reflect().reflect(), d);
        }
    }

    #[test]
    fn mirror_flips_every_sign() {
        let d = Diagram::from_pd(&TREFOIL).unwrap();
        let m = d.mirror();
        assert!(m.signs().iter().all(|s| *s == Sign::Negative));
        assert_eq!(m.writhe(), -3);
        assert!(m.is_alternating());
    }

    #[test]
    fn figure_eight_is_its_own_mirror_on_the_sphere() {
        let d = Diagram::from_pd(&FIGURE_EIGHT).unwrap();
        assert!(d.mirror().is_isomorphic_to(&d));
    }

    #[test]
    fn unknot_sentinel() {
        let u = Diagram::unknot();
        assert_eq!(u.crossing_number(), 0);
        assert_eq!(u.face_count(), 2);
        assert!(u.is_alternating());
        assert!(u.is_prime());
        assert!(u.is_isomorphic_to(&Diagram::unknot()));
        assert!(!u.is_isomorphic_to(&Diagram::from_pd(&TREFOIL).unwrap()));
    }

    #[test]
    fn label_gaps_are_rejected() {
        assert!(matches!(
            Diagram::from_pd(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 7, 3]]),
            Err(DiagramError::MalformedCode(_))
        ));
    }
}

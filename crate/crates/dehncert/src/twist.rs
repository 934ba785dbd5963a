//! Twist regions and the reduced fat graph of an alternating diagram.
//!
//! A twist region is a maximal chain of crossings joined by bigon faces:
//! the familiar picture of two strands winding around each other. Every
//! crossing of a reduced prime alternating diagram lies in exactly one
//! twist region, and the number of regions, the twist number, is the
//! coarse complexity measure the surgery gate runs on.
//!
//! Collapsing each twist region to a single 4-valent vertex leaves a
//! [`FatGraph`]: a 4-regular plane multigraph remembering the cyclic
//! order of the surviving edge-ends at each vertex. The census module
//! enumerates the possible fat graphs with few vertices and splices twist
//! regions back in, so the pair (fat graph, twist widths) round-trips
//! through [`reduce`].

use crate::diagram::{self, Dart, Diagram};
use thiserror::Error;

/// How a twist region closes up.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum RegionShape {
    /// An open chain of crossings; the generic case.
    Chain,
    /// The bigons form a closed cycle, so the whole diagram is the
    /// standard picture of a (2, p) torus knot.
    Cycle,
}

/// A maximal twist region.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct TwistRegion {
    /// Crossings in order along the chain (arbitrary but fixed direction;
    /// a single crossing is a chain of length one).
    pub crossings: Vec<usize>,
    pub shape: RegionShape,
}

impl TwistRegion {
    #[must_use]
    pub fn width(&self) -> usize {
        self.crossings.len()
    }
}

#[derive(Debug, Error)]
pub enum TwistError {
    /// Twist analysis is only meaningful for reduced prime alternating
    /// diagrams; anything else is rejected up front.
    #[error("twist analysis requires a reduced prime alternating diagram: {0}")]
    UnsupportedDiagram(String),
}

/// Decomposes the diagram into twist regions.
///
/// Bigon faces joining two distinct crossings are the glue: two crossings
/// in a common bigon share a twist region. In a reduced prime alternating
/// diagram each crossing meets at most two such bigons, so the regions
/// are paths in the bigon graph, except for the (2, p) torus diagrams
/// where they close into one cycle.
pub fn twist_regions(diagram: &Diagram) -> Result<Vec<TwistRegion>, TwistError> {
    check_supported(diagram)?;
    let n = diagram.crossing_number();
    if n == 0 {
        return Ok(Vec::new());
    }

    let mut neighbors: Vec<Vec<usize>> = vec![Vec::new(); n];
    for face in diagram.faces() {
        if face.len() != 2 {
            continue;
        }
        let (a, b) = (diagram::crossing_of(face[0]), diagram::crossing_of(face[1]));
        if a == b {
            continue;
        }
        neighbors[a].push(b);
        neighbors[b].push(a);
    }
    for (c, adjacent) in neighbors.iter().enumerate() {
        if adjacent.len() > 2 {
            return Err(TwistError::UnsupportedDiagram(format!(
                "crossing {c} lies on {} bigons",
                adjacent.len()
            )));
        }
    }

    let mut assigned = vec![false; n];
    let mut regions = Vec::new();

    for start in 0..n {
        if assigned[start] || neighbors[start].len() == 2 {
            continue;
        }
        let mut chain = vec![start];
        assigned[start] = true;
        let mut prev = start;
        let mut cur = match neighbors[start].first() {
            Some(&next) => next,
            None => {
                regions.push(TwistRegion { crossings: chain, shape: RegionShape::Chain });
                continue;
            }
        };
        loop {
            chain.push(cur);
            assigned[cur] = true;
            let next = neighbors[cur].iter().copied().find(|&x| x != prev);
            match next {
                Some(x) => {
                    prev = cur;
                    cur = x;
                }
                None => break,
            }
        }
        regions.push(TwistRegion { crossings: chain, shape: RegionShape::Chain });
    }

    if let Some(start) = (0..n).find(|&c| !assigned[c]) {
        let mut cycle = vec![start];
        assigned[start] = true;
        let (mut prev, mut cur) = (start, neighbors[start][0]);
        while cur != start {
            cycle.push(cur);
            assigned[cur] = true;
            let next = neighbors[cur]
                .iter()
                .copied()
                .find(|&x| x != prev)
                .expect("cycle vertices have two bigon neighbors");
            prev = cur;
            cur = next;
        }
        if cycle.len() != n {
            return Err(TwistError::UnsupportedDiagram(
                "bigon cycle does not span the diagram".into(),
            ));
        }
        regions.push(TwistRegion { crossings: cycle, shape: RegionShape::Cycle });
    }

    regions.sort_by_key(|r| r.crossings[0]);
    Ok(regions)
}

/// The twist number: how many twist regions the diagram has. The (2, p)
/// torus diagrams count as a single region.
pub fn twist_number(diagram: &Diagram) -> Result<usize, TwistError> {
    Ok(twist_regions(diagram)?.len())
}

fn check_supported(diagram: &Diagram) -> Result<(), TwistError> {
    if !diagram.is_alternating() {
        return Err(TwistError::UnsupportedDiagram("diagram is not alternating".into()));
    }
    if diagram.crossing_number() > 0 && !diagram.is_prime() {
        return Err(TwistError::UnsupportedDiagram("diagram is not prime".into()));
    }
    Ok(())
}

// ----------------------------------------------------------------------
// Fat graphs
// ----------------------------------------------------------------------

/// A connected 4-regular plane multigraph with a rotation system: vertex
/// `v` owns darts `4v..4v + 4` in counterclockwise order, and
/// `opposite[d]` is the far end of the edge containing dart `d`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct FatGraph {
    opposite: Vec<usize>,
}

#[derive(Debug, Error)]
pub enum FatGraphError {
    #[error("invalid fat graph: {0}")]
    Invalid(String),
}

impl FatGraph {
    /// Wraps an opposite-dart table, checking that it is a fixed-point
    /// free involution on `4v` darts describing a connected graph that
    /// embeds in the sphere.
    pub fn new(opposite: Vec<usize>) -> Result<Self, FatGraphError> {
        let nd = opposite.len();
        if nd == 0 || nd % 4 != 0 {
            return Err(FatGraphError::Invalid(format!(
                "dart count {nd} is not a positive multiple of 4"
            )));
        }
        for (d, &e) in opposite.iter().enumerate() {
            if e >= nd || e == d || opposite[e] != d {
                return Err(FatGraphError::Invalid(format!(
                    "opposite table is not a fixed-point free involution at dart {d}"
                )));
            }
        }
        let graph = FatGraph { opposite };
        if !graph.is_connected() {
            return Err(FatGraphError::Invalid("graph is not connected".into()));
        }
        let chi = graph.euler_characteristic();
        if chi != 2 {
            return Err(FatGraphError::Invalid(format!(
                "Euler characteristic {chi}, expected 2"
            )));
        }
        Ok(graph)
    }

    #[must_use]
    pub fn vertex_count(&self) -> usize {
        self.opposite.len() / 4
    }

    #[must_use]
    pub fn edge_count(&self) -> usize {
        self.opposite.len() / 2
    }

    #[must_use]
    pub fn opposite(&self, d: usize) -> usize {
        self.opposite[d]
    }

    #[must_use]
    pub fn opposite_table(&self) -> &[usize] {
        &self.opposite
    }

    #[must_use]
    pub fn face_count(&self) -> usize {
        self.faces().len()
    }

    /// Faces of the embedding, each a cycle of darts under
    /// `rotate . opposite`.
    #[must_use]
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let nd = self.opposite.len();
        let mut seen = vec![false; nd];
        let mut faces = Vec::new();
        for start in 0..nd {
            if seen[start] {
                continue;
            }
            let mut face = Vec::new();
            let mut d = start;
            loop {
                seen[d] = true;
                face.push(d);
                d = diagram::sigma(self.opposite[d]);
                if d == start {
                    break;
                }
            }
            faces.push(face);
        }
        faces
    }

    #[must_use]
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    /// Number of loop edges (both ends at the same vertex).
    #[must_use]
    pub fn loop_count(&self) -> usize {
        (0..self.opposite.len()).filter(|&d| self.opposite[d] >> 2 == d >> 2).count() / 2
    }

    /// Multiplicity of the edge bundle between each unordered vertex pair,
    /// as a sorted list of (v, w, multiplicity) with v <= w.
    #[must_use]
    pub fn edge_multiplicities(&self) -> Vec<(usize, usize, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for d in 0..self.opposite.len() {
            let e = self.opposite[d];
            if d < e {
                let (v, w) = (d >> 2, e >> 2);
                *counts.entry((v.min(w), v.max(w))).or_insert(0usize) += 1;
            }
        }
        counts.into_iter().map(|((v, w), m)| (v, w, m)).collect()
    }

    fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for k in 0..4 {
                let w = self.opposite[4 * v + k] >> 2;
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == n
    }

    /// A canonical encoding of the fat graph up to relabeling of vertices,
    /// rotation of each vertex's dart block, and global reflection. Two
    /// fat graphs are isomorphic as unoriented plane maps exactly when
    /// these agree.
    #[must_use]
    pub fn canonical_form(&self) -> Vec<usize> {
        let mut best: Option<Vec<usize>> = None;
        for table in [self.opposite.clone(), self.reflected_table()] {
            refine_canonical(&table, &mut best);
        }
        best.expect("nonempty graph has a canonical form")
    }

    #[must_use]
    pub fn is_isomorphic_to(&self, other: &Self) -> bool {
        self.canonical_form() == other.canonical_form()
    }

    fn reflected_table(&self) -> Vec<usize> {
        let flip = |d: usize| (d & !3) | (3 - (d & 3));
        let mut out = vec![0; self.opposite.len()];
        for (d, &e) in self.opposite.iter().enumerate() {
            out[flip(d)] = flip(e);
        }
        out
    }
}

/// Minimizes the relabeled opposite table over all vertex orderings and
/// per-vertex rotations, via breadth-first canonical search seeded at
/// every (vertex, rotation) pair.
fn refine_canonical(table: &[usize], best: &mut Option<Vec<usize>>) {
    let n = table.len() / 4;
    for seed in 0..4 * n {
        let encoded = encode_from(table, seed);
        if best.as_ref().map_or(true, |b| encoded < *b) {
            *best = Some(encoded);
        }
    }
}

/// Relabels darts breadth-first from a seed dart: the seed's vertex
/// becomes vertex 0 with the seed as its dart 0, and each new vertex is
/// numbered when first reached, entered at its dart 0. The encoding is
/// the relabeled opposite table.
fn encode_from(table: &[usize], seed: usize) -> Vec<usize> {
    let n = table.len() / 4;
    let mut vertex_id = vec![usize::MAX; n];
    let mut base_dart = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);

    let mut claim = |d: usize, vertex_id: &mut Vec<usize>, base_dart: &mut Vec<usize>,
                     order: &mut Vec<usize>| {
        let v = d >> 2;
        if vertex_id[v] == usize::MAX {
            vertex_id[v] = order.len();
            base_dart[v] = d;
            order.push(v);
        }
    };
    claim(seed, &mut vertex_id, &mut base_dart, &mut order);

    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for k in 0..4 {
            let d = (base_dart[v] & !3) | ((base_dart[v] + k) & 3);
            claim(table[d], &mut vertex_id, &mut base_dart, &mut order);
        }
    }

    let relabel = |d: usize| {
        let v = d >> 2;
        4 * vertex_id[v] + ((d + 4 - (base_dart[v] & 3)) & 3)
    };
    let mut encoded = vec![0; table.len()];
    for (d, &e) in table.iter().enumerate() {
        encoded[relabel(d)] = relabel(e);
    }
    encoded
}

// ----------------------------------------------------------------------
// Reduction
// ----------------------------------------------------------------------

/// The result of collapsing every twist region of a diagram.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub regions: Vec<TwistRegion>,
    pub graph: FatGraph,
    /// For each region (indexed as in `regions`), the diagram darts that
    /// became the four fat-graph darts `4r..4r + 4`, in order.
    pub attachments: Vec<[Dart; 4]>,
}

/// Collapses each twist region of a reduced prime alternating diagram to
/// a vertex, producing its fat graph.
///
/// The edges absorbed into a region are the bigon edges between
/// consecutive chain crossings; every other edge survives. Each region
/// keeps exactly four free darts. A cycle region is first cut open: one
/// bigon pair is kept as the two surviving loop edges, so the (2, p)
/// diagrams reduce to the single vertex with two loops.
pub fn reduce(diagram: &Diagram) -> Result<Reduction, TwistError> {
    let regions = twist_regions(diagram)?;
    if regions.is_empty() {
        return Err(TwistError::UnsupportedDiagram(
            "the zero-crossing diagram has no twist regions".into(),
        ));
    }

    let n = diagram.crossing_number();
    let mut region_of = vec![usize::MAX; n];
    for (r, region) in regions.iter().enumerate() {
        for &c in &region.crossings {
            region_of[c] = r;
        }
    }

    let faces = diagram.faces();
    let mut region_bigons: Vec<Vec<usize>> = vec![Vec::new(); regions.len()];
    for (fi, face) in faces.iter().enumerate() {
        if face.len() == 2
            && diagram::crossing_of(face[0]) != diagram::crossing_of(face[1])
        {
            region_bigons[region_of[diagram::crossing_of(face[0])]].push(fi);
        }
    }

    let mut absorbed = vec![false; diagram.dart_count()];
    for (r, region) in regions.iter().enumerate() {
        let kept = match region.shape {
            RegionShape::Chain => usize::MAX,
            RegionShape::Cycle => *region_bigons[r]
                .iter()
                .min_by_key(|&&fi| faces[fi].iter().min().copied())
                .expect("a cycle region has at least one bigon"),
        };
        for &fi in &region_bigons[r] {
            if fi == kept {
                continue;
            }
            for &d in &faces[fi] {
                absorbed[d] = true;
                absorbed[diagram.alpha(d)] = true;
            }
        }
    }

    let mut attachments = Vec::with_capacity(regions.len());
    for (r, _) in regions.iter().enumerate() {
        let mut free: Vec<Dart> = Vec::with_capacity(4);
        let start = (0..diagram.dart_count())
            .find(|&d| region_of[diagram::crossing_of(d)] == r && !absorbed[d])
            .expect("every twist region keeps four free darts");
        let mut d = start;
        loop {
            free.push(d);
            d = next_free(diagram, d, &absorbed);
            if d == start {
                break;
            }
        }
        if free.len() != 4 {
            return Err(TwistError::UnsupportedDiagram(format!(
                "twist region does not reduce to a 4-valent vertex ({} free darts)",
                free.len()
            )));
        }
        attachments.push([free[0], free[1], free[2], free[3]]);
    }

    let mut fat_of_diagram = vec![usize::MAX; diagram.dart_count()];
    for (r, att) in attachments.iter().enumerate() {
        for (k, &d) in att.iter().enumerate() {
            fat_of_diagram[d] = 4 * r + k;
        }
    }
    let mut opposite = vec![0usize; 4 * regions.len()];
    for att in &attachments {
        for &d in att {
            let e = diagram.alpha(d);
            opposite[fat_of_diagram[d]] = fat_of_diagram[e];
        }
    }

    let graph = FatGraph::new(opposite).map_err(|e| {
        TwistError::UnsupportedDiagram(format!("reduction produced an invalid fat graph: {e}"))
    })?;
    Ok(Reduction { regions, graph, attachments })
}

/// Walks counterclockwise around the collapsed region boundary to the
/// next surviving dart: rotate once, then skip over absorbed edges by
/// crossing them and rotating again.
fn next_free(diagram: &Diagram, d: Dart, absorbed: &[bool]) -> Dart {
    let mut x = diagram::sigma(d);
    while absorbed[x] {
        x = diagram::sigma(diagram.alpha(x));
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> Diagram {
        Diagram::from_pd(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]).unwrap()
    }

    fn figure_eight() -> Diagram {
        Diagram::from_pd(&[[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]]).unwrap()
    }

    #[test]
    fn torus_diagrams_are_one_cycle_region() {
        for p in [3, 5, 7] {
            let d = Diagram::two_strand_torus(p).unwrap();
            let regions = twist_regions(&d).unwrap();
            assert_eq!(regions.len(), 1, "(2, {p})");
            assert_eq!(regions[0].shape, RegionShape::Cycle);
            assert_eq!(regions[0].width(), p);
            assert_eq!(twist_number(&d).unwrap(), 1);
        }
    }

    #[test]
    fn figure_eight_has_two_regions_of_width_two() {
        let regions = twist_regions(&figure_eight()).unwrap();
        assert_eq!(regions.len(), 2);
        let mut widths: Vec<usize> = regions.iter().map(TwistRegion::width).collect();
        widths.sort_unstable();
        assert_eq!(widths, vec![2, 2]);
        assert!(regions.iter().all(|r| r.shape == RegionShape::Chain));
    }

    #[test]
    fn torus_diagrams_reduce_to_two_loops() {
        for p in [3, 5, 9] {
            let reduction = reduce(&Diagram::two_strand_torus(p).unwrap()).unwrap();
            assert_eq!(reduction.graph.vertex_count(), 1);
            assert_eq!(reduction.graph.loop_count(), 2);
            let expected = FatGraph::new(vec![3, 2, 1, 0]).unwrap();
            assert!(reduction.graph.is_isomorphic_to(&expected));
        }
    }

    #[test]
    fn figure_eight_reduces_to_the_two_vertex_graph() {
        let reduction = reduce(&figure_eight()).unwrap();
        assert_eq!(reduction.graph.vertex_count(), 2);
        assert_eq!(reduction.graph.loop_count(), 0);
        let expected = FatGraph::new(vec![7, 6, 5, 4, 3, 2, 1, 0]).unwrap();
        assert!(reduction.graph.is_isomorphic_to(&expected));
    }

    #[test]
    fn trefoil_reduction_matches_figure_eight_shape_rules() {
        let reduction = reduce(&trefoil()).unwrap();
        assert_eq!(reduction.regions.len(), 1);
        assert_eq!(reduction.graph.vertex_count(), 1);
        assert_eq!(reduction.graph.loop_count(), 2);
    }

    #[test]
    fn standard_graphs_validate() {
        for table in [
            vec![3, 2, 1, 0],
            vec![7, 6, 5, 4, 3, 2, 1, 0],
            vec![11, 10, 5, 4, 3, 2, 9, 8, 7, 6, 1, 0],
        ] {
            let g = FatGraph::new(table).unwrap();
            assert_eq!(g.euler_characteristic(), 2);
        }
    }

    #[test]
    fn canonical_form_ignores_relabeling() {
        let g = FatGraph::new(vec![7, 6, 5, 4, 3, 2, 1, 0]).unwrap();
        let shuffled = FatGraph::new(vec![5, 4, 7, 6, 1, 0, 3, 2]).unwrap();
        assert!(g.is_isomorphic_to(&shuffled));
    }

    #[test]
    fn fat_graph_rejects_fixed_points() {
        assert!(FatGraph::new(vec![0, 1, 2, 3]).is_err());
    }
}

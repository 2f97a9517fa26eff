//! Finite multigraphs with loops, stable edge indices, deletion/contraction,
//! component and cycle-rank counts, and the colouring-count oracle.

use std::collections::BTreeMap;

use crate::subset::SubsetMask;
use crate::Error;

pub const COLOURING_GUARD: u64 = 10_000_000;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EdgeKind {
    Loop,
    Bridge,
    Ordinary,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MinorKind {
    Delete,
    Contract,
}

/// A multigraph. Vertices are 0-based and contiguous; edges carry stable
/// original indices (0-based) that survive deletion and contraction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Multigraph {
    vertex_count: usize,
    edges: BTreeMap<usize, (usize, usize)>,
    original_edge_count: usize,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

impl Multigraph {
    /// Edges as 0-based endpoint pairs; the list order defines the original
    /// edge indices.
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Self {
        for &(u, v) in edges {
            assert!(u < vertex_count && v < vertex_count, "endpoint out of range");
        }
        Multigraph {
            vertex_count,
            edges: edges.iter().copied().enumerate().collect(),
            original_edge_count: edges.len(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Size of the original edge list; masks over edges use this ground size.
    pub fn original_edge_count(&self) -> usize {
        self.original_edge_count
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, (usize, usize))> + '_ {
        self.edges.iter().map(|(&i, &e)| (i, e))
    }

    pub fn endpoints(&self, e: usize) -> Option<(usize, usize)> {
        self.edges.get(&e).copied()
    }

    pub fn surviving_edges(&self) -> Vec<usize> {
        self.edges.keys().copied().collect()
    }

    /// Mask (over original indices, as Ω elements i+1) of surviving edges.
    pub fn edge_mask(&self) -> SubsetMask {
        let elems: Vec<usize> = self.edges.keys().map(|&i| i + 1).collect();
        SubsetMask::from_elements(self.original_edge_count, &elems)
    }

    /// Components of the spanning subgraph (V, A). Bit i of `a` (Ω element
    /// i+1) selects original edge i; bits of absent edges are ignored.
    pub fn component_count(&self, a: &SubsetMask) -> usize {
        let mut uf = UnionFind::new(self.vertex_count);
        for (&i, &(u, v)) in &self.edges {
            if a.contains(i + 1) {
                uf.union(u, v);
            }
        }
        (0..self.vertex_count)
            .filter(|&v| uf.find(v) == v)
            .count()
    }

    pub fn component_count_full(&self) -> usize {
        self.component_count(&SubsetMask::full(self.original_edge_count))
    }

    /// β₁(G_A) = |A ∩ E| − |V| + k(G_A).
    pub fn betti1(&self, a: &SubsetMask) -> usize {
        let present = self
            .edges
            .keys()
            .filter(|&&i| a.contains(i + 1))
            .count();
        present + self.component_count(a) - self.vertex_count
    }

    pub fn classify_edge(&self, e: usize) -> EdgeKind {
        let (u, v) = self.edges[&e];
        if u == v {
            return EdgeKind::Loop;
        }
        let all = self.edge_mask();
        let without = all.remove(e + 1);
        if self.component_count(&without) > self.component_count(&all) {
            EdgeKind::Bridge
        } else {
            EdgeKind::Ordinary
        }
    }

    pub fn edge_minor(&self, e: usize, kind: MinorKind) -> Result<Multigraph, Error> {
        let (u, v) = *self
            .edges
            .get(&e)
            .ok_or_else(|| Error::Parse(format!("no edge with index {e}")))?;
        let mut out = self.clone();
        out.edges.remove(&e);
        match kind {
            MinorKind::Delete => Ok(out),
            MinorKind::Contract => {
                if u == v {
                    return Err(Error::ContractLoop);
                }
                let (keep, gone) = (u.min(v), u.max(v));
                for (_, (a, b)) in out.edges.iter_mut() {
                    for end in [a, b] {
                        if *end == gone {
                            *end = keep;
                        } else if *end > gone {
                            *end -= 1;
                        }
                    }
                }
                out.vertex_count -= 1;
                Ok(out)
            }
        }
    }

    /// N_A(λ): colourings V → {1..λ} constant on every component of (V, A),
    /// counted by explicit enumeration. Equals λ^{k(G_A)}.
    pub fn colouring_count(&self, a: &SubsetMask, lambda: u64) -> Result<u64, Error> {
        if lambda == 0 {
            return Ok(if self.vertex_count == 0 { 1 } else { 0 });
        }
        let states = (lambda as f64).powi(self.vertex_count as i32);
        if states > COLOURING_GUARD as f64 {
            return Err(Error::SizeGuard {
                guard: "colouring enumeration",
                limit: COLOURING_GUARD as usize,
            });
        }
        let mut uf = UnionFind::new(self.vertex_count);
        for (&i, &(u, v)) in &self.edges {
            if a.contains(i + 1) {
                uf.union(u, v);
            }
        }
        let roots: Vec<usize> = (0..self.vertex_count).map(|v| uf.find(v)).collect();
        let mut count = 0u64;
        let mut colouring = vec![0u64; self.vertex_count];
        loop {
            let ok = (0..self.vertex_count)
                .all(|v| colouring[v] == colouring[roots[v]]);
            if ok {
                count += 1;
            }
            // odometer increment
            let mut pos = 0;
            loop {
                if pos == self.vertex_count {
                    return Ok(count);
                }
                colouring[pos] += 1;
                if colouring[pos] < lambda {
                    break;
                }
                colouring[pos] = 0;
                pos += 1;
            }
        }
    }

    /// Graphic matroid rank ρ(A) = |V| − k(G_A).
    pub fn graphic_rank(&self, a: &SubsetMask) -> usize {
        self.vertex_count - self.component_count(a)
    }

    /// JSON graph file: {"vertices": 4, "edges": [[1,2],[2,3]]}, 1-based.
    pub fn from_json(value: &serde_json::Value) -> Result<Multigraph, Error> {
        let vertices = value
            .get("vertices")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| Error::Parse("graph file missing \"vertices\"".into()))?
            as usize;
        let raw = value
            .get("edges")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::Parse("graph file missing \"edges\"".into()))?;
        let mut edges = Vec::with_capacity(raw.len());
        for pair in raw {
            let ends = pair
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| Error::Parse("edge must be a pair".into()))?;
            let get = |i: usize| -> Result<usize, Error> {
                let v = ends[i]
                    .as_u64()
                    .ok_or_else(|| Error::Parse("vertex must be an integer".into()))?
                    as usize;
                if v == 0 || v > vertices {
                    return Err(Error::Parse(format!("vertex {v} outside 1..={vertices}")));
                }
                Ok(v - 1)
            };
            edges.push((get(0)?, get(1)?));
        }
        Ok(Multigraph::new(vertices, &edges))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<serde_json::Value> = self
            .edges
            .values()
            .map(|&(u, v)| serde_json::json!([u + 1, v + 1]))
            .collect();
        serde_json::json!({ "vertices": self.vertex_count, "edges": edges })
    }
}

/// A bijective label from the n original edge indices to Ω = {1..n}.
/// `mapping[i]` is the Ω element of original edge i.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgeLabel {
    mapping: Vec<usize>,
}

impl EdgeLabel {
    pub fn new(mapping: Vec<usize>) -> Result<Self, Error> {
        let n = mapping.len();
        let mut seen = vec![false; n];
        for &v in &mapping {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::Parse(format!("label {mapping:?} is not a bijection")));
            }
            seen[v - 1] = true;
        }
        Ok(EdgeLabel { mapping })
    }

    pub fn identity(n: usize) -> Self {
        EdgeLabel {
            mapping: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.mapping.len()
    }

    /// Ω element of original edge index e (0-based).
    pub fn of(&self, e: usize) -> usize {
        self.mapping[e]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.mapping
    }

    /// Image s(A) of a mask over original edge indices.
    pub fn image(&self, a: &SubsetMask) -> SubsetMask {
        let elems: Vec<usize> = a.elements().map(|e| self.mapping[e - 1]).collect();
        SubsetMask::from_elements(self.mapping.len(), &elems)
    }

    /// Label file: {"label": [4,1,2,3]} meaning edge i ↦ label[i].
    pub fn from_json(value: &serde_json::Value) -> Result<EdgeLabel, Error> {
        let raw = value
            .get("label")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::Parse("label file missing \"label\"".into()))?;
        let mapping = raw
            .iter()
            .map(|v| v.as_u64().map(|u| u as usize))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Parse("label entries must be integers".into()))?;
        EdgeLabel::new(mapping)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn component_counts_on_figure1() {
        let g = fixtures::figure1();
        assert_eq!(g.component_count(&SubsetMask::empty(4)), 4);
        assert_eq!(g.component_count(&SubsetMask::full(4)), 1);
        // drop edge v2v3 (original index 1) → triangle + isolated vertex
        let triangle = SubsetMask::full(4).remove(2);
        assert_eq!(g.component_count(&triangle), 2);
    }

    #[test]
    fn betti1_examples() {
        let g = fixtures::figure1();
        // forests have no cycles
        let forest = SubsetMask::from_elements(4, &[1, 2]);
        assert_eq!(g.betti1(&forest), 0);
        // the triangle v1v2, v2v4, v1v4: 3 − 4 + 2 = 1
        let tri = SubsetMask::from_elements(4, &[1, 3, 4]);
        assert_eq!(g.betti1(&tri), 1);
        // single loop edge
        let loopy = Multigraph::new(1, &[(0, 0)]);
        assert_eq!(loopy.betti1(&SubsetMask::full(1)), 1);
    }

    #[test]
    fn classify_edges_on_figure1() {
        let g = fixtures::figure1();
        assert_eq!(g.classify_edge(1), EdgeKind::Bridge); // v2v3
        assert_eq!(g.classify_edge(0), EdgeKind::Ordinary); // v1v2 on the triangle
        let loopy = Multigraph::new(2, &[(0, 0), (0, 1)]);
        assert_eq!(loopy.classify_edge(0), EdgeKind::Loop);
    }

    #[test]
    fn minors_of_figure1() {
        let g = fixtures::figure1();
        let del = g.edge_minor(1, MinorKind::Delete).unwrap();
        assert_eq!(del.vertex_count(), 4);
        assert_eq!(del.edge_count(), 3);
        assert_eq!(del.component_count(&del.edge_mask()), 2);

        let con = g.edge_minor(1, MinorKind::Contract).unwrap();
        assert_eq!(con.vertex_count(), 3);
        assert_eq!(con.edge_count(), 3);
        assert_eq!(con.component_count(&con.edge_mask()), 1);
        // surviving edges keep original indices
        assert_eq!(con.surviving_edges(), vec![0, 2, 3]);

        // contract one edge of a 2-cycle → a loop
        let two_cycle = Multigraph::new(2, &[(0, 1), (0, 1)]);
        let m = two_cycle.edge_minor(0, MinorKind::Contract).unwrap();
        assert_eq!(m.vertex_count(), 1);
        assert_eq!(m.endpoints(1), Some((0, 0)));
        assert_eq!(m.classify_edge(1), EdgeKind::Loop);

        // contracting a loop errors
        let loopy = Multigraph::new(1, &[(0, 0)]);
        assert!(matches!(
            loopy.edge_minor(0, MinorKind::Contract),
            Err(Error::ContractLoop)
        ));
    }

    #[test]
    fn deleting_never_turns_a_bridge_into_a_loop() {
        let g = fixtures::figure1();
        for e in g.surviving_edges() {
            let before: Vec<_> = g
                .surviving_edges()
                .iter()
                .map(|&x| (x, g.classify_edge(x)))
                .collect();
            let del = g.edge_minor(e, MinorKind::Delete).unwrap();
            for (x, kind) in before {
                if x == e {
                    continue;
                }
                if kind == EdgeKind::Bridge {
                    assert_ne!(del.classify_edge(x), EdgeKind::Loop);
                }
            }
        }
    }

    #[test]
    fn colouring_counts() {
        let g = fixtures::figure1();
        assert_eq!(g.colouring_count(&SubsetMask::empty(4), 2).unwrap(), 16);
        assert_eq!(g.colouring_count(&SubsetMask::full(4), 3).unwrap(), 3);
        let triangle = SubsetMask::full(4).remove(2);
        assert_eq!(g.colouring_count(&triangle, 2).unwrap(), 4);
    }

    #[test]
    fn colouring_count_is_lambda_to_the_k() {
        let graphs = [
            fixtures::figure1(),
            Multigraph::new(3, &[(0, 1), (0, 1), (2, 2)]),
            Multigraph::new(2, &[(0, 1)]),
        ];
        for g in &graphs {
            let n = g.original_edge_count();
            for a in SubsetMask::all(n) {
                for lambda in 1u64..=3 {
                    let k = g.component_count(&a) as u32;
                    assert_eq!(g.colouring_count(&a, lambda).unwrap(), lambda.pow(k));
                }
            }
        }
    }

    #[test]
    fn graphic_rank_examples() {
        let g = fixtures::figure1();
        assert_eq!(g.graphic_rank(&SubsetMask::full(4)), 3);
        assert_eq!(g.graphic_rank(&SubsetMask::empty(4)), 0);
        let loopy = Multigraph::new(1, &[(0, 0)]);
        assert_eq!(loopy.graphic_rank(&SubsetMask::full(1)), 0);
    }

    #[test]
    fn rank_plus_components_is_constant() {
        // ρ(A) + k(G_A) = |V| for all A
        for g in [fixtures::figure1(), Multigraph::new(3, &[(0, 0), (0, 1), (1, 2), (1, 2)])] {
            let n = g.original_edge_count();
            for a in SubsetMask::all(n) {
                assert_eq!(g.graphic_rank(&a) + g.component_count(&a), g.vertex_count());
            }
        }
    }

    #[test]
    fn graph_json_round_trip() {
        let g = fixtures::figure1();
        let j = g.to_json();
        assert_eq!(Multigraph::from_json(&j).unwrap(), g);
        assert!(Multigraph::from_json(&serde_json::json!({"vertices": 2, "edges": [[1, 5]]})).is_err());
    }

    #[test]
    fn label_validation_and_image() {
        let s = EdgeLabel::new(vec![4, 1, 2, 3]).unwrap();
        assert_eq!(s.of(0), 4);
        let a = SubsetMask::from_elements(4, &[1, 2]);
        assert_eq!(s.image(&a), SubsetMask::from_elements(4, &[4, 1]));
        assert!(EdgeLabel::new(vec![1, 1, 2]).is_err());
        assert_eq!(
            EdgeLabel::from_json(&serde_json::json!({"label": [4, 1, 2, 3]})).unwrap(),
            s
        );
    }
}

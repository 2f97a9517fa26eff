//! Matroids as rank oracles: graphic, linear over a prime field, uniform.
//! Minors wrap the base oracle with alive/contracted masks, so surviving
//! elements keep their original indices.

use std::sync::Arc;

use crate::graph::Multigraph;
use crate::subset::SubsetMask;
use crate::Error;

/// Matrix over F_p; matroid elements are the columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FpMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<u64>>,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^{p-2} mod p
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl FpMatrix {
    pub fn new(p: u64, entries: Vec<Vec<u64>>) -> Result<Self, Error> {
        if !is_prime(p) {
            return Err(Error::Parse(format!("{p} is not prime")));
        }
        let rows = entries.len();
        let cols = entries.first().map_or(0, |r| r.len());
        if entries.iter().any(|r| r.len() != cols) {
            return Err(Error::Parse("ragged matrix".into()));
        }
        let entries = entries
            .into_iter()
            .map(|row| row.into_iter().map(|v| v % p).collect())
            .collect();
        Ok(FpMatrix {
            p,
            rows,
            cols,
            entries,
        })
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Rank over F_p of the selected columns. Deterministic pivoting: first
    /// nonzero entry, scanning rows top-down.
    pub fn rank_of_columns(&self, a: &SubsetMask) -> usize {
        let cols: Vec<usize> = a.elements().map(|e| e - 1).collect();
        let mut m: Vec<Vec<u64>> = self
            .entries
            .iter()
            .map(|row| cols.iter().map(|&c| row[c]).collect())
            .collect();
        let p = self.p;
        let mut rank = 0;
        for col in 0..cols.len() {
            let Some(pivot) = (rank..self.rows).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, pivot);
            let inv = mod_inverse(m[rank][col], p);
            for c in col..cols.len() {
                m[rank][c] = m[rank][c] * inv % p;
            }
            for r in 0..self.rows {
                if r != rank && m[r][col] != 0 {
                    let factor = m[r][col];
                    for c in col..cols.len() {
                        m[r][c] = (m[r][c] + (p - factor) * m[rank][c]) % p;
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

#[derive(Clone, Debug)]
pub enum MatroidBase {
    Graphic(Multigraph),
    Linear(FpMatrix),
    Uniform { r: usize, n: usize },
}

impl MatroidBase {
    fn ground_size(&self) -> usize {
        match self {
            MatroidBase::Graphic(g) => g.original_edge_count(),
            MatroidBase::Linear(m) => m.cols(),
            MatroidBase::Uniform { n, .. } => *n,
        }
    }

    fn rank(&self, a: &SubsetMask) -> usize {
        match self {
            MatroidBase::Graphic(g) => g.graphic_rank(a),
            MatroidBase::Linear(m) => m.rank_of_columns(a),
            MatroidBase::Uniform { r, .. } => a.len().min(*r),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ElementKind {
    Loop,
    Coloop,
    Ordinary,
}

/// A matroid (possibly a minor) given by a rank oracle. The ground set is
/// the set of alive original indices, exposed as Ω elements i+1 of the
/// original ground set of size `original_size`.
#[derive(Clone, Debug)]
pub struct RankOracle {
    base: Arc<MatroidBase>,
    alive: SubsetMask,
    contracted: SubsetMask,
}

impl RankOracle {
    pub fn new(base: MatroidBase) -> Self {
        let n = base.ground_size();
        RankOracle {
            base: Arc::new(base),
            alive: SubsetMask::full(n),
            contracted: SubsetMask::empty(n),
        }
    }

    pub fn graphic(g: Multigraph) -> Self {
        Self::new(MatroidBase::Graphic(g))
    }

    pub fn linear(m: FpMatrix) -> Self {
        Self::new(MatroidBase::Linear(m))
    }

    pub fn uniform(r: usize, n: usize) -> Self {
        Self::new(MatroidBase::Uniform { r, n })
    }

    pub fn base(&self) -> &MatroidBase {
        &self.base
    }

    /// Ground size of the original (un-minored) matroid.
    pub fn original_size(&self) -> usize {
        self.alive.n()
    }

    /// Current ground set as a mask over original indices.
    pub fn ground(&self) -> SubsetMask {
        self.alive
    }

    pub fn ground_size(&self) -> usize {
        self.alive.len()
    }

    /// ρ(A) for A a subset of the current ground set.
    pub fn rank(&self, a: &SubsetMask) -> usize {
        debug_assert!(a.is_subset_of(&self.alive));
        self.base.rank(&a.union(&self.contracted)) - self.base.rank(&self.contracted)
    }

    pub fn full_rank(&self) -> usize {
        self.rank(&self.alive)
    }

    /// Loop iff ρ({e}) = 0; coloop iff ρ(E) − ρ(E∖{e}) = 1.
    pub fn classify(&self, e: usize) -> ElementKind {
        assert!(self.alive.contains(e + 1), "element {e} not in ground set");
        let singleton = SubsetMask::empty(self.original_size()).insert(e + 1);
        if self.rank(&singleton) == 0 {
            return ElementKind::Loop;
        }
        if self.full_rank() - self.rank(&self.alive.remove(e + 1)) == 1 {
            ElementKind::Coloop
        } else {
            ElementKind::Ordinary
        }
    }

    /// Delete: rank restricts. Contract: rank''(A) = ρ(A ∪ {e}) − ρ({e}).
    /// Contracting a loop is defined and leaves all ranks unchanged.
    pub fn minor(&self, e: usize, kind: crate::graph::MinorKind) -> RankOracle {
        assert!(self.alive.contains(e + 1), "element {e} not in ground set");
        let mut out = self.clone();
        out.alive = out.alive.remove(e + 1);
        if kind == crate::graph::MinorKind::Contract {
            out.contracted = out.contracted.insert(e + 1);
        }
        out
    }

    /// JSON matroid file; see the graphic/linear/uniform forms in tests.
    pub fn from_json(value: &serde_json::Value) -> Result<RankOracle, Error> {
        let kind = value
            .get("kind")
            .and_then(|v| v.as_str())
            .ok_or_else(|| Error::Parse("matroid file missing \"kind\"".into()))?;
        match kind {
            "graphic" => {
                let g = value
                    .get("graph")
                    .ok_or_else(|| Error::Parse("graphic matroid missing \"graph\"".into()))?;
                Ok(RankOracle::graphic(Multigraph::from_json(g)?))
            }
            "linear" => {
                let p = value
                    .get("p")
                    .and_then(|v| v.as_u64())
                    .ok_or_else(|| Error::Parse("linear matroid missing \"p\"".into()))?;
                let rows = value
                    .get("matrix")
                    .and_then(|v| v.as_array())
                    .ok_or_else(|| Error::Parse("linear matroid missing \"matrix\"".into()))?
                    .iter()
                    .map(|row| {
                        row.as_array()
                            .map(|r| {
                                r.iter()
                                    .map(|v| v.as_u64())
                                    .collect::<Option<Vec<u64>>>()
                            })
                            .flatten()
                            .ok_or_else(|| Error::Parse("matrix rows must be integer lists".into()))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(RankOracle::linear(FpMatrix::new(p, rows)?))
            }
            "uniform" => {
                let r = value.get("r").and_then(|v| v.as_u64());
                let n = value.get("n").and_then(|v| v.as_u64());
                match (r, n) {
                    (Some(r), Some(n)) => Ok(RankOracle::uniform(r as usize, n as usize)),
                    _ => Err(Error::Parse("uniform matroid needs \"r\" and \"n\"".into())),
                }
            }
            other => Err(Error::Parse(format!("unknown matroid kind `{other}`"))),
        }
    }
}

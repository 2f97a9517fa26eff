//! Homogeneous weight functions of degree d on d-subsets of Ω, their
//! extension to all subsets, the differentiation operator, harmonic spaces,
//! symmetrization and level sums.

use std::collections::BTreeMap;

use num::Zero;

use crate::linalg::RatMatrix;
use crate::rational::{binomial, factorial, format_rational, parse_rational, rat, Rational};
use crate::subset::SubsetMask;
use crate::Error;

/// A weight of degree `d` on the d-subsets of Ω = {1..n}. Values are stored
/// for all C(n,d) subsets of size d; d = 0 means a single value at ∅.
#[derive(Clone, PartialEq, Debug)]
pub struct WeightFn {
    n: usize,
    d: usize,
    values: BTreeMap<SubsetMask, Rational>,
}

impl WeightFn {
    pub fn new(n: usize, d: usize, mut values: BTreeMap<SubsetMask, Rational>) -> Result<Self, Error> {
        if d > n {
            return Err(Error::Parse(format!("degree {d} exceeds ground size {n}")));
        }
        for key in values.keys() {
            if key.n() != n || key.len() != d {
                return Err(Error::Parse(format!(
                    "weight key {key} is not a {d}-subset of a {n}-set"
                )));
            }
        }
        for mask in SubsetMask::all_of_size(n, d) {
            values.entry(mask).or_insert_with(Rational::zero);
        }
        Ok(WeightFn { n, d, values })
    }

    /// f ≡ 1 on Ω_d.
    pub fn ones(n: usize, d: usize) -> Self {
        let values = SubsetMask::all_of_size(n, d)
            .into_iter()
            .map(|m| (m, rat(1)))
            .collect();
        WeightFn::new(n, d, values).expect("d <= n")
    }

    /// Indicator of a single d-subset.
    pub fn indicator(n: usize, subset: &[usize]) -> Self {
        let mask = SubsetMask::from_elements(n, subset);
        let mut values = BTreeMap::new();
        values.insert(mask, rat(1));
        WeightFn::new(n, subset.len(), values).expect("valid subset")
    }

    /// Weight of degree 1 from per-element values.
    pub fn from_degree1(values: &[Rational]) -> Self {
        let n = values.len();
        let map = values
            .iter()
            .enumerate()
            .map(|(i, v)| (SubsetMask::singleton(n, i + 1), v.clone()))
            .collect();
        WeightFn::new(n, 1, map).expect("degree 1")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn value(&self, z: &SubsetMask) -> Rational {
        self.values.get(z).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn values(&self) -> impl Iterator<Item = (&SubsetMask, &Rational)> {
        self.values.iter()
    }

    /// Total weight F = Σ_{Z ∈ Ω_d} f(Z).
    pub fn total(&self) -> Rational {
        self.values.values().cloned().sum()
    }

    /// f̃(X) = Σ_{Z ⊆ X, |Z| = d} f(Z); zero when |X| < d.
    pub fn extend_tilde(&self, x: &SubsetMask) -> Rational {
        assert_eq!(x.n(), self.n, "ground mismatch in extend_tilde");
        if x.len() < self.d {
            return Rational::zero();
        }
        self.values
            .iter()
            .filter(|(z, _)| z.is_subset_of(x))
            .map(|(_, v)| v.clone())
            .sum()
    }

    /// Table of f̃ over all 2^n subsets, indexed by mask bits.
    pub fn extend_tilde_table(&self) -> Vec<Rational> {
        // zeta transform: table[X] = Σ_{Z ⊆ X} f(Z)
        let mut table = vec![Rational::zero(); 1 << self.n];
        for (z, v) in &self.values {
            table[z.bits() as usize] = v.clone();
        }
        for i in 0..self.n {
            let bit = 1usize << i;
            for mask in 0..1usize << self.n {
                if mask & bit != 0 {
                    let prev = table[mask & !bit].clone();
                    table[mask] += prev;
                }
            }
        }
        table
    }

    /// Defects of γ: for each (d−1)-subset Y, Σ_{Z ⊇ Y, |Z| = d} f(Z).
    /// f is harmonic iff every defect vanishes.
    pub fn gamma_defect(&self) -> Result<BTreeMap<SubsetMask, Rational>, Error> {
        if self.d == 0 {
            return Err(Error::GammaUndefined);
        }
        let mut out = BTreeMap::new();
        for y in SubsetMask::all_of_size(self.n, self.d - 1) {
            let sum: Rational = self
                .values
                .iter()
                .filter(|(z, _)| y.is_subset_of(z))
                .map(|(_, v)| v.clone())
                .sum();
            out.insert(y, sum);
        }
        Ok(out)
    }

    /// True for d = 0 (γ is identically zero below degree 1) and for d ≥ 1
    /// exactly when all γ defects vanish.
    pub fn is_harmonic(&self) -> bool {
        match self.gamma_defect() {
            Ok(defects) => defects.values().all(|v| v.is_zero()),
            Err(_) => true, // d = 0
        }
    }

    /// f^{(i)}(J) = Σ_{Z ∈ Ω_d, |J ∩ Z| = i} f(Z).
    pub fn level_sum(&self, j: &SubsetMask, i: usize) -> Rational {
        assert!(i <= self.d);
        assert_eq!(j.n(), self.n);
        self.values
            .iter()
            .filter(|(z, _)| j.intersection(z).len() == i)
            .map(|(_, v)| v.clone())
            .sum()
    }

    /// R(f) = Σ_{σ ∈ S_n} σf. By symmetry this is the constant function
    /// d!(n−d)!·Σ_Z f(Z) on every d-subset.
    pub fn symmetrize(&self) -> WeightFn {
        let scale = factorial(self.d) * factorial(self.n - self.d) * self.total();
        let values = SubsetMask::all_of_size(self.n, self.d)
            .into_iter()
            .map(|m| (m, scale.clone()))
            .collect();
        WeightFn::new(self.n, self.d, values).expect("same shape")
    }

    /// Image of f under a permutation of Ω: (σf)(Z) = f(σ⁻¹(Z)).
    pub fn permute(&self, sigma: &[usize]) -> WeightFn {
        assert_eq!(sigma.len(), self.n);
        let values = self
            .values
            .iter()
            .map(|(z, v)| {
                let image: Vec<usize> = z.elements().map(|e| sigma[e - 1]).collect();
                (SubsetMask::from_elements(self.n, &image), v.clone())
            })
            .collect();
        WeightFn::new(self.n, self.d, values).expect("bijection preserves shape")
    }

    pub fn scale(&self, c: &Rational) -> WeightFn {
        let values = self
            .values
            .iter()
            .map(|(z, v)| (*z, v.clone() * c))
            .collect();
        WeightFn::new(self.n, self.d, values).expect("same shape")
    }

    pub fn to_json(&self) -> serde_json::Value {
        let values: Vec<serde_json::Value> = self
            .values
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(z, v)| {
                serde_json::json!({
                    "set": z.elements().collect::<Vec<_>>(),
                    "value": format_rational(v),
                })
            })
            .collect();
        serde_json::json!({ "n": self.n, "d": self.d, "values": values })
    }

    /// JSON weight file: {"n": 4, "d": 1, "values": [{"set": [1], "value": "1"}]}.
    /// Omitted d-subsets default to 0.
    pub fn from_json(value: &serde_json::Value) -> Result<WeightFn, Error> {
        let n = value
            .get("n")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| Error::Parse("weight file missing \"n\"".into()))? as usize;
        let d = value
            .get("d")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| Error::Parse("weight file missing \"d\"".into()))? as usize;
        let mut values = BTreeMap::new();
        if let Some(items) = value.get("values").and_then(|v| v.as_array()) {
            for item in items {
                let set: Vec<usize> = item
                    .get("set")
                    .and_then(|s| s.as_array())
                    .ok_or_else(|| Error::Parse("weight entry missing \"set\"".into()))?
                    .iter()
                    .map(|e| e.as_u64().map(|u| u as usize))
                    .collect::<Option<_>>()
                    .ok_or_else(|| Error::Parse("weight set must hold integers".into()))?;
                let raw = item
                    .get("value")
                    .ok_or_else(|| Error::Parse("weight entry missing \"value\"".into()))?;
                let v = match raw {
                    serde_json::Value::String(s) => parse_rational(s)?,
                    serde_json::Value::Number(x) if x.is_i64() => rat(x.as_i64().unwrap()),
                    _ => return Err(Error::Parse("weight value must be \"p/q\" or int".into())),
                };
                values.insert(SubsetMask::from_elements(n, &set), v);
            }
        }
        WeightFn::new(n, d, values)
    }
}

/// Incidence matrix of γ: rows indexed by (d−1)-subsets, columns by
/// d-subsets, entry 1 when the row set is contained in the column set.
fn gamma_matrix(n: usize, d: usize) -> RatMatrix {
    let rows_idx = SubsetMask::all_of_size(n, d - 1);
    let cols_idx = SubsetMask::all_of_size(n, d);
    let mut m = RatMatrix::zeros(rows_idx.len(), cols_idx.len());
    for (r, y) in rows_idx.iter().enumerate() {
        for (c, z) in cols_idx.iter().enumerate() {
            if y.is_subset_of(z) {
                m.set(r, c, rat(1));
            }
        }
    }
    m
}

/// Rational basis of Harm_d(n) = ker γ. Size C(n,d) − C(n,d−1) for d ≥ 1,
/// and the single constant function for d = 0.
pub fn harmonic_basis(n: usize, d: usize) -> Vec<WeightFn> {
    assert!(d <= n);
    if d == 0 {
        return vec![WeightFn::ones(n, 0)];
    }
    let cols_idx = SubsetMask::all_of_size(n, d);
    gamma_matrix(n, d)
        .null_space()
        .into_iter()
        .map(|vec| {
            let values = cols_idx
                .iter()
                .zip(vec)
                .map(|(m, v)| (*m, v))
                .collect();
            WeightFn::new(n, d, values).expect("kernel vector has the right shape")
        })
        .collect()
}

/// Basis of Hom_d(n): the indicator of each d-subset, in mask order.
pub fn hom_basis(n: usize, d: usize) -> Vec<WeightFn> {
    SubsetMask::all_of_size(n, d)
        .into_iter()
        .map(|m| {
            let elements: Vec<usize> = m.elements().collect();
            WeightFn::indicator(n, &elements)
        })
        .collect()
}

/// Expected dimension of Harm_d(n).
pub fn harmonic_dimension(n: usize, d: usize) -> usize {
    use num::ToPrimitive;
    if d == 0 {
        return 1;
    }
    let dim = binomial(n, d) - binomial(n, d - 1);
    if crate::rational::is_negative(&dim) {
        0
    } else {
        dim.to_integer().to_usize().unwrap()
    }
}

/// Brute-force R(f) by explicit summation over all n! permutations.
/// Test oracle for `symmetrize`; n! blowup, keep n ≤ 6.
pub fn symmetrize_brute_force(f: &WeightFn) -> WeightFn {
    use itertools::Itertools;
    let n = f.n();
    let mut acc: BTreeMap<SubsetMask, Rational> = SubsetMask::all_of_size(n, f.d())
        .into_iter()
        .map(|m| (m, Rational::zero()))
        .collect();
    for perm in (1..=n).permutations(n) {
        let sf = f.permute(&perm);
        for (z, v) in sf.values() {
            *acc.get_mut(z).unwrap() += v.clone();
        }
    }
    WeightFn::new(n, f.d(), acc).expect("same shape")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn extend_tilde_examples() {
        // n=4, d=1, indicator of {1}: f̃({1,3}) = 1
        let f = WeightFn::indicator(4, &[1]);
        assert_eq!(f.extend_tilde(&SubsetMask::from_elements(4, &[1, 3])), rat(1));
        assert_eq!(f.extend_tilde(&SubsetMask::empty(4)), rat(0));
        // n=4, d=2, f ≡ 1: f̃({1,2,3}) = C(3,2) = 3
        let ones = WeightFn::ones(4, 2);
        assert_eq!(
            ones.extend_tilde(&SubsetMask::from_elements(4, &[1, 2, 3])),
            rat(3)
        );
    }

    #[test]
    fn extend_tilde_table_matches_direct() {
        for d in 0..=3 {
            let f = WeightFn::ones(5, d);
            let table = f.extend_tilde_table();
            for mask in SubsetMask::all(5) {
                assert_eq!(table[mask.bits() as usize], f.extend_tilde(&mask));
            }
        }
    }

    #[test]
    fn gamma_defect_examples() {
        // f = (1,1,1,−3) on singletons: defects at ∅ sum to zero → harmonic
        let f = WeightFn::from_degree1(&[rat(1), rat(1), rat(1), rat(-3)]);
        assert!(f.is_harmonic());
        // indicator of {1}: defect 1 at ∅
        let g = WeightFn::indicator(4, &[1]);
        let defects = g.gamma_defect().unwrap();
        assert_eq!(defects[&SubsetMask::empty(4)], rat(1));
        assert!(!g.is_harmonic());
        // n=4, d=2, f ≡ 1: defect at {1} is 3
        let ones = WeightFn::ones(4, 2);
        let defects = ones.gamma_defect().unwrap();
        assert_eq!(defects[&SubsetMask::from_elements(4, &[1])], rat(3));
        // d=0 rejects
        assert!(matches!(
            WeightFn::ones(3, 0).gamma_defect(),
            Err(Error::GammaUndefined)
        ));
    }

    #[test]
    fn harmonic_basis_dimensions() {
        assert_eq!(harmonic_basis(4, 1).len(), 3);
        assert_eq!(harmonic_basis(4, 0).len(), 1);
        assert_eq!(harmonic_basis(7, 4).len(), 0);
        for n in 1..=6 {
            for d in 0..=n {
                let basis = harmonic_basis(n, d);
                assert_eq!(basis.len(), harmonic_dimension(n, d));
                for f in &basis {
                    assert!(f.is_harmonic());
                }
            }
        }
    }

    #[test]
    fn level_sum_examples() {
        // n=4, d=1, indicator of {1}, J={2,3}, i=0 → 1
        let f = WeightFn::indicator(4, &[1]);
        let j = SubsetMask::from_elements(4, &[2, 3]);
        assert_eq!(f.level_sum(&j, 0), rat(1));
        // i=d, J=∅, d ≥ 1 → empty summation
        assert_eq!(f.level_sum(&SubsetMask::empty(4), 1), rat(0));
    }

    #[test]
    fn level_sum_lemma_on_harmonic_bases() {
        // f^{(i)}(J) = (−1)^{d−i}·C(d,i)·f̃(J) for harmonic f
        for (n, d) in [(4usize, 1usize), (5, 2)] {
            for f in harmonic_basis(n, d) {
                for j in SubsetMask::all(n) {
                    for i in 0..=d {
                        let sign = if (d - i) % 2 == 0 { rat(1) } else { rat(-1) };
                        let want = sign * binomial(d, i) * f.extend_tilde(&j);
                        assert_eq!(f.level_sum(&j, i), want);
                    }
                }
            }
        }
    }

    #[test]
    fn complement_identity_on_harmonic_bases() {
        // f̃(J) = (−1)^d f̃(Ω∖J), hence f̃(J) = 0 when |J| > n−d
        for (n, d) in [(4usize, 1usize), (5, 2), (6, 3)] {
            for f in harmonic_basis(n, d) {
                for j in SubsetMask::all(n) {
                    let sign = if d % 2 == 0 { rat(1) } else { rat(-1) };
                    assert_eq!(f.extend_tilde(&j), sign * f.extend_tilde(&j.complement()));
                    if j.len() > n - d {
                        assert_eq!(f.extend_tilde(&j), rat(0));
                    }
                }
            }
        }
    }

    #[test]
    fn remark_vanishing_supersets() {
        // for harmonic f and |X| = i < d: Σ_{Z ⊇ X} f(Z) = 0
        for f in harmonic_basis(5, 2) {
            for i in 0..2 {
                for x in SubsetMask::all_of_size(5, i) {
                    let sum: Rational = f
                        .values()
                        .filter(|(z, _)| x.is_subset_of(z))
                        .map(|(_, v)| v.clone())
                        .sum();
                    assert!(sum.is_zero());
                }
            }
        }
    }

    #[test]
    fn symmetrize_examples() {
        // n=3, d=1, indicator of {1} → constant 2 (1!·2!·1)
        let f = WeightFn::indicator(3, &[1]);
        let r = f.symmetrize();
        for (_, v) in r.values() {
            assert_eq!(*v, rat(2));
        }
        assert_eq!(r, symmetrize_brute_force(&f));
        // harmonic f symmetrizes to zero
        for h in harmonic_basis(4, 1) {
            assert!(h.symmetrize().values().all(|(_, v)| v.is_zero()));
        }
        // constant c → constant c·d!(n−d)!·C(n,d) in total, i.e. value c·d!(n−d)!·C(n,d)
        let c = WeightFn::ones(4, 2).scale(&ratio(1, 3));
        let rc = c.symmetrize();
        // d!(n−d)!·Σf = 2!·2!·(6/3) = 8
        assert!(rc.values().all(|(_, v)| *v == rat(8)));
        assert_eq!(rc, symmetrize_brute_force(&c));
    }

    #[test]
    fn weight_json_round_trip() {
        let f = WeightFn::from_degree1(&[rat(1), rat(-1), rat(0), rat(0)]);
        let json = f.to_json();
        assert_eq!(WeightFn::from_json(&json).unwrap(), f);
        // omitted subsets default to zero
        let sparse: serde_json::Value = serde_json::json!({
            "n": 4, "d": 1, "values": [{"set": [1], "value": "1"}]
        });
        let g = WeightFn::from_json(&sparse).unwrap();
        assert_eq!(g, WeightFn::indicator(4, &[1]));
    }
}

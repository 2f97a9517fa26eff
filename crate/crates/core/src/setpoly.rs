//! Set-indexed polynomials: formal sums Σ_S c_S(vars)·[S] over subsets of Ω.
//! These carry the deletion–contraction recursions symbolically, so the
//! weight extension f̃ is applied once at the very end.

use std::collections::BTreeMap;

use num::Zero;

use crate::mvpoly::MVPoly;
use crate::rational::Rational;
use crate::subset::SubsetMask;
use crate::weights::WeightFn;
use crate::Error;

#[derive(Clone, PartialEq, Debug)]
pub struct SetIndexedPoly {
    n: usize,
    terms: BTreeMap<u32, MVPoly>,
}

impl SetIndexedPoly {
    pub fn zero(n: usize) -> Self {
        SetIndexedPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// poly·[∅]
    pub fn from_empty_set(n: usize, poly: MVPoly) -> Self {
        let mut t = SetIndexedPoly::zero(n);
        t.add_term(SubsetMask::empty(n), poly);
        t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (SubsetMask, &MVPoly)> {
        self.terms
            .iter()
            .map(|(bits, poly)| (SubsetMask::new(self.n, *bits), poly))
    }

    pub fn add_term(&mut self, set: SubsetMask, poly: MVPoly) {
        assert_eq!(set.n(), self.n);
        if poly.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry(set.bits())
            .or_insert_with(MVPoly::zero);
        *entry = &*entry + &poly;
        if entry.is_zero() {
            self.terms.remove(&set.bits());
        }
    }

    pub fn add(&self, other: &SetIndexedPoly) -> SetIndexedPoly {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (set, poly) in other.terms() {
            out.add_term(set, poly.clone());
        }
        out
    }

    pub fn sub(&self, other: &SetIndexedPoly) -> SetIndexedPoly {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (set, poly) in other.terms() {
            out.add_term(set, -poly);
        }
        out
    }

    /// Multiplies every coefficient polynomial by `factor`.
    pub fn scale_poly(&self, factor: &MVPoly) -> SetIndexedPoly {
        let mut out = SetIndexedPoly::zero(self.n);
        for (set, poly) in self.terms() {
            out.add_term(set, poly * factor);
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> SetIndexedPoly {
        self.scale_poly(&MVPoly::constant(factor.clone()))
    }

    /// Left-∘ by the singleton {j}: every c_S·[S] becomes c_S·[S ∪ {j}],
    /// summing terms whose index sets merge. The union is idempotent; along
    /// deletion–contraction recursion paths j is never already present.
    pub fn adjoin(&self, j: usize) -> SetIndexedPoly {
        assert!((1..=self.n).contains(&j), "element {j} outside Ω");
        let mut out = SetIndexedPoly::zero(self.n);
        for (set, poly) in self.terms() {
            out.add_term(set.union(&SubsetMask::singleton(self.n, j)), poly.clone());
        }
        out
    }

    /// Σ_S c_S·f̃(S) as an exact polynomial.
    pub fn evaluate(&self, f: &WeightFn) -> Result<MVPoly, Error> {
        if f.n() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: f.n(),
            });
        }
        let mut out = MVPoly::zero();
        for (set, poly) in self.terms() {
            let w = f.extend_tilde(&set);
            if !w.is_zero() {
                out = &out + &poly.scale(&w);
            }
        }
        Ok(out)
    }

    /// Σ_S c_S·f̃(s(S)) where `s` relabels Ω (s[i-1] is the image of i) and
    /// `tilde_table` is f.extend_tilde_table(). Used by label-sum invariants.
    pub fn evaluate_relabelled(&self, s: &[usize], tilde_table: &[Rational]) -> MVPoly {
        assert_eq!(s.len(), self.n);
        let mut out = MVPoly::zero();
        for (bits, poly) in &self.terms {
            let mut image = 0u32;
            for i in 0..self.n {
                if bits >> i & 1 == 1 {
                    image |= 1 << (s[i] - 1);
                }
            }
            let w = &tilde_table[image as usize];
            if !w.is_zero() {
                out = &out + &poly.scale(w);
            }
        }
        out
    }
}

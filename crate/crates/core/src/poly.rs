//! Weighted chromatic, weighted Tutte, and weighted Tutte–Grothendieck
//! polynomials. Each has a direct subset-sum form and a deletion–contraction
//! form; both build a SetIndexedPoly first and apply the weight extension f̃
//! only at the end.

use num::Zero;

use crate::graph::{EdgeKind, EdgeLabel, MinorKind, Multigraph};
use crate::matroid::{ElementKind, RankOracle};
use crate::mvpoly::{MVPoly, Var};
use crate::rational::{rat, Rational};
use crate::setpoly::SetIndexedPoly;
use crate::subset::{SubsetMask, MAX_GROUND};
use crate::weights::WeightFn;
use crate::Error;

/// Parameters (α, β) of the Tutte–Grothendieck recursion; both nonzero.
#[derive(Clone, PartialEq, Debug)]
pub struct TGParams {
    alpha: Rational,
    beta: Rational,
}

impl TGParams {
    pub fn new(alpha: Rational, beta: Rational) -> Result<Self, Error> {
        if alpha.is_zero() || beta.is_zero() {
            return Err(Error::ZeroParameter);
        }
        Ok(TGParams { alpha, beta })
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }
}

fn check_ground(n: usize) -> Result<(), Error> {
    if n > MAX_GROUND {
        return Err(Error::SizeGuard {
            guard: "ground set",
            limit: MAX_GROUND,
        });
    }
    Ok(())
}

fn check_label(n: usize, s: &EdgeLabel) -> Result<(), Error> {
    if s.n() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: s.n(),
        });
    }
    Ok(())
}

/// Σ_{A⊆E} (−1)^{|A|} λ^{k(G_A)} · [s(E∖A)], the chromatic subset sum with
/// f̃ left symbolic.
pub fn chromatic_setpoly(g: &Multigraph, s: &EdgeLabel) -> Result<SetIndexedPoly, Error> {
    let n = g.original_edge_count();
    check_ground(n)?;
    check_label(n, s)?;
    let mut out = SetIndexedPoly::zero(n);
    for a in SubsetMask::all(n) {
        let k = g.component_count(&a);
        let sign = if a.len() % 2 == 0 { rat(1) } else { rat(-1) };
        let poly = MVPoly::var_pow(Var::Lambda, k as u16).scale(&sign);
        out.add_term(s.image(&a.complement()), poly);
    }
    Ok(out)
}

/// Weighted chromatic polynomial χ_f(G(s); λ) by the direct subset sum.
pub fn chromatic_direct(g: &Multigraph, s: &EdgeLabel, f: &WeightFn) -> Result<MVPoly, Error> {
    chromatic_setpoly(g, s)?.evaluate(f)
}

/// The chromatic deletion–contraction recursion, f̃ left symbolic.
pub fn chromatic_recursive_setpoly(
    g: &Multigraph,
    s: &EdgeLabel,
) -> Result<SetIndexedPoly, Error> {
    let n = g.original_edge_count();
    check_ground(n)?;
    check_label(n, s)?;
    chromatic_rec(g, s, n)
}

fn chromatic_rec(g: &Multigraph, s: &EdgeLabel, n: usize) -> Result<SetIndexedPoly, Error> {
    let Some(e) = g.surviving_edges().first().copied() else {
        return Ok(SetIndexedPoly::from_empty_set(
            n,
            MVPoly::var_pow(Var::Lambda, g.vertex_count() as u16),
        ));
    };
    let deleted = chromatic_rec(&g.edge_minor(e, MinorKind::Delete)?, s, n)?;
    let adjoined = deleted.adjoin(s.of(e));
    match g.classify_edge(e) {
        EdgeKind::Loop => Ok(adjoined.sub(&deleted)),
        _ => {
            let contracted = chromatic_rec(&g.edge_minor(e, MinorKind::Contract)?, s, n)?;
            Ok(adjoined.sub(&contracted))
        }
    }
}

/// χ_f by deletion–contraction; agrees with `chromatic_direct`.
pub fn chromatic_recursive(g: &Multigraph, s: &EdgeLabel, f: &WeightFn) -> Result<MVPoly, Error> {
    chromatic_recursive_setpoly(g, s)?.evaluate(f)
}

/// Σ_{A⊆E} (x−1)^{ρ(E)−ρ(A)} (y−1)^{|A|−ρ(A)} · [s(A)], the Tutte subset
/// sum with f̃ left symbolic.
pub fn tutte_setpoly(m: &RankOracle, s: &EdgeLabel) -> Result<SetIndexedPoly, Error> {
    let n = m.original_size();
    check_ground(n)?;
    check_label(n, s)?;
    let xm1 = &MVPoly::var(Var::X) - &MVPoly::one();
    let ym1 = &MVPoly::var(Var::Y) - &MVPoly::one();
    let full_rank = m.full_rank();
    let mut out = SetIndexedPoly::zero(n);
    for a in SubsetMask::all(n) {
        let r = m.rank(&a);
        let poly = &xm1.pow((full_rank - r) as u32) * &ym1.pow((a.len() - r) as u32);
        out.add_term(s.image(&a), poly);
    }
    Ok(out)
}

/// Weighted Tutte polynomial T_f(M(s); x, y) by the direct subset sum.
pub fn tutte_direct(m: &RankOracle, s: &EdgeLabel, f: &WeightFn) -> Result<MVPoly, Error> {
    tutte_setpoly(m, s)?.evaluate(f)
}

/// The Tutte deletion–contraction recursion, f̃ left symbolic.
pub fn tutte_recursive_setpoly(m: &RankOracle, s: &EdgeLabel) -> Result<SetIndexedPoly, Error> {
    let n = m.original_size();
    check_ground(n)?;
    check_label(n, s)?;
    Ok(tutte_rec(m, s, n))
}

fn tutte_rec(m: &RankOracle, s: &EdgeLabel, n: usize) -> SetIndexedPoly {
    let Some(e) = m.ground().elements().next() else {
        return SetIndexedPoly::from_empty_set(n, MVPoly::one());
    };
    let e = e - 1;
    match m.classify(e) {
        ElementKind::Loop => {
            let deleted = tutte_rec(&m.minor(e, MinorKind::Delete), s, n);
            let ym1 = &MVPoly::var(Var::Y) - &MVPoly::one();
            deleted.add(&deleted.adjoin(s.of(e)).scale_poly(&ym1))
        }
        ElementKind::Coloop => {
            let contracted = tutte_rec(&m.minor(e, MinorKind::Contract), s, n);
            let xm1 = &MVPoly::var(Var::X) - &MVPoly::one();
            contracted
                .scale_poly(&xm1)
                .add(&contracted.adjoin(s.of(e)))
        }
        ElementKind::Ordinary => {
            let deleted = tutte_rec(&m.minor(e, MinorKind::Delete), s, n);
            let contracted = tutte_rec(&m.minor(e, MinorKind::Contract), s, n);
            deleted.add(&contracted.adjoin(s.of(e)))
        }
    }
}

/// T_f by deletion–contraction; agrees with `tutte_direct`.
pub fn tutte_recursive(m: &RankOracle, s: &EdgeLabel, f: &WeightFn) -> Result<MVPoly, Error> {
    tutte_recursive_setpoly(m, s)?.evaluate(f)
}

/// The Φ_f recursion in variables X, Y, f̃ left symbolic. Pivots on the
/// lowest surviving original edge index at every step.
pub fn tg_phi_setpoly(
    g: &Multigraph,
    s: &EdgeLabel,
    p: &TGParams,
) -> Result<SetIndexedPoly, Error> {
    let n = g.original_edge_count();
    check_ground(n)?;
    check_label(n, s)?;
    tg_rec(g, s, p, n, false)
}

/// The P_f recursion: each rule of Φ_f with the ∘ factor moved to the
/// opposite summand.
pub fn tg_p_setpoly(g: &Multigraph, s: &EdgeLabel, p: &TGParams) -> Result<SetIndexedPoly, Error> {
    let n = g.original_edge_count();
    check_ground(n)?;
    check_label(n, s)?;
    tg_rec(g, s, p, n, true)
}

fn tg_rec(
    g: &Multigraph,
    s: &EdgeLabel,
    p: &TGParams,
    n: usize,
    swap: bool,
) -> Result<SetIndexedPoly, Error> {
    let Some(e) = g.surviving_edges().first().copied() else {
        return Ok(SetIndexedPoly::from_empty_set(n, MVPoly::one()));
    };
    // (plain, adjoined) summands in the order of the defining rules; `swap`
    // interchanges which one receives the ∘ factor.
    let combine = |plain: SetIndexedPoly,
                   adjoined: SetIndexedPoly,
                   c_adj: &MVPoly,
                   c_plain: &MVPoly| {
        if swap {
            adjoined.scale_poly(c_plain).add(&plain.scale_poly(c_adj))
        } else {
            adjoined.scale_poly(c_adj).add(&plain.scale_poly(c_plain))
        }
    };
    match g.classify_edge(e) {
        EdgeKind::Loop => {
            let deleted = tg_rec(&g.edge_minor(e, MinorKind::Delete)?, s, p, n, swap)?;
            let adjoined = deleted.adjoin(s.of(e));
            let y_minus_alpha =
                &MVPoly::var(Var::BigY) - &MVPoly::constant(p.alpha.clone());
            Ok(combine(
                deleted,
                adjoined,
                &MVPoly::constant(p.alpha.clone()),
                &y_minus_alpha,
            ))
        }
        EdgeKind::Bridge => {
            let deleted = tg_rec(&g.edge_minor(e, MinorKind::Delete)?, s, p, n, swap)?;
            let adjoined = deleted.adjoin(s.of(e));
            let x_minus_beta = &MVPoly::var(Var::BigX) - &MVPoly::constant(p.beta.clone());
            Ok(combine(
                deleted,
                adjoined,
                &x_minus_beta,
                &MVPoly::constant(p.beta.clone()),
            ))
        }
        EdgeKind::Ordinary => {
            let deleted = tg_rec(&g.edge_minor(e, MinorKind::Delete)?, s, p, n, swap)?;
            let contracted = tg_rec(&g.edge_minor(e, MinorKind::Contract)?, s, p, n, swap)?;
            if swap {
                // α·Φ(G∖e) + β·adjoin(s(e), Φ(G/e))
                Ok(deleted
                    .scale(&p.alpha)
                    .add(&contracted.adjoin(s.of(e)).scale(&p.beta)))
            } else {
                // α·adjoin(s(e), Φ(G∖e)) + β·Φ(G/e)
                Ok(deleted
                    .adjoin(s.of(e))
                    .scale(&p.alpha)
                    .add(&contracted.scale(&p.beta)))
            }
        }
    }
}

/// Weighted Tutte–Grothendieck polynomial Φ_f(G(s); X, Y).
pub fn tg_phi(
    g: &Multigraph,
    s: &EdgeLabel,
    f: &WeightFn,
    p: &TGParams,
) -> Result<MVPoly, Error> {
    tg_phi_setpoly(g, s, p)?.evaluate(f)
}

/// The companion polynomial P_f; for harmonic f, Φ_f = (−1)^d P_f.
pub fn tg_p(g: &Multigraph, s: &EdgeLabel, f: &WeightFn, p: &TGParams) -> Result<MVPoly, Error> {
    tg_p_setpoly(g, s, p)?.evaluate(f)
}

fn sign(exp: usize) -> Rational {
    if exp % 2 == 0 {
        rat(1)
    } else {
        rat(-1)
    }
}

/// Checks χ_f(G(s); λ) = (−1)^{ρ(E)+d} λ^{k(G)} T_f(M_G(s); 1−λ, 0) for
/// harmonic f, as exact polynomials.
pub fn verify_theorem_4_3(g: &Multigraph, s: &EdgeLabel, f: &WeightFn) -> Result<bool, Error> {
    if !f.is_harmonic() {
        return Err(Error::HarmonicityRequired);
    }
    let lhs = chromatic_direct(g, s, f)?;
    let m = RankOracle::graphic(g.clone());
    let tutte = tutte_direct(&m, s, f)?;
    let k = g.component_count_full();
    let rho = m.full_rank();
    let bindings = [
        (Var::X, &MVPoly::one() - &MVPoly::var(Var::Lambda)),
        (Var::Y, MVPoly::zero()),
    ]
    .into_iter()
    .collect();
    let rhs = tutte
        .substitute(&bindings)
        .scale(&sign(rho + f.d()));
    let rhs = &rhs * &MVPoly::var_pow(Var::Lambda, k as u16);
    Ok(lhs == rhs)
}

/// Checks Φ_f(G(s); X, Y) = (−1)^d α^{|E|−|V|+k} β^{|V|−k}
/// T_f(M_G(s); X/β, Y/α) for harmonic f, as exact polynomials.
pub fn verify_theorem_5_2(
    g: &Multigraph,
    s: &EdgeLabel,
    f: &WeightFn,
    p: &TGParams,
) -> Result<bool, Error> {
    if !f.is_harmonic() {
        return Err(Error::HarmonicityRequired);
    }
    let lhs = tg_phi(g, s, f, p)?;
    let m = RankOracle::graphic(g.clone());
    let tutte = tutte_direct(&m, s, f)?;
    let k = g.component_count_full();
    let v = g.vertex_count();
    let e = g.original_edge_count();
    let bindings = [
        (Var::X, MVPoly::var(Var::BigX).scale(&(rat(1) / &p.beta))),
        (Var::Y, MVPoly::var(Var::BigY).scale(&(rat(1) / &p.alpha))),
    ]
    .into_iter()
    .collect();
    let scale = sign(f.d()) * (&p.alpha).pow((e + k - v) as i32) * (&p.beta).pow((v - k) as i32);
    let rhs = tutte.substitute(&bindings).scale(&scale);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{example31_label, figure1, triangle};
    use crate::rational::ratio;
    use crate::weights::{harmonic_basis, hom_basis};
    use std::str::FromStr;

    fn parse(text: &str) -> MVPoly {
        MVPoly::from_str(text).unwrap()
    }

    #[test]
    fn chromatic_direct_examples() {
        let g = figure1();
        let s = example31_label();
        let f1 = WeightFn::indicator(4, &[1]);
        assert_eq!(
            chromatic_direct(&g, &s, &f1).unwrap(),
            parse("λ^4 - 3*λ^3 + 2*λ^2")
        );
        let f2 = WeightFn::indicator(4, &[2]);
        assert_eq!(
            chromatic_direct(&g, &s, &f2).unwrap(),
            parse("λ^4 - 3*λ^3 + 3*λ^2 - λ")
        );
    }

    #[test]
    fn chromatic_edgeless() {
        let g = Multigraph::new(3, &[]);
        let s = EdgeLabel::identity(0);
        let f = WeightFn::ones(0, 0);
        assert_eq!(chromatic_direct(&g, &s, &f).unwrap(), parse("λ^3"));
    }

    #[test]
    fn chromatic_recursive_matches_direct() {
        let g = figure1();
        let s = example31_label();
        for f in hom_basis(4, 1) {
            assert_eq!(
                chromatic_recursive(&g, &s, &f).unwrap(),
                chromatic_direct(&g, &s, &f).unwrap()
            );
        }
    }

    #[test]
    fn chromatic_recursive_loop_and_bridge() {
        let f = WeightFn::indicator(1, &[1]);
        let s = EdgeLabel::identity(1);
        let loop_graph = Multigraph::new(1, &[(0, 0)]);
        assert_eq!(
            chromatic_recursive(&loop_graph, &s, &f).unwrap(),
            parse("λ")
        );
        let bridge = Multigraph::new(2, &[(0, 1)]);
        assert_eq!(
            chromatic_recursive(&bridge, &s, &f).unwrap(),
            parse("λ^2")
        );
    }

    #[test]
    fn tutte_direct_examples() {
        let m = RankOracle::graphic(figure1());
        let s = example31_label();
        let f1 = WeightFn::indicator(4, &[1]);
        // (x−1)² + 3(x−1) + 3 + (y−1), the last term from A = E
        assert_eq!(
            tutte_direct(&m, &s, &f1).unwrap(),
            parse("x^2 + x + y")
        );
        let f2 = WeightFn::indicator(4, &[2]);
        // (x−1)² + (x−1)(y−1) + 3(x−1) + 2 + (y−1)
        assert_eq!(
            tutte_direct(&m, &s, &f2).unwrap(),
            parse("x^2 + x*y")
        );
    }

    #[test]
    fn tutte_classical_triangle() {
        let m = RankOracle::graphic(triangle());
        let s = EdgeLabel::identity(3);
        let f = WeightFn::ones(3, 0);
        assert_eq!(tutte_direct(&m, &s, &f).unwrap(), parse("x^2 + x + y"));
    }

    #[test]
    fn tutte_recursive_matches_direct() {
        let m = RankOracle::graphic(figure1());
        let s = example31_label();
        for f in hom_basis(4, 1) {
            assert_eq!(
                tutte_recursive(&m, &s, &f).unwrap(),
                tutte_direct(&m, &s, &f).unwrap()
            );
        }
    }

    #[test]
    fn tutte_recursive_coloop_and_loop() {
        let f = WeightFn::indicator(1, &[1]);
        let s = EdgeLabel::identity(1);
        let coloop = RankOracle::graphic(Multigraph::new(2, &[(0, 1)]));
        // (x−1)·f̃(∅) + f̃({1}) = 1
        assert_eq!(tutte_recursive(&coloop, &s, &f).unwrap(), parse("1"));
        let loop_m = RankOracle::graphic(Multigraph::new(1, &[(0, 0)]));
        assert_eq!(tutte_recursive(&loop_m, &s, &f).unwrap(), parse("y - 1"));
    }

    #[test]
    fn tg_params_reject_zero() {
        assert!(TGParams::new(rat(0), rat(1)).is_err());
        assert!(TGParams::new(rat(1), rat(0)).is_err());
    }

    #[test]
    fn tg_single_bridge() {
        let s = EdgeLabel::identity(1);
        let f = WeightFn::indicator(1, &[1]);
        let g = Multigraph::new(2, &[(0, 1)]);
        let p = TGParams::new(rat(2), rat(3)).unwrap();
        // P = β·f̃({1})
        assert_eq!(tg_p(&g, &s, &f, &p).unwrap(), parse("3"));
        // Φ = (X−β)·f̃({1})
        assert_eq!(tg_phi(&g, &s, &f, &p).unwrap(), parse("X - 3"));
    }

    #[test]
    fn tg_phi_vs_p_harmonic() {
        let g = figure1();
        let s = example31_label();
        let p = TGParams::new(rat(2), rat(3)).unwrap();
        for f in harmonic_basis(4, 1) {
            let phi = tg_phi(&g, &s, &f, &p).unwrap();
            let pf = tg_p(&g, &s, &f, &p).unwrap();
            assert_eq!(phi, -&pf, "Φ = (−1)^d P fails for {f:?}");
        }
        // d = 0: the two recursions coincide
        let f0 = WeightFn::ones(4, 0);
        assert_eq!(
            tg_phi(&g, &s, &f0, &p).unwrap(),
            tg_p(&g, &s, &f0, &p).unwrap()
        );
    }

    #[test]
    fn tg_phi_recipe_example_5_1() {
        // α=1, β=−1: λ^{k(G)}·Φ(X→λ−1, Y→0) = χ_f
        let g = figure1();
        let s = example31_label();
        let p = TGParams::new(rat(1), rat(-1)).unwrap();
        let lam_minus_1 = &MVPoly::var(Var::Lambda) - &MVPoly::one();
        for f in harmonic_basis(4, 1) {
            let phi = tg_phi(&g, &s, &f, &p).unwrap();
            let bindings = [
                (Var::BigX, lam_minus_1.clone()),
                (Var::BigY, MVPoly::zero()),
            ]
            .into_iter()
            .collect();
            let lhs = &phi.substitute(&bindings)
                * &MVPoly::var_pow(Var::Lambda, g.component_count_full() as u16);
            assert_eq!(lhs, chromatic_direct(&g, &s, &f).unwrap());
        }
    }

    #[test]
    fn theorem_4_3_holds() {
        let g = figure1();
        let s = example31_label();
        let f = WeightFn::from_degree1(&[rat(1), rat(-1), rat(0), rat(0)]);
        assert!(verify_theorem_4_3(&g, &s, &f).unwrap());
        // non-harmonic weight is rejected
        let bad = WeightFn::indicator(4, &[1]);
        assert!(matches!(
            verify_theorem_4_3(&g, &s, &bad),
            Err(Error::HarmonicityRequired)
        ));
    }

    #[test]
    fn theorem_5_2_holds() {
        let g = figure1();
        let s = example31_label();
        let p = TGParams::new(ratio(5, 3), ratio(-7, 2)).unwrap();
        for f in harmonic_basis(4, 1) {
            assert!(verify_theorem_5_2(&g, &s, &f, &p).unwrap());
        }
        for f in harmonic_basis(4, 2) {
            assert!(verify_theorem_5_2(&g, &s, &f, &p).unwrap());
        }
    }

    #[test]
    fn degree_bounds() {
        let g = figure1();
        let s = example31_label();
        let m = RankOracle::graphic(g.clone());
        for f in hom_basis(4, 2) {
            let chi = chromatic_direct(&g, &s, &f).unwrap();
            assert!(chi.degree_in(Var::Lambda) as usize <= g.vertex_count());
            let t = tutte_direct(&m, &s, &f).unwrap();
            assert!(t.total_degree() as usize <= g.original_edge_count());
        }
    }
}

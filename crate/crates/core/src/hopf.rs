//! Bialgebras and Hopf algebras: antipode solving and verification, duals,
//! the adjoint action and the cocommutativity class.

use crate::error::Error;
use crate::linalg::{dual_pair, is_invertible, solve_linear, swap, Morphism, PivotOrder, Space};
use crate::report::LawReport;
use crate::scalar::Scalar;
use crate::structures::{
    check_algebra, check_coalgebra, check_module, convolution, convolution_unit,
    is_coalgebra_morphism, tensor_coalgebra, Algebra, Coalgebra, ModuleStr,
};

/// An algebra and a coalgebra on the same space whose structure maps are
/// compatible (checkable via [`check_bialgebra`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bialgebra<S: Scalar> {
    pub alg: Algebra<S>,
    pub coalg: Coalgebra<S>,
}

impl<S: Scalar> Bialgebra<S> {
    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn space(&self) -> &Space {
        &self.alg.space
    }

    pub fn id(&self) -> Morphism<S> {
        self.alg.id()
    }

    pub fn check_shapes(&self) -> Result<(), Error> {
        self.alg.check_shapes()?;
        self.coalg.check_shapes()?;
        if self.alg.dim() != self.coalg.dim() {
            return Err(Error::ShapeMismatch(
                "algebra and coalgebra live on different spaces".into(),
            ));
        }
        Ok(())
    }
}

/// A bialgebra together with its antipode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra<S: Scalar> {
    pub bi: Bialgebra<S>,
    pub antipode: Morphism<S>,
}

impl<S: Scalar> HopfAlgebra<S> {
    pub fn dim(&self) -> usize {
        self.bi.dim()
    }

    pub fn space(&self) -> &Space {
        self.bi.space()
    }

    pub fn alg(&self) -> &Algebra<S> {
        &self.bi.alg
    }

    pub fn coalg(&self) -> &Coalgebra<S> {
        &self.bi.coalg
    }

    pub fn unit(&self) -> &Morphism<S> {
        &self.bi.alg.unit
    }

    pub fn prod(&self) -> &Morphism<S> {
        &self.bi.alg.prod
    }

    pub fn counit(&self) -> &Morphism<S> {
        &self.bi.coalg.counit
    }

    pub fn coprod(&self) -> &Morphism<S> {
        &self.bi.coalg.coprod
    }

    pub fn id(&self) -> Morphism<S> {
        self.bi.id()
    }

    /// The regular module `(H, μ)`.
    pub fn regular_module(&self) -> ModuleStr<S> {
        ModuleStr {
            carrier: self.space().clone(),
            action: self.prod().clone(),
            over: self.alg().clone(),
        }
    }

    /// The trivial module `(K, ε ⊗ K)`.
    pub fn trivial_module(&self) -> ModuleStr<S> {
        ModuleStr {
            carrier: Space::unit(),
            action: self.counit().clone(),
            over: self.alg().clone(),
        }
    }
}

pub fn is_commutative<S: Scalar>(a: &Algebra<S>) -> bool {
    swap::<S>(&a.space, &a.space).then(&a.prod) == a.prod
}

pub fn is_cocommutative<S: Scalar>(c: &Coalgebra<S>) -> bool {
    c.coprod.then(&swap::<S>(&c.space, &c.space)) == c.coprod
}

/// Algebra, coalgebra and compatibility laws of a bialgebra: the unit and
/// product must be coalgebra morphisms.
pub fn check_bialgebra<S: Scalar>(b: &Bialgebra<S>) -> Result<LawReport, Error> {
    b.check_shapes()?;
    let mut report = check_algebra(&b.alg)?;
    report.merge_prefixed("", check_coalgebra(&b.coalg)?);
    let (eta, mu) = (&b.alg.unit, &b.alg.prod);
    let (eps, delta) = (&b.coalg.counit, &b.coalg.coprod);
    let id = b.id();
    let idk = Morphism::identity(&Space::unit());
    report.check_eq("counit-unit", &eta.then(eps), &idk);
    report.check_eq("coprod-unit", &eta.then(delta), &eta.tensor(eta));
    report.check_eq("counit-mult", &mu.then(eps), &eps.tensor(eps));
    let mid = id.tensor(&swap(b.space(), b.space())).tensor(&id);
    report.check_eq(
        "coprod-mult",
        &mu.then(delta),
        &delta.tensor(delta).then(&mid).then(&mu.tensor(mu)),
    );
    Ok(report)
}

/// Solves the convolution system `λ ∗ id = η∘ε` for the antipode by exact
/// Gaussian elimination over the `n²` unknown entries, then verifies both
/// one-sided identities (solving one side alone is insufficient in general).
///
/// Returns [`Error::NoAntipode`] when the system is inconsistent or the
/// candidate fails the right-sided identity, which signals that the
/// bialgebra is not Hopf. Callers are expected to have validated the
/// bialgebra laws beforehand.
pub fn solve_antipode<S: Scalar>(b: &Bialgebra<S>) -> Result<HopfAlgebra<S>, Error> {
    solve_antipode_with(b, PivotOrder::First)
}

/// [`solve_antipode`] with an explicit pivoting order; both orders must
/// yield the same matrix (the convolution inverse is unique).
pub fn solve_antipode_with<S: Scalar>(
    b: &Bialgebra<S>,
    order: PivotOrder,
) -> Result<HopfAlgebra<S>, Error> {
    b.check_shapes()?;
    let n = b.dim();
    let delta = &b.coalg.coprod;
    let mu = &b.alg.prod;
    let e = convolution_unit(&b.coalg, &b.alg);

    // Unknown x_{r*n+p} = S[r][p]; equation (s, j):
    //   sum_{p,q,r} delta[(p,q), j] * mu[s, (r,q)] * S[r][p] = e[s, j]
    let mut coeffs = vec![vec![S::zero(); n * n]; n * n];
    let mut rhs = vec![S::zero(); n * n];
    for s in 0..n {
        for j in 0..n {
            let eq = s * n + j;
            rhs[eq] = e.get(s, j).clone();
            for p in 0..n {
                for q in 0..n {
                    let d = delta.get(p * n + q, j);
                    if d.is_zero() {
                        continue;
                    }
                    for r in 0..n {
                        let m = mu.get(s, r * n + q);
                        if m.is_zero() {
                            continue;
                        }
                        let u = r * n + p;
                        coeffs[eq][u] = coeffs[eq][u].add(&d.mul(m));
                    }
                }
            }
        }
    }

    let x = solve_linear(&coeffs, &rhs, order).ok_or(Error::NoAntipode)?;
    let antipode = Morphism::new(b.space().clone(), b.space().clone(), x);

    let id = b.id();
    let left = convolution(&antipode, &id, &b.coalg, &b.alg)?;
    let right = convolution(&id, &antipode, &b.coalg, &b.alg)?;
    if left != e || right != e {
        return Err(Error::NoAntipode);
    }
    Ok(HopfAlgebra { bi: b.clone(), antipode })
}

/// The full Hopf law suite: bialgebra laws, both antipode identities, the
/// anti(co)multiplicativity of the antipode, unit/counit preservation, and
/// involutivity whenever the commutative/cocommutative flags are detected.
pub fn check_hopf<S: Scalar>(h: &HopfAlgebra<S>) -> Result<LawReport, Error> {
    let mut report = check_bialgebra(&h.bi)?;
    let n = h.dim();
    if h.antipode.rows() != n || h.antipode.cols() != n {
        return Err(Error::ShapeMismatch(format!(
            "antipode must be {n}x{n}, found {}x{}",
            h.antipode.rows(),
            h.antipode.cols()
        )));
    }
    let id = h.id();
    let lam = &h.antipode;
    let e = convolution_unit(h.coalg(), h.alg());
    let c = swap(h.space(), h.space());

    report.check_eq("antipode-left", &convolution(lam, &id, h.coalg(), h.alg())?, &e);
    report.check_eq("antipode-right", &convolution(&id, lam, h.coalg(), h.alg())?, &e);
    report.check_eq(
        "a-antip1",
        &h.prod().then(lam),
        &lam.tensor(lam).then(&c).then(h.prod()),
    );
    report.check_eq(
        "a-antip2",
        &lam.then(h.coprod()),
        &h.coprod().then(&c).then(&lam.tensor(lam)),
    );
    report.check_eq("antipode-unit", &h.unit().then(lam), h.unit());
    report.check_eq("antipode-counit", &lam.then(h.counit()), h.counit());
    if is_commutative(h.alg()) || is_cocommutative(h.coalg()) {
        report.check_eq("lambdasquareid", &lam.then(lam), &id);
    }
    Ok(report)
}

/// The dual Hopf algebra on the dual basis.
///
/// With the dual-basis identification the structure maps are the
/// transposes of the originals (unit ↔ counit, product ↔ coproduct), which
/// is exactly what the evaluation/coevaluation composites of the dual pair
/// produce; the composite route is kept as a test oracle. Taking the dual
/// twice therefore returns the original maps entry for entry.
pub fn dual_hopf<S: Scalar>(h: &HopfAlgebra<S>) -> HopfAlgebra<S> {
    let hstar = h.space().dual();
    let unit = h.counit().dualized().with_spaces(hstar.clone(), Space::unit());
    let counit = h.unit().dualized().with_spaces(Space::unit(), hstar.clone());
    let prod = h.coprod().dualized().with_spaces(hstar.clone(), hstar.tensor(&hstar));
    let coprod = h.prod().dualized().with_spaces(hstar.tensor(&hstar), hstar.clone());
    let antipode = h.antipode.dualized().with_spaces(hstar.clone(), hstar.clone());
    HopfAlgebra {
        bi: Bialgebra {
            alg: Algebra { space: hstar.clone(), unit, prod },
            coalg: Coalgebra { space: hstar, counit, coprod },
        },
        antipode,
    }
}

/// The adjoint action `φ_ad = μ ∘ (μ⊗λ) ∘ (H⊗c_{H,H}) ∘ (δ⊗H)`, returned
/// as the module `(H, φ_ad)`.
pub fn adjoint_action<S: Scalar>(h: &HopfAlgebra<S>) -> ModuleStr<S> {
    let id = h.id();
    let c = swap(h.space(), h.space());
    let action = h
        .coprod()
        .tensor(&id)
        .then(&id.tensor(&c))
        .then(&h.prod().tensor(&h.antipode))
        .then(h.prod());
    ModuleStr { carrier: h.space().clone(), action, over: h.alg().clone() }
}

/// Whether the module `(M, φ)` belongs to the cocommutativity class of `h`:
///
/// `(φ⊗H) ∘ (H⊗c_{H,M}) ∘ (δ⊗M) = (φ⊗H) ∘ (H⊗c_{H,M}) ∘ ((c∘δ)⊗M)`.
///
/// The equivalent one-legged form (acting on the right leg of the
/// coproduct instead) is evaluated independently; the two answers must
/// agree by the symmetry of the ambient category, so a disagreement is an
/// implementation bug.
pub fn cc_class_check<S: Scalar>(m: &ModuleStr<S>, h: &HopfAlgebra<S>) -> Result<bool, Error> {
    if m.over != *h.alg() {
        return Err(Error::ShapeMismatch("module is not over the given Hopf algebra".into()));
    }
    let idh = h.id();
    let idm = Morphism::identity(&m.carrier);
    let chh = swap::<S>(h.space(), h.space());
    let chm = swap::<S>(h.space(), &m.carrier);
    let delta = h.coprod();
    let cdelta = delta.then(&chh);

    let tail = idh.tensor(&chm).then(&m.action.tensor(&idh));
    let primary = delta.tensor(&idm).then(&tail) == cdelta.tensor(&idm).then(&tail);

    let tail2 = idh.tensor(&m.action);
    let secondary = delta.tensor(&idm).then(&tail2) == cdelta.tensor(&idm).then(&tail2);

    assert_eq!(primary, secondary, "the two cocommutativity-class forms must agree");
    Ok(primary)
}

/// Cross-checks that the adjoint action is a coalgebra morphism exactly
/// when `(H, φ_ad)` lies in the cocommutativity class of `H`.
///
/// Both sides are computed independently; a `false` return signals an
/// implementation bug, not a property of `h`. Requires an invertible
/// antipode.
pub fn check_adjoint_cc_iff<S: Scalar>(h: &HopfAlgebra<S>) -> Result<bool, Error> {
    if !is_invertible(&h.antipode) {
        return Err(Error::AntipodeNotInvertible);
    }
    let ad = adjoint_action(h);
    let from = tensor_coalgebra(h.coalg(), h.coalg());
    let coalg_morphism = is_coalgebra_morphism(&ad.action, &from, h.coalg())?;
    let cc = cc_class_check(&ad, h)?;
    Ok(coalg_morphism == cc)
}

/// The literal evaluation/coevaluation composites for the dual Hopf
/// structure maps. Quadratic-size intermediates make this the slow route;
/// it exists so tests can confirm the transposes in [`dual_hopf`] agree
/// with the composites.
pub fn dual_hopf_via_adjunction<S: Scalar>(h: &HopfAlgebra<S>) -> HopfAlgebra<S> {
    let hstar = h.space().dual();
    let (coev, eval) = dual_pair::<S>(h.space());
    let id = h.id();
    let ids = Morphism::identity(&hstar);
    let idss = ids.tensor(&ids);
    let chh = swap::<S>(h.space(), h.space());

    // unit: (ε ⊗ H*) ∘ coev
    let unit = coev.then(&h.counit().tensor(&ids));
    // counit: eval ∘ (H* ⊗ η)
    let counit = ids.tensor(h.unit()).then(&eval);
    // prod: ((eval ∘ (H* ⊗ eval ⊗ H)) ⊗ H*) ∘ (H*⊗H* ⊗ ((c∘δ ⊗ H*) ∘ coev))
    let cdelta = h.coprod().then(&chh);
    let piece = coev.then(&cdelta.tensor(&ids));
    let pairing4 = ids.tensor(&eval).tensor(&id).then(&eval);
    let prod = idss.tensor(&piece).then(&pairing4.tensor(&ids));
    // coprod: ((eval ∘ (H* ⊗ (μ∘c))) ⊗ H*⊗H*) ∘ (H* ⊗ ((H ⊗ coev ⊗ H*) ∘ coev))
    let mc = chh.then(h.prod());
    let piece = coev.then(&id.tensor(&coev).tensor(&ids));
    let pairing3 = ids.tensor(&mc).then(&eval);
    let coprod = ids.tensor(&piece).then(&pairing3.tensor(&idss));
    // antipode: ((eval ∘ (H* ⊗ λ)) ⊗ H*) ∘ (H* ⊗ coev)
    let pairing_lam = ids.tensor(&h.antipode).then(&eval);
    let antipode = ids.tensor(&coev).then(&pairing_lam.tensor(&ids));

    HopfAlgebra {
        bi: Bialgebra {
            alg: Algebra {
                space: hstar.clone(),
                unit: unit.with_spaces(hstar.clone(), Space::unit()),
                prod: prod.with_spaces(hstar.clone(), hstar.tensor(&hstar)),
            },
            coalg: Coalgebra {
                space: hstar.clone(),
                counit: counit.with_spaces(Space::unit(), hstar.clone()),
                coprod: coprod.with_spaces(hstar.tensor(&hstar), hstar.clone()),
            },
        },
        antipode: antipode.with_spaces(hstar.clone(), hstar),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    fn r(n: i64) -> Rat {
        Rat::new(n, 1)
    }

    /// Group algebra of the cyclic group written out by hand from the
    /// addition table mod n.
    fn cyclic_bialgebra(n: usize) -> Bialgebra<Rat> {
        let space = Space::new(n);
        let unit = Morphism::from_fn(space.clone(), Space::unit(), |r_, _| {
            if r_ == 0 { Rat::new(1, 1) } else { Rat::new(0, 1) }
        });
        let prod = Morphism::from_fn(space.clone(), Space::new(n * n), |s, col| {
            let (i, j) = (col / n, col % n);
            if s == (i + j) % n { Rat::new(1, 1) } else { Rat::new(0, 1) }
        });
        let counit = Morphism::from_fn(Space::unit(), space.clone(), |_, _| Rat::new(1, 1));
        let coprod = Morphism::from_fn(Space::new(n * n), space.clone(), |row, j| {
            if row == j * n + j { Rat::new(1, 1) } else { Rat::new(0, 1) }
        });
        Bialgebra {
            alg: Algebra { space: space.clone(), unit, prod },
            coalg: Coalgebra { space, counit, coprod },
        }
    }

    #[test]
    fn antipode_of_c3_is_inversion() {
        let b = cyclic_bialgebra(3);
        assert!(check_bialgebra(&b).unwrap().passed());
        let h = solve_antipode(&b).unwrap();
        let expected = Morphism::new(
            Space::new(3),
            Space::new(3),
            vec![r(1), r(0), r(0), r(0), r(0), r(1), r(0), r(1), r(0)],
        );
        assert_eq!(h.antipode, expected);
        assert!(check_hopf(&h).unwrap().passed());
    }

    #[test]
    fn antipode_unique_across_pivot_orders() {
        for n in 1..=6 {
            let b = cyclic_bialgebra(n);
            let first = solve_antipode_with(&b, PivotOrder::First).unwrap();
            let last = solve_antipode_with(&b, PivotOrder::Last).unwrap();
            assert_eq!(first.antipode, last.antipode);
        }
    }

    #[test]
    fn dim1_bialgebra_has_trivial_antipode() {
        let b = cyclic_bialgebra(1);
        let h = solve_antipode(&b).unwrap();
        assert_eq!(h.antipode.entries(), &[Rat::new(1, 1)]);
    }

    /// Monoid algebra of {1, x} with x·x = x and group-like coproduct:
    /// a bialgebra whose identity has no convolution inverse.
    fn idempotent_monoid_bialgebra() -> Bialgebra<Rat> {
        let space = Space::new(2);
        let unit = Morphism::new(space.clone(), Space::unit(), vec![r(1), r(0)]);
        let prod = Morphism::new(
            space.clone(),
            Space::new(4),
            vec![
                r(1), r(0), r(0), r(0), // 1·1 = 1
                r(0), r(1), r(1), r(1), // 1·x = x·1 = x·x = x
            ],
        );
        let counit = Morphism::new(Space::unit(), space.clone(), vec![r(1), r(1)]);
        let coprod = Morphism::new(
            Space::new(4),
            space.clone(),
            vec![r(1), r(0), r(0), r(0), r(0), r(0), r(0), r(1)],
        );
        Bialgebra {
            alg: Algebra { space: space.clone(), unit, prod },
            coalg: Coalgebra { space, counit, coprod },
        }
    }

    #[test]
    fn idempotent_monoid_has_no_antipode() {
        let b = idempotent_monoid_bialgebra();
        assert!(check_bialgebra(&b).unwrap().passed());
        assert_eq!(solve_antipode(&b), Err(Error::NoAntipode));
    }

    #[test]
    fn wrong_antipode_fails_the_identity() {
        let b = cyclic_bialgebra(3);
        let wrong = HopfAlgebra { antipode: b.id(), bi: b };
        let report = check_hopf(&wrong).unwrap();
        assert!(!report.law("antipode-left").unwrap().passed);
    }

    #[test]
    fn commutativity_flags() {
        let b = cyclic_bialgebra(4);
        assert!(is_commutative(&b.alg));
        assert!(is_cocommutative(&b.coalg));
        let h = solve_antipode(&b).unwrap();
        let report = check_hopf(&h).unwrap();
        assert!(report.law("lambdasquareid").unwrap().passed);
    }

    #[test]
    fn dual_of_dim1_is_itself() {
        let h = solve_antipode(&cyclic_bialgebra(1)).unwrap();
        let d = dual_hopf(&h);
        assert_eq!(d.prod(), h.prod());
        assert_eq!(d.antipode, h.antipode);
    }

    #[test]
    fn dual_of_c2_passes_and_is_bicommutative() {
        let h = solve_antipode(&cyclic_bialgebra(2)).unwrap();
        let d = dual_hopf(&h);
        assert!(check_hopf(&d).unwrap().passed());
        assert!(is_commutative(d.alg()));
        assert!(is_cocommutative(d.coalg()));
    }

    #[test]
    fn double_dual_is_literal_identity() {
        for n in 1..=4 {
            let h = solve_antipode(&cyclic_bialgebra(n)).unwrap();
            let dd = dual_hopf(&dual_hopf(&h));
            assert_eq!(dd.prod(), h.prod());
            assert_eq!(dd.coprod(), h.coprod());
            assert_eq!(dd.unit(), h.unit());
            assert_eq!(dd.counit(), h.counit());
            assert_eq!(dd.antipode, h.antipode);
        }
    }

    #[test]
    fn dual_pairing_transposes_structure_constants() {
        // ⟨μ*(f⊗g), x⟩ = ⟨f⊗g, δ(x)⟩: the dual product matrix is the
        // transpose of the coproduct matrix.
        let h = solve_antipode(&cyclic_bialgebra(3)).unwrap();
        let d = dual_hopf(&h);
        for k in 0..3 {
            for col in 0..9 {
                assert_eq!(d.prod().get(k, col), h.coprod().get(col, k));
            }
        }
    }

    #[test]
    fn adjoint_action_of_abelian_group_is_trivial() {
        // Conjugation in an abelian group fixes everything: φ_ad = ε ⊗ id.
        let h = solve_antipode(&cyclic_bialgebra(3)).unwrap();
        let ad = adjoint_action(&h);
        let expected = h.counit().tensor(&h.id());
        assert_eq!(ad.action, expected);
        assert!(check_module(&ad).unwrap().passed());
    }

    #[test]
    fn cc_class_trivial_and_cocommutative_cases() {
        let h = solve_antipode(&cyclic_bialgebra(4)).unwrap();
        // Any module over a cocommutative Hopf algebra is in the class.
        assert!(cc_class_check(&h.regular_module(), &h).unwrap());
        // The trivial action is in the class over any Hopf algebra.
        let d = dual_hopf(&h);
        assert!(cc_class_check(&d.trivial_module(), &d).unwrap());
    }

    #[test]
    fn adjoint_cc_iff_on_small_groups() {
        for n in 1..=4 {
            let h = solve_antipode(&cyclic_bialgebra(n)).unwrap();
            assert!(check_adjoint_cc_iff(&h).unwrap());
        }
    }

    #[test]
    fn dual_via_adjunction_matches_transposes() {
        for n in 1..=4 {
            let h = solve_antipode(&cyclic_bialgebra(n)).unwrap();
            let fast = dual_hopf(&h);
            let slow = dual_hopf_via_adjunction(&h);
            assert_eq!(fast.unit(), slow.unit());
            assert_eq!(fast.counit(), slow.counit());
            assert_eq!(fast.prod(), slow.prod());
            assert_eq!(fast.coprod(), slow.coprod());
            assert_eq!(fast.antipode, slow.antipode);
        }
    }
}

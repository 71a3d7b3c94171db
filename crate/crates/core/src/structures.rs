//! Algebras, coalgebras, modules, comodules, the convolution monoid and
//! tensor-product constructions, with exact law checkers.
//!
//! Constructors never validate laws; validation is always an explicit
//! call, so negative tests can build deliberately broken structures.

use crate::error::Error;
use crate::linalg::{swap, Morphism, Space};
use crate::report::LawReport;
use crate::scalar::Scalar;

/// An algebra `(A, η, μ)`: unit `η: K → A` and product `μ: A⊗A → A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra<S: Scalar> {
    pub space: Space,
    pub unit: Morphism<S>,
    pub prod: Morphism<S>,
}

/// A coalgebra `(C, ε, δ)`: counit `ε: C → K` and coproduct `δ: C → C⊗C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra<S: Scalar> {
    pub space: Space,
    pub counit: Morphism<S>,
    pub coprod: Morphism<S>,
}

/// A left module `(M, φ)` over an algebra: action `φ: A⊗M → M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleStr<S: Scalar> {
    pub carrier: Space,
    pub action: Morphism<S>,
    pub over: Algebra<S>,
}

/// A right comodule `(M, ρ)` over a coalgebra: coaction `ρ: M → M⊗C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleStr<S: Scalar> {
    pub carrier: Space,
    pub coaction: Morphism<S>,
    pub over: Coalgebra<S>,
}

fn expect_shape<S: Scalar>(
    m: &Morphism<S>,
    cod: usize,
    dom: usize,
    what: &str,
) -> Result<(), Error> {
    if m.rows() != cod || m.cols() != dom {
        return Err(Error::ShapeMismatch(format!(
            "{what} must be {cod}x{dom}, found {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

impl<S: Scalar> Algebra<S> {
    pub fn dim(&self) -> usize {
        self.space.dim
    }

    pub fn check_shapes(&self) -> Result<(), Error> {
        let n = self.dim();
        expect_shape(&self.unit, n, 1, "unit")?;
        expect_shape(&self.prod, n, n * n, "prod")
    }

    pub fn id(&self) -> Morphism<S> {
        Morphism::identity(&self.space)
    }
}

impl<S: Scalar> Coalgebra<S> {
    pub fn dim(&self) -> usize {
        self.space.dim
    }

    pub fn check_shapes(&self) -> Result<(), Error> {
        let n = self.dim();
        expect_shape(&self.counit, 1, n, "counit")?;
        expect_shape(&self.coprod, n * n, n, "coprod")
    }

    pub fn id(&self) -> Morphism<S> {
        Morphism::identity(&self.space)
    }
}

/// Unit and associativity laws of an algebra, each as an exact matrix equality.
pub fn check_algebra<S: Scalar>(a: &Algebra<S>) -> Result<LawReport, Error> {
    a.check_shapes()?;
    let id = a.id();
    let mut report = LawReport::new();
    report.check_eq("unit-left", &a.unit.tensor(&id).then(&a.prod), &id);
    report.check_eq("unit-right", &id.tensor(&a.unit).then(&a.prod), &id);
    report.check_eq(
        "assoc",
        &a.prod.tensor(&id).then(&a.prod),
        &id.tensor(&a.prod).then(&a.prod),
    );
    Ok(report)
}

/// Counit and coassociativity laws of a coalgebra.
pub fn check_coalgebra<S: Scalar>(c: &Coalgebra<S>) -> Result<LawReport, Error> {
    c.check_shapes()?;
    let id = c.id();
    let mut report = LawReport::new();
    report.check_eq("counit-left", &c.coprod.then(&c.counit.tensor(&id)), &id);
    report.check_eq("counit-right", &c.coprod.then(&id.tensor(&c.counit)), &id);
    report.check_eq(
        "coassoc",
        &c.coprod.then(&c.coprod.tensor(&id)),
        &c.coprod.then(&id.tensor(&c.coprod)),
    );
    Ok(report)
}

/// The convolution product `f ∗ g = μ_A ∘ (f⊗g) ∘ δ_C` of two morphisms
/// `C → A`.
pub fn convolution<S: Scalar>(
    f: &Morphism<S>,
    g: &Morphism<S>,
    c: &Coalgebra<S>,
    a: &Algebra<S>,
) -> Result<Morphism<S>, Error> {
    let (n, m) = (c.dim(), a.dim());
    expect_shape(f, m, n, "convolution lhs")?;
    expect_shape(g, m, n, "convolution rhs")?;
    Ok(c.coprod.then(&f.tensor(g)).then(&a.prod))
}

/// The unit of the convolution monoid: `η_A ∘ ε_C`.
pub fn convolution_unit<S: Scalar>(c: &Coalgebra<S>, a: &Algebra<S>) -> Morphism<S> {
    c.counit.then(&a.unit)
}

/// Module laws: the action respects unit and product of the base algebra.
pub fn check_module<S: Scalar>(m: &ModuleStr<S>) -> Result<LawReport, Error> {
    m.over.check_shapes()?;
    let (n, d) = (m.over.dim(), m.carrier.dim);
    expect_shape(&m.action, d, n * d, "action")?;
    let ida = m.over.id();
    let idm = Morphism::identity(&m.carrier);
    let mut report = LawReport::new();
    report.check_eq("actioneta", &m.over.unit.tensor(&idm).then(&m.action), &idm);
    report.check_eq(
        "actionprod",
        &ida.tensor(&m.action).then(&m.action),
        &m.over.prod.tensor(&idm).then(&m.action),
    );
    Ok(report)
}

/// Comodule laws, dual to [`check_module`].
pub fn check_comodule<S: Scalar>(m: &ComoduleStr<S>) -> Result<LawReport, Error> {
    m.over.check_shapes()?;
    let (n, d) = (m.over.dim(), m.carrier.dim);
    expect_shape(&m.coaction, d * n, d, "coaction")?;
    let idc = m.over.id();
    let idm = Morphism::identity(&m.carrier);
    let mut report = LawReport::new();
    report.check_eq(
        "coaction-counit",
        &m.coaction.then(&idm.tensor(&m.over.counit)),
        &idm,
    );
    report.check_eq(
        "coaction-coassoc",
        &m.coaction.then(&m.coaction.tensor(&idc)),
        &m.coaction.then(&idm.tensor(&m.over.coprod)),
    );
    Ok(report)
}

/// Whether `f: M → N` is a morphism of left modules over the common base
/// algebra: `f ∘ φ_M = φ_N ∘ (A ⊗ f)`.
pub fn is_module_morphism<S: Scalar>(
    f: &Morphism<S>,
    m: &ModuleStr<S>,
    n: &ModuleStr<S>,
) -> Result<bool, Error> {
    if m.over != n.over {
        return Err(Error::ShapeMismatch("modules have different base algebras".into()));
    }
    expect_shape(f, n.carrier.dim, m.carrier.dim, "module morphism")?;
    let lhs = m.action.then(f);
    let rhs = m.over.id().tensor(f).then(&n.action);
    Ok(lhs == rhs)
}

/// Whether `f: A → B` preserves unit and product.
pub fn is_algebra_morphism<S: Scalar>(
    f: &Morphism<S>,
    a: &Algebra<S>,
    b: &Algebra<S>,
) -> Result<bool, Error> {
    expect_shape(f, b.dim(), a.dim(), "algebra morphism")?;
    let units = a.unit.then(f) == b.unit;
    let prods = a.prod.then(f) == f.tensor(f).then(&b.prod);
    Ok(units && prods)
}

/// Whether `g: C → D` preserves counit and coproduct.
pub fn is_coalgebra_morphism<S: Scalar>(
    g: &Morphism<S>,
    c: &Coalgebra<S>,
    d: &Coalgebra<S>,
) -> Result<bool, Error> {
    expect_shape(g, d.dim(), c.dim(), "coalgebra morphism")?;
    let counits = g.then(&d.counit) == c.counit;
    let coprods = g.then(&d.coprod) == c.coprod.then(&g.tensor(g));
    Ok(counits && coprods)
}

/// The tensor-product algebra: `μ_{A⊗B} = (μ_A⊗μ_B) ∘ (A⊗c_{B,A}⊗B)`.
pub fn tensor_algebra<S: Scalar>(a: &Algebra<S>, b: &Algebra<S>) -> Algebra<S> {
    let space = a.space.tensor(&b.space);
    let unit = a.unit.tensor(&b.unit);
    let mid = a.id().tensor(&swap(&b.space, &a.space)).tensor(&b.id());
    let prod = mid.then(&a.prod.tensor(&b.prod));
    Algebra { space, unit, prod }
}

/// The tensor-product coalgebra: `δ_{C⊗D} = (C⊗c_{C,D}⊗D) ∘ (δ_C⊗δ_D)`.
pub fn tensor_coalgebra<S: Scalar>(c: &Coalgebra<S>, d: &Coalgebra<S>) -> Coalgebra<S> {
    let space = c.space.tensor(&d.space);
    let counit = c.counit.tensor(&d.counit);
    let mid = c.id().tensor(&swap(&c.space, &d.space)).tensor(&d.id());
    let coprod = c.coprod.tensor(&d.coprod).then(&mid);
    Coalgebra { space, counit, coprod }
}

/// Block-diagonal direct sum of two modules over the same algebra.
pub fn direct_sum_modules<S: Scalar>(m: &ModuleStr<S>, n: &ModuleStr<S>) -> ModuleStr<S> {
    assert_eq!(m.over, n.over, "direct sum needs a common base algebra");
    let a = m.over.dim();
    let (dm, dn) = (m.carrier.dim, n.carrier.dim);
    let carrier = Space::new(dm + dn);
    // Action on A ⊗ (M ⊕ N): columns indexed by (h, x) with x < dm from M.
    let action = Morphism::from_fn(carrier.clone(), Space::new(a * (dm + dn)), |r, col| {
        let h = col / (dm + dn);
        let x = col % (dm + dn);
        if x < dm {
            if r < dm { m.action.get(r, h * dm + x).clone() } else { S::zero() }
        } else if r >= dm {
            n.action.get(r - dm, h * dn + (x - dm)).clone()
        } else {
            S::zero()
        }
    });
    ModuleStr { carrier, action, over: m.over.clone() }
}

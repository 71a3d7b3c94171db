//! Finite-dimensional spaces and exact matrices between them.
//!
//! This is the ambient strict symmetric monoidal category: objects are
//! [`Space`]s, arrows are [`Morphism`]s (dense matrices over an exact
//! field), and the monoidal structure is the Kronecker product with the
//! left factor major. All equalities are exact entrywise comparisons.

use crate::error::Error;
use crate::scalar::Scalar;
use std::fmt;

/// A finite-dimensional vector space, optionally with named basis vectors.
///
/// Equality compares dimensions only; basis names are bookkeeping for
/// serialization and diagnostics, not part of the mathematical object.
#[derive(Clone, Debug)]
pub struct Space {
    pub dim: usize,
    pub basis: Option<Vec<String>>,
}

impl PartialEq for Space {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
    }
}

impl Eq for Space {}

impl Space {
    pub fn new(dim: usize) -> Self {
        Space { dim, basis: None }
    }

    pub fn with_basis(names: Vec<String>) -> Self {
        Space { dim: names.len(), basis: Some(names) }
    }

    /// The unit object `K`.
    pub fn unit() -> Self {
        Space::new(1)
    }

    /// Tensor product of spaces; `dim` is the product of dims.
    ///
    /// Basis vector `(i, j)` gets the flat index `i * other.dim + j`
    /// (left factor major). Every module of this crate uses this single
    /// convention.
    pub fn tensor(&self, other: &Space) -> Space {
        let basis = match (&self.basis, &other.basis) {
            (Some(a), Some(b)) => {
                let mut names = Vec::with_capacity(self.dim * other.dim);
                for x in a {
                    for y in b {
                        names.push(format!("{x}*{y}"));
                    }
                }
                Some(names)
            }
            _ => None,
        };
        Space { dim: self.dim * other.dim, basis }
    }

    /// The dual space: same dimension, basis names suffixed with `*`.
    pub fn dual(&self) -> Space {
        Space {
            dim: self.dim,
            basis: self
                .basis
                .as_ref()
                .map(|names| names.iter().map(|n| format!("{n}*")).collect()),
        }
    }
}

/// An exact matrix with explicit domain and codomain.
///
/// Storage is dense row-major, `cod.dim` rows by `dom.dim` columns; column
/// `j` holds the image of basis vector `j` of the domain. Values are
/// immutable once constructed.
#[derive(Clone, PartialEq, Eq)]
pub struct Morphism<S: Scalar> {
    dom: Space,
    cod: Space,
    entries: Vec<S>,
}

impl<S: Scalar> fmt::Debug for Morphism<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Morphism {}x{} [", self.cod.dim, self.dom.dim)?;
        for r in 0..self.cod.dim {
            let row: Vec<String> = (0..self.dom.dim).map(|c| self.get(r, c).render()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<S: Scalar> Morphism<S> {
    pub fn new(cod: Space, dom: Space, entries: Vec<S>) -> Self {
        assert_eq!(
            entries.len(),
            cod.dim * dom.dim,
            "entry count {} does not match {}x{}",
            entries.len(),
            cod.dim,
            dom.dim
        );
        Morphism { dom, cod, entries }
    }

    pub fn from_fn(cod: Space, dom: Space, f: impl Fn(usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(cod.dim * dom.dim);
        for r in 0..cod.dim {
            for c in 0..dom.dim {
                entries.push(f(r, c));
            }
        }
        Morphism { dom, cod, entries }
    }

    pub fn identity(space: &Space) -> Self {
        Morphism::from_fn(space.clone(), space.clone(), |r, c| {
            if r == c { S::one() } else { S::zero() }
        })
    }

    pub fn zero(cod: Space, dom: Space) -> Self {
        let entries = vec![S::zero(); cod.dim * dom.dim];
        Morphism { dom, cod, entries }
    }

    pub fn dom(&self) -> &Space {
        &self.dom
    }

    pub fn cod(&self) -> &Space {
        &self.cod
    }

    pub fn rows(&self) -> usize {
        self.cod.dim
    }

    pub fn cols(&self) -> usize {
        self.dom.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &S {
        &self.entries[row * self.dom.dim + col]
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    /// `g ∘ self`: apply `self` first, then `g`. Diagram order reads
    /// left to right, which keeps transcription of long composites honest.
    ///
    /// Panics on inner-dimension mismatch; use [`compose`] for the checked
    /// variant.
    pub fn then(&self, g: &Morphism<S>) -> Morphism<S> {
        assert_eq!(
            self.cod.dim, g.dom.dim,
            "composition mismatch: cannot feed a {}-dim codomain into a {}-dim domain",
            self.cod.dim, g.dom.dim
        );
        let rows = g.cod.dim;
        let inner = self.cod.dim;
        let cols = self.dom.dim;
        let mut entries = vec![S::zero(); rows * cols];
        for r in 0..rows {
            for k in 0..inner {
                let gv = g.get(r, k);
                if gv.is_zero() {
                    continue;
                }
                for c in 0..cols {
                    let fv = self.get(k, c);
                    if fv.is_zero() {
                        continue;
                    }
                    let idx = r * cols + c;
                    entries[idx] = entries[idx].add(&gv.mul(fv));
                }
            }
        }
        Morphism { dom: self.dom.clone(), cod: g.cod.clone(), entries }
    }

    /// Kronecker product, left factor major: basis vector `(i, j)` of
    /// `A ⊗ B` has flat index `i * dim(B) + j`.
    pub fn tensor(&self, g: &Morphism<S>) -> Morphism<S> {
        let dom = self.dom.tensor(&g.dom);
        let cod = self.cod.tensor(&g.cod);
        let mut entries = vec![S::zero(); dom.dim * cod.dim];
        for i in 0..self.cod.dim {
            for k in 0..self.dom.dim {
                let fv = self.get(i, k);
                if fv.is_zero() {
                    continue;
                }
                for j in 0..g.cod.dim {
                    for l in 0..g.dom.dim {
                        let gv = g.get(j, l);
                        if gv.is_zero() {
                            continue;
                        }
                        let row = i * g.cod.dim + j;
                        let col = k * g.dom.dim + l;
                        entries[row * dom.dim + col] = fv.mul(gv);
                    }
                }
            }
        }
        Morphism { dom, cod, entries }
    }

    pub fn transpose(&self) -> Morphism<S> {
        Morphism::from_fn(self.dom.clone(), self.cod.clone(), |r, c| self.get(c, r).clone())
    }

    /// Transpose with explicitly dualized endpoint spaces.
    pub fn dualized(&self) -> Morphism<S> {
        let mut t = self.transpose();
        t.dom = self.cod.dual();
        t.cod = self.dom.dual();
        t
    }

    pub fn is_identity(&self) -> bool {
        self.dom.dim == self.cod.dim && *self == Morphism::identity(&self.dom)
    }

    /// Relabels the endpoints without touching entries. The new spaces must
    /// have the same dimensions.
    pub fn with_spaces(&self, cod: Space, dom: Space) -> Morphism<S> {
        assert_eq!(self.cod.dim, cod.dim);
        assert_eq!(self.dom.dim, dom.dim);
        Morphism { dom, cod, entries: self.entries.clone() }
    }

    /// First entry (row, col) at which the two matrices differ, if any.
    /// Shape differences report position (0, 0).
    pub fn first_difference(&self, other: &Morphism<S>) -> Option<(usize, usize)> {
        if self.rows() != other.rows() || self.cols() != other.cols() {
            return Some((0, 0));
        }
        for r in 0..self.rows() {
            for c in 0..self.cols() {
                if self.get(r, c) != other.get(r, c) {
                    return Some((r, c));
                }
            }
        }
        None
    }
}

/// Checked categorical composition `g ∘ f`.
pub fn compose<S: Scalar>(g: &Morphism<S>, f: &Morphism<S>) -> Result<Morphism<S>, Error> {
    if f.cod().dim != g.dom().dim {
        return Err(Error::DimensionMismatch {
            op: "compose",
            detail: format!("cod of f has dim {}, dom of g has dim {}", f.cod().dim, g.dom().dim),
        });
    }
    Ok(f.then(g))
}

/// The monoidal product of arrows; alias for [`Morphism::tensor`].
pub fn tensor<S: Scalar>(f: &Morphism<S>, g: &Morphism<S>) -> Morphism<S> {
    f.tensor(g)
}

/// The symmetry `c_{A,B}: A ⊗ B → B ⊗ A`, a permutation matrix sending
/// flat index `i * dim(B) + j` to `j * dim(A) + i`.
pub fn swap<S: Scalar>(a: &Space, b: &Space) -> Morphism<S> {
    let dom = a.tensor(b);
    let cod = b.tensor(a);
    let mut entries = vec![S::zero(); dom.dim * cod.dim];
    for i in 0..a.dim {
        for j in 0..b.dim {
            let col = i * b.dim + j;
            let row = j * a.dim + i;
            entries[row * dom.dim + col] = S::one();
        }
    }
    Morphism::new(cod, dom, entries)
}

/// Coevaluation and evaluation of the dual pair of `p`:
/// `coev: K → P ⊗ P*` and `eval: P* ⊗ P → K`, built from the dual basis.
///
/// They satisfy the triangular identities
/// `(P ⊗ eval) ∘ (coev ⊗ P) = id_P` and `(eval ⊗ P*) ∘ (P* ⊗ coev) = id_{P*}`.
pub fn dual_pair<S: Scalar>(p: &Space) -> (Morphism<S>, Morphism<S>) {
    let pstar = p.dual();
    let d = p.dim;
    let coev = Morphism::from_fn(p.tensor(&pstar), Space::unit(), |r, _| {
        if r % d == r / d { S::one() } else { S::zero() }
    });
    let eval = Morphism::from_fn(Space::unit(), pstar.tensor(p), |_, c| {
        if c % d == c / d { S::one() } else { S::zero() }
    });
    (coev, eval)
}

/// Which row the elimination picks as pivot among the candidates. Used to
/// confirm that solutions are independent of pivoting order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PivotOrder {
    First,
    Last,
}

/// Solves `A x = b` exactly by Gauss-Jordan elimination.
///
/// Returns `None` when the system is inconsistent. When the solution space
/// is positive-dimensional, free variables are set to zero.
pub fn solve_linear<S: Scalar>(
    a: &[Vec<S>],
    b: &[S],
    order: PivotOrder,
) -> Option<Vec<S>> {
    let n_eq = a.len();
    assert_eq!(n_eq, b.len());
    let n_unk = if n_eq == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<S>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut pivot_col_of_row = Vec::new();
    let mut rank = 0usize;
    for col in 0..n_unk {
        let candidates: Vec<usize> =
            (rank..n_eq).filter(|&r| !m[r][col].is_zero()).collect();
        let pivot = match order {
            PivotOrder::First => candidates.first().copied(),
            PivotOrder::Last => candidates.last().copied(),
        };
        let Some(pivot) = pivot else { continue };
        m.swap(rank, pivot);
        let inv = m[rank][col].inv().expect("pivot is nonzero");
        for c in col..=n_unk {
            m[rank][c] = m[rank][c].mul(&inv);
        }
        for r in 0..n_eq {
            if r == rank || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in col..=n_unk {
                let delta = factor.mul(&m[rank][c]);
                m[r][c] = m[r][c].sub(&delta);
            }
        }
        pivot_col_of_row.push(col);
        rank += 1;
    }

    // Inconsistent if any zero row has nonzero rhs.
    for r in rank..n_eq {
        if !m[r][n_unk].is_zero() {
            return None;
        }
    }

    let mut x = vec![S::zero(); n_unk];
    for (row, &col) in pivot_col_of_row.iter().enumerate() {
        x[col] = m[row][n_unk].clone();
    }
    Some(x)
}

/// Exact rank via row reduction.
pub fn rank<S: Scalar>(m: &Morphism<S>) -> usize {
    let mut rows: Vec<Vec<S>> = (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.get(r, c).clone()).collect())
        .collect();
    let mut rank = 0usize;
    for col in 0..m.cols() {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].inv().expect("pivot nonzero");
        for c in col..m.cols() {
            rows[rank][c] = rows[rank][c].mul(&inv);
        }
        for r in 0..rows.len() {
            if r == rank || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for c in col..m.cols() {
                let delta = factor.mul(&rows[rank][c]);
                rows[r][c] = rows[r][c].sub(&delta);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

pub fn is_invertible<S: Scalar>(m: &Morphism<S>) -> bool {
    m.rows() == m.cols() && rank(m) == m.rows()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    fn space(n: usize) -> Space {
        Space::new(n)
    }

    #[test]
    fn compose_identities() {
        let id2: Morphism<Rat> = Morphism::identity(&space(2));
        assert_eq!(compose(&id2, &id2).unwrap(), id2);
    }

    #[test]
    fn compose_rejects_mismatch() {
        let id2: Morphism<Rat> = Morphism::identity(&space(2));
        let id3: Morphism<Rat> = Morphism::identity(&space(3));
        assert!(matches!(
            compose(&id2, &id3),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn swap_round_trip_is_identity() {
        // swap(2,3) ∘ swap(3,2) = id on 3⊗2; checked by direct multiplication.
        let s23: Morphism<Rat> = swap(&space(2), &space(3));
        let s32: Morphism<Rat> = swap(&space(3), &space(2));
        assert_eq!(compose(&s23, &s32).unwrap(), Morphism::identity(&space(6)));
        assert_eq!(s32.then(&s23), Morphism::identity(&space(6)));
        // swap(2,2) applied twice → id4.
        let s22: Morphism<Rat> = swap(&space(2), &space(2));
        assert_eq!(s22.then(&s22), Morphism::identity(&space(4)));
    }

    #[test]
    fn swap_with_unit_is_identity() {
        let k = Space::unit();
        let a = space(5);
        let s: Morphism<Rat> = swap(&k, &a);
        assert!(s.is_identity());
        let s: Morphism<Rat> = swap(&a, &k);
        assert!(s.is_identity());
    }

    #[test]
    fn tensor_with_unit_identity_is_strict() {
        let f = Morphism::new(
            space(2),
            space(2),
            vec![rat(1, 2), rat(3, 1), rat(0, 1), rat(-5, 7)],
        );
        let id1: Morphism<Rat> = Morphism::identity(&Space::unit());
        assert_eq!(id1.tensor(&f), f);
        assert_eq!(f.tensor(&id1), f);
    }

    #[test]
    fn tensor_of_identities() {
        let id2: Morphism<Rat> = Morphism::identity(&space(2));
        let id3: Morphism<Rat> = Morphism::identity(&space(3));
        assert_eq!(id2.tensor(&id3), Morphism::identity(&space(6)));
    }

    fn seeded_morphism(rows: usize, cols: usize, seed: i64) -> Morphism<Rat> {
        // Small deterministic pseudo-random rationals.
        Morphism::from_fn(space(rows), space(cols), |r, c| {
            let v = (seed * 31 + r as i64 * 7 + c as i64 * 13) % 11 - 5;
            let d = ((seed + r as i64 + 2 * c as i64) % 3).abs() + 1;
            rat(v, d)
        })
    }

    #[test]
    fn swap_naturality_on_random_morphisms() {
        // c ∘ (f⊗g) = (g⊗f) ∘ c for five exact pseudo-random pairs.
        for seed in 0..5 {
            let f = seeded_morphism(2, 3, seed);
            let g = seeded_morphism(3, 2, seed + 17);
            let c_dom: Morphism<Rat> = swap(f.dom(), g.dom());
            let c_cod: Morphism<Rat> = swap(f.cod(), g.cod());
            let lhs = f.tensor(&g).then(&c_cod);
            let rhs = c_dom.then(&g.tensor(&f));
            assert_eq!(lhs, rhs, "naturality failed at seed {seed}");
        }
    }

    #[test]
    fn bifunctoriality() {
        for seed in 0..5 {
            let f1 = seeded_morphism(3, 2, seed);
            let f2 = seeded_morphism(2, 3, seed + 3);
            let g1 = seeded_morphism(2, 2, seed + 5);
            let g2 = seeded_morphism(3, 2, seed + 8);
            let lhs = f1.then(&f2).tensor(&g1.then(&g2));
            let rhs = f1.tensor(&g1).then(&f2.tensor(&g2));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn dual_pair_dim_one() {
        let (coev, eval): (Morphism<Rat>, Morphism<Rat>) = dual_pair(&space(1));
        assert_eq!(coev.entries(), &[Rat::one()]);
        assert_eq!(eval.entries(), &[Rat::one()]);
    }

    #[test]
    fn triangular_identities_dims_1_to_8() {
        for d in 1..=8 {
            let p = space(d);
            let (coev, eval): (Morphism<Rat>, Morphism<Rat>) = dual_pair(&p);
            let idp = Morphism::identity(&p);
            let idps = Morphism::identity(&p.dual());
            let tri1 = coev.tensor(&idp).then(&idp.tensor(&eval));
            assert!(tri1.is_identity(), "triangle 1 failed at dim {d}");
            let tri2 = idps.tensor(&coev).then(&eval.tensor(&idps));
            assert!(tri2.is_identity(), "triangle 2 failed at dim {d}");
        }
    }

    #[test]
    fn solve_linear_unique_solution() {
        // 2x + y = 5, x - y = 1  =>  x = 2, y = 1
        let a = vec![
            vec![rat(2, 1), rat(1, 1)],
            vec![rat(1, 1), rat(-1, 1)],
        ];
        let b = vec![rat(5, 1), rat(1, 1)];
        for order in [PivotOrder::First, PivotOrder::Last] {
            let x = solve_linear(&a, &b, order).unwrap();
            assert_eq!(x, vec![rat(2, 1), rat(1, 1)]);
        }
    }

    #[test]
    fn solve_linear_inconsistent() {
        let a = vec![vec![rat(1, 1), rat(1, 1)], vec![rat(2, 1), rat(2, 1)]];
        let b = vec![rat(1, 1), rat(3, 1)];
        assert!(solve_linear(&a, &b, PivotOrder::First).is_none());
    }

    #[test]
    fn rank_and_invertibility() {
        let m = Morphism::new(
            space(2),
            space(2),
            vec![rat(1, 1), rat(2, 1), rat(2, 1), rat(4, 1)],
        );
        assert_eq!(rank(&m), 1);
        assert!(!is_invertible(&m));
        let id: Morphism<Rat> = Morphism::identity(&space(4));
        assert!(is_invertible(&id));
    }
}

//! q-counital comonads in coalgebra form, their compatible comodules, the
//! dual repair constructions, the Sweedler dictionary, weak corings over a
//! unital base algebra, and the dual hom-set pairing oracle.
//!
//! Everything is the strict mirror of [`crate::monadics`] under transposition;
//! the duality meta-check in the property suite pins that down mechanically.

use crate::error::{Error, Result};
use crate::linmap::LinMap;
use crate::monadics::{OracleReport, QUnitalAlgebra};
use crate::ring::ExactRing;

/// A coassociative coproduct `delta: C -> C (x) C` with an arbitrary
/// quasi-counit `eps: C -> R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QCounitalCoalgebra {
    ring: ExactRing,
    dim: usize,
    delta: LinMap,
    eps: LinMap,
}

/// Dual three-level classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ComonadClass {
    QCounital,
    RCounital,
    WeakComonad,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReportComonad {
    pub coassoc: bool,
    pub counit_regular: bool,
    pub counit_symmetric: bool,
    pub comult_compatible: bool,
    pub classification: ComonadClass,
    pub gamma: LinMap,
    pub gamma_bar: LinMap,
}

impl QCounitalCoalgebra {
    pub fn new(ring: ExactRing, dim: usize, delta: LinMap, eps: LinMap) -> Result<Self> {
        if delta.ring() != ring || eps.ring() != ring {
            return Err(Error::RingMismatch);
        }
        if delta.rows() != dim * dim || delta.cols() != dim {
            return Err(Error::DimMismatch {
                expected: dim * dim * dim,
                got: delta.rows() * delta.cols(),
                context: "coproduct shape (dim^2 x dim)",
            });
        }
        if eps.rows() != 1 || eps.cols() != dim {
            return Err(Error::DimMismatch {
                expected: dim,
                got: eps.rows() * eps.cols(),
                context: "counit shape (1 x dim)",
            });
        }
        let co = QCounitalCoalgebra {
            ring,
            dim,
            delta,
            eps,
        };
        let id = co.id();
        let lhs = LinMap::compose(&LinMap::tensor(&co.delta, &id)?, &co.delta)?;
        let rhs = LinMap::compose(&LinMap::tensor(&id, &co.delta)?, &co.delta)?;
        if lhs != rhs {
            return Err(Error::NotCoassociative);
        }
        Ok(co)
    }

    pub fn ring(&self) -> ExactRing {
        self.ring
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn coproduct(&self) -> &LinMap {
        &self.delta
    }
    pub fn counit(&self) -> &LinMap {
        &self.eps
    }

    fn id(&self) -> LinMap {
        LinMap::identity(self.ring, self.dim)
    }

    /// `gamma = (G eps) . delta`: `c -> c1 eps(c2)`.
    pub fn gamma(&self) -> LinMap {
        LinMap::compose(&LinMap::tensor(&self.id(), &self.eps).unwrap(), &self.delta).unwrap()
    }

    /// `gamma_bar = (eps G) . delta`: `c -> eps(c1) c2`.
    pub fn gamma_bar(&self) -> LinMap {
        LinMap::compose(&LinMap::tensor(&self.eps, &self.id()).unwrap(), &self.delta).unwrap()
    }

    pub fn law_report(&self) -> LawReportComonad {
        let id = self.id();
        let gamma = self.gamma();
        let gamma_bar = self.gamma_bar();
        // eps regular: eps = eps . (G eps) . delta
        let counit_regular = self.eps == LinMap::compose(&self.eps, &gamma).unwrap();
        let counit_symmetric = gamma == gamma_bar;
        // delta compatible: delta = (G eps G) . (delta G) . delta,
        // Sweedler c1 eps(c2) (x) c3
        let mid = LinMap::tensor_all(self.ring, &[&id, &self.eps, &id]).unwrap();
        let dd = LinMap::compose(&LinMap::tensor(&self.delta, &id).unwrap(), &self.delta).unwrap();
        let comult_compatible = self.delta == LinMap::compose(&mid, &dd).unwrap();
        let classification = if counit_regular && comult_compatible {
            if counit_symmetric {
                ComonadClass::WeakComonad
            } else {
                ComonadClass::RCounital
            }
        } else {
            ComonadClass::QCounital
        };
        LawReportComonad {
            coassoc: true,
            counit_regular,
            counit_symmetric,
            comult_compatible,
            classification,
            gamma,
            gamma_bar,
        }
    }

    /// Compatible coproduct `delta~ = (G eps G) . (G delta) . delta`,
    /// Sweedler `c1 (x) eps(c2) c3`; needs a regular counit.
    pub fn delta_tilde(&self) -> Result<QCounitalCoalgebra> {
        if !self.law_report().counit_regular {
            return Err(Error::CounitNotRegular);
        }
        let id = self.id();
        let mid = LinMap::tensor_all(self.ring, &[&id, &self.eps, &id])?;
        let dd = LinMap::compose(&LinMap::tensor(&id, &self.delta)?, &self.delta)?;
        let d_tilde = LinMap::compose(&mid, &dd)?;
        QCounitalCoalgebra::new(self.ring, self.dim, d_tilde, self.eps.clone())
    }

    /// Regular counit `eps~ = eps . (G eps) . delta`; needs a compatible
    /// coproduct.
    pub fn eps_tilde(&self) -> Result<QCounitalCoalgebra> {
        if !self.law_report().comult_compatible {
            return Err(Error::ComultNotCompatible);
        }
        let e_tilde = LinMap::compose(&self.eps, &self.gamma())?;
        QCounitalCoalgebra::new(self.ring, self.dim, self.delta.clone(), e_tilde)
    }

    /// Weak coproduct `delta^`, Sweedler `eps(c1) c2 (x) c3 eps(c4)`; needs
    /// an r-counital input.
    pub fn delta_hat(&self) -> Result<QCounitalCoalgebra> {
        if self.law_report().classification < ComonadClass::RCounital {
            return Err(Error::NotRCounital);
        }
        let id = self.id();
        // delta -> delta G -> delta G G, then hit the outer legs with eps
        let mut acc = self.delta.clone();
        for k in 1..3 {
            let ids: Vec<&LinMap> = std::iter::repeat(&id).take(k).collect();
            let mut factors: Vec<&LinMap> = vec![&self.delta];
            factors.extend(ids);
            let step = LinMap::tensor_all(self.ring, &factors)?;
            acc = LinMap::compose(&step, &acc)?;
        }
        let outer = LinMap::tensor_all(self.ring, &[&self.eps, &id, &id, &self.eps])?;
        let d_hat = LinMap::compose(&outer, &acc)?;
        QCounitalCoalgebra::new(self.ring, self.dim, d_hat, self.eps.clone())
    }

    /// Sweedler criteria evaluated on the basis next to the categorical
    /// flags; item three is reported in both leg orders.
    pub fn coalgebra_dictionary(&self) -> CoalgebraDictionary {
        let report = self.law_report();
        // (1) eps(c) = eps(c1) eps(c2)
        let eps_mult = LinMap::compose(
            &LinMap::tensor(&self.eps, &self.eps).unwrap(),
            &self.delta,
        )
        .unwrap();
        let counit_multiplicative = eps_mult == self.eps;
        // (2) c1 eps(c2) = eps(c1) c2
        let sweedler_symmetric = self.gamma() == self.gamma_bar();
        // (3), middle-leg reading: delta = c1 eps(c2) (x) c3
        let id = self.id();
        let mid = LinMap::tensor_all(self.ring, &[&id, &self.eps, &id]).unwrap();
        let dd =
            LinMap::compose(&LinMap::tensor(&self.delta, &id).unwrap(), &self.delta).unwrap();
        let comult_middle = self.delta == LinMap::compose(&mid, &dd).unwrap();
        // (3), last-leg reading: delta = c1 (x) c2 eps(c3)
        let last = LinMap::tensor_all(self.ring, &[&id, &id, &self.eps]).unwrap();
        let comult_last = self.delta == LinMap::compose(&last, &dd).unwrap();
        CoalgebraDictionary {
            counit_multiplicative,
            sweedler_symmetric,
            comult_middle,
            comult_last,
            counit_regular: report.counit_regular,
            counit_symmetric: report.counit_symmetric,
            comult_compatible: report.comult_compatible,
        }
    }

    /// Transpose dual: algebra with `m = delta^T`, `u = eps^T`.
    pub fn transpose_dual(&self) -> QUnitalAlgebra {
        QUnitalAlgebra::new(
            self.ring,
            self.dim,
            self.delta.transpose(),
            self.eps.transpose(),
        )
        .expect("transpose of a coassociative coproduct is associative")
    }
}

/// Sweedler criteria vs categorical flags on the comonad side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoalgebraDictionary {
    pub counit_multiplicative: bool,
    pub sweedler_symmetric: bool,
    /// `delta = c1 eps(c2) (x) c3` — the reading dual to the verified
    /// `a b = a e b` law; this one drives classification.
    pub comult_middle: bool,
    /// `delta = c1 (x) c2 eps(c3)` — the mirrored reading.
    pub comult_last: bool,
    pub counit_regular: bool,
    pub counit_symmetric: bool,
    pub comult_compatible: bool,
}

impl CoalgebraDictionary {
    pub fn equivalences_hold(&self) -> bool {
        self.counit_multiplicative == self.counit_regular
            && self.sweedler_symmetric == self.counit_symmetric
            && self.comult_middle == self.comult_compatible
    }
}

/// A comodule over a q-counital coalgebra; the coaction law is enforced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoalgebraComodule {
    coalgebra: QCounitalCoalgebra,
    dim: usize,
    upsilon: LinMap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComoduleFlags {
    pub coaction_ok: bool,
    pub compatible: bool,
}

pub fn comodule_flags(
    coalgebra: &QCounitalCoalgebra,
    dim: usize,
    upsilon: &LinMap,
) -> Result<ComoduleFlags> {
    let c = coalgebra.dim();
    if upsilon.rows() != c * dim || upsilon.cols() != dim {
        return Err(Error::DimMismatch {
            expected: c * dim * dim,
            got: upsilon.rows() * upsilon.cols(),
            context: "coaction shape (c*k x k)",
        });
    }
    let ring = coalgebra.ring();
    let id_c = LinMap::identity(ring, c);
    let id_k = LinMap::identity(ring, dim);
    let coaction_ok = LinMap::compose(&LinMap::tensor(&id_c, upsilon)?, upsilon)?
        == LinMap::compose(&LinMap::tensor(coalgebra.coproduct(), &id_k)?, upsilon)?;
    let compatible =
        *upsilon == LinMap::compose(&LinMap::tensor(&coalgebra.gamma(), &id_k)?, upsilon)?;
    Ok(ComoduleFlags {
        coaction_ok,
        compatible,
    })
}

impl CoalgebraComodule {
    pub fn new(coalgebra: QCounitalCoalgebra, dim: usize, upsilon: LinMap) -> Result<Self> {
        let flags = comodule_flags(&coalgebra, dim, &upsilon)?;
        if !flags.coaction_ok {
            return Err(Error::NotAComodule);
        }
        Ok(CoalgebraComodule {
            coalgebra,
            dim,
            upsilon,
        })
    }

    pub fn coalgebra(&self) -> &QCounitalCoalgebra {
        &self.coalgebra
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn coaction(&self) -> &LinMap {
        &self.upsilon
    }

    pub fn report(&self) -> ComoduleFlags {
        comodule_flags(&self.coalgebra, self.dim, &self.upsilon).unwrap()
    }

    /// The cofree comodule `(G(X), delta_X)` on a test object of dim `d`.
    pub fn cofree(coalgebra: &QCounitalCoalgebra, d: usize) -> Self {
        let id_d = LinMap::identity(coalgebra.ring(), d);
        let upsilon = LinMap::tensor(coalgebra.coproduct(), &id_d).unwrap();
        CoalgebraComodule {
            coalgebra: coalgebra.clone(),
            dim: coalgebra.dim() * d,
            upsilon,
        }
    }
}

/// Both defining equations of a morphism of q-counital comonads:
/// `(h (x) h) . delta = delta' . h` and `eps = eps' . h`.
pub fn is_comonad_morphism(
    src: &QCounitalCoalgebra,
    tgt: &QCounitalCoalgebra,
    h: &LinMap,
) -> Result<bool> {
    let hh = LinMap::tensor(h, h)?;
    let lhs = LinMap::compose(&hh, src.coproduct())?;
    let rhs = LinMap::compose(tgt.coproduct(), h)?;
    let counit = LinMap::compose(tgt.counit(), h)?;
    Ok(lhs == rhs && counit == *src.counit())
}

/// Every `(delta, eps)` with `delta` coassociative, deterministic order.
pub fn enumerate_coalgebras(
    dim: usize,
    ring: ExactRing,
    cap: u128,
) -> Result<Vec<QCounitalCoalgebra>> {
    let mut out = Vec::new();
    for alg in crate::monadics::enumerate_algebras(dim, ring, cap)? {
        out.push(alg.transpose_dual());
    }
    Ok(out)
}

/// All compatible comodules of each dimension `<= dim_bound`.
pub fn enumerate_compatible_comodules(
    coalgebra: &QCounitalCoalgebra,
    dim_bound: usize,
    cap: u128,
) -> Result<Vec<CoalgebraComodule>> {
    let ring = coalgebra.ring();
    let c = coalgebra.dim();
    let mut out = Vec::new();
    for k in 0..=dim_bound {
        for upsilon in LinMap::enumerate_maps(k, c * k, ring, cap)? {
            let flags = comodule_flags(coalgebra, k, &upsilon)?;
            if flags.coaction_ok && flags.compatible {
                out.push(CoalgebraComodule {
                    coalgebra: coalgebra.clone(),
                    dim: k,
                    upsilon,
                })
            }
        }
    }
    Ok(out)
}

/// Dual hom-set scan: for every test object `R^d` and compatible comodule
/// `B`, enumerate plain maps `f: B -> R^d` and comodule morphisms
/// `g: B -> G(R^d)` into the cofree comodule, with
/// `alpha(f) = (G f) . upsilon` and `beta(g) = (eps (x) id) . g`; also check
/// the cofree comodules are themselves compatible.
pub fn comodule_pairing_oracle(
    coalgebra: &QCounitalCoalgebra,
    dims: usize,
    cap: u128,
) -> Result<OracleReport> {
    let ring = coalgebra.ring();
    let c = coalgebra.dim();
    let comodules = enumerate_compatible_comodules(coalgebra, dims, cap)?;
    let mut alpha_regular = true;
    let mut beta_regular = true;
    let mut cofree_compatible = true;
    for d in 0..=dims {
        let cofree = CoalgebraComodule::cofree(coalgebra, d);
        if !cofree.report().compatible {
            cofree_compatible = false;
        }
        let id_d = LinMap::identity(ring, d);
        let delta_d = LinMap::tensor(coalgebra.coproduct(), &id_d)?;
        let eps_d = LinMap::tensor(coalgebra.counit(), &id_d)?;
        let id_c = LinMap::identity(ring, c);
        for comodule in &comodules {
            let k = comodule.dim();
            let upsilon = comodule.coaction();
            let alpha = |f: &LinMap| -> LinMap {
                LinMap::compose(&LinMap::tensor(&id_c, f).unwrap(), upsilon).unwrap()
            };
            let beta = |g: &LinMap| -> LinMap { LinMap::compose(&eps_d, g).unwrap() };
            for f in LinMap::enumerate_maps(k, d, ring, cap)? {
                if alpha(&beta(&alpha(&f))) != alpha(&f) {
                    alpha_regular = false;
                }
            }
            for g in LinMap::enumerate_maps(k, c * d, ring, cap)? {
                let is_morphism = LinMap::compose(&delta_d, &g)?
                    == LinMap::compose(&LinMap::tensor(&id_c, &g)?, upsilon)?;
                if !is_morphism {
                    continue;
                }
                if beta(&alpha(&beta(&g))) != beta(&g) {
                    beta_regular = false;
                }
            }
        }
    }
    let report = coalgebra.law_report();
    let closed_form = report.counit_regular && report.comult_compatible;
    Ok(OracleReport {
        free_modules_compatible: cofree_compatible,
        pointwise_alpha_regular: alpha_regular,
        pointwise_beta_regular: beta_regular,
        closed_form_regular: closed_form,
        agrees: (cofree_compatible && alpha_regular && beta_regular) == closed_form,
    })
}

/// A coring-style structure over a unital base algebra `A`: an `A`-bimodule
/// carrier with a coassociative `A`-bilinear coproduct into the tensor
/// product over `A` and an `A`-bilinear counit. The right action must be
/// unital; the left action may act through an idempotent.
#[derive(Debug, Clone)]
pub struct WeakCoring {
    base: QUnitalAlgebra,
    dim: usize,
    /// `a (x) x -> a . x`
    left: LinMap,
    /// `x (x) a -> x . a`
    right: LinMap,
    /// Chosen lift of the coproduct into the plain tensor square.
    delta: LinMap,
    /// Counit into the base algebra, `x -> A`.
    eps: LinMap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoringReport {
    pub weak_coring: bool,
    pub pre_coring: bool,
    pub unitality_of_delta: bool,
    pub restricted_coring_ok: bool,
}

/// Columns spanning the relation subspace of the tensor product over `A`
/// inside the plain tensor product with the `A`-leg at position `pos`
/// (0-based) of `legs` many carrier legs: `(x.a) (x) y - x (x) (a.y)`.
fn tensor_over_a_relations(
    ring: ExactRing,
    a_dim: usize,
    carrier: usize,
    left: &LinMap,
    right: &LinMap,
    legs: usize,
    pos: usize,
) -> Result<LinMap> {
    let id_x = LinMap::identity(ring, carrier);
    // map from x^pos (x) a (x) x^(legs-pos) inserting the relation
    let mut factors_l: Vec<&LinMap> = Vec::new();
    let mut factors_r: Vec<&LinMap> = Vec::new();
    for _ in 0..pos.saturating_sub(1) {
        factors_l.push(&id_x);
        factors_r.push(&id_x);
    }
    factors_l.push(right); // (x . a) on leg pos-1..pos
    factors_r.push(&id_x);
    factors_r.push(left);
    factors_l.push(&id_x);
    for _ in (pos + 1)..legs {
        factors_l.push(&id_x);
        factors_r.push(&id_x);
    }
    // shapes: lhs consumes x a x..., the right factor consumes a x
    let lhs = LinMap::tensor_all(ring, &factors_l)?;
    let rhs = LinMap::tensor_all(ring, &factors_r)?;
    debug_assert_eq!(lhs.rows(), rhs.rows());
    let mut diff = LinMap::zero(ring, lhs.rows(), lhs.cols());
    for i in 0..lhs.rows() {
        for j in 0..lhs.cols() {
            diff.set(i, j, ring.sub(lhs.get(i, j), rhs.get(i, j)));
        }
    }
    let _ = a_dim;
    Ok(diff)
}

/// `v` lies in the column span of `basis` (field ring).
fn columns_contain(basis: &LinMap, extra: &LinMap) -> Result<bool> {
    let ring = basis.ring();
    let rows = basis.rows();
    let mut joint = LinMap::zero(ring, rows, basis.cols() + extra.cols());
    for i in 0..rows {
        for j in 0..basis.cols() {
            joint.set(i, j, basis.get(i, j).clone());
        }
        for j in 0..extra.cols() {
            joint.set(i, basis.cols() + j, extra.get(i, j).clone());
        }
    }
    Ok(basis.rank()? == joint.rank()?)
}

fn map_difference(a: &LinMap, b: &LinMap) -> LinMap {
    let ring = a.ring();
    let mut diff = LinMap::zero(ring, a.rows(), a.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            diff.set(i, j, ring.sub(a.get(i, j), b.get(i, j)));
        }
    }
    diff
}

impl WeakCoring {
    pub fn new(
        base: QUnitalAlgebra,
        dim: usize,
        left: LinMap,
        right: LinMap,
        delta: LinMap,
        eps: LinMap,
    ) -> Result<Self> {
        let ring = base.ring();
        let a = base.dim();
        // the base must be honestly unital
        let base_report = base.law_report();
        let id_a = LinMap::identity(ring, a);
        let theta_ok = base.theta() == id_a && base.theta_bar() == id_a;
        if !(base_report.unit_regular && theta_ok) {
            return Err(Error::BaseNotUnital);
        }
        let id_x = LinMap::identity(ring, dim);
        // shapes
        if left.rows() != dim || left.cols() != a * dim {
            return Err(Error::DimMismatch {
                expected: dim * a * dim,
                got: left.rows() * left.cols(),
                context: "left action shape",
            });
        }
        if right.rows() != dim || right.cols() != dim * a {
            return Err(Error::DimMismatch {
                expected: dim * dim * a,
                got: right.rows() * right.cols(),
                context: "right action shape",
            });
        }
        if delta.rows() != dim * dim || delta.cols() != dim {
            return Err(Error::DimMismatch {
                expected: dim * dim * dim,
                got: delta.rows() * delta.cols(),
                context: "coproduct shape",
            });
        }
        if eps.rows() != a || eps.cols() != dim {
            return Err(Error::DimMismatch {
                expected: a * dim,
                got: eps.rows() * eps.cols(),
                context: "counit shape (a x dim)",
            });
        }
        if !ring.is_field() {
            // quotient reasoning below needs ranks
            return Err(Error::SplitUnsupported);
        }
        let coring = WeakCoring {
            base,
            dim,
            left,
            right,
            delta,
            eps,
        };
        // action laws
        let m = coring.base.product();
        let assoc_l = LinMap::compose(&coring.left, &LinMap::tensor(&id_a, &coring.left)?)?
            == LinMap::compose(&coring.left, &LinMap::tensor(m, &id_x)?)?;
        let assoc_r = LinMap::compose(&coring.right, &LinMap::tensor(&coring.right, &id_a)?)?
            == LinMap::compose(&coring.right, &LinMap::tensor(&id_x, m)?)?;
        let bimodule = LinMap::compose(&coring.left, &LinMap::tensor(&id_a, &coring.right)?)?
            == LinMap::compose(&coring.right, &LinMap::tensor(&coring.left, &id_a)?)?;
        if !(assoc_l && assoc_r && bimodule) {
            return Err(Error::NotAModule);
        }
        // right action unital
        let right_unit = LinMap::compose(
            &coring.right,
            &LinMap::tensor(&id_x, coring.base.unit())?,
        )?;
        if right_unit != id_x {
            return Err(Error::Invalid("right action not unital".into()));
        }
        // counit bilinear
        let eps_left = LinMap::compose(&coring.eps, &coring.left)?
            == LinMap::compose(m, &LinMap::tensor(&id_a, &coring.eps)?)?;
        let eps_right = LinMap::compose(&coring.eps, &coring.right)?
            == LinMap::compose(m, &LinMap::tensor(&coring.eps, &id_a)?)?;
        if !(eps_left && eps_right) {
            return Err(Error::Invalid("counit not A-bilinear".into()));
        }
        // coproduct bilinear and coassociative modulo the tensor-over-A
        // relations
        let rel2 = coring.relations(2)?;
        let delta_left = map_difference(
            &LinMap::compose(&coring.delta, &coring.left)?,
            &LinMap::compose(
                &LinMap::tensor(&coring.left, &id_x)?,
                &LinMap::tensor(&id_a, &coring.delta)?,
            )?,
        );
        let delta_right = map_difference(
            &LinMap::compose(&coring.delta, &coring.right)?,
            &LinMap::compose(
                &LinMap::tensor(&id_x, &coring.right)?,
                &LinMap::tensor(&coring.delta, &id_a)?,
            )?,
        );
        if !(columns_contain(&rel2, &delta_left)? && columns_contain(&rel2, &delta_right)?) {
            return Err(Error::Invalid("coproduct not A-bilinear".into()));
        }
        let rel3 = coring.relations(3)?;
        let coassoc = map_difference(
            &LinMap::compose(&LinMap::tensor(&coring.delta, &id_x)?, &coring.delta)?,
            &LinMap::compose(&LinMap::tensor(&id_x, &coring.delta)?, &coring.delta)?,
        );
        if !columns_contain(&rel3, &coassoc)? {
            return Err(Error::NotCoassociative);
        }
        Ok(coring)
    }

    pub fn base(&self) -> &QUnitalAlgebra {
        &self.base
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn left_action(&self) -> &LinMap {
        &self.left
    }
    pub fn right_action(&self) -> &LinMap {
        &self.right
    }
    pub fn coproduct(&self) -> &LinMap {
        &self.delta
    }
    pub fn counit(&self) -> &LinMap {
        &self.eps
    }

    /// Relation span for `legs` carrier legs (all adjacent positions).
    fn relations(&self, legs: usize) -> Result<LinMap> {
        let ring = self.base.ring();
        let a = self.base.dim();
        let rows = self.dim.pow(legs as u32);
        let mut cols = Vec::new();
        for pos in 1..legs {
            let rel = tensor_over_a_relations(
                ring, a, self.dim, &self.left, &self.right, legs, pos,
            )?;
            debug_assert_eq!(rel.rows(), rows);
            cols.push(rel);
        }
        let total: usize = cols.iter().map(|c| c.cols()).sum();
        let mut out = LinMap::zero(ring, rows, total);
        let mut at = 0;
        for block in cols {
            for j in 0..block.cols() {
                for i in 0..rows {
                    out.set(i, at + j, block.get(i, j).clone());
                }
            }
            at += block.cols();
        }
        Ok(out)
    }

    /// Left multiplication by `1_A`; an idempotent bimodule map.
    pub fn unit_action(&self) -> LinMap {
        LinMap::compose(
            &self.left,
            &LinMap::tensor(self.base.unit(), &LinMap::identity(self.base.ring(), self.dim))
                .unwrap(),
        )
        .unwrap()
    }

    pub fn report(&self) -> Result<CoringReport> {
        let ring = self.base.ring();
        let id_x = LinMap::identity(ring, self.dim);
        let e_act = self.unit_action();
        // eps(c1) . c2 and c1 . eps(c2)
        let counit_left = LinMap::compose(
            &self.left,
            &LinMap::compose(&LinMap::tensor(&self.eps, &id_x)?, &self.delta)?,
        )?;
        let counit_right = LinMap::compose(
            &self.right,
            &LinMap::compose(&LinMap::tensor(&id_x, &self.eps)?, &self.delta)?,
        )?;
        let weak_coring = counit_left == e_act && counit_right == e_act;
        let pre_coring = counit_left == id_x && counit_right == e_act;
        // 1_A . Delta(c) = Delta(c) modulo the relations
        let rel2 = self.relations(2)?;
        let unital_delta = map_difference(
            &LinMap::compose(&LinMap::tensor(&e_act, &id_x)?, &self.delta)?,
            &self.delta,
        );
        let unitality_of_delta = columns_contain(&rel2, &unital_delta)?;

        // restriction to the image of the idempotent left unit action
        let (p, i) = LinMap::split_idempotent(&e_act)?;
        let r = p.rows();
        let a = self.base.dim();
        let id_r = LinMap::identity(ring, r);
        let left_r = LinMap::compose(
            &p,
            &LinMap::compose(&self.left, &LinMap::tensor(&LinMap::identity(ring, a), &i)?)?,
        )?;
        let right_r = LinMap::compose(
            &p,
            &LinMap::compose(&self.right, &LinMap::tensor(&i, &LinMap::identity(ring, a))?)?,
        )?;
        let delta_r = LinMap::compose(&LinMap::tensor(&p, &p)?, &LinMap::compose(&self.delta, &i)?)?;
        let eps_r = LinMap::compose(&self.eps, &i)?;
        // relations of the restricted bimodule
        let rel2_r = {
            let rel = tensor_over_a_relations(ring, a, r, &left_r, &right_r, 2, 1)?;
            rel
        };
        let rel3_r = {
            let r1 = tensor_over_a_relations(ring, a, r, &left_r, &right_r, 3, 1)?;
            let r2 = tensor_over_a_relations(ring, a, r, &left_r, &right_r, 3, 2)?;
            let rows = r1.rows();
            let mut out = LinMap::zero(ring, rows, r1.cols() + r2.cols());
            for i2 in 0..rows {
                for j in 0..r1.cols() {
                    out.set(i2, j, r1.get(i2, j).clone());
                }
                for j in 0..r2.cols() {
                    out.set(i2, r1.cols() + j, r2.get(i2, j).clone());
                }
            }
            out
        };
        let coassoc_r = map_difference(
            &LinMap::compose(&LinMap::tensor(&delta_r, &id_r)?, &delta_r)?,
            &LinMap::compose(&LinMap::tensor(&id_r, &delta_r)?, &delta_r)?,
        );
        let counit_left_r = LinMap::compose(
            &left_r,
            &LinMap::compose(&LinMap::tensor(&eps_r, &id_r)?, &delta_r)?,
        )?;
        let counit_right_r = LinMap::compose(
            &right_r,
            &LinMap::compose(&LinMap::tensor(&id_r, &eps_r)?, &delta_r)?,
        )?;
        let restricted_coring_ok = columns_contain(&rel3_r, &coassoc_r)?
            && counit_left_r == id_r
            && counit_right_r == id_r
            && {
                // restricted coproduct still bilinear
                let dl = map_difference(
                    &LinMap::compose(&delta_r, &left_r)?,
                    &LinMap::compose(
                        &LinMap::tensor(&left_r, &id_r)?,
                        &LinMap::tensor(&LinMap::identity(ring, a), &delta_r)?,
                    )?,
                );
                let dr = map_difference(
                    &LinMap::compose(&delta_r, &right_r)?,
                    &LinMap::compose(
                        &LinMap::tensor(&id_r, &right_r)?,
                        &LinMap::tensor(&delta_r, &LinMap::identity(ring, a))?,
                    )?,
                );
                columns_contain(&rel2_r, &dl)? && columns_contain(&rel2_r, &dr)?
            };
        Ok(CoringReport {
            weak_coring,
            pre_coring,
            unitality_of_delta,
            restricted_coring_ok,
        })
    }
}

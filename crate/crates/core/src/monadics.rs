//! q-unital monads in algebra form: structure constants `(m, u)` on a
//! finite-rank free module, law reports, the repair constructions producing
//! r-unital monads and weak monads, the element-level dictionary, and the
//! brute-force pairing oracle over compatible modules.

use crate::diagram::{check_equation, evaluate, seq, word, CellExpr, Signature};
use crate::error::{Error, Result};
use crate::linmap::LinMap;
use crate::ring::ExactRing;

/// An associative product `m: A ⊗ A -> A` with an arbitrary quasi-unit
/// `u: R -> A`. Associativity is enforced at construction; nothing at all is
/// required of `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QUnitalAlgebra {
    ring: ExactRing,
    dim: usize,
    m: LinMap,
    u: LinMap,
}

/// Three-level classification; the levels are strictly ordered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum MonadClass {
    QUnital,
    RUnital,
    WeakMonad,
}

/// Flags for the monad laws, plus the unit-insertion endomorphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReportMonad {
    pub assoc: bool,
    pub unit_regular: bool,
    pub unit_symmetric: bool,
    pub mult_compatible: bool,
    pub classification: MonadClass,
    pub theta: LinMap,
    pub theta_bar: LinMap,
}

impl QUnitalAlgebra {
    pub fn new(ring: ExactRing, dim: usize, m: LinMap, u: LinMap) -> Result<Self> {
        if m.ring() != ring || u.ring() != ring {
            return Err(Error::RingMismatch);
        }
        if m.rows() != dim || m.cols() != dim * dim {
            return Err(Error::DimMismatch {
                expected: dim * dim * dim,
                got: m.rows() * m.cols(),
                context: "product shape (dim x dim^2)",
            });
        }
        if u.rows() != dim || u.cols() != 1 {
            return Err(Error::DimMismatch {
                expected: dim,
                got: u.rows() * u.cols(),
                context: "unit shape (dim x 1)",
            });
        }
        let alg = QUnitalAlgebra { ring, dim, m, u };
        if !alg.is_associative()? {
            return Err(Error::NotAssociative);
        }
        Ok(alg)
    }

    pub fn ring(&self) -> ExactRing {
        self.ring
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn product(&self) -> &LinMap {
        &self.m
    }
    pub fn unit(&self) -> &LinMap {
        &self.u
    }

    fn is_associative(&self) -> Result<bool> {
        let id = self.id();
        let lhs = LinMap::compose(&self.m, &LinMap::tensor(&self.m, &id)?)?;
        let rhs = LinMap::compose(&self.m, &LinMap::tensor(&id, &self.m)?)?;
        Ok(lhs == rhs)
    }

    fn id(&self) -> LinMap {
        LinMap::identity(self.ring, self.dim)
    }

    /// Signature with one functor symbol `F` and generators `mu`, `eta`.
    pub fn signature(&self) -> Signature {
        let mut sig = Signature::new(self.ring);
        sig.add_symbol("F", self.dim).unwrap();
        sig.add_gen("mu", word(&["F", "F"]), word(&["F"]), self.m.clone())
            .unwrap();
        sig.add_gen("eta", word(&[]), word(&["F"]), self.u.clone())
            .unwrap();
        sig
    }

    /// `theta = mu . (F eta)`, i.e. `a -> a * e`.
    pub fn theta(&self) -> LinMap {
        LinMap::compose(&self.m, &LinMap::tensor(&self.id(), &self.u).unwrap()).unwrap()
    }

    /// `theta_bar = mu . (eta F)`, i.e. `a -> e * a`.
    pub fn theta_bar(&self) -> LinMap {
        LinMap::compose(&self.m, &LinMap::tensor(&self.u, &self.id()).unwrap()).unwrap()
    }

    /// The distinguished element `e = u(1)` as a column.
    pub fn e(&self) -> LinMap {
        self.u.clone()
    }

    /// Decide every monad law by exact diagram evaluation.
    pub fn law_report(&self) -> LawReportMonad {
        let sig = self.signature();
        let f = || word(&["F"]);
        let none = || word(&[]);
        let mu = CellExpr::gen("mu");
        let eta = CellExpr::gen("eta");

        let theta_cell = seq(vec![
            CellExpr::whisker(f(), eta.clone(), none()),
            mu.clone(),
        ]);
        let theta_bar_cell = seq(vec![
            CellExpr::whisker(none(), eta.clone(), f()),
            mu.clone(),
        ]);

        // eta regular: eta = mu . (F eta) . eta
        let unit_regular = check_equation(
            &eta,
            &seq(vec![eta.clone(), theta_cell.clone()]),
            &sig,
        )
        .unwrap()
        .holds;
        let unit_symmetric = check_equation(&theta_cell, &theta_bar_cell, &sig)
            .unwrap()
            .holds;
        // mu compatible: mu = mu . (mu F) . (F eta F)
        let mult_compatible = check_equation(
            &mu,
            &seq(vec![
                CellExpr::whisker(f(), eta.clone(), f()),
                CellExpr::whisker(none(), mu.clone(), f()),
                mu.clone(),
            ]),
            &sig,
        )
        .unwrap()
        .holds;

        let classification = if unit_regular && mult_compatible {
            if unit_symmetric {
                MonadClass::WeakMonad
            } else {
                MonadClass::RUnital
            }
        } else {
            MonadClass::QUnital
        };
        LawReportMonad {
            assoc: true, // enforced at construction
            unit_regular,
            unit_symmetric,
            mult_compatible,
            classification,
            theta: evaluate(&theta_cell, &sig).unwrap(),
            theta_bar: evaluate(&theta_bar_cell, &sig).unwrap(),
        }
    }

    /// Compatible product `m~(a (x) b) = a * e * b`, defined whenever the
    /// unit is regular.
    pub fn mu_tilde(&self) -> Result<QUnitalAlgebra> {
        if !self.law_report().unit_regular {
            return Err(Error::UnitNotRegular);
        }
        let id = self.id();
        // m . (F m) . (F eta F): a (x) b -> a * (e * b)
        let insert = LinMap::tensor(&id, &LinMap::tensor(&self.u, &id)?)?;
        let m_tilde = LinMap::compose(
            &self.m,
            &LinMap::compose(&LinMap::tensor(&id, &self.m)?, &insert)?,
        )?;
        QUnitalAlgebra::new(self.ring, self.dim, m_tilde, self.u.clone())
    }

    /// Regular unit `u~ = m . (F eta) . eta`, defined whenever the product is
    /// compatible.
    pub fn eta_tilde(&self) -> Result<QUnitalAlgebra> {
        if !self.law_report().mult_compatible {
            return Err(Error::MultNotCompatible);
        }
        let u_tilde = LinMap::compose(&self.theta(), &self.u)?;
        QUnitalAlgebra::new(self.ring, self.dim, self.m.clone(), u_tilde)
    }

    /// Weak-monad product `m^(a (x) b) = e * a * b * e`, defined on r-unital
    /// input.
    pub fn mu_hat(&self) -> Result<QUnitalAlgebra> {
        if self.law_report().classification < MonadClass::RUnital {
            return Err(Error::NotRUnital);
        }
        let id = self.id();
        // FF --eta F F eta--> FFFF --mu FF--> FFF --mu F--> FF --mu--> F
        let insert = LinMap::tensor_all(self.ring, &[&self.u, &id, &id, &self.u])?;
        let step1 = LinMap::tensor_all(self.ring, &[&self.m, &id, &id])?;
        let step2 = LinMap::tensor_all(self.ring, &[&self.m, &id])?;
        let m_hat = LinMap::compose(
            &self.m,
            &LinMap::compose(&step2, &LinMap::compose(&step1, &insert)?)?,
        )?;
        QUnitalAlgebra::new(self.ring, self.dim, m_hat, self.u.clone())
    }

    /// Element-level route for `mu_tilde`: `(a * e) * b` instead of
    /// `a * (e * b)`; equal by associativity, used as a cross-check.
    pub fn mu_tilde_element_route(&self) -> Result<LinMap> {
        let id = self.id();
        let insert = LinMap::tensor_all(self.ring, &[&id, &self.u, &id])?;
        let step = LinMap::tensor_all(self.ring, &[&self.m, &id])?;
        LinMap::compose(&self.m, &LinMap::compose(&step, &insert)?)
    }

    /// Element-level formula `e * a * e * b * e` for the weak-monad product;
    /// agrees with `mu_hat` exactly when the product is compatible.
    pub fn mu_hat_element_route(&self) -> Result<LinMap> {
        let id = self.id();
        let insert = LinMap::tensor_all(self.ring, &[&self.u, &id, &self.u, &id, &self.u])?;
        let mut acc = insert;
        // left-associated 5-fold product
        for k in (1..5).rev() {
            let ids: Vec<&LinMap> = std::iter::repeat(&id).take(k - 1).collect();
            let mut factors: Vec<&LinMap> = vec![&self.m];
            factors.extend(ids);
            let step = LinMap::tensor_all(self.ring, &factors)?;
            acc = LinMap::compose(&step, &acc)?;
        }
        Ok(acc)
    }

    /// Element-level criteria of the algebra dictionary, paired with the
    /// categorical flags they are equivalent to.
    pub fn algebra_dictionary(&self) -> DictionaryReport {
        let report = self.law_report();
        let e = &self.u;
        // e^2 = e
        let e_sq = LinMap::compose(&self.m, &LinMap::tensor(e, e).unwrap()).unwrap();
        let idempotent = e_sq == *e;
        // e a = a e for all basis a
        let central = self.theta() == self.theta_bar();
        // a b = a e b for all basis a, b
        let aeb_matrix = {
            let id = self.id();
            let insert = LinMap::tensor_all(self.ring, &[&id, e, &id]).unwrap();
            let step = LinMap::tensor_all(self.ring, &[&id, &self.m]).unwrap();
            LinMap::compose(&self.m, &LinMap::compose(&step, &insert).unwrap()).unwrap()
        };
        let aeb_law = aeb_matrix == self.m;
        DictionaryReport {
            idempotent,
            central,
            aeb_law,
            unit_regular: report.unit_regular,
            unit_symmetric: report.unit_symmetric,
            mult_compatible: report.mult_compatible,
        }
    }

    /// Transpose dual: coalgebra structure constants `delta = m^T`,
    /// `eps = u^T`.
    pub fn transpose_dual(&self) -> crate::comonadics::QCounitalCoalgebra {
        crate::comonadics::QCounitalCoalgebra::new(
            self.ring,
            self.dim,
            self.m.transpose(),
            self.u.transpose(),
        )
        .expect("transpose of an associative product is coassociative")
    }
}

/// Element-level criteria vs categorical flags (they must agree; a mismatch
/// is a bug-level diagnostic).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DictionaryReport {
    pub idempotent: bool,
    pub central: bool,
    pub aeb_law: bool,
    pub unit_regular: bool,
    pub unit_symmetric: bool,
    pub mult_compatible: bool,
}

impl DictionaryReport {
    pub fn equivalences_hold(&self) -> bool {
        self.idempotent == self.unit_regular
            && self.central == self.unit_symmetric
            && self.aeb_law == self.mult_compatible
    }
}

/// A (non-unital) module over a q-unital algebra; the action law is enforced
/// at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraModule {
    algebra: QUnitalAlgebra,
    dim: usize,
    rho: LinMap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModuleFlags {
    pub action_ok: bool,
    pub compatible: bool,
}

/// Check the action law and compatibility for raw action data without
/// constructing a module.
pub fn module_flags(algebra: &QUnitalAlgebra, dim: usize, rho: &LinMap) -> Result<ModuleFlags> {
    let a = algebra.dim();
    if rho.rows() != dim || rho.cols() != a * dim {
        return Err(Error::DimMismatch {
            expected: dim * a * dim,
            got: rho.rows() * rho.cols(),
            context: "action shape (k x a*k)",
        });
    }
    let ring = algebra.ring();
    let id_a = LinMap::identity(ring, a);
    let id_k = LinMap::identity(ring, dim);
    let action_ok = LinMap::compose(rho, &LinMap::tensor(&id_a, rho)?)?
        == LinMap::compose(rho, &LinMap::tensor(algebra.product(), &id_k)?)?;
    // rho = rho . (mu_A) . (F eta_A): element form a m = a e m
    let insert = LinMap::tensor_all(ring, &[&id_a, algebra.unit(), &id_k])?;
    let mu_a = LinMap::tensor(algebra.product(), &id_k)?;
    let compatible = *rho == LinMap::compose(rho, &LinMap::compose(&mu_a, &insert)?)?;
    Ok(ModuleFlags {
        action_ok,
        compatible,
    })
}

impl AlgebraModule {
    pub fn new(algebra: QUnitalAlgebra, dim: usize, rho: LinMap) -> Result<Self> {
        let flags = module_flags(&algebra, dim, &rho)?;
        if !flags.action_ok {
            return Err(Error::NotAModule);
        }
        Ok(AlgebraModule { algebra, dim, rho })
    }

    pub fn algebra(&self) -> &QUnitalAlgebra {
        &self.algebra
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn action(&self) -> &LinMap {
        &self.rho
    }

    pub fn report(&self) -> ModuleFlags {
        module_flags(&self.algebra, self.dim, &self.rho).unwrap()
    }

    /// The free module `(F(A), mu_A)` on a test object of dimension `d`.
    pub fn free(algebra: &QUnitalAlgebra, d: usize) -> Self {
        let id_d = LinMap::identity(algebra.ring(), d);
        let rho = LinMap::tensor(algebra.product(), &id_d).unwrap();
        AlgebraModule {
            algebra: algebra.clone(),
            dim: algebra.dim() * d,
            rho,
        }
    }
}

/// Both defining equations of a morphism of q-unital monads:
/// `m' . (h (x) h) = h . m` and `u' = h . u`.
pub fn is_monad_morphism(src: &QUnitalAlgebra, tgt: &QUnitalAlgebra, h: &LinMap) -> Result<bool> {
    let hh = LinMap::tensor(h, h)?;
    let lhs = LinMap::compose(tgt.product(), &hh)?;
    let rhs = LinMap::compose(h, src.product())?;
    let unit = LinMap::compose(h, src.unit())?;
    Ok(lhs == rhs && unit == *tgt.unit())
}

/// Every `(m, u)` with `m` associative, in deterministic order
/// (product-major, unit-minor, each lexicographic).
pub fn enumerate_algebras(
    dim: usize,
    ring: ExactRing,
    cap: u128,
) -> Result<Vec<QUnitalAlgebra>> {
    let ExactRing::Zn(n) = ring else {
        return Err(Error::Invalid("enumeration requires a Z_n ring".into()));
    };
    let raw = (n as u128)
        .checked_pow((dim * dim * dim + dim) as u32)
        .ok_or(Error::CapExceeded {
            required: u128::MAX,
            cap,
        })?;
    if raw > cap {
        return Err(Error::CapExceeded { required: raw, cap });
    }
    let mut out = Vec::new();
    for m in LinMap::enumerate_maps(dim * dim, dim, ring, cap)? {
        // associativity filter before crossing with units
        let id = LinMap::identity(ring, dim);
        let assoc = LinMap::compose(&m, &LinMap::tensor(&m, &id)?)?
            == LinMap::compose(&m, &LinMap::tensor(&id, &m)?)?;
        if !assoc {
            continue;
        }
        for u in LinMap::enumerate_maps(1, dim, ring, cap)? {
            out.push(QUnitalAlgebra::new(ring, dim, m.clone(), u)?);
        }
    }
    Ok(out)
}

/// All compatible modules of each dimension `<= dim_bound`.
pub fn enumerate_compatible_modules(
    algebra: &QUnitalAlgebra,
    dim_bound: usize,
    cap: u128,
) -> Result<Vec<AlgebraModule>> {
    let ring = algebra.ring();
    let a = algebra.dim();
    let mut out = Vec::new();
    for k in 0..=dim_bound {
        for rho in LinMap::enumerate_maps(a * k, k, ring, cap)? {
            let flags = module_flags(algebra, k, &rho)?;
            if flags.action_ok && flags.compatible {
                out.push(AlgebraModule {
                    algebra: algebra.clone(),
                    dim: k,
                    rho,
                })
            }
        }
    }
    Ok(out)
}

/// Result of the brute-force hom-set regularity scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    /// Do the free modules land inside the compatible ones? The pairing with
    /// the compatible-module category only exists when they do.
    pub free_modules_compatible: bool,
    pub pointwise_alpha_regular: bool,
    pub pointwise_beta_regular: bool,
    pub closed_form_regular: bool,
    pub agrees: bool,
}

impl OracleReport {
    /// The pairing exists (free functor corestricts) and both transformations
    /// are pointwise regular.
    pub fn pointwise_regular(&self) -> bool {
        self.free_modules_compatible
            && self.pointwise_alpha_regular
            && self.pointwise_beta_regular
    }
}

/// Enumerate, for every test object `R^d` (`d <= dims`) and every compatible
/// module `B`, all module morphisms `f: F(A) -> B` and all plain maps
/// `g: A -> B`, and check `alpha = alpha.beta.alpha` and
/// `beta = beta.alpha.beta` pointwise; additionally check that the free
/// modules are themselves compatible, since the pairing with the
/// compatible-module category is only defined when they are. Agreement of
/// the combined verdict with the closed-form flags is the content of the
/// correspondence between r-unitality and regular pairings. (On compatible
/// modules `beta` is regular for free; the scan re-derives that.)
pub fn module_pairing_oracle(
    algebra: &QUnitalAlgebra,
    dims: usize,
    cap: u128,
) -> Result<OracleReport> {
    let ring = algebra.ring();
    let a = algebra.dim();
    let modules = enumerate_compatible_modules(algebra, dims, cap)?;
    let mut alpha_regular = true;
    let mut beta_regular = true;
    let mut free_compatible = true;
    for d in 0..=dims {
        let free = AlgebraModule::free(algebra, d);
        if !free.report().compatible {
            free_compatible = false;
        }
        let id_d = LinMap::identity(ring, d);
        let mu_a = LinMap::tensor(algebra.product(), &id_d)?;
        let eta_a = LinMap::tensor(algebra.unit(), &id_d)?;
        let id_a = LinMap::identity(ring, a);
        for module in &modules {
            let k = module.dim();
            let rho = module.action();
            let alpha = |f: &LinMap| -> LinMap { LinMap::compose(f, &eta_a).unwrap() };
            let beta = |g: &LinMap| -> LinMap {
                LinMap::compose(rho, &LinMap::tensor(&id_a, g).unwrap()).unwrap()
            };
            // all module morphisms f: (F(A), mu_A) -> (B, rho)
            for f in LinMap::enumerate_maps(a * d, k, ring, cap)? {
                let is_morphism = LinMap::compose(&f, &mu_a)?
                    == LinMap::compose(rho, &LinMap::tensor(&id_a, &f)?)?;
                if !is_morphism {
                    continue;
                }
                if alpha(&beta(&alpha(&f))) != alpha(&f) {
                    alpha_regular = false;
                }
            }
            // all plain maps g: A -> U(B)
            for g in LinMap::enumerate_maps(d, k, ring, cap)? {
                if beta(&alpha(&beta(&g))) != beta(&g) {
                    beta_regular = false;
                }
            }
        }
    }
    let report = algebra.law_report();
    let closed_form = report.unit_regular && report.mult_compatible;
    Ok(OracleReport {
        free_modules_compatible: free_compatible,
        pointwise_alpha_regular: alpha_regular,
        pointwise_beta_regular: beta_regular,
        closed_form_regular: closed_form,
        agrees: (free_compatible && alpha_regular && beta_regular) == closed_form,
    })
}

/// Report for an action of a monad on a functor: in the tensor model this is
/// the same data as a module on the functor's carrier; when the flags hold
/// the factorization through the compatible modules is returned.
#[derive(Debug, Clone)]
pub struct FunctorActionReport {
    pub module: bool,
    pub compatible: bool,
    pub factored: Option<AlgebraModule>,
}

pub fn module_action_on_functor_check(
    monad: &QUnitalAlgebra,
    functor_dim: usize,
    rho: &LinMap,
) -> Result<FunctorActionReport> {
    let flags = module_flags(monad, functor_dim, rho)?;
    let factored = if flags.action_ok && flags.compatible {
        Some(AlgebraModule::new(
            monad.clone(),
            functor_dim,
            rho.clone(),
        )?)
    } else {
        None
    };
    Ok(FunctorActionReport {
        module: flags.action_ok,
        compatible: flags.compatible,
        factored,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{i1, i2, i3};

    const Z2: ExactRing = ExactRing::Zn(2);

    #[test]
    fn dim1_unital_is_weak() {
        let report = i1().law_report();
        assert!(report.unit_regular && report.unit_symmetric && report.mult_compatible);
        assert_eq!(report.classification, MonadClass::WeakMonad);
        assert_eq!(report.theta, LinMap::identity(Z2, 1));
    }

    #[test]
    fn i2_is_q_unital_only() {
        let report = i2().law_report();
        assert!(report.unit_regular);
        assert!(report.unit_symmetric);
        assert!(!report.mult_compatible);
        assert_eq!(report.classification, MonadClass::QUnital);
    }

    #[test]
    fn i3_regular_not_symmetric_not_compatible() {
        let report = i3().law_report();
        assert!(report.unit_regular);
        assert!(!report.unit_symmetric);
        assert!(!report.mult_compatible);
        assert_eq!(report.classification, MonadClass::QUnital);
    }

    #[test]
    fn mu_tilde_on_i2_is_weak() {
        let t = i2().mu_tilde().unwrap();
        // m~(ei (x) ej) = [i=j=1] e1
        assert_eq!(
            *t.product(),
            LinMap::from_rows(Z2, &[&[1, 0, 0, 0], &[0, 0, 0, 0]])
        );
        assert_eq!(t.law_report().classification, MonadClass::WeakMonad);
    }

    #[test]
    fn mu_tilde_on_i3_is_r_unital_not_weak() {
        let t = i3().mu_tilde().unwrap();
        // basis (x, y, z): a * x * b kills every y or z on the left,
        // m~(x (x) y) = y
        let expected = LinMap::from_rows(
            Z2,
            &[
                &[1, 0, 0, 0, 0, 0, 0, 0, 0],
                &[0, 1, 0, 0, 0, 0, 0, 0, 0],
                &[0, 0, 0, 0, 0, 0, 0, 0, 0],
            ],
        );
        assert_eq!(*t.product(), expected);
        let report = t.law_report();
        assert_eq!(report.classification, MonadClass::RUnital);
        assert!(!report.unit_symmetric);
    }

    #[test]
    fn eta_tilde_fixed_point_when_already_regular() {
        let t = i2().mu_tilde().unwrap();
        let report = t.law_report();
        assert!(report.unit_regular && report.mult_compatible);
        let t2 = t.eta_tilde().unwrap();
        assert_eq!(t2.unit(), t.unit());
    }

    #[test]
    fn eta_tilde_requires_compatibility() {
        assert_eq!(i2().eta_tilde(), Err(Error::MultNotCompatible));
    }

    #[test]
    fn mu_hat_on_mu_tilde_i3_projects_onto_x() {
        let r = i3().mu_tilde().unwrap();
        let h = r.mu_hat().unwrap();
        // m^(a (x) b) = a11 b11 x
        let mut expected = LinMap::zero(Z2, 3, 9);
        expected.set(0, 0, Z2.one());
        assert_eq!(*h.product(), expected);
        assert_eq!(h.law_report().classification, MonadClass::WeakMonad);
    }

    #[test]
    fn mu_hat_fixes_weak_monads() {
        let w = i2().mu_tilde().unwrap();
        let h = w.mu_hat().unwrap();
        assert_eq!(h.product(), w.product());
    }

    #[test]
    fn mu_hat_requires_r_unital() {
        assert_eq!(i2().mu_hat(), Err(Error::NotRUnital));
    }

    #[test]
    fn dictionary_i2() {
        let d = i2().algebra_dictionary();
        assert!(d.idempotent);
        assert!(d.central);
        assert!(!d.aeb_law);
        assert!(d.equivalences_hold());
    }

    #[test]
    fn dictionary_i3() {
        let d = i3().algebra_dictionary();
        assert!(d.idempotent);
        assert!(!d.central);
        assert!(d.equivalences_hold());
    }

    #[test]
    fn dictionary_dim1() {
        let d = i1().algebra_dictionary();
        assert!(d.idempotent && d.central && d.aeb_law);
        assert!(d.equivalences_hold());
    }

    #[test]
    fn module_over_i2_projection_is_compatible() {
        // Z_2 with rho(ei (x) v) = [i=1] v
        let rho = LinMap::from_rows(Z2, &[&[1, 0]]);
        let m = AlgebraModule::new(i2(), 1, rho).unwrap();
        assert!(m.report().compatible);
    }

    #[test]
    fn module_over_i2_full_action_is_rejected() {
        // rho(ei (x) v) = v fails the action law: (e1 e2) acts as 0 but
        // e1 (e2 v) = v
        let rho = LinMap::from_rows(Z2, &[&[1, 1]]);
        assert_eq!(AlgebraModule::new(i2(), 1, rho), Err(Error::NotAModule));
    }

    #[test]
    fn free_module_over_weak_monad_is_compatible() {
        let w = i2().mu_tilde().unwrap();
        let free = AlgebraModule::free(&w, 2);
        assert!(free.report().compatible);
    }

    #[test]
    fn enumerate_dim1_algebras() {
        let algs = enumerate_algebras(1, Z2, 1 << 20).unwrap();
        assert_eq!(algs.len(), 4);
    }

    #[test]
    fn enumerate_dim3_refused_under_cap() {
        assert!(matches!(
            enumerate_algebras(3, Z2, 1 << 20),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn enumerate_compatible_modules_of_mu_tilde_i2() {
        let w = i2().mu_tilde().unwrap();
        let mods: Vec<_> = enumerate_compatible_modules(&w, 1, 1 << 20)
            .unwrap()
            .into_iter()
            .filter(|m| m.dim() == 1)
            .collect();
        // rho(ei (x) v) = c_i v with c1 in {0,1}, c2 = 0
        assert_eq!(mods.len(), 2);
        assert!(mods
            .iter()
            .any(|m| *m.action() == LinMap::from_rows(Z2, &[&[0, 0]])));
        assert!(mods
            .iter()
            .any(|m| *m.action() == LinMap::from_rows(Z2, &[&[1, 0]])));
    }

    #[test]
    fn dim_bound_zero_gives_only_zero_module() {
        let w = i2().mu_tilde().unwrap();
        let mods = enumerate_compatible_modules(&w, 0, 1 << 20).unwrap();
        assert_eq!(mods.len(), 1);
        assert_eq!(mods[0].dim(), 0);
    }

    #[test]
    fn oracle_weak_monad_agrees() {
        let w = i2().mu_tilde().unwrap();
        let report = module_pairing_oracle(&w, 2, 1 << 20).unwrap();
        assert!(report.pointwise_regular());
        assert!(report.agrees);
    }

    #[test]
    fn oracle_i2_agrees_with_flags() {
        // the product of i2 is not compatible, so the free modules fall
        // outside the compatible ones and the restricted pairing does not
        // exist; on the compatible modules alone both transformations are
        // pointwise regular
        let report = module_pairing_oracle(&i2(), 2, 1 << 20).unwrap();
        assert!(!report.free_modules_compatible);
        assert!(report.pointwise_alpha_regular && report.pointwise_beta_regular);
        assert!(!report.closed_form_regular);
        assert!(report.agrees);
    }

    #[test]
    fn oracle_dim1_unital_classical() {
        let report = module_pairing_oracle(&i1(), 2, 1 << 20).unwrap();
        assert!(report.pointwise_alpha_regular && report.pointwise_beta_regular);
        assert!(report.agrees);
    }

    #[test]
    fn functor_action_factors_through_compatible_modules() {
        let g = i2().mu_tilde().unwrap();
        let rho = LinMap::from_rows(Z2, &[&[1, 0]]);
        let report = module_action_on_functor_check(&g, 1, &rho).unwrap();
        assert!(report.module && report.compatible);
        assert!(report.factored.is_some());

        let bad = LinMap::from_rows(Z2, &[&[1, 1]]);
        let report = module_action_on_functor_check(&i2(), 1, &bad).unwrap();
        assert!(!report.module);
        assert!(report.factored.is_none());
    }

    #[test]
    fn theta_of_weak_monad_is_monad_morphism() {
        let w = i2().mu_tilde().unwrap();
        let theta = w.law_report().theta;
        assert!(is_monad_morphism(&w, &w, &theta).unwrap());
    }
}

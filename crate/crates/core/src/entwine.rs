//! Entwinings: lifting an endofunctor through (co)module categories, and
//! the entwined product/coproduct of two weak (co)monads.
//!
//! The data is always a carrier dimension `t` for the functor being lifted
//! together with an exchange map (`lambda` or `psi`) between composite
//! functor words.  Every lifting condition is phrased as commutativity of a
//! diagram of 2-cells and decided by [`diagram::check_equation`]; there is a
//! single evaluation path for all flags in this module.

use crate::comonadics::{comodule_flags, CoalgebraComodule, QCounitalCoalgebra};
use crate::comonadics::ComonadClass;
use crate::diagram::{check_equation, evaluate, seq, word, CellExpr, Signature};
use crate::error::{Error, Result};
use crate::linmap::LinMap;
use crate::monadics::{module_flags, AlgebraModule, MonadClass, QUnitalAlgebra};
use crate::ring::ExactRing;

fn theta_cell(mu: &str, eta: &str, carrier: &str) -> CellExpr {
    seq(vec![
        CellExpr::whisker(word(&[carrier]), CellExpr::gen(eta), word(&[])),
        CellExpr::gen(mu),
    ])
}

fn gamma_cell(delta: &str, eps: &str, carrier: &str) -> CellExpr {
    seq(vec![
        CellExpr::gen(delta),
        CellExpr::whisker(word(&[carrier]), CellExpr::gen(eps), word(&[])),
    ])
}

/// An exchange map `lambda: L T -> T F` between a target-side monad `L`, a
/// functor carrier of dimension `t` and a source-side monad `F`.
#[derive(Debug, Clone)]
pub struct ModuleEntwining {
    l: QUnitalAlgebra,
    f: QUnitalAlgebra,
    t: usize,
    lambda: LinMap,
}

/// Flags for the three lifting conditions on a [`ModuleEntwining`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModuleLiftingReport {
    pub diagram_lift_equ: bool,
    pub equation_lift_equ_reg: bool,
    /// The rectangle plus the two absorption triangles; together they say
    /// the exchange map is a normalized representative inducing a lifting.
    pub weak_diagrams: bool,
}

impl ModuleLiftingReport {
    pub fn all(&self) -> bool {
        self.diagram_lift_equ && self.equation_lift_equ_reg && self.weak_diagrams
    }
}

impl ModuleEntwining {
    pub fn new(
        l: QUnitalAlgebra,
        f: QUnitalAlgebra,
        t: usize,
        lambda: LinMap,
    ) -> Result<Self> {
        if l.ring() != f.ring() || lambda.ring() != l.ring() {
            return Err(Error::RingMismatch);
        }
        if lambda.rows() != t * f.dim() || lambda.cols() != l.dim() * t {
            return Err(Error::DimMismatch {
                expected: t * f.dim() * l.dim() * t,
                got: lambda.rows() * lambda.cols(),
                context: "entwining map shape L T -> T F",
            });
        }
        Ok(ModuleEntwining { l, f, t, lambda })
    }

    pub fn ring(&self) -> ExactRing {
        self.l.ring()
    }
    pub fn target_monad(&self) -> &QUnitalAlgebra {
        &self.l
    }
    pub fn source_monad(&self) -> &QUnitalAlgebra {
        &self.f
    }
    pub fn functor_dim(&self) -> usize {
        self.t
    }
    pub fn lambda(&self) -> &LinMap {
        &self.lambda
    }

    /// Symbols `L`, `T`, `F` with the structure maps of both monads and the
    /// exchange map as generators.
    pub fn signature(&self) -> Signature {
        let mut sig = Signature::new(self.ring());
        sig.add_symbol("L", self.l.dim()).unwrap();
        sig.add_symbol("T", self.t).unwrap();
        sig.add_symbol("F", self.f.dim()).unwrap();
        sig.add_gen("muL", word(&["L", "L"]), word(&["L"]), self.l.product().clone())
            .unwrap();
        sig.add_gen("etaL", word(&[]), word(&["L"]), self.l.unit().clone())
            .unwrap();
        sig.add_gen("muF", word(&["F", "F"]), word(&["F"]), self.f.product().clone())
            .unwrap();
        sig.add_gen("etaF", word(&[]), word(&["F"]), self.f.unit().clone())
            .unwrap();
        sig.add_gen("lambda", word(&["L", "T"]), word(&["T", "F"]), self.lambda.clone())
            .unwrap();
        sig
    }

    /// The action of `L` on the composite carrier `T F` induced by the
    /// exchange map: multiply after exchanging.
    pub fn chi(&self) -> LinMap {
        let sig = self.signature();
        let cell = seq(vec![
            CellExpr::whisker(word(&[]), CellExpr::gen("lambda"), word(&["F"])),
            CellExpr::whisker(word(&["T"]), CellExpr::gen("muF"), word(&[])),
        ]);
        evaluate(&cell, &sig).unwrap()
    }

    pub fn lifting_report(&self) -> ModuleLiftingReport {
        let sig = self.signature();
        let lam = || CellExpr::gen("lambda");
        let theta_f = || theta_cell("muF", "etaF", "F");
        let theta_l = || theta_cell("muL", "etaL", "L");
        let t_theta = || CellExpr::whisker(word(&["T"]), theta_f(), word(&[]));

        // top: L(lambda), L T(theta), lambda F, T mu; bottom: mu T, lambda, T theta
        let lift_equ_lhs = seq(vec![
            CellExpr::whisker(word(&["L"]), lam(), word(&[])),
            CellExpr::whisker(word(&["L", "T"]), theta_f(), word(&[])),
            CellExpr::whisker(word(&[]), lam(), word(&["F"])),
            CellExpr::whisker(word(&["T"]), CellExpr::gen("muF"), word(&[])),
        ]);
        let lift_equ_rhs = seq(vec![
            CellExpr::whisker(word(&[]), CellExpr::gen("muL"), word(&["T"])),
            lam(),
            t_theta(),
        ]);
        let diagram_lift_equ = check_equation(&lift_equ_lhs, &lift_equ_rhs, &sig)
            .unwrap()
            .holds;

        let reg_lhs = seq(vec![
            CellExpr::whisker(word(&[]), theta_l(), word(&["T"])),
            lam(),
            t_theta(),
        ]);
        let reg_rhs = seq(vec![lam(), t_theta()]);
        let equation_lift_equ_reg = check_equation(&reg_lhs, &reg_rhs, &sig).unwrap().holds;

        let rect_lhs = seq(vec![
            CellExpr::whisker(word(&["L"]), lam(), word(&[])),
            CellExpr::whisker(word(&[]), lam(), word(&["F"])),
            CellExpr::whisker(word(&["T"]), CellExpr::gen("muF"), word(&[])),
        ]);
        let rect_rhs = seq(vec![
            CellExpr::whisker(word(&[]), CellExpr::gen("muL"), word(&["T"])),
            lam(),
        ]);
        let rect = check_equation(&rect_lhs, &rect_rhs, &sig).unwrap().holds;
        let absorb_left = check_equation(
            &seq(vec![CellExpr::whisker(word(&[]), theta_l(), word(&["T"])), lam()]),
            &lam(),
            &sig,
        )
        .unwrap()
        .holds;
        let absorb_right =
            check_equation(&seq(vec![lam(), t_theta()]), &lam(), &sig).unwrap().holds;

        ModuleLiftingReport {
            diagram_lift_equ,
            equation_lift_equ_reg,
            weak_diagrams: rect && absorb_left && absorb_right,
        }
    }

    /// The normalized representative `T theta . lambda`; inducing the same
    /// action on `T F`, it is the exchange map recovered from that action.
    pub fn normalized(&self) -> ModuleEntwining {
        let sig = self.signature();
        let cell = seq(vec![
            CellExpr::gen("lambda"),
            CellExpr::whisker(word(&["T"]), theta_cell("muF", "etaF", "F"), word(&[])),
        ]);
        ModuleEntwining {
            l: self.l.clone(),
            f: self.f.clone(),
            t: self.t,
            lambda: evaluate(&cell, &sig).unwrap(),
        }
    }

    /// Lift a compatible module `(A, phi)` over the source monad to the
    /// module `(T A, T phi . lambda A)` over the target monad.
    pub fn lift_module(&self, m: &AlgebraModule) -> Result<AlgebraModule> {
        let report = self.lifting_report();
        if !report.diagram_lift_equ {
            return Err(Error::LiftingDiagramFails("lift-equ"));
        }
        if !report.equation_lift_equ_reg {
            return Err(Error::LiftingDiagramFails("lift-equ-reg"));
        }
        if !report.weak_diagrams {
            return Err(Error::LiftingDiagramFails("lift-equ-r"));
        }
        if !m.report().compatible {
            return Err(Error::Invalid("module action is not compatible".into()));
        }
        let id_k = LinMap::identity(self.ring(), m.dim());
        let id_t = LinMap::identity(self.ring(), self.t);
        let action = LinMap::compose(
            &LinMap::tensor(&id_t, m.action())?,
            &LinMap::tensor(&self.lambda, &id_k)?,
        )?;
        AlgebraModule::new(self.l.clone(), self.t * m.dim(), action)
    }

    /// Absorption of a unit insertion by the lifted action of a compatible
    /// module: `T phi . lambda A` equals itself precomposed with
    /// `L T phi . L T eta A`.
    pub fn lifted_action_absorption(&self, m: &AlgebraModule) -> Result<bool> {
        let mut sig = self.signature();
        sig.add_symbol("A", m.dim())?;
        sig.add_gen("phi", word(&["F", "A"]), word(&["A"]), m.action().clone())?;
        let lifted = || {
            seq(vec![
                CellExpr::whisker(word(&[]), CellExpr::gen("lambda"), word(&["A"])),
                CellExpr::whisker(word(&["T"]), CellExpr::gen("phi"), word(&[])),
            ])
        };
        let rhs = seq(vec![
            CellExpr::whisker(word(&["L", "T"]), CellExpr::gen("etaF"), word(&["A"])),
            CellExpr::whisker(word(&["L", "T"]), CellExpr::gen("phi"), word(&[])),
            lifted(),
        ]);
        Ok(check_equation(&lifted(), &rhs, &sig)?.holds)
    }
}

/// Recover the exchange map from a compatible action `rho` of `l` on the
/// composite carrier `t * f`: evaluate the action on a unit insertion.
pub fn entwining_from_action(
    l: &QUnitalAlgebra,
    f: &QUnitalAlgebra,
    t: usize,
    rho: &LinMap,
) -> Result<ModuleEntwining> {
    let flags = module_flags(l, t * f.dim(), rho)?;
    if !flags.action_ok {
        return Err(Error::NotAModule);
    }
    if !flags.compatible {
        return Err(Error::Invalid("action on the composite is not compatible".into()));
    }
    let id_lt = LinMap::identity(l.ring(), l.dim() * t);
    let lambda = LinMap::compose(rho, &LinMap::tensor(&id_lt, f.unit())?)?;
    ModuleEntwining::new(l.clone(), f.clone(), t, lambda)
}

/// An exchange map `psi: T G -> H T` between a source-side comonad `G`, a
/// functor carrier of dimension `t` and a target-side comonad `H`.
#[derive(Debug, Clone)]
pub struct ComoduleEntwining {
    g: QCounitalCoalgebra,
    h: QCounitalCoalgebra,
    t: usize,
    psi: LinMap,
}

/// Flags for the three lifting conditions on a [`ComoduleEntwining`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComoduleLiftingReport {
    pub diagram_lift_equ_co: bool,
    pub equation_lift_equ_reg_co: bool,
    pub weak_diagrams: bool,
}

impl ComoduleLiftingReport {
    pub fn all(&self) -> bool {
        self.diagram_lift_equ_co && self.equation_lift_equ_reg_co && self.weak_diagrams
    }
}

impl ComoduleEntwining {
    pub fn new(
        g: QCounitalCoalgebra,
        h: QCounitalCoalgebra,
        t: usize,
        psi: LinMap,
    ) -> Result<Self> {
        if g.ring() != h.ring() || psi.ring() != g.ring() {
            return Err(Error::RingMismatch);
        }
        if psi.rows() != h.dim() * t || psi.cols() != t * g.dim() {
            return Err(Error::DimMismatch {
                expected: h.dim() * t * t * g.dim(),
                got: psi.rows() * psi.cols(),
                context: "entwining map shape T G -> H T",
            });
        }
        Ok(ComoduleEntwining { g, h, t, psi })
    }

    pub fn ring(&self) -> ExactRing {
        self.g.ring()
    }
    pub fn source_comonad(&self) -> &QCounitalCoalgebra {
        &self.g
    }
    pub fn target_comonad(&self) -> &QCounitalCoalgebra {
        &self.h
    }
    pub fn functor_dim(&self) -> usize {
        self.t
    }
    pub fn psi(&self) -> &LinMap {
        &self.psi
    }

    pub fn signature(&self) -> Signature {
        let mut sig = Signature::new(self.ring());
        sig.add_symbol("T", self.t).unwrap();
        sig.add_symbol("G", self.g.dim()).unwrap();
        sig.add_symbol("H", self.h.dim()).unwrap();
        sig.add_gen(
            "deltaG",
            word(&["G"]),
            word(&["G", "G"]),
            self.g.coproduct().clone(),
        )
        .unwrap();
        sig.add_gen("epsG", word(&["G"]), word(&[]), self.g.counit().clone())
            .unwrap();
        sig.add_gen(
            "deltaH",
            word(&["H"]),
            word(&["H", "H"]),
            self.h.coproduct().clone(),
        )
        .unwrap();
        sig.add_gen("epsH", word(&["H"]), word(&[]), self.h.counit().clone())
            .unwrap();
        sig.add_gen("psi", word(&["T", "G"]), word(&["H", "T"]), self.psi.clone())
            .unwrap();
        sig
    }

    /// The coaction of `H` on the composite carrier `T G` induced by the
    /// exchange map: comultiply before exchanging.
    pub fn zeta(&self) -> LinMap {
        let sig = self.signature();
        let cell = seq(vec![
            CellExpr::whisker(word(&["T"]), CellExpr::gen("deltaG"), word(&[])),
            CellExpr::whisker(word(&[]), CellExpr::gen("psi"), word(&["G"])),
        ]);
        evaluate(&cell, &sig).unwrap()
    }

    pub fn lifting_report(&self) -> ComoduleLiftingReport {
        let sig = self.signature();
        let psi = || CellExpr::gen("psi");
        let gamma_g = || gamma_cell("deltaG", "epsG", "G");
        let gamma_h = || gamma_cell("deltaH", "epsH", "H");
        let t_gamma = || CellExpr::whisker(word(&["T"]), gamma_g(), word(&[]));

        let lift_lhs = seq(vec![
            t_gamma(),
            psi(),
            CellExpr::whisker(word(&[]), CellExpr::gen("deltaH"), word(&["T"])),
        ]);
        let lift_rhs = seq(vec![
            CellExpr::whisker(word(&["T"]), CellExpr::gen("deltaG"), word(&[])),
            CellExpr::whisker(word(&[]), psi(), word(&["G"])),
            CellExpr::whisker(word(&["H", "T"]), gamma_g(), word(&[])),
            CellExpr::whisker(word(&["H"]), psi(), word(&[])),
        ]);
        let diagram_lift_equ_co = check_equation(&lift_lhs, &lift_rhs, &sig).unwrap().holds;

        let reg_lhs = seq(vec![
            t_gamma(),
            psi(),
            CellExpr::whisker(word(&[]), gamma_h(), word(&["T"])),
        ]);
        let reg_rhs = seq(vec![t_gamma(), psi()]);
        let equation_lift_equ_reg_co = check_equation(&reg_lhs, &reg_rhs, &sig).unwrap().holds;

        let rect_lhs = seq(vec![
            CellExpr::whisker(word(&["T"]), CellExpr::gen("deltaG"), word(&[])),
            CellExpr::whisker(word(&[]), psi(), word(&["G"])),
            CellExpr::whisker(word(&["H"]), psi(), word(&[])),
        ]);
        let rect_rhs = seq(vec![
            psi(),
            CellExpr::whisker(word(&[]), CellExpr::gen("deltaH"), word(&["T"])),
        ]);
        let rect = check_equation(&rect_lhs, &rect_rhs, &sig).unwrap().holds;
        let absorb_left = check_equation(&seq(vec![t_gamma(), psi()]), &psi(), &sig)
            .unwrap()
            .holds;
        let absorb_right = check_equation(
            &seq(vec![psi(), CellExpr::whisker(word(&[]), gamma_h(), word(&["T"]))]),
            &psi(),
            &sig,
        )
        .unwrap()
        .holds;

        ComoduleLiftingReport {
            diagram_lift_equ_co,
            equation_lift_equ_reg_co,
            weak_diagrams: rect && absorb_left && absorb_right,
        }
    }

    /// The normalized representative `psi . T gamma`.
    pub fn normalized(&self) -> ComoduleEntwining {
        let sig = self.signature();
        let cell = seq(vec![
            CellExpr::whisker(word(&["T"]), gamma_cell("deltaG", "epsG", "G"), word(&[])),
            CellExpr::gen("psi"),
        ]);
        ComoduleEntwining {
            g: self.g.clone(),
            h: self.h.clone(),
            t: self.t,
            psi: evaluate(&cell, &sig).unwrap(),
        }
    }

    /// Lift a compatible comodule `(A, upsilon)` over the source comonad to
    /// the comodule `(T A, psi A . T upsilon)` over the target comonad.
    pub fn lift_comodule(&self, m: &CoalgebraComodule) -> Result<CoalgebraComodule> {
        let report = self.lifting_report();
        if !report.diagram_lift_equ_co {
            return Err(Error::LiftingDiagramFails("lift-equ-co"));
        }
        if !report.equation_lift_equ_reg_co {
            return Err(Error::LiftingDiagramFails("lift-equ-reg-co"));
        }
        if !report.weak_diagrams {
            return Err(Error::LiftingDiagramFails("lift-equ-r-co"));
        }
        if !m.report().compatible {
            return Err(Error::Invalid("comodule coaction is not compatible".into()));
        }
        let id_k = LinMap::identity(self.ring(), m.dim());
        let id_t = LinMap::identity(self.ring(), self.t);
        let coaction = LinMap::compose(
            &LinMap::tensor(&self.psi, &id_k)?,
            &LinMap::tensor(&id_t, m.coaction())?,
        )?;
        CoalgebraComodule::new(self.h.clone(), self.t * m.dim(), coaction)
    }
}

/// Recover the exchange map from a compatible coaction `upsilon` of `h` on
/// the composite carrier `t * g`: apply the coaction, then the counit on
/// the inner leg.
pub fn entwining_from_coaction(
    g: &QCounitalCoalgebra,
    h: &QCounitalCoalgebra,
    t: usize,
    upsilon: &LinMap,
) -> Result<ComoduleEntwining> {
    let flags = comodule_flags(h, t * g.dim(), upsilon)?;
    if !flags.coaction_ok {
        return Err(Error::NotAComodule);
    }
    if !flags.compatible {
        return Err(Error::Invalid(
            "coaction on the composite is not compatible".into(),
        ));
    }
    let id_ht = LinMap::identity(g.ring(), h.dim() * t);
    let psi = LinMap::compose(&LinMap::tensor(&id_ht, g.counit())?, upsilon)?;
    ComoduleEntwining::new(g.clone(), h.clone(), t, psi)
}

/// Diagram flags for the entwined product of two weak monads.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EntwinedProductReport {
    pub lift_equ_r_end_rect: bool,
    pub lift_equ_r_end_square: bool,
    pub lift_q_mon_rect: bool,
    pub lift_q_mon_square: bool,
}

impl EntwinedProductReport {
    pub fn all(&self) -> bool {
        self.lift_equ_r_end_rect
            && self.lift_equ_r_end_square
            && self.lift_q_mon_rect
            && self.lift_q_mon_square
    }
}

/// The entwined product of weak monads `F` (inner) and `T` (outer) along an
/// exchange map `lambda: F T -> T F`: product and quasi-unit on the carrier
/// `T F`, together with the diagram flags characterizing when the result is
/// again a weak monad (up to normalization of the exchange map).
#[derive(Debug, Clone)]
pub struct EntwinedProduct {
    f: QUnitalAlgebra,
    t: QUnitalAlgebra,
    lambda: LinMap,
    /// `T T mu` then `mu-check F` after exchanging the middle legs.
    pub product: LinMap,
    /// The unit of `F`, pushed through `F eta-check` and the exchange map.
    pub unit: LinMap,
    pub diagrams: EntwinedProductReport,
}

fn product_signature(f: &QUnitalAlgebra, t: &QUnitalAlgebra, lambda: &LinMap) -> Signature {
    let mut sig = Signature::new(f.ring());
    sig.add_symbol("F", f.dim()).unwrap();
    sig.add_symbol("T", t.dim()).unwrap();
    sig.add_gen("muF", word(&["F", "F"]), word(&["F"]), f.product().clone())
        .unwrap();
    sig.add_gen("etaF", word(&[]), word(&["F"]), f.unit().clone())
        .unwrap();
    sig.add_gen("muT", word(&["T", "T"]), word(&["T"]), t.product().clone())
        .unwrap();
    sig.add_gen("etaT", word(&[]), word(&["T"]), t.unit().clone())
        .unwrap();
    sig.add_gen("lambda", word(&["F", "T"]), word(&["T", "F"]), lambda.clone())
        .unwrap();
    sig
}

pub fn entwined_product(
    f: &QUnitalAlgebra,
    t: &QUnitalAlgebra,
    lambda: &LinMap,
) -> Result<EntwinedProduct> {
    if f.ring() != t.ring() || lambda.ring() != f.ring() {
        return Err(Error::RingMismatch);
    }
    if f.law_report().classification != MonadClass::WeakMonad
        || t.law_report().classification != MonadClass::WeakMonad
    {
        return Err(Error::NotWeakMonad);
    }
    if lambda.rows() != t.dim() * f.dim() || lambda.cols() != f.dim() * t.dim() {
        return Err(Error::DimMismatch {
            expected: t.dim() * f.dim() * f.dim() * t.dim(),
            got: lambda.rows() * lambda.cols(),
            context: "entwining map shape F T -> T F",
        });
    }
    let sig = product_signature(f, t, lambda);
    let lam = || CellExpr::gen("lambda");
    let theta_f = || theta_cell("muF", "etaF", "F");
    let theta_t = || theta_cell("muT", "etaT", "T");

    let product = evaluate(
        &seq(vec![
            CellExpr::whisker(word(&["T"]), lam(), word(&["F"])),
            CellExpr::whisker(word(&["T", "T"]), CellExpr::gen("muF"), word(&[])),
            CellExpr::whisker(word(&[]), CellExpr::gen("muT"), word(&["F"])),
        ]),
        &sig,
    )?;
    let unit = evaluate(
        &seq(vec![
            CellExpr::gen("etaF"),
            CellExpr::whisker(word(&["F"]), CellExpr::gen("etaT"), word(&[])),
            lam(),
        ]),
        &sig,
    )?;

    let rect_end_lhs = seq(vec![
        CellExpr::whisker(word(&["F"]), lam(), word(&[])),
        CellExpr::whisker(word(&[]), lam(), word(&["F"])),
        CellExpr::whisker(word(&["T"]), CellExpr::gen("muF"), word(&[])),
    ]);
    let rect_end_rhs = seq(vec![
        CellExpr::whisker(word(&[]), CellExpr::gen("muF"), word(&["T"])),
        lam(),
    ]);
    let lift_equ_r_end_rect = check_equation(&rect_end_lhs, &rect_end_rhs, &sig)?.holds;
    let square_end_left = check_equation(
        &seq(vec![CellExpr::whisker(word(&[]), theta_f(), word(&["T"])), lam()]),
        &lam(),
        &sig,
    )?
    .holds;
    let square_end_right = check_equation(
        &seq(vec![lam(), CellExpr::whisker(word(&["T"]), theta_f(), word(&[]))]),
        &lam(),
        &sig,
    )?
    .holds;

    let rect_qmon_lhs = seq(vec![
        CellExpr::whisker(word(&[]), lam(), word(&["T"])),
        CellExpr::whisker(word(&["T"]), lam(), word(&[])),
        CellExpr::whisker(word(&[]), CellExpr::gen("muT"), word(&["F"])),
    ]);
    let rect_qmon_rhs = seq(vec![
        CellExpr::whisker(word(&["F"]), CellExpr::gen("muT"), word(&[])),
        lam(),
    ]);
    let lift_q_mon_rect = check_equation(&rect_qmon_lhs, &rect_qmon_rhs, &sig)?.holds;
    let square_qmon_left = check_equation(
        &seq(vec![CellExpr::whisker(word(&["F"]), theta_t(), word(&[])), lam()]),
        &lam(),
        &sig,
    )?
    .holds;
    let square_qmon_right = check_equation(
        &seq(vec![lam(), CellExpr::whisker(word(&[]), theta_t(), word(&["F"]))]),
        &lam(),
        &sig,
    )?
    .holds;

    Ok(EntwinedProduct {
        f: f.clone(),
        t: t.clone(),
        lambda: lambda.clone(),
        product,
        unit,
        diagrams: EntwinedProductReport {
            lift_equ_r_end_rect,
            lift_equ_r_end_square: square_end_left && square_end_right,
            lift_q_mon_rect,
            lift_q_mon_square: square_qmon_left && square_qmon_right,
        },
    })
}

impl EntwinedProduct {
    pub fn dim(&self) -> usize {
        self.t.dim() * self.f.dim()
    }

    /// The entwined structure as a q-unital algebra; errors when the product
    /// fails associativity.
    pub fn algebra(&self) -> Result<QUnitalAlgebra> {
        QUnitalAlgebra::new(
            self.f.ring(),
            self.dim(),
            self.product.clone(),
            self.unit.clone(),
        )
    }

    /// Does the entwined structure satisfy all weak-monad laws?
    pub fn is_weak(&self) -> bool {
        self.algebra()
            .map(|a| a.law_report().classification == MonadClass::WeakMonad)
            .unwrap_or(false)
    }

    /// `lambda . F eta-check : F -> T F`, the inner inclusion.
    pub fn inclusion_f(&self) -> LinMap {
        let id_f = LinMap::identity(self.f.ring(), self.f.dim());
        let ins = LinMap::tensor(&id_f, self.t.unit()).unwrap();
        LinMap::compose(&self.lambda, &ins).unwrap()
    }

    /// `lambda . eta T : T -> T F`, the outer inclusion.
    pub fn inclusion_t(&self) -> LinMap {
        let id_t = LinMap::identity(self.t.ring(), self.t.dim());
        let ins = LinMap::tensor(self.f.unit(), &id_t).unwrap();
        LinMap::compose(&self.lambda, &ins).unwrap()
    }

    /// The exchange map recovered from the entwined product by multiplying
    /// the two inclusions; a fixed point of this reconstruction satisfies
    /// the absorption squares.
    pub fn normalized_lambda(&self) -> LinMap {
        let pair = LinMap::tensor(&self.inclusion_f(), &self.inclusion_t()).unwrap();
        LinMap::compose(&self.product, &pair).unwrap()
    }
}

/// Diagram flags for the entwined coproduct of two weak comonads.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EntwinedCoproductReport {
    pub lift_equ_e_co_rect: bool,
    pub lift_equ_e_co_square: bool,
    pub lift_comon_rect: bool,
    pub lift_comon_square: bool,
}

impl EntwinedCoproductReport {
    pub fn all(&self) -> bool {
        self.lift_equ_e_co_rect
            && self.lift_equ_e_co_square
            && self.lift_comon_rect
            && self.lift_comon_square
    }
}

/// The entwined coproduct of weak comonads `G` (inner) and `T` (outer)
/// along an exchange map `psi: T G -> G T`: coproduct (`delta_entwined`)
/// and quasi-counit on the carrier `T G`.
#[derive(Debug, Clone)]
pub struct EntwinedCoproduct {
    g: QCounitalCoalgebra,
    t: QCounitalCoalgebra,
    psi: LinMap,
    pub delta_entwined: LinMap,
    pub counit: LinMap,
    pub diagrams: EntwinedCoproductReport,
}

fn coproduct_signature(g: &QCounitalCoalgebra, t: &QCounitalCoalgebra, psi: &LinMap) -> Signature {
    let mut sig = Signature::new(g.ring());
    sig.add_symbol("G", g.dim()).unwrap();
    sig.add_symbol("T", t.dim()).unwrap();
    sig.add_gen(
        "deltaG",
        word(&["G"]),
        word(&["G", "G"]),
        g.coproduct().clone(),
    )
    .unwrap();
    sig.add_gen("epsG", word(&["G"]), word(&[]), g.counit().clone())
        .unwrap();
    sig.add_gen(
        "deltaT",
        word(&["T"]),
        word(&["T", "T"]),
        t.coproduct().clone(),
    )
    .unwrap();
    sig.add_gen("epsT", word(&["T"]), word(&[]), t.counit().clone())
        .unwrap();
    sig.add_gen("psi", word(&["T", "G"]), word(&["G", "T"]), psi.clone())
        .unwrap();
    sig
}

pub fn entwined_coproduct(
    g: &QCounitalCoalgebra,
    t: &QCounitalCoalgebra,
    psi: &LinMap,
) -> Result<EntwinedCoproduct> {
    if g.ring() != t.ring() || psi.ring() != g.ring() {
        return Err(Error::RingMismatch);
    }
    if g.law_report().classification != ComonadClass::WeakComonad
        || t.law_report().classification != ComonadClass::WeakComonad
    {
        return Err(Error::NotWeakComonad);
    }
    if psi.rows() != g.dim() * t.dim() || psi.cols() != t.dim() * g.dim() {
        return Err(Error::DimMismatch {
            expected: g.dim() * t.dim() * t.dim() * g.dim(),
            got: psi.rows() * psi.cols(),
            context: "entwining map shape T G -> G T",
        });
    }
    let sig = coproduct_signature(g, t, psi);
    let psi_c = || CellExpr::gen("psi");
    let gamma_g = || gamma_cell("deltaG", "epsG", "G");
    let gamma_t = || gamma_cell("deltaT", "epsT", "T");

    let delta_entwined = evaluate(
        &seq(vec![
            CellExpr::whisker(word(&[]), CellExpr::gen("deltaT"), word(&["G"])),
            CellExpr::whisker(word(&["T", "T"]), CellExpr::gen("deltaG"), word(&[])),
            CellExpr::whisker(word(&["T"]), psi_c(), word(&["G"])),
        ]),
        &sig,
    )?;
    let counit = evaluate(
        &seq(vec![
            psi_c(),
            CellExpr::whisker(word(&["G"]), CellExpr::gen("epsT"), word(&[])),
            CellExpr::gen("epsG"),
        ]),
        &sig,
    )?;

    let rect_e_co_lhs = seq(vec![
        CellExpr::whisker(word(&["T"]), CellExpr::gen("deltaG"), word(&[])),
        CellExpr::whisker(word(&[]), psi_c(), word(&["G"])),
        CellExpr::whisker(word(&["G"]), psi_c(), word(&[])),
    ]);
    let rect_e_co_rhs = seq(vec![
        psi_c(),
        CellExpr::whisker(word(&[]), CellExpr::gen("deltaG"), word(&["T"])),
    ]);
    let lift_equ_e_co_rect = check_equation(&rect_e_co_lhs, &rect_e_co_rhs, &sig)?.holds;
    let square_e_co_left = check_equation(
        &seq(vec![CellExpr::whisker(word(&["T"]), gamma_g(), word(&[])), psi_c()]),
        &psi_c(),
        &sig,
    )?
    .holds;
    let square_e_co_right = check_equation(
        &seq(vec![psi_c(), CellExpr::whisker(word(&[]), gamma_g(), word(&["T"]))]),
        &psi_c(),
        &sig,
    )?
    .holds;

    let rect_comon_lhs = seq(vec![
        CellExpr::whisker(word(&[]), CellExpr::gen("deltaT"), word(&["G"])),
        CellExpr::whisker(word(&["T"]), psi_c(), word(&[])),
        CellExpr::whisker(word(&[]), psi_c(), word(&["T"])),
    ]);
    let rect_comon_rhs = seq(vec![
        psi_c(),
        CellExpr::whisker(word(&["G"]), CellExpr::gen("deltaT"), word(&[])),
    ]);
    let lift_comon_rect = check_equation(&rect_comon_lhs, &rect_comon_rhs, &sig)?.holds;
    let square_comon_left = check_equation(
        &seq(vec![CellExpr::whisker(word(&[]), gamma_t(), word(&["G"])), psi_c()]),
        &psi_c(),
        &sig,
    )?
    .holds;
    let square_comon_right = check_equation(
        &seq(vec![psi_c(), CellExpr::whisker(word(&["G"]), gamma_t(), word(&[]))]),
        &psi_c(),
        &sig,
    )?
    .holds;

    Ok(EntwinedCoproduct {
        g: g.clone(),
        t: t.clone(),
        psi: psi.clone(),
        delta_entwined,
        counit,
        diagrams: EntwinedCoproductReport {
            lift_equ_e_co_rect,
            lift_equ_e_co_square: square_e_co_left && square_e_co_right,
            lift_comon_rect,
            lift_comon_square: square_comon_left && square_comon_right,
        },
    })
}

impl EntwinedCoproduct {
    pub fn dim(&self) -> usize {
        self.t.dim() * self.g.dim()
    }

    /// The entwined structure as a q-counital coalgebra; errors when the
    /// coproduct fails coassociativity.
    pub fn coalgebra(&self) -> Result<QCounitalCoalgebra> {
        QCounitalCoalgebra::new(
            self.g.ring(),
            self.dim(),
            self.delta_entwined.clone(),
            self.counit.clone(),
        )
    }

    /// Does the entwined structure satisfy all weak-comonad laws?
    pub fn is_weak(&self) -> bool {
        self.coalgebra()
            .map(|c| c.law_report().classification == ComonadClass::WeakComonad)
            .unwrap_or(false)
    }

    /// `G eps-check . psi : T G -> G`, the inner projection.
    pub fn projection_g(&self) -> LinMap {
        let id_g = LinMap::identity(self.g.ring(), self.g.dim());
        let drop = LinMap::tensor(&id_g, self.t.counit()).unwrap();
        LinMap::compose(&drop, &self.psi).unwrap()
    }

    /// `eps T . psi : T G -> T`, the outer projection.
    pub fn projection_t(&self) -> LinMap {
        let id_t = LinMap::identity(self.t.ring(), self.t.dim());
        let drop = LinMap::tensor(self.g.counit(), &id_t).unwrap();
        LinMap::compose(&drop, &self.psi).unwrap()
    }

    /// The exchange map recovered from the entwined coproduct by
    /// comultiplying and projecting each leg.
    pub fn normalized_psi(&self) -> LinMap {
        let pair = LinMap::tensor(&self.projection_g(), &self.projection_t()).unwrap();
        LinMap::compose(&pair, &self.delta_entwined).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comonadics::enumerate_compatible_comodules;
    use crate::comonadics::is_comonad_morphism;
    use crate::fixtures;
    use crate::monadics::{enumerate_compatible_modules, is_monad_morphism};

    const Z2: ExactRing = ExactRing::Zn(2);

    fn swap(ring: ExactRing, a: usize, b: usize) -> LinMap {
        // e_i (x) e_j -> e_j (x) e_i
        let mut m = LinMap::zero(ring, a * b, a * b);
        for i in 0..a {
            for j in 0..b {
                m.set(j * a + i, i * b + j, ring.one());
            }
        }
        m
    }

    fn weak2() -> QUnitalAlgebra {
        fixtures::i2().mu_tilde().unwrap()
    }

    fn coweak2() -> QCounitalCoalgebra {
        fixtures::c2().delta_tilde().unwrap()
    }

    fn flip_entwining() -> ModuleEntwining {
        let m = weak2();
        ModuleEntwining::new(m.clone(), m.clone(), 2, swap(Z2, 2, 2)).unwrap()
    }

    #[test]
    fn dim1_module_entwining_all_flags() {
        let one = fixtures::i1();
        let lam = LinMap::identity(Z2, 1);
        let e = ModuleEntwining::new(one.clone(), one, 1, lam).unwrap();
        assert_eq!(e.chi(), LinMap::identity(Z2, 1));
        let r = e.lifting_report();
        assert!(r.all());
    }

    #[test]
    fn chi_of_flip_multiplies_after_exchange() {
        let e = flip_entwining();
        let m = weak2();
        let id2 = LinMap::identity(Z2, 2);
        let expected = LinMap::compose(
            &LinMap::tensor(&id2, m.product()).unwrap(),
            &LinMap::tensor(&swap(Z2, 2, 2), &id2).unwrap(),
        )
        .unwrap();
        assert_eq!(e.chi(), expected);
    }

    #[test]
    fn zero_lambda_is_a_legal_entwining() {
        let m = weak2();
        let e = ModuleEntwining::new(m.clone(), m, 2, LinMap::zero(Z2, 4, 4)).unwrap();
        assert!(e.chi().is_zero());
        assert!(e.lifting_report().all());
    }

    #[test]
    fn raw_flip_passes_inserted_diagrams_but_not_absorption() {
        // the quasi-unit is not a unit, so the raw exchange map does not
        // absorb unit insertions; the diagrams that insert the idempotent
        // themselves still commute
        let r = flip_entwining().lifting_report();
        assert!(r.diagram_lift_equ);
        assert!(r.equation_lift_equ_reg);
        assert!(!r.weak_diagrams);
    }

    #[test]
    fn normalized_flip_passes_all_diagrams() {
        let n = flip_entwining().normalized();
        assert!(n.lifting_report().all());
        // normalization is idempotent
        assert_eq!(n.normalized().lambda(), n.lambda());
    }

    #[test]
    fn noncommutative_flip_fails() {
        let m = fixtures::i3().mu_tilde().unwrap();
        let e = ModuleEntwining::new(m.clone(), m, 3, swap(Z2, 3, 3)).unwrap();
        let r = e.lifting_report();
        assert!(!r.all());
    }

    #[test]
    fn lift_free_module_is_compatible() {
        let e = flip_entwining().normalized();
        let free = AlgebraModule::free(e.source_monad(), 1);
        let lifted = e.lift_module(&free).unwrap();
        assert_eq!(lifted.dim(), 2 * free.dim());
        assert!(lifted.report().compatible);
    }

    #[test]
    fn lift_all_small_compatible_modules() {
        let e = flip_entwining().normalized();
        let mods = enumerate_compatible_modules(e.source_monad(), 2, 1 << 20).unwrap();
        assert!(!mods.is_empty());
        for m in &mods {
            let lifted = e.lift_module(m).unwrap();
            assert!(lifted.report().compatible);
            assert!(e.lifted_action_absorption(m).unwrap());
        }
    }

    #[test]
    fn raw_flip_refuses_to_lift() {
        let e = flip_entwining();
        let free = AlgebraModule::free(e.source_monad(), 1);
        assert!(matches!(
            e.lift_module(&free),
            Err(Error::LiftingDiagramFails("lift-equ-r"))
        ));
    }

    #[test]
    fn action_roundtrip_recovers_normalized_lambda() {
        let e = flip_entwining();
        let rho = e.chi();
        let recovered = entwining_from_action(e.target_monad(), e.source_monad(), 2, &rho).unwrap();
        assert_eq!(recovered.lambda(), e.normalized().lambda());
        // a second pass is stationary
        let again = entwining_from_action(
            e.target_monad(),
            e.source_monad(),
            2,
            &recovered.chi(),
        )
        .unwrap();
        assert_eq!(again.lambda(), recovered.lambda());
        // and both exchange maps induce the same action
        assert_eq!(recovered.chi(), e.chi());
    }

    #[test]
    fn zero_action_roundtrip() {
        let m = weak2();
        let rho = LinMap::zero(Z2, 4, 8);
        let e = entwining_from_action(&m, &m, 2, &rho).unwrap();
        assert!(e.lambda().is_zero());
    }

    #[test]
    fn entwining_from_action_rejects_non_actions() {
        let m = weak2();
        // rho that is not associative over the algebra: constant projection
        let mut rho = LinMap::zero(Z2, 4, 8);
        rho.set(0, 7, Z2.one());
        rho.set(1, 1, Z2.one());
        let res = entwining_from_action(&m, &m, 2, &rho);
        assert!(res.is_err());
    }

    #[test]
    fn dim1_comodule_entwining_all_flags() {
        let one = fixtures::i1().transpose_dual();
        let e = ComoduleEntwining::new(one.clone(), one, 1, LinMap::identity(Z2, 1)).unwrap();
        assert_eq!(e.zeta(), LinMap::identity(Z2, 1));
        assert!(e.lifting_report().all());
    }

    #[test]
    fn coflip_mirrors_the_module_side() {
        let c = coweak2();
        let e = ComoduleEntwining::new(c.clone(), c.clone(), 2, swap(Z2, 2, 2)).unwrap();
        let r = e.lifting_report();
        assert!(r.diagram_lift_equ_co);
        assert!(r.equation_lift_equ_reg_co);
        assert!(!r.weak_diagrams);
        let n = e.normalized();
        assert!(n.lifting_report().all());
        assert_eq!(n.normalized().psi(), n.psi());
    }

    #[test]
    fn noncommutative_coflip_fails() {
        let c = fixtures::c3().delta_tilde().unwrap();
        let e = ComoduleEntwining::new(c.clone(), c, 3, swap(Z2, 3, 3)).unwrap();
        assert!(!e.lifting_report().all());
    }

    #[test]
    fn lift_all_small_compatible_comodules() {
        let c = coweak2();
        let e = ComoduleEntwining::new(c.clone(), c.clone(), 2, swap(Z2, 2, 2))
            .unwrap()
            .normalized();
        let mods = enumerate_compatible_comodules(&c, 2, 1 << 20).unwrap();
        assert!(!mods.is_empty());
        for m in &mods {
            let lifted = e.lift_comodule(m).unwrap();
            assert_eq!(lifted.dim(), 2 * m.dim());
            assert!(lifted.report().compatible);
        }
    }

    #[test]
    fn coaction_roundtrip_recovers_normalized_psi() {
        let c = coweak2();
        let e = ComoduleEntwining::new(c.clone(), c.clone(), 2, swap(Z2, 2, 2)).unwrap();
        let upsilon = e.zeta();
        let recovered = entwining_from_coaction(&c, &c, 2, &upsilon).unwrap();
        assert_eq!(recovered.psi(), e.normalized().psi());
        let again = entwining_from_coaction(&c, &c, 2, &recovered.zeta()).unwrap();
        assert_eq!(again.psi(), recovered.psi());
        assert_eq!(recovered.zeta(), e.zeta());
    }

    #[test]
    fn dim1_entwined_product() {
        let one = fixtures::i1();
        let p = entwined_product(&one, &one, &LinMap::identity(Z2, 1)).unwrap();
        assert!(p.diagrams.all());
        let alg = p.algebra().unwrap();
        assert_eq!(alg.dim(), 1);
        assert_eq!(alg.law_report().classification, MonadClass::WeakMonad);
    }

    #[test]
    fn entwined_product_requires_weak_inputs() {
        let i2 = fixtures::i2(); // q-unital only
        let res = entwined_product(&i2, &i2, &swap(Z2, 2, 2));
        assert!(matches!(res, Err(Error::NotWeakMonad)));
    }

    #[test]
    fn flip_product_is_the_componentwise_weak_monad() {
        let m = weak2();
        let p = entwined_product(&m, &m, &swap(Z2, 2, 2)).unwrap();
        // rectangles hold for a flip over a commutative product; the
        // absorption squares need the normalized exchange map
        assert!(p.diagrams.lift_equ_r_end_rect);
        assert!(p.diagrams.lift_q_mon_rect);
        assert!(!p.diagrams.lift_equ_r_end_square);
        assert!(!p.diagrams.lift_q_mon_square);
        // yet the product itself is the componentwise one and is weak
        assert!(p.is_weak());
        let alg = p.algebra().unwrap();
        assert_eq!(
            alg.unit(),
            &LinMap::from_rows(Z2, &[&[1], &[0], &[0], &[0]])
        );
        // mubar(t (x) x (x) s (x) y) = ts (x) xy
        let id2 = LinMap::identity(Z2, 2);
        let expected = LinMap::compose(
            &LinMap::tensor(m.product(), m.product()).unwrap(),
            &LinMap::tensor_all(Z2, &[&id2, &swap(Z2, 2, 2), &id2]).unwrap(),
        )
        .unwrap();
        assert_eq!(alg.product(), &expected);
    }

    #[test]
    fn normalized_flip_product_passes_all_diagrams() {
        let m = weak2();
        let raw = entwined_product(&m, &m, &swap(Z2, 2, 2)).unwrap();
        let lam = raw.normalized_lambda();
        let norm = entwined_product(&m, &m, &lam).unwrap();
        assert!(norm.diagrams.all());
        // the normalized exchange map induces the same entwined structure
        assert_eq!(norm.product, raw.product);
        assert_eq!(norm.unit, raw.unit);
        // and is a fixed point of the reconstruction
        assert_eq!(norm.normalized_lambda(), lam);
    }

    #[test]
    fn inclusions_are_monad_morphisms() {
        let m = weak2();
        let p = entwined_product(&m, &m, &swap(Z2, 2, 2)).unwrap();
        let alg = p.algebra().unwrap();
        assert!(is_monad_morphism(&m, &alg, &p.inclusion_f()).unwrap());
        assert!(is_monad_morphism(&m, &alg, &p.inclusion_t()).unwrap());
    }

    #[test]
    fn dim1_entwined_coproduct() {
        let one = fixtures::i1().transpose_dual();
        let p = entwined_coproduct(&one, &one, &LinMap::identity(Z2, 1)).unwrap();
        assert!(p.diagrams.all());
        let co = p.coalgebra().unwrap();
        assert_eq!(co.law_report().classification, ComonadClass::WeakComonad);
    }

    #[test]
    fn entwined_coproduct_requires_weak_inputs() {
        let c2 = fixtures::c2();
        let res = entwined_coproduct(&c2, &c2, &swap(Z2, 2, 2));
        assert!(matches!(res, Err(Error::NotWeakComonad)));
    }

    #[test]
    fn coflip_coproduct_is_weak_and_normalizes() {
        let c = coweak2();
        let raw = entwined_coproduct(&c, &c, &swap(Z2, 2, 2)).unwrap();
        assert!(raw.diagrams.lift_equ_e_co_rect);
        assert!(raw.diagrams.lift_comon_rect);
        assert!(!raw.diagrams.lift_equ_e_co_square);
        assert!(raw.is_weak());
        let psi = raw.normalized_psi();
        let norm = entwined_coproduct(&c, &c, &psi).unwrap();
        assert!(norm.diagrams.all());
        assert_eq!(norm.delta_entwined, raw.delta_entwined);
        assert_eq!(norm.counit, raw.counit);
        assert_eq!(norm.normalized_psi(), psi);
    }

    #[test]
    fn projections_are_comonad_morphisms() {
        let c = coweak2();
        let p = entwined_coproduct(&c, &c, &swap(Z2, 2, 2)).unwrap();
        let co = p.coalgebra().unwrap();
        assert!(is_comonad_morphism(&co, &c, &p.projection_g()).unwrap());
        assert!(is_comonad_morphism(&co, &c, &p.projection_t()).unwrap());
    }

    #[test]
    fn entwined_duality_meta_check() {
        // the transpose of an entwined product is the entwined coproduct of
        // the transposed data with the transposed exchange map
        let m = weak2();
        let p = entwined_product(&m, &m, &swap(Z2, 2, 2)).unwrap();
        let c = m.transpose_dual();
        let q = entwined_coproduct(&c, &c, &swap(Z2, 2, 2).transpose()).unwrap();
        assert_eq!(p.product.transpose(), q.delta_entwined);
        assert_eq!(p.unit.transpose(), q.counit);
    }
}

//! Dual pairings of tensor functors `L = A (x) -` and `R = B (x) -` over one
//! ring, given by a quasi-unit `eta in B (x) A` and a quasi-counit
//! `eps: A (x) B -> R`. Includes the four natural endomorphisms, regularity
//! and symmetry flags, the hom-set oracle validating the closed forms, the
//! related adjunction obtained by splitting, induced (co)monads, and the
//! comparison-functor diagnostics.

use crate::comonadics::QCounitalCoalgebra;
use crate::error::{Error, Result};
use crate::linmap::LinMap;
use crate::monadics::{module_flags, OracleReport, QUnitalAlgebra};
use crate::ring::ExactRing;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualPairing {
    ring: ExactRing,
    a: usize,
    b: usize,
    /// Column of length `b * a`.
    eta: LinMap,
    /// Row of length `a * b`.
    eps: LinMap,
}

/// Hom-set direction of [`DualPairing::transpose`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `Mor(L(X), Y) -> Mor(X, R(Y))`, `f -> R(f) . eta_X`.
    Alpha,
    /// `Mor(X, R(Y)) -> Mor(L(X), Y)`, `g -> eps_Y . L(g)`.
    Beta,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingReport {
    pub alpha_regular: bool,
    pub beta_regular: bool,
    pub alpha_symmetric: bool,
    pub beta_symmetric: bool,
    pub theta: LinMap,
    pub theta_bar: LinMap,
    pub gamma: LinMap,
    pub gamma_bar: LinMap,
}

impl PairingReport {
    pub fn regular(&self) -> bool {
        self.alpha_regular && self.beta_regular
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComparisonReport {
    pub hat_r_lands_compatible: bool,
    pub triangle_left: bool,
    pub triangle_right: bool,
    pub alpha_symmetry_diagram: bool,
}

impl DualPairing {
    pub fn new(ring: ExactRing, a: usize, b: usize, eta: LinMap, eps: LinMap) -> Result<Self> {
        if eta.ring() != ring || eps.ring() != ring {
            return Err(Error::RingMismatch);
        }
        if eta.rows() != b * a || eta.cols() != 1 {
            return Err(Error::DimMismatch {
                expected: b * a,
                got: eta.rows() * eta.cols(),
                context: "eta shape (b*a x 1)",
            });
        }
        if eps.rows() != 1 || eps.cols() != a * b {
            return Err(Error::DimMismatch {
                expected: a * b,
                got: eps.rows() * eps.cols(),
                context: "eps shape (1 x a*b)",
            });
        }
        Ok(DualPairing {
            ring,
            a,
            b,
            eta,
            eps,
        })
    }

    pub fn ring(&self) -> ExactRing {
        self.ring
    }
    pub fn a_dim(&self) -> usize {
        self.a
    }
    pub fn b_dim(&self) -> usize {
        self.b
    }
    pub fn eta(&self) -> &LinMap {
        &self.eta
    }
    pub fn eps(&self) -> &LinMap {
        &self.eps
    }

    fn ids(&self, n: usize) -> LinMap {
        LinMap::identity(self.ring, n)
    }

    /// Apply `alpha` (`f: a*x -> y` to `x -> b*y`) or `beta`
    /// (`g: x -> b*y` to `a*x -> y`).
    pub fn transpose(&self, dir: Direction, f: &LinMap, x_dim: usize, y_dim: usize) -> Result<LinMap> {
        let id_x = self.ids(x_dim);
        let id_y = self.ids(y_dim);
        match dir {
            Direction::Alpha => {
                if f.rows() != y_dim || f.cols() != self.a * x_dim {
                    return Err(Error::DimMismatch {
                        expected: y_dim * self.a * x_dim,
                        got: f.rows() * f.cols(),
                        context: "alpha input shape (y x a*x)",
                    });
                }
                LinMap::compose(
                    &LinMap::tensor(&self.ids(self.b), f)?,
                    &LinMap::tensor(&self.eta, &id_x)?,
                )
            }
            Direction::Beta => {
                if f.rows() != self.b * y_dim || f.cols() != x_dim {
                    return Err(Error::DimMismatch {
                        expected: self.b * y_dim * x_dim,
                        got: f.rows() * f.cols(),
                        context: "beta input shape (b*y x x)",
                    });
                }
                LinMap::compose(
                    &LinMap::tensor(&self.eps, &id_y)?,
                    &LinMap::tensor(&self.ids(self.a), f)?,
                )
            }
        }
    }

    /// `theta = R eps L . RL eta` on the carrier `B (x) A`.
    pub fn theta(&self) -> LinMap {
        let id_ba = self.ids(self.b * self.a);
        let insert = LinMap::tensor(&id_ba, &self.eta).unwrap();
        let mid =
            LinMap::tensor_all(self.ring, &[&self.ids(self.b), &self.eps, &self.ids(self.a)])
                .unwrap();
        LinMap::compose(&mid, &insert).unwrap()
    }

    /// `theta_bar = R eps L . eta RL`.
    pub fn theta_bar(&self) -> LinMap {
        let id_ba = self.ids(self.b * self.a);
        let insert = LinMap::tensor(&self.eta, &id_ba).unwrap();
        let mid =
            LinMap::tensor_all(self.ring, &[&self.ids(self.b), &self.eps, &self.ids(self.a)])
                .unwrap();
        LinMap::compose(&mid, &insert).unwrap()
    }

    /// `gamma = LR eps . L eta R` on the carrier `A (x) B`.
    pub fn gamma(&self) -> LinMap {
        let insert =
            LinMap::tensor_all(self.ring, &[&self.ids(self.a), &self.eta, &self.ids(self.b)])
                .unwrap();
        let hit = LinMap::tensor(&self.ids(self.a * self.b), &self.eps).unwrap();
        LinMap::compose(&hit, &insert).unwrap()
    }

    /// `gamma_bar = eps LR . L eta R`.
    pub fn gamma_bar(&self) -> LinMap {
        let insert =
            LinMap::tensor_all(self.ring, &[&self.ids(self.a), &self.eta, &self.ids(self.b)])
                .unwrap();
        let hit = LinMap::tensor(&self.eps, &self.ids(self.a * self.b)).unwrap();
        LinMap::compose(&hit, &insert).unwrap()
    }

    pub fn report(&self) -> PairingReport {
        let theta = self.theta();
        let theta_bar = self.theta_bar();
        let gamma = self.gamma();
        let gamma_bar = self.gamma_bar();
        let alpha_regular = LinMap::compose(&theta, &self.eta).unwrap() == self.eta;
        let beta_regular = LinMap::compose(&self.eps, &gamma).unwrap() == self.eps;
        PairingReport {
            alpha_regular,
            beta_regular,
            alpha_symmetric: theta == theta_bar,
            beta_symmetric: gamma == gamma_bar,
            theta,
            theta_bar,
            gamma,
            gamma_bar,
        }
    }

    /// Pointwise regularity scan on hom-sets between test objects
    /// `R^0..R^dims`, validating the closed forms in [`Self::report`].
    pub fn homset_oracle(&self, dims: usize, cap: u128) -> Result<OracleReport> {
        let mut alpha_regular = true;
        let mut beta_regular = true;
        for x in 0..=dims {
            for y in 0..=dims {
                for f in LinMap::enumerate_maps(self.a * x, y, self.ring, cap)? {
                    let af = self.transpose(Direction::Alpha, &f, x, y)?;
                    let baf = self.transpose(Direction::Beta, &af, x, y)?;
                    if self.transpose(Direction::Alpha, &baf, x, y)? != af {
                        alpha_regular = false;
                    }
                }
                for g in LinMap::enumerate_maps(x, self.b * y, self.ring, cap)? {
                    let bg = self.transpose(Direction::Beta, &g, x, y)?;
                    let abg = self.transpose(Direction::Alpha, &bg, x, y)?;
                    if self.transpose(Direction::Beta, &abg, x, y)? != bg {
                        beta_regular = false;
                    }
                }
            }
        }
        let report = self.report();
        let closed_form = report.regular();
        Ok(OracleReport {
            free_modules_compatible: true,
            pointwise_alpha_regular: alpha_regular,
            pointwise_beta_regular: beta_regular,
            closed_form_regular: closed_form,
            agrees: (alpha_regular && beta_regular) == closed_form,
        })
    }

    /// Pointwise check whether `beta . alpha = I` and `alpha . beta = I` on
    /// hom-sets between test objects.
    pub fn adjunction_check(&self, dims: usize, cap: u128) -> Result<(bool, bool)> {
        let mut beta_alpha = true;
        let mut alpha_beta = true;
        for x in 0..=dims {
            for y in 0..=dims {
                for f in LinMap::enumerate_maps(self.a * x, y, self.ring, cap)? {
                    let af = self.transpose(Direction::Alpha, &f, x, y)?;
                    if self.transpose(Direction::Beta, &af, x, y)? != f {
                        beta_alpha = false;
                    }
                }
                for g in LinMap::enumerate_maps(x, self.b * y, self.ring, cap)? {
                    let bg = self.transpose(Direction::Beta, &g, x, y)?;
                    if self.transpose(Direction::Alpha, &bg, x, y)? != g {
                        alpha_beta = false;
                    }
                }
            }
        }
        Ok((beta_alpha, alpha_beta))
    }

    /// `h = eps L . L eta: L -> L` on the carrier `A`; idempotent whenever
    /// `alpha` is regular.
    pub fn h_endomorphism(&self) -> LinMap {
        let insert = LinMap::tensor(&self.ids(self.a), &self.eta).unwrap();
        let hit = LinMap::tensor(&self.eps, &self.ids(self.a)).unwrap();
        LinMap::compose(&hit, &insert).unwrap()
    }

    /// Split the idempotent `h` and shrink the `A`-carrier to its image,
    /// producing a pairing whose `beta . alpha` is the identity.
    pub fn related_adjunction(&self) -> Result<DualPairing> {
        let report = self.report();
        if !report.alpha_regular {
            return Err(Error::Invalid("alpha is not regular".into()));
        }
        let h = self.h_endomorphism();
        // idempotency is guaranteed by regularity; splitting re-checks it
        let (p, i) = LinMap::split_idempotent(&h)?;
        let eta_new = LinMap::compose(&LinMap::tensor(&self.ids(self.b), &p)?, &self.eta)?;
        let eps_new = LinMap::compose(&self.eps, &LinMap::tensor(&i, &self.ids(self.b))?)?;
        DualPairing::new(self.ring, p.rows(), self.b, eta_new, eps_new)
    }

    /// Regularize `beta` by `eps -> eps . gamma`; when `alpha` is regular
    /// the result is a regular pairing.
    pub fn beta_regularized(&self) -> DualPairing {
        let eps_new = LinMap::compose(&self.eps, &self.gamma()).unwrap();
        DualPairing {
            ring: self.ring,
            a: self.a,
            b: self.b,
            eta: self.eta.clone(),
            eps: eps_new,
        }
    }

    /// `(RL, R eps L, eta)` on the carrier `B (x) A`.
    pub fn induced_monad(&self) -> QUnitalAlgebra {
        let m = LinMap::tensor_all(
            self.ring,
            &[&self.ids(self.b), &self.eps, &self.ids(self.a)],
        )
        .unwrap();
        QUnitalAlgebra::new(self.ring, self.b * self.a, m, self.eta.clone())
            .expect("induced product is associative")
    }

    /// `(LR, L eta R, eps)` on the carrier `A (x) B`.
    pub fn induced_comonad(&self) -> QCounitalCoalgebra {
        let delta = LinMap::tensor_all(
            self.ring,
            &[&self.ids(self.a), &self.eta, &self.ids(self.b)],
        )
        .unwrap();
        QCounitalCoalgebra::new(self.ring, self.a * self.b, delta, self.eps.clone())
            .expect("induced coproduct is coassociative")
    }

    /// Comparison-functor diagnostics over test objects `R^0..R^dims`.
    pub fn comparison_check(&self, dims: usize, cap: u128) -> Result<ComparisonReport> {
        let monad = self.induced_monad();
        let ring = self.ring;
        let (a, b) = (self.a, self.b);
        let id_b = self.ids(b);
        let id_ba = self.ids(b * a);

        let mut hat_r_lands_compatible = true;
        let mut triangle_left = true;
        let mut alpha_symmetry_diagram = true;
        for d in 0..=dims {
            let id_d = self.ids(d);
            // hatR(R^d) = (B (x) R^d, id_b (x) eps (x) id_d)
            let rho = LinMap::tensor_all(ring, &[&id_b, &self.eps, &id_d])?;
            let flags = module_flags(&monad, b * d, &rho)?;
            if !(flags.action_ok && flags.compatible) {
                hat_r_lands_compatible = false;
            }
            for d2 in 0..=dims {
                let rho2 = LinMap::tensor_all(ring, &[&id_b, &self.eps, &self.ids(d2)])?;
                // hatR on morphisms must produce module morphisms with the
                // right underlying map
                for f in LinMap::enumerate_maps(d, d2, ring, cap)? {
                    let rf = LinMap::tensor(&id_b, &f)?;
                    let lhs = LinMap::compose(&rho2, &LinMap::tensor(&id_ba, &rf)?)?;
                    let rhs = LinMap::compose(&rf, &rho)?;
                    if lhs != rhs {
                        triangle_left = false;
                    }
                }
            }
        }
        // triangle_right: the module hatR(L(X)) equals the free module on X,
        // as structure maps
        let mut triangle_right = true;
        for d in 0..=dims {
            let hat_action =
                LinMap::tensor_all(ring, &[&id_b, &self.eps, &self.ids(a * d)])?;
            let free_action = LinMap::tensor(monad.product(), &self.ids(d))?;
            if hat_action != free_action {
                triangle_right = false;
            }
        }
        // the symmetry square: hatR(beta(alpha(f))), which precomposes with
        // the eta-inside idempotent theta, against the route through the
        // induced monad that inserts eta at the outer position and so
        // precomposes with the eta-outside idempotent theta_bar; the two
        // agree for every f exactly when theta == theta_bar
        for d1 in 0..=dims {
            for d2 in 0..=dims {
                let id_d2 = self.ids(d2);
                let rho2 = LinMap::tensor_all(ring, &[&id_b, &self.eps, &id_d2])?;
                for f in LinMap::enumerate_maps(a * d1, d2, ring, cap)? {
                    let af = self.transpose(Direction::Alpha, &f, d1, d2)?;
                    let baf = self.transpose(Direction::Beta, &af, d1, d2)?;
                    let top = LinMap::tensor(&id_b, &baf)?;
                    let rf = LinMap::tensor(&id_b, &f)?;
                    let outer = LinMap::tensor(&self.eta, &self.ids(b * a * d1))?;
                    let bottom = LinMap::compose(
                        &rho2,
                        &LinMap::compose(&LinMap::tensor(&id_ba, &rf)?, &outer)?,
                    )?;
                    if top != bottom {
                        alpha_symmetry_diagram = false;
                    }
                }
            }
        }
        Ok(ComparisonReport {
            hat_r_lands_compatible,
            triangle_left,
            triangle_right,
            alpha_symmetry_diagram,
        })
    }

    /// The mirrored comparison square through `L~`: commutes exactly when
    /// `beta` is symmetric.
    pub fn beta_symmetry_diagram(&self, dims: usize, cap: u128) -> Result<bool> {
        let ring = self.ring;
        let (a, b) = (self.a, self.b);
        let id_a = self.ids(a);
        let mut commutes = true;
        for d1 in 0..=dims {
            let id_d1 = self.ids(d1);
            let upsilon = LinMap::tensor_all(ring, &[&id_a, &self.eta, &id_d1])?;
            for d2 in 0..=dims {
                for g in LinMap::enumerate_maps(d1, b * d2, ring, cap)? {
                    let bg = self.transpose(Direction::Beta, &g, d1, d2)?;
                    let abg = self.transpose(Direction::Alpha, &bg, d1, d2)?;
                    let top = LinMap::tensor(&id_a, &abg)?;
                    // mirrored route: eps applied at the outer position, so
                    // the composite postcomposes with gamma_bar instead of
                    // gamma; equal for every g exactly when beta symmetric
                    let lg = LinMap::tensor(&self.ids(a * b * a), &g)?;
                    let outer_eps = LinMap::tensor(&self.eps, &self.ids(a * b * d2))?;
                    let bottom =
                        LinMap::compose(&outer_eps, &LinMap::compose(&lg, &upsilon)?)?;
                    if top != bottom {
                        commutes = false;
                    }
                }
            }
        }
        Ok(commutes)
    }
}

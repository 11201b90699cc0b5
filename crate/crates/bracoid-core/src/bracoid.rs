//! Skew left/right bracoids, skew braces, and their structure maps.
//!
//! A validated [`SkewLeftBracoid`] is a transitive left action `⊙` of
//! `(G, ·)` on a group `(N, ⋆)` satisfying the left product rule
//!
//! ```text
//! g ⊙ (μ ⋆ η) = (g ⊙ μ) ⋆ (g ⊙ e_N)⁻¹ ⋆ (g ⊙ η)
//! ```
//!
//! and a [`SkewRightBracoid`] is the mirror image, a transitive right
//! action `⊡` with
//!
//! ```text
//! (η ⋆ μ) ⊡ h = (η ⊡ h) ⋆ (e_N ⊡ h)⁻¹ ⋆ (μ ⊡ h)
//! ```
//!
//! A [`SkewBrace`] is the degenerate case where the action is the second
//! group operation itself on a shared carrier: `a · (b ⋆ c) = (a·b) ⋆ ā ⋆
//! (a·c)`. Every skew brace yields a left bracoid by acting through `·`.
//!
//! The structure maps measure how far the action is from acting by
//! `⋆`-automorphisms:
//!
//! ```text
//! γ(g)η = (g ⊙ e_N)⁻¹ ⋆ (g ⊙ η)          δ(h)η = (η ⊡ h) ⋆ (e_N ⊡ h)⁻¹
//! α(g)η = γ(g)η ⋆ η̄                       β(h)η = η̄ ⋆ δ(h)η
//! ```
//!
//! γ and δ are always families of `⋆`-automorphisms on a valid structure
//! (γ multiplicative in the usual order, δ in the reversed one); α and β
//! obey twisted product/inverse/composition rules. The `check_*` methods
//! verify all of these exhaustively and report the first counterexample,
//! which is what the test suites and the CLI lean on. The checkers are
//! total: they accept structures built with `unchecked` constructors and
//! simply report failures.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::action::{LeftActionTable, RightActionTable};
use crate::group::FiniteGroup;
use crate::report::{witness_entry, CheckReport};

/// A structural-law failure for a candidate bracoid or brace, naming the
/// first violating tuple in scan order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BracoidError {
    /// The action does not reach `unreached` from the space identity.
    NotTransitive { unreached: usize },
    /// The left product rule fails at `g ⊙ (μ ⋆ η)`.
    LeftProductRuleViolated { g: usize, mu: usize, eta: usize },
    /// The right product rule fails at `(η ⋆ μ) ⊡ h`.
    RightProductRuleViolated { eta: usize, mu: usize, h: usize },
    /// The brace product rule fails at `a · (b ⋆ c)`.
    BraceProductRuleViolated { a: usize, b: usize, c: usize },
    /// The two group operations of a brace live on carriers of different
    /// sizes.
    CarrierMismatch { star_order: usize, dot_order: usize },
}

impl core::fmt::Display for BracoidError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            BracoidError::NotTransitive { unreached } => {
                write!(f, "action is not transitive: point {unreached} is unreached")
            }
            BracoidError::LeftProductRuleViolated { g, mu, eta } => {
                write!(f, "left product rule fails at (g={g}, μ={mu}, η={eta})")
            }
            BracoidError::RightProductRuleViolated { eta, mu, h } => {
                write!(f, "right product rule fails at (η={eta}, μ={mu}, h={h})")
            }
            BracoidError::BraceProductRuleViolated { a, b, c } => {
                write!(f, "brace product rule fails at (a={a}, b={b}, c={c})")
            }
            BracoidError::CarrierMismatch { star_order, dot_order } => {
                write!(f, "carrier mismatch: ⋆ has order {star_order}, · has order {dot_order}")
            }
        }
    }
}

impl core::error::Error for BracoidError {}

/// A self-map of the space group `N`, stored as an image table. γ, δ, α,
/// and β values all take this form; which laws the map satisfies depends
/// on the structure it came from, so the predicates are checked against an
/// explicit group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NMap {
    /// `images[η]` is the image of space element `η`.
    pub images: Vec<usize>,
}

impl NMap {
    #[inline]
    pub fn apply(&self, eta: usize) -> usize {
        self.images[eta]
    }

    pub fn is_bijective(&self) -> bool {
        let mut hit = alloc::vec![false; self.images.len()];
        for &v in &self.images {
            if hit[v] {
                return false;
            }
            hit[v] = true;
        }
        true
    }

    /// The inverse map; `None` when not bijective.
    pub fn inverse(&self) -> Option<NMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = alloc::vec![0usize; self.images.len()];
        for (x, &v) in self.images.iter().enumerate() {
            inv[v] = x;
        }
        Some(NMap { images: inv })
    }

    /// Exhaustive check of `f(μ ⋆ η) = f(μ) ⋆ f(η)`.
    pub fn is_star_endomorphism(&self, space: &FiniteGroup) -> bool {
        let n = space.order();
        (0..n).all(|a| {
            (0..n).all(|b| self.images[space.mul(a, b)] == space.mul(self.images[a], self.images[b]))
        })
    }

    pub fn is_star_automorphism(&self, space: &FiniteGroup) -> bool {
        self.is_bijective() && self.is_star_endomorphism(space)
    }
}

// ============================================================================
// Structure maps of raw action tables
// ============================================================================
//
// γ/α need only a left action table and δ/β only a right one — not the full
// bracoid laws — so they are defined on tables. This is what lets theorem
// checkers evaluate β of a candidate right action before knowing whether
// that action is a bracoid.

/// `γ(g): η ↦ (g ⊙ e_N)⁻¹ ⋆ (g ⊙ η)`.
pub fn gamma_of(action: &LeftActionTable, g: usize) -> NMap {
    let n = action.space();
    let anchor = n.inv(action.act(g, n.identity()));
    NMap { images: (0..n.order()).map(|eta| n.mul(anchor, action.act(g, eta))).collect() }
}

/// `α(g): η ↦ γ(g)η ⋆ η̄`.
pub fn alpha_of(action: &LeftActionTable, g: usize) -> NMap {
    let n = action.space();
    let gamma = gamma_of(action, g);
    NMap { images: (0..n.order()).map(|eta| n.mul(gamma.apply(eta), n.inv(eta))).collect() }
}

/// `δ(h): η ↦ (η ⊡ h) ⋆ (e_N ⊡ h)⁻¹`.
pub fn delta_of(action: &RightActionTable, h: usize) -> NMap {
    let n = action.space();
    let anchor = n.inv(action.act(n.identity(), h));
    NMap { images: (0..n.order()).map(|eta| n.mul(action.act(eta, h), anchor)).collect() }
}

/// `β(h): η ↦ η̄ ⋆ δ(h)η`.
pub fn beta_of(action: &RightActionTable, h: usize) -> NMap {
    let n = action.space();
    let delta = delta_of(action, h);
    NMap { images: (0..n.order()).map(|eta| n.mul(n.inv(eta), delta.apply(eta))).collect() }
}

/// First `(g, μ, η)` violating the left product rule, if any.
pub(crate) fn left_product_rule_witness(action: &LeftActionTable) -> Option<(usize, usize, usize)> {
    let (g_ord, n) = (action.actor().order(), action.space());
    let e = n.identity();
    for g in 0..g_ord {
        let anchor = n.inv(action.act(g, e));
        for mu in 0..n.order() {
            for eta in 0..n.order() {
                let lhs = action.act(g, n.mul(mu, eta));
                let rhs = n.mul(n.mul(action.act(g, mu), anchor), action.act(g, eta));
                if lhs != rhs {
                    return Some((g, mu, eta));
                }
            }
        }
    }
    None
}

/// First `(η, μ, h)` violating the right product rule, if any.
pub(crate) fn right_product_rule_witness(
    action: &RightActionTable,
) -> Option<(usize, usize, usize)> {
    let (h_ord, n) = (action.actor().order(), action.space());
    let e = n.identity();
    for eta in 0..n.order() {
        for mu in 0..n.order() {
            for h in 0..h_ord {
                let anchor = n.inv(action.act(e, h));
                let lhs = action.act(n.mul(eta, mu), h);
                let rhs = n.mul(n.mul(action.act(eta, h), anchor), action.act(mu, h));
                if lhs != rhs {
                    return Some((eta, mu, h));
                }
            }
        }
    }
    None
}

// ============================================================================
// Skew left bracoid
// ============================================================================

/// A transitive left action satisfying the left product rule. `actor()` is
/// the acting group `G`, `space()` the acted-on group `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewLeftBracoid {
    action: LeftActionTable,
}

impl SkewLeftBracoid {
    /// Validate transitivity and the left product rule on an action whose
    /// action laws already hold.
    pub fn new(action: LeftActionTable) -> Result<Self, BracoidError> {
        let orbit = action.orbit(action.space().identity());
        if orbit.len() != action.space().order() {
            let unreached = (0..action.space().order())
                .find(|p| orbit.binary_search(p).is_err())
                .expect("orbit is proper");
            return Err(BracoidError::NotTransitive { unreached });
        }
        if let Some((g, mu, eta)) = left_product_rule_witness(&action) {
            return Err(BracoidError::LeftProductRuleViolated { g, mu, eta });
        }
        Ok(SkewLeftBracoid { action })
    }

    /// Wrap a table without validating the bracoid laws (for negative
    /// tests; the checkers will report what is broken).
    pub fn unchecked(action: LeftActionTable) -> Self {
        SkewLeftBracoid { action }
    }

    pub fn actor(&self) -> &Arc<FiniteGroup> {
        self.action.actor()
    }

    pub fn space(&self) -> &Arc<FiniteGroup> {
        self.action.space()
    }

    pub fn action(&self) -> &LeftActionTable {
        &self.action
    }

    #[inline]
    pub fn act(&self, g: usize, eta: usize) -> usize {
        self.action.act(g, eta)
    }

    pub fn gamma(&self, g: usize) -> NMap {
        gamma_of(&self.action, g)
    }

    pub fn alpha(&self, g: usize) -> NMap {
        alpha_of(&self.action, g)
    }

    /// The translation identities tying γ to the action:
    ///
    /// ```text
    /// gamma_translation          (g ⊙ e_N) ⋆ γ(g)η = g ⊙ η
    /// gamma_inverse_translation  (g ⊙ e_N) ⋆ η = g ⊙ (γ(g)⁻¹η)
    /// gamma_orbit_inverse        γ(g)(g⁻¹ ⊙ e_N) = (g ⊙ e_N)⁻¹
    /// ```
    pub fn check_gamma_identities(&self) -> CheckReport {
        let mut report = CheckReport::new();
        let (g_grp, n) = (self.actor(), self.space());
        let e = n.identity();

        report.record("gamma_translation", {
            let mut out = Ok(());
            'scan: for g in 0..g_grp.order() {
                let gamma = self.gamma(g);
                let orbit_e = self.act(g, e);
                for eta in 0..n.order() {
                    if n.mul(orbit_e, gamma.apply(eta)) != self.act(g, eta) {
                        out = Err(alloc::vec![
                            witness_entry("g", g_grp, g),
                            witness_entry("η", n, eta),
                        ]);
                        break 'scan;
                    }
                }
            }
            out
        });

        report.record("gamma_inverse_translation", {
            let mut out = Ok(());
            'scan: for g in 0..g_grp.order() {
                let gamma = self.gamma(g);
                let Some(gamma_inv) = gamma.inverse() else {
                    out = Err(alloc::vec![
                        witness_entry("g", g_grp, g),
                        String::from("γ(g) is not bijective"),
                    ]);
                    break 'scan;
                };
                let orbit_e = self.act(g, e);
                for eta in 0..n.order() {
                    if n.mul(orbit_e, eta) != self.act(g, gamma_inv.apply(eta)) {
                        out = Err(alloc::vec![
                            witness_entry("g", g_grp, g),
                            witness_entry("η", n, eta),
                        ]);
                        break 'scan;
                    }
                }
            }
            out
        });

        report.record("gamma_orbit_inverse", {
            let mut out = Ok(());
            for g in 0..g_grp.order() {
                let gamma = self.gamma(g);
                let lhs = gamma.apply(self.act(g_grp.inv(g), e));
                if lhs != n.inv(self.act(g, e)) {
                    out = Err(alloc::vec![witness_entry("g", g_grp, g)]);
                    break;
                }
            }
            out
        });

        report
    }

    /// The conjugated-inverse identity
    /// `(g ⊙ e_N)⁻¹ ⋆ (g ⊙ η̄) ⋆ (g ⊙ e_N)⁻¹ = (g ⊙ η)⁻¹`.
    pub fn check_action_inverse(&self) -> CheckReport {
        let mut report = CheckReport::new();
        let (g_grp, n) = (self.actor(), self.space());
        let e = n.identity();
        report.record("action_inverse_conjugation", {
            let mut out = Ok(());
            'scan: for g in 0..g_grp.order() {
                let anchor = n.inv(self.act(g, e));
                for eta in 0..n.order() {
                    let lhs = n.mul(n.mul(anchor, self.act(g, n.inv(eta))), anchor);
                    if lhs != n.inv(self.act(g, eta)) {
                        out = Err(alloc::vec![
                            witness_entry("g", g_grp, g),
                            witness_entry("η", n, eta),
                        ]);
                        break 'scan;
                    }
                }
            }
            out
        });
        report
    }

    /// The four α rules:
    ///
    /// ```text
    /// alpha_twisted_product   α(g)(η ⋆ μ) = α(g)η ⋆ η ⋆ α(g)μ ⋆ η̄
    /// alpha_identity_values   α(g)e_N = e_N   and   α(e_G)η = e_N
    /// alpha_inverse_rule      α(g)η̄ = η̄ ⋆ (α(g)η)⁻¹ ⋆ η
    /// alpha_composition_rule  α(g·h)η = α(g)(α(h)η) ⋆ α(h)η ⋆ α(g)η
    /// ```
    pub fn check_alpha_properties(&self) -> CheckReport {
        let mut report = CheckReport::new();
        let (g_grp, n) = (self.actor(), self.space());
        let e = n.identity();
        let alphas: Vec<NMap> = (0..g_grp.order()).map(|g| self.alpha(g)).collect();

        report.record("alpha_twisted_product", {
            let mut out = Ok(());
            'scan: for (g, alpha) in alphas.iter().enumerate() {
                for eta in 0..n.order() {
                    for mu in 0..n.order() {
                        let lhs = alpha.apply(n.mul(eta, mu));
                        let rhs = n.mul(
                            n.mul(n.mul(alpha.apply(eta), eta), alpha.apply(mu)),
                            n.inv(eta),
                        );
                        if lhs != rhs {
                            out = Err(alloc::vec![
                                witness_entry("g", g_grp, g),
                                witness_entry("η", n, eta),
                                witness_entry("μ", n, mu),
                            ]);
                            break 'scan;
                        }
                    }
                }
            }
            out
        });

        report.record("alpha_identity_values", {
            let mut out = Ok(());
            for (g, alpha) in alphas.iter().enumerate() {
                if alpha.apply(e) != e {
                    out = Err(alloc::vec![witness_entry("g", g_grp, g)]);
                    break;
                }
            }
            if out.is_ok() {
                let at_identity = &alphas[g_grp.identity()];
                for eta in 0..n.order() {
                    if at_identity.apply(eta) != e {
                        out = Err(alloc::vec![witness_entry("η", n, eta)]);
                        break;
                    }
                }
            }
            out
        });

        report.record("alpha_inverse_rule", {
            let mut out = Ok(());
            'scan: for (g, alpha) in alphas.iter().enumerate() {
                for eta in 0..n.order() {
                    let lhs = alpha.apply(n.inv(eta));
                    let rhs = n.mul(n.mul(n.inv(eta), n.inv(alpha.apply(eta))), eta);
                    if lhs != rhs {
                        out = Err(alloc::vec![
                            witness_entry("g", g_grp, g),
                            witness_entry("η", n, eta),
                        ]);
                        break 'scan;
                    }
                }
            }
            out
        });

        report.record("alpha_composition_rule", {
            let mut out = Ok(());
            'scan: for g in 0..g_grp.order() {
                for h in 0..g_grp.order() {
                    let composed = &alphas[g_grp.mul(g, h)];
                    let (ag, ah) = (&alphas[g], &alphas[h]);
                    for eta in 0..n.order() {
                        let lhs = composed.apply(eta);
                        let rhs = n.mul(
                            n.mul(ag.apply(ah.apply(eta)), ah.apply(eta)),
                            ag.apply(eta),
                        );
                        if lhs != rhs {
                            out = Err(alloc::vec![
                                witness_entry("g", g_grp, g),
                                witness_entry("h", g_grp, h),
                                witness_entry("η", n, eta),
                            ]);
                            break 'scan;
                        }
                    }
                }
            }
            out
        });

        report
    }

    /// γ as a homomorphism `G → Aut(N, ⋆)`: every value a `⋆`-automorphism
    /// and `γ(g·h) = γ(g) ∘ γ(h)` (γ(h) applied first).
    pub fn check_gamma_homomorphism(&self) -> CheckReport {
        let mut report = CheckReport::new();
        let (g_grp, n) = (self.actor(), self.space());
        let gammas: Vec<NMap> = (0..g_grp.order()).map(|g| self.gamma(g)).collect();

        report.record("gamma_bijective", {
            match gammas.iter().position(|m| !m.is_bijective()) {
                None => Ok(()),
                Some(g) => Err(alloc::vec![witness_entry("g", g_grp, g)]),
            }
        });
        report.record("gamma_star_automorphism", {
            match gammas.iter().position(|m| !m.is_star_automorphism(n)) {
                None => Ok(()),
                Some(g) => Err(alloc::vec![witness_entry("g", g_grp, g)]),
            }
        });
        report.record("gamma_multiplicative", {
            let mut out = Ok(());
            'scan: for g in 0..g_grp.order() {
                for h in 0..g_grp.order() {
                    let composed = &gammas[g_grp.mul(g, h)];
                    for eta in 0..n.order() {
                        if composed.apply(eta) != gammas[g].apply(gammas[h].apply(eta)) {
                            out = Err(alloc::vec![
                                witness_entry("g", g_grp, g),
                                witness_entry("h", g_grp, h),
                                witness_entry("η", n, eta),
                            ]);
                            break 'scan;
                        }
                    }
                }
            }
            out
        });
        report
    }

    /// `α(g)` as a `⋆`-endomorphism for every `g`; requires an abelian
    /// space and reports not-applicable otherwise.
    pub fn check_alpha_endomorphism(&self) -> CheckReport {
        let mut report = CheckReport::new();
        let (g_grp, n) = (self.actor(), self.space());
        if !n.is_abelian() {
            report.not_applicable("alpha_endomorphism");
            return report;
        }
        report.record("alpha_endomorphism", {
            match (0..g_grp.order()).find(|&g| !self.alpha(g).is_star_endomorphism(n)) {
                None => Ok(()),
                Some(g) => Err(alloc::vec![witness_entry("g", g_grp, g)]),
            }
        });
        report
    }

    /// All left-side identity checks in one report.
    pub fn identity_suite(&self) -> CheckReport {
        let mut report = self.check_gamma_identities();
        report.merge(self.check_action_inverse());
        report.merge(self.check_alpha_properties());
        report.merge(self.check_gamma_homomorphism());
        report.merge(self.check_alpha_endomorphism());
        report
    }
}

// ============================================================================
// Skew right bracoid
// ============================================================================

/// A transitive right action satisfying the right product rule. `actor()`
/// is the acting group `H`, `space()` the acted-on group `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewRightBracoid {
    action: RightActionTable,
}

impl SkewRightBracoid {
    /// Validate transitivity and the right product rule on an action whose
    /// action laws already hold.
    pub fn new(action: RightActionTable) -> Result<Self, BracoidError> {
        let orbit = action.orbit(action.space().identity());
        if orbit.len() != action.space().order() {
            let unreached = (0..action.space().order())
                .find(|p| orbit.binary_search(p).is_err())
                .expect("orbit is proper");
            return Err(BracoidError::NotTransitive { unreached });
        }
        if let Some((eta, mu, h)) = right_product_rule_witness(&action) {
            return Err(BracoidError::RightProductRuleViolated { eta, mu, h });
        }
        Ok(SkewRightBracoid { action })
    }

    /// Wrap a table without validating the bracoid laws.
    pub fn unchecked(action: RightActionTable) -> Self {
        SkewRightBracoid { action }
    }

    pub fn actor(&self) -> &Arc<FiniteGroup> {
        self.action.actor()
    }

    pub fn space(&self) -> &Arc<FiniteGroup> {
        self.action.space()
    }

    pub fn action(&self) -> &RightActionTable {
        &self.action
    }

    #[inline]
    pub fn act(&self, eta: usize, h: usize) -> usize {
        self.action.act(eta, h)
    }

    pub fn delta(&self, h: usize) -> NMap {
        delta_of(&self.action, h)
    }

    pub fn beta(&self, h: usize) -> NMap {
        beta_of(&self.action, h)
    }

    /// The three β rules (mirrors of the α rules):
    ///
    /// ```text
    /// beta_twisted_product  (μ ⋆ η)^β(h) = η̄ ⋆ μ^β(h) ⋆ η ⋆ η^β(h)
    /// beta_identity_values  e_N^β(h) = e_N   and   η^β(e_H) = e_N
    /// beta_inverse_rule     η̄^β(h) = η ⋆ (η^β(h))⁻¹ ⋆ η̄
    /// ```
    pub fn check_beta_properties(&self) -> CheckReport {
        let mut report = CheckReport::new();
        let (h_grp, n) = (self.actor(), self.space());
        let e = n.identity();
        let betas: Vec<NMap> = (0..h_grp.order()).map(|h| self.beta(h)).collect();

        report.record("beta_twisted_product", {
            let mut out = Ok(());
            'scan: for (h, beta) in betas.iter().enumerate() {
                for mu in 0..n.order() {
                    for eta in 0..n.order() {
                        let lhs = beta.apply(n.mul(mu, eta));
                        let rhs = n.mul(
                            n.mul(n.mul(n.inv(eta), beta.apply(mu)), eta),
                            beta.apply(eta),
                        );
                        if lhs != rhs {
                            out = Err(alloc::vec![
                                witness_entry("h", h_grp, h),
                                witness_entry("μ", n, mu),
                                witness_entry("η", n, eta),
                            ]);
                            break 'scan;
                        }
                    }
                }
            }
            out
        });

        report.record("beta_identity_values", {
            let mut out = Ok(());
            for (h, beta) in betas.iter().enumerate() {
                if beta.apply(e) != e {
                    out = Err(alloc::vec![witness_entry("h", h_grp, h)]);
                    break;
                }
            }
            if out.is_ok() {
                let at_identity = &betas[h_grp.identity()];
                for eta in 0..n.order() {
                    if at_identity.apply(eta) != e {
                        out = Err(alloc::vec![witness_entry("η", n, eta)]);
                        break;
                    }
                }
            }
            out
        });

        report.record("beta_inverse_rule", {
            let mut out = Ok(());
            'scan: for (h, beta) in betas.iter().enumerate() {
                for eta in 0..n.order() {
                    let lhs = beta.apply(n.inv(eta));
                    let rhs = n.mul(n.mul(eta, n.inv(beta.apply(eta))), n.inv(eta));
                    if lhs != rhs {
                        out = Err(alloc::vec![
                            witness_entry("h", h_grp, h),
                            witness_entry("η", n, eta),
                        ]);
                        break 'scan;
                    }
                }
            }
            out
        });

        report
    }

    /// δ as a homomorphism into `Aut(N, ⋆)` with reversed composition:
    /// `δ(g·h) = δ(h) ∘ δ(g)` (δ(g) applied first, matching the right
    /// action reading `η^{δ(g·h)} = (η^{δ(g)})^{δ(h)}`).
    pub fn check_delta_homomorphism(&self) -> CheckReport {
        let mut report = CheckReport::new();
        let (h_grp, n) = (self.actor(), self.space());
        let deltas: Vec<NMap> = (0..h_grp.order()).map(|h| self.delta(h)).collect();

        report.record("delta_bijective", {
            match deltas.iter().position(|m| !m.is_bijective()) {
                None => Ok(()),
                Some(h) => Err(alloc::vec![witness_entry("h", h_grp, h)]),
            }
        });
        report.record("delta_star_automorphism", {
            match deltas.iter().position(|m| !m.is_star_automorphism(n)) {
                None => Ok(()),
                Some(h) => Err(alloc::vec![witness_entry("h", h_grp, h)]),
            }
        });
        report.record("delta_multiplicative", {
            let mut out = Ok(());
            'scan: for g in 0..h_grp.order() {
                for h in 0..h_grp.order() {
                    let composed = &deltas[h_grp.mul(g, h)];
                    for eta in 0..n.order() {
                        if composed.apply(eta) != deltas[h].apply(deltas[g].apply(eta)) {
                            out = Err(alloc::vec![
                                witness_entry("g", h_grp, g),
                                witness_entry("h", h_grp, h),
                                witness_entry("η", n, eta),
                            ]);
                            break 'scan;
                        }
                    }
                }
            }
            out
        });
        report
    }

    /// `β(h)` as a `⋆`-endomorphism for every `h`; requires an abelian
    /// space and reports not-applicable otherwise.
    pub fn check_beta_endomorphism(&self) -> CheckReport {
        let mut report = CheckReport::new();
        let (h_grp, n) = (self.actor(), self.space());
        if !n.is_abelian() {
            report.not_applicable("beta_endomorphism");
            return report;
        }
        report.record("beta_endomorphism", {
            match (0..h_grp.order()).find(|&h| !self.beta(h).is_star_endomorphism(n)) {
                None => Ok(()),
                Some(h) => Err(alloc::vec![witness_entry("h", h_grp, h)]),
            }
        });
        report
    }

    /// All right-side identity checks in one report.
    pub fn identity_suite(&self) -> CheckReport {
        let mut report = self.check_beta_properties();
        report.merge(self.check_delta_homomorphism());
        report.merge(self.check_beta_endomorphism());
        report
    }
}

// ============================================================================
// Skew brace
// ============================================================================

/// Two group operations on one carrier related by the brace product rule
/// `a · (b ⋆ c) = (a·b) ⋆ ā ⋆ (a·c)` (with `ā` the ⋆-inverse). The two
/// groups index the same elements; witnesses are rendered with the ⋆
/// group's names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewBrace {
    star: Arc<FiniteGroup>,
    dot: Arc<FiniteGroup>,
}

impl SkewBrace {
    pub fn new(star: Arc<FiniteGroup>, dot: Arc<FiniteGroup>) -> Result<Self, BracoidError> {
        if star.order() != dot.order() {
            return Err(BracoidError::CarrierMismatch {
                star_order: star.order(),
                dot_order: dot.order(),
            });
        }
        let n = star.order();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = dot.mul(a, star.mul(b, c));
                    let rhs = star.mul(star.mul(dot.mul(a, b), star.inv(a)), dot.mul(a, c));
                    if lhs != rhs {
                        return Err(BracoidError::BraceProductRuleViolated { a, b, c });
                    }
                }
            }
        }
        Ok(SkewBrace { star, dot })
    }

    /// Wrap two same-size groups without checking the brace rule.
    pub fn unchecked(star: Arc<FiniteGroup>, dot: Arc<FiniteGroup>) -> Self {
        assert_eq!(star.order(), dot.order(), "brace carriers must have one size");
        SkewBrace { star, dot }
    }

    pub fn star(&self) -> &Arc<FiniteGroup> {
        &self.star
    }

    pub fn dot(&self) -> &Arc<FiniteGroup> {
        &self.dot
    }

    pub fn order(&self) -> usize {
        self.star.order()
    }

    /// The left bracoid a brace always is: `·` acting on `(N, ⋆)` by left
    /// translation, `g ⊙ η = g · η`.
    pub fn as_left_bracoid(&self) -> SkewLeftBracoid {
        let rows = self.dot.rows();
        let action = LeftActionTable::new(Arc::clone(&self.dot), Arc::clone(&self.star), rows)
            .expect("dot multiplication is a valid action on the carrier");
        SkewLeftBracoid::new(action).expect("the brace product rule is the left product rule")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::report::CheckStatus;
    use alloc::vec;

    /// Left translation of a group on itself: the bracoid of the trivial
    /// brace.
    fn translation_bracoid(n: usize) -> SkewLeftBracoid {
        let g = FiniteGroup::cyclic(n).unwrap();
        let rows = g.rows();
        SkewLeftBracoid::new(LeftActionTable::new(Arc::clone(&g), g, rows).unwrap()).unwrap()
    }

    /// The left bracoid with G = ⟨x,y | x³ = y⁴ = 1, x^y = x⁻¹⟩ acting on
    /// D3 by x^i y^j ⊙ μ^r η^s = μ^{i + (−1)^j r} η^{j+s}.
    fn semidirect_on_d3() -> SkewLeftBracoid {
        let g = FiniteGroup::cyclic_semidirect_c4(3).unwrap();
        let n = FiniteGroup::dihedral(3).unwrap();
        let rows = (0..12)
            .map(|a| {
                let (i, j) = (a / 4, a % 4);
                (0..6)
                    .map(|b| {
                        let (r, s) = (b / 2, b % 2);
                        let sign: i64 = if j % 2 == 0 { 1 } else { -1 };
                        let rr = (((i as i64 + sign * r as i64) % 3) + 3) % 3;
                        2 * rr as usize + (j + s) % 2
                    })
                    .collect()
            })
            .collect();
        SkewLeftBracoid::new(LeftActionTable::new(g, n, rows).unwrap()).unwrap()
    }

    #[test]
    fn translation_bracoid_has_trivial_gamma_and_alpha() {
        let b = translation_bracoid(4);
        for g in 0..4 {
            assert_eq!(b.gamma(g).images, vec![0, 1, 2, 3]);
            assert_eq!(b.alpha(g).images, vec![0, 0, 0, 0]);
        }
        assert!(b.identity_suite().all_passed());
    }

    #[test]
    fn semidirect_on_d3_frozen_values() {
        let b = semidirect_on_d3();
        // Index keys: x^i y^j ↦ 4i + j and μ^r η^s ↦ 2r + s.
        let (xy, mu, eta) = (5, 2, 1);
        // xy ⊙ μ = η.
        assert_eq!(b.act(xy, mu), eta);
        // γ(xy) is the identity map on D3: xy ⊙ e = μη, and conjugating the
        // translated orbit back cancels the twist exactly.
        assert_eq!(b.gamma(xy).images, vec![0, 1, 2, 3, 4, 5]);
        assert!(b.identity_suite().all_passed());
    }

    #[test]
    fn non_surjective_orbit_is_rejected() {
        let g = FiniteGroup::cyclic(1).unwrap();
        let n = FiniteGroup::cyclic(4).unwrap();
        let action = LeftActionTable::new(g, n, vec![vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(
            SkewLeftBracoid::new(action).unwrap_err(),
            BracoidError::NotTransitive { unreached: 1 },
        );
    }

    #[test]
    fn left_product_rule_violation_is_pinpointed() {
        // C4 acting on C4 through the 4-cycle 0→1→3→2: a genuine transitive
        // action, but the twisted product rule fails.
        let g = FiniteGroup::cyclic(4).unwrap();
        let n = FiniteGroup::cyclic(4).unwrap();
        let rows = vec![
            vec![0, 1, 2, 3],
            vec![1, 3, 0, 2],
            vec![3, 2, 1, 0],
            vec![2, 0, 3, 1],
        ];
        let action = LeftActionTable::new(g, n, rows).unwrap();
        assert_eq!(
            SkewLeftBracoid::new(action).unwrap_err(),
            BracoidError::LeftProductRuleViolated { g: 1, mu: 1, eta: 1 },
        );
    }

    #[test]
    fn checkers_report_failures_on_corrupted_structures() {
        // Swap one entry of the C4 translation table; the action laws break
        // and the identity suite must fail loudly rather than panic.
        let g = FiniteGroup::cyclic(4).unwrap();
        let n = FiniteGroup::cyclic(4).unwrap();
        let mut rows = g.rows();
        rows[1][1] = 3;
        rows[1][3] = 2;
        let action = LeftActionTable::unvalidated(g, n, rows).unwrap();
        let b = SkewLeftBracoid::unchecked(action);
        let report = b.identity_suite();
        assert!(!report.all_passed());
        let failure = report.failures().next().unwrap();
        assert!(failure.witness.is_some());
    }

    #[test]
    fn right_translation_bracoid_has_trivial_delta_and_beta() {
        let h = FiniteGroup::cyclic(4).unwrap();
        let rows = h.rows();
        let action = RightActionTable::new(Arc::clone(&h), Arc::clone(&h), rows).unwrap();
        let b = SkewRightBracoid::new(action).unwrap();
        for x in 0..4 {
            assert_eq!(b.delta(x).images, vec![0, 1, 2, 3]);
            assert_eq!(b.beta(x).images, vec![0, 0, 0, 0]);
        }
        assert!(b.identity_suite().all_passed());
    }

    #[test]
    fn right_translation_on_dihedral_is_a_right_bracoid() {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let rows = (0..6).map(|eta| (0..6).map(|h| d3.mul(eta, h)).collect()).collect();
        let action = RightActionTable::new(Arc::clone(&d3), Arc::clone(&d3), rows).unwrap();
        let b = SkewRightBracoid::new(action).unwrap();
        let report = b.identity_suite();
        // All checks pass except the endomorphism one, which is out of
        // scope for a nonabelian space.
        assert!(report.all_passed());
        assert!(report
            .checks
            .iter()
            .any(|c| c.property == "beta_endomorphism" && c.status == CheckStatus::NotApplicable));
    }

    #[test]
    fn right_product_rule_violation_is_pinpointed() {
        // The mirror of the left 4-cycle example: η ⊡ h = π^h(η) with
        // π = (0 1 3 2) is a valid right action of C4 that fails the right
        // product rule.
        let h = FiniteGroup::cyclic(4).unwrap();
        let n = FiniteGroup::cyclic(4).unwrap();
        let rows = vec![
            vec![0, 1, 3, 2],
            vec![1, 3, 2, 0],
            vec![2, 0, 1, 3],
            vec![3, 2, 0, 1],
        ];
        let action = RightActionTable::new(h, n, rows).unwrap();
        assert_eq!(
            SkewRightBracoid::new(action).unwrap_err(),
            BracoidError::RightProductRuleViolated { eta: 1, mu: 1, h: 1 },
        );
    }

    #[test]
    fn brace_with_coinciding_operations_is_valid() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let brace = SkewBrace::new(Arc::clone(&c4), Arc::clone(&c4)).unwrap();
        let bracoid = brace.as_left_bracoid();
        assert!(bracoid.identity_suite().all_passed());
    }

    #[test]
    fn klein_star_cyclic_dot_is_a_brace() {
        // ⋆ = the Klein four-group (xor on indices via D2), · = C4. This is
        // the classical mixed-operation brace of order 4.
        let star = FiniteGroup::dihedral(2).unwrap();
        let dot = FiniteGroup::cyclic(4).unwrap();
        let brace = SkewBrace::new(star, dot).unwrap();
        assert_eq!(brace.star().identity(), brace.dot().identity());
        assert!(brace.as_left_bracoid().identity_suite().all_passed());
    }

    #[test]
    fn brace_rule_violation_is_pinpointed() {
        // ⋆ = C4 and · = the Klein group relabeled through the transposition
        // 0↔1, so the two identities disagree; the first scan cell catches
        // it.
        let star = FiniteGroup::cyclic(4).unwrap();
        let dot = FiniteGroup::from_table(
            "relabeled",
            vec!["k0".into(), "k1".into(), "k2".into(), "k3".into()],
            vec![vec![1, 0, 3, 2], vec![0, 1, 2, 3], vec![3, 2, 1, 0], vec![2, 3, 0, 1]],
        )
        .unwrap();
        assert_eq!(
            SkewBrace::new(star, Arc::new(dot)).unwrap_err(),
            BracoidError::BraceProductRuleViolated { a: 0, b: 0, c: 0 },
        );
    }

    #[test]
    fn brace_carriers_must_match() {
        let star = FiniteGroup::cyclic(2).unwrap();
        let dot = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(
            SkewBrace::new(star, dot).unwrap_err(),
            BracoidError::CarrierMismatch { star_order: 2, dot_order: 4 },
        );
    }

    #[test]
    fn nmap_predicates() {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let id = NMap { images: (0..6).collect() };
        assert!(id.is_star_automorphism(&d3));
        assert_eq!(id.inverse().unwrap().images, id.images);
        let collapse = NMap { images: vec![0; 6] };
        assert!(!collapse.is_bijective());
        // Constant-identity is an endomorphism but not an automorphism.
        assert!(collapse.is_star_endomorphism(&d3));
        assert!(!collapse.is_star_automorphism(&d3));
        assert!(collapse.inverse().is_none());
        // Conjugation by μ is a ⋆-automorphism of D3.
        let conj = NMap {
            images: (0..6).map(|x| d3.mul(d3.mul(2, x), d3.inv(2))).collect(),
        };
        assert!(conj.is_star_automorphism(&d3));
    }
}

//! Ready-made bracoid constructions: the parametric dihedral family and
//! the bracoids every skew brace carries.
//!
//! The family takes parameters `(t, w, d)` with `d` dividing both `t` and
//! `w`, and produces a two-sided skew bracoid on the dihedral group
//! `N = D_d` of order `2d`:
//!
//! * the left actor `G = C_t ⋊ C_4` (order `4t`, presentation
//!   `x^t = y^4 = 1`, `x^y = x⁻¹`) acts by
//!   `x^i y^j ⊙ μ^r η^s = μ^{i + (−1)^j r} η^{j+s}`,
//! * the right actor `H = Dic_w` (order `4w`, presentation
//!   `a^{2w} = 1`, `b² = a^w`, `a^b = a⁻¹`) acts by
//!   `μ^r η^s ⊡ a^k b^l = μ^{r + (−1)^s k} η^{s+l}`,
//!
//! with exponents of `μ` read mod `d` and of `η` mod `2`. Both actors are
//! genuinely larger than the space (index `2t/d` and `2w/d`), which is
//! what makes these bracoids rather than braces.
//!
//! Divisibility is the only precondition; all structural laws are then
//! re-validated during construction, so a failure inside the closed-form
//! tables would surface loudly instead of producing a broken value.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::action::{LeftActionTable, RightActionTable};
use crate::bracoid::{SkewBrace, SkewLeftBracoid, SkewRightBracoid};
use crate::group::{modulus, FiniteGroup};
use crate::two_sided::TwoSidedSkewBracoid;

/// Parameters `(t, w, d)` of the dihedral family; requires `d | t` and
/// `d | w`, i.e. `d | gcd(t, w)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyParams {
    pub t: usize,
    pub w: usize,
    pub d: usize,
}

/// Why a family or brace-derived construction was refused.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyError {
    /// Every family parameter must be at least 1.
    ZeroParameter,
    /// `d` must divide both `t` and `w`.
    DivisibilityViolated { t: usize, w: usize, d: usize },
    /// An internal consistency failure: the closed-form tables did not
    /// validate. This indicates a bug, never bad user input.
    WellDefinednessViolated(String),
    /// The brace is not two-sided, so it induces no right bracoid through
    /// its own multiplication; the named triple breaks the symmetric rule.
    NotTwoSidedBrace { a: usize, b: usize, c: usize },
}

impl core::fmt::Display for FamilyError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            FamilyError::ZeroParameter => write!(f, "family parameters must be positive"),
            FamilyError::DivisibilityViolated { t, w, d } => {
                write!(f, "d = {d} must divide gcd(t, w) = gcd({t}, {w})")
            }
            FamilyError::WellDefinednessViolated(detail) => {
                write!(f, "family construction failed to validate (internal bug): {detail}")
            }
            FamilyError::NotTwoSidedBrace { a, b, c } => {
                write!(f, "brace is not two-sided: symmetric rule fails at ({a}, {b}, {c})")
            }
        }
    }
}

impl core::error::Error for FamilyError {}

fn internal<E: core::fmt::Display>(stage: &str) -> impl FnOnce(E) -> FamilyError + '_ {
    move |e| FamilyError::WellDefinednessViolated(alloc::format!("{stage}: {e}"))
}

/// Build the two-sided member of the dihedral family with the given
/// parameters.
pub fn dihedral_family(params: &FamilyParams) -> Result<TwoSidedSkewBracoid, FamilyError> {
    let FamilyParams { t, w, d } = *params;
    if t == 0 || w == 0 || d == 0 {
        return Err(FamilyError::ZeroParameter);
    }
    if t % d != 0 || w % d != 0 {
        return Err(FamilyError::DivisibilityViolated { t, w, d });
    }

    let g = FiniteGroup::cyclic_semidirect_c4(t).map_err(internal("left actor"))?;
    let h = FiniteGroup::dicyclic(w).map_err(internal("right actor"))?;
    let n = FiniteGroup::dihedral(d).map_err(internal("space"))?;

    // x^i y^j ⊙ μ^r η^s = μ^{i + (−1)^j r} η^{j+s}
    let left_rows: Vec<Vec<usize>> = (0..g.order())
        .map(|ga| {
            let (i, j) = (ga / 4, ga % 4);
            (0..n.order())
                .map(|eta| {
                    let (r, s) = (eta / 2, eta % 2);
                    let sign: i64 = if j % 2 == 0 { 1 } else { -1 };
                    let rr = modulus(i as i64 + sign * r as i64, d);
                    2 * rr + (j + s) % 2
                })
                .collect()
        })
        .collect();

    // μ^r η^s ⊡ a^k b^l = μ^{r + (−1)^s k} η^{s+l}
    let right_rows: Vec<Vec<usize>> = (0..n.order())
        .map(|eta| {
            let (r, s) = (eta / 2, eta % 2);
            let sign: i64 = if s == 0 { 1 } else { -1 };
            (0..h.order())
                .map(|ha| {
                    let (k, l) = (ha / 2, ha % 2);
                    let rr = modulus(r as i64 + sign * k as i64, d);
                    2 * rr + (s + l) % 2
                })
                .collect()
        })
        .collect();

    let left_action =
        LeftActionTable::new(g, Arc::clone(&n), left_rows).map_err(internal("left action"))?;
    let left = SkewLeftBracoid::new(left_action).map_err(internal("left bracoid"))?;
    let right_action =
        RightActionTable::new(h, n, right_rows).map_err(internal("right action"))?;
    let right = SkewRightBracoid::new(right_action).map_err(internal("right bracoid"))?;
    TwoSidedSkewBracoid::new(left, right).map_err(internal("two-sided compatibility"))
}

/// The brace every group carries: `⋆` and `·` coincide.
pub fn trivial_brace(group: &Arc<FiniteGroup>) -> SkewBrace {
    SkewBrace::new(Arc::clone(group), Arc::clone(group))
        .expect("a group braided with itself satisfies the brace rule")
}

/// The two-sided bracoid a two-sided brace induces: `·` acting on `(N, ⋆)`
/// by translation on both sides.
pub fn brace_two_sided_bracoid(brace: &SkewBrace) -> Result<TwoSidedSkewBracoid, FamilyError> {
    if let Some((a, b, c)) = brace.two_sided_witness() {
        return Err(FamilyError::NotTwoSidedBrace { a, b, c });
    }
    let left = brace.as_left_bracoid();
    let dot = brace.dot();
    let right_rows: Vec<Vec<usize>> = (0..brace.order())
        .map(|eta| (0..brace.order()).map(|h| dot.mul(eta, h)).collect())
        .collect();
    let right_action =
        RightActionTable::new(Arc::clone(dot), Arc::clone(brace.star()), right_rows)
            .map_err(internal("right translation action"))?;
    let right = SkewRightBracoid::new(right_action).map_err(internal("right bracoid"))?;
    TwoSidedSkewBracoid::new(left, right).map_err(internal("two-sided compatibility"))
}

//! Dispatch from `(entity, kind)` to the checkers.

use std::fmt;

use lmalg_core::algebra::{check_a_module, check_comm_algebra};
use lmalg_core::algebroid::{attempt_tensor_square_anchor, check_leibniz_algebroid, check_local};
use lmalg_core::derivations::check_action_by_derivations;
use lmalg_core::leibniz::{check_leibniz, check_leibniz_morphism, check_lie, check_lie_module, check_right_module};
use lmalg_core::lie_rinehart::{check_lie_rinehart_pair, check_lr_module, check_theorem1_object};
use lmalg_core::lm::{
    check_algebra_morphism, check_algebra_object, check_lie_morphism, check_lie_object,
    check_module_over_algebra_object, check_module_over_lie_object, check_square, check_squares_annihilation,
};
use lmalg_core::CheckReport;

use crate::document::{Diagnostic, Document, Entity};

#[derive(Debug)]
pub enum CliError {
    /// Bad command line, unknown entity or kind.
    Usage(String),
    Parse(Diagnostic),
    /// An input failed the checks a command requires; carries that report.
    Precondition(Box<CheckReport>),
    Io(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Parse(d) => write!(f, "{d}"),
            CliError::Precondition(r) => write!(
                f,
                "precondition failed: {} check reports {} violation(s)",
                r.check,
                r.violations.len()
            ),
            CliError::Io(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Diagnostic> for CliError {
    fn from(d: Diagnostic) -> Self {
        CliError::Parse(d)
    }
}

impl From<lmalg_core::Error> for CliError {
    fn from(e: lmalg_core::Error) -> Self {
        match e {
            lmalg_core::Error::Precondition(r) => CliError::Precondition(r),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Precondition(_) => 1,
            _ => 2,
        }
    }
}

/// Every check kind with a one-line summary.
pub const CHECK_KINDS: [(&str, &str); 21] = [
    ("comm-algebra", "commutative associative unital algebra"),
    ("leibniz", "right Leibniz identity"),
    ("lie", "antisymmetry and Jacobi"),
    ("a-module", "module over a commutative algebra"),
    ("lie-module", "left module over a Lie algebra"),
    ("right-module", "right module over a Lie algebra"),
    ("leibniz-morphism", "bracket-preserving linear map"),
    ("lm-morphism", "commuting square of linear maps"),
    ("algebra-object", "commutative algebra object g: M -> A"),
    ("lie-object", "Lie algebra object f: N -> L"),
    ("algebra-object-module", "module over an algebra object"),
    ("lie-object-module", "module over a Lie algebra object"),
    ("structure-morphism", "morphism of algebra or Lie algebra objects"),
    ("derivation-action", "action by derivations"),
    ("lr-pair", "Lie-Rinehart pair"),
    ("lr-module", "module over a Lie-Rinehart pair"),
    ("theorem1", "Lie-Rinehart algebra object"),
    ("extra", "squares annihilation on N"),
    ("algebroid", "Leibniz algebroid"),
    ("local", "second-slot rule of a Leibniz algebroid"),
    ("tensor-square-anchor", "A-linearity of the induced anchor on L (x) L"),
];

/// The check run when no kind is given.
pub fn default_kind(e: &Entity) -> Option<&'static str> {
    Some(match e {
        Entity::AlgebraMorphism { .. } | Entity::LieMorphism { .. } => "structure-morphism",
        Entity::Tensor(_) | Entity::Map(_) | Entity::LmObject(_) => return None,
        other => other.kind(),
    })
}

pub fn run_check(doc: &Document, entity: &str, kind: Option<&str>) -> Result<CheckReport, CliError> {
    let e = doc
        .get(entity)
        .ok_or_else(|| CliError::Usage(format!("no entity named {entity:?}")))?;
    let kind = match kind {
        Some(k) => {
            if !CHECK_KINDS.iter().any(|(n, _)| *n == k) {
                return Err(CliError::Usage(format!("unknown check kind {k:?}")));
            }
            k
        }
        None => default_kind(e).ok_or_else(|| CliError::Usage(format!("no check applies to a {}", e.kind())))?,
    };
    let mismatch = || {
        CliError::Usage(format!(
            "check kind {kind:?} does not apply to {entity:?}, a {}",
            e.kind()
        ))
    };
    let report = match (kind, e) {
        ("comm-algebra", Entity::CommAlgebra(a)) => check_comm_algebra(a),
        ("leibniz", Entity::Leibniz(g)) => check_leibniz(g),
        ("leibniz", Entity::Lie(l)) => check_leibniz(&l.to_leibniz()),
        ("lie", Entity::Lie(l)) => check_lie(l),
        ("lie", Entity::Leibniz(g)) => check_lie(&g.to_lie_unchecked()),
        ("a-module", Entity::AModule { over, module, .. }) => check_a_module(over, module)?,
        ("lie-module", Entity::LieModule { over, module, .. }) => check_lie_module(over, module)?,
        ("right-module", Entity::RightModule { over, module, .. }) => check_right_module(over, module)?,
        ("leibniz-morphism", Entity::LeibnizMorphism { source, target, phi }) => {
            check_leibniz_morphism(phi, source, target)?
        }
        ("lm-morphism", Entity::LmMorphism { source, target, h1, h0 }) => check_square(source, target, h1, h0)?,
        ("algebra-object", Entity::AlgebraObject(x)) => check_algebra_object(x),
        ("lie-object", Entity::LieObject(x)) => check_lie_object(x),
        ("algebra-object-module", Entity::AlgebraObjectModule { object, module }) => {
            check_module_over_algebra_object(object, module)?
        }
        ("lie-object-module", Entity::LieObjectModule { object, module }) => {
            check_module_over_lie_object(object, module)?
        }
        (
            "structure-morphism",
            Entity::AlgebraMorphism {
                source,
                target,
                phi1,
                phi0,
            },
        ) => check_algebra_morphism(source, target, phi1, phi0)?,
        (
            "structure-morphism",
            Entity::LieMorphism {
                source,
                target,
                phi1,
                phi0,
            },
        ) => check_lie_morphism(source, target, phi1, phi0)?,
        ("derivation-action", Entity::DerivationAction { alg, lie, action }) => {
            check_action_by_derivations(alg, lie, action)?
        }
        ("lr-pair", Entity::LrPair(p)) => check_lie_rinehart_pair(p),
        ("lr-module", Entity::LrModule { pair, module, rho2 }) => check_lr_module(pair, module, rho2)?,
        ("theorem1", Entity::Theorem1(d)) => check_theorem1_object(d)?,
        ("extra", Entity::Theorem1(d)) => check_squares_annihilation(&d.lie, &d.alg.algebra, &d.action_n)?,
        ("algebroid", Entity::Algebroid(x)) => check_leibniz_algebroid(x),
        ("local", Entity::Algebroid(x)) => check_local(x),
        ("tensor-square-anchor", Entity::LrPair(p)) => attempt_tensor_square_anchor(p)?,
        _ => return Err(mismatch()),
    };
    Ok(report)
}

//! Check reports: which law failed, where, and by how much.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::matrix::is_zero_vector;
use crate::scalar::{Field, Scalar};

macro_rules! axioms {
    ($($variant:ident => $id:literal, $desc:literal;)*) => {
        /// Every law a checker can report, with a stable textual id.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Axiom {
            $($variant,)*
        }

        impl Axiom {
            pub const ALL: &'static [Axiom] = &[$(Axiom::$variant,)*];

            pub fn id(self) -> &'static str {
                match self {
                    $(Axiom::$variant => $id,)*
                }
            }

            /// The law as a formula.
            pub fn description(self) -> &'static str {
                match self {
                    $(Axiom::$variant => $desc,)*
                }
            }

            pub fn from_id(id: &str) -> Option<Axiom> {
                match id {
                    $($id => Some(Axiom::$variant),)*
                    _ => None,
                }
            }
        }
    };
}

axioms! {
    Comm => "comm", "a·b = b·a";
    Assoc => "assoc", "(a·b)·c = a·(b·c)";
    Unit => "unit", "1·a = a";
    ModuleUnit => "module-unit", "1·m = m";
    ModuleAssoc => "module-assoc", "(a·b)·m = a·(b·m)";
    Rlj => "RLJ", "[x,[y,z]] − [[x,y],z] + [[x,z],y] = 0";
    Antisym => "antisym", "[x,y] + [y,x] = 0 and [x,x] = 0";
    Jacobi => "jacobi", "[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0";
    LieModule => "lie-module", "[ξ,ζ]·v = ξ·(ζ·v) − ζ·(ξ·v)";
    RightModule => "right-module", "[n,[ξ,ζ]] = [[n,ξ],ζ] − [[n,ζ],ξ]";
    LeibnizMorphism => "leibniz-morphism", "φ[x,y] = [φx,φy]";
    HgcompSquare => "hgcomp-square", "u′∘h1 = h0∘u";
    HgtensorSquare => "hgtensor-square", "u″∘(g1⊗h0 + g0⊗h1) = (g0⊗h0)∘(u⊗1 + 1⊗u′)";
    GLinear => "g-linear", "g(a·m) = a·g(m)";
    FEquivariant => "f-equivariant", "f([n,ξ]) = [f(n),ξ]";
    FLinear => "f-linear", "f(a·n) = a·f(n)";
    ULinear => "u-linear", "u(a·v) = a·u(v)";
    AlphaEll => "alpha-ell", "u(α_ℓ(m⊗w)) = g(m)·w";
    AlphaEllDescent => "alpha-ell-descent", "α_ℓ((a·m)⊗w − m⊗(a·w)) = 0";
    AlphaEllLinear => "alpha-ell-linear", "α_ℓ((a·m)⊗w) = a·α_ℓ(m⊗w)";
    Compat3 => "compat3", "α1([n,ξ]⊗w) = α1(n⊗α0(ξ⊗w)) − α2(ξ⊗α1(n⊗w))";
    Alpha1F => "alpha1-f", "u∘α1 = α0∘(f⊗1_W)";
    Alpha2U => "alpha2-u", "u∘α2 = α0∘(1_L⊗u)";
    Extra => "extra", "[n1, a·[n2,n2]_N]_N = 0 with [n1,n2]_N = [n1,f(n2)]";
    AlgebraMap1 => "algebra-map-1", "φ1(a·m) = φ0(a)·φ1(m)";
    AlgebraMap0 => "algebra-map-0", "φ0(a·b) = φ0(a)·φ0(b)";
    LieMap1 => "lie-map-1", "φ1([n,ξ]) = [φ1(n),φ0(ξ)]";
    LieMap0 => "lie-map-0", "φ0([ξ,ζ]) = [φ0(ξ),φ0(ζ)]";
    Rho0Der => "rho0-der", "ρ0(ξ)(a·b) = a·ρ0(ξ)(b) + ρ0(ξ)(a)·b";
    Rho0Lie => "rho0-lie", "ρ0([ξ,ζ]) = [ρ0(ξ),ρ0(ζ)]";
    Rho2Lie => "rho2-lie", "ρ2([ξ,ζ]) = [ρ2(ξ),ρ2(ζ)]";
    Rho2Linear => "rho2-linear", "ρ2(a·ξ) = a·ρ2(ξ)";
    CompDer1a => "compDer1-a", "ρ2(ξ)(a·m) = a·ρ2(ξ)(m) + ρ0(ξ)(a)·m";
    CompDer1b => "compDer1-b", "g(ρ2(ξ)(m)) = ρ0(ξ)(g(m))";
    CompDer3a => "compDer3-a", "ρ1([n,ξ]) = ρ1(n)∘ρ0(ξ) − ρ2(ξ)∘ρ1(n)";
    CompDer3b => "compDer3-b", "g(ρ1(n)(a)) = ρ0(f(n))(a)";
    Rho1Der => "rho1-der", "ρ1(n)(a·b) = a·ρ1(n)(b) + b·ρ1(n)(a)";
    Rho1Linear => "rho1-linear", "ρ1(a·n) = a·ρ1(n)";
    AnchorDer => "anchor-der", "ρ(x)(a·b) = a·ρ(x)(b) + ρ(x)(a)·b";
    AnchorLinear => "anchor-linear", "ρ(a·x) = a·ρ(x)";
    AnchorLie => "anchor-lie", "ρ([ξ,ζ]) = [ρ(ξ),ρ(ζ)]";
    LrLeibniz => "LR-leibniz", "[ξ,a·ζ] = a·[ξ,ζ] + ρ(ξ)(a)·ζ";
    Mixed => "mixed", "[a·n,ξ] = a·[n,ξ] − ρ0(ξ)(a)·n";
    LambdaDescent => "lambda-descent", "λ((a·m)⊗ξ − m⊗(a·ξ)) = 0";
    LambdaLinear => "lambda-linear", "λ((a·m)⊗ξ) = a·λ(m⊗ξ)";
    LbAnchorAntihom => "LBanchor-antihom", "ρ([e1,e2]) = [ρ(e2),ρ(e1)]";
    LbRule => "LBrule", "[a·e1,e2] = a·[e1,e2] + ρ(e2)(a)·e1";
    Local => "local", "[e1,a·e2] = a·[e1,e2] − ρ(e1)(a)·e2";
    AStable => "a-stable", "a·k ∈ Ker π for every square k";
    GammaLinear => "gamma-linear", "γ((a·x)⊗y) = a·γ(x⊗y) with γ(x⊗y) = ρ([x,y])";
}

impl core::fmt::Display for Axiom {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.id())
    }
}

/// One violated law: the lexicographically first failing basis tuple, the
/// residual there, and how many tuples fail in total.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Violation {
    pub axiom: Axiom,
    /// The structure the law was evaluated on, e.g. `"A"` or `"N"`.
    pub on: String,
    /// Theorem-level clause the law belongs to, empty outside composite checks.
    pub clause: String,
    /// 0-based basis indices of the first failing tuple.
    pub witness: Vec<usize>,
    pub residual: Vec<Scalar>,
    pub count: usize,
}

impl Violation {
    fn sort_key(&self) -> (&'static str, &str, &[usize], &str) {
        (self.axiom.id(), &self.on, &self.witness, &self.clause)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CheckReport {
    pub check: String,
    pub field: Field,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn pass(check: &str, field: Field) -> CheckReport {
        CheckReport {
            check: check.to_string(),
            field,
            violations: Vec::new(),
        }
    }

    pub fn is_pass(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn find(&self, axiom: Axiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }

    /// Sorts violations into the canonical order.
    pub fn normalize(&mut self) {
        self.violations.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    }
}

/// Accumulates residuals while a checker walks basis tuples in lexicographic
/// order, keeping the first failure per law and structure.
pub struct Recorder {
    check: String,
    field: Field,
    clause: String,
    found: BTreeMap<(Axiom, String), Violation>,
}

impl Recorder {
    pub fn new(check: &str, field: Field) -> Recorder {
        Recorder {
            check: check.to_string(),
            field,
            clause: String::new(),
            found: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Labels every subsequently recorded violation with a clause.
    pub fn set_clause(&mut self, clause: &str) {
        self.clause = clause.to_string();
    }

    /// Records `residual` at `witness` unless it vanishes.
    pub fn expect_zero(&mut self, axiom: Axiom, on: &str, witness: &[usize], residual: Vec<Scalar>) {
        if is_zero_vector(&residual) {
            return;
        }
        self.fail(axiom, on, witness, residual);
    }

    /// Records an unconditional failure.
    pub fn fail(&mut self, axiom: Axiom, on: &str, witness: &[usize], residual: Vec<Scalar>) {
        let clause = &self.clause;
        self.found
            .entry((axiom, on.to_string()))
            .and_modify(|v| v.count += 1)
            .or_insert_with(|| Violation {
                axiom,
                on: on.to_string(),
                clause: clause.clone(),
                witness: witness.to_vec(),
                residual,
                count: 1,
            });
    }

    /// Merges another report, keeping the first entry for laws reported twice.
    pub fn absorb(&mut self, report: CheckReport) {
        for mut v in report.violations {
            if v.clause.is_empty() {
                v.clause = self.clause.clone();
            }
            self.found.entry((v.axiom, v.on.clone())).or_insert(v);
        }
    }

    pub fn is_clean(&self) -> bool {
        self.found.is_empty()
    }

    pub fn finish(self) -> CheckReport {
        let mut report = CheckReport {
            check: self.check,
            field: self.field,
            violations: self.found.into_values().collect(),
        };
        report.normalize();
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip_and_are_unique() {
        let mut seen = alloc::collections::BTreeSet::new();
        for &a in Axiom::ALL {
            assert_eq!(Axiom::from_id(a.id()), Some(a));
            assert!(seen.insert(a.id()));
        }
    }

    #[test]
    fn recorder_keeps_first_witness() {
        let q = Field::Rationals;
        let mut r = Recorder::new("t", q);
        r.expect_zero(Axiom::Rlj, "g", &[0, 0, 1], alloc::vec![q.zero()]);
        r.expect_zero(Axiom::Rlj, "g", &[0, 1, 0], alloc::vec![q.one()]);
        r.expect_zero(Axiom::Rlj, "g", &[1, 1, 0], alloc::vec![q.one()]);
        let rep = r.finish();
        assert_eq!(rep.violations.len(), 1);
        assert_eq!(rep.violations[0].witness, alloc::vec![0, 1, 0]);
        assert_eq!(rep.violations[0].count, 2);
    }
}

//! Definition documents: elaboration of the parsed tree into checked
//! structures, and encoding of structures back into document entries.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use lmalg_core::algebroid::LeibnizAlgebroid;
use lmalg_core::derivations::DerivationAction;
use lmalg_core::lie_rinehart::{LieRinehartPair, TheoremOneData};
use lmalg_core::lm::{AlgebraObjectModule, LieObjectModule, LmAlgebraObject, LmLieObject, LmObject};
use lmalg_core::{
    AModule, CommAlgebra, Field, LeibnizAlgebra, LieAlgebra, LieModule, Matrix, RightLieModule, Scalar, StructureTensor,
};
use serde_json::{json, Value as J};

use crate::json::{self, Node, Pos, Value};

pub const FORMAT: &str = "lmalg/1";
/// Largest dimension accepted for any space in a document.
pub const MAX_DIM: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DiagnosticKind {
    Syntax,
    InvalidScalar,
    UnresolvedReference,
    DimensionClash,
    DuplicateName,
    Schema,
}

impl DiagnosticKind {
    pub fn name(self) -> &'static str {
        match self {
            DiagnosticKind::Syntax => "syntax error",
            DiagnosticKind::InvalidScalar => "invalid scalar",
            DiagnosticKind::UnresolvedReference => "unresolved reference",
            DiagnosticKind::DimensionClash => "dimension clash",
            DiagnosticKind::DuplicateName => "duplicate name",
            DiagnosticKind::Schema => "schema error",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub kind: DiagnosticKind,
    pub pos: Pos,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}: {}", self.pos, self.kind.name(), self.message)
    }
}

impl std::error::Error for Diagnostic {}

fn diag(kind: DiagnosticKind, pos: Pos, message: impl Into<String>) -> Diagnostic {
    Diagnostic {
        kind,
        pos,
        message: message.into(),
    }
}

type D<T> = Result<T, Diagnostic>;

/// A resolved entity. Modules and packages carry copies of what they refer to.
#[derive(Clone, Debug, PartialEq)]
pub enum Entity {
    CommAlgebra(CommAlgebra),
    Leibniz(LeibnizAlgebra),
    Lie(LieAlgebra),
    Tensor(StructureTensor),
    AModule {
        algebra: String,
        over: CommAlgebra,
        module: AModule,
    },
    LieModule {
        lie: String,
        over: LieAlgebra,
        module: LieModule,
    },
    RightModule {
        lie: String,
        over: LieAlgebra,
        module: RightLieModule,
    },
    Map(Matrix),
    LmObject(LmObject),
    LmMorphism {
        source: LmObject,
        target: LmObject,
        h1: Matrix,
        h0: Matrix,
    },
    AlgebraObject(LmAlgebraObject),
    LieObject(LmLieObject),
    AlgebraObjectModule {
        object: LmAlgebraObject,
        module: AlgebraObjectModule,
    },
    LieObjectModule {
        object: LmLieObject,
        module: LieObjectModule,
    },
    LeibnizMorphism {
        source: StructureTensor,
        target: StructureTensor,
        phi: Matrix,
    },
    AlgebraMorphism {
        source: LmAlgebraObject,
        target: LmAlgebraObject,
        phi1: Matrix,
        phi0: Matrix,
    },
    LieMorphism {
        source: LmLieObject,
        target: LmLieObject,
        phi1: Matrix,
        phi0: Matrix,
    },
    DerivationAction {
        alg: LmAlgebraObject,
        lie: LmLieObject,
        action: DerivationAction,
    },
    LrPair(LieRinehartPair),
    LrModule {
        pair: LieRinehartPair,
        module: AModule,
        rho2: StructureTensor,
    },
    Theorem1(Box<TheoremOneData>),
    Algebroid(LeibnizAlgebroid),
}

impl Entity {
    pub fn kind(&self) -> &'static str {
        match self {
            Entity::CommAlgebra(_) => "comm-algebra",
            Entity::Leibniz(_) => "leibniz",
            Entity::Lie(_) => "lie",
            Entity::Tensor(_) => "tensor",
            Entity::AModule { .. } => "a-module",
            Entity::LieModule { .. } => "lie-module",
            Entity::RightModule { .. } => "right-module",
            Entity::Map(_) => "map",
            Entity::LmObject(_) => "lm-object",
            Entity::LmMorphism { .. } => "lm-morphism",
            Entity::AlgebraObject(_) => "algebra-object",
            Entity::LieObject(_) => "lie-object",
            Entity::AlgebraObjectModule { .. } => "algebra-object-module",
            Entity::LieObjectModule { .. } => "lie-object-module",
            Entity::LeibnizMorphism { .. } => "leibniz-morphism",
            Entity::AlgebraMorphism { .. } => "algebra-morphism",
            Entity::LieMorphism { .. } => "lie-morphism",
            Entity::DerivationAction { .. } => "derivation-action",
            Entity::LrPair(_) => "lr-pair",
            Entity::LrModule { .. } => "lr-module",
            Entity::Theorem1(_) => "theorem1",
            Entity::Algebroid(_) => "algebroid",
        }
    }
}

const SECTIONS: [&str; 4] = ["tensors", "modules", "maps", "packages"];
const TENSOR_KINDS: [&str; 4] = ["comm-algebra", "leibniz", "lie", "tensor"];
const MODULE_KINDS: [&str; 3] = ["a-module", "lie-module", "right-module"];
const PACKAGE_KINDS: [&str; 14] = [
    "lm-object",
    "lm-morphism",
    "algebra-object",
    "lie-object",
    "algebra-object-module",
    "lie-object-module",
    "leibniz-morphism",
    "algebra-morphism",
    "lie-morphism",
    "derivation-action",
    "lr-pair",
    "lr-module",
    "theorem1",
    "algebroid",
];

#[derive(Clone, Debug)]
pub struct Document {
    pub field: Field,
    pub entities: BTreeMap<String, Entity>,
    /// The document tree as read, used as the base of constructed documents.
    pub source: J,
}

impl Document {
    pub fn get(&self, name: &str) -> Option<&Entity> {
        self.entities.get(name)
    }
}

pub fn parse_document(text: &str) -> D<Document> {
    let root = json::parse(text).map_err(|e| diag(DiagnosticKind::Syntax, e.pos, e.to_string_without_pos()))?;
    let fields = match &root.node {
        Node::Object(f) => f,
        _ => return Err(diag(DiagnosticKind::Schema, root.pos, "document must be an object")),
    };
    let mut seen = BTreeSet::new();
    for (k, pos, _) in fields {
        if !seen.insert(k.as_str()) {
            return Err(diag(
                DiagnosticKind::DuplicateName,
                *pos,
                format!("duplicate key {k:?}"),
            ));
        }
        if !matches!(k.as_str(), "format" | "field" | "provenance") && !SECTIONS.contains(&k.as_str()) {
            return Err(diag(DiagnosticKind::Schema, *pos, format!("unknown section {k:?}")));
        }
    }
    if let Some(f) = root.get("format") {
        let s = as_str(f)?;
        if s != FORMAT {
            return Err(diag(
                DiagnosticKind::Schema,
                f.pos,
                format!("unsupported format {s:?}; expected {FORMAT:?}"),
            ));
        }
    }
    let fv = required(&root, "field")?;
    let field: Field = as_str(fv)?
        .parse()
        .map_err(|e: lmalg_core::Error| diag(DiagnosticKind::Schema, fv.pos, e.to_string()))?;

    let mut decls: BTreeMap<String, (&'static str, Pos, &Value)> = BTreeMap::new();
    for section in SECTIONS {
        let Some(sv) = root.get(section) else { continue };
        let Node::Object(items) = &sv.node else {
            return Err(type_error(sv, "object"));
        };
        for (name, pos, v) in items {
            if name.is_empty() {
                return Err(diag(DiagnosticKind::Schema, *pos, "entity names must be nonempty"));
            }
            if decls.insert(name.clone(), (section, *pos, v)).is_some() {
                return Err(diag(
                    DiagnosticKind::DuplicateName,
                    *pos,
                    format!("{name:?} is declared twice"),
                ));
            }
        }
    }
    let mut e = Elaborator {
        field,
        decls: &decls,
        done: BTreeMap::new(),
        active: BTreeSet::new(),
    };
    for name in decls.keys() {
        e.resolve(name, decls[name].1)?;
    }
    Ok(Document {
        field,
        entities: e.done,
        source: root.to_serde(),
    })
}

impl json::SyntaxError {
    fn to_string_without_pos(&self) -> String {
        let full = self.to_string();
        let prefix = format!("{}: syntax error: ", self.pos);
        full.strip_prefix(&prefix).unwrap_or(&full).to_string()
    }
}

struct Elaborator<'a> {
    field: Field,
    decls: &'a BTreeMap<String, (&'static str, Pos, &'a Value)>,
    done: BTreeMap<String, Entity>,
    active: BTreeSet<String>,
}

fn required<'v>(v: &'v Value, key: &str) -> D<&'v Value> {
    match &v.node {
        Node::Object(_) => v
            .get(key)
            .ok_or_else(|| diag(DiagnosticKind::Schema, v.pos, format!("missing key {key:?}"))),
        _ => Err(type_error(v, "object")),
    }
}

fn type_error(v: &Value, expected: &str) -> Diagnostic {
    diag(
        DiagnosticKind::Schema,
        v.pos,
        format!("expected {expected}, found {}", v.type_name()),
    )
}

fn as_str(v: &Value) -> D<&str> {
    match &v.node {
        Node::Str(s) => Ok(s),
        _ => Err(type_error(v, "string")),
    }
}

fn as_array(v: &Value) -> D<&[Value]> {
    match &v.node {
        Node::Array(a) => Ok(a),
        _ => Err(type_error(v, "array")),
    }
}

fn as_index(v: &Value) -> D<usize> {
    match &v.node {
        Node::Number(s) => s.parse::<usize>().map_err(|_| {
            diag(
                DiagnosticKind::Schema,
                v.pos,
                format!("expected a nonnegative integer, found {s}"),
            )
        }),
        _ => Err(type_error(v, "nonnegative integer")),
    }
}

fn as_dim(v: &Value) -> D<usize> {
    let d = as_index(v)?;
    if d > MAX_DIM {
        return Err(diag(
            DiagnosticKind::DimensionClash,
            v.pos,
            format!("dimension {d} exceeds the limit {MAX_DIM}"),
        ));
    }
    Ok(d)
}

fn scalar(field: Field, v: &Value) -> D<Scalar> {
    let text = match &v.node {
        Node::Str(s) => s.as_str(),
        Node::Number(s) => s.as_str(),
        _ => return Err(type_error(v, "scalar string")),
    };
    field.parse(text).map_err(|_| {
        diag(
            DiagnosticKind::InvalidScalar,
            v.pos,
            format!("{text:?} is not an element of {field}"),
        )
    })
}

fn vector(field: Field, v: &Value, len: usize, what: &str) -> D<Vec<Scalar>> {
    let items = as_array(v)?;
    if items.len() != len {
        return Err(diag(
            DiagnosticKind::DimensionClash,
            v.pos,
            format!("{what} has {} entries, expected {len}", items.len()),
        ));
    }
    items.iter().map(|s| scalar(field, s)).collect()
}

fn sparse(field: Field, v: &Value, dims: (usize, usize, usize)) -> D<StructureTensor> {
    let mut t = StructureTensor::zeros(field, dims);
    let mut seen = BTreeSet::new();
    let bounds = [dims.0, dims.1, dims.2];
    for e in as_array(v)? {
        let parts = as_array(e)?;
        if parts.len() != 4 {
            return Err(diag(
                DiagnosticKind::Schema,
                e.pos,
                "tensor entries are [i, j, k, value]",
            ));
        }
        let mut idx = [0; 3];
        for (n, p) in parts[..3].iter().enumerate() {
            idx[n] = as_index(p)?;
            if idx[n] >= bounds[n] {
                return Err(diag(
                    DiagnosticKind::DimensionClash,
                    p.pos,
                    format!("index {} out of range for dims {:?}", idx[n], dims),
                ));
            }
        }
        if !seen.insert(idx) {
            return Err(diag(
                DiagnosticKind::DuplicateName,
                e.pos,
                format!("entry {idx:?} given twice"),
            ));
        }
        t.set(idx[0], idx[1], idx[2], scalar(field, &parts[3])?);
    }
    Ok(t)
}

fn core_error(pos: Pos, e: lmalg_core::Error) -> Diagnostic {
    let kind = match e {
        lmalg_core::Error::DimensionMismatch { .. } => DiagnosticKind::DimensionClash,
        lmalg_core::Error::InvalidScalar(_) => DiagnosticKind::InvalidScalar,
        lmalg_core::Error::Invalid(ref m) if m.contains("dims") || m.contains("dimension") => {
            DiagnosticKind::DimensionClash
        }
        _ => DiagnosticKind::Schema,
    };
    diag(kind, pos, e.to_string())
}

fn dims_clash(pos: Pos, what: &str, expected: impl fmt::Debug, found: impl fmt::Debug) -> Diagnostic {
    diag(
        DiagnosticKind::DimensionClash,
        pos,
        format!("{what} must have dims {expected:?}, found {found:?}"),
    )
}

macro_rules! expect_entity {
    ($self:ident, $v:expr, $key:expr, $pat:pat => $out:expr, $want:expr) => {{
        let (entity, pos) = $self.reference($v, $key)?;
        match entity {
            $pat => $out,
            other => {
                return Err(diag(
                    DiagnosticKind::Schema,
                    pos,
                    format!("{:?} must name a {}, found {}", $key, $want, other.kind()),
                ))
            }
        }
    }};
}

impl<'a> Elaborator<'a> {
    fn resolve(&mut self, name: &str, at: Pos) -> D<Entity> {
        if let Some(e) = self.done.get(name) {
            return Ok(e.clone());
        }
        let Some(&(section, _, v)) = self.decls.get(name) else {
            return Err(diag(
                DiagnosticKind::UnresolvedReference,
                at,
                format!("{name:?} is not declared"),
            ));
        };
        if !self.active.insert(name.to_string()) {
            return Err(diag(DiagnosticKind::Schema, at, format!("{name:?} refers to itself")));
        }
        let e = self.elaborate(section, v)?;
        self.active.remove(name);
        self.done.insert(name.to_string(), e.clone());
        Ok(e)
    }

    fn reference(&mut self, v: &Value, key: &str) -> D<(Entity, Pos)> {
        let r = required(v, key)?;
        let name = as_str(r)?;
        Ok((self.resolve(name, r.pos)?, r.pos))
    }

    fn name_of<'v>(&self, v: &'v Value, key: &str) -> D<&'v str> {
        as_str(required(v, key)?)
    }

    fn tensor(&mut self, v: &Value, key: &str, dims: (usize, usize, usize)) -> D<StructureTensor> {
        let t = expect_entity!(self, v, key, Entity::Tensor(t) => t, "tensor");
        if t.dims() != dims {
            return Err(dims_clash(required(v, key)?.pos, key, dims, t.dims()));
        }
        Ok(t)
    }

    fn map(&mut self, v: &Value, key: &str, codomain: usize, domain: usize) -> D<Matrix> {
        let m = expect_entity!(self, v, key, Entity::Map(m) => m, "map");
        if (m.rows(), m.cols()) != (codomain, domain) {
            return Err(diag(
                DiagnosticKind::DimensionClash,
                required(v, key)?.pos,
                format!(
                    "{key:?} must map dimension {domain} to {codomain}, found {} to {}",
                    m.cols(),
                    m.rows()
                ),
            ));
        }
        Ok(m)
    }

    fn a_module(&mut self, v: &Value, key: &str, algebra: &CommAlgebra, dim: Option<usize>) -> D<AModule> {
        let pos = required(v, key)?.pos;
        let (over, m) =
            expect_entity!(self, v, key, Entity::AModule { over, module, .. } => (over, module), "a-module");
        if &over != algebra {
            return Err(diag(
                DiagnosticKind::Schema,
                pos,
                format!("{key:?} is a module over a different algebra"),
            ));
        }
        if let Some(d) = dim {
            if m.dim() != d {
                return Err(diag(
                    DiagnosticKind::DimensionClash,
                    pos,
                    format!("{key:?} must have dimension {d}, found {}", m.dim()),
                ));
            }
        }
        Ok(m)
    }

    fn elaborate(&mut self, section: &str, v: &Value) -> D<Entity> {
        if section == "maps" {
            return self.matrix(v).map(Entity::Map);
        }
        let kinds: &[&str] = match section {
            "tensors" => &TENSOR_KINDS,
            "modules" => &MODULE_KINDS,
            _ => &PACKAGE_KINDS,
        };
        let kv = required(v, "kind")?;
        let kind = as_str(kv)?;
        if !kinds.contains(&kind) {
            return Err(diag(
                DiagnosticKind::Schema,
                kv.pos,
                format!("unknown {section} kind {kind:?}; expected one of {}", kinds.join(", ")),
            ));
        }
        let f = self.field;
        let pos = v.pos;
        Ok(match kind {
            "comm-algebra" => {
                let n = as_dim(required(v, "dim")?)?;
                let t = sparse(f, required(v, "entries")?, (n, n, n))?;
                let unit = vector(f, required(v, "unit")?, n, "unit")?;
                Entity::CommAlgebra(CommAlgebra::new(t, unit).map_err(|e| core_error(pos, e))?)
            }
            "leibniz" | "lie" => {
                let n = as_dim(required(v, "dim")?)?;
                let t = sparse(f, required(v, "entries")?, (n, n, n))?;
                if kind == "lie" {
                    Entity::Lie(LieAlgebra::new(t).map_err(|e| core_error(pos, e))?)
                } else {
                    Entity::Leibniz(LeibnizAlgebra::new(t).map_err(|e| core_error(pos, e))?)
                }
            }
            "tensor" => {
                let dv = required(v, "dims")?;
                let ds = as_array(dv)?;
                if ds.len() != 3 {
                    return Err(diag(DiagnosticKind::Schema, dv.pos, "dims must list three dimensions"));
                }
                let dims = (as_dim(&ds[0])?, as_dim(&ds[1])?, as_dim(&ds[2])?);
                Entity::Tensor(sparse(f, required(v, "entries")?, dims)?)
            }
            "a-module" => {
                let name = self.name_of(v, "algebra")?.to_string();
                let a = expect_entity!(self, v, "algebra", Entity::CommAlgebra(a) => a, "comm-algebra");
                let n = as_dim(required(v, "dim")?)?;
                let t = sparse(f, required(v, "entries")?, (a.dim(), n, n))?;
                Entity::AModule {
                    algebra: name,
                    over: a,
                    module: AModule::new(t).map_err(|e| core_error(pos, e))?,
                }
            }
            "lie-module" | "right-module" => {
                let name = self.name_of(v, "lie")?.to_string();
                let l = expect_entity!(self, v, "lie", Entity::Lie(l) => l, "lie");
                let n = as_dim(required(v, "dim")?)?;
                if kind == "lie-module" {
                    let t = sparse(f, required(v, "entries")?, (l.dim(), n, n))?;
                    Entity::LieModule {
                        lie: name,
                        over: l,
                        module: LieModule::new(t).map_err(|e| core_error(pos, e))?,
                    }
                } else {
                    let t = sparse(f, required(v, "entries")?, (n, l.dim(), n))?;
                    Entity::RightModule {
                        lie: name,
                        over: l,
                        module: RightLieModule::new(t).map_err(|e| core_error(pos, e))?,
                    }
                }
            }
            _ => self.package(kind, v)?,
        })
    }

    fn matrix(&mut self, v: &Value) -> D<Matrix> {
        let rows_n = as_dim(required(v, "codomain")?)?;
        let cols_n = as_dim(required(v, "domain")?)?;
        let rv = required(v, "rows")?;
        let rows = as_array(rv)?;
        if rows.len() != rows_n {
            return Err(diag(
                DiagnosticKind::DimensionClash,
                rv.pos,
                format!("{} rows given, codomain is {rows_n}", rows.len()),
            ));
        }
        let rows = rows
            .iter()
            .map(|r| vector(self.field, r, cols_n, "row"))
            .collect::<D<Vec<_>>>()?;
        Matrix::from_rows(self.field, cols_n, rows).map_err(|e| core_error(v.pos, e))
    }

    fn algebra_object(&mut self, v: &Value, key: &str) -> D<LmAlgebraObject> {
        Ok(expect_entity!(self, v, key, Entity::AlgebraObject(x) => x, "algebra-object"))
    }

    fn lie_object(&mut self, v: &Value, key: &str) -> D<LmLieObject> {
        Ok(expect_entity!(self, v, key, Entity::LieObject(x) => x, "lie-object"))
    }

    fn leibniz_table(&mut self, v: &Value, key: &str) -> D<StructureTensor> {
        let (e, pos) = self.reference(v, key)?;
        match e {
            Entity::Leibniz(g) => Ok(g.bracket().clone()),
            Entity::Lie(l) => Ok(l.bracket().clone()),
            other => Err(diag(
                DiagnosticKind::Schema,
                pos,
                format!("{key:?} must name a leibniz or lie algebra, found {}", other.kind()),
            )),
        }
    }

    fn lm_object(&mut self, v: &Value, key: &str) -> D<LmObject> {
        let (e, pos) = self.reference(v, key)?;
        match e {
            Entity::Map(m) => Ok(LmObject::new(m)),
            Entity::LmObject(o) => Ok(o),
            other => Err(diag(
                DiagnosticKind::Schema,
                pos,
                format!("{key:?} must name a map or lm-object, found {}", other.kind()),
            )),
        }
    }

    fn package(&mut self, kind: &str, v: &Value) -> D<Entity> {
        let pos = v.pos;
        Ok(match kind {
            "lm-object" => Entity::LmObject(self.lm_object(v, "u")?),
            "lm-morphism" => {
                let source = self.lm_object(v, "source")?;
                let target = self.lm_object(v, "target")?;
                let h1 = self.map(v, "h1", target.top(), source.top())?;
                let h0 = self.map(v, "h0", target.bottom(), source.bottom())?;
                Entity::LmMorphism { source, target, h1, h0 }
            }
            "algebra-object" => {
                let a = expect_entity!(self, v, "algebra", Entity::CommAlgebra(a) => a, "comm-algebra");
                let m = self.a_module(v, "module", &a, None)?;
                let g = self.map(v, "g", a.dim(), m.dim())?;
                Entity::AlgebraObject(LmAlgebraObject::new(a, m, g).map_err(|e| core_error(pos, e))?)
            }
            "lie-object" => {
                let l = expect_entity!(self, v, "lie", Entity::Lie(l) => l, "lie");
                let mpos = required(v, "module")?.pos;
                let (over, n) = expect_entity!(self, v, "module",
                    Entity::RightModule { over, module, .. } => (over, module), "right-module");
                if over != l {
                    return Err(diag(
                        DiagnosticKind::Schema,
                        mpos,
                        "\"module\" is a module over a different Lie algebra",
                    ));
                }
                let fm = self.map(v, "f", l.dim(), n.dim())?;
                Entity::LieObject(LmLieObject::new(l, n, fm).map_err(|e| core_error(pos, e))?)
            }
            "algebra-object-module" => {
                let object = self.algebra_object(v, "object")?;
                let u = self.lm_object(v, "u")?;
                let act_v = self.a_module(v, "act_v", &object.algebra, Some(u.top()))?;
                let act_w = self.a_module(v, "act_w", &object.algebra, Some(u.bottom()))?;
                let alpha = self.tensor(v, "alpha", (object.module.dim(), u.bottom(), u.top()))?;
                Entity::AlgebraObjectModule {
                    object,
                    module: AlgebraObjectModule {
                        object: u,
                        act_v,
                        act_w,
                        alpha,
                    },
                }
            }
            "lie-object-module" => {
                let object = self.lie_object(v, "object")?;
                let u = self.lm_object(v, "u")?;
                let lie_mod = |s: &mut Self, key: &str, dim: usize| -> D<LieModule> {
                    let p = required(v, key)?.pos;
                    let (over, m) = expect_entity!(s, v, key,
                        Entity::LieModule { over, module, .. } => (over, module), "lie-module");
                    if over != object.lie || m.dim() != dim {
                        return Err(diag(
                            DiagnosticKind::DimensionClash,
                            p,
                            format!("{key:?} must be a {dim}-dimensional module over the object's Lie algebra"),
                        ));
                    }
                    Ok(m)
                };
                let alpha0 = lie_mod(self, "alpha0", u.bottom())?;
                let alpha2 = lie_mod(self, "alpha2", u.top())?;
                let alpha1 = self.tensor(v, "alpha1", (object.module.dim(), u.bottom(), u.top()))?;
                Entity::LieObjectModule {
                    object,
                    module: LieObjectModule {
                        object: u,
                        alpha0,
                        alpha1,
                        alpha2,
                    },
                }
            }
            "leibniz-morphism" => {
                let source = self.leibniz_table(v, "source")?;
                let target = self.leibniz_table(v, "target")?;
                let phi = self.map(v, "phi", target.dims().0, source.dims().0)?;
                Entity::LeibnizMorphism { source, target, phi }
            }
            "algebra-morphism" => {
                let source = self.algebra_object(v, "source")?;
                let target = self.algebra_object(v, "target")?;
                let phi1 = self.map(v, "phi1", target.module.dim(), source.module.dim())?;
                let phi0 = self.map(v, "phi0", target.algebra.dim(), source.algebra.dim())?;
                Entity::AlgebraMorphism {
                    source,
                    target,
                    phi1,
                    phi0,
                }
            }
            "lie-morphism" => {
                let source = self.lie_object(v, "source")?;
                let target = self.lie_object(v, "target")?;
                let phi1 = self.map(v, "phi1", target.module.dim(), source.module.dim())?;
                let phi0 = self.map(v, "phi0", target.lie.dim(), source.lie.dim())?;
                Entity::LieMorphism {
                    source,
                    target,
                    phi1,
                    phi0,
                }
            }
            "derivation-action" => {
                let alg = self.algebra_object(v, "alg")?;
                let lie = self.lie_object(v, "lie")?;
                let action = self.rhos(v, &alg, &lie)?;
                Entity::DerivationAction { alg, lie, action }
            }
            "lr-pair" => {
                let a = expect_entity!(self, v, "algebra", Entity::CommAlgebra(a) => a, "comm-algebra");
                let l = expect_entity!(self, v, "lie", Entity::Lie(l) => l, "lie");
                let action = self.a_module(v, "action", &a, Some(l.dim()))?;
                let anchor = self.tensor(v, "anchor", (l.dim(), a.dim(), a.dim()))?;
                Entity::LrPair(LieRinehartPair::new(a, l, action, anchor).map_err(|e| core_error(pos, e))?)
            }
            "lr-module" => {
                let pair = expect_entity!(self, v, "pair", Entity::LrPair(p) => p, "lr-pair");
                let module = self.a_module(v, "module", &pair.algebra, None)?;
                let rho2 = self.tensor(v, "rho2", (pair.lie.dim(), module.dim(), module.dim()))?;
                Entity::LrModule { pair, module, rho2 }
            }
            "theorem1" => {
                let alg = self.algebra_object(v, "alg")?;
                let lie = self.lie_object(v, "lie")?;
                let rhos = self.rhos(v, &alg, &lie)?;
                let lambda = self.tensor(v, "lambda", (alg.module.dim(), lie.lie.dim(), lie.module.dim()))?;
                let action_n = self.a_module(v, "action_n", &alg.algebra, Some(lie.module.dim()))?;
                let action_l = self.a_module(v, "action_l", &alg.algebra, Some(lie.lie.dim()))?;
                Entity::Theorem1(Box::new(TheoremOneData {
                    alg,
                    lie,
                    rho0: rhos.rho0,
                    rho1: rhos.rho1,
                    rho2: rhos.rho2,
                    lambda,
                    action_n,
                    action_l,
                }))
            }
            "algebroid" => {
                let a = expect_entity!(self, v, "algebra", Entity::CommAlgebra(a) => a, "comm-algebra");
                let b = self.leibniz_table(v, "bracket")?;
                let e = LeibnizAlgebra::new(b).map_err(|e| core_error(pos, e))?;
                let action = self.a_module(v, "action", &a, Some(e.dim()))?;
                let anchor = self.tensor(v, "anchor", (e.dim(), a.dim(), a.dim()))?;
                Entity::Algebroid(LeibnizAlgebroid::new(a, e, action, anchor).map_err(|e| core_error(pos, e))?)
            }
            _ => unreachable!("kind validated by caller"),
        })
    }

    fn rhos(&mut self, v: &Value, alg: &LmAlgebraObject, lie: &LmLieObject) -> D<DerivationAction> {
        let (da, dm) = (alg.algebra.dim(), alg.module.dim());
        let (dl, dn) = (lie.lie.dim(), lie.module.dim());
        Ok(DerivationAction {
            rho0: self.tensor(v, "rho0", (dl, da, da))?,
            rho1: self.tensor(v, "rho1", (dn, da, dm))?,
            rho2: self.tensor(v, "rho2", (dl, dm, dm))?,
        })
    }
}

// Encoding.

pub fn scalar_text(s: &Scalar) -> J {
    J::String(s.to_canonical())
}

pub fn entries(t: &StructureTensor) -> J {
    J::Array(
        t.nonzero_entries()
            .map(|(i, j, k, s)| json!([i, j, k, s.to_canonical()]))
            .collect(),
    )
}

pub fn encode_algebra(a: &CommAlgebra) -> J {
    json!({
        "kind": "comm-algebra",
        "dim": a.dim(),
        "unit": a.unit().iter().map(scalar_text).collect::<Vec<_>>(),
        "entries": entries(a.mult()),
    })
}

pub fn encode_bracket(kind: &str, t: &StructureTensor) -> J {
    json!({"kind": kind, "dim": t.dims().0, "entries": entries(t)})
}

pub fn encode_tensor(t: &StructureTensor) -> J {
    let (a, b, c) = t.dims();
    json!({"kind": "tensor", "dims": [a, b, c], "entries": entries(t)})
}

pub fn encode_a_module(algebra: &str, m: &AModule) -> J {
    json!({"kind": "a-module", "algebra": algebra, "dim": m.dim(), "entries": entries(m.action())})
}

pub fn encode_lie_module(kind: &str, lie: &str, dim: usize, t: &StructureTensor) -> J {
    json!({"kind": kind, "lie": lie, "dim": dim, "entries": entries(t)})
}

pub fn encode_map(m: &Matrix) -> J {
    json!({
        "domain": m.cols(),
        "codomain": m.rows(),
        "rows": (0..m.rows()).map(|i| m.row(i).iter().map(scalar_text).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

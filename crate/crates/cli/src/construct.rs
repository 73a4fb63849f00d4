//! Construction recipes. Each returns the input document extended by the
//! constructed entities and a provenance record.

use lmalg_core::algebra::square_zero_extension;
use lmalg_core::algebroid::{hemi_semi_algebroid, reduce_algebroid, theorem2_functor, LeibnizAlgebroid, Reduction};
use lmalg_core::derivations::{derivation_pair, universal_derivations};
use lmalg_core::leibniz::{hemi_semi_product, reduced_lie, tensor_square};
use lmalg_core::lie_rinehart::build_tautological;
use lmalg_core::lm::{tensor_objects, LmObject};
use serde_json::{json, Map, Value as J};

use crate::check::CliError;
use crate::document::{
    encode_a_module, encode_algebra, encode_bracket, encode_lie_module, encode_map, encode_tensor, Document, Entity,
    FORMAT,
};

pub const RECIPES: [(&str, &str); 11] = [
    (
        "reduced-lie",
        "quotient of a Leibniz algebra by its squares, with the projection",
    ),
    ("hemi-semi", "hemi-semidirect product M + L of a Lie module"),
    ("tensor-square", "Leibniz algebra L (x) L of a Lie algebra"),
    (
        "lm-tensor",
        "tensor product of two objects of the category of linear maps (--with)",
    ),
    ("square-zero", "square-zero extension A + M of a module"),
    ("derivations", "the Lie-Rinehart pair (A, Der A)"),
    (
        "universal-derivations",
        "universal Lie-Rinehart object of derivations of an algebra object",
    ),
    ("tautological", "Lie-Rinehart object over identity maps of a pair"),
    ("theorem2", "Leibniz algebroid on M + N of a Lie-Rinehart object"),
    (
        "hemi-semi-algebroid",
        "Leibniz algebroid on M + L of a module over a pair",
    ),
    (
        "reduce-algebroid",
        "Lie-Rinehart pair of the reduced Lie algebra of an algebroid",
    ),
];

pub struct Construction {
    pub document: J,
    pub outputs: Vec<String>,
}

/// Builder for the additions of a recipe, all named under one prefix.
struct Out {
    prefix: String,
    added: Vec<(&'static str, String, J)>,
}

impl Out {
    fn name(&self, part: &str) -> String {
        if part.is_empty() {
            self.prefix.clone()
        } else {
            format!("{}.{part}", self.prefix)
        }
    }

    fn add(&mut self, section: &'static str, part: &str, value: J) -> String {
        let name = self.name(part);
        self.added.push((section, name.clone(), value));
        name
    }
}

/// The name `entity` uses for `key`, as written in the source document.
fn referenced(doc: &Document, entity: &str, key: &str) -> Result<String, CliError> {
    for section in ["tensors", "modules", "maps", "packages"] {
        if let Some(r) = doc
            .source
            .get(section)
            .and_then(|s| s.get(entity))
            .and_then(|e| e.get(key))
        {
            if let Some(s) = r.as_str() {
                return Ok(s.to_string());
            }
        }
    }
    Err(CliError::Usage(format!("{entity:?} has no reference {key:?}")))
}

fn lm_object_of(e: &Entity) -> Option<LmObject> {
    match e {
        Entity::Map(m) => Some(LmObject::new(m.clone())),
        Entity::LmObject(o) => Some(o.clone()),
        _ => None,
    }
}

pub fn run_construct(
    doc: &Document,
    recipe: &str,
    entity: &str,
    with: Option<&str>,
    prefix: Option<&str>,
) -> Result<Construction, CliError> {
    if !RECIPES.iter().any(|(r, _)| *r == recipe) {
        return Err(CliError::Usage(format!("unknown recipe {recipe:?}")));
    }
    let e = doc
        .get(entity)
        .ok_or_else(|| CliError::Usage(format!("no entity named {entity:?}")))?;
    let mismatch = |want: &str| {
        CliError::Usage(format!(
            "recipe {recipe:?} needs a {want}, but {entity:?} is a {}",
            e.kind()
        ))
    };
    let mut out = Out {
        prefix: prefix
            .map(str::to_string)
            .unwrap_or_else(|| format!("{entity}.{recipe}")),
        added: Vec::new(),
    };
    let mut inputs = vec![entity.to_string()];
    match recipe {
        "reduced-lie" => {
            let g = match e {
                Entity::Leibniz(g) => g.clone(),
                Entity::Lie(l) => l.to_leibniz(),
                _ => return Err(mismatch("leibniz algebra")),
            };
            let (lie, pi) = reduced_lie(&g)?;
            let l = out.add("tensors", "lie", encode_bracket("lie", lie.bracket()));
            let p = out.add("maps", "pi", encode_map(&pi));
            out.add(
                "packages",
                "projection",
                json!({"kind": "leibniz-morphism", "source": entity, "target": l, "phi": p}),
            );
        }
        "hemi-semi" => {
            let Entity::LieModule { over, module, .. } = e else {
                return Err(mismatch("lie-module"));
            };
            let g = hemi_semi_product(over, module)?;
            out.add("tensors", "", encode_bracket("leibniz", g.bracket()));
        }
        "tensor-square" => {
            let Entity::Lie(l) = e else {
                return Err(mismatch("lie algebra"));
            };
            out.add("tensors", "", encode_bracket("leibniz", tensor_square(l)?.bracket()));
        }
        "lm-tensor" => {
            let a = lm_object_of(e).ok_or_else(|| mismatch("map or lm-object"))?;
            let other = with.ok_or_else(|| CliError::Usage("recipe \"lm-tensor\" needs --with".into()))?;
            inputs.push(other.to_string());
            let b = doc
                .get(other)
                .and_then(lm_object_of)
                .ok_or_else(|| CliError::Usage(format!("{other:?} is not a map or lm-object")))?;
            let t = tensor_objects(&a, &b)?;
            out.add("maps", "", encode_map(t.u()));
        }
        "square-zero" => {
            let Entity::AModule { over, module, .. } = e else {
                return Err(mismatch("a-module"));
            };
            out.add("tensors", "", encode_algebra(&square_zero_extension(over, module)?));
        }
        "derivations" => {
            let Entity::CommAlgebra(a) = e else {
                return Err(mismatch("comm-algebra"));
            };
            let p = derivation_pair(a)?;
            let lie = out.add("tensors", "lie", encode_bracket("lie", p.lie.bracket()));
            let action = out.add("modules", "action", encode_a_module(entity, &p.action));
            let anchor = out.add("tensors", "anchor", encode_tensor(&p.anchor));
            out.add(
                "packages",
                "",
                json!({"kind": "lr-pair", "algebra": entity, "lie": lie, "action": action, "anchor": anchor}),
            );
        }
        "universal-derivations" => {
            let Entity::AlgebraObject(x) = e else {
                return Err(mismatch("algebra-object"));
            };
            let algebra = referenced(doc, entity, "algebra")?;
            let u = universal_derivations(x)?;
            let d = u.theorem1_data()?;
            let lie = out.add("tensors", "lie", encode_bracket("lie", d.lie.lie.bracket()));
            let n = out.add(
                "modules",
                "n",
                encode_lie_module("right-module", &lie, d.lie.module.dim(), d.lie.module.action()),
            );
            let f = out.add("maps", "f", encode_map(&d.lie.f));
            let lie_object = out.add(
                "packages",
                "lie_object",
                json!({"kind": "lie-object", "lie": lie, "module": n, "f": f}),
            );
            let mut package = json!({"kind": "theorem1", "alg": entity, "lie": lie_object});
            for (part, t) in [
                ("rho0", &d.rho0),
                ("rho1", &d.rho1),
                ("rho2", &d.rho2),
                ("lambda", &d.lambda),
            ] {
                package[part] = J::String(out.add("tensors", part, encode_tensor(t)));
            }
            package["action_n"] = J::String(out.add("modules", "action_n", encode_a_module(&algebra, &d.action_n)));
            package["action_l"] = J::String(out.add("modules", "action_l", encode_a_module(&algebra, &d.action_l)));
            out.add("packages", "", package);
        }
        "tautological" => {
            let Entity::LrPair(p) = e else {
                return Err(mismatch("lr-pair"));
            };
            let d = build_tautological(p)?;
            let algebra = referenced(doc, entity, "algebra")?;
            let lie = referenced(doc, entity, "lie")?;
            let anchor = referenced(doc, entity, "anchor")?;
            let action = referenced(doc, entity, "action")?;
            let regular = out.add("modules", "regular", encode_a_module(&algebra, &d.alg.module));
            let id_a = out.add("maps", "id_a", encode_map(&d.alg.g));
            let alg = out.add(
                "packages",
                "alg",
                json!({"kind": "algebra-object", "algebra": algebra, "module": regular, "g": id_a}),
            );
            let adjoint = out.add(
                "modules",
                "adjoint",
                encode_lie_module("right-module", &lie, d.lie.module.dim(), d.lie.module.action()),
            );
            let id_l = out.add("maps", "id_l", encode_map(&d.lie.f));
            let lie_object = out.add(
                "packages",
                "lie_object",
                json!({"kind": "lie-object", "lie": lie, "module": adjoint, "f": id_l}),
            );
            let lambda = out.add("tensors", "lambda", encode_tensor(&d.lambda));
            out.add(
                "packages",
                "",
                json!({
                    "kind": "theorem1", "alg": alg, "lie": lie_object,
                    "rho0": anchor, "rho1": anchor, "rho2": anchor, "lambda": lambda,
                    "action_n": action, "action_l": action,
                }),
            );
        }
        "theorem2" | "hemi-semi-algebroid" => {
            let (x, algebra) = match (recipe, e) {
                ("theorem2", Entity::Theorem1(d)) => {
                    let alg = referenced(doc, entity, "alg")?;
                    (theorem2_functor(d)?, referenced(doc, &alg, "algebra")?)
                }
                ("hemi-semi-algebroid", Entity::LrModule { pair, module, rho2 }) => {
                    let p = referenced(doc, entity, "pair")?;
                    (
                        hemi_semi_algebroid(pair, module, rho2)?,
                        referenced(doc, &p, "algebra")?,
                    )
                }
                ("theorem2", _) => return Err(mismatch("theorem1 package")),
                _ => return Err(mismatch("lr-module")),
            };
            add_algebroid(&mut out, &algebra, &x);
        }
        "reduce-algebroid" => {
            let Entity::Algebroid(x) = e else {
                return Err(mismatch("algebroid"));
            };
            let algebra = referenced(doc, entity, "algebra")?;
            match reduce_algebroid(x)? {
                Reduction::Obstruction(r) => return Err(CliError::Precondition(Box::new(r))),
                Reduction::Pair { pair, projection } => {
                    let lie = out.add("tensors", "lie", encode_bracket("lie", pair.lie.bracket()));
                    let action = out.add("modules", "action", encode_a_module(&algebra, &pair.action));
                    let anchor = out.add("tensors", "anchor", encode_tensor(&pair.anchor));
                    out.add("maps", "pi", encode_map(&projection));
                    out.add(
                        "packages",
                        "",
                        json!({"kind": "lr-pair", "algebra": algebra, "lie": lie, "action": action, "anchor": anchor}),
                    );
                }
            }
        }
        _ => unreachable!("recipe validated above"),
    }
    finish(doc, recipe, inputs, out)
}

fn add_algebroid(out: &mut Out, algebra: &str, x: &LeibnizAlgebroid) {
    let e = out.add("tensors", "bracket", encode_bracket("leibniz", x.bracket.bracket()));
    let action = out.add("modules", "action", encode_a_module(algebra, &x.action));
    let anchor = out.add("tensors", "anchor", encode_tensor(&x.anchor));
    out.add(
        "packages",
        "",
        json!({"kind": "algebroid", "algebra": algebra, "bracket": e, "action": action, "anchor": anchor}),
    );
}

fn finish(doc: &Document, recipe: &str, inputs: Vec<String>, out: Out) -> Result<Construction, CliError> {
    let mut root = match doc.source.clone() {
        J::Object(m) => m,
        _ => Map::new(),
    };
    root.insert("format".into(), J::String(FORMAT.into()));
    let mut outputs = Vec::new();
    for (section, name, value) in out.added {
        if doc.get(&name).is_some() || outputs.contains(&name) {
            return Err(CliError::Usage(format!(
                "{name:?} already exists; choose another --name"
            )));
        }
        let s = root.entry(section).or_insert_with(|| J::Object(Map::new()));
        if let J::Object(m) = s {
            m.insert(name.clone(), value);
        }
        outputs.push(name);
    }
    let record = json!({
        "recipe": recipe,
        "inputs": inputs,
        "outputs": outputs,
        "version": env!("CARGO_PKG_VERSION"),
    });
    match root.entry("provenance").or_insert_with(|| J::Array(Vec::new())) {
        J::Array(a) => a.push(record),
        other => *other = J::Array(vec![record]),
    }
    Ok(Construction {
        document: J::Object(root),
        outputs,
    })
}

pub fn render_document(doc: &J) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("document serializes");
    s.push('\n');
    s
}

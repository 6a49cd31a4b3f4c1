//! JSON renderings of computation results.
//!
//! Objects use `serde_json`'s default sorted maps, so key order is stable.
//! Rationals are strings `"p"` or `"p/q"`.

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use supergrade_core::cohomology::{Fingerprint, Isogeny, IsogenyReport, KernelReport};
use supergrade_core::exact::{Rational, Subspace};
use supergrade_core::jordan::{M11Certificate, PeirceDecomposition};
use supergrade_core::roots::{GradingReport, RootDatum, ThreeGrading, Verdict, ZCheck};
use supergrade_core::superalg::{Algebra, LieSuperalgebra, SuperSpace};

pub const SCHEMA: &str = "supergrade-report/1";

pub fn rational(q: &Rational) -> Value {
    Value::String(q.to_string())
}

pub fn vector(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational).collect())
}

fn pair((a, b): (usize, usize)) -> Value {
    json!([a, b])
}

fn graded(even: usize, odd: usize) -> Value {
    json!({ "even": even, "odd": odd })
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// The document written by `--out`: command echo, input digests, result.
pub fn document(command: &[String], inputs: &[(String, Vec<u8>)], result: Value) -> Value {
    let inputs: Vec<Value> =
        inputs.iter().map(|(path, bytes)| json!({ "path": path, "sha256": sha256_hex(bytes) })).collect();
    json!({ "schema": SCHEMA, "command": command, "inputs": inputs, "result": result })
}

pub fn algebra_summary(kind: &str, space: &SuperSpace) -> Value {
    json!({ "kind": kind, "dim": space.dim(), "even": space.even_dim(), "odd": space.odd_dim() })
}

pub fn root_datum(d: &RootDatum) -> Value {
    let roots: Vec<Value> = d
        .components
        .iter()
        .map(|c| json!({ "weight": vector(&c.weight), "even": c.even_dim, "odd": c.odd_dim }))
        .collect();
    json!({
        "rank": d.rank(),
        "zero": graded(d.zero_component.even_dim, d.zero_component.odd_dim),
        "root_count": d.components.len(),
        "roots": roots,
    })
}

pub fn grading(r: &GradingReport, z: &ZCheck) -> Value {
    let weights = |ws: &[Vec<Rational>]| Value::Array(ws.iter().map(|w| vector(w)).collect());
    json!({
        "verdict": match r.verdict { Verdict::Graded => "graded", Verdict::NotGraded => "not_graded" },
        "matched_root_system": r.matched_root_system.map(|n| format!("A({n},{n})")),
        "cover": {
            "passed": r.condition1.passed,
            "generated_dim": r.condition1.generated_dim,
            "center_dim": r.condition1.center_dim,
            "perfect": r.condition1.perfect,
            "expected_quotient_dim": r.condition1.expected_quotient_dim,
        },
        "root_set": {
            "passed": r.condition2.passed,
            "unexpected": weights(&r.condition2.unexpected),
            "missing": weights(&r.condition2.missing),
        },
        "zero_part": {
            "passed": r.condition3.passed,
            "zero_dim": r.condition3.zero_dim,
            "bracket_dim": r.condition3.bracket_dim,
        },
        "z_acts_trivially": {
            "passed": z.passed,
            "witness": z.witness.as_ref().map(|(i, _)| *i),
        },
        "datum": root_datum(&r.datum),
    })
}

fn part(l: &LieSuperalgebra, s: &Subspace) -> Value {
    let (e, o) = graded_dims(l.space(), s);
    graded(e, o)
}

/// Graded dimensions of a graded subspace.
pub fn graded_dims(space: &SuperSpace, s: &Subspace) -> (usize, usize) {
    let evens: Vec<Vec<Rational>> = s.basis().iter().map(|v| space.split(v).0).collect();
    let e = Subspace::span(space.dim(), &evens).dim();
    (e, s.dim() - e)
}

pub fn three_grading(l: &LieSuperalgebra, g: &ThreeGrading, style: &str) -> Value {
    json!({
        "style": style,
        "minus": part(l, &g.minus),
        "zero": part(l, &g.zero),
        "plus": part(l, &g.plus),
        "closed": true,
    })
}

pub fn peirce(space: &SuperSpace, p: &PeirceDecomposition, laws: bool) -> Value {
    let parts: Vec<Value> = p
        .parts
        .iter()
        .map(|s| {
            let (e, o) = graded_dims(space, s);
            graded(e, o)
        })
        .collect();
    json!({ "idempotent": vector(&p.idempotent), "parts": parts, "laws_hold": laws })
}

pub fn certificate(c: &M11Certificate) -> Value {
    let rel: Vec<Value> = c.relations.iter().map(|(name, ok)| json!({ "relation": name, "holds": ok })).collect();
    json!({ "passed": c.passed(), "relations": rel })
}

pub fn h2(even: usize, odd: usize) -> Value {
    json!({ "h2_even": even, "h2_odd": odd })
}

pub fn fingerprint(f: &Fingerprint) -> Value {
    json!({
        "dims": pair(f.dims),
        "derived_series": f.derived_series.iter().map(|&d| pair(d)).collect::<Vec<_>>(),
        "center_dim": f.center_dim,
        "h2": pair(f.h2),
        "roots": f.roots.as_ref().map(|r| r.iter().map(|&d| pair(d)).collect::<Vec<_>>()),
    })
}

pub fn isogeny(r: &IsogenyReport) -> Value {
    let verdict = match r.verdict {
        Isogeny::Equal => "equal",
        Isogeny::Different => "different",
        Isogeny::Inconclusive => "inconclusive",
    };
    json!({ "verdict": verdict, "left": fingerprint(&r.left), "right": fingerprint(&r.right) })
}

pub fn kernel(r: &KernelReport) -> Value {
    let roots: Vec<Value> = r
        .roots
        .iter()
        .map(|x| {
            json!({
                "weight": vector(&x.weight),
                "base": pair(x.base_dims),
                "lifted": pair(x.lifted_dims),
                "isomorphic": x.isomorphic,
            })
        })
        .collect();
    json!({
        "passed": r.passed,
        "kernel_dim": r.kernel_dim,
        "kernel_in_zero_weight": r.kernel_in_zero_weight,
        "roots": roots,
        "unexpected": r.unexpected.iter().map(|w| vector(w)).collect::<Vec<_>>(),
    })
}

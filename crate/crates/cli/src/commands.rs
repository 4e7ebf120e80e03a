use std::path::Path;

use anyhow::{anyhow, bail, Context as _, Result};
use ringcode_core::catalog::{self, get_fixture};
use ringcode_core::codes::{LinearCode, DEFAULT_CAP};
use ringcode_core::format::{parse_matrix, write_matrix, write_table};
use ringcode_core::graymaps::{
    compose_modular, extend, image_is_rm2, map_generator_rows, verify_composition_theorem, verify_isometry,
    verify_mapped_basis_independence, vega_map, TableMatch,
};
use ringcode_core::{CarletMap, ElementMap, ModularGrayMap, RingMatrix, RingSpec, RingVector, WeightKind, WeightValue};
use serde_json::{json, Value};

use crate::args::{
    CapArgs, CodeArgs, CodeOp, FixturesCommand, IsometryArgs, MapArgs, MapKind, MapTarget, VerifyCommand,
};
use crate::report::{InputDigest, Outcome};

/// Violations beyond this many are counted but not listed.
const MAX_LISTED_VIOLATIONS: usize = 1000;
const MAX_PRINTED_VIOLATIONS: usize = 10;

pub const CAP_ENV: &str = "RINGCODE_CAP";

pub fn resolve_cap(args: &CapArgs) -> Result<u64> {
    if args.force {
        return Ok(u64::MAX);
    }
    if let Some(cap) = args.cap {
        return Ok(cap);
    }
    match std::env::var(CAP_ENV) {
        Ok(v) => v.trim().parse().with_context(|| format!("{CAP_ENV}={v:?} is not a non-negative integer")),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

/// A generator matrix read from a file path or, failing that, the fixture catalog.
struct MatrixInput {
    matrix: RingMatrix,
    note: Option<&'static str>,
}

fn load_matrix(source: &str, digest: &mut InputDigest) -> Result<MatrixInput> {
    let path = Path::new(source);
    if path.is_file() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {source}"))?;
        digest.absorb(text.as_bytes());
        let matrix = parse_matrix(&text).with_context(|| format!("parsing {source}"))?;
        return Ok(MatrixInput { matrix, note: None });
    }
    let fixture = get_fixture(source).map_err(|e| anyhow!(e).context(format!("{source} is neither a file nor a fixture")))?;
    let matrix = fixture.matrix().ok_or_else(|| anyhow!("fixture {source} is a {}, not a matrix", fixture.kind))?;
    digest.absorb(fixture.source.as_bytes());
    Ok(MatrixInput { matrix: matrix.clone(), note: fixture.note })
}

fn build_map(t: &MapTarget) -> Result<Box<dyn ElementMap>> {
    let kind = t.map.kind();
    if kind != MapKind::Carlet && t.p != 2 {
        bail!("--p={} is only supported with --carlet; the modular maps act on Z_(2^s)", t.p);
    }
    Ok(match kind {
        MapKind::Eta => Box::new(ModularGrayMap::eta(t.s)?),
        MapKind::Xi => Box::new(ModularGrayMap::xi(t.s)?),
        MapKind::Carlet => Box::new(CarletMap::new(t.p, t.s)?),
        MapKind::Compose => Box::new(compose_modular(t.s)?),
        MapKind::Vega => Box::new(vega_map(t.s)?),
    })
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn parse_vector(spec: RingSpec, text: &str) -> Result<RingVector> {
    let entries = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            let x: i128 = t.parse().with_context(|| format!("`{t}` is not an integer"))?;
            u64::try_from(x).map_err(|_| anyhow!("{x} is not in {spec}"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RingVector::from_residues(spec, entries)?)
}

fn rows_json(m: &RingMatrix) -> Value {
    json!(m.rows())
}

fn weight_json(w: WeightValue) -> Value {
    match w {
        WeightValue::Exact(x) => json!(x),
        WeightValue::Real(x) => json!(x),
    }
}

fn big_json(x: u128) -> Value {
    u64::try_from(x).map_or_else(|_| json!(x.to_string()), |v| json!(v))
}

pub fn map(args: &MapArgs, digest: &mut InputDigest) -> Result<Outcome> {
    let map = build_map(&args.target)?;
    let layout = args.target.layout;
    let domain = map.domain();
    let label = map.label();

    if let Some(value) = args.value {
        let u = u64::try_from(value).map_err(|_| anyhow!("{value} is not in {domain}"))?;
        let image = map.image(domain.check(u)?)?;
        return Ok(Outcome::new(join(&image), json!({ "map": label, "value": u, "image": image })));
    }
    if let Some(text) = &args.vector {
        let v = parse_vector(domain, text)?;
        let image = extend(map.as_ref(), layout, &v)?;
        return Ok(Outcome::new(
            join(image.entries()),
            json!({ "map": label, "layout": layout.to_string(), "vector": v.entries(), "image": image.entries() }),
        ));
    }
    if let Some(source) = &args.matrix {
        let input = load_matrix(source, digest)?;
        let mapped = map_generator_rows(map.as_ref(), layout, &input.matrix)?;
        let mut out = Outcome::new(
            write_matrix(&mapped),
            json!({ "map": label, "layout": layout.to_string(), "matrix": rows_json(&mapped) }),
        );
        if let Some(note) = input.note {
            out = out.with_note(note);
        }
        return Ok(out);
    }
    let table = map.table()?;
    Ok(Outcome::new(write_table(&table), json!({ "map": label, "table": table.images() })))
}

pub fn verify(cmd: &VerifyCommand, digest: &mut InputDigest) -> Result<Outcome> {
    match cmd {
        VerifyCommand::Isometry(args) => isometry(args),
        VerifyCommand::Composition { s } => {
            let report = verify_composition_theorem(*s)?;
            let (text, perm) = match &report.verdict {
                TableMatch::Exact => ("exact match under default point order".to_string(), None),
                TableMatch::Permuted(perm) => {
                    (format!("match only up to the fixed column permutation {}", join(perm)), Some(perm.clone()))
                }
                TableMatch::Unequal => ("no match, not even up to a column permutation".to_string(), None),
            };
            let verdict = match &report.verdict {
                TableMatch::Exact => "exact",
                TableMatch::Permuted(_) => "permuted",
                TableMatch::Unequal => "unequal",
            };
            Ok(Outcome::verdict(
                text,
                json!({ "s": s, "verdict": verdict, "permutation": perm, "entries": report.composed.images().len() }),
                report.is_exact(),
            ))
        }
        VerifyCommand::RmImage { s } => {
            let ok = image_is_rm2(*s)?;
            Ok(Outcome::verdict(ok.to_string(), json!({ "s": s, "verdict": ok }), ok))
        }
        VerifyCommand::BasisIndependence { matrix, layout, cap } => {
            let cap = resolve_cap(cap)?;
            let input = load_matrix(matrix, digest)?;
            let code = LinearCode::new(input.matrix);
            let ok = verify_mapped_basis_independence(&code, *layout, cap)?;
            let k = code.p_dimension();
            Ok(Outcome::verdict(ok.to_string(), json!({ "k": k, "layout": layout.to_string(), "verdict": ok }), ok))
        }
    }
}

fn isometry(args: &IsometryArgs) -> Result<Outcome> {
    let map = build_map(&args.target)?;
    let cap = resolve_cap(&args.cap)?;
    let src = args.weight;
    let dst = args.target_weight.unwrap_or(src);
    let report = verify_isometry(map.as_ref(), args.target.layout, src, dst, args.n, cap)?;
    let mut text = format!("{} pairs, {} violations\n", report.checked_pairs, report.violations.len());
    for v in report.violations.iter().take(MAX_PRINTED_VIOLATIONS) {
        text.push_str(&format!(
            "  d({}, {}) = {} but mapped distance = {}\n",
            join(v.u.entries()),
            join(v.v.entries()),
            v.source,
            v.target
        ));
    }
    let result = json!({
        "map": map.label(),
        "weight": src.name(),
        "target_weight": dst.name(),
        "n": args.n,
        "checked_pairs": report.checked_pairs,
        "violation_count": report.violations.len(),
        "verdict": report.verdict,
    });
    let mut out = Outcome::verdict(text, result, report.verdict);
    out.violations = report
        .violations
        .iter()
        .take(MAX_LISTED_VIOLATIONS)
        .map(|v| {
            json!({ "u": v.u.entries(), "v": v.v.entries(), "source": weight_json(v.source), "target": weight_json(v.target) })
        })
        .collect();
    if report.violations.len() > MAX_LISTED_VIOLATIONS {
        out = out.with_note(format!("only the first {MAX_LISTED_VIOLATIONS} violations are listed"));
    }
    if args.target.map.kind() == MapKind::Xi {
        out = out.with_note("xi is not claimed to be an isometry; this result is empirical");
    }
    Ok(out)
}

pub fn code(args: &CodeArgs, digest: &mut InputDigest) -> Result<Outcome> {
    let input = load_matrix(&args.matrix, digest)?;
    let code = LinearCode::new(input.matrix);
    let cap = resolve_cap(&args.cap)?;
    let out = match args.op {
        CodeOp::StandardForm => {
            let sf = code.standard_form();
            let text = format!(
                "profile {}\npermutation {}\n{}",
                join(sf.profile()),
                join(sf.permutation()),
                write_matrix(sf.matrix())
            );
            Outcome::new(
                text,
                json!({ "profile": sf.profile(), "permutation": sf.permutation(), "matrix": rows_json(sf.matrix()) }),
            )
        }
        CodeOp::Dual => {
            let dual = code.dual();
            Outcome::new(
                write_matrix(dual.generator()),
                json!({ "profile": dual.standard_form().profile(), "matrix": rows_json(dual.generator()) }),
            )
        }
        CodeOp::Enumerate => match args.weight {
            Some(kind) => {
                let e = code.weight_enumerator(kind, cap)?;
                let entries: Vec<Value> = e.entries().into_iter().map(|(w, c)| json!([weight_json(w), c])).collect();
                Outcome::new(e.to_string(), json!({ "weight": kind.name(), "distribution": entries }))
            }
            None => {
                let mut words: Vec<Vec<u64>> = code.codewords(cap)?.into_iter().map(RingVector::into_entries).collect();
                words.sort();
                let text: String = words.iter().map(|w| join(w) + "\n").collect();
                Outcome::new(text, json!({ "count": words.len(), "codewords": words }))
            }
        },
        CodeOp::MinDistance => {
            let kinds = match args.weight {
                Some(k) => vec![k],
                None => WeightKind::ALL.to_vec(),
            };
            let mins = code.min_weights(&kinds, cap)?;
            let text = if args.weight.is_some() {
                mins[0].1.to_string()
            } else {
                mins.iter().map(|(k, w)| format!("{}: {w}\n", k.name())).collect()
            };
            let result: serde_json::Map<String, Value> =
                mins.iter().map(|(k, w)| (k.name().to_string(), weight_json(*w))).collect();
            Outcome::new(text, Value::Object(result))
        }
        CodeOp::Cardinality => {
            let c = code.cardinality().ok_or_else(|| anyhow!("cardinality does not fit in 128 bits"))?;
            Outcome::new(c.to_string(), json!({ "cardinality": big_json(c), "k": code.p_dimension() }))
        }
        CodeOp::SelfOrthogonal => {
            let so = code.is_self_orthogonal();
            let sd = code.is_self_dual();
            Outcome::verdict(
                format!("self-orthogonal: {so}\nself-dual: {sd}"),
                json!({ "self_orthogonal": so, "self_dual": sd }),
                so,
            )
        }
        CodeOp::PBasis => {
            let basis = code.p_basis();
            Outcome::new(
                format!("k {}\n{}", basis.k(), write_matrix(basis.rows())),
                json!({ "k": basis.k(), "rows": rows_json(basis.rows()) }),
            )
        }
    };
    Ok(out)
}

pub fn fixtures(cmd: &FixturesCommand) -> Result<Outcome> {
    match cmd {
        FixturesCommand::List => {
            let mut text = String::new();
            let mut items = Vec::new();
            for name in catalog::list_fixtures() {
                let f = get_fixture(name)?;
                text.push_str(&format!("{}\t{}\t{}\t{}\n", f.name, f.kind, f.ring, f.provenance));
                items.push(json!({
                    "name": f.name,
                    "kind": f.kind.to_string(),
                    "ring": f.ring.to_string(),
                    "provenance": f.provenance,
                    "note": f.note,
                }));
            }
            Ok(Outcome::new(text, json!(items)))
        }
        FixturesCommand::Show { name } => {
            let f = get_fixture(name)?;
            let body = f.serialize();
            let mut out = Outcome::new(body.clone(), json!({ "name": f.name, "kind": f.kind.to_string(), "text": body }));
            if let Some(note) = f.note {
                out = out.with_note(note);
            }
            Ok(out)
        }
    }
}

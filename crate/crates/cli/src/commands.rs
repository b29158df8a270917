use std::fs;

use quivermod::io::{dim_to_json, parse_dim, parse_pair, parse_quiver};
use quivermod::{
    build_tilting_pair, candecomp_kronecker, classify, corpus, moduli_report, rationality_flags, reduction_tower,
    roundtrip_trials, CanDecomp, Decomposer, DimVec, Error, Field, GenericExt, PrimeField, Quiver, RootClass,
};
use serde_json::{json, Map, Value};

use crate::{OracleArgs, Report, Settings, Target};

fn input(msg: impl Into<String>) -> Error {
    Error::Input(msg.into())
}

fn load(target: &Target) -> Result<(Quiver, DimVec, Map<String, Value>), Error> {
    let text = fs::read_to_string(&target.quiver)
        .map_err(|e| input(format!("cannot read {}: {e}", target.quiver.display())))?;
    let q = parse_quiver(&text)?;
    let alpha = parse_dim(&q, &target.dim)?;
    let mut config = Map::new();
    config.insert("quiver".into(), json!(target.quiver.display().to_string()));
    config.insert("dim".into(), dim_to_json(&q, &alpha));
    Ok((q, alpha, config))
}

fn report(config: Map<String, Value>, result: Value) -> Result<Report, Error> {
    Ok(Report { config, result, failed: false })
}

pub fn blocks_json(q: &Quiver, d: &CanDecomp) -> Value {
    Value::Array(
        d.blocks()
            .iter()
            .map(|b| json!({ "root": dim_to_json(q, &b.root), "mult": b.mult, "class": b.class.as_str() }))
            .collect(),
    )
}

/// Exhaustive decomposition; quivers with oriented cycles go through their
/// double, where the search runs on the lifted vector.
pub fn oracle_decomposition(q: &Quiver, alpha: &DimVec, max_total: i64) -> Result<CanDecomp, Error> {
    if alpha.total() > max_total {
        return Err(Error::Resource(format!("total dimension {} exceeds the oracle cap {max_total}", alpha.total())));
    }
    if q.is_acyclic() {
        return GenericExt::new(q.clone()).candecomp_oracle(alpha, max_total);
    }
    let (dq, _) = q.double();
    let lifted = q.lift_dimvec(alpha)?;
    GenericExt::new(dq).candecomp_oracle(&lifted, lifted.total())?.map_roots(q, |r| q.pull_back_dimvec(r))
}

fn decomposition(
    q: &Quiver,
    alpha: &DimVec,
    o: &OracleArgs,
    config: &mut Map<String, Value>,
) -> Result<CanDecomp, Error> {
    config.insert("algorithm".into(), json!(if o.oracle { "oracle" } else { "fast" }));
    if o.oracle {
        config.insert("max_total".into(), json!(o.max_total));
        oracle_decomposition(q, alpha, o.max_total)
    } else {
        Decomposer::new(q.clone()).canonical_decomposition(alpha)
    }
}

pub fn euler(target: &Target, other: Option<&str>) -> Result<Report, Error> {
    let (q, alpha, mut config) = load(target)?;
    let beta = match other {
        Some(text) => parse_dim(&q, text)?,
        None => alpha.clone(),
    };
    config.insert("other".into(), dim_to_json(&q, &beta));
    report(
        config,
        json!({
            "euler": q.euler_form(&alpha, &beta)?,
            "euler_reversed": q.euler_form(&beta, &alpha)?,
            "kac": q.kac_form(&alpha, &beta)?,
        }),
    )
}

pub fn reflect(target: &Target, vertex: &str) -> Result<Report, Error> {
    let (q, alpha, mut config) = load(target)?;
    let v = q.vertex_index(vertex).ok_or_else(|| input(format!("unknown vertex `{vertex}`")))?;
    config.insert("vertex".into(), json!(vertex));
    let reflected = q.reflect(v, &alpha)?;
    report(config, json!({ "reflected": dim_to_json(&q, &reflected), "fundamental": q.is_fundamental(&alpha).ok() }))
}

pub fn schur(target: &Target, o: &OracleArgs) -> Result<Report, Error> {
    let (q, alpha, mut config) = load(target)?;
    if alpha.is_zero() {
        return Err(input("the zero vector is not a root"));
    }
    let d = decomposition(&q, &alpha, o, &mut config)?;
    let schur = d.is_single_schur();
    let class = if schur { Some(RootClass::of(&q, &alpha)?.as_str()) } else { None };
    report(config, json!({ "schur": schur, "class": class, "decomposition": blocks_json(&q, &d) }))
}

pub fn candecomp(target: &Target, o: &OracleArgs) -> Result<Report, Error> {
    let (q, alpha, mut config) = load(target)?;
    let d = decomposition(&q, &alpha, o, &mut config)?;
    report(config, json!({ "blocks": blocks_json(&q, &d), "schur": d.is_single_schur() }))
}

pub fn kronecker(n: u64, dim: &str) -> Result<Report, Error> {
    let alpha = parse_pair(dim)?;
    let class = classify(n, &alpha)?;
    let d = candecomp_kronecker(n, &alpha)?;
    let q = corpus::kronecker(n as usize);
    let mut config = Map::new();
    config.insert("n".into(), json!(n));
    config.insert("dim".into(), dim_to_json(&q, &alpha));
    let mut result = match serde_json::to_value(&class).expect("serializes") {
        Value::Object(m) => m,
        _ => unreachable!("classes serialize as objects"),
    };
    let word = result.remove("word").unwrap_or(Value::Null);
    result.insert("reflection_word".into(), word);
    result.insert("candecomp".into(), blocks_json(&q, &d));
    report(config, Value::Object(result))
}

pub fn moduli(target: &Target) -> Result<Report, Error> {
    let (q, alpha, config) = load(target)?;
    let r = moduli_report(&Decomposer::new(q), &alpha)?;
    report(config, serde_json::to_value(&r).expect("serializes"))
}

pub fn tower(target: &Target) -> Result<Report, Error> {
    let (q, alpha, config) = load(target)?;
    let t = reduction_tower(&Decomposer::new(q), &alpha)?;
    report(config, serde_json::to_value(&t).expect("serializes"))
}

pub fn normalform(target: &Target, trials: usize, s: &Settings) -> Result<Report, Error> {
    let (q, alpha, mut config) = load(target)?;
    config.insert("seed".into(), json!(s.seed));
    config.insert("field_prime".into(), json!(s.field_prime));
    config.insert("trials".into(), json!(trials));
    let f = PrimeField::new(s.field_prime)?;
    let (src, tgt, n) = q
        .kronecker_shape()
        .ok_or_else(|| input("normalform needs a generalized Kronecker quiver (two vertices, arrows one way)"))?;
    let (a, b) = (alpha[src], alpha[tgt]);
    if a == 0 && b == 0 {
        return Err(input("the zero vector is not a root"));
    }
    if !Decomposer::new(q.clone()).is_schur(&alpha)? {
        return Err(input(format!("{alpha:?} is not a Schur root")));
    }
    let h = alpha.gcd();
    let (x, y) = (a / h as i64, b / h as i64);
    // Representations with a > b are handled through the opposite quiver.
    let dualized = x > y;
    let root = if dualized { DimVec::from([y, x]) } else { DimVec::from([x, y]) };
    let tp = build_tilting_pair(n as u64, &root, s.seed, &f)?;
    let rt = roundtrip_trials(&tp, h as usize, s.seed, trials)?;
    let matrices: Vec<Value> = rt
        .normal_forms
        .first()
        .map(|forms| {
            forms
                .iter()
                .map(|m| {
                    Value::Array(
                        m.row_vecs()
                            .iter()
                            .map(|row| Value::Array(row.iter().map(|e| f.elem_to_json(e)).collect()))
                            .collect(),
                    )
                })
                .collect()
        })
        .unwrap_or_default();
    report(
        config,
        json!({
            "h": h,
            "p": tp.p,
            "flags": serde_json::to_value(rationality_flags(h)).expect("serializes"),
            "dualized": dualized,
            "root": root,
            "perp": tp.cd,
            "tilting": { "dim_t": tp.t.dims(), "attempts": tp.attempts, "failures": tp.failures },
            "roundtrip": { "trials": rt.trials, "successes": rt.successes, "failures": rt.failures },
            "matrices": matrices,
        }),
    )
}

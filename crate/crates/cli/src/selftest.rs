//! Quick corpus checks, reported as a pass/fail table on stderr and as JSON.

use quivermod::{
    build_tilting_pair, candecomp_kronecker, corpus, rationality_flags, roundtrip_trials, Decomposer, DimVec, Error,
    PrimeField, Rationality,
};
use serde_json::{json, Map};

use crate::commands::oracle_decomposition;
use crate::{Report, Settings};

type Check = Result<String, String>;

fn vectors(len: usize, max_total: i64) -> Vec<DimVec> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                let used: i64 = p.iter().sum();
                (0..=max_total - used).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(DimVec::new).filter(|a| !a.is_zero()).collect()
}

fn err(e: Error) -> String {
    e.to_string()
}

fn oracle_agreement() -> Check {
    let mut n = 0;
    for (name, q) in corpus::all() {
        let dec = Decomposer::new(q.clone());
        for alpha in vectors(q.vertex_count(), 4) {
            let fast = dec.canonical_decomposition(&alpha).map_err(err)?;
            let slow = oracle_decomposition(&q, &alpha, 24).map_err(err)?;
            if fast != slow {
                return Err(format!("{name} {alpha:?}: {fast} vs {slow}"));
            }
            n += 1;
        }
    }
    Ok(format!("{n} vectors"))
}

fn kronecker_agreement() -> Check {
    let mut n = 0;
    for arrows in 1..=4u64 {
        let q = corpus::kronecker(arrows as usize);
        for alpha in vectors(2, 10) {
            let fast = candecomp_kronecker(arrows, &alpha).map_err(err)?;
            let slow = oracle_decomposition(&q, &alpha, 24).map_err(err)?;
            if fast != slow {
                return Err(format!("Q({arrows}) {alpha:?}: {fast} vs {slow}"));
            }
            n += 1;
        }
    }
    Ok(format!("{n} vectors"))
}

fn tilting(seed: u64, f: &PrimeField) -> Check {
    let tp = build_tilting_pair(3, &DimVec::from([1, 1]), seed, f).map_err(err)?;
    if tp.p != 2 || tp.t.dims() != &DimVec::from([5, 11]) || tp.hom_st.len() != 3 {
        return Err(format!("p = {}, dim T = {:?}", tp.p, tp.t.dims()));
    }
    let rt = roundtrip_trials(&tp, 2, seed, 3).map_err(err)?;
    if rt.successes < 3 {
        return Err(format!("{}/3 round trips", rt.successes));
    }
    Ok("p = 2, dim T = (5,11), 3/3 round trips".into())
}

fn rationality() -> Check {
    let unknown: Vec<u64> = (1..=10).filter(|&h| rationality_flags(h) == [Rationality::Unknown]).collect();
    if unknown != [8, 9] {
        return Err(format!("unknown verdicts at {unknown:?}"));
    }
    Ok("h = 1..10".into())
}

pub fn run(s: &Settings) -> Result<Report, Error> {
    let f = PrimeField::new(s.field_prime)?;
    let checks: Vec<(&str, Check)> = vec![
        ("fast decomposition matches the exhaustive search", oracle_agreement()),
        ("Kronecker classification matches the exhaustive search", kronecker_agreement()),
        ("tilting pair and round trip on Q(3), (1,1)", tilting(s.seed, &f)),
        ("rationality verdicts", rationality()),
    ];
    let mut rows = Vec::new();
    let mut failed = false;
    for (name, outcome) in &checks {
        let (passed, detail) = match outcome {
            Ok(d) => (true, d.clone()),
            Err(d) => (false, d.clone()),
        };
        failed |= !passed;
        eprintln!("{}  {name}: {detail}", if passed { "PASS" } else { "FAIL" });
        rows.push(json!({ "name": name, "passed": passed, "detail": detail }));
    }
    let mut config = Map::new();
    config.insert("seed".into(), json!(s.seed));
    config.insert("field_prime".into(), json!(s.field_prime));
    Ok(Report { config, result: json!({ "passed": !failed, "checks": rows }), failed })
}

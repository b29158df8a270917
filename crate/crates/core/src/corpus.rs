//! Small named quivers used throughout the tests, benches and CLI self-test.

use crate::quiver::Quiver;

fn build(vertices: &[&str], arrows: &[(String, &str, &str)]) -> Quiver {
    let arrows: Vec<(&str, &str, &str)> = arrows.iter().map(|(a, s, t)| (a.as_str(), *s, *t)).collect();
    Quiver::new(vertices, &arrows).expect("corpus quivers are well formed")
}

/// `v -> w`.
pub fn a2() -> Quiver {
    build(&["v", "w"], &[("a".into(), "v", "w")])
}

/// Linear orientation `u -> v -> w`.
pub fn a3() -> Quiver {
    build(&["u", "v", "w"], &[("a".into(), "u", "v"), ("b".into(), "v", "w")])
}

/// `u -> v <- w`.
pub fn a3_sink() -> Quiver {
    build(&["u", "v", "w"], &[("a".into(), "u", "v"), ("b".into(), "w", "v")])
}

/// `u <- v -> w`.
pub fn a3_source() -> Quiver {
    build(&["u", "v", "w"], &[("a".into(), "v", "u"), ("b".into(), "v", "w")])
}

/// Three outer vertices mapping into a central one.
pub fn d4_subspace() -> Quiver {
    build(&["x1", "x2", "x3", "c"], &[("a1".into(), "x1", "c"), ("a2".into(), "x2", "c"), ("a3".into(), "x3", "c")])
}

/// The generalized Kronecker quiver: `n` parallel arrows `a0..` from `v` to `w`.
pub fn kronecker(n: usize) -> Quiver {
    let arrows: Vec<(String, &str, &str)> = (0..n).map(|i| (format!("a{i}"), "v", "w")).collect();
    build(&["v", "w"], &arrows)
}

/// Oriented 3-cycle `u -> v -> w -> u`.
pub fn triangle() -> Quiver {
    build(&["u", "v", "w"], &[("a".into(), "u", "v"), ("b".into(), "v", "w"), ("c".into(), "w", "u")])
}

/// One vertex with `k` 1-cycles.
pub fn loops(k: usize) -> Quiver {
    let arrows: Vec<(String, &str, &str)> = (0..k).map(|i| (format!("l{i}"), "v", "v")).collect();
    build(&["v"], &arrows)
}

/// Two vertices `x`, `y`: `p` loops at `x`, `t` arrows `x -> y`, `q` loops at `y`.
pub fn q_ptq(p: usize, t: usize, q: usize) -> Quiver {
    let mut arrows: Vec<(String, &str, &str)> = Vec::new();
    arrows.extend((0..p).map(|i| (format!("l{i}"), "x", "x")));
    arrows.extend((0..t).map(|i| (format!("a{i}"), "x", "y")));
    arrows.extend((0..q).map(|i| (format!("m{i}"), "y", "y")));
    build(&["x", "y"], &arrows)
}

/// The full named corpus, in a fixed order.
pub fn all() -> Vec<(String, Quiver)> {
    let mut out = vec![
        ("A2".to_string(), a2()),
        ("A3".to_string(), a3()),
        ("A3-sink".to_string(), a3_sink()),
        ("A3-source".to_string(), a3_source()),
        ("D4".to_string(), d4_subspace()),
    ];
    for n in 1..=4 {
        out.push((format!("Q({n})"), kronecker(n)));
    }
    out.push(("triangle".to_string(), triangle()));
    out.push(("1-loop".to_string(), loops(1)));
    out.push(("2-loop".to_string(), loops(2)));
    out.push(("Q(1,1,1)".to_string(), q_ptq(1, 1, 1)));
    out.push(("Q(0,1,2)".to_string(), q_ptq(0, 1, 2)));
    out
}

//! JSON views of core results. Object keys serialize in sorted order, so
//! reports are byte-stable.

use momentangle_core::cluster::{
    to_f64, ComultReport, Failure as SampleFailure, HomotopyReport, LambdaWitness, QPoint, Rational, SuspensionPoint,
};
use momentangle_core::golod::{NullCertificate, Outcome, PairReport, TheoremVerdict};
use momentangle_core::hochster::{HochsterSummand, PoincareSeries, WedgeModel};
use momentangle_core::homology::{ConnectivityCertificate, Connectivity, HomologyGroup, InducedMap};
use momentangle_core::{Integer, SimplicialComplex, VertexSet};
use serde_json::{json, Map, Value};

pub const SCHEMA: u64 = 1;

pub fn vset(s: VertexSet) -> Value {
    Value::from(s.to_vec())
}

pub fn integer(x: &Integer) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(x.to_string()),
    }
}

fn rational(q: &Rational) -> Value {
    Value::from(q.to_string())
}

fn rationals(v: &[Rational]) -> Value {
    Value::from(v.iter().map(|q| q.to_string()).collect::<Vec<_>>())
}

pub fn group(g: &HomologyGroup) -> Value {
    json!({
        "free": g.free_rank,
        "torsion": g.torsion.iter().map(integer).collect::<Vec<_>>(),
    })
}

fn connectivity(c: &ConnectivityCertificate) -> Value {
    let value = match c.connectivity {
        Connectivity::Finite(v) => Value::from(v),
        Connectivity::Infinite => Value::from("inf"),
    };
    json!({
        "value": value,
        "topological": c.basis == momentangle_core::homology::CertificateBasis::Topological,
        "neighbourly_bound": c.neighbourly_bound,
    })
}

pub fn complex_summary(k: &SimplicialComplex, homology: &[HomologyGroup], conn: &ConnectivityCertificate) -> Value {
    let mut reduced = Map::new();
    for g in homology.iter().filter(|g| !g.is_zero()) {
        reduced.insert(g.degree.to_string(), group(g));
    }
    json!({
        "n": k.n(),
        "ground": vset(k.ground()),
        "dim": k.dim(),
        "f_vector": k.f_vector(),
        "facets": k.facets().iter().map(|f| vset(*f)).collect::<Vec<_>>(),
        "neighbourliness": k.neighbourliness(),
        "n3_neighbourly": k.is_n3_neighbourly(),
        "minimal_non_faces": k.minimal_non_faces().into_iter().map(vset).collect::<Vec<_>>(),
        "simplex": k.is_simplex(),
        "cone_apex": k.is_cone(),
        "reduced_homology_Z": Value::Object(reduced),
        "connectivity": connectivity(conn),
    })
}

pub fn series(s: &PoincareSeries) -> Value {
    let mut m = Map::new();
    for (d, r) in s.terms() {
        m.insert(d.to_string(), Value::from(r));
    }
    Value::Object(m)
}

fn degree_groups(groups: &[(usize, HomologyGroup)]) -> Value {
    let mut m = Map::new();
    for (d, g) in groups {
        m.insert(d.to_string(), group(g));
    }
    Value::Object(m)
}

pub fn summands(decomposition: &[HochsterSummand]) -> Value {
    decomposition
        .iter()
        .map(|s| json!({ "I": vset(s.subset), "degrees": degree_groups(&s.groups) }))
        .collect()
}

pub fn wedge(w: &WedgeModel) -> Value {
    let summands: Vec<Value> = w
        .summands
        .iter()
        .map(|s| {
            json!({
                "I": vset(s.subset),
                "suspensions": s.suspensions,
                "degrees": degree_groups(&s.groups),
                "spheres": s.spheres.map(|(d, c)| json!({ "dim": d, "count": c })),
            })
        })
        .collect();
    json!({
        "sphere_wedge": w.is_sphere_wedge(),
        "series": series(&w.series()),
        "summands": summands,
    })
}

pub fn certificate(c: &NullCertificate) -> Value {
    match c {
        NullCertificate::Null(r) => json!({ "kind": "null", "reason": r.to_string() }),
        NullCertificate::NotNull(o) => {
            json!({ "kind": "not-null", "coeffs": o.coeffs.to_string(), "degree": o.degree })
        }
        NullCertificate::Unknown => json!({ "kind": "unknown" }),
    }
}

pub fn induced(m: &InducedMap) -> Value {
    let degrees: Vec<Value> = m
        .degrees
        .iter()
        .filter(|d| !d.is_zero)
        .map(|d| {
            json!({
                "degree": d.degree,
                "domain": group(&d.domain),
                "codomain": group(&d.codomain),
                "matrix": d.matrix.iter().map(|row| row.iter().map(integer).collect::<Vec<_>>()).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "coeffs": m.coeffs.to_string(), "zero": m.is_zero(), "nonzero_degrees": degrees })
}

pub fn pair_report(r: &PairReport) -> Value {
    json!({
        "I": vset(r.i),
        "J": vset(r.j),
        "certificate": certificate(&r.certificate),
        "induced": r.induced.iter().map(induced).collect::<Vec<_>>(),
    })
}

pub fn verdict(v: &TheoremVerdict, n: usize, all_pairs: bool) -> Value {
    let mut counts = Map::new();
    for c in &v.certificates {
        let key = match &c.certificate {
            NullCertificate::Null(r) => r.to_string(),
            NullCertificate::NotNull(_) => "not-null".to_string(),
            NullCertificate::Unknown => "unknown".to_string(),
        };
        let e = counts.entry(key).or_insert(Value::from(0u64));
        *e = Value::from(e.as_u64().unwrap_or(0) + 1);
    }
    let trivial = |c: &NullCertificate| {
        matches!(c, NullCertificate::Null(momentangle_core::golod::NullReason::TargetContractible))
    };
    let pairs: Vec<Value> = v
        .certificates
        .iter()
        .filter(|c| all_pairs || !trivial(&c.certificate))
        .map(|c| json!({ "I": vset(c.i), "J": vset(c.j), "certificate": certificate(&c.certificate) }))
        .collect();
    let (name, witness, wedge_model, unknown) = match &v.outcome {
        Outcome::CoH(w) => ("CoH", Value::Null, wedge(w), Value::Null),
        Outcome::NotCoH(p) => ("NotCoH", pair_report(p), Value::Null, Value::Null),
        Outcome::Inconclusive(u) => (
            "Inconclusive",
            Value::Null,
            Value::Null,
            u.iter().map(|(i, j)| json!([vset(*i), vset(*j)])).collect(),
        ),
    };
    json!({
        "verdict": name,
        "hypothesis": {
            "holds": v.hypothesis_holds,
            "neighbourliness": v.neighbourliness,
            "required": n / 3,
        },
        "certificates": {
            "examined": v.certificates.len(),
            "counts": Value::Object(counts),
            "pairs": pairs,
            "pairs_listed": if all_pairs { "all" } else { "non-trivial" },
        },
        "witness": witness,
        "wedge": wedge_model,
        "unknown_pairs": unknown,
    })
}

fn failures<P>(fs: &[SampleFailure<P>], point: impl Fn(&P) -> Value) -> Value {
    fs.iter()
        .map(|f| json!({ "sample": f.index, "point": point(&f.point), "check": f.check }))
        .collect()
}

pub fn suspension_point(p: &SuspensionPoint) -> Value {
    json!({ "t": rationals(&p.t), "x": rationals(p.x.coords()) })
}

pub fn q_point(p: &QPoint) -> Value {
    match p {
        QPoint::Basepoint => Value::from("*"),
        QPoint::Point { s, y, x } => json!({ "s": rational(s), "y": rationals(y), "x": rationals(x.coords()) }),
    }
}

pub fn comult(r: &ComultReport) -> Value {
    json!({
        "n": r.n,
        "samples": r.samples,
        "in_A": r.in_a,
        "checks": r.checks,
        "failures": r.failure_count,
        "stored_failures": failures(&r.failures, |y| rationals(y)),
        "passed": r.passed(),
    })
}

pub fn homotopy(r: &HomotopyReport) -> Value {
    json!({
        "samples": r.samples,
        "in_A": r.in_a,
        "checks": r.checks,
        "max_error": rational(&r.max_error),
        "max_error_approx": to_f64(&r.max_error),
        "failures": r.failure_count,
        "stored_failures": failures(&r.failures, suspension_point),
        "passed": r.passed(),
    })
}

pub fn lambda_witness(w: &LambdaWitness) -> Value {
    json!({
        "sample": w.index,
        "I": vset(w.i),
        "J": vset(w.j),
        "point": suspension_point(&w.point),
        "message": w.message,
    })
}

//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use momentangle_core::cluster::{
    default_tolerance, eval_lambda, verify_comult, verify_homotopy, Rational, SmashPoint, SuspensionPoint,
};
use momentangle_core::complex::{
    boundary_simplex, random_complex, simplex, single_missing_face, SimplicialComplex, VertexSet,
};
use momentangle_core::golod::{theorem_verdict, NullCertificate, Outcome};
use momentangle_core::hochster::{koszul_degree_bound, koszul_oracle, poincare_series, PoincareSeries};
use momentangle_core::homology::{reduced_homology, reduced_homology_all};
use momentangle_core::linalg::{rank, smith_normal_form, Coeffs, EuclideanRing, Integer, Integers, SparseIntMatrix, SparseMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Check {
    passed: bool,
    detail: String,
}

fn verdict(passed: bool, detail: impl Into<String>) -> Check {
    Check { passed, detail: detail.into() }
}

const FIELDS: [Coeffs; 3] = [Coeffs::Rationals, Coeffs::Prime(2), Coeffs::Prime(3)];

/// Every complex on `[n]` (ghost vertices allowed), by brute force over
/// families of subsets.
fn all_complexes(n: usize) -> Vec<SimplicialComplex> {
    let subsets = 1usize << n;
    let mut out = Vec::new();
    for family in 0u64..(1u64 << subsets) {
        if family & 1 == 0 {
            continue;
        }
        let closed = (0..subsets)
            .filter(|s| family >> s & 1 == 1)
            .all(|s| (0..n).all(|b| s >> b & 1 == 0 || family >> (s ^ (1 << b)) & 1 == 1));
        if !closed {
            continue;
        }
        let faces = (0..subsets)
            .filter(|s| family >> s & 1 == 1)
            .map(|s| VertexSet::from_bits((s as u64) << 1));
        out.push(SimplicialComplex::from_faces(n, VertexSet::full(n), faces));
    }
    out
}

fn hochster_corpus() -> Vec<SimplicialComplex> {
    let mut corpus: Vec<SimplicialComplex> = (1..=4).flat_map(all_complexes).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(500);
    let mut seed = 0;
    while corpus.len() < 500 {
        let n = if corpus.len().is_multiple_of(2) { 5 } else { 6 };
        let k = rng.gen_range(0..=n);
        let density = rng.gen_range(0.0..1.0);
        seed += 1;
        corpus.push(random_complex(n, k, density, seed).unwrap());
    }
    corpus
}

fn criterion_1(corpus: &[SimplicialComplex]) -> Check {
    let exhaustive = corpus.iter().filter(|k| k.n() <= 4).count();
    let mut mismatches = Vec::new();
    for (idx, k) in corpus.iter().enumerate() {
        for field in FIELDS {
            let bound = koszul_degree_bound(k);
            let ok = match (poincare_series(k, field), koszul_oracle(k, field, bound)) {
                (Ok(a), Ok(b)) => a == b,
                _ => false,
            };
            if !ok {
                mismatches.push(format!("#{idx} over {field}"));
            }
        }
    }
    verdict(
        mismatches.is_empty(),
        format!(
            "{} complexes ({exhaustive} exhaustive for n <= 4), {} mismatches {:?}",
            corpus.len(),
            mismatches.len(),
            mismatches.iter().take(5).collect::<Vec<_>>()
        ),
    )
}

fn series(terms: &[(usize, u64)]) -> PoincareSeries {
    let mut s = PoincareSeries::default();
    for &(d, r) in terms {
        s.add(d, r);
    }
    s
}

fn cycle4() -> SimplicialComplex {
    SimplicialComplex::new(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]]).unwrap()
}

fn criterion_2() -> Check {
    let cases: Vec<(&str, SimplicialComplex, PoincareSeries)> = vec![
        ("boundary of a triangle", boundary_simplex(3).unwrap(), series(&[(0, 1), (5, 1)])),
        ("two points", boundary_simplex(2).unwrap(), series(&[(0, 1), (3, 1)])),
        ("4-cycle", cycle4(), series(&[(0, 1), (3, 2), (6, 1)])),
        ("simplex on 1", simplex(1).unwrap(), PoincareSeries::one()),
        ("simplex on 3", simplex(3).unwrap(), PoincareSeries::one()),
        ("simplex on 6", simplex(6).unwrap(), PoincareSeries::one()),
    ];
    let mut bad = Vec::new();
    let mut slowest = Duration::ZERO;
    for (name, k, expected) in &cases {
        for field in FIELDS {
            let start = Instant::now();
            let got = poincare_series(k, field);
            slowest = slowest.max(start.elapsed());
            if got.as_ref() != Ok(expected) {
                bad.push(format!("{name} over {field}"));
            }
        }
    }
    let fast = slowest < Duration::from_secs(1);
    verdict(
        bad.is_empty() && fast,
        format!("{} cases, slowest {slowest:?}, mismatches {bad:?}", cases.len()),
    )
}

fn criterion_3() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut bad = Vec::new();
    for trial in 0..100 {
        let n1 = rng.gen_range(1..=8);
        let n2 = rng.gen_range(1..=(10 - n1));
        let k = random_complex(n1, rng.gen_range(0..=n1), rng.gen_range(0.0..1.0), rng.gen()).unwrap();
        let l = random_complex(n2, rng.gen_range(0..=n2), rng.gen_range(0.0..1.0), rng.gen()).unwrap();
        let joined = k.join_shifted(&l).unwrap();
        for field in [Coeffs::Rationals, Coeffs::Prime(2)] {
            let lhs = poincare_series(&joined, field).unwrap();
            let rhs = poincare_series(&k, field).unwrap().mul(&poincare_series(&l, field).unwrap());
            if lhs != rhs {
                bad.push(format!("trial {trial} over {field}"));
            }
        }
    }
    verdict(bad.is_empty(), format!("100 joins, mismatches {bad:?}"))
}

fn matrix_rank(m: &[Vec<Integer>]) -> usize {
    let dense: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|x| x.to_i64().unwrap()).collect()).collect();
    rank(&SparseIntMatrix::from_i64_dense(&dense), Coeffs::Rationals).unwrap()
}

/// Soundness: a CoH verdict never coexists with a NotNull certificate.
fn sound(k: &SimplicialComplex) -> Result<(), String> {
    let v = theorem_verdict(k).map_err(|e| e.to_string())?;
    let not_null = v.count(NullCertificate::is_not_null);
    match v.outcome {
        Outcome::CoH(_) if not_null > 0 => Err(format!("CoH with {not_null} not-null pairs")),
        Outcome::NotCoH(ref p) if !p.certificate.is_not_null() => Err("NotCoH without a witness".to_string()),
        _ => Ok(()),
    }
}

fn criterion_4(corpus: &[SimplicialComplex]) -> Check {
    let mut problems = Vec::new();

    // (a)
    match theorem_verdict(&cycle4()) {
        Ok(v) => match v.outcome {
            Outcome::NotCoH(p) => {
                let ranks: Vec<usize> = p
                    .induced
                    .iter()
                    .flat_map(|m| m.degrees.iter().filter(|d| !d.is_zero))
                    .map(|d| matrix_rank(&d.matrix))
                    .collect();
                if !ranks.contains(&1) {
                    problems.push(format!("(a) witness ranks {ranks:?}"));
                }
            }
            _ => problems.push("(a) 4-cycle not NotCoH".to_string()),
        },
        Err(e) => problems.push(format!("(a) {e}")),
    }

    // (b)
    let mut single = 0;
    for (n, faces) in [
        (6, vec![vec![1, 2, 3], vec![2, 4, 5, 6], vec![1, 2, 3, 4, 5, 6]]),
        (9, vec![vec![1, 2, 3, 4], vec![3, 5, 7, 8, 9], vec![1, 2, 3, 4, 5, 6, 7, 8, 9]]),
    ] {
        for face in faces {
            let sigma = VertexSet::from_vertices(face.iter().copied(), n).unwrap();
            let k = single_missing_face(n, sigma).unwrap();
            let expected = series(&[(0, 1), (2 * face.len() - 1, 1)]);
            match theorem_verdict(&k).map(|v| v.outcome) {
                Ok(Outcome::CoH(w)) if w.series() == expected && w.is_sphere_wedge() => single += 1,
                other => problems.push(format!("(b) n={n} {face:?}: {:?}", other.map(|o| matches!(o, Outcome::CoH(_))))),
            }
            if let Err(e) = sound(&k) {
                problems.push(format!("(d) single non-face: {e}"));
            }
        }
    }

    // (c)
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut coh = 0;
    for trial in 0..50 {
        let n = rng.gen_range(4..=12);
        let k = random_complex(n, n / 2, rng.gen_range(0.0..0.5), rng.gen()).unwrap();
        match theorem_verdict(&k) {
            Ok(v) if matches!(v.outcome, Outcome::CoH(_)) => coh += 1,
            Ok(_) => problems.push(format!("(c) trial {trial} n={n} not CoH")),
            Err(e) => problems.push(format!("(c) trial {trial}: {e}")),
        }
        if let Err(e) = sound(&k) {
            problems.push(format!("(d) trial {trial}: {e}"));
        }
    }

    // (d)
    let mut verdicts = 0;
    for (idx, k) in corpus.iter().enumerate() {
        match sound(k) {
            Ok(()) => verdicts += 1,
            Err(e) => problems.push(format!("(d) corpus #{idx}: {e}")),
        }
    }

    verdict(
        problems.is_empty(),
        format!(
            "4-cycle witness checked, {single}/6 single non-face CoH, {coh}/50 neighbourly CoH, {verdicts} sound verdicts; problems {:?}",
            problems.iter().take(5).collect::<Vec<_>>()
        ),
    )
}

fn criterion_5() -> Check {
    let mut lines = Vec::new();
    let mut ok = true;
    for n in 4..=9 {
        match verify_comult(n, 10_000, n as u64) {
            Ok(r) => {
                ok &= r.passed();
                lines.push(format!("n={n}: {} checks, {} failures", r.checks, r.failure_count));
            }
            Err(e) => {
                ok = false;
                lines.push(format!("n={n}: {e}"));
            }
        }
    }
    verdict(ok, lines.join("; "))
}

fn homotopy_corpus() -> Vec<SimplicialComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    (0..20)
        .map(|i| {
            let n = 4 + i % 3;
            random_complex(n, n / 3, rng.gen_range(0.2..1.0), rng.gen()).unwrap()
        })
        .collect()
}

fn stored_witness() -> Result<bool, String> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/lambda_witness.json");
    let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
    let v: serde_json::Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let n = v["n"].as_u64().ok_or("missing n")? as usize;
    let facets: Vec<Vec<usize>> = serde_json::from_value(v["facets"].clone()).map_err(|e| e.to_string())?;
    let k = SimplicialComplex::new(n, &facets).map_err(|e| e.to_string())?;
    let w = &v["lambda_witness"];
    let set = |key: &str| -> Result<VertexSet, String> {
        let vs: Vec<usize> = serde_json::from_value(w[key].clone()).map_err(|e| e.to_string())?;
        VertexSet::from_vertices(vs, n).map_err(|e| e.to_string())
    };
    let rationals = |key: &str| -> Result<Vec<Rational>, String> {
        let vs: Vec<String> = serde_json::from_value(w[key].clone()).map_err(|e| e.to_string())?;
        vs.iter().map(|s| s.parse::<Rational>().map_err(|e| e.to_string())).collect()
    };
    let x = SmashPoint::new(rationals("x")?).map_err(|e| e.to_string())?;
    let point = SuspensionPoint::new(rationals("t")?, x).map_err(|e| e.to_string())?;
    // the fixture violates the hypothesis, and λ must be caught leaving ΣQ'
    let hypothesis = k.is_n3_neighbourly();
    let failed = eval_lambda(&k, set("I")?, set("J")?, &point, &default_tolerance()).is_err();
    Ok(!hypothesis && failed)
}

fn criterion_6() -> Check {
    let tol = default_tolerance();
    let bound = Rational::new(1.into(), 1_000_000_000.into());
    let mut ok = true;
    let mut failures = 0;
    let mut worst = 0.0f64;
    let corpus = homotopy_corpus();
    for (idx, k) in corpus.iter().enumerate() {
        match verify_homotopy(k, 1000, idx as u64, &tol, &bound) {
            Ok(r) => {
                ok &= r.passed();
                failures += r.failure_count;
                worst = worst.max(momentangle_core::cluster::to_f64(&r.max_error));
            }
            Err(_) => ok = false,
        }
    }
    let witness = stored_witness();
    let witness_ok = witness == Ok(true);
    verdict(
        ok && witness_ok,
        format!(
            "{} complexes, {failures} failures, max suspension error {worst:e}; stored λ witness {}",
            corpus.len(),
            match witness {
                Ok(true) => "fails membership as expected".to_string(),
                Ok(false) => "did not fail".to_string(),
                Err(e) => e,
            }
        ),
    )
}

fn random_matrix(rng: &mut ChaCha8Rng) -> SparseIntMatrix {
    let rows = rng.gen_range(0..=12);
    let cols = rng.gen_range(0..=12);
    let density = rng.gen_range(0.1..0.9);
    let dense: Vec<Vec<i64>> = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| if rng.gen_bool(density) { rng.gen_range(-20..=20) } else { 0 })
                .collect()
        })
        .collect();
    SparseIntMatrix::from_i64_triplets(
        rows,
        cols,
        &dense
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, &v)| (i, j, v)))
            .collect::<Vec<_>>(),
    )
    .unwrap()
}

fn smith_ok(m: &SparseIntMatrix) -> bool {
    let f = smith_normal_form(&Integers, m, true);
    let Some(t) = f.transforms.as_ref() else { return false };
    let d = SparseMatrix::from_triplets(
        &Integers,
        m.rows(),
        m.cols(),
        f.invariant_factors.iter().enumerate().map(|(i, v)| (i, i, v.clone())),
    )
    .unwrap();
    t.u.mul(&Integers, m).mul(&Integers, &t.v) == d
        && t.u.mul(&Integers, &t.u_inv) == SparseMatrix::identity(&Integers, m.rows())
        && t.v.mul(&Integers, &t.v_inv) == SparseMatrix::identity(&Integers, m.cols())
        && f.invariant_factors.windows(2).all(|w| Integers.divides(&w[0], &w[1]))
}

fn rp2() -> SimplicialComplex {
    let f = [
        [1, 2, 3],
        [1, 3, 4],
        [1, 4, 5],
        [1, 5, 6],
        [1, 2, 6],
        [2, 3, 5],
        [2, 4, 5],
        [2, 4, 6],
        [3, 4, 6],
        [3, 5, 6],
    ];
    SimplicialComplex::new(6, &f.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).unwrap()
}

fn criterion_7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let bad = (0..1000).filter(|_| !smith_ok(&random_matrix(&mut rng))).count();
    let k = rp2();
    let h1 = reduced_homology(&k, 1, Coeffs::Integers).unwrap();
    let torsion = h1.free_rank == 0 && h1.torsion == vec![Integer::from(2)];
    let ranks = |c: Coeffs| -> Vec<usize> {
        reduced_homology_all(&k, c).unwrap().iter().map(|g| g.free_rank).collect()
    };
    let (q, f2) = (ranks(Coeffs::Rationals), ranks(Coeffs::Prime(2)));
    let discrepancy = q.iter().all(|&r| r == 0) && f2.iter().sum::<usize>() == 2;
    verdict(
        bad == 0 && torsion && discrepancy,
        format!("1000 matrices, {bad} failures; RP2 H1 torsion {:?}, ranks Q {q:?} F2 {f2:?}", h1.torsion),
    )
}

type Criterion<'a> = (&'static str, Duration, Box<dyn Fn() -> Check + 'a>);

fn main() -> ExitCode {
    let corpus = hochster_corpus();
    let criteria: Vec<Criterion> = vec![
        ("1 hochster matches koszul oracle", Duration::from_secs(600), Box::new(|| criterion_1(&corpus))),
        ("2 named homotopy types", Duration::from_secs(60), Box::new(criterion_2)),
        ("3 join multiplicativity", Duration::from_secs(300), Box::new(criterion_3)),
        ("4 theorem engine", Duration::from_secs(1800), Box::new(|| criterion_4(&corpus))),
        ("5 cluster comultiplication", Duration::from_secs(600), Box::new(criterion_5)),
        ("6 homotopy endpoints", Duration::from_secs(1200), Box::new(criterion_6)),
        ("7 exact linear algebra", Duration::from_secs(120), Box::new(criterion_7)),
    ];
    let mut all = true;
    for (name, limit, run) in &criteria {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let passed = out.passed && elapsed < *limit;
        all &= passed;
        println!(
            "{} criterion {name}: {} [{:.1}s]",
            if passed { "PASS" } else { "FAIL" },
            out.detail,
            elapsed.as_secs_f64()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

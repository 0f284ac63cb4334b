//! Acceptance criteria, one pass/fail line each. Every comparison is exact.

use std::collections::BTreeMap;
use std::time::Instant;

use enbar::barcx::{build_gamma, harrison_complex, HarrisonInput};
use enbar::evalhom::{
    augmentation_check, bar_eval_report, bar_module_complex, bar_module_report, en_homology, en_report,
    evaluate_module, free_commutative_check, harrison_acyclicity_check, harrison_report, stabilization_scan,
    trivial_algebra_check, trivial_multilinear_check, AlgebraDatum, EvalSource, OperadChoice,
};
use enbar::exactlin::{class_generates, uct_consistent, ChainComplex, Ring};
use enbar::lifting::{
    check_cells, check_coderivation, check_projection, check_restriction, check_twisting, cup_cycle, cup_product,
    lift_level, test_composites,
};
use enbar::operads::{encode_simplex, enumerate_en, enumerate_en_simplices, filtration_level};

const Z: Ring = Ring::Integers;
const F2: Ring = Ring::PrimeField(2);
const F3: Ring = Ring::PrimeField(3);
const Q: Ring = Ring::Rationals;

/// `(n, arity bound)` pairs of criteria 1 and 2.
const LEVELS: [(u8, usize); 3] = [(1, 4), (2, 4), (3, 3)];

type Outcome = Result<(), String>;

fn twisting_equation() -> Outcome {
    for ring in [Z, F2] {
        for (n, arity) in LEVELS {
            let alpha = lift_level(n, arity, ring);
            let composites = test_composites(n, arity, 1);
            check_twisting(&alpha, &composites).map_err(|c| format!("{ring} n={n}: {c:?}"))?;
        }
    }
    // every basis element of the finite complexes B^n_{E_n}(r)
    for (n, arity) in [(1u8, 4usize), (2, 3)] {
        for r in 1..=arity {
            let cx = bar_module_complex(n, r, OperadChoice::En, Z).map_err(|e| e.to_string())?;
            cx.check_square_zero().map_err(|e| format!("B^{n}_E_{n}({r}): {e}"))?;
        }
    }
    Ok(())
}

fn projection_and_coderivation() -> Outcome {
    for ring in [Z, F2] {
        for (n, arity) in LEVELS {
            let alpha = lift_level(n, arity, ring);
            let gamma = build_gamma(n, arity, ring);
            let composites = test_composites(n, arity, 1);
            check_projection(&alpha, &gamma, &composites).map_err(|c| format!("{ring} n={n}: {c:?}"))?;
            check_coderivation(&alpha).map_err(|c| format!("{ring} n={n}: {c:?}"))?;
        }
    }
    Ok(())
}

fn restriction() -> Outcome {
    for n in 1..=3u8 {
        let alpha = lift_level(n, 4, Z);
        check_restriction(&alpha).map_err(|c| format!("{c:?}"))?;
        // every simplex, recomputed directly
        for seps in alpha.shapes() {
            for (t, _) in alpha.value(seps).unwrap().iter() {
                for d in &t.leaves {
                    if filtration_level(d) > n as u32 {
                        return Err(format!("{} has level > {n}", encode_simplex(d)));
                    }
                }
            }
        }
        check_cells(&alpha, 3).map_err(|c| format!("{c:?}"))?;
    }
    Ok(())
}

fn acyclicity() -> Outcome {
    for ring in [Z, F2, F3] {
        for (n, r_max) in [(1u8, 4usize), (2, 3)] {
            for r in 1..=r_max {
                let h = bar_module_complex(n, r, OperadChoice::En, ring)
                    .and_then(|cx| Ok(cx.homology()?))
                    .map_err(|e| e.to_string())?;
                let ranks: Vec<(i64, usize)> = h.ranks().into_iter().collect();
                let expected = if r == 1 { vec![(n as i64, 1)] } else { vec![] };
                if ranks != expected || h.has_torsion() {
                    return Err(format!("{ring} B^{n}_E_{n}({r}): {ranks:?}"));
                }
            }
            let rep = augmentation_check(n, r_max, OperadChoice::En, ring).map_err(|e| e.to_string())?;
            if !rep.passed {
                return Err(format!("augmentation {ring} n={n}: {:?} {:?}", rep.failures(), rep.violations));
            }
        }
    }
    Ok(())
}

/// Unsigned Stirling numbers of the first kind, `c(r, k)`.
fn stirling_first(r: usize) -> Vec<u64> {
    let mut row = vec![1u64];
    for m in 0..r {
        let mut next = vec![0u64; row.len() + 1];
        for (k, &c) in row.iter().enumerate() {
            next[k] += m as u64 * c;
            next[k + 1] += c;
        }
        row = next;
    }
    row
}

/// `dim (C ∘ Λ^(1-n) L)(r)` by degree: `k` blocks give `c(r, k)` classes in
/// degree `(n-1)(r-k)`.
fn gerstenhaber_oracle(n: i64, r: usize) -> Vec<(i64, usize)> {
    let mut out: BTreeMap<i64, usize> = BTreeMap::new();
    for (k, &c) in stirling_first(r).iter().enumerate() {
        if c > 0 {
            *out.entry((n - 1) * (r - k) as i64).or_default() += c as usize;
        }
    }
    out.into_iter().collect()
}

fn gerstenhaber() -> Outcome {
    if gerstenhaber_oracle(2, 2) != vec![(0, 1), (1, 1)] || gerstenhaber_oracle(2, 3) != vec![(0, 1), (1, 3), (2, 2)] {
        return Err("oracle".to_string());
    }
    for ring in [Z, Q, F2, F3] {
        for r in 2..=3 {
            let h = en_homology(2, r, ring).map_err(|e| e.to_string())?;
            let ranks: Vec<(i64, usize)> = h.ranks().into_iter().collect();
            if ranks != gerstenhaber_oracle(2, r) || h.has_torsion() {
                return Err(format!("{ring} E_2({r}): {ranks:?}"));
            }
        }
    }
    Ok(())
}

fn cup_products() -> Outcome {
    for m in 0..=4usize {
        let u = cup_product(m, Z);
        if u.is_zero() {
            return Err(format!("υ_{m} = 0"));
        }
        for (s, _) in u.iter() {
            if s.len() != m + 1 || filtration_level(s) != m as u32 + 1 {
                return Err(format!("υ_{m} contains {}", encode_simplex(s)));
            }
        }
    }
    // [υ_1 ± τυ_1] generates H_1(E_2(2)), over Z and over F_2
    let mut basis: Vec<(i64, String, Vec<Vec<u32>>)> = enumerate_en_simplices(2, &[1, 2])
        .into_iter()
        .map(|s| (s.len() as i64 - 1, encode_simplex(&s), s))
        .collect();
    basis.sort();
    let index: BTreeMap<String, usize> = basis
        .iter()
        .filter(|(d, _, _)| *d == 1)
        .enumerate()
        .map(|(i, (_, e, _))| (e.clone(), i))
        .collect();
    for ring in [Z, F2] {
        let z: BTreeMap<usize, i64> = cup_cycle(1, ring).iter().map(|(s, c)| (index[&encode_simplex(s)], c)).collect();
        let cx = enumerate_en(2, 2, ring).map_err(|e| e.to_string())?;
        if !class_generates(&[z], &cx.differential(2), &cx.differential(1)).map_err(|e| e.to_string())? {
            return Err(format!("z_1 does not generate H_1 over {ring}"));
        }
    }
    Ok(())
}

fn commutative_side() -> Outcome {
    let rep = free_commutative_check(4, 2, Z).map_err(|e| e.to_string())?;
    // one class in degree n r, read off the rows directly
    for row in &rep.rows {
        let want = u64::from(row.degree == row.n as i64 * row.arity.unwrap() as i64);
        if row.expected != want || row.found as u64 != want || !row.torsion.is_empty() {
            return Err(format!("free commutative: {row:?}"));
        }
    }
    for ring in [Z, F2, F3] {
        let rep = harrison_acyclicity_check(4, ring).map_err(|e| e.to_string())?;
        let nonzero: Vec<_> = rep.rows.iter().filter(|r| r.found > 0 || !r.torsion.is_empty()).collect();
        if !rep.passed || nonzero.len() != 1 || nonzero[0].arity != Some(1) || nonzero[0].degree != 1 {
            return Err(format!("harrison over {ring}"));
        }
    }
    // one generator x of degree 0, characteristic 0: for n = 1 one class in
    // degree w; for n = 2 the algebra k[u] ⊗ Λ[v] with u in (1, 2) and v in
    // (2, 3), so degrees 2w and 2w - 1 once w ≥ 2
    for n in 1..=2u8 {
        for w in 1..=4usize {
            let h = evaluate_module(n, AlgebraDatum::Trivial, w, EvalSource::Commutative, Q)
                .and_then(|cx| Ok(cx.complex.homology()?))
                .map_err(|e| e.to_string())?;
            let ranks: Vec<(i64, usize)> = h.ranks().into_iter().collect();
            let w = w as i64;
            let expected = match (n, w) {
                (1, _) => vec![(w, 1)],
                (2, 1) => vec![(2, 1)],
                _ => vec![(2 * w - 1, 1), (2 * w, 1)],
            };
            if ranks != expected {
                return Err(format!("trivial algebra n={n} w={w}: {ranks:?}"));
            }
        }
        let rep = trivial_algebra_check(n, 4, Q).map_err(|e| e.to_string())?;
        if !rep.passed {
            return Err(format!("trivial algebra check n={n}: {:?}", rep.failures()));
        }
        // multilinear part: c(r, k) classes in degree r + (n-1)k
        let rep = trivial_multilinear_check(n, 4, Z).map_err(|e| e.to_string())?;
        for r in 1..=4usize {
            let mut want: BTreeMap<i64, u64> = BTreeMap::new();
            for (k, &c) in stirling_first(r).iter().enumerate() {
                if c > 0 {
                    *want.entry(r as i64 + (n as i64 - 1) * k as i64).or_default() += c;
                }
            }
            let found: BTreeMap<i64, u64> = rep
                .rows
                .iter()
                .filter(|row| row.arity == Some(r) && row.found > 0)
                .map(|row| (row.degree, row.found as u64))
                .collect();
            if found != want || !rep.passed {
                return Err(format!("multilinear n={n} r={r}: {found:?} vs {want:?}"));
            }
        }
    }
    Ok(())
}

fn stabilization() -> Outcome {
    for r in 2..=3 {
        for ring in [Q, F2] {
            let rep = stabilization_scan(r, (0, 4), 4, ring).map_err(|e| e.to_string())?;
            let maps_vanish = rep.rows.iter().all(|row| row.map_rank.unwrap_or(0) == 0);
            let colimit_zero = rep.colimit.values().all(|&c| c == 0);
            if !(rep.passed && maps_vanish && colimit_zero) {
                return Err(format!("r={r} over {ring}: {rep:?}"));
            }
        }
    }
    Ok(())
}

fn reports() -> Vec<String> {
    let mut out = vec![
        bar_module_report(2, &[1, 2, 3], OperadChoice::En, Z).unwrap().to_json(),
        bar_module_report(2, &[1, 2, 3], OperadChoice::Commutative, Z).unwrap().to_csv(),
        en_report(2, &[2, 3], Z).unwrap().to_json(),
        bar_eval_report(2, AlgebraDatum::Trivial, 4, Z).unwrap().to_json(),
        harrison_report(&[1, 2, 3, 4], Z).unwrap().to_json(),
        serde_json::to_string(&stabilization_scan(2, (0, 3), 3, Q).unwrap()).unwrap(),
    ];
    out.push(serde_json::to_string(&lift_level(2, 3, Z).to_json()).unwrap());
    out
}

fn determinism_and_uct() -> Outcome {
    let run = |threads: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(reports)
    };
    let one = run(1);
    if one != run(4) || one != run(3) {
        return Err("reports differ across thread counts".to_string());
    }
    let mut complexes: Vec<(String, ChainComplex)> = Vec::new();
    let err = |e: enbar::evalhom::EvalError| e.to_string();
    for (n, r_max) in [(1u8, 4usize), (2, 3)] {
        for r in 1..=r_max {
            complexes.push((format!("B^{n}_E_{n}({r})"), bar_module_complex(n, r, OperadChoice::En, Z).map_err(err)?));
        }
    }
    for n in 1..=2u8 {
        for r in 1..=4 {
            complexes.push((format!("B^{n}_C({r})"), bar_module_complex(n, r, OperadChoice::Commutative, Z).map_err(err)?));
        }
        for w in 1..=4 {
            let cx = evaluate_module(n, AlgebraDatum::Trivial, w, EvalSource::Commutative, Z).map_err(err)?;
            complexes.push((format!("B^{n}(trivial) w={w}"), cx.complex));
        }
    }
    for (n, r) in [(2u32, 2usize), (2, 3), (3, 3)] {
        complexes.push((format!("E_{n}({r})"), enumerate_en(n, r, Z).map_err(|e| e.to_string())?));
    }
    for r in 1..=4 {
        complexes.push((format!("Harr({r})"), harrison_complex(HarrisonInput::Commutative, r, Z).map_err(|e| e.to_string())?));
    }
    for (name, cx) in complexes {
        let hz = cx.homology().map_err(|e| e.to_string())?;
        for p in [2u64, 3] {
            let hp = cx.change_ring(Ring::PrimeField(p)).homology().map_err(|e| e.to_string())?;
            if !uct_consistent(&hz, &hp, p) {
                return Err(format!("{name} over F_{p}"));
            }
        }
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("twisting equation (δ+∂_ε)² = 0", twisting_equation),
        ("projection and coderivation", projection_and_coderivation),
        ("restriction to E_n and cells", restriction),
        ("acyclicity of B^1_E_1 and B^2_E_2", acyclicity),
        ("Gerstenhaber homology of E_2", gerstenhaber),
        ("cup products", cup_products),
        ("commutative-side homology", commutative_side),
        ("stabilization", stabilization),
        ("determinism and universal coefficients", determinism_and_uct),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS {}: {name} ({secs:.1}s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {}: {name} ({secs:.1}s): {e}", i + 1)
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

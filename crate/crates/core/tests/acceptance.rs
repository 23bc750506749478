//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use btspin_core::alexander::{
    alexander_polynomial, elementary_ideal, knot_determinant, wirtinger_matrix, Equivalence, PolyMatrix,
    FINGERPRINT_POINTS,
};
use btspin_core::batch::{read_pairs, run_batch};
use btspin_core::btspin::{btspin_matrix, e0_check, e1_brute_force, e1_closed_form, DEFAULT_MINOR_LIMIT};
use btspin_core::distinguish::{distinguish, Outcome};
use btspin_core::fox::{abelianize, fox_derivative, WeightAssignment};
use btspin_core::knot::table::KnotTable;
use btspin_core::words::Letter;
use btspin_core::{BtSpinParams, LaurentPoly, ParityPreference, Presentation, Word};
use common::*;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

const PAIRS: [(i64, i64); 5] = [(2, 1), (3, 1), (3, 2), (5, 2), (-3, 2)];
const SPIN_KNOTS: [&str; 4] = ["trefoil", "figure-eight", "5_1", "5_2"];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn knot(name: &str) -> Presentation {
    KnotTable::bundled()
        .get(name)
        .unwrap()
        .code
        .to_diagram()
        .unwrap()
        .wirtinger()
}

fn fox_formula() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let words = 2000;
    for _ in 0..words {
        let gens = rng.gen_range(1..=6);
        let len = rng.gen_range(0..=24);
        let w = Word::from_letters((0..len).map(|_| Letter::new(rng.gen_range(0..gens), rng.gen_bool(0.5))));
        let wa = WeightAssignment::new((0..gens).map(|_| rng.gen_range(-6..=6)).collect());
        let mut lhs = LaurentPoly::zero();
        for g in 0..gens {
            let d = abelianize(&fox_derivative(&w, g), &wa).map_err(|e| e.to_string())?;
            let tg = &LaurentPoly::t_pow(wa.weight(g).unwrap()) - &LaurentPoly::one();
            lhs += &(&d * &tg);
        }
        let rhs = &LaurentPoly::t_pow(wa.degree_of(&w).unwrap()) - &LaurentPoly::one();
        ensure(lhs == rhs, || format!("word {w:?}: {lhs} ≠ {rhs}"))?;
    }
    let el = start.elapsed();
    ensure(el < Duration::from_secs(10), || format!("took {el:?}"))?;
    Ok(format!("{words} words in {el:.2?}"))
}

fn row_sums() -> Check {
    let mut rows = 0;
    for (name, d) in bundled() {
        let k = d.wirtinger();
        let l = k.generator_count();
        let a = wirtinger_matrix(&k).map_err(|e| e.to_string())?;
        let mut check = |a: &PolyMatrix, what: &str| -> Result<(), String> {
            for i in 0..l {
                let s: LaurentPoly = (0..l).map(|j| a.get(i, j).clone()).sum();
                ensure(s.is_zero(), || format!("{name} {what} row {i} sums to {s}"))?;
                rows += 1;
            }
            Ok(())
        };
        check(&a, "Wirtinger")?;
        for (m, n) in PAIRS {
            let params = BtSpinParams::solve(m, n, ParityPreference::PreferEven).unwrap();
            check(
                &btspin_matrix(&k, &params).map_err(|e| e.to_string())?,
                &format!("K^{{{m},{n}}}"),
            )?;
        }
    }
    Ok(format!("{rows} relator rows sum to zero"))
}

fn e0_vanishes() -> Check {
    let start = Instant::now();
    let mut minors = 0u128;
    for name in SPIN_KNOTS {
        let k = knot(name);
        for (m, n) in PAIRS {
            for pref in [ParityPreference::PreferEven, ParityPreference::Any] {
                let params = BtSpinParams::solve(m, n, pref).unwrap();
                let r = e0_check(&k, &params, Some(DEFAULT_MINOR_LIMIT)).map_err(|e| e.to_string())?;
                ensure(r.vanishes, || format!("{name} ({m},{n}) {params}: a nonzero minor"))?;
                minors += r.minors;
            }
        }
    }
    let el = start.elapsed();
    ensure(el < Duration::from_secs(300), || format!("took {el:?}"))?;
    Ok(format!("20 cases, both β choices, {minors} minors in {el:.2?}"))
}

fn e1_agrees() -> Check {
    for name in SPIN_KNOTS {
        let k = knot(name);
        for (m, n) in PAIRS {
            for pref in [ParityPreference::PreferEven, ParityPreference::Any] {
                let params = BtSpinParams::solve(m, n, pref).unwrap();
                let closed = e1_closed_form(&k, &params).map_err(|e| e.to_string())?;
                let brute = e1_brute_force(&k, &params, Some(DEFAULT_MINOR_LIMIT)).map_err(|e| e.to_string())?;
                ensure(!closed.is_zero(), || format!("{name} ({m},{n}): closed form is zero"))?;
                let (a, b) = (
                    closed.fingerprint(&FINGERPRINT_POINTS).unwrap(),
                    brute.fingerprint(&FINGERPRINT_POINTS).unwrap(),
                );
                ensure(a == b, || format!("{name} ({m},{n}) {params}: {a:?} vs {b:?}"))?;
            }
        }
    }
    Ok("20 cases, both β choices, fingerprints equal, E_1 ≠ 0".into())
}

fn alexander_oracle_agrees() -> Check {
    let mut dets = Vec::new();
    for (name, d) in bundled() {
        let k = d.wirtinger();
        let delta = alexander_polynomial(&k).map_err(|e| e.to_string())?;
        let oracle = alexander_oracle(&d);
        ensure(delta == oracle, || format!("{name}: {delta} vs oracle {oracle}"))?;
        let at1 = delta.evaluate_at_unit(1).unwrap();
        ensure(at1.abs().is_one(), || format!("{name}: Δ(1) = {at1}"))?;
        let atm1 = delta.evaluate_at_unit(-1).unwrap();
        ensure(!atm1.is_zero(), || format!("{name}: Δ(-1) = 0"))?;
        let det = knot_determinant(&k).unwrap();
        ensure(det.is_odd(), || format!("{name}: determinant {det} is even"))?;
        dets.push(format!("{name}={det}"));
    }
    Ok(format!("determinants {}", dets.join(" ")))
}

fn verdicts() -> Check {
    let cases = [
        (
            ("trefoil", 2, 1),
            ("figure-eight", 2, 1),
            "DISTINGUISHED (Thm 1 case 1: 3 ≠ 5)",
        ),
        (
            ("trefoil", 2, 1),
            ("trefoil", 3, 2),
            "DISTINGUISHED (Thm 1 case 2: det 3 ≠ 1)",
        ),
        (
            ("trefoil", 3, 1),
            ("figure-eight", 5, 2),
            "INCONCLUSIVE (no theorem case applies)",
        ),
        (
            ("trefoil", 3, 1),
            ("trefoil", 5, 1),
            "INCONCLUSIVE (no theorem case applies)",
        ),
    ];
    for ((a, m1, n1), (b, m2, n2), want) in cases {
        let v = distinguish(&knot(a), m1, n1, &knot(b), m2, n2).map_err(|e| e.to_string())?;
        ensure(v.to_string() == want, || format!("{a} vs {b}: got '{v}'"))?;
    }
    let mut same = 0;
    for (name, d) in bundled() {
        let k = d.wirtinger();
        for (m, n) in PAIRS {
            let v = distinguish(&k, m, n, &k, m, n).map_err(|e| e.to_string())?;
            ensure(v.outcome == Outcome::Inconclusive, || {
                format!("{name} ({m},{n}) vs itself: {v}")
            })?;
            same += 1;
        }
    }
    Ok(format!("4 fixed verdicts, {same} self-comparisons inconclusive"))
}

fn bezout() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut done = 0;
    while done < 200 {
        let m = rng.gen_range(-50..=50i64);
        let n = rng.gen_range(1..=80i64);
        if m == 0 || m.abs().gcd(&n) != 1 {
            continue;
        }
        let pref = *[
            ParityPreference::Any,
            ParityPreference::PreferEven,
            ParityPreference::PreferOdd,
        ]
        .choose(&mut rng)
        .unwrap();
        let p = BtSpinParams::solve(m, n, pref).map_err(|e| e.to_string())?;
        let (e, b, a) = (p.epsilon(), p.beta(), p.alpha());
        ensure(m * a + n * b == e, || format!("{p}: mα + nβ ≠ ε"))?;
        ensure(e * n * b + a * m.abs() == 1, || format!("{p}: εnβ + α|m| ≠ 1"))?;
        ensure(b > 0, || format!("{p}: β ≤ 0"))?;
        if m.abs() % 2 == 1 {
            let ok = match pref {
                ParityPreference::PreferEven => b % 2 == 0,
                ParityPreference::PreferOdd => b % 2 == 1,
                ParityPreference::Any => true,
            };
            ensure(ok, || format!("{p}: parity preference {pref:?} not honored"))?;
        }
        done += 1;
    }
    Ok("200 random (m, n)".into())
}

fn random_ops(rng: &mut ChaCha8Rng, m: &PolyMatrix) -> Vec<Equivalence> {
    let (p, q) = (m.rows(), m.cols());
    let mut rows: Vec<usize> = (0..p).collect();
    let mut cols: Vec<usize> = (0..q).collect();
    rows.shuffle(rng);
    cols.shuffle(rng);
    let mut ops = vec![Equivalence::PermuteRows(rows), Equivalence::PermuteCols(cols)];
    let combo = |rng: &mut ChaCha8Rng, n: usize| {
        let target = rng.gen_range(0..n);
        let terms = (0..n)
            .filter(|&i| i != target)
            .map(|i| (i, random_poly(rng, 2, 2, 3)))
            .collect();
        (target, terms)
    };
    if p > 1 {
        let (target, terms) = combo(rng, p);
        ops.push(Equivalence::AddRowCombination { target, terms });
    }
    if q > 1 {
        let (target, terms) = combo(rng, q);
        ops.push(Equivalence::AddColCombination { target, terms });
    }
    ops.push(Equivalence::AdjoinZeroRow);
    ops.push(Equivalence::StabilizeUnit);
    ops
}

fn equivalence_invariance() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut checks = 0;
    for _ in 0..50 {
        let (p, q) = (rng.gen_range(1..=4), rng.gen_range(1..=5));
        let m = random_matrix(&mut rng, p, q);
        for op in random_ops(&mut rng, &m) {
            let m2 = m.apply_equivalence(&op).map_err(|e| e.to_string())?;
            for k in 0..=2 {
                let a = elementary_ideal(&m, k).fingerprint(&FINGERPRINT_POINTS).unwrap();
                let b = elementary_ideal(&m2, k).fingerprint(&FINGERPRINT_POINTS).unwrap();
                ensure(a == b, || format!("{op:?} changed E_{k} of\n{m}: {a:?} vs {b:?}"))?;
                checks += 1;
            }
        }
    }
    Ok(format!("50 matrices, {checks} fingerprint comparisons"))
}

fn batch_determinism() -> Check {
    let table = KnotTable::bundled();
    let mut src = String::from("left_name,m1,n1,right_name,m2,n2\n");
    for a in table.entries() {
        for b in table.entries() {
            for (m, n) in PAIRS {
                src.push_str(&format!("{},{m},{n},{},2,1\n", a.name, b.name));
            }
        }
    }
    let pairs = read_pairs(src.as_bytes()).map_err(|e| e.to_string())?;
    let mut reference: Option<Vec<u8>> = None;
    for _ in 0..3 {
        for jobs in [1, 4, 16] {
            let r = run_batch(&table, &pairs, jobs).map_err(|e| e.to_string())?;
            ensure(!r.has_errors(), || format!("row errors: {:?}", r.errors))?;
            match &reference {
                None => reference = Some(r.csv),
                Some(bytes) => ensure(*bytes == r.csv, || format!("jobs = {jobs}: report differs"))?,
            }
        }
    }
    let lines = reference.map_or(0, |b| b.iter().filter(|&&c| c == b'\n').count());
    Ok(format!("{} pairs, 9 runs identical ({lines} lines)", pairs.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("Fox fundamental formula", fox_formula),
        ("row-sum vanishing", row_sums),
        ("E0 vanishes", e0_vanishes),
        ("E1 closed form vs minors", e1_agrees),
        ("Alexander polynomial oracle", alexander_oracle_agrees),
        ("verdict strings", verdicts),
        ("Bezout and meridian identities", bezout),
        ("equivalence invariance", equivalence_invariance),
        ("batch determinism", batch_determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match result {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

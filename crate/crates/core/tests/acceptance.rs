//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use cicodes::cbtheory::{verify_cb_all, verify_main_theorem, verify_mds_corollary, verify_symmetry, CISetup};
use cicodes::cohom::{hilbert_function, sigma, SubsetRanks};
use cicodes::evalcode::{build_code, build_code_from_coords, choose_f0_seeded, min_distance, weight_distribution, DEFAULT_CAP};
use cicodes::families::rm_exact_distance;
use cicodes::gf::prime_power;
use cicodes::poly::monomials_of_degree;
use cicodes::{Elem, FieldSpec, Polynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    if t > limit {
        return Err(format!("took {t:.2?}, limit {limit:?}"));
    }
    Ok(())
}

/// Whether an exhaustive scan of C(Γ)_a fits under the default cap.
fn scannable(setup: &CISetup, a: i64) -> bool {
    let k = hilbert_function(&setup.gamma, a) as u32;
    (setup.field().q() as u128).checked_pow(k).is_some_and(|x| x - 1 <= DEFAULT_CAP)
}

fn extended_rs_mds() -> Check {
    let start = Instant::now();
    let mut codes = 0;
    for q in [5u32, 7, 8, 9] {
        for m in [1usize, 2] {
            let setup = common::rs(q, m);
            for a in 1..=(q as i64 - 2) {
                if (q as u128).pow(a as u32 + 1) > 1 << 22 {
                    continue;
                }
                let code = build_code(&setup.gamma, a, None).map_err(|e| e.to_string())?;
                let d = min_distance(&code, DEFAULT_CAP).map_err(|e| e.to_string())?.d;
                let want = (q as usize, a as usize + 1, q as usize - a as usize);
                ensure!((code.n, code.k, d) == want, "q={q} m={m} a={a}: (n,k,d)={:?}, want {want:?}", (code.n, code.k, d));
                ensure!(d == code.singleton(), "q={q} m={m} a={a}: not MDS");
                codes += 1;
            }
        }
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("{codes} codes, all MDS"))
}

fn reed_muller_bounds() -> Check {
    let start = Instant::now();
    let mut details = Vec::new();
    for (q, m, degrees) in [(3u32, 2usize, vec![1i64, 2, 3]), (2, 3, vec![1, 2])] {
        let setup = common::rm(q, m);
        for a in degrees {
            let r = verify_main_theorem(&setup, a, DEFAULT_CAP).map_err(|e| e.to_string())?;
            let exact = rm_exact_distance(q, m, a).map_err(|e| e.to_string())? as usize;
            let bound = setup.s - a + 2;
            ensure!(r.d_exact == exact, "q={q} m={m} a={a}: d={} but closed form gives {exact}", r.d_exact);
            ensure!(r.bound == Some(bound) && r.d_exact as i64 >= bound, "q={q} m={m} a={a}: d={} < bound {bound}", r.d_exact);
            if q == 3 && a >= 2 {
                ensure!(r.d_exact as i64 == bound, "q=3 a={a}: bound {bound} not attained (d={})", r.d_exact);
            }
            details.push(format!("q={q},m={m},a={a}:d={}/b={bound}", r.d_exact));
        }
    }
    within(start, Duration::from_secs(10))?;
    Ok(details.join(" "))
}

fn hermitian_desk_case() -> Check {
    let start = Instant::now();
    let setup = common::hermitian(2);
    ensure!(setup.field().q() == 4, "field has {} elements", setup.field().q());
    ensure!(setup.n() == 6 && setup.s == 2, "|Γ|={} s={}", setup.n(), setup.s);
    let r = verify_main_theorem(&setup, 2, DEFAULT_CAP).map_err(|e| e.to_string())?;
    ensure!((r.n, r.k, r.d_exact) == (6, 5, 2), "(n,k,d)=({},{},{})", r.n, r.k, r.d_exact);
    ensure!(r.d_exact >= 2 && r.mds, "not MDS");
    within(start, Duration::from_secs(5))?;
    Ok(format!("{r}"))
}

fn cb_identity_exhaustive() -> Check {
    let start = Instant::now();
    let mut total = 0;
    for (name, setup, top, splits) in [
        ("two conics F5", common::conics_f5(), 3i64, 16u64),
        ("rm q=3 m=2", common::rm(3, 2), 5, 512),
        ("hermitian q=2", common::hermitian(2), 4, 64),
    ] {
        for a in 0..=top {
            let r = verify_cb_all(&setup, a, 1 << 20, 0);
            ensure!(r.exhaustive && r.splits_checked == splits, "{name} a={a}: {} splits checked", r.splits_checked);
            ensure!(r.holds(), "{name}: {r}");
            total += r.splits_checked;
        }
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{total} splits, 0 violations"))
}

fn main_theorem_sweep() -> Check {
    let corpus = common::corpus();
    let dims: std::collections::BTreeSet<usize> = corpus.iter().map(|(_, s)| s.gamma.dim()).collect();
    ensure!(corpus.len() >= 6 && dims == [1, 2, 3].into(), "corpus covers m={dims:?}");
    let (mut checked, mut skipped) = (0, 0);
    for (name, setup) in &corpus {
        for a in 1..=setup.s {
            if !scannable(setup, a) {
                skipped += 1;
                continue;
            }
            let r = verify_main_theorem(setup, a, DEFAULT_CAP).map_err(|e| format!("{name} a={a}: {e}"))?;
            ensure!(r.bound_holds(), "{name} a={a}: {r}");
            checked += 1;
        }
        ensure!(scannable(setup, setup.s), "{name}: C(Γ)_s over the cap");
        let top = verify_main_theorem(setup, setup.s, DEFAULT_CAP).map_err(|e| e.to_string())?;
        ensure!(top.mds, "{name}: C(Γ)_s not MDS: {top}");
    }
    Ok(format!("{} setups, {checked} codes, {skipped} over cap", corpus.len()))
}

fn hilbert_symmetry() -> Check {
    let corpus = common::corpus();
    for (name, setup) in &corpus {
        ensure!(verify_symmetry(setup), "{name}: symmetry fails");
        let sig = sigma(&setup.gamma);
        ensure!(sig == setup.s, "{name}: sigma={sig} s={}", setup.s);
    }
    Ok(format!("{} setups", corpus.len()))
}

fn subset_vanishing() -> Check {
    let corpus = common::corpus();
    let caches: Vec<SubsetRanks> = corpus.iter().map(|(_, s)| SubsetRanks::new(&s.gamma, s.n() as i64 + 1)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for trial in 0..200 {
        let which = rng.gen_range(0..corpus.len());
        let n = corpus[which].1.n();
        let size = rng.gen_range(1..=n);
        let mut idx: Vec<usize> = rand::seq::index::sample(&mut rng, n, size).into_vec();
        idx.sort_unstable();
        for j in size as i64 - 1..=size as i64 + 1 {
            let h1 = caches[which].h1(&idx, j);
            ensure!(h1 == 0, "trial {trial} ({}): subset {idx:?} j={j} h1={h1}", corpus[which].0);
        }
    }
    Ok("200 subsets, seed 0".into())
}

fn mds_corollary() -> Check {
    let (mut checked, mut mds_count) = (0, 0);
    for (name, setup) in common::corpus() {
        for a in 1..=setup.s {
            if !scannable(&setup, a) {
                continue;
            }
            let r = verify_mds_corollary(&setup, a, DEFAULT_CAP).map_err(|e| e.to_string())?;
            ensure!(r.agrees(), "{name} a={a}: mds={} vanishing={} witness={:?}", r.mds, r.vanishing, r.witness);
            checked += 1;
            mds_count += r.mds as usize;
        }
    }
    Ok(format!("{checked} codes ({mds_count} MDS), 0 disagreements"))
}

fn field_axioms() -> Check {
    for q in (2..=64).filter(|&q| prime_power(q).is_some()) {
        let f = FieldSpec::with_order(q).unwrap();
        for a in 0..q {
            ensure!(f.add(a, f.neg(a)) == 0 && f.mul(a, 1) == a, "q={q} identities at {a}");
            if a != 0 {
                ensure!(f.mul(a, f.inv(a).unwrap()) == 1, "q={q} inverse of {a}");
            }
            for b in 0..q {
                ensure!(f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a), "q={q} commutativity");
                for c in 0..q {
                    ensure!(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)), "q={q} additive associativity");
                    ensure!(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)), "q={q} multiplicative associativity");
                    ensure!(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)), "q={q} distributivity");
                }
            }
        }
    }
    Ok("fields q<=64".into())
}

fn scaling_identity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut trials = 0;
    for q in [2u32, 4, 5, 9, 16, 49] {
        let f = FieldSpec::with_order(q).unwrap();
        for deg in 0..5 {
            for _ in 0..20 {
                let terms = monomials_of_degree(2, deg).into_iter().map(|m| (m, rng.gen_range(0..q)));
                let p = Polynomial::from_terms(&f, 3, terms).unwrap();
                let pt: Vec<Elem> = (0..3).map(|_| rng.gen_range(0..q)).collect();
                let lambda = rng.gen_range(1..q);
                let scaled: Vec<Elem> = pt.iter().map(|&x| f.mul(lambda, x)).collect();
                let lhs = p.evaluate(&scaled).unwrap();
                let rhs = f.mul(f.pow(lambda, deg as u64), p.evaluate(&pt).unwrap());
                ensure!(lhs == rhs, "q={q} deg={deg}: {p} at {pt:?}, lambda={lambda}");
                trials += 1;
            }
        }
    }
    Ok(format!("{trials} trials"))
}

fn singleton_everywhere() -> Check {
    let mut codes = 0;
    for (name, setup) in common::corpus() {
        for a in -1..=setup.s + 1 {
            if !scannable(&setup, a) {
                continue;
            }
            let code = build_code(&setup.gamma, a, None).map_err(|e| e.to_string())?;
            let d = min_distance(&code, DEFAULT_CAP).map_err(|e| e.to_string())?.d;
            if code.k > 0 {
                ensure!(d <= code.singleton(), "{name} a={a}: d={d} > n-k+1={}", code.singleton());
            }
            codes += 1;
        }
    }
    Ok(format!("{codes} codes"))
}

fn normalizer_independence() -> Check {
    let cases = [
        ("two conics F5", common::conics_f5(), 1),
        ("rm q=3 m=2", common::rm(3, 2), 2),
        ("hermitian q=2", common::hermitian(2), 2),
        ("rs q=7 m=2", common::rs(7, 2), 3),
    ];
    for (name, setup, a) in &cases {
        let plain = weight_distribution(&build_code(&setup.gamma, *a, None).unwrap(), DEFAULT_CAP).unwrap();
        for seed in 0..3 {
            let f0 = choose_f0_seeded(&setup.gamma, *a, seed, 10_000).map_err(|e| e.to_string())?;
            let code = build_code(&setup.gamma, *a, Some(&f0)).map_err(|e| e.to_string())?;
            let w = weight_distribution(&code, DEFAULT_CAP).unwrap();
            ensure!(w == plain, "{name}: f0={f0} changes the weight distribution");
        }
    }
    Ok(format!("{} codes x 3 normalizers", cases.len()))
}

fn representative_independence() -> Check {
    let mut codes = 0;
    for (name, setup) in common::corpus() {
        let f = setup.field();
        for a in 1..=setup.s {
            if !scannable(&setup, a) {
                continue;
            }
            let code = build_code(&setup.gamma, a, None).unwrap();
            let d = min_distance(&code, DEFAULT_CAP).unwrap().d;
            let coords: Vec<Vec<Elem>> = setup
                .gamma
                .points()
                .iter()
                .enumerate()
                .map(|(i, p)| {
                    let lambda = f.pow(f.primitive(), i as u64 + 1);
                    p.coords().iter().map(|&x| f.mul(lambda, x)).collect()
                })
                .collect();
            let other = build_code_from_coords(&setup.gamma, &coords, a);
            let d2 = min_distance(&other, DEFAULT_CAP).unwrap().d;
            ensure!((other.n, other.k, d2) == (code.n, code.k, d), "{name} a={a}: parameters depend on representatives");
            codes += 1;
        }
    }
    Ok(format!("{codes} codes"))
}

fn thread_stability() -> Check {
    let dir = tempfile::TempDir::new().map_err(|e| e.to_string())?;
    let bin = env!("CARGO_BIN_EXE_cicodes");
    let run = |args: &[&str]| Command::new(bin).args(args).output().map_err(|e| e.to_string());
    let mut files = Vec::new();
    for (kind, q, m) in [("rm", "3", "2"), ("hermitian", "2", "2"), ("rs", "7", "2")] {
        let path = dir.path().join(format!("{kind}.var"));
        let p = path.to_str().unwrap().to_string();
        run(&["family", kind, "--q", q, "--m", m, "--out", &p])?;
        files.push(p);
    }
    let mut compared = 0;
    for f in &files {
        for cmd in [
            vec!["analyze", f, "--degree", "2", "--emit-matrix"],
            vec!["cb", f, "--budget", "64", "--seed", "5"],
            vec!["hilbert", f],
            vec!["points", f, "--require-ci"],
        ] {
            let outs: Vec<_> = ["1", "4"]
                .iter()
                .map(|t| {
                    let mut args = vec!["--threads", t];
                    args.extend(cmd.iter().copied());
                    run(&args)
                })
                .collect::<Result<_, _>>()?;
            ensure!(outs[0].status.code() == Some(0), "{cmd:?} exit {:?}", outs[0].status.code());
            ensure!(outs[0].stdout == outs[1].stdout && outs[0].status == outs[1].status, "{cmd:?} differs across thread counts");
            compared += 1;
        }
    }
    Ok(format!("{compared} reports identical"))
}

fn property_suites() -> Check {
    let parts = [
        ("field axioms", field_axioms()),
        ("scaling", scaling_identity()),
        ("singleton", singleton_everywhere()),
        ("normalizer", normalizer_independence()),
        ("representatives", representative_independence()),
        ("threads", thread_stability()),
    ];
    let mut summary = Vec::new();
    for (label, r) in parts {
        summary.push(format!("{label}: {}", r.map_err(|e| format!("{label}: {e}"))?));
    }
    Ok(summary.join("; "))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("extended Reed-Solomon codes are MDS", extended_rs_mds),
        ("Reed-Muller exact distance vs bound", reed_muller_bounds),
        ("Hermitian q=2 desk case", hermitian_desk_case),
        ("Cayley-Bacharach identity, all splits", cb_identity_exhaustive),
        ("distance bound sweep over corpus", main_theorem_sweep),
        ("Hilbert function symmetry and sigma", hilbert_symmetry),
        ("h1 vanishing for random subsets", subset_vanishing),
        ("MDS criterion agreement", mds_corollary),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let t = start.elapsed();
        match result {
            Ok(detail) => println!("PASS {} {name} ({detail}) [{t:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why} [{t:.2?}]", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if
//! any criterion fails. Runs without the libtest harness so the lines are
//! always shown.

mod common;

use duadic::code::{bch_bound, build, duadic_pair, hermitian_dual_set, is_dual_containing, Side};
use duadic::cyclotomic::{coset_fixed, coset_fixed_direct, coset_partition, minus_two, no_splitting_exists, omega_set, Ambient, CosetSet, Shift};
use duadic::quantum::{bch_family, bch_family_code, duadic_quantum, multiplier_product, product_rule, Degeneracy};
use duadic::splitting::{admissible, extend, splittings, validate, Splitting};
use duadic::tables::{reproduce_composed, Status, TABLE_1, TABLE_2, TABLE_3};
use duadic::weights::{min_distance, nested_search, sqrt_bound, Distance, Method, SearchConfig, Strategy};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn splitting_of(n: u32, shift: Shift, leaders: &[u32]) -> Splitting {
    let a = Ambient::new(n, shift).unwrap();
    Splitting::from_odd_set(CosetSet::from_leaders(a, leaders).unwrap()).unwrap()
}

fn table_row(table: &[duadic::tables::Row], n: u32) -> duadic::tables::Row {
    *table.iter().find(|r| r.n == n).unwrap()
}

/// Exact, exhaustively certified `[[n,1,d]]` rows with `d(C) = d_o(C)`.
fn small_table_2_rows() -> Check {
    let mut msg = Vec::new();
    for n in [5, 7, 13, 17] {
        let row = table_row(TABLE_2, n);
        let sp = row.splitting().unwrap();
        let t = Instant::now();
        let pair = duadic_pair(&sp, Side::S1).unwrap();
        let r = nested_search(&pair.odd, Some(&pair.even), None, &SearchConfig::default()).unwrap();
        let q = duadic_quantum(&sp, &SearchConfig::default()).unwrap();
        let el = t.elapsed();
        ensure!(r.method == Method::Exhaustive, "n = {n}: not exhaustive");
        ensure!(r.d == Some(Distance::Exact(row.d)) && r.d_odd == Some(Distance::Exact(row.d)), "n = {n}: d = {:?}, d_o = {:?}", r.d, r.d_odd);
        ensure!((q.n, q.k, q.d, q.degenerate) == (n, 1, Distance::Exact(row.d), Degeneracy::No), "n = {n}: got {q}");
        let b = common::brute(&pair.odd, Some(&pair.even));
        ensure!(b.d == Some(row.d) && b.d_odd == Some(row.d), "n = {n}: brute-force oracle disagrees");
        ensure!(el < Duration::from_secs(1), "n = {n}: took {el:?}");
        msg.push(format!("[[{n},1,{}]] {el:.1?}", row.d));
    }
    Ok(msg.join(", "))
}

fn dimension_three_rows() -> Check {
    let mut msg = Vec::new();
    for (n, dim) in [(15u32, 9u32), (21, 12)] {
        let row = table_row(TABLE_1, n);
        let sp = row.splitting().unwrap();
        let t = Instant::now();
        let q = duadic_quantum(&sp, &SearchConfig::default()).unwrap();
        let el = t.elapsed();
        let pair = duadic_pair(&sp, Side::S1).unwrap();
        ensure!(pair.odd.dimension() == dim, "n = {n}: dimension {}", pair.odd.dimension());
        ensure!((q.n, q.k, q.d, q.degenerate) == (n, 3, Distance::Exact(row.d), Degeneracy::No), "n = {n}: got {q}");
        ensure!(el < Duration::from_secs(60), "n = {n}: took {el:?}");
        if dim <= 9 {
            let b = common::brute(&pair.odd, Some(&pair.even));
            ensure!(b.d_odd == Some(row.d), "n = {n}: brute-force oracle disagrees");
        }
        msg.push(format!("[[{n},3,{}]] {el:.1?}", row.d));
    }
    Ok(msg.join(", "))
}

fn degenerate_length_25() -> Check {
    let sp = table_row(TABLE_2, 25).splitting().unwrap();
    let pair = duadic_pair(&sp, Side::S1).unwrap();
    ensure!(pair.odd.dimension() == 13, "dimension {}", pair.odd.dimension());
    let run = |workers| {
        let cfg = SearchConfig::default().workers(workers);
        let t = Instant::now();
        let r = nested_search(&pair.odd, Some(&pair.even), None, &cfg).unwrap();
        (r, t.elapsed())
    };
    let (serial, t1) = run(1);
    let (parallel, t8) = run(8);
    ensure!(serial == parallel, "serial and parallel reports differ");
    ensure!(serial.method == Method::Exhaustive, "not exhaustive");
    ensure!(serial.d_odd == Some(Distance::Exact(9)), "d_o = {:?}", serial.d_odd);
    let light = serial.min_inner_found.ok_or("no even-like word found")?;
    ensure!(light < 9, "lightest even-like word has weight {light}");
    let q = duadic_quantum(&sp, &SearchConfig::default()).unwrap();
    ensure!((q.bracket(), q.degenerate) == ("[[25,1,9]]".into(), Degeneracy::Yes), "got {q}");
    ensure!(t1 < Duration::from_secs(600), "serial took {t1:?}");
    ensure!(t8 < Duration::from_secs(120), "8 workers took {t8:?}");
    Ok(format!("[[25,1,9]] degenerate, even-like weight {light}; serial {t1:.1?}, 8 workers {t8:.1?}, identical"))
}

fn length_75_census() -> Check {
    let sp = splitting_of(75, Shift::Omega, &[1, 10]);
    let pair = duadic_pair(&sp, Side::S1).unwrap();
    let mut cfg = SearchConfig::with_budget(1 << 30);
    cfg.strategy = Strategy::Auto;
    let t = Instant::now();
    let r = nested_search(&pair.odd, Some(&pair.even), Some(8), &cfg).unwrap();
    ensure!(r.d == Some(Distance::Exact(4)), "d = {:?}", r.d);
    ensure!(r.d_odd == Some(Distance::Exact(9)), "d_o = {:?}", r.d_odd);
    ensure!(r.counts_complete_through.is_some_and(|c| c >= 8), "counts incomplete: {:?}", r.counts_complete_through);
    let (c4, c8) = (r.weight_counts.get(&4).copied(), r.weight_counts.get(&8).copied());
    ensure!(c4 == Some(225) && c8 == Some(23625), "counts: 4 -> {c4:?}, 8 -> {c8:?}");
    ensure!(r.enumerated <= 1 << 30, "visited {}", r.enumerated);
    Ok(format!("d = 4, A4 = 225, A8 = 23625, d_o = 9; {} visits in {:.1?}", r.enumerated, t.elapsed()))
}

fn compositions() -> Check {
    let t = Instant::now();
    let q21 = table_row(TABLE_1, 21).as_factor().unwrap();
    let q5 = table_row(TABLE_2, 5).as_factor().unwrap();
    let p105 = product_rule(&q21, &q5).map_err(|e| e.to_string())?;
    ensure!(p105.bracket() == "[[105,3,18]]" && p105.degenerate == Degeneracy::Yes, "got {p105}");
    let p525 = product_rule(&p105, &q5).map_err(|e| e.to_string())?;
    ensure!(p525.bracket() == "[[525,3,54]]" && p525.degenerate == Degeneracy::Yes, "got {p525}");
    let p63 = multiplier_product(3, &q21).map_err(|e| e.to_string())?;
    ensure!(p63.bracket() == "[[63,9,6]]", "got {p63}");
    for q in [&p105, &p525, &p63] {
        let sp = q.splitting.as_ref().unwrap();
        validate(sp).map_err(|e| format!("{}: {e}", q.bracket()))?;
        ensure!(sp.x.len() as u32 == q.k, "{}: |S0| = {}", q.bracket(), sp.x.len());
    }
    let rows = reproduce_composed(None).map_err(|e| e.to_string())?;
    let el = t.elapsed();
    let matched = rows.iter().filter(|r| r.status == Status::Match).count();
    ensure!(matched == TABLE_3.len(), "{matched} of {} third-table rows matched", TABLE_3.len());
    for r in &rows {
        let q = r.got.as_ref().unwrap();
        let sp = q.splitting.as_ref().unwrap();
        ensure!(sp.x.len() as u32 == q.k, "{}: |S0| = {}", q.bracket(), sp.x.len());
        if q.n <= 225 {
            validate(sp).map_err(|e| format!("{}: {e}", q.bracket()))?;
        }
    }
    ensure!(el < Duration::from_secs(5), "took {el:?}");
    Ok(format!("[[105,3,18]], [[525,3,54]], [[63,9,6]], {matched} third-table rows in {el:.1?}"))
}

fn bch_family_instances() -> Check {
    let mut msg = Vec::new();
    for i in 1..=3u32 {
        let c = bch_family_code(i).unwrap();
        let a = c.defining_set();
        let e = a.intersection(&minus_two(a)).len();
        ensure!(e == 1, "i = {i}: e = {e}");
        ensure!(c.dimension() == 3u32.pow(i + 1) - 1, "i = {i}: dim {}", c.dimension());
        let q = bch_family(i, &SearchConfig::default()).unwrap();
        let (n, k) = (5 * 3u32.pow(i) + 1, 3u32.pow(i) - 1);
        ensure!((q.n, q.k) == (n, k), "i = {i}: got {q}");
        ensure!(q.d.lower() >= 6, "i = {i}: d = {}", q.d);
        msg.push(q.bracket());
    }
    let c = bch_family_code(1).unwrap();
    let sum = build(c.ambient(), &c.defining_set().difference(&minus_two(c.defining_set()))).unwrap();
    let dc = min_distance(&c, &SearchConfig::default()).unwrap();
    let ds = min_distance(&sum, &SearchConfig::default()).unwrap();
    ensure!(dc.method == Method::Exhaustive && ds.method == Method::Exhaustive, "not exhaustive");
    let (dc, ds) = (dc.d.unwrap().exact().unwrap(), ds.d.unwrap().exact().unwrap());
    ensure!(common::brute(&c, None).d == Some(dc) && common::brute(&sum, None).d == Some(ds), "brute-force oracle disagrees");
    ensure!(dc.min(ds + 1) >= 6, "min(d(C), d(C + C^perp_h) + 1) = {}", dc.min(ds + 1));
    Ok(format!("{}; i = 1: d(C) = {dc}, d(C + C^perp_h) = {ds}", msg.join(", ")))
}

fn hermitian_dual_matches_oracle(a: &CosetSet) -> Result<(), String> {
    let amb = a.ambient();
    let c = build(amb, a).unwrap();
    let dual = build(amb, &hermitian_dual_set(a)).unwrap();
    let basis = common::hermitian_dual_basis(&c.generator_rows(), amb.n() as usize);
    ensure!(basis.len() as u32 == dual.dimension(), "n = {} A = {a}: dual dimension {} vs {}", amb.n(), basis.len(), dual.dimension());
    for v in &basis {
        ensure!(dual.contains(v), "n = {} A = {a}: oracle vector outside the dual", amb.n());
    }
    Ok(())
}

/// Indices to visit among `total` splittings: all of them up to a cap,
/// otherwise an even spread including both ends.
fn sample(total: u128, cap: u128) -> Vec<u128> {
    if total <= cap {
        (0..total).collect()
    } else {
        (0..cap).map(|i| i * (total - 1) / (cap - 1)).collect()
    }
}

fn property_suite() -> Check {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut rings, mut checked, mut oracle, mut sqrt_checks) = (0, 0u64, 0, 0);
    for n in (3..=99u32).step_by(2) {
        for shift in [Shift::One, Shift::Omega] {
            let amb = Ambient::new(n, shift).unwrap();
            if no_splitting_exists(amb) {
                continue;
            }
            rings += 1;
            let all = splittings(amb);
            let omega = omega_set(amb);
            let parts = coset_partition(amb);
            for idx in sample(all.total(), 256) {
                let sp = all.get(idx).unwrap();
                validate(&sp).map_err(|e| format!("n = {n} {shift} #{idx}: {e}"))?;
                checked += 1;
                ensure!(is_dual_containing(&sp.s1), "n = {n}: S1 not dual-containing");
                for c in parts.iter().filter(|c| !sp.s1.contains(c.leader().unwrap())) {
                    ensure!(!is_dual_containing(&sp.s1.union(c)), "n = {n}: S1 + {c} still dual-containing");
                }
                if idx < 4 {
                    let p = duadic_pair(&sp, Side::S1).unwrap();
                    let x = sp.x.len() as u32;
                    ensure!(2 * p.odd.dimension() == n + x && 2 * p.even.dimension() == n - x, "n = {n}: duadic dimensions");
                }
            }
            if n <= 35 {
                let first = all.get(0).unwrap();
                hermitian_dual_matches_oracle(&first.s1)?;
                hermitian_dual_matches_oracle(&first.s1.union(&first.x))?;
                for _ in 0..4 {
                    let pick: Vec<u32> = parts.iter().filter(|_| rng.gen_bool(0.5)).map(|c| c.leader().unwrap()).collect();
                    hermitian_dual_matches_oracle(&CosetSet::from_leaders(amb, &pick).unwrap())?;
                    oracle += 1;
                }
                oracle += 2;
                let pair = duadic_pair(&first, Side::S1).unwrap();
                if pair.odd.dimension() <= 13 {
                    let r = nested_search(&pair.odd, Some(&pair.even), None, &SearchConfig::default()).unwrap();
                    let d_o = r.d_odd.and_then(|d| d.exact()).ok_or(format!("n = {n}: d_o not certified"))?;
                    let e_code = build(amb, &omega.difference(&first.x)).unwrap();
                    let mut floor = bch_bound(e_code.defining_set());
                    if e_code.dimension() <= 13 {
                        floor = floor.max(min_distance(&e_code, &SearchConfig::default()).unwrap().d.unwrap().exact().unwrap());
                    }
                    ensure!(d_o * d_o >= floor, "n = {n} {shift}: d_o = {d_o} but d(E) >= {floor}");
                    ensure!(d_o >= sqrt_bound(&first), "n = {n}: below the square-root bound");
                    sqrt_checks += 1;
                }
            }
        }
    }
    let mut criteria = 0;
    for n in (1..=201u32).step_by(2) {
        for shift in [Shift::One, Shift::Omega] {
            let amb = Ambient::new(n, shift).unwrap();
            let mut all_fixed = true;
            for s in omega_set(amb).iter() {
                let direct = coset_fixed_direct(amb, s);
                ensure!(coset_fixed(amb, s) == direct, "n = {n} {shift} s = {s}: fixedness criterion disagrees");
                all_fixed &= direct;
                criteria += 1;
            }
            ensure!(no_splitting_exists(amb) == all_fixed, "n = {n} {shift}: existence criterion disagrees");
        }
    }
    let el = t.elapsed();
    ensure!(el < Duration::from_secs(600), "took {el:?}");
    Ok(format!(
        "{rings} rings, {checked} splittings validated, {oracle} dual-oracle checks, {sqrt_checks} square-root checks, {criteria} coset criteria, {el:.1?}"
    ))
}

fn negative_controls() -> Check {
    for n in [9, 27, 81] {
        let amb = Ambient::new(n, Shift::Omega).unwrap();
        ensure!(no_splitting_exists(amb), "n = {n}: criterion says a splitting exists");
        ensure!(splittings(amb).count() == 0, "n = {n}: splittings enumerated");
    }
    ensure!(!admissible(11, Shift::One) && !admissible(11, Shift::Omega), "11 accepted");
    let t = Splitting::trivial(Ambient::new(3, Shift::Omega).unwrap()).unwrap();
    let u = Splitting::trivial(Ambient::new(11, Shift::Omega).unwrap()).unwrap();
    let e = extend(&t, &u);
    ensure!(matches!(e, Err(duadic::Error::NotAdmissible { n1: 11, .. })), "extension by length 11 gave {e:?}");
    Ok("n = 9, 27, 81 give no splittings; 11 rejected (11 | 2^5 + 1)".into())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("1 small one-dimensional rows exact", small_table_2_rows),
        ("2 dimension-3 rows by exhaustive scan", dimension_three_rows),
        ("3 degenerate [[25,1,9]], serial = parallel", degenerate_length_25),
        ("4 length-75 census and odd-like weight", length_75_census),
        ("5 product compositions", compositions),
        ("6 BCH family", bch_family_instances),
        ("7 property suite", property_suite),
        ("8 negative controls", negative_controls),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match std::panic::catch_unwind(f) {
            Ok(Ok(detail)) => println!("PASS criterion {name}: {detail}"),
            Ok(Err(why)) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
            Err(_) => {
                failed += 1;
                println!("FAIL criterion {name}: panicked");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

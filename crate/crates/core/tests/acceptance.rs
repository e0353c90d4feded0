//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Tolerances and time limits are fixed below.

use std::collections::HashSet;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hyperspace::cubes::{cube_parbedding, make_cube, make_halfcube, n_cube, n_halfcube, CubeShape};
use hyperspace::morphisms::{find_embedding, NodeBudget, Search};
use hyperspace::setsystem::{
    dandy_to_depth, depth, full_mask, induced_system, restrict, tuple_transversal_number,
    ExtendedNat, SetSystem, SetTuple,
};
use hyperspace::spray::{cover_with_sprays, parse_centers, SprayConfig};
use hyperspace::stream::{
    acceptability_audit, collapsed, color_prefix, greedy_coloring, CubeStream, Strategy,
};
use hyperspace::FiniteIndexedHyperspace;

const SEED: u64 = 0x5eed;
const DEPTH_FORMULA_LIMIT: Duration = Duration::from_secs(10);
const TUPLE_IDENTITY_LIMIT: Duration = Duration::from_secs(60);
const DANDY_LIMIT: Duration = Duration::from_secs(120);
const AUDIT_LIMIT: Duration = Duration::from_secs(60);
const RANDOM_TUPLES: usize = 10_000;
const RANDOM_DANDY_FAMILIES: usize = 1_000;
const RANDOM_RESTRICTIONS: usize = 10_000;
const AUDIT_PREFIX: usize = 10_000;
const PIGEONHOLE_THRESHOLD: usize = 50;
const PIGEONHOLE_SHORT: usize = 100;
const PIGEONHOLE_LONG: usize = 1000;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn timed(limit: Duration, start: Instant, mismatches: usize, checked: usize) -> Outcome {
    let elapsed = start.elapsed();
    outcome(
        mismatches == 0 && elapsed <= limit,
        format!(
            "{checked} checked, {mismatches} mismatches, {:.2}s of {}s",
            elapsed.as_secs_f64(),
            limit.as_secs()
        ),
    )
}

fn ceil_div(a: usize, b: usize) -> u64 {
    a.div_ceil(b) as u64
}

fn depth_formula() -> Outcome {
    let start = Instant::now();
    let (mut checked, mut bad) = (0, 0);
    for n in 1..=7 {
        for m in 2..=n + 1 {
            let got = depth(&SetSystem::uniform(n, m).unwrap());
            checked += 1;
            if got != ExtendedNat::Finite(ceil_div(n, m - 1)) {
                bad += 1;
                eprintln!("  depth([{n}]^{m}) = {got}");
            }
        }
    }
    timed(DEPTH_FORMULA_LIMIT, start, bad, checked)
}

fn random_tuple(rng: &mut ChaCha8Rng) -> SetTuple {
    let n = rng.gen_range(1..=6);
    let m = rng.gen_range(1..=6);
    let sets = (0..n).map(|_| rng.gen_range(1..1u64 << m)).collect();
    SetTuple::from_masks(m, sets).unwrap()
}

fn tuple_identity() -> Outcome {
    let start = Instant::now();
    let (mut checked, mut bad) = (0, 0);
    let mut check = |t: &SetTuple| {
        checked += 1;
        if tuple_transversal_number(t) != depth(&induced_system(t).unwrap()) {
            bad += 1;
            eprintln!("  mismatch on {t:?}");
        }
    };
    for n in 1..=3 {
        for m in 1..=3 {
            for t in SetTuple::enumerate_all(n, m, true).unwrap() {
                check(&t);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..RANDOM_TUPLES {
        check(&random_tuple(&mut rng));
    }
    timed(TUPLE_IDENTITY_LIMIT, start, bad, checked)
}

// subsets of {0..n-1} with at least two elements
fn pair_masks(n: usize) -> Vec<u64> {
    (0..1u64 << n).filter(|s| s.count_ones() >= 2).collect()
}

fn dandy_equivalence() -> Outcome {
    let start = Instant::now();
    let (mut checked, mut bad) = (0, 0);
    let mut check = |family: &SetSystem| {
        let delta = depth(family);
        for d in 0..=family.ground() + 1 {
            checked += 1;
            let below = ExtendedNat::Finite(d as u64) < delta;
            if dandy_to_depth(family, d).unwrap() != below {
                bad += 1;
                eprintln!("  d={d} on {family}");
            }
        }
    };
    for n in 0..=4 {
        let choices = pair_masks(n);
        for pick in 0..1u64 << choices.len() {
            let members = (0..choices.len())
                .filter(|&k| pick >> k & 1 == 1)
                .map(|k| choices[k]);
            check(&SetSystem::from_masks(n, members).unwrap());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let choices = pair_masks(5);
    for _ in 0..RANDOM_DANDY_FAMILIES {
        let members: Vec<u64> = choices.iter().copied().filter(|_| rng.gen_bool(0.3)).collect();
        check(&SetSystem::from_masks(5, members).unwrap());
    }
    timed(DANDY_LIMIT, start, bad, checked)
}

fn restriction_inequality() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    let (mut checked, mut bad) = (0, 0);
    while checked < RANDOM_RESTRICTIONS {
        let n = rng.gen_range(1..=6);
        let members: Vec<u64> = (0..rng.gen_range(0..=8))
            .map(|_| rng.gen_range(1..1u64 << n))
            .collect();
        let family = SetSystem::from_masks(n, members).unwrap();
        // grow a random set until it meets every member
        let mut j = rng.gen_range(0..1u64 << n);
        for &member in family.members() {
            if member & j == 0 {
                j |= 1 << member.trailing_zeros();
            }
        }
        checked += 1;
        let before = depth(&family);
        let after = depth(&restrict(&family, j).system);
        if after < before.saturating_sub(1) {
            bad += 1;
            eprintln!("  {family} restricted to {j:#b}: {before} -> {after}");
        }
    }
    outcome(bad == 0, format!("{checked} pairs, {bad} violations"))
}

// Least d such that some d transversals have empty intersection, by growing
// the set of reachable intersections.
fn brute_depth(ground: usize, members: &[u64]) -> ExtendedNat {
    let transversals: Vec<u64> = (0..=full_mask(ground))
        .filter(|&t| members.iter().all(|&s| s & t != 0))
        .collect();
    let mut reach: HashSet<u64> = transversals.iter().copied().collect();
    for d in 1.. {
        if reach.contains(&0) {
            return ExtendedNat::Finite(d);
        }
        let next: HashSet<u64> = reach
            .iter()
            .flat_map(|&r| transversals.iter().map(move |&t| r & t))
            .chain(reach.iter().copied())
            .collect();
        if next == reach {
            return ExtendedNat::Infinity;
        }
        reach = next;
    }
    unreachable!()
}

fn depth_cross_validation() -> Outcome {
    let (mut checked, mut bad) = (0, 0);
    for n in 0..=4 {
        let subsets = 1usize << n;
        for pick in 0..1u64 << subsets {
            let members: Vec<u64> = (0..subsets as u64).filter(|&s| pick >> s & 1 == 1).collect();
            let family = SetSystem::from_masks(n, members.clone()).unwrap();
            checked += 1;
            let (fast, slow) = (depth(&family), brute_depth(n, &members));
            if fast != slow {
                bad += 1;
                eprintln!("  {family}: cover {fast}, brute force {slow}");
            }
        }
    }
    outcome(bad == 0, format!("{checked} families, {bad} mismatches"))
}

fn parbedding_construction() -> Outcome {
    let (mut checked, mut bad) = (0, 0);
    for n in 1..=3 {
        for m in 1..=3 {
            for tuple in SetTuple::enumerate_all(n, m, true).unwrap() {
                for x in 1..=3 {
                    for fill in 0..x {
                        checked += 1;
                        let p = cube_parbedding(&tuple, x, fill).unwrap();
                        if !implication_holds(&p.source.space, &p.target.space, &p.map, &p.beta) {
                            bad += 1;
                            eprintln!("  {tuple:?} |X|={x} fill={fill}");
                        }
                    }
                }
            }
        }
    }
    outcome(bad == 0, format!("{checked} constructions, {bad} failures"))
}

// injective, and [x]_{beta(i)} = [y]_{beta(i)} implies [f x]_i = [f y]_i
fn implication_holds(
    b: &FiniteIndexedHyperspace,
    a: &FiniteIndexedHyperspace,
    f: &[usize],
    beta: &[usize],
) -> bool {
    let distinct: HashSet<usize> = f.iter().copied().collect();
    distinct.len() == f.len()
        && (0..b.size()).all(|x| {
            (0..b.size()).all(|y| {
                (0..a.n()).all(|i| !b.same_class(beta[i], x, y) || a.same_class(i, f[x], f[y]))
            })
        })
}

fn greedy_soundness() -> Outcome {
    let start = Instant::now();
    let plane = CubeStream::plane();
    let chi = greedy_coloring(&plane, AUDIT_PREFIX).unwrap();
    let cube = acceptability_audit(&plane, &chi, AUDIT_PREFIX).unwrap();
    let config = SprayConfig::new(parse_centers("0,0;1,0;0,1").unwrap()).unwrap();
    let spray = cover_with_sprays(config, AUDIT_PREFIX).unwrap().report;
    let bad = cube.violations.len() + spray.violations.len();
    let elapsed = start.elapsed();
    outcome(
        bad == 0 && elapsed <= AUDIT_LIMIT,
        format!(
            "plane: {} certificate / {} profile violations, max count {}; \
             sprays: {} certificate / {} profile violations, max count {}; {:.2}s of {}s",
            cube.certificate_violations(),
            cube.profile_violations(),
            cube.max_count(),
            spray.certificate_violations(),
            spray.profile_violations(),
            spray.max_count(),
            elapsed.as_secs_f64(),
            AUDIT_LIMIT.as_secs()
        ),
    )
}

fn pigeonhole() -> Outcome {
    let stream = collapsed(2, 1).unwrap();
    let mut pass = true;
    let mut parts = Vec::new();
    for strategy in Strategy::all(2) {
        let max_at = |len| {
            let chi = color_prefix(&stream, len, strategy).unwrap();
            acceptability_audit(&stream, &chi, len).unwrap().max_count()
        };
        let (short, long) = (max_at(PIGEONHOLE_SHORT), max_at(PIGEONHOLE_LONG));
        pass &= short >= PIGEONHOLE_THRESHOLD && long > short;
        parts.push(format!("{strategy:?}: {short} -> {long}"));
    }
    outcome(pass, parts.join(", "))
}

// direct check of the biconditional class condition
fn is_embedding(b: &FiniteIndexedHyperspace, a: &FiniteIndexedHyperspace, f: &[usize]) -> bool {
    (0..b.size()).all(|x| {
        (0..b.size()).all(|y| {
            (0..b.n()).all(|i| b.same_class(i, x, y) == a.same_class(i, f[x], f[y]))
        })
    })
}

// lexicographically first injection passing the check, if any
fn first_embedding(b: &FiniteIndexedHyperspace, a: &FiniteIndexedHyperspace) -> Option<Vec<usize>> {
    fn go(
        b: &FiniteIndexedHyperspace,
        a: &FiniteIndexedHyperspace,
        f: &mut Vec<usize>,
    ) -> bool {
        if f.len() == b.size() {
            return is_embedding(b, a, f);
        }
        for y in 0..a.size() {
            if !f.contains(&y) {
                f.push(y);
                if go(b, a, f) {
                    return true;
                }
                f.pop();
            }
        }
        false
    }
    let mut f = Vec::new();
    go(b, a, &mut f).then_some(f)
}

fn generator_pool() -> Vec<FiniteIndexedHyperspace> {
    let mut pool = Vec::new();
    for size in 1..=8 {
        pool.push(n_cube(1, size).unwrap().space);
    }
    for size in 1..=2 {
        pool.push(n_cube(2, size).unwrap().space);
    }
    pool.push(n_cube(3, 2).unwrap().space);
    for k in 2..=4 {
        pool.push(n_halfcube(2, k).unwrap().space);
    }
    pool.push(n_halfcube(3, 4).unwrap().space);
    for k in 1..=8 {
        pool.push(n_halfcube(1, k).unwrap().space);
    }
    let tuples = [
        (vec![vec![0], vec![0, 1]], vec![2, 3]),
        (vec![vec![0, 1], vec![1]], vec![2, 2]),
        (vec![vec![1], vec![0]], vec![2, 4]),
        (vec![vec![], vec![0]], vec![5]),
        (vec![vec![0, 1], vec![0, 1]], vec![2, 3]),
        (vec![vec![0], vec![1], vec![0, 1]], vec![2, 2]),
        (vec![vec![1, 2], vec![0, 2], vec![0, 1]], vec![2, 2, 2]),
    ];
    for (sets, sizes) in tuples {
        let m = sizes.len();
        let tuple = SetTuple::new(m, sets).unwrap();
        pool.push(make_cube(&CubeShape::finite(tuple, &sizes).unwrap()).unwrap().space);
    }
    let half = SetTuple::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
    pool.push(make_halfcube(&half, 4).unwrap().space);
    pool.push(make_halfcube(&half, 5).unwrap().space);
    pool
}

fn search_completeness() -> Outcome {
    let pool = generator_pool();
    let (mut checked, mut bad) = (0, 0);
    for b in pool.iter().filter(|s| s.size() <= 5) {
        for a in pool.iter().filter(|s| s.size() <= 8 && s.n() == b.n()) {
            checked += 1;
            let expected = first_embedding(b, a);
            let found = match find_embedding(b, a, &mut NodeBudget::unlimited()).unwrap() {
                Search::Found(w) => Some(w.map),
                Search::NotFound => None,
                Search::Indeterminate => unreachable!("unlimited budget"),
            };
            if found != expected {
                bad += 1;
                eprintln!("  |B|={} |A|={}: search {found:?}, oracle {expected:?}", b.size(), a.size());
            }
        }
    }
    outcome(bad == 0, format!("{checked} pairs, {bad} disagreements"))
}

fn cli_output(args: &[String]) -> (Option<i32>, Vec<u8>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_hyperspace"))
        .args(args)
        .output()
        .expect("run the binary");
    (out.status.code(), out.stdout, out.stderr)
}

fn cli_determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let path = |name: &str| dir.path().join(name).to_string_lossy().into_owned();
    let write = |name: &str, text: &str| std::fs::write(dir.path().join(name), text).unwrap();
    write("family.txt", "n=4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    write("tuple.txt", "m=3\n1 2\n0 2\n0 1\n");
    let cube = cli_output(&["cube".into(), "--n".into(), "2".into(), "--size".into(), "3".into()]);
    std::fs::write(dir.path().join("a.json"), &cube.1).unwrap();
    let small = cli_output(&["cube".into(), "--n".into(), "2".into(), "--size".into(), "2".into()]);
    std::fs::write(dir.path().join("b.json"), &small.1).unwrap();

    let commands: Vec<Vec<String>> = vec![
        vec!["depth".into(), path("family.txt")],
        vec!["tau".into(), path("family.txt")],
        vec!["dandy".into(), path("family.txt"), "--d".into(), "3".into()],
        vec!["induced".into(), path("tuple.txt")],
        vec!["color".into(), "--N".into(), "500".into()],
        vec!["audit".into(), "--N".into(), "300".into(), "--stream".into(), "spray".into(), "--centers".into(), "0,0;1,0;0,1".into()],
        vec!["audit".into(), "--N".into(), "200".into(), "--stream".into(), "cube".into(), "--tuple".into(), path("tuple.txt")],
        vec!["cube".into(), "--tuple".into(), path("tuple.txt"), "--size".into(), "2".into()],
        vec!["halfcube".into(), "--n".into(), "3".into(), "--k".into(), "5".into()],
        vec!["embed".into(), "--from".into(), path("b.json"), "--to".into(), path("a.json"), "--kind".into(), "weak".into()],
        vec!["embed".into(), "--from".into(), path("b.json"), "--to".into(), path("a.json"), "--kind".into(), "parbed".into(), "--budget".into(), "1e5".into()],
        vec!["fcn".into(), path("a.json"), "--max-factor".into(), "2".into(), "--nonempty".into()],
        vec!["spray-cover".into(), "--centers".into(), "0,0;1,0;0,1".into(), "--N".into(), "2000".into(), "--plot".into(), path("plot.csv")],
        vec!["check-identities".into(), "--n-max".into(), "3".into(), "--samples".into(), "200".into(), "--seed".into(), "7".into()],
    ];
    let mut differing = Vec::new();
    let mut failed = Vec::new();
    for args in &commands {
        let first = cli_output(args);
        let plot_first = std::fs::read(dir.path().join("plot.csv")).ok();
        let second = cli_output(args);
        let plot_second = std::fs::read(dir.path().join("plot.csv")).ok();
        if first.0 != Some(0) {
            failed.push(format!("{} exited {:?}: {}", args[0], first.0, String::from_utf8_lossy(&first.2)));
        }
        if first != second || plot_first != plot_second {
            differing.push(args[0].clone());
        }
    }
    let exists = Path::new(&path("plot.csv")).exists();
    outcome(
        differing.is_empty() && failed.is_empty() && exists,
        format!(
            "{} commands, differing: {differing:?}, failed: {failed:?}",
            commands.len()
        ),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("depth formula on uniform families", depth_formula),
        ("tuple transversal number equals depth of I(S)", tuple_identity),
        ("dandy to depth d iff d below depth", dandy_equivalence),
        ("restriction to a transversal drops depth by at most one", restriction_inequality),
        ("depth solver matches brute force", depth_cross_validation),
        ("cube parbedding construction verifies", parbedding_construction),
        ("greedy coloring audits clean at N=10^4", greedy_soundness),
        ("shared infinite class forces large counts", pigeonhole),
        ("embedding search matches exhaustive enumeration", search_completeness),
        ("CLI output is deterministic", cli_determinism),
    ];
    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let result = run();
        let status = if result.pass { "PASS" } else { "FAIL" };
        println!("{status} {:>2} {name}: {}", k + 1, result.detail);
        failures += usize::from(!result.pass);
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}

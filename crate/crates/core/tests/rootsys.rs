use orbitkit::{Family, Root, RootSystem, RootSystemId};
use proptest::prelude::*;

const ALL: &[&str] = &[
    "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B2", "B3", "B4", "B5", "B6", "B7", "B8", "C2",
    "C3", "C4", "C5", "C6", "C7", "C8", "D2", "D3", "D4", "D5", "D6", "D7", "D8", "E6", "E7", "E8",
    "F4", "G2",
];

fn sys(s: &str) -> RootSystem {
    RootSystem::new(s.parse().unwrap())
}

fn classical_count(id: RootSystemId) -> usize {
    let n = id.rank;
    match (id.family, n) {
        (Family::A, _) => n * (n + 1) / 2,
        (Family::B | Family::C, _) => n * n,
        (Family::D, _) => n * (n - 1),
        (Family::E, 6) => 36,
        (Family::E, 7) => 63,
        (Family::E, 8) => 120,
        (Family::F, _) => 24,
        (Family::G, _) => 6,
        _ => unreachable!(),
    }
}

#[test]
fn counts_and_sign_dichotomy() {
    for id in ALL {
        let rs = sys(id);
        assert_eq!(rs.num_positive(), classical_count(rs.id()), "{id}");
        for r in rs.positives() {
            let d = rs.dcoords(r);
            let f = rs.fcoords(r);
            assert!(f.iter().all(|&c| c >= 0) && f.iter().any(|&c| c > 0));
            assert_eq!(rs.is_root(&d), Some(r));
            let neg: Vec<i32> = d.iter().map(|x| -x).collect();
            let nr = rs.is_root(&neg).unwrap();
            assert!(!nr.is_positive());
            assert_eq!(nr.negated(), r);
            // Fundamental coordinates reproduce the doubled coordinates.
            let mut v = vec![0; d.len()];
            for (c, a) in f.iter().zip(rs.fundamentals()) {
                for (x, y) in v.iter_mut().zip(rs.dcoords(a)) {
                    *x += c * y;
                }
            }
            assert_eq!(v, d);
        }
    }
}

#[test]
fn closed_under_positive_sums() {
    for id in ALL {
        let rs = sys(id);
        let all: Vec<Root> = rs.positives().collect();
        for &a in &all {
            for &b in &all {
                let s: Vec<i32> = rs
                    .dcoords(a)
                    .iter()
                    .zip(rs.dcoords(b))
                    .map(|(x, y)| x + y)
                    .collect();
                match rs.is_root(&s) {
                    Some(c) => {
                        assert!(c.is_positive());
                        assert_eq!(rs.add(a, b).unwrap(), Some(c));
                    }
                    None => assert_eq!(rs.add(a, b).unwrap(), None),
                }
            }
        }
    }
}

#[test]
fn precedes_is_a_strict_partial_order() {
    for id in [
        "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2",
    ] {
        let rs = sys(id);
        let all: Vec<Root> = rs.positives().collect();
        for &a in &all {
            assert!(!rs.precedes(a, a).unwrap());
            for &b in &all {
                if rs.precedes(a, b).unwrap() {
                    assert!(!rs.precedes(b, a).unwrap());
                    for &c in &all {
                        if rs.precedes(b, c).unwrap() {
                            assert!(rs.precedes(a, c).unwrap(), "{id}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn simply_laced_singular_pairs_have_positive_inner_products() {
    for id in ["A3", "A5", "D4", "D5", "E6", "E7"] {
        let rs = sys(id);
        for b in rs.positives() {
            for p in rs.singular_set(b).unwrap() {
                assert!(rs.inner4(p.alpha, b).unwrap() > 0);
                assert!(rs.inner4(p.gamma, b).unwrap() > 0);
                assert!(p.alpha < p.gamma);
            }
        }
    }
}

#[test]
fn length_ratios() {
    for id in ALL {
        let rs = sys(id);
        let mut norms: Vec<i64> = rs.positives().map(|r| rs.inner4(r, r).unwrap()).collect();
        norms.sort();
        norms.dedup();
        let expected = match rs.id().family {
            Family::A | Family::D | Family::E => 1,
            _ => 2,
        };
        let expected = if rs.id().rank == 1 || (rs.id().family == Family::D && rs.id().rank == 2) {
            1
        } else {
            expected
        };
        assert_eq!(norms.len(), expected, "{id}");
        if norms.len() == 2 {
            let ratio = norms[1] / norms[0];
            let want = if rs.id().family == Family::G { 3 } else { 2 };
            assert_eq!((ratio, norms[1] % norms[0]), (want, 0), "{id}");
        }
    }
}

#[test]
fn singular_set_of_b3_e1() {
    let rs = sys("B3");
    let e1 = rs.is_root(&[2, 0, 0]).unwrap();
    let mut got: Vec<Vec<i32>> = rs
        .singular_roots(e1)
        .unwrap()
        .iter()
        .map(|&r| rs.dcoords(r))
        .collect();
    got.sort();
    // Brute force over all positive pairs.
    let all: Vec<Root> = rs.positives().collect();
    let mut brute = Vec::new();
    for &a in &all {
        for &c in &all {
            if rs.add(a, c).unwrap() == Some(e1) {
                brute.push(rs.dcoords(a));
            }
        }
    }
    brute.sort();
    assert_eq!(got, brute);
    assert_eq!(got.len(), 4);
}

#[test]
fn maximal_elements_examples() {
    let g2 = sys("G2");
    let a1 = g2.fundamentals()[0];
    let top = g2.positive(g2.num_positive() - 1);
    assert_eq!(g2.fcoords(top), vec![3, 2]);
    assert_eq!(g2.maximal_elements(&[a1, top]).unwrap(), vec![top]);
    assert!(g2.maximal_elements(&[]).unwrap().is_empty());
    let b3 = sys("B3");
    let d = vec![
        b3.is_root(&[2, 0, 0]).unwrap(),
        b3.is_root(&[0, 2, 2]).unwrap(),
    ];
    assert_eq!(b3.maximal_elements(&d).unwrap(), d);
    let f4 = sys("F4");
    let short = f4.is_root(&[1, -1, -1, -1]).unwrap();
    let long = f4.is_root(&[2, 0, 0, -2]).unwrap();
    assert!(f4.precedes(short, long).unwrap());
}

#[test]
fn construction_is_deterministic() {
    for id in ["E8", "F4", "B5"] {
        let a = sys(id);
        let b = sys(id);
        let da: Vec<_> = a.positives().map(|r| a.dcoords(r)).collect();
        let db: Vec<_> = b.positives().map(|r| b.dcoords(r)).collect();
        assert_eq!(da, db);
    }
}

proptest! {
    #[test]
    fn inner4_is_symmetric(idx in 0usize..ALL.len(), i in 0usize..120, j in 0usize..120, neg in any::<bool>()) {
        let rs = sys(ALL[idx]);
        let m = rs.num_positive();
        let a = rs.positive(i % m);
        let b = if neg { rs.positive(j % m).negated() } else { rs.positive(j % m) };
        prop_assert_eq!(rs.inner4(a, b).unwrap(), rs.inner4(b, a).unwrap());
        prop_assert_eq!(rs.inner4(a, b.negated()).unwrap(), -rs.inner4(a, b).unwrap());
        let d4 = rs.dcoords(a).iter().zip(rs.dcoords(b)).map(|(x, y)| (*x as i64) * (y as i64)).sum::<i64>();
        prop_assert_eq!(rs.inner4(a, b).unwrap() == 0, d4 == 0);
    }
}

use orbitkit::enumerate::decompose_components;
use orbitkit::weyl::{involution_of, involution_stats, reflect, WeylElement};
use orbitkit::{enumerate_orthogonal_subsets, Root, RootSystem};

fn sys(s: &str) -> RootSystem {
    RootSystem::new(s.parse().unwrap())
}

fn all_roots(rs: &RootSystem) -> Vec<Root> {
    rs.positives()
        .chain(rs.positives().map(|r| r.negated()))
        .collect()
}

/// Reduced-word length by descent: while some simple root is sent negative,
/// multiply by its reflection.
fn descent_length(rs: &RootSystem, w: &WeylElement) -> usize {
    let simple: Vec<WeylElement> = rs
        .fundamentals()
        .into_iter()
        .map(|a| WeylElement::reflection(rs, a).unwrap())
        .collect();
    let mut w = w.clone();
    let mut steps = 0;
    while !w.is_identity() {
        let k = rs
            .fundamentals()
            .iter()
            .position(|&a| !w.apply(rs, a).unwrap().is_positive())
            .expect("non-identity element without a descent");
        w = w.compose(&simple[k]);
        steps += 1;
    }
    steps
}

#[test]
fn involutions_square_to_identity_and_preserve_inner_products() {
    for id in [
        "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4",
    ] {
        let rs = sys(id);
        let roots = all_roots(&rs);
        for d in enumerate_orthogonal_subsets(&rs, 4, false) {
            let w = involution_of(&rs, &d).unwrap();
            assert!(w.compose(&w).is_identity(), "{id}");
            for &a in &roots {
                let wa = w.apply(&rs, a).unwrap();
                assert_eq!(w.apply(&rs, a.negated()).unwrap(), wa.negated());
                for &b in rs.fundamentals().iter() {
                    assert_eq!(
                        rs.inner4(wa, w.apply(&rs, b).unwrap()).unwrap(),
                        rs.inner4(a, b).unwrap()
                    );
                }
            }
            for &b in &d {
                assert_eq!(w.apply(&rs, b).unwrap(), b.negated());
            }
        }
    }
}

#[test]
fn inversion_count_matches_descent_length() {
    for id in ["A3", "A4", "B3", "C3", "D4", "G2", "F4"] {
        let rs = sys(id);
        for d in enumerate_orthogonal_subsets(&rs, 4, false) {
            let st = involution_stats(&rs, &d).unwrap();
            assert_eq!(st.l, descent_length(&rs, &st.sigma), "{id}");
            assert_eq!(st.s, d.len());
            assert_eq!(st.bound, st.l - st.s);
        }
    }
}

/// `l(r_b) - 1 = |S(b)|` for every positive root of every system of rank at
/// most 6, with one exception: in G2 the short root `2a1 + a2` has two
/// singular roots but `l(r_b) = 5`.
#[test]
fn single_reflection_length_counts_singular_roots() {
    for id in [
        "A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "B6", "C2", "C3", "C4", "C5",
        "C6", "D2", "D3", "D4", "D5", "D6", "E6", "F4", "G2",
    ] {
        let rs = sys(id);
        for b in rs.positives() {
            let st = involution_stats(&rs, &[b]).unwrap();
            let singular = rs.singular_roots(b).unwrap().len();
            if id == "G2" && rs.fcoords(b) == [2, 1] {
                assert_eq!((st.l, singular), (5, 2));
            } else {
                assert_eq!(st.bound, singular, "{id} {:?}", rs.fcoords(b));
            }
        }
    }
}

#[test]
fn reflection_formula() {
    let g2 = sys("G2");
    let a = g2.fundamentals();
    assert_eq!(g2.fcoords(reflect(&g2, a[0], a[1]).unwrap()), vec![3, 1]);
    let f4 = sys("F4");
    for a in f4.positives() {
        for v in all_roots(&f4) {
            let w = reflect(&f4, a, v).unwrap();
            let k = 2 * f4.inner4(v, a).unwrap() / f4.inner4(a, a).unwrap();
            let want: Vec<i32> = f4
                .dcoords(v)
                .iter()
                .zip(f4.dcoords(a))
                .map(|(x, y)| x - k as i32 * y)
                .collect();
            assert_eq!(f4.dcoords(w), want);
        }
    }
}

#[test]
fn length_is_additive_over_components() {
    let d2 = sys("D2");
    let d: Vec<Root> = d2.positives().collect();
    let comps = decompose_components(&d2, &d);
    let total = involution_stats(&d2, &d).unwrap().l;
    let parts: usize = comps
        .iter()
        .map(|c| involution_stats(&d2, &c.d).unwrap().l)
        .sum();
    assert_eq!(total, parts);
    assert_eq!(total, 2);
}

/// No product of fewer than `|D|` reflections equals `sigma_D`.
#[test]
fn reflection_length_is_the_subset_size() {
    for id in ["A2", "A3", "B2", "B3", "C3", "G2"] {
        let rs = sys(id);
        let refl: Vec<WeylElement> = rs
            .positives()
            .map(|a| WeylElement::reflection(&rs, a).unwrap())
            .collect();
        let mut by_len: Vec<Vec<WeylElement>> = vec![vec![WeylElement::identity(&rs)]];
        for k in 1..3 {
            let next: Vec<WeylElement> = by_len[k - 1]
                .iter()
                .flat_map(|w| refl.iter().map(move |r| w.compose(r)))
                .collect();
            by_len.push(next);
        }
        for d in enumerate_orthogonal_subsets(&rs, 3, false) {
            let w = involution_of(&rs, &d).unwrap();
            for prods in &by_len[..d.len().min(by_len.len())] {
                assert!(
                    !prods.contains(&w),
                    "{id}: sigma_D with |D|={} is a shorter product",
                    d.len()
                );
            }
        }
    }
}

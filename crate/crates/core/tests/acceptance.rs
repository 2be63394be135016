//! End-to-end acceptance suite.  Each test covers one exit criterion and
//! prints a single `criterion N (...): PASS` or `FAIL` line (visible with
//! `--nocapture`); a failing criterion also fails the test.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, resume_unwind, UnwindSafe};

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use hesstorus::classify::{
    brute_f2_gkm, brute_f2_tstable, classify_f2_gkm, classify_f2_tstable, max_subtorus_fk,
    moment_graph, union_of_schubert_check, CellStatus, StabilityStatus,
};
use hesstorus::combinat::{
    enumerate_hessenberg_functions, HessenbergFunction, Permutation, SkeletalNilpotent,
};
use hesstorus::exactla::{
    column_system, in_span, normalize_schubert, verify_constraint, FlagMatrix, RationalMatrix,
};
use hesstorus::hess::{
    column_test, curve_in_variety, curve_in_variety_with_samples, member, member_fixed_point,
};
use hesstorus::sample::{
    random_cell_point, random_invertible, random_nonzero, random_permutation, random_skeletal,
    random_upper_triangular, rng_from_seed,
};
use hesstorus::torus::{canonical_k, subtorus_from_characters, Character, Subtorus};
use hesstorus::{rat, ratint, Rat};

fn criterion<F: FnOnce() + UnwindSafe>(number: u8, name: &str, body: F) {
    match catch_unwind(body) {
        Ok(()) => println!("criterion {number} ({name}): PASS"),
        Err(cause) => {
            println!("criterion {number} ({name}): FAIL");
            resume_unwind(cause);
        }
    }
}

fn cols(cs: &[&[i64]]) -> RationalMatrix {
    RationalMatrix::from_columns(
        cs.iter()
            .map(|c| c.iter().map(|&x| ratint(x)).collect())
            .collect(),
    )
    .unwrap()
}

fn random_member(
    x: &SkeletalNilpotent,
    h: &HessenbergFunction,
    rng: &mut ChaCha8Rng,
) -> FlagMatrix {
    let member_perms: Vec<Permutation> = Permutation::all(x.n())
        .filter(|w| member_fixed_point(w, x, h))
        .collect();
    loop {
        let w = &member_perms[rng.gen_range(0..member_perms.len())];
        let g = random_cell_point(w, rng);
        if member(g.matrix(), x, h).unwrap() {
            return g;
        }
    }
}

#[test]
fn criterion_1_stability_classification() {
    criterion(1, "T-stability classification, n = 4..7", || {
        for n in 4..=7 {
            let x = SkeletalNilpotent::fk(n, 2).unwrap();
            for h in enumerate_hessenberg_functions(n).unwrap() {
                let fast = classify_f2_tstable(&h).unwrap();
                let slow = brute_f2_tstable(&h, 12, 3).unwrap();
                assert_eq!(fast.status, slow.status, "n = {n}, h = {h:?}");
                if let StabilityStatus::NotTStable { table_row, .. } = &slow.status {
                    assert!((1..=4).contains(table_row));
                    let g = slow.certificate.as_ref().expect("unstable certificate");
                    assert!(member(g.matrix(), &x, &h).unwrap());
                    let report = column_test(g, &x, &h).unwrap();
                    assert!(report.full_torus_obstructed, "n = {n}, h = {h:?}");
                }
            }
        }
    });
}

#[test]
fn criterion_2_gkm_classification() {
    criterion(2, "GKM classification, n = 4..6", || {
        for n in 4..=6 {
            for h in enumerate_hessenberg_functions(n).unwrap() {
                assert_eq!(
                    classify_f2_gkm(&h).unwrap(),
                    brute_f2_gkm(&h).unwrap().0,
                    "n = {n}, h = {h:?}"
                );
            }
        }
    });
}

#[test]
fn criterion_3_canonical_torus_action() {
    criterion(3, "canonical subtorus codimension and action", || {
        let mut rng = rng_from_seed(31);
        // Codimension formula across a 200-case generator.
        for _ in 0..200 {
            let n = rng.gen_range(3..=6);
            let x = random_skeletal(n, &mut rng);
            let k = canonical_k(&x);
            assert_eq!(k.codim(), x.nonzero_rows().len() - 1, "x = {x:?}");
        }
        // Membership preservation: 30 random varieties, 10 members each,
        // 100 random points of K applied to every member.
        for _ in 0..30 {
            let n = rng.gen_range(3..=5);
            let x = random_skeletal(n, &mut rng);
            let all = enumerate_hessenberg_functions(n).unwrap();
            let h = all[rng.gen_range(0..all.len())].clone();
            let k = canonical_k(&x);
            let points: Vec<Vec<Rat>> =
                (0..100).map(|_| k.rational_point(&mut rng)).collect();
            for _ in 0..10 {
                let g = random_member(&x, &h, &mut rng);
                for t in &points {
                    let tg = g.matrix().scale_rows(t).unwrap();
                    assert!(member(&tg, &x, &h).unwrap(), "x = {x:?}, h = {h:?}");
                }
            }
        }
    });
}

#[test]
fn criterion_4_maximal_subtorus_for_fk() {
    criterion(4, "maximal subtorus for F_k at the banded h", || {
        for n in 4..=6 {
            let h = HessenbergFunction::banded(n);
            for k in 1..n {
                let v = max_subtorus_fk(k, &h, n).unwrap();
                assert!(v.determined, "n = {n}, k = {k}");
                assert!(v.certified, "n = {n}, k = {k}");
                let x = SkeletalNilpotent::fk(n, k).unwrap();
                assert_eq!(v.lower, canonical_k(&x), "n = {n}, k = {k}");
                assert_eq!(v.upper, v.lower);
            }
            let peterson = max_subtorus_fk(n - 1, &h, n).unwrap();
            assert_eq!(peterson.upper.codim(), n - 2);
        }
    });
}

#[test]
fn criterion_5_worked_example_systems() {
    criterion(5, "worked example column systems and images", || {
        let x = SkeletalNilpotent::fk(4, 2).unwrap();
        let h = HessenbergFunction::new(vec![3, 3, 4, 4]).unwrap();

        // The three Schubert-form matrices, with distinct values standing
        // in for the free entries a_ij.
        let m1 = normalize_schubert(&cols(&[
            &[2, 5, 1, 0],
            &[3, 7, 0, 1],
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
        ]))
        .unwrap();
        let m2 = normalize_schubert(&cols(&[
            &[2, 5, 11, 1],
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
        ]))
        .unwrap();
        let m3 = normalize_schubert(&cols(&[
            &[2, 5, 11, 1],
            &[3, 7, 1, 0],
            &[13, 1, 0, 0],
            &[1, 0, 0, 0],
        ]))
        .unwrap();

        // X maps e3 to e1 and e4 to e2; the images, entry for entry.
        let image = |m: &FlagMatrix| -> Vec<Vec<Rat>> {
            (1..=4).map(|j| x.apply(&m.column(j))).collect()
        };
        let e = |v: &[i64]| -> Vec<Rat> { v.iter().map(|&c| ratint(c)).collect() };
        assert_eq!(
            image(&m1),
            vec![e(&[1, 0, 0, 0]), e(&[0, 1, 0, 0]), e(&[0, 0, 0, 0]), e(&[0, 0, 0, 0])]
        );
        assert_eq!(
            image(&m2),
            vec![e(&[11, 1, 0, 0]), e(&[0, 0, 0, 0]), e(&[0, 0, 0, 0]), e(&[1, 0, 0, 0])]
        );
        assert_eq!(
            image(&m3),
            vec![e(&[11, 1, 0, 0]), e(&[1, 0, 0, 0]), e(&[0, 0, 0, 0]), e(&[0, 0, 0, 0])]
        );

        // First-column systems: 1x1 identity with empty B; 2x2 identity
        // with empty B; 1x1 identity against the 1x1 dependent block
        // holding the free entry a_13.
        let s1 = column_system(&m1, &x, &h, 1);
        assert_eq!(s1.a, RationalMatrix::identity(1));
        assert!(s1.b_is_empty());
        assert!(verify_constraint(&s1));

        let s2 = column_system(&m2, &x, &h, 1);
        assert_eq!(s2.a, RationalMatrix::identity(2));
        assert!(s2.b_is_empty());
        assert!(verify_constraint(&s2));

        let s3 = column_system(&m3, &x, &h, 1);
        assert_eq!(s3.a, RationalMatrix::identity(1));
        assert_eq!(s3.b.rows(), 1);
        assert_eq!(s3.b.cols(), 1);
        assert_eq!(s3.b.at(1, 1), &ratint(13));
        assert_eq!(verify_constraint(&s3), false);
    });
}

#[test]
fn criterion_6_subregular_fiber() {
    criterion(6, "subregular fiber moment graph and cells", || {
        let mut m = RationalMatrix::zeros(4, 4);
        m.set(2, 3, ratint(1));
        m.set(3, 4, ratint(1));
        let x = SkeletalNilpotent::from_matrix(&m).unwrap();
        let h = HessenbergFunction::identity(4);

        let g = moment_graph(&x, &h, &Subtorus::full(4)).unwrap();
        assert_eq!(g.vertices.len(), 4);
        assert_eq!(g.edges.len(), 3);
        let mut degrees: Vec<usize> = g
            .vertices
            .iter()
            .map(|v| g.edges.iter().filter(|e| e.a == *v || e.b == *v).count())
            .collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![1, 1, 2, 2]);

        let verdicts = union_of_schubert_check(&x, &h, 30, 6).unwrap();
        let target = Permutation::new(vec![2, 3, 1, 4]).unwrap();
        let verdict = verdicts
            .iter()
            .find(|v| v.w == target)
            .expect("cell at [2314] is met");
        match &verdict.status {
            CellStatus::ProperIntersection { witness } => {
                assert!(!member(witness.matrix(), &x, &h).unwrap());
                assert_eq!(witness.pivot_perm(), &target);
            }
            other => panic!("expected a proper intersection, got {other:?}"),
        }
    });
}

#[test]
fn criterion_7_full_operator_reduction() {
    criterion(7, "F_(n-1) varieties reduce one dimension", || {
        for n in 4..=5 {
            let x = SkeletalNilpotent::fk(n, n - 1).unwrap();
            let mut values = vec![n - 1; n];
            values[n - 1] = n;
            let h = HessenbergFunction::new(values).unwrap();

            // Fixed points are exactly the permutations fixing n.
            let fixed: Vec<Permutation> = Permutation::all(n)
                .filter(|w| member_fixed_point(w, &x, &h))
                .collect();
            let expected: Vec<Permutation> = Permutation::all(n)
                .filter(|w| w.apply(n) == n)
                .collect();
            assert_eq!(fixed, expected);
            assert_eq!(fixed.len(), (1..n).product::<usize>());

            // The moment graph matches the full flag variety one dimension
            // down under the relabeling that drops the fixed last letter.
            let big = moment_graph(&x, &h, &Subtorus::full(n)).unwrap();
            let small_x = SkeletalNilpotent::fk(n - 1, 1).unwrap();
            let small_h = HessenbergFunction::full(n - 1);
            let small = moment_graph(&small_x, &small_h, &Subtorus::full(n - 1)).unwrap();

            let truncate = |w: &Permutation| -> Vec<usize> {
                assert_eq!(w.apply(n), n);
                w.images()[..n - 1].to_vec()
            };
            let big_edges: BTreeSet<(Vec<usize>, Vec<usize>, Vec<i64>)> = big
                .edges
                .iter()
                .map(|e| {
                    let exps = e.weight.exps();
                    assert_eq!(exps[n - 1], 0);
                    (truncate(&e.a), truncate(&e.b), exps[..n - 1].to_vec())
                })
                .collect();
            let small_edges: BTreeSet<(Vec<usize>, Vec<usize>, Vec<i64>)> = small
                .edges
                .iter()
                .map(|e| {
                    (
                        e.a.images().to_vec(),
                        e.b.images().to_vec(),
                        e.weight.exps().to_vec(),
                    )
                })
                .collect();
            assert_eq!(big_edges.len(), big.edges.len());
            assert_eq!(big_edges, small_edges, "n = {n}");
        }
    });
}

#[test]
fn criterion_8_property_suites() {
    criterion(8, "randomized property suites, 200 instances each", || {
        let mut rng = rng_from_seed(81);
        let random_h = |n: usize, rng: &mut ChaCha8Rng| -> HessenbergFunction {
            let all = enumerate_hessenberg_functions(n).unwrap();
            all[rng.gen_range(0..all.len())].clone()
        };
        let random_diag = |n: usize, rng: &mut ChaCha8Rng| -> Vec<Rat> {
            (0..n).map(|_| random_nonzero(rng)).collect()
        };

        // Membership depends only on the flag.
        for _ in 0..200 {
            let n = rng.gen_range(3..=5);
            let x = random_skeletal(n, &mut rng);
            let h = random_h(n, &mut rng);
            let g = random_invertible(n, &mut rng);
            let b = random_upper_triangular(n, &mut rng);
            let reference = member(&g, &x, &h).unwrap();
            assert_eq!(member(&g.mul(&b).unwrap(), &x, &h).unwrap(), reference);
            let normalized = normalize_schubert(&g).unwrap();
            assert_eq!(member(normalized.matrix(), &x, &h).unwrap(), reference);
        }

        // Diagonal action is conjugation of the operator.
        for _ in 0..200 {
            let n = rng.gen_range(3..=5);
            let x = random_skeletal(n, &mut rng);
            let h = random_h(n, &mut rng);
            let g = random_invertible(n, &mut rng);
            let t = random_diag(n, &mut rng);
            assert_eq!(
                member(&g.scale_rows(&t).unwrap(), &x, &h).unwrap(),
                member(&g, &x.conj_by_diag(&t).unwrap(), &h).unwrap()
            );
        }

        // Conjugating by a permutation preserves membership.
        for _ in 0..200 {
            let n = rng.gen_range(3..=5);
            let x = random_skeletal(n, &mut rng);
            let h = random_h(n, &mut rng);
            let g = random_invertible(n, &mut rng);
            let p = FlagMatrix::permutation(&random_permutation(n, &mut rng));
            let pg = p.matrix().mul(&g).unwrap();
            let conj = p
                .matrix()
                .mul(&x.to_matrix())
                .unwrap()
                .mul(&p.matrix().transpose())
                .unwrap();
            assert_eq!(
                hesstorus::hess::member_raw(&pg, &conj, &h).unwrap(),
                member(&g, &x, &h).unwrap()
            );
        }

        // Schubert normalization is idempotent and span-preserving.
        for _ in 0..200 {
            let n = rng.gen_range(3..=5);
            let g = random_invertible(n, &mut rng);
            let once = normalize_schubert(&g).unwrap();
            let twice = normalize_schubert(once.matrix()).unwrap();
            assert_eq!(once.matrix(), twice.matrix());
            for m in 1..=n {
                let original = g.column_prefix(m);
                let normalized = once.matrix().column_prefix(m);
                for j in 1..=m {
                    assert!(in_span(&original, &normalized.column(j)).is_some());
                    assert!(in_span(&normalized, &original.column(j)).is_some());
                }
            }
        }

        // Subtorus construction saturates its character lattice.
        for _ in 0..200 {
            let n = rng.gen_range(3..=6);
            let chars: Vec<Character> = (0..rng.gen_range(1..=3))
                .map(|_| Character::new((0..n).map(|_| rng.gen_range(-3i64..=3)).collect()))
                .collect();
            let doubled: Vec<Character> = chars
                .iter()
                .map(|c| Character::new(c.exps().iter().map(|e| 2 * e).collect()))
                .collect();
            assert_eq!(
                subtorus_from_characters(n, &chars).unwrap(),
                subtorus_from_characters(n, &doubled).unwrap()
            );
        }

        // Curve membership is independent of the sample set.
        for _ in 0..200 {
            let n = rng.gen_range(3..=5);
            let x = random_skeletal(n, &mut rng);
            let h = random_h(n, &mut rng);
            let members: Vec<Permutation> = Permutation::all(n)
                .filter(|w| member_fixed_point(w, &x, &h))
                .collect();
            let w = &members[rng.gen_range(0..members.len())];
            let a = rng.gen_range(1..n);
            let b = rng.gen_range(a + 1..=n);
            let default = curve_in_variety(w, (a, b), &x, &h).unwrap();
            let alt: Vec<Rat> = (0..=n as i64).map(|i| ratint(5 + 2 * i) + rat(1, 3)).collect();
            assert_eq!(
                curve_in_variety_with_samples(w, (a, b), &x, &h, &alt).unwrap(),
                default
            );
        }
    });
}

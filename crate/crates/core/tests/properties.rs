use proptest::prelude::*;

use hclab::cylinder::{check_cylindrical, HopfCrossedCylinder};
use hclab::linalg::DEFAULT_DIM_CAP as CAP;
use hclab::report::{run_command, Command};
use hclab::scenario::{parse_scenario, Scenario};
use hclab::spectral::{compute_e1, compute_e2};

// C2xC2 with (x1,x2) stored as 2*x1 + x2, so the product is xor
const KLEIN_SIGN: [i64; 16] = [1, 1, 1, 1, 1, 1, -1, -1, 1, 1, 1, 1, 1, 1, -1, -1];

fn coboundary(f: &[i64; 4], twist: bool) -> Vec<String> {
    let mut out = Vec::new();
    for x in 0..4 {
        for y in 0..4 {
            let (n, d) = (f[x] * f[y], f[x ^ y]);
            let s = if twist { KLEIN_SIGN[x * 4 + y] } else { 1 };
            out.push(format!("{}/{}", s * n, d));
        }
    }
    out
}

fn klein_text(values: &[String], max: usize) -> String {
    format!(
        "name = random\nfield = Q\n[hopf]\nkind = group, group = C2xC2\n[cocycle]\nkind = group_table\nvalues = {}\n\
         [algebra]\nkind = ground\n[action]\nkind = trivial\n[compute]\nmax_degree = {max}, max_p = {max}, max_q = {max}\n",
        values.join(" ")
    )
}

fn unit() -> impl Strategy<Value = i64> {
    prop_oneof![1i64..4, -3i64..0]
}

fn cochain() -> impl Strategy<Value = [i64; 4]> {
    (unit(), unit(), unit()).prop_map(|(a, b, c)| [1, a, b, c])
}

fn cylinder(s: &Scenario) -> HopfCrossedCylinder {
    let b = s.build().unwrap();
    HopfCrossedCylinder::new(b.action, b.cocycle).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn cohomologous_cocycles_give_the_same_cyclic_homology(f in cochain(), twist in any::<bool>()) {
        let s = parse_scenario(&klein_text(&coboundary(&f, twist), 2)).unwrap();
        let r = run_command(Command::Hc, &s);
        prop_assert!(r.passed(), "{:?}", r.checks);
        let hc = &r.homology.iter().find(|t| t.name == "HC(A#H)").unwrap().dims;
        // untwisted: Q[C2xC2] = Q^4; twisted: M2(Q)
        let expected = if twist { vec![1, 0, 1] } else { vec![4, 0, 4] };
        prop_assert_eq!(hc, &expected);
    }

    #[test]
    fn cylindrical_identities_hold_for_random_cocycles(f in cochain(), twist in any::<bool>()) {
        let s = parse_scenario(&klein_text(&coboundary(&f, twist), 1)).unwrap();
        prop_assert!(check_cylindrical(&cylinder(&s), 1, 1).is_ok());
    }

    #[test]
    fn semisimple_second_page_is_bounded_and_concentrated(f in cochain(), twist in any::<bool>()) {
        let s = parse_scenario(&klein_text(&coboundary(&f, twist), 1)).unwrap();
        let c = cylinder(&s);
        let e1 = compute_e1(&c, 1, 1, CAP).unwrap();
        let e2 = compute_e2(&c, 1, 1, CAP).unwrap();
        for p in 0..=1 {
            for q in 0..=1 {
                prop_assert!(e2.get(p, q) <= e1.get(p, q));
                if p > 0 {
                    prop_assert_eq!(e1.get(p, q), 0);
                }
            }
        }
    }

    #[test]
    fn scenarios_survive_emit_and_parse(
        f in cochain(),
        twist in any::<bool>(),
        max in 0usize..4,
        cap in 1usize..100_000,
        name in "[a-z][a-z0-9_]{0,8}",
    ) {
        let mut s = parse_scenario(&klein_text(&coboundary(&f, twist), max)).unwrap();
        s.name = Some(name);
        s.compute.cap = cap;
        s.compute.max_p = max + 1;
        let again = parse_scenario(&s.emit()).unwrap();
        prop_assert_eq!(again, s);
    }

    #[test]
    fn breaking_normality_is_an_input_error(f in cochain(), k in 0usize..4) {
        let mut values = coboundary(&f, false);
        values[k] = "2".into();
        prop_assert!(parse_scenario(&klein_text(&values, 1)).is_err());
    }
}

use chenforms::chen::{QuadratureConfig, Word};
use chenforms::group_algebra::*;
use chenforms::higher_order::*;
use chenforms::hodge::*;
use chenforms::modular_letters::*;
use num_bigint::BigInt;
use num_complex::Complex64;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn basis_letters() -> Vec<Letter> {
    let cusp = builtin_form("cusp11", 400).unwrap();
    let eis = builtin_form("eis11", 400).unwrap();
    vec![
        Letter::form(cusp.clone(), Orientation::Hol),
        Letter::form(cusp, Orientation::Antihol),
        Letter::form(eis, Orientation::Hol),
    ]
}

fn x0() -> Complex64 {
    c(0.0, 2.0)
}

#[test]
fn psi_is_constant_and_factorizes() {
    let letters = basis_letters();
    let hol = [letters[0].clone(), letters[2].clone()];
    let els = sample_elements();
    let cfg = QuadratureConfig::modular();
    for s in 1..=2usize {
        for wi in all_tuples(2, s) {
            let word: Vec<Letter> = wi.iter().map(|&i| hol[i].clone()).collect();
            let form = HigherOrderForm::new(Word::new(word.clone()), x0(), cfg).unwrap();
            for ti in all_tuples(3, s) {
                let tuple: Vec<GroupElement> = ti.iter().map(|&i| els[i].clone()).collect();
                let values: Vec<Complex64> = default_z_samples()
                    .iter()
                    .map(|&z| form.psi_image(&tuple, z).unwrap().value)
                    .collect();
                assert!(spread(&values) <= 1e-6, "{wi:?} {ti:?} {values:?}");
                let pp = period_product(&word, &tuple, x0(), &cfg).unwrap().value;
                for v in &values {
                    assert!((v - pp).norm() <= 1e-6, "{wi:?} {ti:?}");
                }
            }
        }
    }
}

#[test]
fn eisenstein_square_on_translations() {
    let eis = basis_letters()[2].clone();
    let form = HigherOrderForm::new(Word::new(vec![eis.clone(), eis]), x0(), QuadratureConfig::modular()).unwrap();
    let t = GroupElement::translation();
    let v = form.psi_image(&[t.clone(), t], c(0.5, 2.0)).unwrap();
    assert!((v.value - c(100.0, 0.0)).norm() <= 1e-6);
}

#[test]
fn section_reproduces_targets() {
    let cfg = QuadratureConfig::modular();
    let p = period_matrix(&basis_letters(), &sample_elements(), x0(), &cfg, DEFAULT_CONDITION_BOUND).unwrap();
    let dual = dual_basis_coefficients(&p, 1).unwrap();
    let targets = [c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)];
    let sec = section_construct(&targets, &dual).unwrap();
    let table = psi_table(&p, 1, x0(), c(0.0, 3.0), &cfg).unwrap();
    assert!(table.numeric_rows.iter().all(|&b| b));
    for (got, want) in sec.psi(&table).iter().zip(&targets) {
        assert!((got - want).norm() <= 1e-5);
    }
}

#[test]
fn period_matrix_with_cusp_trivial_element_is_singular() {
    let els = vec![GroupElement::translation(), sample_elements()[1].clone(), cusp_trivial_element()];
    let r = period_matrix(&basis_letters(), &els, x0(), &QuadratureConfig::modular(), DEFAULT_CONDITION_BOUND);
    assert!(matches!(r, Err(chenforms::Error::SingularPeriodMatrix { .. })));
}

#[test]
fn mixed_tuple_rows_use_product_formula() {
    let cfg = QuadratureConfig::modular();
    let p = period_matrix(&basis_letters(), &sample_elements(), x0(), &cfg, DEFAULT_CONDITION_BOUND).unwrap();
    let table = psi_table(&p, 2, x0(), c(0.5, 2.0), &cfg).unwrap();
    assert_eq!(table.numeric_rows.iter().filter(|&&b| b).count(), 5);
    // Row (cusp hol, cusp antihol) at (B, C) is P[0][1]·P[1][2].
    let i = tuple_index(&[0, 1], 3);
    let j = tuple_index(&[1, 2], 3);
    assert_eq!(table.values[(i, j)], p.entries[(0, 1)] * p.entries[(1, 2)]);
}

#[test]
fn certificate_reports_failure() {
    let cfg = QuadratureConfig::modular();
    let eis = basis_letters()[2].clone();
    let form = HigherOrderForm::new(Word::new(vec![eis]), x0(), cfg).unwrap();
    let r = order_certificate(&form, &sample_elements(), &default_z_samples(), 5, 0.0).unwrap();
    assert!(!r.passed());
    assert!(matches!(r.check(), Err(chenforms::Error::CertificateFailure { .. })));
    let ok = order_certificate(&form, &sample_elements(), &default_z_samples(), 5, 1e-6).unwrap();
    assert!(ok.check().is_ok());
}

fn gamma0_element() -> impl Strategy<Value = GroupElement> {
    let gens = sample_elements();
    prop::collection::vec((0..gens.len(), any::<bool>()), 0..3).prop_map(move |idx| {
        idx.iter().fold(GroupElement::identity(), |acc, &(i, inv)| {
            let g = if inv { gens[i].inverse() } else { gens[i].clone() };
            &acc * &g
        })
    })
}

fn ring_element() -> impl Strategy<Value = GroupRingElement> {
    prop::collection::vec((-3i64..=3, gamma0_element()), 1..4).prop_map(|terms| {
        let mut x = GroupRingElement::zero();
        for (k, g) in terms {
            x.add_term(BigInt::from(k), g);
        }
        x
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn slash_is_a_right_action(
        x in ring_element(), y in ring_element(),
        re in -0.5f64..0.5, im in 0.5f64..2.0, weight in prop_oneof![Just(0), Just(2)]
    ) {
        let f = |z: Complex64| (z + Complex64::i()).powi(-2) + z * 0.1;
        let z = c(re, im);
        let xy = &x * &y;
        let direct = Slash::new(weight, &xy).apply(f, z);
        let sx = Slash::new(weight, &x);
        let nested = Slash::new(weight, &y).apply(|w| sx.apply(f, w), z);
        prop_assert!((direct - nested).norm() <= 1e-9 * (1.0 + direct.norm()), "{direct} {nested}");
    }

    #[test]
    fn hodge_decomposition_round_trips(
        picks in prop::collection::vec((prop::collection::vec(0usize..3, 3), -5.0f64..5.0, -5.0f64..5.0), 1..10),
        p in 0usize..=4
    ) {
        let a = basis_letters();
        let terms: Vec<(Complex64, BigradedWord)> = picks
            .iter()
            .map(|(w, re, im)| (c(*re, *im), BigradedWord::new(Word::new(w.iter().map(|&i| a[i].clone()).collect()))))
            .collect();
        let x = GradedCombination::new(terms).unwrap();
        let d = decompose(&x, p, 4 - p).unwrap();
        prop_assert!(d.lower.is_empty());
        prop_assert_eq!(d.fp_part.len() + d.conj_fq_part.len(), x.len());
        prop_assert!(d.fp_part.terms().iter().all(|(_, w)| in_filtration(w, p)));
        prop_assert!(d.conj_fq_part.terms().iter().all(|(_, w)| in_filtration(w, 4 - p)));
        prop_assert_eq!(recombine(&d).coefficient_map(), x.coefficient_map());
    }
}

#[test]
fn filtration_nesting_and_conj_bijection() {
    let a = basis_letters();
    for m in 1..=4 {
        let words = enumerate_words(&a, m);
        for w in &words {
            let bw = BigradedWord::new(Word::new(w.clone()));
            for p in 1..=m + 1 {
                if in_filtration(&bw, p) {
                    assert!(in_filtration(&bw, p - 1));
                }
            }
            let cw = conj_word(&bw);
            assert_eq!(cw.p(), m - bw.p());
            assert_eq!(conj_word(&cw), bw);
        }
    }
}

use super::*;
use crate::gauss_series::{parse_series, GaussRat};
use proptest::prelude::*;

fn s(t: &str) -> Series {
    t.parse().unwrap()
}

fn c(t: &str) -> Cone {
    t.parse().unwrap()
}

fn lv(m: u32, lead: &str, next: &str) -> QQModule {
    QQModule::validate(m, c(lead), c(next)).unwrap()
}

#[test]
fn validation_examples() {
    assert!(QQModule::validate(0, c("ray(1,0)"), c("zero")).is_ok());
    assert_eq!(QQModule::validate(0, c("ray(1,1)"), c("zero")), Err(Error::InvalidModule(Condition::RealAtZero)));
    assert_eq!(
        QQModule::validate(1, c("line(1,0)"), c("ray(1,0)")),
        Err(Error::InvalidModule(Condition::SymmetricFull))
    );
    assert_eq!(QQModule::validate(2, c("zero"), c("full")), Err(Error::InvalidModule(Condition::ZeroLeading)));
    assert!(QQModule::validate(1, c("fan[cc](1,0;0,1)"), c("line(0,1)")).is_ok());
}

#[test]
fn level_examples() {
    assert_eq!(lv(1, "ray(1,0)", "zero").level(3), Cone::Full);
    assert_eq!(QQModule::Zero.level(5), Cone::Zero);
    assert_eq!(lv(0, "ray(1,0)", "zero").level(0), c("ray(1,0)"));
    assert_eq!(lv(2, "ray(1,0)", "zero").level(1), Cone::Zero);
}

#[test]
fn psi_examples() {
    let r = c("ray(1,0)");
    assert_eq!(psi_classify(&r, 1, &s("X")).unwrap(), PsiClass::InPsi1);
    assert_eq!(psi_classify(&r, 1, &s("iX^2")).unwrap(), PsiClass::NotMember);
    // Odd valuation above 1 already puts iX^5 in the first set; it also has the witness X^3.
    assert_eq!(psi_classify(&r, 1, &s("iX^5")).unwrap(), PsiClass::InPsi1);
    assert_eq!(psi_classify(&r, 1, &s("iX^4")).unwrap(), PsiClass::InPsi2);
    assert_eq!(psi_classify(&c("line(1,0)"), 1, &s("iX^2")).unwrap(), PsiClass::InPsi2);
    assert_eq!(psi_classify(&r, 1, &s("iX^3")).unwrap(), PsiClass::InPsi1);
    assert_eq!(psi_classify(&r, 1, &s("0")).unwrap(), PsiClass::Zero);
    assert_eq!(psi_classify(&Cone::Zero, 1, &s("X^9")).unwrap(), PsiClass::NotMember);
    // ±1 both lie in a real line at level 0, so anything above level 0 qualifies.
    assert_eq!(psi_classify(&c("line(1,0)"), 0, &s("iX")).unwrap(), PsiClass::InPsi2);
    // At level 0 only real components are available: the imaginary axis gives no witness.
    assert_eq!(psi_classify(&c("line(0,1)"), 0, &s("iX")).unwrap(), PsiClass::NotMember);
    assert!(psi_classify(&r, 0, &s("i + X")).is_err());
}

#[test]
fn membership_examples() {
    let m = lv(1, "ray(1,0)", "zero");
    assert!(m.member(&s("X^3")).unwrap());
    assert!(!m.member(&s("iX^2")).unwrap());
    assert!(!m.member(&s("-X")).unwrap());
    assert!(m.member(&s("X + iX^2")).unwrap());
    assert!(!m.member(&s("1")).unwrap());
    assert!(m.member(&parse_series("0", Some(3)).unwrap()).unwrap());
    assert!(matches!(m.member(&parse_series("0", Some(2)).unwrap()), Err(Error::Precision { .. })));
    assert!(matches!(m.member(&s("i")), Err(Error::NotInA(_))));
    assert!(QQModule::Zero.member(&s("0")).unwrap());
    assert!(!QQModule::Zero.member(&s("X^3")).unwrap());
}

#[test]
fn decomposition_examples() {
    let m = lv(1, "ray(1,0)", "zero");
    let r = decompose_check(&m, &[s("X"), s("iX^2"), s("X^3")]);
    assert!(r.ok() && r.checked == 3);
    let r = decompose_check(&QQModule::Zero, &[s("0"), s("X"), s("1")]);
    assert!(r.ok() && r.checked == 3);
    let m = lv(0, "ray(1,0)", "full");
    assert!(m.member(&s("-X")).unwrap());
    assert_eq!(psi_classify(&m.level(1), 1, &s("-X")).unwrap(), PsiClass::InPsi1);
}

#[test]
fn sigma_examples() {
    let f = sigma(&lv(1, "ray(1,0)", "zero"));
    assert_eq!(f.levels, vec![(0, Cone::Zero), (1, c("ray(1,0)")), (2, Cone::Zero), (3, Cone::Full)]);
    assert_eq!(f.beyond, Cone::Full);
    assert_eq!(sigma(&QQModule::Zero), LevelFamily { levels: vec![], beyond: Cone::Zero });
    assert_eq!(sigma(&lv(0, "line(1,0)", "full")).levels, vec![(0, c("line(1,0)")), (1, Cone::Full), (2, Cone::Full)]);
}

#[test]
fn rho_examples() {
    assert_eq!(rho(&[(1, c("ray(1,0)"))]).unwrap(), lv(1, "ray(1,0)", "zero"));
    assert_eq!(rho(&[(0, Cone::Zero), (1, Cone::Zero)]).unwrap(), QQModule::Zero);
    assert_eq!(rho(&[(0, c("ray(1,0)")), (1, Cone::Full)]).unwrap(), lv(0, "ray(1,0)", "full"));
    assert_eq!(rho(&[(1, c("line(1,1)"))]).unwrap(), lv(1, "line(1,1)", "full"));
    assert!(matches!(rho(&[(0, c("ray(0,1)"))]), Err(Error::InvalidFamily(_))));
    assert!(matches!(rho(&[(1, c("ray(1,0)")), (3, c("ray(1,0)"))]), Err(Error::InvalidFamily(_))));
    assert!(matches!(rho(&[(1, c("line(1,0)")), (2, c("ray(1,0)"))]), Err(Error::InvalidFamily(_))));
    assert!(matches!(rho(&[(1, c("ray(1,0)")), (1, c("ray(1,0)"))]), Err(Error::InvalidFamily(_))));
}

#[test]
fn family_round_trips() {
    let f = LevelFamily { levels: vec![(0, Cone::Zero), (1, Cone::Zero)], beyond: Cone::Full };
    assert_eq!(f.to_module().unwrap(), QQModule::power_ideal(2));
    assert_eq!(sigma(&f.to_module().unwrap()).to_module().unwrap(), QQModule::power_ideal(2));
    let bad = LevelFamily { levels: vec![(0, c("ray(1,0)"))], beyond: Cone::Zero };
    assert!(bad.to_module().is_err());
}

#[test]
fn intersection_examples() {
    let a = lv(1, "ray(1,0)", "zero");
    let b = lv(1, "ray(0,1)", "zero");
    assert_eq!(a.intersect(&b), lv(3, "full", "full"));
    assert_eq!(a.intersect(&QQModule::Zero), QQModule::Zero);
    assert_eq!(a.intersect(&a), a);
}

#[test]
fn sum_examples() {
    let a = lv(1, "ray(1,0)", "zero");
    let b = lv(1, "ray(-1,0)", "zero");
    assert_eq!(a.sum(&b), lv(1, "line(1,0)", "full"));
    assert_eq!(a.sum(&QQModule::Zero), a);
    let sq = lv(0, "ray(1,0)", "zero");
    assert_eq!(sq.sum(&sq), sq);
    // Cancellation at level 1 fills levels 2 onwards.
    let c1 = lv(1, "ray(1,0)", "ray(0,1)");
    let c2 = lv(1, "ray(-1,1)", "zero");
    assert_eq!(c1.sum(&c2), lv(1, "fan[cc](1,0;-1,1)", "ray(0,1)"));
}

#[test]
fn symmetric_part_examples() {
    assert_eq!(lv(1, "ray(1,0)", "zero").symmetric_part(), lv(3, "full", "full"));
    assert_eq!(lv(1, "line(1,0)", "full").symmetric_part(), lv(1, "line(1,0)", "full"));
    assert_eq!(QQModule::Zero.symmetric_part(), QQModule::Zero);
    assert_eq!(lv(1, "fan[cc](1,0;-1,0)", "full").symmetric_part(), lv(1, "line(1,0)", "full"));
}

#[test]
fn ideal_examples() {
    assert!(lv(1, "line(1,0)", "full").is_ideal());
    assert!(!lv(1, "ray(1,0)", "zero").is_ideal());
    assert!(lv(1, "full", "full").is_ideal());
    assert!(lv(0, "line(1,0)", "full").is_ideal());
    // Contains X and iX with -iX missing, so multiplying by -1 leaves it.
    assert!(!lv(1, "fan[cc](1,0;-1,0)", "full").is_ideal());
}

#[test]
fn from_generators_examples() {
    assert_eq!(QQModule::from_generators(&[s("X")]).unwrap(), lv(1, "ray(1,0)", "zero"));
    assert_eq!(QQModule::from_generators(&[s("1")]).unwrap(), lv(0, "ray(1,0)", "zero"));
    assert_eq!(QQModule::from_generators(&[s("X"), s("-X")]).unwrap(), lv(1, "line(1,0)", "full"));
    assert_eq!(QQModule::from_generators(&[]).unwrap(), QQModule::Zero);
    assert_eq!(QQModule::from_generators(&[s("X"), s("iX^2 + X^3")]).unwrap(), lv(1, "ray(1,0)", "ray(0,1)"));
    assert!(matches!(QQModule::from_generators(&[s("i")]), Err(Error::NotInA(_))));
    assert!(matches!(QQModule::from_generators(&[s("0")]), Err(Error::UndefinedValuation(_))));
}

#[test]
fn finite_generation_examples() {
    assert!(!lv(1, "fan[oo](1,0;0,1)", "zero").is_fg());
    assert!(lv(1, "fan[cc](1,0;0,1)", "line(0,1)").is_fg());
    assert!(lv(0, "ray(1,0)", "zero").is_fg());
    assert!(QQModule::Zero.is_fg());

    let g = lv(0, "ray(1,0)", "zero").fg_generators().unwrap();
    let texts: Vec<String> = g.iter().map(|x| x.to_string()).collect();
    assert_eq!(texts, ["1", "X^2", "-X^2", "iX^2", "-iX^2", "X^3", "-X^3", "iX^3", "-iX^3"]);

    let m = lv(1, "line(1,0)", "full");
    let g = m.fg_generators().unwrap();
    assert_eq!(g[0].to_string(), "X");
    assert_eq!(g[1].to_string(), "-X");
    assert_eq!(QQModule::from_generators(&g).unwrap(), m);

    assert!(QQModule::Zero.fg_generators().unwrap().is_empty());
    assert_eq!(lv(1, "fan[oc](1,0;0,1)", "zero").fg_generators(), Err(Error::NotFinitelyGenerated));
}

#[test]
fn square_class_examples() {
    let d = square_class_decompose(&s("(2+3i)X^2")).unwrap();
    assert_eq!((d.alpha.to_string(), d.beta.to_string(), d.base), ("2".into(), "3".into(), 0));
    assert_eq!(d.s.truncate(2), parse_series("X", Some(2)).unwrap());
    assert_eq!(d.expand(), s("(2+3i)X^2"));

    let d = square_class_decompose(&s("iX^3")).unwrap();
    assert_eq!((d.alpha.to_string(), d.beta.to_string(), d.base), ("0".into(), "1".into(), 1));
    assert_eq!(d.s.to_string(), "X");
    assert_eq!(d.expand(), s("iX^3"));

    let d = square_class_decompose(&s("5")).unwrap();
    assert_eq!(d.s, s("1"));
    let terms = d.generator_terms().unwrap();
    assert_eq!(terms.expand(4), s("5"));

    assert!(square_class_decompose(&s("0")).is_err());
}

#[test]
fn four_square_splits() {
    for n in 0..500u64 {
        let [a, b, c2, d] = generators::four_squares(n);
        assert_eq!(a * a + b * b + c2 * c2 + d * d, n);
    }
    let q = crate::gauss_series::ratio(7, 3);
    let parts = four_squares_rational(&q).unwrap();
    let total: BigRationalSum = parts.iter().map(|p| p * p).sum();
    assert_eq!(total, q);
}

type BigRationalSum = num_rational::BigRational;

#[test]
fn text_and_json_forms() {
    let m = lv(1, "fan[co](1,0;0,1)", "line(0,1)");
    assert_eq!(m.to_string(), "levels(1; fan[co](1,0;0,1); line(0,1))");
    assert_eq!(m.to_string().parse::<QQModule>().unwrap(), m);
    let j = serde_json::to_string(&m).unwrap();
    assert_eq!(QQModule::parse_any(&j).unwrap(), m);
    let j1 = r#"{"kind":"levels","m":1,"Mm":"ray(1,0)","Mm1":{"kind":"zero"}}"#;
    assert_eq!(QQModule::parse_any(j1).unwrap(), lv(1, "ray(1,0)", "zero"));
    assert_eq!(QQModule::parse_any(r#"{"kind":"zero"}"#).unwrap(), QQModule::Zero);
    let bad = r#"{"kind":"levels","m":0,"Mm":"ray(0,1)","Mm1":"zero"}"#;
    assert_eq!(QQModule::parse_any(bad), Err(Error::InvalidModule(Condition::RealAtZero)));
    assert!(serde_json::from_str::<QQModule>(bad).is_err());
}

fn arb_series() -> impl Strategy<Value = Series> {
    let coef = (-4i64..=4, 1i64..=3, -4i64..=4, 1i64..=3).prop_map(|(a, b, c, d)| GaussRat::from_fracs((a, b), (c, d)));
    (prop::collection::vec((0u32..7, coef), 1..5), 0u32..3).prop_map(|(t, e)| {
        let p = t.iter().map(|(k, _)| *k).max().unwrap() + 1 + e;
        let x = Series::from_terms(t, p.max(8));
        // Force the constant term real so the sample lies in A.
        let c0 = x.coeff(0);
        &x - &Series::constant(GaussRat::new(num_traits::Zero::zero(), c0.im().clone()), x.precision())
    })
}

proptest! {
    #[test]
    fn square_class_form_reproduces_exactly(f in arb_series()) {
        prop_assume!(!f.is_zero_known());
        let d = square_class_decompose(&f).unwrap();
        prop_assert_eq!(d.expand(), f.clone());
        prop_assert!(d.s.in_a());
        let t = d.generator_terms().unwrap();
        for (a, _) in &t.terms { prop_assert!(a.in_a()); }
        prop_assert_eq!(t.expand(f.precision()), f);
    }

    #[test]
    fn symmetric_members_force_full_levels(x in arb_series(), k in 0usize..40) {
        prop_assume!(!x.is_zero_known());
        let cones = [c("ray(1,0)"), c("line(1,0)"), c("fan[cc](1,0;-1,0)"), c("fan[oc](1,0;-1,0)"), c("full"), c("ray(0,1)"), c("line(1,1)")];
        let m = (k % 3) as u32;
        let lead = if m == 0 { cones[k % cones.len()].restrict_real() } else { cones[k % cones.len()] };
        prop_assume!(!lead.is_zero());
        let next = if lead.is_symmetric() { Cone::Full } else { cones[(k / 3) % cones.len()] };
        let module = QQModule::validate(m, lead, next).unwrap();
        let g = x.finite_val().unwrap();
        let p = x.pan().unwrap();
        let both = module.member(&x).unwrap() && module.member(&-&x).unwrap();
        let level = module.level(g);
        prop_assert_eq!(both, level.contains(&p) && level.contains(&-&p));
        if both {
            for h in g + 1..=m + 2 { prop_assert_eq!(module.level(h), Cone::Full); }
        }
    }
}

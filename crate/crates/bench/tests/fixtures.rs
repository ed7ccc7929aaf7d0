use numsg::sylvester::ClosedForms;
use numsg::{analyze_sequence, detect_compound, sums_by_enumeration, NumericalSemigroup, DEFAULT_ENUMERATION_CAP};
use numsg_bench::fixtures;

#[test]
fn fixtures_are_compound_and_agree() {
    for f in fixtures() {
        assert!(detect_compound(&f.sequence).unwrap().is_some(), "{}", f.name);
        assert_eq!(f.name, format!("g0={}", f.sequence[0]));
        let forms = ClosedForms::new(&analyze_sequence(&f.sequence).unwrap()).unwrap();
        let s = NumericalSemigroup::from_big(&f.sequence).unwrap();
        let (s2, t2) = sums_by_enumeration(&s, 2, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(forms.sylvester(2).unwrap(), s2, "{}", f.name);
        assert_eq!(forms.alternating(2).unwrap(), t2, "{}", f.name);
    }
}

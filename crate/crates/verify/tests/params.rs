use koszul_verify::params::parse_window;
use koszul_verify::Params;
use proptest::prelude::*;

proptest! {
    #[test]
    fn nonpositive_values_are_rejected_by_name(v in i64::MIN..=0) {
        let p = Params { c: Some(v), e: Some(v), d: Some(v), ..Params::default() };
        prop_assert_eq!(p.c_or(1).unwrap_err().to_string(), "c must be a positive integer");
        prop_assert_eq!(p.e_or(1).unwrap_err().to_string(), "e must be a positive integer");
        prop_assert_eq!(p.d_or(1).unwrap_err().to_string(), "d must be a positive integer");
        prop_assert!(p.c_or(1).unwrap_err().is_input());
    }

    #[test]
    fn positive_values_pass_through(v in 1i64..1000) {
        let p = Params { c: Some(v), ..Params::default() };
        prop_assert_eq!(p.c_or(7).unwrap(), v);
        prop_assert_eq!(Params::default().c_or(v).unwrap(), v);
    }

    #[test]
    fn windows_parse_back(parts in prop::collection::vec(-50i64..50, 1..4)) {
        let text = parts.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        prop_assert_eq!(parse_window(&text).unwrap(), parts);
    }
}

//! Keeps the committed C header in sync with the exported surface: every
//! extern function and every status variant must appear in the header.

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/demchar.h"))
        .expect("committed header");

    for symbol in [
        "demchar_measure_family",
        "demchar_measure_from_word",
        "demchar_measure_free",
        "demchar_measure_entry_count",
        "demchar_measure_entry",
        "demchar_measure_mass",
        "demchar_measure_expected_degree",
        "demchar_measure_variance_finite",
        "demchar_measure_max_degree",
        "demchar_measure_to_json",
        "demchar_dimension",
        "demchar_expected_degree",
        "demchar_variance_finite",
        "demchar_max_degree",
        "demchar_limit_ratio_len",
        "demchar_verify",
        "demchar_string_free",
    ] {
        assert!(header.contains(symbol), "header is missing `{symbol}`");
    }

    for (variant, code) in [
        (
            "DEMCHAR_STATUS_OK = 0",
            demchar_ffi::DemcharStatus::Ok as i32,
        ),
        (
            "DEMCHAR_STATUS_NULL_POINTER = 1",
            demchar_ffi::DemcharStatus::NullPointer as i32,
        ),
        (
            "DEMCHAR_STATUS_INVALID_ARGUMENT = 2",
            demchar_ffi::DemcharStatus::InvalidArgument as i32,
        ),
        (
            "DEMCHAR_STATUS_ZERO_MASS = 3",
            demchar_ffi::DemcharStatus::ZeroMass as i32,
        ),
        (
            "DEMCHAR_STATUS_EMPTY_MEASURE = 4",
            demchar_ffi::DemcharStatus::EmptyMeasure as i32,
        ),
        (
            "DEMCHAR_STATUS_PARSE_ERROR = 5",
            demchar_ffi::DemcharStatus::ParseError as i32,
        ),
        (
            "DEMCHAR_STATUS_VERIFY_FAILED = 6",
            demchar_ffi::DemcharStatus::VerifyFailed as i32,
        ),
    ] {
        assert!(header.contains(variant), "header is missing `{variant}`");
        let declared: i32 = variant.rsplit('=').next().unwrap().trim().parse().unwrap();
        assert_eq!(declared, code, "status code drift for `{variant}`");
    }
}

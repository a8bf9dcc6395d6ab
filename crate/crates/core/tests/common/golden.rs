//! Checked-in CLI cases: name, arguments.

use std::path::PathBuf;

use superext::cli::run;

pub const CASES: &[(&str, &str)] = &[
    ("validate_susy", "validate tests/data/susy_line.json"),
    ("validate_susy_json", "--json validate tests/data/susy_line.json"),
    ("validate_not_jacobi", "validate tests/data/not_jacobi.json"),
    ("validate_conflict", "validate tests/data/conflict.json"),
    ("validate_bad_coeff", "validate tests/data/bad_coeff.json"),
    ("center_heis", "center tests/data/heis3.json"),
    ("center_heis_json", "--json center tests/data/heis3.json"),
    ("derivations_heis", "derivations tests/data/heis3.json"),
    ("derivations_susy_json", "derivations tests/data/susy_line.json --json"),
    ("out_heis", "out tests/data/heis3.json"),
    ("out_aff2_json", "--json out tests/data/aff2.json"),
    ("cohomology_a2", "cohomology tests/data/a2.json --degree 2"),
    ("cohomology_a2_json", "--json cohomology tests/data/a2.json --degree 2"),
    ("cohomology_a01_degree6", "cohomology tests/data/a01.json --degree 6"),
    ("cohomology_over_cap", "cohomology tests/data/a01.json --degree 7"),
    ("cohomology_sl2", "cohomology tests/data/sl2.json --degree 2"),
    (
        "cohomology_module",
        "cohomology tests/data/a10.json --degree 1 --module tests/data/nilpotent_module.json",
    ),
    (
        "section_data_heis",
        "section-data tests/data/heis_ext.json --section tests/data/heis_section.json",
    ),
    (
        "section_data_heis_json",
        "--json section-data tests/data/heis_ext.json --section tests/data/heis_section.json",
    ),
    (
        "section_data_not_a_section",
        "section-data tests/data/heis_ext.json --section tests/data/not_a_section.json",
    ),
    ("check_data_susy", "check-data tests/data/susy_datum.json"),
    ("check_data_cyclic", "check-data tests/data/gl2_cyclic_datum.json"),
    ("check_data_cyclic_json", "--json check-data tests/data/gl2_cyclic_datum.json"),
    ("build_susy", "build tests/data/susy_datum.json"),
    ("build_heis_json", "--json build tests/data/heis_datum.json"),
    ("build_cyclic", "build tests/data/gl2_cyclic_datum.json"),
    ("transform_heis", "transform tests/data/heis_datum.json --witness tests/data/a2_witness.json"),
    (
        "transform_heis_json",
        "--json transform tests/data/heis_datum.json --witness tests/data/a2_witness.json",
    ),
    (
        "equivalent_susy_self",
        "equivalent tests/data/susy_datum.json tests/data/susy_datum.json --witness tests/data/a01_zero_witness.json",
    ),
    (
        "equivalent_susy_rescaled",
        "equivalent tests/data/susy_datum.json tests/data/susy_datum_c3.json --witness tests/data/a01_zero_witness.json",
    ),
    ("split_check_heis", "split-check tests/data/heis_datum.json --solve-abelian"),
    ("split_check_trivial_json", "--json split-check tests/data/trivial_datum.json --solve-abelian"),
    (
        "split_check_witness",
        "split-check tests/data/heis_datum.json --witness tests/data/a2_witness.json",
    ),
    ("split_check_no_mode", "split-check tests/data/heis_datum.json"),
    (
        "obstruction_heis",
        "obstruction --g tests/data/a10.json --h tests/data/heis3.json --alpha-bar tests/data/zero_a10_out_heis3.json",
    ),
    (
        "obstruction_heis_json",
        "--json obstruction --g tests/data/a10.json --h tests/data/heis3.json --alpha-bar tests/data/zero_a10_out_heis3.json",
    ),
    (
        "classify_susy",
        "classify --g tests/data/a01.json --h tests/data/a10.json --alpha-bar tests/data/zero_a01_out_a10.json",
    ),
    (
        "classify_heisenberg_json",
        "--json classify --g tests/data/a2.json --h tests/data/a10.json --alpha-bar tests/data/zero_a2_out_a10.json",
    ),
    (
        "classify_sl2",
        "classify --g tests/data/a10.json --h tests/data/sl2.json --alpha-bar tests/data/zero_a10_out_sl2.json",
    ),
    (
        "classify_scaling",
        "classify --g tests/data/a10.json --h tests/data/a10.json --alpha-bar tests/data/scale_a10_out_a10.json",
    ),
    (
        "pullback_aff2",
        "pullback --g tests/data/a10.json --h tests/data/aff2.json --alpha-bar tests/data/aff2_alpha_bar.json",
    ),
    (
        "pullback_aff2_json",
        "--json pullback --g tests/data/a10.json --h tests/data/aff2.json --alpha-bar tests/data/aff2_alpha_bar.json",
    ),
    (
        "pullback_sl2",
        "pullback --g tests/data/a10.json --h tests/data/sl2.json --alpha-bar tests/data/zero_a10_out_sl2.json",
    ),
    (
        "pullback_heis_has_center",
        "pullback --g tests/data/a10.json --h tests/data/heis3.json --alpha-bar tests/data/zero_a10_out_heis3.json",
    ),
    ("unknown_command", "frobnicate tests/data/a10.json"),
];

pub fn render(args: &str) -> String {
    let out = run(std::iter::once("superext").chain(args.split_whitespace()));
    format!(
        "$ superext {args}\nexit: {}\n--- stdout\n{}--- stderr\n{}",
        out.code, out.stdout, out.stderr
    )
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
        .join(format!("{name}.txt"))
}

pub const SUBCOMMANDS: &[&str] = &[
    "validate",
    "center",
    "derivations",
    "out",
    "cohomology",
    "section-data",
    "check-data",
    "build",
    "transform",
    "equivalent",
    "split-check",
    "obstruction",
    "classify",
    "pullback",
];

pub fn covered(command: &str) -> bool {
    CASES.iter().any(|(_, args)| args.split_whitespace().any(|w| w == command))
}

//! Fixed inputs shared by the benchmarks.

use ehrhart_core::{VectorConfiguration, ZonotopeSpec};

fn spec(rows: &[&[i64]]) -> ZonotopeSpec {
    let config = VectorConfiguration::from_rows(rows.iter().map(|r| r.to_vec()).collect())
        .expect("fixture rows have equal length");
    ZonotopeSpec::standard(config)
}

/// Zonotopes of increasing size, labelled for benchmark ids.
pub fn zonotopes() -> Vec<(&'static str, ZonotopeSpec)> {
    vec![
        ("hexagon", spec(&[&[1, 0], &[0, 1], &[1, 1]])),
        ("plane-5", spec(&[&[2, 1], &[1, -1], &[0, 3], &[-2, 1], &[1, 2]])),
        ("space-5", spec(&[&[1, 0, 2], &[0, 1, -1], &[1, 1, 1], &[2, -1, 0], &[0, 2, 1]])),
        ("space-6", spec(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0], &[0, 1, 1], &[1, -1, 2]])),
    ]
}

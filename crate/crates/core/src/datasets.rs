//! Bundled reference samples.
//!
//! Set I holds 24 observations recorded in units of 10⁴ and is stored as
//! `floor(raw / 10⁴)`. Its last printed entry, 14482, breaks the increasing
//! trend of the series; `set-I-alt` replaces it with 144820, which is the
//! reading that yields the published fit. Set II holds 39 integer
//! observations used unscaled.

use crate::error::{Error, Result};
use crate::estimation::Dataset;

pub const SET_I_DIVISOR: f64 = 10_000.0;

pub const SET_I_RAW: [f64; 24] = [
    28869.0, 35838.0, 39643.0, 40950.0, 43815.0, 40611.0, 47264.0, 53419.0, 59069.0, 62291.0, 62631.0,
    68206.0, 56119.0, 53158.0, 72182.0, 81441.0, 89019.0, 92998.0, 103793.0, 96557.0, 115269.0, 126315.0,
    131893.0, 14482.0,
];

pub const SET_I_ALT_LAST: f64 = 144820.0;

pub const SET_II: [u64; 39] = [
    40, 42, 51, 62, 163, 179, 206, 222, 228, 252, 259, 282, 324, 333, 341, 366, 385, 407, 420, 431, 441,
    461, 462, 482, 517, 517, 524, 564, 567, 586, 619, 620, 621, 622, 647, 651, 686, 761, 763,
];

pub const NAMES: [&str; 3] = ["set-I", "set-I-alt", "set-II"];

pub fn set_i() -> Dataset {
    Dataset::scale_floor(SET_I_RAW.to_vec(), SET_I_DIVISOR).expect("bundled data are valid")
}

pub fn set_i_alt() -> Dataset {
    let mut raw = SET_I_RAW.to_vec();
    raw[23] = SET_I_ALT_LAST;
    Dataset::scale_floor(raw, SET_I_DIVISOR).expect("bundled data are valid")
}

pub fn set_ii() -> Dataset {
    Dataset::new(SET_II.to_vec()).expect("bundled data are valid")
}

/// Looks up a bundled dataset by name (case-insensitive). The `paper-`
/// prefix is accepted in place of `set-`.
pub fn bundled(name: &str) -> Result<Dataset> {
    let lower = name.to_ascii_lowercase();
    let key = lower.strip_prefix("paper-").or_else(|| lower.strip_prefix("set-"));
    match key {
        Some("i") => Ok(set_i()),
        Some("i-alt") => Ok(set_i_alt()),
        Some("ii") => Ok(set_ii()),
        _ => Err(Error::Domain(format!("no bundled dataset named '{name}'"))),
    }
}

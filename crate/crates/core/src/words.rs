//! Word lists compiled into the crate.

const PRIZES: &str = include_str!("../data/prizes.txt");
const NAMES: &str = include_str!("../data/names.txt");

fn lines(text: &'static str) -> impl Iterator<Item = &'static str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty())
}

/// Wheel prize labels, one per line of the data file.
pub fn prizes() -> alloc::vec::Vec<&'static str> {
    lines(PRIZES).collect()
}

/// First names used as question subjects.
pub fn names() -> alloc::vec::Vec<&'static str> {
    lines(NAMES).collect()
}

//! Parameter lists given on the command line.

use std::fmt::Display;
use std::str::FromStr;

/// A list of values: `3`, `0.5,1,2`, or an inclusive unit-step range `0..3` / `0..=3`.
#[derive(Debug, Clone, PartialEq)]
pub struct ValueList<T>(pub Vec<T>);

fn parse_one<T: FromStr>(s: &str) -> Result<T, String>
where
    T::Err: Display,
{
    s.trim().parse::<T>().map_err(|e| format!("invalid value {s:?}: {e}"))
}

trait Step: Copy + PartialOrd {
    fn next(self) -> Self;
}

impl Step for u64 {
    fn next(self) -> Self {
        self + 1
    }
}

impl Step for u32 {
    fn next(self) -> Self {
        self + 1
    }
}

impl Step for f64 {
    fn next(self) -> Self {
        self + 1.0
    }
}

fn parse_list<T>(s: &str) -> Result<Vec<T>, String>
where
    T: FromStr + Step,
    T::Err: Display,
{
    if let Some((lo, hi)) = s.split_once("..") {
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        let (lo, hi) = (parse_one::<T>(lo)?, parse_one::<T>(hi)?);
        let mut out = Vec::new();
        let mut v = lo;
        while v <= hi {
            out.push(v);
            v = v.next();
        }
        return Ok(out);
    }
    s.split(',').filter(|t| !t.trim().is_empty()).map(parse_one).collect()
}

macro_rules! list_from_str {
    ($($t:ty),*) => {$(
        impl FromStr for ValueList<$t> {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, String> {
                parse_list(s).map(ValueList)
            }
        }
    )*};
}

list_from_str!(u32, u64, f64);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_are_inclusive() {
        assert_eq!("0..3".parse::<ValueList<u64>>().unwrap().0, vec![0, 1, 2, 3]);
        assert_eq!("1..=2".parse::<ValueList<u32>>().unwrap().0, vec![1, 2]);
        assert_eq!("0.5..2".parse::<ValueList<f64>>().unwrap().0, vec![0.5, 1.5]);
    }

    #[test]
    fn lists_and_singletons() {
        assert_eq!("0.5,1,2".parse::<ValueList<f64>>().unwrap().0, vec![0.5, 1.0, 2.0]);
        assert_eq!("4".parse::<ValueList<u32>>().unwrap().0, vec![4]);
        assert_eq!("-0.5".parse::<ValueList<f64>>().unwrap().0, vec![-0.5]);
    }

    #[test]
    fn reversed_range_is_empty() {
        assert!("3..2".parse::<ValueList<u64>>().unwrap().0.is_empty());
    }

    #[test]
    fn garbage_is_rejected() {
        assert!("a..3".parse::<ValueList<u64>>().is_err());
        assert!("1,x".parse::<ValueList<f64>>().is_err());
    }
}

//! Small helpers on top of `rug::Float`.

use rug::float::Constant;
use rug::{Float, Rational};

/// π at the given precision.
pub fn pi(prec: u32) -> Float {
    Float::with_val(prec, Constant::Pi)
}

/// 2^k as a Float (k may be negative), exact.
pub fn two_pow(prec: u32, k: i64) -> Float {
    let mut f = Float::with_val(prec, 1);
    f <<= k as i32;
    f
}

/// Convert an exact rational to a Float at the given precision.
pub fn from_rational(prec: u32, q: &Rational) -> Float {
    Float::with_val(prec, q)
}

/// Float from (num, den).
pub fn from_ratio(prec: u32, num: i64, den: i64) -> Float {
    Float::with_val(prec, Rational::from((num, den)))
}

/// |a - b| < tol.
pub fn close(a: &Float, b: &Float, tol: &Float) -> bool {
    let d = Float::with_val(a.prec().max(b.prec()), a - b);
    d.abs() < *tol
}

/// Decimal string with enough digits for the stored precision.
pub fn to_decimal_string(f: &Float) -> String {
    let digits = (f.prec() as f64 * 0.3010299957) as usize + 3;
    f.to_string_radix(10, Some(digits))
}

/// Parse a decimal string at the given precision.
pub fn parse(prec: u32, s: &str) -> Result<Float, crate::Error> {
    Float::parse(s)
        .map(|p| Float::with_val(prec, p))
        .map_err(|e| crate::Error::Parse(format!("bad float literal {s:?}: {e}")))
}

/// Nearest integer as a Rational, together with the rounding residual |f - n|.
pub fn round_to_integer(f: &Float) -> (rug::Integer, Float) {
    let n = Float::with_val(f.prec(), f.round_ref());
    let resid = Float::with_val(f.prec(), f - &n).abs();
    let z = n.to_integer().unwrap_or_else(|| rug::Integer::new());
    (z, resid)
}

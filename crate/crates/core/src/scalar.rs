//! Max-plus scalars over the exact rationals.
//!
//! The semiring is `(Q ∪ {-inf}, max, +)`. Finite values are stored as
//! reduced `i128` fractions, so comparisons are exact: criticality and the
//! strict inequalities used for fundamental cells depend on it.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;

/// Exact rational number used for all finite entries.
pub type Rational = Ratio<i128>;

/// An element of the max-plus semiring: a rational or `-inf`.
///
/// The derived order puts `-inf` below every finite value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Trop(Option<Rational>);

impl Trop {
    /// The bottom element, neutral for `max` and absorbing for `+`.
    pub const NEG_INF: Trop = Trop(None);
    /// The unit for `⊙`.
    pub const ZERO: Trop = Trop(Some(Ratio::new_raw(0, 1)));

    pub fn finite(value: Rational) -> Self {
        Trop(Some(value))
    }

    pub fn int(value: i64) -> Self {
        Trop(Some(Rational::from_integer(value as i128)))
    }

    /// `numer / denom`, reduced. Panics if `denom == 0`.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Trop(Some(Rational::new(numer as i128, denom as i128)))
    }

    pub fn is_finite(&self) -> bool {
        self.0.is_some()
    }

    pub fn is_neg_inf(&self) -> bool {
        self.0.is_none()
    }

    pub fn value(&self) -> Option<Rational> {
        self.0
    }

    /// Tropical addition (maximum).
    #[inline]
    pub fn oplus(self, other: Trop) -> Trop {
        if self >= other {
            self
        } else {
            other
        }
    }

    /// Tropical multiplication (ordinary addition, `-inf` absorbing).
    #[inline]
    pub fn otimes(self, other: Trop) -> Trop {
        match (self.0, other.0) {
            (Some(a), Some(b)) => Trop(Some(a + b)),
            _ => Trop::NEG_INF,
        }
    }

    /// Adds a finite rational to this value.
    #[inline]
    pub fn shift(self, by: Rational) -> Trop {
        Trop(self.0.map(|v| v + by))
    }

    /// Ordinary negation of a finite value; `None` for `-inf` (whose
    /// negation `+inf` is not part of the semiring).
    pub fn neg(self) -> Option<Trop> {
        self.0.map(|v| Trop(Some(-v)))
    }
}

impl From<Rational> for Trop {
    fn from(value: Rational) -> Self {
        Trop(Some(value))
    }
}

impl From<i64> for Trop {
    fn from(value: i64) -> Self {
        Trop::int(value)
    }
}

impl fmt::Display for Trop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            None => f.write_str("-inf"),
            Some(v) => write_rational(f, v),
        }
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, v: &Rational) -> fmt::Result {
    if v.is_integer() {
        write!(f, "{}", v.numer())
    } else {
        write!(f, "{}/{}", v.numer(), v.denom())
    }
}

/// Lowest-terms `p/q` (or `p` when integral).
pub fn format_rational(v: &Rational) -> String {
    Trop::finite(*v).to_string()
}

/// Exact decimal expansion when it terminates (denominator of the form
/// `2^a 5^b`), e.g. `1/5 -> "0.2"`. Otherwise `None`.
pub fn decimal_expansion(v: &Rational) -> Option<String> {
    let mut d = *v.denom();
    let (mut twos, mut fives) = (0u32, 0u32);
    while d.is_even() {
        d /= 2;
        twos += 1;
    }
    while d % 5 == 0 {
        d /= 5;
        fives += 1;
    }
    if d != 1 {
        return None;
    }
    let digits = twos.max(fives);
    let scale = 10i128.checked_pow(digits)?;
    let scaled = v.numer().checked_mul(scale / v.denom())?;
    if digits == 0 {
        return Some(scaled.to_string());
    }
    let sign = if scaled.is_negative() { "-" } else { "" };
    let abs = scaled.abs().to_string();
    let padded = format!("{:0>width$}", abs, width = digits as usize + 1);
    let (int_part, frac_part) = padded.split_at(padded.len() - digits as usize);
    Some(format!("{sign}{int_part}.{frac_part}"))
}

/// Serialized as its exact string form (`"1/15"`, `"-3"`, `"-inf"`).
impl serde::Serialize for Trop {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Error returned when a scalar token cannot be parsed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseTropError(pub String);

impl fmt::Display for ParseTropError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParseTropError {}

impl FromStr for Trop {
    type Err = ParseTropError;

    /// Accepts `-inf`, `.`, integers, decimals (`-0.25`) and fractions
    /// (`1/15`), each with an optional sign. Decimals are read exactly.
    fn from_str(token: &str) -> Result<Self, Self::Err> {
        if token == "-inf" || token == "." {
            return Ok(Trop::NEG_INF);
        }
        parse_rational(token).map(Trop::finite)
    }
}

fn parse_rational(token: &str) -> Result<Rational, ParseTropError> {
    let bad = || ParseTropError(format!("invalid scalar token `{token}`"));
    if let Some((num, den)) = token.split_once('/') {
        let num: i128 = parse_signed_int(num).ok_or_else(bad)?;
        let den: i128 = parse_signed_int(den).ok_or_else(bad)?;
        if den.is_zero() {
            return Err(ParseTropError(format!("zero denominator in `{token}`")));
        }
        return Ok(Rational::new(num, den));
    }
    let (negative, body) = match token.as_bytes().first() {
        Some(b'-') => (true, &token[1..]),
        Some(b'+') => (false, &token[1..]),
        _ => (false, token),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(int_part) || !all_digits(frac_part) {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: i128 = digits.parse().map_err(|_| bad())?;
    let denom = 10i128
        .checked_pow(frac_part.len() as u32)
        .ok_or_else(bad)?;
    let value = Rational::new(numer, denom);
    Ok(if negative { -value } else { value })
}

fn parse_signed_int(s: &str) -> Option<i128> {
    let body = s.strip_prefix('+').unwrap_or(s);
    let digits = body.strip_prefix('-').unwrap_or(body);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    body.parse().ok()
}

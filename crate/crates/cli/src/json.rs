use serde_json::{Map, Number, Value};

pub const DEFAULT_DIGITS: usize = 17;

/// Significant digits for printed floats, from `KINEMATICA_PRECISION` when set.
pub fn digits() -> usize {
    std::env::var("KINEMATICA_PRECISION")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|d| (1..=17).contains(d))
        .unwrap_or(DEFAULT_DIGITS)
}

/// Decimal rendering of `x` with `digits` significant digits, trailing zeros trimmed.
pub fn format_float(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0.0".into();
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific notation");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let digits_only: String = mantissa.chars().filter(|c| *c != '.').collect();
    let digits_only = digits_only.trim_end_matches('0');
    let digits_only = if digits_only.is_empty() {
        "0"
    } else {
        digits_only
    };
    if !(-6..=20).contains(&exp) {
        let (head, tail) = digits_only.split_at(1);
        let tail = if tail.is_empty() { "0" } else { tail };
        return format!("{sign}{head}.{tail}e{exp}");
    }
    let n = digits_only.len() as i32;
    if exp < 0 {
        let zeros = "0".repeat((-exp - 1) as usize);
        format!("{sign}0.{zeros}{digits_only}")
    } else if exp + 1 >= n {
        let zeros = "0".repeat((exp + 1 - n) as usize);
        format!("{sign}{digits_only}{zeros}.0")
    } else {
        let (int, frac) = digits_only.split_at((exp + 1) as usize);
        format!("{sign}{int}.{frac}")
    }
}

pub fn num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let s = format_float(x, digits());
    Value::Number(serde_json::from_str::<Number>(&s).expect("valid JSON number"))
}

pub fn nums(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| num(x)).collect())
}

pub fn matrix<const N: usize>(m: &[[f64; N]; N]) -> Value {
    Value::Array(m.iter().map(|r| nums(r)).collect())
}

#[derive(Default)]
pub struct Obj(Map<String, Value>);

impl Obj {
    pub fn new() -> Self {
        Obj(Map::new())
    }

    pub fn put(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.0.insert(key.to_string(), v.into());
        self
    }
}

impl From<Obj> for Value {
    fn from(o: Obj) -> Value {
        Value::Object(o.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_rendering() {
        assert_eq!(format_float(0.5, 17), "0.5");
        assert_eq!(format_float(-2.0, 17), "-2.0");
        assert_eq!(format_float(0.5493061443340548, 17), "0.54930614433405478");
        assert_eq!(format_float(1234.5, 17), "1234.5");
        assert_eq!(format_float(1e-9, 15), "1.0e-9");
        assert_eq!(format_float(0.001, 17), "0.001");
        assert_eq!(format_float(std::f64::consts::PI, 5), "3.1416");
        assert_eq!(format_float(1e25, 15), "1.0e25");
    }
}

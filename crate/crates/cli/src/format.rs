//! Number formatting shared by every subcommand.

use num_complex::Complex64;

/// Significant digits of every CSV value.
pub const CSV_DIGITS: usize = 10;

/// `%g`-style formatting with `CSV_DIGITS` significant digits: fixed notation
/// for exponents in `[-4, 10)`, scientific otherwise, trailing zeros removed.
pub fn sig(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.*e}", CSV_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    if (-4..10).contains(&exp) {
        let decimals = (CSV_DIGITS as i32 - 1 - exp).max(0) as usize;
        trim(format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim(mantissa.to_string()))
    }
}

fn trim(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// Complex value as `re`, or `re+imi` / `re-imi` when the imaginary part matters.
pub fn complex(v: Complex64) -> String {
    if v.im == 0.0 || v.im.abs() <= 1e-15 * v.re.abs() {
        sig(v.re)
    } else if v.im < 0.0 {
        format!("{}-{}i", sig(v.re), sig(-v.im))
    } else {
        format!("{}+{}i", sig(v.re), sig(v.im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(sig(0.0), "0");
        assert_eq!(sig(1.0), "1");
        assert_eq!(sig(-0.6989222681), "-0.6989222681");
        assert_eq!(sig(14.134725141734695), "14.13472514");
        assert_eq!(sig(1.5e-7), "1.5e-7");
        assert_eq!(sig(12345678901.0), "1.23456789e10");
        assert_eq!(sig(100.0), "100");
    }

    #[test]
    fn complex_values() {
        assert_eq!(complex(Complex64::new(1.5, 0.0)), "1.5");
        assert_eq!(complex(Complex64::new(1.5, -2.0)), "1.5-2i");
        assert_eq!(complex(Complex64::new(0.0, 0.25)), "0+0.25i");
    }
}

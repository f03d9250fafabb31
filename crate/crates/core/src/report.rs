//! Number formatting shared by the CSV and JSON writers.

/// 17 significant digits, enough to round-trip any `f64`.
pub fn fmt_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        format!("{x}")
    }
}

/// Rounds to 6 significant digits for human-readable output.
pub fn round_sig6(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.5e}").parse().unwrap_or(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits_round_trip() {
        for x in [0.1, 1.0 / 3.0, 1e-300, 123456.789, -2.5e17] {
            let s = fmt_f64(x);
            assert_eq!(s.parse::<f64>().unwrap(), x);
            let mantissa = s.split('e').next().unwrap().trim_start_matches('-').replace('.', "");
            assert_eq!(mantissa.len(), 17);
        }
    }

    #[test]
    fn six_digit_rounding() {
        assert_eq!(round_sig6(1.0 / 3.0), 0.333333);
        assert_eq!(round_sig6(2.0 / 3.0), 0.666667);
        assert_eq!(round_sig6(123456789.0), 123457000.0);
        assert_eq!(round_sig6(0.0), 0.0);
    }
}

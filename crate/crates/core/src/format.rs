//! Text rendering shared by the form types, the audit report and the CLI.

use crate::complex::Complex;
use crate::quaternion::Quaternion;

const SIG_DIGITS: usize = 12;

/// Shortest round-trip rendering of `x` after rounding to 12 significant
/// digits. Negative zero prints as `0`.
pub fn real(x: f64) -> String {
    if x.is_nan() {
        return "NaN".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let rounded: f64 = format!("{:.*e}", SIG_DIGITS - 1, x)
        .parse()
        .expect("scientific rendering of a finite float parses");
    if rounded == 0.0 {
        return "0".to_string();
    }
    let mag = rounded.abs();
    if !(1e-6..1e12).contains(&mag) {
        format!("{rounded:e}")
    } else {
        format!("{rounded}")
    }
}

/// `a + bi + cj + dk`, with the sign of each imaginary term folded into
/// the joining operator.
pub fn quaternion(q: Quaternion) -> String {
    let mut out = real(q.a);
    for (value, unit) in [(q.b, 'i'), (q.c, 'j'), (q.d, 'k')] {
        push_term(&mut out, value, unit);
    }
    out
}

pub fn complex(z: Complex) -> String {
    let mut out = real(z.re);
    push_term(&mut out, z.im, 'i');
    out
}

/// Comma-separated components, the point syntax accepted on the command line.
pub fn point(q: Quaternion) -> String {
    format!("{},{},{},{}", real(q.a), real(q.b), real(q.c), real(q.d))
}

fn push_term(out: &mut String, value: f64, unit: char) {
    let text = real(value);
    match text.strip_prefix('-') {
        Some(abs) => {
            out.push_str(" - ");
            out.push_str(abs);
        }
        None => {
            out.push_str(" + ");
            out.push_str(&text);
        }
    }
    out.push(unit);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounds_to_twelve_digits() {
        assert_eq!(real(0.1 + 0.2), "0.3");
        assert_eq!(real(1.0 / 3.0), "0.333333333333");
        assert_eq!(real(-0.0), "0");
        assert_eq!(real(-1e-17 * 0.0), "0");
        assert_eq!(real(42.0), "42");
        assert_eq!(real(-2.5), "-2.5");
        assert_eq!(real(1e20), "1e20");
        assert_eq!(real(3.0e-9), "3e-9");
    }

    #[test]
    fn quaternion_text() {
        assert_eq!(quaternion(Quaternion::new(1.0, 1.0, 1.0, 1.0)), "1 + 1i + 1j + 1k");
        assert_eq!(quaternion(Quaternion::new(1.0, -2.0, -0.0, 4.0)), "1 - 2i + 0j + 4k");
        assert_eq!(point(Quaternion::new(1.0, -2.0, 0.5, 0.0)), "1,-2,0.5,0");
    }
}

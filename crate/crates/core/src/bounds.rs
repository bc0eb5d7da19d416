//! The two word-metric upper bounds, in base-2 logarithms.

use crate::error::{Error, Result};

/// `n log2 n`, with `0 log 0 = 1 log 1 = 0`.
pub fn birget_upper(n: usize) -> f64 {
    x_log_x(n)
}

/// `n + b log2 b` for `1 <= b <= n + 1`.
pub fn new_upper(n: usize, b: usize) -> Result<f64> {
    if b == 0 || b > n + 1 {
        return Err(Error::Contract(format!(
            "cluster count {b} outside 1..={} for {n} carets",
            n + 1
        )));
    }
    Ok(n as f64 + x_log_x(b))
}

fn x_log_x(n: usize) -> f64 {
    if n <= 1 {
        0.0
    } else {
        let x = n as f64;
        x * x.log2()
    }
}

/// Exact value of `n log2 n` when it is an integer, i.e. `n` is 0 or a power
/// of two.
pub fn exact_x_log_x(n: usize) -> Option<u64> {
    match n {
        0 | 1 => Some(0),
        _ if n.is_power_of_two() => Some(n as u64 * n.trailing_zeros() as u64),
        _ => None,
    }
}

/// Prints an integer exactly, otherwise with six decimals.
pub fn format_bound(exact: Option<u64>, value: f64) -> String {
    match exact {
        Some(v) => v.to_string(),
        None => format!("{value:.6}"),
    }
}

pub fn format_birget(n: usize) -> String {
    format_bound(exact_x_log_x(n), birget_upper(n))
}

pub fn format_new_upper(n: usize, b: usize) -> Result<String> {
    let value = new_upper(n, b)?;
    Ok(format_bound(exact_x_log_x(b).map(|v| v + n as u64), value))
}

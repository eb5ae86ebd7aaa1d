//! Argument parsing helpers: complex literals `a+bi`, point lists, and
//! partition part lists.

use qbracket::modular::UpperHalfPoint;
use qbracket::Complex64;

/// Parse a complex literal: `2i`, `i`, `-i`, `1`, `0.25+1.5i`, `-0.5-2i`,
/// `1+i`. Decimal parts only, locale-independent.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty complex literal".into());
    }
    // split at the last +/− that is not leading and not an exponent sign
    let bytes = s.as_bytes();
    let mut split = None;
    for i in (1..bytes.len()).rev() {
        let c = bytes[i] as char;
        if (c == '+' || c == '-') && !matches!(bytes[i - 1] as char, 'e' | 'E') {
            split = Some(i);
            break;
        }
    }
    let part = |t: &str| -> Result<f64, String> {
        match t {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => t
                .parse::<f64>()
                .map_err(|e| format!("bad number {t:?}: {e}")),
        }
    };
    if let Some(i) = split {
        let (head, tail) = s.split_at(i);
        if let Some(im) = tail.strip_suffix('i') {
            Ok(Complex64::new(part(head)?, part(im)?))
        } else {
            Err(format!("{s:?} is not of the form a+bi"))
        }
    } else if let Some(im) = s.strip_suffix('i') {
        Ok(Complex64::new(0.0, part(im)?))
    } else {
        Ok(Complex64::new(part(&s)?, 0.0))
    }
}

/// Parse a comma-separated list of complex points into validated
/// upper-half-plane points above the configured floor.
pub fn parse_points(s: &str, y_floor: f64) -> Result<Vec<UpperHalfPoint>, String> {
    s.split(',')
        .map(|item| {
            let z = parse_complex(item)?;
            let p = UpperHalfPoint::from_complex(z).map_err(|e| e.to_string())?;
            p.require_y_at_least(y_floor).map_err(|e| e.to_string())?;
            Ok(p)
        })
        .collect()
}

/// Parse `4,3,1` into a validated partition.
pub fn parse_partition(s: &str) -> Result<qbracket::Partition, String> {
    let parts: Result<Vec<u32>, _> = s.split(',').map(|p| p.trim().parse::<u32>()).collect();
    let parts = parts.map_err(|e| format!("bad partition parts {s:?}: {e}"))?;
    qbracket::Partition::new(parts).map_err(|e| e.to_string())
}

/// Parse `2,1.5,1,0.5,0.1` into floats.
pub fn parse_f64_list(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .map_err(|e| format!("bad number {p:?}: {e}"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_forms() {
        assert_eq!(parse_complex("2i").unwrap(), Complex64::new(0.0, 2.0));
        assert_eq!(parse_complex("i").unwrap(), Complex64::new(0.0, 1.0));
        assert_eq!(parse_complex("-i").unwrap(), Complex64::new(0.0, -1.0));
        assert_eq!(parse_complex("1").unwrap(), Complex64::new(1.0, 0.0));
        assert_eq!(
            parse_complex("0.25+1.5i").unwrap(),
            Complex64::new(0.25, 1.5)
        );
        assert_eq!(
            parse_complex("-0.5-2i").unwrap(),
            Complex64::new(-0.5, -2.0)
        );
        assert_eq!(parse_complex("1+i").unwrap(), Complex64::new(1.0, 1.0));
        assert_eq!(
            parse_complex("1e-2+3e-1i").unwrap(),
            Complex64::new(0.01, 0.3)
        );
        assert!(parse_complex("foo").is_err());
        assert!(parse_complex("1+2").is_err());
    }

    #[test]
    fn point_lists_respect_floor() {
        assert_eq!(parse_points("i,1+2i", 0.05).unwrap().len(), 2);
        assert!(parse_points("0.5", 0.05).is_err()); // real axis
        assert!(parse_points("0.01i", 0.05).is_err()); // below floor
    }

    #[test]
    fn partitions_and_lists() {
        assert_eq!(parse_partition("4,3,1").unwrap().parts(), &[4, 3, 1]);
        assert!(parse_partition("3,4").is_err());
        assert_eq!(parse_f64_list("2,1.5,0.1").unwrap(), vec![2.0, 1.5, 0.1]);
    }
}

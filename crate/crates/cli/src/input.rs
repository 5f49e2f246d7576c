//! Parsing of K-type and M-type arguments.
//!
//! Both accept either a label (`p=2`, `p=3+`, `1,4,4`, `a=0,b=4,c=2`) or raw
//! coordinates (`coords=1,1/2,0` or `[1, 1/2, 0]`).

use rankone_core::branching::{KLabel, KTypeWeight, MLabel, MTypeWeight};
use rankone_core::group_data::Sign;
use rankone_core::{Family, GroupCase, HalfInt, HalfIntVec};

fn raw_coords(s: &str) -> Option<Result<HalfIntVec, String>> {
    let body = if let Some(rest) = s.strip_prefix("coords=") {
        rest
    } else if s.starts_with('[') && s.ends_with(']') {
        &s[1..s.len() - 1]
    } else {
        return None;
    };
    let parsed = body
        .split(',')
        .map(|x| x.trim().parse::<HalfInt>().map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()
        .map(|v| HalfIntVec::from_halfints(&v));
    Some(parsed)
}

/// Splits `k1=v1,k2=v2` or `v1,v2` into values ordered as `keys`.
fn fields<'a>(s: &'a str, keys: &[&str]) -> Result<Vec<&'a str>, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != keys.len() {
        return Err(format!(
            "expected {} fields ({}), got {s:?}",
            keys.len(),
            keys.join(",")
        ));
    }
    if !parts.iter().any(|p| p.contains('=')) {
        return Ok(parts);
    }
    let mut out = vec![""; keys.len()];
    for p in parts {
        let (k, v) = p
            .split_once('=')
            .ok_or_else(|| format!("mixed named and positional fields in {s:?}"))?;
        let i = keys
            .iter()
            .position(|key| *key == k.trim())
            .ok_or_else(|| format!("unknown field {k:?}; expected {}", keys.join(",")))?;
        out[i] = v.trim();
    }
    Ok(out)
}

fn count(s: &str) -> Result<usize, String> {
    s.parse()
        .map_err(|_| format!("not a non-negative integer: {s:?}"))
}

pub fn parse_k_label(family: Family, s: &str) -> Result<KLabel, String> {
    match family {
        Family::Real => {
            let body = s.strip_prefix("p=").unwrap_or(s);
            let (digits, sign) = match body.as_bytes().last() {
                Some(b'+') => (&body[..body.len() - 1], Some(Sign::Pos)),
                Some(b'-') => (&body[..body.len() - 1], Some(Sign::Neg)),
                _ => (body, None),
            };
            Ok(KLabel::Real {
                p: count(digits)?,
                sign,
            })
        }
        Family::Complex => {
            let f = fields(s, &["a", "b"])?;
            Ok(KLabel::Complex {
                a: count(f[0])?,
                b: count(f[1])?,
            })
        }
        Family::Quaternionic => {
            let f = fields(s, &["r", "s", "t"])?;
            Ok(KLabel::Quaternionic {
                r: count(f[0])?,
                s: count(f[1])?,
                t: count(f[2])?,
            })
        }
    }
}

pub fn parse_m_label(family: Family, s: &str) -> Result<MLabel, String> {
    match family {
        Family::Real => Ok(MLabel::Real {
            l: count(s.strip_prefix("l=").unwrap_or(s))?,
        }),
        Family::Complex => {
            let f = fields(s, &["l", "m"])?;
            Ok(MLabel::Complex {
                l: count(f[0])?,
                m: count(f[1])?,
            })
        }
        Family::Quaternionic => {
            let f = fields(s, &["a", "b", "c"])?;
            let c: HalfInt = f[2]
                .parse()
                .map_err(|e: rankone_core::Error| e.to_string())?;
            Ok(MLabel::Quaternionic {
                a: count(f[0])?,
                b: count(f[1])?,
                c,
            })
        }
    }
}

pub fn parse_tau(case: &GroupCase, s: &str) -> Result<KTypeWeight, String> {
    let s = s.trim();
    let made = match raw_coords(s) {
        Some(coords) => KTypeWeight::new(case, coords?),
        None => KTypeWeight::from_label(case, parse_k_label(case.family(), s)?),
    };
    made.map_err(|e| e.to_string())
}

pub fn parse_sigma(case: &GroupCase, s: &str) -> Result<MTypeWeight, String> {
    let s = s.trim();
    let made = match raw_coords(s) {
        Some(coords) => MTypeWeight::new(case, coords?),
        None => MTypeWeight::from_label(case, parse_m_label(case.family(), s)?),
    };
    made.map_err(|e| e.to_string())
}

pub fn parse_half(s: &str) -> Result<HalfInt, String> {
    s.trim().parse::<HalfInt>().map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        assert_eq!(
            parse_k_label(Family::Real, "p=3-").unwrap(),
            KLabel::Real {
                p: 3,
                sign: Some(Sign::Neg)
            }
        );
        assert_eq!(
            parse_k_label(Family::Quaternionic, "t=4,r=1,s=4").unwrap(),
            KLabel::Quaternionic { r: 1, s: 4, t: 4 }
        );
        assert_eq!(
            parse_m_label(Family::Quaternionic, "0,4,3/2").unwrap(),
            MLabel::Quaternionic {
                a: 0,
                b: 4,
                c: HalfInt::from_doubled(3)
            }
        );
        assert!(parse_m_label(Family::Complex, "1").is_err());
        assert!(parse_k_label(Family::Complex, "a=1,2").is_err());
    }

    #[test]
    fn coordinates() {
        let v = raw_coords("[1, 1/2, 0]").unwrap().unwrap();
        assert_eq!(v.doubled(), &[2, 1, 0]);
        assert!(raw_coords("coords=1,x").unwrap().is_err());
        assert!(raw_coords("1,2").is_none());
    }
}

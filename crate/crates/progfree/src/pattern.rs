//! Progression patterns and the sign convention for the common parameter.
//!
//! A pattern with coefficients (c1, ..., c_{k-1}) describes value sequences
//! of the form a, a + c1*d, a + (c1+c2)*d, ..., a + (c1+...+c_{k-1})*d for
//! some nonzero integer d. The all-ones pattern of length k-1 is the plain
//! arithmetic progression of length k.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("a pattern needs at least 2 coefficients (progressions of length >= 3), got {0}")]
    TooShort(usize),
    #[error("pattern coefficients must be positive")]
    ZeroCoefficient,
    #[error("invalid pattern literal {0:?} (expected comma-separated positive integers)")]
    Parse(String),
}

/// Coefficient vector of a generalized progression. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProgressionPattern {
    coeffs: Vec<u32>,
}

impl Serialize for ProgressionPattern {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl ProgressionPattern {
    pub fn new(coeffs: impl Into<Vec<u32>>) -> Result<Self, PatternError> {
        let coeffs = coeffs.into();
        if coeffs.len() < 2 {
            return Err(PatternError::TooShort(coeffs.len()));
        }
        if coeffs.contains(&0) {
            return Err(PatternError::ZeroCoefficient);
        }
        Ok(ProgressionPattern { coeffs })
    }

    /// Plain arithmetic progression of length `k`: coefficients (1, ..., 1).
    pub fn plain_ap(k: usize) -> Result<Self, PatternError> {
        if k < 3 {
            return Err(PatternError::TooShort(k.saturating_sub(1)));
        }
        Self::new(vec![1; k - 1])
    }

    /// Three-term pattern (r, s).
    pub fn three_term(r: u32, s: u32) -> Result<Self, PatternError> {
        Self::new(vec![r, s])
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Number of terms in a matching progression (one more than coefficients).
    pub fn term_count(&self) -> usize {
        self.coeffs.len() + 1
    }

    pub fn is_plain_ap(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 1)
    }

    /// Sum of the coefficients, the total span multiplier of the pattern.
    pub fn coeff_sum(&self) -> u64 {
        self.coeffs.iter().map(|&c| c as u64).sum()
    }
}

impl fmt::Display for ProgressionPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for ProgressionPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ProgressionPattern {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let coeffs: Result<Vec<u32>, _> = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|part| part.trim().parse::<u32>())
            .collect();
        match coeffs {
            Ok(c) => Self::new(c).map_err(|e| match e {
                PatternError::Parse(_) => e,
                other => other,
            }),
            Err(_) => Err(PatternError::Parse(s.to_string())),
        }
    }
}

/// Which values of the common parameter d count as a progression occurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignPolicy {
    /// Any nonzero integer d.
    #[default]
    Both,
    /// Only d >= 1: progressions must ascend in value.
    PositiveOnly,
}

impl SignPolicy {
    pub fn admits(self, d: i64) -> bool {
        match self {
            SignPolicy::Both => d != 0,
            SignPolicy::PositiveOnly => d >= 1,
        }
    }
}

impl fmt::Display for SignPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignPolicy::Both => write!(f, "both"),
            SignPolicy::PositiveOnly => write!(f, "positive-only"),
        }
    }
}

impl FromStr for SignPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "both" => Ok(SignPolicy::Both),
            "positive-only" | "positive" | "positive_only" => Ok(SignPolicy::PositiveOnly),
            other => Err(format!(
                "unknown sign policy {other:?} (use both | positive-only)"
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_rules() {
        assert!(ProgressionPattern::new(vec![1]).is_err());
        assert!(ProgressionPattern::new(vec![1, 0]).is_err());
        let p = ProgressionPattern::new(vec![3, 5]).unwrap();
        assert_eq!(p.term_count(), 3);
        assert!(!p.is_plain_ap());
    }

    #[test]
    fn plain_ap_shape() {
        let p = ProgressionPattern::plain_ap(6).unwrap();
        assert_eq!(p.coeffs(), &[1, 1, 1, 1, 1]);
        assert!(p.is_plain_ap());
        assert!(ProgressionPattern::plain_ap(2).is_err());
    }

    #[test]
    fn parse_and_display() {
        let p: ProgressionPattern = "1,3".parse().unwrap();
        assert_eq!(p, ProgressionPattern::three_term(1, 3).unwrap());
        assert_eq!(p.to_string(), "(1,3)");
        assert!("".parse::<ProgressionPattern>().is_err());
        assert!("1,x".parse::<ProgressionPattern>().is_err());
        assert!("7".parse::<ProgressionPattern>().is_err());
    }

    #[test]
    fn policy_admission() {
        assert!(SignPolicy::Both.admits(-2));
        assert!(!SignPolicy::Both.admits(0));
        assert!(SignPolicy::PositiveOnly.admits(1));
        assert!(!SignPolicy::PositiveOnly.admits(-1));
        assert!(!SignPolicy::PositiveOnly.admits(0));
    }
}

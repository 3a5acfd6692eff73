use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Simple compact Lie groups whose complete flag manifolds are covered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LieFamily {
    /// SU(n+1), type A_n.
    Su,
    /// Sp(n), type C_n.
    Sp,
    /// SO(2n+1), type B_n.
    SoOdd,
    /// SO(2n), type D_n.
    SoEven,
    G2,
    F4,
    E6,
}

impl LieFamily {
    pub const ALL: [LieFamily; 7] = [
        LieFamily::Su,
        LieFamily::Sp,
        LieFamily::SoOdd,
        LieFamily::SoEven,
        LieFamily::G2,
        LieFamily::F4,
        LieFamily::E6,
    ];

    pub fn cli_name(self) -> &'static str {
        match self {
            LieFamily::Su => "su",
            LieFamily::Sp => "sp",
            LieFamily::SoOdd => "so-odd",
            LieFamily::SoEven => "so-even",
            LieFamily::G2 => "g2",
            LieFamily::F4 => "f4",
            LieFamily::E6 => "e6",
        }
    }

    /// Cartan type letter.
    pub fn cartan_type(self) -> &'static str {
        match self {
            LieFamily::Su => "A",
            LieFamily::Sp => "C",
            LieFamily::SoOdd => "B",
            LieFamily::SoEven => "D",
            LieFamily::G2 => "G2",
            LieFamily::F4 => "F4",
            LieFamily::E6 => "E6",
        }
    }

    pub fn fixed_rank(self) -> Option<u32> {
        match self {
            LieFamily::G2 => Some(2),
            LieFamily::F4 => Some(4),
            LieFamily::E6 => Some(6),
            _ => None,
        }
    }

    pub fn min_rank(self) -> u32 {
        match self {
            LieFamily::Su | LieFamily::Sp => 1,
            LieFamily::SoOdd => 2,
            LieFamily::SoEven => 3,
            other => other.fixed_rank().unwrap_or(1),
        }
    }

    pub fn validate_rank(self, rank: u32) -> Result<()> {
        let invalid = |reason: String| Error::InvalidRank { family: self.to_string(), rank, reason };
        if let Some(fixed) = self.fixed_rank() {
            if rank != fixed {
                return Err(invalid(format!("rank is fixed at {fixed}")));
            }
        } else if rank < self.min_rank() {
            let reason = match self {
                LieFamily::SoEven => "SO(2n) flag manifolds need n > 2".to_string(),
                _ => format!("rank must be at least {}", self.min_rank()),
            };
            return Err(invalid(reason));
        }
        Ok(())
    }

    /// Group name at a given rank, e.g. `SU(3)` or `SO(7)`.
    pub fn group_name(self, rank: u32) -> String {
        match self {
            LieFamily::Su => format!("SU({})", rank + 1),
            LieFamily::Sp => format!("Sp({rank})"),
            LieFamily::SoOdd => format!("SO({})", 2 * rank + 1),
            LieFamily::SoEven => format!("SO({})", 2 * rank),
            LieFamily::G2 => "G2".into(),
            LieFamily::F4 => "F4".into(),
            LieFamily::E6 => "E6".into(),
        }
    }
}

impl fmt::Display for LieFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

impl FromStr for LieFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        Ok(match lower.as_str() {
            "su" | "a" => LieFamily::Su,
            "sp" | "c" => LieFamily::Sp,
            "so-odd" | "b" => LieFamily::SoOdd,
            "so-even" | "d" => LieFamily::SoEven,
            "g2" => LieFamily::G2,
            "f4" => LieFamily::F4,
            "e6" => LieFamily::E6,
            _ => return Err(Error::UnknownFamily(s.to_string())),
        })
    }
}

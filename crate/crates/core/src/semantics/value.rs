use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A Belnapian value, stored as the independent pair
/// (supports truth, supports falsity).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FourValue {
    truth: bool,
    falsity: bool,
}

impl FourValue {
    /// True and not false.
    pub const T: FourValue = FourValue { truth: true, falsity: false };
    /// Both true and false.
    pub const B: FourValue = FourValue { truth: true, falsity: true };
    /// Neither true nor false.
    pub const N: FourValue = FourValue { truth: false, falsity: false };
    /// False and not true.
    pub const F: FourValue = FourValue { truth: false, falsity: true };

    /// Enumeration order used by every exhaustive search.
    pub const ALL: [FourValue; 4] = [FourValue::T, FourValue::B, FourValue::N, FourValue::F];

    pub const fn new(truth: bool, falsity: bool) -> FourValue {
        FourValue { truth, falsity }
    }

    pub const fn supports_truth(self) -> bool {
        self.truth
    }

    pub const fn supports_falsity(self) -> bool {
        self.falsity
    }

    pub const fn negate(self) -> FourValue {
        FourValue { truth: self.falsity, falsity: self.truth }
    }

    pub const fn and(self, other: FourValue) -> FourValue {
        FourValue { truth: self.truth && other.truth, falsity: self.falsity || other.falsity }
    }

    pub const fn or(self, other: FourValue) -> FourValue {
        FourValue { truth: self.truth || other.truth, falsity: self.falsity && other.falsity }
    }

    /// T and F are fixed, B and N swap.
    pub const fn dual(self) -> FourValue {
        if self.truth == self.falsity {
            FourValue { truth: !self.truth, falsity: !self.falsity }
        } else {
            self
        }
    }

    /// T or F.
    pub const fn is_classical(self) -> bool {
        self.truth != self.falsity
    }

    pub const fn letter(self) -> char {
        match (self.truth, self.falsity) {
            (true, false) => 'T',
            (true, true) => 'B',
            (false, false) => 'N',
            (false, true) => 'F',
        }
    }
}

impl fmt::Display for FourValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for FourValue {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "T" => Ok(FourValue::T),
            "B" => Ok(FourValue::B),
            "N" => Ok(FourValue::N),
            "F" => Ok(FourValue::F),
            other => Err(format!("invalid value `{other}` (expected T, B, N or F)")),
        }
    }
}

impl Serialize for FourValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.letter().encode_utf8(&mut [0; 4]))
    }
}

impl<'de> Deserialize<'de> for FourValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

//! Bound values over ℕ ∪ {unknown} and the lattice arithmetic the
//! decomposition rules use.

use std::fmt;
use std::str::FromStr;

use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

/// An upper bound that may be unknown. `unknown` absorbs `max` and `+1`;
/// `min` over alternatives ignores it (the minimum of only unknowns is
/// unknown).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtBound {
    Finite(u32),
    Unknown,
}

impl ExtBound {
    pub fn is_unknown(&self) -> bool {
        matches!(self, ExtBound::Unknown)
    }

    pub fn finite(&self) -> Option<u32> {
        match self {
            ExtBound::Finite(n) => Some(*n),
            ExtBound::Unknown => None,
        }
    }

    /// `max(unknown, x) = unknown`.
    pub fn max(self, other: ExtBound) -> ExtBound {
        match (self, other) {
            (ExtBound::Finite(a), ExtBound::Finite(b)) => ExtBound::Finite(a.max(b)),
            _ => ExtBound::Unknown,
        }
    }

    /// `unknown + 1 = unknown`.
    pub fn plus_one(self) -> ExtBound {
        match self {
            ExtBound::Finite(n) => ExtBound::Finite(n + 1),
            ExtBound::Unknown => ExtBound::Unknown,
        }
    }

    /// `min` discards unknown alternatives.
    pub fn min(self, other: ExtBound) -> ExtBound {
        match (self, other) {
            (ExtBound::Finite(a), ExtBound::Finite(b)) => ExtBound::Finite(a.min(b)),
            (ExtBound::Finite(a), ExtBound::Unknown) => ExtBound::Finite(a),
            (ExtBound::Unknown, b) => b,
        }
    }

    /// Comparison under the `unknown = +∞` convention.
    pub fn le(self, other: ExtBound) -> bool {
        match (self, other) {
            (_, ExtBound::Unknown) => true,
            (ExtBound::Unknown, ExtBound::Finite(_)) => false,
            (ExtBound::Finite(a), ExtBound::Finite(b)) => a <= b,
        }
    }
}

impl fmt::Display for ExtBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtBound::Finite(n) => write!(f, "{n}"),
            ExtBound::Unknown => write!(f, "unknown"),
        }
    }
}

impl Serialize for ExtBound {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtBound::Finite(n) => serializer.serialize_u32(*n),
            ExtBound::Unknown => serializer.serialize_str("unknown"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtBound {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct ExtVisitor;
        impl<'de> Visitor<'de> for ExtVisitor {
            type Value = ExtBound;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a non-negative integer or the string \"unknown\"")
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<ExtBound, E> {
                u32::try_from(v)
                    .map(ExtBound::Finite)
                    .map_err(|_| E::custom("upper bound out of range"))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<ExtBound, E> {
                if v == "unknown" {
                    Ok(ExtBound::Unknown)
                } else {
                    Err(E::custom(format!("expected \"unknown\", got {v:?}")))
                }
            }
        }
        deserializer.deserialize_any(ExtVisitor)
    }
}

/// A certified (lower, upper) bound pair.
///
/// `exact` holds exactly when the two sides meet on a finite value;
/// `conditional` marks bounds whose upper side relies on the clique-number
/// conjecture and can therefore only appear in conditional mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bound {
    pub lower: u32,
    pub upper: ExtBound,
    pub exact: bool,
    pub conditional: bool,
}

impl Bound {
    /// Builds a bound, deriving `exact` from the two sides.
    pub fn new(lower: u32, upper: ExtBound, conditional: bool) -> Bound {
        if let ExtBound::Finite(u) = upper {
            debug_assert!(lower <= u, "lower {lower} exceeds upper {u}");
        }
        Bound {
            lower,
            upper,
            exact: upper == ExtBound::Finite(lower),
            conditional,
        }
    }

    pub fn exact_value(value: u32) -> Bound {
        Bound::new(value, ExtBound::Finite(value), false)
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lower, self.upper)?;
        if self.exact {
            write!(f, " exact")?;
        }
        if self.conditional {
            write!(f, " conditional")?;
        }
        Ok(())
    }
}

/// Whether the engine may invoke the clique-number conjecture as a base
/// rule for complete Artin graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Conditional,
    Unconditional,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Conditional => "conditional",
            Mode::Unconditional => "unconditional",
        })
    }
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "conditional" => Ok(Mode::Conditional),
            "unconditional" => Ok(Mode::Unconditional),
            other => Err(format!("unknown mode `{other}`")),
        }
    }
}

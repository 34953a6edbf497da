use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// A revelation order: position `i` (1-based) holds the `i`-th vertex revealed.
///
/// Values are exactly `{1, ..., n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    order: Vec<u32>,
}

impl Permutation {
    pub fn new(order: Vec<u32>) -> Result<Self> {
        let n = order.len();
        if n == 0 {
            return Err(invalid("permutation must have length at least 1"));
        }
        let mut seen = vec![false; n];
        for &v in &order {
            let v = v as usize;
            if v == 0 || v > n {
                return Err(invalid(format!("value {v} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(invalid(format!("value {v} repeated")));
            }
        }
        Ok(Permutation { order })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "identity permutation needs n >= 1");
        Permutation {
            order: (1..=n as u32).collect(),
        }
    }

    /// Wraps a slice already known to be a permutation of `1..=n`.
    pub(crate) fn from_trusted(order: &[u32]) -> Self {
        debug_assert!(Permutation::new(order.to_vec()).is_ok());
        Permutation { order: order.to_vec() }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.order.len()
    }

    /// Always false; kept for the `len`/`is_empty` pairing.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    #[inline]
    pub fn as_slice(&self) -> &[u32] {
        &self.order
    }

    /// 1-based accessor: `get(i)` is the `i`-th revealed vertex.
    pub fn get(&self, i: usize) -> u32 {
        self.order[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.len()];
        for (pos, &v) in self.order.iter().enumerate() {
            inv[v as usize - 1] = pos as u32 + 1;
        }
        Permutation { order: inv }
    }

    /// `c(π)_i = n + 1 - π_i`.
    pub fn complement(&self) -> Permutation {
        let n1 = self.len() as u32 + 1;
        Permutation {
            order: self.order.iter().map(|&v| n1 - v).collect(),
        }
    }

    /// Relabels every vertex `v` as `n + 1 - v`, keeping the revelation order.
    /// On a path this mirrors the graph end to end.
    pub fn mirror_labels(&self) -> Permutation {
        self.complement()
    }

    /// Reverses the revelation order.
    pub fn reversed(&self) -> Permutation {
        let mut order = self.order.clone();
        order.reverse();
        Permutation { order }
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(order: Vec<u32>) -> Result<Self> {
        Permutation::new(order)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Self {
        p.order
    }
}

/// Parses either a comma/space separated list (`"1,10,2"`) or, when there is
/// no separator, one digit per entry (`"231"`).
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parts: Vec<u32> = if s.contains([',', ' ']) {
            s.split([',', ' '])
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| invalid(format!("bad permutation entry {t:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| invalid(format!("bad permutation digit {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(parts)
    }
}

/// Compact form for `n <= 9` (`231`), comma separated otherwise.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.len() <= 9 { "" } else { "," };
        for (i, v) in self.order.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

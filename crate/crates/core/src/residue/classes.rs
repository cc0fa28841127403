//! Truncated cohomology of projective space: `Q[h] / h^(n+1)`.

use std::fmt;

use num_traits::{One, Zero};

use super::error::ResidueError;
use crate::algebra::rat::to_plain_string;
use crate::algebra::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncCohElem {
    n: usize,
    coeffs: Vec<Rat>,
}

impl TruncCohElem {
    /// Entries past `h^n` are dropped, missing ones are zero.
    pub fn new(n: usize, mut coeffs: Vec<Rat>) -> Self {
        coeffs.resize(n + 1, Rat::zero());
        TruncCohElem { n, coeffs }
    }

    pub fn from_integers(n: usize, coeffs: &[i64]) -> Self {
        Self::new(n, coeffs.iter().map(|&c| Rat::from_integer(c.into())).collect())
    }

    pub fn one(n: usize) -> Self {
        Self::new(n, vec![Rat::one()])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `h^k`.
    pub fn degree_part(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "ambient dimensions differ");
        Self::new(self.n, self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "ambient dimensions differ");
        let mut out = vec![Rat::zero(); self.n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate().take(self.n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        Self::new(self.n, out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.n, self.coeffs.iter().map(|a| a * c).collect())
    }
}

impl fmt::Display for TruncCohElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = match k {
                0 => to_plain_string(c),
                _ => {
                    let h = if k == 1 { "h".to_string() } else { format!("h^{k}") };
                    if c.is_one() {
                        h
                    } else if *c == -Rat::one() {
                        format!("-{h}")
                    } else {
                        format!("{}{h}", to_plain_string(c))
                    }
                }
            };
            parts.push(body);
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

/// Chern class of a bundle whose restriction splits with radial transversal
/// type: `(1 + ((d+2)/2) h)^2` in `Q[h]/h^4`, checked against
/// `1 + (d+2) h + ((d+2)^2/4) h^2`.
pub fn chern_radial(d: i64) -> Result<TruncCohElem, ResidueError> {
    if d % 2 != 0 {
        return Err(ResidueError::OddDegree(d));
    }
    let half = Rat::from_integer(((d + 2) / 2).into());
    let factor = TruncCohElem::new(3, vec![Rat::one(), half]);
    let square = factor.mul(&factor);
    let stated = TruncCohElem::new(
        3,
        vec![Rat::one(), Rat::from_integer((d + 2).into()), Rat::new(((d + 2) * (d + 2)).into(), 4.into())],
    );
    assert_eq!(square, stated, "square expansion disagrees with the closed form");
    Ok(square)
}

/// Chern character of a rank-2 bundle on the projective plane.
pub fn chern_character_rank2(c1: i64, c2: i64) -> TruncCohElem {
    TruncCohElem::new(
        2,
        vec![Rat::from_integer(2.into()), Rat::from_integer(c1.into()), Rat::new((c1 * c1 - 2 * c2).into(), 2.into())],
    )
}

/// Todd class of the projective plane.
pub fn todd_p2() -> TruncCohElem {
    TruncCohElem::new(2, vec![Rat::one(), Rat::new(3.into(), 2.into()), Rat::one()])
}

/// `[ch(F) · Td(P^2)]_2` for a rank-2 bundle.
pub fn euler_char_rrh(c1: i64, c2: i64) -> Rat {
    chern_character_rank2(c1, c2).mul(&todd_p2()).degree_part(2)
}

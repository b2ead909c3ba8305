//! Reference families of covers with closed forms for their `sigma_X`
//! characters and Whittaker dimensions, plus the rank two character tables.

use std::fmt;
use std::str::FromStr;

use crate::covering::CoveringDatum;
use crate::error::{Error, Result};
use crate::rootdata::{LatticeKind, RootDatum};
use crate::whittaker::Setting;

/// `f(d) = 1` for odd `d` and `4` for even `d`.
pub fn f_factor(d: i64) -> i64 {
    if d % 2 == 0 {
        4
    } else {
        1
    }
}

/// Simply connected rank two covers with a fixed quadratic form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `SL3`, `Q(alpha^vee) = 1`, saturated when `3` does not divide `n`.
    Sl3,
    /// `Sp4`, `Q = 1` on the short coroot, saturated for odd `n`.
    Sp4,
    /// `G2`, `Q = 1` on the short coroot, `3` not dividing `n`.
    G2,
    /// `G2` with `n = 3m`.
    G2ThreeM,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Sl3, Family::Sp4, Family::G2, Family::G2ThreeM];

    pub fn cartan_type(&self) -> (char, usize) {
        match self {
            Family::Sl3 => ('A', 2),
            Family::Sp4 => ('C', 2),
            Family::G2 | Family::G2ThreeM => ('G', 2),
        }
    }

    /// `Q` on the simple coroots.
    pub fn q_simple(&self) -> [i64; 2] {
        match self {
            Family::Sl3 => [1, 1],
            Family::Sp4 => [2, 1],
            Family::G2 | Family::G2ThreeM => [1, 3],
        }
    }

    /// Whether the closed forms of the family apply at `n`.
    pub fn admits(&self, n: i64) -> bool {
        n >= 1
            && match self {
                Family::Sl3 => n % 3 != 0,
                Family::Sp4 => n % 2 == 1,
                Family::G2 => n % 3 != 0,
                Family::G2ThreeM => n % 3 == 0,
            }
    }

    /// The degrees tabulated by default.
    pub fn default_sweep(&self) -> Vec<i64> {
        match self {
            Family::Sl3 => vec![2, 4, 5, 7],
            Family::Sp4 => vec![1, 3, 5],
            Family::G2 => vec![1, 2, 4, 5],
            Family::G2ThreeM => vec![3, 6, 9],
        }
    }

    pub fn setting(&self, n: i64, xi: i64) -> Result<Setting> {
        let (t, r) = self.cartan_type();
        let rd = RootDatum::new(t, r, LatticeKind::SimplyConnected)?;
        Setting::new(CoveringDatum::new(rd, &self.q_simple(), n, xi)?)
    }

    /// `sigma_X` on the elements of `W` in length-then-word order.
    pub fn sigma_row(&self, n: i64) -> Result<Vec<i64>> {
        self.check(n)?;
        let f = f_factor(n);
        Ok(match self {
            Family::Sl3 => vec![n * n, n, n, 1, 1, n],
            Family::Sp4 => vec![n * n, n, n, 1, 1, n, n, 1],
            Family::G2 => vec![n * n, n, n, 1, 1, n, n, 1, 1, n, n, f],
            Family::G2ThreeM => {
                let m = n / 3;
                vec![3 * m * m, m, 3 * m, 1, 1, 3 * m, m, 3, 3, m, 3 * m, f_factor(m)]
            }
        })
    }

    /// Whittaker dimensions of `Gamma+`, `Gamma_{a1}`, `Gamma_{a2}`, `Gamma-`
    /// for `Phi(chi) = Delta`.
    pub fn dims(&self, n: i64) -> Result<Vec<i64>> {
        self.check(n)?;
        let (nums, den): (Vec<i64>, i64) = match self {
            Family::Sl3 => {
                let s = n * n;
                (vec![s + 3 * n + 2, 2 * (s - 1), 2 * (s - 1), s - 3 * n + 2], 6)
            }
            Family::Sp4 => {
                let s = n * n;
                (vec![s + 4 * n + 3, 3 * (s - 1), 3 * (s - 1), s - 4 * n + 3], 8)
            }
            Family::G2 => {
                let (s, f) = (n * n, f_factor(n));
                (
                    vec![s + 6 * n + 4 + f, 5 * s - 4 - f, 5 * s - 4 - f, s - 6 * n + 4 + f],
                    12,
                )
            }
            Family::G2ThreeM => {
                let m = n / 3;
                let (s, f) = (m * m, f_factor(m));
                (
                    vec![
                        3 * s + 12 * m + 8 + f,
                        15 * s + 6 * m - 8 - f,
                        15 * s - 6 * m - 8 - f,
                        3 * s - 12 * m + 8 + f,
                    ],
                    12,
                )
            }
        };
        nums.iter()
            .map(|&x| {
                if x % den == 0 {
                    Ok(x / den)
                } else {
                    Err(Error::Invalid(format!("{x}/{den} is not an integer")))
                }
            })
            .collect()
    }

    fn check(&self, n: i64) -> Result<()> {
        if self.admits(n) {
            Ok(())
        } else {
            Err(Error::InvalidDegree(n))
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Sl3 => "sl3",
            Family::Sp4 => "sp4",
            Family::G2 => "g2",
            Family::G2ThreeM => "g2-3m",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.to_string() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown family `{s}`")))
    }
}

/// Irreducible characters of the Weyl groups of `A2` and `C2`, one row per
/// character in the order trivial, sign, linear, two-dimensional.
pub fn character_table(ty: char) -> Option<Vec<(&'static str, Vec<i64>)>> {
    match ty {
        'A' => Some(vec![
            ("1", vec![1, 1, 1, 1, 1, 1]),
            ("eps", vec![1, -1, -1, 1, 1, -1]),
            ("sigma0", vec![2, 0, 0, -1, -1, 0]),
        ]),
        'C' => Some(vec![
            ("1", vec![1; 8]),
            ("eps", vec![1, -1, -1, 1, 1, -1, -1, 1]),
            ("chi'", vec![1, -1, 1, -1, -1, 1, -1, 1]),
            ("chi''", vec![1, 1, -1, -1, -1, -1, 1, 1]),
            ("sigma0", vec![2, 0, 0, 0, 0, 0, 0, -2]),
        ]),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_factor_branches() {
        assert_eq!(f_factor(1), 1);
        assert_eq!(f_factor(7), 1);
        assert_eq!(f_factor(2), 4);
        assert_eq!(f_factor(6), 4);
    }

    #[test]
    fn closed_forms_sum_to_moduli_size() {
        for fam in Family::ALL {
            for n in 1..=12 {
                if !fam.admits(n) {
                    continue;
                }
                let d = fam.dims(n).unwrap();
                let row = fam.sigma_row(n).unwrap();
                assert_eq!(d.iter().sum::<i64>(), row[0], "{fam} n={n}");
            }
        }
    }

    #[test]
    fn g2_small_values() {
        assert_eq!(Family::G2.dims(1).unwrap(), vec![1, 0, 0, 0]);
        assert_eq!(Family::G2ThreeM.dims(3).unwrap(), vec![2, 1, 0, 0]);
        assert_eq!(Family::G2ThreeM.dims(6).unwrap(), vec![4, 5, 3, 0]);
        assert!(Family::Sp4.dims(2).is_err());
    }
}

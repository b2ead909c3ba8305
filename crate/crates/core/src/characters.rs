//! Class functions on finite Coxeter groups and their character tables.

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::kl::Coxeter;
use crate::linalg::{self, QMat};

/// Rational values on the conjugacy classes of a Coxeter group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub name: String,
    pub values: Vec<Rational64>,
}

impl ClassFunction {
    pub fn new(name: &str, values: Vec<Rational64>) -> Self {
        ClassFunction {
            name: name.to_string(),
            values,
        }
    }

    /// Class function from values given on every element.
    pub fn from_elements(g: &Coxeter, name: &str, per_element: &[i64]) -> Self {
        let values = g
            .classes
            .iter()
            .map(|c| {
                debug_assert!(c.iter().all(|&w| per_element[w] == per_element[c[0]]));
                per_element[c[0]].into()
            })
            .collect();
        Self::new(name, values)
    }

    pub fn trivial(g: &Coxeter) -> Self {
        Self::new("1", vec![1.into(); g.classes.len()])
    }

    pub fn sign(g: &Coxeter) -> Self {
        let values = g.classes.iter().map(|c| g.sign(c[0]).into()).collect();
        Self::new("eps", values)
    }

    pub fn regular(g: &Coxeter) -> Self {
        let mut values = vec![Rational64::zero(); g.classes.len()];
        values[0] = (g.len() as i64).into();
        Self::new("reg", values)
    }

    pub fn value_at(&self, g: &Coxeter, w: usize) -> Rational64 {
        self.values[g.class_of[w]]
    }

    /// Value at the identity.
    pub fn degree(&self) -> Rational64 {
        self.values[0]
    }

    pub fn on_elements(&self, g: &Coxeter) -> Vec<Rational64> {
        (0..g.len()).map(|w| self.value_at(g, w)).collect()
    }

    /// `(1/|G|) sum |C| f(C) h(C)`; Weyl group characters are real.
    pub fn inner(&self, other: &ClassFunction, g: &Coxeter) -> Rational64 {
        let s: Rational64 = g
            .classes
            .iter()
            .zip(self.values.iter().zip(&other.values))
            .map(|(c, (a, b))| Rational64::from(c.len() as i64) * a * b)
            .sum();
        s / Rational64::from(g.len() as i64)
    }

    pub fn add(&self, other: &ClassFunction) -> ClassFunction {
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        ClassFunction::new(&format!("{}+{}", self.name, other.name), values)
    }

    pub fn scale(&self, c: Rational64) -> ClassFunction {
        let values = self.values.iter().map(|a| a * c).collect();
        ClassFunction::new(&self.name, values)
    }

    pub fn named(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    /// Multiplicities against a list of irreducible characters.
    pub fn decompose(&self, irr: &[ClassFunction], g: &Coxeter) -> Vec<Rational64> {
        irr.iter().map(|chi| self.inner(chi, g)).collect()
    }
}

/// Sum of class functions; `None` for an empty list.
pub fn sum(fs: &[ClassFunction], name: &str) -> Option<ClassFunction> {
    let mut it = fs.iter();
    let first = it.next()?.clone();
    Some(it.fold(first, |acc, f| acc.add(f)).named(name))
}

/// Induce a class function from a parabolic subgroup `h` to `g`.
pub fn induce(h: &Coxeter, f: &ClassFunction, g: &Coxeter) -> ClassFunction {
    let values = g
        .classes
        .iter()
        .map(|cls| {
            let y = cls[0];
            let mut s = Rational64::zero();
            for x in 0..g.len() {
                let c = g.mul(g.mul(x, y), g.inverse[x]);
                if let Some(l) = h.local(g.ambient[c]) {
                    s += f.value_at(h, l);
                }
            }
            s / Rational64::from(h.len() as i64)
        })
        .collect();
    ClassFunction::new(&format!("Ind({})", f.name), values)
}

/// Irreducible characters by simultaneous diagonalisation of the class
/// multiplication matrices. Order: trivial, sign, then by degree and values.
pub fn irreducible_characters(g: &Coxeter) -> Vec<ClassFunction> {
    let k = g.classes.len();
    let order = g.len() as i64;
    // m[i][j][l] = #{(x, y) in C_i x C_j : x y = g_l}.
    let mut m = vec![vec![vec![0i64; k]; k]; k];
    for (l, cl) in g.classes.iter().enumerate() {
        let target = cl[0];
        for (i, ci) in g.classes.iter().enumerate() {
            for &x in ci {
                let y = g.mul(g.inverse[x], target);
                m[i][g.class_of[y]][l] += 1;
            }
        }
    }
    let to_q = |mat: &Vec<Vec<i64>>| -> QMat {
        mat.iter().map(|r| r.iter().map(|&x| linalg::q(x)).collect()).collect()
    };
    let mut spaces: Vec<QMat> = vec![(0..k)
        .map(|c| (0..k).map(|r| linalg::q(i64::from(r == c))).collect())
        .collect()];
    for (i, ci) in g.classes.iter().enumerate().skip(1) {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mi = to_q(&m[i]);
        let bound = ci.len() as i64;
        let mut next = vec![];
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            // basis holds column vectors; image columns (M_i - lambda) v.
            let mv: Vec<Vec<BigRational>> = basis
                .iter()
                .map(|v| {
                    (0..k)
                        .map(|r| (0..k).map(|c| &mi[r][c] * &v[c]).sum())
                        .collect()
                })
                .collect();
            let mut found = 0;
            for lambda in -bound..=bound {
                let lq = linalg::q(lambda);
                // Columns (M - lambda) v_j as a k x d matrix.
                let a: QMat = (0..k)
                    .map(|r| {
                        (0..basis.len())
                            .map(|j| &mv[j][r] - &lq * &basis[j][r])
                            .collect()
                    })
                    .collect();
                let ns = linalg::nullspace(&a, basis.len());
                if ns.is_empty() {
                    continue;
                }
                found += ns.len();
                let sub: QMat = ns
                    .iter()
                    .map(|c| {
                        (0..k)
                            .map(|r| (0..basis.len()).map(|j| &c[j] * &basis[j][r]).sum())
                            .collect()
                    })
                    .collect();
                next.push(sub);
            }
            debug_assert_eq!(found, basis.len());
        }
        spaces = next;
    }
    let mut chars: Vec<ClassFunction> = spaces
        .into_iter()
        .map(|sp| {
            let v = &sp[0];
            let omega: Vec<BigRational> = v.iter().map(|x| x / &v[0]).collect();
            let norm: BigRational = omega
                .iter()
                .zip(&g.classes)
                .map(|(w, c)| w * w / linalg::q(c.len() as i64))
                .sum();
            let deg2 = linalg::q(order) / norm;
            let deg = exact_sqrt(&deg2);
            let values = omega
                .iter()
                .zip(&g.classes)
                .map(|(w, c)| {
                    let x = &deg * w / linalg::q(c.len() as i64);
                    Rational64::new(x.numer().to_i64().unwrap(), x.denom().to_i64().unwrap())
                })
                .collect();
            ClassFunction::new("", values)
        })
        .collect();
    let triv = ClassFunction::trivial(g);
    let sgn = ClassFunction::sign(g);
    let rank_key = |c: &ClassFunction| -> u8 {
        if c.values == triv.values {
            0
        } else if c.values == sgn.values {
            1
        } else {
            2
        }
    };
    chars.sort_by(|a, b| {
        rank_key(a)
            .cmp(&rank_key(b))
            .then(a.degree().cmp(&b.degree()))
            .then(a.values.cmp(&b.values))
    });
    let mut linear = 0;
    let mut higher = 0;
    for c in chars.iter_mut() {
        c.name = match rank_key(c) {
            0 => "1".into(),
            1 => "eps".into(),
            _ if c.degree() == Rational64::one() => {
                linear += 1;
                format!("chi{}", "'".repeat(linear))
            }
            _ => {
                higher += 1;
                format!("sigma{}", higher - 1)
            }
        };
    }
    chars
}

fn exact_sqrt(x: &BigRational) -> BigRational {
    let n = x.numer().abs();
    let d = x.denom().clone();
    let rn: BigInt = n.sqrt();
    let rd: BigInt = d.sqrt();
    debug_assert!(&rn * &rn == n && &rd * &rd == d, "degree squared is not a square");
    BigRational::new(rn, rd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{LatticeKind, RootDatum, WeylGroup};

    fn cox(t: char, r: usize) -> Coxeter {
        let rd = RootDatum::new(t, r, LatticeKind::SimplyConnected).unwrap();
        Coxeter::from_weyl(&WeylGroup::new(&rd).unwrap())
    }

    #[test]
    fn orthonormal_tables() {
        for (t, r, count) in [('A', 2, 3), ('C', 2, 5), ('G', 2, 6), ('A', 3, 5), ('B', 3, 10)] {
            let g = cox(t, r);
            let irr = irreducible_characters(&g);
            assert_eq!(irr.len(), count);
            for (i, a) in irr.iter().enumerate() {
                for (j, b) in irr.iter().enumerate() {
                    assert_eq!(a.inner(b, &g), Rational64::from(i64::from(i == j)));
                }
            }
            let sq: Rational64 = irr.iter().map(|c| c.degree() * c.degree()).sum();
            assert_eq!(sq, Rational64::from(g.len() as i64));
        }
    }

    #[test]
    fn induce_trivial_from_rank_one() {
        let g = cox('A', 2);
        let rd = RootDatum::new('A', 2, LatticeKind::SimplyConnected).unwrap();
        let w = WeylGroup::new(&rd).unwrap();
        let h = Coxeter::parabolic(&w, 1);
        let ind = induce(&h, &ClassFunction::trivial(&h), &g);
        assert_eq!(ind.degree(), 3.into());
        let irr = irreducible_characters(&g);
        let mult = ind.decompose(&irr, &g);
        assert_eq!(mult, vec![1.into(), 0.into(), 1.into()]);
    }
}

//! Laurent polynomials over the Gaussian integers and fraction-free rank.
//!
//! Monomials are ordered lexicographically on their exponent vectors. This
//! order is compatible with multiplication on `Z^k`, so the leading term of
//! a product is the product of leading terms and exact division can peel
//! leading terms one at a time.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_traits::{One, Zero};

pub type GaussInt = Complex<BigInt>;

/// `a / b` in `Z[i]` when it is exact.
pub fn gauss_div(a: &GaussInt, b: &GaussInt) -> Option<GaussInt> {
    let norm = &b.re * &b.re + &b.im * &b.im;
    if norm.is_zero() {
        return None;
    }
    let num = a * b.conj();
    let (qr, rr) = num.re.div_rem(&norm);
    let (qi, ri) = num.im.div_rem(&norm);
    if rr.is_zero() && ri.is_zero() {
        Some(Complex::new(qr, qi))
    } else {
        None
    }
}

/// `i^k` as a Gaussian integer.
pub fn i_power(k: i64) -> GaussInt {
    match k.rem_euclid(4) {
        0 => Complex::new(BigInt::one(), BigInt::zero()),
        1 => Complex::new(BigInt::zero(), BigInt::one()),
        2 => Complex::new(-BigInt::one(), BigInt::zero()),
        _ => Complex::new(BigInt::zero(), -BigInt::one()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MPoly {
    pub terms: BTreeMap<Vec<i64>, GaussInt>,
}

impl MPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: GaussInt, nvars: usize) -> Self {
        Self::term(vec![0; nvars], c)
    }

    pub fn term(exp: Vec<i64>, c: GaussInt) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exp: Vec<i64>, c: GaussInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn add(&self, o: &MPoly) -> MPoly {
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, o: &MPoly) -> MPoly {
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), -c.clone());
        }
        p
    }

    pub fn mul(&self, o: &MPoly) -> MPoly {
        let mut p = MPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                p.add_term(e, ca * cb);
            }
        }
        p
    }

    fn mul_term(&self, exp: &[i64], c: &GaussInt) -> MPoly {
        let mut p = MPoly::zero();
        for (e, v) in &self.terms {
            let e2 = e.iter().zip(exp).map(|(x, y)| x + y).collect();
            p.add_term(e2, v * c);
        }
        p
    }

    /// Per-variable minimum and maximum exponents.
    fn exponent_box(&self) -> Option<(Vec<i64>, Vec<i64>)> {
        let first = self.terms.keys().next()?;
        let mut lo = first.clone();
        let mut hi = first.clone();
        for e in self.terms.keys() {
            for (i, &x) in e.iter().enumerate() {
                lo[i] = lo[i].min(x);
                hi[i] = hi[i].max(x);
            }
        }
        Some((lo, hi))
    }

    /// `self / d` when the quotient is a Laurent polynomial.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        if self.is_zero() {
            return Some(MPoly::zero());
        }
        let (dl, dc) = d.terms.iter().next_back()?;
        let (alo, ahi) = self.exponent_box()?;
        let (dlo, dhi) = d.exponent_box()?;
        // Exponents of an exact quotient lie in this box.
        let qlo: Vec<i64> = alo.iter().zip(&dlo).map(|(a, b)| a - b).collect();
        let qhi: Vec<i64> = ahi.iter().zip(&dhi).map(|(a, b)| a - b).collect();
        let mut rest = self.clone();
        let mut quo = MPoly::zero();
        while let Some((le, lc)) = rest.terms.iter().next_back() {
            let e: Vec<i64> = le.iter().zip(dl).map(|(a, b)| a - b).collect();
            if e.iter().enumerate().any(|(i, &x)| x < qlo[i] || x > qhi[i]) {
                return None;
            }
            let c = gauss_div(lc, dc)?;
            rest = rest.sub(&d.mul_term(&e, &c));
            quo.add_term(e, c);
        }
        Some(quo)
    }
}

/// Rank of a matrix of Laurent polynomials by Bareiss elimination.
pub fn bareiss_rank(mut a: Vec<Vec<MPoly>>) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut prev: Option<MPoly> = None;
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        // Sparsest nonzero pivot keeps intermediate growth down.
        let pivot = (rank..rows)
            .filter(|&i| !a[i][col].is_zero())
            .min_by_key(|&i| a[i][col].len());
        let Some(p) = pivot else { continue };
        a.swap(rank, p);
        let piv = a[rank][col].clone();
        for i in rank + 1..rows {
            let f = a[i][col].clone();
            for j in col + 1..cols {
                let v = piv.mul(&a[i][j]).sub(&f.mul(&a[rank][j]));
                a[i][j] = match &prev {
                    Some(d) => v
                        .div_exact(d)
                        .expect("Bareiss division is exact"),
                    None => v,
                };
            }
            a[i][col] = MPoly::zero();
        }
        prev = Some(piv);
        rank += 1;
    }
    rank
}

//! Covering data `(Q, D, n)`, the lattices `Y_{Q,n}` and `Y_{Q,n}^{sc}`,
//! the finite moduli space `Y / Y_{Q,n}` with its twisted Weyl action, and
//! orbit classification.

use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::intmat::{self, IMat, IVec};
use crate::linalg::{self, QMat};
use crate::rootdata::{classify_cartan, LatticeKind, RootDatum, WeylGroup};

/// A degree `n` cover described by a Weyl-invariant quadratic form.
#[derive(Clone, Debug)]
pub struct CoveringDatum {
    pub datum: RootDatum,
    /// `Q(alpha_i^vee)` on the simple coroots.
    pub q_simple: Vec<i64>,
    /// `B_Q` on the basis of `Y`.
    pub bq: IMat,
    /// Bisector: upper triangular with `D + D^T = B_Q`.
    pub d: IMat,
    pub n: i64,
    /// `(-1, pi)_n`, either 1 or -1, forced to 1 for odd `n`.
    pub xi: i64,
    /// `n_alpha` for each root of `datum.roots`.
    pub n_alpha: Vec<i64>,
    /// Hermite basis of `Y_{Q,n}`.
    pub y_qn: IMat,
    /// Hermite basis of `Y_{Q,n}^{sc}`.
    pub y_qn_sc: IMat,
}

impl CoveringDatum {
    /// Cover with `Q` given on simple coroots; `B_Q` on `Y` is derived.
    pub fn new(datum: RootDatum, q_simple: &[i64], n: i64, xi: i64) -> Result<Self> {
        let bq = form_from_simple(&datum, q_simple)?;
        Self::with_form(datum, bq, n, xi)
    }

    /// Cover with an explicit symmetric `B_Q` on the basis of `Y`.
    pub fn with_form(datum: RootDatum, bq: IMat, n: i64, xi: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidDegree(n));
        }
        if !(xi == 1 || xi == -1) || (xi == -1 && n % 2 == 1) {
            return Err(Error::InvalidXi { xi, n });
        }
        let dim = datum.dim;
        if bq.len() != dim || bq.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidForm(format!("B_Q must be {dim}x{dim}")));
        }
        for i in 0..dim {
            if bq[i][i] % 2 != 0 {
                return Err(Error::InvalidForm("B_Q must have even diagonal".into()));
            }
            for j in 0..dim {
                if bq[i][j] != bq[j][i] {
                    return Err(Error::InvalidForm("B_Q must be symmetric".into()));
                }
            }
        }
        for (s, refl) in datum.reflections.iter().enumerate() {
            let t = intmat::mat_mul(&intmat::mat_mul(&intmat::transpose(refl), &bq), refl);
            if t != bq {
                return Err(Error::InvalidForm(format!(
                    "B_Q is not invariant under the simple reflection {}",
                    s + 1
                )));
            }
        }
        let qf = |y: &[i64]| intmat::dot(y, &intmat::mat_vec(&bq, y)) / 2;
        let q_simple: Vec<i64> = datum.simple_coroots.iter().map(|c| qf(c)).collect();
        let d = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| match i.cmp(&j) {
                        std::cmp::Ordering::Less => bq[i][j],
                        std::cmp::Ordering::Equal => bq[i][i] / 2,
                        std::cmp::Ordering::Greater => 0,
                    })
                    .collect()
            })
            .collect();
        let n_alpha: Vec<i64> = datum
            .roots
            .iter()
            .map(|r| n / n.gcd(&qf(&r.coroot)))
            .collect();

        // y B in nZ^dim: left kernel of [B; nI].
        let mut stacked = bq.clone();
        stacked.extend(intmat::identity(dim).iter().map(|r| intmat::scale(n, r)));
        let ker = intmat::left_kernel(&stacked, dim);
        let gens: IMat = ker.iter().map(|v| v[..dim].to_vec()).collect();
        let y_qn = intmat::hnf(&gens, dim);
        let sc_gens: IMat = datum
            .roots
            .iter()
            .zip(&n_alpha)
            .map(|(r, &k)| intmat::scale(k, &r.coroot))
            .collect();
        let y_qn_sc = intmat::hnf(&sc_gens, dim);
        debug_assert!(y_qn_sc.iter().all(|v| intmat::contains(&y_qn, v)));
        Ok(CoveringDatum {
            datum,
            q_simple,
            bq,
            d,
            n,
            xi,
            n_alpha,
            y_qn,
            y_qn_sc,
        })
    }

    pub fn dim(&self) -> usize {
        self.datum.dim
    }

    pub fn b(&self, y: &[i64], z: &[i64]) -> i64 {
        intmat::dot(y, &intmat::mat_vec(&self.bq, z))
    }

    pub fn d_form(&self, y: &[i64], z: &[i64]) -> i64 {
        intmat::dot(y, &intmat::mat_vec(&self.d, z))
    }

    pub fn q_form(&self, y: &[i64]) -> i64 {
        self.b(y, y) / 2
    }

    /// `n_alpha` of the simple root `j`.
    pub fn n_simple(&self, j: usize) -> i64 {
        self.n_alpha[j]
    }

    /// `n_alpha alpha^vee` for the simple root `j`.
    pub fn scaled_coroot(&self, j: usize) -> IVec {
        intmat::scale(self.n_alpha[j], &self.datum.simple_coroots[j])
    }

    pub fn in_y_qn(&self, y: &[i64]) -> bool {
        intmat::mat_vec(&self.bq, y).iter().all(|x| x % self.n == 0)
    }

    pub fn in_y_qn_sc(&self, y: &[i64]) -> bool {
        intmat::contains(&self.y_qn_sc, y)
    }

    /// Hermite basis of the lattice spanned by `n_alpha alpha^vee` for the
    /// roots of the standard Levi with simple roots `mask`.
    pub fn levi_sc_lattice(&self, mask: u64) -> IMat {
        let gens: IMat = self
            .datum
            .roots
            .iter()
            .zip(&self.n_alpha)
            .filter(|(r, _)| {
                r.coroot_coeffs
                    .iter()
                    .enumerate()
                    .all(|(i, &c)| c == 0 || mask >> i & 1 == 1)
            })
            .map(|(r, &k)| intmat::scale(k, &r.coroot))
            .collect();
        intmat::hnf(&gens, self.dim())
    }

    /// `Y_{Q,n} cap Y^{sc} = Y_{Q,n}^{sc}`.
    pub fn is_saturated(&self) -> bool {
        let ysc = intmat::hnf(&self.datum.simple_coroots, self.dim());
        intmat::intersect(&self.y_qn, &ysc, self.dim()) == self.y_qn_sc
    }

    /// Dual root datum on `Y_{Q,n}`.
    pub fn dual_root_datum(&self) -> Result<DualDatum> {
        let rd = &self.datum;
        let basis = &self.y_qn;
        let mut coroots = vec![];
        let mut roots = vec![];
        for j in 0..rd.rank {
            let nj = self.n_alpha[j];
            let c: IVec = basis
                .iter()
                .map(|b| intmat::dot(b, &rd.simple_roots[j]))
                .collect();
            if c.iter().any(|x| x % nj != 0) {
                return Err(Error::InvalidLattice(
                    "n_alpha does not divide <Y_{Q,n}, alpha>".into(),
                ));
            }
            coroots.push(c.iter().map(|x| x / nj).collect());
            let r = intmat::coords(basis, &self.scaled_coroot(j))
                .ok_or_else(|| Error::InvalidLattice("n_alpha alpha^vee outside Y_{Q,n}".into()))?;
            roots.push(r);
        }
        let adjoint = self.y_qn == self.y_qn_sc;
        // Simply connected when the dual coroots span X_{Q,n}.
        let k = basis.len();
        let simply_connected = intmat::hnf(&coroots, k) == intmat::identity(k);
        let lattice = if adjoint {
            LatticeKind::Adjoint
        } else if simply_connected {
            LatticeKind::SimplyConnected
        } else {
            LatticeKind::Intermediate
        };
        let cartan: IMat = coroots
            .iter()
            .map(|c| roots.iter().map(|a| intmat::dot(c, a)).collect())
            .collect();
        let labels = (1..=k).map(|i| format!("b{i}*")).collect();
        let datum = RootDatum::from_parts(classify_cartan(&cartan), lattice, coroots, roots, labels)?;
        Ok(DualDatum {
            datum,
            adjoint,
            simply_connected,
        })
    }
}

/// Dual root datum with its center type.
#[derive(Clone, Debug)]
pub struct DualDatum {
    pub datum: RootDatum,
    pub adjoint: bool,
    pub simply_connected: bool,
}

/// `B_Q` on `Y` from `Q` on simple coroots, using
/// `B_Q(alpha_i^vee, alpha_j^vee) = Q(alpha_i^vee) <alpha_j^vee, alpha_i>`.
pub fn form_from_simple(rd: &RootDatum, q_simple: &[i64]) -> Result<IMat> {
    let r = rd.rank;
    if q_simple.len() != r {
        return Err(Error::InvalidForm(format!(
            "expected {r} values of Q, got {}",
            q_simple.len()
        )));
    }
    if q_simple.iter().any(|&x| x <= 0) {
        return Err(Error::InvalidForm("Q must be positive on coroots".into()));
    }
    let bc: IMat = (0..r)
        .map(|i| (0..r).map(|j| q_simple[i] * rd.cartan[j][i]).collect())
        .collect();
    for i in 0..r {
        for j in 0..r {
            if bc[i][j] != bc[j][i] {
                return Err(Error::InvalidForm(format!(
                    "Q values {q_simple:?} are not Weyl-invariant"
                )));
            }
        }
    }
    if rd.dim != r {
        return Err(Error::InvalidForm(
            "Y has a central part; give B_Q explicitly".into(),
        ));
    }
    // B_Y = C^{-1} B_cor C^{-T} with C the coroot rows.
    let c: QMat = rd
        .simple_coroots
        .iter()
        .map(|row| row.iter().map(|&x| linalg::q(x)).collect())
        .collect();
    let mut inv_cols = vec![];
    for k in 0..r {
        let e: Vec<_> = (0..r).map(|i| linalg::q(i64::from(i == k))).collect();
        // Solve C^T x = e for the columns of C^{-T}.
        let ct: QMat = (0..r).map(|i| (0..r).map(|j| c[j][i].clone()).collect()).collect();
        inv_cols.push(linalg::solve(&ct, &e).ok_or_else(|| Error::InvalidForm("singular coroots".into()))?);
    }
    // inv_cols[k] = column k of C^{-T}, i.e. row k of C^{-1}.
    let mut out = vec![vec![0i64; r]; r];
    for a in 0..r {
        for b in 0..r {
            let mut s = linalg::q(0);
            for i in 0..r {
                for j in 0..r {
                    if bc[i][j] != 0 {
                        s += &inv_cols[a][i] * &inv_cols[b][j] * linalg::q(bc[i][j]);
                    }
                }
            }
            if !s.is_integer() {
                return Err(Error::InvalidForm(format!(
                    "Q values {q_simple:?} do not extend to an integral form on Y"
                )));
            }
            out[a][b] = s.to_integer().to_i64().unwrap_or(0);
        }
    }
    if out.iter().enumerate().any(|(i, row)| row[i] % 2 != 0) {
        return Err(Error::InvalidForm(format!(
            "Q values {q_simple:?} do not extend to an integral form on Y"
        )));
    }
    Ok(out)
}

/// The finite group `Y / Y_{Q,n}` with a box transversal.
#[derive(Clone, Debug)]
pub struct Moduli {
    pub lattice: IMat,
    pub pivots: IVec,
    /// Representatives in the box `prod [0, pivot_i)`, first coordinate fastest.
    pub reps: Vec<IVec>,
    /// Smith invariants of the quotient (factors greater than 1).
    pub invariants: IVec,
    /// `simple_action[s][i]`: class of the twisted simple reflection on class `i`.
    pub simple_action: Vec<Vec<usize>>,
}

impl Moduli {
    pub fn new(cov: &CoveringDatum) -> Self {
        let lattice = cov.y_qn.clone();
        let pivots = intmat::pivots(&lattice);
        let total: i64 = pivots.iter().product();
        let reps: Vec<IVec> = (0..total)
            .map(|mut k| {
                pivots
                    .iter()
                    .map(|&h| {
                        let c = k % h;
                        k /= h;
                        c
                    })
                    .collect()
            })
            .collect();
        let invariants = intmat::smith_invariants(&lattice)
            .into_iter()
            .filter(|&d| d > 1)
            .collect();
        let mut m = Moduli {
            lattice,
            pivots,
            reps,
            invariants,
            simple_action: vec![],
        };
        m.simple_action = (0..cov.datum.rank)
            .map(|s| {
                m.reps
                    .iter()
                    .map(|y| m.index_of(&cov.datum.twisted_reflect(s, y)))
                    .collect()
            })
            .collect();
        m
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reduce(&self, y: &[i64]) -> IVec {
        intmat::reduce_mod(&self.lattice, y)
    }

    /// Class index of a lattice vector.
    pub fn index_of(&self, y: &[i64]) -> usize {
        let r = self.reduce(y);
        let mut idx = 0i64;
        let mut mul = 1i64;
        for (c, h) in r.iter().zip(&self.pivots) {
            idx += c * mul;
            mul *= h;
        }
        idx as usize
    }

    /// Class of `w[y]` for the element `w`.
    pub fn act(&self, weyl: &WeylGroup, w: usize, i: usize) -> usize {
        self.index_of(&weyl.twisted_act(w, &self.reps[i]))
    }
}

/// One orbit of a parabolic subgroup on the moduli space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Class indices, increasing; the first is the representative.
    pub elements: Vec<usize>,
    /// Stabilizer of the representative in `Y / Y_{Q,n}`.
    pub stabilizer: Vec<usize>,
    /// Stabilizer of the representative's lift in `Y / Y_{Q,n}^{sc}`.
    pub sc_stabilizer: Vec<usize>,
    pub free: bool,
    pub singleton: bool,
    pub persistent: bool,
}

impl Orbit {
    pub fn rep(&self) -> usize {
        self.elements[0]
    }
}

/// Orbits of `W(S)` on the moduli space, ordered by representative.
pub fn decompose_orbits(
    cov: &CoveringDatum,
    moduli: &Moduli,
    weyl: &WeylGroup,
    mask: u64,
) -> Vec<Orbit> {
    let gens: Vec<usize> = (0..weyl.rank).filter(|&s| mask >> s & 1 == 1).collect();
    let sub = weyl.parabolic(mask);
    let sc = cov.levi_sc_lattice(mask);
    let mut seen = vec![false; moduli.len()];
    let mut out = vec![];
    for start in 0..moduli.len() {
        if seen[start] {
            continue;
        }
        let mut elems = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < elems.len() {
            for &s in &gens {
                let t = moduli.simple_action[s][elems[i]];
                if !seen[t] {
                    seen[t] = true;
                    elems.push(t);
                }
            }
            i += 1;
        }
        elems.sort_unstable();
        let y = &moduli.reps[start];
        let mut stab = vec![];
        let mut sc_stab = vec![];
        for &w in &sub {
            let diff = intmat::sub(&weyl.twisted_act(w, y), y);
            if cov.in_y_qn(&diff) {
                stab.push(w);
            }
            if intmat::contains(&sc, &diff) {
                sc_stab.push(w);
            }
        }
        out.push(Orbit {
            free: stab.len() == 1,
            singleton: elems.len() == 1,
            persistent: stab == sc_stab,
            elements: elems,
            stabilizer: stab,
            sc_stabilizer: sc_stab,
        });
    }
    out
}

/// Every `W`-orbit is persistent.
pub fn is_persistent(cov: &CoveringDatum, moduli: &Moduli, weyl: &WeylGroup) -> bool {
    let full = (1u64 << weyl.rank) - 1;
    decompose_orbits(cov, moduli, weyl, full)
        .iter()
        .all(|o| o.persistent)
}

/// Permutation character of the twisted action: fixed points of each element.
pub fn permutation_character(moduli: &Moduli, weyl: &WeylGroup, classes: &[usize]) -> Vec<i64> {
    (0..weyl.len())
        .map(|w| {
            classes
                .iter()
                .filter(|&&i| moduli.act(weyl, w, i) == i)
                .count() as i64
        })
        .collect()
}

/// `Z/d` factors of the finite group as a readable string.
pub fn describe_group(invariants: &[i64]) -> String {
    if invariants.is_empty() {
        return "1".into();
    }
    invariants
        .iter()
        .map(|d| format!("Z/{d}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cover(ty: char, r: usize, q: &[i64], n: i64) -> CoveringDatum {
        let rd = RootDatum::new(ty, r, LatticeKind::SimplyConnected).unwrap();
        CoveringDatum::new(rd, q, n, 1).unwrap()
    }

    #[test]
    fn sl2_lattices() {
        for m in 1..4 {
            let c = cover('A', 1, &[1], 4 * m);
            assert_eq!(c.y_qn, vec![vec![2 * m]]);
            assert_eq!(c.y_qn_sc, vec![vec![4 * m]]);
        }
    }

    #[test]
    fn sl3_n2() {
        let c = cover('A', 2, &[1, 1], 2);
        assert_eq!(c.y_qn, vec![vec![2, 0], vec![0, 2]]);
        let m = Moduli::new(&c);
        assert_eq!(m.reps, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn g2_lattices() {
        for n in 1..10 {
            let c = cover('G', 2, &[1, 3], n);
            let n2 = n / n.gcd(&3);
            assert_eq!(c.y_qn, vec![vec![n, 0], vec![0, n2]]);
            assert_eq!(c.y_qn_sc, c.y_qn);
            assert!(c.is_saturated());
        }
    }

    #[test]
    fn invalid_inputs() {
        let rd = RootDatum::new('A', 2, LatticeKind::SimplyConnected).unwrap();
        assert!(matches!(
            CoveringDatum::new(rd.clone(), &[1, 2], 2, 1),
            Err(Error::InvalidForm(_))
        ));
        assert!(matches!(
            CoveringDatum::new(rd.clone(), &[1, 1], 0, 1),
            Err(Error::InvalidDegree(0))
        ));
        assert!(matches!(
            CoveringDatum::new(rd, &[1, 1], 3, -1),
            Err(Error::InvalidXi { .. })
        ));
    }

    #[test]
    fn adjoint_needs_divisible_q() {
        let rd = RootDatum::new('A', 1, LatticeKind::Adjoint).unwrap();
        assert!(CoveringDatum::new(rd.clone(), &[1], 2, 1).is_err());
        let c = CoveringDatum::new(rd, &[4], 2, 1).unwrap();
        assert_eq!(c.bq, vec![vec![2]]);
    }
}

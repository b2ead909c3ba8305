//! Regular unramified genuine characters, the constituents `pi_Gamma` of the
//! principal series, and Whittaker dimensions computed from cell
//! representations.

use std::fmt;

use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};

use crate::characters::{induce, ClassFunction};
use crate::covering::{decompose_orbits, permutation_character, CoveringDatum, Moduli, Orbit};
use crate::error::{Error, Result};
use crate::intmat::{self, IMat, IVec};
use crate::kl::{cell_character, right_cells, CellDecomposition, Coxeter, KLData};
use crate::linalg::{self, QMat};
use crate::rootdata::{mask_members, WeylGroup};

/// A value `q^{q_exp} * exp(2 pi i phase)` with `phase` in `[0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharValue {
    pub q_exp: Rational64,
    pub phase: Rational64,
}

fn frac(x: Rational64) -> Rational64 {
    x - x.floor()
}

impl CharValue {
    pub fn new(q_exp: Rational64, phase: Rational64) -> Self {
        CharValue {
            q_exp,
            phase: frac(phase),
        }
    }

    pub fn one() -> Self {
        Self::q_power(Rational64::zero())
    }

    pub fn q_power(e: Rational64) -> Self {
        Self::new(e, Rational64::zero())
    }

    pub fn mul(&self, o: &CharValue) -> CharValue {
        CharValue::new(self.q_exp + o.q_exp, self.phase + o.phase)
    }

    pub fn inv(&self) -> CharValue {
        CharValue::new(-self.q_exp, -self.phase)
    }

    pub fn pow(&self, k: i64) -> CharValue {
        let k = Rational64::from(k);
        CharValue::new(self.q_exp * k, self.phase * k)
    }

    pub fn is_one(&self) -> bool {
        self.q_exp.is_zero() && self.phase.is_zero()
    }

    /// Exactly `q^e` with trivial phase.
    pub fn is_q_power(&self, e: i64) -> bool {
        self.q_exp == Rational64::from(e) && self.phase.is_zero()
    }

    /// Complex value at a numeric `q`.
    pub fn eval(&self, q: f64) -> num_complex::Complex64 {
        let m = q.powf(r64_to_f64(self.q_exp));
        num_complex::Complex64::from_polar(m, 2.0 * std::f64::consts::PI * r64_to_f64(self.phase))
    }
}

pub(crate) fn r64_to_f64(x: Rational64) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

impl fmt::Display for CharValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q^({})", self.q_exp)?;
        if !self.phase.is_zero() {
            write!(f, "*e({})", self.phase)?;
        }
        Ok(())
    }
}

/// An unramified genuine character, given by its values on the Hermite basis
/// of `Y_{Q,n}` and extended multiplicatively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenuineCharacter {
    pub basis: IMat,
    pub values: Vec<CharValue>,
    /// The q-exponent as a linear functional on `Y (x) Q`.
    pub lambda: Vec<Rational64>,
}

impl GenuineCharacter {
    pub fn new(cov: &CoveringDatum, values: Vec<CharValue>) -> Result<Self> {
        let basis = cov.y_qn.clone();
        if values.len() != basis.len() {
            return Err(Error::InvalidCharacter(format!(
                "expected {} values on the basis of Y_{{Q,n}}, got {}",
                basis.len(),
                values.len()
            )));
        }
        let m: QMat = basis
            .iter()
            .map(|r| r.iter().map(|&x| linalg::q(x)).collect())
            .collect();
        let rhs: Vec<_> = values.iter().map(|v| linalg::from_r64(v.q_exp)).collect();
        let sol = linalg::solve(&m, &rhs)
            .ok_or_else(|| Error::InvalidCharacter("Y_{Q,n} is not of full rank".into()))?;
        let lambda = sol.iter().map(big_to_r64).collect::<Result<_>>()?;
        Ok(GenuineCharacter {
            basis,
            values,
            lambda,
        })
    }

    /// `chi(s_y)` for `y` in `Y_{Q,n}`.
    pub fn eval(&self, y: &[i64]) -> Result<CharValue> {
        let c = intmat::coords(&self.basis, y)
            .ok_or_else(|| Error::InvalidCharacter(format!("{y:?} is not in Y_{{Q,n}}")))?;
        Ok(c
            .iter()
            .zip(&self.values)
            .fold(CharValue::one(), |acc, (&k, v)| acc.mul(&v.pow(k))))
    }

    /// Linear extension of the q-exponent to all of `Y`.
    pub fn q_exponent(&self, y: &[i64]) -> Rational64 {
        y.iter()
            .zip(&self.lambda)
            .map(|(&a, l)| l * Rational64::from(a))
            .sum()
    }

    /// `^w chi (y) = chi(w^{-1} y)`.
    pub fn act(&self, weyl: &WeylGroup, w: usize) -> GenuineCharacter {
        let winv = weyl.inverse[w];
        let values = self
            .basis
            .iter()
            .map(|b| {
                self.eval(&weyl.act(winv, b))
                    .expect("Y_{Q,n} is Weyl stable")
            })
            .collect();
        let m = weyl.matrix(winv);
        let lambda = (0..self.lambda.len())
            .map(|c| {
                (0..self.lambda.len())
                    .map(|i| self.lambda[i] * Rational64::from(m[i][c]))
                    .sum()
            })
            .collect();
        GenuineCharacter {
            basis: self.basis.clone(),
            values,
            lambda,
        }
    }

    /// Action of a word, last letter first: `^{s_1 ... s_k} chi`.
    pub fn act_word(&self, weyl: &WeylGroup, word: &[usize]) -> GenuineCharacter {
        let w = weyl.from_word(word);
        self.act(weyl, w)
    }

    /// `chi(n_alpha alpha^vee)` for the root with index `root` in `datum.roots`.
    pub fn on_root(&self, cov: &CoveringDatum, root: usize) -> CharValue {
        let v = intmat::scale(cov.n_alpha[root], &cov.datum.roots[root].coroot);
        self.eval(&v).expect("n_alpha alpha^vee lies in Y_{Q,n}")
    }

    /// The q-exponent vanishes on every given vector.
    pub fn is_unitary_on(&self, vectors: &QMat) -> bool {
        vectors.iter().all(|v| {
            let s: num_rational::BigRational = v
                .iter()
                .zip(&self.lambda)
                .map(|(a, l)| a * linalg::from_r64(*l))
                .sum();
            s.is_zero()
        })
    }
}

fn big_to_r64(x: &num_rational::BigRational) -> Result<Rational64> {
    match (x.numer().to_i64(), x.denom().to_i64()) {
        (Some(a), Some(b)) => Ok(Rational64::new(a, b)),
        _ => Err(Error::InvalidCharacter("exponent out of range".into())),
    }
}

/// `Phi(chi)`: root indices with `chi(n_alpha alpha^vee) = q^{-1}`.
pub fn phi_chi(cov: &CoveringDatum, chi: &GenuineCharacter) -> Vec<usize> {
    (0..cov.datum.roots.len())
        .filter(|&i| chi.on_root(cov, i).is_q_power(-1))
        .collect()
}

/// `^w chi != chi` for every `w != id`.
pub fn is_regular(weyl: &WeylGroup, chi: &GenuineCharacter) -> bool {
    (1..weyl.len()).all(|w| chi.act(weyl, w).values != chi.values)
}

/// Same as `is_regular`, also checking `chi(n_beta beta^vee) != 1` on
/// every root, which regularity forces.
pub fn check_regular(cov: &CoveringDatum, weyl: &WeylGroup, chi: &GenuineCharacter) -> bool {
    let reg = is_regular(weyl, chi);
    if reg {
        debug_assert!((0..cov.datum.roots.len()).all(|i| !chi.on_root(cov, i).is_one()));
    }
    reg
}

const GENERIC_PRIMES: [i64; 16] = [17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79];

/// A regular character with `Phi(chi) = phi0` for a set of simple roots.
///
/// The q-exponent is solved from `chi(n_j alpha_j^vee) = q^{-1}` on `phi0`,
/// distinct primes over 13 on the other simple roots, and zero on the
/// common kernel of the roots.
pub fn exceptional_character(
    cov: &CoveringDatum,
    weyl: &WeylGroup,
    phi0: &[usize],
) -> Result<GenuineCharacter> {
    let rd = &cov.datum;
    if let Some(&j) = phi0.iter().find(|&&j| j >= rd.rank) {
        return Err(Error::InvalidCharacter(format!("no simple root {}", j + 1)));
    }
    let roots_q: QMat = rd
        .simple_roots
        .iter()
        .map(|r| r.iter().map(|&x| linalg::q(x)).collect())
        .collect();
    let center = linalg::nullspace(&roots_q, rd.dim);
    for shift in 0..GENERIC_PRIMES.len() - rd.rank {
        let mut rows: QMat = vec![];
        let mut rhs = vec![];
        let mut generic = GENERIC_PRIMES[shift..].iter();
        for j in 0..rd.rank {
            rows.push(cov.scaled_coroot(j).iter().map(|&x| linalg::q(x)).collect());
            rhs.push(if phi0.contains(&j) {
                linalg::q(-1)
            } else {
                linalg::from_r64(Rational64::new(*generic.next().unwrap(), 13))
            });
        }
        for v in &center {
            rows.push(v.clone());
            rhs.push(linalg::q(0));
        }
        let lambda = linalg::solve(&rows, &rhs)
            .ok_or_else(|| Error::InvalidCharacter("exponent system is infeasible".into()))?;
        let values = cov
            .y_qn
            .iter()
            .map(|b| {
                let e: num_rational::BigRational = b
                    .iter()
                    .zip(&lambda)
                    .map(|(&x, l)| l * linalg::q(x))
                    .sum();
                big_to_r64(&e).map(CharValue::q_power)
            })
            .collect::<Result<Vec<_>>>()?;
        let chi = GenuineCharacter::new(cov, values)?;
        let mut want: Vec<usize> = phi0.to_vec();
        want.sort_unstable();
        want.dedup();
        if phi_chi(cov, &chi) == want && check_regular(cov, weyl, &chi) {
            return Ok(chi);
        }
    }
    Err(Error::InvalidCharacter(
        "no generic exponents found for the requested Phi(chi)".into(),
    ))
}

/// Everything derived from a covering datum that the dimension formulas use.
#[derive(Clone, Debug)]
pub struct Setting {
    pub cov: CoveringDatum,
    pub weyl: WeylGroup,
    pub moduli: Moduli,
    pub group: Coxeter,
    pub kl: KLData,
    pub cells: CellDecomposition,
    /// `W`-orbits on the moduli space.
    pub orbits: Vec<Orbit>,
}

impl Setting {
    pub fn new(cov: CoveringDatum) -> Result<Self> {
        let weyl = WeylGroup::new(&cov.datum)?;
        let moduli = Moduli::new(&cov);
        let group = Coxeter::from_weyl(&weyl);
        let kl = KLData::new(&group);
        let cells = right_cells(&group, &kl);
        let full = (1u64 << weyl.rank) - 1;
        let orbits = decompose_orbits(&cov, &moduli, &weyl, full);
        Ok(Setting {
            cov,
            weyl,
            moduli,
            group,
            kl,
            cells,
            orbits,
        })
    }

    pub fn full_mask(&self) -> u64 {
        (1u64 << self.weyl.rank) - 1
    }

    /// Permutation character `sigma_X` of the whole moduli space.
    pub fn sigma_x(&self) -> ClassFunction {
        let all: Vec<usize> = (0..self.moduli.len()).collect();
        self.sigma_on(&all).named("sigma_X")
    }

    /// Permutation character of `W` on a `W`-stable set of classes.
    pub fn sigma_on(&self, classes: &[usize]) -> ClassFunction {
        let pc = permutation_character(&self.moduli, &self.weyl, classes);
        ClassFunction::from_elements(&self.group, "sigma_X^y", &pc)
    }

    /// `sigma_X` evaluated on every element (one entry per element, in storage order).
    pub fn sigma_x_row(&self) -> Vec<i64> {
        let all: Vec<usize> = (0..self.moduli.len()).collect();
        permutation_character(&self.moduli, &self.weyl, &all)
    }

    /// `S(w) = {beta in Phi(chi) : w^{-1} beta^vee < 0}` as positions in `phi`.
    pub fn s_of(&self, phi: &[usize], w: usize) -> Vec<usize> {
        let winv = self.weyl.inverse[w];
        (0..phi.len())
            .filter(|&k| {
                let c = self.weyl.act(winv, &self.cov.datum.roots[phi[k]].coroot);
                self.cov.datum.is_positive_coroot(&c) == Some(false)
            })
            .collect()
    }
}

/// One irreducible constituent `pi_Gamma`, indexed by `S subset Phi(chi)`.
#[derive(Clone, Debug)]
pub struct Constituent {
    /// Root indices of `S`.
    pub s: Vec<usize>,
    pub name: String,
    /// `W_Gamma`, increasing.
    pub elements: Vec<usize>,
    /// `W_{Gamma_op} = W_Gamma w_G`, increasing.
    pub op_elements: Vec<usize>,
    /// Cell representation, present when `Phi(chi)` consists of simple roots.
    pub sigma: Option<ClassFunction>,
    pub plus: bool,
    pub minus: bool,
}

impl Constituent {
    /// `S` as a mask of simple roots (only meaningful when `S` is simple).
    pub fn mask(&self) -> u64 {
        self.s.iter().fold(0, |m, &i| m | 1 << i)
    }
}

/// Label of a root: `a{j}` for simple roots, `r{i}` otherwise.
pub fn root_label(setting: &Setting, root: usize) -> String {
    if root < setting.cov.datum.rank {
        format!("a{}", root + 1)
    } else {
        format!("r{}", root + 1)
    }
}

/// Simple roots of `Phi(chi)` as a mask, when `Phi(chi)` lies in `Delta`.
pub fn simple_mask(setting: &Setting, phi: &[usize]) -> Option<u64> {
    if phi.iter().all(|&i| i < setting.cov.datum.rank) {
        Some(phi.iter().fold(0, |m, &i| m | 1 << i))
    } else {
        None
    }
}

/// The constituents of `I(chi)`, ordered by `|S|` and then by `S`.
pub fn constituents(setting: &Setting, chi: &GenuineCharacter) -> Result<Vec<Constituent>> {
    let phi = phi_chi(&setting.cov, chi);
    constituents_for(setting, &phi)
}

/// Constituents for a given `Phi(chi)` (root indices).
pub fn constituents_for(setting: &Setting, phi: &[usize]) -> Result<Vec<Constituent>> {
    let k = phi.len();
    if k > 20 {
        return Err(Error::Invalid("Phi(chi) too large".into()));
    }
    let mut buckets: Vec<Vec<usize>> = vec![vec![]; 1 << k];
    for w in 0..setting.weyl.len() {
        let m = setting.s_of(phi, w).iter().fold(0usize, |m, &i| m | 1 << i);
        buckets[m].push(w);
    }
    let attach = simple_mask(setting, phi).is_some();
    let mut order: Vec<usize> = (0..1usize << k).collect();
    order.sort_by_key(|&m| (m.count_ones(), (0..k).filter(|&i| m >> i & 1 == 1).collect::<Vec<_>>()));
    let wg = setting.weyl.longest;
    let mut out = vec![];
    for m in order {
        let elements = std::mem::take(&mut buckets[m]);
        if elements.is_empty() {
            continue;
        }
        let s: Vec<usize> = (0..k).filter(|&i| m >> i & 1 == 1).map(|i| phi[i]).collect();
        let plus = m == 0;
        let minus = m == (1 << k) - 1;
        let name = match (plus, minus) {
            (true, true) => "Gamma".to_string(),
            (true, false) => "Gamma+".to_string(),
            (false, true) => "Gamma-".to_string(),
            _ => format!(
                "Gamma_{{{}}}",
                s.iter()
                    .map(|&r| root_label(setting, r))
                    .collect::<Vec<_>>()
                    .join(",")
            ),
        };
        let sigma = if attach {
            Some(cell_union_character(setting, &elements, &name)?)
        } else {
            None
        };
        let mut op_elements: Vec<usize> =
            elements.iter().map(|&w| setting.weyl.mul(w, wg)).collect();
        op_elements.sort_unstable();
        out.push(Constituent {
            s,
            name,
            elements,
            op_elements,
            sigma,
            plus,
            minus,
        });
    }
    Ok(out)
}

/// Character of a union of right cells; fails if `elements` is not one.
pub fn cell_union_character(setting: &Setting, elements: &[usize], name: &str) -> Result<ClassFunction> {
    let cd = &setting.cells;
    let inside = |w: usize| elements.binary_search(&w).is_ok();
    for &w in elements {
        if !cd.cells[cd.cell_of[w]].iter().all(|&x| inside(x)) {
            return Err(Error::NotCellUnion);
        }
    }
    Ok(cell_character(&setting.group, &setting.kl, elements, name))
}

/// `W_{Gamma_S^natural} = w_S R_S` for a set `S` of simple roots.
pub fn natural_set(weyl: &WeylGroup, mask: u64) -> Vec<usize> {
    let ws = weyl.parabolic_longest(mask);
    let mut v: Vec<usize> = weyl
        .min_coset_reps(mask)
        .into_iter()
        .map(|r| weyl.mul(ws, r))
        .collect();
    v.sort_unstable();
    v
}

/// Whether a dimension is a theorem or an instance checked by scattering.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    TheoremBacked,
    VerifiedInstance,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::TheoremBacked => "theorem-backed",
            Status::VerifiedInstance => "verified-instance",
        }
    }
}

fn to_i64(x: Rational64) -> i64 {
    debug_assert!(x.is_integer());
    x.to_integer()
}

/// `<sigma_X^y, sigma_Gamma>` on one `W`-orbit.
pub fn whittaker_dim(setting: &Setting, gamma: &Constituent, orbit: &Orbit) -> Result<(i64, Status)> {
    let sigma = gamma
        .sigma
        .as_ref()
        .ok_or_else(|| Error::Invalid("sigma_Gamma needs Phi(chi) inside Delta".into()))?;
    let sx = setting.sigma_on(&orbit.elements);
    let d = to_i64(sx.inner(sigma, &setting.group));
    let status = if gamma.plus || gamma.minus || (orbit.singleton && orbit.persistent) {
        Status::TheoremBacked
    } else {
        Status::VerifiedInstance
    };
    Ok((d, status))
}

/// `<sigma_X, sigma_Gamma>`.
pub fn whittaker_dim_total(setting: &Setting, gamma: &Constituent) -> Result<i64> {
    let sigma = gamma
        .sigma
        .as_ref()
        .ok_or_else(|| Error::Invalid("sigma_Gamma needs Phi(chi) inside Delta".into()))?;
    Ok(to_i64(setting.sigma_x().inner(sigma, &setting.group)))
}

/// Inclusion-exclusion over `S subset S' subset Phi(chi)` of
/// `<sigma_X^y, Ind_{W(S')}^W eps>`, optionally on one orbit.
pub fn coarse_dim(setting: &Setting, phi_mask: u64, s_mask: u64, orbit: Option<&Orbit>) -> i64 {
    let sx = match orbit {
        Some(o) => setting.sigma_on(&o.elements),
        None => setting.sigma_x(),
    };
    let free: Vec<usize> = mask_members(phi_mask & !s_mask);
    let mut total = 0i64;
    for sub in 0..1u64 << free.len() {
        let extra = free
            .iter()
            .enumerate()
            .filter(|(i, _)| sub >> i & 1 == 1)
            .fold(0u64, |m, (_, &j)| m | 1 << j);
        let sp = s_mask | extra;
        let h = Coxeter::parabolic(&setting.weyl, sp);
        let ind = induce(&h, &ClassFunction::sign(&h), &setting.group);
        let v = to_i64(sx.inner(&ind, &setting.group));
        let sign = if extra.count_ones() % 2 == 0 { 1 } else { -1 };
        total += sign * v;
    }
    total
}

/// Gindikin-Karpelevich coefficient as a product of factors
/// `(1 - q^{-1} x) / (1 - x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkCoefficient {
    /// The values `x_alpha` for `alpha in Phi_w`.
    pub xs: Vec<CharValue>,
}

impl GkCoefficient {
    /// Exact zero test: some numerator factor vanishes.
    pub fn is_zero(&self) -> bool {
        self.xs.iter().any(|x| x.is_q_power(1))
    }

    pub fn eval(&self, q: f64) -> num_complex::Complex64 {
        self.xs
            .iter()
            .map(|x| {
                let v = x.eval(q);
                (1.0 - v / q) / (1.0 - v)
            })
            .product()
    }
}

/// `c(w, chi)` over `Phi_w = {alpha > 0 : w alpha < 0}`.
pub fn gk_coefficient(
    cov: &CoveringDatum,
    weyl: &WeylGroup,
    w: usize,
    chi: &GenuineCharacter,
) -> Result<GkCoefficient> {
    let rd = &cov.datum;
    let mut xs = vec![];
    for i in 0..rd.num_positive() {
        let c = weyl.act(w, &rd.roots[i].coroot);
        if rd.is_positive_coroot(&c) == Some(false) {
            let x = chi.on_root(cov, i);
            if x.is_one() {
                return Err(Error::Pole(format!("root {} has value 1", i + 1)));
            }
            xs.push(x);
        }
    }
    Ok(GkCoefficient { xs })
}

/// `(W^T, W - W^T)` for an intertwining map `I(^{w1^{-1}} chi) -> I(^{w2^{-1}} chi)`.
pub fn jacquet_sets(
    setting: &Setting,
    w1: usize,
    w2: usize,
    phi: &[usize],
) -> (Vec<usize>, Vec<usize>) {
    let rd = &setting.cov.datum;
    let weyl = &setting.weyl;
    let side = |w: usize, root: usize| -> i64 {
        let c = weyl.act(weyl.inverse[w], &rd.roots[root].coroot);
        if rd.is_positive_coroot(&c) == Some(true) {
            1
        } else {
            -1
        }
    };
    let walls: Vec<usize> = phi
        .iter()
        .copied()
        .filter(|&a| side(w1, a) * side(w2, a) < 0)
        .collect();
    let (mut ker, mut im) = (vec![], vec![]);
    for w in 0..weyl.len() {
        if walls.iter().any(|&a| side(w1, a) * side(w, a) > 0) {
            ker.push(w);
        } else {
            im.push(w);
        }
    }
    (ker, im)
}

/// Predicates of a constituent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Predicates {
    pub square_integrable: bool,
    pub tempered: bool,
    pub unramified: bool,
}

pub fn constituent_predicates(
    setting: &Setting,
    gamma: &Constituent,
    chi: &GenuineCharacter,
) -> Predicates {
    let rd = &setting.cov.datum;
    let phi = phi_chi(&setting.cov, chi);
    let rows: QMat = phi
        .iter()
        .map(|&a| rd.roots[a].root.iter().map(|&x| linalg::q(x)).collect())
        .collect();
    let kernel = if rows.is_empty() {
        (0..rd.dim)
            .map(|i| (0..rd.dim).map(|j| linalg::q(i64::from(i == j))).collect())
            .collect()
    } else {
        linalg::nullspace(&rows, rd.dim)
    };
    Predicates {
        square_integrable: gamma.plus && phi.len() == rd.rank,
        tempered: gamma.plus && chi.is_unitary_on(&kernel),
        unramified: gamma.minus,
    }
}

/// `dim / ((|X| / |W|) dim sigma_Gamma)`.
pub fn asymptotic_ratio(dim: i64, moduli_size: usize, weyl_size: usize, sigma_degree: i64) -> Rational64 {
    Rational64::new(dim * weyl_size as i64, moduli_size as i64 * sigma_degree)
}

/// Lift `Y` vectors of an orbit to display strings like `a1v+a2v`.
pub fn vector_label(setting: &Setting, y: &IVec) -> String {
    let labels = &setting.cov.datum.basis_labels;
    let mut parts = vec![];
    for (c, l) in y.iter().zip(labels) {
        match c {
            0 => {}
            1 => parts.push(l.clone()),
            -1 => parts.push(format!("-{l}")),
            _ => parts.push(format!("{c}{l}")),
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+").replace("+-", "-")
    }
}

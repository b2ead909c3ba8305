//! Scattering matrices of intertwining operators on Whittaker functionals.
//!
//! Matrices are indexed by a transversal of `Y / Y_{Q,n}`. The entry in row
//! `y1` and column `y` of `M(w, chi)` is `tau(w, chi, s_{y1}, s_y)`, so the
//! cocycle relation reads `M(w2 w1, chi) = M(w2, ^{w1} chi) M(w1, chi)`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::covering::{CoveringDatum, Moduli, Orbit};
use crate::error::{Error, Result};
use crate::gauss::{GaussMonomial, Mono, Poly, RatExpr};
use crate::intmat::{self, IVec};
use crate::mpoly::{self, MPoly};
use crate::whittaker::{r64_to_f64, Constituent, GenuineCharacter, Setting};

/// A set of representatives in `Y`, one per class of `Y / Y_{Q,n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transversal {
    pub reps: Vec<IVec>,
    /// `slot[c]`: position of the representative of moduli class `c`.
    slot: Vec<usize>,
}

impl Transversal {
    /// The box representatives of the moduli space, in their order.
    pub fn standard(moduli: &Moduli) -> Self {
        Transversal {
            reps: moduli.reps.clone(),
            slot: (0..moduli.len()).collect(),
        }
    }

    /// An arbitrary ordered list of representatives.
    pub fn custom(moduli: &Moduli, reps: Vec<IVec>) -> Result<Self> {
        let mut slot = vec![usize::MAX; moduli.len()];
        for (i, r) in reps.iter().enumerate() {
            let c = moduli.index_of(r);
            if slot[c] != usize::MAX {
                return Err(Error::Invalid(format!("{r:?} repeats a class")));
            }
            slot[c] = i;
        }
        if reps.len() != moduli.len() {
            return Err(Error::Invalid(format!(
                "expected {} representatives, got {}",
                moduli.len(),
                reps.len()
            )));
        }
        Ok(Transversal { reps, slot })
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Position of the representative of the class of `y`.
    pub fn slot_of(&self, moduli: &Moduli, y: &[i64]) -> usize {
        self.slot[moduli.index_of(y)]
    }

    /// Positions of the classes of an orbit, increasing.
    pub fn block(&self, orbit: &Orbit) -> Vec<usize> {
        let mut v: Vec<usize> = orbit.elements.iter().map(|&c| self.slot[c]).collect();
        v.sort_unstable();
        v
    }
}

/// Which half of the rank-one formula a term comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TauPart {
    Diagonal,
    Reflected,
}

#[derive(Clone, Debug)]
pub struct TauTerm {
    pub row: usize,
    pub col: usize,
    pub part: TauPart,
    pub value: RatExpr,
}

fn simple_element(setting: &Setting, j: usize) -> usize {
    setting.weyl.rmul[0][j]
}

fn ceil_div(a: i64, b: i64) -> i64 {
    Integer::div_ceil(&a, &b)
}

fn signed_mono(n: i64, sign: i64, m: Mono) -> Poly {
    Poly::mono(n, sign as i128, m)
}

fn times(n: i64, a: (i64, Mono), b: (i64, Mono)) -> (i64, Mono) {
    let (s, m) = a.1.mul(&b.1, n);
    (a.0 * b.0 * s, m)
}

/// Terms of the rank-one matrix `M(w_alpha, psi)` for the simple root `j`.
pub fn tau_terms(setting: &Setting, tr: &Transversal, j: usize, psi: &GenuineCharacter) -> Result<Vec<TauTerm>> {
    let cov = &setting.cov;
    let rd = &cov.datum;
    let n = cov.n;
    let coroot = &rd.simple_coroots[j];
    let na = cov.n_simple(j);
    let x = psi.eval(&cov.scaled_coroot(j))?;
    if x.is_one() {
        return Err(Error::Pole(format!("psi(n_a a{}^vee) = 1", j + 1)));
    }
    let target = psi.act(&setting.weyl, simple_element(setting, j));
    let q_alpha = cov.q_form(coroot);
    let mut out = Vec::with_capacity(2 * tr.len());
    for (col, y) in tr.reps.iter().enumerate() {
        let p = rd.pair_simple(y, j);
        // Diagonal part: (1 - q^{-1}) x^k / (1 - x).
        let k = ceil_div(p, na);
        let (sx, mx) = Mono::from_char_value(n, &x.pow(k));
        let mut num = signed_mono(n, sx, mx.clone());
        let (sq, mq) = mx.mul(&Mono::q_power(n, Rational64::from(-1)), n);
        num.add_term(-(sx * sq) as i128, mq);
        let mut diag = RatExpr::from_poly(num);
        diag.den.insert(x, 1);
        out.push(TauTerm {
            row: col,
            col,
            part: TauPart::Diagonal,
            value: diag,
        });
        // Reflected part, moved to the transversal representative.
        let y1 = rd.twisted_reflect(j, y);
        let row = tr.slot_of(&setting.moduli, &y1);
        let d = intmat::sub(&tr.reps[row], &y1);
        let jj = p - 1;
        let mut v = (1, Mono::xi_power(n, jj * cov.d_form(y, coroot)));
        v = times(n, v, Mono::g(n, jj * q_alpha));
        v = times(n, v, (1, Mono::xi_power(n, cov.d_form(&y1, &d))));
        let (sc, mc) = Mono::from_char_value(n, &target.eval(&d)?.inv());
        v = times(n, v, (sc, mc));
        out.push(TauTerm {
            row,
            col,
            part: TauPart::Reflected,
            value: RatExpr::from_poly(signed_mono(n, v.0, v.1)),
        });
    }
    Ok(out)
}

/// `tau(w_alpha, psi, s_{y1}, s_y)` for transversal positions `row` and `col`.
pub fn tau_rank_one(
    setting: &Setting,
    tr: &Transversal,
    j: usize,
    psi: &GenuineCharacter,
    row: usize,
    col: usize,
) -> Result<RatExpr> {
    let terms = tau_terms(setting, tr, j, psi)?;
    Ok(terms
        .iter()
        .filter(|t| t.row == row && t.col == col)
        .fold(RatExpr::zero(setting.cov.n), |acc, t| acc.add(&t.value)))
}

/// A dense matrix of formal entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScatteringMatrix {
    pub n: i64,
    pub rows: Vec<Vec<RatExpr>>,
}

impl ScatteringMatrix {
    pub fn zero(n: i64, size: usize) -> Self {
        ScatteringMatrix {
            n,
            rows: vec![vec![RatExpr::zero(n); size]; size],
        }
    }

    pub fn identity(n: i64, size: usize) -> Self {
        let mut m = Self::zero(n, size);
        for i in 0..size {
            m.rows[i][i] = RatExpr::from_poly(Poly::one(n));
        }
        m
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn mul(&self, o: &ScatteringMatrix) -> ScatteringMatrix {
        let size = self.size();
        let mut out = Self::zero(self.n, size);
        for i in 0..size {
            for k in 0..size {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..size {
                    let b = &o.rows[k][j];
                    if !b.is_zero() {
                        out.rows[i][j] = out.rows[i][j].add(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    /// Principal submatrix on the given positions.
    pub fn restrict(&self, idx: &[usize]) -> ScatteringMatrix {
        ScatteringMatrix {
            n: self.n,
            rows: idx
                .iter()
                .map(|&i| idx.iter().map(|&j| self.rows[i][j].clone()).collect())
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(RatExpr::is_zero)
    }

    pub fn equals(&self, o: &ScatteringMatrix) -> bool {
        self.size() == o.size()
            && self
                .rows
                .iter()
                .flatten()
                .zip(o.rows.iter().flatten())
                .all(|(a, b)| a.equals(b))
    }
}

/// Positions of a block, or all positions.
fn positions(tr: &Transversal, block: Option<&[usize]>) -> Vec<usize> {
    block.map_or_else(|| (0..tr.len()).collect(), <[usize]>::to_vec)
}

/// Local index of each position in a block.
fn local_index(size: usize, pos: &[usize]) -> Vec<Option<usize>> {
    let mut local = vec![None; size];
    for (i, &p) in pos.iter().enumerate() {
        local[p] = Some(i);
    }
    local
}

/// `M(w_alpha, psi)`, optionally on a `W`-stable block of positions.
pub fn tau_matrix(
    setting: &Setting,
    tr: &Transversal,
    j: usize,
    psi: &GenuineCharacter,
    block: Option<&[usize]>,
) -> Result<ScatteringMatrix> {
    let pos = positions(tr, block);
    let local = local_index(tr.len(), &pos);
    let mut m = ScatteringMatrix::zero(setting.cov.n, pos.len());
    for t in tau_terms(setting, tr, j, psi)? {
        match (local[t.row], local[t.col]) {
            (Some(r), Some(c)) => m.rows[r][c] = m.rows[r][c].add(&t.value),
            (None, Some(_)) => {
                return Err(Error::Invalid("block is not stable under the Weyl group".into()))
            }
            _ => {}
        }
    }
    Ok(m)
}

/// `M(w, chi)` for `w` given by a reduced word (first letter leftmost),
/// optionally restricted to a `W`-stable block.
pub fn scattering_matrix(
    setting: &Setting,
    tr: &Transversal,
    word: &[usize],
    chi: &GenuineCharacter,
    block: Option<&[usize]>,
) -> Result<ScatteringMatrix> {
    let size = block.map_or(tr.len(), <[usize]>::len);
    let mut m = ScatteringMatrix::identity(setting.cov.n, size);
    let mut cur = chi.clone();
    for &s in word.iter().rev() {
        m = tau_matrix(setting, tr, s, &cur, block)?.mul(&m);
        cur = cur.act(&setting.weyl, simple_element(setting, s));
    }
    Ok(m)
}

/// Representative change: the matrix of `M(w, chi)` on `to`, computed from
/// its matrix on `from` with `s_{y+z} = xi^{D(y,z)} s_y s_z`.
pub fn change_representatives(
    setting: &Setting,
    m: &ScatteringMatrix,
    from: &Transversal,
    to: &Transversal,
    w: usize,
    chi: &GenuineCharacter,
) -> Result<ScatteringMatrix> {
    let cov = &setting.cov;
    let n = cov.n;
    let target = chi.act(&setting.weyl, w);
    let size = from.len();
    // Position in `to` of each position of `from`, with the adjustment factor.
    let mut map = vec![0; size];
    let mut row_f = vec![];
    let mut col_f = vec![];
    for (i, r) in from.reps.iter().enumerate() {
        let k = to.slot_of(&setting.moduli, r);
        map[i] = k;
        let z = intmat::sub(&to.reps[k], r);
        let xi = (1, Mono::xi_power(n, cov.d_form(r, &z)));
        let tz = Mono::from_char_value(n, &target.eval(&z)?.inv());
        let cz = Mono::from_char_value(n, &chi.eval(&z)?);
        row_f.push(times(n, xi.clone(), tz));
        col_f.push(times(n, xi, cz));
    }
    let mut out = ScatteringMatrix::zero(n, size);
    for i in 0..size {
        for j in 0..size {
            let e = &m.rows[i][j];
            if e.is_zero() {
                continue;
            }
            let (s, f) = times(n, row_f[i].clone(), col_f[j].clone());
            let mut v = e.clone();
            v.num = v.num.mul_mono(s as i128, &f);
            out.rows[map[i]][map[j]] = v;
        }
    }
    Ok(out)
}

// Numeric evaluation.

#[derive(Clone, Debug, PartialEq)]
pub struct NumericOptions {
    pub q: f64,
    pub seeds: Vec<u64>,
    /// Singular values below `tol` times the product of the factor norms count as zero.
    pub tol: f64,
}

impl Default for NumericOptions {
    fn default() -> Self {
        NumericOptions {
            q: 9.0,
            seeds: (1..=5).collect(),
            tol: 1e-8,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericRank {
    /// Majority rank (smallest on ties).
    pub rank: usize,
    pub per_seed: Vec<usize>,
    pub stable: bool,
}

/// Gauss sum values `g(k)` for `0 <= k <= n/2`, with random phases on the
/// residues below `n/2` and `g(k) g(n-k) = xi^k q^{-1}` built in.
pub fn gauss_values(n: i64, xi: i64, q: f64, seed: u64) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let half = (n / 2).max(0) as usize;
    let mut g = vec![Complex64::new(-1.0 / q, 0.0); half + 1];
    for (k, v) in g.iter_mut().enumerate().skip(1) {
        let k = k as i64;
        *v = if 2 * k < n {
            let theta: f64 = rng.gen::<f64>() * std::f64::consts::TAU;
            Complex64::from_polar(q.powf(-0.5), theta)
        } else if xi.pow((k % 2) as u32) == 1 {
            Complex64::new(q.powf(-0.5), 0.0)
        } else {
            Complex64::new(0.0, q.powf(-0.5))
        };
    }
    g
}

/// Numeric `M(w_alpha, psi)` on a block, gauged by
/// `q^{lambda_target(row) - lambda_source(col)}`, and the spectral norm of
/// the entrywise magnitudes of its terms.
fn numeric_tau(
    setting: &Setting,
    tr: &Transversal,
    j: usize,
    psi: &GenuineCharacter,
    pos: &[usize],
    q: f64,
    gv: &[Complex64],
) -> Result<(DMatrix<Complex64>, f64)> {
    let xi = setting.cov.xi as f64;
    let target = psi.act(&setting.weyl, simple_element(setting, j));
    let local = local_index(tr.len(), pos);
    let size = pos.len();
    let mut m = DMatrix::<Complex64>::zeros(size, size);
    let mut a = DMatrix::<f64>::zeros(size, size);
    for t in tau_terms(setting, tr, j, psi)? {
        let (Some(r), Some(c)) = (local[t.row], local[t.col]) else { continue };
        let gauge = q.powf(r64_to_f64(
            target.q_exponent(&tr.reps[t.row]) - psi.q_exponent(&tr.reps[t.col]),
        ));
        m[(r, c)] += t.value.eval(q, xi, gv) * gauge;
        a[(r, c)] += t.value.eval_abs(q, xi, gv) * gauge;
    }
    Ok((m, spectral_norm(&a)))
}

fn spectral_norm(a: &DMatrix<f64>) -> f64 {
    if a.is_empty() {
        return 0.0;
    }
    a.clone()
        .svd(false, false)
        .singular_values
        .iter()
        .fold(0.0, |x: f64, &y| x.max(y))
}

/// Numeric `M(w, chi)` on a block together with its magnitude scale.
pub fn numeric_matrix(
    setting: &Setting,
    tr: &Transversal,
    word: &[usize],
    chi: &GenuineCharacter,
    block: Option<&[usize]>,
    q: f64,
    gv: &[Complex64],
) -> Result<(DMatrix<Complex64>, f64)> {
    let pos = positions(tr, block);
    let mut m = DMatrix::<Complex64>::identity(pos.len(), pos.len());
    let mut scale = 1.0;
    let mut cur = chi.clone();
    for &s in word.iter().rev() {
        let (t, norm) = numeric_tau(setting, tr, s, &cur, &pos, q, gv)?;
        m = t * m;
        scale *= norm;
        cur = cur.act(&setting.weyl, simple_element(setting, s));
    }
    Ok((m, scale))
}

fn count_rank(m: &DMatrix<Complex64>, threshold: f64) -> usize {
    if m.is_empty() {
        return 0;
    }
    m.clone()
        .svd(false, false)
        .singular_values
        .iter()
        .filter(|&&s| s > threshold)
        .count()
}

fn majority(per_seed: Vec<usize>) -> NumericRank {
    let mut best = (0, usize::MAX);
    for &r in &per_seed {
        let c = per_seed.iter().filter(|&&x| x == r).count();
        if c > best.0 || (c == best.0 && r < best.1) {
            best = (c, r);
        }
    }
    let stable = per_seed.iter().all(|&r| r == best.1);
    NumericRank {
        rank: if per_seed.is_empty() { 0 } else { best.1 },
        per_seed,
        stable,
    }
}

/// Numeric rank of the horizontal concatenation of several `M(w, chi)` blocks.
pub fn numeric_rank(
    setting: &Setting,
    tr: &Transversal,
    factors: &[(Vec<usize>, GenuineCharacter)],
    block: Option<&[usize]>,
    opts: &NumericOptions,
) -> Result<NumericRank> {
    let rows = block.map_or(tr.len(), <[usize]>::len);
    let mut per_seed = vec![];
    for &seed in &opts.seeds {
        let gv = gauss_values(setting.cov.n, setting.cov.xi, opts.q, seed);
        let mut cat = DMatrix::<Complex64>::zeros(rows, rows * factors.len());
        let mut scale: f64 = 0.0;
        for (i, (word, chi)) in factors.iter().enumerate() {
            let (m, s) = numeric_matrix(setting, tr, word, chi, block, opts.q, &gv)?;
            cat.view_mut((0, i * rows), (rows, rows)).copy_from(&m);
            scale = scale.max(s);
        }
        per_seed.push(count_rank(&cat, opts.tol * scale));
    }
    Ok(majority(per_seed))
}

// Exact evaluation.

/// Rank over the field of rational functions in `t = q^{1/L}` and one
/// variable `u_k = g(k)` per residue pair `k < n/2`, with `xi = +-1` and
/// `g(n/2) = c q^{-1/2}` where `c^2 = xi^{n/2}`.
pub fn exact_rank(rows: &[Vec<RatExpr>], xi: i64) -> Result<usize> {
    let Some(first) = rows.iter().flatten().next() else { return Ok(0) };
    let n = first.n();
    // Clear denominators row by row.
    let mut polys: Vec<Vec<Poly>> = vec![];
    for row in rows {
        let mut den = std::collections::BTreeMap::new();
        for e in row {
            for (x, &m) in &e.den {
                let d = den.entry(*x).or_insert(0);
                *d = (*d).max(m);
            }
        }
        polys.push(row.iter().map(|e| e.lift_to(&den)).collect());
    }
    let mut l: i64 = 2;
    for p in polys.iter().flatten() {
        for m in p.terms.keys() {
            l = l.lcm(m.q_exp.denom());
        }
    }
    let enc = Encoder {
        n,
        l,
        xi,
        nvars: 1 + ((n - 1) / 2).max(0) as usize,
    };
    let mat = polys
        .iter()
        .map(|r| r.iter().map(|p| enc.poly(p)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(mpoly::bareiss_rank(mat))
}

struct Encoder {
    n: i64,
    l: i64,
    xi: i64,
    nvars: usize,
}

impl Encoder {
    fn poly(&self, p: &Poly) -> Result<MPoly> {
        let mut out = MPoly::zero();
        for (m, &c) in &p.terms {
            let (e, coeff) = self.mono(m)?;
            out.add_term(e, coeff * num_bigint::BigInt::from(c));
        }
        Ok(out)
    }

    fn mono(&self, m: &Mono) -> Result<(Vec<i64>, mpoly::GaussInt)> {
        let mut e = vec![0i64; self.nvars];
        let t = m.q_exp * Rational64::from(self.l);
        e[0] = t.to_integer();
        let quarter = m.phase * Rational64::from(4);
        if !quarter.is_integer() {
            return Err(Error::ExactUnsupported(format!("phase {} is not a multiple of 1/4", m.phase)));
        }
        let mut ipow = quarter.to_integer();
        if m.xi == 1 && self.xi == -1 {
            ipow += 2;
        }
        for (i, &a) in m.g.iter().enumerate() {
            let k = i as i64 + 1;
            if 2 * k < self.n {
                e[k as usize] += a;
            } else if a != 0 {
                // Self-paired residue: exponent is 0 or 1 in canonical form.
                e[0] -= a * self.l / 2;
                if self.xi.pow((k % 2) as u32) == -1 {
                    ipow += a;
                }
            }
        }
        Ok((e, mpoly::i_power(ipow)))
    }
}

/// Rank mode for scattering blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMode {
    Numeric,
    Exact,
}

impl std::str::FromStr for RankMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "numeric" => Ok(RankMode::Numeric),
            "exact" | "exact-generic" => Ok(RankMode::Exact),
            _ => Err(Error::Invalid(format!("unknown rank mode `{s}`"))),
        }
    }
}

/// Rank of the horizontal concatenation of `M(w, chi)` blocks. Numeric
/// instability is an error.
pub fn block_rank(
    setting: &Setting,
    tr: &Transversal,
    factors: &[(Vec<usize>, GenuineCharacter)],
    block: Option<&[usize]>,
    mode: RankMode,
    opts: &NumericOptions,
) -> Result<usize> {
    match mode {
        RankMode::Numeric => {
            let r = numeric_rank(setting, tr, factors, block, opts)?;
            if r.stable {
                Ok(r.rank)
            } else {
                Err(Error::Unstable(r.per_seed))
            }
        }
        RankMode::Exact => {
            let mats = factors
                .iter()
                .map(|(w, c)| scattering_matrix(setting, tr, w, c, block))
                .collect::<Result<Vec<_>>>()?;
            let size = block.map_or(tr.len(), <[usize]>::len);
            let rows: Vec<Vec<RatExpr>> = (0..size)
                .map(|i| mats.iter().flat_map(|m| m.rows[i].iter().cloned()).collect())
                .collect();
            exact_rank(&rows, setting.cov.xi)
        }
    }
}

/// The operator whose image is `pi_Gamma`: `T(w_G, ^{w_G w^{-1}} chi)` for
/// the first `w` in `W_Gamma`. Returns the reduced word of `w_G` and the
/// source character.
pub fn constituent_operator(
    setting: &Setting,
    gamma: &Constituent,
    chi: &GenuineCharacter,
) -> (Vec<usize>, GenuineCharacter) {
    let weyl = &setting.weyl;
    let w = gamma.elements[0];
    let src = weyl.mul(weyl.longest, weyl.inverse[w]);
    (weyl.word(weyl.longest).to_vec(), chi.act(weyl, src))
}

/// `dim Wh(pi_Gamma)_O` as the rank of the orbit block of its operator.
pub fn constituent_block_rank(
    setting: &Setting,
    tr: &Transversal,
    gamma: &Constituent,
    chi: &GenuineCharacter,
    orbit: &Orbit,
    mode: RankMode,
    opts: &NumericOptions,
) -> Result<usize> {
    let block = tr.block(orbit);
    let op = constituent_operator(setting, gamma, chi);
    block_rank(setting, tr, &[op], Some(&block), mode, opts)
}

/// Dimension of the joint kernel of the adjoints of `T(w_alpha, ^{w_alpha} chi)`
/// on an orbit, i.e. of row vectors killed by every rank-one block.
pub fn theta_kernel_dim(
    setting: &Setting,
    tr: &Transversal,
    chi: &GenuineCharacter,
    orbit: &Orbit,
    mode: RankMode,
    opts: &NumericOptions,
) -> Result<usize> {
    if !orbit.persistent {
        return Err(Error::NotPersistent(format!("orbit of class {}", orbit.rep())));
    }
    let block = tr.block(orbit);
    let factors: Vec<(Vec<usize>, GenuineCharacter)> = (0..setting.weyl.rank)
        .map(|j| (vec![j], chi.act(&setting.weyl, simple_element(setting, j))))
        .collect();
    let r = block_rank(setting, tr, &factors, Some(&block), mode, opts)?;
    Ok(block.len() - r)
}

// The d-function.

/// `d(w_alpha, y) = -q^{-k} xi^{j D(y, alpha^vee)} g(j Q(alpha^vee))^{-1}`
/// with `j = <y, alpha> - 1` and `k = ceil(<y, alpha> / n_alpha)`.
pub fn d_simple(cov: &CoveringDatum, j: usize, y: &[i64]) -> (i64, Mono) {
    let n = cov.n;
    let coroot = &cov.datum.simple_coroots[j];
    let p = cov.datum.pair_simple(y, j);
    let jj = p - 1;
    let k = ceil_div(p, cov.n_simple(j));
    let (sg, g) = Mono::g(n, jj * cov.q_form(coroot));
    let (si, ginv) = g.inv(n);
    let mut v = (-1, Mono::q_power(n, Rational64::from(-k)));
    v = times(n, v, (1, Mono::xi_power(n, jj * cov.d_form(y, coroot))));
    times(n, v, (sg * si, ginv))
}

/// `d(w, y)` along a word (first letter leftmost, applied last).
pub fn d_word(cov: &CoveringDatum, word: &[usize], y: &[i64]) -> (i64, Mono) {
    let n = cov.n;
    let mut v = (1, Mono::one(n));
    let mut cur = y.to_vec();
    for &s in word.iter().rev() {
        v = times(n, v, d_simple(cov, s, &cur));
        cur = cov.datum.twisted_reflect(s, &cur);
    }
    v
}

/// `d(w, y)` along the standard reduced word of `w`, in display form.
pub fn d_function(setting: &Setting, w: usize, y: &[i64]) -> GaussMonomial {
    let (s, m) = d_word(&setting.cov, setting.weyl.word(w), y);
    GaussMonomial::from_mono(setting.cov.n, s, &m)
}

/// Outcome of the cocycle checks for the d-function on one orbit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CocycleReport {
    /// `d(w_a, w_a[y]) d(w_a, y) = 1` for all simple `a` and orbit members `y`.
    pub involution: bool,
    /// All reduced words of every `w` give the same value.
    pub braid: bool,
    /// When `w_a` fixes the class of `y`, the value `d(w_a, y)` agrees with
    /// moving `s_y` along `z = y - w_a[y]` in `Y_{Q,n}` under `^{w_G} chi`.
    pub stabilizer: bool,
    /// `d(w1 w2, y) = d(w1, w2[y]) d(w2, y)` for all `w1, w2`.
    pub cocycle: bool,
}

impl CocycleReport {
    pub fn all(&self) -> bool {
        self.involution && self.stabilizer && self.braid && self.cocycle
    }
}

pub fn d_cocycle_report(
    setting: &Setting,
    tr: &Transversal,
    orbit: &Orbit,
    chi: &GenuineCharacter,
) -> Result<CocycleReport> {
    let cov = &setting.cov;
    let weyl = &setting.weyl;
    let n = cov.n;
    let one = (1, Mono::one(n));
    let ys: Vec<&IVec> = tr.block(orbit).into_iter().map(|p| &tr.reps[p]).collect();
    let flat = chi.act(weyl, weyl.longest);
    let mut rep = CocycleReport {
        involution: true,
        stabilizer: true,
        braid: true,
        cocycle: true,
    };
    for y in &ys {
        for j in 0..weyl.rank {
            let y1 = cov.datum.twisted_reflect(j, y);
            if times(n, d_simple(cov, j, &y1), d_simple(cov, j, y)) != one {
                rep.involution = false;
            }
            let z = intmat::sub(y, &y1);
            if cov.in_y_qn(&z) {
                let mut v = d_simple(cov, j, y);
                v = times(n, v, (1, Mono::xi_power(n, cov.d_form(&y1, &z))));
                v = times(n, v, Mono::from_char_value(n, &flat.eval(&z)?));
                if v != one {
                    rep.stabilizer = false;
                }
            }
        }
        for w in 0..weyl.len() {
            let words = weyl.reduced_words(w);
            let v0 = d_word(cov, &words[0], y);
            if words.iter().any(|word| d_word(cov, word, y) != v0) {
                rep.braid = false;
            }
        }
        for w1 in 0..weyl.len() {
            for w2 in 0..weyl.len() {
                let lhs = d_word(cov, weyl.word(weyl.mul(w1, w2)), y);
                let y2 = weyl.twisted_act(w2, y);
                let rhs = times(n, d_word(cov, weyl.word(w1), &y2), d_word(cov, weyl.word(w2), y));
                if lhs != rhs {
                    rep.cocycle = false;
                }
            }
        }
    }
    Ok(rep)
}

/// The vector `c` on an orbit with `c(s_y) = 1` at the first member and
/// `c(s_{w[y]}) = d(w, y)`, moved to the transversal with `chi_flat =
/// ^{w_G} chi`. Fails when the values disagree on some class.
pub fn steinberg_basis(
    setting: &Setting,
    tr: &Transversal,
    orbit: &Orbit,
    chi: &GenuineCharacter,
) -> Result<Vec<GaussMonomial>> {
    let cov = &setting.cov;
    let weyl = &setting.weyl;
    let n = cov.n;
    let flat = chi.act(weyl, weyl.longest);
    let block = tr.block(orbit);
    let y = tr.reps[tr.slot_of(&setting.moduli, &setting.moduli.reps[orbit.rep()])].clone();
    let mut vals: Vec<Option<(i64, Mono)>> = vec![None; block.len()];
    for w in 0..weyl.len() {
        let yw = weyl.twisted_act(w, &y);
        let slot = tr.slot_of(&setting.moduli, &yw);
        let i = block.binary_search(&slot).expect("orbit is W-stable");
        let z = intmat::sub(&tr.reps[slot], &yw);
        let mut v = d_word(cov, weyl.word(w), &y);
        v = times(n, v, (1, Mono::xi_power(n, cov.d_form(&yw, &z))));
        v = times(n, v, Mono::from_char_value(n, &flat.eval(&z)?));
        match &vals[i] {
            Some(old) if *old != v => {
                return Err(Error::NotPersistent(format!(
                    "d-function is not well defined on the orbit of class {}",
                    orbit.rep()
                )))
            }
            Some(_) => {}
            None => vals[i] = Some(v),
        }
    }
    Ok(vals
        .into_iter()
        .map(|v| {
            let (s, m) = v.expect("every class is reached");
            GaussMonomial::from_mono(n, s, &m)
        })
        .collect())
}

/// Whether `c` is killed by every `M(w_alpha, ^{w_alpha} chi_flat)` on the
/// orbit, acting on row vectors.
pub fn verify_steinberg(
    setting: &Setting,
    tr: &Transversal,
    orbit: &Orbit,
    chi: &GenuineCharacter,
    c: &[GaussMonomial],
) -> Result<bool> {
    let weyl = &setting.weyl;
    let n = setting.cov.n;
    let flat = chi.act(weyl, weyl.longest);
    let block = tr.block(orbit);
    let cv: Vec<RatExpr> = c
        .iter()
        .map(|g| {
            let (s, m) = g.to_mono();
            RatExpr::from_poly(Poly::mono(n, s as i128, m))
        })
        .collect();
    for j in 0..weyl.rank {
        let psi = flat.act(weyl, simple_element(setting, j));
        let m = tau_matrix(setting, tr, j, &psi, Some(&block))?;
        for col in 0..block.len() {
            let s = (0..block.len()).fold(RatExpr::zero(n), |acc, r| acc.add(&cv[r].mul(&m.rows[r][col])));
            if !s.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `mu` factor of `M(w_a, ^{w_a} chi) M(w_a, chi)` on the diagonal.
pub fn rank_one_mu(x: &crate::whittaker::CharValue, q: f64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    let xv = x.eval(q);
    (one - xv / q) / (one - xv) * (one - one / (xv * q)) / (one - one / xv)
}

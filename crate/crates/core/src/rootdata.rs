//! Finite root data, Weyl groups, Bruhat order and parabolic subgroups.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intmat::{self, IMat, IVec};

/// Default bound on the order of an enumerated Weyl group.
pub const DEFAULT_WEYL_CAP: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LatticeKind {
    #[serde(alias = "sc", alias = "simply-connected")]
    SimplyConnected,
    #[serde(alias = "ad", alias = "adjoint")]
    Adjoint,
    #[serde(alias = "GL", alias = "gl")]
    Gl,
    /// Neither simply connected nor adjoint; only produced for dual data.
    Intermediate,
}

impl std::str::FromStr for LatticeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sc" | "simply-connected" | "simplyconnected" => Ok(Self::SimplyConnected),
            "ad" | "adjoint" => Ok(Self::Adjoint),
            "gl" => Ok(Self::Gl),
            _ => Err(Error::InvalidLattice(s.to_string())),
        }
    }
}

/// Cartan matrix `A[i][j] = <alpha_i^vee, alpha_j>` of a finite type.
///
/// Labelling is Bourbaki except for `G2`, where `alpha_1^vee` is the short
/// coroot.
pub fn cartan_matrix(ty: char, rank: usize) -> Result<IMat> {
    let ty = ty.to_ascii_uppercase();
    let bad = || Error::RankMismatch {
        ty: ty.to_string(),
        rank,
    };
    let ok = match ty {
        'A' => rank >= 1,
        'B' | 'C' => rank >= 2,
        'D' => rank >= 4,
        'E' => (6..=8).contains(&rank),
        'F' => rank == 4,
        'G' => rank == 2,
        _ => return Err(Error::UnknownType(ty.to_string())),
    };
    if !ok {
        return Err(bad());
    }
    let mut a = vec![vec![0i64; rank]; rank];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match ty {
        'A' | 'B' | 'C' | 'F' | 'G' => (0..rank - 1).for_each(|i| link(i, i + 1)),
        'D' => {
            (0..rank - 2).for_each(|i| link(i, i + 1));
            link(rank - 3, rank - 1);
        }
        'E' => {
            link(0, 2);
            link(1, 3);
            (2..rank - 1).for_each(|i| link(i, i + 1));
        }
        _ => unreachable!(),
    }
    match ty {
        'B' => a[rank - 1][rank - 2] = -2,
        'C' => a[rank - 2][rank - 1] = -2,
        'F' => a[2][1] = -2,
        'G' => a[1][0] = -3,
        _ => {}
    }
    Ok(a)
}

/// Type label of a Cartan matrix, e.g. `A2` or `A1xA1`.
pub fn classify_cartan(a: &IMat) -> String {
    let r = a.len();
    let mut seen = vec![false; r];
    let mut parts = vec![];
    for s in 0..r {
        if seen[s] {
            continue;
        }
        let mut comp = vec![];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(i) = stack.pop() {
            comp.push(i);
            for j in 0..r {
                if !seen[j] && a[i][j] != 0 {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        parts.push(classify_irreducible(a, &comp));
    }
    if parts.is_empty() {
        return "T".into();
    }
    parts.join("x")
}

fn classify_irreducible(a: &IMat, comp: &[usize]) -> String {
    let k = comp.len();
    let mut multi = None;
    let mut branch = false;
    for &i in comp {
        let deg = comp.iter().filter(|&&j| j != i && a[i][j] != 0).count();
        branch |= deg >= 3;
        for &j in comp {
            if j != i && a[i][j] * a[j][i] > 1 && multi.is_none() {
                multi = Some((i, j, a[i][j] * a[j][i]));
            }
        }
    }
    match multi {
        None if !branch => format!("A{k}"),
        None if k <= 5 => format!("D{k}"),
        None => {
            // D_k has a branch node with two leaf neighbours, E_k does not.
            let b = *comp
                .iter()
                .find(|&&i| comp.iter().filter(|&&j| j != i && a[i][j] != 0).count() == 3)
                .unwrap();
            let leaves = comp
                .iter()
                .filter(|&&j| j != b && a[b][j] != 0)
                .filter(|&&j| comp.iter().filter(|&&l| l != j && a[j][l] != 0).count() == 1)
                .count();
            if leaves >= 2 {
                format!("D{k}")
            } else {
                format!("E{k}")
            }
        }
        Some((_, _, 3)) => "G2".into(),
        Some((i, j, _)) => {
            if k == 2 {
                return "C2".into();
            }
            let deg = |x: usize| comp.iter().filter(|&&l| l != x && a[x][l] != 0).count();
            if deg(i) == 2 && deg(j) == 2 {
                return "F4".into();
            }
            // The leaf of the double bond is short in B and long in C.
            let (leaf, other) = if deg(i) == 1 { (i, j) } else { (j, i) };
            if a[other][leaf] == -1 {
                format!("B{k}")
            } else {
                format!("C{k}")
            }
        }
    }
}

/// A root together with its coroot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    /// Coroot as a vector in `Y`.
    pub coroot: IVec,
    /// Root as a functional on `Y`.
    pub root: IVec,
    /// Coroot in the basis of simple coroots.
    pub coroot_coeffs: IVec,
    /// Root in the basis of simple roots.
    pub root_coeffs: IVec,
    pub positive: bool,
}

/// A based root datum of finite type with its root system enumerated.
#[derive(Clone, Debug)]
pub struct RootDatum {
    pub label: String,
    pub lattice: LatticeKind,
    pub rank: usize,
    /// Rank of `Y`.
    pub dim: usize,
    pub basis_labels: Vec<String>,
    pub cartan: IMat,
    pub simple_coroots: IMat,
    pub simple_roots: IMat,
    /// Positive roots first (by height), then their negatives in the same order.
    pub roots: Vec<Root>,
    /// `2 rho` in `Y`.
    pub rho2: IVec,
    /// Simple reflections on `Y` acting on column vectors.
    pub reflections: Vec<IMat>,
    coroot_index: HashMap<IVec, usize>,
}

impl RootDatum {
    /// Build the root datum of a finite Cartan type on the chosen lattice.
    pub fn new(ty: char, rank: usize, lattice: LatticeKind) -> Result<Self> {
        let cartan = cartan_matrix(ty, rank)?;
        let label = format!("{}{}", ty.to_ascii_uppercase(), rank);
        match lattice {
            LatticeKind::SimplyConnected => {
                let coroots = intmat::identity(rank);
                let roots = intmat::transpose(&cartan);
                let labels = (1..=rank).map(|i| format!("a{i}v")).collect();
                Self::assemble(label, lattice, cartan, coroots, roots, labels)
            }
            LatticeKind::Adjoint => {
                let coroots = cartan.clone();
                let roots = intmat::identity(rank);
                let labels = (1..=rank).map(|i| format!("w{i}v")).collect();
                Self::assemble(label, lattice, cartan, coroots, roots, labels)
            }
            LatticeKind::Intermediate => Err(Error::InvalidLattice(
                "intermediate lattices are not built from a type label".into(),
            )),
            LatticeKind::Gl => {
                if ty.to_ascii_uppercase() != 'A' {
                    return Err(Error::InvalidLattice(format!(
                        "GL lattice needs type A, got {label}"
                    )));
                }
                let d = rank + 1;
                let e = |i: usize, j: usize| -> IVec {
                    (0..d).map(|k| i64::from(k == i) - i64::from(k == j)).collect()
                };
                let coroots = (0..rank).map(|i| e(i, i + 1)).collect();
                let roots = (0..rank).map(|i| e(i, i + 1)).collect();
                let labels = (1..=d).map(|i| format!("e{i}")).collect();
                Self::assemble(format!("GL{d}"), lattice, cartan, coroots, roots, labels)
            }
        }
    }

    /// Build a root datum from explicit simple coroots and roots.
    pub fn from_parts(
        label: String,
        lattice: LatticeKind,
        coroots: IMat,
        roots: IMat,
        basis_labels: Vec<String>,
    ) -> Result<Self> {
        let cartan: IMat = coroots
            .iter()
            .map(|c| roots.iter().map(|a| intmat::dot(c, a)).collect())
            .collect();
        Self::assemble(label, lattice, cartan, coroots, roots, basis_labels)
    }

    fn assemble(
        label: String,
        lattice: LatticeKind,
        cartan: IMat,
        coroots: IMat,
        roots: IMat,
        basis_labels: Vec<String>,
    ) -> Result<Self> {
        let rank = cartan.len();
        let dim = basis_labels.len();
        for i in 0..rank {
            for j in 0..rank {
                if intmat::dot(&coroots[i], &roots[j]) != cartan[i][j] {
                    return Err(Error::InvalidLattice(format!(
                        "pairing of coroot {i} with root {j} disagrees with the Cartan matrix"
                    )));
                }
            }
        }
        let reflections: Vec<IMat> = (0..rank)
            .map(|j| {
                (0..dim)
                    .map(|i| {
                        (0..dim)
                            .map(|k| i64::from(i == k) - coroots[j][i] * roots[j][k])
                            .collect()
                    })
                    .collect()
            })
            .collect();

        // Close the simple roots under simple reflections.
        let unit = |i: usize| -> IVec { (0..rank).map(|k| i64::from(k == i)).collect() };
        let mut found: HashMap<IVec, Root> = HashMap::new();
        let mut queue: VecDeque<Root> = (0..rank)
            .map(|j| Root {
                coroot: coroots[j].clone(),
                root: roots[j].clone(),
                coroot_coeffs: unit(j),
                root_coeffs: unit(j),
                positive: true,
            })
            .collect();
        let limit = 4 * rank * rank * rank + 16;
        while let Some(r) = queue.pop_front() {
            if found.contains_key(&r.coroot_coeffs) {
                continue;
            }
            if found.len() > limit {
                return Err(Error::InvalidLattice(format!(
                    "Cartan matrix of {label} is not of finite type"
                )));
            }
            for j in 0..rank {
                let p = intmat::dot(&r.coroot, &roots[j]);
                let pv = intmat::dot(&coroots[j], &r.root);
                let mut cc = r.coroot_coeffs.clone();
                cc[j] -= p;
                let mut rc = r.root_coeffs.clone();
                rc[j] -= pv;
                let next = Root {
                    coroot: intmat::sub(&r.coroot, &intmat::scale(p, &coroots[j])),
                    root: intmat::sub(&r.root, &intmat::scale(pv, &roots[j])),
                    positive: cc.iter().all(|&x| x >= 0),
                    coroot_coeffs: cc,
                    root_coeffs: rc,
                };
                if next.coroot_coeffs.iter().any(|&x| x > 0)
                    && next.coroot_coeffs.iter().any(|&x| x < 0)
                {
                    return Err(Error::InvalidLattice(format!(
                        "Cartan matrix of {label} is not of finite type"
                    )));
                }
                queue.push_back(next);
            }
            found.insert(r.coroot_coeffs.clone(), r);
        }
        let mut pos: Vec<Root> = found.values().filter(|r| r.positive).cloned().collect();
        pos.sort_by(|a, b| {
            let ha: i64 = a.coroot_coeffs.iter().sum();
            let hb: i64 = b.coroot_coeffs.iter().sum();
            ha.cmp(&hb).then_with(|| b.coroot_coeffs.cmp(&a.coroot_coeffs))
        });
        if pos.len() * 2 != found.len() {
            return Err(Error::InvalidLattice("roots are not symmetric".into()));
        }
        let neg: Vec<Root> = pos
            .iter()
            .map(|r| Root {
                coroot: intmat::scale(-1, &r.coroot),
                root: intmat::scale(-1, &r.root),
                coroot_coeffs: intmat::scale(-1, &r.coroot_coeffs),
                root_coeffs: intmat::scale(-1, &r.root_coeffs),
                positive: false,
            })
            .collect();
        let mut all = pos;
        all.extend(neg);
        let mut rho2 = vec![0; dim];
        for r in all.iter().filter(|r| r.positive) {
            rho2 = intmat::add(&rho2, &r.coroot);
        }
        let coroot_index = all
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coroot.clone(), i))
            .collect();
        let rd = RootDatum {
            label,
            lattice,
            rank,
            dim,
            basis_labels,
            cartan,
            simple_coroots: coroots,
            simple_roots: roots,
            roots: all,
            rho2,
            reflections,
            coroot_index,
        };
        for j in 0..rank {
            debug_assert_eq!(intmat::dot(&rd.rho2, &rd.simple_roots[j]), 2);
        }
        Ok(rd)
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.num_positive()]
    }

    /// Index of the root whose coroot is `c`.
    pub fn coroot_index(&self, c: &[i64]) -> Option<usize> {
        self.coroot_index.get(c).copied()
    }

    /// Whether `c` is a positive coroot. `None` when `c` is not a coroot.
    pub fn is_positive_coroot(&self, c: &[i64]) -> Option<bool> {
        self.coroot_index(c).map(|i| self.roots[i].positive)
    }

    /// Pairing of `y` in `Y` with the simple root `j`.
    pub fn pair_simple(&self, y: &[i64], j: usize) -> i64 {
        intmat::dot(y, &self.simple_roots[j])
    }

    pub fn reflect(&self, j: usize, y: &[i64]) -> IVec {
        let p = self.pair_simple(y, j);
        intmat::sub(y, &intmat::scale(p, &self.simple_coroots[j]))
    }

    /// Twisted simple reflection `w_j[y] = y - (<y, alpha_j> - 1) alpha_j^vee`.
    pub fn twisted_reflect(&self, j: usize, y: &[i64]) -> IVec {
        let p = self.pair_simple(y, j) - 1;
        intmat::sub(y, &intmat::scale(p, &self.simple_coroots[j]))
    }

    /// Whether the Cartan matrix is symmetrizable and positive definite.
    pub fn is_finite_type(&self) -> bool {
        let r = self.rank;
        // Symmetrize with d_i A_ij = d_j A_ji along a spanning forest.
        let mut d: Vec<Option<num_rational::Rational64>> = vec![None; r];
        for s in 0..r {
            if d[s].is_some() {
                continue;
            }
            d[s] = Some(1.into());
            let mut stack = vec![s];
            while let Some(i) = stack.pop() {
                for j in 0..r {
                    if i != j && self.cartan[i][j] != 0 && d[j].is_none() {
                        let v = d[i].unwrap() * self.cartan[i][j] / self.cartan[j][i];
                        d[j] = Some(v);
                        stack.push(j);
                    }
                }
            }
        }
        let sym: Vec<Vec<num_rational::Rational64>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| d[i].unwrap() * self.cartan[i][j])
                    .collect()
            })
            .collect();
        for i in 0..r {
            for j in 0..r {
                if sym[i][j] != sym[j][i] {
                    return false;
                }
            }
        }
        crate::linalg::is_positive_definite(&sym)
    }
}

impl fmt::Display for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({:?})", self.label, self.lattice)
    }
}

/// An element of the Weyl group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    /// Reduced word, left to right: `w = s_{word[0]} ... s_{word[k-1]}`.
    pub word: Vec<usize>,
    pub matrix: IMat,
    pub length: usize,
}

/// The Weyl group of a root datum, enumerated breadth first.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    pub rank: usize,
    pub elements: Vec<WeylElement>,
    /// `rmul[w][s]` is the index of `w s`.
    pub rmul: Vec<Vec<usize>>,
    /// `lmul[s][w]` is the index of `s w`.
    pub lmul: Vec<Vec<usize>>,
    pub inverse: Vec<usize>,
    pub longest: usize,
    /// Conjugacy classes ordered by their first element.
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    /// `rho - w(rho)` for each element.
    shifts: Vec<IVec>,
    index: HashMap<IMat, usize>,
}

impl WeylGroup {
    pub fn new(rd: &RootDatum) -> Result<Self> {
        Self::with_cap(rd, DEFAULT_WEYL_CAP)
    }

    pub fn with_cap(rd: &RootDatum, cap: usize) -> Result<Self> {
        let r = rd.rank;
        let id = intmat::identity(rd.dim);
        let mut elements = vec![WeylElement {
            word: vec![],
            matrix: id.clone(),
            length: 0,
        }];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut rmul: Vec<Vec<usize>> = vec![vec![usize::MAX; r]];
        let mut head = 0;
        while head < elements.len() {
            for s in 0..r {
                let m = intmat::mat_mul(&elements[head].matrix, &rd.reflections[s]);
                let k = match index.get(&m) {
                    Some(&k) => k,
                    None => {
                        if elements.len() >= cap {
                            return Err(Error::GroupTooLarge(cap));
                        }
                        let mut word = elements[head].word.clone();
                        word.push(s);
                        let k = elements.len();
                        index.insert(m.clone(), k);
                        elements.push(WeylElement {
                            length: word.len(),
                            word,
                            matrix: m,
                        });
                        rmul.push(vec![usize::MAX; r]);
                        k
                    }
                };
                rmul[head][s] = k;
            }
            head += 1;
        }
        let n = elements.len();
        let lmul: Vec<Vec<usize>> = (0..r)
            .map(|s| {
                (0..n)
                    .map(|w| index[&intmat::mat_mul(&rd.reflections[s], &elements[w].matrix)])
                    .collect()
            })
            .collect();
        let inverse = (0..n)
            .map(|w| {
                elements[w]
                    .word
                    .iter()
                    .rev()
                    .fold(0, |acc, &s| rmul[acc][s])
            })
            .collect();
        let longest = (0..n).max_by_key(|&w| elements[w].length).unwrap_or(0);
        let shifts = elements
            .iter()
            .map(|e| {
                let wr = intmat::mat_vec(&e.matrix, &rd.rho2);
                intmat::sub(&rd.rho2, &wr).iter().map(|x| x / 2).collect()
            })
            .collect();
        let mut g = WeylGroup {
            rank: r,
            elements,
            rmul,
            lmul,
            inverse,
            longest,
            classes: vec![],
            class_of: vec![],
            shifts,
            index,
        };
        g.compute_classes();
        Ok(g)
    }

    fn compute_classes(&mut self) {
        let n = self.len();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = vec![];
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let mut members = vec![start];
            class_of[start] = c;
            let mut i = 0;
            while i < members.len() {
                let w = members[i];
                for s in 0..self.rank {
                    let v = self.rmul[self.lmul[s][w]][s];
                    if class_of[v] == usize::MAX {
                        class_of[v] = c;
                        members.push(v);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            classes.push(members);
        }
        self.classes = classes;
        self.class_of = class_of;
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn length(&self, w: usize) -> usize {
        self.elements[w].length
    }

    pub fn word(&self, w: usize) -> &[usize] {
        &self.elements[w].word
    }

    pub fn matrix(&self, w: usize) -> &IMat {
        &self.elements[w].matrix
    }

    pub fn index_of_matrix(&self, m: &IMat) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Element given by an arbitrary (not necessarily reduced) word.
    pub fn from_word(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |acc, &s| self.rmul[acc][s])
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.elements[b]
            .word
            .iter()
            .fold(a, |acc, &s| self.rmul[acc][s])
    }

    /// `{s : l(s w) < l(w)}` as a bit mask.
    pub fn left_descents(&self, w: usize) -> u64 {
        (0..self.rank)
            .filter(|&s| self.length(self.lmul[s][w]) < self.length(w))
            .fold(0, |m, s| m | 1 << s)
    }

    /// `{s : l(w s) < l(w)}` as a bit mask.
    pub fn right_descents(&self, w: usize) -> u64 {
        (0..self.rank)
            .filter(|&s| self.length(self.rmul[w][s]) < self.length(w))
            .fold(0, |m, s| m | 1 << s)
    }

    /// All reduced words of `w`, sorted.
    pub fn reduced_words(&self, w: usize) -> Vec<Vec<usize>> {
        if self.length(w) == 0 {
            return vec![vec![]];
        }
        let mut out = vec![];
        for s in mask_members(self.right_descents(w)) {
            for mut word in self.reduced_words(self.rmul[w][s]) {
                word.push(s);
                out.push(word);
            }
        }
        out.sort();
        out
    }

    /// Letters occurring in a reduced word of `w`.
    pub fn support(&self, w: usize) -> u64 {
        self.word(w).iter().fold(0, |m, &s| m | 1 << s)
    }

    pub fn sign(&self, w: usize) -> i64 {
        if self.length(w) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn act(&self, w: usize, y: &[i64]) -> IVec {
        intmat::mat_vec(self.matrix(w), y)
    }

    /// Twisted action `w[y] = w(y - rho) + rho`.
    pub fn twisted_act(&self, w: usize, y: &[i64]) -> IVec {
        intmat::add(&self.act(w, y), &self.shifts[w])
    }

    /// Bruhat order by the lifting property.
    pub fn bruhat_leq(&self, x: usize, w: usize) -> bool {
        let (mut x, mut w) = (x, w);
        loop {
            if self.length(x) > self.length(w) {
                return false;
            }
            if self.length(w) == 0 {
                return x == 0;
            }
            let s = *self.word(w).last().unwrap();
            let xs = self.rmul[x][s];
            if self.length(xs) < self.length(x) {
                x = xs;
            }
            w = self.rmul[w][s];
        }
    }

    /// Elements of the parabolic subgroup `W(S)`.
    pub fn parabolic(&self, mask: u64) -> Vec<usize> {
        (0..self.len())
            .filter(|&w| self.support(w) & !mask == 0)
            .collect()
    }

    /// Longest element of `W(S)`.
    pub fn parabolic_longest(&self, mask: u64) -> usize {
        self.parabolic(mask)
            .into_iter()
            .max_by_key(|&w| self.length(w))
            .unwrap_or(0)
    }

    /// Minimal length representatives of `W(S) \ W`.
    pub fn min_coset_reps(&self, mask: u64) -> Vec<usize> {
        (0..self.len())
            .filter(|&w| self.left_descents(w) & mask == 0)
            .collect()
    }

    /// Display name: `id`, `w_G`, or `w` followed by the letters.
    pub fn name(&self, w: usize) -> String {
        if w == 0 {
            return "id".into();
        }
        if w == self.longest && self.len() > 2 {
            return "w_G".into();
        }
        let sep = if self.rank >= 10 { "." } else { "" };
        let letters: Vec<String> = self.word(w).iter().map(|s| (s + 1).to_string()).collect();
        format!("w{}", letters.join(sep))
    }
}

/// Indices of the set bits of a mask.
pub fn mask_members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

pub fn mask_of(members: &[usize]) -> u64 {
    members.iter().fold(0, |m, &i| m | 1 << i)
}

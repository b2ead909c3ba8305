//! Kazhdan-Lusztig polynomials, right cells and cell representations.

use std::collections::HashMap;

use crate::characters::ClassFunction;
use crate::rootdata::WeylGroup;

/// A finite Coxeter group given by multiplication tables, either a full Weyl
/// group or a standard parabolic subgroup of one.
#[derive(Clone, Debug)]
pub struct Coxeter {
    /// Ambient labels of the generators.
    pub gens: Vec<usize>,
    /// Ambient index of each element.
    pub ambient: Vec<usize>,
    pub length: Vec<usize>,
    /// `rmul[w][s]` is `w s`.
    pub rmul: Vec<Vec<usize>>,
    /// `lmul[s][w]` is `s w`.
    pub lmul: Vec<Vec<usize>>,
    /// Reduced words in local generator indices.
    pub words: Vec<Vec<usize>>,
    pub inverse: Vec<usize>,
    pub longest: usize,
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    from_ambient: HashMap<usize, usize>,
}

impl Coxeter {
    pub fn from_weyl(w: &WeylGroup) -> Self {
        Self::parabolic(w, (1u64 << w.rank) - 1)
    }

    /// The standard parabolic subgroup `W(S)` for the generator mask `S`.
    pub fn parabolic(w: &WeylGroup, mask: u64) -> Self {
        let gens: Vec<usize> = (0..w.rank).filter(|&s| mask >> s & 1 == 1).collect();
        let ambient = w.parabolic(mask);
        let from_ambient: HashMap<usize, usize> =
            ambient.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let local_gen: HashMap<usize, usize> =
            gens.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let rmul = ambient
            .iter()
            .map(|&g| gens.iter().map(|&s| from_ambient[&w.rmul[g][s]]).collect())
            .collect();
        let lmul = gens
            .iter()
            .map(|&s| ambient.iter().map(|&g| from_ambient[&w.lmul[s][g]]).collect())
            .collect();
        let words = ambient
            .iter()
            .map(|&g| w.word(g).iter().map(|s| local_gen[s]).collect())
            .collect();
        let length: Vec<usize> = ambient.iter().map(|&g| w.length(g)).collect();
        let inverse = ambient.iter().map(|&g| from_ambient[&w.inverse[g]]).collect();
        let longest = (0..ambient.len()).max_by_key(|&i| length[i]).unwrap_or(0);
        let mut c = Coxeter {
            gens,
            ambient,
            length,
            rmul,
            lmul,
            words,
            inverse,
            longest,
            classes: vec![],
            class_of: vec![],
            from_ambient,
        };
        c.compute_classes();
        c
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
                for s in 0..self.rank() {
                    let v = self.rmul[self.lmul[s][members[i]]][s];
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
        self.ambient.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ambient.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn local(&self, ambient: usize) -> Option<usize> {
        self.from_ambient.get(&ambient).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.words[b].iter().fold(a, |acc, &s| self.rmul[acc][s])
    }

    pub fn sign(&self, w: usize) -> i64 {
        if self.length[w] % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Left descents as a mask over local generators.
    pub fn left_descents(&self, w: usize) -> u64 {
        (0..self.rank())
            .filter(|&s| self.length[self.lmul[s][w]] < self.length[w])
            .fold(0, |m, s| m | 1 << s)
    }

    pub fn right_descents(&self, w: usize) -> u64 {
        (0..self.rank())
            .filter(|&s| self.length[self.rmul[w][s]] < self.length[w])
            .fold(0, |m, s| m | 1 << s)
    }

    pub fn bruhat_leq(&self, x: usize, w: usize) -> bool {
        let (mut x, mut w) = (x, w);
        loop {
            if self.length[x] > self.length[w] {
                return false;
            }
            if self.length[w] == 0 {
                return x == 0;
            }
            let s = *self.words[w].last().unwrap();
            let xs = self.rmul[x][s];
            if self.length[xs] < self.length[x] {
                x = xs;
            }
            w = self.rmul[w][s];
        }
    }

    /// Full Bruhat order table.
    pub fn bruhat_table(&self) -> Vec<Vec<bool>> {
        (0..self.len())
            .map(|x| (0..self.len()).map(|w| self.bruhat_leq(x, w)).collect())
            .collect()
    }
}

/// Integer polynomial in `q`, lowest degree first, no trailing zeros.
pub type Poly = Vec<i64>;

fn poly_add_shifted(acc: &mut Poly, p: &[i64], shift: usize, c: i64) {
    if p.is_empty() || c == 0 {
        return;
    }
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (i, &x) in p.iter().enumerate() {
        acc[i + shift] += c * x;
    }
}

fn trim(p: &mut Poly) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

/// Kazhdan-Lusztig polynomials and the `mu` function of a Coxeter group.
#[derive(Clone, Debug)]
pub struct KLData {
    pub bruhat: Vec<Vec<bool>>,
    /// `p[x][w]`, zero unless `x <= w`.
    pub p: Vec<Vec<Poly>>,
    /// `mu[x][w]`, the top coefficient when `x < w` reaches the degree bound.
    pub mu: Vec<Vec<i64>>,
}

impl KLData {
    pub fn new(g: &Coxeter) -> Self {
        let n = g.len();
        let bruhat = g.bruhat_table();
        let mut p: Vec<Vec<Poly>> = vec![vec![vec![]; n]; n];
        let mut mu = vec![vec![0i64; n]; n];
        // Elements are stored by nondecreasing length, so every v = s w
        // with s a left descent is finished before w.
        for w in 0..n {
            if w == 0 {
                p[0][0] = vec![1];
                continue;
            }
            let s = g.words[w][0];
            let v = g.lmul[s][w];
            let lw = g.length[w];
            let corrections: Vec<usize> = (0..n)
                .filter(|&z| mu[z][v] != 0 && g.length[g.lmul[s][z]] < g.length[z])
                .collect();
            for x in 0..n {
                if !bruhat[x][w] {
                    continue;
                }
                let sx = g.lmul[s][x];
                let c = usize::from(g.length[sx] < g.length[x]);
                let mut acc: Poly = vec![];
                poly_add_shifted(&mut acc, &p[sx][v], 1 - c, 1);
                poly_add_shifted(&mut acc, &p[x][v], c, 1);
                for &z in &corrections {
                    let shift = (lw - g.length[z]) / 2;
                    poly_add_shifted(&mut acc, &p[x][z].clone(), shift, -mu[z][v]);
                }
                trim(&mut acc);
                p[x][w] = acc;
            }
            for x in 0..n {
                if x != w && bruhat[x][w] {
                    let d = lw - g.length[x];
                    if d % 2 == 1 {
                        mu[x][w] = p[x][w].get((d - 1) / 2).copied().unwrap_or(0);
                    }
                }
            }
        }
        KLData { bruhat, p, mu }
    }

    /// `x < w` with `mu(x, w) != 0`.
    pub fn precedes(&self, x: usize, w: usize) -> bool {
        x != w && self.mu[x][w] != 0
    }
}

/// Right cells with the data needed for their representations.
#[derive(Clone, Debug)]
pub struct CellDecomposition {
    /// Cells ordered by their first element; elements increasing.
    pub cells: Vec<Vec<usize>>,
    pub cell_of: Vec<usize>,
    pub left_descents: Vec<u64>,
    pub right_descents: Vec<u64>,
    /// Reachability of the preorder: `leq[x][w]` means `x <=_R w`.
    pub leq: Vec<Vec<bool>>,
}

pub fn right_cells(g: &Coxeter, kl: &KLData) -> CellDecomposition {
    let n = g.len();
    let ld: Vec<u64> = (0..n).map(|w| g.left_descents(w)).collect();
    let rd: Vec<u64> = (0..n).map(|w| g.right_descents(w)).collect();
    let words = n.div_ceil(64);
    let mut reach = vec![vec![0u64; words]; n];
    for x in 0..n {
        reach[x][x / 64] |= 1 << (x % 64);
        for w in 0..n {
            let linked = kl.precedes(x, w) || kl.precedes(w, x);
            if linked && rd[x] & !rd[w] != 0 {
                reach[x][w / 64] |= 1 << (w % 64);
            }
        }
    }
    // Warshall closure on bit rows.
    for k in 0..n {
        let rk = reach[k].clone();
        for row in reach.iter_mut() {
            if row[k / 64] >> (k % 64) & 1 == 1 {
                for (a, b) in row.iter_mut().zip(&rk) {
                    *a |= b;
                }
            }
        }
    }
    let leq: Vec<Vec<bool>> = reach
        .iter()
        .map(|row| (0..n).map(|w| row[w / 64] >> (w % 64) & 1 == 1).collect())
        .collect();
    let mut cell_of = vec![usize::MAX; n];
    let mut cells = vec![];
    for x in 0..n {
        if cell_of[x] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&w| leq[x][w] && leq[w][x]).collect();
        for &m in &members {
            cell_of[m] = cells.len();
        }
        cells.push(members);
    }
    CellDecomposition {
        cells,
        cell_of,
        left_descents: ld,
        right_descents: rd,
        leq,
    }
}

/// Matrices of the simple reflections on a union of right cells at `q = 1`,
/// acting on row vectors indexed by the union.
pub fn cell_matrices(g: &Coxeter, kl: &KLData, union: &[usize]) -> Vec<Vec<Vec<i64>>> {
    let pos: HashMap<usize, usize> = union.iter().enumerate().map(|(i, &w)| (w, i)).collect();
    let k = union.len();
    (0..g.rank())
        .map(|s| {
            let mut m = vec![vec![0i64; k]; k];
            for (i, &w) in union.iter().enumerate() {
                let ws = g.rmul[w][s];
                if g.length[ws] < g.length[w] {
                    m[i][i] = -1;
                    continue;
                }
                m[i][i] += 1;
                if let Some(&j) = pos.get(&ws) {
                    m[i][j] += 1;
                }
                for (j, &z) in union.iter().enumerate() {
                    if kl.precedes(z, w) && g.length[g.rmul[z][s]] < g.length[z] {
                        m[i][j] += kl.mu[z][w];
                    }
                }
            }
            m
        })
        .collect()
}

/// Character of the representation carried by a union of right cells.
pub fn cell_character(g: &Coxeter, kl: &KLData, union: &[usize], name: &str) -> ClassFunction {
    let mats = cell_matrices(g, kl, union);
    let k = union.len();
    let values = g
        .classes
        .iter()
        .map(|cls| {
            let w = cls[0];
            let mut m: Vec<Vec<i64>> = (0..k)
                .map(|i| (0..k).map(|j| i64::from(i == j)).collect())
                .collect();
            for &s in &g.words[w] {
                m = matmul(&m, &mats[s]);
            }
            (0..k).map(|i| m[i][i]).sum::<i64>().into()
        })
        .collect();
    ClassFunction::new(name, values)
}

fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let k = b.len();
    a.iter()
        .map(|row| {
            (0..b[0].len())
                .map(|j| (0..k).map(|l| row[l] * b[l][j]).sum())
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{LatticeKind, RootDatum};

    fn cox(t: char, r: usize) -> Coxeter {
        let rd = RootDatum::new(t, r, LatticeKind::SimplyConnected).unwrap();
        Coxeter::from_weyl(&WeylGroup::new(&rd).unwrap())
    }

    #[test]
    fn a2_cells() {
        let g = cox('A', 2);
        let kl = KLData::new(&g);
        let cd = right_cells(&g, &kl);
        // id, w1, w2, w12, w21, w_G
        assert_eq!(cd.cells, vec![vec![0], vec![1, 3], vec![2, 4], vec![5]]);
    }

    #[test]
    fn dihedral_polys_are_one() {
        for (t, r) in [('A', 2), ('C', 2), ('G', 2)] {
            let g = cox(t, r);
            let kl = KLData::new(&g);
            for x in 0..g.len() {
                for w in 0..g.len() {
                    let want: Poly = if kl.bruhat[x][w] { vec![1] } else { vec![] };
                    assert_eq!(kl.p[x][w], want);
                }
            }
        }
    }
}

//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Expected values are written out here independently of the library's own
//! reference tables. The asymptotic criterion is reported but does not fail
//! the run; see the README for why it cannot hold at the sampled degrees.

use std::collections::BTreeSet;
use std::time::Instant;

use num_rational::Rational64;
use wkl::commands::{run, Command, Outcome};
use wkl::config::JobConfig;
use wkl_core::covering::{is_persistent, CoveringDatum};
use wkl_core::kl::{cell_character, right_cells, Coxeter, KLData};
use wkl_core::rootdata::{mask_members, mask_of, LatticeKind, RootDatum, WeylGroup};
use wkl_core::scattering::*;
use wkl_core::whittaker::*;
use wkl_core::Error;

type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn setting(t: char, r: usize, q: &[i64], n: i64) -> Setting {
    let rd = RootDatum::new(t, r, LatticeKind::SimplyConnected).unwrap();
    Setting::new(CoveringDatum::new(rd, q, n, 1).unwrap()).unwrap()
}

fn sl3(n: i64) -> Setting {
    setting('A', 2, &[1, 1], n)
}

fn sp4(n: i64) -> Setting {
    setting('C', 2, &[2, 1], n)
}

fn g2(n: i64) -> Setting {
    setting('G', 2, &[1, 3], n)
}

fn full(s: &Setting) -> GenuineCharacter {
    exceptional_character(&s.cov, &s.weyl, &(0..s.weyl.rank).collect::<Vec<_>>()).unwrap()
}

fn f(d: i64) -> i64 {
    if d % 2 == 1 {
        1
    } else {
        4
    }
}

/// `(name, setting builder, n sweep, sigma_X row, dims)`.
type Family = (&'static str, fn(i64) -> Setting, Vec<i64>, fn(i64) -> Vec<i64>, fn(i64) -> Vec<i64>);

fn div(v: Vec<i64>, d: i64) -> Vec<i64> {
    v.into_iter()
        .map(|x| {
            assert_eq!(x % d, 0);
            x / d
        })
        .collect()
}

fn families() -> Vec<Family> {
    vec![
        (
            "SL3",
            sl3,
            vec![2, 4, 5, 7],
            |n| vec![n * n, n, n, 1, 1, n],
            |n| div(vec![n * n + 3 * n + 2, 2 * (n * n - 1), 2 * (n * n - 1), n * n - 3 * n + 2], 6),
        ),
        (
            "Sp4",
            sp4,
            vec![1, 3, 5],
            |n| vec![n * n, n, n, 1, 1, n, n, 1],
            |n| div(vec![n * n + 4 * n + 3, 3 * (n * n - 1), 3 * (n * n - 1), n * n - 4 * n + 3], 8),
        ),
        (
            "G2",
            g2,
            vec![1, 2, 4, 5],
            |n| vec![n * n, n, n, 1, 1, n, n, 1, 1, n, n, f(n)],
            |n| {
                let s = n * n;
                div(vec![s + 6 * n + 4 + f(n), 5 * s - 4 - f(n), 5 * s - 4 - f(n), s - 6 * n + 4 + f(n)], 12)
            },
        ),
        (
            "G2 (n=3m)",
            g2,
            vec![3, 6, 9],
            |n| {
                let m = n / 3;
                vec![3 * m * m, m, 3 * m, 1, 1, 3 * m, m, 3, 3, m, 3 * m, f(m)]
            },
            |n| {
                let m = n / 3;
                let s = m * m;
                div(
                    vec![
                        3 * s + 12 * m + 8 + f(m),
                        15 * s + 6 * m - 8 - f(m),
                        15 * s - 6 * m - 8 - f(m),
                        3 * s - 12 * m + 8 + f(m),
                    ],
                    12,
                )
            },
        ),
    ]
}

fn job(json: &str) -> JobConfig {
    JobConfig::from_json(json).unwrap()
}

fn criterion_1() -> Check {
    let cases: [(&str, Vec<&str>, Vec<(&str, Vec<i64>)>); 2] = [
        (
            r#"{"covering": {"type": "A", "rank": 2, "n": 1}}"#,
            vec!["", "id", "w1", "w2", "w12", "w21", "w_G"],
            vec![
                ("1", vec![1, 1, 1, 1, 1, 1]),
                ("eps", vec![1, -1, -1, 1, 1, -1]),
                ("sigma0", vec![2, 0, 0, -1, -1, 0]),
            ],
        ),
        (
            r#"{"covering": {"type": "C", "rank": 2, "Q": [2, 1], "n": 1}}"#,
            vec!["", "id", "w1", "w2", "w12", "w21", "w121", "w212", "w_G"],
            vec![
                ("1", vec![1, 1, 1, 1, 1, 1, 1, 1]),
                ("eps", vec![1, -1, -1, 1, 1, -1, -1, 1]),
                ("chi'", vec![1, -1, 1, -1, -1, 1, -1, 1]),
                ("chi''", vec![1, 1, -1, -1, -1, -1, 1, 1]),
                ("sigma0", vec![2, 0, 0, 0, 0, 0, 0, -2]),
            ],
        ),
    ];
    for (cfg, headers, rows) in cases {
        let r = run(Command::Chartable, &job(cfg)).map_err(|e| e.to_string())?;
        let t = &r.report.tables[0];
        ensure(t.headers == headers, || format!("headers {:?}", t.headers))?;
        let want: Vec<Vec<String>> = rows
            .iter()
            .map(|(n, v)| std::iter::once(n.to_string()).chain(v.iter().map(i64::to_string)).collect())
            .collect();
        ensure(t.rows == want, || format!("rows {:?}", t.rows))?;
    }
    Ok(())
}

fn criterion_2() -> Check {
    let cases = [
        (
            r#"{"covering": {"type": "A", "rank": 2, "n": 1}}"#,
            vec![
                (vec!["id"], "1"),
                (vec!["w1", "w12"], "sigma0"),
                (vec!["w2", "w21"], "sigma0"),
                (vec!["w_G"], "eps"),
            ],
        ),
        (
            r#"{"covering": {"type": "C", "rank": 2, "Q": [2, 1], "n": 1}}"#,
            vec![
                (vec!["id"], "1"),
                (vec!["w1", "w12", "w121"], "chi' + sigma0"),
                (vec!["w2", "w21", "w212"], "chi'' + sigma0"),
                (vec!["w_G"], "eps"),
            ],
        ),
    ];
    for (cfg, want) in cases {
        let r = run(Command::Cells, &job(cfg)).map_err(|e| e.to_string())?;
        let rows = &r.report.tables[0].rows;
        ensure(rows.len() == want.len(), || format!("{} cells", rows.len()))?;
        for (row, (elems, rep)) in rows.iter().zip(&want) {
            let got: BTreeSet<&str> = row[1].split(' ').collect();
            let exp: BTreeSet<&str> = elems.iter().copied().collect();
            ensure(got == exp && row[2] == *rep, || format!("cell {row:?}"))?;
        }
    }
    Ok(())
}

fn criterion_3() -> Check {
    for (name, build, sweep, row, _) in families() {
        for n in sweep {
            let got = build(n).sigma_x_row();
            ensure(got == row(n), || format!("{name} n={n}: {got:?}"))?;
        }
    }
    Ok(())
}

fn dims_by_both_routes(s: &Setting) -> (Vec<i64>, Vec<i64>) {
    let chi = full(s);
    let gs = constituents(s, &chi).unwrap();
    let full_mask = s.full_mask();
    let pairing = gs.iter().map(|g| whittaker_dim_total(s, g).unwrap()).collect();
    let coarse = gs.iter().map(|g| coarse_dim(s, full_mask, mask_of(&g.s), None)).collect();
    (pairing, coarse)
}

fn criterion_4() -> Check {
    for (name, build, sweep, _, dims) in families() {
        for n in sweep {
            let (p, c) = dims_by_both_routes(&build(n));
            ensure(p == dims(n) && c == dims(n), || format!("{name} n={n}: pairing {p:?}, inclusion-exclusion {c:?}"))?;
        }
    }
    Ok(())
}

fn criterion_5() -> Check {
    for (name, build, sweep, row, _) in families() {
        for n in sweep {
            let s = build(n);
            let (p, c) = dims_by_both_routes(&s);
            let size = s.moduli.len() as i64;
            ensure(
                p.iter().sum::<i64>() == size && c.iter().sum::<i64>() == size && row(n)[0] == size,
                || format!("{name} n={n}"),
            )?;
        }
    }
    Ok(())
}

fn orbit_of<'a>(s: &'a Setting, y: &[i64]) -> &'a wkl_core::covering::Orbit {
    let c = s.moduli.index_of(y);
    s.orbits.iter().find(|o| o.elements.contains(&c)).unwrap()
}

fn criterion_6() -> Check {
    let opts = NumericOptions::default();
    for (name, s, y) in [("Sp4 n=3", sp4(3), vec![0, 2]), ("SL3 n=2", sl3(2), vec![1, 1])] {
        let o = orbit_of(&s, &y);
        ensure(o.singleton && o.persistent, || format!("{name}: orbit of {y:?} is not a persistent singleton"))?;
        let chi = full(&s);
        let tr = Transversal::standard(&s.moduli);
        for g in constituents(&s, &chi).unwrap() {
            let want = i64::from(g.plus);
            let (p, _) = whittaker_dim(&s, &g, o).unwrap();
            let e = constituent_block_rank(&s, &tr, &g, &chi, o, RankMode::Exact, &opts).map_err(|e| e.to_string())?;
            let nm = constituent_block_rank(&s, &tr, &g, &chi, o, RankMode::Numeric, &opts).map_err(|e| e.to_string())?;
            ensure(p == want && e as i64 == want && nm as i64 == want, || {
                format!("{name} {}: pairing {p}, exact {e}, numeric {nm}", g.name)
            })?;
        }
    }
    Ok(())
}

fn block_ranks(s: &Setting, tr: &Transversal, block: &[usize]) -> Result<(usize, NumericRank), String> {
    let psi = full(s).act(&s.weyl, s.weyl.rmul[0][1]);
    let m = scattering_matrix(s, tr, &[0, 1], &psi, Some(block)).map_err(|e| e.to_string())?;
    let exact = exact_rank(&m.rows, s.cov.xi).map_err(|e| e.to_string())?;
    let opts = NumericOptions::default();
    ensure(opts.seeds.len() == 5 && opts.tol == 1e-8, || "numeric defaults changed".into())?;
    let num = numeric_rank(s, tr, &[(vec![0, 1], psi)], Some(block), &opts).map_err(|e| e.to_string())?;
    Ok((exact, num))
}

fn criterion_7() -> Check {
    let s = sl3(2);
    let tr = Transversal::standard(&s.moduli);
    let block = tr.block(orbit_of(&s, &[0, 0]));
    let (e, nm) = block_ranks(&s, &tr, &block)?;
    ensure(e == 1 && nm.stable && nm.rank == 1, || format!("SL3 O_0: exact {e}, numeric {:?}", nm.per_seed))?;
    let s = sp4(3);
    let reps = vec![
        vec![0, 0],
        vec![0, 1],
        vec![1, 0],
        vec![2, 4],
        vec![1, 1],
        vec![1, 2],
        vec![2, 2],
        vec![2, 0],
        vec![0, 2],
    ];
    let tr = Transversal::custom(&s.moduli, reps).map_err(|e| e.to_string())?;
    for (y, want) in [([0, 0], 2), ([1, 1], 1)] {
        let block = tr.block(orbit_of(&s, &y));
        let (e, nm) = block_ranks(&s, &tr, &block)?;
        ensure(e == want && nm.stable && nm.rank == want, || {
            format!("Sp4 orbit of {y:?}: exact {e}, numeric {:?}", nm.per_seed)
        })?;
    }
    Ok(())
}

fn scattering_configs() -> Vec<(String, Setting)> {
    let mut v = vec![];
    for n in [2, 4] {
        v.push((format!("SL3 n={n}"), sl3(n)));
    }
    for n in [1, 3] {
        v.push((format!("Sp4 n={n}"), sp4(n)));
    }
    for n in [1, 2] {
        v.push((format!("G2 n={n}"), g2(n)));
    }
    v
}

fn criterion_8() -> Check {
    let opts = NumericOptions::default();
    let mut cases = 0;
    for (name, s) in scattering_configs() {
        let chi = full(&s);
        let tr = Transversal::standard(&s.moduli);
        for g in constituents(&s, &chi).unwrap() {
            for o in &s.orbits {
                let (p, _) = whittaker_dim(&s, &g, o).unwrap();
                let e = constituent_block_rank(&s, &tr, &g, &chi, o, RankMode::Exact, &opts).map_err(|e| e.to_string())?;
                let nm = constituent_block_rank(&s, &tr, &g, &chi, o, RankMode::Numeric, &opts).map_err(|e| e.to_string())?;
                ensure(e as i64 == p && nm as i64 == p, || {
                    format!("{name} {} at class {}: pairing {p}, exact {e}, numeric {nm}", g.name, o.rep())
                })?;
                cases += 1;
            }
        }
    }
    ensure(cases > 0, || "no cases".into())
}

fn criterion_9() -> Check {
    for (name, s) in scattering_configs() {
        let chi = full(&s);
        let tr = Transversal::standard(&s.moduli);
        for o in s.orbits.iter().filter(|o| o.persistent) {
            let rep = d_cocycle_report(&s, &tr, o, &chi).map_err(|e| e.to_string())?;
            ensure(rep.all(), || format!("{name} class {}: {rep:?}", o.rep()))?;
            let c = steinberg_basis(&s, &tr, o, &chi).map_err(|e| e.to_string())?;
            ensure(verify_steinberg(&s, &tr, o, &chi, &c).map_err(|e| e.to_string())?, || {
                format!("{name} class {}: vector not killed", o.rep())
            })?;
        }
    }
    // SL2 with n = 2 is not persistent; the check must catch it.
    let s = setting('A', 1, &[1], 2);
    let chi = full(&s);
    let tr = Transversal::standard(&s.moduli);
    let bad: Vec<_> = s.orbits.iter().filter(|o| !o.persistent).collect();
    ensure(!bad.is_empty(), || "SL2 n=2 has no non-persistent orbit".into())?;
    for o in bad {
        let rep = d_cocycle_report(&s, &tr, o, &chi).map_err(|e| e.to_string())?;
        ensure(!rep.stabilizer, || "negative control passed the stabilizer check".into())?;
        ensure(
            matches!(steinberg_basis(&s, &tr, o, &chi), Err(Error::NotPersistent(_))),
            || "negative control produced a vector".into(),
        )?;
    }
    Ok(())
}

fn criterion_10() -> Check {
    for (name, s) in scattering_configs() {
        let weyl = &s.weyl;
        let rd = &s.cov.datum;
        for phi in (0..1u64 << weyl.rank).map(mask_members) {
            let chi = exceptional_character(&s.cov, weyl, &phi).map_err(|e| e.to_string())?;
            let gs = constituents(&s, &chi).unwrap();
            let plus = &gs.iter().find(|g| g.plus).unwrap().elements;
            let minus = &gs.iter().find(|g| g.minus).unwrap().elements;
            for w in 0..weyl.len() {
                let src = chi.act(weyl, weyl.mul(weyl.longest, weyl.inverse[w]));
                let c = gk_coefficient(&s.cov, weyl, weyl.longest, &src).map_err(|e| e.to_string())?;
                if minus.contains(&w) {
                    ensure(!c.is_zero(), || format!("{name} phi={phi:?}: c vanishes at {}", weyl.name(w)))?;
                }
                let pos = 0..rd.num_positive();
                let v0 = pos.clone().any(|a| src.on_root(&s.cov, a).is_q_power(-1));
                let winv_chi = chi.act(weyl, weyl.inverse[w]);
                let v1 = pos.clone().any(|a| winv_chi.on_root(&s.cov, a).is_q_power(1));
                let v2 = !s.s_of(&phi, w).is_empty();
                let v3 = !plus.contains(&w);
                ensure(v0 == v1 && v1 == v2 && v2 == v3, || {
                    format!("{name} phi={phi:?} w={}: {v0} {v1} {v2} {v3}", weyl.name(w))
                })?;
            }
        }
    }
    Ok(())
}

type Poly = Vec<i64>;

fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn padd(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    trim(out)
}

fn pmul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// KL polynomials from R-polynomials and the bar involution:
/// `q^{l(w)-l(x)} P_{x,w}(q^{-1}) - P_{x,w}(q) = sum_{x<y<=w} R_{x,y} P_{y,w}`.
fn kl_oracle(g: &Coxeter) -> Vec<Vec<Poly>> {
    let n = g.len();
    let len = &g.length;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&w| len[w]);
    let mut r: Vec<Vec<Poly>> = vec![vec![vec![]; n]; n];
    for &w in &order {
        if len[w] == 0 {
            r[w][w] = vec![1];
            continue;
        }
        let s = (0..g.rank()).find(|&s| len[g.rmul[w][s]] < len[w]).unwrap();
        let ws = g.rmul[w][s];
        for x in 0..n {
            let xs = g.rmul[x][s];
            r[x][w] = if len[xs] < len[x] {
                r[xs][ws].clone()
            } else {
                padd(&pmul(&vec![-1, 1], &r[x][ws]), &pmul(&vec![0, 1], &r[xs][ws]))
            };
        }
    }
    let mut p: Vec<Vec<Poly>> = vec![vec![vec![]; n]; n];
    for w in 0..n {
        p[w][w] = vec![1];
        let mut below: Vec<usize> = (0..n).filter(|&x| x != w && !r[x][w].is_empty()).collect();
        below.sort_by_key(|&x| std::cmp::Reverse(len[x]));
        for x in below {
            let d = len[w] - len[x];
            let rhs = (0..n)
                .filter(|&y| y != x && !r[x][y].is_empty() && !p[y][w].is_empty())
                .fold(vec![], |acc, y| padd(&acc, &pmul(&r[x][y], &p[y][w])));
            let low: Poly = trim((0..d.div_ceil(2)).map(|i| -rhs.get(i).copied().unwrap_or(0)).collect());
            // The high part must be q^d P(q^{-1}).
            let mut high = vec![0; d + 1];
            for (i, &c) in low.iter().enumerate() {
                high[d - i] += c;
            }
            let mut lowneg: Poly = low.iter().map(|c| -c).collect();
            lowneg.resize(d + 1, 0);
            let lhs = padd(&trim(high), &trim(lowneg));
            assert_eq!(lhs, rhs, "bar-involution oracle is inconsistent");
            p[x][w] = low;
        }
    }
    p
}

fn coxeter(t: char, r: usize) -> Coxeter {
    let rd = RootDatum::new(t, r, LatticeKind::SimplyConnected).unwrap();
    Coxeter::from_weyl(&WeylGroup::new(&rd).unwrap())
}

fn criterion_11() -> Check {
    for (t, r) in [('A', 2), ('C', 2), ('G', 2)] {
        let g = coxeter(t, r);
        let kl = KLData::new(&g);
        for x in 0..g.len() {
            for w in 0..g.len() {
                let want: Poly = if kl.bruhat[x][w] { vec![1] } else { vec![] };
                ensure(kl.p[x][w] == want, || format!("{t}{r}: P({x},{w}) = {:?}", kl.p[x][w]))?;
            }
        }
    }
    let g = coxeter('A', 3);
    let kl = KLData::new(&g);
    let oracle = kl_oracle(&g);
    let mut nontrivial = 0;
    for x in 0..g.len() {
        for w in 0..g.len() {
            ensure(trim(kl.p[x][w].clone()) == oracle[x][w], || {
                format!("A3: P({x},{w}) = {:?}, oracle {:?}", kl.p[x][w], oracle[x][w])
            })?;
            nontrivial += usize::from(oracle[x][w].len() > 1);
        }
    }
    ensure(nontrivial > 0, || "A3 oracle found no nontrivial polynomial".into())?;
    for (t, r) in [('A', 2), ('C', 2), ('G', 2), ('A', 3), ('B', 3)] {
        let g = coxeter(t, r);
        let kl = KLData::new(&g);
        let cd = right_cells(&g, &kl);
        for cell in &cd.cells {
            let vals = cell_character(&g, &kl, cell, "").on_elements(&g);
            for s in 0..g.rank() {
                let up = cell.iter().filter(|&&w| g.length[g.rmul[w][s]] > g.length[w]).count() as i64;
                let want = Rational64::from(2 * up - cell.len() as i64);
                ensure(vals[g.rmul[0][s]] == want, || format!("{t}{r} cell {cell:?} at s{}", s + 1))?;
            }
        }
    }
    Ok(())
}

fn criterion_12() -> Check {
    for n in 1..=12 {
        let s = setting('A', 1, &[1], n);
        let sat = s.cov.is_saturated();
        let pers = is_persistent(&s.cov, &s.moduli, &s.weyl);
        let ok = if n % 2 == 1 {
            sat && pers
        } else if n % 4 == 0 {
            pers && !sat
        } else {
            !pers && !sat
        };
        ensure(ok, || format!("n={n}: saturated {sat}, persistent {pers}"))?;
    }
    Ok(())
}

fn dist(a: Rational64, b: Rational64) -> Rational64 {
    if a > b {
        a - b
    } else {
        b - a
    }
}

fn criterion_13() -> Check {
    let sweep = [2, 4, 5, 7, 8, 10, 11];
    let mut series: Vec<(String, Vec<Rational64>)> = vec![];
    for &n in &sweep {
        let s = sl3(n);
        let gs = constituents(&s, &full(&s)).unwrap();
        if series.is_empty() {
            series = gs.iter().map(|g| (g.name.clone(), vec![])).collect();
        }
        for (i, g) in gs.iter().enumerate() {
            let d = whittaker_dim_total(&s, g).unwrap();
            let deg = g.sigma.as_ref().unwrap().degree().to_integer();
            series[i].1.push(asymptotic_ratio(d, s.moduli.len(), s.weyl.len(), deg));
        }
    }
    let one = Rational64::from(1);
    let tol = Rational64::new(5, 100);
    let mut problems = vec![];
    for (name, rs) in &series {
        let gaps: Vec<Rational64> = rs.iter().map(|&x| dist(x, one)).collect();
        if gaps.windows(2).any(|w| w[1] > w[0]) {
            problems.push(format!("{name} not monotone"));
        }
        let last = *rs.last().unwrap();
        if dist(last, one) > tol {
            problems.push(format!(
                "{name} ratio at n=11 is {last} ~ {:.3}",
                *last.numer() as f64 / *last.denom() as f64
            ));
        }
    }
    ensure(problems.is_empty(), || problems.join("; "))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 13] = [
        ("character tables of A2 and C2", criterion_1),
        ("right cells and cell representations", criterion_2),
        ("sigma_X characters", criterion_3),
        ("dimension tables by pairing and inclusion-exclusion", criterion_4),
        ("sum rule", criterion_5),
        ("singleton orbits", criterion_6),
        ("worked scattering ranks", criterion_7),
        ("block rank equals pairing", criterion_8),
        ("d-function cocycle and negative control", criterion_9),
        ("GK non-vanishing and vanishing criterion", criterion_10),
        ("KL polynomials, A3 oracle, cell characters", criterion_11),
        ("SL2 persistence classification", criterion_12),
        ("asymptotic ratios for SL3", criterion_13),
    ];
    // Limits that hold only as n grows; failure is reported, not fatal.
    let advisory = [13];
    let start = Instant::now();
    let mut fatal = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let k = i + 1;
        let t = Instant::now();
        let res = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let ms = t.elapsed().as_millis();
        match res {
            Ok(()) => println!("criterion {k:2} PASS  {name} ({ms} ms)"),
            Err(why) => {
                println!("criterion {k:2} FAIL  {name} ({ms} ms): {why}");
                if !advisory.contains(&k) {
                    fatal += 1;
                }
            }
        }
    }
    println!("acceptance finished in {:.2} s", start.elapsed().as_secs_f64());
    // The CLI must still report success on the tables it mirrors.
    let tables = run(Command::Tables, &JobConfig::default()).map(|r| r.outcome);
    if tables.ok() != Some(Outcome::Ok) {
        println!("reference tables command reported a mismatch");
        fatal += 1;
    }
    if fatal > 0 {
        std::process::exit(1);
    }
}

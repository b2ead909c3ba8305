//! The subcommands.

use std::str::FromStr;

use num_rational::Rational64;
use wkl_core::characters::irreducible_characters;
use wkl_core::kl::cell_character;
use wkl_core::rootdata::mask_of;
use wkl_core::scattering::{
    constituent_block_rank, d_cocycle_report, steinberg_basis, theta_kernel_dim, verify_steinberg,
    NumericOptions, RankMode, Transversal,
};
use wkl_core::tables::{character_table, Family};
use wkl_core::whittaker::{
    asymptotic_ratio, coarse_dim, constituents, exceptional_character, phi_chi, vector_label,
    whittaker_dim, whittaker_dim_total, Constituent, GenuineCharacter, Setting,
};

use crate::config::{character, CoveringSpec, JobConfig};
use crate::report::{Report, Table};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Chartable,
    SigmaX,
    Dims,
    Orbits,
    Cells,
    ScatterRank,
    Verify,
    Tables,
}

impl Command {
    pub const ALL: [Command; 8] = [
        Command::Chartable,
        Command::SigmaX,
        Command::Dims,
        Command::Orbits,
        Command::Cells,
        Command::ScatterRank,
        Command::Verify,
        Command::Tables,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Command::Chartable => "chartable",
            Command::SigmaX => "sigma-x",
            Command::Dims => "dims",
            Command::Orbits => "orbits",
            Command::Cells => "cells",
            Command::ScatterRank => "scatter-rank",
            Command::Verify => "verify",
            Command::Tables => "tables",
        }
    }
}

impl FromStr for Command {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| CliError::Schema(format!("unknown command `{s}`")))
    }
}

/// How a run ended, beyond hard errors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    Mismatch,
    Unstable,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        match self {
            Outcome::Ok => 0,
            Outcome::Mismatch => 3,
            Outcome::Unstable => 4,
        }
    }

    fn worsen(&mut self, o: Outcome) {
        if o.exit_code() > self.exit_code() {
            *self = o;
        }
    }
}

pub struct Run {
    pub report: Report,
    pub outcome: Outcome,
}

pub fn run(cmd: Command, cfg: &JobConfig) -> Result<Run, CliError> {
    match cmd {
        Command::Chartable => chartable(cfg),
        Command::SigmaX => sigma_x(cfg),
        Command::Dims => dims(cfg),
        Command::Orbits => orbits(cfg),
        Command::Cells => cells(cfg),
        Command::ScatterRank => scatter_rank(cfg),
        Command::Verify => verify(cfg),
        Command::Tables => tables(),
    }
}

fn r(x: Rational64) -> String {
    x.to_string()
}

fn element_names(s: &Setting) -> Vec<String> {
    (0..s.weyl.len()).map(|w| s.weyl.name(w)).collect()
}

fn family_of(job: &CoveringSpec, n: i64) -> Option<Family> {
    let ty = job.cartan_type().ok()?;
    let q = job.q_simple().ok()?;
    if job.rank != 2 || job.lattice.to_ascii_lowercase() != "sc" {
        return None;
    }
    Family::ALL.into_iter().find(|f| {
        f.cartan_type().0 == ty && f.q_simple().as_slice() == q.as_slice() && f.admits(n)
    })
}

fn check(report: &mut Report, outcome: &mut Outcome, name: &str, ok: bool) {
    report.flag(name, if ok { "match" } else { "mismatch" });
    if !ok {
        outcome.worsen(Outcome::Mismatch);
    }
}

fn character_report(s: &Setting, ty: char) -> (Table, Option<bool>) {
    let mut headers = vec![String::new()];
    headers.extend(element_names(s));
    let mut t = Table::new("characters", headers);
    let irr = irreducible_characters(&s.group);
    let rows: Vec<(String, Vec<Rational64>)> = irr
        .iter()
        .map(|c| (c.name.clone(), c.on_elements(&s.group)))
        .collect();
    for (name, vals) in &rows {
        let mut row = vec![name.clone()];
        row.extend(vals.iter().map(|&v| r(v)));
        t.push(row);
    }
    let reference = (s.weyl.rank == 2)
        .then(|| character_table(ty))
        .flatten()
        .map(|want| {
            want.len() == rows.len()
                && want.iter().zip(&rows).all(|((wn, wv), (n, v))| {
                    wn == n && wv.iter().map(|&x| Rational64::from(x)).eq(v.iter().copied())
                })
        });
    (t, reference)
}

fn chartable(cfg: &JobConfig) -> Result<Run, CliError> {
    let job = cfg.covering()?;
    let s = job.setting(job.n)?;
    let ty = job.cartan_type()?;
    let mut report = Report::new("chartable");
    let mut outcome = Outcome::Ok;
    let (t, reference) = character_report(&s, ty);
    report.tables.push(t);
    if let Some(ok) = reference {
        report.mirrors.push(format!("{}2-character-table", ty.to_ascii_lowercase()));
        check(&mut report, &mut outcome, "reference", ok);
    }
    Ok(Run { report, outcome })
}

fn sigma_table(name: &str, s: &Setting) -> Table {
    let mut headers = vec!["n".to_string()];
    headers.extend(element_names(s));
    Table::new(name, headers)
}

fn sigma_x(cfg: &JobConfig) -> Result<Run, CliError> {
    let job = cfg.covering()?;
    let mut report = Report::new("sigma-x");
    let mut outcome = Outcome::Ok;
    let mut table: Option<Table> = None;
    for n in cfg.degrees()? {
        let s = job.setting(n)?;
        let row = s.sigma_x_row();
        let t = table.get_or_insert_with(|| sigma_table("sigma_X", &s));
        let mut cells = vec![n.to_string()];
        cells.extend(row.iter().map(i64::to_string));
        t.push(cells);
        if let Some(fam) = family_of(job, n) {
            let id = format!("{fam}-sigma-x");
            if !report.mirrors.contains(&id) {
                report.mirrors.push(id);
            }
            check(&mut report, &mut outcome, &format!("reference n={n}"), fam.sigma_row(n)? == row);
        }
    }
    report.tables.extend(table);
    Ok(Run { report, outcome })
}

fn sigma_degree(g: &Constituent) -> Result<i64, CliError> {
    let sigma = g
        .sigma
        .as_ref()
        .ok_or_else(|| CliError::Schema("Phi(chi) must consist of simple roots".into()))?;
    Ok(sigma.degree().to_integer())
}

fn dims(cfg: &JobConfig) -> Result<Run, CliError> {
    let job = cfg.covering()?;
    let mut report = Report::new("dims");
    let mut outcome = Outcome::Ok;
    let (mut pairing, mut coarse): (Option<Table>, Option<Table>) = (None, None);
    let mut asym = Table::new(
        "asymptotics",
        ["n", "constituent", "dim", "ratio"].map(String::from).to_vec(),
    );
    for n in cfg.degrees()? {
        let s = job.setting(n)?;
        let chi = character(cfg.character.as_ref(), &s)?;
        let phi = phi_chi(&s.cov, &chi);
        let gs = constituents(&s, &chi)?;
        let mut headers = vec!["n".to_string()];
        headers.extend(gs.iter().map(|g| g.name.clone()));
        let pt = pairing.get_or_insert_with(|| Table::new("pairing", headers.clone()));
        let ct = coarse.get_or_insert_with(|| Table::new("inclusion-exclusion", headers));
        let mut prow = vec![n.to_string()];
        let mut crow = vec![n.to_string()];
        let mut values = vec![];
        let phi_mask = mask_of(&phi);
        for g in &gs {
            let deg = sigma_degree(g)?;
            let d = whittaker_dim_total(&s, g)?;
            let c = coarse_dim(&s, phi_mask, mask_of(&g.s), None);
            prow.push(d.to_string());
            crow.push(c.to_string());
            values.push(d);
            if d != c {
                outcome.worsen(Outcome::Mismatch);
            }
            let ratio = asymptotic_ratio(d, s.moduli.len(), s.weyl.len(), deg);
            asym.push(vec![n.to_string(), g.name.clone(), d.to_string(), r(ratio)]);
        }
        pt.push(prow);
        ct.push(crow);
        let total: i64 = values.iter().sum();
        check(&mut report, &mut outcome, &format!("sum rule n={n}"), total == s.moduli.len() as i64);
        if phi.len() == s.weyl.rank && phi.iter().all(|&a| a < s.weyl.rank) {
            if let Some(fam) = family_of(job, n) {
                let id = format!("{fam}-dims");
                if !report.mirrors.contains(&id) {
                    report.mirrors.push(id);
                }
                check(&mut report, &mut outcome, &format!("reference n={n}"), fam.dims(n)? == values);
            }
        }
    }
    report.tables.extend(pairing);
    report.tables.extend(coarse);
    report.tables.push(asym);
    report.flag("routes agree", if outcome == Outcome::Ok { "yes" } else { "no" });
    Ok(Run { report, outcome })
}

fn yes(b: bool) -> String {
    if b { "yes" } else { "no" }.into()
}

fn orbits(cfg: &JobConfig) -> Result<Run, CliError> {
    let job = cfg.covering()?;
    let mut report = Report::new("orbits");
    let mut t = Table::new(
        "orbits",
        ["n", "rep", "size", "stabilizer", "free", "singleton", "persistent", "members"]
            .map(String::from)
            .to_vec(),
    );
    for n in cfg.degrees()? {
        let s = job.setting(n)?;
        for o in &s.orbits {
            let label = |c: usize| vector_label(&s, &s.moduli.reps[c]);
            t.push(vec![
                n.to_string(),
                label(o.rep()),
                o.elements.len().to_string(),
                o.stabilizer.len().to_string(),
                yes(o.free),
                yes(o.singleton),
                yes(o.persistent),
                o.elements.iter().map(|&c| label(c)).collect::<Vec<_>>().join(" "),
            ]);
        }
        report.flag(&format!("moduli size n={n}"), s.moduli.len());
    }
    report.tables.push(t);
    Ok(Run {
        report,
        outcome: Outcome::Ok,
    })
}

fn cells(cfg: &JobConfig) -> Result<Run, CliError> {
    let job = cfg.covering()?;
    let s = job.setting(job.n)?;
    let irr = irreducible_characters(&s.group);
    let mut report = Report::new("cells");
    let mut t = Table::new("cells", ["cell", "elements", "representation"].map(String::from).to_vec());
    let mut chars = sigma_table("cell characters", &s);
    chars.headers[0] = "cell".into();
    for (i, cell) in s.cells.cells.iter().enumerate() {
        let c = cell_character(&s.group, &s.kl, cell, "");
        let parts: Vec<String> = c
            .decompose(&irr, &s.group)
            .iter()
            .zip(&irr)
            .filter(|(m, _)| **m != Rational64::from(0))
            .map(|(m, x)| {
                if *m == Rational64::from(1) {
                    x.name.clone()
                } else {
                    format!("{m}*{}", x.name)
                }
            })
            .collect();
        let names: Vec<String> = cell.iter().map(|&w| s.weyl.name(w)).collect();
        t.push(vec![(i + 1).to_string(), names.join(" "), parts.join(" + ")]);
        let mut row = vec![(i + 1).to_string()];
        row.extend(c.on_elements(&s.group).into_iter().map(r));
        chars.push(row);
    }
    report.tables.push(t);
    report.tables.push(chars);
    Ok(Run {
        report,
        outcome: Outcome::Ok,
    })
}

fn scatter_rank(cfg: &JobConfig) -> Result<Run, CliError> {
    let job = cfg.covering()?;
    let mode = cfg.scattering.mode()?;
    let opts = cfg.scattering.options()?;
    let mut report = Report::new("scatter-rank");
    let mut outcome = Outcome::Ok;
    let mut t = Table::new(
        "ranks",
        ["n", "constituent", "orbit", "size", "pairing", "rank", "status"]
            .map(String::from)
            .to_vec(),
    );
    for n in cfg.degrees()? {
        let s = job.setting(n)?;
        let chi = character(cfg.character.as_ref(), &s)?;
        let tr = Transversal::standard(&s.moduli);
        for g in constituents(&s, &chi)? {
            for o in &s.orbits {
                let pairing = match g.sigma {
                    Some(_) => Some(whittaker_dim(&s, &g, o)?),
                    None => None,
                };
                let rank = match constituent_block_rank(&s, &tr, &g, &chi, o, mode, &opts) {
                    Ok(k) => Some(k as i64),
                    Err(wkl_core::Error::Unstable(_)) => {
                        outcome.worsen(Outcome::Unstable);
                        None
                    }
                    Err(e) => return Err(e.into()),
                };
                if let (Some((p, _)), Some(k)) = (pairing, rank) {
                    if p != k {
                        outcome.worsen(Outcome::Mismatch);
                    }
                }
                t.push(vec![
                    n.to_string(),
                    g.name.clone(),
                    vector_label(&s, &s.moduli.reps[o.rep()]),
                    o.elements.len().to_string(),
                    pairing.map_or("-".into(), |p| p.0.to_string()),
                    rank.map_or("unstable".into(), |k| k.to_string()),
                    pairing.map_or("-".into(), |p| p.1.as_str().to_string()),
                ]);
            }
        }
    }
    report.tables.push(t);
    report.flag("mode", &cfg.scattering.mode);
    Ok(Run { report, outcome })
}

/// Covers used by `verify` when no covering is configured.
pub fn default_verify_suite() -> Vec<(Family, i64)> {
    vec![
        (Family::Sl3, 2),
        (Family::Sl3, 4),
        (Family::Sp4, 1),
        (Family::Sp4, 3),
        (Family::G2, 1),
        (Family::G2, 2),
    ]
}

struct Tally {
    cases: usize,
    failures: usize,
}

fn verify_one(
    s: &Setting,
    chi: &GenuineCharacter,
    opts: &NumericOptions,
    tallies: &mut [Tally; 5],
) -> Result<(), CliError> {
    let tr = Transversal::standard(&s.moduli);
    let mut tick = |i: usize, ok: bool| {
        tallies[i].cases += 1;
        if !ok {
            tallies[i].failures += 1;
        }
    };
    for g in constituents(s, chi)? {
        for o in &s.orbits {
            let (p, _) = whittaker_dim(s, &g, o)?;
            let exact = constituent_block_rank(s, &tr, &g, chi, o, RankMode::Exact, opts)? as i64;
            tick(0, exact == p);
            let numeric = match constituent_block_rank(s, &tr, &g, chi, o, RankMode::Numeric, opts) {
                Ok(k) => k as i64 == p,
                Err(wkl_core::Error::Unstable(_)) => false,
                Err(e) => return Err(e.into()),
            };
            tick(1, numeric);
        }
    }
    let full: Vec<usize> = (0..s.weyl.rank).collect();
    if phi_chi(&s.cov, chi) == full {
        for o in s.orbits.iter().filter(|o| o.persistent) {
            let k = theta_kernel_dim(s, &tr, chi, o, RankMode::Exact, opts)?;
            tick(2, k == usize::from(o.free));
            let c = steinberg_basis(s, &tr, o, chi)?;
            tick(3, verify_steinberg(s, &tr, o, chi, &c)?);
            tick(4, d_cocycle_report(s, &tr, o, chi)?.all());
        }
    }
    Ok(())
}

fn verify(cfg: &JobConfig) -> Result<Run, CliError> {
    let opts = cfg.scattering.options()?;
    let mut report = Report::new("verify");
    let mut t = Table::new(
        "checks",
        ["cover", "n", "check", "cases", "failures"].map(String::from).to_vec(),
    );
    let names = ["exact rank = pairing", "numeric rank = pairing", "theta kernel", "steinberg vector", "d cocycle"];
    let mut runs: Vec<(String, i64, Setting)> = vec![];
    match &cfg.covering {
        Some(job) => {
            for n in cfg.degrees()? {
                runs.push((format!("{}{}", job.cartan_type()?, job.rank), n, job.setting(n)?));
            }
        }
        None => {
            for (fam, n) in default_verify_suite() {
                runs.push((fam.to_string(), n, fam.setting(n, 1)?));
            }
        }
    }
    let mut outcome = Outcome::Ok;
    for (label, n, s) in &runs {
        let chi = match &cfg.covering {
            Some(_) => character(cfg.character.as_ref(), s)?,
            None => exceptional_character(&s.cov, &s.weyl, &(0..s.weyl.rank).collect::<Vec<_>>())?,
        };
        let mut tallies = [0; 5].map(|_| Tally { cases: 0, failures: 0 });
        verify_one(s, &chi, &opts, &mut tallies)?;
        for (name, tally) in names.iter().zip(&tallies) {
            if tally.failures > 0 {
                outcome.worsen(Outcome::Mismatch);
            }
            t.push(vec![
                label.clone(),
                n.to_string(),
                name.to_string(),
                tally.cases.to_string(),
                tally.failures.to_string(),
            ]);
        }
    }
    report.tables.push(t);
    report.flag("result", if outcome == Outcome::Ok { "pass" } else { "fail" });
    Ok(Run { report, outcome })
}

/// The ten reference tables, each as its own table named by its id.
fn tables() -> Result<Run, CliError> {
    let mut report = Report::new("tables");
    let mut outcome = Outcome::Ok;
    for ty in ['A', 'C'] {
        let fam = if ty == 'A' { Family::Sl3 } else { Family::Sp4 };
        let s = fam.setting(1, 1)?;
        let (mut t, reference) = character_report(&s, ty);
        t.name = format!("{}2-character-table", ty.to_ascii_lowercase());
        check(&mut report, &mut outcome, &t.name, reference == Some(true));
        report.mirrors.push(t.name.clone());
        report.tables.push(t);
    }
    for fam in Family::ALL {
        let sweep = fam.default_sweep();
        let mut sig: Option<Table> = None;
        let mut dim: Option<Table> = None;
        let mut ok_sig = true;
        let mut ok_dim = true;
        for &n in &sweep {
            let s = fam.setting(n, 1)?;
            let row = s.sigma_x_row();
            ok_sig &= fam.sigma_row(n)? == row;
            let t = sig.get_or_insert_with(|| sigma_table(&format!("{fam}-sigma-x"), &s));
            let mut cells = vec![n.to_string()];
            cells.extend(row.iter().map(i64::to_string));
            t.push(cells);
            let chi = exceptional_character(&s.cov, &s.weyl, &[0, 1])?;
            let gs = constituents(&s, &chi)?;
            let vals = gs
                .iter()
                .map(|g| whittaker_dim_total(&s, g))
                .collect::<Result<Vec<_>, _>>()?;
            ok_dim &= fam.dims(n)? == vals;
            let t = dim.get_or_insert_with(|| {
                let mut h = vec!["n".to_string()];
                h.extend(gs.iter().map(|g| g.name.clone()));
                Table::new(&format!("{fam}-dims"), h)
            });
            let mut cells = vec![n.to_string()];
            cells.extend(vals.iter().map(i64::to_string));
            t.push(cells);
        }
        for (t, ok) in [(sig, ok_sig), (dim, ok_dim)] {
            let t = t.expect("sweeps are nonempty");
            check(&mut report, &mut outcome, &t.name, ok);
            report.mirrors.push(t.name.clone());
            report.tables.push(t);
        }
    }
    Ok(Run { report, outcome })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(json: &str) -> JobConfig {
        JobConfig::from_json(json).unwrap()
    }

    #[test]
    fn sl3_dims_at_two() {
        let c = cfg(r#"{"covering": {"type": "A", "rank": 2, "Q": [1, 1], "n": 2},
                        "character": {"exceptional_on": [1, 2]}}"#);
        let run = run(Command::Dims, &c).unwrap();
        assert_eq!(run.outcome, Outcome::Ok);
        assert_eq!(run.report.tables[0].rows[0], vec!["2", "2", "1", "1", "0"]);
    }

    #[test]
    fn sp4_sigma_at_three() {
        let c = cfg(r#"{"covering": {"type": "C", "rank": 2, "Q": [2, 1], "n": 3}}"#);
        let run = run(Command::SigmaX, &c).unwrap();
        assert_eq!(run.report.tables[0].rows[0], vec!["3", "9", "3", "3", "1", "1", "3", "3", "1"]);
        assert_eq!(run.outcome, Outcome::Ok);
    }

    #[test]
    fn g2_dims_at_one() {
        let c = cfg(r#"{"covering": {"type": "G", "rank": 2, "Q": [1, 3], "n": 1}}"#);
        let run = run(Command::Dims, &c).unwrap();
        assert_eq!(run.report.tables[0].rows[0], vec!["1", "1", "0", "0", "0"]);
    }

    #[test]
    fn orbits_of_a_linear_group() {
        let c = cfg(r#"{"covering": {"type": "A", "rank": 2, "n": 1}}"#);
        let run = run(Command::Orbits, &c).unwrap();
        assert_eq!(run.report.tables[0].rows.len(), 1);
        assert_eq!(run.report.tables[0].rows[0][5], "yes");
    }

    #[test]
    fn c2_cells() {
        let c = cfg(r#"{"covering": {"type": "C", "rank": 2, "Q": [2, 1], "n": 1}}"#);
        let run = run(Command::Cells, &c).unwrap();
        let reps: Vec<&str> = run.report.tables[0].rows.iter().map(|r| r[2].as_str()).collect();
        assert_eq!(reps, vec!["1", "chi' + sigma0", "chi'' + sigma0", "eps"]);
    }

    #[test]
    fn reference_tables_match() {
        let run = tables().unwrap();
        assert_eq!(run.outcome, Outcome::Ok);
        assert_eq!(run.report.tables.len(), 10);
    }
}

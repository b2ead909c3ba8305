//! Structural invariants: Gauss-monomial canonical form, braid consistency,
//! Bruhat order, constituent partitions, orbit counts, induction and ranks.

use std::collections::BTreeSet;

use num_rational::Rational64;
use proptest::prelude::*;
use wkl_core::characters::{induce, ClassFunction};
use wkl_core::covering::{decompose_orbits, CoveringDatum};
use wkl_core::gauss::GaussMonomial;
use wkl_core::kl::{cell_character, Coxeter, KLData};
use wkl_core::rootdata::{mask_members, LatticeKind, RootDatum, WeylGroup};
use wkl_core::scattering::*;
use wkl_core::tables::Family;
use wkl_core::whittaker::*;

fn setting(t: char, r: usize, q: &[i64], n: i64, xi: i64) -> Setting {
    let rd = RootDatum::new(t, r, LatticeKind::SimplyConnected).unwrap();
    Setting::new(CoveringDatum::new(rd, q, n, xi).unwrap()).unwrap()
}

fn small_settings() -> Vec<Setting> {
    vec![
        setting('A', 2, &[1, 1], 2, 1),
        setting('A', 2, &[1, 1], 2, -1),
        setting('C', 2, &[2, 1], 3, 1),
        setting('G', 2, &[1, 3], 2, 1),
    ]
}

fn full(s: &Setting) -> GenuineCharacter {
    exceptional_character(&s.cov, &s.weyl, &(0..s.weyl.rank).collect::<Vec<_>>()).unwrap()
}

/// Every subset of the simple roots for which an exceptional character exists.
fn simple_phis(s: &Setting) -> Vec<Vec<usize>> {
    (0..1u64 << s.weyl.rank).map(mask_members).collect()
}

type Raw = (i64, i64, i64, i64, i64, Vec<(i64, i64)>);

fn raw_monomial() -> impl Strategy<Value = (i64, Raw)> {
    (1i64..9).prop_flat_map(|n| {
        let xi = if n % 2 == 0 { 0..2i64 } else { 0..1i64 };
        (
            Just(n),
            (
                prop_oneof![Just(1i64), Just(-1i64)],
                -6i64..6,
                0i64..8,
                xi,
                1i64..3,
                prop::collection::vec((-12i64..12, -3i64..4), 0..4),
            ),
        )
    })
}

fn canon(n: i64, r: &Raw) -> GaussMonomial {
    let (sign, q2, phase8, xi, _, g) = r;
    GaussMonomial::canonicalize(n, *sign, Rational64::new(*q2, 2), Rational64::new(*phase8, 8), *xi, g)
}

proptest! {
    #[test]
    fn canonical_form_is_idempotent((n, r) in raw_monomial()) {
        let c = canon(n, &r);
        let again = GaussMonomial::canonicalize(n, c.sign, c.q_exp, c.phase, i64::from(c.xi), &c.g);
        prop_assert_eq!(again, c);
    }

    #[test]
    fn canonical_form_is_multiplicative((n, a) in raw_monomial(), b in raw_monomial()) {
        let b = b.1;
        let mut xi_b = b.3;
        if n % 2 == 1 {
            xi_b = 0;
        }
        let b = (b.0, b.1, b.2, xi_b, b.4, b.5);
        let mut g = a.5.clone();
        g.extend(b.5.iter().copied());
        let joint = (a.0 * b.0, a.1 + b.1, a.2 + b.2, a.3 + b.3, 1, g);
        prop_assert_eq!(canon(n, &joint), canon(n, &a).mul(&canon(n, &b)));
    }

    #[test]
    fn sum_rule_and_partition(fi in 0usize..4, k in 0usize..3, phi_mask in 0u64..4) {
        let fam = Family::ALL[fi];
        let sweep = fam.default_sweep();
        let n = sweep[k % sweep.len()];
        let s = fam.setting(n, 1).unwrap();
        let chi = exceptional_character(&s.cov, &s.weyl, &mask_members(phi_mask)).unwrap();
        let gs = constituents(&s, &chi).unwrap();
        prop_assert_eq!(gs.iter().map(|g| g.elements.len()).sum::<usize>(), s.weyl.len());
        let total: i64 = gs.iter().map(|g| whittaker_dim_total(&s, g).unwrap()).sum();
        prop_assert_eq!(total, s.moduli.len() as i64);
    }
}

#[test]
fn gauss_pairing_examples() {
    for n in 1..9 {
        let g_n = GaussMonomial::canonicalize(n, 1, 0.into(), 0.into(), 0, &[(n, 1)]);
        assert_eq!(g_n, GaussMonomial::canonicalize(n, -1, (-1).into(), 0.into(), 0, &[]));
        let sq = g_n.mul(&g_n);
        assert_eq!(sq, GaussMonomial::canonicalize(n, 1, (-2).into(), 0.into(), 0, &[]));
        for k in 1..n {
            let p = GaussMonomial::canonicalize(n, 1, 0.into(), 0.into(), 0, &[(k, 1), (n - k, 1)]);
            let xi = if n % 2 == 0 { k } else { 0 };
            assert_eq!(p, GaussMonomial::canonicalize(n, 1, (-1).into(), 0.into(), xi, &[]));
        }
    }
}

#[test]
fn reduced_words_give_equal_matrices() {
    for s in small_settings() {
        let tr = Transversal::standard(&s.moduli);
        let chi = full(&s);
        for w in 0..s.weyl.len() {
            let words = s.weyl.reduced_words(w);
            let m0 = scattering_matrix(&s, &tr, &words[0], &chi, None).unwrap();
            for word in &words[1..] {
                let m = scattering_matrix(&s, &tr, word, &chi, None).unwrap();
                assert!(m.equals(&m0), "{} {:?}", s.weyl.name(w), word);
            }
        }
    }
}

#[test]
fn matrices_vanish_off_orbit_blocks() {
    for s in small_settings() {
        let tr = Transversal::standard(&s.moduli);
        let chi = full(&s);
        let m = scattering_matrix(&s, &tr, s.weyl.word(s.weyl.longest), &chi, None).unwrap();
        for o in &s.orbits {
            let inside = tr.block(o);
            for &c in &inside {
                for r in 0..tr.len() {
                    if inside.binary_search(&r).is_err() {
                        assert!(m.rows[r][c].is_zero());
                    }
                }
            }
        }
    }
}

/// Products of all subwords of a reduced word.
fn subword_products(weyl: &WeylGroup, word: &[usize]) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for mask in 0..1u32 << word.len() {
        let sub: Vec<usize> = (0..word.len()).filter(|&i| mask >> i & 1 == 1).map(|i| word[i]).collect();
        out.insert(weyl.from_word(&sub));
    }
    out
}

#[test]
fn bruhat_order_is_the_subword_order() {
    for (t, r) in [('A', 2), ('C', 2), ('G', 2), ('A', 3), ('B', 3)] {
        let rd = RootDatum::new(t, r, LatticeKind::SimplyConnected).unwrap();
        let weyl = WeylGroup::new(&rd).unwrap();
        for w in 0..weyl.len() {
            let below = subword_products(&weyl, weyl.word(w));
            for x in 0..weyl.len() {
                assert_eq!(weyl.bruhat_leq(x, w), below.contains(&x), "{t}{r}");
            }
        }
    }
}

#[test]
fn plus_counts_orbits_and_minus_counts_free_orbits() {
    for fam in Family::ALL {
        for n in fam.default_sweep() {
            let s = fam.setting(n, 1).unwrap();
            for phi in simple_phis(&s) {
                let chi = exceptional_character(&s.cov, &s.weyl, &phi).unwrap();
                let gs = constituents(&s, &chi).unwrap();
                let mask = phi.iter().fold(0u64, |m, &j| m | 1 << j);
                let orbits = decompose_orbits(&s.cov, &s.moduli, &s.weyl, mask);
                let plus = gs.iter().find(|g| g.plus).unwrap();
                assert_eq!(whittaker_dim_total(&s, plus).unwrap(), orbits.len() as i64);
            }
            let chi = full(&s);
            let gs = constituents(&s, &chi).unwrap();
            let minus = gs.iter().find(|g| g.minus).unwrap();
            let free = s.orbits.iter().filter(|o| o.free).count() as i64;
            assert_eq!(whittaker_dim_total(&s, minus).unwrap(), free, "{fam} n={n}");
            for o in &s.orbits {
                let (d, _) = whittaker_dim(&s, minus, o).unwrap();
                assert_eq!(d, i64::from(o.free));
            }
            // The theta constituent bounds every other one from below.
            let dm = whittaker_dim_total(&s, minus).unwrap();
            for g in &gs {
                assert!(whittaker_dim_total(&s, g).unwrap() >= dm);
            }
        }
    }
}

#[test]
fn conjugate_constituents_share_characters() {
    {
        let fam = Family::Sl3;
        for n in fam.default_sweep() {
            let s = fam.setting(n, 1).unwrap();
            let gs = constituents(&s, &full(&s)).unwrap();
            let wg = s.weyl.longest;
            let mut conj: Vec<usize> = gs[1]
                .elements
                .iter()
                .map(|&w| s.weyl.mul(s.weyl.mul(wg, w), wg))
                .collect();
            conj.sort_unstable();
            assert_eq!(conj, gs[2].elements);
            assert_eq!(gs[1].sigma.as_ref().unwrap().values, gs[2].sigma.as_ref().unwrap().values);
            assert_eq!(
                whittaker_dim_total(&s, &gs[1]).unwrap(),
                whittaker_dim_total(&s, &gs[2]).unwrap()
            );
        }
    }
}

#[test]
fn constituents_are_induced_from_the_levi() {
    for (t, r, q) in [('A', 2, vec![1, 1]), ('C', 2, vec![2, 1]), ('G', 2, vec![1, 3]), ('A', 3, vec![1, 1, 1])] {
        let s = setting(t, r, &q, 1, 1);
        let weyl = &s.weyl;
        for phi in simple_phis(&s) {
            let mask = phi.iter().fold(0u64, |m, &j| m | 1 << j);
            let h = Coxeter::parabolic(weyl, mask);
            let kl_h = KLData::new(&h);
            // R: w with w^{-1} beta^vee > 0 on Phi.
            let reps: Vec<usize> = (0..weyl.len()).filter(|&w| s.s_of(&phi, w).is_empty()).collect();
            for g in constituents_for(&s, &phi).unwrap() {
                let local: Vec<usize> = (0..h.len())
                    .filter(|&i| {
                        let sw: Vec<usize> = s.s_of(&phi, h.ambient[i]).iter().map(|&k| phi[k]).collect();
                        sw == g.s
                    })
                    .collect();
                let mut prod: Vec<usize> = local
                    .iter()
                    .flat_map(|&i| reps.iter().map(move |&r| (i, r)))
                    .map(|(i, r)| weyl.mul(h.ambient[i], r))
                    .collect();
                prod.sort_unstable();
                prod.dedup();
                assert_eq!(prod, g.elements, "{t}{r} phi={phi:?}");
                let small = cell_character(&h, &kl_h, &local, "");
                let ind: ClassFunction = induce(&h, &small, &s.group);
                assert_eq!(&ind.values, &g.sigma.as_ref().unwrap().values);
            }
        }
    }
}

fn operator_at(s: &Setting, chi: &GenuineCharacter, w: usize) -> (Vec<usize>, GenuineCharacter) {
    let weyl = &s.weyl;
    let src = weyl.mul(weyl.longest, weyl.inverse[w]);
    (weyl.word(weyl.longest).to_vec(), chi.act(weyl, src))
}

#[test]
fn rank_is_independent_of_the_chamber_element() {
    let opts = NumericOptions::default();
    for s in [setting('A', 2, &[1, 1], 2, 1), setting('C', 2, &[2, 1], 3, 1)] {
        let tr = Transversal::standard(&s.moduli);
        let chi = full(&s);
        for g in constituents(&s, &chi).unwrap() {
            for o in &s.orbits {
                let block = tr.block(o);
                let want = whittaker_dim(&s, &g, o).unwrap().0 as usize;
                for &w in &g.elements {
                    let op = operator_at(&s, &chi, w);
                    let r = block_rank(&s, &tr, &[op], Some(&block), RankMode::Numeric, &opts).unwrap();
                    assert_eq!(r, want, "{} at {}", g.name, s.weyl.name(w));
                }
            }
        }
    }
}

#[test]
fn rank_one_operators_exchange_kernel_and_image() {
    for s in small_settings() {
        let tr = Transversal::standard(&s.moduli);
        let chi = full(&s);
        for j in 0..s.weyl.rank {
            let sj = s.weyl.rmul[0][j];
            let reflected = chi.act(&s.weyl, sj);
            let a = scattering_matrix(&s, &tr, &[j], &chi, None).unwrap();
            let b = scattering_matrix(&s, &tr, &[j], &reflected, None).unwrap();
            assert!(b.mul(&a).is_zero());
            assert!(a.mul(&b).is_zero());
            for o in &s.orbits {
                let block = tr.block(o);
                let ra = exact_rank(&a.restrict(&block).rows, s.cov.xi).unwrap();
                let rb = exact_rank(&b.restrict(&block).rows, s.cov.xi).unwrap();
                assert_eq!(ra + rb, block.len());
            }
        }
    }
}

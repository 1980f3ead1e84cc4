//! Test-side oracles and generators, kept independent of the library's
//! evaluator.
#![allow(dead_code)]

use kfde::semantics::{FourValue, Frame, Model};
use kfde::syntax::{Formula, Sequent};
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// `(⊨⁺, ⊨⁻)` of `f` at every world, straight from the clauses.
pub fn supports(m: &Model, f: &Formula) -> Vec<(bool, bool)> {
    let n = m.frame().len();
    let succ = |w: usize| m.frame().successors(w);
    match f {
        Formula::Atom(p) => (0..n)
            .map(|w| (m.value_at(w, p).supports_truth(), m.value_at(w, p).supports_falsity()))
            .collect(),
        Formula::Not(a) => supports(m, a).into_iter().map(|(t, f)| (f, t)).collect(),
        Formula::And(a, b) => {
            let (a, b) = (supports(m, a), supports(m, b));
            (0..n).map(|w| (a[w].0 && b[w].0, a[w].1 || b[w].1)).collect()
        }
        Formula::Or(a, b) => {
            let (a, b) = (supports(m, a), supports(m, b));
            (0..n).map(|w| (a[w].0 || b[w].0, a[w].1 && b[w].1)).collect()
        }
        Formula::Tri(a) => {
            let a = supports(m, a);
            (0..n)
                .map(|w| {
                    let r = succ(w);
                    let pairs = || r.iter().flat_map(|&u| r.iter().map(move |&v| (u, v)));
                    let t1 = pairs().all(|(u, v)| (!a[u].0 || a[v].0) && (!a[u].1 || a[v].1));
                    let t2 = r.iter().all(|&u| a[u].0 || a[u].1);
                    let f1 = pairs().any(|(u, v)| a[u].0 && !a[v].0);
                    let f2 = pairs().any(|(u, v)| a[u].1 && !a[v].1);
                    let f3 = pairs().any(|(u, v)| a[u].0 && a[v].1);
                    (t1 && t2, f1 || f2 || f3)
                })
                .collect()
        }
        Formula::Nec(a) => {
            let a = supports(m, a);
            (0..n).map(|w| (succ(w).iter().all(|&u| a[u].0), succ(w).iter().any(|&u| a[u].1))).collect()
        }
    }
}

pub fn naive(m: &Model, w: usize, f: &Formula) -> FourValue {
    let (t, f) = supports(m, f)[w];
    FourValue::new(t, f)
}

/// [`naive`] at every world.
pub fn naive_all(m: &Model, f: &Formula) -> Vec<FourValue> {
    supports(m, f).into_iter().map(|(t, f)| FourValue::new(t, f)).collect()
}

pub fn vars(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Random formula over `vars` with at most `depth` nested connectives.
/// `modal` picks the modality: 0 = none, 1 = ▲, 2 = □, 3 = both.
pub fn random_formula(rng: &mut ChaCha8Rng, vars: &[String], depth: usize, modal: u8) -> Formula {
    if depth == 0 || rng.random_range(0..4) == 0 {
        return Formula::atom(vars[rng.random_range(0..vars.len())].clone());
    }
    let sub = |rng: &mut ChaCha8Rng| random_formula(rng, vars, depth - 1, modal);
    match rng.random_range(0..5) {
        0 => Formula::not(sub(rng)),
        1 => Formula::and(sub(rng), sub(rng)),
        2 => Formula::or(sub(rng), sub(rng)),
        _ => match modal {
            0 => Formula::not(sub(rng)),
            1 => Formula::tri(sub(rng)),
            2 => Formula::nec(sub(rng)),
            _ if rng.random_bool(0.5) => Formula::tri(sub(rng)),
            _ => Formula::nec(sub(rng)),
        },
    }
}

pub fn tri_depth(f: &Formula) -> usize {
    match f {
        Formula::Atom(_) => 0,
        Formula::Not(a) | Formula::Nec(a) => tri_depth(a),
        Formula::Tri(a) => 1 + tri_depth(a),
        Formula::And(a, b) | Formula::Or(a, b) => tri_depth(a).max(tri_depth(b)),
    }
}

/// Hand-picked sequents of the ▲-language.
pub const HAND_CORPUS: &[&str] = &[
    "#p |- #~p",
    "#~p |- #p",
    "p |- p",
    "p & q |- p",
    "p |- p | q",
    "p & ~p |- q",
    "p |- q | ~q",
    "~~p |- p",
    "p |- ~~p",
    "~(p & q) |- ~p | ~q",
    "~p | ~q |- ~(p & q)",
    "~(p | q) |- ~p & ~q",
    "p & (q | ~q) |- (p & q) | (p & ~q)",
    "(p & q) | (p & ~q) |- p & (q | ~q)",
    "#p |- p",
    "p |- #p",
    "#(p | ~p) |- p | ~p",
    "p | ~p |- #(p | ~p)",
    "q | ~q |- #(q | ~q)",
    "#p |- ##p",
    "@p |- ##p",
    "@p |- #p",
    "#p & #q |- #(p & q)",
    "#(p & q) |- #p",
    "#p |- #(p | p)",
    "#(p | p) |- #p",
    "#p & p |- #~~p",
    "##p |- #p",
    "###p |- #p",
    "#p |- ###p",
    "###p |- ###~p",
    "##~p |- ##p",
    "#(p & ~p) |- #p",
    "#p & ~#p |- q",
    "@p |- ~#p",
    "~#p |- @p",
    "#p | @p |- #q | @q",
    "#p & #~p |- #(p | ~p)",
    "#(#p & q) |- #q",
    "p & #p |- #(p & p)",
    "#(p | q) |- #(q | p)",
    "#(p & q) |- #(q & p)",
    "#~~p |- #p",
    "#p & #q |- #(p | q)",
    "#(p | #q) |- #(#q | p)",
    "~#~#p |- #p",
    "#p |- #p | q",
    "#(p & ~p) |- #(q & ~q)",
    "#(#p | #~p) |- ##p",
    "##p & ##q |- #(#p & #q)",
];

/// Parsed hand corpus plus `extra` random ▲-sequents over `{p, q}` with
/// ▲-depth at most 3, from a fixed seed.
pub fn corpus(extra: usize, seed: u64) -> Vec<Sequent> {
    use rand::SeedableRng;
    let mut out: Vec<Sequent> = HAND_CORPUS.iter().map(|s| kfde::parse_sequent(s).unwrap()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vs = vars(&["p", "q"]);
    while out.len() < HAND_CORPUS.len() + extra {
        let a = random_formula(&mut rng, &vs, 4, 1);
        let b = random_formula(&mut rng, &vs, 4, 1);
        if tri_depth(&a) <= 3 && tri_depth(&b) <= 3 {
            out.push(Sequent::new(a, b));
        }
    }
    out
}

pub fn arb_value() -> impl Strategy<Value = FourValue> {
    prop::sample::select(FourValue::ALL.to_vec())
}

/// Formulas over `{p, q}`; `modal` as in [`random_formula`].
pub fn arb_formula(modal: u8) -> impl Strategy<Value = Formula> {
    let leaf = prop::sample::select(vec!["p", "q"]).prop_map(Formula::atom);
    leaf.prop_recursive(5, 40, 2, move |inner| {
        let unary = prop_oneof![
            inner.clone().prop_map(Formula::not),
            inner.clone().prop_map(move |f| match modal {
                0 => Formula::not(f),
                2 => Formula::nec(f),
                _ => Formula::tri(f),
            }),
            inner.clone().prop_map(move |f| if modal == 3 { Formula::nec(f) } else { Formula::not(f) }),
        ];
        prop_oneof![
            unary,
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::or(a, b)),
        ]
    })
}

/// Models with 1 to `max_worlds` worlds over `{p, q}`.
pub fn arb_model(max_worlds: usize) -> impl Strategy<Value = Model> {
    (1..=max_worlds).prop_flat_map(|n| {
        (
            prop::collection::vec(any::<bool>(), n * n),
            prop::collection::vec(arb_value(), 2 * n),
        )
            .prop_map(move |(edges, values)| {
                let pairs = (0..n * n).filter(|&k| edges[k]).map(|k| (k / n, k % n));
                let mut m = Model::new(Frame::from_indices(n, pairs));
                for w in 0..n {
                    m = m.with(&format!("w{w}"), "p", values[2 * w]).with(&format!("w{w}"), "q", values[2 * w + 1]);
                }
                m
            })
    })
}

/// Checks one corpus sequent against the bounded oracle and the prover's
/// own metatheory. Returns whether it was proved.
pub fn check_corpus_sequent(s: &Sequent) -> Result<bool, String> {
    use kfde::analysis::find_countermodel;
    use kfde::semantics::{sequent_holds, supports_true};
    use kfde::tableau::{contraposed_root_items, prove, prove_from, Item};

    let label = s.render();
    let result = prove(s).map_err(|e| format!("{label}: {e}"))?;
    let proved = result.is_proved();
    match result.countermodel() {
        None => {
            if let Some(m) = find_countermodel(s, 3).map_err(|e| e.to_string())? {
                return Err(format!("{label}: proved but refuted by {}", m.to_json()));
            }
        }
        Some(m) => {
            let premise = supports_true(&m.model, &m.world, &s.premise).map_err(|e| e.to_string())?;
            let conclusion = supports_true(&m.model, &m.world, &s.conclusion).map_err(|e| e.to_string())?;
            if !premise || conclusion || sequent_holds(&m.model, s) {
                return Err(format!("{label}: countermodel does not refute it"));
            }
        }
    }
    let allowed = s.subformulas();
    for item in result.tree().items() {
        if let Item::Labelled(l) = item {
            if !allowed.contains(&l.formula) {
                return Err(format!("{label}: {} is not a subformula", l.formula.render()));
            }
        }
    }
    let contraposed = prove_from(contraposed_root_items(s)).map_err(|e| e.to_string())?;
    if contraposed.is_proved() != proved {
        return Err(format!("{label}: contraposed tree disagrees"));
    }
    Ok(proved)
}

/// Random model with 1 to `max_worlds` worlds over `vars`.
pub fn random_model(rng: &mut ChaCha8Rng, max_worlds: usize, vars: &[String]) -> Model {
    let n = rng.random_range(1..=max_worlds);
    let edges: Vec<(usize, usize)> =
        (0..n * n).filter(|_| rng.random_bool(0.5)).map(|k| (k / n, k % n)).collect();
    let mut m = Model::new(Frame::from_indices(n, edges));
    for w in 0..n {
        for v in vars {
            m = m.with(&format!("w{w}"), v, FourValue::ALL[rng.random_range(0..4)]);
        }
    }
    m
}

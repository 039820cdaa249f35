//! Named verification suites: executable forms of the structural identities
//! behind the presentation. Each suite returns a report with a check count
//! and a list of failure descriptions; an empty list is a pass.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::combinatorics::{Partition, Permutation};
use crate::localization::{
    act_on_class, act_on_poly, project_subtorus, restrict_flag_with_limit, restrict_springer,
    subtorus_substitution, verify_vanishing,
};
use crate::polyring::{Poly, Var};
use crate::symfun::{factorial_elementary, factorial_schur, t_alphabet, y_alphabet};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteKind {
    Vanishing,
    Action,
    Diagram,
    Schur,
    All,
}

impl SuiteKind {
    pub fn parse(name: &str) -> Option<SuiteKind> {
        match name {
            "vanishing" => Some(SuiteKind::Vanishing),
            "action" => Some(SuiteKind::Action),
            "diagram" => Some(SuiteKind::Diagram),
            "schur" => Some(SuiteKind::Schur),
            "all" => Some(SuiteKind::All),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "checks": self.checks,
            "failures": self.failures,
            "pass": self.passed(),
        })
    }
}

/// A random polynomial in the given variables: a handful of terms with
/// small exponents and coefficients.
pub fn random_poly(rng: &mut ChaCha8Rng, vars: &[Var]) -> Poly {
    let terms = rng.gen_range(1..=5);
    let mut acc = Poly::zero();
    for _ in 0..terms {
        let mut coeff = rng.gen_range(-9i64..=9);
        if coeff == 0 {
            coeff = 1;
        }
        let mut term = Poly::constant(coeff);
        for &v in vars {
            let e = rng.gen_range(0..=2u32);
            if e > 0 {
                term = &term * &Poly::var(v).pow(e);
            }
        }
        acc = &acc + &term;
    }
    acc
}

fn yu_vars(lambda: &Partition) -> Vec<Var> {
    let mut vars: Vec<Var> = (1..=lambda.n()).map(Var::y).collect();
    vars.extend((1..=lambda.ell()).map(Var::u));
    vars
}

fn yt_vars(n: usize) -> Vec<Var> {
    let mut vars: Vec<Var> = (1..=n).map(Var::y).collect();
    vars.extend((1..=n).map(Var::t));
    vars
}

/// Every deformed generator restricts to zero at every fixed point.
pub fn vanishing_suite(lambda: &Partition) -> Result<SuiteReport> {
    let report = verify_vanishing(lambda)?;
    Ok(SuiteReport {
        name: "vanishing",
        checks: report.generators_checked * report.fixed_points,
        failures: report
            .failures
            .iter()
            .map(|f| format!("tag {} at {}: {}", f.tag, f.fixed_point, f.residue))
            .collect(),
    })
}

/// Action axioms, the variable-relabeling identities, and the
/// restriction/action equivariance on random polynomials.
pub fn action_suite(lambda: &Partition, seed: u64, samples: usize) -> Result<SuiteReport> {
    let n = lambda.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = 0;
    let mut failures = Vec::new();
    let transpositions: Vec<Permutation> = (1..n)
        .map(|i| Permutation::adjacent_transposition(n, i))
        .collect::<Result<_>>()?;

    // identity acts trivially
    let sample = random_poly(&mut rng, &yu_vars(lambda));
    let class = restrict_springer(&sample, lambda)?;
    checks += 1;
    if act_on_class(&Permutation::identity(n), &class)? != class {
        failures.push("identity action changed a class".into());
    }

    // left-action composition law on pairs of adjacent transpositions:
    // the inner action is the right factor of the product
    for v1 in &transpositions {
        for v2 in &transpositions {
            checks += 1;
            let stepwise = act_on_class(v1, &act_on_class(v2, &class)?)?;
            let composed = act_on_class(&v1.compose(v2)?, &class)?;
            if stepwise != composed {
                failures.push(format!("composition law failed for {v1}, {v2}"));
            }
        }
    }

    // relabeling identities: v . (y_i at fixed points) = y_{v(i)} at fixed
    // points, and u_j classes are fixed
    for v in &transpositions {
        for i in 1..=n {
            checks += 1;
            let lhs = act_on_class(v, &restrict_springer(&Poly::var(Var::y(i)), lambda)?)?;
            let rhs = restrict_springer(&Poly::var(Var::y(v.apply(i))), lambda)?;
            if lhs != rhs {
                failures.push(format!("y-relabeling failed for v={v}, i={i}"));
            }
        }
        for j in 1..=lambda.ell() {
            checks += 1;
            let c = restrict_springer(&Poly::var(Var::u(j)), lambda)?;
            if act_on_class(v, &c)? != c {
                failures.push(format!("u-class moved under v={v}, j={j}"));
            }
        }
    }

    // equivariance: restrict(act(v, p)) = act(v, restrict(p))
    let all_perms = Permutation::all(n);
    for k in 0..samples {
        let p = random_poly(&mut rng, &yu_vars(lambda));
        let v = &all_perms[rng.gen_range(0..all_perms.len())];
        checks += 1;
        let lhs = restrict_springer(&act_on_poly(v, &p)?, lambda)?;
        let rhs = act_on_class(v, &restrict_springer(&p, lambda)?)?;
        if lhs != rhs {
            failures.push(format!("equivariance failed on sample {k} with v={v}"));
        }
    }

    Ok(SuiteReport {
        name: "action",
        checks,
        failures,
    })
}

/// Commutativity of restriction and subtorus projection on random samples:
/// projecting the flag restriction agrees with the Springer restriction of
/// the substituted polynomial on the fixed-point keys.
pub fn diagram_suite(lambda: &Partition, seed: u64, samples: usize) -> Result<SuiteReport> {
    let n = lambda.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sub = subtorus_substitution(lambda)?;
    let mut failures = Vec::new();
    for k in 0..samples {
        let p = random_poly(&mut rng, &yt_vars(n));
        let flag = restrict_flag_with_limit(&p, n, n.max(crate::localization::MAX_FLAG_N))?;
        let lhs = project_subtorus(&flag, lambda)?.restrict_to_fixed_points();
        let rhs = restrict_springer(&p.substitute(&sub), lambda)?;
        if lhs != rhs {
            failures.push(format!("diagram failed on sample {k}: p = {p}"));
        }
    }
    Ok(SuiteReport {
        name: "diagram",
        checks: samples,
        failures,
    })
}

/// Column factorial Schur functions agree with the alternating-sum form,
/// symbolically, for all `1 ≤ s ≤ 5`, `0 ≤ k ≤ s`.
pub fn schur_suite() -> SuiteReport {
    let mut checks = 0;
    let mut failures = Vec::new();
    for s in 1..=5usize {
        let alphabet = t_alphabet(s + 1);
        for k in 0..=s {
            checks += 1;
            let shape = Partition::new(vec![1; k]).expect("column shape");
            let tableaux = factorial_schur(&shape, s, &alphabet);
            let alternating = factorial_elementary(k, &y_alphabet(s), &alphabet);
            match (tableaux, alternating) {
                (Ok(a), Ok(b)) if a == b => {}
                (Ok(a), Ok(b)) => {
                    failures.push(format!("s={s} k={k}: {a} != {b}"));
                }
                (a, b) => failures.push(format!("s={s} k={k}: {a:?} vs {b:?}")),
            }
        }
    }
    SuiteReport {
        name: "schur",
        checks,
        failures,
    }
}

/// Runs the requested suite(s). Action and diagram sample counts follow
/// the stated verification sizes.
pub fn run_suites(lambda: &Partition, kind: SuiteKind, seed: u64) -> Result<Vec<SuiteReport>> {
    let mut out = Vec::new();
    match kind {
        SuiteKind::Vanishing => out.push(vanishing_suite(lambda)?),
        SuiteKind::Action => out.push(action_suite(lambda, seed, 100)?),
        SuiteKind::Diagram => out.push(diagram_suite(lambda, seed, 100)?),
        SuiteKind::Schur => out.push(schur_suite()),
        SuiteKind::All => {
            out.push(vanishing_suite(lambda)?);
            out.push(action_suite(lambda, seed, 100)?);
            out.push(diagram_suite(lambda, seed, 100)?);
            out.push(schur_suite());
        }
    }
    Ok(out)
}

//! Restriction of classes to torus fixed points, the subtorus projection,
//! and the symmetric-group action on localized classes.
//!
//! Restrictions are variable substitutions: at a fixed point `w`, a class
//! in `y, u` restricts by `y_i ↦ u_{φ(w(i))}` with `φ` the block map of
//! the partition; a flag class in `y, t` restricts by `y_i ↦ t_{w(i)}`;
//! the subtorus projection substitutes `t_i ↦ u_{φ(i)}` componentwise.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::combinatorics::{Partition, Permutation};
use crate::error::Error;
use crate::polyring::{Family, Poly, Substitution, Var, VarSpace};
use crate::presentation::{equivariant_generators_with_limit, GeneratorKey, GeneratorTag};
use crate::Result;

/// Soft limit for materializing a class over all of `S_n`.
pub const MAX_FLAG_N: usize = 6;

/// An element of the localized module over the Springer fixed points: one
/// polynomial in `u₁..u_ℓ` per fixed point. The key set is always the full
/// fixed-point set of `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointClass {
    pub lambda: Partition,
    pub values: BTreeMap<Permutation, Poly>,
}

impl FixedPointClass {
    pub fn value(&self, w: &Permutation) -> Option<&Poly> {
        self.values.get(w)
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(|p| p.is_zero())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "lambda": self.lambda.parts().to_vec(),
            "values": self
                .values
                .iter()
                .map(|(w, p)| json!({"w": w.to_string(), "value": p.to_string()}))
                .collect::<Vec<_>>(),
        })
    }
}

/// An element of the localized module over all of `S_n`: one polynomial in
/// `t₁..t_n` per permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagClass {
    pub n: usize,
    pub values: BTreeMap<Permutation, Poly>,
}

/// The image of a [`FlagClass`] under the subtorus projection: still keyed
/// by all of `S_n`, with values in `u₁..u_ℓ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectedClass {
    pub lambda: Partition,
    pub values: BTreeMap<Permutation, Poly>,
}

impl ProjectedClass {
    /// Drops every key that is not a Springer fixed point of `λ`.
    pub fn restrict_to_fixed_points(&self) -> FixedPointClass {
        let values = self
            .lambda
            .fixed_points()
            .into_iter()
            .map(|w| {
                let v = self.values.get(&w).cloned().unwrap_or_else(Poly::zero);
                (w, v)
            })
            .collect();
        FixedPointClass {
            lambda: self.lambda.clone(),
            values,
        }
    }
}

/// The substitution `y_i ↦ u_{φ(w(i))}` for the fixed point `w`.
pub fn springer_restriction(lambda: &Partition, w: &Permutation) -> Result<Substitution> {
    let n = lambda.n();
    if w.n() != n {
        return Err(Error::SizeMismatch(format!(
            "fixed point of size {} against partition of {}",
            w.n(),
            n
        )));
    }
    let mut sub = Substitution::new();
    for i in 1..=n {
        let block = lambda.block_of(w.apply(i))?;
        sub = sub.set(Var::y(i), Poly::var(Var::u(block)));
    }
    Ok(sub)
}

/// The substitution `y_i ↦ t_{w(i)}`.
pub fn flag_restriction(w: &Permutation) -> Substitution {
    let mut sub = Substitution::new();
    for i in 1..=w.n() {
        sub = sub.set(Var::y(i), Poly::var(Var::t(w.apply(i))));
    }
    sub
}

/// The subtorus substitution `t_i ↦ u_{φ(i)}`.
pub fn subtorus_substitution(lambda: &Partition) -> Result<Substitution> {
    let mut sub = Substitution::new();
    for i in 1..=lambda.n() {
        sub = sub.set(Var::t(i), Poly::var(Var::u(lambda.block_of(i)?)));
    }
    Ok(sub)
}

fn reject_family(p: &Poly, fam: Family, context: &'static str) -> Result<()> {
    if p.uses_family(fam) {
        return Err(Error::ForbiddenFamily {
            family: fam.letter(),
            context,
        });
    }
    Ok(())
}

/// Restricts a class in `y, u` to every Springer fixed point of `λ`.
pub fn restrict_springer(p: &Poly, lambda: &Partition) -> Result<FixedPointClass> {
    reject_family(p, Family::T, "restriction to Springer fixed points")?;
    VarSpace::new(lambda.n(), lambda.ell()).check(p)?;
    let values = lambda
        .fixed_points()
        .into_iter()
        .map(|w| {
            let sub = springer_restriction(lambda, &w)?;
            Ok((w, p.substitute(&sub)))
        })
        .collect::<Result<_>>()?;
    Ok(FixedPointClass {
        lambda: lambda.clone(),
        values,
    })
}

/// Restricts a class in `y, u` at a single fixed point.
pub fn restrict_springer_at(p: &Poly, lambda: &Partition, w: &Permutation) -> Result<Poly> {
    reject_family(p, Family::T, "restriction to Springer fixed points")?;
    Ok(p.substitute(&springer_restriction(lambda, w)?))
}

/// Restricts a class in `y, t` to all of `S_n`. Materializes `n!`
/// components, so `n` is soft-limited; use [`restrict_flag_at`] beyond.
pub fn restrict_flag(p: &Poly, n: usize) -> Result<FlagClass> {
    restrict_flag_with_limit(p, n, MAX_FLAG_N)
}

pub fn restrict_flag_with_limit(p: &Poly, n: usize, max_n: usize) -> Result<FlagClass> {
    if n > max_n {
        return Err(Error::SoftLimit {
            n,
            limit: max_n,
            op: "flag class materialization",
        });
    }
    reject_family(p, Family::U, "restriction to flag fixed points")?;
    VarSpace::new(n, 0).check(p)?;
    let values = Permutation::all(n)
        .into_iter()
        .map(|w| {
            let v = p.substitute(&flag_restriction(&w));
            (w, v)
        })
        .collect();
    Ok(FlagClass { n, values })
}

/// Single-component flag restriction, usable at any `n`.
pub fn restrict_flag_at(p: &Poly, w: &Permutation) -> Result<Poly> {
    reject_family(p, Family::U, "restriction to flag fixed points")?;
    VarSpace::new(w.n(), 0).check(p)?;
    Ok(p.substitute(&flag_restriction(w)))
}

/// Applies the subtorus projection `t_i ↦ u_{φ(i)}` to every component.
pub fn project_subtorus(class: &FlagClass, lambda: &Partition) -> Result<ProjectedClass> {
    if lambda.n() != class.n {
        return Err(Error::SizeMismatch(format!(
            "flag class of size {} against partition of {}",
            class.n,
            lambda.n()
        )));
    }
    let sub = subtorus_substitution(lambda)?;
    Ok(ProjectedClass {
        lambda: lambda.clone(),
        values: class
            .values
            .iter()
            .map(|(w, p)| (w.clone(), p.substitute(&sub)))
            .collect(),
    })
}

/// The action of `v` on a localized class: the value at `w` is the class's
/// value at the fixed point representing the coset of `w·v`, with
/// composition `(w·v)(i) = w(v(i))`.
pub fn act_on_class(v: &Permutation, class: &FixedPointClass) -> Result<FixedPointClass> {
    let lambda = &class.lambda;
    if v.n() != lambda.n() {
        return Err(Error::SizeMismatch(format!(
            "acting permutation of size {} against partition of {}",
            v.n(),
            lambda.n()
        )));
    }
    let values = class
        .values
        .keys()
        .map(|w| {
            let rep = lambda.coset_representative(&w.compose(v)?)?;
            let value = class
                .values
                .get(&rep)
                .ok_or_else(|| {
                    Error::InvalidArgument(format!("representative {rep} missing from class"))
                })?
                .clone();
            Ok((w.clone(), value))
        })
        .collect::<Result<_>>()?;
    Ok(FixedPointClass {
        lambda: lambda.clone(),
        values,
    })
}

/// The action of `w` on polynomials: `y_i ↦ y_{w(i)}`, `u` and `t` fixed.
/// A ring automorphism.
pub fn act_on_poly(w: &Permutation, p: &Poly) -> Result<Poly> {
    let n = w.n();
    if p.max_index(Family::Y) as usize > n {
        return Err(Error::IndexOutOfRange {
            index: p.max_index(Family::Y) as usize,
            bound: n,
        });
    }
    let mut sub = Substitution::new();
    for i in 1..=n {
        sub = sub.set(Var::y(i), Poly::var(Var::y(w.apply(i))));
    }
    Ok(p.substitute(&sub))
}

/// One failed vanishing check: a generator with a nonzero restriction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingFailure {
    pub tag: GeneratorTag,
    pub fixed_point: Permutation,
    pub residue: Poly,
}

/// Result of restricting every deformed ideal generator to every fixed
/// point. All residues must be the zero polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingReport {
    pub lambda: Partition,
    pub generators_checked: usize,
    pub fixed_points: usize,
    pub failures: Vec<VanishingFailure>,
}

impl VanishingReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "lambda": self.lambda.parts().to_vec(),
            "generators_checked": self.generators_checked,
            "fixed_points": self.fixed_points,
            "failures": self
                .failures
                .iter()
                .map(|f| json!({
                    "tag": {"s": f.tag.s, "indices": f.tag.indices, "d": f.tag.d},
                    "fixed_point": f.fixed_point.to_string(),
                    "residue": f.residue.to_string(),
                }))
                .collect::<Vec<_>>(),
        })
    }
}

/// Checks that every deformed generator restricts to the exact zero
/// polynomial at every fixed point. Failures are report content, not
/// errors.
pub fn verify_vanishing(lambda: &Partition) -> Result<VanishingReport> {
    verify_vanishing_with_limit(lambda, crate::presentation::MAX_ENUMERATION_N)
}

pub fn verify_vanishing_with_limit(lambda: &Partition, max_n: usize) -> Result<VanishingReport> {
    let presentation = equivariant_generators_with_limit(lambda, max_n)?;
    let fixed_points = lambda.fixed_points();
    let substitutions: Vec<(Permutation, Substitution)> = fixed_points
        .iter()
        .map(|w| Ok((w.clone(), springer_restriction(lambda, w)?)))
        .collect::<Result<_>>()?;
    let mut failures = Vec::new();
    for (key, generator) in &presentation.generators {
        let GeneratorKey::Tagged(tag) = key else {
            continue;
        };
        for (w, sub) in &substitutions {
            let residue = generator.substitute(sub);
            if !residue.is_zero() {
                failures.push(VanishingFailure {
                    tag: tag.clone(),
                    fixed_point: w.clone(),
                    residue,
                });
            }
        }
    }
    Ok(VanishingReport {
        lambda: lambda.clone(),
        generators_checked: presentation.generators.len(),
        fixed_points: fixed_points.len(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::{factorial_elementary, u_shift_alphabet, y_alphabet};

    fn lam(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn poly(s: &str) -> Poly {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn restriction_examples() {
        let class = restrict_springer(&poly("y1"), &lam(&[2, 1])).unwrap();
        assert_eq!(class.value(&perm("312")).unwrap(), &poly("u2"));
        assert_eq!(class.value(&perm("123")).unwrap(), &poly("u1"));

        let constant = restrict_springer(&poly("u2"), &lam(&[2, 1])).unwrap();
        assert!(constant.values.values().all(|p| *p == poly("u2")));

        // e_1(y1,y2,y3 | u1,u1,u2) restricts to zero everywhere
        let gen =
            factorial_elementary(1, &y_alphabet(3), &u_shift_alphabet(&lam(&[2, 1]))).unwrap();
        assert_eq!(gen, poly("y1 + y2 + y3 - 2*u1 - u2"));
        assert!(restrict_springer(&gen, &lam(&[2, 1])).unwrap().is_zero());
    }

    #[test]
    fn restriction_rejects_bad_variables() {
        assert!(restrict_springer(&poly("t1"), &lam(&[2, 1])).is_err());
        assert!(restrict_springer(&poly("y4"), &lam(&[2, 1])).is_err());
        assert!(restrict_springer(&poly("u3"), &lam(&[2, 1])).is_err());
        assert!(restrict_flag(&poly("u1"), 2).is_err());
    }

    #[test]
    fn flag_restriction_examples() {
        let class = restrict_flag(&poly("y1"), 2).unwrap();
        assert_eq!(class.values[&perm("12")], poly("t1"));
        assert_eq!(class.values[&perm("21")], poly("t2"));

        for i in 1..=3 {
            let gen = &crate::presentation::flag_generators(3).unwrap().generators[i - 1].1;
            let class = restrict_flag(gen, 3).unwrap();
            assert!(class.values.values().all(Poly::is_zero), "e_{i} difference");
        }
    }

    #[test]
    fn flag_soft_limit() {
        assert!(matches!(
            restrict_flag(&poly("y1"), 7),
            Err(Error::SoftLimit { .. })
        ));
        assert!(restrict_flag_at(&poly("y1"), &Permutation::identity(8)).is_ok());
    }

    #[test]
    fn subtorus_projection_examples() {
        let lambda = lam(&[2, 1]);
        let class = restrict_flag(&poly("y1"), 3).unwrap();
        let projected = project_subtorus(&class, &lambda).unwrap();
        assert_eq!(projected.values[&perm("132")], poly("u1"));

        let constant = restrict_flag(&poly("t3"), 3).unwrap();
        let projected = project_subtorus(&constant, &lambda).unwrap();
        assert!(projected.values.values().all(|p| *p == poly("u2")));
    }

    #[test]
    fn diagram_commutes_on_samples() {
        let lambda = lam(&[2, 1]);
        let sub = subtorus_substitution(&lambda).unwrap();
        for text in ["y1*y2 - t1*y3", "t1*t2 + y3^2", "y1 + t3 - 2"] {
            let p = poly(text);
            let lhs = project_subtorus(&restrict_flag(&p, 3).unwrap(), &lambda)
                .unwrap()
                .restrict_to_fixed_points();
            let rhs = restrict_springer(&p.substitute(&sub), &lambda).unwrap();
            assert_eq!(lhs, rhs, "p = {text}");
        }
    }

    #[test]
    fn action_examples() {
        let lambda = lam(&[2, 1]);
        let class = restrict_springer(&poly("y2"), &lambda).unwrap();
        let identity_acted = act_on_class(&Permutation::identity(3), &class).unwrap();
        assert_eq!(identity_acted, class);

        // acting by v on the restriction of y_i gives the restriction of y_{v(i)}
        for v_text in ["213", "132"] {
            let v = perm(v_text);
            for i in 1..=3 {
                let lhs = act_on_class(&v, &restrict_springer(&Poly::var(Var::y(i)), &lambda).unwrap())
                    .unwrap();
                let rhs = restrict_springer(&Poly::var(Var::y(v.apply(i))), &lambda).unwrap();
                assert_eq!(lhs, rhs, "v={v_text} i={i}");
            }
            // constants are fixed
            for j in 1..=2 {
                let c = restrict_springer(&Poly::var(Var::u(j)), &lambda).unwrap();
                assert_eq!(act_on_class(&v, &c).unwrap(), c);
            }
        }
    }

    #[test]
    fn act_on_poly_examples() {
        let swap = perm("213");
        assert_eq!(act_on_poly(&swap, &poly("y1*y2 + u1")).unwrap(), poly("y1*y2 + u1"));
        assert_eq!(act_on_poly(&swap, &poly("y1 - u1")).unwrap(), poly("y2 - u1"));
        assert!(act_on_poly(&"21".parse().unwrap(), &poly("y3")).is_err());
    }

    #[test]
    fn action_is_equivariant_with_restriction() {
        let lambda = lam(&[2, 1]);
        let v = perm("231");
        for text in ["y1^2 - u1*y3", "y1*y2 + y3", "u2*y1 - 3*y2"] {
            let p = poly(text);
            let lhs = restrict_springer(&act_on_poly(&v, &p).unwrap(), &lambda).unwrap();
            let rhs = act_on_class(&v, &restrict_springer(&p, &lambda).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "p = {text}");
        }
    }

    #[test]
    fn vanishing_reports() {
        for parts in [vec![2], vec![2, 1]] {
            let report = verify_vanishing(&lam(&parts)).unwrap();
            assert!(report.passed());
        }
        let report = verify_vanishing(&lam(&[2, 1])).unwrap();
        assert_eq!(report.generators_checked, 6);
        assert_eq!(report.fixed_points, 3);
        let json = report.to_json();
        assert_eq!(json["failures"].as_array().unwrap().len(), 0);
    }
}

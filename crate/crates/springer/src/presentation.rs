//! Generator lists for the deformed (equivariant) Tanisaki ideal, its
//! classical specialization at `u = 0`, and the flag-variety ideal, with
//! JSON and CAS-text export.
//!
//! For a partition `λ` of `n` with conjugate `λ̌`, the deformed ideal is
//! generated by the factorial elementary polynomials
//! `e_d(y_{i_1},…,y_{i_s} | u_{β(1)},…,u_{β(n)})` over all `1 ≤ s ≤ n`,
//! strictly increasing index tuples, and `s+1−p(s) ≤ d` where
//! `p(s) = λ̌_{n−s+1}+⋯` is the tail sum of the conjugate. The range is
//! clamped to `max(1, s+1−p(s)) ≤ d ≤ s`: `d = 0` would contribute the
//! unit and `d > s` only the zero polynomial.

use std::fmt;

use itertools::Itertools;
use serde_json::{json, Value};

use crate::combinatorics::Partition;
use crate::error::Error;
use crate::polyring::{Poly, Substitution, Var};
use crate::symfun::{elementary, factorial_elementary, t_alphabet, u_shift_alphabet, y_alphabet};
use crate::Result;

/// Soft limit on `n` for full generator enumeration; the generator count
/// grows as `Σ_s C(n,s)` times the per-tuple degree range.
pub const MAX_ENUMERATION_N: usize = 8;

/// Identifies one deformed/classical generator: the tuple size `s`, the
/// strictly increasing index tuple, and the degree `d` of the column shape
/// behind it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorTag {
    pub s: usize,
    pub indices: Vec<usize>,
    pub d: usize,
}

impl fmt::Display for GeneratorTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(s={}, indices=({}), d={})",
            self.s,
            self.indices.iter().map(|i| i.to_string()).join(","),
            self.d
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealKind {
    Equivariant,
    Classical,
    Flag,
}

impl IdealKind {
    pub fn name(self) -> &'static str {
        match self {
            IdealKind::Equivariant => "equivariant",
            IdealKind::Classical => "classical",
            IdealKind::Flag => "flag",
        }
    }
}

/// Key of one generator within a presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorKey {
    Tagged(GeneratorTag),
    /// Degree index of a flag-ideal generator `e_i(y) − e_i(t)`.
    FlagIndex(usize),
}

/// A tagged list of generator polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealPresentation {
    /// `None` for the flag kind, which depends only on `n`.
    pub lambda: Option<Partition>,
    pub n: usize,
    pub kind: IdealKind,
    pub generators: Vec<(GeneratorKey, Poly)>,
}

/// The clamped degree range for tuple size `s`: `max(1, s+1−p(s)) ..= s`
/// where `p` is the tail sum of the conjugate partition.
pub fn degree_range(lambda: &Partition, s: usize) -> Result<std::ops::RangeInclusive<usize>> {
    let n = lambda.n();
    let p = lambda.conjugate().tail_sum(s, n)?;
    let lo = (s + 1).saturating_sub(p).max(1);
    Ok(lo..=s)
}

/// All generator tags for `λ`, ordered by `s`, then tuple lexicographically,
/// then `d`.
pub fn generator_tags(lambda: &Partition) -> Result<Vec<GeneratorTag>> {
    let n = lambda.n();
    let mut tags = Vec::new();
    for s in 1..=n {
        let range = degree_range(lambda, s)?;
        if range.is_empty() {
            continue;
        }
        for indices in (1..=n).combinations(s) {
            for d in range.clone() {
                tags.push(GeneratorTag {
                    s,
                    indices: indices.clone(),
                    d,
                });
            }
        }
    }
    Ok(tags)
}

/// Checks a tag against `λ`'s tuple and degree constraints.
pub fn validate_tag(lambda: &Partition, tag: &GeneratorTag) -> Result<()> {
    let n = lambda.n();
    if tag.s < 1 || tag.s > n || tag.indices.len() != tag.s {
        return Err(Error::InvalidTag(format!(
            "tuple size s={} with {} indices (n={})",
            tag.s,
            tag.indices.len(),
            n
        )));
    }
    let increasing = tag.indices.windows(2).all(|w| w[0] < w[1]);
    if !increasing || tag.indices[0] < 1 || *tag.indices.last().unwrap() > n {
        return Err(Error::InvalidTag(format!(
            "indices {:?} must be strictly increasing within 1..={}",
            tag.indices, n
        )));
    }
    let range = degree_range(lambda, tag.s)?;
    if !range.contains(&tag.d) {
        return Err(Error::InvalidTag(format!(
            "d={} outside the range {:?} for s={}",
            tag.d, range, tag.s
        )));
    }
    Ok(())
}

fn check_enumeration_limit(n: usize, max_n: usize) -> Result<()> {
    if n > max_n {
        return Err(Error::SoftLimit {
            n,
            limit: max_n,
            op: "generator enumeration",
        });
    }
    Ok(())
}

/// The deformed ideal generators for `λ`, in `(s, tuple, d)` order.
pub fn equivariant_generators(lambda: &Partition) -> Result<IdealPresentation> {
    equivariant_generators_with_limit(lambda, MAX_ENUMERATION_N)
}

pub fn equivariant_generators_with_limit(
    lambda: &Partition,
    max_n: usize,
) -> Result<IdealPresentation> {
    check_enumeration_limit(lambda.n(), max_n)?;
    let shifts = u_shift_alphabet(lambda);
    let mut generators = Vec::new();
    for tag in generator_tags(lambda)? {
        let ys: Vec<Poly> = tag.indices.iter().map(|&i| Poly::var(Var::y(i))).collect();
        let poly = factorial_elementary(tag.d, &ys, &shifts)?;
        generators.push((GeneratorKey::Tagged(tag), poly));
    }
    Ok(IdealPresentation {
        lambda: Some(lambda.clone()),
        n: lambda.n(),
        kind: IdealKind::Equivariant,
        generators,
    })
}

/// The classical generators `e_d(y_{i_1},…,y_{i_s})` over the same tags.
pub fn classical_generators(lambda: &Partition) -> Result<IdealPresentation> {
    classical_generators_with_limit(lambda, MAX_ENUMERATION_N)
}

pub fn classical_generators_with_limit(
    lambda: &Partition,
    max_n: usize,
) -> Result<IdealPresentation> {
    check_enumeration_limit(lambda.n(), max_n)?;
    let mut generators = Vec::new();
    for tag in generator_tags(lambda)? {
        let ys: Vec<Poly> = tag.indices.iter().map(|&i| Poly::var(Var::y(i))).collect();
        let poly = elementary(tag.d, &ys);
        generators.push((GeneratorKey::Tagged(tag), poly));
    }
    Ok(IdealPresentation {
        lambda: Some(lambda.clone()),
        n: lambda.n(),
        kind: IdealKind::Classical,
        generators,
    })
}

/// The flag-variety ideal generators `e_i(y_1..y_n) − e_i(t_1..t_n)`,
/// `i = 1..n`.
pub fn flag_generators(n: usize) -> Result<IdealPresentation> {
    if n < 1 {
        return Err(Error::InvalidArgument("flag ideal needs n >= 1".into()));
    }
    let ys = y_alphabet(n);
    let ts = t_alphabet(n);
    let generators = (1..=n)
        .map(|i| {
            (
                GeneratorKey::FlagIndex(i),
                &elementary(i, &ys) - &elementary(i, &ts),
            )
        })
        .collect();
    Ok(IdealPresentation {
        lambda: None,
        n,
        kind: IdealKind::Flag,
        generators,
    })
}

impl IdealPresentation {
    pub fn ell(&self) -> Option<usize> {
        self.lambda.as_ref().map(|l| l.ell())
    }

    /// Sets every `u`-variable to zero in each generator, turning the
    /// equivariant presentation into the classical one tag-by-tag.
    pub fn specialize_u_zero(&self) -> Result<IdealPresentation> {
        if self.kind != IdealKind::Equivariant {
            return Err(Error::WrongKind {
                expected: "equivariant",
                got: self.kind.name(),
            });
        }
        let ell = self.ell().unwrap_or(0);
        let sub = Substitution::u_to_zero(ell);
        Ok(IdealPresentation {
            lambda: self.lambda.clone(),
            n: self.n,
            kind: IdealKind::Classical,
            generators: self
                .generators
                .iter()
                .map(|(k, p)| (k.clone(), p.substitute(&sub)))
                .collect(),
        })
    }

    /// Variable names in the fixed declaration order for this kind.
    pub fn ring_variables(&self) -> Vec<String> {
        let mut vars: Vec<String> = (1..=self.n).map(|i| format!("y{}", i)).collect();
        match self.kind {
            IdealKind::Equivariant => {
                vars.extend((1..=self.ell().unwrap_or(0)).map(|j| format!("u{}", j)));
            }
            IdealKind::Classical => {}
            IdealKind::Flag => {
                vars.extend((1..=self.n).map(|i| format!("t{}", i)));
            }
        }
        vars
    }

    pub fn to_json(&self) -> Value {
        let generators: Vec<Value> = self
            .generators
            .iter()
            .map(|(key, poly)| match key {
                GeneratorKey::Tagged(tag) => json!({
                    "s": tag.s,
                    "indices": tag.indices,
                    "d": tag.d,
                    "poly": poly.to_string(),
                }),
                GeneratorKey::FlagIndex(i) => json!({
                    "index": i,
                    "poly": poly.to_string(),
                }),
            })
            .collect();
        json!({
            "lambda": self.lambda.as_ref().map(|l| l.parts().to_vec()),
            "n": self.n,
            "ell": self.ell(),
            "kind": self.kind.name(),
            "d_range": "max(1, s+1-p(s)) <= d <= s with p the conjugate tail sum",
            "generators": generators,
        })
    }

    /// Re-reads a presentation from its JSON export.
    pub fn from_json(value: &Value) -> Result<IdealPresentation> {
        let bad = |msg: &str| Error::InvalidArgument(format!("presentation json: {msg}"));
        let kind = match value.get("kind").and_then(Value::as_str) {
            Some("equivariant") => IdealKind::Equivariant,
            Some("classical") => IdealKind::Classical,
            Some("flag") => IdealKind::Flag,
            _ => return Err(bad("missing or unknown kind")),
        };
        let n = value
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing n"))? as usize;
        let lambda = match value.get("lambda") {
            Some(Value::Array(parts)) => {
                let parts: Option<Vec<usize>> =
                    parts.iter().map(|v| v.as_u64().map(|x| x as usize)).collect();
                Some(Partition::new(parts.ok_or_else(|| bad("bad lambda"))?)?)
            }
            _ => None,
        };
        let mut generators = Vec::new();
        for g in value
            .get("generators")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing generators"))?
        {
            let poly: Poly = g
                .get("poly")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("generator without poly"))?
                .parse()?;
            let key = if let Some(i) = g.get("index").and_then(Value::as_u64) {
                GeneratorKey::FlagIndex(i as usize)
            } else {
                let s = g.get("s").and_then(Value::as_u64).ok_or_else(|| bad("generator without s"))?;
                let d = g.get("d").and_then(Value::as_u64).ok_or_else(|| bad("generator without d"))?;
                let indices: Option<Vec<usize>> = g
                    .get("indices")
                    .and_then(Value::as_array)
                    .ok_or_else(|| bad("generator without indices"))?
                    .iter()
                    .map(|v| v.as_u64().map(|x| x as usize))
                    .collect();
                GeneratorKey::Tagged(GeneratorTag {
                    s: s as usize,
                    indices: indices.ok_or_else(|| bad("bad indices"))?,
                    d: d as usize,
                })
            };
            generators.push((key, poly));
        }
        Ok(IdealPresentation {
            lambda,
            n,
            kind,
            generators,
        })
    }

    /// Text export: one `ring` header line declaring the variables, then one
    /// generator per line in the polynomial grammar.
    pub fn to_cas_text(&self) -> String {
        let mut out = format!("ring {}\n", self.ring_variables().join(", "));
        for (_, poly) in &self.generators {
            out.push_str(&poly.to_string());
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn lam(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn poly(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn row_two_generator_set() {
        let pres = equivariant_generators(&lam(&[2])).unwrap();
        let got: BTreeSet<String> = pres.generators.iter().map(|(_, p)| p.to_string()).collect();
        let expected: BTreeSet<String> = [
            "y1 - u1",
            "y2 - u1",
            "y1 + y2 - 2*u1",
            "y1*y2 - u1*y1 - u1*y2 + u1^2",
        ]
        .iter()
        .map(|s| poly(s).to_string())
        .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn hook_21_tag_layout() {
        let pres = equivariant_generators(&lam(&[2, 1])).unwrap();
        assert_eq!(pres.generators.len(), 6);
        // no s=1 generators; s=2 only d=2; s=3 has d=1,2,3
        for (key, p) in &pres.generators {
            let GeneratorKey::Tagged(tag) = key else {
                panic!("tagged expected")
            };
            match tag.s {
                2 => assert_eq!(tag.d, 2),
                3 => assert!((1..=3).contains(&tag.d)),
                other => panic!("unexpected s={other}"),
            }
            assert!(!p.is_zero());
        }
        let pairs = pres
            .generators
            .iter()
            .filter(|(k, _)| matches!(k, GeneratorKey::Tagged(t) if t.s == 2))
            .count();
        assert_eq!(pairs, 3);
    }

    #[test]
    fn single_column_only_full_tuple() {
        for n in 1..=5 {
            let pres = equivariant_generators(&lam(&vec![1; n])).unwrap();
            assert_eq!(pres.generators.len(), n);
            for (key, _) in &pres.generators {
                let GeneratorKey::Tagged(tag) = key else {
                    panic!("tagged expected")
                };
                assert_eq!(tag.s, n);
                assert_eq!(tag.indices, (1..=n).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn row_partition_has_all_linear_generators() {
        let pres = classical_generators(&lam(&[4])).unwrap();
        for i in 1..=4 {
            let found = pres.generators.iter().any(|(k, p)| {
                matches!(k, GeneratorKey::Tagged(t) if t.s == 1 && t.indices == vec![i] && t.d == 1)
                    && *p == Poly::var(Var::y(i))
            });
            assert!(found, "y{i} missing");
        }
    }

    #[test]
    fn tag_range_soundness() {
        for n in 1..=6 {
            for lambda in Partition::all_of(n) {
                let conj = lambda.conjugate();
                for tag in generator_tags(&lambda).unwrap() {
                    let p = conj.tail_sum(tag.s, n).unwrap();
                    assert!(tag.d + p >= tag.s + 1);
                    assert!(tag.d >= 1 && tag.d <= tag.s);
                    validate_tag(&lambda, &tag).unwrap();
                }
            }
        }
    }

    #[test]
    fn generators_are_neither_zero_nor_units() {
        for n in 1..=5 {
            for lambda in Partition::all_of(n) {
                for (_, p) in equivariant_generators(&lambda).unwrap().generators {
                    assert!(!p.is_zero());
                    assert!(p.degree().unwrap() >= 1);
                }
            }
        }
    }

    #[test]
    fn specialization_matches_classical() {
        for n in 1..=5 {
            for lambda in Partition::all_of(n) {
                let eq = equivariant_generators(&lambda).unwrap();
                let specialized = eq.specialize_u_zero().unwrap();
                let classical = classical_generators(&lambda).unwrap();
                assert_eq!(specialized, classical, "lambda={lambda}");
            }
        }
    }

    #[test]
    fn specialize_rejects_wrong_kind() {
        let classical = classical_generators(&lam(&[2, 1])).unwrap();
        assert!(matches!(
            classical.specialize_u_zero(),
            Err(Error::WrongKind { .. })
        ));
    }

    #[test]
    fn flag_generator_shapes() {
        assert_eq!(
            flag_generators(1).unwrap().generators,
            vec![(GeneratorKey::FlagIndex(1), poly("y1 - t1"))]
        );
        let two = flag_generators(2).unwrap();
        assert_eq!(two.generators[0].1, poly("y1 + y2 - t1 - t2"));
        assert_eq!(two.generators[1].1, poly("y1*y2 - t1*t2"));
        let three = flag_generators(3).unwrap();
        assert_eq!(three.generators.len(), 3);
        for (i, (_, p)) in three.generators.iter().enumerate() {
            assert_eq!(p.degree().unwrap() as usize, i + 1);
        }
        assert!(flag_generators(0).is_err());
    }

    #[test]
    fn json_roundtrip() {
        for pres in [
            equivariant_generators(&lam(&[2])).unwrap(),
            classical_generators(&lam(&[2, 1])).unwrap(),
            flag_generators(3).unwrap(),
        ] {
            let value = pres.to_json();
            let back = IdealPresentation::from_json(&value).unwrap();
            assert_eq!(back, pres);
        }
    }

    #[test]
    fn empty_generator_list_exports() {
        let empty = IdealPresentation {
            lambda: Some(lam(&[2])),
            n: 2,
            kind: IdealKind::Classical,
            generators: Vec::new(),
        };
        let value = empty.to_json();
        assert_eq!(value["generators"], json!([]));
        assert_eq!(IdealPresentation::from_json(&value).unwrap(), empty);
    }

    #[test]
    fn cas_text_layout() {
        let text = equivariant_generators(&lam(&[2, 1])).unwrap().to_cas_text();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 7);
        assert_eq!(lines[0], "ring y1, y2, y3, u1, u2");
        for line in &lines[1..] {
            let _: Poly = line.parse().expect("generator lines reparse");
        }
    }

    #[test]
    fn enumeration_soft_limit() {
        let lambda = lam(&vec![1; 9]);
        assert!(matches!(
            equivariant_generators(&lambda),
            Err(Error::SoftLimit { .. })
        ));
        assert!(equivariant_generators_with_limit(&lam(&[2, 1]), 3).is_ok());
    }
}

//! Order / exponent / class / abelian-invariant fingerprints.
//!
//! Isomorphism claims are verified at fingerprint level throughout: the
//! fingerprint pins order, exponent, nilpotency class and (for abelian
//! groups) the invariant-factor multiset, which settles every isomorphism
//! statement the corpus checks make.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::Result;
use crate::group::PermGroup;
use crate::limits::Limits;
use crate::subgroup::Subgroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Nilpotency {
    #[serde(rename = "class")]
    Class(u32),
    #[serde(rename = "not_nilpotent")]
    NotNilpotent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub order: u64,
    pub exponent: u64,
    pub nilpotency_class: Nilpotency,
    /// Prime-power invariant factors, descending; `None` for non-abelian.
    pub abelian_invariants: Option<Vec<u64>>,
}

impl Fingerprint {
    pub fn of_group(g: &Arc<PermGroup>, limits: &Limits) -> Result<Fingerprint> {
        let whole = Subgroup::whole_group(g.clone(), limits)?;
        Fingerprint::of_subgroup_via(g, &whole, limits)
    }

    /// Fingerprint of a subgroup, realized standalone for the series walk.
    pub fn of_subgroup(h: &Subgroup, limits: &Limits) -> Result<Fingerprint> {
        let (g, _) = h.as_group()?;
        Fingerprint::of_group(&g, limits)
    }

    fn of_subgroup_via(g: &Arc<PermGroup>, whole: &Subgroup, limits: &Limits) -> Result<Fingerprint> {
        let exponent = whole.exponent(limits)?;
        let series = g.lower_central_series(limits)?;
        let nilpotency_class = match PermGroup::class_of_series(&series) {
            Some(c) => Nilpotency::Class(c),
            None => Nilpotency::NotNilpotent,
        };
        let abelian_invariants = if whole.is_abelian() {
            Some(whole.abelian_invariants(limits)?)
        } else {
            None
        };
        let fp = Fingerprint {
            order: g.order(),
            exponent,
            nilpotency_class,
            abelian_invariants,
        };
        debug_assert!(fp.order % fp.exponent == 0 || fp.order == 1);
        Ok(fp)
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "order {}, exponent {}", self.order, self.exponent)?;
        match &self.nilpotency_class {
            Nilpotency::Class(c) => write!(f, ", class {c}")?,
            Nilpotency::NotNilpotent => write!(f, ", not nilpotent")?,
        }
        if let Some(inv) = &self.abelian_invariants {
            let parts: Vec<String> = inv.iter().map(u64::to_string).collect();
            write!(f, ", abelian {{{}}}", parts.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::todd_coxeter;
    use crate::presentation::parse_group;

    fn realize(text: &str) -> Arc<PermGroup> {
        let g = parse_group(text).unwrap();
        let t = todd_coxeter(&g.presentation, 1 << 20).unwrap();
        Arc::new(PermGroup::from_coset_table(&t, g.presentation.names.clone()).unwrap())
    }

    #[test]
    fn fingerprint_of_q8() {
        let g = realize("gens: a b\nrel: a^4\nrel: a^2 b^-2\nrel: b^-1 a b a");
        let fp = Fingerprint::of_group(&g, &Limits::default()).unwrap();
        assert_eq!(fp.order, 8);
        assert_eq!(fp.exponent, 4);
        assert_eq!(fp.nilpotency_class, Nilpotency::Class(2));
        assert_eq!(fp.abelian_invariants, None);
    }

    #[test]
    fn fingerprint_of_z4_x_z2() {
        let g = realize("gens: a b\nrel: a^4\nrel: b^2\nrel: [a,b]");
        let fp = Fingerprint::of_group(&g, &Limits::default()).unwrap();
        assert_eq!(fp.order, 8);
        assert_eq!(fp.exponent, 4);
        assert_eq!(fp.nilpotency_class, Nilpotency::Class(1));
        assert_eq!(fp.abelian_invariants, Some(vec![4, 2]));
        assert_eq!(fp.to_string(), "order 8, exponent 4, class 1, abelian {4,2}");
    }

    #[test]
    fn fingerprint_of_s3_is_not_nilpotent() {
        let g = realize("gens: a b\nrel: a^3\nrel: b^2\nrel: (a b)^2");
        let fp = Fingerprint::of_group(&g, &Limits::default()).unwrap();
        assert_eq!(fp.nilpotency_class, Nilpotency::NotNilpotent);
        assert_eq!(fp.exponent, 6);
    }
}

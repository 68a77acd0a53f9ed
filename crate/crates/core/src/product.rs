//! Direct products acting on disjoint unions of domains, plus exact orbit
//! counting for subgroups of products given by coordinate tuples.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::limits::Limits;
use crate::perm::Permutation;
use crate::word::Word;

pub struct DirectProduct {
    pub group: PermGroup,
    gen_offsets: Vec<usize>,
    pub factor_orders: Vec<u64>,
}

/// Product of the factors, acting on the disjoint union of their domains.
/// The group order is the product of the factor orders; the action is not
/// regular for two or more non-trivial factors.
pub fn direct_product(factors: &[Arc<PermGroup>]) -> Result<DirectProduct> {
    assert!(!factors.is_empty());
    let domain: usize = factors.iter().map(|f| f.domain_size).sum();
    let order: u64 = factors.iter().map(|f| f.order()).product();
    let mut gens: Vec<Permutation> = Vec::new();
    let mut names: Vec<String> = Vec::new();
    let mut gen_offsets = Vec::with_capacity(factors.len());
    let mut point_offset = 0usize;
    for (fi, f) in factors.iter().enumerate() {
        gen_offsets.push(names.len());
        for gi in 0..f.n_gens {
            let mut images: Vec<u32> = (0..domain as u32).collect();
            let col = f.column(2 * gi);
            for (p, &img) in col.iter().enumerate() {
                images[point_offset + p] = (point_offset + img as usize) as u32;
            }
            gens.push(Permutation::from_images(images)?);
            names.push(format!("f{fi}_{}", f.names[gi]));
        }
        point_offset += f.domain_size;
    }
    let is_regular = factors.len() == 1 && factors[0].is_regular;
    let group = PermGroup::from_permutations(gens, names, 0, is_regular, order)?;
    Ok(DirectProduct {
        group,
        gen_offsets,
        factor_orders: factors.iter().map(|f| f.order()).collect(),
    })
}

impl DirectProduct {
    /// Rewrites a word in the generators of one factor as a word in the
    /// product's generators.
    pub fn embed_word(&self, factor: usize, w: &Word) -> Word {
        w.shift(self.gen_offsets[factor])
    }
}

/// Order of the subgroup of `factor_0 x ... x factor_k` generated by
/// coordinate tuples of words, computed by a breadth-first orbit over
/// point tuples. Each factor must be regular, so a tuple of points is a
/// tuple of group elements.
pub fn tuple_subgroup_order(
    factors: &[Arc<PermGroup>],
    tuple_gens: &[Vec<Word>],
    limits: &Limits,
) -> Result<u64> {
    for f in factors {
        if !f.is_regular {
            return Err(Error::NotRegular);
        }
    }
    for t in tuple_gens {
        assert_eq!(t.len(), factors.len(), "tuple arity must match factor count");
    }
    let start: Vec<u32> = factors.iter().map(|f| f.base_point).collect();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    seen.insert(start.clone());
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(start);
    while let Some(state) = queue.pop_front() {
        for t in tuple_gens {
            let next: Vec<u32> = state
                .iter()
                .zip(factors.iter().zip(t.iter()))
                .map(|(&p, (f, w))| f.walk(p, w))
                .collect();
            if !seen.contains(&next) {
                if seen.len() as u64 >= limits.max_points {
                    return Err(Error::oversize("tuple orbit", limits.max_points));
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(seen.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::todd_coxeter;
    use crate::presentation::parse_group;
    use crate::subgroup::Subgroup;

    fn realize(text: &str) -> Arc<PermGroup> {
        let g = parse_group(text).unwrap();
        let t = todd_coxeter(&g.presentation, 1 << 20).unwrap();
        Arc::new(PermGroup::from_coset_table(&t, g.presentation.names.clone()).unwrap())
    }

    #[test]
    fn product_of_one_factor_is_the_same_group() {
        let z4 = realize("gens: a\nrel: a^4");
        let p = direct_product(&[z4.clone()]).unwrap();
        assert_eq!(p.group.order(), 4);
        assert!(p.group.is_regular);
    }

    #[test]
    fn z2_times_z3_has_order_six() {
        let z2 = realize("gens: a\nrel: a^2");
        let z3 = realize("gens: a\nrel: a^3");
        let p = direct_product(&[z2, z3]).unwrap();
        assert_eq!(p.group.order(), 6);
        assert!(!p.group.is_regular);
        // Orbit of the base point is not the group order here.
        let err = Subgroup::whole_group(Arc::new(p.group), &Limits::default());
        assert!(matches!(err, Err(Error::NotRegular)));
    }

    #[test]
    fn t_subgroup_of_elementary_abelian_cube() {
        // T(G) <= G x G x G generated by (g, g, 1) and (1, g, g); for
        // abelian G it is isomorphic to G x G. Brute-force tuple closure.
        let g = realize("gens: a b c\nrel: a^2\nrel: b^2\nrel: c^2\nrel: [a,b]\nrel: [a,c]\nrel: [b,c]");
        let factors = vec![g.clone(), g.clone(), g.clone()];
        let mut tuple_gens = Vec::new();
        for i in 0..3 {
            let w = Word::generator(i);
            tuple_gens.push(vec![w.clone(), w.clone(), Word::identity()]);
            tuple_gens.push(vec![Word::identity(), w.clone(), w.clone()]);
        }
        let order = tuple_subgroup_order(&factors, &tuple_gens, &Limits::default()).unwrap();
        assert_eq!(order, 64);
    }
}

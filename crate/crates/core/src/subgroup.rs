//! Subgroups of regular permutation groups.
//!
//! A subgroup of a regular group is stored as the orbit of the base point
//! under its generator words, together with Schreier parent pointers. In a
//! regular representation the orbit of the base point *is* the subgroup:
//! order equals orbit size, membership is an orbit lookup, and every
//! element-level operation reduces to table walks.
//!
//! Generator additions go through one incremental orbit engine. Adding an
//! element outside the current subgroup at least doubles it (Lagrange), so
//! closure loops add at most log2 of the final order many generators no
//! matter how many candidate elements they inspect.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::limits::Limits;
use crate::word::Word;

#[derive(Debug, Clone)]
pub struct Subgroup {
    pub ambient: Arc<PermGroup>,
    pub generator_words: Vec<Word>,
    /// Orbit of the base point in discovery order; `orbit[0]` is the base.
    orbit: Vec<u32>,
    /// Per domain point: index into `orbit`, or `u32::MAX`.
    pos: Vec<u32>,
    /// Per orbit entry: (parent point, generator-word index) reaching it.
    /// The base point carries `(base, u32::MAX)`.
    schreier: Vec<(u32, u32)>,
    pub order: u64,
}

const ABSENT: u32 = u32::MAX;

impl Subgroup {
    fn empty(ambient: Arc<PermGroup>) -> Result<Self> {
        if !ambient.is_regular {
            return Err(Error::NotRegular);
        }
        let base = ambient.base_point;
        let mut pos = vec![ABSENT; ambient.domain_size];
        pos[base as usize] = 0;
        Ok(Subgroup {
            ambient,
            generator_words: Vec::new(),
            orbit: vec![base],
            pos,
            schreier: vec![(base, u32::MAX)],
            order: 1,
        })
    }

    /// The subgroup generated by the given words.
    pub fn from_words(ambient: Arc<PermGroup>, words: &[Word], limits: &Limits) -> Result<Self> {
        let mut h = Subgroup::empty(ambient)?;
        for w in words {
            h.push_generator(w.clone(), limits)?;
        }
        h.finish();
        Ok(h)
    }

    /// The whole group as a subgroup of itself.
    pub fn whole_group(ambient: Arc<PermGroup>, limits: &Limits) -> Result<Self> {
        let words = ambient.generator_words();
        Subgroup::from_words(ambient, &words, limits)
    }

    /// The subgroup generated by a set of elements given as domain points.
    /// Candidates already inside the growing subgroup are skipped, so this
    /// is linear in the candidate count plus the final orbit work.
    pub fn from_points(
        ambient: Arc<PermGroup>,
        points: impl IntoIterator<Item = u32>,
        limits: &Limits,
    ) -> Result<Self> {
        let tbl = ambient.element_table()?.clone();
        let mut h = Subgroup::empty(ambient)?;
        for p in points {
            if h.pos[p as usize] == ABSENT {
                h.push_generator(tbl.word_of(p), limits)?;
            }
        }
        h.finish();
        Ok(h)
    }

    /// Adds one generator and re-closes the orbit.
    fn push_generator(&mut self, w: Word, limits: &Limits) -> Result<()> {
        let start = self.orbit.len();
        let gen_index = self.generator_words.len() as u32;
        self.generator_words.push(w);
        let w = self.generator_words.last().unwrap().clone();
        // Seed the frontier with images of the existing orbit under the new
        // generator, then close the new points under every generator.
        for i in 0..start {
            let from = self.orbit[i];
            let to = self.ambient.walk(from, &w);
            self.insert(from, to, gen_index, limits)?;
        }
        let mut next = start;
        while next < self.orbit.len() {
            let from = self.orbit[next];
            for gi in 0..self.generator_words.len() {
                let gw = self.generator_words[gi].clone();
                let to = self.ambient.walk(from, &gw);
                self.insert(from, to, gi as u32, limits)?;
            }
            next += 1;
        }
        Ok(())
    }

    fn insert(&mut self, from: u32, to: u32, gen_index: u32, limits: &Limits) -> Result<()> {
        if self.pos[to as usize] != ABSENT {
            return Ok(());
        }
        if self.orbit.len() as u64 >= limits.max_points {
            return Err(Error::oversize("subgroup orbit", limits.max_points));
        }
        self.pos[to as usize] = self.orbit.len() as u32;
        self.orbit.push(to);
        self.schreier.push((from, gen_index));
        Ok(())
    }

    fn finish(&mut self) {
        self.order = self.orbit.len() as u64;
        // Lagrange, checked on every construction.
        assert!(
            self.ambient.order() % self.order == 0,
            "orbit size {} does not divide ambient order {}",
            self.order,
            self.ambient.order()
        );
    }

    pub fn orbit(&self) -> &[u32] {
        &self.orbit
    }

    pub fn contains_point(&self, p: u32) -> bool {
        self.pos[p as usize] != ABSENT
    }

    pub fn contains_word(&self, w: &Word) -> bool {
        self.contains_point(self.ambient.point_of_word(w))
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// Schreier word for an orbit point, written in the subgroup generators
    /// and expanded to ambient letters.
    pub fn schreier_word(&self, point: u32) -> Option<Word> {
        let mut idx = self.pos[point as usize];
        if idx == ABSENT {
            return None;
        }
        let mut parts: Vec<u32> = Vec::new();
        while self.schreier[idx as usize].1 != u32::MAX {
            let (parent, gi) = self.schreier[idx as usize];
            parts.push(gi);
            idx = self.pos[parent as usize];
        }
        let mut w = Word::identity();
        for &gi in parts.iter().rev() {
            w = w.mul(&self.generator_words[gi as usize]);
        }
        Some(w)
    }

    pub fn same_ambient(&self, other: &Subgroup) -> bool {
        Arc::ptr_eq(&self.ambient, &other.ambient)
    }

    /// Set containment `self <= other` (both subgroups of one ambient).
    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        debug_assert!(self.same_ambient(other));
        self.order <= other.order && self.orbit.iter().all(|&p| other.contains_point(p))
    }

    pub fn same_subgroup(&self, other: &Subgroup) -> bool {
        self.order == other.order && self.is_subgroup_of(other)
    }

    /// True when conjugation by every ambient generator preserves the
    /// subgroup. Checking generators suffices: conjugation by a fixed
    /// element maps the finite subgroup into itself only if onto it.
    pub fn is_normal(&self) -> bool {
        let amb = self.ambient.generator_words();
        for g in &amb {
            for h in &self.generator_words {
                if !self.contains_point(self.ambient.point_of_word(&h.conjugate(g))) {
                    return false;
                }
            }
        }
        true
    }

    /// Point-set intersection; a subgroup again, with regenerated Schreier
    /// data, because a subgroup of a regular group is its base-point orbit.
    pub fn intersection(&self, other: &Subgroup, limits: &Limits) -> Result<Subgroup> {
        assert!(self.same_ambient(other), "intersection needs a shared ambient group");
        let (small, large) = if self.order <= other.order {
            (self, other)
        } else {
            (other, self)
        };
        let points: Vec<u32> = small
            .orbit
            .iter()
            .copied()
            .filter(|&p| large.contains_point(p))
            .collect();
        Subgroup::from_points(self.ambient.clone(), points, limits)
    }

    /// Element orders over the whole subgroup, aligned with `orbit` order.
    fn element_orders(&self, limits: &Limits) -> Result<Vec<u64>> {
        if self.order > limits.max_points {
            return Err(Error::oversize("element enumeration", limits.max_points));
        }
        if self.order == self.ambient.order() {
            if let Some(p) = smallest_prime_factor(self.order) {
                if PermGroup::p_group_exponent_of(self.order, p).is_some() {
                    let by_point = self.ambient.p_group_order_vector(p)?;
                    return Ok(self.orbit.iter().map(|&x| by_point[x as usize]).collect());
                }
            }
        }
        self.orbit
            .iter()
            .map(|&p| self.ambient.order_of_point(p))
            .collect()
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self, limits: &Limits) -> Result<u64> {
        let mut e = 1u64;
        for o in self.element_orders(limits)? {
            e = lcm(e, o);
        }
        Ok(e)
    }

    /// The subgroup generated by the m-th powers of *all* elements,
    /// enumerated through the orbit. Generator powers do not suffice.
    pub fn power_subgroup(&self, m: u64, limits: &Limits) -> Result<Subgroup> {
        if self.order > limits.max_points {
            return Err(Error::oversize("power subgroup enumeration", limits.max_points));
        }
        let tbl = self.ambient.element_table()?;
        let mut letters = Vec::new();
        let mut points = Vec::with_capacity(self.orbit.len());
        for &x in &self.orbit {
            tbl.word_letters_of(x, &mut letters);
            let mut q = self.ambient.base_point;
            for _ in 0..m {
                q = self.ambient.walk_letters(q, &letters);
            }
            points.push(q);
        }
        Subgroup::from_points(self.ambient.clone(), points, limits)
    }

    /// The subgroup generated by the elements of order dividing p^n.
    pub fn omega_subgroup(&self, p: u64, n: u32, limits: &Limits) -> Result<Subgroup> {
        Ok(self.omega_with_set(p, n, limits)?.0)
    }

    /// Omega subgroup plus the size of the underlying element set and
    /// whether the set already forms the subgroup.
    pub fn omega_with_set(&self, p: u64, n: u32, limits: &Limits) -> Result<(Subgroup, u64, bool)> {
        if PermGroup::p_group_exponent_of(self.order, p).is_none() {
            return Err(Error::NotPGroup { order: self.order, p });
        }
        let bound = p.pow(n);
        let orders = self.element_orders(limits)?;
        let points: Vec<u32> = self
            .orbit
            .iter()
            .zip(&orders)
            .filter(|(_, &o)| bound % o == 0)
            .map(|(&x, _)| x)
            .collect();
        let set_size = points.len() as u64;
        let sub = Subgroup::from_points(self.ambient.clone(), points, limits)?;
        let equals = sub.order == set_size;
        Ok((sub, set_size, equals))
    }

    /// All generator pairs commute. Returns a witness pair on failure.
    pub fn check_abelian(&self) -> std::result::Result<(), (Word, Word)> {
        for (i, a) in self.generator_words.iter().enumerate() {
            for b in &self.generator_words[i + 1..] {
                let c = Word::commutator(a, b);
                if self.ambient.point_of_word(&c) != self.ambient.base_point {
                    return Err((a.clone(), b.clone()));
                }
            }
        }
        Ok(())
    }

    pub fn is_abelian(&self) -> bool {
        self.check_abelian().is_ok()
    }

    /// Invariant factors of an abelian subgroup as a multiset of prime
    /// powers, sorted descending. Computed from element-order statistics:
    /// for each prime q, the count of elements whose q-part of order divides
    /// q^n determines how many invariants have exponent at least n.
    pub fn abelian_invariants(&self, limits: &Limits) -> Result<Vec<u64>> {
        if let Err((a, b)) = self.check_abelian() {
            let names = &self.ambient.names;
            return Err(Error::NotAbelian {
                witness: format!("[{}, {}]", a.display(names), b.display(names)),
            });
        }
        let orders = self.element_orders(limits)?;
        let mut out: Vec<u64> = Vec::new();
        let mut primes: Vec<u64> = Vec::new();
        let mut rest = self.order;
        let mut q = 2;
        while q * q <= rest {
            if rest % q == 0 {
                primes.push(q);
                while rest % q == 0 {
                    rest /= q;
                }
            }
            q += 1;
        }
        if rest > 1 {
            primes.push(rest);
        }
        for &q in &primes {
            // counts[n] = elements whose order has q-valuation <= n
            let mut counts: Vec<u64> = Vec::new();
            for &o in &orders {
                let mut v = 0usize;
                let mut o = o;
                while o % q == 0 {
                    v += 1;
                    o /= q;
                }
                if counts.len() < v + 1 {
                    counts.resize(v + 1, 0);
                }
                counts[v] += 1;
            }
            let mut cumulative: Vec<u64> = Vec::with_capacity(counts.len());
            let mut acc = 0;
            for c in &counts {
                acc += c;
                cumulative.push(acc);
            }
            // ranks[n] = number of invariants with exponent >= n+1
            let mut ranks: Vec<u32> = Vec::new();
            for n in 1..cumulative.len() {
                let ratio = cumulative[n] / cumulative[n - 1];
                debug_assert_eq!(cumulative[n] % cumulative[n - 1], 0);
                ranks.push(ratio.ilog(q));
            }
            for n in 0..ranks.len() {
                let here = ranks[n];
                let next = ranks.get(n + 1).copied().unwrap_or(0);
                for _ in 0..(here - next) {
                    out.push(q.pow(n as u32 + 1));
                }
            }
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        debug_assert_eq!(out.iter().product::<u64>(), self.order);
        Ok(out)
    }

    /// Realizes the subgroup as a standalone regular group on its own
    /// orbit. Returns the group and the orbit points in the new numbering.
    pub fn as_group(&self) -> Result<(Arc<PermGroup>, Vec<u32>)> {
        let n = self.orbit.len();
        let mut gens = Vec::with_capacity(self.generator_words.len());
        for w in &self.generator_words {
            let mut images = vec![0u32; n];
            for (i, &p) in self.orbit.iter().enumerate() {
                let q = self.ambient.walk(p, w);
                images[i] = self.pos[q as usize];
                debug_assert!(images[i] != ABSENT);
            }
            gens.push(crate::perm::Permutation::from_images(images)?);
        }
        let names: Vec<String> = (0..gens.len()).map(|i| format!("s{i}")).collect();
        let g = PermGroup::from_permutations(gens, names, 0, true, n as u64)?;
        Ok((Arc::new(g), self.orbit.clone()))
    }

    /// Maps a subgroup `inner <= self` into the standalone realization of
    /// `self` produced by `as_group`, as a point set.
    pub fn project_points(&self, inner: &Subgroup) -> Vec<u32> {
        inner
            .orbit
            .iter()
            .map(|&p| {
                let ix = self.pos[p as usize];
                assert!(ix != ABSENT, "inner subgroup must be contained in outer");
                ix
            })
            .collect()
    }
}

fn smallest_prime_factor(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            return Some(q);
        }
        q += 1;
    }
    Some(n)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl PermGroup {
    /// The smallest subgroup containing the seeds that is closed under
    /// conjugation by the ambient generators.
    pub fn normal_closure(
        self: &Arc<Self>,
        seeds: &[Word],
        limits: &Limits,
    ) -> Result<Subgroup> {
        let mut h = Subgroup::from_words(self.clone(), seeds, limits)?;
        close_under_conjugation(&mut h, &self.generator_words(), limits)?;
        h.finish();
        Ok(h)
    }

    /// The literal commutator subgroup `[A, B]`: generated by the
    /// commutators of the generators, closed under conjugation by `<A, B>`.
    /// At least one argument must be normal in the ambient group; the
    /// paper's brackets all satisfy that, and it keeps the result matching
    /// the group-theoretic `[A, B]` whenever it is used.
    pub fn commutator_subgroup(
        self: &Arc<Self>,
        a: &Subgroup,
        b: &Subgroup,
        limits: &Limits,
    ) -> Result<Subgroup> {
        if !a.is_normal() && !b.is_normal() {
            return Err(Error::NotNormal {
                context: "commutator subgroup needs a normal argument".into(),
            });
        }
        self.commutator_span(&a.generator_words, &b.generator_words, limits)
    }

    /// `[A, B]` from explicit generator word lists, without the normality
    /// guard. Used internally where the closing group `<A, B>` is what the
    /// bracket means.
    pub fn commutator_span(
        self: &Arc<Self>,
        a_gens: &[Word],
        b_gens: &[Word],
        limits: &Limits,
    ) -> Result<Subgroup> {
        let mut h = Subgroup::empty(self.clone())?;
        for x in a_gens {
            for y in b_gens {
                let c = Word::commutator(x, y);
                if !h.contains_point(self.point_of_word(&c)) {
                    h.push_generator(c, limits)?;
                }
            }
        }
        let closers: Vec<Word> = a_gens.iter().chain(b_gens.iter()).cloned().collect();
        close_under_conjugation(&mut h, &closers, limits)?;
        h.finish();
        Ok(h)
    }

    /// Iterated commutator `[N, G, G, ..., G]` with `k` copies of the whole
    /// ambient group; `k = 0` returns `N` itself.
    pub fn iterated_commutator(
        self: &Arc<Self>,
        n: &Subgroup,
        k: u32,
        limits: &Limits,
    ) -> Result<Subgroup> {
        let ambient_gens = self.generator_words();
        let mut current = n.clone();
        for _ in 0..k {
            current = self.commutator_span(&current.generator_words, &ambient_gens, limits)?;
            if current.is_trivial() {
                break;
            }
        }
        Ok(current)
    }

    /// Lower central series `[G, [G,G], ...]`, computed until it stabilizes.
    pub fn lower_central_series(self: &Arc<Self>, limits: &Limits) -> Result<Vec<Subgroup>> {
        let ambient_gens = self.generator_words();
        let mut series = vec![Subgroup::whole_group(self.clone(), limits)?];
        loop {
            let last = series.last().unwrap();
            let next = self.commutator_span(&last.generator_words, &ambient_gens, limits)?;
            if next.order == last.order {
                break;
            }
            let done = next.is_trivial();
            series.push(next);
            if done {
                break;
            }
        }
        Ok(series)
    }

    /// Nilpotency class from a computed lower central series, when the
    /// series reaches the trivial group.
    pub fn class_of_series(series: &[Subgroup]) -> Option<u32> {
        let last = series.last()?;
        if last.is_trivial() {
            Some(series.len() as u32 - 1)
        } else {
            None
        }
    }

    /// The regular representation of `self / K` for a normal subgroup `K`:
    /// domain points are the K-cosets, generators act on the blocks.
    pub fn quotient(self: &Arc<Self>, k: &Subgroup) -> Result<Arc<PermGroup>> {
        if !self.is_regular {
            return Err(Error::NotRegular);
        }
        if !k.is_normal() {
            return Err(Error::NotNormal {
                context: "quotient by a non-normal subgroup".into(),
            });
        }
        let n = self.domain_size;
        let tbl = self.element_table()?;
        let mut label = vec![ABSENT; n];
        let mut reps: Vec<u32> = Vec::new();
        let mut letters = Vec::new();
        for x in 0..n as u32 {
            if label[x as usize] != ABSENT {
                continue;
            }
            let block = reps.len() as u32;
            reps.push(x);
            tbl.word_letters_of(x, &mut letters);
            // The coset of x is the K-orbit translated by the word of x.
            for &kp in k.orbit() {
                let y = self.walk_letters(kp, &letters);
                debug_assert!(label[y as usize] == ABSENT || label[y as usize] == block);
                label[y as usize] = block;
            }
        }
        let blocks = reps.len();
        debug_assert_eq!(blocks as u64 * k.order, self.order());
        let mut gens = Vec::with_capacity(self.n_gens);
        for g in 0..self.n_gens {
            let col = self.column(2 * g);
            let images: Vec<u32> = reps.iter().map(|&r| label[col[r as usize] as usize]).collect();
            gens.push(crate::perm::Permutation::from_images(images)?);
        }
        let g = PermGroup::from_permutations(gens, self.names.clone(), 0, true, blocks as u64)?;
        Ok(Arc::new(g))
    }
}

/// Extends `h` until it is closed under conjugation by each closer word.
/// Single pass over the growing generator list: conjugates landing inside
/// the current orbit stay inside it (orbits only grow), and every appended
/// generator is itself processed in turn.
fn close_under_conjugation(h: &mut Subgroup, closers: &[Word], limits: &Limits) -> Result<()> {
    let ambient = h.ambient.clone();
    let mut gi = 0;
    while gi < h.generator_words.len() {
        for c in closers {
            let conj = h.generator_words[gi].conjugate(c);
            if !h.contains_point(ambient.point_of_word(&conj)) {
                h.push_generator(conj, limits)?;
            }
        }
        gi += 1;
    }
    Ok(())
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

    fn limits() -> Limits {
        Limits::default()
    }

    fn s3() -> Arc<PermGroup> {
        realize("gens: a b\nrel: a^3\nrel: b^2\nrel: (a b)^2")
    }

    fn d4() -> Arc<PermGroup> {
        realize("gens: a b\nrel: a^4\nrel: b^2\nrel: (a b)^2")
    }

    fn q8() -> Arc<PermGroup> {
        realize("gens: a b\nrel: a^4\nrel: a^2 b^-2\nrel: b^-1 a b a")
    }

    #[test]
    fn empty_generating_set_gives_trivial_subgroup() {
        let g = s3();
        let h = Subgroup::from_words(g, &[], &limits()).unwrap();
        assert_eq!(h.order, 1);
    }

    #[test]
    fn commutator_word_generates_a3_in_s3() {
        let g = s3();
        let c = Word::commutator(&Word::generator(0), &Word::generator(1));
        let h = Subgroup::from_words(g, &[c], &limits()).unwrap();
        // Brute-force closure over the 6-element multiplication table gives
        // the alternating subgroup of order 3.
        assert_eq!(h.order, 3);
    }

    #[test]
    fn cyclic_square_in_z4() {
        let g = realize("gens: a\nrel: a^4");
        let h = Subgroup::from_words(g, &[Word::generator(0).pow(2)], &limits()).unwrap();
        assert_eq!(h.order, 2);
    }

    #[test]
    fn normal_closure_of_transposition_is_whole_s3() {
        let g = s3();
        let h = g.normal_closure(&[Word::generator(1)], &limits()).unwrap();
        assert_eq!(h.order, 6);
    }

    #[test]
    fn normal_closure_of_center_is_itself() {
        let g = q8();
        let center = Word::generator(0).pow(2);
        let h = g.normal_closure(&[center.clone()], &limits()).unwrap();
        let plain = Subgroup::from_words(g, &[center], &limits()).unwrap();
        assert!(h.same_subgroup(&plain));
        assert_eq!(h.order, 2);
    }

    #[test]
    fn normal_closure_of_nothing_is_trivial() {
        let g = s3();
        assert_eq!(g.normal_closure(&[], &limits()).unwrap().order, 1);
    }

    #[test]
    fn derived_subgroup_of_d4_has_order_two() {
        let g = d4();
        let whole = Subgroup::whole_group(g.clone(), &limits()).unwrap();
        let derived = g.commutator_subgroup(&whole, &whole, &limits()).unwrap();
        // Brute force over all 64 element pairs gives the order-2 center.
        assert_eq!(derived.order, 2);
        assert!(derived.is_normal());
    }

    #[test]
    fn commutator_with_trivial_is_trivial() {
        let g = d4();
        let whole = Subgroup::whole_group(g.clone(), &limits()).unwrap();
        let trivial = Subgroup::from_words(g.clone(), &[], &limits()).unwrap();
        assert_eq!(g.commutator_subgroup(&whole, &trivial, &limits()).unwrap().order, 1);
    }

    #[test]
    fn abelian_commutator_vanishes() {
        let g = realize("gens: a b\nrel: a^2\nrel: b^2\nrel: [a,b]");
        let whole = Subgroup::whole_group(g.clone(), &limits()).unwrap();
        assert_eq!(g.commutator_subgroup(&whole, &whole, &limits()).unwrap().order, 1);
    }

    #[test]
    fn iterated_commutator_base_and_derived() {
        let g = d4();
        let whole = Subgroup::whole_group(g.clone(), &limits()).unwrap();
        assert_eq!(g.iterated_commutator(&whole, 0, &limits()).unwrap().order, 8);
        assert_eq!(g.iterated_commutator(&whole, 1, &limits()).unwrap().order, 2);
        // D4 has class 2, so two iterations reach the trivial group.
        assert_eq!(g.iterated_commutator(&whole, 2, &limits()).unwrap().order, 1);
    }

    #[test]
    fn lower_central_series_of_d4_and_s3() {
        let d = d4();
        let series = d.lower_central_series(&limits()).unwrap();
        let orders: Vec<u64> = series.iter().map(|s| s.order).collect();
        assert_eq!(orders, vec![8, 2, 1]);
        assert_eq!(PermGroup::class_of_series(&series), Some(2));
        for w in series.windows(2) {
            assert!(w[1].is_subgroup_of(&w[0]));
            assert!(w[1].is_normal());
        }

        let s = s3();
        let series = s.lower_central_series(&limits()).unwrap();
        let orders: Vec<u64> = series.iter().map(|s| s.order).collect();
        // Stabilizes at the alternating subgroup: S3 is not nilpotent.
        assert_eq!(orders, vec![6, 3]);
        assert_eq!(PermGroup::class_of_series(&series), None);
    }

    #[test]
    fn power_subgroup_uses_all_elements() {
        let q = q8();
        let whole = Subgroup::whole_group(q.clone(), &limits()).unwrap();
        let squares = whole.power_subgroup(2, &limits()).unwrap();
        // Squares of all 8 elements generate the order-2 center.
        assert_eq!(squares.order, 2);

        let g = realize("gens: a b\nrel: a^4\nrel: b^2\nrel: [a,b]");
        let whole = Subgroup::whole_group(g, &limits()).unwrap();
        assert_eq!(whole.power_subgroup(2, &limits()).unwrap().order, 2);
    }

    #[test]
    fn elementary_abelian_power_is_trivial() {
        let g = realize("gens: a b c\nrel: a^2\nrel: b^2\nrel: c^2\nrel: [a,b]\nrel: [a,c]\nrel: [b,c]");
        let whole = Subgroup::whole_group(g, &limits()).unwrap();
        assert_eq!(whole.order, 8);
        assert_eq!(whole.power_subgroup(2, &limits()).unwrap().order, 1);
    }

    #[test]
    fn omega_subgroups() {
        let g = realize("gens: a b\nrel: a^4\nrel: b^2\nrel: [a,b]");
        let whole = Subgroup::whole_group(g, &limits()).unwrap();
        assert_eq!(whole.omega_subgroup(2, 0, &limits()).unwrap().order, 1);
        // Z4 x Z2: elements of order <= 2 form the order-4 subgroup.
        let (om1, set, eq) = whole.omega_with_set(2, 1, &limits()).unwrap();
        assert_eq!(om1.order, 4);
        assert_eq!(set, 4);
        assert!(eq);

        let q = q8();
        let whole = Subgroup::whole_group(q, &limits()).unwrap();
        // Only the identity and -1 have order at most 2 in Q8.
        assert_eq!(whole.omega_subgroup(2, 1, &limits()).unwrap().order, 2);
    }

    #[test]
    fn exponent_of_small_groups() {
        let l = limits();
        let q = q8();
        assert_eq!(Subgroup::whole_group(q, &l).unwrap().exponent(&l).unwrap(), 4);
        let g = realize("gens: a b c\nrel: a^2\nrel: b^2\nrel: c^2\nrel: [a,b]\nrel: [a,c]\nrel: [b,c]");
        assert_eq!(Subgroup::whole_group(g, &l).unwrap().exponent(&l).unwrap(), 2);
        let g = realize("gens: a b\nrel: a^4\nrel: b^2\nrel: [a,b]");
        assert_eq!(Subgroup::whole_group(g, &l).unwrap().exponent(&l).unwrap(), 4);
    }

    #[test]
    fn abelian_invariants_of_z4_z2_and_z2_cubed() {
        let l = limits();
        let g = realize("gens: a b\nrel: a^4\nrel: b^2\nrel: [a,b]");
        let whole = Subgroup::whole_group(g, &l).unwrap();
        assert_eq!(whole.abelian_invariants(&l).unwrap(), vec![4, 2]);

        let g = realize("gens: a b c\nrel: a^2\nrel: b^2\nrel: c^2\nrel: [a,b]\nrel: [a,c]\nrel: [b,c]");
        let whole = Subgroup::whole_group(g, &l).unwrap();
        assert_eq!(whole.abelian_invariants(&l).unwrap(), vec![2, 2, 2]);
    }

    #[test]
    fn abelian_invariants_of_mixed_order_group() {
        let l = limits();
        let g = realize("gens: a\nrel: a^6");
        let whole = Subgroup::whole_group(g, &l).unwrap();
        assert_eq!(whole.abelian_invariants(&l).unwrap(), vec![3, 2]);
    }

    #[test]
    fn abelian_invariants_reject_nonabelian() {
        let l = limits();
        let whole = Subgroup::whole_group(q8(), &l).unwrap();
        assert!(matches!(
            whole.abelian_invariants(&l),
            Err(Error::NotAbelian { .. })
        ));
    }

    #[test]
    fn intersection_is_idempotent_and_handles_trivial() {
        let l = limits();
        let g = d4();
        let whole = Subgroup::whole_group(g.clone(), &l).unwrap();
        let rot = Subgroup::from_words(g.clone(), &[Word::generator(0)], &l).unwrap();
        assert!(rot.intersection(&rot, &l).unwrap().same_subgroup(&rot));
        let trivial = Subgroup::from_words(g, &[], &l).unwrap();
        assert_eq!(rot.intersection(&trivial, &l).unwrap().order, 1);
        assert!(rot.intersection(&whole, &l).unwrap().same_subgroup(&rot));
    }

    #[test]
    fn quotient_orders_multiply() {
        let l = limits();
        let g = d4();
        let whole = Subgroup::whole_group(g.clone(), &l).unwrap();
        let derived = g.commutator_subgroup(&whole, &whole, &l).unwrap();
        let q = g.quotient(&derived).unwrap();
        assert_eq!(q.order() * derived.order, g.order());
        assert_eq!(q.order(), 4);

        let trivial = Subgroup::from_words(g.clone(), &[], &l).unwrap();
        assert_eq!(g.quotient(&trivial).unwrap().order(), 8);
        assert_eq!(g.quotient(&whole).unwrap().order(), 1);
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let l = limits();
        let g = s3();
        let b = Subgroup::from_words(g.clone(), &[Word::generator(1)], &l).unwrap();
        assert_eq!(b.order, 2);
        assert!(matches!(g.quotient(&b), Err(Error::NotNormal { .. })));
    }

    #[test]
    fn as_group_matches_subgroup_structure() {
        let l = limits();
        let g = q8();
        let whole = Subgroup::whole_group(g.clone(), &l).unwrap();
        let center = whole.power_subgroup(2, &l).unwrap();
        let (cg, points) = center.as_group().unwrap();
        assert_eq!(cg.order(), 2);
        assert_eq!(points.len(), 2);
    }

    #[test]
    fn membership_agrees_with_brute_force_on_small_groups() {
        // Regularity invariant: orbit membership equals brute-force
        // membership by element equality, here on groups of order <= 64.
        let l = limits();
        for text in [
            "gens: a b\nrel: a^3\nrel: b^2\nrel: (a b)^2",
            "gens: a b\nrel: a^4\nrel: a^2 b^-2\nrel: b^-1 a b a",
            "gens: a b\nrel: a^8\nrel: b^2\nrel: (a b)^2",
        ] {
            let g = realize(text);
            let h = Subgroup::from_words(
                g.clone(),
                &[Word::generator(0).pow(2), Word::commutator(&Word::generator(0), &Word::generator(1))],
                &l,
            )
            .unwrap();
            // Brute force: the element set of h via permutation closure.
            let gen_perms: Vec<_> = h.generator_words.iter().map(|w| g.permutation_of_word(w)).collect();
            let mut elems = vec![crate::perm::Permutation::identity(g.domain_size)];
            loop {
                let mut added = false;
                let snapshot = elems.clone();
                for e in &snapshot {
                    for p in &gen_perms {
                        let f = e.compose(p);
                        if !elems.contains(&f) {
                            elems.push(f);
                            added = true;
                        }
                    }
                }
                if !added {
                    break;
                }
            }
            assert_eq!(elems.len() as u64, h.order);
            for x in 0..g.domain_size as u32 {
                let w = g.word_of_point(x).unwrap();
                let in_brute = elems.contains(&g.permutation_of_word(&w));
                assert_eq!(h.contains_point(x), in_brute);
            }
        }
    }

    #[test]
    fn schreier_words_evaluate_to_their_points() {
        let l = limits();
        let g = d4();
        let h = Subgroup::from_words(g.clone(), &[Word::generator(0), Word::generator(1)], &l).unwrap();
        for &p in h.orbit() {
            let w = h.schreier_word(p).unwrap();
            assert_eq!(g.point_of_word(&w), p);
        }
    }
}

//! Executable predicates and lemma checkers for the powerful/potent
//! structure theory of finite p-groups.
//!
//! Every checker returns a `CheckReport` carrying the hypothesis and
//! conclusion separately: a failed hypothesis makes the check vacuous, never
//! a pass, so theorem coverage accounting stays honest.

use std::sync::Arc;

use serde::Serialize;

use crate::constructions::NuResult;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::limits::Limits;
use crate::subgroup::Subgroup;
use crate::word::Word;

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub check_id: String,
    pub hypothesis_held: bool,
    pub conclusion_held: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckReport {
    pub fn new(id: impl Into<String>, hypothesis: bool, conclusion: bool) -> Self {
        CheckReport {
            check_id: id.into(),
            hypothesis_held: hypothesis,
            conclusion_held: conclusion,
            witness: None,
        }
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> Self {
        self.witness = Some(witness.into());
        self
    }

    pub fn is_vacuous(&self) -> bool {
        !self.hypothesis_held
    }

    pub fn passed(&self) -> bool {
        self.hypothesis_held && self.conclusion_held
    }

    /// Failed means the hypothesis held and the conclusion did not.
    pub fn failed(&self) -> bool {
        self.hypothesis_held && !self.conclusion_held
    }
}

/// Caches the handful of subgroups the predicates keep asking for.
pub struct PGroupView {
    pub group: Arc<PermGroup>,
    pub p: u64,
    pub whole: Subgroup,
    pub series: Vec<Subgroup>,
}

impl PGroupView {
    pub fn new(group: Arc<PermGroup>, p: u64, limits: &Limits) -> Result<Self> {
        if PermGroup::p_group_exponent_of(group.order(), p).is_none() {
            return Err(Error::NotPGroup {
                order: group.order(),
                p,
            });
        }
        let whole = Subgroup::whole_group(group.clone(), limits)?;
        let series = group.lower_central_series(limits)?;
        Ok(PGroupView {
            group,
            p,
            whole,
            series,
        })
    }

    /// `gamma_k` for `k >= 1`; terms past the computed series are its last
    /// entry (the series has stabilized there).
    pub fn gamma(&self, k: u32) -> &Subgroup {
        let idx = (k as usize - 1).min(self.series.len() - 1);
        &self.series[idx]
    }

    pub fn derived(&self) -> &Subgroup {
        self.gamma(2)
    }

    pub fn nilpotency_class(&self) -> Option<u32> {
        PermGroup::class_of_series(&self.series)
    }

    pub fn exponent(&self, limits: &Limits) -> Result<u64> {
        self.whole.exponent(limits)
    }
}

/// G is powerful: G' <= G^p for odd p, G' <= G^4 for p = 2.
pub fn is_powerful(view: &PGroupView, limits: &Limits) -> Result<bool> {
    let m = if view.p == 2 { 4 } else { view.p };
    let powers = view.whole.power_subgroup(m, limits)?;
    Ok(view.derived().is_subgroup_of(&powers))
}

/// G is potent: gamma_{p-1}(G) <= G^p for odd p, G' <= G^4 for p = 2.
pub fn is_potent(view: &PGroupView, limits: &Limits) -> Result<bool> {
    if view.p == 2 {
        return is_powerful(view, limits);
    }
    let powers = view.whole.power_subgroup(view.p, limits)?;
    Ok(view.gamma(view.p as u32 - 1).is_subgroup_of(&powers))
}

/// N is powerfully embedded in G: [N, G] <= N^p (odd p) or [N, G] <= N^4.
pub fn is_powerfully_embedded(
    n: &Subgroup,
    g: &Arc<PermGroup>,
    p: u64,
    limits: &Limits,
) -> Result<bool> {
    require_normal(n, "powerfully embedded test")?;
    let bracket = g.iterated_commutator(n, 1, limits)?;
    let m = if p == 2 { 4 } else { p };
    let powers = n.power_subgroup(m, limits)?;
    Ok(bracket.is_subgroup_of(&powers))
}

/// N is potently embedded in G: [N, G] <= N^4 for p = 2 (the explicit
/// p = 2 clause, never the iterated bracket), or [N, p-2 G] <= N^p for
/// odd p.
pub fn is_potently_embedded(
    n: &Subgroup,
    g: &Arc<PermGroup>,
    p: u64,
    limits: &Limits,
) -> Result<bool> {
    require_normal(n, "potently embedded test")?;
    if p == 2 {
        return is_powerfully_embedded(n, g, p, limits);
    }
    let bracket = g.iterated_commutator(n, p as u32 - 2, limits)?;
    let powers = n.power_subgroup(p, limits)?;
    Ok(bracket.is_subgroup_of(&powers))
}

fn require_normal(n: &Subgroup, context: &str) -> Result<()> {
    if n.is_normal() {
        Ok(())
    } else {
        Err(Error::NotNormal {
            context: context.into(),
        })
    }
}

/// Hall's collection formula for one pair (x, y) and one k:
/// `(xy)^{p^k} = x^{p^k} y^{p^k}` modulo
/// `gamma_2(L)^{p^k} gamma_p(L)^{p^{k-1}} ... gamma_{p^k}(L)` with
/// L = <x, y>, and the companion form `[x,y]^{p^k} = [x^{p^k}, y]` modulo
/// the same window over M = <x, [x,y]>.
pub fn hall_collection_check(
    view: &PGroupView,
    x: &Word,
    y: &Word,
    k: u32,
    limits: &Limits,
) -> Result<CheckReport> {
    let p = view.p;
    let g = &view.group;
    let q = p.pow(k);

    let first = {
        let modulus = hall_modulus(g, &[x.clone(), y.clone()], p, k, limits)?;
        let lhs = x.mul(y).pow(q as i64);
        let rhs = x.pow(q as i64).mul(&y.pow(q as i64));
        modulus.contains_word(&rhs.inverse().mul(&lhs))
    };

    let second = {
        let c = Word::commutator(x, y);
        let modulus = hall_modulus(g, &[x.clone(), c.clone()], p, k, limits)?;
        let lhs = c.pow(q as i64);
        let rhs = Word::commutator(&x.pow(q as i64), y);
        modulus.contains_word(&rhs.inverse().mul(&lhs))
    };

    let mut report = CheckReport::new("hall_collection", true, first && second);
    if !first || !second {
        report = report.with_witness(format!(
            "x = {}, y = {}, k = {k}, product form {}, commutator form {}",
            x.display(&g.names),
            y.display(&g.names),
            first,
            second
        ));
    }
    Ok(report)
}

/// The Hall window `gamma_2(L)^{p^k} gamma_p(L)^{p^{k-1}} ... gamma_{p^k}(L)`
/// as a product of normal subgroups of L (the subgroup generated by the
/// union of their generators).
fn hall_modulus(
    g: &Arc<PermGroup>,
    l_gens: &[Word],
    p: u64,
    k: u32,
    limits: &Limits,
) -> Result<Subgroup> {
    let l = Subgroup::from_words(g.clone(), l_gens, limits)?;
    // Lower central series of L itself, not of the ambient group.
    let mut series = vec![l];
    loop {
        let last = series.last().unwrap();
        let next = g.commutator_span(&last.generator_words, l_gens, limits)?;
        if next.order == last.order || next.is_trivial() {
            series.push(next);
            break;
        }
        series.push(next);
    }
    let gamma = |i: u64| -> &Subgroup {
        let idx = ((i - 1) as usize).min(series.len() - 1);
        &series[idx]
    };
    let mut gens: Vec<Word> = Vec::new();
    // Terms gamma_{p^i}(L)^{p^{k-i}} for i = 0..=k, with the i = 0 term
    // read as gamma_2 per the formula.
    for i in 0..=k {
        let base = if i == 0 { 2 } else { p.pow(i) };
        let term = gamma(base).power_subgroup(p.pow(k - i), limits)?;
        gens.extend(term.generator_words.iter().cloned());
    }
    Subgroup::from_words(g.clone(), &gens, limits)
}

/// The three power-abelian conditions, measured for each n until the omega
/// and power subgroups stabilize. The hypothesis is the paper's claim
/// scope: potent p-groups for odd p. For everything else the measurement
/// is recorded vacuously.
pub fn power_abelian_check(
    view: &PGroupView,
    potent: bool,
    limits: &Limits,
) -> Result<Vec<CheckReport>> {
    let p = view.p;
    let hypothesis = potent && p > 2;
    let mut cond = [true, true, true];
    let mut witness: [Option<String>; 3] = [None, None, None];
    let e = PermGroup::p_group_exponent_of(view.group.order(), p).unwrap();
    for n in 0..=e {
        let (omega, set_size, set_equals) = view.whole.omega_with_set(p, n, limits)?;
        if !set_equals && cond[0] {
            cond[0] = false;
            witness[0] = Some(format!(
                "n = {n}: {set_size} elements of order dividing p^{n} generate order {}",
                omega.order
            ));
        }
        let q = p.pow(n);
        let powers = view.whole.power_subgroup(q, limits)?;
        let power_set = power_image_size(view, q)?;
        if power_set != powers.order && cond[1] {
            cond[1] = false;
            witness[1] = Some(format!(
                "n = {n}: {power_set} distinct p^{n}-th powers, subgroup order {}",
                powers.order
            ));
        }
        let index = view.group.order() / omega.order;
        if powers.order != index && cond[2] {
            cond[2] = false;
            witness[2] = Some(format!(
                "n = {n}: |G^(p^{n})| = {} but |G : Omega_{n}| = {index}",
                powers.order
            ));
        }
    }
    let ids = ["power_abelian_1", "power_abelian_2", "power_abelian_3"];
    Ok(ids
        .iter()
        .zip(cond.iter().zip(witness.iter_mut()))
        .map(|(id, (ok, w))| {
            let mut r = CheckReport::new(*id, hypothesis, *ok);
            if let Some(w) = w.take() {
                r = r.with_witness(w);
            }
            r
        })
        .collect())
}

/// Number of distinct q-th powers of elements.
fn power_image_size(view: &PGroupView, q: u64) -> Result<u64> {
    let g = &view.group;
    let tbl = g.element_table()?;
    let mut seen = vec![false; g.domain_size];
    let mut count = 0u64;
    let mut letters = Vec::new();
    for x in 0..g.domain_size as u32 {
        tbl.word_letters_of(x, &mut letters);
        let mut pt = g.base_point;
        for _ in 0..q {
            pt = g.walk_letters(pt, &letters);
        }
        if !seen[pt as usize] {
            seen[pt as usize] = true;
            count += 1;
        }
    }
    Ok(count)
}

/// If N <= M [N,G] N^p for normal N, M, then N <= M.
pub fn lemma_normal_check(
    view: &PGroupView,
    n: &Subgroup,
    m: &Subgroup,
    limits: &Limits,
) -> Result<CheckReport> {
    require_normal(n, "lemma_normal N")?;
    require_normal(m, "lemma_normal M")?;
    let g = &view.group;
    let bracket = g.commutator_span(&n.generator_words, &g.generator_words(), limits)?;
    let powers = n.power_subgroup(view.p, limits)?;
    let mut product_gens = m.generator_words.clone();
    product_gens.extend(bracket.generator_words.iter().cloned());
    product_gens.extend(powers.generator_words.iter().cloned());
    let product = Subgroup::from_words(g.clone(), &product_gens, limits)?;
    let hypothesis = n.is_subgroup_of(&product);
    let conclusion = n.is_subgroup_of(m);
    let mut r = CheckReport::new("lemma_normal", hypothesis, conclusion);
    if hypothesis && !conclusion {
        r = r.with_witness(format!("|N| = {}, |M| = {}", n.order, m.order));
    }
    Ok(r)
}

/// `[N^p, M] <= [N, M]^p [M, p N]` for normal N, M.
pub fn lemma_power_commutator_check(
    view: &PGroupView,
    n: &Subgroup,
    m: &Subgroup,
    limits: &Limits,
) -> Result<CheckReport> {
    require_normal(n, "lemma_power_commutator N")?;
    require_normal(m, "lemma_power_commutator M")?;
    let g = &view.group;
    let p = view.p;
    let np = n.power_subgroup(p, limits)?;
    let lhs = g.commutator_span(&np.generator_words, &m.generator_words, limits)?;
    let nm = g.commutator_span(&n.generator_words, &m.generator_words, limits)?;
    let nm_p = nm.power_subgroup(p, limits)?;
    // [M, p N]: p-fold iterated bracket with N.
    let mut iter = m.clone();
    for _ in 0..p {
        iter = g.commutator_span(&iter.generator_words, &n.generator_words, limits)?;
        if iter.is_trivial() {
            break;
        }
    }
    let mut rhs_gens = nm_p.generator_words.clone();
    rhs_gens.extend(iter.generator_words.iter().cloned());
    let rhs = Subgroup::from_words(g.clone(), &rhs_gens, limits)?;
    let conclusion = lhs.is_subgroup_of(&rhs);
    let mut r = CheckReport::new("lemma_power_commutator", true, conclusion);
    if !conclusion {
        r = r.with_witness(format!("|[N^p,M]| = {}, |rhs| = {}", lhs.order, rhs.order));
    }
    Ok(r)
}

/// For potent G: gamma_{k+1} <= gamma_k(G)^4 (p = 2) or
/// gamma_{p-1+k} <= gamma_{k+1}(G)^p (p >= 3), for all k up to the class.
pub fn lemma_potent_lcs_check(
    view: &PGroupView,
    potent: bool,
    limits: &Limits,
) -> Result<CheckReport> {
    let p = view.p;
    let mut conclusion = true;
    let mut witness = None;
    let depth = view.series.len() as u32 + 2;
    for k in 1..depth {
        let (target, source_power) = if p == 2 {
            (view.gamma(k + 1), view.gamma(k).power_subgroup(4, limits)?)
        } else {
            (
                view.gamma(p as u32 - 1 + k),
                view.gamma(k + 1).power_subgroup(p, limits)?,
            )
        };
        if !target.is_subgroup_of(&source_power) {
            conclusion = false;
            witness = Some(format!(
                "k = {k}: |target| = {}, |power side| = {}",
                target.order, source_power.order
            ));
            break;
        }
    }
    let mut r = CheckReport::new("lemma_potent_lcs", potent, conclusion);
    if let Some(w) = witness {
        r = r.with_witness(w);
    }
    Ok(r)
}

/// For p >= 3, 1 < n < p and gamma_n(G) <= G^p:
/// gamma_{n+1}(nu(G)) <= gamma_2(nu(G))^p.
pub fn prop_tec_check(
    view: &PGroupView,
    nu_series: &[Subgroup],
    n: u32,
    limits: &Limits,
) -> Result<CheckReport> {
    let p = view.p;
    let id = format!("prop_tec_n{n}");
    let applicable = p >= 3 && n > 1 && (n as u64) < p;
    let hypothesis = if applicable {
        let powers = view.whole.power_subgroup(p, limits)?;
        view.gamma(n).is_subgroup_of(&powers)
    } else {
        false
    };
    if !hypothesis {
        return Ok(CheckReport::new(id, false, true));
    }
    let gamma = |k: u32| -> &Subgroup { &nu_series[(k as usize - 1).min(nu_series.len() - 1)] };
    let rhs = gamma(2).power_subgroup(p, limits)?;
    let conclusion = gamma(n + 1).is_subgroup_of(&rhs);
    let mut r = CheckReport::new(id, true, conclusion);
    if !conclusion {
        r = r.with_witness(format!(
            "|gamma_{}(nu)| = {}, |gamma_2(nu)^p| = {}",
            n + 1,
            gamma(n + 1).order,
            rhs.order
        ));
    }
    Ok(r)
}

/// gamma_{n+1}(nu(G)) = gamma_{n+1}(G) gamma_{n+1}(G^phi) [gamma_n(G), G^phi]
/// as subgroups of nu(G).
pub fn lcs_nu_decomposition_check(
    nu: &NuResult,
    nu_series: &[Subgroup],
    n: u32,
    limits: &Limits,
) -> Result<CheckReport> {
    let group = &nu.nu;
    let id = format!("lcs_nu_decomposition_n{n}");
    if (n as usize) + 1 > nu_series.len() && !nu_series.last().unwrap().is_trivial() {
        return Ok(CheckReport::new(id, false, true));
    }
    let lhs = &nu_series[(n as usize).min(nu_series.len() - 1)];

    // Block lower central series, taken inside nu: brackets close under the
    // block generators only.
    let block_series = |gens: &[Word]| -> Result<Vec<Subgroup>> {
        let mut series = vec![Subgroup::from_words(group.clone(), gens, limits)?];
        loop {
            let last = series.last().unwrap();
            let next = group.commutator_span(&last.generator_words, gens, limits)?;
            if next.order == last.order || next.is_trivial() {
                series.push(next);
                break;
            }
            series.push(next);
        }
        Ok(series)
    };
    let n_gens = nu.base.n_gens;
    let g_gens: Vec<Word> = (0..n_gens).map(Word::generator).collect();
    let phi_gens: Vec<Word> = (0..n_gens).map(|i| Word::generator(i).shift(n_gens)).collect();
    let g_series = block_series(&g_gens)?;
    let phi_series = block_series(&phi_gens)?;
    let pick = |series: &[Subgroup], k: u32| -> Subgroup {
        series[(k as usize - 1).min(series.len() - 1)].clone()
    };
    let g_next = pick(&g_series, n + 1);
    let phi_next = pick(&phi_series, n + 1);
    let g_n = pick(&g_series, n);
    let mixed = group.commutator_span(&g_n.generator_words, &phi_gens, limits)?;
    let mut rhs_gens = g_next.generator_words.clone();
    rhs_gens.extend(phi_next.generator_words.iter().cloned());
    rhs_gens.extend(mixed.generator_words.iter().cloned());
    let rhs = Subgroup::from_words(group.clone(), &rhs_gens, limits)?;
    let conclusion = lhs.same_subgroup(&rhs);
    let mut r = CheckReport::new(id, true, conclusion);
    if !conclusion {
        r = r.with_witness(format!("|lhs| = {}, |rhs| = {}", lhs.order, rhs.order));
    }
    Ok(r)
}

/// If gamma_{k(p-1)}(P) <= gamma_r(P)^{p^s} with k(p-1) < r + s(p-1), then
/// exp(Omega_i(P)) <= p^{i+k-1} for all i.
pub fn omega_exponent_bound_check(
    group: &Arc<PermGroup>,
    p: u64,
    k: u32,
    r: u32,
    s: u32,
    limits: &Limits,
) -> Result<CheckReport> {
    let id = format!("omega_exponent_bound_k{k}_r{r}_s{s}");
    let series = group.lower_central_series(limits)?;
    let gamma = |i: u32| -> &Subgroup { &series[(i as usize - 1).min(series.len() - 1)] };
    let kp = k * (p as u32 - 1);
    let side = (kp as u64) < r as u64 + s as u64 * (p - 1);
    let hypothesis = side && {
        let rhs = gamma(r).power_subgroup(p.pow(s), limits)?;
        gamma(kp.max(1)).is_subgroup_of(&rhs)
    };
    if !hypothesis {
        return Ok(CheckReport::new(id, false, true));
    }
    let whole = Subgroup::whole_group(group.clone(), limits)?;
    let e = PermGroup::p_group_exponent_of(group.order(), p).ok_or(Error::NotPGroup {
        order: group.order(),
        p,
    })?;
    let mut conclusion = true;
    let mut witness = None;
    for i in 1..=e {
        let omega = whole.omega_subgroup(p, i, limits)?;
        let exp = omega.exponent(limits)?;
        let bound = p.pow(i + k - 1);
        if exp > bound {
            conclusion = false;
            witness = Some(format!("i = {i}: exp(Omega_{i}) = {exp} > {bound}"));
            break;
        }
        if omega.order == group.order() {
            break;
        }
    }
    let mut rep = CheckReport::new(id, true, conclusion);
    if let Some(w) = witness {
        rep = rep.with_witness(w);
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_group;

    fn view(text: &str, p: u64) -> PGroupView {
        let input = parse_group(text).unwrap();
        let g = crate::constructions::realize_group(&input, &Limits::default()).unwrap();
        PGroupView::new(g, p, &Limits::default()).unwrap()
    }

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn abelian_groups_are_powerful_and_potent() {
        let v = view("gens: a b\nrel: a^4\nrel: b^2\nrel: [a,b]", 2);
        assert!(is_powerful(&v, &limits()).unwrap());
        assert!(is_potent(&v, &limits()).unwrap());
    }

    #[test]
    fn q8_is_not_powerful() {
        // G' = Z2 but G^4 is trivial (brute force over 8 elements).
        let v = view("gens: a b\nrel: a^4\nrel: a^2 b^-2\nrel: b^-1 a b a", 2);
        assert!(!is_powerful(&v, &limits()).unwrap());
        assert!(!is_potent(&v, &limits()).unwrap());
    }

    #[test]
    fn m27_is_powerful() {
        // G' = <a^3> = G^3 (brute force over 27 elements).
        let v = view("gens: a b\nrel: a^9\nrel: b^3\nrel: b^-1 a b a^-4", 3);
        assert!(is_powerful(&v, &limits()).unwrap());
        assert!(is_potent(&v, &limits()).unwrap());
    }

    #[test]
    fn extraspecial_5_is_potent_but_not_powerful() {
        // gamma_4 = 1 <= G^5 = 1 while G' = Z5 is not contained in G^5 = 1.
        let v = view(
            "gens: a b\nrel: a^5\nrel: b^5\nrel: [a,b]^5\nrel: [[a,b],a]\nrel: [[a,b],b]",
            5,
        );
        assert_eq!(v.group.order(), 125);
        assert!(!is_powerful(&v, &limits()).unwrap());
        assert!(is_potent(&v, &limits()).unwrap());
    }

    #[test]
    fn extraspecial_3_is_not_potent() {
        let v = view(
            "gens: a b\nrel: a^3\nrel: b^3\nrel: [a,b]^3\nrel: [[a,b],a]\nrel: [[a,b],b]",
            3,
        );
        assert_eq!(v.group.order(), 27);
        assert!(!is_potent(&v, &limits()).unwrap());
    }

    #[test]
    fn trivial_group_is_potent() {
        let v = view("gens: a\nrel: a", 5);
        assert!(is_potent(&v, &limits()).unwrap());
    }

    #[test]
    fn central_subgroups_are_always_embedded() {
        let v = view("gens: a b\nrel: a^4\nrel: a^2 b^-2\nrel: b^-1 a b a", 2);
        let center = v.whole.power_subgroup(2, &limits()).unwrap();
        assert!(is_powerfully_embedded(&center, &v.group, 2, &limits()).unwrap());
        assert!(is_potently_embedded(&center, &v.group, 2, &limits()).unwrap());
    }

    #[test]
    fn self_embedding_matches_potency() {
        for (text, p) in [
            ("gens: a b\nrel: a^9\nrel: b^3\nrel: b^-1 a b a^-4", 3u64),
            ("gens: a b\nrel: a^4\nrel: a^2 b^-2\nrel: b^-1 a b a", 2),
            (
                "gens: a b\nrel: a^5\nrel: b^5\nrel: [a,b]^5\nrel: [[a,b],a]\nrel: [[a,b],b]",
                5,
            ),
        ] {
            let v = view(text, p);
            let potent = is_potent(&v, &limits()).unwrap();
            let embedded = is_potently_embedded(&v.whole, &v.group, p, &limits()).unwrap();
            assert_eq!(potent, embedded, "mismatch for {text}");
        }
    }

    #[test]
    fn embedding_requires_normality() {
        let v = view("gens: a b\nrel: a^4\nrel: b^2\nrel: (a b)^2", 2);
        let refl = Subgroup::from_words(v.group.clone(), &[Word::generator(1)], &limits()).unwrap();
        assert!(matches!(
            is_powerfully_embedded(&refl, &v.group, 2, &limits()),
            Err(Error::NotNormal { .. })
        ));
    }

    #[test]
    fn hall_collection_on_d4_standard_generators() {
        let v = view("gens: a b\nrel: a^4\nrel: b^2\nrel: (a b)^2", 2);
        let r = hall_collection_check(&v, &Word::generator(0), &Word::generator(1), 1, &limits())
            .unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn hall_collection_exact_in_abelian_groups() {
        let v = view("gens: a b\nrel: a^4\nrel: b^2\nrel: [a,b]", 2);
        for k in 1..=2 {
            let r = hall_collection_check(&v, &Word::generator(0), &Word::generator(1), k, &limits())
                .unwrap();
            assert!(r.passed());
        }
    }

    #[test]
    fn power_abelian_holds_for_abelian_groups() {
        let v = view("gens: a b\nrel: a^9\nrel: b^3\nrel: [a,b]", 3);
        let rs = power_abelian_check(&v, true, &limits()).unwrap();
        assert!(rs.iter().all(|r| r.passed()), "{rs:?}");
    }

    #[test]
    fn power_abelian_condition_three_fails_on_q8_as_measured() {
        let v = view("gens: a b\nrel: a^4\nrel: a^2 b^-2\nrel: b^-1 a b a", 2);
        let rs = power_abelian_check(&v, false, &limits()).unwrap();
        // Recorded vacuously: Q8 is outside the odd-potent hypothesis.
        assert!(rs.iter().all(|r| r.is_vacuous()));
        // |G^2| = 2 while |G : Omega_1| = 4.
        assert!(!rs[2].conclusion_held, "{rs:?}");
    }

    #[test]
    fn power_abelian_on_potent_extraspecial_5() {
        let v = view(
            "gens: a b\nrel: a^5\nrel: b^5\nrel: [a,b]^5\nrel: [[a,b],a]\nrel: [[a,b],b]",
            5,
        );
        let rs = power_abelian_check(&v, true, &limits()).unwrap();
        assert!(rs.iter().all(|r| r.passed()), "{rs:?}");
    }

    #[test]
    fn lemma_normal_with_contained_subgroups() {
        let v = view("gens: a b\nrel: a^9\nrel: b^3\nrel: b^-1 a b a^-4", 3);
        let derived = v.derived().clone();
        let r = lemma_normal_check(&v, &derived, &v.whole, &limits()).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn lemma_potent_lcs_on_m27() {
        let v = view("gens: a b\nrel: a^9\nrel: b^3\nrel: b^-1 a b a^-4", 3);
        let r = lemma_potent_lcs_check(&v, true, &limits()).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn lemma_power_commutator_on_small_groups() {
        for (text, p) in [
            ("gens: a b\nrel: a^4\nrel: a^2 b^-2\nrel: b^-1 a b a", 2u64),
            ("gens: a b\nrel: a^9\nrel: b^3\nrel: b^-1 a b a^-4", 3),
        ] {
            let v = view(text, p);
            let r = lemma_power_commutator_check(&v, &v.whole, &v.whole, &limits()).unwrap();
            assert!(r.passed(), "{text}: {r:?}");
        }
    }

    #[test]
    fn prop_tec_on_z3_squared() {
        let input = parse_group("gens: a b\nrel: a^3\nrel: b^3\nrel: [a,b]").unwrap();
        let g = crate::constructions::realize_group(&input, &limits()).unwrap();
        let v = PGroupView::new(g.clone(), 3, &limits()).unwrap();
        let nu = crate::constructions::build_nu(&g, &input.presentation, &Default::default()).unwrap();
        let series = nu.nu.lower_central_series(&limits()).unwrap();
        let r = prop_tec_check(&v, &series, 2, &limits()).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn omega_exponent_bound_on_potent_groups() {
        let v = view("gens: a b\nrel: a^9\nrel: b^3\nrel: [a,b]", 3);
        // k = 1, r = 2, s = 1: hypothesis is exactly potency.
        let r = omega_exponent_bound_check(&v.group, 3, 1, 2, 1, &limits()).unwrap();
        assert!(r.passed(), "{r:?}");
    }
}

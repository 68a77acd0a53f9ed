//! The built-in corpus of small p-groups.
//!
//! Entries ship as embedded presentation text in the same grammar the
//! parser accepts from files, so a user-supplied corpus can replace the
//! built-in one. Tags are validated against computed predicates when an
//! entry is realized.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Result;
use crate::presentation::{parse_group, GroupInput};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Tag {
    Abelian,
    Powerful,
    Potent,
    Prime(u64),
    Slow,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tag::Abelian => write!(f, "abelian"),
            Tag::Powerful => write!(f, "powerful"),
            Tag::Potent => write!(f, "potent"),
            Tag::Prime(p) => write!(f, "p={p}"),
            Tag::Slow => write!(f, "slow"),
        }
    }
}

impl Tag {
    pub fn parse(text: &str) -> Option<Tag> {
        match text {
            "abelian" => Some(Tag::Abelian),
            "powerful" => Some(Tag::Powerful),
            "potent" => Some(Tag::Potent),
            "slow" => Some(Tag::Slow),
            other => other
                .strip_prefix("p=")
                .and_then(|p| p.parse().ok())
                .map(Tag::Prime),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub text: String,
    pub expected_order: u64,
    pub prime: u64,
    pub tags: BTreeSet<Tag>,
}

impl CorpusEntry {
    fn new(name: &str, prime: u64, order: u64, rels: &str, tags: &[Tag]) -> Self {
        let mut all: BTreeSet<Tag> = tags.iter().copied().collect();
        all.insert(Tag::Prime(prime));
        CorpusEntry {
            name: name.into(),
            text: rels.into(),
            expected_order: order,
            prime,
            tags: all,
        }
    }

    pub fn input(&self) -> Result<GroupInput> {
        let text = format!("name: {}\norder: {}\nprime: {}\n{}", self.name, self.expected_order, self.prime, self.text);
        parse_group(&text)
    }

    pub fn has(&self, tag: Tag) -> bool {
        self.tags.contains(&tag)
    }

    pub fn tag_strings(&self) -> Vec<String> {
        self.tags.iter().map(Tag::to_string).collect()
    }
}

const APT: &[Tag] = &[Tag::Abelian, Tag::Powerful, Tag::Potent];

/// The built-in corpus: all abelian 2-groups of order at most 16 and
/// 3-groups of order at most 27, the order-8 dihedral and quaternion
/// groups, the three non-abelian order-27 entries used by the theorems,
/// and the p = 5 tier. Everything p = 5 is slow by policy; the rank-4 and
/// rank-3 elementary abelian entries for p = 2, 3 are slow because their
/// nu(G) sizes (2^24 and 3^15) sit past the default coset budget.
pub fn corpus() -> Vec<CorpusEntry> {
    let mut v = Vec::new();

    v.push(CorpusEntry::new("z2", 2, 2, "gens: a\nrel: a^2", APT));
    v.push(CorpusEntry::new("z4", 2, 4, "gens: a\nrel: a^4", APT));
    v.push(CorpusEntry::new(
        "z2xz2",
        2,
        4,
        "gens: a b\nrel: a^2\nrel: b^2\nrel: [a,b]",
        APT,
    ));
    v.push(CorpusEntry::new("z8", 2, 8, "gens: a\nrel: a^8", APT));
    v.push(CorpusEntry::new(
        "z4xz2",
        2,
        8,
        "gens: a b\nrel: a^4\nrel: b^2\nrel: [a,b]",
        APT,
    ));
    v.push(CorpusEntry::new(
        "z2xz2xz2",
        2,
        8,
        "gens: a b c\nrel: a^2\nrel: b^2\nrel: c^2\nrel: [a,b]\nrel: [a,c]\nrel: [b,c]",
        APT,
    ));
    v.push(CorpusEntry::new("z16", 2, 16, "gens: a\nrel: a^16", APT));
    v.push(CorpusEntry::new(
        "z8xz2",
        2,
        16,
        "gens: a b\nrel: a^8\nrel: b^2\nrel: [a,b]",
        APT,
    ));
    v.push(CorpusEntry::new(
        "z4xz4",
        2,
        16,
        "gens: a b\nrel: a^4\nrel: b^4\nrel: [a,b]",
        APT,
    ));
    v.push(CorpusEntry::new(
        "z4xz2xz2",
        2,
        16,
        "gens: a b c\nrel: a^4\nrel: b^2\nrel: c^2\nrel: [a,b]\nrel: [a,c]\nrel: [b,c]",
        APT,
    ));
    v.push(CorpusEntry::new(
        "z2xz2xz2xz2",
        2,
        16,
        "gens: a b c d\nrel: a^2\nrel: b^2\nrel: c^2\nrel: d^2\nrel: [a,b]\nrel: [a,c]\nrel: [a,d]\nrel: [b,c]\nrel: [b,d]\nrel: [c,d]",
        &[Tag::Abelian, Tag::Powerful, Tag::Potent, Tag::Slow],
    ));
    v.push(CorpusEntry::new(
        "d4",
        2,
        8,
        "gens: a b\nrel: a^4\nrel: b^2\nrel: (a b)^2",
        &[],
    ));
    v.push(CorpusEntry::new(
        "q8",
        2,
        8,
        "gens: a b\nrel: a^4\nrel: a^2 b^-2\nrel: b^-1 a b a",
        &[],
    ));

    v.push(CorpusEntry::new("z3", 3, 3, "gens: a\nrel: a^3", APT));
    v.push(CorpusEntry::new("z9", 3, 9, "gens: a\nrel: a^9", APT));
    v.push(CorpusEntry::new(
        "z3xz3",
        3,
        9,
        "gens: a b\nrel: a^3\nrel: b^3\nrel: [a,b]",
        APT,
    ));
    v.push(CorpusEntry::new("z27", 3, 27, "gens: a\nrel: a^27", APT));
    v.push(CorpusEntry::new(
        "z9xz3",
        3,
        27,
        "gens: a b\nrel: a^9\nrel: b^3\nrel: [a,b]",
        APT,
    ));
    v.push(CorpusEntry::new(
        "z3xz3xz3",
        3,
        27,
        "gens: a b c\nrel: a^3\nrel: b^3\nrel: c^3\nrel: [a,b]\nrel: [a,c]\nrel: [b,c]",
        &[Tag::Abelian, Tag::Powerful, Tag::Potent, Tag::Slow],
    ));
    v.push(CorpusEntry::new(
        "m27",
        3,
        27,
        "gens: a b\nrel: a^9\nrel: b^3\nrel: b^-1 a b a^-4",
        &[Tag::Powerful, Tag::Potent],
    ));
    v.push(CorpusEntry::new(
        "es3",
        3,
        27,
        "gens: a b\nrel: a^3\nrel: b^3\nrel: [a,b]^3\nrel: [[a,b],a]\nrel: [[a,b],b]",
        &[],
    ));

    v.push(CorpusEntry::new(
        "z5",
        5,
        5,
        "gens: a\nrel: a^5",
        &[Tag::Abelian, Tag::Powerful, Tag::Potent, Tag::Slow],
    ));
    v.push(CorpusEntry::new(
        "z5xz5",
        5,
        25,
        "gens: a b\nrel: a^5\nrel: b^5\nrel: [a,b]",
        &[Tag::Abelian, Tag::Powerful, Tag::Potent, Tag::Slow],
    ));
    v.push(CorpusEntry::new(
        "mc125",
        5,
        125,
        "gens: a b\nrel: a^25\nrel: b^5\nrel: b^-1 a b a^-6",
        &[Tag::Powerful, Tag::Potent, Tag::Slow],
    ));
    v.push(CorpusEntry::new(
        "es5",
        5,
        125,
        "gens: a b\nrel: a^5\nrel: b^5\nrel: [a,b]^5\nrel: [[a,b],a]\nrel: [[a,b],b]",
        &[Tag::Potent, Tag::Slow],
    ));

    v
}

/// Builds corpus entries from a user-supplied multi-group file. Tags other
/// than the prime are not inferred; the prime must be declared per entry.
pub fn corpus_from_file(text: &str) -> Result<Vec<CorpusEntry>> {
    let inputs = crate::presentation::parse_corpus_file(text)?;
    let mut out = Vec::new();
    for input in inputs {
        let prime = input.prime.unwrap_or(2);
        let mut tags = BTreeSet::new();
        tags.insert(Tag::Prime(prime));
        out.push(CorpusEntry {
            name: input.presentation.label.clone(),
            text: input.presentation.to_string(),
            expected_order: input.expected_order.unwrap_or(0),
            prime,
            tags,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_has_required_entries() {
        let c = corpus();
        let names: Vec<&str> = c.iter().map(|e| e.name.as_str()).collect();
        for required in [
            "z2", "z4", "z2xz2", "z8", "z4xz2", "z2xz2xz2", "z16", "z8xz2", "z4xz4",
            "z4xz2xz2", "d4", "q8", "z3", "z9", "z3xz3", "z27", "z9xz3", "m27", "es3",
            "z5", "z5xz5", "mc125", "es5",
        ] {
            assert!(names.contains(&required), "missing corpus entry {required}");
        }
    }

    #[test]
    fn z2_cubed_entry_is_tagged_abelian_powerful_p2() {
        let c = corpus();
        let e = c.iter().find(|e| e.name == "z2xz2xz2").unwrap();
        assert!(e.has(Tag::Abelian));
        assert!(e.has(Tag::Powerful));
        assert!(e.has(Tag::Prime(2)));
        assert!(!e.has(Tag::Slow));
    }

    #[test]
    fn p5_tier_is_slow() {
        for e in corpus() {
            if e.has(Tag::Prime(5)) {
                assert!(e.has(Tag::Slow), "{} should be slow", e.name);
            }
        }
    }

    #[test]
    fn every_entry_parses_and_realizes_to_declared_order() {
        use crate::constructions::realize_group;
        use crate::limits::Limits;
        for e in corpus() {
            let input = e.input().unwrap();
            let g = realize_group(&input, &Limits::default()).unwrap();
            assert_eq!(g.order(), e.expected_order, "{}", e.name);
        }
    }

    #[test]
    fn tags_match_computed_predicates_for_every_entry() {
        use crate::limits::Limits;
        use crate::pgroup::{is_potent, is_powerful, PGroupView};
        use crate::subgroup::Subgroup;
        let limits = Limits::default();
        for e in corpus() {
            let input = e.input().unwrap();
            let g = crate::constructions::realize_group(&input, &limits).unwrap();
            let whole = Subgroup::whole_group(g.clone(), &limits).unwrap();
            assert_eq!(whole.is_abelian(), e.has(Tag::Abelian), "{} abelian tag", e.name);
            let view = PGroupView::new(g, e.prime, &limits).unwrap();
            assert_eq!(
                is_powerful(&view, &limits).unwrap(),
                e.has(Tag::Powerful),
                "{} powerful tag",
                e.name
            );
            assert_eq!(
                is_potent(&view, &limits).unwrap(),
                e.has(Tag::Potent),
                "{} potent tag",
                e.name
            );
        }
    }

    #[test]
    fn corpus_file_round_trip() {
        let text = "name: k4\norder: 4\nprime: 2\ngens: a b\nrel: a^2\nrel: b^2\nrel: [a,b]\n";
        let entries = corpus_from_file(text).unwrap();
        assert_eq!(entries.len(), 1);
        assert_eq!(entries[0].name, "k4");
        let input = entries[0].input().unwrap();
        assert_eq!(input.expected_order, Some(4));
    }
}

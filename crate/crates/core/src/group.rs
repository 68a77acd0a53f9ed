//! Concrete permutation groups.
//!
//! Every realized group here acts on `0..domain_size` and carries its action
//! column-wise, one permutation per signed generator. Groups coming out of
//! coset enumeration are regular: the action is the group acting on itself,
//! the base point is the identity element, and no non-identity element fixes
//! the base point. That identification is what makes subgroup order equal
//! orbit size and membership an orbit lookup.

use crate::enumerate::{col_of_letter, CosetTable, TableStatus};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::word::Word;

#[derive(Debug, Clone)]
pub struct PermGroup {
    pub n_gens: usize,
    pub domain_size: usize,
    pub base_point: u32,
    pub is_regular: bool,
    order: u64,
    pub names: Vec<String>,
    /// `cols[2g]` is the action of generator `g`, `cols[2g+1]` its inverse.
    cols: Vec<Vec<u32>>,
    bfs: Option<ElementTable>,
}

/// Shortest representative words for the points of a regular group, stored
/// as BFS parent pointers. Ties between words of equal length are broken by
/// trying positive generators in index order, then inverses in index order.
#[derive(Debug, Clone)]
pub struct ElementTable {
    parent: Vec<u32>,
    letter: Vec<i16>,
    pub word_length_bound: usize,
}

impl ElementTable {
    fn build(cols: &[Vec<u32>], domain: usize, base: u32) -> Result<Self> {
        let n_cols = cols.len();
        let mut parent = vec![u32::MAX; domain];
        let mut letter = vec![0i16; domain];
        let mut depth = vec![u32::MAX; domain];
        parent[base as usize] = base;
        depth[base as usize] = 0;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(base);
        let mut bound = 0usize;
        // Letter preference: +1, +2, ..., -1, -2, ...
        let letter_order: Vec<usize> = (0..n_cols / 2)
            .map(|g| 2 * g)
            .chain((0..n_cols / 2).map(|g| 2 * g + 1))
            .collect();
        while let Some(p) = queue.pop_front() {
            for &col in &letter_order {
                let q = cols[col][p as usize];
                if parent[q as usize] == u32::MAX {
                    parent[q as usize] = p;
                    let g = (col / 2) as i16 + 1;
                    letter[q as usize] = if col % 2 == 0 { g } else { -g };
                    depth[q as usize] = depth[p as usize] + 1;
                    bound = bound.max(depth[q as usize] as usize);
                    queue.push_back(q);
                }
            }
        }
        if parent.iter().any(|&p| p == u32::MAX) {
            return Err(Error::NotRegular);
        }
        Ok(ElementTable {
            parent,
            letter,
            word_length_bound: bound,
        })
    }

    /// Representative word for a point, as letters from the identity out.
    pub fn word_letters_of(&self, point: u32, out: &mut Vec<i32>) {
        out.clear();
        let mut p = point;
        while self.parent[p as usize] != p {
            out.push(self.letter[p as usize] as i32);
            p = self.parent[p as usize];
        }
        out.reverse();
    }

    pub fn word_of(&self, point: u32) -> Word {
        let mut letters = Vec::new();
        self.word_letters_of(point, &mut letters);
        Word::from_letters(letters)
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }
}

impl PermGroup {
    /// The regular representation read off a closed coset table.
    pub fn from_coset_table(table: &CosetTable, names: Vec<String>) -> Result<Self> {
        if table.status != TableStatus::Closed {
            return Err(Error::NotClosed);
        }
        let domain = table.coset_count;
        let cols: Vec<Vec<u32>> = (0..2 * table.n_gens)
            .map(|c| table.column(c).to_vec())
            .collect();
        let bfs = ElementTable::build(&cols, domain, 0)?;
        Ok(PermGroup {
            n_gens: table.n_gens,
            domain_size: domain,
            base_point: 0,
            is_regular: true,
            order: domain as u64,
            names,
            cols,
            bfs: Some(bfs),
        })
    }

    /// Builds a group from explicit generator permutations. `order` is the
    /// group order; for a regular action it must equal the domain size.
    pub fn from_permutations(
        gens: Vec<Permutation>,
        names: Vec<String>,
        base_point: u32,
        is_regular: bool,
        order: u64,
    ) -> Result<Self> {
        let domain = gens.first().map(Permutation::degree).unwrap_or(1);
        assert!(gens.iter().all(|g| g.degree() == domain));
        let mut cols = Vec::with_capacity(2 * gens.len());
        for g in &gens {
            cols.push(g.images().to_vec());
            cols.push(g.inverse().images().to_vec());
        }
        if is_regular {
            assert_eq!(order, domain as u64, "regular action must have order = domain");
        }
        let bfs = if is_regular {
            Some(ElementTable::build(&cols, domain, base_point)?)
        } else {
            None
        };
        Ok(PermGroup {
            n_gens: gens.len(),
            domain_size: domain,
            base_point,
            is_regular,
            order,
            names,
            cols,
            bfs,
        })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn column(&self, col: usize) -> &[u32] {
        &self.cols[col]
    }

    pub fn generator(&self, i: usize) -> Permutation {
        Permutation::from_images(self.cols[2 * i].clone()).expect("stored columns are bijections")
    }

    pub fn generator_words(&self) -> Vec<Word> {
        (0..self.n_gens).map(Word::generator).collect()
    }

    /// The element table of a regular group.
    pub fn element_table(&self) -> Result<&ElementTable> {
        self.bfs.as_ref().ok_or(Error::NotRegular)
    }

    pub fn walk(&self, from: u32, word: &Word) -> u32 {
        let mut p = from;
        for &l in word.letters() {
            p = self.cols[col_of_letter(l)][p as usize];
        }
        p
    }

    pub fn walk_letters(&self, from: u32, letters: &[i32]) -> u32 {
        let mut p = from;
        for &l in letters {
            p = self.cols[col_of_letter(l)][p as usize];
        }
        p
    }

    /// Point reached by a word from the base point; in a regular group this
    /// is the group element the word evaluates to.
    pub fn point_of_word(&self, word: &Word) -> u32 {
        self.walk(self.base_point, word)
    }

    /// True when the word evaluates to the identity element.
    pub fn is_identity_word(&self, word: &Word) -> Result<bool> {
        if !self.is_regular {
            return Err(Error::NotRegular);
        }
        Ok(self.point_of_word(word) == self.base_point)
    }

    /// Canonical representative word of a point (regular groups).
    pub fn word_of_point(&self, point: u32) -> Result<Word> {
        Ok(self.element_table()?.word_of(point))
    }

    /// Least `k >= 1` with `w^k` fixing the base point, found by repeated
    /// table walks; the permutation of `w` is never materialized.
    pub fn element_order(&self, w: &Word) -> Result<u64> {
        if !self.is_regular {
            return Err(Error::NotRegular);
        }
        let mut p = self.point_of_word(w);
        let mut k = 1u64;
        while p != self.base_point {
            p = self.walk(p, w);
            k += 1;
        }
        Ok(k)
    }

    /// Order of the element sitting at a point of a regular group.
    pub fn order_of_point(&self, point: u32) -> Result<u64> {
        let tbl = self.element_table()?;
        let mut letters = Vec::new();
        tbl.word_letters_of(point, &mut letters);
        let mut p = point;
        let mut k = 1u64;
        while p != self.base_point {
            p = self.walk_letters(p, &letters);
            k += 1;
        }
        Ok(k)
    }

    /// Evaluates a word to an explicit permutation of the domain.
    pub fn permutation_of_word(&self, w: &Word) -> Permutation {
        let images: Vec<u32> = (0..self.domain_size as u32).map(|p| self.walk(p, w)).collect();
        Permutation::from_images(images).expect("word evaluation is a bijection")
    }

    /// True when `order` is a power of `p`; the exponent is returned.
    pub fn p_group_exponent_of(order: u64, p: u64) -> Option<u32> {
        if order == 0 {
            return None;
        }
        let mut n = order;
        let mut k = 0;
        while n % p == 0 {
            n /= p;
            k += 1;
        }
        (n == 1).then_some(k)
    }

    /// Element orders for every point of a regular p-group, computed through
    /// the p-th power map: `g^p` of the element at `x` is the point reached
    /// by walking the representative word of `x` once more from `x`.
    pub fn p_group_order_vector(&self, p: u64) -> Result<Vec<u64>> {
        if !self.is_regular {
            return Err(Error::NotRegular);
        }
        if Self::p_group_exponent_of(self.order, p).is_none() {
            return Err(Error::NotPGroup { order: self.order, p });
        }
        let tbl = self.element_table()?;
        let n = self.domain_size;
        let mut pmap = vec![0u32; n];
        let mut letters = Vec::new();
        for x in 0..n as u32 {
            tbl.word_letters_of(x, &mut letters);
            let mut q = x;
            for _ in 1..p {
                q = self.walk_letters(q, &letters);
            }
            pmap[x as usize] = q;
        }
        let mut ord = vec![0u64; n];
        ord[self.base_point as usize] = 1;
        let mut chain = Vec::new();
        for x in 0..n as u32 {
            let mut y = x;
            while ord[y as usize] == 0 {
                chain.push(y);
                y = pmap[y as usize];
            }
            let mut o = ord[y as usize];
            while let Some(z) = chain.pop() {
                o *= p;
                ord[z as usize] = o;
            }
        }
        Ok(ord)
    }
}

//! Canonical coherence cells and a small pasting evaluator.
//!
//! Pasting composites throughout the crate are evaluated against one global
//! bracketing convention: words of 1-cells are flattened and read
//! left-nested, `[u1, u2, u3]` meaning `(u1 ∘ u2) ∘ u3`, and constraint
//! cells are inserted innermost-first by the normalizer. Between any two
//! words with the same non-unit leaf sequence there is exactly one composite
//! of `a`, `l`, `r` cells; [`canonical_iso`] computes it.

use crate::bicat::FiniteBicategory;
use crate::report::{Error, Result};

/// A formal composite of 1-cells. `Id(x)` is a syntactic unit: it vanishes
/// from the reduced leaf sequence, while an identity 1-cell used as `Cell`
/// is treated as an ordinary generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Word {
    Id(u32),
    Cell(u32),
    Comp(Box<Word>, Box<Word>),
}

impl Word {
    pub fn comp(u: Word, v: Word) -> Word {
        Word::Comp(Box::new(u), Box::new(v))
    }

    /// Left-nested word over nonempty leaves.
    pub fn left_nested(leaves: &[u32]) -> Word {
        let mut it = leaves.iter();
        let first = *it.next().expect("nonempty");
        let mut acc = Word::Cell(first);
        for &u in it {
            acc = Word::comp(acc, Word::Cell(u));
        }
        acc
    }

    pub fn eval(&self, b: &FiniteBicategory) -> u32 {
        match self {
            Word::Id(x) => b.id1[*x as usize],
            Word::Cell(u) => *u,
            Word::Comp(u, v) => b.h1(u.eval(b), v.eval(b)),
        }
    }

    /// Leaf sequence with syntactic units dropped.
    pub fn leaves(&self) -> Vec<u32> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<u32>) {
        match self {
            Word::Id(_) => {}
            Word::Cell(u) => out.push(*u),
            Word::Comp(u, v) => {
                u.collect_leaves(out);
                v.collect_leaves(out);
            }
        }
    }

    /// Source object of the whole composite.
    fn source_object(&self, b: &FiniteBicategory) -> u32 {
        match self {
            Word::Id(x) => *x,
            Word::Cell(u) => b.src1(*u),
            Word::Comp(_, v) => v.source_object(b),
        }
    }
}

/// Result of normalizing a word: the reduced leaves, the evaluated normal
/// form 1-cell, and the invertible 2-cell `eval(word) => normal_form`
/// together with its inverse.
struct Normalized {
    leaves: Vec<u32>,
    nf: u32,
    fwd: u32,
    bwd: u32,
}

fn nf_cell(b: &FiniteBicategory, leaves: &[u32], empty_object: u32) -> u32 {
    if leaves.is_empty() {
        b.id1[empty_object as usize]
    } else {
        let mut acc = leaves[0];
        for &u in &leaves[1..] {
            acc = b.h1(acc, u);
        }
        acc
    }
}

/// Canonical 2-cell `LN(l1) ∘ LN(l2) => LN(l1 ++ l2)` for nonempty leaf
/// lists, with inverse.
fn merge(b: &FiniteBicategory, l1: &[u32], l2: &[u32]) -> (u32, u32) {
    let left = nf_cell(b, l1, 0);
    if l2.len() == 1 {
        let c = b.h1(left, l2[0]);
        return (b.id2[c as usize], b.id2[c as usize]);
    }
    let (head, last) = l2.split_at(l2.len() - 1);
    let mid = nf_cell(b, head, 0);
    // left ∘ (mid ∘ last) => (left ∘ mid) ∘ last => LN(l1 ++ head) ∘ last
    let a_cell = b.a(left, mid, last[0]);
    let a_cell_inv = b.a_inv(left, mid, last[0]);
    let (m_fwd, m_bwd) = merge(b, l1, head);
    let fwd = b.v2(b.h2(m_fwd, b.id2[last[0] as usize]), a_cell);
    let bwd = b.v2(a_cell_inv, b.h2(m_bwd, b.id2[last[0] as usize]));
    (fwd, bwd)
}

fn normalize(b: &FiniteBicategory, w: &Word) -> Normalized {
    match w {
        Word::Id(x) => {
            let one = b.id1[*x as usize];
            Normalized { leaves: vec![], nf: one, fwd: b.id2[one as usize], bwd: b.id2[one as usize] }
        }
        Word::Cell(u) => Normalized {
            leaves: vec![*u],
            nf: *u,
            fwd: b.id2[*u as usize],
            bwd: b.id2[*u as usize],
        },
        Word::Comp(wu, wv) => {
            let nu = normalize(b, wu);
            let nv = normalize(b, wv);
            let split_fwd = b.h2(nu.fwd, nv.fwd);
            let split_bwd = b.h2(nu.bwd, nv.bwd);
            let (mu_fwd, mu_bwd) = if nv.leaves.is_empty() {
                if nu.leaves.is_empty() {
                    // 1 ∘ 1 => 1
                    (b.lunit[nu.nf as usize], b.lunit_inv[nu.nf as usize])
                } else {
                    (b.runit[nu.nf as usize], b.runit_inv[nu.nf as usize])
                }
            } else if nu.leaves.is_empty() {
                (b.lunit[nv.nf as usize], b.lunit_inv[nv.nf as usize])
            } else {
                merge(b, &nu.leaves, &nv.leaves)
            };
            let mut leaves = nu.leaves;
            leaves.extend_from_slice(&nv.leaves);
            let nf = nf_cell(b, &leaves, w.source_object(b));
            Normalized {
                leaves,
                nf,
                fwd: b.v2(mu_fwd, split_fwd),
                bwd: b.v2(split_bwd, mu_bwd),
            }
        }
    }
}

/// The unique constraint-cell composite `eval(w1) => eval(w2)`, defined when
/// both words reduce to the same leaf sequence.
pub fn canonical_iso(b: &FiniteBicategory, w1: &Word, w2: &Word) -> Result<u32> {
    let n1 = normalize(b, w1);
    let n2 = normalize(b, w2);
    if n1.leaves != n2.leaves {
        return Err(Error::Structure(format!(
            "no canonical cell between words with leaves {:?} and {:?}",
            n1.leaves, n2.leaves
        )));
    }
    if n1.leaves.is_empty() && n1.nf != n2.nf {
        return Err(Error::Structure("empty words over different objects".into()));
    }
    Ok(b.v2(n2.bwd, n1.fwd))
}

/// Both directions of the unique constraint-cell composite.
pub fn canonical_iso_pair(b: &FiniteBicategory, w1: &Word, w2: &Word) -> Result<(u32, u32)> {
    let n1 = normalize(b, w1);
    let n2 = normalize(b, w2);
    if n1.leaves != n2.leaves {
        return Err(Error::Structure(format!(
            "no canonical cell between words with leaves {:?} and {:?}",
            n1.leaves, n2.leaves
        )));
    }
    if n1.leaves.is_empty() && n1.nf != n2.nf {
        return Err(Error::Structure("empty words over different objects".into()));
    }
    Ok((b.v2(n2.bwd, n1.fwd), b.v2(n1.bwd, n2.fwd)))
}

/// Stepwise pasting evaluator over a flat word of 1-cells.
///
/// State: the current leaves and an accumulated invertible 2-cell (both
/// directions) between the original source composite and the left-nested
/// composite of the current leaves. Each step rewrites a contiguous leaf
/// range by an atomic invertible 2-cell whose source is the left-nested
/// composite of that range.
pub struct Pasting<'b> {
    b: &'b FiniteBicategory,
    word: Vec<u32>,
    acc: u32,
    acc_inv: u32,
}

impl<'b> Pasting<'b> {
    /// Start from a bracketed source word.
    pub fn start(b: &'b FiniteBicategory, source: &Word) -> Result<Self> {
        let n = normalize(b, source);
        if n.leaves.is_empty() {
            return Err(Error::Structure("pasting source must have at least one leaf".into()));
        }
        Ok(Pasting { b, word: n.leaves, acc: n.fwd, acc_inv: n.bwd })
    }

    /// Start from explicit leaves, already left-nested.
    pub fn start_flat(b: &'b FiniteBicategory, leaves: Vec<u32>) -> Self {
        let nf = nf_cell(b, &leaves, 0);
        Pasting { b, word: leaves, acc: b.id2[nf as usize], acc_inv: b.id2[nf as usize] }
    }

    pub fn leaves(&self) -> &[u32] {
        &self.word
    }

    /// Apply `cell: LN(word[at..at+len]) => LN(replacement)` in context;
    /// `cell_inv` must be its vertical inverse.
    pub fn apply(&mut self, at: usize, len: usize, cell: u32, cell_inv: u32, replacement: &[u32]) -> Result<()> {
        let b = self.b;
        if at + len > self.word.len() || len == 0 || replacement.is_empty() {
            return Err(Error::Structure("pasting step out of range".into()));
        }
        let mid: Vec<u32> = self.word[at..at + len].to_vec();
        let mid_nf = nf_cell(b, &mid, 0);
        if b.src2(cell) != mid_nf {
            return Err(Error::Structure(format!(
                "pasting step source mismatch: cell {} expects {}, word has {}",
                b.two_name(cell),
                b.one_name(b.src2(cell)),
                b.one_name(mid_nf)
            )));
        }
        let rep_nf = nf_cell(b, replacement, 0);
        if b.tgt2(cell) != rep_nf {
            return Err(Error::Structure(format!(
                "pasting step target mismatch: cell {} produces {}, replacement reads {}",
                b.two_name(cell),
                b.one_name(b.tgt2(cell)),
                b.one_name(rep_nf)
            )));
        }
        let pre: Vec<u32> = self.word[..at].to_vec();
        let suf: Vec<u32> = self.word[at + len..].to_vec();
        // grouped word ((pre ∘ mid) ∘ suf), with empty parts omitted
        let grouped = |mid_leaves: &[u32]| -> Word {
            let mid_w = Word::left_nested(mid_leaves);
            let with_pre = if pre.is_empty() {
                mid_w
            } else {
                Word::comp(Word::left_nested(&pre), mid_w)
            };
            if suf.is_empty() {
                with_pre
            } else {
                Word::comp(with_pre, Word::left_nested(&suf))
            }
        };
        let before = grouped(&mid);
        let mut new_word = pre.clone();
        new_word.extend_from_slice(replacement);
        new_word.extend_from_slice(&suf);
        let after = grouped(replacement);
        // LN(word) => grouped-before
        let (into, into_inv) = canonical_iso_pair(b, &Word::left_nested(&self.word), &before)?;
        // whiskered cell in the grouping
        let mut whiskered = cell;
        let mut whiskered_inv = cell_inv;
        if !pre.is_empty() {
            let pre_id = b.id2[nf_cell(b, &pre, 0) as usize];
            whiskered = b.h2(pre_id, whiskered);
            whiskered_inv = b.h2(pre_id, whiskered_inv);
        }
        if !suf.is_empty() {
            let suf_id = b.id2[nf_cell(b, &suf, 0) as usize];
            whiskered = b.h2(whiskered, suf_id);
            whiskered_inv = b.h2(whiskered_inv, suf_id);
        }
        // grouped-after => LN(new word)
        let (out, out_inv) = canonical_iso_pair(b, &after, &Word::left_nested(&new_word))?;
        self.acc = b.v2(out, b.v2(whiskered, b.v2(into, self.acc)));
        self.acc_inv = b.v2(self.acc_inv, b.v2(into_inv, b.v2(whiskered_inv, out_inv)));
        self.word = new_word;
        Ok(())
    }

    /// Finish at a bracketed target word with the same leaves; returns the
    /// composite and its inverse.
    pub fn finish(self, target: &Word) -> Result<(u32, u32)> {
        let (iso, iso_inv) = canonical_iso_pair(self.b, &Word::left_nested(&self.word), target)?;
        Ok((self.b.v2(iso, self.acc), self.b.v2(self.acc_inv, iso_inv)))
    }

    /// Finish at the left-nested composite of the current leaves.
    pub fn finish_flat(self) -> (u32, u32) {
        (self.acc, self.acc_inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicat::locally_discrete;
    use crate::cat::ordinal_category;

    #[test]
    fn canonical_cells_in_strict_bicategories_are_identities() {
        let b = locally_discrete(&ordinal_category(3));
        // the chain 3 -> 2 -> 1 -> 0; 1-cells point source -> target
        let find = |y: u32, x: u32| {
            (0..b.n_one() as u32)
                .find(|&m| b.src1(m) == y && b.tgt1(m) == x)
                .unwrap()
        };
        let (f, g, h) = (find(1, 0), find(2, 1), find(3, 2));
        let w1 = Word::comp(Word::Cell(f), Word::comp(Word::Cell(g), Word::Cell(h)));
        let w2 = Word::comp(Word::comp(Word::Cell(f), Word::Cell(g)), Word::Cell(h));
        let iso = canonical_iso(&b, &w1, &w2).unwrap();
        let total = b.h1(b.h1(f, g), h);
        assert_eq!(iso, b.id2[total as usize]);
        // with syntactic units inserted: 1 at the target on the left, at the
        // source on the right
        let w3 = Word::comp(
            Word::comp(Word::Id(0), Word::Cell(f)),
            Word::comp(Word::Cell(g), Word::comp(Word::Cell(h), Word::Id(3))),
        );
        assert_eq!(canonical_iso(&b, &w3, &w2).unwrap(), b.id2[total as usize]);
    }

    #[test]
    fn pasting_identity_step() {
        let b = locally_discrete(&ordinal_category(2));
        let find = |y: u32, x: u32| {
            (0..b.n_one() as u32)
                .find(|&m| b.src1(m) == y && b.tgt1(m) == x)
                .unwrap()
        };
        let (f, g) = (find(1, 0), find(2, 1));
        let mut p = Pasting::start_flat(&b, vec![f, g]);
        let fg = b.h1(f, g);
        p.apply(0, 2, b.id2[fg as usize], b.id2[fg as usize], &[fg]).unwrap();
        assert_eq!(p.finish(&Word::Cell(fg)).unwrap(), (b.id2[fg as usize], b.id2[fg as usize]));
    }
}

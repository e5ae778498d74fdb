//! Finite bicategories with constraint cells, lax functors / homomorphisms,
//! pseudo transformations and modifications, with exhaustive axiom checkers.
//!
//! Conventions, fixed once and used everywhere:
//! * a 1-cell `u` points `src1(u) -> tgt1(u)`; `hcomp1(u, v)` is `u ∘ v`
//!   ("u after v"), defined when `src1(u) = tgt1(v)`;
//! * `vcomp(b, a)` is `b · a` ("b after a");
//! * the associativity constraint is `a_{u,v,w}: u∘(v∘w) => (u∘v)∘w`, the
//!   unit constraints are `l_u: 1∘u => u` and `r_u: u∘1 => u`;
//! * equalities of pasting composites are evaluated against left-nested
//!   bracketing; see [`crate::coherence`].

use std::collections::HashMap;

use crate::cat::{CategoryBuilder, CompTable, FiniteCategory};
use crate::report::{Error, Report, Result};

#[derive(Debug, Clone)]
pub struct FiniteBicategory {
    pub object_names: Vec<String>,
    pub one_names: Vec<String>,
    pub one_src: Vec<u32>,
    pub one_tgt: Vec<u32>,
    pub two_names: Vec<String>,
    pub two_src: Vec<u32>,
    pub two_tgt: Vec<u32>,
    /// identity 1-cell per object
    pub id1: Vec<u32>,
    /// identity 2-cell per 1-cell
    pub id2: Vec<u32>,
    /// vertical composition of 2-cells
    pub vcomp: CompTable,
    /// horizontal composition of 1-cells
    pub hcomp1: CompTable,
    /// horizontal composition of 2-cells
    pub hcomp2: CompTable,
    /// `a_{u,v,w}: u∘(v∘w) => (u∘v)∘w` per composable 1-cell triple
    pub assoc: HashMap<(u32, u32, u32), u32>,
    pub assoc_inv: HashMap<(u32, u32, u32), u32>,
    /// `l_u: 1∘u => u` per 1-cell
    pub lunit: Vec<u32>,
    pub lunit_inv: Vec<u32>,
    /// `r_u: u∘1 => u` per 1-cell
    pub runit: Vec<u32>,
    pub runit_inv: Vec<u32>,
}

impl FiniteBicategory {
    pub fn n_objects(&self) -> usize {
        self.object_names.len()
    }
    pub fn n_one(&self) -> usize {
        self.one_names.len()
    }
    pub fn n_two(&self) -> usize {
        self.two_names.len()
    }
    pub fn src1(&self, u: u32) -> u32 {
        self.one_src[u as usize]
    }
    pub fn tgt1(&self, u: u32) -> u32 {
        self.one_tgt[u as usize]
    }
    pub fn src2(&self, f: u32) -> u32 {
        self.two_src[f as usize]
    }
    pub fn tgt2(&self, f: u32) -> u32 {
        self.two_tgt[f as usize]
    }
    pub fn one_name(&self, u: u32) -> &str {
        &self.one_names[u as usize]
    }
    pub fn two_name(&self, f: u32) -> &str {
        &self.two_names[f as usize]
    }

    pub fn h1(&self, u: u32, v: u32) -> u32 {
        self.hcomp1.get(u, v).unwrap_or_else(|| {
            panic!("hcomp1 undefined: {} . {}", self.one_name(u), self.one_name(v))
        })
    }

    pub fn h2(&self, f: u32, g: u32) -> u32 {
        self.hcomp2.get(f, g).unwrap_or_else(|| {
            panic!("hcomp2 undefined: {} . {}", self.two_name(f), self.two_name(g))
        })
    }

    pub fn v2(&self, g: u32, f: u32) -> u32 {
        self.vcomp.get(g, f).unwrap_or_else(|| {
            panic!("vcomp undefined: {} . {}", self.two_name(g), self.two_name(f))
        })
    }

    pub fn a(&self, u: u32, v: u32, w: u32) -> u32 {
        *self.assoc.get(&(u, v, w)).expect("associator present")
    }

    pub fn a_inv(&self, u: u32, v: u32, w: u32) -> u32 {
        *self.assoc_inv.get(&(u, v, w)).expect("associator inverse present")
    }

    /// whisker on the left: `u ∘ f`
    pub fn wl(&self, u: u32, f: u32) -> u32 {
        self.h2(self.id2[u as usize], f)
    }

    /// whisker on the right: `f ∘ v`
    pub fn wr(&self, f: u32, v: u32) -> u32 {
        self.h2(f, self.id2[v as usize])
    }

    /// vertical composite of a chain `[f1, f2, ..]` meaning `..· f2 · f1`
    /// (first entry applied first).
    pub fn v2_chain(&self, chain: &[u32]) -> u32 {
        let mut it = chain.iter();
        let mut acc = *it.next().expect("nonempty chain");
        for &f in it {
            acc = self.v2(f, acc);
        }
        acc
    }

    pub fn two_cells_between(&self, u: u32, v: u32) -> Vec<u32> {
        (0..self.n_two() as u32).filter(|&f| self.src2(f) == u && self.tgt2(f) == v).collect()
    }

    /// inverse table for 2-cells (vertical inverses)
    pub fn two_inverses(&self) -> Vec<Option<u32>> {
        let mut by_boundary: HashMap<(u32, u32), Vec<u32>> = HashMap::new();
        for f in 0..self.n_two() as u32 {
            by_boundary.entry((self.src2(f), self.tgt2(f))).or_default().push(f);
        }
        let mut inv = vec![None; self.n_two()];
        for f in 0..self.n_two() as u32 {
            let (s, t) = (self.src2(f), self.tgt2(f));
            if let Some(cands) = by_boundary.get(&(t, s)) {
                for &g in cands {
                    if self.vcomp.get(g, f) == Some(self.id2[s as usize])
                        && self.vcomp.get(f, g) == Some(self.id2[t as usize])
                    {
                        inv[f as usize] = Some(g);
                        break;
                    }
                }
            }
        }
        inv
    }

    /// The hom-category between an ordered pair of objects, together with the
    /// global ids of its objects (1-cells) and morphisms (2-cells).
    pub fn hom_category(&self, y: u32, x: u32) -> (FiniteCategory, Vec<u32>, Vec<u32>) {
        let ones: Vec<u32> =
            (0..self.n_one() as u32).filter(|&u| self.src1(u) == y && self.tgt1(u) == x).collect();
        let twos: Vec<u32> = (0..self.n_two() as u32)
            .filter(|&f| ones.contains(&self.src2(f)))
            .collect();
        let one_pos: HashMap<u32, u32> =
            ones.iter().enumerate().map(|(i, &u)| (u, i as u32)).collect();
        let two_pos: HashMap<u32, u32> =
            twos.iter().enumerate().map(|(i, &f)| (f, i as u32)).collect();
        let mut b = CategoryBuilder::new();
        for &u in &ones {
            b.object(self.one_name(u));
        }
        for &f in &twos {
            b.morphism(self.two_name(f), one_pos[&self.src2(f)], one_pos[&self.tgt2(f)]);
        }
        for &u in &ones {
            b.set_identity(one_pos[&u], two_pos[&self.id2[u as usize]]);
        }
        for &g in &twos {
            for &f in &twos {
                if let Some(gf) = self.vcomp.get(g, f) {
                    b.set_comp(two_pos[&g], two_pos[&f], two_pos[&gf]);
                }
            }
        }
        (b.build().expect("hom category structure"), ones, twos)
    }

    fn check_structure(&self) -> Result<()> {
        let (no, n1, n2) = (self.n_objects() as u32, self.n_one() as u32, self.n_two() as u32);
        for u in 0..n1 {
            if self.src1(u) >= no || self.tgt1(u) >= no {
                return Err(Error::Structure(format!("1-cell {} dangles", self.one_name(u))));
            }
        }
        for f in 0..n2 {
            if self.src2(f) >= n1 || self.tgt2(f) >= n1 {
                return Err(Error::Structure(format!("2-cell {} dangles", self.two_name(f))));
            }
            let (s, t) = (self.src2(f), self.tgt2(f));
            if self.src1(s) != self.src1(t) || self.tgt1(s) != self.tgt1(t) {
                return Err(Error::Structure(format!("2-cell {} is not parallel", self.two_name(f))));
            }
        }
        if self.id1.len() != no as usize || self.id2.len() != n1 as usize {
            return Err(Error::Structure("identity tables not total".into()));
        }
        for x in 0..no {
            let i = self.id1[x as usize];
            if i >= n1 || self.src1(i) != x || self.tgt1(i) != x {
                return Err(Error::Structure(format!(
                    "identity 1-cell of {} malformed",
                    self.object_names[x as usize]
                )));
            }
        }
        for u in 0..n1 {
            let i = self.id2[u as usize];
            if i >= n2 || self.src2(i) != u || self.tgt2(i) != u {
                return Err(Error::Structure(format!("identity 2-cell of {} malformed", self.one_name(u))));
            }
        }
        // totality of the three composition tables
        for g in 0..n2 {
            for f in 0..n2 {
                let defined = self.vcomp.get(g, f).is_some();
                let composable = self.src2(g) == self.tgt2(f);
                if defined != composable {
                    return Err(Error::Structure(format!(
                        "vcomp definedness wrong at ({}, {})",
                        self.two_name(g),
                        self.two_name(f)
                    )));
                }
                if defined {
                    let gf = self.vcomp.get(g, f).unwrap();
                    if gf >= n2 || self.src2(gf) != self.src2(f) || self.tgt2(gf) != self.tgt2(g) {
                        return Err(Error::Structure(format!(
                            "vcomp boundary wrong at ({}, {})",
                            self.two_name(g),
                            self.two_name(f)
                        )));
                    }
                }
            }
        }
        for u in 0..n1 {
            for v in 0..n1 {
                let defined = self.hcomp1.get(u, v).is_some();
                let composable = self.src1(u) == self.tgt1(v);
                if defined != composable {
                    return Err(Error::Structure(format!(
                        "hcomp1 definedness wrong at ({}, {})",
                        self.one_name(u),
                        self.one_name(v)
                    )));
                }
                if defined {
                    let uv = self.hcomp1.get(u, v).unwrap();
                    if uv >= n1 || self.src1(uv) != self.src1(v) || self.tgt1(uv) != self.tgt1(u) {
                        return Err(Error::Structure(format!(
                            "hcomp1 boundary wrong at ({}, {})",
                            self.one_name(u),
                            self.one_name(v)
                        )));
                    }
                }
            }
        }
        for f in 0..n2 {
            for g in 0..n2 {
                let defined = self.hcomp2.get(f, g).is_some();
                let composable = self.src1(self.src2(f)) == self.tgt1(self.src2(g));
                if defined != composable {
                    return Err(Error::Structure(format!(
                        "hcomp2 definedness wrong at ({}, {})",
                        self.two_name(f),
                        self.two_name(g)
                    )));
                }
                if defined {
                    let fg = self.hcomp2.get(f, g).unwrap();
                    let want_src = self.h1(self.src2(f), self.src2(g));
                    let want_tgt = self.h1(self.tgt2(f), self.tgt2(g));
                    if fg >= n2 || self.src2(fg) != want_src || self.tgt2(fg) != want_tgt {
                        return Err(Error::Structure(format!(
                            "hcomp2 boundary wrong at ({}, {})",
                            self.two_name(f),
                            self.two_name(g)
                        )));
                    }
                }
            }
        }
        // constraints total with consistent boundaries and stored inverses
        for u in 0..n1 {
            for v in 0..n1 {
                if self.src1(u) != self.tgt1(v) {
                    continue;
                }
                for w in 0..n1 {
                    if self.src1(v) != self.tgt1(w) {
                        continue;
                    }
                    let Some(&c) = self.assoc.get(&(u, v, w)) else {
                        return Err(Error::Structure(format!(
                            "associator missing at ({}, {}, {})",
                            self.one_name(u),
                            self.one_name(v),
                            self.one_name(w)
                        )));
                    };
                    let want_src = self.h1(u, self.h1(v, w));
                    let want_tgt = self.h1(self.h1(u, v), w);
                    if self.src2(c) != want_src || self.tgt2(c) != want_tgt {
                        return Err(Error::Structure(format!(
                            "associator boundary wrong at ({}, {}, {})",
                            self.one_name(u),
                            self.one_name(v),
                            self.one_name(w)
                        )));
                    }
                    let Some(&ci) = self.assoc_inv.get(&(u, v, w)) else {
                        return Err(Error::Structure("associator inverse missing".into()));
                    };
                    if self.vcomp.get(ci, c) != Some(self.id2[want_src as usize])
                        || self.vcomp.get(c, ci) != Some(self.id2[want_tgt as usize])
                    {
                        return Err(Error::Structure(format!(
                            "stored associator inverse wrong at ({}, {}, {})",
                            self.one_name(u),
                            self.one_name(v),
                            self.one_name(w)
                        )));
                    }
                }
            }
        }
        if self.lunit.len() != n1 as usize || self.runit.len() != n1 as usize {
            return Err(Error::Structure("unit constraint tables not total".into()));
        }
        for u in 0..n1 {
            let l = self.lunit[u as usize];
            let lw = self.h1(self.id1[self.tgt1(u) as usize], u);
            if self.src2(l) != lw || self.tgt2(l) != u {
                return Err(Error::Structure(format!("l boundary wrong at {}", self.one_name(u))));
            }
            let li = self.lunit_inv[u as usize];
            if self.vcomp.get(li, l) != Some(self.id2[lw as usize])
                || self.vcomp.get(l, li) != Some(self.id2[u as usize])
            {
                return Err(Error::Structure(format!("stored l inverse wrong at {}", self.one_name(u))));
            }
            let r = self.runit[u as usize];
            let rw = self.h1(u, self.id1[self.src1(u) as usize]);
            if self.src2(r) != rw || self.tgt2(r) != u {
                return Err(Error::Structure(format!("r boundary wrong at {}", self.one_name(u))));
            }
            let ri = self.runit_inv[u as usize];
            if self.vcomp.get(ri, r) != Some(self.id2[rw as usize])
                || self.vcomp.get(r, ri) != Some(self.id2[u as usize])
            {
                return Err(Error::Structure(format!("stored r inverse wrong at {}", self.one_name(u))));
            }
        }
        Ok(())
    }

    /// Full bicategory validation: hom-categories are categories, horizontal
    /// composition is functorial (interchange), the constraints are natural,
    /// and pentagon and triangle hold for every composable tuple.
    pub fn validate(&self) -> Result<Report> {
        self.check_structure()?;
        let n1 = self.n_one() as u32;
        let n2 = self.n_two() as u32;
        // each hom is a category
        for f in 0..n2 {
            let s = self.src2(f);
            let t = self.tgt2(f);
            if self.v2(f, self.id2[s as usize]) != f || self.v2(self.id2[t as usize], f) != f {
                return Ok(Report::fail("vertical unit law", vec![("cell", self.two_name(f).into())]));
            }
        }
        for h in 0..n2 {
            for g in 0..n2 {
                if self.src2(h) != self.tgt2(g) {
                    continue;
                }
                let hg = self.v2(h, g);
                for f in 0..n2 {
                    if self.src2(g) != self.tgt2(f) {
                        continue;
                    }
                    if self.v2(h, self.v2(g, f)) != self.v2(hg, f) {
                        return Ok(Report::fail(
                            "vertical associativity",
                            vec![("h", self.two_name(h).into()), ("g", self.two_name(g).into()), ("f", self.two_name(f).into())],
                        ));
                    }
                }
            }
        }
        // hcomp preserves identities
        for u in 0..n1 {
            for v in 0..n1 {
                if self.src1(u) != self.tgt1(v) {
                    continue;
                }
                if self.h2(self.id2[u as usize], self.id2[v as usize]) != self.id2[self.h1(u, v) as usize] {
                    return Ok(Report::fail(
                        "horizontal composition preserves identity 2-cells",
                        vec![("u", self.one_name(u).into()), ("v", self.one_name(v).into())],
                    ));
                }
            }
        }
        // interchange
        for f2 in 0..n2 {
            for f1 in 0..n2 {
                if self.src2(f2) != self.tgt2(f1) {
                    continue;
                }
                let fv = self.v2(f2, f1);
                for g2 in 0..n2 {
                    if self.src1(self.src2(f1)) != self.tgt1(self.src2(g2)) {
                        continue;
                    }
                    for g1 in 0..n2 {
                        if self.src2(g2) != self.tgt2(g1) {
                            continue;
                        }
                        let gv = self.v2(g2, g1);
                        let lhs = self.h2(fv, gv);
                        let rhs = self.v2(self.h2(f2, g2), self.h2(f1, g1));
                        if lhs != rhs {
                            return Ok(Report::fail(
                                "interchange",
                                vec![
                                    ("f2", self.two_name(f2).into()),
                                    ("f1", self.two_name(f1).into()),
                                    ("g2", self.two_name(g2).into()),
                                    ("g1", self.two_name(g1).into()),
                                ],
                            ));
                        }
                    }
                }
            }
        }
        // naturality of l and r
        for f in 0..n2 {
            let (u, u2) = (self.src2(f), self.tgt2(f));
            let one_t = self.id2[self.id1[self.tgt1(u) as usize] as usize];
            if self.v2(self.lunit[u2 as usize], self.h2(one_t, f)) != self.v2(f, self.lunit[u as usize]) {
                return Ok(Report::fail("naturality of l", vec![("cell", self.two_name(f).into())]));
            }
            let one_s = self.id2[self.id1[self.src1(u) as usize] as usize];
            if self.v2(self.runit[u2 as usize], self.h2(f, one_s)) != self.v2(f, self.runit[u as usize]) {
                return Ok(Report::fail("naturality of r", vec![("cell", self.two_name(f).into())]));
            }
        }
        // naturality of the associator
        for f in 0..n2 {
            for g in 0..n2 {
                if self.src1(self.src2(f)) != self.tgt1(self.src2(g)) {
                    continue;
                }
                for h in 0..n2 {
                    if self.src1(self.src2(g)) != self.tgt1(self.src2(h)) {
                        continue;
                    }
                    let (u, v, w) = (self.src2(f), self.src2(g), self.src2(h));
                    let (u2, v2, w2) = (self.tgt2(f), self.tgt2(g), self.tgt2(h));
                    let lhs = self.v2(self.a(u2, v2, w2), self.h2(f, self.h2(g, h)));
                    let rhs = self.v2(self.h2(self.h2(f, g), h), self.a(u, v, w));
                    if lhs != rhs {
                        return Ok(Report::fail(
                            "naturality of the associator",
                            vec![("f", self.two_name(f).into()), ("g", self.two_name(g).into()), ("h", self.two_name(h).into())],
                        ));
                    }
                }
            }
        }
        // triangle
        for u in 0..n1 {
            for v in 0..n1 {
                if self.src1(u) != self.tgt1(v) {
                    continue;
                }
                let y = self.src1(u);
                let lhs = self.v2(self.h2(self.runit[u as usize], self.id2[v as usize]), self.a(u, self.id1[y as usize], v));
                let rhs = self.h2(self.id2[u as usize], self.lunit[v as usize]);
                if lhs != rhs {
                    return Ok(Report::fail(
                        "triangle",
                        vec![("u", self.one_name(u).into()), ("v", self.one_name(v).into())],
                    ));
                }
            }
        }
        // pentagon
        for u in 0..n1 {
            for v in 0..n1 {
                if self.src1(u) != self.tgt1(v) {
                    continue;
                }
                for w in 0..n1 {
                    if self.src1(v) != self.tgt1(w) {
                        continue;
                    }
                    for s in 0..n1 {
                        if self.src1(w) != self.tgt1(s) {
                            continue;
                        }
                        let lhs = self.v2(self.a(self.h1(u, v), w, s), self.a(u, v, self.h1(w, s)));
                        let rhs = self.v2_chain(&[
                            self.wl(u, self.a(v, w, s)),
                            self.a(u, self.h1(v, w), s),
                            self.wr(self.a(u, v, w), s),
                        ]);
                        if lhs != rhs {
                            return Ok(Report::fail(
                                "pentagon",
                                vec![
                                    ("u", self.one_name(u).into()),
                                    ("v", self.one_name(v).into()),
                                    ("w", self.one_name(w).into()),
                                    ("s", self.one_name(s).into()),
                                ],
                            ));
                        }
                    }
                }
            }
        }
        Ok(Report::Pass)
    }
}

/// A category viewed as a bicategory all of whose 2-cells are identities.
pub fn locally_discrete(c: &FiniteCategory) -> FiniteBicategory {
    let n1 = c.n_morphisms();
    let mut vcomp = CompTable::new(n1);
    let mut hcomp1 = CompTable::new(n1);
    let mut hcomp2 = CompTable::new(n1);
    let mut assoc = HashMap::new();
    for u in 0..n1 as u32 {
        for v in 0..n1 as u32 {
            if let Some(uv) = c.comp_opt(u, v) {
                hcomp1.set(u, v, uv);
                hcomp2.set(u, v, uv);
                for w in 0..n1 as u32 {
                    if let Some(vw) = c.comp_opt(v, w) {
                        let t = c.comp(u, vw);
                        assoc.insert((u, v, w), t);
                    }
                }
            }
            if u == v {
                vcomp.set(u, v, u);
            }
        }
    }
    FiniteBicategory {
        object_names: c.object_names.clone(),
        one_names: c.morphism_names.clone(),
        one_src: c.mor_src.clone(),
        one_tgt: c.mor_tgt.clone(),
        two_names: c.morphism_names.iter().map(|n| format!("1[{n}]")).collect(),
        two_src: (0..n1 as u32).collect(),
        two_tgt: (0..n1 as u32).collect(),
        id1: c.identity.clone(),
        id2: (0..n1 as u32).collect(),
        vcomp,
        hcomp1,
        hcomp2,
        assoc_inv: assoc.clone(),
        assoc,
        lunit: c.mor_src.iter().enumerate().map(|(u, _)| u as u32).collect(),
        lunit_inv: (0..n1 as u32).collect(),
        runit: (0..n1 as u32).collect(),
        runit_inv: (0..n1 as u32).collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum FunctorKind {
    Lax,
    Homomorphism,
    NormalHomomorphism,
    Strict,
}

/// A lax functor `F: A -> B` with comparison cells
/// `hat_comp(u,v): Fu ∘ Fv => F(u∘v)` and `hat_unit(x): 1_{Fx} => F(1_x)`.
#[derive(Debug, Clone)]
pub struct LaxFunctor {
    pub ob: Vec<u32>,
    pub one: Vec<u32>,
    pub two: Vec<u32>,
    pub hat_comp: HashMap<(u32, u32), u32>,
    pub hat_comp_inv: HashMap<(u32, u32), u32>,
    pub hat_unit: Vec<u32>,
    pub hat_unit_inv: Vec<u32>,
    pub kind: FunctorKind,
}

impl LaxFunctor {
    pub fn identity(a: &FiniteBicategory) -> Self {
        let hats: HashMap<(u32, u32), u32> = (0..a.n_one() as u32)
            .flat_map(|u| (0..a.n_one() as u32).map(move |v| (u, v)))
            .filter(|&(u, v)| a.src1(u) == a.tgt1(v))
            .map(|(u, v)| ((u, v), a.id2[a.h1(u, v) as usize]))
            .collect();
        LaxFunctor {
            ob: (0..a.n_objects() as u32).collect(),
            one: (0..a.n_one() as u32).collect(),
            two: (0..a.n_two() as u32).collect(),
            hat_comp: hats.clone(),
            hat_comp_inv: hats,
            hat_unit: (0..a.n_objects()).map(|x| a.id2[a.id1[x] as usize]).collect(),
            hat_unit_inv: (0..a.n_objects()).map(|x| a.id2[a.id1[x] as usize]).collect(),
            kind: FunctorKind::Strict,
        }
    }

    pub fn ob(&self, x: u32) -> u32 {
        self.ob[x as usize]
    }
    pub fn one(&self, u: u32) -> u32 {
        self.one[u as usize]
    }
    pub fn two(&self, f: u32) -> u32 {
        self.two[f as usize]
    }
    pub fn hat(&self, u: u32, v: u32) -> u32 {
        *self.hat_comp.get(&(u, v)).expect("comparison cell present")
    }
    pub fn hat_inv(&self, u: u32, v: u32) -> u32 {
        *self.hat_comp_inv.get(&(u, v)).expect("comparison inverse present")
    }

    pub fn validate(&self, a: &FiniteBicategory, b: &FiniteBicategory) -> Result<Report> {
        if self.ob.len() != a.n_objects() || self.one.len() != a.n_one() || self.two.len() != a.n_two() {
            return Err(Error::Structure("lax functor tables not total".into()));
        }
        if self.hat_unit.len() != a.n_objects() {
            return Err(Error::Structure("unit comparison table not total".into()));
        }
        for u in 0..a.n_one() as u32 {
            if b.src1(self.one(u)) != self.ob(a.src1(u)) || b.tgt1(self.one(u)) != self.ob(a.tgt1(u)) {
                return Ok(Report::fail("1-cell boundary preserved", vec![("u", a.one_name(u).into())]));
            }
        }
        for f in 0..a.n_two() as u32 {
            if b.src2(self.two(f)) != self.one(a.src2(f)) || b.tgt2(self.two(f)) != self.one(a.tgt2(f)) {
                return Ok(Report::fail("2-cell boundary preserved", vec![("f", a.two_name(f).into())]));
            }
        }
        // functor on each hom
        for u in 0..a.n_one() as u32 {
            if self.two(a.id2[u as usize]) != b.id2[self.one(u) as usize] {
                return Ok(Report::fail("identity 2-cells preserved", vec![("u", a.one_name(u).into())]));
            }
        }
        for g in 0..a.n_two() as u32 {
            for f in 0..a.n_two() as u32 {
                if a.src2(g) != a.tgt2(f) {
                    continue;
                }
                if self.two(a.v2(g, f)) != b.v2(self.two(g), self.two(f)) {
                    return Ok(Report::fail(
                        "vertical composition preserved",
                        vec![("g", a.two_name(g).into()), ("f", a.two_name(f).into())],
                    ));
                }
            }
        }
        // comparison cell boundaries, naturality, coherence
        for u in 0..a.n_one() as u32 {
            for v in 0..a.n_one() as u32 {
                if a.src1(u) != a.tgt1(v) {
                    continue;
                }
                let Some(&h) = self.hat_comp.get(&(u, v)) else {
                    return Err(Error::Structure(format!(
                        "comparison cell missing at ({}, {})",
                        a.one_name(u),
                        a.one_name(v)
                    )));
                };
                let want_src = b.h1(self.one(u), self.one(v));
                let want_tgt = self.one(a.h1(u, v));
                if b.src2(h) != want_src || b.tgt2(h) != want_tgt {
                    return Ok(Report::fail(
                        "comparison cell boundary",
                        vec![("u", a.one_name(u).into()), ("v", a.one_name(v).into())],
                    ));
                }
            }
        }
        for x in 0..a.n_objects() as u32 {
            let h = self.hat_unit[x as usize];
            if b.src2(h) != b.id1[self.ob(x) as usize] || b.tgt2(h) != self.one(a.id1[x as usize]) {
                return Ok(Report::fail("unit comparison boundary", vec![("x", a.object_names[x as usize].clone())]));
            }
        }
        // naturality of hat_comp
        for f in 0..a.n_two() as u32 {
            for g in 0..a.n_two() as u32 {
                let (u, v) = (a.src2(f), a.src2(g));
                if a.src1(u) != a.tgt1(v) {
                    continue;
                }
                let (u2, v2) = (a.tgt2(f), a.tgt2(g));
                let lhs = b.v2(self.hat(u2, v2), b.h2(self.two(f), self.two(g)));
                let rhs = b.v2(self.two(a.h2(f, g)), self.hat(u, v));
                if lhs != rhs {
                    return Ok(Report::fail(
                        "naturality of the comparison cells",
                        vec![("f", a.two_name(f).into()), ("g", a.two_name(g).into())],
                    ));
                }
            }
        }
        // associativity coherence
        for u in 0..a.n_one() as u32 {
            for v in 0..a.n_one() as u32 {
                if a.src1(u) != a.tgt1(v) {
                    continue;
                }
                for w in 0..a.n_one() as u32 {
                    if a.src1(v) != a.tgt1(w) {
                        continue;
                    }
                    let lhs = b.v2_chain(&[
                        b.a(self.one(u), self.one(v), self.one(w)),
                        b.h2(self.hat(u, v), b.id2[self.one(w) as usize]),
                        self.hat(a.h1(u, v), w),
                    ]);
                    let rhs = b.v2_chain(&[
                        b.h2(b.id2[self.one(u) as usize], self.hat(v, w)),
                        self.hat(u, a.h1(v, w)),
                        self.two(a.a(u, v, w)),
                    ]);
                    if lhs != rhs {
                        return Ok(Report::fail(
                            "comparison coherence with the associator",
                            vec![("u", a.one_name(u).into()), ("v", a.one_name(v).into()), ("w", a.one_name(w).into())],
                        ));
                    }
                }
            }
        }
        // unit coherence
        for u in 0..a.n_one() as u32 {
            let x = a.tgt1(u);
            let y = a.src1(u);
            let fu = self.one(u);
            let lhs = b.v2_chain(&[
                b.h2(self.hat_unit[x as usize], b.id2[fu as usize]),
                self.hat(a.id1[x as usize], u),
                self.two(a.lunit[u as usize]),
            ]);
            if lhs != b.lunit[fu as usize] {
                return Ok(Report::fail("left unit coherence", vec![("u", a.one_name(u).into())]));
            }
            let rhs = b.v2_chain(&[
                b.h2(b.id2[fu as usize], self.hat_unit[y as usize]),
                self.hat(u, a.id1[y as usize]),
                self.two(a.runit[u as usize]),
            ]);
            if rhs != b.runit[fu as usize] {
                return Ok(Report::fail("right unit coherence", vec![("u", a.one_name(u).into())]));
            }
        }
        // kind consistency
        if self.kind >= FunctorKind::Homomorphism {
            for (&(u, v), &h) in &self.hat_comp {
                let Some(&hi) = self.hat_comp_inv.get(&(u, v)) else {
                    return Err(Error::Structure("homomorphism missing comparison inverses".into()));
                };
                if b.v2(hi, h) != b.id2[b.src2(h) as usize] || b.v2(h, hi) != b.id2[b.tgt2(h) as usize] {
                    return Ok(Report::fail(
                        "comparison cells invertible",
                        vec![("u", a.one_name(u).into()), ("v", a.one_name(v).into())],
                    ));
                }
            }
            for x in 0..a.n_objects() {
                let h = self.hat_unit[x];
                let hi = self.hat_unit_inv[x];
                if b.v2(hi, h) != b.id2[b.src2(h) as usize] || b.v2(h, hi) != b.id2[b.tgt2(h) as usize] {
                    return Ok(Report::fail("unit comparison invertible", vec![("x", a.object_names[x].clone())]));
                }
            }
        }
        if self.kind >= FunctorKind::NormalHomomorphism {
            for x in 0..a.n_objects() as u32 {
                if self.one(a.id1[x as usize]) != b.id1[self.ob(x) as usize]
                    || self.hat_unit[x as usize] != b.id2[b.id1[self.ob(x) as usize] as usize]
                {
                    return Ok(Report::fail("normality", vec![("x", a.object_names[x as usize].clone())]));
                }
            }
        }
        if self.kind == FunctorKind::Strict {
            for (&(u, v), &h) in &self.hat_comp {
                let _ = (u, v);
                if h != b.id2[b.src2(h) as usize] {
                    return Ok(Report::fail("strictness", vec![("cell", b.two_name(h).into())]));
                }
            }
        }
        Ok(Report::Pass)
    }
}

/// `G ∘ F` for lax functors `F: A -> B`, `G: B -> C`.
pub fn compose_hom(g: &LaxFunctor, f: &LaxFunctor, c: &FiniteBicategory) -> LaxFunctor {
    let ob: Vec<u32> = f.ob.iter().map(|&x| g.ob(x)).collect();
    let one: Vec<u32> = f.one.iter().map(|&u| g.one(u)).collect();
    let two: Vec<u32> = f.two.iter().map(|&t| g.two(t)).collect();
    let mut hat_comp = HashMap::new();
    let mut hat_comp_inv = HashMap::new();
    for (&(u, v), &fh) in &f.hat_comp {
        let gh = g.hat(f.one(u), f.one(v));
        hat_comp.insert((u, v), c.v2(g.two(fh), gh));
        if let (Some(&fhi), Some(&ghi)) =
            (f.hat_comp_inv.get(&(u, v)), g.hat_comp_inv.get(&(f.one(u), f.one(v))))
        {
            hat_comp_inv.insert((u, v), c.v2(ghi, g.two(fhi)));
        }
    }
    let hat_unit: Vec<u32> = (0..f.ob.len())
        .map(|x| {
            let fx = f.ob[x];
            c.v2(g.two(f.hat_unit[x]), g.hat_unit[fx as usize])
        })
        .collect();
    let hat_unit_inv: Vec<u32> = (0..f.ob.len())
        .map(|x| {
            let fx = f.ob[x];
            c.v2(g.hat_unit_inv[fx as usize], g.two(f.hat_unit_inv[x]))
        })
        .collect();
    LaxFunctor {
        ob,
        one,
        two,
        hat_comp,
        hat_comp_inv,
        hat_unit,
        hat_unit_inv,
        kind: f.kind.min(g.kind),
    }
}

/// A pseudo transformation `α: F => F'` with invertible naturality cells
/// `hat(u): α_y ∘ F u => F' u ∘ α_x` for `u: x -> y`.
#[derive(Debug, Clone)]
pub struct PseudoTransformation {
    pub component: Vec<u32>,
    pub hat: Vec<u32>,
    pub hat_inv: Vec<u32>,
}

impl PseudoTransformation {
    pub fn identity(f: &LaxFunctor, b: &FiniteBicategory) -> Self {
        let component: Vec<u32> = f.ob.iter().map(|&x| b.id1[x as usize]).collect();
        let mut hat = Vec::with_capacity(f.one.len());
        let mut hat_inv = Vec::with_capacity(f.one.len());
        for &fu in &f.one {
            // 1 ∘ Fu => Fu => Fu ∘ 1
            hat.push(b.v2(b.runit_inv[fu as usize], b.lunit[fu as usize]));
            hat_inv.push(b.v2(b.lunit_inv[fu as usize], b.runit[fu as usize]));
        }
        PseudoTransformation { component, hat, hat_inv }
    }

    pub fn at(&self, x: u32) -> u32 {
        self.component[x as usize]
    }
    pub fn hat_at(&self, u: u32) -> u32 {
        self.hat[u as usize]
    }
    pub fn hat_inv_at(&self, u: u32) -> u32 {
        self.hat_inv[u as usize]
    }

    pub fn validate(
        &self,
        a: &FiniteBicategory,
        b: &FiniteBicategory,
        f: &LaxFunctor,
        f2: &LaxFunctor,
    ) -> Result<Report> {
        if self.component.len() != a.n_objects() || self.hat.len() != a.n_one() || self.hat_inv.len() != a.n_one() {
            return Err(Error::Structure("transformation tables not total".into()));
        }
        for x in 0..a.n_objects() as u32 {
            let c = self.at(x);
            if b.src1(c) != f.ob(x) || b.tgt1(c) != f2.ob(x) {
                return Ok(Report::fail("component boundary", vec![("x", a.object_names[x as usize].clone())]));
            }
        }
        for u in 0..a.n_one() as u32 {
            let (x, y) = (a.src1(u), a.tgt1(u));
            let h = self.hat_at(u);
            let want_src = b.h1(self.at(y), f.one(u));
            let want_tgt = b.h1(f2.one(u), self.at(x));
            if b.src2(h) != want_src || b.tgt2(h) != want_tgt {
                return Ok(Report::fail("naturality cell boundary", vec![("u", a.one_name(u).into())]));
            }
            let hi = self.hat_inv_at(u);
            if b.v2(hi, h) != b.id2[want_src as usize] || b.v2(h, hi) != b.id2[want_tgt as usize] {
                return Ok(Report::fail("naturality cell invertible", vec![("u", a.one_name(u).into())]));
            }
        }
        // naturality in 2-cells
        for t in 0..a.n_two() as u32 {
            let (u, u2) = (a.src2(t), a.tgt2(t));
            let (x, y) = (a.src1(u), a.tgt1(u));
            let lhs = b.v2(self.hat_at(u2), b.h2(b.id2[self.at(y) as usize], f.two(t)));
            let rhs = b.v2(b.h2(f2.two(t), b.id2[self.at(x) as usize]), self.hat_at(u));
            if lhs != rhs {
                return Ok(Report::fail("naturality in 2-cells", vec![("cell", a.two_name(t).into())]));
            }
        }
        // compatibility with composition
        for v in 0..a.n_one() as u32 {
            for u in 0..a.n_one() as u32 {
                if a.src1(v) != a.tgt1(u) {
                    continue;
                }
                let (x, y, z) = (a.src1(u), a.src1(v), a.tgt1(v));
                let vu = a.h1(v, u);
                let lhs = b.v2(
                    self.hat_at(vu),
                    b.h2(b.id2[self.at(z) as usize], f.hat(v, u)),
                );
                let rhs = b.v2_chain(&[
                    b.a(self.at(z), f.one(v), f.one(u)),
                    b.h2(self.hat_at(v), b.id2[f.one(u) as usize]),
                    b.a_inv(f2.one(v), self.at(y), f.one(u)),
                    b.h2(b.id2[f2.one(v) as usize], self.hat_at(u)),
                    b.a(f2.one(v), f2.one(u), self.at(x)),
                    b.h2(f2.hat(v, u), b.id2[self.at(x) as usize]),
                ]);
                if lhs != rhs {
                    return Ok(Report::fail(
                        "compatibility with horizontal composition",
                        vec![("v", a.one_name(v).into()), ("u", a.one_name(u).into())],
                    ));
                }
            }
        }
        // compatibility with units
        for x in 0..a.n_objects() as u32 {
            let ax = self.at(x);
            let lhs = b.v2(self.hat_at(a.id1[x as usize]), b.h2(b.id2[ax as usize], f.hat_unit[x as usize]));
            let rhs = b.v2_chain(&[
                b.runit[ax as usize],
                b.lunit_inv[ax as usize],
                b.h2(f2.hat_unit[x as usize], b.id2[ax as usize]),
            ]);
            if lhs != rhs {
                return Ok(Report::fail("compatibility with units", vec![("x", a.object_names[x as usize].clone())]));
            }
        }
        Ok(Report::Pass)
    }
}

/// Vertical composite `α' ∘ α: F => F''` of pseudo transformations.
pub fn compose_pseudo(
    alpha2: &PseudoTransformation,
    alpha: &PseudoTransformation,
    a: &FiniteBicategory,
    b: &FiniteBicategory,
    f: &LaxFunctor,
    f1: &LaxFunctor,
    f2: &LaxFunctor,
) -> PseudoTransformation {
    let component: Vec<u32> = (0..a.n_objects())
        .map(|x| b.h1(alpha2.component[x], alpha.component[x]))
        .collect();
    let mut hat = Vec::with_capacity(a.n_one());
    let mut hat_inv = Vec::with_capacity(a.n_one());
    for u in 0..a.n_one() as u32 {
        let (x, y) = (a.src1(u), a.tgt1(u));
        let (ay2, ay) = (alpha2.at(y), alpha.at(y));
        let ax2 = alpha2.component[x as usize];
        let ax = alpha.component[x as usize];
        let fwd = b.v2_chain(&[
            b.a_inv(ay2, ay, f.one(u)),
            b.h2(b.id2[ay2 as usize], alpha.hat_at(u)),
            b.a(ay2, f1.one(u), ax),
            b.h2(alpha2.hat_at(u), b.id2[ax as usize]),
            b.a_inv(f2.one(u), ax2, ax),
        ]);
        let bwd = b.v2_chain(&[
            b.a(f2.one(u), ax2, ax),
            b.h2(alpha2.hat_inv_at(u), b.id2[ax as usize]),
            b.a_inv(ay2, f1.one(u), ax),
            b.h2(b.id2[ay2 as usize], alpha.hat_inv_at(u)),
            b.a(ay2, ay, f.one(u)),
        ]);
        hat.push(fwd);
        hat_inv.push(bwd);
    }
    PseudoTransformation { component, hat, hat_inv }
}

/// Whisker a pseudo transformation `α: F => F': A -> B` with a homomorphism
/// `G: B -> C` on the outside: `Gα: GF => GF'`.
pub fn whisker_hom_transf(
    g: &LaxFunctor,
    alpha: &PseudoTransformation,
    a: &FiniteBicategory,
    _b: &FiniteBicategory,
    c: &FiniteBicategory,
    f: &LaxFunctor,
    f2: &LaxFunctor,
) -> PseudoTransformation {
    let component: Vec<u32> = alpha.component.iter().map(|&u| g.one(u)).collect();
    let mut hat = Vec::with_capacity(a.n_one());
    let mut hat_inv = Vec::with_capacity(a.n_one());
    for u in 0..a.n_one() as u32 {
        let (x, y) = (a.src1(u), a.tgt1(u));
        let fwd = c.v2_chain(&[
            g.hat(alpha.at(y), f.one(u)),
            g.two(alpha.hat_at(u)),
            g.hat_inv(f2.one(u), alpha.at(x)),
        ]);
        let bwd = c.v2_chain(&[
            g.hat(f2.one(u), alpha.at(x)),
            g.two(alpha.hat_inv_at(u)),
            g.hat_inv(alpha.at(y), f.one(u)),
        ]);
        hat.push(fwd);
        hat_inv.push(bwd);
    }
    PseudoTransformation { component, hat, hat_inv }
}

/// Whisker a pseudo transformation `β: G => G': B -> C` with a lax functor
/// `F: A -> B` on the inside: `βF: GF => G'F`.
pub fn whisker_transf_hom(
    beta: &PseudoTransformation,
    f: &LaxFunctor,
    a: &FiniteBicategory,
) -> PseudoTransformation {
    PseudoTransformation {
        component: (0..a.n_objects()).map(|x| beta.component[f.ob[x] as usize]).collect(),
        hat: (0..a.n_one()).map(|u| beta.hat[f.one[u] as usize]).collect(),
        hat_inv: (0..a.n_one()).map(|u| beta.hat_inv[f.one[u] as usize]).collect(),
    }
}

/// A modification `φ: α ⇛ α'` as one 2-cell per object.
#[derive(Debug, Clone)]
pub struct Modification {
    pub component: Vec<u32>,
}

impl Modification {
    pub fn identity(alpha: &PseudoTransformation, b: &FiniteBicategory) -> Self {
        Modification { component: alpha.component.iter().map(|&c| b.id2[c as usize]).collect() }
    }

    pub fn at(&self, x: u32) -> u32 {
        self.component[x as usize]
    }

    pub fn validate(
        &self,
        a: &FiniteBicategory,
        b: &FiniteBicategory,
        f: &LaxFunctor,
        f2: &LaxFunctor,
        alpha: &PseudoTransformation,
        alpha2: &PseudoTransformation,
    ) -> Result<Report> {
        if self.component.len() != a.n_objects() {
            return Err(Error::Structure("modification table not total".into()));
        }
        for x in 0..a.n_objects() as u32 {
            let c = self.at(x);
            if b.src2(c) != alpha.at(x) || b.tgt2(c) != alpha2.at(x) {
                return Ok(Report::fail("modification component boundary", vec![("x", a.object_names[x as usize].clone())]));
            }
        }
        for u in 0..a.n_one() as u32 {
            let (x, y) = (a.src1(u), a.tgt1(u));
            let lhs = b.v2(b.h2(b.id2[f2.one(u) as usize], self.at(x)), alpha.hat_at(u));
            let rhs = b.v2(alpha2.hat_at(u), b.h2(self.at(y), b.id2[f.one(u) as usize]));
            if lhs != rhs {
                return Ok(Report::fail("modification square", vec![("u", a.one_name(u).into())]));
            }
        }
        Ok(Report::Pass)
    }

    pub fn vcomp(&self, other: &Modification, b: &FiniteBicategory) -> Modification {
        // self · other
        Modification {
            component: self
                .component
                .iter()
                .zip(&other.component)
                .map(|(&s, &o)| b.v2(s, o))
                .collect(),
        }
    }

    pub fn hcomp(&self, other: &Modification, b: &FiniteBicategory) -> Modification {
        Modification {
            component: self
                .component
                .iter()
                .zip(&other.component)
                .map(|(&s, &o)| b.h2(s, o))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::{cyclic_group_category, ordinal_category};

    #[test]
    fn locally_discrete_validates() {
        let b = locally_discrete(&ordinal_category(2));
        assert!(b.validate().unwrap().is_pass());
        let g = locally_discrete(&cyclic_group_category(3));
        assert!(g.validate().unwrap().is_pass());
    }

    #[test]
    fn identity_functor_and_transformation() {
        let b = locally_discrete(&ordinal_category(1));
        let f = LaxFunctor::identity(&b);
        assert!(f.validate(&b, &b).unwrap().is_pass());
        let t = PseudoTransformation::identity(&f, &b);
        assert!(t.validate(&b, &b, &f, &f).unwrap().is_pass());
        let m = Modification::identity(&t, &b);
        assert!(m.validate(&b, &b, &f, &f, &t, &t).unwrap().is_pass());
    }

    #[test]
    fn strict_functors_compose_strictly() {
        let b = locally_discrete(&cyclic_group_category(2));
        let f = LaxFunctor::identity(&b);
        let g = LaxFunctor::identity(&b);
        let gf = compose_hom(&g, &f, &b);
        assert_eq!(gf.kind, FunctorKind::Strict);
        assert!(gf.validate(&b, &b).unwrap().is_pass());
    }

    #[test]
    fn composite_transformation_validates() {
        let b = locally_discrete(&ordinal_category(1));
        let f = LaxFunctor::identity(&b);
        let t = PseudoTransformation::identity(&f, &b);
        let tt = compose_pseudo(&t, &t, &b, &b, &f, &f, &f);
        assert!(tt.validate(&b, &b, &f, &f).unwrap().is_pass());
        // components are α x ∘ 1 x, not simplified
        for x in 0..b.n_objects() as u32 {
            assert_eq!(tt.at(x), b.h1(b.id1[x as usize], b.id1[x as usize]));
        }
    }
}

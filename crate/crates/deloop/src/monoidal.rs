//! Finite (braided) monoidal categories, their one-object deloopings, finite
//! powers, and the tensor/unit face and degeneracy functors between powers.
//!
//! The braided interchange convention is fixed globally: the braiding is
//! applied to the middle pair, `(x⊗y)⊗(z⊗w) -> (x⊗z)⊗(y⊗w)` routing
//! through `(1 ⊗ c_{y,z}) ⊗ 1`.

use std::collections::HashMap;

use crate::bicat::{FiniteBicategory, FunctorKind, LaxFunctor};
use crate::cat::{CategoryBuilder, CompTable, FiniteCategory, Functor};
use crate::coherence::{canonical_iso, Word};
use crate::group::FiniteAbelianGroup;
use crate::report::{Error, Report, Result};

#[derive(Debug, Clone)]
pub struct MonoidalCategory {
    pub base: FiniteCategory,
    /// `tensor_ob[x][y] = x ⊗ y`
    pub tensor_ob: Vec<Vec<u32>>,
    /// `(f, g) -> f ⊗ g`, total on all morphism pairs
    pub tensor_mor: CompTable,
    pub unit: u32,
    /// `a_{x,y,z}: x⊗(y⊗z) -> (x⊗y)⊗z`
    pub assoc: HashMap<(u32, u32, u32), u32>,
    pub assoc_inv: HashMap<(u32, u32, u32), u32>,
    /// `l_x: I⊗x -> x`
    pub lunit: Vec<u32>,
    pub lunit_inv: Vec<u32>,
    /// `r_x: x⊗I -> x`
    pub runit: Vec<u32>,
    pub runit_inv: Vec<u32>,
}

impl MonoidalCategory {
    pub fn tob(&self, x: u32, y: u32) -> u32 {
        self.tensor_ob[x as usize][y as usize]
    }

    pub fn tmor(&self, f: u32, g: u32) -> u32 {
        self.tensor_mor.get(f, g).expect("tensor total on morphisms")
    }

    pub fn a(&self, x: u32, y: u32, z: u32) -> u32 {
        *self.assoc.get(&(x, y, z)).expect("associator present")
    }

    pub fn n_objects(&self) -> usize {
        self.base.n_objects()
    }

    pub fn n_morphisms(&self) -> usize {
        self.base.n_morphisms()
    }

    /// Left-nested tensor of a list of objects; the empty list is the unit.
    pub fn tensor_chain(&self, xs: &[u32]) -> u32 {
        match xs.split_first() {
            None => self.unit,
            Some((&first, rest)) => rest.iter().fold(first, |acc, &x| self.tob(acc, x)),
        }
    }

    pub fn validate(&self) -> Result<Report> {
        self.base.validate()?.into_result()?;
        let no = self.n_objects() as u32;
        let nm = self.n_morphisms() as u32;
        if self.tensor_ob.len() != no as usize || self.tensor_ob.iter().any(|r| r.len() != no as usize) {
            return Err(Error::Structure("object tensor table not total".into()));
        }
        // tensor is a functor base × base -> base
        for f in 0..nm {
            for g in 0..nm {
                let Some(fg) = self.tensor_mor.get(f, g) else {
                    return Err(Error::Structure("morphism tensor table not total".into()));
                };
                if self.base.src(fg) != self.tob(self.base.src(f), self.base.src(g))
                    || self.base.tgt(fg) != self.tob(self.base.tgt(f), self.base.tgt(g))
                {
                    return Ok(Report::fail(
                        "tensor preserves boundaries",
                        vec![("f", self.base.morphism_names[f as usize].clone()), ("g", self.base.morphism_names[g as usize].clone())],
                    ));
                }
            }
        }
        for x in 0..no {
            for y in 0..no {
                if self.tmor(self.base.id(x), self.base.id(y)) != self.base.id(self.tob(x, y)) {
                    return Ok(Report::fail(
                        "tensor preserves identities",
                        vec![("x", self.base.object_names[x as usize].clone()), ("y", self.base.object_names[y as usize].clone())],
                    ));
                }
            }
        }
        for f2 in 0..nm {
            for f1 in 0..nm {
                let Some(fv) = self.base.comp_opt(f2, f1) else { continue };
                for g2 in 0..nm {
                    for g1 in 0..nm {
                        let Some(gv) = self.base.comp_opt(g2, g1) else { continue };
                        if self.tmor(fv, gv)
                            != self.base.comp(self.tmor(f2, g2), self.tmor(f1, g1))
                        {
                            return Ok(Report::fail(
                                "tensor preserves composition",
                                vec![("f2", f2.to_string()), ("f1", f1.to_string()), ("g2", g2.to_string()), ("g1", g1.to_string())],
                            ));
                        }
                    }
                }
            }
        }
        // constraints: boundaries, inverses, naturality
        for x in 0..no {
            for y in 0..no {
                for z in 0..no {
                    let Some(&c) = self.assoc.get(&(x, y, z)) else {
                        return Err(Error::Structure("associator not total".into()));
                    };
                    if self.base.src(c) != self.tob(x, self.tob(y, z))
                        || self.base.tgt(c) != self.tob(self.tob(x, y), z)
                    {
                        return Ok(Report::fail(
                            "associator boundary",
                            vec![("x", x.to_string()), ("y", y.to_string()), ("z", z.to_string())],
                        ));
                    }
                    let Some(&ci) = self.assoc_inv.get(&(x, y, z)) else {
                        return Err(Error::Structure("associator inverse not total".into()));
                    };
                    if self.base.comp_opt(ci, c) != Some(self.base.id(self.base.src(c)))
                        || self.base.comp_opt(c, ci) != Some(self.base.id(self.base.tgt(c)))
                    {
                        return Ok(Report::fail(
                            "associator invertible",
                            vec![("x", x.to_string()), ("y", y.to_string()), ("z", z.to_string())],
                        ));
                    }
                }
            }
        }
        for x in 0..no {
            let l = self.lunit[x as usize];
            if self.base.src(l) != self.tob(self.unit, x) || self.base.tgt(l) != x {
                return Ok(Report::fail("left unit boundary", vec![("x", x.to_string())]));
            }
            let li = self.lunit_inv[x as usize];
            if self.base.comp_opt(li, l) != Some(self.base.id(self.base.src(l)))
                || self.base.comp_opt(l, li) != Some(self.base.id(x))
            {
                return Ok(Report::fail("left unit invertible", vec![("x", x.to_string())]));
            }
            let r = self.runit[x as usize];
            if self.base.src(r) != self.tob(x, self.unit) || self.base.tgt(r) != x {
                return Ok(Report::fail("right unit boundary", vec![("x", x.to_string())]));
            }
            let ri = self.runit_inv[x as usize];
            if self.base.comp_opt(ri, r) != Some(self.base.id(self.base.src(r)))
                || self.base.comp_opt(r, ri) != Some(self.base.id(x))
            {
                return Ok(Report::fail("right unit invertible", vec![("x", x.to_string())]));
            }
        }
        // naturality of a and of l, r
        for f in 0..nm {
            for g in 0..nm {
                for h in 0..nm {
                    let (x, y, z) = (self.base.src(f), self.base.src(g), self.base.src(h));
                    let (x2, y2, z2) = (self.base.tgt(f), self.base.tgt(g), self.base.tgt(h));
                    let lhs = self.base.comp(self.a(x2, y2, z2), self.tmor(f, self.tmor(g, h)));
                    let rhs = self.base.comp(self.tmor(self.tmor(f, g), h), self.a(x, y, z));
                    if lhs != rhs {
                        return Ok(Report::fail(
                            "naturality of the associator",
                            vec![("f", f.to_string()), ("g", g.to_string()), ("h", h.to_string())],
                        ));
                    }
                }
            }
        }
        for f in 0..nm {
            let (x, x2) = (self.base.src(f), self.base.tgt(f));
            let idu = self.base.id(self.unit);
            if self.base.comp(self.lunit[x2 as usize], self.tmor(idu, f))
                != self.base.comp(f, self.lunit[x as usize])
            {
                return Ok(Report::fail("naturality of l", vec![("f", f.to_string())]));
            }
            if self.base.comp(self.runit[x2 as usize], self.tmor(f, idu))
                != self.base.comp(f, self.runit[x as usize])
            {
                return Ok(Report::fail("naturality of r", vec![("f", f.to_string())]));
            }
        }
        // pentagon and triangle
        for x in 0..no {
            for y in 0..no {
                for z in 0..no {
                    for w in 0..no {
                        let lhs = self.base.comp(self.a(self.tob(x, y), z, w), self.a(x, y, self.tob(z, w)));
                        let rhs = self.base.comp_chain(
                            &[
                                self.tmor(self.base.id(x), self.a(y, z, w)),
                                self.a(x, self.tob(y, z), w),
                                self.tmor(self.a(x, y, z), self.base.id(w)),
                            ],
                            0,
                        );
                        if lhs != rhs {
                            return Ok(Report::fail(
                                "pentagon",
                                vec![("x", x.to_string()), ("y", y.to_string()), ("z", z.to_string()), ("w", w.to_string())],
                            ));
                        }
                    }
                    let _ = z;
                }
                let lhs = self.base.comp(
                    self.tmor(self.runit[x as usize], self.base.id(y)),
                    self.a(x, self.unit, y),
                );
                let rhs = self.tmor(self.base.id(x), self.lunit[y as usize]);
                if lhs != rhs {
                    return Ok(Report::fail("triangle", vec![("x", x.to_string()), ("y", y.to_string())]));
                }
            }
        }
        Ok(Report::Pass)
    }
}

#[derive(Debug, Clone)]
pub struct BraidedMonoidalCategory {
    pub m: MonoidalCategory,
    /// `c_{x,y}: x⊗y -> y⊗x`
    pub braid: Vec<Vec<u32>>,
    pub braid_inv: Vec<Vec<u32>>,
}

impl BraidedMonoidalCategory {
    pub fn c(&self, x: u32, y: u32) -> u32 {
        self.braid[x as usize][y as usize]
    }

    pub fn validate(&self) -> Result<Report> {
        let r = self.m.validate()?;
        if !r.is_pass() {
            return Ok(r);
        }
        let m = &self.m;
        let no = m.n_objects() as u32;
        let nm = m.n_morphisms() as u32;
        if self.braid.len() != no as usize || self.braid.iter().any(|r| r.len() != no as usize) {
            return Err(Error::Structure("braiding table not total".into()));
        }
        for x in 0..no {
            for y in 0..no {
                let c = self.c(x, y);
                if m.base.src(c) != m.tob(x, y) || m.base.tgt(c) != m.tob(y, x) {
                    return Ok(Report::fail(
                        "braiding component boundary",
                        vec![("x", x.to_string()), ("y", y.to_string())],
                    ));
                }
                let ci = self.braid_inv[x as usize][y as usize];
                if m.base.comp_opt(ci, c) != Some(m.base.id(m.tob(x, y)))
                    || m.base.comp_opt(c, ci) != Some(m.base.id(m.tob(y, x)))
                {
                    return Ok(Report::fail(
                        "braiding invertible",
                        vec![("x", x.to_string()), ("y", y.to_string())],
                    ));
                }
            }
        }
        // naturality of the braiding
        for f in 0..nm {
            for g in 0..nm {
                let (x, y) = (m.base.src(f), m.base.src(g));
                let (x2, y2) = (m.base.tgt(f), m.base.tgt(g));
                if m.base.comp(self.c(x2, y2), m.tmor(f, g)) != m.base.comp(m.tmor(g, f), self.c(x, y)) {
                    return Ok(Report::fail(
                        "naturality of the braiding",
                        vec![("f", f.to_string()), ("g", g.to_string())],
                    ));
                }
            }
        }
        // two hexagons
        for x in 0..no {
            for y in 0..no {
                for z in 0..no {
                    // braid x past y⊗z
                    let lhs = m.base.comp(*m.assoc_inv.get(&(y, z, x)).unwrap(), self.c(x, m.tob(y, z)));
                    let rhs = m.base.comp_chain(
                        &[
                            m.a(x, y, z),
                            m.tmor(self.c(x, y), m.base.id(z)),
                            *m.assoc_inv.get(&(y, x, z)).unwrap(),
                            m.tmor(m.base.id(y), self.c(x, z)),
                        ],
                        0,
                    );
                    if lhs != rhs {
                        return Ok(Report::fail(
                            "hexagon (object past a tensor)",
                            vec![("x", x.to_string()), ("y", y.to_string()), ("z", z.to_string())],
                        ));
                    }
                    // braid x⊗y past z
                    let lhs = m.base.comp(m.a(z, x, y), self.c(m.tob(x, y), z));
                    let rhs = m.base.comp_chain(
                        &[
                            *m.assoc_inv.get(&(x, y, z)).unwrap(),
                            m.tmor(m.base.id(x), self.c(y, z)),
                            m.a(x, z, y),
                            m.tmor(self.c(x, z), m.base.id(y)),
                        ],
                        0,
                    );
                    if lhs != rhs {
                        return Ok(Report::fail(
                            "hexagon (tensor past an object)",
                            vec![("x", x.to_string()), ("y", y.to_string()), ("z", z.to_string())],
                        ));
                    }
                }
                let _ = y;
            }
            // compatibility with the unit: c_{I,x} = r⁻¹ l and c_{x,I} = l⁻¹ r
            let want_iu = m.base.comp(m.runit_inv[x as usize], m.lunit[x as usize]);
            if self.c(m.unit, x) != want_iu {
                return Ok(Report::fail("braiding at the unit (left)", vec![("x", x.to_string())]));
            }
            let want_ui = m.base.comp(m.lunit_inv[x as usize], m.runit[x as usize]);
            if self.c(x, m.unit) != want_ui {
                return Ok(Report::fail("braiding at the unit (right)", vec![("x", x.to_string())]));
            }
        }
        Ok(Report::Pass)
    }

    /// The middle-four interchange `(x⊗y)⊗(z⊗w) -> (x⊗z)⊗(y⊗w)`, braiding
    /// the middle pair.
    pub fn interchange(&self, bi: &FiniteBicategory, x: u32, y: u32, z: u32, w: u32) -> u32 {
        let m = &self.m;
        let w1 = Word::comp(
            Word::comp(Word::Cell(x), Word::Cell(y)),
            Word::comp(Word::Cell(z), Word::Cell(w)),
        );
        let w2 = Word::comp(
            Word::comp(Word::Cell(x), Word::comp(Word::Cell(y), Word::Cell(z))),
            Word::Cell(w),
        );
        let w3 = Word::comp(
            Word::comp(Word::Cell(x), Word::comp(Word::Cell(z), Word::Cell(y))),
            Word::Cell(w),
        );
        let w4 = Word::comp(
            Word::comp(Word::Cell(x), Word::Cell(z)),
            Word::comp(Word::Cell(y), Word::Cell(w)),
        );
        let first = canonical_iso(bi, &w1, &w2).expect("parallel words");
        let mid = m.tmor(m.tmor(m.base.id(x), self.c(y, z)), m.base.id(w));
        let last = canonical_iso(bi, &w3, &w4).expect("parallel words");
        m.base.comp_chain(&[first, mid, last], 0)
    }
}

/// The delooping: one object, 1-cells the objects of `M`, 2-cells its
/// morphisms. Cell ids coincide with those of `M`.
pub fn deloop(m: &MonoidalCategory) -> FiniteBicategory {
    let no = m.n_objects();
    let _nm = m.n_morphisms();
    let mut hcomp1 = CompTable::new(no);
    for x in 0..no as u32 {
        for y in 0..no as u32 {
            hcomp1.set(x, y, m.tob(x, y));
        }
    }
    FiniteBicategory {
        object_names: vec!["*".into()],
        one_names: m.base.object_names.clone(),
        one_src: vec![0; no],
        one_tgt: vec![0; no],
        two_names: m.base.morphism_names.clone(),
        two_src: m.base.mor_src.clone(),
        two_tgt: m.base.mor_tgt.clone(),
        id1: vec![m.unit],
        id2: m.base.identity.clone(),
        vcomp: m.base.comp.clone(),
        hcomp1,
        hcomp2: m.tensor_mor.clone(),
        assoc: m.assoc.clone(),
        assoc_inv: m.assoc_inv.clone(),
        lunit: m.lunit.clone(),
        lunit_inv: m.lunit_inv.clone(),
        runit: m.runit.clone(),
        runit_inv: m.runit_inv.clone(),
    }
}

/// Reads a one-object bicategory back as a monoidal category; inverse to
/// [`deloop`] on the nose.
pub fn undeloop(b: &FiniteBicategory) -> Result<MonoidalCategory> {
    if b.n_objects() != 1 {
        return Err(Error::Structure("undeloop needs a one-object bicategory".into()));
    }
    let mut cb = CategoryBuilder::new();
    for u in 0..b.n_one() {
        cb.object(b.one_names[u].clone());
    }
    let n2 = b.n_two();
    let mut base_names = Vec::with_capacity(n2);
    for f in 0..n2 as u32 {
        base_names.push(f);
        cb.morphism(b.two_names[f as usize].clone(), b.src2(f), b.tgt2(f));
    }
    for u in 0..b.n_one() as u32 {
        cb.set_identity(u, b.id2[u as usize]);
    }
    for g in 0..n2 as u32 {
        for f in 0..n2 as u32 {
            if let Some(gf) = b.vcomp.get(g, f) {
                cb.set_comp(g, f, gf);
            }
        }
    }
    let base = cb.build()?;
    let mut tensor_ob = vec![vec![0u32; b.n_one()]; b.n_one()];
    for x in 0..b.n_one() as u32 {
        for y in 0..b.n_one() as u32 {
            tensor_ob[x as usize][y as usize] = b.h1(x, y);
        }
    }
    Ok(MonoidalCategory {
        base,
        tensor_ob,
        tensor_mor: b.hcomp2.clone(),
        unit: b.id1[0],
        assoc: b.assoc.clone(),
        assoc_inv: b.assoc_inv.clone(),
        lunit: b.lunit.clone(),
        lunit_inv: b.lunit_inv.clone(),
        runit: b.runit.clone(),
        runit_inv: b.runit_inv.clone(),
    })
}

/// Strict one-object braided monoidal category of an abelian group: one
/// object, morphisms the group elements, composition and tensor both the
/// addition, braiding the identity.
pub fn abelian_group_braided(a: &FiniteAbelianGroup) -> BraidedMonoidalCategory {
    let n = a.order() as u32;
    let mut cb = CategoryBuilder::new();
    let x = cb.object("*");
    for k in 0..n {
        cb.morphism(format!("{k}"), x, x);
    }
    cb.set_identity(x, a.zero());
    for g in 0..n {
        for f in 0..n {
            cb.set_comp(g, f, a.add(g, f));
        }
    }
    let base = cb.build_validated().expect("group category is lawful");
    let mut tensor_mor = CompTable::new(n as usize);
    for f in 0..n {
        for g in 0..n {
            tensor_mor.set(f, g, a.add(f, g));
        }
    }
    let zero = a.zero();
    let m = MonoidalCategory {
        base,
        tensor_ob: vec![vec![0]],
        tensor_mor,
        unit: 0,
        assoc: HashMap::from([((0, 0, 0), zero)]),
        assoc_inv: HashMap::from([((0, 0, 0), zero)]),
        lunit: vec![zero],
        lunit_inv: vec![zero],
        runit: vec![zero],
        runit_inv: vec![zero],
    };
    BraidedMonoidalCategory { m, braid: vec![vec![zero]], braid_inv: vec![vec![zero]] }
}

/// Discrete monoidal category on a group given by its multiplication table:
/// objects the group elements, morphisms only identities.
pub fn discrete_group_monoidal(mult: &[Vec<u32>], unit: u32) -> MonoidalCategory {
    let n = mult.len();
    let mut cb = CategoryBuilder::new();
    for g in 0..n {
        cb.object(format!("g{g}"));
    }
    for g in 0..n as u32 {
        cb.morphism(format!("1[g{g}]"), g, g);
        cb.set_identity(g, g);
        cb.set_comp(g, g, g);
    }
    let base = cb.build_validated().expect("discrete category is lawful");
    let mut tensor_mor = CompTable::new(n);
    for f in 0..n as u32 {
        for g in 0..n as u32 {
            tensor_mor.set(f, g, mult[f as usize][g as usize]);
        }
    }
    let mut assoc = HashMap::new();
    for x in 0..n as u32 {
        for y in 0..n as u32 {
            for z in 0..n as u32 {
                let t = mult[mult[x as usize][y as usize] as usize][z as usize];
                assoc.insert((x, y, z), t);
            }
        }
    }
    MonoidalCategory {
        base,
        tensor_ob: mult.to_vec(),
        tensor_mor,
        unit,
        assoc_inv: assoc.clone(),
        assoc,
        lunit: (0..n as u32).collect(),
        lunit_inv: (0..n as u32).collect(),
        runit: (0..n as u32).collect(),
        runit_inv: (0..n as u32).collect(),
    }
}

/// Equip a discrete monoidal category with the identity braiding; valid
/// exactly when the underlying group is abelian.
pub fn discrete_with_identity_braiding(m: MonoidalCategory) -> BraidedMonoidalCategory {
    let n = m.n_objects();
    let mut braid = vec![vec![0u32; n]; n];
    for x in 0..n {
        for y in 0..n {
            braid[x][y] = m.base.id(m.tob(x as u32, y as u32));
        }
    }
    BraidedMonoidalCategory { m, braid_inv: braid.clone(), braid }
}

/// Index arithmetic for the `p`-fold power `M^p` with componentwise tensor.
#[derive(Debug, Clone)]
pub struct MonoidalPower {
    pub cat: MonoidalCategory,
    pub braided: Option<(Vec<Vec<u32>>, Vec<Vec<u32>>)>,
    pub arity: usize,
    ob_radix: usize,
    mor_radix: usize,
}

impl MonoidalPower {
    pub fn ob_tuple(&self, mut id: u32) -> Vec<u32> {
        let mut t = Vec::with_capacity(self.arity);
        for _ in 0..self.arity {
            t.push(id % self.ob_radix as u32);
            id /= self.ob_radix as u32;
        }
        t
    }

    pub fn ob_index(&self, t: &[u32]) -> u32 {
        t.iter().rev().fold(0u32, |acc, &x| acc * self.ob_radix as u32 + x)
    }

    pub fn mor_tuple(&self, mut id: u32) -> Vec<u32> {
        let mut t = Vec::with_capacity(self.arity);
        for _ in 0..self.arity {
            t.push(id % self.mor_radix as u32);
            id /= self.mor_radix as u32;
        }
        t
    }

    pub fn mor_index(&self, t: &[u32]) -> u32 {
        t.iter().rev().fold(0u32, |acc, &f| acc * self.mor_radix as u32 + f)
    }
}

/// The `p`-fold power `(M^p, ⊗)` with componentwise structure; `p = 0` is
/// the terminal monoidal category.
pub fn power_monoidal(b: &BraidedMonoidalCategory, p: usize) -> MonoidalPower {
    let m = &b.m;
    let no = m.n_objects();
    let nm = m.n_morphisms();
    let pno = no.pow(p as u32);
    let pnm = nm.pow(p as u32);
    let ob_tuple = |mut id: usize| {
        let mut t = Vec::with_capacity(p);
        for _ in 0..p {
            t.push((id % no) as u32);
            id /= no;
        }
        t
    };
    let mor_tuple = |mut id: usize| {
        let mut t = Vec::with_capacity(p);
        for _ in 0..p {
            t.push((id % nm) as u32);
            id /= nm;
        }
        t
    };
    let ob_index = |t: &[u32]| t.iter().rev().fold(0u32, |acc, &x| acc * no as u32 + x);
    let mor_index = |t: &[u32]| t.iter().rev().fold(0u32, |acc, &f| acc * nm as u32 + f);
    let mut cb = CategoryBuilder::new();
    for x in 0..pno {
        let t = ob_tuple(x);
        cb.object(format!(
            "({})",
            t.iter().map(|&c| m.base.object_names[c as usize].clone()).collect::<Vec<_>>().join(",")
        ));
    }
    for f in 0..pnm {
        let t = mor_tuple(f);
        let src: Vec<u32> = t.iter().map(|&c| m.base.src(c)).collect();
        let tgt: Vec<u32> = t.iter().map(|&c| m.base.tgt(c)).collect();
        cb.morphism(
            format!(
                "({})",
                t.iter().map(|&c| m.base.morphism_names[c as usize].clone()).collect::<Vec<_>>().join(",")
            ),
            ob_index(&src),
            ob_index(&tgt),
        );
    }
    for x in 0..pno {
        let t = ob_tuple(x);
        let idt: Vec<u32> = t.iter().map(|&c| m.base.id(c)).collect();
        cb.set_identity(x as u32, mor_index(&idt));
    }
    for g in 0..pnm {
        let gt = mor_tuple(g);
        'inner: for f in 0..pnm {
            let ft = mor_tuple(f);
            let mut comp = Vec::with_capacity(p);
            for k in 0..p {
                match m.base.comp_opt(gt[k], ft[k]) {
                    Some(c) => comp.push(c),
                    None => continue 'inner,
                }
            }
            cb.set_comp(g as u32, f as u32, mor_index(&comp));
        }
    }
    let base = cb.build().expect("power category structure");
    let mut tensor_ob = vec![vec![0u32; pno]; pno];
    for x in 0..pno {
        let xt = ob_tuple(x);
        for y in 0..pno {
            let yt = ob_tuple(y);
            let t: Vec<u32> = xt.iter().zip(&yt).map(|(&a2, &b2)| m.tob(a2, b2)).collect();
            tensor_ob[x][y] = ob_index(&t);
        }
    }
    let mut tensor_mor = CompTable::new(pnm);
    for f in 0..pnm {
        let ft = mor_tuple(f);
        for g in 0..pnm {
            let gt = mor_tuple(g);
            let t: Vec<u32> = ft.iter().zip(&gt).map(|(&a2, &b2)| m.tmor(a2, b2)).collect();
            tensor_mor.set(f as u32, g as u32, mor_index(&t));
        }
    }
    let mut assoc = HashMap::new();
    let mut assoc_inv = HashMap::new();
    for x in 0..pno {
        let xt = ob_tuple(x);
        for y in 0..pno {
            let yt = ob_tuple(y);
            for z in 0..pno {
                let zt = ob_tuple(z);
                let fwd: Vec<u32> =
                    (0..p).map(|k| m.a(xt[k], yt[k], zt[k])).collect();
                let bwd: Vec<u32> =
                    (0..p).map(|k| *m.assoc_inv.get(&(xt[k], yt[k], zt[k])).unwrap()).collect();
                assoc.insert((x as u32, y as u32, z as u32), mor_index(&fwd));
                assoc_inv.insert((x as u32, y as u32, z as u32), mor_index(&bwd));
            }
        }
    }
    let unit_t = vec![m.unit; p];
    let per_object = |table: &Vec<u32>| -> Vec<u32> {
        (0..pno)
            .map(|x| {
                let xt = ob_tuple(x);
                let t: Vec<u32> = xt.iter().map(|&c| table[c as usize]).collect();
                mor_index(&t)
            })
            .collect()
    };
    let cat = MonoidalCategory {
        base,
        tensor_ob,
        tensor_mor,
        unit: ob_index(&unit_t),
        assoc,
        assoc_inv,
        lunit: per_object(&m.lunit),
        lunit_inv: per_object(&m.lunit_inv),
        runit: per_object(&m.runit),
        runit_inv: per_object(&m.runit_inv),
    };
    let mut braid = vec![vec![0u32; pno]; pno];
    let mut braid_inv = vec![vec![0u32; pno]; pno];
    for x in 0..pno {
        let xt = ob_tuple(x);
        for y in 0..pno {
            let yt = ob_tuple(y);
            let fwd: Vec<u32> = (0..p).map(|k| b.c(xt[k], yt[k])).collect();
            let bwd: Vec<u32> =
                (0..p).map(|k| b.braid_inv[xt[k] as usize][yt[k] as usize]).collect();
            braid[x][y] = mor_index(&fwd);
            braid_inv[x][y] = mor_index(&bwd);
        }
    }
    MonoidalPower {
        cat,
        braided: Some((braid, braid_inv)),
        arity: p,
        ob_radix: no,
        mor_radix: nm,
    }
}

impl MonoidalPower {
    pub fn as_braided(&self) -> BraidedMonoidalCategory {
        let (braid, braid_inv) = self.braided.clone().expect("braided power");
        BraidedMonoidalCategory { m: self.cat.clone(), braid, braid_inv }
    }
}

/// A monoidal functor with explicit structure-isomorphism tables.
#[derive(Debug, Clone)]
pub struct MonoidalFunctor {
    pub functor: Functor,
    /// `str_comp[(x,y)]: Fx ⊗ Fy -> F(x⊗y)`
    pub str_comp: HashMap<(u32, u32), u32>,
    pub str_comp_inv: HashMap<(u32, u32), u32>,
    /// `str_unit: I -> F(I)`
    pub str_unit: u32,
    pub str_unit_inv: u32,
}

impl MonoidalFunctor {
    pub fn phi(&self, x: u32, y: u32) -> u32 {
        *self.str_comp.get(&(x, y)).expect("structure iso present")
    }

    pub fn validate(&self, s: &MonoidalCategory, t: &MonoidalCategory) -> Result<Report> {
        let r = self.functor.validate(&s.base, &t.base)?;
        if !r.is_pass() {
            return Ok(r);
        }
        let f = &self.functor;
        let no = s.n_objects() as u32;
        for x in 0..no {
            for y in 0..no {
                let Some(&p) = self.str_comp.get(&(x, y)) else {
                    return Err(Error::Structure("structure iso table not total".into()));
                };
                if t.base.src(p) != t.tob(f.ob(x), f.ob(y)) || t.base.tgt(p) != f.ob(s.tob(x, y)) {
                    return Ok(Report::fail(
                        "structure iso boundary",
                        vec![("x", x.to_string()), ("y", y.to_string())],
                    ));
                }
                let Some(&pi) = self.str_comp_inv.get(&(x, y)) else {
                    return Err(Error::Structure("structure iso inverses not total".into()));
                };
                if t.base.comp_opt(pi, p) != Some(t.base.id(t.base.src(p)))
                    || t.base.comp_opt(p, pi) != Some(t.base.id(t.base.tgt(p)))
                {
                    return Ok(Report::fail(
                        "structure iso invertible",
                        vec![("x", x.to_string()), ("y", y.to_string())],
                    ));
                }
            }
        }
        if t.base.src(self.str_unit) != t.unit || t.base.tgt(self.str_unit) != f.ob(s.unit) {
            return Ok(Report::fail("unit structure iso boundary", vec![]));
        }
        // naturality
        for fm in 0..s.n_morphisms() as u32 {
            for gm in 0..s.n_morphisms() as u32 {
                let (x, y) = (s.base.src(fm), s.base.src(gm));
                let (x2, y2) = (s.base.tgt(fm), s.base.tgt(gm));
                let lhs = t.base.comp(self.phi(x2, y2), t.tmor(f.mor(fm), f.mor(gm)));
                let rhs = t.base.comp(f.mor(s.tmor(fm, gm)), self.phi(x, y));
                if lhs != rhs {
                    return Ok(Report::fail(
                        "structure iso naturality",
                        vec![("f", fm.to_string()), ("g", gm.to_string())],
                    ));
                }
            }
        }
        // associativity hexagon
        for x in 0..no {
            for y in 0..no {
                for z in 0..no {
                    let lhs = t.base.comp_chain(
                        &[
                            t.tmor(t.base.id(f.ob(x)), self.phi(y, z)),
                            self.phi(x, s.tob(y, z)),
                            f.mor(s.a(x, y, z)),
                        ],
                        0,
                    );
                    let rhs = t.base.comp_chain(
                        &[
                            t.a(f.ob(x), f.ob(y), f.ob(z)),
                            t.tmor(self.phi(x, y), t.base.id(f.ob(z))),
                            self.phi(s.tob(x, y), z),
                        ],
                        0,
                    );
                    if lhs != rhs {
                        return Ok(Report::fail(
                            "structure iso associativity coherence",
                            vec![("x", x.to_string()), ("y", y.to_string()), ("z", z.to_string())],
                        ));
                    }
                }
            }
        }
        // unit squares
        for x in 0..no {
            let fx = f.ob(x);
            let lhs = t.base.comp_chain(
                &[t.tmor(self.str_unit, t.base.id(fx)), self.phi(s.unit, x), f.mor(s.lunit[x as usize])],
                0,
            );
            if lhs != t.lunit[fx as usize] {
                return Ok(Report::fail("unit square (left)", vec![("x", x.to_string())]));
            }
            let rhs = t.base.comp_chain(
                &[t.tmor(t.base.id(fx), self.str_unit), self.phi(x, s.unit), f.mor(s.runit[x as usize])],
                0,
            );
            if rhs != t.runit[fx as usize] {
                return Ok(Report::fail("unit square (right)", vec![("x", x.to_string())]));
            }
        }
        Ok(Report::Pass)
    }

    /// Deloop to a lax functor between the one-object bicategories.
    pub fn deloop(&self, s: &MonoidalCategory, t: &MonoidalCategory) -> LaxFunctor {
        let normal = self.functor.ob(s.unit) == t.unit && self.str_unit == t.base.id(t.unit);
        LaxFunctor {
            ob: vec![0],
            one: self.functor.ob.clone(),
            two: self.functor.mor.clone(),
            hat_comp: self.str_comp.clone(),
            hat_comp_inv: self.str_comp_inv.clone(),
            hat_unit: vec![self.str_unit],
            hat_unit_inv: vec![self.str_unit_inv],
            kind: if normal { FunctorKind::NormalHomomorphism } else { FunctorKind::Homomorphism },
        }
    }
}

/// The tensor face functor `d_i: (M^p, ⊗) -> (M^{p-1}, ⊗)`; the middle
/// faces tensor adjacent coordinates and their structure isomorphisms use
/// the braided middle-four interchange.
pub fn tensor_face_functor(
    b: &BraidedMonoidalCategory,
    source: &MonoidalPower,
    target: &MonoidalPower,
    i: usize,
) -> Result<MonoidalFunctor> {
    let p = source.arity;
    if target.arity + 1 != p || i > p {
        return Err(Error::Structure("face index out of range".into()));
    }
    let m = &b.m;
    let bi = deloop(m);
    let map_tuple = |t: &[u32], tensor: &dyn Fn(u32, u32) -> u32| -> Vec<u32> {
        if i == 0 {
            t[1..].to_vec()
        } else if i == p {
            t[..p - 1].to_vec()
        } else {
            let mut out = t[..i - 1].to_vec();
            out.push(tensor(t[i - 1], t[i]));
            out.extend_from_slice(&t[i + 1..]);
            out
        }
    };
    let ob: Vec<u32> = (0..source.cat.n_objects() as u32)
        .map(|x| target.ob_index(&map_tuple(&source.ob_tuple(x), &|a, c| m.tob(a, c))))
        .collect();
    let mor: Vec<u32> = (0..source.cat.n_morphisms() as u32)
        .map(|f| target.mor_index(&map_tuple(&source.mor_tuple(f), &|a, c| m.tmor(a, c))))
        .collect();
    let functor = Functor { ob, mor };
    let mut str_comp = HashMap::new();
    let mut str_comp_inv = HashMap::new();
    let inv = m.base.inverse_table();
    for x in 0..source.cat.n_objects() as u32 {
        let xt = source.ob_tuple(x);
        for y in 0..source.cat.n_objects() as u32 {
            let yt = source.ob_tuple(y);
            let comps: Vec<u32> = if i == 0 || i == p {
                (0..p - 1)
                    .map(|k| {
                        let kk = if i == 0 { k + 1 } else { k };
                        m.base.id(m.tob(xt[kk], yt[kk]))
                    })
                    .collect()
            } else {
                (0..p - 1)
                    .map(|k| {
                        use std::cmp::Ordering::*;
                        match (k + 1).cmp(&i) {
                            Less => m.base.id(m.tob(xt[k], yt[k])),
                            Equal => b.interchange(&bi, xt[i - 1], xt[i], yt[i - 1], yt[i]),
                            Greater => m.base.id(m.tob(xt[k + 1], yt[k + 1])),
                        }
                    })
                    .collect()
            };
            let phi = target.mor_index(&comps);
            let phi_inv =
                target.mor_index(&comps.iter().map(|&c| inv[c as usize].expect("iso")).collect::<Vec<_>>());
            str_comp.insert((x, y), phi);
            str_comp_inv.insert((x, y), phi_inv);
        }
    }
    let (str_unit, str_unit_inv) = if i == 0 || i == p {
        let u = target.cat.base.id(target.cat.unit);
        (u, u)
    } else {
        let comps: Vec<u32> = (0..p - 1)
            .map(|k| if k + 1 == i { m.lunit_inv[m.unit as usize] } else { m.base.id(m.unit) })
            .collect();
        let comps_inv: Vec<u32> = (0..p - 1)
            .map(|k| if k + 1 == i { m.lunit[m.unit as usize] } else { m.base.id(m.unit) })
            .collect();
        (target.mor_index(&comps), target.mor_index(&comps_inv))
    };
    Ok(MonoidalFunctor { functor, str_comp, str_comp_inv, str_unit, str_unit_inv })
}

/// The unit degeneracy functor `s_i: (M^p, ⊗) -> (M^{p+1}, ⊗)`, inserting
/// the unit after coordinate `i`.
pub fn unit_degeneracy(
    b: &BraidedMonoidalCategory,
    source: &MonoidalPower,
    target: &MonoidalPower,
    i: usize,
) -> Result<MonoidalFunctor> {
    let p = source.arity;
    if target.arity != p + 1 || i > p {
        return Err(Error::Structure("degeneracy index out of range".into()));
    }
    let m = &b.m;
    let insert = |t: &[u32], filler: u32| -> Vec<u32> {
        let mut out = t[..i].to_vec();
        out.push(filler);
        out.extend_from_slice(&t[i..]);
        out
    };
    let ob: Vec<u32> = (0..source.cat.n_objects() as u32)
        .map(|x| target.ob_index(&insert(&source.ob_tuple(x), m.unit)))
        .collect();
    let mor: Vec<u32> = (0..source.cat.n_morphisms() as u32)
        .map(|f| target.mor_index(&insert(&source.mor_tuple(f), m.base.id(m.unit))))
        .collect();
    let functor = Functor { ob, mor };
    let mut str_comp = HashMap::new();
    let mut str_comp_inv = HashMap::new();
    for x in 0..source.cat.n_objects() as u32 {
        let xt = source.ob_tuple(x);
        for y in 0..source.cat.n_objects() as u32 {
            let yt = source.ob_tuple(y);
            let ids: Vec<u32> = (0..p).map(|k| m.base.id(m.tob(xt[k], yt[k]))).collect();
            let phi = target.mor_index(&insert(&ids, m.lunit[m.unit as usize]));
            let phi_inv = target.mor_index(&insert(&ids, m.lunit_inv[m.unit as usize]));
            str_comp.insert((x, y), phi);
            str_comp_inv.insert((x, y), phi_inv);
        }
    }
    let str_unit = target.cat.base.id(target.cat.unit);
    Ok(MonoidalFunctor { functor, str_comp, str_comp_inv, str_unit, str_unit_inv: str_unit })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_is_braided() {
        let b = abelian_group_braided(&FiniteAbelianGroup::cyclic(2));
        assert!(b.validate().unwrap().is_pass());
    }

    #[test]
    fn abelian_discrete_group_braids_but_s3_does_not() {
        // Z/3 as a discrete monoidal category with identity braiding passes
        let z3: Vec<Vec<u32>> = (0..3).map(|a| (0..3).map(|b| (a + b) % 3).collect()).collect();
        let m = discrete_group_monoidal(&z3, 0);
        assert!(m.validate().unwrap().is_pass());
        let bm = discrete_with_identity_braiding(m);
        assert!(bm.validate().unwrap().is_pass());

        // S3 with the identity braiding is refused at the boundary level
        let s3 = symmetric_group_3();
        let m = discrete_group_monoidal(&s3, 0);
        assert!(m.validate().unwrap().is_pass());
        let bm = discrete_with_identity_braiding(m);
        match bm.validate().unwrap() {
            Report::Pass => panic!("identity braiding on S3 must fail"),
            Report::Fail { witness } => assert_eq!(witness.law, "braiding component boundary"),
        }
    }

    fn symmetric_group_3() -> Vec<Vec<u32>> {
        // permutations of {0,1,2} listed as their one-line notation
        let perms: Vec<[usize; 3]> =
            vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let index = |p: &[usize; 3]| perms.iter().position(|q| q == p).unwrap() as u32;
        perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| {
                        // p after q
                        let comp = [p[q[0]], p[q[1]], p[q[2]]];
                        index(&comp)
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn pentagon_mutation_is_caught() {
        let b = abelian_group_braided(&FiniteAbelianGroup::cyclic(2));
        let mut broken = b.m.clone();
        broken.assoc.insert((0, 0, 0), 1);
        broken.assoc_inv.insert((0, 0, 0), 1);
        match broken.validate().unwrap() {
            Report::Pass => panic!("pentagon mutation undetected"),
            Report::Fail { witness } => {
                assert!(witness.law == "pentagon" || witness.law == "naturality of the associator" || witness.law == "triangle")
            }
        }
    }

    #[test]
    fn deloop_roundtrip_and_validation() {
        let b = abelian_group_braided(&FiniteAbelianGroup::cyclic(2));
        let bi = deloop(&b.m);
        assert_eq!(bi.n_objects(), 1);
        assert_eq!(bi.n_one(), 1);
        assert_eq!(bi.n_two(), 2);
        assert!(bi.validate().unwrap().is_pass());
        let back = undeloop(&bi).unwrap();
        assert!(back.validate().unwrap().is_pass());
        assert_eq!(back.tensor_ob, b.m.tensor_ob);
        assert_eq!(back.unit, b.m.unit);
    }

    #[test]
    fn powers_and_counts() {
        let b = abelian_group_braided(&FiniteAbelianGroup::cyclic(2));
        let p0 = power_monoidal(&b, 0);
        assert_eq!(p0.cat.n_objects(), 1);
        assert_eq!(p0.cat.n_morphisms(), 1);
        let p1 = power_monoidal(&b, 1);
        assert_eq!(p1.cat.n_objects(), b.m.n_objects());
        assert_eq!(p1.cat.n_morphisms(), b.m.n_morphisms());
        let p3 = power_monoidal(&b, 3);
        assert_eq!(p3.cat.n_objects(), b.m.n_objects().pow(3));
        assert!(p3.as_braided().validate().unwrap().is_pass());
    }

    #[test]
    fn faces_and_degeneracies_are_monoidal() {
        let b = abelian_group_braided(&FiniteAbelianGroup::cyclic(2));
        let powers: Vec<MonoidalPower> = (0..=3).map(|p| power_monoidal(&b, p)).collect();
        for p in 1..=3usize {
            for i in 0..=p {
                let f = tensor_face_functor(&b, &powers[p], &powers[p - 1], i).unwrap();
                assert!(
                    f.validate(&powers[p].cat, &powers[p - 1].cat).unwrap().is_pass(),
                    "face {i} of power {p}"
                );
            }
        }
        for p in 0..=2usize {
            for i in 0..=p {
                let s = unit_degeneracy(&b, &powers[p], &powers[p + 1], i).unwrap();
                assert!(
                    s.validate(&powers[p].cat, &powers[p + 1].cat).unwrap().is_pass(),
                    "degeneracy {i} of power {p}"
                );
            }
        }
        // the middle face of the square of a strict symmetric category has
        // identity structure isos
        let d1 = tensor_face_functor(&b, &powers[2], &powers[1], 1).unwrap();
        for (_, &phi) in &d1.str_comp {
            assert_eq!(phi, powers[1].cat.base.id(powers[1].cat.base.src(phi)));
        }
    }

    #[test]
    fn discrete_group_deloop_counts() {
        let z3: Vec<Vec<u32>> = (0..3).map(|a| (0..3).map(|b| (a + b) % 3).collect()).collect();
        let m = discrete_group_monoidal(&z3, 0);
        let bi = deloop(&m);
        assert_eq!((bi.n_objects(), bi.n_one(), bi.n_two()), (1, 3, 3));
        assert!(bi.validate().unwrap().is_pass());
    }
}

//! Truncated simplicial sets with explicit face/degeneracy tables, integer
//! homology via the normalized chain complex, coskeletality checks, diagonals
//! of bisimplicial sets, homotopy colimits and the minimal Eilenberg-MacLane
//! complexes.
//!
//! Truncation is explicit and mandatory; every operation states the dimension
//! it needs. Degenerate simplices are stored explicitly.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::cat::FiniteCategory;
use crate::group::FiniteAbelianGroup;
use crate::report::{Error, Report, Result};
use crate::snf::{chain_homology, HomologyGroup, IntMatrix};

/// A simplicial set truncated at dimension `trunc`.
///
/// `face[n][i][s]` is `d_i s` for an `n`-simplex `s` (`1 <= n <= trunc`,
/// `0 <= i <= n`); `degeneracy[n][i][s]` is `s_i s` (`0 <= n < trunc`).
#[derive(Debug, Clone)]
pub struct SimplicialSet {
    pub trunc: usize,
    pub counts: Vec<usize>,
    pub face: Vec<Vec<Vec<u32>>>,
    pub degeneracy: Vec<Vec<Vec<u32>>>,
}

impl SimplicialSet {
    pub fn point(trunc: usize) -> Self {
        SimplicialSet {
            trunc,
            counts: vec![1; trunc + 1],
            face: (0..=trunc).map(|n| vec![vec![0]; if n == 0 { 0 } else { n + 1 }]).collect(),
            degeneracy: (0..=trunc)
                .map(|n| if n < trunc { vec![vec![0]; n + 1] } else { Vec::new() })
                .collect(),
        }
    }

    pub fn d(&self, n: usize, i: usize, s: u32) -> u32 {
        self.face[n][i][s as usize]
    }

    pub fn s(&self, n: usize, i: usize, s: u32) -> u32 {
        self.degeneracy[n][i][s as usize]
    }

    /// Simplices lying in the image of some degeneracy operator.
    pub fn degenerate_flags(&self, n: usize) -> Vec<bool> {
        let mut flags = vec![false; self.counts[n]];
        if n == 0 {
            return flags;
        }
        for i in 0..n {
            for s in 0..self.counts[n - 1] {
                flags[self.s(n - 1, i, s as u32) as usize] = true;
            }
        }
        flags
    }

    /// All simplicial identities within the truncation.
    pub fn validate(&self) -> Result<Report> {
        let t = self.trunc;
        if self.counts.len() != t + 1 || self.face.len() != t + 1 || self.degeneracy.len() != t + 1 {
            return Err(Error::Structure("tables do not match the truncation".into()));
        }
        for n in 0..=t {
            let expect_faces = if n == 0 { 0 } else { n + 1 };
            if self.face[n].len() != expect_faces {
                return Err(Error::Structure(format!("face table arity wrong in dim {n}")));
            }
            let expect_degens = if n < t { n + 1 } else { 0 };
            if self.degeneracy[n].len() != expect_degens {
                return Err(Error::Structure(format!("degeneracy table arity wrong in dim {n}")));
            }
            for i in 0..expect_faces {
                if self.face[n][i].len() != self.counts[n] {
                    return Err(Error::Structure(format!("face d_{i} not total in dim {n}")));
                }
                if self.face[n][i].iter().any(|&v| v as usize >= self.counts[n - 1]) {
                    return Err(Error::Structure(format!("face d_{i} dangles in dim {n}")));
                }
            }
            for i in 0..expect_degens {
                if self.degeneracy[n][i].len() != self.counts[n] {
                    return Err(Error::Structure(format!("degeneracy s_{i} not total in dim {n}")));
                }
                if self.degeneracy[n][i].iter().any(|&v| v as usize >= self.counts[n + 1]) {
                    return Err(Error::Structure(format!("degeneracy s_{i} dangles in dim {n}")));
                }
            }
        }
        // d_i d_j = d_{j-1} d_i  (i < j)
        for n in 2..=t {
            for j in 1..=n {
                for i in 0..j {
                    for s in 0..self.counts[n] as u32 {
                        if self.d(n - 1, i, self.d(n, j, s)) != self.d(n - 1, j - 1, self.d(n, i, s)) {
                            return Ok(Report::fail(
                                "d_i d_j = d_{j-1} d_i",
                                vec![("dim", n.to_string()), ("i", i.to_string()), ("j", j.to_string()), ("simplex", s.to_string())],
                            ));
                        }
                    }
                }
            }
        }
        // s_i s_j = s_{j+1} s_i  (i <= j)
        for n in 0..t.saturating_sub(1) {
            for j in 0..=n {
                for i in 0..=j {
                    for s in 0..self.counts[n] as u32 {
                        if self.s(n + 1, i, self.s(n, j, s)) != self.s(n + 1, j + 1, self.s(n, i, s)) {
                            return Ok(Report::fail(
                                "s_i s_j = s_{j+1} s_i",
                                vec![("dim", n.to_string()), ("i", i.to_string()), ("j", j.to_string()), ("simplex", s.to_string())],
                            ));
                        }
                    }
                }
            }
        }
        // d_i s_j relations
        for n in 0..t {
            for j in 0..=n {
                for i in 0..=n + 1 {
                    for s in 0..self.counts[n] as u32 {
                        let lhs = self.d(n + 1, i, self.s(n, j, s));
                        let rhs = if i < j {
                            self.s(n - 1, j - 1, self.d(n, i, s))
                        } else if i == j || i == j + 1 {
                            s
                        } else {
                            self.s(n - 1, j, self.d(n, i - 1, s))
                        };
                        if lhs != rhs {
                            return Ok(Report::fail(
                                "d_i s_j relation",
                                vec![("dim", n.to_string()), ("i", i.to_string()), ("j", j.to_string()), ("simplex", s.to_string())],
                            ));
                        }
                    }
                }
            }
        }
        Ok(Report::Pass)
    }

    /// Integer homology `H_0 .. H_k` through the normalized chain complex
    /// (degenerate simplices quotiented away) and Smith normal form.
    pub fn homology(&self, upto: usize) -> Result<Vec<HomologyGroup>> {
        if self.trunc < upto + 1 {
            return Err(Error::SizeGuard(format!(
                "homology through degree {} needs truncation >= {}, have {}",
                upto,
                upto + 1,
                self.trunc
            )));
        }
        let top = upto + 1;
        // indices of nondegenerate simplices per dimension
        let mut nd_index: Vec<Vec<Option<usize>>> = Vec::new();
        let mut ranks: Vec<usize> = Vec::new();
        for n in 0..=top {
            let flags = self.degenerate_flags(n);
            let mut idx = vec![None; self.counts[n]];
            let mut r = 0usize;
            for (s, &deg) in flags.iter().enumerate() {
                if !deg {
                    idx[s] = Some(r);
                    r += 1;
                }
            }
            nd_index.push(idx);
            ranks.push(r);
        }
        let mut boundaries = Vec::new();
        for n in 1..=top {
            let mut m = IntMatrix::zero(ranks[n - 1], ranks[n]);
            for s in 0..self.counts[n] {
                let Some(col) = nd_index[n][s] else { continue };
                let mut sign = BigInt::one();
                for i in 0..=n {
                    let f = self.d(n, i, s as u32);
                    if let Some(row) = nd_index[n - 1][f as usize] {
                        m.add_assign(row, col, &sign);
                    }
                    sign = -sign;
                }
            }
            boundaries.push(m);
        }
        Ok(chain_homology(&ranks, &boundaries, upto))
    }

    /// Integer homology of the raw (unnormalized) chain complex; agrees with
    /// the normalized one and is kept as an independent cross-check route.
    pub fn homology_unnormalized(&self, upto: usize) -> Result<Vec<HomologyGroup>> {
        if self.trunc < upto + 1 {
            return Err(Error::SizeGuard(format!(
                "homology through degree {} needs truncation >= {}, have {}",
                upto,
                upto + 1,
                self.trunc
            )));
        }
        let top = upto + 1;
        let ranks: Vec<usize> = (0..=top).map(|n| self.counts[n]).collect();
        let mut boundaries = Vec::new();
        for n in 1..=top {
            let mut m = IntMatrix::zero(ranks[n - 1], ranks[n]);
            for s in 0..self.counts[n] {
                let mut sign = BigInt::one();
                for i in 0..=n {
                    m.add_assign(self.d(n, i, s as u32) as usize, s, &sign);
                    sign = -sign;
                }
            }
            boundaries.push(m);
        }
        Ok(chain_homology(&ranks, &boundaries, upto))
    }

    /// Verifies that for each `m < p <= upto` the map sending a `p`-simplex
    /// to its boundary family is a bijection onto the compatible families.
    /// Reports the first `p` where it fails.
    pub fn coskeletal_check(&self, m: usize, upto: usize) -> Result<Report> {
        if upto > self.trunc {
            return Err(Error::SizeGuard(format!(
                "coskeletal check through dim {} exceeds truncation {}",
                upto, self.trunc
            )));
        }
        for p in (m + 1)..=upto {
            if p == 0 {
                continue;
            }
            let mut seen = BTreeMap::new();
            for s in 0..self.counts[p] as u32 {
                let boundary: Vec<u32> = (0..=p).map(|i| self.d(p, i, s)).collect();
                if seen.insert(boundary, s).is_some() {
                    return Ok(Report::fail(
                        "coskeletal: boundary map not injective",
                        vec![("p", p.to_string()), ("simplex", s.to_string())],
                    ));
                }
            }
            let families = self.count_compatible_families(p);
            if families != self.counts[p] {
                return Ok(Report::fail(
                    "coskeletal: boundary map not surjective",
                    vec![("p", p.to_string()), ("families", families.to_string()), ("simplices", self.counts[p].to_string())],
                ));
            }
        }
        Ok(Report::Pass)
    }

    /// Number of families `(x_0..x_p)` of `(p-1)`-simplices satisfying
    /// `d_i x_j = d_{j-1} x_i` for `i < j`.
    fn count_compatible_families(&self, p: usize) -> usize {
        let lower = self.counts[p - 1];
        // bucket (p-1)-simplices by d_0 for pruning (p >= 2)
        let bucket: Option<BTreeMap<u32, Vec<u32>>> = (p >= 2).then(|| {
            let mut b: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
            for s in 0..lower as u32 {
                b.entry(self.d(p - 1, 0, s)).or_default().push(s);
            }
            b
        });
        let mut count = 0usize;
        let mut chosen: Vec<u32> = Vec::with_capacity(p + 1);
        self.family_backtrack(p, &mut chosen, &bucket, &mut count);
        count
    }

    fn family_backtrack(
        &self,
        p: usize,
        chosen: &mut Vec<u32>,
        bucket: &Option<BTreeMap<u32, Vec<u32>>>,
        count: &mut usize,
    ) {
        let j = chosen.len();
        if j == p + 1 {
            *count += 1;
            return;
        }
        let empty = Vec::new();
        let candidates: &Vec<u32> = if j == 0 || p == 1 {
            // no face constraint available yet (p=1: faces land in dim 0 with no structure to bucket on)
            &empty
        } else {
            // constraint with i = 0: d_0 x_j = d_{j-1} x_0
            let key = self.d(p - 1, j - 1, chosen[0]);
            match bucket.as_ref().unwrap().get(&key) {
                Some(v) => v,
                None => return,
            }
        };
        let iter: Box<dyn Iterator<Item = u32>> = if j == 0 || p == 1 {
            Box::new(0..self.counts[p - 1] as u32)
        } else {
            Box::new(candidates.iter().copied())
        };
        'next: for x in iter {
            if p >= 2 {
                for i in 0..j {
                    // d_i x_j = d_{j-1} x_i
                    if self.d(p - 1, i, x) != self.d(p - 1, j - 1, chosen[i]) {
                        continue 'next;
                    }
                }
            }
            chosen.push(x);
            self.family_backtrack(p, chosen, bucket, count);
            chosen.pop();
        }
    }
}

/// Builder keyed by canonical simplex data, so faces and degeneracies can be
/// filled in by lookup.
pub struct SSetBuilder<K: Ord + Clone> {
    pub trunc: usize,
    pub keys: Vec<Vec<K>>,
    index: Vec<BTreeMap<K, u32>>,
}

impl<K: Ord + Clone> SSetBuilder<K> {
    pub fn new(trunc: usize) -> Self {
        SSetBuilder {
            trunc,
            keys: vec![Vec::new(); trunc + 1],
            index: vec![BTreeMap::new(); trunc + 1],
        }
    }

    pub fn add(&mut self, dim: usize, key: K) -> u32 {
        if let Some(&i) = self.index[dim].get(&key) {
            return i;
        }
        let i = self.keys[dim].len() as u32;
        self.keys[dim].push(key.clone());
        self.index[dim].insert(key, i);
        i
    }

    pub fn lookup(&self, dim: usize, key: &K) -> Option<u32> {
        self.index[dim].get(key).copied()
    }

    /// Assemble using `face_of` / `degen_of` to compute operator images by key.
    pub fn build(
        &self,
        mut face_of: impl FnMut(usize, usize, &K) -> K,
        mut degen_of: impl FnMut(usize, usize, &K) -> K,
    ) -> Result<SimplicialSet> {
        let t = self.trunc;
        let mut face = vec![Vec::new(); t + 1];
        let mut degeneracy = vec![Vec::new(); t + 1];
        for n in 1..=t {
            face[n] = vec![vec![0u32; self.keys[n].len()]; n + 1];
            for i in 0..=n {
                for (s, key) in self.keys[n].iter().enumerate() {
                    let fk = face_of(n, i, key);
                    face[n][i][s] = self.lookup(n - 1, &fk).ok_or_else(|| {
                        Error::Structure(format!("face image missing in dim {}", n - 1))
                    })?;
                }
            }
        }
        for n in 0..t {
            degeneracy[n] = vec![vec![0u32; self.keys[n].len()]; n + 1];
            for i in 0..=n {
                for (s, key) in self.keys[n].iter().enumerate() {
                    let dk = degen_of(n, i, key);
                    degeneracy[n][i][s] = self.lookup(n + 1, &dk).ok_or_else(|| {
                        Error::Structure(format!("degeneracy image missing in dim {}", n + 1))
                    })?;
                }
            }
        }
        Ok(SimplicialSet {
            trunc: t,
            counts: self.keys.iter().map(|k| k.len()).collect(),
            face,
            degeneracy,
        })
    }
}

/// Monotone map `[q] -> [p]` as its value tuple.
pub fn monotone_maps(q: usize, p: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = vec![0u8; q + 1];
    loop {
        out.push(cur.clone());
        // next weakly increasing tuple with entries <= p
        let mut k = q + 1;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if (cur[k] as usize) < p {
                cur[k] += 1;
                for j in k + 1..=q {
                    cur[j] = cur[k];
                }
                break;
            }
        }
    }
}

/// The standard simplex Δ[n] truncated at `trunc`; `p`-simplices are weakly
/// increasing `(p+1)`-tuples in `[n]`.
pub fn standard_simplex(n: usize, trunc: usize) -> SimplicialSet {
    let mut b: SSetBuilder<Vec<u8>> = SSetBuilder::new(trunc);
    for p in 0..=trunc {
        for t in monotone_maps(p, n) {
            b.add(p, t);
        }
    }
    b.build(
        |_, i, key| {
            let mut k = key.clone();
            k.remove(i);
            k
        },
        |_, i, key| {
            let mut k = key.clone();
            k.insert(i, key[i]);
            k
        },
    )
    .expect("standard simplex closes")
}

/// The boundary of Δ[n]: tuples missing at least one vertex of `[n]`.
pub fn boundary_simplex(n: usize, trunc: usize) -> SimplicialSet {
    let mut b: SSetBuilder<Vec<u8>> = SSetBuilder::new(trunc);
    for p in 0..=trunc {
        for t in monotone_maps(p, n) {
            let mut hit = vec![false; n + 1];
            for &v in &t {
                hit[v as usize] = true;
            }
            if hit.iter().any(|&h| !h) {
                b.add(p, t);
            }
        }
    }
    b.build(
        |_, i, key| {
            let mut k = key.clone();
            k.remove(i);
            k
        },
        |_, i, key| {
            let mut k = key.clone();
            k.insert(i, key[i]);
            k
        },
    )
    .expect("boundary closes")
}

/// A simplicial map as per-dimension tables.
#[derive(Debug, Clone)]
pub struct SimplicialMap {
    pub per_dim: Vec<Vec<u32>>,
}

impl SimplicialMap {
    pub fn identity(x: &SimplicialSet) -> Self {
        SimplicialMap { per_dim: x.counts.iter().map(|&c| (0..c as u32).collect()).collect() }
    }

    pub fn apply(&self, dim: usize, s: u32) -> u32 {
        self.per_dim[dim][s as usize]
    }

    pub fn validate(&self, source: &SimplicialSet, target: &SimplicialSet) -> Result<Report> {
        let t = source.trunc.min(target.trunc);
        if self.per_dim.len() < t + 1 {
            return Err(Error::Structure("simplicial map tables not total".into()));
        }
        for n in 0..=t {
            if self.per_dim[n].len() != source.counts[n] {
                return Err(Error::Structure(format!("map not total in dim {n}")));
            }
            if self.per_dim[n].iter().any(|&v| v as usize >= target.counts[n]) {
                return Err(Error::Structure(format!("map dangles in dim {n}")));
            }
        }
        for n in 1..=t {
            for i in 0..=n {
                for s in 0..source.counts[n] as u32 {
                    if self.apply(n - 1, source.d(n, i, s)) != target.d(n, i, self.apply(n, s)) {
                        return Ok(Report::fail(
                            "map commutes with faces",
                            vec![("dim", n.to_string()), ("i", i.to_string()), ("simplex", s.to_string())],
                        ));
                    }
                }
            }
        }
        for n in 0..t {
            for i in 0..=n {
                for s in 0..source.counts[n] as u32 {
                    if self.apply(n + 1, source.s(n, i, s)) != target.s(n, i, self.apply(n, s)) {
                        return Ok(Report::fail(
                            "map commutes with degeneracies",
                            vec![("dim", n.to_string()), ("i", i.to_string()), ("simplex", s.to_string())],
                        ));
                    }
                }
            }
        }
        Ok(Report::Pass)
    }
}

/// A bisimplicial set truncated at `(p_trunc, q_trunc)`.
#[derive(Debug, Clone)]
pub struct BisimplicialSet {
    pub p_trunc: usize,
    pub q_trunc: usize,
    pub counts: Vec<Vec<usize>>,
    /// `h_face[p][q][i][s]`, defined for `p >= 1`
    pub h_face: Vec<Vec<Vec<Vec<u32>>>>,
    pub v_face: Vec<Vec<Vec<Vec<u32>>>>,
    pub h_degen: Vec<Vec<Vec<Vec<u32>>>>,
    pub v_degen: Vec<Vec<Vec<Vec<u32>>>>,
}

impl BisimplicialSet {
    fn row(&self, p: usize) -> SimplicialSet {
        SimplicialSet {
            trunc: self.q_trunc,
            counts: self.counts[p].clone(),
            face: (0..=self.q_trunc)
                .map(|q| if q == 0 { Vec::new() } else { self.v_face[p][q].clone() })
                .collect(),
            degeneracy: (0..=self.q_trunc)
                .map(|q| if q < self.q_trunc { self.v_degen[p][q].clone() } else { Vec::new() })
                .collect(),
        }
    }

    fn column(&self, q: usize) -> SimplicialSet {
        SimplicialSet {
            trunc: self.p_trunc,
            counts: (0..=self.p_trunc).map(|p| self.counts[p][q]).collect(),
            face: (0..=self.p_trunc)
                .map(|p| if p == 0 { Vec::new() } else { self.h_face[p][q].clone() })
                .collect(),
            degeneracy: (0..=self.p_trunc)
                .map(|p| if p < self.p_trunc { self.h_degen[p][q].clone() } else { Vec::new() })
                .collect(),
        }
    }

    pub fn validate(&self) -> Result<Report> {
        for p in 0..=self.p_trunc {
            let r = self.row(p).validate()?;
            if !r.is_pass() {
                return Ok(r);
            }
        }
        for q in 0..=self.q_trunc {
            let r = self.column(q).validate()?;
            if !r.is_pass() {
                return Ok(r);
            }
        }
        // horizontal operators commute with vertical ones
        for p in 0..=self.p_trunc {
            for q in 0..=self.q_trunc {
                for s in 0..self.counts[p][q] as u32 {
                    for i in 0..=p {
                        if p == 0 {
                            continue;
                        }
                        for j in 0..=q {
                            if q > 0 && self.v_face[p - 1][q][j][self.h_face[p][q][i][s as usize] as usize]
                                != self.h_face[p][q - 1][i][self.v_face[p][q][j][s as usize] as usize]
                            {
                                return Ok(Report::fail(
                                    "horizontal face commutes with vertical face",
                                    vec![("p", p.to_string()), ("q", q.to_string()), ("i", i.to_string()), ("j", j.to_string()), ("simplex", s.to_string())],
                                ));
                            }
                            if q < self.q_trunc
                                && self.v_degen[p - 1][q][j][self.h_face[p][q][i][s as usize] as usize]
                                    != self.h_face[p][q + 1][i][self.v_degen[p][q][j][s as usize] as usize]
                            {
                                return Ok(Report::fail(
                                    "horizontal face commutes with vertical degeneracy",
                                    vec![("p", p.to_string()), ("q", q.to_string()), ("i", i.to_string()), ("j", j.to_string()), ("simplex", s.to_string())],
                                ));
                            }
                        }
                    }
                    if p < self.p_trunc {
                        for i in 0..=p {
                            for j in 0..=q {
                                if q > 0
                                    && self.v_face[p + 1][q][j][self.h_degen[p][q][i][s as usize] as usize]
                                        != self.h_degen[p][q - 1][i][self.v_face[p][q][j][s as usize] as usize]
                                {
                                    return Ok(Report::fail(
                                        "horizontal degeneracy commutes with vertical face",
                                        vec![("p", p.to_string()), ("q", q.to_string()), ("i", i.to_string()), ("j", j.to_string()), ("simplex", s.to_string())],
                                    ));
                                }
                                if q < self.q_trunc
                                    && self.v_degen[p + 1][q][j][self.h_degen[p][q][i][s as usize] as usize]
                                        != self.h_degen[p][q + 1][i][self.v_degen[p][q][j][s as usize] as usize]
                                {
                                    return Ok(Report::fail(
                                        "horizontal degeneracy commutes with vertical degeneracy",
                                        vec![("p", p.to_string()), ("q", q.to_string()), ("i", i.to_string()), ("j", j.to_string()), ("simplex", s.to_string())],
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(Report::Pass)
    }

    /// Diagonal simplicial set: `diag(B)_p = B_{p,p}` with `d_i = d_i^h d_i^v`.
    pub fn diag(&self) -> SimplicialSet {
        let t = self.p_trunc.min(self.q_trunc);
        let mut face = vec![Vec::new(); t + 1];
        let mut degeneracy = vec![Vec::new(); t + 1];
        for n in 1..=t {
            face[n] = (0..=n)
                .map(|i| {
                    (0..self.counts[n][n] as u32)
                        .map(|s| {
                            let hv = self.v_face[n][n][i][s as usize];
                            self.h_face[n][n - 1][i][hv as usize]
                        })
                        .collect()
                })
                .collect();
        }
        for n in 0..t {
            degeneracy[n] = (0..=n)
                .map(|i| {
                    (0..self.counts[n][n] as u32)
                        .map(|s| {
                            let sv = self.v_degen[n][n][i][s as usize];
                            self.h_degen[n][n + 1][i][sv as usize]
                        })
                        .collect()
                })
                .collect();
        }
        SimplicialSet {
            trunc: t,
            counts: (0..=t).map(|n| self.counts[n][n]).collect(),
            face,
            degeneracy,
        }
    }
}

/// Composable `p`-chains `(b_1, .., b_p)` in a category, `b_t: i_t -> i_{t-1}`.
pub fn composable_chains(c: &FiniteCategory, p: usize) -> Vec<Vec<u32>> {
    if p == 0 {
        return vec![Vec::new()];
    }
    let mut chains: Vec<Vec<u32>> = (0..c.n_morphisms() as u32).map(|f| vec![f]).collect();
    for _ in 1..p {
        let mut next = Vec::new();
        for ch in &chains {
            let last = *ch.last().unwrap();
            for f in 0..c.n_morphisms() as u32 {
                if c.tgt(f) == c.src(last) {
                    let mut e = ch.clone();
                    e.push(f);
                    next.push(e);
                }
            }
        }
        chains = next;
    }
    chains
}

/// Contravariant simplicial-set-valued diagram on a finite index category:
/// one simplicial set per object and a simplicial map `arrow_maps[a]:
/// X(tgt a) -> X(src a)` per arrow.
pub struct SSetDiagram<'a> {
    pub index: &'a FiniteCategory,
    pub objects: Vec<SimplicialSet>,
    pub arrow_maps: Vec<SimplicialMap>,
}

impl<'a> SSetDiagram<'a> {
    pub fn validate(&self) -> Result<Report> {
        if self.objects.len() != self.index.n_objects()
            || self.arrow_maps.len() != self.index.n_morphisms()
        {
            return Err(Error::Structure("diagram tables not total".into()));
        }
        for a in 0..self.index.n_morphisms() as u32 {
            let r = self.arrow_maps[a as usize]
                .validate(&self.objects[self.index.tgt(a) as usize], &self.objects[self.index.src(a) as usize])?;
            if !r.is_pass() {
                return Ok(r);
            }
        }
        // functoriality: X(id) = id, X(b a) = X(a) X(b) ... contravariantly X(g.f) = X(f) âˆ˜ X(g)
        let t = self.objects.iter().map(|x| x.trunc).min().unwrap_or(0);
        for x in 0..self.index.n_objects() as u32 {
            let ident = &self.arrow_maps[self.index.id(x) as usize];
            for n in 0..=t {
                for s in 0..self.objects[x as usize].counts[n] as u32 {
                    if ident.apply(n, s) != s {
                        return Ok(Report::fail("diagram preserves identities", vec![("object", x.to_string())]));
                    }
                }
            }
        }
        for g in 0..self.index.n_morphisms() as u32 {
            for f in 0..self.index.n_morphisms() as u32 {
                let Some(gf) = self.index.comp_opt(g, f) else { continue };
                // X(gf) = X(f) after X(g): X(tgt g) -> X(src f)
                for n in 0..=t {
                    for s in 0..self.objects[self.index.tgt(g) as usize].counts[n] as u32 {
                        let lhs = self.arrow_maps[gf as usize].apply(n, s);
                        let rhs = self.arrow_maps[f as usize].apply(n, self.arrow_maps[g as usize].apply(n, s));
                        if lhs != rhs {
                            return Ok(Report::fail(
                                "diagram preserves composition",
                                vec![("g", g.to_string()), ("f", f.to_string())],
                            ));
                        }
                    }
                }
            }
        }
        Ok(Report::Pass)
    }
}

/// Bousfield-Kan homotopy colimit (Borel construction): `p`-simplices are
/// pairs of a `p`-chain of the index category and a `p`-simplex of the value
/// at the chain's target end; the 0th face reindexes along the first arrow.
pub fn hocolim(diagram: &SSetDiagram<'_>, trunc: usize) -> Result<SimplicialSet> {
    diagram.validate()?.into_result()?;
    let index = diagram.index;
    if diagram.objects.iter().any(|x| x.trunc < trunc) {
        return Err(Error::SizeGuard(format!("hocolim needs all values truncated at >= {trunc}")));
    }
    // key: (chain of arrows, object at position 0, simplex id)
    type Key = (Vec<u32>, u32, u32);
    let mut b: SSetBuilder<Key> = SSetBuilder::new(trunc);
    let mut chains_at: Vec<Vec<Vec<u32>>> = Vec::new();
    for p in 0..=trunc {
        chains_at.push(composable_chains(index, p));
    }
    for p in 0..=trunc {
        for chain in &chains_at[p] {
            for x0 in 0..index.n_objects() as u32 {
                let start = if p == 0 { x0 } else { index.tgt(chain[0]) };
                if p == 0 && start != x0 {
                    continue;
                }
                if p > 0 && x0 != start {
                    continue;
                }
                for s in 0..diagram.objects[start as usize].counts[p] as u32 {
                    b.add(p, (chain.clone(), start, s));
                }
            }
        }
    }
    let face_of = |p: usize, i: usize, key: &Key| -> Key {
        let (chain, x0, s) = key;
        if i == 0 {
            if p == 1 {
                let a = chain[0];
                let new_s = diagram.arrow_maps[a as usize].apply(p, *s);
                let moved = diagram.objects[index.src(a) as usize].d(p, 0, new_s);
                (Vec::new(), index.src(a), moved)
            } else {
                let a = chain[0];
                let rest: Vec<u32> = chain[1..].to_vec();
                let new_s = diagram.arrow_maps[a as usize].apply(p, *s);
                let moved = diagram.objects[index.src(a) as usize].d(p, 0, new_s);
                (rest, index.src(a), moved)
            }
        } else {
            let mut ch = chain.clone();
            if i == p {
                ch.pop();
            } else {
                let g = ch[i - 1];
                let f = ch[i];
                ch[i - 1] = index.comp(g, f);
                ch.remove(i);
            }
            (ch, *x0, diagram.objects[*x0 as usize].d(p, i, *s))
        }
    };
    let degen_of = |p: usize, i: usize, key: &Key| -> Key {
        let (chain, x0, s) = key;
        let mut ch = chain.clone();
        // insert identity at position i: the chain object at slot i
        let obj = if i == 0 {
            *x0
        } else {
            index.src(chain[i - 1])
        };
        ch.insert(i, index.id(obj));
        (ch, *x0, diagram.objects[*x0 as usize].s(p, i, *s))
    };
    b.build(face_of, degen_of)
}

/// Minimal Eilenberg-MacLane complex `K(A, n)`: `m`-simplices are the
/// normalized simplicial `n`-cocycles on Δ[m] with values in `A`.
pub fn em_space(a: &FiniteAbelianGroup, n: usize, upto: usize) -> Result<SimplicialSet> {
    if !(1..=3).contains(&n) {
        return Err(Error::SizeGuard(format!("K(A,n) supported for n in 1..=3, got {n}")));
    }
    // free unknowns in dim m are the tuples starting at 0; guard the search
    let free = binom(upto, n);
    let bound = (a.order() as f64).powi(free as i32);
    if bound > 5.0e6 {
        return Err(Error::SizeGuard(format!(
            "K(A,{n}) enumeration at dim {upto} needs {bound:.0} candidate assignments (cap 5e6)"
        )));
    }
    let mut b: SSetBuilder<Vec<u32>> = SSetBuilder::new(upto);
    for m in 0..=upto {
        for sol in enumerate_cocycles(a, n, m) {
            b.add(m, sol);
        }
    }
    let tuples_cache: Vec<Vec<Vec<u8>>> = (0..=upto).map(|m| strict_tuples(m, n + 1)).collect();
    fn pos_of(tuples: &[Vec<u8>], t: &[u8]) -> usize {
        tuples.iter().position(|u| u == t).expect("tuple present")
    }
    let face_of = |m: usize, i: usize, key: &Vec<u32>| -> Vec<u32> {
        // precompose with the coface d^i: [m-1] -> [m]
        let src_tuples = &tuples_cache[m - 1];
        let cur_tuples = &tuples_cache[m];
        src_tuples
            .iter()
            .map(|t| {
                let image: Vec<u8> = t.iter().map(|&v| if (v as usize) < i { v } else { v + 1 }).collect();
                key[pos_of(cur_tuples, &image)]
            })
            .collect()
    };
    let degen_of = |m: usize, i: usize, key: &Vec<u32>| -> Vec<u32> {
        // precompose with the codegeneracy s^i: [m+1] -> [m]; a repeated
        // entry means a degenerate tuple, whose value is 0 by normalization
        let src_tuples = &tuples_cache[m + 1];
        let cur_tuples = &tuples_cache[m];
        src_tuples
            .iter()
            .map(|t| {
                let image: Vec<u8> = t.iter().map(|&v| if (v as usize) <= i { v } else { v - 1 }).collect();
                if image.windows(2).any(|w| w[0] == w[1]) {
                    a.zero()
                } else {
                    key[pos_of(cur_tuples, &image)]
                }
            })
            .collect()
    };
    b.build(face_of, degen_of)
}

pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r = 1usize;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Strictly increasing `k`-tuples in `[m]`, lexicographic.
pub fn strict_tuples(m: usize, k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    if k == 0 {
        out.push(Vec::new());
        return out;
    }
    if k > m + 1 {
        return out;
    }
    let mut cur: Vec<u8> = (0..k as u8).collect();
    loop {
        out.push(cur.clone());
        // next strictly increasing tuple bounded by m
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if (cur[i] as usize) < m - (k - 1 - i) {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Normalized `n`-cocycles on Δ[m] with values in `a`, as value vectors over
/// the strictly increasing `(n+1)`-tuples in lexicographic order.
pub fn enumerate_cocycles(a: &FiniteAbelianGroup, n: usize, m: usize) -> Vec<Vec<u32>> {
    let tuples = strict_tuples(m, n + 1);
    let pos: BTreeMap<&Vec<u8>, usize> = tuples.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let mut solutions = Vec::new();
    let mut cur: Vec<u32> = Vec::with_capacity(tuples.len());
    backtrack(a, n, &tuples, &pos, &mut cur, &mut solutions);
    return solutions;

    fn backtrack(
        a: &FiniteAbelianGroup,
        n: usize,
        tuples: &[Vec<u8>],
        pos: &BTreeMap<&Vec<u8>, usize>,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if cur.len() == tuples.len() {
            out.push(cur.clone());
            return;
        }
        let t = &tuples[cur.len()];
        'candidates: for v in a.elements() {
            // check all cocycle conditions on tuples (w, t...) with w < t[0];
            // their other faces are lexicographically earlier, hence bound
            for w in 0..t[0] {
                let mut u = Vec::with_capacity(n + 2);
                u.push(w);
                u.extend_from_slice(t);
                // alternating sum of faces of u must vanish
                let mut acc = a.zero();
                let mut positive = true;
                for j in 0..=n + 1 {
                    let mut f = u.clone();
                    f.remove(j);
                    let val = if f == *t { v } else { cur[pos[&f]] };
                    acc = if positive { a.add(acc, val) } else { a.sub(acc, val) };
                    positive = !positive;
                }
                if acc != a.zero() {
                    continue 'candidates;
                }
            }
            cur.push(v);
            backtrack(a, n, tuples, pos, cur, out);
            cur.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::{cyclic_group_category, ordinal_category, terminal_category};

    #[test]
    fn point_and_delta_validate() {
        assert!(SimplicialSet::point(4).validate().unwrap().is_pass());
        let d1 = standard_simplex(1, 3);
        assert!(d1.validate().unwrap().is_pass());
        // Δ[1]_p has p+2 simplices
        assert_eq!(d1.counts, vec![2, 3, 4, 5]);
    }

    #[test]
    fn face_table_swap_is_reported() {
        let mut d1 = standard_simplex(1, 3);
        d1.face[1][0].swap(0, 2);
        assert!(!d1.validate().unwrap().is_pass());
    }

    #[test]
    fn point_homology() {
        let h = SimplicialSet::point(4).homology(3).unwrap();
        assert_eq!(h[0], HomologyGroup { betti: 1, torsion: vec![] });
        for k in 1..=3 {
            assert_eq!(h[k], HomologyGroup { betti: 0, torsion: vec![] });
        }
    }

    #[test]
    fn boundary_of_triangle_is_a_circle() {
        let s = boundary_simplex(2, 3);
        let h = s.homology(2).unwrap();
        assert_eq!(h[0].betti, 1);
        assert_eq!(h[1], HomologyGroup { betti: 1, torsion: vec![] });
        assert_eq!(h[2], HomologyGroup { betti: 0, torsion: vec![] });
    }

    #[test]
    fn delta1_fails_zero_coskeletal() {
        let d1 = standard_simplex(1, 3);
        match d1.coskeletal_check(0, 1).unwrap() {
            Report::Fail { witness } => assert_eq!(witness.cells[0], ("p".to_string(), "1".to_string())),
            Report::Pass => panic!("Δ[1] is not 0-coskeletal"),
        }
    }

    #[test]
    fn em_counts() {
        let z2 = FiniteAbelianGroup::cyclic(2);
        let k1 = em_space(&z2, 1, 3).unwrap();
        assert_eq!(k1.counts, vec![1, 2, 4, 8]);
        assert!(k1.validate().unwrap().is_pass());

        let k2 = em_space(&z2, 2, 3).unwrap();
        assert_eq!(k2.counts, vec![1, 1, 2, 8]);
        assert!(k2.validate().unwrap().is_pass());

        let k3 = em_space(&z2, 3, 4).unwrap();
        assert_eq!(k3.counts, vec![1, 1, 1, 2, 16]);
        assert!(k3.validate().unwrap().is_pass());
    }

    #[test]
    fn em_k1_matches_group_nerve_homology() {
        // K(Z/2,1) vs the bar-resolution values Z, Z/2, 0, Z/2
        let z2 = FiniteAbelianGroup::cyclic(2);
        let k1 = em_space(&z2, 1, 4).unwrap();
        let h = k1.homology(3).unwrap();
        assert_eq!(h[0], HomologyGroup { betti: 1, torsion: vec![] });
        assert_eq!(h[1], HomologyGroup { betti: 0, torsion: vec![BigInt::from(2)] });
        assert_eq!(h[2], HomologyGroup { betti: 0, torsion: vec![] });
        assert_eq!(h[3], HomologyGroup { betti: 0, torsion: vec![BigInt::from(2)] });
    }

    #[test]
    fn normalized_and_unnormalized_agree() {
        let z2 = FiniteAbelianGroup::cyclic(2);
        let k1 = em_space(&z2, 1, 3).unwrap();
        assert_eq!(k1.homology(2).unwrap(), k1.homology_unnormalized(2).unwrap());
        let s = boundary_simplex(2, 3);
        assert_eq!(s.homology(2).unwrap(), s.homology_unnormalized(2).unwrap());
    }

    #[test]
    fn em_is_reduced_and_coskeletal() {
        let z2 = FiniteAbelianGroup::cyclic(2);
        let k2 = em_space(&z2, 2, 4).unwrap();
        assert_eq!(&k2.counts[..2], &[1, 1]);
        assert!(k2.coskeletal_check(3, 4).unwrap().is_pass());
    }

    #[test]
    fn hocolim_constant_point_is_nerve_shape() {
        // constant point diagram over [1]: hocolim ≅ nerve([1]) = Δ[1]
        let i = ordinal_category(1);
        let diagram = SSetDiagram {
            index: &i,
            objects: vec![SimplicialSet::point(3), SimplicialSet::point(3)],
            arrow_maps: (0..3).map(|_| SimplicialMap::identity(&SimplicialSet::point(3))).collect(),
        };
        let h = hocolim(&diagram, 3).unwrap();
        assert!(h.validate().unwrap().is_pass());
        assert_eq!(h.counts, standard_simplex(1, 3).counts);
        let hom = h.homology(2).unwrap();
        assert_eq!(hom[0].betti, 1);
        assert_eq!(hom[1], HomologyGroup { betti: 0, torsion: vec![] });
    }

    #[test]
    fn hocolim_over_terminal_is_the_value() {
        let t = terminal_category();
        let val = boundary_simplex(2, 3);
        let diagram = SSetDiagram {
            index: &t,
            objects: vec![val.clone()],
            arrow_maps: vec![SimplicialMap::identity(&val)],
        };
        let h = hocolim(&diagram, 3).unwrap();
        assert!(h.validate().unwrap().is_pass());
        assert_eq!(h.homology(2).unwrap(), val.homology(2).unwrap());
    }

    #[test]
    fn chains_of_groupoid() {
        let z2 = cyclic_group_category(2);
        assert_eq!(composable_chains(&z2, 3).len(), 8);
    }
}

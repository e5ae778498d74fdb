//! Finite abelian groups as direct sums of cyclic groups, with elements
//! encoded as mixed-radix indices. Used by the Eilenberg-MacLane oracle and
//! the cocycle enumerators.

use crate::report::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    /// cyclic orders of the summands, each >= 1
    pub orders: Vec<u32>,
}

impl FiniteAbelianGroup {
    pub fn cyclic(n: u32) -> Self {
        FiniteAbelianGroup { orders: vec![n] }
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().map(|&n| n as u64).product()
    }

    pub fn zero(&self) -> u32 {
        0
    }

    fn digits(&self, a: u32) -> Vec<u32> {
        let mut a = a as u64;
        let mut out = Vec::with_capacity(self.orders.len());
        for &n in &self.orders {
            out.push((a % n as u64) as u32);
            a /= n as u64;
        }
        out
    }

    fn from_digits(&self, ds: &[u32]) -> u32 {
        let mut acc: u64 = 0;
        for (&d, &n) in ds.iter().zip(&self.orders).rev() {
            acc = acc * n as u64 + d as u64;
        }
        acc as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u32> =
            da.iter().zip(&db).zip(&self.orders).map(|((&x, &y), &n)| (x + y) % n).collect();
        self.from_digits(&sum)
    }

    pub fn neg(&self, a: u32) -> u32 {
        let ds: Vec<u32> =
            self.digits(a).iter().zip(&self.orders).map(|(&x, &n)| (n - x) % n).collect();
        self.from_digits(&ds)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.order() as u32
    }

    /// Parse names like `Z2`, `Z3`, `Z2xZ4`.
    pub fn parse(name: &str) -> Result<Self> {
        let mut orders = Vec::new();
        for part in name.split(['x', '*']) {
            let part = part.trim();
            let digits = part
                .strip_prefix('Z')
                .or_else(|| part.strip_prefix('z'))
                .ok_or_else(|| Error::Parse(format!("expected Zn, got {part}")))?;
            let n: u32 =
                digits.parse().map_err(|_| Error::Parse(format!("bad cyclic order {digits}")))?;
            if n == 0 {
                return Err(Error::Parse("cyclic order must be positive".into()));
            }
            orders.push(n);
        }
        if orders.is_empty() {
            return Err(Error::Parse("empty group name".into()));
        }
        Ok(FiniteAbelianGroup { orders })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let g = FiniteAbelianGroup { orders: vec![2, 3] };
        assert_eq!(g.order(), 6);
        for a in g.elements() {
            assert_eq!(g.add(a, g.neg(a)), 0);
            for b in g.elements() {
                assert_eq!(g.add(a, b), g.add(b, a));
            }
        }
    }

    #[test]
    fn parse_names() {
        assert_eq!(FiniteAbelianGroup::parse("Z2").unwrap().orders, vec![2]);
        assert_eq!(FiniteAbelianGroup::parse("Z2xZ4").unwrap().orders, vec![2, 4]);
        assert!(FiniteAbelianGroup::parse("Q8").is_err());
    }
}

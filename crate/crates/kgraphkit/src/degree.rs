use std::fmt;

use crate::error::{Error, Result};

/// Element of N^k: the degree of a path in a graph of rank k.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeVector(pub Vec<u32>);

impl DegreeVector {
    pub fn zero(rank: usize) -> Self {
        DegreeVector(vec![0; rank])
    }

    /// Standard generator e_i.
    pub fn unit(rank: usize, color: usize) -> Self {
        let mut v = vec![0; rank];
        v[color] = 1;
        DegreeVector(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&c| c as u64).sum()
    }

    /// Componentwise order on N^k.
    pub fn le(&self, other: &DegreeVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise maximum.
    pub fn join(&self, other: &DegreeVector) -> DegreeVector {
        DegreeVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    /// Componentwise minimum.
    pub fn meet(&self, other: &DegreeVector) -> DegreeVector {
        DegreeVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn add(&self, other: &DegreeVector) -> DegreeVector {
        DegreeVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }

    /// `self - other` when `other <= self`, otherwise an error.
    pub fn checked_sub(&self, other: &DegreeVector) -> Result<DegreeVector> {
        if !other.le(self) {
            return Err(Error::OutOfRange {
                requested: other.0.clone(),
                degree: self.0.clone(),
            });
        }
        Ok(DegreeVector(
            self.0.iter().zip(&other.0).map(|(&a, &b)| a - b).collect(),
        ))
    }

    /// Colors with a nonzero entry.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn get(&self, color: usize) -> u32 {
        self.0[color]
    }

    /// All vectors componentwise at most `self`, in lexicographic order.
    pub fn box_iter(&self) -> Vec<DegreeVector> {
        let mut acc = vec![Vec::new()];
        for &b in &self.0 {
            let mut next = Vec::with_capacity(acc.len() * (b as usize + 1));
            for p in &acc {
                for v in 0..=b {
                    let mut q = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
            acc = next;
        }
        acc.into_iter().map(DegreeVector).collect()
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// One coordinate of an extended degree in (N ∪ {∞})^k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtEntry {
    Fin(u32),
    Inf,
}

impl ExtEntry {
    pub fn is_inf(&self) -> bool {
        matches!(self, ExtEntry::Inf)
    }
}

/// Element of (N ∪ {∞})^k: the degree of a boundary path.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtDegree(pub Vec<ExtEntry>);

impl ExtDegree {
    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Colors whose entry is infinite.
    pub fn infinite_support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, e)| e.is_inf())
            .map(|(i, _)| i)
            .collect()
    }

    /// Componentwise comparison of a finite vector against this extended degree.
    pub fn dominates(&self, fin: &DegreeVector) -> bool {
        self.0.iter().zip(&fin.0).all(|(e, &c)| match e {
            ExtEntry::Inf => true,
            ExtEntry::Fin(n) => c <= *n,
        })
    }
}

impl fmt::Display for ExtDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            match e {
                ExtEntry::Fin(n) => write!(f, "{n}")?,
                ExtEntry::Inf => write!(f, "inf")?,
            }
        }
        write!(f, ")")
    }
}

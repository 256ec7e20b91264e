//! Permutations of `{0..n-1}` and permutation groups materialized by closure.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group closure exceeded the budget of {cap} elements")]
    ClosureBudgetExceeded { cap: usize },
    #[error("generators act on different degrees ({0} vs {1})")]
    DegreeMismatch(usize, usize),
    #[error("image array is not a bijection on 0..{0}")]
    NotABijection(usize),
}

/// A bijection of `{0..n-1}`, stored by images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(GroupError::NotABijection(n));
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Self { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// `self` followed by `other`: `i ↦ other(self(i))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut i = self.apply(start);
            while i != start {
                seen[i] = true;
                cycle.push(i);
                i = self.apply(i);
            }
            out.push(cycle);
        }
        out
    }

    /// Order in the symmetric group: lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cycle notation including fixed points, e.g. `(0)(1 2)`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.images.is_empty() {
            return write!(f, "()");
        }
        for cycle in self.cycles() {
            write!(f, "(")?;
            for (k, i) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{i}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;

/// A permutation group with every element listed.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl PermutationGroup {
    /// Breadth-first closure of `generators` under right multiplication.
    /// Elements are returned sorted lexicographically by image array.
    pub fn generate(
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<Self, GroupError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch(degree, g.degree()));
            }
        }
        // distinct generators only; the group is the same
        let mut gens: Vec<Permutation> = Vec::new();
        for g in &generators {
            if !g.is_identity() && !gens.contains(g) {
                gens.push(g.clone());
            }
        }

        let id = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(id.clone());
        queue.push_back(id);
        while let Some(g) = queue.pop_front() {
            for s in &gens {
                let h = g.then(s);
                if !seen.contains(&h) {
                    if seen.len() >= cap {
                        return Err(GroupError::ClosureBudgetExceeded { cap });
                    }
                    seen.insert(h.clone());
                    queue.push_back(h);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(Self {
            degree,
            generators,
            elements,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Least `e` with `g^e = 1` for every element `g`.
    pub fn exponent(&self) -> u64 {
        self.elements
            .iter()
            .fold(1u64, |acc, g| acc.lcm(&g.order()))
    }

    /// Orbit of `point` under the group, sorted.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        orbit(self.degree, &self.generators, point)
    }
}

/// Order and exponent of the group generated by `generators`, found by a
/// closure that keeps only compact image arrays (no sorted element list).
/// Meant for large groups where [`PermutationGroup::generate`] is too heavy.
pub fn order_and_exponent(
    degree: usize,
    generators: &[Permutation],
    cap: usize,
) -> Result<(usize, u64), GroupError> {
    if degree > 256 {
        let g = PermutationGroup::generate(degree, generators.to_vec(), cap)?;
        return Ok((g.order(), g.exponent()));
    }
    for g in generators {
        if g.degree() != degree {
            return Err(GroupError::DegreeMismatch(degree, g.degree()));
        }
    }
    let gens: Vec<Vec<u8>> = generators
        .iter()
        .filter(|g| !g.is_identity())
        .map(|g| g.images().iter().map(|&i| i as u8).collect())
        .collect();
    let id: Box<[u8]> = (0..degree).map(|i| i as u8).collect();
    let mut seen: HashSet<Box<[u8]>> = HashSet::new();
    let mut queue = VecDeque::new();
    let mut exponent = 1u64;
    seen.insert(id.clone());
    queue.push_back(id);
    let mut buf = vec![0u32; degree];
    while let Some(g) = queue.pop_front() {
        buf.iter_mut().zip(g.iter()).for_each(|(b, &v)| *b = v as u32);
        exponent = exponent.lcm(&Permutation::from_images_unchecked(buf.clone()).order());
        for s in &gens {
            let h: Box<[u8]> = g.iter().map(|&i| s[i as usize]).collect();
            if !seen.contains(&h) {
                if seen.len() >= cap {
                    return Err(GroupError::ClosureBudgetExceeded { cap });
                }
                seen.insert(h.clone());
                queue.push_back(h);
            }
        }
    }
    Ok((seen.len(), exponent))
}

/// Orbit of `point` under the group generated by `generators`, sorted.
/// Does not require the group to be materialized.
pub fn orbit(degree: usize, generators: &[Permutation], point: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    let mut stack = vec![point];
    seen[point] = true;
    while let Some(i) = stack.pop() {
        for g in generators {
            let j = g.apply(i);
            if !seen[j] {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    (0..degree).filter(|&i| seen[i]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Permutation {
        Permutation::from_images(v.to_vec()).unwrap()
    }

    #[test]
    fn rejects_non_bijection() {
        assert_eq!(
            Permutation::from_images(vec![0, 0, 1]),
            Err(GroupError::NotABijection(3))
        );
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn composition_and_inverse() {
        let a = p(&[1, 2, 0]);
        let b = p(&[0, 2, 1]);
        // apply a, then b
        assert_eq!(a.then(&b).images(), &[2, 1, 0]);
        assert!(a.then(&a.inverse()).is_identity());
        assert_eq!(a.order(), 3);
        assert_eq!(b.order(), 2);
        assert_eq!(format!("{b}"), "(0)(1 2)");
    }

    #[test]
    fn symmetric_group_closure() {
        let g = PermutationGroup::generate(4, vec![p(&[1, 2, 3, 0]), p(&[1, 0, 2, 3])], 100)
            .unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.exponent(), 12);
        assert!(g.elements().windows(2).all(|w| w[0] < w[1]));
        assert!(g.contains(&p(&[3, 2, 1, 0])));
    }

    #[test]
    fn closure_budget() {
        let err = PermutationGroup::generate(5, vec![p(&[1, 2, 3, 4, 0]), p(&[1, 0, 2, 3, 4])], 50)
            .unwrap_err();
        assert_eq!(err, GroupError::ClosureBudgetExceeded { cap: 50 });
    }

    #[test]
    fn trivial_group() {
        let g = PermutationGroup::generate(3, vec![Permutation::identity(3)], 10).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.exponent(), 1);
        assert_eq!(g.orbit(1), vec![1]);
    }
}

//! Classical automorphism groups and isomorphisms of matroids, by brute force over `S_n`.

use std::fmt;

use crate::matroid::{Matroid, MatroidError, Subset};

/// Largest ground set [`automorphism_group`] scans.
pub const MAX_AUT_SIZE: usize = 9;

/// Iterates all permutations of `1..=n` as image vectors (`p[i]` is the image of the
/// `i+1`-th element), in lexicographic order starting from the identity.
pub struct Permutations {
    next: Option<Vec<u8>>,
}

impl Permutations {
    pub fn new(n: usize) -> Permutations {
        Permutations {
            next: Some((1..=n as u8).collect()),
        }
    }
}

impl Iterator for Permutations {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        if let Some(i) = (1..succ.len()).rev().find(|&i| succ[i - 1] < succ[i]) {
            let j = (i..succ.len())
                .rev()
                .find(|&j| succ[j] > succ[i - 1])
                .unwrap();
            succ.swap(i - 1, j);
            succ[i..].reverse();
            self.next = Some(succ);
        }
        Some(cur)
    }
}

/// A bijection of a label set, stored as an image table indexed by label.
/// Labels outside the domain (including 0) are fixed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(max_label: u8) -> Permutation {
        Permutation {
            images: (0..=max_label).collect(),
        }
    }

    /// Sends `domain[k]` to `targets[k]`; `targets` must be a rearrangement of `domain`.
    pub fn from_images(domain: &[u8], targets: &[u8]) -> Permutation {
        debug_assert_eq!(domain.len(), targets.len());
        let max = domain.iter().chain(targets).copied().max().unwrap_or(0);
        let mut p = Permutation::identity(max);
        for (&a, &b) in domain.iter().zip(targets) {
            p.images[a as usize] = b;
        }
        p
    }

    pub fn apply(&self, label: u8) -> u8 {
        self.images.get(label as usize).copied().unwrap_or(label)
    }

    pub fn apply_set(&self, s: Subset) -> Subset {
        s.iter().map(|x| self.apply(x)).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let max = self.images.len().max(other.images.len()) as u8 - 1;
        Permutation {
            images: (0..=max).map(|x| self.apply(other.apply(x))).collect(),
        }
        .trimmed()
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = self.images.clone();
        for (x, &y) in self.images.iter().enumerate() {
            images[y as usize] = x as u8;
        }
        Permutation { images }.trimmed()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x as u8 == y)
    }

    fn trimmed(mut self) -> Permutation {
        while self.images.len() > 1
            && *self.images.last().unwrap() as usize == self.images.len() - 1
        {
            self.images.pop();
        }
        self
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, y) in self.images.iter().enumerate().skip(1) {
            if i > 1 {
                write!(f, " ")?;
            }
            write!(f, "{y}")?;
        }
        write!(f, "]")
    }
}

/// A permutation group on a ground set, stored as its full element list (sorted).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    pub ground: Subset,
    elements: Vec<Permutation>,
}

impl PermGroup {
    pub fn degree(&self) -> usize {
        self.ground.len()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(&p.clone().trimmed()).is_ok()
    }

    /// Identity, composition closure and inverses, checked over all pairs.
    pub fn satisfies_group_axioms(&self) -> bool {
        let id = Permutation::identity(0);
        self.contains(&id)
            && self.elements.iter().all(|a| {
                self.contains(&a.inverse())
                    && self.elements.iter().all(|b| self.contains(&a.compose(b)))
            })
    }
}

/// Every permutation of the ground set of `m` (as a [`Permutation`]) satisfying `keep`,
/// given the permutation and its set map.
pub(crate) fn filter_permutations<F>(
    m: &Matroid,
    limit: usize,
    keep: F,
) -> Result<PermGroup, MatroidError>
where
    F: Fn(&dyn Fn(Subset) -> Subset) -> bool,
{
    let n = m.n();
    if n > limit {
        return Err(MatroidError::TooLarge { n, limit });
    }
    let labels = m.ground_labels().to_vec();
    let mut elements = Vec::new();
    for perm in Permutations::new(n) {
        let targets: Vec<u8> = perm.iter().map(|&k| labels[k as usize - 1]).collect();
        let p = Permutation::from_images(&labels, &targets);
        let map = |s: Subset| p.apply_set(s);
        if keep(&map) {
            elements.push(p.trimmed());
        }
    }
    elements.sort();
    Ok(PermGroup {
        ground: m.ground_labels(),
        elements,
    })
}

/// `Aut(M)`: permutations of `E` that map bases to bases.
pub fn automorphism_group(m: &Matroid) -> Result<PermGroup, MatroidError> {
    // a bijection on sets of equal size that sends bases into bases is onto them
    filter_permutations(m, MAX_AUT_SIZE, |map| {
        m.bases().iter().all(|&b| m.is_basis(map(b)))
    })
}

/// A basis-preserving bijection `E(m1) -> E(m2)` as sorted `(from, to)` pairs, if one exists.
pub fn is_isomorphic(m1: &Matroid, m2: &Matroid) -> Option<Vec<(u8, u8)>> {
    if m1.n() != m2.n() || m1.rank() != m2.rank() || m1.num_bases() != m2.num_bases() {
        return None;
    }
    let from = m1.ground_labels().to_vec();
    let to = m2.ground_labels().to_vec();
    for perm in Permutations::new(m1.n()) {
        let image = |s: Subset| -> Subset {
            s.iter()
                .map(|x| to[perm[from.iter().position(|&l| l == x).unwrap()] as usize - 1])
                .collect()
        };
        if m1.bases().iter().all(|&b| m2.is_basis(image(b))) {
            return Some(
                from.iter()
                    .zip(&perm)
                    .map(|(&a, &k)| (a, to[k as usize - 1]))
                    .collect(),
            );
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{decode_revlex, enumerate_all, RevlexCode};

    fn decode(hex: &str, n: usize, r: usize) -> Matroid {
        decode_revlex(&RevlexCode::new(hex, n, r).unwrap()).unwrap()
    }

    #[test]
    fn permutations_count_and_order() {
        let all: Vec<_> = Permutations::new(4).collect();
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(Permutations::new(0).count(), 1);
    }

    #[test]
    fn known_orders() {
        assert_eq!(
            automorphism_group(&Matroid::uniform_n(2, 4).unwrap())
                .unwrap()
                .order(),
            24
        );
        assert_eq!(automorphism_group(&decode("3", 2, 1)).unwrap().order(), 2);
        assert_eq!(automorphism_group(&decode("1", 2, 1)).unwrap().order(), 1);
        assert_eq!(automorphism_group(&Matroid::fano()).unwrap().order(), 168);
    }

    #[test]
    fn groups_are_groups() {
        for m in enumerate_all(4).unwrap() {
            assert!(automorphism_group(&m).unwrap().satisfies_group_axioms());
        }
        assert!(automorphism_group(&Matroid::fano())
            .unwrap()
            .satisfies_group_axioms());
    }

    #[test]
    fn independent_set_characterisation_agrees() {
        for n in 1..=4 {
            for m in enumerate_all(n).unwrap() {
                let ind = m.independent_sets();
                let via_ind = filter_permutations(&m, MAX_AUT_SIZE, |map| {
                    ind.iter().all(|s| ind.contains(map(s)))
                })
                .unwrap();
                assert_eq!(via_ind, automorphism_group(&m).unwrap());
            }
        }
    }

    #[test]
    fn isomorphisms() {
        let u24 = Matroid::uniform_n(2, 4).unwrap();
        let moved = u24.shift(3).unwrap();
        assert!(is_isomorphic(&u24, &moved).is_some());
        assert!(is_isomorphic(&u24, &decode("1f", 4, 2)).is_none());
        let fano = Matroid::fano();
        let other = fano.relabel(|x| 8 - x).unwrap();
        let bij = is_isomorphic(&fano, &other).unwrap();
        let map = |x: u8| bij.iter().find(|p| p.0 == x).unwrap().1;
        assert!(fano
            .bases()
            .iter()
            .all(|b| other.is_basis(b.iter().map(map).collect())));
    }

    #[test]
    fn too_large() {
        let m = Matroid::uniform_n(1, 10).unwrap();
        assert!(matches!(
            automorphism_group(&m),
            Err(MatroidError::TooLarge { .. })
        ));
    }
}

//! Exhaustive enumeration of small matroids and brute-force canonical forms.

use super::revlex::{bits_to_hex, revlex_rank, revlex_subsets};
use super::{GroundSet, Matroid, MatroidError, RevlexCode, Subset};
use crate::classical::Permutations;

/// Largest ground set [`enumerate_matroids`] accepts.
pub const MAX_ENUMERATION_SIZE: usize = 5;

/// Largest ground set [`canonical_form`] accepts (it scans all `n!` relabelings).
pub const MAX_CANONICAL_SIZE: usize = 8;

/// Every matroid of rank `r` on `{1..n}`; with `up_to_isomorphism`, one representative
/// per class, namely the relabeling whose revlex code is smallest. Sorted by code.
pub fn enumerate_matroids(
    n: usize,
    r: usize,
    up_to_isomorphism: bool,
) -> Result<Vec<Matroid>, MatroidError> {
    if n > MAX_ENUMERATION_SIZE {
        return Err(MatroidError::TooLarge {
            n,
            limit: MAX_ENUMERATION_SIZE,
        });
    }
    if r > n {
        return Err(MatroidError::RankOutOfRange { rank: r, n });
    }
    let ground = if n == 0 {
        GroundSet::empty()
    } else {
        GroundSet::range(n)
    };
    let candidates = revlex_subsets(n, r);
    let families = 1u32 << candidates.len();
    let mut out = Vec::new();
    for fam in 1..families {
        let bases: Vec<Subset> = candidates
            .iter()
            .enumerate()
            .filter(|(k, _)| fam >> k & 1 == 1)
            .map(|(_, &s)| s)
            .collect();
        let Ok(m) = Matroid::new(ground, bases) else {
            continue;
        };
        if up_to_isomorphism {
            let (canon, _) = canonical_form(&m)?;
            if canon != m {
                continue;
            }
        }
        out.push(m);
    }
    out.sort_by_key(|m| super::encode_revlex(m).expect("standard ground set").hex);
    Ok(out)
}

/// Isomorphism class representatives of every rank on `{1..n}`, ordered by rank then code.
pub fn enumerate_all(n: usize) -> Result<Vec<Matroid>, MatroidError> {
    let mut out = Vec::new();
    for r in 0..=n {
        out.extend(enumerate_matroids(n, r, true)?);
    }
    Ok(out)
}

/// Class representatives for all ground-set sizes `0..=max_n`, including the matroid
/// on the empty set.
pub fn iso_catalog(max_n: usize) -> Result<Vec<Matroid>, MatroidError> {
    let mut out = vec![Matroid::empty()];
    for n in 1..=max_n {
        out.extend(enumerate_all(n)?);
    }
    Ok(out)
}

/// Relabels `m` onto `{1..n}` so that its revlex code is lexicographically smallest
/// among all relabelings. Two matroids are isomorphic exactly when their canonical
/// forms are equal.
pub fn canonical_form(m: &Matroid) -> Result<(Matroid, RevlexCode), MatroidError> {
    let n = m.n();
    if n > MAX_CANONICAL_SIZE {
        return Err(MatroidError::TooLarge {
            n,
            limit: MAX_CANONICAL_SIZE,
        });
    }
    let labels = m.ground_labels().to_vec();
    let len = super::binomial(n, m.rank());
    let mut best: Option<(Vec<bool>, Vec<u8>)> = None;
    let mut bits = vec![false; len];
    for perm in Permutations::new(n) {
        // perm[i] is the new label (1-based) of the i-th old label
        bits.iter_mut().for_each(|b| *b = false);
        for &b in m.bases() {
            let img: Subset = b
                .iter()
                .map(|x| perm[labels.iter().position(|&l| l == x).unwrap()])
                .collect();
            bits[revlex_rank(img)] = true;
        }
        if best.as_ref().is_none_or(|(cur, _)| bits < *cur) {
            best = Some((bits.clone(), perm.clone()));
        }
    }
    let (bits, perm) = best.expect("at least the identity permutation");
    let canon = m.relabel(|x| perm[labels.iter().position(|&l| l == x).unwrap()])?;
    let code = RevlexCode {
        n,
        r: m.rank(),
        hex: bits_to_hex(&bits),
    };
    Ok((canon, code))
}

//! The reverse lexicographic basis encoding used by the matroid database.
//!
//! The `C(n, r)` subsets of size `r` of `{1..n}` are listed in reverse lexicographic
//! (colex) order; bit `k` of the string says whether the `k`-th subset is a basis.
//! The bit string is left padded with zeros to a multiple of four and written as
//! lowercase hex.

use std::fmt;

use super::{binomial, GroundSet, Matroid, MatroidError, Subset};

/// A revlex hex code together with the `(n, r)` it is read against.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RevlexCode {
    pub n: usize,
    pub r: usize,
    pub hex: String,
}

impl RevlexCode {
    /// Validates length and alphabet; the hex is normalised to lowercase.
    pub fn new(hex: &str, n: usize, r: usize) -> Result<RevlexCode, MatroidError> {
        if n > super::MAX_LABEL as usize {
            return Err(MatroidError::TooLarge {
                n,
                limit: super::MAX_LABEL as usize,
            });
        }
        if r > n {
            return Err(MatroidError::RankOutOfRange { rank: r, n });
        }
        let expected = hex_len(n, r);
        if hex.len() != expected {
            return Err(MatroidError::BadHexLength {
                expected,
                got: hex.len(),
            });
        }
        if !hex.bytes().all(|b| b.is_ascii_hexdigit()) {
            return Err(MatroidError::BadHex(hex.to_string()));
        }
        Ok(RevlexCode {
            n,
            r,
            hex: hex.to_ascii_lowercase(),
        })
    }

    /// One bool per `r`-subset, in revlex order.
    pub fn bits(&self) -> Result<Vec<bool>, MatroidError> {
        let len = binomial(self.n, self.r);
        let padded: Vec<bool> = self
            .hex
            .chars()
            .flat_map(|c| {
                let v = c.to_digit(16).unwrap();
                (0..4).rev().map(move |i| v >> i & 1 == 1)
            })
            .collect();
        let pad = padded.len() - len;
        if padded[..pad].iter().any(|&b| b) {
            return Err(MatroidError::BadHexPadding(self.hex.clone()));
        }
        Ok(padded[pad..].to_vec())
    }

    /// Binary string form, first character is the first subset.
    pub fn binary(&self) -> Result<String, MatroidError> {
        Ok(self
            .bits()?
            .into_iter()
            .map(|b| if b { '1' } else { '0' })
            .collect())
    }
}

impl fmt::Display for RevlexCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.hex)
    }
}

/// `⌈C(n, r) / 4⌉`.
pub fn hex_len(n: usize, r: usize) -> usize {
    binomial(n, r).div_ceil(4)
}

/// All `r`-subsets of `{1..n}` in reverse lexicographic order.
///
/// Since label `i` is bit `i`, this is increasing mask order among masks of
/// popcount `r`, so Gosper's successor walks it directly.
pub fn revlex_subsets(n: usize, r: usize) -> Vec<Subset> {
    if r > n {
        return Vec::new();
    }
    if r == 0 {
        return vec![Subset::EMPTY];
    }
    // walk masks over bits 0..n, then shift so bit i becomes label i + 1
    let limit: u64 = 1 << n;
    let mut out = Vec::with_capacity(binomial(n, r));
    let mut x: u64 = (1u64 << r) - 1;
    while x < limit {
        out.push(Subset((x << 1) as u32));
        let c = x & x.wrapping_neg();
        let y = x + c;
        x = (((y ^ x) >> 2) / c) | y;
    }
    out
}

/// Position of `s` in [`revlex_subsets`] for its size: `Σ C(s_i - 1, i)` over the
/// sorted elements `s_1 < s_2 < ...`.
pub fn revlex_rank(s: Subset) -> usize {
    s.iter()
        .enumerate()
        .map(|(i, label)| binomial(label as usize - 1, i + 1))
        .sum()
}

pub fn decode_revlex(code: &RevlexCode) -> Result<Matroid, MatroidError> {
    let bits = code.bits()?;
    let subsets = revlex_subsets(code.n, code.r);
    let bases: Vec<Subset> = subsets
        .into_iter()
        .zip(bits)
        .filter_map(|(s, b)| b.then_some(s))
        .collect();
    let ground = if code.n == 0 {
        GroundSet::empty()
    } else {
        GroundSet::range(code.n)
    };
    Matroid::new(ground, bases).map_err(|e| MatroidError::ExchangeAxiomFailure(Box::new(e)))
}

/// Requires the ground set to be `{1..n}`; call [`Matroid::standardize`] first otherwise.
pub fn encode_revlex(m: &Matroid) -> Result<RevlexCode, MatroidError> {
    if !m.ground().is_standard() {
        return Err(MatroidError::NotASubset {
            subset: m.ground_labels(),
            ground: Subset::range(m.n()),
        });
    }
    let bits: Vec<bool> = revlex_subsets(m.n(), m.rank())
        .into_iter()
        .map(|s| m.is_basis(s))
        .collect();
    Ok(RevlexCode {
        n: m.n(),
        r: m.rank(),
        hex: bits_to_hex(&bits),
    })
}

pub(crate) fn bits_to_hex(bits: &[bool]) -> String {
    let pad = (4 - bits.len() % 4) % 4;
    let padded: Vec<bool> = std::iter::repeat_n(false, pad)
        .chain(bits.iter().copied())
        .collect();
    padded
        .chunks(4)
        .map(|c| {
            let v = c.iter().fold(0u32, |acc, &b| acc << 1 | b as u32);
            char::from_digit(v, 16).unwrap()
        })
        .collect()
}

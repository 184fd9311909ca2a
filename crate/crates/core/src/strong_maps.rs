//! Strong maps between matroids, counted by brute force, and the matroidal
//! Lovász-style isomorphism test built on those counts.
//!
//! A map `φ: E(M1) -> E(M2) ∪ {e}` is written as a slice of images aligned with the
//! sorted labels of `E(M1)`; the basepoint `e` is label `0`.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::classical::automorphism_group;
use crate::matroid::{
    canonical_form, iso_catalog, Matroid, MatroidError, RevlexCode, Subset, SubsetFamily,
};

/// The basepoint label.
pub const BASEPOINT: u8 = 0;

/// Largest number of candidate functions [`hom_counts`] will scan.
pub const MAX_FUNCTIONS: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrongMapError {
    #[error("{functions} candidate functions exceed the enumeration limit {limit}")]
    TooLarge { functions: u64, limit: u64 },
    #[error("catalog covers ground sets up to {covered} elements, {needed} needed")]
    CatalogIncomplete { needed: usize, covered: usize },
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// Isomorphism class representatives for all ground sets of size `0..=max_n`, with
/// their canonical codes and automorphism group orders.
#[derive(Debug, Clone)]
pub struct Catalog {
    max_n: usize,
    entries: Vec<CatalogEntry>,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub matroid: Matroid,
    pub code: RevlexCode,
    pub aut_order: usize,
}

impl Catalog {
    pub fn new(max_n: usize) -> Result<Catalog, StrongMapError> {
        let entries = iso_catalog(max_n)?
            .into_iter()
            .map(|matroid| {
                let code = canonical_form(&matroid)?.1;
                let aut_order = automorphism_group(&matroid)?.order();
                Ok(CatalogEntry {
                    matroid,
                    code,
                    aut_order,
                })
            })
            .collect::<Result<_, MatroidError>>()?;
        Ok(Catalog { max_n, entries })
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, code: &RevlexCode) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| &e.code == code)
    }

    fn require(&self, needed: usize) -> Result<(), StrongMapError> {
        if needed > self.max_n {
            Err(StrongMapError::CatalogIncomplete {
                needed,
                covered: self.max_n,
            })
        } else {
            Ok(())
        }
    }
}

/// Strong-map counts from `M1` to `M2`, with `hom` split by the isomorphism class
/// (canonical code) of the image `M2 | (φ(E1) ∩ E2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomCounts {
    pub hom: u64,
    pub surj: u64,
    pub emb: u64,
    pub by_image_class: BTreeMap<RevlexCode, u64>,
}

impl HomCounts {
    /// `|Hom(M1, M2; N)|`.
    pub fn hom_with_image(&self, class: &RevlexCode) -> u64 {
        self.by_image_class.get(class).copied().unwrap_or(0)
    }
}

/// Flats of `m2 ⊕ U(0, {e})` pull back to flats of `m1 ⊕ U(0, {e})`. Since `e` is a
/// loop every extended flat is `F ∪ {e}`, so it is enough that
/// `{x : φ(x) ∈ F ∪ {e}}` is a flat of `m1` for each flat `F` of `m2`.
pub fn is_strong_map<F: Fn(u8) -> u8>(m1: &Matroid, m2: &Matroid, phi: F) -> bool {
    let images: Vec<u8> = m1.ground().iter().map(phi).collect();
    MapChecker::new(m1, m2).is_strong(&images)
}

struct MapChecker {
    source: Vec<u8>,
    target_ground: Subset,
    source_flats: SubsetFamily,
    target_flats: SubsetFamily,
}

impl MapChecker {
    fn new(m1: &Matroid, m2: &Matroid) -> Self {
        MapChecker {
            source: m1.ground_labels().to_vec(),
            target_ground: m2.ground_labels(),
            source_flats: m1.flats(),
            target_flats: m2.flats(),
        }
    }

    fn is_strong(&self, images: &[u8]) -> bool {
        if images
            .iter()
            .any(|&y| y != BASEPOINT && !self.target_ground.contains(y))
        {
            return false;
        }
        self.target_flats.iter().all(|f| {
            let pre: Subset = self
                .source
                .iter()
                .zip(images)
                .filter(|&(_, &y)| y == BASEPOINT || f.contains(y))
                .map(|(&x, _)| x)
                .collect();
            self.source_flats.contains(pre)
        })
    }

    fn image(&self, images: &[u8]) -> Subset {
        images
            .iter()
            .filter(|&&y| y != BASEPOINT)
            .copied()
            .collect()
    }

    fn is_injective_into_ground(&self, images: &[u8]) -> bool {
        self.image(images).len() == images.len() && images.iter().all(|&y| y != BASEPOINT)
    }
}

fn function_count(n1: usize, n2: usize) -> Result<u64, StrongMapError> {
    let mut total: u64 = 1;
    for _ in 0..n1 {
        total = total.saturating_mul(n2 as u64 + 1);
        if total > MAX_FUNCTIONS {
            return Err(StrongMapError::TooLarge {
                functions: total,
                limit: MAX_FUNCTIONS,
            });
        }
    }
    Ok(total)
}

/// Calls `visit` with every function `E(m1) -> E(m2) ∪ {e}`, as image vectors.
fn for_each_function<F: FnMut(&[u8])>(
    m1: &Matroid,
    m2: &Matroid,
    mut visit: F,
) -> Result<(), StrongMapError> {
    function_count(m1.n(), m2.n())?;
    let mut codomain = vec![BASEPOINT];
    codomain.extend(m2.ground().iter());
    let n1 = m1.n();
    let mut digits = vec![0usize; n1];
    let mut images = vec![BASEPOINT; n1];
    loop {
        visit(&images);
        let mut k = 0;
        loop {
            if k == n1 {
                return Ok(());
            }
            digits[k] += 1;
            if digits[k] < codomain.len() {
                images[k] = codomain[digits[k]];
                break;
            }
            digits[k] = 0;
            images[k] = codomain[0];
            k += 1;
        }
    }
}

/// All strong maps `m1 -> m2`, as image vectors aligned with the labels of `E(m1)`.
pub fn strong_maps(m1: &Matroid, m2: &Matroid) -> Result<Vec<Vec<u8>>, StrongMapError> {
    let checker = MapChecker::new(m1, m2);
    let mut out = Vec::new();
    for_each_function(m1, m2, |images| {
        if checker.is_strong(images) {
            out.push(images.to_vec());
        }
    })?;
    Ok(out)
}

/// Exhaustive `hom`, `surj` and `emb` counts.
pub fn hom_counts(m1: &Matroid, m2: &Matroid) -> Result<HomCounts, StrongMapError> {
    function_count(m1.n(), m2.n())?;
    let checker = MapChecker::new(m1, m2);
    let source_class = canonical_form(m1)?.1;
    let mut class_of: HashMap<Subset, RevlexCode> = HashMap::new();
    let mut counts = HomCounts {
        hom: 0,
        surj: 0,
        emb: 0,
        by_image_class: BTreeMap::new(),
    };
    let mut failure = None;
    for_each_function(m1, m2, |images| {
        if failure.is_some() || !checker.is_strong(images) {
            return;
        }
        let image = checker.image(images);
        let class = match class_of.get(&image) {
            Some(c) => c.clone(),
            None => match m2.restrict(image).and_then(|r| canonical_form(&r)) {
                Ok((_, c)) => {
                    class_of.insert(image, c.clone());
                    c
                }
                Err(e) => {
                    failure = Some(e);
                    return;
                }
            },
        };
        counts.hom += 1;
        if image == m2.ground_labels() {
            counts.surj += 1;
        }
        if checker.is_injective_into_ground(images) && class == source_class {
            counts.emb += 1;
        }
        *counts.by_image_class.entry(class).or_insert(0) += 1;
    })?;
    if let Some(e) = failure {
        return Err(e.into());
    }
    Ok(counts)
}

/// Checks `|Hom(M1, M2; N)| · |Aut(N)| = |Surj(M1, N)| · |Emb(N, M2)|` for every class
/// `N` in the catalog, and that the classes partition `Hom(M1, M2)`.
pub fn verify_decomposition(
    m1: &Matroid,
    m2: &Matroid,
    catalog: &Catalog,
) -> Result<bool, StrongMapError> {
    catalog.require(m1.n().min(m2.n()))?;
    let counts = hom_counts(m1, m2)?;
    let mut total: u64 = 0;
    for entry in catalog.entries() {
        if entry.matroid.n() > m1.n().min(m2.n()) {
            continue;
        }
        let surj = hom_counts(m1, &entry.matroid)?.surj;
        let emb = hom_counts(&entry.matroid, m2)?.emb;
        let lhs = counts.hom_with_image(&entry.code) * entry.aut_order as u64;
        if lhs != surj * emb {
            return Ok(false);
        }
        total += lhs / entry.aut_order as u64;
    }
    Ok(total == counts.hom)
}

/// Outcome of comparing `hom(M1, L)` with `hom(M2, L)` over a catalog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LovaszOutcome {
    pub counts_agree: bool,
    /// First catalog matroid `L` with `hom(M1, L) != hom(M2, L)`, with both counts.
    pub witness: Option<(Matroid, u64, u64)>,
}

pub fn lovasz_isomorphism_test(
    m1: &Matroid,
    m2: &Matroid,
    catalog: &Catalog,
) -> Result<LovaszOutcome, StrongMapError> {
    catalog.require(m1.n().max(m2.n()))?;
    for entry in catalog.entries() {
        let a = hom_counts(m1, &entry.matroid)?.hom;
        let b = hom_counts(m2, &entry.matroid)?.hom;
        if a != b {
            return Ok(LovaszOutcome {
                counts_agree: false,
                witness: Some((entry.matroid.clone(), a, b)),
            });
        }
    }
    Ok(LovaszOutcome {
        counts_agree: true,
        witness: None,
    })
}

//! A dense Aho–Corasick automaton over the leading words of a changing basis.

#[cfg(test)]
use crate::ncpoly::NaiveFinder;
use crate::ncpoly::{DivisorFinder, FactorMatch, Letter, Word};

const NONE: u32 = u32::MAX;

/// One static Aho–Corasick machine over a fixed group of pattern ids.
#[derive(Debug, Clone)]
struct Block {
    ids: Vec<usize>,
    delta: Vec<u32>,
    /// Smallest pattern id whose occurrence ends at this state (own or via suffix links).
    out_min: Vec<u32>,
    /// Length of each id's pattern, looked up when reporting a match.
    lens: Vec<(u32, u32)>,
}

impl Block {
    fn build(alphabet: usize, ids: Vec<usize>, patterns: &[Option<Word>]) -> Block {
        let a = alphabet;
        let mut delta = vec![NONE; a];
        let mut own = vec![NONE];
        let mut lens = Vec::with_capacity(ids.len());
        for &id in &ids {
            let w = patterns[id]
                .as_ref()
                .expect("blocks hold live nonempty patterns");
            lens.push((id as u32, w.len() as u32));
            let mut s = 0usize;
            for &l in w.letters() {
                let slot = s * a + l as usize;
                if delta[slot] == NONE {
                    delta[slot] = own.len() as u32;
                    own.push(NONE);
                    delta.extend(std::iter::repeat_n(NONE, a));
                }
                s = delta[slot] as usize;
            }
            own[s] = own[s].min(id as u32);
        }
        lens.sort_unstable();
        let states = own.len();
        let mut fail = vec![0u32; states];
        let mut out_min = vec![NONE; states];
        let mut queue = std::collections::VecDeque::with_capacity(states);
        out_min[0] = own[0];
        for slot in delta.iter_mut().take(a) {
            let t = *slot;
            if t == NONE {
                *slot = 0;
            } else {
                fail[t as usize] = 0;
                queue.push_back(t as usize);
            }
        }
        while let Some(s) = queue.pop_front() {
            let f = fail[s] as usize;
            out_min[s] = own[s].min(out_min[f]);
            for l in 0..a {
                let t = delta[s * a + l];
                if t == NONE {
                    delta[s * a + l] = delta[f * a + l];
                } else {
                    fail[t as usize] = delta[f * a + l];
                    queue.push_back(t as usize);
                }
            }
        }
        Block {
            ids,
            delta,
            out_min,
            lens,
        }
    }

    fn matched(&self, id: u32, end: usize) -> FactorMatch {
        let k = self
            .lens
            .binary_search_by_key(&id, |&(i, _)| i)
            .expect("id in block");
        let len = self.lens[k].1 as usize;
        FactorMatch {
            pattern: id as usize,
            start: end + 1 - len,
            len,
        }
    }

    fn first_match(&self, alphabet: usize, text: &[Letter]) -> Option<FactorMatch> {
        let mut s = 0usize;
        for (i, &l) in text.iter().enumerate() {
            s = self.delta[s * alphabet + l as usize] as usize;
            if self.out_min[s] != NONE {
                return Some(self.matched(self.out_min[s], i));
            }
        }
        None
    }

    /// Lowest id occurring in `text`, at the first place the scan reports it.
    fn lowest(&self, alphabet: usize, text: &[Letter]) -> Option<FactorMatch> {
        let mut best = NONE;
        let mut best_end = 0;
        let mut s = 0usize;
        for (i, &l) in text.iter().enumerate() {
            s = self.delta[s * alphabet + l as usize] as usize;
            let m = self.out_min[s];
            if m < best {
                best = m;
                best_end = i;
            }
        }
        (best != NONE).then(|| self.matched(best, best_end))
    }
}

/// Matches every live pattern as a factor of a text in one left-to-right pass.
///
/// Patterns are addressed by id (the position of the basis element). Live patterns
/// are spread over static blocks whose sizes follow a binary counter: an insertion
/// merges equal-sized blocks, so each pattern is rebuilt O(log k) times. A removal
/// rebuilds only the block that held it.
#[derive(Debug, Clone)]
pub struct DivisibilityAutomaton {
    alphabet: usize,
    patterns: Vec<Option<Word>>,
    blocks: Vec<Block>,
    /// Block holding each id, `NONE` for removed or empty patterns.
    home: Vec<u32>,
    empty_min: u32,
}

impl DivisibilityAutomaton {
    pub fn new(alphabet: usize) -> DivisibilityAutomaton {
        DivisibilityAutomaton {
            alphabet,
            patterns: Vec::new(),
            blocks: Vec::new(),
            home: Vec::new(),
            empty_min: NONE,
        }
    }

    pub fn from_patterns(alphabet: usize, patterns: Vec<Option<Word>>) -> DivisibilityAutomaton {
        let mut a = DivisibilityAutomaton::new(alphabet);
        let mut ids = Vec::new();
        for (id, p) in patterns.iter().enumerate() {
            match p {
                Some(w) if w.is_empty() => a.empty_min = a.empty_min.min(id as u32),
                Some(_) => ids.push(id),
                None => {}
            }
        }
        a.home = vec![NONE; patterns.len()];
        a.patterns = patterns;
        if !ids.is_empty() {
            for &id in &ids {
                a.home[id] = 0;
            }
            a.blocks.push(Block::build(alphabet, ids, &a.patterns));
        }
        a
    }

    /// Appends a pattern and returns its id.
    pub fn push(&mut self, word: Word) -> usize {
        debug_assert!(word.letters().iter().all(|&l| (l as usize) < self.alphabet));
        let id = self.patterns.len();
        let empty = word.is_empty();
        self.patterns.push(Some(word));
        self.home.push(NONE);
        if empty {
            self.empty_min = self.empty_min.min(id as u32);
            return id;
        }
        let mut ids = vec![id];
        while let Some(last) = self.blocks.last() {
            if last.ids.len() > ids.len() {
                break;
            }
            ids.extend(self.blocks.pop().expect("nonempty").ids);
        }
        let b = self.blocks.len() as u32;
        for &i in &ids {
            self.home[i] = b;
        }
        self.blocks
            .push(Block::build(self.alphabet, ids, &self.patterns));
        id
    }

    /// Reserves the next id without a pattern, keeping ids aligned with another list.
    pub fn push_absent(&mut self) -> usize {
        self.patterns.push(None);
        self.home.push(NONE);
        self.patterns.len() - 1
    }

    pub fn remove(&mut self, id: usize) {
        let Some(p) = self.patterns.get_mut(id) else {
            return;
        };
        if p.take().is_none() {
            return;
        }
        if self.empty_min == id as u32 {
            self.empty_min = self
                .patterns
                .iter()
                .position(|p| p.as_ref().is_some_and(Word::is_empty))
                .map_or(NONE, |i| i as u32);
        }
        let b = std::mem::replace(&mut self.home[id], NONE);
        if b == NONE {
            return;
        }
        let b = b as usize;
        let ids: Vec<usize> = self.blocks[b]
            .ids
            .iter()
            .copied()
            .filter(|&i| i != id)
            .collect();
        self.blocks[b] = Block::build(self.alphabet, ids, &self.patterns);
    }

    pub fn len(&self) -> usize {
        self.patterns.iter().filter(|p| p.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Total trie states over all blocks.
    pub fn num_states(&self) -> usize {
        self.blocks.iter().map(|b| b.out_min.len()).sum()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// The occurrence of a nonempty pattern ending earliest in `text`, lowest id on ties.
    pub fn first_match(&self, text: &[Letter]) -> Option<FactorMatch> {
        self.blocks
            .iter()
            .filter_map(|b| b.first_match(self.alphabet, text))
            .min_by_key(|m| (m.end(), m.pattern))
    }
}

impl DivisorFinder for DivisibilityAutomaton {
    /// The lowest id occurring anywhere wins; the first position where it is reported
    /// is its leftmost occurrence, since no smaller id can shadow it there.
    fn find_divisor(&self, text: &[Letter]) -> Option<FactorMatch> {
        if self.empty_min != NONE {
            let m = self
                .blocks
                .iter()
                .filter_map(|b| b.lowest(self.alphabet, text))
                .filter(|m| (m.pattern as u32) < self.empty_min)
                .min_by_key(|m| m.pattern);
            return m.or(Some(FactorMatch {
                pattern: self.empty_min as usize,
                start: 0,
                len: 0,
            }));
        }
        self.blocks
            .iter()
            .filter_map(|b| b.lowest(self.alphabet, text))
            .min_by_key(|m| m.pattern)
    }
}

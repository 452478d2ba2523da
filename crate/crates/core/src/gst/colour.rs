use std::fmt;

/// Fixed-width bitset over sequence colours `0..width`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ColourSet {
    words: Box<[u64]>,
    width: usize,
}

impl ColourSet {
    pub fn empty(width: usize) -> Self {
        ColourSet {
            words: vec![0; width.div_ceil(64)].into_boxed_slice(),
            width,
        }
    }

    pub fn full(width: usize) -> Self {
        let mut set = Self::empty(width);
        for c in 0..width {
            set.insert(c);
        }
        set
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn insert(&mut self, colour: usize) {
        assert!(colour < self.width, "colour {colour} out of range");
        self.words[colour / 64] |= 1 << (colour % 64);
    }

    pub fn contains(&self, colour: usize) -> bool {
        colour < self.width && self.words[colour / 64] & (1 << (colour % 64)) != 0
    }

    pub fn union_with(&mut self, other: &ColourSet) {
        for (w, o) in self.words.iter_mut().zip(other.words.iter()) {
            *w |= o;
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// True when every colour `0..width` is present.
    pub fn is_full(&self) -> bool {
        self.len() == self.width
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.width).filter(|&c| self.contains(c))
    }
}

impl fmt::Debug for ColourSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

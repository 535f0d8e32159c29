//! Partitions of n in reverse lexicographic order, starting from `[n]`.
//!
//! Only the first few are ever needed for huge n (looking for a cycle type
//! outside a finite set), so the iterator is lazy.

use super::CycleType;

pub struct Partitions {
    parts: Vec<u64>,
    done: bool,
}

impl Partitions {
    pub fn new(n: u64) -> Self {
        Partitions {
            parts: vec![n],
            done: n == 0,
        }
    }
}

impl Iterator for Partitions {
    type Item = CycleType;

    fn next(&mut self) -> Option<CycleType> {
        if self.done {
            return None;
        }
        let out = CycleType::from_counts(self.parts.iter().map(|&l| (l, 1))).ok();
        // advance: lower the rightmost part > 1, refill greedily
        let mut ones = 0u64;
        while self.parts.last() == Some(&1) {
            self.parts.pop();
            ones += 1;
        }
        match self.parts.pop() {
            None => self.done = true,
            Some(v) => {
                let w = v - 1;
                self.parts.push(w);
                let mut rest = ones + 1;
                while rest >= w {
                    self.parts.push(w);
                    rest -= w;
                }
                if rest > 0 {
                    self.parts.push(rest);
                }
            }
        }
        out
    }
}

//! Fixed-size subset enumeration as `u64` bitmasks.
//!
//! Two orders are provided: plain lexicographic (on the ascending element
//! lists), and the revolving-door Gray order in which consecutive subsets
//! differ by swapping a single element, so a cut size can be maintained with
//! O(1) mask updates per step.

/// Iterator over all `k`-subsets of `{0, ..., n-1}` in lexicographic order of
/// their ascending element lists.
pub struct LexCombinations {
    n: usize,
    k: usize,
    elems: Vec<usize>,
    done: bool,
}

impl LexCombinations {
    pub fn new(n: usize, k: usize) -> Self {
        debug_assert!(n <= 64);
        LexCombinations {
            n,
            k,
            elems: (0..k).collect(),
            done: k > n,
        }
    }

    fn mask(&self) -> u64 {
        self.elems.iter().fold(0u64, |m, &e| m | 1 << e)
    }
}

impl Iterator for LexCombinations {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        let out = self.mask();
        // advance: bump the rightmost element that can still move
        let (n, k) = (self.n, self.k);
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.elems[i] < n - k + i {
                self.elems[i] += 1;
                for j in i + 1..k {
                    self.elems[j] = self.elems[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Iterator over all `k`-subsets of `{0, ..., n-1}` in revolving-door order:
/// consecutive masks differ in exactly two bits (one element out, one in).
///
/// The order is defined recursively: the subsets avoiding the top element
/// `n-1` come first (recursively ordered), followed by the subsets containing
/// it, with their `(k-1)`-subset parts in reversed recursive order. The seam
/// and block ends line up so that the single-swap property holds throughout.
pub struct RevolvingDoor {
    stack: Vec<Frame>,
    acc: u64,
}

struct Frame {
    n: usize,
    k: usize,
    forward: bool,
    stage: u8,
}

impl RevolvingDoor {
    pub fn new(n: usize, k: usize) -> Self {
        debug_assert!(n <= 64);
        let stack = if k <= n {
            vec![Frame {
                n,
                k,
                forward: true,
                stage: 0,
            }]
        } else {
            Vec::new()
        };
        RevolvingDoor { stack, acc: 0 }
    }
}

impl Iterator for RevolvingDoor {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        loop {
            let top = self.stack.last_mut()?;
            if top.k == 0 {
                self.stack.pop();
                return Some(self.acc);
            }
            let (n, k, forward) = (top.n, top.k, top.forward);
            let top_bit = 1u64 << (n - 1);
            if forward {
                match top.stage {
                    0 => {
                        top.stage = 1;
                        if k < n {
                            self.stack.push(Frame {
                                n: n - 1,
                                k,
                                forward: true,
                                stage: 0,
                            });
                        }
                    }
                    1 => {
                        top.stage = 2;
                        self.acc |= top_bit;
                        self.stack.push(Frame {
                            n: n - 1,
                            k: k - 1,
                            forward: false,
                            stage: 0,
                        });
                    }
                    _ => {
                        self.acc &= !top_bit;
                        self.stack.pop();
                    }
                }
            } else {
                match top.stage {
                    0 => {
                        top.stage = 1;
                        self.acc |= top_bit;
                        self.stack.push(Frame {
                            n: n - 1,
                            k: k - 1,
                            forward: true,
                            stage: 0,
                        });
                    }
                    1 => {
                        top.stage = 2;
                        self.acc &= !top_bit;
                        if k < n {
                            self.stack.push(Frame {
                                n: n - 1,
                                k,
                                forward: false,
                                stage: 0,
                            });
                        }
                    }
                    _ => {
                        self.stack.pop();
                    }
                }
            }
        }
    }
}

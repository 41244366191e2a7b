//! Generic graded poset support: cover lists, dense reachability for O(1)
//! order queries, interval and chain enumeration.

use crate::bits::Bits;
use crate::AdmError;

#[derive(Debug)]
pub struct Poset {
    pub n: usize,
    /// Elements covering x.
    pub covers_up: Vec<Vec<usize>>,
    /// Elements covered by x.
    pub covers_down: Vec<Vec<usize>>,
    pub rank: Vec<u32>,
    /// `below[x]` = all y with y <= x.
    pub below: Vec<Bits>,
}

impl Poset {
    /// Build from cover pairs (lower, upper). Ranks must increase by exactly
    /// one along covers.
    pub fn new(n: usize, covers: &[(usize, usize)], rank: Vec<u32>) -> Self {
        let mut covers_up = vec![Vec::new(); n];
        let mut covers_down = vec![Vec::new(); n];
        for &(lo, hi) in covers {
            assert_eq!(rank[lo] + 1, rank[hi], "cover must raise rank by one");
            covers_up[lo].push(hi);
            covers_down[hi].push(lo);
        }
        for v in covers_up.iter_mut().chain(covers_down.iter_mut()) {
            v.sort_unstable();
            v.dedup();
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| rank[x]);
        let mut below = vec![Bits::new(n); n];
        for &x in &order {
            let mut b = Bits::new(n);
            b.set(x);
            for &d in &covers_down[x] {
                b.union_with(&below[d]);
            }
            below[x] = b;
        }
        Poset {
            n,
            covers_up,
            covers_down,
            rank,
            below,
        }
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.below[b].get(a)
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.covers_down[x].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.covers_up[x].is_empty()).collect()
    }

    /// Elements of the closed interval [a, b].
    pub fn interval(&self, a: usize, b: usize) -> Vec<usize> {
        self.below[b]
            .iter_ones()
            .filter(|&x| self.leq(a, x))
            .collect()
    }

    /// All maximal chains of [w, w2], listed top-down, in the order induced
    /// by `order_down` on the down-covers at each step.
    pub fn maximal_chains(
        &self,
        w: usize,
        w2: usize,
        cap: usize,
        order_down: Option<&dyn Fn(usize, usize, usize) -> std::cmp::Ordering>,
    ) -> Result<Vec<Vec<usize>>, AdmError> {
        if !self.leq(w, w2) {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        let mut stack = vec![w2];
        self.chains_rec(w, &mut stack, &mut out, cap, order_down)?;
        Ok(out)
    }

    fn chains_rec(
        &self,
        w: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        cap: usize,
        order_down: Option<&dyn Fn(usize, usize, usize) -> std::cmp::Ordering>,
    ) -> Result<(), AdmError> {
        let x = *stack.last().unwrap();
        if x == w {
            if out.len() >= cap {
                return Err(AdmError::CapExceeded(format!(
                    "more than {cap} maximal chains"
                )));
            }
            out.push(stack.clone());
            return Ok(());
        }
        let mut nexts: Vec<usize> = self.covers_down[x]
            .iter()
            .copied()
            .filter(|&d| self.leq(w, d))
            .collect();
        if let Some(f) = order_down {
            nexts.sort_by(|&a, &b| f(x, a, b));
        }
        for d in nexts {
            stack.push(d);
            self.chains_rec(w, stack, out, cap, order_down)?;
            stack.pop();
        }
        Ok(())
    }
}

/// Cover pairs (transitive reduction) of an arbitrary partial order given as
/// a comparability predicate on 0..n.
pub fn covers_from_leq(n: usize, leq: &dyn Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a == b || !leq(a, b) {
                continue;
            }
            let strict_between = (0..n)
                .any(|c| c != a && c != b && leq(a, c) && leq(c, b));
            if !strict_between {
                out.push((a, b));
            }
        }
    }
    out
}

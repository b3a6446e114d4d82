// SPDX-License-Identifier: Apache-2.0

//! Dinic's maximum flow with integer capacities.

use std::collections::VecDeque;

use crate::error::Result;
use crate::num::Weight;

#[derive(Clone, Debug)]
pub struct FlowNetwork<W: Weight> {
    adj: Vec<Vec<usize>>,
    head: Vec<usize>,
    cap: Vec<W>,
}

impl<W: Weight> FlowNetwork<W> {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            adj: vec![Vec::new(); nodes],
            head: Vec::new(),
            cap: Vec::new(),
        }
    }

    pub fn add_edge(&mut self, from: usize, to: usize, cap: W) {
        self.adj[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.adj[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(W::zero());
    }

    fn levels(&self, s: usize) -> Vec<Option<usize>> {
        let mut level = vec![None; self.adj.len()];
        level[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &id in &self.adj[x] {
                let y = self.head[id];
                if self.cap[id] > W::zero() && level[y].is_none() {
                    level[y] = Some(level[x].unwrap() + 1);
                    queue.push_back(y);
                }
            }
        }
        level
    }

    fn push(&mut self, x: usize, t: usize, limit: W, level: &[Option<usize>], next: &mut [usize]) -> W {
        if x == t {
            return limit;
        }
        while next[x] < self.adj[x].len() {
            let id = self.adj[x][next[x]];
            let y = self.head[id];
            if self.cap[id] > W::zero() && level[y] == level[x].map(|l| l + 1) {
                let pushed = self.push(y, t, limit.min(self.cap[id]), level, next);
                if pushed > W::zero() {
                    self.cap[id] = self.cap[id] - pushed;
                    self.cap[id ^ 1] = self.cap[id ^ 1] + pushed;
                    return pushed;
                }
            }
            next[x] += 1;
        }
        W::zero()
    }

    /// Saturates the network and returns the flow value.
    pub fn max_flow(&mut self, s: usize, t: usize) -> Result<W> {
        let mut flow = W::zero();
        if s == t {
            return Ok(flow);
        }
        loop {
            let level = self.levels(s);
            if level[t].is_none() {
                return Ok(flow);
            }
            let mut next = vec![0; self.adj.len()];
            loop {
                let pushed = self.push(s, t, W::max_value(), &level, &mut next);
                if pushed == W::zero() {
                    break;
                }
                flow = flow.add_checked(pushed)?;
            }
        }
    }

    /// Nodes reachable from `s` in the residual network; after
    /// [`max_flow`](Self::max_flow) this is the source side of a minimum cut.
    pub fn source_side(&self, s: usize) -> Vec<bool> {
        self.levels(s).into_iter().map(|l| l.is_some()).collect()
    }
}

//! Maximum-weight matching in general graphs via the blossom method.
//!
//! Primal-dual search with blossom shrinking, after Edmonds; the
//! structure follows Galil's survey and Van Rantwijk's well-known
//! reference implementation. O(n^3)-ish; weights are `f64` and the
//! result is a maximum-weight (not necessarily perfect) matching.
//!
//! Vertices are `0..num_nodes`; non-trivial blossoms are numbered
//! `num_nodes..2*num_nodes`. Edge endpoints are numbered so that
//! endpoints `2k` and `2k+1` belong to edge `k`.

pub const UNMATCHED: usize = usize::MAX;

const NONE: usize = usize::MAX;

/// Returns `mate`, where `mate[v]` is the vertex matched to `v` or
/// [`UNMATCHED`]. Edges are `(u, v, weight)` with `u != v` and at most
/// one edge per vertex pair; weights should be positive (an edge with
/// non-positive weight never improves a maximum-weight matching).
pub fn maximum_weight_matching(num_nodes: usize, edges: &[(usize, usize, f64)]) -> Vec<usize> {
    if edges.is_empty() {
        return vec![UNMATCHED; num_nodes];
    }
    let mut solver = Solver::new(num_nodes, edges);
    solver.solve();
    solver.mate
}

struct Solver {
    nvertex: usize,
    nedge: usize,
    edges: Vec<(usize, usize, f64)>,
    /// endpoint[p] is the vertex to which endpoint p is attached.
    endpoint: Vec<usize>,
    /// neighbend[v] lists the remote endpoints of v's edges.
    neighbend: Vec<Vec<usize>>,
    /// mate[v] is the remote endpoint of v's matched edge, or NONE.
    mate: Vec<usize>,
    /// label[b] for a top-level blossom b: 0 free, 1 S, 2 T (5 marks a
    /// breadcrumb during back-tracing).
    label: Vec<usize>,
    /// labelend[b] is the remote endpoint of the edge through which b
    /// obtained its label.
    labelend: Vec<usize>,
    /// inblossom[v] is the top-level blossom containing vertex v.
    inblossom: Vec<usize>,
    /// blossomparent[b] is b's immediate parent blossom, or NONE.
    blossomparent: Vec<usize>,
    /// blossomchilds[b]: sub-blossoms in cyclic order starting at the base.
    blossomchilds: Vec<Vec<usize>>,
    /// blossombase[b] is the base vertex of (sub-)blossom b.
    blossombase: Vec<usize>,
    /// blossomendps[b]: endpoints of the edges connecting consecutive children.
    blossomendps: Vec<Vec<usize>>,
    /// bestedge[v]: least-slack edge from v (or blossom v) to an S-blossom.
    bestedge: Vec<usize>,
    /// blossombestedges[b]: least-slack edges from S-blossom b to other
    /// S-blossoms (empty = not computed).
    blossombestedges: Vec<Vec<usize>>,
    unusedblossoms: Vec<usize>,
    /// dualvar[v] = 2u(v) for vertices, z(b) for blossoms.
    dualvar: Vec<f64>,
    /// allowedge[k] is true once edge k is known to have zero slack.
    allowedge: Vec<bool>,
    queue: Vec<usize>,
}

impl Solver {
    fn new(num_nodes: usize, edges: &[(usize, usize, f64)]) -> Self {
        let nedge = edges.len();
        let mut nvertex = num_nodes;
        for &(i, j, _) in edges {
            debug_assert!(i != j, "self-loops are not allowed");
            nvertex = nvertex.max(i + 1).max(j + 1);
        }
        let maxweight = edges.iter().map(|e| e.2).fold(0.0f64, f64::max);
        let endpoint: Vec<usize> = (0..2 * nedge)
            .map(|p| if p % 2 == 0 { edges[p / 2].0 } else { edges[p / 2].1 })
            .collect();
        let mut neighbend = vec![Vec::new(); nvertex];
        for (k, &(i, j, _)) in edges.iter().enumerate() {
            neighbend[i].push(2 * k + 1);
            neighbend[j].push(2 * k);
        }
        let mut dualvar = vec![maxweight; nvertex];
        dualvar.resize(2 * nvertex, 0.0);
        let mut blossombase: Vec<usize> = (0..nvertex).collect();
        blossombase.resize(2 * nvertex, NONE);
        Solver {
            nvertex,
            nedge,
            edges: edges.to_vec(),
            endpoint,
            neighbend,
            mate: vec![NONE; nvertex],
            label: vec![0; 2 * nvertex],
            labelend: vec![NONE; 2 * nvertex],
            inblossom: (0..nvertex).collect(),
            blossomparent: vec![NONE; 2 * nvertex],
            blossomchilds: vec![Vec::new(); 2 * nvertex],
            blossombase,
            blossomendps: vec![Vec::new(); 2 * nvertex],
            bestedge: vec![NONE; 2 * nvertex],
            blossombestedges: vec![Vec::new(); 2 * nvertex],
            unusedblossoms: (nvertex..2 * nvertex).collect(),
            dualvar,
            allowedge: vec![false; nedge],
            queue: Vec::new(),
        }
    }

    /// 2 * slack of edge k (invalid inside blossoms).
    fn slack(&self, k: usize) -> f64 {
        let (i, j, wt) = self.edges[k];
        self.dualvar[i] + self.dualvar[j] - 2.0 * wt
    }

    fn blossom_leaves(&self, b: usize) -> Vec<usize> {
        let mut leaves = Vec::new();
        if b < self.nvertex {
            leaves.push(b);
        } else {
            for &t in &self.blossomchilds[b] {
                if t < self.nvertex {
                    leaves.push(t);
                } else {
                    leaves.extend(self.blossom_leaves(t));
                }
            }
        }
        leaves
    }

    /// Label the top-level blossom of vertex w with t, reached through
    /// the edge with remote endpoint p.
    fn assign_label(&mut self, w: usize, t: usize, p: usize) {
        let b = self.inblossom[w];
        debug_assert!(self.label[w] == 0 && self.label[b] == 0);
        self.label[w] = t;
        self.label[b] = t;
        self.labelend[w] = p;
        self.labelend[b] = p;
        self.bestedge[w] = NONE;
        self.bestedge[b] = NONE;
        if t == 1 {
            // S-blossom: schedule all its vertices for scanning.
            let leaves = self.blossom_leaves(b);
            self.queue.extend(leaves);
        } else if t == 2 {
            // T-blossom: its base's mate becomes an S-vertex.
            let base = self.blossombase[b];
            debug_assert!(self.mate[base] != NONE);
            let mbase = self.mate[base];
            let v = self.endpoint[mbase];
            self.assign_label(v, 1, mbase ^ 1);
        }
    }

    /// Trace back from v and w; returns the base of a new blossom, or
    /// NONE if an augmenting path was discovered instead.
    fn scan_blossom(&mut self, v: usize, w: usize) -> usize {
        let mut path = Vec::new();
        let mut base = NONE;
        let mut v = v;
        let mut w = w;
        while v != NONE || w != NONE {
            let mut b = self.inblossom[v];
            if self.label[b] & 4 != 0 {
                base = self.blossombase[b];
                break;
            }
            debug_assert!(self.label[b] == 1);
            path.push(b);
            self.label[b] = 5;
            debug_assert!(self.labelend[b] == self.mate[self.blossombase[b]]);
            if self.labelend[b] == NONE {
                // Reached a single vertex; this path ends.
                v = NONE;
            } else {
                v = self.endpoint[self.labelend[b]];
                b = self.inblossom[v];
                debug_assert!(self.label[b] == 2);
                debug_assert!(self.labelend[b] != NONE);
                v = self.endpoint[self.labelend[b]];
            }
            if w != NONE {
                std::mem::swap(&mut v, &mut w);
            }
        }
        for b in path {
            self.label[b] = 1;
        }
        base
    }

    /// Shrink the cycle through edge k (joining two S-blossoms) and
    /// `base` into a new S-blossom.
    fn add_blossom(&mut self, base: usize, k: usize) {
        let (mut v, mut w, _) = self.edges[k];
        let bb = self.inblossom[base];
        let mut bv = self.inblossom[v];
        let mut bw = self.inblossom[w];

        let b = self.unusedblossoms.pop().expect("blossom numbers exhausted");
        self.blossombase[b] = base;
        self.blossomparent[b] = NONE;
        self.blossomparent[bb] = b;

        let mut childs: Vec<usize> = Vec::new();
        let mut endps: Vec<usize> = Vec::new();
        // Walk from v back to the base.
        while bv != bb {
            self.blossomparent[bv] = b;
            childs.push(bv);
            endps.push(self.labelend[bv]);
            debug_assert!(
                self.label[bv] == 2
                    || (self.label[bv] == 1
                        && self.labelend[bv] == self.mate[self.blossombase[bv]])
            );
            debug_assert!(self.labelend[bv] != NONE);
            v = self.endpoint[self.labelend[bv]];
            bv = self.inblossom[v];
        }
        childs.push(bb);
        childs.reverse();
        endps.reverse();
        endps.push(2 * k);
        // Walk from w back to the base.
        while bw != bb {
            self.blossomparent[bw] = b;
            childs.push(bw);
            endps.push(self.labelend[bw] ^ 1);
            debug_assert!(
                self.label[bw] == 2
                    || (self.label[bw] == 1
                        && self.labelend[bw] == self.mate[self.blossombase[bw]])
            );
            debug_assert!(self.labelend[bw] != NONE);
            w = self.endpoint[self.labelend[bw]];
            bw = self.inblossom[w];
        }
        self.blossomchilds[b] = childs;
        self.blossomendps[b] = endps;

        debug_assert!(self.label[bb] == 1);
        self.label[b] = 1;
        self.labelend[b] = self.labelend[bb];
        self.dualvar[b] = 0.0;

        for v in self.blossom_leaves(b) {
            if self.label[self.inblossom[v]] == 2 {
                // Former T-vertex, now inside an S-blossom.
                self.queue.push(v);
            }
            self.inblossom[v] = b;
        }

        // Merge least-slack candidate edges from the children.
        let mut bestedgeto = vec![NONE; 2 * self.nvertex];
        for bv in self.blossomchilds[b].clone() {
            let nblists: Vec<Vec<usize>> = if self.blossombestedges[bv].is_empty() {
                self.blossom_leaves(bv)
                    .into_iter()
                    .map(|v| self.neighbend[v].iter().map(|p| p / 2).collect())
                    .collect()
            } else {
                vec![self.blossombestedges[bv].clone()]
            };
            for nblist in nblists {
                for k in nblist {
                    let (mut i, mut j, _) = self.edges[k];
                    if self.inblossom[j] == b {
                        std::mem::swap(&mut i, &mut j);
                    }
                    let bj = self.inblossom[j];
                    if bj != b
                        && self.label[bj] == 1
                        && (bestedgeto[bj] == NONE || self.slack(k) < self.slack(bestedgeto[bj]))
                    {
                        bestedgeto[bj] = k;
                    }
                }
            }
            self.blossombestedges[bv] = Vec::new();
            self.bestedge[bv] = NONE;
        }
        self.blossombestedges[b] = bestedgeto.into_iter().filter(|&k| k != NONE).collect();
        self.bestedge[b] = NONE;
        for &k in &self.blossombestedges[b] {
            if self.bestedge[b] == NONE || self.slack(k) < self.slack(self.bestedge[b]) {
                self.bestedge[b] = k;
            }
        }
    }

    /// Expand a top-level blossom, promoting its children to top level.
    fn expand_blossom(&mut self, b: usize, endstage: bool) {
        for s in self.blossomchilds[b].clone() {
            self.blossomparent[s] = NONE;
            if s < self.nvertex {
                self.inblossom[s] = s;
            } else if endstage && self.dualvar[s] == 0.0 {
                self.expand_blossom(s, endstage);
            } else {
                for v in self.blossom_leaves(s) {
                    self.inblossom[v] = s;
                }
            }
        }
        // A T-blossom expanded mid-stage passes its label on to the
        // children along the alternating path through it.
        if !endstage && self.label[b] == 2 {
            debug_assert!(self.labelend[b] != NONE);
            let entrychild = self.inblossom[self.endpoint[self.labelend[b] ^ 1]];
            let mut j = self.blossomchilds[b]
                .iter()
                .position(|&c| c == entrychild)
                .expect("entry child is a child of the expanding blossom")
                as i64;
            let (jstep, endptrick): (i64, usize) = if j & 1 != 0 {
                // Odd index: go forward around the blossom.
                j -= self.blossomchilds[b].len() as i64;
                (1, 0)
            } else {
                (-1, 1)
            };
            let mut p = self.labelend[b];
            while j != 0 {
                // Relabel the T-sub-blossom.
                self.label[self.endpoint[p ^ 1]] = 0;
                let q = wrap_index(&self.blossomendps[b], j - endptrick as i64) ^ endptrick;
                self.label[self.endpoint[q ^ 1]] = 0;
                let ep = self.endpoint[p ^ 1];
                self.assign_label(ep, 2, p);
                // The connecting edges have zero slack.
                self.allowedge[q / 2] = true;
                j += jstep;
                p = wrap_index(&self.blossomendps[b], j - endptrick as i64) ^ endptrick;
                self.allowedge[p / 2] = true;
                j += jstep;
            }
            // Relabel the base sub-blossom without stepping to its mate.
            let bv = wrap_index(&self.blossomchilds[b], j);
            self.label[self.endpoint[p ^ 1]] = 2;
            self.label[bv] = 2;
            self.labelend[self.endpoint[p ^ 1]] = p;
            self.labelend[bv] = p;
            self.bestedge[bv] = NONE;
            // Remaining sub-blossoms keep label T only if reachable
            // from outside the expanding blossom.
            j += jstep;
            while wrap_index(&self.blossomchilds[b], j) != entrychild {
                let bv = wrap_index(&self.blossomchilds[b], j);
                if self.label[bv] == 1 {
                    j += jstep;
                    continue;
                }
                let mut v = NONE;
                for t in self.blossom_leaves(bv) {
                    v = t;
                    if self.label[v] != 0 {
                        break;
                    }
                }
                if v != NONE && self.label[v] != 0 {
                    debug_assert!(self.label[v] == 2);
                    debug_assert!(self.inblossom[v] == bv);
                    self.label[v] = 0;
                    self.label[self.endpoint[self.mate[self.blossombase[bv]]]] = 0;
                    let lblend = self.labelend[v];
                    self.assign_label(v, 2, lblend);
                }
                j += jstep;
            }
        }
        // Recycle the blossom number.
        self.label[b] = NONE;
        self.labelend[b] = NONE;
        self.blossombase[b] = NONE;
        self.bestedge[b] = NONE;
        self.blossomchilds[b] = Vec::new();
        self.blossomendps[b] = Vec::new();
        self.blossombestedges[b] = Vec::new();
        self.unusedblossoms.push(b);
    }

    /// Swap matched/unmatched edges along the path from vertex v to the
    /// base of blossom b, then rotate the blossom so v becomes the base.
    fn augment_blossom(&mut self, b: usize, v: usize) {
        let mut t = v;
        while self.blossomparent[t] != b {
            t = self.blossomparent[t];
        }
        if t >= self.nvertex {
            self.augment_blossom(t, v);
        }
        let i = self.blossomchilds[b]
            .iter()
            .position(|&c| c == t)
            .expect("vertex lies inside the blossom");
        let mut j = i as i64;
        let (jstep, endptrick): (i64, usize) = if i & 1 != 0 {
            j -= self.blossomchilds[b].len() as i64;
            (1, 0)
        } else {
            (-1, 1)
        };
        while j != 0 {
            j += jstep;
            let mut t = wrap_index(&self.blossomchilds[b], j);
            let p = wrap_index(&self.blossomendps[b], j - endptrick as i64) ^ endptrick;
            if t >= self.nvertex {
                self.augment_blossom(t, self.endpoint[p]);
            }
            j += jstep;
            t = wrap_index(&self.blossomchilds[b], j);
            if t >= self.nvertex {
                self.augment_blossom(t, self.endpoint[p ^ 1]);
            }
            self.mate[self.endpoint[p]] = p ^ 1;
            self.mate[self.endpoint[p ^ 1]] = p;
        }
        self.blossomchilds[b].rotate_left(i);
        self.blossomendps[b].rotate_left(i);
        self.blossombase[b] = self.blossombase[self.blossomchilds[b][0]];
        debug_assert!(self.blossombase[b] == v);
    }

    /// Augment the matching along the path through edge k, which joins
    /// two S-vertices rooted at distinct single vertices.
    fn augment_matching(&mut self, k: usize) {
        let (v, w, _) = self.edges[k];
        for &(s0, p0) in &[(v, 2 * k + 1), (w, 2 * k)] {
            let mut s = s0;
            let mut p = p0;
            loop {
                let bs = self.inblossom[s];
                debug_assert!(self.label[bs] == 1);
                debug_assert!(self.labelend[bs] == self.mate[self.blossombase[bs]]);
                if bs >= self.nvertex {
                    self.augment_blossom(bs, s);
                }
                self.mate[s] = p;
                if self.labelend[bs] == NONE {
                    // Reached a single vertex; this path ends.
                    break;
                }
                let t = self.endpoint[self.labelend[bs]];
                let bt = self.inblossom[t];
                debug_assert!(self.label[bt] == 2);
                debug_assert!(self.labelend[bt] != NONE);
                s = self.endpoint[self.labelend[bt]];
                let j = self.endpoint[self.labelend[bt] ^ 1];
                debug_assert!(self.blossombase[bt] == t);
                if bt >= self.nvertex {
                    self.augment_blossom(bt, j);
                }
                self.mate[j] = self.labelend[bt];
                p = self.labelend[bt] ^ 1;
            }
        }
    }

    fn solve(&mut self) {
        for _stage in 0..self.nvertex {
            // Fresh labels, candidate edges, and queue for this stage.
            self.label = vec![0; 2 * self.nvertex];
            self.bestedge = vec![NONE; 2 * self.nvertex];
            for b in self.nvertex..2 * self.nvertex {
                self.blossombestedges[b] = Vec::new();
            }
            self.allowedge = vec![false; self.nedge];
            self.queue = Vec::new();
            for v in 0..self.nvertex {
                if self.mate[v] == NONE && self.label[self.inblossom[v]] == 0 {
                    self.assign_label(v, 1, NONE);
                }
            }

            let mut augmented = false;
            loop {
                // Substage: grow the forest until an augmenting path is
                // found or the duals must change.
                while let Some(v) = self.queue.pop() {
                    debug_assert!(self.label[self.inblossom[v]] == 1);
                    let mut found_augmenting_path = false;
                    for p in self.neighbend[v].clone() {
                        let k = p / 2;
                        let w = self.endpoint[p];
                        if self.inblossom[v] == self.inblossom[w] {
                            continue;
                        }
                        let mut kslack = 0.0;
                        if !self.allowedge[k] {
                            kslack = self.slack(k);
                            if kslack <= 0.0 {
                                self.allowedge[k] = true;
                            }
                        }
                        if self.allowedge[k] {
                            if self.label[self.inblossom[w]] == 0 {
                                // w is free: grow the tree by one T edge.
                                self.assign_label(w, 2, p ^ 1);
                            } else if self.label[self.inblossom[w]] == 1 {
                                // S-S edge: blossom or augmenting path.
                                let base = self.scan_blossom(v, w);
                                if base != NONE {
                                    self.add_blossom(base, k);
                                } else {
                                    self.augment_matching(k);
                                    found_augmenting_path = true;
                                    break;
                                }
                            } else if self.label[w] == 0 {
                                debug_assert!(self.label[self.inblossom[w]] == 2);
                                self.label[w] = 2;
                                self.labelend[w] = p ^ 1;
                            }
                        } else if self.label[self.inblossom[w]] == 1 {
                            let b = self.inblossom[v];
                            if self.bestedge[b] == NONE || kslack < self.slack(self.bestedge[b]) {
                                self.bestedge[b] = k;
                            }
                        } else if self.label[w] == 0
                            && (self.bestedge[w] == NONE || kslack < self.slack(self.bestedge[w]))
                        {
                            self.bestedge[w] = k;
                        }
                    }
                    if found_augmenting_path {
                        augmented = true;
                        break;
                    }
                }
                if augmented {
                    break;
                }

                // Dual update. Deltas, like duals, carry a factor 2.
                // delta1: minimum vertex dual (we never force maximum
                // cardinality, so the search may stop here).
                let mut deltatype = 1;
                let mut delta = self.dualvar[..self.nvertex]
                    .iter()
                    .fold(f64::INFINITY, |a, &b| a.min(b));
                let mut deltaedge = NONE;
                let mut deltablossom = NONE;

                // delta2: minimum slack to a free vertex.
                for v in 0..self.nvertex {
                    if self.label[self.inblossom[v]] == 0 && self.bestedge[v] != NONE {
                        let d = self.slack(self.bestedge[v]);
                        if d < delta {
                            delta = d;
                            deltatype = 2;
                            deltaedge = self.bestedge[v];
                        }
                    }
                }
                // delta3: half the minimum slack between S-blossoms.
                for b in 0..2 * self.nvertex {
                    if self.blossomparent[b] == NONE
                        && self.label[b] == 1
                        && self.bestedge[b] != NONE
                    {
                        let d = self.slack(self.bestedge[b]) / 2.0;
                        if d < delta {
                            delta = d;
                            deltatype = 3;
                            deltaedge = self.bestedge[b];
                        }
                    }
                }
                // delta4: minimum dual of a T-blossom.
                for b in self.nvertex..2 * self.nvertex {
                    if self.blossombase[b] != NONE
                        && self.blossomparent[b] == NONE
                        && self.label[b] == 2
                        && self.dualvar[b] < delta
                    {
                        delta = self.dualvar[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }

                for v in 0..self.nvertex {
                    match self.label[self.inblossom[v]] {
                        0 => {}
                        1 => self.dualvar[v] -= delta,
                        2 => self.dualvar[v] += delta,
                        _ => unreachable!("unexpected vertex label"),
                    }
                }
                for b in self.nvertex..2 * self.nvertex {
                    if self.blossombase[b] != NONE && self.blossomparent[b] == NONE {
                        match self.label[b] {
                            0 => {}
                            1 => self.dualvar[b] += delta,
                            2 => self.dualvar[b] -= delta,
                            _ => unreachable!("unexpected blossom label"),
                        }
                    }
                }

                match deltatype {
                    1 => break, // Optimum reached.
                    2 => {
                        self.allowedge[deltaedge] = true;
                        let (mut i, j, _) = self.edges[deltaedge];
                        if self.label[self.inblossom[i]] == 0 {
                            i = j;
                        }
                        debug_assert!(self.label[self.inblossom[i]] == 1);
                        self.queue.push(i);
                    }
                    3 => {
                        self.allowedge[deltaedge] = true;
                        let (i, _, _) = self.edges[deltaedge];
                        debug_assert!(self.label[self.inblossom[i]] == 1);
                        self.queue.push(i);
                    }
                    4 => self.expand_blossom(deltablossom, false),
                    _ => unreachable!("unexpected delta type"),
                }
            }

            if !augmented {
                break;
            }

            // Stage done: expand S-blossoms whose dual fell to zero.
            for b in self.nvertex..2 * self.nvertex {
                if self.blossomparent[b] == NONE
                    && self.blossombase[b] != NONE
                    && self.label[b] == 1
                    && self.dualvar[b] == 0.0
                {
                    self.expand_blossom(b, true);
                }
            }
        }

        // Turn endpoint mates into vertex mates.
        for v in 0..self.nvertex {
            if self.mate[v] != NONE {
                self.mate[v] = self.endpoint[self.mate[v]];
            }
        }
        for v in 0..self.nvertex {
            debug_assert!(self.mate[v] == NONE || self.mate[self.mate[v]] == v);
        }
    }
}

/// Python-style indexing: negative indices count from the back.
fn wrap_index(v: &[usize], index: i64) -> usize {
    if index >= 0 {
        v[index as usize]
    } else {
        v[v.len() - (-index) as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matched_pairs(mate: &[usize]) -> Vec<(usize, usize)> {
        mate.iter()
            .enumerate()
            .filter(|&(v, &m)| m != UNMATCHED && v < m)
            .map(|(v, &m)| (v, m))
            .collect()
    }

    #[test]
    fn no_edges() {
        assert_eq!(maximum_weight_matching(3, &[]), vec![UNMATCHED; 3]);
    }

    #[test]
    fn single_edge() {
        let mate = maximum_weight_matching(2, &[(0, 1, 1.0)]);
        assert_eq!(mate, vec![1, 0]);
    }

    #[test]
    fn prefers_heavy_single_edge_over_two_light() {
        // Path 0-1-2-3, middle edge heavier than the two ends combined.
        let mate = maximum_weight_matching(4, &[(0, 1, 2.0), (1, 2, 10.0), (2, 3, 2.0)]);
        assert_eq!(matched_pairs(&mate), vec![(1, 2)]);
    }

    #[test]
    fn prefers_two_edges_when_they_win() {
        let mate = maximum_weight_matching(4, &[(0, 1, 3.0), (1, 2, 4.0), (2, 3, 3.0)]);
        assert_eq!(matched_pairs(&mate), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn odd_cycle_needs_blossom() {
        // 5-cycle with an extra pendant; forces blossom shrinking.
        let edges = [
            (0, 1, 8.0),
            (1, 2, 9.0),
            (2, 3, 8.0),
            (3, 4, 9.0),
            (4, 0, 8.0),
            (2, 5, 10.0),
        ];
        let mate = maximum_weight_matching(6, &edges);
        assert_eq!(matched_pairs(&mate), vec![(0, 1), (2, 5), (3, 4)]);
    }

    #[test]
    fn nested_blossom_case() {
        // Classic nested S-blossom instance (from the reference
        // implementation's test suite), integer weights.
        let edges = [
            (1, 2, 9.0),
            (1, 3, 9.0),
            (2, 3, 10.0),
            (2, 4, 8.0),
            (3, 5, 8.0),
            (4, 5, 10.0),
            (5, 6, 6.0),
        ];
        let mate = maximum_weight_matching(7, &edges);
        assert_eq!(matched_pairs(&mate), vec![(1, 3), (2, 4), (5, 6)]);
    }

    #[test]
    fn triangle_takes_heaviest_edge() {
        let mate = maximum_weight_matching(3, &[(0, 1, 5.0), (1, 2, 4.0), (0, 2, 3.0)]);
        assert_eq!(matched_pairs(&mate), vec![(0, 1)]);
    }
}

//! Brute-force spin-network evaluation of labelled planar trivalent graphs.
//!
//! Every edge of label `n` is expanded into `n` parallel strands. At a vertex
//! with incident labels `(p, q, r)` the strands join crossing-free,
//! `(p+q−r)/2` of them between the first and second edge and so on, which is
//! possible exactly when the triple is admissible. A permutation is inserted
//! in the middle of each edge, drawn with its minimal number of crossings
//! (the inversion count), and each resulting link `L` contributes
//!
//! ```text
//! ⟨L⟩ = (−2)^{#loops(L)} · (−1)^{#crossings(L)}
//! ```
//!
//! The net evaluates to the sum of all such contributions divided by the
//! product of the factorials of the edge labels. This is the oracle against
//! which the closed-form theta and tetrahedral evaluations are pinned; it is
//! deliberately literal and makes no use of any closed form.

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use thiserror::Error;

use crate::labels::{is_admissible_triple, LabelSextuple};
use crate::numeric::factorial;

/// Labels above this make the permutation sum unreasonably large by default.
pub const DEFAULT_ORACLE_CAP: u32 = 6;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NetError {
    #[error("edge label {label} exceeds the oracle cap {cap}")]
    CapExceeded { label: u32, cap: u32 },
    #[error("vertex triple ({},{},{}) is not admissible", triple[0], triple[1], triple[2])]
    Inadmissible { triple: [u32; 3] },
}

/// A planar trivalent graph with natural-number edge labels.
///
/// The embedding is recorded as a rotation system: the three incident edges
/// of each vertex in counterclockwise order. Only the theta and Mercedes
/// (tetrahedral) graphs are constructed here, but the evaluator works for
/// any planar trivalent net.
#[derive(Clone, Debug)]
pub struct TrivalentNet {
    labels: Vec<u32>,
    /// ccw-ordered incident edge indices per vertex
    rotations: Vec<[usize; 3]>,
}

impl TrivalentNet {
    fn new(labels: Vec<u32>, rotations: Vec<[usize; 3]>) -> Self {
        let mut seen = vec![0u32; labels.len()];
        for r in &rotations {
            for &e in r {
                seen[e] += 1;
            }
        }
        assert!(seen.iter().all(|&c| c == 2), "every edge must have two ends");
        TrivalentNet { labels, rotations }
    }

    /// The theta graph: two vertices joined by three edges labelled `a,b,c`.
    pub fn theta(a: u32, b: u32, c: u32) -> Self {
        Self::new(vec![a, b, c], vec![[0, 1, 2], [2, 1, 0]])
    }

    /// The Mercedes (tetrahedral) net dual to the labelled tetrahedron: four
    /// vertices carrying the face triples `(a,b,c)`, `(c,d,e)`, `(e,f,a)`,
    /// `(f,d,b)`, drawn with the `(f,d,b)` vertex in the centre.
    pub fn mercedes(labels: &LabelSextuple) -> Self {
        Self::new(
            labels.0.to_vec(),
            vec![[2, 1, 0], [4, 3, 2], [0, 5, 4], [1, 3, 5]],
        )
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// The label triples at each vertex, in rotation order.
    pub fn vertex_triples(&self) -> Vec<[u32; 3]> {
        self.rotations
            .iter()
            .map(|r| r.map(|e| self.labels[e]))
            .collect()
    }
}

/// Strand-level wiring of a net: global port ids, the fixed crossing-free
/// matching at the vertices, and the ccw-ordered port lists of each edge end.
struct Wiring {
    ports: usize,
    vertex_match: Vec<u32>,
    /// per edge: ports of end 0 and end 1 in ccw slot order
    edge_ends: Vec<[Vec<u32>; 2]>,
}

fn build_wiring(net: &TrivalentNet) -> Result<Wiring, NetError> {
    let mut edge_ends: Vec<[Vec<u32>; 2]> = net.labels.iter().map(|_| [vec![], vec![]]).collect();
    let mut ends_seen = vec![0usize; net.labels.len()];
    let mut next_port = 0u32;
    let mut vertex_blocks = Vec::with_capacity(net.rotations.len());
    for rot in &net.rotations {
        let mut blocks: [Vec<u32>; 3] = Default::default();
        for (pos, &e) in rot.iter().enumerate() {
            let n = net.labels[e];
            let ports: Vec<u32> = (0..n).map(|s| next_port + s).collect();
            next_port += n;
            edge_ends[e][ends_seen[e]] = ports.clone();
            ends_seen[e] += 1;
            blocks[pos] = ports;
        }
        vertex_blocks.push(blocks);
    }

    let mut vertex_match = vec![u32::MAX; next_port as usize];
    for (v, rot) in net.rotations.iter().enumerate() {
        let [n1, n2, n3] = rot.map(|e| net.labels[e]);
        if !is_admissible_triple(n1, n2, n3) {
            return Err(NetError::Inadmissible { triple: [n1, n2, n3] });
        }
        let [p1, p2, p3] = &vertex_blocks[v];
        let k12 = ((n1 + n2 - n3) / 2) as usize;
        let k23 = ((n2 + n3 - n1) / 2) as usize;
        let k31 = ((n3 + n1 - n2) / 2) as usize;
        let mut pair = |x: u32, y: u32| {
            vertex_match[x as usize] = y;
            vertex_match[y as usize] = x;
        };
        // nested chords across the three gaps; unique crossing-free matching
        for j in 1..=k12 {
            pair(p1[n1 as usize - j], p2[j - 1]);
        }
        for j in 1..=k23 {
            pair(p2[n2 as usize - j], p3[j - 1]);
        }
        for j in 1..=k31 {
            pair(p3[n3 as usize - j], p1[j - 1]);
        }
    }
    debug_assert!(vertex_match.iter().all(|&p| p != u32::MAX));

    Ok(Wiring {
        ports: next_port as usize,
        vertex_match,
        edge_ends,
    })
}

/// All permutations of `0..n` in lexicographic order with inversion parities.
fn permutations_with_parity(n: u32) -> Vec<(Vec<u8>, bool)> {
    use itertools::Itertools;
    if n == 0 {
        return vec![(vec![], false)];
    }
    (0..n as u8)
        .permutations(n as usize)
        .map(|p| {
            let mut inv = 0usize;
            for i in 0..p.len() {
                for j in i + 1..p.len() {
                    if p[i] > p[j] {
                        inv += 1;
                    }
                }
            }
            (p, inv % 2 == 1)
        })
        .collect()
}

struct DiagramSummer<'a> {
    wiring: &'a Wiring,
    perms: Vec<Vec<(Vec<u8>, bool)>>,
}

impl DiagramSummer<'_> {
    /// Write the strand connections of `edge` under permutation `perm` into
    /// `emap`. Slot `i` of end 0 joins slot `n−1−π(i)` of end 1: with the two
    /// ends listed ccw around their vertices, the identity permutation is the
    /// crossing-free parallel ribbon.
    fn apply_edge(&self, emap: &mut [u32], edge: usize, perm: &[u8]) {
        let [e0, e1] = &self.wiring.edge_ends[edge];
        let n = e0.len();
        for i in 0..n {
            let x = e0[i];
            let y = e1[n - 1 - perm[i] as usize];
            emap[x as usize] = y;
            emap[y as usize] = x;
        }
    }

    fn count_loops(&self, emap: &[u32]) -> u32 {
        let vmatch = &self.wiring.vertex_match;
        let p = self.wiring.ports;
        debug_assert!(p <= 128);
        let mut visited: u128 = 0;
        let mut loops = 0;
        for start in 0..p {
            if visited & (1u128 << start) != 0 {
                continue;
            }
            loops += 1;
            let mut cur = start;
            loop {
                visited |= 1u128 << cur;
                let across = emap[cur] as usize;
                visited |= 1u128 << across;
                cur = vmatch[across] as usize;
                if cur == start {
                    break;
                }
            }
        }
        loops
    }

    /// Sum of `(−2)^{loops} (−1)^{crossings}` over all permutation choices of
    /// the edges in `edges`, with earlier edges already written into `emap`.
    fn sum_from(&self, edges: &[usize], emap: &mut [u32], parity: bool) -> i128 {
        match edges {
            [] => {
                let loops = self.count_loops(emap);
                let term = 1i128 << loops;
                if parity ^ (loops % 2 == 1) {
                    -term
                } else {
                    term
                }
            }
            [edge, rest @ ..] => {
                let mut total = 0i128;
                for (perm, inv_odd) in &self.perms[*edge] {
                    self.apply_edge(emap, *edge, perm);
                    total += self.sum_from(rest, emap, parity ^ inv_odd);
                }
                total
            }
        }
    }
}

/// Evaluate the net by the permutation sum with the default oracle cap.
pub fn penrose_evaluate(net: &TrivalentNet) -> Result<BigRational, NetError> {
    penrose_evaluate_with_cap(net, DEFAULT_ORACLE_CAP)
}

/// Evaluate the net by the permutation sum, refusing labels above `cap`.
pub fn penrose_evaluate_with_cap(net: &TrivalentNet, cap: u32) -> Result<BigRational, NetError> {
    for &label in &net.labels {
        if label > cap {
            return Err(NetError::CapExceeded { label, cap });
        }
    }
    let wiring = build_wiring(net)?;
    assert!(
        wiring.ports <= 128,
        "strand count beyond the loop-tracing bitmask"
    );

    let perms: Vec<_> = net
        .labels
        .iter()
        .map(|&n| permutations_with_parity(n))
        .collect();
    let summer = DiagramSummer {
        wiring: &wiring,
        perms,
    };

    let edges: Vec<usize> = (0..net.labels.len()).collect();
    let diagrams: u128 = net.labels.iter().map(|&n| {
        (1..=n as u128).product::<u128>()
    }).product();

    let sum: i128 = if diagrams > 1 << 14 {
        // fan out over the first edge's permutations
        summer.perms[edges[0]]
            .par_iter()
            .map(|(perm, inv_odd)| {
                let mut emap = vec![u32::MAX; wiring.ports];
                summer.apply_edge(&mut emap, edges[0], perm);
                summer.sum_from(&edges[1..], &mut emap, *inv_odd)
            })
            .sum()
    } else {
        let mut emap = vec![u32::MAX; wiring.ports];
        summer.sum_from(&edges, &mut emap, false)
    };

    let divisor: BigInt = net.labels.iter().map(|&n| factorial(n as u64)).product();
    Ok(BigRational::new(BigInt::from(sum), divisor))
}

//! Weighted trust relations between actors.

use std::collections::{BTreeMap, VecDeque};

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::TrustError;
use crate::judgement::{ActorId, Judgement};
use crate::weight::{weight_mul, Weight};

/// A named, reflexive, not necessarily symmetric relation `k T_w l`.
///
/// Self-edges are implicit with weight 1 and are not stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrustRelation {
    pub name: String,
    edges: IndexMap<(ActorId, ActorId), Weight>,
}

/// One explicit edge of a relation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TrustEdge {
    pub relation: String,
    pub truster: ActorId,
    pub trusted: ActorId,
    pub weight: Weight,
}

impl TrustRelation {
    pub fn new(name: impl Into<String>) -> Self {
        TrustRelation {
            name: name.into(),
            edges: IndexMap::new(),
        }
    }

    /// Adds `truster T_weight trusted`. A self-edge is accepted only at weight 1, and
    /// then stored nowhere.
    pub fn add_edge(&mut self, truster: ActorId, trusted: ActorId, weight: Weight) -> Result<(), TrustError> {
        if truster == trusted {
            if weight.is_one() {
                return Ok(());
            }
            return Err(TrustError::WeightedSelfEdge {
                actor: truster.to_string(),
                weight: weight.to_string(),
            });
        }
        if self.edges.contains_key(&(truster.clone(), trusted.clone())) {
            return Err(TrustError::DuplicateEdge {
                relation: self.name.clone(),
                truster: truster.to_string(),
                trusted: trusted.to_string(),
            });
        }
        self.edges.insert((truster, trusted), weight);
        Ok(())
    }

    pub fn with_edge(mut self, truster: &str, trusted: &str, weight: Weight) -> Result<Self, TrustError> {
        let actor = |s: &str| {
            ActorId::new(s).map_err(|_| TrustError::BrokenPath {
                from: truster.to_string(),
                to: trusted.to_string(),
            })
        };
        self.add_edge(actor(truster)?, actor(trusted)?, weight)?;
        Ok(self)
    }

    /// Weight of the edge, including implicit self-trust.
    pub fn weight(&self, truster: &ActorId, trusted: &ActorId) -> Option<Weight> {
        if truster == trusted {
            return Some(Weight::one());
        }
        self.edges.get(&(truster.clone(), trusted.clone())).cloned()
    }

    /// Explicit edges in declaration order.
    pub fn edges(&self) -> impl Iterator<Item = TrustEdge> + '_ {
        self.edges.iter().map(|((k, l), w)| TrustEdge {
            relation: self.name.clone(),
            truster: k.clone(),
            trusted: l.clone(),
            weight: w.clone(),
        })
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn successors(&self) -> BTreeMap<&ActorId, Vec<(&ActorId, &Weight)>> {
        let mut out: BTreeMap<&ActorId, Vec<(&ActorId, &Weight)>> = BTreeMap::new();
        for ((k, l), w) in &self.edges {
            out.entry(k).or_default().push((l, w));
        }
        out
    }
}

/// Moves a judgement from the trusted actor to `truster`, multiplying in the edge weight.
pub fn apply_trust(j: &Judgement, rel: &TrustRelation, truster: &ActorId) -> Result<Judgement, TrustError> {
    let w = rel
        .weight(truster, &j.actor)
        .ok_or_else(|| TrustError::UnknownTrustEdge {
            relation: rel.name.clone(),
            truster: truster.to_string(),
            trusted: j.actor.to_string(),
        })?;
    Ok(Judgement {
        evidence: j.evidence.clone(),
        actor: truster.clone(),
        weight: weight_mul(&w, &j.weight),
        claim: j.claim.clone(),
    })
}

/// Product of the edge weights along `path`. A path of zero or one actors weighs 1.
pub fn path_weight(rel: &TrustRelation, path: &[ActorId]) -> Result<Weight, TrustError> {
    let mut acc = Weight::one();
    for pair in path.windows(2) {
        let w = rel.weight(&pair[0], &pair[1]).ok_or_else(|| TrustError::BrokenPath {
            from: pair[0].to_string(),
            to: pair[1].to_string(),
        })?;
        acc = weight_mul(&acc, &w);
    }
    Ok(acc)
}

/// The strongest simple path from `from` to `to`.
///
/// Ties go to the shorter path, then to the lexicographically smaller actor sequence.
pub fn best_trust(rel: &TrustRelation, from: &ActorId, to: &ActorId) -> Option<(Weight, Vec<ActorId>)> {
    if from == to {
        return Some((Weight::one(), vec![from.clone()]));
    }
    let succ = rel.successors();
    best_positive(&succ, from, to).or_else(|| shortest_path(&succ, from, to).map(|p| (Weight::zero(), p)))
}

type Label = (Weight, Vec<ActorId>);

fn better(a: &Label, b: &Label) -> bool {
    a.0 > b.0 || (a.0 == b.0 && (a.1.len() < b.1.len() || (a.1.len() == b.1.len() && a.1 < b.1)))
}

// Dijkstra over positive-weight edges. Multiplying by a positive weight preserves the
// label order strictly, so settled labels are final.
fn best_positive(succ: &BTreeMap<&ActorId, Vec<(&ActorId, &Weight)>>, from: &ActorId, to: &ActorId) -> Option<Label> {
    let mut settled: BTreeMap<ActorId, Label> = BTreeMap::new();
    let mut open: BTreeMap<ActorId, Label> = BTreeMap::new();
    open.insert(from.clone(), (Weight::one(), vec![from.clone()]));
    while let Some(next) = open
        .iter()
        .reduce(|a, b| if better(b.1, a.1) { b } else { a })
        .map(|(k, _)| k.clone())
    {
        let label = open.remove(&next).expect("selected from open set");
        if &next == to {
            return Some(label);
        }
        for (l, w) in succ.get(&next).into_iter().flatten() {
            if w.is_zero() || settled.contains_key(*l) || *l == &next {
                continue;
            }
            let mut path = label.1.clone();
            path.push((*l).clone());
            let cand = (weight_mul(&label.0, w), path);
            match open.get(*l) {
                Some(cur) if !better(&cand, cur) => {}
                _ => {
                    open.insert((*l).clone(), cand);
                }
            }
        }
        settled.insert(next, label);
    }
    None
}

// Lexicographically least among the shortest paths, used when only zero-weight routes exist.
fn shortest_path(
    succ: &BTreeMap<&ActorId, Vec<(&ActorId, &Weight)>>,
    from: &ActorId,
    to: &ActorId,
) -> Option<Vec<ActorId>> {
    let mut pred: BTreeMap<&ActorId, Vec<&ActorId>> = BTreeMap::new();
    for (k, outs) in succ {
        for (l, _) in outs {
            pred.entry(*l).or_default().push(*k);
        }
    }
    let mut dist: BTreeMap<&ActorId, usize> = BTreeMap::new();
    dist.insert(to, 0);
    let mut queue = VecDeque::from([to]);
    while let Some(n) = queue.pop_front() {
        let d = dist[n];
        for p in pred.get(n).into_iter().flatten() {
            if !dist.contains_key(*p) {
                dist.insert(*p, d + 1);
                queue.push_back(*p);
            }
        }
    }
    let mut d = *dist.get(from)?;
    let mut path = vec![from.clone()];
    let mut cur = from;
    while d > 0 {
        cur = succ
            .get(cur)
            .into_iter()
            .flatten()
            .map(|(l, _)| *l)
            .filter(|l| dist.get(*l) == Some(&(d - 1)))
            .min()
            .expect("BFS layer has a successor");
        path.push(cur.clone());
        d -= 1;
    }
    Some(path)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChainStar {
    StarBetter,
    ChainBetter,
    Equal,
}

/// Compares a direct star edge of weight `star` against a chain of edge weights.
pub fn compare_chain_star(chain: &[Weight], star: &Weight) -> ChainStar {
    let product = chain.iter().fold(Weight::one(), |acc, w| weight_mul(&acc, w));
    match star.cmp(&product) {
        std::cmp::Ordering::Greater => ChainStar::StarBetter,
        std::cmp::Ordering::Less => ChainStar::ChainBetter,
        std::cmp::Ordering::Equal => ChainStar::Equal,
    }
}

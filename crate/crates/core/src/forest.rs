//! The forest of ternary trees rooted at 1 and at the lone terms.
//!
//! Every node has the three children given by [`spawn_triplet`], and every
//! triplet member has exactly one parent, so following parents from any
//! member ends at a unique root.

use std::fmt;

use crate::error::{overflow, Error, Result};
use crate::sequence::{DyckNumber, MAX_RANGE};
use crate::triplets::{lone_terms_in_range, spawn_triplet, triplet_of, Triplet};

/// Position of a node inside its parent's triplet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Branch {
    Low = 0,
    Mid = 1,
    High = 2,
}

impl Branch {
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Branch> {
        match i {
            0 => Some(Branch::Low),
            1 => Some(Branch::Mid),
            2 => Some(Branch::High),
            _ => None,
        }
    }

    fn select(self, t: &Triplet) -> DyckNumber {
        t.members()[self.index()]
    }
}

/// How a member sits in the forest.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    /// The term 1, root of the base tree.
    BaseRoot,
    /// A lone term, root of its own tree.
    LoneRoot,
    /// A member of some triplet; it has a parent.
    TripletMember,
}

/// A node addressed by its root and the branches taken from it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TreePath {
    root: DyckNumber,
    steps: Vec<Branch>,
}

impl TreePath {
    pub fn new(root: DyckNumber, steps: Vec<Branch>) -> Result<Self> {
        if !is_root(root) {
            return Err(Error::NotARoot(root.get()));
        }
        Ok(TreePath { root, steps })
    }

    /// Path from the root of `d`'s tree down to `d`.
    pub fn locate(d: DyckNumber) -> TreePath {
        let chain = ancestry(d);
        let root = *chain.last().expect("ancestry is never empty");
        let steps = chain
            .iter()
            .take(chain.len() - 1)
            .rev()
            .map(|node| match node.get() & 7 {
                3 => Branch::Low,
                5 => Branch::Mid,
                _ => Branch::High,
            })
            .collect();
        TreePath { root, steps }
    }

    pub fn root(&self) -> DyckNumber {
        self.root
    }

    pub fn steps(&self) -> &[Branch] {
        &self.steps
    }

    pub fn depth(&self) -> usize {
        self.steps.len()
    }

    /// The addressed node.
    pub fn node(&self) -> Result<DyckNumber> {
        self.steps
            .iter()
            .try_fold(self.root, |at, step| Ok(step.select(&spawn_triplet(at)?)))
    }
}

impl fmt::Display for TreePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.root)?;
        for s in &self.steps {
            write!(f, "/{}", s.index())?;
        }
        Ok(())
    }
}

/// The three children of `d`.
pub fn children_of(d: DyckNumber) -> Result<Triplet> {
    spawn_triplet(d)
}

pub fn classify(d: DyckNumber) -> NodeKind {
    if d == DyckNumber::ONE {
        NodeKind::BaseRoot
    } else if triplet_of(d).is_none() {
        NodeKind::LoneRoot
    } else {
        NodeKind::TripletMember
    }
}

/// True for 1 and for lone terms.
pub fn is_root(d: DyckNumber) -> bool {
    classify(d) != NodeKind::TripletMember
}

/// All `3^depth` nodes at `depth` below `root`, ascending.
pub fn tree_level(root: DyckNumber, depth: u32) -> Result<Vec<DyckNumber>> {
    if !is_root(root) {
        return Err(Error::NotARoot(root.get()));
    }
    subtree_level(root, depth)
}

/// Descendants of any member `node` at `depth` below it, ascending.
pub fn subtree_level(node: DyckNumber, depth: u32) -> Result<Vec<DyckNumber>> {
    check_depth(node, depth)?;
    let mut level = vec![node];
    for _ in 0..depth {
        level = next_level(&level)?;
    }
    Ok(level)
}

// The largest node at depth k has bit-length bit_length(root) + 2k.
pub(crate) fn check_depth(root: DyckNumber, depth: u32) -> Result<()> {
    let bits = u64::from(root.bit_length()) + 2 * u64::from(depth);
    if bits > u64::from(MAX_RANGE) {
        return Err(overflow("tree_level"));
    }
    Ok(())
}

pub(crate) fn next_level(level: &[DyckNumber]) -> Result<Vec<DyckNumber>> {
    let capacity = level
        .len()
        .checked_mul(3)
        .ok_or_else(|| overflow("tree_level"))?;
    let mut next = Vec::with_capacity(capacity);
    for &node in level {
        next.extend(spawn_triplet(node)?.members());
    }
    Ok(next)
}

/// Lazy level-by-level walk of one tree.
#[derive(Debug, Clone)]
pub struct Levels {
    root: DyckNumber,
    depth: u32,
    current: Option<Vec<DyckNumber>>,
}

impl Iterator for Levels {
    type Item = Vec<DyckNumber>;

    fn next(&mut self) -> Option<Vec<DyckNumber>> {
        let current = self.current.take()?;
        self.depth += 1;
        if check_depth(self.root, self.depth).is_ok() {
            self.current = next_level(&current).ok();
        }
        Some(current)
    }
}

/// Levels 0, 1, 2, ... of the tree rooted at `root`; stops once a level
/// would overflow.
pub fn levels(root: DyckNumber) -> Result<Levels> {
    if !is_root(root) {
        return Err(Error::NotARoot(root.get()));
    }
    Ok(Levels {
        root,
        depth: 0,
        current: Some(vec![root]),
    })
}

/// Roots of trees starting in range `n`.
pub fn roots_in_range(n: u32) -> Result<Vec<DyckNumber>> {
    lone_terms_in_range(n)
}

/// `d` followed by its successive triplet parents, ending at a root.
pub fn ancestry(d: DyckNumber) -> Vec<DyckNumber> {
    let mut chain = vec![d];
    let mut at = d;
    while let Some(t) = triplet_of(at) {
        at = t.parent();
        chain.push(at);
    }
    chain
}

/// Root of the tree containing `d`.
pub fn root_of(d: DyckNumber) -> DyckNumber {
    *ancestry(d).last().expect("ancestry is never empty")
}

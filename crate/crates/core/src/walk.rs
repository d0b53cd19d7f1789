//! Oriented paths and cycles: a vertex order plus one direction flag per step.

use crate::error::WalkError;
use crate::graph::{distinct_in_range, Digraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn flipped(self) -> Self {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Direction::Forward => 'f',
            Direction::Backward => 'b',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'f' | 'F' => Some(Direction::Forward),
            'b' | 'B' => Some(Direction::Backward),
            _ => None,
        }
    }
}

/// Forward/backward counts of an oriented walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SigmaStats {
    pub forward: usize,
    pub backward: usize,
    pub max: usize,
    pub min: usize,
}

/// An oriented path (`closed == false`) or oriented cycle (`closed == true`).
///
/// Step `i` joins `vertices[i]` and `vertices[i + 1]`; a closed walk has one
/// more step joining the last vertex back to the first. A forward step
/// `u -> v` uses the arc `(u, v)`, a backward one uses `(v, u)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedWalk {
    vertices: Vec<usize>,
    closed: bool,
    directions: Vec<Direction>,
}

impl OrientedWalk {
    /// Checks every flag against `host`.
    pub fn new(
        host: &Digraph,
        vertices: Vec<usize>,
        closed: bool,
        directions: Vec<Direction>,
    ) -> Result<Self, WalkError> {
        let walk = Self {
            vertices,
            closed,
            directions,
        };
        walk.validate(host)?;
        Ok(walk)
    }

    /// Infers flags from `host`, choosing `prefer` when both arcs exist.
    pub fn from_vertices_preferring(
        host: &Digraph,
        vertices: Vec<usize>,
        closed: bool,
        prefer: Direction,
    ) -> Result<Self, WalkError> {
        if !distinct_in_range(&vertices, host.n()) {
            return Err(WalkError::BadVertices);
        }
        if closed && vertices.len() < 2 {
            return Err(WalkError::TooShortToClose);
        }
        let mut directions = Vec::with_capacity(vertices.len());
        for (u, v) in step_pairs(&vertices, closed) {
            let fwd = host.has_arc(u, v);
            let bwd = host.has_arc(v, u);
            let dir = match (fwd, bwd) {
                (true, true) => prefer,
                (true, false) => Direction::Forward,
                (false, true) => Direction::Backward,
                (false, false) => return Err(WalkError::NotAdjacent(u, v)),
            };
            directions.push(dir);
        }
        Ok(Self {
            vertices,
            closed,
            directions,
        })
    }

    /// Infers flags from `host`, preferring forward on digons.
    pub fn from_vertices(host: &Digraph, vertices: Vec<usize>, closed: bool) -> Result<Self, WalkError> {
        Self::from_vertices_preferring(host, vertices, closed, Direction::Forward)
    }

    pub fn validate(&self, host: &Digraph) -> Result<(), WalkError> {
        if !distinct_in_range(&self.vertices, host.n()) {
            return Err(WalkError::BadVertices);
        }
        if self.closed && self.vertices.len() < 2 {
            return Err(WalkError::TooShortToClose);
        }
        let expected = self.step_count();
        if self.directions.len() != expected {
            return Err(WalkError::StepCountMismatch {
                expected,
                got: self.directions.len(),
            });
        }
        for (step, ((u, v), &dir)) in step_pairs(&self.vertices, self.closed)
            .zip(&self.directions)
            .enumerate()
        {
            let ok = match dir {
                Direction::Forward => host.has_arc(u, v),
                Direction::Backward => host.has_arc(v, u),
            };
            if !ok {
                return Err(WalkError::MissingArc {
                    step,
                    from: u,
                    to: v,
                    direction: dir,
                });
            }
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn directions(&self) -> &[Direction] {
        &self.directions
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn step_count(&self) -> usize {
        match (self.closed, self.vertices.len()) {
            (_, 0) => 0,
            (true, k) => k,
            (false, k) => k - 1,
        }
    }

    /// The `(from, to)` pair of every step in traversal order.
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        step_pairs(&self.vertices, self.closed)
    }

    pub fn sigma_stats(&self) -> SigmaStats {
        let forward = self
            .directions
            .iter()
            .filter(|&&d| d == Direction::Forward)
            .count();
        let backward = self.directions.len() - forward;
        SigmaStats {
            forward,
            backward,
            max: forward.max(backward),
            min: forward.min(backward),
        }
    }

    pub fn sigma_max(&self) -> usize {
        self.sigma_stats().max
    }

    /// The same walk traversed the other way; forward and backward counts swap.
    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        let k = self.directions.len();
        let directions = if self.closed {
            // new step j joins old vertices n-1-j and n-2-j: old step n-2-j, flipped
            (0..k)
                .map(|j| self.directions[(k as isize - 2 - j as isize).rem_euclid(k as isize) as usize].flipped())
                .collect()
        } else {
            self.directions.iter().rev().map(|d| d.flipped()).collect()
        };
        Self {
            vertices,
            closed: self.closed,
            directions,
        }
    }

    /// Flags as a string of `f`/`b`, one character per step.
    pub fn direction_string(&self) -> String {
        self.directions.iter().map(|d| d.as_char()).collect()
    }

    /// True when the walk visits every vertex of `host`.
    pub fn is_spanning(&self, host: &Digraph) -> bool {
        self.vertices.len() == host.n()
    }
}

fn step_pairs(vertices: &[usize], closed: bool) -> impl Iterator<Item = (usize, usize)> + '_ {
    let k = vertices.len();
    let steps = match (closed, k) {
        (_, 0) => 0,
        (true, k) => k,
        (false, k) => k - 1,
    };
    (0..steps).map(move |i| (vertices[i], vertices[(i + 1) % k]))
}

/// Free-function form of [`OrientedWalk::sigma_stats`].
pub fn sigma_stats(walk: &OrientedWalk) -> SigmaStats {
    walk.sigma_stats()
}

/// Free-function form of [`OrientedWalk::reversed`].
pub fn reverse_walk(walk: &OrientedWalk) -> OrientedWalk {
    walk.reversed()
}

//! Finite acyclic quivers, their path algebras and representations.
//!
//! Paths are stored in traversal order: `arrows[0]` leaves `start`, the last
//! arrow enters `end`. When a path is *written* (see [`Quiver::path_label`]) the
//! leftmost arrow acts last, so the path `a` then `c` prints as `c.a`.
//!
//! The module is covariant: a representation assigns to an arrow `u -> w` a
//! matrix of shape `dims[w] × dims[u]`, the projective `P(v)` has basis the
//! paths starting at `v`, and the injective `I(v)` is dual to the paths ending
//! at `v`. With these conventions `Hom(P(v), M) = M_v` and `Hom(M, I(v)) = M_v^*`.

mod proj;
mod rep;

pub use proj::ProjMap;
pub use proj::{nakayama, nakayama_map, proj_rep};
pub use rep::{
    direct_sum, ext1, hom_module, injective, is_iso_module, projective, projective_presentation, simple, Ext1,
    IsoVerdict, Presentation, Rep, RepMap,
};

use std::collections::HashMap;

use thiserror::Error;

use crate::exactlin::LinError;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum QuiverError {
    #[error("duplicate vertex label {0:?}")]
    DuplicateVertex(String),
    #[error("duplicate arrow name {0:?}")]
    DuplicateArrow(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("vertex index {0} out of range")]
    VertexIndex(usize),
    #[error("quiver has an oriented cycle through vertex {0:?}")]
    Cycle(String),
    #[error("representation does not fit the quiver: {0}")]
    Shape(String),
    #[error("representations over different quivers")]
    QuiverMismatch,
    #[error("map is not a morphism of representations: {0}")]
    NotIntertwining(String),
    #[error(transparent)]
    Lin(#[from] LinError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A path in traversal order. Trivial paths have no arrows and `start == end`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub start: usize,
    pub end: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    // `is_trivial` is the emptiness test
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.arrows.len()
    }
}

/// A finite quiver without oriented cycles, together with its path basis.
#[derive(Debug, Clone)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    paths: Vec<Path>,
    /// `between[u][v]`: indices of paths from `u` to `v`.
    between: Vec<Vec<Vec<usize>>>,
    /// position of each path inside its `between` list
    slot: Vec<usize>,
    /// `concat[p][q]`: the path `p` followed by `q`, when composable
    concat: Vec<Vec<Option<usize>>>,
}

impl PartialEq for Quiver {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.arrows == other.arrows
    }
}

impl Eq for Quiver {}

impl Quiver {
    /// Builds a quiver from vertex labels and `(name, source, target)` arrows
    /// given by label.
    pub fn new<V, A>(vertices: V, arrows: A) -> Result<Self, QuiverError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = (String, String, String)>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(QuiverError::DuplicateVertex(v.clone()));
            }
        }
        let mut names = HashMap::new();
        let mut out = Vec::new();
        for (name, s, t) in arrows {
            if names.insert(name.clone(), ()).is_some() {
                return Err(QuiverError::DuplicateArrow(name));
            }
            let source = *index.get(&s).ok_or(QuiverError::UnknownVertex(s))?;
            let target = *index.get(&t).ok_or(QuiverError::UnknownVertex(t))?;
            out.push(Arrow { name, source, target });
        }
        Self::from_parts(vertices, out)
    }

    /// Convenience constructor with vertices `1..=n` and arrows given by
    /// zero-based vertex indices.
    pub fn from_indices(n: usize, arrows: &[(&str, usize, usize)]) -> Result<Self, QuiverError> {
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let arrows = arrows
            .iter()
            .map(|&(name, s, t)| {
                let lab = |i: usize| labels.get(i).cloned().ok_or(QuiverError::VertexIndex(i));
                Ok((name.to_string(), lab(s)?, lab(t)?))
            })
            .collect::<Result<Vec<_>, QuiverError>>()?;
        Self::new(labels.clone(), arrows)
    }

    fn from_parts(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self, QuiverError> {
        let n = vertices.len();
        // Kahn's algorithm; leftover vertices lie on a cycle.
        let mut indeg = vec![0usize; n];
        for a in &arrows {
            indeg[a.target] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for a in arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    stack.push(a.target);
                }
            }
        }
        if seen < n {
            let v = (0..n).find(|&v| indeg[v] > 0).expect("cycle vertex");
            return Err(QuiverError::Cycle(vertices[v].clone()));
        }

        let mut paths: Vec<Path> = (0..n)
            .map(|v| Path {
                start: v,
                end: v,
                arrows: vec![],
            })
            .collect();
        let mut frontier: Vec<usize> = (0..n).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &p in &frontier {
                for (ai, a) in arrows.iter().enumerate() {
                    if a.source == paths[p].end {
                        let mut arr = paths[p].arrows.clone();
                        arr.push(ai);
                        next.push(paths.len());
                        paths.push(Path {
                            start: paths[p].start,
                            end: a.target,
                            arrows: arr,
                        });
                    }
                }
            }
            frontier = next;
        }

        let mut between = vec![vec![Vec::new(); n]; n];
        let mut slot = vec![0; paths.len()];
        for (i, p) in paths.iter().enumerate() {
            slot[i] = between[p.start][p.end].len();
            between[p.start][p.end].push(i);
        }
        let lookup: HashMap<(usize, Vec<usize>), usize> = paths
            .iter()
            .enumerate()
            .map(|(i, p)| ((p.start, p.arrows.clone()), i))
            .collect();
        let concat = paths
            .iter()
            .map(|p| {
                paths
                    .iter()
                    .map(|q| {
                        (p.end == q.start).then(|| {
                            let mut arr = p.arrows.clone();
                            arr.extend(&q.arrows);
                            lookup[&(p.start, arr)]
                        })
                    })
                    .collect()
            })
            .collect();
        Ok(Quiver {
            vertices,
            arrows,
            paths,
            between,
            slot,
            concat,
        })
    }

    /// The quiver with every arrow reversed (same names and vertex order).
    pub fn opposite(&self) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow {
                name: a.name.clone(),
                source: a.target,
                target: a.source,
            })
            .collect();
        Self::from_parts(self.vertices.clone(), arrows).expect("opposite of acyclic is acyclic")
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_index(&self, label: &str) -> Result<usize, QuiverError> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| QuiverError::UnknownVertex(label.to_string()))
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), QuiverError> {
        if v < self.vertices.len() {
            Ok(())
        } else {
            Err(QuiverError::VertexIndex(v))
        }
    }

    /// The basis of the path algebra: every path, trivial ones first.
    pub fn path_basis(&self) -> &[Path] {
        &self.paths
    }

    pub fn path(&self, p: usize) -> &Path {
        &self.paths[p]
    }

    /// Paths from `u` to `v`.
    pub fn paths_between(&self, u: usize, v: usize) -> &[usize] {
        &self.between[u][v]
    }

    pub fn num_paths(&self, u: usize, v: usize) -> usize {
        self.between[u][v].len()
    }

    /// Position of path `p` inside `paths_between(p.start, p.end)`.
    pub fn slot(&self, p: usize) -> usize {
        self.slot[p]
    }

    /// `p` followed by `q`.
    pub fn concat(&self, p: usize, q: usize) -> Option<usize> {
        self.concat[p][q]
    }

    pub fn trivial_path(&self, v: usize) -> usize {
        // trivial paths are created first, in vertex order
        v
    }

    /// The single-arrow path for arrow `a`.
    pub fn arrow_path(&self, a: usize) -> usize {
        let arr = &self.arrows[a];
        *self.between[arr.source][arr.target]
            .iter()
            .find(|&&p| self.paths[p].arrows == [a])
            .expect("arrow path exists")
    }

    /// Written form of a path, leftmost arrow acting last (`c.a` is `a` then
    /// `c`); trivial paths print as `e_<vertex>`.
    pub fn path_label(&self, p: usize) -> String {
        let path = &self.paths[p];
        if path.is_trivial() {
            return format!("e_{}", self.vertices[path.start]);
        }
        path.arrows
            .iter()
            .rev()
            .map(|&a| self.arrows[a].name.as_str())
            .collect::<Vec<_>>()
            .join(".")
    }

    /// Euler form on dimension vectors:
    /// `sum_v x_v y_v - sum_{a: u -> w} x_u y_w`.
    pub fn euler_form(&self, x: &[i64], y: &[i64]) -> i64 {
        let diag: i64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
        let off: i64 = self.arrows.iter().map(|a| x[a.source] * y[a.target]).sum();
        diag - off
    }
}

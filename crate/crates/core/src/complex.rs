//! Finite simplicial complexes given by their facets.
//!
//! Two degenerate complexes must be kept apart: the *void* complex has no
//! faces at all, while the *irrelevant* complex `{∅}` has exactly the empty
//! face. They differ in reduced homology: `H̃_{-1}({∅}) = K` but
//! `H̃_{-1}(void) = 0`.

use std::fmt;

use crate::varset::VarSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComplexKind {
    /// No faces.
    Void,
    /// Only the empty face.
    Irrelevant,
    /// At least one nonempty face.
    Proper,
}

/// A simplicial complex on the ground set `{0, .., ground-1}`, stored as a
/// sorted antichain of facets. The irrelevant complex has the single facet `∅`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ground: usize,
    facets: Vec<VarSet>,
}

impl SimplicialComplex {
    /// The complex generated by `sets`; non-maximal sets are dropped.
    pub fn from_facets<I: IntoIterator<Item = VarSet>>(ground: usize, sets: I) -> Self {
        let mut sets: Vec<VarSet> = sets.into_iter().collect();
        sets.sort_by_key(|s| std::cmp::Reverse(s.len()));
        let mut facets: Vec<VarSet> = Vec::with_capacity(sets.len());
        for s in sets {
            if !facets.iter().any(|f| s.is_subset(*f)) {
                facets.push(s);
            }
        }
        facets.sort();
        SimplicialComplex { ground, facets }
    }

    pub fn void(ground: usize) -> Self {
        SimplicialComplex {
            ground,
            facets: Vec::new(),
        }
    }

    pub fn irrelevant(ground: usize) -> Self {
        SimplicialComplex {
            ground,
            facets: vec![VarSet::EMPTY],
        }
    }

    pub fn simplex(ground: usize, face: VarSet) -> Self {
        SimplicialComplex {
            ground,
            facets: vec![face],
        }
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn facets(&self) -> &[VarSet] {
        &self.facets
    }

    pub fn kind(&self) -> ComplexKind {
        match self.facets.as_slice() {
            [] => ComplexKind::Void,
            [f] if f.is_empty() => ComplexKind::Irrelevant,
            _ => ComplexKind::Proper,
        }
    }

    /// `None` for the void complex, `Some(-1)` for `{∅}`.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn contains_face(&self, face: VarSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// Every face, in increasing size and lexicographic order within a size.
    pub fn faces(&self) -> Vec<VarSet> {
        let mut out: Vec<VarSet> = self.facets.iter().flat_map(|f| f.subsets()).collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        out.dedup();
        out
    }

    /// Faces of dimension `dim` (`dim = -1` is the empty face).
    pub fn faces_of_dim(&self, dim: isize) -> Vec<VarSet> {
        let size = dim + 1;
        if size < 0 {
            return Vec::new();
        }
        self.faces()
            .into_iter()
            .filter(|f| f.len() as isize == size)
            .collect()
    }

    /// Union of all faces.
    pub fn vertices(&self) -> VarSet {
        self.facets.iter().fold(VarSet::EMPTY, |a, f| a.union(*f))
    }

    /// `Link(F) = { G \ F : F ⊆ G ∈ Δ }`.
    pub fn link(&self, face: VarSet) -> Self {
        Self::from_facets(
            self.ground,
            self.facets
                .iter()
                .filter(|f| face.is_subset(**f))
                .map(|f| f.difference(face)),
        )
    }

    /// The pure `i`-skeleton: facets are the faces with `i + 1` vertices.
    pub fn pure_skeleton(&self, i: usize) -> Self {
        Self::from_facets(
            self.ground,
            self.faces().into_iter().filter(|f| f.len() == i + 1),
        )
    }

    /// Adds the vertex `v` as a new facet.
    pub fn with_vertex(&self, v: usize) -> Self {
        let ground = self.ground.max(v + 1);
        Self::from_facets(
            ground,
            self.facets.iter().copied().chain([VarSet::singleton(v)]),
        )
    }

    /// Number of connected components of a non-void complex; the complex
    /// `{∅}` has none.
    pub fn components(&self) -> usize {
        let verts: Vec<usize> = self.vertices().to_vec();
        let mut comp: Vec<usize> = (0..self.ground).collect();
        fn find(c: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while c[x] != x {
                c[x] = c[c[x]];
                x = c[x];
            }
            x
        }
        for f in &self.facets {
            let mut it = f.iter();
            if let Some(first) = it.next() {
                for v in it {
                    let (a, b) = (find(&mut comp, first), find(&mut comp, v));
                    comp[a] = b;
                }
            }
        }
        let mut roots: Vec<usize> = verts.iter().map(|&v| find(&mut comp, v)).collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len()
    }

    /// Whether whenever `F, G` are faces with `|F| < |G|` some `x ∈ G \ F`
    /// has `F ∪ {x}` a face.
    pub fn is_matroid(&self) -> bool {
        let faces = self.faces();
        faces.iter().all(|&f| {
            faces.iter().filter(|g| g.len() > f.len()).all(|&g| {
                g.difference(f)
                    .iter()
                    .any(|x| self.contains_face(f.insert(x)))
            })
        })
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `void`, `{∅}`, or facets with 1-based labels, e.g. `<{1,2},{3}>`.
impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            ComplexKind::Void => write!(f, "void"),
            ComplexKind::Irrelevant => write!(f, "{{∅}}"),
            ComplexKind::Proper => {
                write!(f, "<")?;
                for (k, s) in self.facets.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{s}")?;
                }
                write!(f, ">")
            }
        }
    }
}

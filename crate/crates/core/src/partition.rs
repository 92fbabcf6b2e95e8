//! A labelled split of a finite region into connected components.

use serde::Serialize;

/// The components of a finite region under some adjacency, listed in
/// canonical order (ascending lexicographic minimum point).
///
/// When the partition describes the complement of a curve inside a
/// bounded window, the component that touches the window border stands
/// for the single unbounded component of the full plane and is flagged
/// by `outer_index`; its point set is window-relative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentPartition<S> {
    components: Vec<S>,
    outer_index: Option<usize>,
}

impl<S> ComponentPartition<S> {
    pub(crate) fn new(components: Vec<S>, outer_index: Option<usize>) -> Self {
        debug_assert!(outer_index.is_none_or(|i| i < components.len()));
        ComponentPartition {
            components,
            outer_index,
        }
    }

    /// Components in canonical order.
    pub fn components(&self) -> &[S] {
        &self.components
    }

    /// Number of components.
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Index of the window-relative unbounded component, if this
    /// partition came from a complement computation.
    pub fn outer_index(&self) -> Option<usize> {
        self.outer_index
    }

    /// The window-relative unbounded component, if flagged.
    pub fn outer(&self) -> Option<&S> {
        self.outer_index.map(|i| &self.components[i])
    }

    /// Components other than the flagged outer one.
    pub fn inner_components(&self) -> impl Iterator<Item = &S> {
        self.components
            .iter()
            .enumerate()
            .filter(move |(i, _)| Some(*i) != self.outer_index)
            .map(|(_, c)| c)
    }

    pub fn into_components(self) -> Vec<S> {
        self.components
    }
}

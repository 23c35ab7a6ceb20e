use crate::vertex_set::VertexSet;

/// One value per subset of `0..n`, indexed by the subset's bitmask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetTable<T> {
    n: usize,
    values: Vec<T>,
}

impl<T: Copy> SubsetTable<T> {
    pub(crate) fn new(n: usize, values: Vec<T>) -> Self {
        debug_assert_eq!(values.len(), 1 << n);
        Self { n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get_mask(&self, mask: u64) -> T {
        self.values[mask as usize]
    }

    pub fn get(&self, subset: &VertexSet) -> T {
        self.get_mask(subset.to_mask().expect("subset of a table-sized graph"))
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }
}

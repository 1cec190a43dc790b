use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::topo::Space;

/// An ordered family with unique tags. The tags name the coproduct
/// components built from the family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaggedFamily<T> {
    entries: Vec<(String, T)>,
}

impl<T> TaggedFamily<T> {
    /// Tags `0, 1, ...` in order.
    pub fn indexed(items: impl IntoIterator<Item = T>) -> Self {
        TaggedFamily { entries: items.into_iter().enumerate().map(|(i, t)| (i.to_string(), t)).collect() }
    }

    pub fn tagged(entries: Vec<(String, T)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for (tag, _) in &entries {
            if !seen.insert(tag.as_str()) {
                return Err(Error::DuplicateTag(tag.clone()));
            }
        }
        Ok(TaggedFamily { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &T)> {
        self.entries.iter().map(|(t, x)| (t.as_str(), x))
    }

    pub fn items(&self) -> impl Iterator<Item = &T> {
        self.entries.iter().map(|(_, x)| x)
    }

    pub fn get(&self, i: usize) -> &T {
        &self.entries[i].1
    }

    pub(crate) fn map_items(&self, f: impl Fn(&T) -> Arc<Space>) -> Vec<(String, Arc<Space>)> {
        self.entries.iter().map(|(t, x)| (t.clone(), f(x))).collect()
    }

    pub(crate) fn map_items_tagged<U>(&self, f: impl Fn(&T) -> U) -> TaggedFamily<U> {
        TaggedFamily { entries: self.entries.iter().map(|(t, x)| (t.clone(), f(x))).collect() }
    }

    /// Same tags, new items.
    pub(crate) fn with_items<U>(&self, items: Vec<U>) -> TaggedFamily<U> {
        debug_assert_eq!(items.len(), self.entries.len());
        TaggedFamily { entries: self.entries.iter().map(|(t, _)| t.clone()).zip(items).collect() }
    }
}

impl<T> From<Vec<T>> for TaggedFamily<T> {
    fn from(items: Vec<T>) -> Self {
        TaggedFamily::indexed(items)
    }
}

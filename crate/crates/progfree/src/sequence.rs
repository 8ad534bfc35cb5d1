//! A finite sequence of pairwise-distinct integers (a permutation prefix)
//! with constant-time value-to-position lookup.

use std::collections::HashMap;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("duplicate value {0} at positions {1} and {2}")]
    DuplicateValue(i64, usize, usize),
}

/// Max slot count for the dense value index (64 MiB of u32 slots).
const DENSE_SLOT_LIMIT: i128 = 1 << 24;

#[derive(Debug)]
enum ValueIndex {
    /// Used when values occupy a narrow range: offset table into positions.
    Dense {
        min: i64,
        slots: Vec<u32>,
    },
    Sparse(HashMap<i64, u32>),
}

/// An immutable permutation prefix. Positions are 0-based.
#[derive(Debug)]
pub struct SequenceView {
    values: Vec<i64>,
    index: ValueIndex,
}

impl SequenceView {
    pub fn new(values: Vec<i64>) -> Result<Self, SequenceError> {
        let index = build_index(&values)?;
        Ok(SequenceView { values, index })
    }

    pub fn from_slice(values: &[i64]) -> Result<Self, SequenceError> {
        Self::new(values.to_vec())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn get(&self, position: usize) -> Option<i64> {
        self.values.get(position).copied()
    }

    /// Position of `value`, if the sequence contains it.
    pub fn position_of(&self, value: i64) -> Option<usize> {
        match &self.index {
            ValueIndex::Dense { min, slots } => {
                let off = (value as i128) - (*min as i128);
                if off < 0 || off >= slots.len() as i128 {
                    return None;
                }
                let slot = slots[off as usize];
                (slot != u32::MAX).then_some(slot as usize)
            }
            ValueIndex::Sparse(map) => map.get(&value).map(|&p| p as usize),
        }
    }
}

fn build_index(values: &[i64]) -> Result<ValueIndex, SequenceError> {
    if values.is_empty() {
        return Ok(ValueIndex::Sparse(HashMap::new()));
    }
    let min = *values.iter().min().unwrap();
    let max = *values.iter().max().unwrap();
    let span = (max as i128) - (min as i128) + 1;
    let budget = ((values.len() as i128) * 16).clamp(1024, DENSE_SLOT_LIMIT);
    if span <= budget {
        let mut slots = vec![u32::MAX; span as usize];
        for (pos, &v) in values.iter().enumerate() {
            let off = (v - min) as usize;
            if slots[off] != u32::MAX {
                return Err(SequenceError::DuplicateValue(v, slots[off] as usize, pos));
            }
            slots[off] = pos as u32;
        }
        Ok(ValueIndex::Dense { min, slots })
    } else {
        let mut map = HashMap::with_capacity(values.len());
        for (pos, &v) in values.iter().enumerate() {
            if let Some(prev) = map.insert(v, pos as u32) {
                return Err(SequenceError::DuplicateValue(v, prev as usize, pos));
            }
        }
        Ok(ValueIndex::Sparse(map))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_round_trip() {
        let seq = SequenceView::new(vec![4, -1, 7, 0]).unwrap();
        for (pos, &v) in seq.values().iter().enumerate() {
            assert_eq!(seq.position_of(v), Some(pos));
        }
        assert_eq!(seq.position_of(5), None);
        assert_eq!(seq.get(2), Some(7));
        assert_eq!(seq.get(4), None);
    }

    #[test]
    fn duplicates_rejected() {
        let err = SequenceView::new(vec![1, 2, 1]).unwrap_err();
        assert_eq!(err, SequenceError::DuplicateValue(1, 0, 2));
    }

    #[test]
    fn sparse_range_still_works() {
        // Wide value spread forces the hash index.
        let seq = SequenceView::new(vec![i64::MIN / 2, 0, i64::MAX / 2]).unwrap();
        assert_eq!(seq.position_of(0), Some(1));
        assert_eq!(seq.position_of(i64::MAX / 2), Some(2));
        assert_eq!(seq.position_of(1), None);
    }

    #[test]
    fn empty_sequence_allowed() {
        let seq = SequenceView::new(vec![]).unwrap();
        assert!(seq.is_empty());
        assert_eq!(seq.position_of(0), None);
    }
}
